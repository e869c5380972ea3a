//! Sparse multivariate polynomials over an exact ring.

use super::cyc::Cyc;
use super::ring::{fmt_rational, QAlgebra, Rational, Ring};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector; trailing zeros are always trimmed so that keys are canonical.
pub type Monomial = Vec<u16>;

fn trim_mono(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u16], b: &[u16]) -> Monomial {
    let n = a.len().max(b.len());
    let mut out = vec![0u16; n];
    for (i, &e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, &e) in b.iter().enumerate() {
        out[i] += e;
    }
    out
}

/// Multivariate polynomial `Σ c_m · x^m` with no zero coefficients stored.
#[derive(Clone, PartialEq)]
pub struct Poly<K: Ring> {
    terms: BTreeMap<Monomial, K>,
}

/// Polynomial with integer coefficients.
pub type PolyZ = Poly<BigInt>;
/// Polynomial with rational coefficients.
pub type PolyQ = Poly<Rational>;
/// Polynomial with cyclotomic coefficients in the weight variables (and optionally `x`).
pub type PolyW = Poly<Cyc>;

impl<K: Ring> Poly<K> {
    pub fn zero_poly() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: K) -> Self {
        let mut p = Self::zero_poly();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The variable with index `i` (0-based).
    pub fn var(i: usize) -> Self {
        let mut m = vec![0u16; i + 1];
        m[i] = 1;
        Self::monomial(m, K::one())
    }

    pub fn monomial(m: Monomial, c: K) -> Self {
        let mut p = Self::zero_poly();
        if !c.is_zero() {
            p.terms.insert(trim_mono(m), c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &[u16]) -> K {
        let key = trim_mono(m.to_vec());
        self.terms.get(&key).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &K) {
        if c.is_zero() {
            return;
        }
        let key = trim_mono(m);
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|&e| e as u32).sum()).max()
    }

    /// Number of variables actually appearing.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn map_coeffs<L: Ring, F: Fn(&K) -> L>(&self, f: F) -> Poly<L> {
        let mut out = Poly::<L>::zero_poly();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero_poly();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &v.mul(c));
        }
        out
    }

    /// Evaluates at a point; missing coordinates are treated as zero.
    pub fn eval(&self, point: &[K]) -> K {
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(K::zero);
                    t = t.mul(&x.pow(e as u32));
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Substitutes each variable `i` by the polynomial `subs[i]`.
    pub fn substitute(&self, subs: &[Poly<K>]) -> Poly<K> {
        let mut acc = Self::zero_poly();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = Ring::mul(&t, &Ring::pow(&subs[i], e as u32));
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Splits the polynomial by the exponent of variable `v`: entry `k` is the coefficient of `v^k`.
    pub fn coefficients_in(&self, v: usize) -> Vec<Poly<K>> {
        let mut out: Vec<Poly<K>> = Vec::new();
        for (m, c) in &self.terms {
            let k = m.get(v).copied().unwrap_or(0) as usize;
            if out.len() <= k {
                out.resize(k + 1, Self::zero_poly());
            }
            let mut m2 = m.clone();
            if v < m2.len() {
                m2[v] = 0;
            }
            out[k].add_term(m2, c);
        }
        out
    }

    /// Whether each coefficient satisfies a predicate.
    pub fn all_coeffs<F: Fn(&K) -> bool>(&self, f: F) -> bool {
        self.terms.values().all(f)
    }
}

impl<K: Ring> Ring for Poly<K> {
    fn zero() -> Self {
        Self::zero_poly()
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero_poly();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mono_mul(ma, mb), &ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(K::from_i64(v))
    }
}

impl<K: QAlgebra> QAlgebra for Poly<K> {
    fn scale_q(&self, q: &Rational) -> Self {
        let mut out = Self::zero_poly();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.scale_q(q));
        }
        out
    }
}

/// Renders a monomial key as `"e0,e1,…"`.
pub fn mono_key(m: &[u16]) -> String {
    m.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

/// Scalars that can be written into a JSON map value.
pub trait ScalarString {
    fn scalar_string(&self) -> String;
}
impl ScalarString for BigInt {
    fn scalar_string(&self) -> String {
        self.to_string()
    }
}
impl ScalarString for Rational {
    fn scalar_string(&self) -> String {
        fmt_rational(self)
    }
}
impl ScalarString for Cyc {
    fn scalar_string(&self) -> String {
        self.to_string()
    }
}

impl<K: Ring + ScalarString> Poly<K> {
    /// JSON object `{ "e0,e1,…": "coefficient" }`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (m, c) in &self.terms {
            map.insert(mono_key(m), serde_json::Value::String(c.scalar_string()));
        }
        serde_json::Value::Object(map)
    }

    /// Human-readable form using the given variable names.
    pub fn pretty(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("v{}", i + 1));
                match e {
                    0 => {}
                    1 => vars.push(name),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            let cs = c.scalar_string();
            let term = if vars.is_empty() {
                cs
            } else if cs == "1" {
                vars.join("*")
            } else if cs == "-1" {
                format!("-{}", vars.join("*"))
            } else if cs.contains('+') || cs[1..].contains('-') {
                format!("({cs})*{}", vars.join("*"))
            } else {
                format!("{cs}*{}", vars.join("*"))
            };
            parts.push(term);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if p.starts_with('-') {
                s.push_str(p);
            } else {
                s.push('+');
                s.push_str(p);
            }
        }
        s
    }
}

impl<K: Ring> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for (m, c) in &self.terms {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "[{}]: {:?}", mono_key(m), c)?;
        }
        write!(f, "}}")
    }
}

/// Default variable names `w1, w2, …`.
pub fn weight_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("w{}", i + 1)).collect()
}

/// Integer to rational coefficient conversion.
pub fn z_to_q(p: &PolyZ) -> PolyQ {
    p.map_coeffs(|c| Rational::from_integer(c.clone()))
}

/// Rational to cyclotomic coefficient conversion.
pub fn q_to_w(p: &PolyQ) -> PolyW {
    p.map_coeffs(|c| Cyc::from_rational(c.clone()))
}

/// Cyclotomic to rational conversion; `None` if some coefficient is not rational.
pub fn w_to_q(p: &PolyW) -> Option<PolyQ> {
    let mut out = PolyQ::zero_poly();
    for (m, c) in p.terms() {
        out.add_term(m.clone(), &c.as_rational()?);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ring::{rat, rint};

    #[test]
    fn ring_ops() {
        let x = PolyQ::var(0);
        let y = PolyQ::var(1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[1, 1]), rint(2));
        assert_eq!(sq.coeff(&[2]), rint(1));
        assert_eq!(sq.sub(&sq), PolyQ::zero_poly());
        assert_eq!(sq.eval(&[rint(1), rat(1, 2)]), rat(9, 4));
    }

    #[test]
    fn split_by_variable() {
        let x = PolyQ::var(0);
        let t = PolyQ::var(2);
        let p = x.mul(&t).add(&t.mul(&t)).add(&PolyQ::one());
        let parts = p.coefficients_in(2);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[1], x);
        assert_eq!(parts[0], PolyQ::one());
    }

    #[test]
    fn json_shape() {
        let p = PolyQ::var(1).scale(&rat(3, 2));
        let j = p.to_json();
        assert_eq!(j["0,1"], "3/2");
    }
}
