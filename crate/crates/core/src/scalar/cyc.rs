//! Exact arithmetic in cyclotomic fields `Q(ζ_r)`.
//!
//! A value of order `r` is stored as its coefficient vector in the power basis
//! `1, ζ_r, …, ζ_r^{φ(r)−1}`, i.e. reduced modulo the cyclotomic polynomial `Φ_r`.
//! This representation is canonical for a fixed order. Values of different orders
//! are compared and combined after embedding both into `Q(ζ_lcm)`.

use super::ring::{fmt_rational, parse_rational, Field, QAlgebra, Rational, Ring};
use crate::CoxError;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Integer coefficients of `Φ_r`, lowest degree first.
pub fn cyclotomic_poly(r: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&r) {
        return p.clone();
    }
    assert!(r >= 1, "cyclotomic order must be positive");
    // x^r - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in 1..r {
        if r.is_multiple_of(d) {
            let den = cyclotomic_poly(d);
            num = exact_int_div(&num, &den);
        }
    }
    cache.lock().unwrap().insert(r, num.clone());
    num
}

fn exact_int_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

/// Euler's totient.
pub fn totient(r: u32) -> usize {
    cyclotomic_poly(r).len() - 1
}

/// Exact element of `Q(ζ_r)`.
#[derive(Clone)]
pub struct Cyc {
    order: u32,
    coeffs: Vec<Rational>,
}

fn reduce_mod_phi(mut c: Vec<Rational>, r: u32) -> Vec<Rational> {
    let phi = cyclotomic_poly(r);
    let d = phi.len() - 1;
    for i in (d..c.len()).rev() {
        let lead = std::mem::replace(&mut c[i], Rational::zero());
        if lead.is_zero() {
            continue;
        }
        for (j, &pj) in phi.iter().enumerate().take(d) {
            if pj != 0 {
                c[i - d + j] -= &lead * BigInt::from(pj);
            }
        }
    }
    c.truncate(d);
    c.resize(d, Rational::zero());
    c
}

impl Cyc {
    fn normalize_order(r: u32) -> u32 {
        if r == 2 {
            1
        } else {
            r
        }
    }

    /// Builds `Σ c_k ζ_r^k` from arbitrary exponent coefficients.
    pub fn from_exponent_coeffs(r: u32, c: &[Rational]) -> Self {
        let r0 = r;
        let r = Self::normalize_order(r0);
        let mut v = vec![Rational::zero(); (r0 as usize).max(1)];
        for (k, ck) in c.iter().enumerate() {
            let k = k % (r0 as usize);
            if r0 == 2 && k == 1 {
                v[0] -= ck;
            } else {
                v[k] += ck;
            }
        }
        if r0 == 2 {
            v.truncate(1);
        }
        Cyc {
            order: r,
            coeffs: reduce_mod_phi(v, r),
        }
    }

    /// `ζ_r^k`.
    pub fn zeta_pow(r: u32, k: i64) -> Self {
        let r = r.max(1);
        let k = k.rem_euclid(r as i64) as usize;
        let mut c = vec![Rational::zero(); r as usize];
        c[k] = Rational::one();
        Self::from_exponent_coeffs(r, &c)
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyc {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the canonical power basis of the current order.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-expresses the value inside `Q(ζ_target)`; `target` must be a multiple of the order.
    pub fn embed(&self, target: u32) -> Self {
        let target = Self::normalize_order(target);
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        let step = (target / self.order) as usize;
        let mut v = vec![Rational::zero(); target as usize];
        for (k, ck) in self.coeffs.iter().enumerate() {
            v[(k * step) % target as usize] += ck;
        }
        Cyc {
            order: target,
            coeffs: reduce_mod_phi(v, target),
        }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = a.order.lcm(&b.order);
        (a.embed(l), b.embed(l))
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let r = self.order as usize;
        if r == 1 {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); r];
        for (k, ck) in self.coeffs.iter().enumerate() {
            v[(r - k) % r] += ck;
        }
        Cyc {
            order: self.order,
            coeffs: reduce_mod_phi(v, self.order),
        }
    }

    /// Returns the value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Floating-point evaluation with `ζ_r = e^{2πi/r}`; used only by cross-check oracles.
    pub fn to_complex(&self) -> Complex64 {
        let r = self.order as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (k, ck) in self.coeffs.iter().enumerate() {
            let c = ck.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / r;
            z += Complex64::from_polar(c, theta);
        }
        z
    }

    /// Hashable key; rational values map to order one, other values keep their order, so keys
    /// agree for equal values built over one field (possibly mixed with rationals).
    pub fn key(&self) -> (u32, Vec<Rational>) {
        match self.as_rational() {
            Some(q) => (1, vec![q]),
            None => (self.order, self.coeffs.clone()),
        }
    }

    /// Parses `"c0+c1*z+c2*z^2"` (terms in any order, rational coefficients) at the declared order.
    pub fn parse(s: &str, order: u32) -> Result<Self, CoxError> {
        let bad = || CoxError::Parse(format!("malformed cyclotomic literal '{s}'"));
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = vec![Rational::zero(); order.max(1) as usize];
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b.to_string()),
                None => (1, t.trim_start_matches('+').to_string()),
            };
            let (coef, exp) = if let Some(pos) = body.find('z') {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() {
                    Rational::one()
                } else {
                    parse_rational(c).map_err(|_| bad())?
                };
                let rest = &body[pos + 1..];
                let e: i64 = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                };
                (c, e)
            } else {
                (parse_rational(&body).map_err(|_| bad())?, 0)
            };
            let idx = exp.rem_euclid(order.max(1) as i64) as usize;
            if sign < 0 {
                acc[idx] -= coef;
            } else {
                acc[idx] += coef;
            }
        }
        Ok(Self::from_exponent_coeffs(order.max(1), &acc))
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Dense polynomial division over `Q`, returns `(quotient, remainder)`.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &c * bj;
        }
        q[dr - db] = c;
        trim(&mut r);
    }
    (q, r)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyc::common(self, other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyc {}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyc {
    /// Writes `c0+c1*z+…`; the order is implied by the surrounding context.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = fmt_rational(c);
            let term = match k {
                0 => cs,
                1 => format!("{cs}*z"),
                _ => format!("{cs}*z^{k}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return write!(f, "0");
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
        write!(f, "{s}")
    }
}

impl Ring for Cyc {
    fn zero() -> Self {
        Cyc::from_int(0)
    }
    fn one() -> Self {
        Cyc::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Cyc::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
    fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = Cyc::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
    fn mul(&self, other: &Self) -> Self {
        if self.order == 1 {
            let s = &self.coeffs[0];
            return Cyc {
                order: other.order,
                coeffs: other.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        if other.order == 1 {
            let s = &other.coeffs[0];
            return Cyc {
                order: self.order,
                coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        let (a, b) = Cyc::common(self, other);
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        Cyc {
            order: a.order,
            coeffs: reduce_mod_phi(prod, a.order),
        }
    }
    fn neg(&self) -> Self {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_i64(v: i64) -> Self {
        Cyc::from_int(v)
    }
}

impl QAlgebra for Cyc {
    fn scale_q(&self, q: &Rational) -> Self {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

impl Field for Cyc {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        if self.order == 1 {
            return Some(Cyc::from_rational(self.coeffs[0].recip()));
        }
        // Extended Euclid in Q[x] against Φ_r.
        let phi: Vec<Rational> = cyclotomic_poly(self.order)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let mut a = self.coeffs.clone();
        trim(&mut a);
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while !(r1.len() == 1) {
            if r1.is_empty() {
                return None;
            }
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1[0].recip();
        let v: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        let mut padded = v;
        padded.resize(self.order as usize, Rational::zero());
        Some(Cyc::from_exponent_coeffs(self.order, &padded))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ring::rat;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(5), 4);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        let s = Cyc::one().add(&Cyc::zeta_pow(3, 1)).add(&Cyc::zeta_pow(3, 2));
        assert!(Ring::is_zero(&s));
    }

    #[test]
    fn i_squared() {
        let i = Cyc::zeta_pow(4, 1);
        assert_eq!(i.mul(&i), Cyc::from_int(-1));
    }

    #[test]
    fn zeta6_equals_minus_zeta3_squared() {
        let a = Cyc::zeta_pow(6, 1);
        let b = Cyc::zeta_pow(3, 2).neg();
        assert_eq!(a, b);
        assert!((a.to_complex() - b.to_complex()).norm() < 1e-12);
    }

    #[test]
    fn inverse_and_conj() {
        let z = Cyc::zeta_pow(5, 1).add(&Cyc::from_rational(rat(1, 3)));
        let zi = z.inv().unwrap();
        assert_eq!(z.mul(&zi), Cyc::one());
        assert_eq!(z.conj().conj(), z);
        let n = z.mul(&z.conj());
        assert!(n.to_complex().im.abs() < 1e-12);
    }

    #[test]
    fn golden_ratio_in_q_zeta5() {
        let phi = Cyc::zeta_pow(5, 2).add(&Cyc::zeta_pow(5, 3)).neg();
        // φ² = φ + 1
        assert_eq!(phi.mul(&phi), phi.add(&Cyc::one()));
    }

    #[test]
    fn parse_roundtrip() {
        let z = Cyc::parse("1/2+3*z-z^2", 5).unwrap();
        let again = Cyc::parse(&z.to_string(), 5).unwrap();
        assert_eq!(z, again);
        assert!(Cyc::parse("1+*", 5).is_err());
    }
}
