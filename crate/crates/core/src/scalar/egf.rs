//! Exponential generating series in `t` truncated at a fixed order.

use super::linform::LinearForm;
use super::poly::{Poly, ScalarString};
use super::ring::{QAlgebra, Rational, Ring};
use num_bigint::BigInt;

/// `Σ_{ℓ≤L} c_ℓ t^ℓ/ℓ!`.
///
/// Series built from `Ring::zero`/`Ring::one` are constants and carry an unbounded order;
/// any binary operation truncates at the smaller order of its operands.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedEGF<K: Ring> {
    order: usize,
    coeffs: Vec<K>,
}

const UNBOUNDED: usize = usize::MAX;

fn binom(n: usize, k: usize) -> i64 {
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl<K: Ring> TruncatedEGF<K> {
    /// Series with the given coefficients `c_0..c_L`.
    pub fn new(order: usize, mut coeffs: Vec<K>) -> Self {
        coeffs.truncate(order + 1);
        TruncatedEGF { order, coeffs }
    }

    pub fn zero_series(order: usize) -> Self {
        TruncatedEGF {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(order: usize, c: K) -> Self {
        TruncatedEGF::new(order, vec![c])
    }

    /// `e^{t a}` truncated at `order`: coefficients `a^ℓ`.
    pub fn exp_linear(order: usize, a: &K) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        let mut p = K::one();
        for _ in 0..=order {
            c.push(p.clone());
            p = p.mul(a);
        }
        TruncatedEGF::new(order, c)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient `c_ℓ` of `t^ℓ/ℓ!`.
    pub fn coeff(&self, l: usize) -> K {
        self.coeffs.get(l).cloned().unwrap_or_else(K::zero)
    }

    /// All coefficients `c_0..c_L` (requires a finite order).
    pub fn coeffs(&self) -> Vec<K> {
        assert!(self.order != UNBOUNDED, "unbounded constant series");
        (0..=self.order).map(|l| self.coeff(l)).collect()
    }

    pub fn with_order(&self, order: usize) -> Self {
        TruncatedEGF::new(order, self.coeffs.clone())
    }

    pub fn map<L: Ring, F: Fn(&K) -> L>(&self, f: F) -> TruncatedEGF<L> {
        TruncatedEGF {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `exp(self)`; defined only when the constant term vanishes.
    pub fn exp(&self) -> Option<Self> {
        if !self.coeff(0).is_zero() {
            return None;
        }
        let l = self.order;
        assert!(l != UNBOUNDED, "exp of an unbounded series");
        let mut b: Vec<K> = vec![K::one()];
        for n in 0..l {
            // b_{n+1} = Σ_k C(n,k) a_{k+1} b_{n-k}
            let mut acc = K::zero();
            for k in 0..=n {
                let a = self.coeff(k + 1);
                if a.is_zero() {
                    continue;
                }
                let t = a.mul(&b[n - k]).mul(&K::from_i64(binom(n, k)));
                acc.add_assign(&t);
            }
            b.push(acc);
        }
        Some(TruncatedEGF::new(l, b))
    }

    /// `d/dt`; the EGF coefficients shift down by one.
    pub fn derivative(&self) -> Self {
        let order = if self.order == UNBOUNDED {
            UNBOUNDED
        } else {
            self.order.saturating_sub(1)
        };
        TruncatedEGF {
            order,
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
        }
    }
}

impl<K: Ring + ScalarString> TruncatedEGF<Poly<K>> {
    /// JSON list of the coefficients of `t^ℓ/ℓ!`, each as a polynomial map.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array((0..=self.order).map(|l| self.coeff(l).to_json()).collect())
    }
}

impl TruncatedEGF<Rational> {
    /// JSON list of the coefficients of `t^ℓ/ℓ!` as rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array((0..=self.order).map(|l| self.coeff(l).scalar_string().into()).collect())
    }
}

impl<K: Ring> Ring for TruncatedEGF<K> {
    fn zero() -> Self {
        TruncatedEGF {
            order: UNBOUNDED,
            coeffs: Vec::new(),
        }
    }
    fn one() -> Self {
        TruncatedEGF {
            order: UNBOUNDED,
            coeffs: vec![K::one()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let n = self.coeffs.len().max(other.coeffs.len()).min(order.saturating_add(1));
        let c = (0..n).map(|l| self.coeff(l).add(&other.coeff(l))).collect();
        TruncatedEGF { order, coeffs: c }
    }
    fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let n = self.coeffs.len().max(other.coeffs.len()).min(order.saturating_add(1));
        let c = (0..n).map(|l| self.coeff(l).sub(&other.coeff(l))).collect();
        TruncatedEGF { order, coeffs: c }
    }
    fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let n = (self.coeffs.len() + other.coeffs.len())
            .saturating_sub(1)
            .min(order.saturating_add(1));
        let mut c = Vec::with_capacity(n);
        for l in 0..n {
            let mut acc = K::zero();
            for k in 0..=l {
                if k >= self.coeffs.len() || l - k >= other.coeffs.len() {
                    continue;
                }
                let (a, b) = (&self.coeffs[k], &other.coeffs[l - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc.add_assign(&a.mul(b).mul(&K::from_i64(binom(l, k))));
            }
            c.push(acc);
        }
        TruncatedEGF { order, coeffs: c }
    }
    fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }
    fn from_i64(v: i64) -> Self {
        TruncatedEGF {
            order: UNBOUNDED,
            coeffs: vec![K::from_i64(v)],
        }
    }
}

impl<K: QAlgebra> QAlgebra for TruncatedEGF<K> {
    fn scale_q(&self, q: &Rational) -> Self {
        self.map(|c| c.scale_q(q))
    }
}

/// `e^{t·wR}/h · Π_i (1 − e^{−t λ_i})` expanded to order `L` with polynomial coefficients in ω.
pub fn egf_product_formula<K: QAlgebra>(
    w_r: &LinearForm,
    lambdas: &[LinearForm],
    h: i64,
    order: usize,
) -> TruncatedEGF<Poly<K>> {
    let wr: Poly<K> = w_r.to_poly();
    let mut acc = TruncatedEGF::exp_linear(order, &wr);
    for lam in lambdas {
        let neg: Poly<K> = lam.to_poly::<K>().neg();
        let f = TruncatedEGF::<Poly<K>>::one().sub(&TruncatedEGF::exp_linear(order, &neg));
        acc = acc.mul(&f);
    }
    acc.scale_q(&Rational::new(BigInt::from(1), BigInt::from(h)))
}

/// Same product with scalar exponents: `e^{t a}/d · Π (1 − e^{−t b_i})`.
pub fn scalar_product_formula<K: QAlgebra>(a: &K, bs: &[K], d: i64, order: usize) -> TruncatedEGF<K> {
    let mut acc = TruncatedEGF::exp_linear(order, a);
    for b in bs {
        let f = TruncatedEGF::<K>::one().sub(&TruncatedEGF::exp_linear(order, &b.neg()));
        acc = acc.mul(&f);
    }
    acc.scale_q(&Rational::new(BigInt::from(1), BigInt::from(d)))
}

/// Chapuy–Stump series for a fixed Coxeter element: `e^{t|R|}/|W| · (1 − e^{−th})^n`.
pub fn chapuy_stump_series(
    num_reflections: i64,
    order: i64,
    h: i64,
    rank: usize,
    len: usize,
) -> TruncatedEGF<Rational> {
    let hs = vec![Rational::from_integer(h.into()); rank];
    scalar_product_formula(&Rational::from_integer(num_reflections.into()), &hs, order, len)
}
