//! Finite sums `Σ q_d √d` with rational `q_d` and squarefree `d`.

use super::ring::{fmt_rational, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact element of the additive group spanned by square roots of squarefree integers.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SurdSum {
    terms: BTreeMap<u64, Rational>,
}

/// Splits `n = s² · d` with `d` squarefree.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut d = 1u64;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += 1;
    }
    d *= m;
    (s, d)
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    /// `q · √n` for any positive integer `n`.
    pub fn term(q: Rational, n: u64) -> Self {
        assert!(n > 0);
        let (s, d) = squarefree_split(n);
        let mut out = SurdSum::zero();
        out.add_raw(d, q * Rational::from_integer(BigInt::from(s)));
        out
    }

    /// `q / √n`.
    pub fn inv_sqrt(q: Rational, n: u64) -> Self {
        // q/√n = (q/n)·√n
        SurdSum::term(q / Rational::from_integer(BigInt::from(n)), n)
    }

    fn add_raw(&mut self, d: u64, q: Rational) {
        let e = self.terms.entry(d).or_insert_with(Rational::zero);
        *e += q;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, q) in &other.terms {
            out.add_raw(*d, q.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, q) in &other.terms {
            out.add_raw(*d, -q.clone());
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = SurdSum::zero();
        for (d, c) in &self.terms {
            out.add_raw(*d, c * q);
        }
        out
    }

    /// Coefficient of `√d` (for squarefree `d`).
    pub fn coeff(&self, d: u64) -> Rational {
        self.terms.get(&d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(d, q)| q.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt())
            .sum()
    }
}

impl fmt::Display for SurdSum {
    /// Writes e.g. `sqrt(3)*895536`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (d, q) in &self.terms {
            let qs = fmt_rational(q);
            if *d == 1 {
                parts.push(qs);
            } else if q.is_one() {
                parts.push(format!("sqrt({d})"));
            } else if q.is_negative() {
                parts.push(format!("-sqrt({d})*{}", fmt_rational(&-q.clone())));
            } else {
                parts.push(format!("sqrt({d})*{qs}"));
            }
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if !p.starts_with('-') {
                s.push('+');
            }
            s.push_str(p);
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ring::rint;

    #[test]
    fn split_and_normalise() {
        assert_eq!(squarefree_split(12), (2, 3));
        assert_eq!(squarefree_split(27), (3, 3));
        assert_eq!(squarefree_split(7), (1, 7));
        let a = SurdSum::inv_sqrt(rint(1), 12);
        let b = SurdSum::term(Rational::new(1.into(), 6.into()), 3);
        assert_eq!(a, b);
        assert_eq!(SurdSum::term(rint(5), 3).to_string(), "sqrt(3)*5");
    }
}
