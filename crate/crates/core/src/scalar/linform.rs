//! Integer linear forms `Σ a_i ω_i` in the weight variables.

use super::poly::Poly;
use super::ring::{QAlgebra, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer combination of the weight variables `ω_1, …, ω_n` (stored 0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn zero(n: usize) -> Self {
        LinearForm { coeffs: vec![0; n] }
    }

    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm { coeffs }
    }

    /// The form `ω_i` (0-based index) in `n` variables.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.coeffs[i] = 1;
        f
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        let mut c = vec![0; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, &a) in other.coeffs.iter().enumerate() {
            c[i] += a;
        }
        LinearForm { coeffs: c }
    }

    pub fn scale(&self, k: i64) -> Self {
        LinearForm {
            coeffs: self.coeffs.iter().map(|&a| a * k).collect(),
        }
    }

    /// Value with every variable set to one.
    pub fn sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, w: &[Rational]) -> Rational {
        let mut acc = Rational::from_integer(0.into());
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                acc += &w[i] * Rational::from_integer(a.into());
            }
        }
        acc
    }

    pub fn to_poly<K: QAlgebra>(&self) -> Poly<K> {
        let mut p = Poly::<K>::zero_poly();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                let mut m = vec![0u16; i + 1];
                m[i] = 1;
                p.add_term(m, &K::from_i64(a));
            }
        }
        p
    }

    /// Pads or trims to exactly `n` variables (extra coefficients must be zero).
    pub fn resized(&self, n: usize) -> Self {
        let mut c = self.coeffs.clone();
        debug_assert!(c.iter().skip(n).all(|&a| a == 0));
        c.resize(n, 0);
        LinearForm { coeffs: c }
    }

    /// Substitutes `ω_i ↦ ω_{map[i]}` in a form with `n_new` variables.
    pub fn pull_back(&self, map: &[usize], n_new: usize) -> Self {
        let mut c = vec![0; n_new];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[map[i]] += a;
        }
        LinearForm { coeffs: c }
    }
}

impl fmt::Display for LinearForm {
    /// Writes e.g. `2*w1+w2+6*w6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let term = match a {
                1 => format!("w{}", i + 1),
                -1 => format!("-w{}", i + 1),
                _ => format!("{a}*w{}", i + 1),
            };
            if !s.is_empty() && !term.starts_with('-') {
                s.push('+');
            }
            s.push_str(&term);
        }
        if s.is_empty() {
            s.push('0');
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorted copy of a multiset of forms, for multiset comparison.
pub fn sorted_forms(v: &[LinearForm]) -> Vec<LinearForm> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Converts each form to a polynomial in the weights.
pub fn forms_to_polys<K: QAlgebra>(v: &[LinearForm]) -> Vec<Poly<K>> {
    v.iter().map(|f| f.to_poly()).collect()
}
