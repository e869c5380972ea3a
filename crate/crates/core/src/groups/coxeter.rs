//! Coxeter elements: `e^{2πi/h}`-regular elements of irreducible well-generated groups.

use super::ReflectionGroup;
use crate::{CoxError, Result};
use num_complex::Complex64;
use std::collections::{HashSet, VecDeque};

/// The conjugacy class of Coxeter elements.
#[derive(Clone, Debug)]
pub struct CoxeterClass {
    /// A chosen Coxeter element (the product of the standard generators when it qualifies).
    pub representative: usize,
    /// All elements of the class, sorted.
    pub members: Vec<usize>,
    /// The Coxeter number `h`.
    pub h: i64,
}

const EIG_TOL: f64 = 1e-9;
const REGULAR_TOL: f64 = 1e-8;

impl ReflectionGroup {
    /// Tests whether `g` has an `e^{2πik/h}`-eigenvector off every reflecting hyperplane of the
    /// group, with `k/h` given as the root of unity `e^{2πi·num/den}`.
    pub fn is_regular_element(&self, g: usize, num: i64, den: i64) -> bool {
        let m = self.matrix(g).to_complex();
        let theta = 2.0 * std::f64::consts::PI * num as f64 / den as f64;
        let lambda = Complex64::new(theta.cos(), theta.sin());
        let basis = crate::linalg::complex_eigenspace(&m, lambda, EIG_TOL);
        if basis.is_empty() {
            return false;
        }
        // fixed irrational-looking combination of the eigenspace basis
        let mut v = vec![Complex64::new(0.0, 0.0); self.dim];
        for (k, b) in basis.iter().enumerate() {
            let c = Complex64::new(1.0 + 0.618_034 * k as f64, 0.414_214 * (k as f64 + 1.0));
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        let form = self.form().to_complex();
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        self.hyperplanes().iter().all(|h| {
            let root: Vec<Complex64> = h.root.iter().map(|x| x.to_complex()).collect();
            // ⟨v, α⟩ = α^† G v
            let mut ip = Complex64::new(0.0, 0.0);
            for i in 0..self.dim {
                let mut gv = Complex64::new(0.0, 0.0);
                for j in 0..self.dim {
                    gv += form[i][j] * v[j];
                }
                ip += root[i].conj() * gv;
            }
            ip.norm() > REGULAR_TOL * norm.max(1.0)
        })
    }

    /// Conjugacy class of `g`, sorted.
    pub fn conjugacy_class(&self, g: usize) -> Vec<usize> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(g);
        queue.push_back(g);
        let gens = self.generators().to_vec();
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.conjugate(x, s);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut v: Vec<usize> = seen.into_iter().collect();
        v.sort();
        v
    }

    /// Product of the standard generators in their listed order.
    pub fn generator_product(&self) -> usize {
        self.generators()
            .iter()
            .fold(self.identity(), |acc, &s| self.mul(acc, s))
    }

    /// Coxeter class of an irreducible well-generated group (or of an irreducible reflection
    /// subgroup, whose hyperplanes are then the ones tested for regularity).
    pub fn coxeter_class(&self) -> Result<CoxeterClass> {
        let comps = self.components();
        if comps.len() != 1 {
            return Err(CoxError::Unsupported(format!(
                "{} is reducible; Coxeter classes are defined per component",
                self.label
            )));
        }
        let h = self
            .coxeter_number_int()
            .map_err(|_| CoxError::Unsupported(format!("{} is not well generated", self.label)))?;
        let prod = self.generator_product();
        let representative = if self.element_order(prod) as i64 == h && self.is_regular_element(prod, 1, h) {
            prod
        } else {
            (0..self.order())
                .find(|&g| self.element_order(g) as i64 == h && self.is_regular_element(g, 1, h))
                .ok_or_else(|| {
                    CoxError::RegularityFailed(format!("no e^(2πi/{h})-regular element in {}", self.label))
                })?
        };
        let members = self.conjugacy_class(representative);
        if members.len() as i64 * h != self.order() as i64 {
            return Err(CoxError::RegularityFailed(format!(
                "Coxeter class of {} has {} elements, expected |W|/h = {}",
                self.label,
                members.len(),
                self.order() as i64 / h
            )));
        }
        Ok(CoxeterClass {
            representative,
            members,
            h,
        })
    }
}
