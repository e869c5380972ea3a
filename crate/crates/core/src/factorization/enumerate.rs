//! Group-algebra convolution: repeated left multiplication by `Σ_τ w(τ)·τ`.

use crate::config::Limits;
use crate::groups::ReflectionGroup;
use crate::scalar::{PolyQ, Rational, Ring, TruncatedEGF};
use crate::towers::WeightSystem;
use crate::{CoxError, Result};
use num_bigint::BigInt;
use std::collections::HashMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the per-element accumulation of one convolution step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Data-parallel over group elements; identical output to `Sequential`.
    /// Falls back to sequential when the `parallel` feature is disabled.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Which group elements the series sums over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// A set of elements, typically a full Coxeter class.
    Elements(Vec<usize>),
    /// A single element.
    Element(usize),
}

impl Target {
    fn elements(&self) -> Vec<usize> {
        match self {
            Target::Elements(v) => v.clone(),
            Target::Element(g) => vec![*g],
        }
    }
}

/// Monomials of each degree in `k` variables, with multiplication-by-variable tables.
pub struct MonomialTables {
    pub num_vars: usize,
    /// `monos[d]` lists exponent vectors of degree `d`.
    pub monos: Vec<Vec<Vec<u16>>>,
    /// `shift[d][v][i]` is the index in degree `d+1` of `monos[d][i]·x_v`.
    pub shift: Vec<Vec<Vec<u32>>>,
}

/// Number of monomials of degree `d` in `k` variables.
pub fn monomial_count(k: usize, d: usize) -> u128 {
    if k == 0 {
        return u128::from(d == 0);
    }
    // C(d + k − 1, k − 1)
    let mut r: u128 = 1;
    for i in 0..(k - 1) as u128 {
        r = r * (d as u128 + 1 + i) / (i + 1);
    }
    r
}

impl MonomialTables {
    pub fn new(k: usize, max_deg: usize) -> Self {
        let mut monos: Vec<Vec<Vec<u16>>> = vec![vec![vec![0u16; k]]];
        for d in 1..=max_deg {
            let mut next = Vec::new();
            fn rec(k: usize, left: u16, pos: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
                if pos + 1 == k {
                    cur[pos] = left;
                    out.push(cur.clone());
                    return;
                }
                for e in (0..=left).rev() {
                    cur[pos] = e;
                    rec(k, left - e, pos + 1, cur, out);
                }
            }
            if k > 0 {
                rec(k, d as u16, 0, &mut vec![0u16; k], &mut next);
            }
            monos.push(next);
        }
        let mut shift = Vec::new();
        for d in 0..max_deg {
            let index: HashMap<&Vec<u16>, u32> = monos[d + 1].iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
            let per_var: Vec<Vec<u32>> = (0..k)
                .map(|v| {
                    monos[d]
                        .iter()
                        .map(|m| {
                            let mut m2 = m.clone();
                            m2[v] += 1;
                            index[&m2]
                        })
                        .collect()
                })
                .collect();
            shift.push(per_var);
        }
        MonomialTables {
            num_vars: k,
            monos,
            shift,
        }
    }

    /// Converts a dense coefficient vector of degree `d` into a polynomial.
    pub fn to_poly(&self, d: usize, dense: &[u128]) -> PolyQ {
        let mut p = PolyQ::zero();
        for (m, &c) in self.monos[d].iter().zip(dense) {
            if c != 0 {
                p.add_term(m.clone(), &Rational::from_integer(BigInt::from(c)));
            }
        }
        p
    }
}

fn budget_check(order: usize, m_cur: u128, m_next: u128, limits: &Limits) -> Result<()> {
    let bytes = (order as u128) * (m_cur + m_next) * 16;
    let needed_mb = (bytes / (1 << 20)) as u64 + 1;
    if needed_mb > limits.budget_mb {
        return Err(CoxError::BudgetExceeded {
            needed_mb,
            budget_mb: limits.budget_mb,
        });
    }
    Ok(())
}

/// One pull step on dense homogeneous states: `new[g] = Σ_τ x_{a(τ)} · old[τ^{-1} g]`.
fn formal_step(
    g: &ReflectionGroup,
    ws: &WeightSystem,
    tables: &MonomialTables,
    d: usize,
    old: &[u128],
    exec: Exec,
) -> Vec<u128> {
    let n = g.order();
    let m_cur = tables.monos[d].len();
    let m_next = tables.monos[d + 1].len();
    let left = g.reflection_left_table();
    let nr = g.num_reflections();
    let mut new = vec![0u128; n * m_next];
    let kernel = |gi: usize, out: &mut [u128]| {
        for r in 0..nr {
            let src = left[r * n + gi] as usize;
            let block = &old[src * m_cur..(src + 1) * m_cur];
            let sh = &tables.shift[d][ws.assignment[r]];
            for (i, &c) in block.iter().enumerate() {
                if c != 0 {
                    out[sh[i] as usize] += c;
                }
            }
        }
    };
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => new
            .par_chunks_mut(m_next)
            .enumerate()
            .for_each(|(gi, out)| kernel(gi, out)),
        _ => new.chunks_mut(m_next).enumerate().for_each(|(gi, out)| kernel(gi, out)),
    }
    new
}

/// Formal series `Σ_ℓ t^ℓ/ℓ! Σ_{g ∈ target} [g] (Σ_τ ω_{a(τ)} τ)^ℓ` truncated at `len`.
pub fn enumerate_series_formal(
    g: &ReflectionGroup,
    ws: &WeightSystem,
    target: &Target,
    len: usize,
    limits: &Limits,
    exec: Exec,
) -> Result<TruncatedEGF<PolyQ>> {
    let k = ws.num_vars;
    let n = g.order();
    for d in 0..len {
        budget_check(n, monomial_count(k, d), monomial_count(k, d + 1), limits)?;
    }
    let tables = MonomialTables::new(k, len);
    let targets = target.elements();
    let mut state = vec![0u128; n];
    state[g.identity()] = 1;
    let mut coeffs = Vec::with_capacity(len + 1);
    for d in 0..=len {
        let m = tables.monos[d].len();
        let mut sum = vec![0u128; m];
        for &c in &targets {
            for (s, v) in sum.iter_mut().zip(&state[c * m..(c + 1) * m]) {
                *s += v;
            }
        }
        coeffs.push(tables.to_poly(d, &sum));
        if d < len {
            state = formal_step(g, ws, &tables, d, &state, exec);
        }
    }
    Ok(TruncatedEGF::new(len, coeffs))
}

/// Numeric series with one scalar weight per reflection, over any exact ring.
pub fn enumerate_series_numeric<K: Ring + Send + Sync>(
    g: &ReflectionGroup,
    weights: &[K],
    target: &Target,
    len: usize,
    exec: Exec,
) -> TruncatedEGF<K> {
    let n = g.order();
    let left = g.reflection_left_table();
    let targets = target.elements();
    let mut state = vec![K::zero(); n];
    state[g.identity()] = K::one();
    let mut coeffs = Vec::with_capacity(len + 1);
    for d in 0..=len {
        let mut s = K::zero();
        for &c in &targets {
            s.add_assign(&state[c]);
        }
        coeffs.push(s);
        if d == len {
            break;
        }
        let old = &state;
        let kernel = |gi: usize| {
            let mut acc = K::zero();
            for (r, w) in weights.iter().enumerate() {
                let v = &old[left[r * n + gi] as usize];
                if !v.is_zero() {
                    acc.add_assign(&v.mul(w));
                }
            }
            acc
        };
        state = match exec {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(kernel).collect(),
            _ => (0..n).map(kernel).collect(),
        };
    }
    TruncatedEGF::new(len, coeffs)
}

/// Evaluates a formal series at numeric weight values.
pub fn specialize(series: &TruncatedEGF<PolyQ>, values: &[Rational]) -> TruncatedEGF<Rational> {
    series.map(|p| p.eval(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_group;
    use crate::scalar::rint;

    #[test]
    fn monomial_counts() {
        let t = MonomialTables::new(3, 4);
        for d in 0..=4 {
            assert_eq!(t.monos[d].len() as u128, monomial_count(3, d));
        }
    }

    #[test]
    fn sym3_counts() {
        let g = build_group("A2", &Limits::default()).unwrap();
        let cls = g.coxeter_class().unwrap();
        let ws = WeightSystem::uniform(&g);
        let s = enumerate_series_formal(
            &g,
            &ws,
            &Target::Elements(cls.members.clone()),
            4,
            &Limits::default(),
            Exec::default(),
        )
        .unwrap();
        assert_eq!(s.coeff(2), PolyQ::monomial(vec![2], rint(6)));
        let f = enumerate_series_numeric(
            &g,
            &vec![rint(1); 3],
            &Target::Element(cls.representative),
            4,
            Exec::Sequential,
        );
        assert_eq!(f.coeff(4), rint(27));
        assert!(f.coeff(0) == rint(0));
    }

    #[test]
    fn sequential_equals_parallel() {
        let g = build_group("B3", &Limits::default()).unwrap();
        let ws = WeightSystem::per_hyperplane(&g);
        let cls = g.coxeter_class().unwrap();
        let t = Target::Elements(cls.members);
        let a = enumerate_series_formal(&g, &ws, &t, 4, &Limits::default(), Exec::Sequential).unwrap();
        let b = enumerate_series_formal(&g, &ws, &t, 4, &Limits::default(), Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_group("B3", &Limits::default()).unwrap();
        let ws = WeightSystem::per_reflection(&g);
        let lim = Limits {
            budget_mb: 1,
            ..Limits::default()
        };
        let r = enumerate_series_formal(&g, &ws, &Target::Element(0), 8, &lim, Exec::Sequential);
        assert!(matches!(r, Err(CoxError::BudgetExceeded { .. })));
    }
}
