//! Constructions of the supported families and descriptor parsing.

use super::{CatalogData, Family, ReflectionGroup};
use crate::config::Limits;
use crate::linalg::Matrix;
use crate::scalar::{rat, Cyc, QAlgebra, Ring};
use crate::{CoxError, Result};

/// Parsed group descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `S_n` (descriptor `A{n−1}` or `S{n}`).
    Sym(usize),
    /// `G(r,p,n)` with `p ∈ {1, r}`; `B_n = G(2,1,n)`, `D_n = G(2,2,n)`, `I2(m) = G(m,m,2)`.
    Monomial {
        r: usize,
        p: usize,
        n: usize,
    },
    H3,
}

fn parse_usize(s: &str, whole: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| CoxError::Parse(format!("malformed group descriptor '{whole}'")))
}

/// Parses descriptors such as `A3`, `S4`, `B4`, `D5`, `I2(8)`, `H3`, `G(3,1,3)`, `G(4,4,3)`.
pub fn parse_descriptor(s: &str) -> Result<GroupSpec> {
    let t = s.trim().to_ascii_uppercase();
    let bad = || CoxError::Parse(format!("malformed group descriptor '{s}'"));
    if t == "H3" {
        return Ok(GroupSpec::H3);
    }
    if let Some(rest) = t.strip_prefix("I2(") {
        let m = parse_usize(rest.strip_suffix(')').ok_or_else(bad)?, s)?;
        if m < 2 {
            return Err(bad());
        }
        return Ok(GroupSpec::Monomial { r: m, p: m, n: 2 });
    }
    if let Some(rest) = t.strip_prefix("G(") {
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let r = parse_usize(parts[0], s)?;
        let p = parse_usize(parts[1], s)?;
        let n = parse_usize(parts[2], s)?;
        if r == 0 || p == 0 || n == 0 || r % p != 0 {
            return Err(bad());
        }
        if r == 1 {
            return Ok(GroupSpec::Sym(n));
        }
        if p != 1 && p != r {
            return Err(CoxError::Unsupported(format!(
                "G({r},{p},{n}) is not well generated; only p = 1 or p = r are built"
            )));
        }
        if p == r && n == 1 {
            return Err(CoxError::Unsupported(format!("G({r},{r},1) is trivial")));
        }
        return Ok(GroupSpec::Monomial { r, p, n });
    }
    let (letter, num) = t.split_at(1);
    let n = parse_usize(num, s)?;
    match letter {
        "A" if n >= 1 => Ok(GroupSpec::Sym(n + 1)),
        "S" if n >= 2 => Ok(GroupSpec::Sym(n)),
        "B" | "C" if n >= 1 => Ok(GroupSpec::Monomial { r: 2, p: 1, n }),
        "D" if n >= 2 => Ok(GroupSpec::Monomial { r: 2, p: 2, n }),
        "E" | "F" | "H" => Err(CoxError::Unsupported(format!(
            "{s} is not enumerated; only A/B/D/I2/H3/G(r,p,n) groups are built"
        ))),
        _ => Err(bad()),
    }
}

/// Parses and builds a group under the given limits.
pub fn build_group(descriptor: &str, limits: &Limits) -> Result<ReflectionGroup> {
    let spec = parse_descriptor(descriptor)?;
    let label = descriptor.trim().to_string();
    match spec {
        GroupSpec::Sym(n) => build_sym(n, label, limits),
        GroupSpec::Monomial { r, p, n } => build_monomial(r, p, n, label, limits),
        GroupSpec::H3 => build_h3(label, limits),
    }
}

/// Ordered pairs `(i, j)`, `i ≠ j`, indexing the roots `e_i − e_j` of `S_n`.
pub(crate) fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

fn sym_root(n: usize, i: usize, j: usize) -> Vec<Cyc> {
    // e_i − e_j in the simple-root basis α_k = e_k − e_{k+1}
    let mut v = vec![Cyc::zero(); n - 1];
    let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    for c in v.iter_mut().take(b).skip(a) {
        *c = Cyc::from_int(s);
    }
    v
}

fn build_sym(n: usize, label: String, limits: &Limits) -> Result<ReflectionGroup> {
    if n < 2 {
        return Err(CoxError::Unsupported("S_1 has rank zero".into()));
    }
    let pairs = sym_pairs(n);
    let catalog: Vec<Vec<Cyc>> = pairs.iter().map(|&(i, j)| sym_root(n, i, j)).collect();
    let basis_idx: Vec<usize> = (0..n - 1)
        .map(|k| pairs.iter().position(|&p| p == (k, k + 1)).unwrap())
        .collect();
    let form = Matrix::from_fn(n - 1, n - 1, |i, j| {
        if i == j {
            Cyc::from_int(2)
        } else if i.abs_diff(j) == 1 {
            Cyc::from_int(-1)
        } else {
            Cyc::zero()
        }
    });
    let gens: Vec<Vec<u16>> = (0..n - 1)
        .map(|k| {
            let sw = |x: usize| {
                if x == k {
                    k + 1
                } else if x == k + 1 {
                    k
                } else {
                    x
                }
            };
            pairs
                .iter()
                .map(|&(i, j)| pairs.iter().position(|&p| p == (sw(i), sw(j))).unwrap() as u16)
                .collect()
        })
        .collect();
    let data = CatalogData {
        label,
        family: Family::Sym(n),
        dim: n - 1,
        field_order: 1,
        catalog,
        basis_idx,
        form,
    };
    ReflectionGroup::from_generator_perms(data, &gens, limits)
}

fn zeta(r: usize, k: i64) -> Cyc {
    Cyc::zeta_pow(r as u32, k)
}

fn build_monomial(r: usize, p: usize, n: usize, label: String, limits: &Limits) -> Result<ReflectionGroup> {
    let catalog: Vec<Vec<Cyc>> = (0..n)
        .flat_map(|i| {
            (0..r).map(move |k| {
                let mut v = vec![Cyc::zero(); n];
                v[i] = zeta(r, k as i64);
                v
            })
        })
        .collect();
    let basis_idx: Vec<usize> = (0..n).map(|i| i * r).collect();
    let mut gens = Vec::new();
    if p == 1 {
        let mut s0 = Matrix::<Cyc>::identity(n);
        s0.set(0, 0, zeta(r, 1));
        gens.push(s0);
    } else {
        // twisted transposition: e1 ↦ ζ e2, e2 ↦ ζ^{-1} e1; with this orientation the
        // generator product is e^{2πi/h}-regular rather than e^{-2πi/h}-regular
        let mut s0 = Matrix::<Cyc>::identity(n);
        s0.set(0, 0, Cyc::zero());
        s0.set(1, 1, Cyc::zero());
        s0.set(1, 0, zeta(r, 1));
        s0.set(0, 1, zeta(r, -1));
        gens.push(s0);
    }
    for k in 0..n.saturating_sub(1) {
        let mut s = Matrix::<Cyc>::identity(n);
        s.set(k, k, Cyc::zero());
        s.set(k + 1, k + 1, Cyc::zero());
        s.set(k, k + 1, Cyc::one());
        s.set(k + 1, k, Cyc::one());
        gens.push(s);
    }
    let data = CatalogData {
        label,
        family: Family::Monomial { r, p, n },
        dim: n,
        field_order: if r <= 2 { 1 } else { r as u32 },
        catalog,
        basis_idx,
        form: Matrix::identity(n),
    };
    ReflectionGroup::from_generator_matrices(data, &gens, limits)
}

fn h3_roots() -> Vec<Vec<Cyc>> {
    let phi = Cyc::zeta_pow(5, 2).add(&Cyc::zeta_pow(5, 3)).neg();
    let phi_inv = phi.sub(&Cyc::one());
    let half = rat(1, 2);
    let mut roots = Vec::new();
    for i in 0..3 {
        for s in [1, -1] {
            let mut v = vec![Cyc::zero(); 3];
            v[i] = Cyc::from_int(s);
            roots.push(v);
        }
    }
    let base = [Cyc::one(), phi, phi_inv];
    for shift in 0..3 {
        for signs in 0..8 {
            let mut v = vec![Cyc::zero(); 3];
            for (k, b) in base.iter().enumerate() {
                let sgn = if signs >> k & 1 == 1 { -1 } else { 1 };
                v[(k + shift) % 3] = b.scale_q(&half).mul(&Cyc::from_int(sgn));
            }
            roots.push(v);
        }
    }
    roots
}

fn unit_reflection(r: &[Cyc]) -> Matrix<Cyc> {
    // I − 2 r rᵀ for a real unit vector r
    let n = r.len();
    Matrix::from_fn(n, n, |i, j| {
        let d = if i == j { Cyc::one() } else { Cyc::zero() };
        d.sub(&r[i].mul(&r[j]).mul(&Cyc::from_int(2)))
    })
}

fn build_h3(label: String, limits: &Limits) -> Result<ReflectionGroup> {
    let roots = h3_roots();
    // positive system from a generic functional, simple roots via the permutation criterion
    let f = [1.0, std::f64::consts::FRAC_1_PI, 0.4 * std::f64::consts::FRAC_1_PI];
    let val = |v: &Vec<Cyc>| -> f64 { v.iter().zip(f).map(|(c, w)| c.to_complex().re * w).sum() };
    let key = |v: &Vec<Cyc>| v.iter().map(|c| c.key()).collect::<Vec<_>>();
    let positive: Vec<&Vec<Cyc>> = roots.iter().filter(|v| val(v) > 0.0).collect();
    let pos_keys: std::collections::HashSet<_> = positive.iter().map(|v| key(v)).collect();
    let mut simple: Vec<Matrix<Cyc>> = Vec::new();
    for a in &positive {
        let s = unit_reflection(a);
        let ok = positive
            .iter()
            .filter(|b| key(b) != key(a))
            .all(|b| pos_keys.contains(&key(&s.mul_vec(b))));
        if ok {
            simple.push(s);
        }
    }
    if simple.len() != 3 {
        return Err(CoxError::Internal("H3 simple system not found".into()));
    }
    let ord = |a: &Matrix<Cyc>, b: &Matrix<Cyc>| -> usize {
        let p = a.mul(b);
        let id = Matrix::<Cyc>::identity(3);
        let mut q = p.clone();
        let mut k = 1;
        while q != id {
            q = q.mul(&p);
            k += 1;
        }
        k
    };
    // order the simple reflections as a path with labels 5 then 3
    let mut chosen = None;
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let (a, b, c) = (&simple[perm[0]], &simple[perm[1]], &simple[perm[2]]);
        if ord(a, b) == 5 && ord(b, c) == 3 && ord(a, c) == 2 {
            chosen = Some(perm);
            break;
        }
    }
    let perm = chosen.ok_or_else(|| CoxError::Internal("H3 diagram labels not found".into()))?;
    let gens: Vec<Matrix<Cyc>> = perm.iter().map(|&i| simple[i].clone()).collect();
    let basis_idx = vec![0, 2, 4];
    let data = CatalogData {
        label,
        family: Family::H3,
        dim: 3,
        field_order: 5,
        catalog: roots,
        basis_idx,
        form: Matrix::identity(3),
    };
    ReflectionGroup::from_generator_matrices(data, &gens, limits)
}
