//! Root systems in simple-root coordinates, root-zonotope volumes by the Shephard sum and the
//! Coxeter-number evaluation over the poset of maximal-rank reflection subgroups.

use crate::config::Limits;
use crate::factorization::Exec;
use crate::laplacian::{complete_graph_laplacian, pseudodeterminant, ArrLaplacian};
use crate::linalg::{det_i64, Matrix};
use crate::report::Report;
use crate::scalar::surd::SurdSum;
use crate::scalar::{rint, Cyc, Rational};
use crate::{CoxError, Result};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;
use std::collections::{BTreeSet, HashSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest rank accepted by the Shephard sum.
pub const MAX_SHEPHARD_RANK: usize = 6;

/// A crystallographic root system given by its Cartan matrix.
#[derive(Clone, Debug, Serialize)]
pub struct RootCatalog {
    pub label: String,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_i^∨, α_j⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in the simple-root basis, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    /// Symmetrizer `d` with `(α_i, α_j) = d_i · cartan[i][j]`.
    pub symmetrizer: Vec<i64>,
}

fn chain_cartan(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn cartan_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(rint(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && a[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().expect("visited");
                    d[j] = Some(di * rint(a[i][j]) / rint(a[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("all visited")).collect();
    let lcm = d
        .iter()
        .fold(BigInt::from(1), |l, q| num_integer::Integer::lcm(&l, q.denom()));
    d.iter()
        .map(|q| i64::try_from((q * Rational::from_integer(lcm.clone())).to_integer()).expect("small symmetrizer"))
        .collect()
}

fn pairing(a: &[Vec<i64>], beta: &[i64], i: usize) -> i64 {
    // ⟨β, α_i^∨⟩
    (0..a.len()).map(|j| a[i][j] * beta[j]).sum()
}

/// Positive roots by the root-string algorithm, height by height.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(a, beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
        for r in &level {
            all.insert(r.clone());
        }
        roots.extend(level.iter().cloned());
    }
    roots
}

impl RootCatalog {
    pub fn from_cartan(label: &str, cartan: Vec<Vec<i64>>) -> Self {
        let positive_roots = positive_roots(&cartan);
        let symmetrizer = symmetrizer(&cartan);
        RootCatalog {
            label: label.into(),
            rank: cartan.len(),
            cartan,
            positive_roots,
            symmetrizer,
        }
    }

    /// Parses `A3`, `B3`, `C3`, `D4`, `E6`, `E7`, `E8`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || CoxError::Parse(format!("unknown root system type {s:?}"));
        let (family, rank) = s.split_at(1);
        let n: usize = rank.parse().map_err(|_| bad())?;
        let cartan = match (family, n) {
            ("A", n) if n >= 1 => chain_cartan(n),
            ("B", n) if n >= 2 => {
                let mut a = chain_cartan(n);
                a[n - 1][n - 2] = -2;
                a
            }
            ("C", n) if n >= 2 => {
                let mut a = chain_cartan(n);
                a[n - 2][n - 1] = -2;
                a
            }
            ("D", n) if n >= 4 => {
                let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((n - 3, n - 1));
                cartan_from_edges(n, &edges)
            }
            ("E", n @ 6..=8) => {
                // nodes 0,2,3,...,n−1 form a chain and node 1 hangs off node 3
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                cartan_from_edges(n, &edges)
            }
            _ => return Err(bad()),
        };
        Ok(RootCatalog::from_cartan(s, cartan))
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Coxeter number `2|Φ⁺|/rank` of an irreducible system.
    pub fn coxeter_number(&self) -> Rational {
        Rational::new(BigInt::from(2 * self.positive_roots.len()), BigInt::from(self.rank))
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan.iter().flatten().all(|&x| x >= -1)
    }

    /// Invariant bilinear form on simple-root coordinates.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += u[i] * v[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `s_α(β) = β − ⟨β, α^∨⟩ α`.
    pub fn reflect(&self, alpha: &[i64], beta: &[i64]) -> Vec<i64> {
        let c = 2 * self.inner(beta, alpha) / self.inner(alpha, alpha);
        beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect()
    }
}

/// Determinant of the Cartan matrix.
pub fn connection_index(cat: &RootCatalog) -> i64 {
    det_i64(&cat.cartan)
}

fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Subset sums over all `rank`-subsets of positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShephardSums {
    /// `Σ |det|`.
    pub abs_sum: u128,
    /// `Σ det²`.
    pub square_sum: u128,
    /// Number of linearly independent subsets.
    pub bases: u64,
}

fn subsets_from(roots: &[Vec<i64>], n: usize, first: usize) -> ShephardSums {
    let mut out = ShephardSums {
        abs_sum: 0,
        square_sum: 0,
        bases: 0,
    };
    let mut idx = vec![first];
    let mut m: Vec<Vec<i64>> = Vec::with_capacity(n);
    fn rec(roots: &[Vec<i64>], n: usize, idx: &mut Vec<usize>, m: &mut Vec<Vec<i64>>, out: &mut ShephardSums) {
        if idx.len() == n {
            m.clear();
            m.extend(idx.iter().map(|&i| roots[i].clone()));
            let d = det_i64(m) as i128;
            if d != 0 {
                out.abs_sum += d.unsigned_abs();
                out.square_sum += (d * d) as u128;
                out.bases += 1;
            }
            return;
        }
        let start = idx.last().map_or(0, |&i| i + 1);
        for i in start..roots.len() {
            idx.push(i);
            rec(roots, n, idx, m, out);
            idx.pop();
        }
    }
    rec(roots, n, &mut idx, &mut m, &mut out);
    out
}

fn merge(a: ShephardSums, b: ShephardSums) -> ShephardSums {
    ShephardSums {
        abs_sum: a.abs_sum + b.abs_sum,
        square_sum: a.square_sum + b.square_sum,
        bases: a.bases + b.bases,
    }
}

/// Shephard sums, split into blocks by the first chosen root.
pub fn shephard_sums(cat: &RootCatalog, limits: &Limits, exec: Exec) -> Result<ShephardSums> {
    let n = cat.rank;
    if n > MAX_SHEPHARD_RANK {
        return Err(CoxError::InvalidArgument(format!(
            "Shephard sum limited to rank {MAX_SHEPHARD_RANK}, got {n}"
        )));
    }
    let count = binom_u128(cat.positive_roots.len(), n);
    if count > u128::from(limits.subset_cap) {
        return Err(CoxError::SubsetCapExceeded {
            count: u64::try_from(count).unwrap_or(u64::MAX),
            cap: limits.subset_cap,
        });
    }
    let roots = &cat.positive_roots;
    let zero = ShephardSums {
        abs_sum: 0,
        square_sum: 0,
        bases: 0,
    };
    let firsts = 0..roots.len().saturating_sub(n - 1);
    let sums = match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => firsts
            .into_par_iter()
            .map(|f| subsets_from(roots, n, f))
            .reduce(|| zero.clone(), merge),
        _ => firsts.map(|f| subsets_from(roots, n, f)).fold(zero.clone(), merge),
    };
    Ok(sums)
}

/// `Vol(Z_W)` in units of the root-lattice covolume: `Σ |det(r)|` over root bases.
pub fn shephard_sum(cat: &RootCatalog, limits: &Limits) -> Result<u128> {
    Ok(shephard_sums(cat, limits, Exec::default())?.abs_sum)
}

/// Ambient volume `shephard_sum · √I(W)` for simply-laced systems, whose root lattice has
/// covolume `√I(W)` when roots have squared length 2.
pub fn ambient_volume(cat: &RootCatalog, sum: u128) -> Option<SurdSum> {
    cat.is_simply_laced().then(|| {
        SurdSum::term(
            Rational::from_integer(BigInt::from(sum)),
            u64::try_from(connection_index(cat)).expect("positive connection index"),
        )
    })
}

/// Output of the `zonotope` command.
#[derive(Clone, Debug, Serialize)]
pub struct ZonotopeSummary {
    pub label: String,
    pub num_positive_roots: usize,
    pub shephard_sum: u128,
    pub connection_index: i64,
    /// `None` outside the simply-laced types.
    pub volume: Option<String>,
}

pub fn zonotope_summary(cat: &RootCatalog, limits: &Limits) -> Result<ZonotopeSummary> {
    let s = shephard_sum(cat, limits)?;
    Ok(ZonotopeSummary {
        label: cat.label.clone(),
        num_positive_roots: cat.num_positive_roots(),
        shephard_sum: s,
        connection_index: connection_index(cat),
        volume: ambient_volume(cat, s).map(|v| v.to_string()),
    })
}

/// One stratum of maximal-rank reflection subgroups `W″` with the Möbius values
/// `μ(W′, W″)` of the subgroups `W′ ⊇ W″` that contribute.
struct Stratum {
    components: &'static [&'static str],
    count: u64,
    mobius: &'static [(&'static [&'static str], i64)],
}

/// Maximal-rank reflection subgroups of `W(E₆)` up to the strata that contribute, with their
/// multiplicities and Möbius coefficients.
const E6_STRATA: &[Stratum] = &[
    Stratum {
        components: &["E6"],
        count: 1,
        mobius: &[(&["E6"], 1)],
    },
    Stratum {
        components: &["A1", "A5"],
        count: 36,
        mobius: &[(&["A1", "A5"], 1), (&["E6"], -1)],
    },
    Stratum {
        components: &["A2", "A2", "A2"],
        count: 40,
        mobius: &[(&["A2", "A2", "A2"], 1), (&["E6"], -1)],
    },
];

/// Coxeter-number multiset of a product of root systems.
fn coxeter_multiset(cats: &[RootCatalog]) -> Vec<i64> {
    let mut out = Vec::new();
    for c in cats {
        let h = c.coxeter_number();
        let h = i64::try_from(h.to_integer()).expect("integral Coxeter number");
        out.extend(std::iter::repeat_n(h, c.rank));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn catalogs(names: &[&str]) -> Result<Vec<RootCatalog>> {
    names.iter().map(|s| RootCatalog::parse(s)).collect()
}

/// `Vol(Z_{E₆}) = Σ_{W″} Π h_i(W″) Σ_{W′} μ(W′,W″)/√I(W′)`, evaluated exactly in `Q(√3)` and
/// compared with `√3·895536` and with the Shephard sum times `√I(E₆)`.
pub fn verify_volume_theorem_e6(limits: &Limits) -> Result<Report> {
    let mut rep = Report::new("volume-theorem", "E6");
    let mut total = SurdSum::zero();
    let mut strata = Vec::new();
    for s in E6_STRATA {
        let cats = catalogs(s.components)?;
        let multiset = coxeter_multiset(&cats);
        let prod: i64 = multiset.iter().product();
        let mut inner = SurdSum::zero();
        for (names, mu) in s.mobius {
            let idx: i64 = catalogs(names)?.iter().map(connection_index).product();
            inner = inner.add(&SurdSum::inv_sqrt(rint(*mu), idx as u64));
        }
        let term = inner.scale(&Rational::from_integer(BigInt::from(prod) * BigInt::from(s.count)));
        strata.push(json!({
            "type": s.components.join("x"),
            "count": s.count,
            "coxeter_numbers": multiset,
            "connection_index": cats.iter().map(connection_index).product::<i64>(),
            "term": term.to_string(),
        }));
        total = total.add(&term);
    }
    let expected = SurdSum::term(rint(895536), 3);
    rep.compare(total == expected, || format!("strata sum {total}, expected {expected}"));
    let e6 = RootCatalog::parse("E6")?;
    let sum = shephard_sum(&e6, limits)?;
    let shephard = ambient_volume(&e6, sum).expect("E6 is simply laced");
    rep.compare(total == shephard, || {
        format!("strata sum {total}, Shephard volume {shephard}")
    });
    Ok(rep.with_details(json!({
        "strata": strata,
        "volume": total.to_string(),
        "shephard_sum": sum.to_string(),
    })))
}

fn cyc_vec(v: &[i64]) -> Vec<Cyc> {
    v.iter().map(|&x| Cyc::from_int(x)).collect()
}

/// Zonotope volume equals the arrangement-Laplacian determinant on unimodular systems:
/// `Σ|det(r)| = Σ det(r)² = det(Σ_r r rᵀ)` in simple-root coordinates, and for `A_n` the
/// graphic arrangement of `K_{n+1}` gives `pdet = (n+1)·Σ|det(r)| = (n+1)^n`.
pub fn verify_unimodular(cat: &RootCatalog, limits: &Limits) -> Result<Report> {
    let n = cat.rank;
    let sums = shephard_sums(cat, limits, Exec::default())?;
    let mut rep = Report::new("unimodular", &cat.label);
    rep.compare(sums.abs_sum == sums.square_sum, || {
        format!("Σ|det| = {} but Σdet² = {}", sums.abs_sum, sums.square_sum)
    });
    let normals: Vec<Vec<Cyc>> = cat.positive_roots.iter().map(|r| cyc_vec(r)).collect();
    let own: Vec<Cyc> = cat
        .positive_roots
        .iter()
        .map(|r| Cyc::from_int(r.iter().map(|x| x * x).sum()))
        .collect();
    let k = normals.len();
    let arr = ArrLaplacian::with_norms(Matrix::identity(n), normals, &own, vec![0; k])?;
    let det = crate::linalg::det_bareiss(&arr.numeric_matrix(&[rint(1)]));
    let expected = Cyc::from_rational(Rational::from_integer(BigInt::from(sums.square_sum)));
    rep.compare(det == expected, || {
        format!("det of the root Laplacian {det}, Σdet² {}", sums.square_sum)
    });
    let mut details = json!({"abs_sum": sums.abs_sum.to_string(), "square_sum": sums.square_sum.to_string()});
    if cat.label.starts_with('A') {
        let m = n + 1;
        let mut graphic = Vec::new();
        let mut edges = 0;
        for i in 0..m {
            for j in i + 1..m {
                let mut v = vec![0i64; m];
                v[i] = 1;
                v[j] = -1;
                graphic.push(cyc_vec(&v));
                edges += 1;
            }
        }
        let g = ArrLaplacian::with_norms(
            Matrix::identity(m),
            graphic,
            &vec![Cyc::from_int(2); edges],
            vec![0; edges],
        )?;
        let pdet = pseudodeterminant(&g.numeric_matrix(&[rint(1)]));
        let oracle = pseudodeterminant(&complete_graph_laplacian(m, &vec![rint(1); edges]));
        let power = Rational::from_integer(BigInt::from(m).pow(n as u32));
        rep.compare(pdet == Cyc::from_rational(oracle.clone()), || {
            format!("graphic pdet {pdet}, graph Laplacian {oracle}")
        });
        rep.compare(oracle == power, || {
            format!("graph Laplacian pdet {oracle}, (n+1)^n = {power}")
        });
        let scaled = Rational::from_integer(BigInt::from(sums.abs_sum) * BigInt::from(m));
        rep.compare(oracle == scaled, || {
            format!("graph Laplacian pdet {oracle}, (n+1)·Σ|det| = {scaled}")
        });
        details["graphic_pdet"] = json!(crate::scalar::ring::fmt_rational(&oracle));
    }
    Ok(rep.with_details(details))
}

/// Reflection closure of a set of roots: the root subsystem they generate.
pub fn generated_subsystem(cat: &RootCatalog, gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        let neg: Vec<i64> = g.iter().map(|x| -x).collect();
        for v in [g.clone(), neg] {
            if all.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    while let Some(beta) = stack.pop() {
        for g in gens {
            let v = cat.reflect(g, &beta);
            if all.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    all.into_iter().collect()
}

/// Simple system of a root subsystem with respect to the ambient positivity: its
/// indecomposable positive roots.
pub fn subsystem_base(subsystem: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let pos: Vec<&Vec<i64>> = subsystem.iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    let set: HashSet<&Vec<i64>> = pos.iter().copied().collect();
    pos.iter()
        .filter(|&&beta| {
            !pos.iter().any(|&a| {
                let rest: Vec<i64> = beta.iter().zip(a).map(|(b, x)| b - x).collect();
                set.contains(&rest)
            })
        })
        .map(|&b| b.clone())
        .collect()
}

/// Cartan determinants of the irreducible components of a base.
fn component_indices(cat: &RootCatalog, base: &[Vec<i64>]) -> Vec<i64> {
    let k = base.len();
    let cartan: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| 2 * cat.inner(&base[i], &base[j]) / cat.inner(&base[i], &base[i]))
                .collect()
        })
        .collect();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..k {
                if !seen[b] && cartan[a][b] != 0 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        comp.sort();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&a| comp.iter().map(|&b| cartan[a][b]).collect())
            .collect();
        out.push(det_i64(&sub));
    }
    out.sort();
    out
}

/// Every root basis `r` of the ambient space is a `Z`-basis of the root lattice of the
/// subsystem `Φ′` it generates, so `|det r| = [Q : ZΦ′]`; in simply-laced types this index
/// squared is `I(W′)/I(W)` with `I(W′)` the product of the component Cartan determinants.
pub fn verify_root_bases(cat: &RootCatalog) -> Result<Report> {
    let n = cat.rank;
    if n > 3 {
        return Err(CoxError::InvalidArgument(format!(
            "root-basis check limited to rank 3, got {n}"
        )));
    }
    let roots = &cat.positive_roots;
    let ambient = connection_index(cat);
    let mut rep = Report::new("root-bases", &cat.label);
    let mut by_type: std::collections::BTreeMap<String, u64> = Default::default();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let m: Vec<Vec<i64>> = idx.iter().map(|&i| roots[i].clone()).collect();
        let d = det_i64(&m);
        if d != 0 {
            let sub = generated_subsystem(cat, &m);
            let base = subsystem_base(&sub);
            let lattice_index = det_i64(&base).abs();
            let comps = component_indices(cat, &base);
            rep.compare(base.len() == n && d.abs() == lattice_index, || {
                format!(
                    "roots {m:?}: |det| = {}, index of the generated root lattice {lattice_index}",
                    d.abs()
                )
            });
            if cat.is_simply_laced() {
                let prod: i64 = comps.iter().product();
                rep.compare(d * d * ambient == prod, || {
                    format!("roots {m:?}: det² · I(W) = {} but I(W′) = {prod}", d * d * ambient)
                });
            }
            *by_type.entry(format!("{comps:?}")).or_default() += 1;
        }
        // next combination
        let mut i = n;
        while i > 0 && idx[i - 1] == roots.len() - n + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..n {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(rep.with_details(json!({"component_indices": by_type})))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_indices() {
        for (s, np, idx) in [
            ("A1", 1, 2),
            ("A2", 3, 3),
            ("A5", 15, 6),
            ("B3", 9, 2),
            ("C3", 9, 2),
            ("D4", 12, 4),
            ("D5", 20, 4),
            ("E6", 36, 3),
            ("E7", 63, 2),
            ("E8", 120, 1),
        ] {
            let c = RootCatalog::parse(s).unwrap();
            assert_eq!(c.num_positive_roots(), np, "{s}");
            assert_eq!(connection_index(&c), idx, "{s}");
        }
        let e6 = RootCatalog::parse("E6").unwrap();
        assert_eq!(e6.coxeter_number(), rint(12));
        assert_eq!(e6.positive_roots.last().unwrap(), &vec![1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn small_sums() {
        let lim = Limits::default();
        assert_eq!(shephard_sum(&RootCatalog::parse("A2").unwrap(), &lim).unwrap(), 3);
        assert_eq!(shephard_sum(&RootCatalog::parse("A3").unwrap(), &lim).unwrap(), 16);
        assert_eq!(shephard_sum(&RootCatalog::parse("B2").unwrap(), &lim).unwrap(), 7);
        let a = shephard_sums(&RootCatalog::parse("D4").unwrap(), &lim, Exec::Sequential).unwrap();
        let b = shephard_sums(&RootCatalog::parse("D4").unwrap(), &lim, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subset_cap() {
        let lim = Limits {
            subset_cap: 100,
            ..Limits::default()
        };
        let r = shephard_sum(&RootCatalog::parse("D4").unwrap(), &lim);
        assert!(matches!(r, Err(CoxError::SubsetCapExceeded { .. })));
        assert!(shephard_sum(&RootCatalog::parse("E7").unwrap(), &Limits::default()).is_err());
    }

    #[test]
    fn e6_volume() {
        let r = verify_volume_theorem_e6(&Limits::default()).unwrap();
        assert!(r.passed, "{:?}", r.first_discrepancy);
        assert_eq!(r.details["volume"], "sqrt(3)*895536");
    }

    #[test]
    fn unimodular_type_a() {
        for s in ["A2", "A3", "A4"] {
            let r = verify_unimodular(&RootCatalog::parse(s).unwrap(), &Limits::default()).unwrap();
            assert!(r.passed, "{s}: {:?}", r.first_discrepancy);
        }
        let r = verify_unimodular(&RootCatalog::parse("A3").unwrap(), &Limits::default()).unwrap();
        assert_eq!(r.details["graphic_pdet"], "64");
        let r = verify_unimodular(&RootCatalog::parse("B2").unwrap(), &Limits::default()).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn root_bases() {
        for s in ["A2", "A3", "B2", "B3", "C3"] {
            let r = verify_root_bases(&RootCatalog::parse(s).unwrap()).unwrap();
            assert!(r.passed, "{s}: {:?}", r.first_discrepancy);
        }
    }
}
