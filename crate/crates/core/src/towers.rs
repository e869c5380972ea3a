//! Parabolic towers, tower weight systems, Jucys–Murphy elements, the H-matrix and the
//! combinatorial tower spectrum.

use crate::groups::ReflectionGroup;
use crate::linalg::{char_poly_hessenberg, integer_roots, rank_of_vectors, Matrix};
use crate::scalar::{Cyc, LinearForm, Rational, Ring};
use crate::{CoxError, Result};
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeSet;

/// How a tower was specified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TowerSource {
    /// Standard tower from a 0-based generator ordering.
    Ordering(Vec<usize>),
    /// Explicit levels.
    Explicit,
}

/// A chain `{1} = W_0 ≤ W_1 ≤ ⋯ ≤ W_n = W` of parabolic subgroups, each stored by the sorted
/// set of its reflecting hyperplanes (the reflections are all powers of those reflections).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicTower {
    /// `levels[i]` holds the hyperplanes of `W_i`, for `i = 0..=n`.
    pub levels: Vec<Vec<usize>>,
    /// Rank of each level (codimension of its flat).
    pub ranks: Vec<usize>,
    pub source: TowerSource,
}

impl ParabolicTower {
    /// Number of steps `n`.
    pub fn len(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when every step raises the rank by exactly one.
    pub fn is_maximal(&self) -> bool {
        self.ranks.iter().enumerate().all(|(i, &r)| r == i)
    }

    /// Reflection indices of level `i`.
    pub fn reflections_at(&self, g: &ReflectionGroup, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.levels[i]
            .iter()
            .flat_map(|&h| g.hyperplanes()[h].reflections.iter().copied())
            .collect();
        v.sort();
        v
    }

    /// Level (1-based) at which hyperplane `h` first appears.
    pub fn level_of_hyperplane(&self, h: usize) -> usize {
        (1..self.levels.len())
            .find(|&i| self.levels[i].binary_search(&h).is_ok())
            .expect("every hyperplane lies in W_n")
    }

    /// Support of the Jucys–Murphy element `J_i`: reflections in `W_i ∖ W_{i−1}`.
    pub fn jm_support(&self, g: &ReflectionGroup, i: usize) -> Vec<usize> {
        let prev: BTreeSet<usize> = self.levels[i - 1].iter().copied().collect();
        let mut v: Vec<usize> = self.levels[i]
            .iter()
            .filter(|h| !prev.contains(h))
            .flat_map(|&h| g.hyperplanes()[h].reflections.iter().copied())
            .collect();
        v.sort();
        v
    }

    /// JSON export of the levels as reflection-index sets.
    pub fn to_json(&self, g: &ReflectionGroup) -> serde_json::Value {
        let levels: Vec<Vec<usize>> = (0..self.levels.len()).map(|i| self.reflections_at(g, i)).collect();
        serde_json::json!({ "levels": levels, "ranks": self.ranks })
    }
}

fn closure(g: &ReflectionGroup, hyps: &[usize]) -> Vec<usize> {
    g.closure_of_roots(&g.root_span(hyps))
}

fn hyp_rank(g: &ReflectionGroup, hyps: &[usize]) -> usize {
    let roots: Vec<Vec<Cyc>> = hyps.iter().map(|&h| g.hyperplanes()[h].root.clone()).collect();
    rank_of_vectors(&roots)
}

/// Hyperplane of the `k`-th standard generator.
pub fn generator_hyperplane(g: &ReflectionGroup, k: usize) -> usize {
    let s = g.generators()[k];
    let pos = g.reflection_position(s).expect("standard generators are reflections");
    g.reflection_hyperplane(pos)
}

/// Standard tower `W_i` = parabolic closure of `⟨s_{σ(1)}, …, s_{σ(i)}⟩` for a 0-based ordering.
pub fn standard_tower(g: &ReflectionGroup, ordering: &[usize]) -> Result<ParabolicTower> {
    let n = g.generators().len();
    let mut sorted = ordering.to_vec();
    sorted.sort();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(CoxError::InvalidTower(format!(
            "ordering {ordering:?} is not a permutation of the {n} generators"
        )));
    }
    let mut levels = vec![Vec::new()];
    let mut ranks = vec![0];
    let mut gens = Vec::new();
    for (i, &k) in ordering.iter().enumerate() {
        gens.push(generator_hyperplane(g, k));
        let lvl = closure(g, &gens);
        let r = hyp_rank(g, &lvl);
        if r != i + 1 {
            return Err(CoxError::InvalidTower(format!(
                "level {} of the standard tower has rank {r}",
                i + 1
            )));
        }
        levels.push(lvl);
        ranks.push(r);
    }
    if levels[n].len() != g.num_hyperplanes() {
        return Err(CoxError::InvalidTower("top level is not the whole group".into()));
    }
    Ok(ParabolicTower {
        levels,
        ranks,
        source: TowerSource::Ordering(ordering.to_vec()),
    })
}

/// Parses a 1-based generator ordering such as `"1,3,2,4"` into a 0-based one.
pub fn parse_ordering(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .map(|v| v - 1)
                .ok_or_else(|| CoxError::Parse(format!("malformed generator ordering '{s}'")))
        })
        .collect()
}

/// Builds a tower from explicit levels `W_1, …, W_n` given as 0-based reflection-index sets.
/// Repeated levels give non-maximal towers.
pub fn tower_from_reflection_sets(g: &ReflectionGroup, sets: &[Vec<usize>]) -> Result<ParabolicTower> {
    let n = g.rank;
    if sets.len() != n {
        return Err(CoxError::InvalidTower(format!(
            "expected {n} levels W_1..W_n, got {}",
            sets.len()
        )));
    }
    let mut levels = vec![Vec::new()];
    let mut ranks = vec![0];
    for (i, s) in sets.iter().enumerate() {
        let mut hyps = BTreeSet::new();
        for &r in s {
            if r >= g.num_reflections() {
                return Err(CoxError::InvalidTower(format!("reflection index {r} out of range")));
            }
            hyps.insert(g.reflection_hyperplane(r));
        }
        let hyps: Vec<usize> = hyps.into_iter().collect();
        // each level must contain all reflections of its hyperplanes and be closed
        let expected: BTreeSet<usize> = hyps
            .iter()
            .flat_map(|&h| g.hyperplanes()[h].reflections.iter().copied())
            .collect();
        let given: BTreeSet<usize> = s.iter().copied().collect();
        if expected != given || closure(g, &hyps) != hyps {
            return Err(CoxError::InvalidTower(format!(
                "level {} is not the full pointwise stabilizer of its flat",
                i + 1
            )));
        }
        let prev: &Vec<usize> = levels.last().unwrap();
        if !prev.iter().all(|h| hyps.binary_search(h).is_ok()) {
            return Err(CoxError::InvalidTower(format!(
                "level {} does not contain level {i}",
                i + 1
            )));
        }
        let r = hyp_rank(g, &hyps);
        if r > i + 1 {
            return Err(CoxError::InvalidTower(format!(
                "level {} has rank {r} > {}",
                i + 1,
                i + 1
            )));
        }
        levels.push(hyps);
        ranks.push(r);
    }
    if levels[n].len() != g.num_hyperplanes() {
        return Err(CoxError::InvalidTower("top level is not the whole group".into()));
    }
    Ok(ParabolicTower {
        levels,
        ranks,
        source: TowerSource::Explicit,
    })
}

/// Parses a JSON list of lists of reflection indices into a tower.
pub fn parse_tower_json(g: &ReflectionGroup, s: &str) -> Result<ParabolicTower> {
    let sets: Vec<Vec<usize>> = serde_json::from_str(s).map_err(|e| CoxError::Parse(format!("tower JSON: {e}")))?;
    tower_from_reflection_sets(g, &sets)
}

/// Refines a non-maximal tower to a maximal one; `var_map[k]` (0-based) gives the original
/// weight variable of refined block `k`.
pub fn refine_tower(g: &ReflectionGroup, t: &ParabolicTower) -> (ParabolicTower, Vec<usize>) {
    if t.is_maximal() {
        let n = t.len();
        return (t.clone(), (0..n).collect());
    }
    let mut levels = vec![Vec::new()];
    let mut ranks = vec![0];
    let mut var_map = Vec::new();
    for i in 1..t.levels.len() {
        let target = &t.levels[i];
        while ranks.last().copied().unwrap() < t.ranks[i] {
            let cur: Vec<usize> = levels.last().unwrap().clone();
            let span = g.root_span(&cur);
            let add = *target
                .iter()
                .find(|&&h| !span.contains(&g.hyperplanes()[h].root))
                .expect("rank jump has a new root");
            let mut next = cur.clone();
            next.push(add);
            let next = closure(g, &next);
            ranks.push(hyp_rank(g, &next));
            levels.push(next);
            var_map.push(i - 1);
        }
    }
    (
        ParabolicTower {
            levels,
            ranks,
            source: t.source.clone(),
        },
        var_map,
    )
}

/// Conjugate tower `g T g^{-1}`.
pub fn conjugate_tower(grp: &ReflectionGroup, t: &ParabolicTower, g: usize) -> ParabolicTower {
    let m = grp.matrix(g);
    let image: Vec<usize> = grp
        .hyperplanes()
        .iter()
        .map(|h| {
            let v = m.mul_vec(&h.root);
            grp.hyperplane_of_root(&v).expect("group permutes its hyperplanes")
        })
        .collect();
    let levels = t
        .levels
        .iter()
        .map(|l| {
            let mut v: Vec<usize> = l.iter().map(|&h| image[h]).collect();
            v.sort();
            v
        })
        .collect();
    ParabolicTower {
        levels,
        ranks: t.ranks.clone(),
        source: TowerSource::Explicit,
    }
}

/// Assignment of a weight variable to each reflection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSystem {
    pub num_vars: usize,
    /// `assignment[i]` is the 0-based variable of reflection `i`.
    pub assignment: Vec<usize>,
}

impl WeightSystem {
    /// Tower weights: reflection in `W_i ∖ W_{i−1}` gets `ω_i`.
    pub fn from_tower(g: &ReflectionGroup, t: &ParabolicTower) -> Self {
        let assignment = (0..g.num_reflections())
            .map(|r| t.level_of_hyperplane(g.reflection_hyperplane(r)) - 1)
            .collect();
        WeightSystem {
            num_vars: t.len(),
            assignment,
        }
    }

    /// One independent variable per reflection.
    pub fn per_reflection(g: &ReflectionGroup) -> Self {
        WeightSystem {
            num_vars: g.num_reflections(),
            assignment: (0..g.num_reflections()).collect(),
        }
    }

    /// One variable per hyperplane.
    pub fn per_hyperplane(g: &ReflectionGroup) -> Self {
        WeightSystem {
            num_vars: g.num_hyperplanes(),
            assignment: (0..g.num_reflections()).map(|r| g.reflection_hyperplane(r)).collect(),
        }
    }

    /// All reflections share `ω_1`.
    pub fn uniform(g: &ReflectionGroup) -> Self {
        WeightSystem {
            num_vars: 1,
            assignment: vec![0; g.num_reflections()],
        }
    }

    /// True when reflections sharing a hyperplane share a variable.
    pub fn is_hyperplane_constant(&self, g: &ReflectionGroup) -> bool {
        g.hyperplanes().iter().all(|h| {
            h.reflections
                .iter()
                .all(|&r| self.assignment[r] == self.assignment[h.reflections[0]])
        })
    }

    /// Numeric weight of each reflection for given variable values.
    pub fn numeric(&self, values: &[Rational]) -> Vec<Rational> {
        self.assignment.iter().map(|&v| values[v].clone()).collect()
    }

    /// Total weight `w(R)` as a linear form.
    pub fn total_form(&self) -> LinearForm {
        let mut c = vec![0i64; self.num_vars];
        for &v in &self.assignment {
            c[v] += 1;
        }
        LinearForm::new(c)
    }
}

/// The upper-triangular H-matrix of a maximal tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HMatrix {
    /// `rows[j][i]`, zero for `i < j` (0-based).
    pub rows: Vec<Vec<i64>>,
}

impl HMatrix {
    /// Row reads `λ_j = Σ_{i ≥ j} ω_i H[j][i]`.
    pub fn spectrum(&self) -> Vec<LinearForm> {
        self.rows.iter().map(|r| LinearForm::new(r.clone())).collect()
    }
}

/// Computes the H-matrix of a maximal tower from component Coxeter numbers.
pub fn h_matrix(g: &ReflectionGroup, t: &ParabolicTower) -> Result<HMatrix> {
    if !t.is_maximal() {
        return Err(CoxError::InvalidTower(
            "H-matrix needs a maximal tower; refine first".into(),
        ));
    }
    let n = t.len();
    let comps: Vec<Vec<crate::groups::ComponentInfo>> = t.levels.iter().map(|l| g.components_of(l)).collect();
    let mut rows = vec![vec![0i64; n]; n];
    for j in 1..=n {
        // the component of W_j that is not already a component of W_{j−1}
        let fresh: Vec<&crate::groups::ComponentInfo> = comps[j]
            .iter()
            .filter(|c| !comps[j - 1].iter().any(|d| d.hyperplanes == c.hyperplanes))
            .collect();
        if fresh.len() != 1 {
            return Err(CoxError::Internal(format!(
                "step {j} created {} new components",
                fresh.len()
            )));
        }
        let seed = fresh[0].hyperplanes[0];
        let mut prev_h = Rational::from_integer(0.into());
        for i in j..=n {
            let c = comps[i]
                .iter()
                .find(|c| c.hyperplanes.binary_search(&seed).is_ok())
                .expect("seed hyperplane persists");
            let diff = c.coxeter_number.clone() - &prev_h;
            rows[j - 1][i - 1] = crate::scalar::ring::rational_to_i64(&diff)
                .ok_or_else(|| CoxError::Internal(format!("non-integral H-matrix entry at ({j},{i})")))?;
            prev_h = c.coxeter_number.clone();
        }
    }
    Ok(HMatrix { rows })
}

/// Tower spectrum as linear forms in `ω_1..ω_n`; non-maximal towers are refined and the
/// refined variables identified with the original ones.
pub fn tower_spectrum(g: &ReflectionGroup, t: &ParabolicTower) -> Result<Vec<LinearForm>> {
    let (rt, var_map) = refine_tower(g, t);
    let hm = h_matrix(g, &rt)?;
    let n = t.len();
    Ok(hm.spectrum().into_iter().map(|f| f.pull_back(&var_map, n)).collect())
}

/// Per-index summary of a JM spectrum check.
#[derive(Clone, Debug, Serialize)]
pub struct JmLevelReport {
    pub index: usize,
    /// `(eigenvalue, multiplicity)` pairs, increasing.
    pub spectrum: Vec<(i64, usize)>,
    pub lower_bound: i64,
    pub upper_bound: i64,
    pub integral: bool,
    pub within_bounds: bool,
}

/// Result of checking one tower's JM elements.
#[derive(Clone, Debug, Serialize)]
pub struct JmReport {
    pub representation: String,
    pub levels: Vec<JmLevelReport>,
    /// JM matrices commute pairwise (reflection representation only).
    pub commute: Option<bool>,
}

impl JmReport {
    pub fn ok(&self) -> bool {
        self.levels.iter().all(|l| l.integral && l.within_bounds) && self.commute.unwrap_or(true)
    }
}

/// Which representation to test JM spectra on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JmRep {
    Reflection,
    Regular,
}

/// Maximum group order for the regular-representation check.
pub const REGULAR_REP_MAX_ORDER: usize = 400;

fn bounds(g: &ReflectionGroup, t: &ParabolicTower, i: usize) -> (i64, i64) {
    let nh = (t.levels[i].len() - t.levels[i - 1].len()) as i64;
    let nr = t.jm_support(g, i).len() as i64;
    (-nh, nr)
}

/// Multiplies a group-algebra vector on the left by `Σ_{τ ∈ support} τ`.
fn left_mul_sum(g: &ReflectionGroup, support: &[usize], v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::from_integer(0.into()); v.len()];
    for (x, c) in v.iter().enumerate() {
        if Ring::is_zero(c) {
            continue;
        }
        for &r in support {
            let y = g.mul(g.reflections()[r], x);
            out[y] += c;
        }
    }
    out
}

fn jm_regular(g: &ReflectionGroup, t: &ParabolicTower, i: usize) -> JmLevelReport {
    let support = t.jm_support(g, i);
    let (lo, hi) = bounds(g, t, i);
    let n = g.order();
    let zero = Rational::from_integer(0.into());
    let mut e = vec![zero.clone(); n];
    e[g.identity()] = Rational::from_integer(1.into());
    // P(J)·1 with P(x) = ∏_{lo ≤ k ≤ hi} (x − k); it vanishes iff the spectrum is integral in range
    let mut v = e.clone();
    for k in lo..=hi {
        let jv = left_mul_sum(g, &support, &v);
        let kk = Rational::from_integer(k.into());
        v = jv.iter().zip(&v).map(|(a, b)| a - &kk * b).collect();
    }
    let annihilated = v.iter().all(Ring::is_zero);
    let mut spectrum = Vec::new();
    if annihilated {
        // multiplicity of k = |W| · [1] E_k with E_k = ∏_{j ≠ k} (J − j)/(k − j)
        for k in lo..=hi {
            let mut v = e.clone();
            for j in lo..=hi {
                if j == k {
                    continue;
                }
                let jv = left_mul_sum(g, &support, &v);
                let jj = Rational::from_integer(j.into());
                let d = Rational::from_integer((k - j).into());
                v = jv.iter().zip(&v).map(|(a, b)| (a - &jj * b) / &d).collect();
            }
            let mult = &v[g.identity()] * Rational::from_integer(BigInt::from(n));
            let m = crate::scalar::ring::rational_to_i64(&mult).unwrap_or(-1);
            if m != 0 {
                spectrum.push((k, m.max(0) as usize));
            }
        }
    }
    let total: usize = spectrum.iter().map(|p| p.1).sum();
    JmLevelReport {
        index: i,
        spectrum,
        lower_bound: lo,
        upper_bound: hi,
        integral: annihilated && total == n,
        within_bounds: annihilated,
    }
}

/// Matrix of `J_i` in the reflection representation.
pub fn jm_matrix(g: &ReflectionGroup, t: &ParabolicTower, i: usize) -> Matrix<Cyc> {
    let mut m = Matrix::<Cyc>::zeros(g.dim, g.dim);
    for r in t.jm_support(g, i) {
        m = m.add(g.reflection_matrix(r));
    }
    m
}

fn jm_reflection(g: &ReflectionGroup, t: &ParabolicTower, i: usize) -> JmLevelReport {
    let (lo, hi) = bounds(g, t, i);
    let m = jm_matrix(g, t, i);
    // det(xI − J) from Hessenberg; coefficients must be rational for an integral spectrum
    let cp = char_poly_hessenberg(&m);
    let rational: Option<Vec<BigInt>> = cp
        .iter()
        .map(|c| c.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer()))
        .collect();
    let mut spectrum = Vec::new();
    let mut integral = false;
    if let Some(coeffs) = rational {
        let (roots, rest) = integer_roots(&coeffs);
        integral = rest.len() == 1;
        let mut sorted = roots.clone();
        sorted.sort();
        for k in sorted {
            match spectrum.last_mut() {
                Some((v, c)) if *v == k => *c += 1,
                _ => spectrum.push((k, 1)),
            }
        }
    }
    let within = integral && spectrum.iter().all(|&(k, _)| k >= lo && k <= hi);
    JmLevelReport {
        index: i,
        spectrum,
        lower_bound: lo,
        upper_bound: hi,
        integral,
        within_bounds: within,
    }
}

/// Checks integrality and bounds of all JM spectra of a tower.
pub fn jm_spectrum_check(g: &ReflectionGroup, t: &ParabolicTower, rep: JmRep) -> Result<JmReport> {
    let n = t.len();
    match rep {
        JmRep::Regular => {
            if g.order() > REGULAR_REP_MAX_ORDER {
                return Err(CoxError::InvalidArgument(format!(
                    "regular representation check needs |W| ≤ {REGULAR_REP_MAX_ORDER}"
                )));
            }
            Ok(JmReport {
                representation: "regular".into(),
                levels: (1..=n).map(|i| jm_regular(g, t, i)).collect(),
                commute: None,
            })
        }
        JmRep::Reflection => {
            let mats: Vec<Matrix<Cyc>> = (1..=n).map(|i| jm_matrix(g, t, i)).collect();
            let mut commute = true;
            for a in 0..n {
                for b in a + 1..n {
                    if mats[a].mul(&mats[b]) != mats[b].mul(&mats[a]) {
                        commute = false;
                    }
                }
            }
            Ok(JmReport {
                representation: "reflection".into(),
                levels: (1..=n).map(|i| jm_reflection(g, t, i)).collect(),
                commute: Some(commute),
            })
        }
    }
}

/// All `n!` generator orderings, in lexicographic order.
pub fn all_orderings(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::groups::build_group;

    fn grp(d: &str) -> ReflectionGroup {
        build_group(d, &Limits::default()).unwrap()
    }

    #[test]
    fn sym3_h_matrix() {
        let g = grp("A2");
        let t = standard_tower(&g, &[0, 1]).unwrap();
        assert_eq!(h_matrix(&g, &t).unwrap().rows, vec![vec![2, 1], vec![0, 3]]);
    }

    #[test]
    fn rank_one() {
        let g = grp("G(5,1,1)");
        let t = standard_tower(&g, &[0]).unwrap();
        assert_eq!(h_matrix(&g, &t).unwrap().rows, vec![vec![5]]);
    }

    #[test]
    fn sym4_jm_sizes() {
        let g = grp("A3");
        let t = standard_tower(&g, &[0, 1, 2]).unwrap();
        let sizes: Vec<usize> = (1..=3).map(|i| t.jm_support(&g, i).len()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn i2_6_blocks() {
        let g = grp("I2(6)");
        let t = standard_tower(&g, &[0, 1]).unwrap();
        assert_eq!(t.jm_support(&g, 1).len(), 1);
        assert_eq!(t.jm_support(&g, 2).len(), 5);
    }

    #[test]
    fn sym3_regular_jm() {
        let g = grp("A2");
        let t = standard_tower(&g, &[0, 1]).unwrap();
        let r = jm_spectrum_check(&g, &t, JmRep::Regular).unwrap();
        assert!(r.ok());
        assert_eq!(r.levels[1].spectrum, vec![(-2, 1), (-1, 2), (1, 2), (2, 1)]);
    }

    #[test]
    fn non_maximal_tower_refines() {
        let g = grp("A3");
        let t = standard_tower(&g, &[0, 1, 2]).unwrap();
        let sets = vec![
            t.reflections_at(&g, 1),
            t.reflections_at(&g, 1),
            t.reflections_at(&g, 3),
        ];
        let nm = tower_from_reflection_sets(&g, &sets).unwrap();
        assert!(!nm.is_maximal());
        let spec = tower_spectrum(&g, &nm).unwrap();
        // ω2 never appears; all forms evaluate to h at ω = 1
        assert!(spec.iter().all(|f| f.coeffs[1] == 0 && f.sum() == 4));
    }
}
