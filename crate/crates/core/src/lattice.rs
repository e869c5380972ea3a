//! Intersection lattices of hyperplane arrangements, the Laplacian recursion over flats,
//! the matrix-forest expansion and the identity among parabolic Coxeter numbers.

use crate::config::Limits;
use crate::factorization::{enumerate_series_formal, Exec, Target};
use crate::groups::{ComponentInfo, ReflectionGroup};
use crate::laplacian::{arr_from_group, char_poly, w_laplacian_formal, ArrLaplacian};
use crate::linalg::{integer_roots, null_space, Matrix, SpanBasis};
use crate::report::Report;
use crate::scalar::poly::w_to_q;
use crate::scalar::{Cyc, PolyQ, PolyW, QAlgebra, Rational, Ring};
use crate::towers::WeightSystem;
use crate::{CoxError, Result};
use num_bigint::BigInt;
use serde_json::json;
use std::collections::HashSet;

/// Largest arrangement whose lattice is enumerated.
pub const MAX_LATTICE_HYPERPLANES: usize = 30;

/// A flat `X`, keyed by the closed set of hyperplanes containing it.
#[derive(Clone, Debug)]
pub struct Flat {
    /// Indices of all hyperplanes containing `X`, sorted.
    pub hyperplanes: Vec<usize>,
    pub codim: usize,
    /// Basis of the subspace `X`.
    pub basis: Vec<Vec<Cyc>>,
    /// Irreducible components of the parabolic subgroup `W_X` (empty for bare arrangements).
    pub components: Vec<ComponentInfo>,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "hyperplanes": self.hyperplanes,
            "codim": self.codim,
            "basis": self.basis.iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "components": self.components.iter().map(|c| json!({
                "hyperplanes": c.hyperplanes,
                "rank": c.rank,
                "num_reflections": c.num_reflections,
                "coxeter_number": crate::scalar::ring::fmt_rational(&c.coxeter_number),
            })).collect::<Vec<_>>(),
        })
    }
}

/// All flats of an arrangement, grouped by codimension.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    pub dim: usize,
    /// `levels[k]` lists the flats of codimension `k`.
    pub levels: Vec<Vec<Flat>>,
}

impl IntersectionLattice {
    pub fn flats(&self) -> impl Iterator<Item = &Flat> {
        self.levels.iter().flatten()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "dim": self.dim,
            "counts": self.counts(),
            "flats": self.flats().map(|f| f.to_json()).collect::<Vec<_>>(),
        })
    }
}

fn span_of(dim: usize, normals: &[Vec<Cyc>], set: &[usize]) -> SpanBasis<Cyc> {
    let mut s = SpanBasis::new(dim);
    for &i in set {
        s.insert(&normals[i]);
    }
    s
}

/// Closed hyperplane sets of every flat, by codimension; the normals' span decides
/// containment, since `X ⊂ H` exactly when the normal of `H` lies in `X^⊥`.
fn lattice_sets(dim: usize, normals: &[Vec<Cyc>]) -> Result<Vec<Vec<Vec<usize>>>> {
    if normals.len() > MAX_LATTICE_HYPERPLANES {
        return Err(CoxError::LatticeCapExceeded {
            count: normals.len(),
            cap: MAX_LATTICE_HYPERPLANES,
        });
    }
    let rank = span_of(dim, normals, &(0..normals.len()).collect::<Vec<_>>()).rank();
    let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for c in 0..rank {
        let mut next = Vec::new();
        for flat in &levels[c] {
            let mut covered: HashSet<usize> = flat.iter().copied().collect();
            for h in 0..normals.len() {
                if covered.contains(&h) {
                    continue;
                }
                let mut span = span_of(dim, normals, flat);
                span.insert(&normals[h]);
                let closed: Vec<usize> = (0..normals.len()).filter(|&j| span.contains(&normals[j])).collect();
                covered.extend(closed.iter().copied());
                if seen.insert(closed.clone()) {
                    next.push(closed);
                }
            }
        }
        next.sort();
        levels.push(next);
    }
    Ok(levels)
}

/// Subspace `X = ∩ H` for the hyperplanes with the given normals under the form `G`.
fn flat_basis(form: &Matrix<Cyc>, normals: &[Vec<Cyc>], set: &[usize]) -> Vec<Vec<Cyc>> {
    let dim = form.rows();
    if set.is_empty() {
        return (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Cyc::one() } else { Cyc::zero() })
                    .collect()
            })
            .collect();
    }
    let rows: Vec<Vec<Cyc>> = set
        .iter()
        .map(|&h| {
            let r = &normals[h];
            (0..dim)
                .map(|j| (0..dim).fold(Cyc::zero(), |acc, k| acc.add(&r[k].conj().mul(form.get(k, j)))))
                .collect()
        })
        .collect();
    null_space(&Matrix::from_rows(rows))
}

/// Smallest flat-closed hyperplane set containing `hyps`.
pub fn flat_closure(g: &ReflectionGroup, hyps: &[usize]) -> Vec<usize> {
    g.closure_of_roots(&g.root_span(hyps))
}

/// Intersection lattice of the reflection arrangement, with parabolic component data.
pub fn enumerate_flats(g: &ReflectionGroup) -> Result<IntersectionLattice> {
    let normals: Vec<Vec<Cyc>> = g.hyperplanes().iter().map(|h| h.root.clone()).collect();
    let sets = lattice_sets(g.dim, &normals)?;
    let levels = sets
        .into_iter()
        .enumerate()
        .map(|(codim, lvl)| {
            lvl.into_iter()
                .map(|hyps| Flat {
                    basis: flat_basis(g.form(), &normals, &hyps),
                    components: g.components_of(&hyps),
                    codim,
                    hyperplanes: hyps,
                })
                .collect()
        })
        .collect();
    Ok(IntersectionLattice { dim: g.dim, levels })
}

/// Intersection lattice of an explicit arrangement.
pub fn arrangement_flats(arr: &ArrLaplacian) -> Result<IntersectionLattice> {
    let sets = lattice_sets(arr.dim, &arr.normals)?;
    let levels = sets
        .into_iter()
        .enumerate()
        .map(|(codim, lvl)| {
            lvl.into_iter()
                .map(|hyps| Flat {
                    basis: flat_basis(&arr.form, &arr.normals, &hyps),
                    components: Vec::new(),
                    codim,
                    hyperplanes: hyps,
                })
                .collect()
        })
        .collect();
    Ok(IntersectionLattice { dim: arr.dim, levels })
}

fn to_q(p: &PolyW) -> Result<PolyQ> {
    w_to_q(p).ok_or_else(|| CoxError::Internal("characteristic polynomial coefficient not rational".into()))
}

/// Coefficients of `Σ_X pdet(L_{A_X}) x^{dim X}`, reading each pseudodeterminant off the
/// localized characteristic polynomial and checking the coefficients below it vanish.
fn recursion_rhs(arr: &ArrLaplacian, lat: &IntersectionLattice, rep: &mut Report) -> Vec<PolyW> {
    let n = arr.dim;
    let mut rhs = vec![PolyW::zero(); n + 1];
    for flat in lat.flats() {
        let local = arr.localize(&flat.hyperplanes);
        let cp = char_poly(&local.formal_matrix());
        let k = n - flat.codim;
        for (j, c) in cp.iter().enumerate().take(k) {
            rep.compare(c.is_zero(), || {
                format!(
                    "flat {:?}: coefficient x^{j} of its localized polynomial is nonzero",
                    flat.hyperplanes
                )
            });
        }
        rhs[k] = rhs[k].add(&cp[k]);
    }
    rhs
}

fn compare_polys(rep: &mut Report, lhs: &[PolyW], rhs: &[PolyW]) {
    for (k, (a, b)) in lhs.iter().zip(rhs).enumerate() {
        rep.compare(a == b, || format!("coefficient of x^{k}: {a:?} vs {b:?}"));
    }
}

/// `det(x + L_A(ω)) = Σ_X pdet(L_{A_X}(ω)) x^{dim X}` for an explicit arrangement.
pub fn verify_laplacian_recursion_arrangement(arr: &ArrLaplacian, label: &str) -> Result<Report> {
    let lat = arrangement_flats(arr)?;
    let mut rep = Report::new("recursion", label);
    let lhs = char_poly(&arr.formal_matrix());
    let rhs = recursion_rhs(arr, &lat, &mut rep);
    compare_polys(&mut rep, &lhs, &rhs);
    Ok(rep.with_details(json!({"flat_counts": lat.counts()})))
}

/// The recursion for the W-Laplacian: the left side is the characteristic polynomial of
/// `Σ_τ w(τ)(I − ρ(τ))`, the right side uses the reflection arrangement with norms `e_H`.
pub fn verify_laplacian_recursion(g: &ReflectionGroup, ws: &WeightSystem) -> Result<Report> {
    let arr = arr_from_group(g, ws)?;
    let lat = enumerate_flats(g)?;
    let mut rep = Report::new("recursion", &g.label);
    let lhs = char_poly(&w_laplacian_formal(g, ws));
    let rhs = recursion_rhs(&arr, &lat, &mut rep);
    compare_polys(&mut rep, &lhs, &rhs);
    Ok(rep.with_details(json!({"flat_counts": lat.counts()})))
}

/// Weight system on a reflection subgroup induced from the parent's.
pub fn induced_weights(parent: &ReflectionGroup, sub: &ReflectionGroup, ws: &WeightSystem) -> WeightSystem {
    let assignment = sub
        .reflections()
        .iter()
        .map(|&e| {
            let pe = parent
                .element_index(sub.perm(e))
                .expect("subgroup element lies in parent");
            let pos = parent
                .reflection_position(pe)
                .expect("subgroup reflection is a parent reflection");
            ws.assignment[pos]
        })
        .collect();
    WeightSystem {
        num_vars: ws.num_vars,
        assignment,
    }
}

/// Coxeter elements of a possibly reducible parabolic subgroup: products of one Coxeter
/// element from each irreducible component.
fn parabolic_coxeter_elements(
    g: &ReflectionGroup,
    wx: &ReflectionGroup,
    components: &[ComponentInfo],
    limits: &Limits,
) -> Result<Vec<usize>> {
    let mut elems = vec![wx.identity()];
    for comp in components {
        let sub = g.subgroup(&comp.hyperplanes, limits)?;
        let cls = sub.coxeter_class()?;
        let members: Vec<usize> = cls
            .members
            .iter()
            .map(|&e| wx.element_index(sub.perm(e)).expect("component element lies in W_X"))
            .collect();
        elems = elems
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| (a, b)))
            .map(|(a, b)| wx.mul(a, b))
            .collect();
    }
    elems.sort();
    elems.dedup();
    Ok(elems)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

/// Coefficient `x^k` of `det(x + L^T_W(ω))` equals `Σ_{dim X = k} |C_{W_X}(c_X)| ·
/// (reduced factorization weight summed over all Coxeter elements of W_X) / (n−k)!`.
pub fn verify_matrix_forest(g: &ReflectionGroup, ws: &WeightSystem, limits: &Limits) -> Result<Report> {
    let n = g.dim;
    let lat = enumerate_flats(g)?;
    let lhs: Vec<PolyQ> = char_poly(&w_laplacian_formal(g, ws))
        .iter()
        .map(to_q)
        .collect::<Result<_>>()?;
    let mut rhs = vec![PolyQ::zero(); n + 1];
    let mut rep = Report::new("matrix-forest", &g.label);
    for flat in lat.flats() {
        let wx = g.subgroup(&flat.hyperplanes, limits)?;
        let sub_ws = induced_weights(g, &wx, ws);
        let targets = parabolic_coxeter_elements(g, &wx, &flat.components, limits)?;
        let len = flat.codim;
        let series = enumerate_series_formal(
            &wx,
            &sub_ws,
            &Target::Elements(targets.clone()),
            len,
            limits,
            Exec::default(),
        )?;
        let c = targets[0];
        let centralizer = (0..wx.order()).filter(|&e| wx.mul(e, c) == wx.mul(c, e)).count();
        let h_prod = flat
            .components
            .iter()
            .fold(Rational::from_integer(1.into()), |acc, comp| acc * &comp.coxeter_number);
        rep.compare(Rational::from_integer(centralizer.into()) == h_prod, || {
            format!(
                "flat {:?}: centralizer order {centralizer}, Coxeter number product {h_prod}",
                flat.hyperplanes
            )
        });
        let term = series
            .coeff(len)
            .scale_q(&(Rational::from_integer(centralizer.into()) / Rational::from_integer(factorial(len))));
        let k = n - flat.codim;
        rhs[k] = rhs[k].add(&term);
    }
    for (k, (a, b)) in lhs.iter().zip(&rhs).enumerate() {
        rep.compare(a == b, || {
            format!("coefficient of x^{k}: char poly {a:?}, forest sum {b:?}")
        });
    }
    Ok(rep.with_details(json!({"flat_counts": lat.counts()})))
}

/// Normalization of the normal vectors in the Coxeter-number identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormChoice {
    /// `⟨r_H, r_H⟩ = 1`: each component contributes `|R*|/rank`.
    One,
    /// `⟨r_H, r_H⟩ = e_H − 1`: each component contributes `|R|/rank`.
    EhMinusOne,
    /// `⟨r_H, r_H⟩ = e_H`: each component contributes its Coxeter number.
    Eh,
}

impl NormChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "1" | "one" => Ok(NormChoice::One),
            "eh-1" | "e_H-1" => Ok(NormChoice::EhMinusOne),
            "eh" | "e_H" => Ok(NormChoice::Eh),
            _ => Err(CoxError::Parse(format!("unknown norm choice {s:?}"))),
        }
    }

    fn component_value(&self, c: &ComponentInfo) -> Rational {
        let r = Rational::from_integer(BigInt::from(c.rank.max(1)));
        match self {
            NormChoice::One => Rational::from_integer(BigInt::from(c.num_hyperplanes)) / r,
            NormChoice::EhMinusOne => Rational::from_integer(BigInt::from(c.num_reflections)) / r,
            NormChoice::Eh => c.coxeter_number.clone(),
        }
    }

    fn norm_of(&self, order: usize) -> i64 {
        match self {
            NormChoice::One => 1,
            NormChoice::EhMinusOne => order as i64 - 1,
            NormChoice::Eh => order as i64,
        }
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(q + x)^n = Σ_X Π_i q_i(W_X)^{rank_i} x^{dim X}` with `q` chosen by the normalization.
/// The unweighted localized arrangement Laplacian must be `q·I` on the whole group, which is
/// checked too.
pub fn verify_coxeter_identity(g: &ReflectionGroup, norm: NormChoice) -> Result<Report> {
    let comps = g.components();
    if comps.len() != 1 {
        return Err(CoxError::InvalidArgument(format!("{} is not irreducible", g.label)));
    }
    let n = g.rank;
    if n != g.dim {
        return Err(CoxError::InvalidArgument(format!("{} is not essential", g.label)));
    }
    let q = norm.component_value(&comps[0]);
    let lat = enumerate_flats(g)?;
    let mut rhs = vec![Rational::from_integer(0.into()); n + 1];
    for flat in lat.flats() {
        let prod = flat.components.iter().fold(Rational::from_integer(1.into()), |acc, c| {
            let v = norm.component_value(c);
            let mut a = acc;
            for _ in 0..c.rank {
                a *= &v;
            }
            a
        });
        rhs[n - flat.codim] += prod;
    }
    let mut rep = Report::new("coxeter-identity", &g.label);
    for k in 0..=n {
        let mut lhs = Rational::from_integer(binom(n, k));
        for _ in 0..(n - k) {
            lhs *= &q;
        }
        rep.compare(lhs == rhs[k], || {
            format!("coefficient of x^{k}: (q+x)^n gives {lhs}, flats give {}", rhs[k])
        });
    }
    let normals: Vec<Vec<Cyc>> = g.hyperplanes().iter().map(|h| h.root.clone()).collect();
    let norms: Vec<Cyc> = g
        .hyperplanes()
        .iter()
        .map(|h| Cyc::from_int(norm.norm_of(h.order)))
        .collect();
    let arr = ArrLaplacian::with_norms(g.form().clone(), normals, &norms, vec![0; g.num_hyperplanes()])?;
    let l = arr.numeric_matrix(&[Rational::from_integer(1.into())]);
    let scalar = Matrix::<Cyc>::identity(n).scale(&Cyc::from_rational(q.clone()));
    rep.compare(l == scalar, || {
        format!("unweighted arrangement Laplacian is not {}·I", q)
    });
    Ok(rep.with_details(json!({
        "q": crate::scalar::ring::fmt_rational(&q),
        "flat_counts": lat.counts(),
        "coefficients": rhs.iter().map(crate::scalar::ring::fmt_rational).collect::<Vec<_>>(),
    })))
}

/// Multiset of component Coxeter numbers, each with multiplicity equal to its rank.
pub fn coxeter_multiset(components: &[ComponentInfo]) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for c in components {
        if !c.coxeter_number.is_integer() {
            return Err(CoxError::NonIntegerEigenvalue(format!(
                "Coxeter number {}",
                c.coxeter_number
            )));
        }
        let h = i64::try_from(c.coxeter_number.to_integer()).expect("small Coxeter number");
        out.extend(std::iter::repeat_n(h, c.rank));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Coxeter-number multiset of a flat, cross-checked against the nonzero eigenvalues of the
/// unweighted localized Laplacian.
pub fn multiset_coxeter_numbers(g: &ReflectionGroup, flat: &Flat) -> Result<Vec<i64>> {
    let from_components = coxeter_multiset(&flat.components)?;
    let arr = arr_from_group(g, &WeightSystem::uniform(g))?.localize(&flat.hyperplanes);
    let l = arr.numeric_matrix(&[Rational::from_integer(1.into())]);
    let cp = char_poly(&l);
    let ints: Vec<BigInt> = cp
        .iter()
        .map(|c| {
            c.as_rational()
                .filter(|q| q.is_integer())
                .map(|q| q.to_integer())
                .ok_or_else(|| CoxError::NonIntegerEigenvalue(format!("coefficient {c}")))
        })
        .collect::<Result<_>>()?;
    let (roots, rest) = integer_roots(&ints);
    if rest.len() > 1 {
        return Err(CoxError::NonIntegerEigenvalue(format!(
            "localized Laplacian of flat {:?} does not split over Z",
            flat.hyperplanes
        )));
    }
    let mut eig: Vec<i64> = roots.iter().filter(|&&r| r != 0).map(|r| -r).collect();
    eig.sort_unstable_by(|a, b| b.cmp(a));
    if eig != from_components {
        return Err(CoxError::Internal(format!(
            "flat {:?}: eigenvalues {eig:?} but component Coxeter numbers {from_components:?}",
            flat.hyperplanes
        )));
    }
    Ok(from_components)
}

/// Every flat is closed, and its pointwise stabilizer is the subgroup its reflections generate.
pub fn verify_flat_invariants(g: &ReflectionGroup, lat: &IntersectionLattice, limits: &Limits) -> Result<Report> {
    let mats: Vec<Matrix<Cyc>> = (0..g.order()).map(|e| g.matrix(e)).collect();
    let mut rep = Report::new("flat-invariants", &g.label);
    for flat in lat.flats() {
        let closed = flat_closure(g, &flat.hyperplanes);
        rep.compare(closed == flat.hyperplanes, || {
            format!("flat {:?} is not closed", flat.hyperplanes)
        });
        let mut stab: Vec<usize> = (0..g.order())
            .filter(|&e| flat.basis.iter().all(|v| mats[e].mul_vec(v) == *v))
            .collect();
        stab.sort();
        let sub = g.subgroup(&flat.hyperplanes, limits)?;
        let mut gen: Vec<usize> = (0..sub.order())
            .map(|e| g.element_index(sub.perm(e)).expect("subgroup element lies in parent"))
            .collect();
        gen.sort();
        rep.compare(stab == gen, || {
            format!(
                "flat {:?}: stabilizer has {} elements, generated subgroup {}",
                flat.hyperplanes,
                stab.len(),
                gen.len()
            )
        });
        let rank_sum: usize = flat.components.iter().map(|c| c.rank).sum();
        rep.compare(rank_sum == flat.codim, || {
            format!("flat {:?}: component ranks do not sum to codim", flat.hyperplanes)
        });
    }
    Ok(rep)
}
