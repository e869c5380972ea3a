//! Character-theoretic evaluations of the factorization series of `S_n`, checked against
//! enumeration: the Frobenius class-sum formula and its Gelfand–Tsetlin refinement.

use super::enumerate::{enumerate_series_formal, Exec, Target};
use crate::config::Limits;
use crate::groups::{Family, ReflectionGroup};
use crate::report::Report;
use crate::scalar::{LinearForm, PolyQ, QAlgebra, Rational, Ring, TruncatedEGF};
use crate::symfunc::{cycle_type, mn_character, partitions, Partition};
use crate::towers::{ParabolicTower, WeightSystem};
use crate::{CoxError, Result};
use num_bigint::BigInt;
use serde_json::json;
use std::collections::BTreeSet;

fn sym_degree(g: &ReflectionGroup) -> Result<usize> {
    match g.family {
        Family::Sym(n) => Ok(n),
        _ => Err(CoxError::InvalidArgument(format!(
            "{} is not a symmetric group",
            g.label
        ))),
    }
}

fn compare(rep: &mut Report, lhs: &TruncatedEGF<PolyQ>, rhs: &TruncatedEGF<PolyQ>, len: usize) {
    for l in 0..=len {
        let (a, b) = (lhs.coeff(l), rhs.coeff(l));
        rep.compare(a == b, || {
            format!("coefficient of t^{l}/{l}!: enumerated {a:?}, characters {b:?}")
        });
    }
}

/// `Σ_{c∈C} [c] e^{tA(ω)} = |C|/|G| Σ_χ χ(c^{-1}) χ(e^{tA(ω)})`, with `A(ω)^ℓ` expanded
/// explicitly in the group algebra and every `χ` evaluated by Murnaghan–Nakayama.
pub fn frobenius_crosscheck_sn(g: &ReflectionGroup, ws: &WeightSystem, len: usize, limits: &Limits) -> Result<Report> {
    let n = sym_degree(g)?;
    if n > 5 {
        return Err(CoxError::InvalidArgument(format!(
            "expansion limited to n ≤ 5, got {n}"
        )));
    }
    let cls = g.coxeter_class()?;
    let lhs = enumerate_series_formal(
        g,
        ws,
        &Target::Elements(cls.members.clone()),
        len,
        limits,
        Exec::Sequential,
    )?;

    let types: Vec<Partition> = (0..g.order())
        .map(|e| cycle_type(&g.sym_decode(e).expect("symmetric group element")))
        .collect();
    let irreps = partitions(n);
    let cinv_type = &types[g.inverse(cls.representative)];
    let ratio = Rational::new(BigInt::from(cls.members.len()), BigInt::from(g.order()));
    let vars: Vec<PolyQ> = (0..ws.num_vars).map(PolyQ::var).collect();

    let mut power = vec![PolyQ::zero(); g.order()];
    power[g.identity()] = PolyQ::one();
    let mut coeffs = Vec::with_capacity(len + 1);
    for l in 0..=len {
        let mut total = PolyQ::zero();
        for lam in &irreps {
            let mut chi_x = PolyQ::zero();
            for (e, p) in power.iter().enumerate() {
                if !p.is_zero() {
                    chi_x = chi_x.add(&p.scale_q(&Rational::from_integer(mn_character(lam, &types[e]).into())));
                }
            }
            let w = Rational::from_integer(mn_character(lam, cinv_type).into()) * &ratio;
            total = total.add(&chi_x.scale_q(&w));
        }
        coeffs.push(total);
        if l == len {
            break;
        }
        let mut next = vec![PolyQ::zero(); g.order()];
        for (e, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (r, &tau) in g.reflections().iter().enumerate() {
                let te = g.mul(tau, e);
                next[te] = next[te].add(&p.mul(&vars[ws.assignment[r]]));
            }
        }
        power = next;
    }
    let rhs = TruncatedEGF::new(len, coeffs);
    let mut rep = Report::new("frobenius", &g.label);
    compare(&mut rep, &lhs, &rhs, len);
    Ok(rep.with_details(json!({"length": len, "num_vars": ws.num_vars})))
}

/// Normalized transposition sum `C(m,2)·χ_μ(τ)/χ_μ(1)` for `μ ⊢ m`.
pub fn normalized_transposition_trace(mu: &Partition) -> i64 {
    let m = mu.size();
    if m < 2 {
        return 0;
    }
    let mut tau = vec![2];
    tau.extend(std::iter::repeat_n(1, m - 2));
    let chi = mn_character(mu, &Partition::new(tau));
    let num = (m * (m - 1) / 2) as i64 * chi;
    num / mu.num_syt() as i64
}

/// All saturated chains `μ_1 ⊂ μ_2 ⊂ … ⊂ μ_n = λ` in Young's lattice.
pub fn young_chains(lambda: &Partition) -> Vec<Vec<Partition>> {
    if lambda.size() <= 1 {
        return vec![vec![lambda.clone()]];
    }
    let mut out = Vec::new();
    for mu in lambda.remove_box() {
        for mut c in young_chains(&mu) {
            c.push(lambda.clone());
            out.push(c);
        }
    }
    out
}

/// Checks that level `i` of the tower is the full symmetric group on a set of `i+1` points,
/// each set growing by one point.
fn check_young_tower(g: &ReflectionGroup, t: &ParabolicTower) -> Result<()> {
    let mut prev: BTreeSet<usize> = BTreeSet::new();
    for i in 1..t.levels.len() {
        let mut pts = BTreeSet::new();
        let refls = t.reflections_at(g, i);
        for &r in &refls {
            let sigma = g.sym_decode(g.reflections()[r]).expect("symmetric group");
            pts.extend((0..sigma.len()).filter(|&j| sigma[j] != j));
        }
        let k = pts.len();
        let full = refls.len() == k * (k - 1) / 2;
        let grows = prev.is_subset(&pts) && (k == i + 1);
        if !(full && grows) {
            return Err(CoxError::InvalidTower(format!(
                "level {i} is not a symmetric group on {} points",
                i + 1
            )));
        }
        prev = pts;
    }
    Ok(())
}

/// Gelfand–Tsetlin evaluation
/// `|C|/|G| Σ_λ χ_λ(c^{-1}) Σ_{chains} exp(t Σ_i ω_i (T̃(μ_{i+1}) − T̃(μ_i)))`, where `T̃` is the
/// normalized transposition sum, checked against enumeration with the tower's weights.
pub fn gt_crosscheck_sn(g: &ReflectionGroup, t: &ParabolicTower, len: usize, limits: &Limits) -> Result<Report> {
    let n = sym_degree(g)?;
    if n > 6 {
        return Err(CoxError::InvalidArgument(format!("limited to n ≤ 6, got {n}")));
    }
    check_young_tower(g, t)?;
    let ws = WeightSystem::from_tower(g, t);
    let cls = g.coxeter_class()?;
    let lhs = enumerate_series_formal(
        g,
        &ws,
        &Target::Elements(cls.members.clone()),
        len,
        limits,
        Exec::default(),
    )?;
    let ratio = Rational::new(BigInt::from(cls.members.len()), BigInt::from(g.order()));
    let cycle = Partition::new(vec![n]);
    let mut rhs = TruncatedEGF::<PolyQ>::zero_series(len);
    let mut exponents = Vec::new();
    for lam in partitions(n) {
        let chi = mn_character(&lam, &cycle);
        if chi == 0 {
            continue;
        }
        let w = Rational::from_integer(chi.into()) * &ratio;
        for chain in young_chains(&lam) {
            let c: Vec<i64> = (1..n)
                .map(|i| normalized_transposition_trace(&chain[i]) - normalized_transposition_trace(&chain[i - 1]))
                .collect();
            let form = LinearForm::new(c);
            let e = TruncatedEGF::exp_linear(len, &form.to_poly::<Rational>());
            rhs = rhs.add(&e.scale_q(&w));
            exponents.push(json!({"lambda": lam.to_string(), "exponent": form.to_string()}));
        }
    }
    let mut rep = Report::new("gt", &g.label);
    compare(&mut rep, &lhs, &rhs, len);
    Ok(rep.with_details(json!({"length": len, "chains": exponents})))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_group;
    use crate::towers::standard_tower;

    #[test]
    fn chains_count_syt() {
        for lam in partitions(5) {
            assert_eq!(young_chains(&lam).len() as u128, lam.num_syt());
        }
    }

    #[test]
    fn normalized_trace_is_content_sum() {
        for m in 1..=7 {
            for mu in partitions(m) {
                assert_eq!(normalized_transposition_trace(&mu), mu.content_sum());
            }
        }
    }

    #[test]
    fn frobenius_s3() {
        let g = build_group("A2", &Limits::default()).unwrap();
        let ws = WeightSystem::per_reflection(&g);
        let r = frobenius_crosscheck_sn(&g, &ws, 5, &Limits::default()).unwrap();
        assert!(r.passed, "{:?}", r.first_discrepancy);
    }

    #[test]
    fn gt_s4() {
        let g = build_group("A3", &Limits::default()).unwrap();
        let t = standard_tower(&g, &[0, 1, 2]).unwrap();
        let r = gt_crosscheck_sn(&g, &t, 6, &Limits::default()).unwrap();
        assert!(r.passed, "{:?}", r.first_discrepancy);
    }

    #[test]
    fn gt_rejects_non_young_tower() {
        let g = build_group("A3", &Limits::default()).unwrap();
        let t = standard_tower(&g, &[0, 2, 1]).unwrap();
        assert!(gt_crosscheck_sn(&g, &t, 4, &Limits::default()).is_err());
    }
}
