//! Property tests for the stated invariants of every module.

use coxlab::config::Limits;
use coxlab::factorization::{
    enumerate_series_formal, enumerate_series_numeric, reduced_count, specialize, Exec, Target,
};
use coxlab::groups::{build_group, ReflectionGroup};
use coxlab::laplacian::{char_poly, det_shifted, w_laplacian_numeric, ArrLaplacian};
use coxlab::lattice::{enumerate_flats, flat_closure, verify_coxeter_identity, verify_flat_invariants, NormChoice};
use coxlab::linalg::Matrix;
use coxlab::scalar::{rat, rint, Cyc, PolyQ, Rational, Ring};
use coxlab::symfunc::{
    lr_coefficient, partitions, restrict_young, verify_exterior_power_hooks, CharacterTable, Partition,
};
use coxlab::towers::{all_orderings, jm_matrix, standard_tower, tower_spectrum, WeightSystem};
use coxlab::zonotope::{shephard_sums, RootCatalog};
use num_complex::Complex64;
use proptest::prelude::*;
use std::sync::LazyLock;

const GROUPS: &[&str] = &[
    "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "I2(5)", "I2(8)", "G(3,1,2)", "G(3,1,3)", "G(4,1,2)", "G(3,3,3)",
    "G(4,4,3)",
];

const REAL: &[&str] = &["A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "I2(5)", "I2(8)"];

static BUILT: LazyLock<Vec<ReflectionGroup>> = LazyLock::new(|| {
    GROUPS
        .iter()
        .map(|d| build_group(d, &Limits::default()).unwrap())
        .collect()
});

fn group(label: &str) -> &'static ReflectionGroup {
    BUILT.iter().find(|g| g.label == label).unwrap()
}

fn weight() -> impl Strategy<Value = Rational> {
    (-9i64..10, 1i64..6).prop_map(|(p, q)| rat(p, q))
}

fn weights(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(weight(), n)
}

fn identity_ordering(g: &ReflectionGroup) -> Vec<usize> {
    (0..g.rank).collect()
}

fn complex_close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-10 * (1.0 + a.norm().max(b.norm()))
}

fn cyc_strategy() -> impl Strategy<Value = Cyc> {
    (1u32..=12, prop::collection::vec(weight(), 12)).prop_map(|(r, c)| Cyc::from_exponent_coeffs(r, &c[..r as usize]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cyclotomic_product_matches_complex(a in cyc_strategy(), b in cyc_strategy()) {
        prop_assert!(complex_close(a.mul(&b).to_complex(), a.to_complex() * b.to_complex()));
        prop_assert!(complex_close(a.add(&b).to_complex(), a.to_complex() + b.to_complex()));
        prop_assert_eq!(a.conj().conj(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polynomial_evaluation_is_multiplicative(
        p in prop::collection::vec((prop::collection::vec(0u16..3, 3), weight()), 0..6),
        q in prop::collection::vec((prop::collection::vec(0u16..3, 3), weight()), 0..6),
        v in weights(3),
    ) {
        let build = |terms: &[(Vec<u16>, Rational)]| {
            let mut acc = PolyQ::zero_poly();
            for (m, c) in terms {
                acc.add_term(m.clone(), c);
            }
            acc
        };
        let (p, q) = (build(&p), build(&q));
        prop_assert_eq!(p.mul(&q).eval(&v), p.eval(&v).mul(&q.eval(&v)));
        prop_assert_eq!(p.add(&q).eval(&v), p.eval(&v).add(&q.eval(&v)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn reflection_representation_is_a_homomorphism(gi in 0..GROUPS.len(), a in any::<u32>(), b in any::<u32>()) {
        let g = &BUILT[gi];
        let (x, y) = (a as usize % g.order(), b as usize % g.order());
        prop_assert_eq!(g.matrix(g.mul(x, y)), g.matrix(x).mul(&g.matrix(y)));
        prop_assert_eq!(g.mul(x, g.inverse(x)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn flat_closure_is_idempotent(mask in any::<u64>()) {
        for g in BUILT.iter() {
            let subset: Vec<usize> = (0..g.num_hyperplanes()).filter(|&i| mask >> (i % 64) & 1 == 1).collect();
            let once = flat_closure(g, &subset);
            prop_assert!(subset.iter().all(|h| once.contains(h)), "{}: closure drops a hyperplane", g.label);
            prop_assert_eq!(flat_closure(g, &once), once.clone(), "{}", g.label);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn tower_spectrum_matches_numeric_char_poly(gi in 0..GROUPS.len(), ord in any::<u32>(), w in weights(8)) {
        let g = &BUILT[gi];
        let orders = all_orderings(g.rank);
        let t = standard_tower(g, &orders[ord as usize % orders.len()]).unwrap();
        let ws = WeightSystem::from_tower(g, &t);
        let vals = &w[..ws.num_vars];
        let l = w_laplacian_numeric(g, &ws.numeric(vals));
        let cp = char_poly(&l);
        let spec = tower_spectrum(g, &t).unwrap();
        for x in 0..=g.dim as i64 {
            let xc = Cyc::from_int(x);
            let at_x = cp.iter().rev().fold(Cyc::zero(), |acc, c| acc.mul(&xc).add(c));
            prop_assert_eq!(&at_x, &det_shifted(&l, &xc), "{}: char_poly and elimination disagree", g.label);
            let prod = spec.iter().fold(Rational::from_integer(1.into()), |acc, f| acc * (f.eval(vals) + rint(x)));
            prop_assert_eq!(at_x, Cyc::from_rational(prod), "{}: spectrum disagrees at x = {}", g.label, x);
        }
    }

    #[test]
    fn formal_series_specializes_to_numeric(gi in 0..GROUPS.len(), w in weights(8)) {
        let g = &BUILT[gi];
        let t = standard_tower(g, &identity_ordering(g)).unwrap();
        let ws = WeightSystem::from_tower(g, &t);
        let vals = &w[..ws.num_vars];
        let target = Target::Element(g.coxeter_class().unwrap().representative);
        let len = g.rank + 2;
        let formal = enumerate_series_formal(g, &ws, &target, len, &Limits::default(), Exec::Parallel).unwrap();
        let numeric = enumerate_series_numeric(g, &ws.numeric(vals), &target, len, Exec::Sequential);
        prop_assert_eq!(specialize(&formal, vals), numeric);
    }

    #[test]
    fn sequential_and_parallel_series_agree(gi in 0..GROUPS.len(), w in prop::collection::vec(weight(), 60)) {
        let g = &BUILT[gi];
        let vals = &w[..g.num_reflections().min(60)];
        let mut full = vals.to_vec();
        full.resize(g.num_reflections(), rint(1));
        let target = Target::Element(g.coxeter_class().unwrap().representative);
        let seq = enumerate_series_numeric(g, &full, &target, 6, Exec::Sequential);
        let par = enumerate_series_numeric(g, &full, &target, 6, Exec::Parallel);
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn series_is_conjugation_equivariant(gi in 0..GROUPS.len(), c in any::<u32>(), w in prop::collection::vec(weight(), 60)) {
        let g = &BUILT[gi];
        let h = c as usize % g.order();
        let mut base = w.clone();
        base.resize(g.num_reflections().max(60), rint(1));
        let base = &base[..g.num_reflections()];
        // w'(τ) = w(h⁻¹ τ h), so that walks to h c h⁻¹ under w' biject with walks to c under w
        let hinv = g.inverse(h);
        let conj: Vec<Rational> = g
            .reflections()
            .iter()
            .map(|&tau| base[g.reflection_position(g.mul(hinv, g.mul(tau, h))).unwrap()].clone())
            .collect();
        let cox = g.coxeter_class().unwrap().representative;
        let lhs = enumerate_series_numeric(g, base, &Target::Element(cox), 6, Exec::default());
        let rhs = enumerate_series_numeric(g, &conj, &Target::Element(g.mul(h, g.mul(cox, hinv))), 6, Exec::default());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_coefficients_are_symmetric(n in 1usize..=8, i in any::<u32>(), a in any::<u32>(), j in any::<u32>(), k in any::<u32>()) {
        let lams = partitions(n);
        let lam = &lams[i as usize % lams.len()];
        let a = a as usize % (n + 1);
        let alphas = partitions(a);
        let betas = partitions(n - a);
        let alpha = &alphas[j as usize % alphas.len()];
        let beta = &betas[k as usize % betas.len()];
        prop_assert_eq!(lr_coefficient(lam, alpha, beta), lr_coefficient(lam, beta, alpha));
    }
}

#[test]
fn restriction_preserves_dimension() {
    for n in 1..=7 {
        for lam in partitions(n) {
            for a in 0..=n {
                let total: u128 = restrict_young(&lam, a)
                    .iter()
                    .map(|((al, be), c)| *c as u128 * al.num_syt() * be.num_syt())
                    .sum();
                assert_eq!(total, lam.num_syt(), "{lam} restricted at a = {a}");
            }
        }
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=7 {
        let table = CharacterTable::new(n);
        assert!(table.check_orthogonality(), "S_{n}");
        let id = Partition::new(vec![1; n]);
        for lam in partitions(n) {
            assert_eq!(table.value(&lam, &id).unwrap() as u128, lam.num_syt());
        }
    }
}

#[test]
fn hooks_are_exterior_powers() {
    for n in 2..=6 {
        assert!(verify_exterior_power_hooks(n).passed, "n = {n}");
    }
}

#[test]
fn reflection_traces_sum_to_h_times_rank() {
    for g in BUILT.iter() {
        let n = g.dim;
        let id = Matrix::<Cyc>::identity(n);
        let total = g
            .reflections()
            .iter()
            .fold(Cyc::zero(), |acc, &r| acc.add(&id.sub(&g.matrix(r)).trace()));
        let h = Cyc::from_rational(g.coxeter_number());
        assert_eq!(total, h.mul(&Cyc::from_int(n as i64)), "{}", g.label);
        assert_eq!(
            rint(g.num_reflections() as i64 + g.num_hyperplanes() as i64) / rint(n as i64),
            g.coxeter_number()
        );
    }
}

#[test]
fn hyperplane_stabilizers_are_cyclic() {
    for g in BUILT.iter() {
        let lat = enumerate_flats(g).unwrap();
        for flat in &lat.levels[1] {
            let h = &g.hyperplanes()[flat.hyperplanes[0]];
            let fixing: Vec<usize> = (0..g.order())
                .filter(|&x| {
                    let m = g.matrix(x);
                    flat.basis.iter().all(|v| m.mul_vec(v) == *v)
                })
                .collect();
            assert_eq!(fixing.len(), h.order, "{}", g.label);
            assert!(fixing.iter().any(|&x| g.element_order(x) == h.order), "{}", g.label);
        }
    }
}

#[test]
fn flats_are_parabolic_subgroups() {
    for g in BUILT.iter() {
        let lat = enumerate_flats(g).unwrap();
        assert!(
            verify_flat_invariants(g, &lat, &Limits::default()).unwrap().passed,
            "{}",
            g.label
        );
    }
}

#[test]
fn coxeter_class_has_order_h() {
    for g in BUILT.iter() {
        let cls = g.coxeter_class().unwrap();
        assert_eq!(cls.members.len() as i64 * cls.h, g.order() as i64, "{}", g.label);
        assert!(
            cls.members.iter().all(|&c| g.element_order(c) as i64 == cls.h),
            "{}",
            g.label
        );
    }
}

#[test]
fn unweighted_tower_spectrum_is_h() {
    for g in BUILT.iter() {
        let h = g.coxeter_number();
        for ord in all_orderings(g.rank) {
            let t = standard_tower(g, &ord).unwrap();
            let ones = vec![rint(1); t.len()];
            for f in tower_spectrum(g, &t).unwrap() {
                assert_eq!(f.eval(&ones), h, "{} ordering {ord:?}", g.label);
            }
        }
    }
}

#[test]
fn jucys_murphy_elements_commute() {
    for g in BUILT.iter() {
        let t = standard_tower(g, &identity_ordering(g)).unwrap();
        let ms: Vec<_> = (1..=t.len()).map(|i| jm_matrix(g, &t, i)).collect();
        for (i, a) in ms.iter().enumerate() {
            for b in &ms[i + 1..] {
                assert_eq!(a.mul(b), b.mul(a), "{}", g.label);
            }
        }
    }
}

#[test]
fn tower_weights_are_constant_on_hyperplanes() {
    for g in BUILT.iter() {
        for ord in all_orderings(g.rank) {
            let t = standard_tower(g, &ord).unwrap();
            assert!(WeightSystem::from_tower(g, &t).is_hyperplane_constant(g), "{}", g.label);
        }
    }
}

#[test]
fn real_groups_have_parity() {
    for d in REAL {
        let g = group(d);
        let w: Vec<Rational> = (0..g.num_reflections() as i64).map(|i| rat(i + 2, i + 1)).collect();
        let target = Target::Elements(g.coxeter_class().unwrap().members);
        let s = enumerate_series_numeric(g, &w, &target, g.rank + 4, Exec::default());
        for l in 0..=g.rank + 4 {
            if (l + g.rank) % 2 == 1 {
                assert_eq!(s.coeff(l), rint(0), "{d} at length {l}");
            }
        }
    }
}

#[test]
fn reduced_counts_are_divisible_by_n_factorial() {
    for g in BUILT.iter() {
        for ord in all_orderings(g.rank) {
            let t = standard_tower(g, &ord).unwrap();
            let rc = reduced_count(g, &WeightSystem::from_tower(g, &t), &Limits::default()).unwrap();
            assert!(rc.passed(), "{} ordering {ord:?}", g.label);
        }
    }
}

#[test]
fn burman_expansion_matches_char_poly() {
    for g in BUILT.iter().filter(|g| g.num_hyperplanes() <= 16) {
        let t = standard_tower(g, &identity_ordering(g)).unwrap();
        let ws = WeightSystem::from_tower(g, &t);
        let arr = coxlab::laplacian::arr_from_group(g, &ws).unwrap();
        check_burman(&arr, &g.label);
    }
}

fn check_burman(arr: &ArrLaplacian, label: &str) {
    assert_eq!(arr.burman_expansion(), char_poly(&arr.formal_matrix()), "{label}");
}

#[test]
fn coxeter_identity_for_all_small_irreducible_groups() {
    let mut groups: Vec<String> = [
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "D4", "D5", "D6", "H3", "G(3,1,1)",
        "G(3,1,2)", "G(3,1,3)", "G(3,1,4)", "G(4,1,2)", "G(4,1,3)", "G(5,1,2)", "G(6,1,2)", "G(3,3,3)", "G(3,3,4)",
        "G(4,4,3)", "G(5,5,3)",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    groups.extend((3..=30).map(|m| format!("I2({m})")));
    for d in &groups {
        let g = build_group(d, &Limits::default()).unwrap();
        assert!(g.num_hyperplanes() <= 30, "{d}");
        for norm in [NormChoice::One, NormChoice::EhMinusOne, NormChoice::Eh] {
            let rep = verify_coxeter_identity(&g, norm).unwrap();
            assert!(rep.passed, "{d} {norm:?}: {:?}", rep.first_discrepancy);
        }
    }
}

#[test]
fn root_catalogs_match_groups() {
    for (ty, d) in [
        ("A3", "A3"),
        ("A4", "A4"),
        ("B3", "B3"),
        ("B4", "B4"),
        ("C3", "B3"),
        ("D4", "D4"),
        ("D5", "D5"),
    ] {
        let cat = RootCatalog::parse(ty).unwrap();
        let g = build_group(d, &Limits::default()).unwrap();
        assert_eq!(cat.num_positive_roots(), g.num_hyperplanes(), "{ty}");
        assert_eq!(cat.coxeter_number(), g.coxeter_number(), "{ty}");
        assert!((0..cat.rank).all(|i| cat.cartan[i][i] == 2), "{ty}");
    }
}

#[test]
fn shephard_sums_agree_across_executors() {
    for ty in ["A4", "B4", "C4", "D4", "D5"] {
        let cat = RootCatalog::parse(ty).unwrap();
        let lim = Limits::default();
        assert_eq!(
            shephard_sums(&cat, &lim, Exec::Sequential).unwrap(),
            shephard_sums(&cat, &lim, Exec::Parallel).unwrap(),
            "{ty}"
        );
    }
}
