//! Acceptance suite: one line per criterion with its verdict, elapsed time and bound.
//!
//! Run with `cargo test -p coxlab --test acceptance`. The process exits nonzero only when a
//! criterion fails that is not listed in `KNOWN_FAILURES`; known failures still print FAIL.

use coxlab::config::Limits;
use coxlab::factorization::{
    dihedral_reflection_tower, enumerate_series_formal, enumerate_series_numeric, finer_formula_bn, finer_formula_gr1n,
    frobenius_crosscheck_sn, gt_crosscheck_sn, reduced_count, verify_dihedral, verify_main_theorem_all_orderings, Exec,
    Target,
};
use coxlab::groups::{build_group, ReflectionGroup};
use coxlab::laplacian::{char_poly, trace_formula, w_laplacian_formal, w_laplacian_numeric};
use coxlab::lattice::{verify_coxeter_identity, verify_laplacian_recursion, verify_matrix_forest, NormChoice};
use coxlab::linalg::Matrix;
use coxlab::scalar::{chapuy_stump_series, rat, rint, Cyc, LinearForm, Rational, Ring};
use coxlab::symfunc::{
    lr_coefficient, partitions, verify_hook_restriction, verify_hook_vanishing, verify_quasihook_restriction,
};
use coxlab::towers::{
    all_orderings, conjugate_tower, jm_spectrum_check, standard_tower, tower_spectrum, JmRep, ParabolicTower,
    WeightSystem,
};
use coxlab::zonotope::verify_volume_theorem_e6;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

type Outcome = Result<(bool, String), String>;

/// Criteria expected to fail, with the reason printed next to the verdict.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    12,
    "the four-term quasihook restriction rule is false as stated; hook rules, vanishing and LR properties hold",
)];

fn grp(d: &str) -> Result<ReflectionGroup, String> {
    build_group(d, &Limits::default()).map_err(|e| format!("{d}: {e}"))
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{ctx}: {e}")
}

fn identity_tower(g: &ReflectionGroup) -> Result<ParabolicTower, String> {
    standard_tower(g, &(0..g.rank).collect::<Vec<_>>()).map_err(err(&g.label))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

fn dihedral(range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|m| format!("I2({m})")).collect()
}

fn criterion1_groups() -> Vec<String> {
    let mut v: Vec<String> = ["A2", "A3", "A4", "B2", "B3", "D4", "H3", "G(3,1,2)", "G(3,3,3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.extend(dihedral(3..=12));
    v
}

fn unweighted_counts() -> Outcome {
    let mut details = Vec::new();
    for d in criterion1_groups() {
        let g = grp(&d)?;
        let n = g.rank;
        let c = g.coxeter_class().map_err(err(&d))?.representative;
        let ones = vec![rint(1); g.num_reflections()];
        let s = enumerate_series_numeric(&g, &ones, &Target::Element(c), n, Exec::default());
        let h = g.coxeter_number();
        let mut expected = Rational::from_integer(factorial(n)) / Rational::from_integer(BigInt::from(g.order()));
        for _ in 0..n {
            expected *= &h;
        }
        if s.coeff(n) != expected {
            return Ok((
                false,
                format!("{d}: enumerated {}, h^n n!/|W| = {expected}", s.coeff(n)),
            ));
        }
        details.push(format!("{d}={expected}"));
    }
    Ok((true, details.join(" ")))
}

fn chapuy_stump() -> Outcome {
    let mut checked = 0;
    for d in criterion1_groups() {
        let g = grp(&d)?;
        let n = g.rank;
        let len = n + 4;
        let c = g.coxeter_class().map_err(err(&d))?.representative;
        let ones = vec![rint(1); g.num_reflections()];
        let s = enumerate_series_numeric(&g, &ones, &Target::Element(c), len, Exec::default());
        let h = g.coxeter_number_int().map_err(err(&d))?;
        let cs = chapuy_stump_series(g.num_reflections() as i64, g.order() as i64, h, n, len);
        for l in 0..=len {
            if s.coeff(l) != cs.coeff(l) {
                return Ok((
                    false,
                    format!("{d} t^{l}: enumerated {}, series {}", s.coeff(l), cs.coeff(l)),
                ));
            }
        }
        checked += 1;
    }
    Ok((true, format!("{checked} groups up to length n+4")))
}

fn main_theorem() -> Outcome {
    let mut groups: Vec<String> = ["A3", "B3", "D4", "H3", "G(3,1,3)", "G(3,3,3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    groups.extend(dihedral(3..=12));
    let mut towers = 0;
    for d in groups {
        let g = grp(&d)?;
        let r = verify_main_theorem_all_orderings(&g, g.rank + 4, &Limits::default()).map_err(err(&d))?;
        if !r.passed {
            return Ok((false, format!("{d}: {}", r.first_discrepancy.unwrap_or_default())));
        }
        towers += r.details["towers"].as_array().map_or(0, |v| v.len());
    }
    Ok((true, format!("{towers} standard towers")))
}

fn d6_example() -> Outcome {
    let g = grp("D6")?;
    let t = standard_tower(&g, &[0, 2, 5, 1, 4, 3]).map_err(err("D6"))?;
    let mut got = tower_spectrum(&g, &t).map_err(err("D6"))?;
    let mut want: Vec<LinearForm> = [
        [2, 1, 0, 1, 0, 6],
        [0, 3, 0, 1, 0, 6],
        [0, 0, 2, 0, 1, 7],
        [0, 0, 0, 4, 0, 6],
        [0, 0, 0, 0, 3, 7],
        [0, 0, 0, 0, 0, 10],
    ]
    .iter()
    .map(|c| LinearForm::new(c.to_vec()))
    .collect();
    got.sort();
    want.sort();
    let text: Vec<String> = got.iter().map(|f| f.to_string()).collect();
    Ok((got == want, text.join(", ")))
}

fn forest_and_recursion() -> Outcome {
    let mut groups: Vec<String> = ["A2", "A3", "B3", "D4"].iter().map(|s| s.to_string()).collect();
    groups.extend(dihedral(3..=8));
    for d in &groups {
        let g = grp(d)?;
        let ws = WeightSystem::from_tower(&g, &identity_tower(&g)?);
        let f = verify_matrix_forest(&g, &ws, &Limits::default()).map_err(err(d))?;
        if !f.passed {
            return Ok((
                false,
                format!("matrix forest {d}: {}", f.first_discrepancy.unwrap_or_default()),
            ));
        }
        let r = verify_laplacian_recursion(&g, &ws).map_err(err(d))?;
        if !r.passed {
            return Ok((
                false,
                format!("recursion {d}: {}", r.first_discrepancy.unwrap_or_default()),
            ));
        }
    }
    Ok((true, format!("{} groups, both identities", groups.len())))
}

fn coxeter_identity() -> Outcome {
    let mut groups: Vec<String> = ["A3", "A4", "B3", "B4", "D4", "H3", "G(3,3,3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    groups.extend(dihedral(3..=12));
    for d in &groups {
        let g = grp(d)?;
        for nc in [NormChoice::Eh, NormChoice::One, NormChoice::EhMinusOne] {
            let r = verify_coxeter_identity(&g, nc).map_err(err(d))?;
            if !r.passed {
                return Ok((
                    false,
                    format!("{d} {nc:?}: {}", r.first_discrepancy.unwrap_or_default()),
                ));
            }
        }
    }
    Ok((true, format!("{} groups in three normalizations", groups.len())))
}

fn e6_zonotope() -> Outcome {
    let r = verify_volume_theorem_e6(&Limits::default()).map_err(err("E6"))?;
    Ok((
        r.passed,
        format!(
            "shephard_sum={} volume={}",
            r.details["shephard_sum"].as_str().unwrap_or("?"),
            r.details["volume"].as_str().unwrap_or("?")
        ),
    ))
}

fn distinct_weights(k: usize) -> Vec<Rational> {
    const P: [i64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];
    (0..k)
        .map(|i| rat(P[i % 10] + (i / 10) as i64, P[(i + 1) % 10]))
        .collect()
}

fn dihedral_forms() -> Outcome {
    let w = distinct_weights(8);
    for m in 3..=8 {
        let d = format!("I2({m})");
        let g = grp(&d)?;
        let r = verify_dihedral(&g, &w[..m], 8).map_err(err(&d))?;
        if !r.passed {
            return Ok((false, format!("{d}: {}", r.first_discrepancy.unwrap_or_default())));
        }
    }
    for (m, chain) in [(6, vec![2, 6]), (6, vec![3, 6]), (12, vec![2, 6, 12])] {
        let d = format!("I2({m})");
        let g = grp(&d)?;
        let r = dihedral_reflection_tower(&g, &chain, 8, &Limits::default()).map_err(err(&d))?;
        if !r.passed {
            return Ok((
                false,
                format!("{d} chain {chain:?}: {}", r.first_discrepancy.unwrap_or_default()),
            ));
        }
    }
    Ok((true, "m=3..8 closed form, chains (2,6) (3,6) (2,6,12)".into()))
}

fn finer_formulas() -> Outcome {
    for d in ["B2", "B3"] {
        let g = grp(d)?;
        let w = distinct_weights(g.num_reflections());
        let r = finer_formula_bn(&g, &w, g.rank + 4).map_err(err(d))?;
        if !r.passed {
            return Ok((false, format!("{d}: {}", r.first_discrepancy.unwrap_or_default())));
        }
    }
    let g = grp("G(3,1,2)")?;
    let per_h = distinct_weights(g.num_hyperplanes());
    let w: Vec<Rational> = (0..g.num_reflections())
        .map(|r| per_h[g.reflection_hyperplane(r)].clone())
        .collect();
    let r = finer_formula_gr1n(&g, &w, g.rank + 4).map_err(err("G(3,1,2)"))?;
    Ok((
        r.passed,
        r.first_discrepancy.unwrap_or_else(|| "B2, B3, G(3,1,2)".into()),
    ))
}

fn jm_spectra() -> Outcome {
    let mut regular: Vec<String> = ["A2", "A3", "B2"].iter().map(|s| s.to_string()).collect();
    regular.extend(dihedral(3..=6));
    let mut checks = 0;
    for (groups, rep) in [(regular, JmRep::Regular), (criterion1_groups(), JmRep::Reflection)] {
        for d in groups {
            let g = grp(&d)?;
            for ord in all_orderings(g.rank) {
                let t = standard_tower(&g, &ord).map_err(err(&d))?;
                let r = jm_spectrum_check(&g, &t, rep).map_err(err(&d))?;
                if !r.ok() {
                    return Ok((false, format!("{d} ordering {ord:?} {rep:?}")));
                }
                checks += 1;
            }
        }
    }
    let g = grp("A2")?;
    let r = jm_spectrum_check(&g, &identity_tower(&g)?, JmRep::Regular).map_err(err("A2"))?;
    let j2 = r
        .levels
        .iter()
        .find(|l| l.index == 2)
        .map(|l| l.spectrum.clone())
        .unwrap_or_default();
    let want = vec![(-2, 1), (-1, 2), (1, 2), (2, 1)];
    Ok((j2 == want, format!("{checks} towers; S3 J2 regular spectrum {j2:?}")))
}

fn frobenius_gt() -> Outcome {
    let lim = Limits::default();
    for d in ["A2", "A3"] {
        let g = grp(d)?;
        let r = frobenius_crosscheck_sn(&g, &WeightSystem::per_reflection(&g), 6, &lim).map_err(err(d))?;
        if !r.passed {
            return Ok((
                false,
                format!("frobenius {d}: {}", r.first_discrepancy.unwrap_or_default()),
            ));
        }
    }
    for d in ["A2", "A3", "A4"] {
        let g = grp(d)?;
        let r = gt_crosscheck_sn(&g, &identity_tower(&g)?, 6, &lim).map_err(err(d))?;
        if !r.passed {
            return Ok((false, format!("gt {d}: {}", r.first_discrepancy.unwrap_or_default())));
        }
    }
    Ok((true, "Frobenius S3 S4, Gelfand–Tsetlin S3 S4 S5, length 6".into()))
}

fn appendix() -> Outcome {
    let (mut hook_ok, mut hook_all) = (0, 0);
    let (mut qh_ok, mut qh_all) = (0, 0);
    for n in 2..=7usize {
        for a in 1..n {
            for k in 0..n {
                hook_all += 1;
                if verify_hook_restriction(n, k, a).map_err(err("hook"))?.passed {
                    hook_ok += 1;
                }
            }
            for k in 1..=n.saturating_sub(3) {
                qh_all += 1;
                if verify_quasihook_restriction(n, k, a).map_err(err("quasihook"))?.passed {
                    qh_ok += 1;
                }
            }
        }
    }
    let mut vanish = true;
    for n in 1..=9 {
        vanish &= verify_hook_vanishing(n).map_err(err("vanishing"))?.passed;
    }
    let (mut lr_sym, mut lr_dim) = (true, true);
    for n in 2..=7usize {
        for lam in partitions(n) {
            for a in 1..n {
                let mut dim = 0u128;
                for alpha in partitions(a) {
                    for beta in partitions(n - a) {
                        let c = lr_coefficient(&lam, &alpha, &beta);
                        lr_sym &= c == lr_coefficient(&lam, &beta, &alpha);
                        dim += u128::from(c) * alpha.num_syt() * beta.num_syt();
                    }
                }
                lr_dim &= dim == lam.num_syt();
            }
        }
    }
    let ok = hook_ok == hook_all && qh_ok == qh_all && vanish && lr_sym && lr_dim;
    Ok((
        ok,
        format!(
            "hook {hook_ok}/{hook_all}, quasihook {qh_ok}/{qh_all}, vanishing {vanish}, LR symmetry {lr_sym}, \
             dimensions {lr_dim}"
        ),
    ))
}

fn random_weights(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    (0..k)
        .map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=7)))
        .collect()
}

/// `det(x + L)` from the spectrum at numeric weights: `Π (x + λ_i(ω))`, low to high.
fn poly_from_roots(vals: &[Rational]) -> Vec<Cyc> {
    let mut p = vec![Cyc::one()];
    for v in vals {
        let c = Cyc::from_rational(v.clone());
        let mut next = vec![Cyc::zero(); p.len() + 1];
        for (i, a) in p.iter().enumerate() {
            next[i] = next[i].add(&a.mul(&c));
            next[i + 1] = next[i + 1].add(a);
        }
        p = next;
    }
    p
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut all: Vec<String> = criterion1_groups();
    all.extend(
        ["B4", "D5", "D6", "A5", "G(3,1,3)", "G(4,1,2)", "G(4,4,3)"]
            .iter()
            .map(|s| s.to_string()),
    );
    for d in &all {
        let g = grp(d)?;
        let n = g.dim;
        let h = Cyc::from_rational(g.coxeter_number());
        let l = w_laplacian_numeric(&g, &vec![rint(1); g.num_reflections()]);
        if l != Matrix::identity(n).scale(&h) {
            return Ok((false, format!("{d}: unweighted Laplacian is not h·I")));
        }
        if l.trace() != h.mul(&Cyc::from_int(n as i64)) {
            return Ok((false, format!("{d}: trace is not h·n")));
        }
        let w = random_weights(&mut rng, g.num_reflections());
        if w_laplacian_numeric(&g, &w).trace() != trace_formula(&g, &w) {
            return Ok((false, format!("{d}: weighted trace identity fails")));
        }
    }
    let towers_groups: Vec<String> = ["A3", "B3", "D4", "H3", "I2(5)", "I2(6)", "G(3,1,3)", "G(3,3,3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut points = 0;
    for d in &towers_groups {
        let g = grp(d)?;
        for ord in all_orderings(g.rank) {
            let t = standard_tower(&g, &ord).map_err(err(d))?;
            let ws = WeightSystem::from_tower(&g, &t);
            let spec = tower_spectrum(&g, &t).map_err(err(d))?;
            for _ in 0..20 {
                let vals = random_weights(&mut rng, ws.num_vars);
                let cp = char_poly(&w_laplacian_numeric(&g, &ws.numeric(&vals)));
                let roots: Vec<Rational> = spec.iter().map(|f| f.eval(&vals)).collect();
                if cp != poly_from_roots(&roots) {
                    return Ok((
                        false,
                        format!("{d} ordering {ord:?}: spectrum disagrees with char_poly"),
                    ));
                }
                points += 1;
            }
        }
    }
    let lim = Limits::default();
    for d in &towers_groups {
        let g = grp(d)?;
        let t = identity_tower(&g)?;
        let ws = WeightSystem::from_tower(&g, &t);
        let cls = g.coxeter_class().map_err(err(d))?;
        let target = Target::Elements(cls.members.clone());
        let len = g.rank + 2;
        let base = enumerate_series_formal(&g, &ws, &target, len, &lim, Exec::default()).map_err(err(d))?;
        let mut spec = tower_spectrum(&g, &t).map_err(err(d))?;
        spec.sort();
        for _ in 0..5 {
            let c = rng.gen_range(0..g.order());
            let ct = conjugate_tower(&g, &t, c);
            let mut cspec = tower_spectrum(&g, &ct).map_err(err(d))?;
            cspec.sort();
            let cws = WeightSystem::from_tower(&g, &ct);
            let conj = enumerate_series_formal(&g, &cws, &target, len, &lim, Exec::default()).map_err(err(d))?;
            if cspec != spec || conj != base {
                return Ok((false, format!("{d}: conjugation by element {c} changes the tower data")));
            }
        }
        let rc = reduced_count(&g, &ws, &lim).map_err(err(d))?;
        if !rc.passed() {
            return Ok((
                false,
                format!("{d}: reduced count not n!-divisible or off the determinant"),
            ));
        }
        let cp = char_poly(&w_laplacian_formal(&g, &ws));
        if cp.len() != g.dim + 1 {
            return Ok((false, format!("{d}: characteristic polynomial has the wrong degree")));
        }
    }
    Ok((
        true,
        format!(
            "{} groups h·I and traces, {points} spectrum points, conjugation and n! checks",
            all.len()
        ),
    ))
}

struct Criterion {
    number: usize,
    title: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            number: 1,
            title: "unweighted reduced counts h^n n!/|W|",
            bound: Duration::from_secs(60),
            run: unweighted_counts,
        },
        Criterion {
            number: 2,
            title: "Chapuy–Stump series",
            bound: Duration::from_secs(300),
            run: chapuy_stump,
        },
        Criterion {
            number: 3,
            title: "main theorem over all standard towers",
            bound: Duration::from_secs(1800),
            run: main_theorem,
        },
        Criterion {
            number: 4,
            title: "D6 tower spectrum",
            bound: Duration::from_secs(1),
            run: d6_example,
        },
        Criterion {
            number: 5,
            title: "matrix-forest and Laplacian recursion",
            bound: Duration::from_secs(600),
            run: forest_and_recursion,
        },
        Criterion {
            number: 6,
            title: "Coxeter-number identity over flats",
            bound: Duration::from_secs(300),
            run: coxeter_identity,
        },
        Criterion {
            number: 7,
            title: "E6 root zonotope",
            bound: Duration::from_secs(120),
            run: e6_zonotope,
        },
        Criterion {
            number: 8,
            title: "dihedral closed form and divisor chains",
            bound: Duration::from_secs(60),
            run: dihedral_forms,
        },
        Criterion {
            number: 9,
            title: "finer B_n and G(3,1,2) formulas",
            bound: Duration::from_secs(600),
            run: finer_formulas,
        },
        Criterion {
            number: 10,
            title: "Jucys–Murphy spectra",
            bound: Duration::from_secs(120),
            run: jm_spectra,
        },
        Criterion {
            number: 11,
            title: "Frobenius and Gelfand–Tsetlin cross-checks",
            bound: Duration::from_secs(600),
            run: frobenius_gt,
        },
        Criterion {
            number: 12,
            title: "restriction rules and LR properties",
            bound: Duration::from_secs(120),
            run: appendix,
        },
        Criterion {
            number: 13,
            title: "property suites",
            bound: Duration::from_secs(600),
            run: properties,
        },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok((ok, d)) => (ok && elapsed <= c.bound, d),
            Err(e) => (false, format!("error: {e}")),
        };
        let verdict = if ok { "PASS" } else { "FAIL" };
        let known = KNOWN_FAILURES.iter().find(|(n, _)| *n == c.number);
        let note = match (ok, known) {
            (false, Some((_, why))) => format!(" [known failure: {why}]"),
            _ => String::new(),
        };
        println!(
            "criterion {:>2} {verdict}  {} ({:.2} s, bound {} s): {detail}{note}",
            c.number,
            c.title,
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        if !ok && known.is_none() {
            unexpected.push(c.number);
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
