//! Closed-form generating functions and their verification against enumeration.

use super::enumerate::{enumerate_series_formal, enumerate_series_numeric, Exec, Target};
use crate::config::Limits;
use crate::groups::ReflectionGroup;
use crate::laplacian::{char_poly, w_laplacian_formal};
use crate::linalg::{char_poly_faddeev, Matrix};
use crate::report::Report;
use crate::scalar::poly::w_to_q;
use crate::scalar::{egf_product_formula, Cyc, LinearForm, PolyQ, QAlgebra, Rational, Ring, TruncatedEGF};
use crate::towers::{all_orderings, standard_tower, tower_spectrum, ParabolicTower, WeightSystem};
use crate::{CoxError, Result};
use num_bigint::BigInt;
use serde_json::json;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * BigInt::from(k))
}

/// `e^{t·w(R)}/h · Π (1 − e^{−t λ_i})` for a tower, with `λ` the tower spectrum.
pub fn product_formula_for_tower(g: &ReflectionGroup, t: &ParabolicTower, len: usize) -> Result<TruncatedEGF<PolyQ>> {
    let ws = WeightSystem::from_tower(g, t);
    let lambdas = tower_spectrum(g, t)?;
    let h = g.coxeter_number_int()?;
    Ok(egf_product_formula::<Rational>(&ws.total_form(), &lambdas, h, len))
}

fn compare_series<K: Ring + std::fmt::Debug>(
    rep: &mut Report,
    lhs: &TruncatedEGF<K>,
    rhs: &TruncatedEGF<K>,
    len: usize,
) {
    for l in 0..=len {
        let (a, b) = (lhs.coeff(l), rhs.coeff(l));
        rep.compare(a == b, || {
            format!("coefficient of t^{l}/{l}!: enumerated {a:?}, formula {b:?}")
        });
    }
}

/// Compares the enumerated Coxeter-class series with the tower product formula.
pub fn verify_main_theorem(g: &ReflectionGroup, t: &ParabolicTower, len: usize, limits: &Limits) -> Result<Report> {
    let cls = g.coxeter_class()?;
    let ws = WeightSystem::from_tower(g, t);
    let lhs = enumerate_series_formal(
        g,
        &ws,
        &Target::Elements(cls.members.clone()),
        len,
        limits,
        Exec::default(),
    )?;
    let rhs = product_formula_for_tower(g, t, len)?;
    let mut rep = Report::new("mainthm", &g.label);
    compare_series(&mut rep, &lhs, &rhs, len);
    let spec: Vec<String> = tower_spectrum(g, t)?.iter().map(|f| f.to_string()).collect();
    Ok(rep.with_details(json!({ "tower": t.source, "spectrum": spec, "length": len })))
}

/// The main theorem for every standard tower, one per generator ordering.
pub fn verify_main_theorem_all_orderings(g: &ReflectionGroup, len: usize, limits: &Limits) -> Result<Report> {
    let mut rep = Report::new("mainthm", &g.label);
    let mut towers = Vec::new();
    for ord in all_orderings(g.rank) {
        let t = standard_tower(g, &ord)?;
        let r = verify_main_theorem(g, &t, len, limits)?;
        rep.absorb(&r);
        towers.push(json!({ "ordering": ord, "passed": r.passed, "spectrum": r.details["spectrum"] }));
    }
    Ok(rep.with_details(json!({ "length": len, "towers": towers })))
}

/// Result of the reduced-count check.
#[derive(Clone, Debug)]
pub struct ReducedCount {
    /// Coefficient of `t^n/n!` summed over the Coxeter class.
    pub count: PolyQ,
    /// `n!/h · det L`.
    pub from_determinant: PolyQ,
    /// Every monomial coefficient is divisible by `n!`.
    pub divisible_by_n_factorial: bool,
}

impl ReducedCount {
    pub fn passed(&self) -> bool {
        self.count == self.from_determinant && self.divisible_by_n_factorial
    }

    pub fn to_report(&self, label: &str) -> Report {
        let mut rep = Report::new("reduced", label);
        rep.compare(self.count == self.from_determinant, || {
            format!(
                "reduced count {:?}, n!/h · det L {:?}",
                self.count, self.from_determinant
            )
        });
        rep.compare(self.divisible_by_n_factorial, || {
            "a coefficient is not divisible by n!".into()
        });
        rep.with_details(json!({
            "count": self.count.to_json(),
            "from_determinant": self.from_determinant.to_json(),
            "divisible_by_n_factorial": self.divisible_by_n_factorial,
        }))
    }
}

/// Reduced factorizations over the Coxeter class versus `n!/h · det L`.
pub fn reduced_count(g: &ReflectionGroup, ws: &WeightSystem, limits: &Limits) -> Result<ReducedCount> {
    let n = g.rank;
    let cls = g.coxeter_class()?;
    let series = enumerate_series_formal(g, ws, &Target::Elements(cls.members), n, limits, Exec::default())?;
    let count = series.coeff(n);
    let cp = char_poly(&w_laplacian_formal(g, ws));
    let det = w_to_q(&cp[0]).ok_or_else(|| CoxError::Internal("det L is not rational".into()))?;
    let h = g.coxeter_number();
    let from_determinant = det.scale_q(&(Rational::from_integer(factorial(n)) / h));
    let nf = Rational::from_integer(factorial(n));
    let divisible = count.all_coeffs(|c| (c / &nf).is_integer());
    Ok(ReducedCount {
        count,
        from_determinant,
        divisible_by_n_factorial: divisible,
    })
}

/// Dihedral labels: `t_i = c^i · s` for the Coxeter element `c = s_0 s_1` and the generator
/// `s = s_1`, so that `t_i t_j = c^{i−j}`.
pub fn dihedral_reflection_labels(g: &ReflectionGroup) -> Result<Vec<usize>> {
    let m = match g.family {
        crate::groups::Family::Monomial { r, p, n: 2 } if r == p => r,
        _ => return Err(CoxError::InvalidArgument("expected a dihedral group I2(m)".into())),
    };
    let c = g.generator_product();
    let s = g.generators()[1];
    let mut out = Vec::with_capacity(m);
    let mut x = s;
    for _ in 0..m {
        out.push(
            g.reflection_position(x)
                .ok_or_else(|| CoxError::Internal("dihedral label is not a reflection".into()))?,
        );
        x = g.mul(c, x);
    }
    Ok(out)
}

/// The closed form `1/m Σ_i (ζ^i + ζ^{−i}) H(t, ζ^i)` with `H(t,u) = cosh(t √(P(u)P(u^{-1})))`
/// and `P(u) = Σ_i u^i ω_i`, expanded as an even-power series.
pub fn dihedral_closed_form(m: usize, weights: &[Rational], len: usize) -> Result<TruncatedEGF<Rational>> {
    if m < 3 || weights.len() != m {
        return Err(CoxError::InvalidArgument(format!(
            "dihedral closed form needs m ≥ 3 and m weights, got m = {m}, {} weights",
            weights.len()
        )));
    }
    let z = |k: i64| Cyc::zeta_pow(m as u32, k);
    let p = |s: i64| {
        weights.iter().enumerate().fold(Cyc::zero(), |acc, (i, w)| {
            acc.add(&z(s * i as i64).mul(&Cyc::from_rational(w.clone())))
        })
    };
    let mut coeffs = vec![Cyc::zero(); len + 1];
    for i in 0..m as i64 {
        let q = p(i).mul(&p(-i));
        let pref = z(i).add(&z(-i));
        let mut pw = Cyc::one();
        for l in (0..=len).step_by(2) {
            coeffs[l] = coeffs[l].add(&pref.mul(&pw));
            pw = pw.mul(&q);
        }
    }
    let inv_m = Rational::new(1.into(), BigInt::from(m));
    let out: Option<Vec<Rational>> = coeffs.iter().map(|c| c.as_rational().map(|q| q * &inv_m)).collect();
    out.map(|c| TruncatedEGF::new(len, c))
        .ok_or_else(|| CoxError::Internal("dihedral closed form left the rationals".into()))
}

/// Closed form versus enumeration for `I2(m)` with per-label weights `ω_0..ω_{m−1}`.
pub fn verify_dihedral(g: &ReflectionGroup, weights: &[Rational], len: usize) -> Result<Report> {
    let labels = dihedral_reflection_labels(g)?;
    let m = labels.len();
    let mut per_refl = vec![Rational::from_integer(0.into()); g.num_reflections()];
    for (i, &r) in labels.iter().enumerate() {
        per_refl[r] = weights[i].clone();
    }
    let cls = g.coxeter_class()?;
    let lhs = enumerate_series_numeric(g, &per_refl, &Target::Elements(cls.members), len, Exec::default());
    let rhs = dihedral_closed_form(m, weights, len)?;
    let mut rep = Report::new("dihedral", &g.label);
    compare_series(&mut rep, &lhs, &rhs, len);
    Ok(rep)
}

/// Reflection-tower weights for a divisor chain `m_1 | m_2 | … | m_k = m` of `I2(m)`: the
/// reflections of the dihedral subgroup of order `2m_1` get `ω_1`, and those of `I2(m_i)` not in
/// `I2(m_{i−1})` get `ω_i`.
pub fn divisor_chain_weights(g: &ReflectionGroup, chain: &[usize]) -> Result<WeightSystem> {
    let labels = dihedral_reflection_labels(g)?;
    let m = labels.len();
    if chain.is_empty()
        || *chain.last().unwrap() != m
        || chain.windows(2).any(|w| w[1] % w[0] != 0 || w[0] == w[1])
        || chain[0] == 0
    {
        return Err(CoxError::InvalidArgument(format!(
            "{chain:?} is not a strictly increasing divisor chain ending at {m}"
        )));
    }
    let mut assignment = vec![0usize; g.num_reflections()];
    for (j, &r) in labels.iter().enumerate() {
        let level = chain.iter().position(|&mi| j % (m / mi) == 0).unwrap();
        assignment[r] = level;
    }
    Ok(WeightSystem {
        num_vars: chain.len(),
        assignment,
    })
}

/// Eigenvalues `λ_1 = m ω_k` and `λ_2 = 2m_1 ω_1 + Σ_{i=2}^{k−1} 2(m_i − m_{i−1}) ω_i + (m − 2m_{k−1}) ω_k`.
pub fn divisor_chain_spectrum(chain: &[usize]) -> Vec<LinearForm> {
    let k = chain.len();
    let m = chain[k - 1] as i64;
    let mut l1 = vec![0i64; k];
    l1[k - 1] = m;
    let mut l2 = vec![0i64; k];
    if k == 1 {
        l2[0] = m;
    } else {
        l2[0] += 2 * chain[0] as i64;
        for i in 1..k - 1 {
            l2[i] += 2 * (chain[i] as i64 - chain[i - 1] as i64);
        }
        l2[k - 1] += m - 2 * chain[k - 2] as i64;
    }
    vec![LinearForm::new(l1), LinearForm::new(l2)]
}

/// Product formula for a divisor chain against enumeration.
pub fn dihedral_reflection_tower(g: &ReflectionGroup, chain: &[usize], len: usize, limits: &Limits) -> Result<Report> {
    let ws = divisor_chain_weights(g, chain)?;
    let m = *chain.last().unwrap() as i64;
    let cls = g.coxeter_class()?;
    let lhs = enumerate_series_formal(g, &ws, &Target::Elements(cls.members), len, limits, Exec::default())?;
    let lams = divisor_chain_spectrum(chain);
    let rhs = egf_product_formula::<Rational>(&ws.total_form(), &lams, m, len);
    let mut rep = Report::new("dihedral-chain", &g.label);
    compare_series(&mut rep, &lhs, &rhs, len);
    Ok(rep.with_details(json!({ "chain": chain, "spectrum": lams.iter().map(|f| f.to_string()).collect::<Vec<_>>() })))
}

/// Series `det(I − e^{−tM})` over the truncated-series ring.
fn det_one_minus_exp(m: &Matrix<Cyc>, len: usize) -> Result<TruncatedEGF<Cyc>> {
    let n = m.rows();
    // e^{−tM} as a matrix of series: entry (i,j) has coefficients ((−M)^ℓ)_{ij}
    let neg = m.map(|x| x.neg());
    let mut powers = vec![Matrix::<Cyc>::identity(n)];
    for l in 1..=len {
        powers.push(powers[l - 1].mul(&neg));
    }
    let e = Matrix::from_fn(n, n, |i, j| {
        TruncatedEGF::new(len, (0..=len).map(|l| powers[l].get(i, j).clone()).collect())
    });
    let a = Matrix::<TruncatedEGF<Cyc>>::identity(n).sub(&e);
    // det(A) is the constant coefficient of det(xI + A)
    let cp = char_poly_faddeev(&a);
    Ok(cp[0].with_order(len))
}

/// Matrix of `Σ_τ w(τ)(1 − τ)` on `U = V_std ⊕ χ` for `G(r,1,n)`, where `V_std` is the
/// pullback of the standard `S_n` representation and `χ` is the determinant of the diagonal part.
pub fn finer_matrix_gr1n(g: &ReflectionGroup, weights: &[Rational]) -> Result<Matrix<Cyc>> {
    let (r, n) = match g.family {
        crate::groups::Family::Monomial { r, p: 1, n } => (r, n),
        _ => return Err(CoxError::InvalidArgument("expected G(r,1,n)".into())),
    };
    let dim = n; // (n − 1) + 1
    let mut m = Matrix::<Cyc>::zeros(dim, dim);
    for (ri, w) in weights.iter().enumerate() {
        let (perm, twist) = g.monomial_decode(g.reflections()[ri]).unwrap();
        let wc = Cyc::from_rational(w.clone());
        // standard part in the basis b_k = e_k − e_n: (I − P_σ) restricted to sum-zero vectors
        for k in 0..n - 1 {
            let mut img = vec![0i64; n];
            img[k] += 1;
            img[n - 1] -= 1;
            let mut moved = vec![0i64; n];
            moved[perm[k]] += 1;
            moved[perm[n - 1]] -= 1;
            for (i, (a, b)) in img.iter().zip(&moved).enumerate().take(n - 1) {
                let d = a - b;
                if d != 0 {
                    let e = m.get(i, k).add(&wc.mul(&Cyc::from_int(d)));
                    m.set(i, k, e);
                }
            }
        }
        let s: usize = twist.iter().sum();
        let chi = Cyc::zeta_pow(r as u32, s as i64);
        let e = m.get(n - 1, n - 1).add(&wc.mul(&Cyc::one().sub(&chi)));
        m.set(n - 1, n - 1, e);
    }
    Ok(m)
}

/// `e^{t w(R)}/(rn) · det(I − e^{−tM_U})` against enumeration with per-reflection weights.
fn verify_finer(g: &ReflectionGroup, weights: &[Rational], len: usize, name: &str) -> Result<Report> {
    let (r, n) = match g.family {
        crate::groups::Family::Monomial { r, p: 1, n } => (r, n),
        _ => return Err(CoxError::InvalidArgument("expected G(r,1,n)".into())),
    };
    let m = finer_matrix_gr1n(g, weights)?;
    let det = det_one_minus_exp(&m, len)?;
    let wr: Rational = weights.iter().fold(Rational::from_integer(0.into()), |a, w| a + w);
    let pref = TruncatedEGF::exp_linear(len, &Cyc::from_rational(wr));
    let rhs = pref.mul(&det).scale_q(&Rational::new(1.into(), BigInt::from(r * n)));
    let rhs: Option<Vec<Rational>> = rhs.coeffs().iter().map(|c| c.as_rational()).collect();
    let rhs = TruncatedEGF::new(
        len,
        rhs.ok_or_else(|| CoxError::Internal("finer formula left the rationals".into()))?,
    );
    let cls = g.coxeter_class()?;
    let lhs = enumerate_series_numeric(g, weights, &Target::Elements(cls.members), len, Exec::default());
    let mut rep = Report::new(name, &g.label);
    compare_series(&mut rep, &lhs, &rhs, len);
    Ok(rep)
}

/// Finer `B_n` formula for arbitrary per-reflection weights.
pub fn finer_formula_bn(g: &ReflectionGroup, weights: &[Rational], len: usize) -> Result<Report> {
    match g.family {
        crate::groups::Family::Monomial { r: 2, p: 1, .. } => verify_finer(g, weights, len, "finer-bn"),
        _ => Err(CoxError::InvalidArgument("expected B_n = G(2,1,n)".into())),
    }
}

/// Finer `G(r,1,n)` formula; weights must be constant on each hyperplane.
pub fn finer_formula_gr1n(g: &ReflectionGroup, weights: &[Rational], len: usize) -> Result<Report> {
    for h in g.hyperplanes() {
        if h.reflections.iter().any(|&r| weights[r] != weights[h.reflections[0]]) {
            return Err(CoxError::NotHyperplaneConstant);
        }
    }
    verify_finer(g, weights, len, "finer-gr1n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_group;
    use crate::scalar::{rat, rint};
    use crate::towers::standard_tower;

    fn grp(d: &str) -> ReflectionGroup {
        build_group(d, &Limits::default()).unwrap()
    }

    #[test]
    fn main_theorem_small() {
        for d in ["A2", "A3", "B2", "I2(5)", "G(3,1,2)"] {
            let g = grp(d);
            let t = standard_tower(&g, &(0..g.rank).collect::<Vec<_>>()).unwrap();
            let r = verify_main_theorem(&g, &t, g.rank + 3, &Limits::default()).unwrap();
            assert!(r.passed, "{d}: {:?}", r.first_discrepancy);
        }
    }

    #[test]
    fn reduced_counts() {
        let g = grp("B2");
        let ws = WeightSystem::uniform(&g);
        let rc = reduced_count(&g, &ws, &Limits::default()).unwrap();
        assert_eq!(rc.count, PolyQ::monomial(vec![2], rint(8)));
        assert_eq!(rc.count, rc.from_determinant);
    }

    #[test]
    fn dihedral_examples() {
        let w: Vec<Rational> = (1..=4).map(rint).collect();
        let f = dihedral_closed_form(4, &w, 3).unwrap();
        assert_eq!(f.coeff(2), rint(48));
        assert_eq!(f.coeff(3), rint(0));
        let ones = vec![rint(1); 3];
        assert_eq!(dihedral_closed_form(3, &ones, 2).unwrap().coeff(2), rint(6));
        let g = grp("I2(4)");
        assert!(verify_dihedral(&g, &w, 6).unwrap().passed);
    }

    #[test]
    fn divisor_chains() {
        let g = grp("I2(6)");
        for chain in [vec![2, 6], vec![3, 6], vec![6]] {
            let r = dihedral_reflection_tower(&g, &chain, 7, &Limits::default()).unwrap();
            assert!(r.passed, "{chain:?}: {:?}", r.first_discrepancy);
        }
    }

    #[test]
    fn finer_b2() {
        let g = grp("B2");
        let w = vec![rat(1, 2), rint(3), rat(-2, 7), rint(5)];
        let r = finer_formula_bn(&g, &w, 6).unwrap();
        assert!(r.passed, "{:?}", r.first_discrepancy);
    }
}
