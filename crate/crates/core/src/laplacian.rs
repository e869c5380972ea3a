//! Weighted W-Laplacians, arrangement Laplacians, characteristic polynomials and the
//! `R Ω R̄ᵀ` factorization.

use crate::groups::ReflectionGroup;
use crate::linalg::{char_poly_faddeev, det_bareiss, rank, Matrix, SpanBasis};
use crate::scalar::{Cyc, Field, LinearForm, Poly, PolyW, QAlgebra, Rational, Ring};
use crate::towers::WeightSystem;
use crate::{CoxError, Result};

/// `Σ_τ ω_{a(τ)} (I − ρ_V(τ))` with formal weights.
pub fn w_laplacian_formal(g: &ReflectionGroup, ws: &WeightSystem) -> Matrix<PolyW> {
    let n = g.dim;
    let mut m = Matrix::<PolyW>::zeros(n, n);
    let id = Matrix::<Cyc>::identity(n);
    for r in 0..g.num_reflections() {
        let d = id.sub(g.reflection_matrix(r));
        let v = ws.assignment[r];
        for i in 0..n {
            for j in 0..n {
                let c = d.get(i, j);
                if !c.is_zero() {
                    let mut mono = vec![0u16; v + 1];
                    mono[v] = 1;
                    let e = m.get(i, j).add(&Poly::monomial(mono, c.clone()));
                    m.set(i, j, e);
                }
            }
        }
    }
    m
}

/// `Σ_τ w(τ) (I − ρ_V(τ))` with one rational weight per reflection.
pub fn w_laplacian_numeric(g: &ReflectionGroup, weights: &[Rational]) -> Matrix<Cyc> {
    let n = g.dim;
    let id = Matrix::<Cyc>::identity(n);
    let mut m = Matrix::<Cyc>::zeros(n, n);
    for (r, w) in weights.iter().enumerate() {
        let d = id.sub(g.reflection_matrix(r));
        m = m.add(&d.scale(&Cyc::from_rational(w.clone())));
    }
    m
}

/// Coefficients of `det(x·I + L)` in `x`, lowest degree first.
pub fn char_poly<K: QAlgebra>(l: &Matrix<K>) -> Vec<K> {
    char_poly_faddeev(l)
}

/// `Π_j (x + λ_j)` as coefficients in `x` with polynomial entries in ω.
pub fn product_of_linear_factors(lambdas: &[LinearForm]) -> Vec<PolyW> {
    let mut acc: Vec<PolyW> = vec![PolyW::one()];
    for lam in lambdas {
        let l: PolyW = lam.to_poly();
        let mut next = vec![PolyW::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k] = next[k].add(&c.mul(&l));
            next[k + 1] = next[k + 1].add(c);
        }
        acc = next;
    }
    acc
}

/// Divides `det(x + L)` by `Π (x + λ_j)`; true when the quotient is one with zero remainder.
pub fn spectrum_divides(cp: &[PolyW], lambdas: &[LinearForm]) -> bool {
    // Dividing two monic polynomials of equal degree leaves quotient 1 and remainder cp − Π.
    cp.len() == lambdas.len() + 1 && product_of_linear_factors(lambdas) == cp
}

/// `det(x + L)` at a numeric `x` by fraction-free elimination.
pub fn det_shifted(l: &Matrix<Cyc>, x: &Cyc) -> Cyc {
    let n = l.rows();
    let shifted = l.add(&Matrix::<Cyc>::identity(n).scale(x));
    det_bareiss(&shifted)
}

/// Pseudodeterminant: the product of the nonzero eigenvalues, read from the characteristic
/// polynomial at the rank.
pub fn pseudodeterminant<F: Field>(l: &Matrix<F>) -> F {
    let r = rank(l);
    let cp = char_poly_faddeev(l);
    cp[l.rows() - r].clone()
}

/// Trace identity `Σ_H Σ_k w(τ_H^k)(1 − ζ_{e_H}^k)`.
pub fn trace_formula(g: &ReflectionGroup, weights: &[Rational]) -> Cyc {
    let mut acc = Cyc::zero();
    for h in g.hyperplanes() {
        for (k, &r) in h.reflections.iter().enumerate() {
            let z = Cyc::zeta_pow(h.order as u32, (k + 1) as i64);
            acc = acc.add(&Cyc::one().sub(&z).mul(&Cyc::from_rational(weights[r].clone())));
        }
    }
    acc
}

/// Arrangement Laplacian `Σ_i ω_{v(i)} (I − S_{r_i})` with `I − S_{r_i} = c_i · u_i u_i^† G`.
///
/// Each normal is stored as a primitive vector `u_i` together with the exact scale
/// `c_i = ⟨r_i, r_i⟩ / ⟨u_i, u_i⟩`, so norms whose square roots leave the field are handled
/// without taking roots.
#[derive(Clone, Debug)]
pub struct ArrLaplacian {
    pub dim: usize,
    pub normals: Vec<Vec<Cyc>>,
    pub scales: Vec<Cyc>,
    /// Weight variable index of each normal.
    pub weight_vars: Vec<usize>,
    pub num_vars: usize,
    /// Hermitian form `G` with `⟨u, v⟩ = v^† G u`.
    pub form: Matrix<Cyc>,
}

fn herm(form: &Matrix<Cyc>, u: &[Cyc], v: &[Cyc]) -> Cyc {
    let gu = form.mul_vec(u);
    gu.iter()
        .zip(v)
        .fold(Cyc::zero(), |acc, (a, b)| acc.add(&a.mul(&b.conj())))
}

impl ArrLaplacian {
    /// Builds from normals with prescribed squared norms `⟨r_i, r_i⟩`.
    pub fn with_norms(
        form: Matrix<Cyc>,
        normals: Vec<Vec<Cyc>>,
        norms: &[Cyc],
        weight_vars: Vec<usize>,
    ) -> Result<Self> {
        let dim = form.rows();
        let mut scales = Vec::new();
        for (u, nrm) in normals.iter().zip(norms) {
            if u.len() != dim {
                return Err(CoxError::InvalidArgument("normal of wrong dimension".into()));
            }
            let uu = herm(&form, u, u);
            let c = nrm
                .div(&uu)
                .ok_or_else(|| CoxError::InvalidArgument("isotropic normal vector".into()))?;
            scales.push(c);
        }
        let num_vars = weight_vars.iter().map(|&v| v + 1).max().unwrap_or(0);
        Ok(ArrLaplacian {
            dim,
            normals,
            scales,
            weight_vars,
            num_vars,
            form,
        })
    }

    /// `⟨u_i, u_j⟩`.
    pub fn gram(&self, i: usize, j: usize) -> Cyc {
        herm(&self.form, &self.normals[i], &self.normals[j])
    }

    /// Rank-one summand `I − S_{r_i}` as a matrix: `v ↦ c_i ⟨v, u_i⟩ u_i`.
    pub fn summand(&self, i: usize) -> Matrix<Cyc> {
        let u = &self.normals[i];
        // row functional v ↦ u^† G v
        let ubar: Vec<Cyc> = u.iter().map(|x| x.conj()).collect();
        let row: Vec<Cyc> = (0..self.dim)
            .map(|j| (0..self.dim).fold(Cyc::zero(), |acc, k| acc.add(&ubar[k].mul(self.form.get(k, j)))))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |a, b| self.scales[i].mul(&u[a]).mul(&row[b]))
    }

    pub fn formal_matrix(&self) -> Matrix<PolyW> {
        let mut m = Matrix::<PolyW>::zeros(self.dim, self.dim);
        for i in 0..self.normals.len() {
            let s = self.summand(i);
            let v = self.weight_vars[i];
            let mut mono = vec![0u16; v + 1];
            mono[v] = 1;
            for a in 0..self.dim {
                for b in 0..self.dim {
                    let c = s.get(a, b);
                    if !c.is_zero() {
                        let e = m.get(a, b).add(&Poly::monomial(mono.clone(), c.clone()));
                        m.set(a, b, e);
                    }
                }
            }
        }
        m
    }

    pub fn numeric_matrix(&self, values: &[Rational]) -> Matrix<Cyc> {
        let mut m = Matrix::<Cyc>::zeros(self.dim, self.dim);
        for i in 0..self.normals.len() {
            let w = Cyc::from_rational(values[self.weight_vars[i]].clone());
            m = m.add(&self.summand(i).scale(&w));
        }
        m
    }

    /// Restriction to the normals with the given indices.
    pub fn localize(&self, idx: &[usize]) -> ArrLaplacian {
        ArrLaplacian {
            dim: self.dim,
            normals: idx.iter().map(|&i| self.normals[i].clone()).collect(),
            scales: idx.iter().map(|&i| self.scales[i].clone()).collect(),
            weight_vars: idx.iter().map(|&i| self.weight_vars[i]).collect(),
            num_vars: self.num_vars,
            form: self.form.clone(),
        }
    }

    /// Subset-expansion of `det(x + L)`: sum over linearly independent normal subsets `S` of
    /// `Π_{i∈S} ω_i c_i · det(⟨u_s, u_t⟩)_{s,t∈S} · x^{n−|S|}`.
    pub fn burman_expansion(&self) -> Vec<PolyW> {
        let n = self.dim;
        let mut out = vec![PolyW::zero(); n + 1];
        let mut chosen: Vec<usize> = Vec::new();
        self.burman_rec(0, &mut chosen, &mut SpanBasis::new(n), &mut out);
        out
    }

    fn burman_rec(&self, start: usize, chosen: &mut Vec<usize>, span: &mut SpanBasis<Cyc>, out: &mut Vec<PolyW>) {
        let k = chosen.len();
        let gram = Matrix::from_fn(k, k, |s, t| self.gram(chosen[s], chosen[t]));
        let mut coeff = det_bareiss(&gram);
        let mut mono = vec![0u16; self.num_vars];
        for &i in chosen.iter() {
            coeff = coeff.mul(&self.scales[i]);
            mono[self.weight_vars[i]] += 1;
        }
        let term = Poly::monomial(mono, coeff);
        out[self.dim - k] = out[self.dim - k].add(&term);
        if k == self.dim {
            return;
        }
        for i in start..self.normals.len() {
            if span.contains(&self.normals[i]) {
                continue;
            }
            let mut next = span.clone();
            next.insert(&self.normals[i]);
            chosen.push(i);
            self.burman_rec(i + 1, chosen, &mut next, out);
            chosen.pop();
        }
    }
}

/// Realizes a W-Laplacian with hyperplane-constant weights as an arrangement Laplacian with
/// normals of norm `⟨r_H, r_H⟩ = e_H`.
pub fn arr_from_group(g: &ReflectionGroup, ws: &WeightSystem) -> Result<ArrLaplacian> {
    if !ws.is_hyperplane_constant(g) {
        return Err(CoxError::NotHyperplaneConstant);
    }
    let normals: Vec<Vec<Cyc>> = g.hyperplanes().iter().map(|h| h.root.clone()).collect();
    let norms: Vec<Cyc> = g.hyperplanes().iter().map(|h| Cyc::from_int(h.order as i64)).collect();
    let vars: Vec<usize> = g
        .hyperplanes()
        .iter()
        .map(|h| ws.assignment[h.reflections[0]])
        .collect();
    let mut a = ArrLaplacian::with_norms(g.form().clone(), normals, &norms, vars)?;
    a.num_vars = ws.num_vars;
    Ok(a)
}

/// Checks `L = R Ω' R^† G` with one column of `R` per reflection.
///
/// Column `j` is the primitive root `u_j` of the reflection's hyperplane and
/// `Ω' = diag(w_j (1 − ζ_j) / ⟨u_j, u_j⟩)`, where `ζ_j` is the reflection's eigenvalue.
pub fn rrt_check(g: &ReflectionGroup, weights: &[Rational]) -> bool {
    let n = g.dim;
    let nr = g.num_reflections();
    let r = Matrix::from_fn(n, nr, |i, j| {
        g.hyperplanes()[g.reflection_hyperplane(j)].root[i].clone()
    });
    let mut omega = Matrix::<Cyc>::zeros(nr, nr);
    for j in 0..nr {
        let h = &g.hyperplanes()[g.reflection_hyperplane(j)];
        let z = Cyc::zeta_pow(h.order as u32, g.reflection_power(j) as i64);
        let uu = g.inner(&h.root, &h.root);
        let d = Cyc::one()
            .sub(&z)
            .mul(&Cyc::from_rational(weights[j].clone()))
            .div(&uu)
            .expect("anisotropic root");
        omega.set(j, j, d);
    }
    let rhs = r.mul(&omega).mul(&r.adjoint()).mul(g.form());
    rhs == w_laplacian_numeric(g, weights)
}

/// All `C(n, k)` sums of `k` distinct entries, as a multiset.
pub fn wedge_spectrum(lambdas: &[LinearForm], k: usize) -> Vec<LinearForm> {
    let n = lambdas.len();
    let width = lambdas.first().map_or(0, |f| f.len());
    let mut out = Vec::new();
    fn rec(l: &[LinearForm], k: usize, start: usize, acc: LinearForm, out: &mut Vec<LinearForm>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..l.len() {
            rec(l, k - 1, i + 1, acc.add(&l[i]), out);
        }
    }
    if k <= n {
        rec(lambdas, k, 0, LinearForm::zero(width), &mut out);
    }
    out
}

/// Induced derivation of `A` on `Λ^k` in the basis of increasing index sets.
pub fn exterior_derivation<K: Ring>(a: &Matrix<K>, k: usize) -> Matrix<K> {
    let n = a.rows();
    let subsets: Vec<Vec<usize>> = {
        let mut v = Vec::new();
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(n, k, 0, &mut Vec::new(), &mut v);
        v
    };
    let index = |s: &[usize]| subsets.iter().position(|t| t == s);
    let m = subsets.len();
    let mut out = Matrix::<K>::zeros(m, m);
    for (col, s) in subsets.iter().enumerate() {
        // D(e_{s_1} ∧ … ∧ e_{s_k}) = Σ_p e_{s_1} ∧ … ∧ A e_{s_p} ∧ … ∧ e_{s_k}
        for p in 0..k {
            for i in 0..n {
                let c = a.get(i, s[p]);
                if c.is_zero() {
                    continue;
                }
                if i != s[p] && s.contains(&i) {
                    continue;
                }
                let mut t = s.clone();
                t[p] = i;
                // sort with sign
                let mut sign = 1i64;
                for x in 0..k {
                    for y in x + 1..k {
                        if t[x] > t[y] {
                            sign = -sign;
                        }
                    }
                }
                t.sort();
                let row = index(&t).unwrap();
                let v = if sign > 0 { c.clone() } else { c.neg() };
                let e = out.get(row, col).add(&v);
                out.set(row, col, e);
            }
        }
    }
    out
}

/// Weighted Laplacian of the complete graph `K_n`, `n × n`, with edge weights `w_{ij}`
/// listed in lexicographic order of pairs `i < j`.
pub fn complete_graph_laplacian(n: usize, weights: &[Rational]) -> Matrix<Rational> {
    let mut m = Matrix::<Rational>::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            let w = &weights[k];
            k += 1;
            m.set(i, i, m.get(i, i).add(w));
            m.set(j, j, m.get(j, j).add(w));
            m.set(i, j, m.get(i, j).sub(w));
            m.set(j, i, m.get(j, i).sub(w));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::groups::build_group;
    use crate::scalar::{rat, rint};
    use crate::towers::{standard_tower, tower_spectrum};

    #[test]
    fn unweighted_is_scalar_h() {
        for d in ["A3", "B3", "G(3,1,2)", "G(3,3,3)", "H3", "I2(5)"] {
            let g = build_group(d, &Limits::default()).unwrap();
            let ones = vec![rint(1); g.num_reflections()];
            let l = w_laplacian_numeric(&g, &ones);
            let h = Cyc::from_rational(g.coxeter_number());
            assert_eq!(l, Matrix::identity(g.dim).scale(&h), "{d}");
        }
    }

    #[test]
    fn s4_char_poly() {
        let g = build_group("A3", &Limits::default()).unwrap();
        let l = w_laplacian_numeric(&g, &vec![rint(1); 6]);
        let cp = char_poly(&l);
        let want: Vec<Cyc> = [64, 48, 12, 1].iter().map(|&c| Cyc::from_int(c)).collect();
        assert_eq!(cp, want);
    }

    #[test]
    fn dihedral_tower_laplacian() {
        // eigenvalues r ω1 and 2 ω0 + (r − 2) ω1
        let g = build_group("I2(5)", &Limits::default()).unwrap();
        let t = standard_tower(&g, &[0, 1]).unwrap();
        let ws = WeightSystem::from_tower(&g, &t);
        let cp = char_poly(&w_laplacian_formal(&g, &ws));
        let lams = vec![LinearForm::new(vec![0, 5]), LinearForm::new(vec![2, 3])];
        assert!(spectrum_divides(&cp, &lams));
        assert_eq!(
            tower_spectrum(&g, &t).unwrap(),
            vec![LinearForm::new(vec![2, 3]), LinearForm::new(vec![0, 5])]
        );
    }

    #[test]
    fn arrangement_realizes_group() {
        for d in ["A2", "B3", "G(3,1,2)", "H3"] {
            let g = build_group(d, &Limits::default()).unwrap();
            let ws = WeightSystem::per_hyperplane(&g);
            let a = arr_from_group(&g, &ws).unwrap();
            let vals: Vec<Rational> = (0..ws.num_vars).map(|i| rat(i as i64 + 2, 3)).collect();
            assert_eq!(
                a.numeric_matrix(&vals),
                w_laplacian_numeric(&g, &ws.numeric(&vals)),
                "{d}"
            );
            assert_eq!(a.formal_matrix(), w_laplacian_formal(&g, &ws), "{d}");
        }
    }

    #[test]
    fn burman_matches_char_poly() {
        for d in ["A2", "A3", "B2", "G(3,1,2)"] {
            let g = build_group(d, &Limits::default()).unwrap();
            let ws = WeightSystem::per_hyperplane(&g);
            let a = arr_from_group(&g, &ws).unwrap();
            assert_eq!(a.burman_expansion(), char_poly(&a.formal_matrix()), "{d}");
        }
    }

    #[test]
    fn rrt_factorization() {
        for d in ["G(2,1,1)", "A2", "G(3,1,2)", "B3"] {
            let g = build_group(d, &Limits::default()).unwrap();
            let w: Vec<Rational> = (0..g.num_reflections()).map(|i| rat(2 * i as i64 + 1, 5)).collect();
            assert!(rrt_check(&g, &w), "{d}");
        }
    }

    #[test]
    fn wedge_edges() {
        let l = vec![
            LinearForm::new(vec![1, 0]),
            LinearForm::new(vec![0, 1]),
            LinearForm::new(vec![1, 1]),
        ];
        assert_eq!(wedge_spectrum(&l, 0), vec![LinearForm::zero(2)]);
        assert_eq!(wedge_spectrum(&l, 3), vec![LinearForm::new(vec![2, 2])]);
        assert_eq!(wedge_spectrum(&l, 2).len(), 3);
    }

    #[test]
    fn k4_pseudodeterminant() {
        let l = complete_graph_laplacian(4, &vec![rint(1); 6]);
        assert_eq!(pseudodeterminant(&l), rint(64));
    }
}
