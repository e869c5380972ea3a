//! Finite reflection groups enumerated as permutation groups of a vector catalog.
//!
//! Every group acts on a finite set of vectors (the catalog) that spans the ambient space
//! and contains a basis; an element is stored as the permutation it induces on the catalog.
//! Composition of permutations matches multiplication of the representing matrices:
//! `(g·h)(i) = g(h(i))` and `ρ(g)·v_i = v_{g(i)}`.

mod build;
mod coxeter;

pub use build::{build_group, parse_descriptor, GroupSpec};
pub use coxeter::CoxeterClass;

use crate::config::Limits;
use crate::linalg::{rank_of_vectors, Matrix, SpanBasis};
use crate::scalar::{Cyc, Field, Rational, Ring};
use crate::{CoxError, Result};
use num_bigint::BigInt;
use serde_json::json;
use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

/// Which construction produced the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Symmetric group `S_n` on its `(n−1)`-dimensional reflection representation.
    Sym(usize),
    /// Monomial group `G(r,p,n)`; only `p = 1` and `p = r` are built.
    Monomial { r: usize, p: usize, n: usize },
    /// Icosahedral group on its 30 roots.
    H3,
    /// Reflection subgroup generated inside a parent group.
    Subgroup,
}

/// A reflecting hyperplane `H` with its cyclic pointwise stabilizer.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    /// Spanning vector of the root line `H^⊥`, first nonzero coordinate equal to one.
    pub root: Vec<Cyc>,
    /// Order `e_H` of the pointwise stabilizer.
    pub order: usize,
    /// Reflection indices `τ_H, τ_H^2, …, τ_H^{e_H−1}` where `τ_H` has eigenvalue `e^{2πi/e_H}`.
    pub reflections: Vec<usize>,
}

/// Summary of an irreducible component of a reflection (sub)group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    /// Hyperplane indices of the component.
    pub hyperplanes: Vec<usize>,
    /// Number of reflections `|R|`.
    pub num_reflections: usize,
    /// Number of hyperplanes `|R*|`.
    pub num_hyperplanes: usize,
    pub rank: usize,
    /// Coxeter number `(|R| + |R*|)/rank`.
    pub coxeter_number: Rational,
}

/// Fully enumerated finite reflection group.
pub struct ReflectionGroup {
    pub label: String,
    pub family: Family,
    /// Ambient dimension of the representation.
    pub dim: usize,
    /// Rank (dimension of the span of the root lines).
    pub rank: usize,
    /// Cyclotomic order of the field of matrix entries.
    pub field_order: u32,
    catalog: Vec<Vec<Cyc>>,
    basis_idx: Vec<usize>,
    form: Matrix<Cyc>,
    perm_len: usize,
    elems: Vec<u16>,
    index: HashMap<Box<[u16]>, u32>,
    identity: usize,
    generators: Vec<usize>,
    reflections: Vec<usize>,
    refl_hyperplane: Vec<usize>,
    refl_power: Vec<usize>,
    hyperplanes: Vec<Hyperplane>,
    refl_mats: Vec<Matrix<Cyc>>,
    inverses: OnceLock<Vec<u32>>,
    refl_left: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for ReflectionGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ReflectionGroup({}, |W|={}, |R|={}, |R*|={}, rank={})",
            self.label,
            self.order(),
            self.num_reflections(),
            self.num_hyperplanes(),
            self.rank
        )
    }
}

fn vec_key(v: &[Cyc]) -> Vec<(u32, Vec<Rational>)> {
    v.iter().map(|c| c.key()).collect()
}

fn compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&i| a[i as usize]).collect()
}

fn invert(a: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u16;
    }
    out
}

/// Normalises a nonzero vector so its first nonzero coordinate is one.
pub fn normalize_line(v: &[Cyc]) -> Vec<Cyc> {
    let p = v.iter().position(|x| !x.is_zero()).expect("nonzero vector");
    let inv = v[p].inv().unwrap();
    v.iter().map(|x| x.mul(&inv)).collect()
}

/// Input data for the generic enumerator.
pub(crate) struct CatalogData {
    pub label: String,
    pub family: Family,
    pub dim: usize,
    pub field_order: u32,
    pub catalog: Vec<Vec<Cyc>>,
    pub basis_idx: Vec<usize>,
    pub form: Matrix<Cyc>,
}

impl ReflectionGroup {
    /// Enumerates the group generated by the given matrices acting on the catalog.
    pub(crate) fn from_generator_matrices(data: CatalogData, gens: &[Matrix<Cyc>], limits: &Limits) -> Result<Self> {
        let mut lookup: HashMap<Vec<(u32, Vec<Rational>)>, usize> = HashMap::new();
        for (i, v) in data.catalog.iter().enumerate() {
            lookup.insert(vec_key(v), i);
        }
        let mut perms = Vec::new();
        for g in gens {
            let mut p = Vec::with_capacity(data.catalog.len());
            for v in &data.catalog {
                let w = g.mul_vec(v);
                let idx = lookup
                    .get(&vec_key(&w))
                    .ok_or_else(|| CoxError::Internal(format!("catalog of {} is not stable", data.label)))?;
                p.push(*idx as u16);
            }
            perms.push(p);
        }
        Self::from_generator_perms(data, &perms, limits)
    }

    pub(crate) fn from_generator_perms(data: CatalogData, gen_perms: &[Vec<u16>], limits: &Limits) -> Result<Self> {
        let m = data.catalog.len();
        let id: Vec<u16> = (0..m as u16).collect();
        let mut elems: Vec<u16> = Vec::new();
        let mut index: HashMap<Box<[u16]>, u32> = HashMap::new();
        let mut queue = VecDeque::new();
        index.insert(id.clone().into_boxed_slice(), 0);
        elems.extend_from_slice(&id);
        queue.push_back(0usize);
        while let Some(gi) = queue.pop_front() {
            let g = elems[gi * m..(gi + 1) * m].to_vec();
            for s in gen_perms {
                let sg = compose(s, &g);
                if !index.contains_key(sg.as_slice()) {
                    let k = index.len();
                    if k + 1 > limits.group_cap {
                        return Err(CoxError::GroupCapExceeded {
                            order: k + 1,
                            cap: limits.group_cap,
                        });
                    }
                    index.insert(sg.clone().into_boxed_slice(), k as u32);
                    elems.extend_from_slice(&sg);
                    queue.push_back(k);
                }
            }
        }
        let generators: Vec<usize> = gen_perms.iter().map(|p| index[p.as_slice()] as usize).collect();
        let mut g = ReflectionGroup {
            label: data.label,
            family: data.family,
            dim: data.dim,
            rank: 0,
            field_order: data.field_order,
            catalog: data.catalog,
            basis_idx: data.basis_idx,
            form: data.form,
            perm_len: m,
            elems,
            index,
            identity: 0,
            generators,
            reflections: Vec::new(),
            refl_hyperplane: Vec::new(),
            refl_power: Vec::new(),
            hyperplanes: Vec::new(),
            refl_mats: Vec::new(),
            inverses: OnceLock::new(),
            refl_left: OnceLock::new(),
        };
        g.find_reflections()?;
        let roots: Vec<Vec<Cyc>> = g.hyperplanes.iter().map(|h| h.root.clone()).collect();
        g.rank = rank_of_vectors(&roots);
        Ok(g)
    }

    /// Reflections are the conjugacy closure of the nontrivial powers of the generators,
    /// each certified to fix a hyperplane pointwise.
    fn find_reflections(&mut self) -> Result<()> {
        let mut found: Vec<usize> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        for &s in &self.generators.clone() {
            let sp = self.perm(s).to_vec();
            let mut p = sp.clone();
            while p.iter().enumerate().any(|(i, &x)| x as usize != i) {
                let idx = self.index[p.as_slice()] as usize;
                if seen.insert(idx) {
                    queue.push_back(idx);
                }
                p = compose(&sp, &p);
            }
        }
        let gens: Vec<(Vec<u16>, Vec<u16>)> = self
            .generators
            .iter()
            .map(|&s| {
                let p = self.perm(s).to_vec();
                let q = invert(&p);
                (p, q)
            })
            .collect();
        while let Some(t) = queue.pop_front() {
            found.push(t);
            let tp = self.perm(t).to_vec();
            for (s, sinv) in &gens {
                let c = compose(s, &compose(&tp, sinv));
                let idx = self.index[c.as_slice()] as usize;
                if seen.insert(idx) {
                    queue.push_back(idx);
                }
            }
        }
        // Certify and group by root line.
        let mut line_index: HashMap<Vec<(u32, Vec<Rational>)>, usize> = HashMap::new();
        // (root line, [(reflection, eigenvalue)])
        type LineBlock = (Vec<Cyc>, Vec<(usize, Cyc)>);
        let mut hyper: Vec<LineBlock> = Vec::new();
        let ident = Matrix::<Cyc>::identity(self.dim);
        for &t in &found {
            let mt = self.matrix(t);
            let d = ident.sub(&mt);
            if crate::linalg::rank(&d) != 1 {
                return Err(CoxError::Internal(format!(
                    "generator power closure produced a non-reflection in {}",
                    self.label
                )));
            }
            let col = (0..self.dim)
                .map(|j| d.col(j))
                .find(|c| c.iter().any(|x| !x.is_zero()))
                .unwrap();
            let line = normalize_line(&col);
            // nontrivial eigenvalue = trace − (dim − 1)
            let eig = mt.trace().sub(&Cyc::from_int(self.dim as i64 - 1));
            let key = vec_key(&line);
            let hi = *line_index.entry(key).or_insert_with(|| {
                hyper.push((line.clone(), Vec::new()));
                hyper.len() - 1
            });
            hyper[hi].1.push((t, eig));
        }
        let mut reflections = Vec::new();
        let mut refl_hyperplane = Vec::new();
        let mut refl_power = Vec::new();
        let mut hyperplanes = Vec::new();
        for (hi, (root, members)) in hyper.into_iter().enumerate() {
            let e = members.len() + 1;
            let mut ordered: Vec<(usize, usize)> = Vec::new();
            for (t, eig) in members {
                let k = (1..e)
                    .find(|&k| Cyc::zeta_pow(e as u32, k as i64) == eig)
                    .ok_or_else(|| {
                        CoxError::Internal(format!(
                            "reflection eigenvalue is not an {e}-th root of unity in {}",
                            self.label
                        ))
                    })?;
                ordered.push((k, t));
            }
            ordered.sort();
            let mut ids = Vec::new();
            for (k, t) in ordered {
                ids.push(reflections.len());
                reflections.push(t);
                refl_hyperplane.push(hi);
                refl_power.push(k);
            }
            hyperplanes.push(Hyperplane {
                root,
                order: e,
                reflections: ids,
            });
        }
        self.refl_mats = reflections.iter().map(|&t| self.matrix(t)).collect();
        self.reflections = reflections;
        self.refl_hyperplane = refl_hyperplane;
        self.refl_power = refl_power;
        self.hyperplanes = hyperplanes;
        Ok(())
    }

    /// Group order `|W|`.
    pub fn order(&self) -> usize {
        self.index.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Catalog permutation of element `g`.
    pub fn perm(&self, g: usize) -> &[u16] {
        &self.elems[g * self.perm_len..(g + 1) * self.perm_len]
    }

    /// Index of the element with the given catalog permutation.
    pub fn element_index(&self, p: &[u16]) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of `g·h`.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        let p = compose(self.perm(g), self.perm(h));
        self.index[p.as_slice()] as usize
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses_table()[g] as usize
    }

    fn inverses_table(&self) -> &Vec<u32> {
        self.inverses.get_or_init(|| {
            (0..self.order())
                .map(|g| self.index[invert(self.perm(g)).as_slice()])
                .collect()
        })
    }

    /// Index of `h g h^{-1}`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse(h))
    }

    /// Multiplicative order of element `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let p = self.perm(g);
        let mut seen = vec![false; p.len()];
        let mut l = 1usize;
        for i in 0..p.len() {
            if seen[i] {
                continue;
            }
            let mut c = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = p[j] as usize;
                c += 1;
            }
            l = num_integer::lcm(l, c);
        }
        l
    }

    /// Matrix `ρ_V(g)` in the basis of the representation.
    pub fn matrix(&self, g: usize) -> Matrix<Cyc> {
        let p = self.perm(g);
        let cols: Vec<&Vec<Cyc>> = self.basis_idx.iter().map(|&b| &self.catalog[p[b] as usize]).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    /// Standard generators (element indices) in their listed order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Reflections `R`, ordered by hyperplane and then by power.
    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.hyperplanes.len()
    }

    /// Hyperplane index of reflection `i` (an index into `reflections()`).
    pub fn reflection_hyperplane(&self, i: usize) -> usize {
        self.refl_hyperplane[i]
    }

    /// Exponent `k` with `reflections()[i] = τ_H^k`.
    pub fn reflection_power(&self, i: usize) -> usize {
        self.refl_power[i]
    }

    /// Matrix of reflection `i` (an index into `reflections()`).
    pub fn reflection_matrix(&self, i: usize) -> &Matrix<Cyc> {
        &self.refl_mats[i]
    }

    /// Position of element `g` in the reflection list, if it is a reflection.
    pub fn reflection_position(&self, g: usize) -> Option<usize> {
        self.reflections.iter().position(|&t| t == g)
    }

    /// Invariant Hermitian form `G`, so `⟨u, v⟩ = v^† G u`.
    pub fn form(&self) -> &Matrix<Cyc> {
        &self.form
    }

    /// `⟨u, v⟩ = v^† G u`.
    pub fn inner(&self, u: &[Cyc], v: &[Cyc]) -> Cyc {
        let gu = self.form.mul_vec(u);
        let mut acc = Cyc::zero();
        for (a, b) in gu.iter().zip(v) {
            acc = acc.add(&a.mul(&b.conj()));
        }
        acc
    }

    /// Coxeter number `(|R| + |R*|)/rank`.
    pub fn coxeter_number(&self) -> Rational {
        Rational::new(
            BigInt::from(self.num_reflections() + self.num_hyperplanes()),
            BigInt::from(self.rank.max(1)),
        )
    }

    /// Coxeter number as an integer; errors if it is not integral.
    pub fn coxeter_number_int(&self) -> Result<i64> {
        let h = self.coxeter_number();
        crate::scalar::ring::rational_to_i64(&h)
            .ok_or_else(|| CoxError::Internal(format!("non-integral Coxeter number for {}", self.label)))
    }

    /// Table `t[r·|W| + g] = τ_r^{-1}·g` used by the convolution kernels.
    pub fn reflection_left_table(&self) -> &Vec<u32> {
        self.refl_left.get_or_init(|| {
            let n = self.order();
            let mut t = Vec::with_capacity(self.reflections.len() * n);
            for &r in &self.reflections {
                let rinv = self.inverse(r);
                let rp = self.perm(rinv).to_vec();
                for g in 0..n {
                    let p = compose(&rp, self.perm(g));
                    t.push(self.index[p.as_slice()]);
                }
            }
            t
        })
    }

    /// Splits a set of hyperplanes into irreducible components (root lines connected when
    /// they are not orthogonal).
    pub fn components_of(&self, hyps: &[usize]) -> Vec<ComponentInfo> {
        let k = hyps.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..k {
            for b in a + 1..k {
                let ip = self.inner(&self.hyperplanes[hyps[a]].root, &self.hyperplanes[hyps[b]].root);
                if !ip.is_zero() {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for a in 0..k {
            let r = find(&mut parent, a);
            groups.entry(r).or_default().push(hyps[a]);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        for c in comps.iter_mut() {
            c.sort();
        }
        comps.sort();
        comps.into_iter().map(|c| self.component_info(c)).collect()
    }

    fn component_info(&self, hyps: Vec<usize>) -> ComponentInfo {
        let nr: usize = hyps.iter().map(|&h| self.hyperplanes[h].order - 1).sum();
        let roots: Vec<Vec<Cyc>> = hyps.iter().map(|&h| self.hyperplanes[h].root.clone()).collect();
        let rank = rank_of_vectors(&roots);
        ComponentInfo {
            num_reflections: nr,
            num_hyperplanes: hyps.len(),
            rank,
            coxeter_number: Rational::new(BigInt::from(nr + hyps.len()), BigInt::from(rank.max(1))),
            hyperplanes: hyps,
        }
    }

    /// Irreducible components of the whole group.
    pub fn components(&self) -> Vec<ComponentInfo> {
        let all: Vec<usize> = (0..self.num_hyperplanes()).collect();
        self.components_of(&all)
    }

    /// All hyperplanes whose root lies in the span of the given roots (Steinberg closure).
    pub fn closure_of_roots(&self, span: &SpanBasis<Cyc>) -> Vec<usize> {
        (0..self.num_hyperplanes())
            .filter(|&h| span.contains(&self.hyperplanes[h].root))
            .collect()
    }

    /// Span of the roots of a hyperplane set.
    pub fn root_span(&self, hyps: &[usize]) -> SpanBasis<Cyc> {
        let mut s = SpanBasis::new(self.dim);
        for &h in hyps {
            s.insert(&self.hyperplanes[h].root);
        }
        s
    }

    /// Decodes an element of a monomial group into `(perm, twist)`: column `i` of the matrix has
    /// the entry `ζ_r^{twist[i]}` in row `perm[i]`.
    pub fn monomial_decode(&self, g: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let Family::Monomial { r, n, .. } = self.family else {
            return None;
        };
        let p = self.perm(g);
        let mut perm = Vec::with_capacity(n);
        let mut twist = Vec::with_capacity(n);
        for i in 0..n {
            let img = p[i * r] as usize;
            perm.push(img / r);
            twist.push(img % r);
        }
        Some((perm, twist))
    }

    /// Decodes an element of `Sym(n)` into the permutation of `{0..n−1}` it represents.
    pub fn sym_decode(&self, g: usize) -> Option<Vec<usize>> {
        let Family::Sym(n) = self.family else {
            return None;
        };
        let p = self.perm(g);
        let pairs = build::sym_pairs(n);
        let mut sigma = vec![usize::MAX; n];
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            let (a, b) = pairs[p[idx] as usize];
            sigma[i] = a;
            sigma[j] = b;
        }
        Some(sigma)
    }

    /// Left-regular action matrix of a group-algebra element `Σ c_g g`, size `|W|`.
    pub fn regular_matrix(&self, support: &[usize]) -> Matrix<Rational> {
        let n = self.order();
        let mut m = Matrix::<Rational>::zeros(n, n);
        for &t in support {
            for g in 0..n {
                let tg = self.mul(t, g);
                let v = m.get(tg, g).add(&Rational::from_integer(1.into()));
                m.set(tg, g, v);
            }
        }
        m
    }

    /// Enumerates the reflection subgroup generated by the reflections of the given hyperplanes.
    pub fn subgroup(&self, hyps: &[usize], limits: &Limits) -> Result<ReflectionGroup> {
        let gens: Vec<Vec<u16>> = hyps
            .iter()
            .map(|&h| self.perm(self.reflections[self.hyperplanes[h].reflections[0]]).to_vec())
            .collect();
        let data = CatalogData {
            label: format!("{}[sub]", self.label),
            family: Family::Subgroup,
            dim: self.dim,
            field_order: self.field_order,
            catalog: self.catalog.clone(),
            basis_idx: self.basis_idx.clone(),
            form: self.form.clone(),
        };
        if hyps.is_empty() {
            return ReflectionGroup::from_generator_perms(data, &[], limits);
        }
        ReflectionGroup::from_generator_perms(data, &gens, limits)
    }

    /// Maps a hyperplane of a subgroup built by [`subgroup`](Self::subgroup) to the parent index.
    pub fn parent_hyperplane(&self, sub: &ReflectionGroup, h: usize) -> usize {
        let key = vec_key(&sub.hyperplanes[h].root);
        self.hyperplanes
            .iter()
            .position(|x| vec_key(&x.root) == key)
            .expect("subgroup hyperplane belongs to parent")
    }

    /// Hyperplane whose root line contains the nonzero vector `v`.
    pub fn hyperplane_of_root(&self, v: &[Cyc]) -> Option<usize> {
        let key = vec_key(&normalize_line(v));
        self.hyperplanes.iter().position(|x| vec_key(&x.root) == key)
    }

    /// Exhaustive reflection search over all elements; used to cross-check the closure method.
    pub fn reflections_bruteforce(&self) -> Vec<usize> {
        let ident = Matrix::<Cyc>::identity(self.dim);
        (0..self.order())
            .filter(|&g| g != self.identity && crate::linalg::rank(&ident.sub(&self.matrix(g))) == 1)
            .collect()
    }

    /// JSON group card.
    pub fn card(&self) -> serde_json::Value {
        let gens: Vec<Vec<Vec<String>>> = self
            .generators
            .iter()
            .map(|&g| {
                let m = self.matrix(g);
                (0..self.dim)
                    .map(|i| (0..self.dim).map(|j| m.get(i, j).to_string()).collect())
                    .collect()
            })
            .collect();
        let h = self.coxeter_number();
        json!({
            "label": self.label,
            "order": self.order(),
            "rank": self.rank,
            "dim": self.dim,
            "field_order": self.field_order,
            "num_reflections": self.num_reflections(),
            "num_hyperplanes": self.num_hyperplanes(),
            "coxeter_number": crate::scalar::ring::fmt_rational(&h),
            "hyperplane_orders": self.hyperplanes.iter().map(|h| h.order).collect::<Vec<_>>(),
            "generator_matrices": gens,
        })
    }

    /// Trace identity `Σ_τ tr(I − ρ(τ))`.
    pub fn reflection_trace_sum(&self) -> Cyc {
        let mut acc = Cyc::zero();
        for m in &self.refl_mats {
            acc = acc.add(&Cyc::from_int(self.dim as i64).sub(&m.trace()));
        }
        acc
    }
}
