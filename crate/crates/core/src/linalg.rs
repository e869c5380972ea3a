//! Dense matrices over exact rings, characteristic polynomials and ranks.

use crate::scalar::{Cyc, Field, QAlgebra, Ring};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Ring> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> K>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<K> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<L: Ring, F: Fn(&K) -> L>(&self, f: F) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx].add_assign(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc.add_assign(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn trace(&self) -> K {
        let mut acc = K::zero();
        for i in 0..self.rows.min(self.cols) {
            acc.add_assign(self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Whether the matrix is a scalar multiple of the identity, returning the scalar.
    pub fn as_scalar(&self) -> Option<K> {
        if self.rows != self.cols {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if i == j {
                    if *v != c {
                        return None;
                    }
                } else if !v.is_zero() {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl Matrix<Cyc> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_complex()).collect())
            .collect()
    }
}

/// Coefficients `c_0..c_n` of `det(x·I + A)` by the Faddeev–LeVerrier recursion.
///
/// Only ring operations and exact division by the integers `1..n` are used, so this is valid
/// over any commutative `Q`-algebra, including polynomial and truncated-series rings.
pub fn char_poly_faddeev<K: QAlgebra>(a: &Matrix<K>) -> Vec<K> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "square matrix required");
    // det(xI − M) with M = −A
    let m = a.map(|x| x.neg());
    let mut c = vec![K::zero(); n + 1];
    c[n] = K::one();
    let mut mk = Matrix::<K>::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            let v = next.get(i, i).add(&c[n - k + 1]);
            next.set(i, i, v);
        }
        mk = next;
        let tr = m.mul(&mk).trace();
        c[n - k] = tr.neg().div_int(k as i64);
    }
    c
}

/// Coefficients of `det(x·I − A)` over a field by Hessenberg reduction.
pub fn char_poly_hessenberg<F: Field>(a: &Matrix<F>) -> Vec<F> {
    let n = a.rows();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let mut piv = None;
        for i in m..n {
            if !h.get(i, m - 1).is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(i) = piv else { continue };
        if i != m {
            for j in 0..n {
                let t = h.get(i, j).clone();
                h.set(i, j, h.get(m, j).clone());
                h.set(m, j, t);
            }
            for j in 0..n {
                let t = h.get(j, i).clone();
                h.set(j, i, h.get(j, m).clone());
                h.set(j, m, t);
            }
        }
        let pinv = h.get(m, m - 1).inv().expect("nonzero pivot");
        for i in (m + 1)..n {
            let f = h.get(i, m - 1).mul(&pinv);
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h.get(i, j).sub(&f.mul(h.get(m, j)));
                h.set(i, j, v);
            }
            for j in 0..n {
                let v = h.get(j, m).add(&f.mul(h.get(j, i)));
                h.set(j, m, v);
            }
        }
    }
    // p_k = characteristic polynomial of the leading k×k block
    let mut p: Vec<Vec<F>> = vec![vec![F::one()]];
    for k in 1..=n {
        let hkk = h.get(k - 1, k - 1).clone();
        // (x − h_kk) p_{k−1}
        let prev = &p[k - 1];
        let mut cur = vec![F::zero(); k + 1];
        for (i, c) in prev.iter().enumerate() {
            cur[i + 1].add_assign(c);
            cur[i] = cur[i].sub(&hkk.mul(c));
        }
        let mut prod = F::one();
        for i in 1..k {
            let idx = k - i;
            prod = prod.mul(h.get(idx, idx - 1));
            let coef = prod.mul(h.get(idx - 1, k - 1));
            if coef.is_zero() {
                continue;
            }
            let pm = &p[idx - 1];
            for (j, c) in pm.iter().enumerate() {
                cur[j] = cur[j].sub(&coef.mul(c));
            }
        }
        p.push(cur);
    }
    p.pop().unwrap()
}

/// Fraction-free (Bareiss) determinant over a field, dividing exactly at each step.
pub fn det_bareiss<F: Field>(a: &Matrix<F>) -> F {
    let n = a.rows();
    if n == 0 {
        return F::one();
    }
    let mut m = a.clone();
    let mut sign = false;
    let mut prev = F::one();
    for k in 0..n - 1 {
        if m.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                return F::zero();
            };
            for j in 0..n {
                let t = m.get(p, j).clone();
                m.set(p, j, m.get(k, j).clone());
                m.set(k, j, t);
            }
            sign = !sign;
        }
        let pinv = prev.inv().expect("nonzero previous pivot");
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m
                    .get(i, j)
                    .mul(m.get(k, k))
                    .sub(&m.get(i, k).mul(m.get(k, j)))
                    .mul(&pinv);
                m.set(i, j, v);
            }
            m.set(i, k, F::zero());
        }
        prev = m.get(k, k).clone();
    }
    let d = m.get(n - 1, n - 1).clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Rank over a field by Gaussian elimination.
pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    row_echelon(a).1
}

/// Reduced row echelon form and rank.
pub fn row_echelon<F: Field>(a: &Matrix<F>) -> (Matrix<F>, usize) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let t = m.get(p, j).clone();
                m.set(p, j, m.get(r, j).clone());
                m.set(r, j, t);
            }
        }
        let inv = m.get(r, c).inv().unwrap();
        for j in 0..cols {
            let v = m.get(r, j).mul(&inv);
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i != r && !m.get(i, c).is_zero() {
                let f = m.get(i, c).clone();
                for j in 0..cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
        }
        r += 1;
    }
    (m, r)
}

/// Basis of the right null space `{v : A v = 0}`.
pub fn null_space<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let cols = a.cols();
    let (m, r) = row_echelon(a);
    let mut pivots = Vec::with_capacity(r);
    for i in 0..r {
        pivots.push(
            (0..cols)
                .find(|&c| !m.get(i, c).is_zero())
                .expect("pivot row is nonzero"),
        );
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = m.get(i, free).neg();
            }
            v
        })
        .collect()
}

/// Determinant over a field by Gaussian elimination.
pub fn det<F: Field>(a: &Matrix<F>) -> F {
    det_bareiss(a)
}

/// Rank of a list of vectors.
pub fn rank_of_vectors<F: Field>(vs: &[Vec<F>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(vs.to_vec()))
}

/// Incremental basis of a subspace in reduced echelon form, for span-membership tests.
#[derive(Clone, Debug)]
pub struct SpanBasis<F: Field> {
    dim: usize,
    /// (pivot column, normalised row)
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let f = w[*p].clone();
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        w[j] = w[j].sub(&f.mul(x));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds a vector; returns whether the rank increased.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        let w: Vec<F> = w.iter().map(|x| x.mul(&inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (j, x) in w.iter().enumerate() {
                    if !x.is_zero() {
                        row[j] = row[j].sub(&f.mul(x));
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

/// Exact integer determinant by Bareiss elimination on `i64` (entries and minors must fit).
pub fn det_i64(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// Integer roots (with multiplicity) of a monic integer polynomial; returns the roots and the
/// remaining cofactor, which is `[1]` exactly when the polynomial splits over `Z`.
pub fn integer_roots(coeffs: &[BigInt]) -> (Vec<i64>, Vec<BigInt>) {
    let mut p = coeffs.to_vec();
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut roots = Vec::new();
    // strip zero roots
    while p.len() > 1 && p[0].is_zero() {
        roots.push(0);
        p.remove(0);
    }
    // Cauchy bound
    let lead = p.last().cloned().unwrap();
    let bound: BigInt = p
        .iter()
        .take(p.len() - 1)
        .map(|c| (c / &lead).abs())
        .max()
        .unwrap_or_default()
        + BigInt::from(1);
    let bound: i64 = i64::try_from(bound).unwrap_or(i64::MAX).min(1 << 40);
    let mut r = 1i64;
    while r <= bound && p.len() > 1 {
        let mut progress = false;
        for cand in [r, -r] {
            loop {
                if p.len() <= 1 {
                    break;
                }
                if let Some(q) = divide_linear(&p, cand) {
                    p = q;
                    roots.push(cand);
                    progress = true;
                } else {
                    break;
                }
            }
        }
        if !progress {
            r += 1;
        }
    }
    (roots, p)
}

fn divide_linear(p: &[BigInt], root: i64) -> Option<Vec<BigInt>> {
    // synthetic division by (x − root)
    let n = p.len() - 1;
    let r = BigInt::from(root);
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..=n).rev() {
        let v = &p[i] + &carry;
        if i == 0 {
            return if v.is_zero() { Some(q) } else { None };
        }
        q[i - 1] = v.clone();
        carry = v * &r;
    }
    None
}

/// Null space of `A − λI` in floating point (Gaussian elimination with partial pivoting).
pub fn complex_eigenspace(a: &[Vec<Complex64>], lambda: Complex64, tol: f64) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == n {
            break;
        }
        let (p, best) = (r..n)
            .map(|i| (i, m[i][c].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best < tol {
            continue;
        }
        m.swap(p, r);
        let pv = m[r][c];
        for j in 0..n {
            m[r][j] /= pv;
        }
        for i in 0..n {
            if i != r {
                let f = m[i][c];
                if f.norm() > 0.0 {
                    for j in 0..n {
                        let t = m[r][j];
                        m[i][j] -= f * t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            v[f] = Complex64::new(1.0, 0.0);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f];
            }
            v
        })
        .collect()
}
