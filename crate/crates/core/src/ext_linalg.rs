//! Dense exact linear algebra over `F_{q^m}` (and over `F_q`, embedded).

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field_tower::{ExtElement, FieldTower, SubspaceFq};

/// Dense row-major matrix over `F_{q^m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExtElement>,
}

impl ExtMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExtMatrix {
            rows,
            cols,
            data: vec![ExtElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ExtElement::ONE } else { ExtElement::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExtElement) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExtMatrix { rows, cols, data }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<ExtElement>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        ExtMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<ExtElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExtMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> ExtElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExtElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[ExtElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<ExtElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[ExtElement] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<ExtElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Submatrix with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Columns `start..end`.
    pub fn columns(&self, start: usize, end: usize) -> Self {
        Self::from_fn(self.rows, end - start, |i, j| self.get(i, start + j))
    }

    pub fn hstack(&self, other: &ExtMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    pub fn map(&self, f: impl Fn(ExtElement) -> ExtElement) -> Self {
        ExtMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn mul(&self, tower: &FieldTower, other: &ExtMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            tower.sum((0..self.cols).map(|l| tower.mul(self.get(i, l), other.get(l, j))))
        }))
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, tower: &FieldTower, v: &[ExtElement]) -> Vec<ExtElement> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| tower.sum((0..self.rows).map(|i| tower.mul(v[i], self.get(i, j)))))
            .collect()
    }

    pub fn add(&self, tower: &FieldTower, other: &ExtMatrix) -> Result<Self> {
        self.zip(other, |a, b| tower.add(a, b))
    }

    pub fn sub(&self, tower: &FieldTower, other: &ExtMatrix) -> Result<Self> {
        self.zip(other, |a, b| tower.sub(a, b))
    }

    fn zip(&self, other: &ExtMatrix, f: impl Fn(ExtElement, ExtElement) -> ExtElement) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExtMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn neg(&self, tower: &FieldTower) -> Self {
        self.map(|x| tower.neg(x))
    }

    /// Entrywise `θ^s`.
    pub fn frobenius(&self, tower: &FieldTower, s: i64) -> Self {
        self.map(|x| tower.frobenius(x, s))
    }

    /// `Φ_s(X) = θ^s(X) - X`.
    pub fn phi_s(&self, tower: &FieldTower, s: i64) -> Result<Self> {
        tower.check_s(s)?;
        Ok(self.map(|x| tower.sub(tower.frobenius(x, s), x)))
    }

    pub fn is_over_base(&self, tower: &FieldTower) -> bool {
        self.data.iter().all(|&x| tower.is_in_base(x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `A_{i,j}` depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        (1..self.rows).all(|i| (0..self.cols.saturating_sub(1)).all(|j| self.get(i, j) == self.get(i - 1, j + 1)))
    }

    /// `A_{i,j}` depends only on `j - i`.
    pub fn is_toeplitz(&self) -> bool {
        (1..self.rows).all(|i| (1..self.cols).all(|j| self.get(i, j) == self.get(i - 1, j - 1)))
    }

    /// Square and `A_{i,j}` depends only on `j - i mod r`.
    pub fn is_circulant(&self) -> bool {
        let r = self.rows;
        self.rows == self.cols
            && (0..r).all(|i| (0..r).all(|j| self.get(i, j) == self.get(0, (j + r - i) % r)))
    }
}

/// A matrix with all entries in `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseMatrix(ExtMatrix);

impl BaseMatrix {
    pub fn new(tower: &FieldTower, m: ExtMatrix) -> Result<Self> {
        if !m.is_over_base(tower) {
            return Err(Error::NotOverBase);
        }
        Ok(BaseMatrix(m))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BaseMatrix(ExtMatrix::zeros(rows, cols))
    }

    pub fn as_ext(&self) -> &ExtMatrix {
        &self.0
    }

    pub fn into_ext(self) -> ExtMatrix {
        self.0
    }
}

/// Result of row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: ExtMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Field operations (additions, multiplications, inversions) performed.
    pub ops: u64,
}

/// Reduced row echelon form by Gauss–Jordan elimination: leftmost nonzero
/// column, topmost nonzero row.
pub fn rref(tower: &FieldTower, m: &ExtMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut ops = 0u64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = tower.inv(a.get(r, c)).expect("pivot is nonzero");
        ops += 1;
        for j in c..cols {
            let v = tower.mul(a.get(r, j), inv);
            a.set(r, j, v);
        }
        ops += (cols - c) as u64;
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c);
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = tower.sub(a.get(i, j), tower.mul(f, a.get(r, j)));
                a.set(i, j, v);
            }
            ops += 2 * (cols - c) as u64;
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        reduced: a,
        rank: r,
        pivots,
        ops,
    }
}

pub fn rank(tower: &FieldTower, m: &ExtMatrix) -> usize {
    rref(tower, m).rank
}

pub fn is_rref(tower: &FieldTower, m: &ExtMatrix) -> bool {
    rref(tower, m).reduced == *m
}

pub fn inverse(tower: &FieldTower, m: &ExtMatrix) -> Option<ExtMatrix> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let aug = m.hstack(&ExtMatrix::identity(n)).ok()?;
    let r = rref(tower, &aug);
    if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.reduced.columns(n, 2 * n))
}

/// Determinant by elimination.
pub fn determinant(tower: &FieldTower, m: &ExtMatrix) -> Result<ExtElement> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = ExtElement::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return Ok(ExtElement::ZERO);
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = tower.neg(det);
        }
        let pivot = a.get(c, c);
        det = tower.mul(det, pivot);
        let inv = tower.inv(pivot).expect("nonzero pivot");
        for i in c + 1..n {
            let f = tower.mul(a.get(i, c), inv);
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = tower.sub(a.get(i, j), tower.mul(f, a.get(c, j)));
                a.set(i, j, v);
            }
        }
    }
    Ok(det)
}

/// Solves `A x = b` for square nonsingular `A`.
pub fn solve(tower: &FieldTower, a: &ExtMatrix, b: &[ExtElement]) -> Option<Vec<ExtElement>> {
    let n = a.rows;
    if a.cols != n || b.len() != n {
        return None;
    }
    let col = ExtMatrix::from_flat(n, 1, b.to_vec());
    let r = rref(tower, &a.hstack(&col).ok()?);
    if r.pivots.len() < n || r.pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    Some(r.reduced.column(n))
}

/// Basis of the right kernel `{x : M x = 0}`.
pub fn nullspace(tower: &FieldTower, m: &ExtMatrix) -> Vec<Vec<ExtElement>> {
    let r = rref(tower, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ExtElement::ZERO; m.cols];
            v[f] = ExtElement::ONE;
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = tower.neg(r.reduced.get(i, f));
            }
            v
        })
        .collect()
}

/// `dim_{F_q} span(v)`.
pub fn q_rank(tower: &FieldTower, v: &[ExtElement]) -> usize {
    let coords = crate::field_tower::SubspaceFq::span(tower, v);
    coords.dim()
}

/// `supp_q(v)`.
pub fn q_support(tower: &FieldTower, v: &[ExtElement]) -> SubspaceFq {
    SubspaceFq::span(tower, v)
}

/// `k × n` s-Moore matrix: row `i` is `θ^{is}` applied to `v`.
pub fn moore_matrix(tower: &FieldTower, v: &[ExtElement], k: usize, s: i64) -> Result<ExtMatrix> {
    tower.check_s(s)?;
    if k == 0 {
        return Err(Error::InvalidDimensions("Moore matrix needs k >= 1".into()));
    }
    Ok(ExtMatrix::from_fn(k, v.len(), |i, j| tower.frobenius(v[j], i as i64 * s)))
}

/// Largest dimension accepted by [`superregular`].
pub const SUPERREGULAR_MAX_DIM: usize = 6;

/// True iff every square minor of every size is nonzero. Minors are visited
/// by ascending size, then lexicographic row and column index sets.
pub fn superregular(tower: &FieldTower, m: &ExtMatrix) -> Result<bool> {
    if m.rows > SUPERREGULAR_MAX_DIM || m.cols > SUPERREGULAR_MAX_DIM {
        return Err(Error::TooLarge {
            rows: m.rows,
            cols: m.cols,
        });
    }
    for size in 1..=m.rows.min(m.cols) {
        for rows in (0..m.rows).combinations(size) {
            for cols in (0..m.cols).combinations(size) {
                if determinant(tower, &m.select(&rows, &cols))?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Gaussian binomial `binom(n, k)_q`, `None` on overflow.
pub fn gaussian_binomial_checked(n: u32, k: u32, q: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    // binom(i, j) = binom(i-1, j-1) + q^j binom(i-1, j)
    let k = k as usize;
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            let qj = (q as u128).checked_pow(j as u32)?;
            row[j] = row[j - 1].checked_add(qj.checked_mul(row[j])?)?;
        }
    }
    Some(row[k])
}

/// Gaussian binomial `binom(n, k)_q`; panics on `u128` overflow.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    gaussian_binomial_checked(n, k, q).expect("Gaussian binomial overflows u128")
}

/// Default cap on the number of enumerated matrices.
pub const DEFAULT_TQ_CAP: u128 = 1_000_000;

/// Iterator over `T_q(k, n)`: full-rank `k × n` matrices over `F_q` in
/// reduced row echelon form. Pivot sets are visited lexicographically and the
/// free entries in odometer order (first free entry fastest).
#[derive(Debug, Clone)]
pub struct TqIter {
    k: usize,
    n: usize,
    q: u32,
    pivot_sets: std::vec::IntoIter<Vec<usize>>,
    current: Option<(Vec<usize>, Vec<(usize, usize)>, Vec<u32>)>,
}

impl TqIter {
    fn advance_pivots(&mut self) {
        self.current = self.pivot_sets.next().map(|pivots| {
            let free = free_positions(&pivots, self.n);
            let counter = vec![0; free.len()];
            (pivots, free, counter)
        });
    }
}

fn free_positions(pivots: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free.push((i, c));
            }
        }
    }
    free
}

impl Iterator for TqIter {
    type Item = BaseMatrix;

    fn next(&mut self) -> Option<BaseMatrix> {
        loop {
            let (pivots, free, counter) = self.current.as_mut()?;
            if counter.len() > free.len() {
                // exhausted marker
                self.advance_pivots();
                continue;
            }
            let mut m = ExtMatrix::zeros(self.k, self.n);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(i, p, ExtElement::ONE);
            }
            for (&(i, c), &v) in free.iter().zip(counter.iter()) {
                m.set(i, c, ExtElement::from_code(v));
            }
            // odometer step
            let mut pos = 0;
            loop {
                if pos == counter.len() {
                    counter.push(0); // mark exhausted
                    break;
                }
                counter[pos] += 1;
                if counter[pos] < self.q {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            return Some(BaseMatrix(m));
        }
    }
}

/// Enumerates `T_q(k, n)`, failing if `binom(n, k)_q` exceeds `cap`.
pub fn enumerate_tq(k: usize, n: usize, q: u32, cap: u128) -> Result<TqIter> {
    if k > n {
        return Err(Error::InvalidDimensions(format!("k = {k} > n = {n}")));
    }
    let needed = gaussian_binomial_checked(n as u32, k as u32, q as u64).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let sets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let mut it = TqIter {
        k,
        n,
        q,
        pivot_sets: sets.into_iter(),
        current: None,
    };
    it.advance_pivots();
    Ok(it)
}
