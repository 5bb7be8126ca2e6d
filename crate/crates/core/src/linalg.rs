//! Small dense matrices over an exact field.
//!
//! Used for Lie algebra bases, representation images and the linear solves
//! behind decompositions. Everything is exact Gauss-Jordan elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Clone, PartialEq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Matrix unit `E_ij` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = S::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| S::from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn rank(&self) -> usize {
        rref(self.to_rows()).1.len()
    }

    #[allow(clippy::needless_range_loop)]
    pub fn determinant(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = S::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(S::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone() / pivot.clone();
                for c in col..n {
                    let v = a[col][c].clone() * f.clone();
                    a[r][c] = a[r][c].clone() - v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug: Vec<Vec<S>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
                row
            })
            .collect();
        let (red, pivots) = rref(aug);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        Self::from_rows(red.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_upper_triangular(&self, strict: bool) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols)
                .filter(|&j| if strict { j <= i } else { j < i })
                .all(|j| self[(i, j)].is_zero())
        })
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|s| {
                            parse_scalar(s).ok_or_else(|| Error::Parse(format!("bad rational `{s}`")))
                        })
                        .collect::<Result<Vec<S>>>()
                })
                .collect::<Result<_>>()?,
        )
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.data.chunks(self.cols.max(1)).take(self.rows);
        f.debug_list()
            .entries(rows.map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

impl<S: Scalar> Serialize for Mat<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Mat<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        Mat::from_strings(&rows).map_err(serde::de::Error::custom)
    }
}

/// A random invertible `k x k` matrix with entries `a/b`, `|a| <= 5`, `1 <= b <= 3`.
pub fn random_invertible<S: Scalar, R: rand::Rng>(k: usize, rng: &mut R) -> Mat<S> {
    loop {
        let m = Mat::from_fn(k, k, |_, _| {
            S::from_int(rng.gen_range(-5..=5)) / S::from_int(rng.gen_range(1..=3))
        });
        if m.determinant().map(|d| !d.is_zero()).unwrap_or(false) {
            return m;
        }
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn rref<S: Scalar>(mut rows: Vec<Vec<S>>) -> (Vec<Vec<S>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = S::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for k in c..ncols {
                let v = rows[r][k].clone() * f.clone();
                rows[i][k] = rows[i][k].clone() - v;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Coordinates of `target` in the span of the linearly independent `basis`
/// vectors, or `None` when it lies outside.
pub fn coordinates<S: Scalar>(basis: &[Vec<S>], target: &[S]) -> Option<Vec<S>> {
    let k = basis.len();
    let rows: Vec<Vec<S>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<S> = basis.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![S::zero(); k];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// Coordinates in a fixed span, factored once and queried many times.
///
/// The basis is brought to reduced echelon form `R = T B`; a target `t` in
/// the span satisfies `t = y R` with `y` its entries at the pivot columns,
/// so its coordinates are `y T`.
pub struct SpanSolver<S> {
    reduced: Vec<Vec<S>>,
    transform: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> SpanSolver<S> {
    /// Fails with [`Error::LinearlyDependent`] unless the vectors are independent.
    pub fn new(basis: &[Vec<S>]) -> Result<Self> {
        let k = basis.len();
        let width = basis.first().map_or(0, Vec::len);
        let rows: Vec<Vec<S>> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut row = v.clone();
                row.extend((0..k).map(|j| if i == j { S::one() } else { S::zero() }));
                row
            })
            .collect();
        let (red, pivots) = rref(rows);
        if pivots.len() != k || pivots.iter().any(|&p| p >= width) {
            return Err(Error::LinearlyDependent);
        }
        let (reduced, transform) = red
            .into_iter()
            .map(|mut r| {
                let t = r.split_off(width);
                (r, t)
            })
            .unzip();
        Ok(SpanSolver {
            reduced,
            transform,
            pivots,
        })
    }

    pub fn coordinates(&self, target: &[S]) -> Option<Vec<S>> {
        let k = self.pivots.len();
        let mut rebuilt = vec![S::zero(); target.len()];
        let mut x = vec![S::zero(); k];
        for (r, &p) in self.pivots.iter().enumerate() {
            let y = &target[p];
            if y.is_zero() {
                continue;
            }
            for (v, e) in rebuilt.iter_mut().zip(&self.reduced[r]) {
                if !e.is_zero() {
                    *v = v.clone() + y.clone() * e.clone();
                }
            }
            for (v, e) in x.iter_mut().zip(&self.transform[r]) {
                if !e.is_zero() {
                    *v = v.clone() + y.clone() * e.clone();
                }
            }
        }
        (rebuilt == target).then_some(x)
    }
}

/// Incremental exact solver for a square system assembled one equation at a time.
///
/// Equations are reduced against the pivots collected so far; independent ones
/// are kept until the coefficient part reaches full rank.
pub struct IncrementalSolver<S> {
    unknowns: usize,
    rows: Vec<(usize, Vec<S>)>,
    inconsistent: bool,
}

impl<S: Scalar> IncrementalSolver<S> {
    pub fn new(unknowns: usize) -> Self {
        IncrementalSolver {
            unknowns,
            rows: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.unknowns
    }

    /// True once some equation contradicted the ones kept before it.
    pub fn saw_inconsistency(&self) -> bool {
        self.inconsistent
    }

    /// Adds `coeffs . x = rhs`; returns whether the rank grew.
    pub fn push(&mut self, mut coeffs: Vec<S>, rhs: S) -> bool {
        debug_assert_eq!(coeffs.len(), self.unknowns);
        coeffs.push(rhs);
        for (p, row) in &self.rows {
            if coeffs[*p].is_zero() {
                continue;
            }
            let f = coeffs[*p].clone();
            for (v, r) in coeffs.iter_mut().zip(row) {
                *v = v.clone() - r.clone() * f.clone();
            }
        }
        match (0..self.unknowns).find(|&c| !coeffs[c].is_zero()) {
            Some(p) => {
                let inv = S::one() / coeffs[p].clone();
                for v in coeffs.iter_mut() {
                    *v = v.clone() * inv.clone();
                }
                for (_, row) in self.rows.iter_mut() {
                    if row[p].is_zero() {
                        continue;
                    }
                    let f = row[p].clone();
                    for (v, r) in row.iter_mut().zip(&coeffs) {
                        *v = v.clone() - r.clone() * f.clone();
                    }
                }
                self.rows.push((p, coeffs));
                true
            }
            None => {
                if !coeffs[self.unknowns].is_zero() {
                    self.inconsistent = true;
                }
                false
            }
        }
    }

    /// The unique solution of the kept equations, once full rank.
    pub fn solution(&self) -> Option<Vec<S>> {
        self.is_full_rank().then(|| self.particular_solution())
    }

    /// A solution of the kept equations with every free unknown set to zero.
    pub fn particular_solution(&self) -> Vec<S> {
        let mut x = vec![S::zero(); self.unknowns];
        for (p, row) in &self.rows {
            x[*p] = row[self.unknowns].clone();
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type M = Mat<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn span_solver_matches_coordinates() {
        let basis = vec![vec![q(1), q(2), q(0), q(1)], vec![q(0), q(1), q(1), q(0)], vec![q(2), q(0), q(0), q(-1)]];
        let solver = SpanSolver::new(&basis).unwrap();
        let target = vec![q(3), q(1), q(-1), q(0)];
        assert_eq!(solver.coordinates(&target), coordinates(&basis, &target));
        let t2: Vec<_> = (0..4).map(|i| basis[0][i].clone() * q(2) - basis[2][i].clone()).collect();
        assert_eq!(solver.coordinates(&t2), Some(vec![q(2), q(0), q(-1)]));
        assert_eq!(solver.coordinates(&[q(0), q(0), q(0), q(1)]), None);
        assert!(SpanSolver::new(&[vec![q(1), q(1)], vec![q(2), q(2)]]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = M::from_ints(&[&[2, 1], &[5, 3]]);
        assert_eq!(a.determinant().unwrap(), q(1));
        assert_eq!(a.mul(&a.inverse().unwrap()), M::identity(2));
        let s = M::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn span_coordinates() {
        let basis = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert_eq!(coordinates(&basis, &[q(2), q(3), q(5)]), Some(vec![q(2), q(3)]));
        assert_eq!(coordinates(&basis, &[q(1), q(0), q(0)]), None);
    }

    #[test]
    fn incremental_solver() {
        let mut s = IncrementalSolver::new(2);
        assert!(s.push(vec![q(1), q(1)], q(3)));
        assert!(!s.push(vec![q(2), q(2)], q(6)));
        assert!(!s.saw_inconsistency());
        assert!(!s.push(vec![q(2), q(2)], q(7)));
        assert!(s.saw_inconsistency());
        assert!(s.push(vec![q(1), q(-1)], q(1)));
        assert_eq!(s.solution(), Some(vec![q(2), q(1)]));
    }

    #[test]
    fn block_diagonal_and_triangularity() {
        let a = M::from_ints(&[&[0, 1], &[0, 0]]);
        let b = M::from_ints(&[&[7]]);
        let d = M::block_diag(&[&a, &b]);
        assert_eq!(d, M::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 7]]));
        assert!(d.is_upper_triangular(false));
        assert!(!d.is_upper_triangular(true));
        assert!(a.is_upper_triangular(true));
    }
}
