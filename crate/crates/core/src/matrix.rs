//! Square matrices with polynomial entries and exact determinants.
//!
//! Two engines are available. [`PolyMatrix::det_cofactor`] expands minors
//! along the first row with memoisation over column subsets and is limited
//! to small sizes; [`PolyMatrix::det_bareiss`] runs fraction-free elimination
//! and needs exact polynomial division at every step. [`DetEngine`] picks one
//! by size and short-circuits triangular input.
//!
//! There is no modular or interpolation scheme: cost grows with the number
//! of terms in the intermediate entries, which bounds practical sizes to a
//! few dozen rows for linear-form entries in a handful of variables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::poly::{MultiPoly, PolyDoc, VarTable};
use crate::scalar::Scalar;

pub const DEFAULT_COFACTOR_CEILING: usize = 8;

#[derive(Clone, Debug)]
pub struct PolyMatrix<S> {
    size: usize,
    vars: VarTable,
    entries: Vec<MultiPoly<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zero(size: usize, vars: &VarTable) -> Self {
        PolyMatrix {
            size,
            vars: vars.clone(),
            entries: vec![MultiPoly::zero(vars); size * size],
        }
    }

    pub fn identity(size: usize, vars: &VarTable) -> Self {
        let mut m = Self::zero(size, vars);
        for i in 0..size {
            m.entries[i * size + i] = MultiPoly::one(vars);
        }
        m
    }

    /// Builds from rows; entries are moved into a common table.
    pub fn from_rows(rows: Vec<Vec<MultiPoly<S>>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Dimension("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        let mut vars = rows[0][0].vars().clone();
        for e in rows.iter().flatten() {
            vars = vars.common(e.vars())?;
        }
        let entries = rows
            .into_iter()
            .flatten()
            .map(|e| e.to_table(&vars))
            .collect::<Result<_>>()?;
        Ok(PolyMatrix { size, vars, entries })
    }

    /// Constant matrix.
    pub fn from_scalar(m: &Mat<S>, vars: &VarTable) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        Ok(PolyMatrix {
            size: m.rows(),
            vars: vars.clone(),
            entries: m
                .as_slice()
                .iter()
                .map(|c| MultiPoly::constant(vars, c.clone()))
                .collect(),
        })
    }

    /// `lead * I + sum_k vars[k] * mats[k]` over `table`, with every entry
    /// a linear form.
    pub fn pencil(table: &VarTable, lead: Option<&str>, terms: &[(&str, &Mat<S>)]) -> Result<Self> {
        let size = match (terms.first(), lead) {
            (Some((_, m)), _) => m.rows(),
            (None, _) => return Err(Error::Dimension("pencil without matrices".into())),
        };
        let mut out = match lead {
            Some(name) => Self::identity(size, table).scale_poly(&MultiPoly::var(table, name)?),
            None => Self::zero(size, table),
        };
        for (name, m) in terms {
            if m.rows() != size || m.cols() != size {
                return Err(Error::Dimension(format!(
                    "pencil matrix of size {}x{} where {size}x{size} expected",
                    m.rows(),
                    m.cols()
                )));
            }
            let v = table.require(name)?;
            for i in 0..size {
                for j in 0..size {
                    let c = &m[(i, j)];
                    if !c.is_zero() {
                        let t = MultiPoly::var_at(table, v).scale(c);
                        out.entries[i * size + j] = &out.entries[i * size + j] + &t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<S> {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly<S>) -> Result<()> {
        self.entries[i * self.size + j] = value.to_table(&self.vars)?;
        Ok(())
    }

    pub fn to_table(&self, vars: &VarTable) -> Result<Self> {
        Ok(PolyMatrix {
            size: self.size,
            vars: vars.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| e.to_table(vars))
                .collect::<Result<_>>()?,
        })
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        if self.size != other.size {
            return Err(Error::Dimension(format!(
                "sizes {} and {} differ",
                self.size, other.size
            )));
        }
        let vars = self.vars.common(&other.vars)?;
        Ok((self.to_table(&vars)?, other.to_table(&vars)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        Ok(PolyMatrix {
            size: a.size,
            vars: a.vars.clone(),
            entries: a.entries.iter().zip(&b.entries).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        let n = a.size;
        let mut out = Self::zero(n, &a.vars);
        for i in 0..n {
            for k in 0..n {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = b.get(k, j);
                    if !y.is_zero() {
                        out.entries[i * n + j] = &out.entries[i * n + j] + &(x * y);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale_poly(&self, f: &MultiPoly<S>) -> Self {
        let entries: Vec<_> = self.entries.iter().map(|e| e * f).collect();
        let vars = entries
            .first()
            .map_or_else(|| self.vars.clone(), |e: &MultiPoly<S>| e.vars().clone());
        PolyMatrix {
            size: self.size,
            vars,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = self.entries[j * n + i].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> MultiPoly<S> {
        (0..self.size).fold(MultiPoly::zero(&self.vars), |acc, i| &acc + self.get(i, i))
    }

    /// Exact `k`-th power (`k = 0` gives the identity).
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.size, &self.vars);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same table");
        }
        acc
    }

    /// `Tr(M^k)`.
    pub fn trace_of_power(&self, k: u32) -> MultiPoly<S> {
        if k == 0 {
            return MultiPoly::from_int(&self.vars, self.size as i64);
        }
        let half = self.pow(k - 1);
        // Tr(A B) = sum_ij A_ij B_ji avoids forming the last product.
        let n = self.size;
        let mut acc = MultiPoly::zero(&self.vars);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (half.get(i, j), self.get(j, i));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
        }
        acc
    }

    pub fn block_diag(blocks: &[&Self]) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::Dimension("no blocks".into()));
        };
        let mut vars = first.vars.clone();
        for b in blocks {
            vars = vars.common(&b.vars)?;
        }
        let n: usize = blocks.iter().map(|b| b.size).sum();
        let mut out = Self::zero(n, &vars);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.size {
                for j in 0..b.size {
                    out.entries[(off + i) * n + off + j] = b.get(i, j).to_table(&vars)?;
                }
            }
            off += b.size;
        }
        Ok(out)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.size).all(|i| (i + 1..self.size).all(|j| self.get(i, j).is_zero()))
    }

    fn diagonal_product(&self) -> MultiPoly<S> {
        (0..self.size).fold(MultiPoly::one(&self.vars), |acc, i| &acc * self.get(i, i))
    }

    /// Laplace expansion along the first row, memoised over column subsets.
    pub fn det_cofactor(&self, ceiling: usize) -> Result<MultiPoly<S>> {
        let n = self.size;
        if n > ceiling || n >= usize::BITS as usize {
            return Err(Error::CofactorCeiling { size: n, ceiling });
        }
        let mut memo: HashMap<usize, MultiPoly<S>> = HashMap::new();
        Ok(self.minor(0, (1usize << n) - 1, &mut memo))
    }

    /// Determinant of rows `row..n` restricted to the columns in `cols`.
    fn minor(&self, row: usize, cols: usize, memo: &mut HashMap<usize, MultiPoly<S>>) -> MultiPoly<S> {
        if row == self.size {
            return MultiPoly::one(&self.vars);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero(&self.vars);
        let mut sign_neg = false;
        for c in 0..self.size {
            if cols & (1 << c) == 0 {
                continue;
            }
            let e = self.get(row, c);
            if !e.is_zero() {
                let sub = self.minor(row + 1, cols & !(1 << c), memo);
                if !sub.is_zero() {
                    let t = e * &sub;
                    acc = if sign_neg { &acc - &t } else { &acc + &t };
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Fraction-free (Bareiss) elimination with row pivoting.
    #[allow(clippy::needless_range_loop)]
    pub fn det_bareiss(&self) -> Result<MultiPoly<S>> {
        let n = self.size;
        let mut a: Vec<Vec<MultiPoly<S>>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = MultiPoly::one(&self.vars);
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(&self.vars)),
                }
            }
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                let lead = a[i][k].clone();
                for j in k + 1..n {
                    let mut num = &pivot * &a[i][j];
                    if !lead.is_zero() && !a[k][j].is_zero() {
                        num = &num - &(&lead * &a[k][j]);
                    }
                    a[i][j] = num
                        .div_exact(&prev)
                        .map_err(|_| Error::BareissDivision { step: k })?;
                }
                a[i][k] = MultiPoly::zero(&self.vars);
            }
            prev = pivot;
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}

impl<S: Scalar> PartialEq for PolyMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.entries == other.entries
    }
}

/// Size-based determinant dispatcher.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetEngine {
    pub cofactor_ceiling: usize,
}

impl Default for DetEngine {
    fn default() -> Self {
        DetEngine {
            cofactor_ceiling: DEFAULT_COFACTOR_CEILING,
        }
    }
}

impl DetEngine {
    pub fn det<S: Scalar>(&self, m: &PolyMatrix<S>) -> Result<MultiPoly<S>> {
        if m.is_upper_triangular() || m.is_lower_triangular() {
            Ok(m.diagonal_product())
        } else if m.size() <= self.cofactor_ceiling {
            m.det_cofactor(self.cofactor_ceiling)
        } else {
            m.det_bareiss()
        }
    }
}

/// Interchange form `{ "size": m, "entries": [[poly, ...], ...] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyMatrixDoc {
    pub size: usize,
    pub entries: Vec<Vec<PolyDoc>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn to_doc(&self) -> PolyMatrixDoc {
        PolyMatrixDoc {
            size: self.size,
            entries: (0..self.size)
                .map(|i| (0..self.size).map(|j| self.get(i, j).to_doc()).collect())
                .collect(),
        }
    }

    pub fn from_doc(doc: &PolyMatrixDoc) -> Result<Self> {
        if doc.entries.len() != doc.size || doc.entries.iter().any(|r| r.len() != doc.size) {
            return Err(Error::Parse("matrix entries do not match size".into()));
        }
        let rows = doc
            .entries
            .iter()
            .map(|r| r.iter().map(MultiPoly::from_doc).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;
    type PM = PolyMatrix<BigRational>;

    fn t() -> VarTable {
        VarTable::indexed("x", 0, 4)
    }

    fn pm(rows: &[&[&str]]) -> PM {
        PM::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| P::parse(s, &t()).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn p(s: &str) -> P {
        P::parse(s, &t()).unwrap()
    }

    #[test]
    fn sl2_standard_determinant() {
        let m = pm(&[&["x0 - x2", "x1"], &["x3", "x0 + x2"]]);
        let expected = p("x0^2 - (x2^2 + x1*x3)");
        assert_eq!(m.det_cofactor(8).unwrap(), expected);
        assert_eq!(m.det_bareiss().unwrap(), expected);
    }

    #[test]
    fn identity_determinant() {
        let id = PM::identity(5, &t());
        assert_eq!(id.det_cofactor(8).unwrap(), p("1"));
        assert_eq!(id.det_bareiss().unwrap(), p("1"));
    }

    #[test]
    fn solvable_example_determinant() {
        let m = pm(&[
            &["x0", "x1", "x2"],
            &["-x1", "x0", "x3"],
            &["0", "0", "x0"],
        ]);
        let expected = p("x0^3 + x1^2*x0");
        assert_eq!(m.det_cofactor(8).unwrap(), expected);
        assert_eq!(m.det_bareiss().unwrap(), expected);
        // row-operation triangularisation: det(U) = det(P) det(x0 I + X), det(P) = x1*x0
        let u = pm(&[
            &["x0*x1", "x1^2", "x1*x2"],
            &["0", "x0^2 + x1^2", "x0*x3 + x1*x2"],
            &["0", "0", "x0"],
        ]);
        let det_u = u.det_bareiss().unwrap();
        assert_eq!(det_u, p("x0*x1*(x0^2 + x1^2)*x0"));
        assert_eq!(det_u.div_exact(&p("x0*x1")).unwrap(), expected);
    }

    #[test]
    fn diagonal_pencil() {
        let m = pm(&[
            &["x0 + 2*x1", "0", "0"],
            &["0", "x0 + x1 + x2", "0"],
            &["0", "0", "x0 + 2*x2"],
        ]);
        let expected = p("(x0 + 2*x1)*(x0 + x1 + x2)*(x0 + 2*x2)");
        assert_eq!(m.det_bareiss().unwrap(), expected);
        assert_eq!(DetEngine::default().det(&m).unwrap(), expected);
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = pm(&[&["0", "x1", "1"], &["x2", "0", "0"], &["1", "1", "x3"]]);
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor(8).unwrap());
        let singular = pm(&[&["0", "x1"], &["0", "x2"]]);
        assert!(singular.det_bareiss().unwrap().is_zero());
    }

    #[test]
    fn cofactor_ceiling() {
        let big = PM::identity(9, &t());
        assert_eq!(
            big.det_cofactor(8),
            Err(Error::CofactorCeiling { size: 9, ceiling: 8 })
        );
        assert_eq!(DetEngine::default().det(&big).unwrap(), p("1"));
    }

    #[test]
    fn traces_of_powers() {
        let g = VarTable::new(["x11", "x12", "x21", "x22"]).unwrap();
        let x = PM::from_rows(vec![
            vec![P::var(&g, "x11").unwrap(), P::var(&g, "x12").unwrap()],
            vec![P::var(&g, "x21").unwrap(), P::var(&g, "x22").unwrap()],
        ])
        .unwrap();
        assert_eq!(
            x.trace_of_power(2),
            P::parse("x11^2 + x22^2 + 2*x12*x21", &g).unwrap()
        );
        assert!(PM::zero(3, &g).trace_of_power(4).is_zero());
        assert_eq!(x.trace_of_power(0), P::from_int(&g, 2));

        let s = VarTable::new(["x12", "x21", "x1"]).unwrap();
        let y = PM::from_rows(vec![
            vec![P::var(&s, "x1").unwrap(), P::var(&s, "x12").unwrap()],
            vec![P::var(&s, "x21").unwrap(), -P::var(&s, "x1").unwrap()],
        ])
        .unwrap();
        assert_eq!(
            y.trace_of_power(2),
            P::parse("2*(x1^2 + x12*x21)", &s).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let m = pm(&[&["x0 - x2", "x1"], &["x3", "1/2"]]);
        let doc = m.to_doc();
        let text = serde_json::to_string(&doc).unwrap();
        let back: PolyMatrixDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(PM::from_doc(&back).unwrap(), m);
    }
}
