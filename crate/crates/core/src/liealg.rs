//! Matrix Lie algebras given by an ordered basis, and their representations.
//!
//! A [`LieBasis`] is only constructed after [`check_closure`] has produced its
//! structure constants, so every value of the type is a genuine Lie algebra.
//! Each basis element also carries the variable name it contributes to the
//! characteristic polynomial.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Mat, SpanSolver};
use crate::matrix::PolyMatrix;
use crate::poly::VarTable;
use crate::scalar::Scalar;

/// `[g_i, g_j] = sum_k c[i][j][k] g_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<S> {
    dim: usize,
    c: Vec<S>,
}

impl<S: Scalar> StructureConstants<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn bracket_coords(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| *self.get(i, j, k) == -self.get(j, i, k).clone()))
        })
    }

    /// `[g_i,[g_j,g_k]] + [g_j,[g_k,g_i]] + [g_k,[g_i,g_j]] = 0` in coordinates.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        // coordinates of [g_a, [g_b, g_c]]
        let nested = |a: usize, b: usize, c: usize, out: usize| -> S {
            (0..n).fold(S::zero(), |acc, l| {
                let x = self.get(b, c, l);
                if x.is_zero() {
                    acc
                } else {
                    acc + x.clone() * self.get(a, l, out).clone()
                }
            })
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for out in 0..n {
                        let s = nested(i, j, k, out) + nested(j, k, i, out) + nested(k, i, j, out);
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn flatten<S: Scalar>(m: &Mat<S>) -> Vec<S> {
    m.as_slice().to_vec()
}

/// Structure constants of the span of `elements`, which must be square
/// matrices of one degree, linearly independent and closed under brackets.
pub fn check_closure<S: Scalar>(elements: &[(String, Mat<S>)]) -> Result<StructureConstants<S>> {
    let Some((_, first)) = elements.first() else {
        return Ok(StructureConstants { dim: 0, c: Vec::new() });
    };
    let n = first.rows();
    for (name, m) in elements {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!(
                "element {name} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let vectors: Vec<Vec<S>> = elements.iter().map(|(_, m)| flatten(m)).collect();
    let span = SpanSolver::new(&vectors)?;
    let dim = elements.len();
    let mut c = Vec::with_capacity(dim * dim * dim);
    for (ni, a) in elements {
        for (nj, b) in elements {
            let br = a.commutator(b);
            match span.coordinates(&flatten(&br)) {
                Some(x) => c.extend(x),
                None => return Err(Error::NotClosed(ni.clone(), nj.clone())),
            }
        }
    }
    Ok(StructureConstants { dim, c })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ut,
    Gl,
    Sl,
    Sl2,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Ut => "ut",
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::Sl2 => "sl2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ut" => Ok(Family::Ut),
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "sl2" => Ok(Family::Sl2),
            other => Err(Error::InvalidArgument(format!("unknown algebra family {other:?}"))),
        }
    }
}

/// Name of the variable attached to the matrix position `(i, j)`, 1-based.
/// Indices are concatenated below 10 and separated by underscores from
/// there on, so `x_3_12` and `x_31_2` stay distinct.
pub fn pair_var(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("x{i}{j}")
    } else {
        format!("x_{i}_{j}")
    }
}

#[derive(Clone)]
pub struct LieBasis<S> {
    n: usize,
    elements: Vec<(String, Mat<S>)>,
    variables: Vec<String>,
    constants: StructureConstants<S>,
    family: Option<Family>,
}

impl<S: Scalar> LieBasis<S> {
    /// Validates `elements` and attaches one variable per element.
    pub fn new(elements: Vec<(String, Mat<S>)>, variables: Vec<String>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("empty basis".into()));
        }
        if variables.len() != elements.len() {
            return Err(Error::InvalidArgument(format!(
                "{} variables for {} basis elements",
                variables.len(),
                elements.len()
            )));
        }
        let table = VarTable::new(variables.iter())?;
        if table.contains("x0") {
            return Err(Error::InvalidArgument("x0 is reserved".into()));
        }
        let constants = check_closure(&elements)?;
        Ok(LieBasis {
            n: elements[0].1.rows(),
            elements,
            variables,
            constants,
            family: None,
        })
    }

    /// Variables default to `x1..xk`.
    pub fn with_default_variables(elements: Vec<(String, Mat<S>)>) -> Result<Self> {
        let vars = (1..=elements.len()).map(|i| format!("x{i}")).collect();
        Self::new(elements, vars)
    }

    pub fn preset(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("{family} needs n >= 2, got {n}")));
        }
        let mut elements = Vec::new();
        let mut vars = Vec::new();
        match family {
            Family::Ut => {
                for i in 0..n {
                    elements.push((format!("E{}{}", i + 1, i + 1), Mat::unit(n, i, i)));
                    vars.push(format!("x{}", i + 1));
                }
                for i in 0..n {
                    for j in i + 1..n {
                        elements.push((elem_name(i, j, n), Mat::unit(n, i, j)));
                        vars.push(pair_var(i + 1, j + 1, n));
                    }
                }
            }
            Family::Gl => {
                for i in 0..n {
                    for j in 0..n {
                        elements.push((elem_name(i, j, n), Mat::unit(n, i, j)));
                        vars.push(pair_var(i + 1, j + 1, n));
                    }
                }
            }
            Family::Sl => {
                for s in 0..n - 1 {
                    let h = Mat::unit(n, s, s).sub(&Mat::unit(n, s + 1, s + 1));
                    elements.push((format!("H{}", s + 1), h));
                    vars.push(pair_var(s + 1, s + 1, n));
                }
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            elements.push((elem_name(i, j, n), Mat::unit(n, i, j)));
                            vars.push(pair_var(i + 1, j + 1, n));
                        }
                    }
                }
            }
            Family::Sl2 => {
                if n != 2 {
                    return Err(Error::InvalidArgument(format!("sl2 has n = 2, got {n}")));
                }
                elements.push(("e1".into(), Mat::from_ints(&[&[0, 1], &[0, 0]])));
                elements.push(("e2".into(), Mat::from_ints(&[&[-1, 0], &[0, 1]])));
                elements.push(("e3".into(), Mat::from_ints(&[&[0, 0], &[1, 0]])));
                vars.extend(["x1", "x2", "x3"].map(String::from));
            }
        }
        let mut basis = Self::new(elements, vars)?;
        basis.family = Some(family);
        Ok(basis)
    }

    pub fn sl2() -> Self {
        Self::preset(Family::Sl2, 2).expect("sl2 preset")
    }

    /// The 3-dimensional Heisenberg algebra spanned by `E12, E13, E23`.
    pub fn heisenberg() -> Self {
        Self::with_default_variables(vec![
            ("E12".into(), Mat::unit(3, 0, 1)),
            ("E13".into(), Mat::unit(3, 0, 2)),
            ("E23".into(), Mat::unit(3, 1, 2)),
        ])
        .expect("heisenberg basis")
    }

    /// Matrices `[[0,a,b],[-a,0,c],[0,0,0]]`: solvable, not nilpotent.
    pub fn rotation_extension() -> Self {
        Self::with_default_variables(vec![
            ("A".into(), Mat::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])),
            ("E13".into(), Mat::unit(3, 0, 2)),
            ("E23".into(), Mat::unit(3, 1, 2)),
        ])
        .expect("rotation extension basis")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn elements(&self) -> &[(String, Mat<S>)] {
        &self.elements
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn matrices(&self) -> Vec<Mat<S>> {
        self.elements.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn constants(&self) -> &StructureConstants<S> {
        &self.constants
    }

    /// `x0, x_1, ..., x_k` in basis order.
    pub fn var_table(&self) -> VarTable {
        VarTable::new(std::iter::once("x0").chain(self.variables.iter().map(String::as_str)))
            .expect("validated variables")
    }

    /// `sum_i x_i g_i` as a matrix of linear forms.
    pub fn generic_element(&self) -> PolyMatrix<S> {
        let table = VarTable::new(self.variables.iter()).expect("validated variables");
        let terms: Vec<(&str, &Mat<S>)> = self
            .variables
            .iter()
            .zip(&self.elements)
            .map(|(v, (_, m))| (v.as_str(), m))
            .collect();
        PolyMatrix::pencil(&table, None, &terms).expect("square elements")
    }

    /// Identity representation on `C^n`.
    pub fn standard_rep(&self) -> Representation<S> {
        Representation {
            names: self.names(),
            variables: self.variables.clone(),
            images: self.matrices(),
        }
    }

    /// The representation of dimension `dim` where every element acts by zero.
    pub fn trivial_rep(&self, dim: usize) -> Representation<S> {
        Representation {
            names: self.names(),
            variables: self.variables.clone(),
            images: vec![Mat::zeros(dim, dim); self.dim()],
        }
    }

    /// New basis `g'_j = sum_i P[i][j] g_i`, keeping the variable names.
    pub fn change_basis(&self, p: &Mat<S>) -> Result<Self> {
        let k = self.dim();
        if p.rows() != k || p.cols() != k {
            return Err(Error::Dimension(format!("transition matrix must be {k}x{k}")));
        }
        p.inverse()?;
        let elements = (0..k)
            .map(|j| {
                let m = (0..k).fold(Mat::zeros(self.n, self.n), |acc, i| {
                    acc.add(&self.elements[i].1.scale(&p[(i, j)]))
                });
                (format!("g{}", j + 1), m)
            })
            .collect();
        Self::new(elements, self.variables.clone())
    }
}

impl<S: Scalar> PartialEq for LieBasis<S> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.variables == other.variables
    }
}

impl<S: Scalar> PartialEq for Representation<S> {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.variables == other.variables && self.images == other.images
    }
}

impl<S: Scalar> fmt::Debug for LieBasis<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieBasis")
            .field("n", &self.n)
            .field("elements", &self.elements)
            .field("variables", &self.variables)
            .finish()
    }
}

impl<S: Scalar> fmt::Debug for Representation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("names", &self.names)
            .field("images", &self.images)
            .finish()
    }
}

fn elem_name(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E_{}_{}", i + 1, j + 1)
    }
}

/// Images `[g_1], ..., [g_k]` of a basis in some representation.
#[derive(Clone)]
pub struct Representation<S> {
    pub names: Vec<String>,
    pub variables: Vec<String>,
    pub images: Vec<Mat<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn dim(&self) -> usize {
        self.images.first().map_or(0, Mat::rows)
    }

    /// Images of the new basis `g'_j = sum_i P[i][j] g_i`.
    pub fn change_basis(&self, p: &Mat<S>) -> Result<Self> {
        let k = self.images.len();
        if p.rows() != k || p.cols() != k {
            return Err(Error::Dimension(format!("transition matrix must be {k}x{k}")));
        }
        p.inverse()?;
        let m = self.dim();
        Ok(Representation {
            names: (1..=k).map(|j| format!("g{j}")).collect(),
            variables: self.variables.clone(),
            images: (0..k)
                .map(|j| {
                    (0..k).fold(Mat::zeros(m, m), |acc, i| acc.add(&self.images[i].scale(&p[(i, j)])))
                })
                .collect(),
        })
    }

    /// Checks `[rho(g_i), rho(g_j)] = sum_k c_ijk rho(g_k)` exactly.
    pub fn is_representation_of(&self, basis: &LieBasis<S>) -> bool {
        let k = basis.dim();
        if self.images.len() != k {
            return false;
        }
        let c = basis.constants();
        for i in 0..k {
            for j in 0..k {
                let lhs = self.images[i].commutator(&self.images[j]);
                let rhs = (0..k).fold(Mat::zeros(self.dim(), self.dim()), |acc, l| {
                    acc.add(&self.images[l].scale(c.get(i, j, l)))
                });
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// `ad(g_i)` in the basis itself; column `j` holds the coordinates of `[g_i, g_j]`.
pub fn adjoint_rep<S: Scalar>(basis: &LieBasis<S>) -> Representation<S> {
    let k = basis.dim();
    let c = basis.constants();
    Representation {
        names: basis.names(),
        variables: basis.variables().to_vec(),
        images: (0..k)
            .map(|i| Mat::from_fn(k, k, |row, col| c.get(i, col, row).clone()))
            .collect(),
    }
}

/// Each image `A` becomes `-A^T`.
pub fn dual_rep<S: Scalar>(rep: &Representation<S>) -> Representation<S> {
    Representation {
        names: rep.names.clone(),
        variables: rep.variables.clone(),
        images: rep.images.iter().map(|a| a.transpose().neg()).collect(),
    }
}

pub fn direct_sum<S: Scalar>(a: &Representation<S>, b: &Representation<S>) -> Result<Representation<S>> {
    if a.names != b.names || a.variables != b.variables {
        return Err(Error::InvalidArgument(format!(
            "representations of different bases ({} and {} elements)",
            a.images.len(),
            b.images.len()
        )));
    }
    Ok(Representation {
        names: a.names.clone(),
        variables: a.variables.clone(),
        images: a
            .images
            .iter()
            .zip(&b.images)
            .map(|(x, y)| Mat::block_diag(&[x, y]))
            .collect(),
    })
}

/// Interchange form `{ "n": 3, "elements": [ { "name": ..., "matrix": [[...]] } ] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieBasisDoc {
    pub n: usize,
    pub elements: Vec<ElementDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

impl<S: Scalar> LieBasis<S> {
    pub fn to_doc(&self) -> LieBasisDoc {
        let default: Vec<String> = (1..=self.dim()).map(|i| format!("x{i}")).collect();
        LieBasisDoc {
            n: self.n,
            elements: self
                .elements
                .iter()
                .map(|(name, m)| ElementDoc {
                    name: name.clone(),
                    matrix: m.to_strings(),
                })
                .collect(),
            variables: (self.variables != default).then(|| self.variables.clone()),
        }
    }

    pub fn from_doc(doc: &LieBasisDoc) -> Result<Self> {
        let mut elements = Vec::with_capacity(doc.elements.len());
        for e in &doc.elements {
            let m = Mat::from_strings(&e.matrix)?;
            if m.rows() != doc.n || m.cols() != doc.n {
                return Err(Error::Dimension(format!(
                    "element {} is {}x{}, expected {n}x{n}",
                    e.name,
                    m.rows(),
                    m.cols(),
                    n = doc.n
                )));
            }
            elements.push((e.name.clone(), m));
        }
        match &doc.variables {
            Some(v) => Self::new(elements, v.clone()),
            None => Self::with_default_variables(elements),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LieBasisDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use num_rational::BigRational;

    type M = Mat<BigRational>;
    type B = LieBasis<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn sl2_constants() {
        let b = B::sl2();
        let c = b.constants();
        // [e1, e3] = E11 - E22 = -e2
        assert_eq!(c.bracket_coords(0, 2), &[q(0), q(-1), q(0)]);
        // [e2, e1] = -2 e1
        assert_eq!(c.bracket_coords(1, 0), &[q(-2), q(0), q(0)]);
        assert!(c.is_antisymmetric());
        assert!(c.satisfies_jacobi());
    }

    #[test]
    fn presets_shape() {
        let gl = B::preset(Family::Gl, 2).unwrap();
        assert_eq!(gl.names(), ["E11", "E12", "E21", "E22"]);
        assert_eq!(gl.variables(), ["x11", "x12", "x21", "x22"]);
        let ut = B::preset(Family::Ut, 3).unwrap();
        assert_eq!(ut.variables(), ["x1", "x2", "x3", "x12", "x13", "x23"]);
        assert!(B::preset(Family::Gl, 1).is_err());
        assert!(B::preset(Family::Sl2, 3).is_err());
        let big = B::preset(Family::Ut, 10).unwrap();
        assert!(big.variables().contains(&"x_1_10".to_string()));
        for fam in [Family::Ut, Family::Gl, Family::Sl] {
            for n in 2..=4 {
                let c = B::preset(fam, n).unwrap();
                assert!(c.constants().is_antisymmetric());
                assert!(c.constants().satisfies_jacobi());
            }
        }
    }

    #[test]
    fn sl3_generic_element() {
        let b = B::preset(Family::Sl, 3).unwrap();
        let x = b.generic_element();
        let t = x.vars().clone();
        let p = |s: &str| MultiPoly::<BigRational>::parse(s, &t).unwrap();
        assert_eq!(x.get(0, 0), &p("x11"));
        assert_eq!(x.get(1, 1), &p("x22 - x11"));
        assert_eq!(x.get(2, 2), &p("-x22"));
        assert_eq!(x.get(2, 0), &p("x31"));
    }

    #[test]
    fn closure_failures() {
        let els = vec![
            ("E11".to_string(), M::unit(2, 0, 0)),
            ("E12".to_string(), M::unit(2, 0, 1)),
            ("E21".to_string(), M::unit(2, 1, 0)),
        ];
        assert_eq!(
            check_closure(&els),
            Err(Error::NotClosed("E12".into(), "E21".into()))
        );
        let dep = vec![
            ("a".to_string(), M::unit(2, 0, 0)),
            ("b".to_string(), M::unit(2, 0, 0).scale(&q(2))),
        ];
        assert_eq!(check_closure(&dep), Err(Error::LinearlyDependent));
        let abelian = vec![
            ("E11".to_string(), M::unit(2, 0, 0)),
            ("E22".to_string(), M::unit(2, 1, 1)),
        ];
        assert!(check_closure(&abelian).unwrap().is_zero());
    }

    #[test]
    fn adjoint_is_representation() {
        for b in [B::sl2(), B::heisenberg(), B::rotation_extension(), B::preset(Family::Gl, 2).unwrap()] {
            let ad = adjoint_rep(&b);
            assert!(ad.is_representation_of(&b));
            assert!(b.standard_rep().is_representation_of(&b));
            assert!(dual_rep(&ad).is_representation_of(&b));
            assert_eq!(dual_rep(&dual_rep(&ad)), ad);
        }
        let h = adjoint_rep(&B::heisenberg());
        assert!(h.images.iter().all(|m| m.is_upper_triangular(true) || m.transpose().is_upper_triangular(true)));
    }

    #[test]
    fn direct_sum_blocks() {
        let b = B::sl2();
        let v = b.standard_rep();
        let s = direct_sum(&v, &b.trivial_rep(0)).unwrap();
        assert_eq!(s, v);
        let vv = direct_sum(&v, &v).unwrap();
        assert_eq!(vv.dim(), 4);
        assert!(vv.is_representation_of(&b));
        let other = B::heisenberg().standard_rep();
        assert!(direct_sum(&v, &other).is_err());
    }

    #[test]
    fn json_round_trip() {
        let h = B::heisenberg();
        assert_eq!(B::from_json(&h.to_json()).unwrap(), h);
        let bad = r#"{"n":2,"elements":[{"name":"a","matrix":[["0","1"],["0","0"]]},{"name":"b","matrix":[["0","0"],["1","0"]]}]}"#;
        assert_eq!(B::from_json(bad), Err(Error::NotClosed("a".into(), "b".into())));
    }

    #[test]
    fn change_basis_permutation() {
        let b = B::sl2();
        let p = M::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let c = b.change_basis(&p).unwrap();
        assert_eq!(c.elements()[0].1, b.elements()[2].1);
        assert_eq!(b.change_basis(&M::zeros(3, 3)), Err(Error::Singular));
    }
}
