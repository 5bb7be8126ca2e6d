//! Characteristic polynomials `det(x0 I + sum x_i [g_i])` of representations,
//! their coefficient algebras, and checks of the structural identities they
//! satisfy.

mod report;
mod verify;

pub use report::{
    coefficient_algebra, reference_generators, CoeffAlgebraReport, CoeffAlgebraReportDoc, Outcome,
    OutcomeDoc, Verdict,
};
pub use verify::{
    all_checks, check_names, run_check, theorem1, theorem2, theorem3, CheckOutcome, CheckOutcomeDoc,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{adjoint_rep, dual_rep, direct_sum, pair_var, Family, LieBasis, Representation};
use crate::linalg::Mat;
use crate::matrix::{DetEngine, PolyMatrix, DEFAULT_COFACTOR_CEILING};
use crate::poly::{latex_var, MultiPoly, PolyDoc, VarTable};
use crate::scalar::Scalar;
use crate::symfun::{decompose, newton_coefficient, sl_trace_generators, DecomposeOptions};
use crate::sympow::{sym_basis, sym_power_of, sym_power_rep};

pub const DEFAULT_MAX_DIM: usize = 35;
pub const ENV_MAX_DIM: &str = "LIECOEFF_MAX_DIM";
pub const ENV_COFACTOR_MAX: &str = "LIECOEFF_COFACTOR_MAX";

/// Size limits for characteristic polynomial computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest representation dimension accepted.
    pub max_dim: usize,
    /// Largest size expanded by cofactors; Bareiss above.
    pub cofactor_ceiling: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: DEFAULT_MAX_DIM,
            cofactor_ceiling: DEFAULT_COFACTOR_CEILING,
        }
    }
}

impl Limits {
    /// Defaults overridden by `LIECOEFF_MAX_DIM` and `LIECOEFF_COFACTOR_MAX`.
    pub fn from_env() -> Result<Self> {
        let mut l = Limits::default();
        for (key, slot) in [(ENV_MAX_DIM, &mut l.max_dim), (ENV_COFACTOR_MAX, &mut l.cofactor_ceiling)] {
            if let Ok(v) = std::env::var(key) {
                *slot = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("{key}={v:?} is not a size")))?;
            }
        }
        Ok(l)
    }

    fn engine(&self) -> DetEngine {
        DetEngine {
            cofactor_ceiling: self.cofactor_ceiling,
        }
    }
}

/// `x0^m + c_1 x0^{m-1} + ... + c_m`, stored as `c_1..c_m` over the basis
/// variables (without `x0`).
#[derive(Clone, Debug)]
pub struct CharPoly<S> {
    m: usize,
    coeffs: Vec<MultiPoly<S>>,
    varmap: Vec<(String, String)>,
    vars: VarTable,
}

impl<S: Scalar> PartialEq for CharPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> CharPoly<S> {
    /// Splits a polynomial monic of degree `m` in `x0`.
    pub fn from_poly(phi: &MultiPoly<S>, varmap: Vec<(String, String)>) -> Result<Self> {
        let vars = VarTable::new(varmap.iter().map(|(_, v)| v.as_str()))?;
        let a = if phi.vars().contains("x0") {
            phi.coefficients_in("x0")?
        } else {
            vec![phi.clone()]
        };
        let m = a.len() - 1;
        if a[m] != MultiPoly::one(&vars) {
            return Err(Error::InvalidArgument("polynomial is not monic in x0".into()));
        }
        let coeffs = (1..=m)
            .map(|i| a[m - i].to_table(&vars))
            .collect::<Result<_>>()?;
        Ok(CharPoly {
            m,
            coeffs,
            varmap,
            vars,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `c_1..c_m`.
    pub fn coeffs(&self) -> &[MultiPoly<S>] {
        &self.coeffs
    }

    /// `c_i`, with `c_0 = 1`.
    pub fn coeff(&self, i: usize) -> MultiPoly<S> {
        match i {
            0 => MultiPoly::one(&self.vars),
            _ => self.coeffs[i - 1].clone(),
        }
    }

    /// Pairs (basis element name, variable name).
    pub fn varmap(&self) -> &[(String, String)] {
        &self.varmap
    }

    /// Basis variables, without `x0`.
    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    /// `x0` followed by the basis variables.
    pub fn full_vars(&self) -> VarTable {
        VarTable::new(std::iter::once("x0").chain(self.vars.names().iter().map(String::as_str)))
            .expect("x0 is reserved")
    }

    pub fn to_poly(&self) -> MultiPoly<S> {
        let t = self.full_vars();
        let x0 = MultiPoly::var_at(&t, 0);
        let mut acc = MultiPoly::one(&t);
        for c in &self.coeffs {
            acc = &(&acc * &x0) + &c.to_table(&t).expect("sub-table");
        }
        acc
    }

    /// Every `c_i` is homogeneous of degree `i` (or zero).
    pub fn is_homogeneous(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (c.is_homogeneous() && c.total_degree() == Some(i as u32 + 1)))
    }

    /// `phi = x0^m`.
    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// `x0`-grouped plain text, e.g. `x0^3 + x1^2*x0` or `x0^2 - (x2^2 + x1*x3)`.
    pub fn plain(&self) -> String {
        let mut out = x0_power(self.m);
        if out.is_empty() {
            out.push('1');
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.m - i - 1;
            let (neg, body) = signed_body(c);
            out.push_str(if neg { " - " } else { " + " });
            let x = x0_power(k);
            match (body.is_empty(), x.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&x),
                (false, true) => out.push_str(&body),
                (false, false) => {
                    out.push_str(&body);
                    out.push('*');
                    out.push_str(&x);
                }
            }
        }
        out
    }

    /// LaTeX rendering in the same grouping as [`CharPoly::plain`].
    pub fn latex(&self) -> String {
        self.latex_with(&vec![None; self.m], &latex_var)
    }

    /// LaTeX with `c_i` replaced by `exprs[i-1]` where given, rendering the
    /// variables of those expressions with `var`.
    pub fn latex_with(&self, exprs: &[Option<MultiPoly<S>>], var: &dyn Fn(&str) -> String) -> String {
        let mut out = latex_x0(self.m);
        if out.is_empty() {
            out.push('1');
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.m - i - 1;
            let x = latex_x0(k);
            let expr = exprs.get(i).and_then(Option::as_ref);
            let render: &dyn Fn(&str) -> String = if expr.is_some() { var } else { &latex_var };
            let shown = expr.unwrap_or(c);
            let neg = shown.display_terms()[0].1.is_negative();
            let shown = if neg { -shown.clone() } else { shown.clone() };
            let text = shown.to_latex_with(render);
            let body = if shown.num_terms() > 1 {
                format!("\\left({text}\\right)")
            } else if text == "1" && !x.is_empty() {
                String::new()
            } else {
                text
            };
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
            if !x.is_empty() {
                if !body.is_empty() {
                    out.push(' ');
                }
                out.push_str(&x);
            }
        }
        out
    }

    pub fn to_doc(&self) -> CharPolyDoc {
        CharPolyDoc {
            m: self.m,
            varmap: self
                .varmap
                .iter()
                .map(|(e, v)| VarMapEntry {
                    element: e.clone(),
                    variable: v.clone(),
                })
                .collect(),
            coeffs: self.coeffs.iter().map(MultiPoly::to_doc).collect(),
            charpoly: self.to_poly().to_doc(),
            display: self.plain(),
        }
    }

    /// Reads a document back; the stored `charpoly` must match the
    /// reassembled coefficients.
    pub fn from_doc(doc: &CharPolyDoc) -> Result<Self> {
        let varmap: Vec<(String, String)> = doc
            .varmap
            .iter()
            .map(|e| (e.element.clone(), e.variable.clone()))
            .collect();
        let vars = VarTable::new(varmap.iter().map(|(_, v)| v.as_str()))?;
        if doc.coeffs.len() != doc.m {
            return Err(Error::Parse(format!("{} coefficients for m = {}", doc.coeffs.len(), doc.m)));
        }
        let coeffs = doc
            .coeffs
            .iter()
            .map(|c| MultiPoly::from_doc(c)?.to_table(&vars))
            .collect::<Result<Vec<_>>>()?;
        let cp = CharPoly {
            m: doc.m,
            coeffs,
            varmap,
            vars,
        };
        if MultiPoly::from_doc(&doc.charpoly)? != cp.to_poly() {
            return Err(Error::Parse("charpoly does not match its coefficients".into()));
        }
        Ok(cp)
    }
}

impl<S: Scalar> fmt::Display for CharPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

fn x0_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x0".into(),
        _ => format!("x0^{k}"),
    }
}

fn latex_x0(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x_0".into(),
        _ => format!("x_0^{{{k}}}"),
    }
}

/// Sign and unsigned text of a coefficient: a single term prints bare
/// (`3*x1`, empty for 1), several terms in parentheses with the leading
/// sign pulled out.
fn signed_body<S: Scalar>(c: &MultiPoly<S>) -> (bool, String) {
    let terms = c.display_terms();
    let neg = terms[0].1.is_negative();
    let shown = if neg { -c.clone() } else { c.clone() };
    if terms.len() > 1 {
        (neg, format!("({shown})"))
    } else if shown.is_constant() && shown.constant_term().is_one() {
        (neg, String::new())
    } else {
        (neg, shown.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VarMapEntry {
    pub element: String,
    pub variable: String,
}

/// `{ "m", "varmap", "coeffs": [c_1..c_m], "charpoly", "display" }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharPolyDoc {
    pub m: usize,
    pub varmap: Vec<VarMapEntry>,
    pub coeffs: Vec<PolyDoc>,
    pub charpoly: PolyDoc,
    pub display: String,
}

/// `det(x0 I + sum_i x_i [g_i])`.
pub fn char_poly<S: Scalar>(rep: &Representation<S>, limits: &Limits) -> Result<CharPoly<S>> {
    let m = rep.dim();
    if m > limits.max_dim {
        return Err(Error::CapExceeded(format!(
            "representation dimension {m} exceeds the limit {} (set {ENV_MAX_DIM} to raise it)",
            limits.max_dim
        )));
    }
    if rep.images.iter().any(|a| a.rows() != m || a.cols() != m) {
        return Err(Error::Dimension("representation images differ in size".into()));
    }
    if rep.variables.len() != rep.images.len() {
        return Err(Error::Dimension("one variable per image expected".into()));
    }
    let varmap: Vec<(String, String)> = rep
        .names
        .iter()
        .cloned()
        .zip(rep.variables.iter().cloned())
        .collect();
    let table = VarTable::new(std::iter::once("x0").chain(rep.variables.iter().map(String::as_str)))?;
    if m == 0 {
        return CharPoly::from_poly(&MultiPoly::one(&table), varmap);
    }
    let terms: Vec<(&str, &Mat<S>)> = rep
        .variables
        .iter()
        .zip(&rep.images)
        .map(|(v, a)| (v.as_str(), a))
        .collect();
    let pencil = PolyMatrix::pencil(&table, Some("x0"), &terms)?;
    let phi = limits.engine().det(&pencil)?;
    CharPoly::from_poly(&phi, varmap)
}

/// Characteristic polynomial of the standard representation.
pub fn standard_char_poly<S: Scalar>(basis: &LieBasis<S>, limits: &Limits) -> Result<CharPoly<S>> {
    char_poly(&basis.standard_rep(), limits)
}

/// `phi` on `S^d(C^n)`, checking the dimension before lifting.
pub fn sym_power_char_poly<S: Scalar>(basis: &LieBasis<S>, d: u32, limits: &Limits) -> Result<CharPoly<S>> {
    let m = sym_basis(basis.n(), d).len();
    if m > limits.max_dim {
        return Err(Error::CapExceeded(format!(
            "dim S^{d}(C^{}) = {m} exceeds the limit {} (set {ENV_MAX_DIM} to raise it)",
            basis.n(),
            limits.max_dim
        )));
    }
    char_poly(&sym_power_rep(basis, d), limits)
}

/// Adjoint characteristic polynomial and whether it is `x0^dim`, which holds
/// exactly for nilpotent algebras.
pub fn nilpotency_test<S: Scalar>(basis: &LieBasis<S>, limits: &Limits) -> Result<(bool, CharPoly<S>)> {
    let cp = char_poly(&adjoint_rep(basis), limits)?;
    Ok((cp.is_trivial(), cp))
}

/// `phi_{V*}(x0, x) = (-1)^m phi_V(-x0, x)`.
pub fn dual_sign_check<S: Scalar>(rep: &Representation<S>, limits: &Limits) -> Result<bool> {
    let phi = char_poly(rep, limits)?;
    let dual = char_poly(&dual_rep(rep), limits)?;
    let p = phi.to_poly();
    let t = p.vars().clone();
    let flipped = p.substitute(&[("x0", -MultiPoly::var_at(&t, 0))])?;
    let rhs = if phi.m() % 2 == 1 { -flipped } else { flipped };
    let holds = dual.to_poly() == rhs;
    // coefficients agree up to sign, so both generate the same algebra
    let same_up_to_sign = phi
        .coeffs()
        .iter()
        .zip(dual.coeffs())
        .all(|(a, b)| a == b || *a == -b.clone());
    Ok(holds && same_up_to_sign)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(m: usize) -> Self {
        if m.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Coefficient shape forced by self-duality: for even `m` every odd-index
/// `c_i` vanishes; for odd `m` every `c_i` has only even-degree monomials.
pub fn self_dual_parity<S: Scalar>(cp: &CharPoly<S>, parity: Parity) -> bool {
    match parity {
        Parity::Even => cp
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| (i + 1) % 2 == 0 || c.is_zero()),
        Parity::Odd => cp
            .coeffs()
            .iter()
            .all(|c| c.terms().all(|(m, _)| m.degree() % 2 == 0)),
    }
}

/// `phi` in the basis `g'_j = sum_i P[i][j] g_i`: substitute `x_i -> sum_j P[i][j] x_j`.
pub fn base_change<S: Scalar>(cp: &CharPoly<S>, p: &Mat<S>) -> Result<CharPoly<S>> {
    let k = cp.vars().len();
    if p.rows() != k || p.cols() != k {
        return Err(Error::Dimension(format!("transition matrix must be {k}x{k}")));
    }
    p.inverse()?;
    let t = cp.vars().clone();
    let map: Vec<(String, MultiPoly<S>)> = (0..k)
        .map(|i| {
            let img = (0..k).fold(MultiPoly::zero(&t), |acc, j| {
                &acc + &MultiPoly::var_at(&t, j).scale(&p[(i, j)])
            });
            (t.name(i).to_string(), img)
        })
        .collect();
    let coeffs = cp
        .coeffs()
        .iter()
        .map(|c| c.substitute(&map)?.to_table(&t))
        .collect::<Result<_>>()?;
    Ok(CharPoly {
        m: cp.m,
        coeffs,
        varmap: cp.varmap.clone(),
        vars: t,
    })
}

/// Substituted `phi` equals `phi` computed directly in the new basis.
pub fn base_change_check<S: Scalar>(rep: &Representation<S>, p: &Mat<S>, limits: &Limits) -> Result<bool> {
    let before = char_poly(rep, limits)?;
    let direct = char_poly(&rep.change_basis(p)?, limits)?;
    Ok(base_change(&before, p)? == direct)
}

/// `prod (x0 + sum_i alpha_i x_i)` over the exponent vectors of degree `d`,
/// in `x0, x1..xn`.
pub fn diagonal_product<S: Scalar>(n: usize, d: u32) -> MultiPoly<S> {
    let t = VarTable::indexed("x", 0, n + 1);
    sym_basis(n, d).monomials().iter().fold(MultiPoly::one(&t), |acc, alpha| {
        let form = alpha.iter().enumerate().fold(MultiPoly::var_at(&t, 0), |f, (i, &a)| {
            &f + &MultiPoly::var_at(&t, i + 1).scale(&S::from_int(a.into()))
        });
        &acc * &form
    })
}

/// `det(x0 I + sum x_i [E_ii])` on `S^d(C^n)` against [`diagonal_product`].
pub fn product_formula_check<S: Scalar>(n: usize, d: u32, limits: &Limits) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let diag = LieBasis::<S>::with_default_variables(
        (0..n)
            .map(|i| (format!("E{}{}", i + 1, i + 1), Mat::unit(n, i, i)))
            .collect(),
    )?;
    let cp = sym_power_char_poly(&diag, d, limits)?;
    Ok(cp.to_poly() == diagonal_product(n, d))
}

/// `phi(A + B) = phi(A) phi(B)` for the direct sum.
pub fn multiplicativity_check<S: Scalar>(
    a: &Representation<S>,
    b: &Representation<S>,
    limits: &Limits,
) -> Result<bool> {
    let sum = char_poly(&direct_sum(a, b)?, limits)?;
    let pa = char_poly(a, limits)?.to_poly();
    let pb = char_poly(b, limits)?.to_poly();
    Ok(sum.to_poly() == &pa * &pb)
}

/// Outcome of checking that `phi_{sl2}(S^d(C^2))` lies in `C[x0, q]`.
#[derive(Clone, Debug)]
pub struct Sl2Membership<S> {
    pub charpoly: CharPoly<S>,
    /// `(i, a)` with `c_i = a q^{i/2}` for each even `i`.
    pub constants: Vec<(usize, S)>,
    pub holds: bool,
}

/// `q = x2^2 + x1*x3` in the variables of the sl2 preset.
pub fn sl2_casimir<S: Scalar>() -> MultiPoly<S> {
    let t = VarTable::indexed("x", 1, 3);
    MultiPoly::parse("x2^2 + x1*x3", &t).expect("fixed text")
}

pub fn sl2_membership_check<S: Scalar>(d: u32, limits: &Limits) -> Result<Sl2Membership<S>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    let cp = sym_power_char_poly(&LieBasis::sl2(), d, limits)?;
    let q = sl2_casimir::<S>();
    let gens = [("q".to_string(), q.clone())];
    let mut holds = true;
    let mut constants = Vec::new();
    for (k, c) in cp.coeffs().iter().enumerate() {
        let i = k + 1;
        if i % 2 == 1 {
            holds &= c.is_zero();
            continue;
        }
        let dec = decompose(c, &gens, &DecomposeOptions::default())?;
        holds &= dec.is_exact();
        let e = dec.expression.clone();
        let a = match e.terms().next() {
            Some((m, a)) if e.num_terms() == 1 && m.degree() as usize == i / 2 => a.clone(),
            None => S::zero(),
            _ => {
                holds = false;
                continue;
            }
        };
        constants.push((i, a));
    }
    Ok(Sl2Membership {
        charpoly: cp,
        constants,
        holds,
    })
}

/// `phi_{sl_n}(C^n)` computed directly, cross-checked against the Newton
/// determinant in `tr_2..tr_n`.
pub fn sln_standard_charpoly<S: Scalar>(n: usize, limits: &Limits) -> Result<CharPoly<S>> {
    let basis = LieBasis::preset(Family::Sl, n)?;
    let direct = standard_char_poly(&basis, limits)?;
    let traces: Vec<MultiPoly<S>> = sl_trace_generators(n)?.into_iter().map(|(_, t)| t).collect();
    for (k, c) in direct.coeffs().iter().enumerate() {
        let i = k + 1;
        let via_newton = if i == 1 {
            MultiPoly::zero(direct.vars())
        } else {
            newton_coefficient(i, &traces[..i - 1])?
        };
        if *c != via_newton {
            return Err(Error::Inconsistent(format!(
                "w{i}: determinant gives {c}, Newton formula gives {via_newton}"
            )));
        }
    }
    Ok(direct)
}

/// `x_ij -> 0` for `i > j` and `x_ii -> x_i`: polynomials in the `gl_n`
/// variables to the `ut_n` variables.
pub fn pi_map<S: Scalar>(n: usize) -> Result<Vec<(String, MultiPoly<S>)>> {
    let ut = LieBasis::<S>::preset(Family::Ut, n)?;
    let t = VarTable::new(ut.variables().iter())?;
    let mut map = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let img = match i.cmp(&j) {
                std::cmp::Ordering::Greater => MultiPoly::zero(&t),
                std::cmp::Ordering::Equal => MultiPoly::var(&t, &format!("x{i}"))?,
                std::cmp::Ordering::Less => MultiPoly::var(&t, &pair_var(i, j, n))?,
            };
            map.push((pair_var(i, j, n), img));
        }
    }
    Ok(map)
}

/// `x_ss -> x_ss - x_{s-1,s-1}` for `2 <= s < n` and `x_nn -> -x_{n-1,n-1}`:
/// polynomials in the `gl_n` variables to the `sl_n` variables.
pub fn rho_map<S: Scalar>(n: usize) -> Result<Vec<(String, MultiPoly<S>)>> {
    let sl = LieBasis::<S>::preset(Family::Sl, n)?;
    let t = VarTable::new(sl.variables().iter())?;
    let mut map = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let img = if i != j || i == 1 {
                MultiPoly::var(&t, &pair_var(i, j, n))?
            } else if i < n {
                &MultiPoly::var(&t, &pair_var(i, i, n))? - &MultiPoly::var(&t, &pair_var(i - 1, i - 1, n))?
            } else {
                -MultiPoly::var(&t, &pair_var(n - 1, n - 1, n))?
            };
            map.push((pair_var(i, j, n), img));
        }
    }
    Ok(map)
}

/// Applies a variable map to every coefficient.
pub fn map_char_poly<S: Scalar>(
    cp: &CharPoly<S>,
    map: &[(String, MultiPoly<S>)],
    target: &LieBasis<S>,
) -> Result<CharPoly<S>> {
    let varmap: Vec<(String, String)> = target
        .names()
        .into_iter()
        .zip(target.variables().iter().cloned())
        .collect();
    let vars = VarTable::new(target.variables().iter())?;
    let coeffs = cp
        .coeffs()
        .iter()
        .map(|c| c.substitute(map)?.to_table(&vars))
        .collect::<Result<_>>()?;
    Ok(CharPoly {
        m: cp.m,
        coeffs,
        varmap,
        vars,
    })
}

/// Lifts `rep` to `S^d` of its carrier space.
pub fn sym_power_char_poly_of<S: Scalar>(rep: &Representation<S>, d: u32, limits: &Limits) -> Result<CharPoly<S>> {
    char_poly(&sym_power_of(rep, d)?, limits)
}

/// LaTeX name of a generator label: `e2` -> `\epsilon_{2}`, `Tr3` -> `\mathrm{Tr}_{3}`.
pub fn latex_generator(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (head, idx) = name.split_at(split);
    let head = match head {
        "e" => "\\epsilon".to_string(),
        "p" => "p".to_string(),
        "Tr" => "\\mathrm{Tr}".to_string(),
        "tr" => "\\mathrm{tr}".to_string(),
        _ => return latex_var(name),
    };
    if idx.is_empty() {
        head
    } else {
        format!("{head}_{{{idx}}}")
    }
}
