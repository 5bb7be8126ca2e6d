//! Symmetric functions, trace functions of generic matrices, and
//! decomposition of a polynomial in a chosen set of generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IncrementalSolver;
use crate::liealg::{pair_var, Family, LieBasis};
use crate::matrix::{DetEngine, PolyMatrix};
use crate::poly::{MultiPoly, PolyDoc, VarTable};
use crate::scalar::Scalar;

/// `x1, ..., xn`.
pub fn sym_vars(n: usize) -> VarTable {
    VarTable::indexed("x", 1, n)
}

pub fn elementary_sym<S: Scalar>(i: usize, n: usize) -> Result<MultiPoly<S>> {
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "elementary symmetric polynomial e{i} needs 1 <= i <= n = {n}"
        )));
    }
    Ok(elementary_table(n).swap_remove(i))
}

/// `[e_0 = 1, e_1, ..., e_n]` in `x1..xn`, built from `prod (1 + x_k t)`.
pub fn elementary_table<S: Scalar>(n: usize) -> Vec<MultiPoly<S>> {
    let t = sym_vars(n);
    let mut e = vec![MultiPoly::one(&t)];
    for k in 0..n {
        let x = MultiPoly::var_at(&t, k);
        e.push(MultiPoly::zero(&t));
        for j in (1..e.len()).rev() {
            e[j] = &e[j] + &(&e[j - 1] * &x);
        }
    }
    e
}

pub fn power_sum<S: Scalar>(i: u32, n: usize) -> Result<MultiPoly<S>> {
    if i == 0 {
        return Err(Error::InvalidArgument("power sums start at p1".into()));
    }
    let t = sym_vars(n);
    Ok((0..n).fold(MultiPoly::zero(&t), |acc, k| {
        &acc + &MultiPoly::var_at(&t, k).pow(i)
    }))
}

/// `p_k - e_1 p_{k-1} + ... + (-1)^{k-1} e_{k-1} p_1 + (-1)^k k e_k`, with
/// `e_j = 0` for `j > n`. Zero for every `k >= 1`.
pub fn newton_identity_residual<S: Scalar>(k: usize, n: usize) -> MultiPoly<S> {
    let e = elementary_table::<S>(n);
    let t = sym_vars(n);
    let ek = |j: usize| e.get(j).cloned().unwrap_or_else(|| MultiPoly::zero(&t));
    let p = |j: usize| power_sum::<S>(j as u32, n).expect("j >= 1");
    let mut acc = p(k);
    for j in 1..k {
        let term = &ek(j) * &p(k - j);
        acc = if j % 2 == 1 { &acc - &term } else { &acc + &term };
    }
    let last = ek(k).scale(&S::from_int(k as i64));
    if k % 2 == 1 {
        &acc - &last
    } else {
        &acc + &last
    }
}

/// True iff `f` is unchanged by every adjacent transposition of `vars`.
pub fn is_symmetric<S: Scalar>(f: &MultiPoly<S>, vars: &[&str]) -> bool {
    let table = f.vars().extended(vars.iter().copied());
    let g = f.to_table(&table).expect("extension of own table");
    let idx: Vec<usize> = vars.iter().map(|v| table.require(v).expect("added")).collect();
    idx.windows(2).all(|w| g.swap_vars(w[0], w[1]) == g)
}

/// `X = (x_ij)` in the variables of the `gl_n` preset.
pub fn generic_matrix<S: Scalar>(n: usize) -> PolyMatrix<S> {
    let names: Vec<String> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| pair_var(i, j, n)))
        .collect();
    let t = VarTable::new(names).expect("distinct names");
    let rows = (0..n)
        .map(|i| (0..n).map(|j| MultiPoly::var_at(&t, i * n + j)).collect())
        .collect();
    PolyMatrix::from_rows(rows).expect("square")
}

/// Traceless generic matrix: off-diagonal `x_ij`, diagonal
/// `x11, x22 - x11, ..., -x_{n-1,n-1}`.
pub fn sl_generic_matrix<S: Scalar>(n: usize) -> Result<PolyMatrix<S>> {
    Ok(LieBasis::preset(Family::Sl, n)?.generic_element())
}

/// `Tr_i = Tr(X^i)` for the generic `n x n` matrix.
pub fn trace_function<S: Scalar>(i: u32, n: usize) -> MultiPoly<S> {
    generic_matrix::<S>(n).trace_of_power(i)
}

/// `tr_i = Tr(X^i)` for the traceless generic matrix.
pub fn sl_trace_function<S: Scalar>(i: u32, n: usize) -> Result<MultiPoly<S>> {
    Ok(sl_generic_matrix::<S>(n)?.trace_of_power(i))
}

pub fn principal_minor_sum<S: Scalar>(i: usize, n: usize) -> Result<MultiPoly<S>> {
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "principal minors of order {i} need 1 <= i <= n = {n}"
        )));
    }
    principal_minor_sum_of(&generic_matrix(n), i)
}

/// Sum of the `i x i` principal minors of `m`.
pub fn principal_minor_sum_of<S: Scalar>(m: &PolyMatrix<S>, i: usize) -> Result<MultiPoly<S>> {
    let n = m.size();
    let engine = DetEngine::default();
    let mut acc = MultiPoly::zero(m.vars());
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
        let rows = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| m.get(r, c).clone()).collect())
            .collect();
        acc = &acc + &engine.det(&PolyMatrix::from_rows(rows)?)?;
    }
    Ok(acc)
}

/// `(1/i!) det N` where `N[r][c] = p_{r-c+1}` on and below the diagonal and
/// `N[r][r+1] = i-1-r`; `p` holds `p_1..p_i`. This is `e_i` in terms of the
/// power sums.
pub fn newton_determinant<S: Scalar>(p: &[MultiPoly<S>]) -> Result<MultiPoly<S>> {
    let i = p.len();
    let Some(first) = p.first() else {
        return Err(Error::InvalidArgument("no power sums given".into()));
    };
    let mut table = first.vars().clone();
    for q in p {
        table = table.common(q.vars())?;
    }
    let rows = (0..i)
        .map(|r| {
            (0..i)
                .map(|c| {
                    if c <= r {
                        p[r - c].clone()
                    } else if c == r + 1 {
                        MultiPoly::from_int(&table, (i - 1 - r) as i64)
                    } else {
                        MultiPoly::zero(&table)
                    }
                })
                .collect()
        })
        .collect();
    let det = DetEngine::default().det(&PolyMatrix::from_rows(rows)?)?;
    let fact = (1..=i as i64).fold(S::one(), |acc, k| acc * S::from_int(k));
    Ok(det.scale(&(S::one() / fact)))
}

/// The `x0^{n-i}` coefficient of the traceless characteristic polynomial from
/// `tr_2..tr_i` (with `tr_1 = 0`).
pub fn newton_coefficient<S: Scalar>(i: usize, traces: &[MultiPoly<S>]) -> Result<MultiPoly<S>> {
    if i < 2 || traces.len() + 1 != i {
        return Err(Error::InvalidArgument(format!(
            "coefficient {i} needs tr_2..tr_{i}, got {} traces",
            traces.len()
        )));
    }
    let mut p = vec![MultiPoly::zero(traces[0].vars())];
    p.extend(traces.iter().cloned());
    newton_determinant(&p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Largest weighted degree in the ansatz; `None` means `deg f`.
    pub degree_cap: Option<u32>,
    pub max_unknowns: usize,
    pub seed: u64,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            degree_cap: None,
            max_unknowns: 20_000,
            seed: 0x5eed,
        }
    }
}

/// `target` written as a polynomial `expression` in `y1..yk`, where `yj`
/// stands for `generators[j]`.
#[derive(Clone, Debug)]
pub struct SymDecomposition<S> {
    pub target: MultiPoly<S>,
    pub generator_names: Vec<String>,
    pub generators: Vec<MultiPoly<S>>,
    pub expression: MultiPoly<S>,
    /// `expression(generators) - target`.
    pub residual: MultiPoly<S>,
    /// False when the generators were dependent up to the cap and a
    /// particular solution was chosen.
    pub unique: bool,
}

impl<S: Scalar> SymDecomposition<S> {
    pub fn is_exact(&self) -> bool {
        self.residual.is_zero()
    }

    /// The expression with `yj` renamed to the j-th generator name.
    pub fn named_expression(&self) -> MultiPoly<S> {
        let t = VarTable::new(self.generator_names.iter()).expect("distinct generator names");
        let terms = self
            .expression
            .terms()
            .map(|(m, c)| (m.exponents().to_vec(), c.clone()));
        MultiPoly::from_terms(&t, terms).expect("same arity")
    }

    pub fn to_doc(&self) -> DecompositionDoc {
        DecompositionDoc {
            target: self.target.to_doc(),
            generators: self.generator_names.clone(),
            expression: self.expression.to_doc(),
            display: self.named_expression().to_string(),
            residual: self.residual.to_doc(),
            exact: self.is_exact(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub target: PolyDoc,
    pub generators: Vec<String>,
    pub expression: PolyDoc,
    pub display: String,
    pub residual: PolyDoc,
    pub exact: bool,
}

/// All exponent vectors `a` with `sum a_j w_j` in `lo..=hi`.
fn weighted_monomials(weights: &[u32], lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn rec(w: &[u32], k: usize, used: u32, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == w.len() {
            if used >= lo {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while used + e * w[k] <= hi {
            cur.push(e);
            rec(w, k + 1, used + e * w[k], lo, hi, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, 0, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Writes `f` as a polynomial in `generators`.
///
/// The ansatz holds every generator monomial of weighted degree up to the cap
/// (exactly `deg f` when everything is homogeneous), with generator weight
/// equal to its degree. Coefficients are solved exactly from evaluations at
/// seeded integer points and the result is verified by substitution, so a
/// nonzero residual certifies that `f` is not in the span of the ansatz.
pub fn decompose<S: Scalar>(
    f: &MultiPoly<S>,
    generators: &[(String, MultiPoly<S>)],
    opts: &DecomposeOptions,
) -> Result<SymDecomposition<S>> {
    let k = generators.len();
    let mut weights = Vec::with_capacity(k);
    for (name, g) in generators {
        match g.total_degree() {
            Some(w) if w > 0 => weights.push(w),
            Some(_) => return Err(Error::InvalidArgument(format!("generator {name} is constant"))),
            None => return Err(Error::InvalidArgument(format!("generator {name} is zero"))),
        }
    }
    let ytable = VarTable::indexed("y", 1, k);
    let names: Vec<String> = generators.iter().map(|(n, _)| n.clone()).collect();
    let gens: Vec<MultiPoly<S>> = generators.iter().map(|(_, g)| g.clone()).collect();

    let deg = f.total_degree().unwrap_or(0);
    let cap = opts.degree_cap.unwrap_or(deg);
    if deg > cap {
        return Err(Error::CapExceeded(format!(
            "target degree {deg} is above the ansatz cap {cap}"
        )));
    }
    let homogeneous = f.is_homogeneous() && gens.iter().all(MultiPoly::is_homogeneous);
    let lo = if homogeneous && !f.is_zero() { deg } else { 0 };
    let hi = if homogeneous && !f.is_zero() { deg } else { cap };
    let ansatz = weighted_monomials(&weights, lo, hi);
    if ansatz.len() > opts.max_unknowns {
        return Err(Error::CapExceeded(format!(
            "ansatz has {} unknowns, limit {}",
            ansatz.len(),
            opts.max_unknowns
        )));
    }

    let mut table = f.vars().clone();
    for g in &gens {
        table = table.common(g.vars())?;
    }
    let f_t = f.to_table(&table)?;
    let g_t: Vec<MultiPoly<S>> = gens.iter().map(|g| g.to_table(&table)).collect::<Result<_>>()?;

    let unknowns = ansatz.len();
    let mut solver = IncrementalSolver::new(unknowns);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut stalled = 0;
    // a nonzero polynomial of degree D vanishes at a random point of the
    // grid with probability at most D / 195, so a long stall means rank loss
    while unknowns > 0 && !solver.is_full_rank() && stalled < 32 {
        let point: Vec<S> = (0..table.len())
            .map(|_| S::from_int(rng.gen_range(-97..=97)))
            .collect();
        let gv: Vec<S> = g_t.iter().map(|g| g.evaluate(&point)).collect();
        let row: Vec<S> = ansatz
            .iter()
            .map(|a| {
                a.iter().zip(&gv).fold(S::one(), |acc, (&e, v)| {
                    (0..e).fold(acc, |acc, _| acc * v.clone())
                })
            })
            .collect();
        if solver.push(row, f_t.evaluate(&point)) {
            stalled = 0;
        } else {
            stalled += 1;
        }
    }
    let unique = solver.is_full_rank();
    let coeffs = solver.particular_solution();
    let expression = MultiPoly::from_terms(
        &ytable,
        ansatz.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()),
    )?;
    let map: Vec<(String, MultiPoly<S>)> = (0..k)
        .map(|j| (ytable.name(j).to_string(), g_t[j].clone()))
        .collect();
    let value = if k == 0 {
        MultiPoly::constant(&table, expression.constant_term())
    } else {
        expression.substitute(&map)?
    };
    let residual = value.try_sub(&f_t)?;
    Ok(SymDecomposition {
        target: f.clone(),
        generator_names: names,
        generators: gens,
        expression,
        residual,
        unique,
    })
}

/// `[("e1", e_1), ..., ("en", e_n)]`.
pub fn elementary_generators<S: Scalar>(n: usize) -> Vec<(String, MultiPoly<S>)> {
    elementary_table(n)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(i, e)| (format!("e{i}"), e))
        .collect()
}

/// `[("p1", p_1), ..., ("pn", p_n)]`.
pub fn power_sum_generators<S: Scalar>(n: usize) -> Vec<(String, MultiPoly<S>)> {
    (1..=n as u32)
        .map(|i| (format!("p{i}"), power_sum(i, n).expect("i >= 1")))
        .collect()
}

/// `[("Tr1", Tr_1), ..., ("Trn", Tr_n)]`.
pub fn trace_generators<S: Scalar>(n: usize) -> Vec<(String, MultiPoly<S>)> {
    let x = generic_matrix::<S>(n);
    (1..=n as u32)
        .map(|i| (format!("Tr{i}"), x.trace_of_power(i)))
        .collect()
}

/// `[("tr2", tr_2), ..., ("trn", tr_n)]`.
pub fn sl_trace_generators<S: Scalar>(n: usize) -> Result<Vec<(String, MultiPoly<S>)>> {
    let x = sl_generic_matrix::<S>(n)?;
    Ok((2..=n as u32)
        .map(|i| (format!("tr{i}"), x.trace_of_power(i)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    fn p(s: &str, t: &VarTable) -> P {
        P::parse(s, t).unwrap()
    }

    #[test]
    fn elementary_and_power_sums() {
        let t2 = sym_vars(2);
        let t3 = sym_vars(3);
        assert_eq!(elementary_sym::<BigRational>(1, 2).unwrap(), p("x1 + x2", &t2));
        assert_eq!(elementary_sym::<BigRational>(2, 3).unwrap(), p("x1*x2 + x1*x3 + x2*x3", &t3));
        assert_eq!(elementary_sym::<BigRational>(3, 3).unwrap(), p("x1*x2*x3", &t3));
        assert!(elementary_sym::<BigRational>(4, 3).is_err());
        assert!(elementary_sym::<BigRational>(0, 3).is_err());
        assert_eq!(power_sum::<BigRational>(1, 3).unwrap(), elementary_sym(1, 3).unwrap());
        assert_eq!(power_sum::<BigRational>(2, 2).unwrap(), p("x1^2 + x2^2", &t2));
    }

    #[test]
    fn newton_identities() {
        for n in 1..=5 {
            for k in 1..=n + 1 {
                assert!(newton_identity_residual::<BigRational>(k, n).is_zero(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn p2_in_elementary_basis() {
        let d = decompose(
            &power_sum::<BigRational>(2, 3).unwrap(),
            &elementary_generators(3),
            &DecomposeOptions::default(),
        )
        .unwrap();
        assert!(d.is_exact() && d.unique);
        assert_eq!(d.named_expression().to_string(), "e1^2 - 2*e2");
    }

    #[test]
    fn non_member_has_residual() {
        let t = sym_vars(2);
        let d = decompose(&p("x1", &t), &elementary_generators(2), &DecomposeOptions::default()).unwrap();
        assert!(!d.is_exact());
    }

    #[test]
    fn cap_is_enforced() {
        let t = sym_vars(2);
        let opts = DecomposeOptions {
            degree_cap: Some(1),
            ..DecomposeOptions::default()
        };
        let r = decompose(&p("x1^2 + x2^2", &t), &elementary_generators(2), &opts);
        assert!(matches!(r, Err(Error::CapExceeded(_))));
    }

    #[test]
    fn dependent_generators_still_verify() {
        let mut gens = elementary_generators::<BigRational>(2);
        gens.push(("p2".into(), power_sum(2, 2).unwrap()));
        let t = sym_vars(2);
        let d = decompose(&p("x1^2 + x2^2", &t), &gens, &DecomposeOptions::default()).unwrap();
        assert!(d.is_exact());
        assert!(!d.unique);
    }

    #[test]
    fn trace_and_minor_functions() {
        let x = generic_matrix::<BigRational>(2);
        let t = x.vars().clone();
        assert_eq!(trace_function::<BigRational>(1, 2), p("x11 + x22", &t));
        assert_eq!(principal_minor_sum::<BigRational>(1, 2).unwrap(), p("x11 + x22", &t));
        assert_eq!(trace_function::<BigRational>(2, 2), p("x11^2 + x22^2 + 2*x12*x21", &t));
        let x3 = generic_matrix::<BigRational>(3);
        let t3 = x3.vars().clone();
        assert_eq!(
            principal_minor_sum::<BigRational>(2, 3).unwrap(),
            p(
                "x11*x22 - x12*x21 + x11*x33 - x13*x31 + x22*x33 - x23*x32",
                &t3
            )
        );
    }

    #[test]
    fn newton_coefficients() {
        let t = VarTable::new(["tr2", "tr3"]).unwrap();
        let tr2 = p("tr2", &t);
        let tr3 = p("tr3", &t);
        assert_eq!(newton_coefficient(2, std::slice::from_ref(&tr2)).unwrap(), p("-1/2*tr2", &t));
        assert_eq!(newton_coefficient(3, &[tr2.clone(), tr3.clone()]).unwrap(), p("1/3*tr3", &t));
        let z = P::zero(&t);
        assert!(newton_coefficient(4, &[z.clone(), z.clone(), z]).unwrap().is_zero());
        assert!(newton_coefficient(3, &[tr2]).is_err());
    }

    #[test]
    fn sl_traces_small() {
        let tr2 = sl_trace_function::<BigRational>(2, 2).unwrap();
        let t = tr2.vars().clone();
        assert_eq!(tr2, p("2*x11^2 + 2*x12*x21", &t));
        assert!(sl_trace_function::<BigRational>(1, 3).unwrap().is_zero());
    }

    #[test]
    fn symmetry_test() {
        let e2 = elementary_sym::<BigRational>(2, 3).unwrap();
        assert!(is_symmetric(&e2, &["x1", "x2", "x3"]));
        let t = sym_vars(2);
        assert!(!is_symmetric(&p("x1 - x2", &t), &["x1", "x2"]));
    }

    #[test]
    fn decomposition_json() {
        let d = decompose(
            &power_sum::<BigRational>(3, 2).unwrap(),
            &elementary_generators(2),
            &DecomposeOptions::default(),
        )
        .unwrap();
        let doc = d.to_doc();
        assert!(doc.exact);
        assert!(doc.residual.terms.is_empty());
        assert_eq!(doc.display, "e1^3 - 3*e1*e2");
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<DecompositionDoc>(&text).unwrap(), doc);
    }
}
