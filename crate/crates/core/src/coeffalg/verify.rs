//! Named checks over finite grids of `(n, d)`, shared by the test suites and
//! the `verify` command.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    base_change_check, coefficient_algebra, dual_sign_check, map_char_poly, multiplicativity_check,
    nilpotency_test, pi_map, product_formula_check, rho_map, sl2_membership_check, sln_standard_charpoly,
    standard_char_poly, sym_power_char_poly, Limits, Verdict,
};
use crate::error::{Error, Result};
use crate::liealg::{Family, LieBasis, Representation};
use crate::linalg::{random_invertible, Mat};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, VarTable};
use crate::scalar::Scalar;
use crate::symfun::{
    decompose, is_symmetric, newton_determinant, newton_identity_residual, power_sum_generators,
    principal_minor_sum, trace_function, DecomposeOptions,
};
use crate::sympow::{sym_basis, sym_power_matrix, sym_power_rep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: String,
    pub params: String,
    pub passed: bool,
    pub detail: String,
}

pub type CheckOutcomeDoc = CheckOutcome;

impl CheckOutcome {
    fn new(check: &str, params: String, failures: Vec<String>, ok_detail: &str) -> Self {
        CheckOutcome {
            check: check.to_string(),
            params,
            passed: failures.is_empty(),
            detail: if failures.is_empty() {
                ok_detail.to_string()
            } else {
                failures.join("; ")
            },
        }
    }

    /// `PASS check (params): detail`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.params.is_empty() {
            format!("{tag} {}: {}", self.check, self.detail)
        } else {
            format!("{tag} {} ({}): {}", self.check, self.params, self.detail)
        }
    }
}

const CHECKS: &[&str] = &[
    "sl2-standard",
    "sympow-example",
    "ut-examples",
    "gl-examples",
    "sl-examples",
    "solvable-example",
    "product-formula",
    "upper-triangular",
    "dual-sign",
    "multiplicativity",
    "theorem1",
    "theorem2",
    "theorem3",
    "nilpotency",
    "newton",
    "base-change",
    "sl2-membership",
    "sln-newton",
];

pub fn check_names() -> &'static [&'static str] {
    CHECKS
}

fn q<S: Scalar>(text: &str, t: &VarTable) -> MultiPoly<S> {
    MultiPoly::parse(text, t).expect("fixed text")
}

fn expect_eq<S: Scalar>(fails: &mut Vec<String>, what: &str, got: &MultiPoly<S>, want: &MultiPoly<S>) {
    if got != want {
        fails.push(format!("{what}: got {got}, expected {want}"));
    }
}

/// Coefficient `c_i` of `ut_n` on `S^d`, rewritten over `e1..en` via the
/// report, checked against `expected` (text in `e1..en`).
fn expect_decomposition<S: Scalar>(
    fails: &mut Vec<String>,
    report: &super::CoeffAlgebraReport<S>,
    i: usize,
    expected: &str,
) {
    let label = &report.coefficient_names[i - 1];
    match report.decompositions[i - 1].decomposition() {
        Some(d) if d.is_exact() => {
            let named = d.named_expression();
            let want = q::<S>(expected, named.vars());
            if named != want {
                fails.push(format!("{label} = {named}, expected {want}"));
            }
        }
        _ => fails.push(format!("{label} did not decompose")),
    }
}

pub fn run_check<S: Scalar>(name: &str, n: usize, d: u32, limits: &Limits) -> Result<CheckOutcome> {
    let opts = DecomposeOptions::default();
    let params = format!("n={n}, d={d}");
    match name {
        "sl2-standard" => {
            let cp = standard_char_poly(&LieBasis::<S>::sl2(), limits)?;
            let t = cp.full_vars();
            let mut f = Vec::new();
            expect_eq(&mut f, "phi", &cp.to_poly(), &q("x0^2 - (x2^2 + x1*x3)", &t));
            Ok(CheckOutcome::new(name, String::new(), f, &cp.plain()))
        }
        "sympow-example" => {
            let lifts: Vec<Mat<S>> = (0..4).map(|k| sym_power_matrix(&Mat::unit(2, k / 2, k % 2), 2)).collect();
            let want: [&[&[i64]]; 4] = [
                &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 0]],
                &[&[0, 2, 0], &[0, 0, 1], &[0, 0, 0]],
                &[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]],
                &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]],
            ];
            let names = ["E11", "E12", "E21", "E22"];
            let f = (0..4)
                .filter(|&k| lifts[k] != Mat::from_ints(want[k]))
                .map(|k| format!("[{}] = {:?}", names[k], lifts[k]))
                .collect();
            Ok(CheckOutcome::new(name, String::new(), f, "lifts of E11, E12, E21, E22 on S^2(C^2)"))
        }
        "ut-examples" => {
            let mut f = Vec::new();
            let r2 = coefficient_algebra(&LieBasis::<S>::preset(Family::Ut, 2)?, 2, limits, &opts)?;
            for (i, e) in [(1, "3*e1"), (2, "4*e2 + 2*e1^2"), (3, "4*e1*e2")] {
                expect_decomposition(&mut f, &r2, i, e);
            }
            let r3 = coefficient_algebra(&LieBasis::<S>::preset(Family::Ut, 2)?, 3, limits, &opts)?;
            for (i, e) in [(1, "6*e1"), (2, "10*e2 + 11*e1^2")] {
                expect_decomposition(&mut f, &r3, i, e);
            }
            let r = coefficient_algebra(&LieBasis::<S>::preset(Family::Ut, 3)?, 2, limits, &opts)?;
            for (i, e) in [(1, "4*e1"), (2, "5*e2 + 5*e1^2"), (3, "7*e3 + 11*e1*e2 + 2*e1^3")] {
                expect_decomposition(&mut f, &r, i, e);
            }
            if r.verdict != Verdict::Equality {
                f.push("ut_3 on S^2: e1, e2, e3 not recovered".into());
            }
            Ok(CheckOutcome::new(name, String::new(), f, "ut_2 on S^2, S^3 and ut_3 on S^2"))
        }
        "gl-examples" => {
            let mut f = Vec::new();
            let gl2 = LieBasis::<S>::preset(Family::Gl, 2)?;
            let cases: [(u32, &[&str]); 2] = [
                (2, &["3*Tr1", "4*Tr1^2 - 2*Tr2", "2*Tr1^3 - 2*Tr1*Tr2"]),
                (3, &["6*Tr1", "16*Tr1^2 - 5*Tr2", "21*Tr1^3 - 15*Tr1*Tr2", "(45*Tr1^4 - 54*Tr1^2*Tr2 + 9*Tr2^2)/4"]),
            ];
            for (d, exprs) in cases {
                let r = coefficient_algebra(&gl2, d, limits, &opts)?;
                for (i, e) in exprs.iter().enumerate() {
                    expect_decomposition(&mut f, &r, i + 1, e);
                }
                if r.verdict != Verdict::Equality {
                    f.push(format!("gl_2 on S^{d}: verdict {:?}", r.verdict));
                }
            }
            Ok(CheckOutcome::new(name, String::new(), f, "gl_2 on S^2 and S^3"))
        }
        "sl-examples" => {
            let mut f = Vec::new();
            for m in [2, 3] {
                match sln_standard_charpoly::<S>(m, limits) {
                    Ok(cp) => {
                        if m == 2 {
                            let t = cp.full_vars();
                            expect_eq(&mut f, "phi_sl2", &cp.to_poly(), &q("x0^2 - (x11^2 + x12*x21)", &t));
                        }
                    }
                    Err(e) => f.push(format!("sl_{m}: {e}")),
                }
            }
            Ok(CheckOutcome::new(name, String::new(), f, "sl_2 and sl_3 on C^n, direct = Newton"))
        }
        "solvable-example" => {
            let cp = standard_char_poly(&LieBasis::<S>::rotation_extension(), limits)?;
            let t = cp.full_vars();
            let mut f = Vec::new();
            expect_eq(&mut f, "phi", &cp.to_poly(), &q("x0^3 + x1^2*x0", &t));
            Ok(CheckOutcome::new(name, String::new(), f, &cp.plain()))
        }
        "product-formula" => {
            let ok = product_formula_check::<S>(n, d, limits)?;
            let f = if ok { vec![] } else { vec!["determinant differs from the product".into()] };
            Ok(CheckOutcome::new(name, params, f, "diagonal determinant = product of linear forms"))
        }
        "upper-triangular" => {
            let mut f = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if !sym_power_matrix::<S>(&Mat::unit(n, i, j), d).is_upper_triangular(true) {
                        f.push(format!("[E{}{}] not strictly upper triangular", i + 1, j + 1));
                    }
                }
            }
            Ok(CheckOutcome::new(name, params, f, "lifts of E_ij (i<j) strictly upper triangular"))
        }
        "dual-sign" | "multiplicativity" => {
            let mut f = Vec::new();
            for basis in [LieBasis::<S>::sl2(), LieBasis::preset(Family::Gl, 2)?] {
                let tag = if basis.dim() == 3 { "sl2" } else { "gl2" };
                let v = sym_power_rep(&basis, d);
                let ok = if name == "dual-sign" {
                    dual_sign_check(&v, limits)?
                } else {
                    multiplicativity_check(&v, &basis.standard_rep(), limits)?
                        && multiplicativity_check(&v, &v, limits)?
                        && multiplicativity_check(&v, &basis.trivial_rep(1), limits)?
                };
                if !ok {
                    f.push(format!("{tag} on S^{d} fails"));
                }
            }
            let what = if name == "dual-sign" {
                "phi(V*)(x0) = (-1)^m phi(V)(-x0) on sl2, gl2"
            } else {
                "phi(V + W) = phi(V) phi(W) on sl2, gl2"
            };
            Ok(CheckOutcome::new(name, format!("d={d}"), f, what))
        }
        "theorem1" => theorem1::<S>(n, d, limits),
        "theorem2" => theorem2::<S>(n, d, limits),
        "theorem3" => theorem3::<S>(n, d, limits),
        "nilpotency" => {
            let mut f = Vec::new();
            let (h, hp) = nilpotency_test(&LieBasis::<S>::heisenberg(), limits)?;
            if !h || hp.plain() != "x0^3" {
                f.push(format!("heisenberg: {hp}"));
            }
            for (tag, b) in [("sl2", LieBasis::<S>::sl2()), ("rotation", LieBasis::rotation_extension())] {
                if nilpotency_test(&b, limits)?.0 {
                    f.push(format!("{tag} reported nilpotent"));
                }
            }
            Ok(CheckOutcome::new(name, String::new(), f, "heisenberg nilpotent; sl2, rotation extension not"))
        }
        "newton" => {
            let mut f = Vec::new();
            for k in 1..=n + 1 {
                if !newton_identity_residual::<S>(k, n).is_zero() {
                    f.push(format!("Newton identity k={k}"));
                }
            }
            let traces: Vec<MultiPoly<S>> = (1..=n as u32).map(|i| trace_function(i, n)).collect();
            for i in 1..=n {
                let s = principal_minor_sum::<S>(i, n)?;
                let via = newton_determinant(&traces[..i])?;
                if s != via {
                    f.push(format!("s{i} differs from the Newton determinant"));
                }
            }
            Ok(CheckOutcome::new(name, format!("n={n}"), f, "Newton identities; s_i from Tr_1..Tr_i"))
        }
        "base-change" => {
            let mut f = Vec::new();
            let mut rng = ChaCha8Rng::seed_from_u64(0xba5e ^ u64::from(d));
            let reps: Vec<(String, Representation<S>)> = vec![
                (format!("sl2 on S^{d}"), sym_power_rep(&LieBasis::sl2(), d)),
                (format!("ut2 on S^{d}"), sym_power_rep(&LieBasis::preset(Family::Ut, 2)?, d)),
            ];
            for (tag, rep) in &reps {
                for _ in 0..20 {
                    let p = random_invertible(rep.images.len(), &mut rng);
                    if !base_change_check(rep, &p, limits)? {
                        f.push(format!("{tag}: P = {p:?}"));
                        break;
                    }
                }
            }
            Ok(CheckOutcome::new(name, format!("d={d}"), f, "20 random P each on sl2, ut2"))
        }
        "sl2-membership" => {
            let r = sl2_membership_check::<S>(d, limits)?;
            let qt = VarTable::new(["q"])?;
            let consts: Vec<String> = r
                .constants
                .iter()
                .map(|(i, a)| {
                    let term = MultiPoly::term(&qt, Monomial::from_exponents(vec![(i / 2) as u32]), a.clone());
                    format!("c{i} = {term}")
                })
                .collect();
            let f = if r.holds { vec![] } else { vec![format!("phi = {} not in C[x0, q]", r.charpoly)] };
            Ok(CheckOutcome::new(name, format!("d={d}"), f, &consts.join(", ")))
        }
        "sln-newton" => {
            let f = match sln_standard_charpoly::<S>(n, limits) {
                Ok(_) => vec![],
                Err(Error::Inconsistent(e)) => vec![e],
                Err(e) => return Err(e),
            };
            Ok(CheckOutcome::new(name, format!("n={n}"), f, "direct determinant = Newton formula"))
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown check {other:?}; known: {}",
            CHECKS.join(", ")
        ))),
    }
}

/// Upper triangular algebra on `S^d(C^n)`: coefficients are symmetric in
/// the diagonal variables and free of the others, `c_j` has leading monomial
/// `x1^j`, and the coefficient algebra equals `C[e1..en]` in both directions.
pub fn theorem1<S: Scalar>(n: usize, d: u32, limits: &Limits) -> Result<CheckOutcome> {
    let basis = LieBasis::<S>::preset(Family::Ut, n)?;
    let report = coefficient_algebra(&basis, d, limits, &DecomposeOptions::default())?;
    let cp = &report.charpoly;
    let diag: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let diag_refs: Vec<&str> = diag.iter().map(String::as_str).collect();
    let order = MonomialOrder::graded_lex(cp.vars(), &diag_refs)?;
    let power_sums = power_sum_generators::<S>(n);
    let mut f = Vec::new();
    for (k, c) in cp.coeffs().iter().enumerate() {
        let i = k + 1;
        if !is_symmetric(c, &diag_refs) {
            f.push(format!("c{i} not symmetric"));
        }
        if let Some(v) = basis.variables()[n..].iter().find(|v| c.mentions(v)) {
            f.push(format!("c{i} mentions {v}"));
        }
        if i > n {
            continue;
        }
        // For d = 1 the c_j are the e_j themselves; the x1^j claim is for d >= 2.
        if d >= 2 {
            let lead = c.leading_monomial(&order)?;
            let x1 = cp.vars().require("x1")?;
            if lead.degree() != i as u32 || lead.exponent(x1) != i as u32 {
                f.push(format!("leading monomial of c{i} is not x1^{i}"));
            }
        }
        // c_j = a_j p_j + (polynomial in p_1..p_{j-1}) with a_j != 0.
        match decompose(c, &power_sums, &DecomposeOptions::default()) {
            Ok(dec) if dec.is_exact() => {
                let yj = Monomial::var(dec.expression.vars().len(), i - 1);
                if dec.expression.coefficient(&yj).is_zero() {
                    f.push(format!("c{i} has no p{i} term"));
                }
            }
            Ok(_) => f.push(format!("c{i} not in C[p1..pn]")),
            Err(e) => f.push(format!("c{i}: {e}")),
        }
    }
    if report.verdict != Verdict::Equality {
        f.push(format!("verdict {:?}", report.verdict));
    }
    Ok(CheckOutcome::new(
        "theorem1",
        format!("n={n}, d={d}"),
        f,
        "c_i symmetric, in C[e1..en], and e1..en recovered",
    ))
}

/// `gl_n` on `S^d(C^n)`: the `z_i` generate `C[Tr_1..Tr_n]`, and `pi(z_i)` is
/// the `c_i` of `ut_n`.
pub fn theorem2<S: Scalar>(n: usize, d: u32, limits: &Limits) -> Result<CheckOutcome> {
    let gl = LieBasis::<S>::preset(Family::Gl, n)?;
    let report = coefficient_algebra(&gl, d, limits, &DecomposeOptions::default())?;
    let mut f = Vec::new();
    if report.verdict != Verdict::Equality {
        f.push(format!("verdict {:?}", report.verdict));
    }
    let ut = LieBasis::<S>::preset(Family::Ut, n)?;
    let c = sym_power_char_poly(&ut, d, limits)?;
    let image = map_char_poly(&report.charpoly, &pi_map(n)?, &ut)?;
    if image != c {
        f.push("pi(z_i) differs from c_i of ut_n".into());
    }
    Ok(CheckOutcome::new(
        "theorem2",
        format!("n={n}, d={d}"),
        f,
        "z_i in C[Tr1..Trn], Tr_i recovered, pi(z_i) = c_i",
    ))
}

/// `sl_n` on `S^d(C^n)`: `rho(z_i) = w_i`, `rho(Tr_1) = 0`, `rho(Tr_i) = tr_i`,
/// and the `w_i` generate `C[tr_2..tr_n]`.
pub fn theorem3<S: Scalar>(n: usize, d: u32, limits: &Limits) -> Result<CheckOutcome> {
    let gl = LieBasis::<S>::preset(Family::Gl, n)?;
    let sl = LieBasis::<S>::preset(Family::Sl, n)?;
    let z = sym_power_char_poly(&gl, d, limits)?;
    let report = coefficient_algebra(&sl, d, limits, &DecomposeOptions::default())?;
    let rho = rho_map::<S>(n)?;
    let mut f = Vec::new();
    if map_char_poly(&z, &rho, &sl)? != report.charpoly {
        f.push("rho(z_i) differs from w_i".into());
    }
    if !trace_function::<S>(1, n).substitute(&rho)?.is_zero() {
        f.push("tr1 is not zero".into());
    }
    for (i, (_, tr)) in (2..).zip(&report.reference) {
        if trace_function::<S>(i, n).substitute(&rho)? != *tr {
            f.push(format!("rho(Tr{i}) differs from tr{i}"));
        }
    }
    if report.verdict != Verdict::Equality {
        f.push(format!("verdict {:?}", report.verdict));
    }
    Ok(CheckOutcome::new(
        "theorem3",
        format!("n={n}, d={d}"),
        f,
        "rho(z_i) = w_i, tr1 = 0, w_i in C[tr2..trn], tr_i recovered",
    ))
}

/// Every check over the grid bounded by `nmax` and `dmax`, in a fixed order.
/// Cases whose representation exceeds `limits.max_dim` are skipped.
/// Theorems 2 and 3 run on `n = 2` for every `d` and on `n >= 3` for `d = 1`.
pub fn all_checks<S: Scalar>(nmax: usize, dmax: u32, limits: &Limits) -> Vec<Result<CheckOutcome>> {
    let fits = |n: usize, d: u32| sym_basis(n, d).len() <= limits.max_dim;
    let mut out = Vec::new();
    let mut push = |name: &str, n: usize, d: u32| out.push(run_check::<S>(name, n, d, limits));
    for name in ["sl2-standard", "sympow-example", "ut-examples", "gl-examples", "sl-examples", "solvable-example"] {
        push(name, 0, 0);
    }
    for n in 1..=nmax {
        for d in 1..=dmax {
            if fits(n, d) {
                push("product-formula", n, d);
            }
        }
    }
    for n in 2..=nmax {
        for d in 1..=dmax {
            if fits(n, d) {
                push("upper-triangular", n, d);
            }
        }
    }
    for d in 1..=dmax {
        push("dual-sign", 2, d);
        push("multiplicativity", 2, d);
    }
    for n in 2..=nmax {
        for d in 1..=dmax {
            if fits(n, d) {
                push("theorem1", n, d);
            }
        }
    }
    for name in ["theorem2", "theorem3"] {
        for n in 2..=nmax {
            for d in 1..=dmax {
                if (n == 2 || d == 1) && fits(n, d) {
                    push(name, n, d);
                }
            }
        }
    }
    push("nilpotency", 0, 0);
    for n in 1..=nmax.max(1) {
        push("newton", n, 0);
    }
    for d in 1..=dmax.min(2) {
        push("base-change", 2, d);
    }
    for d in 1..=dmax {
        push("sl2-membership", 2, d);
    }
    for n in 2..=nmax {
        push("sln-newton", n, 0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn examples_pass() {
        let l = Limits::default();
        for name in ["sl2-standard", "sympow-example", "ut-examples", "gl-examples", "sl-examples", "solvable-example", "nilpotency"] {
            let r = run_check::<BigRational>(name, 0, 0, &l).unwrap();
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn theorems_small() {
        let l = Limits::default();
        for (n, d) in [(2, 1), (2, 2)] {
            for r in [theorem1::<BigRational>(n, d, &l), theorem2::<BigRational>(n, d, &l), theorem3::<BigRational>(n, d, &l)] {
                let r = r.unwrap();
                assert!(r.passed, "{}", r.line());
            }
        }
    }

    #[test]
    fn unknown_check() {
        assert!(run_check::<BigRational>("nope", 2, 2, &Limits::default()).is_err());
    }
}
