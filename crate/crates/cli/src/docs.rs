//! JSON documents emitted by the CLI and the validating reader behind `read`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use liecoeff::coeffalg::{reference_generators, CheckOutcome, CoeffAlgebraReportDoc, OutcomeDoc};
use liecoeff::liealg::ElementDoc;
use liecoeff::matrix::PolyMatrixDoc;
use liecoeff::poly::PolyDoc;
use liecoeff::symfun::DecompositionDoc;
use liecoeff::sympow::sym_power_matrix;
use liecoeff::{sym_basis, Basis, CharPolyDoc, CharPolyQ, Family, LieBasisDoc, Mat, Poly, PolyMatrix, Rational};

use crate::Failure;

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[derive(Serialize, Deserialize)]
pub struct NilpotentDoc {
    pub nilpotent: bool,
    pub charpoly: CharPolyDoc,
}

#[derive(Serialize, Deserialize)]
pub struct VerifyDoc {
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

impl VerifyDoc {
    pub fn new(checks: Vec<CheckOutcome>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        VerifyDoc { checks, passed }
    }
}

/// Basis element matrices on `S^d(C^n)`, rows indexed by `basis`.
#[derive(Serialize, Deserialize)]
pub struct SymPowerDoc {
    pub n: usize,
    pub d: u32,
    pub basis: Vec<String>,
    pub elements: Vec<ElementDoc>,
}

impl SymPowerDoc {
    pub fn build(b: &Basis, d: u32) -> Self {
        SymPowerDoc {
            n: b.n(),
            d,
            basis: sym_basis(b.n(), d).labels(),
            elements: b
                .elements()
                .iter()
                .map(|(name, m)| ElementDoc {
                    name: name.clone(),
                    matrix: sym_power_matrix(m, d).to_strings(),
                })
                .collect(),
        }
    }
}

fn bad(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

fn parse<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| bad(format!("not a valid {what} document: {e}")))
}

/// Identifies a document by its fields, checks it for internal consistency,
/// and names its kind.
pub fn validate(text: &str) -> Result<&'static str, Failure> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let has = |k: &str| v.get(k).is_some();
    if has("verdict") && has("decompositions") {
        validate_report(&parse(v, "coefficient algebra report")?)?;
        Ok("coefficient algebra report")
    } else if has("nilpotent") {
        let doc: NilpotentDoc = parse(v, "nilpotency")?;
        let cp = CharPolyQ::from_doc(&doc.charpoly)?;
        if cp.is_trivial() != doc.nilpotent {
            return Err(bad("nilpotent flag disagrees with the characteristic polynomial"));
        }
        Ok("nilpotency result")
    } else if has("checks") {
        let doc: VerifyDoc = parse(v, "verification")?;
        if doc.passed != doc.checks.iter().all(|c| c.passed) {
            return Err(bad("summary flag disagrees with the checks"));
        }
        Ok("verification result")
    } else if has("m") && has("coeffs") {
        let doc: CharPolyDoc = parse(v, "characteristic polynomial")?;
        let cp = CharPolyQ::from_doc(&doc)?;
        if cp.plain() != doc.display {
            return Err(bad("display text disagrees with the coefficients"));
        }
        Ok("characteristic polynomial")
    } else if has("basis") && has("d") && has("elements") {
        validate_sympow(&parse(v, "symmetric power")?)?;
        Ok("symmetric power matrices")
    } else if has("elements") {
        Basis::from_doc(&parse::<LieBasisDoc>(v, "basis")?)?;
        Ok("Lie algebra basis")
    } else if has("size") && has("entries") {
        PolyMatrix::<Rational>::from_doc(&parse::<PolyMatrixDoc>(v, "polynomial matrix")?)?;
        Ok("polynomial matrix")
    } else if has("vars") && has("terms") {
        Poly::from_doc(&parse::<PolyDoc>(v, "polynomial")?)?;
        Ok("polynomial")
    } else {
        Err(bad("unrecognized document"))
    }
}

fn validate_sympow(doc: &SymPowerDoc) -> Result<(), Failure> {
    let basis = sym_basis(doc.n, doc.d);
    if doc.basis != basis.labels() {
        return Err(bad("basis labels do not match S^d(C^n)"));
    }
    for e in &doc.elements {
        let m: Mat<Rational> = Mat::from_strings(&e.matrix)?;
        if m.rows() != basis.len() || m.cols() != basis.len() {
            return Err(bad(format!("element {} has the wrong size", e.name)));
        }
    }
    Ok(())
}

fn validate_report(doc: &CoeffAlgebraReportDoc) -> Result<(), Failure> {
    let family: Family = doc.family.parse()?;
    let cp = CharPolyQ::from_doc(&doc.charpoly)?;
    let (reference, letter, recover_from) = reference_generators::<Rational>(family, doc.n)?;
    if doc.generators.len() != reference.len() || doc.generators.iter().zip(&reference).any(|(a, (b, _))| a != b) {
        return Err(bad("generator names do not match the family"));
    }
    if doc.decompositions.len() != cp.m() {
        return Err(bad("one decomposition per coefficient expected"));
    }
    for (i, o) in doc.decompositions.iter().enumerate() {
        check_outcome(o, &cp.coeff(i + 1), &reference)?;
    }
    let coeff_gens: Vec<(String, Poly)> = recover_from
        .iter()
        .filter(|&&i| i <= cp.m())
        .map(|&i| (format!("{letter}{i}"), cp.coeff(i)))
        .collect();
    for (o, (_, g)) in doc.recovery.iter().zip(&reference) {
        check_outcome(o, g, &coeff_gens)?;
    }
    Ok(())
}

/// Recomputes the residual of a stored decomposition from its generators.
fn check_outcome(o: &OutcomeDoc, target: &Poly, gens: &[(String, Poly)]) -> Result<(), Failure> {
    let Some(d) = &o.decomposition else {
        return Ok(());
    };
    check_decomposition(d, target, gens).map_err(|e| bad(format!("{}: {e}", o.label)))
}

fn check_decomposition(d: &DecompositionDoc, target: &Poly, gens: &[(String, Poly)]) -> Result<(), String> {
    let stored_target = Poly::from_doc(&d.target).map_err(|e| e.to_string())?;
    if stored_target != *target {
        return Err("target differs from the characteristic data".into());
    }
    if d.generators.len() != gens.len() || d.generators.iter().zip(gens).any(|(a, (b, _))| a != b) {
        return Err("generator names differ".into());
    }
    let expr = Poly::from_doc(&d.expression).map_err(|e| e.to_string())?;
    let residual = Poly::from_doc(&d.residual).map_err(|e| e.to_string())?;
    let map: Vec<(String, Poly)> = gens
        .iter()
        .enumerate()
        .map(|(k, (_, g))| (format!("y{}", k + 1), g.clone()))
        .collect();
    let value = expr.substitute(&map).map_err(|e| e.to_string())?;
    let recomputed = value.try_sub(target).map_err(|e| e.to_string())?;
    if recomputed != residual {
        return Err("stored residual is wrong".into());
    }
    if d.exact != residual.is_zero() {
        return Err("exact flag disagrees with the residual".into());
    }
    Ok(())
}
