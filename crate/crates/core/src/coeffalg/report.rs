//! Coefficient algebra of a preset family on `S^d(C^n)`, compared in both
//! directions with the family's reference generators.

use serde::{Deserialize, Serialize};

use super::{latex_generator, sl2_casimir, sym_power_char_poly, CharPoly, CharPolyDoc, Limits};
use crate::error::{Error, Result};
use crate::liealg::{Family, LieBasis};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::symfun::{
    decompose, elementary_generators, sl_trace_generators, trace_generators, DecomposeOptions,
    DecompositionDoc, SymDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every `c_i` lies in the reference algebra and every reference
    /// generator lies in the algebra of the `c_i`.
    Equality,
    ContainmentOnly,
    Failure,
}

#[derive(Clone, Debug)]
pub enum Outcome<S> {
    Done(SymDecomposition<S>),
    Failed(String),
}

impl<S: Scalar> Outcome<S> {
    pub fn is_exact(&self) -> bool {
        matches!(self, Outcome::Done(d) if d.is_exact())
    }

    pub fn decomposition(&self) -> Option<&SymDecomposition<S>> {
        match self {
            Outcome::Done(d) => Some(d),
            Outcome::Failed(_) => None,
        }
    }

    fn to_doc(&self, label: &str) -> OutcomeDoc {
        match self {
            Outcome::Done(d) => OutcomeDoc {
                label: label.to_string(),
                decomposition: Some(d.to_doc()),
                error: None,
            },
            Outcome::Failed(e) => OutcomeDoc {
                label: label.to_string(),
                decomposition: None,
                error: Some(e.clone()),
            },
        }
    }
}

fn run<S: Scalar>(
    f: &MultiPoly<S>,
    gens: &[(String, MultiPoly<S>)],
    opts: &DecomposeOptions,
) -> Outcome<S> {
    match decompose(f, gens, opts) {
        Ok(d) => Outcome::Done(d),
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

/// Named generators, the coefficient letter, and the coefficient indices
/// used for recovery.
pub type ReferenceGenerators<S> = (Vec<(String, MultiPoly<S>)>, &'static str, Vec<usize>);

/// Reference generators of a family on `C^n`, the letter naming the
/// characteristic coefficients, and the coefficient indices used to
/// recover the generators.
pub fn reference_generators<S: Scalar>(family: Family, n: usize) -> Result<ReferenceGenerators<S>> {
    Ok(match family {
        Family::Ut => (elementary_generators(n), "c", (1..=n).collect()),
        Family::Gl => (trace_generators(n), "z", (1..=n).collect()),
        Family::Sl => (sl_trace_generators(n)?, "w", (2..=n).collect()),
        Family::Sl2 => (vec![("q".to_string(), sl2_casimir())], "c", vec![2]),
    })
}

#[derive(Clone, Debug)]
pub struct CoeffAlgebraReport<S> {
    pub family: Family,
    pub n: usize,
    pub d: u32,
    pub charpoly: CharPoly<S>,
    /// `c1..cm` (or `z`, `w` by family).
    pub coefficient_names: Vec<String>,
    pub reference: Vec<(String, MultiPoly<S>)>,
    /// Each coefficient in the reference generators.
    pub decompositions: Vec<Outcome<S>>,
    /// Each reference generator in the selected coefficients.
    pub recovery: Vec<Outcome<S>>,
    pub verdict: Verdict,
}

pub fn coefficient_algebra<S: Scalar>(
    basis: &LieBasis<S>,
    d: u32,
    limits: &Limits,
    opts: &DecomposeOptions,
) -> Result<CoeffAlgebraReport<S>> {
    let family = basis.family().ok_or_else(|| {
        Error::InvalidArgument("coefficient algebra reports need a preset family (ut, gl, sl, sl2)".into())
    })?;
    let n = basis.n();
    let charpoly = sym_power_char_poly(basis, d, limits)?;
    let (reference, letter, recover_from) = reference_generators::<S>(family, n)?;
    let coefficient_names: Vec<String> = (1..=charpoly.m()).map(|i| format!("{letter}{i}")).collect();

    let decompositions: Vec<Outcome<S>> = charpoly
        .coeffs()
        .iter()
        .map(|c| run(c, &reference, opts))
        .collect();

    let recovery: Vec<Outcome<S>> = if recover_from.iter().any(|&i| i > charpoly.m()) {
        reference
            .iter()
            .map(|_| Outcome::Failed(format!("fewer than {} coefficients", n)))
            .collect()
    } else {
        let coeff_gens: Vec<(String, MultiPoly<S>)> = recover_from
            .iter()
            .map(|&i| (coefficient_names[i - 1].clone(), charpoly.coeff(i)))
            .collect();
        reference
            .iter()
            .map(|(_, g)| run(g, &coeff_gens, opts))
            .collect()
    };

    let forward = decompositions.iter().all(Outcome::is_exact);
    let backward = recovery.iter().all(Outcome::is_exact);
    let verdict = match (forward, backward) {
        (true, true) => Verdict::Equality,
        (true, false) => Verdict::ContainmentOnly,
        _ => Verdict::Failure,
    };
    Ok(CoeffAlgebraReport {
        family,
        n,
        d,
        charpoly,
        coefficient_names,
        reference,
        decompositions,
        recovery,
        verdict,
    })
}

impl<S: Scalar> CoeffAlgebraReport<S> {
    /// One line per coefficient and per recovered generator, e.g.
    /// `c2 = 2*e1^2 + 4*e2`.
    pub fn plain(&self) -> String {
        let mut out = format!("phi = {}\n", self.charpoly.plain());
        for (name, o) in self.coefficient_names.iter().zip(&self.decompositions) {
            out.push_str(&format!("{name} = {}\n", outcome_text(o)));
        }
        for ((name, _), o) in self.reference.iter().zip(&self.recovery) {
            out.push_str(&format!("{name} = {}\n", outcome_text(o)));
        }
        out.push_str(&format!("verdict: {}\n", verdict_text(self.verdict)));
        out
    }

    /// `phi` with every coefficient written in the reference generators.
    pub fn latex(&self) -> String {
        let exprs: Vec<Option<MultiPoly<S>>> = self
            .decompositions
            .iter()
            .map(|o| match o {
                Outcome::Done(d) if d.is_exact() => Some(d.named_expression()),
                _ => None,
            })
            .collect();
        self.charpoly.latex_with(&exprs, &latex_generator)
    }

    pub fn to_doc(&self) -> CoeffAlgebraReportDoc {
        CoeffAlgebraReportDoc {
            family: self.family.tag().to_string(),
            n: self.n,
            d: self.d,
            charpoly: self.charpoly.to_doc(),
            generators: self.reference.iter().map(|(n, _)| n.clone()).collect(),
            decompositions: self
                .coefficient_names
                .iter()
                .zip(&self.decompositions)
                .map(|(n, o)| o.to_doc(n))
                .collect(),
            recovery: self
                .reference
                .iter()
                .zip(&self.recovery)
                .map(|((n, _), o)| o.to_doc(n))
                .collect(),
            verdict: self.verdict,
        }
    }
}

fn outcome_text<S: Scalar>(o: &Outcome<S>) -> String {
    match o {
        Outcome::Done(d) if d.is_exact() => d.named_expression().to_string(),
        Outcome::Done(d) => format!("not expressible (residual {})", d.residual),
        Outcome::Failed(e) => format!("failed: {e}"),
    }
}

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::Equality => "equality",
        Verdict::ContainmentOnly => "containment-only",
        Verdict::Failure => "failure",
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDoc {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffAlgebraReportDoc {
    pub family: String,
    pub n: usize,
    pub d: u32,
    pub charpoly: CharPolyDoc,
    pub generators: Vec<String>,
    pub decompositions: Vec<OutcomeDoc>,
    pub recovery: Vec<OutcomeDoc>,
    pub verdict: Verdict,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn report(f: Family, n: usize, d: u32) -> CoeffAlgebraReport<BigRational> {
        let b = LieBasis::preset(f, n).unwrap();
        coefficient_algebra(&b, d, &Limits::default(), &DecomposeOptions::default()).unwrap()
    }

    #[test]
    fn ut2_square() {
        let r = report(Family::Ut, 2, 2);
        assert_eq!(r.verdict, Verdict::Equality);
        let text = r.plain();
        assert!(text.contains("c1 = 3*e1\n"), "{text}");
        assert!(text.contains("c2 = 2*e1^2 + 4*e2\n"), "{text}");
        assert!(text.contains("c3 = 4*e1*e2\n"), "{text}");
        assert!(text.contains("e1 = 1/3*c1\n"), "{text}");
        assert!(text.contains("e2 = -1/18*c1^2 + 1/4*c2\n"), "{text}");
    }

    #[test]
    fn gl2_cubic() {
        let r = report(Family::Gl, 2, 3);
        assert_eq!(r.verdict, Verdict::Equality);
        let text = r.plain();
        assert!(text.contains("z4 = 45/4*Tr1^4 - 27/2*Tr1^2*Tr2 + 9/4*Tr2^2\n"), "{text}");
    }

    #[test]
    fn sl2_report() {
        let r = report(Family::Sl2, 2, 1);
        assert_eq!(r.verdict, Verdict::Equality);
        assert!(r.plain().contains("c2 = -q\n"));
        let doc = r.to_doc();
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"verdict\":\"equality\""));
        assert_eq!(serde_json::from_str::<CoeffAlgebraReportDoc>(&text).unwrap(), doc);
        assert_eq!(r.latex(), "x_0^{2} - q");
    }

    #[test]
    fn custom_basis_rejected() {
        let r = coefficient_algebra(
            &LieBasis::<BigRational>::heisenberg(),
            1,
            &Limits::default(),
            &DecomposeOptions::default(),
        );
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
    }
}
