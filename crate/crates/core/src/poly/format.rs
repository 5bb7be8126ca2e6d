use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, VarTable};
use crate::scalar::{parse_scalar, Scalar};

/// Canonical interchange form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub exp: Vec<u32>,
}

impl<S: Scalar> MultiPoly<S> {
    pub fn to_doc(&self) -> PolyDoc {
        PolyDoc {
            vars: self.vars().names().to_vec(),
            terms: self
                .terms()
                .map(|(m, c)| TermDoc {
                    coeff: c.to_string(),
                    exp: m.exponents().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &PolyDoc) -> Result<Self> {
        let vars = VarTable::new(doc.vars.iter().cloned())?;
        Self::from_doc_in(doc, &vars)
    }

    /// Reads a document whose `vars` must equal the given table.
    pub fn from_doc_in(doc: &PolyDoc, vars: &VarTable) -> Result<Self> {
        if doc.vars.as_slice() != vars.names() {
            return Err(Error::Parse(format!(
                "polynomial variables {:?} do not match table {}",
                doc.vars, vars
            )));
        }
        let terms = doc
            .terms
            .iter()
            .map(|t| {
                parse_scalar::<S>(&t.coeff)
                    .map(|c| (t.exp.clone(), c))
                    .ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", t.coeff)))
            })
            .collect::<Result<Vec<_>>>()?;
        if terms.iter().any(|(_, c)| c.is_zero()) {
            return Err(Error::Parse("zero coefficient in canonical form".into()));
        }
        Self::from_terms(vars, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("polynomial documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PolyDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }

    /// Terms in display order: graded reverse lexicographic, descending.
    /// (Storage and JSON use graded lex.)
    pub fn display_terms(&self) -> Vec<(&Monomial, &S)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|a, b| b.0.cmp_grevlex(a.0));
        t
    }

    /// LaTeX rendering, with `x12` shown as `x_{12}` and `x_3_12` as `x_{3,12}`.
    pub fn to_latex(&self) -> String {
        self.to_latex_with(&|name| latex_var(name))
    }

    /// LaTeX rendering with a caller-supplied variable renderer.
    pub fn to_latex_with(&self, var: &dyn Fn(&str) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = latex_monomial(self.vars(), m, var);
            let coeff = latex_scalar(&abs);
            if mono.is_empty() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                    out.push(' ');
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

pub(crate) fn format_monomial(vars: &VarTable, m: &Monomial) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars.name(i).to_string()
            } else {
                format!("{}^{}", vars.name(i), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn latex_monomial(vars: &VarTable, m: &Monomial, var: &dyn Fn(&str) -> String) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let v = var(vars.name(i));
            if e == 1 {
                v
            } else {
                format!("{v}^{{{e}}}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn latex_scalar<S: Scalar>(c: &S) -> String {
    let text = c.to_string();
    match text.split_once('/') {
        Some((p, q)) => match p.strip_prefix('-') {
            Some(p) => format!("-\\frac{{{p}}}{{{q}}}"),
            None => format!("\\frac{{{p}}}{{{q}}}"),
        },
        None => text,
    }
}

/// `x12` -> `x_{12}`, `x_3_12` -> `x_{3,12}`, other names unchanged.
pub fn latex_var(name: &str) -> String {
    let head: String = name.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let rest = &name[head.len()..];
    if head.is_empty() || rest.is_empty() {
        return name.to_string();
    }
    let idx = rest.trim_start_matches('_');
    if idx.is_empty() || !idx.chars().all(|c| c.is_ascii_digit() || c == '_') {
        return name.to_string();
    }
    format!("{head}_{{{}}}", idx.replace('_', ","))
}

impl<S: Scalar> fmt::Display for MultiPoly<S> {
    /// Plain syntax: `*` products, `^` powers, terms in display order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = format_monomial(self.vars(), m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Serialize for MultiPoly<S> {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> std::result::Result<Se::Ok, Se::Error> {
        self.to_doc().serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for MultiPoly<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = PolyDoc::deserialize(deserializer)?;
        MultiPoly::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    #[test]
    fn plain_output_is_graded_reverse_lex() {
        let t = VarTable::indexed("x", 0, 4);
        let f = P::parse("x1*x3 + x2^2 - 1/2*x0 + 3", &t).unwrap();
        assert_eq!(f.to_string(), "x2^2 + x1*x3 - 1/2*x0 + 3");
        let g = VarTable::new(["x11", "x12", "x21", "x22"]).unwrap();
        let z3 = P::parse(
            "48*x11*x22^2 + 6*x22^3 + 6*x11^3 - 30*x12*x21*x22 - 30*x11*x12*x21 + 48*x11^2*x22",
            &g,
        )
        .unwrap();
        assert_eq!(
            z3.to_string(),
            "6*x11^3 - 30*x11*x12*x21 + 48*x11^2*x22 - 30*x12*x21*x22 + 48*x11*x22^2 + 6*x22^3"
        );
        assert_eq!(P::zero(&t).to_string(), "0");
        assert_eq!(P::parse("-x1", &t).unwrap().to_string(), "-x1");
    }

    #[test]
    fn json_shape() {
        let t = VarTable::indexed("x", 0, 2);
        let f = P::parse("x0^2 - 3/2*x1", &t).unwrap();
        assert_eq!(
            f.to_json(),
            r#"{"vars":["x0","x1"],"terms":[{"coeff":"1","exp":[2,0]},{"coeff":"-3/2","exp":[0,1]}]}"#
        );
        assert_eq!(P::from_json(&f.to_json()).unwrap(), f);
        assert!(P::from_json(r#"{"vars":["x0"],"terms":[{"coeff":"0","exp":[1]}]}"#).is_err());
        assert!(P::from_json(r#"{"vars":["x0"],"terms":[{"coeff":"1.5","exp":[1]}]}"#).is_err());
    }

    #[test]
    fn latex() {
        let t = VarTable::new(["x0", "x12", "x_3_12"]).unwrap();
        let f = P::parse("x0^2 - 1/2*x12*x_3_12", &t).unwrap();
        assert_eq!(f.to_latex(), "x_{0}^{2} - \\frac{1}{2} x_{12} x_{3,12}");
    }
}
