use crate::error::{Error, Result};
use crate::poly::{MultiPoly, VarTable};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, S> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a VarTable,
    _marker: std::marker::PhantomData<S>,
}

impl<S: Scalar> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly<S>> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<S>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                acc = acc.scale(&(S::one() / d.constant_term()));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<S>> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly<S>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{n}`")))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly<S>> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = S::from_str(&n).map_err(|_| Error::Parse(format!("bad number `{n}`")))?;
                Ok(MultiPoly::constant(self.vars, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                MultiPoly::var(self.vars, &name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl<S: Scalar> MultiPoly<S> {
    /// Parses the plain syntax (`^` powers, explicit `*`, `p/q` rationals).
    pub fn parse(text: &str, vars: &VarTable) -> Result<Self> {
        let mut parser = Parser {
            toks: lex(text)?,
            pos: 0,
            vars,
            _marker: std::marker::PhantomData,
        };
        if parser.toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let p = parser.expr()?;
        if parser.pos != parser.toks.len() {
            return Err(Error::Parse(format!(
                "trailing input at token {:?}",
                parser.toks[parser.pos]
            )));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    #[test]
    fn precedence() {
        let t = VarTable::indexed("x", 0, 3);
        assert_eq!(
            P::parse("-x1^2", &t).unwrap(),
            P::parse("0 - x1*x1", &t).unwrap()
        );
        assert_eq!(
            P::parse("2*x1/4 + 3/6", &t).unwrap(),
            P::parse("1/2*(x1 + 1)", &t).unwrap()
        );
    }

    #[test]
    fn errors() {
        let t = VarTable::indexed("x", 0, 3);
        assert!(P::parse("x1 +", &t).is_err());
        assert!(P::parse("x9", &t).is_err());
        assert!(P::parse("x1 / x2", &t).is_err());
        assert!(P::parse("(x1", &t).is_err());
        assert!(P::parse("x1 $ x2", &t).is_err());
    }
}
