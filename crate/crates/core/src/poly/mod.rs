//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`MultiPoly`] is a map from [`Monomial`] to a nonzero coefficient over a
//! shared [`VarTable`]. Canonical form is kept after every operation: no zero
//! coefficient is ever stored, so structural equality is polynomial identity.
//!
//! Binary operators (`+`, `-`, `*`) accept operands whose tables embed into
//! one another by name and panic otherwise; the `try_*` methods report the
//! mismatch as [`Error::IncompatibleVars`] instead.

mod format;
mod monomial;
mod parse;
mod vars;

use std::borrow::Cow;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

pub use format::{latex_var, PolyDoc, TermDoc};
pub use monomial::{Monomial, MonomialOrder};
pub use vars::VarTable;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct MultiPoly<S> {
    vars: VarTable,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero(vars: &VarTable) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, S::one())
    }

    pub fn constant(vars: &VarTable, c: S) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: &VarTable, c: i64) -> Self {
        Self::constant(vars, S::from_int(c))
    }

    /// Single term `c * m`; zero when `c` is zero.
    pub fn term(vars: &VarTable, m: Monomial, c: S) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial length must match the table");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &VarTable, name: &str) -> Result<Self> {
        Ok(Self::var_at(vars, vars.require(name)?))
    }

    pub fn var_at(vars: &VarTable, index: usize) -> Self {
        Self::term(vars, Monomial::var(vars.len(), index), S::one())
    }

    /// Builds a polynomial from raw exponent vectors, merging repeats and dropping zeros.
    pub fn from_terms<I>(vars: &VarTable, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, S)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} over {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            p.add_term(Monomial::from_exponents(exps), c);
        }
        Ok(p)
    }

    pub(crate) fn from_map(vars: &VarTable, terms: BTreeMap<Monomial, S>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    /// Terms in graded-lex descending order (table position 0 most significant).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> + '_ {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term.
    pub fn constant_term(&self) -> S {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn used_variables(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0))
            .collect()
    }

    pub fn mentions(&self, name: &str) -> bool {
        self.vars
            .index_of(name)
            .is_some_and(|i| self.terms.keys().any(|m| m.exponent(i) > 0))
    }

    /// Re-expresses the polynomial over another table by name.
    ///
    /// Variables that do not occur in any term may be absent from `target`.
    pub fn to_table(&self, target: &VarTable) -> Result<Self> {
        if self.vars.same(target) {
            return Ok(MultiPoly {
                vars: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<usize> = (0..self.vars.len())
            .map(|i| {
                target.index_of(self.vars.name(i)).map_or_else(
                    || {
                        if self.terms.keys().any(|m| m.exponent(i) > 0) {
                            Err(Error::UnknownVariable(self.vars.name(i).to_string()))
                        } else {
                            Ok(usize::MAX)
                        }
                    },
                    Ok,
                )
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[map[i]] += e;
                }
            }
            out.terms.insert(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    fn align<'a>(a: &'a Self, b: &'a Self) -> Result<(Cow<'a, Self>, Cow<'a, Self>)> {
        if a.vars.same(&b.vars) {
            return Ok((Cow::Borrowed(a), Cow::Borrowed(b)));
        }
        let common = a.vars.common(&b.vars)?;
        let lift = |p: &'a Self| -> Result<Cow<'a, Self>> {
            if p.vars.same(&common) {
                Ok(Cow::Borrowed(p))
            } else {
                let map = p.vars.mapping_into(&common)?;
                let terms = p
                    .terms
                    .iter()
                    .map(|(m, c)| (m.remap(&map, common.len()), c.clone()))
                    .collect();
                Ok(Cow::Owned(MultiPoly::from_map(&common, terms)))
            }
        };
        Ok((lift(a)?, lift(b)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::align(self, other)?;
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::align(self, other)?;
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::align(self, other)?;
        let mut out = Self::zero(&a.vars);
        if a.is_zero() || b.is_zero() {
            return Ok(out);
        }
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
            .collect();
        Self::from_map(&self.vars, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v.clone() * c.clone()))
            .collect();
        Self::from_map(&self.vars, terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients `[a_0, ..., a_deg]` with `self = sum a_k * v^k`, each free of `v`.
    pub fn coefficients_in(&self, name: &str) -> Result<Vec<Self>> {
        let i = self.vars.require(name)?;
        Ok(self.coefficients_in_index(i))
    }

    pub fn coefficients_in_index(&self, index: usize) -> Vec<Self> {
        let deg = self.degree_in(index) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(index) as usize;
            out[k]
                .terms
                .insert(m.with_exponent(index, 0), c.clone());
        }
        out
    }

    /// Largest monomial under `order`.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| order.compare(a, b))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under the table order.
    pub fn leading_term(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    /// Image under the algebra homomorphism sending each named variable to
    /// the given polynomial and fixing all others.
    ///
    /// The result lives over the (common) table of the images, extended by any
    /// unmapped variable of `self` that it lacks.
    pub fn substitute<K: AsRef<str>>(&self, map: &[(K, Self)]) -> Result<Self> {
        if map.is_empty() {
            return Ok(self.clone());
        }
        let mut target = map[0].1.vars.clone();
        for (_, img) in &map[1..] {
            target = target.common(&img.vars)?;
        }
        let mut images: HashMap<usize, Self> = HashMap::new();
        for (name, img) in map {
            let i = self.vars.require(name.as_ref())?;
            images.insert(i, img.clone());
        }
        let missing: Vec<String> = self
            .used_variables()
            .into_iter()
            .filter(|i| !images.contains_key(i) && !target.contains(self.vars.name(*i)))
            .map(|i| self.vars.name(i).to_string())
            .collect();
        if !missing.is_empty() {
            target = target.extended(missing);
        }
        let mut per_var: Vec<Option<Self>> = vec![None; self.vars.len()];
        for i in self.used_variables() {
            per_var[i] = Some(match images.get(&i) {
                Some(img) => img.to_table(&target)?,
                None => Self::var(&target, self.vars.name(i))?,
            });
        }
        let mut powers: Vec<Vec<Self>> = vec![Vec::new(); self.vars.len()];
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = per_var[i].as_ref().expect("used variable has an image");
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Self::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * base;
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            for (m2, c2) in t.terms {
                out.add_term(m2, c2);
            }
        }
        Ok(out)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.swap(i, j);
                (Monomial::from_exponents(e), c.clone())
            })
            .collect();
        Self::from_map(&self.vars, terms)
    }

    /// Applies a permutation of variable slots: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let n = self.vars.len();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(perm, n), c.clone()))
            .collect();
        Self::from_map(&self.vars, terms)
    }

    /// Evaluates at a point given in table order.
    pub fn evaluate(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t * v.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
        let (a, d) = Self::align(self, divisor)?;
        let (lm, lc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = a.into_owned();
        let mut quot = Self::zero(&rem.vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm).ok_or(Error::InexactDivision)?;
            let qc = c.clone() / lc.clone();
            for (dm, dc) in &d.terms {
                rem.add_term(dm.mul(&qm), -(dc.clone() * qc.clone()));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Named view of the terms, independent of table layout.
    fn named_terms(&self) -> Vec<(Vec<(&str, u32)>, &S)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut key: Vec<(&str, u32)> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (self.vars.name(i), e))
                    .collect();
                key.sort();
                (key, c)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

impl<S: Scalar> PartialEq for MultiPoly<S> {
    /// Identity of polynomials by variable name; tables may differ in layout.
    fn eq(&self, other: &Self) -> bool {
        if self.vars.same(&other.vars) {
            self.terms == other.terms
        } else {
            self.terms.len() == other.terms.len() && self.named_terms() == other.named_terms()
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a, S: Scalar> $trait<&'a MultiPoly<S>> for &'a MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $method(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<S: Scalar> $trait for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $method(self, rhs: MultiPoly<S>) -> MultiPoly<S> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, S: Scalar> $trait<&'a MultiPoly<S>> for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $method(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        MultiPoly::from_map(&self.vars, terms)
    }
}

impl<S: Scalar> Neg for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        -&self
    }
}
