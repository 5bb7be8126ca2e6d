use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::VarTable;

/// Exponent vector over a [`VarTable`]; always as long as the table.
///
/// The derived ordering is graded lexicographic with table position 0 as the
/// most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(len: usize, index: usize) -> Self {
        let mut exps = vec![0; len];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.0.clone();
        exps[i] = e;
        Monomial(exps)
    }

    /// Moves the exponents into a table of length `len` using `map[i]` as the new slot of `i`.
    pub(crate) fn remap(&self, map: &[usize], len: usize) -> Monomial {
        let mut exps = vec![0; len];
        for (i, &e) in self.0.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Monomial {
    /// Graded reverse lexicographic comparison: total degree first, then the
    /// monomial with the smaller exponent in the last differing variable is
    /// larger. Used for display only.
    pub fn cmp_grevlex(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order with an explicit variable priority.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Table order: position 0 is the largest variable.
    pub fn table(vars: &VarTable) -> Self {
        MonomialOrder {
            priority: (0..vars.len()).collect(),
        }
    }

    /// The listed names first (in the given order), then every remaining
    /// variable in table order.
    pub fn graded_lex(vars: &VarTable, leading: &[&str]) -> Result<Self> {
        let mut priority = Vec::with_capacity(vars.len());
        for name in leading {
            let i = vars.require(name)?;
            if priority.contains(&i) {
                return Err(Error::DuplicateVariable(name.to_string()));
            }
            priority.push(i);
        }
        for i in 0..vars.len() {
            if !priority.contains(&i) {
                priority.push(i);
            }
        }
        Ok(MonomialOrder { priority })
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            self.priority
                .iter()
                .map(|&i| a.exponent(i).cmp(&b.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_before_lex() {
        let a = Monomial::from_exponents(vec![1, 1]);
        let b = Monomial::from_exponents(vec![2, 0]);
        let c = Monomial::from_exponents(vec![0, 3]);
        assert!(b > a);
        assert!(c > b);
    }

    #[test]
    fn custom_priority() {
        let vars = VarTable::new(["a", "b"]).unwrap();
        let ord = MonomialOrder::graded_lex(&vars, &["b"]).unwrap();
        let a2 = Monomial::from_exponents(vec![2, 0]);
        let b2 = Monomial::from_exponents(vec![0, 2]);
        assert_eq!(ord.compare(&a2, &b2), Ordering::Less);
        assert_eq!(MonomialOrder::table(&vars).compare(&a2, &b2), Ordering::Greater);
    }

    #[test]
    fn division() {
        let a = Monomial::from_exponents(vec![2, 1]);
        let b = Monomial::from_exponents(vec![1, 1]);
        assert_eq!(a.div(&b), Some(Monomial::from_exponents(vec![1, 0])));
        assert_eq!(b.div(&a), None);
    }
}
