//! Symmetric powers `S^d(C^n)` and the lift of matrices acting on them.
//!
//! A matrix `A` acts on `C^n` by `e_s -> sum_j A[s][j] e_j` (so `E_ij`
//! sends `e_i` to `e_j`), extended to monomials as a derivation. The lift
//! is written row by row: row `r` holds the image of basis monomial `r`.
//! With this orientation `A -> [A]` is a Lie algebra homomorphism, `[A] = A`
//! for `d = 1`, and strictly upper triangular matrices lift to strictly upper
//! triangular ones.

use std::collections::HashMap;

use crate::error::Result;
use crate::liealg::{LieBasis, Representation};
use crate::linalg::Mat;
use crate::matrix::PolyMatrix;
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Degree-`d` monomials in `e_1..e_n`, lexicographically descending
/// (`e_1^d` first, `e_n^d` last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBasis {
    n: usize,
    d: u32,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

pub fn sym_basis(n: usize, d: u32) -> SymBasis {
    fn fill(rest: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            rest.push(left);
            out.push(rest.clone());
            rest.pop();
            return;
        }
        for e in (0..=left).rev() {
            rest.push(e);
            fill(rest, left - e, slots - 1, out);
            rest.pop();
        }
    }
    let mut monomials = Vec::new();
    if n > 0 {
        fill(&mut Vec::with_capacity(n), d, n, &mut monomials);
    }
    let index = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    SymBasis {
        n,
        d,
        monomials,
        index,
    }
}

impl SymBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    /// `e1^2*e2`-style labels.
    pub fn labels(&self) -> Vec<String> {
        self.monomials
            .iter()
            .map(|m| {
                let parts: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| match e {
                        1 => format!("e{}", i + 1),
                        _ => format!("e{}^{e}", i + 1),
                    })
                    .collect();
                parts.join("*")
            })
            .collect()
    }
}

/// Sparse description of the lift: `[A][row][col] += mult * A[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftPattern {
    basis: SymBasis,
    entries: Vec<LiftEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftEntry {
    pub row: usize,
    pub col: usize,
    pub i: usize,
    pub j: usize,
    pub mult: u32,
}

impl LiftPattern {
    pub fn new(n: usize, d: u32) -> Self {
        let basis = sym_basis(n, d);
        let mut entries = Vec::new();
        for (row, alpha) in basis.monomials().iter().enumerate() {
            for i in 0..n {
                if alpha[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    let mut beta = alpha.clone();
                    beta[i] -= 1;
                    beta[j] += 1;
                    let col = basis.index_of(&beta).expect("same degree");
                    entries.push(LiftEntry {
                        row,
                        col,
                        i,
                        j,
                        mult: alpha[i],
                    });
                }
            }
        }
        LiftPattern { basis, entries }
    }

    pub fn basis(&self) -> &SymBasis {
        &self.basis
    }

    pub fn entries(&self) -> &[LiftEntry] {
        &self.entries
    }

    pub fn lift<S: Scalar>(&self, a: &Mat<S>) -> Mat<S> {
        assert_eq!((a.rows(), a.cols()), (self.basis.n, self.basis.n), "lift size");
        let m = self.basis.len();
        let mut out: Mat<S> = Mat::zeros(m, m);
        for e in &self.entries {
            let v = &a[(e.i, e.j)];
            if !v.is_zero() {
                out[(e.row, e.col)] = out[(e.row, e.col)].clone() + v.clone() * S::from_int(e.mult.into());
            }
        }
        out
    }

    pub fn lift_poly<S: Scalar>(&self, a: &PolyMatrix<S>) -> PolyMatrix<S> {
        assert_eq!(a.size(), self.basis.n, "lift size");
        let m = self.basis.len();
        let mut acc: Vec<MultiPoly<S>> = vec![MultiPoly::zero(a.vars()); m * m];
        for e in &self.entries {
            let v = a.get(e.i, e.j);
            if !v.is_zero() {
                let cell = &mut acc[e.row * m + e.col];
                *cell = &*cell + &v.scale(&S::from_int(e.mult.into()));
            }
        }
        let rows = acc.chunks(m).map(<[_]>::to_vec).collect();
        PolyMatrix::from_rows(rows).expect("square lift")
    }
}

pub fn sym_power_matrix<S: Scalar>(a: &Mat<S>, d: u32) -> Mat<S> {
    LiftPattern::new(a.rows(), d).lift(a)
}

pub fn sym_power_poly_matrix<S: Scalar>(a: &PolyMatrix<S>, d: u32) -> PolyMatrix<S> {
    LiftPattern::new(a.size(), d).lift_poly(a)
}

/// Lifts every image of `rep` to its `d`-th symmetric power.
pub fn sym_power_of<S: Scalar>(rep: &Representation<S>, d: u32) -> Result<Representation<S>> {
    let pattern = LiftPattern::new(rep.dim(), d);
    Ok(Representation {
        names: rep.names.clone(),
        variables: rep.variables.clone(),
        images: rep.images.iter().map(|a| pattern.lift(a)).collect(),
    })
}

/// `S^d(C^n)` as a representation of a matrix Lie algebra.
pub fn sym_power_rep<S: Scalar>(basis: &LieBasis<S>, d: u32) -> Representation<S> {
    sym_power_of(&basis.standard_rep(), d).expect("standard representation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Family;
    use num_rational::BigRational;

    type M = Mat<BigRational>;

    #[test]
    fn basis_order() {
        assert_eq!(sym_basis(2, 2).monomials(), [vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(
            sym_basis(3, 2).labels(),
            ["e1^2", "e1*e2", "e1*e3", "e2^2", "e2*e3", "e3^2"]
        );
        assert_eq!(sym_basis(1, 5).monomials(), [vec![5]]);
        assert_eq!(sym_basis(4, 3).len(), 20);
    }

    #[test]
    fn gl2_square_lifts() {
        let e11 = sym_power_matrix(&M::unit(2, 0, 0), 2);
        assert_eq!(e11, M::from_ints(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 0]]));
        let e12 = sym_power_matrix(&M::unit(2, 0, 1), 2);
        assert_eq!(e12, M::from_ints(&[&[0, 2, 0], &[0, 0, 1], &[0, 0, 0]]));
        let e21 = sym_power_matrix(&M::unit(2, 1, 0), 2);
        assert_eq!(e21, M::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]));
        let e22 = sym_power_matrix(&M::unit(2, 1, 1), 2);
        assert_eq!(e22, M::from_ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]));
    }

    #[test]
    fn identity_and_degree_one() {
        let id = sym_power_matrix(&M::identity(3), 3);
        assert_eq!(id, M::identity(10).scale(&BigRational::from_integer(3.into())));
        let a = M::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(sym_power_matrix(&a, 1), a);
    }

    #[test]
    fn ut2_cubic_diagonals() {
        let b = LieBasis::<BigRational>::preset(Family::Ut, 2).unwrap();
        let rep = sym_power_rep(&b, 3);
        let diag = |m: &M| (0..4).map(|i| m[(i, i)].to_string()).collect::<Vec<_>>();
        assert_eq!(diag(&rep.images[0]), ["3", "2", "1", "0"]);
        assert_eq!(diag(&rep.images[1]), ["0", "1", "2", "3"]);
        assert!(rep.is_representation_of(&b));
    }

    #[test]
    fn poly_lift_matches_rational_lift() {
        let b = LieBasis::<BigRational>::preset(Family::Gl, 2).unwrap();
        let x = b.generic_element();
        let lifted = sym_power_poly_matrix(&x, 3);
        let t = lifted.vars().clone();
        let p = |s: &str| MultiPoly::<BigRational>::parse(s, &t).unwrap();
        assert_eq!(lifted.get(0, 0), &p("3*x11"));
        assert_eq!(lifted.get(0, 1), &p("3*x12"));
        assert_eq!(lifted.get(1, 1), &p("2*x11 + x22"));
        assert_eq!(lifted.get(2, 2), &p("x11 + 2*x22"));
        assert_eq!(lifted.get(3, 2), &p("3*x21"));
    }
}
