//! Characteristic polynomials of matrix Lie algebras and their symmetric
//! powers, with exact rational arithmetic.
//!
//! For a Lie algebra `g` with basis `g1..gn` acting on `V`, the polynomial
//! `det(x0*I + x1*[g1] + ... + xn*[gn])` is computed symbolically, and its
//! coefficients are compared with classical invariants (elementary symmetric
//! functions, traces of powers).
//!
//! ```
//! use liecoeff::{Basis, Limits, sym_power_char_poly};
//!
//! let sl2 = Basis::sl2();
//! let cp = sym_power_char_poly(&sl2, 1, &Limits::default()).unwrap();
//! assert_eq!(cp.plain(), "x0^2 - (x2^2 + x1*x3)");
//! ```

pub mod coeffalg;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod symfun;
pub mod sympow;

pub use coeffalg::{
    char_poly, coefficient_algebra, nilpotency_test, standard_char_poly, sym_power_char_poly, CharPoly,
    CharPolyDoc, CoeffAlgebraReport, Limits, Verdict,
};
pub use error::{Error, Result};
pub use liealg::{Family, LieBasis, LieBasisDoc, Representation, StructureConstants};
pub use linalg::Mat;
pub use matrix::{DetEngine, PolyMatrix};
pub use poly::{Monomial, MonomialOrder, MultiPoly, VarTable};
pub use scalar::Scalar;
pub use symfun::{decompose, DecomposeOptions, SymDecomposition};
pub use sympow::{sym_basis, sym_power_matrix, SymBasis};

pub use num_rational::{BigRational, Rational64};

/// Arbitrary-precision rationals; the default field everywhere.
pub type Rational = BigRational;
pub type Poly = MultiPoly<Rational>;
pub type RatMat = Mat<Rational>;
pub type Matrix = PolyMatrix<Rational>;
pub type Basis = LieBasis<Rational>;
pub type Rep = Representation<Rational>;
pub type CharPolyQ = CharPoly<Rational>;

/// Fixed-width variants. Faster for small inputs; arithmetic overflow panics.
pub type Poly64 = MultiPoly<Rational64>;
pub type Basis64 = LieBasis<Rational64>;
