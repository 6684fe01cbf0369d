//! Exact Laurent-polynomial rings.
//!
//! [`Laurent`] is generic over the exponent monoid and the coefficient type;
//! the crate root re-exports the two concrete rings used everywhere else,
//! `ℤ[A^±1]` and `ℤ[v^±1, z^±1]`, both with big-integer coefficients.

mod laurent;
mod matrix;
mod monomial;
mod text;

pub use laurent::{Coefficient, Laurent, UnitFlag};
pub use matrix::Matrix;
pub use monomial::{Exponent, VZ};
pub use text::ParsePolyError;

use num_bigint::BigInt;

/// Polynomials in one variable `A` with integer coefficients.
pub type LaurentA = Laurent<i64, BigInt>;

/// Polynomials in two variables `v`, `z` with integer coefficients.
pub type LaurentVZ = Laurent<VZ, BigInt>;

impl LaurentA {
    /// `c·A^e`.
    pub fn a_pow(e: i64) -> Self {
        Self::monomial(e, BigInt::from(1))
    }

    /// Integer multiple of a power of `A`.
    pub fn term(c: i64, e: i64) -> Self {
        Self::monomial(e, BigInt::from(c))
    }

    /// Loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::term(-1, 2) + Self::term(-1, -2)
    }
}

impl LaurentVZ {
    /// `c·v^a·z^b`.
    pub fn term(c: i64, a: i64, b: i64) -> Self {
        Self::monomial(VZ(a, b), BigInt::from(c))
    }

    /// `v^a`.
    pub fn v_pow(a: i64) -> Self {
        Self::term(1, a, 0)
    }

    /// Value of a trivial circle, `(v^-1 - v)·z^-1`.
    pub fn trivial_circle() -> Self {
        Self::term(1, -1, -1) + Self::term(-1, 1, -1)
    }

    /// True when the polynomial is `±v^k` for some `k` (no `z`).
    pub fn is_v_monomial(&self) -> bool {
        self.is_unit().exponent().is_some_and(|e| e.1 == 0)
    }
}
