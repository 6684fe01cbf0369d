//! Alternative bases of the solid-torus module and their matrices over `{x^n}`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::{p_poly, reduce_forest, KbsmError, SkeinVectorX};
use crate::algebra::Matrix;
use crate::{ArrowForest, LaurentA};

/// Basis families; index 0 of each is the empty link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisId {
    /// `P_n`: one oval with `n` counterclockwise arrows.
    P,
    /// `P_{-n}`.
    Pneg,
    /// `y_n`: `n` nested ovals, one counterclockwise arrow each.
    Y,
    /// `y_{-n}`: nested ovals with one clockwise arrow each.
    Yneg,
}

impl BasisId {
    pub const ALL: [BasisId; 4] = [BasisId::P, BasisId::Pneg, BasisId::Y, BasisId::Yneg];

    pub fn name(self) -> &'static str {
        match self {
            BasisId::P => "P",
            BasisId::Pneg => "Pneg",
            BasisId::Y => "y",
            BasisId::Yneg => "yneg",
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        BasisId::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown basis `{s}` (expected P, Pneg, y or yneg)"))
    }
}

/// The `n`-th element of a basis family, expanded over `{x^n}`.
pub fn expand_basis_element(basis: BasisId, n: usize) -> SkeinVectorX {
    if n == 0 {
        return SkeinVectorX::one();
    }
    let k = n as i64;
    match basis {
        BasisId::P => (*p_poly(k)).clone(),
        BasisId::Pneg => (*p_poly(-k)).clone(),
        BasisId::Y => reduce_forest(&ArrowForest::chain(&vec![1; n])),
        BasisId::Yneg => reduce_forest(&ArrowForest::chain(&vec![-1; n])),
    }
}

/// Change of basis from a basis family to `{x^n}`: column `j` of `m` is
/// element `j` expanded in `x^0..x^N`; `m_inv` is its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub basis: BasisId,
    pub n: usize,
    pub lens_p: Option<u32>,
    pub m: Matrix<LaurentA>,
    pub m_inv: Matrix<LaurentA>,
}

impl BasisMatrix {
    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.name(),
            "N": self.n,
            "p": self.lens_p,
            "M": self.m.to_json(),
            "Minv": self.m_inv.to_json(),
        })
    }
}

/// Matrix of the first `N + 1` elements of `basis`. With `lens_p`, `N` is
/// `⌊p/2⌋` and the result is the basis of the `L(p,1)` quotient.
pub fn basis_matrix(basis: BasisId, n: usize, lens_p: Option<u32>) -> Result<BasisMatrix, KbsmError> {
    let n = match lens_p {
        Some(0) => return Err(KbsmError::BadLens { p: 0 }),
        Some(p) => p as usize / 2,
        None => n,
    };
    let mut m = Matrix::zeros(n + 1);
    for j in 0..=n {
        for (i, c) in expand_basis_element(basis, j).terms() {
            m.set(i, j, c.clone());
        }
    }
    let m_inv = m.upper_inverse().ok_or(KbsmError::NotTriangular { basis: basis.name() })?;
    Ok(BasisMatrix { basis, n, lens_p, m, m_inv })
}
