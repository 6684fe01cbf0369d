//! Kauffman bracket skein modules of the solid torus and of `L(p,1)`.

mod bases;
mod lens;
mod poly;
mod presentation;
mod push;
mod reduce;
mod sweep;

use thiserror::Error;

use crate::DiagramError;

pub use bases::{basis_matrix, expand_basis_element, BasisId, BasisMatrix};
pub use lens::{
    derive_lens_rules, derive_lens_rules_with, eval_lens, eval_lens_with, lens_rules, lens_slide, LensRules, Pivot, SlideSense,
};
pub use poly::{Poly1, PolyT, SkeinVectorX};
pub use presentation::{
    prism_basis, qn_poly, rp3rp3_presentation, rp3rp3_relation, t_in_x, PrismBasis, Rp3Presentation,
};
pub use push::{push_coeffs, PushTable};
pub use reduce::{eval_torus, eval_torus_with_cap, p_poly, reduce_forest};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KbsmError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("lens space L({p},1) needs p >= 1")]
    BadLens { p: u32 },
    #[error("L({p},1): no slide relation with a unit leading coefficient eliminates x^{degree}")]
    NonUnitPivot { p: u32, degree: usize },
    #[error("L({p},1): a slide relation does not vanish under the derived rules")]
    Inconsistent { p: u32 },
    #[error("basis {basis}: matrix is not upper triangular with unit diagonal")]
    NotTriangular { basis: &'static str },
}
