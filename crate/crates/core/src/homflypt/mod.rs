//! HOMFLYPT skein modules of the solid torus and of `L(p,1)`, on
//! crossingless oriented arrow diagrams.
//!
//! Coefficient tables are computed from braid closures in the Hecke
//! algebra, with the relation `v⁻¹L₊ − vL₋ = zL₀` and the trivial circle
//! equal to `(v⁻¹ − v)z⁻¹`.

mod basis;
mod change;
mod hecke;
mod lens;
mod push;
mod reduce;

use thiserror::Error;

use crate::DiagramError;

pub use basis::{order_compare, BElement, BasisLabel, BppElement, OrderKey, SkeinVec, SkeinVectorB, SkeinVectorBpp};
pub use change::{b_truncation, bpp_forest, expand_bpp, f_to_bpp, f_to_bpp_lens, f_to_bpp_with, homflypt_basis_matrix, HBasisMatrix};
pub use lens::{homflypt_lens_rules, homflypt_lens_rules_with, lens_reduce, HLensRules, LensSpec};
pub use push::{homflypt_push_coeffs, revert_tbar, HPushTable, PushConfig};
pub use reduce::{b_forest, eval_oriented, reduce_oriented_forest, t_label};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomflyptError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("oval indices must be nonzero")]
    ZeroIndex,
    #[error("indices {0:?} are not in nesting order")]
    NotNested(Vec<i64>),
    #[error("cannot parse `{0}`")]
    BadText(String),
    #[error("push of an oval with {n} arrows ({config}) does not have the local form")]
    NotLocal { n: i64, config: PushConfig },
    #[error("`{element}` maps to `{image}`, whose leading term is not a unit multiple of it")]
    NotTriangular { element: String, image: String },
    #[error("`{element}` falls outside the truncation")]
    Truncation { element: String },
    #[error("lens space needs p >= 1, got {0}")]
    BadLens(u32),
    #[error("`{element}` is not in B_{p}")]
    OutOfRange { element: String, p: u32 },
    #[error("slide of `{element}` in L({p},1) has non-unit pivot {pivot}")]
    NonUnitPivot { element: String, p: u32, pivot: String },
    #[error("rewriting `{element}` in L({p},1) does not terminate")]
    RewriteCycle { element: String, p: u32 },
    #[error("lens rules for L({p},1) violate the {relation}")]
    Inconsistent { p: u32, relation: String },
}
