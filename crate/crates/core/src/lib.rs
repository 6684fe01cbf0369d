//! Exact skein-module computations for links in the solid torus and the lens
//! spaces `L(p,1)`, presented as arrow diagrams in the disk.

pub mod algebra;
pub mod convert;
pub mod diagram;
pub mod homflypt;
pub mod kbsm;

pub use algebra::{LaurentA, LaurentVZ, UnitFlag, VZ};
pub use diagram::{parse_morse, ArrowForest, DiagramError, MorseWord, OrientedForest};
pub use kbsm::{eval_torus, reduce_forest, SkeinVectorX};
