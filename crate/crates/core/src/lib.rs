//! Littlewood-Richardson and Newell-Littlewood coefficients, tensor products
//! of irreducible representations of `SO(2n+1)`, `Sp(2n)` and `SO(2n)`, and
//! the cubic detection criterion `N^lambda_{lambda lambda} > 0`.

pub mod detection;
pub mod error;
pub mod lr;
pub mod newell_littlewood;
pub mod oracle;
pub mod partitions;
pub mod tableaux;

pub use detection::{detects, DetectionVerdict, WitnessTriple};
pub use error::{Error, Result};
pub use lr::{lr_coefficient, Coefficient, LrCache};
pub use newell_littlewood::{nl_coefficient, tensor_decompose, DecompositionResult, Family, GroupSpec};
pub use partitions::{Partition, ShapeFamily};
pub use tableaux::{SkewShape, SkewTableau, Word};
