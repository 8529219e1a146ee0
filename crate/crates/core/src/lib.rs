//! Valued quivers of basic hereditary rings and the right Koethe decision.
//!
//! ```
//! use koethe_core::{catalog, decide_hereditary, format, reflect};
//!
//! let q = format::parse("arrow 1 -> 2\narrow 2 -> 3 seq 3,1,2,2,1\n")?;
//! let indecs = reflect::enumerate_indecomposables(&q, reflect::DEFAULT_STEP_CAP)?;
//! assert_eq!(indecs.len(), 15);
//!
//! assert!(!decide_hereditary(&catalog::e8())?.koethe);
//! # Ok::<(), koethe_core::Error>(())
//! ```

pub mod dimseq;
pub mod error;
pub mod format;
pub mod koethe;
pub mod linalg;
pub mod quiver;
pub mod reflect;
pub mod rep;
pub mod roots;

pub use error::{Error, Result};
pub use koethe::{
    decide_hereditary, decide_radical_square_zero, ComponentVerdict, FailureReason, KoetheVerdict,
};
pub use linalg::Matrix;
pub use quiver::{
    catalog, classify, Arrow, ArrowLabel, DiagramType, DualizationSequence, Mode, Quiver, VertexId,
};
pub use reflect::{CoxeterTower, DimVector};
pub use rep::MatrixRep;
