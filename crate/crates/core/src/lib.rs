//! Exact Hochschild cohomology and Gerstenhaber structure of quadratic
//! string algebras.
//!
//! A [`BoundQuiver`] is validated into a [`StringAlgebra`]. The
//! [`CochainComplex`] computes cohomology by exact linear algebra; the
//! [`formula`] module evaluates the combinatorial closed forms, and
//! [`gerstenhaber`] implements cup products and brackets on parallel pairs.

pub mod algebra;
pub mod checks;
pub mod combinatorics;
pub mod complex;
pub mod corpus;
pub mod format;
pub mod formula;
pub mod gerstenhaber;
pub mod linalg;
pub mod quiver;

pub use algebra::{HypothesisError, StringAlgebra};
pub use combinatorics::{Decoration, PairClass, PairTag, ParallelPair};
pub use complex::{Cochain, CochainComplex, ComplexError};
pub use format::{emit_quiver, parse_quiver, FormatError, QuiverFile};
pub use formula::{hh_dim_formula, DimensionReport};
pub use gerstenhaber::{GerstenhaberError, Witness, WitnessKind};
pub use linalg::{Field, FieldError, Scalar};
pub use quiver::{ArrowId, BoundQuiver, Path, QuiverError, VertexId};
