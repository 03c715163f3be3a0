//! Zero-divisor graphs of 2x2 matrix rings over small finite fields: field
//! and matrix arithmetic, canonical forms, graph construction, exact linear
//! algebra and spectral verification.

pub mod builder;
pub mod classify;
pub mod error;
pub mod export;
pub mod field;
pub mod graph;
pub mod linalg;
pub mod relations;
pub mod ring;
pub mod spectra;
pub mod templates;
pub mod verify;

pub use builder::{build_gamma, build_h, build_subgraph, class_induced_graph, vertex_sets, Subgraph, VertexSetId, VertexSetSpec};
pub use classify::{all_classes, canonical_form, class_representative, related, CanonicalForm, ZClass};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec, FIELD_ORDER_CAP};
pub use graph::{generalized_join, Graph, LoopPolicy};
pub use linalg::{CharPoly, IntMatrix, Method};
pub use ring::{zero_divisors, Mat2, GAMMA_ORDER_CAP};
pub use spectra::{AlgebraicEigenvalue, SpectrumMultiset};
