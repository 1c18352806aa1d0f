//! Degree-based topological indices on graphs, majorization of degree
//! sequences, extremal unicyclic graphs, and sharp bounds for vertex-degree
//! indices on unicyclic graphs together with an exhaustive checker.

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod index;
pub mod majorization;
pub mod value;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, DegreeSequence, Graph};
pub use index::IndexSpec;
pub use majorization::{FunctionSpec, Mode};
pub use value::IndexValue;
