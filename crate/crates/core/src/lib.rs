//! Strict digraphs in which no two distinct 2-walks share both ends, and
//! equivalently zero-trace 0-1 matrices whose squares are again 0-1.
//!
//! * [`digraph`] and [`matrix`]: the digraph and matrix views.
//! * [`walk`]: the F-free decision procedures and pivot diagnostics.
//! * [`family`]: the six extremal families, `ex(n)` and its lower bound.
//! * [`search`]: exact maximum size at small orders by branch and bound.
//! * [`recognize`]: classification of extremal digraphs and a degree-condition audit.
//! * [`format`]: the matrix and arc-list file formats.
//! * [`cli`]: the `twowalk` command line.

pub mod cli;
pub mod digraph;
pub mod error;
pub mod family;
pub mod format;
pub mod matrix;
pub mod recognize;
pub mod search;
pub mod walk;

pub use digraph::{vertex_set, Degrees, Digraph, VertexSet};
pub use error::{Error, Result};
pub use family::{
    construct, default_spec, enumerate_specs, ex_formula, family_size, lower_bound, Arborescence,
    Family, FamilySpec,
};
pub use matrix::{NatMatrix, ZeroOneMatrix};
pub use recognize::{audit, is_isomorphic, necessary_conditions, match_family, recognize, AuditReport, Direction, Match, RecognitionReport, Verdict};
pub use search::{brute_force_max, brute_force_max_with_progress, is_arc_maximal, Budget, ProgressEvent, SearchConfig, SearchResult};
pub use walk::{alpha, check_matrix_route, context, is_f_free, square, CheckReport, VertexContext, Witness};
