//! Search for complete graph minors in dense graphs.
//!
//! Given a graph whose average degree is at least `(2+ε)·g(t)`, where `g` is
//! an extremal-degree function for K_t minors, [`find_minor`] returns a model
//! of K_t: `t` disjoint connected branch sets, every two joined by an edge.
//! The work done is linear in the number of vertices for fixed `t` and `ε`.
//! Every returned model is checked by [`verify_model`] before it is returned.
//!
//! The search repeatedly normalizes the working graph to a narrow average
//! degree window, then either contracts an induced matching of cheap edges,
//! shrinks to a dense core of high-degree vertices, or finds the minor in the
//! neighborhood of one low-degree vertex. Exhaustive search and an
//! independent partition oracle cover small graphs.

pub mod bench;
pub mod certificate;
pub mod dense_matching;
pub mod driver;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod minor_oracle;
pub mod numeric;
pub mod pair_assignment;
pub mod preprocess;

pub use certificate::{verify_model, MinorModel, Verdict, Violation};
pub use driver::{find_minor, replay, FindOutcome, RunStats, TraceEvent};
pub use error::MinorError;
pub use graph::{Graph, GraphError, VertexId};
pub use minor_oracle::{exhaustive_minor, partition_oracle, OracleError};
pub use numeric::{parse_rational, Rational};
pub use preprocess::{Config, GFunction};
