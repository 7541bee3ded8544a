//! Generator and exact analyzer for the hierarchical scale-free network
//! family `G_t^z`.
//!
//! * [`network`] and [`address`]: the `(z, t)` spec, node addressing and
//!   node classes.
//! * [`generator`] and [`graph`]: streaming edge generation and the
//!   compressed adjacency it materializes into.
//! * [`formulas`]: closed-form counts, degree distribution, clustering and
//!   distance results in exact rational arithmetic.
//! * [`oracle`]: brute-force graph measurements used to check the formulas.

pub mod address;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod generator;
pub mod graph;
pub mod network;
pub mod oracle;

pub use address::{class_census, ClassCount, NodeAddress, NodeClass, Role};
pub use error::{Error, Result};
pub use exact::ExactScalar;
pub use generator::{build_graph, edge_stream, global_hub, last_layer, EdgeStream};
pub use graph::{Graph, NodeId};
pub use network::{NetworkSpec, DEFAULT_MAX_NODES};
