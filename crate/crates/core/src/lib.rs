//! Exact solvers for four graph searching processes — standard zero
//! forcing, positive semidefinite zero forcing, power domination and
//! Cops-and-Robbers — together with their propagation/capture times, sum
//! and product throttling numbers, the graph families the results are
//! stated on, and a verification harness that replays every claim at desk
//! scale.
//!
//! ```
//! use throttle_core::budget::Budget;
//! use throttle_core::families;
//! use throttle_core::throttling::{throttle, ParamKind, Variant};
//!
//! // fewest PMU-rounds products on the 9-vertex path: three vertices
//! // observing everything in one round
//! let g = families::path(9).unwrap();
//! let report = throttle(&g, ParamKind::PowerDom, Variant::ProductNoCost,
//!                       &Budget::default()).unwrap();
//! assert_eq!(report.value, 3);
//! assert_eq!(report.witness, vec![1, 4, 7]);
//! ```

pub mod bits;
pub mod budget;
pub mod characterize;
pub mod chordal;
pub mod compose;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod metrics;
pub mod params;
pub mod propagation;
pub mod pursuit;
pub mod throttling;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_ORDER};
