//! Hyperplanes that split a set of pairwise disjoint unit balls into two
//! balanced halves while cutting few of them.
//!
//! Two algorithms are provided:
//!
//! * [`separator`]: in any dimension, an approximate halving hyperplane found
//!   by scanning a small, well-spread set of directions.
//! * [`halving`]: in the plane, an exact halving line found by prune-and-search
//!   over the dual line arrangement.
//!
//! [`oracle`] holds slow reference checks used by the tests and the CLI.

pub mod error;
pub mod geom;
pub mod halving;
pub mod instances;
pub mod oracle;
pub mod select;
pub mod separator;

pub use error::{Error, Result};
pub use geom::{BallSet, Direction, DualLine, Hyperplane, Point};
pub use halving::{halving_line, halving_line_traced, HalvingResult, PlanarParams};
pub use separator::{find_separator_nd, FallbackWarning, SeparatorParams, SeparatorResult};
