//! Graph families: LPS Cayley graphs, random regular graphs, random lifts,
//! small named graphs, and file I/O.

pub mod io;
mod lift;
mod lps;
pub mod named;
mod random_regular;

pub use lift::{build_random_lift, is_covering_map, LiftSpec};
pub use lps::{build_lps, lps_generators, LpsParams};
pub use named::build_named;
pub use random_regular::{build_random_regular, build_random_regular_with_budget};

/// Default number of seeds tried by the randomized builders.
pub const RETRY_BUDGET: usize = 100;
