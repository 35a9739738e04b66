//! Path and cycle contraction: exact solvers, brute-force oracles,
//! reductions and small-graph families.
//!
//! A *witness structure* of shape `P_ℓ` or `C_ℓ` for a graph `G` is a
//! partition of `V(G)` into `ℓ` connected parts where consecutive parts are
//! adjacent (cyclically, for cycles) and no other pair is. `G` contracts to
//! that shape with exactly `n - ℓ` edge contractions.

pub mod bench;
pub mod cycle;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pcce;
pub mod reductions;
pub mod set;
pub mod sweep;
pub mod witness;

pub use error::{Error, Result};
pub use cycle::{cyclicity_exact, solve_cycle};
pub use graph::Graph;
pub use pcce::{solve_path, solve_pcce, ConstrainedInstance};
pub use set::VertexSet;
pub use witness::{verify_witness, Shape, Violation, WitnessStructure};
