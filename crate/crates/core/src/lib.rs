//! Detection of abelian runs: maximal fragments of a word that factor into a
//! head, two or more cores sharing one Parikh vector, and a tail, where head
//! and tail fit inside that vector.
//!
//! - [`fixed_period`]: online O(n) scanner for one period vector.
//! - [`fixed_norm`]: online O(np) scanner for all periods of one norm.
//! - [`all_runs`]: offline pipeline for every abelian run of a word.
//! - [`oracle`]: brute-force reference implementations for testing.

pub mod all_runs;
pub mod alphabet;
pub mod anchor_list;
pub mod error;
pub mod fixed_norm;
pub mod fixed_period;
pub mod oracle;
pub mod parikh;
pub mod run;
pub mod tracker;

pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use parikh::{parikh_of, ParikhVector};
pub use run::{sort_runs, Run};
pub use tracker::{SparseTracker, WindowTracker};
