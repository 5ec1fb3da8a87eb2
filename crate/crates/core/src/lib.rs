//! Exact cycle index series for combinatorial species.
//!
//! The crate represents cycle index series as symmetric functions in the
//! power-sum basis with exact rational coefficients ([`PSeries`] for one
//! sort, [`BiSeries`] for two), implements sum, product, plethysm, the
//! Kronecker and scalar products, the `Φ` map and the two inner plethysms,
//! and uses them to count unlabeled digraphs with prescribed outdegrees,
//! regular multigraphs and bicolored graphs. The [`oracle`] module counts
//! the same objects by brute-force Burnside enumeration.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod partitions;
pub mod multisort;
pub mod oracle;
pub mod species;
pub mod symfunc;

pub use error::{Error, Result};
pub use partitions::{enumerate_partitions, Partition};
pub use multisort::BiSeries;
pub use symfunc::{FixFn, PSeries, Rational, Specialization};
