//! Group catalog, verification suites and reports for the weak
//! commutativity constructions.

pub mod catalog;
pub mod report;
pub mod suites;

pub use catalog::{catalog, lookup, CatalogEntry, Expectation, Source};
pub use report::{ClaimRecord, Format, Status, VerificationReport};
pub use suites::{run_suite, RunOptions, Suite};
