//! Sombor index toolkit for quasi-tree graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: immutable simple graphs, tree and quasi-tree recognition,
//!   small-graph canonical forms and the edge-list text format.
//! * [`sombor`]: the index itself, exact radical sums and the two-tier
//!   comparison policy.
//! * [`families`] and [`formulas`]: the extremal constructions and their
//!   closed-form values.
//! * [`transforms`]: degree-preserving swaps and edge rotations.
//! * [`oracle`]: brute-force enumeration and top-level ranking, used as the
//!   independent ground truth for every extremal claim.
//! * [`report`]: serialisable verification records shared with the CLI.

pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod sombor;
pub mod transforms;

pub use error::{Error, Result};
pub use families::{construct, Family, FamilySpec};
pub use formulas::{ClosedFormValue, FormulaId};
pub use graph::{canonical_form, CanonicalForm, Graph, QuasiTreeWitness, Vertex};
pub use oracle::{enumerate_rank, EnumerationTask, RankEntry, Universe};
pub use report::{ClaimId, DetailRecord, ReportDocument, Status, VerificationReport};
pub use sombor::{compare, sombor_index, ComparisonOutcome, RadicalSum, SomborValue};
