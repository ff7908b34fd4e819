//! Library half of the walg binary.
//!
//! The algebra lives in walg-core; this crate adds the orchestration the
//! core deliberately avoids: argument validation, exact report rendering in
//! json / csv / text, and the aggregated verification suite shared between
//! the `verify-all` command and the acceptance tests.
//!
//! Exit-code contract of the binary:
//!
//! ```text
//! 0   the job ran and every mathematical check in it passed
//! 1   the job ran but a mathematical check failed
//! 2   the input was invalid (bad label, wrong rank, negative weight,
//!     zero gamma, order above a cap, malformed flags)
//! ```

pub mod report;
pub mod run;
pub mod verify;
