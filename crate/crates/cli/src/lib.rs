//! Library side of the `sp6` command: matrix files and the verification report.

pub mod matrix_io;
pub mod report;

pub use report::{run_verify, Claim, Status, VerificationReport, VerifyConfig};
