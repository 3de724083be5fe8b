//! Command-line front end for bergman-kit: function descriptors, report
//! output and the verification suite runner.

pub mod function;
pub mod output;
pub mod suite;

pub use function::{parse_complex, FunctionSpec, ParseError};
pub use output::{Format, ReportWriter};
pub use suite::{run_check, run_suite, SuiteConfig, SuiteError, SuiteOutcome, CHECKS};
