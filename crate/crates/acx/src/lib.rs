//! File formats, the example catalog, reports, the result cache and the
//! `acx` command line on top of `acx-core`.

pub mod cache;
pub mod catalog;
pub mod cli;
mod error;
pub mod manifest;
pub mod report;
pub mod syntax;

pub use error::AcxError;
pub use manifest::{Manifest, MetricSpec, Structure};
pub use report::{Format, Report};
