//! Formats, claim registry, verification reports and the CLI on top of
//! `splinekit-core`.

pub mod checks;
pub mod cli;
pub mod formats;
pub mod registry;
pub mod report;
