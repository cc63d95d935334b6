//! File formats, parallel table fills, JSON reports and the command-line
//! interface for `endokl-core`.

pub mod cachefile;
pub mod cli;
pub mod parallel;
pub mod report;
pub mod words;
