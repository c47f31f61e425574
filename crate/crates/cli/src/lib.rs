//! File formats, parallel drivers and the command line for
//! [`edgesquare_core`].
//!
//! - [`io`]: edge-list and graph6 reading and writing;
//! - [`builtin`]: graph arguments such as `p3`, `c5` or `doublestar:2,3`;
//! - [`text`] and [`records`]: text and json-lines output;
//! - [`parallel`]: rayon-backed face sweep and census;
//! - [`cli`]: the `edgesquare` subcommands.

pub mod builtin;
pub mod cli;
pub mod error;
pub mod io;
pub mod parallel;
pub mod records;
pub mod text;

pub use error::CliError;
