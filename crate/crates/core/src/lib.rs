pub mod detect;
pub mod error;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lb;
pub mod matching;
pub mod oracle;
pub mod pipeline;
pub mod potentials;
pub mod recover;

pub use error::{Error, Result};
