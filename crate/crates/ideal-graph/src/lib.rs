//! File-driven front end for `ideal-graph-core`: instance files, graph
//! exports and the commands behind the `ideal-graph` binary.

pub mod commands;
pub mod export;
pub mod instance;

pub use commands::{
    cmd_classify, cmd_corpus, cmd_graph, cmd_ideals, cmd_verify, CorpusReport, CorpusRow, Format, VerifyOutput, Which,
};
pub use instance::{load_instance, parse_instance, Instance, InstanceError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("{0}")]
    Algebra(#[from] ideal_graph_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
}
