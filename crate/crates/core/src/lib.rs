pub mod error;
pub mod generators;
pub mod graph;
pub mod monitor;
pub mod solvers;
pub mod structural;
