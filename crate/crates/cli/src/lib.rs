//! Sparse-graph sampler and claim verifier behind the `madsq` binary.

pub mod sampler;
pub mod verify;
