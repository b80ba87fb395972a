//! Chunk-parallel simulation.

use rayon::prelude::*;
use v2i_secrecy_core::analytic::SecrecyReport;
use v2i_secrecy_core::montecarlo::{reduce, run_chunk, ChunkStats, Coupling, McConfig, McModel};
use v2i_secrecy_core::Result;

/// Runs the chunks on the rayon pool and merges them in chunk order, so the
/// result is bit-identical to the sequential run.
pub fn parallel_simulate(model: &McModel, cfg: &McConfig) -> Result<SecrecyReport> {
    parallel_simulate_with(model, cfg, Coupling::Shared)
}

/// As [`parallel_simulate`] with an explicit coupling.
pub fn parallel_simulate_with(model: &McModel, cfg: &McConfig, coupling: Coupling) -> Result<SecrecyReport> {
    cfg.validate()?;
    let chunks: Vec<ChunkStats> =
        (0..cfg.chunk_count()).into_par_iter().map(|i| run_chunk(model, cfg, coupling, i)).collect();
    Ok(reduce(chunks))
}
