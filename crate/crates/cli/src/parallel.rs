//! Hochster enumeration split across a rayon pool.
//!
//! Subset masks are cut into contiguous chunks. Each chunk builds its own
//! partial table; reduced Betti numbers are shared through a concurrent memo.
//! Table addition is commutative, so the merged table does not depend on the
//! number of workers.

use dashmap::DashMap;
use polyloop_core::homology::{check_hochster_input, reduced_betti, BettiTable, DEFAULT_HOCHSTER_CEILING};
use polyloop_core::{ReducedBetti, SimplicialComplex};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};

/// Chunks handed to each worker; more than one keeps the pool balanced.
const CHUNKS_PER_JOB: u64 = 4;

pub fn hochster_parallel(k: &SimplicialComplex, jobs: usize) -> CliResult<BettiTable> {
    check_hochster_input(k, DEFAULT_HOCHSTER_CEILING)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Invalid(format!("cannot start {jobs} workers: {e}")))?;
    let m = k.ground_size();
    let total = 1u64 << m;
    let chunks = (jobs as u64 * CHUNKS_PER_JOB).clamp(1, total);
    let width = total.div_ceil(chunks);
    let memo: DashMap<SimplicialComplex, ReducedBetti> = DashMap::new();

    let partials: Vec<BettiTable> = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut table = BettiTable::new(m);
                for mask in c * width..((c + 1) * width).min(total) {
                    let sub = k.full_subcomplex_mask(mask);
                    let size = mask.count_ones() as usize;
                    let rb = match memo.get(&sub) {
                        Some(rb) => rb.clone(),
                        None => memo.entry(sub.clone()).or_insert_with(|| reduced_betti(&sub)).clone(),
                    };
                    table.add_subset(size, &rb);
                }
                table
            })
            .collect()
    });

    let mut table = BettiTable::new(m);
    for part in &partials {
        table.merge(part);
    }
    Ok(table)
}
