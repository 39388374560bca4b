//! Parallel evaluation of count plans, with the optional on-disk cache.

use std::path::Path;

use anyhow::{Context, Result};
use hyperlat_core::counting::{CountPlan, CountSeries, Provider};
use hyperlat_core::FormSpec;
use log::{info, warn};
use rayon::prelude::*;

use crate::cache;

const CHUNK: u64 = 1 << 14;

/// `N_t(Q, -k)` for `t <= T`, computed over `threads` workers (0 = all cores). The result
/// does not depend on the thread count.
pub fn count_parallel(form: &FormSpec, k: i64, t_max: u64, provider: Provider, threads: usize) -> Result<CountSeries> {
    let plan = CountPlan::new(form, k, t_max, provider)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().context("building thread pool")?;
    let chunks = plan.chunks(CHUNK);
    let parts = pool.install(|| {
        chunks.into_par_iter().map(|range| plan.contributions(range)).collect::<Result<Vec<_>, _>>()
    })?;
    Ok(plan.assemble(parts)?)
}

/// Like [`count_parallel`], reading and refreshing `cache_dir` when given.
pub fn count_cached(
    form: &FormSpec,
    k: i64,
    t_max: u64,
    provider: Provider,
    threads: usize,
    cache_dir: Option<&Path>,
) -> Result<CountSeries> {
    let Some(dir) = cache_dir else {
        return count_parallel(form, k, t_max, provider, threads);
    };
    let path = cache::path_for(dir, form, k, t_max);
    match cache::load(&path, form, k, t_max) {
        Ok(Some(series)) => {
            info!("loaded counts from {}", path.display());
            return Ok(series);
        }
        Ok(None) => {}
        Err(e) => warn!("ignoring corrupt cache {}: {e:#}; recomputing", path.display()),
    }
    let series = count_parallel(form, k, t_max, provider, threads)?;
    cache::write(&path, &series)?;
    Ok(series)
}
