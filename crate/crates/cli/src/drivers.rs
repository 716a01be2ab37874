//! Parallel, optionally checkpointed drivers over the core routines.

use std::path::{Path, PathBuf};
use std::sync::Mutex;

use cubinv_core::coeffalgo::CoefficientEngine;
use cubinv_core::cubic::{CubicForm, DegreeSpec};
use cubinv_core::invariants::{invariants, IdentityChecks};
use cubinv_core::positivity::{
    cross_check_s, enumerate_s_types, evaluate_s_types, CanonicalType, PositivityReport, Target, TypeFilter, TypeValue,
};
use cubinv_core::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checkpoint::{lineage_digest, Checkpoint, Header, ShardLine, FORMAT};
use crate::error::{CliError, Result};
use crate::json::{sha256_hex, to_line};
use crate::pool;

pub const DEFAULT_SHARD_SIZE: usize = 16;

/// How a positivity run was assembled. Not part of the report, which must
/// not depend on it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lineage {
    pub checkpoint: Option<PathBuf>,
    pub total_shards: usize,
    pub resumed_shards: usize,
    pub computed_shards: usize,
    /// [`lineage_digest`] of all shards, when checkpointing.
    pub digest: Option<String>,
}

#[derive(Debug, Clone)]
pub struct PositivityOptions<'a> {
    pub filter: TypeFilter,
    pub workers: usize,
    pub shard_size: usize,
    pub checkpoint_dir: Option<&'a Path>,
    pub cross_check: bool,
}

/// Coefficients of `S` for every canonical type, sharded across the pool.
pub fn run_positivity(spec: &DegreeSpec, opts: &PositivityOptions) -> Result<(PositivityReport, Lineage)> {
    let types = enumerate_s_types(spec, opts.filter);
    let shard_size = opts.shard_size.max(1);
    let shards: Vec<&[CanonicalType]> = types.chunks(shard_size).collect();
    let mut lineage = Lineage { total_shards: shards.len(), ..Lineage::default() };

    let mut checkpoint = match opts.checkpoint_dir {
        Some(dir) => {
            let run_key =
                sha256_hex(to_line(&("positivity", spec.degrees(), opts.filter.no_full_powers, shard_size)).as_bytes());
            let header = Header { format: FORMAT.into(), run_key, n_types: types.len(), shard_size };
            Some(Checkpoint::open(dir, &header)?)
        }
        None => None,
    };

    let mut results: Vec<Option<Vec<TypeValue>>> = vec![None; shards.len()];
    if let Some(cp) = &checkpoint {
        lineage.checkpoint = Some(cp.path().to_path_buf());
        for (&i, line) in cp.completed() {
            let shard = shards.get(i).ok_or_else(|| CliError::Input(format!("checkpoint shard {i} out of range")))?;
            results[i] = Some(decode_shard(shard, line)?);
            lineage.resumed_shards += 1;
        }
    }

    let pending: Vec<usize> = (0..shards.len()).filter(|&i| results[i].is_none()).collect();
    lineage.computed_shards = pending.len();
    let sink = Mutex::new((&mut results, checkpoint.as_mut()));
    pool::install(opts.workers, || {
        pending.par_iter().try_for_each_init(
            || CoefficientEngine::new(*spec),
            |engine, &i| -> Result<()> {
                let values = evaluate_s_types(engine, shards[i])?;
                let mut guard = sink.lock().expect("result sink");
                if let Some(cp) = guard.1.as_mut() {
                    cp.append(encode_shard(i, &values))?;
                }
                guard.0[i] = Some(values);
                Ok(())
            },
        )
    })??;

    if let Some(cp) = &checkpoint {
        lineage.digest = Some(lineage_digest(cp.completed().values()));
    }
    let values: Vec<TypeValue> = results.into_iter().flat_map(|v| v.expect("every shard evaluated")).collect();
    let cross = if opts.cross_check { Some(cross_check_s(spec, &values, opts.filter)?) } else { None };
    let mut report = PositivityReport::assemble(*spec, Target::S, opts.filter, values);
    report.cross_check = cross;
    Ok((report, lineage))
}

fn encode_shard(i: usize, values: &[TypeValue]) -> ShardLine {
    ShardLine::new(i, values.iter().map(|tv| (tv.ty.to_string(), tv.value.to_string())).collect())
}

fn decode_shard(types: &[CanonicalType], line: &ShardLine) -> Result<Vec<TypeValue>> {
    let stale = || CliError::Input(format!("checkpoint shard {} does not match the enumerated types", line.shard));
    if line.values.len() != types.len() {
        return Err(stale());
    }
    types
        .iter()
        .zip(&line.values)
        .map(|(ty, (name, value))| {
            if ty.to_string() != *name {
                return Err(stale());
            }
            let value: BigInt = value.parse().map_err(|_| stale())?;
            Ok(TypeValue { ty: ty.clone(), value })
        })
        .collect()
}

/// A seeded integer cubic with normalised coefficients in `[-range, range]`.
pub fn random_cubics(seed: u64, count: usize, range: i64) -> Vec<CubicForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a: [i64; 10] = std::array::from_fn(|_| rng.gen_range(-range..=range));
            CubicForm::from_normalized_ints(&a)
        })
        .collect()
}

/// Runs every exact identity check on each cubic, in parallel, keeping the
/// input order.
pub fn check_identities(cubics: &[CubicForm], workers: usize) -> Result<Vec<IdentityChecks>> {
    pool::install(workers, || cubics.par_iter().map(|f| Ok(invariants(f)?.check_all())).collect::<Result<Vec<_>>>())?
}
