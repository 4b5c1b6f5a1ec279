//! Convergence sweeps over test functions, node families and node counts.

use std::collections::HashMap;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::library::load_library;
use crate::nodes::{chebyshev_ascending, chebyshev_leja, CandidatePool, Family, Interval, NodeSequence};
use crate::testbed::{measure, ErrorRecord, TestFunction};

/// Families a sweep can compare.
pub const SWEEP_FAMILIES: [Family; 3] = [
    Family::ChebyshevAscending,
    Family::ChebyshevLeja,
    Family::FastLeja,
];

/// `n = 2^k` for `k = 3..=14`.
pub fn default_degrees() -> Vec<usize> {
    (3..=14).map(|k| 1usize << k).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub functions: Vec<TestFunction>,
    pub families: Vec<Family>,
    /// Node counts, strictly increasing, each at least 2.
    pub degrees: Vec<usize>,
    pub interval: Interval,
    /// Stored Fast Leja nodes to use instead of building them.
    pub library: Option<PathBuf>,
    /// When false every `wall_time` is written as zero, making output byte-reproducible.
    pub record_timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            functions: TestFunction::ALL.to_vec(),
            families: vec![Family::ChebyshevLeja, Family::FastLeja],
            degrees: default_degrees(),
            interval: Interval::STANDARD,
            library: None,
            record_timing: true,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.functions.is_empty() {
            return Err(Error::invalid("sweep needs at least one function"));
        }
        if self.families.is_empty() {
            return Err(Error::invalid("sweep needs at least one node family"));
        }
        if let Some(f) = self.families.iter().find(|f| !SWEEP_FAMILIES.contains(f)) {
            return Err(Error::invalid(format!("family `{f}` cannot be swept")));
        }
        if self.degrees.is_empty() {
            return Err(Error::invalid("sweep needs at least one node count"));
        }
        if let Some(&n) = self.degrees.iter().find(|&&n| n < 2) {
            return Err(Error::invalid(format!("node counts must be >= 2, got {n}")));
        }
        if self.degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("node counts must be strictly increasing"));
        }
        Ok(())
    }

    fn max_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(2)
    }
}

fn unique<T: PartialEq + Copy>(items: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(items.len());
    for &item in items {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

/// Builds the node sets of one family for every node count in the sweep.
fn node_sets(config: &SweepConfig, family: Family) -> Result<Vec<NodeSequence>> {
    let interval = config.interval;
    match family {
        Family::FastLeja => {
            let max = config.max_degree();
            let full = match &config.library {
                Some(path) => load_library(path, max, interval)?,
                None => {
                    let mut pool = CandidatePool::new(interval);
                    pool.extend_to(max);
                    pool.selected()
                }
            };
            Ok(config.degrees.iter().map(|&n| full.prefix(n)).collect())
        }
        Family::ChebyshevLeja => config
            .degrees
            .par_iter()
            .map(|&n| chebyshev_leja(interval, n))
            .collect(),
        Family::ChebyshevAscending => config
            .degrees
            .par_iter()
            .map(|&n| chebyshev_ascending(interval, n))
            .collect(),
        other => Err(Error::invalid(format!("family `{other}` cannot be swept"))),
    }
}

/// Measures every (function, family, n) combination of `config`.
///
/// Records come back sorted by function, family and node count. Non-finite
/// norms from unstable configurations are kept as data.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<ErrorRecord>> {
    config.validate()?;
    let functions = unique(&config.functions);
    let families = unique(&config.families);

    let mut nodes: HashMap<Family, Vec<NodeSequence>> = HashMap::new();
    for &family in &families {
        nodes.insert(family, node_sets(config, family)?);
    }

    let mut tasks = Vec::new();
    for &function in &functions {
        for &family in &families {
            for seq in &nodes[&family] {
                tasks.push((function, seq));
            }
        }
    }
    let mut records = tasks
        .into_par_iter()
        .map(|(function, seq)| {
            let mut record = measure(function, seq)?;
            if !config.record_timing {
                record.wall_time = 0.0;
            }
            Ok(record)
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| {
        (a.function.name(), a.family.name(), a.n).cmp(&(b.function.name(), b.family.name(), b.n))
    });
    Ok(records)
}
