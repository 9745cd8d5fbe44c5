use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{FVector, SimplicialComplex};
use crate::constructions::barycentric_subdivision;

use super::engine::{MorseEngine, Scratch};
use super::{MorseVector, Strategy};

/// Seed of run `index` under `master`: SplitMix64 applied to
/// `master + (index + 1) * 0x9E3779B97F4A7C15` (wrapping).
pub fn child_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramEntry {
    pub vector: MorseVector,
    pub count: u64,
}

/// Aggregated outcome of many seeded runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub strategy: Strategy,
    pub runs: u64,
    pub master_seed: u64,
    /// Distinct vectors in ascending order with their counts.
    pub histogram: Vec<HistogramEntry>,
    /// Mean number of critical faces per run.
    pub mean: f64,
    /// Observed vector with the fewest critical faces (ties: lexicographic).
    pub min_vector: MorseVector,
    /// Observed vector with the most critical faces (ties: lexicographic).
    pub max_vector: MorseVector,
    pub version: String,
}

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("a spectrum needs at least one run")]
    NoRuns,
    #[error("the complex is empty")]
    EmptyComplex,
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error("subdivision level {level} would have about {estimate} faces, above the limit {limit}")]
    SizeGuard { level: usize, estimate: u128, limit: u128 },
    #[error(transparent)]
    Complex(#[from] crate::error::ComplexError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl SpectrumReport {
    fn from_vectors(strategy: Strategy, master_seed: u64, vectors: &[MorseVector]) -> Self {
        let mut hist: BTreeMap<&MorseVector, u64> = BTreeMap::new();
        for v in vectors {
            *hist.entry(v).or_default() += 1;
        }
        let runs = vectors.len() as u64;
        let mean = vectors.iter().map(|v| v.total() as f64).sum::<f64>() / runs as f64;
        let min_vector = hist.keys().copied().min_by_key(|v| (v.total(), *v)).cloned().unwrap_or(MorseVector(vec![]));
        let max_vector = hist
            .keys()
            .copied()
            .max_by_key(|v| (v.total(), std::cmp::Reverse(*v)))
            .cloned()
            .unwrap_or(MorseVector(vec![]));
        SpectrumReport {
            strategy,
            runs,
            master_seed,
            histogram: hist.into_iter().map(|(v, c)| HistogramEntry { vector: v.clone(), count: c }).collect(),
            mean,
            min_vector,
            max_vector,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Number of runs that produced `v`.
    pub fn count_of(&self, v: &[u64]) -> u64 {
        self.histogram.iter().find(|e| e.vector.0 == v).map_or(0, |e| e.count)
    }

    /// Fraction of runs that produced `v`.
    pub fn share_of(&self, v: &[u64]) -> f64 {
        self.count_of(v) as f64 / self.runs as f64
    }

    /// Most frequent vector (ties: smallest).
    pub fn mode(&self) -> Option<&MorseVector> {
        self.histogram.iter().max_by_key(|e| (e.count, std::cmp::Reverse(&e.vector))).map(|e| &e.vector)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One CSV row per distinct vector: `vector,total,count,share`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), SpectrumError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["vector", "total", "count", "share"])?;
        for e in &self.histogram {
            w.write_record([
                e.vector.to_string(),
                e.vector.total().to_string(),
                e.count.to_string(),
                format!("{:.6}", e.count as f64 / self.runs as f64),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "strategy {}  runs {}  master seed {}  version {}\n",
            self.strategy, self.runs, self.master_seed, self.version
        );
        for e in &self.histogram {
            s.push_str(&format!("{:>24}  {:>8}\n", e.vector.to_string(), e.count));
        }
        s.push_str(&format!("mean {:.4}  min {}  max {}\n", self.mean, self.min_vector, self.max_vector));
        s
    }
}

/// Runs `runs` deconstructions with seeds `child_seed(master_seed, i)`.
/// The report does not depend on the number of workers.
pub fn spectrum_with_engine(
    engine: &MorseEngine<'_>,
    strategy: Strategy,
    runs: u64,
    master_seed: u64,
    workers: usize,
) -> Result<SpectrumReport, SpectrumError> {
    if runs == 0 {
        return Err(SpectrumError::NoRuns);
    }
    if engine.complex().is_empty() {
        return Err(SpectrumError::EmptyComplex);
    }
    let job = || -> Vec<MorseVector> {
        (0..runs)
            .into_par_iter()
            .map_init(Scratch::default, |s, i| engine.vector(strategy, child_seed(master_seed, i), s))
            .collect()
    };
    let vectors = if workers == 1 {
        let mut s = Scratch::default();
        (0..runs).map(|i| engine.vector(strategy, child_seed(master_seed, i), &mut s)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| SpectrumError::Pool(e.to_string()))?;
        pool.install(job)
    };
    Ok(SpectrumReport::from_vectors(strategy, master_seed, &vectors))
}

/// [`spectrum_with_engine`] on a fresh engine. `workers = 0` uses all
/// available cores.
pub fn spectrum(
    k: &SimplicialComplex,
    strategy: Strategy,
    runs: u64,
    master_seed: u64,
    workers: usize,
) -> Result<SpectrumReport, SpectrumError> {
    spectrum_with_engine(&MorseEngine::new(k), strategy, runs, master_seed, workers)
}

/// Exact f-vector of `sd K` from the f-vector of `K`: a `j`-face
/// contributes `(m+1)! S(j+1, m+1)` faces of dimension `m`.
pub fn estimate_sd_f_vector(f: &[u64]) -> Vec<u128> {
    let n = f.len();
    // ordered set partitions of an (j+1)-set into (m+1) blocks
    let mut stirling = vec![vec![0u128; n + 1]; n + 1];
    stirling[0][0] = 1;
    for a in 1..=n {
        for b in 1..=a {
            stirling[a][b] = b as u128 * stirling[a - 1][b] + stirling[a - 1][b - 1];
        }
    }
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    (0..n)
        .map(|m| (m..n).map(|j| f[j] as u128 * fact(m + 1) * stirling[j + 1][m + 1]).sum())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthLevel {
    pub level: usize,
    pub f_vector: FVector,
    pub report: SpectrumReport,
}

/// Spectra of `K, sd K, …, sd^ℓ K`. Report only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub levels: Vec<GrowthLevel>,
}

/// Runs a spectrum on each iterated barycentric subdivision up to
/// `max_level`, refusing to build a level whose face count would exceed
/// `size_limit`.
pub fn sd_growth_experiment(
    k: &SimplicialComplex,
    max_level: usize,
    strategy: Strategy,
    runs: u64,
    master_seed: u64,
    size_limit: u128,
) -> Result<GrowthReport, SpectrumError> {
    let mut f = k.f_vector().0.iter().map(|&x| x as u128).collect::<Vec<_>>();
    for level in 0..=max_level {
        let estimate: u128 = f.iter().sum();
        if estimate > size_limit {
            return Err(SpectrumError::SizeGuard { level, estimate, limit: size_limit });
        }
        let as_u64: Vec<u64> = f.iter().map(|&x| x.min(u64::MAX as u128) as u64).collect();
        f = estimate_sd_f_vector(&as_u64);
    }
    let mut levels = Vec::with_capacity(max_level + 1);
    let mut cur = k.clone();
    for level in 0..=max_level {
        if level > 0 {
            cur = barycentric_subdivision(&cur, 1)?;
        }
        let report = spectrum(&cur, strategy, runs, child_seed(master_seed, u64::MAX - level as u64), 0)?;
        levels.push(GrowthLevel { level, f_vector: cur.f_vector(), report });
    }
    Ok(GrowthReport { levels })
}
