//! Seeded random graphs and the empirical complexity experiments.
//!
//! All randomness comes from ChaCha12 seeded explicitly, so every graph,
//! record and counter is reproducible from its seed. Multi-trial runs
//! derive one substream per trial with [`trial_seed`], a splitmix64 hash
//! of the master seed, the vertex count and the trial index; trials are
//! therefore independent of execution order.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, GraphType, MixedGraph};
use crate::heads;
use crate::opcount::OpCounter;
use crate::projection;

/// Name of the generator backing all randomness here, recorded on every
/// [`BenchRecord`].
pub const RNG_NAME: &str = "chacha12";

/// How edges are sampled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeModel {
    /// Exactly `e` distinct pairs, uniform without replacement.
    FixedEdges { e: usize },
    /// Each pair independently with probability `r / n`.
    BernoulliSparse { r: f64 },
}

/// Configuration of one random ADMG draw.
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub n: usize,
    pub model: EdgeModel,
    /// Probability that a sampled edge is bidirected rather than directed.
    pub p_bidirected: f64,
    pub seed: u64,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// Deterministic per-trial substream seed.
pub fn trial_seed(master: u64, n: usize, trial: usize) -> u64 {
    splitmix64(master ^ splitmix64(n as u64) ^ splitmix64(trial as u64).rotate_left(17))
}

fn numeric_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Samples an ADMG with a fixed topological order `1 < 2 < ... < n`: pairs
/// are chosen by the edge model, and each chosen pair independently
/// becomes a bidirected edge with probability `p_bidirected`, otherwise a
/// directed edge respecting the order.
pub fn random_admg(cfg: &GenConfig) -> Result<MixedGraph> {
    if cfg.n == 0 {
        return Err(Error::InvalidConfig("n must be positive".into()));
    }
    if !(0.0..=1.0).contains(&cfg.p_bidirected) {
        return Err(Error::InvalidConfig(format!(
            "p_bidirected {} outside [0,1]",
            cfg.p_bidirected
        )));
    }
    let max_pairs = cfg.n * (cfg.n - 1) / 2;
    let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed);
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    match cfg.model {
        EdgeModel::FixedEdges { e } => {
            if e > max_pairs {
                return Err(Error::InvalidConfig(format!(
                    "e = {e} exceeds the {max_pairs} available pairs"
                )));
            }
            let mut all: Vec<(u32, u32)> = Vec::with_capacity(max_pairs);
            for i in 0..cfg.n as u32 {
                for j in i + 1..cfg.n as u32 {
                    all.push((i, j));
                }
            }
            all.shuffle(&mut rng);
            pairs.extend(all.into_iter().take(e));
            pairs.sort_unstable();
        }
        EdgeModel::BernoulliSparse { r } => {
            let p = r / cfg.n as f64;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidConfig(format!(
                    "edge probability r/n = {p} outside [0,1]"
                )));
            }
            for i in 0..cfg.n as u32 {
                for j in i + 1..cfg.n as u32 {
                    if rng.random::<f64>() < p {
                        pairs.push((i, j));
                    }
                }
            }
        }
    }
    let edges: Vec<(u32, u32, EdgeKind)> = pairs
        .into_iter()
        .map(|(i, j)| {
            let kind = if rng.random::<f64>() < cfg.p_bidirected {
                EdgeKind::Bidirected
            } else {
                EdgeKind::Directed
            };
            (i, j, kind)
        })
        .collect();
    MixedGraph::new(numeric_labels(cfg.n), edges, GraphType::Admg)
}

/// Samples a DAG on a fixed topological order with each edge `i -> j`
/// (`i < j`) present independently with probability `r / n`.
pub fn random_sparse_dag(n: usize, r: f64, seed: u64) -> Result<MixedGraph> {
    let g = random_admg(&GenConfig {
        n,
        model: EdgeModel::BernoulliSparse { r },
        p_bidirected: 0.0,
        seed,
    })?;
    MixedGraph::new(
        g.labels().to_vec(),
        g.edges().iter().map(|e| (e.u, e.v, e.kind)).collect(),
        GraphType::Dag,
    )
}

/// One row of the ancestor-count experiment: vertex position `i`
/// (1-based), Monte Carlo mean and standard error of the recursive
/// ancestor count of vertex `i`, and the closed form `(1 + r/n)^(i-1)`.
#[derive(Clone, Copy, Debug)]
pub struct AncestorRow {
    pub i: usize,
    pub mean: f64,
    pub std_error: f64,
    pub theory: f64,
}

/// The recursive ancestor count per vertex of a DAG whose vertex indices
/// are already in topological order: `A_v = 1 + sum of A_p over parents
/// p`. This counts the directed paths into `v` (including the trivial
/// one), so it includes `v` itself, upper-bounds the cardinality of the
/// ancestor set, and coincides with it whenever the ancestor sets of the
/// parents are disjoint — in particular on sparse graphs, which is what
/// makes its closed-form mean a usable bound.
fn ancestor_counts(g: &MixedGraph) -> Vec<f64> {
    let n = g.n();
    let mut counts = vec![0.0f64; n];
    for v in 0..n {
        counts[v] = 1.0
            + g.parents_of(v as u32)
                .iter()
                .map(|&p| counts[p as usize])
                .sum::<f64>();
    }
    counts
}

/// Monte Carlo estimate of the expected ancestor counts of every vertex in
/// the sparse-DAG model, against the closed form.
pub fn ancestor_expectation_experiment(
    n: usize,
    r: f64,
    trials: usize,
    seed: u64,
) -> Result<Vec<AncestorRow>> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be positive".into()));
    }
    let mut sum = vec![0.0f64; n];
    let mut sum_sq = vec![0.0f64; n];
    for t in 0..trials {
        let g = random_sparse_dag(n, r, trial_seed(seed, n, t))?;
        for (i, &count) in ancestor_counts(&g).iter().enumerate() {
            sum[i] += count;
            sum_sq[i] += count * count;
        }
    }
    let p = r / n as f64;
    Ok((0..n)
        .map(|i| {
            let mean = sum[i] / trials as f64;
            let var = (sum_sq[i] / trials as f64 - mean * mean).max(0.0);
            AncestorRow {
                i: i + 1,
                mean,
                std_error: (var / trials as f64).sqrt(),
                theory: (1.0 + p).powi(i as i32),
            }
        })
        .collect())
}

/// Exact expectation of the recursive ancestor count of vertex `i`
/// (1-based) in the sparse-DAG model, by enumerating every graph on the
/// first `i` vertices weighted by its probability. This is the
/// independent route against the closed form `(1 + r/n)^(i-1)`. Guarded
/// to 24 vertex pairs (`i <= 7`).
pub fn exact_mean_ancestors(n: usize, r: f64, i: usize) -> Result<f64> {
    if i == 0 || i > n {
        return Err(Error::InvalidConfig(format!("vertex {i} outside 1..={n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..i)
        .flat_map(|a| (a + 1..i).map(move |b| (a, b)))
        .collect();
    if pairs.len() > 24 {
        return Err(Error::GuardExceeded(format!(
            "exact enumeration over {} pairs",
            pairs.len()
        )));
    }
    let p = r / n as f64;
    // Neumaier-compensated sum; the identity is checked to 1e-12.
    let mut total = 0.0f64;
    let mut compensation = 0.0f64;
    for bits in 0u64..(1 << pairs.len()) {
        let mut weight = 1.0;
        let mut counts = vec![1.0f64; i];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if (bits >> k) & 1 == 1 {
                weight *= p;
                counts[b] += counts[a];
            } else {
                weight *= 1.0 - p;
            }
        }
        let term = weight * counts[i - 1];
        let sum = total + term;
        compensation += if total.abs() >= term.abs() {
            (total - sum) + term
        } else {
            (term - sum) + total
        };
        total = sum;
    }
    Ok(total + compensation)
}

/// One instrumented run of the fast parametrizing-set extraction.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub n: usize,
    /// Edge count of the MAG the extraction ran on.
    pub e: usize,
    pub seed: u64,
    pub ops: OpCounter,
    pub heads3: u64,
    pub wall_ms: f64,
    pub rng: &'static str,
}

impl BenchRecord {
    pub fn total_ops(&self) -> u64 {
        self.ops.total()
    }
}

/// Sweeps the fast extraction over random sparse ADMGs: for every `n`,
/// `trials` graphs with `edges_per_vertex * n` edges are sampled, each is
/// projected onto its Markov equivalent MAG, and the extraction runs on
/// the MAG under operation counting. One record per trial.
pub fn complexity_sweep(
    ns: &[usize],
    trials: usize,
    seed: u64,
    p_bidirected: f64,
    edges_per_vertex: usize,
) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::with_capacity(ns.len() * trials);
    for &n in ns {
        for t in 0..trials {
            let s = trial_seed(seed, n, t);
            let e = (edges_per_vertex * n).min(n * (n - 1) / 2);
            let admg = random_admg(&GenConfig {
                n,
                model: EdgeModel::FixedEdges { e },
                p_bidirected,
                seed: s,
            })?;
            let mag = projection::project_to_mag(&admg)?.mag;
            let start = Instant::now();
            let run = heads::s3_tilde_fast_unchecked(&mag);
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            out.push(BenchRecord {
                n,
                e: mag.edge_count(),
                seed: s,
                ops: run.ops,
                heads3: run.heads3,
                wall_ms,
                rng: RNG_NAME,
            });
        }
    }
    Ok(out)
}

/// CSV emission: `n,e,seed,total_ops,district_visits,tail_tests,heads3,wall_ms`.
pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("n,e,seed,total_ops,district_visits,tail_tests,heads3,wall_ms\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{:.3}\n",
            r.n,
            r.e,
            r.seed,
            r.total_ops(),
            r.ops.district_visits,
            r.ops.tail_tests,
            r.heads3,
            r.wall_ms
        ));
    }
    out
}

/// Mean total operations per distinct `n`, ascending.
pub fn mean_total_ops(records: &[BenchRecord]) -> Vec<(usize, f64)> {
    let mut ns: Vec<usize> = records.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    ns.into_iter()
        .map(|n| {
            let (sum, count) = records
                .iter()
                .filter(|r| r.n == n)
                .fold((0.0, 0usize), |(s, c), r| (s + r.total_ops() as f64, c + 1));
            (n, sum / count as f64)
        })
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(usize, f64)]) -> f64 {
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|&(x, _)| (x as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, y)| y.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// The graph family on which the fast extraction meets its worst-case
/// bound: a hub `w` bidirected to `n_v` sinks `v_i` and to `n_x` columns
/// `x_j -> z_j`, a bidirected chain `y_1 <-> ... <-> y_L` feeding every
/// sink, the chain's middle vertex feeding `w`, and the chain ends tied to
/// the columns (`y_1 <-> x_j`, `y_L <-> z_j`). Every `{v_i, w, z_j}` is a
/// head of size 3, so the district test fires for each of the
/// `n_v * n_x` combinations.
pub fn worst_case_family(n_v: usize, n_x: usize, l_y: usize) -> Result<MixedGraph> {
    if n_v == 0 || n_x == 0 || l_y == 0 {
        return Err(Error::InvalidConfig("family sizes must be positive".into()));
    }
    let mut labels = vec!["w".to_string()];
    labels.extend((1..=n_v).map(|i| format!("v{i}")));
    labels.extend((1..=n_x).map(|j| format!("x{j}")));
    labels.extend((1..=n_x).map(|j| format!("z{j}")));
    labels.extend((1..=l_y).map(|l| format!("y{l}")));

    let w = 0u32;
    let v = |i: usize| (1 + i) as u32; // i in 0..n_v
    let x = |j: usize| (1 + n_v + j) as u32;
    let z = |j: usize| (1 + n_v + n_x + j) as u32;
    let y = |l: usize| (1 + n_v + 2 * n_x + l) as u32;

    let mut edges: Vec<(u32, u32, EdgeKind)> = Vec::new();
    for i in 0..n_v {
        edges.push((w, v(i), EdgeKind::Bidirected));
    }
    for j in 0..n_x {
        edges.push((w, x(j), EdgeKind::Bidirected));
        edges.push((x(j), z(j), EdgeKind::Directed));
        edges.push((y(0), x(j), EdgeKind::Bidirected));
        edges.push((y(l_y - 1), z(j), EdgeKind::Bidirected));
    }
    for l in 0..l_y - 1 {
        edges.push((y(l), y(l + 1), EdgeKind::Bidirected));
    }
    for l in 0..l_y {
        for i in 0..n_v {
            edges.push((y(l), v(i), EdgeKind::Directed));
        }
    }
    let mid = l_y.div_ceil(2) - 1;
    edges.push((y(mid), w, EdgeKind::Directed));

    edges.sort_unstable();
    edges.dedup();
    MixedGraph::new(labels, edges, GraphType::Admg)
}
