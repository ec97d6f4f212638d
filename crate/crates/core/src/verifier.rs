//! Bound verification sweeps and checks of the intermediate inequalities.
//!
//! Sweeps fold [`BoundReport`]s into a [`SweepAccumulator`]. Merging two
//! accumulators is associative and commutative (sums, min/max, and a
//! key-ordered capped example list), so a sweep split across any number of
//! workers yields the same [`SweepSummary`] as a sequential one.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{self, BoundReport};
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::metrics::{self, Bfs};
use crate::rng;

pub const DEFAULT_EXAMPLE_CAP: usize = 100;
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// Whether a sweep runs on the calling thread or on the rayon pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Aggregate outcome of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs_checked: u64,
    pub applicable: u64,
    pub violations: u64,
    pub tight_count: u64,
    pub min_gap: Option<i64>,
    pub max_gap: Option<i64>,
    pub tight_examples: Vec<String>,
    /// Inputs skipped because they are disconnected (or empty).
    pub disconnected: u64,
    /// Stream lines skipped in skip mode because they failed to parse.
    pub invalid: u64,
}

/// Mergeable partial sweep state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepAccumulator {
    cap: usize,
    graphs_checked: u64,
    applicable: u64,
    violations: u64,
    tight_count: u64,
    min_gap: Option<i64>,
    max_gap: Option<i64>,
    disconnected: u64,
    invalid: u64,
    /// `(ordering key, graph6)`, sorted by key, at most `cap` long.
    tight_examples: Vec<(u64, String)>,
}

impl SweepAccumulator {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            graphs_checked: 0,
            applicable: 0,
            violations: 0,
            tight_count: 0,
            min_gap: None,
            max_gap: None,
            disconnected: 0,
            invalid: 0,
            tight_examples: Vec::new(),
        }
    }

    /// Records one connected graph. `graph6` is only called for tight graphs
    /// that still fit in the example list.
    pub fn record(&mut self, key: u64, report: &BoundReport, graph6: impl FnOnce() -> String) {
        self.graphs_checked += 1;
        let Some(gap) = report.gap else {
            return;
        };
        self.applicable += 1;
        if gap < 0 {
            self.violations += 1;
        }
        self.min_gap = Some(self.min_gap.map_or(gap, |g| g.min(gap)));
        self.max_gap = Some(self.max_gap.map_or(gap, |g| g.max(gap)));
        if report.tight {
            self.tight_count += 1;
            let fits = self.tight_examples.len() < self.cap
                || self.tight_examples.last().is_some_and(|(k, _)| *k > key);
            if fits {
                let at = self.tight_examples.partition_point(|(k, _)| *k < key);
                self.tight_examples.insert(at, (key, graph6()));
                self.tight_examples.truncate(self.cap);
            }
        }
    }

    pub fn record_disconnected(&mut self) {
        self.graphs_checked += 1;
        self.disconnected += 1;
    }

    pub fn record_invalid(&mut self) {
        self.invalid += 1;
    }

    pub fn merge(mut self, other: Self) -> Self {
        let opt = |a: Option<i64>, b: Option<i64>, f: fn(i64, i64) -> i64| match (a, b) {
            (Some(x), Some(y)) => Some(f(x, y)),
            (x, None) => x,
            (None, y) => y,
        };
        self.graphs_checked += other.graphs_checked;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.tight_count += other.tight_count;
        self.disconnected += other.disconnected;
        self.invalid += other.invalid;
        self.min_gap = opt(self.min_gap, other.min_gap, i64::min);
        self.max_gap = opt(self.max_gap, other.max_gap, i64::max);
        self.cap = self.cap.min(other.cap);
        self.tight_examples.extend(other.tight_examples);
        self.tight_examples.sort();
        self.tight_examples.truncate(self.cap);
        self
    }

    pub fn finish(self) -> SweepSummary {
        SweepSummary {
            graphs_checked: self.graphs_checked,
            applicable: self.applicable,
            violations: self.violations,
            tight_count: self.tight_count,
            min_gap: self.min_gap,
            max_gap: self.max_gap,
            tight_examples: self.tight_examples.into_iter().map(|(_, s)| s).collect(),
            disconnected: self.disconnected,
            invalid: self.invalid,
        }
    }
}

fn sweep_range<F>(total: u64, execution: Execution, cap: usize, visit: F) -> Result<SweepAccumulator>
where
    F: Fn(&mut SweepAccumulator, u64) -> Result<()> + Sync,
{
    match execution {
        Execution::Sequential => {
            let mut acc = SweepAccumulator::new(cap);
            for i in 0..total {
                visit(&mut acc, i)?;
            }
            Ok(acc)
        }
        Execution::Parallel => (0..total)
            .into_par_iter()
            .try_fold(
                || SweepAccumulator::new(cap),
                |mut acc, i| {
                    visit(&mut acc, i)?;
                    Ok(acc)
                },
            )
            .try_reduce(|| SweepAccumulator::new(cap), |a, b| Ok(a.merge(b))),
    }
}

/// Labeled graph on `n <= 8` vertices whose edge set is the bitmask `mask`,
/// bit `k` standing for the `k`-th pair in graph6 order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, edges).expect("mask pairs are valid")
}

/// Wiener index and diameter of a mask graph via bitset BFS, or `None` if
/// disconnected.
fn mask_wiener_diameter(n: usize, mask: u64) -> Option<(u64, u64)> {
    let mut adj = [0u8; 8];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    let full: u8 = ((1u16 << n) - 1) as u8;
    let (mut total, mut diam) = (0u64, 0u64);
    for s in 0..n {
        let mut seen: u8 = 1 << s;
        let mut frontier = seen;
        let mut dist = 0u64;
        while seen != full {
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            dist += 1;
            total += dist * next.count_ones() as u64;
            seen |= next;
            frontier = next;
        }
        diam = diam.max(dist);
    }
    Some((total / 2, diam))
}

/// Checks every labeled graph on `n` vertices (`2^C(n,2)` edge subsets).
pub fn exhaustive_sweep(n: usize) -> Result<SweepSummary> {
    exhaustive_sweep_with(n, Execution::Parallel, DEFAULT_EXAMPLE_CAP)
}

pub fn exhaustive_sweep_with(n: usize, execution: Execution, cap: usize) -> Result<SweepSummary> {
    if !(2..=MAX_EXHAUSTIVE_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "exhaustive sweep supports 2 <= n <= {MAX_EXHAUSTIVE_ORDER}, got {n}"
        )));
    }
    let pairs = n * (n - 1) / 2;
    let acc = sweep_range(1u64 << pairs, execution, cap, |acc, mask| {
        match mask_wiener_diameter(n, mask) {
            None => acc.record_disconnected(),
            Some((wiener, d)) => {
                let m = mask.count_ones() as u64;
                let report = BoundReport::from_parts(n as u64, m, d, wiener)?;
                acc.record(mask, &report, || write_graph6(&graph_from_mask(n, mask)));
            }
        }
        Ok(())
    })?;
    Ok(acc.finish())
}

/// How [`stream_sweep`] treats lines that fail to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InvalidLines {
    #[default]
    Abort,
    Skip,
}

/// Sweeps a stream of graph6 lines. Blank lines are ignored; parse errors
/// abort with the 1-based line number unless `invalid` is `Skip`.
pub fn stream_sweep<I, S>(lines: I, invalid: InvalidLines, cap: usize) -> Result<SweepSummary>
where
    I: IntoIterator<Item = std::io::Result<S>>,
    S: AsRef<str>,
{
    let mut acc = SweepAccumulator::new(cap);
    for (idx, line) in lines.into_iter().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Graph6(format!("line {line_no}: read error: {e}")))?;
        let text = line.as_ref().trim();
        if text.is_empty() {
            continue;
        }
        let g = match parse_graph6(text) {
            Ok(g) => g,
            Err(e) => match invalid {
                InvalidLines::Abort => {
                    let detail = match e {
                        Error::Graph6(msg) => msg,
                        other => other.to_string(),
                    };
                    return Err(Error::Graph6(format!("line {line_no}: {detail}")));
                }
                InvalidLines::Skip => {
                    acc.record_invalid();
                    continue;
                }
            },
        };
        match bounds::evaluate(&g) {
            Ok(report) => acc.record(idx as u64, &report, || text.to_string()),
            Err(Error::Disconnected | Error::EmptyGraph) => acc.record_disconnected(),
            Err(e) => return Err(e),
        }
    }
    Ok(acc.finish())
}

/// Seeded corpus of random connected graphs of mixed order and density.
///
/// Graph `i` comes from generator stream `i + 1` of `seed`: first its order
/// (uniform in `min_order..=max_order`), then its extra-edge probability
/// `u^2` for `u` uniform in `[0, 1)` (skewed toward sparse graphs), then the
/// graph itself via [`generators::random_connected_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomCorpus {
    pub count: u64,
    pub min_order: usize,
    pub max_order: usize,
    pub seed: u64,
}

impl RandomCorpus {
    pub fn new(count: u64, min_order: usize, max_order: usize, seed: u64) -> Result<Self> {
        if min_order == 0 || min_order > max_order {
            return Err(Error::InvalidParameter(format!(
                "order range {min_order}..={max_order} is empty or contains 0"
            )));
        }
        Ok(Self {
            count,
            min_order,
            max_order,
            seed,
        })
    }

    pub fn graph(&self, index: u64) -> Graph {
        let mut r = rng::stream(self.seed, index + 1);
        let n = r.random_range(self.min_order..=self.max_order);
        let u: f64 = r.random();
        generators::random_connected_with(n, u * u, &mut r).expect("parameters validated")
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.count).map(|i| self.graph(i))
    }
}

pub fn random_sweep(corpus: &RandomCorpus, execution: Execution, cap: usize) -> Result<SweepSummary> {
    let acc = sweep_range(corpus.count, execution, cap, |acc, i| {
        let g = corpus.graph(i);
        let report = bounds::evaluate(&g)?;
        acc.record(i, &report, || write_graph6(&g));
        Ok(())
    })?;
    Ok(acc.finish())
}

/// Families named as attaining the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Star,
    Prism,
    Petersen,
}

impl Family {
    /// Instance for `param` (order for paths, leaf count for stars; ignored
    /// for the fixed graphs).
    pub fn instance(self, param: usize) -> Result<Graph> {
        match self {
            Family::Path => generators::path(param),
            Family::Star => generators::star(param),
            Family::Prism => Ok(generators::prism()),
            Family::Petersen => Ok(generators::petersen()),
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(self, Family::Path | Family::Star)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(Family::Path),
            "star" => Ok(Family::Star),
            "prism" => Ok(Family::Prism),
            "petersen" => Ok(Family::Petersen),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Prism => "prism",
            Family::Petersen => "petersen",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessEntry {
    pub family: Family,
    /// `None` for the fixed graphs.
    pub parameter: Option<usize>,
    pub graph6: String,
    pub report: BoundReport,
}

/// Evaluates every instance of `family` over `params` (a single instance for
/// the fixed graphs).
pub fn sharpness_scan(
    family: Family,
    params: std::ops::RangeInclusive<usize>,
) -> Result<Vec<SharpnessEntry>> {
    let params: Vec<Option<usize>> = if family.is_parametric() {
        params.map(Some).collect()
    } else {
        vec![None]
    };
    params
        .into_iter()
        .map(|p| {
            let g = family.instance(p.unwrap_or(0))?;
            Ok(SharpnessEntry {
                family,
                parameter: p,
                graph6: write_graph6(&g),
                report: bounds::evaluate(&g)?,
            })
        })
        .collect()
}

/// Diametral path plus BFS distances from each of its vertices.
struct PathDistances {
    path: Vec<usize>,
    on_path: Vec<bool>,
    from_path: Vec<Vec<u32>>,
}

impl PathDistances {
    fn new(g: &Graph, min_diameter: usize, what: &str) -> Result<Self> {
        let path = metrics::diametral_path(g)?;
        let d = path.len() - 1;
        if d < min_diameter {
            return Err(Error::NotApplicable(format!(
                "{what} needs diameter >= {min_diameter}, got {d}"
            )));
        }
        if path.len() == g.order() {
            return Err(Error::NotApplicable(format!(
                "{what}: every vertex lies on the diametral path"
            )));
        }
        let mut on_path = vec![false; g.order()];
        for &v in &path {
            on_path[v] = true;
        }
        let mut bfs = Bfs::new(g.order());
        let from_path = path
            .iter()
            .map(|&u| bfs.run(g, u).map(<[u32]>::to_vec))
            .collect::<Result<_>>()?;
        Ok(Self {
            path,
            on_path,
            from_path,
        })
    }

    fn off_path(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.on_path.len()).filter(|&w| !self.on_path[w])
    }
}

/// For the chosen diametral path `u_0 .. u_d` and every off-path vertex `w`:
/// `dist(u_i, w) + dist(w, u_{d-i}) >= d - 2i` for `0 <= i <= floor((d-3)/2)`.
pub fn triangle_property_check(g: &Graph) -> Result<bool> {
    let pd = PathDistances::new(g, 3, "triangle property check")?;
    let d = pd.path.len() - 1;
    let last = (d - 3) / 2;
    let holds = pd.off_path().all(|w| {
        (0..=last).all(|i| {
            let lhs = pd.from_path[i][w] as usize + pd.from_path[d - i][w] as usize;
            lhs >= d - 2 * i
        })
    });
    Ok(holds)
}

/// For every off-path vertex `w`, the surplus `Σ_i max(0, dist(u_i, w) - 2)`
/// over the diametral path is at least the per-vertex closed form.
pub fn off_path_excess_check(g: &Graph) -> Result<bool> {
    let pd = PathDistances::new(g, 2, "off-path surplus check")?;
    let d = (pd.path.len() - 1) as u64;
    let floor = bounds::z_excess_per_vertex(d)?;
    let holds = pd.off_path().all(|w| {
        let surplus: u64 = pd
            .from_path
            .iter()
            .map(|dist| (dist[w] as u64).saturating_sub(2))
            .sum();
        surplus >= floor
    });
    Ok(holds)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub n: u64,
    pub m: u64,
    /// `(d, bound)` for d = 2 ..= n - 1.
    pub values: Vec<(u64, u64)>,
    pub non_decreasing: bool,
    /// Diameters `d` where `bound(d) < bound(d - 1)`.
    pub decreases_at: Vec<u64>,
}

/// Evaluates the bound across every diameter `2..=n-1` for fixed `(n, m)`.
pub fn monotonicity_scan(n: u64, m: u64) -> Result<MonotonicityReport> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "monotonicity scan needs n >= 3, got {n}"
        )));
    }
    let values = (2..n)
        .map(|d| Ok((d, bounds::theorem1_bound(n, m, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let decreases_at: Vec<u64> = values
        .windows(2)
        .filter(|w| w[1].1 < w[0].1)
        .map(|w| w[1].0)
        .collect();
    Ok(MonotonicityReport {
        n,
        m,
        non_decreasing: decreases_at.is_empty(),
        values,
        decreases_at,
    })
}
