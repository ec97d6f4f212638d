//! Distance-based invariants computed by repeated breadth-first search.
//!
//! Nothing here materializes an `n x n` distance table: each search keeps
//! O(n) scratch space and its contribution is folded into a
//! [`DistanceDistribution`] immediately.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNREACHED: u32 = u32::MAX;

/// Reusable breadth-first search scratch space.
#[derive(Debug, Clone)]
pub struct Bfs {
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Self {
            dist: vec![UNREACHED; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Runs a search from `source` and returns the distances, or
    /// [`Error::Disconnected`] if some vertex is unreachable.
    pub fn run(&mut self, g: &Graph, source: usize) -> Result<&[u32]> {
        let n = g.order();
        if source >= n {
            return Err(Error::VertexOutOfRange { vertex: source, n });
        }
        self.dist.clear();
        self.dist.resize(n, UNREACHED);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source as u32);
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head] as usize;
            head += 1;
            let next = self.dist[x] + 1;
            for &y in g.neighbors(x) {
                let slot = &mut self.dist[y as usize];
                if *slot == UNREACHED {
                    *slot = next;
                    self.queue.push(y);
                }
            }
        }
        if self.queue.len() != n {
            return Err(Error::Disconnected);
        }
        Ok(&self.dist)
    }

    /// Vertices in the order the last search visited them; distances along
    /// this order are non-decreasing.
    pub fn visit_order(&self) -> &[u32] {
        &self.queue
    }
}

/// Single-source distances from `source`.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    Bfs::new(g.order()).run(g, source).map(<[u32]>::to_vec)
}

/// Number of unordered vertex pairs at each distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceDistribution {
    n: usize,
    /// `counts[k - 1]` pairs at distance `k`; no trailing zeros.
    counts: Vec<u64>,
}

impl DistanceDistribution {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Pairs at distance exactly `k` (zero for `k = 0`).
    pub fn count(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// `(distance, pair count)` for every distance with at least one pair.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
    }

    pub fn pair_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn diameter(&self) -> usize {
        self.counts.len()
    }

    /// Σ k · counts\[k\].
    pub fn wiener_index(&self) -> u64 {
        self.iter().map(|(k, c)| k as u64 * c).sum()
    }
}

/// Ordered-pair counts indexed by distance, plus the plain distance sum of
/// each source, folded over a set of sources.
#[derive(Debug, Clone, Default)]
struct Accumulator {
    ordered: Vec<u64>,
    distance_sum: u64,
}

impl Accumulator {
    fn add_source(&mut self, dist: &[u32]) {
        for &k in dist {
            if k > 0 {
                let k = k as usize;
                if self.ordered.len() < k {
                    self.ordered.resize(k, 0);
                }
                self.ordered[k - 1] += 1;
                self.distance_sum += k as u64;
            }
        }
    }

    fn merge(mut self, other: Self) -> Self {
        let (mut long, short) = if self.ordered.len() >= other.ordered.len() {
            (std::mem::take(&mut self.ordered), other.ordered)
        } else {
            (other.ordered, std::mem::take(&mut self.ordered))
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Self {
            ordered: long,
            distance_sum: self.distance_sum + other.distance_sum,
        }
    }

    fn finish(self, n: usize) -> (DistanceDistribution, u64) {
        debug_assert!(self.ordered.iter().all(|c| c % 2 == 0));
        let counts = self.ordered.into_iter().map(|c| c / 2).collect();
        (DistanceDistribution { n, counts }, self.distance_sum / 2)
    }
}

fn require_vertices(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

fn accumulate_sequential(g: &Graph) -> Result<Accumulator> {
    require_vertices(g)?;
    let mut bfs = Bfs::new(g.order());
    let mut acc = Accumulator::default();
    for s in 0..g.order() {
        acc.add_source(bfs.run(g, s)?);
    }
    Ok(acc)
}

fn accumulate_parallel(g: &Graph) -> Result<Accumulator> {
    require_vertices(g)?;
    (0..g.order())
        .into_par_iter()
        .try_fold(
            || (Bfs::new(g.order()), Accumulator::default()),
            |(mut bfs, mut acc), s| {
                acc.add_source(bfs.run(g, s)?);
                Ok((bfs, acc))
            },
        )
        .map(|r| r.map(|(_, acc)| acc))
        .try_reduce(Accumulator::default, |a, b| Ok(a.merge(b)))
}

/// Exact distance distribution from one search per vertex.
pub fn distance_distribution(g: &Graph) -> Result<DistanceDistribution> {
    Ok(accumulate_sequential(g)?.finish(g.order()).0)
}

/// Same result as [`distance_distribution`], with the searches spread over
/// the current rayon thread pool.
pub fn distance_distribution_par(g: &Graph) -> Result<DistanceDistribution> {
    Ok(accumulate_parallel(g)?.finish(g.order()).0)
}

/// Wiener index: the sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    Ok(distance_distribution(g)?.wiener_index())
}

pub fn wiener_index_par(g: &Graph) -> Result<u64> {
    Ok(distance_distribution_par(g)?.wiener_index())
}

/// Wiener index as half the sum of per-source distance totals, without
/// going through the distribution.
pub fn wiener_index_by_sources(g: &Graph) -> Result<u64> {
    Ok(accumulate_sequential(g)?.finish(g.order()).1)
}

pub fn eccentricities(g: &Graph) -> Result<Vec<u32>> {
    require_vertices(g)?;
    let mut bfs = Bfs::new(g.order());
    (0..g.order())
        .map(|s| Ok(bfs.run(g, s)?.iter().copied().max().unwrap_or(0)))
        .collect()
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(eccentricities(g)?.into_iter().max().unwrap_or(0) as usize)
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut dist = vec![UNREACHED; n];
    let mut parent = vec![UNREACHED; n];
    let mut queue = Vec::with_capacity(n);
    let mut best: Option<usize> = None;
    for s in 0..n {
        dist.fill(UNREACHED);
        parent.fill(UNREACHED);
        queue.clear();
        dist[s] = 0;
        queue.push(s as u32);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head] as usize;
            head += 1;
            for &y in g.neighbors(x) {
                let y = y as usize;
                if dist[y] == UNREACHED {
                    dist[y] = dist[x] + 1;
                    parent[y] = x as u32;
                    queue.push(y as u32);
                } else if parent[x] != y as u32 {
                    let len = (dist[x] + dist[y] + 1) as usize;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// A shortest path realizing the diameter.
///
/// Among all pairs at distance `d`, the lexicographically smallest `(u, v)`
/// with `u < v` is chosen, and the path is rebuilt from `v` back to `u` by
/// always stepping to the smallest-index neighbour one level closer to `u`.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter(
            "diametral path needs at least two vertices".into(),
        ));
    }
    let d = diameter(g)? as u32;
    let mut bfs = Bfs::new(g.order());
    for u in 0..g.order() {
        let dist = bfs.run(g, u)?;
        let Some(v) = dist.iter().position(|&k| k == d) else {
            continue;
        };
        let mut path = Vec::with_capacity(d as usize + 1);
        let mut x = v;
        path.push(x);
        while x != u {
            let step = dist[x] - 1;
            x = g
                .neighbors(x)
                .iter()
                .map(|&y| y as usize)
                .find(|&y| dist[y] == step)
                .expect("BFS layer has a predecessor");
            path.push(x);
        }
        path.reverse();
        return Ok(path);
    }
    unreachable!("some vertex has eccentricity equal to the diameter")
}

/// Unordered pairs classified by how many endpoints lie on a diametral path:
/// both (`x`), neither (`y`), exactly one (`z`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametralPartition {
    pub path: Vec<usize>,
    pub x_size: u64,
    pub y_size: u64,
    pub z_size: u64,
}

impl DiametralPartition {
    pub fn diameter(&self) -> usize {
        self.path.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.x_size + self.y_size + self.z_size
    }
}

pub fn diametral_partition(g: &Graph) -> Result<DiametralPartition> {
    let path = diametral_path(g)?;
    let mut on_path = vec![false; g.order()];
    for &v in &path {
        on_path[v] = true;
    }
    let (mut x_size, mut y_size, mut z_size) = (0u64, 0u64, 0u64);
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            match (on_path[u], on_path[v]) {
                (true, true) => x_size += 1,
                (false, false) => y_size += 1,
                _ => z_size += 1,
            }
        }
    }
    Ok(DiametralPartition {
        path,
        x_size,
        y_size,
        z_size,
    })
}
