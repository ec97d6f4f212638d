//! Named graph families and random connected graphs.
//!
//! Labelings are canonical: paths use edges `(i, i+1)`, cycles close with
//! `(n-1, 0)`, stars have centre 0, and products index `(g, h)` as
//! `g * |V(H)| + h`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{self, GraphRng};

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!(
            "{what} needs parameter >= {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)).chain([(n - 1, 0)]))
}

/// `K_{1,m}`: centre 0 joined to leaves `1..=m`.
pub fn star(m: usize) -> Result<Graph> {
    at_least("star", m, 1)?;
    Graph::from_edge_list(m + 1, (1..=m).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph", n, 1)?;
    Graph::from_edge_list(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Cartesian product `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let index = |a: usize, b: usize| a * nh + b;
    let along_h = (0..g.order()).flat_map(|a| h.edges().map(move |(b, c)| (index(a, b), index(a, c))));
    let along_g = g
        .edges()
        .flat_map(|(a, c)| (0..nh).map(move |b| (index(a, b), index(c, b))));
    Graph::from_edge_list(g.order() * nh, along_h.chain(along_g).collect::<Vec<_>>())
        .expect("product indices are in range and loop-free")
}

/// The triangular prism `C3 □ K2`.
pub fn prism() -> Graph {
    cartesian_product(&cycle(3).expect("C3"), &complete(2).expect("K2"))
}

/// Kneser graph `K(n, k)`: the k-subsets of `{0..n}`, adjacent when disjoint.
/// Subsets are numbered in lexicographic order.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k || n > 64 {
        return Err(Error::InvalidParameter(format!(
            "Kneser graph K({n}, {k}) needs 1 <= k, 2k <= n <= 64"
        )));
    }
    let mut subsets: Vec<u64> = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn choose(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<u64>) {
        if chosen.len() == k {
            out.push(chosen.iter().fold(0u64, |acc, &e| acc | (1 << e)));
            return;
        }
        for e in start..n {
            chosen.push(e);
            choose(e + 1, n, k, chosen, out);
            chosen.pop();
        }
    }
    choose(0, n, k, &mut chosen, &mut subsets);
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(subsets.len(), edges)
}

/// The Petersen graph, built as `K(5, 2)`.
pub fn petersen() -> Graph {
    kneser(5, 2).expect("K(5, 2) parameters are valid")
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into the edges of
/// the labeled tree it encodes.
pub fn prufer_tree_edges(n: usize, seq: &[usize]) -> Result<Vec<(usize, usize)>> {
    if n < 2 || seq.len() != n - 2 || seq.iter().any(|&s| s >= n) {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence of length {} over order {n}",
            seq.len()
        )));
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    // Linear-time decoding: `ptr` scans for the smallest leaf; a vertex that
    // becomes a leaf below `ptr` is consumed immediately.
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Ok(edges)
}

/// Uniform random labeled tree plus every other pair independently with
/// probability `p`, drawn from `rng`.
///
/// Draw order: `n - 2` Prüfer entries, then one Bernoulli trial per non-tree
/// pair in lexicographic order. No trials are drawn when `p` is 0 or 1.
pub fn random_connected_with(n: usize, p: f64, rng: &mut GraphRng) -> Result<Graph> {
    at_least("random connected graph", n, 1)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if n == 1 {
        return Ok(Graph::empty(1));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let tree = Graph::from_edge_list(n, prufer_tree_edges(n, &seq)?)?;
    if p == 0.0 {
        return Ok(tree);
    }
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if tree.has_edge(u, v) {
                continue;
            }
            if p == 1.0 || rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

/// [`random_connected_with`] on stream 0 of `seed`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_connected_with(n, p, &mut rng::stream(seed, 0))
}
