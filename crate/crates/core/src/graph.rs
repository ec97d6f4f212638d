//! Immutable simple undirected graphs.
//!
//! Vertices are dense indices `0..n`. Edges are stored once, normalized as
//! `(u, v)` with `u < v` and sorted, alongside a compressed adjacency
//! (offsets + targets) used by the breadth-first searches in
//! [`crate::metrics`].

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Construction deduplicates edges and rejects self-loops; connectivity is
/// not required here; distance operations check it themselves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// Builds a graph from an arbitrary sequence of vertex pairs.
    ///
    /// Pairs may appear in either orientation and more than once; the result
    /// has set semantics.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::InvalidParameter(format!("order {n} exceeds u32 range")));
        }
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.push((a as u32, b as u32));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(n, edges))
    }

    /// `edges` must be sorted, deduplicated and satisfy `u < v < n`.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && (v as usize) < n));

        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0u32; 2 * edges.len()];
        // Edges are sorted by (u, v), so every adjacency list comes out sorted:
        // a vertex x first receives its smaller neighbours (as the `v` side of
        // edges with smaller `u`), then its larger ones in increasing order.
        for &(u, v) in &edges {
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for &(u, v) in &edges {
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
        }
        Self {
            n,
            edges,
            offsets,
            targets,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// True iff a search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        seen[0] = true;
        queue.push_back(0usize);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                let y = y as usize;
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(reached == self.n)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        Self::from_edge_list(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Self::from_edge_list(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    /// Edge-list text: a header line `n m` followed by one `u v` line per edge.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.size());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Streaming reader for concatenated edge-list graphs.
///
/// Each graph is a header `n m` followed by `m` lines `u v`. Blank lines and
/// lines starting with `#` are ignored between and within graphs. Errors carry
/// the 1-based line number.
pub struct EdgeListReader<I> {
    lines: I,
    line_no: usize,
}

impl<I, S> EdgeListReader<I>
where
    I: Iterator<Item = std::io::Result<S>>,
    S: AsRef<str>,
{
    pub fn new(lines: I) -> Self {
        Self { lines, line_no: 0 }
    }

    fn next_content_line(&mut self) -> Option<Result<(usize, Vec<usize>)>> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(Error::EdgeList(format!("read error: {e}")))),
            };
            self.line_no += 1;
            let text = line.as_ref().trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let fields: std::result::Result<Vec<usize>, _> =
                text.split_whitespace().map(str::parse::<usize>).collect();
            return Some(match fields {
                Ok(f) if f.len() == 2 => Ok((self.line_no, f)),
                _ => Err(Error::EdgeList(format!(
                    "line {}: expected two nonnegative integers, got {text:?}",
                    self.line_no
                ))),
            });
        }
    }
}

impl<I, S> Iterator for EdgeListReader<I>
where
    I: Iterator<Item = std::io::Result<S>>,
    S: AsRef<str>,
{
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        let (header_line, header) = match self.next_content_line()? {
            Ok(h) => h,
            Err(e) => return Some(Err(e)),
        };
        let (n, m) = (header[0], header[1]);
        let mut pairs = Vec::with_capacity(m.min(1 << 20));
        for _ in 0..m {
            match self.next_content_line() {
                Some(Ok((line, f))) => {
                    if f[0] >= n || f[1] >= n || f[0] == f[1] {
                        return Some(Err(Error::EdgeList(format!(
                            "line {line}: invalid edge {} {} for order {n}",
                            f[0], f[1]
                        ))));
                    }
                    pairs.push((f[0], f[1]));
                }
                Some(Err(e)) => return Some(Err(e)),
                None => {
                    return Some(Err(Error::EdgeList(format!(
                        "line {header_line}: header announces {m} edges, input ended after {}",
                        pairs.len()
                    ))))
                }
            }
        }
        Some(Graph::from_edge_list(n, pairs))
    }
}

/// Parses a single edge-list graph from text.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut reader = EdgeListReader::new(text.lines().map(Ok::<_, std::io::Error>));
    let g = reader
        .next()
        .ok_or_else(|| Error::EdgeList("no graph in input".into()))??;
    if reader.next().is_some() {
        return Err(Error::EdgeList("trailing content after graph".into()));
    }
    Ok(g)
}
