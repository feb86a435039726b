//! Topology ingestion and the all-pairs shortest-path delay matrix.
//!
//! A [`Topology`] is a connected, undirected graph of switch nodes whose
//! edges carry one-way propagation latencies in milliseconds. Latencies are
//! either given explicitly or derived from node coordinates via
//! [`geo::geo_latency`]. Every other module consumes the [`DelayMatrix`]
//! computed here.

pub mod geo;
mod graphml;
mod json;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A switch location. Coordinates are optional when every incident edge
/// carries an explicit latency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    pub label: String,
    pub latitude: Option<f64>,
    pub longitude: Option<f64>,
}

impl Node {
    /// Both coordinates, when present.
    pub fn coordinates(&self) -> Option<(f64, f64)> {
        match (self.latitude, self.longitude) {
            (Some(lat), Some(lon)) => Some((lat, lon)),
            _ => None,
        }
    }
}

/// An undirected link with a one-way latency in milliseconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub latency_ms: f64,
}

/// A connected, undirected, latency-weighted graph.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct Topology {
    name: String,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    // adjacency sorted by neighbor id, so every traversal is deterministic
    adj: Vec<Vec<(usize, f64)>>,
}

impl Topology {
    /// Builds a topology from nodes and `(source, target, latency_ms)`
    /// triples, validating all structural invariants.
    ///
    /// Node ids must be dense `0..N`. Parallel edges collapse to the
    /// minimum-latency one; self-loops, negative or non-finite latencies,
    /// out-of-range coordinates and disconnected graphs are rejected.
    pub fn new(
        name: impl Into<String>,
        nodes: Vec<Node>,
        edges: Vec<(usize, usize, f64)>,
    ) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyTopology);
        }
        for (i, node) in nodes.iter().enumerate() {
            if node.id != i {
                return Err(Error::Parse(format!(
                    "node ids must be dense 0..N: position {i} has id {}",
                    node.id
                )));
            }
            if let Some(lat) = node.latitude {
                if !(-90.0..=90.0).contains(&lat) {
                    return Err(Error::Parse(format!("latitude {lat} out of range")));
                }
            }
            if let Some(lon) = node.longitude {
                if !(-180.0..=180.0).contains(&lon) {
                    return Err(Error::Parse(format!("longitude {lon} out of range")));
                }
            }
        }
        let n = nodes.len();
        let mut collapsed: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for (a, b, latency) in edges {
            if a >= n || b >= n {
                return Err(Error::Parse(format!(
                    "edge ({a},{b}) references unknown node"
                )));
            }
            if a == b {
                return Err(Error::Parse(format!("self-loop on node {a}")));
            }
            if !latency.is_finite() || latency < 0.0 {
                return Err(Error::Parse(format!(
                    "edge ({a},{b}) has invalid latency {latency}"
                )));
            }
            let key = (a.min(b), a.max(b));
            let entry = collapsed.entry(key).or_insert(latency);
            if latency < *entry {
                *entry = latency;
            }
        }
        let edges: Vec<Edge> = collapsed
            .into_iter()
            .map(|((source, target), latency_ms)| Edge {
                source,
                target,
                latency_ms,
            })
            .collect();

        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.source].push((e.target, e.latency_ms));
            adj[e.target].push((e.source, e.latency_ms));
        }
        for neighbors in &mut adj {
            neighbors.sort_by_key(|&(id, _)| id);
        }

        let topo = Topology {
            name: name.into(),
            nodes,
            edges,
            adj,
        };
        if let Some(unreachable) = topo.first_unreachable_from(0) {
            return Err(Error::Disconnected {
                root: 0,
                unreachable,
            });
        }
        Ok(topo)
    }

    /// A chain of `n` nodes with `n - 1` identical hops and no coordinates.
    pub fn linear(n: usize, hop_delay_ms: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "linear topology needs at least one node".into(),
            ));
        }
        if hop_delay_ms <= 0.0 || !hop_delay_ms.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "hop delay must be positive, got {hop_delay_ms}"
            )));
        }
        let nodes = (0..n)
            .map(|id| Node {
                id,
                label: format!("s{id}"),
                latitude: None,
                longitude: None,
            })
            .collect();
        let edges = (0..n.saturating_sub(1))
            .map(|i| (i, i + 1, hop_delay_ms))
            .collect();
        Self::new(format!("linear-{n}"), nodes, edges)
    }

    /// Loads a topology from a GraphML or JSON file, dispatching on the
    /// extension (content-sniffing as a fallback). `speed_km_per_ms` converts
    /// great-circle distances into latencies for edges without an explicit
    /// `latency_ms` attribute.
    pub fn load(path: impl AsRef<Path>, speed_km_per_ms: f64) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        match ext.to_ascii_lowercase().as_str() {
            "json" => Self::from_json_str(&text, speed_km_per_ms),
            "graphml" | "xml" => Self::from_graphml_str(&text, speed_km_per_ms),
            _ => {
                if text.trim_start().starts_with('{') {
                    Self::from_json_str(&text, speed_km_per_ms)
                } else {
                    Self::from_graphml_str(&text, speed_km_per_ms)
                }
            }
        }
    }

    /// Parses a Topology Zoo style GraphML document.
    pub fn from_graphml_str(xml: &str, speed_km_per_ms: f64) -> Result<Self> {
        graphml::parse(xml, speed_km_per_ms)
    }

    /// Parses the JSON topology format (fields mirroring [`Topology`]).
    pub fn from_json_str(text: &str, speed_km_per_ms: f64) -> Result<Self> {
        json::parse(text, speed_km_per_ms)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Neighbors of `u` with edge latencies, sorted by node id.
    pub fn neighbors(&self, u: usize) -> &[(usize, f64)] {
        &self.adj[u]
    }

    fn first_unreachable_from(&self, root: usize) -> Option<usize> {
        let n = self.nodes.len();
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            for &(v, _) in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// All-pairs one-way delays along shortest paths.
    ///
    /// Runs Floyd-Warshall to a fixpoint, so the returned matrix satisfies
    /// symmetry, zero diagonal and the triangle inequality exactly, not just
    /// up to rounding.
    pub fn delay_matrix(&self) -> DelayMatrix {
        let n = self.nodes.len();
        let mut d = vec![f64::INFINITY; n * n];
        for i in 0..n {
            d[i * n + i] = 0.0;
        }
        for e in &self.edges {
            d[e.source * n + e.target] = e.latency_ms;
            d[e.target * n + e.source] = e.latency_ms;
        }
        loop {
            let mut changed = false;
            for k in 0..n {
                for i in 0..n {
                    let dik = d[i * n + k];
                    if !dik.is_finite() {
                        continue;
                    }
                    for j in 0..n {
                        let via = dik + d[k * n + j];
                        if via < d[i * n + j] {
                            d[i * n + j] = via;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        debug_assert!(
            d.iter().all(|x| x.is_finite()),
            "connected graph has finite delays"
        );
        DelayMatrix { n, data: d }
    }

    /// The node sequence realizing `d[i][j]`, ties broken by preferring the
    /// smallest next-hop id at every step. Returns `[i]` when `i == j`.
    pub fn shortest_path_nodes(&self, d: &DelayMatrix, i: usize, j: usize) -> Vec<usize> {
        let n = self.nodes.len();
        assert!(i < n && j < n, "node id out of range");
        assert_eq!(d.node_count(), n, "matrix does not match topology");
        if i == j {
            return vec![i];
        }
        let mut visited = vec![false; n];
        visited[i] = true;
        let mut path = vec![i];
        let mut u = i;
        while u != j {
            match self.greedy_step(d, u, j, &visited) {
                Some(v) => {
                    visited[v] = true;
                    path.push(v);
                    u = v;
                }
                // Zero-latency plateaus can trap the greedy walk; rebuild the
                // whole path over tight edges instead.
                None => return self.tight_edge_path(d, i, j),
            }
        }
        path
    }

    /// First node after `i` on the tie-broken shortest path toward `j`.
    pub fn next_hop_toward(&self, d: &DelayMatrix, i: usize, j: usize) -> usize {
        assert_ne!(i, j, "no next hop from a node to itself");
        let mut visited = vec![false; self.nodes.len()];
        visited[i] = true;
        self.greedy_step(d, i, j, &visited)
            .unwrap_or_else(|| self.tight_edge_path(d, i, j)[1])
    }

    // Smallest-id unvisited neighbor v of u minimizing w(u,v) + d[v][j],
    // provided that minimum still realizes d[u][j].
    fn greedy_step(&self, d: &DelayMatrix, u: usize, j: usize, visited: &[bool]) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for &(v, w) in &self.adj[u] {
            if visited[v] {
                continue;
            }
            let s = w + d.delay(v, j);
            if best.is_none_or(|(_, b)| s < b) {
                best = Some((v, s));
            }
        }
        let (v, s) = best?;
        let remaining = d.delay(u, j);
        if s <= remaining + tie_tolerance(remaining) {
            Some(v)
        } else {
            None
        }
    }

    // Deterministic BFS over edges tight for the i -> j distance; used only
    // when the greedy walk dead-ends in a zero-latency plateau.
    fn tight_edge_path(&self, d: &DelayMatrix, i: usize, j: usize) -> Vec<usize> {
        let n = self.nodes.len();
        let total = d.delay(i, j);
        let tol = tie_tolerance(total);
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        parent[i] = i;
        queue.push_back(i);
        while let Some(u) = queue.pop_front() {
            if u == j {
                break;
            }
            for &(v, w) in &self.adj[u] {
                if parent[v] != usize::MAX {
                    continue;
                }
                if d.delay(i, u) + w + d.delay(v, j) <= total + tol {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        assert_ne!(
            parent[j],
            usize::MAX,
            "connected topology must yield a path"
        );
        let mut path = vec![j];
        let mut u = j;
        while u != i {
            u = parent[u];
            path.push(u);
        }
        path.reverse();
        path
    }
}

fn tie_tolerance(scale: f64) -> f64 {
    1e-12 * (1.0 + scale.abs())
}

/// All-pairs one-way shortest-path delays in milliseconds.
///
/// `delay(i, i) == 0`, the matrix is symmetric, every entry is finite and
/// non-negative and the triangle inequality holds for every triple.
#[derive(Debug, Clone, PartialEq)]
pub struct DelayMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DelayMatrix {
    /// Builds a matrix from explicit rows, validating all invariants
    /// (triangle inequality up to a 1e-9 slack).
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTopology);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidArgument("delay matrix must be square".into()));
            }
            data.extend_from_slice(row);
        }
        let m = DelayMatrix { n, data };
        for i in 0..n {
            if m.delay(i, i) != 0.0 {
                return Err(Error::InvalidArgument(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let v = m.delay(i, j);
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidArgument(format!(
                        "invalid delay d[{i}][{j}] = {v}"
                    )));
                }
                if m.delay(i, j) != m.delay(j, i) {
                    return Err(Error::InvalidArgument(format!("asymmetric at ({i},{j})")));
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if m.delay(i, j) > m.delay(i, k) + m.delay(k, j) + 1e-9 {
                        return Err(Error::InvalidArgument(format!(
                            "triangle inequality violated for ({i},{k},{j})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// One-way delay between nodes `i` and `j` in milliseconds.
    #[inline]
    pub fn delay(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Matrix rows, mostly useful for tests and exports.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }
}
