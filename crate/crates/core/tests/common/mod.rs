//! Shared helpers for the integration suites: random instances and
//! independent oracles that deliberately avoid the library's own algorithms.

// each suite uses its own subset
#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;

use ctrplace::topology::{DelayMatrix, Node, Topology};
use ctrplace::{ClusterView, Placement};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/topologies")
}

pub fn load_fixture(name: &str) -> Topology {
    let path = data_dir().join(name);
    Topology::load(&path, 200.0)
        .unwrap_or_else(|e| panic!("fixture {} should load: {e}", path.display()))
}

pub fn bare_nodes(n: usize) -> Vec<Node> {
    (0..n)
        .map(|id| Node {
            id,
            label: format!("n{id}"),
            latitude: None,
            longitude: None,
        })
        .collect()
}

/// Random connected graph: a random tree plus a few extra edges. Weights are
/// continuous so distinct paths essentially never tie.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra_edges: usize) -> Topology {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v, rng.gen_range(0.1..20.0)));
    }
    for _ in 0..extra_edges {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a, b, rng.gen_range(0.1..20.0)));
        }
    }
    Topology::new(format!("random-{n}"), bare_nodes(n), edges).expect("tree core is connected")
}

/// Random tree only (unique paths), same weight style.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Topology {
    random_connected(rng, n, 0)
}

/// Independent all-pairs oracle: textbook Dijkstra per source, a different
/// algorithm from the Floyd-Warshall closure used by the library.
pub fn dijkstra_all_pairs(t: &Topology) -> Vec<Vec<f64>> {
    let n = t.node_count();
    let mut out = Vec::with_capacity(n);
    for src in 0..n {
        let mut dist = vec![f64::INFINITY; n];
        let mut done = vec![false; n];
        dist[src] = 0.0;
        for _ in 0..n {
            let mut u = usize::MAX;
            let mut best = f64::INFINITY;
            for v in 0..n {
                if !done[v] && dist[v] < best {
                    best = dist[v];
                    u = v;
                }
            }
            if u == usize::MAX {
                break;
            }
            done[u] = true;
            for &(v, w) in t.neighbors(u) {
                if dist[u] + w < dist[v] {
                    dist[v] = dist[u] + w;
                }
            }
        }
        out.push(dist);
    }
    out
}

/// Unique-path delay sum on a tree, via DFS.
pub fn tree_path_delay(t: &Topology, from: usize, to: usize) -> f64 {
    fn dfs(t: &Topology, at: usize, parent: usize, target: usize, acc: f64) -> Option<f64> {
        if at == target {
            return Some(acc);
        }
        for &(next, w) in t.neighbors(at) {
            if next != parent {
                if let Some(found) = dfs(t, next, at, target, acc + w) {
                    return Some(found);
                }
            }
        }
        None
    }
    dfs(t, from, usize::MAX, to, 0.0).expect("tree is connected")
}

/// Per-switch SDO reaction re-derived from scratch (no library calls beyond
/// the matrix): nearest controller by delay with lowest-index ties, explicit
/// leader round trip and majority wait.
pub fn sdo_reaction_oracle(d: &DelayMatrix, v: &ClusterView, switch: usize) -> f64 {
    let p = v.placement();
    let c = p.len();
    let mut master = 0;
    for idx in 1..c {
        if d.delay(switch, p.node_of(idx)) < d.delay(switch, p.node_of(master)) {
            master = idx;
        }
    }
    let leader_node = p.node_of(v.leader());
    let d_sw = d.delay(switch, p.node_of(master));
    let d_ml = if master == v.leader() {
        0.0
    } else {
        d.delay(p.node_of(master), leader_node)
    };
    let mut follower_delays: Vec<f64> = (0..c)
        .filter(|&i| i != v.leader())
        .map(|i| d.delay(leader_node, p.node_of(i)))
        .collect();
    follower_delays.sort_by(f64::total_cmp);
    let rank = v.majority_rule().follower_rank(c);
    let ack = if rank == 0 {
        0.0
    } else {
        follower_delays[rank - 1]
    };
    2.0 * d_sw + 2.0 * d_ml + 2.0 * ack
}

/// Random placement drawn by rejection, independent of the library's partial
/// shuffle.
pub fn random_placement_oracle(rng: &mut impl Rng, n: usize, c: usize) -> Placement {
    let mut picked: Vec<usize> = Vec::new();
    while picked.len() < c {
        let candidate = rng.gen_range(0..n);
        if !picked.contains(&candidate) {
            picked.push(candidate);
        }
    }
    Placement::new(picked, n).unwrap()
}
