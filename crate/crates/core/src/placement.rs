//! Placement configurations and the two aggregate delay objectives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::DelayMatrix;

/// An ordered list of `C` distinct switch nodes hosting controllers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Placement {
    controllers: Vec<usize>,
}

impl Placement {
    /// Validates distinctness and range against a topology of `n` nodes.
    pub fn new(controllers: Vec<usize>, n: usize) -> Result<Self> {
        if controllers.is_empty() {
            return Err(Error::InvalidArgument(
                "placement needs at least one controller".into(),
            ));
        }
        if controllers.len() > n {
            return Err(Error::InvalidArgument(format!(
                "{} controllers cannot be placed on {n} nodes",
                controllers.len()
            )));
        }
        for (i, &c) in controllers.iter().enumerate() {
            if c >= n {
                return Err(Error::InvalidArgument(format!(
                    "controller node {c} out of range"
                )));
            }
            if controllers[..i].contains(&c) {
                return Err(Error::InvalidArgument(format!(
                    "two controllers cannot share switch {c}"
                )));
            }
        }
        Ok(Placement { controllers })
    }

    /// Controller locations, in placement order.
    pub fn controllers(&self) -> &[usize] {
        &self.controllers
    }

    /// Number of controllers `C`.
    pub fn len(&self) -> usize {
        self.controllers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.controllers.is_empty()
    }

    /// Node hosting controller `idx`.
    pub fn node_of(&self, idx: usize) -> usize {
        self.controllers[idx]
    }
}

/// Switch-to-master mapping: `master_of[switch]` is an index into the
/// placement, not a node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterAssignment {
    pub master_of: Vec<usize>,
}

/// The delay pair achieved by one placement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DelayPoint {
    pub sw_ctr_ms: f64,
    pub ctr_ctr_ms: f64,
    pub placement: Placement,
}

/// Maps every switch to the controller with the minimum switch-to-controller
/// delay, ties broken by the lowest controller index in the placement.
pub fn assign_masters(d: &DelayMatrix, p: &Placement) -> MasterAssignment {
    let n = d.node_count();
    let mut master_of = Vec::with_capacity(n);
    for sw in 0..n {
        let mut best = 0;
        let mut best_delay = d.delay(sw, p.node_of(0));
        for (idx, &node) in p.controllers().iter().enumerate().skip(1) {
            let delay = d.delay(sw, node);
            if delay < best_delay {
                best = idx;
                best_delay = delay;
            }
        }
        master_of.push(best);
    }
    MasterAssignment { master_of }
}

/// Mean over all switches of the delay to their master controller.
/// Switches hosting a controller contribute zero.
pub fn avg_sw_ctr_delay(d: &DelayMatrix, p: &Placement) -> f64 {
    let n = d.node_count();
    let mut sum = 0.0;
    for sw in 0..n {
        let mut best = f64::INFINITY;
        for &node in p.controllers() {
            let delay = d.delay(sw, node);
            if delay < best {
                best = delay;
            }
        }
        sum += best;
    }
    sum / n as f64
}

/// Mean delay over all unordered controller pairs; zero for a single
/// controller.
///
/// Pairs are summed in sorted-node order, so permuting the placement leaves
/// the value bit-identical.
pub fn avg_ctr_ctr_delay(d: &DelayMatrix, p: &Placement) -> f64 {
    let c = p.len();
    if c < 2 {
        return 0.0;
    }
    let mut nodes: Vec<usize> = p.controllers().to_vec();
    nodes.sort_unstable();
    let mut sum = 0.0;
    for a in 0..c {
        for b in (a + 1)..c {
            sum += d.delay(nodes[a], nodes[b]);
        }
    }
    sum / (c * (c - 1) / 2) as f64
}

/// Both aggregate delays for one placement.
pub fn evaluate(d: &DelayMatrix, p: &Placement) -> DelayPoint {
    DelayPoint {
        sw_ctr_ms: avg_sw_ctr_delay(d, p),
        ctr_ctr_ms: avg_ctr_ctr_delay(d, p),
        placement: p.clone(),
    }
}

/// Number of possible placements, the binomial coefficient C(n, c).
/// Saturates at `u128::MAX` instead of overflowing.
pub fn placement_count(n: usize, c: usize) -> Result<u128> {
    if c == 0 || c > n {
        return Err(Error::InvalidArgument(format!(
            "cannot choose {c} controllers out of {n} nodes"
        )));
    }
    let c = c.min(n - c);
    let mut result: u128 = 1;
    for i in 1..=c {
        // exact at every step: result * (n - c + i) is divisible by i
        let factor = (n - c + i) as u128;
        result = match result.checked_mul(factor) {
            Some(v) => v / i as u128,
            None => return Ok(u128::MAX),
        };
    }
    Ok(result)
}
