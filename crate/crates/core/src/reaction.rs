//! Closed-form reactivity models for the two data-ownership schemes.
//!
//! Under multiple data-ownership (MDO) every controller works on a local
//! copy, so a switch only pays the round trip to its master. Under single
//! data-ownership (SDO, the Raft-style scheme used by mainstream controller
//! clusters) every update detours through the shard leader and waits for the
//! majority acknowledgement, so inter-controller delays enter the reaction
//! time perceived at the switch.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::placement::{assign_masters, MasterAssignment, Placement};
use crate::topology::{DelayMatrix, Node, Topology};

/// Controller computation time per update measured on the testbed, in ms.
pub const DEFAULT_COMPUTE_MS: f64 = 20.0;

/// Which follower acknowledgement commits an update.
///
/// `Paper` waits for the floor(C/2)+1-th closest follower (capped at the
/// follower count); `Raft` waits for the floor(C/2)-th, the cluster-majority
/// count with the leader included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MajorityRule {
    #[default]
    Paper,
    Raft,
}

impl MajorityRule {
    /// How many follower acknowledgements the leader waits for in a cluster
    /// of `c` controllers.
    pub fn follower_rank(self, c: usize) -> usize {
        match self {
            MajorityRule::Paper => (c / 2 + 1).min(c.saturating_sub(1)),
            MajorityRule::Raft => c / 2,
        }
    }
}

impl FromStr for MajorityRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(MajorityRule::Paper),
            "raft" => Ok(MajorityRule::Raft),
            other => Err(Error::InvalidArgument(format!(
                "unknown majority rule '{other}'"
            ))),
        }
    }
}

/// A placement with a designated data owner (leader) and the switch-to-master
/// mapping, plus the majority rule used for commit waits.
#[derive(Debug, Clone)]
pub struct ClusterView {
    placement: Placement,
    leader: usize,
    masters: MasterAssignment,
    majority_rule: MajorityRule,
}

impl ClusterView {
    pub fn new(d: &DelayMatrix, placement: Placement, leader: usize) -> Result<Self> {
        if leader >= placement.len() {
            return Err(Error::InvalidArgument(format!(
                "leader index {leader} out of range for {} controllers",
                placement.len()
            )));
        }
        let masters = assign_masters(d, &placement);
        Ok(ClusterView {
            placement,
            leader,
            masters,
            majority_rule: MajorityRule::default(),
        })
    }

    pub fn with_majority_rule(mut self, rule: MajorityRule) -> Self {
        self.majority_rule = rule;
        self
    }

    /// Same placement, different data owner.
    pub fn with_leader(&self, leader: usize) -> Result<Self> {
        if leader >= self.placement.len() {
            return Err(Error::InvalidArgument(format!(
                "leader index {leader} out of range"
            )));
        }
        Ok(ClusterView {
            leader,
            ..self.clone()
        })
    }

    pub fn placement(&self) -> &Placement {
        &self.placement
    }

    pub fn leader(&self) -> usize {
        self.leader
    }

    pub fn leader_node(&self) -> usize {
        self.placement.node_of(self.leader)
    }

    pub fn masters(&self) -> &MasterAssignment {
        &self.masters
    }

    pub fn majority_rule(&self) -> MajorityRule {
        self.majority_rule
    }

    /// Node hosting the master controller of `switch`.
    pub fn master_node_of(&self, switch: usize) -> usize {
        self.placement.node_of(self.masters.master_of[switch])
    }
}

/// Reaction time perceived at a switch under MDO: one round trip to the
/// master, everything else is asynchronous.
pub fn mdo_reaction(d_sw_ctr: f64) -> f64 {
    assert!(
        d_sw_ctr >= 0.0,
        "switch-to-controller delay must be non-negative"
    );
    2.0 * d_sw_ctr
}

/// Delay from the leader to the follower whose acknowledgement commits an
/// update: followers sorted by delay ascending, indexed per the majority
/// rule. Zero for a single-controller cluster.
pub fn majority_ack_delay(d: &DelayMatrix, v: &ClusterView) -> f64 {
    let c = v.placement.len();
    let rank = v.majority_rule.follower_rank(c);
    if rank == 0 {
        return 0.0;
    }
    let leader_node = v.leader_node();
    let mut delays: Vec<f64> = v
        .placement
        .controllers()
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != v.leader)
        .map(|(_, &node)| d.delay(leader_node, node))
        .collect();
    delays.sort_by(f64::total_cmp);
    delays[rank - 1]
}

/// Reaction time perceived at `switch` under SDO: round trips to the master,
/// from the master to the leader (zero when the master is the leader) and
/// for the majority acknowledgement.
pub fn sdo_reaction(d: &DelayMatrix, v: &ClusterView, switch: usize) -> f64 {
    sdo_reaction_with_ack(d, v, switch, majority_ack_delay(d, v))
}

fn sdo_reaction_with_ack(d: &DelayMatrix, v: &ClusterView, switch: usize, ack: f64) -> f64 {
    let master_idx = v.masters.master_of[switch];
    let master_node = v.placement.node_of(master_idx);
    let d_sw_ctr = d.delay(switch, master_node);
    let d_ctr_leader = if master_idx == v.leader {
        0.0
    } else {
        d.delay(master_node, v.leader_node())
    };
    2.0 * d_sw_ctr + 2.0 * d_ctr_leader + 2.0 * ack
}

/// Mean SDO reaction time over all switches.
pub fn avg_sdo_reaction(d: &DelayMatrix, v: &ClusterView) -> f64 {
    let ack = majority_ack_delay(d, v);
    let n = d.node_count();
    (0..n)
        .map(|sw| sdo_reaction_with_ack(d, v, sw, ack))
        .sum::<f64>()
        / n as f64
}

/// Per-owner SDO averages for one placement.
#[derive(Debug, Clone)]
pub struct OwnerSweep {
    /// `avg_sdo_reaction` with the leader at each controller index.
    pub per_owner_ms: Vec<f64>,
    /// argmin of `per_owner_ms`, lowest index on ties.
    pub optimal_owner: usize,
    /// second-best over best of the sorted per-owner values.
    pub min_reduction_factor: f64,
    /// worst over best of the sorted per-owner values.
    pub max_reduction_factor: f64,
}

/// Evaluates every choice of data owner for `p` and the reduction factors
/// gained by picking the best one.
pub fn owner_sweep(d: &DelayMatrix, p: &Placement) -> Result<OwnerSweep> {
    owner_sweep_with_rule(d, p, MajorityRule::default())
}

/// [`owner_sweep`] under an explicit majority rule.
pub fn owner_sweep_with_rule(
    d: &DelayMatrix,
    p: &Placement,
    rule: MajorityRule,
) -> Result<OwnerSweep> {
    let base = ClusterView::new(d, p.clone(), 0)?.with_majority_rule(rule);
    let per_owner_ms: Vec<f64> = (0..p.len())
        .map(|leader| avg_sdo_reaction(d, &base.with_leader(leader).expect("leader in range")))
        .collect();
    let mut sorted = per_owner_ms.clone();
    sorted.sort_by(f64::total_cmp);
    let best = sorted[0];
    let ratio = |x: f64| {
        if best == 0.0 {
            if x == 0.0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            x / best
        }
    };
    let min_reduction_factor = if sorted.len() > 1 {
        ratio(sorted[1])
    } else {
        1.0
    };
    let max_reduction_factor = ratio(*sorted.last().expect("at least one owner"));
    let optimal_owner = per_owner_ms
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(idx, _)| idx)
        .expect("at least one owner");
    Ok(OwnerSweep {
        per_owner_ms,
        optimal_owner,
        min_reduction_factor,
        max_reduction_factor,
    })
}

/// The switch path of one flow, with the destination switch repeated once at
/// the end (it handles both the ARP request and the ARP reply), plus the
/// host attachment delays and the per-update controller computation time.
#[derive(Debug, Clone)]
pub struct FlowScenario {
    path: Vec<usize>,
    host_edge_delays: (f64, f64),
    t_c: f64,
}

impl FlowScenario {
    pub fn new(path: Vec<usize>, host_edge_delays: (f64, f64), t_c: f64) -> Result<Self> {
        if path.is_empty() {
            return Err(Error::InvalidArgument("flow path is empty".into()));
        }
        if path.len() < 2 || path[path.len() - 1] != path[path.len() - 2] {
            return Err(Error::InvalidArgument(
                "flow path must repeat the destination switch once at the end".into(),
            ));
        }
        if host_edge_delays.0 < 0.0 || host_edge_delays.1 < 0.0 {
            return Err(Error::InvalidArgument(
                "host edge delays must be non-negative".into(),
            ));
        }
        if t_c < 0.0 {
            return Err(Error::InvalidArgument(
                "controller compute time must be non-negative".into(),
            ));
        }
        Ok(FlowScenario {
            path,
            host_edge_delays,
            t_c,
        })
    }

    /// Builds the scenario for the shortest route between two switches,
    /// hosts attached with zero delay.
    pub fn along_shortest_path(
        t: &Topology,
        d: &DelayMatrix,
        src: usize,
        dst: usize,
        t_c: f64,
    ) -> Result<Self> {
        if src == dst {
            return Err(Error::InvalidArgument(
                "flow source and destination switches must differ".into(),
            ));
        }
        let mut path = t.shortest_path_nodes(d, src, dst);
        let last = *path.last().expect("path is non-empty");
        path.push(last);
        Self::new(path, (0.0, 0.0), t_c)
    }

    /// Switch list, destination repeated once at the end.
    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Number of updates |P| triggered by the flow.
    pub fn update_count(&self) -> usize {
        self.path.len()
    }

    pub fn host_edge_delays(&self) -> (f64, f64) {
        self.host_edge_delays
    }

    pub fn t_c(&self) -> f64 {
        self.t_c
    }
}

/// Flow setup time (ARP reaction time) for the layer-2 learning application:
/// two host-to-host traversals plus, per update, the master round trip, the
/// leader round trip, the majority acknowledgement wait and the controller
/// computation time.
pub fn arp_setup_time(d: &DelayMatrix, v: &ClusterView, s: &FlowScenario) -> f64 {
    let ack = majority_ack_delay(d, v);
    let updates = s.path.len() as f64;

    let mut host_to_host = s.host_edge_delays.0 + s.host_edge_delays.1;
    for w in s.path.windows(2) {
        host_to_host += d.delay(w[0], w[1]);
    }

    let mut per_switch = 0.0;
    for &sw in &s.path {
        let master_idx = v.masters.master_of[sw];
        let master_node = v.placement.node_of(master_idx);
        let d_ctr_leader = if master_idx == v.leader {
            0.0
        } else {
            d.delay(master_node, v.leader_node())
        };
        per_switch += 2.0 * d.delay(sw, master_node) + 2.0 * d_ctr_leader;
    }

    2.0 * host_to_host + per_switch + 2.0 * updates * ack + updates * s.t_c
}

/// The five measured deployment scenarios: controllers and the emulated
/// network spread over Turin, Milan and Pisa ("close"/"far" meaning the
/// switches are co-located with their master or not).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// everything in Turin
    TT,
    /// network + master in Turin, leader in Milan
    TMC,
    /// network in Turin, all controllers in Milan
    TMF,
    /// network + master in Turin, leader in Pisa
    TPC,
    /// network in Turin, all controllers in Pisa
    TPF,
}

impl Scenario {
    pub const ALL: [Scenario; 5] = [
        Scenario::TT,
        Scenario::TMC,
        Scenario::TMF,
        Scenario::TPC,
        Scenario::TPF,
    ];

    /// Measured one-way input delays `(d_sw_ctr, d_ctr_ctr)` in ms.
    pub fn input_delays(self) -> (f64, f64) {
        match self {
            Scenario::TT => (0.25, 0.25),
            Scenario::TMC => (0.25, 2.0),
            Scenario::TMF => (2.0, 0.25),
            Scenario::TPC => (0.25, 66.0),
            Scenario::TPF => (66.0, 0.25),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scenario::TT => "TT",
            Scenario::TMC => "TMC",
            Scenario::TMF => "TMF",
            Scenario::TPC => "TPC",
            Scenario::TPF => "TPF",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "TT" => Ok(Scenario::TT),
            "TMC" => Ok(Scenario::TMC),
            "TMF" => Ok(Scenario::TMF),
            "TPC" => Ok(Scenario::TPC),
            "TPF" => Ok(Scenario::TPF),
            other => Err(Error::InvalidArgument(format!(
                "unknown scenario '{other}'"
            ))),
        }
    }
}

/// Everything needed to evaluate one scenario analytically or by simulation.
#[derive(Debug)]
pub struct ScenarioSetup {
    pub topology: Topology,
    pub matrix: DelayMatrix,
    pub view: ClusterView,
    pub flow: FlowScenario,
    pub src: usize,
    pub dst: usize,
}

/// Builds the emulated linear network of `n_sw` switches plus the three
/// controller sites of the scenario. Intra-network hops and host edges carry
/// zero delay (the VM-to-VM links account for all latency), so the model is
/// driven purely by the measured input delays.
pub fn scenario_setup(s: Scenario, n_sw: usize, t_c: f64) -> Result<ScenarioSetup> {
    if !(3..=36).contains(&n_sw) {
        return Err(Error::InvalidArgument(format!(
            "scenario network size must be within [3, 36], got {n_sw}"
        )));
    }
    let (d_sw_ctr, d_ctr_ctr) = s.input_delays();
    // VM-to-VM delay on the same compute node, half the measured 0.5 ms RTT.
    let local_vm = 0.25;

    let master_site = n_sw;
    let leader_site = n_sw + 1;
    let second_follower_site = n_sw + 2;
    let mut nodes: Vec<Node> = (0..n_sw)
        .map(|id| Node {
            id,
            label: format!("s{id}"),
            latitude: None,
            longitude: None,
        })
        .collect();
    for (id, label) in [
        (master_site, "F1"),
        (leader_site, "L"),
        (second_follower_site, "F2"),
    ] {
        nodes.push(Node {
            id,
            label: label.into(),
            latitude: None,
            longitude: None,
        });
    }
    let mut edges: Vec<(usize, usize, f64)> = (0..n_sw - 1).map(|i| (i, i + 1, 0.0)).collect();
    edges.push((0, master_site, d_sw_ctr));
    edges.push((master_site, leader_site, d_ctr_ctr));
    edges.push((leader_site, second_follower_site, local_vm));

    let topology = Topology::new(format!("scenario-{}-{n_sw}", s.name()), nodes, edges)?;
    let matrix = topology.delay_matrix();
    let placement = Placement::new(
        vec![master_site, leader_site, second_follower_site],
        n_sw + 3,
    )?;
    let view = ClusterView::new(&matrix, placement, 1)?;

    let mut path: Vec<usize> = (0..n_sw).collect();
    path.push(n_sw - 1);
    let flow = FlowScenario::new(path, (0.0, 0.0), t_c)?;
    Ok(ScenarioSetup {
        topology,
        matrix,
        view,
        flow,
        src: 0,
        dst: n_sw - 1,
    })
}

/// Predicted flow setup time for a named scenario and network size.
pub fn scenario_table(s: Scenario, n_sw: usize, t_c: f64) -> Result<f64> {
    let setup = scenario_setup(s, n_sw, t_c)?;
    Ok(arp_setup_time(&setup.matrix, &setup.view, &setup.flow))
}
