//! Message-level replay of the control-plane exchanges.
//!
//! The simulator schedules every individual message (packet-in, Raft
//! request, log replication/reply/commit, packet-out, ARP flood, flow-mod)
//! over a deterministic event queue and measures reaction and flow-setup
//! times from the resulting trace. It shares no arithmetic with the
//! closed-form models in [`crate::reaction`], which makes it an independent
//! cross-check of them.
//!
//! Entities are addressed by node id; the two hosts of a flow get the
//! synthetic ids `N` (source) and `N + 1` (destination).

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reaction::ClusterView;
use crate::topology::{DelayMatrix, Topology};

/// Control-plane message kinds, named as they appear in trace exports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MessageKind {
    UpdateEvent,
    RaftRequest,
    LogReplication,
    LogReply,
    LogCommit,
    ResponseEvent,
    ArpRequest,
    ArpReply,
    FlowMod,
}

/// One sent message: `time_ms` is the send time; the receive time is the
/// send time plus the one-way delay between `src` and `dst`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimEvent {
    pub time_ms: f64,
    pub kind: MessageKind,
    pub src: usize,
    pub dst: usize,
    pub seq: u64,
}

/// All messages of one simulation run, ordered by send time with strictly
/// increasing sequence tags.
#[derive(Debug, Clone, Default)]
pub struct EventTrace {
    events: Vec<SimEvent>,
}

impl EventTrace {
    pub fn events(&self) -> &[SimEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Writes one JSON object per line: `{time_ms, kind, src, dst, seq}`.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for event in &self.events {
            serde_json::to_writer(&mut w, event)?;
            writeln!(w)?;
        }
        Ok(())
    }

    fn from_raw(mut raw: Vec<RawEvent>) -> Self {
        raw.sort_by(|a, b| a.time.total_cmp(&b.time));
        let events = raw
            .into_iter()
            .enumerate()
            .map(|(i, e)| SimEvent {
                time_ms: e.time,
                kind: e.kind,
                src: e.src,
                dst: e.dst,
                seq: i as u64,
            })
            .collect();
        EventTrace { events }
    }
}

#[derive(Debug, Clone, Copy)]
struct RawEvent {
    time: f64,
    kind: MessageKind,
    src: usize,
    dst: usize,
}

// Pending delivery, ordered by (receive time, scheduling order).
struct Pending {
    recv: f64,
    order: u64,
    kind: MessageKind,
    dst: usize,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Pending {}
impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed: BinaryHeap is a max-heap, we want the earliest delivery
        other
            .recv
            .total_cmp(&self.recv)
            .then_with(|| other.order.cmp(&self.order))
    }
}

struct Queue<'a> {
    d: &'a DelayMatrix,
    heap: BinaryHeap<Pending>,
    order: u64,
}

impl<'a> Queue<'a> {
    fn new(d: &'a DelayMatrix) -> Self {
        Queue {
            d,
            heap: BinaryHeap::new(),
            order: 0,
        }
    }

    fn send(
        &mut self,
        rec: &mut Vec<RawEvent>,
        time: f64,
        kind: MessageKind,
        src: usize,
        dst: usize,
    ) {
        rec.push(RawEvent {
            time,
            kind,
            src,
            dst,
        });
        self.order += 1;
        self.heap.push(Pending {
            recv: time + self.d.delay(src, dst),
            order: self.order,
            kind,
            dst,
        });
    }
}

// One full SDO update round for `switch`, starting at `start`. Records every
// message and returns the time the response arrives back at the switch. The
// controller computation time `t_c` is spent at the master after it learns
// of the commit.
fn sdo_update_round(
    d: &DelayMatrix,
    v: &ClusterView,
    switch: usize,
    t_c: f64,
    start: f64,
    rec: &mut Vec<RawEvent>,
) -> f64 {
    let placement = v.placement();
    let c = placement.len();
    let master_idx = v.masters().master_of[switch];
    let master = placement.node_of(master_idx);
    let leader_idx = v.leader();
    let leader = v.leader_node();
    let rank = v.majority_rule().follower_rank(c);
    let followers: Vec<usize> = (0..c)
        .filter(|&i| i != leader_idx)
        .map(|i| placement.node_of(i))
        .collect();

    let mut q = Queue::new(d);
    q.send(rec, start, MessageKind::UpdateEvent, switch, master);

    let mut replies_seen = 0usize;
    let mut response_recv = None;
    while let Some(msg) = q.heap.pop() {
        let t = msg.recv;
        match msg.kind {
            MessageKind::UpdateEvent => {
                if master_idx == leader_idx {
                    leader_ingest(
                        &mut q, rec, t, rank, leader, &followers, master_idx, leader_idx, master,
                        switch, t_c,
                    );
                } else {
                    q.send(rec, t, MessageKind::RaftRequest, master, leader);
                }
            }
            MessageKind::RaftRequest => {
                leader_ingest(
                    &mut q, rec, t, rank, leader, &followers, master_idx, leader_idx, master,
                    switch, t_c,
                );
            }
            MessageKind::LogReplication => {
                q.send(rec, t, MessageKind::LogReply, msg.dst, leader);
            }
            MessageKind::LogReply => {
                replies_seen += 1;
                if replies_seen == rank {
                    commit(
                        &mut q, rec, t, leader, &followers, master_idx, leader_idx, master, switch,
                        t_c,
                    );
                }
            }
            MessageKind::LogCommit => {
                // only the master reacts on behalf of the waiting switch
                if msg.dst == master && master_idx != leader_idx {
                    q.send(rec, t + t_c, MessageKind::ResponseEvent, master, switch);
                }
            }
            MessageKind::ResponseEvent => {
                response_recv = Some(t);
            }
            _ => unreachable!("no ARP traffic inside an update round"),
        }
    }
    response_recv.expect("every update round produces a response")
}

// The leader has learned of the update: replicate, or commit immediately in
// a single-controller cluster.
#[allow(clippy::too_many_arguments)]
fn leader_ingest(
    q: &mut Queue,
    rec: &mut Vec<RawEvent>,
    t: f64,
    rank: usize,
    leader: usize,
    followers: &[usize],
    master_idx: usize,
    leader_idx: usize,
    master: usize,
    switch: usize,
    t_c: f64,
) {
    if rank == 0 {
        commit(
            q, rec, t, leader, followers, master_idx, leader_idx, master, switch, t_c,
        );
    } else {
        for &f in followers {
            q.send(rec, t, MessageKind::LogReplication, leader, f);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn commit(
    q: &mut Queue,
    rec: &mut Vec<RawEvent>,
    t: f64,
    leader: usize,
    followers: &[usize],
    master_idx: usize,
    leader_idx: usize,
    master: usize,
    switch: usize,
    t_c: f64,
) {
    for &f in followers {
        q.send(rec, t, MessageKind::LogCommit, leader, f);
    }
    if master_idx == leader_idx {
        q.send(rec, t + t_c, MessageKind::ResponseEvent, master, switch);
    }
}

/// Replays one SDO update at `switch`: packet-in, Raft detour through the
/// leader, majority wait, commit, packet-out. Returns the reaction time and
/// the full trace.
pub fn simulate_sdo_update(d: &DelayMatrix, v: &ClusterView, switch: usize) -> (f64, EventTrace) {
    assert!(switch < d.node_count(), "switch id out of range");
    let mut raw = Vec::new();
    let reaction = sdo_update_round(d, v, switch, 0.0, 0.0, &mut raw);
    (reaction, EventTrace::from_raw(raw))
}

/// Replays one MDO update at `switch`: the master answers immediately and
/// advertises the update to its peers asynchronously, so the reaction time
/// is a single round trip and independent of the leader choice.
pub fn simulate_mdo_update(d: &DelayMatrix, v: &ClusterView, switch: usize) -> (f64, EventTrace) {
    assert!(switch < d.node_count(), "switch id out of range");
    let placement = v.placement();
    let master_idx = v.masters().master_of[switch];
    let master = placement.node_of(master_idx);
    let at_master = d.delay(switch, master);

    let mut raw = vec![RawEvent {
        time: 0.0,
        kind: MessageKind::UpdateEvent,
        src: switch,
        dst: master,
    }];
    raw.push(RawEvent {
        time: at_master,
        kind: MessageKind::ResponseEvent,
        src: master,
        dst: switch,
    });
    for idx in (0..placement.len()).filter(|&i| i != master_idx) {
        raw.push(RawEvent {
            time: at_master,
            kind: MessageKind::LogReplication,
            src: master,
            dst: placement.node_of(idx),
        });
    }
    (2.0 * at_master, EventTrace::from_raw(raw))
}

/// Replays a full layer-2 learning flow between two switches: the ARP
/// request floods over a spanning tree while each switch along the
/// source-destination path performs a sequential SDO update (the destination
/// twice, once for the request and once for the reply), then flow rules are
/// installed and the ARP reply returns. Hosts attach with zero delay.
///
/// Returns the flow setup time measured at the source host and the trace.
pub fn simulate_l2switch_flow(
    t: &Topology,
    d: &DelayMatrix,
    v: &ClusterView,
    src_switch: usize,
    dst_switch: usize,
    t_c: f64,
) -> Result<(f64, EventTrace)> {
    let n = t.node_count();
    if src_switch >= n || dst_switch >= n {
        return Err(Error::InvalidArgument("switch id out of range".into()));
    }
    if src_switch == dst_switch {
        return Err(Error::InvalidArgument(
            "flow source and destination switches must differ".into(),
        ));
    }
    let host_src = n;
    let host_dst = n + 1;
    let path = t.shortest_path_nodes(d, src_switch, dst_switch);

    let mut raw = Vec::new();
    raw.push(RawEvent {
        time: 0.0,
        kind: MessageKind::ArpRequest,
        src: host_src,
        dst: src_switch,
    });

    // sequential updates along the path; the ARP request only moves on after
    // the local flow processing round trip completes
    let mut completion = vec![0.0; path.len()];
    let mut arrival = 0.0;
    for (i, &sw) in path.iter().enumerate() {
        completion[i] = sdo_update_round(d, v, sw, t_c, arrival, &mut raw);
        if i + 1 < path.len() {
            let next = path[i + 1];
            raw.push(RawEvent {
                time: completion[i],
                kind: MessageKind::ArpRequest,
                src: sw,
                dst: next,
            });
            arrival = completion[i] + d.delay(sw, next);
        }
    }
    let last = *path.last().expect("path is non-empty");
    let at_dst_host = completion[path.len() - 1];
    raw.push(RawEvent {
        time: at_dst_host,
        kind: MessageKind::ArpRequest,
        src: last,
        dst: host_dst,
    });

    // the reply triggers one more update at the destination switch
    raw.push(RawEvent {
        time: at_dst_host,
        kind: MessageKind::ArpReply,
        src: host_dst,
        dst: last,
    });
    let final_update_done = sdo_update_round(d, v, last, t_c, at_dst_host, &mut raw);

    // rules are installed across the path; installation does not delay the reply
    for &sw in &path {
        raw.push(RawEvent {
            time: final_update_done,
            kind: MessageKind::FlowMod,
            src: v.master_node_of(sw),
            dst: sw,
        });
    }

    // the ARP reply travels back along the path to the source host
    let mut back = final_update_done;
    for i in (1..path.len()).rev() {
        raw.push(RawEvent {
            time: back,
            kind: MessageKind::ArpReply,
            src: path[i],
            dst: path[i - 1],
        });
        back += d.delay(path[i], path[i - 1]);
    }
    raw.push(RawEvent {
        time: back,
        kind: MessageKind::ArpReply,
        src: path[0],
        dst: host_src,
    });
    let setup = back;

    record_flood(t, d, &path, &completion, src_switch, &mut raw);
    Ok((setup, EventTrace::from_raw(raw)))
}

// ARP flooding over the shortest-path tree rooted at the source (smallest-id
// tie-breaks). Path switches forward once their update completes; off-path
// switches forward immediately. Flood arrivals never gate the setup time.
fn record_flood(
    t: &Topology,
    d: &DelayMatrix,
    path: &[usize],
    completion: &[f64],
    root: usize,
    raw: &mut Vec<RawEvent>,
) {
    let n = t.node_count();
    let mut parent = vec![usize::MAX; n];
    for (v, slot) in parent.iter_mut().enumerate() {
        if v == root {
            continue;
        }
        let dv = d.delay(root, v);
        let tol = 1e-12 * (1.0 + dv);
        for &(u, w) in t.neighbors(v) {
            if d.delay(root, u) + w <= dv + tol {
                *slot = u;
                break; // neighbors sorted by id: first tight parent wins
            }
        }
    }
    let mut children = vec![Vec::new(); n];
    for v in 0..n {
        if v != root && parent[v] != usize::MAX {
            children[parent[v]].push(v);
        }
    }

    let on_path = |node: usize| path.iter().position(|&p| p == node);
    let mut forward_time = vec![f64::INFINITY; n];
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let fwd = match on_path(u) {
            Some(i) => completion[i],
            None => forward_time[u],
        };
        for &child in &children[u] {
            let is_path_edge = on_path(u)
                .map(|i| i + 1 < path.len() && path[i + 1] == child)
                .unwrap_or(false);
            if !is_path_edge {
                raw.push(RawEvent {
                    time: fwd,
                    kind: MessageKind::ArpRequest,
                    src: u,
                    dst: child,
                });
            }
            forward_time[child] = fwd + d.delay(u, child);
            stack.push(child);
        }
    }
}
