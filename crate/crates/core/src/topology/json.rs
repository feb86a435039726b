//! JSON topology ingestion, mirroring the [`Topology`] fields.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::topology::{geo, Node, Topology};

#[derive(Deserialize)]
struct JsonTopology {
    #[serde(default)]
    name: Option<String>,
    nodes: Vec<JsonNode>,
    edges: Vec<JsonEdge>,
}

#[derive(Deserialize)]
struct JsonNode {
    id: usize,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    latitude: Option<f64>,
    #[serde(default)]
    longitude: Option<f64>,
}

#[derive(Deserialize)]
struct JsonEdge {
    source: usize,
    target: usize,
    #[serde(default)]
    latency_ms: Option<f64>,
}

pub fn parse(text: &str, speed_km_per_ms: f64) -> Result<Topology> {
    let raw: JsonTopology =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("json topology: {e}")))?;
    let mut nodes: Vec<Node> = raw
        .nodes
        .into_iter()
        .map(|n| Node {
            id: n.id,
            label: n.label.unwrap_or_else(|| n.id.to_string()),
            latitude: n.latitude,
            longitude: n.longitude,
        })
        .collect();
    nodes.sort_by_key(|n| n.id);

    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        let latency = match e.latency_ms {
            Some(ms) => ms,
            None => {
                let get = |id: usize| {
                    nodes
                        .get(id)
                        .ok_or_else(|| Error::Parse(format!("edge references unknown node {id}")))
                };
                geo::geo_latency(get(e.source)?, get(e.target)?, speed_km_per_ms)?
            }
        };
        edges.push((e.source, e.target, latency));
    }
    Topology::new(raw.name.unwrap_or_else(|| "json".into()), nodes, edges)
}
