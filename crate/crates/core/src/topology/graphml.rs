//! Topology Zoo style GraphML ingestion.
//!
//! Node data keys `Latitude`, `Longitude` and `label` are honored, as is an
//! optional edge key `latency_ms` carrying an explicit one-way latency.
//! Everything else (LinkSpeed and friends) is ignored. Edges without an
//! explicit latency get one derived from the endpoints' coordinates.

use std::collections::HashMap;

use roxmltree::{Document, Node as XmlNode};

use crate::error::{Error, Result};
use crate::topology::{geo, Node, Topology};

pub fn parse(xml: &str, speed_km_per_ms: f64) -> Result<Topology> {
    let doc = Document::parse(xml).map_err(|e| Error::Parse(format!("graphml: {e}")))?;
    let root = doc.root_element();
    if !root.has_tag_name("graphml") {
        return Err(Error::Parse(format!(
            "expected <graphml> document, found <{}>",
            root.tag_name().name()
        )));
    }

    // <key id="d29" attr.name="Latitude" .../> declarations map data ids to
    // attribute names; some producers use the attribute name as the id.
    let mut key_names: HashMap<&str, &str> = HashMap::new();
    for key in root.descendants().filter(|n| n.has_tag_name("key")) {
        if let (Some(id), Some(name)) = (key.attribute("id"), key.attribute("attr.name")) {
            key_names.insert(id, name);
        }
    }

    let graph = root
        .children()
        .find(|n| n.has_tag_name("graph"))
        .ok_or_else(|| Error::Parse("missing <graph> element".into()))?;

    let mut name = graph.attribute("id").unwrap_or("graphml").to_string();
    for (key, value) in data_entries(&graph, &key_names) {
        if key == "Network" || key == "label" {
            name = value.to_string();
        }
    }

    let mut nodes = Vec::new();
    let mut index_of: HashMap<&str, usize> = HashMap::new();
    for el in graph.children().filter(|n| n.has_tag_name("node")) {
        let xml_id = el
            .attribute("id")
            .ok_or_else(|| Error::Parse("<node> without id".into()))?;
        if index_of.contains_key(xml_id) {
            return Err(Error::Parse(format!("duplicate node id '{xml_id}'")));
        }
        let id = nodes.len();
        let mut node = Node {
            id,
            label: xml_id.to_string(),
            latitude: None,
            longitude: None,
        };
        for (key, value) in data_entries(&el, &key_names) {
            match key {
                "Latitude" => node.latitude = Some(parse_f64(value, xml_id, "Latitude")?),
                "Longitude" => node.longitude = Some(parse_f64(value, xml_id, "Longitude")?),
                "label" => node.label = value.to_string(),
                _ => {}
            }
        }
        index_of.insert(xml_id, id);
        nodes.push(node);
    }
    if nodes.is_empty() {
        return Err(Error::EmptyTopology);
    }

    let mut edges = Vec::new();
    for el in graph.children().filter(|n| n.has_tag_name("edge")) {
        let src = el
            .attribute("source")
            .ok_or_else(|| Error::Parse("<edge> without source".into()))?;
        let dst = el
            .attribute("target")
            .ok_or_else(|| Error::Parse("<edge> without target".into()))?;
        let a = *index_of
            .get(src)
            .ok_or_else(|| Error::Parse(format!("edge references unknown node '{src}'")))?;
        let b = *index_of
            .get(dst)
            .ok_or_else(|| Error::Parse(format!("edge references unknown node '{dst}'")))?;
        let explicit = data_entries(&el, &key_names)
            .into_iter()
            .find(|(key, _)| *key == "latency_ms")
            .map(|(_, value)| parse_f64(value, src, "latency_ms"))
            .transpose()?;
        let latency = match explicit {
            Some(ms) => ms,
            None => geo::geo_latency(&nodes[a], &nodes[b], speed_km_per_ms)?,
        };
        edges.push((a, b, latency));
    }

    Topology::new(name, nodes, edges)
}

fn data_entries<'a>(
    el: &XmlNode<'a, 'a>,
    key_names: &HashMap<&'a str, &'a str>,
) -> Vec<(&'a str, &'a str)> {
    el.children()
        .filter(|n| n.has_tag_name("data"))
        .filter_map(|n| {
            let key = n.attribute("key")?;
            let text = n.text().unwrap_or("").trim();
            Some((key_names.get(key).copied().unwrap_or(key), text))
        })
        .collect()
}

fn parse_f64(value: &str, owner: &str, what: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("bad {what} value '{value}' on '{owner}'")))
}
