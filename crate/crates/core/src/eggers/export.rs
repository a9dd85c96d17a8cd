use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::tree::{Edge, EggersWallTree, NodeId};
use super::EggersError;
use crate::exactnum::ExtRat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFormat {
    Dot,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeWire {
    nodes: Vec<NodeWire>,
    edges: Vec<EdgeWire>,
    leaves: BTreeMap<NodeId, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeWire {
    id: NodeId,
    height: ExtRat,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeWire {
    from: NodeId,
    to: NodeId,
    #[serde(serialize_with = "crate::exactnum::repr::ser_bigint")]
    #[serde(deserialize_with = "crate::exactnum::repr::positive_bigint")]
    weight: BigInt,
}

pub fn export_tree(t: &EggersWallTree, format: TreeFormat) -> String {
    match format {
        TreeFormat::Dot => to_dot(t),
        TreeFormat::Json => to_json(t),
    }
}

fn to_dot(t: &EggersWallTree) -> String {
    let mut out = String::from("digraph eggers_wall {\n  rankdir=BT;\n");
    for v in 0..t.node_count() {
        let label = match t.leaves().get(&v) {
            Some(id) => id.to_string(),
            None => t.height(v).to_string(),
        };
        let shape = if t.is_leaf(v) { "box" } else { "circle" };
        writeln!(out, "  n{v} [label=\"{label}\", shape={shape}];").unwrap();
    }
    let mut stack = vec![t.root()];
    while let Some(v) = stack.pop() {
        for &c in t.children(v) {
            let w = t.weight_into(c).expect("child edge");
            writeln!(out, "  n{v} -> n{c} [label=\"{w}\"];").unwrap();
        }
        stack.extend(t.children(v).iter().rev());
    }
    out.push_str("}\n");
    out
}

fn to_json(t: &EggersWallTree) -> String {
    let wire = TreeWire {
        nodes: (0..t.node_count())
            .map(|id| NodeWire {
                id,
                height: t.height(id).clone(),
            })
            .collect(),
        edges: t
            .edges()
            .into_iter()
            .map(|e| EdgeWire {
                from: e.from,
                to: e.to,
                weight: e.weight,
            })
            .collect(),
        leaves: t.leaves().clone(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable")
}

/// Reads the JSON export. Node ids must be `0..n`; branch order is the
/// order of leaf node ids.
pub fn parse_tree_json(text: &str) -> Result<EggersWallTree, EggersError> {
    let wire: TreeWire = serde_json::from_str(text).map_err(|e| EggersError::Json(e.to_string()))?;
    let n = wire.nodes.len();
    let mut heights: Vec<Option<ExtRat>> = vec![None; n];
    for node in wire.nodes {
        let slot = heights
            .get_mut(node.id)
            .ok_or_else(|| EggersError::Json(format!("node id {} out of range 0..{n}", node.id)))?;
        if slot.replace(node.height).is_some() {
            return Err(EggersError::Json(format!("node id {} repeated", node.id)));
        }
    }
    let heights: Vec<ExtRat> = heights.into_iter().map(|h| h.expect("all ids filled")).collect();
    let edges = wire
        .edges
        .into_iter()
        .map(|e| Edge {
            from: e.from,
            to: e.to,
            weight: e.weight,
        })
        .collect();
    let branches = wire.leaves.values().cloned().collect::<Vec<_>>();
    let mut seen = std::collections::HashSet::new();
    if let Some(dup) = branches.iter().find(|b| !seen.insert(*b)) {
        return Err(EggersError::Json(format!("branch {dup:?} labels two leaves")));
    }
    EggersWallTree::from_parts(heights, edges, wire.leaves, branches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eggers::build_tree;
    use crate::puiseux::Curve;

    #[test]
    fn dot_for_smooth_branch() {
        let t = build_tree(&Curve::parse_all(&["x + x^2"]).unwrap()).unwrap();
        let dot = export_tree(&t, TreeFormat::Dot);
        assert_eq!(
            dot,
            "digraph eggers_wall {\n  rankdir=BT;\n  n0 [label=\"0\", shape=circle];\n  n1 [label=\"C1\", shape=box];\n  n0 -> n1 [label=\"1\"];\n}\n"
        );
    }

    #[test]
    fn json_roundtrip_on_example() {
        let t = build_tree(
            &Curve::parse_all(&[
                "x^(3/2) + x^(5/2)",
                "x^(3/2) + x^(11/4)",
                "x^(3/2) + x^(11/4) + x^(37/12)",
                "x^(5/2) + x^(11/4)",
            ])
            .unwrap(),
        )
        .unwrap();
        let json = export_tree(&t, TreeFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["leaves"].as_object().unwrap().len(), 4);
        assert_eq!(v["nodes"][0]["height"], serde_json::json!([0, 1]));
        assert_eq!(parse_tree_json(&json).unwrap(), t);
    }

    #[test]
    fn rejects_invalid_trees() {
        // weight 2 on the first edge
        let bad = r#"{"nodes":[{"id":0,"height":[0,1]},{"id":1,"height":"inf"}],
                      "edges":[{"from":0,"to":1,"weight":2}],"leaves":{"1":"C1"}}"#;
        assert!(matches!(parse_tree_json(bad), Err(EggersError::Invalid(_))));
        // leaf below infinity
        let bad = r#"{"nodes":[{"id":0,"height":[0,1]},{"id":1,"height":[2,1]}],
                      "edges":[{"from":0,"to":1,"weight":1}],"leaves":{"1":"C1"}}"#;
        assert!(matches!(parse_tree_json(bad), Err(EggersError::Invalid(_))));
        // weights must divide along a path
        let bad = r#"{"nodes":[{"id":0,"height":[0,1]},{"id":1,"height":[3,2]},{"id":2,"height":[5,2]},{"id":3,"height":"inf"}],
                      "edges":[{"from":0,"to":1,"weight":1},{"from":1,"to":2,"weight":2},{"from":2,"to":3,"weight":3}],
                      "leaves":{"3":"C1"}}"#;
        assert!(matches!(parse_tree_json(bad), Err(EggersError::Invalid(_))));
        assert!(matches!(parse_tree_json("{}"), Err(EggersError::Json(_))));
        let bad = r#"{"nodes":[{"id":3,"height":[0,1]}],"edges":[],"leaves":{}}"#;
        assert!(matches!(parse_tree_json(bad), Err(EggersError::Json(_))));
    }
}
