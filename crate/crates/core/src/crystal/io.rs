//! Canonical JSON interchange and Graphviz export.
//!
//! Struct fields are declared in sorted order so the serialized keys are
//! sorted; colors are one-based in every text format.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{CrystalGraph, Provenance, Subcrystal};
use crate::cartan::{CartanData, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrystalJson {
    pub cartan: String,
    pub edges: Vec<EdgeJson>,
    pub elements: Vec<ElementJson>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub from: usize,
    pub i: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub id: usize,
    pub wt: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetJson {
    /// Hex SHA-256 of the ambient's canonical JSON.
    pub ambient: String,
    pub members: Vec<usize>,
}

impl CrystalGraph {
    pub fn to_json_value(&self) -> CrystalJson {
        CrystalJson {
            cartan: self.cartan.cartan_type().to_string(),
            edges: self
                .edges()
                .map(|(i, from, to)| EdgeJson { from, i: i + 1, to })
                .collect(),
            elements: self
                .weights
                .iter()
                .enumerate()
                .map(|(id, wt)| ElementJson { id, wt: wt.clone() })
                .collect(),
            provenance: self.provenance,
        }
    }

    /// Canonical single-line JSON (no trailing newline).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data always serializes")
    }

    /// Parses the canonical format. Elements must be listed by index.
    /// The `provenance` field is kept so that a round trip is byte-identical.
    pub fn from_json(s: &str) -> Result<CrystalGraph> {
        let doc: CrystalJson = serde_json::from_str(s)?;
        let cartan = CartanData::from_label(&doc.cartan)?;
        let mut weights = Vec::with_capacity(doc.elements.len());
        for (k, el) in doc.elements.into_iter().enumerate() {
            if el.id != k {
                return Err(Error::Parse(format!(
                    "element ids must be 0..n in order; found {} at position {k}",
                    el.id
                )));
            }
            weights.push(el.wt);
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in doc.edges {
            if e.i == 0 || e.i > cartan.rank() {
                return Err(Error::Parse(format!("edge color {} out of range", e.i)));
            }
            edges.push((e.i - 1, e.from, e.to));
        }
        CrystalGraph::from_edges(cartan, weights, edges, doc.provenance)
    }

    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    pub fn to_dot(&self, style: &DotStyle) -> String {
        let mut out = String::from("digraph crystal {\n  node [shape=box];\n");
        for (b, wt) in self.weights.iter().enumerate() {
            let _ = write!(out, "  {b} [label=\"{b}:{wt}\"");
            if style.subset.as_ref().is_some_and(|s| s.contains(&b)) {
                out.push_str(", style=filled, fillcolor=lightgray");
            }
            if style.highlight_nodes.contains(&b) {
                out.push_str(", color=red, penwidth=2");
            }
            out.push_str("];\n");
        }
        for (i, from, to) in self.edges() {
            let _ = write!(out, "  {from} -> {to} [label=\"{}\"", i + 1);
            if style.highlight_edges.contains(&(i, from)) {
                out.push_str(", color=red, penwidth=2");
            }
            out.push_str("];\n");
        }
        out.push_str("}\n");
        out
    }
}

/// Rendering options for [`CrystalGraph::to_dot`].
#[derive(Clone, Debug, Default)]
pub struct DotStyle {
    /// Members drawn as filled nodes.
    pub subset: Option<BTreeSet<usize>>,
    pub highlight_nodes: BTreeSet<usize>,
    /// `(color, source)` of highlighted `f` edges.
    pub highlight_edges: BTreeSet<(usize, usize)>,
}

impl Subcrystal {
    pub fn to_json_value(&self) -> SubsetJson {
        SubsetJson {
            ambient: self.ambient().fingerprint(),
            members: self.iter().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data always serializes")
    }

    /// Parses a subset and checks that it was taken in `ambient`.
    pub fn from_json(ambient: std::sync::Arc<CrystalGraph>, s: &str) -> Result<Subcrystal> {
        let doc: SubsetJson = serde_json::from_str(s)?;
        if doc.ambient != ambient.fingerprint() {
            return Err(Error::Parse(
                "subset fingerprint does not match ambient".into(),
            ));
        }
        Subcrystal::new(ambient, doc.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::tests::standard;
    use std::sync::Arc;

    #[test]
    fn json_is_canonical() {
        let g = standard(1);
        assert_eq!(
            g.to_json(),
            r#"{"cartan":"A1","edges":[{"from":0,"i":1,"to":1}],"elements":[{"id":0,"wt":[1]},{"id":1,"wt":[-1]}],"provenance":"tableaux"}"#
        );
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let g = standard(2);
        let sq = g.tensor(&g).unwrap();
        let text = sq.to_json();
        let back = CrystalGraph::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn json_rejects_bad_documents() {
        assert!(CrystalGraph::from_json("{").is_err());
        let out_of_order =
            r#"{"cartan":"A1","edges":[],"elements":[{"id":1,"wt":[1]}],"provenance":"import"}"#;
        assert!(matches!(
            CrystalGraph::from_json(out_of_order),
            Err(Error::Parse(_))
        ));
        let bad_color = r#"{"cartan":"A1","edges":[{"from":0,"i":2,"to":0}],"elements":[{"id":0,"wt":[0]}],"provenance":"import"}"#;
        assert!(CrystalGraph::from_json(bad_color).is_err());
        let bad_type = r#"{"cartan":"Q1","edges":[],"elements":[],"provenance":"import"}"#;
        assert!(matches!(
            CrystalGraph::from_json(bad_type),
            Err(Error::UnknownType(_))
        ));
    }

    #[test]
    fn subset_json_checks_fingerprint() {
        let g = Arc::new(standard(2));
        let s = Subcrystal::new(g.clone(), [0, 2]).unwrap();
        let text = s.to_json();
        assert!(text.contains(r#""members":[0,2]"#));
        assert_eq!(Subcrystal::from_json(g.clone(), &text).unwrap(), s);
        let other = Arc::new(standard(2).remove_edge(0, 0).unwrap());
        assert!(Subcrystal::from_json(other, &text).is_err());
    }

    #[test]
    fn dot_marks_members() {
        let g = standard(1);
        let style = DotStyle {
            subset: Some(BTreeSet::from([1])),
            ..Default::default()
        };
        let dot = g.to_dot(&style);
        assert!(dot.contains("0 [label=\"0:(1)\"];"));
        assert!(dot.contains("1 [label=\"1:(-1)\", style=filled"));
        assert!(dot.contains("0 -> 1 [label=\"1\"];"));
    }
}
