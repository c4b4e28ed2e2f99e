//! The graph file format: a JSON document with `name`, `vertices`, `edges`,
//! and optional `rotation` and `tags`. Gains are pairs of signed integers;
//! rotation tokens are `<edgeid>+` (tail end) / `<edgeid>-` (head end).
//! The canonical serializer is byte-stable, so fixture files round-trip
//! exactly.

use crate::gain::{Edge, Gain, GainGraph, GraphError};
use crate::ribbon::{Dart, RibbonGraph, RibbonError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    pub from: String,
    pub to: String,
    pub gain: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationDoc {
    pub at: String,
    pub order: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<RotationDoc>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tags: Vec<String>,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("edge {edge}: unknown vertex {vertex}")]
    UnknownVertexInEdge { edge: String, vertex: String },
    #[error("rotation entry references unknown vertex {vertex}")]
    RotationVertexUnknown { vertex: String },
    #[error("rotation at vertex {vertex}: bad token {token} (expected <edgeid>+ or <edgeid>-)")]
    BadRotationToken { vertex: String, token: String },
    #[error("rotation at vertex {vertex}: token {token} names an unknown edge")]
    RotationUnknownEdge { vertex: String, token: String },
    #[error("duplicate rotation entry for vertex {vertex}")]
    DuplicateRotation { vertex: String },
    #[error("graph has rotation data for some vertices but not {vertex}")]
    MissingRotation { vertex: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ribbon(#[from] RibbonError),
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<GraphDocument, DocError> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| DocError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        // Surface semantic problems eagerly with precise names.
        doc.to_gain_graph()?;
        doc.to_ribbon()?;
        Ok(doc)
    }

    /// Canonical text form; fixture files are exactly this.
    pub fn canonical_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    pub fn to_gain_graph(&self) -> Result<GainGraph, DocError> {
        let vertex_index = |name: &str, edge: &str| -> Result<usize, DocError> {
            self.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| DocError::UnknownVertexInEdge {
                    edge: edge.to_string(),
                    vertex: name.to_string(),
                })
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            edges.push(Edge {
                id: e.id.clone(),
                tail: vertex_index(&e.from, &e.id)?,
                head: vertex_index(&e.to, &e.id)?,
                gain: (e.gain[0], e.gain[1]),
            });
        }
        Ok(GainGraph::new(self.vertices.clone(), edges)?)
    }

    /// The ribbon graph, when rotation data is present.
    pub fn to_ribbon(&self) -> Result<Option<RibbonGraph>, DocError> {
        let Some(rot) = &self.rotation else {
            return Ok(None);
        };
        let g = self.to_gain_graph()?;
        let mut rings: Vec<Option<Vec<Dart>>> = vec![None; g.vertex_count()];
        for entry in rot {
            let v = g
                .vertex_index(&entry.at)
                .ok_or_else(|| DocError::RotationVertexUnknown { vertex: entry.at.clone() })?;
            if rings[v].is_some() {
                return Err(DocError::DuplicateRotation { vertex: entry.at.clone() });
            }
            let mut ring = Vec::with_capacity(entry.order.len());
            for token in &entry.order {
                let (id, end) = token.split_at(token.len().saturating_sub(1));
                let dart = match end {
                    "+" => g.edge_index(id).map(Dart::tail_of),
                    "-" => g.edge_index(id).map(Dart::head_of),
                    _ => {
                        return Err(DocError::BadRotationToken {
                            vertex: entry.at.clone(),
                            token: token.clone(),
                        })
                    }
                };
                ring.push(dart.ok_or_else(|| DocError::RotationUnknownEdge {
                    vertex: entry.at.clone(),
                    token: token.clone(),
                })?);
            }
            rings[v] = Some(ring);
        }
        let mut rotation = Vec::with_capacity(rings.len());
        for (v, ring) in rings.into_iter().enumerate() {
            match ring {
                Some(r) => rotation.push(r),
                None => {
                    return Err(DocError::MissingRotation {
                        vertex: g.vertices()[v].clone(),
                    })
                }
            }
        }
        Ok(Some(RibbonGraph::new(g, rotation)?))
    }

    pub fn from_gain_graph(name: &str, g: &GainGraph, tags: &[&str]) -> GraphDocument {
        GraphDocument {
            name: name.to_string(),
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    id: e.id.clone(),
                    from: g.vertices()[e.tail].clone(),
                    to: g.vertices()[e.head].clone(),
                    gain: [e.gain.0, e.gain.1],
                })
                .collect(),
            rotation: None,
            tags: tags.iter().map(|t| t.to_string()).collect(),
        }
    }

    pub fn from_ribbon(name: &str, r: &RibbonGraph, tags: &[&str]) -> GraphDocument {
        let g = r.base();
        let mut doc = GraphDocument::from_gain_graph(name, g, tags);
        doc.rotation = Some(
            r.rotation()
                .iter()
                .enumerate()
                .map(|(v, ring)| RotationDoc {
                    at: g.vertices()[v].clone(),
                    order: ring.iter().map(|d| d.token(g)).collect(),
                })
                .collect(),
        );
        doc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_doc() -> GraphDocument {
        GraphDocument {
            name: "theta".into(),
            vertices: vec!["u".into(), "v".into()],
            edges: vec![
                EdgeDoc { id: "a".into(), from: "u".into(), to: "v".into(), gain: [0, 0] },
                EdgeDoc { id: "b".into(), from: "u".into(), to: "v".into(), gain: [1, 0] },
                EdgeDoc { id: "c".into(), from: "u".into(), to: "v".into(), gain: [0, 1] },
            ],
            rotation: Some(vec![
                RotationDoc { at: "u".into(), order: vec!["a+".into(), "b+".into(), "c+".into()] },
                RotationDoc { at: "v".into(), order: vec!["a-".into(), "b-".into(), "c-".into()] },
            ]),
            tags: vec!["cubic".into(), "cellulation".into()],
        }
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let doc = theta_doc();
        let text = doc.canonical_text();
        let parsed = GraphDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.canonical_text(), text);
    }

    #[test]
    fn theta_doc_parses_to_graph_and_ribbon() {
        let doc = theta_doc();
        let g = doc.to_gain_graph().unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        let r = doc.to_ribbon().unwrap().unwrap();
        assert!(r.validate_cellulation().is_ok());
    }

    #[test]
    fn unknown_vertex_error_names_the_edge() {
        let mut doc = theta_doc();
        doc.rotation = None;
        doc.edges[1].to = "zz".into();
        let err = doc.to_gain_graph().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("edge b"), "{msg}");
        assert!(msg.contains("zz"), "{msg}");
    }

    #[test]
    fn bad_rotation_token_is_reported() {
        let mut doc = theta_doc();
        doc.rotation.as_mut().unwrap()[0].order[0] = "a*".into();
        assert!(matches!(
            GraphDocument::parse(&doc.canonical_text()),
            Err(DocError::BadRotationToken { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = GraphDocument::parse("{ not json").unwrap_err();
        assert!(matches!(err, DocError::Syntax { line: 1, .. }));
    }

    #[test]
    fn documents_without_rotation_have_no_ribbon() {
        let mut doc = theta_doc();
        doc.rotation = None;
        assert!(doc.to_ribbon().unwrap().is_none());
        assert!(GraphDocument::parse(&doc.canonical_text()).is_ok());
    }
}
