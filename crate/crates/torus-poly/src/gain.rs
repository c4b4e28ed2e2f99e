//! Multigraphs with Z² gains on oriented edges.
//!
//! A gain graph models a graph mapped to the torus: the gain of an oriented
//! edge is the H₁-class picked up along it, and the class of any cycle is the
//! signed sum of its edge gains. Everything the state sums need — nullity,
//! rank of the homology image, component counts — is derived per spanning
//! subgraph by `homology_profile`.

use std::collections::HashMap;
use std::fmt::Write as _;
use thiserror::Error;

pub type Gain = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub gain: Gain,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("edge index {0} out of range")]
    UnknownEdge(usize),
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("cannot contract a loop (edge {0})")]
    ContractLoop(String),
    #[error("edge {0} is not a loop")]
    NotALoop(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopClass {
    Trivial,
    Essential,
}

/// Per-subgraph homological record feeding every state-sum term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomologyProfile {
    /// E(H)
    pub edges: u32,
    /// Total connected components (isolated vertices count).
    pub components: u32,
    /// n(H) = E(H) − V + components.
    pub nullity: u32,
    /// Rank (0, 1 or 2) of the combined image in H₁(torus) = Z².
    pub rank: u8,
    /// Components whose own image has rank 0.
    pub rank0_components: u32,
    /// Essential components, counted only when the global rank is 1.
    pub essential_components: u32,
}

impl HomologyProfile {
    pub fn s(&self) -> bool {
        self.rank == 2
    }

    pub fn s_perp(&self) -> bool {
        self.rank == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl GainGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_ids = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            if edge_ids.insert(e.id.clone(), i).is_some() {
                return Err(GraphError::DuplicateEdge(e.id.clone()));
            }
            if e.tail >= vertices.len() {
                return Err(GraphError::UnknownVertex {
                    edge: e.id.clone(),
                    vertex: format!("#{}", e.tail),
                });
            }
            if e.head >= vertices.len() {
                return Err(GraphError::UnknownVertex {
                    edge: e.id.clone(),
                    vertex: format!("#{}", e.head),
                });
            }
        }
        Ok(GainGraph { vertices, edges })
    }

    /// Convenience constructor from ids: `build(&["u","v"], &[("a","u","v",(1,0))])`.
    pub fn build(vertices: &[&str], edges: &[(&str, &str, &str, Gain)]) -> Self {
        let vnames: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let es = edges
            .iter()
            .map(|&(id, t, h, gain)| Edge {
                id: id.to_string(),
                tail: *index.get(t).unwrap_or_else(|| panic!("unknown vertex {t}")),
                head: *index.get(h).unwrap_or_else(|| panic!("unknown vertex {h}")),
                gain,
            })
            .collect();
        GainGraph::new(vnames, es).expect("valid literal graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].tail == self.edges[e].head
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum()
    }

    pub fn full_mask(&self) -> u64 {
        if self.edges.len() >= 64 {
            panic!("graphs are limited to < 64 edges");
        }
        (1u64 << self.edges.len()) - 1
    }

    pub fn homology_profile(&self, mask: u64) -> HomologyProfile {
        ProfileEngine::new(self).profile(mask)
    }

    /// Edge removed, all vertices kept.
    pub fn delete(&self, e: usize) -> Result<GainGraph, SurgeryError> {
        if e >= self.edges.len() {
            return Err(SurgeryError::UnknownEdge(e));
        }
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(GainGraph { vertices: self.vertices.clone(), edges })
    }

    /// Gauge-normalize the edge's gain to zero, then identify its endpoints.
    /// The tail vertex survives. Parallel edges become loops with their
    /// (now well-defined) gains.
    pub fn contract(&self, e: usize) -> Result<GainGraph, SurgeryError> {
        if e >= self.edges.len() {
            return Err(SurgeryError::UnknownEdge(e));
        }
        let Edge { tail: u, head: v, gain, ref id } = self.edges[e];
        if u == v {
            return Err(SurgeryError::ContractLoop(id.clone()));
        }
        let shifted = self.gauge_shift(v, gain)?;
        debug_assert_eq!(shifted.edges[e].gain, (0, 0));
        let mut vertices = shifted.vertices;
        vertices.remove(v);
        let remap = |w: usize| {
            if w == v {
                u
            } else if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut edges = Vec::with_capacity(shifted.edges.len() - 1);
        for (i, ed) in shifted.edges.into_iter().enumerate() {
            if i == e {
                continue;
            }
            edges.push(Edge {
                id: ed.id,
                tail: remap(ed.tail),
                head: remap(ed.head),
                gain: ed.gain,
            });
        }
        Ok(GainGraph { vertices, edges })
    }

    /// Homotopy across `v`: edges leaving v gain +p, edges entering v gain −p,
    /// loops at v untouched. No derived quantity changes.
    pub fn gauge_shift(&self, v: usize, p: Gain) -> Result<GainGraph, SurgeryError> {
        if v >= self.vertices.len() {
            return Err(SurgeryError::UnknownVertex(v));
        }
        let mut edges = self.edges.clone();
        for e in &mut edges {
            if e.tail == v && e.head == v {
                continue;
            }
            if e.tail == v {
                e.gain = (e.gain.0 + p.0, e.gain.1 + p.1);
            } else if e.head == v {
                e.gain = (e.gain.0 - p.0, e.gain.1 - p.1);
            }
        }
        Ok(GainGraph { vertices: self.vertices.clone(), edges })
    }

    /// Swap an edge's endpoints and negate its gain; semantically the same graph.
    pub fn reverse_edge(&self, e: usize) -> Result<GainGraph, SurgeryError> {
        if e >= self.edges.len() {
            return Err(SurgeryError::UnknownEdge(e));
        }
        let mut edges = self.edges.clone();
        let ed = &mut edges[e];
        std::mem::swap(&mut ed.tail, &mut ed.head);
        ed.gain = (-ed.gain.0, -ed.gain.1);
        Ok(GainGraph { vertices: self.vertices.clone(), edges })
    }

    pub fn classify_loop(&self, e: usize) -> Result<LoopClass, SurgeryError> {
        if e >= self.edges.len() {
            return Err(SurgeryError::UnknownEdge(e));
        }
        let ed = &self.edges[e];
        if ed.tail != ed.head {
            return Err(SurgeryError::NotALoop(ed.id.clone()));
        }
        Ok(if ed.gain == (0, 0) {
            LoopClass::Trivial
        } else {
            LoopClass::Essential
        })
    }

    /// Deterministic serialization used as a memo key.
    pub fn canonical_key(&self) -> String {
        let mut s = String::new();
        write!(s, "V{}", self.vertices.len()).unwrap();
        for e in &self.edges {
            write!(s, ";{}:{}>{}@{},{}", e.id, e.tail, e.head, e.gain.0, e.gain.1).unwrap();
        }
        s
    }
}

/// Reusable union-find scratch for profiling many subgraphs of one graph.
///
/// Potentials in Z² are carried per vertex relative to its parent, so each
/// non-tree edge (u→v, g) yields its fundamental cycle class g + p(u) − p(v)
/// in O(α) without rebuilding adjacency lists per mask.
pub struct ProfileEngine<'g> {
    g: &'g GainGraph,
    parent: Vec<u32>,
    size: Vec<u32>,
    // Potential of a vertex relative to its parent.
    dx: Vec<i64>,
    dy: Vec<i64>,
    // Per-root basis of component cycle classes (rank ≤ 2).
    basis: Vec<[(i64, i64); 2]>,
    basis_len: Vec<u8>,
    path: Vec<u32>,
}

impl<'g> ProfileEngine<'g> {
    pub fn new(g: &'g GainGraph) -> Self {
        let n = g.vertex_count();
        ProfileEngine {
            g,
            parent: vec![0; n],
            size: vec![1; n],
            dx: vec![0; n],
            dy: vec![0; n],
            basis: vec![[(0, 0); 2]; n],
            basis_len: vec![0; n],
            path: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        for i in 0..self.parent.len() {
            self.parent[i] = i as u32;
            self.size[i] = 1;
            self.dx[i] = 0;
            self.dy[i] = 0;
            self.basis_len[i] = 0;
        }
    }

    /// Root of x plus the potential of x relative to that root.
    fn find(&mut self, x: usize) -> (usize, i64, i64) {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        // Second pass: accumulate potentials and compress to the root.
        let mut cur = x;
        let mut px = 0i64;
        let mut py = 0i64;
        self.path.clear();
        while self.parent[cur] as usize != cur {
            self.path.push(cur as u32);
            px += self.dx[cur];
            py += self.dy[cur];
            cur = self.parent[cur] as usize;
        }
        let (mut rx, mut ry) = (px, py);
        for &node in &self.path {
            let node = node as usize;
            let (ndx, ndy) = (self.dx[node], self.dy[node]);
            self.parent[node] = r as u32;
            self.dx[node] = rx;
            self.dy[node] = ry;
            rx -= ndx;
            ry -= ndy;
        }
        (r, px, py)
    }

    fn insert_class(basis: &mut [(i64, i64); 2], len: &mut u8, v: (i64, i64)) {
        match *len {
            0 => {
                if v != (0, 0) {
                    basis[0] = v;
                    *len = 1;
                }
            }
            1 => {
                let b = basis[0];
                if b.0.checked_mul(v.1).unwrap() != b.1.checked_mul(v.0).unwrap() {
                    basis[1] = v;
                    *len = 2;
                }
            }
            _ => {}
        }
    }

    pub fn profile(&mut self, mask: u64) -> HomologyProfile {
        debug_assert!(self.g.edge_count() < 64);
        debug_assert!(mask <= self.g.full_mask());
        self.reset();
        let mut global: [(i64, i64); 2] = [(0, 0); 2];
        let mut global_len = 0u8;
        let mut edge_count = 0u32;
        let mut merges = 0u32;
        for (i, e) in self.g.edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            edge_count += 1;
            let (ru, pux, puy) = self.find(e.tail);
            let (rv, pvx, pvy) = self.find(e.head);
            if ru == rv {
                // Fundamental cycle class g + p(u) − p(v).
                let class = (e.gain.0 + pux - pvx, e.gain.1 + puy - pvy);
                let (mut b, mut l) = (self.basis[ru], self.basis_len[ru]);
                Self::insert_class(&mut b, &mut l, class);
                self.basis[ru] = b;
                self.basis_len[ru] = l;
                Self::insert_class(&mut global, &mut global_len, class);
            } else {
                merges += 1;
                // Constrain pot(head) = pot(tail) + gain across the union.
                let (winner, loser, delta) = if self.size[ru] >= self.size[rv] {
                    (ru, rv, (pux + e.gain.0 - pvx, puy + e.gain.1 - pvy))
                } else {
                    (rv, ru, (pvx - e.gain.0 - pux, pvy - e.gain.1 - puy))
                };
                self.parent[loser] = winner as u32;
                self.dx[loser] = delta.0;
                self.dy[loser] = delta.1;
                self.size[winner] += self.size[loser];
                let (mut b, mut l) = (self.basis[winner], self.basis_len[winner]);
                for k in 0..self.basis_len[loser] as usize {
                    Self::insert_class(&mut b, &mut l, self.basis[loser][k]);
                }
                self.basis[winner] = b;
                self.basis_len[winner] = l;
            }
        }
        let v = self.g.vertex_count() as u32;
        let components = v - merges;
        let nullity = edge_count + components - v;
        let mut rank0 = 0u32;
        let mut essential = 0u32;
        for i in 0..self.parent.len() {
            if self.parent[i] as usize == i {
                if self.basis_len[i] == 0 {
                    rank0 += 1;
                } else {
                    essential += 1;
                }
            }
        }
        let rank = global_len;
        HomologyProfile {
            edges: edge_count,
            components,
            nullity,
            rank,
            rank0_components: rank0,
            essential_components: if rank == 1 { essential } else { 0 },
        }
    }
}
