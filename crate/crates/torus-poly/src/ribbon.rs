//! Rotation systems on gain graphs: the embedding model.
//!
//! A ribbon graph fixes a cyclic order of edge-ends around every vertex.
//! Faces come from the standard tracing rule (next dart = rotation successor
//! of the opposite end), cellulations are validated rather than inferred, and
//! the dual graph is built on the faces with gains transferred through an
//! integral H₁ basis of the cellulation's chain complex.

use crate::gain::{Edge, Gain, GainGraph};
use crate::snf::smith_normal_form;
use thiserror::Error;

/// One end of an edge: `2e` is the tail end of edge `e`, `2e+1` the head end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart(pub u32);

impl Dart {
    pub fn tail_of(e: usize) -> Dart {
        Dart(2 * e as u32)
    }

    pub fn head_of(e: usize) -> Dart {
        Dart(2 * e as u32 + 1)
    }

    pub fn edge(self) -> usize {
        (self.0 / 2) as usize
    }

    pub fn is_tail(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn opposite(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    /// `e+` for a tail end, `e-` for a head end.
    pub fn token(self, g: &GainGraph) -> String {
        format!("{}{}", g.edge(self.edge()).id, if self.is_tail() { '+' } else { '-' })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RibbonError {
    #[error("rotation lists mention vertex index {0} out of range")]
    UnknownVertex(usize),
    #[error("dart {0:?} appears {1} times across rotations (expected once)")]
    DartMultiplicity(String, usize),
    #[error("dart {dart} listed at vertex {listed} but is incident to {incident}")]
    DartAtWrongVertex { dart: String, listed: String, incident: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellulationIssue {
    /// V − E + F must be 0 on the torus.
    WrongEuler { chi: i64 },
    /// Every face of a cellulation is a disk, so its boundary class vanishes.
    EssentialFace { face: usize, class: Gain },
    /// The edge gains must generate Z² (full subgraph has rank 2).
    GainsRankDeficient { rank: u8 },
    /// A cellulation of the torus is connected.
    Disconnected,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DualError {
    #[error("input is not a cellulation: {0:?}")]
    NotACellulation(Vec<CellulationIssue>),
    #[error("chain complex is not a torus complex (H1 free rank {free_rank}, torsion {torsion:?})")]
    NotATorusComplex { free_rank: usize, torsion: Vec<i128> },
}

/// One boundary circle of a regular neighborhood: a closed dart walk and its
/// homology class (+gain per tail-end traversal, −gain per head-end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCircle {
    pub walk: Vec<Dart>,
    pub class: Gain,
}

impl BoundaryCircle {
    pub fn is_trivial(&self) -> bool {
        self.class == (0, 0)
    }
}

#[derive(Debug, Clone)]
pub struct FaceTrace {
    pub circles: Vec<BoundaryCircle>,
    /// Circle index per dart id; only meaningful for darts of selected edges.
    pub face_of_dart: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    base: GainGraph,
    rotation: Vec<Vec<Dart>>,
    /// (vertex, position) for every dart.
    position: Vec<(usize, usize)>,
}

impl RibbonGraph {
    pub fn new(base: GainGraph, rotation: Vec<Vec<Dart>>) -> Result<Self, RibbonError> {
        if rotation.len() != base.vertex_count() {
            return Err(RibbonError::UnknownVertex(rotation.len()));
        }
        let dart_count = 2 * base.edge_count();
        let mut position = vec![(usize::MAX, usize::MAX); dart_count];
        let mut seen = vec![0usize; dart_count];
        for (v, ring) in rotation.iter().enumerate() {
            for (i, &d) in ring.iter().enumerate() {
                if d.0 as usize >= dart_count {
                    return Err(RibbonError::DartMultiplicity(format!("{:?}", d), 0));
                }
                seen[d.0 as usize] += 1;
                position[d.0 as usize] = (v, i);
            }
        }
        for e in 0..base.edge_count() {
            for d in [Dart::tail_of(e), Dart::head_of(e)] {
                let n = seen[d.0 as usize];
                if n != 1 {
                    return Err(RibbonError::DartMultiplicity(d.token(&base), n));
                }
                let incident = if d.is_tail() { base.edge(e).tail } else { base.edge(e).head };
                if position[d.0 as usize].0 != incident {
                    return Err(RibbonError::DartAtWrongVertex {
                        dart: d.token(&base),
                        listed: base.vertices()[position[d.0 as usize].0].clone(),
                        incident: base.vertices()[incident].clone(),
                    });
                }
            }
        }
        Ok(RibbonGraph { base, rotation, position })
    }

    pub fn base(&self) -> &GainGraph {
        &self.base
    }

    pub fn rotation(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.position[d.0 as usize].0
    }

    /// Rotation successor among the darts of selected edges.
    fn successor(&self, d: Dart, mask: u64) -> Dart {
        let (v, i) = self.position[d.0 as usize];
        let ring = &self.rotation[v];
        let n = ring.len();
        for step in 1..=n {
            let cand = ring[(i + step) % n];
            if mask & (1 << cand.edge()) != 0 {
                return cand;
            }
        }
        unreachable!("dart {d:?} itself is selected")
    }

    /// Face-trace the spanning subgraph selected by `mask`. Every selected
    /// dart lies on exactly one circle; vertices without selected darts give
    /// one trivial circle each.
    pub fn trace_faces(&self, mask: u64) -> FaceTrace {
        let dart_count = 2 * self.base.edge_count();
        let mut face_of_dart = vec![usize::MAX; dart_count];
        let mut circles = Vec::new();
        for start in 0..dart_count {
            let d0 = Dart(start as u32);
            if mask & (1 << d0.edge()) == 0 || face_of_dart[start] != usize::MAX {
                continue;
            }
            let idx = circles.len();
            let mut walk = Vec::new();
            let mut class = (0i64, 0i64);
            let mut d = d0;
            loop {
                face_of_dart[d.0 as usize] = idx;
                walk.push(d);
                let g = self.base.edge(d.edge()).gain;
                if d.is_tail() {
                    class = (class.0 + g.0, class.1 + g.1);
                } else {
                    class = (class.0 - g.0, class.1 - g.1);
                }
                d = self.successor(d.opposite(), mask);
                if d == d0 {
                    break;
                }
            }
            circles.push(BoundaryCircle { walk, class });
        }
        // Vertices whose incident edges are all unselected bound one disk each.
        for v in 0..self.base.vertex_count() {
            let has_selected = self.rotation[v].iter().any(|d| mask & (1 << d.edge()) != 0);
            if !has_selected {
                circles.push(BoundaryCircle { walk: Vec::new(), class: (0, 0) });
            }
        }
        FaceTrace { circles, face_of_dart }
    }

    pub fn faces(&self) -> Vec<BoundaryCircle> {
        self.trace_faces(self.base.full_mask()).circles
    }

    /// Boundary circles of a regular neighborhood of the spanning subgraph.
    pub fn surround_loops(&self, mask: u64) -> Vec<BoundaryCircle> {
        self.trace_faces(mask).circles
    }

    pub fn validate_cellulation(&self) -> Result<(), Vec<CellulationIssue>> {
        let mut issues = Vec::new();
        if !self.is_connected() {
            issues.push(CellulationIssue::Disconnected);
        }
        let faces = self.faces();
        let chi = self.base.vertex_count() as i64 - self.base.edge_count() as i64
            + faces.len() as i64;
        if chi != 0 {
            issues.push(CellulationIssue::WrongEuler { chi });
        }
        for (i, c) in faces.iter().enumerate() {
            if !c.is_trivial() {
                issues.push(CellulationIssue::EssentialFace { face: i, class: c.class });
            }
        }
        let full = self.base.homology_profile(self.base.full_mask());
        if full.rank != 2 {
            issues.push(CellulationIssue::GainsRankDeficient { rank: full.rank });
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(issues)
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.base.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for d in &self.rotation[v] {
                let w = self.vertex_of(d.opposite());
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Restrict to the selected edges (vertices all kept); rotations keep
    /// their cyclic order. Edge indices are renumbered in order.
    pub fn restrict(&self, mask: u64) -> RibbonGraph {
        let mut keep: Vec<usize> = Vec::new();
        let mut new_index = vec![usize::MAX; self.base.edge_count()];
        for e in 0..self.base.edge_count() {
            if mask & (1 << e) != 0 {
                new_index[e] = keep.len();
                keep.push(e);
            }
        }
        let edges: Vec<Edge> = keep.iter().map(|&e| self.base.edge(e).clone()).collect();
        let base = GainGraph::new(self.base.vertices().to_vec(), edges).expect("restriction valid");
        let rotation = self
            .rotation
            .iter()
            .map(|ring| {
                ring.iter()
                    .filter(|d| mask & (1 << d.edge()) != 0)
                    .map(|d| {
                        let e = new_index[d.edge()];
                        if d.is_tail() {
                            Dart::tail_of(e)
                        } else {
                            Dart::head_of(e)
                        }
                    })
                    .collect()
            })
            .collect();
        RibbonGraph::new(base, rotation).expect("restriction valid")
    }

    /// Dual cellulation: one vertex per face, one edge per primal edge
    /// (same id), rotations induced by the face walks. The dual gain of an
    /// edge is the coefficient pair of that edge in an integral H₁ basis
    /// (z_x, z_y) of the primal chain complex, computed through Smith normal
    /// form; any basis choice differs only by GL(2,Z), which no homological
    /// invariant sees.
    pub fn dual(&self) -> Result<RibbonGraph, DualError> {
        self.validate_cellulation().map_err(DualError::NotACellulation)?;
        let (zx, zy) = self.h1_cycle_basis()?;
        let trace = self.trace_faces(self.base.full_mask());
        let faces = &trace.circles;

        let dual_vertices: Vec<String> = (0..faces.len()).map(|i| format!("f{i}")).collect();
        let mut dual_edges = Vec::with_capacity(self.base.edge_count());
        for (e, edge) in self.base.edges().iter().enumerate() {
            let tail_face = trace.face_of_dart[Dart::head_of(e).0 as usize];
            let head_face = trace.face_of_dart[Dart::tail_of(e).0 as usize];
            dual_edges.push(Edge {
                id: edge.id.clone(),
                tail: tail_face,
                head: head_face,
                gain: (zx[e], zy[e]),
            });
        }
        let base = GainGraph::new(dual_vertices, dual_edges).expect("valid dual graph");
        // A primal tail-end traversal is the head end of the dual edge.
        let rotation = faces
            .iter()
            .map(|c| {
                c.walk
                    .iter()
                    .map(|d| {
                        if d.is_tail() {
                            Dart::head_of(d.edge())
                        } else {
                            Dart::tail_of(d.edge())
                        }
                    })
                    .collect()
            })
            .collect();
        RibbonGraph::new(base, rotation).map_err(|e| unreachable!("dual rotation valid: {e}"))
    }

    /// Integral cycles (z_x, z_y) whose classes form a basis of
    /// H₁ = ker ∂₁ / im ∂₂ of the cellulation's chain complex.
    fn h1_cycle_basis(&self) -> Result<(Vec<i64>, Vec<i64>), DualError> {
        let ecount = self.base.edge_count();
        // Spanning tree by BFS; potentials not needed, only membership and order.
        let vcount = self.base.vertex_count();
        let mut in_tree = vec![false; ecount];
        let mut visited = vec![false; vcount];
        let mut parent_edge: Vec<Option<usize>> = vec![None; vcount];
        let mut queue = std::collections::VecDeque::new();
        visited[0] = true;
        queue.push_back(0usize);
        while let Some(v) = queue.pop_front() {
            for d in &self.rotation[v] {
                let e = d.edge();
                let w = self.vertex_of(d.opposite());
                if !visited[w] {
                    visited[w] = true;
                    in_tree[e] = true;
                    parent_edge[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        let nontree: Vec<usize> = (0..ecount).filter(|&e| !in_tree[e]).collect();
        let n = nontree.len();

        // Fundamental cycle of a non-tree edge, as a vector over all edges.
        let cycle_vec = |e: usize| -> Vec<i64> {
            let mut vec = vec![0i64; ecount];
            vec[e] += 1;
            // Tree path head → tail closes the cycle.
            let (tail, head) = (self.base.edge(e).tail, self.base.edge(e).head);
            let walk_up = |mut v: usize, sign: i64, vec: &mut Vec<i64>| {
                while let Some(pe) = parent_edge[v] {
                    let ed = self.base.edge(pe);
                    // Traversing from child v toward the root.
                    if ed.head == v {
                        vec[pe] -= sign;
                    } else {
                        vec[pe] += sign;
                    }
                    v = if ed.head == v { ed.tail } else { ed.head };
                }
            };
            // head → root contributes forward, tail → root cancels back.
            walk_up(head, 1, &mut vec);
            walk_up(tail, -1, &mut vec);
            vec
        };
        let fundamental: Vec<Vec<i64>> = nontree.iter().map(|&e| cycle_vec(e)).collect();

        // Face boundaries in fundamental coordinates (non-tree entries).
        let faces = self.trace_faces(self.base.full_mask()).circles;
        let fcount = faces.len();
        let mut m = vec![vec![0i128; fcount]; n];
        for (fi, c) in faces.iter().enumerate() {
            for d in &c.walk {
                let e = d.edge();
                if let Some(i) = nontree.iter().position(|&x| x == e) {
                    m[i][fi] += if d.is_tail() { 1 } else { -1 };
                }
            }
        }

        let snf = smith_normal_form(m);
        let mut zero_rows = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..n {
            let d = snf.diag.get(i).copied().unwrap_or(0);
            if d == 0 {
                zero_rows.push(i);
            } else if d != 1 {
                torsion.push(d);
            }
        }
        if zero_rows.len() != 2 || !torsion.is_empty() {
            return Err(DualError::NotATorusComplex { free_rank: zero_rows.len(), torsion });
        }

        // Lift the two free generators: z = Σ_i (U⁻¹ e_row)_i · c_i.
        let lift = |row: usize| -> Vec<i64> {
            let mut z = vec![0i64; ecount];
            for i in 0..n {
                let coef = snf.u_inv[i][row];
                if coef == 0 {
                    continue;
                }
                let coef = i64::try_from(coef).expect("basis coefficient fits i64");
                for (e, val) in fundamental[i].iter().enumerate() {
                    z[e] += coef * val;
                }
            }
            z
        };
        Ok((lift(zero_rows[0]), lift(zero_rows[1])))
    }
}
