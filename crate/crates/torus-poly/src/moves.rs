//! Graph surgeries tied to the local relations: I–H flips, the projector
//! triple, cubic-graph expansion, and the golden-identity checkers.

use crate::gain::{Edge, Gain, GainGraph};
use crate::golden::GoldenNumber;
use crate::multipoly::Var;
use crate::ribbon::{Dart, RibbonGraph};
use crate::statesum::{
    eval_r10_capped, eval_r5_capped, flow_poly_top_capped, StateSumError, DEFAULT_EDGE_CAP,
};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MovesError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("edge {0} is a loop")]
    LoopEdge(String),
    #[error("edge {0} endpoint is not 3-valent")]
    NotThreeValent(String),
    #[error("leg {0:?} is not a distinct edge-end at the expected vertex")]
    BadLeg(Dart),
    #[error("planar golden check requires all gains zero, edge {0} has {1:?}")]
    NonZeroGain(String, Gain),
    #[error("no embeddable rotation found for the expansion")]
    ExpansionFailed,
    #[error("walk positions out of range or equal")]
    BadWalkPosition,
    #[error(transparent)]
    StateSum(#[from] StateSumError),
}

/// Vertices of free-loop components: a vertex whose only incident edge is a
/// single loop. Such loops do not count towards E in the golden identity.
fn free_loop_vertices(g: &GainGraph) -> Vec<bool> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.tail].push(i);
        if e.tail != e.head {
            incident[e.head].push(i);
        }
    }
    (0..g.vertex_count())
        .map(|v| incident[v].len() == 1 && g.is_loop(incident[v][0]))
        .collect()
}

/// True iff every vertex is 3-valent or carries a free loop.
pub fn is_cubic(g: &GainGraph) -> bool {
    let free = free_loop_vertices(g);
    (0..g.vertex_count()).all(|v| g.degree(v) == 3 || free[v])
}

/// Edges counted by the golden identity: everything outside free-loop components.
pub fn effective_edge_count(g: &GainGraph) -> u32 {
    let free = free_loop_vertices(g);
    g.edges()
        .iter()
        .filter(|e| !(e.tail == e.head && free[e.tail]))
        .count() as u32
}

#[derive(Debug, Clone, PartialEq)]
pub struct CubicReport {
    pub effective_edges: u32,
    /// R₁₀(G)
    pub lhs: GoldenNumber,
    /// φ^E · R₅(G)²
    pub rhs: GoldenNumber,
    pub r5: GoldenNumber,
    pub equal: bool,
}

/// Checks R₁₀(G) = φ^E·R₅(G)² exactly.
pub fn golden_check(g: &GainGraph) -> Result<CubicReport, MovesError> {
    golden_check_capped(g, DEFAULT_EDGE_CAP)
}

pub fn golden_check_capped(g: &GainGraph, cap: usize) -> Result<CubicReport, MovesError> {
    if !is_cubic(g) {
        return Err(MovesError::NotCubic);
    }
    let e = effective_edge_count(g);
    let r5 = eval_r5_capped(g, cap)?;
    let lhs = eval_r10_capped(g, cap)?;
    let rhs = GoldenNumber::phi_pow(e as i64) * &r5 * &r5;
    let equal = lhs == rhs;
    Ok(CubicReport { effective_edges: e, lhs, rhs, r5, equal })
}

fn end_vertex(g: &GainGraph, d: Dart) -> usize {
    let e = g.edge(d.edge());
    if d.is_tail() {
        e.tail
    } else {
        e.head
    }
}

fn move_end(edges: &mut [Edge], d: Dart, to: usize) {
    let e = &mut edges[d.edge()];
    if d.is_tail() {
        e.tail = to;
    } else {
        e.head = to;
    }
}

/// The I–H move: gauge-normalize `e`'s gain to zero, then exchange the leg
/// `leg_at_tail` (an edge-end at e's tail vertex) with `leg_at_head` (one at
/// its head vertex). Gains travel with their edges.
pub fn ih_flip(
    g: &GainGraph,
    e: usize,
    leg_at_tail: Dart,
    leg_at_head: Dart,
) -> Result<GainGraph, MovesError> {
    let edge = g.edge(e).clone();
    if edge.tail == edge.head {
        return Err(MovesError::LoopEdge(edge.id));
    }
    for (v, name) in [(edge.tail, &edge.id), (edge.head, &edge.id)] {
        if g.degree(v) != 3 {
            return Err(MovesError::NotThreeValent(name.clone()));
        }
    }
    for (leg, expect) in [(leg_at_tail, edge.tail), (leg_at_head, edge.head)] {
        if leg.edge() >= g.edge_count()
            || leg.edge() == e
            || end_vertex(g, leg) != expect
        {
            return Err(MovesError::BadLeg(leg));
        }
    }
    let normalized = g.gauge_shift(edge.head, edge.gain).expect("vertex exists");
    let mut edges = normalized.edges().to_vec();
    move_end(&mut edges, leg_at_tail, edge.head);
    move_end(&mut edges, leg_at_head, edge.tail);
    Ok(GainGraph::new(normalized.vertices().to_vec(), edges).expect("flip keeps validity"))
}

/// Ribbon-level I–H flip with the leg pairing read off the rotations: the
/// first leg after `e` at each endpoint is exchanged, and the new rotations
/// keep the move inside a disk. The output embeds in the same torus.
pub fn ih_flip_ribbon(r: &RibbonGraph, e: usize) -> Result<RibbonGraph, MovesError> {
    let g = r.base();
    let edge = g.edge(e).clone();
    if edge.tail == edge.head {
        return Err(MovesError::LoopEdge(edge.id));
    }
    if g.degree(edge.tail) != 3 || g.degree(edge.head) != 3 {
        return Err(MovesError::NotThreeValent(edge.id));
    }
    let ring_at = |v: usize, anchor: Dart| -> (Dart, Dart) {
        let ring = &r.rotation()[v];
        let i = ring.iter().position(|&d| d == anchor).expect("anchor in ring");
        (ring[(i + 1) % 3], ring[(i + 2) % 3])
    };
    let (p, q) = ring_at(edge.tail, Dart::tail_of(e));
    let (rr, s) = ring_at(edge.head, Dart::head_of(e));

    let flipped = ih_flip(g, e, p, rr)?;
    let mut rotation: Vec<Vec<Dart>> = r.rotation().to_vec();
    rotation[edge.tail] = vec![Dart::tail_of(e), q, rr];
    rotation[edge.head] = vec![Dart::head_of(e), s, p];
    Ok(RibbonGraph::new(flipped, rotation).expect("flip rotations valid"))
}

/// The projector triple at a non-loop edge e: G_X = G/e, G_I = G, and G_E is
/// G with e doubled into a parallel pair. These satisfy
/// φ·R₅(G_X) = R₅(G_I) + R₅(G_E) identically: contracting one copy of the
/// doubled edge leaves a trivial loop (factor Y−1 = φ in both sectors) and
/// deleting it gives back G.
pub fn jw_triple(
    g: &GainGraph,
    e: usize,
) -> Result<(GainGraph, GainGraph, GainGraph), MovesError> {
    let edge = g.edge(e).clone();
    if edge.tail == edge.head {
        return Err(MovesError::LoopEdge(edge.id));
    }
    let g_x = g.contract(e).expect("non-loop");
    let g_i = g.clone();
    let g_e = double_edge(g, e);
    Ok((g_x, g_i, g_e))
}

/// Insert a parallel copy of edge `e` (same endpoints, same gain).
pub fn double_edge(g: &GainGraph, e: usize) -> GainGraph {
    let mut edges = g.edges().to_vec();
    let mut copy = edges[e].clone();
    let mut id = format!("{}'", copy.id);
    while g.edge_index(&id).is_some() {
        id.push('\'');
    }
    copy.id = id;
    edges.insert(e + 1, copy);
    GainGraph::new(g.vertices().to_vec(), edges).expect("doubled edge valid")
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanarGoldenReport {
    pub effective_edges: u32,
    /// F(φ+2)
    pub lhs: GoldenNumber,
    /// φ^E · F(φ+1)²
    pub rhs: GoldenNumber,
    pub equal: bool,
}

/// Tutte's golden identity F(φ+2) = φ^E·F(φ+1)² for gain-zero cubic graphs,
/// with F the Y-only specialization of the flow polynomial.
pub fn planar_golden_check(g: &GainGraph) -> Result<PlanarGoldenReport, MovesError> {
    planar_golden_check_capped(g, DEFAULT_EDGE_CAP)
}

pub fn planar_golden_check_capped(
    g: &GainGraph,
    cap: usize,
) -> Result<PlanarGoldenReport, MovesError> {
    if !is_cubic(g) {
        return Err(MovesError::NotCubic);
    }
    if let Some(e) = g.edges().iter().find(|e| e.gain != (0, 0)) {
        return Err(MovesError::NonZeroGain(e.id.clone(), e.gain));
    }
    let f = flow_poly_top_capped(g, cap)?;
    debug_assert!(!f.mentions(Var::W) && !f.mentions(Var::A));
    let eval = |y: GoldenNumber| {
        let mut assn = BTreeMap::new();
        assn.insert(Var::Y, y);
        f.eval_golden(&assn).expect("flow polynomial in Y only")
    };
    let e = effective_edge_count(g);
    let lhs = eval(GoldenNumber::from_parts(2, 1, 1, 1));
    let at_phi1 = eval(GoldenNumber::from_parts(1, 1, 1, 1));
    let rhs = GoldenNumber::phi_pow(e as i64) * &at_phi1 * &at_phi1;
    Ok(PlanarGoldenReport { effective_edges: e, lhs: lhs.clone(), rhs: rhs.clone(), equal: lhs == rhs })
}

/// Cubic expansion inside a face: subdivide the edges under walk positions
/// `p` and `q` of face `face`, and join the two midpoints by a new edge
/// routed through that face. Applied to a cellulation it yields а
/// cellulation with E+3 edges; the rotation sides are resolved by validating
/// the four candidate rotations.
pub fn expand_through_face(
    r: &RibbonGraph,
    face: usize,
    p: usize,
    q: usize,
) -> Result<RibbonGraph, MovesError> {
    let g = r.base();
    let faces = r.trace_faces(g.full_mask()).circles;
    let walk = &faces.get(face).ok_or(MovesError::BadWalkPosition)?.walk;
    if p == q || p >= walk.len() || q >= walk.len() {
        return Err(MovesError::BadWalkPosition);
    }
    let (dp, dq) = (walk[p], walk[q]);
    if dp.edge() == dq.edge() {
        // Two subdivision points on one edge need an ordering convention;
        // callers pick positions on distinct edges instead.
        return Err(MovesError::BadWalkPosition);
    }

    // Class prefix of the face walk up to a position, plus the half-edge step
    // onto the midpoint of the dart at that position.
    let prefix = |pos: usize| -> Gain {
        let mut c = (0i64, 0i64);
        for d in walk.iter().take(pos) {
            let gn = g.edge(d.edge()).gain;
            if d.is_tail() {
                c = (c.0 + gn.0, c.1 + gn.1);
            } else {
                c = (c.0 - gn.0, c.1 - gn.1);
            }
        }
        let d = walk[pos];
        if d.is_tail() {
            let gn = g.edge(d.edge()).gain;
            c = (c.0 + gn.0, c.1 + gn.1);
        }
        c
    };
    // New-edge gain: class of the boundary path from midpoint p to midpoint q.
    let (cp, cq) = (prefix(p), prefix(q));
    let join_gain = (cq.0 - cp.0, cq.1 - cp.1);

    let unique_vertex = |g: &GainGraph, stem: &str| -> String {
        let mut n = g.vertex_count();
        loop {
            let cand = format!("{stem}{n}");
            if g.vertex_index(&cand).is_none() {
                return cand;
            }
            n += 1;
        }
    };
    let unique_edge = |g: &GainGraph, stem: &str| -> String {
        let mut n = g.edge_count();
        loop {
            let cand = format!("{stem}{n}");
            if g.edge_index(&cand).is_none() {
                return cand;
            }
            n += 1;
        }
    };

    // Subdivide: edge keeps its gain on the first half, zero on the second.
    let mut vertices = g.vertices().to_vec();
    let mut edges = g.edges().to_vec();
    let m1 = vertices.len();
    vertices.push(unique_vertex(g, "w"));
    let m2 = vertices.len();
    vertices.push(unique_vertex(g, "ww"));

    // Splitting edge x at its midpoint m: x: tail→m (original gain), and a
    // fresh edge m→head with zero gain appended at the end.
    let split = |edges: &mut Vec<Edge>, x: usize, m: usize, tag: &str| -> usize {
        let second = Edge {
            id: format!("{}{}", unique_edge(g, "s"), tag),
            tail: m,
            head: edges[x].head,
            gain: (0, 0),
        };
        edges[x].head = m;
        edges.push(second);
        edges.len() - 1
    };
    let e_p = dp.edge();
    let e_q = dq.edge();
    let sp = split(&mut edges, e_p, m1, "p");
    let sq = split(&mut edges, e_q, m2, "q");
    let join = Edge {
        id: format!("{}j", unique_edge(g, "n")),
        tail: m1,
        head: m2,
        gain: join_gain,
    };
    edges.push(join);
    let join_idx = edges.len() - 1;
    let base = GainGraph::new(vertices, edges).expect("expansion valid");

    // Rotations: existing rings keep their darts; a subdivided edge's head
    // dart becomes the head dart of its second half.
    let remap_ring = |ring: &Vec<Dart>| -> Vec<Dart> {
        ring.iter()
            .map(|&d| {
                if !d.is_tail() && d.edge() == e_p {
                    Dart::head_of(sp)
                } else if !d.is_tail() && d.edge() == e_q {
                    Dart::head_of(sq)
                } else {
                    d
                }
            })
            .collect()
    };
    let mut rotation: Vec<Vec<Dart>> = r.rotation().iter().map(remap_ring).collect();
    rotation.push(Vec::new()); // m1
    rotation.push(Vec::new()); // m2

    // Midpoint rings: (first-half head end, second-half tail end, join end) in
    // one of two cyclic orders each; the geometric one is recognized by the
    // split face: one more face than before, classes preserved except the
    // split one gains a null-homotopic partner.
    let old_faces = faces.len();
    let mut old_classes: Vec<Gain> = faces.iter().map(|c| c.class).collect();
    old_classes.sort_unstable();
    for side1 in [false, true] {
        for side2 in [false, true] {
            let ring1 = if side1 {
                vec![Dart::head_of(e_p), Dart::tail_of(sp), Dart::tail_of(join_idx)]
            } else {
                vec![Dart::head_of(e_p), Dart::tail_of(join_idx), Dart::tail_of(sp)]
            };
            let ring2 = if side2 {
                vec![Dart::head_of(e_q), Dart::tail_of(sq), Dart::head_of(join_idx)]
            } else {
                vec![Dart::head_of(e_q), Dart::head_of(join_idx), Dart::tail_of(sq)]
            };
            rotation[m1] = ring1;
            rotation[m2] = ring2;
            let candidate = RibbonGraph::new(base.clone(), rotation.clone())
                .expect("expansion rotations valid");
            let new_faces = candidate.trace_faces(candidate.base().full_mask()).circles;
            if new_faces.len() != old_faces + 1 {
                continue;
            }
            let mut new_classes: Vec<Gain> = new_faces.iter().map(|c| c.class).collect();
            new_classes.sort_unstable();
            let mut expect = old_classes.clone();
            expect.push((0, 0));
            expect.sort_unstable();
            if new_classes == expect {
                return Ok(candidate);
            }
        }
    }
    Err(MovesError::ExpansionFailed)
}
