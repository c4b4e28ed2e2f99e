//! The polynomial state sums and their sector evaluations.
//!
//! `full_poly` computes the five-variable polynomial
//!   P̃_G(X,Y,W,A,B) = Σ_H (−1)^{E(G)−E(H)} X^{c(H)} Y^{n(H)} W^{c̄(H)} A^{s(H)} B^{s⊥(H)}
//! over all 2^E spanning subgraphs. `flow_poly_top` is its X = B = 1
//! specialization P_G(Y,W,A); `chrom_poly_top` is the dual-side sum
//!   C_G(X,U,B) = Σ_H (−1)^{E(H)} X^{k(H)−k(G)} U^{c̄(H)} B^{s⊥(H)},
//! with k the total component count, which restricts to B·X^{−k(G)}·χ_G(X)
//! on homologically trivial graphs and is the exact dual of P under
//! P_G(Y,W,A) = C_{G*}(Y,YW,AY²).
//!
//! R₅, R₁₀ and R_r are weighted sums of sector evaluations of P; the r ∈
//! {5,10} paths are exact in Q(√5).

use crate::gain::{GainGraph, ProfileEngine};
use crate::golden::GoldenNumber;
use crate::multipoly::{Monomial, MultiPoly, Var};
use crate::root::{check_level, root_data, RootError};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

pub const DEFAULT_EDGE_CAP: usize = 26;
const PARALLEL_THRESHOLD: usize = 16;
const DC_DEPTH_LIMIT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateSumError {
    #[error("graph has {edges} edges, above the state-sum cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("deletion-contraction recursion exceeded depth {0}")]
    RecursionLimit(usize),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Signed census of subgraph homology profiles: the key is
/// (components, nullity, rank, rank0_components, essential_components) and
/// the value is Σ (−1)^{E(G)−E(H)} over subgraphs with that profile.
#[derive(Debug, Clone, Default)]
pub struct ProfileHistogram {
    counts: BTreeMap<(u32, u32, u8, u32, u32), i64>,
    graph_edges: usize,
    graph_components: u32,
}

fn merge_counts(
    mut a: BTreeMap<(u32, u32, u8, u32, u32), i64>,
    b: BTreeMap<(u32, u32, u8, u32, u32), i64>,
) -> BTreeMap<(u32, u32, u8, u32, u32), i64> {
    for (k, v) in b {
        let e = a.entry(k).or_insert(0);
        *e = e.checked_add(v).expect("histogram overflow");
        if *e == 0 {
            a.remove(&k);
        }
    }
    a
}

fn census_range(
    g: &GainGraph,
    lo: u64,
    hi: u64,
) -> BTreeMap<(u32, u32, u8, u32, u32), i64> {
    let e = g.edge_count() as u32;
    let mut engine = ProfileEngine::new(g);
    let mut counts = BTreeMap::new();
    for mask in lo..hi {
        let p = engine.profile(mask);
        let sign = if (e - p.edges) % 2 == 0 { 1i64 } else { -1i64 };
        let key = (p.components, p.nullity, p.rank, p.rank0_components, p.essential_components);
        let c = counts.entry(key).or_insert(0i64);
        *c += sign;
        if *c == 0 {
            counts.remove(&key);
        }
    }
    counts
}

pub fn profile_histogram(g: &GainGraph, cap: usize) -> Result<ProfileHistogram, StateSumError> {
    let e = g.edge_count();
    if e > cap || e >= 63 {
        return Err(StateSumError::EdgeCapExceeded { edges: e, cap });
    }
    let total = 1u64 << e;
    let counts = if e < PARALLEL_THRESHOLD {
        census_range(g, 0, total)
    } else {
        let chunks = 256u64;
        let step = total / chunks;
        (0..chunks)
            .into_par_iter()
            .map(|i| {
                let lo = i * step;
                let hi = if i == chunks - 1 { total } else { lo + step };
                census_range(g, lo, hi)
            })
            .reduce(BTreeMap::new, merge_counts)
    };
    let full = g.homology_profile(g.full_mask());
    Ok(ProfileHistogram { counts, graph_edges: e, graph_components: full.components })
}

impl ProfileHistogram {
    pub fn ptilde(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (&(_comp, n, rank, rank0, essential), &coeff) in &self.counts {
            let m = Monomial::one()
                .set(Var::X, rank0 as u16)
                .set(Var::Y, n as u16)
                .set(Var::W, essential as u16)
                .set(Var::A, (rank == 2) as u16)
                .set(Var::B, (rank == 0) as u16);
            p.add_term(m, coeff);
        }
        p
    }

    pub fn flow(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (&(_comp, n, rank, _rank0, essential), &coeff) in &self.counts {
            let m = Monomial::one()
                .set(Var::Y, n as u16)
                .set(Var::W, essential as u16)
                .set(Var::A, (rank == 2) as u16);
            p.add_term(m, coeff);
        }
        p
    }

    pub fn chrom(&self) -> MultiPoly {
        // Sign convention (−1)^{E(H)} = (−1)^{E(G)} · (−1)^{E(G)−E(H)}.
        let global_sign = if self.graph_edges % 2 == 0 { 1i64 } else { -1i64 };
        let mut p = MultiPoly::zero();
        for (&(comp, _n, rank, _rank0, essential), &coeff) in &self.counts {
            debug_assert!(comp >= self.graph_components);
            let m = Monomial::one()
                .set(Var::X, (comp - self.graph_components) as u16)
                .set(Var::U, essential as u16)
                .set(Var::B, (rank == 0) as u16);
            p.add_term(m, coeff * global_sign);
        }
        p
    }
}

pub fn full_poly_capped(g: &GainGraph, cap: usize) -> Result<MultiPoly, StateSumError> {
    Ok(profile_histogram(g, cap)?.ptilde())
}

pub fn full_poly(g: &GainGraph) -> Result<MultiPoly, StateSumError> {
    full_poly_capped(g, DEFAULT_EDGE_CAP)
}

pub fn flow_poly_top_capped(g: &GainGraph, cap: usize) -> Result<MultiPoly, StateSumError> {
    Ok(profile_histogram(g, cap)?.flow())
}

pub fn flow_poly_top(g: &GainGraph) -> Result<MultiPoly, StateSumError> {
    flow_poly_top_capped(g, DEFAULT_EDGE_CAP)
}

pub fn chrom_poly_top_capped(g: &GainGraph, cap: usize) -> Result<MultiPoly, StateSumError> {
    Ok(profile_histogram(g, cap)?.chrom())
}

pub fn chrom_poly_top(g: &GainGraph) -> Result<MultiPoly, StateSumError> {
    chrom_poly_top_capped(g, DEFAULT_EDGE_CAP)
}

/// Exact sector data: Y, A and the weighted W-values of one evaluation family.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenSectors {
    pub y: GoldenNumber,
    pub a: GoldenNumber,
    /// (W value, multiplicity) pairs.
    pub sectors: Vec<(GoldenNumber, u32)>,
}

/// R₅: Y = φ², A = φ⁻², sectors W ∈ {1, φ⁻⁴} each with weight 1.
pub fn r5_sectors() -> GoldenSectors {
    GoldenSectors {
        y: GoldenNumber::phi_pow(2),
        a: GoldenNumber::phi_pow(-2),
        sectors: vec![(GoldenNumber::one(), 1), (GoldenNumber::phi_pow(-4), 1)],
    }
}

/// R₁₀: Y = φ+2, A = (2(φ+2))⁻¹, sectors with YW ∈ {φ+2, 1+φ⁻², 0} and
/// weights 1, 1, 2.
pub fn r10_sectors() -> GoldenSectors {
    let y = GoldenNumber::from_parts(2, 1, 1, 1);
    let a = (GoldenNumber::from_int(2) * &y).checked_inv().unwrap();
    // W₁ = 1, W₂ = (1+φ⁻²)/Y = φ⁻², W₃ = 0.
    GoldenSectors {
        y,
        a,
        sectors: vec![
            (GoldenNumber::one(), 1),
            (GoldenNumber::phi_pow(-2), 1),
            (GoldenNumber::zero(), 2),
        ],
    }
}

fn eval_flow_golden(
    p: &MultiPoly,
    sectors: &GoldenSectors,
) -> Result<GoldenNumber, StateSumError> {
    let mut total = GoldenNumber::zero();
    for (w, mult) in &sectors.sectors {
        let mut assn = BTreeMap::new();
        assn.insert(Var::Y, sectors.y.clone());
        assn.insert(Var::A, sectors.a.clone());
        assn.insert(Var::W, w.clone());
        let v = p.eval_golden(&assn).expect("flow polynomial only mentions Y, W, A");
        total = total + GoldenNumber::from_int(*mult as i64) * v;
    }
    Ok(total)
}

/// Exact evaluation of each R₅ sector separately: (P(φ²,1,φ⁻²), P(φ²,φ⁻⁴,φ⁻²)).
pub fn r5_sector_values(g: &GainGraph) -> Result<[GoldenNumber; 2], StateSumError> {
    let p = flow_poly_top(g)?;
    let s = r5_sectors();
    let mut out = Vec::with_capacity(2);
    for (w, _) in &s.sectors {
        let mut assn = BTreeMap::new();
        assn.insert(Var::Y, s.y.clone());
        assn.insert(Var::A, s.a.clone());
        assn.insert(Var::W, w.clone());
        out.push(p.eval_golden(&assn).expect("flow poly vars"));
    }
    Ok([out[0].clone(), out[1].clone()])
}

pub fn eval_r5_capped(g: &GainGraph, cap: usize) -> Result<GoldenNumber, StateSumError> {
    eval_flow_golden(&flow_poly_top_capped(g, cap)?, &r5_sectors())
}

pub fn eval_r5(g: &GainGraph) -> Result<GoldenNumber, StateSumError> {
    eval_r5_capped(g, DEFAULT_EDGE_CAP)
}

pub fn eval_r10_capped(g: &GainGraph, cap: usize) -> Result<GoldenNumber, StateSumError> {
    eval_flow_golden(&flow_poly_top_capped(g, cap)?, &r10_sectors())
}

pub fn eval_r10(g: &GainGraph) -> Result<GoldenNumber, StateSumError> {
    eval_r10_capped(g, DEFAULT_EDGE_CAP)
}

/// Numeric sector data for general odd r.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSectors {
    pub r: i64,
    pub y: f64,
    pub a: f64,
    pub sectors: Vec<(f64, u32)>,
}

/// Sectors of R_r: one per even label j, with Y = d², A = d⁻² and
/// Y·W_{j,r} = λ_j², so that YW_{j,r} − 1 is the label-2 loop eigenvalue
/// λ_j² − 1 around a label-j core.
pub fn rr_sectors(r: i64) -> Result<NumericSectors, StateSumError> {
    check_level(r)?;
    let data = root_data(r)?;
    let d2 = data.d * data.d;
    let sectors = data
        .lambda
        .iter()
        .map(|l| ((l * l) / d2, 1))
        .collect();
    Ok(NumericSectors { r, y: d2, a: 1.0 / d2, sectors })
}

pub fn eval_rr_capped(g: &GainGraph, r: i64, cap: usize) -> Result<f64, StateSumError> {
    let p = flow_poly_top_capped(g, cap)?;
    let s = rr_sectors(r)?;
    let mut total = 0.0;
    for (w, mult) in &s.sectors {
        let mut assn = BTreeMap::new();
        assn.insert(Var::Y, s.y);
        assn.insert(Var::A, s.a);
        assn.insert(Var::W, *w);
        total += *mult as f64 * p.eval_f64(&assn).expect("flow poly vars");
    }
    Ok(total)
}

pub fn eval_rr(g: &GainGraph, r: i64) -> Result<f64, StateSumError> {
    eval_rr_capped(g, r, DEFAULT_EDGE_CAP)
}

/// Which polynomial a deletion-contraction run should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    PTilde,
    P,
    C,
}

/// Deletion-contraction evaluation; exact agreement with the brute-force
/// state sum. Memoizes on the serialized graph only.
pub fn dc_poly(g: &GainGraph, kind: PolyKind) -> Result<MultiPoly, StateSumError> {
    dc_poly_capped(g, kind, DEFAULT_EDGE_CAP)
}

pub fn dc_poly_capped(
    g: &GainGraph,
    kind: PolyKind,
    cap: usize,
) -> Result<MultiPoly, StateSumError> {
    if g.edge_count() > cap {
        return Err(StateSumError::EdgeCapExceeded { edges: g.edge_count(), cap });
    }
    match kind {
        PolyKind::PTilde => {
            let mut memo = HashMap::new();
            dc_rec(g, cap, &mut memo, 0, false)
        }
        PolyKind::P => {
            let mut memo = HashMap::new();
            let pt = dc_rec(g, cap, &mut memo, 0, false)?;
            Ok(specialize_x_b_one(&pt))
        }
        PolyKind::C => {
            let mut memo = HashMap::new();
            let unnorm = dc_rec(g, cap, &mut memo, 0, true)?;
            let k_g = g.homology_profile(g.full_mask()).components;
            Ok(normalize_chrom(&unnorm, k_g))
        }
    }
}

/// P̃ with X = B = 1.
pub fn specialize_x_b_one(ptilde: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, &c) in ptilde.terms() {
        let mm = m.set(Var::X, 0).set(Var::B, 0);
        out.add_term(mm, c);
    }
    out
}

fn normalize_chrom(unnorm: &MultiPoly, k_g: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, &c) in unnorm.terms() {
        let k = m.exp(Var::X);
        assert!(k as u32 >= k_g, "component count below the full graph's");
        out.add_term(m.set(Var::X, k - k_g as u16), c);
    }
    out
}

/// Recursive contraction-deletion. `chrom` selects the dual-side sum
/// (X carries the total component count, sign (−1)^{E(H)}), for which the
/// relation flips to C̃(G) = C̃(G∖e) − C̃(G/e).
fn dc_rec(
    g: &GainGraph,
    cap: usize,
    memo: &mut HashMap<String, MultiPoly>,
    depth: usize,
    chrom: bool,
) -> Result<MultiPoly, StateSumError> {
    if depth > DC_DEPTH_LIMIT {
        return Err(StateSumError::RecursionLimit(DC_DEPTH_LIMIT));
    }
    let key = g.canonical_key();
    if let Some(p) = memo.get(&key) {
        return Ok(p.clone());
    }
    let nonloop = (0..g.edge_count()).find(|&i| !g.is_loop(i));
    let result = match nonloop {
        Some(e) => {
            let contracted = dc_rec(&g.contract(e).expect("non-loop"), cap, memo, depth + 1, chrom)?;
            let deleted = dc_rec(&g.delete(e).expect("in range"), cap, memo, depth + 1, chrom)?;
            if chrom {
                &deleted - &contracted
            } else {
                &contracted - &deleted
            }
        }
        None => {
            // Loops-only base case: direct state sum over loop subsets.
            let hist = profile_histogram(g, cap)?;
            if chrom {
                chrom_unnormalized(&hist)
            } else {
                hist.ptilde()
            }
        }
    };
    memo.insert(key, result.clone());
    Ok(result)
}

/// Σ (−1)^{E(H)} X^{k(H)} U^{c̄} B^{s⊥}, before the X^{−k(G)} normalization.
fn chrom_unnormalized(hist: &ProfileHistogram) -> MultiPoly {
    let global_sign = if hist.graph_edges % 2 == 0 { 1i64 } else { -1i64 };
    let mut p = MultiPoly::zero();
    for (&(comp, _n, rank, _rank0, essential), &coeff) in &hist.counts {
        let m = Monomial::one()
            .set(Var::X, comp as u16)
            .set(Var::U, essential as u16)
            .set(Var::B, (rank == 0) as u16);
        p.add_term(m, coeff * global_sign);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::GainGraph;

    fn theta() -> GainGraph {
        GainGraph::build(
            &["u", "v"],
            &[
                ("a", "u", "v", (0, 0)),
                ("b", "u", "v", (1, 0)),
                ("c", "u", "v", (0, 1)),
            ],
        )
    }

    fn wedge() -> GainGraph {
        GainGraph::build(&["o"], &[("a", "o", "o", (1, 0)), ("b", "o", "o", (0, 1))])
    }

    fn trivial_loops(k: usize) -> GainGraph {
        let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ids: Vec<String> = (0..k).map(|i| format!("l{i}")).collect();
        let edges: Vec<(&str, &str, &str, (i64, i64))> =
            (0..k).map(|i| (ids[i].as_str(), refs[i], refs[i], (0, 0))).collect();
        GainGraph::build(&refs, &edges)
    }

    fn essential_loops(k: usize) -> GainGraph {
        let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ids: Vec<String> = (0..k).map(|i| format!("l{i}")).collect();
        let edges: Vec<(&str, &str, &str, (i64, i64))> =
            (0..k).map(|i| (ids[i].as_str(), refs[i], refs[i], (1, 0))).collect();
        GainGraph::build(&refs, &edges)
    }

    #[test]
    fn ptilde_single_trivial_loop() {
        // Hand enumeration: ∅ → −X·B, {e} → +X·Y·B, so P̃ = XB(Y−1).
        let g = trivial_loops(1);
        let p = full_poly(&g).unwrap();
        assert_eq!(p.canonical_text(), "+1*B^1*X^1*Y^1 -1*B^1*X^1");
    }

    #[test]
    fn ptilde_single_essential_loop() {
        // Hand enumeration: full → +Y·W, empty → −X·B.
        let g = essential_loops(1);
        let p = full_poly(&g).unwrap();
        assert_eq!(p.canonical_text(), "-1*B^1*X^1 +1*W^1*Y^1");
    }

    #[test]
    fn ptilde_edgeless_graph() {
        let g = GainGraph::build(&["a", "b", "c"], &[]);
        let p = full_poly(&g).unwrap();
        assert_eq!(p.canonical_text(), "+1*B^1*X^3");
    }

    #[test]
    fn flow_poly_trivial_loops_is_y_minus_one_pow_k() {
        for k in 1..=6 {
            let p = flow_poly_top(&trivial_loops(k)).unwrap();
            let y1 = MultiPoly::var(Var::Y) - MultiPoly::one();
            let mut expect = MultiPoly::one();
            for _ in 0..k {
                expect = expect * &y1;
            }
            assert_eq!(p, expect, "k = {k}");
        }
    }

    #[test]
    fn flow_poly_essential_loops_is_yw_minus_one_pow_k() {
        for k in 1..=6 {
            let p = flow_poly_top(&essential_loops(k)).unwrap();
            let yw = MultiPoly::var(Var::Y) * MultiPoly::var(Var::W);
            let yw1 = yw - MultiPoly::one();
            let mut expect = MultiPoly::one();
            for _ in 0..k {
                expect = expect * &yw1;
            }
            assert_eq!(p, expect, "k = {k}");
        }
    }

    #[test]
    fn flow_poly_wedge_matches_published_value() {
        let p = flow_poly_top(&wedge()).unwrap();
        assert_eq!(p.canonical_text(), "+1*A^1*Y^2 -2*W^1*Y^1 +1");
    }

    #[test]
    fn flow_poly_theta() {
        let p = flow_poly_top(&theta()).unwrap();
        assert_eq!(p.canonical_text(), "+1*A^1*Y^2 -3*W^1*Y^1 +2");
    }

    #[test]
    fn chrom_poly_loop_vanishes() {
        // A graph with a loop has chromatic polynomial zero.
        let g = trivial_loops(1);
        assert!(chrom_poly_top(&g).unwrap().is_zero());
    }

    #[test]
    fn chrom_poly_single_edge() {
        // B·X^{−1}·χ with χ(X) = X(X−1): C = B(X−1).
        let g = GainGraph::build(&["u", "v"], &[("e", "u", "v", (0, 0))]);
        let c = chrom_poly_top(&g).unwrap();
        assert_eq!(c.canonical_text(), "+1*B^1*X^1 -1*B^1");
    }

    #[test]
    fn chrom_poly_edgeless() {
        let g = GainGraph::build(&["u"], &[]);
        assert_eq!(chrom_poly_top(&g).unwrap().canonical_text(), "+1*B^1");
    }

    #[test]
    fn r5_trivial_loops() {
        for k in 1..=6i64 {
            let v = eval_r5(&trivial_loops(k as usize)).unwrap();
            let expect = GoldenNumber::from_int(2) * GoldenNumber::phi_pow(k);
            assert_eq!(v, expect, "k = {k}");
        }
    }

    #[test]
    fn r5_essential_loops() {
        for k in 1..=6i64 {
            let v = eval_r5(&essential_loops(k as usize)).unwrap();
            let expect = GoldenNumber::phi_pow(k)
                + (-GoldenNumber::phi_inv()).checked_pow(k).unwrap();
            assert_eq!(v, expect, "k = {k}");
        }
    }

    #[test]
    fn r5_wedge_is_two_minus_two_phi_inv_sq() {
        let v = eval_r5(&wedge()).unwrap();
        let expect =
            GoldenNumber::from_int(2) - GoldenNumber::from_int(2) * GoldenNumber::phi_pow(-2);
        assert_eq!(v, expect);
    }

    #[test]
    fn r5_theta_is_phi_inv_cubed() {
        assert_eq!(eval_r5(&theta()).unwrap(), GoldenNumber::phi_pow(-3));
    }

    #[test]
    fn r10_single_trivial_loop() {
        let v = eval_r10(&trivial_loops(1)).unwrap();
        assert_eq!(v, GoldenNumber::from_int(4) * GoldenNumber::phi_pow(2));
    }

    #[test]
    fn r10_single_essential_loop() {
        let v = eval_r10(&essential_loops(1)).unwrap();
        let expect =
            GoldenNumber::phi_pow(2) + GoldenNumber::phi_pow(-2) - GoldenNumber::from_int(2);
        assert_eq!(v, expect);
    }

    #[test]
    fn r10_theta_is_phi_inv_cubed() {
        assert_eq!(eval_r10(&theta()).unwrap(), GoldenNumber::phi_pow(-3));
    }

    #[test]
    fn rr_at_five_matches_exact_r5() {
        for g in [theta(), wedge(), essential_loops(3), trivial_loops(2)] {
            let numeric = eval_rr(&g, 5).unwrap();
            let exact = eval_r5(&g).unwrap().to_f64();
            assert!((numeric - exact).abs() < 1e-9, "{numeric} vs {exact}");
        }
    }

    #[test]
    fn rr_at_three_single_trivial_loop_is_zero() {
        // d = 1 at r = 3, so Y − 1 = 0.
        let v = eval_rr(&trivial_loops(1), 3).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn rr_empty_graph_counts_even_labels() {
        let g = GainGraph::build(&[], &[]);
        assert!((eval_rr(&g, 7).unwrap() - 3.0).abs() < 1e-12);
        assert!((eval_rr(&g, 5).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rr_rejects_even_levels() {
        assert!(matches!(eval_rr(&theta(), 4), Err(StateSumError::Root(_))));
    }

    #[test]
    fn edge_cap_is_enforced() {
        let g = theta();
        assert_eq!(
            full_poly_capped(&g, 2),
            Err(StateSumError::EdgeCapExceeded { edges: 3, cap: 2 })
        );
    }

    #[test]
    fn dc_matches_brute_on_theta() {
        for kind in [PolyKind::PTilde, PolyKind::P, PolyKind::C] {
            let dc = dc_poly(&theta(), kind).unwrap();
            let brute = match kind {
                PolyKind::PTilde => full_poly(&theta()).unwrap(),
                PolyKind::P => flow_poly_top(&theta()).unwrap(),
                PolyKind::C => chrom_poly_top(&theta()).unwrap(),
            };
            assert_eq!(dc, brute, "{kind:?}");
        }
    }

    #[test]
    fn dc_pendant_edge_gives_zero_flow() {
        let g = GainGraph::build(
            &["u", "v", "w"],
            &[("e", "u", "v", (0, 0)), ("p", "v", "w", (1, 1)), ("l", "u", "u", (1, 0))],
        );
        assert!(dc_poly(&g, PolyKind::P).unwrap().is_zero());
        assert!(flow_poly_top(&g).unwrap().is_zero());
    }

    #[test]
    fn dc_trivial_loop_factors_out() {
        // P_G = (Y−1)·P_{G∖e} for a trivial loop e.
        let mut edges = vec![("a", "u", "v", (1, 0)), ("b", "v", "u", (0, 1))];
        edges.push(("t", "u", "u", (0, 0)));
        let g = GainGraph::build(&["u", "v"], &edges);
        let without = g.delete(2).unwrap();
        let y1 = MultiPoly::var(Var::Y) - MultiPoly::one();
        let lhs = flow_poly_top(&g).unwrap();
        let rhs = y1 * flow_poly_top(&without).unwrap();
        assert_eq!(lhs, rhs);
    }
}
