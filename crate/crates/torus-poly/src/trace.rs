//! SO(3) trace of an embedded graph, evaluated by surround-loop expansion.
//!
//! Expanding the second Jones–Wenzl projector on every edge turns the graph
//! into a signed sum over spanning subgraphs H of multicurves: the boundary
//! circles of a regular neighborhood of H. Against the even-label basis the
//! multicurve acts diagonally, so
//!
//!   tr_r(G) = Σ_{j even} Σ_H (−1)^{E−E(H)} d^{E(H)−V} · d^{t(H)} · λ_j^{m(H)},
//!
//! with t(H)/m(H) the numbers of trivial/essential surround circles, d the
//! loop value and λ_j the small-loop eigenvalue of the label-j core. At
//! r = 5 everything is exact in Q(√5).

use crate::golden::GoldenNumber;
use crate::ribbon::RibbonGraph;
use crate::root::{even_labels, loop_eigenvalue_r5, root_data, RootError};
use crate::statesum::DEFAULT_EDGE_CAP;
use num_integer::Integer;
use std::collections::BTreeMap;
use thiserror::Error;

pub use crate::root::{loop_eigenvalue_f64, loop_eigenvalue_r5 as loop_eigenvalue_exact};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("graph has {edges} edges, above the trace cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("subgraph mask {mask:#b} has an odd number of essential surround circles")]
    OddEssentialCircles { mask: u64 },
    #[error("subgraph mask {mask:#b} has non-parallel essential surround circles")]
    NonParallelEssentialCircles { mask: u64 },
    #[error("subgraph mask {mask:#b} has a non-primitive essential circle class {class:?}")]
    NonPrimitiveCircle { mask: u64, class: (i64, i64) },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactTrace {
    /// Sector value per even label, in label order.
    pub per_label: Vec<(i64, GoldenNumber)>,
    pub value: GoldenNumber,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericTrace {
    pub r: i64,
    pub per_label: Vec<(i64, f64)>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TraceResult {
    Exact(ExactTrace),
    Numeric(NumericTrace),
}

impl TraceResult {
    pub fn value_f64(&self) -> f64 {
        match self {
            TraceResult::Exact(t) => t.value.to_f64(),
            TraceResult::Numeric(t) => t.value,
        }
    }
}

/// Signed census over subgraphs keyed by (d-exponent E(H)−V+t(H), m(H)).
fn surround_census(
    ribbon: &RibbonGraph,
    cap: usize,
) -> Result<BTreeMap<(i64, u32), i64>, TraceError> {
    let g = ribbon.base();
    let e = g.edge_count();
    if e > cap || e >= 63 {
        return Err(TraceError::EdgeCapExceeded { edges: e, cap });
    }
    let v = g.vertex_count() as i64;
    let mut census: BTreeMap<(i64, u32), i64> = BTreeMap::new();
    for mask in 0..=g.full_mask() {
        let circles = ribbon.surround_loops(mask);
        let mut trivial = 0i64;
        let mut essential: Vec<(i64, i64)> = Vec::new();
        for c in &circles {
            if c.is_trivial() {
                trivial += 1;
            } else {
                essential.push(c.class);
            }
        }
        // Multicurves produced by graph expansions consist of parallel,
        // embedded (hence primitive) circles, an even number of them; anything
        // else means the rotation/gain data does not describe a graph on the
        // torus.
        if essential.len() % 2 != 0 {
            return Err(TraceError::OddEssentialCircles { mask });
        }
        for &c in &essential {
            if c.0.gcd(&c.1) != 1 {
                return Err(TraceError::NonPrimitiveCircle { mask, class: c });
            }
            let first = essential[0];
            if c.0 * first.1 - c.1 * first.0 != 0 {
                return Err(TraceError::NonParallelEssentialCircles { mask });
            }
        }
        let edges_selected = mask.count_ones() as i64;
        let sign = if (e as i64 - edges_selected) % 2 == 0 { 1i64 } else { -1 };
        let key = (edges_selected - v + trivial, essential.len() as u32);
        let entry = census.entry(key).or_insert(0);
        *entry += sign;
        if *entry == 0 {
            census.remove(&key);
        }
    }
    Ok(census)
}

pub fn trace_r5_capped(ribbon: &RibbonGraph, cap: usize) -> Result<ExactTrace, TraceError> {
    let census = surround_census(ribbon, cap)?;
    let mut per_label = Vec::new();
    let mut value = GoldenNumber::zero();
    for j in even_labels(5) {
        let lambda = loop_eigenvalue_r5(j)?;
        let mut sector = GoldenNumber::zero();
        for (&(dpow, m), &count) in &census {
            let term = GoldenNumber::from_int(count)
                * GoldenNumber::phi_pow(dpow)
                * lambda.checked_pow(m as i64).expect("λ nonzero");
            sector = sector + term;
        }
        value = &value + &sector;
        per_label.push((j, sector));
    }
    Ok(ExactTrace { per_label, value })
}

pub fn trace_r5(ribbon: &RibbonGraph) -> Result<ExactTrace, TraceError> {
    trace_r5_capped(ribbon, DEFAULT_EDGE_CAP)
}

pub fn trace_numeric_capped(
    ribbon: &RibbonGraph,
    r: i64,
    cap: usize,
) -> Result<NumericTrace, TraceError> {
    let data = root_data(r)?;
    let census = surround_census(ribbon, cap)?;
    let mut per_label = Vec::new();
    let mut value = 0.0;
    for (idx, j) in even_labels(r).enumerate() {
        let lambda = data.lambda[idx];
        let mut sector = 0.0;
        for (&(dpow, m), &count) in &census {
            sector += count as f64 * data.d.powi(dpow as i32) * lambda.powi(m as i32);
        }
        value += sector;
        per_label.push((j, sector));
    }
    Ok(NumericTrace { r, per_label, value })
}

pub fn trace_numeric(ribbon: &RibbonGraph, r: i64) -> Result<NumericTrace, TraceError> {
    trace_numeric_capped(ribbon, r, DEFAULT_EDGE_CAP)
}

/// Trace at any odd r; exact for r = 5, floating otherwise.
pub fn trace(ribbon: &RibbonGraph, r: i64) -> Result<TraceResult, TraceError> {
    if r == 5 {
        Ok(TraceResult::Exact(trace_r5(ribbon)?))
    } else {
        Ok(TraceResult::Numeric(trace_numeric(ribbon, r)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::GainGraph;
    use crate::ribbon::Dart;
    use crate::statesum::{eval_r5, eval_rr, r5_sector_values};

    fn wedge_ribbon() -> RibbonGraph {
        let g = GainGraph::build(&["o"], &[("a", "o", "o", (1, 0)), ("b", "o", "o", (0, 1))]);
        RibbonGraph::new(
            g,
            vec![vec![Dart::tail_of(0), Dart::tail_of(1), Dart::head_of(0), Dart::head_of(1)]],
        )
        .unwrap()
    }

    fn theta_ribbon() -> RibbonGraph {
        let g = GainGraph::build(
            &["u", "v"],
            &[("a", "u", "v", (0, 0)), ("b", "u", "v", (1, 0)), ("c", "u", "v", (0, 1))],
        );
        RibbonGraph::new(
            g,
            vec![
                vec![Dart::tail_of(0), Dart::tail_of(1), Dart::tail_of(2)],
                vec![Dart::head_of(0), Dart::head_of(1), Dart::head_of(2)],
            ],
        )
        .unwrap()
    }

    fn loops_ribbon(k: usize, gain: (i64, i64)) -> RibbonGraph {
        let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ids: Vec<String> = (0..k).map(|i| format!("l{i}")).collect();
        let edges: Vec<(&str, &str, &str, (i64, i64))> =
            (0..k).map(|i| (ids[i].as_str(), refs[i], refs[i], gain)).collect();
        let g = GainGraph::build(&refs, &edges);
        let rotation = (0..k).map(|i| vec![Dart::tail_of(i), Dart::head_of(i)]).collect();
        RibbonGraph::new(g, rotation).unwrap()
    }

    #[test]
    fn trace_of_k_trivial_loops_is_two_phi_k() {
        for k in 1..=5i64 {
            let t = trace_r5(&loops_ribbon(k as usize, (0, 0))).unwrap();
            assert_eq!(t.value, GoldenNumber::from_int(2) * GoldenNumber::phi_pow(k), "k={k}");
        }
    }

    #[test]
    fn trace_of_k_essential_loops() {
        for k in 1..=5i64 {
            let t = trace_r5(&loops_ribbon(k as usize, (1, 0))).unwrap();
            let expect =
                GoldenNumber::phi_pow(k) + (-GoldenNumber::phi_inv()).checked_pow(k).unwrap();
            assert_eq!(t.value, expect, "k={k}");
        }
    }

    #[test]
    fn trace_of_wedge_is_two_minus_two_phi_inv_sq() {
        let t = trace_r5(&wedge_ribbon()).unwrap();
        let expect =
            GoldenNumber::from_int(2) - GoldenNumber::from_int(2) * GoldenNumber::phi_pow(-2);
        assert_eq!(t.value, expect);
    }

    #[test]
    fn trace_of_empty_graph_is_label_count() {
        let g = GainGraph::build(&[], &[]);
        let r = RibbonGraph::new(g, vec![]).unwrap();
        assert_eq!(trace_r5(&r).unwrap().value, GoldenNumber::from_int(2));
        let n9 = trace_numeric(&r, 9).unwrap();
        assert!((n9.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn theta_trace_equals_r5() {
        let ribbon = theta_ribbon();
        let t = trace_r5(&ribbon).unwrap();
        assert_eq!(t.value, GoldenNumber::phi_pow(-3));
        assert_eq!(t.value, eval_r5(ribbon.base()).unwrap());
    }

    #[test]
    fn per_label_sectors_match_r5_summands() {
        for ribbon in [theta_ribbon(), wedge_ribbon(), loops_ribbon(3, (1, 0))] {
            let t = trace_r5(&ribbon).unwrap();
            let sectors = r5_sector_values(ribbon.base()).unwrap();
            assert_eq!(t.per_label[0].1, sectors[0]);
            assert_eq!(t.per_label[1].1, sectors[1]);
        }
    }

    #[test]
    fn numeric_trace_matches_rr_small_levels() {
        for r in [3i64, 7, 9] {
            for ribbon in [theta_ribbon(), wedge_ribbon(), loops_ribbon(2, (0, 0))] {
                let t = trace_numeric(&ribbon, r).unwrap();
                let rr = eval_rr(ribbon.base(), r).unwrap();
                assert!((t.value - rr).abs() < 1e-9, "r={r}: {} vs {rr}", t.value);
            }
        }
    }

    #[test]
    fn non_parallel_essentials_diagnosed() {
        // Two disjoint loops with independent gains but side-by-side rotations
        // cannot come from a torus embedding: the H with both loops has
        // non-parallel surround circles.
        let g = GainGraph::build(
            &["u", "v"],
            &[("a", "u", "u", (1, 0)), ("b", "v", "v", (0, 1))],
        );
        let r = RibbonGraph::new(
            g,
            vec![
                vec![Dart::tail_of(0), Dart::head_of(0)],
                vec![Dart::tail_of(1), Dart::head_of(1)],
            ],
        )
        .unwrap();
        assert!(matches!(
            trace_r5(&r),
            Err(TraceError::NonParallelEssentialCircles { .. })
        ));
    }

    #[test]
    fn even_level_rejected() {
        assert!(matches!(trace(&theta_ribbon(), 4), Err(TraceError::Root(_))));
    }
}
