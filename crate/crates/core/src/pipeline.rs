//! The whole solver: detection, potentials, gadgets, `(l, b)`-matching,
//! recovery, repair and certificate.

use serde::Serialize;

use crate::detect::{Detection, Variant, analyze};
use crate::error::{Error, Result};
use crate::gadgets::{AuxiliaryInstance, GadgetStats, build_auxiliary, compute_potentials, gadget_stats};
use crate::graph::Graph;
use crate::lb::{LbMatching, count_weight_identity, solve_min_cardinality_capped, solve_min_weight_lb};
use crate::recover::{SolveResult, cover_unproblematic, finalize, matching_to_cotmatching};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Weights must be vertex-induced on every forbidden subgraph.
    #[default]
    Weighted,
    /// Every weight is 1; solved through minimum cardinality.
    Unweighted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub variant: Variant,
    pub mode: Mode,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stats {
    pub mode: Mode,
    pub forbidden: usize,
    pub problematic: usize,
    pub dense: usize,
    pub gadgets: usize,
    pub bare_dense: usize,
    pub aux: GadgetStats,
    pub probes: u64,
    /// Doubled weight of the optimal `(l, b)`-matching.
    pub lb_weight: i64,
    pub lb_edges: usize,
    /// `|M'| - w'(M')`, unweighted mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_identity: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_upper: Option<usize>,
    pub repairs: usize,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub result: SolveResult,
    pub stats: Stats,
    pub detection: Detection,
    pub aux: AuxiliaryInstance,
    pub lb: LbMatching,
}

/// Maximum weight t-matching of `g` avoiding the forbidden subgraphs of
/// `opts.variant`.
pub fn solve(g: &Graph, opts: SolveOptions) -> Result<Solution> {
    opts.variant.validate(g.t())?;
    let weighted = opts.mode == Mode::Weighted;
    if !weighted {
        if let Some(e) = g.edges().iter().find(|e| e.weight != 2) {
            return Err(Error::Parameters(format!(
                "unweighted mode needs unit weights, edge ({}, {}) has {}",
                e.u,
                e.v,
                e.weight / 2
            )));
        }
    }
    let detection = analyze(g, opts.variant)?;
    let potentials = compute_potentials(g, &detection, weighted)?;
    let aux = build_auxiliary(g, &detection, potentials)?;
    let (lb, count_identity, star_size, sum_upper) = if weighted {
        (solve_min_weight_lb(&aux)?, None, None, None)
    } else {
        let out = solve_min_cardinality_capped(&aux)?;
        let identity = count_weight_identity(&aux, &out.matching)?;
        (out.matching, Some(identity), Some(out.star_size), Some(out.sum_upper))
    };
    let lb_weight = lb.weight(&aux.graph);
    let (mut mbar, mut diagnostics) = matching_to_cotmatching(g, &detection, &aux, &lb)?;
    if mbar.weight(g) > lb_weight {
        return Err(Error::Internal(format!(
            "recovered co-t-matching weighs {} > {lb_weight}",
            mbar.weight(g)
        )));
    }
    let repairs = cover_unproblematic(g, &detection, &mut mbar)?;
    let repair_count = repairs.len();
    diagnostics.extend(repairs);
    let result = finalize(g, &detection, mbar, diagnostics)?;
    let stats = Stats {
        mode: opts.mode,
        forbidden: detection.forbidden().count(),
        problematic: detection.forbidden().filter(|h| h.problematic).count(),
        dense: detection.dense().count(),
        gadgets: aux.gadgets.len(),
        bare_dense: aux.bare_dense.len(),
        aux: gadget_stats(&aux),
        probes: detection.probes,
        lb_weight,
        lb_edges: lb.len(),
        count_identity,
        star_size,
        sum_upper,
        repairs: repair_count,
    };
    Ok(Solution {
        result,
        stats,
        detection,
        aux,
        lb,
    })
}
