//! Realizability of points-only graphs of weights.
//!
//! A candidate graph passes the gate (valid, points only, admissible,
//! signature identity) and is then reduced to an all-label-1 graph. The
//! result is a certificate: the base count k (number of + points of the
//! final graph, which is balanced), the final graph itself, and the list
//! of unsplit moves that rebuilds the input from the final graph.
//! Failing graphs get a rejection witness naming the first obstruction.

use num_traits::Zero;

use crate::euler::is_admissible;
use crate::exact::{rat, RatFunc};
use crate::formulas::check_ah;
use crate::graph::{GraphOfWeights, Sign, ValidationReport, VertexId};
use crate::gw1;
use crate::surgery::{reduce, unsplit_step, MoveRecord, SurgeryError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("invalid graph:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error("graph has fixed surfaces: {surfaces:?}")]
    NotPointsOnly { surfaces: Vec<VertexId> },
    #[error("edge {edge} has non-integral Euler number {n_e}")]
    NotAdmissible {
        edge: String,
        n_e: crate::exact::Rational,
    },
    #[error("signature sum is not constant in z; residual function {residual}")]
    AhNotConstant { residual: RatFunc },
    #[error("final graph has {plus} positive and {minus} negative points")]
    UnbalancedSigns { plus: usize, minus: usize },
    #[error("reduction failed: {0}")]
    Internal(#[from] SurgeryError),
}

/// Realizability certificate: the input graph is obtained from k disjoint
/// base blocks (k + points and k - points joined by label-1 edges) by the
/// recorded unsplit moves, applied in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub base: usize,
    pub final_graph: GraphOfWeights,
    pub moves: Vec<MoveRecord>,
}

fn sign_counts(g: &GraphOfWeights) -> (usize, usize) {
    let plus = g.points().filter(|(_, s)| *s == Sign::Plus).count();
    let minus = g.points().filter(|(_, s)| *s == Sign::Minus).count();
    (plus, minus)
}

/// Checks the realizability preconditions in order: validity, points only,
/// admissibility, constancy of the signature sum.
pub fn gate(g: &GraphOfWeights) -> Result<(), Rejection> {
    let report = g.validate();
    if !report.is_valid() {
        return Err(Rejection::InvalidGraph(report));
    }
    let surfaces: Vec<VertexId> = g.surfaces().map(|(id, _)| id.clone()).collect();
    if !surfaces.is_empty() {
        return Err(Rejection::NotPointsOnly { surfaces });
    }
    let adm = is_admissible(g);
    if let Some((edge, n_e)) = adm.non_integral.into_iter().next() {
        return Err(Rejection::NotAdmissible { edge, n_e });
    }
    let ah = check_ah(g).expect("validated above");
    if !ah.holds() {
        return Err(Rejection::AhNotConstant {
            residual: ah.ah_function,
        });
    }
    Ok(())
}

pub fn realize(g: &GraphOfWeights) -> Result<Certificate, Rejection> {
    gate(g)?;
    let trace = reduce(g)?;
    let (plus, minus) = sign_counts(&trace.final_graph);
    if plus != minus {
        return Err(Rejection::UnbalancedSigns { plus, minus });
    }
    let moves: Vec<MoveRecord> = trace.moves.into_iter().rev().collect();
    Ok(Certificate {
        base: plus,
        final_graph: trace.final_graph,
        moves,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("certificate base claims {claimed} blocks, final graph has {actual} positive points")]
    BaseMismatch { claimed: usize, actual: usize },
    #[error("certificate final graph is not a balanced all-label-1 points-only graph: {0}")]
    BadFinalGraph(String),
    #[error("move {index} failed: {source}")]
    MoveFailed { index: usize, source: SurgeryError },
    #[error("replayed graph fails the realizability gate: {0}")]
    GateFailed(Rejection),
}

/// Re-derives the graph a certificate claims to realize, verifying every
/// step. The result always passes the realizability gate.
pub fn replay(cert: &Certificate) -> Result<GraphOfWeights, ReplayError> {
    let g0 = &cert.final_graph;
    if !g0.is_valid() {
        return Err(ReplayError::BadFinalGraph(g0.validate().to_string()));
    }
    if g0.max_label() > 1 {
        return Err(ReplayError::BadFinalGraph(format!(
            "max label is {}",
            g0.max_label()
        )));
    }
    if g0.surfaces().count() != 0 {
        return Err(ReplayError::BadFinalGraph("contains surfaces".into()));
    }
    let (plus, minus) = sign_counts(g0);
    if plus != minus {
        return Err(ReplayError::BadFinalGraph(format!(
            "{plus} positive vs {minus} negative points"
        )));
    }
    if plus != cert.base {
        return Err(ReplayError::BaseMismatch {
            claimed: cert.base,
            actual: plus,
        });
    }
    let mut g = g0.clone();
    for (index, m) in cert.moves.iter().enumerate() {
        g = unsplit_step(&g, m).map_err(|source| ReplayError::MoveFailed { index, source })?;
    }
    gate(&g).map_err(ReplayError::GateFailed)?;
    Ok(g)
}

impl Certificate {
    /// `base k=<int>`, the GW1 text of the final graph, then the move
    /// lines in replay order.
    pub fn serialize(&self) -> String {
        let mut out = format!("base k={}\n", self.base);
        out.push_str(&gw1::serialize(&self.final_graph));
        for m in &self.moves {
            out.push_str(&m.to_line());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Certificate, String> {
        let mut base = None;
        let mut gw1_text = String::new();
        let mut moves = Vec::new();
        for raw in text.lines() {
            // block names contain '#', so comments only start a line or
            // follow base/graph lines
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let head = content.split_whitespace().next().unwrap();
            match head {
                "base" => {
                    let k = content
                        .split('#')
                        .next()
                        .unwrap()
                        .trim()
                        .strip_prefix("base")
                        .unwrap()
                        .trim()
                        .strip_prefix("k=")
                        .ok_or("base line must be `base k=<int>`")?;
                    base = Some(k.parse::<usize>().map_err(|_| format!("bad base count {k:?}"))?);
                }
                "point" | "surface" | "edge" => {
                    gw1_text.push_str(content.split('#').next().unwrap().trim());
                    gw1_text.push('\n');
                }
                _ => moves.push(MoveRecord::from_line(content)?),
            }
        }
        let final_graph = gw1::parse(&gw1_text).map_err(|e| e.to_string())?;
        Ok(Certificate {
            base: base.ok_or("missing base line")?,
            final_graph,
            moves,
        })
    }
}

/// Convenience wrapper for tests and examples: does the graph pass the
/// whole pipeline, certificate replay included?
pub fn is_realizable(g: &GraphOfWeights) -> bool {
    match realize(g) {
        Err(_) => false,
        Ok(cert) => match replay(&cert) {
            Err(_) => false,
            Ok(g2) => g2 == *g,
        },
    }
}

/// The constant of the signature sum when it exists and is an integer,
/// used by callers printing rejection diagnostics.
pub fn signature_defect(g: &GraphOfWeights) -> Option<crate::exact::Rational> {
    let ah = check_ah(g).ok()?;
    let c = ah.constant?;
    let defect = c - rat(ah.signature);
    if defect.is_zero() {
        None
    } else {
        Some(defect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;
    use crate::models::{model, ModelName};
    use crate::surgery::MoveKind;

    #[test]
    fn models_are_realizable() {
        for (a, b) in [(1, 2), (2, 3), (2, 5), (3, 7)] {
            for name in [ModelName::S, ModelName::P, ModelName::Q, ModelName::PQ] {
                let g = model(name, a, b).unwrap();
                let cert = realize(&g).unwrap_or_else(|r| panic!("{name:?}({a},{b}): {r}"));
                let replayed = replay(&cert).unwrap();
                assert_eq!(replayed, g, "{name:?}({a},{b}) replay mismatch");
            }
        }
    }

    #[test]
    fn s35_certificate_shape() {
        let g = model(ModelName::S, 3, 5).unwrap();
        let cert = realize(&g).unwrap();
        assert_eq!(cert.base, 1);
        assert!(isomorphic(&cert.final_graph, &model(ModelName::S, 1, 1).unwrap()));
        // 5 -> 2 (w=3), then max is 3: 3 -> 1 (w=2), then 2 -> 1 (w=1)
        assert!(cert.moves.iter().all(|m| m.kind == MoveKind::RelabelPQ));
        assert_eq!(cert.moves.len(), 3);
    }

    #[test]
    fn gate_rejects_surfaces() {
        let mut g = GraphOfWeights::new();
        g.add_point("p", Sign::Plus).unwrap();
        g.add_surface("F", 1).unwrap();
        g.add_edge("e1", "p", "F", 1).unwrap();
        g.add_edge("e2", "p", "F", 1).unwrap();
        assert!(matches!(gate(&g), Err(Rejection::NotPointsOnly { .. })));
    }

    #[test]
    fn gate_rejects_inadmissible() {
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Minus).unwrap();
        g.add_point("q1", Sign::Minus).unwrap();
        g.add_point("q2", Sign::Plus).unwrap();
        g.add_edge("e3", "p1", "p2", 3).unwrap();
        g.add_edge("e1", "p1", "q1", 1).unwrap();
        g.add_edge("e2", "p2", "q2", 2).unwrap();
        g.add_edge("e4", "q1", "q2", 5).unwrap();
        match gate(&g) {
            Err(Rejection::NotAdmissible { edge, n_e }) => {
                assert_eq!(edge, "e3");
                assert_eq!(n_e, crate::exact::ratq(-1, 3));
            }
            other => panic!("expected NotAdmissible, got {other:?}"),
        }
    }

    #[test]
    fn gate_rejects_nonconstant_sum() {
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Plus).unwrap();
        g.add_edge("e1", "p1", "p2", 1).unwrap();
        g.add_edge("e2", "p1", "p2", 1).unwrap();
        assert!(matches!(gate(&g), Err(Rejection::AhNotConstant { .. })));
    }

    #[test]
    fn gate_rejects_invalid() {
        let mut g = GraphOfWeights::new();
        g.add_point("p", Sign::Plus).unwrap();
        assert!(matches!(gate(&g), Err(Rejection::InvalidGraph(_))));
    }

    #[test]
    fn certificate_round_trip() {
        let g = model(ModelName::PQ, 2, 5).unwrap();
        let cert = realize(&g).unwrap();
        let text = cert.serialize();
        let parsed = Certificate::parse(&text).unwrap();
        assert_eq!(parsed, cert);
        assert_eq!(replay(&parsed).unwrap(), g);
    }

    #[test]
    fn replay_catches_tampering() {
        let g = model(ModelName::S, 2, 3).unwrap();
        let mut cert = realize(&g).unwrap();
        cert.base = 7;
        assert!(matches!(replay(&cert), Err(ReplayError::BaseMismatch { .. })));

        let mut cert2 = realize(&g).unwrap();
        if let Some(m) = cert2.moves.first_mut() {
            m.params = (m.params.0 + 1, m.params.1 + 5);
        }
        assert!(replay(&cert2).is_err());
    }

    #[test]
    fn is_realizable_summary() {
        assert!(is_realizable(&model(ModelName::P, 2, 3).unwrap()));
        let mut bad = GraphOfWeights::new();
        bad.add_point("p1", Sign::Plus).unwrap();
        bad.add_point("p2", Sign::Plus).unwrap();
        bad.add_edge("e1", "p1", "p2", 1).unwrap();
        bad.add_edge("e2", "p1", "p2", 1).unwrap();
        assert!(!is_realizable(&bad));
    }
}
