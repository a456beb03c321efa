//! Graph-level equivariant connected sum and splitting, reduction to an
//! all-label-1 graph, conversion to a surfaces-only graph, and graph
//! construction from raw fixed-point data.
//!
//! A split at an edge of maximal label l > 1 joining points p, q with
//! other weights a, b lands in exactly one of:
//!   - equal signs and a + b = l: contract the edge, detaching a P or Q
//!     block P(min(a,b), l);
//!   - opposite signs and a = b = w: relabel the edge to l - w, detaching
//!     a P#Q(l-w, l) block.
//! Admissibility of the edge guarantees one case applies when l exceeds
//! both other weights.

use std::fmt;

use crate::euler::{edge_euler, is_admissible};
use crate::exact::Rational;
use crate::graph::{
    EdgeId, GraphError, GraphOfWeights, Sign, ValidationReport, VertexId, VertexKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    ContractP,
    ContractQ,
    RelabelPQ,
    SurfaceSwapP10,
    SurfaceSwapQ10,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveKind::ContractP => "ContractP",
            MoveKind::ContractQ => "ContractQ",
            MoveKind::RelabelPQ => "RelabelPQ",
            MoveKind::SurfaceSwapP10 => "SurfaceSwapP10",
            MoveKind::SurfaceSwapQ10 => "SurfaceSwapQ10",
        };
        write!(f, "{s}")
    }
}

/// One surgery step. For contractions, params = (a, b) with a the label
/// kept at `at` and b the label of the `moved` edge (l = a + b); for
/// relabelings, params = (w, l) with the edge going from l to l - w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub edge: EdgeId,
    pub params: (u64, u64),
    /// Identity of the detached block, e.g. "P(1,3)" or "P#Q(3,5)".
    pub block: String,
    /// Contractions: the merged vertex (its id is kept).
    pub at: Option<VertexId>,
    /// Contractions: the removed vertex.
    pub from: Option<VertexId>,
    /// Contractions: the external edge rehomed from `from` to `at`.
    pub moved: Option<EdgeId>,
}

impl MoveRecord {
    pub fn to_line(&self) -> String {
        let mut line = format!(
            "{} edge={} params=({},{}) block={}",
            self.kind, self.edge, self.params.0, self.params.1, self.block
        );
        if let Some(at) = &self.at {
            line.push_str(&format!(" at={at}"));
        }
        if let Some(from) = &self.from {
            line.push_str(&format!(" from={from}"));
        }
        if let Some(moved) = &self.moved {
            line.push_str(&format!(" moved={moved}"));
        }
        line
    }

    pub fn from_line(line: &str) -> Result<MoveRecord, String> {
        let mut tokens = line.split_whitespace();
        let kind = match tokens.next() {
            Some("ContractP") => MoveKind::ContractP,
            Some("ContractQ") => MoveKind::ContractQ,
            Some("RelabelPQ") => MoveKind::RelabelPQ,
            Some("SurfaceSwapP10") => MoveKind::SurfaceSwapP10,
            Some("SurfaceSwapQ10") => MoveKind::SurfaceSwapQ10,
            other => return Err(format!("unknown move kind {other:?}")),
        };
        let mut edge = None;
        let mut params = None;
        let mut block = None;
        let mut at = None;
        let mut from = None;
        let mut moved = None;
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| format!("bad move field {tok:?}"))?;
            match key {
                "edge" => edge = Some(value.to_owned()),
                "block" => block = Some(value.to_owned()),
                "at" => at = Some(value.to_owned()),
                "from" => from = Some(value.to_owned()),
                "moved" => moved = Some(value.to_owned()),
                "params" => {
                    let inner = value
                        .strip_prefix('(')
                        .and_then(|v| v.strip_suffix(')'))
                        .ok_or_else(|| format!("bad params {value:?}"))?;
                    let (x, y) = inner
                        .split_once(',')
                        .ok_or_else(|| format!("bad params {value:?}"))?;
                    let x: u64 = x.parse().map_err(|_| format!("bad params {value:?}"))?;
                    let y: u64 = y.parse().map_err(|_| format!("bad params {value:?}"))?;
                    params = Some((x, y));
                }
                _ => return Err(format!("unknown move field {key:?}")),
            }
        }
        Ok(MoveRecord {
            kind,
            edge: edge.ok_or("move line missing edge=")?,
            params: params.ok_or("move line missing params=")?,
            block: block.ok_or("move line missing block=")?,
            at,
            from,
            moved,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BlockTallies {
    pub p: usize,
    pub q: usize,
    pub pq: usize,
    pub p10: usize,
    pub q10: usize,
}

impl BlockTallies {
    fn record(&mut self, kind: MoveKind) {
        match kind {
            MoveKind::ContractP => self.p += 1,
            MoveKind::ContractQ => self.q += 1,
            MoveKind::RelabelPQ => self.pq += 1,
            MoveKind::SurfaceSwapP10 => self.p10 += 1,
            MoveKind::SurfaceSwapQ10 => self.q10 += 1,
        }
    }
}

/// A full reduction: ordered moves, the all-label-1 final graph, and the
/// tally of detached blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub moves: Vec<MoveRecord>,
    pub final_graph: GraphOfWeights,
    pub tallies: BlockTallies,
}

impl ReductionTrace {
    /// One move per line, then the GW1 text of the final graph.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for m in &self.moves {
            out.push_str(&m.to_line());
            out.push('\n');
        }
        out.push_str(&crate::gw1::serialize(&self.final_graph));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurgeryError {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} has label 1; splitting applies to labels > 1")]
    LabelOne(EdgeId),
    #[error("edge {0} is a self-loop")]
    SelfLoop(EdgeId),
    #[error("edge {0} touches a surface; labels > 1 require two points")]
    EdgeTouchesSurface(EdgeId),
    #[error("no split case applies at edge {edge} (n_e = {n_e})")]
    NeitherCase { edge: EdgeId, n_e: Rational },
    #[error("invalid graph:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error("graph not admissible: edge {edge} has n_e = {n_e}")]
    NotAdmissible { edge: EdgeId, n_e: Rational },
    #[error("labels above 1 present (max label {max}); reduce first")]
    LabelsAboveOne { max: u64 },
    #[error("move footprint mismatch: {0}")]
    Footprint(String),
    #[error("label-1 stub sides unbalanced: {left} vs {right}")]
    UnbalancedStubs { left: usize, right: usize },
    #[error("sphere pairs inconsistent with weights: {0}")]
    SphereCoverage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_valid(g: &GraphOfWeights) -> Result<(), SurgeryError> {
    let report = g.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(SurgeryError::InvalidGraph(report))
    }
}

fn require_admissible(g: &GraphOfWeights) -> Result<(), SurgeryError> {
    let report = is_admissible(g);
    match report.non_integral.into_iter().next() {
        None => Ok(()),
        Some((edge, n_e)) => Err(SurgeryError::NotAdmissible { edge, n_e }),
    }
}

/// Splits off one block at edge e (label > 1). Contractions keep the
/// lexicographically smaller endpoint id as the merged vertex.
pub fn split_step(
    g: &GraphOfWeights,
    e_id: &str,
) -> Result<(GraphOfWeights, MoveRecord), SurgeryError> {
    let e = g
        .edge(e_id)
        .ok_or_else(|| SurgeryError::UnknownEdge(e_id.to_owned()))?;
    let label = e.label;
    if label == 1 {
        return Err(SurgeryError::LabelOne(e_id.to_owned()));
    }
    if e.is_self_loop() {
        return Err(SurgeryError::SelfLoop(e_id.to_owned()));
    }
    let (u, v) = e.ends.clone();
    let (p_keep, p_gone) = if u <= v { (u, v) } else { (v, u) };
    let s_keep = g
        .point_sign(&p_keep)
        .ok_or_else(|| SurgeryError::EdgeTouchesSurface(e_id.to_owned()))?;
    let s_gone = g
        .point_sign(&p_gone)
        .ok_or_else(|| SurgeryError::EdgeTouchesSurface(e_id.to_owned()))?;
    let a = crate::euler::other_weight(g, e_id, &p_keep)?;
    let b = crate::euler::other_weight(g, e_id, &p_gone)?;

    if s_keep == s_gone && a + b == label {
        let mut g2 = g.clone();
        g2.remove_edge(e_id)?;
        let moved = {
            let inc = g2.incident_endpoints(&p_gone);
            if inc.len() != 1 {
                return Err(SurgeryError::Footprint(format!(
                    "vertex {p_gone} does not have exactly one other edge"
                )));
            }
            inc[0].clone()
        };
        g2.replace_endpoint(&moved, &p_gone, &p_keep)?;
        g2.remove_vertex(&p_gone)?;
        let (kind, letter) = match s_keep {
            Sign::Plus => (MoveKind::ContractP, "P"),
            Sign::Minus => (MoveKind::ContractQ, "Q"),
        };
        let record = MoveRecord {
            kind,
            edge: e_id.to_owned(),
            params: (a, b),
            block: format!("{letter}({},{})", a.min(b), label),
            at: Some(p_keep),
            from: Some(p_gone),
            moved: Some(moved),
        };
        Ok((g2, record))
    } else if s_keep != s_gone && a == b && a < label {
        let w = a;
        let mut g2 = g.clone();
        g2.set_label(e_id, label - w)?;
        let record = MoveRecord {
            kind: MoveKind::RelabelPQ,
            edge: e_id.to_owned(),
            params: (w, label),
            block: format!("P#Q({},{})", label - w, label),
            at: None,
            from: None,
            moved: None,
        };
        Ok((g2, record))
    } else {
        Err(SurgeryError::NeitherCase {
            edge: e_id.to_owned(),
            n_e: edge_euler(g, e_id)?,
        })
    }
}

/// Repeatedly splits at an edge of maximal label (smallest edge id among
/// them) until every label is 1. Terminates because the total of the edge
/// labels strictly decreases each step.
pub fn reduce(g: &GraphOfWeights) -> Result<ReductionTrace, SurgeryError> {
    require_valid(g)?;
    require_admissible(g)?;
    let mut current = g.clone();
    let mut moves = Vec::new();
    let mut tallies = BlockTallies::default();
    loop {
        let max = current.max_label();
        if max <= 1 {
            break;
        }
        let target = current
            .edges()
            .find(|(_, e)| e.label == max)
            .map(|(id, _)| id.clone())
            .unwrap();
        let (next, record) = split_step(&current, &target)?;
        tallies.record(record.kind);
        moves.push(record);
        current = next;
    }
    Ok(ReductionTrace {
        moves,
        final_graph: current,
        tallies,
    })
}

/// Exact inverse of split_step on the move's footprint.
pub fn unsplit_step(g: &GraphOfWeights, m: &MoveRecord) -> Result<GraphOfWeights, SurgeryError> {
    match m.kind {
        MoveKind::ContractP | MoveKind::ContractQ => {
            let want = if m.kind == MoveKind::ContractP {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let at = m
                .at
                .as_ref()
                .ok_or_else(|| SurgeryError::Footprint("contraction record missing at=".into()))?;
            let from = m
                .from
                .as_ref()
                .ok_or_else(|| SurgeryError::Footprint("contraction record missing from=".into()))?;
            let moved = m
                .moved
                .as_ref()
                .ok_or_else(|| SurgeryError::Footprint("contraction record missing moved=".into()))?;
            let (a, b) = m.params;
            let label = a + b;
            if g.point_sign(at) != Some(want) {
                return Err(SurgeryError::Footprint(format!(
                    "vertex {at} is not a {want:?}-signed point",
                    want = want
                )));
            }
            let (w1, w2) = g.point_weights(at)?;
            if (w1.min(w2), w1.max(w2)) != (a.min(b), a.max(b)) {
                return Err(SurgeryError::Footprint(format!(
                    "vertex {at} has weights {{{w1},{w2}}}, move expects {{{a},{b}}}"
                )));
            }
            let moved_edge = g
                .edge(moved)
                .ok_or_else(|| SurgeryError::Footprint(format!("edge {moved} not present")))?;
            if !moved_edge.touches(at) {
                return Err(SurgeryError::Footprint(format!(
                    "edge {moved} is not incident to {at}"
                )));
            }
            if moved_edge.label != b {
                return Err(SurgeryError::Footprint(format!(
                    "edge {moved} has label {}, move expects {b}",
                    moved_edge.label
                )));
            }
            if g.vertex(from).is_some() {
                return Err(SurgeryError::Footprint(format!("vertex id {from} already in use")));
            }
            if g.edge(&m.edge).is_some() {
                return Err(SurgeryError::Footprint(format!(
                    "edge id {} already in use",
                    m.edge
                )));
            }
            let mut g2 = g.clone();
            g2.add_vertex(from.clone(), VertexKind::Point { sign: want })?;
            g2.replace_endpoint(moved, at, from)?;
            g2.add_edge(m.edge.clone(), at.clone(), from.clone(), label)?;
            Ok(g2)
        }
        MoveKind::RelabelPQ => {
            let (w, l) = m.params;
            let e = g
                .edge(&m.edge)
                .ok_or_else(|| SurgeryError::Footprint(format!("edge {} not present", m.edge)))?;
            if e.label != l - w {
                return Err(SurgeryError::Footprint(format!(
                    "edge {} has label {}, move expects {}",
                    m.edge,
                    e.label,
                    l - w
                )));
            }
            let (u, v) = e.ends.clone();
            let su = g.point_sign(&u);
            let sv = g.point_sign(&v);
            match (su, sv) {
                (Some(su), Some(sv)) if su == sv.opposite() => {}
                _ => {
                    return Err(SurgeryError::Footprint(format!(
                        "edge {} does not join opposite-sign points",
                        m.edge
                    )))
                }
            }
            for vtx in [&u, &v] {
                let ow = crate::euler::other_weight(g, &m.edge, vtx)?;
                if ow != w {
                    return Err(SurgeryError::Footprint(format!(
                        "other weight at {vtx} is {ow}, move expects {w}"
                    )));
                }
            }
            let mut g2 = g.clone();
            g2.set_label(&m.edge, l)?;
            Ok(g2)
        }
        MoveKind::SurfaceSwapP10 | MoveKind::SurfaceSwapQ10 => Err(SurgeryError::Footprint(
            "surface swaps are not replayable moves".into(),
        )),
    }
}

/// Converts every weight-{1,1} point into a fixed surface: sign + becomes
/// a surface with n = -1 (a Q(1,0) block is consumed), sign - becomes
/// n = +1 (a P(1,0) block). Requires all labels 1.
pub fn to_surfaces_only(
    g: &GraphOfWeights,
) -> Result<(GraphOfWeights, BlockTallies), SurgeryError> {
    require_valid(g)?;
    let max = g.max_label();
    if max > 1 {
        return Err(SurgeryError::LabelsAboveOne { max });
    }
    let mut g2 = g.clone();
    let mut tallies = BlockTallies::default();
    let points: Vec<(VertexId, Sign)> = g.points().map(|(id, s)| (id.clone(), s)).collect();
    for (id, sign) in points {
        let euler = -sign.value();
        g2.set_vertex_kind(&id, VertexKind::Surface { euler })?;
        match sign {
            Sign::Plus => tallies.record(MoveKind::SurfaceSwapQ10),
            Sign::Minus => tallies.record(MoveKind::SurfaceSwapP10),
        }
    }
    Ok((g2, tallies))
}

/// Builds a graph of weights from raw fixed-point data. Every label > 1
/// weight occurrence must be covered exactly once by sphere_pairs (point
/// indices are 0-based); label-1 stubs are matched greedily between the
/// positive side (+ points, negative-n surfaces) and the negative side
/// (- points, positive-n surfaces).
pub fn build_graph(
    points: &[(Sign, (u64, u64))],
    surfaces: &[i64],
    sphere_pairs: &[(usize, usize, u64)],
) -> Result<GraphOfWeights, SurgeryError> {
    let mut g = GraphOfWeights::new();
    let point_ids: Vec<VertexId> = (1..=points.len()).map(|i| format!("p{i}")).collect();
    let surface_ids: Vec<VertexId> = (1..=surfaces.len()).map(|j| format!("F{j}")).collect();
    for (id, (sign, _)) in point_ids.iter().zip(points) {
        g.add_point(id.clone(), *sign)?;
    }
    for (id, n) in surface_ids.iter().zip(surfaces) {
        g.add_surface(id.clone(), *n)?;
    }

    let mut uncovered: Vec<Vec<u64>> = points
        .iter()
        .map(|(_, (w1, w2))| [*w1, *w2].into_iter().filter(|w| *w > 1).collect())
        .collect();
    let mut next_edge = 1usize;
    for (i, j, w) in sphere_pairs {
        if *w <= 1 {
            return Err(SurgeryError::SphereCoverage(format!(
                "sphere pair label {w} must exceed 1"
            )));
        }
        if *i == *j {
            return Err(SurgeryError::SphereCoverage(
                "sphere pair joins a point to itself".into(),
            ));
        }
        for idx in [*i, *j] {
            let slot = uncovered
                .get_mut(idx)
                .ok_or_else(|| SurgeryError::SphereCoverage(format!("point index {idx} out of range")))?;
            let pos = slot.iter().position(|x| x == w).ok_or_else(|| {
                SurgeryError::SphereCoverage(format!(
                    "point {} has no uncovered weight {w}",
                    point_ids[idx]
                ))
            })?;
            slot.remove(pos);
        }
        g.add_edge(format!("e{next_edge}"), point_ids[*i].clone(), point_ids[*j].clone(), *w)?;
        next_edge += 1;
    }
    for (idx, slot) in uncovered.iter().enumerate() {
        if !slot.is_empty() {
            return Err(SurgeryError::SphereCoverage(format!(
                "weights {slot:?} at point {} are not covered by sphere pairs",
                point_ids[idx]
            )));
        }
    }

    let mut left: Vec<VertexId> = Vec::new();
    let mut right: Vec<VertexId> = Vec::new();
    for (id, (sign, (w1, w2))) in point_ids.iter().zip(points) {
        let stubs = [*w1, *w2].iter().filter(|w| **w == 1).count();
        let side = if *sign == Sign::Plus { &mut left } else { &mut right };
        for _ in 0..stubs {
            side.push(id.clone());
        }
    }
    for (id, n) in surface_ids.iter().zip(surfaces) {
        let (side, stubs) = if *n < 0 {
            (&mut left, (-2 * n) as usize)
        } else {
            (&mut right, (2 * n) as usize)
        };
        for _ in 0..stubs {
            side.push(id.clone());
        }
    }
    if left.len() != right.len() {
        return Err(SurgeryError::UnbalancedStubs {
            left: left.len(),
            right: right.len(),
        });
    }
    for (l, r) in left.into_iter().zip(right) {
        g.add_edge(format!("e{next_edge}"), l, r, 1)?;
        next_edge += 1;
    }
    require_valid(&g)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::formulas::check_ah;
    use crate::graph::isomorphic;
    use crate::models::{model, ModelName};

    fn constant(g: &GraphOfWeights) -> Rational {
        check_ah(g).unwrap().constant.expect("expected a constant")
    }

    #[test]
    fn split_p23_contracts() {
        let g = model(ModelName::P, 2, 3).unwrap();
        let (g2, rec) = split_step(&g, "e3").unwrap();
        assert_eq!(rec.kind, MoveKind::ContractP);
        assert_eq!(rec.block, "P(1,3)");
        assert!(g2.is_valid());
        assert!(isomorphic(&g2, &model(ModelName::S, 1, 2).unwrap()));
        // AH bookkeeping: 1 = 0 + 1
        assert_eq!(constant(&g), rat(1));
        assert_eq!(constant(&g2), rat(0));
    }

    #[test]
    fn split_s25_relabels() {
        let g = model(ModelName::S, 2, 5).unwrap();
        let (g2, rec) = split_step(&g, "e2").unwrap();
        assert_eq!(rec.kind, MoveKind::RelabelPQ);
        assert_eq!(rec.block, "P#Q(3,5)");
        assert_eq!(g2.edge("e2").unwrap().label, 3);
        assert_eq!(constant(&g2), rat(0));
    }

    #[test]
    fn split_q12_contracts() {
        let g = model(ModelName::Q, 1, 2).unwrap();
        let (g2, rec) = split_step(&g, "e3").unwrap();
        assert_eq!(rec.kind, MoveKind::ContractQ);
        assert_eq!(rec.block, "Q(1,2)");
        assert!(isomorphic(&g2, &model(ModelName::S, 1, 1).unwrap()));
        assert_eq!(constant(&g), rat(-1));
        assert_eq!(constant(&g2), rat(0));
    }

    #[test]
    fn split_rejects_label_one() {
        let g = model(ModelName::S, 1, 1).unwrap();
        assert!(matches!(split_step(&g, "e1"), Err(SurgeryError::LabelOne(_))));
    }

    #[test]
    fn reduce_s25_is_subtractive_euclid() {
        let g = model(ModelName::S, 2, 5).unwrap();
        let trace = reduce(&g).unwrap();
        // 5 -> 3 -> 1 on e2, then 2 -> 1 on e1
        let labels: Vec<(String, (u64, u64))> = trace
            .moves
            .iter()
            .map(|m| (m.edge.clone(), m.params))
            .collect();
        assert_eq!(
            labels,
            vec![
                ("e2".into(), (2, 5)),
                ("e2".into(), (2, 3)),
                ("e1".into(), (1, 2)),
            ]
        );
        assert!(trace.moves.iter().all(|m| m.kind == MoveKind::RelabelPQ));
        assert_eq!(trace.final_graph.max_label(), 1);
        assert_eq!(trace.tallies.pq, 3);
        assert!(isomorphic(&trace.final_graph, &model(ModelName::S, 1, 1).unwrap()));
    }

    #[test]
    fn reduce_p12_single_contract() {
        let g = model(ModelName::P, 1, 2).unwrap();
        let trace = reduce(&g).unwrap();
        assert_eq!(trace.moves.len(), 1);
        assert_eq!(trace.moves[0].kind, MoveKind::ContractP);
        assert_eq!(trace.final_graph.max_label(), 1);
        assert_eq!(constant(&g), constant(&trace.final_graph) + rat(1));
    }

    #[test]
    fn reduce_of_label1_graph_is_empty() {
        let g = model(ModelName::S, 1, 1).unwrap();
        let trace = reduce(&g).unwrap();
        assert!(trace.moves.is_empty());
        assert_eq!(trace.final_graph, g);
    }

    #[test]
    fn unsplit_inverts_split() {
        for (name, a, b) in [
            (ModelName::P, 2, 3),
            (ModelName::Q, 3, 5),
            (ModelName::S, 4, 7),
            (ModelName::PQ, 2, 7),
        ] {
            let g = model(name, a, b).unwrap();
            let trace = reduce(&g).unwrap();
            let mut back = trace.final_graph.clone();
            for m in trace.moves.iter().rev() {
                back = unsplit_step(&back, m).unwrap();
            }
            assert!(isomorphic(&back, &g), "{name:?}({a},{b}) round trip failed");
        }
    }

    #[test]
    fn unsplit_relabel_example() {
        // unsplit RelabelPQ(w=2, l=5) on S(2,3)'s label-3 edge gives S(2,5)
        let g = model(ModelName::S, 2, 3).unwrap();
        let m = MoveRecord {
            kind: MoveKind::RelabelPQ,
            edge: "e2".into(),
            params: (2, 5),
            block: "P#Q(3,5)".into(),
            at: None,
            from: None,
            moved: None,
        };
        let g2 = unsplit_step(&g, &m).unwrap();
        assert!(isomorphic(&g2, &model(ModelName::S, 2, 5).unwrap()));
    }

    #[test]
    fn unsplit_footprint_mismatch() {
        let g = model(ModelName::S, 2, 3).unwrap();
        let m = MoveRecord {
            kind: MoveKind::RelabelPQ,
            edge: "e2".into(),
            params: (1, 5), // edge has label 3, move expects 4
            block: "P#Q(4,5)".into(),
            at: None,
            from: None,
            moved: None,
        };
        assert!(matches!(unsplit_step(&g, &m), Err(SurgeryError::Footprint(_))));
    }

    #[test]
    fn surfaces_only_from_s11() {
        let g = model(ModelName::S, 1, 1).unwrap();
        let (g2, tallies) = to_surfaces_only(&g).unwrap();
        assert!(g2.is_valid());
        assert_eq!(g2.points().count(), 0);
        let eulers: Vec<i64> = g2.surfaces().map(|(_, n)| n).collect();
        assert_eq!(eulers.iter().sum::<i64>(), 0);
        assert_eq!(tallies.q10, 1);
        assert_eq!(tallies.p10, 1);
    }

    #[test]
    fn surfaces_only_rejects_big_labels() {
        let g = model(ModelName::S, 2, 3).unwrap();
        assert!(matches!(
            to_surfaces_only(&g),
            Err(SurgeryError::LabelsAboveOne { max: 3 })
        ));
    }

    #[test]
    fn surfaces_only_empty() {
        let (g2, tallies) = to_surfaces_only(&GraphOfWeights::new()).unwrap();
        assert_eq!(g2.vertex_count(), 0);
        assert_eq!(tallies, BlockTallies::default());
    }

    #[test]
    fn build_cp2_rotation() {
        // point +{1,1}, surface n=1, no sphere pairs
        let g = build_graph(&[(Sign::Plus, (1, 1))], &[1], &[]).unwrap();
        let mut expected = GraphOfWeights::new();
        expected.add_point("p", Sign::Plus).unwrap();
        expected.add_surface("F", 1).unwrap();
        expected.add_edge("x", "p", "F", 1).unwrap();
        expected.add_edge("y", "p", "F", 1).unwrap();
        assert!(isomorphic(&g, &expected));
    }

    #[test]
    fn build_sphere_rotation() {
        let g = build_graph(
            &[(Sign::Plus, (2, 3)), (Sign::Minus, (2, 3))],
            &[],
            &[(0, 1, 2), (0, 1, 3)],
        )
        .unwrap();
        assert!(isomorphic(&g, &model(ModelName::S, 2, 3).unwrap()));
    }

    #[test]
    fn build_rejects_unbalanced() {
        let err = build_graph(&[(Sign::Plus, (1, 1))], &[], &[]).unwrap_err();
        assert!(matches!(err, SurgeryError::UnbalancedStubs { left: 2, right: 0 }));
    }

    #[test]
    fn build_rejects_uncovered_weights() {
        let err = build_graph(&[(Sign::Plus, (2, 3)), (Sign::Minus, (2, 3))], &[], &[(0, 1, 2)])
            .unwrap_err();
        assert!(matches!(err, SurgeryError::SphereCoverage(_)));
    }

    #[test]
    fn move_line_round_trip() {
        let g = model(ModelName::P, 2, 3).unwrap();
        let trace = reduce(&g).unwrap();
        for m in &trace.moves {
            assert_eq!(MoveRecord::from_line(&m.to_line()).unwrap(), *m);
        }
    }

    #[test]
    fn pq_is_point_connected_sum_of_p_and_q() {
        // glue P(a,b) and Q(a,b) at their {a,b} vertices by removing both
        // and joining matching-label stubs
        for (a, b) in [(1, 2), (2, 5), (3, 7)] {
            let p = model(ModelName::P, a, b).unwrap();
            let q = model(ModelName::Q, a, b).unwrap();
            let mut g = GraphOfWeights::new();
            for (src, prefix) in [(&p, "x"), (&q, "y")] {
                for (id, kind) in src.vertices() {
                    if id != "p1" {
                        g.add_vertex(format!("{prefix}{id}"), *kind).unwrap();
                    }
                }
            }
            // interior edges (not touching p1) carry over
            for (src, prefix) in [(&p, "x"), (&q, "y")] {
                for (eid, e) in src.edges() {
                    if !e.touches("p1") {
                        g.add_edge(
                            format!("{prefix}{eid}"),
                            format!("{prefix}{}", e.ends.0),
                            format!("{prefix}{}", e.ends.1),
                            e.label,
                        )
                        .unwrap();
                    }
                }
            }
            // join the label-a stubs and the label-b stubs across the sum
            for label in [a, b] {
                let find = |src: &GraphOfWeights, prefix: &str| {
                    src.edges()
                        .find(|(_, e)| e.touches("p1") && e.label == label)
                        .map(|(_, e)| format!("{prefix}{}", e.other_end("p1")))
                        .unwrap()
                };
                g.add_edge(format!("j{label}"), find(&p, "x"), find(&q, "y"), label)
                    .unwrap();
            }
            assert!(isomorphic(&g, &model(ModelName::PQ, a, b).unwrap()), "PQ({a},{b})");
        }
    }
}
