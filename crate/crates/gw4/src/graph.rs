//! The graph-of-weights data model: signed points with coprime weight
//! pairs, surfaces carrying a normal Euler number, and labeled multigraph
//! edges. Parallel edges and self-loops are first-class.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

pub type VertexId = String;
pub type EdgeId = String;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Point { sign: Sign },
    Surface { euler: i64 },
}

impl VertexKind {
    pub fn is_point(&self) -> bool {
        matches!(self, VertexKind::Point { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub ends: (VertexId, VertexId),
    pub label: u64,
}

impl Edge {
    pub fn is_self_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    pub fn touches(&self, v: &str) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }

    /// The endpoint of this edge opposite to v (v itself for a self-loop).
    pub fn other_end(&self, v: &str) -> &VertexId {
        if self.ends.0 == v {
            &self.ends.1
        } else {
            &self.ends.0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} is not a point")]
    NotAPoint(VertexId),
    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotAnEndpoint { edge: EdgeId, vertex: VertexId },
    #[error("point {vertex} has {degree} edge endpoints, expected 2")]
    PointDegree { vertex: VertexId, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    PointDegree {
        vertex: VertexId,
        degree: usize,
    },
    NonCoprimeWeights {
        vertex: VertexId,
        weights: (u64, u64),
    },
    SelfLoopLabel {
        edge: EdgeId,
        label: u64,
    },
    SurfaceDegree {
        vertex: VertexId,
        expected: usize,
        actual: usize,
    },
    SurfaceEdgeLabel {
        vertex: VertexId,
        edge: EdgeId,
        label: u64,
    },
    LabelRequiresPoints {
        edge: EdgeId,
        label: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PointDegree { vertex, degree } => {
                write!(f, "point {vertex} has {degree} edge endpoints, expected 2")
            }
            Violation::NonCoprimeWeights { vertex, weights } => write!(
                f,
                "non-coprime weights at point {vertex}: {{{}, {}}}",
                weights.0, weights.1
            ),
            Violation::SelfLoopLabel { edge, label } => {
                write!(f, "self-loop {edge} at a point must have label 1, has {label}")
            }
            Violation::SurfaceDegree {
                vertex,
                expected,
                actual,
            } => write!(
                f,
                "surface {vertex} has {actual} edge endpoints, expected {expected}"
            ),
            Violation::SurfaceEdgeLabel { vertex, edge, label } => write!(
                f,
                "surface {vertex} carries edge {edge} with label {label}, expected 1"
            ),
            Violation::LabelRequiresPoints { edge, label } => write!(
                f,
                "edge {edge} with label {label} > 1 must join two points"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Multigraph of points and surfaces with labeled edges. Immutable value
/// semantics: all queries are pure; surgery clones and edits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphOfWeights {
    vertices: BTreeMap<VertexId, VertexKind>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl GraphOfWeights {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_point(&mut self, id: impl Into<VertexId>, sign: Sign) -> Result<(), GraphError> {
        self.add_vertex(id.into(), VertexKind::Point { sign })
    }

    pub fn add_surface(&mut self, id: impl Into<VertexId>, euler: i64) -> Result<(), GraphError> {
        self.add_vertex(id.into(), VertexKind::Surface { euler })
    }

    pub fn add_vertex(&mut self, id: VertexId, kind: VertexKind) -> Result<(), GraphError> {
        if self.vertices.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.vertices.insert(id, kind);
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        a: impl Into<VertexId>,
        b: impl Into<VertexId>,
        label: u64,
    ) -> Result<(), GraphError> {
        let id = id.into();
        let (a, b) = (a.into(), b.into());
        if self.edges.contains_key(&id) {
            return Err(GraphError::DuplicateEdge(id));
        }
        for v in [&a, &b] {
            if !self.vertices.contains_key(v) {
                return Err(GraphError::UnknownVertex(v.clone()));
            }
        }
        self.edges.insert(id, Edge { ends: (a, b), label });
        Ok(())
    }

    pub fn remove_edge(&mut self, id: &str) -> Result<Edge, GraphError> {
        self.edges
            .remove(id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_owned()))
    }

    /// Removes an isolated vertex.
    pub fn remove_vertex(&mut self, id: &str) -> Result<VertexKind, GraphError> {
        assert!(
            self.edges.values().all(|e| !e.touches(id)),
            "removing vertex {id} with incident edges"
        );
        self.vertices
            .remove(id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_owned()))
    }

    pub fn set_label(&mut self, id: &str, label: u64) -> Result<(), GraphError> {
        let e = self
            .edges
            .get_mut(id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_owned()))?;
        e.label = label;
        Ok(())
    }

    /// Replaces one occurrence of `from` among the endpoints of `edge` by `to`.
    pub fn replace_endpoint(&mut self, edge: &str, from: &str, to: &str) -> Result<(), GraphError> {
        if !self.vertices.contains_key(to) {
            return Err(GraphError::UnknownVertex(to.to_owned()));
        }
        let e = self
            .edges
            .get_mut(edge)
            .ok_or_else(|| GraphError::UnknownEdge(edge.to_owned()))?;
        if e.ends.0 == from {
            e.ends.0 = to.to_owned();
        } else if e.ends.1 == from {
            e.ends.1 = to.to_owned();
        } else {
            return Err(GraphError::NotAnEndpoint {
                edge: edge.to_owned(),
                vertex: from.to_owned(),
            });
        }
        Ok(())
    }

    pub fn set_vertex_kind(&mut self, id: &str, kind: VertexKind) -> Result<(), GraphError> {
        let k = self
            .vertices
            .get_mut(id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_owned()))?;
        *k = kind;
        Ok(())
    }

    pub fn vertex(&self, id: &str) -> Option<&VertexKind> {
        self.vertices.get(id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, &VertexKind)> {
        self.vertices.iter()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &Edge)> {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn points(&self) -> impl Iterator<Item = (&VertexId, Sign)> {
        self.vertices.iter().filter_map(|(id, k)| match k {
            VertexKind::Point { sign } => Some((id, *sign)),
            VertexKind::Surface { .. } => None,
        })
    }

    pub fn surfaces(&self) -> impl Iterator<Item = (&VertexId, i64)> {
        self.vertices.iter().filter_map(|(id, k)| match k {
            VertexKind::Surface { euler } => Some((id, *euler)),
            VertexKind::Point { .. } => None,
        })
    }

    pub fn point_sign(&self, id: &str) -> Option<Sign> {
        match self.vertices.get(id) {
            Some(VertexKind::Point { sign }) => Some(*sign),
            _ => None,
        }
    }

    /// Edge ids incident to v; a self-loop appears twice.
    pub fn incident_endpoints(&self, v: &str) -> Vec<&EdgeId> {
        let mut out = Vec::new();
        for (id, e) in &self.edges {
            if e.ends.0 == v {
                out.push(id);
            }
            if e.ends.1 == v {
                out.push(id);
            }
        }
        out
    }

    /// The two incident edge labels of a point (a self-loop contributes
    /// its label twice).
    pub fn point_weights(&self, v: &str) -> Result<(u64, u64), GraphError> {
        match self.vertices.get(v) {
            None => return Err(GraphError::UnknownVertex(v.to_owned())),
            Some(VertexKind::Surface { .. }) => return Err(GraphError::NotAPoint(v.to_owned())),
            Some(VertexKind::Point { .. }) => {}
        }
        let inc = self.incident_endpoints(v);
        if inc.len() != 2 {
            return Err(GraphError::PointDegree {
                vertex: v.to_owned(),
                degree: inc.len(),
            });
        }
        Ok((self.edges[inc[0]].label, self.edges[inc[1]].label))
    }

    pub fn max_label(&self) -> u64 {
        self.edges.values().map(|e| e.label).max().unwrap_or(1)
    }

    /// Labels of all edges between u and v (for u == v: self-loops at u),
    /// sorted. Used for isomorphism checking.
    fn labels_between(&self, u: &str, v: &str) -> Vec<u64> {
        let mut labels: Vec<u64> = self
            .edges
            .values()
            .filter(|e| {
                if u == v {
                    e.ends.0 == u && e.ends.1 == u
                } else {
                    (e.ends.0 == u && e.ends.1 == v) || (e.ends.0 == v && e.ends.1 == u)
                }
            })
            .map(|e| e.label)
            .collect();
        labels.sort_unstable();
        labels
    }

    /// Checks the defining invariants of a graph of weights. Violations are
    /// data, not failures: the report lists every one with the offending id.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (id, kind) in &self.vertices {
            let inc = self.incident_endpoints(id);
            match kind {
                VertexKind::Point { .. } => {
                    if inc.len() != 2 {
                        violations.push(Violation::PointDegree {
                            vertex: id.clone(),
                            degree: inc.len(),
                        });
                        continue;
                    }
                    let (w1, w2) = (self.edges[inc[0]].label, self.edges[inc[1]].label);
                    if inc[0] == inc[1] {
                        // self-loop; coprimality of {w, w} forces label 1
                        if w1 != 1 {
                            violations.push(Violation::SelfLoopLabel {
                                edge: inc[0].clone(),
                                label: w1,
                            });
                        }
                    } else if w1.gcd(&w2) != 1 {
                        violations.push(Violation::NonCoprimeWeights {
                            vertex: id.clone(),
                            weights: (w1, w2),
                        });
                    }
                }
                VertexKind::Surface { euler } => {
                    let expected = 2 * euler.unsigned_abs() as usize;
                    if inc.len() != expected {
                        violations.push(Violation::SurfaceDegree {
                            vertex: id.clone(),
                            expected,
                            actual: inc.len(),
                        });
                    }
                    let mut seen = std::collections::BTreeSet::new();
                    for eid in inc {
                        let label = self.edges[eid].label;
                        if label != 1 && seen.insert(eid.clone()) {
                            violations.push(Violation::SurfaceEdgeLabel {
                                vertex: id.clone(),
                                edge: eid.clone(),
                                label,
                            });
                        }
                    }
                }
            }
        }
        for (id, e) in &self.edges {
            if e.label > 1 {
                let both_points = [&e.ends.0, &e.ends.1]
                    .iter()
                    .all(|v| self.vertices.get(*v).is_some_and(|k| k.is_point()));
                if !both_points {
                    violations.push(Violation::LabelRequiresPoints {
                        edge: id.clone(),
                        label: e.label,
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

/// Vertex signature used to prune the isomorphism search: kind data plus
/// the sorted multiset of incident labels.
fn signature(g: &GraphOfWeights, v: &str) -> (VertexKindKey, Vec<u64>) {
    let kind = match g.vertex(v).unwrap() {
        VertexKind::Point { sign } => VertexKindKey::Point(*sign),
        VertexKind::Surface { euler } => VertexKindKey::Surface(*euler),
    };
    let mut labels: Vec<u64> = g
        .incident_endpoints(v)
        .iter()
        .map(|e| g.edge(e).unwrap().label)
        .collect();
    labels.sort_unstable();
    (kind, labels)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum VertexKindKey {
    Point(Sign),
    Surface(i64),
}

/// True iff a vertex bijection exists preserving kind, sign, Euler number,
/// and the labeled multigraph structure. Backtracking with signature
/// pruning; the graphs at hand are small.
pub fn isomorphic(g1: &GraphOfWeights, g2: &GraphOfWeights) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let vs1: Vec<&VertexId> = g1.vertices.keys().collect();
    let vs2: Vec<&VertexId> = g2.vertices.keys().collect();
    let sig1: Vec<_> = vs1.iter().map(|v| signature(g1, v)).collect();
    let sig2: Vec<_> = vs2.iter().map(|v| signature(g2, v)).collect();
    {
        let mut a = sig1.clone();
        let mut b = sig2.clone();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
    }
    let mut assigned: Vec<Option<usize>> = vec![None; vs1.len()];
    let mut used = vec![false; vs2.len()];
    fn search(
        g1: &GraphOfWeights,
        g2: &GraphOfWeights,
        vs1: &[&VertexId],
        vs2: &[&VertexId],
        sig1: &[(VertexKindKey, Vec<u64>)],
        sig2: &[(VertexKindKey, Vec<u64>)],
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        if depth == vs1.len() {
            return true;
        }
        for cand in 0..vs2.len() {
            if used[cand] || sig1[depth] != sig2[cand] {
                continue;
            }
            // edges to previously assigned vertices (and self-loops) must match
            let ok = (0..=depth).all(|prev| {
                let img = if prev == depth { cand } else { assigned[prev].unwrap() };
                g1.labels_between(vs1[depth], vs1[prev])
                    == g2.labels_between(vs2[cand], vs2[img])
            });
            if !ok {
                continue;
            }
            assigned[depth] = Some(cand);
            used[cand] = true;
            if search(g1, g2, vs1, vs2, sig1, sig2, assigned, used, depth + 1) {
                return true;
            }
            assigned[depth] = None;
            used[cand] = false;
        }
        false
    }
    search(
        g1, g2, &vs1, &vs2, &sig1, &sig2, &mut assigned, &mut used, 0,
    )
}
