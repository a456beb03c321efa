//! Other weights, edge Euler numbers, and admissibility.
//!
//! The Euler number of an edge e with label w_e, endpoints v and v' and
//! other weights w and w' is (eps_v * w + eps_v' * w') / w_e, where a
//! surface endpoint takes eps = +1 and other weight 0. A graph is
//! admissible when every edge's Euler number is an integer.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::Rational;
use crate::graph::{EdgeId, GraphError, GraphOfWeights, VertexKind};

/// The other weight of edge e at its endpoint v: the label of v's other
/// edge if v is a point (a self-loop is its own other edge), 0 if v is a
/// surface.
pub fn other_weight(g: &GraphOfWeights, e: &str, v: &str) -> Result<u64, GraphError> {
    let edge = g
        .edge(e)
        .ok_or_else(|| GraphError::UnknownEdge(e.to_owned()))?;
    if !edge.touches(v) {
        return Err(GraphError::NotAnEndpoint {
            edge: e.to_owned(),
            vertex: v.to_owned(),
        });
    }
    match g.vertex(v) {
        None => Err(GraphError::UnknownVertex(v.to_owned())),
        Some(VertexKind::Surface { .. }) => Ok(0),
        Some(VertexKind::Point { .. }) => {
            let mut inc = g.incident_endpoints(v);
            if inc.len() != 2 {
                return Err(GraphError::PointDegree {
                    vertex: v.to_owned(),
                    degree: inc.len(),
                });
            }
            let pos = inc.iter().position(|id| id.as_str() == e).unwrap();
            inc.remove(pos);
            Ok(g.edge(inc[0]).unwrap().label)
        }
    }
}

fn epsilon(g: &GraphOfWeights, v: &str) -> i64 {
    match g.vertex(v) {
        Some(VertexKind::Point { sign }) => sign.value(),
        // a surface endpoint takes epsilon = 1
        _ => 1,
    }
}

/// n_e = (eps_v * w + eps_v' * w') / w_e, exactly.
pub fn edge_euler(g: &GraphOfWeights, e: &str) -> Result<Rational, GraphError> {
    let edge = g
        .edge(e)
        .ok_or_else(|| GraphError::UnknownEdge(e.to_owned()))?;
    let (v, vp) = (edge.ends.0.clone(), edge.ends.1.clone());
    let w = other_weight(g, e, &v)?;
    let wp = other_weight(g, e, &vp)?;
    let num = epsilon(g, &v) * w as i64 + epsilon(g, &vp) * wp as i64;
    Ok(BigRational::new(BigInt::from(num), BigInt::from(edge.label)))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// Edges whose Euler number is not an integer, with the value.
    pub non_integral: Vec<(EdgeId, Rational)>,
    /// Self-loops encountered; their Euler number uses the verbatim
    /// extension of the definition (both epsilon contributions from the
    /// one vertex).
    pub self_loops: Vec<EdgeId>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.non_integral.is_empty()
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.non_integral.is_empty() {
            write!(f, "admissible")?;
        } else {
            for (id, v) in &self.non_integral {
                writeln!(f, "edge {id} has non-integral Euler number {v}")?;
            }
        }
        for id in &self.self_loops {
            write!(f, "\nnote: self-loop {id} uses the verbatim Euler-number extension")?;
        }
        Ok(())
    }
}

pub fn is_admissible(g: &GraphOfWeights) -> AdmissibilityReport {
    let mut report = AdmissibilityReport::default();
    for (id, e) in g.edges() {
        if e.is_self_loop() {
            report.self_loops.push(id.clone());
        }
        if let Ok(n) = edge_euler(g, id) {
            if !n.is_integer() {
                report.non_integral.push((id.clone(), n));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::Sign;

    #[test]
    fn other_weight_examples() {
        // S(a,b) shape with a=2, b=3
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Minus).unwrap();
        g.add_edge("ea", "p1", "p2", 2).unwrap();
        g.add_edge("eb", "p1", "p2", 3).unwrap();
        assert_eq!(other_weight(&g, "ea", "p1").unwrap(), 3);
        assert_eq!(other_weight(&g, "eb", "p2").unwrap(), 2);
        // edge Euler number of the a edge: (3 - 3)/2 = 0
        assert_eq!(edge_euler(&g, "ea").unwrap(), rat(0));
        assert_eq!(edge_euler(&g, "eb").unwrap(), rat(0));
    }

    #[test]
    fn other_weight_at_surface_is_zero() {
        let mut g = GraphOfWeights::new();
        g.add_point("p", Sign::Plus).unwrap();
        g.add_surface("F", 1).unwrap();
        g.add_edge("e1", "p", "F", 1).unwrap();
        g.add_edge("e2", "p", "F", 1).unwrap();
        assert_eq!(other_weight(&g, "e1", "F").unwrap(), 0);
        // n_e = (1*1 + 1*0)/1 = 1 for either edge
        assert_eq!(edge_euler(&g, "e1").unwrap(), rat(1));
        assert_eq!(edge_euler(&g, "e2").unwrap(), rat(1));
    }

    #[test]
    fn self_loop_other_weight_and_euler() {
        let mut g = GraphOfWeights::new();
        g.add_point("p", Sign::Plus).unwrap();
        g.add_edge("e", "p", "p", 1).unwrap();
        assert_eq!(other_weight(&g, "e", "p").unwrap(), 1);
        assert_eq!(edge_euler(&g, "e").unwrap(), rat(2));
        let report = is_admissible(&g);
        assert!(report.is_admissible());
        assert_eq!(report.self_loops, vec!["e".to_owned()]);
    }

    #[test]
    fn not_an_endpoint() {
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Minus).unwrap();
        g.add_point("p3", Sign::Plus).unwrap();
        g.add_edge("e", "p1", "p2", 1).unwrap();
        assert!(matches!(
            other_weight(&g, "e", "p3"),
            Err(GraphError::NotAnEndpoint { .. })
        ));
    }

    #[test]
    fn non_admissible_witness() {
        // points +{3,1} and -{3,2} joined by the label-3 edge: n_e = -1/3
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Minus).unwrap();
        g.add_point("q1", Sign::Minus).unwrap();
        g.add_point("q2", Sign::Plus).unwrap();
        g.add_edge("e3", "p1", "p2", 3).unwrap();
        g.add_edge("e1", "p1", "q1", 1).unwrap();
        g.add_edge("e2", "p2", "q2", 2).unwrap();
        g.add_edge("e4", "q1", "q2", 5).unwrap();
        let n = edge_euler(&g, "e3").unwrap();
        assert_eq!(n, crate::exact::ratq(-1, 3));
        let report = is_admissible(&g);
        assert!(!report.is_admissible());
        assert!(report
            .non_integral
            .iter()
            .any(|(id, v)| id == "e3" && *v == crate::exact::ratq(-1, 3)));
    }

    #[test]
    fn integral_euler_number_with_opposite_signs() {
        // +{2,3} and -{2,5} joined by the label-2 edge: n_e = (3-5)/2 = -1
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Minus).unwrap();
        g.add_point("q1", Sign::Minus).unwrap();
        g.add_point("q2", Sign::Plus).unwrap();
        g.add_edge("e2", "p1", "p2", 2).unwrap();
        g.add_edge("ea", "p1", "q1", 3).unwrap();
        g.add_edge("eb", "p2", "q2", 5).unwrap();
        g.add_edge("ec", "q1", "q2", 7).unwrap();
        assert_eq!(edge_euler(&g, "e2").unwrap(), rat(-1));
    }
}
