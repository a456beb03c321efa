//! Constructors for the basic model graphs: the weighted sphere rotation
//! S(a,b), the weighted projective plane P(a,b) and its orientation
//! reversal Q(a,b), their connected sum P#Q(a,b), and the fixed-surface
//! models P(1,0), Q(1,0), S(1,0).
//!
//! Vertex ids are deterministic (p1..p4, F) so serialized models are
//! byte-stable.

use num_integer::Integer;

use crate::graph::{GraphOfWeights, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelName {
    S,
    P,
    Q,
    PQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSurfaceModel {
    P10,
    Q10,
    S10,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("parameters must be coprime: gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),
    #[error("parameters must satisfy 0 < a < b, got a={0}, b={1}")]
    BadOrder(u64, u64),
    #[error("parameters must be positive, got a={0}, b={1}")]
    NotPositive(u64, u64),
}

/// Builds the named model with parameters a, b.
pub fn model(name: ModelName, a: u64, b: u64) -> Result<GraphOfWeights, ModelError> {
    if a == 0 || b == 0 {
        return Err(ModelError::NotPositive(a, b));
    }
    if a.gcd(&b) != 1 {
        return Err(ModelError::NotCoprime(a, b));
    }
    if name != ModelName::S && a >= b {
        return Err(ModelError::BadOrder(a, b));
    }
    let mut g = GraphOfWeights::new();
    match name {
        ModelName::S => {
            g.add_point("p1", Sign::Plus).unwrap();
            g.add_point("p2", Sign::Minus).unwrap();
            g.add_edge("e1", "p1", "p2", a).unwrap();
            g.add_edge("e2", "p1", "p2", b).unwrap();
        }
        ModelName::P | ModelName::Q => {
            let (s1, s2, s3) = if name == ModelName::P {
                (Sign::Plus, Sign::Minus, Sign::Plus)
            } else {
                (Sign::Minus, Sign::Plus, Sign::Minus)
            };
            g.add_point("p1", s1).unwrap();
            g.add_point("p2", s2).unwrap();
            g.add_point("p3", s3).unwrap();
            g.add_edge("e1", "p1", "p2", a).unwrap();
            g.add_edge("e2", "p2", "p3", b - a).unwrap();
            g.add_edge("e3", "p1", "p3", b).unwrap();
        }
        ModelName::PQ => {
            g.add_point("p1", Sign::Plus).unwrap();
            g.add_point("p2", Sign::Minus).unwrap();
            g.add_point("p3", Sign::Plus).unwrap();
            g.add_point("p4", Sign::Minus).unwrap();
            g.add_edge("e1", "p1", "p2", a).unwrap();
            g.add_edge("e2", "p1", "p4", b - a).unwrap();
            g.add_edge("e3", "p2", "p3", b - a).unwrap();
            g.add_edge("e4", "p3", "p4", b).unwrap();
        }
    }
    Ok(g)
}

/// The three fixed-surface models. P(1,0)/Q(1,0) are separate from
/// P(a,b)/Q(a,b) since b = 0 violates those preconditions.
pub fn model_fixed_surface(name: FixedSurfaceModel) -> GraphOfWeights {
    let mut g = GraphOfWeights::new();
    match name {
        FixedSurfaceModel::P10 => {
            g.add_point("p1", Sign::Plus).unwrap();
            g.add_surface("F", 1).unwrap();
            g.add_edge("e1", "p1", "F", 1).unwrap();
            g.add_edge("e2", "p1", "F", 1).unwrap();
        }
        FixedSurfaceModel::Q10 => {
            g.add_point("p1", Sign::Minus).unwrap();
            g.add_surface("F", -1).unwrap();
            g.add_edge("e1", "p1", "F", 1).unwrap();
            g.add_edge("e2", "p1", "F", 1).unwrap();
        }
        FixedSurfaceModel::S10 => {
            g.add_surface("F", 0).unwrap();
        }
    }
    g
}
