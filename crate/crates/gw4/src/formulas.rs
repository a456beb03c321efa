//! Exact identities satisfied by graphs of weights: the fixed-point
//! signature identity over Q(z), its residues at z = 1, the L-genus
//! formula, the weight-1 balance, and the edge-Euler form of 3L.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::euler::edge_euler;
use crate::exact::{expand, rat, Center, Poly, RatFunc, Rational};
use crate::graph::{GraphOfWeights, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("invalid graph:\n{0}")]
    InvalidGraph(ValidationReport),
}

fn require_valid(g: &GraphOfWeights) -> Result<(), FormulaError> {
    let report = g.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(FormulaError::InvalidGraph(report))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AhReport {
    /// The full rational function: point terms minus surface terms.
    pub ah_function: RatFunc,
    /// Present iff the function is a constant; then it equals the signature.
    pub constant: Option<Rational>,
    /// Sum of point signs.
    pub signature: i64,
    /// 3 * signature, the first Pontryagin number when the identity holds.
    pub sign_times_3: i64,
}

impl AhReport {
    pub fn holds(&self) -> bool {
        self.constant
            .as_ref()
            .is_some_and(|c| *c == rat(self.signature))
    }
}

/// The signed-point term (1+z^w1)(1+z^w2)/((1-z^w1)(1-z^w2)).
pub fn point_term(w1: u64, w2: u64) -> RatFunc {
    let num = &Poly::one_plus_pow(w1 as usize) * &Poly::one_plus_pow(w2 as usize);
    let den = &Poly::one_minus_pow(w1 as usize) * &Poly::one_minus_pow(w2 as usize);
    RatFunc::new(num, den).unwrap()
}

/// The surface term 4 z n / (1-z)^2 (subtracted in the sum).
pub fn surface_term(n: i64) -> RatFunc {
    let one_minus = Poly::one_minus_pow(1);
    RatFunc::new(Poly::monomial(rat(4 * n), 1), &one_minus * &one_minus).unwrap()
}

/// The exact rational function
/// sum_i eps_i (1+z^{w_i1})(1+z^{w_i2})/((1-z^{w_i1})(1-z^{w_i2}))
///   - sum_j 4 z n_j / (1-z)^2,
/// in canonical form.
pub fn ah_sum(g: &GraphOfWeights) -> Result<RatFunc, FormulaError> {
    require_valid(g)?;
    let mut acc = RatFunc::zero();
    for (id, sign) in g.points() {
        let (w1, w2) = g.point_weights(id).unwrap();
        let term = point_term(w1, w2);
        acc = match sign.value() {
            1 => &acc + &term,
            _ => &acc - &term,
        };
    }
    for (_, n) in g.surfaces() {
        if n != 0 {
            acc = &acc - &surface_term(n);
        }
    }
    Ok(acc)
}

pub fn check_ah(g: &GraphOfWeights) -> Result<AhReport, FormulaError> {
    let ah_function = ah_sum(g)?;
    let constant = ah_function.is_constant();
    let signature: i64 = g.points().map(|(_, s)| s.value()).sum();
    Ok(AhReport {
        ah_function,
        constant,
        signature,
        sign_times_3: 3 * signature,
    })
}

/// L(M) = sum_i eps_i (w_i1^2 + w_i2^2 + 1) / (3 w_i1 w_i2); surfaces
/// contribute nothing.
pub fn l_genus(g: &GraphOfWeights) -> Result<Rational, FormulaError> {
    require_valid(g)?;
    let mut acc = Rational::zero();
    for (id, sign) in g.points() {
        let (w1, w2) = g.point_weights(id).unwrap();
        let (w1, w2) = (w1 as i64, w2 as i64);
        let term = BigRational::new(
            BigInt::from(sign.value() * (w1 * w1 + w2 * w2 + 1)),
            BigInt::from(3 * w1 * w2),
        );
        acc += term;
    }
    Ok(acc)
}

/// The t^-2 and t^-1 Laurent coefficients of the full sum at z = 1; both
/// vanish exactly when the residue identity holds.
pub fn check_residues(g: &GraphOfWeights) -> Result<(Rational, Rational), FormulaError> {
    let f = ah_sum(g)?;
    let w = expand(&f, Center::One, -2, 2);
    Ok((w.coeffs[0].clone(), w.coeffs[1].clone()))
}

/// sum_i eps_i k_i - 2 sum_j n_j, where k_i counts the label-1 edge
/// endpoints at point i; 0 for any graph of a genuine manifold.
pub fn weight1_balance(g: &GraphOfWeights) -> Result<i64, FormulaError> {
    require_valid(g)?;
    let mut acc: i64 = 0;
    for (id, sign) in g.points() {
        let k = g
            .incident_endpoints(id)
            .iter()
            .filter(|e| g.edge(e).unwrap().label == 1)
            .count() as i64;
        acc += sign.value() * k;
    }
    for (_, n) in g.surfaces() {
        acc -= 2 * n;
    }
    Ok(acc)
}

/// Returns (3 * L, sum_e n_e + sum_j n_j); equal on graphs of manifolds.
pub fn check_3l_edges(g: &GraphOfWeights) -> Result<(Rational, Rational), FormulaError> {
    require_valid(g)?;
    let three_l = l_genus(g)? * rat(3);
    let mut rhs = Rational::zero();
    for (id, _) in g.edges() {
        rhs += edge_euler(g, id).unwrap();
    }
    for (_, n) in g.surfaces() {
        rhs += rat(n);
    }
    Ok((three_l, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratq;
    use crate::graph::Sign;

    fn cp2_rotation() -> GraphOfWeights {
        let mut g = GraphOfWeights::new();
        g.add_point("p", Sign::Plus).unwrap();
        g.add_surface("F", 1).unwrap();
        g.add_edge("e1", "p", "F", 1).unwrap();
        g.add_edge("e2", "p", "F", 1).unwrap();
        g
    }

    fn two_plus_points() -> GraphOfWeights {
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Plus).unwrap();
        g.add_edge("e1", "p1", "p2", 1).unwrap();
        g.add_edge("e2", "p1", "p2", 1).unwrap();
        g
    }

    #[test]
    fn cp2_rotation_constant_is_one() {
        let report = check_ah(&cp2_rotation()).unwrap();
        assert_eq!(report.constant, Some(rat(1)));
        assert_eq!(report.signature, 1);
        assert_eq!(report.sign_times_3, 3);
        assert!(report.holds());
    }

    #[test]
    fn double_plus_graph_is_not_constant() {
        // ah_sum = 2 (1+z)^2 / (1-z)^2, verified non-constant
        let f = ah_sum(&two_plus_points()).unwrap();
        assert_eq!(f.is_constant(), None);
        let num = &Poly::one_plus_pow(1) * &Poly::one_plus_pow(1);
        let den = &Poly::one_minus_pow(1) * &Poly::one_minus_pow(1);
        let expected = RatFunc::new(num.scale(&rat(2)), den).unwrap();
        assert_eq!(f, expected);
        // series oracle agrees: the z-expansion is not [c, 0, 0, ...]
        let w = expand(&f, Center::Zero, 0, 5);
        assert!(w.coeffs[1..].iter().any(|c| !c.is_zero()));
    }

    #[test]
    fn single_surface_zero() {
        let mut g = GraphOfWeights::new();
        g.add_surface("F", 0).unwrap();
        assert_eq!(ah_sum(&g).unwrap(), RatFunc::zero());
    }

    #[test]
    fn residues_of_lonely_point() {
        // single + point with weights {1,1} (invalid as closed data, but the
        // residue computation itself is defined): 4 t^-2 + 4 t^-1 + ...
        let f = point_term(1, 1);
        let w = expand(&f, Center::One, -2, 2);
        assert_eq!(w.coeffs, vec![rat(4), rat(4)]);
    }

    #[test]
    fn cp2_rotation_residues_vanish() {
        assert_eq!(check_residues(&cp2_rotation()).unwrap(), (rat(0), rat(0)));
    }

    #[test]
    fn cp2_rotation_weight1_balance() {
        // 1*2 - 2*1 = 0
        assert_eq!(weight1_balance(&cp2_rotation()).unwrap(), 0);
    }

    #[test]
    fn cp2_rotation_3l_edges() {
        // two edges with n_e = 1 each plus n_1 = 1; 3L = 3
        assert_eq!(check_3l_edges(&cp2_rotation()).unwrap(), (rat(3), rat(3)));
    }

    #[test]
    fn l_genus_value() {
        // P(2,3)-shaped: (4+9+1)/18 - (4+1+1)/6 + (1+9+1)/9 = 1
        let mut g = GraphOfWeights::new();
        g.add_point("p1", Sign::Plus).unwrap();
        g.add_point("p2", Sign::Minus).unwrap();
        g.add_point("p3", Sign::Plus).unwrap();
        g.add_edge("e1", "p1", "p2", 2).unwrap();
        g.add_edge("e2", "p2", "p3", 1).unwrap();
        g.add_edge("e3", "p1", "p3", 3).unwrap();
        assert_eq!(l_genus(&g).unwrap(), rat(1));
        assert_eq!(ratq(14, 18) - rat(1) + ratq(11, 9), rat(1));
    }

    #[test]
    fn invalid_graph_is_rejected() {
        let mut g = GraphOfWeights::new();
        g.add_point("p", Sign::Plus).unwrap();
        assert!(matches!(ah_sum(&g), Err(FormulaError::InvalidGraph(_))));
    }
}
