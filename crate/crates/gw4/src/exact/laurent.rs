use num_traits::Zero;

use super::poly::{Poly, Rational};
use super::ratfunc::RatFunc;

/// Expansion center: powers of z, or powers of t = z - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    Zero,
    One,
}

/// A window of exact Laurent coefficients: orders
/// min_order .. min_order + coeffs.len() - 1 in z (center 0) or in
/// t = z - 1 (center 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentWindow {
    pub center: Center,
    pub min_order: i64,
    pub coeffs: Vec<Rational>,
}

/// Exact Laurent coefficients of f over the requested window. Orders below
/// the pole order come back as exact zeros.
pub fn expand(f: &RatFunc, center: Center, min_order: i64, count: usize) -> LaurentWindow {
    assert!(count >= 1, "window length must be at least 1");
    let (num, den) = match center {
        Center::Zero => (f.num().clone(), f.den().clone()),
        Center::One => (
            f.num().compose_shift_one(),
            f.den().compose_shift_one(),
        ),
    };
    let coeffs = series_window(&num, &den, min_order, count);
    LaurentWindow {
        center,
        min_order,
        coeffs,
    }
}

/// Coefficients of num/den as a Laurent series around 0, for the orders
/// min_order .. min_order + count - 1. den must be nonzero.
fn series_window(num: &Poly, den: &Poly, min_order: i64, count: usize) -> Vec<Rational> {
    if num.is_zero() {
        return vec![Rational::zero(); count];
    }
    let vn = num.order().unwrap();
    let vd = den.order().unwrap();
    let lead = vn as i64 - vd as i64;
    let unit_num = num.shift_down(vn);
    let unit_den = den.shift_down(vd);
    let max_order = min_order + count as i64 - 1;
    if max_order < lead {
        return vec![Rational::zero(); count];
    }
    // Series c of unit_num/unit_den: c_k = (n_k - sum_{i=1..k} d_i c_{k-i}) / d_0
    let terms = (max_order - lead) as usize + 1;
    let d0 = unit_den.coeff(0);
    let mut c: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = unit_num.coeff(k);
        for i in 1..=k {
            let di = unit_den.coeff(i);
            if !di.is_zero() {
                acc -= di * &c[k - i];
            }
        }
        c.push(acc / &d0);
    }
    (min_order..=max_order)
        .map(|ord| {
            if ord < lead {
                Rational::zero()
            } else {
                c[(ord - lead) as usize].clone()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{rat, ratq};
    use crate::exact::ExactError;

    #[test]
    fn pole_at_one() {
        // z/(1-z)^2 = t^-2 + t^-1 around z = 1
        let den = {
            let m = Poly::one_minus_pow(1);
            &m * &m
        };
        let f = RatFunc::new(Poly::monomial(rat(1), 1), den).unwrap();
        let w = expand(&f, Center::One, -2, 4);
        assert_eq!(w.coeffs, vec![rat(1), rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn point_term_at_one() {
        // (1+z^2)(1+z^3)/((1-z^2)(1-z^3)) has t-expansion
        // 2/3 t^-2 + 2/3 t^-1 + 7/9 + ...
        let (a, b) = (2usize, 3usize);
        let num = &Poly::one_plus_pow(a) * &Poly::one_plus_pow(b);
        let den = &Poly::one_minus_pow(a) * &Poly::one_minus_pow(b);
        let f = RatFunc::new(num, den).unwrap();
        let w = expand(&f, Center::One, -2, 3);
        assert_eq!(w.coeffs, vec![ratq(2, 3), ratq(2, 3), ratq(7, 9)]);
    }

    #[test]
    fn constant_at_zero() {
        let w = expand(&RatFunc::one(), Center::Zero, 0, 3);
        assert_eq!(w.coeffs, vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn window_below_pole_is_zeros() {
        // 1/z around 0, asked for orders -3..-2
        let f = RatFunc::new(Poly::one(), Poly::monomial(rat(1), 1)).unwrap();
        let w = expand(&f, Center::Zero, -3, 2);
        assert_eq!(w.coeffs, vec![rat(0), rat(0)]);
        let w = expand(&f, Center::Zero, -1, 2);
        assert_eq!(w.coeffs, vec![rat(1), rat(0)]);
    }

    #[test]
    fn zero_function() {
        let w = expand(&RatFunc::zero(), Center::One, -2, 3);
        assert_eq!(w.coeffs, vec![rat(0); 3]);
    }

    #[test]
    fn geometric_series() {
        // 1/(1-z) = 1 + z + z^2 + ...
        let f = RatFunc::new(Poly::one(), Poly::one_minus_pow(1)).unwrap();
        let w = expand(&f, Center::Zero, 0, 4);
        assert_eq!(w.coeffs, vec![rat(1); 4]);
        // sanity: RatFunc division agrees
        let g = f.div(&f).map_err(|_: ExactError| ()).unwrap();
        assert_eq!(g, RatFunc::one());
    }
}
