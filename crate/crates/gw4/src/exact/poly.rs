use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Arbitrary-precision rational number, always kept reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn ratq(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense univariate polynomial over the rationals. Index i holds the
/// coefficient of z^i; the trailing coefficient is nonzero unless the
/// polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// c * z^exp
    pub fn monomial(c: Rational, exp: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Poly { coeffs }
    }

    /// 1 + z^w
    pub fn one_plus_pow(w: usize) -> Self {
        &Poly::one() + &Poly::monomial(Rational::one(), w)
    }

    /// 1 - z^w
    pub fn one_minus_pow(w: usize) -> Self {
        &Poly::one() - &Poly::monomial(Rational::one(), w)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient, or None for zero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Leading coefficient forced to 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Divide by z^k; the k lowest coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Poly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Quotient and remainder, deg(rem) < deg(divisor).
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), ExactError> {
        let dl = divisor.leading().ok_or(ExactError::DivisionByZero)?;
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / dl;
            for j in 0..dd {
                let sub = &q * &divisor.coeffs[j];
                rem[i - dd + j] -= sub;
            }
            rem[i] = Rational::zero();
            quot[i - dd] = q;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor. Panics if both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        // Primitive PRS over the integers keeps coefficients small.
        let mut a = primitive_int(self);
        let mut b = primitive_int(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = pseudo_rem(&a, &b);
            if r.is_empty() {
                return int_to_poly(&b).monic();
            }
            a = b;
            b = primitive(r);
        }
    }

    /// p(1 + t): coefficients of the composition in the variable t.
    pub fn compose_shift_one(&self) -> Poly {
        let mut res = Poly::zero();
        for c in self.coeffs.iter().rev() {
            // res = res * (t + 1) + c
            let mut next = vec![Rational::zero(); res.coeffs.len() + 1];
            for (i, a) in res.coeffs.iter().enumerate() {
                next[i] += a;
                next[i + 1] += a;
            }
            if next.is_empty() {
                next.push(Rational::zero());
            }
            next[0] += c;
            res = Poly::from_coeffs(next);
        }
        res
    }
}

/// Clear denominators and strip integer content; leading coefficient positive.
fn primitive_int(p: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in &p.coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive(ints)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c /= &content;
    }
    v
}

/// Pseudo-remainder of a by b over the integers (b nonzero, deg a >= deg b
/// not required).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() < b.len() {
        return a.to_vec();
    }
    let lb = b.last().unwrap().clone();
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let lead = rem[i].clone();
        for (j, c) in rem.iter_mut().enumerate() {
            if j != i {
                *c *= &lb;
            }
        }
        for j in 0..db {
            let sub = &lead * &b[j];
            rem[i - db + j] -= sub;
        }
        rem[i] = BigInt::zero();
    }
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    rem
}

fn int_to_poly(v: &[BigInt]) -> Poly {
    Poly::from_coeffs(
        v.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", c)?,
                1 if c.is_one() => write!(f, "z")?,
                1 => write!(f, "{}*z", c)?,
                _ if c.is_one() => write!(f, "z^{}", i)?,
                _ => write!(f, "{}*z^{}", c, i)?,
            }
        }
        Ok(())
    }
}
