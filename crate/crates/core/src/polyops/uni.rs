//! Dense univariate polynomials and rational functions over exact scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::Scalar;

/// Univariate polynomial, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    pub coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly { coeffs: vec![Scalar::one()] }
    }

    pub fn constant(c: Scalar) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> UniPoly {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(v: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(v.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    /// t^k
    pub fn t_pow(k: usize) -> UniPoly {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = Scalar::one();
        UniPoly { coeffs }
    }

    /// 1 - t^k
    pub fn one_minus_t_pow(k: usize) -> UniPoly {
        &UniPoly::one() - &UniPoly::t_pow(k)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Scalar::from_int((i + 1) as i64))
                .collect(),
        )
    }

    /// Reverse coefficients against the given degree: t^d * p(1/t).
    pub fn reciprocal(&self, d: usize) -> UniPoly {
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= d, "degree larger than reversal bound");
            coeffs[d - i] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, den: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!den.is_zero(), "division by zero polynomial");
        let dl = den.coeffs.len();
        if self.coeffs.len() < dl {
            return (UniPoly::zero(), self.clone());
        }
        let lead_inv = den.coeffs.last().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); rem.len() - dl + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dl - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[i] = c.clone();
            for (j, d) in den.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[i + j] = &rem[i + j] - &t;
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact division; None when a nonzero remainder appears.
    pub fn exact_div(&self, den: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(den);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = std::mem::replace(&mut b, r);
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.coeffs.last().unwrap().inv().unwrap();
        a.scale(&inv)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", k)?;
                }
            } else if k == 1 {
                write!(f, "{}t", c)?;
            } else {
                write!(f, "{}t^{}", c, k)?;
            }
        }
        Ok(())
    }
}

/// Univariate rational function, kept reduced with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> RatFun {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> RatFun {
        RatFun { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn from_poly(p: UniPoly) -> RatFun {
        RatFun { num: p, den: UniPoly::one() }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.exact_div(&g).unwrap();
            self.den = self.den.exact_div(&g).unwrap();
        }
        // normalize denominator monic
        let lead = self.den.coeffs.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn scale(&self, s: &Scalar) -> RatFun {
        RatFun { num: self.num.scale(s), den: self.den.clone() }
    }

    /// The function is a polynomial (denominator 1) after reduction.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        if self.den == UniPoly::one() {
            Some(&self.num)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (1-t^6) / (1-t^2) = 1 + t^2 + t^4
        let q = UniPoly::one_minus_t_pow(6).exact_div(&UniPoly::one_minus_t_pow(2)).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 0, 1, 0, 1]));
        let g = UniPoly::one_minus_t_pow(6).gcd(&UniPoly::one_minus_t_pow(4));
        // gcd = (t^2 - 1) made monic
        assert_eq!(g, UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn ratfun_reduction() {
        let a = RatFun::new(UniPoly::one_minus_t_pow(4), UniPoly::one_minus_t_pow(2));
        assert_eq!(a.as_poly().unwrap(), &UniPoly::from_ints(&[1, 0, 1]));
        let b = RatFun::new(UniPoly::one(), UniPoly::one_minus_t_pow(2));
        let sum = a.add(&b);
        assert!(sum.as_poly().is_none());
    }

    #[test]
    fn reciprocal_palindrome() {
        let p = UniPoly::from_ints(&[1, 0, 0, 0, 2, 2, 0, 0, 0, 1]);
        assert_eq!(p.reciprocal(9), p);
    }
}
