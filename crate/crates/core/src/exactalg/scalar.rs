//! Exact scalars: rationals and cyclotomic field elements.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::cyclotomic::{self, CycloField};
use super::ExactError;

/// An exact scalar: an element of `Q` (order 1) or of the cyclotomic field
/// `Q(zeta_k)` (order `k`), stored as rational coordinates with respect to
/// the power basis of `Q[x]/Phi_k(x)`. The representation is canonical:
/// equal values have identical coordinate vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    order: u32,
    coords: Vec<BigRational>,
}

impl Scalar {
    /// Canonical form: a value lying in `Q` is always stored with order 1,
    /// so equal values have identical representations across fields.
    fn canon(order: u32, coords: Vec<BigRational>) -> Scalar {
        if order != 1 && coords[1..].iter().all(|c| c.is_zero()) {
            return Scalar { order: 1, coords: vec![coords.into_iter().next().unwrap()] };
        }
        Scalar { order, coords }
    }

    pub fn zero() -> Scalar {
        Scalar { order: 1, coords: vec![BigRational::zero()] }
    }

    pub fn one() -> Scalar {
        Scalar { order: 1, coords: vec![BigRational::one()] }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar { order: 1, coords: vec![BigRational::from(BigInt::from(n))] }
    }

    pub fn from_frac(num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        Scalar {
            order: 1,
            coords: vec![BigRational::new(BigInt::from(num), BigInt::from(den))],
        }
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar { order: 1, coords: vec![q] }
    }

    /// The primitive root of unity `zeta_k`. For k = 1 this is 1, for k = 2
    /// it is -1; otherwise a genuine cyclotomic element.
    pub fn zeta(k: u32) -> Scalar {
        assert!(k >= 1);
        let f = cyclotomic::field(k);
        if f.degree == 1 {
            // zeta_1 = 1, zeta_2 = -1
            return if k == 1 { Scalar::one() } else { -Scalar::one() };
        }
        let mut coords = vec![BigRational::zero(); f.degree];
        coords[1] = BigRational::one();
        Scalar { order: k, coords }
    }

    /// zeta_k^e, reduced.
    pub fn zeta_pow(k: u32, e: i64) -> Scalar {
        let e = e.rem_euclid(k as i64) as u32;
        Scalar::zeta(k).pow(e as u64)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Rational part check: the value lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn field(&self) -> Arc<CycloField> {
        cyclotomic::field(self.order)
    }

    /// Re-embed into the cyclotomic field of the given order. Only the
    /// rational field (order 1) can be promoted; distinct cyclotomic orders
    /// are never mixed.
    pub fn promote(&self, order: u32) -> Result<Scalar, ExactError> {
        if self.order == order {
            return Ok(self.clone());
        }
        if self.order == 1 {
            let f = cyclotomic::field(order);
            let mut coords = vec![BigRational::zero(); f.degree];
            coords[0] = self.coords[0].clone();
            return Ok(Scalar { order, coords });
        }
        if order == 1 {
            if let Some(q) = self.as_rational() {
                return Ok(Scalar::from_rational(q.clone()));
            }
        }
        Err(ExactError::FieldMismatch(self.order, order))
    }

    fn unify(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        if a.order == 1 {
            return (a.promote(b.order).unwrap(), b.clone());
        }
        if b.order == 1 {
            return (a.clone(), b.promote(a.order).unwrap());
        }
        panic!("field mismatch: orders {} and {}", a.order, b.order);
    }

    pub fn inv(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Scalar::from_rational(self.coords[0].recip()));
        }
        // Extended Euclid in Q[x] against the minimal polynomial.
        let f = self.field();
        let inv = poly_mod_inverse(&self.coords, &f.min_poly)
            .ok_or_else(|| ExactError::Internal("non-invertible cyclotomic element".into()))?;
        let mut coords = inv;
        coords.resize(f.degree, BigRational::zero());
        Ok(Scalar::canon(self.order, coords))
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation `zeta_k -> zeta_k^{-1}` (identity on rationals).
    pub fn conjugate(&self) -> Scalar {
        if self.order == 1 {
            return self.clone();
        }
        let f = self.field();
        Scalar::canon(self.order, f.conjugate(&self.coords))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 || self.as_rational().is_some() {
            return write!(f, "{}", self.coords[0]);
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", c)?;
            } else if i == 1 {
                write!(f, "{}*z{}", c, self.order)?;
            } else {
                write!(f, "{}*z{}^{}", c, self.order, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Inverse of `a` modulo the monic polynomial `m`, both constant-first over Q.
fn poly_mod_inverse(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // extended Euclid: maintain r0 = m, r1 = a, and s-coefficients for a.
    let trim = |v: &mut Vec<BigRational>| {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    };
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut quo = vec![BigRational::zero(); rem.len().saturating_sub(r1.len()) + 1];
        let lead = r1.last().unwrap().clone();
        for i in (0..quo.len()).rev() {
            if i + r1.len() - 1 >= rem.len() {
                continue;
            }
            let c = &rem[i + r1.len() - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            quo[i] = c.clone();
            for (j, d) in r1.iter().enumerate() {
                let t = &c * d;
                rem[i + j] -= t;
            }
        }
        trim(&mut rem);
        // s_new = s0 - quo * s1
        let mut s_new = s0.clone();
        s_new.resize(s_new.len().max(quo.len() + s1.len() - 1), BigRational::zero());
        for (i, q) in quo.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (j, s) in s1.iter().enumerate() {
                let t = q * s;
                s_new[i + j] -= t;
            }
        }
        trim(&mut s_new);
        r0 = std::mem::take(&mut r1);
        r1 = rem;
        s0 = std::mem::take(&mut s1);
        s1 = s_new;
    }
    // r0 is the gcd; must be a nonzero constant for invertibility.
    if r0.len() != 1 || r0[0].is_zero() {
        return None;
    }
    let g = r0[0].recip();
    Some(s0.iter().map(|c| c * &g).collect())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let (mut a, b) = Scalar::unify(self, rhs);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        Scalar::canon(a.order, a.coords)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let (mut a, b) = Scalar::unify(self, rhs);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x -= y;
        }
        Scalar::canon(a.order, a.coords)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.order == rhs.order && self.order == 1 {
            return Scalar::from_rational(&self.coords[0] * &rhs.coords[0]);
        }
        let (a, b) = Scalar::unify(self, rhs);
        // Fast path: one side rational.
        if let Some(q) = a.as_rational() {
            let coords = b.coords.iter().map(|c| c * q).collect();
            return Scalar::canon(b.order, coords);
        }
        if let Some(q) = b.as_rational() {
            let coords = a.coords.iter().map(|c| c * q).collect();
            return Scalar::canon(a.order, coords);
        }
        let d = a.coords.len();
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let f = cyclotomic::field(a.order);
        Scalar::canon(a.order, f.reduce(conv))
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { order: self.order, coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Scalar {
    /// Absolute value of the rational part numerator/denominator sizes, used
    /// for height bookkeeping in the modular engine.
    pub fn rational_abs_bound(&self) -> BigRational {
        self.coords.iter().map(|c| c.abs()).fold(BigRational::zero(), |a, b| a.max(b))
    }
}
