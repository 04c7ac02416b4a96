//! Sparse multivariate polynomials over exact scalars.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One};

use super::monomial::Mono;
use crate::exactalg::Scalar;

/// Sparse multivariate polynomial. Terms are kept in ascending graded-lex
/// order with no zero coefficients; the representation is canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Mono, Scalar>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> MultiPoly {
        MultiPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> MultiPoly {
        MultiPoly::constant(n_vars, Scalar::one())
    }

    pub fn constant(n_vars: usize, c: Scalar) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(n_vars), c);
        }
        MultiPoly { n_vars, terms }
    }

    /// The coordinate function x_i.
    pub fn var(i: usize, n_vars: usize) -> MultiPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(i, n_vars), Scalar::one());
        MultiPoly { n_vars, terms }
    }

    pub fn from_terms(n_vars: usize, entries: Vec<(Mono, Scalar)>) -> MultiPoly {
        let mut p = MultiPoly::zero(n_vars);
        for (m, c) in entries {
            p.add_term(m, c);
        }
        p
    }

    /// A linear form with the given coordinate coefficients.
    pub fn linear(coeffs: &[Scalar]) -> MultiPoly {
        let n = coeffs.len();
        let mut p = MultiPoly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Mono::var(i, n), c.clone());
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Mono::unit(self.n_vars))
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: usize) -> MultiPoly {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        debug_assert_eq!(m.n_vars(), self.n_vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = &*e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n_vars);
        }
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(self.n_vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable i.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n_vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] = e - 1;
            out.add_term(m2, c * &Scalar::from_int(e as i64));
        }
        out
    }

    /// Directional derivative with coordinate coefficients `xi`.
    pub fn dir_derivative(&self, xi: &[Scalar]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n_vars);
        for (i, c) in xi.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.derivative(i), c);
            }
        }
        out
    }

    /// Substitute `x_i -> forms[i]`; the forms may live in a different
    /// variable count. Used for group actions and coordinate changes.
    pub fn substitute_linear(&self, forms: &[MultiPoly]) -> MultiPoly {
        assert_eq!(forms.len(), self.n_vars);
        let out_vars = forms.first().map(|f| f.n_vars()).unwrap_or(0);
        // cache powers of each substituted form
        let mut powers: Vec<Vec<MultiPoly>> = forms.iter().map(|f| vec![MultiPoly::one(out_vars), f.clone()]).collect();
        let mut out = MultiPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut prod = MultiPoly::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &forms[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e];
            }
            out = &out + &prod;
        }
        out
    }

    /// p(Mx): substitute x_i by the i-th row of the matrix as a linear form.
    pub fn compose_matrix(&self, mat: &[Vec<Scalar>]) -> MultiPoly {
        let forms: Vec<MultiPoly> = mat.iter().map(|row| MultiPoly::linear(row)).collect();
        self.substitute_linear(&forms)
    }

    /// Full evaluation at a point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as u64);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Exact division; None if the divisor does not divide exactly.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (dm, dc) = divisor.terms.iter().next_back().unwrap();
        let dc_inv = dc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.n_vars);
        while let Some((rm, rc)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(dm)?;
            let qc = &rc * &dc_inv;
            quot.add_term(qm.clone(), qc.clone());
            // rem -= (qc x^qm) * divisor
            for (m, c) in &divisor.terms {
                rem.add_term(qm.mul(m), -&(&qc * c));
            }
        }
        Some(quot)
    }

    /// Largest k with divisor^k | self (0 for non-divisible or zero input).
    pub fn divisibility_order(&self, divisor: &MultiPoly) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(divisor) {
            k += 1;
            cur = q;
            if cur.is_zero() {
                break;
            }
        }
        k
    }

    /// The single cyclotomic order appearing among coefficients (1 if all
    /// rational). Panics on genuinely mixed orders, which cannot be
    /// constructed through public arithmetic.
    pub fn field_order(&self) -> u32 {
        let mut order = 1;
        for c in self.terms.values() {
            let o = c.order();
            if o != 1 {
                if order == 1 {
                    order = o;
                } else if order != o {
                    panic!("mixed cyclotomic orders in one polynomial");
                }
            }
        }
        order
    }

    /// Clears denominators: returns the scaled polynomial and the positive
    /// integer multiplier used. Only meaningful over the rationals.
    pub fn clear_denominators(&self) -> (MultiPoly, BigInt) {
        use num::Integer;
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            for coord in c.coords() {
                lcm = lcm.lcm(coord.denom());
            }
        }
        let s = Scalar::from_rational(num::BigRational::from(lcm.clone()));
        (self.scale(&s), lcm)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n_vars, rhs.n_vars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.n_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = m.degree() == 0;
            if is_const || !c.is_one() {
                if c.as_rational().is_some() {
                    write!(f, "{}", c)?;
                } else {
                    write!(f, "({})", c)?;
                }
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn product_degree_adds() {
        let p = &x(0, 2) + &x(1, 2);
        let q = &(&x(0, 2) * &x(0, 2)) - &x(1, 2);
        let pq = &p * &q;
        assert_eq!(pq.degree(), Some(3));
        assert_eq!(p.degree().unwrap() + q.degree().unwrap(), 3);
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let p = &x(0, 1) + &x(0, 1);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let d = &x(0, n) - &x(1, n);
        let p = &(&d * &d) * &d;
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, &d * &d);
        let not_div = &x(0, n) + &MultiPoly::one(n);
        assert!(not_div.exact_div(&d).is_none());
        assert_eq!(p.divisibility_order(&d), 3);
    }

    #[test]
    fn substitution_swap() {
        let n = 2;
        let p = &(&x(0, n) * &x(0, n)) + &x(1, n); // x1^2 + x2
        let swapped = p.substitute_linear(&[x(1, n), x(0, n)]);
        let expected = &(&x(1, n) * &x(1, n)) + &x(0, n);
        assert_eq!(swapped, expected);
    }

    #[test]
    fn display_reads_leading_first() {
        let n = 2;
        let p = &(&x(0, n) * &x(1, n)) + &MultiPoly::constant(n, Scalar::from_int(3));
        assert_eq!(p.to_string(), "x1*x2 + 3");
    }
}
