//! Differential operators with rational-function coefficients whose poles
//! lie on a fixed arrangement of hyperplanes.
//!
//! An operator is stored as (1 / prod ell_a^{p_a}) * sum_beta f_beta(x) d^beta
//! over a shared list of linear forms ell_a. Composition with directional
//! derivatives and multiplication by c/ell_a keep this shape, which is
//! exactly the class of operators generated by the recursion for the
//! higher Dunkl-type generators.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::monomial::Mono;
use super::poly::MultiPoly;
use crate::exactalg::Scalar;

#[derive(Clone, Debug)]
pub struct RatDiffOp {
    n_vars: usize,
    hyperplanes: Arc<Vec<MultiPoly>>,
    /// common denominator exponents, one per hyperplane
    poles: Vec<u16>,
    /// derivative multi-index -> numerator coefficient polynomial
    terms: BTreeMap<Mono, MultiPoly>,
}

impl RatDiffOp {
    pub fn identity(n_vars: usize, hyperplanes: Arc<Vec<MultiPoly>>) -> RatDiffOp {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::unit(n_vars), MultiPoly::one(n_vars));
        RatDiffOp { n_vars, poles: vec![0; hyperplanes.len()], hyperplanes, terms }
    }

    pub fn zero(n_vars: usize, hyperplanes: Arc<Vec<MultiPoly>>) -> RatDiffOp {
        RatDiffOp { n_vars, poles: vec![0; hyperplanes.len()], hyperplanes, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        n_vars: usize,
        hyperplanes: Arc<Vec<MultiPoly>>,
        poles: Vec<u16>,
        terms: Vec<(Mono, MultiPoly)>,
    ) -> RatDiffOp {
        let mut map = BTreeMap::new();
        for (m, f) in terms {
            if !f.is_zero() {
                insert_add(&mut map, m, f);
            }
        }
        let mut op = RatDiffOp { n_vars, poles, hyperplanes, terms: map };
        op.reduce();
        op
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn poles(&self) -> &[u16] {
        &self.poles
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn hyperplanes(&self) -> &Arc<Vec<MultiPoly>> {
        &self.hyperplanes
    }

    /// Raise the common denominator to the given exponents (entrywise >= current).
    fn raise_poles(&mut self, target: &[u16]) {
        let mut mult = MultiPoly::one(self.n_vars);
        for (a, (&cur, &tgt)) in self.poles.iter().zip(target.iter()).enumerate() {
            debug_assert!(tgt >= cur);
            for _ in cur..tgt {
                mult = &mult * &self.hyperplanes[a];
            }
        }
        if mult != MultiPoly::one(self.n_vars) {
            for f in self.terms.values_mut() {
                *f = &*f * &mult;
            }
        }
        self.poles = target.to_vec();
    }

    /// Divide the numerators by hyperplane factors wherever exact, keeping
    /// pole orders as low as achievable.
    pub fn reduce(&mut self) {
        if self.terms.is_empty() {
            self.poles.iter_mut().for_each(|p| *p = 0);
            return;
        }
        for a in 0..self.poles.len() {
            while self.poles[a] > 0 {
                let ell = &self.hyperplanes[a];
                let divided: Option<Vec<(Mono, MultiPoly)>> = self
                    .terms
                    .iter()
                    .map(|(m, f)| f.exact_div(ell).map(|q| (m.clone(), q)))
                    .collect();
                match divided {
                    Some(new_terms) => {
                        self.terms = new_terms.into_iter().collect();
                        self.poles[a] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn add(&self, other: &RatDiffOp) -> RatDiffOp {
        assert_eq!(self.n_vars, other.n_vars);
        let target: Vec<u16> = self
            .poles
            .iter()
            .zip(other.poles.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        let mut a = self.clone();
        let mut b = other.clone();
        a.raise_poles(&target);
        b.raise_poles(&target);
        for (m, f) in b.terms {
            insert_add(&mut a.terms, m, f);
        }
        a.reduce();
        a
    }

    pub fn scale(&self, c: &Scalar) -> RatDiffOp {
        if c.is_zero() {
            return RatDiffOp::zero(self.n_vars, self.hyperplanes.clone());
        }
        RatDiffOp {
            n_vars: self.n_vars,
            hyperplanes: self.hyperplanes.clone(),
            poles: self.poles.clone(),
            terms: self.terms.iter().map(|(m, f)| (m.clone(), f.scale(c))).collect(),
        }
    }

    pub fn sub(&self, other: &RatDiffOp) -> RatDiffOp {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Multiply on the left by c / ell_a.
    pub fn mul_pole(&self, c: &Scalar, a: usize) -> RatDiffOp {
        let mut out = self.scale(c);
        if !out.is_zero() {
            out.poles[a] += 1;
            out.reduce();
        }
        out
    }

    /// Multiply on the left by a polynomial.
    pub fn mul_poly(&self, g: &MultiPoly) -> RatDiffOp {
        let mut out = RatDiffOp {
            n_vars: self.n_vars,
            hyperplanes: self.hyperplanes.clone(),
            poles: self.poles.clone(),
            terms: self.terms.iter().map(|(m, f)| (m.clone(), f * g)).collect(),
        };
        out.reduce();
        out
    }

    /// Compose with a directional derivative on the left: d_xi o self.
    pub fn compose_dir(&self, xi: &[Scalar]) -> RatDiffOp {
        let n = self.n_vars;
        let target: Vec<u16> = self.poles.iter().map(|&p| p + 1).collect();
        let full: MultiPoly = self
            .hyperplanes
            .iter()
            .fold(MultiPoly::one(n), |acc, ell| &acc * ell);
        // partial products prod_{c != a} ell_c
        let partials: Vec<MultiPoly> = (0..self.hyperplanes.len())
            .map(|a| {
                self.hyperplanes
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| *c != a)
                    .fold(MultiPoly::one(n), |acc, (_, ell)| &acc * ell)
            })
            .collect();
        let mut terms: BTreeMap<Mono, MultiPoly> = BTreeMap::new();
        for (beta, f) in &self.terms {
            // derivative raising: xi_j * f * full at beta + e_j
            let f_full = f * &full;
            for (j, c) in xi.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut m2 = beta.clone();
                m2.0[j] += 1;
                insert_add(&mut terms, m2, f_full.scale(c));
            }
            // coefficient derivative at beta
            let mut coef = &f.dir_derivative(xi) * &full;
            for (a, ell) in self.hyperplanes.iter().enumerate() {
                let p = self.poles[a];
                if p == 0 {
                    continue;
                }
                let ell_at_xi = ell_eval_dir(ell, xi);
                if ell_at_xi.is_zero() {
                    continue;
                }
                let c = &ell_at_xi * &Scalar::from_int(p as i64);
                coef = &coef - &(f * &partials[a]).scale(&c);
            }
            insert_add(&mut terms, beta.clone(), coef);
        }
        terms.retain(|_, f| !f.is_zero());
        let mut out = RatDiffOp { n_vars: n, hyperplanes: self.hyperplanes.clone(), poles: target, terms };
        out.reduce();
        out
    }

    /// Full operator composition self o other (used to check associativity
    /// and to build small operators; the hot paths use compose_dir).
    pub fn compose(&self, other: &RatDiffOp) -> RatDiffOp {
        let mut out = RatDiffOp::zero(self.n_vars, self.hyperplanes.clone());
        for (beta, f) in &self.terms {
            // d^beta o other
            let mut piece = other.clone();
            for (j, &e) in beta.0.iter().enumerate() {
                let mut dir = vec![Scalar::zero(); self.n_vars];
                dir[j] = Scalar::one();
                for _ in 0..e {
                    piece = piece.compose_dir(&dir);
                }
            }
            // left-multiply by f / prod ell^p
            let mut scaled = piece.mul_poly(f);
            let target: Vec<u16> = scaled
                .poles
                .iter()
                .zip(self.poles.iter())
                .map(|(&a, &b)| a + b)
                .collect();
            scaled.poles = target;
            scaled.reduce();
            out = out.add(&scaled);
        }
        out
    }

    /// The unreduced numerator of the application: sum_beta f_beta d^beta phi,
    /// taken over the operator's common denominator. Linear in phi, which
    /// makes it the right form for kernel assembly.
    pub fn apply_raw(&self, phi: &MultiPoly) -> MultiPoly {
        let mut num = MultiPoly::zero(self.n_vars);
        for (beta, f) in &self.terms {
            let mut d = phi.clone();
            for (j, &e) in beta.0.iter().enumerate() {
                for _ in 0..e {
                    d = d.derivative(j);
                    if d.is_zero() {
                        break;
                    }
                }
                if d.is_zero() {
                    break;
                }
            }
            if !d.is_zero() {
                num = &num + &(f * &d);
            }
        }
        num
    }

    /// Apply to a polynomial: returns the numerator over prod ell^{poles},
    /// reduced to the lowest achievable pole order.
    pub fn apply(&self, phi: &MultiPoly) -> (MultiPoly, Vec<u16>) {
        let mut num = MultiPoly::zero(self.n_vars);
        for (beta, f) in &self.terms {
            let mut d = phi.clone();
            for (j, &e) in beta.0.iter().enumerate() {
                for _ in 0..e {
                    d = d.derivative(j);
                    if d.is_zero() {
                        break;
                    }
                }
                if d.is_zero() {
                    break;
                }
            }
            if !d.is_zero() {
                num = &num + &(f * &d);
            }
        }
        let mut poles = self.poles.clone();
        if num.is_zero() {
            return (num, vec![0; poles.len()]);
        }
        for (a, ell) in self.hyperplanes.iter().enumerate() {
            while poles[a] > 0 {
                match num.exact_div(ell) {
                    Some(q) => {
                        num = q;
                        poles[a] -= 1;
                    }
                    None => break,
                }
            }
        }
        (num, poles)
    }
}

fn insert_add(map: &mut BTreeMap<Mono, MultiPoly>, m: Mono, f: MultiPoly) {
    use std::collections::btree_map::Entry;
    if f.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(e) => {
            e.insert(f);
        }
        Entry::Occupied(mut e) => {
            let v = &*e.get() + &f;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

/// Derivative of a linear form along direction coordinates.
fn ell_eval_dir(ell: &MultiPoly, xi: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in ell.terms() {
        debug_assert_eq!(m.degree(), 1);
        let i = m.0.iter().position(|&e| e == 1).unwrap();
        acc += &(c * &xi[i]);
    }
    acc
}
