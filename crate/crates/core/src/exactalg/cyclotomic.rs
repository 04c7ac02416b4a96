//! Cyclotomic field data: minimal polynomials and reduction tables.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, One, Zero};

pub fn euler_phi(k: u32) -> usize {
    let mut n = k as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Coefficients of the k-th cyclotomic polynomial, constant term first,
/// including the leading 1. Computed by exact division of `x^k - 1` by the
/// cyclotomic polynomials of the proper divisors of k.
pub fn cyclotomic_polynomial(k: u32) -> Vec<BigInt> {
    assert!(k >= 1);
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    cyclo_rec(k, &mut memo)
}

fn cyclo_rec(k: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&k) {
        return p.clone();
    }
    // x^k - 1
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = -BigInt::one();
    num[k as usize] = BigInt::one();
    for d in 1..k {
        if k % d == 0 {
            let phi_d = cyclo_rec(d, memo);
            num = exact_div_int(&num, &phi_d);
        }
    }
    memo.insert(k, num.clone());
    num
}

/// Exact division of integer polynomials (constant term first); panics if
/// the division is not exact. Divisor must be monic.
fn exact_div_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Precomputed data for arithmetic in `Q[x]/Phi_k(x)`.
pub struct CycloField {
    pub order: u32,
    pub degree: usize,
    /// `x^(degree+i)` reduced modulo `Phi_k`, for `i` in `0..degree-1`.
    reduction: Vec<Vec<BigRational>>,
    /// `zeta^i` conjugated (`zeta -> zeta^{k-1}`) and reduced, `i` in `0..degree`.
    conjugation: Vec<Vec<BigRational>>,
    /// `Phi_k` over the rationals, constant term first, monic.
    pub min_poly: Vec<BigRational>,
}

impl CycloField {
    fn build(order: u32) -> CycloField {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let min_poly: Vec<BigRational> = phi.iter().map(|c| BigRational::from(c.clone())).collect();

        // x^degree = -(tail); extend upward one power at a time. Entries cover
        // x^(degree+i) for i in 0..degree-1, enough to reduce any product of
        // two reduced elements.
        let mut reduction: Vec<Vec<BigRational>> = Vec::with_capacity(degree.max(1));
        let base: Vec<BigRational> = min_poly[..degree].iter().map(|c| -c.clone()).collect();
        reduction.push(base);
        for i in 1..degree.saturating_sub(1) {
            let prev = reduction[i - 1].clone();
            // multiply by x, reduce the overflow coefficient
            let mut next = vec![BigRational::zero(); degree];
            for (j, c) in prev.iter().enumerate() {
                if j + 1 < degree {
                    next[j + 1] += c;
                } else {
                    for (t, r) in reduction[0].iter().enumerate() {
                        next[t] += c * r;
                    }
                }
            }
            reduction.push(next);
        }

        // conjugation: zeta^i -> zeta^{(k - i) mod k}, written in the basis.
        let mut conjugation = Vec::with_capacity(degree);
        for i in 0..degree {
            let e = ((order as usize) - i) % order as usize;
            conjugation.push(power_in_basis(e, degree, &reduction));
        }

        CycloField { order, degree, reduction, conjugation, min_poly }
    }

    /// Reduce a coefficient vector of length <= 2*degree-1 into the power basis.
    pub fn reduce(&self, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree;
        let mut out = vec![BigRational::zero(); d];
        for i in (0..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            if i < d {
                out[i] += std::mem::take(&mut coeffs[i]);
            } else {
                let c = std::mem::take(&mut coeffs[i]);
                for (t, r) in self.reduction[i - d].iter().enumerate() {
                    if !r.is_zero() {
                        coeffs[t] += &c * r;
                    }
                }
            }
        }
        out
    }

    pub fn conjugate(&self, coords: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                for (t, r) in self.conjugation[i].iter().enumerate() {
                    if !r.is_zero() {
                        out[t] += c * r;
                    }
                }
            }
        }
        out
    }
}

/// zeta^e as a basis vector, using the reduction table.
fn power_in_basis(e: usize, degree: usize, reduction: &[Vec<BigRational>]) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); degree];
    if e < degree {
        v[e] = BigRational::one();
        return v;
    }
    // reduce x^e step by step from x^(degree-1)
    let mut cur = vec![BigRational::zero(); degree];
    cur[degree - 1] = BigRational::one();
    for _ in degree - 1..e {
        let mut next = vec![BigRational::zero(); degree];
        for (j, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j + 1 < degree {
                next[j + 1] += c;
            } else {
                for (t, r) in reduction[0].iter().enumerate() {
                    next[t] += c * r;
                }
            }
        }
        cur = next;
    }
    cur
}

static REGISTRY: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();

/// Shared field data for a given cyclotomic order (order 1 = rationals).
pub fn field(order: u32) -> Arc<CycloField> {
    let lock = REGISTRY.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = lock.read().unwrap().get(&order) {
        return f.clone();
    }
    let built = Arc::new(CycloField::build(order));
    let mut w = lock.write().unwrap();
    w.entry(order).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(9), 6);
    }
}
