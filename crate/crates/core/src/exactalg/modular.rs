//! Word-size modular linear algebra with CRT lifting and rational
//! reconstruction.
//!
//! Large rational kernels are computed as follows: reduce the integer matrix
//! modulo a deterministic sequence of 62-bit primes, compute the canonical
//! echelon kernel per prime, combine with CRT, and reconstruct rational
//! entries. Reduction modulo a prime can only lower the rank, so the modular
//! nullity is an upper bound for the rational one; callers certify the
//! reconstructed vectors exactly (by substitution into the defining
//! identities), which pins the dimension from both sides. No intermediate
//! value is ever rounded.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Zero};

/// Deterministic Miller-Rabin for u64 (the listed bases are exact for all
/// 64-bit inputs).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// The deterministic prime schedule: descending primes below 2^62.
pub fn prime_sequence() -> impl Iterator<Item = u64> {
    let mut candidate = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        Some(p)
    })
}

/// Reduce a rational to an element of Z/p. Panics if the denominator is
/// divisible by p (callers switch primes in that case via `try_reduce`).
pub fn reduce_rational(q: &BigRational, p: u64) -> Option<u64> {
    let pm = BigInt::from(p);
    let num = q.numer().mod_floor(&pm);
    let den = q.denom().mod_floor(&pm);
    let den_u = den.to_u64_digits().1.first().copied().unwrap_or(0);
    if den_u == 0 {
        return None;
    }
    let num_u = num.to_u64_digits().1.first().copied().unwrap_or(0);
    Some(mul_mod(num_u, inv_mod(den_u, p), p))
}

pub fn reduce_bigint(z: &BigInt, p: u64) -> u64 {
    let pm = BigInt::from(p);
    let m = z.mod_floor(&pm);
    m.to_u64_digits().1.first().copied().unwrap_or(0)
}

/// Incremental row echelon structure modulo p. Rows are inserted one at a
/// time and reduced against the current basis; the final structure yields a
/// canonical reduced echelon form and kernel basis, with the same pivot
/// selection rule as the exact code (leftmost column, insertion order).
pub struct EchelonModP {
    pub p: u64,
    pub cols: usize,
    /// rows sorted by pivot column, fully reduced (rref) at extraction time
    rows: Vec<Vec<u64>>,
    /// pivot column of each stored row
    pivots: Vec<usize>,
    /// pivot column -> row index
    pivot_of_col: Vec<Option<usize>>,
}

impl EchelonModP {
    pub fn new(p: u64, cols: usize) -> EchelonModP {
        EchelonModP { p, cols, rows: Vec::new(), pivots: Vec::new(), pivot_of_col: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a dense row; returns true if it increased the rank.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let p = self.p;
        for c in 0..self.cols {
            if row[c] == 0 {
                continue;
            }
            match self.pivot_of_col[c] {
                Some(r) => {
                    let factor = row[c];
                    let pivot_row = &self.rows[r];
                    for j in c..self.cols {
                        if pivot_row[j] != 0 {
                            let t = mul_mod(factor, pivot_row[j], p);
                            row[j] = (row[j] + p - t) % p;
                        }
                    }
                }
                None => {
                    // normalize and store
                    let inv = inv_mod(row[c], p);
                    for x in row[c..].iter_mut() {
                        if *x != 0 {
                            *x = mul_mod(*x, inv, p);
                        }
                    }
                    self.pivot_of_col[c] = Some(self.rows.len());
                    self.pivots.push(c);
                    self.rows.push(row);
                    return true;
                }
            }
        }
        false
    }

    /// Back-substitute to full reduced form.
    fn reduce_fully(&mut self) {
        let p = self.p;
        let order: Vec<usize> = {
            let mut idx: Vec<usize> = (0..self.rows.len()).collect();
            idx.sort_by_key(|&i| self.pivots[i]);
            idx
        };
        // eliminate each pivot column from all other rows, bottom-up
        for &i in order.iter().rev() {
            let c = self.pivots[i];
            let pivot_row = self.rows[i].clone();
            for (k, row) in self.rows.iter_mut().enumerate() {
                if k != i && row[c] != 0 {
                    let factor = row[c];
                    for j in c..self.cols {
                        if pivot_row[j] != 0 {
                            let t = mul_mod(factor, pivot_row[j], p);
                            row[j] = (row[j] + p - t) % p;
                        }
                    }
                }
            }
        }
    }

    /// Canonical reduced rows of the row space, sorted by pivot column.
    /// Unique for a given subspace, which aligns bases across primes.
    pub fn rref_rows(mut self) -> (Vec<usize>, Vec<Vec<u64>>) {
        self.reduce_fully();
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let rows: Vec<Vec<u64>> = order.into_iter().map(|i| self.rows[i].clone()).collect();
        (pivots, rows)
    }

    /// Canonical kernel basis mod p: one vector per free column (ascending),
    /// 1 in the free position, minus the reduced pivot entries elsewhere.
    pub fn kernel(mut self) -> ModKernel {
        self.reduce_fully();
        let p = self.p;
        let mut pivot_cols: Vec<usize> = self.pivots.clone();
        pivot_cols.sort_unstable();
        let mut basis = Vec::new();
        let mut free_cols = Vec::new();
        for free in 0..self.cols {
            if self.pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for &c in pivot_cols.iter() {
                let r = self.pivot_of_col[c].unwrap();
                let entry = self.rows[r][free];
                if entry != 0 {
                    v[c] = p - entry;
                }
            }
            free_cols.push(free);
            basis.push(v);
        }
        ModKernel { p, pivot_cols, free_cols, basis }
    }
}

/// Kernel basis modulo one prime, in canonical echelon form.
pub struct ModKernel {
    pub p: u64,
    pub pivot_cols: Vec<usize>,
    pub free_cols: Vec<usize>,
    pub basis: Vec<Vec<u64>>,
}

/// CRT combination state for a vector of integers.
pub struct CrtVec {
    pub modulus: BigInt,
    pub values: Vec<BigInt>,
}

impl CrtVec {
    pub fn from_residues(res: &[u64], p: u64) -> CrtVec {
        CrtVec {
            modulus: BigInt::from(p),
            values: res.iter().map(|&r| BigInt::from(r)).collect(),
        }
    }

    /// Merge residues mod a new coprime prime.
    pub fn merge(&mut self, res: &[u64], p: u64) {
        assert_eq!(res.len(), self.values.len());
        let pm = BigInt::from(p);
        let m_mod_p = reduce_bigint(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for (v, &r) in self.values.iter_mut().zip(res.iter()) {
            // v_new = v + m * ((r - v) * m^{-1} mod p)
            let v_mod_p = reduce_bigint(v, p);
            let diff = (r + p - v_mod_p) % p;
            let t = mul_mod(diff, m_inv, p);
            *v += &self.modulus * BigInt::from(t);
        }
        self.modulus *= pm;
    }
}

/// Rational reconstruction of x mod m with |num|, den <= sqrt(m/2).
/// Returns None when no admissible representative exists.
pub fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound_sq: BigInt = m / 2;
    let mut r0 = m.clone();
    let mut r1 = x.mod_floor(m);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while &r1 * &r1 > bound_sq {
        if r1.is_zero() {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1 * &t1 > bound_sq {
        return None;
    }
    if t1.sign() == Sign::Minus {
        r1 = -r1;
        t1 = -t1;
    }
    if r1.gcd(&t1).is_one() {
        Some(BigRational::new(r1, t1))
    } else {
        None
    }
}

/// Reconstruct every CRT-lifted entry as a rational; None if any fails.
pub fn reconstruct_vector(crt: &CrtVec) -> Option<Vec<BigRational>> {
    crt.values.iter().map(|v| rational_reconstruct(v, &crt.modulus)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_sequence_yields_primes() {
        for p in prime_sequence().take(5) {
            assert!(is_prime_u64(p));
            assert!(p > 1 << 61);
        }
    }

    #[test]
    fn kernel_mod_p_matches_exact() {
        let p = prime_sequence().next().unwrap();
        // matrix [[1,2,3],[2,4,6],[1,0,1]] has rank 2
        let mut ech = EchelonModP::new(p, 3);
        ech.insert(vec![1, 2, 3]);
        ech.insert(vec![2, 4, 6]);
        ech.insert(vec![1, 0, 1]);
        let ker = ech.kernel();
        assert_eq!(ker.basis.len(), 1);
        // kernel vector satisfies the first and third equations mod p
        let v = &ker.basis[0];
        let dot1 = (mul_mod(1, v[0], p) + mul_mod(2, v[1], p) + mul_mod(3, v[2], p)) % p;
        let dot3 = (mul_mod(1, v[0], p) + mul_mod(1, v[2], p)) % p;
        assert_eq!(dot1, 0);
        assert_eq!(dot3, 0);
    }

    #[test]
    fn crt_and_reconstruction() {
        let mut primes = prime_sequence();
        let p1 = primes.next().unwrap();
        let p2 = primes.next().unwrap();
        // x = -5/7 mod p1, p2
        let target = BigRational::new(BigInt::from(-5), BigInt::from(7));
        let r1 = reduce_rational(&target, p1).unwrap();
        let r2 = reduce_rational(&target, p2).unwrap();
        let mut crt = CrtVec::from_residues(&[r1], p1);
        crt.merge(&[r2], p2);
        let rec = reconstruct_vector(&crt).unwrap();
        assert_eq!(rec[0], target);
    }
}
