//! Direct kernel construction for the symmetric groups.
//!
//! Every condition operator commutes with translations along (1,...,1) and
//! the order-1 conditions force the kernel into the translation-invariant
//! subring W (the d = 1 averaged direction is proportional to the diagonal).
//! The engine therefore rewrites the cleared condition operators in the
//! difference coordinates v_i = x_i - x_n, assembles their matrices modulo
//! word-size primes degree by degree, lifts the canonical kernels by CRT and
//! rational reconstruction, and certifies every reconstructed vector exactly
//! over the integers via an a priori coefficient bound. Nothing is ever
//! rounded: the modular pass only proposes candidates, the certificate is
//! exact.

use std::collections::HashMap;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::exactalg::modular::{mul_mod, prime_sequence, reduce_bigint, CrtVec, EchelonModP};
use crate::exactalg::{ExactError, Scalar};
use crate::polyops::{monomials_of_degree, MultiPoly, RatDiffOp};

use super::context::DunklContext;
use super::family::validated_family;

/// A cleared condition operator written in difference coordinates, with
/// integer coefficients.
pub(super) struct VOp {
    pub d: usize,
    /// (derivative multi-index, numerator terms) over n-1 variables
    pub terms: Vec<(Vec<u16>, Vec<(Vec<u16>, BigInt)>)>,
    /// sum of |coefficients|, for certification bounds
    pub weight: BigInt,
}

fn diagonal_derivative_is_zero(f: &MultiPoly) -> bool {
    let n = f.n_vars();
    let ones = vec![Scalar::one(); n];
    f.dir_derivative(&ones).is_zero()
}

/// Rewrite the numerator family of a cleared operator in the coordinates
/// v_i = x_i - x_n. Valid because all coefficients are invariant under
/// diagonal translations (asserted), so d/dx_i maps to d/dv_i for i < n and
/// d/dx_n to -(d/dv_1 + ... + d/dv_{n-1}).
fn v_reduce(op: &RatDiffOp, n: usize) -> Result<VOp, ExactError> {
    // common denominator across every coefficient
    let mut lcm = BigInt::one();
    for (_, f) in op.terms() {
        for (_, c) in f.terms() {
            let q = c
                .as_rational()
                .ok_or_else(|| ExactError::Internal("non-rational operator coefficient".into()))?;
            lcm = lcm.lcm(q.denom());
        }
    }
    let mut acc: HashMap<Vec<u16>, HashMap<Vec<u16>, BigInt>> = HashMap::new();
    for (beta, f) in op.terms() {
        if !diagonal_derivative_is_zero(f) {
            return Err(ExactError::Internal(
                "operator coefficient is not translation invariant".into(),
            ));
        }
        // substitute x_n = 0
        let mut tilde: Vec<(Vec<u16>, BigInt)> = Vec::new();
        for (m, c) in f.terms() {
            if m.0[n - 1] != 0 {
                continue;
            }
            let q = c.as_rational().unwrap();
            let scaled = q * BigRational::from(lcm.clone());
            debug_assert!(scaled.is_integer());
            tilde.push((m.0[..n - 1].to_vec(), scaled.to_integer()));
        }
        if tilde.is_empty() {
            continue;
        }
        // expand the x_n-derivative power multinomially
        let base: Vec<u16> = beta.0[..n - 1].to_vec();
        let bn = beta.0[n - 1] as usize;
        for (gamma, multinom) in compositions_with_multinomials(bn, n - 1) {
            let mut delta = base.clone();
            for (i, g) in gamma.iter().enumerate() {
                delta[i] += *g as u16;
            }
            let sign = if bn % 2 == 0 { 1 } else { -1 };
            let mult = BigInt::from(sign * multinom);
            let slot = acc.entry(delta).or_default();
            for (m, c) in &tilde {
                let e = slot.entry(m.clone()).or_insert_with(BigInt::zero);
                *e += c * &mult;
            }
        }
    }
    let mut terms: Vec<(Vec<u16>, Vec<(Vec<u16>, BigInt)>)> = acc
        .into_iter()
        .map(|(delta, m)| {
            let mut v: Vec<(Vec<u16>, BigInt)> =
                m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort();
            (delta, v)
        })
        .filter(|(_, v)| !v.is_empty())
        .collect();
    terms.sort();
    let mut weight = BigInt::zero();
    for (_, v) in &terms {
        for (_, c) in v {
            weight += c.abs();
        }
    }
    Ok(VOp { d: 0, terms, weight })
}

/// Compositions of `total` into `parts` nonnegative integers, with their
/// multinomial coefficients.
fn compositions_with_multinomials(total: usize, parts: usize) -> Vec<(Vec<usize>, i64)> {
    fn binom(n: usize, k: usize) -> i64 {
        let mut r = 1i64;
        for i in 0..k {
            r = r * (n - i) as i64 / (i + 1) as i64;
        }
        r
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; parts];
    fn rec(
        pos: usize,
        rem: usize,
        coeff: i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, i64)>,
    ) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push((cur.clone(), coeff));
            cur[pos] = 0;
            return;
        }
        for e in 0..=rem {
            cur[pos] = e;
            rec(pos + 1, rem - e, coeff * binom(rem, e), cur, out);
        }
        cur[pos] = 0;
    }
    if parts == 0 {
        assert_eq!(total, 0);
        return vec![(Vec::new(), 1)];
    }
    rec(0, total, 1, &mut cur, &mut out);
    out
}

/// The orbit-summed cleared operator sum_g D^{(d)}_{g xi}, built level by
/// level so only two recursion levels are ever held in memory.
fn orbit_summed_operator(ctx: &DunklContext, xi: &[Scalar], d: usize) -> RatDiffOp {
    let group = &ctx.group;
    let n = group.n_vars;
    let hyp = ctx.hyperplanes().clone();
    let orbit = group.direction_orbit(xi);
    let index: HashMap<Vec<Scalar>, usize> =
        orbit.iter().enumerate().map(|(i, (v, _))| (v.clone(), i)).collect();
    if d == 0 {
        let total: usize = orbit.iter().map(|(_, c)| c).sum();
        return RatDiffOp::identity(n, hyp).scale(&Scalar::from_int(total as i64));
    }
    let mut level: Vec<RatDiffOp> =
        orbit.iter().map(|_| RatDiffOp::identity(n, hyp.clone())).collect();
    for l in 1..=d {
        let last = l == d;
        let mut acc = RatDiffOp::zero(n, hyp.clone());
        let mut next: Vec<RatDiffOp> = Vec::new();
        for (oi, (eta, count)) in orbit.iter().enumerate() {
            let mut op = level[oi].compose_dir(eta);
            for (idx, root) in group.positive_roots.iter().enumerate() {
                let m_a = ctx.root_multiplicity(idx);
                if m_a == 0 {
                    continue;
                }
                let pair = group.form.pair_vec(&root.vector, eta);
                if pair.is_zero() {
                    continue;
                }
                let refl = group.form.reflect_vector(&root.vector, eta);
                let oj = index[&refl];
                let delta = level[oj].sub(&level[oi]);
                let c = &pair * &Scalar::from_int(m_a as i64);
                op = op.add(&delta.mul_pole(&c, idx));
            }
            if last {
                acc = acc.add(&op.scale(&Scalar::from_int(*count as i64)));
            } else {
                next.push(op);
            }
        }
        if last {
            return acc;
        }
        level = next;
    }
    unreachable!()
}

/// All condition operators for the group, in difference coordinates.
pub(super) fn build_v_ops(ctx: &DunklContext) -> Result<Vec<VOp>, ExactError> {
    let group = &ctx.group;
    let n = group.n_vars;
    let dmax = *group.degrees.iter().max().unwrap();
    let family = validated_family(group, dmax, None)?;
    if n > 1 && family.per_degree[0].is_empty() {
        return Err(ExactError::Internal(
            "no order-1 condition: diagonal reduction not justified".into(),
        ));
    }
    let mut ops = Vec::new();
    for d in 2..=dmax {
        for &dir_idx in &family.per_degree[d - 1] {
            let xi = &family.directions[dir_idx];
            let cleared = orbit_summed_operator(ctx, xi, d);
            if cleared.is_zero() {
                continue;
            }
            let mut vop = v_reduce(&cleared, n)?;
            vop.d = d;
            ops.push(vop);
        }
    }
    // cheapest conditions first: ascending order, they cut the most
    ops.sort_by_key(|o| o.d);
    Ok(ops)
}

impl VOp {
    /// Image of the monomial v^a modulo p, as (row monomial, coefficient).
    fn mono_image_mod_p(
        &self,
        a: &[u16],
        coeffs_mod_p: &[Vec<u64>],
        p: u64,
    ) -> Vec<(Vec<u16>, u64)> {
        let mut out: HashMap<Vec<u16>, u64> = HashMap::new();
        for ((delta, terms), cmods) in self.terms.iter().zip(coeffs_mod_p.iter()) {
            let mut fact = 1u64;
            let mut ok = true;
            for (ai, di) in a.iter().zip(delta.iter()) {
                if ai < di {
                    ok = false;
                    break;
                }
                for t in 0..*di {
                    fact = mul_mod(fact, (*ai - t) as u64, p);
                }
            }
            if !ok || fact == 0 {
                continue;
            }
            let base: Vec<u16> = a.iter().zip(delta.iter()).map(|(ai, di)| ai - di).collect();
            for ((tm, _), cm) in terms.iter().zip(cmods.iter()) {
                let mono: Vec<u16> = base.iter().zip(tm.iter()).map(|(x, y)| x + y).collect();
                let c = mul_mod(*cm, fact, p);
                if c != 0 {
                    let e = out.entry(mono).or_insert(0);
                    *e = (*e + c) % p;
                }
            }
        }
        out.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    fn coeffs_mod_p(&self, p: u64) -> Vec<Vec<u64>> {
        self.terms
            .iter()
            .map(|(_, terms)| terms.iter().map(|(_, c)| reduce_bigint(c, p)).collect())
            .collect()
    }

    /// Exact application to an integer vector over the degree-e monomials;
    /// returns the output coefficients as big integers. Used by tests and as
    /// the small-case certifier.
    #[cfg(test)]
    fn apply_exact(&self, monos: &[Vec<u16>], vec: &[BigInt]) -> HashMap<Vec<u16>, BigInt> {
        let mut out: HashMap<Vec<u16>, BigInt> = HashMap::new();
        for (a, c) in monos.iter().zip(vec.iter()) {
            if c.is_zero() {
                continue;
            }
            for (delta, terms) in &self.terms {
                let mut fact = BigInt::one();
                let mut ok = true;
                for (ai, di) in a.iter().zip(delta.iter()) {
                    if ai < di {
                        ok = false;
                        break;
                    }
                    for t in 0..*di {
                        fact *= BigInt::from(*ai - t);
                    }
                }
                if !ok {
                    continue;
                }
                let base: Vec<u16> = a.iter().zip(delta.iter()).map(|(x, y)| x - y).collect();
                for (tm, tc) in terms {
                    let mono: Vec<u16> = base.iter().zip(tm.iter()).map(|(x, y)| x + y).collect();
                    let e = out.entry(mono).or_insert_with(BigInt::zero);
                    *e += tc * &fact * c;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// Canonical kernel modulo one prime: sequential intersection over the
/// operator family, then reduced row echelon canonicalization of the span.
fn kernel_mod_p(ops: &[VOp], v_vars: usize, degree: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let monos_struct = monomials_of_degree(v_vars, degree);
    let monos: Vec<Vec<u16>> = monos_struct.iter().map(|m| m.0.clone()).collect();
    let cols = monos.len();
    // current kernel basis over the monomial columns; None = full space
    let mut basis: Option<Vec<Vec<u64>>> = None;
    for op in ops {
        let cmods = op.coeffs_mod_p(p);
        let k = basis.as_ref().map(|b| b.len()).unwrap_or(cols);
        if k == 0 {
            break;
        }
        // rows of the condition matrix, in the current basis coordinates
        let mut rows: HashMap<Vec<u16>, Vec<u64>> = HashMap::new();
        match &basis {
            None => {
                for (j, a) in monos.iter().enumerate() {
                    for (mono, c) in op.mono_image_mod_p(a, &cmods, p) {
                        let row = rows.entry(mono).or_insert_with(|| vec![0; cols]);
                        row[j] = (row[j] + c) % p;
                    }
                }
            }
            Some(b) => {
                for (j, a) in monos.iter().enumerate() {
                    let touched: Vec<(usize, u64)> = b
                        .iter()
                        .enumerate()
                        .filter_map(|(ki, v)| if v[j] != 0 { Some((ki, v[j])) } else { None })
                        .collect();
                    if touched.is_empty() {
                        continue;
                    }
                    for (mono, c) in op.mono_image_mod_p(a, &cmods, p) {
                        let row = rows.entry(mono).or_insert_with(|| vec![0; k]);
                        for &(ki, w) in &touched {
                            row[ki] = (row[ki] + mul_mod(c, w, p)) % p;
                        }
                    }
                }
            }
        }
        let mut ech = EchelonModP::new(p, k);
        for (_, row) in rows {
            ech.insert(row);
        }
        let ker = ech.kernel();
        // compose: new basis = ker * old basis
        let new_basis: Vec<Vec<u64>> = match &basis {
            None => ker.basis,
            Some(b) => ker
                .basis
                .iter()
                .map(|w| {
                    let mut v = vec![0u64; cols];
                    for (ki, &wc) in w.iter().enumerate() {
                        if wc == 0 {
                            continue;
                        }
                        for (j, &bc) in b[ki].iter().enumerate() {
                            if bc != 0 {
                                v[j] = (v[j] + mul_mod(wc, bc, p)) % p;
                            }
                        }
                    }
                    v
                })
                .collect(),
        };
        basis = Some(new_basis);
    }
    let final_basis = basis.unwrap_or_else(|| {
        (0..cols)
            .map(|j| {
                let mut v = vec![0u64; cols];
                v[j] = 1;
                v
            })
            .collect()
    });
    // canonicalize: rref of the span
    let mut ech = EchelonModP::new(p, cols);
    for v in final_basis {
        ech.insert(v);
    }
    ech.rref_rows()
}

/// One homogeneous slice of the kernel, reconstructed over Q and certified
/// exactly over the integers.
pub(super) fn kernel_degree_exact(
    ops: &[VOp],
    v_vars: usize,
    degree: usize,
) -> Result<Vec<Vec<BigRational>>, ExactError> {
    let cols = monomials_of_degree(v_vars, degree).len();
    let mut primes = prime_sequence();
    let max_primes = 40;
    let mut used = 0;
    // first kernel
    let mut p = primes.next().unwrap();
    used += 1;
    let (mut pivots, mut base) = kernel_mod_p(ops, v_vars, degree, p);
    let mut crt: Vec<CrtVec> = base.iter().map(|v| CrtVec::from_residues(v, p)).collect();
    let mut crt_primes = vec![p];
    loop {
        if base.is_empty() {
            return Ok(Vec::new());
        }
        // attempt reconstruction once at least two primes are merged
        if crt_primes.len() >= 2 {
            let rec: Option<Vec<Vec<BigRational>>> = crt
                .iter()
                .map(crate::exactalg::modular::reconstruct_vector)
                .collect();
            if let Some(vectors) = rec {
                if certify(ops, v_vars, degree, &vectors)? {
                    return Ok(vectors);
                }
            }
        }
        if used >= max_primes {
            return Err(ExactError::Internal(format!(
                "kernel reconstruction did not stabilize after {} primes (degree {})",
                max_primes, degree
            )));
        }
        p = primes.next().unwrap();
        used += 1;
        let (pv, bs) = kernel_mod_p(ops, v_vars, degree, p);
        // an unlucky prime can only enlarge the kernel; keep the smallest
        if bs.len() < base.len() || (bs.len() == base.len() && pv != pivots && pv > pivots) {
            // previous primes were unlucky: restart from this one
            pivots = pv;
            base = bs;
            crt = base.iter().map(|v| CrtVec::from_residues(v, p)).collect();
            crt_primes = vec![p];
            continue;
        }
        if bs.len() > base.len() || pv != pivots {
            // this prime is unlucky: skip it
            continue;
        }
        for (c, v) in crt.iter_mut().zip(bs.iter()) {
            c.merge(v, p);
        }
        crt_primes.push(p);
        let _ = cols;
    }
}

/// Exact zero test of every operator applied to every reconstructed kernel
/// vector, through an integer coefficient bound and enough moduli to cover
/// it. Establishes `op(v) = 0` over Q unconditionally.
fn certify(
    ops: &[VOp],
    v_vars: usize,
    degree: usize,
    vectors: &[Vec<BigRational>],
) -> Result<bool, ExactError> {
    let monos_struct = monomials_of_degree(v_vars, degree);
    let monos: Vec<Vec<u16>> = monos_struct.iter().map(|m| m.0.clone()).collect();
    for v in vectors {
        // clear denominators
        let mut lcm = BigInt::one();
        for q in v {
            lcm = lcm.lcm(q.denom());
        }
        let ints: Vec<BigInt> = v
            .iter()
            .map(|q| (q * BigRational::from(lcm.clone())).to_integer())
            .collect();
        let max_abs = ints.iter().map(|z| z.abs()).max().unwrap_or_else(BigInt::zero);
        let nonzero = ints.iter().filter(|z| !z.is_zero()).count();
        for op in ops {
            // |output coeff| <= nonzero * weight * max falling factorial * max|phi|
            let mut factmax = BigInt::one();
            for _ in 0..op.d {
                factmax *= BigInt::from(degree.max(1));
            }
            let bound: BigInt = BigInt::from(nonzero as u64) * &op.weight * &factmax * &max_abs;
            let bound_bits = bound.bits() + 2;
            let mut proven_bits = 0u64;
            for p in prime_sequence() {
                // apply op to (ints mod p)
                let cmods = op.coeffs_mod_p(p);
                let mut acc: HashMap<Vec<u16>, u64> = HashMap::new();
                for (a, z) in monos.iter().zip(ints.iter()) {
                    if z.is_zero() {
                        continue;
                    }
                    let zm = reduce_bigint(z, p);
                    if zm == 0 {
                        continue;
                    }
                    for (mono, c) in op.mono_image_mod_p(a, &cmods, p) {
                        let e = acc.entry(mono).or_insert(0);
                        *e = (*e + mul_mod(c, zm, p)) % p;
                    }
                }
                if acc.values().any(|&c| c != 0) {
                    return Ok(false);
                }
                proven_bits += 61;
                if proven_bits >= bound_bits {
                    break;
                }
            }
        }
    }
    Ok(true)
}

/// Entry point: the graded kernel over all degrees 0..=m_top, as primitive
/// integer polynomials in the original coordinates.
pub(super) fn construct(
    ctx: &DunklContext,
    m_top: usize,
) -> Result<Vec<(usize, MultiPoly)>, ExactError> {
    let n = ctx.group.n_vars;
    let v_vars = n - 1;
    let ops = build_v_ops(ctx)?;
    let mut out = Vec::new();
    for e in 0..=m_top {
        let kernel = kernel_degree_exact(&ops, v_vars, e)?;
        if kernel.is_empty() {
            continue;
        }
        let monos = monomials_of_degree(v_vars, e);
        // difference-coordinate forms x_i - x_n
        let forms: Vec<MultiPoly> = (0..v_vars)
            .map(|i| &MultiPoly::var(i, n) - &MultiPoly::var(n - 1, n))
            .collect();
        for vecq in kernel {
            let prim = primitive_integer(&vecq);
            let mut v_poly = MultiPoly::zero(v_vars);
            for (m, c) in monos.iter().zip(prim.iter()) {
                if !c.is_zero() {
                    v_poly.add_term(m.clone(), Scalar::from_rational(BigRational::from(c.clone())));
                }
            }
            let x_poly = if v_vars == 0 {
                MultiPoly::one(n).scale(&Scalar::from_rational(BigRational::from(prim[0].clone())))
            } else {
                v_poly.substitute_linear(&forms)
            };
            out.push((e, x_poly));
        }
    }
    Ok(out)
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading entry.
fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for q in v {
        lcm = lcm.lcm(q.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|q| (q * BigRational::from(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for z in &ints {
        gcd = gcd.gcd(z);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for z in ints.iter_mut() {
            *z = &*z / &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|z| !z.is_zero()) {
        if first.sign() == num::bigint::Sign::Minus {
            for z in ints.iter_mut() {
                *z = -&*z;
            }
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coxeter::{build_group, Multiplicity};

    fn ctx(name: &str, m: u32) -> DunklContext {
        let g = Arc::new(build_group(name).unwrap());
        let mult = Multiplicity::constant(&g, m);
        DunklContext::new(g, mult)
    }

    #[test]
    fn v_ops_match_x_space_application() {
        // compare the v-coordinate operator with the direct x-space orbit sum
        // on a translation-invariant polynomial
        let c = ctx("A2", 1);
        let n = 3;
        let dmax = 3;
        let family = validated_family(&c.group, dmax, None).unwrap();
        let phi_v = {
            // v1^2 v2 + v2^3 in difference coordinates
            let v1 = &MultiPoly::var(0, n) - &MultiPoly::var(2, n);
            let v2 = &MultiPoly::var(1, n) - &MultiPoly::var(2, n);
            &(&v1.pow(2) * &v2) + &v2.pow(3)
        };
        for d in 2..=dmax {
            for &dir in &family.per_degree[d - 1] {
                let xi = &family.directions[dir];
                let cleared = orbit_summed_operator(&c, xi, d);
                // numerator of the rational-function application
                let direct = c.apply_dxid(xi, d, &phi_v);
                let (raw_num, raw_poles) = (cleared.apply_raw(&phi_v), cleared.poles().to_vec());
                // raw/poles must reduce to direct
                let mut lhs = direct.num.clone();
                for (a, ell) in c.hyperplanes().iter().enumerate() {
                    for _ in 0..(raw_poles[a].saturating_sub(direct.poles[a])) {
                        lhs = &lhs * ell;
                    }
                }
                assert_eq!(lhs, raw_num, "cleared operator disagrees at d={}", d);
            }
        }
    }

    #[test]
    fn v_op_exact_apply_matches_modular() {
        let c = ctx("A2", 1);
        let ops = build_v_ops(&c).unwrap();
        assert!(!ops.is_empty());
        let e = 4;
        let monos_struct = monomials_of_degree(2, e);
        let monos: Vec<Vec<u16>> = monos_struct.iter().map(|m| m.0.clone()).collect();
        let vec: Vec<BigInt> = (0..monos.len()).map(|i| BigInt::from(i as i64 + 1)).collect();
        let p = prime_sequence().next().unwrap();
        for op in &ops {
            let exact = op.apply_exact(&monos, &vec);
            let cmods = op.coeffs_mod_p(p);
            let mut modular: HashMap<Vec<u16>, u64> = HashMap::new();
            for (a, z) in monos.iter().zip(vec.iter()) {
                let zm = reduce_bigint(z, p);
                for (mono, cc) in op.mono_image_mod_p(a, &cmods, p) {
                    let e = modular.entry(mono).or_insert(0);
                    *e = (*e + mul_mod(cc, zm, p)) % p;
                }
            }
            for (mono, zv) in &exact {
                assert_eq!(reduce_bigint(zv, p), modular.get(mono).copied().unwrap_or(0));
            }
        }
    }

    #[test]
    fn s2_direct_kernel() {
        for m in 0..=2u32 {
            let c = ctx("A1", m);
            let m_top = 2 * m as usize + 1;
            let result = construct(&c, m_top).unwrap();
            assert_eq!(result.len(), 2);
            let degrees: Vec<usize> = result.iter().map(|(d, _)| *d).collect();
            assert_eq!(degrees, vec![0, m_top]);
            // top element is (x1 - x2)^(2m+1) up to sign normalization
            let n = 2;
            let expect = (&MultiPoly::var(0, n) - &MultiPoly::var(1, n)).pow(m_top);
            assert_eq!(result[1].1, expect);
        }
    }

    #[test]
    fn s3_m1_degree_multiset() {
        let c = ctx("A2", 1);
        let result = construct(&c, 9).unwrap();
        let mut degrees: Vec<usize> = result.iter().map(|(d, _)| *d).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![0, 4, 4, 5, 5, 9]);
    }

    #[test]
    fn s3_m0_recovers_classical_harmonics() {
        let c = ctx("A2", 0);
        let result = construct(&c, 3).unwrap();
        let mut degrees: Vec<usize> = result.iter().map(|(d, _)| *d).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![0, 1, 1, 2, 2, 3]);
    }
}
