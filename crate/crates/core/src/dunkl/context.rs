//! Dunkl operator application, the recursive higher-order operators, and
//! the m-harmonicity verifier.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::coxeter::{GroupData, Multiplicity};
use crate::exactalg::{ExactError, Scalar};
use crate::polyops::{divided_difference, MultiPoly, RatDiffOp};

use super::family::{validated_family, DirectionFamily};

/// A rational function with poles on the reflection arrangement:
/// numerator / prod_alpha ell_alpha^{poles[alpha]}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: MultiPoly,
    pub poles: Vec<u16>,
}

impl RationalFunction {
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

/// Shared context: the group, a multiplicity function, and the operator
/// cache for the recursively built one-direction operators.
pub struct DunklContext {
    pub group: Arc<GroupData>,
    pub m: Multiplicity,
    hyperplanes: Arc<Vec<MultiPoly>>,
    /// (direction coordinates, order) -> built operator; insertion is
    /// idempotent, concurrent lookups race only on identical values.
    memo: Mutex<HashMap<(Vec<Scalar>, usize), Arc<RatDiffOp>>>,
}

impl DunklContext {
    pub fn new(group: Arc<GroupData>, m: Multiplicity) -> DunklContext {
        let hyperplanes = Arc::new(
            group
                .positive_roots
                .iter()
                .map(|r| group.root_form(r))
                .collect::<Vec<_>>(),
        );
        DunklContext { group, m, hyperplanes, memo: Mutex::new(HashMap::new()) }
    }

    pub fn hyperplanes(&self) -> &Arc<Vec<MultiPoly>> {
        &self.hyperplanes
    }

    /// Multiplicity of the root with the given index.
    pub fn root_multiplicity(&self, root_idx: usize) -> u32 {
        self.m.class_value(self.group.positive_roots[root_idx].class_id)
    }

    /// The Dunkl operator D_xi applied to a polynomial; the result is again
    /// a polynomial (the divided differences are exact).
    pub fn dunkl_apply(&self, xi: &[Scalar], p: &MultiPoly) -> MultiPoly {
        let mut out = p.dir_derivative(xi);
        for (idx, root) in self.group.positive_roots.iter().enumerate() {
            let m_a = self.root_multiplicity(idx);
            if m_a == 0 {
                continue;
            }
            let pair = self.group.form.pair_vec(&root.vector, xi);
            if pair.is_zero() {
                continue;
            }
            let s = &self.group.elements[root.element].matrix;
            let dd = divided_difference(p, s, &root.vector, &self.group.form)
                .expect("reflection data is consistent by construction");
            let c = &pair * &Scalar::from_int(m_a as i64);
            out.add_scaled(&dd, &c);
        }
        out
    }

    /// The operator whose restriction to invariants is the d-th Dunkl power,
    /// built by the defining recursion and memoized per direction.
    pub fn build_dd(&self, xi: &[Scalar], d: usize) -> Arc<RatDiffOp> {
        let key = (xi.to_vec(), d);
        if let Some(op) = self.memo.lock().unwrap().get(&key) {
            return op.clone();
        }
        let n = self.group.n_vars;
        let result = if d == 0 {
            RatDiffOp::identity(n, self.hyperplanes.clone())
        } else {
            let prev = self.build_dd(xi, d - 1);
            let mut op = prev.compose_dir(xi);
            for (idx, root) in self.group.positive_roots.iter().enumerate() {
                let m_a = self.root_multiplicity(idx);
                if m_a == 0 {
                    continue;
                }
                let pair = self.group.form.pair_vec(&root.vector, xi);
                if pair.is_zero() {
                    continue;
                }
                let refl_xi = self.group.form.reflect_vector(&root.vector, xi);
                let prev_refl = self.build_dd(&refl_xi, d - 1);
                let delta = prev_refl.sub(&prev);
                let c = &pair * &Scalar::from_int(m_a as i64);
                op = op.add(&delta.mul_pole(&c, idx));
            }
            op
        };
        let arc = Arc::new(result);
        self.memo
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| arc.clone())
            .clone()
    }

    /// D_{xi,d} phi = sum_{g in G} D^{(d)}_{g xi} phi, computed by running the
    /// recursion on the values over the orbit of the direction (never
    /// materializing operators). Returns the reduced rational function.
    pub fn apply_dxid(&self, xi: &[Scalar], d: usize, phi: &MultiPoly) -> RationalFunction {
        assert!(d >= 1);
        let orbit = self.group.direction_orbit(xi);
        let values = self.power_family(&orbit, d, phi);
        let n_roots = self.hyperplanes.len();
        let mut num = MultiPoly::zero(self.group.n_vars);
        for ((_, count), f) in orbit.iter().zip(values.iter()) {
            num.add_scaled(&f.num, &Scalar::from_int(*count as i64));
        }
        let poles = values.first().map(|f| f.poles.clone()).unwrap_or(vec![0; n_roots]);
        reduce_rational(RationalFunction { num, poles }, &self.hyperplanes)
    }

    /// Values D^{(level)}_eta phi for every eta in the orbit, sharing one
    /// pole vector per level.
    fn power_family(
        &self,
        orbit: &[(Vec<Scalar>, usize)],
        d: usize,
        phi: &MultiPoly,
    ) -> Vec<RationalFunction> {
        let n_roots = self.hyperplanes.len();
        let index: HashMap<Vec<Scalar>, usize> =
            orbit.iter().enumerate().map(|(i, (v, _))| (v.clone(), i)).collect();
        let mut values: Vec<RationalFunction> = orbit
            .iter()
            .map(|_| RationalFunction { num: phi.clone(), poles: vec![0; n_roots] })
            .collect();
        let full: MultiPoly = self
            .hyperplanes
            .iter()
            .fold(MultiPoly::one(self.group.n_vars), |acc, ell| &acc * ell);
        let partials: Vec<MultiPoly> = (0..n_roots)
            .map(|a| {
                self.hyperplanes
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| *c != a)
                    .fold(MultiPoly::one(self.group.n_vars), |acc, (_, ell)| &acc * ell)
            })
            .collect();

        for _level in 1..=d {
            let poles = values[0].poles.clone();
            let mut next: Vec<RationalFunction> = Vec::with_capacity(values.len());
            for (oi, (eta, _)) in orbit.iter().enumerate() {
                // derivative part: d_eta (num / prod ell^poles)
                let mut num = &values[oi].num.dir_derivative(eta) * &full;
                for (a, ell) in self.hyperplanes.iter().enumerate() {
                    if poles[a] == 0 {
                        continue;
                    }
                    let ell_eta = ell_at(ell, eta);
                    if ell_eta.is_zero() {
                        continue;
                    }
                    let c = &ell_eta * &Scalar::from_int(poles[a] as i64);
                    num = &num - &(&values[oi].num * &partials[a]).scale(&c);
                }
                // reflection differences
                for (idx, root) in self.group.positive_roots.iter().enumerate() {
                    let m_a = self.root_multiplicity(idx);
                    if m_a == 0 {
                        continue;
                    }
                    let pair = self.group.form.pair_vec(&root.vector, eta);
                    if pair.is_zero() {
                        continue;
                    }
                    let refl = self.group.form.reflect_vector(&root.vector, eta);
                    let oj = *index.get(&refl).expect("orbit closed under reflections");
                    let diff = &values[oj].num - &values[oi].num;
                    if diff.is_zero() {
                        continue;
                    }
                    let c = &pair * &Scalar::from_int(m_a as i64);
                    num.add_scaled(&(&diff * &partials[idx]), &c);
                }
                let new_poles: Vec<u16> = poles.iter().map(|&p| p + 1).collect();
                next.push(RationalFunction { num, poles: new_poles });
            }
            // uniform pole reduction across the family keeps level degrees low
            for a in 0..n_roots {
                loop {
                    if next[0].poles[a] == 0 {
                        break;
                    }
                    let divided: Option<Vec<MultiPoly>> = next
                        .iter()
                        .map(|f| {
                            if f.num.is_zero() {
                                Some(MultiPoly::zero(self.group.n_vars))
                            } else {
                                f.num.exact_div(&self.hyperplanes[a])
                            }
                        })
                        .collect();
                    match divided {
                        Some(nums) => {
                            for (f, q) in next.iter_mut().zip(nums) {
                                f.num = q;
                                f.poles[a] -= 1;
                            }
                        }
                        None => break,
                    }
                }
            }
            values = next;
        }
        values
    }

    /// The gauged radial operator Delta - sum_alpha 2 m_alpha / ell_alpha
    /// d_alpha, applied to phi and cleared of poles.
    pub fn gauged_cm_apply(&self, phi: &MultiPoly) -> RationalFunction {
        let n = self.group.n_vars;
        // Laplace operator for the form: sum_ij invB_ij d_i d_j
        let mut lap = MultiPoly::zero(n);
        for i in 0..n {
            let di = phi.dir_derivative(self.group.form.dual_direction(i));
            lap = &lap + &di.derivative(i);
        }
        let full: MultiPoly = self
            .hyperplanes
            .iter()
            .fold(MultiPoly::one(n), |acc, ell| &acc * ell);
        let mut num = &lap * &full;
        for (idx, root) in self.group.positive_roots.iter().enumerate() {
            let m_a = self.root_multiplicity(idx);
            if m_a == 0 {
                continue;
            }
            let partial = self
                .hyperplanes
                .iter()
                .enumerate()
                .filter(|(c, _)| *c != idx)
                .fold(MultiPoly::one(n), |acc, (_, ell)| &acc * ell);
            let d_alpha = phi.dir_derivative(&root.vector);
            let c = Scalar::from_int(2 * m_a as i64);
            num = &num - &(&d_alpha * &partial).scale(&c);
        }
        reduce_rational(
            RationalFunction { num, poles: vec![1; self.hyperplanes.len()] },
            &self.hyperplanes,
        )
    }
}

fn ell_at(ell: &MultiPoly, xi: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in ell.terms() {
        let i = m.0.iter().position(|&e| e == 1).unwrap();
        acc += &(c * &xi[i]);
    }
    acc
}

fn reduce_rational(mut f: RationalFunction, hyperplanes: &[MultiPoly]) -> RationalFunction {
    if f.num.is_zero() {
        f.poles.iter_mut().for_each(|p| *p = 0);
        return f;
    }
    for (a, ell) in hyperplanes.iter().enumerate() {
        while f.poles[a] > 0 {
            match f.num.exact_div(ell) {
                Some(q) => {
                    f.num = q;
                    f.poles[a] -= 1;
                }
                None => break,
            }
        }
    }
    f
}

/// Certificate produced by the m-harmonicity verifier: records the rank
/// validation of the direction family and any failing condition.
#[derive(Debug)]
pub struct HarmonicityCertificate {
    pub ok: bool,
    pub family: DirectionFamily,
    /// (direction index, order d) of the conditions that failed
    pub failures: Vec<(usize, usize)>,
}

/// Checks that D_{xi,d} phi = 0 for a rank-validated family of directions
/// and orders d = 1..=dmax; dmax must reach the largest invariant degree.
pub fn verify_m_harmonic(
    ctx: &DunklContext,
    phi: &MultiPoly,
    dmax: usize,
    directions: Option<Vec<Vec<Scalar>>>,
) -> Result<HarmonicityCertificate, ExactError> {
    let max_deg = *ctx.group.degrees.iter().max().unwrap();
    if dmax < max_deg {
        return Err(ExactError::Internal(format!(
            "dmax = {} does not reach the top invariant degree {}",
            dmax, max_deg
        )));
    }
    let family = validated_family(&ctx.group, dmax, directions)?;
    let mut failures = Vec::new();
    for d in 1..=dmax {
        for &dir_idx in &family.per_degree[d - 1] {
            let f = ctx.apply_dxid(&family.directions[dir_idx], d, phi);
            if !f.is_zero() {
                failures.push((dir_idx, d));
            }
        }
    }
    Ok(HarmonicityCertificate { ok: failures.is_empty(), family, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_group;

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    fn s2_ctx(m: u32) -> DunklContext {
        let g = Arc::new(build_group("A1").unwrap());
        let mult = Multiplicity::constant(&g, m);
        DunklContext::new(g, mult)
    }

    #[test]
    fn dunkl_kills_x1_for_m1() {
        let ctx = s2_ctx(1);
        let e1 = vec![Scalar::one(), Scalar::zero()];
        let out = ctx.dunkl_apply(&e1, &x(0, 2));
        assert!(out.is_zero());
    }

    #[test]
    fn dunkl_on_constants_and_m0() {
        let ctx = s2_ctx(1);
        let e1 = vec![Scalar::one(), Scalar::zero()];
        assert!(ctx.dunkl_apply(&e1, &MultiPoly::one(2)).is_zero());
        let ctx0 = s2_ctx(0);
        let p = x(0, 2).pow(3);
        assert_eq!(ctx0.dunkl_apply(&e1, &p), p.derivative(0));
    }

    #[test]
    fn dunkl_commutativity_small() {
        let g = Arc::new(build_group("A2").unwrap());
        let ctx = DunklContext::new(g.clone(), Multiplicity::constant(&g, 1));
        let xi = vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(-1)];
        let eta = vec![Scalar::from_int(3), Scalar::from_int(-1), Scalar::from_int(1)];
        let p = &(&x(0, 3).pow(2) * &x(1, 3)) + &x(2, 3).pow(3);
        let ab = ctx.dunkl_apply(&xi, &ctx.dunkl_apply(&eta, &p));
        let ba = ctx.dunkl_apply(&eta, &ctx.dunkl_apply(&xi, &p));
        assert_eq!(ab, ba);
    }

    #[test]
    fn dunkl_equivariance() {
        let g = Arc::new(build_group("A2").unwrap());
        let ctx = DunklContext::new(g.clone(), Multiplicity::constant(&g, 2));
        let xi = vec![Scalar::from_int(1), Scalar::from_int(-2), Scalar::from_int(4)];
        let p = &x(0, 3).pow(3) + &(&x(1, 3) * &x(2, 3));
        for e in 0..g.order() {
            let gxi = g.act_vector(e, &xi);
            let lhs = ctx.dunkl_apply(&gxi, &g.act_poly(e, &p));
            let rhs = g.act_poly(e, &ctx.dunkl_apply(&xi, &p));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn build_dd_order_one_is_derivative() {
        let ctx = s2_ctx(1);
        let xi = vec![Scalar::from_int(2), Scalar::from_int(5)];
        let op = ctx.build_dd(&xi, 1);
        let p = &x(0, 2).pow(2) + &(&x(0, 2) * &x(1, 2));
        let (num, poles) = op.apply(&p);
        assert_eq!(num, p.dir_derivative(&xi));
        assert!(poles.iter().all(|&e| e == 0));
    }

    #[test]
    fn build_dd_restriction_property_on_invariants() {
        // on invariant f, D^(2)_xi f = D_xi(D_xi f)
        let ctx = s2_ctx(1);
        let xi = vec![Scalar::from_int(1), Scalar::from_int(3)];
        let f = &x(0, 2).pow(2) + &x(1, 2).pow(2);
        let op = ctx.build_dd(&xi, 2);
        let (num, poles) = op.apply(&f);
        let twice = ctx.dunkl_apply(&xi, &ctx.dunkl_apply(&xi, &f));
        assert!(poles.iter().all(|&e| e == 0));
        assert_eq!(num, twice);
    }

    #[test]
    fn build_dd_m0_is_plain_power() {
        let ctx = s2_ctx(0);
        let xi = vec![Scalar::one(), Scalar::from_int(-1)];
        let op = ctx.build_dd(&xi, 3);
        let p = x(0, 2).pow(4);
        let (num, poles) = op.apply(&p);
        let expect = p
            .dir_derivative(&xi)
            .dir_derivative(&xi)
            .dir_derivative(&xi);
        assert!(poles.iter().all(|&e| e == 0));
        assert_eq!(num, expect);
    }

    #[test]
    fn apply_dxid_s2_examples() {
        let ctx = s2_ctx(1);
        let xi = vec![Scalar::one(), Scalar::from_int(2)];
        // constants are in the kernel for every d >= 1
        for d in 1..=2 {
            assert!(ctx.apply_dxid(&xi, d, &MultiPoly::one(2)).is_zero());
        }
        // (x1 - x2)^3 is m-harmonic for m = 1
        let phi = (&x(0, 2) - &x(1, 2)).pow(3);
        assert!(ctx.apply_dxid(&xi, 1, &phi).is_zero());
        assert!(ctx.apply_dxid(&xi, 2, &phi).is_zero());
        // x1 - x2 is not
        let lin = &x(0, 2) - &x(1, 2);
        assert!(!ctx.apply_dxid(&xi, 2, &lin).is_zero());
    }

    #[test]
    fn gauged_cm_matches_hand_computation() {
        // L phi for phi = (x1-x2)^3, m = 1 vanishes
        let ctx = s2_ctx(1);
        let phi = (&x(0, 2) - &x(1, 2)).pow(3);
        assert!(ctx.gauged_cm_apply(&phi).is_zero());
        // for m = 2 it does not
        let ctx2 = s2_ctx(2);
        assert!(!ctx2.gauged_cm_apply(&phi).is_zero());
    }

    #[test]
    fn verify_m_harmonic_s2() {
        let ctx = s2_ctx(1);
        let phi = (&x(1, 2) - &x(0, 2)).pow(3).scale(&Scalar::from_frac(1, 6));
        let cert = verify_m_harmonic(&ctx, &phi, 2, None).unwrap();
        assert!(cert.ok);
        // a classical degree-1 harmonic is not 1-harmonic
        let lin = &x(0, 2) - &x(1, 2);
        let cert2 = verify_m_harmonic(&ctx, &lin, 2, None).unwrap();
        assert!(!cert2.ok);
        assert!(!cert2.failures.is_empty());
        // constants always pass
        let cert3 = verify_m_harmonic(&ctx, &MultiPoly::one(2), 2, None).unwrap();
        assert!(cert3.ok);
    }

    #[test]
    fn verify_rejects_insufficient_dmax() {
        let ctx = s2_ctx(1);
        let err = verify_m_harmonic(&ctx, &MultiPoly::one(2), 1, None);
        assert!(err.is_err());
    }

    #[test]
    fn root_scale_invariance() {
        // rescaling a root leaves dunkl_apply and apply_dxid unchanged as
        // rational functions (cross-multiplied against each context's forms)
        let g0 = Arc::new(build_group("A2").unwrap());
        let g1 = Arc::new({
            let mut g = build_group("A2").unwrap();
            g.scale_root_for_test(1, &Scalar::from_frac(-7, 3));
            g
        });
        let m0 = Multiplicity::constant(&g0, 1);
        let m1 = Multiplicity::constant(&g1, 1);
        let ctx0 = DunklContext::new(g0, m0);
        let ctx1 = DunklContext::new(g1, m1);
        let xi = vec![Scalar::from_int(2), Scalar::from_int(1), Scalar::from_int(-1)];
        let p = &x(0, 3).pow(3) + &(&x(1, 3).pow(2) * &x(2, 3));
        assert_eq!(ctx0.dunkl_apply(&xi, &p), ctx1.dunkl_apply(&xi, &p));
        let f0 = ctx0.apply_dxid(&xi, 2, &p);
        let f1 = ctx1.apply_dxid(&xi, 2, &p);
        let h0 = ctx0.hyperplanes();
        let h1 = ctx1.hyperplanes();
        let mut lhs = f0.num.clone();
        let mut rhs = f1.num.clone();
        for a in 0..h0.len() {
            for _ in 0..f1.poles[a] {
                lhs = &lhs * &h1[a];
            }
            for _ in 0..f0.poles[a] {
                rhs = &rhs * &h0[a];
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dihedral_dxid_basics() {
        // constants pass every condition; a bare coordinate fails at d = 2
        // once the multiplicity is nonzero
        let g = Arc::new(build_group("I2(3)").unwrap());
        let ctx = DunklContext::new(g.clone(), Multiplicity::constant(&g, 1));
        let xi = vec![Scalar::one(), Scalar::from_int(2)];
        assert!(ctx.apply_dxid(&xi, 2, &MultiPoly::one(2)).is_zero());
        let z = x(0, 2);
        assert!(!ctx.apply_dxid(&xi, 2, &z).is_zero());
    }
}
