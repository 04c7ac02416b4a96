//! Classical harmonic polynomials and the coinvariant module M = S/I(0).
//!
//! H0 is the joint kernel of the constant-coefficient operators sigma_i(d)
//! computed degree by degree; its dimension profile must match the product
//! formula prod (1 - t^{d_k})/(1 - t). The quotient M = S/I(0) is carried in
//! the harmonic basis (the composition H0 -> S -> M is an isomorphism of
//! G-modules), with multiplication maps pi(xi) and the full action matrices
//! of the group per degree.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coxeter::GroupData;
use crate::exactalg::{ExactError, Mat, PreparedSolve, Scalar};
use crate::polyops::{
    apply_diffop, monomials_of_degree, pairing, BilinearForm, Mono, MultiPoly,
};

/// Coefficients of prod (1 - t^{d_k}) / (1 - t) = prod (1 + t + ... + t^{d_k - 1}).
pub fn poincare_product(degrees: &[usize]) -> Vec<usize> {
    let mut acc = vec![1usize];
    for &d in degrees {
        let mut next = vec![0usize; acc.len() + d - 1];
        for (i, &c) in acc.iter().enumerate() {
            for j in 0..d {
                next[i + j] += c;
            }
        }
        acc = next;
    }
    acc
}

/// Graded basis of the classical harmonics.
pub struct HarmonicBasis {
    pub per_degree: Vec<Vec<MultiPoly>>,
    pub w0: MultiPoly,
}

impl HarmonicBasis {
    pub fn top_degree(&self) -> usize {
        self.per_degree.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.per_degree.iter().map(|v| v.len()).collect()
    }

    pub fn total_dimension(&self) -> usize {
        self.per_degree.iter().map(|v| v.len()).sum()
    }

    pub fn iter_flat(&self) -> impl Iterator<Item = &MultiPoly> {
        self.per_degree.iter().flatten()
    }
}

/// The joint kernel of sigma_i(d) in each degree 0..=N.
pub fn harmonic_basis(group: &GroupData) -> Result<HarmonicBasis, ExactError> {
    let n = group.n_vars;
    let top = group.num_reflections();
    let expected = poincare_product(&group.degrees);
    let mut per_degree: Vec<Vec<MultiPoly>> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        if d == 0 {
            per_degree.push(vec![MultiPoly::one(n)]);
            continue;
        }
        let monos = monomials_of_degree(n, d);
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for sigma in &group.sigma {
            let sd = sigma.degree().unwrap();
            if sd > d {
                continue;
            }
            let out_monos = monomials_of_degree(n, d - sd);
            let out_index: HashMap<Mono, usize> =
                out_monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut block = vec![vec![Scalar::zero(); monos.len()]; out_monos.len()];
            for (j, m) in monos.iter().enumerate() {
                let mono_poly = MultiPoly::from_terms(n, vec![(m.clone(), Scalar::one())]);
                let image = apply_diffop(sigma, &mono_poly, &group.form);
                for (om, c) in image.terms() {
                    block[out_index[om]][j] = c.clone();
                }
            }
            rows.extend(block);
        }
        let kernel = if rows.is_empty() {
            // no operator reaches this degree: every monomial is harmonic
            (0..monos.len())
                .map(|j| {
                    let mut v = vec![Scalar::zero(); monos.len()];
                    v[j] = Scalar::one();
                    v
                })
                .collect()
        } else {
            Mat::from_rows(rows).nullspace()?
        };
        let polys: Vec<MultiPoly> = kernel
            .into_iter()
            .map(|v| {
                let mut p = MultiPoly::zero(n);
                for (j, c) in v.into_iter().enumerate() {
                    p.add_term(monos[j].clone(), c);
                }
                p
            })
            .collect();
        if polys.len() != *expected.get(d).unwrap_or(&0) {
            return Err(ExactError::Internal(format!(
                "harmonic dimension {} at degree {} disagrees with the product formula {}",
                polys.len(),
                d,
                expected.get(d).unwrap_or(&0)
            )));
        }
        per_degree.push(polys);
    }
    Ok(HarmonicBasis { per_degree, w0: group.skew_product() })
}

/// mu(p) = p(d) w0 at 0 = <p, w0>.
pub fn mu(p: &MultiPoly, w0: &MultiPoly, form: &BilinearForm) -> Scalar {
    pairing(p, w0, form)
}

/// (p, q)_0 = p(d) q(d) w0 at 0.
pub fn bilinear_form0(
    p: &MultiPoly,
    q: &MultiPoly,
    w0: &MultiPoly,
    form: &BilinearForm,
) -> Scalar {
    pairing(p, &apply_diffop(q, w0, form), form)
}

/// The finite G-module M = S/I(0) in the harmonic basis.
pub struct ModuleM {
    pub group: Arc<GroupData>,
    pub basis: HarmonicBasis,
    /// flat index of the first basis element of each degree (length top+2)
    pub degree_offsets: Vec<usize>,
    /// action[g][d] maps coordinates of M^d to itself
    action: Vec<Vec<Mat>>,
    /// pi[i][d]: multiplication by x_i from M^d to M^{d+1}
    pi: Vec<Vec<Mat>>,
    /// per-degree reduction solvers over the monomial basis
    reducers: Vec<DegreeReducer>,
}

struct DegreeReducer {
    monos: Vec<Mono>,
    index: HashMap<Mono, usize>,
    solver: PreparedSolve,
    /// number of ideal spanning columns preceding the harmonic columns
    ideal_cols: usize,
    dim: usize,
}

impl ModuleM {
    pub fn build(group: Arc<GroupData>) -> Result<ModuleM, ExactError> {
        let basis = harmonic_basis(&group)?;
        let n = group.n_vars;
        let top = basis.top_degree();
        let mut degree_offsets = Vec::with_capacity(top + 2);
        let mut off = 0;
        for polys in &basis.per_degree {
            degree_offsets.push(off);
            off += polys.len();
        }
        degree_offsets.push(off);

        // per-degree reducers: columns [sigma_i * monomials | harmonics]
        let mut reducers = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let monos = monomials_of_degree(n, d);
            let index: HashMap<Mono, usize> =
                monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for sigma in &group.sigma {
                let sd = sigma.degree().unwrap();
                if sd > d {
                    continue;
                }
                for m in monomials_of_degree(n, d - sd) {
                    let mono_poly = MultiPoly::from_terms(n, vec![(m, Scalar::one())]);
                    let prod = sigma * &mono_poly;
                    let mut col = vec![Scalar::zero(); monos.len()];
                    for (mm, c) in prod.terms() {
                        col[index[mm]] = c.clone();
                    }
                    cols.push(col);
                }
            }
            let ideal_cols = cols.len();
            for h in &basis.per_degree[d] {
                let mut col = vec![Scalar::zero(); monos.len()];
                for (mm, c) in h.terms() {
                    col[index[mm]] = c.clone();
                }
                cols.push(col);
            }
            let dim = basis.per_degree[d].len();
            let rows = monos.len();
            let a = Mat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone());
            reducers.push(DegreeReducer { monos, index, solver: a.prepare_solve(), ideal_cols, dim });
        }

        let mut module = ModuleM {
            group: group.clone(),
            basis,
            degree_offsets,
            action: Vec::new(),
            pi: Vec::new(),
            reducers,
        };

        // group action per element and degree
        let mut action = Vec::with_capacity(group.order());
        for g in 0..group.order() {
            let mut per_deg = Vec::with_capacity(top + 1);
            for d in 0..=top {
                let dim = module.dim(d);
                let mut mat = Mat::zero(dim, dim);
                for b in 0..dim {
                    let h = module.basis.per_degree[d][b].clone();
                    let coords = module.reduce_homogeneous(&group.act_poly(g, &h), d)?;
                    for (a, c) in coords.into_iter().enumerate() {
                        mat[(a, b)] = c;
                    }
                }
                per_deg.push(mat);
            }
            action.push(per_deg);
        }
        module.action = action;

        // multiplication maps
        let mut pi = Vec::with_capacity(n);
        for i in 0..n {
            let xi = MultiPoly::var(i, n);
            let mut per_deg = Vec::with_capacity(top + 1);
            for d in 0..=top {
                let dim_d = module.dim(d);
                let dim_up = if d < top { module.dim(d + 1) } else { 0 };
                let mut mat = Mat::zero(dim_up, dim_d);
                if d < top {
                    for b in 0..dim_d {
                        let h = module.basis.per_degree[d][b].clone();
                        let coords = module.reduce_homogeneous(&(&xi * &h), d + 1)?;
                        for (a, c) in coords.into_iter().enumerate() {
                            mat[(a, b)] = c;
                        }
                    }
                }
                per_deg.push(mat);
            }
            pi.push(per_deg);
        }
        module.pi = pi;

        Ok(module)
    }

    pub fn top_degree(&self) -> usize {
        self.basis.top_degree()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis.per_degree.get(d).map(|v| v.len()).unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.basis.total_dimension()
    }

    /// Coordinates of a homogeneous polynomial of degree d in the harmonic
    /// basis of M^d. Errors on an inconsistent system, which would violate
    /// the Chevalley decomposition.
    pub fn reduce_homogeneous(&self, p: &MultiPoly, d: usize) -> Result<Vec<Scalar>, ExactError> {
        if d > self.top_degree() {
            // S^d = I(0) in degrees above N
            return Ok(Vec::new());
        }
        let red = &self.reducers[d];
        let mut b = vec![Scalar::zero(); red.monos.len()];
        for (m, c) in p.terms() {
            debug_assert_eq!(m.degree(), d);
            b[red.index[m]] = c.clone();
        }
        let x = red.solver.solve(&b)?;
        Ok(x[red.ideal_cols..red.ideal_cols + red.dim].to_vec())
    }

    /// Coordinates of an arbitrary polynomial: reductions of its homogeneous
    /// components, flattened over all degrees.
    pub fn reduce(&self, p: &MultiPoly) -> Result<Vec<Scalar>, ExactError> {
        let mut out = vec![Scalar::zero(); self.total_dim()];
        let top = self.top_degree();
        if let Some(maxd) = p.degree() {
            for d in 0..=maxd.min(top) {
                let comp = p.homogeneous_component(d);
                if comp.is_zero() {
                    continue;
                }
                let coords = self.reduce_homogeneous(&comp, d)?;
                let off = self.degree_offsets[d];
                for (i, c) in coords.into_iter().enumerate() {
                    out[off + i] = c;
                }
            }
        }
        Ok(out)
    }

    /// The harmonic representative with the given flat coordinates.
    pub fn lift_flat(&self, coords: &[Scalar]) -> MultiPoly {
        let mut p = MultiPoly::zero(self.group.n_vars);
        for (i, h) in self.basis.iter_flat().enumerate() {
            if !coords[i].is_zero() {
                p.add_scaled(h, &coords[i]);
            }
        }
        p
    }

    pub fn action_matrix(&self, g: usize, d: usize) -> &Mat {
        &self.action[g][d]
    }

    /// pi(e_i) from M^d to M^{d+1}.
    pub fn pi_matrix(&self, i: usize, d: usize) -> &Mat {
        &self.pi[i][d]
    }

    /// Multiplication by x_i on coordinates of M^d; the top degree maps to zero.
    pub fn pi_apply(&self, i: usize, d: usize, v: &[Scalar]) -> Vec<Scalar> {
        if d >= self.top_degree() {
            return Vec::new();
        }
        self.pi[i][d].mul_vec(v)
    }

    /// Trace of g on the whole module.
    pub fn character(&self, g: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for d in 0..=self.top_degree() {
            let m = &self.action[g][d];
            for i in 0..self.dim(d) {
                acc += &m[(i, i)];
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_group;

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn product_formula_coefficients() {
        assert_eq!(poincare_product(&[1, 2]), vec![1, 1]);
        assert_eq!(poincare_product(&[1, 2, 3]), vec![1, 2, 2, 1]);
        assert_eq!(poincare_product(&[2, 5]), vec![1, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn s2_harmonics() {
        let g = build_group("A1").unwrap();
        let h = harmonic_basis(&g).unwrap();
        assert_eq!(h.dims(), vec![1, 1]);
        // degree 1 harmonic is proportional to x1 - x2
        let d1 = &h.per_degree[1][0];
        let diff = &x(0, 2) - &x(1, 2);
        let c = d1.coeff(&Mono(vec![1, 0]));
        assert_eq!(d1, &diff.scale(&c));
        assert!(!c.is_zero());
    }

    #[test]
    fn s3_harmonic_poincare_and_w0() {
        let g = build_group("A2").unwrap();
        let h = harmonic_basis(&g).unwrap();
        assert_eq!(h.dims(), vec![1, 2, 2, 1]);
        assert_eq!(h.total_dimension(), 6);
        let n = 3;
        let expect = &(&(&x(0, n) - &x(1, n)) * &(&x(0, n) - &x(2, n))) * &(&x(1, n) - &x(2, n));
        assert_eq!(h.w0, expect);
        // the top harmonic is proportional to w0
        let top = &h.per_degree[3][0];
        let (m0, c0) = top.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let ratio = &h.w0.coeff(&m0) / &c0;
        assert_eq!(&h.w0, &top.scale(&ratio));
    }

    #[test]
    fn harmonics_killed_by_invariant_operators() {
        for name in ["A2", "I2(5)"] {
            let g = build_group(name).unwrap();
            let h = harmonic_basis(&g).unwrap();
            for hb in h.iter_flat() {
                for s in &g.sigma {
                    assert!(apply_diffop(s, hb, &g.form).is_zero());
                }
            }
        }
    }

    #[test]
    fn mu_values_for_s2() {
        let g = build_group("A1").unwrap();
        let h = harmonic_basis(&g).unwrap();
        assert_eq!(mu(&MultiPoly::one(2), &h.w0, &g.form), Scalar::zero());
        assert_eq!(mu(&h.w0, &h.w0, &g.form), Scalar::from_int(2));
    }

    #[test]
    fn mu_is_epsilon_equivariant_and_kills_ideal() {
        let g = build_group("A2").unwrap();
        let h = harmonic_basis(&g).unwrap();
        let p = &(&x(0, 3).pow(2) * &x(1, 3)) + &x(2, 3).pow(3);
        for e in 0..g.order() {
            let lhs = mu(&g.act_poly(e, &p), &h.w0, &g.form);
            let rhs = &mu(&p, &h.w0, &g.form) * &g.elements[e].det;
            assert_eq!(lhs, rhs);
        }
        // vanishes on I(0): sigma * q for homogeneous q of complementary degree
        let q = &x(0, 3) * &x(1, 3); // degree 2; sigma_1 q has degree 3 = N
        assert_eq!(mu(&(&g.sigma[0] * &q), &h.w0, &g.form), Scalar::zero());
    }

    #[test]
    fn s2_gram_antidiagonal() {
        let g = build_group("A1").unwrap();
        let h = harmonic_basis(&g).unwrap();
        let one = MultiPoly::one(2);
        let diff = &x(0, 2) - &x(1, 2);
        assert_eq!(bilinear_form0(&one, &diff, &h.w0, &g.form), Scalar::from_int(2));
        assert_eq!(bilinear_form0(&diff, &one, &h.w0, &g.form), Scalar::from_int(2));
        assert_eq!(bilinear_form0(&one, &one, &h.w0, &g.form), Scalar::zero());
        assert_eq!(bilinear_form0(&diff, &diff, &h.w0, &g.form), Scalar::zero());
    }

    #[test]
    fn form0_gram_nondegenerate_and_graded() {
        for name in ["A2", "I2(4)"] {
            let g = build_group(name).unwrap();
            let h = harmonic_basis(&g).unwrap();
            let flat: Vec<&MultiPoly> = h.iter_flat().collect();
            let dim = flat.len();
            let gram = Mat::from_fn(dim, dim, |i, j| {
                bilinear_form0(flat[i], flat[j], &h.w0, &g.form)
            });
            assert_eq!(gram.rank(), dim, "degenerate form for {}", name);
            let n_refl = g.num_reflections();
            for i in 0..dim {
                for j in 0..dim {
                    assert_eq!(gram[(i, j)], gram[(j, i)]);
                    let di = flat[i].degree().unwrap_or(0);
                    let dj = flat[j].degree().unwrap_or(0);
                    if di + dj != n_refl {
                        assert!(gram[(i, j)].is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_s2_examples() {
        let g = Arc::new(build_group("A1").unwrap());
        let m = ModuleM::build(g.clone()).unwrap();
        // x1 = (1/2) sigma_1 + (1/2)(x1 - x2)
        let coords = m.reduce(&x(0, 2)).unwrap();
        let harm = m.lift_flat(&coords);
        let expect = (&x(0, 2) - &x(1, 2)).scale(&Scalar::from_frac(1, 2));
        assert_eq!(harm, expect);
        // ideal member reduces to zero
        let q = &x(0, 2) - &x(1, 2);
        let zero = m.reduce(&(&g.sigma[0] * &q)).unwrap();
        assert!(zero.iter().all(|c| c.is_zero()));
        // harmonic reduces to itself
        let h = m.basis.per_degree[1][0].clone();
        let hh = m.lift_flat(&m.reduce(&h).unwrap());
        assert_eq!(hh, h);
    }

    #[test]
    fn reduction_is_equivariant() {
        let g = Arc::new(build_group("A2").unwrap());
        let m = ModuleM::build(g.clone()).unwrap();
        let p = &x(0, 3).pow(2) + &(&x(1, 3) * &x(2, 3));
        for e in 0..g.order() {
            // reduce(g.p) = g.(reduce(p)) as module elements
            let lhs = m.lift_flat(&m.reduce(&g.act_poly(e, &p)).unwrap());
            let reduced = m.lift_flat(&m.reduce(&p).unwrap());
            let rhs = m.lift_flat(&m.reduce(&g.act_poly(e, &reduced)).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn pi_maps_commute_and_kill_top() {
        for name in ["A2", "I2(4)"] {
            let g = Arc::new(build_group(name).unwrap());
            let m = ModuleM::build(g.clone()).unwrap();
            let n = g.n_vars;
            let top = m.top_degree();
            for d in 0..top.saturating_sub(1) {
                for i in 0..n {
                    for j in 0..n {
                        let a = m.pi_matrix(j, d + 1).mul(m.pi_matrix(i, d));
                        let b = m.pi_matrix(i, d + 1).mul(m.pi_matrix(j, d));
                        assert_eq!(a, b, "pi commutation failed for {}", name);
                    }
                }
            }
            for i in 0..n {
                let v: Vec<Scalar> = (0..m.dim(top)).map(|_| Scalar::one()).collect();
                assert!(m.pi_apply(i, top, &v).is_empty());
            }
        }
    }

    #[test]
    fn pi_s2_example() {
        let g = Arc::new(build_group("A1").unwrap());
        let m = ModuleM::build(g.clone()).unwrap();
        let v = m.pi_apply(0, 0, &[Scalar::one()]);
        let poly = m.basis.per_degree[1][0].scale(&v[0]);
        let expect = (&x(0, 2) - &x(1, 2)).scale(&Scalar::from_frac(1, 2));
        assert_eq!(poly, expect);
    }

    #[test]
    fn module_character_is_regular() {
        for name in ["A2", "I2(5)", "I2(6)"] {
            let g = Arc::new(build_group(name).unwrap());
            let m = ModuleM::build(g.clone()).unwrap();
            for e in 0..g.order() {
                let tr = m.character(e);
                if e == g.identity {
                    assert_eq!(tr, Scalar::from_int(g.order() as i64));
                } else {
                    assert!(tr.is_zero(), "nonzero trace off identity in {}", name);
                }
            }
        }
    }

    #[test]
    fn action_matrices_form_representation() {
        let g = Arc::new(build_group("A2").unwrap());
        let m = ModuleM::build(g.clone()).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.multiply(a, b);
                for d in 0..=m.top_degree() {
                    let prod = m.action_matrix(a, d).mul(m.action_matrix(b, d));
                    assert_eq!(&prod, m.action_matrix(ab, d));
                }
            }
        }
    }

    #[test]
    fn pairing_with_w0_reads_top_coordinate() {
        for name in ["A2", "I2(4)"] {
            let g = build_group(name).unwrap();
            let h = harmonic_basis(&g).unwrap();
            let top = h.top_degree();
            for (d, polys) in h.per_degree.iter().enumerate() {
                for p in polys {
                    let v = mu(p, &h.w0, &g.form);
                    if d < top {
                        assert!(v.is_zero());
                    } else {
                        assert!(!v.is_zero());
                    }
                }
            }
        }
    }
}
