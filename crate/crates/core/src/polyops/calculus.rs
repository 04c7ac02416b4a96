//! Constant-coefficient differential operators, the apolarity pairing,
//! divided differences, and symbolic univariate integration.
//!
//! The identification of polynomials with differential operators is taken
//! basis-free through a fixed nondegenerate bilinear form on V: the linear
//! form (xi, .) acts as the directional derivative along xi. In orthonormal
//! coordinates this is the usual x_i -> d/dx_i; dihedral groups use complex
//! coordinates where the Gram matrix is antidiagonal.

use crate::exactalg::{ExactError, Mat, Scalar};

use super::poly::MultiPoly;

/// The bilinear form (,) on V in working coordinates.
#[derive(Clone, Debug)]
pub struct BilinearForm {
    pub gram: Vec<Vec<Scalar>>,
    inv_gram: Vec<Vec<Scalar>>,
}

impl BilinearForm {
    pub fn new(gram: Vec<Vec<Scalar>>) -> Result<BilinearForm, ExactError> {
        let n = gram.len();
        let m = Mat::from_rows(gram.clone());
        // invertibility check + inverse by solving against the identity
        let mut inv = vec![vec![Scalar::zero(); n]; n];
        for j in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[j] = Scalar::one();
            let col = m.solve(&e).map_err(|_| {
                ExactError::Internal("bilinear form is degenerate".into())
            })?;
            for i in 0..n {
                inv[i][j] = col[i].clone();
            }
        }
        if m.rank() < n {
            return Err(ExactError::Internal("bilinear form is degenerate".into()));
        }
        Ok(BilinearForm { gram, inv_gram: inv })
    }

    pub fn standard(n: usize) -> BilinearForm {
        let mut gram = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = Scalar::one();
        }
        BilinearForm::new(gram).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// (u, v) for coordinate vectors.
    pub fn pair_vec(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() && !self.gram[i][j].is_zero() {
                    acc += &(&(ui * vj) * &self.gram[i][j]);
                }
            }
        }
        acc
    }

    /// The linear polynomial x -> (u, x).
    pub fn linear_form(&self, u: &[Scalar]) -> MultiPoly {
        let n = self.dim();
        let coeffs: Vec<Scalar> = (0..n)
            .map(|j| {
                let mut acc = Scalar::zero();
                for (i, ui) in u.iter().enumerate() {
                    if !ui.is_zero() {
                        acc += &(ui * &self.gram[i][j]);
                    }
                }
                acc
            })
            .collect();
        MultiPoly::linear(&coeffs)
    }

    /// Coordinates of the derivation corresponding to the coordinate
    /// function x_i: row i of the inverse Gram matrix.
    pub fn dual_direction(&self, i: usize) -> &[Scalar] {
        &self.inv_gram[i]
    }

    /// Apply the reflection with root alpha: v - 2 (alpha,v)/(alpha,alpha) alpha.
    pub fn reflect_vector(&self, alpha: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let num = self.pair_vec(alpha, v);
        let den = self.pair_vec(alpha, alpha);
        let c = &(&num / &den) * &Scalar::from_int(2);
        v.iter()
            .zip(alpha.iter())
            .map(|(vi, ai)| vi - &(&c * ai))
            .collect()
    }
}

/// q -> p(d) q: the polynomial p acting as a constant-coefficient operator
/// through the form. Lowers degree by deg p.
pub fn apply_diffop(p: &MultiPoly, q: &MultiPoly, form: &BilinearForm) -> MultiPoly {
    assert_eq!(p.n_vars(), q.n_vars(), "variable count mismatch");
    let n = p.n_vars();
    let mut out = MultiPoly::zero(n);
    for (m, c) in p.terms() {
        let mut acc = q.clone();
        for i in 0..n {
            for _ in 0..m.0[i] {
                acc = acc.dir_derivative(form.dual_direction(i));
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// <p, q> = p(d) q evaluated at 0.
pub fn pairing(p: &MultiPoly, q: &MultiPoly, form: &BilinearForm) -> Scalar {
    apply_diffop(p, q, form).constant_term()
}

/// (u(s x) - u(x)) / (alpha, x); the division is exact when s is the
/// reflection fixing ker alpha.
pub fn divided_difference(
    u: &MultiPoly,
    s: &[Vec<Scalar>],
    alpha: &[Scalar],
    form: &BilinearForm,
) -> Result<MultiPoly, ExactError> {
    let us = u.compose_matrix(s);
    let diff = &us - u;
    if diff.is_zero() {
        return Ok(MultiPoly::zero(u.n_vars()));
    }
    let ell = form.linear_form(alpha);
    diff.exact_div(&ell).ok_or_else(|| {
        ExactError::Internal("divided difference is not exact: inconsistent reflection/root".into())
    })
}

/// Exact antiderivative in t of a polynomial with MultiPoly coefficients
/// (coefficient of t^k at index k), evaluated between the bounds.
pub fn integrate_t(coeffs: &[MultiPoly], lower: &MultiPoly, upper: &MultiPoly) -> MultiPoly {
    let n = lower.n_vars();
    let mut out = MultiPoly::zero(n);
    let mut upow = MultiPoly::one(n);
    let mut lpow = MultiPoly::one(n);
    // running powers upper^{k+1}, lower^{k+1}
    for (k, c) in coeffs.iter().enumerate() {
        upow = &upow * upper;
        lpow = &lpow * lower;
        if c.is_zero() {
            continue;
        }
        let inv = Scalar::from_frac(1, (k + 1) as i64);
        let delta = &upow - &lpow;
        out.add_scaled(&(c * &delta), &inv);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> MultiPoly {
        MultiPoly::var(i, n)
    }

    #[test]
    fn monomial_pairing() {
        let form = BilinearForm::standard(2);
        let p = &x(0, 2) * &x(1, 2);
        assert_eq!(apply_diffop(&p, &p, &form), MultiPoly::one(2));
    }

    #[test]
    fn single_variable_derivative() {
        let form = BilinearForm::standard(1);
        let p = x(0, 1).pow(2);
        let q = x(0, 1).pow(3);
        let expect = x(0, 1).scale(&Scalar::from_int(6));
        assert_eq!(apply_diffop(&p, &q, &form), expect);
    }

    #[test]
    fn constant_acts_as_scaling() {
        let form = BilinearForm::standard(2);
        let c = MultiPoly::constant(2, Scalar::from_int(7));
        let q = &x(0, 2) + &x(1, 2);
        assert_eq!(apply_diffop(&c, &q, &form), q.scale(&Scalar::from_int(7)));
    }

    #[test]
    fn pairing_values() {
        let form = BilinearForm::standard(1);
        let p = x(0, 1).pow(3);
        assert_eq!(pairing(&p, &p, &form), Scalar::from_int(6));
        let form2 = BilinearForm::standard(2);
        assert_eq!(pairing(&x(0, 2), &x(1, 2), &form2), Scalar::zero());
    }

    #[test]
    fn pairing_respects_antidiagonal_gram() {
        // Gram [[0,1/2],[1/2,0]]: <z, w> = 2 d/dw w = 2
        let half = Scalar::from_frac(1, 2);
        let gram = vec![
            vec![Scalar::zero(), half.clone()],
            vec![half, Scalar::zero()],
        ];
        let form = BilinearForm::new(gram).unwrap();
        assert_eq!(pairing(&x(0, 2), &x(1, 2), &form), Scalar::from_int(2));
        assert_eq!(pairing(&x(0, 2), &x(0, 2), &form), Scalar::zero());
    }

    #[test]
    fn divided_difference_s2() {
        let form = BilinearForm::standard(2);
        let swap = vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::one(), Scalar::zero()],
        ];
        let alpha = vec![Scalar::one(), Scalar::from_int(-1)];
        // u = x1^2 -> (x2^2 - x1^2)/(x1 - x2) = -(x1 + x2)
        let u = x(0, 2).pow(2);
        let dd = divided_difference(&u, &swap, &alpha, &form).unwrap();
        assert_eq!(dd, -&(&x(0, 2) + &x(1, 2)));
        // u = x1 -> -1
        let dd1 = divided_difference(&x(0, 2), &swap, &alpha, &form).unwrap();
        assert_eq!(dd1, MultiPoly::constant(2, Scalar::from_int(-1)));
        // invariant u -> 0
        let inv = &x(0, 2) * &x(1, 2);
        assert!(divided_difference(&inv, &swap, &alpha, &form).unwrap().is_zero());
    }

    #[test]
    fn integrate_linear() {
        let n = 2;
        // integral_{x1}^{x2} t dt = (x2^2 - x1^2)/2
        let coeffs = vec![MultiPoly::zero(n), MultiPoly::one(n)];
        let out = integrate_t(&coeffs, &x(0, n), &x(1, n));
        let expect = (&x(1, n).pow(2) - &x(0, n).pow(2)).scale(&Scalar::from_frac(1, 2));
        assert_eq!(out, expect);
        // equal bounds -> 0
        assert!(integrate_t(&coeffs, &x(0, n), &x(0, n)).is_zero());
    }

    #[test]
    fn integrate_cubic_identity() {
        let n = 2;
        // integral_{x1}^{x2} ((x1+x2) t - 2 x1 x2) dt = (x2 - x1)^3 / 2
        let coeffs = vec![
            (&x(0, n) * &x(1, n)).scale(&Scalar::from_int(-2)),
            &x(0, n) + &x(1, n),
        ];
        let out = integrate_t(&coeffs, &x(0, n), &x(1, n));
        let expect = (&x(1, n) - &x(0, n)).pow(3).scale(&Scalar::from_frac(1, 2));
        assert_eq!(out, expect);
    }
}
