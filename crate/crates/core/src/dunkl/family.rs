//! Rank-validated direction families.
//!
//! The commuting algebra is spanned by the orbit-summed operators indexed by
//! (direction, order); imposing them for a family of directions cuts out the
//! right space only if the averaged powers p_{xi,d} = sum_g (g xi, x)^d span
//! the full invariant space in each degree d. The family is therefore
//! validated by an explicit rank computation, never assumed.

use std::collections::HashMap;

use crate::coxeter::GroupData;
use crate::exactalg::{ExactError, Mat, Scalar};
use crate::polyops::{monomials_of_degree, Mono, MultiPoly};

#[derive(Clone, Debug)]
pub struct RankCheck {
    pub degree: usize,
    pub span_dim: usize,
    pub invariant_dim: usize,
}

#[derive(Clone, Debug)]
pub struct DirectionFamily {
    pub directions: Vec<Vec<Scalar>>,
    /// per_degree[d-1]: indices of the directions used at order d
    pub per_degree: Vec<Vec<usize>>,
    pub rank_checks: Vec<RankCheck>,
}

/// The averaged power sum p_{xi,d}(x) = sum_{g in G} (g xi, x)^d.
pub fn averaged_power(group: &GroupData, xi: &[Scalar], d: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(group.n_vars);
    for (eta, count) in group.direction_orbit(xi) {
        let ell = group.form.linear_form(&eta);
        acc.add_scaled(&ell.pow(d), &Scalar::from_int(count as i64));
    }
    acc
}

/// Deterministic candidate directions: moment-curve points and small
/// integer combinations.
fn candidate_pool(group: &GroupData) -> Vec<Vec<Scalar>> {
    let n = group.n_vars;
    let mut pool = Vec::new();
    for t in 1..=(2 * n as i64 + 8) {
        let mut v = Vec::with_capacity(n);
        let mut p = 1i64;
        for _ in 0..n {
            v.push(Scalar::from_int(p));
            p *= t;
        }
        pool.push(v);
    }
    for i in 0..n {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        pool.push(v);
    }
    pool
}

/// Select, for each order d = 1..=dmax, a subset of directions whose
/// averaged powers span the degree-d invariants; the spanning rank is
/// checked exactly against the Reynolds dimension.
pub fn validated_family(
    group: &GroupData,
    dmax: usize,
    directions: Option<Vec<Vec<Scalar>>>,
) -> Result<DirectionFamily, ExactError> {
    let pool = match directions {
        Some(d) => d,
        None => candidate_pool(group),
    };
    let n = group.n_vars;
    let mut per_degree = Vec::with_capacity(dmax);
    let mut rank_checks = Vec::with_capacity(dmax);
    for d in 1..=dmax {
        let target = group.invariant_dimension(d);
        let monos = monomials_of_degree(n, d);
        let index: HashMap<Mono, usize> =
            monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut chosen = Vec::new();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rank = 0;
        for (idx, xi) in pool.iter().enumerate() {
            if rank == target {
                break;
            }
            let p = averaged_power(group, xi, d);
            if p.is_zero() {
                continue;
            }
            let mut row = vec![Scalar::zero(); monos.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            rows.push(row);
            let new_rank = Mat::from_rows(rows.clone()).rank();
            if new_rank > rank {
                rank = new_rank;
                chosen.push(idx);
            } else {
                rows.pop();
            }
        }
        if rank != target {
            return Err(ExactError::Internal(format!(
                "direction family spans only {}/{} invariants at degree {}",
                rank, target, d
            )));
        }
        rank_checks.push(RankCheck { degree: d, span_dim: rank, invariant_dim: target });
        per_degree.push(chosen);
    }
    Ok(DirectionFamily { directions: pool, per_degree, rank_checks })
}
