//! Direct construction of the graded module of generalized harmonics as a
//! joint polynomial kernel, degree by degree up to the theoretical top
//! degree sum_a N_a (2 m_a + 1).

use crate::coxeter::GroupName;
use crate::exactalg::{ExactError, Scalar};
use crate::polyops::{monomials_of_degree, MultiPoly, RatDiffOp};

use super::context::DunklContext;
use super::family::validated_family;
use super::graded::{GradedBasis, GradedEntry, Provenance};
use super::sn_engine;

/// Top degree of the kernel: sum over reflection classes of N_a (2 m_a + 1).
pub fn theoretical_top_degree(ctx: &DunklContext) -> usize {
    ctx.group
        .reflection_class_sizes
        .iter()
        .enumerate()
        .map(|(a, &na)| na * (2 * ctx.m.class_value(a) as usize + 1))
        .sum()
}

/// Construct the full graded kernel. The total dimension must come out as
/// |G| exactly; anything else is a hard failure.
pub fn construct_hm_direct(ctx: &DunklContext) -> Result<GradedBasis, ExactError> {
    let m_top = theoretical_top_degree(ctx);
    let raw: Vec<(usize, MultiPoly)> = match ctx.group.name {
        GroupName::A(_) => sn_engine::construct(ctx, m_top)?,
        GroupName::I2(_) => generic_construct(ctx, m_top)?,
    };
    let basis = GradedBasis {
        entries: raw
            .into_iter()
            .map(|(degree, poly)| GradedEntry {
                poly,
                degree,
                provenance: Provenance::Direct,
                filtration: None,
                irrep: None,
            })
            .collect(),
    };
    if basis.len() != ctx.group.order() {
        return Err(ExactError::Internal(format!(
            "direct kernel has dimension {} instead of |G| = {}",
            basis.len(),
            ctx.group.order()
        )));
    }
    if !basis.is_independent() {
        return Err(ExactError::Internal("direct kernel basis is not independent".into()));
    }
    Ok(basis)
}

/// Exact path over the working field, used for the dihedral groups: build
/// the orbit-summed cleared operators once, then intersect their kernels
/// degree by degree with plain exact elimination.
fn generic_construct(
    ctx: &DunklContext,
    m_top: usize,
) -> Result<Vec<(usize, MultiPoly)>, ExactError> {
    let group = &ctx.group;
    let n = group.n_vars;
    let mut degree_set: Vec<usize> = group.degrees.clone();
    degree_set.sort_unstable();
    degree_set.dedup();
    let dmax = *degree_set.iter().max().unwrap();
    let family = validated_family(group, dmax, None)?;

    // materialized condition operators, cheapest order first
    let mut ops: Vec<RatDiffOp> = Vec::new();
    for &d in &degree_set {
        for &dir_idx in &family.per_degree[d - 1] {
            let xi = &family.directions[dir_idx];
            let mut acc = RatDiffOp::zero(n, ctx.hyperplanes().clone());
            for (eta, count) in group.direction_orbit(xi) {
                let op = ctx.build_dd(&eta, d);
                acc = acc.add(&op.scale(&Scalar::from_int(count as i64)));
            }
            if !acc.is_zero() {
                ops.push(acc);
            }
        }
    }

    let mut out = Vec::new();
    for e in 0..=m_top {
        let monos = monomials_of_degree(n, e);
        // current kernel as polynomials
        let mut basis: Vec<MultiPoly> = monos
            .iter()
            .map(|mono| MultiPoly::from_terms(n, vec![(mono.clone(), Scalar::one())]))
            .collect();
        for op in &ops {
            if basis.is_empty() {
                break;
            }
            let images: Vec<MultiPoly> = basis.iter().map(|p| op.apply_raw(p)).collect();
            let polys: Vec<&MultiPoly> = images.iter().collect();
            let mat = super::graded::coefficient_matrix(&polys);
            let kernel = mat.transpose().nullspace()?;
            basis = kernel
                .into_iter()
                .map(|w| {
                    let mut acc = MultiPoly::zero(n);
                    for (c, b) in w.iter().zip(basis.iter()) {
                        acc.add_scaled(b, c);
                    }
                    acc
                })
                .collect();
        }
        for poly in basis {
            out.push((e, poly));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coxeter::{build_group, Multiplicity};
    use crate::dunkl::graded::regular_character_check;
    use crate::harmonics::harmonic_basis;

    fn ctx(name: &str, m: &[u32]) -> DunklContext {
        let g = Arc::new(build_group(name).unwrap());
        let mult = Multiplicity::per_class(&g, m.to_vec()).unwrap();
        DunklContext::new(g, mult)
    }

    #[test]
    fn i23_m1_dimension_and_degrees() {
        let c = ctx("I2(3)", &[1]);
        let basis = construct_hm_direct(&c).unwrap();
        assert_eq!(basis.len(), 6);
        assert_eq!(basis.max_degree(), 9);
        // same degree multiset as A2 with m = 1
        assert_eq!(basis.degree_multiset(), vec![0, 4, 4, 5, 5, 9]);
    }

    #[test]
    fn i24_mixed_multiplicity() {
        let c = ctx("I2(4)", &[1, 0]);
        let basis = construct_hm_direct(&c).unwrap();
        assert_eq!(basis.len(), 8);
        // top degree = 2*(2*1+1) + 2*(2*0+1) = 8
        assert_eq!(basis.max_degree(), 8);
        regular_character_check(&c.group, &basis).unwrap();
    }

    #[test]
    fn dihedral_m0_equals_classical() {
        let c = ctx("I2(5)", &[0]);
        let basis = construct_hm_direct(&c).unwrap();
        let h = harmonic_basis(&c.group).unwrap();
        let classical = GradedBasis {
            entries: h
                .per_degree
                .iter()
                .flatten()
                .map(|p| GradedEntry {
                    poly: p.clone(),
                    degree: p.degree().unwrap_or(0),
                    provenance: Provenance::Direct,
                    filtration: None,
                    irrep: None,
                })
                .collect(),
        };
        super::super::graded::spans_agree_per_degree(&basis, &classical).unwrap();
    }

    #[test]
    fn s2_via_dispatcher() {
        let c = ctx("A1", &[1]);
        let basis = construct_hm_direct(&c).unwrap();
        assert_eq!(basis.degree_multiset(), vec![0, 3]);
        regular_character_check(&c.group, &basis).unwrap();
    }

    #[test]
    fn constructed_elements_pass_gauged_operator() {
        let c = ctx("I2(3)", &[1]);
        let basis = construct_hm_direct(&c).unwrap();
        for e in &basis.entries {
            assert!(c.gauged_cm_apply(&e.poly).is_zero(), "radial part failed at degree {}", e.degree);
        }
    }
}
