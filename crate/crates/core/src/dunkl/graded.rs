//! Graded bases of the generalized harmonic module and comparisons
//! between independently constructed ones.

use std::collections::HashMap;

use crate::coxeter::GroupData;
use crate::exactalg::{ExactError, Mat, Scalar};
use crate::polyops::{Mono, MultiPoly};
use crate::reptheory::IrrepLabel;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Direct,
    Kz,
}

#[derive(Clone, Debug)]
pub struct GradedEntry {
    pub poly: MultiPoly,
    pub degree: usize,
    pub provenance: Provenance,
    /// filtration level d of the originating lowest component (KZ route)
    pub filtration: Option<usize>,
    pub irrep: Option<IrrepLabel>,
}

#[derive(Clone, Debug, Default)]
pub struct GradedBasis {
    pub entries: Vec<GradedEntry>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Degrees with multiplicity, ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.entries.iter().map(|e| e.degree).collect();
        v.sort_unstable();
        v
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(|e| e.degree).max().unwrap_or(0)
    }

    pub fn of_degree(&self, d: usize) -> Vec<&GradedEntry> {
        self.entries.iter().filter(|e| e.degree == d).collect()
    }

    /// Exact linear independence of the whole collection, degree by degree.
    pub fn is_independent(&self) -> bool {
        let maxd = self.max_degree();
        for d in 0..=maxd {
            let polys: Vec<&MultiPoly> = self.of_degree(d).iter().map(|e| &e.poly).collect();
            if polys.is_empty() {
                continue;
            }
            let mat = coefficient_matrix(&polys);
            if mat.rank() != polys.len() {
                return false;
            }
        }
        true
    }
}

/// Rows = polynomials over the union of their monomials.
pub fn coefficient_matrix(polys: &[&MultiPoly]) -> Mat {
    let mut monos: Vec<Mono> = Vec::new();
    let mut index: HashMap<Mono, usize> = HashMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            if !index.contains_key(m) {
                index.insert(m.clone(), monos.len());
                monos.push(m.clone());
            }
        }
    }
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        let mut row = vec![Scalar::zero(); monos.len()];
        for (m, c) in p.terms() {
            row[index[m]] = c.clone();
        }
        rows.push(row);
    }
    Mat::from_rows(rows)
}

/// The two collections span the same subspace in every degree: checked by
/// per-degree ranks of each side and of the concatenation.
pub fn spans_agree_per_degree(a: &GradedBasis, b: &GradedBasis) -> Result<(), ExactError> {
    let maxd = a.max_degree().max(b.max_degree());
    for d in 0..=maxd {
        let pa: Vec<&MultiPoly> = a.of_degree(d).iter().map(|e| &e.poly).collect();
        let pb: Vec<&MultiPoly> = b.of_degree(d).iter().map(|e| &e.poly).collect();
        if pa.len() != pb.len() {
            return Err(ExactError::Internal(format!(
                "span dimension mismatch at degree {}: {} vs {}",
                d,
                pa.len(),
                pb.len()
            )));
        }
        if pa.is_empty() {
            continue;
        }
        let ra = coefficient_matrix(&pa).rank();
        let rb = coefficient_matrix(&pb).rank();
        let all: Vec<&MultiPoly> = pa.iter().chain(pb.iter()).copied().collect();
        let rc = coefficient_matrix(&all).rank();
        if !(ra == pa.len() && rb == pb.len() && rc == ra) {
            return Err(ExactError::Internal(format!(
                "spans differ at degree {}: ranks {} / {} / concatenated {}",
                d, ra, rb, rc
            )));
        }
    }
    Ok(())
}

/// The character of the group action on the span must be the regular one:
/// |G| at the identity, 0 elsewhere. Exact.
pub fn regular_character_check(group: &GroupData, basis: &GradedBasis) -> Result<(), ExactError> {
    let maxd = basis.max_degree();
    let mut traces: Vec<Scalar> =
        group.conjugacy_classes.iter().map(|_| Scalar::zero()).collect();
    for d in 0..=maxd {
        let polys: Vec<&MultiPoly> = basis.of_degree(d).iter().map(|e| &e.poly).collect();
        if polys.is_empty() {
            continue;
        }
        let mat = coefficient_matrix(&polys);
        // re-derive the monomial index used by coefficient_matrix
        let mut monos: Vec<Mono> = Vec::new();
        let mut index: HashMap<Mono, usize> = HashMap::new();
        for p in &polys {
            for (m, _) in p.terms() {
                if !index.contains_key(m) {
                    index.insert(m.clone(), monos.len());
                    monos.push(m.clone());
                }
            }
        }
        let solver = mat.transpose().prepare_solve();
        for (ci, class) in group.conjugacy_classes.iter().enumerate() {
            let g = class.rep;
            let mut trace = Scalar::zero();
            for (i, p) in polys.iter().enumerate() {
                let acted = group.act_poly(g, p);
                let mut b = vec![Scalar::zero(); monos.len()];
                for (m, c) in acted.terms() {
                    let j = index.get(m).ok_or_else(|| {
                        ExactError::Internal("group action left the span".into())
                    })?;
                    b[*j] = c.clone();
                }
                let coords = solver.solve(&b).map_err(|_| {
                    ExactError::Internal("group action left the span".into())
                })?;
                trace += &coords[i];
            }
            traces[ci] = &traces[ci] + &trace;
        }
    }
    for (ci, class) in group.conjugacy_classes.iter().enumerate() {
        let expected = if class.rep == group.identity {
            Scalar::from_int(group.order() as i64)
        } else {
            Scalar::zero()
        };
        if traces[ci] != expected {
            return Err(ExactError::Internal(format!(
                "character at class {} is {} instead of {}",
                class.label, traces[ci], expected
            )));
        }
    }
    Ok(())
}
