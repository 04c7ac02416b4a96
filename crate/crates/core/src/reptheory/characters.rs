//! Irreducible characters: Murnaghan-Nakayama for the symmetric groups,
//! closed-form tables for the dihedral groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::coxeter::{GroupData, GroupName};
use crate::exactalg::{ExactError, Scalar};

use super::partition::YoungDiagram;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum IrrepLabel {
    /// S_n irreducible, by Young diagram.
    Partition(YoungDiagram),
    /// Dihedral one-dimensionals.
    Trivial,
    Sign,
    /// chi(r) = -1, chi(s) = +1 on the even reflection class (N even).
    PlusK,
    /// chi(r) = -1, chi(s) = -1 on the even reflection class (N even).
    MinusK,
    /// Two-dimensional V_j, 1 <= j <= (N-1)/2 for odd N, j < N/2 for even.
    TwoDim(usize),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Partition(d) => write!(f, "{}", d),
            IrrepLabel::Trivial => write!(f, "triv"),
            IrrepLabel::Sign => write!(f, "sign"),
            IrrepLabel::PlusK => write!(f, "plus_k"),
            IrrepLabel::MinusK => write!(f, "minus_k"),
            IrrepLabel::TwoDim(j) => write!(f, "two_dim({})", j),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: IrrepLabel,
    pub dim: usize,
    /// Character values aligned with `GroupData::conjugacy_classes`.
    pub values: Vec<Scalar>,
}

/// Character table of a supported group, aligned with the conjugacy class
/// order of the underlying `GroupData`.
pub struct CharacterTable {
    pub group: Arc<GroupData>,
    pub irreps: Vec<Irrep>,
    /// conjugacy-class index of each element
    pub class_of: Vec<usize>,
    /// conjugacy-class index of the inverses of each class
    pub class_of_inverse: Vec<usize>,
    /// conjugacy-class index holding the reflections of root class a
    pub reflection_class: Vec<usize>,
    pub identity_class: usize,
}

/// Murnaghan-Nakayama: the character of the S_n module `shape` at the class
/// of cycle type `cycles`.
pub fn character_sn(shape: &YoungDiagram, cycles: &[usize]) -> i64 {
    assert_eq!(
        shape.size(),
        cycles.iter().sum::<usize>(),
        "cycle type size must match the diagram"
    );
    // beta-number (first-column hook) encoding
    let k = shape.rows();
    let mut beta: Vec<usize> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (k - 1 - i))
        .collect();
    beta.sort_unstable();
    let mut memo = HashMap::new();
    mn_rec(&beta, cycles, &mut memo)
}

fn mn_rec(beta: &[usize], cycles: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    if cycles.is_empty() {
        return 1;
    }
    let key = (beta.to_vec(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = cycles[0];
    let rest = &cycles[1..];
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < t || beta.binary_search(&(b - t)).is_ok() {
            continue;
        }
        let target = b - t;
        // height = number of beta entries strictly between target and b
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<usize> = beta.to_vec();
        next.remove(idx);
        let pos = next.binary_search(&target).unwrap_err();
        next.insert(pos, target);
        total += sign * mn_rec(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

pub fn character_table(group: Arc<GroupData>) -> Result<CharacterTable, ExactError> {
    let mut class_of = vec![usize::MAX; group.order()];
    for (ci, class) in group.conjugacy_classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = ci;
        }
    }
    let identity_class = class_of[group.identity];
    // reflection class a -> conjugacy class of one of its reflections
    let reflection_class: Vec<usize> = (0..group.num_classes)
        .map(|a| {
            let root = group
                .positive_roots
                .iter()
                .find(|r| r.class_id == a)
                .expect("nonempty reflection class");
            class_of[root.element]
        })
        .collect();

    let irreps = match group.name {
        GroupName::A(k) => sn_irreps(&group, k + 1),
        GroupName::I2(n) => dihedral_irreps(&group, n),
    };

    // column orthogonality sanity: sum dim^2 = |G|
    let total: usize = irreps.iter().map(|i| i.dim * i.dim).sum();
    if total != group.order() {
        return Err(ExactError::Internal("character table dimension check failed".into()));
    }

    let class_of_inverse: Vec<usize> = group
        .conjugacy_classes
        .iter()
        .map(|c| {
            let inv_mat = &group.elements[c.rep].inv_matrix;
            let idx = group
                .elements
                .iter()
                .position(|e| &e.matrix == inv_mat)
                .expect("inverse in group");
            class_of[idx]
        })
        .collect();

    Ok(CharacterTable { group, irreps, class_of, class_of_inverse, reflection_class, identity_class })
}

fn sn_irreps(group: &GroupData, n: usize) -> Vec<Irrep> {
    let cycle_types: Vec<Vec<usize>> = group
        .conjugacy_classes
        .iter()
        .map(|c| {
            let perm = group.elements[c.rep].perm.as_ref().expect("S_n element");
            crate::coxeter::group_cycle_type(perm)
        })
        .collect();
    YoungDiagram::all(n)
        .into_iter()
        .map(|shape| {
            let dim = shape.dimension() as usize;
            let values = cycle_types
                .iter()
                .map(|ct| Scalar::from_int(character_sn(&shape, ct)))
                .collect();
            Irrep { label: IrrepLabel::Partition(shape), dim, values }
        })
        .collect()
}

fn dihedral_irreps(group: &GroupData, n_gon: usize) -> Vec<Irrep> {
    let even = n_gon % 2 == 0;
    let zeta_n = Scalar::zeta_pow(2 * n_gon as u32, 2); // zeta_N
    // class data: rep < n_gon is the rotation r^rep; otherwise a reflection r^(rep-n)s
    let classes = &group.conjugacy_classes;
    let mut irreps = Vec::new();

    // one-dimensional character determined by chi(r) and chi(s);
    // chi(r^l) = chi(r)^l and chi(r^j s) = chi(r)^j chi(s).
    let one_dim = |rot_sign: i64, s_sign: i64| -> Vec<Scalar> {
        classes
            .iter()
            .map(|c| {
                if c.rep < n_gon {
                    let l = c.rep as u32;
                    Scalar::from_int(if rot_sign == -1 && l % 2 == 1 { -1 } else { 1 })
                } else {
                    let j = (c.rep - n_gon) as u32;
                    let rot = if rot_sign == -1 && j % 2 == 1 { -1 } else { 1 };
                    Scalar::from_int(rot * s_sign)
                }
            })
            .collect()
    };
    // trivial and sign
    irreps.push(Irrep { label: IrrepLabel::Trivial, dim: 1, values: one_dim(1, 1) });
    irreps.push(Irrep { label: IrrepLabel::Sign, dim: 1, values: one_dim(1, -1) });
    if even {
        irreps.push(Irrep { label: IrrepLabel::PlusK, dim: 1, values: one_dim(-1, 1) });
        irreps.push(Irrep { label: IrrepLabel::MinusK, dim: 1, values: one_dim(-1, -1) });
    }
    let top = if even { n_gon / 2 - 1 } else { (n_gon - 1) / 2 };
    for j in 1..=top {
        let values = classes
            .iter()
            .map(|c| {
                if c.rep < n_gon {
                    let l = c.rep;
                    let a = zeta_n.pow((j * l) as u64);
                    let a_inv = a.inv().unwrap();
                    &a + &a_inv
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        irreps.push(Irrep { label: IrrepLabel::TwoDim(j), dim: 2, values });
    }
    irreps
}

impl CharacterTable {
    pub fn irrep(&self, label: &IrrepLabel) -> &Irrep {
        self.irreps
            .iter()
            .find(|i| &i.label == label)
            .expect("label not in table")
    }

    /// Value of chi at the class of element g.
    pub fn value_at_element<'a>(&self, irrep: &'a Irrep, g: usize) -> &'a Scalar {
        &irrep.values[self.class_of[g]]
    }

    /// chi(s_alpha) for a reflection in root class a.
    pub fn value_at_reflection<'a>(&self, irrep: &'a Irrep, a: usize) -> &'a Scalar {
        &irrep.values[self.reflection_class[a]]
    }

    /// Label of the irrep whose character matches `values` on all classes.
    pub fn match_character(&self, values: &[Scalar]) -> Option<&IrrepLabel> {
        self.irreps
            .iter()
            .find(|i| i.values.as_slice() == values)
            .map(|i| &i.label)
    }

    /// Tensor with a one-dimensional character (pointwise product + match).
    pub fn tensor_one_dim(&self, label: &IrrepLabel, chi: &[Scalar]) -> IrrepLabel {
        let base = self.irrep(label);
        let values: Vec<Scalar> = base.values.iter().zip(chi.iter()).map(|(a, b)| a * b).collect();
        self.match_character(&values)
            .expect("tensor with one-dimensional character must be irreducible")
            .clone()
    }

    /// The sign character values per class.
    pub fn sign_values(&self) -> Vec<Scalar> {
        self.group
            .conjugacy_classes
            .iter()
            .map(|c| self.group.elements[c.rep].det.clone())
            .collect()
    }

    /// The character chi_a of the one-dimensional module that is -1 exactly
    /// on reflection class a.
    pub fn class_sign_values(&self, a: usize) -> Vec<Scalar> {
        // determined by its values on reflections: build from the known
        // one-dimensional irreps
        let candidates: Vec<&Irrep> = self.irreps.iter().filter(|i| i.dim == 1).collect();
        for cand in candidates {
            let ok = (0..self.group.num_classes).all(|b| {
                let v = self.value_at_reflection(cand, b);
                if b == a {
                    *v == Scalar::from_int(-1)
                } else {
                    v.is_one()
                }
            });
            if ok {
                return cand.values.clone();
            }
        }
        panic!("no one-dimensional character is -1 exactly on class {}", a);
    }

    /// Multiplicity of the irrep in a character, via orthogonality:
    /// (1/|G|) sum_classes size * chi_j(class^{-1}) * values(class).
    pub fn multiplicity(&self, irrep: &Irrep, values: &[Scalar]) -> Result<i64, ExactError> {
        let g = &self.group;
        let mut acc = Scalar::zero();
        for (ci, class) in g.conjugacy_classes.iter().enumerate() {
            let inv_idx = self.class_of_inverse[ci];
            let size = Scalar::from_int(class.size as i64);
            acc += &(&(&irrep.values[inv_idx] * &values[ci]) * &size);
        }
        let order = Scalar::from_int(g.order() as i64);
        let m = &acc / &order;
        let q = m
            .as_rational()
            .ok_or_else(|| ExactError::Internal("non-rational multiplicity".into()))?;
        if !q.is_integer() {
            return Err(ExactError::Internal("non-integral multiplicity".into()));
        }
        use num::ToPrimitive;
        q.to_integer()
            .to_i64()
            .ok_or_else(|| ExactError::Internal("multiplicity overflow".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_group;

    #[test]
    fn mn_s3_values() {
        let std = YoungDiagram::new(vec![2, 1]);
        assert_eq!(character_sn(&std, &[1, 1, 1]), 2);
        assert_eq!(character_sn(&std, &[2, 1]), 0);
        assert_eq!(character_sn(&std, &[3]), -1);
        let triv = YoungDiagram::new(vec![3]);
        for ct in [[1usize, 1, 1].as_slice(), &[2, 1], &[3]] {
            assert_eq!(character_sn(&triv, ct), 1);
        }
        let sgn = YoungDiagram::new(vec![1, 1, 1]);
        assert_eq!(character_sn(&sgn, &[2, 1]), -1);
        assert_eq!(character_sn(&sgn, &[3]), 1);
    }

    #[test]
    fn mn_dimension_consistency() {
        for n in 2..=6 {
            let id = vec![1usize; n];
            for shape in YoungDiagram::all(n) {
                assert_eq!(
                    character_sn(&shape, &id),
                    shape.dimension() as i64,
                    "dimension mismatch for {}",
                    shape
                );
            }
        }
    }

    #[test]
    fn mn_against_explicit_standard_representation_of_s3() {
        // standard 2-dim rep of S_3 spanned by (1,-1,0),(0,1,-1): trace of a
        // transposition is 0, of a 3-cycle is -1; brute-force matrices
        let g = build_group("A2").unwrap();
        for class in &g.conjugacy_classes {
            let perm = g.elements[class.rep].perm.as_ref().unwrap();
            // matrix on the quotient basis e1-e2, e2-e3
            let image = |v: [i64; 3]| -> [i64; 3] {
                let mut out = [0i64; 3];
                for (i, &c) in v.iter().enumerate() {
                    out[perm[i]] += c;
                }
                out
            };
            let a = image([1, -1, 0]);
            let b = image([0, 1, -1]);
            // express in basis: x*e12 + y*e23 with e12=(1,-1,0), e23=(0,1,-1):
            // vector (p,q,r) with p+q+r=0 equals p*e12 + (-r)*e23
            let tr = a[0] + (-b[2]);
            let ct = crate::coxeter::group_cycle_type(perm);
            assert_eq!(
                character_sn(&YoungDiagram::new(vec![2, 1]), &ct),
                tr,
                "class {:?}",
                ct
            );
        }
    }

    #[test]
    fn sn_table_orthogonality() {
        let g = Arc::new(build_group("A3").unwrap());
        let table = character_table(g.clone()).unwrap();
        // rows orthonormal under the class inner product
        for a in &table.irreps {
            for b in &table.irreps {
                let m = table.multiplicity(a, &b.values).unwrap();
                assert_eq!(m, if a.label == b.label { 1 } else { 0 });
            }
        }
    }

    #[test]
    fn dihedral_table_orthogonality() {
        for name in ["I2(5)", "I2(6)", "I2(4)", "I2(8)"] {
            let g = Arc::new(build_group(name).unwrap());
            let table = character_table(g.clone()).unwrap();
            for a in &table.irreps {
                for b in &table.irreps {
                    let m = table.multiplicity(a, &b.values).unwrap();
                    assert_eq!(m, if a.label == b.label { 1 } else { 0 }, "{} in {}", a.label, name);
                }
            }
        }
    }

    #[test]
    fn dihedral_regular_character_decomposes() {
        let g = Arc::new(build_group("I2(6)").unwrap());
        let table = character_table(g.clone()).unwrap();
        let mut regular = vec![Scalar::zero(); g.conjugacy_classes.len()];
        regular[table.identity_class] = Scalar::from_int(g.order() as i64);
        for irrep in &table.irreps {
            let m = table.multiplicity(irrep, &regular).unwrap();
            assert_eq!(m as usize, irrep.dim);
        }
    }
}
