//! Group construction and element data.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::exactalg::{ExactError, Scalar};
use crate::polyops::{BilinearForm, Mono, MultiPoly};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupName {
    /// A_k, realized as the symmetric group S_{k+1} permuting coordinates of C^{k+1}.
    A(usize),
    /// The dihedral group of the regular N-gon.
    I2(usize),
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::A(k) => write!(f, "A{}", k),
            GroupName::I2(n) => write!(f, "I2({})", n),
        }
    }
}

/// Accepts `A<k>` (k >= 1), `I2(<N>)` (N >= 3) and the aliases `B2` = I2(4),
/// `G2` = I2(6). Anything else is an unsupported group.
pub fn parse_group_name(s: &str) -> Result<GroupName, ExactError> {
    let t = s.trim();
    let unsupported = || ExactError::UnsupportedGroup(s.to_string());
    match t {
        "B2" | "b2" => return Ok(GroupName::I2(4)),
        "G2" | "g2" => return Ok(GroupName::I2(6)),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix(['A', 'a']) {
        let k: usize = rest.parse().map_err(|_| unsupported())?;
        if k >= 1 {
            return Ok(GroupName::A(k));
        }
        return Err(unsupported());
    }
    if let Some(rest) = t.strip_prefix("I2(").or_else(|| t.strip_prefix("i2(")) {
        let inner = rest.strip_suffix(')').ok_or_else(unsupported)?;
        let n: usize = inner.parse().map_err(|_| unsupported())?;
        if n >= 3 {
            return Ok(GroupName::I2(n));
        }
        return Err(unsupported());
    }
    Err(unsupported())
}

#[derive(Clone, Debug)]
pub struct GroupElement {
    /// Action on vectors: v -> M v in working coordinates.
    pub matrix: Vec<Vec<Scalar>>,
    pub inv_matrix: Vec<Vec<Scalar>>,
    /// For S_n elements: the permutation sigma with e_i -> e_{sigma(i)}.
    pub perm: Option<Vec<usize>>,
    /// Determinant (+1/-1 as a scalar), the sign character.
    pub det: Scalar,
}

#[derive(Clone, Debug)]
pub struct Root {
    pub vector: Vec<Scalar>,
    pub class_id: usize,
    /// Index of the reflection s_alpha in `elements`.
    pub element: usize,
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub size: usize,
    /// Member element indices.
    pub members: Vec<usize>,
    pub label: String,
}

/// Integer multiplicity function, one value per reflection class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    values: Vec<u32>,
}

impl Multiplicity {
    pub fn constant(group: &GroupData, m: u32) -> Multiplicity {
        Multiplicity { values: vec![m; group.num_classes] }
    }

    pub fn per_class(group: &GroupData, values: Vec<u32>) -> Result<Multiplicity, ExactError> {
        if values.len() == 1 {
            return Ok(Multiplicity::constant(group, values[0]));
        }
        if values.len() != group.num_classes {
            return Err(ExactError::Internal(format!(
                "expected {} multiplicity values (one per reflection class), got {}",
                group.num_classes,
                values.len()
            )));
        }
        Ok(Multiplicity { values })
    }

    pub fn class_value(&self, class_id: usize) -> u32 {
        self.values[class_id]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&m| m == 0)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().map(|m| m.to_string()).join(","))
    }
}

pub struct GroupData {
    pub name: GroupName,
    pub n_vars: usize,
    /// Cyclotomic order of the working field (1 = rationals).
    pub field_order: u32,
    pub elements: Vec<GroupElement>,
    pub identity: usize,
    pub positive_roots: Vec<Root>,
    pub num_classes: usize,
    /// Number of reflections per class, N_a.
    pub reflection_class_sizes: Vec<usize>,
    pub degrees: Vec<usize>,
    pub sigma: Vec<MultiPoly>,
    pub form: BilinearForm,
    pub conjugacy_classes: Vec<ConjugacyClass>,
}

impl GroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_reflections(&self) -> usize {
        self.positive_roots.len()
    }

    /// p composed with g^{-1}: the left action of g on polynomials.
    pub fn act_poly(&self, g: usize, p: &MultiPoly) -> MultiPoly {
        if let Some(perm) = &self.elements[g].perm {
            // monomial exponent permutation: x^a -> product x_{sigma(i)}^{a_i}
            let mut out = MultiPoly::zero(self.n_vars);
            for (m, c) in p.terms() {
                let mut e = vec![0u16; self.n_vars];
                for (i, &a) in m.0.iter().enumerate() {
                    e[perm[i]] = a;
                }
                out.add_term(Mono(e), c.clone());
            }
            return out;
        }
        p.compose_matrix(&self.elements[g].inv_matrix)
    }

    pub fn act_vector(&self, g: usize, v: &[Scalar]) -> Vec<Scalar> {
        mat_vec(&self.elements[g].matrix, v)
    }

    /// The linear form x -> (alpha, x) of a positive root.
    pub fn root_form(&self, root: &Root) -> MultiPoly {
        self.form.linear_form(&root.vector)
    }

    /// Product of all root forms; spans the top harmonic degree.
    pub fn skew_product(&self) -> MultiPoly {
        self.positive_roots
            .iter()
            .fold(MultiPoly::one(self.n_vars), |acc, r| &acc * &self.root_form(r))
    }

    /// All g xi with repetitions collapsed: pairs (vector, count).
    pub fn direction_orbit(&self, xi: &[Scalar]) -> Vec<(Vec<Scalar>, usize)> {
        let mut seen: Vec<(Vec<Scalar>, usize)> = Vec::new();
        for g in 0..self.order() {
            let v = self.act_vector(g, xi);
            match seen.iter_mut().find(|(u, _)| *u == v) {
                Some((_, c)) => *c += 1,
                None => seen.push((v, 1)),
            }
        }
        seen
    }

    /// Dimension of the degree-d invariants, by the rank of Reynolds
    /// averages of monomials.
    pub fn invariant_dimension(&self, d: usize) -> usize {
        use crate::exactalg::Mat;
        let monos = crate::polyops::monomials_of_degree(self.n_vars, d);
        let index: HashMap<Mono, usize> =
            monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for m in &monos {
            let mono_poly = MultiPoly::from_terms(self.n_vars, vec![(m.clone(), Scalar::one())]);
            let mut avg = MultiPoly::zero(self.n_vars);
            for g in 0..self.order() {
                avg = &avg + &self.act_poly(g, &mono_poly);
            }
            if avg.is_zero() {
                continue;
            }
            let mut row = vec![Scalar::zero(); monos.len()];
            for (mm, c) in avg.terms() {
                row[index[mm]] = c.clone();
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return 0;
        }
        Mat::from_rows(rows).rank()
    }

    fn element_index(&self, matrix: &[Vec<Scalar>]) -> Option<usize> {
        self.elements.iter().position(|e| e.matrix == matrix)
    }

    /// Index of the product gh in the element list.
    pub fn multiply(&self, g: usize, h: usize) -> usize {
        let prod = mat_mul(&self.elements[g].matrix, &self.elements[h].matrix);
        self.element_index(&prod).expect("group not closed under multiplication")
    }

    /// Test-only handle used by the root-rescaling property checks.
    #[cfg(test)]
    pub(crate) fn scale_root_for_test(&mut self, idx: usize, c: &Scalar) {
        for v in self.positive_roots[idx].vector.iter_mut() {
            *v = &*v * c;
        }
    }
}

fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(v.iter()) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
        .collect()
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

pub fn build_group(name: &str) -> Result<GroupData, ExactError> {
    let parsed = parse_group_name(name)?;
    let group = match parsed {
        GroupName::A(k) => build_symmetric(k + 1),
        GroupName::I2(n) => build_dihedral(n),
    };
    validate(&group)?;
    Ok(group)
}

fn build_symmetric(n: usize) -> GroupData {
    let form = BilinearForm::standard(n);
    let mut elements = Vec::new();
    let mut identity = 0;
    for perm in (0..n).permutations(n) {
        let mut matrix = vec![vec![Scalar::zero(); n]; n];
        for (i, &si) in perm.iter().enumerate() {
            matrix[si][i] = Scalar::one();
        }
        let mut inv_matrix = vec![vec![Scalar::zero(); n]; n];
        for (i, &si) in perm.iter().enumerate() {
            inv_matrix[i][si] = Scalar::one();
        }
        let det = Scalar::from_int(perm_sign(&perm));
        if perm.iter().enumerate().all(|(i, &s)| i == s) {
            identity = elements.len();
        }
        elements.push(GroupElement { matrix, inv_matrix, perm: Some(perm), det });
    }

    // positive roots e_i - e_j, i < j; reflection = transposition (i j)
    let mut positive_roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut vector = vec![Scalar::zero(); n];
            vector[i] = Scalar::one();
            vector[j] = Scalar::from_int(-1);
            let element = elements
                .iter()
                .position(|e| {
                    e.perm.as_ref().map_or(false, |p| {
                        p.iter().enumerate().all(|(a, &b)| {
                            if a == i {
                                b == j
                            } else if a == j {
                                b == i
                            } else {
                                a == b
                            }
                        })
                    })
                })
                .unwrap();
            positive_roots.push(Root { vector, class_id: 0, element });
        }
    }

    // power sums p_1..p_n
    let sigma: Vec<MultiPoly> = (1..=n)
        .map(|k| {
            let mut p = MultiPoly::zero(n);
            for i in 0..n {
                p = &p + &MultiPoly::var(i, n).pow(k);
            }
            p
        })
        .collect();

    // conjugacy classes by cycle type
    let mut by_type: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (idx, e) in elements.iter().enumerate() {
        let ct = cycle_type(e.perm.as_ref().unwrap());
        by_type.entry(ct).or_default().push(idx);
    }
    let mut types: Vec<Vec<usize>> = by_type.keys().cloned().collect();
    types.sort();
    let conjugacy_classes = types
        .into_iter()
        .map(|ct| {
            let members = by_type.remove(&ct).unwrap();
            ConjugacyClass {
                rep: members[0],
                size: members.len(),
                members,
                label: format!("{:?}", ct),
            }
        })
        .collect();

    GroupData {
        name: GroupName::A(n - 1),
        n_vars: n,
        field_order: 1,
        elements,
        identity,
        positive_roots,
        num_classes: 1,
        reflection_class_sizes: vec![n * (n - 1) / 2],
        degrees: (1..=n).collect(),
        sigma,
        form,
        conjugacy_classes,
    }
}

pub(crate) fn perm_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

pub(crate) fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        cycles.push(len);
    }
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    cycles
}

fn build_dihedral(n_gon: usize) -> GroupData {
    let order2n = (2 * n_gon) as u32;
    let zeta = Scalar::zeta(order2n); // zeta_{2N}
    let zeta_n = &zeta * &zeta; // zeta_N
    let n = 2usize;

    // Gram matrix [[0,1/2],[1/2,0]] for complex coordinates (z, w).
    let half = Scalar::from_frac(1, 2);
    let form = BilinearForm::new(vec![
        vec![Scalar::zero(), half.clone()],
        vec![half, Scalar::zero()],
    ])
    .unwrap();

    let zero = Scalar::zero;
    let mut elements = Vec::new();
    // rotations r^j = diag(zeta_N^j, zeta_N^{-j})
    for j in 0..n_gon {
        let zj = zeta_n.pow(j as u64);
        let zjc = zj.inv().unwrap();
        let matrix = vec![vec![zj.clone(), zero()], vec![zero(), zjc.clone()]];
        let inv_matrix = vec![vec![zjc, zero()], vec![zero(), zj]];
        elements.push(GroupElement { matrix, inv_matrix, perm: None, det: Scalar::one() });
    }
    // reflections r^j s : (z,w) -> (zeta_N^j w, zeta_N^{-j} z)
    for j in 0..n_gon {
        let zj = zeta_n.pow(j as u64);
        let zjc = zj.inv().unwrap();
        let matrix = vec![vec![zero(), zj], vec![zjc, zero()]];
        let inv_matrix = matrix.clone();
        elements.push(GroupElement { matrix, inv_matrix, perm: None, det: Scalar::from_int(-1) });
    }

    let even_n = n_gon % 2 == 0;
    let num_classes = if even_n { 2 } else { 1 };

    // roots a_j = (-2 zeta^j, 2 zeta^{-j}) giving (a_j, x) = zeta^{-j} z - zeta^j w,
    // whose reflection is r^j s.
    let mut positive_roots = Vec::new();
    for j in 0..n_gon {
        let zj = zeta.pow(j as u64);
        let zjc = zj.inv().unwrap();
        let two = Scalar::from_int(2);
        let vector = vec![-&(&two * &zj), &two * &zjc];
        let class_id = if even_n { j % 2 } else { 0 };
        positive_roots.push(Root { vector, class_id, element: n_gon + j });
    }

    let z = MultiPoly::var(0, n);
    let w = MultiPoly::var(1, n);
    let sigma = vec![&z * &w, &z.pow(n_gon) + &w.pow(n_gon)];

    // conjugacy classes: rotations r^j ~ r^{-j}; reflections split by parity
    // of j when N is even.
    let mut conjugacy_classes = Vec::new();
    conjugacy_classes.push(ConjugacyClass { rep: 0, size: 1, members: vec![0], label: "e".into() });
    for j in 1..=n_gon / 2 {
        let members: Vec<usize> = if j == n_gon - j {
            vec![j]
        } else {
            vec![j, n_gon - j]
        };
        conjugacy_classes.push(ConjugacyClass {
            rep: j,
            size: members.len(),
            members,
            label: format!("r^{}", j),
        });
    }
    if even_n {
        let evens: Vec<usize> = (0..n_gon).step_by(2).map(|j| n_gon + j).collect();
        let odds: Vec<usize> = (1..n_gon).step_by(2).map(|j| n_gon + j).collect();
        conjugacy_classes.push(ConjugacyClass {
            rep: evens[0],
            size: evens.len(),
            members: evens,
            label: "refl_even".into(),
        });
        conjugacy_classes.push(ConjugacyClass {
            rep: odds[0],
            size: odds.len(),
            members: odds,
            label: "refl_odd".into(),
        });
    } else {
        let refls: Vec<usize> = (0..n_gon).map(|j| n_gon + j).collect();
        conjugacy_classes.push(ConjugacyClass {
            rep: refls[0],
            size: refls.len(),
            members: refls,
            label: "refl".into(),
        });
    }

    let reflection_class_sizes = if even_n {
        vec![n_gon / 2, n_gon / 2]
    } else {
        vec![n_gon]
    };

    GroupData {
        name: GroupName::I2(n_gon),
        n_vars: n,
        field_order: order2n,
        elements,
        identity: 0,
        positive_roots,
        num_classes,
        reflection_class_sizes,
        degrees: vec![2, n_gon],
        sigma,
        form,
        conjugacy_classes,
    }
}

fn validate(g: &GroupData) -> Result<(), ExactError> {
    let n = g.n_vars;
    // reflection count vs exponents
    let from_degrees: usize = g.degrees.iter().map(|d| d - 1).sum();
    if from_degrees != g.num_reflections() {
        return Err(ExactError::Internal("reflection count mismatch with degrees".into()));
    }
    if g.reflection_class_sizes.iter().sum::<usize>() != g.num_reflections() {
        return Err(ExactError::Internal("class sizes do not sum to N".into()));
    }
    // each root: the stored element is the reflection along the root
    for root in &g.positive_roots {
        let m = &g.elements[root.element].matrix;
        for j in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[j] = Scalar::one();
            let expected = g.form.reflect_vector(&root.vector, &e);
            let got: Vec<Scalar> = (0..n).map(|i| m[i][j].clone()).collect();
            if expected != got {
                return Err(ExactError::Internal("root/reflection mismatch".into()));
            }
        }
    }
    // invariance of the form under group generators (all elements, cheaply)
    for e in &g.elements {
        for i in 0..n {
            for j in 0..n {
                let gi: Vec<Scalar> = (0..n).map(|r| e.matrix[r][i].clone()).collect();
                let gj: Vec<Scalar> = (0..n).map(|r| e.matrix[r][j].clone()).collect();
                if g.form.pair_vec(&gi, &gj) != g.form.gram[i][j] {
                    return Err(ExactError::Internal("group does not preserve the form".into()));
                }
            }
        }
    }
    // sigma invariance
    for e_idx in 0..g.order() {
        for s in &g.sigma {
            if g.act_poly(e_idx, s) != *s {
                return Err(ExactError::Internal("invariant generator not invariant".into()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(parse_group_name("A2").unwrap(), GroupName::A(2));
        assert_eq!(parse_group_name("I2(5)").unwrap(), GroupName::I2(5));
        assert_eq!(parse_group_name("B2").unwrap(), GroupName::I2(4));
        assert_eq!(parse_group_name("G2").unwrap(), GroupName::I2(6));
        assert!(matches!(parse_group_name("H4"), Err(ExactError::UnsupportedGroup(_))));
        assert!(matches!(parse_group_name("I2(2)"), Err(ExactError::UnsupportedGroup(_))));
        assert!(matches!(parse_group_name("A0"), Err(ExactError::UnsupportedGroup(_))));
    }

    #[test]
    fn a2_basic_data() {
        let g = build_group("A2").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_reflections(), 3);
        assert_eq!(g.degrees, vec![1, 2, 3]);
        assert_eq!(g.num_classes, 1);
    }

    #[test]
    fn i25_basic_data() {
        let g = build_group("I2(5)").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.num_reflections(), 5);
        assert_eq!(g.degrees, vec![2, 5]);
        assert_eq!(g.num_classes, 1);
    }

    #[test]
    fn i26_two_classes() {
        let g = build_group("I2(6)").unwrap();
        assert_eq!(g.num_classes, 2);
        assert_eq!(g.reflection_class_sizes, vec![3, 3]);
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn closure_under_multiplication() {
        for name in ["A2", "I2(4)", "I2(5)"] {
            let g = build_group(name).unwrap();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let _ = g.multiply(a, b); // panics if not closed
                }
            }
        }
    }

    #[test]
    fn action_is_homomorphism() {
        let g = build_group("I2(4)").unwrap();
        let p = {
            let z = MultiPoly::var(0, 2);
            let w = MultiPoly::var(1, 2);
            &(&z.pow(2) * &w) + &z
        };
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.multiply(a, b);
                let lhs = g.act_poly(ab, &p);
                let rhs = g.act_poly(a, &g.act_poly(b, &p));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn identity_acts_trivially_and_swap_acts_on_s2() {
        let g = build_group("A1").unwrap();
        let p = MultiPoly::var(0, 2);
        assert_eq!(g.act_poly(g.identity, &p), p);
        let swap = 1 - g.identity;
        assert_eq!(g.act_poly(swap, &p), MultiPoly::var(1, 2));
    }

    #[test]
    fn skew_product_alternates() {
        for name in ["A2", "I2(5)", "I2(6)"] {
            let g = build_group(name).unwrap();
            let w0 = g.skew_product();
            for e in 0..g.order() {
                let acted = g.act_poly(e, &w0);
                assert_eq!(acted, w0.scale(&g.elements[e].det), "in {}", name);
            }
        }
    }

    #[test]
    fn root_orbits_preserve_class() {
        for name in ["A2", "I2(5)", "I2(6)"] {
            let g = build_group(name).unwrap();
            for root in &g.positive_roots {
                for e in 0..g.order() {
                    let image = g.act_vector(e, &root.vector);
                    // image must be +- a root of the same class
                    let found = g.positive_roots.iter().any(|r| {
                        (r.vector == image
                            || r.vector.iter().zip(&image).all(|(a, b)| (-a) == *b))
                            && r.class_id == root.class_id
                    });
                    assert!(found, "orbit left the root set for {}", name);
                }
            }
        }
    }

    #[test]
    fn root_reflection_fixes_kernel_and_negates_root() {
        for name in ["A3", "I2(6)"] {
            let g = build_group(name).unwrap();
            for root in &g.positive_roots {
                let s = root.element;
                // s_alpha(alpha) = -alpha
                let neg: Vec<Scalar> = root.vector.iter().map(|c| -c).collect();
                assert_eq!(g.act_vector(s, &root.vector), neg);
                // the fixed hyperplane: for any vector v, v - s(v) is parallel to alpha
                for j in 0..g.n_vars {
                    let mut e = vec![Scalar::zero(); g.n_vars];
                    e[j] = Scalar::one();
                    let sv = g.act_vector(s, &e);
                    let diff: Vec<Scalar> =
                        e.iter().zip(&sv).map(|(a, b)| a - b).collect();
                    // diff x alpha = 0 (proportionality in 2d minors)
                    for p in 0..g.n_vars {
                        for q in p + 1..g.n_vars {
                            let det = &(&diff[p] * &root.vector[q]) - &(&diff[q] * &root.vector[p]);
                            assert!(det.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn jacobian_of_invariants_has_full_rank() {
        use crate::exactalg::Mat;
        for name in ["A2", "A3", "I2(5)"] {
            let g = build_group(name).unwrap();
            let n = g.n_vars;
            // evaluate the Jacobian at a fixed generic rational point
            let point: Vec<Scalar> = (0..n).map(|i| Scalar::from_int(2 + 3 * i as i64)).collect();
            let jac = Mat::from_fn(n, n, |i, j| g.sigma[i].derivative(j).eval(&point));
            assert_eq!(jac.rank(), n, "Jacobian degenerate for {}", name);
        }
    }

    #[test]
    fn invariant_dimension_counts() {
        let g = build_group("A2").unwrap();
        // dim of S^d invariants for S_3 = number of partitions of d into parts <= 3
        assert_eq!(g.invariant_dimension(1), 1);
        assert_eq!(g.invariant_dimension(2), 2);
        assert_eq!(g.invariant_dimension(3), 3);
        let h = build_group("I2(5)").unwrap();
        assert_eq!(h.invariant_dimension(1), 0);
        assert_eq!(h.invariant_dimension(2), 1);
        assert_eq!(h.invariant_dimension(5), 1);
        assert_eq!(h.invariant_dimension(7), 1);
        assert_eq!(h.invariant_dimension(10), 2);
    }

    #[test]
    fn conjugacy_class_sizes_sum_to_order() {
        for name in ["A3", "I2(5)", "I2(6)"] {
            let g = build_group(name).unwrap();
            let total: usize = g.conjugacy_classes.iter().map(|c| c.size).sum();
            assert_eq!(total, g.order());
        }
    }
}
