//! Poincaré polynomials of graded isotypic components: Kirillov and
//! dihedral closed forms, Molien series, the exponent data d_a^{+-}, the
//! multiplicity involution pi_m, and the degree-shift formula for the
//! generalized harmonic module.

use std::fmt;

use num::{BigInt, BigRational, Zero};

use crate::exactalg::{ExactError, Scalar};
use crate::polyops::{RatFun, UniPoly};

use super::characters::{CharacterTable, Irrep, IrrepLabel};
use super::partition::YoungDiagram;

/// Generating function with nonnegative integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoincarePoly {
    coeffs: Vec<u64>,
}

impl PoincarePoly {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> PoincarePoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePoly { coeffs }
    }

    pub fn zero() -> PoincarePoly {
        PoincarePoly { coeffs: Vec::new() }
    }

    pub fn one() -> PoincarePoly {
        PoincarePoly { coeffs: vec![1] }
    }

    pub fn t_pow(k: usize) -> PoincarePoly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        PoincarePoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn shift(&self, s: usize) -> PoincarePoly {
        if self.coeffs.is_empty() {
            return PoincarePoly::zero();
        }
        let mut coeffs = vec![0; s];
        coeffs.extend_from_slice(&self.coeffs);
        PoincarePoly { coeffs }
    }

    pub fn add(&self, other: &PoincarePoly) -> PoincarePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        PoincarePoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, c: u64) -> PoincarePoly {
        PoincarePoly::from_coeffs(self.coeffs.iter().map(|&x| x * c).collect())
    }

    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// P'(1) as an exact integer.
    pub fn derivative_at_one(&self) -> u64 {
        self.coeffs.iter().enumerate().map(|(k, &c)| k as u64 * c).sum()
    }

    /// t^m P(1/t) for m >= deg P.
    pub fn reciprocal(&self, m: usize) -> PoincarePoly {
        let mut coeffs = vec![0; m + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[m - k] = c;
        }
        PoincarePoly::from_coeffs(coeffs)
    }

    pub fn is_palindromic(&self, m: usize) -> bool {
        self.reciprocal(m) == *self
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|&c| Scalar::from_int(c as i64)).collect())
    }

    pub fn from_unipoly(p: &UniPoly) -> Result<PoincarePoly, ExactError> {
        let mut coeffs = Vec::with_capacity(p.coeffs.len());
        for c in &p.coeffs {
            let q = c
                .as_rational()
                .ok_or_else(|| ExactError::Internal("non-rational coefficient".into()))?;
            if !q.is_integer() || q.numer() < &BigInt::zero() {
                return Err(ExactError::Internal(format!(
                    "coefficient {} is not a nonnegative integer",
                    q
                )));
            }
            use num::ToPrimitive;
            coeffs.push(q.to_integer().to_u64().ok_or_else(|| {
                ExactError::Internal("coefficient overflow".into())
            })?);
        }
        Ok(PoincarePoly::from_coeffs(coeffs))
    }

    /// The degree multiset it encodes: degree d repeated coeff(d) times.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (d, &c) in self.coeffs.iter().enumerate() {
            for _ in 0..c {
                out.push(d);
            }
        }
        out
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{}t", c)?,
                (_, 1) => write!(f, "t^{}", k)?,
                (_, _) => write!(f, "{}t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// Kirillov's product formula for P_j(H_0, t) of S_n:
/// t^{sum legs} prod_{k=1..n} (1 - t^k) / prod_boxes (1 - t^{hook}).
pub fn kirillov_ph0(shape: &YoungDiagram) -> Result<PoincarePoly, ExactError> {
    let n = shape.size();
    let mut num = UniPoly::one();
    for k in 1..=n {
        num = &num * &UniPoly::one_minus_t_pow(k);
    }
    let mut den = UniPoly::one();
    let mut legs = 0usize;
    for b in shape.hooks() {
        den = &den * &UniPoly::one_minus_t_pow(b.hook);
        legs += b.leg;
    }
    let q = num
        .exact_div(&den)
        .ok_or_else(|| ExactError::Internal("Kirillov division not exact".into()))?;
    let p = PoincarePoly::from_unipoly(&q)?;
    let shifted = p.shift(legs);
    if shifted.eval_one() != shape.dimension() {
        return Err(ExactError::Internal("Kirillov value at 1 is not the dimension".into()));
    }
    Ok(shifted)
}

/// Closed forms for the dihedral group I2(N).
pub fn dihedral_ph0(label: &IrrepLabel, n_gon: usize) -> PoincarePoly {
    match label {
        IrrepLabel::Trivial => PoincarePoly::one(),
        IrrepLabel::Sign => PoincarePoly::t_pow(n_gon),
        IrrepLabel::PlusK | IrrepLabel::MinusK => PoincarePoly::t_pow(n_gon / 2),
        IrrepLabel::TwoDim(j) => PoincarePoly::t_pow(*j).add(&PoincarePoly::t_pow(n_gon - j)),
        IrrepLabel::Partition(_) => panic!("partition label in a dihedral group"),
    }
}

/// P_j(H_0, t) for any supported label.
pub fn ph0(table: &CharacterTable, label: &IrrepLabel) -> Result<PoincarePoly, ExactError> {
    match (label, table.group.name) {
        (IrrepLabel::Partition(shape), _) => kirillov_ph0(shape),
        (_, crate::coxeter::GroupName::I2(n)) => Ok(dihedral_ph0(label, n)),
        _ => Err(ExactError::Internal("label does not match the group".into())),
    }
}

/// det(1 - g t) as a polynomial, from traces of powers via Newton's
/// identities (no eigenvalue computation).
pub fn det_one_minus_gt(table: &CharacterTable, element: usize) -> UniPoly {
    let g = &table.group;
    let n = g.n_vars;
    // traces of powers p_i = tr(g^i)
    let mut traces = Vec::with_capacity(n + 1);
    let mut power = g.identity;
    for _ in 0..n {
        power = g.multiply(power, element);
        let m = &g.elements[power].matrix;
        let mut tr = Scalar::zero();
        for i in 0..n {
            tr += &m[i][i];
        }
        traces.push(tr);
    }
    // e_0 = 1, k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    let mut e = vec![Scalar::one()];
    for k in 1..=n {
        let mut acc = Scalar::zero();
        for i in 1..=k {
            let term = &e[k - i] * &traces[i - 1];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        e.push(&acc / &Scalar::from_int(k as i64));
    }
    // det(1 - g t) = sum_k (-1)^k e_k t^k
    UniPoly::from_coeffs(
        e.into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c } else { -&c })
            .collect(),
    )
}

/// Molien series P_j(S, t) = (1/|G|) sum_g chi_j(g^{-1}) / det(1 - g t),
/// summed over conjugacy classes.
pub fn molien_ps(table: &CharacterTable, irrep: &Irrep) -> Result<RatFun, ExactError> {
    let g = &table.group;
    let mut acc = RatFun::zero();
    for (ci, class) in g.conjugacy_classes.iter().enumerate() {
        let chi_inv = &irrep.values[table.class_of_inverse[ci]];
        if chi_inv.is_zero() {
            continue;
        }
        let det = det_one_minus_gt(table, class.rep);
        let num = UniPoly::constant(&Scalar::from_int(class.size as i64) * chi_inv);
        acc = acc.add(&RatFun::new(num, det));
    }
    let order = Scalar::from_frac(1, g.order() as i64);
    let result = acc.scale(&order);
    // final coefficients must be rational even over a cyclotomic field
    for c in result.num.coeffs.iter().chain(result.den.coeffs.iter()) {
        if c.as_rational().is_none() {
            return Err(ExactError::Internal("Molien series has irrational coefficients".into()));
        }
    }
    Ok(result)
}

/// d_a^-(V_j) = 2 N_a dim(V^-)/dim(V) with dim(V^-) = (dim - chi(s))/2;
/// always an integer for the supported groups.
pub fn d_minus(table: &CharacterTable, label: &IrrepLabel, a: usize) -> Result<i64, ExactError> {
    let irrep = table.irrep(label);
    let chi_s = table.value_at_reflection(irrep, a);
    let chi_q = chi_s
        .as_rational()
        .ok_or_else(|| ExactError::Internal("irrational character at a reflection".into()))?;
    let n_a = table.group.reflection_class_sizes[a];
    let dim = BigRational::from(BigInt::from(irrep.dim));
    // N_a (dim - chi(s)) / dim
    let v = BigRational::from(BigInt::from(n_a as i64)) * (&dim - chi_q) / &dim;
    if !v.is_integer() {
        return Err(ExactError::Internal(format!(
            "d^-({}) is not an integer",
            label
        )));
    }
    use num::ToPrimitive;
    v.to_integer()
        .to_i64()
        .ok_or_else(|| ExactError::Internal("d^- overflow".into()))
}

pub fn d_plus(table: &CharacterTable, label: &IrrepLabel, a: usize) -> Result<i64, ExactError> {
    let n_a = table.group.reflection_class_sizes[a] as i64;
    Ok(2 * n_a - d_minus(table, label, a)?)
}

/// Total degree shift sum_a m_a d_a^-(V_j).
pub fn degree_shift(
    table: &CharacterTable,
    m: &crate::coxeter::Multiplicity,
    label: &IrrepLabel,
) -> Result<usize, ExactError> {
    let mut acc = 0i64;
    for a in 0..table.group.num_classes {
        acc += m.class_value(a) as i64 * d_minus(table, label, a)?;
    }
    Ok(acc as usize)
}

/// The multiplicity involution on labels: identity for the symmetric and
/// odd dihedral groups; for even dihedral groups it twists two-dimensional
/// labels by the one-dimensional character chi_m with chi_m(s_a) = (-1)^{m_a}.
pub fn pi_m(
    table: &CharacterTable,
    m: &crate::coxeter::Multiplicity,
    label: &IrrepLabel,
) -> IrrepLabel {
    match table.group.name {
        crate::coxeter::GroupName::A(_) => label.clone(),
        crate::coxeter::GroupName::I2(n) => {
            if n % 2 == 1 {
                return label.clone();
            }
            if !matches!(label, IrrepLabel::TwoDim(_)) {
                return label.clone();
            }
            // chi_m = prod over classes with odd multiplicity of chi_a
            let mut chi: Vec<Scalar> =
                vec![Scalar::one(); table.group.conjugacy_classes.len()];
            let mut nontrivial = false;
            for a in 0..table.group.num_classes {
                if m.class_value(a) % 2 == 1 {
                    nontrivial = true;
                    let ca = table.class_sign_values(a);
                    for (x, y) in chi.iter_mut().zip(ca.iter()) {
                        *x = &*x * y;
                    }
                }
            }
            if !nontrivial {
                return label.clone();
            }
            table.tensor_one_dim(label, &chi)
        }
    }
}

/// Tensor with the sign character.
pub fn dual_label(table: &CharacterTable, label: &IrrepLabel) -> IrrepLabel {
    let sign = table.sign_values();
    table.tensor_one_dim(label, &sign)
}

/// P_j(H_m, t) = t^{sum_a m_a d_a^-(V_j)} P_{pi_m(j)}(H_0, t).
pub fn poincare_hm(
    table: &CharacterTable,
    m: &crate::coxeter::Multiplicity,
    label: &IrrepLabel,
) -> Result<PoincarePoly, ExactError> {
    let shift = degree_shift(table, m, label)?;
    let base = ph0(table, &pi_m(table, m, label))?;
    let p = base.shift(shift);
    if p.eval_one() as usize != table.irrep(label).dim {
        return Err(ExactError::Internal("P_j(H_m, 1) != dim V_j".into()));
    }
    Ok(p)
}

/// Top degree M = sum_a N_a (2 m_a + 1).
pub fn top_degree(table: &CharacterTable, m: &crate::coxeter::Multiplicity) -> usize {
    table
        .group
        .reflection_class_sizes
        .iter()
        .enumerate()
        .map(|(a, &na)| na * (2 * m.class_value(a) as usize + 1))
        .sum()
}

/// Total Poincaré polynomial sum_j dim(V_j) P_j(H_m, t), with the degree,
/// palindromicity and dimension checks enforced.
pub fn poincare_hm_total(
    table: &CharacterTable,
    m: &crate::coxeter::Multiplicity,
) -> Result<PoincarePoly, ExactError> {
    let mut total = PoincarePoly::zero();
    for irrep in &table.irreps {
        let p = poincare_hm(table, m, &irrep.label)?;
        total = total.add(&p.scale(irrep.dim as u64));
    }
    let m_top = top_degree(table, m);
    if total.eval_one() as usize != table.group.order() {
        return Err(ExactError::Internal("total Poincaré value at 1 is not |G|".into()));
    }
    if total.degree() != Some(m_top) {
        return Err(ExactError::Internal(format!(
            "total Poincaré degree {:?} != M = {}",
            total.degree(),
            m_top
        )));
    }
    if !total.is_palindromic(m_top) {
        return Err(ExactError::Internal("total Poincaré polynomial is not palindromic".into()));
    }
    Ok(total)
}

/// Solomon's formula: 2 (d/dt ln P)|_{t=1} = 2 P'(1)/P(1).
pub fn solomon_d(p: &PoincarePoly) -> Result<BigRational, ExactError> {
    let v = p.eval_one();
    if v == 0 {
        return Err(ExactError::Internal("P(1) = 0 in Solomon's formula".into()));
    }
    Ok(BigRational::new(
        BigInt::from(2 * p.derivative_at_one()),
        BigInt::from(v),
    ))
}

/// The two-class generalization: N_a + (d/dt ln (P_j/P_{j tensor a}))|_{t=1}.
pub fn prop42_d(
    p_j: &PoincarePoly,
    p_j_tensor_a: &PoincarePoly,
    n_a: usize,
) -> Result<BigRational, ExactError> {
    if p_j.eval_one() == 0 || p_j_tensor_a.eval_one() == 0 {
        return Err(ExactError::Internal("P(1) = 0 in the exponent formula".into()));
    }
    let log_deriv = |p: &PoincarePoly| {
        BigRational::new(BigInt::from(p.derivative_at_one()), BigInt::from(p.eval_one()))
    };
    Ok(BigRational::from(BigInt::from(n_a as i64)) + log_deriv(p_j) - log_deriv(p_j_tensor_a))
}
