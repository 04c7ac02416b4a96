//! Exponent vectors with graded lexicographic ordering.

use std::cmp::Ordering;

/// A monomial exponent vector. Ordered by total degree first, then
/// lexicographically with the first variable largest, so iteration over a
/// `BTreeMap<Mono, _>` is the canonical graded-lex order (ascending).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn unit(n_vars: usize) -> Mono {
        Mono(vec![0; n_vars])
    }

    pub fn var(i: usize, n_vars: usize) -> Mono {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; None if any exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree in `n_vars` variables, in
/// ascending graded-lex order.
pub fn monomials_of_degree(n_vars: usize, degree: usize) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut current = vec![0u16; n_vars];
    fill(&mut out, &mut current, 0, degree);
    out.sort();
    out
}

fn fill(out: &mut Vec<Mono>, current: &mut Vec<u16>, pos: usize, remaining: usize) {
    if pos + 1 == current.len() {
        current[pos] = remaining as u16;
        out.push(Mono(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        current[pos] = e as u16;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Mono(vec![2, 0]);
        let b = Mono(vec![1, 1]);
        let c = Mono(vec![0, 3]);
        assert!(a > b); // same degree, x1^2 > x1 x2
        assert!(c > a); // higher degree wins
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15); // C(6,2)
        assert_eq!(monomials_of_degree(1, 7).len(), 1);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
    }
}
