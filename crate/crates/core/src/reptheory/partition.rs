//! Partitions, hooks, and the hook length formula.

use std::fmt;

use num::BigInt;

/// A partition of n: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

/// Arm, leg and hook lengths of one box.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoxHook {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub hook: usize,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> YoungDiagram {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        YoungDiagram { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        YoungDiagram::new(parts)
    }

    /// Per-box (hook, leg, arm) data, row-major.
    pub fn hooks(&self) -> Vec<BoxHook> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(BoxHook { row: i, col: j, arm, leg, hook: arm + leg + 1 });
            }
        }
        out
    }

    /// Dimension of the irreducible S_n module: n! / prod hooks.
    pub fn dimension(&self) -> u64 {
        let n = self.size();
        let mut num = BigInt::from(1u32);
        for k in 2..=n {
            num *= BigInt::from(k);
        }
        let mut den = BigInt::from(1u32);
        for b in self.hooks() {
            den *= BigInt::from(b.hook);
        }
        let (q, r) = num_integer_div_rem(&num, &den);
        assert!(r == BigInt::from(0u32), "hook product does not divide n!");
        let digits = q.to_u64_digits().1;
        digits.first().copied().unwrap_or(0)
    }

    /// All partitions of n, in lexicographically decreasing order.
    pub fn all(n: usize) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if n == 0 {
                out.push(YoungDiagram::new(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        rec(n, n, &mut prefix, &mut out);
        out
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    use num::Integer;
    a.div_rem(b)
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
pub(crate) fn count_standard_tableaux(shape: &YoungDiagram) -> u64 {
    // brute-force oracle: fill boxes 1..n respecting row/column increase
    fn rec(parts: &[usize], filled: &mut Vec<usize>, next: usize, n: usize) -> u64 {
        if next > n {
            return 1;
        }
        let mut total = 0;
        for (r, &len) in parts.iter().enumerate() {
            let cur = filled[r];
            if cur < len {
                let above_ok = r == 0 || filled[r - 1] > cur;
                if above_ok {
                    filled[r] += 1;
                    total += rec(parts, filled, next + 1, n);
                    filled[r] -= 1;
                }
            }
        }
        total
    }
    let mut filled = vec![0usize; shape.rows()];
    rec(shape.parts(), &mut filled, 1, shape.size())
}
