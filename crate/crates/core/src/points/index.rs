use std::fmt;
use std::ops::Deref;

/// A multi-index `α ∈ N₀^{d+1}`; its degree is `|α| = Σ α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl Deref for MultiIndex {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All `α ∈ N₀^{d+1}` with `|α| = n`, in descending lexicographic order
/// (the first index is `(n, 0, …, 0)`). There are `C(n+d, d)` of them.
pub fn enumerate_indices(n: usize, d: usize) -> Vec<MultiIndex> {
    fn rec(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=remaining).rev() {
            prefix.push(a);
            rec(remaining - a, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(crate::numeric::binomial(n + d, d));
    rec(n as u32, d + 1, &mut Vec::with_capacity(d + 1), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::binomial;

    #[test]
    fn counts_match_binomials() {
        assert_eq!(enumerate_indices(3, 2).len(), 10);
        assert_eq!(enumerate_indices(16, 2).len(), 153);
        assert_eq!(enumerate_indices(0, 3), vec![MultiIndex::new(vec![0, 0, 0, 0])]);
        for d in 1..4 {
            for n in 0..9 {
                let all = enumerate_indices(n, d);
                assert_eq!(all.len(), binomial(n + d, d));
                assert!(all.iter().all(|a| a.degree() == n && a.len() == d + 1));
                assert!(all.windows(2).all(|w| w[0] > w[1]), "strictly descending");
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(MultiIndex::new(vec![1, 0, 2]).to_string(), "(1,0,2)");
    }
}
