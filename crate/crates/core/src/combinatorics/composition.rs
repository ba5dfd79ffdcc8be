use std::fmt;

use crate::error::{Error, Result};

use super::Partition;

/// An ordered sequence of positive parts.
///
/// Compositions of `n` are in bijection with subsets of `{1..n-1}` through
/// partial sums; [`Composition::descent_set`] and
/// [`Composition::from_descent_set`] are the two directions of that map.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    /// The hook `(k, 1^(n-k))` read as a composition.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        Ok(Composition(Partition::hook(n, k)?.parts().to_vec()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `{i_1 < ... < i_k} -> (i_1, i_2 - i_1, ..., n - i_k)`.
    pub fn from_descent_set(set: &[usize], n: usize) -> Result<Self> {
        let valid = set.windows(2).all(|w| w[0] < w[1])
            && set.iter().all(|&i| i >= 1 && i < n);
        if !valid {
            return Err(Error::InvalidDescentSet {
                set: set.to_vec(),
                n,
            });
        }
        if n == 0 {
            return Ok(Composition(Vec::new()));
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &i in set.iter().chain(std::iter::once(&n)) {
            parts.push(i - prev);
            prev = i;
        }
        Ok(Composition(parts))
    }

    /// Partial sums, excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Descent set as a bitmask, bit `i-1` for element `i`.
    pub(crate) fn descent_mask(&self) -> u64 {
        self.descent_set()
            .into_iter()
            .fold(0, |m, i| m | (1u64 << (i - 1)))
    }

    pub(crate) fn from_descent_mask(mask: u64, n: usize) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                parts.push(i - prev);
                prev = i;
            }
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Composition(parts)
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

/// All compositions of `n` in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out: Vec<Composition> = (0..1u64 << (n - 1))
        .map(|m| Composition::from_descent_mask(m, n))
        .collect();
    out.sort();
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descent_examples() {
        assert_eq!(Composition::from_descent_set(&[], 4).unwrap(), c(&[4]));
        assert_eq!(Composition::from_descent_set(&[2, 3], 4).unwrap(), c(&[2, 1, 1]));
        assert_eq!(Composition::from_descent_set(&[1, 3], 5).unwrap(), c(&[1, 2, 2]));
        assert_eq!(c(&[1, 2, 2]).descent_set(), vec![1, 3]);
        assert!(Composition::from_descent_set(&[3, 1], 5).is_err());
        assert!(Composition::from_descent_set(&[5], 5).is_err());
        assert!(Composition::from_descent_set(&[0], 5).is_err());
    }

    #[test]
    fn hook_matches_tail_descent_set() {
        for n in 1..=8 {
            for k in 1..=n {
                let tail: Vec<usize> = (k..n).collect();
                assert_eq!(Composition::hook(n, k).unwrap().descent_set(), tail);
            }
        }
    }

    #[test]
    fn round_trip_all_small_compositions() {
        for n in 0..=8 {
            let all = compositions_of(n);
            assert_eq!(all.len(), if n == 0 { 1 } else { 1 << (n - 1) });
            for comp in all {
                assert_eq!(comp.size(), n);
                let set = comp.descent_set();
                assert_eq!(Composition::from_descent_set(&set, n).unwrap(), comp);
                assert_eq!(Composition::from_descent_mask(comp.descent_mask(), n), comp);
            }
        }
    }
}
