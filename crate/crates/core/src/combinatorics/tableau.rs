//! Young tableaux in French notation: `rows[0]` is the bottom (longest) row.
//!
//! Semistandard tableaux are generated as chains of shapes
//! `∅ = λ⁰ ⊂ λ¹ ⊂ … ⊂ λʳ` in which every step adds a horizontal strip; the
//! cells of the `i`-th strip are filled with `i`.

use std::fmt;

use crate::error::{Error, Result};

use super::{Partition, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from its rows, bottom row first. Rows must weakly
    /// increase to the right and columns must strictly increase upwards.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau)?;
        let rows_ok = rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&x| x > 0));
        let cols_ok = rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(up, low)| up > low));
        if !rows_ok || !cols_ok {
            return Err(Error::InvalidTableau);
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries are exactly `1..n`, each once.
    pub fn is_standard(&self) -> bool {
        let n = self.shape.weight();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Row reading word: top row first, each row left to right.
    pub fn reading_word(&self) -> Result<Permutation> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let word = self.rows.iter().rev().flatten().copied().collect();
        Ok(Permutation::new_unchecked(word))
    }

    /// Number of times each value `1..=max` appears.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut out = vec![0; max];
        for &x in self.rows.iter().flatten() {
            out[x - 1] += 1;
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Tableau").field(&self.rows).finish()
    }
}

/// Walks every chain of horizontal strips from `∅` to `shape` whose strip
/// sizes are `weights`, calling `visit` with the row lengths after each step.
fn walk_strip_chains(
    shape: &Partition,
    weights: &[usize],
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    // Distributes `remaining` cells of one strip over rows `row..`.
    #[allow(clippy::too_many_arguments)]
    fn fill_strip(
        shape: &Partition,
        weights: &[usize],
        step: usize,
        old: &[usize],
        new: &mut Vec<usize>,
        row: usize,
        remaining: usize,
        chain: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if remaining == 0 {
            let mut next = new.clone();
            while next.last() == Some(&0) {
                next.pop();
            }
            chain.push(next);
            descend(shape, weights, step + 1, chain, visit);
            chain.pop();
            return;
        }
        if row >= shape.len() {
            return;
        }
        let current = old.get(row).copied().unwrap_or(0);
        let mut cap = shape.part(row);
        if row > 0 {
            cap = cap.min(old.get(row - 1).copied().unwrap_or(0));
        }
        if cap < current {
            return;
        }
        // cells still placeable in rows after this one bound the search
        let room_below: usize = (row + 1..shape.len())
            .map(|r| {
                let prev = old.get(r - 1).copied().unwrap_or(0);
                shape.part(r).min(prev).saturating_sub(old.get(r).copied().unwrap_or(0))
            })
            .sum();
        let max_here = (cap - current).min(remaining);
        let min_here = remaining.saturating_sub(room_below);
        for add in (min_here..=max_here).rev() {
            if new.len() <= row {
                new.resize(row + 1, 0);
            }
            new[row] = current + add;
            fill_strip(shape, weights, step, old, new, row + 1, remaining - add, chain, visit);
        }
        if new.len() > row {
            new[row] = current;
        }
    }

    fn descend(
        shape: &Partition,
        weights: &[usize],
        step: usize,
        chain: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if step == weights.len() {
            if chain.last().map(Vec::as_slice).unwrap_or(&[]) == shape.parts() {
                visit(chain);
            }
            return;
        }
        let old = chain.last().cloned().unwrap_or_default();
        let mut new = old.clone();
        new.resize(shape.len(), 0);
        fill_strip(shape, weights, step, &old, &mut new, 0, weights[step], chain, visit);
    }

    let mut chain = Vec::with_capacity(weights.len());
    descend(shape, weights, 0, &mut chain, visit);
}

fn check_weights(shape: &Partition, weights: &[usize]) -> Result<()> {
    let total: usize = weights.iter().sum();
    if total != shape.weight() {
        return Err(Error::WeightMismatch {
            left: shape.weight(),
            right: total,
        });
    }
    Ok(())
}

/// Semistandard tableaux of the given shape whose content is `weights`.
/// Zero entries in `weights` are allowed and contribute an empty strip.
pub fn semistandard_tableaux(shape: &Partition, weights: &[usize]) -> Result<Vec<Tableau>> {
    check_weights(shape, weights)?;
    let mut out = Vec::new();
    walk_strip_chains(shape, weights, &mut |chain| {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        let mut prev: &[usize] = &[];
        for (i, lengths) in chain.iter().enumerate() {
            for (r, &len) in lengths.iter().enumerate() {
                let before = prev.get(r).copied().unwrap_or(0);
                rows[r].extend(std::iter::repeat_n(i + 1, len - before));
            }
            prev = lengths;
        }
        out.push(Tableau {
            shape: shape.clone(),
            rows,
        });
    });
    Ok(out)
}

/// The Kostka number: how many semistandard tableaux have this shape and content.
pub fn kostka(shape: &Partition, weights: &[usize]) -> Result<u64> {
    check_weights(shape, weights)?;
    let mut count = 0u64;
    walk_strip_chains(shape, weights, &mut |_| count += 1);
    Ok(count)
}

/// Standard tableaux of the given shape, sorted by reading word in decreasing
/// lexicographic order.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let ones = vec![1; shape.weight()];
    let mut out = semistandard_tableaux(shape, &ones).expect("weights match by construction");
    out.sort_by_cached_key(|t| std::cmp::Reverse(t.reading_word().expect("standard").images().to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Oracle: try every filling with values 1..=len(weights) and keep the
    // semistandard ones with the right content.
    fn brute_force_kostka(shape: &Partition, weights: &[usize]) -> u64 {
        let n = shape.weight();
        let m = weights.len().max(1);
        let mut filling = vec![1usize; n];
        let mut count = 0;
        loop {
            let mut rows = Vec::new();
            let mut idx = 0;
            for &len in shape.parts() {
                rows.push(filling[idx..idx + len].to_vec());
                idx += len;
            }
            let mut content = vec![0; m];
            for &x in &filling {
                content[x - 1] += 1;
            }
            if content == weights && Tableau::new(rows).is_ok() {
                count += 1;
            }
            // odometer
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                filling[i] += 1;
                if filling[i] <= m {
                    break;
                }
                filling[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(brute_force_kostka(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2]), &[1, 1, 1, 1, 1]).unwrap(), 5);
        for n in 0..=6 {
            for lam in partitions_of(n) {
                assert_eq!(kostka(&lam, lam.parts()).unwrap(), 1, "{lam}");
            }
        }
        assert!(kostka(&p(&[2, 1]), &[1, 1]).is_err());
    }

    #[test]
    fn kostka_matches_brute_force_on_small_shapes() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        kostka(&lam, mu.parts()).unwrap(),
                        brute_force_kostka(&lam, mu.parts()),
                        "{lam} {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_is_invariant_under_rearranging_the_weight() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let expected = kostka(&lam, mu.parts()).unwrap();
                    let mut w = mu.parts().to_vec();
                    w.reverse();
                    assert_eq!(kostka(&lam, &w).unwrap(), expected);
                    if w.len() > 2 {
                        w.rotate_left(1);
                        w.insert(1, 0);
                        assert_eq!(kostka(&lam, &w).unwrap(), expected);
                    }
                }
            }
        }
        // full rearrangement check against the brute-force oracle at n = 4
        let weight_vectors = [[2, 1, 1, 0], [1, 2, 0, 1], [0, 1, 1, 2], [1, 0, 3, 0]];
        for lam in partitions_of(4) {
            for w in &weight_vectors {
                assert_eq!(kostka(&lam, w).unwrap(), brute_force_kostka(&lam, w));
            }
        }
    }

    #[test]
    fn shape_three_two_tableaux() {
        let syt = standard_tableaux(&p(&[3, 2]));
        let words: Vec<String> = syt.iter().map(|t| t.reading_word().unwrap().to_string()).collect();
        assert_eq!(words, ["45123", "35124", "34125", "25134", "24135"]);
        assert_eq!(syt[0].rows(), &[vec![1, 2, 3], vec![4, 5]]);
        assert_eq!(syt[4].rows(), &[vec![1, 3, 5], vec![2, 4]]);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[6])).len(), 1);
        let row = &standard_tableaux(&p(&[4]))[0];
        assert_eq!(row.reading_word().unwrap(), Permutation::identity(4));
    }

    #[test]
    fn standard_count_equals_kostka_with_unit_weight() {
        for n in 1..=7 {
            let mut total = 0;
            for lam in partitions_of(n) {
                let syt = standard_tableaux(&lam);
                assert!(syt.iter().all(Tableau::is_standard));
                assert_eq!(syt.len() as u64, kostka(&lam, &vec![1; n]).unwrap());
                total += syt.len() * syt.len();
            }
            // Σ f_λ² = n!
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn semistandard_fillings_are_valid() {
        let lam = p(&[3, 2, 1]);
        let weights = [2, 2, 1, 1];
        let all = semistandard_tableaux(&lam, &weights).unwrap();
        assert_eq!(all.len() as u64, brute_force_kostka(&lam, &weights));
        for t in &all {
            assert!(Tableau::new(t.rows().to_vec()).is_ok());
            assert_eq!(t.content(), weights);
        }
    }

    #[test]
    fn rejects_invalid_tableaux() {
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        let t = Tableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.reading_word(), Err(Error::NotStandard));
    }
}
