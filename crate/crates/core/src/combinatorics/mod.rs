//! Partitions, compositions, permutations and tableaux.

mod composition;
mod partition;
mod permutation;
mod tableau;

pub use composition::{compositions_of, Composition};
pub use partition::{partitions_of, Partition};
pub use permutation::Permutation;
pub use tableau::{kostka, semistandard_tableaux, standard_tableaux, Tableau};

/// `(a choose b)`, zero when `b > a`.
pub fn binomial(a: usize, b: usize) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u64, |acc, i| acc * (a - i) as u64 / (i + 1) as u64)
}

/// Binomial with the convention that a negative top or bottom argument gives 0,
/// except `(a choose 0) = 1` for `a >= 0`.
pub fn binomial_signed(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 {
        return 0;
    }
    binomial(a as usize, b as usize)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
