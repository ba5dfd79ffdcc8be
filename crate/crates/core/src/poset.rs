//! Finite posets on `1..=n`, their incomparability graphs, and P-tableaux of
//! hook shape.

use std::fmt;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::chromatic::{csf_schur, CheckReport, Comparison};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::graph::format::{json_pair_lines, ParseError};
use crate::graph::{bit, vertices_of, Graph, MAX_VERTICES};

/// A strict partial order. `above[a-1]` holds every `b` with `a < b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    above: Vec<u64>,
}

impl Poset {
    /// Transitive closure of the given relations; `(a, b)` means `a < b`.
    pub fn from_covers(n: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut above = vec![0u64; n];
        for (a, b) in covers {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::CyclicPoset(a));
            }
            above[a - 1] |= bit(b);
        }
        // Warshall on bit rows
        for k in 1..=n {
            let row = above[k - 1];
            for a in 1..=n {
                if above[a - 1] & bit(k) != 0 {
                    above[a - 1] |= row;
                }
            }
        }
        if let Some(a) = (1..=n).find(|&a| above[a - 1] & bit(a) != 0) {
            return Err(Error::CyclicPoset(a));
        }
        Ok(Poset { n, above })
    }

    pub fn chain(n: usize) -> Self {
        Poset::from_covers(n, (1..n).map(|i| (i, i + 1))).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            above: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a <_P b`
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a - 1] & bit(b) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b) || self.less(b, a)
    }

    pub fn is_total(&self) -> bool {
        (1..=self.n).all(|a| (a + 1..=self.n).all(|b| self.comparable(a, b)))
    }

    /// All `(a, b)` with `a < b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|a| vertices_of(self.above[a - 1]).map(move |b| (a, b)))
            .collect()
    }

    /// The Hasse diagram, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| {
                vertices_of(self.above[a - 1]).all(|c| self.above[c - 1] & bit(b) == 0)
            })
            .collect()
    }

    pub fn incomparability_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=self.n)
            .flat_map(|a| (a + 1..=self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.comparable(a, b))
            .collect();
        Graph::new(self.n, edges).expect("pairs are distinct and in range")
    }

    /// Every strict partial order on `1..=n`, unlabeled isomorphism classes
    /// not merged. Built by adding element `m+1` to each order on `1..=m`
    /// below a down-set and above a disjoint up-set.
    pub fn all(n: usize) -> Vec<Poset> {
        let mut current = vec![Poset::antichain(0)];
        for m in 0..n {
            let mut next = Vec::new();
            for p in &current {
                let below_of = |x: usize| (1..=m).filter(|&a| p.less(a, x)).fold(0u64, |s, a| s | bit(a));
                let downs: Vec<u64> = (0..1u64 << m)
                    .filter(|&d| vertices_of(d).all(|x| below_of(x) & !d == 0))
                    .collect();
                let ups: Vec<u64> = (0..1u64 << m)
                    .filter(|&u| vertices_of(u).all(|x| p.above[x - 1] & !u == 0))
                    .collect();
                for &d in &downs {
                    for &u in &ups {
                        if d & u != 0 || !vertices_of(d).all(|x| p.above[x - 1] & u == u) {
                            continue;
                        }
                        let new = m + 1;
                        let mut above = p.above.clone();
                        for x in vertices_of(d) {
                            above[x - 1] |= bit(new);
                        }
                        above.push(u);
                        next.push(Poset { n: new, above });
                    }
                }
            }
            current = next;
        }
        current
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset on {} [", self.n)?;
        for (i, (a, b)) in self.covers().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}<{b}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which way the column condition of a P-tableau points. Rows always
/// increase strictly in `P` from left to right; rows are stacked bottom-up.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ColumnRule {
    /// The entry in the upper cell is never `P`-less than the one below it.
    #[default]
    Gasharov,
    /// The entry in the lower cell is never `P`-less than the one above it.
    Mirrored,
}

impl ColumnRule {
    fn allows(self, p: &Poset, lower: usize, upper: usize) -> bool {
        match self {
            ColumnRule::Gasharov => !p.less(upper, lower),
            ColumnRule::Mirrored => !p.less(lower, upper),
        }
    }
}

/// Number of P-tableaux of shape `(k, 1^(n-k))`.
pub fn count_p_tableaux_hook(p: &Poset, k: usize) -> Result<u64> {
    count_p_tableaux_hook_with(p, k, ColumnRule::default())
}

pub fn count_p_tableaux_hook_with(p: &Poset, k: usize, rule: ColumnRule) -> Result<u64> {
    let n = p.n();
    if k == 0 || k > n {
        return Err(Error::HookOutOfRange { k, n });
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    // Column cells above the corner, filled bottom to top.
    fn column(p: &Poset, rule: ColumnRule, below: usize, unused: u64) -> u64 {
        if unused == 0 {
            return 1;
        }
        vertices_of(unused)
            .filter(|&x| rule.allows(p, below, x))
            .map(|x| column(p, rule, x, unused & !bit(x)))
            .sum()
    }

    // Bottom row, left to right; `corner` is its first entry.
    fn row(p: &Poset, rule: ColumnRule, k: usize, corner: usize, last: usize, len: usize, unused: u64) -> u64 {
        if len == k {
            return column(p, rule, corner, unused);
        }
        vertices_of(unused & p.above[last - 1])
            .map(|x| row(p, rule, k, corner, x, len + 1, unused & !bit(x)))
            .sum()
    }

    Ok((1..=n)
        .map(|corner| row(p, rule, k, corner, corner, 1, all & !bit(corner)))
        .sum())
}

/// P-tableau counts against Schur hook coefficients of the incomparability
/// graph, `k = 1..=n`.
pub fn verify_hook_proposition(p: &Poset) -> CheckReport<BigInt> {
    verify_hook_proposition_with(p, ColumnRule::default())
}

pub fn verify_hook_proposition_with(p: &Poset, rule: ColumnRule) -> CheckReport<BigInt> {
    let n = p.n();
    let schur = csf_schur(&p.incomparability_graph());
    CheckReport {
        routes: vec!["p-tableaux", "schur coefficient"],
        rows: (1..=n)
            .map(|k| Comparison {
                k,
                values: vec![
                    BigInt::from(count_p_tableaux_hook_with(p, k, rule).expect("k in range")),
                    schur.coeff(&Partition::hook(n, k).expect("k in range")),
                ],
            })
            .collect(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPoset {
    n: usize,
    covers: Vec<[usize; 2]>,
}

/// Reads `{"n": 3, "covers": [[1,2],[2,3]]}`; `[a,b]` means `a < b`.
pub fn parse_poset(text: &str) -> std::result::Result<Poset, ParseError> {
    let raw: JsonPoset = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), format!("invalid poset JSON: {e}")))?;
    let lines = json_pair_lines(text, "covers");
    let locate = |i: usize, message: String| match lines.get(i) {
        Some(&line) => ParseError::at(line, message),
        None => ParseError::general(message),
    };
    for (i, &[a, b]) in raw.covers.iter().enumerate() {
        if let Err(e) = Poset::from_covers(raw.n, [(a, b)]) {
            return Err(locate(i, format!("covers[{i}] = [{a},{b}]: {e}")));
        }
    }
    let pairs: Vec<(usize, usize)> = raw.covers.iter().map(|&[a, b]| (a, b)).collect();
    match Poset::from_covers(raw.n, pairs.iter().copied()) {
        Ok(p) => Ok(p),
        Err(e) => {
            // Name the first relation that closes the cycle.
            let first = (1..=pairs.len())
                .find(|&len| Poset::from_covers(raw.n, pairs[..len].iter().copied()).is_err())
                .unwrap_or(pairs.len());
            Err(locate(first - 1, format!("covers[{}]: {e}", first - 1)))
        }
    }
}
