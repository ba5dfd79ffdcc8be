//! Chromatic symmetric and quasisymmetric functions of a graph, and the hook
//! coefficients of both computed along independent routes.
//!
//! The quasisymmetric function `X_{G,ζ}(x,t)` is built two ways:
//!
//! 1. [`cqf_monomial`] sums `t^asc(κ)` over proper colorings, giving
//!    M-basis coordinates which [`qsym_m_to_f`] converts to the F basis.
//! 2. [`cqf_fundamental_via_orientations`] sums, over acyclic orientations
//!    `o`, `t^des(o)` times the fundamental functions of the dual linear
//!    extensions of `o` under a sink-minimal increasing labeling.
//!
//! The two must agree coefficient for coefficient; their hook coefficients
//! must also equal the closed binomial-weighted sink counts.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{binomial_signed, Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::graph::{bit, vertices_of, Graph, Labeling, Orientation};
use crate::symfunc::{
    hook_coefficient_of_f, m_to_e, m_to_s, qsym_m_to_f, specialize_w_k, QuasisymmetricF,
    QuasisymmetricM, SymmetricFunctionE, SymmetricFunctionM, SymmetricFunctionS,
};
use crate::tpoly::TPoly;

/// `a_j`: the number of acyclic orientations with exactly `j` sinks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkProfile {
    /// `counts[j-1] = a_j` for `j = 1..=n`
    counts: Vec<u64>,
}

impl SinkProfile {
    pub fn n(&self) -> usize {
        self.counts.len()
    }

    /// `a_j`; zero outside `1..=n`.
    pub fn count(&self, j: usize) -> u64 {
        j.checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `Σ_j (j-1 choose k-1) a_j`.
    pub fn hook_coefficient(&self, k: usize) -> Result<BigInt> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::HookOutOfRange { k, n });
        }
        Ok((1..=n)
            .map(|j| BigInt::from(binomial_signed(j as i64 - 1, k as i64 - 1)) * self.count(j))
            .sum())
    }
}

/// One row of a multi-route comparison: the same quantity at index `k`
/// computed by each route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison<T> {
    pub k: usize,
    pub values: Vec<T>,
}

impl<T: PartialEq> Comparison<T> {
    pub fn agrees(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport<T> {
    /// Route names, one per entry of each row's `values`.
    pub routes: Vec<&'static str>,
    pub rows: Vec<Comparison<T>>,
}

impl<T: PartialEq> CheckReport<T> {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(Comparison::agrees)
    }

    pub fn first_mismatch(&self) -> Option<&Comparison<T>> {
        self.rows.iter().find(|r| !r.agrees())
    }
}

/// `X_G` in the monomial basis. The coefficient of `m_λ` is the number of
/// stable partitions of type `λ` times `Π mult_i(λ)!`, the number of ways to
/// hand distinct colors to blocks of equal size in a fixed color pattern.
pub fn csf_monomial(g: &Graph) -> SymmetricFunctionM {
    let mut f = SymmetricFunctionM::zero(g.n());
    for (lambda, count) in g.stable_partitions_by_type() {
        let weight: u64 = lambda
            .multiplicities()
            .into_iter()
            .map(crate::combinatorics::factorial)
            .product();
        f.add_term(lambda, &(BigInt::from(count) * weight))
            .expect("stable partition types have weight n");
    }
    f
}

pub fn csf_schur(g: &Graph) -> SymmetricFunctionS {
    m_to_s(&csf_monomial(g))
}

pub fn csf_elementary(g: &Graph) -> SymmetricFunctionE {
    m_to_e(&csf_monomial(g))
}

pub fn sink_profile(g: &Graph) -> SinkProfile {
    let mut counts = vec![0u64; g.n()];
    for o in g.acyclic_orientations() {
        counts[o.sinks() - 1] += 1;
    }
    SinkProfile { counts }
}

pub fn hook_coefficient_via_sinks(g: &Graph, k: usize) -> Result<BigInt> {
    sink_profile(g).hook_coefficient(k)
}

/// `X_G(w_k)`, the number of proper colorings with at most `k` colors.
pub fn chromatic_polynomial_value(g: &Graph, k: usize) -> BigInt {
    specialize_w_k(&csf_monomial(g), k)
}

/// `X_{G,ζ}(x,t)` in the monomial quasisymmetric basis.
///
/// Colorings that use exactly the colors `1..=ℓ` are ordered sequences of
/// nonempty stable blocks; block `i` receives color `i`, and the coefficient
/// of `M_α` collects `t^asc(κ)` over sequences with block sizes `α`.
pub fn cqf_monomial(g: &Graph, zeta: &Labeling) -> Result<QuasisymmetricM> {
    check_labeling(g, zeta)?;
    let n = g.n();
    // neighbors with a smaller label
    let lower: Vec<u64> = (1..=n)
        .map(|v| {
            g.neighbors(v)
                .filter(|&u| zeta.label(u) < zeta.label(v))
                .fold(0, |m, u| m | bit(u))
        })
        .collect();

    struct Walk<'a> {
        g: &'a Graph,
        lower: &'a [u64],
        sizes: Vec<usize>,
        acc: HashMap<Vec<usize>, Vec<u64>>,
    }

    impl Walk<'_> {
        fn rec(&mut self, remaining: u64, colored: u64, asc: usize) {
            if remaining == 0 {
                let slot = self.acc.entry(self.sizes.clone()).or_default();
                if slot.len() <= asc {
                    slot.resize(asc + 1, 0);
                }
                slot[asc] += 1;
                return;
            }
            let mut block = remaining;
            while block != 0 {
                if self.g.is_stable(block) {
                    let gained: usize = vertices_of(block)
                        .map(|v| (self.lower[v - 1] & colored).count_ones() as usize)
                        .sum();
                    self.sizes.push(block.count_ones() as usize);
                    self.rec(remaining & !block, colored | block, asc + gained);
                    self.sizes.pop();
                }
                block = (block - 1) & remaining;
            }
        }
    }

    let mut walk = Walk {
        g,
        lower: &lower,
        sizes: Vec::with_capacity(n),
        acc: HashMap::new(),
    };
    walk.rec(g.all_vertices_mask(), 0, 0);

    let mut f = QuasisymmetricM::zero(n);
    for (sizes, counts) in walk.acc {
        f.add_term(Composition::new(sizes)?, &TPoly::from_counts(&counts))?;
    }
    Ok(f)
}

fn check_labeling(g: &Graph, zeta: &Labeling) -> Result<()> {
    if zeta.n() != g.n() {
        return Err(Error::GraphMismatch {
            expected: g.n(),
            actual: zeta.n(),
        });
    }
    Ok(())
}

/// Builds a sink-minimal increasing labeling, letting `pick` choose which
/// eligible vertex receives the next label. Sinks are labeled first, then any
/// vertex whose out-neighbors are all labeled. Labels therefore decrease
/// along every directed path and the sinks hold `1..=snk(o)`.
pub fn sink_minimal_labeling_by(
    o: &Orientation<'_>,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<Labeling> {
    if !o.is_acyclic() {
        return Err(Error::CyclicOrientation);
    }
    let n = o.graph().n();
    let mut labels = vec![0usize; n];
    let mut labeled = 0u64;
    let mut next = 1;
    let mut sinks: Vec<usize> = o.sink_vertices();
    while !sinks.is_empty() {
        let v = pick(&sinks);
        sinks.retain(|&s| s != v);
        labels[v - 1] = next;
        labeled |= bit(v);
        next += 1;
    }
    while next <= n {
        let eligible: Vec<usize> = (1..=n)
            .filter(|&v| labeled & bit(v) == 0 && o.out_mask(v) & !labeled == 0)
            .collect();
        let v = pick(&eligible);
        debug_assert!(eligible.contains(&v));
        labels[v - 1] = next;
        labeled |= bit(v);
        next += 1;
    }
    Labeling::new(labels)
}

/// Canonical choice: always the smallest eligible vertex index.
pub fn sink_minimal_increasing_labeling(o: &Orientation<'_>) -> Result<Labeling> {
    sink_minimal_labeling_by(o, |candidates| candidates[0])
}

/// Checks both defining properties: labels decrease along directed paths and
/// every sink carries a label at most the number of sinks.
pub fn is_sink_minimal_increasing(o: &Orientation<'_>, omega: &Labeling) -> Result<bool> {
    let reach = o.reachability()?;
    let sinks = o.sinks();
    let n = o.graph().n();
    if omega.n() != n {
        return Ok(false);
    }
    let decreasing = (1..=n).all(|u| vertices_of(reach[u - 1]).all(|v| omega.label(u) > omega.label(v)));
    let sinks_small = o.sink_vertices().into_iter().all(|v| omega.label(v) <= sinks);
    Ok(decreasing && sinks_small)
}

/// Sequencings `v_1..v_n` in which every directed path runs forwards, read
/// through `ω`. Output is in decreasing lexicographic order.
pub fn dual_linear_extensions(o: &Orientation<'_>, omega: &Labeling) -> Result<Vec<Permutation>> {
    if !o.is_acyclic() {
        return Err(Error::CyclicOrientation);
    }
    let g = o.graph();
    let n = g.n();
    if omega.n() != n {
        return Err(Error::GraphMismatch {
            expected: n,
            actual: omega.n(),
        });
    }
    let mut preds = vec![0u64; n];
    for (tail, head) in o.arcs() {
        preds[head - 1] |= bit(tail);
    }
    // try vertices in decreasing label order
    let mut by_label = omega.vertex_of();
    by_label.reverse();

    fn rec(
        placed: u64,
        preds: &[u64],
        by_label: &[usize],
        omega: &Labeling,
        word: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if word.len() == preds.len() {
            out.push(Permutation::new_unchecked(word.clone()));
            return;
        }
        for &v in by_label {
            if placed & bit(v) == 0 && preds[v - 1] & !placed == 0 {
                word.push(omega.label(v));
                rec(placed | bit(v), preds, by_label, omega, word, out);
                word.pop();
            }
        }
    }

    let mut out = Vec::new();
    rec(0, &preds, &by_label, omega, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// `{n - i : i ∈ Des(σ)}` as a composition of `n`.
pub fn reflected_descent_composition(sigma: &Permutation) -> Composition {
    let n = sigma.len();
    let mut set: Vec<usize> = sigma.descent_set().into_iter().map(|i| n - i).collect();
    set.sort_unstable();
    Composition::from_descent_set(&set, n).expect("reflection stays inside 1..n-1")
}

/// `X_{G,ζ}(x,t)` in the fundamental basis, assembled from acyclic
/// orientations with the canonical sink-minimal labeling.
pub fn cqf_fundamental_via_orientations(g: &Graph, zeta: &Labeling) -> Result<QuasisymmetricF> {
    cqf_fundamental_with(g, zeta, sink_minimal_increasing_labeling)
}

/// As [`cqf_fundamental_via_orientations`] with a caller-supplied choice of
/// `ω_o` for each orientation.
pub fn cqf_fundamental_with(
    g: &Graph,
    zeta: &Labeling,
    mut omega_for: impl FnMut(&Orientation<'_>) -> Result<Labeling>,
) -> Result<QuasisymmetricF> {
    check_labeling(g, zeta)?;
    let mut acc: BTreeMap<Composition, Vec<u64>> = BTreeMap::new();
    for o in g.acyclic_orientations() {
        let des = o.descents(zeta)?;
        let omega = omega_for(&o)?;
        for sigma in dual_linear_extensions(&o, &omega)? {
            let slot = acc.entry(reflected_descent_composition(&sigma)).or_default();
            if slot.len() <= des {
                slot.resize(des + 1, 0);
            }
            slot[des] += 1;
        }
    }
    QuasisymmetricF::from_terms(
        g.n(),
        acc.into_iter().map(|(alpha, counts)| (alpha, TPoly::from_counts(&counts))),
    )
}

/// `Σ_{o} (snk(o)-1 choose k-1) t^des(o)` over acyclic orientations.
pub fn hook_coefficient_via_orientations_t(g: &Graph, zeta: &Labeling, k: usize) -> Result<TPoly> {
    check_labeling(g, zeta)?;
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::HookOutOfRange { k, n });
    }
    let mut counts = vec![0u64; g.edge_count() + 1];
    for o in g.acyclic_orientations() {
        counts[o.descents(zeta)?] += binomial_signed(o.sinks() as i64 - 1, k as i64 - 1);
    }
    Ok(TPoly::from_counts(&counts))
}

/// `a_k` against `Σ_{ℓ(λ)=k} b_λ` for `k = 1..=n`.
pub fn verify_e_sink_identity(g: &Graph) -> CheckReport<BigInt> {
    let profile = sink_profile(g);
    let e = csf_elementary(g);
    let mut by_length = vec![BigInt::zero(); g.n() + 1];
    for (lambda, b) in e.terms() {
        by_length[lambda.len()] += b;
    }
    CheckReport {
        routes: vec!["sink count", "e-coefficient sum"],
        rows: (1..=g.n())
            .map(|k| Comparison {
                k,
                values: vec![BigInt::from(profile.count(k)), by_length[k].clone()],
            })
            .collect(),
    }
}

/// Schur hook coefficients against the binomial-weighted sink counts, `k = 1..=n`.
pub fn verify_hook_symmetric(g: &Graph) -> CheckReport<BigInt> {
    let schur = csf_schur(g);
    let profile = sink_profile(g);
    let n = g.n();
    CheckReport {
        routes: vec!["schur coefficient", "sink formula"],
        rows: (1..=n)
            .map(|k| Comparison {
                k,
                values: vec![
                    schur.coeff(&Partition::hook(n, k).expect("k in range")),
                    profile.hook_coefficient(k).expect("k in range"),
                ],
            })
            .collect(),
    }
}

/// F-hook coefficients of `X_{G,ζ}(x,t)` three ways: from the orientation
/// expansion, from the closed sink/descent formula, and from the coloring
/// expansion converted to the F basis.
pub fn verify_hook_t(g: &Graph, zeta: &Labeling) -> Result<CheckReport<TPoly>> {
    let via_orientations = cqf_fundamental_via_orientations(g, zeta)?;
    let via_colorings = qsym_m_to_f(&cqf_monomial(g, zeta)?);
    let rows = (1..=g.n())
        .map(|k| {
            Ok(Comparison {
                k,
                values: vec![
                    hook_coefficient_of_f(&via_orientations, k)?,
                    hook_coefficient_via_orientations_t(g, zeta, k)?,
                    hook_coefficient_of_f(&via_colorings, k)?,
                ],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        routes: vec!["orientation expansion", "sink/descent formula", "coloring expansion"],
        rows,
    })
}

/// `X_G(w_k)` against a direct count of colorings with at most `k` colors,
/// for `k = 0..=k_max`.
pub fn verify_chromatic_polynomial(g: &Graph, k_max: usize) -> CheckReport<BigInt> {
    let m = csf_monomial(g);
    CheckReport {
        routes: vec!["specialization", "coloring count"],
        rows: (0..=k_max)
            .map(|k| Comparison {
                k,
                values: vec![
                    specialize_w_k(&m, k),
                    BigInt::from(g.proper_colorings_bounded(k).count()),
                ],
            })
            .collect(),
    }
}
