//! Homogeneous symmetric and quasisymmetric functions stored as sparse
//! coefficient maps, with exact basis changes between them.
//!
//! Symmetric functions carry integer coefficients and are indexed by
//! partitions; quasisymmetric functions carry [`TPoly`] coefficients and are
//! indexed by compositions. Zero coefficients are never stored, so two values
//! are equal exactly when their maps are equal.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;
use std::ops::AddAssign;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    factorial, kostka, partitions_of, standard_tableaux, Composition, Partition,
};
use crate::error::{Error, Result};
use crate::tpoly::TPoly;

/// Marker for the basis a coefficient map is expressed in.
pub trait Basis: Clone + fmt::Debug + Send + Sync + 'static {
    /// Letter used in rendering and serialization (`m`, `e`, `s`, `M`, `F`).
    const LETTER: &'static str;
}

macro_rules! basis_marker {
    ($name:ident, $letter:literal) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
        pub struct $name;
        impl Basis for $name {
            const LETTER: &'static str = $letter;
        }
    };
}

basis_marker!(MonomialBasis, "m");
basis_marker!(ElementaryBasis, "e");
basis_marker!(SchurBasis, "s");
basis_marker!(QuasiMonomialBasis, "M");
basis_marker!(FundamentalBasis, "F");

#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricFunction<B: Basis> {
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
    _basis: PhantomData<B>,
}

pub type SymmetricFunctionM = SymmetricFunction<MonomialBasis>;
pub type SymmetricFunctionE = SymmetricFunction<ElementaryBasis>;
pub type SymmetricFunctionS = SymmetricFunction<SchurBasis>;

impl<B: Basis> SymmetricFunction<B> {
    pub fn zero(degree: usize) -> Self {
        SymmetricFunction {
            degree,
            coeffs: BTreeMap::new(),
            _basis: PhantomData,
        }
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis_element(lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.weight());
        f.coeffs.insert(lambda, BigInt::one());
        f
    }

    pub fn from_terms<I, C>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut f = Self::zero(degree);
        for (lambda, c) in terms {
            f.add_term(lambda, &c.into())?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &BigInt) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::WeightMismatch {
                left: self.degree,
                right: lambda.weight(),
            });
        }
        add_sparse(&mut self.coeffs, lambda, c);
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in canonical (reverse lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same as [`Self::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

fn add_sparse<K: Ord, C>(map: &mut BTreeMap<K, C>, key: K, c: &C)
where
    C: Clone + for<'a> AddAssign<&'a C> + IsZero,
{
    if c.is_zero_value() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(c.clone());
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero_value() {
                slot.remove();
            }
        }
    }
}

trait IsZero {
    fn is_zero_value(&self) -> bool;
}

impl IsZero for BigInt {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl IsZero for TPoly {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Quasisymmetric<B: Basis> {
    degree: usize,
    coeffs: BTreeMap<Composition, TPoly>,
    _basis: PhantomData<B>,
}

pub type QuasisymmetricM = Quasisymmetric<QuasiMonomialBasis>;
pub type QuasisymmetricF = Quasisymmetric<FundamentalBasis>;

impl<B: Basis> Quasisymmetric<B> {
    pub fn zero(degree: usize) -> Self {
        Quasisymmetric {
            degree,
            coeffs: BTreeMap::new(),
            _basis: PhantomData,
        }
    }

    pub fn basis_element(alpha: Composition) -> Self {
        let mut f = Self::zero(alpha.size());
        f.coeffs.insert(alpha, TPoly::one());
        f
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, TPoly)>,
    {
        let mut f = Self::zero(degree);
        for (alpha, c) in terms {
            f.add_term(alpha, &c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, alpha: Composition, c: &TPoly) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(Error::WeightMismatch {
                left: self.degree,
                right: alpha.size(),
            });
        }
        self.add_unchecked(alpha, c);
        Ok(())
    }

    fn add_unchecked(&mut self, alpha: Composition, c: &TPoly) {
        add_sparse(&mut self.coeffs, alpha, c);
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, alpha: &Composition) -> TPoly {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &TPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same as [`Self::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms present in exactly one of the two values, or with different
    /// coefficients: `(index, self coefficient, other coefficient)`.
    pub fn diff(&self, other: &Self) -> Vec<(Composition, TPoly, TPoly)> {
        let mut keys: Vec<&Composition> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.coeff(k), other.coeff(k));
                (a != b).then(|| (k.clone(), a, b))
            })
            .collect()
    }

    /// Substitutes an integer for `t` in every coefficient.
    pub fn evaluate_t(&self, value: &BigInt) -> Self {
        let mut out = Self::zero(self.degree);
        for (alpha, c) in &self.coeffs {
            out.add_unchecked(alpha.clone(), &TPoly::constant(c.eval(value)));
        }
        out
    }

    /// `t = 1`.
    pub fn collapse_t(&self) -> Self {
        self.evaluate_t(&BigInt::one())
    }
}

impl QuasisymmetricM {
    /// Coefficients agree on every pair of compositions that are
    /// rearrangements of each other.
    pub fn is_symmetric(&self) -> bool {
        let mut groups: BTreeMap<Partition, Vec<&TPoly>> = BTreeMap::new();
        for (alpha, c) in &self.coeffs {
            groups.entry(alpha.sorted()).or_default().push(c);
        }
        groups.into_iter().all(|(lambda, cs)| {
            cs.len() as u64 == rearrangement_count(&lambda) && cs.windows(2).all(|w| w[0] == w[1])
        })
    }

    /// Reads a symmetric, `t`-free value back as a monomial symmetric function.
    pub fn to_symmetric(&self) -> Option<SymmetricFunctionM> {
        if !self.is_symmetric() {
            return None;
        }
        let mut out = SymmetricFunctionM::zero(self.degree);
        for (alpha, c) in &self.coeffs {
            if c.degree().unwrap_or(0) > 0 {
                return None;
            }
            if alpha.parts().windows(2).all(|w| w[0] >= w[1]) {
                add_sparse(&mut out.coeffs, alpha.sorted(), &c.coeff(0));
            }
        }
        Some(out)
    }
}

impl SymmetricFunctionM {
    /// `m_λ = Σ M_α` over the distinct rearrangements `α` of `λ`.
    pub fn to_quasisymmetric(&self) -> QuasisymmetricM {
        let mut out = QuasisymmetricM::zero(self.degree);
        for (lambda, c) in &self.coeffs {
            let poly = TPoly::constant(c.clone());
            for alpha in distinct_rearrangements(lambda.parts()) {
                out.add_unchecked(Composition::new(alpha).expect("positive parts"), &poly);
            }
        }
        out
    }
}

/// Number of distinct orderings of the parts of `lambda`.
fn rearrangement_count(lambda: &Partition) -> u64 {
    let denom: u64 = lambda.multiplicities().into_iter().map(factorial).product();
    factorial(lambda.len()) / denom
}

fn distinct_rearrangements(parts: &[usize]) -> Vec<Vec<usize>> {
    fn rec(counts: &mut BTreeMap<usize, usize>, prefix: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            prefix.push(k);
            rec(counts, prefix, len, out);
            prefix.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    let mut counts = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    rec(&mut counts, &mut Vec::new(), parts.len(), &mut out);
    out
}

/// Kostka numbers for all pairs of partitions of one degree, plus the
/// transition matrix from `e` to `m`.
struct KostkaTable {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `kostka[i][j] = K(partitions[i], partitions[j])`
    kostka: Vec<Vec<u64>>,
    /// `e_to_m[i][j]` = coefficient of `m_{partitions[j]}` in `e_{partitions[i]}`
    e_to_m: Vec<Vec<u64>>,
}

impl KostkaTable {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index: HashMap<Partition, usize> =
            partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let kostka: Vec<Vec<u64>> = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| kostka(lam, mu.parts()).expect("same weight"))
                    .collect()
            })
            .collect();
        // e_μ = Σ_ν K(ν, μ) s_{ν'}, and s_{ν'} = Σ_λ K(ν', λ) m_λ
        let p = partitions.len();
        let mut e_to_m = vec![vec![0u64; p]; p];
        for (mu, row) in e_to_m.iter_mut().enumerate() {
            for nu in 0..p {
                let k_nu_mu = kostka[nu][mu];
                if k_nu_mu == 0 {
                    continue;
                }
                let nu_conj = index[&partitions[nu].conjugate()];
                for (lam, cell) in row.iter_mut().enumerate() {
                    *cell += k_nu_mu * kostka[nu_conj][lam];
                }
            }
        }
        KostkaTable {
            partitions,
            index,
            kostka,
            e_to_m,
        }
    }

    fn for_degree(n: usize) -> Arc<KostkaTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(table) = cache.lock().expect("kostka cache poisoned").get(&n) {
            return Arc::clone(table);
        }
        let table = Arc::new(KostkaTable::build(n));
        cache
            .lock()
            .expect("kostka cache poisoned")
            .entry(n)
            .or_insert(table)
            .clone()
    }

    fn dense(&self, f_coeffs: &BTreeMap<Partition, BigInt>) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.partitions.len()];
        for (lambda, c) in f_coeffs {
            v[self.index[lambda]] = c.clone();
        }
        v
    }
}

fn sparse<B: Basis>(degree: usize, partitions: &[Partition], dense: Vec<BigInt>) -> SymmetricFunction<B> {
    let mut f = SymmetricFunction::zero(degree);
    for (lambda, c) in partitions.iter().zip(dense) {
        if !c.is_zero() {
            f.coeffs.insert(lambda.clone(), c);
        }
    }
    f
}

/// Schur expansion of a monomial expansion: solves `r_λ = Σ_μ K(μ,λ) c_μ`
/// top-down in dominance order. `K` is unitriangular so the solve is exact.
pub fn m_to_s(f: &SymmetricFunctionM) -> SymmetricFunctionS {
    let table = KostkaTable::for_degree(f.degree);
    let r = table.dense(&f.coeffs);
    let mut c: Vec<BigInt> = Vec::with_capacity(r.len());
    for (i, r_i) in r.iter().enumerate() {
        let mut value = r_i.clone();
        for (j, c_j) in c.iter().enumerate() {
            let k = table.kostka[j][i];
            if k != 0 && !c_j.is_zero() {
                value -= c_j * BigInt::from(k);
            }
        }
        debug_assert_eq!(table.kostka[i][i], 1);
        c.push(value);
    }
    sparse(f.degree, &table.partitions, c)
}

pub fn s_to_m(f: &SymmetricFunctionS) -> SymmetricFunctionM {
    let table = KostkaTable::for_degree(f.degree);
    let c = table.dense(&f.coeffs);
    let r = (0..c.len())
        .map(|i| {
            c.iter()
                .enumerate()
                .filter(|(_, c_j)| !c_j.is_zero())
                .map(|(j, c_j)| c_j * BigInt::from(table.kostka[j][i]))
                .sum()
        })
        .collect();
    sparse(f.degree, &table.partitions, r)
}

/// Elementary expansion of a monomial expansion. `e_μ = m_{μ'} + (terms lower
/// in dominance)`, so processing `λ` top-down fixes `b_{λ'}` at each step.
pub fn m_to_e(f: &SymmetricFunctionM) -> SymmetricFunctionE {
    let table = KostkaTable::for_degree(f.degree);
    let r = table.dense(&f.coeffs);
    let p = r.len();
    let mut b: Vec<Option<BigInt>> = vec![None; p];
    for (lam, r_lam) in r.iter().enumerate() {
        let mut value = r_lam.clone();
        for (mu, b_mu) in b.iter().enumerate() {
            if let Some(b_mu) = b_mu {
                let a = table.e_to_m[mu][lam];
                if a != 0 && !b_mu.is_zero() {
                    value -= b_mu * BigInt::from(a);
                }
            }
        }
        let target = table.index[&table.partitions[lam].conjugate()];
        debug_assert_eq!(table.e_to_m[target][lam], 1);
        debug_assert!(b[target].is_none());
        b[target] = Some(value);
    }
    sparse(
        f.degree,
        &table.partitions,
        b.into_iter().map(|x| x.expect("every partition solved")).collect(),
    )
}

pub fn e_to_m(f: &SymmetricFunctionE) -> SymmetricFunctionM {
    let table = KostkaTable::for_degree(f.degree);
    let b = table.dense(&f.coeffs);
    let r = (0..b.len())
        .map(|lam| {
            b.iter()
                .enumerate()
                .filter(|(_, b_mu)| !b_mu.is_zero())
                .map(|(mu, b_mu)| b_mu * BigInt::from(table.e_to_m[mu][lam]))
                .sum()
        })
        .collect();
    sparse(f.degree, &table.partitions, r)
}

/// Supersets of `mask` within the low `bits` bits, including `mask` itself.
fn supersets(mask: u64, bits: usize) -> impl Iterator<Item = u64> {
    let full = if bits == 0 { 0 } else { (1u64 << bits) - 1 };
    let free = full & !mask;
    // enumerate submasks of `free` and OR them in
    let mut sub = Some(free);
    std::iter::from_fn(move || {
        let s = sub?;
        sub = if s == 0 { None } else { Some((s - 1) & free) };
        Some(mask | s)
    })
}

/// `F_S = Σ_{T ⊇ S} M_T` in descent-set coordinates, so the M-coordinates of
/// an F-expansion are `c_T = Σ_{S ⊆ T} d_S` and the inverse carries the sign
/// `(-1)^{|S \ T|}`.
pub fn qsym_m_to_f(f: &QuasisymmetricM) -> QuasisymmetricF {
    let n = f.degree;
    let bits = n.saturating_sub(1);
    let mut acc: BTreeMap<u64, TPoly> = BTreeMap::new();
    for (alpha, c) in &f.coeffs {
        let t = alpha.descent_mask();
        let neg = -c;
        for s in supersets(t, bits) {
            let sign_negative = (s & !t).count_ones() % 2 == 1;
            *acc.entry(s).or_default() += if sign_negative { &neg } else { c };
        }
    }
    let mut out = QuasisymmetricF::zero(n);
    for (mask, c) in acc {
        out.add_unchecked(Composition::from_descent_mask(mask, n), &c);
    }
    out
}

pub fn qsym_f_to_m(f: &QuasisymmetricF) -> QuasisymmetricM {
    let n = f.degree;
    let bits = n.saturating_sub(1);
    let mut acc: BTreeMap<u64, TPoly> = BTreeMap::new();
    for (alpha, c) in &f.coeffs {
        for t in supersets(alpha.descent_mask(), bits) {
            *acc.entry(t).or_default() += c;
        }
    }
    let mut out = QuasisymmetricM::zero(n);
    for (mask, c) in acc {
        out.add_unchecked(Composition::from_descent_mask(mask, n), &c);
    }
    out
}

/// Evaluates at `x_1 = … = x_k = 1`, all other variables 0. Each `m_λ` with
/// `ℓ(λ) <= k` contributes its number of distinct placements into `k` slots,
/// `k! / ((k-ℓ)! Π mult_i!)`.
pub fn specialize_w_k(f: &SymmetricFunctionM, k: usize) -> BigInt {
    let mut total = BigInt::zero();
    for (lambda, c) in &f.coeffs {
        let len = lambda.len();
        if len > k {
            continue;
        }
        let falling: BigInt = ((k - len + 1)..=k).map(BigInt::from).product();
        let denom: BigInt = lambda
            .multiplicities()
            .into_iter()
            .map(|m| BigInt::from(factorial(m)))
            .product();
        total += c * (falling / denom);
    }
    total
}

/// The coefficient of `F_(k,1^(n-k))`.
pub fn hook_coefficient_of_f(f: &QuasisymmetricF, k: usize) -> Result<TPoly> {
    Ok(f.coeff(&Composition::hook(f.degree, k)?))
}

/// `s_λ = Σ_{T ∈ SYT(λ)} F_{iDes(r(T))}`.
pub fn schur_to_fundamental(lambda: &Partition) -> QuasisymmetricF {
    let n = lambda.weight();
    let mut out = QuasisymmetricF::zero(n);
    let one = TPoly::one();
    for t in standard_tableaux(lambda) {
        let word = t.reading_word().expect("standard tableau");
        let alpha = Composition::from_descent_set(&word.ides(), n).expect("valid descent set");
        out.add_unchecked(alpha, &one);
    }
    out
}

impl<B: Basis> fmt::Display for SymmetricFunction<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            let negative = c < &BigInt::zero();
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{}{}", B::LETTER, lambda)?;
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for SymmetricFunction<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}

impl<B: Basis> fmt::Display for Quasisymmetric<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (alpha, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}{}", B::LETTER, alpha)?;
            } else if c.coeffs().len() == 1 {
                write!(f, "{}{}{}", c, B::LETTER, alpha)?;
            } else {
                write!(f, "({}){}{}", c, B::LETTER, alpha)?;
            }
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for Quasisymmetric<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}

// ---------------------------------------------------------------------------
// Canonical JSON form: {"basis": "s", "degree": 4, "terms": [{"index": [3,1],
// "coeff": "1"}, ...]}. Quasisymmetric coefficients are lists of integer
// strings, lowest power of t first. Terms appear in canonical index order.

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTerm<C> {
    pub index: Vec<usize>,
    pub coeff: C,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFunction<C> {
    pub basis: String,
    pub degree: usize,
    pub terms: Vec<RawTerm<C>>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("expected basis {expected:?}, found {found:?}")]
    WrongBasis { expected: &'static str, found: String },
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

fn parse_int(s: &str) -> std::result::Result<BigInt, FormatError> {
    s.parse().map_err(|_| FormatError::BadInteger(s.to_owned()))
}

impl<B: Basis> From<&SymmetricFunction<B>> for RawFunction<String> {
    fn from(f: &SymmetricFunction<B>) -> Self {
        RawFunction {
            basis: B::LETTER.to_owned(),
            degree: f.degree,
            terms: f
                .coeffs
                .iter()
                .map(|(lambda, c)| RawTerm {
                    index: lambda.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl<B: Basis> TryFrom<RawFunction<String>> for SymmetricFunction<B> {
    type Error = FormatError;
    fn try_from(raw: RawFunction<String>) -> std::result::Result<Self, FormatError> {
        if raw.basis != B::LETTER {
            return Err(FormatError::WrongBasis {
                expected: B::LETTER,
                found: raw.basis,
            });
        }
        let mut f = Self::zero(raw.degree);
        for term in raw.terms {
            f.add_term(Partition::new(term.index)?, &parse_int(&term.coeff)?)?;
        }
        Ok(f)
    }
}

impl<B: Basis> From<&Quasisymmetric<B>> for RawFunction<Vec<String>> {
    fn from(f: &Quasisymmetric<B>) -> Self {
        RawFunction {
            basis: B::LETTER.to_owned(),
            degree: f.degree,
            terms: f
                .coeffs
                .iter()
                .map(|(alpha, c)| RawTerm {
                    index: alpha.parts().to_vec(),
                    coeff: c.coeffs().iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }
}

impl<B: Basis> TryFrom<RawFunction<Vec<String>>> for Quasisymmetric<B> {
    type Error = FormatError;
    fn try_from(raw: RawFunction<Vec<String>>) -> std::result::Result<Self, FormatError> {
        if raw.basis != B::LETTER {
            return Err(FormatError::WrongBasis {
                expected: B::LETTER,
                found: raw.basis,
            });
        }
        let mut f = Self::zero(raw.degree);
        for term in raw.terms {
            let coeffs = term
                .coeff
                .iter()
                .map(|s| parse_int(s))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            f.add_term(Composition::new(term.index)?, &TPoly::from_coeffs(coeffs))?;
        }
        Ok(f)
    }
}

impl<B: Basis> Serialize for SymmetricFunction<B> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawFunction::<String>::from(self).serialize(serializer)
    }
}

impl<'de, B: Basis> Deserialize<'de> for SymmetricFunction<B> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFunction::<String>::deserialize(deserializer)?;
        Self::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl<B: Basis> Serialize for Quasisymmetric<B> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawFunction::<Vec<String>>::from(self).serialize(serializer)
    }
}

impl<'de, B: Basis> Deserialize<'de> for Quasisymmetric<B> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFunction::<Vec<String>>::deserialize(deserializer)?;
        Self::try_from(raw).map_err(serde::de::Error::custom)
    }
}
