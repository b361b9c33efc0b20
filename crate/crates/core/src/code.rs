//! Linear codes: generator matrices, codeword enumeration, inner products,
//! duals, self-duality and minimum Lee distance.
//!
//! Everything is generic over [`Alphabet`], so the same machinery serves
//! codes over `R`, `Z4` and `F2 + uF2`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::error::{CodeError, Result};
use crate::kernel::{self, KernelWord};
use crate::ring::RingElem;
use crate::scalars::{F2u, Z4};

/// `16^7` messages.
pub const DEFAULT_BUDGET: u128 = 1 << 28;
/// `16^8` messages.
pub const SLOW_BUDGET: u128 = 1 << 32;
/// Random messages tried when a distance can only be bounded.
pub const DEFAULT_SAMPLES: usize = 100_000;
/// Seed for the sampled messages of bounded distance searches.
pub const SAMPLE_SEED: u64 = 0x5eed_2024_0004_0001;

/// Budget of `16^e` messages.
pub fn budget_from_exponent(e: u32) -> u128 {
    16u128.saturating_pow(e)
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(CodeError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn pow_order<S: Alphabet>(e: usize) -> u128 {
    (S::ORDER as u128).saturating_pow(e as u32)
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

pub type RingMatrix = Matrix<RingElem>;
pub type Z4Matrix = Matrix<Z4>;
pub type F2uMatrix = Matrix<F2u>;

impl<S: Alphabet> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(CodeError::BadShape);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::additive_generators()[0]);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.cols)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| -x).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(CodeError::LengthMismatch(self.rows, other.rows));
        }
        let rows = self
            .row_iter()
            .zip(other.row_iter())
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == S::zero())
    }

    pub fn map<T: Alphabet>(&self, f: impl Fn(S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.row_iter().map(<[S]>::to_vec).collect()
    }
}

impl<S: Alphabet> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter()).finish()
    }
}

/// Renders a matrix in the file grammar of its alphabet.
impl<S: Alphabet> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let toks: Vec<String> = row.iter().map(|x| x.token()).collect();
            writeln!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}

/// `x . y = sum x_i y_i`.
pub fn inner<S: Alphabet>(x: &[S], y: &[S]) -> Result<S> {
    if x.len() != y.len() {
        return Err(CodeError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).fold(S::zero(), |acc, (&a, &b)| acc + a * b))
}

pub fn vec_add<S: Alphabet>(x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(&a, &b)| a + b).collect()
}

pub fn vec_scale<S: Alphabet>(c: S, x: &[S]) -> Vec<S> {
    x.iter().map(|&a| c * a).collect()
}

pub fn lee_weight<S: Alphabet>(v: &[S]) -> u32 {
    v.iter().map(|x| x.lee_weight()).sum()
}

/// Explicit deduplicated set of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordSet<S: Alphabet> {
    len: usize,
    words: BTreeSet<Vec<S>>,
}

impl<S: Alphabet> CodewordSet<S> {
    pub fn new(len: usize) -> Self {
        CodewordSet {
            len,
            words: BTreeSet::new(),
        }
    }

    pub fn from_words(len: usize, words: impl IntoIterator<Item = Vec<S>>) -> Self {
        CodewordSet {
            len,
            words: words.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, w: Vec<S>) -> bool {
        debug_assert_eq!(w.len(), self.len);
        self.words.insert(w)
    }

    pub fn length(&self) -> usize {
        self.len
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &[S]) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<S>> {
        self.words.iter()
    }

    /// Closed under addition and under multiplication by every scalar.
    pub fn is_submodule(&self) -> bool {
        if !self.contains(&vec![S::zero(); self.len]) {
            return false;
        }
        let scalars = S::elements();
        self.words.iter().all(|x| {
            scalars.iter().all(|&c| self.contains(&vec_scale(c, x)))
                && self.words.iter().all(|y| self.contains(&vec_add(x, y)))
        })
    }

    /// Every pair of words is orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        self.words.iter().all(|x| {
            self.words
                .iter()
                .all(|y| inner(x, y).expect("equal lengths") == S::zero())
        })
    }

    /// Number of words of each Lee weight `0..=MAX_LEE * len`.
    pub fn lee_distribution(&self) -> Vec<u128> {
        let mut d = vec![0u128; S::MAX_LEE as usize * self.len + 1];
        for w in &self.words {
            d[lee_weight(w) as usize] += 1;
        }
        d
    }

    pub fn min_lee_weight(&self) -> Option<u32> {
        self.words
            .iter()
            .map(|w| lee_weight(w))
            .filter(|&w| w > 0)
            .min()
    }
}

/// All vectors of `S^n` orthogonal to every row of `rows`.
pub fn orthogonal_complement<S: Alphabet>(
    rows: &[Vec<S>],
    n: usize,
    budget: u128,
) -> Result<CodewordSet<S>> {
    check_budget(pow_order::<S>(n), budget)?;
    let mut out = CodewordSet::new(n);
    for y in Odometer::<S>::new(n) {
        if rows
            .iter()
            .all(|r| inner(r, &y).expect("equal lengths") == S::zero())
        {
            out.insert(y);
        }
    }
    Ok(out)
}

/// Every vector of `S^n`, last coordinate fastest, in index order.
pub struct Odometer<S> {
    cur: Option<Vec<S>>,
}

impl<S: Alphabet> Odometer<S> {
    pub fn new(n: usize) -> Self {
        Odometer {
            cur: Some(vec![S::zero(); n]),
        }
    }
}

impl<S: Alphabet> Iterator for Odometer<S> {
    type Item = Vec<S>;

    fn next(&mut self) -> Option<Vec<S>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().expect("checked above");
        let mut t = cur.len();
        loop {
            if t == 0 {
                self.cur = None;
                break;
            }
            t -= 1;
            let next = cur[t].index() + 1;
            if next < S::ORDER {
                cur[t] = S::from_index(next);
                break;
            }
            cur[t] = S::zero();
        }
        Some(out)
    }
}

/// Classification of a code against its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDuality {
    SelfDual,
    SelfOrthogonalOnly,
    Neither,
}

impl fmt::Display for SelfDuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDuality::SelfDual => "self-dual",
            SelfDuality::SelfOrthogonalOnly => "self-orthogonal",
            SelfDuality::Neither => "neither",
        })
    }
}

/// Minimum Lee distance, exact or an upper bound, with a witness codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDistance<S> {
    pub weight: u32,
    pub exact: bool,
    pub message: Vec<S>,
    pub witness: Vec<S>,
}

impl<S> MinDistance<S> {
    pub fn flag(&self) -> &'static str {
        if self.exact {
            "exact"
        } else {
            "upper-bound"
        }
    }
}

/// Linear code given by a generator matrix.
pub struct LinearCode<S: Alphabet = RingElem> {
    gen: Matrix<S>,
    standard_form: bool,
    cardinality: OnceLock<u128>,
}

pub type Z4Code = LinearCode<Z4>;
pub type F2uCode = LinearCode<F2u>;

impl<S: Alphabet> Clone for LinearCode<S> {
    fn clone(&self) -> Self {
        LinearCode {
            gen: self.gen.clone(),
            standard_form: self.standard_form,
            cardinality: self.cardinality.clone(),
        }
    }
}

impl<S: Alphabet> fmt::Debug for LinearCode<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearCode")
            .field("alphabet", &S::NAME)
            .field("gen", &self.gen)
            .field("standard_form", &self.standard_form)
            .finish()
    }
}

impl<S: Alphabet> LinearCode<S> {
    pub fn new(gen: Matrix<S>) -> Self {
        let k = gen.rows();
        let one = S::additive_generators()[0];
        let standard_form = k <= gen.cols()
            && (0..k)
                .all(|i| (0..k).all(|j| gen.get(i, j) == if i == j { one } else { S::zero() }));
        let cardinality = OnceLock::new();
        if standard_form {
            let _ = cardinality.set(pow_order::<S>(k));
        } else if gen.is_zero() {
            let _ = cardinality.set(1);
        }
        LinearCode {
            gen,
            standard_form,
            cardinality,
        }
    }

    /// Code generated by `[I_k | a]`.
    pub fn from_standard(a: &Matrix<S>) -> Self {
        let g = Matrix::identity(a.rows())
            .hstack(a)
            .expect("identity has matching rows");
        Self::new(g)
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Matrix::zeros(1, n))
    }

    /// Code spanned by `rows`; an empty list gives the zero code.
    pub fn spanned_by(rows: Vec<Vec<S>>, n: usize) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zero(n));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(CodeError::BadShape);
        }
        Ok(Self::new(Matrix::from_rows(rows)?))
    }

    pub fn generator(&self) -> &Matrix<S> {
        &self.gen
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension_rows(&self) -> usize {
        self.gen.rows()
    }

    pub fn is_standard_form(&self) -> bool {
        self.standard_form
    }

    /// The `A` of `[I_k | A]` when in standard form.
    pub fn standard_part(&self) -> Option<Matrix<S>> {
        if !self.standard_form {
            return None;
        }
        let k = self.gen.rows();
        let rows = self.gen.row_iter().map(|r| r[k..].to_vec()).collect();
        Matrix::from_rows(rows).ok()
    }

    pub fn is_zero_code(&self) -> bool {
        self.gen.is_zero()
    }

    /// Messages needed for a full enumeration: `|S|^rows`.
    pub fn message_count(&self) -> u128 {
        pow_order::<S>(self.gen.rows())
    }

    /// `m * G`.
    pub fn encode(&self, m: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.length()];
        for (&c, row) in m.iter().zip(self.gen.row_iter()) {
            if c != S::zero() {
                for (o, &g) in out.iter_mut().zip(row) {
                    *o = *o + c * g;
                }
            }
        }
        out
    }

    /// Records a cardinality established elsewhere (e.g. through an
    /// isometry). Ignored when one is already cached.
    pub(crate) fn with_cardinality(self, c: u128) -> Self {
        let _ = self.cardinality.set(c);
        self
    }

    /// The cached exact cardinality, if already established.
    pub fn known_cardinality(&self) -> Option<u128> {
        self.cardinality.get().copied()
    }

    /// Exact `|C|`. Standard-form and zero codes are free; otherwise every
    /// message is enumerated within `budget`.
    pub fn cardinality(&self, budget: u128) -> Result<u128> {
        if let Some(c) = self.known_cardinality() {
            return Ok(c);
        }
        check_budget(self.message_count(), budget)?;
        let c = match self.kernel_basis() {
            Some(basis) => {
                // every codeword is hit by the same number of messages
                let zero_hits = kernel::exhaustive_histogram(&basis, self.max_weight())[0];
                self.message_count() / zero_hits as u128
            }
            None => self.dedup_codewords()?.size() as u128,
        };
        let _ = self.cardinality.set(c);
        Ok(c)
    }

    fn max_weight(&self) -> usize {
        S::MAX_LEE as usize * self.length()
    }

    fn dedup_codewords(&self) -> Result<CodewordSet<S>> {
        let mut set = CodewordSet::new(self.length());
        for m in Odometer::<S>::new(self.gen.rows()) {
            set.insert(self.encode(&m));
        }
        Ok(set)
    }

    /// Every codeword exactly once. Standard-form codes are streamed in
    /// message odometer order; other codes are deduplicated first.
    pub fn codewords(&self, budget: u128) -> Result<Box<dyn Iterator<Item = Vec<S>> + '_>> {
        check_budget(self.message_count(), budget)?;
        if self.standard_form {
            return Ok(Box::new(Codewords::new(self)));
        }
        let set = self.dedup_codewords()?;
        let _ = self.cardinality.set(set.size() as u128);
        Ok(Box::new(set.words.into_iter()))
    }

    pub fn codeword_set(&self, budget: u128) -> Result<CodewordSet<S>> {
        Ok(CodewordSet::from_words(
            self.length(),
            self.codewords(budget)?,
        ))
    }

    /// Kernel basis `s * g` over rows `g` and additive generators `s`, or
    /// `None` when the code is too long for a kernel word.
    pub fn kernel_basis(&self) -> Option<Vec<S::Word>> {
        let mut out = Vec::new();
        for row in self.gen.row_iter() {
            for &s in S::additive_generators() {
                out.push(S::embed(&vec_scale(s, row))?);
            }
        }
        Some(out)
    }

    fn message_from_digits(&self, digits: &[u8]) -> Vec<S> {
        let g = S::additive_generators().len();
        digits.chunks(g).map(S::from_digits).collect()
    }

    /// Number of distinct codewords of each Lee weight `0..=MAX_LEE * n`.
    pub fn lee_distribution(&self, budget: u128) -> Result<Vec<u128>> {
        check_budget(self.message_count(), budget)?;
        if let Some(basis) = self.kernel_basis() {
            let hist = kernel::exhaustive_histogram(&basis, self.max_weight());
            let mult = hist[0] as u128;
            let _ = self.cardinality.set(self.message_count() / mult);
            return Ok(hist.into_iter().map(|c| c as u128 / mult).collect());
        }
        Ok(self.codeword_set(budget)?.lee_distribution())
    }

    /// Minimum Lee distance. Exact when all `|S|^k` messages fit `budget`;
    /// otherwise an upper bound from all messages of Hamming weight up to
    /// [`low_weight_levels`] plus `samples` seeded random messages.
    pub fn min_lee_distance(&self, budget: u128, samples: usize) -> Result<MinDistance<S>> {
        if self.is_zero_code() {
            return Err(CodeError::ZeroCode);
        }
        if self.message_count() <= budget {
            if let Some(basis) = self.kernel_basis() {
                let found = kernel::exhaustive_min(&basis).ok_or(CodeError::ZeroCode)?;
                let message = self.message_from_digits(&found.digits);
                let witness = self.encode(&message);
                debug_assert_eq!(lee_weight(&witness), found.weight);
                return Ok(MinDistance {
                    weight: found.weight,
                    exact: true,
                    message,
                    witness,
                });
            }
            return self.min_by_enumeration();
        }
        self.min_upper_bound(budget, samples)
    }

    fn min_by_enumeration(&self) -> Result<MinDistance<S>> {
        let mut best: Option<(u32, Vec<S>)> = None;
        for m in Odometer::<S>::new(self.gen.rows()) {
            let w = lee_weight(&self.encode(&m));
            if w > 0 && best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, m));
            }
        }
        let (weight, message) = best.ok_or(CodeError::ZeroCode)?;
        Ok(MinDistance {
            weight,
            exact: true,
            witness: self.encode(&message),
            message,
        })
    }

    /// Upper bound from low-weight and sampled messages.
    pub fn min_upper_bound(&self, budget: u128, samples: usize) -> Result<MinDistance<S>> {
        if self.is_zero_code() {
            return Err(CodeError::ZeroCode);
        }
        let k = self.gen.rows();
        let mut best: Option<(u32, Vec<S>)> = None;
        let mut consider = |m: &[S], w: u32| {
            if w > 0 && best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, m.to_vec()));
            }
        };
        let nonzero: Vec<S> = S::elements().into_iter().skip(1).collect();
        let table = self.embedded_multiples();
        let weight_of = |m: &[S]| -> u32 {
            match &table {
                Some(t) => m
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != S::zero())
                    .fold(S::Word::default(), |acc, (r, c)| acc.add(t[r][c.index()]))
                    .weight(),
                None => lee_weight(&self.encode(m)),
            }
        };
        let levels = low_weight_levels(k, S::ORDER as u128, budget);
        let mut m = vec![S::zero(); k];
        match &table {
            Some(t) => {
                let mut visit = |m: &[S], w: &S::Word| consider(m, w.weight());
                low_weight_words(t, &mut m, S::Word::default(), 0, levels, &mut visit);
            }
            None => {
                let mut visit = |m: &[S]| consider(m, lee_weight(&self.encode(m)));
                low_weight_messages(&mut m, 0, levels, &nonzero, &mut visit);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..samples {
            for x in m.iter_mut() {
                *x = S::from_index(rng.gen_range(0..S::ORDER));
            }
            consider(&m, weight_of(&m));
        }
        let (weight, message) = best.ok_or(CodeError::ZeroCode)?;
        Ok(MinDistance {
            weight,
            exact: false,
            witness: self.encode(&message),
            message,
        })
    }

    /// `table[r][s] = embed(s * g_r)`.
    fn embedded_multiples(&self) -> Option<Vec<Vec<S::Word>>> {
        self.gen
            .row_iter()
            .map(|row| {
                S::elements()
                    .into_iter()
                    .map(|s| S::embed(&vec_scale(s, row)))
                    .collect()
            })
            .collect()
    }

    /// `C` is self-orthogonal iff its generator rows are pairwise
    /// orthogonal; self-dual additionally needs `|C|^2 = |S|^n`.
    pub fn self_duality(&self, budget: u128) -> Result<SelfDuality> {
        let rows = self.gen.to_rows();
        let orth = rows.iter().all(|x| {
            rows.iter()
                .all(|y| inner(x, y).expect("equal lengths") == S::zero())
        });
        if !orth {
            return Ok(SelfDuality::Neither);
        }
        let c = self.cardinality(budget)?;
        if c.checked_mul(c) == Some(pow_order::<S>(self.length())) {
            Ok(SelfDuality::SelfDual)
        } else {
            Ok(SelfDuality::SelfOrthogonalOnly)
        }
    }

    /// Brute-force dual over all of `S^n`.
    pub fn dual_bruteforce(&self, budget: u128) -> Result<CodewordSet<S>> {
        orthogonal_complement(&self.gen.to_rows(), self.length(), budget)
    }

    /// Whether `v` lies in the code (brute force over messages).
    pub fn contains(&self, v: &[S], budget: u128) -> Result<bool> {
        if v.len() != self.length() {
            return Err(CodeError::LengthMismatch(v.len(), self.length()));
        }
        if let Some(a) = self.standard_part() {
            let k = self.gen.rows();
            let tail = LinearCode::from_standard(&a).encode(&v[..k]);
            return Ok(tail == v);
        }
        check_budget(self.message_count(), budget)?;
        Ok(Odometer::<S>::new(self.gen.rows()).any(|m| self.encode(&m) == v))
    }

    /// Direct sum `C (+) D`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.length(), other.length());
        let mut rows = Vec::new();
        for r in self.gen.row_iter() {
            let mut v = r.to_vec();
            v.extend(std::iter::repeat_n(S::zero(), n2));
            rows.push(v);
        }
        for r in other.gen.row_iter() {
            let mut v = vec![S::zero(); n1];
            v.extend_from_slice(r);
            rows.push(v);
        }
        LinearCode::new(Matrix::from_rows(rows).expect("nonempty rows"))
    }
}

/// Dual of `<[I_k | A]>`, generated by `[-A^T | I_(n-k)]`.
pub fn dual_standard<S: Alphabet>(a: &Matrix<S>) -> Result<LinearCode<S>> {
    let g = a.transpose().neg().hstack(&Matrix::identity(a.cols()))?;
    let code = LinearCode::new(g);
    // the identity block on the right makes every message distinct
    let _ = code.cardinality.set(pow_order::<S>(a.cols()));
    Ok(code)
}

/// Streams the codewords of a standard-form code with incremental updates.
struct Codewords<'a, S: Alphabet> {
    code: &'a LinearCode<S>,
    msg: Vec<S>,
    word: Vec<S>,
    done: bool,
}

impl<'a, S: Alphabet> Codewords<'a, S> {
    fn new(code: &'a LinearCode<S>) -> Self {
        Codewords {
            code,
            msg: vec![S::zero(); code.gen.rows()],
            word: vec![S::zero(); code.length()],
            done: false,
        }
    }
}

impl<S: Alphabet> Iterator for Codewords<'_, S> {
    type Item = Vec<S>;

    fn next(&mut self) -> Option<Vec<S>> {
        if self.done {
            return None;
        }
        let out = self.word.clone();
        let mut t = self.msg.len();
        loop {
            if t == 0 {
                self.done = true;
                break;
            }
            t -= 1;
            let old = self.msg[t];
            let idx = old.index() + 1;
            let new = if idx < S::ORDER {
                S::from_index(idx)
            } else {
                S::zero()
            };
            self.msg[t] = new;
            let delta = new - old;
            for (w, &g) in self.word.iter_mut().zip(self.code.gen.row(t)) {
                *w = *w + delta * g;
            }
            if idx < S::ORDER {
                break;
            }
        }
        Some(out)
    }
}

/// Largest `w` with every message of Hamming weight at most `w` within `budget`.
pub fn low_weight_levels(k: usize, order: u128, budget: u128) -> usize {
    let mut total: u128 = 1;
    let mut level_count: u128 = 1;
    for w in 1..=k {
        level_count = level_count * (k - w + 1) as u128 / w as u128 * (order - 1);
        total = total.saturating_add(level_count);
        if total > budget {
            return (w - 1).max(1);
        }
    }
    k
}

fn low_weight_words<S: Alphabet>(
    table: &[Vec<S::Word>],
    m: &mut [S],
    acc: S::Word,
    from: usize,
    left: usize,
    visit: &mut dyn FnMut(&[S], &S::Word),
) {
    if left == 0 {
        return;
    }
    for i in from..m.len() {
        for s in 1..S::ORDER {
            m[i] = S::from_index(s);
            let w = acc.add(table[i][s]);
            visit(m, &w);
            low_weight_words(table, m, w, i + 1, left - 1, visit);
        }
        m[i] = S::zero();
    }
}

fn low_weight_messages<S: Alphabet>(
    m: &mut [S],
    from: usize,
    left: usize,
    nonzero: &[S],
    visit: &mut dyn FnMut(&[S]),
) {
    if left == 0 {
        return;
    }
    for i in from..m.len() {
        for &a in nonzero {
            m[i] = a;
            visit(m);
            low_weight_messages(m, i + 1, left - 1, nonzero, visit);
        }
        m[i] = S::zero();
    }
}
