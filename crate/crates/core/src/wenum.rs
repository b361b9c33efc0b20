//! Complete, symmetrized and Lee weight enumerators and their MacWilliams
//! transforms.
//!
//! The complete weight enumerator (16 variables, canonical element order)
//! is only ever evaluated, never expanded symbolically; the symmetrized
//! (5 variables) and Lee (2 variables) transforms are expanded exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::code::{lee_weight, LinearCode};
use crate::error::{CodeError, Result};
use crate::ring::{character_matrix, RingElem};
use crate::scalars::{GaussianInt, GaussianRational};

/// Largest length accepted by the symbolic SWE transform.
pub const MAX_SWE_EXPANSION_LEN: usize = 24;

/// Symmetrized-variable slot for each canonical element index:
/// `X=0` (weight 0), `Y=1` (weight 4), `Z=2` (weight 3), `W=3` (weight 1),
/// `S=4` (weight 2).
pub const SWE_CLASS: [usize; 16] = [0, 4, 1, 4, 3, 2, 2, 3, 4, 4, 4, 4, 3, 3, 2, 2];

/// Lee weight carried by each symmetrized variable `(X, Y, Z, W, S)`.
pub const SWE_WEIGHTS: [usize; 5] = [0, 4, 3, 1, 2];

/// Linear forms substituted for `(X, Y, Z, W, S)` by the symmetrized
/// MacWilliams transform; each row lists coefficients of `(X, Y, Z, W, S)`.
pub const SWE_FORMS: [[i64; 5]; 5] = [
    [1, 1, 4, 4, 6],
    [1, 1, -4, -4, 6],
    [1, -1, 2, -2, 0],
    [1, -1, -2, 2, 0],
    [1, 1, 0, 0, -2],
];

/// Complete weight enumerator: exponent vector over the 16 canonical
/// elements mapped to the number of codewords with that composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cwe {
    len: usize,
    terms: BTreeMap<[u16; 16], u128>,
}

impl Cwe {
    pub fn from_words<'a>(len: usize, words: impl IntoIterator<Item = &'a [RingElem]>) -> Self {
        let mut terms = BTreeMap::new();
        for w in words {
            *terms.entry(composition(w)).or_insert(0) += 1;
        }
        Cwe { len, terms }
    }

    pub fn length(&self) -> usize {
        self.len
    }

    pub fn terms(&self) -> &BTreeMap<[u16; 16], u128> {
        &self.terms
    }

    /// Value at all-ones, i.e. the number of codewords.
    pub fn total(&self) -> u128 {
        self.terms.values().sum()
    }

    pub fn eval(&self, point: &[GaussianRational; 16]) -> GaussianRational {
        let zero = GaussianRational::from_int(GaussianInt::ZERO);
        self.terms.iter().fold(zero, |acc, (exps, &c)| {
            let mono = exps.iter().zip(point).filter(|(&e, _)| e > 0).fold(
                GaussianRational::from_int(GaussianInt::ONE),
                |m, (&e, p)| m * p.pow(e as u32),
            );
            acc + mono.mul_int(c as i128)
        })
    }
}

fn composition(w: &[RingElem]) -> [u16; 16] {
    let mut e = [0u16; 16];
    for x in w {
        e[x.index()] += 1;
    }
    e
}

/// Complete weight enumerator of a code.
pub fn cwe(code: &LinearCode, budget: u128) -> Result<Cwe> {
    let mut terms = BTreeMap::new();
    for w in code.codewords(budget)? {
        *terms.entry(composition(&w)).or_insert(0u128) += 1;
    }
    Ok(Cwe {
        len: code.length(),
        terms,
    })
}

/// Symmetrized weight enumerator over `(X, Y, Z, W, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Swe {
    len: usize,
    terms: BTreeMap<[u32; 5], BigInt>,
}

impl Swe {
    pub fn from_words<'a>(len: usize, words: impl IntoIterator<Item = &'a [RingElem]>) -> Self {
        let mut terms: BTreeMap<[u32; 5], BigInt> = BTreeMap::new();
        for w in words {
            let mut e = [0u32; 5];
            for x in w {
                e[SWE_CLASS[x.index()]] += 1;
            }
            *terms.entry(e).or_default() += 1;
        }
        Swe { len, terms }
    }

    pub fn length(&self) -> usize {
        self.len
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 5], BigInt> {
        &self.terms
    }

    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, p: [i64; 5]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(p)
                    .fold(c.clone(), |acc, (&k, v)| acc * BigInt::from(v).pow(k))
            })
            .sum()
    }
}

/// Merges the 16 CWE variables into the five symmetrized ones.
pub fn cwe_to_swe(e: &Cwe) -> Swe {
    let mut terms: BTreeMap<[u32; 5], BigInt> = BTreeMap::new();
    for (exps, &c) in &e.terms {
        let mut s = [0u32; 5];
        for (i, &k) in exps.iter().enumerate() {
            s[SWE_CLASS[i]] += k as u32;
        }
        *terms.entry(s).or_default() += c;
    }
    Swe { len: e.len, terms }
}

/// Homogeneous Lee enumerator `sum A_w W^(D-w) X^w`, stored densely by `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeePoly {
    coeffs: Vec<BigInt>,
}

impl LeePoly {
    /// `coeffs[w]` is the coefficient of `W^(D-w) X^w`, `D = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        LeePoly { coeffs }
    }

    pub fn from_distribution(dist: &[u128]) -> Self {
        LeePoly {
            coeffs: dist.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Total degree `D`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Smallest positive weight with a nonzero coefficient.
    pub fn min_weight(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(w, _)| w)
    }
}

/// Lee enumerator of a code over any alphabet (degree `MAX_LEE * n`).
pub fn lee<S: Alphabet>(code: &LinearCode<S>, budget: u128) -> Result<LeePoly> {
    Ok(LeePoly::from_distribution(&code.lee_distribution(budget)?))
}

/// Lee enumerator of an explicit word list over any alphabet.
pub fn lee_of_words<'a, S: Alphabet>(
    len: usize,
    words: impl IntoIterator<Item = &'a Vec<S>>,
) -> LeePoly {
    let mut d = vec![0u128; S::MAX_LEE as usize * len + 1];
    for w in words {
        d[lee_weight(w) as usize] += 1;
    }
    LeePoly::from_distribution(&d)
}

/// Substitutes `W^4, X^4, W X^3, W^3 X, W^2 X^2` for `X, Y, Z, W, S`.
pub fn swe_to_lee(e: &Swe) -> LeePoly {
    let mut coeffs = vec![BigInt::zero(); 4 * e.len + 1];
    for (exps, c) in &e.terms {
        let w: usize = exps
            .iter()
            .zip(SWE_WEIGHTS)
            .map(|(&k, wt)| k as usize * wt)
            .sum();
        coeffs[w] += c;
    }
    LeePoly { coeffs }
}

fn exact_div(x: &BigInt, size: &BigInt) -> Result<BigInt> {
    let (q, r) = x.div_rem(size);
    if !r.is_zero() {
        return Err(CodeError::NonExactDivision {
            divisor: size.to_string(),
        });
    }
    Ok(q)
}

fn check_size(size: u128) -> Result<BigInt> {
    if size == 0 {
        return Err(CodeError::DivisionByZero);
    }
    Ok(BigInt::from(size))
}

/// `(1/|C|) Lee_C(W + X, W - X)`.
pub fn macwilliams_lee(p: &LeePoly, size: u128) -> Result<LeePoly> {
    let size = check_size(size)?;
    let d = p.degree();
    let binom = binomial_rows(d);
    let mut out = vec![BigInt::zero(); d + 1];
    for (w, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // (W+X)^(d-w) (W-X)^w: X^i from the first, X^j from the second
        for i in 0..=d - w {
            let left = a * &binom[d - w][i];
            for j in 0..=w {
                let term = &left * &binom[w][j];
                if j % 2 == 1 {
                    out[i + j] -= term;
                } else {
                    out[i + j] += term;
                }
            }
        }
    }
    let coeffs = out
        .iter()
        .map(|c| exact_div(c, &size))
        .collect::<Result<Vec<_>>>()?;
    Ok(LeePoly { coeffs })
}

fn binomial_rows(d: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=d {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

type Poly5 = BTreeMap<[u32; 5], BigInt>;

fn poly_mul(a: &Poly5, b: &Poly5) -> Poly5 {
    let mut out = Poly5::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = *ea;
            for (x, y) in e.iter_mut().zip(eb) {
                *x += y;
            }
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn form_poly(form: &[i64; 5]) -> Poly5 {
    let mut p = Poly5::new();
    for (v, &c) in form.iter().enumerate() {
        if c != 0 {
            let mut e = [0u32; 5];
            e[v] = 1;
            p.insert(e, BigInt::from(c));
        }
    }
    p
}

/// `(1/|C|) swe_C(L_X, L_Y, L_Z, L_W, L_S)` with the forms of
/// [`SWE_FORMS`], fully expanded.
pub fn macwilliams_swe(e: &Swe, size: u128) -> Result<Swe> {
    if e.len > MAX_SWE_EXPANSION_LEN {
        return Err(CodeError::ExpansionTooLarge(e.len));
    }
    let size = check_size(size)?;
    let mut unit = Poly5::new();
    unit.insert([0; 5], BigInt::one());
    // powers[v][k] = L_v^k
    let powers: Vec<Vec<Poly5>> = SWE_FORMS
        .iter()
        .map(|f| {
            let base = form_poly(f);
            let mut ps = vec![unit.clone()];
            for k in 1..=e.len {
                let next = poly_mul(&ps[k - 1], &base);
                ps.push(next);
            }
            ps
        })
        .collect();
    let mut acc = Poly5::new();
    for (exps, c) in &e.terms {
        let mut term = Poly5::new();
        term.insert([0; 5], c.clone());
        for (v, &k) in exps.iter().enumerate() {
            if k > 0 {
                term = poly_mul(&term, &powers[v][k as usize]);
            }
        }
        for (m, c) in term {
            *acc.entry(m).or_default() += c;
        }
    }
    let mut terms = BTreeMap::new();
    for (m, c) in acc {
        if !c.is_zero() {
            terms.insert(m, exact_div(&c, &size)?);
        }
    }
    Ok(Swe { len: e.len, terms })
}

/// `T * point` with `T(i, j) = chi(g_i g_j)`.
pub fn character_transform(point: &[GaussianRational; 16]) -> [GaussianRational; 16] {
    let t = character_matrix();
    std::array::from_fn(|i| {
        (0..16).fold(GaussianRational::from_int(GaussianInt::ZERO), |acc, j| {
            acc + point[j] * GaussianRational::from_int(t[i][j])
        })
    })
}

/// `(1/|C|) cwe_C(T * point)`: the value of the dual's complete weight
/// enumerator at `point`. With an integral point the result must be
/// integral, so a fractional result means `size` is wrong.
pub fn macwilliams_cwe_eval(
    e: &Cwe,
    size: u128,
    point: &[GaussianRational; 16],
) -> Result<GaussianRational> {
    if size == 0 {
        return Err(CodeError::DivisionByZero);
    }
    let v = e.eval(&character_transform(point)).div_int(size as i128)?;
    if point.iter().all(GaussianRational::is_integral) && !v.is_integral() {
        return Err(CodeError::NonExactDivision {
            divisor: size.to_string(),
        });
    }
    Ok(v)
}

/// `lee(C) == (1/|C|) lee(C)(W + X, W - X)`: the code and its dual share a
/// Lee weight enumerator.
pub fn is_formally_self_dual<S: Alphabet>(code: &LinearCode<S>, budget: u128) -> Result<bool> {
    let p = lee(code, budget)?;
    let size = code.cardinality(budget)?;
    Ok(macwilliams_lee(&p, size)? == p)
}

/// Seed for the evaluation points of the complete enumerator check.
pub const EVAL_SEED: u64 = 0x5eed_2024_0003_0005;
/// Number of evaluation points.
pub const EVAL_POINTS: usize = 20;

/// Seeded Gaussian-integer points with real and imaginary parts in
/// `-2..=2`.
pub fn eval_points(count: usize, seed: u64) -> Vec<[GaussianRational; 16]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            std::array::from_fn(|_| {
                let re = rng.gen_range(-2..=2);
                let im = rng.gen_range(-2..=2);
                GaussianRational::from_int(GaussianInt::new(re, im))
            })
        })
        .collect()
}

/// The three transforms of a code's enumerators compared with the
/// enumerators of its dual, computed directly.
#[derive(Debug, Clone)]
pub struct MacWilliamsCheck {
    pub size: u128,
    pub dual_size: u128,
    /// `|C| |C^perp| = 16^n`.
    pub size_product: bool,
    pub lee_transform: LeePoly,
    pub lee_equal: bool,
    /// `None` when the length exceeds [`MAX_SWE_EXPANSION_LEN`].
    pub swe_equal: Option<bool>,
    pub cwe_points: usize,
    pub cwe_agree: usize,
}

impl MacWilliamsCheck {
    pub fn pass(&self) -> bool {
        self.size_product
            && self.lee_equal
            && self.swe_equal.unwrap_or(true)
            && self.cwe_agree == self.cwe_points
    }
}

/// Enumerates `C` and its dual (from `[-A^T | I]` in standard form,
/// otherwise by brute force over `R^n`) and checks all three transforms.
pub fn macwilliams_check(code: &LinearCode, budget: u128) -> Result<MacWilliamsCheck> {
    let n = code.length();
    let words = code.codeword_set(budget)?;
    let dual = match code.standard_part() {
        Some(a) => crate::code::dual_standard(&a)?.codeword_set(budget)?,
        None => code.dual_bruteforce(budget)?,
    };
    let size = words.size() as u128;
    let dual_size = dual.size() as u128;
    let size_product = 16u128.checked_pow(n as u32) == size.checked_mul(dual_size);

    let lee_c = lee_of_words(n, words.iter());
    let lee_d = lee_of_words(n, dual.iter());
    let lee_transform = macwilliams_lee(&lee_c, size)?;
    let lee_equal = lee_transform == lee_d;

    let swe_c = Swe::from_words(n, words.iter().map(Vec::as_slice));
    let swe_d = Swe::from_words(n, dual.iter().map(Vec::as_slice));
    let swe_equal = match macwilliams_swe(&swe_c, size) {
        Ok(t) => Some(t == swe_d),
        Err(CodeError::ExpansionTooLarge(_)) => None,
        Err(e) => return Err(e),
    };

    let cwe_c = Cwe::from_words(n, words.iter().map(Vec::as_slice));
    let cwe_d = Cwe::from_words(n, dual.iter().map(Vec::as_slice));
    let points = eval_points(EVAL_POINTS, EVAL_SEED);
    let mut cwe_agree = 0;
    for p in &points {
        if macwilliams_cwe_eval(&cwe_c, size, p)? == cwe_d.eval(p) {
            cwe_agree += 1;
        }
    }
    Ok(MacWilliamsCheck {
        size,
        dual_size,
        size_product,
        lee_transform,
        lee_equal,
        swe_equal,
        cwe_points: points.len(),
        cwe_agree,
    })
}

/// Line-per-monomial rendering `e1,...,ek : c`, exponents ascending.
pub struct EnumeratorLines<'a, E>(pub &'a E);

impl fmt::Display for EnumeratorLines<'_, Cwe> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.0.terms {
            let exps: Vec<String> = e.iter().map(u16::to_string).collect();
            writeln!(f, "{} : {}", exps.join(","), c)?;
        }
        Ok(())
    }
}

impl fmt::Display for EnumeratorLines<'_, Swe> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.0.terms {
            let exps: Vec<String> = e.iter().map(u32::to_string).collect();
            writeln!(f, "{} : {}", exps.join(","), c)?;
        }
        Ok(())
    }
}

/// Lee monomials as `eW,eX : c`, ascending in the `W` exponent.
impl fmt::Display for EnumeratorLines<'_, LeePoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.0.degree();
        for (w, c) in self.0.coeffs.iter().enumerate().rev() {
            if !c.is_zero() {
                writeln!(f, "{},{} : {}", d - w, w, c)?;
            }
        }
        Ok(())
    }
}

/// Compact algebraic rendering, e.g. `W^4 + 2W^2X^2 + X^4`.
impl fmt::Display for LeePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mono = match (d - w, w) {
                (0, 0) => String::new(),
                (p, 0) => var("W", p),
                (0, q) => var("X", q),
                (p, q) => format!("{}{}", var("W", p), var("X", q)),
            };
            if a.is_one() && !mono.is_empty() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}{mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn var(name: &str, p: usize) -> String {
    if p == 1 {
        name.to_string()
    } else {
        format!("{name}^{p}")
    }
}
