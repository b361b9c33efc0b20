//! Exhaustive enumeration of a code's additive group.
//!
//! A code over `R` (or `Z4`, `F2 + uF2`) is an abelian group spanned by the
//! words `s * g` for each generator row `g` and each additive generator `s`
//! of the alphabet. Every message is a digit vector over `Z_q` (`q` = 4 or
//! 2). Digits are walked in the modular `q`-ary Gray code: step `i` adds
//! basis word number `trailing_zeros_q(i)`, so each codeword costs one
//! bit-sliced addition and a few popcounts.
//!
//! The walk is split into shards by fixing the highest digits. Shards run
//! in parallel and are reduced in shard order, so results do not depend on
//! scheduling.

use rayon::prelude::*;

/// Bit-sliced word with a Lee-type weight.
pub trait KernelWord: Copy + Default + Eq + std::fmt::Debug + Send + Sync {
    /// Additive order of every digit.
    const RADIX: u32;
    fn add(self, other: Self) -> Self;
    fn weight(self) -> u32;
}

/// Up to 128 `Z4` symbols, one bit plane per binary digit.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct Z4Word {
    lo: u128,
    hi: u128,
}

impl Z4Word {
    pub fn set(&mut self, pos: usize, v: u8) {
        let m = 1u128 << pos;
        self.lo = (self.lo & !m) | (((v & 1) as u128) << pos);
        self.hi = (self.hi & !m) | ((((v >> 1) & 1) as u128) << pos);
    }
}

impl KernelWord for Z4Word {
    const RADIX: u32 = 4;

    #[inline(always)]
    fn add(self, o: Self) -> Self {
        Z4Word {
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi ^ (self.lo & o.lo),
        }
    }

    /// Odd symbols weigh 1, the symbol 2 weighs 2.
    #[inline(always)]
    fn weight(self) -> u32 {
        self.lo.count_ones() + 2 * (self.hi & !self.lo).count_ones()
    }
}

/// Up to 128 bits with Hamming weight.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct BinWord(u128);

impl BinWord {
    pub fn set(&mut self, pos: usize, v: u8) {
        let m = 1u128 << pos;
        self.0 = (self.0 & !m) | (((v & 1) as u128) << pos);
    }
}

impl KernelWord for BinWord {
    const RADIX: u32 = 2;

    #[inline(always)]
    fn add(self, o: Self) -> Self {
        BinWord(self.0 ^ o.0)
    }

    #[inline(always)]
    fn weight(self) -> u32 {
        self.0.count_ones()
    }
}

/// Lowest-weight nonzero word found by an exhaustive walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelMin {
    pub weight: u32,
    /// Digit vector of the first message (in walk order) reaching `weight`.
    pub digits: Vec<u8>,
}

const TARGET_SHARDS: u64 = 256;

struct Plan {
    radix: u64,
    bits: u32,
    low: usize,
    high: usize,
    shards: u64,
    per_shard: u64,
}

fn plan<W: KernelWord>(m: usize) -> Plan {
    let radix = W::RADIX as u64;
    let bits = W::RADIX.trailing_zeros();
    let mut high = 0;
    while high < m && radix.pow(high as u32) < TARGET_SHARDS {
        high += 1;
    }
    let low = m - high;
    Plan {
        radix,
        bits,
        low,
        high,
        shards: radix.pow(high as u32),
        per_shard: radix.pow(low as u32),
    }
}

fn scalar_mul<W: KernelWord>(w: W, k: u64) -> W {
    let mut acc = W::default();
    for _ in 0..k {
        acc = acc.add(w);
    }
    acc
}

fn shard_start<W: KernelWord>(basis: &[W], p: &Plan, shard: u64) -> W {
    let mut acc = W::default();
    let mut s = shard;
    for w in &basis[p.low..] {
        acc = acc.add(scalar_mul(*w, s % p.radix));
        s /= p.radix;
    }
    acc
}

/// Digits reached at step `i` of the Gray walk within `shard`.
fn digits_at(p: &Plan, shard: u64, i: u64) -> Vec<u8> {
    let mut plain = Vec::with_capacity(p.low + 1);
    let mut x = i;
    for _ in 0..p.low {
        plain.push(x % p.radix);
        x /= p.radix;
    }
    plain.push(0);
    let mut digits: Vec<u8> = (0..p.low)
        .map(|t| ((plain[t] + p.radix - plain[t + 1]) % p.radix) as u8)
        .collect();
    let mut s = shard;
    for _ in 0..p.high {
        digits.push((s % p.radix) as u8);
        s /= p.radix;
    }
    digits
}

fn shard_min<W: KernelWord>(basis: &[W], p: &Plan, shard: u64) -> Option<(u32, u64)> {
    let low = &basis[..p.low];
    let mut w = shard_start(basis, p, shard);
    let mut best = u32::MAX;
    let mut at = 0u64;
    let wt = w.weight();
    if wt != 0 {
        best = wt;
    }
    for i in 1..p.per_shard {
        let j = (i.trailing_zeros() / p.bits) as usize;
        w = w.add(low[j]);
        let wt = w.weight();
        if wt < best && wt != 0 {
            best = wt;
            at = i;
        }
    }
    (best != u32::MAX).then_some((best, at))
}

/// Minimum nonzero weight over the whole group spanned by `basis`.
/// Returns `None` if every word is zero.
pub fn exhaustive_min<W: KernelWord>(basis: &[W]) -> Option<KernelMin> {
    let p = plan::<W>(basis.len());
    let per: Vec<Option<(u32, u64)>> = (0..p.shards)
        .into_par_iter()
        .map(|s| shard_min(basis, &p, s))
        .collect();
    let (shard, (weight, at)) = per
        .into_iter()
        .enumerate()
        .filter_map(|(s, r)| r.map(|r| (s as u64, r)))
        .min_by_key(|&(s, (w, _))| (w, s))?;
    Some(KernelMin {
        weight,
        digits: digits_at(&p, shard, at),
    })
}

fn shard_histogram<W: KernelWord>(basis: &[W], p: &Plan, shard: u64, len: usize) -> Vec<u64> {
    let low = &basis[..p.low];
    let mut hist = vec![0u64; len];
    let mut w = shard_start(basis, p, shard);
    hist[w.weight() as usize] += 1;
    for i in 1..p.per_shard {
        let j = (i.trailing_zeros() / p.bits) as usize;
        w = w.add(low[j]);
        hist[w.weight() as usize] += 1;
    }
    hist
}

/// Weight distribution over all `RADIX^basis.len()` messages, with
/// multiplicity. `max_weight` bounds every word weight.
pub fn exhaustive_histogram<W: KernelWord>(basis: &[W], max_weight: usize) -> Vec<u64> {
    let p = plan::<W>(basis.len());
    let len = max_weight + 1;
    (0..p.shards)
        .into_par_iter()
        .map(|s| shard_histogram(basis, &p, s, len))
        .reduce(
            || vec![0u64; len],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// Sums `digit * basis` for a digit vector.
pub fn combine<W: KernelWord>(basis: &[W], digits: &[u8]) -> W {
    basis.iter().zip(digits).fold(W::default(), |acc, (w, &d)| {
        acc.add(scalar_mul(*w, d as u64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4(vals: &[u8]) -> Z4Word {
        let mut w = Z4Word::default();
        for (i, &v) in vals.iter().enumerate() {
            w.set(i, v);
        }
        w
    }

    #[test]
    fn z4_word_arithmetic() {
        let a = z4(&[1, 2, 3, 0]);
        let b = z4(&[3, 3, 3, 2]);
        assert_eq!(a.add(b), z4(&[0, 1, 2, 2]));
        assert_eq!(z4(&[1, 2, 3, 0]).weight(), 4);
    }

    #[test]
    fn gray_walk_visits_every_message_once() {
        // basis of distinct "unit vectors" over Z4: every message yields a
        // distinct word, so the histogram counts each message exactly once
        for m in 0..7 {
            let basis: Vec<Z4Word> = (0..m)
                .map(|i| {
                    let mut w = Z4Word::default();
                    w.set(i, 1);
                    w
                })
                .collect();
            let hist = exhaustive_histogram(&basis, 2 * m);
            // weight census of Z4^m is (1 + 2x + x^2)^m coefficients
            let mut expected = vec![1u64];
            for _ in 0..m {
                let mut next = vec![0u64; expected.len() + 2];
                for (i, &c) in expected.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] += 2 * c;
                    next[i + 2] += c;
                }
                expected = next;
            }
            assert_eq!(hist, expected, "m = {m}");
        }
    }

    #[test]
    fn min_witness_reproduces_weight() {
        let basis = vec![
            z4(&[1, 1, 2, 3]),
            z4(&[0, 1, 1, 1]),
            z4(&[2, 0, 2, 0]),
            z4(&[1, 3, 0, 0]),
            z4(&[0, 0, 1, 3]),
        ];
        let got = exhaustive_min(&basis).unwrap();
        assert_eq!(combine(&basis, &got.digits).weight(), got.weight);
        // brute force over plain digit vectors
        let mut best = u32::MAX;
        for code in 1..4u32.pow(5) {
            let d: Vec<u8> = (0..5).map(|t| ((code >> (2 * t)) & 3) as u8).collect();
            let w = combine(&basis, &d).weight();
            if w > 0 {
                best = best.min(w);
            }
        }
        assert_eq!(got.weight, best);
    }

    #[test]
    fn binary_walk() {
        let mut a = BinWord::default();
        a.set(0, 1);
        a.set(1, 1);
        let mut b = BinWord::default();
        b.set(1, 1);
        b.set(2, 1);
        let basis = vec![a, b];
        assert_eq!(exhaustive_histogram(&basis, 3), vec![1, 0, 3, 0]);
        assert_eq!(exhaustive_min(&basis).unwrap().weight, 2);
    }

    #[test]
    fn zero_group() {
        assert_eq!(exhaustive_min::<Z4Word>(&[Z4Word::default()]), None);
        assert_eq!(exhaustive_min::<Z4Word>(&[]), None);
    }
}
