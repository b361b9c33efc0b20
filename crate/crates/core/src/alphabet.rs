//! Common interface for the three code alphabets `R`, `Z4` and `F2 + uF2`.
//!
//! Every alphabet knows its Lee weight and how to embed a vector into a
//! bit-sliced word for the enumeration kernel. The embedding is the Gray
//! image: `R -> Z4^2` via `a + ub -> (b, a + b)`, the identity on `Z4`, and
//! `F2 + uF2 -> F2^2` via the same formula. Each embedding is additive and
//! carries Lee weight to the word weight.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::kernel::{BinWord, KernelWord, Z4Word};
use crate::ring::RingElem;
use crate::scalars::{F2u, Z4};

pub trait Alphabet:
    Copy
    + Eq
    + Hash
    + Ord
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
{
    /// Number of elements.
    const ORDER: usize;
    /// Largest Lee weight of a single symbol.
    const MAX_LEE: u32;
    /// Short name used in reports.
    const NAME: &'static str;
    /// Longest vector the kernel word can hold.
    const MAX_KERNEL_LEN: usize;

    type Word: KernelWord;

    fn zero() -> Self {
        Self::default()
    }

    fn from_index(i: usize) -> Self;
    fn index(self) -> usize;
    fn lee_weight(self) -> u32;

    /// Elements generating the additive group of the alphabet, each of
    /// additive order `Self::Word::RADIX`.
    fn additive_generators() -> &'static [Self];

    /// Combines kernel digits (one per additive generator) into an element.
    fn from_digits(digits: &[u8]) -> Self {
        let mut acc = Self::zero();
        for (&d, &g) in digits.iter().zip(Self::additive_generators()) {
            for _ in 0..d {
                acc = acc + g;
            }
        }
        acc
    }

    /// Bit-sliced Gray image; `None` when `v` is longer than
    /// `MAX_KERNEL_LEN`.
    fn embed(v: &[Self]) -> Option<Self::Word>;

    fn parse_token(s: &str) -> Result<Self, String>;
    fn token(self) -> String;

    fn elements() -> Vec<Self> {
        (0..Self::ORDER).map(Self::from_index).collect()
    }
}

impl Alphabet for RingElem {
    const ORDER: usize = 16;
    const MAX_LEE: u32 = 4;
    const NAME: &'static str = "Z4+uZ4";
    const MAX_KERNEL_LEN: usize = 64;
    type Word = Z4Word;

    fn from_index(i: usize) -> Self {
        RingElem::from_index(i)
    }

    fn index(self) -> usize {
        RingElem::index(self)
    }

    fn lee_weight(self) -> u32 {
        RingElem::lee_weight(self)
    }

    fn additive_generators() -> &'static [Self] {
        &[RingElem::ONE, RingElem::U]
    }

    fn embed(v: &[Self]) -> Option<Z4Word> {
        if v.len() > Self::MAX_KERNEL_LEN {
            return None;
        }
        let mut w = Z4Word::default();
        for (j, x) in v.iter().enumerate() {
            let b = x.b();
            w.set(j, b.value());
            w.set(64 + j, (x.a() + b).value());
        }
        Some(w)
    }

    fn parse_token(s: &str) -> Result<Self, String> {
        s.parse()
    }

    fn token(self) -> String {
        RingElem::token(self)
    }
}

impl Alphabet for Z4 {
    const ORDER: usize = 4;
    const MAX_LEE: u32 = 2;
    const NAME: &'static str = "Z4";
    const MAX_KERNEL_LEN: usize = 128;
    type Word = Z4Word;

    fn from_index(i: usize) -> Self {
        Z4::new(i as u8)
    }

    fn index(self) -> usize {
        self.value() as usize
    }

    fn lee_weight(self) -> u32 {
        Z4::lee_weight(self)
    }

    fn additive_generators() -> &'static [Self] {
        &[Z4::ONE]
    }

    fn embed(v: &[Self]) -> Option<Z4Word> {
        if v.len() > Self::MAX_KERNEL_LEN {
            return None;
        }
        let mut w = Z4Word::default();
        for (j, x) in v.iter().enumerate() {
            w.set(j, x.value());
        }
        Some(w)
    }

    fn parse_token(s: &str) -> Result<Self, String> {
        match s {
            "0" | "1" | "2" | "3" => Ok(Z4::new(s.as_bytes()[0] - b'0')),
            _ => Err(format!("bad Z4 token {s:?} (expected 0-3)")),
        }
    }

    fn token(self) -> String {
        self.to_string()
    }
}

impl Alphabet for F2u {
    const ORDER: usize = 4;
    const MAX_LEE: u32 = 2;
    const NAME: &'static str = "F2+uF2";
    const MAX_KERNEL_LEN: usize = 64;
    type Word = BinWord;

    fn from_index(i: usize) -> Self {
        F2u::from_code(i as u8)
    }

    fn index(self) -> usize {
        self.code() as usize
    }

    fn lee_weight(self) -> u32 {
        F2u::lee_weight(self)
    }

    fn additive_generators() -> &'static [Self] {
        &[F2u::ONE, F2u::U]
    }

    fn embed(v: &[Self]) -> Option<BinWord> {
        if v.len() > Self::MAX_KERNEL_LEN {
            return None;
        }
        let mut w = BinWord::default();
        for (j, x) in v.iter().enumerate() {
            w.set(j, x.b());
            w.set(64 + j, x.a() ^ x.b());
        }
        Some(w)
    }

    fn parse_token(s: &str) -> Result<Self, String> {
        match s {
            "0" => Ok(F2u::ZERO),
            "1" => Ok(F2u::ONE),
            "u" => Ok(F2u::U),
            "1+u" => Ok(F2u::ONE_PLUS_U),
            _ => Err(format!("bad F2+uF2 token {s:?} (expected 0, 1, u or 1+u)")),
        }
    }

    fn token(self) -> String {
        self.to_string()
    }
}
