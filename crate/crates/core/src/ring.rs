//! The ring `R = Z4 + uZ4` with `u^2 = 0`.
//!
//! An element `a + ub` is packed into a nibble as `4a + b`. With that packing
//! the nibble value is also the element's position in the canonical order
//! `0, u, 2u, 3u, 1, 1+u, ..., 3+3u` used to index the 16 variables of the
//! complete weight enumerator. All arithmetic goes through 16x16 tables
//! built at compile time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::scalars::{F2u, GaussianInt, Z4};

const fn pack(a: u8, b: u8) -> u8 {
    ((a & 3) << 2) | (b & 3)
}

const ADD: [[u8; 16]; 16] = {
    let mut t = [[0u8; 16]; 16];
    let mut x = 0;
    while x < 16 {
        let mut y = 0;
        while y < 16 {
            let (a1, b1) = (x >> 2, x & 3);
            let (a2, b2) = (y >> 2, y & 3);
            t[x][y] = pack((a1 + a2) as u8, (b1 + b2) as u8);
            y += 1;
        }
        x += 1;
    }
    t
};

const MUL: [[u8; 16]; 16] = {
    let mut t = [[0u8; 16]; 16];
    let mut x = 0;
    while x < 16 {
        let mut y = 0;
        while y < 16 {
            let (a1, b1) = (x >> 2, x & 3);
            let (a2, b2) = (y >> 2, y & 3);
            // (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1)
            t[x][y] = pack((a1 * a2) as u8, (a1 * b2 + a2 * b1) as u8);
            y += 1;
        }
        x += 1;
    }
    t
};

const NEG: [u8; 16] = {
    let mut t = [0u8; 16];
    let mut x = 0;
    while x < 16 {
        t[x] = pack((4 - (x >> 2)) as u8, (4 - (x & 3)) as u8);
        x += 1;
    }
    t
};

const fn z4_lee(v: u8) -> u8 {
    match v & 3 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

const LEE: [u8; 16] = {
    let mut t = [0u8; 16];
    let mut x = 0;
    while x < 16 {
        let (a, b) = ((x >> 2) as u8, (x & 3) as u8);
        t[x] = z4_lee(b) + z4_lee(a + b);
        x += 1;
    }
    t
};

/// Element `a + ub` of `Z4 + uZ4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem(u8);

impl RingElem {
    pub const ZERO: RingElem = RingElem(0);
    pub const ONE: RingElem = RingElem(pack(1, 0));
    pub const U: RingElem = RingElem(pack(0, 1));
    pub const TWO: RingElem = RingElem(pack(2, 0));
    pub const TWO_U: RingElem = RingElem(pack(0, 2));

    pub const fn new(a: u8, b: u8) -> Self {
        RingElem(pack(a, b))
    }

    pub fn from_parts(a: Z4, b: Z4) -> Self {
        RingElem::new(a.value(), b.value())
    }

    /// Element at 0-based position `i` of the canonical order.
    pub const fn from_index(i: usize) -> Self {
        RingElem((i & 15) as u8)
    }

    /// 0-based position in the canonical order.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn a(self) -> Z4 {
        Z4::new(self.0 >> 2)
    }

    pub const fn b(self) -> Z4 {
        Z4::new(self.0 & 3)
    }

    /// All 16 elements in canonical order.
    pub fn all() -> impl Iterator<Item = RingElem> + Clone {
        (0..16).map(RingElem)
    }

    pub fn lee_weight(self) -> u32 {
        LEE[self.0 as usize] as u32
    }

    pub fn is_unit(self) -> bool {
        self.a().value() & 1 == 1
    }

    pub fn unit_class(self) -> UnitClass {
        if !self.is_unit() {
            UnitClass::NonUnit
        } else if self.b().value() & 1 == 0 {
            UnitClass::Unit1
        } else {
            UnitClass::Unit2
        }
    }

    pub fn square(self) -> RingElem {
        self * self
    }

    /// Generating character `chi(a + bu) = i^(a + b)`.
    pub fn chi(self) -> GaussianInt {
        GaussianInt::i_pow((self.a().value() + self.b().value()) as u32)
    }

    /// Reduction modulo 2 onto `F2 + uF2`.
    pub fn reduce_mod2(self) -> F2u {
        F2u::from_parts(self.a().value(), self.b().value())
    }

    /// Two-digit file token `ab`.
    pub fn token(self) -> String {
        format!("{}{}", self.a(), self.b())
    }
}

impl Add for RingElem {
    type Output = RingElem;
    #[inline]
    fn add(self, rhs: RingElem) -> RingElem {
        RingElem(ADD[self.0 as usize][rhs.0 as usize])
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    #[inline]
    fn sub(self, rhs: RingElem) -> RingElem {
        self + (-rhs)
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    #[inline]
    fn neg(self) -> RingElem {
        RingElem(NEG[self.0 as usize])
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    #[inline]
    fn mul(self, rhs: RingElem) -> RingElem {
        RingElem(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a().value(), self.b().value());
        match (a, b) {
            (0, 0) => write!(f, "0"),
            (0, 1) => write!(f, "u"),
            (0, b) => write!(f, "{b}u"),
            (a, 0) => write!(f, "{a}"),
            (a, 1) => write!(f, "{a}+u"),
            (a, b) => write!(f, "{a}+{b}u"),
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingElem {
    type Err = String;

    /// Parses the two-digit token `ab` meaning `a + ub`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        if bytes.len() != 2 || !bytes.iter().all(|c| (b'0'..=b'3').contains(c)) {
            return Err(format!("bad ring token {s:?} (expected two digits 0-3)"));
        }
        Ok(RingElem::new(bytes[0] - b'0', bytes[1] - b'0'))
    }
}

/// Unit classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitClass {
    NonUnit,
    /// `{1, 3, 1+2u, 3+2u}`, squares to 1.
    Unit1,
    /// `{1+u, 3+u, 1+3u, 3+3u}`, squares to `1+2u`.
    Unit2,
}

/// Named ideals of `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ideal {
    Zero,
    TwoU,
    U,
    Two,
    TwoPlusU,
    /// The maximal ideal `<2, u>`.
    TwoAndU,
    Whole,
}

impl Ideal {
    pub const ALL: [Ideal; 7] = [
        Ideal::Zero,
        Ideal::TwoU,
        Ideal::U,
        Ideal::Two,
        Ideal::TwoPlusU,
        Ideal::TwoAndU,
        Ideal::Whole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Ideal::Zero => "I_0",
            Ideal::TwoU => "I_2u",
            Ideal::U => "I_u",
            Ideal::Two => "I_2",
            Ideal::TwoPlusU => "I_2+u",
            Ideal::TwoAndU => "I_2,u",
            Ideal::Whole => "I_1",
        }
    }

    /// Elements as listed for each ideal.
    pub fn elements(self) -> Vec<RingElem> {
        let e = |a, b| RingElem::new(a, b);
        match self {
            Ideal::Zero => vec![e(0, 0)],
            Ideal::TwoU => vec![e(0, 0), e(0, 2)],
            Ideal::U => vec![e(0, 0), e(0, 1), e(0, 2), e(0, 3)],
            Ideal::Two => vec![e(0, 0), e(2, 0), e(0, 2), e(2, 2)],
            Ideal::TwoPlusU => vec![e(0, 0), e(2, 1), e(0, 2), e(2, 3)],
            Ideal::TwoAndU => vec![
                e(0, 0),
                e(2, 0),
                e(0, 1),
                e(0, 2),
                e(0, 3),
                e(2, 1),
                e(2, 2),
                e(2, 3),
            ],
            Ideal::Whole => RingElem::all().collect(),
        }
    }

    pub fn contains(self, x: RingElem) -> bool {
        self.elements().contains(&x)
    }
}

/// Character matrix `T(i, j) = chi(g_i g_j)` in canonical order.
pub fn character_matrix() -> [[GaussianInt; 16]; 16] {
    let mut t = [[GaussianInt::ZERO; 16]; 16];
    for (i, row) in t.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (RingElem::from_index(i) * RingElem::from_index(j)).chi();
        }
    }
    t
}

/// Reference transcription of the 16x16 character matrix, entry by entry,
/// misprints kept.
const PRINTED_T: [&str; 16] = [
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
    "1 1 1 1 i i i i -1 -1 -1 -1 -i -i -i -i",
    "1 1 1 1 -1 -1 -1 -1 1 1 1 1 -1 -1 -1 -1",
    "1 1 1 1 -i -i -i -i -1 -1 -1 -1 i i i i",
    "1 i -1 -i i -1 -i 1 -1 -i 1 i -i 1 i -1",
    "1 i -1 -i -1 -i 1 i 1 i -1 -i -1 -i 1 i",
    "1 i -1 -i -i 1 i -1 -1 -i 1 i i -1 i 1",
    "1 i -1 -i 1 i -1 -i 1 i -1 -i 1 i -1 i",
    "1 -1 1 -1 -1 1 -1 1 1 -1 1 -1 -1 1 -1 1",
    "1 -1 1 -1 -i i -i i -1 1 -1 1 i -i i -i",
    "1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1",
    "1 -1 1 -1 i -i i -i -1 1 -1 1 -i i -i i",
    "1 -i -1 i -i -1 i 1 -1 i 1 -i i 1 -i -1",
    "1 -i -1 i 1 -i -1 i 1 -i -1 i 1 -i -1 i",
    "1 -i -1 i i 1 i -1 -1 i 1 -i -i -1 i 1",
    "1 -i -1 i -1 i 1 -i 1 -i -1 i -1 i 1 -i",
];

fn parse_root(tok: &str) -> GaussianInt {
    match tok {
        "1" => GaussianInt::new(1, 0),
        "-1" => GaussianInt::new(-1, 0),
        "i" => GaussianInt::new(0, 1),
        "-i" => GaussianInt::new(0, -1),
        _ => unreachable!("bad printed entry {tok}"),
    }
}

/// The printed character matrix.
pub fn printed_character_matrix() -> [[GaussianInt; 16]; 16] {
    let mut t = [[GaussianInt::ZERO; 16]; 16];
    for (i, line) in PRINTED_T.iter().enumerate() {
        for (j, tok) in line.split_whitespace().enumerate() {
            t[i][j] = parse_root(tok);
        }
    }
    t
}

/// An entry where the printed matrix disagrees with `chi(g_i g_j)`.
/// Indices are 1-based to match the printed layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixDiscrepancy {
    pub row: usize,
    pub col: usize,
    pub printed: GaussianInt,
    pub generated: GaussianInt,
}

pub fn printed_matrix_discrepancies() -> Vec<MatrixDiscrepancy> {
    let gen = character_matrix();
    let printed = printed_character_matrix();
    let mut out = Vec::new();
    for i in 0..16 {
        for j in 0..16 {
            if gen[i][j] != printed[i][j] {
                out.push(MatrixDiscrepancy {
                    row: i + 1,
                    col: j + 1,
                    printed: printed[i][j],
                    generated: gen[i][j],
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(r("11") * r("11"), r("12"));
        assert_eq!(r("21") * r("21"), RingElem::ZERO);
        assert_eq!(r("23") + r("31"), RingElem::ONE);
        assert_eq!(r("10") - r("01"), r("13"));
        assert_eq!(-r("01"), r("03"));
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in RingElem::all() {
            assert_eq!(x + (-x), RingElem::ZERO);
            assert_eq!(x * RingElem::ONE, x);
            for y in RingElem::all() {
                assert_eq!(x * y, y * x);
                for z in RingElem::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                    assert_eq!((x + y) + z, x + (y + z));
                }
            }
        }
        assert_eq!(RingElem::U * RingElem::U, RingElem::ZERO);
        let four = RingElem::ONE + RingElem::ONE + RingElem::ONE + RingElem::ONE;
        assert_eq!(four, RingElem::ZERO);
    }

    #[test]
    fn unit_classes() {
        assert_eq!(r("32").unit_class(), UnitClass::Unit1);
        assert_eq!(r("13").unit_class(), UnitClass::Unit2);
        assert_eq!(r("21").unit_class(), UnitClass::NonUnit);
        let u1: Vec<_> = RingElem::all()
            .filter(|x| x.unit_class() == UnitClass::Unit1)
            .collect();
        assert_eq!(u1, vec![r("10"), r("12"), r("30"), r("32")]);
        let u2: Vec<_> = RingElem::all()
            .filter(|x| x.unit_class() == UnitClass::Unit2)
            .collect();
        assert_eq!(u2, vec![r("11"), r("13"), r("31"), r("33")]);
    }

    #[test]
    fn units_have_inverses() {
        for x in RingElem::all() {
            let inv = RingElem::all().any(|y| x * y == RingElem::ONE);
            assert_eq!(inv, x.is_unit(), "{x}");
        }
    }

    #[test]
    fn squares_by_class() {
        for x in RingElem::all() {
            let expected = match x.unit_class() {
                UnitClass::NonUnit => RingElem::ZERO,
                UnitClass::Unit1 => RingElem::ONE,
                UnitClass::Unit2 => r("12"),
            };
            assert_eq!(x.square(), expected, "{x}");
        }
    }

    #[test]
    fn lee_weights() {
        assert_eq!(r("02").lee_weight(), 4);
        assert_eq!(r("32").lee_weight(), 3);
        assert_eq!(RingElem::ZERO.lee_weight(), 0);
        for x in RingElem::all() {
            assert_eq!(x.lee_weight(), (-x).lee_weight());
            assert_eq!(
                x.lee_weight(),
                x.b().lee_weight() + (x.a() + x.b()).lee_weight()
            );
        }
    }

    #[test]
    fn chi_values() {
        assert_eq!(RingElem::ZERO.chi(), GaussianInt::ONE);
        assert_eq!(RingElem::U.chi(), GaussianInt::I);
        assert_eq!(r("33").chi(), GaussianInt::new(-1, 0));
    }

    #[test]
    fn ideals_are_principal_where_listed() {
        let span = |g: RingElem| {
            let mut v: Vec<_> = RingElem::all().map(|x| x * g).collect();
            v.sort();
            v.dedup();
            v
        };
        let sorted = |mut v: Vec<RingElem>| {
            v.sort();
            v
        };
        assert_eq!(span(r("02")), sorted(Ideal::TwoU.elements()));
        assert_eq!(span(r("01")), sorted(Ideal::U.elements()));
        assert_eq!(span(r("20")), sorted(Ideal::Two.elements()));
        assert_eq!(span(r("21")), sorted(Ideal::TwoPlusU.elements()));
    }

    #[test]
    fn ideal_chain() {
        let subset = |a: Ideal, b: Ideal| a.elements().iter().all(|&x| b.contains(x));
        assert!(subset(Ideal::Zero, Ideal::TwoU));
        for mid in [Ideal::U, Ideal::Two, Ideal::TwoPlusU] {
            assert!(subset(Ideal::TwoU, mid));
            assert!(subset(mid, Ideal::TwoAndU));
        }
        assert!(!subset(Ideal::Two, Ideal::U));
        assert!(!subset(Ideal::U, Ideal::Two));
        assert!(subset(Ideal::TwoAndU, Ideal::Whole));
        let non_units: Vec<_> = RingElem::all().filter(|x| !x.is_unit()).collect();
        let mut maximal = Ideal::TwoAndU.elements();
        maximal.sort();
        assert_eq!(maximal, non_units);
    }

    #[test]
    fn every_ideal_is_closed() {
        for id in Ideal::ALL {
            let el = id.elements();
            for &x in &el {
                for &y in &el {
                    assert!(id.contains(x + y));
                }
                for s in RingElem::all() {
                    assert!(id.contains(s * x));
                }
            }
        }
    }

    #[test]
    fn chi_is_generating() {
        for id in Ideal::ALL {
            if id == Ideal::Zero {
                continue;
            }
            assert!(
                id.elements().iter().any(|x| x.chi() != GaussianInt::ONE),
                "{}",
                id.name()
            );
        }
    }

    #[test]
    fn character_sums_vanish() {
        for a in RingElem::all().skip(1) {
            let s: GaussianInt = RingElem::all().map(|x| (a * x).chi()).sum();
            assert!(s.is_zero(), "{a}");
        }
    }

    #[test]
    fn character_matrix_rows() {
        let t = character_matrix();
        assert!(t[0].iter().all(|&v| v == GaussianInt::ONE));
        let i = GaussianInt::I;
        let one = GaussianInt::ONE;
        let expected_row2 = [
            one, one, one, one, i, i, i, i, -one, -one, -one, -one, -i, -i, -i, -i,
        ];
        assert_eq!(t[1], expected_row2);
    }

    #[test]
    fn character_matrix_orthogonality() {
        let t = character_matrix();
        for i in 0..16 {
            for j in 0..16 {
                assert_eq!(t[i][j], t[j][i]);
                let s: GaussianInt = (0..16).map(|k| t[i][k] * t[j][k].conj()).sum();
                let expected = if i == j {
                    GaussianInt::new(16, 0)
                } else {
                    GaussianInt::ZERO
                };
                assert_eq!(s, expected);
            }
        }
    }

    #[test]
    fn printed_matrix_discrepancies_are_reported() {
        let d = printed_matrix_discrepancies();
        assert!(!d.is_empty());
        // Row 8 ends with "i" where chi gives "-i".
        assert!(d.iter().any(|x| x.row == 8 && x.col == 16));
        let printed = printed_character_matrix();
        assert_eq!(printed[1], character_matrix()[1]);
    }

    #[test]
    fn token_round_trip() {
        for x in RingElem::all() {
            assert_eq!(x.token().parse::<RingElem>().unwrap(), x);
        }
        assert!("4".parse::<RingElem>().is_err());
        assert!("1+u".parse::<RingElem>().is_err());
        assert_eq!(r("12").to_string(), "1+2u");
        assert_eq!(r("01").to_string(), "u");
    }
}
