//! Small exact scalar domains: `Z4`, `F2 + uF2`, Gaussian integers and
//! Gaussian rationals.
//!
//! `Z4` and `F2 + uF2` are stored as 2-bit codes and use lookup tables for
//! multiplication. `F2 + uF2` encodes `0, 1, u, 1+u` as `0, 1, 2, 3`, i.e.
//! bit 0 is the constant part and bit 1 the `u` part, so addition is XOR.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::CodeError;

/// Element of `Z4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    /// Reduces `v` modulo 4.
    pub const fn new(v: u8) -> Self {
        Z4(v & 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    /// Lee weight: `min(x, 4 - x)`.
    pub const fn lee_weight(self) -> u32 {
        [0, 1, 2, 1][self.0 as usize]
    }

    pub fn all() -> impl Iterator<Item = Z4> {
        (0..4).map(Z4)
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const F2U_MUL: [[u8; 4]; 4] = {
    // (a + ub)(c + ud) = ac + u(ad + bc) over F2
    let mut t = [[0u8; 4]; 4];
    let mut x = 0;
    while x < 4 {
        let mut y = 0;
        while y < 4 {
            let (a, b) = (x & 1, x >> 1);
            let (c, d) = (y & 1, y >> 1);
            let lo = a & c;
            let hi = (a & d) ^ (b & c);
            t[x][y] = (lo | (hi << 1)) as u8;
            y += 1;
        }
        x += 1;
    }
    t
};

/// Element of `F2 + uF2` with `u^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2u(u8);

impl F2u {
    pub const ZERO: F2u = F2u(0);
    pub const ONE: F2u = F2u(1);
    pub const U: F2u = F2u(2);
    pub const ONE_PLUS_U: F2u = F2u(3);

    /// Builds `a + ub` from the low bits of `a` and `b`.
    pub const fn from_parts(a: u8, b: u8) -> Self {
        F2u((a & 1) | ((b & 1) << 1))
    }

    /// Raw code in `0..4` (`0, 1, u, 1+u`).
    pub const fn code(self) -> u8 {
        self.0
    }

    pub const fn from_code(c: u8) -> Self {
        F2u(c & 3)
    }

    /// Constant part.
    pub const fn a(self) -> u8 {
        self.0 & 1
    }

    /// Coefficient of `u`.
    pub const fn b(self) -> u8 {
        self.0 >> 1
    }

    /// `w(0)=0, w(1)=w(1+u)=1, w(u)=2`.
    pub const fn lee_weight(self) -> u32 {
        [0, 1, 2, 1][self.0 as usize]
    }

    pub fn all() -> impl Iterator<Item = F2u> {
        (0..4).map(F2u)
    }
}

impl Add for F2u {
    type Output = F2u;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F2u) -> F2u {
        F2u(self.0 ^ rhs.0)
    }
}

impl Sub for F2u {
    type Output = F2u;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: F2u) -> F2u {
        F2u(self.0 ^ rhs.0)
    }
}

impl Neg for F2u {
    type Output = F2u;
    fn neg(self) -> F2u {
        self
    }
}

impl Mul for F2u {
    type Output = F2u;
    fn mul(self, rhs: F2u) -> F2u {
        F2u(F2U_MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Display for F2u {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "u", "1+u"][self.0 as usize])
    }
}

/// Exact Gaussian integer `re + im*i`.
///
/// Arithmetic is checked; overflow of the `i128` components panics rather
/// than wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i128,
    pub im: i128,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub const fn new(re: i128, im: i128) -> Self {
        GaussianInt { re, im }
    }

    /// `i^k` for any integer exponent.
    pub const fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    pub fn conj(self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = GaussianInt::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    pub fn scale(self, k: i128) -> Self {
        GaussianInt::new(
            self.re.checked_mul(k).expect("gaussian overflow"),
            self.im.checked_mul(k).expect("gaussian overflow"),
        )
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt::new(
            self.re.checked_add(rhs.re).expect("gaussian overflow"),
            self.im.checked_add(rhs.im).expect("gaussian overflow"),
        )
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        self + (-rhs)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        let m = |x: i128, y: i128| x.checked_mul(y).expect("gaussian overflow");
        let re = m(self.re, rhs.re)
            .checked_sub(m(self.im, rhs.im))
            .expect("gaussian overflow");
        let im = m(self.re, rhs.im)
            .checked_add(m(self.im, rhs.re))
            .expect("gaussian overflow");
        GaussianInt::new(re, im)
    }
}

impl std::iter::Sum for GaussianInt {
    fn sum<I: Iterator<Item = GaussianInt>>(iter: I) -> GaussianInt {
        iter.fold(GaussianInt::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, i) => write!(f, "{i}i"),
            (r, i) if i < 0 => write!(f, "{r}-{}i", -i),
            (r, i) => write!(f, "{r}+{i}i"),
        }
    }
}

/// Exact Gaussian rational `num / den` kept in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num: GaussianInt,
    den: i128,
}

impl GaussianRational {
    pub fn new(num: GaussianInt, den: i128) -> Result<Self, CodeError> {
        if den == 0 {
            return Err(CodeError::DivisionByZero);
        }
        let mut r = GaussianRational { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_int(num: GaussianInt) -> Self {
        GaussianRational { num, den: 1 }
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.num = -self.num;
            self.den = -self.den;
        }
        let g = self.num.re.gcd(&self.num.im).gcd(&self.den);
        if g > 1 {
            self.num = GaussianInt::new(self.num.re / g, self.num.im / g);
            self.den /= g;
        }
    }

    pub fn numer(&self) -> GaussianInt {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// Returns the Gaussian integer if the value is integral.
    pub fn to_int(&self) -> Option<GaussianInt> {
        self.is_integral().then_some(self.num)
    }

    /// Divides by a nonzero integer.
    pub fn div_int(self, k: i128) -> Result<Self, CodeError> {
        if k == 0 {
            return Err(CodeError::DivisionByZero);
        }
        GaussianRational::new(
            self.num,
            self.den.checked_mul(k).expect("gaussian overflow"),
        )
    }

    pub fn mul_int(self, k: i128) -> Self {
        let mut r = GaussianRational {
            num: self.num.scale(k),
            den: self.den,
        };
        r.normalize();
        r
    }

    pub fn pow(self, e: u32) -> Self {
        let mut r = GaussianRational {
            num: self.num.pow(e),
            den: self.den.checked_pow(e).expect("gaussian overflow"),
        };
        r.normalize();
        r
    }
}

impl From<GaussianInt> for GaussianRational {
    fn from(g: GaussianInt) -> Self {
        GaussianRational::from_int(g)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        let l = self.den.lcm(&rhs.den);
        let num = self.num.scale(l / self.den) + rhs.num.scale(l / rhs.den);
        let mut r = GaussianRational { num, den: l };
        r.normalize();
        r
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        self + (-rhs)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        let mut r = GaussianRational {
            num: self.num * rhs.num,
            den: self.den.checked_mul(rhs.den).expect("gaussian overflow"),
        };
        r.normalize();
        r
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}
