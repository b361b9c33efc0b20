//! Ring and character invariants as named checks.

use std::fmt;

use crate::ring::{character_matrix, printed_matrix_discrepancies, Ideal, RingElem, UnitClass};
use crate::scalars::GaussianInt;

/// Lee weights as tabulated, in canonical order `0, u, 2u, 3u, 1, ...`.
pub const LEE_TABLE: [u32; 16] = [0, 2, 4, 2, 1, 3, 3, 1, 2, 2, 2, 2, 1, 1, 3, 3];

/// Units as listed.
pub const UNITS: [&str; 8] = ["10", "11", "12", "13", "30", "31", "32", "33"];
/// Units of the first type.
pub const UNITS_1: [&str; 4] = ["10", "30", "12", "32"];
/// Units of the second type.
pub const UNITS_2: [&str; 4] = ["11", "31", "13", "33"];

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name
        )?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

fn parse_all(toks: &[&str]) -> Vec<RingElem> {
    let mut v: Vec<RingElem> = toks
        .iter()
        .map(|t| t.parse().expect("valid token"))
        .collect();
    v.sort();
    v
}

/// Lee weights, unit partition and square classification.
pub fn ring_census() -> Vec<Check> {
    let mut out = Vec::new();

    let bad: Vec<String> = RingElem::all()
        .filter(|x| x.lee_weight() != LEE_TABLE[x.index()])
        .map(|x| x.to_string())
        .collect();
    out.push(check(
        "lee weights match table",
        bad.is_empty(),
        bad.join(" "),
    ));

    let mut counts = [0u32; 5];
    for x in RingElem::all() {
        counts[x.lee_weight() as usize] += 1;
    }
    out.push(check(
        "weight classes 1,4,6,4,1",
        counts == [1, 4, 6, 4, 1],
        format!("{counts:?}"),
    ));

    let units: Vec<RingElem> = RingElem::all().filter(|x| x.is_unit()).collect();
    let inverses =
        RingElem::all().all(|x| RingElem::all().any(|y| x * y == RingElem::ONE) == x.is_unit());
    out.push(check(
        "8 units as listed",
        units == parse_all(&UNITS) && inverses,
        format!("{}", units.len()),
    ));

    let class = |c: UnitClass| -> Vec<RingElem> {
        RingElem::all().filter(|x| x.unit_class() == c).collect()
    };
    out.push(check(
        "unit types partition the units",
        class(UnitClass::Unit1) == parse_all(&UNITS_1)
            && class(UnitClass::Unit2) == parse_all(&UNITS_2),
        String::new(),
    ));

    let one_2u: RingElem = "12".parse().expect("valid token");
    let bad: Vec<String> = RingElem::all()
        .filter(|x| {
            x.square()
                != match x.unit_class() {
                    UnitClass::NonUnit => RingElem::ZERO,
                    UnitClass::Unit1 => RingElem::ONE,
                    UnitClass::Unit2 => one_2u,
                }
        })
        .map(|x| x.to_string())
        .collect();
    out.push(check("squares by unit type", bad.is_empty(), bad.join(" ")));
    out
}

/// Generating character and the character matrix.
pub fn character_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let trivial_on: Vec<&str> = Ideal::ALL
        .iter()
        .filter(|&&id| id != Ideal::Zero && id != Ideal::Whole)
        .filter(|id| id.elements().iter().all(|x| x.chi() == GaussianInt::ONE))
        .map(|id| id.name())
        .collect();
    out.push(check(
        "chi nontrivial on the 5 nonzero proper ideals",
        trivial_on.is_empty(),
        trivial_on.join(" "),
    ));

    let t = character_matrix();
    let symmetric = (0..16).all(|i| (0..16).all(|j| t[i][j] == t[j][i]));
    out.push(check("T symmetric", symmetric, String::new()));

    let unitary = (0..16).all(|i| {
        (0..16).all(|j| {
            let s: GaussianInt = (0..16).map(|k| t[i][k] * t[j][k].conj()).sum();
            s == if i == j {
                GaussianInt::new(16, 0)
            } else {
                GaussianInt::ZERO
            }
        })
    });
    out.push(check("T conj(T)^t = 16 I", unitary, String::new()));

    let disc = printed_matrix_discrepancies();
    let detail: Vec<String> = disc
        .iter()
        .map(|d| {
            format!(
                "({},{}) printed {} computed {}",
                d.row, d.col, d.printed, d.generated
            )
        })
        .collect();
    out.push(check(
        "printed T discrepancies reported",
        true,
        format!("{} entries differ {}", disc.len(), detail.join("; ")),
    ));
    out
}
