//! Symmetric, double circulant and bordered double circulant codes, the
//! tabulated rows, and an exhaustive search harness over first rows.

use std::fmt;

use rayon::prelude::*;

use crate::code::{Matrix, MinDistance, RingMatrix};
use crate::error::{CodeError, Result};
use crate::ring::RingElem;
use crate::wenum::is_formally_self_dual;
use crate::LinearCode;

/// First row of a circulant matrix; row `i` is the first row shifted right
/// `i` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantSpec {
    pub first_row: Vec<RingElem>,
}

impl CirculantSpec {
    pub fn new(first_row: Vec<RingElem>) -> Self {
        CirculantSpec { first_row }
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    /// `M[i][j] = first_row[(j - i) mod n]`.
    pub fn matrix(&self) -> RingMatrix {
        circulant(&self.first_row)
    }
}

pub fn circulant(first_row: &[RingElem]) -> RingMatrix {
    let n = first_row.len();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| first_row[(j + n - i) % n]).collect())
        .collect();
    Matrix::from_rows(rows).expect("nonempty first row")
}

/// Bordered circulant: the block
/// ```text
/// alpha  beta ... beta
/// gamma
///  ...        M
/// gamma
/// ```
/// with `M` circulant of order `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorderSpec {
    pub first_row: Vec<RingElem>,
    pub alpha: RingElem,
    pub beta: RingElem,
    pub gamma: RingElem,
}

impl BorderSpec {
    pub fn order(&self) -> usize {
        self.first_row.len() + 1
    }

    pub fn matrix(&self) -> Result<RingMatrix> {
        if self.gamma != self.beta && self.gamma != -self.beta {
            return Err(CodeError::BadBorder);
        }
        let m = circulant(&self.first_row);
        let n = self.order();
        let mut b = Matrix::zeros(n, n);
        b.set(0, 0, self.alpha);
        for j in 1..n {
            b.set(0, j, self.beta);
            b.set(j, 0, self.gamma);
        }
        for i in 1..n {
            for j in 1..n {
                b.set(i, j, m.get(i - 1, j - 1));
            }
        }
        Ok(b)
    }
}

/// `<[I_n | A]>` for symmetric `A`.
pub fn symmetric_code(a: &RingMatrix) -> Result<LinearCode> {
    if !a.is_square() {
        return Err(CodeError::NotSquare);
    }
    if !a.is_symmetric() {
        return Err(CodeError::NotSymmetric);
    }
    Ok(LinearCode::from_standard(a))
}

/// `<[I_n | M]>` for circulant `M`.
pub fn double_circulant_code(s: &CirculantSpec) -> LinearCode {
    LinearCode::from_standard(&s.matrix())
}

/// `<[I_n | B]>` for the bordered block `B`.
pub fn bordered_code(s: &BorderSpec) -> Result<LinearCode> {
    Ok(LinearCode::from_standard(&s.matrix()?))
}

/// Which construction a search or table row uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    DoubleCirculant,
    Bordered,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::DoubleCirculant => "dc",
            Kind::Bordered => "bdc",
        })
    }
}

/// Either construction's parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionSpec {
    Circulant(CirculantSpec),
    Bordered(BorderSpec),
}

impl ConstructionSpec {
    pub fn code(&self) -> Result<LinearCode> {
        match self {
            ConstructionSpec::Circulant(s) => Ok(double_circulant_code(s)),
            ConstructionSpec::Bordered(s) => bordered_code(s),
        }
    }

    /// Code length over `R`.
    pub fn length(&self) -> usize {
        match self {
            ConstructionSpec::Circulant(s) => 2 * s.order(),
            ConstructionSpec::Bordered(s) => 2 * s.order(),
        }
    }
}

fn fmt_row(row: &[RingElem]) -> String {
    let parts: Vec<String> = row.iter().map(RingElem::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Circulant(s) => write!(f, "M={}", fmt_row(&s.first_row)),
            ConstructionSpec::Bordered(s) => write!(
                f,
                "M={} (alpha,beta,gamma)=({},{},{})",
                fmt_row(&s.first_row),
                s.alpha,
                s.beta,
                s.gamma
            ),
        }
    }
}

/// A tabulated row: length over `R`, first row of `M`, optional border
/// and the cited minimum Lee distance.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub length: usize,
    pub first_row: &'static str,
    pub border: Option<(&'static str, &'static str, &'static str)>,
    pub d: u32,
}

impl TableRow {
    pub fn spec(&self) -> ConstructionSpec {
        let row: Vec<RingElem> = self
            .first_row
            .split_whitespace()
            .map(|t| t.parse().expect("valid table token"))
            .collect();
        match self.border {
            None => ConstructionSpec::Circulant(CirculantSpec::new(row)),
            Some((a, b, g)) => ConstructionSpec::Bordered(BorderSpec {
                first_row: row,
                alpha: a.parse().expect("valid table token"),
                beta: b.parse().expect("valid table token"),
                gamma: g.parse().expect("valid table token"),
            }),
        }
    }
}

const fn dc(length: usize, first_row: &'static str, d: u32) -> TableRow {
    TableRow {
        length,
        first_row,
        border: None,
        d,
    }
}

const fn bdc(
    length: usize,
    first_row: &'static str,
    border: (&'static str, &'static str, &'static str),
    d: u32,
) -> TableRow {
    TableRow {
        length,
        first_row,
        border: Some(border),
        d,
    }
}

/// Double circulant rows (tokens `ab` = `a + ub`).
pub const DC_TABLE: [TableRow; 12] = [
    dc(4, "20 12", 4),
    dc(6, "20 10 03", 6),
    dc(8, "33 03 02 23", 8),
    dc(10, "10 00 20 03 21", 8),
    dc(12, "00 20 30 02 30 01", 10),
    dc(14, "33 33 12 10 22 30 30", 11),
    dc(16, "00 00 12 12 10 10 03 11", 12),
    dc(18, "00 00 10 10 12 33 22 11 20", 12),
    dc(20, "00 00 10 30 10 32 01 32 01 21", 14),
    dc(22, "00 00 10 10 10 10 20 10 22 13 32", 14),
    dc(24, "00 00 10 10 10 10 00 10 00 20 02 23", 14),
    dc(26, "00 00 10 10 10 10 00 30 11 02 03 12 32", 15),
];

/// Bordered double circulant rows.
pub const BDC_TABLE: [TableRow; 11] = [
    bdc(4, "00", ("00", "12", "12"), 4),
    bdc(6, "02 10", ("33", "13", "13"), 6),
    bdc(8, "33 32 01", ("20", "32", "32"), 8),
    bdc(10, "00 00 12 10", ("30", "12", "12"), 8),
    bdc(12, "12 10 20 13 30", ("01", "12", "12"), 10),
    bdc(14, "00 00 01 01 20 32", ("31", "12", "12"), 10),
    bdc(16, "10 10 00 10 31 03 12", ("32", "10", "10"), 11),
    bdc(18, "00 00 00 00 22 03 10 32", ("31", "32", "32"), 12),
    bdc(20, "00 00 00 00 01 13 11 01 22", ("11", "32", "32"), 12),
    bdc(22, "00 00 00 00 02 11 31 13 22 23", ("11", "32", "32"), 14),
    bdc(
        24,
        "00 00 00 00 00 10 01 02 22 23 30",
        ("10", "12", "12"),
        14,
    ),
];

/// Table `2` holds double circulant rows, `3` bordered ones.
pub fn table(which: u8) -> Option<&'static [TableRow]> {
    match which {
        2 => Some(&DC_TABLE),
        3 => Some(&BDC_TABLE),
        _ => None,
    }
}

/// Outcome of checking one table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Only an upper bound above the cited value was found.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Formal self-duality status of a constructed code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsdStatus {
    Verified,
    Failed,
    /// The Lee enumerator was out of budget.
    Skipped,
}

impl fmt::Display for FsdStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FsdStatus::Verified => "fsd",
            FsdStatus::Failed => "not-fsd",
            FsdStatus::Skipped => "fsd-skipped",
        })
    }
}

fn fsd_status(code: &LinearCode, budget: u128) -> Result<FsdStatus> {
    match is_formally_self_dual(code, budget) {
        Ok(true) => Ok(FsdStatus::Verified),
        Ok(false) => Ok(FsdStatus::Failed),
        Err(CodeError::BudgetExceeded { .. }) => Ok(FsdStatus::Skipped),
        Err(e) => Err(e),
    }
}

/// One checked table row.
#[derive(Debug, Clone)]
pub struct RowReport {
    pub row: TableRow,
    pub spec: ConstructionSpec,
    pub distance: MinDistance<RingElem>,
    pub fsd: FsdStatus,
    pub verdict: Verdict,
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} length={} {} cited_d={} d={} ({}) {}",
            self.verdict,
            self.row.length,
            self.spec,
            self.row.d,
            self.distance.weight,
            self.distance.flag(),
            self.fsd
        )
    }
}

/// Rebuilds the code of a table row and checks its distance and formal
/// self-duality.
pub fn verify_row(row: &TableRow, budget: u128, samples: usize) -> Result<RowReport> {
    let spec = row.spec();
    let code = spec.code()?;
    let distance = code.min_lee_distance(budget, samples)?;
    let fsd = fsd_status(&code, budget)?;
    let distance_verdict = match (distance.exact, distance.weight.cmp(&row.d)) {
        (_, std::cmp::Ordering::Less) => Verdict::Fail,
        (_, std::cmp::Ordering::Equal) => Verdict::Pass,
        (true, std::cmp::Ordering::Greater) => Verdict::Fail,
        (false, std::cmp::Ordering::Greater) => Verdict::Inconclusive,
    };
    let verdict = if fsd == FsdStatus::Failed {
        Verdict::Fail
    } else {
        distance_verdict
    };
    Ok(RowReport {
        row: *row,
        spec,
        distance,
        fsd,
        verdict,
    })
}

/// Checks every row of table `which` (2 double circulant, 3 bordered) up to
/// `max_length`.
pub fn verify_tables(
    which: u8,
    max_length: usize,
    budget: u128,
    samples: usize,
) -> Result<Vec<RowReport>> {
    let rows = table(which).ok_or(CodeError::NoTable(which))?;
    rows.iter()
        .filter(|r| r.length <= max_length)
        .map(|r| verify_row(r, budget, samples))
        .collect()
}

/// One candidate kept by a search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub spec: ConstructionSpec,
    pub distance: MinDistance<RingElem>,
    pub fsd: FsdStatus,
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} d={} ({}) {}",
            self.spec,
            self.distance.weight,
            self.distance.flag(),
            self.fsd
        )
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub kind: Kind,
    pub n: usize,
    pub candidates: u64,
    /// Every candidate distance was exact.
    pub exhaustive: bool,
    pub best: Option<SearchResult>,
    /// Candidates with distance at least the threshold, in iteration order.
    pub retained: Vec<SearchResult>,
}

/// Search parameters.
#[derive(Debug, Clone)]
pub struct SearchParams {
    pub kind: Kind,
    /// Order of the block next to the identity; the code length is `2n`.
    pub n: usize,
    pub alphabet: Vec<RingElem>,
    pub budget: u128,
    pub threshold: u32,
    pub samples: usize,
}

impl SearchParams {
    pub fn new(kind: Kind, n: usize) -> Self {
        SearchParams {
            kind,
            n,
            alphabet: RingElem::all().collect(),
            budget: crate::code::DEFAULT_BUDGET,
            threshold: 0,
            samples: crate::code::DEFAULT_SAMPLES,
        }
    }
}

/// All rows over `alphabet` of the given length, lexicographic in the
/// canonical element order.
fn rows_over(alphabet: &[RingElem], len: usize) -> Vec<Vec<RingElem>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                alphabet.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn candidates(p: &SearchParams) -> Result<Vec<ConstructionSpec>> {
    if p.n == 0 || (p.kind == Kind::Bordered && p.n < 2) {
        return Err(CodeError::BadShape);
    }
    let mut alphabet = p.alphabet.clone();
    alphabet.sort();
    alphabet.dedup();
    Ok(match p.kind {
        Kind::DoubleCirculant => rows_over(&alphabet, p.n)
            .into_iter()
            .map(|r| ConstructionSpec::Circulant(CirculantSpec::new(r)))
            .collect(),
        Kind::Bordered => {
            let all: Vec<RingElem> = RingElem::all().collect();
            let mut out = Vec::new();
            // gamma = +beta, then gamma = -beta where that differs
            for negate in [false, true] {
                for row in rows_over(&alphabet, p.n - 1) {
                    for &alpha in &all {
                        for &beta in &all {
                            let gamma = if negate { -beta } else { beta };
                            if negate && gamma == beta {
                                continue;
                            }
                            out.push(ConstructionSpec::Bordered(BorderSpec {
                                first_row: row.clone(),
                                alpha,
                                beta,
                                gamma,
                            }));
                        }
                    }
                }
            }
            out
        }
    })
}

/// Iterates all candidate matrices, computes each minimum Lee distance and
/// keeps those reaching `threshold`. The best result is the first candidate
/// in iteration order with the largest distance.
pub fn search(p: &SearchParams) -> Result<SearchReport> {
    let cands = candidates(p)?;
    let evaluated: Vec<Result<(ConstructionSpec, MinDistance<RingElem>)>> = cands
        .into_par_iter()
        .map(|spec| {
            let code = spec.code()?;
            let d = match code.min_lee_distance(p.budget, p.samples) {
                Ok(d) => d,
                Err(CodeError::ZeroCode) => MinDistance {
                    weight: 0,
                    exact: true,
                    message: Vec::new(),
                    witness: Vec::new(),
                },
                Err(e) => return Err(e),
            };
            Ok((spec, d))
        })
        .collect();
    let mut candidates = 0u64;
    let mut exhaustive = true;
    let mut best: Option<(ConstructionSpec, MinDistance<RingElem>)> = None;
    let mut kept = Vec::new();
    for item in evaluated {
        let (spec, d) = item?;
        candidates += 1;
        exhaustive &= d.exact;
        if best.as_ref().is_none_or(|(_, b)| d.weight > b.weight) {
            best = Some((spec.clone(), d.clone()));
        }
        if d.weight >= p.threshold && d.weight > 0 {
            kept.push((spec, d));
        }
    }
    let finish =
        |(spec, distance): (ConstructionSpec, MinDistance<RingElem>)| -> Result<SearchResult> {
            let fsd = fsd_status(&spec.code()?, p.budget)?;
            Ok(SearchResult {
                spec,
                distance,
                fsd,
            })
        };
    let retained = kept.into_iter().map(finish).collect::<Result<Vec<_>>>()?;
    let best = best.map(finish).transpose()?;
    Ok(SearchReport {
        kind: p.kind,
        n: p.n,
        candidates,
        exhaustive,
        best,
        retained,
    })
}
