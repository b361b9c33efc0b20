//! Projections `mu` (`a + ub -> a`), `nu` (`a + ub -> b`) and `alpha`
//! (reduction mod 2), lifts, and the image properties of self-dual codes.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::code::{CodewordSet, MinDistance, SelfDuality};
use crate::error::{CodeError, Result};
use crate::gray::{gray_image, z4_formal_duality};
use crate::ring::{RingElem, UnitClass};
use crate::scalars::{F2u, Z4};
use crate::{F2uCode, LinearCode, Z4Code};

pub fn mu(v: &[RingElem]) -> Vec<Z4> {
    v.iter().map(|x| x.a()).collect()
}

pub fn nu(v: &[RingElem]) -> Vec<Z4> {
    v.iter().map(|x| x.b()).collect()
}

pub fn alpha(v: &[RingElem]) -> Vec<F2u> {
    v.iter().map(|x| x.reduce_mod2()).collect()
}

/// A projected code: the explicit deduplicated codeword set, and a
/// generator matrix spanning it.
#[derive(Debug, Clone)]
pub struct Projection<S: Alphabet> {
    pub words: CodewordSet<S>,
    pub code: LinearCode<S>,
}

impl<S: Alphabet> Projection<S> {
    pub fn size(&self) -> usize {
        self.words.size()
    }

    /// Closed under addition and the scalar action.
    pub fn is_linear(&self) -> bool {
        self.words.is_submodule()
    }
}

fn project<S: Alphabet>(
    code: &LinearCode,
    budget: u128,
    map: impl Fn(&[RingElem]) -> Vec<S>,
    gen_rows: Vec<Vec<S>>,
) -> Result<Projection<S>> {
    let n = code.length();
    let words = CodewordSet::from_words(n, code.codewords(budget)?.map(|c| map(&c)));
    let size = words.size() as u128;
    let gen = LinearCode::spanned_by(gen_rows, n)?.with_cardinality(size);
    Ok(Projection { words, code: gen })
}

/// `mu(C)` from the codeword set.
pub fn project_mu(code: &LinearCode, budget: u128) -> Result<Projection<Z4>> {
    project(code, budget, mu, mu_generators(code))
}

/// `nu(C)` from the codeword set.
pub fn project_nu(code: &LinearCode, budget: u128) -> Result<Projection<Z4>> {
    project(code, budget, nu, nu_generators(code))
}

/// `alpha(C)` from the codeword set.
pub fn project_alpha(code: &LinearCode, budget: u128) -> Result<Projection<F2u>> {
    project(code, budget, alpha, alpha_generators(code))
}

/// `mu` of each generator row. `mu` is a ring homomorphism onto `Z4`, so
/// these rows span `mu(C)`.
pub fn mu_generators(code: &LinearCode) -> Vec<Vec<Z4>> {
    code.generator().row_iter().map(mu).collect()
}

/// `nu(g)` and `mu(g)` for each generator row `g`:
/// `nu((x + uy) g) = x nu(g) + y mu(g)`.
pub fn nu_generators(code: &LinearCode) -> Vec<Vec<Z4>> {
    code.generator()
        .row_iter()
        .flat_map(|g| [nu(g), mu(g)])
        .collect()
}

/// `alpha` of each generator row.
pub fn alpha_generators(code: &LinearCode) -> Vec<Vec<F2u>> {
    code.generator().row_iter().map(alpha).collect()
}

/// `C` together with codes `D` over `Z4` and `E` over `F2 + uF2` that are
/// meant to equal `mu(C)` and `alpha(C)`.
#[derive(Debug, Clone)]
pub struct LiftTriple {
    pub c: LinearCode,
    pub d: Z4Code,
    pub e: F2uCode,
}

/// Span equality through generator membership in both directions.
fn same_span<S: Alphabet>(x: &LinearCode<S>, y: &LinearCode<S>, budget: u128) -> Result<bool> {
    for r in x.generator().row_iter() {
        if !y.contains(r, budget)? {
            return Ok(false);
        }
    }
    for r in y.generator().row_iter() {
        if !x.contains(r, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl LiftTriple {
    pub fn new(c: LinearCode, d: Z4Code, e: F2uCode) -> Self {
        LiftTriple { c, d, e }
    }

    /// Whether `mu(C) = D` and `alpha(C) = E`. Each side's generators are
    /// tested for membership in the other; this needs no enumeration of
    /// `C` when the codes are in standard form.
    pub fn is_lift(&self, budget: u128) -> Result<bool> {
        let n = self.c.length();
        if self.d.length() != n {
            return Err(CodeError::LengthMismatch(self.d.length(), n));
        }
        if self.e.length() != n {
            return Err(CodeError::LengthMismatch(self.e.length(), n));
        }
        let mu_c = LinearCode::spanned_by(mu_generators(&self.c), n)?;
        let alpha_c = LinearCode::spanned_by(alpha_generators(&self.c), n)?;
        Ok(same_span(&mu_c, &self.d, budget)? && same_span(&alpha_c, &self.e, budget)?)
    }
}

/// Distances of a lift and whether `d <= 2 d'` and `d <= 2 d''` hold.
#[derive(Debug, Clone)]
pub struct LiftReport {
    pub d: MinDistance<RingElem>,
    pub d_mu: MinDistance<Z4>,
    pub d_alpha: MinDistance<F2u>,
    pub holds: bool,
    /// `d'` and `d''` are exact, so an upper bound on `d` suffices.
    pub certain: bool,
}

impl fmt::Display for LiftReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d = {} ({})", self.d.weight, self.d.flag())?;
        writeln!(f, "d' = {} ({})", self.d_mu.weight, self.d_mu.flag())?;
        writeln!(f, "d'' = {} ({})", self.d_alpha.weight, self.d_alpha.flag())?;
        write!(
            f,
            "bound d <= 2*min(d', d'') = {}: {}{}",
            2 * self.d_mu.weight.min(self.d_alpha.weight),
            if self.holds { "holds" } else { "violated" },
            if self.certain {
                ""
            } else {
                " (bounds not exact)"
            }
        )
    }
}

pub fn lift_bound_check(t: &LiftTriple, budget: u128, samples: usize) -> Result<LiftReport> {
    if t.d.is_zero_code() || t.e.is_zero_code() {
        return Err(CodeError::ZeroCode);
    }
    let d = t.c.min_lee_distance(budget, samples)?;
    let d_mu = t.d.min_lee_distance(budget, samples)?;
    let d_alpha = t.e.min_lee_distance(budget, samples)?;
    let holds = d.weight <= 2 * d_mu.weight && d.weight <= 2 * d_alpha.weight;
    let certain = d_mu.exact && d_alpha.exact;
    Ok(LiftReport {
        d,
        d_mu,
        d_alpha,
        holds,
        certain,
    })
}

/// Unit counts `(first type, second type)` of a vector.
pub fn unit_counts(v: &[RingElem]) -> (usize, usize) {
    v.iter().fold((0, 0), |(a, b), x| match x.unit_class() {
        UnitClass::Unit1 => (a + 1, b),
        UnitClass::Unit2 => (a, b + 1),
        UnitClass::NonUnit => (a, b),
    })
}

/// Self-orthogonal with `|W|^2 = 4^n`, for a code over a 4-element
/// alphabet.
fn is_self_dual_set<S: Alphabet>(w: &CodewordSet<S>) -> bool {
    let full = (S::ORDER as u128).pow(w.length() as u32);
    w.is_self_orthogonal() && (w.size() as u128).pow(2) == full
}

/// Properties of a self-dual code and its images.
#[derive(Debug, Clone)]
pub struct SelfDualImageReport {
    pub length: usize,
    /// `phi(C)` is formally self-dual over `Z4`.
    pub gray_fsd: bool,
    pub mu_self_orthogonal: bool,
    pub alpha_self_orthogonal: bool,
    pub nu_self_orthogonal: bool,
    /// `phi(C)` is self-dual over `Z4`.
    pub gray_self_dual: bool,
    /// Present when `C` has a generator `[I_n | A]`.
    pub mu_self_dual: Option<bool>,
    pub alpha_self_dual: Option<bool>,
    /// The all-`2u` vector is a codeword.
    pub all_2u_present: bool,
    /// Every codeword has an even number of units of each type.
    pub unit_parity: bool,
}

impl SelfDualImageReport {
    /// Every implication that applies holds.
    pub fn consistent(&self) -> bool {
        self.gray_fsd
            && self.mu_self_orthogonal
            && self.alpha_self_orthogonal
            && (!self.nu_self_orthogonal || self.gray_self_dual)
            && self.mu_self_dual.unwrap_or(true)
            && self.alpha_self_dual.unwrap_or(true)
            && self.all_2u_present
            && self.unit_parity
    }
}

impl fmt::Display for SelfDualImageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<bool>| match x {
            Some(b) => b.to_string(),
            None => "n/a".to_string(),
        };
        writeln!(f, "gray image formally self-dual: {}", self.gray_fsd)?;
        writeln!(f, "mu(C) self-orthogonal: {}", self.mu_self_orthogonal)?;
        writeln!(
            f,
            "alpha(C) self-orthogonal: {}",
            self.alpha_self_orthogonal
        )?;
        writeln!(f, "nu(C) self-orthogonal: {}", self.nu_self_orthogonal)?;
        writeln!(f, "gray image self-dual: {}", self.gray_self_dual)?;
        writeln!(f, "mu(C) self-dual: {}", opt(self.mu_self_dual))?;
        writeln!(f, "alpha(C) self-dual: {}", opt(self.alpha_self_dual))?;
        writeln!(f, "all-2u vector present: {}", self.all_2u_present)?;
        write!(f, "even unit counts: {}", self.unit_parity)
    }
}

/// Checks the image properties of a self-dual code, after confirming it is
/// self-dual.
pub fn self_dual_image_report(code: &LinearCode, budget: u128) -> Result<SelfDualImageReport> {
    if code.self_duality(budget)? != SelfDuality::SelfDual {
        return Err(CodeError::NotSelfDual);
    }
    let n = code.length();
    let words = code.codeword_set(budget)?;
    let img = gray_image(code, budget)?;
    let gray_fsd = z4_formal_duality(&img, budget)?;
    let mu_c = project_mu(code, budget)?;
    let nu_c = project_nu(code, budget)?;
    let alpha_c = project_alpha(code, budget)?;
    let nu_self_orthogonal = nu_c.words.is_self_orthogonal();
    let gray_self_dual = img.self_duality(budget)? == SelfDuality::SelfDual;
    let (mu_self_dual, alpha_self_dual) = if code.is_standard_form() {
        (
            Some(is_self_dual_set(&mu_c.words)),
            Some(is_self_dual_set(&alpha_c.words)),
        )
    } else {
        (None, None)
    };
    let all_2u = vec![RingElem::TWO_U; n];
    let unit_parity = words.iter().all(|c| {
        let (a, b) = unit_counts(c);
        a % 2 == 0 && b % 2 == 0
    });
    Ok(SelfDualImageReport {
        length: n,
        gray_fsd,
        mu_self_orthogonal: mu_c.words.is_self_orthogonal(),
        alpha_self_orthogonal: alpha_c.words.is_self_orthogonal(),
        nu_self_orthogonal,
        gray_self_dual,
        mu_self_dual,
        alpha_self_dual,
        all_2u_present: words.contains(&all_2u),
        unit_parity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{Matrix, DEFAULT_BUDGET, DEFAULT_SAMPLES};

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    fn code(rows: &[&str]) -> LinearCode {
        let rows = rows
            .iter()
            .map(|l| l.split_whitespace().map(r).collect())
            .collect();
        LinearCode::new(Matrix::from_rows(rows).unwrap())
    }

    #[test]
    fn projections_of_u() {
        let c = code(&["01"]);
        let m = project_mu(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(m.size(), 1);
        let n = project_nu(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(n.size(), 4);
        let a = project_alpha(&c, DEFAULT_BUDGET).unwrap();
        let expected = CodewordSet::from_words(1, [vec![F2u::ZERO], vec![F2u::U]]);
        assert_eq!(a.words, expected);
        for p in [&m, &n] {
            assert!(p.is_linear());
        }
        assert!(a.is_linear());
    }

    #[test]
    fn alpha_of_zero_code() {
        let a = project_alpha(&LinearCode::zero(2), DEFAULT_BUDGET).unwrap();
        assert_eq!(a.size(), 1);
        assert!(a.code.is_zero_code());
    }

    #[test]
    fn generator_spans_match_sets() {
        let codes = [
            code(&["10 21 02"]),
            code(&["02 13 00", "01 01 22"]),
            code(&["21 00", "00 02"]),
            code(&["11 30 02"]),
        ];
        for c in &codes {
            for p in [
                project_mu(c, DEFAULT_BUDGET).unwrap(),
                project_nu(c, DEFAULT_BUDGET).unwrap(),
            ] {
                assert_eq!(p.code.codeword_set(DEFAULT_BUDGET).unwrap(), p.words);
                assert!(p.is_linear());
            }
            let a = project_alpha(c, DEFAULT_BUDGET).unwrap();
            assert_eq!(a.code.codeword_set(DEFAULT_BUDGET).unwrap(), a.words);
            assert!(a.is_linear());
        }
    }

    #[test]
    fn lift_check_u_has_zero_mu() {
        let c = code(&["01"]);
        let d = project_mu(&c, DEFAULT_BUDGET).unwrap().code;
        let e = project_alpha(&c, DEFAULT_BUDGET).unwrap().code;
        let t = LiftTriple::new(c, d, e);
        assert!(t.is_lift(DEFAULT_BUDGET).unwrap());
        assert_eq!(
            lift_bound_check(&t, DEFAULT_BUDGET, 0).unwrap_err(),
            CodeError::ZeroCode
        );
    }

    #[test]
    fn lift_check_one() {
        let c = code(&["10"]);
        let d = project_mu(&c, DEFAULT_BUDGET).unwrap().code;
        let e = project_alpha(&c, DEFAULT_BUDGET).unwrap().code;
        let t = LiftTriple::new(c, d, e);
        let rep = lift_bound_check(&t, DEFAULT_BUDGET, DEFAULT_SAMPLES).unwrap();
        assert_eq!(rep.d.weight, 1);
        assert_eq!(rep.d_mu.weight, 1);
        assert!(rep.holds && rep.certain);
    }

    #[test]
    fn wrong_lift_rejected() {
        let c = code(&["10 01"]);
        let d = LinearCode::new(Matrix::from_rows(vec![vec![Z4::ONE, Z4::ONE]]).unwrap());
        let e = project_alpha(&c, DEFAULT_BUDGET).unwrap().code;
        assert!(!LiftTriple::new(c, d, e).is_lift(DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn image_report_u() {
        let c = code(&["01"]);
        let rep = self_dual_image_report(&c, DEFAULT_BUDGET).unwrap();
        assert!(rep.gray_fsd);
        assert!(rep.mu_self_orthogonal);
        assert!(!rep.nu_self_orthogonal);
        assert!(!rep.gray_self_dual);
        assert!(rep.all_2u_present);
        assert!(rep.consistent());
    }

    #[test]
    fn image_report_direct_sums() {
        let u = code(&["01"]);
        let mut c = u.clone();
        for k in 2..=3 {
            c = c.direct_sum(&u);
            let rep = self_dual_image_report(&c, DEFAULT_BUDGET).unwrap();
            assert_eq!(rep.length, k);
            assert!(rep.consistent(), "{rep}");
        }
    }

    #[test]
    fn image_report_requires_self_dual() {
        let c = code(&["10 00"]);
        assert_eq!(
            self_dual_image_report(&c, DEFAULT_BUDGET).unwrap_err(),
            CodeError::NotSelfDual
        );
    }

    #[test]
    fn standard_form_self_dual_projections() {
        // A A^T = -I, found by backtracking over rows of norm 3
        let a = Matrix::from_rows(
            ["00 10 10 10", "10 00 10 30", "10 10 10 20", "10 30 20 30"]
                .iter()
                .map(|l| l.split_whitespace().map(r).collect())
                .collect(),
        )
        .unwrap();
        let c = LinearCode::from_standard(&a);
        assert_eq!(
            c.self_duality(DEFAULT_BUDGET).unwrap(),
            SelfDuality::SelfDual
        );
        let rep = self_dual_image_report(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.mu_self_dual, Some(true));
        assert_eq!(rep.alpha_self_dual, Some(true));
        assert!(rep.consistent(), "{rep}");
    }
}
