//! The Gray map `phi: R^n -> Z4^2n`, `a + ub -> (b, a + b)`, and Z4 image
//! codes.

use crate::code::{Matrix, Z4Code};
use crate::error::{CodeError, Result};
use crate::ring::RingElem;
use crate::scalars::Z4;
use crate::wenum::is_formally_self_dual;
use crate::LinearCode;

/// `(b, a + b)` componentwise: first half `b`, second half `a + b`.
pub fn phi(v: &[RingElem]) -> Vec<Z4> {
    let mut out: Vec<Z4> = v.iter().map(|x| x.b()).collect();
    out.extend(v.iter().map(|x| x.a() + x.b()));
    out
}

/// Inverse of [`phi`]: `b` is the first half, `a` the second half minus
/// the first.
pub fn phi_inv(w: &[Z4]) -> Result<Vec<RingElem>> {
    if !w.len().is_multiple_of(2) {
        return Err(CodeError::OddLength(w.len()));
    }
    let n = w.len() / 2;
    Ok((0..n)
        .map(|i| RingElem::from_parts(w[n + i] - w[i], w[i]))
        .collect())
}

/// `phi(C)`, generated over `Z4` by `phi(g)` and `phi(u g)` for each
/// generator row `g`. Its cardinality is `|C|`, which is computed within
/// `budget`.
pub fn gray_image(code: &LinearCode, budget: u128) -> Result<Z4Code> {
    let size = code.cardinality(budget)?;
    let mut rows = Vec::with_capacity(2 * code.dimension_rows());
    for g in code.generator().row_iter() {
        rows.push(phi(g));
        let ug: Vec<RingElem> = g.iter().map(|&x| RingElem::U * x).collect();
        rows.push(phi(&ug));
    }
    Ok(LinearCode::new(Matrix::from_rows(rows)?).with_cardinality(size))
}

/// Whether the Lee enumerator of `d` is fixed by the Z4 Lee MacWilliams
/// transform.
pub fn z4_formal_duality(d: &Z4Code, budget: u128) -> Result<bool> {
    is_formally_self_dual(d, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{lee_weight, CodewordSet, DEFAULT_BUDGET};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    fn z(v: &[u8]) -> Vec<Z4> {
        v.iter().map(|&x| Z4::new(x)).collect()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&[r("12")]), z(&[2, 3]));
        assert_eq!(phi(&[r("01")]), z(&[1, 1]));
        assert_eq!(phi(&[r("02"), r("00")]), z(&[2, 0, 2, 0]));
        assert_eq!(phi_inv(&z(&[2, 3])).unwrap(), vec![r("12")]);
        assert_eq!(phi_inv(&z(&[0, 0])).unwrap(), vec![r("00")]);
        assert_eq!(phi_inv(&z(&[1, 0])).unwrap(), vec![r("31")]);
        assert_eq!(phi(&[r("31")]), z(&[1, 0]));
        assert_eq!(phi_inv(&z(&[1, 2, 3])), Err(CodeError::OddLength(3)));
    }

    #[test]
    fn isometry_and_bijection_n1() {
        let mut seen = std::collections::BTreeSet::new();
        for x in RingElem::all() {
            let w = phi(&[x]);
            assert_eq!(lee_weight(&w), x.lee_weight());
            assert_eq!(phi_inv(&w).unwrap(), vec![x]);
            seen.insert(w);
            for y in RingElem::all() {
                let sum: Vec<Z4> = phi(&[x])
                    .iter()
                    .zip(phi(&[y]))
                    .map(|(a, b)| *a + b)
                    .collect();
                assert_eq!(phi(&[x + y]), sum);
            }
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn scalar_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(1..=8);
            let v: Vec<RingElem> = (0..n)
                .map(|_| RingElem::from_index(rng.gen_range(0..16)))
                .collect();
            for c in 0..4u8 {
                let cv: Vec<RingElem> = v.iter().map(|&x| RingElem::new(c, 0) * x).collect();
                let cphi: Vec<Z4> = phi(&v).into_iter().map(|x| Z4::new(c) * x).collect();
                assert_eq!(phi(&cv), cphi);
            }
        }
    }

    #[test]
    fn image_of_u() {
        let c = LinearCode::new(Matrix::from_rows(vec![vec![r("01")]]).unwrap());
        let img = gray_image(&c, DEFAULT_BUDGET).unwrap();
        let words = img.codeword_set(DEFAULT_BUDGET).unwrap();
        let expected = CodewordSet::from_words(2, (0..4u8).map(|x| z(&[x, x])));
        assert_eq!(words, expected);
        assert!(z4_formal_duality(&img, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn image_of_zero_code() {
        let img = gray_image(&LinearCode::zero(3), DEFAULT_BUDGET).unwrap();
        assert!(img.is_zero_code());
        assert_eq!(img.length(), 6);
        assert_eq!(img.cardinality(DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn image_equals_pointwise_image() {
        let c = LinearCode::new(
            Matrix::from_rows(vec![vec![r("10"), r("21")], vec![r("02"), r("00")]]).unwrap(),
        );
        let img = gray_image(&c, DEFAULT_BUDGET).unwrap();
        let pointwise =
            CodewordSet::from_words(4, c.codewords(DEFAULT_BUDGET).unwrap().map(|w| phi(&w)));
        let span = CodewordSet::from_words(
            4,
            crate::code::Odometer::<Z4>::new(img.dimension_rows()).map(|m| img.encode(&m)),
        );
        assert_eq!(span, pointwise);
        assert_eq!(
            img.cardinality(DEFAULT_BUDGET).unwrap(),
            pointwise.size() as u128
        );
    }

    #[test]
    fn z4_duality_examples() {
        // the dual of the full space is the zero code
        let full = LinearCode::<Z4>::new(Matrix::identity(2));
        assert!(!z4_formal_duality(&full, DEFAULT_BUDGET).unwrap());
        assert_eq!(full.dual_bruteforce(DEFAULT_BUDGET).unwrap().size(), 1);
        let two = LinearCode::new(Matrix::from_rows(vec![z(&[2, 0])]).unwrap());
        assert!(!z4_formal_duality(&two, DEFAULT_BUDGET).unwrap());
        assert_eq!(two.dual_bruteforce(DEFAULT_BUDGET).unwrap().size(), 8);
    }
}
