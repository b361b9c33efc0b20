//! Helpers shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use z4u_core::code::Matrix;
use z4u_core::{LinearCode, RingElem};

pub const SUITE_SEED: u64 = 0x5eed_0000_0000_0003;

pub fn r(s: &str) -> RingElem {
    s.parse().unwrap()
}

pub fn code(rows: &[&str]) -> LinearCode {
    let rows = rows
        .iter()
        .map(|l| l.split_whitespace().map(r).collect())
        .collect();
    LinearCode::new(Matrix::from_rows(rows).unwrap())
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<RingElem> {
    (0..n)
        .map(|_| RingElem::from_index(rng.gen_range(0..16)))
        .collect()
}

pub fn random_code(rng: &mut ChaCha8Rng, k: usize, n: usize) -> LinearCode {
    let rows = (0..k).map(|_| random_vec(rng, n)).collect();
    LinearCode::new(Matrix::from_rows(rows).unwrap())
}

/// `<u>` repeated `k` times.
pub fn u_sum(k: usize) -> LinearCode {
    let u = code(&["01"]);
    let mut c = u.clone();
    for _ in 1..k {
        c = c.direct_sum(&u);
    }
    c
}

/// Every single-row code of length 1 and 2, `<u>`, `<u> + <u>`, and 50
/// seeded random 2-row codes of length 3.
pub fn macwilliams_family() -> Vec<LinearCode> {
    let mut out = Vec::new();
    for x in RingElem::all() {
        out.push(LinearCode::new(Matrix::from_rows(vec![vec![x]]).unwrap()));
    }
    for x in RingElem::all() {
        for y in RingElem::all() {
            out.push(LinearCode::new(
                Matrix::from_rows(vec![vec![x, y]]).unwrap(),
            ));
        }
    }
    out.push(u_sum(1));
    out.push(u_sum(2));
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    for _ in 0..50 {
        out.push(random_code(&mut rng, 2, 3));
    }
    out
}
