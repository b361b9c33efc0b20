//! Shared inputs for the criterion benchmarks.

use z4u_core::construct::{TableRow, DC_TABLE};
use z4u_core::{LinearCode, RingElem};

/// Code of the double circulant table row of the given length.
pub fn table2_code(length: usize) -> LinearCode {
    DC_TABLE
        .iter()
        .find(|r: &&TableRow| r.length == length)
        .expect("tabulated length")
        .spec()
        .code()
        .expect("valid row")
}

/// Deterministic vectors of length `n`.
pub fn mixed_vectors(n: usize, count: usize) -> Vec<Vec<RingElem>> {
    (0..count)
        .map(|i| {
            (0..n)
                .map(|j| RingElem::from_index((i * 7 + j * 13 + i * j) % 16))
                .collect()
        })
        .collect()
}
