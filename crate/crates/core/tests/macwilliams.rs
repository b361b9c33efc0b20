mod common;

use common::{code, macwilliams_family, u_sum};
use proptest::prelude::*;
use z4u_core::code::{Matrix, DEFAULT_BUDGET};
use z4u_core::wenum::{
    cwe, cwe_to_swe, is_formally_self_dual, lee, macwilliams_check, macwilliams_lee, swe_to_lee,
};
use z4u_core::{LinearCode, RingElem};

#[test]
fn family_satisfies_all_transforms() {
    for c in macwilliams_family() {
        let m = macwilliams_check(&c, DEFAULT_BUDGET).unwrap();
        assert!(m.pass(), "{:?}: {m:?}", c.generator());
        assert_eq!(m.swe_equal, Some(true));
    }
}

#[test]
fn transform_is_an_involution() {
    for c in macwilliams_family().iter().take(300) {
        let p = lee(c, DEFAULT_BUDGET).unwrap();
        let size = c.cardinality(DEFAULT_BUDGET).unwrap();
        let q = macwilliams_lee(&p, size).unwrap();
        let back = macwilliams_lee(&q, 16u128.pow(c.length() as u32) / size).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn u_sums_are_formally_self_dual() {
    for k in 1..=3 {
        assert!(is_formally_self_dual(&u_sum(k), DEFAULT_BUDGET).unwrap());
    }
    assert!(!is_formally_self_dual(&code(&["20 00"]), DEFAULT_BUDGET).unwrap());
}

fn arb_code(max_k: usize, max_n: usize) -> impl Strategy<Value = LinearCode> {
    (1..=max_k, 1..=max_n).prop_flat_map(|(k, n)| {
        prop::collection::vec(prop::collection::vec(0usize..16, n), k).prop_map(|rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(RingElem::from_index).collect())
                .collect();
            LinearCode::new(Matrix::from_rows(rows).unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_codes_satisfy_macwilliams(c in arb_code(3, 3)) {
        let m = macwilliams_check(&c, DEFAULT_BUDGET).unwrap();
        prop_assert!(m.pass());
    }

    #[test]
    fn enumerator_tower_commutes(c in arb_code(3, 4)) {
        let e = cwe(&c, DEFAULT_BUDGET).unwrap();
        let l = lee(&c, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(swe_to_lee(&cwe_to_swe(&e)), l);
        prop_assert_eq!(e.total(), c.cardinality(DEFAULT_BUDGET).unwrap());
    }
}
