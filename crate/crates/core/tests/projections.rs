mod common;

use common::u_sum;
use proptest::prelude::*;
use z4u_core::code::{Matrix, DEFAULT_BUDGET, DEFAULT_SAMPLES};
use z4u_core::project::{
    alpha_generators, lift_bound_check, mu_generators, nu_generators, project_alpha, project_mu,
    project_nu, self_dual_image_report, LiftTriple,
};
use z4u_core::{LinearCode, RingElem};

fn arb_code() -> impl Strategy<Value = LinearCode> {
    (1..=3usize, 1..=4usize).prop_flat_map(|(k, n)| {
        prop::collection::vec(prop::collection::vec(0usize..16, n), k).prop_map(|rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(RingElem::from_index).collect())
                .collect();
            LinearCode::new(Matrix::from_rows(rows).unwrap())
        })
    })
}

#[test]
fn self_dual_images() {
    for k in 1..=3 {
        let rep = self_dual_image_report(&u_sum(k), DEFAULT_BUDGET).unwrap();
        assert!(rep.consistent(), "{rep}");
        assert!(rep.all_2u_present && rep.unit_parity);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projections_are_spanned_by_generator_images(c in arb_code()) {
        let n = c.length();
        let m = project_mu(&c, DEFAULT_BUDGET).unwrap();
        let v = project_nu(&c, DEFAULT_BUDGET).unwrap();
        let a = project_alpha(&c, DEFAULT_BUDGET).unwrap();
        prop_assert!(m.is_linear() && v.is_linear() && a.is_linear());
        let span = LinearCode::spanned_by(mu_generators(&c), n).unwrap();
        prop_assert_eq!(span.codeword_set(DEFAULT_BUDGET).unwrap(), m.words);
        let span = LinearCode::spanned_by(nu_generators(&c), n).unwrap();
        prop_assert_eq!(span.codeword_set(DEFAULT_BUDGET).unwrap(), v.words);
        let span = LinearCode::spanned_by(alpha_generators(&c), n).unwrap();
        prop_assert_eq!(span.codeword_set(DEFAULT_BUDGET).unwrap(), a.words);
    }

    #[test]
    fn lifts_obey_the_distance_bound(c in arb_code()) {
        let d = project_mu(&c, DEFAULT_BUDGET).unwrap().code;
        let e = project_alpha(&c, DEFAULT_BUDGET).unwrap().code;
        prop_assume!(!d.is_zero_code() && !e.is_zero_code());
        let t = LiftTriple::new(c, d, e);
        prop_assert!(t.is_lift(DEFAULT_BUDGET).unwrap());
        let rep = lift_bound_check(&t, DEFAULT_BUDGET, DEFAULT_SAMPLES).unwrap();
        prop_assert!(rep.holds && rep.certain && rep.d.exact);
    }
}
