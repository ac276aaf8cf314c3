//! Randomized invariants over the catalog generators.

use proptest::prelude::*;

use knotscope::alexander::alexander_polynomial;
use knotscope::analyze::{verify_main_theorem, TheoremVerdict};
use knotscope::catalog::{connect_sum, rational_cf, torus_two_strand};
use knotscope::diagram::Sign;
use knotscope::floer::{
    check_ag_bound, check_trapezoidal, delta_exp, hf_plus_descriptors, prop22_implication,
};
use knotscope::graphs::torus_sum_decomposition;
use knotscope::invariants::{goeritz_determinant, signature, tau};
use knotscope::seifert::{murasugi_decompose, murasugi_desum, SeifertData};
use knotscope::Diagram;

fn digits() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 1..=5)
}

/// Numerator of the continued fraction, computed independently of the
/// library: the two-bridge determinant.
fn continuant(digits: &[u32]) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for (i, &a) in digits.iter().enumerate() {
        let next = if i == 0 { a as u64 } else { a as u64 * cur + prev };
        prev = cur;
        cur = next;
    }
    cur
}

fn knot_from_digits(digits: &[u32]) -> Option<Diagram> {
    let d = rational_cf(digits).expect("continued fractions build");
    if d.is_knot() && d.is_reduced() { Some(d) } else { None }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_diagrams_cross_check(ds in digits()) {
        let Some(d) = knot_from_digits(&ds) else { return Ok(()); };
        prop_assert!(d.is_alternating());
        prop_assert!(d.is_connected());
        prop_assert_eq!(d.face_count(), d.crossing_count() + 2);

        let a = alexander_polynomial(&d).unwrap();
        let s = SeifertData::new(&d).unwrap();
        prop_assert_eq!(a.genus(), s.genus(&d).unwrap());

        let det = continuant(&ds) as i64;
        prop_assert_eq!(a.determinant(), det);
        prop_assert_eq!(goeritz_determinant(&d).unwrap(), det);

        let sigma = signature(&d).unwrap();
        prop_assert_eq!(signature(&d.mirror()).unwrap(), -sigma);
        let t = tau(&d).unwrap();
        prop_assert!(t.abs() <= a.genus());
    }

    #[test]
    fn rational_diagrams_satisfy_the_coefficient_bounds(ds in digits()) {
        let Some(d) = knot_from_digits(&ds) else { return Ok(()); };
        let a = alexander_polynomial(&d).unwrap();
        let t = tau(&d).unwrap();

        let shape = check_trapezoidal(&a);
        prop_assert!(shape.monotone_ok && shape.plateau_ok);
        for row in hf_plus_descriptors(&a, t).unwrap() {
            prop_assert!(row.b >= 0);
        }
        if a.genus() >= 1 {
            prop_assert!(check_ag_bound(&a, t).pass);
            if shape.top_equality {
                prop22_implication(&a, t).unwrap();
            }
        }
        let verdict = verify_main_theorem("random", &d).unwrap().verdict;
        let failed = matches!(verdict, TheoremVerdict::Failed { .. });
        prop_assert!(!failed);
    }

    #[test]
    fn torus_diagrams_are_their_own_summand(j in 1usize..=5, positive in any::<bool>()) {
        let k = 2 * j + 1;
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        let d = torus_two_strand(k, sign);
        let summands = torus_sum_decomposition(&d).unwrap();
        prop_assert_eq!(summands.len(), 1);
        prop_assert_eq!(summands[0].k, k);
        prop_assert_eq!(summands[0].sign, sign);

        let expected_sigma = if positive { -((k as i64) - 1) } else { (k as i64) - 1 };
        prop_assert_eq!(signature(&d).unwrap(), expected_sigma);
        prop_assert_eq!(tau(&d).unwrap(), -expected_sigma / 2);
    }

    #[test]
    fn connected_sums_compose(ds1 in digits(), ds2 in digits()) {
        let (Some(d1), Some(d2)) = (knot_from_digits(&ds1), knot_from_digits(&ds2)) else {
            return Ok(());
        };
        let sum = connect_sum(&d1, &d2).unwrap();
        prop_assert!(sum.is_knot());

        let (a1, a2) = (alexander_polynomial(&d1).unwrap(), alexander_polynomial(&d2).unwrap());
        let a = alexander_polynomial(&sum).unwrap();
        let product = a1.mul(&a2);
        prop_assert_eq!(a.coeffs(), product.coeffs());
        prop_assert_eq!(a.genus(), a1.genus() + a2.genus());
        prop_assert_eq!(
            signature(&sum).unwrap(),
            signature(&d1).unwrap() + signature(&d2).unwrap()
        );

        let pieces = murasugi_decompose(&sum).unwrap();
        let total: usize = pieces.iter().map(Diagram::crossing_count).sum();
        prop_assert_eq!(total, sum.crossing_count());
        let fibered_pieces = pieces
            .iter()
            .all(|p| knotscope::graphs::is_fibered_special(p).unwrap());
        prop_assert_eq!(a.is_fibered(), fibered_pieces);
    }

    #[test]
    fn desum_conserves_circles_and_crossings(ds in digits()) {
        let Some(d) = knot_from_digits(&ds) else { return Ok(()); };
        let s = SeifertData::new(&d).unwrap();
        for c in s.extremal_nested_circles() {
            let (left, right) = murasugi_desum(&d, c).unwrap();
            prop_assert_eq!(
                left.crossing_count() + right.crossing_count(),
                d.crossing_count()
            );
            let sl = SeifertData::new(&left).unwrap();
            let sr = SeifertData::new(&right).unwrap();
            prop_assert_eq!(sl.circle_count() + sr.circle_count(), s.circle_count() + 1);
        }
    }

    #[test]
    fn tower_exponent_vanishes_exactly_outside_the_interval(t in -20i64..=20, s in -20i64..=20) {
        prop_assert_eq!(delta_exp(t, s) == 0, s.abs() >= t.abs());
        prop_assert!(delta_exp(t, s) >= 0);
        // Mirror symmetry of the formula in both arguments.
        prop_assert_eq!(delta_exp(t, s), delta_exp(-t, s));
        prop_assert_eq!(delta_exp(t, s), delta_exp(t, -s));
    }
}
