use curvelab_core::pagot::{
    divisibility_necessity_check, elementary_family, example1_form, pagot_pair_check, pagot_search,
    pair_forms, verify_lspace, LSpaceCandidate, LogForm, LogFormRecord, Verdict,
};
use curvelab_core::{Error, Field, Poly};
use proptest::prelude::*;

fn f9() -> Field {
    Field::new(3, 2).unwrap()
}

#[test]
fn family_over_f9_verifies() {
    let f = f9();
    let fam = elementary_family(&f, &[f.one(), f.gen()]).unwrap();
    assert_eq!(fam.m + 1, 6);
    assert!(fam.basis.iter().all(|w| w.pole_count() == 6));
    assert_eq!(fam.verdict, Verdict::Pass);
    let r = divisibility_necessity_check(&fam.candidate);
    assert!(r.theorem_holds && r.conjecture_holds);
    assert!(r.common_poles_match());
}

#[test]
fn three_parameter_family_has_predicted_common_poles() {
    let f = Field::new(3, 3).unwrap();
    let g = f.gen();
    let fam = elementary_family(&f, &[f.one(), g, f.mul(g, g)]).unwrap();
    assert_eq!(fam.m + 1, 18);
    assert!(fam.verdict.is_pass());
    let r = divisibility_necessity_check(&fam.candidate);
    assert_eq!(r.common_poles, 8);
    assert!(r.common_poles_match());
}

#[test]
fn dependent_parameters_are_rejected() {
    let f = f9();
    let two = f.from_int(2);
    assert!(matches!(
        elementary_family(&f, &[f.one(), two]),
        Err(Error::DegenerateParameters(_))
    ));
    assert!(elementary_family(&f, &[f.one()]).is_err());
}

#[test]
fn affine_images_of_a_family_still_verify() {
    let f = f9();
    let fam = elementary_family(&f, &[f.one(), f.gen()]).unwrap();
    for (a, b) in [(2u64, 0u64), (4, 1), (7, 5), (1, 8)] {
        let (a, b) = (f.elem(a).unwrap(), f.elem(b).unwrap());
        let moved: Vec<LogForm> = fam
            .basis
            .iter()
            .map(|w| w.affine_image(a, b).unwrap())
            .collect();
        let c = LSpaceCandidate::from_logforms(&moved).unwrap();
        assert!(verify_lspace(&c).is_pass());
        // pulling back along the same map undoes the pole motion
        for (w, orig) in moved.iter().zip(&fam.basis) {
            assert_eq!(w.to_rational().pullback(a, b), orig.to_rational());
        }
    }
}

#[test]
fn pair_witnesses_pass_both_checks() {
    let s = pagot_search(3, 5, 2, 1 << 20).unwrap();
    assert!(!s.exhausted());
    for (a, b) in &s.witnesses {
        let check = pagot_pair_check(a, b, 5).unwrap();
        assert!(check.pass());
        assert_eq!(check.lspace, Some(Verdict::Pass));
    }
    let again = pagot_search(3, 5, 2, 1 << 20).unwrap();
    assert_eq!(s.witnesses, again.witnesses);
}

#[test]
fn no_pair_for_smallest_degree() {
    for k in [1, 2] {
        let s = pagot_search(3, 2, k, 1 << 20).unwrap();
        assert!(s.exhausted(), "k = {k}");
    }
    assert!(matches!(
        pagot_search(3, 8, 3, 1000),
        Err(Error::BudgetExceeded(_))
    ));
    assert!(matches!(
        pagot_search(3, 3, 2, 1000),
        Err(Error::DegreeMismatch(_))
    ));
}

/// Over `F_4` with `d = 1`, the pair criterion and direct verification agree
/// on every pair passing the degree condition.
#[test]
fn pair_criterion_matches_direct_verification_in_char_2() {
    let f = Field::new(2, 2).unwrap();
    let q = f.order();
    for idx in 0..q.pow(4) {
        let c: Vec<_> = (0..4)
            .map(|i| f.elem(idx / q.pow(i) % q).unwrap())
            .collect();
        let a = Poly::new(&f, vec![c[0], c[1]]);
        let b = Poly::new(&f, vec![c[2], c[3]]);
        let Ok(check) = pagot_pair_check(&a, &b, 1) else {
            continue;
        };
        if !check.degrees_ok {
            continue;
        }
        let (w0, w1) = pair_forms(&a, &b);
        let direct = verify_lspace(&LSpaceCandidate::new(1, vec![w0, w1]).unwrap());
        assert_eq!(check.identity_ok, direct.is_pass(), "A = {a}, B = {b}");
    }
}

#[test]
fn example_one_forms() {
    for p in [2u64, 3, 5] {
        for m in [1usize, 2, 4] {
            if (m as u64).is_multiple_of(p) {
                assert!(example1_form(p, m).is_err());
                continue;
            }
            let c = LSpaceCandidate::new(m, vec![example1_form(p, m).unwrap()]).unwrap();
            assert!(verify_lspace(&c).is_pass(), "p={p} m={m}");
        }
    }
}

#[test]
fn record_round_trip() {
    let f = f9();
    let w = LogForm::new(&f, vec![f.zero(), f.one(), f.gen()], vec![1, 1, 1]).unwrap();
    let r = LogFormRecord::from_form(&w);
    let json = serde_json::to_string(&r).unwrap();
    let back: LogFormRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(back.to_form().unwrap(), w);
}

fn logform_strategy() -> impl Strategy<Value = LogForm> {
    (
        prop::sample::subsequence((0..9u64).collect::<Vec<_>>(), 2..7),
        prop::collection::vec(1u64..3, 7),
    )
        .prop_map(|(poles, res)| {
            let f = f9();
            let poles: Vec<_> = poles.into_iter().map(|i| f.elem(i).unwrap()).collect();
            let res = res[..poles.len()].to_vec();
            LogForm::new(&f, poles, res).unwrap()
        })
}

proptest! {
    /// A single log form spans a space exactly when its residue power sums
    /// vanish up to `m-1`.
    #[test]
    fn single_forms_match_power_sums(w in logform_strategy()) {
        let c = LSpaceCandidate::from_logforms(std::slice::from_ref(&w)).unwrap();
        prop_assert_eq!(verify_lspace(&c).is_pass(), w.power_sums_vanish(w.pole_count() - 2));
    }

    #[test]
    fn affine_maps_preserve_power_sum_vanishing(w in logform_strategy(), a in 1u64..9, b in 0u64..9) {
        let f = f9();
        let moved = w.affine_image(f.elem(a).unwrap(), f.elem(b).unwrap()).unwrap();
        let m1 = w.pole_count() - 2;
        prop_assert_eq!(moved.power_sums_vanish(m1), w.power_sums_vanish(m1));
    }
}
