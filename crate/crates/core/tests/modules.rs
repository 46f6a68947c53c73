//! Dieudonné catalog and Artin–Schreier translation groups.

use curvelab_core::artin_schreier::{
    as_reduce, big_action_report, translation_group, twisted_additive_product, ASCurve,
};
use curvelab_core::dieudonne::{parse_sum, preset, DieudonneModule, PRESET_NAMES};
use curvelab_core::{Field, Poly};
use num_rational::Ratio;
use proptest::prelude::*;

#[test]
fn catalog_table() {
    let f = Field::prime(5).unwrap();
    let table = [
        ("Zp+mup", 2, 1, 0),
        ("alphap", 1, 0, 1),
        ("M", 2, 0, 1),
        ("N", 4, 0, 1),
        ("Q", 6, 0, 1),
        ("M^2", 4, 0, 2),
        ("M^3", 6, 0, 3),
        ("N,(Zp+mup)^2", 8, 2, 1),
    ];
    for (name, dim, f_rank, a) in table {
        let text = name.replace("(Zp+mup)^2", "Zp,mup,Zp,mup");
        let m = parse_sum(&f, &text).unwrap();
        assert_eq!(
            (m.dim(), m.p_rank(), m.a_number()),
            (dim, f_rank, a),
            "{name}"
        );
    }
}

#[test]
fn n_filtration_dimensions() {
    let n = preset(&Field::prime(3).unwrap(), "N").unwrap();
    assert_eq!(n.ker_f_dim(), 2);
    assert_eq!(n.ker_v_dim(), 2);
    assert_eq!(n.a_number(), 1);
    // ker F + ker V = 2 + 2 - 1
    assert_eq!(n.ker_f_dim() + n.ker_v_dim() - n.a_number(), 3);
    assert_eq!(n.image_sum_dim(), 3);
}

fn catalog_module(field: &Field) -> impl Strategy<Value = DieudonneModule> + '_ {
    prop::collection::vec(0..PRESET_NAMES.len(), 1..4).prop_map(move |idx| {
        let names: Vec<&str> = idx.iter().map(|&i| PRESET_NAMES[i]).collect();
        parse_sum(field, &names.join(",")).unwrap()
    })
}

proptest! {
    #[test]
    fn fv_vanishes_and_invariants_add(a in catalog_module(&Field::new(3, 2).unwrap()), b in catalog_module(&Field::new(3, 2).unwrap())) {
        let s = a.direct_sum(&b).unwrap();
        prop_assert!(s.fv().is_zero() && s.vf().is_zero());
        prop_assert_eq!(s.a_number(), a.a_number() + b.a_number());
        prop_assert_eq!(s.p_rank(), a.p_rank() + b.p_rank());
        prop_assert_eq!(s.dim(), a.dim() + b.dim());
    }
}

#[test]
fn self_dual_entries_have_small_p_rank() {
    let f = Field::prime(7).unwrap();
    for name in ["Zp+mup", "alphap", "M", "N", "Q", "M^3"] {
        let m = parse_sum(&f, name).unwrap();
        assert!(2 * m.p_rank() <= m.dim(), "{name}");
    }
}

#[test]
fn field_mismatch_in_sums() {
    let a = preset(&Field::prime(3).unwrap(), "M").unwrap();
    let b = preset(&Field::prime(5).unwrap(), "M").unwrap();
    assert!(a.direct_sum(&b).is_err());
}

fn poly_strategy(p: u64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..p as i64, 0..14).prop_map(move |c| {
        let f = Field::prime(p).unwrap();
        Poly::from_ints(&f, &c)
    })
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_additive((p, h1, h2) in prop::sample::select(vec![2u64, 3, 5])
        .prop_flat_map(|p| (Just(p), poly_strategy(p), poly_strategy(p))))
    {
        let (r1, _) = as_reduce(&h1);
        let (r2, _) = as_reduce(&h2);
        prop_assert_eq!(as_reduce(&r1).0, r1.clone());
        prop_assert!(r1.degree().unwrap_or(0) <= h1.degree().unwrap_or(0));
        prop_assert_eq!(as_reduce(&(&h1 + &h2)).0, &r1 + &r2);
        if let Some(d) = r1.degree() {
            prop_assert!(!(d as u64).is_multiple_of(p));
        }
    }
}

#[test]
fn genus_formula_and_subspace_witnesses() {
    for (p, coeffs, ext) in [
        (2u64, vec![0, 1, 0, 1, 0, 1], 4usize),
        (3, vec![0, 1, 1, 0, 1], 2),
        (3, vec![0, 0, 0, 0, 1], 4),
        (5, vec![0, 1, 0, 0, 0, 0, 1], 2),
    ] {
        let f = Field::prime(p).unwrap();
        let c = ASCurve::new(&Poly::from_ints(&f, &coeffs)).unwrap();
        assert_eq!(c.genus(), (p as usize - 1) * (c.degree() - 1) / 2);
        let t = translation_group(&c, ext).unwrap();
        assert!(t.witnesses.contains(&t.field.zero()));
        let set: std::collections::HashSet<_> = t.witnesses.iter().copied().collect();
        for &a in &t.witnesses {
            for &b in &t.witnesses {
                assert!(set.contains(&t.field.add(a, b)));
            }
        }
        assert_eq!(t.group_order, p.pow(t.n as u32));
    }
}

#[test]
fn additive_products_saturate() {
    for (p, s) in [(2u64, 1u32), (2, 2), (3, 1)] {
        let f = twisted_additive_product(p, s).unwrap();
        let c = ASCurve::new(&f).unwrap();
        let full = p.pow(2 * s);
        let t = translation_group(&c, 2 * s as usize).unwrap();
        assert_eq!(t.group_order, full);
        for ext in [2 * s + 2, 4 * s] {
            if (ext as usize).is_multiple_of(f.field().k()) {
                let t2 = translation_group(&c, ext as usize).unwrap();
                assert!(t2.group_order <= full);
                if ext % (2 * s) == 0 {
                    assert_eq!(t2.group_order, full);
                }
            }
        }
        let r = big_action_report(&c, t.sylow_order).unwrap();
        let pi = p as i64;
        assert_eq!(r.ratio2, Ratio::new(4 * pi, (pi - 1) * (pi - 1)));
    }
}

#[test]
fn untwisted_products_over_prime_field() {
    for (p, s) in [(2u64, 1u32), (2, 2), (3, 1)] {
        let f = Field::prime(p).unwrap();
        let d = p.pow(s) as usize + 1;
        let c = ASCurve::new(&Poly::monomial(&f, f.one(), d)).unwrap();
        let full = p.pow(2 * s);
        let at_2s = translation_group(&c, 2 * s as usize).unwrap().group_order;
        let at_4s = translation_group(&c, 4 * s as usize).unwrap().group_order;
        assert_eq!(at_4s, full);
        if p == 2 {
            assert_eq!(at_2s, full);
        } else {
            assert_eq!(at_2s, 1);
        }
    }
}
