use curvelab_core::nielsen::{
    braid_action, braid_inverse, braid_orbits, enumerate_tuples, parse_classes, rh_genus, Perm,
    PermGroup, PermTuple,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Nested loops over every element of the group.
fn brute_force(group: &PermGroup, types: &[Vec<usize>]) -> Vec<Vec<Perm>> {
    let n = group.degree();
    let mut out: Vec<Vec<Perm>> = vec![vec![]];
    for ty in types {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                group
                    .elements()
                    .iter()
                    .filter(|g| &g.cycle_type() == ty)
                    .map(move |g| {
                        let mut v = prefix.clone();
                        v.push(g.clone());
                        v
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.retain(|t| {
        t.iter()
            .fold(Perm::identity(n), |a, s| a.then(s))
            .is_identity()
    });
    out.sort();
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for (name, classes, types) in [
        ("A5", "3cyc^3", vec![vec![3, 1, 1]; 3]),
        ("A4", "3cyc^4", vec![vec![3, 1]; 4]),
        (
            "S4",
            "2cyc^2,2.2,4cyc",
            vec![vec![2, 1, 1], vec![2, 1, 1], vec![2, 2], vec![4]],
        ),
        ("S3", "2cyc^4", vec![vec![2, 1]; 4]),
    ] {
        let g = PermGroup::named(name).unwrap();
        let c = parse_classes(classes).unwrap();
        let mut all: Vec<Vec<Perm>> = enumerate_tuples(&g, &c, false, 1 << 24)
            .unwrap()
            .into_iter()
            .map(|t| t.perms)
            .collect();
        all.sort();
        assert_eq!(all, brute_force(&g, &types), "{name} {classes}");
        let gen = enumerate_tuples(&g, &c, true, 1 << 24).unwrap();
        let expect = all.iter().filter(|t| g.generates(t)).count();
        assert_eq!(gen.len(), expect);
    }
}

#[test]
fn three_cycle_triples_in_a5_are_cyclic() {
    let g = PermGroup::named("A5").unwrap();
    let c = parse_classes("3cyc^3").unwrap();
    assert!(enumerate_tuples(&g, &c, true, 1 << 20).unwrap().is_empty());
    let all = enumerate_tuples(&g, &c, false, 1 << 20).unwrap();
    let cyclic = all.iter().filter(|t| t.perms[0] == t.perms[1]).count();
    assert_eq!(cyclic, 20);
    assert!(all.iter().all(|t| !t.generates));
}

fn assert_invariants_kept(group: &PermGroup, n: usize, t: &PermTuple) {
    let genus = rh_genus(n, t).unwrap();
    for i in 1..t.len() {
        for q in [braid_action(t, i).unwrap(), braid_inverse(t, i).unwrap()] {
            let fresh = PermTuple::new(group, q.perms.clone());
            assert!(fresh.product_one);
            assert_eq!(fresh.generates, t.generates);
            assert_eq!(rh_genus(n, &fresh).unwrap(), genus);
            assert_eq!(fresh.cycle_types(), t.cycle_types());
        }
    }
}

#[test]
fn a5_braid_moves_keep_invariants() {
    let g = PermGroup::named("A5").unwrap();
    let c = parse_classes("3cyc^5").unwrap();
    let ts = enumerate_tuples(&g, &c, true, 1 << 24).unwrap();
    assert!(!ts.is_empty());
    for t in ts.iter().step_by(7) {
        assert_eq!(rh_genus(5, t).unwrap(), 1);
        assert_invariants_kept(&g, 5, t);
    }
    let r = braid_orbits(&g, &ts);
    assert_eq!(r.orbit_sizes.iter().sum::<usize>(), r.closure_class_count);
    // every tuple is generating, so conjugation by A5 acts freely
    assert_eq!(r.class_count * 60, r.tuple_count);
    let mut reversed = ts.clone();
    reversed.reverse();
    let r2 = braid_orbits(&g, &reversed);
    assert_eq!(r.orbit_sizes, r2.orbit_sizes);
    assert_eq!(r.representatives, r2.representatives);
}

#[test]
fn transposition_tuples_in_small_symmetric_groups() {
    for n in [3usize, 4] {
        let g = PermGroup::symmetric(n).unwrap();
        for r in (2..=2 * n).step_by(2) {
            let c = parse_classes(&format!("2cyc^{r}")).unwrap();
            let ts = enumerate_tuples(&g, &c, true, 1 << 24).unwrap();
            // n-1 transpositions are needed to generate S_n
            assert_eq!(ts.is_empty(), r < 2 * n - 2, "n={n} r={r}");
            for t in &ts {
                let genus = rh_genus(n, t).unwrap();
                assert_eq!(r as i64, 2 * n as i64 + 2 * genus - 2);
            }
        }
    }
}

/// Random braid walks from a generating tuple of doubled transpositions.
#[test]
fn sampled_transposition_tuples_in_s5() {
    let g = PermGroup::symmetric(5).unwrap();
    let t = |a: usize, b: usize| Perm::from_cycles(5, &[&[a, b]]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for genus in 0..=2i64 {
        let r = (10 + 2 * genus - 2) as usize;
        let mut perms = Vec::new();
        for k in 0..r / 2 {
            let a = k % 4 + 1;
            perms.push(t(a, a + 1));
            perms.push(t(a, a + 1));
        }
        let mut cur = PermTuple::new(&g, perms);
        assert!(cur.generates && cur.product_one);
        for _ in 0..200 {
            let i = rng.gen_range(1..r);
            cur = if rng.gen_bool(0.5) {
                braid_action(&cur, i).unwrap()
            } else {
                braid_inverse(&cur, i).unwrap()
            };
            let fresh = PermTuple::new(&g, cur.perms.clone());
            assert!(fresh.generates && fresh.product_one);
            assert_eq!(rh_genus(5, &fresh).unwrap(), genus);
            assert_eq!(r as i64, 2 * 5 + 2 * genus - 2);
        }
    }
}
