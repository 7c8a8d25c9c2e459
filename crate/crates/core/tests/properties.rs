use fsind::cosets::{census_sl_normal_forms, is_null_coset_sl, normal_form_sl_with_witness, right_transversal};
use fsind::group::{alt, cyclic, sym, sym_embed};
use fsind::indicators::TableCache;
use fsind::*;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v.iter().map(|x| x + 1).collect::<Vec<_>>()).unwrap())
}

fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]),
        prop::collection::vec(-4i64..=4, 1..8),
    )
        .prop_map(|(n, v)| Cyclotomic::from_int_exponents(n, &v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in perm(7), b in perm(7), c in perm(7)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn inverse_and_sign(a in perm(8), b in perm(8)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
        prop_assert_eq!(a.cycle_type().iter().sum::<usize>(), 8);
        prop_assert!(a.pow(a.order() as i64).is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(a in perm(9)) {
        let text = a.to_string();
        prop_assert_eq!(Permutation::parse_with_degree(&text, 9).unwrap(), a);
    }

    #[test]
    fn conjugation_preserves_cycle_type(a in perm(7), x in perm(7)) {
        let y = a.conjugate(&x).unwrap();
        prop_assert_eq!(y.cycle_type(), x.cycle_type());
        // a ▷ x = a x a⁻¹
        let direct = a.compose(&x).unwrap().compose(&a.inverse()).unwrap();
        prop_assert_eq!(y, direct);
    }

    #[test]
    fn cyclotomic_field_laws(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn membership_matches_sign(a in perm(6)) {
        prop_assert_eq!(alt(6).unwrap().contains(&a), a.sign() == 1);
        prop_assert!(sym(6).unwrap().contains(&a));
    }

    #[test]
    fn canonical_coset_rep_is_coset_invariant(a in perm(7), k in 0usize..120) {
        let h = sym_embed(5, 7).unwrap();
        let elems = h.elements(&Limits::default()).unwrap();
        let x = &elems[k % elems.len()];
        let ax = a.compose(x).unwrap();
        prop_assert_eq!(h.canonical_left_coset_rep(&a), h.canonical_left_coset_rep(&ax));
        prop_assert!(h.contains(&a.inverse().compose(&h.canonical_left_coset_rep(&a)).unwrap()));
    }

    #[test]
    fn normal_form_stays_in_double_coset(a in perm(8), l in 2usize..7) {
        let (nf, w) = normal_form_sl_with_witness(&a, l).unwrap();
        prop_assert_eq!(a.compose(&w).unwrap(), nf.clone());
        prop_assert!(sym_embed(l, 8).unwrap().contains(&w));
        prop_assert_eq!(is_null_coset_sl(&a, l).unwrap(), is_null_coset_sl(&nf, l).unwrap());
    }

    /// Indicator values depend only on the coset `gH`, not on the representative.
    #[test]
    fn indicators_independent_of_representative(a in perm(6), k in 0usize..6) {
        let h = sym_embed(3, 6).unwrap();
        let lim = Limits::default();
        let elems = h.elements(&lim).unwrap();
        let b = a.compose(&elems[k % elems.len()]).unwrap();
        let cache = TableCache::new(1);
        let va: Vec<i64> = SimpleObject::all_over(&a, &h, &cache, &lim).unwrap().iter().map(|o| o.nu(2, &lim).unwrap()).collect();
        let vb: Vec<i64> = SimpleObject::all_over(&b, &h, &cache, &lim).unwrap().iter().map(|o| o.nu(2, &lim).unwrap()).collect();
        prop_assert_eq!(va, vb);
    }
}

#[test]
fn double_coset_sizes_partition_group() {
    let lim = Limits::default();
    for (g, h) in [
        (sym(6).unwrap(), sym_embed(3, 6).unwrap()),
        (sym(7).unwrap(), cyclic(7).unwrap()),
        (alt(6).unwrap(), alt(5).unwrap().extend_to(6).unwrap()),
    ] {
        let dc = double_cosets(&g, &h, &lim).unwrap();
        let total: u128 = dc.cosets().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
        let t = right_transversal(&g, &h, &lim).unwrap();
        assert_eq!(t.len() as u128 * h.order(), g.order());
        assert!(dc.cosets()[0].representative.is_identity());
    }
}

#[test]
fn census_is_stable_across_methods_and_seeds() {
    for (l, n) in [(2, 5), (3, 6), (4, 7), (5, 7)] {
        let a = census_sl(l, n, &Limits::default()).unwrap();
        let b = census_sl_normal_forms(l, n, &Limits::default()).unwrap();
        let c = census_sl(
            l,
            n,
            &Limits {
                seed: 99,
                ..Limits::default()
            },
        )
        .unwrap();
        assert_eq!((a.total, a.null), (b.total, b.null));
        assert_eq!((a.total, a.null), (c.total, c.null));
    }
}

#[test]
fn scans_are_seed_independent() {
    let g = sym(6).unwrap();
    let h = cyclic(6).unwrap();
    let a = Scanner::new(Limits::default()).scan(&g, &h, 2).unwrap();
    let b = Scanner::new(Limits {
        seed: 12345,
        ..Limits::default()
    })
    .scan(&g, &h, 2)
    .unwrap();
    assert_eq!(a.summary, b.summary);
    assert_eq!(a.to_json(), b.to_json());
}
