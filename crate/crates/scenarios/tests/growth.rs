use lexpoint_core::field::PrimeField;
use lexpoint_core::ring::RingKind;
use lexpoint_scenarios::growth::*;
use lexpoint_scenarios::random::rng_for;

#[test]
fn small_growth_values_by_hand() {
    // three quadrics in lex-last position: y^2, yz, z^2 growth is 4
    assert_eq!(brute_macaulay_growth(3, 2), 4);
    assert_eq!(brute_macaulay_growth(1, 1), 1);
    // one squarefree monomial grows to nothing, two give one
    assert_eq!(brute_kruskal_katona_growth(1, 1), 0);
    assert_eq!(brute_kruskal_katona_growth(3, 2), 1);
}

#[test]
fn closed_forms_match_brute_force() {
    assert_eq!(growth_bound_mismatches(20, 4), Vec::<String>::new());
}

#[test]
fn lex_round_trips() {
    let k = PrimeField::new(101).unwrap();
    for kind in [RingKind::Polynomial, RingKind::Exterior] {
        let bad = lex_round_trip(&k, kind, 200, &mut rng_for(3, "round-trip"));
        assert!(bad.is_empty(), "{bad:?}");
    }
}
