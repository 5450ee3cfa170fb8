use lexpoint_core::field::{PrimeField, Rationals};
use lexpoint_core::ideal::Ideal;
use lexpoint_core::parse::parse_generators;
use lexpoint_core::ring::Ring;
use lexpoint_core::tangent::tangent_dimension;
use lexpoint_scenarios::geometry::classify_stratum_3points;
use lexpoint_scenarios::samplers::{sample_locus, verify_locus, Locus};

#[test]
fn every_locus_samples_over_gf101() {
    let k = PrimeField::new(101).unwrap();
    for locus in Locus::ALL {
        for seed in 0..3 {
            let s = sample_locus(locus, seed, &k).unwrap_or_else(|e| panic!("{locus}: {e}"));
            let hf = s.ideal.hilbert_function(locus.bound());
            assert_eq!(hf.values, locus.hilbert_function(), "{locus} seed {seed}");
            verify_locus(locus, &s.ideal).unwrap();
        }
    }
}

#[test]
fn exterior_loci_sample_over_gf3() {
    let k = PrimeField::new(3).unwrap();
    for locus in [Locus::X5, Locus::Y5] {
        for seed in 0..5 {
            sample_locus(locus, seed, &k).unwrap_or_else(|e| panic!("{locus}: {e}"));
        }
    }
}

#[test]
fn sampling_is_deterministic() {
    let k = PrimeField::new(101).unwrap();
    for locus in Locus::ALL {
        let a = sample_locus(locus, 9, &k).unwrap();
        let b = sample_locus(locus, 9, &k).unwrap();
        assert_eq!(a.ideal.to_string(), b.ideal.to_string());
        assert_eq!(a.attempts, b.attempts);
    }
}

#[test]
fn sampled_tangent_dimension_bounds() {
    let k = PrimeField::new(101).unwrap();
    for locus in Locus::ALL {
        let s = sample_locus(locus, 1, &k).unwrap();
        let t = tangent_dimension(&s.ideal, None).unwrap();
        assert!(t.dimension >= locus.parameter_dimension(), "{locus}: {}", t.dimension);
    }
}

#[test]
fn rejects_ideals_outside_the_locus() {
    let r = Ring::exterior(5, Rationals).unwrap();
    let lex = Ideal::new(&r, parse_generators(&r, "e1^e2; e1^e3; e1^e4; e2^e3^e4; e2^e3^e5").unwrap()).unwrap();
    assert!(verify_locus(Locus::Y5, &lex).is_err());
    let s = Ring::polynomial(3, Rationals).unwrap();
    let wrong_hf = Ideal::new(&s, parse_generators(&s, "x; y").unwrap()).unwrap();
    assert!(verify_locus(Locus::X3, &wrong_hf).is_err());
}

#[test]
fn unknown_locus_name() {
    assert!("W7".parse::<Locus>().is_err());
    assert_eq!("pts4".parse::<Locus>().unwrap(), Locus::PTS4);
}

#[test]
fn three_point_strata() {
    let s = Ring::polynomial(3, Rationals).unwrap();
    let cases = [
        ("x^2; x*y; x*z^2; y^4; y^3*z", vec![1, 1, 1]),
        ("x^2; x*y + x*z - y^2; x^3*y; x^2*y^2; x^2*y*z; x*y^3; x*y^2*z; x*y*z^2", vec![1, 2]),
        ("x*y; x*z; y*z", vec![1, 2]),
    ];
    for (gens, hv) in cases {
        let i = Ideal::new(&s, parse_generators(&s, gens).unwrap()).unwrap();
        assert_eq!(classify_stratum_3points(&i, 8).unwrap().0, hv, "{gens}");
    }
    let four = Ideal::new(&s, parse_generators(&s, "x^2; x*y; x*z; y^2").unwrap()).unwrap();
    assert!(classify_stratum_3points(&four, 8).is_err());
}
