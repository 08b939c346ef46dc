mod common;

use common::{check_curve_chain, curve_suite, q};
use curveloc::annihilator::{
    check_genericity, kappa_and_annihilator, truncated_annihilator, KappaConfig, DEFAULT_LADDER,
};
use curveloc::poly::{parse_poly, RingSpec};
use curveloc::weyl::{parse_weyl, WeylIdeal};

#[test]
fn chains_grow_and_multiplicities_fall() {
    for f in curve_suite() {
        if let Err(message) = check_curve_chain(&f) {
            panic!("{message}");
        }
    }
}

#[test]
fn kappa_does_not_depend_on_the_generic_point() {
    for f in curve_suite() {
        let reference = kappa_and_annihilator(&f, &KappaConfig::default()).unwrap();
        let generic: Vec<_> = DEFAULT_LADDER
            .iter()
            .map(|&(a, b)| (q(a), q(b)))
            .filter(|(a, b)| check_genericity(&f, a, b).unwrap())
            .take(3)
            .collect();
        assert!(!generic.is_empty(), "{f}: no generic ladder point");
        for point in generic {
            let config = KappaConfig {
                point: Some(point.clone()),
                ..KappaConfig::default()
            };
            let other = kappa_and_annihilator(&f, &config).unwrap();
            assert_eq!(other.kappa, reference.kappa, "{f} at {point:?}");
            assert!(
                other.annihilator.equals(&reference.annihilator),
                "{f} at {point:?}"
            );
        }
    }
}

#[test]
fn equal_consecutive_truncations_do_not_stop_the_chain() {
    let ring = RingSpec::new(["x"]).unwrap();
    let f = parse_poly("x", &ring).unwrap();
    let w = |s: &str| parse_weyl(s, &ring).unwrap();
    let stalled = WeylIdeal::new(&ring, [w("x*dx-3")]).unwrap();
    let full = WeylIdeal::new(&ring, [w("x*dx-3"), w("dx^4")]).unwrap();
    let chain: Vec<_> = (1..=5)
        .map(|d| truncated_annihilator(&f, 3, d).unwrap())
        .collect();
    assert!(chain[0].equals(&chain[1]) && chain[1].equals(&chain[2]));
    assert!(chain[2].equals(&stalled));
    assert!(chain[3].equals(&full) && chain[4].equals(&full));
    assert!(!chain[2].contains(&w("dx^4")));
}

/// About five minutes in release mode; run with `--ignored`.
#[test]
#[ignore]
fn larger_reiffen_curves() {
    use curveloc::annihilator::{reiffen, LocalMultiplicity};
    let table: [(u32, &[u64]); 4] = [
        (9, &[14, 12, 11, 9, 8]),
        (10, &[16, 14, 13, 11, 10, 9]),
        (11, &[18, 16, 15, 13, 12, 10]),
        (12, &[20, 18, 17, 15, 14, 12, 11]),
    ];
    for (p, expected) in table {
        let result =
            kappa_and_annihilator(&reiffen(p, p + 1).unwrap(), &KappaConfig::default()).unwrap();
        let trace: Vec<LocalMultiplicity> = result.trace.iter().map(|t| t.m).collect();
        let want: Vec<LocalMultiplicity> = expected
            .iter()
            .map(|&m| LocalMultiplicity::Finite(m))
            .collect();
        assert_eq!(trace, want, "p = {p}");
        assert_eq!(result.kappa as usize, expected.len());
    }
}
