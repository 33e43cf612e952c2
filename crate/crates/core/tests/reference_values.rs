//! Frozen values from a 40-digit arbitrary-precision evaluation. Integer-order
//! associated Legendre entries carry no Condon-Shortley phase.

#![allow(clippy::excessive_precision, clippy::approx_constant)]

use hypersph::legendre::{assoc_legendre_p, hyper_assoc_legendre, hyper_legendre, legendre_p, Branch, HyperLegendreParams};
use hypersph::specfun::{bessel_j, bessel_y, gamma_fn, hyp2f1, Hyp2F1Call};

const TABLE: &[(&str, &[f64], f64)] = &[
    ("hyp2f1", &[0.5, 1.5, 2.5, 0.3], 1.108062551056932),
    ("hyp2f1", &[1.2, -0.7, 3.1, -0.6], 1.155772571787953),
    ("hyp2f1", &[2.0, 3.0, 1.5, 0.9], 4516.006595644985),
    ("hyp2f1", &[-3.0, 2.5, 1.25, 0.45], -0.20253846153846154),
    ("bessel_j", &[0.0, 1.0], 0.76519768655796655),
    ("bessel_j", &[1.0, 2.5], 0.49709410246427404),
    ("bessel_j", &[2.5, 7.3], -0.30084943158749981),
    ("bessel_j", &[0.3, 0.05], 0.36825860883735435),
    ("bessel_j", &[4.2, 9.0], -0.24080865453531417),
    ("bessel_y", &[0.5, 1.0], -0.43109886801837608),
    ("bessel_y", &[2.5, 7.3], 0.043400899825479541),
    ("bessel_y", &[0.3, 0.8], -0.43834274220751992),
    ("legendre_p", &[2.0, 0.5], -0.125),
    ("legendre_p", &[0.5, 0.3], 0.70093853096965508),
    ("legendre_p", &[3.7, -0.4], 0.12012442971740169),
    ("legendre_p", &[5.0, 0.99], 0.85518039296249988),
    ("assoc_legendre_p", &[2.0, 1.0, 0.5], 1.299038105676658),
    ("assoc_legendre_p", &[1.5, 0.5, 0.2], -0.74158353798037225),
    ("assoc_legendre_p", &[3.2, 1.7, -0.6], -4.0589035585699467),
    ("assoc_legendre_p", &[4.0, 3.0, 0.3], 27.344667208616746),
    ("gamma", &[0.5], 1.772453850905516),
    ("gamma", &[3.7], 4.170651783796604),
    ("gamma", &[-2.5], -0.94530872048294188),
    ("gamma", &[10.0], 362880.0),
    ("hyper_legendre", &[2.0, 0.5, 0.3], -0.081898253088682476),
    ("hyper_legendre", &[1.5, 1.0, -0.7], -0.73925259738128284),
    ("hyper_legendre", &[3.0, 1.5, 0.0], -0.2),
    ("hyper_assoc", &[1.0, 1.4142135623730951, 0.5, 0.5], 1.0146617929812715),
    ("hyper_assoc", &[2.0, 2.449489742783178, 1.0, 0.3], 1.0045948353883599),
    ("hyper_assoc", &[1.5, 0.8, 1.5, -0.8], -1.290531254404355),
    ("hyper_assoc", &[3.0, 2.0, 0.5, 0.95], -6.1178634329554632),
];

fn evaluate(name: &str, a: &[f64]) -> f64 {
    let r = match name {
        "hyp2f1" => hyp2f1(Hyp2F1Call::new(a[0], a[1], a[2], a[3])),
        "bessel_j" => bessel_j(a[0], a[1]),
        "bessel_y" => bessel_y(a[0], a[1]),
        "legendre_p" => legendre_p(a[0], a[1]),
        "assoc_legendre_p" => assoc_legendre_p(a[0], a[1], a[2]),
        "gamma" => gamma_fn(a[0]),
        "hyper_legendre" => hyper_legendre(a[0], a[1], a[2]),
        "hyper_assoc" => hyper_assoc_legendre(&HyperLegendreParams::new(a[0], a[1], a[2], Branch::Plus), a[3]),
        other => panic!("unknown function {other}"),
    };
    r.unwrap_or_else(|e| panic!("{name}{a:?}: {e}"))
}

#[test]
fn frozen_values() {
    let mut worst = (0.0, "");
    for &(name, args, expected) in TABLE {
        let got = evaluate(name, args);
        let rel = (got - expected).abs() / expected.abs().max(1e-300);
        assert!(rel < 1e-12, "{name}{args:?}: got {got:e}, expected {expected:e}, rel {rel:e}");
        if rel > worst.0 {
            worst = (rel, name);
        }
    }
    println!("worst relative error {:e} ({})", worst.0, worst.1);
}

#[test]
fn integer_order_neumann_within_documented_accuracy() {
    for (n, x, expected) in [(0.0, 1.0, 0.088256964215676958), (1.0, 2.5, 0.1459181379667858), (3.0, 7.0, 0.26808060304231508)] {
        let got = bessel_y(n, x).unwrap();
        assert!((got - expected).abs() < 1e-6 * expected.abs().max(1.0), "Y_{n}({x}) = {got}");
    }
}

#[test]
fn minus_branch_matches_table() {
    for &(name, a, expected) in TABLE.iter().filter(|r| r.0 == "hyper_assoc") {
        let p = HyperLegendreParams::new(a[0], a[1], a[2], Branch::Minus);
        let got = hyper_assoc_legendre(&p, a[3]).unwrap();
        assert!((got - expected).abs() < 1e-11 * expected.abs(), "{name}{a:?}: {got}");
    }
}
