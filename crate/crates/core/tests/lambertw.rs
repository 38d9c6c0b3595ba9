mod common;

use common::*;
use imbessel::{lambert_w0, w_asymptotic};
use proptest::prelude::*;
use std::f64::consts::E;

fn grid() -> impl Iterator<Item = f64> {
    let (lo, hi) = (1e-3f64.ln(), 1e9f64.ln());
    (0..10_000).map(move |i| (lo + (hi - lo) * i as f64 / 9_999.0).exp())
}

#[test]
fn round_trip_on_log_grid() {
    for z in grid() {
        let r = lambert_w0(z).unwrap();
        let back = r.w * r.w.exp();
        assert!((back - z).abs() <= 1e-14 * z.max(1.0), "z = {z}");
        assert!(r.residual <= 1e-14 * z.max(1.0));
    }
}

#[test]
fn monotone_on_log_grid() {
    let ws: Vec<f64> = grid().map(|z| lambert_w0(z).unwrap().w).collect();
    assert!(ws.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn exact_points() {
    assert_eq!(lambert_w0(0.0).unwrap().w, 0.0);
    assert!((lambert_w0(E).unwrap().w - 1.0).abs() <= 1e-15);
}

#[test]
fn w_of_two_against_bisection() {
    let oracle = bisect(|w| w * w.exp() - 2.0, 0.0, 2.0);
    let r = lambert_w0(2.0).unwrap();
    assert!((r.w - oracle).abs() <= 2e-16);
    assert!((r.w - W_OF_2).abs() <= 2e-16);
    assert!(r.residual <= 1e-15);
}

#[test]
fn asymptotic_forms() {
    assert!((w_asymptotic(E.powf(E), 2).unwrap() - (E - 1.0)).abs() < 1e-14);
    let w6 = lambert_w0(1e6).unwrap().w;
    assert!((w_asymptotic(1e6, 2).unwrap() - w6).abs() <= 0.03 * w6);
    let w12 = lambert_w0(1e12).unwrap().w;
    let two = (w_asymptotic(1e12, 2).unwrap() - w12).abs();
    let three = (w_asymptotic(1e12, 3).unwrap() - w12).abs();
    assert!(three < two);
}

#[test]
fn asymptotic_ordering_from_one_hundred() {
    for z in grid().filter(|&z| z >= 100.0) {
        let w = lambert_w0(z).unwrap().w;
        let two = (w_asymptotic(z, 2).unwrap() - w).abs();
        let three = (w_asymptotic(z, 3).unwrap() - w).abs();
        assert!(three < two, "z = {z}");
    }
}

#[test]
fn domain() {
    assert!(lambert_w0(-1.0).is_err());
    assert!(lambert_w0(f64::INFINITY).is_err());
    assert!(w_asymptotic(2.0, 2).is_err());
}

proptest! {
    #[test]
    fn round_trip_anywhere(z in 0.0f64..1e300) {
        let r = lambert_w0(z).unwrap();
        prop_assert!(r.w >= 0.0);
        prop_assert!((r.w * r.w.exp() - z).abs() <= 1e-14 * z.max(1.0) * (1.0 + r.w));
    }
}
