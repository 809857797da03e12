use rabi_dsc_web::demo::{photon_distribution, revival_curves, wigner_image};

#[test]
fn curves_revive_and_agree_without_splitting() {
    let c = revival_curves(2.0, 0.0, 96, 0, 2.0, 201).unwrap();
    assert_eq!(c.periods.len(), 201);
    assert!(c.two_mode.is_empty());
    assert!((c.exact[100] - 1.0).abs() < 1e-8 && (c.exact[200] - 1.0).abs() < 1e-8);
    let d = c
        .exact
        .iter()
        .zip(&c.no_splitting)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    assert!(d < 1e-10, "{d:e}");
}

#[test]
fn split_curves_have_all_series() {
    let c = revival_curves(2.0, 0.5, 96, 0, 3.0, 301).unwrap();
    assert_eq!(c.two_mode.len(), 301);
    assert!(c.exact[100] < 0.995);
    assert!(c.two_mode.iter().all(|v| (0.0..=1.0).contains(v)));
    assert!(c.tail_mass_bound < 1e-8);
}

#[test]
fn wigner_image_is_normalized_and_tracks_the_mean() {
    let w = wigner_image(2.0, 0.0, 96, 0, 0.25, -7.0, 4.0, 111).unwrap();
    let h = w.axis[1] - w.axis[0];
    let integral: f64 = w.values.iter().sum::<f64>() * h * h;
    assert!((integral - 1.0).abs() < 1e-3, "{integral}");
    let (ix, _) = w.values.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap();
    let n = w.axis.len();
    assert!((w.axis[ix / n] - w.mean.0).abs() <= h && (w.axis[ix % n] - w.mean.1).abs() <= h);
    assert!(w.negativity < 1e-9);
}

#[test]
fn photon_distribution_is_poissonian_at_half_period() {
    let p = photon_distribution(2.0, 0.0, 96, 0, 0.5, 48).unwrap();
    assert_eq!(p.len(), 48);
    let mean: f64 = p.iter().enumerate().map(|(n, v)| n as f64 * v).sum();
    assert!((mean - 16.0).abs() < 1e-8, "{mean}");
}

#[test]
fn bad_inputs_are_rejected() {
    assert!(revival_curves(2.0, 0.5, 96, 0, -1.0, 10).is_err());
    assert!(revival_curves(-2.0, 0.5, 96, 0, 1.0, 10).is_err());
    assert!(wigner_image(2.0, 0.5, 96, 0, 1.0, 1.0, 0.0, 11).is_err());
    assert!(photon_distribution(2.0, 0.5, 96, 200, 1.0, 10).is_err());
}
