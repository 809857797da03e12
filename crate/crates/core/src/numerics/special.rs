use num_complex::Complex64;

use crate::error::{Error, Result};

/// Generalized Laguerre polynomial `L_n^{(k)}(x)` by the three-term recurrence
/// `(j+1) L_{j+1} = (2j+k+1-x) L_j - (j+k) L_{j-1}`.
pub fn laguerre(n: usize, k: usize, x: f64) -> f64 {
    let k = k as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + k - x;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + k + 1.0 - x) * cur - (jf + k) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `sum_l w_l exp(-i E_l t)` with hbar = 1.
pub fn expi_weighted_sum(weights: &[Complex64], energies: &[f64], t: f64) -> Result<Complex64> {
    if weights.len() != energies.len() {
        return Err(Error::LengthMismatch {
            what: "weights vs energies",
            left: weights.len(),
            right: energies.len(),
        });
    }
    Ok(weights
        .iter()
        .zip(energies)
        .map(|(w, e)| w * Complex64::from_polar(1.0, -e * t))
        .sum())
}

/// One band of the displacement operator for a real, non-negative amplitude `r`:
/// entry `j` is `<j+k| D(r) |j> = sqrt(j!/(j+k)!) r^k e^{-r^2/2} L_j^{(k)}(r^2)`.
///
/// The Laguerre recurrence is run on the normalized matrix elements so that
/// neither the factorials nor the polynomial values are formed explicitly;
/// every intermediate stays bounded by one in magnitude.
pub fn displacement_band(r: f64, k: usize, len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    let x = r * r;
    let kf = k as f64;
    // <k|D(r)|0> = e^{-x/2} r^k / sqrt(k!), in logs so that large r does not underflow early
    let d0 = if k == 0 {
        (-0.5 * x).exp()
    } else if r == 0.0 {
        0.0
    } else {
        let log_fact: f64 = (1..=k).map(|j| (j as f64).ln()).sum();
        (-0.5 * x + kf * r.ln() - 0.5 * log_fact).exp()
    };
    out.push(d0);
    if len == 1 {
        return out;
    }
    let d1 = (1.0 + kf - x) * d0 / (1.0 + kf).sqrt();
    out.push(d1);
    for m in 1..len - 1 {
        let mf = m as f64;
        let next = ((2.0 * mf + kf + 1.0 - x) * out[m] - (mf * (mf + kf)).sqrt() * out[m - 1])
            / ((mf + 1.0) * (mf + kf + 1.0)).sqrt();
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        for &x in &[-3.0, 0.0, 0.25, 7.5] {
            assert_eq!(laguerre(0, 0, x), 1.0);
            assert!((laguerre(1, 0, x) - (1.0 - x)).abs() < 1e-14);
            assert!((laguerre(1, 3, x) - (4.0 - x)).abs() < 1e-14);
        }
    }

    #[test]
    fn l4_at_16_is_705() {
        // (x^4 - 16x^3 + 72x^2 - 96x + 24)/24 at x = 16, exact in integers:
        // (65536 - 65536 + 18432 - 1536 + 24)/24 = 16920/24 = 705
        let exact = (18432 - 1536 + 24) / 24;
        assert_eq!(exact, 705);
        assert!((laguerre(4, 0, 16.0) - 705.0).abs() < 1e-10);
    }

    #[test]
    fn expi_sum_cases() {
        let one = expi_weighted_sum(&[Complex64::new(1.0, 0.0)], &[0.0], 3.7).unwrap();
        assert!((one - 1.0).norm() < 1e-15);
        let w = [Complex64::new(0.5, 0.0); 2];
        let full = expi_weighted_sum(&w, &[0.0, 1.0], 2.0 * std::f64::consts::PI).unwrap();
        assert!((full - 1.0).norm() < 1e-14);
        assert!(expi_weighted_sum(&w, &[0.0], 1.0).is_err());
    }

    #[test]
    fn band_matches_laguerre_closed_form() {
        let r: f64 = 1.7;
        for k in 0..6 {
            let band = displacement_band(r, k, 12);
            for (j, &v) in band.iter().enumerate() {
                let fact_ratio: f64 = ((j + 1)..=(j + k)).map(|i| 1.0 / (i as f64).sqrt()).product();
                let closed = fact_ratio * r.powi(k as i32) * (-r * r / 2.0).exp() * laguerre(j, k, r * r);
                assert!((v - closed).abs() < 1e-13, "k={k} j={j}: {v} vs {closed}");
            }
        }
    }

    #[test]
    fn band_at_zero_amplitude_is_identity() {
        assert!(displacement_band(0.0, 0, 5).iter().all(|&v| v == 1.0));
        assert!(displacement_band(0.0, 3, 5).iter().all(|&v| v == 0.0));
    }
}
