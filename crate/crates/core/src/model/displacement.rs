//! Matrix elements of the displacement operator `D(beta) = exp(beta b^dag - beta^* b)`
//! in the Fock basis, from the generalized-Laguerre closed form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::displacement_band;

/// Dense real matrix `<n|D(beta)|m>` for real `beta`.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplacementMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DisplacementMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn column(&self, col: usize) -> Vec<f64> {
        (0..self.n).map(|r| self.get(r, col)).collect()
    }
}

/// `<n|D(beta)|m>` for real `beta`, both orderings of `n` and `m`.
///
/// For `n >= m` this is `sqrt(m!/n!) beta^{n-m} e^{-beta^2/2} L_m^{(n-m)}(beta^2)`;
/// the other triangle follows from `<m|D|n> = (-1)^{n-m} <n|D|m>`.
pub fn displacement_element(beta: f64, n: usize, m: usize) -> f64 {
    let (hi, lo) = if n >= m { (n, m) } else { (m, n) };
    let k = hi - lo;
    let band = displacement_band(beta.abs(), k, lo + 1);
    let mut v = band[lo];
    if beta < 0.0 && k % 2 == 1 {
        v = -v;
    }
    if n < m && k % 2 == 1 {
        v = -v;
    }
    v
}

/// `<n|D(beta)|m>` for `0 <= n, m < n_max`.
///
/// Requires `|beta| <= sqrt(n_max)/4` so that the displaced low-lying states
/// fit well inside the truncated space.
pub fn displacement_matrix(beta: f64, n_max: usize) -> Result<DisplacementMatrix> {
    if !beta.is_finite() {
        return Err(Error::param("beta", "must be finite"));
    }
    let limit = (n_max as f64).sqrt() / 4.0;
    if beta.abs() > limit {
        return Err(Error::TruncationOverflow {
            what: "displacement matrix",
            detail: format!("|beta| = {} exceeds sqrt(n_max)/4 = {limit:.4}", beta.abs()),
            n_max,
        });
    }
    let r = beta.abs();
    let mut data = vec![0.0; n_max * n_max];
    for k in 0..n_max {
        let band = displacement_band(r, k, n_max - k);
        let sign_lower = if beta < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
        let sign_upper = if k % 2 == 1 { -sign_lower } else { sign_lower };
        for (m, &v) in band.iter().enumerate() {
            data[(m + k) * n_max + m] = sign_lower * v;
            if k > 0 {
                data[m * n_max + m + k] = sign_upper * v;
            }
        }
    }
    Ok(DisplacementMatrix { n: n_max, data })
}

/// Applies `D(alpha)` for complex `alpha` to a vector of Fock amplitudes and
/// returns the first `rows` amplitudes of the result. The input is treated as
/// exact (no truncation of its own support); only the output is cut.
pub fn displace_amplitudes(alpha: Complex64, amps: &[Complex64], rows: usize) -> Vec<Complex64> {
    let m_len = amps.len();
    let r = alpha.norm();
    let phase = if r > 0.0 { alpha / r } else { Complex64::new(1.0, 0.0) };
    // (-alpha^*)/|alpha| for the upper triangle
    let phase_up = -phase.conj();
    let mut out = vec![Complex64::new(0.0, 0.0); rows];
    let mut ph_lo = Complex64::new(1.0, 0.0);
    let mut ph_up = Complex64::new(1.0, 0.0);
    let kmax = rows.max(m_len);
    for k in 0..kmax {
        // lower: out[m+k] += <m+k|D|m> amps[m], m < min(m_len, rows-k)
        let lo_len = if k < rows { m_len.min(rows - k) } else { 0 };
        // upper: out[n] += <n|D|n+k> amps[n+k], n < min(rows, m_len-k)
        let up_len = if k >= 1 && k < m_len { rows.min(m_len - k) } else { 0 };
        let len = lo_len.max(up_len);
        if len == 0 {
            if k >= rows && k >= m_len {
                break;
            }
        } else {
            let band = displacement_band(r, k, len);
            for m in 0..lo_len {
                out[m + k] += ph_lo * band[m] * amps[m];
            }
            for n in 0..up_len {
                out[n] += ph_up * band[n] * amps[n + k];
            }
        }
        ph_lo *= phase;
        ph_up *= phase_up;
    }
    out
}
