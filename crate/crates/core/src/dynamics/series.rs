use crate::error::{Error, Result};

/// Threshold on the (bounded) truncation tail above which a series carries a warning.
pub const WARN_TAIL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncationWarning {
    pub tail_mass_bound: f64,
    pub n_max: usize,
}

/// A sampled scalar observable.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    pub label: String,
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub warnings: Vec<TruncationWarning>,
}

impl TimeSeries {
    pub fn new(label: impl Into<String>, times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::LengthMismatch {
                what: "times vs values",
                left: times.len(),
                right: values.len(),
            });
        }
        if times
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::param("times", "must be strictly increasing"));
        }
        Ok(Self {
            label: label.into(),
            times,
            values,
            warnings: Vec::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Largest sample and its time within `[t0, t1]`.
    pub fn max_in(&self, t0: f64, t1: f64) -> Option<(f64, f64)> {
        self.times
            .iter()
            .zip(&self.values)
            .filter(|(t, _)| **t >= t0 && **t <= t1)
            .fold(None, |best: Option<(f64, f64)>, (&t, &v)| match best {
                Some((_, bv)) if bv >= v => best,
                _ => Some((t, v)),
            })
    }

    /// Indices of strict interior local maxima.
    pub fn local_maxima(&self) -> Vec<usize> {
        (1..self.values.len().saturating_sub(1))
            .filter(|&i| self.values[i] > self.values[i - 1] && self.values[i] > self.values[i + 1])
            .collect()
    }

    pub fn sup_distance(&self, other: &[f64]) -> f64 {
        self.values
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `n` evenly spaced times on `[t0, t1]`.
pub fn linspace(t0: f64, t1: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![t0],
        _ => {
            let step = (t1 - t0) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { t1 } else { t0 + step * i as f64 })
                .collect()
        }
    }
}

/// Peak of a revival series near each multiple of `period`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RevivalPeak {
    pub k: usize,
    pub time: f64,
    pub value: f64,
}

/// Global maximum in each window `[k T - T/2, k T + T/2]`, `k = 1..=k_max`.
pub fn revival_peaks(series: &TimeSeries, period: f64, k_max: usize) -> Vec<RevivalPeak> {
    (1..=k_max)
        .filter_map(|k| {
            let c = k as f64 * period;
            series
                .max_in(c - 0.5 * period, c + 0.5 * period)
                .map(|(time, value)| RevivalPeak { k, time, value })
        })
        .collect()
}
