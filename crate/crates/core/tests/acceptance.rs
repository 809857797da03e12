//! End-to-end acceptance checks. Each check prints one `PASS`/`FAIL` line and
//! a summary follows. With `ACCEPTANCE_STRICT=1` the binary exits non-zero if
//! any check fails.
//!
//! Run with `cargo test -p rabi-dsc --test acceptance`.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rabi_dsc::analytic::{
    first_order_detuning, resonant_level, revival_probability_w0_zero, two_mode_revival, PerturbationOrder,
    PerturbativeSpectrum,
};
use rabi_dsc::dynamics::{
    linspace, make_propagator, parity_expectation, quadrature_means, revival_peaks, sector_survival, DetuningRow,
    Propagator, SplitPropagator, TensorPropagator, TimeSeries,
};
use rabi_dsc::model::{build_two_qubit_graph, build_two_qubit_hamiltonian, two_qubit_index, two_qubit_parity};
use rabi_dsc::wigner::{default_axis, squeezing_diagnostic, wigner, wigner_negativity};
use rabi_dsc::{ChainState, ModelParams, Parity, Qubit, TensorState};

const T: f64 = 2.0 * PI;

struct Report {
    checks: usize,
    failures: Vec<String>,
}

impl Report {
    fn check(&mut self, id: &str, ok: bool, detail: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id}: {detail}");
        self.checks += 1;
        if !ok {
            self.failures.push(id.to_string());
        }
    }
}

fn params(omega0: f64, g: f64, n_max: usize) -> ModelParams {
    ModelParams::new(1.0, omega0, g, n_max).unwrap()
}

fn propagator(omega0: f64, g: f64, n_max: usize, level: usize) -> Propagator {
    let p = params(omega0, g, n_max);
    let psi0 = ChainState::basis(Parity::Plus, level, n_max).unwrap();
    make_propagator(&p, Parity::Plus, &psi0).unwrap()
}

fn series(prop: &Propagator, t_max: f64, n: usize) -> TimeSeries {
    prop.revival_series(&linspace(0.0, t_max, n)).unwrap()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// `<m|D(a)|n>` for real `a` by the finite double-factorial sum, independent of
/// the Laguerre recurrence used by the library.
fn displacement_by_sum(a: f64, m: usize, n: usize) -> f64 {
    let lf = |k: usize| (1..=k).map(|j| (j as f64).ln()).sum::<f64>();
    let mut s = 0.0;
    for k in 0..=m.min(n) {
        let mag = 0.5 * (lf(m) + lf(n)) - lf(k) - lf(m - k) - lf(n - k);
        let pow = (m + n - 2 * k) as i32;
        let sign = if (n - k).is_multiple_of(2) { 1.0 } else { -1.0 };
        if a == 0.0 {
            if pow == 0 {
                s += sign * mag.exp();
            }
        } else {
            s += sign * (mag + pow as f64 * a.abs().ln()).exp() * a.signum().powi(pow);
        }
    }
    (-0.5 * a * a).exp() * s
}

// --- individual criteria -------------------------------------------------------------------

fn curves_c1(n_max: usize) -> Vec<Vec<f64>> {
    [0.5, 1.0, 2.0]
        .iter()
        .map(|&g| series(&propagator(0.0, g, n_max, 0), 2.0 * T, 2001).values)
        .collect()
}

fn c1(r: &mut Report) {
    let grid = linspace(0.0, 2.0 * T, 2001);
    let mut worst: f64 = 0.0;
    for (g, curve) in [0.5, 1.0, 2.0].iter().zip(curves_c1(128)) {
        let exact: Vec<f64> = grid.iter().map(|&t| revival_probability_w0_zero(*g, 1.0, t)).collect();
        worst = worst.max(max_diff(&curve, &exact));
    }
    r.check(
        "1 exact vs closed form, g in {0.5,1,2}",
        worst <= 1e-8,
        format!("sup error {worst:.3e} (tol 1e-8)"),
    );
}

fn c2_values(n_max: usize) -> [f64; 2] {
    let prop = propagator(0.0, 2.0, n_max, 0);
    [prop.revival_probability(T), prop.revival_probability(2.0 * T)]
}

fn c2(r: &mut Report) {
    let v = c2_values(128);
    let err = v.iter().map(|x| (x - 1.0).abs()).fold(0.0, f64::max);
    r.check(
        "2 full revivals at k=1,2",
        err <= 1e-8,
        format!("P = {:.12}, {:.12}; |P-1| max {err:.3e}", v[0], v[1]),
    );
}

fn c3_value(n_max: usize) -> f64 {
    propagator(0.0, 2.0, n_max, 0).revival_probability(PI)
}

fn c3(r: &mut Report) {
    let v = c3_value(128);
    let ratio = v / (-16.0f64).exp();
    r.check(
        "3 collapse floor e^-16",
        (ratio - 1.0).abs() <= 1e-4,
        format!("P(pi)/e^-16 = {ratio:.8}"),
    );
}

fn c4_series(n_max: usize) -> TimeSeries {
    series(&propagator(0.0, 2.0, n_max, 2), 2.0 * T, 4001)
}

fn c4(r: &mut Report) {
    let s = c4_series(128);
    let beta0 = 2.0;
    let coeff: Vec<f64> = (0..80).map(|m| displacement_by_sum(beta0, m, 2).powi(2)).collect();
    let oracle: Vec<f64> = s
        .times
        .iter()
        .map(|&t| {
            coeff
                .iter()
                .enumerate()
                .map(|(m, w)| w * Complex64::from_polar(1.0, -(m as f64) * t))
                .sum::<Complex64>()
                .norm_sqr()
        })
        .collect();
    let oracle_err = max_diff(&s.values, &oracle);
    let floor = s.min();
    let secondary: Vec<(f64, f64)> = s
        .local_maxima()
        .into_iter()
        .map(|i| (s.times[i] / T, s.values[i]))
        .filter(|(tau, v)| {
            let frac = tau - tau.round();
            frac.abs() > 0.05 && *v > 10.0 * floor
        })
        .collect();
    let best = secondary.iter().map(|x| x.1).fold(0.0, f64::max);
    r.check(
        "4 secondary peaks from |+,2_b>",
        !secondary.is_empty() && oracle_err <= 1e-8,
        format!(
            "{} interior maxima above 10x min ({floor:.2e}), largest {best:.4}; oracle sup error {oracle_err:.2e}",
            secondary.len()
        ),
    );
}

fn c5_series(n_max: usize) -> TimeSeries {
    series(&propagator(0.5, 2.0, n_max, 0), 5.5 * T, 22001)
}

fn c5(r: &mut Report) {
    let s = c5_series(128);
    let peaks: Vec<f64> = revival_peaks(&s, T, 5).iter().map(|p| p.value).collect();
    let monotone = peaks.windows(2).all(|w| w[1] <= w[0] + 0.02);
    let ok = peaks.len() == 5 && peaks[0] < 1.0 - 0.005 && monotone;
    let shown: Vec<String> = peaks.iter().map(|v| format!("{v:.4}")).collect();
    r.check(
        "5 partial revivals decrease, w0=0.5",
        ok,
        format!("peaks k=1..5: [{}]", shown.join(", ")),
    );
}

fn c6_table(n_max: usize) -> Vec<DetuningRow> {
    propagator(0.5, 2.0, n_max, 0).detuning_table().unwrap().heaviest(10)
}

fn closest(rows: &[DetuningRow], target: f64) -> DetuningRow {
    *rows
        .iter()
        .min_by(|a, b| {
            (a.delta.abs() - target)
                .abs()
                .total_cmp(&(b.delta.abs() - target).abs())
        })
        .unwrap()
}

fn c6(r: &mut Report) {
    let rows = c6_table(128);
    let a = closest(&rows, 0.116);
    let b = closest(&rows, 0.223);
    let ok_a = (a.delta.abs() - 0.116).abs() <= 0.010;
    let ok_b = (b.delta.abs() - 0.223).abs() <= 0.015;
    let listing: Vec<String> = rows
        .iter()
        .map(|x| format!("{}:{:+.4}({:.3})", x.level, x.delta, x.weight))
        .collect();
    r.check(
        "6 detunings |d|=0.116+-0.010 and 0.223+-0.015 among top-10",
        ok_a && ok_b,
        format!(
            "nearest to 0.116: level {} d={:+.4} [{}]; nearest to 0.223: level {} d={:+.4} [{}]; table {}",
            a.level,
            a.delta,
            if ok_a { "ok" } else { "miss" },
            b.level,
            b.delta,
            if ok_b { "ok" } else { "miss" },
            listing.join(" ")
        ),
    );
}

fn c7(r: &mut Report) {
    let p = params(0.5, 2.0, 128);
    let nr = resonant_level(&p, 0);
    let d1 = first_order_detuning(p.beta0(), Parity::Plus, nr);
    let closed = 705.0 * (-8.0f64).exp() / 2.0;
    let exact = closest(&c6_table(128), 0.116);
    let ok = nr == 4 && (d1 - closed).abs() <= 1e-5 && (d1.abs() - exact.delta.abs()).abs() <= 0.006;
    r.check(
        "7 first-order detuning at resonant level",
        ok,
        format!(
            "N_r={nr}, d1={d1:.6}, 705e^-8/2={closed:.6}, exact |d| (level {}) = {:.4}, gap {:.4}",
            exact.level,
            exact.delta.abs(),
            (d1.abs() - exact.delta.abs()).abs()
        ),
    );
}

fn c8(r: &mut Report) {
    for (omega0, tol) in [(0.3, 0.05), (0.5, 0.08)] {
        let p = params(omega0, 2.0, 128);
        let exact = series(&propagator(omega0, 2.0, 128, 0), 3.5 * T, 14001);
        let spec = PerturbativeSpectrum::new(&p, Parity::Plus, 0, PerturbationOrder::First).unwrap();
        let approx_vals: Vec<f64> = exact.times.iter().map(|&t| spec.revival(t)).collect();
        let approx = TimeSeries::new("first order", exact.times.clone(), approx_vals).unwrap();
        let pe = revival_peaks(&exact, T, 3);
        let pa = revival_peaks(&approx, T, 3);
        let errs: Vec<f64> = pe.iter().zip(&pa).map(|(a, b)| (a.value - b.value).abs()).collect();
        let worst = errs.iter().copied().fold(0.0, f64::max);
        r.check(
            &format!("8 first-order peaks, w0={omega0}"),
            errs.len() == 3 && worst <= tol,
            format!("peak errors k=1..3 {errs:.4?} (tol {tol})"),
        );
    }
}

fn c9(r: &mut Report) {
    let p = params(0.3, 2.0, 128);
    let exact = series(&propagator(0.3, 2.0, 128, 0), 3.5 * T, 14001);
    let peaks = revival_peaks(&exact, T, 3);
    let errs: Vec<f64> = peaks
        .iter()
        .map(|pk| (two_mode_revival(&p, pk.k as f64 * T) - pk.value).abs())
        .collect();
    let worst = errs.iter().copied().fold(0.0, f64::max);
    r.check(
        "9 two-mode estimate of revival peaks, w0=0.3",
        errs.len() == 3 && worst <= 0.08,
        format!("errors k=1..3 {errs:.4?} (tol 0.08)"),
    );
}

fn c10(r: &mut Report) {
    let n_max = 128;
    let p = params(0.5, 2.0, n_max);
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let psi0 = TensorState::from_components(&[(Qubit::Ground, 0, h), (Qubit::Excited, 0, h)], n_max).unwrap();
    let dense = TensorPropagator::new(&p, &psi0).unwrap();
    let split = SplitPropagator::new(&p, &psi0).unwrap();
    let mut parity_err: f64 = 0.0;
    let mut combo_err: f64 = 0.0;
    for t in linspace(0.0, 2.0 * T, 401) {
        let psi_t = dense.evolve(t);
        parity_err = parity_err.max(parity_expectation(&psi_t).abs());
        let weighted: f64 = Parity::BOTH
            .iter()
            .zip(split.chain_survival(t))
            .map(|(&par, s)| split.weight(par) * s.unwrap_or(0.0))
            .sum();
        combo_err = combo_err.max((sector_survival(&psi0, &psi_t) - weighted).abs());
    }
    r.check(
        "10 parity conservation and cross-chain non-interference",
        parity_err <= 1e-12 && combo_err <= 1e-12,
        format!("max |<Pi>| {parity_err:.2e}, combined vs weighted chains {combo_err:.2e}"),
    );
}

fn c11(r: &mut Report) {
    // (a) omega0 = 0 states are coherent: unit-width Gaussians
    let n_max = 128;
    let prop = propagator(0.0, 2.0, n_max, 0);
    let axis = default_axis();
    let mut fit_err: f64 = 0.0;
    let mut neg: f64 = 0.0;
    for tau in [0.25, 0.5, 1.3] {
        let s = prop.evolve(tau * T);
        let (xm, pm) = quadrature_means(&s);
        let w = wigner(&s, &axis, &axis).unwrap();
        for (x, p, v) in w.points() {
            let g = (-(x - xm).powi(2) - (p - pm).powi(2)).exp() / PI;
            fit_err = fit_err.max((v - g).abs());
        }
        neg = neg.max(wigner_negativity(&w));
    }
    r.check(
        "11a Gaussian Wigner at w0=0",
        fit_err <= 1e-6 && neg <= 1e-9,
        format!("sup fit error {fit_err:.2e}, negativity {neg:.2e}"),
    );

    let prop = propagator(0.5, 2.0, n_max, 0);
    let beta0 = 2.0;
    let sq = squeezing_diagnostic(&prop.evolve(T), beta0);
    r.check(
        "11b squeezing tangential to the orbit, w0=0.5, t=1",
        sq.tangential > sq.normal,
        format!("tangential {:.4}, normal {:.4}", sq.tangential, sq.normal),
    );

    let radius = |t: f64| {
        let (x, p) = quadrature_means(&prop.evolve(t));
        (x + std::f64::consts::SQRT_2 * beta0).hypot(p)
    };
    let (r1, r5) = (radius(T), radius(5.0 * T));
    r.check(
        "11c inward spiral, w0=0.5",
        r5 < r1,
        format!("radius about -beta0: t=1 {r1:.4}, t=5 {r5:.4}"),
    );
}

fn c12(r: &mut Report) {
    let mut curve: f64 = 0.0;
    for (a, b) in curves_c1(128).iter().zip(curves_c1(256)) {
        curve = curve.max(max_diff(a, &b));
    }
    curve = curve.max(max_diff(&c2_values(128), &c2_values(256)));
    curve = curve.max((c3_value(128) - c3_value(256)).abs());
    curve = curve.max(max_diff(&c4_series(128).values, &c4_series(256).values));
    curve = curve.max(max_diff(&c5_series(128).values, &c5_series(256).values));
    let (lo, hi) = (c6_table(128), c6_table(256));
    let same_levels = lo.iter().zip(&hi).all(|(a, b)| a.level == b.level);
    let det = lo
        .iter()
        .zip(&hi)
        .map(|(a, b)| (a.delta - b.delta).abs())
        .fold(0.0, f64::max);
    r.check(
        "12 n_max 128 -> 256 stability",
        curve <= 1e-10 && det <= 1e-8 && same_levels,
        format!("curves {curve:.2e} (tol 1e-10), detunings {det:.2e} (tol 1e-8)"),
    );
}

fn c13(r: &mut Report) {
    let graph = build_two_qubit_graph(12).unwrap();
    let comps = graph.component_count();
    let n_max = 24;
    let h = build_two_qubit_hamiltonian(&params(0.5, 2.0, n_max));
    let qs = [Qubit::Ground, Qubit::Excited];
    let mut labels = Vec::new();
    for n in 0..n_max {
        for a in qs {
            for b in qs {
                labels.push((two_qubit_index(a, b, n), two_qubit_parity(a, b, n)));
            }
        }
    }
    let mut cross: f64 = 0.0;
    for &(i, pi) in &labels {
        for &(j, pj) in &labels {
            if pi != pj {
                cross = cross.max(h.get(i, j).abs());
            }
        }
    }
    r.check(
        "13 two-qubit graph and generalized parity",
        comps == 2 && cross <= 1e-12,
        format!("{comps} components, max cross-parity element {cross:e}"),
    );
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut r = Report {
        checks: 0,
        failures: Vec::new(),
    };
    let checks: [fn(&mut Report); 13] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13];
    for c in checks {
        c(&mut r);
    }
    println!(
        "acceptance: {} of {} checks passed, failing: [{}], {:.1}s",
        r.checks - r.failures.len(),
        r.checks,
        r.failures.join(", "),
        start.elapsed().as_secs_f64()
    );
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    if strict && !r.failures.is_empty() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
