//! Real symmetric eigendecomposition.
//!
//! Tridiagonal matrices go straight to the implicit-shift QL iteration;
//! dense symmetric matrices are first reduced by Householder reflections.
//! Both routines follow the EISPACK `tred2`/`tql2` pair.

use crate::error::{Error, Result};

/// Maximum number of QL sweeps spent on a single eigenvalue.
pub const MAX_SWEEPS: usize = 50;

/// Real symmetric tridiagonal matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTridiag {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::param("diag", "matrix dimension must be at least 1"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::LengthMismatch {
                what: "offdiag must have one entry fewer than diag",
                left: offdiag.len(),
                right: diag.len(),
            });
        }
        if diag.iter().chain(offdiag.iter()).any(|x| !x.is_finite()) {
            return Err(Error::param("diag/offdiag", "entries must be finite"));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// `y = H x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut y = self.diag[i] * x[i];
                if i > 0 {
                    y += self.offdiag[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.offdiag[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i].abs();
                if i > 0 {
                    s += self.offdiag[i - 1].abs();
                }
                if i + 1 < n {
                    s += self.offdiag[i].abs();
                }
                s
            })
            .fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> SymMatrix {
        let n = self.dim();
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, self.diag[i]);
            if i + 1 < n {
                m.set(i, i + 1, self.offdiag[i]);
            }
        }
        m
    }
}

/// Dense real symmetric matrix, stored in full row-major form.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from a full row-major array; the upper triangle wins if the
    /// input is not exactly symmetric.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::LengthMismatch {
                what: "dense matrix data",
                left: data.len(),
                right: n * n,
            });
        }
        let mut m = Self { n, data };
        for i in 0..n {
            for j in (i + 1)..n {
                let v = m.data[i * n + j];
                m.data[j * n + i] = v;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Eigenvalues in ascending order with their orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenPairs {
    values: Vec<f64>,
    /// Column-major: eigenvector `j` occupies `vectors[j*n .. (j+1)*n]`.
    vectors: Vec<f64>,
}

impl EigenPairs {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vector(&self, j: usize) -> &[f64] {
        let n = self.dim();
        &self.vectors[j * n..(j + 1) * n]
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[f64]> {
        self.vectors.chunks_exact(self.dim().max(1))
    }

    /// Coefficients `V^T x` of a real vector in the eigenbasis.
    pub fn project(&self, x: &[f64]) -> Vec<f64> {
        self.vectors().map(|v| dot(v, x)).collect()
    }

    /// Maximum deviation of `V^T V` from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(self.vector(i), self.vector(j)) - target).abs());
            }
        }
        worst
    }

    /// Largest `||H v - lambda v||_inf` over all pairs.
    pub fn residual<F: Fn(&[f64]) -> Vec<f64>>(&self, apply: F) -> f64 {
        self.values
            .iter()
            .zip(self.vectors())
            .map(|(&lambda, v)| {
                apply(v)
                    .iter()
                    .zip(v)
                    .map(|(hv, vi)| (hv - lambda * vi).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Full eigendecomposition of a symmetric tridiagonal matrix.
pub fn eig_sym_tridiag(m: &SymTridiag) -> Result<EigenPairs> {
    let n = m.dim();
    let mut d = m.diag.clone();
    let mut e = m.offdiag.clone();
    e.push(0.0);
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    tql2(&mut d, &mut e, &mut z)?;
    Ok(sorted(d, z))
}

/// Full eigendecomposition of a dense symmetric matrix.
pub fn eig_sym_dense(m: &SymMatrix) -> Result<EigenPairs> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::param("matrix", "dimension must be at least 1"));
    }
    let (mut d, mut e, mut z) = tred2(m);
    tql2(&mut d, &mut e, &mut z)?;
    Ok(sorted(d, z))
}

/// Stable sort by eigenvalue; ties keep the order the QL sweep produced them in.
fn sorted(d: Vec<f64>, z: Vec<f64>) -> EigenPairs {
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values = order.iter().map(|&j| d[j]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &j in &order {
        vectors.extend_from_slice(&z[j * n..(j + 1) * n]);
    }
    EigenPairs { values, vectors }
}

/// Householder reduction to tridiagonal form. Returns the diagonal, the
/// off-diagonal (`e[i]` couples `i` and `i+1`, last entry zero) and the
/// accumulated orthogonal transform in column-major layout.
fn tred2(m: &SymMatrix) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let n = m.dim();
    // row-major working copy, v[i][j] at v[i*n+j]
    let mut v = m.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let at = |i: usize, j: usize| i * n + j;

    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        scale += d[..i].iter().map(|x| x.abs()).sum::<f64>();
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for dk in &mut d[..i] {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    for i in 0..n.saturating_sub(1) {
        v[at(n - 1, i)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(k, i + 1)] * v[at(k, j)];
                }
                for k in 0..=i {
                    v[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
        v[at(n - 1, j)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;

    // shift to the "e[i] couples i, i+1" convention
    let mut off = vec![0.0; n];
    off[..(n - 1)].copy_from_slice(&e[1..n]);

    // transpose into column-major
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            z[j * n + i] = v[at(i, j)];
        }
    }
    (d, off, z)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. `e[i]` couples rows
/// `i` and `i+1`; `z` holds column-major vectors that get rotated along.
fn tql2(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1 = 0.0_f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        // e[n-1] is zero, so m < n here
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::NoConvergence {
                        index: l,
                        sweeps: MAX_SWEEPS,
                    });
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    let (lo, hi) = z.split_at_mut((i + 1) * n);
                    let zi = &mut lo[i * n..];
                    let zi1 = &mut hi[..n];
                    for (a, b) in zi.iter_mut().zip(zi1.iter_mut()) {
                        let t = *b;
                        *b = s * *a + c * t;
                        *a = c * *a - s * t;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
