//! Spectral side of the circulant family: DFT diagonalization, the
//! `μ_i = sum_r α_r ω^{-ri}` spectrum and the direct-sum classification.
//!
//! Zero-ness of `μ_i` is never decided by floating point alone. The number
//! of vanishing eigenvalues equals `n - rank` of the rational circulant
//! matrix, which is computed exactly; the numeric flags must agree with it.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{check_dim, Error, Result};
use crate::linalg::RatMatrix;
use crate::wtensor::{slice_matrix, slices, AlphaVector, WTensor};

/// Numeric carrier for roots of unity and eigenvalues.
pub type ComplexApprox = Complex64;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `ω^k` with `ω = e^{2πi/n}`; the exponent is reduced mod `n` first.
pub fn omega_pow(n: usize, k: i64) -> ComplexApprox {
    let r = k.rem_euclid(n as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / n as f64)
}

/// `Ω_i^j = ω^{-ij} / n` and its inverse `(Ω^{-1})_i^j = ω^{ij}`.
#[derive(Clone, Debug)]
pub struct DftMatrix {
    n: usize,
    forward: Vec<ComplexApprox>,
    inverse: Vec<ComplexApprox>,
}

impl DftMatrix {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let scale = 1.0 / n as f64;
        let mut forward = Vec::with_capacity(n * n);
        let mut inverse = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let ij = (i * j) as i64;
                forward.push(omega_pow(n, -ij) * scale);
                inverse.push(omega_pow(n, ij));
            }
        }
        Ok(Self { n, forward, inverse })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> ComplexApprox {
        self.forward[i * self.n + j]
    }

    pub fn inverse(&self, i: usize, j: usize) -> ComplexApprox {
        self.inverse[i * self.n + j]
    }

    /// `max |(Ω Ω^{-1} - 1)_ij|`.
    pub fn identity_residual(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let s: ComplexApprox = (0..n).map(|k| self.get(i, k) * self.inverse(k, j)).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    /// `Ω^{-1} M Ω` for a rational `n × n` matrix, row-major.
    pub fn conjugate(&self, m: &RatMatrix) -> Result<Vec<ComplexApprox>> {
        let n = self.n;
        check_dim(n, m.rows())?;
        check_dim(n, m.cols())?;
        let mf: Vec<f64> = (0..n * n).map(|k| to_f64(&m[(k / n, k % n)])).collect();
        // t = M Ω
        let mut t = vec![Complex64::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = mf[i * n + k];
                if a != 0.0 {
                    for j in 0..n {
                        t[i * n + j] += self.get(k, j) * a;
                    }
                }
            }
        }
        let mut out = vec![Complex64::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.inverse(i, k);
                for j in 0..n {
                    out[i * n + j] += a * t[k * n + j];
                }
            }
        }
        Ok(out)
    }
}

fn to_f64(r: &crate::Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The eigenvalues `μ_i` of a circulant family, with zero flags checked
/// against the exact rank.
#[derive(Clone, Debug, PartialEq)]
pub struct MuSpectrum {
    pub n: usize,
    pub values: Vec<ComplexApprox>,
    pub zero_flags: Vec<bool>,
    pub exact_zero_count: usize,
}

impl MuSpectrum {
    pub fn nonzero_count(&self) -> usize {
        self.n - self.exact_zero_count
    }
}

/// The `n × n` circulant `C_ij = α_{(j-i) mod n}`.
pub fn circulant_matrix(alpha: &AlphaVector) -> RatMatrix {
    let n = alpha.n();
    RatMatrix::from_fn(n, n, |i, j| alpha.at(j as i64 - i as i64).clone())
}

/// Exact rank over the rationals of the circulant with first row `α`; equals
/// the number of nonzero `μ_i`.
pub fn circulant_rank_exact(alpha: &AlphaVector) -> usize {
    circulant_matrix(alpha).rank()
}

/// `μ_i = sum_r α_r ω^{-ri}`, flagged zero when `|μ_i| < tolerance`. Fails
/// with [`Error::SpectrumMismatch`] when the flags disagree with the exact count.
pub fn mu_spectrum(alpha: &AlphaVector, tolerance: f64) -> Result<MuSpectrum> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let n = alpha.n();
    let a: Vec<f64> = alpha.coords().iter().map(to_f64).collect();
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter("alpha entry not representable as f64".into()));
    }
    let values: Vec<ComplexApprox> = (0..n)
        .map(|i| {
            a.iter()
                .enumerate()
                .map(|(r, &ar)| omega_pow(n, -((r * i) as i64)) * ar)
                .sum()
        })
        .collect();
    let zero_flags: Vec<bool> = values.iter().map(|v| v.norm() < tolerance).collect();
    let exact_zero_count = n - circulant_rank_exact(alpha);
    let numeric = zero_flags.iter().filter(|f| **f).count();
    if numeric != exact_zero_count {
        return Err(Error::SpectrumMismatch {
            numeric,
            exact: exact_zero_count,
        });
    }
    Ok(MuSpectrum {
        n,
        values,
        zero_flags,
        exact_zero_count,
    })
}

/// Dense complex three-index tensor; `get(i, j, k)` is the entry with upper
/// indices `i, j` and lower index `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexTensor {
    n: usize,
    data: Vec<ComplexApprox>,
}

impl ComplexTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> ComplexApprox {
        self.data[(i * self.n + j) * self.n + k]
    }

    /// `max |T^{ij}_k - μ_k δ_k^i δ_k^j|`.
    pub fn diagonal_pattern_residual(&self, mu: &[ComplexApprox]) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for (k, &m) in mu.iter().enumerate().take(n) {
                    let target = if i == k && j == k { m } else { Complex64::zero() };
                    worst = worst.max((self.get(i, j, k) - target).norm());
                }
            }
        }
        worst
    }

    /// `max |T^{ij}_k - W^{ij}_k|` against a rational tensor.
    pub fn max_abs_diff(&self, w: &WTensor) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((self.get(i, j, k) - to_f64(&w.get(i, j, k))).norm());
                }
            }
        }
        worst
    }
}

/// Applies `upper` to both upper indices and `lower` to the lower one, one
/// mode at a time.
fn change_basis(
    n: usize,
    mut t: Vec<ComplexApprox>,
    upper: impl Fn(usize, usize) -> ComplexApprox,
    lower: impl Fn(usize, usize) -> ComplexApprox,
) -> Vec<ComplexApprox> {
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut next = vec![Complex64::zero(); n * n * n];
    // lower index: sum_s T^{pq}_s L(s, k)
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                let v = t[idx(p, q, s)];
                if v.is_zero() {
                    continue;
                }
                for k in 0..n {
                    next[idx(p, q, k)] += v * lower(s, k);
                }
            }
        }
    }
    std::mem::swap(&mut t, &mut next);
    next.iter_mut().for_each(|x| x.set_zero());
    // first upper index
    for p in 0..n {
        for i in 0..n {
            let u = upper(p, i);
            for q in 0..n {
                for k in 0..n {
                    next[idx(i, q, k)] += u * t[idx(p, q, k)];
                }
            }
        }
    }
    std::mem::swap(&mut t, &mut next);
    next.iter_mut().for_each(|x| x.set_zero());
    // second upper index
    for i in 0..n {
        for q in 0..n {
            for j in 0..n {
                let u = upper(q, j);
                for k in 0..n {
                    next[idx(i, j, k)] += u * t[idx(i, q, k)];
                }
            }
        }
    }
    next
}

/// `W~^{ij}_k = sum_{s,p,q} W^{pq}_s Ω^p_i Ω^q_j (Ω^{-1})^s_k`, materialized densely.
pub fn transform_w(w: &WTensor) -> ComplexTensor {
    let n = w.n();
    let dft = DftMatrix::new(n).expect("n >= 1");
    let mut data = vec![Complex64::zero(); n * n * n];
    for ((i, j, s), v) in w.entries() {
        data[(i * n + j) * n + s] = Complex64::new(to_f64(v), 0.0);
    }
    let data = change_basis(n, data, |a, b| dft.get(a, b), |a, b| dft.inverse(a, b));
    ComplexTensor { n, data }
}

/// Inverse of [`transform_w`].
pub fn inverse_transform(t: &ComplexTensor) -> ComplexTensor {
    let n = t.n;
    let dft = DftMatrix::new(n).expect("n >= 1");
    let data = change_basis(n, t.data.clone(), |a, b| dft.inverse(a, b), |a, b| dft.get(a, b));
    ComplexTensor { n, data }
}

/// Number of copies of the base algebra keeping its bracket (`m`) and
/// becoming abelian (`n - m`) after diagonalization.
#[derive(Clone, Debug, PartialEq)]
pub struct CirculantClassification {
    pub m_nonabelian: usize,
    pub n_abelian: usize,
    pub spectrum: MuSpectrum,
}

pub fn classify_circulant(alpha: &AlphaVector, tolerance: f64) -> Result<CirculantClassification> {
    let spectrum = mu_spectrum(alpha, tolerance)?;
    let m = circulant_rank_exact(alpha);
    Ok(CirculantClassification {
        m_nonabelian: m,
        n_abelian: alpha.n() - m,
        spectrum,
    })
}

/// All slice matrices of all tensors commute pairwise, exactly.
pub fn commuting_family_check(tensors: &[WTensor]) -> Result<bool> {
    let Some(first) = tensors.first() else {
        return Ok(true);
    };
    for t in tensors {
        check_dim(first.n(), t.n())?;
    }
    let all: Vec<RatMatrix> = tensors.iter().flat_map(slices).collect();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if !all[a].commutator(&all[b])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `W^(0)` is the identity and every other slice is nilpotent.
pub fn semisimple_form_check(w: &WTensor) -> bool {
    slice_matrix(w, 0).expect("n >= 1").is_identity()
        && (1..w.n()).all(|s| slice_matrix(w, s).expect("in range").is_nilpotent())
}

/// Every slice is nilpotent.
pub fn solvable_form_check(w: &WTensor) -> bool {
    slices(w).iter().all(RatMatrix::is_nilpotent)
}
