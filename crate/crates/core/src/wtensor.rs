//! W-tensors `W^{ij}_s` on `n` copies of a Lie algebra.
//!
//! A tensor defines `([x, y]_W)_s = sum_{i,j} W^{ij}_s [x_i, y_j]`. It yields a
//! Lie bracket for every base algebra iff it is symmetric in `(i, j)` and
//!
//! `sum_k (W^{sk}_i W^{qp}_k - W^{qk}_i W^{sp}_k) = 0` for all `i, s, q, p`,
//!
//! which says exactly that the slice matrices `(W^(k))_i^j = W^{kj}_i`
//! pairwise commute. Indices run over `0..n` everywhere.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{bracket_eval, validate_structure_constants, AlgebraElement, JacobiViolation, StructureConstants};
use crate::error::{check_dim, Error, Result};
use crate::linalg::RatMatrix;
use crate::rational::{parse_lenient, Rational};

/// Default cap on `n · dim` for brute-force certification.
pub const DEFAULT_CAP: usize = 64;

/// Sparse three-index tensor; key `(i, j, s)` holds `W^{ij}_s`. Zeros are
/// never stored, so `==` is entrywise equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WTensor {
    n: usize,
    entries: BTreeMap<(usize, usize, usize), Rational>,
}

impl WTensor {
    /// The zero tensor (abelian bracket) on `n` components.
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        Ok(Self {
            n,
            entries: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, idx: usize) -> Result<()> {
        if idx < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: idx,
                bound: self.n,
            })
        }
    }

    /// Sets the single entry `W^{ij}_s`; the partner `W^{ji}_s` is untouched.
    pub fn set(&mut self, i: usize, j: usize, s: usize, value: Rational) -> Result<()> {
        self.check(i)?;
        self.check(j)?;
        self.check(s)?;
        if value.is_zero() {
            self.entries.remove(&(i, j, s));
        } else {
            self.entries.insert((i, j, s), value);
        }
        Ok(())
    }

    /// Sets `W^{ij}_s` and `W^{ji}_s`.
    pub fn set_symmetric(&mut self, i: usize, j: usize, s: usize, value: Rational) -> Result<()> {
        self.set(i, j, s, value.clone())?;
        self.set(j, i, s, value)
    }

    pub fn get(&self, i: usize, j: usize, s: usize) -> Rational {
        self.entries.get(&(i, j, s)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries in `(i, j, s)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// First `(i, j, s)` with `i < j` and `W^{ij}_s != W^{ji}_s`.
    pub fn first_asymmetry(&self) -> Option<(usize, usize, usize)> {
        let mut bad: Vec<(usize, usize, usize)> = self
            .entries
            .iter()
            .filter(|((i, j, s), v)| i != j && self.get(*j, *i, *s) != **v)
            .map(|((i, j, s), _)| ((*i).min(*j), (*i).max(*j), *s))
            .collect();
        bad.sort_unstable();
        bad.into_iter().next()
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// Dense copy indexed `[(i * n + j) * n + s]`.
    fn dense(&self) -> Vec<Rational> {
        let n = self.n;
        let mut d = vec![Rational::zero(); n * n * n];
        for ((i, j, s), v) in &self.entries {
            d[(i * n + j) * n + s] = v.clone();
        }
        d
    }
}

/// Parameters `alpha_0..alpha_{n-1}` of the circulant family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    coords: Vec<Rational>,
}

impl AlphaVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameter("alpha must have at least one entry".into()));
        }
        Ok(Self { coords })
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| crate::rational::int(x)).collect())
    }

    /// The standard basis vector `e_i` of length `n`.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        let mut c = vec![Rational::zero(); n];
        c[i] = Rational::one();
        Self::new(c)
    }

    /// Parses a comma-separated list such as `1,-1/2,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s.split(',').map(parse_lenient).collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `alpha_{k mod n}`, for any integer `k`.
    pub fn at(&self, k: i64) -> &Rational {
        &self.coords[k.rem_euclid(self.n() as i64) as usize]
    }
}

/// Element `(x_0, .., x_{n-1})` of the n-fold product; every block has the
/// base algebra's dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnElement {
    pub blocks: Vec<AlgebraElement>,
}

impl GnElement {
    pub fn new(blocks: Vec<AlgebraElement>) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::InvalidParameter("need at least one block".into()));
        };
        let d = first.dim();
        for b in &blocks {
            check_dim(d, b.dim())?;
        }
        Ok(Self { blocks })
    }

    pub fn zero(n: usize, d: usize) -> Self {
        Self {
            blocks: vec![AlgebraElement::zero(d); n],
        }
    }

    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_dim(&self) -> usize {
        self.blocks[0].dim()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(AlgebraElement::is_zero)
    }

    /// Flattened coordinates, block-major: index `s * d + a`.
    pub fn flatten(&self) -> AlgebraElement {
        AlgebraElement::new(self.blocks.iter().flat_map(|b| b.coords.iter().cloned()).collect())
    }

    pub fn unflatten(x: &AlgebraElement, n: usize) -> Result<Self> {
        if n == 0 || !x.dim().is_multiple_of(n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.dim(),
            });
        }
        let d = x.dim() / n;
        Self::new(
            x.coords
                .chunks(d)
                .map(|c| AlgebraElement::new(c.to_vec()))
                .collect(),
        )
    }
}

/// First failure of a W-tensor validity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WViolation {
    /// `W^{ij}_s != W^{ji}_s` with `i < j`.
    Asymmetric { i: usize, j: usize, s: usize },
    /// `sum_k (W^{sk}_i W^{qp}_k - W^{qk}_i W^{sp}_k) = residual != 0`.
    Commutation {
        i: usize,
        s: usize,
        q: usize,
        p: usize,
        residual: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WValidation {
    pub violation: Option<WViolation>,
}

impl WValidation {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks symmetry, then the quadratic condition index by index, reporting
/// the lexicographically first failure.
pub fn wtensor_validate(w: &WTensor) -> WValidation {
    if let Some((i, j, s)) = w.first_asymmetry() {
        return WValidation {
            violation: Some(WViolation::Asymmetric { i, j, s }),
        };
    }
    let n = w.n();
    let d = w.dense();
    let at = |i: usize, j: usize, s: usize| &d[(i * n + j) * n + s];
    let violation = (0..n).into_par_iter().find_map_first(|i| {
        for s in 0..n {
            for q in 0..n {
                for p in 0..n {
                    let mut acc = Rational::zero();
                    for k in 0..n {
                        let (a, b) = (at(s, k, i), at(q, p, k));
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                        let (a, b) = (at(q, k, i), at(s, p, k));
                        if !a.is_zero() && !b.is_zero() {
                            acc -= a * b;
                        }
                    }
                    if !acc.is_zero() {
                        return Some(WViolation::Commutation {
                            i,
                            s,
                            q,
                            p,
                            residual: acc,
                        });
                    }
                }
            }
        }
        None
    });
    WValidation { violation }
}

/// `(W^(k))_i^j = W^{kj}_i`.
pub fn slice_matrix(w: &WTensor, k: usize) -> Result<RatMatrix> {
    w.check(k)?;
    let n = w.n();
    let mut m = RatMatrix::zeros(n, n);
    for ((a, j, i), v) in w.entries() {
        if a == k {
            m[(i, j)] = v.clone();
        }
    }
    Ok(m)
}

pub fn slices(w: &WTensor) -> Vec<RatMatrix> {
    (0..w.n()).map(|k| slice_matrix(w, k).expect("in range")).collect()
}

/// Pairwise commutation of all slice matrices.
pub fn slices_commute(w: &WTensor) -> bool {
    let s = slices(w);
    (0..s.len()).all(|a| (a + 1..s.len()).all(|b| s[a].commutator(&s[b]).expect("square").is_zero()))
}

/// `W^{ij}_s = δ_s^i δ_s^j`: the direct sum of `n` copies.
pub fn direct_sum_w(n: usize) -> Result<WTensor> {
    let mut w = WTensor::zeros(n)?;
    for i in 0..n {
        w.set(i, i, i, Rational::one())?;
    }
    Ok(w)
}

/// `W[α]^{sk}_i = α_{(s+k-i) mod n}`.
pub fn circulant_w(alpha: &AlphaVector) -> WTensor {
    let n = alpha.n();
    let mut w = WTensor::zeros(n).expect("alpha is nonempty");
    for s in 0..n {
        for k in 0..n {
            for i in 0..n {
                let v = alpha.at(s as i64 + k as i64 - i as i64).clone();
                w.set(s, k, i, v).expect("in range");
            }
        }
    }
    w
}

/// `W^{ij}_k = δ_k^{i+j}` without wrap-around: zero once `i + j >= n`.
pub fn leibnitz_w(n: usize) -> Result<WTensor> {
    let mut w = WTensor::zeros(n)?;
    for i in 0..n {
        for j in 0..n - i {
            w.set(i, j, i + j, Rational::one())?;
        }
    }
    Ok(w)
}

/// Graded deformation: `W^{sl}_i = 1` if `s + l = i`, `λ` if `s + l = i + n`.
/// `λ = 0` is [`leibnitz_w`], `λ = 1` is `circulant_w(e_0)`.
pub fn leibnitz_deform(n: usize, lambda: &Rational) -> Result<WTensor> {
    let mut w = WTensor::zeros(n)?;
    for s in 0..n {
        for l in 0..n {
            if s + l < n {
                w.set(s, l, s + l, Rational::one())?;
            } else {
                w.set(s, l, s + l - n, lambda.clone())?;
            }
        }
    }
    Ok(w)
}

/// The part of [`leibnitz_deform`] proportional to `λ`: entries `(s, l, s+l-n)`
/// for `s + l >= n`.
pub fn wraparound_part(n: usize) -> Result<WTensor> {
    let mut w = WTensor::zeros(n)?;
    for s in 0..n {
        for l in n.saturating_sub(s)..n {
            w.set(s, l, s + l - n, Rational::one())?;
        }
    }
    Ok(w)
}

/// First `(i, j)` with `i, j >= 1` and `W^{ij}_0 != 0`: a bracket of the
/// components `1..n` that leaks into component 0.
pub fn truncation_obstruction(w: &WTensor) -> Option<(usize, usize)> {
    w.entries()
        .find(|((i, j, k), _)| *i >= 1 && *j >= 1 && *k == 0)
        .map(|((i, j, _), _)| (i, j))
}

/// Drops index 0 and re-bases the remaining indices to `0..n-1`.
///
/// The components `1..n` must span a subalgebra (no `W^{ij}_0` with
/// `i, j >= 1`); otherwise the cut discards terms of the quadratic
/// condition and the result need not be valid, e.g. the cyclic shift at `n = 3`.
pub fn truncate_to_solvable(w: &WTensor) -> Result<WTensor> {
    if w.n() < 2 {
        return Err(Error::Precondition("truncation needs n >= 2".into()));
    }
    if !wtensor_validate(w).passed() {
        return Err(Error::Precondition("input tensor is not valid".into()));
    }
    if let Some((i, j)) = truncation_obstruction(w) {
        return Err(Error::Precondition(format!(
            "W^{{{i}{j}}}_0 is nonzero, so components 1..n do not form a subalgebra"
        )));
    }
    let mut out = WTensor::zeros(w.n() - 1)?;
    for ((i, j, k), v) in w.entries() {
        if i >= 1 && j >= 1 && k >= 1 {
            out.set(i - 1, j - 1, k - 1, v.clone())?;
        }
    }
    Ok(out)
}

/// `([x, y]_W)_s = sum W^{ij}_s [x_i, y_j]`, exactly.
pub fn extension_bracket(w: &WTensor, c: &StructureConstants, x: &GnElement, y: &GnElement) -> Result<GnElement> {
    check_dim(w.n(), x.n())?;
    check_dim(w.n(), y.n())?;
    check_dim(c.dim(), x.block_dim())?;
    check_dim(c.dim(), y.block_dim())?;
    let mut out = GnElement::zero(w.n(), c.dim());
    let mut cache: BTreeMap<(usize, usize), AlgebraElement> = BTreeMap::new();
    for ((i, j, s), v) in w.entries() {
        let b = match cache.get(&(i, j)) {
            Some(b) => b,
            None => {
                let b = bracket_eval(c, &x.blocks[i], &y.blocks[j])?;
                cache.entry((i, j)).or_insert(b)
            }
        };
        if !b.is_zero() {
            out.blocks[s] = out.blocks[s].add(&b.scale(v));
        }
    }
    Ok(out)
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { size, cap })
    } else {
        Ok(())
    }
}

/// Structure constants of the extension on the basis `E_{s,a}` (index
/// `s * d + a`): `[E_{i,a}, E_{j,b}] = sum_s W^{ij}_s c_ab^e E_{s,e}`.
/// Requires a symmetric tensor so the result is antisymmetric.
pub fn induced_structure_constants(w: &WTensor, c: &StructureConstants, cap: usize) -> Result<StructureConstants> {
    let (n, d) = (w.n(), c.dim());
    check_cap(n * d, cap)?;
    if let Some((i, j, s)) = w.first_asymmetry() {
        return Err(Error::Precondition(format!(
            "tensor is not symmetric at W^{{{i}{j}}}_{s}"
        )));
    }
    let mut out = StructureConstants::new(n * d)?;
    for ((i, j, s), v) in w.entries() {
        for ((a, b), cv) in c.entries() {
            for (e, x) in cv {
                let val = v * x;
                // (i,a,j,b) and its partner (j,a,i,b) both arise from symmetric W;
                // add only the a<b half here, the mirror comes from W^{ji}_s.
                out.add_coeff(i * d + a, j * d + b, s * d + e, val)?;
            }
        }
    }
    let name = c.name().map(|nm| format!("{nm}^{n}_W"));
    out.set_name(name);
    Ok(out)
}

/// Failure found by brute-force certification of an extension bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyViolation {
    /// The tensor is not symmetric, so the bracket is not antisymmetric.
    Asymmetric { i: usize, j: usize, s: usize },
    /// Jacobi fails on basis elements `E_{block, base}`; `f` is the output
    /// component and `residual` its coefficient.
    Jacobi {
        x: (usize, usize),
        y: (usize, usize),
        z: (usize, usize),
        f: (usize, usize),
        residual: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyReport {
    pub violation: Option<CertifyViolation>,
}

impl CertifyReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Brute-force Jacobi identity for `[ , ]_W` over `c`, on every basis triple
/// of the `n·d`-dimensional product. Uses the structure constants directly,
/// not the tensor conditions.
pub fn jacobi_certify(w: &WTensor, c: &StructureConstants, cap: usize) -> Result<CertifyReport> {
    let d = c.dim();
    check_cap(w.n() * d, cap)?;
    if !validate_structure_constants(c).passed() {
        return Err(Error::Precondition("base algebra fails Jacobi".into()));
    }
    if let Some((i, j, s)) = w.first_asymmetry() {
        return Ok(CertifyReport {
            violation: Some(CertifyViolation::Asymmetric { i, j, s }),
        });
    }
    let induced = induced_structure_constants(w, c, cap)?;
    let split = |k: usize| (k / d, k % d);
    let violation = validate_structure_constants(&induced).violation.map(
        |JacobiViolation { a, b, c, f, residual }| CertifyViolation::Jacobi {
            x: split(a),
            y: split(b),
            z: split(c),
            f: split(f),
            residual,
        },
    );
    Ok(CertifyReport { violation })
}

/// `W[α]^(s) = sum_k α_k W^(s-k)` with `W^(m)` the slices of `circulant_w(e_0)`.
pub fn alpha_slice_expand(alpha: &AlphaVector, s: usize) -> Result<RatMatrix> {
    let n = alpha.n();
    if s >= n {
        return Err(Error::IndexOutOfRange { index: s, bound: n });
    }
    let base = circulant_w(&AlphaVector::unit(n, 0)?);
    let mut out = RatMatrix::zeros(n, n);
    for (k, a) in alpha.coords().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let m = slice_matrix(&base, (s + n - k) % n)?;
        out = &out + &m.scale(a);
    }
    debug_assert_eq!(out, slice_matrix(&circulant_w(alpha), s)?);
    Ok(out)
}

/// Outcome of the solvable-form support test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportReport {
    /// First nonzero `W^{ij}_k` with `k <= max(i, j)`.
    pub offending: Option<(usize, usize, usize)>,
}

impl SupportReport {
    pub fn passed(&self) -> bool {
        self.offending.is_none()
    }
}

/// Every nonzero `W^{ij}_k` has `k >= max(i, j) + 1`, i.e. brackets of
/// `F[k]` and `F[s]` land in `F[max(k, s) + 1]`, with `F[k]` the span of
/// components `k..n`.
pub fn filtration_support_check(w: &WTensor) -> SupportReport {
    SupportReport {
        offending: w.entries().map(|(k, _)| k).find(|&(i, j, k)| k <= i.max(j)),
    }
}

/// Smallest `k` such that the components `k..n` bracket to zero among
/// themselves, i.e. `W^{ij}_s = 0` whenever `i, j >= k`.
pub fn max_abelian_filtration_ideal(w: &WTensor) -> Result<usize> {
    if let Some((i, j, k)) = filtration_support_check(w).offending {
        return Err(Error::Precondition(format!(
            "tensor is not in solvable form (entry W^{{{i}{j}}}_{k})"
        )));
    }
    // the ideal from k on is abelian iff no entry has min(i, j) >= k
    Ok(w.entries().map(|((i, j, _), _)| i.min(j) + 1).max().unwrap_or(0))
}
