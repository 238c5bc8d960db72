//! Matrix realization of circulant extensions over `Mat(p)`.
//!
//! A block vector `x = (x_0, .., x_{n-1})` embeds as the `np × np` matrix
//! with blocks `X_ij = x_{(i+j) mod n}`. Products `XAY` keep that pattern, so
//! `[X, Y]_A = XAY - YAX` is a bracket on block vectors.

use rayon::prelude::*;

use crate::algebra::{constants_from_matrix_basis, so_basis, so_coordinates, StructureConstants};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{require_square, RatMatrix};
use crate::rational::{frac, Rational};
use crate::wtensor::AlphaVector;

/// An element of the associative algebra `Mat(p)`.
pub type ScalarMatrix = RatMatrix;

/// `n ≥ 1` square blocks of a common size `p ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVector {
    p: usize,
    blocks: Vec<ScalarMatrix>,
}

impl BlockVector {
    pub fn new(blocks: Vec<ScalarMatrix>) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::InvalidParameter("block vector needs n >= 1".into()));
        };
        let p = first.rows();
        if p == 0 {
            return Err(Error::InvalidParameter("block size must be at least 1".into()));
        }
        for b in &blocks {
            require_square(b, p)?;
        }
        Ok(Self { p, blocks })
    }

    pub fn zero(n: usize, p: usize) -> Result<Self> {
        Self::new(vec![RatMatrix::zeros(p, p); n])
    }

    /// `p = 1` blocks from scalars.
    pub fn from_scalars(v: &[Rational]) -> Result<Self> {
        Self::new(v.iter().map(|x| RatMatrix::from_fn(1, 1, |_, _| x.clone())).collect())
    }

    /// Blocks `α_i · I_p`.
    pub fn scalar_pattern(alpha: &AlphaVector, p: usize) -> Result<Self> {
        Self::new(alpha.coords().iter().map(|x| RatMatrix::identity(p).scale(x)).collect())
    }

    /// `(I_p, 0, .., 0)`, the unit of the sandwich product.
    pub fn identity_pattern(n: usize, p: usize) -> Result<Self> {
        let mut v = Self::zero(n, p)?;
        v.blocks[0] = RatMatrix::identity(p);
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn blocks(&self) -> &[ScalarMatrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &ScalarMatrix {
        &self.blocks[i]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Self::new(self.blocks.iter().zip(&other.blocks).map(|(a, b)| a - b).collect())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        check_dim(self.n(), other.n())?;
        check_dim(self.p, other.p)
    }
}

/// An `np × np` matrix whose blocks satisfy `X_ij = X_{0, (i+j) mod n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCirculant {
    n: usize,
    p: usize,
    matrix: RatMatrix,
}

impl BlockCirculant {
    /// Wraps a matrix after checking the block pattern.
    pub fn from_matrix(n: usize, p: usize, matrix: RatMatrix) -> Result<Self> {
        require_square(&matrix, n * p)?;
        if let Some((i, j)) = pattern_violation(&matrix, n, p, |i, j| (i + j) % n) {
            return Err(Error::Precondition(format!("block ({i}, {j}) breaks the circulant pattern")));
        }
        Ok(Self { n, p, matrix })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Reads `x_j = X_{0j}`.
    pub fn section(&self) -> BlockVector {
        row_zero_section(&self.matrix, self.n, self.p)
    }
}

/// First block `(i, j)` differing from block `(0, source(i, j))`.
fn pattern_violation(
    m: &RatMatrix,
    n: usize,
    p: usize,
    source: impl Fn(usize, usize) -> usize,
) -> Option<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| m.block(i * p, j * p, p) != m.block(0, source(i, j) * p, p))
}

fn row_zero_section(m: &RatMatrix, n: usize, p: usize) -> BlockVector {
    BlockVector {
        p,
        blocks: (0..n).map(|j| m.block(0, j * p, p)).collect(),
    }
}

pub fn embed_circulant(x: &BlockVector) -> BlockCirculant {
    let (n, p) = (x.n(), x.p());
    let mut m = RatMatrix::zeros(n * p, n * p);
    for i in 0..n {
        for j in 0..n {
            m.set_block(i * p, j * p, &x.blocks[(i + j) % n]);
        }
    }
    BlockCirculant { n, p, matrix: m }
}

fn check_triple(x: &BlockVector, a: &BlockVector, y: &BlockVector) -> Result<()> {
    x.check_same_shape(a)?;
    x.check_same_shape(y)
}

/// The block vector `z` with `embed(z) = embed(x) · embed(a) · embed(y)`.
pub fn sandwich_product(x: &BlockVector, a: &BlockVector, y: &BlockVector) -> Result<BlockVector> {
    check_triple(x, a, y)?;
    let (n, p) = (x.n(), x.p());
    let m = embed_circulant(x)
        .matrix
        .try_mul(&embed_circulant(a).matrix)?
        .try_mul(&embed_circulant(y).matrix)?;
    BlockCirculant::from_matrix(n, p, m)
        .map(|c| c.section())
        .map_err(|e| Error::Internal(format!("sandwich product left the circulant pattern: {e}")))
}

/// `[x, y]_a = XAY - YAX`, through the embedding.
pub fn bracket_sandwich(x: &BlockVector, y: &BlockVector, a: &BlockVector) -> Result<BlockVector> {
    sandwich_product(x, a, y)?.sub(&sandwich_product(y, a, x)?)
}

/// `([x, y]_a)_i = sum_{s,k} x_s a_{s+k-i} y_k - y_k a_{s+k-i} x_s`, block by block.
pub fn component_bracket(x: &BlockVector, y: &BlockVector, a: &BlockVector) -> Result<BlockVector> {
    check_triple(x, a, y)?;
    let (n, p) = (x.n(), x.p());
    let blocks = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = RatMatrix::zeros(p, p);
            for s in 0..n {
                for k in 0..n {
                    let w = &a.blocks[(s + k + n - i) % n];
                    if w.is_zero() {
                        continue;
                    }
                    let xs = &x.blocks[s];
                    let yk = &y.blocks[k];
                    acc = &acc + &(&(&(xs * w) * yk) - &(&(yk * w) * xs));
                }
            }
            acc
        })
        .collect();
    BlockVector::new(blocks)
}

/// `½(AX + XA)` as a full `np × np` matrix. It is a plain block circulant,
/// `C_ij = c_{(j-i) mod n}`, rather than the embedding pattern.
pub fn beta_matrix(a: &BlockVector, x: &BlockVector) -> Result<RatMatrix> {
    a.check_same_shape(x)?;
    let am = embed_circulant(a).matrix;
    let xm = embed_circulant(x).matrix;
    Ok((&(&am * &xm) + &(&xm * &am)).scale(&frac(1, 2)))
}

/// Block row 0 of `½(AX + XA)`, which determines the whole matrix.
pub fn beta_map(a: &BlockVector, x: &BlockVector) -> Result<BlockVector> {
    let (n, p) = (x.n(), x.p());
    let m = beta_matrix(a, x)?;
    if let Some((i, j)) = pattern_violation(&m, n, p, |i, j| (j + n - i) % n) {
        return Err(Error::Internal(format!("symmetrized product block ({i}, {j}) is not circulant")));
    }
    Ok(row_zero_section(&m, n, p))
}

fn beta_full(a: &RatMatrix, m: &RatMatrix) -> RatMatrix {
    (&(a * m) + &(m * a)).scale(&frac(1, 2))
}

/// `[X,Y]_A = [X, β(Y)] - [Y, β(X)] - β([X,Y])` for every trial pair, with
/// all products in the full `np × np` matrix algebra.
pub fn coboundary_identity_check(a: &BlockVector, trials: &[(BlockVector, BlockVector)]) -> Result<bool> {
    let am = embed_circulant(a).matrix;
    for (x, y) in trials {
        check_triple(x, a, y)?;
        let xm = embed_circulant(x).matrix;
        let ym = embed_circulant(y).matrix;
        let lhs = &(&(&xm * &am) * &ym) - &(&(&ym * &am) * &xm);
        let rhs = &(&xm.commutator(&beta_full(&am, &ym))? - &ym.commutator(&beta_full(&am, &xm))?)
            - &beta_full(&am, &xm.commutator(&ym)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// so(p) with `[x, y]_a = x a y - y a x` for a symmetric `a`, in the basis
/// `E_ij - E_ji` (`i < j`).
pub fn so_bundle_constants(a: &ScalarMatrix) -> Result<StructureConstants> {
    let p = a.rows();
    if p < 2 {
        return Err(Error::InvalidParameter("so(p) needs p >= 2".into()));
    }
    require_square(a, p)?;
    if !a.is_symmetric() {
        return Err(Error::Precondition("bundle parameter must be symmetric".into()));
    }
    let c = constants_from_matrix_basis(
        &so_basis(p),
        |x, y| &(&(x * a) * y) - &(&(y * a) * x),
        so_coordinates,
    )?;
    Ok(c.with_name(format!("so({p})_a")))
}

/// Whether every block is antisymmetric.
pub fn blocks_antisymmetric(x: &BlockVector) -> bool {
    x.blocks.iter().all(RatMatrix::is_antisymmetric)
}

/// Whether every block is symmetric.
pub fn blocks_symmetric(x: &BlockVector) -> bool {
    x.blocks.iter().all(RatMatrix::is_symmetric)
}
