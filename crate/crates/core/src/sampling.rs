//! Seeded generators for random test inputs. The same seed always yields
//! the same sequence, independent of platform and thread count.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::RatMatrix;
use crate::matrix_bundle::BlockVector;
use crate::rational::{frac, Rational};
use crate::wtensor::{AlphaVector, WTensor};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a / b` with `|a| <= max_num` and `1 <= b <= max_den`.
pub fn rational(rng: &mut SampleRng, max_num: i64, max_den: i64) -> Rational {
    frac(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

pub fn alpha(rng: &mut SampleRng, n: usize) -> AlphaVector {
    AlphaVector::new((0..n).map(|_| rational(rng, 5, 4)).collect()).expect("n >= 1")
}

/// An α with a few zeros forced in, so exact zeros of the spectrum occur.
pub fn sparse_alpha(rng: &mut SampleRng, n: usize) -> AlphaVector {
    let mut v: Vec<Rational> = (0..n).map(|_| rational(rng, 3, 2)).collect();
    let zeros = rng.gen_range(0..=n);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    for &i in &idx[..zeros] {
        v[i] = frac(0, 1);
    }
    AlphaVector::new(v).expect("n >= 1")
}

/// Symmetric in the upper indices, entries in {-1, 0, 1}.
pub fn symmetric_tensor(rng: &mut SampleRng, n: usize) -> WTensor {
    let mut w = WTensor::zeros(n).expect("n >= 1");
    for i in 0..n {
        for j in i..n {
            for s in 0..n {
                let v = rng.gen_range(-1i64..=1);
                w.set_symmetric(i, j, s, frac(v, 1)).expect("in range");
            }
        }
    }
    w
}

pub fn matrix(rng: &mut SampleRng, p: usize) -> RatMatrix {
    RatMatrix::from_fn(p, p, |_, _| rational(rng, 4, 3))
}

pub fn symmetric_matrix(rng: &mut SampleRng, p: usize) -> RatMatrix {
    let m = matrix(rng, p);
    RatMatrix::from_fn(p, p, |i, j| m[(i.min(j), i.max(j))].clone())
}

/// `t · b bᵀ` with `b ≠ 0`.
pub fn rank_one_symmetric(rng: &mut SampleRng, p: usize) -> RatMatrix {
    loop {
        let b: Vec<Rational> = (0..p).map(|_| rational(rng, 3, 1)).collect();
        if b.iter().any(|x| *x != frac(0, 1)) {
            let t = loop {
                let t = rational(rng, 3, 2);
                if t != frac(0, 1) {
                    break t;
                }
            };
            return RatMatrix::from_fn(p, p, |i, j| &t * &b[i] * &b[j]);
        }
    }
}

pub fn antisymmetric_matrix(rng: &mut SampleRng, p: usize) -> RatMatrix {
    let m = matrix(rng, p);
    RatMatrix::from_fn(p, p, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => m[(i, j)].clone(),
        std::cmp::Ordering::Equal => frac(0, 1),
        std::cmp::Ordering::Greater => -m[(j, i)].clone(),
    })
}

pub fn block_vector(rng: &mut SampleRng, n: usize, p: usize) -> BlockVector {
    BlockVector::new((0..n).map(|_| matrix(rng, p)).collect()).expect("n, p >= 1")
}
