//! Lie–Poisson brackets on the dual of a structure-constant algebra:
//! `{f, g}(ξ) = sum c_ab^e ξ_e ∂_a f ∂_b g` on polynomial functions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{center_basis, validate_structure_constants, StructureConstants};
use crate::error::{check_dim, Error, Result};
use crate::rational::{format, Rational};

/// Exponent vector of a monomial, one entry per coordinate.
pub type Exponents = Vec<u32>;

/// A polynomial in the coordinates `ξ_0, .., ξ_{d-1}`. Zero coefficients are
/// never stored, so equal polynomials compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyFunction {
    dim: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl PolyFunction {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut f = Self::zero(dim);
        f.add_term(vec![0; dim], c);
        f
    }

    /// The coordinate function `ξ_a`.
    pub fn coordinate(dim: usize, a: usize) -> Result<Self> {
        if a >= dim {
            return Err(Error::IndexOutOfRange { index: a, bound: dim });
        }
        let mut e = vec![0; dim];
        e[a] = 1;
        let mut f = Self::zero(dim);
        f.add_term(e, Rational::one());
        Ok(f)
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Result<Self> {
        let mut f = Self::zero(dim);
        for (e, c) in terms {
            check_dim(dim, e.len())?;
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// `sum_a v_a ξ_a`.
    pub fn linear(v: &[Rational]) -> Self {
        let d = v.len();
        let mut f = Self::zero(d);
        for (a, c) in v.iter().enumerate() {
            let mut e = vec![0; d];
            e[a] = 1;
            f.add_term(e, c.clone());
        }
        f
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// `∂f / ∂ξ_a`.
    pub fn derivative(&self, a: usize) -> Result<Self> {
        if a >= self.dim {
            return Err(Error::IndexOutOfRange { index: a, bound: self.dim });
        }
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            if e[a] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[a] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[a].into()));
        }
        Ok(out)
    }
}

impl fmt::Debug for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", format(c))?;
            for (a, p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{a}")?,
                    _ => write!(f, "*x{a}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// The linear Poisson tensor `π_ab(ξ) = c_ab^e ξ_e` of a Lie algebra.
#[derive(Clone, Debug)]
pub struct PoissonTensor {
    c: StructureConstants,
}

impl PoissonTensor {
    /// Fails unless `c` satisfies the Jacobi identity.
    pub fn new(c: StructureConstants) -> Result<Self> {
        if let Some(v) = validate_structure_constants(&c).violation {
            return Err(Error::Precondition(format!(
                "structure constants fail Jacobi at ({}, {}, {})",
                v.a, v.b, v.c
            )));
        }
        Ok(Self { c })
    }

    /// Skips validation, for probing brackets that may not be Lie.
    pub fn new_unchecked(c: StructureConstants) -> Self {
        Self { c }
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.c
    }
}

pub fn lie_poisson_bracket(t: &PoissonTensor, f: &PolyFunction, g: &PolyFunction) -> Result<PolyFunction> {
    let d = t.dim();
    check_dim(d, f.dim())?;
    check_dim(d, g.dim())?;
    let df: Vec<PolyFunction> = (0..d).map(|a| f.derivative(a)).collect::<Result<_>>()?;
    let dg: Vec<PolyFunction> = (0..d).map(|a| g.derivative(a)).collect::<Result<_>>()?;
    let mut out = PolyFunction::zero(d);
    for ((a, b), v) in t.c.entries() {
        // c_ab = -c_ba, so the pair contributes ∂_a f ∂_b g - ∂_b f ∂_a g
        let w = df[a].mul(&dg[b])?.sub(&df[b].mul(&dg[a])?)?;
        if w.is_zero() {
            continue;
        }
        for (e, c) in v {
            out = out.add(&w.mul(&PolyFunction::coordinate(d, *e)?)?.scale(c))?;
        }
    }
    Ok(out)
}

/// `{{ξ_a, ξ_b}, ξ_c} + cycl = 0` for all coordinate triples. Fails with
/// [`Error::Internal`] if the verdict differs from the structure-constant check.
pub fn poisson_jacobi_check(t: &PoissonTensor) -> Result<bool> {
    let d = t.dim();
    let xi: Vec<PolyFunction> = (0..d).map(|a| PolyFunction::coordinate(d, a)).collect::<Result<_>>()?;
    let mut passed = true;
    'scan: for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                let mut s = PolyFunction::zero(d);
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    let inner = lie_poisson_bracket(t, &xi[x], &xi[y])?;
                    s = s.add(&lie_poisson_bracket(t, &inner, &xi[z])?)?;
                }
                if !s.is_zero() {
                    passed = false;
                    break 'scan;
                }
            }
        }
    }
    let direct = validate_structure_constants(&t.c).passed();
    if direct != passed {
        return Err(Error::Internal(format!(
            "Poisson Jacobi ({passed}) disagrees with structure-constant Jacobi ({direct})"
        )));
    }
    Ok(passed)
}

/// Linear Casimirs: the center, read as linear functions on the dual.
pub fn casimir_linear_basis(t: &PoissonTensor) -> Vec<PolyFunction> {
    center_basis(&t.c)
        .into_iter()
        .map(|z| PolyFunction::linear(&z.coords))
        .collect()
}

/// Entry `(i, j)` is true iff `{f_i, f_j}` vanishes under both tensors.
pub fn involution_check(t1: &PoissonTensor, t2: &PoissonTensor, fs: &[PolyFunction]) -> Result<Vec<Vec<bool>>> {
    check_dim(t1.dim(), t2.dim())?;
    fs.iter()
        .map(|f| {
            fs.iter()
                .map(|g| {
                    Ok(lie_poisson_bracket(t1, f, g)?.is_zero() && lie_poisson_bracket(t2, f, g)?.is_zero())
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builtin_algebra, pencil_bracket, BracketPair};
    use crate::linalg::RatMatrix;
    use crate::matrix_bundle::so_bundle_constants;
    use crate::rational::{frac, int};
    use crate::wtensor::{induced_structure_constants, WTensor, DEFAULT_CAP};
    use proptest::prelude::*;

    fn tensor(name: &str) -> PoissonTensor {
        PoissonTensor::new(builtin_algebra(name).unwrap()).unwrap()
    }

    fn xi(d: usize, a: usize) -> PolyFunction {
        PolyFunction::coordinate(d, a).unwrap()
    }

    fn sl2_casimir() -> PolyFunction {
        let h = xi(3, 0);
        let ef = xi(3, 1).mul(&xi(3, 2)).unwrap().scale(&int(4));
        h.mul(&h).unwrap().add(&ef).unwrap()
    }

    #[test]
    fn poly_arithmetic() {
        let x = xi(2, 0);
        let y = xi(2, 1);
        let f = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let g = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.derivative(0).unwrap(), x.scale(&int(2)));
        assert!(f.sub(&g).unwrap().is_zero());
        assert_eq!(PolyFunction::zero(2).degree(), None);
        assert!(PolyFunction::from_terms(2, [(vec![1], int(1))]).is_err());
        assert_eq!(f.to_string(), "-1*x1^2 + 1*x0^2");
    }

    #[test]
    fn bracket_examples() {
        let t = tensor("sl2");
        assert_eq!(lie_poisson_bracket(&t, &xi(3, 0), &xi(3, 1)).unwrap(), xi(3, 1).scale(&int(2)));
        let f = sl2_casimir();
        assert!(lie_poisson_bracket(&t, &f, &f).unwrap().is_zero());
        for a in 0..3 {
            assert!(lie_poisson_bracket(&t, &f, &xi(3, a)).unwrap().is_zero());
        }
        assert!(lie_poisson_bracket(&t, &xi(2, 0), &xi(3, 0)).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert!(poisson_jacobi_check(&tensor("sl2")).unwrap());
        assert!(poisson_jacobi_check(&tensor("abelian(4)")).unwrap());
        assert!(poisson_jacobi_check(&tensor("gl(2)")).unwrap());
        let mut w = WTensor::zeros(2).unwrap();
        w.set(0, 0, 1, int(1)).unwrap();
        w.set_symmetric(0, 1, 0, int(1)).unwrap();
        let c = induced_structure_constants(&w, &builtin_algebra("sl2").unwrap(), DEFAULT_CAP).unwrap();
        assert!(PoissonTensor::new(c.clone()).is_err());
        assert!(!poisson_jacobi_check(&PoissonTensor::new_unchecked(c)).unwrap());
    }

    #[test]
    fn casimir_examples() {
        assert_eq!(casimir_linear_basis(&tensor("heisenberg3")), vec![xi(3, 2)]);
        assert!(casimir_linear_basis(&tensor("sl2")).is_empty());
        let ab = casimir_linear_basis(&tensor("abelian(2)"));
        assert_eq!(ab.len(), 2);
        for name in ["heisenberg3", "abelian(3)", "gl(2)"] {
            let t = tensor(name);
            for f in casimir_linear_basis(&t) {
                for a in 0..t.dim() {
                    assert!(lie_poisson_bracket(&t, &f, &xi(t.dim(), a)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let t = tensor("sl2");
        let mut fs = vec![sl2_casimir()];
        fs.extend((0..3).map(|a| xi(3, a)));
        let m = involution_check(&t, &t, &fs).unwrap();
        assert!(m[0].iter().all(|x| *x));
        assert!(!m[1][2]);
        assert!(m[1][1]);
        let h = tensor("heisenberg3");
        let m = involution_check(&h, &h, &[xi(3, 2), xi(3, 0), xi(3, 1)]).unwrap();
        assert!(m[0].iter().all(|x| *x));
        assert!(involution_check(&t, &tensor("abelian(2)"), &fs).is_err());
    }

    /// Up to four monomials of total degree at most 3.
    fn poly(d: usize) -> impl Strategy<Value = PolyFunction> {
        let term = (proptest::collection::vec(0..d, 0..=3), -3i64..=3, 1i64..=2).prop_map(move |(vars, a, b)| {
            let mut e = vec![0u32; d];
            for v in vars {
                e[v] += 1;
            }
            (e, frac(a, b))
        });
        proptest::collection::vec(term, 0..5).prop_map(move |ts| PolyFunction::from_terms(d, ts).unwrap())
    }

    fn algebra_and_polys() -> impl Strategy<Value = (PoissonTensor, PolyFunction, PolyFunction, PolyFunction)> {
        prop_oneof![Just("sl2"), Just("so3"), Just("heisenberg3"), Just("gl(2)"), Just("so(4)"), Just("gl(3)")]
            .prop_flat_map(|name| {
                let t = tensor(name);
                let d = t.dim();
                (Just(t), poly(d), poly(d), poly(d))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn antisymmetry_and_leibniz((t, f, g, h) in algebra_and_polys()) {
            let fg = lie_poisson_bracket(&t, &f, &g).unwrap();
            let gf = lie_poisson_bracket(&t, &g, &f).unwrap();
            prop_assert!(fg.add(&gf).unwrap().is_zero());
            let lhs = lie_poisson_bracket(&t, &f, &g.mul(&h).unwrap()).unwrap();
            let rhs = fg.mul(&h).unwrap().add(&g.mul(&lie_poisson_bracket(&t, &f, &h).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pencil_is_bilinear(
            l in -3i64..=3,
            m in -3i64..=3,
            u in proptest::collection::vec(-2i64..=2, 6),
            v in proptest::collection::vec(-2i64..=2, 6),
            f in poly(3),
            g in poly(3),
        ) {
            let sym = |x: &[i64]| {
                let idx = [[0, 1, 2], [1, 3, 4], [2, 4, 5]];
                RatMatrix::from_fn(3, 3, |i, j| int(x[idx[i][j]]))
            };
            let pair = BracketPair::new(
                so_bundle_constants(&sym(&u)).unwrap(),
                so_bundle_constants(&sym(&v)).unwrap(),
            ).unwrap();
            let (l, m) = (int(l), int(m));
            let pen = PoissonTensor::new_unchecked(pencil_bracket(&pair, &l, &m).unwrap());
            let t1 = PoissonTensor::new_unchecked(pair.first.clone());
            let t2 = PoissonTensor::new_unchecked(pair.second.clone());
            let lhs = lie_poisson_bracket(&pen, &f, &g).unwrap();
            let rhs = lie_poisson_bracket(&t1, &f, &g).unwrap().scale(&l)
                .add(&lie_poisson_bracket(&t2, &f, &g).unwrap().scale(&m)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
