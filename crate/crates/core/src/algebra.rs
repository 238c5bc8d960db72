//! Structure-constant Lie algebras over the rationals: brackets, adjoint
//! matrices, centers, and the compatibility calculus for pairs of brackets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{in_span, require_square, RatMatrix};
use crate::rational::{int, Rational};

/// Sparse vector keyed by basis index; never stores zeros.
pub type SparseVec = BTreeMap<usize, Rational>;

fn sparse_add(v: &mut SparseVec, e: usize, x: Rational) {
    if x.is_zero() {
        return;
    }
    let slot = v.entry(e).or_insert_with(Rational::zero);
    *slot += x;
    if slot.is_zero() {
        v.remove(&e);
    }
}

/// A Lie bracket on a `dim`-dimensional space, given by `c_ab^e` for `a < b`.
/// The `b > a` half is implied by antisymmetry.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    name: Option<String>,
    table: BTreeMap<(usize, usize), SparseVec>,
}

impl StructureConstants {
    /// The abelian bracket on `dim` dimensions.
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        Ok(Self {
            dim,
            name: None,
            table: BTreeMap::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.dim,
            })
        }
    }

    /// Adds `value` to `c_ab^e`; `a > b` is stored as `-value` at `(b, a)`.
    pub fn add_coeff(&mut self, a: usize, b: usize, e: usize, value: Rational) -> Result<()> {
        self.check_index(a)?;
        self.check_index(b)?;
        self.check_index(e)?;
        if a == b {
            if value.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidParameter(format!(
                "[e{a}, e{a}] must vanish"
            )));
        }
        let (key, value) = if a < b { ((a, b), value) } else { ((b, a), -value) };
        let v = self.table.entry(key).or_default();
        sparse_add(v, e, value);
        if v.is_empty() {
            self.table.remove(&key);
        }
        Ok(())
    }

    /// Overwrites `c_ab^e`.
    pub fn set_coeff(&mut self, a: usize, b: usize, e: usize, value: Rational) -> Result<()> {
        let current = self.coeff(a, b, e);
        self.add_coeff(a, b, e, value - current)
    }

    pub fn coeff(&self, a: usize, b: usize, e: usize) -> Rational {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self
                .table
                .get(&(a, b))
                .and_then(|v| v.get(&e))
                .cloned()
                .unwrap_or_else(Rational::zero),
            std::cmp::Ordering::Greater => -self.coeff(b, a, e),
        }
    }

    /// `[e_a, e_b]` as a sparse vector.
    pub fn basis_bracket(&self, a: usize, b: usize) -> SparseVec {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => SparseVec::new(),
            std::cmp::Ordering::Less => self.table.get(&(a, b)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .basis_bracket(b, a)
                .into_iter()
                .map(|(e, v)| (e, -v))
                .collect(),
        }
    }

    /// Stored `(a, b)` pairs with `a < b` and their nonzero brackets, in key order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec)> {
        self.table.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// `lambda * first + mu * second`, entrywise on the tables.
    pub fn linear_combination(
        lambda: &Rational,
        first: &Self,
        mu: &Rational,
        second: &Self,
    ) -> Result<Self> {
        check_dim(first.dim, second.dim)?;
        let mut out = Self::new(first.dim)?;
        for (coef, c) in [(lambda, first), (mu, second)] {
            if coef.is_zero() {
                continue;
            }
            for ((a, b), v) in c.entries() {
                for (e, x) in v {
                    out.add_coeff(a, b, *e, coef * x)?;
                }
            }
        }
        Ok(out)
    }

    /// Dense `dim × dim` lookup of basis brackets, both orders.
    fn basis_table(&self) -> BasisTable {
        let d = self.dim;
        let mut t = vec![Vec::new(); d * d];
        for ((a, b), v) in self.entries() {
            t[a * d + b] = v.iter().map(|(e, x)| (*e, x.clone())).collect();
            t[b * d + a] = v.iter().map(|(e, x)| (*e, -x.clone())).collect();
        }
        BasisTable { dim: d, table: t }
    }
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureConstants(dim={}", self.dim)?;
        if let Some(n) = &self.name {
            write!(f, ", name={n}")?;
        }
        for ((a, b), v) in self.entries() {
            let terms: Vec<String> = v.iter().map(|(e, x)| format!("{x}*e{e}")).collect();
            write!(f, ", [e{a},e{b}]={}", terms.join("+"))?;
        }
        write!(f, ")")
    }
}

struct BasisTable {
    dim: usize,
    table: Vec<Vec<(usize, Rational)>>,
}

impl BasisTable {
    fn get(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.table[a * self.dim + b]
    }

    /// Accumulates `[[e_x, e_y]_self, e_z]_outer` into `acc`, scaled by `sign`.
    fn add_double(&self, outer: &BasisTable, x: usize, y: usize, z: usize, sign: bool, acc: &mut [Rational]) {
        for (e, v) in self.get(x, y) {
            for (f, w) in outer.get(*e, z) {
                let t = v * w;
                if sign {
                    acc[*f] += t;
                } else {
                    acc[*f] -= t;
                }
            }
        }
    }
}

/// Element of a structure-constant algebra, as dense coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coords[i] = Rational::one();
        x
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coords.iter().map(|a| a * s).collect())
    }
}

/// Two brackets on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPair {
    pub first: StructureConstants,
    pub second: StructureConstants,
}

impl BracketPair {
    pub fn new(first: StructureConstants, second: StructureConstants) -> Result<Self> {
        check_dim(first.dim(), second.dim())?;
        Ok(Self { first, second })
    }

    pub fn dim(&self) -> usize {
        self.first.dim()
    }

    pub fn sum(&self) -> StructureConstants {
        StructureConstants::linear_combination(&Rational::one(), &self.first, &Rational::one(), &self.second)
            .expect("dims checked at construction")
    }
}

/// A nonzero cyclic sum, located at basis triple `(a, b, c)` with `a < b < c`
/// and output component `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub f: usize,
    pub residual: Rational,
}

/// Outcome of an exhaustive Jacobi-type scan. The reported violation is the
/// lexicographically first `(a, b, c, f)`, independent of scheduling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub violation: Option<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Scans `a < b < c` in lexicographic order. Alternation of the cyclic sum
/// for antisymmetric brackets makes the other orderings redundant.
fn scan_triples(dim: usize, residual: impl Fn(usize, usize, usize, &mut [Rational]) + Sync) -> JacobiReport {
    let violation = (0..dim).into_par_iter().find_map_first(|a| {
        let mut acc = vec![Rational::zero(); dim];
        for b in a + 1..dim {
            for c in b + 1..dim {
                acc.iter_mut().for_each(|x| x.set_zero());
                residual(a, b, c, &mut acc);
                if let Some(f) = acc.iter().position(|x| !x.is_zero()) {
                    return Some(JacobiViolation {
                        a,
                        b,
                        c,
                        f,
                        residual: acc[f].clone(),
                    });
                }
            }
        }
        None
    });
    JacobiReport { violation }
}

/// Exhaustive Jacobi check: `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` on
/// every basis triple, exactly.
pub fn validate_structure_constants(c: &StructureConstants) -> JacobiReport {
    let t = c.basis_table();
    scan_triples(c.dim(), |a, b, cc, acc| {
        t.add_double(&t, a, b, cc, true, acc);
        t.add_double(&t, b, cc, a, true, acc);
        t.add_double(&t, cc, a, b, true, acc);
    })
}

/// Mixed Jacobi identity
/// `[X1,[X2,X3]_u]_v + [X1,[X2,X3]_v]_u + cycl(1,2,3) = 0`
/// on all basis triples.
pub fn mixed_jacobi_check(p: &BracketPair) -> JacobiReport {
    let u = p.first.basis_table();
    let v = p.second.basis_table();
    scan_triples(p.dim(), |a, b, c, acc| {
        // [x,[y,z]_in]_out = -[[y,z]_in, x]_out
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            u.add_double(&v, y, z, x, false, acc);
            v.add_double(&u, y, z, x, false, acc);
        }
    })
}

/// Compatibility of two Lie brackets: the mixed identity holds iff their sum
/// is again a Lie bracket. Both routes run; disagreement is an internal error.
pub fn compatibility_check(p: &BracketPair) -> Result<JacobiReport> {
    for (label, c) in [("first", &p.first), ("second", &p.second)] {
        if let Some(v) = validate_structure_constants(c).violation {
            return Err(Error::Precondition(format!(
                "{label} bracket is not a Lie bracket (Jacobi fails at ({}, {}, {}), component {})",
                v.a, v.b, v.c, v.f
            )));
        }
    }
    let mixed = mixed_jacobi_check(p);
    let sum = validate_structure_constants(&p.sum());
    if mixed.passed() != sum.passed() {
        return Err(Error::Internal(format!(
            "mixed Jacobi ({}) disagrees with Jacobi of the sum ({})",
            mixed.passed(),
            sum.passed()
        )));
    }
    Ok(mixed)
}

/// `lambda [,]_1 + mu [,]_2` for a compatible pair.
pub fn pencil_bracket(p: &BracketPair, lambda: &Rational, mu: &Rational) -> Result<StructureConstants> {
    if !compatibility_check(p)?.passed() {
        return Err(Error::Incompatible);
    }
    let out = StructureConstants::linear_combination(lambda, &p.first, mu, &p.second)?;
    debug_assert!(validate_structure_constants(&out).passed());
    Ok(out)
}

/// `z^e = sum_{a,b} x^a y^b c_ab^e`.
pub fn bracket_eval(c: &StructureConstants, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    check_dim(c.dim(), x.dim())?;
    check_dim(c.dim(), y.dim())?;
    let mut z = AlgebraElement::zero(c.dim());
    for ((a, b), v) in c.entries() {
        // x^a y^b - x^b y^a
        let w = &x.coords[a] * &y.coords[b] - &x.coords[b] * &y.coords[a];
        if w.is_zero() {
            continue;
        }
        for (e, val) in v {
            z.coords[*e] += &w * val;
        }
    }
    Ok(z)
}

/// Matrix of `ad_x`, so that `ad_matrix(c, x) · y = [x, y]`.
pub fn ad_matrix(c: &StructureConstants, x: &AlgebraElement) -> Result<RatMatrix> {
    check_dim(c.dim(), x.dim())?;
    let d = c.dim();
    let mut m = RatMatrix::zeros(d, d);
    for ((a, b), v) in c.entries() {
        for (e, val) in v {
            // column b receives x^a c_ab^e; column a receives x^b c_ba^e
            m[(*e, b)] += &x.coords[a] * val;
            m[(*e, a)] -= &x.coords[b] * val;
        }
    }
    Ok(m)
}

/// Basis of the center `{x : [x, y] = 0 for all y}`, by exact nullspace of
/// the stacked system `[x, e_b] = 0`.
pub fn center_basis(c: &StructureConstants) -> Vec<AlgebraElement> {
    let d = c.dim();
    // row (b, e), column a: c_ab^e
    let mut m = RatMatrix::zeros(d * d, d);
    for ((a, b), v) in c.entries() {
        for (e, val) in v {
            m[(b * d + e, a)] += val;
            m[(a * d + e, b)] -= val;
        }
    }
    m.nullspace().into_iter().map(AlgebraElement::new).collect()
}

/// Coboundary of a 1-cochain `beta`:
/// `dβ(x, y) = [x, β y] - [y, β x] - β[x, y]`.
pub fn coboundary_value(
    c: &StructureConstants,
    beta: &RatMatrix,
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> Result<AlgebraElement> {
    require_square(beta, c.dim())?;
    let bx = AlgebraElement::new(beta.mul_vec(&x.coords)?);
    let by = AlgebraElement::new(beta.mul_vec(&y.coords)?);
    let xy = bracket_eval(c, x, y)?;
    let b_xy = AlgebraElement::new(beta.mul_vec(&xy.coords)?);
    Ok(bracket_eval(c, x, &by)?
        .sub(&bracket_eval(c, y, &bx)?)
        .sub(&b_xy))
}

/// The 2-coboundary `dβ` tabulated on basis pairs `a < b`.
pub fn coboundary_of_one_cochain(c: &StructureConstants, beta: &RatMatrix) -> Result<StructureConstants> {
    require_square(beta, c.dim())?;
    let d = c.dim();
    let mut out = StructureConstants::new(d)?.with_name("coboundary");
    for a in 0..d {
        for b in a + 1..d {
            let v = coboundary_value(c, beta, &AlgebraElement::basis(d, a), &AlgebraElement::basis(d, b))?;
            for (e, x) in v.coords.into_iter().enumerate() {
                out.add_coeff(a, b, e, x)?;
            }
        }
    }
    Ok(out)
}

/// `x` is central: `ad_x = 0` exactly.
pub fn is_central(c: &StructureConstants, x: &AlgebraElement) -> Result<bool> {
    Ok(ad_matrix(c, x)?.is_zero())
}

/// Dimension of the derived algebra `[g, g]`.
pub fn derived_dimension(c: &StructureConstants) -> usize {
    let d = c.dim();
    let cols: Vec<_> = c.entries().collect();
    RatMatrix::from_fn(d, cols.len(), |e, k| cols[k].1.get(&e).cloned().unwrap_or_else(Rational::zero)).rank()
}

/// The center of `[,]_u` spans a subalgebra of `[,]_v`.
pub fn center_subalgebra_check(u: &StructureConstants, v: &StructureConstants) -> Result<bool> {
    check_dim(u.dim(), v.dim())?;
    let z = center_basis(u);
    let span: Vec<Vec<Rational>> = z.iter().map(|x| x.coords.clone()).collect();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            if !in_span(&span, &bracket_eval(v, &z[i], &z[j])?.coords) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For `z1` central in `[,]_u` and `z2` central in `[,]_v`, both `[z1,z2]_u`
/// and `[z1,z2]_v` are central in `lambda [,]_u + mu [,]_v`.
pub fn center_bracket_check(
    u: &StructureConstants,
    v: &StructureConstants,
    lambda: &Rational,
    mu: &Rational,
) -> Result<bool> {
    let w = StructureConstants::linear_combination(lambda, u, mu, v)?;
    let zu = center_basis(u);
    let zv = center_basis(v);
    for z1 in &zu {
        for z2 in &zv {
            for c in [u, v] {
                if !is_central(&w, &bracket_eval(c, z1, z2)?)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Structure constants of a matrix Lie algebra: `basis` spans a space closed
/// under `bracket`, and `coords` reads a matrix back into basis coordinates.
pub fn constants_from_matrix_basis(
    basis: &[RatMatrix],
    bracket: impl Fn(&RatMatrix, &RatMatrix) -> RatMatrix,
    coords: impl Fn(&RatMatrix) -> Vec<Rational>,
) -> Result<StructureConstants> {
    let d = basis.len();
    let mut c = StructureConstants::new(d)?;
    for a in 0..d {
        for b in a + 1..d {
            let m = bracket(&basis[a], &basis[b]);
            let v = coords(&m);
            debug_assert!(
                {
                    let rebuilt = v.iter().zip(basis).fold(RatMatrix::zeros(m.rows(), m.cols()), |acc, (x, e)| {
                        &acc + &e.scale(x)
                    });
                    rebuilt == m
                },
                "bracket leaves the span of the basis"
            );
            for (e, x) in v.into_iter().enumerate() {
                c.add_coeff(a, b, e, x)?;
            }
        }
    }
    Ok(c)
}

/// Index pairs `(a, b)`, `a < b`, labelling the basis `E_ab - E_ba` of so(p).
pub fn so_index_pairs(p: usize) -> Vec<(usize, usize)> {
    (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect()
}

/// The basis of so(p): `E_ab - E_ba` for `a < b`, lexicographic.
pub fn so_basis(p: usize) -> Vec<RatMatrix> {
    so_index_pairs(p)
        .into_iter()
        .map(|(a, b)| {
            let mut m = RatMatrix::zeros(p, p);
            m[(a, b)] = Rational::one();
            m[(b, a)] = -Rational::one();
            m
        })
        .collect()
}

/// Coordinates of an antisymmetric matrix in [`so_basis`]: its strict upper triangle.
pub fn so_coordinates(m: &RatMatrix) -> Vec<Rational> {
    so_index_pairs(m.rows())
        .into_iter()
        .map(|(a, b)| m[(a, b)].clone())
        .collect()
}

/// Antisymmetric matrix with the given so(p) coordinates.
pub fn so_matrix(p: usize, coords: &[Rational]) -> RatMatrix {
    let mut m = RatMatrix::zeros(p, p);
    for ((a, b), x) in so_index_pairs(p).into_iter().zip(coords) {
        m[(a, b)] = x.clone();
        m[(b, a)] = -x.clone();
    }
    m
}

/// Built-in algebras, addressed by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Abelian(usize),
    Heisenberg3,
    Sl2,
    So3,
    So(usize),
    Gl(usize),
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `abelian(d)`, `heisenberg3`, `sl2`, `so3`, `so(p)`, `gl(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let param = |prefix: &str| -> Option<Result<usize>> {
            let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(
                inner
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter in `{s}`"))),
            )
        };
        let b = match s {
            "heisenberg3" => Builtin::Heisenberg3,
            "sl2" => Builtin::Sl2,
            "so3" => Builtin::So3,
            _ => {
                if let Some(d) = param("abelian") {
                    Builtin::Abelian(d?)
                } else if let Some(p) = param("so") {
                    Builtin::So(p?)
                } else if let Some(p) = param("gl") {
                    Builtin::Gl(p?)
                } else {
                    return Err(Error::UnknownAlgebra(s.to_string()));
                }
            }
        };
        b.check()?;
        Ok(b)
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Abelian(d) => write!(f, "abelian({d})"),
            Builtin::Heisenberg3 => write!(f, "heisenberg3"),
            Builtin::Sl2 => write!(f, "sl2"),
            Builtin::So3 => write!(f, "so3"),
            Builtin::So(p) => write!(f, "so({p})"),
            Builtin::Gl(p) => write!(f, "gl({p})"),
        }
    }
}

impl Builtin {
    fn check(self) -> Result<()> {
        match self {
            Builtin::Abelian(0) => Err(Error::InvalidParameter("abelian(d) needs d >= 1".into())),
            Builtin::So(p) | Builtin::Gl(p) if p < 2 => {
                Err(Error::InvalidParameter(format!("{self}: p must be at least 2")))
            }
            _ => Ok(()),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Builtin::Abelian(d) => d,
            Builtin::Heisenberg3 | Builtin::Sl2 | Builtin::So3 => 3,
            Builtin::So(p) => p * (p - 1) / 2,
            Builtin::Gl(p) => p * p,
        }
    }

    pub fn constants(self) -> Result<StructureConstants> {
        self.check()?;
        let name = self.to_string();
        let mut c = match self {
            Builtin::Abelian(d) => StructureConstants::new(d)?,
            Builtin::Heisenberg3 => {
                let mut c = StructureConstants::new(3)?;
                c.add_coeff(0, 1, 2, int(1))?;
                c
            }
            Builtin::Sl2 => {
                // basis (h, e, f)
                let mut c = StructureConstants::new(3)?;
                c.add_coeff(0, 1, 1, int(2))?;
                c.add_coeff(0, 2, 2, int(-2))?;
                c.add_coeff(1, 2, 0, int(1))?;
                c
            }
            Builtin::So3 => {
                let mut c = StructureConstants::new(3)?;
                c.add_coeff(0, 1, 2, int(1))?;
                c.add_coeff(1, 2, 0, int(1))?;
                c.add_coeff(2, 0, 1, int(1))?;
                c
            }
            Builtin::So(p) => constants_from_matrix_basis(
                &so_basis(p),
                |x, y| x.commutator(y).expect("square"),
                so_coordinates,
            )?,
            Builtin::Gl(p) => {
                let basis: Vec<RatMatrix> = (0..p * p)
                    .map(|k| {
                        let mut m = RatMatrix::zeros(p, p);
                        m[(k / p, k % p)] = Rational::one();
                        m
                    })
                    .collect();
                constants_from_matrix_basis(
                    &basis,
                    |x, y| x.commutator(y).expect("square"),
                    |m| (0..p * p).map(|k| m[(k / p, k % p)].clone()).collect(),
                )?
            }
        };
        c.set_name(Some(name));
        debug_assert!(validate_structure_constants(&c).passed());
        Ok(c)
    }
}

/// Looks up a built-in algebra by name, e.g. `sl2` or `gl(3)`.
pub fn builtin_algebra(name: &str) -> Result<StructureConstants> {
    name.parse::<Builtin>()?.constants()
}
