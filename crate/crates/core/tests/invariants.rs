use lie_ext::algebra::{
    bracket_eval, builtin_algebra, center_basis, derived_dimension, mixed_jacobi_check,
    validate_structure_constants, AlgebraElement, BracketPair, StructureConstants,
};
use lie_ext::linalg::RatMatrix;
use lie_ext::rational::{frac, int};
use lie_ext::sampling;
use lie_ext::spectral::{
    circulant_rank_exact, mu_spectrum, omega_pow, transform_w, DftMatrix, DEFAULT_TOLERANCE,
};
use lie_ext::wtensor::{
    circulant_w, direct_sum_w, extension_bracket, induced_structure_constants, leibnitz_deform,
    leibnitz_w, slice_matrix, slices_commute, truncate_to_solvable, truncation_obstruction, wraparound_part, wtensor_validate,
    AlphaVector, GnElement, WTensor, DEFAULT_CAP,
};
use lie_ext::Rational;
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(a, b)| frac(a, b))
}

fn alpha(max_n: usize) -> impl Strategy<Value = AlphaVector> {
    proptest::collection::vec(rat(), 1..=max_n).prop_map(|v| AlphaVector::new(v).unwrap())
}

fn element(d: usize) -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec(rat(), d).prop_map(AlgebraElement::new)
}

fn valid_families(n: usize, a: &AlphaVector, lambda: &Rational) -> Vec<WTensor> {
    let mut out = vec![
        direct_sum_w(n).unwrap(),
        circulant_w(a),
        leibnitz_w(n).unwrap(),
        leibnitz_deform(n, lambda).unwrap(),
    ];
    if n >= 2 {
        // truncation applies only where components 1..n form a subalgebra
        let t: Vec<_> = out
            .iter()
            .filter(|w| truncation_obstruction(w).is_none())
            .map(|w| truncate_to_solvable(w).unwrap())
            .collect();
        out.extend(t);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn families_are_valid(a in alpha(6), lambda in rat()) {
        for w in valid_families(a.n(), &a, &lambda) {
            prop_assert!(wtensor_validate(&w).passed());
            prop_assert!(slices_commute(&w));
        }
    }

    #[test]
    fn extension_bracket_matches_induced_constants(
        a in alpha(3),
        name in prop_oneof![Just("sl2"), Just("heisenberg3"), Just("so3")],
        xs in proptest::collection::vec(element(3), 3),
        ys in proptest::collection::vec(element(3), 3),
    ) {
        let n = a.n();
        let c = builtin_algebra(name).unwrap();
        let w = circulant_w(&a);
        let x = GnElement::new(xs[..n].to_vec()).unwrap();
        let y = GnElement::new(ys[..n].to_vec()).unwrap();
        let direct = extension_bracket(&w, &c, &x, &y).unwrap();
        let induced = induced_structure_constants(&w, &c, DEFAULT_CAP).unwrap();
        let via = bracket_eval(&induced, &x.flatten(), &y.flatten()).unwrap();
        prop_assert_eq!(direct.flatten(), via);
    }

    #[test]
    fn deformation_splits_into_compatible_parts(n in 1usize..=5, lambda in rat()) {
        // leibnitz_deform(λ) = leibnitz + λ·wraparound, and both parts induce compatible brackets
        let c = builtin_algebra("sl2").unwrap();
        let l = induced_structure_constants(&leibnitz_w(n).unwrap(), &c, DEFAULT_CAP).unwrap();
        let r = induced_structure_constants(&wraparound_part(n).unwrap(), &c, DEFAULT_CAP).unwrap();
        prop_assert!(validate_structure_constants(&l).passed());
        prop_assert!(validate_structure_constants(&r).passed());
        prop_assert!(mixed_jacobi_check(&BracketPair::new(l.clone(), r.clone()).unwrap()).passed());
        let combo = StructureConstants::linear_combination(&int(1), &l, &lambda, &r).unwrap();
        let deformed = induced_structure_constants(&leibnitz_deform(n, &lambda).unwrap(), &c, DEFAULT_CAP).unwrap();
        prop_assert_eq!(combo.entries().collect::<Vec<_>>(), deformed.entries().collect::<Vec<_>>());
    }

    #[test]
    fn spectrum_zero_count_matches_rank(seed in any::<u64>(), n in 1usize..=12) {
        let a = sampling::sparse_alpha(&mut sampling::rng(seed), n);
        let s = mu_spectrum(&a, DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!(s.zero_flags.iter().filter(|f| **f).count(), n - circulant_rank_exact(&a));
        let t = transform_w(&circulant_w(&a));
        prop_assert!(t.diagonal_pattern_residual(&s.values) < 1e-9);
    }

    #[test]
    fn commutation_paths_agree(seed in any::<u64>(), n in 1usize..=4) {
        let w = sampling::symmetric_tensor(&mut sampling::rng(seed), n);
        prop_assert_eq!(wtensor_validate(&w).passed(), slices_commute(&w));
    }

    #[test]
    fn center_is_maximal(name in prop_oneof![Just("sl2"), Just("heisenberg3"), Just("gl(2)"), Just("gl(3)"), Just("abelian(3)")]) {
        let c = builtin_algebra(name).unwrap();
        let z = center_basis(&c);
        let d = c.dim();
        for v in &z {
            for b in 0..d {
                prop_assert!(bracket_eval(&c, v, &AlgebraElement::basis(d, b)).unwrap().is_zero());
            }
        }
        let rows: Vec<Vec<Rational>> = z.iter().map(|v| v.coords.clone()).collect();
        prop_assert_eq!(RatMatrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0), z.len());
    }
}

#[test]
fn shift_slices_are_powers_and_diagonalize() {
    for n in 1..8 {
        let w = circulant_w(&AlphaVector::unit(n, 0).unwrap());
        let s1 = slice_matrix(&w, 1 % n).unwrap();
        let mut power = RatMatrix::identity(n);
        let dft = DftMatrix::new(n).unwrap();
        for p in 0..n {
            let sp = slice_matrix(&w, p).unwrap();
            assert_eq!(sp, power);
            let d = dft.conjugate(&sp).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let target = if i == j { omega_pow(n, (i * p) as i64) } else { Default::default() };
                    assert!((d[i * n + j] - target).norm() < 1e-12, "n={n} p={p} ({i},{j})");
                }
            }
            power = &power * &s1;
        }
    }
}

#[test]
fn circulant_derived_dimension_counts_copies() {
    // an α with m nonzero μ gives m copies of sl2 plus abelian ideals
    let sl2 = builtin_algebra("sl2").unwrap();
    for v in [&[1i64, 0, 0][..], &[1, 1, 1], &[1, -1, 0, 0], &[0, 0], &[2, 1], &[1, 0, -1, 0]] {
        let a = AlphaVector::from_i64(v).unwrap();
        let c = induced_structure_constants(&circulant_w(&a), &sl2, DEFAULT_CAP).unwrap();
        assert_eq!(derived_dimension(&c), 3 * circulant_rank_exact(&a), "{v:?}");
    }
}

#[test]
fn leibnitz_truncation_is_nilpotent_extension() {
    let sl2 = builtin_algebra("sl2").unwrap();
    for n in 2..6 {
        let t = truncate_to_solvable(&leibnitz_w(n).unwrap()).unwrap();
        let c = induced_structure_constants(&t, &sl2, DEFAULT_CAP).unwrap();
        assert!(validate_structure_constants(&c).passed());
        assert!(!c.is_abelian() || n == 2);
        let zero = Rational::zero();
        assert!(t.entries().all(|((i, j, k), v)| *v != zero && i + j + 1 == k));
    }
}
