//! Property tests for the algebraic invariants that every module promises:
//! rank-nullity, canonical subspace forms, graded commutativity and
//! associativity of the wedge, determinant multiplicativity, functoriality
//! of the induced map on 2-vectors, linearity of the Plücker map.

use proptest::prelude::*;

use gr25::exactalg::subspace_ops;
use gr25::exterior::{second_exterior_power, wedge, KVector, Variance};
use gr25::quadrics::plucker_quadric;
use gr25::{FieldTag, Matrix, Scalar, Subspace};

fn f7() -> FieldTag {
    FieldTag::fp(7).unwrap()
}

fn arb_field() -> impl Strategy<Value = FieldTag> {
    prop_oneof![
        Just(FieldTag::Rational),
        Just(f7()),
        Just(FieldTag::fp(10_007).unwrap()),
    ]
}

fn arb_scalar(field: FieldTag) -> impl Strategy<Value = Scalar> {
    (-9i64..=9).prop_map(move |n| Scalar::from_i64(n, field))
}

fn arb_matrix(field: FieldTag, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(arb_scalar(field), rows * cols).prop_map(move |data| {
        Matrix::from_fn(rows, cols, field, |r, c| data[r * cols + c].clone()).unwrap()
    })
}

fn arb_kvector(field: FieldTag, degree: usize) -> impl Strategy<Value = KVector> {
    let dim = [1usize, 5, 10, 10, 5, 1][degree];
    proptest::collection::vec(arb_scalar(field), dim).prop_map(move |coords| {
        KVector::from_coords(degree, Variance::Vector, field, &coords).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn rank_nullity(m in arb_field().prop_flat_map(|f| arb_matrix(f, 4, 7))) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
        prop_assert!(m.rank() <= m.rows().min(m.cols()));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn canonical_form_is_presentation_free(
        m in arb_matrix(f7(), 3, 6),
        shuffle in proptest::collection::vec(0usize..3, 3)
    ) {
        // Re-present the row space by sums of rows; the canonical form of
        // the span must not move.
        let rows: Vec<Vec<Scalar>> = (0..3).map(|r| m.row(r).to_vec()).collect();
        let a = Subspace::from_span(6, f7(), rows.clone());
        let mut mixed = rows.clone();
        for (i, &j) in shuffle.iter().enumerate() {
            let combined: Vec<Scalar> = mixed[i]
                .iter()
                .zip(&rows[j])
                .map(|(x, y)| x + y)
                .collect();
            mixed.push(combined);
        }
        let b = Subspace::from_span(6, f7(), mixed);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn subspace_dimension_formula(
        a in arb_matrix(f7(), 3, 6),
        b in arb_matrix(f7(), 4, 6)
    ) {
        let a = Subspace::from_span(6, f7(), (0..3).map(|r| a.row(r).to_vec()).collect());
        let b = Subspace::from_span(6, f7(), (0..4).map(|r| b.row(r).to_vec()).collect());
        let rel = subspace_ops(&a, &b).unwrap();
        prop_assert_eq!(rel.sum.dim() + rel.intersection.dim(), a.dim() + b.dim());
        for v in rel.intersection.basis() {
            prop_assert!(a.contains(v) && b.contains(v));
        }
    }

    #[test]
    fn det_multiplicative(
        a in arb_matrix(f7(), 5, 5),
        b in arb_matrix(f7(), 5, 5)
    ) {
        let lhs = a.mul(&b).unwrap().det().unwrap();
        let rhs = &a.det().unwrap() * &b.det().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_graded_commutativity(
        j in 0usize..=5,
        k in 0usize..=5,
        seed in any::<u64>()
    ) {
        prop_assume!(j + k <= 5);
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = KVector::random(j, Variance::Vector, f7(), &mut rng);
        let b = KVector::random(k, Variance::Vector, f7(), &mut rng);
        let ab = wedge(&a, &b).unwrap();
        let ba = wedge(&b, &a).unwrap();
        let expected = if (j * k) % 2 == 0 { ba.clone() } else { ba.neg() };
        prop_assert_eq!(ab, expected);
    }

    #[test]
    fn wedge_associativity(
        degrees in prop_oneof![
            Just((1usize, 2usize, 1usize)),
            Just((1, 1, 1)),
            Just((2, 2, 1)),
            Just((1, 3, 1)),
            Just((2, 1, 2)),
            Just((0, 2, 3)),
        ],
        seed in any::<u64>()
    ) {
        use rand::SeedableRng;
        let (dj, dk, dl) = degrees;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = KVector::random(dj, Variance::Vector, f7(), &mut rng);
        let b = KVector::random(dk, Variance::Vector, f7(), &mut rng);
        let c = KVector::random(dl, Variance::Vector, f7(), &mut rng);
        let lhs = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
        let rhs = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_bilinearity(
        a in arb_kvector(f7(), 2),
        b in arb_kvector(f7(), 2),
        c in arb_kvector(f7(), 2),
        s in arb_scalar(f7())
    ) {
        let lhs = wedge(&a.scale(&s).add(&b).unwrap(), &c).unwrap();
        let rhs = wedge(&a, &c).unwrap().scale(&s).add(&wedge(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_exterior_power_functorial(
        g in arb_matrix(f7(), 5, 5),
        h in arb_matrix(f7(), 5, 5)
    ) {
        let lhs = second_exterior_power(&g.mul(&h).unwrap()).unwrap();
        let rhs = second_exterior_power(&g).unwrap().mul(&second_exterior_power(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_square_detects_decomposables(
        a in arb_kvector(f7(), 1),
        b in arb_kvector(f7(), 1)
    ) {
        let product = wedge(&a, &b).unwrap();
        prop_assert!(gr25::exterior::is_decomposable(&product));
    }

    #[test]
    fn plucker_map_linear(
        v in arb_kvector(f7(), 1),
        w in arb_kvector(f7(), 1),
        s in arb_scalar(f7())
    ) {
        let lhs = plucker_quadric(&v.scale(&s).add(&w).unwrap()).unwrap();
        let rhs = plucker_quadric(&v).unwrap().scale(&s).add(&plucker_quadric(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn plucker_quadrics_vanish_on_decomposables(
        a in arb_kvector(f7(), 1),
        b in arb_kvector(f7(), 1),
        v in arb_kvector(f7(), 1)
    ) {
        let q = plucker_quadric(&v).unwrap();
        let point = wedge(&a, &b).unwrap().to_coords();
        prop_assert!(q.evaluate(&point).unwrap().is_zero());
    }

    #[test]
    fn det_of_induced_map_is_fourth_power(g in arb_matrix(f7(), 5, 5)) {
        // The exponent is measured, not assumed: det(∧²g) = det(g)⁴.
        let d = g.det().unwrap();
        let dw = second_exterior_power(&g).unwrap().det().unwrap();
        prop_assert_eq!(dw, d.pow(4));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn rank_nullity_over_the_rationals(m in arb_matrix(FieldTag::Rational, 4, 6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
    }

    #[test]
    fn matrix_file_round_trip(m in arb_matrix(FieldTag::Rational, 3, 4)) {
        let text = gr25::matfile::format_matrix(&m);
        prop_assert_eq!(gr25::matfile::parse_matrix(&text).unwrap(), m);
    }
}

/// Every member of a translated quadric system vanishes on every enumerated
/// point of the translated Grassmannian, not just on sampled decomposables.
#[test]
fn translate_system_vanishes_on_the_whole_translated_grassmannian() {
    use gr25::geometry::enumerate_grassmannian;
    use gr25::quadrics::translate_quadric_space;
    use rand::SeedableRng;

    let field = FieldTag::fp(5).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let g = Matrix::random_invertible(10, field, &mut rng);
    let system = translate_quadric_space(&g).unwrap();
    for pt in enumerate_grassmannian(5).unwrap() {
        let moved = g.mul_vec(&pt.scalars(field)).unwrap();
        for q in system.members() {
            assert!(q.evaluate(&moved).unwrap().is_zero(), "at {pt:?}");
        }
    }
}
