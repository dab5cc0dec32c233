mod common;

use common::{
    cofactor_det, diagram, random_int_matrix, KNOT_3_1, KNOT_3_1_VIRTUAL, KNOT_4_96, LINK_7,
};
use pbq_core::engine::{assemble_relations, presentation_matrix};
use pbq_core::parity::classify;
use pbq_core::ring::{
    quaternion_to_complex_rep, Gaussian, IntPoly, LaurentPoly, Matrix, Monomial, QuatPoly,
    Quaternion, Var,
};
use pbq_core::switches::{Family, QuaternionUnits};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const VARS: [Var; 3] = [Var::S, Var::T, Var::Z];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::array::uniform3(-3i32..=3)
        .prop_map(|e| Monomial::from_powers(VARS.iter().copied().zip(e)))
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((monomial(), -5i64..=5), 0..5)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(m, c)| (m, c.into()))))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-3i64..=3).prop_map(|[a, b, c, d]| Quaternion::new(a, b, c, d))
}

fn quat_poly() -> impl Strategy<Value = QuatPoly> {
    prop::collection::vec((monomial(), quaternion()), 0..4).prop_map(LaurentPoly::from_terms)
}

fn sparse_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((monomial(), -3i64..=3), 0..3)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(m, c)| (m, c.into()))))
}

fn int_matrix(n: usize) -> impl Strategy<Value = Matrix<pbq_core::ring::Integer>> {
    matrix_of(n, int_poly())
}

fn matrix_of(
    n: usize,
    entry: impl Strategy<Value = IntPoly>,
) -> impl Strategy<Value = Matrix<pbq_core::ring::Integer>> {
    prop::collection::vec(entry, n * n).prop_map(move |entries| {
        let mut m = Matrix::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            m.set(k / n, k % n, e);
        }
        m
    })
}

fn quat_matrix(n: usize) -> impl Strategy<Value = Matrix<Quaternion>> {
    prop::collection::vec(quat_poly(), n * n).prop_map(move |entries| {
        let mut m = Matrix::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            m.set(k / n, k % n, e);
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn int_ring_laws(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &IntPoly::one(), a.clone());
    }

    #[test]
    fn quaternion_ring_laws(a in quat_poly(), b in quat_poly(), c in quat_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&b + &c) * &a, &(&b * &a) + &(&c * &a));
    }

    #[test]
    fn quaternion_norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert_eq!((p.clone() * q.clone()).norm(), p.norm() * q.norm());
        prop_assert_eq!((p.clone() * q.clone()).conj(), q.conj() * p.conj());
    }

    #[test]
    fn display_parse_round_trip(a in int_poly(), q in quat_poly()) {
        prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
        prop_assert_eq!(q.to_string().parse::<QuatPoly>().unwrap(), q);
    }

    #[test]
    fn monomial_units_invert(m in monomial(), neg in any::<bool>()) {
        let c: i64 = if neg { -1 } else { 1 };
        let u = IntPoly::term(c.into(), m);
        let inv = u.unit_inverse().unwrap();
        prop_assert!((&u * &inv).is_one());
    }

    #[test]
    fn bareiss_matches_cofactor(m in (1usize..=4).prop_flat_map(int_matrix)) {
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix_of(3, sparse_poly()), b in matrix_of(3, sparse_poly())) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn complex_rep_is_a_homomorphism(a in quat_matrix(2), b in quat_matrix(2)) {
        let lhs = quaternion_to_complex_rep(&a.mul(&b).unwrap());
        let rhs = quaternion_to_complex_rep(&a).mul(&quaternion_to_complex_rep(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn study_determinant_matches_cofactor(a in quat_matrix(2)) {
        let rep = quaternion_to_complex_rep(&a);
        prop_assert_eq!(rep.determinant().unwrap(), cofactor_det(&rep));
    }
}

#[test]
fn quaternion_units_anticommute() {
    let i = QuatPoly::constant(Quaternion::i());
    let j = QuatPoly::constant(Quaternion::j());
    assert_eq!(&i * &j, QuatPoly::constant(Quaternion::k()));
    assert_eq!(&j * &i, QuatPoly::constant(-Quaternion::k()));
}

#[test]
fn gaussian_i_squared() {
    assert_eq!(Gaussian::i() * Gaussian::i(), Gaussian::new(-1, 0));
}

#[test]
fn bareiss_matches_cofactor_on_random_5x5() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..100 {
        let n = 1 + k % 5;
        let m = random_int_matrix(&mut rng, n, &[Var::S, Var::T]);
        assert_eq!(m.determinant().unwrap(), cofactor_det(&m), "matrix {m:?}");
    }
}

#[test]
fn bareiss_matches_cofactor_on_presentation_matrices() {
    for code in [KNOT_3_1, KNOT_4_96, KNOT_3_1_VIRTUAL] {
        let d = diagram(code);
        for family in [Family::AlphaSawollek, Family::AlphaLinkParity] {
            let rs = family.int_rules(1).unwrap();
            let m = presentation_matrix(&d, &assemble_relations(&d, &classify(&d), &rs).unwrap())
                .unwrap();
            assert!(m.rows() <= 10);
            assert_eq!(
                m.determinant().unwrap(),
                cofactor_det(&m),
                "{code} {family}"
            );
        }
        let rs = Family::ZParityQuaternionic
            .quaternion_rules(1, &QuaternionUnits::default())
            .unwrap();
        let stripped = d.without_virtual();
        let m = presentation_matrix(
            &stripped,
            &assemble_relations(&stripped, &classify(&stripped), &rs).unwrap(),
        )
        .unwrap();
        if m.rows() <= 6 {
            let rep = quaternion_to_complex_rep(&m);
            assert_eq!(
                rep.determinant().unwrap(),
                cofactor_det(&rep),
                "{code} quaternionic"
            );
        }
    }
    let d = diagram(LINK_7);
    let rs = Family::LinkParity.int_rules(2).unwrap();
    let m = presentation_matrix(&d, &assemble_relations(&d, &classify(&d), &rs).unwrap()).unwrap();
    assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
}
