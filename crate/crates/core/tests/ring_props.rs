//! Ring axioms and arithmetic against independent oracles: residues against
//! `i128` arithmetic, cyclotomic elements against complex floating-point
//! evaluation at `exp(2 pi i / m)`.

use commorder::exact::{cyclo_root, CycloScalar, Rational, ZmodScalar};
use commorder::rings::json::{matrix_from_json, matrix_to_json, value_from_json, value_to_json};
use commorder::rings::{quantum_plane, DenseMatrix, RingDescriptor, RingValue};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_f64(r: &Rational) -> f64 {
    r.to_string()
        .split_once('/')
        .map(|(p, q)| p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap())
        .unwrap()
}

/// Evaluates the power-basis representation at the primitive root.
fn evaluate(c: &CycloScalar) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI / c.order() as f64;
    c.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (i, a)| {
        let a = to_f64(a);
        (re + a * (theta * i as f64).cos(), im + a * (theta * i as f64).sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 * (1.0 + b.0.abs()) && (a.1 - b.1).abs() < 1e-6 * (1.0 + b.1.abs())
}

fn cyclo(order: u64, coeffs: &[i64]) -> CycloScalar {
    let poly = coeffs.iter().map(|&c| Rational::from_int(c)).collect();
    CycloScalar::from_poly(order, poly)
}

fn sample_rings() -> Vec<RingDescriptor> {
    let q = RingDescriptor::Rational;
    let qp3 = quantum_plane(3, &CycloScalar::from_int(3, 2), &CycloScalar::one(3)).unwrap();
    vec![
        q.clone(),
        RingDescriptor::Zmod(6),
        RingDescriptor::Zmod(7),
        RingDescriptor::Cyclotomic(5),
        RingDescriptor::Cyclotomic(12),
        RingDescriptor::matrix(2, q).unwrap(),
        RingDescriptor::matrix(2, RingDescriptor::Cyclotomic(3)).unwrap(),
        RingDescriptor::matrix(2, RingDescriptor::matrix(2, RingDescriptor::Zmod(4)).unwrap()).unwrap(),
        RingDescriptor::Algebra(qp3),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zmod_matches_i128(m in 2u64..60, a in -500i64..500, b in -500i64..500) {
        let (x, y) = (ZmodScalar::new(m, a).unwrap(), ZmodScalar::new(m, b).unwrap());
        let red = |v: i128| v.rem_euclid(m as i128) as u64;
        prop_assert_eq!((x + y).residue(), red(a as i128 + b as i128));
        prop_assert_eq!((x * y).residue(), red(a as i128 * b as i128));
        prop_assert_eq!((x - y).residue(), red(a as i128 - b as i128));
        if let Ok(inv) = x.inverse() {
            prop_assert_eq!((x * inv).residue(), 1 % m);
        } else {
            prop_assert!(num_integer::gcd(red(a as i128), m) != 1);
        }
    }

    #[test]
    fn cyclo_matches_complex_evaluation(
        order in 1u64..25,
        a in proptest::collection::vec(-4i64..5, 0..8),
        b in proptest::collection::vec(-4i64..5, 0..8),
    ) {
        let (x, y) = (cyclo(order, &a), cyclo(order, &b));
        let (ex, ey) = (evaluate(&x), evaluate(&y));
        prop_assert!(close(evaluate(&(&x + &y)), (ex.0 + ey.0, ex.1 + ey.1)));
        prop_assert!(close(evaluate(&(&x * &y)), (ex.0 * ey.0 - ex.1 * ey.1, ex.0 * ey.1 + ex.1 * ey.0)));
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert!((&x * &inv).is_one());
        }
    }

    #[test]
    fn roots_have_the_right_order(order in 1u64..30, e in -60i64..60) {
        let z = cyclo_root(order, e).unwrap();
        prop_assert!(z.pow(order as i64).unwrap().is_one());
        let theta = 2.0 * std::f64::consts::PI * e as f64 / order as f64;
        prop_assert!(close(evaluate(&z), (theta.cos(), theta.sin())));
    }

    #[test]
    fn rational_field_laws(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let (x, y) = (Rational::new(a, b).unwrap(), Rational::new(c, d).unwrap());
        let lhs = to_f64(&(&x * &y));
        prop_assert!((lhs - (a as f64 / b as f64) * (c as f64 / d as f64)).abs() < 1e-9);
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn ring_axioms(ring_index in 0usize..9, seed in any::<u64>()) {
        let ring = &sample_rings()[ring_index];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (ring.random_element(&mut rng), ring.random_element(&mut rng), ring.random_element(&mut rng));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &ring.one(), a.clone());
        prop_assert_eq!(&ring.one() * &a, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &a.negate()).is_zero());
        if let Ok(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }
        prop_assert!(ring.is_central(&ring.one()));
    }

    #[test]
    fn json_round_trip(ring_index in 0usize..9, seed in any::<u64>()) {
        let ring = &sample_rings()[ring_index];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = ring.random_element(&mut rng);
        let text = serde_json::to_string(&value_to_json(&v)).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let back = value_from_json(ring, &parsed).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert_eq!(serde_json::to_string(&value_to_json(&back)).unwrap(), text);

        let m = DenseMatrix::from_fn(ring, 2, 3, |_, _| ring.random_element(&mut rng));
        let mj = matrix_to_json(&m);
        prop_assert_eq!(matrix_from_json(&mj).unwrap(), m);
    }

    #[test]
    fn matrix_inverse_round_trip(seed in any::<u64>()) {
        let q = RingDescriptor::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = DenseMatrix::from_fn(&q, 3, 3, |_, _| q.random_element(&mut rng));
        match m.inverse() {
            Ok(inv) => prop_assert!(m.mat_mul(&inv).unwrap().is_identity()),
            // over a field, singular means a zero determinant: rows are dependent
            Err(_) => {
                let rows: Vec<Vec<RingValue>> = (0..3).map(|i| m.row(i).to_vec()).collect();
                prop_assert!(commorder::rings::linalg::rank(&q, &rows) < 3);
            }
        }
    }
}

#[test]
fn zmod8_remark() {
    let two = ZmodScalar::new(8, 2).unwrap();
    assert!(!two.is_unit());
    assert!(two.inverse().is_err());
    let three = ZmodScalar::new(8, 3).unwrap();
    assert_eq!(three.inverse().unwrap(), three);
}

#[test]
fn matrix_ring_noncommutative() {
    let m2 = RingDescriptor::matrix(2, RingDescriptor::Rational).unwrap();
    assert!(!m2.is_commutative());
    let q = RingDescriptor::Rational;
    let e01 = RingValue::Matrix(DenseMatrix::unit(&q, 2, 0, 1));
    let e10 = RingValue::Matrix(DenseMatrix::unit(&q, 2, 1, 0));
    assert_ne!(&e01 * &e10, &e10 * &e01);
    assert!(!m2.is_central(&e01));
    assert!(m2.is_central(&m2.from_int(5)));
}
