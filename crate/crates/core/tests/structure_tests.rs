use commorder::exact::{cyclo_root, CycloScalar};
use commorder::rings::{commutator, quantum_plane, AlgebraElement, DenseMatrix, RingDescriptor, RingValue};
use commorder::structure::{
    anticommutator_equiv_check, build_matrix_units, conjugator_to_cyclic, cyclic_to_conjugator, diagonal_model,
    iso_check, lagrange_projector, make_idempotents, phi, phi_inverse, quantum_plane_demo, structure_theorem,
    IdempotentSystem, MatrixUnitSystem,
};
use commorder::witness::{build_theorem32, corollary_units, Strategy};
use commorder::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagonal_system(n: usize) -> (RingValue, IdempotentSystem) {
    let m = diagonal_model(n).unwrap();
    (m.v.clone(), make_idempotents(&m.ring, &m.u, &m.omega, n).unwrap())
}

fn units_for(sys: &IdempotentSystem, v: &RingValue) -> MatrixUnitSystem {
    build_matrix_units(sys, &conjugator_to_cyclic(sys, v).unwrap()).unwrap()
}

/// `u = P` from the general-ring construction, inside `M_n(Q(zeta_n))`.
fn cycle_system(n: usize) -> IdempotentSystem {
    let field = RingDescriptor::Cyclotomic(n as u64);
    let dec = corollary_units(n, &field, &if n == 2 { Strategy::N2 } else { Strategy::InverseNMinus1 }).unwrap();
    let (a, b) = build_theorem32(&dec).unwrap();
    let ring = RingDescriptor::matrix(n, field.clone()).unwrap();
    let u = commutator(&RingValue::Matrix(a), &RingValue::Matrix(b)).unwrap();
    let omega = RingValue::Matrix(DenseMatrix::scalar(&field, n, &RingValue::Cyclo(cyclo_root(n as u64, 1).unwrap())));
    make_idempotents(&ring, &u, &omega, n).unwrap()
}

#[test]
fn projectors_and_conjugation_shift() {
    for n in 2..=5 {
        let (v, sys) = diagonal_system(n);
        let v_inv = v.inverse().unwrap();
        for k in 0..n {
            assert_eq!(&lagrange_projector(&sys.omega, n, k, &sys.u).unwrap(), sys.e(k as i64));
            assert_eq!(&(&(&v * sys.e(k as i64)) * &v_inv), sys.e(k as i64 + 1));
        }
    }
}

#[test]
fn idempotents_of_the_cycle_are_rank_one() {
    for n in 2..=5 {
        let sys = cycle_system(n);
        sys.verify().unwrap();
        let field = RingDescriptor::Cyclotomic(n as u64);
        for e in &sys.idempotents {
            let m = e.as_matrix().unwrap();
            // trace of an idempotent over a field of char 0 is its rank
            assert_eq!(m.trace().unwrap(), field.one());
        }
    }
}

#[test]
fn cycle_has_a_diagonal_conjugator() {
    // D = diag(1, omega^-1, ..., omega^-(n-1)) satisfies D P D^-1 = omega^-1 P.
    // The idempotents here are dense, so sampling at n = 5 takes most of a minute.
    for n in 2..=4 {
        let sys = cycle_system(n);
        let field = RingDescriptor::Cyclotomic(n as u64);
        let diag: Vec<RingValue> = (0..n as i64)
            .map(|i| RingValue::Cyclo(cyclo_root(n as u64, -i).unwrap()))
            .collect();
        let v = RingValue::Matrix(DenseMatrix::diagonal(&field, &diag));
        let units = units_for(&sys, &v);
        let report = iso_check(&units, 7).unwrap();
        assert!(report.ok());
        assert_eq!(report.dim_corner, Some(1));
        assert_eq!(report.rank, Some(n * n));
    }
}

#[test]
fn round_trips_between_conjugators_and_data() {
    for n in 2..=6 {
        let (v, sys) = diagonal_system(n);
        let data = conjugator_to_cyclic(&sys, &v).unwrap();
        let (v2, w2) = cyclic_to_conjugator(&sys, &data).unwrap();
        assert_eq!(v2.inverse().unwrap(), w2);
        let data2 = conjugator_to_cyclic(&sys, &v2).unwrap();
        data2.verify(&sys).unwrap();
        let (v3, _) = cyclic_to_conjugator(&sys, &data2).unwrap();
        assert_eq!(
            &(&(&v3 * &sys.u) * &v3.inverse().unwrap()),
            &(&sys.omega_pow(-1) * &sys.u)
        );
    }
}

#[test]
fn phi_round_trips_on_diagonal_models() {
    for n in 2..=4 {
        let (v, sys) = diagonal_system(n);
        let units = units_for(&sys, &v);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..5 {
            let r = sys.ring.random_element(&mut rng);
            let s = phi_inverse(&units, &r).unwrap();
            assert_eq!(phi(&units, &s).unwrap(), r);
            assert_eq!(phi_inverse(&units, &phi(&units, &s).unwrap()).unwrap(), s);
        }
        // phi(E_ij with entry e_0) is the matrix unit
        for i in 0..n {
            for j in 0..n {
                let mut m = DenseMatrix::zero(&sys.ring, n, n);
                m.set(i, j, units.e0.clone());
                assert_eq!(phi(&units, &m).unwrap(), units.e[i][j]);
            }
        }
    }
}

#[test]
fn quantum_plane_matrix_units_for_n3() {
    let w = cyclo_root(3, 1).unwrap();
    let one = CycloScalar::one(3);
    let a = (&(&one - &w).pow(3).unwrap() * &w.pow(3).unwrap()).inverse().unwrap();
    let alg = quantum_plane(3, &a, &one).unwrap();
    let ring = RingDescriptor::Algebra(alg.clone());
    let x = RingValue::Algebra(AlgebraElement::basis(&alg, 3));
    let y = RingValue::Algebra(AlgebraElement::basis(&alg, 1));
    let omega = RingValue::Algebra(AlgebraElement::one(&alg).scale(&w));
    let (units, report) = structure_theorem(&ring, &x, &y, &omega, &x, 3, 0).unwrap();
    assert_eq!(units.e.len(), 3);
    assert_eq!(report.dim_ring, Some(9));
    assert_eq!(report.bijective, Some(true));
    // a different seed still verifies
    assert!(iso_check(&units, 12345).unwrap().ok());
}

#[test]
fn demo_is_deterministic() {
    let a = quantum_plane_demo(3, 0).unwrap().to_json();
    let b = quantum_plane_demo(3, 0).unwrap().to_json();
    assert_eq!(a, b);
    assert!(matches!(quantum_plane_demo(7, 0), Err(Error::Domain(_))));
    assert!(matches!(quantum_plane_demo(1, 0), Err(Error::Domain(_))));
}

#[test]
fn demo_e0_for_n2() {
    // omega = -1: e_0 = (1 + 2xy) / 2 = 1/2 + xy
    let report = quantum_plane_demo(2, 0).unwrap();
    let xy = report.labels.iter().position(|l| l == "x^1y^1").unwrap();
    let expected: Vec<CycloScalar> = (0..4)
        .map(|i| match i {
            0 => CycloScalar::from_rational(2, "1/2".parse().unwrap()),
            i if i == xy => CycloScalar::one(2),
            _ => CycloScalar::zero(2),
        })
        .collect();
    assert_eq!(report.e0, expected);
}

#[test]
fn staged_errors_name_the_stage() {
    let m = diagonal_model(2).unwrap();
    let field = RingDescriptor::Cyclotomic(2);
    let a = RingValue::Matrix(DenseMatrix::unit(&field, 2, 0, 1));
    let b = RingValue::Matrix(DenseMatrix::unit(&field, 2, 1, 0));
    let err = structure_theorem(&m.ring, &a, &b, &m.omega, &m.ring.one(), 2, 0).unwrap_err();
    assert_eq!(err.root(), &Error::NotACyclicConjugator);
    assert!(err.to_string().starts_with("cyclic equivalence"), "{err}");
    // u = [a, a] = 0 fails u^n = 1 in the idempotent stage
    let err = structure_theorem(&m.ring, &a, &a, &m.omega, &m.v, 2, 0).unwrap_err();
    assert!(matches!(err.root(), Error::HypothesisNotSatisfied(_)));
    assert!(err.to_string().starts_with("idempotents"), "{err}");
}

#[test]
fn anticommutator_directions_fail_independently() {
    let m = diagonal_model(2).unwrap();
    let (v, sys) = diagonal_system(2);
    let units = units_for(&sys, &v);
    let (x, y) = (units.y[1].clone(), units.x[1].clone());
    assert!(anticommutator_equiv_check(&m.ring, &m.u, &x, &y).unwrap().ok());
    // swapping the roles gives xy = e_1: neither hypothesis holds
    let report = anticommutator_equiv_check(&m.ring, &m.u, &y, &x).unwrap();
    assert_eq!(report.idempotent_to_anticommutator, None);
    assert_eq!(report.anticommutator_to_idempotent, None);
    let two = m.ring.from_int(2);
    assert!(matches!(
        anticommutator_equiv_check(&m.ring, &two, &x, &y),
        Err(Error::HypothesisNotSatisfied(_))
    ));
}
