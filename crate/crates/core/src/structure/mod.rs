//! From a commutator of finite order to an explicit matrix-ring structure.
//!
//! Given `u = [a, b]` with `u^n = 1`, a central primitive `n`-th root
//! `omega` and a unit `v` with `v u v^-1 = omega^-1 u`, the ring splits as
//! `M_n(S)` with `S = e_0 R e_0`. Each stage here checks its identities
//! exactly before handing its output on.

mod cyclic;
mod idempotents;
mod theorem;
mod units;

pub use cyclic::{conjugator_to_cyclic, cyclic_to_conjugator, CyclicEquivalenceData};
pub use idempotents::{lagrange_projector, make_idempotents, IdempotentSystem};
pub use theorem::{
    anticommutator_equiv_check, corner_basis, diagonal_model, iso_check, quantum_plane_demo, structure_theorem,
    AnticommutatorReport, DiagonalModel, Implication, IsoReport, QuantumPlaneReport, HOM_SAMPLES,
};
pub use units::{build_matrix_units, phi, phi_inverse, MatrixUnitSystem};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::Rational;
    use crate::rings::{DenseMatrix, RingDescriptor, RingValue};

    fn q(n: i64) -> RingValue {
        RingValue::Rational(Rational::from_int(n))
    }

    fn model_system(n: usize) -> (DiagonalModel, IdempotentSystem) {
        let m = diagonal_model(n).unwrap();
        let sys = make_idempotents(&m.ring, &m.u, &m.omega, n).unwrap();
        (m, sys)
    }

    #[test]
    fn diagonal_model_idempotents_are_matrix_units() {
        let (m, sys) = model_system(3);
        let field = match &m.ring {
            RingDescriptor::Matrix(_, inner) => inner.as_ref().clone(),
            _ => unreachable!(),
        };
        for k in 0..3 {
            let ekk = RingValue::Matrix(DenseMatrix::unit(&field, 3, k, k));
            assert_eq!(sys.e(k as i64), &ekk);
        }
    }

    #[test]
    fn conjugator_gives_single_entry_data() {
        let (m, sys) = model_system(3);
        let data = conjugator_to_cyclic(&sys, &m.v).unwrap();
        for xk in &data.x {
            let nonzero = xk.as_matrix().unwrap().entries().iter().filter(|e| !e.is_zero()).count();
            assert_eq!(nonzero, 1);
        }
        let (v2, w2) = cyclic_to_conjugator(&sys, &data).unwrap();
        assert!((&v2 * &w2).is_one());
        let again = conjugator_to_cyclic(&sys, &v2).unwrap();
        again.verify(&sys).unwrap();
    }

    #[test]
    fn identity_is_not_a_conjugator() {
        let (m, sys) = model_system(2);
        assert_eq!(conjugator_to_cyclic(&sys, &m.ring.one()), Err(Error::NotACyclicConjugator));
    }

    #[test]
    fn broken_data_rejected() {
        let (m, sys) = model_system(2);
        let mut data = conjugator_to_cyclic(&sys, &m.v).unwrap();
        data.x.swap(0, 1);
        assert!(matches!(cyclic_to_conjugator(&sys, &data), Err(Error::InvariantFailed(_))));
    }

    #[test]
    fn phi_of_u_and_identity() {
        let (m, sys) = model_system(3);
        let units = build_matrix_units(&sys, &conjugator_to_cyclic(&sys, &m.v).unwrap()).unwrap();
        assert!(phi(&units, &units.corner_identity()).unwrap().is_one());
        let pu = phi_inverse(&units, &m.u).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { &sys.omega_pow(i as i64) * &units.e0 } else { m.ring.zero() };
                assert_eq!(pu.get(i, j), &expected);
            }
        }
        let mut bad = units.corner_identity();
        bad.set(0, 0, m.ring.one());
        assert!(matches!(phi(&units, &bad), Err(Error::Domain(_))));
    }

    #[test]
    fn structure_theorem_on_m2() {
        let r = RingDescriptor::Rational;
        let m2 = RingDescriptor::matrix(2, r.clone()).unwrap();
        // [E_01, E_10] = diag(1, -1), conjugated to its negative by the swap
        let a = RingValue::Matrix(DenseMatrix::unit(&r, 2, 0, 1));
        let b = RingValue::Matrix(DenseMatrix::unit(&r, 2, 1, 0));
        let u = crate::rings::commutator(&a, &b).unwrap();
        assert_eq!(u, RingValue::Matrix(DenseMatrix::diagonal(&r, &[q(1), q(-1)])));
        let v = RingValue::Matrix(DenseMatrix::from_rows(r.clone(), vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap());
        let (units, report) = structure_theorem(&m2, &a, &b, &m2.from_int(-1), &v, 2, 0).unwrap();
        assert_eq!(units.n, 2);
        assert_eq!(report.dim_corner, Some(1));
        assert_eq!(report.bijective, Some(true));
        let err = structure_theorem(&m2, &a, &b, &m2.from_int(-1), &m2.one(), 2, 0).unwrap_err();
        assert_eq!(err.root(), &Error::NotACyclicConjugator);
    }

    #[test]
    fn anticommutator_on_matrix_units() {
        let (m, sys) = model_system(2);
        let units = build_matrix_units(&sys, &conjugator_to_cyclic(&sys, &m.v).unwrap()).unwrap();
        let (x, y) = (&units.y[1], &units.x[1]);
        let report = anticommutator_equiv_check(&m.ring, &m.u, x, y).unwrap();
        assert!(report.ok(), "{report:?}");
        let report = anticommutator_equiv_check(&m.ring, &m.ring.one(), x, y).unwrap();
        assert_eq!(report.idempotent_to_anticommutator, None);
        let z2 = RingDescriptor::Zmod(2);
        assert!(matches!(
            anticommutator_equiv_check(&z2, &z2.one(), &z2.one(), &z2.one()),
            Err(Error::HypothesisNotSatisfied(_))
        ));
    }

    #[test]
    fn quantum_plane_n2() {
        let report = quantum_plane_demo(2, 0).unwrap();
        assert!(report.ok(), "{}", report.to_json());
        assert_eq!(report.dim_corner(), Some(1));
        assert_eq!(report.iso.rank, Some(4));
    }
}
