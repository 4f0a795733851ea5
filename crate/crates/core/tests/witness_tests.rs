use commorder::exact::{CycloScalar, Rational};
use commorder::rings::{quantum_plane, DenseMatrix, RingDescriptor, RingValue};
use commorder::witness::{
    build_c, build_theorem32, build_witness, commutator_preimage, corollary_units, lemma_pd_check,
    zero_diagonal_similarity, CommutatorWitness, Strategy,
};
use commorder::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random matrix whose last diagonal entry cancels the trace.
fn random_trace_zero(ring: &RingDescriptor, n: usize, seed: u64) -> DenseMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = DenseMatrix::from_fn(ring, n, n, |_, _| ring.random_element(&mut rng));
    let partial = (0..n - 1).fold(ring.zero(), |acc, i| &acc + m.get(i, i));
    m.set(n - 1, n - 1, partial.negate());
    m
}

fn perturbed(m: &DenseMatrix, i: usize, j: usize) -> DenseMatrix {
    let mut out = m.clone();
    out.set(i, j, m.get(i, j) + &m.ring().one());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn similarity_zeroes_the_diagonal(n in 1usize..6, seed in any::<u64>(), sparse in any::<bool>()) {
        let q = RingDescriptor::Rational;
        let mut m = random_trace_zero(&q, n, seed);
        if sparse {
            // diagonal inputs exercise the e_i + e_j branch
            m = DenseMatrix::from_fn(&q, n, n, |i, j| if i == j { m.get(i, j).clone() } else { q.zero() });
        }
        let (s, z) = zero_diagonal_similarity(&m).unwrap();
        prop_assert_eq!(s.inverse().unwrap().mat_mul(&m).unwrap().mat_mul(&s).unwrap(), z.clone());
        prop_assert!((0..n).all(|i| z.get(i, i).is_zero()));
    }

    #[test]
    fn preimage_over_cyclotomic(seed in any::<u64>()) {
        let k = RingDescriptor::Cyclotomic(3);
        let c = random_trace_zero(&k, 3, seed);
        let (a, b) = commutator_preimage(&c).unwrap();
        prop_assert_eq!(a.commutator(&b).unwrap(), c);
    }
}

#[test]
fn build_c_has_the_expected_spectrum() {
    for (k, n) in [(2, 4), (6, 7), (10, 7), (12, 5)] {
        let c = build_c(k, n).unwrap();
        assert!(c.is_diagonal());
        assert!(c.trace().unwrap().is_zero());
        assert!(c.power(k as i64).unwrap().is_identity());
    }
}

#[test]
fn every_entry_mutation_is_caught() {
    for (k, n) in [(2u64, 2u64), (3, 3), (6, 5)] {
        let w = build_witness(k, n).unwrap();
        let n = n as usize;
        for i in 0..n {
            for j in 0..n {
                for which in 0..3 {
                    let mut m = w.clone();
                    match which {
                        0 => m.a = perturbed(&w.a, i, j),
                        1 => m.b = perturbed(&w.b, i, j),
                        _ => m.c = perturbed(&w.c, i, j),
                    }
                    assert!(!m.checks().all(), "(k, n) = ({k}, {n}), matrix {which}, entry ({i}, {j})");
                }
            }
        }
    }
}

#[test]
fn witness_json_is_stable() {
    let w = build_witness(4, 6).unwrap();
    let text = serde_json::to_string(&w.to_json()).unwrap();
    let back = CommutatorWitness::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
}

#[test]
fn lemma_pd_over_composite_and_nested_rings() {
    let rings = [
        RingDescriptor::Zmod(6),
        RingDescriptor::Zmod(8),
        RingDescriptor::matrix(2, RingDescriptor::Rational).unwrap(),
    ];
    for ring in &rings {
        for n in 2..=5 {
            let rep = lemma_pd_check(n, ring).unwrap();
            assert!(rep.ok(), "n={n} over {ring}");
        }
    }
}

#[test]
fn shift_commutator_n2_over_every_kind_of_ring() {
    let alg = quantum_plane(2, &CycloScalar::from_rational(2, Rational::new(-1, 4).unwrap()), &CycloScalar::one(2)).unwrap();
    let rings = [
        RingDescriptor::Rational,
        RingDescriptor::Zmod(2),
        RingDescriptor::Zmod(12),
        RingDescriptor::Cyclotomic(7),
        RingDescriptor::matrix(3, RingDescriptor::Zmod(5)).unwrap(),
        RingDescriptor::Algebra(alg),
    ];
    for ring in &rings {
        let dec = corollary_units(2, ring, &Strategy::N2).unwrap();
        let (a, b) = build_theorem32(&dec).unwrap();
        let c = a.commutator(&b).unwrap();
        assert!(c.power(2).unwrap().is_identity(), "over {ring}");
    }
}

#[test]
fn shift_commutator_inverse_strategy_over_cyclotomics() {
    for n in 2..=7usize {
        let ring = RingDescriptor::Cyclotomic(n as u64);
        let dec = corollary_units(n, &ring, &Strategy::InverseNMinus1).unwrap();
        let (a, b) = build_theorem32(&dec).unwrap();
        let c = a.commutator(&b).unwrap();
        assert!(c.power(n as i64).unwrap().is_identity());
        // strictly smaller powers are not the identity: C is the n-cycle
        assert!((1..n as i64).all(|j| !c.power(j).unwrap().is_identity()));
    }
}

#[test]
fn char_divides_in_larger_characteristic() {
    // char 5 divides 7 - 2
    let z5 = RingDescriptor::Zmod(5);
    let dec = corollary_units(7, &z5, &Strategy::CharDivides).unwrap();
    let (a, b) = build_theorem32(&dec).unwrap();
    assert!(a.commutator(&b).unwrap().power(7).unwrap().is_identity());
    assert!(matches!(
        corollary_units(6, &z5, &Strategy::CharDivides),
        Err(Error::HypothesisNotSatisfied(_))
    ));
}

#[test]
fn n3_strategy_with_rational_u() {
    let q = RingDescriptor::Rational;
    let u = RingValue::Rational(Rational::new(-2, 7).unwrap());
    let dec = corollary_units(3, &q, &Strategy::N3(u)).unwrap();
    let (a, b) = build_theorem32(&dec).unwrap();
    assert!(a.commutator(&b).unwrap().power(3).unwrap().is_identity());
}
