//! The full pipeline `u = [a, b]` to `R = M_n(e_0 R e_0)`, the `n = 2`
//! anti-commutator criterion, and the quantum-plane and diagonal models.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{cyclo_root, CycloScalar, Rational};
use crate::rings::json::cyclo_to_json;
use crate::rings::linalg::SpanBasis;
use crate::rings::{commutator, quantum_plane, sum, AlgebraElement, DenseMatrix, RingDescriptor, RingValue};
use crate::witness::build_dp;

use super::{build_matrix_units, conjugator_to_cyclic, make_idempotents, phi, phi_inverse, MatrixUnitSystem};

/// Number of random pairs used for the homomorphism checks.
pub const HOM_SAMPLES: usize = 25;

const SAMPLES_ONLY: &str = "injectivity/surjectivity verified on samples only";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub seed: u64,
    pub samples: usize,
    pub phi_unital: bool,
    pub additive: bool,
    pub multiplicative: bool,
    /// `phi(phi_inverse(r)) = r` on the sampled `r`.
    pub round_trip_r: bool,
    /// `phi_inverse(phi(s)) = s` on the sampled `s`.
    pub round_trip_s: bool,
    pub dim_ring: Option<usize>,
    pub dim_corner: Option<usize>,
    pub rank: Option<usize>,
    pub bijective: Option<bool>,
    pub note: Option<String>,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.phi_unital
            && self.additive
            && self.multiplicative
            && self.round_trip_r
            && self.round_trip_s
            && self.bijective != Some(false)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "samples": self.samples,
            "phi_unital": self.phi_unital,
            "additive": self.additive,
            "multiplicative": self.multiplicative,
            "round_trip_r": self.round_trip_r,
            "round_trip_s": self.round_trip_s,
            "dim_ring": self.dim_ring,
            "dim_corner": self.dim_corner,
            "rank": self.rank,
            "bijective": self.bijective,
            "note": self.note,
        })
    }
}

/// A basis of `e_0 R e_0` over the base field, when `R` has one.
pub fn corner_basis(ring: &RingDescriptor, e0: &RingValue) -> Option<Vec<RingValue>> {
    let field = ring.base_field()?;
    let dim = ring.dimension()?;
    let mut span = SpanBasis::new(field, dim);
    let mut basis = Vec::new();
    for b in ring.basis()? {
        let c = &(e0 * &b) * e0;
        if span.insert(ring.coordinates(&c)?) {
            basis.push(c);
        }
    }
    Some(basis)
}

fn random_corner_matrix(units: &MatrixUnitSystem, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let ring = &units.ring;
    DenseMatrix::from_fn(ring, units.n, units.n, |_, _| {
        &(&units.e0 * &ring.random_element(rng)) * &units.e0
    })
}

/// Checks that `phi` is a unital ring isomorphism: homomorphism identities on
/// seeded samples, and bijectivity by exact rank when `R` is
/// finite-dimensional over a field.
pub fn iso_check(units: &MatrixUnitSystem, seed: u64) -> Result<IsoReport> {
    let ring = &units.ring;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi_unital = phi(units, &units.corner_identity())?.is_one();
    let (mut additive, mut multiplicative, mut round_trip_r, mut round_trip_s) = (true, true, true, true);
    for _ in 0..HOM_SAMPLES {
        let s = random_corner_matrix(units, &mut rng);
        let t = random_corner_matrix(units, &mut rng);
        let (ps, pt) = (phi(units, &s)?, phi(units, &t)?);
        additive &= phi(units, &s.add(&t)?)? == &ps + &pt;
        multiplicative &= phi(units, &s.mat_mul(&t)?)? == &ps * &pt;
        round_trip_s &= phi_inverse(units, &ps)? == s;
        let r = ring.random_element(&mut rng);
        round_trip_r &= phi(units, &phi_inverse(units, &r)?)? == r;
    }

    let mut report = IsoReport {
        seed,
        samples: HOM_SAMPLES,
        phi_unital,
        additive,
        multiplicative,
        round_trip_r,
        round_trip_s,
        dim_ring: None,
        dim_corner: None,
        rank: None,
        bijective: None,
        note: Some(SAMPLES_ONLY.into()),
    };
    if let (Some(field), Some(dim), Some(cb)) = (ring.base_field(), ring.dimension(), corner_basis(ring, &units.e0)) {
        let mut span = SpanBasis::new(field, dim);
        for i in 0..units.n {
            for j in 0..units.n {
                for s in &cb {
                    let image = &(&units.x[i] * s) * &units.y[j];
                    let coords = ring
                        .coordinates(&image)
                        .ok_or_else(|| Error::InternalConsistency("missing coordinates".into()))?;
                    span.insert(coords);
                }
            }
        }
        let rank = span.rank();
        // phi is injective iff the n^2 dim S images are independent
        let domain = units.n * units.n * cb.len();
        report.dim_ring = Some(dim);
        report.dim_corner = Some(cb.len());
        report.rank = Some(rank);
        report.bijective = Some(rank == dim && domain == dim);
        report.note = None;
    }
    Ok(report)
}

/// Runs the pipeline with stage-labelled errors; a returned report has every
/// identity verified.
pub fn structure_theorem(
    ring: &RingDescriptor,
    a: &RingValue,
    b: &RingValue,
    omega: &RingValue,
    v: &RingValue,
    n: usize,
    seed: u64,
) -> Result<(MatrixUnitSystem, IsoReport)> {
    let u = commutator(a, b).map_err(|e| e.in_stage("commutator"))?;
    let sys = make_idempotents(ring, &u, omega, n).map_err(|e| e.in_stage("idempotents"))?;
    let data = conjugator_to_cyclic(&sys, v).map_err(|e| e.in_stage("cyclic equivalence"))?;
    let units = build_matrix_units(&sys, &data).map_err(|e| e.in_stage("matrix units"))?;
    let report = iso_check(&units, seed).map_err(|e| e.in_stage("isomorphism"))?;
    if !report.ok() {
        return Err(Error::InvariantFailed(format!("phi is not an isomorphism: {}", report.to_json())).in_stage("isomorphism"));
    }
    Ok((units, report))
}

/// Outcome of one implication: `None` when its hypothesis fails on the
/// given witnesses, otherwise whether the conclusion holds.
pub type Implication = Option<bool>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticommutatorReport {
    /// `xy = e_0, yx = e_1` implies `xy + yx = 1, xy - yx = u`.
    pub idempotent_to_anticommutator: Implication,
    /// `[x, y] = u, xy + yx = 1` implies `xy = e_0, yx = e_1`.
    pub anticommutator_to_idempotent: Implication,
}

impl AnticommutatorReport {
    pub fn ok(&self) -> bool {
        self.idempotent_to_anticommutator == Some(true) && self.anticommutator_to_idempotent == Some(true)
    }

    pub fn to_json(&self) -> Value {
        let direction = |d: Implication| match d {
            None => json!({"hypothesis": false, "conclusion": Value::Null}),
            Some(c) => json!({"hypothesis": true, "conclusion": c}),
        };
        json!({
            "idempotent_to_anticommutator": direction(self.idempotent_to_anticommutator),
            "anticommutator_to_idempotent": direction(self.anticommutator_to_idempotent),
            "ok": self.ok(),
        })
    }
}

pub fn anticommutator_equiv_check(
    ring: &RingDescriptor,
    u: &RingValue,
    x: &RingValue,
    y: &RingValue,
) -> Result<AnticommutatorReport> {
    for t in [u, x, y] {
        ring.ensure_contains(t)?;
    }
    let half = ring
        .from_int(2)
        .inverse()
        .map_err(|_| Error::HypothesisNotSatisfied(format!("2 is a unit in {ring}")))?;
    if !(u * u).is_one() {
        return Err(Error::HypothesisNotSatisfied("u^2 = 1".into()));
    }
    let one = ring.one();
    let e0 = &half * &(&one + u);
    let e1 = &half * &(&one - u);
    let (xy, yx) = (x * y, y * x);
    let anti = &xy + &yx;
    let comm = &xy - &yx;
    let forward = (xy == e0 && yx == e1).then(|| anti.is_one() && &comm == u);
    let backward = (&comm == u && anti.is_one()).then(|| xy == e0 && yx == e1);
    Ok(AnticommutatorReport {
        idempotent_to_anticommutator: forward,
        anticommutator_to_idempotent: backward,
    })
}

/// `M_n(Q(zeta_n))` with `u = diag(1, omega, ..., omega^{n-1})`, the scalar
/// `omega`, and whichever of `P`, `P^-1` conjugates `u` to `omega^-1 u`.
#[derive(Clone, Debug)]
pub struct DiagonalModel {
    pub ring: RingDescriptor,
    pub u: RingValue,
    pub omega: RingValue,
    pub v: RingValue,
}

pub fn diagonal_model(n: usize) -> Result<DiagonalModel> {
    let field = RingDescriptor::cyclotomic(n as u64)?;
    let ring = RingDescriptor::matrix(n, field.clone())?;
    let w = RingValue::Cyclo(cyclo_root(n as u64, 1)?);
    let diag: Vec<RingValue> = (0..n as i64).map(|i| w.pow(i)).collect::<Result<_>>()?;
    let u = RingValue::Matrix(DenseMatrix::diagonal(&field, &diag));
    let omega = RingValue::Matrix(DenseMatrix::scalar(&field, n, &w));
    let (_, p) = build_dp(n, &field)?;
    let target = &omega.pow(-1)? * &u;
    let v = [p.clone(), p.inverse()?]
        .into_iter()
        .map(RingValue::Matrix)
        .find(|v| (&(v * &u) * &v.inverse().unwrap()) == target)
        .ok_or(Error::NotACyclicConjugator)?;
    Ok(DiagonalModel { ring, u, omega, v })
}

#[derive(Clone, Debug)]
pub struct QuantumPlaneReport {
    pub n: usize,
    pub a: CycloScalar,
    pub labels: Vec<String>,
    pub u_power_ok: bool,
    pub conjugation_ok: bool,
    pub e0: Vec<CycloScalar>,
    pub e0_matches_closed_form: bool,
    pub iso: IsoReport,
}

impl QuantumPlaneReport {
    pub fn dim_corner(&self) -> Option<usize> {
        self.iso.dim_corner
    }

    pub fn phi_bijective(&self) -> bool {
        self.iso.bijective == Some(true)
    }

    pub fn ok(&self) -> bool {
        self.u_power_ok && self.conjugation_ok && self.e0_matches_closed_form && self.iso.ok() && self.phi_bijective()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "a": cyclo_to_json(&self.a),
            "labels": self.labels,
            "u_power_ok": self.u_power_ok,
            "conjugation_ok": self.conjugation_ok,
            "dim_corner": self.dim_corner(),
            "dim_algebra": self.iso.dim_ring,
            "rank": self.iso.rank,
            "phi_bijective": self.phi_bijective(),
            "e0_coeffs": self.e0.iter().map(cyclo_to_json).collect::<Vec<_>>(),
            "e0_matches_closed_form": self.e0_matches_closed_form,
            "isomorphism": self.iso.to_json(),
            "ok": self.ok(),
        })
    }
}

/// `K<x, y>/(yx = omega xy, x^n = a, y^n = 1)` over `K = Q(zeta_n)` with
/// `a = ((1 - omega)^n omega^(n(n-1)/2))^-1`, taking `v = x`, `u = [x, y]`.
pub fn quantum_plane_demo(n: usize, seed: u64) -> Result<QuantumPlaneReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::Domain(format!("quantum-plane demo supports 2 <= n <= 6, got {n}")));
    }
    let order = n as u64;
    let w = cyclo_root(order, 1)?;
    let one_k = CycloScalar::one(order);
    let a = (&(&one_k - &w).pow(n as i64)? * &w.pow((n * (n - 1) / 2) as i64)?).inverse()?;
    let alg = quantum_plane(n, &a, &one_k)?;
    let ring = RingDescriptor::Algebra(alg.clone());
    let x = RingValue::Algebra(AlgebraElement::basis(&alg, n));
    let y = RingValue::Algebra(AlgebraElement::basis(&alg, 1));
    let omega = RingValue::Algebra(AlgebraElement::one(&alg).scale(&w));
    let u = commutator(&x, &y)?;

    let u_power_ok = u.pow(n as i64)?.is_one();
    let conjugation_ok = (&(&x * &u) * &x.inverse()?) == (&omega.pow(-1)? * &u);
    let (units, iso) = structure_theorem(&ring, &x, &y, &omega, &x, n, seed)?;

    // e_0 = (1/n) sum_j (1 - omega)^j (xy)^j
    let xy = &x * &y;
    let scale = RingValue::Algebra(AlgebraElement::one(&alg).scale(&CycloScalar::from_rational(
        order,
        Rational::new(1, n as i64)?,
    )));
    let c = RingValue::Algebra(AlgebraElement::one(&alg).scale(&(&one_k - &w)));
    let terms: Vec<RingValue> = (0..n as i64)
        .map(|j| Ok(&c.pow(j)? * &xy.pow(j)?))
        .collect::<Result<_>>()?;
    let closed = &scale * &sum(&ring, &terms);
    let e0 = units
        .e0
        .as_algebra()
        .expect("algebra element")
        .coords()
        .to_vec();

    Ok(QuantumPlaneReport {
        n,
        a,
        labels: alg.labels().to_vec(),
        u_power_ok,
        conjugation_ok,
        e0_matches_closed_form: closed == units.e0,
        e0,
        iso,
    })
}
