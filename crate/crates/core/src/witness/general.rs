//! Commutators of order `n` in `M_n(S)` for an arbitrary unital ring `S`.
//!
//! Matrices here are 0-indexed; the 1-based wraparound `overline(k)` is
//! kept as [`wrap_index`] so the cyclic shift can be read off directly.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::json::{descriptor_to_json, matrix_to_json, value_to_json};
use crate::rings::{sum, DenseMatrix, RingDescriptor, RingValue};

/// The representative of `k mod n` in `1..=n`.
pub fn wrap_index(k: i64, n: usize) -> usize {
    assert!(n >= 1);
    ((k - 1).rem_euclid(n as i64) + 1) as usize
}

/// `D = diag(0, 1, ..., n-1)` and the cyclic shift `P` sending `e_j` to `e_{j+1}`.
pub fn build_dp(n: usize, ring: &RingDescriptor) -> Result<(DenseMatrix, DenseMatrix)> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be >= 2, got {n}")));
    }
    let diag: Vec<RingValue> = (0..n as i64).map(|i| ring.from_int(i)).collect();
    let d = DenseMatrix::diagonal(ring, &diag);
    let p = DenseMatrix::from_fn(ring, n, n, |i, j| {
        if i + 1 == wrap_index(j as i64 + 2, n) {
            ring.one()
        } else {
            ring.zero()
        }
    });
    Ok((d, p))
}

/// Both evaluations of `[D, P]^n` and the scalar they should equal.
#[derive(Clone, Debug)]
pub struct LemmaPdReport {
    pub n: usize,
    pub ring: RingDescriptor,
    /// `1 - n` as an element of the ring.
    pub scalar: RingValue,
    pub direct: DenseMatrix,
    pub factored: DenseMatrix,
    pub routes_agree: bool,
    pub matches_scalar: bool,
}

impl LemmaPdReport {
    pub fn ok(&self) -> bool {
        self.routes_agree && self.matches_scalar
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "ring": descriptor_to_json(&self.ring),
            "(1-n)": (1 - self.n as i64).to_string(),
            "scalar": value_to_json(&self.scalar),
            "power": matrix_to_json(&self.direct),
            "routes_agree": self.routes_agree,
            "matches_scalar": self.matches_scalar,
            "ok": self.ok(),
        })
    }
}

/// Computes `[D, P]^n` by repeated multiplication and through
/// `[D, P] = P Delta`, `(P Delta)^n = Delta^(1) ... Delta^(n) P^n`.
pub fn lemma_pd_check(n: usize, ring: &RingDescriptor) -> Result<LemmaPdReport> {
    let (d, p) = build_dp(n, ring)?;
    let dp = d.commutator(&p)?;
    let direct = dp.power(n as i64)?;

    let mut delta_diag = vec![ring.one(); n];
    delta_diag[n - 1] = ring.from_int(1 - n as i64);
    let delta = DenseMatrix::diagonal(ring, &delta_diag);
    if p.mat_mul(&delta)? != dp {
        return Err(Error::InternalConsistency("[D, P] != P Delta".into()));
    }
    // P^-1 is P^(n-1), which avoids needing inverses in the ring
    let p_inv = p.power(n as i64 - 1)?;
    let mut factored = DenseMatrix::identity(ring, n);
    let mut pk = DenseMatrix::identity(ring, n);
    let mut pk_inv = DenseMatrix::identity(ring, n);
    for _ in 1..=n {
        pk = pk.mat_mul(&p)?;
        pk_inv = p_inv.mat_mul(&pk_inv)?;
        let conj = pk.mat_mul(&delta)?.mat_mul(&pk_inv)?;
        factored = factored.mat_mul(&conj)?;
    }
    factored = factored.mat_mul(&pk)?;

    let scalar = ring.from_int(1 - n as i64);
    let expected = DenseMatrix::scalar(ring, n, &scalar);
    let report = LemmaPdReport {
        n,
        ring: ring.clone(),
        routes_agree: direct == factored,
        matches_scalar: direct == expected,
        scalar,
        direct,
        factored,
    };
    if !report.ok() {
        return Err(Error::InternalConsistency(format!(
            "[D, P]^{n} over {ring}: routes_agree={}, matches (1-n) Id={}",
            report.routes_agree, report.matches_scalar
        )));
    }
    Ok(report)
}

/// Central units `v_1, ..., v_{n-1}` of `S` summing to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralUnitDecomposition {
    ring: RingDescriptor,
    units: Vec<RingValue>,
}

impl CentralUnitDecomposition {
    /// Centrality is decided exactly by [`RingDescriptor::is_central`].
    pub fn new(ring: RingDescriptor, units: Vec<RingValue>) -> Result<Self> {
        if units.is_empty() {
            return Err(Error::Domain("need at least one unit (n >= 2)".into()));
        }
        for (i, v) in units.iter().enumerate() {
            ring.ensure_contains(v)?;
            if !v.is_unit() {
                return Err(Error::HypothesisNotSatisfied(format!("v_{} = {v} is not a unit", i + 1)));
            }
            if !ring.is_central(v) {
                return Err(Error::HypothesisNotSatisfied(format!("v_{} = {v} is not central", i + 1)));
            }
        }
        if !sum(&ring, &units).is_one() {
            return Err(Error::HypothesisNotSatisfied("v_1 + ... + v_{n-1} != 1".into()));
        }
        Ok(CentralUnitDecomposition { ring, units })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn units(&self) -> &[RingValue] {
        &self.units
    }

    /// The matrix size this decomposition serves.
    pub fn n(&self) -> usize {
        self.units.len() + 1
    }
}

/// `(A, B)` over `S` with `[A, B] = P`, hence `[A, B]^n = Id_n`.
pub fn build_theorem32(dec: &CentralUnitDecomposition) -> Result<(DenseMatrix, DenseMatrix)> {
    let ring = dec.ring();
    let n = dec.n();
    let mut u = Vec::with_capacity(n);
    u.push(ring.one());
    u.extend(dec.units().iter().map(RingValue::negate));
    let mut s = Vec::with_capacity(n);
    let mut acc = ring.zero();
    for uj in &u {
        s.push(acc.clone());
        acc = &acc + uj;
    }
    let a = DenseMatrix::diagonal(ring, &s);
    let mut b = DenseMatrix::zero(ring, n, n);
    for (col, uj) in u.iter().enumerate() {
        let row = wrap_index(col as i64 + 2, n) - 1;
        b.set(row, col, uj.inverse()?);
    }
    let (_, p) = build_dp(n, ring)?;
    let c = a.commutator(&b)?;
    if c != p {
        return Err(Error::InvariantFailed("[A, B] = P".into()));
    }
    if !c.power(n as i64)?.is_identity() {
        return Err(Error::InvariantFailed("[A, B]^n = Id".into()));
    }
    Ok((a, b))
}

/// Ways of producing the units `v_k` required by [`build_theorem32`].
#[derive(Clone, Debug, PartialEq)]
pub enum Strategy {
    /// `n = 2`, `v_1 = 1`.
    N2,
    /// `n = 3`, `(v_1, v_2) = (u, 1 - u)` for a central `u` with `u`, `1 - u` units.
    N3(RingValue),
    /// `n - 1` a central unit; every `v_k = (n - 1)^-1`.
    InverseNMinus1,
    /// `char S` divides `n - 2`; every `v_k = 1`.
    CharDivides,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::N2 => "n2",
            Strategy::N3(_) => "n3",
            Strategy::InverseNMinus1 => "inverse_n_minus_1",
            Strategy::CharDivides => "char_divides",
        }
    }
}

pub fn corollary_units(n: usize, ring: &RingDescriptor, strategy: &Strategy) -> Result<CentralUnitDecomposition> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be >= 2, got {n}")));
    }
    let fail = |msg: String| Err(Error::HypothesisNotSatisfied(msg));
    let units = match strategy {
        Strategy::N2 => {
            if n != 2 {
                return fail(format!("strategy n2 needs n = 2, got {n}"));
            }
            vec![ring.one()]
        }
        Strategy::N3(u) => {
            if n != 3 {
                return fail(format!("strategy n3 needs n = 3, got {n}"));
            }
            ring.ensure_contains(u)?;
            let w = &ring.one() - u;
            if !u.is_unit() || !w.is_unit() {
                return fail(format!("u = {u} and 1 - u must both be units"));
            }
            vec![u.clone(), w]
        }
        Strategy::InverseNMinus1 => {
            let m = ring.from_int(n as i64 - 1);
            match m.inverse() {
                Ok(inv) => vec![inv; n - 1],
                Err(_) => return fail(format!("n - 1 = {} is not a unit in {ring}", n - 1)),
            }
        }
        Strategy::CharDivides => {
            let c = ring.characteristic() as usize;
            let divides = if c == 0 { n == 2 } else { (n - 2) % c == 0 };
            if !divides {
                return fail(format!("char {ring} = {c} does not divide n - 2 = {}", n - 2));
            }
            vec![ring.one(); n - 1]
        }
    };
    CentralUnitDecomposition::new(ring.clone(), units)
}
