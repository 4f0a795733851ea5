//! Spectral idempotents of an element `u` with `u^n = 1`.

use crate::error::{Error, Result};
use crate::rings::{sum, RingDescriptor, RingValue};

/// `e_0, ..., e_{n-1}` with `u = sum omega^k e_k`.
#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    pub ring: RingDescriptor,
    pub n: usize,
    pub u: RingValue,
    pub omega: RingValue,
    pub idempotents: Vec<RingValue>,
}

impl IdempotentSystem {
    /// `e_k` with the index read mod `n`.
    pub fn e(&self, k: i64) -> &RingValue {
        &self.idempotents[k.rem_euclid(self.n as i64) as usize]
    }

    /// `omega^k`, for any integer `k`, without inverting.
    pub fn omega_pow(&self, k: i64) -> RingValue {
        self.omega
            .pow(k.rem_euclid(self.n as i64))
            .expect("non-negative exponent")
    }

    /// Re-checks the four defining identities; names the first that fails.
    pub fn verify(&self) -> Result<()> {
        let e = &self.idempotents;
        for (k, ek) in e.iter().enumerate() {
            if &(ek * ek) != ek {
                return Err(Error::InvariantFailed(format!("e_{k}^2 = e_{k}")));
            }
            for (l, el) in e.iter().enumerate() {
                if k != l && !(ek * el).is_zero() {
                    return Err(Error::InvariantFailed(format!("e_{k} e_{l} = 0")));
                }
            }
        }
        if !sum(&self.ring, e).is_one() {
            return Err(Error::InvariantFailed("sum e_k = 1".into()));
        }
        let spectral = sum(
            &self.ring,
            &e.iter()
                .enumerate()
                .map(|(k, ek)| &self.omega_pow(k as i64) * ek)
                .collect::<Vec<_>>(),
        );
        if spectral != self.u {
            return Err(Error::InvariantFailed("sum omega^k e_k = u".into()));
        }
        Ok(())
    }
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::HypothesisNotSatisfied(msg.into())
}

/// Checks the standing hypotheses in a fixed order, then builds
/// `e_k = (1/n) sum_j omega^(-kj) u^j`.
pub fn make_idempotents(ring: &RingDescriptor, u: &RingValue, omega: &RingValue, n: usize) -> Result<IdempotentSystem> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be >= 2, got {n}")));
    }
    ring.ensure_contains(u)?;
    ring.ensure_contains(omega)?;
    if !u.pow(n as i64)?.is_one() {
        return Err(hypothesis(format!("u^n = 1 fails for n = {n}")));
    }
    if !omega.is_unit() {
        return Err(hypothesis("omega is a unit"));
    }
    if !ring.is_central(omega) {
        return Err(hypothesis("omega is central"));
    }
    let powers: Vec<RingValue> = (0..n as i64).map(|i| omega.pow(i)).collect::<Result<_>>()?;
    if !(&powers[n - 1] * omega).is_one() {
        return Err(hypothesis(format!("omega^n = 1 fails for n = {n}")));
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = &powers[i] - &powers[j];
            if !d.is_unit() {
                return Err(hypothesis(format!(
                    "omega^i - omega^j must be a unit for i != j; fails at (i, j) = ({i}, {j}) where it is {d}"
                )));
            }
        }
    }
    let n_inv = ring
        .from_int(n as i64)
        .inverse()
        .map_err(|_| hypothesis(format!("n = {n} is a unit")))?;

    let u_pows: Vec<RingValue> = (0..n as i64).map(|j| u.pow(j)).collect::<Result<_>>()?;
    let idempotents = (0..n)
        .map(|k| {
            let terms: Vec<RingValue> = u_pows
                .iter()
                .enumerate()
                .map(|(j, uj)| &powers[((n - k) * j) % n] * uj)
                .collect();
            &n_inv * &sum(ring, &terms)
        })
        .collect();
    let sys = IdempotentSystem {
        ring: ring.clone(),
        n,
        u: u.clone(),
        omega: omega.clone(),
        idempotents,
    };
    sys.verify()?;
    Ok(sys)
}

/// `p_k(t) = prod_{j != k} (t - omega^j) / (omega^k - omega^j)`.
pub fn lagrange_projector(omega: &RingValue, n: usize, k: usize, t: &RingValue) -> Result<RingValue> {
    let ring = t.ring();
    ring.ensure_contains(omega)?;
    let powers: Vec<RingValue> = (0..n as i64).map(|i| omega.pow(i)).collect::<Result<_>>()?;
    let mut acc = ring.one();
    for j in (0..n).filter(|&j| j != k) {
        let denom = (&powers[k] - &powers[j]).inverse()?;
        acc = &(&acc * &(t - &powers[j])) * &denom;
    }
    Ok(acc)
}
