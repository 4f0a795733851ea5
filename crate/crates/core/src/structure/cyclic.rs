//! Cyclic equivalence of the idempotents versus a conjugator `v` with
//! `v u v^-1 = omega^-1 u`.

use crate::error::{Error, Result};
use crate::rings::{sum, RingValue};

use super::IdempotentSystem;

/// `x_k in e_k R e_{k+1}` and `y_k in e_{k+1} R e_k` with `x_k y_k = e_k`,
/// `y_k x_k = e_{k+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicEquivalenceData {
    pub x: Vec<RingValue>,
    pub y: Vec<RingValue>,
}

impl CyclicEquivalenceData {
    pub fn verify(&self, sys: &IdempotentSystem) -> Result<()> {
        if self.x.len() != sys.n || self.y.len() != sys.n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} pairs, got {} x and {} y",
                sys.n,
                self.x.len(),
                self.y.len()
            )));
        }
        for k in 0..sys.n {
            let (ek, ek1) = (sys.e(k as i64), sys.e(k as i64 + 1));
            let (xk, yk) = (&self.x[k], &self.y[k]);
            sys.ring.ensure_contains(xk)?;
            sys.ring.ensure_contains(yk)?;
            let fail = |what: String| Err(Error::InvariantFailed(what));
            if &(&(ek * xk) * ek1) != xk {
                return fail(format!("x_{k} in e_{k} R e_{{k+1}}"));
            }
            if &(&(ek1 * yk) * ek) != yk {
                return fail(format!("y_{k} in e_{{k+1}} R e_{k}"));
            }
            if &(xk * yk) != ek {
                return fail(format!("x_{k} y_{k} = e_{k}"));
            }
            if &(yk * xk) != ek1 {
                return fail(format!("y_{k} x_{k} = e_{{k+1}}"));
            }
        }
        Ok(())
    }
}

/// Whether `v` is a unit with `v u v^-1 = omega^-1 u`; returns `v^-1` if so.
fn check_conjugator(sys: &IdempotentSystem, v: &RingValue) -> Result<RingValue> {
    sys.ring.ensure_contains(v)?;
    let v_inv = v.inverse().map_err(|_| Error::NotACyclicConjugator)?;
    let lhs = &(v * &sys.u) * &v_inv;
    let rhs = &sys.omega_pow(-1) * &sys.u;
    if lhs != rhs {
        return Err(Error::NotACyclicConjugator);
    }
    Ok(v_inv)
}

/// `x_k = e_k v^-1`, `y_k = v e_k`.
pub fn conjugator_to_cyclic(sys: &IdempotentSystem, v: &RingValue) -> Result<CyclicEquivalenceData> {
    let v_inv = check_conjugator(sys, v)?;
    for k in 0..sys.n as i64 {
        if &(&(v * sys.e(k)) * &v_inv) != sys.e(k + 1) {
            return Err(Error::InvariantFailed(format!("v e_{k} v^-1 = e_{}", k + 1)));
        }
    }
    let data = CyclicEquivalenceData {
        x: sys.idempotents.iter().map(|e| e * &v_inv).collect(),
        y: sys.idempotents.iter().map(|e| v * e).collect(),
    };
    data.verify(sys)?;
    Ok(data)
}

/// `v = sum y_j`, returned together with its inverse `w = sum x_j`.
pub fn cyclic_to_conjugator(sys: &IdempotentSystem, data: &CyclicEquivalenceData) -> Result<(RingValue, RingValue)> {
    data.verify(sys)?;
    let v = sum(&sys.ring, &data.y);
    let w = sum(&sys.ring, &data.x);
    if !(&v * &w).is_one() || !(&w * &v).is_one() {
        return Err(Error::InvariantFailed("v w = w v = 1".into()));
    }
    if (&(&v * &sys.u) * &w) != (&sys.omega_pow(-1) * &sys.u) {
        return Err(Error::InvariantFailed("v u v^-1 = omega^-1 u".into()));
    }
    Ok((v, w))
}
