//! Matrix units built from cyclic equivalence data and the map
//! `phi: M_n(S) -> R` with `S = e_0 R e_0`.
//!
//! Elements of `M_n(S)` are stored as `n x n` matrices over `R` whose
//! entries lie in the corner; the identity is `diag(e_0, ..., e_0)`.

use crate::error::{Error, Result};
use crate::rings::{sum, DenseMatrix, RingDescriptor, RingValue};

use super::{CyclicEquivalenceData, IdempotentSystem};

#[derive(Clone, Debug)]
pub struct MatrixUnitSystem {
    pub ring: RingDescriptor,
    pub n: usize,
    pub e0: RingValue,
    /// `X_i = y_{i-1} ... y_0`, mapping the corner at `e_0` to `e_i`.
    pub x: Vec<RingValue>,
    /// `Y_i = x_0 ... x_{i-1}`.
    pub y: Vec<RingValue>,
    /// `E_ij = X_i Y_j`.
    pub e: Vec<Vec<RingValue>>,
}

impl MatrixUnitSystem {
    /// Identity of `M_n(S)`.
    pub fn corner_identity(&self) -> DenseMatrix {
        DenseMatrix::scalar(&self.ring, self.n, &self.e0)
    }

    pub fn in_corner(&self, s: &RingValue) -> bool {
        &(&(&self.e0 * s) * &self.e0) == s
    }

    /// Exhaustive check of every matrix-unit identity, `O(n^4)` products.
    pub fn verify(&self, sys: &IdempotentSystem) -> Result<()> {
        let n = self.n;
        let fail = |what: String| Err(Error::InvariantFailed(what));
        for i in 0..n {
            if &(&self.x[i] * &self.y[i]) != sys.e(i as i64) {
                return fail(format!("X_{i} Y_{i} = e_{i}"));
            }
            for k in 0..n {
                let p = &self.y[i] * &self.x[k];
                let expected = if i == k { self.e0.clone() } else { self.ring.zero() };
                if p != expected {
                    return fail(format!("Y_{i} X_{k} = delta e_0"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let p = &self.e[i][j] * &self.e[k][l];
                        let ok = if j == k { p == self.e[i][l] } else { p.is_zero() };
                        if !ok {
                            return fail(format!("E_{i}{j} E_{k}{l} = delta_{j}{k} E_{i}{l}"));
                        }
                    }
                }
            }
        }
        let diag: Vec<RingValue> = (0..n).map(|i| self.e[i][i].clone()).collect();
        if !sum(&self.ring, &diag).is_one() {
            return fail("sum E_ii = 1".into());
        }
        Ok(())
    }
}

pub fn build_matrix_units(sys: &IdempotentSystem, data: &CyclicEquivalenceData) -> Result<MatrixUnitSystem> {
    data.verify(sys)?;
    let n = sys.n;
    let e0 = sys.e(0).clone();
    let mut x = vec![e0.clone()];
    let mut y = vec![e0.clone()];
    for i in 1..n {
        x.push(&data.y[i - 1] * &x[i - 1]);
        y.push(&y[i - 1] * &data.x[i - 1]);
    }
    let e = (0..n)
        .map(|i| (0..n).map(|j| &x[i] * &y[j]).collect())
        .collect();
    let units = MatrixUnitSystem {
        ring: sys.ring.clone(),
        n,
        e0,
        x,
        y,
        e,
    };
    units.verify(sys)?;
    Ok(units)
}

/// `(s_ij) -> sum X_i s_ij Y_j`.
pub fn phi(units: &MatrixUnitSystem, m: &DenseMatrix) -> Result<RingValue> {
    let n = units.n;
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!("phi expects an {n}x{n} matrix")));
    }
    if m.ring() != &units.ring {
        return Err(Error::RingMismatch {
            left: units.ring.to_string(),
            right: m.ring().to_string(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            if !units.in_corner(m.get(i, j)) {
                return Err(Error::Domain(format!("entry ({i}, {j}) is not in e_0 R e_0")));
            }
        }
    }
    // sum_i X_i (sum_j s_ij Y_j): n + n^2 products instead of 2 n^2
    let mut terms = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<RingValue> = (0..n)
            .filter(|&j| !m.get(i, j).is_zero())
            .map(|j| m.get(i, j) * &units.y[j])
            .collect();
        if !row.is_empty() {
            terms.push(&units.x[i] * &sum(&units.ring, &row));
        }
    }
    Ok(sum(&units.ring, &terms))
}

/// `r -> (Y_i r X_j)`.
pub fn phi_inverse(units: &MatrixUnitSystem, r: &RingValue) -> Result<DenseMatrix> {
    units.ring.ensure_contains(r)?;
    Ok(DenseMatrix::from_fn(&units.ring, units.n, units.n, |i, j| {
        &(&units.y[i] * r) * &units.x[j]
    }))
}
