//! Pairs `(A, B)` over `Q(zeta_k)` with `[A, B]^k = Id_n`.
//!
//! A diagonal `C` of k-th roots of unity with vanishing trace is built from
//! a weight certificate, then written as a commutator: conjugate `C` to a
//! zero-diagonal `Z`, solve `[diag(0..n-1), B0] = Z` entrywise, and conjugate
//! back.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::cyclo_root;
use crate::rings::json::{matrix_from_json, matrix_to_json};
use crate::rings::linalg::SpanBasis;
use crate::rings::{DenseMatrix, RingDescriptor, RingValue};
use crate::weightset::{build_root_multiset, decompose};

/// A checked certificate that `M_{k,n}` is non-empty.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorWitness {
    pub k: u64,
    pub n: usize,
    pub a: DenseMatrix,
    pub b: DenseMatrix,
    pub c: DenseMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessChecks {
    pub commutator_ok: bool,
    pub power_ok: bool,
    pub trace_zero: bool,
}

impl WitnessChecks {
    pub fn all(&self) -> bool {
        self.commutator_ok && self.power_ok && self.trace_zero
    }

    /// Name of the first failing identity.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.commutator_ok {
            Some("[A,B] = C")
        } else if !self.power_ok {
            Some("C^k = Id")
        } else if !self.trace_zero {
            Some("Tr(C) = 0")
        } else {
            None
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "commutator_ok": self.commutator_ok,
            "power_ok": self.power_ok,
            "trace_zero": self.trace_zero,
        })
    }
}

impl CommutatorWitness {
    /// Recomputes every identity from scratch.
    pub fn checks(&self) -> WitnessChecks {
        let commutator_ok = matches!(self.a.commutator(&self.b), Ok(ab) if ab == self.c);
        let power_ok = matches!(self.c.power(self.k as i64), Ok(p) if p.is_identity());
        let trace_zero = matches!(self.c.trace(), Ok(t) if t.is_zero());
        WitnessChecks {
            commutator_ok,
            power_ok,
            trace_zero,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "n": self.n,
            "A": matrix_to_json(&self.a),
            "B": matrix_to_json(&self.b),
            "C": matrix_to_json(&self.c),
            "checks": self.checks().to_json(),
        })
    }

    /// Parses the matrices; the stored "checks" object is ignored.
    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |key: &str| v.get(key).ok_or_else(|| Error::Parse(format!("missing key {key:?}")));
        let k = get("k")?.as_u64().ok_or_else(|| Error::Parse("k must be an integer".into()))?;
        let n = get("n")?.as_u64().ok_or_else(|| Error::Parse("n must be an integer".into()))? as usize;
        let a = matrix_from_json(get("A")?)?;
        let b = matrix_from_json(get("B")?)?;
        let c = matrix_from_json(get("C")?)?;
        for m in [&a, &b, &c] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Parse(format!("witness matrices must be {n}x{n}")));
            }
        }
        Ok(CommutatorWitness { k, n, a, b, c })
    }
}

/// Diagonal `C` over `Q(zeta_k)` with trace 0 and `C^k = Id_n`.
pub fn build_c(k: u64, n: u64) -> Result<DenseMatrix> {
    let cert = decompose(k, n);
    let roots = build_root_multiset(&cert)?;
    let ring = RingDescriptor::cyclotomic(k)?;
    let diag = roots
        .exponents
        .iter()
        .map(|&e| cyclo_root(k, e as i64).map(RingValue::Cyclo))
        .collect::<Result<Vec<_>>>()?;
    Ok(DenseMatrix::diagonal(&ring, &diag))
}

fn require_char0_field(ring: &RingDescriptor) -> Result<()> {
    match ring {
        RingDescriptor::Rational | RingDescriptor::Cyclotomic(_) => Ok(()),
        other => Err(Error::Domain(format!(
            "commutator realization needs a characteristic-0 field, got {other}"
        ))),
    }
}

fn apply(m: &DenseMatrix, v: &[RingValue]) -> Vec<RingValue> {
    let ring = m.ring();
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(ring.zero(), |acc, (a, x)| &acc + &(a * x))
        })
        .collect()
}

/// The change of basis `(v, N v, e_i...)` that zeroes the `(0, 0)` entry of
/// a nonzero trace-zero block `N`.
fn zeroing_basis(block: &DenseMatrix) -> Result<DenseMatrix> {
    let ring = block.ring();
    let r = block.rows();
    let unit_vec = |i: usize| -> Vec<RingValue> {
        (0..r).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()
    };
    let moves_off_axis = |i: usize| (0..r).any(|j| j != i && !block.get(j, i).is_zero());
    let v = match (0..r).find(|&i| moves_off_axis(i)) {
        Some(i) => unit_vec(i),
        None => {
            // diagonal, and not scalar: a scalar with trace 0 in char 0 is 0
            let (i, j) = (0..r)
                .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
                .find(|&(i, j)| block.get(i, i) != block.get(j, j))
                .ok_or_else(|| Error::InternalConsistency("nonzero scalar block with trace 0".into()))?;
            let mut v = unit_vec(i);
            v[j] = ring.one();
            v
        }
    };
    let nv = apply(block, &v);
    let mut span = SpanBasis::new(ring.clone(), r);
    let mut cols = Vec::with_capacity(r);
    for candidate in [v, nv].into_iter().chain((0..r).map(unit_vec)) {
        if span.insert(candidate.clone()) {
            cols.push(candidate);
        }
    }
    if cols.len() != r {
        return Err(Error::InternalConsistency("basis completion fell short".into()));
    }
    Ok(DenseMatrix::from_fn(ring, r, r, |i, j| cols[j][i].clone()))
}

/// `S` invertible and `Z = S^-1 M S` with zero diagonal.
pub fn zero_diagonal_similarity(m: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    require_char0_field(m.ring())?;
    if !m.is_square() {
        return Err(Error::DimensionMismatch("similarity of a non-square matrix".into()));
    }
    if !m.trace()?.is_zero() {
        return Err(Error::Domain("matrix must have trace 0".into()));
    }
    let n = m.rows();
    let ring = m.ring();
    let mut s = DenseMatrix::identity(ring, n);
    let mut z = m.clone();
    for t in 0..n {
        if z.get(t, t).is_zero() {
            continue;
        }
        let block = z.trailing_block(t);
        let basis = zeroing_basis(&block)?;
        let step = DenseMatrix::embed_lower_right(&basis, n);
        let step_inv = DenseMatrix::embed_lower_right(&basis.inverse()?, n);
        z = step_inv.mat_mul(&z)?.mat_mul(&step)?;
        s = s.mat_mul(&step)?;
        debug_assert!(z.get(t, t).is_zero());
    }
    let check = s.inverse()?.mat_mul(m)?.mat_mul(&s)?;
    if check != z || (0..n).any(|i| !z.get(i, i).is_zero()) {
        return Err(Error::InternalConsistency("zero-diagonal similarity failed".into()));
    }
    Ok((s, z))
}

/// `(A, B)` with `[A, B] = C` for any trace-zero `C` over a char-0 field.
///
/// The diagonal of the auxiliary `B0` is set to 0; any value would do.
pub fn commutator_preimage(c: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    let (s, z) = zero_diagonal_similarity(c)?;
    let ring = c.ring();
    let n = c.rows();
    let a0 = DenseMatrix::diagonal(ring, &(0..n as i64).map(|i| ring.from_int(i)).collect::<Vec<_>>());
    let mut b0 = DenseMatrix::zero(ring, n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j && !z.get(i, j).is_zero() {
                let inv = ring.from_int(i as i64 - j as i64).inverse()?;
                b0.set(i, j, z.get(i, j) * &inv);
            }
        }
    }
    let s_inv = s.inverse()?;
    let a = s.mat_mul(&a0)?.mat_mul(&s_inv)?;
    let b = s.mat_mul(&b0)?.mat_mul(&s_inv)?;
    if a.commutator(&b)? != *c {
        return Err(Error::InternalConsistency("[A, B] != C".into()));
    }
    Ok((a, b))
}

/// Writes `C` as a commutator and returns the verified certificate.
///
/// Fails unless all three witness identities hold, including `C^k = Id`;
/// use [`commutator_preimage`] for trace-zero matrices of other orders.
pub fn realize_commutator(c: &DenseMatrix, k: u64) -> Result<CommutatorWitness> {
    let (a, b) = commutator_preimage(c)?;
    let w = CommutatorWitness {
        k,
        n: c.rows(),
        a,
        b,
        c: c.clone(),
    };
    match w.checks().first_failure() {
        None => Ok(w),
        Some(identity) => Err(Error::InvariantFailed(identity.into())),
    }
}

/// `build_c` followed by `realize_commutator`.
pub fn build_witness(k: u64, n: u64) -> Result<CommutatorWitness> {
    realize_commutator(&build_c(k, n)?, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn q(n: i64, d: i64) -> RingValue {
        RingValue::Rational(Rational::new(n, d).unwrap())
    }

    fn zeta(k: u64, e: i64) -> RingValue {
        RingValue::Cyclo(cyclo_root(k, e).unwrap())
    }

    #[test]
    fn build_c_examples() {
        let r2 = RingDescriptor::Cyclotomic(2);
        assert_eq!(build_c(2, 2).unwrap(), DenseMatrix::diagonal(&r2, &[zeta(2, 0), zeta(2, 1)]));
        let r3 = RingDescriptor::Cyclotomic(3);
        assert_eq!(
            build_c(3, 3).unwrap(),
            DenseMatrix::diagonal(&r3, &[zeta(3, 0), zeta(3, 1), zeta(3, 2)])
        );
        let c = build_c(6, 5).unwrap();
        let r6 = RingDescriptor::Cyclotomic(6);
        let expected = [zeta(6, 0), zeta(6, 3), zeta(6, 0), zeta(6, 2), zeta(6, 4)];
        assert_eq!(c, DenseMatrix::diagonal(&r6, &expected));
        assert!(c.trace().unwrap().is_zero());
        assert!(c.power(6).unwrap().is_identity());
        assert!(matches!(build_c(9, 5), Err(Error::NotInWeightSet { .. })));
    }

    #[test]
    fn zero_diagonal_input_is_left_alone() {
        let r = RingDescriptor::Rational;
        let m = DenseMatrix::from_rows(r.clone(), vec![vec![q(0, 1), q(2, 1)], vec![q(3, 1), q(0, 1)]]).unwrap();
        let (s, z) = zero_diagonal_similarity(&m).unwrap();
        assert!(s.is_identity());
        assert_eq!(z, m);
    }

    #[test]
    fn similarity_of_sign_diagonal() {
        let r = RingDescriptor::Rational;
        let m = DenseMatrix::diagonal(&r, &[q(1, 1), q(-1, 1)]);
        let (s, z) = zero_diagonal_similarity(&m).unwrap();
        assert!(z.get(0, 0).is_zero() && z.get(1, 1).is_zero());
        assert_eq!(s.inverse().unwrap().mat_mul(&m).unwrap().mat_mul(&s).unwrap(), z);
    }

    #[test]
    fn similarity_of_cube_roots() {
        let m = build_c(3, 3).unwrap();
        let (s, z) = zero_diagonal_similarity(&m).unwrap();
        assert!((0..3).all(|i| z.get(i, i).is_zero()));
        assert_eq!(&(&s.inverse().unwrap() * &m) * &s, z);
    }

    #[test]
    fn similarity_rejects_bad_input() {
        let r = RingDescriptor::Rational;
        assert!(matches!(
            zero_diagonal_similarity(&DenseMatrix::identity(&r, 2)),
            Err(Error::Domain(_))
        ));
        let z5 = RingDescriptor::Zmod(5);
        assert!(zero_diagonal_similarity(&DenseMatrix::zero(&z5, 2, 2)).is_err());
    }

    #[test]
    fn zero_matrix_preimage() {
        let r = RingDescriptor::Rational;
        let (a, b) = commutator_preimage(&DenseMatrix::zero(&r, 2, 2)).unwrap();
        assert_eq!(a, DenseMatrix::diagonal(&r, &[q(0, 1), q(1, 1)]));
        assert!(b.is_zero());
        // not a certificate: 0^k != Id
        assert!(matches!(
            realize_commutator(&DenseMatrix::zero(&r, 2, 2), 2),
            Err(Error::InvariantFailed(_))
        ));
    }

    #[test]
    fn witnesses_for_small_pairs() {
        for (k, n) in [(2, 2), (6, 5), (3, 3), (4, 6)] {
            let w = build_witness(k, n).unwrap();
            assert!(w.checks().all(), "({k}, {n})");
            assert_eq!(w.c.power(k as i64).unwrap(), DenseMatrix::identity(w.c.ring(), n as usize));
        }
    }

    #[test]
    fn json_round_trip() {
        let w = build_witness(6, 5).unwrap();
        let v = w.to_json();
        assert_eq!(v["checks"]["power_ok"], json!(true));
        let back = CommutatorWitness::from_json(&v).unwrap();
        assert_eq!(back, w);
    }
}
