//! Exact elimination over a field, with vectors of [`RingValue`] coordinates.

use crate::rings::{RingDescriptor, RingValue};

/// An incrementally built basis of a subspace of `field^len`.
///
/// Each accepted vector is kept in echelon form together with its expression
/// in terms of the accepted originals, so membership tests also yield
/// coordinates.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    field: RingDescriptor,
    len: usize,
    // (pivot column, echelon row with 1 at pivot, combination of accepted vectors)
    rows: Vec<(usize, Vec<RingValue>, Vec<RingValue>)>,
    accepted: Vec<Vec<RingValue>>,
}

impl SpanBasis {
    pub fn new(field: RingDescriptor, len: usize) -> Self {
        SpanBasis {
            field,
            len,
            rows: Vec::new(),
            accepted: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.accepted.len()
    }

    /// The accepted vectors, in insertion order.
    pub fn vectors(&self) -> &[Vec<RingValue>] {
        &self.accepted
    }

    /// Reduces `v` against the echelon rows; returns the remainder and the
    /// combination `c` with `v = remainder + sum c_i accepted_i`.
    fn reduce(&self, v: &[RingValue]) -> (Vec<RingValue>, Vec<RingValue>) {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut rem = v.to_vec();
        let mut combo = vec![self.field.zero(); self.accepted.len()];
        for (pivot, row, row_combo) in &self.rows {
            let f = rem[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (r, x) in rem.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r = &*r - &(&f * x);
                }
            }
            for (c, x) in combo.iter_mut().zip(row_combo) {
                if !x.is_zero() {
                    *c = &*c + &(&f * x);
                }
            }
        }
        (rem, combo)
    }

    /// Adds `v` if it is independent of the current span.
    pub fn insert(&mut self, v: Vec<RingValue>) -> bool {
        let (rem, combo) = self.reduce(&v);
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rem[pivot].inverse().expect("nonzero element of a field");
        // new row = (v - sum combo_i accepted_i) / rem[pivot]
        let idx = self.accepted.len();
        let mut row_combo: Vec<RingValue> = combo.iter().map(|c| -(&inv * c)).collect();
        row_combo.push(inv.clone());
        for (_, _, rc) in &mut self.rows {
            rc.push(self.field.zero());
        }
        let row = rem.iter().map(|x| &inv * x).collect();
        self.rows.push((pivot, row, row_combo));
        self.accepted.push(v);
        debug_assert_eq!(self.rows.len(), idx + 1);
        true
    }

    /// Coordinates of `v` w.r.t. the accepted vectors, or `None` outside the span.
    pub fn coefficients(&self, v: &[RingValue]) -> Option<Vec<RingValue>> {
        let (rem, combo) = self.reduce(v);
        if rem.iter().all(RingValue::is_zero) {
            Some(combo)
        } else {
            None
        }
    }
}

/// Rank of a family of vectors over `field`.
pub fn rank(field: &RingDescriptor, vectors: &[Vec<RingValue>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut basis = SpanBasis::new(field.clone(), first.len());
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.rank()
}

/// Solves `sum_j x_j columns_j = target`, when a solution exists.
pub fn solve_columns(
    field: &RingDescriptor,
    columns: &[Vec<RingValue>],
    target: &[RingValue],
) -> Option<Vec<RingValue>> {
    let mut basis = SpanBasis::new(field.clone(), target.len());
    let mut used = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        if basis.insert(c.clone()) {
            used.push(j);
        }
    }
    let coeffs = basis.coefficients(target)?;
    let mut x = vec![field.zero(); columns.len()];
    for (j, c) in used.into_iter().zip(coeffs) {
        x[j] = c;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn v(xs: &[i64]) -> Vec<RingValue> {
        xs.iter().map(|&x| RingValue::Rational(Rational::from_int(x))).collect()
    }

    #[test]
    fn rank_of_dependent_family() {
        let q = RingDescriptor::Rational;
        assert_eq!(rank(&q, &[v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]), 2);
        assert_eq!(rank(&q, &[v(&[0, 0]), v(&[0, 0])]), 0);
        assert_eq!(rank(&q, &[]), 0);
    }

    #[test]
    fn coefficients_reconstruct_target() {
        let q = RingDescriptor::Rational;
        let mut b = SpanBasis::new(q.clone(), 3);
        assert!(b.insert(v(&[1, 1, 0])));
        assert!(b.insert(v(&[0, 1, 1])));
        assert!(!b.insert(v(&[1, 2, 1])));
        let c = b.coefficients(&v(&[2, 5, 3])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(b.coefficients(&v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn solve_skips_dependent_columns() {
        let q = RingDescriptor::Rational;
        let cols = [v(&[1, 0]), v(&[2, 0]), v(&[0, 1])];
        let x = solve_columns(&q, &cols, &v(&[3, 4])).unwrap();
        assert_eq!(x, v(&[3, 0, 4]));
    }
}
