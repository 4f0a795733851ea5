use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::rings::{RingDescriptor, RingValue};

/// A dense row-major matrix over a registered ring.
///
/// Entry rings may be noncommutative (nested matrix rings, algebras), so
/// products always keep the left factor on the left.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    ring: RingDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<RingValue>,
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|e| format!("{e:?}")).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl DenseMatrix {
    pub fn new(ring: RingDescriptor, rows: usize, cols: usize, entries: Vec<RingValue>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices need at least one row and column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            ring.ensure_contains(e)?;
        }
        Ok(DenseMatrix { ring, rows, cols, entries })
    }

    pub fn from_rows(ring: RingDescriptor, rows: Vec<Vec<RingValue>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Entries produced by `f(i, j)` must lie in `ring`.
    pub fn from_fn(ring: &RingDescriptor, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RingValue) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                debug_assert!(ring.contains(&e));
                entries.push(e);
            }
        }
        DenseMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zero(ring: &RingDescriptor, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, rows, cols, |_, _| z.clone())
    }

    pub fn identity(ring: &RingDescriptor, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// `s * Id_n`.
    pub fn scalar(ring: &RingDescriptor, n: usize, s: &RingValue) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, n, n, |i, j| if i == j { s.clone() } else { z.clone() })
    }

    pub fn diagonal(ring: &RingDescriptor, diag: &[RingValue]) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                z.clone()
            }
        })
    }

    /// The matrix unit `E_ij` (0-based).
    pub fn unit(ring: &RingDescriptor, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        m.entries[i * n + j] = ring.one();
        m
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[RingValue] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &RingValue {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingValue) {
        assert!(self.ring.contains(&v), "entry not in {}", self.ring);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RingValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingValue::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.ring, self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(DenseMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(DenseMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        DenseMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(RingValue::negate).collect(),
        }
    }

    /// `s * M`, multiplying each entry on the left.
    pub fn scale_left(&self, s: &RingValue) -> Result<Self> {
        self.ring.ensure_contains(s)?;
        Ok(DenseMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| s * e).collect(),
        })
    }

    /// `M * s`.
    pub fn scale_right(&self, s: &RingValue) -> Result<Self> {
        self.ring.ensure_contains(s)?;
        Ok(DenseMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        })
    }

    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: rhs.ring.to_string(),
            });
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = self.ring.zero();
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(DenseMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mat_mul(other)?.sub(&other.mat_mul(self)?)
    }

    pub fn trace(&self) -> Result<RingValue> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).fold(self.ring.zero(), |acc, i| &acc + self.get(i, i)))
    }

    /// `M^k`; `k = 0` gives the identity, negative `k` needs an invertible matrix.
    pub fn power(&self, k: i64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(&self.ring, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mat_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Gauss-Jordan elimination that only ever pivots on units.
    ///
    /// Row operations multiply on the left, so this is sound over
    /// noncommutative entry rings; a column without a unit pivot yields
    /// `NotAUnit` even if some other elimination order might succeed.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let not_unit = || Error::NotAUnit {
            ring: format!("M_{n}({})", self.ring),
        };
        let mut a: Vec<Vec<RingValue>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<RingValue>> = (0..n)
            .map(|i| Self::identity(&self.ring, n).row(i).to_vec())
            .collect();
        for col in 0..n {
            let (pivot_row, pivot_inv) = (col..n)
                .find_map(|r| a[r][col].inverse().ok().map(|p| (r, p)))
                .ok_or_else(not_unit)?;
            a.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            for c in 0..n {
                a[col][c] = &pivot_inv * &a[col][c];
                inv[col][c] = &pivot_inv * &inv[col][c];
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                    let t = &f * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &t;
                }
            }
        }
        Ok(DenseMatrix {
            ring: self.ring.clone(),
            rows: n,
            cols: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Block-diagonal `diag(Id_offset, block)`.
    pub fn embed_lower_right(block: &Self, n: usize) -> Self {
        let off = n - block.rows;
        let ring = block.ring.clone();
        let (zero, one) = (ring.zero(), ring.one());
        Self::from_fn(&ring, n, n, |i, j| {
            if i >= off && j >= off {
                block.get(i - off, j - off).clone()
            } else if i == j {
                one.clone()
            } else {
                zero.clone()
            }
        })
    }

    /// The trailing `(n - from) x (n - from)` block.
    pub fn trailing_block(&self, from: usize) -> Self {
        Self::from_fn(&self.ring, self.rows - from, self.cols - from, |i, j| {
            self.get(i + from, j + from).clone()
        })
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.mat_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix::add(self, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix::sub(self, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}
