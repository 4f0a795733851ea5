//! Finite-dimensional associative algebras given by structure constants.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{cyclo_root, CycloScalar};
use crate::rings::linalg::{solve_columns, SpanBasis};
use crate::rings::{RingDescriptor, RingValue};

/// A unital associative algebra over `Q(zeta_base_order)` with a fixed basis.
///
/// Associativity and the identity are checked when the algebra is built.
#[derive(Clone, PartialEq)]
pub struct FiniteAlgebra {
    base_order: u64,
    labels: Vec<String>,
    // products[i * dim + j] = nonzero coordinates of b_i * b_j
    products: Vec<Vec<(usize, CycloScalar)>>,
    one: Vec<CycloScalar>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAlgebra")
            .field("base_order", &self.base_order)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .finish()
    }
}

impl FiniteAlgebra {
    /// `table[i][j]` holds the coordinates of `b_i * b_j`.
    pub fn new(
        base_order: u64,
        labels: Vec<String>,
        table: Vec<Vec<Vec<CycloScalar>>>,
        one: Vec<CycloScalar>,
    ) -> Result<Self> {
        let d = labels.len();
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        if base_order < 1 {
            return bad("base order must be >= 1".into());
        }
        if table.len() != d || table.iter().any(|row| row.len() != d) {
            return bad(format!("table must be {d}x{d}"));
        }
        if one.len() != d {
            return bad(format!("identity needs {d} coordinates"));
        }
        let all_coords = table.iter().flatten().flatten().chain(&one);
        for c in all_coords {
            if c.order() != base_order {
                return bad(format!("coefficient over Q(zeta_{}) in an algebra over Q(zeta_{base_order})", c.order()));
            }
        }
        let mut products = Vec::with_capacity(d * d);
        for row in table {
            for cell in row {
                if cell.len() != d {
                    return bad(format!("product coordinates need length {d}"));
                }
                products.push(sparse(cell));
            }
        }
        let alg = FiniteAlgebra {
            base_order,
            labels,
            products,
            one,
        };
        alg.check_identity()?;
        alg.check_associative()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn base_order(&self) -> u64 {
        self.base_order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one_coords(&self) -> &[CycloScalar] {
        &self.one
    }

    /// Dense structure constants, `table[i][j]` = coordinates of `b_i b_j`.
    pub fn table(&self) -> Vec<Vec<Vec<CycloScalar>>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| self.dense(&self.products[i * d + j])).collect())
            .collect()
    }

    fn zero_vec(&self) -> Vec<CycloScalar> {
        vec![CycloScalar::zero(self.base_order); self.dim()]
    }

    fn dense(&self, s: &[(usize, CycloScalar)]) -> Vec<CycloScalar> {
        let mut v = self.zero_vec();
        for (k, c) in s {
            v[*k] = c.clone();
        }
        v
    }

    fn accumulate(&self, out: &mut [CycloScalar], scale: &CycloScalar, i: usize, j: usize) {
        for (k, c) in &self.products[i * self.dim() + j] {
            out[*k] = &out[*k] + &(scale * c);
        }
    }

    /// Product of two coordinate vectors.
    pub fn mul_coords(&self, a: &[CycloScalar], b: &[CycloScalar]) -> Vec<CycloScalar> {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    self.accumulate(&mut out, &(x * y), i, j);
                }
            }
        }
        out
    }

    fn sparse_mul(&self, a: &[(usize, CycloScalar)], b: &[(usize, CycloScalar)]) -> Vec<CycloScalar> {
        let mut out = self.zero_vec();
        for (i, x) in a {
            for (j, y) in b {
                self.accumulate(&mut out, &(x * y), *i, *j);
            }
        }
        out
    }

    fn check_identity(&self) -> Result<()> {
        let one = sparse(self.one.clone());
        for i in 0..self.dim() {
            let b = vec![(i, CycloScalar::one(self.base_order))];
            let expect = self.dense(&b);
            if self.sparse_mul(&one, &b) != expect || self.sparse_mul(&b, &one) != expect {
                return Err(Error::InvalidAlgebra(format!(
                    "identity coordinates fail on basis element {}",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)` on every basis triple.
    fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        let one = CycloScalar::one(self.base_order);
        for i in 0..d {
            for j in 0..d {
                let left = &self.products[i * d + j];
                for k in 0..d {
                    let right = &self.products[j * d + k];
                    let lhs = self.sparse_mul(left, &[(k, one.clone())]);
                    let rhs = self.sparse_mul(&[(i, one.clone())], right);
                    if lhs != rhs {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

fn sparse(v: Vec<CycloScalar>) -> Vec<(usize, CycloScalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// An element of a [`FiniteAlgebra`], as coordinates in its basis.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: Arc<FiniteAlgebra>,
    coords: Vec<CycloScalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.coords == other.coords
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .zip(self.algebra.labels())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("({c})*{l}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl AlgebraElement {
    pub fn new(algebra: Arc<FiniteAlgebra>, coords: Vec<CycloScalar>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dimension {} given {} coordinates",
                algebra.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| c.order() != algebra.base_order()) {
            return Err(Error::RingMismatch {
                left: format!("Q(zeta_{})", algebra.base_order()),
                right: "coordinate over another field".into(),
            });
        }
        Ok(AlgebraElement { algebra, coords })
    }

    pub fn zero(algebra: &Arc<FiniteAlgebra>) -> Self {
        AlgebraElement {
            coords: algebra.zero_vec(),
            algebra: algebra.clone(),
        }
    }

    pub fn one(algebra: &Arc<FiniteAlgebra>) -> Self {
        AlgebraElement {
            coords: algebra.one.clone(),
            algebra: algebra.clone(),
        }
    }

    pub fn basis(algebra: &Arc<FiniteAlgebra>, i: usize) -> Self {
        let mut coords = algebra.zero_vec();
        coords[i] = CycloScalar::one(algebra.base_order());
        AlgebraElement {
            coords,
            algebra: algebra.clone(),
        }
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[CycloScalar] {
        &self.coords
    }

    pub(crate) fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    fn assert_same(&self, other: &Self) {
        assert!(self.same_algebra(other), "elements of different algebras");
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(CycloScalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        self.with(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other);
        self.with(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        self.with(self.coords.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        self.with(self.algebra.mul_coords(&self.coords, &other.coords))
    }

    /// Multiplication by a base-field scalar.
    pub fn scale(&self, c: &CycloScalar) -> Self {
        self.with(self.coords.iter().map(|a| c * a).collect())
    }

    fn with(&self, coords: Vec<CycloScalar>) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        algebra_inverse(&self.algebra, self)
    }
}

fn as_values(v: &[CycloScalar]) -> Vec<RingValue> {
    v.iter().cloned().map(RingValue::Cyclo).collect()
}

fn from_values(v: Vec<RingValue>) -> Vec<CycloScalar> {
    v.into_iter()
        .map(|x| match x {
            RingValue::Cyclo(c) => c,
            other => panic!("expected a cyclotomic coordinate, got {other:?}"),
        })
        .collect()
}

/// Solves `v * w = 1` through the left-multiplication operator of `v`,
/// then confirms `w * v = 1`.
pub fn algebra_inverse(alg: &Arc<FiniteAlgebra>, v: &AlgebraElement) -> Result<AlgebraElement> {
    let not_unit = || Error::NotAUnit {
        ring: format!("algebra of dimension {}", alg.dim()),
    };
    let field = RingDescriptor::Cyclotomic(alg.base_order());
    let columns: Vec<Vec<RingValue>> = (0..alg.dim())
        .map(|q| as_values(&v.mul(&AlgebraElement::basis(alg, q)).coords))
        .collect();
    let w = solve_columns(&field, &columns, &as_values(&alg.one)).ok_or_else(not_unit)?;
    let w = AlgebraElement {
        algebra: alg.clone(),
        coords: from_values(w),
    };
    if w.mul(v).coords != alg.one {
        return Err(not_unit());
    }
    Ok(w)
}

/// The quotient `K<x, y> / (x^n - a, y^n - b, yx - omega xy)` with `K = Q(zeta_n)`
/// and `omega = zeta_n`, on the basis `x^i y^j`, `0 <= i, j < n` (index `i n + j`).
pub fn quantum_plane(n: usize, a: &CycloScalar, b: &CycloScalar) -> Result<Arc<FiniteAlgebra>> {
    if n < 2 {
        return Err(Error::Domain("quantum plane needs n >= 2".into()));
    }
    let order = n as u64;
    if a.order() != order || b.order() != order {
        return Err(Error::Domain(format!("parameters must lie in Q(zeta_{n})")));
    }
    if a.is_zero() {
        return Err(Error::Domain("a must be nonzero so that x is invertible".into()));
    }
    let d = n * n;
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("x^{i}y^{j}")))
        .collect();
    let zero = CycloScalar::zero(order);
    let mut table = vec![vec![vec![zero.clone(); d]; d]; d];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // y^j x^k = omega^{jk} x^k y^j
                    let mut c = cyclo_root(order, (j * k) as i64)?;
                    let (mut xe, mut ye) = (i + k, j + l);
                    if xe >= n {
                        xe -= n;
                        c = &c * a;
                    }
                    if ye >= n {
                        ye -= n;
                        c = &c * b;
                    }
                    table[i * n + j][k * n + l][xe * n + ye] = c;
                }
            }
        }
    }
    let mut one = vec![zero; d];
    one[0] = CycloScalar::one(order);
    Ok(Arc::new(FiniteAlgebra::new(order, labels, table, one)?))
}

/// `e A e` as an algebra in its own right, with identity `e`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub algebra: Arc<FiniteAlgebra>,
    /// Basis of the corner, as elements of the parent algebra.
    pub basis: Vec<AlgebraElement>,
}

impl Corner {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Basis of `e A e` chosen greedily from `e b_i e` in index order.
pub fn subring_corner(alg: &Arc<FiniteAlgebra>, e: &AlgebraElement) -> Result<Corner> {
    if e.mul(e) != *e {
        return Err(Error::NotIdempotent);
    }
    let field = RingDescriptor::Cyclotomic(alg.base_order());
    let mut span = SpanBasis::new(field, alg.dim());
    let mut basis = Vec::new();
    for i in 0..alg.dim() {
        let c = e.mul(&AlgebraElement::basis(alg, i)).mul(e);
        if span.insert(as_values(&c.coords)) {
            basis.push(c);
        }
    }
    let s = basis.len();
    let coords_of = |x: &AlgebraElement| -> Result<Vec<CycloScalar>> {
        span.coefficients(&as_values(&x.coords))
            .map(from_values)
            .ok_or_else(|| Error::InternalConsistency("corner not closed under multiplication".into()))
    };
    let mut table = Vec::with_capacity(s);
    for p in &basis {
        let mut row = Vec::with_capacity(s);
        for q in &basis {
            row.push(coords_of(&p.mul(q))?);
        }
        table.push(row);
    }
    let one = if s == 0 { Vec::new() } else { coords_of(e)? };
    let labels = (0..s).map(|i| format!("c{i}")).collect();
    let algebra = Arc::new(FiniteAlgebra::new(alg.base_order(), labels, table, one)?);
    Ok(Corner { algebra, basis })
}
