//! Unital rings known to the library and their elements.
//!
//! A [`RingDescriptor`] names a ring at runtime; a [`RingValue`] is an element
//! of one. Matrix rings register as rings themselves, so `M_n(M_m(S))` nests.
//! Arithmetic between values of different rings is an error from the
//! `checked_*` methods and a panic from the operator impls.

mod algebra;
pub mod json;
pub mod linalg;
mod matrix;

pub use algebra::{algebra_inverse, quantum_plane, subring_corner, AlgebraElement, Corner, FiniteAlgebra};
pub use matrix::DenseMatrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{CycloScalar, Rational, ZmodScalar};

#[derive(Clone)]
pub enum RingDescriptor {
    Rational,
    Zmod(u64),
    Cyclotomic(u64),
    /// `M_n(inner)`.
    Matrix(usize, Box<RingDescriptor>),
    Algebra(Arc<FiniteAlgebra>),
}

impl PartialEq for RingDescriptor {
    fn eq(&self, other: &Self) -> bool {
        use RingDescriptor::*;
        match (self, other) {
            (Rational, Rational) => true,
            (Zmod(a), Zmod(b)) => a == b,
            (Cyclotomic(a), Cyclotomic(b)) => a == b,
            (Matrix(n, a), Matrix(m, b)) => n == m && a == b,
            (Algebra(a), Algebra(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for RingDescriptor {}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rational => write!(f, "Q"),
            RingDescriptor::Zmod(m) => write!(f, "Z/{m}"),
            RingDescriptor::Cyclotomic(m) => write!(f, "Q(zeta_{m})"),
            RingDescriptor::Matrix(n, inner) => write!(f, "M_{n}({inner})"),
            RingDescriptor::Algebra(a) => {
                write!(f, "Algebra(dim {} over Q(zeta_{}))", a.dim(), a.base_order())
            }
        }
    }
}

impl fmt::Debug for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    /// Parses the command-line ring names `Q`, `Zmod:m` and `Cyclo:m`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown ring {s:?}; expected Q, Zmod:m or Cyclo:m"));
        if s == "Q" {
            return Ok(RingDescriptor::Rational);
        }
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let m: u64 = arg.parse().map_err(|_| bad())?;
        match kind {
            "Zmod" => RingDescriptor::zmod(m),
            "Cyclo" => RingDescriptor::cyclotomic(m),
            _ => Err(bad()),
        }
    }
}

fn is_prime(m: u64) -> bool {
    m >= 2 && (2..).take_while(|p| p * p <= m).all(|p| m % p != 0)
}

impl RingDescriptor {
    pub fn zmod(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Domain(format!("modulus must be >= 2, got {modulus}")));
        }
        Ok(RingDescriptor::Zmod(modulus))
    }

    pub fn cyclotomic(order: u64) -> Result<Self> {
        if order < 1 {
            return Err(Error::Domain("cyclotomic order must be >= 1".into()));
        }
        Ok(RingDescriptor::Cyclotomic(order))
    }

    pub fn matrix(n: usize, inner: RingDescriptor) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("matrix size must be >= 1".into()));
        }
        Ok(RingDescriptor::Matrix(n, Box::new(inner)))
    }

    /// The image of the integer `n` under `Z -> R`.
    pub fn from_int(&self, n: i64) -> RingValue {
        match self {
            RingDescriptor::Rational => RingValue::Rational(Rational::from_int(n)),
            RingDescriptor::Zmod(m) => RingValue::Zmod(ZmodScalar::new(*m, n).expect("valid modulus")),
            RingDescriptor::Cyclotomic(m) => RingValue::Cyclo(CycloScalar::from_int(*m, n)),
            RingDescriptor::Matrix(k, inner) => {
                RingValue::Matrix(DenseMatrix::scalar(inner, *k, &inner.from_int(n)))
            }
            RingDescriptor::Algebra(a) => {
                let c = CycloScalar::from_int(a.base_order(), n);
                RingValue::Algebra(AlgebraElement::one(a).scale(&c))
            }
        }
    }

    /// Maps a rational into the ring, when its denominator is invertible there.
    pub fn from_rational(&self, r: &Rational) -> Result<RingValue> {
        let to_i64 = |b: &num_bigint::BigInt| {
            i64::try_from(b).map_err(|_| Error::Domain(format!("{r} too large for {self}")))
        };
        match self {
            RingDescriptor::Rational => Ok(RingValue::Rational(r.clone())),
            RingDescriptor::Cyclotomic(m) => {
                Ok(RingValue::Cyclo(CycloScalar::from_rational(*m, r.clone())))
            }
            RingDescriptor::Algebra(a) => {
                let c = CycloScalar::from_rational(a.base_order(), r.clone());
                Ok(RingValue::Algebra(AlgebraElement::one(a).scale(&c)))
            }
            _ => {
                let num = self.from_int(to_i64(r.numer())?);
                let den = self.from_int(to_i64(r.denom())?).inverse()?;
                num.checked_mul(&den)
            }
        }
    }

    pub fn zero(&self) -> RingValue {
        self.from_int(0)
    }

    pub fn one(&self) -> RingValue {
        self.from_int(1)
    }

    /// 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match self {
            RingDescriptor::Rational | RingDescriptor::Cyclotomic(_) => 0,
            RingDescriptor::Zmod(m) => *m,
            RingDescriptor::Matrix(_, inner) => inner.characteristic(),
            RingDescriptor::Algebra(a) => {
                if a.dim() == 0 {
                    1
                } else {
                    0
                }
            }
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            RingDescriptor::Matrix(n, inner) => *n == 1 && inner.is_commutative(),
            RingDescriptor::Algebra(a) => {
                let basis: Vec<_> = (0..a.dim()).map(|i| AlgebraElement::basis(a, i)).collect();
                basis.iter().all(|x| basis.iter().all(|y| x.mul(y) == y.mul(x)))
            }
            _ => true,
        }
    }

    pub fn contains(&self, v: &RingValue) -> bool {
        v.ring() == *self
    }

    pub(crate) fn ensure_contains(&self, v: &RingValue) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: v.ring().to_string(),
            })
        }
    }

    /// Exact membership test for the center.
    ///
    /// Commutative rings are trivial; an algebra is checked against its
    /// basis; a matrix must commute with every matrix unit (forcing a scalar
    /// matrix `s*Id`) and `s` must be central in the entry ring.
    pub fn is_central(&self, v: &RingValue) -> bool {
        if !self.contains(v) {
            return false;
        }
        match (self, v) {
            (RingDescriptor::Algebra(a), RingValue::Algebra(x)) => (0..a.dim()).all(|i| {
                let b = AlgebraElement::basis(a, i);
                x.mul(&b) == b.mul(x)
            }),
            (RingDescriptor::Matrix(n, inner), RingValue::Matrix(m)) => {
                for i in 0..*n {
                    for j in 0..*n {
                        let e = DenseMatrix::unit(inner, *n, i, j);
                        if m.mat_mul(&e).unwrap() != e.mat_mul(m).unwrap() {
                            return false;
                        }
                    }
                }
                inner.is_central(m.get(0, 0))
            }
            _ => true,
        }
    }

    /// The exact field this ring is a finite-dimensional vector space over,
    /// when there is one.
    pub fn base_field(&self) -> Option<RingDescriptor> {
        match self {
            RingDescriptor::Rational => Some(RingDescriptor::Rational),
            RingDescriptor::Cyclotomic(m) => Some(RingDescriptor::Cyclotomic(*m)),
            RingDescriptor::Zmod(p) if is_prime(*p) => Some(RingDescriptor::Zmod(*p)),
            RingDescriptor::Zmod(_) => None,
            RingDescriptor::Matrix(_, inner) => inner.base_field(),
            RingDescriptor::Algebra(a) => Some(RingDescriptor::Cyclotomic(a.base_order())),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.base_field(), Some(ref f) if f == self)
    }

    /// Dimension over [`Self::base_field`].
    pub fn dimension(&self) -> Option<usize> {
        self.base_field()?;
        Some(match self {
            RingDescriptor::Matrix(n, inner) => n * n * inner.dimension()?,
            RingDescriptor::Algebra(a) => a.dim(),
            _ => 1,
        })
    }

    /// Coordinates over [`Self::base_field`], ordered consistently with [`Self::basis`].
    pub fn coordinates(&self, v: &RingValue) -> Option<Vec<RingValue>> {
        self.base_field()?;
        match v {
            RingValue::Matrix(m) => {
                let inner = m.ring();
                let mut out = Vec::new();
                for e in m.entries() {
                    out.extend(inner.coordinates(e)?);
                }
                Some(out)
            }
            RingValue::Algebra(x) => Some(x.coords().iter().cloned().map(RingValue::Cyclo).collect()),
            scalar => Some(vec![scalar.clone()]),
        }
    }

    pub fn basis(&self) -> Option<Vec<RingValue>> {
        self.base_field()?;
        match self {
            RingDescriptor::Matrix(n, inner) => {
                let inner_basis = inner.basis()?;
                let mut out = Vec::new();
                for i in 0..*n {
                    for j in 0..*n {
                        for b in &inner_basis {
                            let mut m = DenseMatrix::zero(inner, *n, *n);
                            m.set(i, j, b.clone());
                            out.push(RingValue::Matrix(m));
                        }
                    }
                }
                Some(out)
            }
            RingDescriptor::Algebra(a) => Some(
                (0..a.dim())
                    .map(|i| RingValue::Algebra(AlgebraElement::basis(a, i)))
                    .collect(),
            ),
            other => Some(vec![other.one()]),
        }
    }

    /// A random element with small integer coordinates (`|c| <= 3`).
    pub fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> RingValue {
        match self {
            RingDescriptor::Rational => RingValue::Rational(Rational::from_int(rng.gen_range(-3..=3))),
            RingDescriptor::Zmod(m) => {
                RingValue::Zmod(ZmodScalar::new(*m, rng.gen_range(0..*m) as i64).unwrap())
            }
            RingDescriptor::Cyclotomic(m) => RingValue::Cyclo(random_cyclo(*m, rng)),
            RingDescriptor::Matrix(n, inner) => {
                let entries = (0..n * n).map(|_| inner.random_element(rng)).collect();
                RingValue::Matrix(DenseMatrix::new(inner.as_ref().clone(), *n, *n, entries).unwrap())
            }
            RingDescriptor::Algebra(a) => {
                let coords = (0..a.dim()).map(|_| random_cyclo(a.base_order(), rng)).collect();
                RingValue::Algebra(AlgebraElement::new(a.clone(), coords).unwrap())
            }
        }
    }
}

fn random_cyclo<G: Rng + ?Sized>(order: u64, rng: &mut G) -> CycloScalar {
    let phi = crate::exact::euler_phi(order) as usize;
    let coeffs = (0..phi).map(|_| Rational::from_int(rng.gen_range(-3..=3))).collect();
    CycloScalar::from_coeffs(order, coeffs).unwrap()
}

/// An element of a registered ring.
#[derive(Clone, PartialEq)]
pub enum RingValue {
    Rational(Rational),
    Zmod(ZmodScalar),
    Cyclo(CycloScalar),
    Matrix(DenseMatrix),
    Algebra(AlgebraElement),
}

impl fmt::Debug for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rational(r) => write!(f, "{r}"),
            RingValue::Zmod(z) => write!(f, "{z}"),
            RingValue::Cyclo(c) => write!(f, "{c}"),
            RingValue::Matrix(m) => write!(f, "{m:?}"),
            RingValue::Algebra(a) => write!(f, "{a:?}"),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Rational> for RingValue {
    fn from(r: Rational) -> Self {
        RingValue::Rational(r)
    }
}

impl From<ZmodScalar> for RingValue {
    fn from(z: ZmodScalar) -> Self {
        RingValue::Zmod(z)
    }
}

impl From<CycloScalar> for RingValue {
    fn from(c: CycloScalar) -> Self {
        RingValue::Cyclo(c)
    }
}

impl From<DenseMatrix> for RingValue {
    fn from(m: DenseMatrix) -> Self {
        RingValue::Matrix(m)
    }
}

impl From<AlgebraElement> for RingValue {
    fn from(a: AlgebraElement) -> Self {
        RingValue::Algebra(a)
    }
}

impl RingValue {
    pub fn ring(&self) -> RingDescriptor {
        match self {
            RingValue::Rational(_) => RingDescriptor::Rational,
            RingValue::Zmod(z) => RingDescriptor::Zmod(z.modulus()),
            RingValue::Cyclo(c) => RingDescriptor::Cyclotomic(c.order()),
            RingValue::Matrix(m) => RingDescriptor::Matrix(m.rows(), Box::new(m.ring().clone())),
            RingValue::Algebra(a) => RingDescriptor::Algebra(a.algebra().clone()),
        }
    }

    fn same_ring(&self, other: &Self) -> bool {
        match (self, other) {
            (RingValue::Rational(_), RingValue::Rational(_)) => true,
            (RingValue::Zmod(a), RingValue::Zmod(b)) => a.modulus() == b.modulus(),
            (RingValue::Cyclo(a), RingValue::Cyclo(b)) => a.order() == b.order(),
            (RingValue::Matrix(a), RingValue::Matrix(b)) => {
                a.is_square() && b.is_square() && a.rows() == b.rows() && a.ring() == b.ring()
            }
            (RingValue::Algebra(a), RingValue::Algebra(b)) => a.same_algebra(b),
            _ => false,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::RingMismatch {
            left: self.ring().to_string(),
            right: other.ring().to_string(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a + b),
            (RingValue::Zmod(a), RingValue::Zmod(b)) => RingValue::Zmod(*a + *b),
            (RingValue::Cyclo(a), RingValue::Cyclo(b)) => RingValue::Cyclo(a + b),
            (RingValue::Matrix(a), RingValue::Matrix(b)) => RingValue::Matrix(a.add(b)?),
            (RingValue::Algebra(a), RingValue::Algebra(b)) => RingValue::Algebra(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a - b),
            (RingValue::Zmod(a), RingValue::Zmod(b)) => RingValue::Zmod(*a - *b),
            (RingValue::Cyclo(a), RingValue::Cyclo(b)) => RingValue::Cyclo(a - b),
            (RingValue::Matrix(a), RingValue::Matrix(b)) => RingValue::Matrix(a.sub(b)?),
            (RingValue::Algebra(a), RingValue::Algebra(b)) => RingValue::Algebra(a.sub(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(self.mismatch(other));
        }
        Ok(match (self, other) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a * b),
            (RingValue::Zmod(a), RingValue::Zmod(b)) => RingValue::Zmod(*a * *b),
            (RingValue::Cyclo(a), RingValue::Cyclo(b)) => RingValue::Cyclo(a * b),
            (RingValue::Matrix(a), RingValue::Matrix(b)) => RingValue::Matrix(a.mat_mul(b)?),
            (RingValue::Algebra(a), RingValue::Algebra(b)) => RingValue::Algebra(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn negate(&self) -> Self {
        match self {
            RingValue::Rational(a) => RingValue::Rational(-a),
            RingValue::Zmod(a) => RingValue::Zmod(-*a),
            RingValue::Cyclo(a) => RingValue::Cyclo(-a),
            RingValue::Matrix(a) => RingValue::Matrix(a.neg()),
            RingValue::Algebra(a) => RingValue::Algebra(a.neg()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Rational(a) => a.is_zero(),
            RingValue::Zmod(a) => a.is_zero(),
            RingValue::Cyclo(a) => a.is_zero(),
            RingValue::Matrix(a) => a.is_zero(),
            RingValue::Algebra(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingValue::Rational(a) => a.is_unit(),
            RingValue::Zmod(a) => a.is_unit(),
            RingValue::Cyclo(a) => a.is_unit(),
            _ => self.inverse().is_ok(),
        }
    }

    /// Two-sided inverse.
    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            RingValue::Rational(a) => RingValue::Rational(a.inverse()?),
            RingValue::Zmod(a) => RingValue::Zmod(a.inverse()?),
            RingValue::Cyclo(a) => RingValue::Cyclo(a.inverse()?),
            RingValue::Matrix(a) => RingValue::Matrix(a.inverse()?),
            RingValue::Algebra(a) => RingValue::Algebra(a.inverse()?),
        })
    }

    /// `self^exp`; negative exponents need a unit.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.ring().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn as_matrix(&self) -> Option<&DenseMatrix> {
        match self {
            RingValue::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_algebra(&self) -> Option<&AlgebraElement> {
        match self {
            RingValue::Algebra(a) => Some(a),
            _ => None,
        }
    }
}

/// `ab - ba`.
pub fn commutator(a: &RingValue, b: &RingValue) -> Result<RingValue> {
    a.checked_mul(b)?.checked_sub(&b.checked_mul(a)?)
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&RingValue> for &RingValue {
            type Output = RingValue;
            fn $method(self, rhs: &RingValue) -> RingValue {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<RingValue> for RingValue {
            type Output = RingValue;
            fn $method(self, rhs: RingValue) -> RingValue {
                (&self).$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.negate()
    }
}

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.negate()
    }
}

/// Sum of a non-empty list, or zero of `ring` when empty.
pub fn sum<'a, I>(ring: &RingDescriptor, items: I) -> RingValue
where
    I: IntoIterator<Item = &'a RingValue>,
{
    items.into_iter().fold(ring.zero(), |acc, x| &acc + x)
}

/// Left-to-right product; `1` of `ring` when empty.
pub fn product<'a, I>(ring: &RingDescriptor, items: I) -> RingValue
where
    I: IntoIterator<Item = &'a RingValue>,
{
    items.into_iter().fold(ring.one(), |acc, x| &acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ring_specs() {
        assert_eq!("Q".parse::<RingDescriptor>().unwrap(), RingDescriptor::Rational);
        assert_eq!("Zmod:5".parse::<RingDescriptor>().unwrap(), RingDescriptor::Zmod(5));
        assert_eq!("Cyclo:6".parse::<RingDescriptor>().unwrap(), RingDescriptor::Cyclotomic(6));
        assert!("Zmod:1".parse::<RingDescriptor>().is_err());
        assert!("Cyclo:0".parse::<RingDescriptor>().is_err());
        assert!("R".parse::<RingDescriptor>().is_err());
    }

    #[test]
    fn characteristic_of_matrix_ring_is_inherited() {
        for inner in [RingDescriptor::Rational, RingDescriptor::Zmod(6), RingDescriptor::Cyclotomic(5)] {
            let m = RingDescriptor::matrix(3, inner.clone()).unwrap();
            assert_eq!(m.characteristic(), inner.characteristic());
            let mm = RingDescriptor::matrix(2, m).unwrap();
            assert_eq!(mm.characteristic(), inner.characteristic());
        }
        // char * 1 = 0 in M_2(Z/6)
        let m = RingDescriptor::matrix(2, RingDescriptor::Zmod(6)).unwrap();
        assert!(m.from_int(6).is_zero());
        assert!(!m.from_int(3).is_zero());
    }

    #[test]
    fn mixing_rings_is_an_error() {
        let a = RingDescriptor::Rational.one();
        let b = RingDescriptor::Zmod(5).one();
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch { .. })));
        let c = RingDescriptor::Cyclotomic(3).one();
        let d = RingDescriptor::Cyclotomic(6).one();
        assert!(c.checked_mul(&d).is_err());
    }

    #[test]
    fn center_of_matrix_ring() {
        let r = RingDescriptor::matrix(2, RingDescriptor::Rational).unwrap();
        assert!(r.is_central(&r.from_int(5)));
        let e = RingValue::Matrix(DenseMatrix::unit(&RingDescriptor::Rational, 2, 0, 1));
        assert!(!r.is_central(&e));
    }

    #[test]
    fn from_rational_into_zmod() {
        let z5 = RingDescriptor::Zmod(5);
        let half = z5.from_rational(&Rational::new(1, 2).unwrap()).unwrap();
        assert_eq!(half, RingValue::Zmod(ZmodScalar::new(5, 3).unwrap()));
        assert!(RingDescriptor::Zmod(4).from_rational(&Rational::new(1, 2).unwrap()).is_err());
    }

    #[test]
    fn commutator_of_self_is_zero() {
        let r = RingDescriptor::matrix(3, RingDescriptor::Cyclotomic(3)).unwrap();
        let mut rng = rand::thread_rng();
        let m = r.random_element(&mut rng);
        assert!(commutator(&m, &m).unwrap().is_zero());
    }
}
