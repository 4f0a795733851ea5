//! Elements of the cyclotomic field `Q(zeta_m)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(m)-1)` after
//! reduction modulo the m-th cyclotomic polynomial, so two elements are equal
//! exactly when their coefficient vectors are.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Integer coefficients of `Phi_m`, lowest degree first. Cached per order.
pub fn cyclotomic_poly(order: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&order) {
        return p.clone();
    }
    let poly = Arc::new(compute_cyclotomic(order));
    cache.lock().unwrap().insert(order, poly.clone());
    poly
}

fn compute_cyclotomic(order: u64) -> Vec<i64> {
    assert!(order >= 1);
    // x^m - 1
    let mut num = vec![0i64; order as usize + 1];
    num[0] = -1;
    num[order as usize] = 1;
    for d in 1..order {
        if order % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

/// Quotient of `num` by a monic integer polynomial that divides it exactly.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An element of `Q(zeta_order)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1, "cyclotomic order must be >= 1");
        CycloScalar {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u64, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(order: u64, n: i64) -> Self {
        Self::from_rational(order, Rational::from_int(n))
    }

    /// Builds from power-basis coordinates; the length must be `phi(order)`.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if order < 1 {
            return Err(Error::Domain("cyclotomic order must be >= 1".into()));
        }
        let phi = euler_phi(order) as usize;
        if coeffs.len() != phi {
            return Err(Error::Domain(format!(
                "Q(zeta_{order}) needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycloScalar { order, coeffs })
    }

    /// Reduces an arbitrary polynomial in `zeta` (lowest degree first).
    pub fn from_poly(order: u64, poly: Vec<Rational>) -> Self {
        CycloScalar {
            order,
            coeffs: reduce(order, poly),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixing Q(zeta_{}) and Q(zeta_{}); embed explicitly",
            self.order, other.order
        );
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Inverse via the linear system of the multiplication-by-self operator.
    pub fn inverse(&self) -> Result<Self> {
        let not_unit = || Error::NotAUnit {
            ring: format!("Q(zeta_{})", self.order),
        };
        if self.is_zero() {
            return Err(not_unit());
        }
        let phi = self.coeffs.len();
        // column j holds self * zeta^j
        let mut columns = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut poly = vec![Rational::zero(); phi + j];
            for (i, c) in self.coeffs.iter().enumerate() {
                poly[i + j] = c.clone();
            }
            columns.push(reduce(self.order, poly));
        }
        let system: Vec<Vec<Rational>> = (0..phi)
            .map(|r| (0..phi).map(|c| columns[c][r].clone()).collect())
            .collect();
        let mut rhs = vec![Rational::zero(); phi];
        rhs[0] = Rational::one();
        let sol = solve_rational(system, rhs).ok_or_else(not_unit)?;
        Ok(CycloScalar {
            order: self.order,
            coeffs: sol,
        })
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// The image under `Q(zeta_m) -> Q(zeta_{m t})`, `zeta_m -> zeta_{m t}^t`.
    pub fn embed(&self, factor: u64) -> Result<Self> {
        if factor < 1 {
            return Err(Error::Domain("embedding factor must be >= 1".into()));
        }
        let t = factor as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * t] = c.clone();
        }
        Ok(Self::from_poly(self.order * factor, poly))
    }
}

/// `zeta_order^exponent`, exponent taken mod `order`.
pub fn cyclo_root(order: u64, exponent: i64) -> Result<CycloScalar> {
    if order < 1 {
        return Err(Error::Domain("cyclotomic order must be >= 1".into()));
    }
    let e = exponent.rem_euclid(order as i64) as usize;
    let mut poly = vec![Rational::zero(); e + 1];
    poly[e] = Rational::one();
    Ok(CycloScalar::from_poly(order, poly))
}

fn reduce(order: u64, mut poly: Vec<Rational>) -> Vec<Rational> {
    let phi_poly = cyclotomic_poly(order);
    let deg = phi_poly.len() - 1;
    for top in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[top]);
        if c.is_zero() {
            continue;
        }
        for (j, &p) in phi_poly[..deg].iter().enumerate() {
            if p != 0 {
                let idx = top - deg + j;
                poly[idx] = &poly[idx] - &(&c * &Rational::from_int(p));
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

/// Gaussian elimination over `Q`; `None` when the system is singular.
fn solve_rational(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inverse().ok()?;
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                }
                let t = &f * &b[col];
                b[r] = &b[r] - &t;
            }
        }
    }
    Some(b)
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                _ => format!("{c}*z{}^{i}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add<&CycloScalar> for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.check(rhs);
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&CycloScalar> for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.check(rhs);
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&CycloScalar> for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.check(rhs);
        let n = self.coeffs.len();
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        CycloScalar::from_poly(self.order, prod)
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> Self {
        -&self
    }
}
