//! Which sizes `n` admit `n` k-th roots of unity summing to zero.
//!
//! The answer is membership of `n` in the numerical semigroup generated by
//! the prime divisors of `k`. [`decide`] and [`decompose`] compute it by
//! dynamic programming; [`enumerate_zero_sums`] is a brute-force oracle that
//! searches multisets of exponents and checks their sums in `Q(zeta_k)`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{cyclo_root, Rational};

/// Default cap on the number of multisets the oracle may visit.
pub const DEFAULT_ORACLE_BOUND: u128 = 2_000_000;

/// Distinct prime divisors of `k`, ascending.
pub fn prime_divisors(mut k: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            primes.push(p);
            while k % p == 0 {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        primes.push(k);
    }
    primes
}

/// `n` together with the data showing whether and how it lies in
/// `N p_1 + ... + N p_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCertificate {
    pub k: u64,
    pub n: u64,
    pub primes: Vec<u64>,
    /// `c` with `sum c_i p_i = n`, lexicographically least; `None` if no such `c`.
    pub coefficients: Option<Vec<u64>>,
}

impl WeightCertificate {
    pub fn is_member(&self) -> bool {
        self.coefficients.is_some()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "n": self.n,
            "nonempty": self.is_member(),
            "primes": self.primes,
            "coefficients": self.coefficients,
        })
    }
}

/// `reach[i][t]`: `t` is a non-negative combination of `primes[i..]`.
fn suffix_reachability(primes: &[u64], n: usize) -> Vec<Vec<bool>> {
    let r = primes.len();
    let mut reach = vec![vec![false; n + 1]; r + 1];
    reach[r][0] = true;
    for i in (0..r).rev() {
        let p = primes[i] as usize;
        for t in 0..=n {
            reach[i][t] = reach[i + 1][t] || (t >= p && reach[i][t - p]);
        }
    }
    reach
}

pub fn decide(k: u64, n: u64) -> bool {
    decompose(k, n).is_member()
}

/// Lexicographically least coefficient vector over the ascending primes.
pub fn decompose(k: u64, n: u64) -> WeightCertificate {
    let primes = prime_divisors(k);
    let reach = suffix_reachability(&primes, n as usize);
    let coefficients = if k >= 2 && n >= 1 && reach[0][n as usize] {
        let mut rest = n as usize;
        let mut coeffs = Vec::with_capacity(primes.len());
        for (i, &p) in primes.iter().enumerate() {
            let p = p as usize;
            let c = (0..=rest / p)
                .find(|c| reach[i + 1][rest - c * p])
                .expect("reachable remainder");
            coeffs.push(c as u64);
            rest -= c * p;
        }
        debug_assert_eq!(rest, 0);
        Some(coeffs)
    } else {
        None
    };
    WeightCertificate {
        k,
        n,
        primes,
        coefficients,
    }
}

/// Exponents `e` (of `zeta_k^e`) whose roots sum to zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootMultiset {
    pub k: u64,
    pub exponents: Vec<u64>,
}

impl RootMultiset {
    /// Exact check of the defining zero-sum property in `Q(zeta_k)`.
    pub fn sums_to_zero(&self) -> bool {
        let mut acc = crate::exact::CycloScalar::zero(self.k);
        for &e in &self.exponents {
            acc = &acc + &cyclo_root(self.k, e as i64).expect("k >= 1");
        }
        acc.is_zero()
    }
}

/// For each prime `p_i`, `c_i` blocks of the full set of `p_i`-th roots,
/// written as k-th roots `(k / p_i) j`.
pub fn build_root_multiset(cert: &WeightCertificate) -> Result<RootMultiset> {
    let coeffs = cert.coefficients.as_ref().ok_or(Error::NotInWeightSet {
        k: cert.k,
        n: cert.n,
    })?;
    let mut exponents = Vec::with_capacity(cert.n as usize);
    for (&p, &c) in cert.primes.iter().zip(coeffs) {
        for _ in 0..c {
            exponents.extend((0..p).map(|j| (cert.k / p) * j));
        }
    }
    let ms = RootMultiset { k: cert.k, exponents };
    if !ms.sums_to_zero() {
        return Err(Error::InternalConsistency(format!("root multiset {ms:?} does not vanish")));
    }
    Ok(ms)
}

fn binomial(n: u128, r: u128) -> u128 {
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn enumerate_zero_sums(k: u64, n: u64, limit: usize) -> Result<Vec<RootMultiset>> {
    enumerate_zero_sums_bounded(k, n, limit, DEFAULT_ORACLE_BOUND)
}

/// Depth-first search over nondecreasing exponent sequences, keeping the
/// running sum as a power-basis coordinate vector.
pub fn enumerate_zero_sums_bounded(k: u64, n: u64, limit: usize, bound: u128) -> Result<Vec<RootMultiset>> {
    if k < 1 {
        return Err(Error::Domain("k must be >= 1".into()));
    }
    let size = binomial(n as u128 + k as u128 - 1, n as u128);
    if size > bound {
        return Err(Error::OracleTooLarge { size, bound });
    }
    // Coordinates of zeta_k^e are integers, so the search runs in i64.
    let roots: Vec<Vec<i64>> = (0..k)
        .map(|e| {
            cyclo_root(k, e as i64)
                .expect("k >= 1")
                .coeffs()
                .iter()
                .map(rational_to_i64)
                .collect()
        })
        .collect();
    let phi = roots[0].len();
    let mut found = Vec::new();
    let mut stack = Vec::with_capacity(n as usize);
    let mut sum = vec![0i64; phi];
    search(&roots, n as usize, 0, &mut stack, &mut sum, limit, &mut found);
    let mut out: Vec<RootMultiset> = found
        .into_iter()
        .map(|exponents| RootMultiset { k, exponents })
        .collect();
    out.sort();
    Ok(out)
}

fn rational_to_i64(r: &Rational) -> i64 {
    assert!(r.is_integer());
    i64::try_from(r.numer()).expect("small root coordinate")
}

fn search(
    roots: &[Vec<i64>],
    remaining: usize,
    min_exp: usize,
    stack: &mut Vec<u64>,
    sum: &mut [i64],
    limit: usize,
    found: &mut Vec<Vec<u64>>,
) {
    if found.len() >= limit {
        return;
    }
    if remaining == 0 {
        if sum.iter().all(|&c| c == 0) {
            found.push(stack.clone());
        }
        return;
    }
    for e in min_exp..roots.len() {
        for (s, r) in sum.iter_mut().zip(&roots[e]) {
            *s += r;
        }
        stack.push(e as u64);
        search(roots, remaining - 1, e, stack, sum, limit, found);
        stack.pop();
        for (s, r) in sum.iter_mut().zip(&roots[e]) {
            *s -= r;
        }
        if found.len() >= limit {
            return;
        }
    }
}
