//! Exact arithmetic in the rationals, the cyclotomic fields `Q(zeta_n)`, and
//! prime fields `F_p` with `p = 1 (mod n)`.
//!
//! A [`Cyclotomic`] is stored in the power basis `1, zeta, ..., zeta^(phi(n)-1)`
//! modulo the n-th cyclotomic polynomial and is always kept fully reduced, so
//! equality is structural and zero-testing is exact.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::{Error, Result};

/// Exact rational scalar; always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Convenience constructor for small integer rationals.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num/den` as an exact rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u32) -> u32 {
    let mut m = n as u64;
    let mut result = m;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as u32
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Least common multiple.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (coefficients low-to-high).
// ---------------------------------------------------------------------------

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer polynomials by a monic divisor; panics if the
/// division leaves a remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    if rem.len() <= dn {
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        return vec![BigInt::zero()];
    }
    let qlen = rem.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    poly_trim(&mut quot);
    quot
}

/// The n-th cyclotomic polynomial, coefficients low-to-high (monic, integer),
/// computed by iterated exact division of `x^n - 1` by the `Phi_d` for the
/// proper divisors `d` of `n`.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for d in divisors(n) {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        for e in divisors(d) {
            if e < d {
                p = poly_div_exact(&p, &memo[&e]);
            }
        }
        memo.insert(d, p);
    }
    memo.remove(&n).unwrap()
}

// ---------------------------------------------------------------------------
// Per-conductor reduction tables, cached globally.
// ---------------------------------------------------------------------------

struct CondTable {
    phi: usize,
    /// `power_rep[j]` = coordinates of `zeta^j` in the power basis, for
    /// `j` in `0..max(n, 2*phi - 1)`. Integral because `Phi_n` is monic.
    power_rep: Vec<Vec<BigInt>>,
    /// `Phi_n` with rational coefficients, for inversion via extended gcd.
    modulus: Vec<Rational>,
}

static TABLES: Lazy<RwLock<HashMap<u32, Arc<CondTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn table(n: u32) -> Arc<CondTable> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(t) = TABLES.read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let phi_poly = cyclotomic_poly(n);
    let phi = phi_poly.len() - 1;
    let max_pow = std::cmp::max(n as usize, 2 * phi.max(1));
    let mut power_rep: Vec<Vec<BigInt>> = Vec::with_capacity(max_pow);
    for j in 0..max_pow {
        if j < phi {
            let mut e = vec![BigInt::zero(); phi];
            e[j] = BigInt::one();
            power_rep.push(e);
        } else {
            // zeta^j = zeta * zeta^(j-1); the overflow term zeta^phi rewrites
            // as -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}).
            let prev = &power_rep[j - 1];
            let mut next = vec![BigInt::zero(); phi];
            for i in 0..phi - 1 {
                next[i + 1] = prev[i].clone();
            }
            let head = prev[phi - 1].clone();
            if !head.is_zero() {
                for i in 0..phi {
                    next[i] -= &head * &phi_poly[i];
                }
            }
            power_rep.push(next);
        }
    }
    let modulus: Vec<Rational> = phi_poly
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    let entry = Arc::new(CondTable {
        phi,
        power_rep,
        modulus,
    });
    TABLES
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&entry));
    entry
}

// ---------------------------------------------------------------------------
// Cyclotomic numbers.
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_n)` in the reduced power basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let phi = table(n).phi;
        Cyclotomic {
            conductor: n,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = r;
        c
    }

    pub fn from_integer(n: u32, v: i64) -> Self {
        Self::from_rational(n, rat(v))
    }

    /// Build from raw power-basis coordinates of length `phi(n)`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), table(n).phi, "coefficient vector length");
        Cyclotomic {
            conductor: n,
            coeffs,
        }
    }

    /// `zeta_n^e`, reduced to canonical form; `e` may be any integer.
    pub fn root_of_unity(n: u32, e: i64) -> Self {
        let t = table(n);
        let e = e.rem_euclid(n as i64) as usize;
        let coeffs = t.power_rep[e]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Cyclotomic {
            conductor: n,
            coeffs,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }

    /// The value as a rational if it lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer if it is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|b| b.to_i64())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let t = table(self.conductor);
        let phi = t.phi;
        // Raw convolution, degree <= 2*phi - 2.
        let mut conv = vec![Rational::zero(); 2 * phi.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut out = vec![Rational::zero(); phi];
        for (j, c) in conv.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < phi {
                out[j] += c;
            } else {
                for (i, r) in t.power_rep[j].iter().enumerate() {
                    if !r.is_zero() {
                        out[i] += c * Rational::from_integer(r.clone());
                    }
                }
            }
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: out,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via extended gcd with `Phi_n`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.conductor));
        }
        let t = table(self.conductor);
        // Extended Euclid over Q[x]: u * self + v * Phi = gcd (a constant).
        let a: Vec<Rational> = self.coeffs.clone();
        let (g, u) = poly_egcd(&a, &t.modulus);
        // gcd must be a nonzero constant since Phi_n is irreducible.
        assert_eq!(g.len(), 1, "gcd with irreducible modulus must be constant");
        let ginv = g[0].recip();
        let mut coeffs = vec![Rational::zero(); t.phi];
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            debug_assert!(i < t.phi, "Bezout coefficient exceeds basis degree");
            coeffs[i] = c * &ginv;
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// The Galois automorphism `zeta -> zeta^(-1)` (complex conjugation).
    pub fn conjugate(&self) -> Self {
        self.galois(self.conductor as i64 - 1)
    }

    /// The Galois map `zeta -> zeta^k`; `k` must be coprime to the conductor
    /// for this to be an automorphism, but any exponent gives a well-defined
    /// substitution on reduced representatives.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let t = table(n);
        let mut out = vec![Rational::zero(); t.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = ((i as i64) * k).rem_euclid(n as i64) as usize;
            for (j, r) in t.power_rep[e].iter().enumerate() {
                if !r.is_zero() {
                    out[j] += a * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: out,
        }
    }

    /// Re-embed into `Q(zeta_m)` for a conductor `m` divisible by the current
    /// one, via `zeta_n -> zeta_m^(m/n)`.
    pub fn promote(&self, m: u32) -> Result<Self> {
        if m == self.conductor {
            return Ok(self.clone());
        }
        if m % self.conductor != 0 {
            return Err(Error::BadPromotion {
                from: self.conductor,
                to: m,
            });
        }
        let step = (m / self.conductor) as i64;
        let t = table(m);
        let mut out = vec![Rational::zero(); t.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = ((i as i64) * step).rem_euclid(m as i64) as usize;
            for (j, r) in t.power_rep[e].iter().enumerate() {
                if !r.is_zero() {
                    out[j] += a * Rational::from_integer(r.clone());
                }
            }
        }
        Ok(Cyclotomic {
            conductor: m,
            coeffs: out,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Extended gcd of polynomials over Q. Returns `(g, u)` with
/// `u*a + v*b = g` for some `v`; `g` is not normalized.
fn poly_egcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    fn deg(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem_div(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let dd = deg(den).expect("division by zero polynomial");
        let lead = den[dd].clone();
        let mut rem = num.to_vec();
        let mut quot = vec![Rational::zero(); num.len().saturating_sub(dd).max(1)];
        loop {
            let dn = match deg(&rem) {
                Some(d) if d >= dd => d,
                _ => break,
            };
            let c = &rem[dn] / &lead;
            quot[dn - dd] = c.clone();
            for i in 0..=dd {
                let t = &c * &den[i];
                rem[dn - dd + i] -= t;
            }
        }
        (quot, rem)
    }

    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut u0 = vec![Rational::one()];
    let mut u1 = vec![Rational::zero()];
    while deg(&r1).is_some() {
        let (q, r) = rem_div(&r0, &r1);
        // u2 = u0 - q*u1
        let mut u2 = u0.clone();
        let qd = deg(&q).unwrap_or(0);
        let ud = deg(&u1).unwrap_or(0);
        if u2.len() < qd + ud + 2 {
            u2.resize(qd + ud + 2, Rational::zero());
        }
        for (i, qc) in q.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            for (j, uc) in u1.iter().enumerate() {
                if uc.is_zero() {
                    continue;
                }
                let t = qc * uc;
                u2[i + j] -= t;
            }
        }
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    let d = deg(&r0).unwrap_or(0);
    r0.truncate(d + 1);
    (r0, u0)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$try(rhs).expect("conductor mismatch")
            }
        }
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$try(&rhs).expect("conductor mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Printing and parsing in the z-polynomial syntax, e.g. "1/2*z^3 - 1".
// ---------------------------------------------------------------------------

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({}; {})", self.conductor, self)
    }
}

/// Parse the z-polynomial syntax produced by `Display`, at conductor `n`.
/// Accepts forms like `0`, `-1`, `2/3`, `z`, `-z^2`, `1/2*z^3 - z + 7`.
pub fn parse_cyclotomic(n: u32, s: &str) -> Result<Cyclotomic> {
    let err = |msg: &str| Error::Parse {
        line: 0,
        msg: format!("bad cyclotomic literal {s:?}: {msg}"),
    };
    let mut out = Cyclotomic::zero(n);
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty"));
    }
    // Split into signed terms.
    let mut terms: Vec<(i32, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = 1i32;
    let mut started = false;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && started {
            terms.push((sign, cur.clone()));
            cur.clear();
            sign = if ch == '-' { -1 } else { 1 };
        } else if ch == '-' && !started {
            sign = -1;
            started = true;
        } else if ch == '+' && !started {
            started = true;
        } else {
            cur.push(ch);
            started = true;
        }
    }
    terms.push((sign, cur));
    for (sgn, term) in terms {
        if term.is_empty() {
            return Err(err("empty term"));
        }
        let (coeff_str, pow) = if let Some(idx) = term.find('z') {
            let c = &term[..idx];
            let rest = &term[idx + 1..];
            let pow: usize = if rest.is_empty() {
                1
            } else if let Some(e) = rest.strip_prefix('^') {
                e.parse().map_err(|_| err("bad exponent"))?
            } else {
                return Err(err("expected ^ after z"));
            };
            let c = c.strip_suffix('*').unwrap_or(c);
            (if c.is_empty() { "1" } else { c }.to_string(), pow)
        } else {
            (term.clone(), 0)
        };
        let coeff: Rational = if let Some((num, den)) = coeff_str.split_once('/') {
            let n_: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
            let d_: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
            if d_.is_zero() {
                return Err(err("zero denominator"));
            }
            Rational::new(n_, d_)
        } else {
            let n_: BigInt = coeff_str.parse().map_err(|_| err("bad coefficient"))?;
            Rational::from_integer(n_)
        };
        let coeff = if sgn < 0 { -coeff } else { coeff };
        let term_val = Cyclotomic::root_of_unity(n, pow as i64).scale(&coeff);
        out = &out + &term_val;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Prime fields for the finite-field character method.
// ---------------------------------------------------------------------------

/// The field `F_p` for a prime `p`; elements are `u64` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime_u64(p));
        PrimeField { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inversion of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// A fixed primitive n-th root of unity: `c^((p-1)/n)` for the smallest
    /// witness `c` that yields an element of exact order `n`.
    pub fn nth_root_of_unity(&self, n: u64) -> u64 {
        assert!(
            (self.p - 1) % n == 0,
            "no n-th roots: p = {} is not 1 mod {}",
            self.p,
            n
        );
        'outer: for c in 2..self.p {
            let w = self.pow(c, (self.p - 1) / n);
            if w == 1 && n > 1 {
                continue;
            }
            // Exact order n: w^(n/q) != 1 for every prime q | n.
            let mut m = n;
            let mut q = 2;
            while q * q <= m {
                if m % q == 0 {
                    if self.pow(w, n / q) == 1 {
                        continue 'outer;
                    }
                    while m % q == 0 {
                        m /= q;
                    }
                }
                q += 1;
            }
            if m > 1 && self.pow(w, n / m) == 1 {
                continue;
            }
            return w;
        }
        unreachable!("primitive root search failed");
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least prime `p = 1 (mod n)` with `p > lower`.
pub fn find_prime(n: u64, lower: u64) -> u64 {
    let mut p = (lower / n) * n + 1;
    while p <= lower {
        p += n;
    }
    loop {
        if is_prime_u64(p) {
            return p;
        }
        p += n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cyclotomic_polys_small() {
        assert_eq!(cyclotomic_poly(1), vec![big(-1), big(1)]);
        assert_eq!(cyclotomic_poly(2), vec![big(1), big(1)]);
        // Phi_6 = x^2 - x + 1, by dividing x^6-1 by Phi_1 Phi_2 Phi_3.
        assert_eq!(cyclotomic_poly(6), vec![big(1), big(-1), big(1)]);
        assert_eq!(cyclotomic_poly(4), vec![big(1), big(0), big(1)]);
        assert_eq!(cyclotomic_poly(3), vec![big(1), big(1), big(1)]);
        assert_eq!(
            cyclotomic_poly(12),
            vec![big(1), big(0), big(-1), big(0), big(1)]
        );
    }

    #[test]
    fn roots_of_unity_reduce() {
        // zeta_4^2 = -1.
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_integer(4, -1));
        // (2,0) -> 1, (2,1) -> -1.
        assert!(Cyclotomic::root_of_unity(2, 0).is_one());
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_integer(2, -1));
        // (4,3) = -zeta_4.
        assert_eq!(Cyclotomic::root_of_unity(4, 3), -&i);
        // zeta^n = 1 for all e.
        for n in 1..=12u32 {
            for e in 0..n as i64 {
                assert!(Cyclotomic::root_of_unity(n, e).pow(n as u64).is_one());
            }
        }
    }

    #[test]
    fn product_of_conjugate_pair_is_one() {
        // (1 + zeta_3)(1 + zeta_3^2) = 1.
        let a = &Cyclotomic::one(3) + &Cyclotomic::root_of_unity(3, 1);
        let b = &Cyclotomic::one(3) + &Cyclotomic::root_of_unity(3, 2);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn inverse_of_root_is_opposite_power() {
        for n in [2u32, 3, 4, 5, 6, 8, 12] {
            let z = Cyclotomic::root_of_unity(n, 1);
            assert_eq!(z.inv().unwrap(), Cyclotomic::root_of_unity(n, n as i64 - 1));
        }
    }

    #[test]
    fn as_integer_examples() {
        assert_eq!(Cyclotomic::from_integer(5, 3).as_i64(), Some(3));
        assert_eq!(Cyclotomic::root_of_unity(3, 1).as_integer(), None);
        // zeta_3 + zeta_3^2 = -1.
        let s = &Cyclotomic::root_of_unity(3, 1) + &Cyclotomic::root_of_unity(3, 2);
        assert_eq!(s.as_i64(), Some(-1));
    }

    #[test]
    fn conjugation_examples() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.conjugate(), -&i);
        let r = Cyclotomic::from_rational(6, ratio(7, 3));
        assert_eq!(r.conjugate(), r);
        let a = &Cyclotomic::one(3) + &Cyclotomic::root_of_unity(3, 1);
        let b = &Cyclotomic::one(3) + &Cyclotomic::root_of_unity(3, 2);
        assert_eq!(a.conjugate(), b);
    }

    #[test]
    fn conjugation_is_involutive_automorphism() {
        for n in [3u32, 4, 5, 8, 12] {
            for e in 0..n as i64 {
                let z = Cyclotomic::root_of_unity(n, e);
                assert_eq!(z.conjugate().conjugate(), z);
            }
            let a = &Cyclotomic::root_of_unity(n, 1) + &Cyclotomic::from_integer(n, 2);
            let b = &Cyclotomic::root_of_unity(n, (n - 1) as i64) - &Cyclotomic::one(n);
            assert_eq!(
                (&a * &b).conjugate(),
                &a.conjugate() * &b.conjugate()
            );
            assert_eq!(
                (&a + &b).conjugate(),
                &a.conjugate() + &b.conjugate()
            );
        }
    }

    #[test]
    fn promotion_embeds_fields() {
        let m1 = Cyclotomic::root_of_unity(3, 1).promote(12).unwrap();
        assert_eq!(m1, Cyclotomic::root_of_unity(12, 4));
        let r = Cyclotomic::from_rational(1, ratio(5, 2)).promote(8).unwrap();
        assert_eq!(r.as_rational(), Some(ratio(5, 2)));
        assert!(Cyclotomic::root_of_unity(8, 1).promote(12).is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let v = &Cyclotomic::root_of_unity(12, 3).scale(&ratio(1, 2))
            - &Cyclotomic::one(12);
        assert_eq!(v.to_string(), "1/2*z^3 - 1");
        assert_eq!(parse_cyclotomic(12, &v.to_string()).unwrap(), v);
        for s in ["0", "-1", "z", "-z^2", "2/3", "z^3 + z - 7", "-3/2*z + 1/5"] {
            let p = parse_cyclotomic(12, s).unwrap();
            let q = parse_cyclotomic(12, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
        assert!(parse_cyclotomic(4, "z^^2").is_err());
        assert!(parse_cyclotomic(4, "").is_err());
    }

    #[test]
    fn prime_field_basics() {
        assert_eq!(find_prime(6, 12), 13);
        assert_eq!(find_prime(4, 16), 17);
        let f = PrimeField::new(13);
        let w = f.nth_root_of_unity(6);
        assert_eq!(f.pow(w, 6), 1);
        assert_ne!(f.pow(w, 3), 1);
        assert_ne!(f.pow(w, 2), 1);
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    proptest! {
        #[test]
        fn field_axioms_hold(
            a0 in -6i64..6, a1 in -6i64..6, b0 in -6i64..6, b1 in -6i64..6,
            c0 in -6i64..6, c1 in -6i64..6,
        ) {
            let n = 12u32;
            let mk = |x: i64, y: i64| {
                &Cyclotomic::from_integer(n, x)
                    + &Cyclotomic::root_of_unity(n, 5).scale(&rat(y))
            };
            let a = mk(a0, a1);
            let b = mk(b0, b1);
            let c = mk(c0, c1);
            // Associativity and distributivity.
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // Multiplicative inverses.
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            // Integer embedding round-trip.
            prop_assert_eq!(Cyclotomic::from_integer(n, a0).as_i64(), Some(a0));
        }
    }
}
