//! Finite fields `F_{p^k}` of odd characteristic.
//!
//! Fields are runtime values: a [`FieldSpec`] fixes the prime `p`, the
//! extension degree `k`, and a monic irreducible modulus of degree `k` over
//! `F_p`; elements are coefficient vectors in the polynomial basis of that
//! modulus. When no modulus is supplied the constructor scans coefficient
//! vectors in lexicographic order (constant term most significant) and takes
//! the first monic irreducible, so two runs always agree on the
//! representation — for example `F_49` is always built as `F_7[s]/(s^2 + 1)`.
//!
//! Everything is sized for "desk scale" (the orders that exhaustive point
//! counting can reach): `p` fits in 32 bits and `p^k` in 63, which keeps all
//! scalar arithmetic in `u64`/`u128` with no allocation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::traits::FieldElement;

/// Largest field order accepted for exhaustive element enumeration
/// (point counts, root scans). Larger fields must go through the
/// factorization-based routines.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

// ---------------------------------------------------------------------------
// Scalar arithmetic mod p
// ---------------------------------------------------------------------------

#[inline]
fn add_p(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_p(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mul_p(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_p(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_p(acc, base, p);
        }
        base = mul_p(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod the prime `p` by Fermat; callers guarantee `a != 0`.
fn inv_p(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_p(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p (private; used only to validate and choose
// moduli, before any Fq exists)
// ---------------------------------------------------------------------------

type Zp = Vec<u64>; // ascending coefficients, no trailing zeros

fn zp_trim(mut v: Zp) -> Zp {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn zp_mul(a: &[u64], b: &[u64], p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = add_p(out[i + j], mul_p(ai, bj, p), p);
        }
    }
    zp_trim(out)
}

fn zp_rem(a: &[u64], m: &[u64], p: u64) -> Zp {
    let mut r: Zp = zp_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_p(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = mul_p(r[dr], lead_inv, p);
        for (j, &mj) in m.iter().enumerate() {
            r[dr - dm + j] = sub_p(r[dr - dm + j], mul_p(c, mj, p), p);
        }
        r = zp_trim(r);
    }
    r
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Zp {
    let mut a = zp_trim(a.to_vec());
    let mut b = zp_trim(b.to_vec());
    while !b.is_empty() {
        let r = zp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = inv_p(lead, p);
        for c in &mut a {
            *c = mul_p(*c, li, p);
        }
    }
    a
}

fn zp_powmod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Zp {
    let mut acc = vec![1u64];
    let mut base = zp_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = zp_rem(&zp_mul(&acc, &base, p), m, p);
        }
        base = zp_rem(&zp_mul(&base, &base, p), m, p);
        exp >>= 1;
    }
    acc
}

/// `x^(p^e) mod m` by iterated p-th powering.
fn zp_frobenius(e: usize, m: &[u64], p: u64) -> Zp {
    let mut t = zp_rem(&[0, 1], m, p);
    for _ in 0..e {
        t = zp_powmod(&t, p, m, p);
    }
    t
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility of a monic degree-`k` polynomial over `F_p`:
/// `x^(p^k) = x mod g`, and `gcd(x^(p^(k/l)) - x, g) = 1` for every prime
/// `l | k`.
fn zp_is_irreducible(g: &[u64], p: u64) -> bool {
    let k = g.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let xqk = zp_frobenius(k, g, p);
    if zp_trim(xqk) != vec![0, 1] {
        return false;
    }
    for l in prime_divisors(k) {
        let t = zp_frobenius(k / l, g, p);
        // t - x
        let mut diff = t;
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = sub_p(diff[1], 1, p);
        let diff = zp_trim(diff);
        if zp_gcd(&diff, g, p).len() != 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

/// Description of a concrete finite field `F_{p^k}`.
///
/// Construct with [`FieldSpec::new`] (or [`FieldSpec::prime`] for `k = 1`)
/// and share via `Arc`: elements hold a reference to their spec, and binary
/// operations insist that both operands point at equal specs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic irreducible of degree `k` over `F_p`, ascending coefficients,
    /// length `k + 1`.
    modulus: Vec<u64>,
    /// `p^k`, kept < 2^63 by construction.
    q: u64,
}

impl FieldSpec {
    /// Build `F_{p^k}`. `modulus`, when given, must be a monic irreducible
    /// of degree `k` over `F_p` with ascending coefficients; when absent, the
    /// first irreducible in lexicographic coefficient order is chosen.
    pub fn new(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Arc<Self>> {
        if p % 2 == 0 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ReducibleModulus("degree 0 requested".into()));
        }
        if p >= 1 << 32 {
            return Err(Error::FieldTooLarge(p as u128, 1 << 32));
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q
                .checked_mul(p)
                .filter(|&v| v < 1 << 63)
                .ok_or(Error::FieldTooLarge(0, 1 << 63))?;
        }
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m.len() != k + 1 || m[k] != 1 {
                    return Err(Error::ReducibleModulus(format!(
                        "expected a monic polynomial of degree {k}"
                    )));
                }
                if !zp_is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(format!(
                        "polynomial {} is reducible over F_{}",
                        fmt_zp(&m),
                        p
                    )));
                }
                m
            }
            None => default_modulus(p, k),
        };
        Ok(Arc::new(FieldSpec { p, k, modulus, q }))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Self>> {
        Self::new(p, 1, None)
    }

    /// Characteristic `p`.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Extension degree `k` over the prime field.
    pub fn degree(&self) -> usize {
        self.k
    }

    /// Field order `q = p^k`.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// The defining modulus, ascending coefficients, length `k + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Zero of this field.
    pub fn zero(self: &Arc<Self>) -> Fq {
        Fq {
            field: Arc::clone(self),
            coeffs: vec![0; self.k],
        }
    }

    /// One of this field.
    pub fn one(self: &Arc<Self>) -> Fq {
        self.from_int(1)
    }

    /// Image of the integer `n` (the prime subfield is hit exactly).
    pub fn from_int(self: &Arc<Self>, n: i64) -> Fq {
        let mut coeffs = vec![0; self.k];
        coeffs[0] = n.rem_euclid(self.p as i64) as u64;
        Fq {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// The class of the modulus variable (only meaningful for `k >= 2`;
    /// returns zero's successor basis vector otherwise).
    pub fn generator(self: &Arc<Self>) -> Fq {
        let mut coeffs = vec![0; self.k];
        if self.k >= 2 {
            coeffs[1] = 1;
        } else {
            coeffs[0] = 0;
        }
        Fq {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Element from an explicit coefficient vector (ascending powers of the
    /// generator; shorter vectors are zero-padded, entries reduced mod p).
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<Fq> {
        if coeffs.len() > self.k {
            return Err(Error::Parse(format!(
                "element has {} coefficients but the field has degree {}",
                coeffs.len(),
                self.k
            )));
        }
        let mut full = vec![0; self.k];
        for (i, &c) in coeffs.iter().enumerate() {
            full[i] = c % self.p;
        }
        Ok(Fq {
            field: Arc::clone(self),
            coeffs: full,
        })
    }

    /// All `q` field elements in lexicographic coefficient order
    /// (constant coefficient most significant).
    ///
    /// Errors with [`Error::FieldTooLarge`] above [`ENUMERATION_LIMIT`].
    pub fn elements(self: &Arc<Self>) -> Result<impl Iterator<Item = Fq> + '_> {
        if self.q > ENUMERATION_LIMIT {
            return Err(Error::FieldTooLarge(
                self.q as u128,
                ENUMERATION_LIMIT as u128,
            ));
        }
        let spec = Arc::clone(self);
        Ok((0..self.q).map(move |i| {
            let mut coeffs = vec![0u64; spec.k];
            let mut rest = i;
            for j in (0..spec.k).rev() {
                coeffs[j] = rest % spec.p;
                rest /= spec.p;
            }
            Fq {
                field: Arc::clone(&spec),
                coeffs,
            }
        }))
    }

    /// First non-square in the element ordering (deterministic).
    pub fn first_non_square(self: &Arc<Self>) -> Result<Fq> {
        for a in self.elements()? {
            if quadratic_character(&a) == -1 {
                return Ok(a);
            }
        }
        unreachable!("an odd-order field always has non-squares")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{{{}^{}}}", self.p, self.k)
        }
    }
}

/// Self-delimiting element text: plain integer in a prime field,
/// parenthesized coordinate vector `(c0,c1,...)` in an extension. This is
/// the format curve specifications and reports use.
pub fn element_text(e: &Fq) -> String {
    if e.spec().degree() == 1 {
        e.to_string()
    } else {
        format!("({e})")
    }
}

fn fmt_zp(m: &[u64]) -> String {
    let terms: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match i {
            0 => format!("{c}"),
            1 if c == 1 => "s".into(),
            1 => format!("{c}*s"),
            _ if c == 1 => format!("s^{i}"),
            _ => format!("{c}*s^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// First monic irreducible of degree `k` over `F_p` in lexicographic order of
/// `(c_0, ..., c_{k-1})`.
fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x itself
    }
    let mut c = vec![0u64; k];
    loop {
        let mut g = c.clone();
        g.push(1);
        if zp_is_irreducible(&g, p) {
            return g;
        }
        // increment (c_0, ..., c_{k-1}) lexicographically: last digit fastest
        let mut j = k;
        loop {
            debug_assert!(j > 0, "no irreducible of degree {k} over F_{p}?");
            j -= 1;
            c[j] += 1;
            if c[j] < p {
                break;
            }
            c[j] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Fq
// ---------------------------------------------------------------------------

/// An element of a [`FieldSpec`] field, as a coefficient vector of length `k`
/// in the polynomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    field: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

impl Fq {
    /// The field this element belongs to.
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// Coefficient vector, ascending powers of the generator, length `k`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Key for deterministic orderings: the coefficient vector compared
    /// lexicographically (constant coefficient first), matching the
    /// enumeration order of [`FieldSpec::elements`].
    pub fn order_key(&self) -> &[u64] {
        &self.coeffs
    }

    /// `self^exp` by square-and-multiply.
    pub fn pow(&self, mut exp: u128) -> Fq {
        let mut acc = self.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// When the element lies in the prime subfield, its integer value.
    pub fn as_prime_int(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_field(&self, rhs: &Fq) {
        assert!(
            self.field == rhs.field,
            "field mismatch: {} vs {}",
            self.field,
            rhs.field
        );
    }

    /// Parse the element text format: an integer (value in the prime
    /// subfield, negatives allowed) or a coefficient vector `c0,c1,...`,
    /// optionally parenthesized `(c0,c1,...)`.
    pub fn parse(field: &Arc<FieldSpec>, text: &str) -> Result<Fq> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() == 1 {
            let v: i64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field element {t:?}")))?;
            return Ok(field.from_int(v));
        }
        if parts.len() > field.degree() {
            return Err(Error::Parse(format!(
                "element {:?} has {} coefficients but the field has degree {}",
                t,
                parts.len(),
                field.degree()
            )));
        }
        let mut coeffs = vec![0u64; field.degree()];
        for (i, part) in parts.iter().enumerate() {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {part:?} in {t:?}")))?;
            coeffs[i] = v.rem_euclid(field.characteristic() as i64) as u64;
        }
        field.element(&coeffs)
    }
}

impl FieldElement for Fq {
    fn zero(&self) -> Self {
        self.field.zero()
    }

    fn one(&self) -> Self {
        self.field.one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| add_p(a, b, p))
            .collect();
        Fq {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| sub_p(a, b, p))
            .collect();
        Fq {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    fn neg(&self) -> Self {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().map(|&a| sub_p(0, a, p)).collect();
        Fq {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let p = self.field.p;
        let k = self.field.k;
        if k == 1 {
            return Fq {
                field: Arc::clone(&self.field),
                coeffs: vec![mul_p(self.coeffs[0], rhs.coeffs[0], p)],
            };
        }
        // schoolbook product then reduction by the monic modulus
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = add_p(prod[i + j], mul_p(a, b, p), p);
            }
        }
        let m = &self.field.modulus;
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, &mj) in m.iter().enumerate().take(k) {
                prod[d - k + j] = sub_p(prod[d - k + j], mul_p(c, mj, p), p);
            }
        }
        prod.truncate(k);
        Fq {
            field: Arc::clone(&self.field),
            coeffs: prod,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.field.p;
        if self.field.k == 1 {
            return Some(Fq {
                field: Arc::clone(&self.field),
                coeffs: vec![inv_p(self.coeffs[0], p)],
            });
        }
        // extended Euclid over F_p: s * self + t * modulus = 1
        let mut r0: Zp = self.field.modulus.clone();
        let mut r1: Zp = zp_trim(self.coeffs.clone());
        let mut s0: Zp = Vec::new();
        let mut s1: Zp = vec![1];
        while !r1.is_empty() {
            // r0 = q * r1 + r2
            let mut r2 = r0.clone();
            let mut q: Zp = vec![0; r2.len().saturating_sub(r1.len()) + 1];
            let lead_inv = inv_p(*r1.last().unwrap(), p);
            while r2.len() >= r1.len() && !r2.is_empty() {
                let shift = r2.len() - r1.len();
                let c = mul_p(*r2.last().unwrap(), lead_inv, p);
                q[shift] = add_p(q[shift], c, p);
                for (j, &bj) in r1.iter().enumerate() {
                    r2[shift + j] = sub_p(r2[shift + j], mul_p(c, bj, p), p);
                }
                r2 = zp_trim(r2);
            }
            let qs1 = zp_mul(&zp_trim(q), &s1, p);
            let mut s2 = s0.clone();
            s2.resize(s2.len().max(qs1.len()), 0);
            for (j, &c) in qs1.iter().enumerate() {
                s2[j] = sub_p(s2[j], c, p);
            }
            let s2 = zp_trim(s2);
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a unit scalar gcd (elements prime to the irreducible modulus)
        debug_assert_eq!(r0.len(), 1);
        let scale = inv_p(r0[0], p);
        let mut coeffs = vec![0u64; self.field.k];
        for (j, &c) in s0.iter().enumerate() {
            coeffs[j] = mul_p(c, scale, p);
        }
        Some(Fq {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    fn from_int(&self, n: i64) -> Self {
        self.field.from_int(n)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

// ---------------------------------------------------------------------------
// Checked operations and the quadratic character
// ---------------------------------------------------------------------------

/// Binary operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic for values of possibly untrusted origin:
/// reports [`Error::FieldMismatch`] and [`Error::DivisionByZero`] instead of
/// panicking.
pub fn field_arith(op: BinOp, a: &Fq, b: &Fq) -> Result<Fq> {
    if a.spec() != b.spec() {
        return Err(Error::FieldMismatch(
            a.spec().to_string(),
            b.spec().to_string(),
        ));
    }
    match op {
        BinOp::Add => Ok(a.add(b)),
        BinOp::Sub => Ok(a.sub(b)),
        BinOp::Mul => Ok(a.mul(b)),
        BinOp::Div => a.div(b).ok_or(Error::DivisionByZero),
    }
}

/// Quadratic character by Euler's criterion: `0` at zero, `+1` on nonzero
/// squares, `-1` on non-squares.
pub fn quadratic_character(a: &Fq) -> i8 {
    if a.is_zero() {
        return 0;
    }
    let e = (a.spec().order() - 1) / 2;
    if a.pow(e as u128).is_one() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Arc<FieldSpec> {
        FieldSpec::prime(7).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_characteristics() {
        assert_eq!(FieldSpec::prime(2).unwrap_err(), Error::EvenCharacteristic);
        assert_eq!(FieldSpec::prime(4).unwrap_err(), Error::EvenCharacteristic);
        assert_eq!(FieldSpec::prime(9).unwrap_err(), Error::NotPrime(9));
        assert_eq!(FieldSpec::prime(1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn constructor_rejects_reducible_modulus() {
        // s^2 - 1 = (s-1)(s+1)
        let err = FieldSpec::new(7, 2, Some(vec![6, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_)));
        // wrong degree
        let err = FieldSpec::new(7, 2, Some(vec![1, 1])).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_)));
        // accepted: s^2 + 1 is irreducible over F_7 (squares mod 7 are 1,2,4)
        let f49 = FieldSpec::new(7, 2, Some(vec![1, 0, 1])).unwrap();
        assert_eq!(f49.order(), 49);
    }

    #[test]
    fn default_modulus_is_lexicographically_first() {
        // Over F_7 every s^2 + c1*s is divisible by s, so the scan must land
        // on s^2 + 1.
        let f49 = FieldSpec::new(7, 2, None).unwrap();
        assert_eq!(f49.modulus(), &[1, 0, 1]);
        // F_9: s^2 + 1 works over F_3 as well (-1 is not a square mod 3).
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // F_25: -1 IS a square mod 5 (2^2 = 4 = -1), so s^2 + 1 is reducible;
        // the scan continues to s^2 + s + 1 (discriminant -3 = 2, a non-square).
        let f25 = FieldSpec::new(5, 2, None).unwrap();
        assert_eq!(f25.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = f7();
        let a = f.from_int(3);
        let b = f.from_int(5);
        assert_eq!(a.add(&b), f.from_int(1));
        assert_eq!(a.mul(&b), f.from_int(1));
        assert_eq!(a.sub(&b), f.from_int(-2));
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(f.from_int(-1), f.from_int(6));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn extension_field_arithmetic() {
        let f49 = FieldSpec::new(7, 2, None).unwrap();
        let s = f49.generator();
        // s^2 = -1
        assert_eq!(s.mul(&s), f49.from_int(-1));
        // (s + 1)(s - 1) = s^2 - 1 = -2
        let sp = s.add(&f49.one());
        let sm = s.sub(&f49.one());
        assert_eq!(sp.mul(&sm), f49.from_int(-2));
        // exhaustive inverses
        for a in f49.elements().unwrap() {
            if a.is_zero() {
                continue;
            }
            let ai = a.inv().unwrap();
            assert!(a.mul(&ai).is_one(), "inverse failed for {a}");
        }
    }

    #[test]
    fn field_axioms_exhaustive_f9() {
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        let elems: Vec<Fq> = f9.elements().unwrap().collect();
        assert_eq!(elems.len(), 9);
        for a in &elems {
            for b in &elems {
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
                for c in &elems {
                    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        let first: Vec<Vec<u64>> = f9
            .elements()
            .unwrap()
            .take(4)
            .map(|e| e.coeffs().to_vec())
            .collect();
        assert_eq!(
            first,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0]]
        );
    }

    #[test]
    fn quadratic_character_mod_7() {
        let f = f7();
        // squares mod 7: 1, 2, 4
        let expect = [0i8, 1, 1, -1, 1, -1, -1];
        for (x, &e) in expect.iter().enumerate() {
            assert_eq!(quadratic_character(&f.from_int(x as i64)), e, "x = {x}");
        }
    }

    #[test]
    fn quadratic_character_is_multiplicative() {
        let f25 = FieldSpec::new(5, 2, None).unwrap();
        let elems: Vec<Fq> = f25.elements().unwrap().collect();
        for a in &elems {
            for b in &elems {
                assert_eq!(
                    quadratic_character(&a.mul(b)),
                    quadratic_character(a) * quadratic_character(b)
                );
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let f27 = FieldSpec::new(3, 3, None).unwrap();
        let p = 3u128;
        for a in f27.elements().unwrap() {
            for b in f27.elements().unwrap() {
                assert_eq!(a.add(&b).pow(p), a.pow(p).add(&b.pow(p)));
            }
        }
    }

    #[test]
    fn checked_arith_reports_errors() {
        let f7 = f7();
        let f11 = FieldSpec::prime(11).unwrap();
        let a = f7.from_int(3);
        let b = f11.from_int(3);
        assert!(matches!(
            field_arith(BinOp::Add, &a, &b),
            Err(Error::FieldMismatch(_, _))
        ));
        assert_eq!(
            field_arith(BinOp::Div, &a, &f7.zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            field_arith(BinOp::Div, &a, &f7.from_int(5)).unwrap(),
            f7.from_int(2)
        );
    }

    #[test]
    fn element_text_roundtrip() {
        let f49 = FieldSpec::new(7, 2, None).unwrap();
        let a = f49.element(&[3, 4]).unwrap();
        assert_eq!(a.to_string(), "3,4");
        assert_eq!(Fq::parse(&f49, "3,4").unwrap(), a);
        assert_eq!(Fq::parse(&f49, "(3,4)").unwrap(), a);
        assert_eq!(Fq::parse(&f49, "-1").unwrap(), f49.from_int(6));
        let f7 = f7();
        assert_eq!(Fq::parse(&f7, "12").unwrap(), f7.from_int(5));
        assert!(Fq::parse(&f7, "").is_err());
        assert!(Fq::parse(&f7, "x").is_err());
        assert!(Fq::parse(&f7, "1,2").is_err()); // too many coefficients
    }

    #[test]
    fn first_non_square_is_deterministic() {
        let f7 = f7();
        assert_eq!(f7.first_non_square().unwrap(), f7.from_int(3));
        let f9 = FieldSpec::new(3, 2, None).unwrap();
        let d = f9.first_non_square().unwrap();
        assert_eq!(quadratic_character(&d), -1);
        // s = (1+2s)^2 and 2 = s^2 are squares in F_9, so the scan passes
        // 0, s, 2s, 1 and stops at 1 + s.
        assert_eq!(d.coeffs(), &[1, 1]);
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn cross_field_addition_panics() {
        let a = f7().from_int(1);
        let b = FieldSpec::prime(11).unwrap().from_int(1);
        let _ = a.add(&b);
    }
}
