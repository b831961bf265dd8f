//! Dense univariate polynomials over an abstract coefficient field.
//!
//! [`Poly`] is generic over [`FieldElement`], so the same code serves
//! polynomials over `F_q` and polynomials in the Mumford variable whose
//! coefficients are function-field elements. The representation is a plain
//! ascending coefficient vector with no trailing zeros; the zero polynomial
//! is the empty vector and, following the usual convention for degree
//! bookkeeping in this domain, reports degree 0.
//!
//! The second half of the file is `F_q`-specific: Frobenius powering,
//! distinct-degree factorization, seeded equal-degree splitting into linear
//! factors, and root finding (exhaustive below [`ENUMERATION_LIMIT`],
//! factorization-based above it).

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Fq, ENUMERATION_LIMIT};
use crate::traits::FieldElement;

/// Dense univariate polynomial; see the module docs for the representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<K: FieldElement> {
    coeffs: Vec<K>,
}

impl<K: FieldElement> Poly<K> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Constant polynomial (trimmed away if `c` is zero).
    pub fn constant(c: K) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// The monomial `c * x^e`.
    pub fn monomial(c: K, e: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// The variable itself, in the field of `sample`.
    pub fn x(sample: &K) -> Self {
        Poly {
            coeffs: vec![sample.zero(), sample.one()],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `deg 0 := 0` for the zero polynomial (the convention the
    /// degree bookkeeping in this crate relies on).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Ascending coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, with `zero` supplying the field context for
    /// indices beyond the degree (and for the zero polynomial).
    pub fn coeff_or(&self, i: usize, zero: &K) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| zero.zero())
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn lead(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(FieldElement::is_one)
    }

    /// Whether this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].zero();
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Multiply every coefficient by the scalar `c`.
    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Self {
        if exp == 0 {
            // x^0 = 1 needs a field context; take it from self when possible.
            return match self.coeffs.first() {
                Some(c) => Poly::constant(c.one()),
                None => panic!("0^0 of the zero polynomial has no field context"),
            };
        }
        let mut base = self.clone();
        let mut acc: Option<Poly<K>> = None;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap()
    }

    /// Long division by a nonzero divisor: `self = q * rhs + r` with
    /// `deg r < deg rhs` (or `r = 0`).
    ///
    /// # Panics
    /// On a zero divisor; callers guard. A non-invertible leading coefficient
    /// cannot occur over a field.
    pub fn divmod(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < rhs.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = rhs
            .lead()
            .unwrap()
            .inv()
            .expect("leading coefficient of a nonzero polynomial is invertible over a field");
        let zero = lead_inv.zero();
        let mut rem = self.coeffs.clone();
        let dr = rhs.coeffs.len() - 1;
        let mut quot = vec![zero; self.coeffs.len() - dr];
        for top in (dr..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = rem[top].mul(&lead_inv);
            quot[top - dr] = c.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[top - dr + j] = rem[top - dr + j].sub(&c.mul(b));
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Remainder of division by `rhs`.
    pub fn rem(&self, rhs: &Self) -> Self {
        self.divmod(rhs).1
    }

    /// Exact division; panics if `rhs` does not divide `self`.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.divmod(rhs);
        assert!(r.is_zero(), "exact division left remainder {r:?}");
        q
    }

    /// Monic scalar multiple (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns monic `g` plus `s, t` with `g = s*self + t*rhs`.
    pub fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let one = match r0.lead().or(r1.lead()) {
            Some(l) => l.one(),
            None => panic!("xgcd of two zero polynomials has no field context"),
        };
        let mut s0 = Poly::constant(one.clone());
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::constant(one.clone());
        while !r1.is_zero() {
            let (q, r2) = r0.divmod(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if let Some(l) = r0.lead() {
            if !l.is_one() {
                let li = l.inv().unwrap();
                return (r0.scale(&li), s0.scale(&li), t0.scale(&li));
            }
        }
        (r0, s0, t0)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_int(i as i64)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Squarefree test: `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            // perfect-power shape (only possible when p divides every
            // exponent in the support)
            return false;
        }
        self.gcd(&d).degree() == 0
    }

    /// Evaluate by Horner's rule.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitute `x^e` for `x` (spread coefficients e-fold apart).
    pub fn substitute_power(&self, e: usize) -> Self {
        assert!(e >= 1);
        if self.is_zero() || e == 1 {
            return self.clone();
        }
        let zero = self.coeffs[0].zero();
        let mut coeffs = vec![zero; (self.coeffs.len() - 1) * e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * e] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Map every coefficient through `f` (e.g. a field embedding or the
    /// hyperelliptic involution).
    pub fn map_coeffs<L: FieldElement>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// `self^exp mod m` by square-and-multiply.
    pub fn powmod(&self, mut exp: u128, m: &Self) -> Self {
        assert!(m.degree() >= 1, "powmod needs a modulus of degree >= 1");
        let one = Poly::constant(m.lead().unwrap().one());
        let mut acc = one;
        let mut base = self.rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            exp >>= 1;
        }
        acc
    }

    /// Render with an explicit variable name, descending powers.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let coeff_part = if c.is_one() && i > 0 {
                String::new()
            } else if needs_parens(&cs) {
                format!("({cs})")
            } else {
                cs
            };
            let term = match (coeff_part.is_empty(), i) {
                (_, 0) => {
                    if coeff_part.is_empty() {
                        "1".to_string()
                    } else {
                        coeff_part
                    }
                }
                (true, 1) => var.to_string(),
                (false, 1) => format!("{coeff_part}*{var}"),
                (true, _) => format!("{var}^{i}"),
                (false, _) => format!("{coeff_part}*{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

/// True when a rendered coefficient needs parentheses inside a larger term.
fn needs_parens(s: &str) -> bool {
    s.contains([' ', '+', '-', '*', '/', ','])
}

impl<K: FieldElement> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("x"))
    }
}

// ---------------------------------------------------------------------------
// F_q-specific factorization and root finding
// ---------------------------------------------------------------------------

/// `x^(q^e) mod f` by iterated q-th powering.
pub fn frobenius_mod(f: &Poly<Fq>, e: usize) -> Poly<Fq> {
    let q = poly_field(f).order();
    let mut t = Poly::x(f.lead().expect("nonzero modulus")).rem(f);
    for _ in 0..e {
        t = t.powmod(q as u128, f);
    }
    t
}

fn poly_field(f: &Poly<Fq>) -> Arc<FieldSpec> {
    Arc::clone(
        f.lead()
            .expect("operation needs a nonzero polynomial for field context")
            .spec(),
    )
}

/// Distinct-degree factorization of a squarefree monic polynomial: the list
/// of `(d, product of all irreducible factors of degree d)`, ascending in
/// `d`, omitting trivial entries.
pub fn distinct_degree_factorization(f: &Poly<Fq>) -> Vec<(usize, Poly<Fq>)> {
    assert!(f.is_squarefree(), "distinct-degree factorization expects a squarefree input");
    let field = poly_field(f);
    let q = field.order();
    let mut rest = f.monic();
    let mut out = Vec::new();
    let x = Poly::x(&field.zero());
    let mut h = x.rem(&rest);
    let mut d = 0usize;
    while rest.degree() >= 1 {
        d += 1;
        if 2 * d > rest.degree() {
            // whatever remains is a single irreducible factor
            out.push((rest.degree(), rest.clone()));
            break;
        }
        h = h.powmod(q as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() >= 1 {
            out.push((d, g.clone()));
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
        }
    }
    out
}

/// Multiset (sorted ascending) of the degrees of the irreducible factors of a
/// squarefree polynomial — equivalently, the extension degrees over which its
/// roots live.
pub fn splitting_extension_degrees(f: &Poly<Fq>) -> Vec<usize> {
    let mut out = Vec::new();
    for (d, g) in distinct_degree_factorization(f) {
        for _ in 0..(g.degree() / d) {
            out.push(d);
        }
    }
    out.sort_unstable();
    out
}

/// Roots of `f` in its own coefficient field, sorted by element order.
///
/// Exhaustive scan below [`ENUMERATION_LIMIT`]; above it, the linear-factor
/// part `gcd(f, x^q - x)` is split by seeded equal-degree splitting.
pub fn roots_in_field(f: &Poly<Fq>) -> Result<Vec<Fq>> {
    if f.is_zero() {
        return Err(Error::Parse("roots of the zero polynomial".into()));
    }
    let field = poly_field(f);
    let mut roots = if field.order() <= ENUMERATION_LIMIT {
        let mut roots = Vec::new();
        for a in field.elements()? {
            if f.eval(&a).is_zero() {
                roots.push(a);
            }
        }
        roots
    } else {
        let x = Poly::x(&field.zero());
        let xq = frobenius_mod(f, 1);
        let linear_part = f.gcd(&xq.sub(&x));
        split_linear_factors(&linear_part)
    };
    roots.sort_by(|a, b| a.order_key().cmp(b.order_key()));
    Ok(roots)
}

/// Split a monic product of distinct linear factors into its roots
/// (Cantor–Zassenhaus with a fixed-seed generator, so runs are reproducible).
pub fn split_linear_factors(g: &Poly<Fq>) -> Vec<Fq> {
    let mut rng = ChaCha12Rng::seed_from_u64(0x6d61_6e69_6e32);
    let mut out = Vec::new();
    split_linear_rec(g, &mut rng, &mut out);
    out
}

fn split_linear_rec(g: &Poly<Fq>, rng: &mut ChaCha12Rng, out: &mut Vec<Fq>) {
    match g.degree() {
        0 => {}
        1 => {
            // monic x + c -> root -c
            out.push(g.coeffs()[0].neg());
        }
        _ => {
            let field = poly_field(g);
            let q = field.order();
            let e = ((q - 1) / 2) as u128;
            loop {
                // random polynomial of degree < deg g
                let coeffs: Vec<Fq> = (0..g.degree())
                    .map(|_| {
                        let mut v = vec![0u64; field.degree()];
                        for c in &mut v {
                            *c = rng.gen_range(0..field.characteristic());
                        }
                        field.element(&v).unwrap()
                    })
                    .collect();
                let r = Poly::from_coeffs(coeffs);
                if r.is_zero() {
                    continue;
                }
                let one = Poly::constant(field.one());
                let h = g.gcd(&r.powmod(e, g).sub(&one));
                if h.degree() >= 1 && h.degree() < g.degree() {
                    split_linear_rec(&h, rng, out);
                    split_linear_rec(&g.exact_div(&h), rng, out);
                    return;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Polynomial text format
// ---------------------------------------------------------------------------

/// Parse polynomial text over a finite field. Two formats are accepted:
/// the compact coefficient vector `[c0,c1,...]` (ascending) and the term form
/// `c0 + c1*x + c2*x^2` with any single-letter variable, coefficients as
/// integers or parenthesized vectors `(c0,c1)`.
pub fn parse_poly(field: &Arc<FieldSpec>, text: &str) -> Result<Poly<Fq>> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if t.len() > 1 << 16 {
        return Err(Error::Parse("polynomial text too long".into()));
    }
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated '[' in {t:?}")))?;
        let mut coeffs = Vec::new();
        for part in split_top_level(inner, ',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("empty coefficient in {t:?}")));
            }
            coeffs.push(Fq::parse(field, part)?);
        }
        return Ok(Poly::from_coeffs(coeffs));
    }
    parse_poly_terms(field, t)
}

/// Split on `sep` at parenthesis depth 0.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

const MAX_PARSED_EXPONENT: usize = 4096;

fn parse_poly_terms(field: &Arc<FieldSpec>, text: &str) -> Result<Poly<Fq>> {
    // split into signed terms at depth-0 '+'/'-'
    let mut terms: Vec<(bool, &str)> = Vec::new(); // (negative, body)
    let mut depth = 0usize;
    let mut start = 0;
    let mut neg = false;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 && i > start => {
                terms.push((neg, text[start..i].trim()));
                neg = ch == '-';
                start = i + 1;
            }
            '-' if depth == 0 && i == start => {
                // leading sign of this term
                neg = !neg;
                start = i + 1;
            }
            '+' if depth == 0 && i == start => {
                start = i + 1;
            }
            _ => {}
        }
    }
    terms.push((neg, text[start..].trim()));

    let mut acc: Vec<Fq> = Vec::new();
    let zero = field.zero();
    let mut var_seen: Option<char> = None;
    for (negate, body) in terms {
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        let (coeff, exp) = parse_term(field, body, &mut var_seen)?;
        if exp > MAX_PARSED_EXPONENT {
            return Err(Error::Parse(format!("exponent {exp} too large")));
        }
        if acc.len() <= exp {
            acc.resize(exp + 1, zero.clone());
        }
        let signed = if negate { coeff.neg() } else { coeff };
        acc[exp] = acc[exp].add(&signed);
    }
    Ok(Poly::from_coeffs(acc))
}

/// One term: `coeff`, `coeff*var^e`, `var^e`, `var`, `coeff*var`. All terms
/// of one polynomial must use the same variable letter.
fn parse_term(
    field: &Arc<FieldSpec>,
    body: &str,
    var_seen: &mut Option<char>,
) -> Result<(Fq, usize)> {
    let pieces: Vec<&str> = split_top_level(body, '*')
        .into_iter()
        .map(str::trim)
        .collect();
    if pieces.len() > 2 || pieces.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("malformed term {body:?}")));
    }
    let mut coeff: Option<Fq> = None;
    let mut exp: Option<usize> = None;
    for piece in pieces {
        if let Some((var, e)) = parse_var_power(piece) {
            if exp.is_some() {
                return Err(Error::Parse(format!("malformed term {body:?}")));
            }
            if *var_seen.get_or_insert(var) != var {
                return Err(Error::Parse(format!(
                    "mixed variables {:?} and {var:?}",
                    var_seen.unwrap()
                )));
            }
            exp = Some(e);
        } else {
            if coeff.is_some() {
                return Err(Error::Parse(format!("two coefficients in {body:?}")));
            }
            coeff = Some(Fq::parse(field, piece)?);
        }
    }
    Ok((coeff.unwrap_or_else(|| field.one()), exp.unwrap_or(0)))
}

/// `x`, `x^3` and similar; `None` if the piece is not a variable power.
fn parse_var_power(piece: &str) -> Option<(char, usize)> {
    let mut chars = piece.chars();
    let v = chars.next()?;
    if !v.is_ascii_alphabetic() {
        return None;
    }
    let rest = chars.as_str();
    if rest.is_empty() {
        return Some((v, 1));
    }
    let e = rest.strip_prefix('^')?;
    if e.len() > 5 {
        return None;
    }
    e.parse().ok().map(|e| (v, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> Arc<FieldSpec> {
        FieldSpec::prime(7).unwrap()
    }

    /// x^5 + 5x over F_7, the running example curve polynomial.
    fn f_x5_5x(field: &Arc<FieldSpec>) -> Poly<Fq> {
        let mut coeffs = vec![field.zero(); 6];
        coeffs[1] = field.from_int(5);
        coeffs[5] = field.one();
        Poly::from_coeffs(coeffs)
    }

    #[test]
    fn product_of_linears() {
        // (x+3)(x+4) = x^2 + 5 over F_7
        let f = f7();
        let a = Poly::from_coeffs(vec![f.from_int(3), f.one()]);
        let b = Poly::from_coeffs(vec![f.from_int(4), f.one()]);
        let prod = a.mul(&b);
        assert_eq!(
            prod,
            Poly::from_coeffs(vec![f.from_int(5), f.zero(), f.one()])
        );
    }

    #[test]
    fn divmod_exact_case() {
        // (x^2 - 1) / (x - 1) = (x + 1, 0) over F_7
        let f = f7();
        let num = Poly::from_coeffs(vec![f.from_int(-1), f.zero(), f.one()]);
        let den = Poly::from_coeffs(vec![f.from_int(-1), f.one()]);
        let (q, r) = num.divmod(&den);
        assert_eq!(q, Poly::from_coeffs(vec![f.one(), f.one()]));
        assert!(r.is_zero());
    }

    #[test]
    fn degree_of_zero_is_zero() {
        let z: Poly<Fq> = Poly::zero();
        assert_eq!(z.degree(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn squarefree_detection() {
        let f = f7();
        // x^5 is not squarefree
        assert!(!Poly::monomial(f.one(), 5).is_squarefree());
        // x^5 + 5x is squarefree: gcd(f, f') = 1
        let curve = f_x5_5x(&f);
        assert!(curve.is_squarefree());
        assert_eq!(curve.gcd(&curve.derivative()).degree(), 0);
        // (x-1)^2(x+1)
        let sq = Poly::from_coeffs(vec![f.from_int(-1), f.one()])
            .pow(2)
            .mul(&Poly::from_coeffs(vec![f.one(), f.one()]));
        assert!(!sq.is_squarefree());
    }

    #[test]
    fn roots_of_linear_and_quintic() {
        let f = f7();
        // x - 3 -> {3}
        let lin = Poly::from_coeffs(vec![f.from_int(-3), f.one()]);
        assert_eq!(roots_in_field(&lin).unwrap(), vec![f.from_int(3)]);
        // x^5 + 5x over F_7 -> {0, 2, 5}
        let roots = roots_in_field(&f_x5_5x(&f)).unwrap();
        assert_eq!(
            roots,
            vec![f.from_int(0), f.from_int(2), f.from_int(5)]
        );
    }

    #[test]
    fn splitting_degrees_of_the_running_example() {
        // x^5 + 5x = x (x^4 + 5) over F_7 has factors of degrees 1,1,1,2
        let degs = splitting_extension_degrees(&f_x5_5x(&f7()));
        assert_eq!(degs, vec![1, 1, 1, 2]);
    }

    #[test]
    fn ddf_products_multiply_back() {
        let f = f7();
        let curve = f_x5_5x(&f);
        let parts = distinct_degree_factorization(&curve);
        let mut prod = Poly::constant(f.one());
        for (d, g) in &parts {
            assert!(g.degree() % d == 0);
            prod = prod.mul(g);
        }
        assert_eq!(prod, curve.monic());
    }

    #[test]
    fn seeded_splitting_agrees_with_enumeration() {
        // force the factorization path on a field small enough to also scan
        let f13 = FieldSpec::prime(13).unwrap();
        let mut poly = Poly::constant(f13.one());
        for r in [2i64, 5, 6, 11] {
            poly = poly.mul(&Poly::from_coeffs(vec![f13.from_int(-r), f13.one()]));
        }
        let mut split = split_linear_factors(&poly);
        split.sort_by(|a, b| a.order_key().cmp(b.order_key()));
        let expect: Vec<Fq> = [2i64, 5, 6, 11].iter().map(|&r| f13.from_int(r)).collect();
        assert_eq!(split, expect);
        assert_eq!(roots_in_field(&poly).unwrap(), expect);
    }

    #[test]
    fn frobenius_mod_fixes_subfield_polynomials() {
        let f = f7();
        let curve = f_x5_5x(&f);
        // x^7 mod f, then x^49 mod f: applying eval at the roots must agree
        // with plain powering
        let x7 = frobenius_mod(&curve, 1);
        for a in f.elements().unwrap() {
            if curve.eval(&a).is_zero() {
                assert_eq!(x7.eval(&a), a.pow(7));
            }
        }
    }

    #[test]
    fn parse_both_formats() {
        let f = f7();
        let compact = parse_poly(&f, "[0,5,0,0,0,1]").unwrap();
        assert_eq!(compact, f_x5_5x(&f));
        let human = parse_poly(&f, "x^5 + 5*x").unwrap();
        assert_eq!(human, f_x5_5x(&f));
        let signs = parse_poly(&f, "-x^2 + 3 - x + x^2").unwrap();
        assert_eq!(signs, Poly::from_coeffs(vec![f.from_int(3), f.from_int(-1)]));
        assert_eq!(parse_poly(&f, "0").unwrap(), Poly::zero());
        // extension coefficients in parentheses
        let f49 = FieldSpec::new(7, 2, None).unwrap();
        let p = parse_poly(&f49, "[(1,2),0,3]").unwrap();
        assert_eq!(p.coeffs()[0], f49.element(&[1, 2]).unwrap());
        let q = parse_poly(&f49, "(1,2) + 3*x^2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_rejects_malformed_text() {
        let f = f7();
        for bad in ["", "[1,2", "x^", "x^999999", "3**x", "x*x", "1 + + 2", "[,]", "y^2+x"] {
            assert!(parse_poly(&f, bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_roundtrips_through_parser() {
        let f = f7();
        let p = f_x5_5x(&f);
        assert_eq!(p.to_string(), "x^5 + 5*x");
        assert_eq!(parse_poly(&f, &p.to_string()).unwrap(), p);
    }

    proptest! {
        #[test]
        fn prop_divmod_roundtrip(a in vec_coeffs(8), b in vec_coeffs(5)) {
            let f = f7();
            let pa = from_ints(&f, &a);
            let pb = from_ints(&f, &b);
            prop_assume!(!pb.is_zero());
            let (q, r) = pa.divmod(&pb);
            prop_assert_eq!(q.mul(&pb).add(&r), pa);
            prop_assert!(r.is_zero() || r.degree() < pb.degree());
        }

        #[test]
        fn prop_gcd_divides_both(a in vec_coeffs(6), b in vec_coeffs(6)) {
            let f = f7();
            let pa = from_ints(&f, &a);
            let pb = from_ints(&f, &b);
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let g = pa.gcd(&pb);
            prop_assert!(pa.rem(&g).is_zero());
            prop_assert!(pb.rem(&g).is_zero());
            let (g2, s, t) = pa.xgcd(&pb);
            prop_assert_eq!(&g2, &g);
            prop_assert_eq!(s.mul(&pa).add(&t.mul(&pb)), g);
        }

        #[test]
        fn prop_mul_degree_adds(a in vec_coeffs(6), b in vec_coeffs(6)) {
            let f = f7();
            let pa = from_ints(&f, &a);
            let pb = from_ints(&f, &b);
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            prop_assert_eq!(pa.mul(&pb).degree(), pa.degree() + pb.degree());
        }
    }

    fn vec_coeffs(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(0u64..7, 0..max_len)
    }

    fn from_ints(field: &Arc<FieldSpec>, v: &[u64]) -> Poly<Fq> {
        Poly::from_coeffs(v.iter().map(|&c| field.from_int(c as i64)).collect())
    }
}
