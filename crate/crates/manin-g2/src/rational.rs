//! Rational functions `num/den` over an abstract coefficient field.
//!
//! Values are kept in a canonical reduced form — `gcd(num, den) = 1`, `den`
//! monic, zero represented as `0/1` — so structural equality is mathematical
//! equality and the degree (the maximum of the numerator and denominator
//! degrees, with `deg 0 := 0`) can be read off directly. Rational functions
//! form a field themselves, so [`RatFn`] implements [`FieldElement`] and can
//! serve as a coefficient field in turn.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::traits::FieldElement;

/// A reduced rational function; see the module docs for the invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFn<K: FieldElement> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: FieldElement> RatFn<K> {
    /// Build `num/den`, reducing to canonical form.
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<K>, den: Poly<K>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::constant(den.lead().unwrap().one()),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > 0 {
            (num.exact_div(&g), den.exact_div(&g))
        } else {
            (num, den)
        };
        let lead_inv = den.lead().unwrap().inv().unwrap();
        RatFn {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: Poly<K>) -> Self {
        match p.lead() {
            None => panic!("use RatFn::zero_in for the zero rational function"),
            Some(l) => {
                let one = Poly::constant(l.one());
                RatFn { num: p, den: one }
            }
        }
    }

    /// The zero rational function, with field context from `sample`.
    pub fn zero_in(sample: &K) -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::constant(sample.one()),
        }
    }

    /// Constant rational function.
    pub fn constant(c: K) -> Self {
        let den = Poly::constant(c.one());
        RatFn {
            num: Poly::constant(c),
            den,
        }
    }

    /// The variable `x` itself, with field context from `sample`.
    pub fn x(sample: &K) -> Self {
        RatFn {
            num: Poly::x(sample),
            den: Poly::constant(sample.one()),
        }
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    /// `max(deg num, deg den)`: the degree of the induced map on the
    /// projective line (`deg 0 := 0` for the zero function).
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    /// Whether the value is a polynomial constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.num.degree() == 0 && self.den.degree() == 0
    }

    /// Evaluate at a point; `None` on poles.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x).mul(&di))
    }

    /// Render with an explicit variable name.
    pub fn format_with(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.format_with(var);
        }
        let n = self.num.format_with(var);
        let d = self.den.format_with(var);
        let n = if n.contains([' ', '+']) {
            format!("({n})")
        } else {
            n
        };
        let d = if d.contains([' ', '+']) {
            format!("({d})")
        } else {
            d
        };
        format!("{n}/{d}")
    }

    /// Map coefficients through a field morphism, preserving reduction.
    pub fn map_coeffs<L: FieldElement>(&self, f: impl Fn(&K) -> L) -> RatFn<L> {
        RatFn::reduced(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }
}

impl<K: FieldElement> FieldElement for RatFn<K> {
    fn zero(&self) -> Self {
        RatFn::zero_in(self.den.lead().unwrap())
    }

    fn one(&self) -> Self {
        let one = Poly::constant(self.den.lead().unwrap().one());
        RatFn {
            num: one.clone(),
            den: one,
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Fraction addition with the classical small-gcd scheme: for reduced
    /// inputs `a/b + c/d` with `g = gcd(b, d)`, the sum
    /// `t/(g (b/g) (d/g))` with `t = a(d/g) + c(b/g)` has
    /// `gcd(t, denominator) = gcd(t, g)`, so only gcds against `g` are ever
    /// computed instead of one against the full product denominator.
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        if g.degree() == 0 {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            if num.is_zero() {
                return self.zero();
            }
            return RatFn {
                num,
                den: self.den.mul(&rhs.den),
            };
        }
        let b1 = self.den.exact_div(&g);
        let d1 = rhs.den.exact_div(&g);
        let t = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        if t.is_zero() {
            return self.zero();
        }
        let h = t.gcd(&g);
        let (t, g) = if h.degree() > 0 {
            (t.exact_div(&h), g.exact_div(&h))
        } else {
            (t, g)
        };
        RatFn {
            num: t,
            den: g.mul(&b1).mul(&d1),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Fraction product via cross cancellation: for reduced inputs,
    /// cancelling `gcd(a, d)` and `gcd(c, b)` first leaves a product that is
    /// already in lowest terms with a monic denominator.
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return self.zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.degree() > 0 {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        } else {
            (self.num.clone(), rhs.den.clone())
        };
        let (c, b) = if g2.degree() > 0 {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        } else {
            (rhs.num.clone(), self.den.clone())
        };
        RatFn {
            num: a.mul(&c),
            den: b.mul(&d),
        }
    }

    /// Reduced fractions stay reduced under swapping, so inversion only
    /// rescales to keep the denominator monic.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lead_inv = self.num.lead().unwrap().inv().unwrap();
        Some(RatFn {
            num: self.den.scale(&lead_inv),
            den: self.num.scale(&lead_inv),
        })
    }

    fn from_int(&self, n: i64) -> Self {
        RatFn::constant(self.den.lead().unwrap().from_int(n))
    }
}

impl<K: FieldElement> fmt::Display for RatFn<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("x"))
    }
}
