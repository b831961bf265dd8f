//! Jacobian arithmetic in Mumford coordinates, generic over the coefficient
//! field.
//!
//! A divisor class is stored as a reduced Mumford pair `<u, v>`: `u` monic of
//! degree at most 2, `deg v < deg u` (or `v = 0`), and `u | v^2 - f`. The
//! identity is `<1, 0>`. Because the coefficient field is anything
//! implementing [`FieldElement`], the same composition/reduction code serves
//! both ordinary points over `F_q` and generic points over the function field
//! `F_q(H)` itself.

use std::fmt;

use crate::poly::Poly;
use crate::traits::FieldElement;

/// A reduced Mumford pair `<u, v>` representing a divisor class.
#[derive(Debug, Clone, PartialEq)]
pub struct MumfordDivisor<K: FieldElement> {
    u: Poly<K>,
    v: Poly<K>,
}

impl<K: FieldElement> MumfordDivisor<K> {
    /// The monic `u`-polynomial (degree <= 2; `1` for the identity class).
    pub fn u(&self) -> &Poly<K> {
        &self.u
    }

    /// The `v`-polynomial (`deg v < deg u`, `v(x_i) = y_i` on the support).
    pub fn v(&self) -> &Poly<K> {
        &self.v
    }

    /// True for the identity class `<1, 0>`.
    pub fn is_zero(&self) -> bool {
        self.u.is_one()
    }

    /// True iff the class lies on the theta divisor: the image of
    /// `P -> [P - infinity]`, i.e. `deg u <= 1` (the identity included).
    pub fn in_theta(&self) -> bool {
        self.u.degree() <= 1
    }

    /// Render as `(u(var), v(var))`.
    pub fn format_with(&self, var: &str) -> String {
        format!(
            "({}, {})",
            self.u.format_with(var),
            self.v.format_with(var)
        )
    }
}

impl<K: FieldElement> fmt::Display for MumfordDivisor<K> {
    /// Divisor variables render as `t` to keep them apart from the curve
    /// coordinate `x` when the coefficients are themselves functions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("t"))
    }
}

/// The Jacobian of `y^2 = f(x)` over a fixed coefficient field, holding the
/// group law. `f` must be monic of degree 5 with unit leading coefficient;
/// squarefreeness is the caller's contract (checked where `f` comes from
/// curve parameters).
#[derive(Debug, Clone)]
pub struct Jacobian<K: FieldElement> {
    f: Poly<K>,
}

impl<K: FieldElement> Jacobian<K> {
    pub fn new(f: Poly<K>) -> Self {
        assert_eq!(f.degree(), 5, "defining polynomial must be a quintic");
        assert!(f.is_monic(), "defining polynomial must be monic");
        Jacobian { f }
    }

    pub fn f(&self) -> &Poly<K> {
        &self.f
    }

    fn one(&self) -> K {
        self.f.lead().unwrap().one()
    }

    /// The identity class `<1, 0>`.
    pub fn zero(&self) -> MumfordDivisor<K> {
        MumfordDivisor {
            u: Poly::constant(self.one()),
            v: Poly::zero(),
        }
    }

    /// The class `[(x0, y0) - infinity]`. Panics when the point is not on
    /// the curve.
    pub fn from_point(&self, x0: &K, y0: &K) -> MumfordDivisor<K> {
        assert!(
            y0.square() == self.f.eval(x0),
            "point does not satisfy y^2 = f(x)"
        );
        let u = Poly::from_coeffs(vec![x0.neg(), x0.one()]);
        let v = Poly::constant(y0.clone());
        MumfordDivisor { u, v }
    }

    /// Build a pair directly; panics unless it satisfies the reduced Mumford
    /// invariants. Intended for fixtures whose coordinates come from
    /// elsewhere.
    pub fn from_parts(&self, u: Poly<K>, v: Poly<K>) -> MumfordDivisor<K> {
        let d = MumfordDivisor { u, v };
        assert!(self.is_valid(&d), "not a reduced Mumford pair");
        d
    }

    /// Check the reduced-representative invariants: `u` monic of degree at
    /// most 2, `deg v < deg u` (or `v = 0`), and `u | v^2 - f`.
    pub fn is_valid(&self, d: &MumfordDivisor<K>) -> bool {
        if d.u.is_zero() || !d.u.is_monic() || d.u.degree() > 2 {
            return false;
        }
        if !d.v.is_zero() && d.v.degree() >= d.u.degree() {
            return false;
        }
        d.v.mul(&d.v).sub(&self.f).rem(&d.u).is_zero()
    }

    pub fn neg(&self, d: &MumfordDivisor<K>) -> MumfordDivisor<K> {
        MumfordDivisor {
            u: d.u.clone(),
            v: d.v.neg(),
        }
    }

    /// Cantor composition followed by reduction.
    pub fn add(&self, d1: &MumfordDivisor<K>, d2: &MumfordDivisor<K>) -> MumfordDivisor<K> {
        // Composition: find s1 u1 + s2 u2 + s3 (v1 + v2) = d with
        // d = gcd(u1, u2, v1 + v2), via two extended gcds.
        let (d0, e1, e2) = d1.u.xgcd(&d2.u);
        let vsum = d1.v.add(&d2.v);
        let (d, c1, c2) = d0.xgcd(&vsum);
        let s1 = c1.mul(&e1);
        let s2 = c1.mul(&e2);
        let s3 = c2;

        let u = d1.u.mul(&d2.u).exact_div(&d.mul(&d));
        let num = s1
            .mul(&d1.u)
            .mul(&d2.v)
            .add(&s2.mul(&d2.u).mul(&d1.v))
            .add(&s3.mul(&d1.v.mul(&d2.v).add(&self.f)));
        let v = num.exact_div(&d).rem(&u);
        self.reduce(u, v)
    }

    pub fn sub(&self, d1: &MumfordDivisor<K>, d2: &MumfordDivisor<K>) -> MumfordDivisor<K> {
        self.add(d1, &self.neg(d2))
    }

    /// `n * d` by double-and-add; negative `n` negates the input first.
    pub fn scalar_mul(&self, n: i64, d: &MumfordDivisor<K>) -> MumfordDivisor<K> {
        let (mut m, mut base) = if n < 0 {
            (n.unsigned_abs(), self.neg(d))
        } else {
            (n as u64, d.clone())
        };
        let mut acc = self.zero();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            m >>= 1;
            if m > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// Bring a semi-reduced pair (arbitrary `deg u`, `u | v^2 - f`,
    /// `deg v < deg u`) to the unique reduced representative.
    fn reduce(&self, mut u: Poly<K>, mut v: Poly<K>) -> MumfordDivisor<K> {
        while u.degree() > 2 {
            // f - v^2 is never zero: f is a squarefree quintic, so no square
            // of a polynomial equals it.
            let unext = self.f.sub(&v.mul(&v)).exact_div(&u).monic();
            v = v.neg().rem(&unext);
            u = unext;
        }
        if u.degree() == 0 {
            return self.zero();
        }
        let u = u.monic();
        let v = v.rem(&u);
        MumfordDivisor { u, v }
    }
}
