//! The function field `F_q(H) = F_q(x)[y] / (y^2 - f(x))` of a genus-2 curve.
//!
//! Elements are written `a(x) + b(x)*y` with rational functions `a, b`; the
//! relation `y^2 = f(x)` closes multiplication and the norm
//! `a^2 - b^2 f` (never zero for a nonzero element, because a squarefree
//! quintic is not a square in `F_q(x)`) gives inverses:
//! `(a + b y)^{-1} = (a - b y) / (a^2 - b^2 f)`.
//!
//! This field is the natural coefficient domain for divisor arithmetic with a
//! *generic* curve point: the point `(x, y)` itself lives on the curve over
//! `F_q(H)`, as does its image under the q-power Frobenius, so Jacobian
//! computations over [`HyperElt`] manipulate whole families of divisors at
//! once.

use std::fmt;
use std::sync::Arc;

use crate::field::{FieldSpec, Fq};
use crate::poly::Poly;
use crate::rational::RatFn;
use crate::traits::FieldElement;

/// Shared context: the base field and the curve polynomial `f` (monic,
/// squarefree, degree 5) defining `y^2 = f(x)`.
#[derive(Debug)]
pub struct HyperCtx {
    field: Arc<FieldSpec>,
    f: Poly<Fq>,
    f_rat: RatFn<Fq>,
}

impl HyperCtx {
    /// Wrap a curve polynomial. Validation (monic quintic, squarefree) is the
    /// curve constructor's job; this asserts the shape.
    pub fn new(field: Arc<FieldSpec>, f: Poly<Fq>) -> Arc<Self> {
        assert_eq!(f.degree(), 5, "curve polynomial must be quintic");
        assert!(f.is_monic(), "curve polynomial must be monic");
        let f_rat = RatFn::from_poly(f.clone());
        Arc::new(HyperCtx { field, f, f_rat })
    }

    pub fn base_field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// The defining polynomial `f`.
    pub fn f(&self) -> &Poly<Fq> {
        &self.f
    }

    /// Zero of the function field.
    pub fn zero(self: &Arc<Self>) -> HyperElt {
        let z = RatFn::zero_in(&self.field.one());
        HyperElt {
            ctx: Arc::clone(self),
            a: z.clone(),
            b: z,
        }
    }

    /// A rational function viewed as a function-field element.
    pub fn from_rat(self: &Arc<Self>, a: RatFn<Fq>) -> HyperElt {
        HyperElt {
            ctx: Arc::clone(self),
            b: RatFn::zero_in(&self.field.one()),
            a,
        }
    }

    /// A base-field constant viewed as a function-field element.
    pub fn constant(self: &Arc<Self>, c: Fq) -> HyperElt {
        self.from_rat(RatFn::constant(c))
    }

    /// The coordinate function `x`.
    pub fn x(self: &Arc<Self>) -> HyperElt {
        self.from_rat(RatFn::x(&self.field.one()))
    }

    /// The coordinate function `y`.
    pub fn y(self: &Arc<Self>) -> HyperElt {
        HyperElt {
            ctx: Arc::clone(self),
            a: RatFn::zero_in(&self.field.one()),
            b: RatFn::constant(self.field.one()),
        }
    }

    /// `x^q`: the first coordinate of the Frobenius image of the generic
    /// point. `q` is passed explicitly so that after a base extension the
    /// geometric Frobenius keeps the original field order.
    pub fn frobenius_x_pow(self: &Arc<Self>, q: u64) -> HyperElt {
        self.from_rat(RatFn::from_poly(Poly::monomial(
            self.field.one(),
            q as usize,
        )))
    }

    /// `y^q = y * f(x)^((q-1)/2)`: the second coordinate of the Frobenius
    /// image of the generic point, for an explicit odd order `q`.
    pub fn frobenius_y_pow(self: &Arc<Self>, q: u64) -> HyperElt {
        let half = self.f.pow((q - 1) / 2);
        HyperElt {
            ctx: Arc::clone(self),
            a: RatFn::zero_in(&self.field.one()),
            b: RatFn::from_poly(half),
        }
    }

    /// [`Self::frobenius_x_pow`] at the full order of the coefficient field.
    pub fn frobenius_x(self: &Arc<Self>) -> HyperElt {
        self.frobenius_x_pow(self.field.order())
    }

    /// [`Self::frobenius_y_pow`] at the full order of the coefficient field.
    pub fn frobenius_y(self: &Arc<Self>) -> HyperElt {
        self.frobenius_y_pow(self.field.order())
    }
}

impl PartialEq for HyperCtx {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.f == other.f
    }
}

/// An element `a(x) + b(x)*y` of the function field.
#[derive(Debug, Clone)]
pub struct HyperElt {
    ctx: Arc<HyperCtx>,
    a: RatFn<Fq>,
    b: RatFn<Fq>,
}

impl HyperElt {
    pub fn ctx(&self) -> &Arc<HyperCtx> {
        &self.ctx
    }

    /// The `y`-free component.
    pub fn a(&self) -> &RatFn<Fq> {
        &self.a
    }

    /// The coefficient of `y`.
    pub fn b(&self) -> &RatFn<Fq> {
        &self.b
    }

    /// Whether the element lies in `F_q(x)` (no `y` component).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The element as a rational function in `x`, when it has no `y` part.
    pub fn rational_part(&self) -> Option<&RatFn<Fq>> {
        self.is_rational().then_some(&self.a)
    }

    /// The hyperelliptic involution `y -> -y` (a field automorphism fixing
    /// `F_q(x)`).
    pub fn involution(&self) -> Self {
        HyperElt {
            ctx: Arc::clone(&self.ctx),
            a: self.a.clone(),
            b: self.b.neg(),
        }
    }

    fn assert_same_ctx(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &rhs.ctx) || self.ctx == rhs.ctx,
            "function-field context mismatch"
        );
    }
}

impl PartialEq for HyperElt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl FieldElement for HyperElt {
    fn zero(&self) -> Self {
        self.ctx.zero()
    }

    fn one(&self) -> Self {
        self.ctx.constant(self.ctx.field.one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_ctx(rhs);
        HyperElt {
            ctx: Arc::clone(&self.ctx),
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_ctx(rhs);
        HyperElt {
            ctx: Arc::clone(&self.ctx),
            a: self.a.sub(&rhs.a),
            b: self.b.sub(&rhs.b),
        }
    }

    fn neg(&self) -> Self {
        HyperElt {
            ctx: Arc::clone(&self.ctx),
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_ctx(rhs);
        // (a1 + b1 y)(a2 + b2 y) = a1 a2 + b1 b2 f + (a1 b2 + a2 b1) y
        let f = &self.ctx.f_rat;
        let a = self.a.mul(&rhs.a).add(&self.b.mul(&rhs.b).mul(f));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        HyperElt {
            ctx: Arc::clone(&self.ctx),
            a,
            b,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // norm = a^2 - b^2 f is nonzero: f is squarefree of odd degree, so it
        // is not the square of a rational function
        let f = &self.ctx.f_rat;
        let norm = self.a.square().sub(&self.b.square().mul(f));
        let ninv = norm
            .inv()
            .expect("norm of a nonzero function-field element is nonzero");
        Some(HyperElt {
            ctx: Arc::clone(&self.ctx),
            a: self.a.mul(&ninv),
            b: self.b.neg().mul(&ninv),
        })
    }

    fn from_int(&self, n: i64) -> Self {
        self.ctx.constant(self.ctx.field.from_int(n))
    }
}

impl fmt::Display for HyperElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(self.a.format_with("x"));
        }
        if !self.b.is_zero() {
            let bs = self.b.format_with("x");
            if bs == "1" {
                parts.push("y".to_string());
            } else if bs.contains([' ', '+']) {
                parts.push(format!("({bs})*y"));
            } else {
                parts.push(format!("{bs}*y"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}
