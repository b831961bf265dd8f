//! The Kummer-surface coordinate `kappa4` on reduced Mumford pairs.
//!
//! On the Kummer quotient of the Jacobian, a class of weight 2 with
//! `u = t^2 + u1 t + u0`, `v = v1 t + v0` has affine coordinates
//! `kappa2 = -u1`, `kappa3 = u0`, and
//!
//! ```text
//! kappa4 = (F0(-u1, u0) - 2 (v1^2 u0 - v1 v0 u1 + v0^2)) / (u1^2 - 4 u0)
//! ```
//!
//! where `F0(A, B) = 2 a0 + a1 A + 2 a2 B + a3 A B + 2 a4 B^2 + A B^2` is
//! built from the curve coefficients. For a split class
//! `[(x1,y1) + (x2,y2) - 2 inf]` this is the symmetric expression
//! `(F0(x1+x2, x1 x2) - 2 y1 y2) / (x1 - x2)^2`, which the tests use as an
//! independent oracle. Classes where the formula breaks down are reported
//! through [`KappaValue`] instead of panicking.

use crate::jacobian::MumfordDivisor;
use crate::poly::Poly;
use crate::traits::FieldElement;

/// Outcome of evaluating the Kummer coordinates on a reduced class.
#[derive(Debug, Clone, PartialEq)]
pub enum KappaValue<K: FieldElement> {
    /// The identity class `<1, 0>`.
    ZeroClass,
    /// A weight-1 class (on the theta divisor), where `kappa4` has a pole.
    PoleTheta,
    /// Weight 2 but `u1^2 - 4 u0 = 0`: the two points share an
    /// `x`-coordinate and the affine chart degenerates.
    DegenerateDenominator,
    /// The generic case.
    Finite { k2: K, k3: K, k4: K },
}

impl<K: FieldElement> KappaValue<K> {
    pub fn is_finite(&self) -> bool {
        matches!(self, KappaValue::Finite { .. })
    }

    /// The `kappa4` coordinate when finite.
    pub fn k4(&self) -> Option<&K> {
        match self {
            KappaValue::Finite { k4, .. } => Some(k4),
            _ => None,
        }
    }
}

/// `F0(A, B) = 2 a0 + a1 A + 2 a2 B + a3 A B + 2 a4 B^2 + A B^2` for the
/// quintic `f = x^5 + a4 x^4 + ... + a0`.
pub fn f0_eval<K: FieldElement>(f: &Poly<K>, a: &K, b: &K) -> K {
    assert_eq!(f.degree(), 5, "F0 needs a quintic");
    let zero = a.zero();
    let c = |i: usize| f.coeff_or(i, &zero);
    let b2 = b.square();
    c(0).double()
        .add(&c(1).mul(a))
        .add(&c(2).double().mul(b))
        .add(&c(3).mul(a).mul(b))
        .add(&c(4).double().mul(&b2))
        .add(&a.mul(&b2))
}

/// Evaluate the Kummer coordinates of a reduced Mumford pair on
/// `y^2 = f(x)`.
pub fn kappa_mumford<K: FieldElement>(f: &Poly<K>, d: &MumfordDivisor<K>) -> KappaValue<K> {
    if d.is_zero() {
        return KappaValue::ZeroClass;
    }
    if d.u().degree() == 1 {
        return KappaValue::PoleTheta;
    }
    let zero = f.lead().unwrap().zero();
    let u1 = d.u().coeff_or(1, &zero);
    let u0 = d.u().coeff_or(0, &zero);
    let v1 = d.v().coeff_or(1, &zero);
    let v0 = d.v().coeff_or(0, &zero);

    let den = u1.square().sub(&u0.double().double());
    if den.is_zero() {
        return KappaValue::DegenerateDenominator;
    }
    let k2 = u1.neg();
    let k3 = u0.clone();
    let f0 = f0_eval(f, &k2, &k3);
    let cross = v1.square().mul(&u0).sub(&v1.mul(&v0).mul(&u1)).add(&v0.square());
    let k4 = f0
        .sub(&cross.double())
        .div(&den)
        .expect("denominator checked nonzero");
    KappaValue::Finite { k2, k3, k4 }
}

/// The full projective Kummer image `(x1 : x2 : x3 : x4)` of a reduced
/// class, defined for every class shape:
///
/// - the identity class maps to `(0 : 0 : 0 : 1)`,
/// - a weight-1 class `<t - a, b>` to `(0 : 1 : a : a^2)`,
/// - a generic weight-2 class to `(1 : -u1 : u0 : kappa4)`,
/// - a weight-2 class with `u = (t - r)^2` to `(1 : 2r : r^2 : beta0)`,
///   where `beta0` is the limit of `kappa4` along weight-2 classes
///   approaching it:
///
///   ```text
///   beta0  = (f'(r)^2 / f(r) - f''(r) - dF0(2r, r^2)) / 4
///   dF0(A, B) = 2 a2 + a3 A + 4 a4 B + 2 A B    (the B-derivative of F0)
///   ```
///
///   (`f(r)` cannot vanish there: `(t - r)^2` divides `v^2 - f`, so
///   `f(r) = 0` would force `(t - r)^2 | f`, contradicting squarefreeness.)
///
/// Unlike the affine chart exposed by [`kappa_mumford`], the quadruple never
/// degenerates, so it can be cleared to coprime polynomials and used for
/// degree computations. Needs odd characteristic (divisions by 2 and 4).
pub fn kummer_coords<K: FieldElement>(f: &Poly<K>, d: &MumfordDivisor<K>) -> [K; 4] {
    let one = f.lead().expect("f is nonzero").one();
    let zero = one.zero();
    if d.is_zero() {
        return [zero.clone(), zero.clone(), zero, one];
    }
    if d.u().degree() == 1 {
        let a = d.u().coeff_or(0, &zero).neg();
        let a2 = a.square();
        return [zero, one, a, a2];
    }
    let u1 = d.u().coeff_or(1, &zero);
    let u0 = d.u().coeff_or(0, &zero);
    let k2 = u1.neg();
    let k3 = u0.clone();
    let den = u1.square().sub(&u0.double().double());
    let k4 = if den.is_zero() {
        let two = one.double();
        let r = k2.div(&two).expect("odd characteristic");
        let fr = f.eval(&r);
        let c = |i: usize| f.coeff_or(i, &zero);
        let r2 = r.square();
        let df0 = c(2)
            .double()
            .add(&c(3).mul(&r).double())
            .add(&c(4).mul(&r2).double().double())
            .add(&r.mul(&r2).double().double());
        let fp = f.derivative();
        let f1 = fp.eval(&r);
        let f2 = fp.derivative().eval(&r);
        f1.square()
            .div(&fr)
            .expect("a squarefree f cannot vanish at a doubled abscissa")
            .sub(&f2)
            .sub(&df0)
            .div(&two.double())
            .expect("odd characteristic")
    } else {
        let v1 = d.v().coeff_or(1, &zero);
        let v0 = d.v().coeff_or(0, &zero);
        let f0 = f0_eval(f, &k2, &k3);
        let cross = v1.square().mul(&u0).sub(&v1.mul(&v0).mul(&u1)).add(&v0.square());
        f0.sub(&cross.double())
            .div(&den)
            .expect("denominator checked nonzero")
    };
    [one, k2, k3, k4]
}

/// `kappa4` of the split class `[(x1,y1) + (x2,y2) - 2 inf]` straight from
/// the point coordinates; `None` when `x1 = x2` (the degenerate chart).
pub fn kappa4_from_points<K: FieldElement>(
    f: &Poly<K>,
    x1: &K,
    y1: &K,
    x2: &K,
    y2: &K,
) -> Option<K> {
    let dx = x1.sub(x2);
    if dx.is_zero() {
        return None;
    }
    let a = x1.add(x2);
    let b = x1.mul(x2);
    let f0 = f0_eval(f, &a, &b);
    Some(
        f0.sub(&y1.mul(y2).double())
            .div(&dx.square())
            .expect("dx nonzero"),
    )
}
