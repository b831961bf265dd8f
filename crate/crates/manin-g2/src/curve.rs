//! Genus-2 curves `y^2 = f(x)` with `f` a monic squarefree quintic.
//!
//! The odd-degree model has a single point at infinity, so every divisor
//! class has a unique reduced Mumford representative and the theta divisor is
//! the image of the curve under `P -> [P - infinity]`. [`CurveParams`] owns
//! the base field, the coefficients `a0..a4`, and the shared function-field
//! context used by divisor arithmetic with generic points.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extension::Embedding;
use crate::field::{quadratic_character, FieldSpec, Fq};
use crate::hyper::HyperCtx;
use crate::poly::Poly;
use crate::traits::FieldElement;

/// A genus-2 curve `y^2 = x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0`.
#[derive(Debug, Clone)]
pub struct CurveParams {
    field: Arc<FieldSpec>,
    f: Poly<Fq>,
    ctx: Arc<HyperCtx>,
}

impl CurveParams {
    /// Build a curve from the five non-leading coefficients, ascending
    /// (`[a0, a1, a2, a3, a4]`). Fails with [`Error::NotSquarefree`] when
    /// `f` has a repeated root (the curve would be singular).
    pub fn new(field: &Arc<FieldSpec>, coeffs: [Fq; 5]) -> Result<Self> {
        let mut cs: Vec<Fq> = coeffs.to_vec();
        for c in &cs {
            assert!(c.spec() == field, "coefficient not in the base field");
        }
        cs.push(field.one());
        let f = Poly::from_coeffs(cs);
        if !f.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let ctx = HyperCtx::new(Arc::clone(field), f.clone());
        Ok(CurveParams {
            field: Arc::clone(field),
            f,
            ctx,
        })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(field: &Arc<FieldSpec>, coeffs: [i64; 5]) -> Result<Self> {
        Self::new(field, coeffs.map(|c| field.from_int(c)))
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// The defining polynomial `f` (monic quintic).
    pub fn f(&self) -> &Poly<Fq> {
        &self.f
    }

    /// Coefficient `a_i` of `x^i`, `i <= 4`.
    pub fn a(&self, i: usize) -> Fq {
        assert!(i <= 4);
        self.f.coeff_or(i, &self.field.zero())
    }

    /// The five non-leading coefficients, ascending.
    pub fn coeffs(&self) -> [Fq; 5] {
        [self.a(0), self.a(1), self.a(2), self.a(3), self.a(4)]
    }

    /// The shared function-field context `F_q(x)[y]/(y^2 - f)`.
    pub fn hyper_ctx(&self) -> &Arc<HyperCtx> {
        &self.ctx
    }

    /// The quadratic twist by an explicit non-square `d`:
    /// `a_i' = a_i * d^(5-i)`, the coefficient transport of
    /// `(x, y) -> (d x, d^(5/2) y)` on points over the quadratic extension.
    pub fn twist_by(&self, d: &Fq) -> Result<CurveParams> {
        if quadratic_character(d) != -1 {
            return Err(Error::NotANonSquare);
        }
        let coeffs = [
            self.a(0).mul(&d.pow(5)),
            self.a(1).mul(&d.pow(4)),
            self.a(2).mul(&d.pow(3)),
            self.a(3).mul(&d.pow(2)),
            self.a(4).mul(d),
        ];
        Self::new(&self.field, coeffs)
    }

    /// The quadratic twist by the first non-square in the element ordering.
    pub fn quadratic_twist(&self) -> Result<CurveParams> {
        self.twist_by(&self.field.first_non_square()?)
    }

    /// The same curve over an extension field.
    pub fn base_extend(&self, emb: &Embedding) -> Result<CurveParams> {
        assert!(emb.src() == &self.field, "embedding source mismatch");
        let a = self.coeffs().map(|c| emb.map(&c));
        Self::new(emb.dst(), a)
    }
}

impl PartialEq for CurveParams {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.f == other.f
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {} over {}", self.f, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Arc<FieldSpec> {
        FieldSpec::prime(7).unwrap()
    }

    #[test]
    fn squarefree_validation() {
        let f = f7();
        // x^5 + 5x is fine
        assert!(CurveParams::from_ints(&f, [0, 5, 0, 0, 0]).is_ok());
        // x^5 has a quintuple root
        assert_eq!(
            CurveParams::from_ints(&f, [0, 0, 0, 0, 0]).unwrap_err(),
            Error::NotSquarefree
        );
        // (x-1)^2 divides x^5 - 2x^4 + ... : use f = x^4(x-2)+... simpler:
        // x^5 + 5x^4 = x^4(x+5) is not squarefree
        assert_eq!(
            CurveParams::from_ints(&f, [0, 0, 0, 0, 5]).unwrap_err(),
            Error::NotSquarefree
        );
    }

    #[test]
    fn twist_needs_a_non_square() {
        let f = f7();
        let curve = CurveParams::from_ints(&f, [0, 5, 0, 0, 0]).unwrap();
        // 2 = 3^2 is a square mod 7
        assert_eq!(
            curve.twist_by(&f.from_int(2)).unwrap_err(),
            Error::NotANonSquare
        );
        // 3 is not
        let tw = curve.twist_by(&f.from_int(3)).unwrap();
        // a1' = 5 * 3^4 = 405 = 6 mod 7
        assert_eq!(tw.a(1), f.from_int(6));
        assert_eq!(tw.a(0), f.zero());
        // deterministic default: first non-square mod 7 is 3
        assert_eq!(curve.quadratic_twist().unwrap(), tw);
    }

    #[test]
    fn base_extension_preserves_the_equation() {
        let f7 = f7();
        let f49 = FieldSpec::new(7, 2, None).unwrap();
        let emb = Embedding::new(&f7, &f49).unwrap();
        let curve = CurveParams::from_ints(&f7, [3, 5, 0, 1, 0]).unwrap();
        let big = curve.base_extend(&emb).unwrap();
        assert_eq!(big.field().order(), 49);
        assert_eq!(big.a(0), f49.from_int(3));
        assert_eq!(big.a(3), f49.from_int(1));
    }

    #[test]
    fn display_shows_the_equation() {
        let curve = CurveParams::from_ints(&f7(), [0, 5, 0, 0, 0]).unwrap();
        assert_eq!(curve.to_string(), "y^2 = x^5 + 5*x over F_7");
    }
}
