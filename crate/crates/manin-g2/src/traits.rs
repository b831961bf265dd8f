//! The coefficient-field abstraction.
//!
//! All polynomial, rational-function, and divisor arithmetic in this crate is
//! generic over [`FieldElement`]. The two implementors are the finite-field
//! element [`crate::field::Fq`] and the hyperelliptic function-field element
//! [`crate::hyper::HyperElt`]; the same Cantor code therefore adds divisors
//! over F_q and over F_q(H) without duplication.
//!
//! Fields here are runtime objects (a prime, a modulus, a curve), so elements
//! carry their context and identities are derived from an existing element
//! rather than from the type alone: `a.zero()` is the zero of *a's* field.

/// An element of a field, carrying enough context to produce the identities
/// of its own field.
///
/// Binary operations panic if the operands belong to different fields; mixing
/// fields is a programmer error, not a runtime condition. Checked entry
/// points for user-facing input live on the concrete types.
pub trait FieldElement: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    /// Additive identity of this element's field.
    fn zero(&self) -> Self;

    /// Multiplicative identity of this element's field.
    fn one(&self) -> Self;

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self;

    fn neg(&self) -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Image of the integer `n` in this element's field.
    fn from_int(&self, n: i64) -> Self;

    /// `self / rhs`, `None` when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// `self * self`.
    fn square(&self) -> Self {
        self.mul(self)
    }

    /// `self * 2` without constructing the constant 2 separately.
    fn double(&self) -> Self {
        self.add(self)
    }
}
