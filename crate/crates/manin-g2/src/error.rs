//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building fields, curves, and reports.
///
/// Arithmetic on well-formed values never returns these: operations on
/// mismatched fields are programmer errors and panic instead. The variants
/// here surface at construction and query boundaries, where the inputs may
/// come from the command line or from files.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Characteristic 2 is outside the scope of the library: the curve model
    /// `y^2 = f(x)` and the doubled coordinates both divide by 2.
    #[error("characteristic 2 is not supported (p must be an odd prime)")]
    EvenCharacteristic,

    /// The requested characteristic is composite or < 2.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A custom modulus was rejected: wrong degree, non-monic, or reducible.
    #[error("modulus is not a monic irreducible of the requested degree: {0}")]
    ReducibleModulus(String),

    /// The field (or an enumeration over it) is too large for exhaustive work.
    #[error("field with {0} elements exceeds the supported enumeration bound {1}")]
    FieldTooLarge(u128, u128),

    /// Division by the zero element of a field.
    #[error("division by zero")]
    DivisionByZero,

    /// Two operands belong to different fields.
    #[error("operands belong to different fields: {0} vs {1}")]
    FieldMismatch(String, String),

    /// A rational function was built with a zero denominator.
    #[error("zero denominator in rational function")]
    ZeroDenominator,

    /// Both components of a function-field element inversion vanished.
    #[error("cannot invert the zero element of the function field")]
    BothZero,

    /// `f` must be squarefree for `y^2 = f(x)` to define a smooth curve.
    #[error("curve polynomial is not squarefree")]
    NotSquarefree,

    /// Leading coefficient was not invertible during polynomial division.
    /// Cannot happen over a field; reaching it signals internal inconsistency.
    #[error("non-invertible leading coefficient in polynomial division")]
    NonInvertibleLeadingCoefficient,

    /// The Kummer coordinate has a pole: the divisor class lies on the theta
    /// divisor (Mumford `u` of degree <= 1).
    #[error("kappa_4 has a pole on the theta divisor")]
    PoleOfKappa4,

    /// The Kummer coordinate was requested at the zero class.
    #[error("kappa coordinates are undefined at the zero class")]
    ZeroClass,

    /// The denominator u1^2 - 4*u0 of the Kummer coordinate vanished
    /// (the two points of the divisor share an x-coordinate).
    #[error("degenerate denominator: support points share an x-coordinate")]
    DegenerateDenominator,

    /// A map expected to be non-constant was constant.
    #[error("the map is constant; the degree sequence entry is 0 by convention")]
    ConstantMap,

    /// The image curve lies inside the pole or zero locus of kappa_4, so the
    /// direct degree computation does not apply (a translation is needed).
    #[error("image lies in the pole or zero locus of kappa_4")]
    PoleOrZeroLocus,

    /// A function-field value expected to descend to a rational function in x
    /// kept a nonzero y-component, or reduced to a nonzero constant.
    #[error("value did not reduce to a non-constant rational function in x: {0}")]
    NonRationalValue(String),

    /// No Weierstrass translation produced a usable degree. The theory
    /// guarantees one exists; reaching this is an internal error.
    #[error("no admissible Weierstrass translation for n = {0}")]
    NoValidTranslation(i64),

    /// A quadratic twist was requested with a square scaling factor.
    #[error("twist factor is a square (or zero); a non-square is required")]
    NotANonSquare,

    /// A Weierstrass translation was requested at a non-root of f.
    #[error("x = {0} is not a root of f; not a Weierstrass point")]
    NotWeierstrass(String),

    /// The scan found a constant map but the surrounding bookkeeping
    /// (q = n^2, point counts, neighbour images) failed to confirm it.
    #[error("constant-map bookkeeping failed: {0}")]
    SpecialCaseInconsistent(String),

    /// Malformed text input (curve spec string, polynomial, field element).
    #[error("parse error: {0}")]
    Parse(String),
}
