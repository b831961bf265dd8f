//! Embeddings `F_{p^k} -> F_{p^{km}}` between concrete finite fields.
//!
//! An embedding is determined by where it sends the generator of the small
//! field: any root of the small field's modulus inside the big field works,
//! and all such roots are Frobenius conjugates of one another. To keep runs
//! reproducible the constructor finds every root and picks the
//! lexicographically least one (same element ordering as
//! [`FieldSpec::elements`]).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Fq};
use crate::poly::{roots_in_field, Poly};
use crate::rational::RatFn;
use crate::traits::FieldElement;

/// A field homomorphism from `src` into `dst`, applied coefficientwise to
/// derived objects (polynomials, rational functions).
#[derive(Debug, Clone)]
pub struct Embedding {
    src: Arc<FieldSpec>,
    dst: Arc<FieldSpec>,
    /// Images of the powers `gen^0, ..., gen^(k-1)` of the source generator.
    powers: Vec<Fq>,
}

impl Embedding {
    /// The identity embedding of a field into itself.
    pub fn identity(field: &Arc<FieldSpec>) -> Self {
        let k = field.degree();
        let gen = field.generator();
        let mut powers = Vec::with_capacity(k);
        let mut acc = field.one();
        for _ in 0..k {
            powers.push(acc.clone());
            acc = acc.mul(&gen);
        }
        Embedding {
            src: Arc::clone(field),
            dst: Arc::clone(field),
            powers,
        }
    }

    /// Embed `src` into `dst`; requires equal characteristic and
    /// `src.degree() | dst.degree()`.
    pub fn new(src: &Arc<FieldSpec>, dst: &Arc<FieldSpec>) -> Result<Self> {
        if src == dst {
            return Ok(Self::identity(src));
        }
        if src.characteristic() != dst.characteristic()
            || dst.degree() % src.degree() != 0
        {
            return Err(Error::FieldMismatch(src.to_string(), dst.to_string()));
        }
        let k = src.degree();
        if k == 1 {
            // the prime subfield maps canonically
            return Ok(Embedding {
                src: Arc::clone(src),
                dst: Arc::clone(dst),
                powers: vec![dst.one()],
            });
        }
        // lift the source modulus into dst and take its least root
        let g = Poly::from_coeffs(
            src.modulus()
                .iter()
                .map(|&c| dst.from_int(c as i64))
                .collect(),
        );
        let roots = roots_in_field(&g)?;
        debug_assert_eq!(roots.len(), k, "modulus must split in any multiple extension");
        let r = roots[0].clone();
        let mut powers = Vec::with_capacity(k);
        let mut acc = dst.one();
        for _ in 0..k {
            powers.push(acc.clone());
            acc = acc.mul(&r);
        }
        Ok(Embedding {
            src: Arc::clone(src),
            dst: Arc::clone(dst),
            powers,
        })
    }

    pub fn src(&self) -> &Arc<FieldSpec> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FieldSpec> {
        &self.dst
    }

    /// Image of a single element.
    pub fn map(&self, a: &Fq) -> Fq {
        assert!(a.spec() == &self.src, "element is not in the source field");
        let mut acc = self.dst.zero();
        for (c, pw) in a.coeffs().iter().zip(&self.powers) {
            if *c != 0 {
                acc = acc.add(&pw.mul(&self.dst.from_int(*c as i64)));
            }
        }
        acc
    }

    /// Coefficientwise image of a polynomial.
    pub fn map_poly(&self, p: &Poly<Fq>) -> Poly<Fq> {
        p.map_coeffs(|c| self.map(c))
    }

    /// Coefficientwise image of a rational function.
    pub fn map_ratfn(&self, r: &RatFn<Fq>) -> RatFn<Fq> {
        r.map_coeffs(|c| self.map(c))
    }
}
