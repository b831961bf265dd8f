//! Serialization of verification reports.
//!
//! The wire format is a single JSON object:
//!
//! ```json
//! {
//!   "curve": {"p": 7, "k": 1, "f": ["0", "5", "0", "0", "0"]},
//!   "counts": {"n_q": 8, "n_q2": 78, "n_jac": 64},
//!   "T": 0,
//!   "delta": [{"n": -6, "value": 86, "path": "direct"}, ...],
//!   "checks": {"basic_identity": true, ..., "order_annihilation": true},
//!   "special_case": null,
//!   "hasse_weil": {"holds": true, "discriminant": -112}
//! }
//! ```
//!
//! Curve coefficients are ascending (`a0` first) in the self-delimiting
//! element text format: plain integers in a prime field, parenthesized
//! coordinate vectors in an extension, read relative to the field's
//! defining modulus. Identical inputs produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::counting::VerificationReport;
use crate::field::element_text;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub p: u64,
    pub k: usize,
    /// Ascending coefficients `a0..a4` of `f(x) = x^5 + a4 x^4 + ... + a0`.
    pub f: [String; 5],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsJson {
    pub n_q: u64,
    pub n_q2: u64,
    pub n_jac: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaEntryJson {
    pub n: i64,
    pub value: u64,
    /// `"direct"`, `"constant-map"`, or `"translated(w=..., m=...)"`.
    pub path: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksJson {
    pub basic_identity: bool,
    pub closed_form: bool,
    pub delta_minus1: bool,
    pub delta_0: bool,
    pub delta_1: bool,
    pub gcd_degree: bool,
    pub twist_sum: bool,
    pub order_annihilation: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCaseJson {
    pub n: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseWeilJson {
    pub holds: bool,
    pub discriminant: i64,
}

/// The complete report object; field order here is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub curve: CurveJson,
    pub counts: CountsJson,
    #[serde(rename = "T")]
    pub t: i64,
    pub delta: Vec<DeltaEntryJson>,
    pub checks: ChecksJson,
    pub special_case: Option<SpecialCaseJson>,
    pub hasse_weil: HasseWeilJson,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        let field = r.curve.field();
        let coeffs = r.curve.coeffs();
        ReportJson {
            curve: CurveJson {
                p: field.characteristic(),
                k: field.degree(),
                f: std::array::from_fn(|i| element_text(&coeffs[i])),
            },
            counts: CountsJson {
                n_q: r.counts.n_q,
                n_q2: r.counts.n_q2,
                n_jac: r.counts.n_jac,
            },
            t: r.counts.trace,
            delta: r
                .deltas
                .iter()
                .map(|dv| DeltaEntryJson {
                    n: dv.n,
                    value: dv.value,
                    path: dv.path.to_string(),
                })
                .collect(),
            checks: ChecksJson {
                basic_identity: r.checks.basic_identity,
                closed_form: r.checks.closed_form,
                delta_minus1: r.checks.delta_minus1,
                delta_0: r.checks.delta_0,
                delta_1: r.checks.delta_1,
                gcd_degree: r.checks.gcd_degree,
                twist_sum: r.checks.twist_sum,
                order_annihilation: r.checks.order_annihilation,
            },
            special_case: r.special_case.map(|sc| SpecialCaseJson { n: sc.n }),
            hasse_weil: HasseWeilJson {
                holds: r.hasse_weil.holds,
                discriminant: r.hasse_weil.discriminant,
            },
        }
    }
}

impl ReportJson {
    /// Pretty-printed JSON text; deterministic for identical reports.
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Parse report JSON text back into the typed object.
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::verify_curve;
    use crate::curve::CurveParams;
    use crate::field::FieldSpec;

    #[test]
    fn report_round_trips_and_is_deterministic() {
        let f7 = FieldSpec::prime(7).unwrap();
        let curve = CurveParams::from_ints(&f7, [0, 5, 0, 0, 0]).unwrap();
        let report = verify_curve(&curve, (-6, 6)).unwrap();
        let json = ReportJson::from(&report);
        assert_eq!(json.curve.p, 7);
        assert_eq!(json.curve.k, 1);
        assert_eq!(json.curve.f[1], "5");
        assert_eq!(json.t, 0);
        assert_eq!(json.counts.n_jac, 64);
        assert_eq!(json.delta.len(), 13);
        assert_eq!(json.special_case, None);
        assert_eq!(json.hasse_weil.discriminant, -112);

        let text = json.render();
        assert_eq!(ReportJson::parse(&text).unwrap(), json);
        // recomputing from scratch yields byte-identical output
        let again = ReportJson::from(&verify_curve(&curve, (-6, 6)).unwrap());
        assert_eq!(again.render(), text);
    }

    #[test]
    fn extension_report_prints_vector_coefficients() {
        let f49 = FieldSpec::new(7, 2, None).unwrap();
        let curve = CurveParams::from_ints(&f49, [0, 5, 0, 0, 0]).unwrap();
        let report = verify_curve(&curve, (-2, 2)).unwrap();
        let json = ReportJson::from(&report);
        assert_eq!(json.curve.k, 2);
        assert_eq!(json.curve.f[1], "(5,0)");
        assert_eq!(json.special_case, Some(SpecialCaseJson { n: 7 }));
        assert_eq!(json.t, -28);
        let text = json.render();
        assert_eq!(ReportJson::parse(&text).unwrap(), json);
    }

    #[test]
    fn malformed_json_is_an_error_not_a_panic() {
        for bad in ["", "{", "[]", "{\"curve\": 3}", "null", "{\"T\": true}"] {
            assert!(ReportJson::parse(bad).is_err(), "{bad:?}");
        }
    }
}
