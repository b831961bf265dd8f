//! Point counting, Jacobian orders, quadratic twists, the constant-map
//! (supersingular) record, and the per-curve verification report with its
//! sweep driver.
//!
//! Counting is plain enumeration: `#H = 1 + sum_x (1 + chi(f(x)))` with
//! `chi` the quadratic character, guarded by the crate's enumeration bound.
//! The Jacobian order comes from the zeta identity
//! `#J = (#H(F_q)^2 + #H(F_{q^2}))/2 - q` and is validated by letting it
//! annihilate seeded random divisor classes. A report never aborts on a
//! failed identity: every violation is recorded, because a full failure map
//! is more useful than fail-fast when sweeping curve families.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::curve::CurveParams;
use crate::error::{Error, Result};
use crate::extension::Embedding;
use crate::field::{quadratic_character, FieldSpec, Fq, ENUMERATION_LIMIT};
use crate::jacobian::{Jacobian, MumfordDivisor};
use crate::manin::{psi_minus1_closed_form, DeltaPath, DeltaSequence, DeltaValue};
use crate::traits::FieldElement;

/// Seed for the per-curve random divisors of the order-annihilation check;
/// fixed so sweep results are reproducible and independent of scheduling.
const ANNIHILATION_SEED: u64 = 0x616e_6e69;

/// Point counts of one curve and the trace data derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountData {
    /// `#H(F_q)`: affine points plus the single point at infinity.
    pub n_q: u64,
    /// `#H(F_{q^2})`.
    pub n_q2: u64,
    /// `#J(F_q) = (n_q^2 + n_q2)/2 - q`.
    pub n_jac: u64,
    /// `T = q + 1 - n_q`.
    pub trace: i64,
}

/// `#H(F_q)` by direct enumeration.
pub fn count_points(curve: &CurveParams) -> Result<u64> {
    count_points_over_extension(curve, 1)
}

/// `#H(F_{q^m})` by enumeration over the degree-`m` extension.
pub fn count_points_over_extension(curve: &CurveParams, m: usize) -> Result<u64> {
    assert!(m >= 1, "extension degree must be positive");
    let lifted;
    let counted = if m == 1 {
        curve
    } else {
        let base = curve.field();
        let big = FieldSpec::new(base.characteristic(), base.degree() * m, None)?;
        let emb = Embedding::new(base, &big)?;
        lifted = curve.base_extend(&emb)?;
        &lifted
    };
    let mut count: i64 = 1;
    for x in counted.field().elements()? {
        count += 1 + i64::from(quadratic_character(&counted.f().eval(&x)));
    }
    Ok(count as u64)
}

/// `#J(F_q)` from the curve counts over `F_q` and `F_{q^2}`.
pub fn jacobian_order(n_q: u64, n_q2: u64, q: u64) -> u64 {
    let num = n_q * n_q + n_q2;
    debug_assert_eq!(num % 2, 0, "the zeta identity always produces an even sum");
    num / 2 - q
}

/// Counts over `F_q` and `F_{q^2}` plus the derived Jacobian order and trace.
pub fn count_data(curve: &CurveParams) -> Result<CountData> {
    let q = curve.field().order();
    let n_q = count_points(curve)?;
    let n_q2 = count_points_over_extension(curve, 2)?;
    Ok(CountData {
        n_q,
        n_q2,
        n_jac: jacobian_order(n_q, n_q2, q),
        trace: q as i64 + 1 - n_q as i64,
    })
}

/// Every affine point of the curve: Weierstrass points once, all others in
/// `(y, -y)` pairs. Built from a single table of squares, O(q) time and
/// memory.
pub fn point_table(curve: &CurveParams) -> Result<Vec<(Fq, Fq)>> {
    let field = curve.field();
    let mut sqrt: BTreeMap<Vec<u64>, Vec<Fq>> = BTreeMap::new();
    for y in field.elements()? {
        if y.is_zero() {
            continue;
        }
        sqrt.entry(y.square().order_key().to_vec()).or_default().push(y);
    }
    let mut pts = Vec::new();
    for x in field.elements()? {
        let fx = curve.f().eval(&x);
        if fx.is_zero() {
            pts.push((x, field.zero()));
        } else if let Some(ys) = sqrt.get(fx.order_key()) {
            for y in ys {
                pts.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(pts)
}

/// A seeded random divisor class: the sum of two random point classes,
/// which is uniform enough to exercise the whole group.
pub fn random_divisor(
    jac: &Jacobian<Fq>,
    pts: &[(Fq, Fq)],
    rng: &mut ChaCha12Rng,
) -> MumfordDivisor<Fq> {
    assert!(!pts.is_empty(), "cannot sample classes without affine points");
    let pick = |rng: &mut ChaCha12Rng| {
        let (x, y) = &pts[rng.gen_range(0..pts.len())];
        jac.from_point(x, y)
    };
    let a = pick(rng);
    let b = pick(rng);
    jac.add(&a, &b)
}

/// Whether `order * D = 0` for `trials` seeded random classes `D`.
/// Vacuously true when the curve has no affine rational points.
pub fn order_annihilates(curve: &CurveParams, order: u64, trials: usize) -> Result<bool> {
    let pts = point_table(curve)?;
    if pts.is_empty() {
        return Ok(true);
    }
    let jac = Jacobian::new(curve.f().clone());
    let mut rng = ChaCha12Rng::seed_from_u64(ANNIHILATION_SEED);
    for _ in 0..trials {
        let d = random_divisor(&jac, &pts, &mut rng);
        if !jac.scalar_mul(order as i64, &d).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The record of a constant member of the family: `Psi_n` is the zero
/// morphism, which forces the Frobenius to act as `-[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialCase {
    /// The index with `Psi_n` constant; `q = n^2` and `#H = q + 1 + 4n`.
    pub n: i64,
}

/// Largest integer whose square is `<= q`.
fn integer_sqrt(q: u64) -> u64 {
    let mut s = (q as f64).sqrt() as u64;
    while s * s > q {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= q {
        s += 1;
    }
    s
}

/// Scan for a constant member among the computed window plus the only
/// theoretically possible indices `n = +-sqrt(q)`. When one is found, the
/// whole story must check out — `q = n^2`, `#H = q + 1 + 4n`, the neighbor
/// members equal to `+-iota`, and neighbor degrees 0 and 2 — otherwise the
/// scan reports an internal inconsistency rather than a half-true record.
pub fn special_case_scan(
    seq: &DeltaSequence,
    deltas: &[DeltaValue],
    n_q: u64,
) -> Result<Option<SpecialCase>> {
    let q = seq.curve().field().order();
    let fam = seq.family();

    let mut constants: Vec<i64> = deltas
        .iter()
        .filter(|dv| dv.path == DeltaPath::Constant)
        .map(|dv| dv.n)
        .collect();
    let s = integer_sqrt(q);
    if s * s == q {
        for extra in [s as i64, -(s as i64)] {
            if !deltas.iter().any(|dv| dv.n == extra)
                && fam.psi(extra).is_zero()
                && !constants.contains(&extra)
            {
                constants.push(extra);
            }
        }
    }
    let Some(&n) = constants.first() else {
        return Ok(None);
    };
    if constants.len() > 1 {
        return Err(Error::SpecialCaseInconsistent(format!(
            "several constant members: n = {constants:?}"
        )));
    }

    let mut problems = Vec::new();
    if s * s != q || n.unsigned_abs() != s {
        problems.push(format!("q = {q} is not n^2 for n = {n}"));
    }
    let expected_count = q as i64 + 1 + 4 * n;
    if expected_count < 0 || n_q != expected_count as u64 {
        problems.push(format!("#H = {n_q}, expected q + 1 + 4n = {expected_count}"));
    }
    let plus = fam.psi(n + 1);
    let minus = fam.psi(n - 1);
    if plus != *fam.iota() || minus != fam.jacobian().neg(fam.iota()) {
        problems.push("neighbor members are not +-iota".to_string());
    }
    for (m, expect) in [(n, 0u64), (n - 1, 2), (n + 1, 2)] {
        let value = match deltas.iter().find(|dv| dv.n == m) {
            Some(dv) => dv.value,
            None => seq.delta(m)?.value,
        };
        if value != expect {
            problems.push(format!("delta_{m} = {value}, expected {expect}"));
        }
    }
    if !problems.is_empty() {
        return Err(Error::SpecialCaseInconsistent(problems.join("; ")));
    }
    Ok(Some(SpecialCase { n }))
}

/// The named identity checks of one report; `true` means verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportChecks {
    /// `delta_{n-1} + delta_{n+1} = 2 delta_n + 4` at every interior index.
    pub basic_identity: bool,
    /// `delta_n = 2n^2 + Tn + 2q` across the computed window.
    pub closed_form: bool,
    /// `delta_{-1} = #H + q + 1`.
    pub delta_minus1: bool,
    /// `delta_0 = 2q`.
    pub delta_0: bool,
    /// `delta_1 = 3(q + 1) - #H`.
    pub delta_1: bool,
    /// `deg gcd(nu, eta) = 2q + 1 - #H` for the literal closed-form pair.
    pub gcd_degree: bool,
    /// `#H + #H_twist = 2q + 2`.
    pub twist_sum: bool,
    /// The Jacobian order annihilates seeded random classes.
    pub order_annihilation: bool,
}

impl ReportChecks {
    pub fn all_pass(&self) -> bool {
        self.basic_identity
            && self.closed_form
            && self.delta_minus1
            && self.delta_0
            && self.delta_1
            && self.gcd_degree
            && self.twist_sum
            && self.order_annihilation
    }
}

/// The Hasse-Weil verdict: `holds` iff `T^2 <= 16q`; the discriminant is
/// `T^2 - 16q`, which must moreover avoid `{1, 2, 3}` and can only vanish
/// in the constant-map case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HasseWeil {
    pub holds: bool,
    pub discriminant: i64,
}

/// Everything `verify_curve` establishes about one curve. Failed checks are
/// both reflected in the booleans and written out in `failures`; an empty
/// `failures` list is the pass criterion.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub curve: CurveParams,
    pub counts: CountData,
    pub deltas: Vec<DeltaValue>,
    pub checks: ReportChecks,
    pub special_case: Option<SpecialCase>,
    pub hasse_weil: HasseWeil,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The delta value at one index, reusing the computed window when possible.
fn delta_at(seq: &DeltaSequence, deltas: &[DeltaValue], n: i64) -> Result<u64> {
    match deltas.iter().find(|dv| dv.n == n) {
        Some(dv) => Ok(dv.value),
        None => Ok(seq.delta(n)?.value),
    }
}

/// Run every check on one curve over the window `n_range`. Failed identities
/// are collected in the report; only infrastructure problems (fields too
/// large to enumerate, internal inconsistencies) surface as errors.
pub fn verify_curve(curve: &CurveParams, n_range: (i64, i64)) -> Result<VerificationReport> {
    assert!(n_range.0 <= n_range.1, "empty verification window");
    let q = curve.field().order();
    let counts = count_data(curve)?;
    let t = counts.trace;
    let mut failures = Vec::new();

    let seq = DeltaSequence::new(curve);
    let deltas = seq.delta_range(n_range.0, n_range.1)?;

    let mut closed_form = true;
    for dv in &deltas {
        let want = 2 * dv.n * dv.n + t * dv.n + 2 * q as i64;
        if dv.value as i64 != want {
            closed_form = false;
            failures.push(format!(
                "delta series deviates from 2n^2 + Tn + 2q at n = {}: got {}, want {want}",
                dv.n, dv.value
            ));
        }
    }

    let mut basic_identity = true;
    for w in deltas.windows(3) {
        if w[0].value + w[2].value != 2 * w[1].value + 4 {
            basic_identity = false;
            failures.push(format!(
                "basic identity fails at n = {}: {} + {} != 2*{} + 4",
                w[1].n, w[0].value, w[2].value, w[1].value
            ));
        }
    }

    let d_m1 = delta_at(&seq, &deltas, -1)?;
    let d_0 = delta_at(&seq, &deltas, 0)?;
    let d_1 = delta_at(&seq, &deltas, 1)?;
    let delta_minus1 = d_m1 == counts.n_q + q + 1;
    if !delta_minus1 {
        failures.push(format!(
            "delta_-1 = {d_m1}, expected #H + q + 1 = {}",
            counts.n_q + q + 1
        ));
    }
    let delta_0 = d_0 == 2 * q;
    if !delta_0 {
        failures.push(format!("delta_0 = {d_0}, expected 2q = {}", 2 * q));
    }
    let want_1 = 3 * (q as i64 + 1) - counts.n_q as i64;
    let delta_1 = d_1 as i64 == want_1;
    if !delta_1 {
        failures.push(format!("delta_1 = {d_1}, expected 3(q+1) - #H = {want_1}"));
    }

    let (nu, eta) = psi_minus1_closed_form(curve);
    let gcd_deg = nu.gcd(&eta).degree() as i64;
    let want_gcd = 2 * q as i64 + 1 - counts.n_q as i64;
    let gcd_degree = gcd_deg == want_gcd;
    if !gcd_degree {
        failures.push(format!(
            "deg gcd(nu, eta) = {gcd_deg}, expected 2q + 1 - #H = {want_gcd}"
        ));
    }

    let n_tw = count_points(&curve.quadratic_twist()?)?;
    let twist_sum = counts.n_q + n_tw == 2 * q + 2;
    if !twist_sum {
        failures.push(format!(
            "#H + #H_twist = {} + {n_tw}, expected 2q + 2 = {}",
            counts.n_q,
            2 * q + 2
        ));
    }

    let order_annihilation = order_annihilates(curve, counts.n_jac, 20)?;
    if !order_annihilation {
        failures.push(format!(
            "#J = {} failed to annihilate a random divisor class",
            counts.n_jac
        ));
    }

    let special_case = special_case_scan(&seq, &deltas, counts.n_q)?;
    let discriminant = t * t - 16 * q as i64;
    let holds = discriminant <= 0;
    if !holds {
        failures.push(format!(
            "Hasse-Weil violated: T^2 - 16q = {discriminant} > 0 (T = {t})"
        ));
    }
    if special_case.is_some() && discriminant != 0 {
        failures.push(format!(
            "constant member found but T^2 - 16q = {discriminant} != 0"
        ));
    }
    if (1..=3).contains(&discriminant) {
        failures.push(format!(
            "impossible discriminant T^2 - 16q = {discriminant} (must avoid 1, 2, 3)"
        ));
    }

    Ok(VerificationReport {
        curve: curve.clone(),
        counts,
        deltas,
        checks: ReportChecks {
            basic_identity,
            closed_form,
            delta_minus1,
            delta_0,
            delta_1,
            gcd_degree,
            twist_sum,
            order_annihilation,
        },
        special_case,
        hasse_weil: HasseWeil { holds, discriminant },
        failures,
    })
}

/// How a sweep picks its curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SamplePolicy {
    /// Every monic squarefree quintic over the field (guarded: `q^5` must
    /// stay within the enumeration bound).
    Exhaustive,
    /// A seeded random sample of distinct monic squarefree quintics.
    Sample { size: usize, seed: u64 },
}

/// Aggregate outcome of a sweep; `reports` keeps per-curve detail in the
/// deterministic enumeration order.
#[derive(Debug)]
pub struct SweepOutcome {
    pub q: u64,
    pub tested: usize,
    pub passed: usize,
    pub special_cases: usize,
    /// Curve description plus its failure lines, for every failing curve.
    pub failures: Vec<(String, Vec<String>)>,
    pub reports: Vec<VerificationReport>,
}

/// Every monic squarefree quintic `x^5 + a4 x^4 + ... + a0` over the field,
/// in lexicographic coefficient order `(a0, a1, a2, a3, a4)`.
pub fn all_squarefree_quintics(field: &Arc<FieldSpec>) -> Result<Vec<CurveParams>> {
    let q = field.order() as u128;
    let candidates = q.pow(5);
    if candidates > ENUMERATION_LIMIT as u128 {
        return Err(Error::FieldTooLarge(candidates, ENUMERATION_LIMIT as u128));
    }
    let elems: Vec<Fq> = field.elements()?.collect();
    let mut out = Vec::new();
    let mut idx = [0usize; 5];
    loop {
        let coeffs: [Fq; 5] = std::array::from_fn(|i| elems[idx[i]].clone());
        if let Ok(curve) = CurveParams::new(field, coeffs) {
            out.push(curve);
        }
        // advance the odometer, most significant digit last (a4 varies slowest)
        let mut place = 0;
        loop {
            if place == 5 {
                return Ok(out);
            }
            idx[place] += 1;
            if idx[place] < elems.len() {
                break;
            }
            idx[place] = 0;
            place += 1;
        }
    }
}

/// A seeded sample of `size` distinct monic squarefree quintics. The
/// attempt budget is generous but bounded, so a `size` close to the whole
/// population may return fewer curves instead of spinning.
pub fn sample_squarefree_quintics(
    field: &Arc<FieldSpec>,
    size: usize,
    seed: u64,
) -> Result<Vec<CurveParams>> {
    let elems: Vec<Fq> = field.elements()?.collect();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0usize;
    let budget = size.saturating_mul(10_000).max(10_000);
    while out.len() < size && attempts < budget {
        attempts += 1;
        let coeffs: [Fq; 5] =
            std::array::from_fn(|_| elems[rng.gen_range(0..elems.len())].clone());
        let key: Vec<u64> = coeffs.iter().flat_map(|c| c.order_key().to_vec()).collect();
        if seen.contains(&key) {
            continue;
        }
        if let Ok(curve) = CurveParams::new(field, coeffs) {
            seen.insert(key);
            out.push(curve);
        }
    }
    Ok(out)
}

/// Verify every curve the policy selects, in parallel, merging results in
/// the deterministic enumeration order. The worker count can be capped with
/// the `MANING2_THREADS` environment variable.
pub fn sweep(
    field: &Arc<FieldSpec>,
    policy: &SamplePolicy,
    n_range: (i64, i64),
) -> Result<SweepOutcome> {
    let curves = match policy {
        SamplePolicy::Exhaustive => all_squarefree_quintics(field)?,
        SamplePolicy::Sample { size, seed } => sample_squarefree_quintics(field, *size, *seed)?,
    };
    let pool = sweep_pool();
    let results: Vec<Result<VerificationReport>> =
        pool.install(|| curves.par_iter().map(|c| verify_curve(c, n_range)).collect());
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r?);
    }
    let mut outcome = SweepOutcome {
        q: field.order(),
        tested: reports.len(),
        passed: 0,
        special_cases: 0,
        failures: Vec::new(),
        reports: Vec::new(),
    };
    for report in &reports {
        if report.passed() {
            outcome.passed += 1;
        } else {
            outcome
                .failures
                .push((report.curve.to_string(), report.failures.clone()));
        }
        if report.special_case.is_some() {
            outcome.special_cases += 1;
        }
    }
    outcome.reports = reports;
    Ok(outcome)
}

fn sweep_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("MANING2_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                builder = builder.num_threads(n);
            }
        }
    }
    builder.build().expect("worker pool construction cannot fail")
}
