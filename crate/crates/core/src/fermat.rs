//! Projective points on `a x^n + b y^n = z^n` over `F_q`.
//!
//! With `m = gcd(n, q - 1)` and `G` the subgroup of order `(q - 1)/m`, the
//! points with `xyz != 0` come `m^2` at a time from `aG ∩ (1 - bG)`, so
//! `N = m^2 |aG ∩ (1 - bG)| + d` where `d` counts points with `xyz = 0`.
//! This module counts both ways, bounds the intersection, and evaluates the
//! Weil, Garcia–Voloch and subgroup-derived upper bounds exactly.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{field_of_size, subgroup_of_order, FieldDesc, FieldElem, SubgroupDesc};
use crate::polyseq::{gen_binomial, Poly};
use crate::report::VerifyReport;

/// Largest field the brute-force counter enumerates.
pub const BRUTE_FORCE_MAX_Q: u32 = 1 << 12;

/// Largest field swept by [`check_thm41`].
pub const THM41_MAX_Q: u64 = 128;

#[derive(Clone, Debug)]
pub struct CurveParams {
    field: FieldDesc,
    n: u64,
    a: FieldElem,
    b: FieldElem,
}

impl CurveParams {
    pub fn new(field: &FieldDesc, n: u64, a: FieldElem, b: FieldElem) -> Result<CurveParams> {
        field.check_same(a.field())?;
        field.check_same(b.field())?;
        if n < 2 {
            return Err(Error::BadCurve(format!("exponent {n} must be at least 2")));
        }
        if n % field.p() as u64 == 0 {
            return Err(Error::BadCurve(format!(
                "exponent {n} is divisible by the characteristic {}",
                field.p()
            )));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::BadCurve("coefficients must be nonzero".into()));
        }
        Ok(CurveParams {
            field: field.clone(),
            n,
            a,
            b,
        })
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> &FieldElem {
        &self.a
    }

    pub fn b(&self) -> &FieldElem {
        &self.b
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    /// `gcd(n, q - 1)`.
    pub fn m(&self) -> u64 {
        arith::gcd(self.n, self.q() - 1)
    }

    /// The same curve with exponent `n'`.
    pub fn with_exponent(&self, n: u64) -> Result<CurveParams> {
        CurveParams::new(&self.field, n, self.a.clone(), self.b.clone())
    }
}

/// Point count by enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointCount {
    #[serde(rename = "N")]
    pub total: u64,
    pub d: u64,
}

/// Point count through the subgroup decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    #[serde(rename = "N")]
    pub total: u64,
    pub d: u64,
    pub m: u64,
    /// `|G| = (q - 1)/m`.
    pub group_order: u64,
    pub intersection: u64,
    pub e: u32,
}

/// `x^n` for every code of the field.
fn power_table(field: &FieldDesc, n: u64) -> Vec<u32> {
    (0..field.q())
        .map(|x| field.pow_raw(x, n as i64).expect("positive exponent"))
        .collect()
}

/// Counts canonical projective representatives `(x:y:1)`, `(x:1:0)` and
/// `(1:0:0)` on the curve; `d` counts those with `xyz = 0`.
pub fn count_points_bruteforce(c: &CurveParams) -> Result<PointCount> {
    let f = &c.field;
    if f.q() > BRUTE_FORCE_MAX_Q {
        return Err(Error::CapExceeded(format!(
            "brute-force counting needs q <= {BRUTE_FORCE_MAX_Q}, got {}",
            f.q()
        )));
    }
    let pw = power_table(f, c.n);
    let (a, b) = (c.a.code(), c.b.code());
    let lhs = |x: u32, y: u32| f.add_raw(f.mul_raw(a, pw[x as usize]), f.mul_raw(b, pw[y as usize]));
    let (mut total, mut d) = (0u64, 0u64);
    for x in 0..f.q() {
        for y in 0..f.q() {
            if lhs(x, y) == 1 {
                total += 1;
                if x == 0 || y == 0 {
                    d += 1;
                }
            }
        }
    }
    for x in 0..f.q() {
        if lhs(x, 1) == 0 {
            total += 1;
            d += 1;
        }
    }
    if lhs(1, 0) == 0 {
        total += 1;
        d += 1;
    }
    Ok(PointCount { total, d })
}

/// Points with `xyz = 0`, by one-dimensional loops: `(x:1:0)` with
/// `a x^n = -b`, `(0:y:1)` with `b y^n = 1`, `(x:0:1)` with `a x^n = 1`.
pub fn count_axis_points(c: &CurveParams) -> u64 {
    let f = &c.field;
    let pw = power_table(f, c.n);
    let (a, b) = (c.a.code(), c.b.code());
    let minus_b = f.neg_raw(b);
    let mut d = 0;
    for x in 0..f.q() {
        let ax = f.mul_raw(a, pw[x as usize]);
        d += (ax == minus_b) as u64 + (ax == 1) as u64;
        d += (f.mul_raw(b, pw[x as usize]) == 1) as u64;
    }
    d
}

/// `|aG ∩ (1 - bG)|`, testing `((1 - t)/b)^{|G|} = 1` for each `t ∈ aG`.
pub fn intersection_size(a: &FieldElem, b: &FieldElem, g: &SubgroupDesc) -> u64 {
    let f = g.field();
    let b_inv = f.inv_raw(b.code()).expect("b is nonzero");
    g.coset_raw(a.code())
        .filter(|&t| {
            let w = f.mul_raw(f.sub_raw(1, t), b_inv);
            g.contains_raw(w)
        })
        .count() as u64
}

/// Same count from the two enumerated cosets.
pub fn intersection_size_enumerated(a: &FieldElem, b: &FieldElem, g: &SubgroupDesc) -> u64 {
    let f = g.field();
    let bg: HashSet<u32> = g.coset_raw(b.code()).collect();
    g.coset_raw(a.code())
        .filter(|&t| bg.contains(&f.sub_raw(1, t)))
        .count() as u64
}

/// How many of `a`, `b`, `-a/b` (with repetition) lie in `G`.
pub fn e_classification(a: &FieldElem, b: &FieldElem, g: &SubgroupDesc) -> Result<u32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ratio = -&a.try_div(b)?;
    Ok([a, b, &ratio].iter().filter(|x| g.contains(x)).count() as u32)
}

pub fn count_points_subgroup(c: &CurveParams) -> Result<CountReport> {
    let m = c.m();
    let group_order = (c.q() - 1) / m;
    let g = subgroup_of_order(&c.field, group_order)?;
    let intersection = intersection_size(&c.a, &c.b, &g);
    let e = e_classification(&c.a, &c.b, &g)?;
    let d = count_axis_points(c);
    Ok(CountReport {
        total: m * m * intersection + d,
        d,
        m,
        group_order,
        intersection,
        e,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCounterexample {
    pub q: u64,
    pub order: u64,
    pub a: String,
    pub b: String,
    pub intersection: u64,
    pub e: u32,
}

/// `|aG ∩ (1 - bG)| <= (|G| + 1 - e)/2` for every prime power `q <= q_max`,
/// every subgroup with `|G| < p - 1`, and all nonzero `a, b`.
pub fn check_thm41(q_max: u64) -> Result<VerifyReport<SubgroupCounterexample>> {
    if q_max > THM41_MAX_Q {
        return Err(Error::CapExceeded(format!(
            "q_max must be at most {THM41_MAX_Q}, got {q_max}"
        )));
    }
    let start = Instant::now();
    let mut cells = Vec::new();
    for q in arith::prime_powers_up_to(q_max) {
        let field = field_of_size(q)?;
        let p = field.p() as u64;
        for t in arith::divisors(q - 1) {
            if t + 1 < p {
                cells.push((field.clone(), subgroup_of_order(&field, t)?));
            }
        }
    }
    let results: Vec<(usize, Vec<SubgroupCounterexample>)> = cells
        .par_iter()
        .map(|(field, g)| {
            let mut checked = 0;
            let mut bad = Vec::new();
            for a in field.nonzero_elements() {
                for b in field.nonzero_elements() {
                    let inter = intersection_size(&a, &b, g);
                    let e = e_classification(&a, &b, g).expect("nonzero");
                    checked += 1;
                    if 2 * inter as i64 > g.order() as i64 + 1 - e as i64 {
                        bad.push(SubgroupCounterexample {
                            q: field.q() as u64,
                            order: g.order(),
                            a: a.to_string(),
                            b: b.to_string(),
                            intersection: inter,
                            e,
                        });
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for (n, bad) in results {
        checked += n;
        counterexamples.extend(bad);
    }
    Ok(VerifyReport {
        theorem: "thm41".into(),
        grid: BTreeMap::from([("qmax".to_string(), q_max as i64)]),
        checked,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    })
}

/// Polynomials behind the intersection bound for a coset pair.
#[derive(Clone, Debug)]
pub struct GcdWitness {
    /// `prod (x - ξ)` over `ξ ∈ aG \ (1 - bG)`.
    pub f: Poly,
    /// `((1 - x)^k - b^k) f(x) / (x^k - a^k)`.
    pub g: Poly,
    /// `f (1 - x)^k = b^k f - a^k g + x^k g` holds.
    pub identity_ok: bool,
    /// With `f(-x) = sum f_j x^j` and `h = deg f`,
    /// `sum_j f_{h-j} binom(k, s+j) = 0` for `1 <= s <= k - h - 1`.
    pub dependence_ok: bool,
}

impl GcdWitness {
    /// `|aG ∩ (1 - bG)| = k - deg f`.
    pub fn intersection(&self, k: u64) -> u64 {
        k - self.f.degree().unwrap_or(0) as u64
    }
}

pub fn gcd_witness(g: &SubgroupDesc, a: &FieldElem, b: &FieldElem) -> Result<GcdWitness> {
    let field = g.field();
    field.check_same(a.field())?;
    field.check_same(b.field())?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let k = g.order();
    let one = field.one();
    let roots: Vec<FieldElem> = g
        .coset(a)?
        .into_iter()
        .filter(|xi| !g.contains(&(&(&one - xi) * &b.inv().expect("nonzero"))))
        .collect();
    let f = Poly::from_roots(field, &roots);

    let ak = a.pow(k as i64)?;
    let bk = b.pow(k as i64)?;
    let one_minus_x_k = Poly::from_ints(field, &[1, -1]).pow(k);
    let xk = Poly::monomial(&one, k as usize);
    let numerator = &(&one_minus_x_k - &Poly::constant(&bk)) * &f;
    let denominator = &xk - &Poly::constant(&ak);
    let quotient = numerator
        .exact_div(&denominator)
        .map_err(|_| Error::Internal("gcd witness division is not exact".into()))?;

    let lhs = &f * &one_minus_x_k;
    let rhs = &(&f.scale(&bk) - &quotient.scale(&ak)) + &(&xk * &quotient);
    let identity_ok = lhs == rhs;

    let h = f.degree().unwrap_or(0);
    let fneg = f.negate_variable();
    let dependence_ok = (1..(k as i64 - h as i64)).all(|s| {
        (0..=h)
            .map(|j| &fneg.coeff(h - j) * &field.from_bigint(&gen_binomial(k as i64, s + j as i64)))
            .fold(field.zero(), |acc, t| acc + t)
            .is_zero()
    });
    Ok(GcdWitness {
        f,
        g: quotient,
        identity_ok,
        dependence_ok,
    })
}

/// `|N - q - 1| <= (n-1)(n-2) sqrt(q)`, squared out.
pub fn weil_check(report: &CountReport, c: &CurveParams) -> bool {
    weil_holds(report.total, c.q(), c.n)
}

pub fn weil_holds(total: u64, q: u64, n: u64) -> bool {
    let dev = total as i128 - q as i128 - 1;
    let width = (n as i128 - 1) * (n as i128 - 2);
    dev * dev <= width * width * q as i128
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvEntry {
    pub s: u64,
    /// `s n <= p`.
    pub applicable: bool,
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvS1Report {
    pub p_odd: bool,
    /// `n = (q - 1)/(r - 1)` for a subfield `F_r`; the bound may fail there.
    pub exception_subfield: Option<u64>,
    pub applicable: bool,
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor44Report {
    /// `n | q - 1` and `n > (q - 1)/(p - 1)`.
    pub applicable: bool,
    /// `(n(n + q - 1) - d(n - 2))/2`.
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    /// The same expression with `p` in place of `q`.
    #[serde(serialize_with = "ser_rational")]
    pub bound_p_form: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub weil: bool,
    pub gv: Vec<GvEntry>,
    pub gv_s1: GvS1Report,
    pub cor44: Cor44Report,
}

/// `((s^2 - s - 2)/4 + 4/(s + 3)) n^2 + 2 n (q - 1 - d)/(s + 3) + d`.
pub fn gv_bound(s: u64, n: u64, q: u64, d: u64) -> BigRational {
    let (s, n, q, d) = (s as i64, n as i64, q as i64, d as i64);
    let lead = BigRational::new(BigInt::from(s * s - s - 2), BigInt::from(4))
        + BigRational::new(BigInt::from(4), BigInt::from(s + 3));
    lead * rat(n * n) + BigRational::new(BigInt::from(2 * n * (q - 1 - d)), BigInt::from(s + 3))
        + rat(d)
}

/// `(n(n + q - 1) - d(n - 2))/2`.
pub fn gv_s1_bound(n: u64, q: u64, d: u64) -> BigRational {
    let (n, q, d) = (n as i64, q as i64, d as i64);
    BigRational::new(BigInt::from(n * (n + q - 1) - d * (n - 2)), BigInt::from(2))
}

/// Subfield `F_r ⊆ F_q` (`r = p^t`, `t | s`) with `n (r - 1) = q - 1`.
pub fn gv_exception_subfield(field: &FieldDesc, n: u64) -> Option<u64> {
    let (p, s, q) = (field.p() as u64, field.s() as u64, field.q() as u64);
    arith::divisors(s)
        .into_iter()
        .map(|t| p.pow(t as u32))
        .find(|&r| n * (r - 1) == q - 1)
}

pub fn cor44_check(c: &CurveParams, report: &CountReport) -> Cor44Report {
    let (q, p, n) = (c.q(), c.field.p() as u64, c.n);
    let applicable = (q - 1) % n == 0 && n * (p - 1) > q - 1;
    let bound = gv_s1_bound(n, q, report.d);
    let bound_p_form = gv_s1_bound(n, p, report.d);
    let holds = rat(report.total as i64) <= bound;
    Cor44Report {
        applicable,
        bound,
        bound_p_form,
        holds,
    }
}

pub fn gv_bounds(report: &CountReport, c: &CurveParams) -> BoundReport {
    let (q, p, n, d) = (c.q(), c.field.p() as u64, c.n, report.d);
    let total = rat(report.total as i64);
    let gv = (1..=n.saturating_sub(3))
        .map(|s| {
            let bound = gv_bound(s, n, q, d);
            GvEntry {
                s,
                applicable: s * n <= p,
                holds: total <= bound,
                bound,
            }
        })
        .collect();
    let exception_subfield = gv_exception_subfield(&c.field, n);
    let s1_bound = gv_s1_bound(n, q, d);
    let gv_s1 = GvS1Report {
        p_odd: p % 2 == 1,
        exception_subfield,
        applicable: p % 2 == 1 && exception_subfield.is_none(),
        holds: total <= s1_bound,
        bound: s1_bound,
    };
    BoundReport {
        weil: weil_check(report, c),
        gv,
        gv_s1,
        cor44: cor44_check(c, report),
    }
}

/// One row of the CSV sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub q: u64,
    pub n: u64,
    pub a: String,
    pub b: String,
    #[serde(rename = "N")]
    pub total: u64,
    pub d: u64,
    pub m: u64,
    pub e: u32,
    pub intersection: u64,
    pub weil_ok: bool,
    pub gv1_applicable: bool,
    pub gv1_ok: bool,
    pub cor44_applicable: bool,
    pub cor44_ok: bool,
}

/// Every prime power `q <= q_max`, every divisor `n >= 2` of `q - 1`
/// prime to `p`, every nonzero `a, b`, in that order.
pub fn sweep(q_max: u64) -> Result<Vec<SweepRow>> {
    let mut curves = Vec::new();
    for q in arith::prime_powers_up_to(q_max) {
        let field = field_of_size(q)?;
        for n in arith::divisors(q - 1).into_iter().filter(|&n| n >= 2) {
            curves.push((field.clone(), n));
        }
    }
    let rows: Vec<Vec<SweepRow>> = curves
        .par_iter()
        .map(|(field, n)| -> Result<Vec<SweepRow>> {
            let mut out = Vec::new();
            for a in field.nonzero_elements() {
                for b in field.nonzero_elements() {
                    let c = CurveParams::new(field, *n, a.clone(), b.clone())?;
                    let r = count_points_subgroup(&c)?;
                    let bounds = gv_bounds(&r, &c);
                    out.push(SweepRow {
                        q: c.q(),
                        n: *n,
                        a: a.to_string(),
                        b: b.to_string(),
                        total: r.total,
                        d: r.d,
                        m: r.m,
                        e: r.e,
                        intersection: r.intersection,
                        weil_ok: bounds.weil,
                        gv1_applicable: bounds.gv_s1.applicable,
                        gv1_ok: bounds.gv_s1.holds,
                        cor44_applicable: bounds.cor44.applicable,
                        cor44_ok: bounds.cor44.holds,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveFailure {
    pub q: u64,
    pub n: u64,
    pub a: String,
    pub b: String,
    pub reason: String,
}

/// Per-curve consistency checks: brute force against the decomposition,
/// `d = e n`, the Weil bound, and each Garcia–Voloch or subgroup bound
/// wherever it applies.
pub fn curve_failures(c: &CurveParams) -> Result<Vec<String>> {
    let brute = count_points_bruteforce(c)?;
    let r = count_points_subgroup(c)?;
    let b = gv_bounds(&r, c);
    let mut out = Vec::new();
    if brute.total != r.total || brute.d != r.d {
        out.push(format!(
            "brute force N={} d={} but decomposition N={} d={}",
            brute.total, brute.d, r.total, r.d
        ));
    }
    if (c.q() - 1) % c.n == 0 && r.d != r.e as u64 * c.n {
        out.push(format!("d={} but e*n={}", r.d, r.e as u64 * c.n));
    }
    if !b.weil {
        out.push("Weil bound fails".into());
    }
    for g in b.gv.iter().filter(|g| g.applicable && !g.holds) {
        out.push(format!("GV bound s={} fails: {} > {}", g.s, r.total, g.bound));
    }
    if b.gv_s1.applicable && !b.gv_s1.holds {
        out.push(format!("GV s=1 bound fails: {} > {}", r.total, b.gv_s1.bound));
    }
    if b.cor44.applicable && !b.cor44.holds {
        out.push(format!("subgroup bound fails: {} > {}", r.total, b.cor44.bound));
    }
    Ok(out)
}

/// [`curve_failures`] for every curve in [`sweep`]'s range.
pub fn verify_decomposition(q_max: u64) -> Result<VerifyReport<CurveFailure>> {
    let start = Instant::now();
    let mut curves = Vec::new();
    for q in arith::prime_powers_up_to(q_max) {
        let field = field_of_size(q)?;
        for n in arith::divisors(q - 1).into_iter().filter(|&n| n >= 2) {
            curves.push((field.clone(), n));
        }
    }
    let results: Vec<(usize, Vec<CurveFailure>)> = curves
        .par_iter()
        .map(|(field, n)| -> Result<_> {
            let mut checked = 0;
            let mut bad = Vec::new();
            for a in field.nonzero_elements() {
                for b in field.nonzero_elements() {
                    let c = CurveParams::new(field, *n, a.clone(), b.clone())?;
                    checked += 1;
                    bad.extend(curve_failures(&c)?.into_iter().map(|reason| CurveFailure {
                        q: c.q(),
                        n: *n,
                        a: a.to_string(),
                        b: b.to_string(),
                        reason,
                    }));
                }
            }
            Ok((checked, bad))
        })
        .collect::<Result<_>>()?;
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for (n, bad) in results {
        checked += n;
        counterexamples.extend(bad);
    }
    Ok(VerifyReport {
        theorem: "fermat".into(),
        grid: BTreeMap::from([("qmax".to_string(), q_max as i64)]),
        checked,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessFailure {
    pub q: u64,
    pub order: u64,
    pub a: String,
    pub b: String,
    pub identity_ok: bool,
    pub dependence_ok: bool,
    pub intersection_ok: bool,
}

/// [`gcd_witness`] for every prime `q <= q_max`, every subgroup and all
/// nonzero `a, b`; also checks `k - deg f` against [`intersection_size`].
pub fn verify_witness(q_max: u64) -> Result<VerifyReport<WitnessFailure>> {
    let start = Instant::now();
    let mut cells = Vec::new();
    for q in (2..=q_max).filter(|&q| arith::is_prime(q)) {
        let field = field_of_size(q)?;
        for t in arith::divisors(q - 1) {
            cells.push(subgroup_of_order(&field, t)?);
        }
    }
    let results: Vec<(usize, Vec<WitnessFailure>)> = cells
        .par_iter()
        .map(|g| -> Result<_> {
            let field = g.field();
            let mut checked = 0;
            let mut bad = Vec::new();
            for a in field.nonzero_elements() {
                for b in field.nonzero_elements() {
                    let w = gcd_witness(g, &a, &b)?;
                    let intersection_ok = w.intersection(g.order()) == intersection_size(&a, &b, g);
                    checked += 1;
                    if !(w.identity_ok && w.dependence_ok && intersection_ok) {
                        bad.push(WitnessFailure {
                            q: field.q() as u64,
                            order: g.order(),
                            a: a.to_string(),
                            b: b.to_string(),
                            identity_ok: w.identity_ok,
                            dependence_ok: w.dependence_ok,
                            intersection_ok,
                        });
                    }
                }
            }
            Ok((checked, bad))
        })
        .collect::<Result<_>>()?;
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for (n, bad) in results {
        checked += n;
        counterexamples.extend(bad);
    }
    Ok(VerifyReport {
        theorem: "witness".into(),
        grid: BTreeMap::from([("qmax".to_string(), q_max as i64)]),
        checked,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    })
}
