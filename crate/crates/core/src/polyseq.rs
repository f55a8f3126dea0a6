//! Polynomials over a finite field, finite sequences with an explicit
//! offset, and the finite-range recurrence relation
//! `a_0 s_i + a_1 s_{i+1} + ... + a_h s_{i+h} = 0` for `u <= i <= v - h`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{field_of_size, FieldDesc, FieldElem};
use crate::report::VerifyReport;

/// Generalized binomial coefficient `binom(k, i)` for any integers: zero for
/// `i < 0`, otherwise `k(k-1)...(k-i+1) / i!`.
pub fn gen_binomial(k: i64, i: i64) -> BigInt {
    if i < 0 || (k >= 0 && i > k) {
        return BigInt::zero();
    }
    // Use the shorter side of the symmetry when it applies.
    let i = if k >= 0 { i.min(k - i) } else { i };
    let mut acc = BigInt::one();
    for j in 0..i {
        // acc = binom(k, j) here, so the division is exact
        acc = acc * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    acc
}

/// Falling factorial `k(k-1)...(k-r+1)`, with the empty product for `r = 0`.
pub fn falling_factorial(k: i64, r: i64) -> Result<BigInt> {
    if r < 0 {
        return Err(Error::NegativeLength(r));
    }
    Ok((0..r).fold(BigInt::one(), |acc, j| acc * BigInt::from(k - j)))
}

/// Dense polynomial over a finite field, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldDesc,
    coeffs: Vec<u32>,
}

impl Poly {
    pub(crate) fn from_codes(field: &FieldDesc, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldDesc) -> Poly {
        Poly::from_codes(field, Vec::new())
    }

    pub fn one(field: &FieldDesc) -> Poly {
        Poly::from_codes(field, vec![1])
    }

    pub fn constant(c: &FieldElem) -> Poly {
        Poly::from_codes(c.field(), vec![c.code()])
    }

    /// `c · x^d`.
    pub fn monomial(c: &FieldElem, d: usize) -> Poly {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c.code();
        Poly::from_codes(c.field(), coeffs)
    }

    /// `x - root`.
    pub fn linear(root: &FieldElem) -> Poly {
        let f = root.field();
        Poly::from_codes(f, vec![f.neg_raw(root.code()), 1])
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots<'a>(field: &FieldDesc, roots: impl IntoIterator<Item = &'a FieldElem>) -> Poly {
        roots
            .into_iter()
            .fold(Poly::one(field), |acc, r| &acc * &Poly::linear(r))
    }

    /// Coefficients low degree first.
    pub fn from_elems(field: &FieldDesc, coeffs: Vec<FieldElem>) -> Result<Poly> {
        let codes = coeffs
            .iter()
            .map(|c| field.check_same(c.field()).map(|_| c.code()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_codes(field, codes))
    }

    /// Integer coefficients, reduced into the prime subfield.
    pub fn from_ints(field: &FieldDesc, coeffs: &[i64]) -> Poly {
        let codes = coeffs.iter().map(|&c| field.reduce_int(c)).collect();
        Poly::from_codes(field, codes)
    }

    /// Parses comma-separated coefficients ascending by degree. In an
    /// extension field, coefficients may instead be separated by `;` so each
    /// one can use the comma digit encoding of field elements.
    pub fn parse(field: &FieldDesc, text: &str) -> Result<Poly> {
        let sep = if text.contains(';') { ';' } else { ',' };
        let coeffs = text
            .split(sep)
            .map(|t| field.parse_elem(t.trim()))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::BadPoly(text.to_string()))?;
        Poly::from_elems(field, coeffs)
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.field
            .elem_unchecked(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElem> {
        self.coeffs
            .iter()
            .map(|&c| self.field.elem_unchecked(c))
            .collect()
    }

    pub(crate) fn codes(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().map(|&c| self.field.elem_unchecked(c))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let f = &self.field;
        let code = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add_raw(f.mul_raw(acc, x.code()), c));
        f.elem_unchecked(code)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        let f = &self.field;
        Poly::from_codes(
            f,
            self.coeffs.iter().map(|&a| f.mul_raw(a, c.code())).collect(),
        )
    }

    /// `f(-x)`.
    pub fn negate_variable(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { f.neg_raw(c) } else { c })
            .collect();
        Poly::from_codes(f, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.field.check_same(&divisor.field)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f
            .inv_raw(*divisor.coeffs.last().unwrap())
            .expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul_raw(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = f.sub_raw(rem[idx], f.mul_raw(c, dj));
            }
        }
        Ok((Poly::from_codes(f, quot), Poly::from_codes(f, rem)))
    }

    /// Quotient when the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Comma-separated coefficients ascending by degree (`;` in extension
    /// fields); the zero polynomial prints as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sep = if self.field.is_prime_field() { "," } else { ";" };
        self.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Human-readable form such as `x^2 + x + 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let prime = self.field.is_prime_field();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if prime {
                c.to_string()
            } else {
                format!("({c})")
            };
            let term = match (i, c.is_one()) {
                (0, _) => coeff,
                (1, true) => "x".into(),
                (1, false) => format!("{coeff}*x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{coeff}*x^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field, self.to_text())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.field.check_same(&rhs.field).expect("field mismatch");
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        Poly::from_codes(f, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::from_codes(f, self.coeffs.iter().map(|&c| f.neg_raw(c)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.field.check_same(&rhs.field).expect("field mismatch");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        Poly::from_codes(f, convolve(f, &self.coeffs, &rhs.coeffs))
    }
}

/// Untrimmed product of two coefficient vectors.
fn convolve(f: &FieldDesc, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = f.add_raw(out[i + j], f.mul_raw(ai, bj));
        }
    }
    out
}

/// Monic characteristic polynomial of a recurrence; its degree is the order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly(Poly);

impl CharPoly {
    pub fn new(poly: Poly) -> Result<CharPoly> {
        if poly.is_monic() {
            Ok(CharPoly(poly))
        } else {
            Err(Error::NotMonic)
        }
    }

    /// Monic polynomial from its lower coefficients `a_0..a_{h-1}`.
    pub(crate) fn from_lower_codes(field: &FieldDesc, lower: &[u32]) -> CharPoly {
        let mut coeffs = lower.to_vec();
        coeffs.push(1);
        CharPoly(Poly::from_codes(field, coeffs))
    }

    pub fn parse(field: &FieldDesc, text: &str) -> Result<CharPoly> {
        CharPoly::new(Poly::parse(field, text)?)
    }

    pub fn order(&self) -> usize {
        self.0.degree().expect("monic polynomials are nonzero")
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn field(&self) -> &FieldDesc {
        self.0.field()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Reciprocal polynomial `x^h a(1/x)`; drops degree exactly when `a_0 = 0`.
pub fn reciprocal(a: &CharPoly) -> Poly {
    reciprocal_of_degree(a.poly(), a.order())
}

/// `x^h f(1/x)` for a polynomial of degree at most `h`.
pub fn reciprocal_of_degree(f: &Poly, h: usize) -> Poly {
    let mut coeffs = f.codes().to_vec();
    coeffs.resize(h + 1, 0);
    coeffs.reverse();
    Poly::from_codes(f.field(), coeffs)
}

/// Finite sequence `s_u, ..., s_v` over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct RangedSeq {
    field: FieldDesc,
    u: i64,
    values: Vec<u32>,
}

impl RangedSeq {
    pub fn new(field: &FieldDesc, u: i64, values: Vec<FieldElem>) -> Result<RangedSeq> {
        if values.is_empty() {
            return Err(Error::EmptyRange { u, v: u - 1 });
        }
        let codes = values
            .iter()
            .map(|c| field.check_same(c.field()).map(|_| c.code()))
            .collect::<Result<Vec<_>>>()?;
        Ok(RangedSeq {
            field: field.clone(),
            u,
            values: codes,
        })
    }

    pub fn from_ints(field: &FieldDesc, u: i64, values: &[i64]) -> Result<RangedSeq> {
        let elems = values.iter().map(|&v| field.from_int(v)).collect();
        RangedSeq::new(field, u, elems)
    }

    pub(crate) fn from_codes(field: &FieldDesc, u: i64, values: Vec<u32>) -> RangedSeq {
        debug_assert!(!values.is_empty());
        RangedSeq {
            field: field.clone(),
            u,
            values,
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.u + self.values.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `s_i` for `u <= i <= v`.
    pub fn get(&self, i: i64) -> Option<FieldElem> {
        self.code_at(i).map(|c| self.field.elem_unchecked(c))
    }

    pub(crate) fn code_at(&self, i: i64) -> Option<u32> {
        let idx = usize::try_from(i - self.u).ok()?;
        self.values.get(idx).copied()
    }

    pub fn values(&self) -> Vec<FieldElem> {
        self.values
            .iter()
            .map(|&c| self.field.elem_unchecked(c))
            .collect()
    }

    pub(crate) fn codes(&self) -> &[u32] {
        &self.values
    }

    /// The subsequence on `[u, v]`, which must lie inside the stored range.
    pub fn slice(&self, u: i64, v: i64) -> Result<RangedSeq> {
        if u > v {
            return Err(Error::EmptyRange { u, v });
        }
        if u < self.u {
            return Err(Error::OutOfRange(u));
        }
        if v > self.v() {
            return Err(Error::OutOfRange(v));
        }
        let start = (u - self.u) as usize;
        let end = (v - self.u) as usize;
        Ok(RangedSeq::from_codes(
            &self.field,
            u,
            self.values[start..=end].to_vec(),
        ))
    }
}

impl fmt::Display for RangedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.field.is_prime_field() { "," } else { ";" };
        let vals: Vec<String> = self.values().iter().map(ToString::to_string).collect();
        f.write_str(&vals.join(sep))
    }
}

impl fmt::Debug for RangedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RangedSeq[{}; {}..={}]({self})", self.field, self.u, self.v())
    }
}

/// `binom(k, i)` reduced into the prime subfield of `field`, for `u <= i <= v`.
pub fn binom_seq(k: i64, field: &FieldDesc, u: i64, v: i64) -> Result<RangedSeq> {
    if u > v {
        return Err(Error::EmptyRange { u, v });
    }
    let values = (u..=v)
        .map(|i| field.from_bigint(&gen_binomial(k, i)).code())
        .collect();
    Ok(RangedSeq::from_codes(field, u, values))
}

/// Whether a sequence satisfies a recurrence, and whether it does so only
/// because the sequence is too short to impose any equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Satisfaction {
    pub holds: bool,
    pub vacuous: bool,
}

pub fn satisfaction(seq: &RangedSeq, a: &CharPoly) -> Result<Satisfaction> {
    seq.field.check_same(a.field())?;
    let h = a.order() as i64;
    if h > seq.v() - seq.u() {
        return Ok(Satisfaction {
            holds: true,
            vacuous: true,
        });
    }
    let f = &seq.field;
    let coeffs = a.poly().codes();
    let s = seq.codes();
    let holds = (0..=(s.len() - coeffs.len())).all(|start| {
        coeffs
            .iter()
            .zip(&s[start..])
            .fold(0, |acc, (&aj, &sj)| f.add_raw(acc, f.mul_raw(aj, sj)))
            == 0
    });
    Ok(Satisfaction {
        holds,
        vacuous: false,
    })
}

/// Direct check of `sum_j a_j s_{i+j} = 0` for every `u <= i <= v - h`.
pub fn satisfies(seq: &RangedSeq, a: &CharPoly) -> Result<bool> {
    satisfaction(seq, a).map(|s| s.holds)
}

/// Same relation, decided by the vanishing of the coefficients of `x^j`,
/// `u + h <= j <= v`, in `a*(x) s(x)`.
pub fn satisfies_by_product(seq: &RangedSeq, a: &CharPoly) -> Result<bool> {
    seq.field.check_same(a.field())?;
    let h = a.order();
    let span = (seq.v() - seq.u()) as usize;
    if h > span {
        return Ok(true);
    }
    let mut recip = a.poly().codes().to_vec();
    recip.reverse();
    // Coefficient of x^j in a*(x)s(x) sits at index j - u of the product of
    // a* with the shifted series sum s_{u+i} x^i.
    let prod = convolve(&seq.field, &recip, seq.codes());
    Ok(prod[h..=span].iter().all(|&c| c == 0))
}

/// Number of nonzero coefficients.
pub fn weight(f: &Poly) -> usize {
    f.codes().iter().filter(|&&c| c != 0).count()
}

/// Largest `m` with `(x - root)^m` dividing `f`.
pub fn root_multiplicity(f: &Poly, root: &FieldElem) -> Result<usize> {
    f.field().check_same(root.field())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let r = root.code();
    let mut cur = f.codes().to_vec();
    let mut m = 0;
    loop {
        // Synthetic division by (x - r), highest coefficient first.
        let mut quot = vec![0u32; cur.len() - 1];
        let mut carry = 0u32;
        for i in (0..cur.len()).rev() {
            let val = field.add_raw(cur[i], field.mul_raw(carry, r));
            if i == 0 {
                carry = val;
            } else {
                quot[i - 1] = val;
                carry = val;
            }
        }
        if carry != 0 || quot.is_empty() {
            return Ok(m);
        }
        m += 1;
        cur = quot;
    }
}

/// Outcome of checking that a polynomial with a nonzero root of
/// multiplicity `k`, `0 < k < p`, has at least `k + 1` nonzero terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightLemmaReport {
    pub multiplicity: usize,
    pub weight: usize,
    /// False when `k = 0` or `k >= p`, where nothing is claimed.
    pub applicable: bool,
    /// `None` when not applicable.
    pub holds: Option<bool>,
}

pub fn check_weight_lemma(f: &Poly, root: &FieldElem) -> Result<WeightLemmaReport> {
    if root.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let k = root_multiplicity(f, root)?;
    let w = weight(f);
    let applicable = k > 0 && k < f.field().p() as usize;
    Ok(WeightLemmaReport {
        multiplicity: k,
        weight: w,
        applicable,
        holds: applicable.then_some(w > k),
    })
}

/// Field sizes drawn by [`weight_lemma_fuzz`].
pub const FUZZ_FIELDS: [u64; 9] = [5, 7, 13, 4, 8, 9, 25, 27, 49];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCounterexample {
    pub field: String,
    pub root: String,
    pub multiplicity: usize,
    pub poly: String,
    pub weight: usize,
}

/// Draws `trials` products `f = (x - ξ)^k g` with `ξ != 0`, `0 < k < p`,
/// `deg g <= 6` and `g(ξ) != 0`, and checks `weight(f) >= k + 1`.
pub fn weight_lemma_fuzz(trials: usize, seed: u64) -> Result<VerifyReport<WeightCounterexample>> {
    let start = Instant::now();
    let fields = FUZZ_FIELDS
        .iter()
        .map(|&q| field_of_size(q))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = Vec::new();
    for _ in 0..trials {
        let field = &fields[rng.gen_range(0..fields.len())];
        let xi = field.elem_unchecked(rng.gen_range(1..field.q()));
        let k = rng.gen_range(1..field.p() as usize);
        let g = loop {
            let deg = rng.gen_range(0..=6);
            let codes = (0..=deg).map(|_| rng.gen_range(0..field.q())).collect();
            let g = Poly::from_codes(field, codes);
            if !g.is_zero() && !g.eval(&xi).is_zero() {
                break g;
            }
        };
        let f = &Poly::linear(&xi).pow(k as u64) * &g;
        let report = check_weight_lemma(&f, &xi)?;
        if report.multiplicity != k || report.holds != Some(true) {
            counterexamples.push(WeightCounterexample {
                field: field.to_string(),
                root: xi.to_string(),
                multiplicity: report.multiplicity,
                poly: f.to_text(),
                weight: report.weight,
            });
        }
    }
    Ok(VerifyReport {
        theorem: "lemma37".into(),
        grid: BTreeMap::from([
            ("trials".to_string(), trials as i64),
            ("seed".to_string(), seed as i64),
        ]),
        checked: trials,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_of_size, make_field};

    fn f(p: u64) -> FieldDesc {
        make_field(p, 1).unwrap()
    }

    fn ints(seq: &RangedSeq) -> Vec<u32> {
        seq.codes().to_vec()
    }

    /// Binomial coefficients from Pascal's rule with the boundary
    /// `binom(k, 0) = 1`, `binom(0, i) = [i = 0]`, extended to negative `k`
    /// through `binom(k, i) = binom(k + 1, i) - binom(k, i - 1)`.
    fn pascal_table(kmin: i64, kmax: i64, imax: i64) -> impl Fn(i64, i64) -> i64 {
        use std::collections::HashMap;
        let mut t: HashMap<(i64, i64), i64> = HashMap::new();
        for i in -2..=imax {
            t.insert((0, i), (i == 0) as i64);
        }
        for k in 1..=kmax {
            for i in -2..=imax {
                let v = if i < 0 { 0 } else { t[&(k - 1, i)] + t.get(&(k - 1, i - 1)).copied().unwrap_or(0) };
                t.insert((k, i), v);
            }
        }
        for k in (kmin..0).rev() {
            for i in -2..=imax {
                let v = if i < 0 { 0 } else { t[&(k + 1, i)] - t[&(k, i - 1)] };
                t.insert((k, i), v);
            }
        }
        move |k, i| t[&(k, i)]
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(gen_binomial(5, 2), BigInt::from(10));
        assert_eq!(gen_binomial(4, 7), BigInt::zero());
        assert_eq!(gen_binomial(-1, 3), BigInt::from(-1));
        assert_eq!(gen_binomial(3, -1), BigInt::zero());
        assert_eq!(gen_binomial(-3, 2), BigInt::from(6));
    }

    #[test]
    fn binomial_matches_pascal_table() {
        let table = pascal_table(-30, 30, 30);
        for k in -30..=30 {
            for i in -2..=30 {
                assert_eq!(gen_binomial(k, i), BigInt::from(table(k, i)), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn pascal_and_symmetry() {
        for k in -30i64..=30 {
            for i in -30i64..=30 {
                assert_eq!(
                    gen_binomial(k, i),
                    gen_binomial(k - 1, i - 1) + gen_binomial(k - 1, i)
                );
            }
        }
        for k in 0..=30 {
            for i in 0..=k {
                assert_eq!(gen_binomial(k, i), gen_binomial(k, k - i));
            }
        }
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 2).unwrap(), BigInt::from(20));
        assert_eq!(falling_factorial(9, 0).unwrap(), BigInt::one());
        assert_eq!(falling_factorial(-1, 3).unwrap(), BigInt::from(-6));
        assert_eq!(falling_factorial(3, -1).unwrap_err(), Error::NegativeLength(-1));
    }

    #[test]
    fn binom_seq_examples() {
        assert_eq!(ints(&binom_seq(4, &f(5), 0, 4).unwrap()), vec![1, 4, 1, 4, 1]);
        assert_eq!(ints(&binom_seq(0, &f(2), 0, 0).unwrap()), vec![1]);
        // 1, 5, 10, 10, 5, 1 reduced mod 7, padded with zeros at -1 and 6
        assert_eq!(
            ints(&binom_seq(5, &f(7), -1, 6).unwrap()),
            vec![0, 1, 5, 3, 3, 5, 1, 0]
        );
        assert_eq!(
            binom_seq(5, &f(7), 3, 2).unwrap_err(),
            Error::EmptyRange { u: 3, v: 2 }
        );
    }

    #[test]
    fn powers_of_p_minus_one_alternate() {
        for (p, s) in [(2u64, 3u32), (3, 2), (5, 2), (7, 1)] {
            let k = (p as i64).pow(s) - 1;
            let seq = binom_seq(k, &f(p), 0, k).unwrap();
            for i in 0..=k {
                let expected = f(p).from_int(if i % 2 == 0 { 1 } else { -1 });
                assert_eq!(seq.get(i).unwrap(), expected);
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        let f2 = f(2);
        let a = CharPoly::parse(&f2, "1,1,1,1").unwrap();
        assert_eq!(reciprocal(&a), Poly::from_ints(&f2, &[1, 1, 1, 1]));
        assert_eq!(reciprocal(&a), Poly::from_ints(&f2, &[1, 1]).pow(3));
        let f7 = f(7);
        let xh = CharPoly::new(Poly::monomial(&f7.one(), 4)).unwrap();
        assert_eq!(reciprocal(&xh), Poly::one(&f7));
        // a_0 = 0 lowers the degree
        let a = CharPoly::parse(&f7, "0,3,1").unwrap();
        assert_eq!(reciprocal(&a).degree(), Some(1));
        assert!(CharPoly::parse(&f7, "1,2").is_err());
    }

    #[test]
    fn satisfies_examples() {
        let f2 = f(2);
        let seq = binom_seq(5, &f2, -2, 7).unwrap();
        let a = CharPoly::new(Poly::from_ints(&f2, &[1, 1]).pow(3)).unwrap();
        assert!(satisfies(&seq, &a).unwrap());
        assert!(satisfies_by_product(&seq, &a).unwrap());

        let f5 = f(5);
        let alt = RangedSeq::from_ints(&f5, 0, &[1, 4, 1, 4, 1]).unwrap();
        let a = CharPoly::parse(&f5, "1,1").unwrap();
        assert_eq!(
            satisfaction(&alt, &a).unwrap(),
            Satisfaction { holds: true, vacuous: false }
        );

        let short = RangedSeq::from_ints(&f5, 3, &[2, 3]).unwrap();
        let a = CharPoly::parse(&f5, "4,0,1").unwrap();
        assert_eq!(
            satisfaction(&short, &a).unwrap(),
            Satisfaction { holds: true, vacuous: true }
        );

        let f3 = f(3);
        assert!(matches!(
            satisfies(&alt, &CharPoly::parse(&f3, "1,1").unwrap()),
            Err(Error::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn order_zero_needs_zero_sequence() {
        let f5 = f(5);
        let one = CharPoly::new(Poly::one(&f5)).unwrap();
        assert_eq!(one.order(), 0);
        assert!(satisfies(&RangedSeq::from_ints(&f5, 0, &[0, 0, 0]).unwrap(), &one).unwrap());
        assert!(!satisfies(&RangedSeq::from_ints(&f5, 0, &[0, 1, 0]).unwrap(), &one).unwrap());
    }

    #[test]
    fn weight_examples() {
        let f5 = f(5);
        let one_plus_x = Poly::from_ints(&f5, &[1, 1]);
        assert_eq!(weight(&one_plus_x.pow(4)), 5);
        assert_eq!(weight(&one_plus_x.pow(5)), 2);
        assert_eq!(weight(&Poly::monomial(&f5.one(), 3)), 1);
        assert_eq!(weight(&Poly::zero(&f5)), 0);
    }

    #[test]
    fn root_multiplicity_examples() {
        let f5 = f(5);
        let minus_one = f5.from_int(-1);
        let p = Poly::from_ints(&f5, &[1, 1]).pow(4);
        assert_eq!(root_multiplicity(&p, &minus_one).unwrap(), 4);

        let f7 = f(7);
        let p = Poly::from_ints(&f7, &[1, 0, 1]);
        assert_eq!(root_multiplicity(&p, &f7.one()).unwrap(), 0);

        let f11 = f(11);
        let p = &Poly::linear(&f11.from_int(3)).pow(2) * &Poly::linear(&f11.one());
        // (x-3)^2 (x-1) = x^3 - 7x^2 + 15x - 9
        assert_eq!(p, Poly::from_ints(&f11, &[-9, 15, -7, 1]));
        assert_eq!(root_multiplicity(&p, &f11.from_int(3)).unwrap(), 2);

        assert_eq!(
            root_multiplicity(&Poly::zero(&f11), &f11.one()).unwrap_err(),
            Error::ZeroPolynomial
        );
        // constants have no roots
        assert_eq!(root_multiplicity(&Poly::one(&f11), &f11.one()).unwrap(), 0);
    }

    #[test]
    fn weight_lemma_examples() {
        let f5 = f(5);
        let r = check_weight_lemma(&Poly::linear(&f5.one()).pow(2), &f5.one()).unwrap();
        assert_eq!((r.multiplicity, r.weight, r.holds), (2, 3, Some(true)));

        let minus_one = f5.from_int(-1);
        let p4 = Poly::from_ints(&f5, &[1, 1]).pow(4);
        let r = check_weight_lemma(&p4, &minus_one).unwrap();
        assert_eq!((r.multiplicity, r.weight, r.holds), (4, 5, Some(true)));

        let p5 = Poly::from_ints(&f5, &[1, 1]).pow(5);
        let r = check_weight_lemma(&p5, &minus_one).unwrap();
        assert!(!r.applicable);
        assert_eq!((r.multiplicity, r.holds), (5, None));

        assert_eq!(
            check_weight_lemma(&p5, &f5.zero()).unwrap_err(),
            Error::ZeroRoot
        );
    }

    #[test]
    fn extension_field_polys() {
        let f9 = field_of_size(9).unwrap();
        let p = Poly::parse(&f9, "1,1;0;1").unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(0).to_string(), "1,1");
        assert_eq!(p.to_text(), "1,1;0,0;1,0");
        assert_eq!(Poly::parse(&f9, &p.to_text()).unwrap(), p);
        // a modulus root: t^2 + 1 = 0 with t = "0,1"
        let m = Poly::from_ints(&f9, &[1, 0, 1]);
        assert!(m.eval(&f9.parse_elem("0,1").unwrap()).is_zero());
    }

    #[test]
    fn division() {
        let f7 = f(7);
        let a = Poly::from_ints(&f7, &[1, 2, 3, 4]);
        let b = Poly::from_ints(&f7, &[5, 0, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert_eq!(a.div_rem(&Poly::zero(&f7)).unwrap_err(), Error::DivisionByZero);
        assert_eq!(a.exact_div(&b).unwrap_err(), Error::InexactDivision);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }
}
