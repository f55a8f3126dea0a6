//! Hankel matrices of binomial coefficients
//! `B(k, h, r) = (binom(k, r + i + j))_{0 <= i, j <= h}` and their
//! determinants, by fraction-free elimination and by the product formula
//!
//! ```text
//! det B(k, h, r) = (-1)^{h(h+1)/2} prod_{s=0}^{h} (k+s)^{(r+h)} / (r+h+s)^{(r+h)}
//! ```
//!
//! where `n^{(m)}` is the falling factorial. The formula needs `r >= 0`;
//! for `k >= 0` the symmetry `det B(k,h,r) = det B(k,h,k-r-2h)` extends it.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::Matrix;
use crate::polyseq::{gen_binomial, RangedSeq};
use crate::report::VerifyReport;

pub use crate::polyseq::falling_factorial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HankelSpec {
    pub k: i64,
    pub h: usize,
    pub r: i64,
}

impl HankelSpec {
    pub fn new(k: i64, h: usize, r: i64) -> HankelSpec {
        HankelSpec { k, h, r }
    }

    /// The parameters of the mirrored matrix, `r -> k - r - 2h`.
    pub fn mirrored(&self) -> HankelSpec {
        HankelSpec {
            r: self.k - self.r - 2 * self.h as i64,
            ..*self
        }
    }
}

/// Square matrix of exact integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl BigMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> BigMatrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        BigMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> BigMatrix {
        BigMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> BigMatrix {
        BigMatrix::from_rows(
            (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim.max(1)).map(<[BigInt]>::to_vec).collect()
    }

    /// Every entry depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                i == 0 || j + 1 == self.dim || self.get(i, j) == self.get(i - 1, j + 1)
            })
        })
    }
}

pub fn build_matrix(spec: &HankelSpec) -> BigMatrix {
    let n = spec.h + 1;
    // one binomial per anti-diagonal
    let diag: Vec<BigInt> = (0..2 * n - 1)
        .map(|d| gen_binomial(spec.k, spec.r + d as i64))
        .collect();
    BigMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| diag[i + j].clone()).collect())
            .collect(),
    )
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_bruteforce(m: &BigMatrix) -> BigInt {
    let n = m.dim;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    debug_assert!(n > 3 || det == det_cofactor(m));
    det
}

/// Laplace expansion along the first row. Exponential; only for small
/// matrices and as an independent check of [`det_bruteforce`].
pub fn det_cofactor(m: &BigMatrix) -> BigInt {
    fn go(rows: &[Vec<BigInt>]) -> BigInt {
        match rows.len() {
            0 => BigInt::one(),
            1 => rows[0][0].clone(),
            n => (0..n)
                .map(|c| {
                    let minor: Vec<Vec<BigInt>> = rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(j, _)| j != c)
                                .map(|(_, x)| x.clone())
                                .collect()
                        })
                        .collect();
                    let term = &rows[0][c] * go(&minor);
                    if c % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum(),
        }
    }
    go(&m.rows())
}

/// Which route the closed form took.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormRoute {
    Direct,
    Mirrored,
}

/// Parameters at which the product formula is evaluated, or `None` when
/// neither `r >= 0` nor (for `k >= 0`) the mirrored `k - r - 2h >= 0` holds.
pub fn closed_form_route(spec: &HankelSpec) -> Option<(ClosedFormRoute, HankelSpec)> {
    if spec.r >= 0 {
        return Some((ClosedFormRoute::Direct, *spec));
    }
    let mirrored = spec.mirrored();
    (spec.k >= 0 && mirrored.r >= 0).then_some((ClosedFormRoute::Mirrored, mirrored))
}

/// Determinant from the product formula in exact rationals.
pub fn det_closed_form(spec: &HankelSpec) -> Result<BigInt> {
    let (_, eff) = closed_form_route(spec).ok_or(Error::FormulaInapplicable {
        k: spec.k,
        h: spec.h,
        r: spec.r,
    })?;
    let h = eff.h as i64;
    let len = eff.r + h;
    let mut value = BigRational::one();
    for s in 0..=h {
        let num = falling_factorial(eff.k + s, len)?;
        let den = falling_factorial(len + s, len)?;
        value *= BigRational::new(num, den);
    }
    if (h * (h + 1) / 2) % 2 == 1 {
        value = -value;
    }
    if !value.is_integer() {
        return Err(Error::Internal(format!(
            "closed form for {spec:?} reduced to the non-integer {value}"
        )));
    }
    Ok(value.to_integer())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonvanishingReport {
    pub spec: HankelSpec,
    pub p: u64,
    /// `k, h >= 0` and `0 <= r + h <= k < p - h`.
    pub hypothesis: bool,
    pub det_mod_p: u64,
    pub nonvanishing: bool,
}

/// Hypothesis under which `det B(k,h,r)` is guaranteed prime to `p`.
pub fn nonvanishing_hypothesis(spec: &HankelSpec, p: u64) -> bool {
    let (k, h) = (spec.k, spec.h as i64);
    k >= 0 && 0 <= spec.r + h && spec.r + h <= k && k < p as i64 - h
}

pub fn nonvanishing_mod_p(spec: &HankelSpec, p: u64) -> NonvanishingReport {
    let det = det_bruteforce(&build_matrix(spec));
    let det_mod_p = det
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits");
    NonvanishingReport {
        spec: *spec,
        p,
        hypothesis: nonvanishing_hypothesis(spec, p),
        det_mod_p,
        nonvanishing: det_mod_p != 0,
    }
}

/// `det (s_{r+i+j})_{0 <= i, j < size}` for a sequence over a finite field,
/// by Gaussian elimination in the field.
pub fn sequence_hankel_det(seq: &RangedSeq, r: i64, size: usize) -> Result<FieldElem> {
    if size == 0 {
        return Ok(seq.field().one());
    }
    let last = r + 2 * (size as i64 - 1);
    if r < seq.u() {
        return Err(Error::OutOfRange(r));
    }
    if last > seq.v() {
        return Err(Error::OutOfRange(last));
    }
    let m = Matrix::from_fn(seq.field(), size, size, |i, j| {
        seq.code_at(r + (i + j) as i64).expect("index checked above")
    });
    Ok(m.det())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelCounterexample {
    pub k: i64,
    pub h: usize,
    pub r: i64,
    pub closed: Option<String>,
    pub brute: String,
}

fn hankel_sweep(
    theorem: &str,
    grid: BTreeMap<String, i64>,
    specs: Vec<HankelSpec>,
    check: impl Fn(&HankelSpec) -> Option<Option<HankelCounterexample>> + Sync,
) -> VerifyReport<HankelCounterexample> {
    let start = Instant::now();
    let outcomes: Vec<_> = specs.par_iter().map(&check).collect();
    let checked = outcomes.iter().filter(|o| o.is_some()).count();
    let counterexamples = outcomes.into_iter().flatten().flatten().collect();
    VerifyReport {
        theorem: theorem.to_string(),
        grid,
        checked,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    }
}

/// Closed form against elimination on `kmin <= k <= kmax`, `h <= hmax`,
/// `|r| <= rabs`, wherever the closed form applies.
pub fn verify_closed_form(kmin: i64, kmax: i64, hmax: usize, rabs: i64) -> VerifyReport<HankelCounterexample> {
    let specs = (kmin..=kmax)
        .flat_map(|k| (0..=hmax).flat_map(move |h| (-rabs..=rabs).map(move |r| HankelSpec::new(k, h, r))))
        .collect();
    let grid = BTreeMap::from([
        ("kmin".to_string(), kmin),
        ("kmax".to_string(), kmax),
        ("hmax".to_string(), hmax as i64),
        ("rabs".to_string(), rabs),
    ]);
    hankel_sweep("prop31", grid, specs, |spec| {
        closed_form_route(spec)?;
        let brute = det_bruteforce(&build_matrix(spec));
        let closed = det_closed_form(spec);
        let ok = closed.as_ref().is_ok_and(|c| *c == brute);
        Some((!ok).then(|| HankelCounterexample {
            k: spec.k,
            h: spec.h,
            r: spec.r,
            closed: Some(match closed {
                Ok(c) => c.to_string(),
                Err(e) => e.to_string(),
            }),
            brute: brute.to_string(),
        }))
    })
}

/// `p` does not divide `det B(k,h,r)` whenever `0 <= r + h <= k < p - h`.
pub fn verify_cor32(p: u64) -> VerifyReport<HankelCounterexample> {
    let pi = p as i64;
    let mut specs = Vec::new();
    for h in 0..pi.max(0) {
        for k in 0..pi - h {
            for r in -h..=k - h {
                specs.push(HankelSpec::new(k, h as usize, r));
            }
        }
    }
    let grid = BTreeMap::from([("p".to_string(), pi)]);
    hankel_sweep("cor32", grid, specs, |spec| {
        let report = nonvanishing_mod_p(spec, p);
        debug_assert!(report.hypothesis);
        Some((!report.nonvanishing).then(|| HankelCounterexample {
            k: spec.k,
            h: spec.h,
            r: spec.r,
            closed: None,
            brute: det_bruteforce(&build_matrix(spec)).to_string(),
        }))
    })
}
