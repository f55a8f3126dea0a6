//! Solving and refuting finite-range recurrences.
//!
//! The relation `sum_j a_j s_{i+j} = 0` for `u <= i <= v - h` is a
//! homogeneous linear system in `a_0..a_h`. A sequence satisfies a
//! recurrence of order `h` when the solution space contains a vector with
//! `a_h = 1`. The verifiers below sweep binomial sequences mod `p` and check
//! the non-existence and divisibility results for these systems.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{make_field, FieldDesc, FieldElem};
use crate::linalg::Matrix;
use crate::polyseq::{binom_seq, root_multiplicity, CharPoly, Poly, RangedSeq};
use crate::report::VerifyReport;

/// Matrix of the system: row `i - u` holds `s_i, ..., s_{i+h}`.
pub fn equations_matrix(seq: &RangedSeq, h: usize) -> Matrix {
    let rows = (seq.v() - seq.u() - h as i64 + 1).max(0) as usize;
    let s = seq.codes();
    Matrix::from_fn(seq.field(), rows, h + 1, |i, j| s[i + j])
}

/// All solutions `(a_0..a_h)` of the system for one sequence and order.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    field: FieldDesc,
    h: usize,
    vacuous: bool,
    rank: usize,
    basis: Vec<Vec<u32>>,
    particular: Option<CharPoly>,
}

pub fn solution_space(seq: &RangedSeq, h: usize) -> SolutionSpace {
    let field = seq.field().clone();
    if h as i64 > seq.v() - seq.u() {
        // no equations at all
        let basis = (0..=h)
            .map(|i| (0..=h).map(|j| (i == j) as u32).collect())
            .collect();
        let particular = CharPoly::new(Poly::monomial(&field.one(), h)).ok();
        return SolutionSpace {
            field,
            h,
            vacuous: true,
            rank: 0,
            basis,
            particular,
        };
    }
    let m = equations_matrix(seq, h);
    let rank = m.rank();
    let basis = m.nullspace();
    let particular = basis.iter().find(|w| w[h] != 0).map(|w| {
        let inv = field.inv_raw(w[h]).expect("nonzero");
        let lower: Vec<u32> = w[..h].iter().map(|&c| field.mul_raw(c, inv)).collect();
        CharPoly::from_lower_codes(&field, &lower)
    });
    SolutionSpace {
        field,
        h,
        vacuous: false,
        rank,
        basis,
        particular,
    }
}

impl SolutionSpace {
    pub fn order(&self) -> usize {
        self.h
    }

    /// True when `h > v - u`, so that every polynomial is a solution.
    pub fn is_vacuous(&self) -> bool {
        self.vacuous
    }

    /// Rank of the full system.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Null-space basis in reduced row echelon form, as `(a_0..a_h)`.
    pub fn homogeneous_basis(&self) -> Vec<Vec<FieldElem>> {
        self.basis
            .iter()
            .map(|w| w.iter().map(|&c| self.field.elem(c).unwrap()).collect())
            .collect()
    }

    /// Basis vectors as polynomials `sum a_j x^j`.
    pub fn basis_polys(&self) -> Vec<Poly> {
        self.basis
            .iter()
            .map(|w| Poly::from_codes(&self.field, w.clone()))
            .collect()
    }

    pub fn monic_solvable(&self) -> bool {
        self.particular.is_some()
    }

    /// One monic solution: the first basis vector with `a_h != 0`, scaled.
    pub fn particular_monic(&self) -> Option<&CharPoly> {
        self.particular.as_ref()
    }

    /// Directions of the affine set of monic solutions: a basis of the
    /// solutions with `a_h = 0`. Empty when no monic solution exists.
    pub fn monic_directions(&self) -> Vec<Poly> {
        let Some(part) = &self.particular else {
            return Vec::new();
        };
        let f = &self.field;
        let pc = part.poly().codes();
        let mut skipped = false;
        self.basis
            .iter()
            .filter_map(|w| {
                let c = w[self.h];
                if c != 0 && !skipped {
                    // the vector the particular solution came from
                    skipped = true;
                    return None;
                }
                let d: Vec<u32> = w
                    .iter()
                    .enumerate()
                    .map(|(j, &wj)| f.sub_raw(wj, f.mul_raw(c, pc.get(j).copied().unwrap_or(0))))
                    .collect();
                Some(Poly::from_codes(f, d))
            })
            .collect()
    }

    /// Exactly one monic solution.
    pub fn unique_monic(&self) -> bool {
        self.monic_solvable() && self.basis.len() == 1
    }
}

/// Minimal recurrence found by Berlekamp–Massey.
#[derive(Clone, Debug)]
pub struct MinimalRecurrence {
    pub order: usize,
    pub charpoly: CharPoly,
    /// The order exceeds `v - u`: only a vacuous recurrence exists.
    pub vacuous: bool,
}

/// Berlekamp–Massey over the sequence's field. The returned characteristic
/// polynomial is `x^L C(1/x)` for the final connection polynomial `C`.
pub fn berlekamp_massey(seq: &RangedSeq) -> MinimalRecurrence {
    let f = seq.field();
    let s = seq.codes();
    let mut conn = vec![1u32];
    let mut prev = vec![1u32];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut prev_disc = 1u32;

    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=len.min(conn.len() - 1) {
            d = f.add_raw(d, f.mul_raw(conn[i], s[n - i]));
        }
        if d == 0 {
            shift += 1;
            continue;
        }
        let coef = f.mul_raw(d, f.inv_raw(prev_disc).expect("nonzero discrepancy"));
        let snapshot = (2 * len <= n).then(|| conn.clone());
        if conn.len() < prev.len() + shift {
            conn.resize(prev.len() + shift, 0);
        }
        for (j, &b) in prev.iter().enumerate() {
            conn[j + shift] = f.sub_raw(conn[j + shift], f.mul_raw(coef, b));
        }
        match snapshot {
            Some(old) => {
                len = n + 1 - len;
                prev = old;
                prev_disc = d;
                shift = 1;
            }
            None => shift += 1,
        }
    }
    conn.resize(len + 1, 0);
    let mut a = conn;
    a.reverse();
    let charpoly = CharPoly::new(Poly::from_codes(f, a)).expect("leading coefficient is C_0 = 1");
    MinimalRecurrence {
        order: len,
        charpoly,
        vacuous: len as i64 > seq.v() - seq.u(),
    }
}

/// Bounds for the exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub kmax: i64,
    pub hmax: usize,
}

impl Limits {
    /// `k <= p + 3`, `h <= 6`.
    pub fn default_for(p: u64) -> Limits {
        Limits {
            kmax: p as i64 + 3,
            hmax: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceCounterexample {
    pub k: i64,
    pub h: usize,
    pub u: i64,
    pub v: i64,
    pub witness_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A cell of the `(k, h, u, v)` grid with `-h <= u`, `v <= k + h`,
/// `2h <= v - u`.
#[derive(Clone, Copy, Debug)]
struct Cell {
    k: i64,
    h: usize,
    u: i64,
    v: i64,
}

/// Cells for one `(k, h)`, together with the binomial sequence on
/// `-h..=k+h` they are sliced from.
fn cells_for(k: i64, h: usize) -> Vec<Cell> {
    let hi = h as i64;
    let mut out = Vec::new();
    for u in -hi..=k + hi {
        for v in u + 2 * hi..=k + hi {
            out.push(Cell { k, h, u, v });
        }
    }
    out
}

enum CellOutcome {
    Skipped,
    Ok,
    Outside,
    Fail(RecurrenceCounterexample),
}

fn sweep(
    theorem: &str,
    p: u64,
    limits: Limits,
    eval: impl Fn(&FieldDesc, &RangedSeq, Cell) -> CellOutcome + Sync,
) -> Result<VerifyReport<RecurrenceCounterexample>> {
    let start = Instant::now();
    let field = make_field(p, 1)?;
    let pairs: Vec<(i64, usize)> = (0..=limits.kmax)
        .flat_map(|k| (0..=limits.hmax).map(move |h| (k, h)))
        .collect();
    let outcomes: Vec<Vec<CellOutcome>> = pairs
        .par_iter()
        .map(|&(k, h)| {
            let hi = h as i64;
            let base = binom_seq(k, &field, -hi, k + hi).expect("nonempty range");
            cells_for(k, h)
                .into_iter()
                .map(|c| {
                    let seq = base.slice(c.u, c.v).expect("cell inside base range");
                    eval(&field, &seq, c)
                })
                .collect()
        })
        .collect();

    let mut checked = 0;
    let mut outside = 0;
    let mut counterexamples = Vec::new();
    for o in outcomes.into_iter().flatten() {
        match o {
            CellOutcome::Skipped => {}
            CellOutcome::Ok => checked += 1,
            CellOutcome::Outside => outside += 1,
            CellOutcome::Fail(c) => {
                checked += 1;
                counterexamples.push(c);
            }
        }
    }
    let grid = BTreeMap::from([
        ("p".to_string(), p as i64),
        ("kmax".to_string(), limits.kmax),
        ("hmax".to_string(), limits.hmax as i64),
    ]);
    Ok(VerifyReport {
        theorem: theorem.to_string(),
        grid,
        checked,
        counterexamples,
        outside_hypothesis: outside,
        elapsed: start.elapsed(),
    })
}

fn counterexample(c: Cell, witness: Option<&Poly>, detail: Option<String>) -> RecurrenceCounterexample {
    RecurrenceCounterexample {
        k: c.k,
        h: c.h,
        u: c.u,
        v: c.v,
        witness_poly: witness.map(Poly::to_text),
        detail,
    }
}

/// No recurrence of order `h` when `-h <= u <= v <= k + h`, `2h <= v - u`
/// and `k < p - h`. Cells with `k >= p - h` are visited and those admitting
/// a recurrence are counted as outside the hypothesis.
pub fn verify_thm33(p: u64, limits: Limits) -> Result<VerifyReport<RecurrenceCounterexample>> {
    sweep("thm33", p, limits, |_, seq, c| {
        let space = solution_space(seq, c.h);
        let inside = c.k < p as i64 - c.h as i64;
        match (inside, space.particular_monic()) {
            (true, None) => CellOutcome::Ok,
            (true, Some(a)) => CellOutcome::Fail(counterexample(c, Some(a.poly()), None)),
            (false, Some(_)) => CellOutcome::Outside,
            (false, None) => CellOutcome::Skipped,
        }
    })
}

/// `a(-1)` for a coefficient vector.
fn at_minus_one(poly: &Poly) -> FieldElem {
    poly.eval(&poly.field().from_int(-1))
}

/// Every monic solution vanishes at `-1` when `k < p` (same range
/// conditions as above). Decided on the particular solution and on each
/// direction of the affine solution set.
pub fn verify_thm38(p: u64, limits: Limits) -> Result<VerifyReport<RecurrenceCounterexample>> {
    sweep("thm38", p, limits, |_, seq, c| {
        let space = solution_space(seq, c.h);
        let Some(part) = space.particular_monic() else {
            return if c.k < p as i64 {
                CellOutcome::Ok
            } else {
                CellOutcome::Skipped
            };
        };
        let bad = if !at_minus_one(part.poly()).is_zero() {
            Some(part.poly().clone())
        } else {
            space
                .monic_directions()
                .into_iter()
                .find(|d| !at_minus_one(d).is_zero())
                .map(|d| part.poly() + &d)
        };
        match (c.k < p as i64, bad) {
            (true, None) => CellOutcome::Ok,
            (true, Some(w)) => CellOutcome::Fail(counterexample(c, Some(&w), None)),
            (false, Some(_)) => CellOutcome::Outside,
            (false, None) => CellOutcome::Skipped,
        }
    })
}

/// Range of the first `h + 1` equations, `[u, u + 2h]`, lies where the
/// multiples of `(1 + x)^{p-k}` are known solutions: `k - p + 1 <= u` and
/// `u + 2h <= p - 1`.
pub fn remark39_exact_window(p: u64, k: i64, h: usize, u: i64) -> bool {
    let p = p as i64;
    u >= k - p + 1 && u + 2 * h as i64 <= p - 1
}

/// For `p - h <= k < p`:
/// - the first `h + 1` equations have rank at least `p - k` everywhere, and
///   exactly `p - k` inside [`remark39_exact_window`];
/// - every monic solution is divisible by `(x + 1)^{p-k}`.
///
/// Cells outside the window whose rank exceeds `p - k` are counted as
/// outside the hypothesis.
pub fn verify_remark39(p: u64, limits: Limits) -> Result<VerifyReport<RecurrenceCounterexample>> {
    sweep("remark39", p, limits, |field, seq, c| {
        let hi = c.h as i64;
        let pk = p as i64 - c.k;
        if !(p as i64 - hi <= c.k && c.k < p as i64) {
            return CellOutcome::Skipped;
        }
        let pk = pk as usize;
        let head = seq.slice(c.u, c.u + 2 * hi).expect("2h <= v - u");
        let rank = equations_matrix(&head, c.h).rank();
        if rank < pk {
            return CellOutcome::Fail(counterexample(
                c,
                None,
                Some(format!("rank {rank} below p-k = {pk}")),
            ));
        }
        let exact_window = remark39_exact_window(p, c.k, c.h, c.u);
        if exact_window && rank != pk {
            return CellOutcome::Fail(counterexample(
                c,
                None,
                Some(format!("rank {rank} != p-k = {pk}")),
            ));
        }
        let space = solution_space(seq, c.h);
        if space.monic_solvable() {
            let minus_one = field.from_int(-1);
            let not_divisible = space.basis_polys().into_iter().find(|w| {
                !w.is_zero() && root_multiplicity(w, &minus_one).expect("nonzero") < pk
            });
            if let Some(w) = not_divisible {
                return CellOutcome::Fail(counterexample(
                    c,
                    Some(&w),
                    Some(format!("not divisible by (x+1)^{pk}")),
                ));
            }
        }
        if !exact_window && rank != pk {
            CellOutcome::Outside
        } else {
            CellOutcome::Ok
        }
    })
}

/// Minimal recurrence, cross-checked against the solution spaces at the
/// returned order and one below it.
pub fn minimal_checked(seq: &RangedSeq) -> Result<MinimalRecurrence> {
    let bm = berlekamp_massey(seq);
    let at = solution_space(seq, bm.order);
    let below_ok = bm.order == 0 || !solution_space(seq, bm.order - 1).monic_solvable();
    if !at.monic_solvable() || !below_ok {
        return Err(Error::Internal(format!(
            "Berlekamp-Massey order {} disagrees with the solution spaces",
            bm.order
        )));
    }
    Ok(bm)
}

/// For `1 <= h <= hmax`, `k = 2h - 1` and every prime `k + h <= p <= pmax`:
/// the sequence `binom(k, i) mod p` on `0..=k` has exactly one monic
/// recurrence of order `h`, and Berlekamp–Massey finds it.
pub fn verify_example35(hmax: usize, pmax: u64) -> Result<VerifyReport<RecurrenceCounterexample>> {
    let start = Instant::now();
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for h in 1..=hmax {
        let k = 2 * h as i64 - 1;
        for p in (k as u64 + h as u64..=pmax).filter(|&p| crate::arith::is_prime(p)) {
            let field = make_field(p, 1)?;
            let seq = binom_seq(k, &field, 0, k)?;
            let space = solution_space(&seq, h);
            let bm = berlekamp_massey(&seq);
            checked += 1;
            let cell = Cell { k, h, u: 0, v: k };
            if !space.unique_monic() {
                counterexamples.push(counterexample(cell, None, Some("not unique".into())));
            } else if bm.order != h || Some(&bm.charpoly) != space.particular_monic() {
                counterexamples.push(counterexample(
                    cell,
                    Some(bm.charpoly.poly()),
                    Some("Berlekamp-Massey disagrees".into()),
                ));
            }
        }
    }
    Ok(VerifyReport {
        theorem: "example35".into(),
        grid: BTreeMap::from([
            ("hmax".to_string(), hmax as i64),
            ("pmax".to_string(), pmax as i64),
        ]),
        checked,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    })
}

/// For each prime power `q` and `1 <= h <= min(q, hmax)`: `binom(q - h, i)`
/// mod `p` on `-h + 1..=q - 1` satisfies the recurrence with reciprocal
/// characteristic polynomial `(1 + x)^h`.
pub fn verify_example36(qs: &[u64], hmax: usize) -> Result<VerifyReport<RecurrenceCounterexample>> {
    let start = Instant::now();
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for &q in qs {
        let (p, _) = crate::arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let field = make_field(p, 1)?;
        for h in 1..=hmax.min(q as usize) {
            let hi = h as i64;
            let k = q as i64 - hi;
            let seq = binom_seq(k, &field, 1 - hi, q as i64 - 1)?;
            // (1 + x)^h is palindromic, so it is its own reciprocal
            let a = CharPoly::new(Poly::from_ints(&field, &[1, 1]).pow(h as u64))?;
            checked += 1;
            if !crate::polyseq::satisfies(&seq, &a)? {
                counterexamples.push(RecurrenceCounterexample {
                    k,
                    h,
                    u: 1 - hi,
                    v: q as i64 - 1,
                    witness_poly: Some(a.poly().to_text()),
                    detail: Some(format!("q = {q}")),
                });
            }
        }
    }
    Ok(VerifyReport {
        theorem: "example36".into(),
        grid: BTreeMap::from([("hmax".to_string(), hmax as i64)]),
        checked,
        counterexamples,
        outside_hypothesis: 0,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyseq::satisfies;

    fn f(p: u64) -> FieldDesc {
        make_field(p, 1).unwrap()
    }

    #[test]
    fn solve_binomial_three() {
        let f7 = f(7);
        let seq = RangedSeq::from_ints(&f7, 0, &[1, 3, 3, 1]).unwrap();
        let space = solution_space(&seq, 2);
        assert!(space.monic_solvable());
        assert!(space.unique_monic());
        assert_eq!(
            space.particular_monic().unwrap().poly(),
            &Poly::from_ints(&f7, &[1, 1, 1])
        );
        assert_eq!(space.rank(), 2);
    }

    #[test]
    fn no_order_one_for_k4_mod7() {
        let seq = binom_seq(4, &f(7), 0, 4).unwrap();
        let space = solution_space(&seq, 1);
        assert!(!space.monic_solvable());
        assert!(space.monic_directions().is_empty());
    }

    #[test]
    fn alternating_order_one() {
        let f5 = f(5);
        let seq = RangedSeq::from_ints(&f5, 0, &[1, 4, 1, 4, 1]).unwrap();
        let space = solution_space(&seq, 1);
        assert_eq!(
            space.particular_monic().unwrap().poly(),
            &Poly::from_ints(&f5, &[1, 1])
        );
    }

    #[test]
    fn vacuous_space() {
        let f5 = f(5);
        let seq = RangedSeq::from_ints(&f5, 0, &[1, 2]).unwrap();
        let space = solution_space(&seq, 2);
        assert!(space.is_vacuous());
        assert_eq!(space.dimension(), 3);
        assert!(space.monic_solvable());
    }

    #[test]
    fn basis_vectors_solve_the_system() {
        let f3 = f(3);
        let seq = binom_seq(7, &f3, -1, 9).unwrap();
        for h in 0..=5 {
            let space = solution_space(&seq, h);
            let m = equations_matrix(&seq, h);
            for w in space.homogeneous_basis() {
                for i in 0..m.rows() {
                    let dot = (0..=h).fold(f3.zero(), |acc, j| acc + &m.get(i, j) * &w[j]);
                    assert!(dot.is_zero());
                }
            }
            if let Some(a) = space.particular_monic() {
                assert!(satisfies(&seq, a).unwrap());
                for d in space.monic_directions() {
                    assert!(d.degree().is_none_or(|deg| deg < h));
                    let shifted = CharPoly::new(a.poly() + &d).unwrap();
                    assert!(satisfies(&seq, &shifted).unwrap());
                }
            }
        }
    }

    #[test]
    fn bm_examples() {
        let f7 = f(7);
        let seq = RangedSeq::from_ints(&f7, 0, &[1, 3, 3, 1]).unwrap();
        let bm = minimal_checked(&seq).unwrap();
        assert_eq!(bm.order, 2);
        assert_eq!(bm.charpoly.poly(), &Poly::from_ints(&f7, &[1, 1, 1]));

        let zeros = RangedSeq::from_ints(&f7, 3, &[0, 0, 0, 0]).unwrap();
        assert_eq!(berlekamp_massey(&zeros).order, 0);

        // s_v = 1, otherwise zero: only the vacuous recurrence of order v-u+1
        let spike = RangedSeq::from_ints(&f7, 0, &[0, 0, 0, 1]).unwrap();
        let bm = minimal_checked(&spike).unwrap();
        assert_eq!(bm.order, 4);
        assert!(bm.vacuous);
    }

    #[test]
    fn bm_unique_for_odd_k() {
        for h in 1..=4usize {
            let k = 2 * h as i64 - 1;
            for p in [11u64, 13, 17] {
                if (p as i64) < k + h as i64 {
                    continue;
                }
                let seq = binom_seq(k, &f(p), 0, k).unwrap();
                let space = solution_space(&seq, h);
                assert!(space.unique_monic());
                let bm = minimal_checked(&seq).unwrap();
                assert_eq!(bm.order, h);
                assert_eq!(&bm.charpoly, space.particular_monic().unwrap());
            }
        }
    }

    #[test]
    fn remark39_examples() {
        // p = 5, k = 4, h = 2 on 0..=4
        let seq = binom_seq(4, &f(5), 0, 4).unwrap();
        assert_eq!(equations_matrix(&seq, 2).rank(), 1);
        // p = 7, k = 6, h = 3
        let seq = binom_seq(6, &f(7), 0, 6).unwrap();
        let space = solution_space(&seq, 3);
        assert_eq!(equations_matrix(&seq, 3).rank(), 1);
        assert_eq!(space.dimension(), 3);
        // u = -h leaves the window: the first equation forces a_h = 0
        let seq = binom_seq(4, &f(5), -1, 3).unwrap();
        assert!(!remark39_exact_window(5, 4, 1, -1));
        assert_eq!(equations_matrix(&seq.slice(-1, 1).unwrap(), 1).rank(), 2);
    }

    #[test]
    fn small_sweeps_are_clean() {
        for p in [2u64, 3, 5, 7] {
            let limits = Limits::default_for(p);
            assert!(verify_thm33(p, limits).unwrap().is_verified());
            assert!(verify_thm38(p, limits).unwrap().is_verified());
            assert!(verify_remark39(p, limits).unwrap().is_verified());
        }
        let r = verify_thm33(7, Limits::default_for(7)).unwrap();
        assert!(r.checked > 0);
        assert!(r.outside_hypothesis > 0);
    }
}
