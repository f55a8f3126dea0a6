use proptest::prelude::*;

use finrec::fermat::{self, CurveParams};
use finrec::polyseq::{
    check_weight_lemma, reciprocal, reciprocal_of_degree, satisfies, satisfies_by_product,
};
use finrec::recsolve::{berlekamp_massey, solution_space};
use finrec::{arith, field_of_size, make_field, subgroup_of_order, CharPoly, FieldDesc, Poly, RangedSeq};

fn prime_field() -> impl Strategy<Value = FieldDesc> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| make_field(p, 1).unwrap())
}

fn any_field() -> impl Strategy<Value = FieldDesc> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 13, 25]).prop_map(|q| field_of_size(q).unwrap())
}

fn codes(field: &FieldDesc, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..field.q(), len)
}

fn poly_from(field: &FieldDesc, c: &[u32]) -> Poly {
    Poly::from_elems(field, c.iter().map(|&x| field.elem(x).unwrap()).collect()).unwrap()
}

fn monic(field: &FieldDesc, lower: &[u32]) -> CharPoly {
    let mut c = lower.to_vec();
    c.push(1);
    CharPoly::new(poly_from(field, &c)).unwrap()
}

fn seq_from(field: &FieldDesc, u: i64, c: &[u32]) -> RangedSeq {
    RangedSeq::new(field, u, c.iter().map(|&x| field.elem(x).unwrap()).collect()).unwrap()
}

/// Sequence satisfying the recurrence `lower` (monic completion), from
/// `init` initial values.
fn recurrent(field: &FieldDesc, lower: &[u32], init: &[u32], len: usize) -> Vec<u32> {
    let h = lower.len();
    let mut s: Vec<u32> = init.iter().copied().take(h).collect();
    s.resize(h, 0);
    while s.len() < len {
        let i = s.len() - h;
        let mut next = 0;
        for (j, &a) in lower.iter().enumerate() {
            next = field.sub_raw(next, field.mul_raw(a, s[i + j]));
        }
        s.push(next);
    }
    s.truncate(len);
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn satisfies_matches_product_window(
        (field, lower, vals, u) in any_field().prop_flat_map(|f| {
            let lo = codes(&f, 0..=5);
            let vals = codes(&f, 1..=12);
            (Just(f), lo, vals, -4i64..4)
        })
    ) {
        let a = monic(&field, &lower);
        let s = seq_from(&field, u, &vals);
        prop_assert_eq!(satisfies(&s, &a).unwrap(), satisfies_by_product(&s, &a).unwrap());
    }

    #[test]
    fn satisfies_on_recurrent_sequences(
        (field, lower, init, len) in prime_field().prop_flat_map(|f| {
            (Just(f.clone()), codes(&f, 1..=4), codes(&f, 4..=4), 1usize..14)
        })
    ) {
        let vals = recurrent(&field, &lower, &init, len);
        let s = seq_from(&field, 0, &vals);
        let a = monic(&field, &lower);
        prop_assert!(satisfies(&s, &a).unwrap());
        prop_assert!(satisfies_by_product(&s, &a).unwrap());
    }
}

proptest! {
    #[test]
    fn reciprocal_is_an_involution(
        (field, lower) in any_field().prop_flat_map(|f| (Just(f.clone()), codes(&f, 1..=6)))
    ) {
        prop_assume!(lower[0] != 0);
        let a = monic(&field, &lower);
        let once = reciprocal(&a);
        prop_assert_eq!(once.degree(), Some(a.order()));
        let twice = reciprocal_of_degree(&once, a.order());
        prop_assert_eq!(&twice, a.poly());
    }

    #[test]
    fn reciprocal_degree_drops_iff_constant_term_vanishes(
        (field, lower) in any_field().prop_flat_map(|f| (Just(f.clone()), codes(&f, 1..=6)))
    ) {
        let a = monic(&field, &lower);
        let deg = reciprocal(&a).degree().unwrap();
        prop_assert_eq!(deg < a.order(), lower[0] == 0);
    }

    #[test]
    fn multiples_of_a_recurrence_are_recurrences(
        (field, lower, other, init, len) in prime_field().prop_flat_map(|f| {
            (Just(f.clone()), codes(&f, 1..=3), codes(&f, 0..=3), codes(&f, 3..=3), 1usize..14)
        })
    ) {
        let vals = recurrent(&field, &lower, &init, len);
        let s = seq_from(&field, -2, &vals);
        let a = monic(&field, &lower);
        let b = monic(&field, &other);
        let ab = CharPoly::new(a.poly() * b.poly()).unwrap();
        prop_assume!(ab.order() as i64 <= s.v() - s.u());
        prop_assert!(satisfies(&s, &a).unwrap());
        prop_assert!(satisfies(&s, &ab).unwrap());
    }

    #[test]
    fn weight_lemma_on_random_products(
        (field, xi, k, g) in prop::sample::select(vec![5u64, 7, 13, 9, 25, 27])
            .prop_map(|q| field_of_size(q).unwrap())
            .prop_flat_map(|f| {
                let p = f.p() as usize;
                (Just(f.clone()), 1..f.q(), 1..p, codes(&f, 1..=7))
            })
    ) {
        let xi = field.elem(xi).unwrap();
        let g = poly_from(&field, &g);
        prop_assume!(!g.is_zero() && !g.eval(&xi).is_zero());
        let f = &Poly::linear(&xi).pow(k as u64) * &g;
        let r = check_weight_lemma(&f, &xi).unwrap();
        prop_assert_eq!(r.multiplicity, k);
        prop_assert_eq!(r.holds, Some(true));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn berlekamp_massey_is_minimal(
        (field, vals) in prime_field().prop_flat_map(|f| (Just(f.clone()), codes(&f, 1..=12)))
    ) {
        let s = seq_from(&field, 0, &vals);
        let bm = berlekamp_massey(&s);
        prop_assert!(satisfies(&s, &bm.charpoly).unwrap());
        prop_assert!(solution_space(&s, bm.order).monic_solvable());
        if bm.order > 0 {
            prop_assert!(!solution_space(&s, bm.order - 1).monic_solvable());
        }
    }

    #[test]
    fn solution_space_vectors_solve_the_system(
        (field, vals, h) in prime_field().prop_flat_map(|f| (Just(f.clone()), codes(&f, 1..=12), 0usize..6))
    ) {
        let s = seq_from(&field, 0, &vals);
        let space = solution_space(&s, h);
        if let Some(a) = space.particular_monic() {
            prop_assert!(satisfies(&s, a).unwrap());
        }
        for w in space.basis_polys() {
            // a basis vector is a recurrence whenever it is monic after scaling
            if w.degree() == Some(h) {
                let inv = w.leading().unwrap().inv().unwrap();
                prop_assert!(satisfies(&s, &CharPoly::new(w.scale(&inv)).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn field_operations_agree_with_axioms(
        (field, x, y, z) in any_field().prop_flat_map(|f| {
            let q = f.q();
            (Just(f), 0..q, 0..q, 0..q)
        })
    ) {
        let (x, y, z) = (field.elem(x).unwrap(), field.elem(y).unwrap(), field.elem(z).unwrap());
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&x.try_div(&y).unwrap() * &y, x.clone());
            prop_assert_eq!(y.pow(-3).unwrap() * y.pow(3).unwrap(), field.one());
        }
    }
}

/// A single nonzero value at the end admits no recurrence of order `h`
/// when `h <= v - u < 2h`.
#[test]
fn spike_sequence_has_no_recurrence() {
    for p in [2u64, 3, 5] {
        let field = make_field(p, 1).unwrap();
        for h in 1..=4usize {
            for span in h..2 * h {
                for u in -2i64..=2 {
                    let mut vals = vec![0i64; span + 1];
                    vals[span] = 1;
                    let s = RangedSeq::from_ints(&field, u, &vals).unwrap();
                    let space = solution_space(&s, h);
                    assert!(!space.monic_solvable(), "p={p} h={h} span={span}");
                    assert!(space.dimension() > 0, "nonzero solution must exist");
                }
            }
        }
    }
}

/// Every monic solution found by the solver is a recurrence, over every
/// binomial grid cell for small primes.
#[test]
fn solver_agrees_with_direct_check_on_binomial_grid() {
    for p in [2u64, 3, 5, 7] {
        let field = make_field(p, 1).unwrap();
        for k in 0..=p as i64 + 3 {
            for h in 0..=4usize {
                let hi = h as i64;
                for u in -hi..=k + hi {
                    for v in u..=k + hi {
                        let s = finrec::binom_seq(k, &field, u, v).unwrap();
                        if let Some(a) = solution_space(&s, h).particular_monic() {
                            assert!(satisfies(&s, a).unwrap(), "p={p} k={k} h={h} u={u} v={v}");
                        }
                    }
                }
            }
        }
    }
}

fn curves(q_max: u64, mut visit: impl FnMut(&FieldDesc, u64)) {
    for q in arith::prime_powers_up_to(q_max) {
        let f = field_of_size(q).unwrap();
        for n in 2..q {
            if n % f.p() as u64 != 0 {
                visit(&f, n);
            }
        }
    }
}

#[test]
fn point_count_depends_only_on_gcd() {
    curves(49, |f, n| {
        let m = arith::gcd(n, f.q() as u64 - 1);
        if m < 2 || m == n {
            return;
        }
        for (a, b) in [(1i64, 1i64), (2, 3), (-1, 5)] {
            let (a, b) = (f.from_int(a), f.from_int(b));
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let c = CurveParams::new(f, n, a, b).unwrap();
            let cm = c.with_exponent(m).unwrap();
            assert_eq!(
                fermat::count_points_bruteforce(&c).unwrap(),
                fermat::count_points_bruteforce(&cm).unwrap(),
                "q={} n={n}",
                f.q()
            );
            assert_eq!(fermat::count_points_subgroup(&c).unwrap().total, fermat::count_points_bruteforce(&c).unwrap().total);
        }
    });
}

#[test]
fn axis_points_are_e_times_n() {
    for q in arith::prime_powers_up_to(49) {
        let f = field_of_size(q).unwrap();
        for n in arith::divisors(q - 1).into_iter().filter(|&n| n >= 2) {
            for a in f.nonzero_elements() {
                for b in f.nonzero_elements() {
                    let c = CurveParams::new(&f, n, a.clone(), b.clone()).unwrap();
                    let r = fermat::count_points_subgroup(&c).unwrap();
                    assert_eq!(r.d, r.e as u64 * n);
                }
            }
        }
    }
}

#[test]
fn intersection_is_symmetric_and_matches_enumeration() {
    for q in arith::prime_powers_up_to(49) {
        let f = field_of_size(q).unwrap();
        for t in arith::divisors(q - 1) {
            let g = subgroup_of_order(&f, t).unwrap();
            for a in f.nonzero_elements() {
                for b in f.nonzero_elements() {
                    let ab = fermat::intersection_size(&a, &b, &g);
                    assert_eq!(ab, fermat::intersection_size(&b, &a, &g));
                    assert_eq!(ab, fermat::intersection_size_enumerated(&a, &b, &g));
                }
            }
        }
    }
}

#[test]
fn witness_identity_over_extension_fields() {
    for q in [4u64, 8, 9, 16, 25] {
        let f = field_of_size(q).unwrap();
        for t in arith::divisors(q - 1) {
            let g = subgroup_of_order(&f, t).unwrap();
            for a in f.nonzero_elements() {
                for b in f.nonzero_elements() {
                    let w = fermat::gcd_witness(&g, &a, &b).unwrap();
                    assert!(w.identity_ok && w.dependence_ok, "q={q} t={t} a={a} b={b}");
                    assert_eq!(w.intersection(t), fermat::intersection_size(&a, &b, &g));
                }
            }
        }
    }
}

/// For `k = 2h - 1` the monic order-`h` solution is unique exactly when
/// `B(k, h - 1, 0)` is nonsingular mod `p`.
#[test]
fn unique_solution_matches_hankel_determinant() {
    use finrec::hankel::{nonvanishing_mod_p, HankelSpec};
    for h in 1..=4usize {
        let k = 2 * h as i64 - 1;
        for p in (2u64..=31).filter(|&p| arith::is_prime(p)) {
            let field = make_field(p, 1).unwrap();
            let s = finrec::binom_seq(k, &field, 0, k).unwrap();
            let unique = solution_space(&s, h).unique_monic();
            let nonsingular = nonvanishing_mod_p(&HankelSpec::new(k, h - 1, 0), p).nonvanishing;
            assert_eq!(unique, nonsingular, "h={h} p={p}");
            if p as i64 >= k + h as i64 {
                assert!(unique, "h={h} p={p}");
            }
        }
    }
}
