//! Finite fields `F_q`, `q = p^s`, in a polynomial basis over `F_p`.
//!
//! An element is stored as its *code*: the integer `c_0 + c_1 p + ... +
//! c_{s-1} p^{s-1}` of its coefficient vector. Codes give the enumeration
//! order used for the "least" generator. Multiplication goes through
//! exponent/logarithm tables built once at construction.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith;
use crate::error::{Error, Result};
use crate::polyseq::Poly;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

struct Inner {
    p: u32,
    s: u32,
    q: u32,
    /// Monic modulus, coefficients low degree first, length `s + 1`.
    /// For `s = 1` this is `x`, which is never used for reduction.
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field. Cloning is cheap; two descriptors compare equal when
/// they have the same `p` and `s`, since construction is deterministic.
#[derive(Clone)]
pub struct FieldDesc(Arc<Inner>);

/// Builds `F_{p^s}` with the lexicographically least monic irreducible
/// modulus (low-degree coefficients compared first) and the least primitive
/// element in code order as generator.
pub fn make_field(p: u64, s: u32) -> Result<FieldDesc> {
    if s < 1 {
        return Err(Error::ZeroDegree);
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let q = (p as u128).checked_pow(s).unwrap_or(u128::MAX);
    if q > MAX_FIELD_SIZE as u128 {
        return Err(Error::FieldTooLarge {
            p,
            s,
            cap: MAX_FIELD_SIZE,
        });
    }
    let (p, q) = (p as u32, q as u32);
    let modulus = if s == 1 {
        vec![0, 1]
    } else {
        least_irreducible(p, s as usize)
    };
    let slow = SlowArith {
        p,
        s: s as usize,
        modulus: &modulus,
    };
    let order = (q - 1) as u64;
    let factors = arith::prime_factors(order);
    let generator = (1..q)
        .find(|&g| {
            factors
                .iter()
                .all(|&l| slow.pow(g, order / l) != 1)
        })
        .expect("every finite field has a primitive element");

    let mut exp = Vec::with_capacity((q - 1) as usize);
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u32;
    for i in 0..q - 1 {
        exp.push(cur);
        log[cur as usize] = i;
        cur = slow.mul(cur, generator);
    }
    debug_assert_eq!(cur, 1);

    Ok(FieldDesc(Arc::new(Inner {
        p,
        s,
        q,
        modulus,
        generator,
        exp,
        log,
    })))
}

/// Builds `F_q` from the field size alone.
pub fn field_of_size(q: u64) -> Result<FieldDesc> {
    let (p, s) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    make_field(p, s)
}

/// Coefficient-vector arithmetic used only while the tables are built.
struct SlowArith<'a> {
    p: u32,
    s: usize,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn digits(&self, mut code: u32) -> Vec<u32> {
        let mut d = vec![0; self.s];
        for c in d.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        d
    }

    fn code(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let p = self.p as u64;
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0u64; 2 * self.s - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top down.
        for top in (self.s..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..self.s {
                let shift = top - self.s + j;
                prod[shift] = (prod[shift] + (p - c) * self.modulus[j] as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..self.s].iter().map(|&c| c as u32).collect();
        self.code(&digits)
    }

    fn pow(&self, x: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (x, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Remainder of `f` modulo the monic `g` over `F_p`; both low degree first.
fn rem_mod_p(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let top = r.len() - 1;
        let c = r[top];
        if c != 0 {
            for j in 0..=dg {
                let idx = top - dg + j;
                r[idx] = (r[idx] + (p - c) * g[j] as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// All monic polynomials of degree `d` over `F_p` in lexicographic order of
/// `(c_0, c_1, ..., c_{d-1})`.
fn monic_polys(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![0u32; d + 1];
        coeffs[d] = 1;
        for j in (0..d).rev() {
            coeffs[j] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        coeffs
    })
}

/// Irreducibility over `F_p` by trial division with every monic polynomial
/// of degree at most half the degree.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    (1..=n / 2).all(|d| monic_polys(p, d).all(|g| rem_mod_p(f, &g, p).iter().any(|&c| c != 0)))
}

fn least_irreducible(p: u32, s: usize) -> Vec<u32> {
    monic_polys(p, s)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

impl FieldDesc {
    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.s == 1
    }

    /// Monic modulus coefficients over `F_p`, low degree first.
    pub fn modulus_coeffs(&self) -> Option<&[u32]> {
        (self.0.s > 1).then_some(&self.0.modulus[..])
    }

    /// The modulus as a polynomial over the prime field; `None` when `s = 1`.
    pub fn modulus_poly(&self) -> Option<Poly> {
        let coeffs = self.modulus_coeffs()?;
        let prime = make_field(self.0.p as u64, 1).expect("prime subfield");
        let elems = coeffs.iter().map(|&c| prime.elem_unchecked(c)).collect();
        Some(Poly::from_elems(&prime, elems).expect("same field"))
    }

    pub fn generator(&self) -> FieldElem {
        self.elem_unchecked(self.0.generator)
    }

    pub fn zero(&self) -> FieldElem {
        self.elem_unchecked(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem_unchecked(1)
    }

    /// Element with the given code.
    pub fn elem(&self, code: u32) -> Result<FieldElem> {
        if code >= self.0.q {
            return Err(Error::BadElement(code.to_string()));
        }
        Ok(self.elem_unchecked(code))
    }

    pub(crate) fn elem_unchecked(&self, code: u32) -> FieldElem {
        debug_assert!(code < self.0.q);
        FieldElem {
            field: self.clone(),
            code,
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        self.elem_unchecked(self.reduce_int(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        let r = n.mod_floor(&BigInt::from(self.0.p));
        self.elem_unchecked(r.to_u32().expect("residue below p"))
    }

    pub(crate) fn reduce_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    /// Element from its coefficient vector (low degree first, at most `s`
    /// entries, each below `p`).
    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElem> {
        if digits.len() > self.0.s as usize || digits.iter().any(|&d| d >= self.0.p) {
            return Err(Error::BadElement(format!("{digits:?}")));
        }
        let code = digits.iter().rev().fold(0u32, |acc, &c| acc * self.0.p + c);
        Ok(self.elem_unchecked(code))
    }

    /// Parses the text encoding: a residue for prime fields, otherwise
    /// comma-separated base-`p` digits, low degree first. A single integer
    /// is accepted in extension fields as an element of the prime subfield;
    /// negative integers are reduced mod `p`.
    pub fn parse_elem(&self, text: &str) -> Result<FieldElem> {
        let bad = || Error::BadElement(text.to_string());
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() == 1 {
            let n: i64 = parts[0].parse().map_err(|_| bad())?;
            return Ok(self.from_int(n));
        }
        let digits = parts
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        self.from_digits(&digits).map_err(|_| bad())
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.0.q).map(|c| self.elem_unchecked(c))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.0.q).map(|c| self.elem_unchecked(c))
    }

    pub fn digits_of(&self, mut code: u32) -> Vec<u32> {
        let mut d = vec![0; self.0.s as usize];
        for c in d.iter_mut() {
            *c = code % self.0.p;
            code /= self.0.p;
        }
        d
    }

    // Raw arithmetic on codes. Callers guarantee the codes are in range.

    pub fn add_raw(&self, x: u32, y: u32) -> u32 {
        let p = self.0.p;
        if self.0.s == 1 {
            let r = x + y;
            return if r >= p { r - p } else { r };
        }
        if p == 2 {
            return x ^ y;
        }
        let (mut x, mut y) = (x, y);
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.0.s {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    }

    pub fn neg_raw(&self, x: u32) -> u32 {
        let p = self.0.p;
        if self.0.s == 1 {
            return if x == 0 { 0 } else { p - x };
        }
        if p == 2 {
            return x;
        }
        let mut x = x;
        let (mut out, mut place) = (0u32, 1u32);
        for _ in 0..self.0.s {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        out
    }

    pub fn sub_raw(&self, x: u32, y: u32) -> u32 {
        self.add_raw(x, self.neg_raw(y))
    }

    pub fn mul_raw(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let n = self.0.q - 1;
        let l = self.0.log[x as usize] + self.0.log[y as usize];
        self.0.exp[(if l >= n { l - n } else { l }) as usize]
    }

    /// `None` for zero.
    pub fn inv_raw(&self, x: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        let n = self.0.q - 1;
        Some(self.0.exp[((n - self.0.log[x as usize]) % n) as usize])
    }

    /// `None` for a negative power of zero.
    pub fn pow_raw(&self, x: u32, e: i64) -> Option<u32> {
        if x == 0 {
            return match e.cmp(&0) {
                Ordering::Less => None,
                Ordering::Equal => Some(1),
                Ordering::Greater => Some(0),
            };
        }
        let n = (self.0.q - 1) as i128;
        let l = (self.0.log[x as usize] as i128 * e as i128).rem_euclid(n);
        Some(self.0.exp[l as usize])
    }

    /// Discrete logarithm to the base of the generator; `None` for zero.
    pub fn log_raw(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.0.log[x as usize])
    }

    pub(crate) fn check_same(&self, other: &FieldDesc) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.s == other.0.s)
    }
}

impl Eq for FieldDesc {}

impl Hash for FieldDesc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.s.hash(state);
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.0.p, self.0.s)
    }
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({self})")
    }
}

/// Accepts either `p^s` or the field size `q`.
impl FromStr for FieldDesc {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::BadElement(text.to_string());
        match text.split_once('^') {
            Some((p, s)) => {
                let p = p.trim().parse().map_err(|_| bad())?;
                let s = s.trim().parse().map_err(|_| bad())?;
                make_field(p, s)
            }
            None => field_of_size(text.trim().parse().map_err(|_| bad())?),
        }
    }
}

/// An element of a finite field; carries its field.
#[derive(Clone)]
pub struct FieldElem {
    field: FieldDesc,
    code: u32,
}

impl FieldElem {
    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn digits(&self) -> Vec<u32> {
        self.field.digits_of(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    pub fn try_add(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.field.check_same(&rhs.field)?;
        Ok(self.with(self.field.add_raw(self.code, rhs.code)))
    }

    pub fn try_sub(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.field.check_same(&rhs.field)?;
        Ok(self.with(self.field.sub_raw(self.code, rhs.code)))
    }

    pub fn try_mul(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.field.check_same(&rhs.field)?;
        Ok(self.with(self.field.mul_raw(self.code, rhs.code)))
    }

    pub fn try_div(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.try_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElem> {
        self.field
            .inv_raw(self.code)
            .map(|c| self.with(c))
            .ok_or(Error::DivisionByZero)
    }

    /// Any integer exponent; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElem> {
        self.field
            .pow_raw(self.code, e)
            .map(|c| self.with(c))
            .ok_or(Error::DivisionByZero)
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = (self.field.q() - 1) as u64;
        arith::divisors(n)
            .into_iter()
            .find(|&d| self.field.pow_raw(self.code, d as i64) == Some(1))
    }

    fn with(&self, code: u32) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            code,
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field == other.field
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.code.hash(state);
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.p(), self.field.s(), self.code).cmp(&(
            other.field.p(),
            other.field.s(),
            other.code,
        ))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.code)
        } else {
            let digits: Vec<String> = self.digits().iter().map(u32::to_string).collect();
            write!(f, "{}", digits.join(","))
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.field)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;

            /// Panics when the operands live in different fields; use the
            /// `try_` variant to get an error instead.
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field mismatch")
            }
        }

        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;

            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        self.with(self.field.neg_raw(self.code))
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        -&self
    }
}

/// The unique subgroup of `F_q^*` of a given order `t`, generated by
/// `g^((q-1)/t)`.
#[derive(Clone, Debug)]
pub struct SubgroupDesc {
    field: FieldDesc,
    order: u64,
    /// Powers of the subgroup generator, starting at 1.
    elements: Vec<u32>,
    members: HashSet<u32>,
}

pub fn subgroup_of_order(field: &FieldDesc, t: u64) -> Result<SubgroupDesc> {
    let n = (field.q() - 1) as u64;
    if t == 0 || n % t != 0 {
        return Err(Error::NotADivisor(t, n));
    }
    let gen = field
        .pow_raw(field.generator().code, (n / t) as i64)
        .expect("generator is nonzero");
    let mut elements = Vec::with_capacity(t as usize);
    let mut cur = 1u32;
    for _ in 0..t {
        elements.push(cur);
        cur = field.mul_raw(cur, gen);
    }
    let members = elements.iter().copied().collect();
    Ok(SubgroupDesc {
        field: field.clone(),
        order: t,
        elements,
        members,
    })
}

impl SubgroupDesc {
    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Elements in generator-power order, starting at 1.
    pub fn elements(&self) -> Vec<FieldElem> {
        self.elements
            .iter()
            .map(|&c| self.field.elem_unchecked(c))
            .collect()
    }

    pub fn codes(&self) -> &[u32] {
        &self.elements
    }

    /// Membership by exponentiation: `x^t = 1`.
    pub fn contains(&self, x: &FieldElem) -> bool {
        x.field() == &self.field && self.contains_raw(x.code)
    }

    pub fn contains_raw(&self, code: u32) -> bool {
        code != 0 && self.field.pow_raw(code, self.order as i64) == Some(1)
    }

    /// Membership by lookup in the enumerated element set.
    pub fn contains_enumerated(&self, x: &FieldElem) -> bool {
        x.field() == &self.field && self.members.contains(&x.code)
    }

    /// The coset `a·G`, in the same order as [`SubgroupDesc::elements`].
    pub fn coset(&self, a: &FieldElem) -> Result<Vec<FieldElem>> {
        self.field.check_same(a.field())?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self
            .coset_raw(a.code)
            .map(|c| self.field.elem_unchecked(c))
            .collect())
    }

    pub fn coset_raw(&self, a: u32) -> impl Iterator<Item = u32> + '_ {
        self.elements.iter().map(move |&g| self.field.mul_raw(a, g))
    }
}

/// Free-function form of [`SubgroupDesc::coset`].
pub fn coset(a: &FieldElem, group: &SubgroupDesc) -> Result<Vec<FieldElem>> {
    group.coset(a)
}
