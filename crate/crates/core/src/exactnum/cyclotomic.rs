use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arith::{divisors, gcd, lcm};
use super::coeff::Poly;
use super::interval::{root_embedding, ComplexInterval};
use super::table::{table, CycTable};
use super::{CycError, Rational};

pub const DEFAULT_CONDUCTOR_CAP: u32 = 10_000;

static CONDUCTOR_CAP: AtomicU32 = AtomicU32::new(DEFAULT_CONDUCTOR_CAP);

/// Largest conductor arithmetic may produce.
pub fn conductor_cap() -> u32 {
    CONDUCTOR_CAP.load(AtomicOrdering::Relaxed)
}

pub fn set_conductor_cap(cap: u32) {
    CONDUCTOR_CAP.store(cap.max(1), AtomicOrdering::Relaxed);
}

pub(crate) fn check_conductor(m: u64) -> Result<u32, CycError> {
    if m == 0 {
        return Err(CycError::InvalidConductor(0));
    }
    if m > conductor_cap() as u64 {
        return Err(CycError::ConductorCap {
            conductor: m,
            cap: conductor_cap(),
        });
    }
    Ok(m as u32)
}

#[derive(Clone, Debug)]
enum Repr {
    Small(Poly<i64>),
    Big(Poly<BigInt>),
}

/// An element of the cyclotomic field `Q(zeta_M)`, stored in the power basis
/// `1, zeta, ..., zeta^(phi(M)-1)` reduced modulo the M-th cyclotomic
/// polynomial. Values with different conductors compare equal when they are
/// the same complex number.
///
/// Arithmetic on operands with different conductors happens in the field of
/// the least common multiple. Exceeding the conductor cap panics; callers
/// handling user input check conductors up front.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    repr: Repr,
}

fn demote(p: Poly<BigInt>) -> Repr {
    match p.to_small() {
        Some(s) => Repr::Small(s),
        None => Repr::Big(p),
    }
}

/// Runs `$op` on the machine-word representation when possible and falls
/// back to arbitrary precision on overflow.
macro_rules! checked_op {
    ($repr:expr, |$p:ident| $op:expr) => {{
        match $repr {
            Repr::Small(small) => {
                let $p = small;
                match $op {
                    Some(r) => Repr::Small(r),
                    None => {
                        let $p = &small.to_big();
                        demote($op.expect("bigint arithmetic cannot overflow"))
                    }
                }
            }
            Repr::Big(big) => {
                let $p = big;
                demote($op.expect("bigint arithmetic cannot overflow"))
            }
        }
    }};
}

macro_rules! checked_op2 {
    ($a:expr, $b:expr, |$p:ident, $q:ident| $op:expr) => {{
        match ($a, $b) {
            (Repr::Small(x), Repr::Small(y)) => {
                let ($p, $q) = (x, y);
                match $op {
                    Some(r) => Repr::Small(r),
                    None => {
                        let ($p, $q) = (&x.to_big(), &y.to_big());
                        demote($op.expect("bigint arithmetic cannot overflow"))
                    }
                }
            }
            (x, y) => {
                let xb = big_of(x);
                let yb = big_of(y);
                let ($p, $q) = (xb.as_ref(), yb.as_ref());
                demote($op.expect("bigint arithmetic cannot overflow"))
            }
        }
    }};
}

fn big_of(r: &Repr) -> Cow<'_, Poly<BigInt>> {
    match r {
        Repr::Small(s) => Cow::Owned(s.to_big()),
        Repr::Big(b) => Cow::Borrowed(b),
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic {
            conductor: 1,
            repr: Repr::Small(Poly {
                num: vec![v],
                den: 1,
            }),
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        let p = Poly {
            num: vec![q.numer().clone()],
            den: q.denom().clone(),
        };
        Cyclotomic {
            conductor: 1,
            repr: demote(p),
        }
    }

    /// `zeta_m^e` with `zeta_m = exp(2 pi i / m)`.
    pub fn root(m: u32, e: i64) -> Self {
        let m = check_conductor(m as u64).unwrap_or_else(|e| panic!("{e}"));
        let t = table(m);
        let e = e.rem_euclid(m as i64) as usize;
        let mut num = vec![0i64; t.phi];
        for (j, r) in &t.reduction[e] {
            num[*j as usize] = *r;
        }
        Cyclotomic {
            conductor: m,
            repr: Repr::Small(Poly { num, den: 1 }),
        }
    }

    /// `sum c * zeta_m^e` over the given terms; exponents may be any integers.
    pub fn from_terms(m: u32, terms: &[(i64, Rational)]) -> Result<Self, CycError> {
        let m = check_conductor(m as u64)?;
        let mut acc = Cyclotomic::zero().lift(m);
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&Cyclotomic::root(m, *e) * &Cyclotomic::from_rational(c));
        }
        Ok(acc)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// phi(M), the number of stored coefficients.
    pub fn degree(&self) -> usize {
        match &self.repr {
            Repr::Small(p) => p.num.len(),
            Repr::Big(p) => p.num.len(),
        }
    }

    /// Coefficient of `zeta^i` in the canonical power basis.
    pub fn coeff(&self, i: usize) -> Rational {
        match &self.repr {
            Repr::Small(p) => Rational::new(BigInt::from(p.num[i]), BigInt::from(p.den)),
            Repr::Big(p) => Rational::new(p.num[i].clone(), p.den.clone()),
        }
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.degree()).map(|i| self.coeff(i)).collect()
    }

    /// Nonzero canonical terms `(exponent, coefficient)` in increasing exponent.
    pub fn terms(&self) -> Vec<(u32, Rational)> {
        (0..self.degree())
            .map(|i| (i as u32, self.coeff(i)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Canonical numerators and common denominator.
    pub fn numerators(&self) -> (Vec<BigInt>, BigInt) {
        let p = big_of(&self.repr);
        (p.num.clone(), p.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small(p) => p.is_zero(),
            Repr::Big(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, if all coefficients of `zeta^i` with `i >= 1` vanish.
    pub fn as_rational(&self) -> Option<Rational> {
        let rational = match &self.repr {
            Repr::Small(p) => p.num[1..].iter().all(|c| *c == 0),
            Repr::Big(p) => p.num[1..].iter().all(|c| c.is_zero()),
        };
        rational.then(|| self.coeff(0))
    }

    /// True iff every power-basis coefficient is an integer; the power basis
    /// is an integral basis of `Z[zeta_M]`.
    pub fn is_algebraic_integer(&self) -> bool {
        match &self.repr {
            Repr::Small(p) => p.den == 1,
            Repr::Big(p) => p.den.is_one(),
        }
    }

    fn table(&self) -> std::sync::Arc<CycTable> {
        table(self.conductor)
    }

    /// Re-expresses the element with a conductor that is a multiple of the
    /// current one.
    pub fn lift(&self, l: u32) -> Self {
        assert!(
            l.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {}",
            self.conductor,
            l
        );
        if l == self.conductor {
            return self.clone();
        }
        let l = check_conductor(l as u64).unwrap_or_else(|e| panic!("{e}"));
        let t = table(l);
        let factor = (l / self.conductor) as u64;
        Cyclotomic {
            conductor: l,
            repr: checked_op!(&self.repr, |p| p.lift(factor, &t)),
        }
    }

    fn common(&self, other: &Self) -> (Cow<'_, Self>, Cyclotomic, u32) {
        if self.conductor == other.conductor {
            return (Cow::Borrowed(self), other.clone(), self.conductor);
        }
        let l = lcm(self.conductor as u64, other.conductor as u64);
        let l = check_conductor(l).unwrap_or_else(|e| panic!("{e}"));
        (Cow::Owned(self.lift(l)), other.lift(l), l)
    }

    fn binary_same(&self, other: &Self, mul: bool) -> Self {
        if self.conductor == other.conductor {
            return self.binary_aligned(other, mul);
        }
        let (a, b, _) = self.common(other);
        a.binary_aligned(&b, mul)
    }

    fn binary_aligned(&self, other: &Self, mul: bool) -> Self {
        let repr = if mul {
            // multiplication by a rational needs no reduction
            if self.conductor == 1 || other.conductor == 1 {
                let (r, x) = if self.conductor == 1 { (self, other) } else { (other, self) };
                return x.scale_by_rational_part(r);
            }
            let t = self.table();
            checked_op2!(&self.repr, &other.repr, |p, q| p.mul(q, &t))
        } else {
            checked_op2!(&self.repr, &other.repr, |p, q| p.add(q))
        };
        Cyclotomic {
            conductor: self.conductor,
            repr,
        }
    }

    /// Multiplies by a conductor-1 element (a rational).
    fn scale_by_rational_part(&self, r: &Self) -> Self {
        let repr = checked_op2!(&self.repr, &r.repr, |p, q| p.scale(&q.num[0], &q.den));
        Cyclotomic {
            conductor: self.conductor,
            repr,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.scale_by_rational_part(&Cyclotomic::from_rational(q))
    }

    /// `self * zeta_m^e`.
    pub fn mul_root(&self, m: u32, e: i64) -> Self {
        let l = check_conductor(lcm(self.conductor as u64, m as u64)).unwrap_or_else(|e| panic!("{e}"));
        let x = self.lift(l);
        let e = (e.rem_euclid(m as i64) as u64 * (l / m) as u64) % l as u64;
        let t = table(l);
        Cyclotomic {
            conductor: l,
            repr: checked_op!(&x.repr, |p| p.mul_root(e as u32, &t)),
        }
    }

    /// Applies the automorphism `zeta_M -> zeta_M^k`.
    pub fn galois(&self, k: i64) -> Result<Self, CycError> {
        let m = self.conductor as i64;
        if gcd(k, m) != 1 {
            return Err(CycError::NotCoprime {
                k,
                conductor: self.conductor,
            });
        }
        let k = k.rem_euclid(m) as u64;
        if k == 1 % m as u64 {
            return Ok(self.clone());
        }
        let t = self.table();
        Ok(Cyclotomic {
            conductor: self.conductor,
            repr: checked_op!(&self.repr, |p| p.galois(k, &t)),
        })
    }

    /// Applies an automorphism of a larger cyclotomic field that acts as
    /// `zeta_n -> zeta_n^k` on `Q(zeta_n)`, where `n = modulus`.
    ///
    /// The result lives in conductor `lcm(M, modulus)`.
    pub fn galois_ext(&self, k: i64, modulus: u32) -> Result<Self, CycError> {
        let n = modulus as i64;
        if gcd(k, n) != 1 {
            return Err(CycError::NotCoprime { k, conductor: modulus });
        }
        let l = check_conductor(lcm(self.conductor as u64, modulus as u64))?;
        let mut kk = k.rem_euclid(n);
        while gcd(kk, l as i64) != 1 {
            kk += n;
        }
        self.lift(l).galois(kk)
    }

    /// Complex conjugate under the standard embedding.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// True iff the element lies in `Q(zeta_n)`.
    pub fn is_in_subfield(&self, n: u32) -> bool {
        let m = self.conductor as i64;
        let g = gcd(m, n as i64);
        (1..m)
            .filter(|k| gcd(*k, m) == 1 && (k - 1) % g == 0 && *k != 1)
            .all(|k| self.galois(k).expect("unit") == *self)
    }

    /// Smallest conductor whose field contains the element.
    pub fn minimal_conductor(&self) -> u32 {
        divisors(self.conductor as u64)
            .into_iter()
            .map(|d| d as u32)
            .find(|d| self.is_in_subfield(*d))
            .unwrap_or(self.conductor)
    }

    /// The same number stored at its minimal conductor.
    pub fn reduced(&self) -> Self {
        let d = self.minimal_conductor();
        if d == self.conductor {
            return self.clone();
        }
        let n = Cyclotomic::root(d, 0).lift(d).degree();
        // columns: zeta_d^i lifted to the current conductor; last column: self
        let cols: Vec<Vec<Rational>> = (0..n)
            .map(|i| Cyclotomic::root(d, i as i64).lift(self.conductor).coeffs())
            .chain(std::iter::once(self.coeffs()))
            .collect();
        let rows = self.degree();
        let mut a: Vec<Vec<Rational>> = (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::with_capacity(n);
        for col in 0..n {
            let Some(p) = (pivot_row..rows).find(|r| !a[*r][col].is_zero()) else {
                continue;
            };
            a.swap(pivot_row, p);
            let inv = a[pivot_row][col].recip();
            for v in a[pivot_row].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..rows {
                if r != pivot_row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=n {
                        let t = &f * &a[pivot_row][c];
                        a[r][c] -= t;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        let terms: Vec<(i64, Rational)> = pivots.iter().map(|(r, c)| (*c as i64, a[*r][n].clone())).collect();
        let out = Cyclotomic::from_terms(d, &terms).expect("divisor of a valid conductor");
        debug_assert!(out == *self);
        out
    }

    fn monomial(&self) -> Option<(usize, Rational)> {
        let terms = self.terms();
        (terms.len() == 1).then(|| (terms[0].0 as usize, terms[0].1.clone()))
    }

    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyclotomic::from_rational(&q.recip()).lift(self.conductor));
        }
        if let Some((e, c)) = self.monomial() {
            return Ok(Cyclotomic::root(self.conductor, -(e as i64)).scale(&c.recip()));
        }
        // product of the nontrivial conjugates; x times it is the norm
        let m = self.conductor as i64;
        let mut others = Cyclotomic::one().lift(self.conductor);
        for k in 2..m {
            if gcd(k, m) == 1 {
                others = &others * &self.galois(k)?;
            }
        }
        let norm = (self * &others)
            .as_rational()
            .expect("norm of a cyclotomic number is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one().lift(self.conductor);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Certified enclosure of the value under `zeta_M -> exp(2 pi i / M)`.
    pub fn embed(&self, bits: u32) -> ComplexInterval {
        let (num, den) = self.numerators();
        let work = bits + 32;
        let mut acc = ComplexInterval::zero(work);
        for (i, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = root_embedding(self.conductor, i as i64, work);
            acc = acc.add(&z.mul_int(c));
        }
        acc.div_int(&den).round_to(bits)
    }

    /// Orders two real elements (both fixed by complex conjugation).
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering, CycError> {
        self.cmp_real_capped(other, 1 << 16)
    }

    /// As [`Cyclotomic::cmp_real`] but gives up once the working precision
    /// exceeds `max_bits`.
    pub fn cmp_real_capped(&self, other: &Self, max_bits: u32) -> Result<Ordering, CycError> {
        if !self.is_real() || !other.is_real() {
            return Err(CycError::NotReal);
        }
        let diff = self - other;
        if diff.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(q) = diff.as_rational() {
            return Ok(if q.is_positive() { Ordering::Greater } else { Ordering::Less });
        }
        let mut bits = 64;
        loop {
            if let Some(ord) = diff.embed(bits).re.sign() {
                return Ok(ord);
            }
            if bits >= max_bits {
                return Err(CycError::PrecisionExhausted(bits));
            }
            bits = (bits * 2).min(max_bits.max(64));
        }
    }

    /// Coefficient vector at a fixed conductor, for exact hashing.
    pub fn key_at(&self, conductor: u32) -> (Vec<BigInt>, BigInt) {
        self.lift(conductor).numerators()
    }

    /// The pair `(m, e)` when the element is `zeta_m^e` with minimal `m`.
    pub fn as_root_of_unity(&self) -> Option<(u32, u32)> {
        let m = self.conductor;
        // roots of unity in Q(zeta_M) are the 2M-th (M odd) or M-th (M even) roots
        let big = if m % 2 == 1 { 2 * m } else { m };
        (0..big).find_map(|e| {
            (Cyclotomic::root(big, e as i64) == *self).then(|| {
                let g = gcd(e as i64, big as i64) as u32;
                let g = if g == 0 { big } else { g };
                (big / g, e / g)
            })
        })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor != other.conductor {
            let (a, b, _) = self.common(other);
            return a.as_ref() == &b;
        }
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_integer(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(&q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary_same(rhs, false)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary_same(rhs, true)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            repr: checked_op!(&self.repr, |p| p.neg()),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if *e == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn roots_and_basic_identities() {
        assert_eq!(Cyclotomic::root(1, 0), Cyclotomic::one());
        assert_eq!(Cyclotomic::root(4, 2), Cyclotomic::from_integer(-1));
        let s: Cyclotomic = (1..5).map(|e| Cyclotomic::root(5, e)).sum();
        assert_eq!(s, Cyclotomic::from_integer(-1));
        assert_eq!(&Cyclotomic::root(8, 1) * &Cyclotomic::root(8, 7), Cyclotomic::one());
        assert_eq!(Cyclotomic::root(6, 1).conductor(), 6);
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let x = &Cyclotomic::one() + &Cyclotomic::root(3, 1);
        // (1 + z)(-z) = -z - z^2 = 1
        assert_eq!(x.inv().unwrap(), -Cyclotomic::root(3, 1));
        assert_eq!(Cyclotomic::zero().inv(), Err(CycError::DivisionByZero));
        let y = &Cyclotomic::from_integer(2) + &Cyclotomic::root(12, 1);
        assert_eq!(&y * &y.inv().unwrap(), Cyclotomic::one());
    }

    #[test]
    fn additive_inverse_and_mixed_conductors() {
        let x = &Cyclotomic::root(5, 2) + &Cyclotomic::root(3, 1).scale(&q(3, 7));
        assert!((&x + &(-&x)).is_zero());
        assert_eq!(x.conductor(), 15);
        // zeta_4 * zeta_4 lifted through conductor 12
        let i = Cyclotomic::root(4, 1).lift(12);
        assert_eq!(&i * &i, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn galois_on_roots() {
        assert_eq!(Cyclotomic::root(8, 1).galois(3).unwrap(), Cyclotomic::root(8, 3));
        assert!(Cyclotomic::root(8, 1).galois(2).is_err());
        let x = &Cyclotomic::root(8, 1) + &Cyclotomic::root(8, 2).scale(&q(1, 2));
        let a = x.galois(3).unwrap().galois(5).unwrap();
        assert_eq!(a, x.galois(15 % 8).unwrap());
    }

    #[test]
    fn integrality_and_rationality() {
        assert!((&Cyclotomic::root(12, 1) + &Cyclotomic::from_integer(3)).is_algebraic_integer());
        assert!(!Cyclotomic::from_rational(&q(1, 2)).is_algebraic_integer());
        let golden = &(&Cyclotomic::one() + &Cyclotomic::root(5, 1)) + &Cyclotomic::root(5, 4);
        assert!(golden.is_algebraic_integer());
        // golden^2 = golden + 1
        assert_eq!(&golden * &golden, &golden + &Cyclotomic::one());
        assert_eq!(Cyclotomic::root(4, 2).as_rational(), Some(q(-1, 1)));
        assert_eq!(Cyclotomic::root(3, 1).as_rational(), None);
        let all: Cyclotomic = (0..7).map(|e| Cyclotomic::root(7, e)).sum();
        assert_eq!(all.as_rational(), Some(q(0, 1)));
    }

    #[test]
    fn certified_real_comparison() {
        use std::cmp::Ordering::*;
        let zero = Cyclotomic::zero();
        assert_eq!(zero.cmp_real(&zero).unwrap(), Equal);
        let c = &Cyclotomic::root(5, 1) + &Cyclotomic::root(5, 4);
        assert_eq!(c.cmp_real(&zero).unwrap(), Greater);
        let golden = &Cyclotomic::one() + &c;
        assert_eq!(golden.cmp_real(&Cyclotomic::one()).unwrap(), Greater);
        assert_eq!(Cyclotomic::one().cmp_real(&golden).unwrap(), Less);
        assert_eq!(Cyclotomic::root(4, 1).cmp_real(&zero), Err(CycError::NotReal));
    }

    #[test]
    fn subfield_membership() {
        let i = Cyclotomic::root(4, 1).lift(12);
        assert!(i.is_in_subfield(4));
        assert!(!i.is_in_subfield(3));
        assert!(Cyclotomic::root(3, 1).lift(12).is_in_subfield(6));
        assert!(Cyclotomic::from_integer(5).lift(60).is_in_subfield(1));
    }

    #[test]
    fn root_of_unity_detection() {
        assert_eq!(Cyclotomic::root(12, 8).as_root_of_unity(), Some((3, 2)));
        assert_eq!(Cyclotomic::from_integer(-1).as_root_of_unity(), Some((2, 1)));
        assert_eq!(Cyclotomic::from_integer(2).as_root_of_unity(), None);
        assert_eq!((-Cyclotomic::root(5, 1)).as_root_of_unity(), Some((10, 7)));
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let big = Cyclotomic::from_integer(i64::MAX / 2 + 7);
        let x = &big.mul_root(5, 1) + &big;
        let sq = &x * &x;
        let back = &sq * &x.inv().unwrap();
        assert_eq!(back, x);
        assert!(sq.coeff(0).numer() > &BigInt::from(i64::MAX));
    }

    #[test]
    fn display_is_readable() {
        let x = &Cyclotomic::root(8, 3).scale(&q(-1, 2)) + &Cyclotomic::from_integer(2);
        assert_eq!(x.to_string(), "2 - 1/2*z8^3");
    }

    #[test]
    fn reduction_to_minimal_conductor() {
        let phi = &(&Cyclotomic::one() + &Cyclotomic::root(5, 1)) + &Cyclotomic::root(5, 4);
        let lifted = phi.lift(60);
        assert_eq!(lifted.conductor(), 60);
        assert_eq!(lifted.minimal_conductor(), 5);
        let r = lifted.reduced();
        assert_eq!((r.conductor(), r.coeffs()), (5, phi.coeffs()));
        assert_eq!(Cyclotomic::from_integer(3).lift(48).reduced().conductor(), 1);
        assert_eq!(Cyclotomic::root(48, 12).reduced().conductor(), 4);
        // zeta_6 = -zeta_3^2 lives at conductor 3
        assert_eq!(Cyclotomic::root(6, 1).reduced().conductor(), 3);
        let sqrt2 = &Cyclotomic::root(8, 1) + &Cyclotomic::root(8, 7);
        assert_eq!(sqrt2.lift(24).reduced().conductor(), 8);
    }
}
