//! Outward-rounded dyadic interval arithmetic for certified embeddings of
//! cyclotomic numbers into the complex plane.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// The closed interval `[lo / 2^bits, hi / 2^bits]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u32,
}

fn floor_shift(x: &BigInt, s: u32) -> BigInt {
    x >> s
}

fn ceil_shift(x: &BigInt, s: u32) -> BigInt {
    -((-x) >> s)
}

impl RealInterval {
    pub fn point(v: &BigInt, bits: u32) -> Self {
        let x = v << bits;
        RealInterval {
            lo: x.clone(),
            hi: x,
            bits,
        }
    }

    pub fn zero(bits: u32) -> Self {
        Self::point(&BigInt::zero(), bits)
    }

    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        let scaled = q.numer() << bits;
        let (lo, hi) = (
            Integer::div_floor(&scaled, q.denom()),
            Integer::div_ceil(&scaled, q.denom()),
        );
        RealInterval { lo, hi, bits }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        RealInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Self {
        RealInterval {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let min = c.iter().min().unwrap();
        let max = c.iter().max().unwrap();
        RealInterval {
            lo: floor_shift(min, self.bits),
            hi: ceil_shift(max, self.bits),
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            RealInterval { lo: b, hi: a, bits: self.bits }
        } else {
            RealInterval { lo: a, hi: b, bits: self.bits }
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(k.is_positive());
        RealInterval {
            lo: Integer::div_floor(&self.lo, k),
            hi: Integer::div_ceil(&self.hi, k),
            bits: self.bits,
        }
    }

    /// Widens by `ulps` units of the last place on both sides.
    pub fn widen(&self, ulps: &BigInt) -> Self {
        RealInterval {
            lo: &self.lo - ulps,
            hi: &self.hi + ulps,
            bits: self.bits,
        }
    }

    pub fn round_to(&self, bits: u32) -> Self {
        if bits >= self.bits {
            let s = bits - self.bits;
            return RealInterval {
                lo: &self.lo << s,
                hi: &self.hi << s,
                bits,
            };
        }
        let s = self.bits - bits;
        RealInterval {
            lo: floor_shift(&self.lo, s),
            hi: ceil_shift(&self.hi, s),
            bits,
        }
    }

    /// Upper bound of `|x|` in units of the last place.
    pub fn mag_ulps(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        let scaled = Rational::new(q.numer() << self.bits, q.denom().clone());
        Rational::from(self.lo.clone()) <= scaled && scaled <= Rational::from(self.hi.clone())
    }

    pub fn intersects(&self, o: &Self) -> bool {
        let (a, b) = (self.round_to(self.bits.max(o.bits)), o.round_to(self.bits.max(o.bits)));
        a.lo <= b.hi && b.lo <= a.hi
    }

    /// Sign of every point of the interval, if it is determined.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = Rational::new(&self.lo + &self.hi, BigInt::one() << (self.bits + 1));
        num_traits::ToPrimitive::to_f64(&mid).unwrap_or(f64::NAN)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn zero(bits: u32) -> Self {
        ComplexInterval {
            re: RealInterval::zero(bits),
            im: RealInterval::zero(bits),
        }
    }

    pub fn bits(&self) -> u32 {
        self.re.bits
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexInterval {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        ComplexInterval {
            re: self.re.mul_int(k),
            im: self.im.mul_int(k),
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        ComplexInterval {
            re: self.re.div_int(k),
            im: self.im.div_int(k),
        }
    }

    pub fn round_to(&self, bits: u32) -> Self {
        ComplexInterval {
            re: self.re.round_to(bits),
            im: self.im.round_to(bits),
        }
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }
}

/// Enclosure of pi via Machin's formula.
pub fn pi_interval(bits: u32) -> RealInterval {
    let a = atan_inv(5, bits).mul_int(&BigInt::from(16));
    let b = atan_inv(239, bits).mul_int(&BigInt::from(4));
    a.sub(&b)
}

/// Enclosure of `atan(1/k)` for an integer `k >= 2`.
fn atan_inv(k: u64, bits: u32) -> RealInterval {
    let one = BigInt::one() << bits;
    let k2 = BigInt::from(k * k);
    let mut power = BigInt::from(k);
    let mut acc = RealInterval::zero(bits);
    let mut n = 0u64;
    loop {
        let den = &power * BigInt::from(2 * n + 1);
        let term = RealInterval {
            lo: Integer::div_floor(&one, &den),
            hi: Integer::div_ceil(&one, &den),
            bits,
        };
        if term.hi <= BigInt::one() {
            // alternating series: the remainder is bounded by this term
            return acc.widen(&term.hi);
        }
        acc = if n.is_multiple_of(2) { acc.add(&term) } else { acc.sub(&term) };
        power *= &k2;
        n += 1;
    }
}

/// Enclosures of `(cos x, sin x)` for `|x| <= 4`.
fn cos_sin(x: &RealInterval) -> (RealInterval, RealInterval) {
    let bits = x.bits;
    let mut cos = RealInterval::point(&BigInt::one(), bits);
    let mut sin = RealInterval::zero(bits);
    let mut term = RealInterval::point(&BigInt::one(), bits);
    let mut k = 1u64;
    loop {
        term = term.mul(x).div_int(&BigInt::from(k));
        let part = if (k / 2).is_multiple_of(2) { term.clone() } else { term.neg() };
        if k.is_multiple_of(2) {
            cos = cos.add(&part);
        } else {
            sin = sin.add(&part);
        }
        // once k + 1 >= 2|x| the tail after this term is at most |term|
        if k >= 10 && term.mag_ulps() <= BigInt::one() {
            let slack = term.mag_ulps() + BigInt::one();
            return (cos.widen(&slack), sin.widen(&slack));
        }
        k += 1;
    }
}

/// Enclosure of `exp(2 pi i e / m)`.
pub fn root_embedding(m: u32, e: i64, bits: u32) -> ComplexInterval {
    let m64 = m as i64;
    let mut e = e.rem_euclid(m64);
    if 2 * e > m64 {
        e -= m64;
    }
    let exact = |re: i64, im: i64| ComplexInterval {
        re: RealInterval::point(&BigInt::from(re), bits),
        im: RealInterval::point(&BigInt::from(im), bits),
    };
    // exact quarter turns
    if let Some(0) = (4 * e).checked_rem(m64) {
        return match (4 * e / m64).rem_euclid(4) {
            0 => exact(1, 0),
            1 => exact(0, 1),
            2 => exact(-1, 0),
            _ => exact(0, -1),
        }
    }
    let work = bits + 16;
    let angle = pi_interval(work)
        .mul_int(&BigInt::from(2 * e))
        .div_int(&BigInt::from(m64));
    let (c, s) = cos_sin(&angle);
    ComplexInterval { re: c, im: s }.round_to(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_enclosure_is_tight() {
        let p = pi_interval(128);
        assert!(p.midpoint_f64() - std::f64::consts::PI < 1e-15);
        assert!(&p.hi - &p.lo < BigInt::from(1000));
    }

    #[test]
    fn root_embedding_matches_floats() {
        for (m, e) in [(5u32, 1i64), (7, 3), (12, 5), (60, 7), (8, 1)] {
            let z = root_embedding(m, e, 80);
            let ang = 2.0 * std::f64::consts::PI * e as f64 / m as f64;
            assert!((z.re.midpoint_f64() - ang.cos()).abs() < 1e-12);
            assert!((z.im.midpoint_f64() - ang.sin()).abs() < 1e-12);
            assert!(&z.re.hi - &z.re.lo < BigInt::from(1 << 12));
        }
    }

    #[test]
    fn cos_of_sixty_degrees_contains_half() {
        let z = root_embedding(6, 1, 100);
        let half = Rational::new(1.into(), 2.into());
        assert!(z.re.contains_rational(&half));
        assert!(!z.im.contains_rational(&half));
    }
}
