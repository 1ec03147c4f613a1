//! Integer-numerator polynomials over a common denominator, generic over a
//! checked machine-word path and an arbitrary-precision path.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::table::CycTable;

pub(crate) trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn from_i64(v: i64) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_i64(v: i64) -> Option<Self> {
        Some(v)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, o: &Self) -> Option<Self> {
        let g = Integer::gcd(&(*self as i128), &(*o as i128));
        i64::try_from(g).ok()
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_i64(v: i64) -> Option<Self> {
        Some(BigInt::from(v))
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Option<Self> {
        Some(Integer::gcd(self, o))
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

/// `(num[0] + num[1] z + ... ) / den` in the power basis of one conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Poly<T> {
    pub num: Vec<T>,
    pub den: T,
}

impl<T: Coeff> Poly<T> {
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    /// Brings the pair to lowest terms with a positive denominator.
    pub fn normalize(mut self) -> Option<Self> {
        if self.den.is_negative() {
            self.den = self.den.neg()?;
            for c in self.num.iter_mut() {
                *c = c.neg()?;
            }
        }
        if self.is_zero() {
            self.den = T::one();
            return Some(self);
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g == T::one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c)?;
            }
        }
        if g != T::one() {
            for c in self.num.iter_mut() {
                *c = c.div_exact(&g);
            }
            self.den = self.den.div_exact(&g);
        }
        Some(self)
    }

    pub fn add(&self, o: &Self) -> Option<Self> {
        let num = if self.den == o.den {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| a.add(b))
                .collect::<Option<Vec<_>>>()?
        } else {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| a.mul(&o.den)?.add(&b.mul(&self.den)?))
                .collect::<Option<Vec<_>>>()?
        };
        let den = if self.den == o.den {
            self.den.clone()
        } else {
            self.den.mul(&o.den)?
        };
        Poly { num, den }.normalize()
    }

    pub fn neg(&self) -> Option<Self> {
        Some(Poly {
            num: self.num.iter().map(|c| c.neg()).collect::<Option<Vec<_>>>()?,
            den: self.den.clone(),
        })
    }

    pub fn scale(&self, num: &T, den: &T) -> Option<Self> {
        Poly {
            num: self.num.iter().map(|c| c.mul(num)).collect::<Option<Vec<_>>>()?,
            den: self.den.mul(den)?,
        }
        .normalize()
    }

    /// Accumulates `c * zeta^e` (e already reduced mod m) into `out`.
    fn accumulate(out: &mut [T], table: &CycTable, e: usize, c: &T) -> Option<()> {
        for (j, r) in &table.reduction[e] {
            let idx = *j as usize;
            let t = c.mul(&T::from_i64(*r)?)?;
            out[idx] = out[idx].add(&t)?;
        }
        Some(())
    }

    pub fn mul(&self, o: &Self, table: &CycTable) -> Option<Self> {
        let m = table.m as usize;
        let mut slots: Vec<T> = vec![T::zero(); m];
        let mut touched = vec![false; m];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = (i + j) % m;
                slots[e] = slots[e].add(&a.mul(b)?)?;
                touched[e] = true;
            }
        }
        let mut out = vec![T::zero(); table.phi];
        for e in 0..m {
            if touched[e] && !slots[e].is_zero() {
                if e < table.phi {
                    out[e] = out[e].add(&slots[e])?;
                } else {
                    Self::accumulate(&mut out, table, e, &slots[e])?;
                }
            }
        }
        Poly {
            num: out,
            den: self.den.mul(&o.den)?,
        }
        .normalize()
    }

    /// Multiplies by `zeta^e`; no renormalization is needed since this is a unit.
    pub fn mul_root(&self, e: u32, table: &CycTable) -> Option<Self> {
        let m = table.m as usize;
        let mut out = vec![T::zero(); table.phi];
        for (i, a) in self.num.iter().enumerate() {
            if !a.is_zero() {
                Self::accumulate(&mut out, table, (i + e as usize) % m, a)?;
            }
        }
        Poly {
            num: out,
            den: self.den.clone(),
        }
        .normalize()
    }

    /// Substitutes `zeta -> zeta^k` (k is a unit mod m, already reduced).
    pub fn galois(&self, k: u64, table: &CycTable) -> Option<Self> {
        let m = table.m as u64;
        let mut out = vec![T::zero(); table.phi];
        for (i, a) in self.num.iter().enumerate() {
            if !a.is_zero() {
                Self::accumulate(&mut out, table, ((i as u64 * k) % m) as usize, a)?;
            }
        }
        Poly {
            num: out,
            den: self.den.clone(),
        }
        .normalize()
    }

    /// Re-expresses the element in the power basis of a multiple conductor,
    /// using `zeta_m = zeta_l^factor`.
    pub fn lift(&self, factor: u64, table: &CycTable) -> Option<Self> {
        let l = table.m as u64;
        let mut out = vec![T::zero(); table.phi];
        for (i, a) in self.num.iter().enumerate() {
            if !a.is_zero() {
                Self::accumulate(&mut out, table, ((i as u64 * factor) % l) as usize, a)?;
            }
        }
        Poly {
            num: out,
            den: self.den.clone(),
        }
        .normalize()
    }
}

impl Poly<i64> {
    pub fn to_big(&self) -> Poly<BigInt> {
        Poly {
            num: self.num.iter().map(|c| BigInt::from(*c)).collect(),
            den: BigInt::from(self.den),
        }
    }
}

impl Poly<BigInt> {
    pub fn to_small(&self) -> Option<Poly<i64>> {
        Some(Poly {
            num: self.num.iter().map(|c| c.to_i64()).collect::<Option<Vec<_>>>()?,
            den: self.den.to_i64()?,
        })
    }
}
