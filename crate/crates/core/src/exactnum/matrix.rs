//! Dense square matrices over cyclotomic fields.

use std::fmt;

use num_bigint::BigInt;

use super::{CycError, Cyclotomic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    n: usize,
    data: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zeros(n: usize) -> Self {
        CycMatrix {
            n,
            data: vec![Cyclotomic::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one();
        }
        m
    }

    pub fn diagonal(d: &[Cyclotomic]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// Builds from rows; panics unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        CycMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        CycMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc += &(a * b);
                }
                out.push(acc);
            }
        }
        CycMatrix { n, data: out }
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        (0..self.n)
            .map(|i| {
                let mut acc = Cyclotomic::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `v^T * self` for a row vector.
    pub fn vec_mul(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        (0..self.n)
            .map(|j| {
                let mut acc = Cyclotomic::zero();
                for (i, b) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        CycMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        CycMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.n);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Multiplies column `j` by `d[j]`, i.e. `self * diag(d)`.
    pub fn mul_diag(&self, d: &[Cyclotomic]) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) * &d[j])
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, CycError> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|r| !a.get(*r, col).is_zero())
                .ok_or(CycError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).inv()?;
            for j in 0..n {
                a.data[col * n + j] = a.get(col, j) * &p;
                inv.data[col * n + j] = inv.get(col, j) * &p;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let ar = a.get(r, j) - &(&f * a.get(col, j));
                    let ir = inv.get(r, j) - &(&f * inv.get(col, j));
                    a.data[r * n + j] = ar;
                    inv.data[r * n + j] = ir;
                }
            }
        }
        Ok(inv)
    }

    /// Returns `c` with `self = c * other`, if such a scalar exists.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Cyclotomic> {
        let idx = other.data.iter().position(|x| !x.is_zero())?;
        let c = self.data[idx].checked_div(&other.data[idx]).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }

    /// Lifts every entry to one conductor.
    pub fn lift(&self, conductor: u32) -> Self {
        CycMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x.lift(conductor)).collect(),
        }
    }

    /// Least common conductor of the entries.
    pub fn conductor(&self) -> u32 {
        self.data
            .iter()
            .fold(1u64, |acc, x| super::arith::lcm(acc, x.conductor() as u64)) as u32
    }

    /// Exact hash key: canonical coefficient vectors at a fixed conductor.
    pub fn key_at(&self, conductor: u32) -> Vec<(Vec<BigInt>, BigInt)> {
        self.data.iter().map(|x| x.key_at(conductor)).collect()
    }
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let z = Cyclotomic::root(5, 1);
        let m = CycMatrix::from_rows(vec![
            vec![Cyclotomic::one(), z.clone()],
            vec![&z * &z, Cyclotomic::from_integer(3)],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = CycMatrix::from_rows(vec![
            vec![Cyclotomic::one(), z.clone()],
            vec![Cyclotomic::from_integer(2), &z + &z],
        ]);
        assert_eq!(singular.inverse(), Err(CycError::Singular));
    }

    #[test]
    fn scalar_ratio_detects_multiples() {
        let m = CycMatrix::identity(3).scale(&Cyclotomic::root(4, 1));
        assert_eq!(m.scalar_ratio(&CycMatrix::identity(3)), Some(Cyclotomic::root(4, 1)));
        let mut n = CycMatrix::identity(3);
        n.set(0, 1, Cyclotomic::one());
        assert_eq!(n.scalar_ratio(&CycMatrix::identity(3)), None);
    }
}
