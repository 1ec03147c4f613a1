//! Per-conductor data: Euler phi, the cyclotomic polynomial and the table
//! expressing every power of a primitive root in the power basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::arith::{divisors, totient};

/// Power-basis data for the conductor `m`.
#[derive(Debug)]
pub(crate) struct CycTable {
    pub m: u32,
    pub phi: usize,
    /// `reduction[e]` is `zeta_m^e` written in the power basis, sparse.
    pub reduction: Vec<Vec<(u32, i64)>>,
}

impl CycTable {
    fn build(m: u32) -> CycTable {
        let phi = totient(m as u64) as usize;
        let poly = cyclotomic_poly(m);
        debug_assert_eq!(poly.len(), phi + 1);
        let mut reduction = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..m {
            reduction.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i as u32, *c))
                    .collect(),
            );
            // multiply by x and reduce the degree-phi term with the monic Phi_m
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (j, c) in cur.iter_mut().enumerate() {
                    *c = c
                        .checked_sub(top.checked_mul(poly[j]).expect("reduction table overflow"))
                        .expect("reduction table overflow");
                }
            }
        }
        CycTable { m, phi, reduction }
    }
}

/// Coefficients (lowest degree first) of the m-th cyclotomic polynomial.
pub(crate) fn cyclotomic_poly(m: u32) -> Vec<i64> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&m) {
        return p.as_ref().clone();
    }
    // x^m - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m as u64) {
        if d as u32 == m {
            continue;
        }
        let den = cyclotomic_poly(d as u32);
        num = exact_div_monic(&num, &den);
    }
    cache.write().unwrap().insert(m, Arc::new(num.clone()));
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    quot
}

pub(crate) fn table(m: u32) -> Arc<CycTable> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&m) {
        return Arc::clone(t);
    }
    let t = Arc::new(CycTable::build(m));
    cache.write().unwrap().entry(m).or_insert_with(|| Arc::clone(&t));
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        let p105 = cyclotomic_poly(105);
        assert_eq!(p105.len(), 49);
        assert_eq!(p105[7], -2);
    }

    #[test]
    fn reduction_of_top_power() {
        let t = table(5);
        assert_eq!(t.phi, 4);
        // zeta^4 = -1 - zeta - zeta^2 - zeta^3
        assert_eq!(t.reduction[4], vec![(0, -1), (1, -1), (2, -1), (3, -1)]);
        let t8 = table(8);
        assert_eq!(t8.reduction[4], vec![(0, -1)]);
    }
}
