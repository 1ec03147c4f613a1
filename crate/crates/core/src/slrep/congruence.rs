use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;

use super::{Letter, ModularRep, SlRepError};
use crate::exactnum::{prime_factors, CycMatrix};

pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// `|SL(2, Z/n)| = n^3 prod_{p | n} (1 - p^-2)`.
pub fn sl2_mod_order(n: u64) -> u64 {
    let mut order = n * n * n;
    for p in prime_factors(n) {
        order = order / (p * p) * (p * p - 1);
    }
    order
}

// consistency along S and T edges already forces it along inverse edges
const GENERATORS: [Letter; 2] = [Letter::S, Letter::T(1)];

fn step(x: [u64; 4], g: Letter, n: u64) -> [u64; 4] {
    let [a, b, c, d] = x;
    match g {
        // [[a,b],[c,d]] [[0,-1],[1,0]] = [[b,-a],[d,-c]]
        Letter::S => [b, (n - a) % n, d, (n - c) % n],
        // [[a,b],[c,d]] [[0,1],[-1,0]] = [[-b,a],[-d,c]]
        Letter::SInv => [(n - b) % n, a, (n - d) % n, c],
        Letter::T(k) => {
            let k = k.rem_euclid(n as i64) as u64;
            [a, (a * k + b) % n, c, (c * k + d) % n]
        }
    }
}

/// True iff `x = c y` for a scalar `c`.
fn proportional(x: &CycMatrix, y: &CycMatrix) -> bool {
    let Some(p) = y.entries().iter().position(|v| !v.is_zero()) else {
        return x.entries().iter().all(|v| v.is_zero());
    };
    let xp = &x.entries()[p];
    let yp = &y.entries()[p];
    !xp.is_zero() && x.entries().iter().zip(y.entries()).all(|(xi, yi)| xi * yp == yi * xp)
}

/// Decides whether `rho` factors through SL(2, Z/n) (or, with `projective`,
/// whether its projectivization does) by walking the Cayley graph of
/// SL(2, Z/n) and checking every edge against the images carried along a
/// spanning tree.
pub fn factors_through(rep: &ModularRep, n: u64, projective: bool, enum_cap: u64) -> Result<bool, SlRepError> {
    if n == 0 {
        return Err(SlRepError::InvalidLevel);
    }
    let size = sl2_mod_order(n);
    if size > enum_cap {
        return Err(SlRepError::CapExceeded {
            what: format!("SL(2,Z/{n})"),
            size,
            cap: enum_cap,
        });
    }
    // cheap necessary condition on t before the full walk
    let t_n = rep.t_diag(n as i64);
    let t_ok = if projective {
        t_n.iter().all(|x| *x == t_n[0])
    } else {
        t_n.iter().all(|x| x.is_one())
    };
    if !t_ok {
        return Ok(false);
    }

    let id = [1 % n, 0, 0, 1 % n];
    let mut index: HashMap<[u64; 4], usize> = HashMap::with_capacity(size as usize);
    let mut images: Vec<CycMatrix> = Vec::with_capacity(size as usize);
    let mut queue = VecDeque::new();
    index.insert(id, 0);
    images.push(CycMatrix::identity(rep.rank()).lift(rep.conductor()));
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        let ix = index[&x];
        for g in GENERATORS {
            let y = step(x, g, n);
            let candidate = rep.right_mul(&images[ix], g);
            match index.get(&y) {
                None => {
                    index.insert(y, images.len());
                    images.push(candidate);
                    queue.push_back(y);
                }
                Some(&iy) => {
                    let ok = if projective {
                        proportional(&candidate, &images[iy])
                    } else {
                        candidate == images[iy]
                    };
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
    }
    debug_assert_eq!(images.len() as u64, size);
    Ok(true)
}

/// Smallest `n` with `factors_through(rep, n, projective)`, searching the
/// multiples of the order of `t` (its projective order when `projective`)
/// up to `12 N`.
pub fn congruence_level(rep: &ModularRep, projective: bool, enum_cap: u64) -> Result<Option<u64>, SlRepError> {
    let n_fs = rep.base().fs_exponent() as u64;
    let step = if projective { n_fs } else { rep.t_order() as u64 };
    let mut n = step;
    while n <= 12 * n_fs {
        if factors_through(rep, n, projective, enum_cap)? {
            return Ok(Some(n));
        }
        n += step;
    }
    Ok(None)
}

/// Order of the group generated by `rho(s)` and `rho(t)`.
pub fn image_order(rep: &ModularRep, cap: usize) -> Result<usize, SlRepError> {
    let l = rep.conductor();
    let key = |m: &CycMatrix| -> Vec<(Vec<BigInt>, BigInt)> { m.key_at(l) };
    let id = CycMatrix::identity(rep.rank()).lift(l);
    let mut seen = HashSet::new();
    seen.insert(key(&id));
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in [Letter::S, Letter::T(1)] {
            let y = rep.right_mul(&x, g);
            let k = key(&y);
            if !seen.contains(&k) {
                if seen.len() >= cap {
                    return Err(SlRepError::CapExceeded {
                        what: "image closure".into(),
                        size: seen.len() as u64 + 1,
                        cap: cap as u64,
                    });
                }
                seen.insert(k);
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len())
}
