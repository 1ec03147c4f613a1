#![allow(dead_code, clippy::eq_op)]

use modcat::exactnum::{Cyclotomic, Rational};
use num_bigint::BigInt;
use rand::Rng;

pub const CONDUCTORS: [u32; 20] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 20, 24, 48, 60];

pub fn element(m: u32, terms: &[(i64, i64, i64)]) -> Cyclotomic {
    let t: Vec<(i64, Rational)> = terms
        .iter()
        .map(|(e, n, d)| (*e, Rational::new(BigInt::from(*n), BigInt::from(*d))))
        .collect();
    Cyclotomic::from_terms(m, &t).expect("valid conductor")
}

pub fn random_element<R: Rng>(rng: &mut R, m: u32) -> Cyclotomic {
    let k = rng.gen_range(0..=4);
    let terms: Vec<(i64, i64, i64)> = (0..k)
        .map(|_| (rng.gen_range(0..m as i64), rng.gen_range(-9..=9), rng.gen_range(1..=6)))
        .collect();
    element(m, &terms)
}

/// Integer coefficients of the `m`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    let mut p = vec![-1i64];
    p.resize(m as usize + 1, 0);
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = poly_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dl = den.len();
    let mut q = vec![0i64; r.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = r[i + dl - 1] / den[dl - 1];
        q[i] = c;
        for j in 0..dl {
            r[i + j] -= c * den[j];
        }
    }
    assert!(r.iter().all(|x| *x == 0));
    q
}

/// `Phi_m(zeta_m^k)`.
pub fn phi_at_root(m: u32, k: i64) -> Cyclotomic {
    cyclotomic_poly(m)
        .iter()
        .enumerate()
        .map(|(i, c)| &Cyclotomic::from_integer(*c) * &Cyclotomic::root(m, k * i as i64))
        .sum()
}

/// All exact field checks on a triple; returns the first failing identity.
pub fn field_checks(m: u32, a: &Cyclotomic, b: &Cyclotomic, c: &Cyclotomic, k: i64) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{what} at conductor {m}: a={a}, b={b}, c={c}, k={k}"));
    if &(a + b) + c != a + &(b + c) || a + b != b + a {
        return fail("addition");
    }
    if &(a * b) * c != a * &(b * c) || a * b != b * a {
        return fail("multiplication");
    }
    if a * &(b + c) != &(a * b) + &(a * c) {
        return fail("distributivity");
    }
    if !(a - a).is_zero() || a * &Cyclotomic::one() != *a {
        return fail("identities");
    }
    if !a.is_zero() && !(a * &a.inv().map_err(|e| e.to_string())?).is_one() {
        return fail("inverse");
    }
    let g = |x: &Cyclotomic| x.galois(k).map_err(|e| e.to_string());
    if g(&(a + b))? != &g(a)? + &g(b)? || g(&(a * b))? != &g(a)? * &g(b)? {
        return fail("Galois homomorphism");
    }
    let l = 2 * m;
    if (a * b).lift(l) != &a.lift(l) * &b.lift(l) {
        return fail("lift");
    }
    if a.conj() != g_conj(a) {
        return fail("conjugation");
    }
    Ok(())
}

fn g_conj(a: &Cyclotomic) -> Cyclotomic {
    a.galois(-1).expect("-1 is a unit")
}

pub fn unit<R: Rng>(rng: &mut R, m: u32) -> i64 {
    loop {
        let k = rng.gen_range(1..=m.max(2) as i64);
        if modcat::exactnum::gcd(k, m as i64) == 1 {
            return k;
        }
    }
}
