//! Small integer helpers shared by the whole crate.

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a as i64, b as i64) as u64 * b
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

pub fn totient(n: u64) -> u64 {
    let mut n0 = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n0 > 1 {
        result -= result / n0;
    }
    result
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n0 = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            out.push(p);
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
        }
        p += 1;
    }
    if n0 > 1 {
        out.push(n0);
    }
    out
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Order of `zeta_m^e` in the group of roots of unity.
pub fn root_order(m: u32, e: i64) -> u32 {
    let e = e.rem_euclid(m as i64);
    (m as i64 / gcd(e, m as i64)) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory_basics() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(60), 16);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(prime_factors(60), vec![2, 3, 5]);
        assert_eq!(mod_inverse(3, 8), Some(3));
        assert_eq!(mod_inverse(2, 8), None);
        assert_eq!(root_order(12, 4), 3);
        assert_eq!(root_order(12, 0), 1);
        let (g, x, y) = ext_gcd(-4, 7);
        assert_eq!(g, 1);
        assert_eq!(-4 * x + 7 * y, 1);
    }
}
