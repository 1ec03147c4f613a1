use super::{ModularData, ModularError, ModularParts};
use crate::error::Violation;
use crate::exactnum::{lcm, root_order, CycMatrix, Cyclotomic};
use crate::fusion::enumerate_group;

/// The center `Z(A)` of a modular category: labels `(i,j)` in row-major
/// order, `S_{(i,j),(k,l)} = S_ik S_{j* l}`, twist `omega_i / omega_j`.
pub fn center_double(a: &ModularData) -> ModularData {
    let r = a.rank();
    let m = a.conductor();
    let mut labels = Vec::with_capacity(r * r);
    let mut t = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            labels.push(format!("({},{})", a.labels()[i], a.labels()[j]));
            t.push((a.t_exponents()[i] - a.t_exponents()[j]).rem_euclid(m as i64));
        }
    }
    let s = CycMatrix::from_fn(r * r, |x, y| {
        let (i, j) = (x / r, x % r);
        let (k, l) = (y / r, y % r);
        a.s(i, k) * a.s(a.dual(j), l)
    });
    let parts = ModularParts {
        name: format!("Z({})", a.name()),
        conductor: m,
        labels,
        s,
        t,
        expected_fusion: None,
        expected_dual: None,
    };
    ModularData::new(parts).expect("the center of a modular category is modular")
}

/// Modular data of the twisted double of `Z_{n1} x ... x Z_{nk}`.
///
/// `t[z][a]` is the exponent of `t_z(a)` as a power of `zeta_{t_conductor}`,
/// with group elements indexed as in [`enumerate_group`]. Labels are pairs
/// `(alpha, u)` of a character and a group element, `u` outer.
pub fn dw_abelian(orders: &[u64], t_conductor: u32, t: &[Vec<i64>]) -> Result<ModularData, ModularError> {
    let elems = enumerate_group(orders);
    let g = elems.len();
    if t.len() != g || t.iter().any(|row| row.len() != g) {
        return Err(ModularError::Parse(format!("t table must be {g}x{g}")));
    }
    if t_conductor == 0 {
        return Err(ModularError::Conductor("t conductor must be positive".into()));
    }
    let mut bad = Vec::new();
    for a in 0..g {
        if t[0][a].rem_euclid(t_conductor as i64) != 0 {
            bad.push(Violation::new("t normalization", &[0, a], "t_1 must be trivial"));
        }
        if t[a][0].rem_euclid(t_conductor as i64) != 0 {
            bad.push(Violation::new("t normalization", &[a, 0], "t_z(1) must be 1"));
        }
    }
    if !bad.is_empty() {
        return Err(ModularError::Invalid(bad));
    }

    // every value is a root of unity of order dividing m0
    let exp = orders.iter().fold(1u64, |acc, n| lcm(acc, *n));
    let m0 = lcm(exp, t_conductor as u64) as i64;
    let char_exp = |alpha: &[u64], u: &[u64]| -> i64 {
        alpha
            .iter()
            .zip(u)
            .zip(orders)
            .map(|((x, y), n)| (x * y % n) as i64 * (m0 / *n as i64))
            .sum::<i64>()
    };
    let t_exp = |z: usize, a: usize| t[z][a] * (m0 / t_conductor as i64);
    let labels_idx: Vec<(usize, usize)> = (0..g).flat_map(|u| (0..g).map(move |al| (al, u))).collect();
    // S_xy pairs x* with y, so it is the inverse of the bicharacter b(x, y)
    let s_exp = |x: usize, y: usize| -> i64 {
        let (a1, u1) = labels_idx[x];
        let (a2, u2) = labels_idx[y];
        -(char_exp(&elems[a1], &elems[u2]) + char_exp(&elems[a2], &elems[u1]) + t_exp(u1, u2) + t_exp(u2, u1))
    };
    let t0: Vec<i64> = labels_idx
        .iter()
        .map(|&(al, u)| (char_exp(&elems[al], &elems[u]) + t_exp(u, u)).rem_euclid(m0))
        .collect();

    let n = labels_idx.len();
    for x in 1..n {
        if (0..n).all(|y| s_exp(x, y).rem_euclid(m0) == 0) {
            return Err(ModularError::Invalid(vec![Violation::new(
                "bicharacter non-degeneracy",
                &[x],
                "label pairs trivially with everything",
            )]));
        }
    }

    let fs = t0.iter().fold(1u64, |acc, e| lcm(acc, root_order(m0 as u32, *e) as u64));
    let m = lcm(12 * fs, m0 as u64) as u32;
    let scale = m as i64 / m0;
    let s = CycMatrix::from_fn(n, |x, y| Cyclotomic::root(m, s_exp(x, y) * scale));
    let digits = |v: &[u64]| v.iter().map(|d| d.to_string()).collect::<String>();
    let labels = labels_idx
        .iter()
        .map(|&(al, u)| format!("({},{})", digits(&elems[al]), digits(&elems[u])))
        .collect();
    ModularData::new(ModularParts {
        name: format!("D^w(Z{orders:?})"),
        conductor: m,
        labels,
        s,
        t: t0.iter().map(|e| e * scale).collect(),
        expected_fusion: None,
        expected_dual: None,
    })
}
