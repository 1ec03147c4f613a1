//! Generalized Frobenius-Schur indicators from modular data.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Violation;
use crate::exactnum::{ext_gcd, gcd, Cyclotomic, Rational};
use crate::modular::{center_double, ModularData};
use crate::slrep::{canonical_center_rep, ModularRep, SL2Mat, SlRepError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IndicatorError {
    #[error("Gauss sums of the center data are unequal")]
    NotCenter,
    #[error("label index {0} out of range")]
    Label(usize),
    #[error(transparent)]
    Rep(#[from] SlRepError),
}

fn big_cyc(x: &BigUint) -> Cyclotomic {
    Cyclotomic::from_rational(&Rational::from_integer(BigInt::from(x.clone())))
}

/// `(1 / dim C) sum_k omega_k^m S_ik mult_k` on the data of a center `Z(C)`.
pub fn nu_center(z: &ModularData, m: i64, i: usize, mult: &[BigUint]) -> Result<Cyclotomic, IndicatorError> {
    let (p, q) = z.gauss_sums();
    if p != q {
        return Err(IndicatorError::NotCenter);
    }
    if i >= z.rank() || mult.len() != z.rank() {
        return Err(IndicatorError::Label(i));
    }
    let mc = z.conductor();
    let sum: Cyclotomic = (0..z.rank())
        .filter(|k| !mult[*k].is_zero())
        .map(|k| &(z.s(i, k) * &Cyclotomic::root(mc, m * z.t_exponents()[k])) * &big_cyc(&mult[k]))
        .sum();
    Ok(sum.checked_div(&p).expect("Gauss sums are nonzero"))
}

/// `nu_{m,1}` of `U_a` at the center label `(i, j)`:
/// `(1 / dim A) sum_{k,l} (omega_k / omega_l)^m S_ik S_{j* l} N_kl^a`.
pub fn nu_bantay(a: &ModularData, m: i64, i: usize, j: usize, obj: usize) -> Cyclotomic {
    let r = a.rank();
    let mc = a.conductor();
    let t = a.t_exponents();
    let jd = a.dual(j);
    let mut sum = Cyclotomic::zero();
    for k in 0..r {
        for l in 0..r {
            let n = a.n(k, l, obj);
            if n == 0 {
                continue;
            }
            let w = Cyclotomic::root(mc, m * (t[k] - t[l]));
            let term = &(&(a.s(i, k) * a.s(jd, l)) * &w) * &Cyclotomic::from_integer(n as i64);
            sum += &term;
        }
    }
    sum.checked_div(a.dim()).expect("dim is nonzero")
}

/// The classical second indicator `nu_2(U_a)`.
pub fn classical_bantay(a: &ModularData, obj: usize) -> Cyclotomic {
    nu_bantay(a, 2, 0, 0, obj)
}

/// `g` in SL(2,Z) with first row `(m, l)`, for coprime `m, l`.
pub fn first_row_matrix(m: i64, l: i64) -> SL2Mat {
    let (g, x, y) = ext_gcd(m, l);
    assert_eq!(g, 1, "({m}, {l}) must be coprime");
    SL2Mat::new(m, l, -y, x).expect("m x + l y = 1")
}

/// Evaluates equivariant indicators through the canonical representation of
/// the center double. Built once per category.
#[derive(Clone, Debug)]
pub struct IndicatorEngine {
    base: Arc<ModularData>,
    double: Arc<ModularData>,
    rep: ModularRep,
}

impl IndicatorEngine {
    pub fn new(base: Arc<ModularData>) -> Result<Self, IndicatorError> {
        let double = Arc::new(center_double(&base));
        let rep = canonical_center_rep(base.dim(), &double)?;
        Ok(IndicatorEngine { base, double, rep })
    }

    pub fn base(&self) -> &Arc<ModularData> {
        &self.base
    }

    pub fn double(&self) -> &Arc<ModularData> {
        &self.double
    }

    pub fn rep(&self) -> &ModularRep {
        &self.rep
    }

    /// Index of the center label `(i, j)`.
    pub fn center_index(&self, i: usize, j: usize) -> usize {
        i * self.base.rank() + j
    }

    /// Dual center label `(i*, j*)`.
    pub fn center_dual(&self, x: usize) -> usize {
        let r = self.base.rank();
        self.center_index(self.base.dual(x / r), self.base.dual(x % r))
    }

    /// `omega_i / omega_j` for the center label `x = (i, j)`.
    pub fn center_twist(&self, x: usize) -> Cyclotomic {
        self.double.omega(x).clone()
    }

    /// `dim Hom(U_k (x) U_l, V)` for every center label `(k, l)`.
    pub fn hom_vector(&self, v: &[BigUint]) -> Vec<BigUint> {
        let r = self.base.rank();
        let mut out = vec![BigUint::zero(); r * r];
        for k in 0..r {
            for l in 0..r {
                let slot = &mut out[k * r + l];
                for (c, vc) in v.iter().enumerate() {
                    let n = self.base.n(k, l, c);
                    if n != 0 && !vc.is_zero() {
                        *slot += vc * n;
                    }
                }
            }
        }
        out
    }

    /// `nu_{m,l}^X(V)` for every center label `X`, where `V` is given by its
    /// multiplicities over the simple objects.
    pub fn nu_row_with(&self, m: i64, l: i64, v: &[BigUint], g_left: Option<SL2Mat>) -> Vec<Cyclotomic> {
        let r = self.base.rank();
        if m == 0 && l == 0 {
            return (0..r * r)
                .map(|x| Cyclotomic::from_integer(self.base.n(x / r, x % r, 0) as i64))
                .collect();
        }
        let q = gcd(m, l);
        let (m1, l1) = (m / q, l / q);
        let vq = self.base.fusion().power_vector(v, q);
        let n: Vec<Cyclotomic> = self.hom_vector(&vq).iter().map(big_cyc).collect();
        let mut g = first_row_matrix(m1, l1);
        if let Some(h) = g_left {
            g = h.mul(&g);
        }
        self.rep.row_times(&n, &g.tilde())
    }

    pub fn nu_row(&self, m: i64, l: i64, v: &[BigUint]) -> Vec<Cyclotomic> {
        self.nu_row_with(m, l, v, None)
    }

    /// `nu_{m,l}` of `U_obj` at the center label `(i, j)`.
    pub fn nu_equivariant(&self, m: i64, l: i64, i: usize, j: usize, obj: usize) -> Cyclotomic {
        let v = self.base.fusion().unit_vector(obj);
        self.nu_row(m, l, &v).swap_remove(self.center_index(i, j))
    }
}

/// One-shot form of [`IndicatorEngine::nu_equivariant`].
pub fn nu_equivariant(
    a: &Arc<ModularData>,
    m: i64,
    l: i64,
    i: usize,
    j: usize,
    obj: usize,
) -> Result<Cyclotomic, IndicatorError> {
    Ok(IndicatorEngine::new(a.clone())?.nu_equivariant(m, l, i, j, obj))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndicatorQuery {
    pub m: i64,
    pub l: i64,
    pub center: (usize, usize),
    pub object: usize,
}

pub type IndicatorTable = BTreeMap<IndicatorQuery, Cyclotomic>;

/// All `nu_{m,l}^{(i,j)}(U_a)` over the given ranges.
pub fn indicator_table(
    engine: &IndicatorEngine,
    ms: std::ops::RangeInclusive<i64>,
    ls: std::ops::RangeInclusive<i64>,
) -> IndicatorTable {
    let r = engine.base.rank();
    let mut out = BTreeMap::new();
    for m in ms {
        for l in ls.clone() {
            for a in 0..r {
                let row = engine.nu_row(m, l, &engine.base.fusion().unit_vector(a));
                for (x, v) in row.into_iter().enumerate() {
                    out.insert(
                        IndicatorQuery {
                            m,
                            l,
                            center: (x / r, x % r),
                            object: a,
                        },
                        v,
                    );
                }
            }
        }
    }
    out
}

/// Outcome of [`identity_suite`].
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    /// Number of individual identities evaluated, by name.
    pub checks: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    fn record(&mut self, name: &str, ok: bool, idx: &[usize], detail: impl FnOnce() -> String) {
        *self.checks.entry(name.to_string()).or_default() += 1;
        if !ok {
            self.violations.push(Violation::new(name, idx, detail()));
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total(&self) -> usize {
        self.checks.values().sum()
    }
}

fn enc(m: i64) -> usize {
    m.rem_euclid(1 << 20) as usize
}

/// Checks, for `1 <= m <= m_max` and `|l| <= l_max`, the identities satisfied
/// by the indicators of every object at every center label: agreement of the
/// `(m,1)` values with the Bantay formula, `nu_N = d`, the twist relation,
/// Galois equivariance, duality, values in `Q_N`, integrality,
/// additivity for coprime `(m,l)`, and independence of the chosen SL(2,Z)
/// element.
pub fn identity_suite(engine: &IndicatorEngine, m_max: i64, l_max: i64) -> SuiteReport {
    let a = &engine.base;
    let r = a.rank();
    let n_fs = a.fs_exponent() as i64;
    let mut rep = SuiteReport::default();
    let units: Vec<Vec<BigUint>> = (0..r).map(|x| a.fusion().unit_vector(x)).collect();

    for obj in 0..r {
        // (1,0) gives Hom spaces, (0,0) gives Hom to the unit
        let row = engine.nu_row(1, 0, &units[obj]);
        for x in 0..r * r {
            let expect = Cyclotomic::from_integer(a.n(x / r, x % r, obj) as i64);
            rep.record("nu_{1,0} = N", row[x] == expect, &[x, obj], || format!("{}", row[x]));
        }
        let b = nu_bantay(a, n_fs, 0, 0, obj);
        let e = engine.nu_equivariant(n_fs, 1, 0, 0, obj);
        rep.record("nu_N = d", b == a.dims()[obj] && e == a.dims()[obj], &[obj], || {
            format!("bantay {b}, equivariant {e}, d = {}", a.dims()[obj])
        });
    }

    for m in -m_max..=m_max {
        for l in -l_max..=l_max {
            let rows: Vec<Vec<Cyclotomic>> = units.iter().map(|v| engine.nu_row(m, l, v)).collect();
            for obj in 0..r {
                let row = &rows[obj];
                for (x, val) in row.iter().enumerate() {
                    let idx = [enc(m), enc(l), x, obj];
                    rep.record("values in Q_N", val.is_in_subfield(n_fs as u32), &idx, || val.to_string());
                    if m != 0 {
                        rep.record("algebraic integrality", val.is_algebraic_integer(), &idx, || val.to_string());
                    }
                }
                // duality, including the l < 0, m = 0 case defined through it
                let neg = engine.nu_row(-m, -l, &units[obj]);
                for x in 0..r * r {
                    let d = engine.center_dual(x);
                    rep.record("duality", neg[x] == row[d], &[enc(m), enc(l), x, obj], || {
                        format!("nu_(-m,-l) = {}, nu_(m,l) at dual = {}", neg[x], row[d])
                    });
                }
            }
            if m <= 0 || m > m_max {
                continue;
            }
            for obj in 0..r {
                let row = &rows[obj];
                if l == 1 {
                    for x in 0..r * r {
                        let b = nu_bantay(a, m, x / r, x % r, obj);
                        rep.record("cross-route (m,1)", b == row[x], &[enc(m), x, obj], || {
                            format!("bantay {b}, equivariant {}", row[x])
                        });
                    }
                }
                let shifted = engine.nu_row(m, m + l, &units[obj]);
                for x in 0..r * r {
                    let w = engine.center_twist(x).inv().expect("roots are units");
                    let expect = &w * &row[x];
                    rep.record("omega twist", shifted[x] == expect, &[enc(m), enc(l), x, obj], || {
                        format!("nu_(m,m+l) = {}, omega^-1 nu_(m,l) = {expect}", shifted[x])
                    });
                }
                // Galois: sigma_k(nu_{m,l}) = nu_{m,kl}, k = 1 mod N, k coprime to mN
                let modulus = (m * n_fs) as u32;
                let ks = (1..=4)
                    .map(|t| 1 + t * n_fs)
                    .filter(|k| gcd(*k, m * n_fs) == 1)
                    .take(2);
                for k in ks {
                    let other = engine.nu_row(m, k * l, &units[obj]);
                    for x in 0..r * r {
                        let s = row[x].galois_ext(k, modulus).expect("k is coprime to mN");
                        rep.record("Galois", s == other[x], &[enc(m), enc(l), k as usize, x, obj], || {
                            format!("sigma_k(nu) = {s}, nu_(m,kl) = {}", other[x])
                        });
                    }
                }
                // stabilizer of (1,0): lower unitriangular matrices
                if gcd(m, l) == 1 {
                    for k in [-2, 1, 3] {
                        let h = SL2Mat::new(1, 0, k, 1).expect("unimodular");
                        let alt = engine.nu_row_with(m, l, &units[obj], Some(h));
                        rep.record("stabilizer independence", alt == *row, &[enc(m), enc(l), enc(k), obj], || {
                            "row changed".into()
                        });
                    }
                }
            }
            // additivity over direct sums, coprime (m, l)
            if gcd(m, l) == 1 && r > 1 {
                for o1 in 0..r {
                    let o2 = (o1 + 1) % r;
                    let mut v = units[o1].clone();
                    v[o2] += 1u32;
                    let sum = engine.nu_row(m, l, &v);
                    for x in 0..r * r {
                        let expect = &rows[o1][x] + &rows[o2][x];
                        rep.record("additivity", sum[x] == expect, &[enc(m), enc(l), x, o1, o2], || {
                            format!("{} != {expect}", sum[x])
                        });
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{catalog, CATALOG_NAMES};

    fn engine(name: &str) -> IndicatorEngine {
        IndicatorEngine::new(Arc::new(catalog(name).unwrap())).unwrap()
    }

    #[test]
    fn classical_values() {
        let t = catalog("toric_code").unwrap();
        for a in 0..4 {
            assert_eq!(classical_bantay(&t, a), Cyclotomic::one());
        }
        let d = catalog("double_semion").unwrap();
        let expect = [1, 1, -1, -1];
        for a in 0..4 {
            assert_eq!(classical_bantay(&d, a), Cyclotomic::from_integer(expect[a]));
        }
    }

    #[test]
    fn center_formula_on_double() {
        let e = engine("toric_code");
        let z = e.double();
        // V = I: N_V^{X_(k,l)} = N_kl^0, and nu_{m,1}^X(I) = dim Hom(X, I)
        let unit = e.hom_vector(&e.base().fusion().unit_vector(0));
        assert_eq!(nu_center(z, 2, 0, &unit).unwrap(), Cyclotomic::one());
        for x in 0..16 {
            let expect = e.base().n(x / 4, x % 4, 0) as i64;
            for m in [1, 2, 3] {
                assert_eq!(nu_center(z, m, x, &unit).unwrap(), Cyclotomic::from_integer(expect));
            }
        }
        let fib = catalog("fibonacci").unwrap();
        assert_eq!(nu_center(&fib, 1, 0, &[1u32.into(), 0u32.into()]), Err(IndicatorError::NotCenter));
    }

    #[test]
    fn nu_center_matches_dimensions() {
        for name in CATALOG_NAMES {
            let e = engine(name);
            let n = e.base().fs_exponent() as i64;
            for a in 0..e.base().rank() {
                let mult = e.hom_vector(&e.base().fusion().unit_vector(a));
                let v = nu_center(e.double(), n, 0, &mult).unwrap();
                assert_eq!(v, e.base().dims()[a]);
            }
        }
    }

    #[test]
    fn equivariant_basics() {
        let e = engine("double_semion");
        for i in 0..4 {
            for j in 0..4 {
                for a in 0..4 {
                    let n = e.base().n(i, j, a) as i64;
                    assert_eq!(e.nu_equivariant(1, 0, i, j, a), Cyclotomic::from_integer(n));
                    for m in 1..=8 {
                        assert_eq!(e.nu_equivariant(m, 1, i, j, a), nu_bantay(e.base(), m, i, j, a));
                    }
                    let (id, jd) = (e.base().dual(i), e.base().dual(j));
                    assert_eq!(e.nu_equivariant(-3, -1, i, j, a), nu_bantay(e.base(), 3, id, jd, a));
                }
            }
        }
    }

    #[test]
    fn first_rows() {
        for (m, l) in [(1, 0), (0, 1), (0, -1), (-1, 0), (3, 5), (-4, 7), (6, -5)] {
            let g = first_row_matrix(m, l);
            assert_eq!((g.a, g.b), (m, l));
        }
    }

    #[test]
    fn suite_runs_clean_on_fibonacci() {
        let e = engine("fibonacci");
        let rep = identity_suite(&e, 3, 2);
        assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(5)]);
        assert!(rep.total() > 100);
    }
}
