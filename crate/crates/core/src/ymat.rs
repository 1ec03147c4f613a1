//! Y-tensors `Y_ab^c(J, K)`, their integrality and the inequality against
//! fusion multiplicities.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Violation;
use crate::exactnum::{gcd, lcm, mod_inverse, root_order, CycError, CycMatrix, Cyclotomic};
use crate::indicators::nu_bantay;
use crate::modular::ModularData;
use crate::slrep::{find_lifting_params, SlRepError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum YError {
    #[error("root exponent for label {0} does not give an m-th root of its twist")]
    InvalidRoot(usize),
    #[error("m must be positive")]
    InvalidM,
    #[error("J or K is singular")]
    Singular,
    #[error("K is not symmetric")]
    NotSymmetric,
    #[error("routes disagree at ({0}, {1}, {2})")]
    RouteMismatch(usize, usize, usize),
    #[error(transparent)]
    Lifting(#[from] SlRepError),
    #[error(transparent)]
    Arithmetic(#[from] CycError),
}

/// `Y[a][b][c] = Y_ab^c`.
pub type YTensor = Vec<Vec<Vec<Cyclotomic>>>;

/// An `m`-th root `R = diag(zeta_L^{r_i})` of the twist matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YQuery {
    pub m: u32,
    pub conductor: u32,
    pub roots: Vec<i64>,
}

impl YQuery {
    /// Default root: inside `Q_{ord omega_i}` when `m` is invertible modulo
    /// the order of `omega_i`, otherwise the least exponent that works.
    pub fn default_for(a: &ModularData, m: u32) -> Result<Self, YError> {
        if m == 0 {
            return Err(YError::InvalidM);
        }
        let big_m = a.conductor() as i64;
        let l = lcm(big_m as u64, m as u64 * a.fs_exponent() as u64) as i64;
        let roots = a
            .t_exponents()
            .iter()
            .map(|t| {
                let o = root_order(a.conductor(), *t) as i64;
                let target = t * (l / big_m);
                if gcd(m as i64, o) == 1 {
                    let u = t * o / big_m;
                    let inv = mod_inverse(m as i64, o).unwrap_or(0);
                    (u * inv).rem_euclid(o) * (l / o)
                } else {
                    (0..l).find(|r| (m as i64 * r - target).rem_euclid(l) == 0).expect("a root exists")
                }
            })
            .collect();
        Ok(YQuery {
            m,
            conductor: l as u32,
            roots,
        })
    }

    /// Same query with the root for label `i` replaced by exponent `r`.
    pub fn with_root(mut self, i: usize, r: i64) -> Self {
        self.roots[i] = r.rem_euclid(self.conductor as i64);
        self
    }

    pub fn eta(&self) -> Vec<Cyclotomic> {
        self.roots.iter().map(|r| Cyclotomic::root(self.conductor, *r)).collect()
    }

    pub fn validate(&self, a: &ModularData) -> Result<(), YError> {
        if self.m == 0 {
            return Err(YError::InvalidM);
        }
        for (i, e) in self.eta().iter().enumerate() {
            if i >= a.rank() || e.pow(self.m as i64)? != *a.omega(i) {
                return Err(YError::InvalidRoot(i));
            }
        }
        if self.roots.len() != a.rank() {
            return Err(YError::InvalidRoot(self.roots.len().min(a.rank())));
        }
        Ok(())
    }
}

/// `Y_ab^c = sum_d s_ad Q_bd (Q^-1)_cd / s_0d` with `Q = J s K s J`, `s = S / lambda`.
pub fn y_tensor(a: &ModularData, j: &[Cyclotomic], k: &CycMatrix, lambda: &Cyclotomic) -> Result<YTensor, YError> {
    let r = a.rank();
    if !k.is_symmetric() {
        return Err(YError::NotSymmetric);
    }
    let s = a.s_matrix().scale(&lambda.inv()?);
    let s_inv = s.mul(&s).mul(&s);
    let jm = CycMatrix::diagonal(j);
    let j_inv: Vec<Cyclotomic> = j.iter().map(|x| x.inv()).collect::<Result<_, _>>().map_err(|_| YError::Singular)?;
    let k_inv = k.inverse().map_err(|_| YError::Singular)?;
    let q = jm.mul(&s).mul(k).mul(&s).mul(&jm);
    let q_inv = CycMatrix::diagonal(&j_inv)
        .mul(&s_inv)
        .mul(&k_inv)
        .mul(&s_inv)
        .mul(&CycMatrix::diagonal(&j_inv));
    let w: Vec<Cyclotomic> = (0..r).map(|d| s.get(0, d).inv()).collect::<Result<_, _>>()?;
    let mut y = vec![vec![vec![Cyclotomic::zero(); r]; r]; r];
    for (ai, ya) in y.iter_mut().enumerate() {
        let u: Vec<Cyclotomic> = (0..r).map(|d| s.get(ai, d) * &w[d]).collect();
        for (b, yab) in ya.iter_mut().enumerate() {
            let ub: Vec<Cyclotomic> = (0..r).map(|d| &u[d] * q.get(b, d)).collect();
            for (c, slot) in yab.iter_mut().enumerate() {
                *slot = (0..r).map(|d| &ub[d] * q_inv.get(c, d)).sum();
            }
        }
    }
    Ok(y)
}

/// `Y_a = (J s K) N_a (J s K)^-1`, indexed like [`y_tensor`].
pub fn y_conjugation(a: &ModularData, j: &[Cyclotomic], k: &CycMatrix, lambda: &Cyclotomic) -> Result<YTensor, YError> {
    let r = a.rank();
    let s = a.s_matrix().scale(&lambda.inv()?);
    let s_inv = s.mul(&s).mul(&s);
    let j_inv: Vec<Cyclotomic> = j.iter().map(|x| x.inv()).collect::<Result<_, _>>().map_err(|_| YError::Singular)?;
    let p = CycMatrix::diagonal(j).mul(&s).mul(k);
    let p_inv = k
        .inverse()
        .map_err(|_| YError::Singular)?
        .mul(&s_inv)
        .mul(&CycMatrix::diagonal(&j_inv));
    let mut y = Vec::with_capacity(r);
    for ai in 0..r {
        let na = CycMatrix::from_fn(r, |b, c| Cyclotomic::from_integer(a.n(ai, b, c) as i64));
        let m = p.mul(&na).mul(&p_inv);
        y.push((0..r).map(|b| m.row(b).to_vec()).collect());
    }
    Ok(y)
}

/// `Y(R, T^m)` for the query's root `R`, computed by the defining sum and
/// cross-checked against the conjugation formula and against
/// `(eta_b / eta_c) nu_{m,1}^{(b*, c)}(U_a)`.
pub fn y_bantay(a: &ModularData, q: &YQuery) -> Result<YTensor, YError> {
    q.validate(a)?;
    let r = a.rank();
    let (lambda, _) = find_lifting_params(a)?;
    let eta = q.eta();
    let tm = CycMatrix::diagonal(&a.omegas().iter().map(|w| w.pow(q.m as i64)).collect::<Result<Vec<_>, _>>()?);
    let y = y_tensor(a, &eta, &tm, &lambda)?;
    let y2 = y_conjugation(a, &eta, &tm, &lambda)?;
    for ai in 0..r {
        for b in 0..r {
            for c in 0..r {
                let nu = nu_bantay(a, q.m as i64, a.dual(b), c, ai);
                let y3 = &(&eta[b] * &eta[c].inv()?) * &nu;
                if y[ai][b][c] != y2[ai][b][c] || y[ai][b][c] != y3 {
                    return Err(YError::RouteMismatch(ai, b, c));
                }
            }
        }
    }
    Ok(y)
}

/// `Y_a Y_b = sum_c N_ab^c Y_c`; returns the failing `(a, b)` pairs.
pub fn multiplicativity_failures(a: &ModularData, y: &YTensor) -> Vec<(usize, usize)> {
    let r = a.rank();
    let mats: Vec<CycMatrix> = y.iter().map(|ya| CycMatrix::from_rows(ya.clone())).collect();
    let mut out = Vec::new();
    for x in 0..r {
        for z in 0..r {
            let lhs = mats[x].mul(&mats[z]);
            let mut rhs = CycMatrix::zeros(r);
            for c in 0..r {
                let n = a.n(x, z, c);
                if n != 0 {
                    rhs = rhs.add(&mats[c].scale(&Cyclotomic::from_integer(n as i64)));
                }
            }
            if lhs != rhs {
                out.push((x, z));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct InequalityRow {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `sum_d s_ad^m s_bd s_{c* d} / s_0d^m`, a multiplicity.
    pub lhs: BigUint,
    pub y: Cyclotomic,
    pub integral: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct InequalityReport {
    pub rows: Vec<InequalityRow>,
    pub violations: Vec<Violation>,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `sum_d s_ad^m s_bd s_{c* d} / s_0d^m >= |Y_ab^c(R, T^m)|` for all
/// triples, after confirming the left side equals the multiplicity of `U_c`
/// in `U_a^m (x) U_b`.
pub fn check_inequality(a: &ModularData, q: &YQuery) -> Result<InequalityReport, YError> {
    check_inequality_with_precision(a, q, DEFAULT_PRECISION_BITS)
}

/// Default cap on the working precision of real comparisons.
pub const DEFAULT_PRECISION_BITS: u32 = 1 << 16;

/// As [`check_inequality`] with an explicit precision cap for comparing
/// irrational `|Y|` against the left side.
pub fn check_inequality_with_precision(a: &ModularData, q: &YQuery, max_bits: u32) -> Result<InequalityReport, YError> {
    let y = y_bantay(a, q)?;
    let r = a.rank();
    let m = q.m as i64;
    let s = a.s_matrix();
    let w: Vec<Cyclotomic> = (0..r).map(|d| s.get(0, d).inv()).collect::<Result<_, _>>()?;
    let norm = (&(s.get(0, 0) * s.get(0, 0)) * a.dim()).inv()?;
    let f = a.fusion();
    let mut report = InequalityReport::default();
    for ai in 0..r {
        let pw = f.power_multiplicities(ai, m);
        let ratio: Vec<Cyclotomic> = (0..r).map(|d| (s.get(ai, d) * &w[d]).pow(m)).collect::<Result<_, _>>()?;
        for b in 0..r {
            let mult = f.tensor(&pw, &f.unit_vector(b));
            for c in 0..r {
                let cd = a.dual(c);
                let sum: Cyclotomic = (0..r).map(|d| &ratio[d] * &(s.get(b, d) * s.get(cd, d))).sum();
                let lhs = &sum * &norm;
                let idx = [ai, b, c];
                let expect = &mult[c];
                let as_int = lhs.as_rational().filter(|x| x.is_integer()).map(|x| x.to_integer());
                if as_int.as_ref().and_then(|x| x.to_biguint()).as_ref() != Some(expect) {
                    report.violations.push(Violation::new(
                        "LHS = fusion multiplicity",
                        &idx,
                        format!("sum gives {lhs}, fusion gives {expect}"),
                    ));
                }
                let yv = y[ai][b][c].clone();
                let integral = yv.is_algebraic_integer();
                if !integral {
                    report.violations.push(Violation::new("Y integrality", &idx, yv.to_string()));
                }
                let lhs_c = Cyclotomic::from_rational(&crate::exactnum::Rational::from_integer(expect.clone().into()));
                let holds = if let Some(yr) = yv.as_rational() {
                    let yr = if yr < crate::exactnum::Rational::zero() { -yr } else { yr };
                    lhs_c.as_rational().expect("integer") >= yr
                } else {
                    let sq = &lhs_c * &lhs_c;
                    let norm_y = &yv * &yv.conj();
                    sq.cmp_real_capped(&norm_y, max_bits)? != Ordering::Less
                };
                if !holds {
                    report.violations.push(Violation::new("LHS >= |Y|", &idx, format!("{expect} < |{yv}|")));
                }
                report.rows.push(InequalityRow {
                    a: ai,
                    b,
                    c,
                    lhs: expect.clone(),
                    y: yv,
                    integral,
                    holds,
                });
            }
        }
    }
    Ok(report)
}

/// True when every entry is a rational integer.
pub fn all_rational_integers(y: &YTensor) -> bool {
    y.iter().flatten().flatten().all(|v| v.as_rational().is_some_and(|q| q.is_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{catalog, CATALOG_NAMES};

    #[test]
    fn default_roots_are_roots() {
        for name in CATALOG_NAMES {
            let a = catalog(name).unwrap();
            for m in 1..=7 {
                let q = YQuery::default_for(&a, m).unwrap();
                q.validate(&a).unwrap();
            }
        }
        let t = catalog("toric_code").unwrap();
        let q = YQuery::default_for(&t, 2).unwrap();
        assert_eq!(q.conductor, 24);
        assert_eq!(q.roots, vec![0, 0, 0, 6]);
        assert!(matches!(q.clone().with_root(3, 0).validate(&t), Err(YError::InvalidRoot(3))));
    }

    #[test]
    fn toric_code_m2() {
        let t = catalog("toric_code").unwrap();
        let q = YQuery::default_for(&t, 2).unwrap();
        let y = y_bantay(&t, &q).unwrap();
        assert!(all_rational_integers(&y));
        let rep = check_inequality(&t, &q).unwrap();
        assert_eq!(rep.rows.len(), 64);
        assert!(rep.passed());
        let unit = &rep.rows[0];
        assert_eq!((unit.lhs.clone(), unit.y.clone()), (BigUint::from(1u32), Cyclotomic::one()));
    }

    #[test]
    fn unit_row_and_invariances() {
        for name in CATALOG_NAMES {
            let a = catalog(name).unwrap();
            let (lambda, _) = find_lifting_params(&a).unwrap();
            let q = YQuery::default_for(&a, 2).unwrap();
            let eta = q.eta();
            let k = CycMatrix::diagonal(&a.omegas().iter().map(|w| w * w).collect::<Vec<_>>());
            let y = y_tensor(&a, &eta, &k, &lambda).unwrap();
            let r = a.rank();
            for b in 0..r {
                for c in 0..r {
                    assert_eq!(y[0][b][c], Cyclotomic::from_integer((b == c) as i64));
                }
            }
            assert_eq!(y_tensor(&a, &eta, &k, &-&lambda).unwrap(), y);
            let x = Cyclotomic::root(7, 2);
            let xj: Vec<Cyclotomic> = eta.iter().map(|e| e * &x).collect();
            let yk = k.scale(&Cyclotomic::from_integer(3));
            assert_eq!(y_tensor(&a, &xj, &yk, &lambda).unwrap(), y);
            assert_eq!(y_conjugation(&a, &eta, &k, &lambda).unwrap(), y);
            // non-diagonal symmetric K
            let s = a.s_matrix().clone();
            assert_eq!(y_tensor(&a, &eta, &s, &lambda).unwrap(), y_conjugation(&a, &eta, &s, &lambda).unwrap());
            assert!(multiplicativity_failures(&a, &y).is_empty());
        }
    }
}

#[cfg(test)]
mod catalog_tests {
    use super::*;
    use crate::modular::{catalog, CATALOG_NAMES};

    #[test]
    fn square_roots_give_integers() {
        for name in CATALOG_NAMES {
            let a = catalog(name).unwrap();
            let q = YQuery::default_for(&a, 2).unwrap();
            let half = q.conductor as i64 / 2;
            let last = a.rank() - 1;
            let q2 = q.clone().with_root(last, q.roots[last] + half);
            assert_ne!(q.eta(), q2.eta());
            for q in [q, q2] {
                let y = y_bantay(&a, &q).unwrap();
                assert!(all_rational_integers(&y), "{name}");
                assert!(multiplicativity_failures(&a, &y).is_empty(), "{name}");
                let rep = check_inequality(&a, &q).unwrap();
                assert!(rep.passed(), "{name}: {:?}", rep.violations);
            }
        }
    }

    #[test]
    fn coprime_m_gives_integers() {
        for (name, m) in [("toric_code", 3), ("double_semion", 3), ("fibonacci", 2), ("fibonacci", 3)] {
            let a = catalog(name).unwrap();
            let q = YQuery::default_for(&a, m).unwrap();
            assert!(all_rational_integers(&y_bantay(&a, &q).unwrap()), "{name} m={m}");
        }
    }

    #[test]
    fn non_coprime_m_is_integral() {
        let a = catalog("double_semion").unwrap();
        let q = YQuery::default_for(&a, 6).unwrap();
        let rep = check_inequality(&a, &q).unwrap();
        assert!(rep.passed());
        assert!(rep.rows.iter().all(|r| r.integral && r.holds));
    }
}
