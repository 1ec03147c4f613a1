use std::sync::Arc;

use super::{word_from_matrix, Letter, SL2Mat, SlRepError};
use crate::exactnum::{lcm, root_order, CycMatrix, Cyclotomic};
use crate::modular::ModularData;

/// An ordinary representation `s -> S / lambda`, `t -> T / zeta`.
#[derive(Clone, Debug)]
pub struct ModularRep {
    base: Arc<ModularData>,
    lambda: Cyclotomic,
    zeta: Cyclotomic,
    conductor: u32,
    s: CycMatrix,
    s_inv: CycMatrix,
    t_exp: Vec<i64>,
    t_order: u32,
    s2_sign: i64,
}

impl ModularRep {
    /// Builds the representation and checks `(st)^3 = s^2`, `s^4 = 1` and
    /// `s^2 = +-C` exactly. `zeta` must be a root of unity and
    /// `lambda * zeta^3 = p+`.
    pub fn new(base: Arc<ModularData>, lambda: Cyclotomic, zeta: Cyclotomic) -> Result<Self, SlRepError> {
        let (p_plus, _) = base.gauss_sums();
        if &lambda * &zeta.pow(3)? != p_plus {
            return Err(SlRepError::Relation("lambda zeta^3 = p+".into()));
        }
        let (zo, ze) = zeta
            .as_root_of_unity()
            .ok_or_else(|| SlRepError::NoLifting("zeta is not a root of unity".into()))?;
        let conductor = lcm(lcm(base.conductor() as u64, zo as u64), lambda.conductor() as u64) as u32;
        let m = base.conductor() as i64;
        let l = conductor as i64;
        let t_exp: Vec<i64> = base
            .t_exponents()
            .iter()
            .map(|t| (t * (l / m) - ze as i64 * (l / zo as i64)).rem_euclid(l))
            .collect();
        let t_order = t_exp.iter().fold(1u64, |acc, e| lcm(acc, root_order(conductor, *e) as u64)) as u32;
        let inv = lambda.inv()?.lift(conductor);
        let s = base.s_matrix().scale(&inv).lift(conductor);
        let s2 = s.mul(&s);
        let s_inv = s2.mul(&s);
        if !s2.mul(&s2).is_identity() {
            return Err(SlRepError::Relation("s^4 = 1".into()));
        }
        let t: Vec<Cyclotomic> = t_exp.iter().map(|e| Cyclotomic::root(conductor, *e)).collect();
        let st = s.mul_diag(&t);
        if st.mul(&st).mul(&st) != s2 {
            return Err(SlRepError::Relation("(st)^3 = s^2".into()));
        }
        let r = base.rank();
        let c = CycMatrix::from_fn(r, |i, j| Cyclotomic::from_integer((base.dual(i) == j) as i64));
        let s2_sign = if s2 == c {
            1
        } else if s2 == c.scale(&Cyclotomic::from_integer(-1)) {
            -1
        } else {
            return Err(SlRepError::Relation("s^2 = +-C".into()));
        };
        Ok(ModularRep {
            base,
            lambda,
            zeta,
            conductor,
            s,
            s_inv,
            t_exp,
            t_order,
            s2_sign,
        })
    }

    pub fn base(&self) -> &Arc<ModularData> {
        &self.base
    }

    pub fn lambda(&self) -> &Cyclotomic {
        &self.lambda
    }

    pub fn zeta(&self) -> &Cyclotomic {
        &self.zeta
    }

    /// Conductor of all matrix entries.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn rho_s(&self) -> &CycMatrix {
        &self.s
    }

    pub fn rho_s_inv(&self) -> &CycMatrix {
        &self.s_inv
    }

    /// Exponents `e_i` with `rho(t) = diag(zeta_L^{e_i})`, `L` the conductor.
    pub fn t_exponents(&self) -> &[i64] {
        &self.t_exp
    }

    /// Diagonal of `rho(t)^k`.
    pub fn t_diag(&self, k: i64) -> Vec<Cyclotomic> {
        self.t_exp.iter().map(|e| Cyclotomic::root(self.conductor, e * k)).collect()
    }

    pub fn rho_t(&self) -> CycMatrix {
        CycMatrix::diagonal(&self.t_diag(1))
    }

    /// Multiplicative order of `rho(t)`.
    pub fn t_order(&self) -> u32 {
        self.t_order
    }

    /// `+1` when `rho(s)^2 = C`, `-1` when `rho(s)^2 = -C`.
    pub fn s_squared_sign(&self) -> i64 {
        self.s2_sign
    }

    /// `rho(g)` through the Euclidean word of `g`.
    pub fn evaluate(&self, g: &SL2Mat) -> CycMatrix {
        self.evaluate_word(&word_from_matrix(g))
    }

    pub fn evaluate_word(&self, word: &[Letter]) -> CycMatrix {
        let mut acc = CycMatrix::identity(self.rank()).lift(self.conductor);
        for l in word {
            acc = self.right_mul(&acc, *l);
        }
        acc
    }

    /// `m * rho(letter)`.
    pub fn right_mul(&self, m: &CycMatrix, letter: Letter) -> CycMatrix {
        match letter {
            Letter::S => m.mul(&self.s),
            Letter::SInv => m.mul(&self.s_inv),
            Letter::T(k) => m.mul_diag(&self.t_diag(k)),
        }
    }

    /// Row vector times `rho(g)`.
    pub fn row_times(&self, v: &[Cyclotomic], g: &SL2Mat) -> Vec<Cyclotomic> {
        let mut v = v.to_vec();
        for l in word_from_matrix(g) {
            v = match l {
                Letter::S => self.s.vec_mul(&v),
                Letter::SInv => self.s_inv.vec_mul(&v),
                Letter::T(k) => v.iter().zip(self.t_diag(k)).map(|(x, y)| x * &y).collect(),
            };
        }
        v
    }
}

/// Finds `zeta = zeta_{12N}^j` with `zeta^6 = p+/p-`, then `lambda = p+ zeta^-3`
/// with `lambda^2 = dim` checked exactly.
pub fn find_lifting_params(a: &ModularData) -> Result<(Cyclotomic, Cyclotomic), SlRepError> {
    let (p, q) = a.gauss_sums();
    let ratio = p.checked_div(&q)?;
    let m = 12 * a.fs_exponent();
    for j in 0..m as i64 {
        let zeta = Cyclotomic::root(m, j);
        if zeta.pow(6)? != ratio {
            continue;
        }
        let lambda = &p * &Cyclotomic::root(m, -3 * j);
        if &lambda * &lambda == *a.dim() {
            return Ok((lambda, zeta));
        }
    }
    Err(SlRepError::NoLifting(format!("no 12N-th root of unity zeta with zeta^6 = p+/p- (12N = {m})")))
}

/// The twelve liftings `xi_x(s) = rho(s) / x^3`, `xi_x(t) = x rho(t)` for
/// `x = zeta_12^k`, `k = 0..12`.
pub fn all_liftings(a: &Arc<ModularData>) -> Result<Vec<ModularRep>, SlRepError> {
    let (lambda, zeta) = find_lifting_params(a)?;
    (0..12)
        .map(|k| {
            let x = Cyclotomic::root(12, k);
            let lam = &lambda * &x.pow(3)?;
            let z = zeta.checked_div(&x)?;
            ModularRep::new(a.clone(), lam, z)
        })
        .collect()
}

/// `lambda = dim C`, `zeta = 1` for the center `Z` of a category of
/// dimension `cdim`.
pub fn canonical_center_rep(cdim: &Cyclotomic, z: &Arc<ModularData>) -> Result<ModularRep, SlRepError> {
    let (p, q) = z.gauss_sums();
    if p != q || p != *cdim {
        return Err(SlRepError::GaussSumsUnequal);
    }
    ModularRep::new(z.clone(), cdim.clone(), Cyclotomic::one())
}

/// The canonical representation when `p+ = p-`.
pub fn canonical_rep(z: &Arc<ModularData>) -> Result<ModularRep, SlRepError> {
    let (p, _) = z.gauss_sums();
    canonical_center_rep(&p, z)
}

/// True iff all entries of `rho(s)` lie in `Q_m`, `m = ord rho(t)`.
pub fn is_t_rational(rep: &ModularRep) -> bool {
    let m = rep.t_order();
    rep.rho_s().entries().iter().all(|x| x.is_in_subfield(m))
}
