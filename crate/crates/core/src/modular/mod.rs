//! Modular data: unnormalized S-matrix, twists, derived quantities,
//! validation, the center double and twisted doubles of abelian groups.

mod catalog;
mod double;
mod mdata;

pub use catalog::{catalog, CATALOG_NAMES};
pub use double::{center_double, dw_abelian};
pub use mdata::{emit_mdata, load_mdata, parse_mdata};

use num_traits::{Signed, ToPrimitive};

use crate::error::Violation;
use crate::exactnum::{lcm, root_order, CycError, CycMatrix, Cyclotomic};
use crate::fusion::FusionData;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModularError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("conductor error: {0}")]
    Conductor(String),
    #[error("not modular: {} violation(s), first: {}", .0.len(), .0[0])]
    Invalid(Vec<Violation>),
    #[error("unknown catalog entry {0}")]
    UnknownCatalog(String),
    #[error(transparent)]
    Arithmetic(#[from] CycError),
}

impl ModularError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            ModularError::Invalid(v) => v,
            _ => &[],
        }
    }
}

/// Raw input before validation.
#[derive(Clone, Debug)]
pub struct ModularParts {
    pub name: String,
    pub conductor: u32,
    pub labels: Vec<String>,
    pub s: CycMatrix,
    pub t: Vec<i64>,
    pub expected_fusion: Option<Vec<Vec<Vec<u64>>>>,
    pub expected_dual: Option<Vec<usize>>,
}

/// Validated modular data with eagerly computed derived quantities.
#[derive(Clone, Debug)]
pub struct ModularData {
    parts: ModularParts,
    omega: Vec<Cyclotomic>,
    dims: Vec<Cyclotomic>,
    dim: Cyclotomic,
    p_plus: Cyclotomic,
    p_minus: Cyclotomic,
    fusion: FusionData,
    fs_exponent: u32,
}

impl ModularData {
    pub fn new(parts: ModularParts) -> Result<Self, ModularError> {
        let (data, violations) = check(parts)?;
        match data {
            Some(d) if violations.is_empty() => Ok(d),
            _ => Err(ModularError::Invalid(violations)),
        }
    }

    pub fn name(&self) -> &str {
        &self.parts.name
    }

    pub fn conductor(&self) -> u32 {
        self.parts.conductor
    }

    pub fn rank(&self) -> usize {
        self.parts.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.parts.labels
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.parts.labels.iter().position(|l| l == name)
    }

    pub fn parts(&self) -> &ModularParts {
        &self.parts
    }

    pub fn s_matrix(&self) -> &CycMatrix {
        &self.parts.s
    }

    pub fn s(&self, i: usize, j: usize) -> &Cyclotomic {
        self.parts.s.get(i, j)
    }

    /// Exponents `t_i` with `omega_i = zeta_M^{t_i}`.
    pub fn t_exponents(&self) -> &[i64] {
        &self.parts.t
    }

    pub fn omega(&self, i: usize) -> &Cyclotomic {
        &self.omega[i]
    }

    pub fn omegas(&self) -> &[Cyclotomic] {
        &self.omega
    }

    pub fn t_matrix(&self) -> CycMatrix {
        CycMatrix::diagonal(&self.omega)
    }

    pub fn dims(&self) -> &[Cyclotomic] {
        &self.dims
    }

    pub fn dim(&self) -> &Cyclotomic {
        &self.dim
    }

    pub fn gauss_sums(&self) -> (Cyclotomic, Cyclotomic) {
        (self.p_plus.clone(), self.p_minus.clone())
    }

    pub fn dual(&self, i: usize) -> usize {
        self.fusion.dual(i)
    }

    pub fn fusion(&self) -> &FusionData {
        &self.fusion
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> u64 {
        self.fusion.n(a, b, c)
    }

    /// Order of the T-matrix.
    pub fn fs_exponent(&self) -> u32 {
        self.fs_exponent
    }

    /// Relabels without touching the data.
    pub fn renamed(mut self, name: &str, labels: Option<Vec<String>>) -> Self {
        self.parts.name = name.to_string();
        if let Some(l) = labels {
            assert_eq!(l.len(), self.rank(), "label count must match rank");
            self.fusion = self.fusion.with_labels(l.clone());
            self.parts.labels = l;
        }
        self
    }
}

/// Fusion coefficients from the S-matrix.
pub fn verlinde_fusion(a: &ModularData) -> FusionData {
    a.fusion.clone()
}

/// Order of the twist matrix.
pub fn fs_exponent(a: &ModularData) -> u32 {
    a.fs_exponent
}

/// `(p+, p-)`.
pub fn gauss_sums(a: &ModularData) -> (Cyclotomic, Cyclotomic) {
    a.gauss_sums()
}

/// Runs every check on the input and returns the data (when the derived
/// quantities could be computed at all) together with all violations.
pub fn check(parts: ModularParts) -> Result<(Option<ModularData>, Vec<Violation>), ModularError> {
    let r = parts.labels.len();
    let m = parts.conductor;
    if m == 0 {
        return Err(ModularError::Conductor("conductor must be positive".into()));
    }
    if r == 0 {
        return Err(ModularError::Parse("no labels".into()));
    }
    if parts.s.size() != r || parts.t.len() != r {
        return Err(ModularError::Parse(format!(
            "{} labels but S is {}x{} and T has {} entries",
            r,
            parts.s.size(),
            parts.s.size(),
            parts.t.len()
        )));
    }
    if let Some(e) = parts.t.iter().find(|e| **e < 0 || **e >= m as i64) {
        return Err(ModularError::Conductor(format!("T exponent {e} outside 0..{m}")));
    }
    if let Some(x) = parts.s.entries().iter().find(|x| !m.is_multiple_of(x.conductor())) {
        return Err(ModularError::Conductor(format!(
            "S entry needs conductor {}, which does not divide {m}",
            x.conductor()
        )));
    }
    let mut out = Vec::new();
    let s = &parts.s;

    for i in 0..r {
        for j in i + 1..r {
            if s.get(i, j) != s.get(j, i) {
                out.push(Violation::new("S symmetric", &[i, j], format!("{} != {}", s.get(i, j), s.get(j, i))));
            }
        }
    }
    if parts.t[0] != 0 {
        out.push(Violation::new("unit twist", &[0], "t_0 must be 0"));
    }
    let s00 = s.get(0, 0).clone();
    if s00.is_zero() {
        out.push(Violation::new("S00 nonzero", &[0, 0], "S_00 = 0"));
        return Ok((None, out));
    }
    for i in 0..r {
        if s.get(0, i).is_zero() {
            out.push(Violation::new("nonzero dimensions", &[i], "S_0i = 0"));
        }
    }
    if out.iter().any(|v| v.identity == "nonzero dimensions") {
        return Ok((None, out));
    }

    let omega: Vec<Cyclotomic> = parts.t.iter().map(|e| Cyclotomic::root(m, *e)).collect();
    let inv00 = s00.inv()?;
    let dims: Vec<Cyclotomic> = (0..r).map(|i| s.get(0, i) * &inv00).collect();
    let sq: Vec<Cyclotomic> = dims.iter().map(|d| d * d).collect();
    let dim: Cyclotomic = sq.iter().cloned().sum();
    let p_plus: Cyclotomic = sq.iter().zip(&omega).map(|(d, w)| d * w).sum();
    let p_minus: Cyclotomic = sq.iter().zip(&omega).map(|(d, w)| d * &w.inv().unwrap()).sum();
    let fs_exponent = parts
        .t
        .iter()
        .fold(1u64, |acc, e| lcm(acc, root_order(m, *e) as u64)) as u32;

    if dim.is_zero() {
        out.push(Violation::new("nonzero global dimension", &[], "dim = 0"));
        return Ok((None, out));
    }
    let pp = &p_plus * &p_minus;
    if pp != dim {
        out.push(Violation::new("Gauss sums", &[], format!("p+ p- = {pp} but dim = {dim}")));
    }

    let s2 = s.mul(s);
    let dual = if pp.is_zero() {
        out.push(Violation::new("Gauss sums", &[], "p+ p- = 0"));
        None
    } else {
        charge_conjugation(&s2, &pp, &mut out)
    };

    let st = s.mul_diag(&omega);
    let st3 = st.mul(&st).mul(&st);
    let rhs = s2.scale(&p_plus);
    for i in 0..r {
        for j in 0..r {
            if st3.get(i, j) != rhs.get(i, j) {
                out.push(Violation::new(
                    "(ST)^3 = p+ S^2",
                    &[i, j],
                    format!("{} != {}", st3.get(i, j), rhs.get(i, j)),
                ));
            }
        }
    }
    if let Some(dual) = &dual {
        for i in 0..r {
            if dual[dual[i]] != i {
                out.push(Violation::new("C^2 = I", &[i], "charge conjugation is not an involution"));
            }
            if parts.t[dual[i]] != parts.t[i] {
                out.push(Violation::new("CT = TC", &[i, dual[i]], "twists of dual labels differ"));
            }
            if dims[dual[i]] != dims[i] {
                out.push(Violation::new("dual dimensions", &[i, dual[i]], "d of dual label differs"));
            }
        }
    }

    let table = match verlinde(s, &s00, &dim, dual.as_deref()) {
        Ok(t) => t,
        Err(_) => {
            out.push(Violation::new("S nonsingular", &[], "S is singular"));
            return Ok((None, out));
        }
    };
    let mut ints = vec![vec![vec![0u64; r]; r]; r];
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let v = &table[a][b][c];
                match v.as_rational().filter(|q| q.is_integer() && !q.is_negative()) {
                    Some(q) => match q.to_integer().to_u64() {
                        Some(n) => ints[a][b][c] = n,
                        None => out.push(Violation::new("Verlinde integrality", &[a, b, c], "value too large")),
                    },
                    None => out.push(Violation::new(
                        "Verlinde integrality",
                        &[a, b, c],
                        format!("N_{a}{b}^{c} = {v} is not a non-negative integer"),
                    )),
                }
            }
        }
    }
    let dual_vec = dual.unwrap_or_else(|| (0..r).collect());
    let fusion = FusionData::new(parts.labels.clone(), dual_vec.clone(), ints).expect("shapes match");
    if !out.iter().any(|v| v.identity == "Verlinde integrality") {
        out.extend(fusion.validate());
    }
    if let Some(exp) = &parts.expected_fusion {
        if *exp != fusion.table() {
            let t = fusion.table();
            for a in 0..r {
                for b in 0..r {
                    for c in 0..r {
                        let e = exp.get(a).and_then(|x| x.get(b)).and_then(|x| x.get(c));
                        if e != Some(&t[a][b][c]) {
                            out.push(Violation::new(
                                "expected fusion",
                                &[a, b, c],
                                format!("Verlinde gives {}, file says {:?}", t[a][b][c], e),
                            ));
                        }
                    }
                }
            }
        }
    }
    if let Some(exp) = &parts.expected_dual {
        for (i, d) in dual_vec.iter().enumerate() {
            if exp.get(i) != Some(d) {
                out.push(Violation::new("expected dual", &[i], format!("derived dual is {d}")));
            }
        }
    }

    let data = ModularData {
        parts,
        omega,
        dims,
        dim,
        p_plus,
        p_minus,
        fusion,
        fs_exponent,
    };
    Ok((Some(data), out))
}

/// Reads the duality permutation off `S^2 / (p+ p-)`.
fn charge_conjugation(s2: &CycMatrix, pp: &Cyclotomic, out: &mut Vec<Violation>) -> Option<Vec<usize>> {
    let r = s2.size();
    let inv = pp.inv().ok()?;
    let mut dual = vec![usize::MAX; r];
    let mut ok = true;
    for i in 0..r {
        for j in 0..r {
            let c = s2.get(i, j) * &inv;
            if c.is_one() {
                if dual[i] != usize::MAX {
                    ok = false;
                }
                dual[i] = j;
            } else if !c.is_zero() {
                out.push(Violation::new("S^2 = p+ p- C", &[i, j], format!("C entry {c} is not 0 or 1")));
                ok = false;
            }
        }
        if dual[i] == usize::MAX {
            ok = false;
        }
    }
    let mut seen = vec![false; r];
    for d in &dual {
        if *d < r {
            ok &= !std::mem::replace(&mut seen[*d], true);
        }
    }
    if !ok {
        out.push(Violation::new("S^2 = p+ p- C", &[], "C is not a permutation matrix"));
        return None;
    }
    if dual[0] != 0 {
        out.push(Violation::new("S^2 = p+ p- C", &[0], "unit is not self-dual"));
    }
    Some(dual)
}

/// All values `N_ab^c` from the Verlinde formula. Uses the duality when it is
/// known and the inverse S-matrix otherwise.
fn verlinde(
    s: &CycMatrix,
    s00: &Cyclotomic,
    dim: &Cyclotomic,
    dual: Option<&[usize]>,
) -> Result<Vec<Vec<Vec<Cyclotomic>>>, CycError> {
    let r = s.size();
    let w: Vec<Cyclotomic> = (0..r).map(|d| s.get(0, d).inv()).collect::<Result<_, _>>()?;
    let mut out = vec![vec![vec![Cyclotomic::zero(); r]; r]; r];
    match dual {
        Some(dual) => {
            // 1/(S00^2 dim) sum_d S_ad S_bd S_{c*d} / S_0d
            let norm = (&(s00 * s00) * dim).inv()?;
            for a in 0..r {
                for b in 0..r {
                    let u: Vec<Cyclotomic> = (0..r).map(|d| &(s.get(a, d) * s.get(b, d)) * &w[d]).collect();
                    for c in 0..r {
                        let sum: Cyclotomic = (0..r).map(|d| &u[d] * s.get(dual[c], d)).sum();
                        out[a][b][c] = &sum * &norm;
                    }
                }
            }
        }
        None => {
            // (S D_a S^{-1})_{bc}
            let sinv = s.inverse()?;
            for a in 0..r {
                let da: Vec<Cyclotomic> = (0..r).map(|d| s.get(a, d) * &w[d]).collect();
                let na = s.mul_diag(&da).mul(&sinv);
                for b in 0..r {
                    for c in 0..r {
                        out[a][b][c] = na.get(b, c).clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
