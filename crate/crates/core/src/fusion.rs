//! Fusion rings: coefficients `N_{ab}^c`, axiom checks, fusion matrices and
//! multiplicities of tensor powers.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FusionError {
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("fusion table has wrong shape: {0}")]
    Shape(String),
}

/// Labels with unit at index 0, a duality involution and coefficients
/// `N[a][b][c] = N_{ab}^c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionData {
    labels: Vec<String>,
    dual: Vec<usize>,
    coeffs: Vec<u64>,
}

impl FusionData {
    pub fn new(labels: Vec<String>, dual: Vec<usize>, table: Vec<Vec<Vec<u64>>>) -> Result<Self, FusionError> {
        let r = labels.len();
        if r == 0 {
            return Err(FusionError::Shape("no labels".into()));
        }
        if dual.len() != r || dual.iter().any(|d| *d >= r) {
            return Err(FusionError::Shape("dual must be a map on the labels".into()));
        }
        if table.len() != r || table.iter().any(|m| m.len() != r || m.iter().any(|v| v.len() != r)) {
            return Err(FusionError::Shape(format!("expected a {r}x{r}x{r} array")));
        }
        Ok(FusionData {
            labels,
            dual,
            coeffs: table.into_iter().flatten().flatten().collect(),
        })
    }

    /// Group ring of `Z_{n1} x ... x Z_{nk}`, elements in mixed radix order
    /// (last factor fastest).
    pub fn abelian_group(orders: &[u64]) -> Self {
        let elems = enumerate_group(orders);
        let idx = |g: &[u64]| elems.iter().position(|h| h.as_slice() == g).unwrap();
        let r = elems.len();
        let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
            a.iter().zip(b).zip(orders).map(|((x, y), n)| (x + y) % n).collect()
        };
        let neg = |a: &[u64]| -> Vec<u64> { a.iter().zip(orders).map(|(x, n)| (n - x) % n).collect() };
        let mut table = vec![vec![vec![0u64; r]; r]; r];
        for (a, ga) in elems.iter().enumerate() {
            for (b, gb) in elems.iter().enumerate() {
                table[a][b][idx(&add(ga, gb))] = 1;
            }
        }
        let dual = elems.iter().map(|g| idx(&neg(g))).collect();
        let labels = elems
            .iter()
            .map(|g| g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        FusionData::new(labels, dual, table).unwrap()
    }

    /// The Fibonacci ring with `tau * tau = 1 + tau`.
    pub fn fibonacci() -> Self {
        let table = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
        ];
        FusionData::new(vec!["1".into(), "tau".into()], vec![0, 1], table).unwrap()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank(), "label count must match rank");
        self.labels = labels;
        self
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn label_index(&self, name: &str) -> Result<usize, FusionError> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| FusionError::UnknownLabel(name.to_string()))
    }

    /// `N_{ab}^c`.
    pub fn n(&self, a: usize, b: usize, c: usize) -> u64 {
        let r = self.rank();
        self.coeffs[(a * r + b) * r + c]
    }

    pub fn table(&self) -> Vec<Vec<Vec<u64>>> {
        let r = self.rank();
        (0..r)
            .map(|a| (0..r).map(|b| (0..r).map(|c| self.n(a, b, c)).collect()).collect())
            .collect()
    }

    /// Checks unit, duality, commutativity, associativity and Frobenius
    /// reciprocity. An empty result means the ring is a valid commutative
    /// fusion ring.
    pub fn validate(&self) -> Vec<Violation> {
        let r = self.rank();
        let mut out = Vec::new();
        for a in 0..r {
            if self.dual[self.dual[a]] != a {
                out.push(Violation::new("dual involution", &[a], "dual(dual(a)) != a"));
            }
        }
        if self.dual[0] != 0 {
            out.push(Violation::new("dual involution", &[0], "dual of the unit is not the unit"));
        }
        for a in 0..r {
            for b in 0..r {
                let expect = u64::from(a == b);
                if self.n(0, a, b) != expect || self.n(a, 0, b) != expect {
                    out.push(Violation::new(
                        "fusion unit",
                        &[a, b],
                        format!("N_0{a}^{b} = {}, N_{a}0^{b} = {}", self.n(0, a, b), self.n(a, 0, b)),
                    ));
                }
                let expect = u64::from(b == self.dual[a]);
                if self.n(a, b, 0) != expect {
                    out.push(Violation::new(
                        "fusion duality",
                        &[a, b],
                        format!("N_{a}{b}^0 = {}, expected {expect}", self.n(a, b, 0)),
                    ));
                }
                for c in 0..r {
                    if self.n(a, b, c) != self.n(b, a, c) {
                        out.push(Violation::new(
                            "fusion commutativity",
                            &[a, b, c],
                            format!("N_{a}{b}^{c} = {} but N_{b}{a}^{c} = {}", self.n(a, b, c), self.n(b, a, c)),
                        ));
                    }
                    let rb = self.dual[b];
                    if self.n(a, b, c) != self.n(c, rb, a) {
                        out.push(Violation::new(
                            "Frobenius reciprocity",
                            &[a, b, c],
                            format!("N_{a}{b}^{c} = {} but N_{c}{rb}^{a} = {}", self.n(a, b, c), self.n(c, rb, a)),
                        ));
                    }
                    for d in 0..r {
                        let lhs: u128 = (0..r).map(|e| self.n(a, b, e) as u128 * self.n(e, c, d) as u128).sum();
                        let rhs: u128 = (0..r).map(|f| self.n(b, c, f) as u128 * self.n(a, f, d) as u128).sum();
                        if lhs != rhs {
                            out.push(Violation::new(
                                "fusion associativity",
                                &[a, b, c, d],
                                format!("(ab)c gives {lhs}, a(bc) gives {rhs}"),
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    /// `(N_a)_{bc} = N_{ab}^c`.
    pub fn fusion_matrix(&self, a: usize) -> Result<Vec<Vec<u64>>, FusionError> {
        if a >= self.rank() {
            return Err(FusionError::UnknownLabel(a.to_string()));
        }
        let r = self.rank();
        Ok((0..r).map(|b| (0..r).map(|c| self.n(a, b, c)).collect()).collect())
    }

    /// Multiplicities of the simple objects in `x ⊗ y` for objects given by
    /// multiplicity vectors.
    pub fn tensor(&self, x: &[BigUint], y: &[BigUint]) -> Vec<BigUint> {
        let r = self.rank();
        let mut out = vec![BigUint::zero(); r];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let w = xa * yb;
                for (c, slot) in out.iter_mut().enumerate() {
                    let n = self.n(a, b, c);
                    if n != 0 {
                        *slot += &w * n;
                    }
                }
            }
        }
        out
    }

    /// Multiplicity vector of the dual object.
    pub fn dual_vector(&self, v: &[BigUint]) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.rank()];
        for (a, x) in v.iter().enumerate() {
            out[self.dual[a]] = x.clone();
        }
        out
    }

    pub fn unit_vector(&self, a: usize) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.rank()];
        v[a] = 1u32.into();
        v
    }

    /// Multiplicities of the simple objects in `v^{⊗q}`; negative powers use
    /// the dual object and `q = 0` gives the unit object.
    pub fn power_vector(&self, v: &[BigUint], q: i64) -> Vec<BigUint> {
        let base = if q < 0 { self.dual_vector(v) } else { v.to_vec() };
        if let Some(small) = self.power_vector_u64(&base, q.unsigned_abs()) {
            return small.into_iter().map(BigUint::from).collect();
        }
        let mut acc = self.unit_vector(0);
        for _ in 0..q.unsigned_abs() {
            acc = self.tensor(&acc, &base);
        }
        acc
    }

    fn power_vector_u64(&self, v: &[BigUint], q: u64) -> Option<Vec<u64>> {
        let r = self.rank();
        let v: Vec<u64> = v.iter().map(|x| x.to_u64()).collect::<Option<_>>()?;
        let mut acc = vec![0u64; r];
        acc[0] = 1;
        for _ in 0..q {
            let mut next = vec![0u64; r];
            for (a, x) in acc.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                for (b, y) in v.iter().enumerate() {
                    if *y == 0 {
                        continue;
                    }
                    let w = x.checked_mul(*y)?;
                    for (c, slot) in next.iter_mut().enumerate() {
                        let n = self.n(a, b, c);
                        if n != 0 {
                            *slot = slot.checked_add(w.checked_mul(n)?)?;
                        }
                    }
                }
            }
            acc = next;
        }
        Some(acc)
    }

    /// Multiplicity of each simple object in `U_a^{⊗q}`.
    pub fn power_multiplicities(&self, a: usize, q: i64) -> Vec<BigUint> {
        self.power_vector(&self.unit_vector(a), q)
    }
}

/// Elements of `Z_{n1} x ... x Z_{nk}` in mixed radix order.
pub fn enumerate_group(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut elems = vec![vec![]];
    for n in orders {
        elems = elems
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                (0..*n).map(move |x| {
                    let mut g = prefix.clone();
                    g.push(x);
                    g
                })
            })
            .collect();
    }
    elems
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|x| BigUint::from(*x)).collect()
    }

    #[test]
    fn group_rings_and_fibonacci_validate() {
        assert!(FusionData::abelian_group(&[2, 2]).validate().is_empty());
        assert!(FusionData::abelian_group(&[3]).validate().is_empty());
        assert!(FusionData::fibonacci().validate().is_empty());
    }

    #[test]
    fn duality_violation_is_reported() {
        let table = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![2, 0]],
        ];
        let f = FusionData::new(vec!["1".into(), "x".into()], vec![0, 1], table).unwrap();
        let v = f.validate();
        assert!(v.iter().any(|x| x.identity == "fusion duality" && x.indices == vec![1, 1]));
    }

    #[test]
    fn noncommutative_table_is_rejected() {
        let mut table = FusionData::abelian_group(&[3]).table();
        table[1][2] = vec![0, 1, 0];
        let f = FusionData::new(vec!["0".into(), "1".into(), "2".into()], vec![0, 2, 1], table).unwrap();
        assert!(f.validate().iter().any(|x| x.identity == "fusion commutativity"));
    }

    #[test]
    fn fusion_matrices() {
        let fib = FusionData::fibonacci();
        assert_eq!(fib.fusion_matrix(0).unwrap(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(fib.fusion_matrix(1).unwrap(), vec![vec![0, 1], vec![1, 1]]);
        assert!(fib.fusion_matrix(2).is_err());
        let z22 = FusionData::abelian_group(&[2, 2]);
        // translation by (1,1) swaps 00 <-> 11 and 01 <-> 10
        assert_eq!(
            z22.fusion_matrix(3).unwrap(),
            vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]]
        );
    }

    #[test]
    fn tensor_powers() {
        let fib = FusionData::fibonacci();
        assert_eq!(fib.power_multiplicities(1, 1), big(&[0, 1]));
        assert_eq!(fib.power_multiplicities(1, 0), big(&[1, 0]));
        assert_eq!(fib.power_multiplicities(1, 3), big(&[1, 2]));
        assert_eq!(fib.power_multiplicities(1, 5), big(&[3, 5]));
        let z3 = FusionData::abelian_group(&[3]);
        assert_eq!(z3.power_multiplicities(1, -1), big(&[0, 0, 1]));
        assert_eq!(z3.power_multiplicities(1, 3), big(&[1, 0, 0]));
    }

    #[test]
    fn huge_powers_promote() {
        let fib = FusionData::fibonacci();
        let v = fib.power_multiplicities(1, 100);
        // Fibonacci numbers F_99, F_100
        assert_eq!(v[1].to_string(), "354224848179261915075");
        assert_eq!(v[0].to_string(), "218922995834555169026");
    }
}
