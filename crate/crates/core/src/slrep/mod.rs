//! SL(2,Z): words, modular representations and their liftings, congruence
//! levels, image closure and t-rationality.

mod congruence;
mod rep;

pub use congruence::{
    congruence_level, factors_through, image_order, sl2_mod_order, DEFAULT_CLOSURE_CAP, DEFAULT_ENUM_CAP,
};
pub use rep::{all_liftings, canonical_center_rep, canonical_rep, find_lifting_params, is_t_rational, ModularRep};

use std::fmt;

use crate::exactnum::CycError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SlRepError {
    #[error("determinant of [[{0}, {1}], [{2}, {3}]] is not 1")]
    NotUnimodular(i64, i64, i64, i64),
    #[error("no lifting parameters: {0}")]
    NoLifting(String),
    #[error("Gauss sums are unequal, not a canonical center representation")]
    GaussSumsUnequal,
    #[error("relation {0} fails")]
    Relation(String),
    #[error("{what} has {size} elements, above the cap {cap}")]
    CapExceeded { what: String, size: u64, cap: u64 },
    #[error("level must be positive")]
    InvalidLevel,
    #[error(transparent)]
    Arithmetic(#[from] CycError),
}

/// An element `[[a, b], [c, d]]` of SL(2,Z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SL2Mat {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SL2Mat {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, SlRepError> {
        if a as i128 * d as i128 - b as i128 * c as i128 != 1 {
            return Err(SlRepError::NotUnimodular(a, b, c, d));
        }
        Ok(SL2Mat { a, b, c, d })
    }

    pub const fn identity() -> Self {
        SL2Mat { a: 1, b: 0, c: 0, d: 1 }
    }

    pub const fn s() -> Self {
        SL2Mat { a: 0, b: -1, c: 1, d: 0 }
    }

    pub const fn t() -> Self {
        SL2Mat { a: 1, b: 1, c: 0, d: 1 }
    }

    pub const fn t_pow(k: i64) -> Self {
        SL2Mat { a: 1, b: k, c: 0, d: 1 }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let f = |x: i64, y: i64, z: i64, w: i64| {
            x.checked_mul(y)
                .and_then(|p| z.checked_mul(w).and_then(|q| p.checked_add(q)))
                .expect("SL(2,Z) entry overflow")
        };
        SL2Mat {
            a: f(self.a, o.a, self.b, o.c),
            b: f(self.a, o.b, self.b, o.d),
            c: f(self.c, o.a, self.d, o.c),
            d: f(self.c, o.b, self.d, o.d),
        }
    }

    pub fn inverse(&self) -> Self {
        SL2Mat { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Conjugation by `diag(1, -1)`; sends `s` to `s^-1` and `t` to `t^-1`.
    pub fn tilde(&self) -> Self {
        SL2Mat { a: self.a, b: -self.b, c: -self.c, d: self.d }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }
}

impl fmt::Display for SL2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Generators appearing in words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    S,
    SInv,
    T(i64),
}

impl Letter {
    pub fn matrix(&self) -> SL2Mat {
        match self {
            Letter::S => SL2Mat::s(),
            Letter::SInv => SL2Mat::s().inverse(),
            Letter::T(k) => SL2Mat::t_pow(*k),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::S => write!(f, "s"),
            Letter::SInv => write!(f, "s^-1"),
            Letter::T(1) => write!(f, "t"),
            Letter::T(k) => write!(f, "t^{k}"),
        }
    }
}

/// Decomposes `g` into `t^{q1} s t^{q2} s ...` by the Euclidean algorithm.
pub fn word_from_matrix(g: &SL2Mat) -> Vec<Letter> {
    let mut word = Vec::new();
    let push_t = |w: &mut Vec<Letter>, k: i64| {
        if k != 0 {
            w.push(Letter::T(k));
        }
    };
    let mut h = *g;
    // invariant: g = (word) * h
    while h.c != 0 {
        let q = h.a.div_euclid(h.c);
        let a1 = h.a - q * h.c;
        let b1 = h.b - q * h.d;
        push_t(&mut word, q);
        word.push(Letter::S);
        // s^-1 t^-q h = [[c, d], [-a1, -b1]]
        h = SL2Mat { a: h.c, b: h.d, c: -a1, d: -b1 };
    }
    if h.a == 1 {
        push_t(&mut word, h.b);
    } else {
        // h = -t^{-b} = s^2 t^{-b}
        word.push(Letter::S);
        word.push(Letter::S);
        push_t(&mut word, -h.b);
    }
    word
}

pub fn eval_word(word: &[Letter]) -> SL2Mat {
    word.iter().fold(SL2Mat::identity(), |acc, l| acc.mul(&l.matrix()))
}

pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}
