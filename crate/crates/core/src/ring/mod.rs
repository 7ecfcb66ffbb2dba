//! Exact coefficient arithmetic: rationals, Gaussian rationals, GF(2),
//! multivariate Laurent polynomials, quaternions over them, and gcd /
//! unit-normal-form machinery.

mod coeff;
mod gcd;
mod poly;
mod quat;
mod text;

pub use coeff::{CoeffDomain, Coefficient};
pub use gcd::{canonicalize, laurent_divides, laurent_gcd, UnitMode, UnitNormalForm};
pub use poly::{LaurentPoly, Monomial};
pub use quat::Quaternion;
pub use text::parse_poly;

use std::fmt;

/// The variables a Laurent polynomial may mention, in the fixed global order
/// used by the graded-lexicographic term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    T,
    Q,
    X,
    Y,
    A,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::T, Var::Q, Var::X, Var::Y, Var::A];

    pub fn as_char(self) -> char {
        match self {
            Var::T => 't',
            Var::Q => 'q',
            Var::X => 'x',
            Var::Y => 'y',
            Var::A => 'a',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            't' => Some(Var::T),
            'q' => Some(Var::Q),
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'a' => Some(Var::A),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        match self {
            Var::T => 1,
            Var::Q => 2,
            Var::X => 4,
            Var::Y => 8,
            Var::A => 16,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An ordered subset of the five admissible variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |m, v| m | v.bit()))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Position of `v` within the set, in global variable order.
    pub fn index_of(self, v: Var) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        Some((self.0 & (v.bit() - 1)).count_ones() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The commutative coefficient ring Λ is determined by a coefficient domain
/// and a variable set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    pub domain: CoeffDomain,
    pub vars: VarSet,
}

impl Ring {
    pub fn new(domain: CoeffDomain, vars: VarSet) -> Ring {
        Ring { domain, vars }
    }

    pub fn rational(vars: &[Var]) -> Ring {
        Ring::new(CoeffDomain::Rational, VarSet::of(vars))
    }

    pub fn gaussian(vars: &[Var]) -> Ring {
        Ring::new(CoeffDomain::Gaussian, VarSet::of(vars))
    }

    pub fn gf2(vars: &[Var]) -> Ring {
        Ring::new(CoeffDomain::Gf2, VarSet::of(vars))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.domain {
            CoeffDomain::Rational => "Q",
            CoeffDomain::Gaussian => "Q(i)",
            CoeffDomain::Gf2 => "GF(2)",
        };
        write!(f, "{base}[")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v},{v}^-1")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn varset_indexing_follows_global_order() {
        let vs = VarSet::of(&[Var::A, Var::T, Var::X]);
        assert_eq!(vs.len(), 3);
        assert_eq!(vs.index_of(Var::T), Some(0));
        assert_eq!(vs.index_of(Var::X), Some(1));
        assert_eq!(vs.index_of(Var::A), Some(2));
        assert_eq!(vs.index_of(Var::Q), None);
        let order: Vec<Var> = vs.iter().collect();
        assert_eq!(order, vec![Var::T, Var::X, Var::A]);
    }
}
