use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::{CoeffDomain, Coefficient, Ring, Var};
use crate::error::{Error, Result};

/// An exponent vector, indexed by the ring's variable set in global variable
/// order. Ordered graded-lexicographically: total degree first, then the
/// exponent of the earliest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[i64; 2]>);

impl Monomial {
    pub fn unit(arity: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn from_exps(exps: &[i64]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_sub(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate Laurent polynomial with exact coefficients. Zero
/// coefficients are never stored; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl LaurentPoly {
    pub fn zero(ring: Ring) -> LaurentPoly {
        LaurentPoly { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring) -> LaurentPoly {
        LaurentPoly::constant(ring, Coefficient::one(ring.domain))
    }

    pub fn constant(ring: Ring, c: Coefficient) -> LaurentPoly {
        LaurentPoly::monomial(ring, Monomial::unit(ring.arity()), c)
    }

    pub fn from_int(ring: Ring, n: i64) -> LaurentPoly {
        LaurentPoly::constant(ring, Coefficient::from_int(ring.domain, n))
    }

    pub fn monomial(ring: Ring, m: Monomial, c: Coefficient) -> LaurentPoly {
        assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
        debug_assert_eq!(c.domain(), ring.domain);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { ring, terms }
    }

    /// The variable `v` raised to `exp`.
    pub fn var_pow(ring: Ring, v: Var, exp: i64) -> LaurentPoly {
        let idx = ring
            .vars
            .index_of(v)
            .unwrap_or_else(|| panic!("variable {v} not in ring {ring}"));
        let mut exps = vec![0i64; ring.arity()];
        exps[idx] = exp;
        LaurentPoly::monomial(ring, Monomial::from_exps(&exps), Coefficient::one(ring.domain))
    }

    pub fn var(ring: Ring, v: Var) -> LaurentPoly {
        LaurentPoly::var_pow(ring, v, 1)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && {
            let (m, c) = self.terms.iter().next().unwrap();
            m.is_unit() && c.is_one()
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Terms in decreasing graded-lexicographic order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter().rev()
    }

    /// Leading term under the graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Coefficient {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(self.ring.domain))
    }

    /// A single-term polynomial with invertible coefficient, i.e. a unit of Λ.
    pub fn is_ring_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// For a unit `c*m`, its inverse `c^-1 * m^-1`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if !self.is_ring_unit() {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(self.ring, m.inverse(), c.inverse()?))
    }

    fn check_ring(&self, other: &LaurentPoly) -> Result<()> {
        if self.ring.vars != other.ring.vars {
            return Err(Error::VariableSetMismatch {
                left: self.ring.vars.to_string(),
                right: other.ring.vars.to_string(),
            });
        }
        if self.ring.domain != other.ring.domain {
            return Err(Error::DomainMismatch {
                left: self.ring.domain,
                right: other.ring.domain,
            });
        }
        Ok(())
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, Coefficient>, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), c.clone());
        }
        Ok(LaurentPoly { ring: self.ring, terms })
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        if self.ring.domain == CoeffDomain::Gf2 {
            return self.clone();
        }
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Exact product. Errors on mismatched variable sets or domains.
    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert_term(&mut terms, ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(LaurentPoly { ring: self.ring, terms })
    }

    pub fn scale(&self, c: &Coefficient) -> LaurentPoly {
        debug_assert_eq!(c.domain(), self.ring.domain);
        if c.is_zero() {
            return LaurentPoly::zero(self.ring);
        }
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.ring);
        for _ in 0..n {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Per-variable minimum exponents over all terms (zero vector for the
    /// zero polynomial).
    pub fn min_exps(&self) -> Monomial {
        let arity = self.ring.arity();
        let mut mins = vec![i64::MAX; arity];
        for m in self.terms.keys() {
            for i in 0..arity {
                mins[i] = mins[i].min(m.exp(i));
            }
        }
        if self.terms.is_empty() {
            mins = vec![0; arity];
        }
        Monomial::from_exps(&mins)
    }

    pub fn max_exps(&self) -> Monomial {
        let arity = self.ring.arity();
        let mut maxs = vec![i64::MIN; arity];
        for m in self.terms.keys() {
            for i in 0..arity {
                maxs[i] = maxs[i].max(m.exp(i));
            }
        }
        if self.terms.is_empty() {
            maxs = vec![0; arity];
        }
        Monomial::from_exps(&maxs)
    }

    /// Shift so every variable has minimum exponent zero. Returns the shifted
    /// polynomial and the extracted monomial `s` with `self = s * shifted`.
    pub fn extract_monomial_shift(&self) -> (LaurentPoly, Monomial) {
        let mins = self.min_exps();
        if mins.is_unit() {
            return (self.clone(), mins);
        }
        (self.mul_monomial(&mins.inverse()), mins)
    }

    /// Exact division in the Laurent ring: `Some(q)` with `self = d * q`, or
    /// `None` when no such `q` exists. `d` must be nonzero.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.ring));
        }
        self.check_ring(d).ok()?;
        let (p0, sp) = self.extract_monomial_shift();
        let (d0, sd) = d.extract_monomial_shift();
        let mut rem = p0;
        let mut quo = BTreeMap::new();
        let (dm, dc) = d0.leading().unwrap();
        let dci = dc.inverse().expect("nonzero leading coefficient");
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let um = rm.div(dm);
            if !um.is_nonnegative() {
                return None;
            }
            let uc = rc.mul(&dci);
            let u = LaurentPoly::monomial(self.ring, um.clone(), uc.clone());
            rem = rem.try_sub(&u.try_mul(&d0).unwrap()).unwrap();
            Self::insert_term(&mut quo, um, uc);
        }
        let q = LaurentPoly { ring: self.ring, terms: quo };
        Some(q.mul_monomial(&sp.div(&sd)))
    }

    /// Variables that actually occur with a nonzero exponent spread.
    pub fn active_vars(&self) -> Vec<Var> {
        let mins = self.min_exps();
        let maxs = self.max_exps();
        self.ring
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| mins.exp(*i) != maxs.exp(*i))
            .map(|(_, v)| v)
            .collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::render_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_ring() -> Ring {
        Ring::rational(&[Var::T])
    }

    fn tp(pairs: &[(i64, i64)]) -> LaurentPoly {
        let ring = t_ring();
        let mut p = LaurentPoly::zero(ring);
        for &(c, e) in pairs {
            let m = LaurentPoly::monomial(
                ring,
                Monomial::from_exps(&[e]),
                Coefficient::from_int(ring.domain, c),
            );
            p = p.try_add(&m).unwrap();
        }
        p
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let t = LaurentPoly::var(t_ring(), Var::T);
        let tinv = LaurentPoly::var_pow(t_ring(), Var::T, -1);
        assert!(t.try_mul(&tinv).unwrap().is_one());
    }

    #[test]
    fn difference_of_squares() {
        let p = tp(&[(1, 0), (1, 1)]);
        let q = tp(&[(1, 0), (-1, 1)]);
        assert_eq!(p.try_mul(&q).unwrap(), tp(&[(1, 0), (-1, 2)]));
    }

    #[test]
    fn gf2_square_freshman_dream() {
        let ring = Ring::gf2(&[Var::X]);
        let p = LaurentPoly::var(ring, Var::X)
            .try_add(&LaurentPoly::one(ring))
            .unwrap();
        let sq = p.try_mul(&p).unwrap();
        let expected = LaurentPoly::var_pow(ring, Var::X, 2)
            .try_add(&LaurentPoly::one(ring))
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn mismatched_variable_sets_error() {
        let p = LaurentPoly::var(t_ring(), Var::T);
        let q = LaurentPoly::var(Ring::rational(&[Var::Q]), Var::Q);
        assert!(p.try_mul(&q).is_err());
    }

    #[test]
    fn exact_laurent_division() {
        // (2 + t^-2)(1 + 2t^-2) divisible by (2 + t^-2)
        let d = tp(&[(2, 0), (1, -2)]);
        let q = tp(&[(1, 0), (2, -2)]);
        let p = d.try_mul(&q).unwrap();
        assert_eq!(p.div_exact(&d), Some(q.clone()));
        let not_div = tp(&[(1, 0), (1, 1)]);
        assert_eq!(tp(&[(-1, 0), (1, 2)]).div_exact(&not_div), Some(tp(&[(-1, 0), (1, 1)])));
        assert_eq!(tp(&[(2, 0), (1, 2)]).div_exact(&not_div), None);
    }

    #[test]
    fn graded_lex_leading_term() {
        // 3t^4 + 15/2 t^2 + 3: leading term is t^4.
        let p = tp(&[(3, 0), (3, 4), (7, 2)]);
        let (m, _) = p.leading().unwrap();
        assert_eq!(m.exps(), &[4]);
    }
}
