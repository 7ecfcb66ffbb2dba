//! Switches: invertible 2x2 block matrices `S = [[A,B],[C,D]]` over Λ that
//! satisfy the Yang-Baxter equation. A validated switch assigns linear
//! relations to the crossings of a long knot diagram.

mod file;

pub use file::{load_switch, load_switch_unvalidated, parse_switch_str};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{FracMatrix, RingMatrix};
use crate::ring::{LaurentPoly, Quaternion, Ring, UnitMode, Var};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SwitchKind {
    #[serde(rename = "virtual")]
    Virtual,
    #[serde(rename = "flat")]
    Flat,
}

impl fmt::Display for SwitchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwitchKind::Virtual => write!(f, "virtual"),
            SwitchKind::Flat => write!(f, "flat"),
        }
    }
}

/// A validated switch. `A`, `B` and `I - A` are invertible over Λ, the
/// assembled 2d x 2d matrix is invertible, and the 3d x 3d braid identity
/// `S12 S23 S12 = S23 S12 S23` holds. Flat switches additionally satisfy
/// `S^2 = I`.
#[derive(Clone, Debug)]
pub struct Switch {
    name: String,
    kind: SwitchKind,
    block_size: usize,
    a: RingMatrix,
    b: RingMatrix,
    c: RingMatrix,
    d: RingMatrix,
    default_unit_mode: UnitMode,
}

impl Switch {
    /// Validate and assemble a switch from its four blocks.
    pub fn new(
        name: impl Into<String>,
        kind: SwitchKind,
        a: RingMatrix,
        b: RingMatrix,
        c: RingMatrix,
        d: RingMatrix,
        default_unit_mode: UnitMode,
    ) -> Result<Switch> {
        let sw = Switch {
            name: name.into(),
            kind,
            block_size: a.rows(),
            a,
            b,
            c,
            d,
            default_unit_mode,
        };
        sw.validate()?;
        Ok(sw)
    }

    /// Build a switch without running validation. Only for negative-control
    /// experiments; computed values are meaningless if validation would fail.
    pub fn new_unvalidated(
        name: impl Into<String>,
        kind: SwitchKind,
        a: RingMatrix,
        b: RingMatrix,
        c: RingMatrix,
        d: RingMatrix,
        default_unit_mode: UnitMode,
    ) -> Switch {
        Switch {
            name: name.into(),
            kind,
            block_size: a.rows(),
            a,
            b,
            c,
            d,
            default_unit_mode,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SwitchKind {
        self.kind
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn ring(&self) -> Ring {
        self.a.ring()
    }

    pub fn a(&self) -> &RingMatrix {
        &self.a
    }

    pub fn b(&self) -> &RingMatrix {
        &self.b
    }

    pub fn c(&self) -> &RingMatrix {
        &self.c
    }

    pub fn d(&self) -> &RingMatrix {
        &self.d
    }

    pub fn default_unit_mode(&self) -> UnitMode {
        self.default_unit_mode
    }

    /// The assembled 2d x 2d matrix `[[A,B],[C,D]]`.
    pub fn full_matrix(&self) -> RingMatrix {
        RingMatrix::from_blocks(&[vec![&self.a, &self.b], vec![&self.c, &self.d]])
    }

    fn identity_block(&self) -> RingMatrix {
        RingMatrix::identity(self.ring(), self.block_size)
    }

    /// `S12 = [[A,B,0],[C,D,0],[0,0,I]]` acting on Λ^{3d}.
    pub fn s12(&self) -> RingMatrix {
        let i = self.identity_block();
        let z = RingMatrix::zero(self.ring(), self.block_size, self.block_size);
        RingMatrix::from_blocks(&[
            vec![&self.a, &self.b, &z],
            vec![&self.c, &self.d, &z],
            vec![&z, &z, &i],
        ])
    }

    /// `S23 = [[I,0,0],[0,A,B],[0,C,D]]` acting on Λ^{3d}.
    pub fn s23(&self) -> RingMatrix {
        let i = self.identity_block();
        let z = RingMatrix::zero(self.ring(), self.block_size, self.block_size);
        RingMatrix::from_blocks(&[
            vec![&i, &z, &z],
            vec![&z, &self.a, &self.b],
            vec![&z, &self.c, &self.d],
        ])
    }

    fn validate(&self) -> Result<()> {
        let d = self.block_size;
        let ring = self.ring();
        for (m, label) in [(&self.a, "A"), (&self.b, "B"), (&self.c, "C"), (&self.d, "D")] {
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch(format!(
                    "block {label} is {}x{}, expected {d}x{d}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.ring() != ring {
                return Err(Error::DimensionMismatch(format!(
                    "block {label} lives in {}, expected {ring}",
                    m.ring()
                )));
            }
        }
        for (m, label) in [(&self.a, "A"), (&self.b, "B")] {
            if !m.is_nonsingular() {
                return Err(Error::SwitchPrecondition(format!(
                    "{label} is not invertible (zero determinant over {ring})"
                )));
            }
        }
        let one_minus_a = self.identity_block().sub(&self.a)?;
        if !one_minus_a.is_nonsingular() {
            return Err(Error::SwitchPrecondition(format!(
                "1 - A is not invertible (zero determinant over {ring})"
            )));
        }
        if !self.full_matrix().is_nonsingular() {
            return Err(Error::SwitchInvalid(
                "S = [[A,B],[C,D]] is not invertible".into(),
            ));
        }
        let s12 = self.s12();
        let s23 = self.s23();
        let lhs = s12.mul(&s23)?.mul(&s12)?;
        let rhs = s23.mul(&s12)?.mul(&s23)?;
        if lhs != rhs {
            return Err(Error::SwitchInvalid(
                "Yang-Baxter equation fails: S12*S23*S12 != S23*S12*S23".into(),
            ));
        }
        if self.kind == SwitchKind::Flat {
            let s = self.full_matrix();
            if !s.mul(&s)?.is_identity() {
                return Err(Error::SwitchInvalid(
                    "flat switch requires S^2 = 1".into(),
                ));
            }
        }
        Ok(())
    }

    /// Evaluate both sides of the defining relation of the switch algebra,
    /// `A^-1 B^-1 A B - B^-1 A B` and `B A^-1 B^-1 A - A`, over the fraction
    /// field of Λ. For a valid switch they are equal; for a flat switch the
    /// common value is the identity.
    pub fn fundamental_relation_sides(&self) -> Result<(FracMatrix, FracMatrix)> {
        let a = FracMatrix::from_exact(self.a.clone());
        let b = FracMatrix::from_exact(self.b.clone());
        let ai = a.inverse()?.expect("A nonsingular");
        let bi = b.inverse()?.expect("B nonsingular");
        let aiba = ai.mul(&bi)?.mul_exact(&self.a)?;
        let lhs = aiba
            .mul_exact(&self.b)?
            .sub(&bi.mul_exact(&self.a)?.mul_exact(&self.b)?)?;
        let rhs = b.mul(&ai)?.mul(&bi)?.mul_exact(&self.a)?.sub(&a)?;
        Ok((lhs, rhs))
    }
}

/// Complete a switch from its first-row blocks via
/// `C = A^-1 B^-1 A (1-A)` and `D = 1 - A^-1 B^-1 A B`, then validate. The
/// inverses live over the fraction field; the completed blocks must land
/// back in Λ.
pub fn complete_switch(
    name: impl Into<String>,
    kind: SwitchKind,
    a: RingMatrix,
    b: RingMatrix,
    default_unit_mode: UnitMode,
) -> Result<Switch> {
    let (c, d) = complete_blocks(&a, &b)?;
    Switch::new(name, kind, a, b, c, d, default_unit_mode)
}

/// The completion formulas alone, without final switch validation.
pub fn complete_blocks(a: &RingMatrix, b: &RingMatrix) -> Result<(RingMatrix, RingMatrix)> {
    let ring = a.ring();
    let d = a.rows();
    if !a.is_square() || !b.is_square() || b.rows() != d {
        return Err(Error::DimensionMismatch(
            "A and B must be square of equal size".into(),
        ));
    }
    let identity = RingMatrix::identity(ring, d);
    let ai = FracMatrix::from_exact(a.clone())
        .inverse()?
        .ok_or_else(|| Error::SwitchPrecondition("A is not invertible".into()))?;
    let bi = FracMatrix::from_exact(b.clone())
        .inverse()?
        .ok_or_else(|| Error::SwitchPrecondition("B is not invertible".into()))?;
    let one_minus_a = identity.sub(a)?;
    if !one_minus_a.is_nonsingular() {
        return Err(Error::SwitchPrecondition("1 - A is not invertible".into()));
    }
    let aiba = ai.mul(&bi)?.mul_exact(a)?;
    let c = aiba.mul_exact(&one_minus_a)?.to_exact().ok_or_else(|| {
        Error::SwitchInvalid("C = A^-1 B^-1 A (1-A) does not lie in Λ".into())
    })?;
    let dd = FracMatrix::from_exact(identity)
        .sub(&aiba.mul_exact(b)?)?
        .to_exact()
        .ok_or_else(|| {
            Error::SwitchInvalid("D = 1 - A^-1 B^-1 A B does not lie in Λ".into())
        })?;
    Ok((c, dd))
}

/// The three switch symmetries of interest. `S† = [[D,C],[C,A]]` as
/// displayed in the source; since that form repeats `C` in both
/// off-diagonal slots, the dagger-unitarity check also evaluates the
/// `[[D,C],[B,A]]` variant and reports both.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Symmetry {
    SelfDagger,
    Involutory,
    DaggerUnitary,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symmetry::SelfDagger => write!(f, "self-dagger"),
            Symmetry::Involutory => write!(f, "involutory"),
            Symmetry::DaggerUnitary => write!(f, "dagger-unitary"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymmetryReport {
    pub self_dagger: bool,
    pub involutory: bool,
    pub dagger_unitary_displayed: bool,
    pub dagger_unitary_b_variant: bool,
}

impl SymmetryReport {
    pub fn symmetries(&self) -> BTreeSet<Symmetry> {
        let mut set = BTreeSet::new();
        if self.self_dagger {
            set.insert(Symmetry::SelfDagger);
        }
        if self.involutory {
            set.insert(Symmetry::Involutory);
        }
        if self.dagger_unitary_displayed || self.dagger_unitary_b_variant {
            set.insert(Symmetry::DaggerUnitary);
        }
        set
    }
}

impl fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = self.symmetries();
        if set.is_empty() {
            write!(f, "none")?;
        } else {
            for (i, s) in set.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{s}")?;
            }
        }
        if self.dagger_unitary_displayed != self.dagger_unitary_b_variant {
            write!(
                f,
                " (S*S-dagger = 1 holds for the {} form only)",
                if self.dagger_unitary_displayed { "[[D,C],[C,A]]" } else { "[[D,C],[B,A]]" }
            )?;
        }
        Ok(())
    }
}

/// Evaluate the identities `S = S†`, `S^2 = 1`, `S S† = 1` on the
/// represented matrices.
pub fn classify_symmetry(sw: &Switch) -> Result<SymmetryReport> {
    let s = sw.full_matrix();
    let dagger_displayed =
        RingMatrix::from_blocks(&[vec![sw.d(), sw.c()], vec![sw.c(), sw.a()]]);
    let dagger_b = RingMatrix::from_blocks(&[vec![sw.d(), sw.c()], vec![sw.b(), sw.a()]]);
    Ok(SymmetryReport {
        self_dagger: s == dagger_displayed,
        involutory: s.mul(&s)?.is_identity(),
        dagger_unitary_displayed: s.mul(&dagger_displayed)?.is_identity(),
        dagger_unitary_b_variant: s.mul(&dagger_b)?.is_identity(),
    })
}

pub const BUILTIN_SWITCHES: [&str; 4] = ["budapest", "weyl-q", "flat-weyl", "alexander-spec"];

/// Look up a built-in switch by name.
pub fn builtin_switch(name: &str) -> Result<Switch> {
    match name {
        "budapest" => budapest(),
        "weyl-q" => weyl_q(),
        "flat-weyl" => flat_weyl(),
        "alexander-spec" => alexander_spec(),
        _ => Err(Error::UnknownName { kind: "switch", name: name.to_string() }),
    }
}

fn quat(ring: Ring, parts: [&str; 4]) -> Quaternion {
    Quaternion::new(parts.map(|s| crate::ring::parse_poly(s, ring).expect("builtin literal")))
}

/// The Budapest switch `S = [[1+i, -tj],[t^-1 j, 1+i]]` under the standard
/// quaternion representation: d = 2 over Gaussian-rational Laurent
/// polynomials in t.
pub fn budapest() -> Result<Switch> {
    let ring = Ring::rational(&[Var::T]);
    let a = quat(ring, ["1", "1", "0", "0"]);
    let b = quat(ring, ["0", "0", "-t", "0"]);
    complete_switch(
        "budapest",
        SwitchKind::Virtual,
        a.to_matrix(),
        b.to_matrix(),
        UnitMode::Field,
    )
}

/// The quantum-Weyl-algebra switch: d = 2 over rational Laurent polynomials
/// in q, with all four blocks given explicitly.
pub fn weyl_q() -> Result<Switch> {
    let ring = Ring::rational(&[Var::Q]);
    let p = |s: &str| crate::ring::parse_poly(s, ring).expect("builtin literal");
    let a = RingMatrix::from_rows(
        ring,
        vec![
            vec![p("1 - q"), p("-q^3 + 2*q^2 - 1")],
            vec![p("0"), p("1 - q")],
        ],
    )?;
    let b = RingMatrix::from_rows(ring, vec![vec![p("q"), p("1")], vec![p("0"), p("1")]])?;
    let c = RingMatrix::from_rows(
        ring,
        vec![
            vec![p("1"), p("-q^3 + 3*q^2 - 2*q - 2 + q^-1")],
            vec![p("0"), p("q")],
        ],
    )?;
    let d = RingMatrix::from_rows(
        ring,
        vec![
            vec![p("0"), p("q^2 - 2*q + q^-1")],
            vec![p("0"), p("0")],
        ],
    )?;
    Switch::new("weyl-q", SwitchKind::Virtual, a, b, c, d, UnitMode::Field)
}

/// The Weyl-algebra generators used by the flat switch, over GF(2) in the
/// three variables a, x, y: `u = [[x,a],[0,x]]`, `v = [[y,0],[1/a,y]]`.
/// They satisfy `uv - vu = 1`.
pub fn flat_weyl_generators() -> Result<(RingMatrix, RingMatrix)> {
    let ring = Ring::gf2(&[Var::X, Var::Y, Var::A]);
    let p = |s: &str| crate::ring::parse_poly(s, ring).expect("builtin literal");
    let u = RingMatrix::from_rows(ring, vec![vec![p("x"), p("a")], vec![p("0"), p("x")]])?;
    let v = RingMatrix::from_rows(ring, vec![vec![p("y"), p("0")], vec![p("a^-1"), p("y")]])?;
    Ok((u, v))
}

/// The flat switch built from the Weyl pair after the specialization
/// y = x, a = 1: `B = u`, `A = (uv)^-1`, with C and D completed. d = 2 over
/// GF(2) Laurent polynomials in x; `S^2 = 1`.
pub fn flat_weyl() -> Result<Switch> {
    let ring = Ring::gf2(&[Var::X]);
    let p = |s: &str| crate::ring::parse_poly(s, ring).expect("builtin literal");
    let u = RingMatrix::from_rows(ring, vec![vec![p("x"), p("1")], vec![p("0"), p("x")]])?;
    let v = RingMatrix::from_rows(ring, vec![vec![p("x"), p("0")], vec![p("1"), p("x")]])?;
    let uv = u.mul(&v)?;
    let a = uv
        .inverse()?
        .ok_or_else(|| Error::SwitchPrecondition("uv is not invertible".into()))?;
    complete_switch("flat-weyl", SwitchKind::Flat, a, u, UnitMode::Field)
}

/// The specialization of the Alexander switch singled out by the
/// dagger-unitarity condition: `S = [[2, 1],[-1, 0]]` with d = 1 over the
/// rationals.
pub fn alexander_spec() -> Result<Switch> {
    let ring = Ring::rational(&[]);
    let one = LaurentPoly::one(ring);
    let two = LaurentPoly::from_int(ring, 2);
    let a = RingMatrix::from_rows(ring, vec![vec![two]])?;
    let b = RingMatrix::from_rows(ring, vec![vec![one]])?;
    complete_switch("alexander-spec", SwitchKind::Virtual, a, b, UnitMode::Field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;

    #[test]
    fn budapest_completion_matches_quoted_blocks() {
        let sw = budapest().unwrap();
        let ring = Ring::rational(&[Var::T]);
        let c = quat(ring, ["0", "0", "t^-1", "0"]).to_matrix();
        let d = quat(ring, ["1", "1", "0", "0"]).to_matrix();
        assert_eq!(sw.c(), &c);
        assert_eq!(sw.d(), &d);
    }

    #[test]
    fn builtins_validate() {
        for name in BUILTIN_SWITCHES {
            let sw = builtin_switch(name).unwrap();
            assert_eq!(sw.name(), name);
        }
    }

    #[test]
    fn fundamental_relation_holds_for_builtins() {
        for name in BUILTIN_SWITCHES {
            let sw = builtin_switch(name).unwrap();
            let (lhs, rhs) = sw.fundamental_relation_sides().unwrap();
            assert!(lhs == rhs, "fundamental relation for {name}");
            if sw.kind() == SwitchKind::Flat {
                assert!(lhs.is_identity(), "flat relation value must be 1");
            }
        }
    }

    #[test]
    fn weyl_q_blocks_satisfy_completion_formulas() {
        let sw = weyl_q().unwrap();
        let completed = complete_switch(
            "weyl-q-completed",
            SwitchKind::Virtual,
            sw.a().clone(),
            sw.b().clone(),
            UnitMode::Field,
        )
        .unwrap();
        assert_eq!(completed.c(), sw.c());
        assert_eq!(completed.d(), sw.d());
    }

    #[test]
    fn flat_weyl_is_involutory() {
        let sw = flat_weyl().unwrap();
        let s = sw.full_matrix();
        assert!(s.mul(&s).unwrap().is_identity());
    }

    #[test]
    fn weyl_generators_satisfy_uv_minus_vu_equals_one() {
        let (u, v) = flat_weyl_generators().unwrap();
        let comm = u.mul(&v).unwrap().sub(&v.mul(&u).unwrap()).unwrap();
        assert!(comm.is_identity());
    }

    #[test]
    fn alexander_spec_blocks() {
        let sw = alexander_spec().unwrap();
        let ring = Ring::rational(&[]);
        assert_eq!(sw.c().entry(0, 0), &parse_poly("-1", ring).unwrap());
        assert!(sw.d().entry(0, 0).is_zero());
    }

    #[test]
    fn classification_of_builtins() {
        let budapest = classify_symmetry(&budapest().unwrap()).unwrap();
        assert!(budapest.symmetries().is_empty());

        let flat = classify_symmetry(&flat_weyl().unwrap()).unwrap();
        assert!(flat.symmetries().contains(&Symmetry::Involutory));

        let alex = classify_symmetry(&alexander_spec().unwrap()).unwrap();
        assert!(alex.symmetries().contains(&Symmetry::DaggerUnitary));
        assert!(alex.dagger_unitary_b_variant);
        assert!(!alex.dagger_unitary_displayed);
    }

    #[test]
    fn identity_a_is_rejected() {
        let ring = Ring::rational(&[Var::T]);
        let i = RingMatrix::identity(ring, 2);
        let err = complete_switch("bad", SwitchKind::Virtual, i.clone(), i, UnitMode::Field)
            .unwrap_err();
        assert!(matches!(err, Error::SwitchPrecondition(_)));
    }

    #[test]
    fn corrupted_block_fails_yang_baxter() {
        // Budapest blocks with D replaced by 1-i: preconditions hold but the
        // braid identity fails.
        let ring = Ring::rational(&[Var::T]);
        let a = quat(ring, ["1", "1", "0", "0"]).to_matrix();
        let b = quat(ring, ["0", "0", "-t", "0"]).to_matrix();
        let c = quat(ring, ["0", "0", "t^-1", "0"]).to_matrix();
        let d = quat(ring, ["1", "-1", "0", "0"]).to_matrix();
        let err =
            Switch::new("bad", SwitchKind::Virtual, a, b, c, d, UnitMode::Field).unwrap_err();
        match err {
            Error::SwitchInvalid(msg) => assert!(msg.contains("Yang-Baxter"), "{msg}"),
            other => panic!("expected invalid-switch error, got {other}"),
        }
    }
}
