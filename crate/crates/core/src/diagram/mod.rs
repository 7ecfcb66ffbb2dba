//! Long virtual and long flat knot diagrams as passage codes.
//!
//! A diagram is the ordered list of crossing passages met while traversing
//! the strand from the input end to the output end. Classical passages are
//! `O<id><sign>` / `U<id><sign>`, virtual passages `V<id>`, flat passages
//! `L<id>` / `R<id>`. Virtual crossings carry no semi-arc labels: the
//! labeling passes through them unchanged.

mod moves;

pub use moves::{detour_fixture, perturb, perturb_many, perturb_trace, r3_fixture, random_move, Move};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Role {
    Over(Sign),
    Under(Sign),
    VirtualPass,
    FlatFirst,
    FlatSecond,
}

impl Role {
    pub fn is_classical(self) -> bool {
        matches!(self, Role::Over(_) | Role::Under(_))
    }

    pub fn is_flat(self) -> bool {
        matches!(self, Role::FlatFirst | Role::FlatSecond)
    }

    /// Classical and flat passages delimit semi-arcs; virtual ones do not.
    pub fn cuts_arc(self) -> bool {
        self.is_classical() || self.is_flat()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DiagramKind {
    Virtual,
    Flat,
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramKind::Virtual => write!(f, "virtual"),
            DiagramKind::Flat => write!(f, "flat"),
        }
    }
}

/// How one crossing sits along the strand: the positions index into the
/// passage list.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Crossing {
    Classical { id: u32, sign: Sign, over_pos: usize, under_pos: usize },
    Flat { id: u32, first_pos: usize, second_pos: usize },
}

/// A validated long knot diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LongDiagram {
    kind: DiagramKind,
    passages: Vec<Passage>,
}

impl LongDiagram {
    pub fn empty(kind: DiagramKind) -> LongDiagram {
        LongDiagram { kind, passages: Vec::new() }
    }

    pub fn new(kind: DiagramKind, passages: Vec<Passage>) -> Result<LongDiagram> {
        let d = LongDiagram { kind, passages };
        d.validate()?;
        Ok(d)
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn passages(&self) -> &[Passage] {
        &self.passages
    }

    fn validate(&self) -> Result<()> {
        let mut seen: BTreeMap<u32, Vec<Role>> = BTreeMap::new();
        for p in &self.passages {
            if p.crossing == 0 {
                return Err(Error::CodeParse("crossing ids are positive integers".into()));
            }
            match (self.kind, p.role) {
                (DiagramKind::Flat, Role::Over(_) | Role::Under(_)) => {
                    return Err(Error::CodeParse(format!(
                        "flat diagrams contain no classical passages (crossing {})",
                        p.crossing
                    )))
                }
                (DiagramKind::Virtual, Role::FlatFirst | Role::FlatSecond) => {
                    return Err(Error::CodeParse(format!(
                        "virtual diagrams contain no flat passages (crossing {})",
                        p.crossing
                    )))
                }
                _ => {}
            }
            seen.entry(p.crossing).or_default().push(p.role);
        }
        for (id, roles) in &seen {
            if roles.len() != 2 {
                return Err(Error::CodeParse(format!(
                    "crossing {id} appears {} time(s), expected 2",
                    roles.len()
                )));
            }
            match (roles[0], roles[1]) {
                (Role::Over(s1), Role::Under(s2)) | (Role::Under(s1), Role::Over(s2)) => {
                    if s1 != s2 {
                        return Err(Error::CodeParse(format!(
                            "sign mismatch at crossing {id}"
                        )));
                    }
                }
                (Role::VirtualPass, Role::VirtualPass) => {}
                (Role::FlatFirst, Role::FlatSecond) | (Role::FlatSecond, Role::FlatFirst) => {}
                _ => {
                    return Err(Error::CodeParse(format!(
                        "crossing {id} has inconsistent passage roles"
                    )))
                }
            }
        }
        Ok(())
    }

    /// Number of classical or flat crossings.
    pub fn crossing_count(&self) -> usize {
        self.passages.iter().filter(|p| p.role.cuts_arc()).count() / 2
    }

    pub fn virtual_count(&self) -> usize {
        self.passages
            .iter()
            .filter(|p| p.role == Role::VirtualPass)
            .count()
            / 2
    }

    /// Semi-arc count: `2c + 1` where `c` is the crossing count.
    pub fn semi_arcs(&self) -> usize {
        2 * self.crossing_count() + 1
    }

    /// For every passage, the semi-arc entering it and the one leaving it.
    /// Virtual passages carry the label through.
    pub fn passage_arcs(&self) -> Vec<(usize, usize)> {
        let mut arc = 0usize;
        self.passages
            .iter()
            .map(|p| {
                if p.role.cuts_arc() {
                    arc += 1;
                    (arc - 1, arc)
                } else {
                    (arc, arc)
                }
            })
            .collect()
    }

    /// Classical and flat crossings in order of first passage.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut first: BTreeMap<u32, (usize, Role)> = BTreeMap::new();
        let mut out = Vec::new();
        for (pos, p) in self.passages.iter().enumerate() {
            if !p.role.cuts_arc() {
                continue;
            }
            match first.get(&p.crossing) {
                None => {
                    first.insert(p.crossing, (pos, p.role));
                }
                Some(&(fpos, frole)) => {
                    let c = match (frole, p.role) {
                        (Role::Over(s), Role::Under(_)) => Crossing::Classical {
                            id: p.crossing,
                            sign: s,
                            over_pos: fpos,
                            under_pos: pos,
                        },
                        (Role::Under(s), Role::Over(_)) => Crossing::Classical {
                            id: p.crossing,
                            sign: s,
                            over_pos: pos,
                            under_pos: fpos,
                        },
                        (Role::FlatFirst, Role::FlatSecond) => Crossing::Flat {
                            id: p.crossing,
                            first_pos: fpos,
                            second_pos: pos,
                        },
                        (Role::FlatSecond, Role::FlatFirst) => Crossing::Flat {
                            id: p.crossing,
                            first_pos: pos,
                            second_pos: fpos,
                        },
                        _ => unreachable!("validated diagram"),
                    };
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn render(&self) -> String {
        self.passages
            .iter()
            .map(|p| {
                let id = p.crossing;
                match p.role {
                    Role::Over(s) => format!("O{id}{}", s.as_char()),
                    Role::Under(s) => format!("U{id}{}", s.as_char()),
                    Role::VirtualPass => format!("V{id}"),
                    Role::FlatFirst => format!("L{id}"),
                    Role::FlatSecond => format!("R{id}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn max_crossing_id(&self) -> u32 {
        self.passages.iter().map(|p| p.crossing).max().unwrap_or(0)
    }

    /// Mirror image −D: reflection in the plane of the diagram. Over and
    /// under swap at every classical passage and every sign flips; flat and
    /// virtual passages are untouched.
    pub fn mirror(&self) -> LongDiagram {
        let passages = self
            .passages
            .iter()
            .map(|p| Passage {
                crossing: p.crossing,
                role: match p.role {
                    Role::Over(s) => Role::Under(s.neg()),
                    Role::Under(s) => Role::Over(s.neg()),
                    other => other,
                },
            })
            .collect();
        LongDiagram { kind: self.kind, passages }
    }

    /// Reflection D̄ in the x-axis: over/under kept, every sign flips; flat
    /// passages swap their roles.
    pub fn reflect(&self) -> LongDiagram {
        let passages = self
            .passages
            .iter()
            .map(|p| Passage {
                crossing: p.crossing,
                role: match p.role {
                    Role::Over(s) => Role::Over(s.neg()),
                    Role::Under(s) => Role::Under(s.neg()),
                    Role::FlatFirst => Role::FlatSecond,
                    Role::FlatSecond => Role::FlatFirst,
                    other => other,
                },
            })
            .collect();
        LongDiagram { kind: self.kind, passages }
    }

    /// Reversal D*: reverse the arrow and rotate by 180 degrees. The passage
    /// list reverses; roles and signs are kept.
    pub fn reverse(&self) -> LongDiagram {
        let mut passages = self.passages.clone();
        passages.reverse();
        LongDiagram { kind: self.kind, passages }
    }

    pub fn transform(&self, op: Transform) -> LongDiagram {
        match op {
            Transform::Mirror => self.mirror(),
            Transform::Reflect => self.reflect(),
            Transform::Reverse => self.reverse(),
        }
    }

    /// Concatenation product: `self` followed by `other`, with `other`'s
    /// crossing ids relabelled to stay disjoint.
    pub fn concat(&self, other: &LongDiagram) -> Result<LongDiagram> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch(format!(
                "cannot concatenate a {} diagram with a {} diagram",
                self.kind, other.kind
            )));
        }
        let offset = self.max_crossing_id();
        let mut passages = self.passages.clone();
        passages.extend(other.passages.iter().map(|p| Passage {
            crossing: p.crossing + offset,
            role: p.role,
        }));
        Ok(LongDiagram { kind: self.kind, passages })
    }

    /// Turaev's descent map: lift a flat diagram to a virtual one by turning
    /// the first-role passage of each flat crossing into an overcrossing,
    /// with both passages positive.
    pub fn descent(&self) -> Result<LongDiagram> {
        if self.kind != DiagramKind::Flat {
            return Err(Error::KindMismatch(
                "the descent map applies to flat diagrams".into(),
            ));
        }
        let passages = self
            .passages
            .iter()
            .map(|p| Passage {
                crossing: p.crossing,
                role: match p.role {
                    Role::FlatFirst => Role::Over(Sign::Plus),
                    Role::FlatSecond => Role::Under(Sign::Plus),
                    other => other,
                },
            })
            .collect();
        LongDiagram::new(DiagramKind::Virtual, passages)
    }
}

impl fmt::Display for LongDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passages.is_empty() {
            write!(f, "(empty)")
        } else {
            write!(f, "{}", self.render())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transform {
    Mirror,
    Reflect,
    Reverse,
}

impl std::str::FromStr for Transform {
    type Err = Error;
    fn from_str(s: &str) -> Result<Transform> {
        match s {
            "mirror" => Ok(Transform::Mirror),
            "reflect" => Ok(Transform::Reflect),
            "reverse" => Ok(Transform::Reverse),
            _ => Err(Error::UnknownName { kind: "transform", name: s.to_string() }),
        }
    }
}

/// Parse a whitespace-separated passage code such as `O1- V3 O2+ U1- V3 U2+`.
pub fn parse_code(text: &str) -> Result<LongDiagram> {
    let mut passages = Vec::new();
    let mut saw_flat = false;
    let mut saw_classical = false;
    for tok in text.split_whitespace() {
        let mut chars = tok.chars();
        let head = chars.next().unwrap();
        let rest = chars.as_str();
        let (digits, sign) = match head {
            'O' | 'U' => {
                let (d, s) = rest.split_at(rest.len().saturating_sub(1));
                let sign = match s {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    _ => {
                        return Err(Error::CodeParse(format!(
                            "token `{tok}`: classical passages end with + or -"
                        )))
                    }
                };
                (d, Some(sign))
            }
            'V' | 'L' | 'R' => (rest, None),
            _ => return Err(Error::CodeParse(format!("unknown token `{tok}`"))),
        };
        let id: u32 = digits
            .parse()
            .map_err(|_| Error::CodeParse(format!("token `{tok}`: bad crossing id")))?;
        let role = match (head, sign) {
            ('O', Some(s)) => Role::Over(s),
            ('U', Some(s)) => Role::Under(s),
            ('V', None) => Role::VirtualPass,
            ('L', None) => Role::FlatFirst,
            ('R', None) => Role::FlatSecond,
            _ => unreachable!(),
        };
        saw_flat |= role.is_flat();
        saw_classical |= role.is_classical();
        passages.push(Passage { crossing: id, role });
    }
    if saw_flat && saw_classical {
        return Err(Error::CodeParse(
            "a code mixes flat and classical passages".into(),
        ));
    }
    let kind = if saw_flat { DiagramKind::Flat } else { DiagramKind::Virtual };
    LongDiagram::new(kind, passages)
}

/// The fly: two classical crossings, five semi-arcs, trivial closure.
///
/// The passage order (under-passage of the negative crossing first) is
/// calibrated so that the presentation matrix reproduces the reference
/// block pattern `[[-1,B,0,A,0],[0,D,-1,C,0],[0,A,0,B,-1],[0,C,-1,D,0]]`
/// under the crossing relation conventions of the invariants module.
pub const FLY_CODE: &str = "U1- O2+ O1- U2+";

/// The flat fly.
pub const FLAT_FLY_CODE: &str = "L1 L2 R1 R2";

/// A long representative of the virtual trefoil; closing the ends gives the
/// virtual trefoil. Its closure determinant is the palindromic
/// `1 + 2t^2 + t^4` under the Budapest switch, so the t <-> 1/t orientation
/// convention is immaterial here.
pub const VIRTUAL_TREFOIL_CODE: &str = "O1+ O2+ U1+ U2+";

/// The Kishino knot cut open: the concatenation of the fly with its mirror
/// image. Transcribed from the standard two-tangle picture (two clasps,
/// each with trivial closure, related by reflection in the plane) and
/// verified against the published closed-knot determinants: determinant 0
/// and codimension-1 determinant `1 + (5/2)t^2 + t^4` under the Budapest
/// switch.
pub const KISHINO_CODE: &str = "U1- O2+ O1- U2+ O3+ U4- U3+ O4-";

pub const BUILTIN_DIAGRAMS: [&str; 5] =
    ["fly", "flat-fly", "virtual-trefoil-long", "kishino-long", "empty"];

/// Look up a built-in diagram by name.
pub fn builtin_diagram(name: &str) -> Result<LongDiagram> {
    match name {
        "fly" => parse_code(FLY_CODE),
        "flat-fly" => parse_code(FLAT_FLY_CODE),
        "virtual-trefoil-long" => parse_code(VIRTUAL_TREFOIL_CODE),
        "kishino-long" => parse_code(KISHINO_CODE),
        "empty" => Ok(LongDiagram::empty(DiagramKind::Virtual)),
        _ => Err(Error::UnknownName { kind: "diagram", name: name.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for code in [FLY_CODE, FLAT_FLY_CODE, VIRTUAL_TREFOIL_CODE, "O1- V3 O2+ U1- V3 U2+"] {
            let d = parse_code(code).unwrap();
            assert_eq!(parse_code(&d.render()).unwrap(), d);
            assert_eq!(d.render(), code);
        }
    }

    #[test]
    fn fly_shape() {
        let fly = builtin_diagram("fly").unwrap();
        assert_eq!(fly.kind(), DiagramKind::Virtual);
        assert_eq!(fly.crossing_count(), 2);
        assert_eq!(fly.semi_arcs(), 5);
        let flat = builtin_diagram("flat-fly").unwrap();
        assert_eq!(flat.kind(), DiagramKind::Flat);
        assert_eq!(flat.semi_arcs(), 5);
        let empty = builtin_diagram("empty").unwrap();
        assert_eq!(empty.crossing_count(), 0);
        assert_eq!(empty.semi_arcs(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_code("O1+ U1-"), Err(Error::CodeParse(m)) if m.contains("sign")));
        assert!(parse_code("O1+ U1+ O1+ U1+").is_err());
        assert!(parse_code("O1+").is_err());
        assert!(parse_code("Z1").is_err());
        assert!(parse_code("L1 R1 O2+ U2+").is_err());
        assert!(parse_code("O1+ L1").is_err());
    }

    #[test]
    fn virtual_passages_do_not_cut_arcs() {
        let d = parse_code("O1- V3 O2+ U1- V3 U2+").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.semi_arcs(), 5);
        let arcs = d.passage_arcs();
        assert_eq!(arcs[1], (1, 1));
        assert_eq!(arcs[4], (3, 3));
    }

    #[test]
    fn transforms_are_involutions() {
        for code in [FLY_CODE, FLAT_FLY_CODE, "O1- V3 O2+ U1- V3 U2+"] {
            let d = parse_code(code).unwrap();
            for op in [Transform::Mirror, Transform::Reflect, Transform::Reverse] {
                assert_eq!(d.transform(op).transform(op), d, "{op:?} on {code}");
            }
            assert_eq!(
                d.mirror().reflect(),
                d.reflect().mirror(),
                "mirror and reflect commute on {code}"
            );
        }
    }

    #[test]
    fn reflect_flat_fly_swaps_roles() {
        let ff = parse_code(FLAT_FLY_CODE).unwrap();
        assert_eq!(ff.reflect().render(), "R1 R2 L1 L2");
    }

    #[test]
    fn concat_identity_and_relabelling() {
        let fly = builtin_diagram("fly").unwrap();
        let empty = builtin_diagram("empty").unwrap();
        assert_eq!(fly.concat(&empty).unwrap(), fly);
        assert_eq!(empty.concat(&fly).unwrap(), fly);
        let double = fly.concat(&fly).unwrap();
        assert_eq!(double.crossing_count(), 4);
        assert_eq!(double.semi_arcs(), 9);
        assert_eq!(double.render(), "U1- O2+ O1- U2+ U3- O4+ O3- U4+");
        let flat = builtin_diagram("flat-fly").unwrap();
        assert!(fly.concat(&flat).is_err());
    }

    #[test]
    fn concat_is_associative() {
        let f = builtin_diagram("fly").unwrap();
        let g = f.reflect();
        let h = builtin_diagram("virtual-trefoil-long").unwrap();
        let left = f.concat(&g).unwrap().concat(&h).unwrap();
        let right = f.concat(&g.concat(&h).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn descent_of_flat_fly() {
        let ff = builtin_diagram("flat-fly").unwrap();
        let d = ff.descent().unwrap();
        assert_eq!(d.kind(), DiagramKind::Virtual);
        assert_eq!(d.render(), "O1+ O2+ U1+ U2+");
        let fly = builtin_diagram("fly").unwrap();
        assert!(fly.descent().is_err());
    }

    #[test]
    fn kishino_is_fly_concat_mirrored_fly() {
        let fly = builtin_diagram("fly").unwrap();
        let built = fly.concat(&fly.mirror()).unwrap();
        assert_eq!(built, builtin_diagram("kishino-long").unwrap());
    }

    #[test]
    fn reverse_equals_reflect_on_the_fly_up_to_relabelling() {
        // F* = F̄ for the fly: the codes agree after renaming crossings in
        // order of first appearance.
        let fly = builtin_diagram("fly").unwrap();
        let relabel = |d: &LongDiagram| {
            let mut map = BTreeMap::new();
            d.passages()
                .iter()
                .map(|p| {
                    let next = map.len() as u32 + 1;
                    let id = *map.entry(p.crossing).or_insert(next);
                    Passage { crossing: id, role: p.role }
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(relabel(&fly.reverse()), relabel(&fly.reflect()));
    }
}
