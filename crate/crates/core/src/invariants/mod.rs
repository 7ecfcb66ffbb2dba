//! Presentation matrices of the four invariant modules of a long knot, and
//! their codimension-r determinant invariants.
//!
//! Every classical or flat crossing contributes two block rows over the
//! semi-arc generators x0..xn. A positive crossing with incoming over-arc
//! x_i and under-arc x_j (outgoing x_{i+1}, x_{j+1}) imposes
//!
//! ```text
//! x_{j+1} = A x_i + B x_j        x_{i+1} = C x_i + D x_j
//! ```
//!
//! and a negative crossing imposes the inverse relation, with S applied to
//! the outgoing pair. Flat crossings use the positive form with the
//! first-role passage in the over position. The four variants differ by one
//! appended row: none (M), x0 = xn (Mhat), x0 = 0 (Mo), xn = 0 (Mn).

mod codim;
mod profile;

pub use codim::block_determinant;
pub use profile::{
    check_product_formula, check_theorem_4_2, invariant_profile, InvariantProfile,
    ProductFormulaReport, Theorem42Report, Theorem42Row,
};

use std::fmt;
use std::sync::Arc;

use crate::diagram::{Crossing, DiagramKind, LongDiagram};
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{Coefficient, LaurentPoly};
use crate::switch::{Switch, SwitchKind};

/// The four module variants.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Variant {
    M,
    MHat,
    MO,
    MN,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::M, Variant::MHat, Variant::MO, Variant::MN];

    /// Label of the associated determinant family: p, phat, po, pn.
    pub fn family(self) -> &'static str {
        match self {
            Variant::M => "p",
            Variant::MHat => "phat",
            Variant::MO => "po",
            Variant::MN => "pn",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::M => write!(f, "M"),
            Variant::MHat => write!(f, "Mhat"),
            Variant::MO => write!(f, "Mo"),
            Variant::MN => write!(f, "Mn"),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "M" | "p" => Ok(Variant::M),
            "Mhat" | "phat" => Ok(Variant::MHat),
            "Mo" | "po" => Ok(Variant::MO),
            "Mn" | "pn" => Ok(Variant::MN),
            _ => Err(Error::UnknownName { kind: "variant", name: s.to_string() }),
        }
    }
}

/// A formal integer combination of 1, A, B, C, D — one block entry of a
/// presentation matrix before representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct BlockExpr {
    pub one: i32,
    pub a: i32,
    pub b: i32,
    pub c: i32,
    pub d: i32,
}

impl BlockExpr {
    pub const ZERO: BlockExpr = BlockExpr { one: 0, a: 0, b: 0, c: 0, d: 0 };
    pub const ONE: BlockExpr = BlockExpr { one: 1, ..BlockExpr::ZERO };
    pub const MINUS_ONE: BlockExpr = BlockExpr { one: -1, ..BlockExpr::ZERO };
    pub const A: BlockExpr = BlockExpr { a: 1, ..BlockExpr::ZERO };
    pub const B: BlockExpr = BlockExpr { b: 1, ..BlockExpr::ZERO };
    pub const C: BlockExpr = BlockExpr { c: 1, ..BlockExpr::ZERO };
    pub const D: BlockExpr = BlockExpr { d: 1, ..BlockExpr::ZERO };

    pub fn is_zero(self) -> bool {
        self == BlockExpr::ZERO
    }

    pub fn add(self, other: BlockExpr) -> BlockExpr {
        BlockExpr {
            one: self.one + other.one,
            a: self.a + other.a,
            b: self.b + other.b,
            c: self.c + other.c,
            d: self.d + other.d,
        }
    }

    /// The represented d x d matrix over the switch's ring.
    pub fn represent(self, sw: &Switch) -> RingMatrix {
        let ring = sw.ring();
        let n = sw.block_size();
        let mut acc = RingMatrix::zero(ring, n, n);
        let terms: [(i32, Option<&RingMatrix>); 5] = [
            (self.one, None),
            (self.a, Some(sw.a())),
            (self.b, Some(sw.b())),
            (self.c, Some(sw.c())),
            (self.d, Some(sw.d())),
        ];
        for (k, m) in terms {
            if k == 0 {
                continue;
            }
            let coeff = Coefficient::from_int(ring.domain, k as i64);
            let scaled = match m {
                Some(m) => m.scale(&coeff),
                None => RingMatrix::identity(ring, n).scale(&coeff),
            };
            acc = acc.add(&scaled).expect("same shape");
        }
        acc
    }
}

impl std::str::FromStr for BlockExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<BlockExpr> {
        match s {
            "0" => Ok(BlockExpr::ZERO),
            "1" => Ok(BlockExpr::ONE),
            "-1" => Ok(BlockExpr::MINUS_ONE),
            "A" => Ok(BlockExpr::A),
            "B" => Ok(BlockExpr::B),
            "C" => Ok(BlockExpr::C),
            "D" => Ok(BlockExpr::D),
            _ => Err(Error::UnknownName { kind: "block symbol", name: s.to_string() }),
        }
    }
}

impl fmt::Display for BlockExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, name) in [
            (self.a, "A"),
            (self.b, "B"),
            (self.c, "C"),
            (self.d, "D"),
            (self.one, "1"),
        ] {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = k.abs();
            if mag == 1 && name != "1" {
                write!(f, "{sign}{name}")?;
            } else if name == "1" {
                write!(f, "{sign}{mag}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A grid of block entries over one switch.
#[derive(Clone, Debug)]
pub struct BlockGrid {
    rows: usize,
    cols: usize,
    blocks: Vec<BlockExpr>,
    switch: Arc<Switch>,
}

impl BlockGrid {
    fn zeroed(rows: usize, cols: usize, switch: Arc<Switch>) -> BlockGrid {
        BlockGrid { rows, cols, blocks: vec![BlockExpr::ZERO; rows * cols], switch }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn switch(&self) -> &Switch {
        &self.switch
    }

    pub fn block(&self, i: usize, j: usize) -> BlockExpr {
        self.blocks[i * self.cols + j]
    }

    fn add_to(&mut self, i: usize, j: usize, e: BlockExpr) {
        let cur = self.blocks[i * self.cols + j];
        self.blocks[i * self.cols + j] = cur.add(e);
    }

    /// The fully represented Λ-matrix, `d*rows x d*cols`.
    pub fn to_ring_matrix(&self) -> RingMatrix {
        let d = self.switch.block_size();
        let reps: Vec<RingMatrix> =
            self.blocks.iter().map(|b| b.represent(&self.switch)).collect();
        let refs: Vec<Vec<&RingMatrix>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &reps[i * self.cols + j]).collect())
            .collect();
        if self.rows == 0 || self.cols == 0 {
            return RingMatrix::zero(self.switch.ring(), self.rows * d, self.cols * d);
        }
        RingMatrix::from_blocks(&refs)
    }
}

/// A presentation matrix of one of the four modules, kept at block level.
#[derive(Clone, Debug)]
pub struct PresentationMatrix {
    variant: Variant,
    grid: BlockGrid,
    diagram_code: String,
}

impl PresentationMatrix {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn grid(&self) -> &BlockGrid {
        &self.grid
    }

    pub fn block_rows(&self) -> usize {
        self.grid.rows
    }

    pub fn block_cols(&self) -> usize {
        self.grid.cols
    }

    pub fn switch(&self) -> &Switch {
        self.grid.switch()
    }

    pub fn diagram_code(&self) -> &str {
        &self.diagram_code
    }

    /// True iff the block grid equals the given symbolic pattern, cells
    /// drawn from `0, 1, -1, A, B, C, D`.
    pub fn matches_pattern(&self, pattern: &[&[&str]]) -> bool {
        if pattern.len() != self.grid.rows {
            return false;
        }
        for (i, row) in pattern.iter().enumerate() {
            if row.len() != self.grid.cols {
                return false;
            }
            for (j, cell) in row.iter().enumerate() {
                match cell.parse::<BlockExpr>() {
                    Ok(e) => {
                        if e != self.grid.block(i, j) {
                            return false;
                        }
                    }
                    Err(_) => return false,
                }
            }
        }
        true
    }

    /// Exact determinant of the represented matrix when square (codimension
    /// zero of a square variant).
    pub fn full_determinant(&self) -> Result<LaurentPoly> {
        codim::grid_determinant_fast(&self.grid, None, None)
    }
}

impl fmt::Display for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<Vec<String>> = (0..self.grid.rows)
            .map(|i| (0..self.grid.cols).map(|j| self.grid.block(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.grid.cols)
            .map(|j| rendered.iter().map(|r| r[j].len()).max().unwrap_or(1))
            .collect();
        for row in &rendered {
            write!(f, "[ ")?;
            for (j, cell) in row.iter().enumerate() {
                write!(f, "{cell:>w$}", w = widths[j])?;
                if j + 1 < self.grid.cols {
                    write!(f, " ")?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// Build the presentation matrix of `variant` for `diagram` under `switch`.
pub fn build_presentation(
    diagram: &LongDiagram,
    switch: &Switch,
    variant: Variant,
) -> Result<PresentationMatrix> {
    if diagram.kind() == DiagramKind::Flat && switch.kind() != SwitchKind::Flat {
        return Err(Error::KindMismatch(format!(
            "flat diagrams require a flat switch; `{}` is {}",
            switch.name(),
            switch.kind()
        )));
    }
    let crossings = diagram.crossings();
    let arcs = diagram.passage_arcs();
    let gens = diagram.semi_arcs();
    let relation_rows = 2 * crossings.len();
    // The closure row is appended even on a crossingless diagram, where
    // x0 = xn degenerates to a zero row: every closed unknot diagram with a
    // crossing has vanishing closure determinant, so invariance under
    // Reidemeister moves pins the crossingless value to 0 as well.
    let extra = match variant {
        Variant::M => 0,
        Variant::MHat | Variant::MO | Variant::MN => 1,
    };
    let mut grid = BlockGrid::zeroed(
        relation_rows + extra,
        gens,
        Arc::new(switch.clone()),
    );
    for (ci, crossing) in crossings.iter().enumerate() {
        let (row1, row2) = (2 * ci, 2 * ci + 1);
        match *crossing {
            Crossing::Classical { sign, over_pos, under_pos, .. } => {
                let (over_in, over_out) = arcs[over_pos];
                let (under_in, under_out) = arcs[under_pos];
                match sign {
                    crate::diagram::Sign::Plus => {
                        grid.add_to(row1, over_in, BlockExpr::A);
                        grid.add_to(row1, under_in, BlockExpr::B);
                        grid.add_to(row1, under_out, BlockExpr::MINUS_ONE);
                        grid.add_to(row2, over_in, BlockExpr::C);
                        grid.add_to(row2, under_in, BlockExpr::D);
                        grid.add_to(row2, over_out, BlockExpr::MINUS_ONE);
                    }
                    crate::diagram::Sign::Minus => {
                        grid.add_to(row1, over_out, BlockExpr::A);
                        grid.add_to(row1, under_out, BlockExpr::B);
                        grid.add_to(row1, under_in, BlockExpr::MINUS_ONE);
                        grid.add_to(row2, over_out, BlockExpr::C);
                        grid.add_to(row2, under_out, BlockExpr::D);
                        grid.add_to(row2, over_in, BlockExpr::MINUS_ONE);
                    }
                }
            }
            Crossing::Flat { first_pos, second_pos, .. } => {
                let (over_in, over_out) = arcs[first_pos];
                let (under_in, under_out) = arcs[second_pos];
                grid.add_to(row1, over_in, BlockExpr::A);
                grid.add_to(row1, under_in, BlockExpr::B);
                grid.add_to(row1, under_out, BlockExpr::MINUS_ONE);
                grid.add_to(row2, over_in, BlockExpr::C);
                grid.add_to(row2, under_in, BlockExpr::D);
                grid.add_to(row2, over_out, BlockExpr::MINUS_ONE);
            }
        }
    }
    if extra == 1 {
        let last_row = relation_rows;
        match variant {
            Variant::MHat => {
                // cancels to the zero row when gens == 1
                grid.add_to(last_row, 0, BlockExpr::ONE);
                grid.add_to(last_row, gens - 1, BlockExpr::MINUS_ONE);
            }
            Variant::MO => grid.add_to(last_row, 0, BlockExpr::ONE),
            Variant::MN => grid.add_to(last_row, gens - 1, BlockExpr::ONE),
            Variant::M => unreachable!(),
        }
    }
    Ok(PresentationMatrix {
        variant,
        grid,
        diagram_code: diagram.render(),
    })
}

/// The presentation of the closed diagram: identify x0 with xn by folding
/// the last generator column of the plain presentation into the first.
pub fn closed_presentation(diagram: &LongDiagram, switch: &Switch) -> Result<PresentationMatrix> {
    let m = build_presentation(diagram, switch, Variant::M)?;
    let rows = m.grid.rows;
    let cols = m.grid.cols;
    if cols == 1 {
        return Ok(m);
    }
    let mut grid = BlockGrid::zeroed(rows, cols - 1, m.grid.switch.clone());
    for i in 0..rows {
        for j in 0..cols - 1 {
            grid.add_to(i, j, m.grid.block(i, j));
        }
        grid.add_to(i, 0, m.grid.block(i, cols - 1));
    }
    Ok(PresentationMatrix {
        variant: Variant::MHat,
        grid,
        diagram_code: m.diagram_code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin_diagram;
    use crate::switch::{budapest, flat_weyl};

    #[test]
    fn fly_block_patterns_match_reference() {
        let fly = builtin_diagram("fly").unwrap();
        let sw = budapest().unwrap();
        let m = build_presentation(&fly, &sw, Variant::M).unwrap();
        assert!(m.matches_pattern(&[
            &["-1", "B", "0", "A", "0"],
            &["0", "D", "-1", "C", "0"],
            &["0", "A", "0", "B", "-1"],
            &["0", "C", "-1", "D", "0"],
        ]));
        let mhat = build_presentation(&fly, &sw, Variant::MHat).unwrap();
        assert!(mhat.matches_pattern(&[
            &["-1", "B", "0", "A", "0"],
            &["0", "D", "-1", "C", "0"],
            &["0", "A", "0", "B", "-1"],
            &["0", "C", "-1", "D", "0"],
            &["1", "0", "0", "0", "-1"],
        ]));
        let mo = build_presentation(&fly, &sw, Variant::MO).unwrap();
        assert!(mo.matches_pattern(&[
            &["-1", "B", "0", "A", "0"],
            &["0", "D", "-1", "C", "0"],
            &["0", "A", "0", "B", "-1"],
            &["0", "C", "-1", "D", "0"],
            &["1", "0", "0", "0", "0"],
        ]));
        let mn = build_presentation(&fly, &sw, Variant::MN).unwrap();
        assert!(mn.matches_pattern(&[
            &["-1", "B", "0", "A", "0"],
            &["0", "D", "-1", "C", "0"],
            &["0", "A", "0", "B", "-1"],
            &["0", "C", "-1", "D", "0"],
            &["0", "0", "0", "0", "1"],
        ]));
    }

    #[test]
    fn empty_diagram_presentations() {
        let empty = builtin_diagram("empty").unwrap();
        let sw = budapest().unwrap();
        let m = build_presentation(&empty, &sw, Variant::M).unwrap();
        assert_eq!((m.block_rows(), m.block_cols()), (0, 1));
        // the closure relation x0 = x0 degenerates to the zero row
        let mhat = build_presentation(&empty, &sw, Variant::MHat).unwrap();
        assert_eq!((mhat.block_rows(), mhat.block_cols()), (1, 1));
        assert_eq!(mhat.grid().block(0, 0), BlockExpr::ZERO);
        let mo = build_presentation(&empty, &sw, Variant::MO).unwrap();
        assert_eq!((mo.block_rows(), mo.block_cols()), (1, 1));
        assert_eq!(mo.grid().block(0, 0), BlockExpr::ONE);
    }

    #[test]
    fn kind_mismatch_rejected() {
        let ff = builtin_diagram("flat-fly").unwrap();
        let sw = budapest().unwrap();
        assert!(matches!(
            build_presentation(&ff, &sw, Variant::M),
            Err(Error::KindMismatch(_))
        ));
        // a flat switch works on virtual diagrams
        let fly = builtin_diagram("fly").unwrap();
        let flat = flat_weyl().unwrap();
        assert!(build_presentation(&fly, &flat, Variant::M).is_ok());
    }

    #[test]
    fn descent_of_flat_fly_has_identical_presentation() {
        let ff = builtin_diagram("flat-fly").unwrap();
        let sw = flat_weyl().unwrap();
        let flat = build_presentation(&ff, &sw, Variant::M).unwrap();
        let lifted = build_presentation(&ff.descent().unwrap(), &sw, Variant::M).unwrap();
        assert_eq!(flat.grid().blocks, lifted.grid().blocks);
    }
}
