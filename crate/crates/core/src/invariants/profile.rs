//! Invariant profiles and the structural theorem checks: closure
//! consistency by construction, divisibility of the one-ended determinants
//! by the plain one, and the concatenation product formula.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::LongDiagram;
use crate::error::Result;
use crate::ring::{canonicalize, laurent_divides, UnitMode, UnitNormalForm};
use crate::switch::Switch;

use super::{build_presentation, Variant};

/// The canonical codimension-r determinants of all four variants,
/// r = 0..=r_max. Profile equality is canonical-form equality entrywise.
#[derive(Clone, Debug)]
pub struct InvariantProfile {
    switch_name: String,
    diagram_code: String,
    mode: UnitMode,
    r_max: u32,
    values: BTreeMap<(Variant, u32), UnitNormalForm>,
}

impl InvariantProfile {
    pub fn switch_name(&self) -> &str {
        &self.switch_name
    }

    pub fn diagram_code(&self) -> &str {
        &self.diagram_code
    }

    pub fn mode(&self) -> UnitMode {
        self.mode
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub fn value(&self, variant: Variant, r: u32) -> &UnitNormalForm {
        &self.values[&(variant, r)]
    }

    pub fn values(&self) -> impl Iterator<Item = (&(Variant, u32), &UnitNormalForm)> {
        self.values.iter()
    }

    /// Canonical equality of all entries (the diagrams and switch names may
    /// differ; this is the invariance comparison).
    pub fn values_equal(&self, other: &InvariantProfile) -> bool {
        self.first_mismatch(other).is_none()
    }

    pub fn first_mismatch(&self, other: &InvariantProfile) -> Option<(Variant, u32)> {
        if self.mode != other.mode || self.r_max != other.r_max {
            return Some((Variant::M, 0));
        }
        for (key, v) in &self.values {
            if other.values.get(key) != Some(v) {
                return Some(*key);
            }
        }
        None
    }
}

impl fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((variant, r), v) in &self.values {
            writeln!(f, "{}^({r}) = {v}", variant.family())?;
        }
        Ok(())
    }
}

/// Compute the codimension determinants of all four variants for
/// r = 0..=r_max.
pub fn invariant_profile(
    diagram: &LongDiagram,
    switch: &Switch,
    r_max: u32,
    mode: UnitMode,
) -> Result<InvariantProfile> {
    let mut values = BTreeMap::new();
    for variant in Variant::ALL {
        let p = build_presentation(diagram, switch, variant)?;
        for r in 0..=r_max {
            values.insert((variant, r), p.codim_det(r, mode)?);
        }
    }
    Ok(InvariantProfile {
        switch_name: switch.name().to_string(),
        diagram_code: diagram.render(),
        mode,
        r_max,
        values,
    })
}

#[derive(Clone, Debug)]
pub struct Theorem42Row {
    pub r: u32,
    pub p: UnitNormalForm,
    pub po: UnitNormalForm,
    pub pn: UnitNormalForm,
    pub divides_po: bool,
    pub divides_pn: bool,
}

/// Per-codimension divisibility report: `p^(r)` divides both one-ended
/// determinants. The closed-knot sequence needs no check of its own: the
/// Mhat presentation *is* the closed-knot presentation by construction.
#[derive(Clone, Debug)]
pub struct Theorem42Report {
    pub switch_name: String,
    pub diagram_code: String,
    pub rows: Vec<Theorem42Row>,
}

impl Theorem42Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|row| row.divides_po && row.divides_pn)
    }
}

impl fmt::Display for Theorem42Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "closure: phat is the closed-knot sequence by construction (pass)"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "r={}: p={} | po={} ({}) | pn={} ({})",
                row.r,
                row.p,
                row.po,
                if row.divides_po { "divides: pass" } else { "divides: FAIL" },
                row.pn,
                if row.divides_pn { "divides: pass" } else { "divides: FAIL" },
            )?;
        }
        Ok(())
    }
}

/// Check that `p^(r)` divides the one-ended determinants for r = 0..=r_max.
/// Zero divides only zero.
pub fn check_theorem_4_2(
    diagram: &LongDiagram,
    switch: &Switch,
    r_max: u32,
    mode: UnitMode,
) -> Result<Theorem42Report> {
    let m = build_presentation(diagram, switch, Variant::M)?;
    let mo = build_presentation(diagram, switch, Variant::MO)?;
    let mn = build_presentation(diagram, switch, Variant::MN)?;
    let mut rows = Vec::new();
    for r in 0..=r_max {
        let p = m.codim_det(r, mode)?;
        let po = mo.codim_det(r, mode)?;
        let pn = mn.codim_det(r, mode)?;
        rows.push(Theorem42Row {
            r,
            divides_po: laurent_divides(p.canonical(), po.canonical()),
            divides_pn: laurent_divides(p.canonical(), pn.canonical()),
            p,
            po,
            pn,
        });
    }
    Ok(Theorem42Report {
        switch_name: switch.name().to_string(),
        diagram_code: diagram.render(),
        rows,
    })
}

/// The product-formula check at codimension zero: the one-ended
/// determinants of a concatenation factor as the product of the factors'.
#[derive(Clone, Debug)]
pub struct ProductFormulaReport {
    pub concat_code: String,
    pub po_product: UnitNormalForm,
    pub po_of_concat: UnitNormalForm,
    pub pn_product: UnitNormalForm,
    pub pn_of_concat: UnitNormalForm,
    pub holds_po: bool,
    pub holds_pn: bool,
}

impl ProductFormulaReport {
    pub fn holds(&self) -> bool {
        self.holds_po && self.holds_pn
    }
}

impl fmt::Display for ProductFormulaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "concatenation: {}", self.concat_code)?;
        writeln!(
            f,
            "po^(0): product {} vs concat {} ({})",
            self.po_product,
            self.po_of_concat,
            if self.holds_po { "pass" } else { "FAIL" }
        )?;
        writeln!(
            f,
            "pn^(0): product {} vs concat {} ({})",
            self.pn_product,
            self.pn_of_concat,
            if self.holds_pn { "pass" } else { "FAIL" }
        )
    }
}

/// Check `po^(0)(K1 · K2) = po^(0)(K1) po^(0)(K2)` (and likewise for pn),
/// up to units.
pub fn check_product_formula(
    k1: &LongDiagram,
    k2: &LongDiagram,
    switch: &Switch,
    mode: UnitMode,
) -> Result<ProductFormulaReport> {
    let product = k1.concat(k2)?;
    let value = |d: &LongDiagram, v: Variant| -> Result<UnitNormalForm> {
        build_presentation(d, switch, v)?.codim_det(0, mode)
    };
    let po1 = value(k1, Variant::MO)?;
    let po2 = value(k2, Variant::MO)?;
    let pn1 = value(k1, Variant::MN)?;
    let pn2 = value(k2, Variant::MN)?;
    let po_concat = value(&product, Variant::MO)?;
    let pn_concat = value(&product, Variant::MN)?;
    let po_product = canonicalize(&po1.canonical().try_mul(po2.canonical())?, mode);
    let pn_product = canonicalize(&pn1.canonical().try_mul(pn2.canonical())?, mode);
    Ok(ProductFormulaReport {
        concat_code: product.render(),
        holds_po: po_product == po_concat,
        holds_pn: pn_product == pn_concat,
        po_product,
        po_of_concat: po_concat,
        pn_product,
        pn_of_concat: pn_concat,
    })
}
