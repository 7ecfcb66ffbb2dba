//! Temporary content-mode investigation (deleted once frozen).

use longknot::diagram::builtin_diagram;
use longknot::invariants::{build_presentation, Variant};
use longknot::matrix::{DetAlgorithm, RingMatrix};
use longknot::ring::{canonicalize, UnitMode};
use longknot::switch::builtin_switch;

#[test]
#[ignore]
fn inspect_contents() {
    let budapest = builtin_switch("budapest").unwrap();
    let fly = builtin_diagram("fly").unwrap();
    for (label, d) in [
        ("F.mirrorF... wait F.Fbar", fly.concat(&fly.reflect()).unwrap()),
        ("Fbar.F", fly.reflect().concat(&fly).unwrap()),
    ] {
        println!("== {label}: {}", d.render());
        let m = build_presentation(&d, &budapest, Variant::M).unwrap();
        let grid = m.grid();
        let full = grid.to_ring_matrix();
        let rows = grid.rows();
        let cols = grid.cols();
        let dd = budapest.block_size();
        for drop_col in 0..cols {
            // assemble Λ-submatrix dropping block column drop_col
            let keep: Vec<usize> = (0..cols).filter(|&j| j != drop_col).collect();
            let sub = RingMatrix::from_fn(
                full.ring(),
                rows * dd,
                keep.len() * dd,
                |i, j| full.entry(i, keep[j / dd] * dd + j % dd).clone(),
            );
            let det = sub.determinant(DetAlgorithm::Bareiss).unwrap();
            let u = canonicalize(&det, UnitMode::GaussianIntegerContent);
            println!(
                "drop col {drop_col}: content {}  primitive-lead {}  zero={} det={}",
                u.content(),
                u.primitive()
                    .leading()
                    .map(|(_, c)| c.to_string())
                    .unwrap_or_default(),
                det.is_zero(),
                u
            );
        }
        // fast-path agreement
        let fast0 = m.codim_det(0, UnitMode::GaussianIntegerContent).unwrap();
        let slow0 = m
            .codim_det_with(0, UnitMode::GaussianIntegerContent, DetAlgorithm::Bareiss)
            .unwrap();
        println!("fast == bareiss: {}", fast0 == slow0);
        println!("codim0 [content mode] = {} (content {})", fast0, fast0.content());
    }
}
