//! Temporary: isolate which single move breaks p^(0) invariance.

use longknot::diagram::{builtin_diagram, perturb, Move, Sign};
use longknot::invariants::{build_presentation, Variant};
use longknot::ring::UnitMode;
use longknot::switch::builtin_switch;

#[test]
#[ignore]
fn isolate() {
    let sw = builtin_switch("budapest").unwrap();
    let base = builtin_diagram("kishino-long").unwrap();
    let p0 = |d: &longknot::diagram::LongDiagram| {
        build_presentation(d, &sw, Variant::M)
            .unwrap()
            .codim_det(0, UnitMode::Field)
            .unwrap()
    };
    let reference = p0(&base);
    println!("base p0 = {reference}");
    let len = base.passages().len();
    for pos in 0..=len {
        for over_first in [true, false] {
            for sign in [Sign::Plus, Sign::Minus] {
                let mv = Move::R1 { pos, over_first, sign };
                let got = p0(&perturb(&base, mv).unwrap());
                if got != reference {
                    println!("R1 breaks: {mv:?} -> {got}");
                }
            }
        }
    }
    for a in 0..=len {
        for b in 0..=len {
            for sign in [Sign::Plus, Sign::Minus] {
                let mv = Move::R2 { over_pos: a, under_pos: b, sign };
                let got = p0(&perturb(&base, mv).unwrap());
                if got != reference {
                    println!("R2 breaks: {mv:?} -> {got}");
                }
            }
            let mv = Move::V2 { pos_a: a, pos_b: b };
            let got = p0(&perturb(&base, mv).unwrap());
            if got != reference {
                println!("V2 breaks: {mv:?} -> {got}");
            }
        }
    }
    for pos in 0..=len {
        let mv = Move::V1 { pos };
        let got = p0(&perturb(&base, mv).unwrap());
        if got != reference {
            println!("V1 breaks: {mv:?} -> {got}");
        }
    }
    println!("done");
}
