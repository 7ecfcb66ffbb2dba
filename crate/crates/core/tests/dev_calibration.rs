//! Temporary calibration scratchpad (deleted once fixtures are frozen).

use longknot::diagram::{builtin_diagram, parse_code};
use longknot::invariants::invariant_profile;
use longknot::ring::UnitMode;
use longknot::switch::builtin_switch;

#[test]
#[ignore]
fn calibrate() {
    let budapest = builtin_switch("budapest").unwrap();
    let weyl = builtin_switch("weyl-q").unwrap();
    let flat = builtin_switch("flat-weyl").unwrap();

    let fly = builtin_diagram("fly").unwrap();
    println!("== budapest fly (r<=2) ==");
    let p = invariant_profile(&fly, &budapest, 2, UnitMode::Field).unwrap();
    print!("{p}");

    println!("== weyl-q table ==");
    for (label, d) in [
        ("F", fly.clone()),
        ("-F", fly.mirror()),
        ("Fbar", fly.reflect()),
        ("-Fbar", fly.mirror().reflect()),
    ] {
        let p = invariant_profile(&d, &weyl, 0, UnitMode::Field).unwrap();
        println!("--- {label}: {}", d.render());
        print!("{p}");
    }

    println!("== flat fly table ==");
    let ff = builtin_diagram("flat-fly").unwrap();
    for (label, d) in [
        ("FF", ff.clone()),
        ("FFbar", ff.reflect()),
        ("d(FF)", ff.descent().unwrap()),
        ("d(FFbar)", ff.reflect().descent().unwrap()),
    ] {
        let p = invariant_profile(&d, &flat, 0, UnitMode::Field).unwrap();
        println!("--- {label}: {}", d.render());
        print!("{p}");
    }

    println!("== virtual trefoil ==");
    let vt = builtin_diagram("virtual-trefoil-long").unwrap();
    let p = invariant_profile(&vt, &budapest, 1, UnitMode::Field).unwrap();
    print!("{p}");
    println!("-- reversed --");
    let p = invariant_profile(&vt.reverse(), &budapest, 0, UnitMode::Field).unwrap();
    print!("{p}");

    println!("== kishino candidate (F . Fbar) ==");
    let kish = builtin_diagram("kishino-long").unwrap();
    let p = invariant_profile(&kish, &budapest, 1, UnitMode::Field).unwrap();
    print!("{p}");

    println!("== concat values (budapest) ==");
    let ffbar = fly.concat(&fly.reflect()).unwrap();
    let fbarf = fly.reflect().concat(&fly).unwrap();
    for (label, d) in [("F.Fbar", &ffbar), ("Fbar.F", &fbarf)] {
        for mode in [UnitMode::Field, UnitMode::GaussianIntegerContent] {
            let pm = longknot::invariants::build_presentation(
                d,
                &budapest,
                longknot::invariants::Variant::M,
            )
            .unwrap();
            let v = pm.codim_det(0, mode).unwrap();
            println!(
                "{label} p^(0) [{mode}] = {v}   (content {})",
                v.content()
            );
        }
    }

    println!("== detour/r3 fixtures under budapest ==");
    let (a, b) = longknot::diagram::r3_fixture();
    let pa = invariant_profile(&a, &budapest, 0, UnitMode::Field).unwrap();
    let pb = invariant_profile(&b, &budapest, 0, UnitMode::Field).unwrap();
    println!("r3 equal: {}", pa.values_equal(&pb));
    print!("{pa}");
    print!("{pb}");
    let _ = parse_code;
}

#[test]
#[ignore]
fn fuzz_smoke() {
    use longknot::diagram::{perturb_many, DiagramKind};
    use longknot::switch::SwitchKind;
    for sw_name in longknot::switch::BUILTIN_SWITCHES {
        let sw = builtin_switch(sw_name).unwrap();
        for d_name in longknot::diagram::BUILTIN_DIAGRAMS {
            let d = builtin_diagram(d_name).unwrap();
            if d.kind() == DiagramKind::Flat && sw.kind() != SwitchKind::Flat {
                continue;
            }
            let base = invariant_profile(&d, &sw, 0, UnitMode::Field).unwrap();
            for seed in 0..20u64 {
                let moved = perturb_many(&d, 4, seed).unwrap();
                let p = invariant_profile(&moved, &sw, 0, UnitMode::Field).unwrap();
                if !base.values_equal(&p) {
                    let mm = base.first_mismatch(&p);
                    panic!(
                        "MISMATCH {sw_name}/{d_name} seed {seed} at {mm:?}\nbase:\n{base}\nmoved {}:\n{p}",
                        moved.render()
                    );
                }
            }
            println!("ok: {sw_name} x {d_name}");
        }
    }
}

fn all_two_crossing_tangles() -> Vec<longknot::diagram::LongDiagram> {
    let mut out = Vec::new();
    for mask in 0u8..16 {
        if mask.count_ones() != 2 {
            continue;
        }
        for bits in 0u8..16 {
            let o1_first = bits & 1 != 0;
            let s1 = if bits & 2 != 0 { "+" } else { "-" };
            let o2_first = bits & 4 != 0;
            let s2 = if bits & 8 != 0 { "+" } else { "-" };
            let mut toks = Vec::new();
            let mut seen1 = false;
            let mut seen2 = false;
            for slot in 0..4 {
                if mask & (1 << slot) != 0 {
                    let head = if !seen1 == o1_first { "O" } else { "U" };
                    seen1 = true;
                    toks.push(format!("{head}1{s1}"));
                } else {
                    let head = if !seen2 == o2_first { "O" } else { "U" };
                    seen2 = true;
                    toks.push(format!("{head}2{s2}"));
                }
            }
            out.push(parse_code(&toks.join(" ")).unwrap());
        }
    }
    out
}

fn kishino_search() {
    use longknot::invariants::{build_presentation, Variant};
    let budapest = builtin_switch("budapest").unwrap();
    let ring = budapest.ring();
    let target = longknot::ring::canonicalize(
        &longknot::ring::parse_poly("t^4 + 5/2*t^2 + 1", ring).unwrap(),
        UnitMode::Field,
    );
    let tangles = all_two_crossing_tangles();
    println!("== kishino search over {} x {} concats ==", tangles.len(), tangles.len());
    let mut hits = 0;
    for (i, t1) in tangles.iter().enumerate() {
        for t2 in &tangles {
            let k = t1.concat(t2).unwrap();
            let mhat = build_presentation(&k, &budapest, Variant::MHat).unwrap();
            let p0 = mhat.codim_det(0, UnitMode::Field).unwrap();
            if !p0.is_zero() {
                continue;
            }
            let p1 = mhat.codim_det(1, UnitMode::Field).unwrap();
            if p1.canonical() == target.canonical() {
                println!("HIT: {}", k.render());
                hits += 1;
                if hits > 40 {
                    println!("(more hits suppressed)");
                    return;
                }
            }
        }
        if i % 16 == 0 {
            eprintln!("...row {i}, hits so far {hits}");
        }
    }
    println!("total hits: {hits}");
}
