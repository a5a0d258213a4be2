//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use swallowtail_core::classifier::{
    classify_form, complete_transversal, is_determined, mather_path_check, reduce_1jet, versality_check, Jet1,
    NormalForm, Orbit, TableSamples, Variant, DEFAULT_MAX_ORDER,
};
use swallowtail_core::discriminants::{
    boundary_singularity_type, build_family, bundled_golden, discriminant, generic_samples, singular_locus,
    verify_discriminants, SingularCurve, Which,
};
use swallowtail_core::poly::{parse_poly, VarContext};
use swallowtail_core::swallowtail::{plane_position_of, tangential_contact, target_context, Contact, PlanePosition};
use swallowtail_core::{classifier, QPoly, Rational, Status, Swallowtail};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn poly(src: &str) -> QPoly {
    parse_poly(&target_context(), src).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

const A_SAMPLES: [(i64, i64); 4] = [(1, 1), (-1, 1), (1, 18), (2, 1)];
const B_SAMPLES: [(i64, i64); 2] = [(1, 1), (-1, 3)];

/// Every normal form of the table at the criterion's sample moduli, with its
/// row number.
fn table_forms() -> Vec<(usize, NormalForm)> {
    let mut out = vec![(1, NormalForm::u(1)), (1, NormalForm::u(-1))];
    for &(n, d) in &A_SAMPLES {
        out.push((2, NormalForm::v(1, q(n, d))));
        out.push((3, NormalForm::v(2, q(n, d))));
        for s in [1, -1] {
            for &(bn, bd) in &B_SAMPLES {
                out.push((4, NormalForm::w(s, q(n, d), q(bn, bd))));
            }
        }
    }
    out
}

fn parametrisation_identity() -> Outcome {
    // h and f typed in independently of the library constants.
    let h = poly("16*u^4*w - 4*u^3*v^2 - 128*u^2*w^2 + 144*u*v^2*w - 27*v^4 + 256*w^3");
    let xy = VarContext::new(["x", "y"]).unwrap();
    let f = ["x", "-4*y^3 - 2*x*y", "3*y^4 + x*y^2"].map(|s| parse_poly(&xy, s).unwrap());
    let direct = h.compose(&f).unwrap();
    let st = Swallowtail::<Rational>::standard();
    ensure(direct.is_zero(), format!("h∘f = {direct}"))?;
    ensure(st.implicit == h, "library h differs")?;
    ensure(st.parametrisation_residual().is_zero(), "library residual nonzero")?;
    Ok("h∘f = 0".into())
}

fn tangency() -> Outcome {
    let st = Swallowtail::<Rational>::standard();
    let mut quotients = Vec::new();
    for th in &st.thetas {
        let image = th.apply(&st.implicit).unwrap();
        let quo = image
            .exact_divide(&st.implicit)
            .unwrap()
            .ok_or_else(|| format!("θ·h = {image} not divisible by h"))?;
        quotients.push(quo);
    }
    ensure(
        quotients[0] == QPoly::constant(&st.target, q(12, 1)),
        format!("θ₁·h / h = {}", quotients[0]),
    )?;
    Ok(format!(
        "quotients {}",
        quotients.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
    ))
}

fn one_jet_orbits() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a11_0a11);
    let coeff = |rng: &mut ChaCha8Rng| -> Rational {
        if rng.gen_bool(0.35) {
            q(0, 1)
        } else {
            q(rng.gen_range(-40..=40), rng.gen_range(1..=17))
        }
    };
    let mut seen = std::collections::BTreeMap::new();
    let mut done = 0;
    while done < 200 {
        let jet = Jet1::new(coeff(&mut rng), coeff(&mut rng), coeff(&mut rng));
        if jet.is_zero() {
            continue;
        }
        let zero = q(0, 1);
        let expected = if jet.a > zero {
            Orbit::PlusU
        } else if jet.a < zero {
            Orbit::MinusU
        } else if jet.b != zero {
            Orbit::V
        } else if jet.c > zero {
            Orbit::PlusW
        } else {
            Orbit::MinusW
        };
        let (orbit, witness) = reduce_1jet(&jet).map_err(|e| format!("{jet}: {e}"))?;
        ensure(
            orbit == expected,
            format!("{jet} reduced to {orbit}, expected {expected}"),
        )?;
        let image = witness.apply(&jet).map_err(|e| format!("{jet}: {e}"))?;
        ensure(
            image == orbit.representative(),
            format!("{jet} under {witness} gives {image}"),
        )?;
        *seen.entry(orbit.to_string()).or_insert(0) += 1;
        done += 1;
    }
    ensure(seen.len() == 5, format!("not every orbit hit: {seen:?}"))?;
    Ok(format!("200 jets, orbit counts {seen:?}"))
}

fn table_reproduction() -> Outcome {
    let expected: [(u32, &[&str], i64); 4] = [
        (1, &[], 0),
        (2, &["u", "u^2"], 1),
        (3, &["u", "u^2", "u^3"], 2),
        (3, &["u", "v", "u^2", "u^3"], 2),
    ];
    let forms = table_forms();
    for (row, form) in &forms {
        let (det, basis, codim) = expected[row - 1];
        let c = classify_form(form).map_err(|e| format!("{form}: {e}"))?;
        ensure(c.determinacy == det, format!("{form}: determinacy {}", c.determinacy))?;
        ensure(!c.lower_certified, format!("{form}: also certified at {}", det - 1))?;
        ensure(
            c.quotient_basis == basis,
            format!("{form}: basis {:?}", c.quotient_basis),
        )?;
        ensure(
            c.stratum_codim == codim,
            format!("{form}: stratum codimension {}", c.stratum_codim),
        )?;
    }
    Ok(format!("{} normal forms", forms.len()))
}

fn exclusions() -> Outcome {
    let mut failures = Vec::new();
    for s in [1i8, -1] {
        let sign = Rational::from_integer(s.into());
        // The excluded values pair with the sign of w: (12a ∓ 1) and a = ∓1/4.
        let quarter = -&sign * q(1, 4);
        for &(bn, bd) in &B_SAMPLES {
            let g = NormalForm::w(s, quarter.clone(), q(bn, bd)).germ();
            if is_determined(&g, 3, Variant::R1).unwrap() {
                failures.push(format!("{g}: 3-determinacy test passes"));
            }
        }
        let twelfth = &sign * q(1, 12);
        let g = NormalForm::w(s, twelfth.clone(), q(0, 1)).germ();
        let t = complete_transversal(&g, 2).unwrap();
        let names: Vec<String> = t.iter().map(|m| m.display_with(g.context().names())).collect();
        if names != ["u^3", "u^2*v"] {
            failures.push(format!("{g}: transversal {names:?}"));
        }
        let g = NormalForm::w(s, q(1, 1), q(0, 1)).germ();
        let c = classifier::codimension(&g, 2, DEFAULT_MAX_ORDER).unwrap();
        if c.quotient_dim != 5 {
            failures.push(format!(
                "{g}: quotient {:?} has dimension {}, not 5",
                c.basis, c.quotient_dim
            ));
        }
    }
    if failures.is_empty() {
        Ok("paired ±1/4, ±1/12 and b = 0".into())
    } else {
        Err(failures.join("; "))
    }
}

fn transversals() -> Outcome {
    let g = poly("v");
    for level in 2..=5u32 {
        let t = complete_transversal(&g, level - 1).unwrap();
        let names: Vec<String> = t.iter().map(|m| m.display_with(g.context().names())).collect();
        ensure(
            names == [format!("u^{level}")],
            format!("v at level {level}: {names:?}"),
        )?;
    }
    for src in ["w", "-w"] {
        let g = poly(src);
        let t = complete_transversal(&g, 1).unwrap();
        let names: Vec<String> = t.iter().map(|m| m.display_with(g.context().names())).collect();
        ensure(names == ["u^2", "u*v", "v^2"], format!("{src} at level 2: {names:?}"))?;
    }
    Ok("v at levels 2..5, ±w at level 2".into())
}

fn mather_paths() -> Outcome {
    let samples = [q(0, 1), q(1, 2), q(-1, 2), q(1, 1), q(-1, 1)];
    let h = poly("v^2");
    for s in [1i8, -1] {
        for &(n, d) in &A_SAMPLES {
            let f0 = NormalForm::w(s, q(n, d), q(0, 1)).germ();
            let out = mather_path_check(&f0, &h, &samples, 2).unwrap();
            ensure(out.holds(), format!("{f0}: {out:?}"))?;
        }
    }
    Ok("±w + a·u² along v²".into())
}

fn versality() -> Outcome {
    let forms = table_forms();
    for (_, form) in &forms {
        let g = form.germ();
        let defs = form.deformation_monomials();
        let moduli = form.moduli_directions();
        ensure(
            versality_check(&g, &defs, &moduli, DEFAULT_MAX_ORDER).unwrap(),
            format!("{form} not versal"),
        )?;
        for i in 0..defs.len() {
            let mut rest = defs.clone();
            let dropped = rest.remove(i);
            ensure(
                !versality_check(&g, &rest, &moduli, DEFAULT_MAX_ORDER).unwrap(),
                format!("{form} still versal without {dropped}"),
            )?;
        }
    }
    Ok(format!("{} normal forms", forms.len()))
}

fn golden_equality() -> Outcome {
    let samples = TableSamples {
        a: A_SAMPLES.iter().map(|&(n, d)| q(n, d)).collect(),
        b: B_SAMPLES.iter().map(|&(n, d)| q(n, d)).collect(),
    };
    let r = verify_discriminants(&bundled_golden(), &samples);
    let failing: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    ensure(failing.is_empty(), failing.join(", "))?;
    for case in 1..=4 {
        for which in Which::ALL {
            let id_end = format!("/{which}/golden");
            ensure(
                r.checks
                    .iter()
                    .any(|c| c.id.starts_with(&format!("case{case}/")) && c.id.ends_with(&id_end)),
                format!("no {which} comparison for case {case}"),
            )?;
        }
    }
    let passed = r.checks.iter().filter(|c| c.status == Status::Pass).count();
    Ok(format!("{passed} checks"))
}

fn boundary_types() -> Outcome {
    let mut got = Vec::new();
    for (case, form, want) in [(2, NormalForm::v(1, q(1, 18)), 2), (3, NormalForm::v(2, q(2, 1)), 3)] {
        let fam = build_family(&form).unwrap();
        let k = boundary_singularity_type(&fam.h2).map_err(|e| format!("case {case}: {e}"))?;
        ensure(k == want, format!("case {case}: B{k}"))?;
        got.push(format!("case {case} B{k}"));
    }
    Ok(got.join(", "))
}

fn singular_loci() -> Outcome {
    let tr = VarContext::new(["r"]).unwrap();
    let p = |s: &str, a: &Rational| {
        let syms = [("a".to_string(), a.clone())].into_iter().collect();
        swallowtail_core::poly::parse::parse_poly_with(&tr, s, &syms).unwrap()
    };
    let samples = generic_samples();
    ensure(samples.len() == 10, "need 10 generic samples")?;
    for a in [q(1, 1), q(-1, 1), q(1, 18), q(2, 1)] {
        let fam = build_family(&NormalForm::v(2, a.clone())).unwrap();
        let d3 = discriminant(&fam, Which::D3).unwrap();
        let sheet = d3.iter().find(|b| b.label == "sheet").ok_or("case 3 has no D3 sheet")?;
        let curves = vec![
            SingularCurve {
                domain: vec![p("0", &a), p("r", &a)],
                image: [p("0", &a), p("r", &a), p("0", &a)],
            },
            SingularCurve {
                domain: vec![p("r", &a), p("6*a*r^2", &a)],
                image: [p("12*a*r^4", &a), p("6*a*r^2", &a), p("-8*a*r^6", &a)],
            },
        ];
        let r = singular_locus(sheet, &curves, &samples);
        let failing: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        ensure(failing.is_empty(), format!("case 3, a = {a}: {failing:?}"))?;
    }
    let golden = bundled_golden();
    let case4 = golden.case(4).ok_or("no case 4 golden data")?;
    let mut n = 0;
    for s in [1i8, -1] {
        for &(an, ad) in &A_SAMPLES {
            for &(bn, bd) in &B_SAMPLES {
                let form = NormalForm::w(s, q(an, ad), q(bn, bd));
                let inst = case4.instantiate_with(&form).unwrap();
                let (_, _, curves, _) = inst
                    .singular
                    .iter()
                    .find(|(w, l, _, _)| *w == Which::D1 && l == "S2")
                    .ok_or("no displayed S2 curve")?;
                let fam = build_family(&form).unwrap();
                let s2 = discriminant(&fam, Which::D1).unwrap().remove(1);
                let r = singular_locus(&s2, curves, &samples);
                let failing: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
                ensure(failing.is_empty(), format!("case 4 {form}: {failing:?}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("case 3 at 4 moduli, case 4 S2 at {n}"))
}

fn contacts() -> Outcome {
    let expected = [
        (Contact::A(0), PlanePosition::Transverse),
        (Contact::A(1), PlanePosition::ContainsTangentialLine),
        (Contact::A(2), PlanePosition::ContainsTangentialLine),
        (Contact::A(1), PlanePosition::EqualsTangentCone),
    ];
    for (row, form) in table_forms() {
        let g = form.germ();
        let (_, contact) = tangential_contact(&g).unwrap();
        let plane = plane_position_of(&g).unwrap();
        ensure(
            (contact, plane) == expected[row - 1],
            format!("{form}: {contact}, {plane:?}"),
        )?;
    }
    Ok("A1, A2, A1 on rows 2-4; planes transverse, two pencils, tangent cone".into())
}

fn cone_and_curves() -> Outcome {
    let st = Swallowtail::<Rational>::standard();
    let cone = st.tangent_cone();
    ensure(cone == poly("256*w^3"), format!("tangent cone {cone}"))?;
    let xy = VarContext::new(["x", "y"]).unwrap();
    let t = VarContext::new(["t"]).unwrap();
    let x = parse_poly(&t, "-6*t^2").unwrap();
    let y = parse_poly(&t, "t").unwrap();
    for m in st.jacobian_minors() {
        let on = m.compose(&[x.clone(), y.clone()]).unwrap();
        ensure(on.is_zero(), format!("minor {m} on x = -6y² is {on}"))?;
    }
    let f = ["x", "-4*y^3 - 2*x*y", "3*y^4 + x*y^2"].map(|s| parse_poly(&xy, s).unwrap());
    let plus = [parse_poly(&t, "-2*t^2").unwrap(), parse_poly(&t, "t").unwrap()];
    let minus = [parse_poly(&t, "-2*t^2").unwrap(), parse_poly(&t, "-t").unwrap()];
    for c in &f {
        let (a, b) = (c.compose(&plus).unwrap(), c.compose(&minus).unwrap());
        ensure(a == b, format!("f(-2t², t) ≠ f(-2t², -t): {a} vs {b}"))?;
    }
    Ok("256w³; minors vanish on Σ; β double points".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("parametrisation identity", parametrisation_identity),
        ("tangency of θ1, θ2, θ3", tangency),
        ("1-jet orbits", one_jet_orbits),
        ("classification table", table_reproduction),
        ("exclusion witnesses", exclusions),
        ("complete transversals", transversals),
        ("Mather path check", mather_paths),
        ("versality", versality),
        ("discriminant golden equality", golden_equality),
        ("boundary types", boundary_types),
        ("singular loci", singular_loci),
        ("contact orders and plane positions", contacts),
        ("tangent cone and curves", cone_and_curves),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
