use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use swallowtail_core::classifier::{
    certify_determinacy, codimension, complete_transversal, is_determined, reduce_1jet, verify_table1, ClassifyError,
    Jet1, TableSamples, Variant,
};
use swallowtail_core::discriminants::{
    build_family, bundled_golden, discriminant, form_for_case, load_golden, mesh_branch, mesh_map, verify_branch,
    verify_discriminants, Branch, GoldenFile, MeshOutput, Which,
};
use swallowtail_core::poly::parse_with_assignments;
use swallowtail_core::scalar::{format_rational, parse_rational};
use swallowtail_core::swallowtail::{target_context, verify_geometry};
use swallowtail_core::{Check, QPoly, Rational, Report, Swallowtail};

use crate::args::{Command, FormArgs, MeshCommand};

/// Bad input: reported on stderr with exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// A report plus a few lines printed above the table.
pub struct Outcome {
    pub report: Report,
    pub summary: String,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            summary: String::new(),
        }
    }
}

fn rational(s: &str, what: &str) -> Result<Rational, Usage> {
    parse_rational(s).ok_or_else(|| Usage(format!("{what}: malformed rational {s:?}")))
}

fn germ(src: &str) -> Result<QPoly, Usage> {
    let (g, _) = parse_with_assignments(&target_context(), src).map_err(|e| Usage(format!("--germ: {e}")))?;
    Ok(g)
}

fn ranges(src: &str) -> Result<Vec<(Rational, Rational)>, Usage> {
    src.split(',')
        .map(|part| {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| Usage(format!("--range: expected lo:hi, got {part:?}")))?;
            Ok((rational(lo, "--range")?, rational(hi, "--range")?))
        })
        .collect()
}

fn golden_file(path: Option<&Path>) -> Result<GoldenFile, Usage> {
    let env = std::env::var_os("SWK_GOLDEN");
    match path.or(env.as_deref().map(Path::new)) {
        Some(p) => Ok(load_golden(p)?),
        None => Ok(bundled_golden()),
    }
}

fn form(args: &FormArgs) -> Result<swallowtail_core::NormalForm, Usage> {
    Ok(form_for_case(
        args.case,
        args.sign.value(),
        rational(&args.a, "--a")?,
        rational(&args.b, "--b")?,
    )?)
}

fn intersection_notice() -> Check {
    Check::skip(
        "case4/intersection",
        "the intersection of S1 and S2 and its singularity type",
        Value::String("not computed; see the published statement for the Z and E types".into()),
    )
}

pub fn run(cmd: &Command) -> Result<Outcome, Usage> {
    match cmd {
        Command::VerifyGeometry => Ok(verify_geometry().into()),
        Command::Classify { jet } => classify(jet),
        Command::Transversal { germ: g, level } => {
            let g = germ(&g.germ)?;
            let t = complete_transversal(&g, level - 1)?;
            let names = g.context().names();
            let shown: Vec<String> = t.iter().map(|m| m.display_with(names)).collect();
            let mut r = Report::new(format!("transversal --level {level}"));
            r.push(Check::new(
                "transversal",
                format!("complete {level}-transversal of {g}"),
                true,
                json!({ "germ": g.to_string(), "monomials": shown, "dimension": shown.len() }),
            ));
            Ok(Outcome {
                summary: format!("T = {{{}}}\n", shown.join(", ")),
                report: r,
            })
        }
        Command::Determinacy { germ: g, k } => {
            let g = germ(&g.germ)?;
            let cert = certify_determinacy(&g, *k)?;
            let r1 = is_determined(&g, *k, Variant::R1)?;
            let mut r = Report::new(format!("determinacy --k {k}"));
            r.push(Check::new(
                "determinacy",
                format!("{g} is {k}-determined"),
                cert.is_some(),
                json!({ "germ": g.to_string(), "k": k, "r1_criterion": r1, "certificate": cert }),
            ));
            Ok(r.into())
        }
        Command::Codim {
            germ: g,
            moduli,
            max_order,
        } => {
            let g = germ(&g.germ)?;
            let mut r = Report::new(format!("codim --moduli {moduli}"));
            let reference = format!("quotient of the maximal ideal by the tangent space of {g}");
            match codimension(&g, *moduli, *max_order) {
                Ok(c) => {
                    let summary = format!(
                        "basis {{{}}}, dim {}, stratum codimension {}\n",
                        c.basis.join(", "),
                        c.quotient_dim,
                        c.stratum_codim
                    );
                    r.push(Check::new("codimension", reference, true, json!(c)));
                    Ok(Outcome { report: r, summary })
                }
                Err(ClassifyError::NotStabilized(n)) => {
                    r.push(Check::new(
                        "codimension",
                        reference,
                        false,
                        json!({ "error": format!("quotient did not stabilise up to order {n}") }),
                    ));
                    Ok(r.into())
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::VerifyTable1 => Ok(verify_table1(&TableSamples::default()).into()),
        Command::Discriminant { form: f, which } => discriminant_cmd(f, which.as_deref()),
        Command::VerifyDiscriminants { golden } => {
            let g = golden_file(golden.as_deref())?;
            Ok(verify_discriminants(&g, &TableSamples::default()).into())
        }
        Command::Mesh(m) => mesh(m),
        Command::VerifyAll { golden } => {
            let g = golden_file(golden.as_deref())?;
            let samples = TableSamples::default();
            let (geometry, (table, discs)) = join3(
                verify_geometry,
                || verify_table1(&samples),
                || verify_discriminants(&g, &samples),
            );
            let mut r = Report::new("verify-all");
            r.absorb("geometry", geometry);
            r.absorb("table1", table);
            r.absorb("discriminants", discs);
            Ok(r.into())
        }
    }
}

fn join3<A: Send, B: Send, C: Send>(
    a: impl FnOnce() -> A + Send,
    b: impl FnOnce() -> B + Send,
    c: impl FnOnce() -> C + Send,
) -> (A, (B, C)) {
    std::thread::scope(|s| {
        let ha = s.spawn(a);
        let hb = s.spawn(b);
        let cv = c();
        (
            ha.join().expect("verifier panicked"),
            (hb.join().expect("verifier panicked"), cv),
        )
    })
}

fn classify(jet: &str) -> Result<Outcome, Usage> {
    let parts: Vec<&str> = jet.split(',').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(Usage(format!("--jet: expected a,b,c, got {jet:?}")));
    };
    let jet = Jet1::new(rational(a, "--jet")?, rational(b, "--jet")?, rational(c, "--jet")?);
    let (orbit, witness) = reduce_1jet(&jet)?;
    let image = witness.apply(&jet)?;
    let mut r = Report::new("classify");
    r.push(Check::new(
        "orbit",
        format!("1-jet {jet} reduces to {orbit}"),
        image == orbit.representative(),
        json!({
            "jet": jet.to_string(),
            "orbit": orbit.to_string(),
            "witness": witness,
            "witness_text": witness.to_string(),
            "image": image.to_string(),
        }),
    ));
    Ok(Outcome {
        summary: format!("orbit {orbit}\nwitness {witness}\n"),
        report: r,
    })
}

fn discriminant_cmd(args: &FormArgs, which: Option<&str>) -> Result<Outcome, Usage> {
    let form = form(args)?;
    let fam = build_family(&form)?;
    let whiches = match which {
        Some(w) => vec![w.parse::<Which>()?],
        None => Which::ALL.to_vec(),
    };
    let mut r = Report::new(format!("discriminant --case {}", args.case));
    let mut summary = String::new();
    let _ = writeln!(summary, "F = {}", fam.f);
    for w in whiches {
        let branches = discriminant(&fam, w)?;
        for br in &branches {
            let _ = writeln!(summary, "{br}");
            let mut sub = verify_branch(br, &fam);
            if let Some(first) = sub.checks.first_mut() {
                if let Value::Object(m) = &mut first.payload {
                    m.insert("branch".into(), Value::String(br.to_string()));
                }
            }
            r.absorb(&format!("{w}/{}", br.label), sub);
        }
    }
    if args.case == 4 {
        r.push(intersection_notice());
    }
    Ok(Outcome { report: r, summary })
}

fn pick_branch(branches: Vec<Branch>, component: Option<&str>) -> Result<Branch, Usage> {
    let labels: Vec<String> = branches.iter().map(|b| b.label.clone()).collect();
    match component {
        Some(c) => {
            // `S1`, `S2`, ... name branches by position.
            let nth = c
                .strip_prefix('S')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|n| *n >= 1)
                .map(|n| n - 1);
            let idx = branches.iter().position(|b| b.label == c).or(nth);
            idx.filter(|i| *i < branches.len())
                .map(|i| branches.into_iter().nth(i).expect("index in range"))
                .ok_or_else(|| {
                    Usage(format!(
                        "--component: no branch {c:?}; available: {}",
                        labels.join(", ")
                    ))
                })
        }
        None if branches.len() == 1 => Ok(branches.into_iter().next().expect("one branch")),
        None => Err(Usage(format!("--component required; available: {}", labels.join(", ")))),
    }
}

fn write_mesh(out: &Path, mesh: &MeshOutput, command: String, reference: String) -> Result<Outcome, Usage> {
    std::fs::write(out, mesh.render()).map_err(|e| Usage(format!("cannot write {}: {e}", out.display())))?;
    let size = match mesh {
        MeshOutput::Surface(m) => json!({ "vertices": m.vertices.len(), "faces": m.faces.len() }),
        MeshOutput::Curve(c) => json!({ "rows": c.rows.len() }),
    };
    let mut r = Report::new(command);
    r.push(Check::new(
        "mesh",
        reference,
        true,
        json!({ "path": out.display().to_string(), "format": mesh.extension(), "size": size }),
    ));
    Ok(r.into())
}

fn mesh(cmd: &MeshCommand) -> Result<Outcome, Usage> {
    match cmd {
        MeshCommand::Surface {
            range,
            resolution,
            no_faces,
            out,
        } => {
            let st = Swallowtail::<Rational>::standard();
            let mut m = mesh_map(&st.param, &ranges(range)?, *resolution)?;
            if *no_faces {
                if let MeshOutput::Surface(s) = &mut m {
                    s.faces.clear();
                }
            }
            write_mesh(out, &m, "mesh surface".into(), format!("f(x, y) sampled over {range}"))
        }
        MeshCommand::Branch {
            form: f,
            which,
            component,
            fix,
            range,
            resolution,
            out,
        } => {
            let nf = form(f)?;
            let which: Which = which.parse()?;
            let fam = build_family(&nf)?;
            let mut br = pick_branch(discriminant(&fam, which)?, component.as_deref())?;
            for item in fix {
                let (name, value) = item
                    .split_once('=')
                    .ok_or_else(|| Usage(format!("--fix: expected name=value, got {item:?}")))?;
                br = br.restrict(name.trim(), &rational(value, "--fix")?)?;
            }
            let m = mesh_branch(&br, &ranges(range)?, *resolution)?;
            let reference = format!(
                "{which} branch {} of case {} at a = {}, b = {}",
                br.label,
                f.case,
                format_rational(&nf.a),
                format_rational(&nf.b)
            );
            write_mesh(
                out,
                &m,
                format!("mesh branch --case {} --which {which}", f.case),
                reference,
            )
        }
    }
}
