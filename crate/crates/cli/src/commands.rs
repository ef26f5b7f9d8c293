//! Subcommand implementations. Each returns the exit code for a completed
//! run; errors are classified by [`exit_code`].

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use serde_json::{json, Value};

use sphertrop::builtin::{self, Embedding};
use sphertrop::fundthm::{
    check_equivalence, default_samples, extended_trop_sets, trop_hypersurface,
};
use sphertrop::grobtrop::{compare_tropicalizations, grobner_stratum_sets};
use sphertrop::io;
use sphertrop::polyhedra::parse_rational;
use sphertrop::puiseux::{
    parse_polynomial, parse_scalar, parse_weight, Mode, PuiseuxScalar, ValuedPolynomial,
};
use sphertrop::render::{renderers, RenderOptions};
use sphertrop::spherical::{validate_colored_fan, ColoredFan, SphericalDatum};
use sphertrop::strategy::{initial_form_methods, tropicalizers};
use sphertrop::troposphere::{face_key, ExtendedTrop};
use sphertrop::Error;

use crate::{Command, Embedding as EmbeddingArgs, Output};

pub fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(err) = cause.downcast_ref::<Error>() {
            return match err {
                Error::InvalidColoredCone(_)
                | Error::InvalidFan(_)
                | Error::NotAColoredFace
                | Error::OutsideDualCone(_)
                | Error::OutsideValuationCone(_)
                | Error::SetEscapesStratum(_)
                | Error::NotToric(_)
                | Error::InfiniteWeightOnLaurent
                | Error::InfiniteWeight
                | Error::RenderRank(_) => 1,
                _ => 2,
            };
        }
    }
    2
}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    Error::Parse(msg.into()).into()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_embedding(args: &EmbeddingArgs) -> Result<(SphericalDatum, ColoredFan)> {
    let datum = io::datum_from_json(&read(&args.datum)?)
        .with_context(|| format!("parsing datum {}", args.datum.display()))?;
    let fan = io::fan_from_json(&read(&args.fan)?, datum.rank())
        .with_context(|| format!("parsing fan {}", args.fan.display()))?;
    Ok((datum, fan))
}

/// Reads a tropicalization, also accepting the `{"trop": ...}` wrapper that
/// `trop --mode both` and `grtrop` write.
fn load_trop(path: &Path) -> Result<ExtendedTrop> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).map_err(Error::from)?;
    let inner = value.get("trop").cloned().unwrap_or(value);
    io::trop_from_json(&inner.to_string()).with_context(|| format!("parsing {}", path.display()))
}

/// Inline text, or the contents of a file holding text or JSON.
fn load_poly(src: &str) -> Result<ValuedPolynomial> {
    let path = PathBuf::from(src);
    let text = if path.is_file() {
        read(&path)?
    } else {
        src.to_string()
    };
    let trimmed = text.trim();
    let f = if trimmed.starts_with('{') {
        io::poly_from_json(trimmed)?
    } else {
        parse_polynomial(trimmed)?
    };
    Ok(f)
}

fn load_weight(src: &str, nvars: usize) -> Result<Vec<sphertrop::puiseux::ExtQ>> {
    let w = parse_weight(src)?;
    if w.len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: w.len(),
        }
        .into());
    }
    Ok(w)
}

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Validate { input, output } => validate(&input, &output),
        Command::Trop {
            input,
            mode,
            output,
        } => trop(&input, &mode, &output),
        Command::Grtrop { input, output } => grtrop(&input, &output),
        Command::Compare {
            left,
            right,
            output,
        } => compare(&left, &right, &output),
        Command::Poly {
            poly,
            action,
            weight,
            method,
            output,
        } => poly_cmd(&poly, &action, weight.as_deref(), &method, &output),
        Command::Ftt {
            poly,
            weight,
            witness,
            output,
        } => ftt(&poly, &weight, &witness, &output),
        Command::Examples { name, out } => examples(&name, &out),
        Command::Render {
            trop,
            format,
            extent,
            output,
        } => render(&trop, &format, &extent, &output),
    }
}

fn validate(input: &EmbeddingArgs, output: &Output) -> Result<ExitCode> {
    let (datum, fan) = load_embedding(input)?;
    let report = validate_colored_fan(&datum, &fan, true)?;
    let v = json!({
        "valid": report.is_valid(),
        "strictly_valid": report.is_strictly_valid(),
        "violations": report.violations,
    });
    emit(output, &io::to_pretty(&v))?;
    Ok(status(report.is_valid()))
}

fn trop(input: &EmbeddingArgs, mode: &str, output: &Output) -> Result<ExitCode> {
    let (datum, fan) = load_embedding(input)?;
    let registry = tropicalizers();
    if mode == "both" {
        let a = registry.get("facewise")?.tropicalize(&datum, &fan)?;
        let b = registry.get("grobner")?.tropicalize(&datum, &fan)?;
        let report = compare_tropicalizations(&a, &b)?;
        let v = json!({
            "trop": io::trop_to_json(&a),
            "comparison": comparison_json(&report),
        });
        emit(output, &io::to_pretty(&v))?;
        return Ok(status(report.equal()));
    }
    let t = registry.get(mode)?.tropicalize(&datum, &fan)?;
    emit(output, &io::to_pretty(&io::trop_to_json(&t)))?;
    Ok(ExitCode::SUCCESS)
}

fn comparison_json(report: &sphertrop::grobtrop::ComparisonReport) -> Value {
    json!({
        "verdict": if report.equal() { "equal" } else { "different" },
        "strata_compared": report.strata_compared,
        "mismatches": report.mismatches,
    })
}

fn grtrop(input: &EmbeddingArgs, output: &Output) -> Result<ExitCode> {
    let (datum, fan) = load_embedding(input)?;
    let t = tropicalizers().get("grobner")?.tropicalize(&datum, &fan)?;
    let mut sets = Vec::new();
    for sigma in t.maximal_cones() {
        sets.push((face_key(sigma), grobner_stratum_sets(&datum, sigma)?));
    }
    let v = json!({
        "trop": io::trop_to_json(&t),
        "charts": io::grobner_sets_to_json(&sets),
    });
    emit(output, &io::to_pretty(&v))?;
    Ok(ExitCode::SUCCESS)
}

fn compare(left: &Path, right: &Path, output: &Output) -> Result<ExitCode> {
    let report = compare_tropicalizations(&load_trop(left)?, &load_trop(right)?)?;
    emit(output, &io::to_pretty(&comparison_json(&report)))?;
    Ok(status(report.equal()))
}

fn poly_cmd(
    src: &str,
    action: &str,
    weight: Option<&str>,
    method: &str,
    output: &Output,
) -> Result<ExitCode> {
    let f = load_poly(src)?;
    let need_weight = || -> Result<_> {
        let w =
            weight.ok_or_else(|| input_error(format!("--weight is required for `{action}`")))?;
        load_weight(w, f.nvars())
    };
    let v = match action {
        "trop" => {
            let w = need_weight()?;
            json!({"polynomial": f.to_string(), "value": f.trop_eval(&w)?.to_string()})
        }
        "init" => {
            let w = need_weight()?;
            let m = initial_form_methods();
            let form = m.get(method)?.initial_form(&f, &w)?;
            json!({
                "polynomial": f.to_string(),
                "method": method,
                "initial_form": form.to_string(),
                "monomial": form.is_monomial(),
            })
        }
        "hypersurface" => {
            let mut v = json!({
                "polynomial": f.to_string(),
                "torus": io::complex_to_json(&trop_hypersurface(&f)?),
            });
            if f.mode() == Mode::Ordinary {
                let orbits: serde_json::Map<String, Value> = extended_trop_sets(&f)?
                    .iter()
                    .filter(|(sigma, _)| !sigma.is_empty())
                    .map(|(sigma, c)| (orbit_label(sigma), io::complex_to_json(c)))
                    .collect();
                v["orbits"] = Value::Object(orbits);
            }
            v
        }
        other => {
            return Err(input_error(format!(
                "unknown action `{other}` (available: trop, init, hypersurface)"
            )))
        }
    };
    emit(output, &io::to_pretty(&v))?;
    Ok(ExitCode::SUCCESS)
}

/// `"x1=x3=0"` for the orbit where the (0-based) coordinates 0 and 2 vanish.
fn orbit_label(sigma: &[usize]) -> String {
    let names: Vec<String> = sigma.iter().map(|i| format!("x{}", i + 1)).collect();
    format!("{}=0", names.join("="))
}

fn ftt(src: &str, weights: &[String], witnesses: &[String], output: &Output) -> Result<ExitCode> {
    let f = load_poly(src)?;
    let samples = if weights.is_empty() {
        default_samples(&f)?
    } else {
        weights
            .iter()
            .map(|w| load_weight(w, f.nvars()))
            .collect::<Result<_>>()?
    };
    let points = witnesses
        .iter()
        .map(|p| {
            let coords: Vec<PuiseuxScalar> = p
                .split(',')
                .map(|c| parse_scalar(c.trim()))
                .collect::<sphertrop::Result<_>>()?;
            if coords.len() != f.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: f.nvars(),
                    found: coords.len(),
                }
                .into());
            }
            Ok(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    let report = check_equivalence(&f, &samples, &points)?;
    let mut v = io::equivalence_to_json(&report);
    v["polynomial"] = json!(f.to_string());
    emit(output, &io::to_pretty(&v))?;
    Ok(status(report.consistent()))
}

const EXAMPLES: &str = "table1, table2, blowup-a4, p1xp1, e3";

fn write(dir: &Path, name: &str, text: &str, written: &mut Vec<String>) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    written.push(name.to_string());
    Ok(())
}

fn write_embeddings(dir: &Path, list: &[Embedding], written: &mut Vec<String>) -> Result<()> {
    write(
        dir,
        "datum.json",
        &io::to_pretty(&io::datum_to_json(&list[0].datum)),
        written,
    )?;
    for e in list {
        let t = tropicalizers()
            .get("facewise")?
            .tropicalize(&e.datum, &e.fan)?;
        write(
            dir,
            &format!("{}.fan.json", e.name),
            &io::to_pretty(&io::fan_to_json(&e.fan)),
            written,
        )?;
        write(
            dir,
            &format!("{}.expected.json", e.name),
            &io::to_pretty(&io::expected_to_json(&e.expected)),
            written,
        )?;
        write(
            dir,
            &format!("{}.trop.json", e.name),
            &io::to_pretty(&io::trop_to_json(&t)),
            written,
        )?;
    }
    Ok(())
}

fn examples(name: &str, out: &Path) -> Result<ExitCode> {
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let mut written = Vec::new();
    match name {
        "table1" => write_embeddings(out, &builtin::table1(), &mut written)?,
        "table2" => write_embeddings(out, &builtin::table2(), &mut written)?,
        "blowup-a4" => write_embeddings(out, &[builtin::blowup_a4()], &mut written)?,
        "p1xp1" => write_embeddings(out, &[builtin::p1xp1()], &mut written)?,
        "e3" => {
            let f = builtin::e3_polynomial();
            write(
                out,
                "e3.poly",
                &format!("{}\n", builtin::E3_SOURCE),
                &mut written,
            )?;
            write(
                out,
                "e3.json",
                &io::to_pretty(&io::poly_to_json(&f)),
                &mut written,
            )?;
            let mut expected = Vec::new();
            for w in ["(-2, 0)", "(0, 2)"] {
                let wv = parse_weight(w)?;
                expected.push(json!({
                    "weight": w,
                    "value": f.trop_eval(&wv)?.to_string(),
                    "initial_form": f.initial_form(&wv)?.to_string(),
                    "set1": sphertrop::fundthm::membership_set1(&f, &wv)?,
                    "set2": sphertrop::fundthm::membership_set2(&f, &wv)?,
                }));
            }
            write(
                out,
                "e3.expected.json",
                &io::to_pretty(&json!(expected)),
                &mut written,
            )?;
        }
        other => {
            return Err(Error::UnknownStrategy {
                kind: "example",
                name: other.to_string(),
                available: EXAMPLES.to_string(),
            }
            .into())
        }
    }
    print!("{}", io::to_pretty(&json!({ "written": written })));
    Ok(ExitCode::SUCCESS)
}

fn render(path: &Path, format: &str, extent: &str, output: &Output) -> Result<ExitCode> {
    let t = load_trop(path)?;
    let extent = parse_rational(extent)?;
    if extent <= sphertrop::Rational::from_integer(0.into()) {
        return Err(input_error("--extent must be positive"));
    }
    let registry = renderers();
    let text = registry
        .get(format)?
        .render(&t, &RenderOptions { extent })?;
    emit(output, &text)?;
    Ok(ExitCode::SUCCESS)
}
