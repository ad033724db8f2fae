use std::fmt::Write as _;

use anyhow::bail;
use serde_json::json;

use dialgebra::report::{render_basis, Format};
use dialgebra::weights::{canonicalize_triple, is_conforming, CanonicalWeightClass, Family, SignReading};
use dialgebra::{der_lie_structure, derivation_space, Algebra, AxiomReport, Error, Rational, WeightTriple};

pub enum Target {
    Family(Family, Option<Rational>),
    Triple(WeightTriple),
}

fn render_axioms(out: &mut String, label: &str, report: &AxiomReport) {
    if report.satisfied() {
        let _ = writeln!(out, "{label}: OK");
    } else {
        let _ = writeln!(out, "{label}: {} violations", report.violations.len());
        for v in &report.violations {
            let _ = writeln!(out, "  {v}");
        }
    }
}

/// Returns the rendering and whether the left-symmetric axioms hold.
pub fn check(alg: &Algebra, name: &str, format: Format) -> (String, bool) {
    let ls = alg.check_left_symmetric();
    let di = alg.check_diassociative();
    let ok = ls.satisfied();
    let text = match format {
        Format::Json => {
            let v = json!({
                "algebra": name,
                "left_symmetric": { "satisfied": ls.satisfied(), "violations": ls.violations },
                "diassociative": { "satisfied": di.satisfied(), "violations": di.violations },
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Markdown | Format::Csv => {
            let mut out = format!("algebra: {name}\n");
            render_axioms(&mut out, "left-symmetric", &ls);
            render_axioms(&mut out, "diassociative", &di);
            out
        }
    };
    (text, ok)
}

pub fn derive(
    alg: &Algebra,
    name: &str,
    target: &Target,
    reading: SignReading,
    format: Format,
) -> anyhow::Result<String> {
    let (class, triple) = match target {
        Target::Family(Family::EndS, _) => (
            CanonicalWeightClass::plain(Family::EndS),
            WeightTriple::from_i64(0, 0, 0),
        ),
        Target::Family(f, delta) => {
            if *f == Family::D01Delta && delta.is_none() {
                return Err(Error::BadDelta("missing (pass --delta)".into()).into());
            }
            let class = CanonicalWeightClass::from_family(*f, delta.clone())?;
            let triple = class.solver_triple(reading)?;
            (class, triple)
        }
        Target::Triple(t) => (canonicalize_triple(t), t.clone()),
    };
    let space = derivation_space(alg, &triple);
    Ok(match format {
        Format::Json => {
            let v = json!({
                "algebra": name,
                "family": class.family().tag(),
                "delta": class.delta(),
                "triple": triple,
                "dim": space.dim(),
                "basis": space.basis,
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Markdown => {
            let mut out = String::new();
            let _ = writeln!(out, "algebra: {name}");
            let _ = writeln!(out, "triple: {triple} [{class}]");
            let _ = writeln!(out, "dim: {}", space.dim());
            let _ = writeln!(out, "basis:");
            for b in &space.basis {
                let _ = writeln!(out, "  {b}");
            }
            out
        }
        Format::Csv => bail!("derive supports --format md or json"),
    })
}

pub fn canon(t: &WeightTriple) -> String {
    let class = canonicalize_triple(t);
    let mut out = class.to_string();
    if matches!(class.family(), Family::D011 | Family::D01Delta) {
        let realizing = class.defining_equations().expect("not EndS");
        let _ = write!(out, ", realizing triple {realizing}");
    }
    out.push('\n');
    if !is_conforming(t) {
        let _ = writeln!(
            out,
            "note: {t} is not a multiple of {}; derive solves it literally",
            class.label_triple()
        );
    }
    out
}

pub fn nilpotent(alg: &Algebra, name: &str, format: Format) -> anyhow::Result<String> {
    let lie = der_lie_structure(alg)?;
    let series = lie.lower_central_series();
    let nilpotent = lie.is_nilpotent();
    let series_text = series.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    Ok(match format {
        Format::Json => {
            let v = json!({
                "algebra": name,
                "der_dim": lie.dim,
                "basis": lie.basis,
                "constants": lie.constants,
                "series": series,
                "nilpotent": nilpotent,
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Markdown | Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "algebra: {name}");
            let _ = writeln!(
                out,
                "Der dim {}, series {} → {}",
                lie.dim,
                series_text,
                if nilpotent { "nilpotent" } else { "NOT nilpotent" }
            );
            let _ = writeln!(out, "basis: {}", render_basis(&lie.basis));
            for i in 0..lie.dim {
                for j in i + 1..lie.dim {
                    let terms: Vec<String> = (0..lie.dim)
                        .filter(|&k| !lie.constant(i, j, k).is_zero())
                        .map(|k| format!("{}·B{}", lie.constant(i, j, k), k + 1))
                        .collect();
                    if !terms.is_empty() {
                        let _ = writeln!(out, "[B{}, B{}] = {}", i + 1, j + 1, terms.join(" + "));
                    }
                }
            }
            out
        }
    })
}
