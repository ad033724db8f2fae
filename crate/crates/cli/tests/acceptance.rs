//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if
//! any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dialgebra::catalog::{default_sample_params, instantiate, ClassId, ClassSpec};
use dialgebra::derivation::{derivation_space, derivation_system, is_derivation, oracle_rank, verify_bracket_closure};
use dialgebra::random;
use dialgebra::report::{build_table, render, Format, TableOptions};
use dialgebra::weights::{CanonicalWeightClass, Family, SignReading};
use dialgebra::{Algebra, Rational, WeightTriple};

const BUDGET: Duration = Duration::from_secs(1);

/// Dimension vectors as published, family order D111..D01δ.
const PUBLISHED: [(ClassId, [usize; 8]); 6] = [
    (ClassId::L1, [1, 1, 1, 0, 0, 0, 0, 1]),
    (ClassId::L2, [0, 1, 1, 0, 0, 2, 0, 1]),
    (ClassId::L3, [1, 2, 1, 0, 0, 2, 0, 1]),
    (ClassId::L4, [1, 2, 2, 0, 0, 0, 2, 1]),
    (ClassId::L5, [1, 1, 2, 0, 0, 0, 2, 1]),
    (ClassId::L6, [1, 1, 2, 0, 0, 0, 2, 2]),
];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family_triples() -> Vec<(Family, WeightTriple)> {
    Family::TABLE_ORDER
        .iter()
        .map(|&f| {
            let class = CanonicalWeightClass::from_family(f, Some(Rational::from(7))).unwrap();
            (f, class.solver_triple(SignReading::Displayed).unwrap())
        })
        .collect()
}

fn defaults() -> Vec<(ClassId, Algebra)> {
    ClassId::ALL
        .iter()
        .map(|&id| (id, instantiate(&default_sample_params(id)).unwrap()))
        .collect()
}

/// Every basis matrix passes the oracle and dim = n² − rank(system).
fn oracle_equivalent(alg: &Algebra, t: &WeightTriple) -> bool {
    let n = alg.dim();
    let space = derivation_space(alg, t);
    space.basis.iter().all(|d| is_derivation(alg, t, d).unwrap())
        && space.dim() == n * n - derivation_system(alg, t).rank()
        && space.dim() == n * n - oracle_rank(alg, t)
}

fn axiom_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for id in ClassId::ALL {
        for _ in 0..25 {
            let spec = random::class_spec(rng, id);
            let alg = instantiate(&spec).map_err(|e| e.to_string())?;
            if !alg.check_left_symmetric().satisfied() {
                failures.push(spec.to_string());
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(failures.is_empty(), || format!("violations in {}", failures.join(", ")))?;
    ensure(elapsed < BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("150 samples in {elapsed:?}"))
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let report = build_table(&TableOptions::default()).map_err(|e| e.to_string())?;
    let rendered = render(&report, Format::Markdown);
    let elapsed = start.elapsed();

    ensure(report.rows.len() == 48, || format!("{} rows", report.rows.len()))?;
    let mut exceptions = 0;
    for row in &report.rows {
        let published = PUBLISHED.iter().find(|(id, _)| *id == row.class).unwrap().1;
        let col = Family::TABLE_ORDER.iter().position(|&f| f == row.family).unwrap();
        ensure(row.expected_dim == published[col], || {
            format!("{} {} expected column drifted", row.class, row.family)
        })?;
        if row.computed_dim == published[col] {
            continue;
        }
        exceptions += 1;
        let erratum = report
            .errata
            .iter()
            .find(|e| e.class == row.class && e.family == row.family)
            .ok_or_else(|| format!("{} {} differs without an erratum", row.class, row.family))?;
        ensure(
            !erratum.evidence.is_empty() && erratum.verify().unwrap_or(false),
            || format!("{} {} erratum evidence does not verify", row.class, row.family),
        )?;
    }
    ensure(report.errata.len() == exceptions, || {
        "errata list does not match mismatching rows".into()
    })?;
    ensure(rendered.contains(&format!("## Errata ({exceptions})")), || {
        "errata not emitted".into()
    })?;
    ensure(report.self_consistent(), || "solver and oracle disagree".into())?;
    ensure(elapsed < BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} rows match, {exceptions} oracle-certified errata, {elapsed:?}",
        48 - exceptions
    ))
}

fn oracle_equivalence(rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0;
    for (id, alg) in defaults() {
        for (f, t) in family_triples() {
            ensure(oracle_equivalent(&alg, &t), || format!("{id} {f}"))?;
            checked += 1;
        }
        for _ in 0..10 {
            let t = random::triple(rng);
            ensure(oracle_equivalent(&alg, &t), || format!("{id} {t}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (algebra, triple) pairs"))
}

fn bracket_closure(rng: &mut ChaCha8Rng) -> Outcome {
    for (id, alg) in defaults() {
        for (f, t) in family_triples() {
            ensure(verify_bracket_closure(&alg, &t), || format!("{id} {f}"))?;
        }
    }
    for k in 0..100 {
        let alg = random::left_symmetric_algebra(rng);
        ensure(alg.check_left_symmetric().satisfied(), || {
            format!("random algebra {k} is not left-symmetric")
        })?;
        for (f, t) in family_triples() {
            ensure(verify_bracket_closure(&alg, &t), || {
                format!("random algebra {k} {f}: {alg:?}")
            })?;
        }
    }
    Ok("48 cells and 100 random algebras".into())
}

fn scaling(rng: &mut ChaCha8Rng) -> Outcome {
    let algebras = defaults();
    for k in 0..20 {
        let c = random::nonzero_rational(rng, 9, 5);
        let t = random::triple(rng);
        let (id, alg) = &algebras[k % algebras.len()];
        let a = derivation_space(alg, &t);
        let b = derivation_space(alg, &t.scaled(&c));
        ensure(a.canonical_span() == b.canonical_span(), || {
            format!("{id} {t} scaled by {c}")
        })?;
    }
    Ok("20 scalings".into())
}

fn invariance(rng: &mut ChaCha8Rng) -> Outcome {
    let families = family_triples();
    for (id, alg) in defaults() {
        for _ in 0..10 {
            let p = random::basis_change(rng, 2, 2);
            let moved = alg.change_basis(&p).map_err(|e| e.to_string())?;
            for (f, t) in &families {
                let here = derivation_space(&alg, t);
                let there = derivation_space(&moved, t);
                ensure(here.dim() == there.dim(), || format!("{id} {f} under {}", p.matrix()))?;
                for d in &here.basis {
                    let conj = p.inverse().matmul(d).unwrap().matmul(p.matrix()).unwrap();
                    ensure(is_derivation(&moved, t, &conj).unwrap(), || {
                        format!("{id} {f}: conjugate of {d} under {}", p.matrix())
                    })?;
                }
            }
        }
    }
    Ok("6 classes × 10 basis changes × 8 families".into())
}

fn end_s() -> Outcome {
    let zero = WeightTriple::from_i64(0, 0, 0);
    for (id, alg) in defaults() {
        ensure(derivation_space(&alg, &zero).dim() == 4, || id.to_string())?;
    }
    for n in 1..=3 {
        ensure(derivation_space(&Algebra::zero(n), &zero).dim() == n * n, || {
            format!("zero algebra, n={n}")
        })?;
    }
    Ok("catalog and zero algebras".into())
}

fn degenerate() -> Outcome {
    let t = WeightTriple::from_i64(1, 1, 1);
    let mut dims = Vec::new();
    for (a, want) in [(1, 2), (2, 1)] {
        let spec = ClassSpec::with_params(ClassId::L1, Some(a.into()), Some(0.into()), None);
        let alg = instantiate(&spec).map_err(|e| e.to_string())?;
        let space = derivation_space(&alg, &t);
        let certified = 4 - oracle_rank(&alg, &t);
        ensure(space.dim() == want && certified == want, || {
            format!("{spec}: solver {} oracle {certified}, want {want}", space.dim())
        })?;
        ensure(space.basis.iter().all(|d| is_derivation(&alg, &t, d).unwrap()), || {
            format!("{spec} basis")
        })?;
        dims.push(format!("{spec} → {want}"));
    }
    Ok(dims.join(", "))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_dialg"))
            .arg("table")
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.success() && second.status.success(), || {
        "table exited non-zero".into()
    })?;
    ensure(first.stdout == second.stdout, || "outputs differ".into())?;
    Ok(format!("{} bytes identical", first.stdout.len()))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let results: Vec<(&str, Outcome)> = vec![
        ("axiom suite", axiom_suite(&mut rng)),
        ("table reproduction", table_reproduction()),
        ("oracle equivalence", oracle_equivalence(&mut rng)),
        ("bracket closure", bracket_closure(&mut rng)),
        ("scaling invariance", scaling(&mut rng)),
        ("basis-change invariance", invariance(&mut rng)),
        ("End S", end_s()),
        ("degenerate parameters", degenerate()),
        ("determinism", determinism()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
