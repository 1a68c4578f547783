use std::fmt::Write;
use std::fs;
use std::path::Path;

use matsplit_core::split::{classified_circuits, element_splitting, es_splitting, splitting};
use matsplit_core::theorems::{
    predicted_circuits, random_instance, run_suite, verify_circuit_prediction, CircuitFamily, InstanceShape,
    Suite, SuiteSummary, VerificationReport,
};
use matsplit_core::{ElementSet, Error, Limits, SplitSpec, VectorMatroid};
use serde::Serialize;

use crate::cli::{BuildArgs, Cli, Command, SpecArgs, VerifyArgs};
use crate::format::{format_matroid_file, parse_matroid_file, MatroidFile};
use crate::CliError;

/// Text for standard output and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub fn execute(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze { file, json } => analyze(&load(&file)?, json).map(Outcome::ok),
        Command::Esplit(args) => build(&args, Construction::Es),
        Command::Split(args) => build(&args, Construction::Split),
        Command::Elsplit(args) => build(&args, Construction::Element),
        Command::Report { file, spec, json } => {
            let f = load(&file)?;
            let spec = spec_from(&f.matroid, &spec, true)?;
            report(&f, &spec, json).map(Outcome::ok)
        }
        Command::Verify(args) => verify(&args),
    }
}

pub fn load(path: &Path) -> Result<MatroidFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    Ok(parse_matroid_file(&text)?)
}

fn spec_from(m: &VectorMatroid, args: &SpecArgs, need_e: bool) -> Result<SplitSpec, CliError> {
    let a = args.a.ok_or_else(|| CliError::Usage("missing -a".into()))?;
    let b = args.b.ok_or_else(|| CliError::Usage("missing -b".into()))?;
    let e = match args.e {
        Some(e) => e,
        None if need_e => return Err(CliError::Usage("missing -e".into())),
        None => b,
    };
    let mut spec = SplitSpec::new(m, a, b, e)?.with_alphas(args.alpha_row, args.alpha_z);
    if args.allow_coloops {
        spec = spec.allowing_coloops();
    }
    spec.validate(m)?;
    Ok(spec)
}

fn sets(v: impl IntoIterator<Item = impl Into<ElementSet>>) -> Vec<Vec<u32>> {
    v.into_iter().map(|s| s.into().into_vec()).collect()
}

fn join(v: &[ElementSet]) -> String {
    let parts: Vec<String> = v.iter().map(ElementSet::to_string).collect();
    parts.join(" ")
}

#[derive(Serialize)]
struct AnalyzeJson {
    name: String,
    field: u32,
    ground: Vec<u32>,
    rank: usize,
    loops: Vec<u32>,
    coloops: Vec<u32>,
    parallel_classes: Vec<Vec<u32>>,
    circuits: Vec<Vec<u32>>,
    bases: Vec<Vec<u32>>,
    cocircuits: Vec<Vec<u32>>,
    /// Largest n <= 3 for which the matroid is n-connected.
    connectivity: usize,
    separation: Option<[Vec<u32>; 2]>,
    eulerian: Option<Vec<Vec<u32>>>,
    bipartite: bool,
    hamiltonian: Option<Vec<u32>>,
}

pub fn analyze(f: &MatroidFile, json: bool) -> Result<String, CliError> {
    let m = &f.matroid;
    let v = m.validate();
    let circuits: Vec<ElementSet> = m.circuits()?.into_iter().map(|c| c.into_elements()).collect();
    let bases = m.bases()?;
    let cocircuits: Vec<ElementSet> = m.cocircuits()?.into_iter().map(|c| c.into_elements()).collect();
    let sep = m.separation_below(3, &Limits::default())?;
    let connectivity = sep.as_ref().map_or(3, |s| s.order);
    let eulerian = m.is_eulerian()?.map(|d| d.sorted_sets());
    let bipartite = m.is_bipartite()?;
    let hamiltonian = m.is_hamiltonian()?.map(|c| c.into_elements());

    if json {
        let out = AnalyzeJson {
            name: f.name.clone(),
            field: m.field().order(),
            ground: m.ground().into_vec(),
            rank: m.rank(),
            loops: v.loops.clone().into_vec(),
            coloops: v.coloops.clone().into_vec(),
            parallel_classes: sets(v.parallel_classes.clone()),
            circuits: sets(circuits),
            bases: sets(bases),
            cocircuits: sets(cocircuits),
            connectivity,
            separation: sep.map(|s| [s.side_s.into_vec(), s.side_t.into_vec()]),
            eulerian: eulerian.map(sets),
            bipartite,
            hamiltonian: hamiltonian.map(ElementSet::into_vec),
        };
        return Ok(serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n");
    }

    let mut s = String::new();
    let _ = writeln!(s, "matroid {} over GF({})", f.name, m.field().order());
    let _ = writeln!(s, "ground {}", m.ground());
    let _ = writeln!(s, "rank {}", m.rank());
    let _ = writeln!(s, "loops {}", v.loops);
    let _ = writeln!(s, "coloops {}", v.coloops);
    let _ = writeln!(s, "parallel classes {}", if v.parallel_classes.is_empty() { "none".into() } else { join(&v.parallel_classes) });
    for (title, fam) in [("circuits", &circuits), ("bases", &bases), ("cocircuits", &cocircuits)] {
        let _ = writeln!(s, "{title} ({})", fam.len());
        for x in fam.iter() {
            let _ = writeln!(s, "  {x}");
        }
    }
    match &sep {
        None => s.push_str("connectivity 3-connected\n"),
        Some(sep) if sep.order == 2 => {
            let _ = writeln!(s, "connectivity connected, 2-separation {} | {}", sep.side_s, sep.side_t);
        }
        Some(sep) => {
            let _ = writeln!(s, "connectivity not connected, 1-separation {} | {}", sep.side_s, sep.side_t);
        }
    }
    match &eulerian {
        Some(d) => {
            let _ = writeln!(s, "eulerian yes {}", join(d));
        }
        None => s.push_str("eulerian no\n"),
    }
    let _ = writeln!(s, "bipartite {}", if bipartite { "yes" } else { "no" });
    match &hamiltonian {
        Some(c) => {
            let _ = writeln!(s, "hamiltonian yes {c}");
        }
        None => s.push_str("hamiltonian no\n"),
    }
    Ok(s)
}

#[derive(Clone, Copy)]
enum Construction {
    Split,
    Element,
    Es,
}

fn build(args: &BuildArgs, kind: Construction) -> Result<Outcome, CliError> {
    let f = load(&args.file)?;
    let m = &f.matroid;
    let (out, name) = match kind {
        Construction::Es => {
            let spec = spec_from(m, &args.spec, true)?;
            (es_splitting(m, &spec)?, format!("{}_es_{}_{}_{}", f.name, spec.a, spec.b, spec.e))
        }
        Construction::Split => {
            let spec = spec_from(m, &args.spec, false)?;
            (splitting(m, &spec)?, format!("{}_split_{}_{}", f.name, spec.a, spec.b))
        }
        Construction::Element => {
            let spec = spec_from(m, &args.spec, false)?;
            (element_splitting(m, &spec)?, format!("{}_elsplit_{}_{}", f.name, spec.a, spec.b))
        }
    };
    let text = format_matroid_file(&name, &out);
    match &args.out {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

/// One row of the comparison table.
#[derive(Serialize)]
struct Group {
    class: &'static str,
    m: Vec<Vec<u32>>,
    split: Vec<Vec<u32>>,
    es: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct ReportJson {
    name: String,
    field: u32,
    ground: Vec<u32>,
    a: u32,
    b: u32,
    e: u32,
    z: u32,
    gamma: u32,
    groups: Vec<Group>,
    counts: [usize; 3],
    prediction_matches_oracle: bool,
}

pub fn report(f: &MatroidFile, spec: &SplitSpec, json: bool) -> Result<String, CliError> {
    let m = &f.matroid;
    let limits = Limits::default();
    let classified = classified_circuits(m, spec, &limits)?;
    let split: Vec<ElementSet> = splitting(m, spec)?.circuits()?.into_iter().map(|c| c.into_elements()).collect();
    let es = es_splitting(m, spec)?;
    let oracle: Vec<ElementSet> = es.circuits()?.into_iter().map(|c| c.into_elements()).collect();
    let prediction = predicted_circuits(m, spec)?;
    let matches = prediction.sets() == oracle;

    let (survivors, np): (Vec<_>, Vec<_>) = classified.iter().partition(|(_, k)| k.survives_splitting());
    let element = prediction.of_family(CircuitFamily::ElementSplit);
    let (with_z, without_z): (Vec<ElementSet>, Vec<ElementSet>) =
        element.into_iter().partition(|c| c.contains(spec.z_label));
    let mut groups = vec![
        Group {
            class: "C0",
            m: sets(survivors.iter().map(|(c, _)| c.elements().clone())),
            split: sets(split.clone()),
            es: sets(without_z),
        },
        Group { class: "np", m: sets(np.iter().map(|(c, _)| c.elements().clone())), split: vec![], es: sets(with_z) },
    ];
    for fam in [
        CircuitFamily::C4,
        CircuitFamily::C5,
        CircuitFamily::C6,
        CircuitFamily::C7,
        CircuitFamily::C8,
        CircuitFamily::Delta,
    ] {
        groups.push(Group { class: fam.name(), m: vec![], split: vec![], es: sets(prediction.of_family(fam)) });
    }
    let counts = [classified.len(), split.len(), oracle.len()];

    if json {
        let out = ReportJson {
            name: f.name.clone(),
            field: m.field().order(),
            ground: m.ground().into_vec(),
            a: spec.a,
            b: spec.b,
            e: spec.e,
            z: spec.z_label,
            gamma: spec.gamma_label,
            groups,
            counts,
            prediction_matches_oracle: matches,
        };
        return Ok(serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n");
    }

    let cell = |v: &[u32]| {
        let parts: Vec<String> = v.iter().map(u32::to_string).collect();
        format!("{{{}}}", parts.join(","))
    };
    let heads = [
        "class".to_string(),
        "M".to_string(),
        format!("M_{{{},{}}}", spec.a, spec.b),
        format!("M^{}_{{{},{}}}", spec.e, spec.a, spec.b),
    ];
    let mut rows: Vec<[String; 4]> = Vec::new();
    for g in &groups {
        let n = g.m.len().max(g.split.len()).max(g.es.len()).max(1);
        for i in 0..n {
            let pick = |v: &Vec<Vec<u32>>| v.get(i).map(|x| cell(x)).unwrap_or_default();
            let class = if i == 0 { g.class.to_string() } else { String::new() };
            rows.push([class, pick(&g.m), pick(&g.split), pick(&g.es)]);
        }
    }
    let mut width = heads.clone().map(|h| h.len());
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String; 4]| {
        let padded: Vec<String> = cells.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_string() + "\n"
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} over GF({}), a={} b={} e={} z={} gamma={}",
        f.name,
        m.field().order(),
        spec.a,
        spec.b,
        spec.e,
        spec.z_label,
        spec.gamma_label
    );
    s.push_str(&line(&heads));
    let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
    s.push_str(&rule.join("-+-"));
    s.push('\n');
    let mut last_class = "";
    for r in &rows {
        if !r[0].is_empty() && !last_class.is_empty() {
            s.push_str(&line(&Default::default()));
        }
        if !r[0].is_empty() {
            last_class = "x";
        }
        s.push_str(&line(r));
    }
    let _ = writeln!(s, "counts: M {} | M_{{a,b}} {} | M^e {}", counts[0], counts[1], counts[2]);
    let _ = writeln!(s, "prediction matches oracle: {}", if matches { "yes" } else { "no" });
    Ok(s)
}

fn selected_suites(name: &str) -> Result<Vec<Suite>, CliError> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::from_name(name).map(|s| vec![s]).ok_or_else(|| CliError::Usage(format!("unknown suite `{name}`")))
}

/// Runs one suite, turning statements that do not apply into a verdict
/// rather than an error.
fn run_one(suite: Suite, m: &VectorMatroid, spec: &SplitSpec, corrupt: bool) -> Result<VerificationReport, Error> {
    if corrupt && suite == Suite::Circuits {
        let mut prediction = predicted_circuits(m, spec)?;
        if !prediction.circuits.is_empty() {
            prediction.circuits.remove(0);
        }
        return verify_circuit_prediction(m, spec, &prediction);
    }
    match run_suite(suite, m, spec) {
        Err(e @ (Error::EulerianTheoremRequiresOddP(_) | Error::ERequiresB)) => Ok(VerificationReport::not_applicable(
            suite,
            matsplit_core::theorems::describe_instance(m, spec),
            &e.to_string(),
        )),
        other => other,
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let suites = selected_suites(&args.suite)?;
    let mut s = String::new();
    let mut failed = false;
    match (args.random, &args.file) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either FILE or --random, not both".into())),
        (None, None) => return Err(CliError::Usage("missing FILE (or --random N)".into())),
        (None, Some(path)) => {
            let f = load(path)?;
            let spec = spec_from(&f.matroid, &args.spec, true)?;
            for &suite in &suites {
                let r = run_one(suite, &f.matroid, &spec, args.corrupt_prediction)?;
                failed |= !r.passed();
                s.push_str(&r.to_string());
            }
        }
        (Some(n), None) => {
            let primes = args.p.map_or(vec![3, 5, 7], |p| vec![p]);
            let lo = 4.min(args.max_cols);
            let mut summaries: Vec<SuiteSummary> = suites.iter().map(|&x| SuiteSummary::new(x)).collect();
            for i in 0..n as u64 {
                let seed = args.seed.wrapping_add(i);
                let shape = InstanceShape::sample(seed, &primes, lo..=args.max_cols)?;
                let (m, spec) = random_instance(seed, shape.p, shape.rows, shape.cols)?;
                for sum in summaries.iter_mut() {
                    let r = run_one(sum.suite, &m, &spec, args.corrupt_prediction)?;
                    sum.record(m.len(), shape.p, r);
                }
            }
            let _ = writeln!(s, "{n} random instances from seed {}", args.seed);
            for sum in &summaries {
                let _ = writeln!(s, "{sum}");
                failed |= !sum.all_passed();
            }
            for sum in &summaries {
                if let Some((_, _, r)) = &sum.smallest_failure {
                    let _ = write!(s, "smallest failure:\n{r}");
                }
                if let Some((_, _, r)) = &sum.smallest_deviation {
                    let _ = write!(s, "smallest known deviation:\n{r}");
                }
            }
        }
    }
    Ok(Outcome { stdout: s, code: if failed { 2 } else { 0 } })
}
