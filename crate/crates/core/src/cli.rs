//! Command-line entry point: parsing, file wiring and deterministic
//! reports. All randomness is seeded, all output is canonically ordered,
//! so a report is byte-identical across runs of the same invocation.
//!
//! Exit codes: 0 all requested checks pass, 1 a check failed, 2 input
//! error, 3 enumeration incomplete.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bialg::{Axiom, AxiomReport, StructureBialgebra};
use crate::classify::{
    self, canonicalize, ComultType, MultTable2, Symmetry,
};
use crate::construct;
use crate::error::{Error, Result};
use crate::group;
use crate::io;
use crate::linalg::Mat;
use crate::magma::FiniteMagma;
use crate::scalar::{parse_rational, Ring, Scalar};
use crate::ybe;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

/// Exact checkers for self-distributive algebras, bialgebras and
/// Yang-Baxter operators.
#[derive(Parser, Debug)]
#[command(name = "sdbialg", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for randomized property samples; fixed default keeps reports
    /// reproducible bit-for-bit.
    #[arg(long, global = true, default_value_t = 0x5eed_0001)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the shelf/rack/quandle axioms of a Cayley-table file.
    CheckMagma { file: PathBuf },
    /// Run axiom checkers on a bialgebra file.
    CheckBialg {
        file: PathBuf,
        /// Comma-separated axiom list (default: coassoc,counit,compat,sd).
        #[arg(long, value_delimiter = ',')]
        axioms: Vec<String>,
        /// Second multiplication tensor for the linear-rack axioms.
        #[arg(long)]
        barstar: Option<PathBuf>,
        /// Additionally cross-check sd-plain on this many seeded random
        /// element triples.
        #[arg(long)]
        sample_triples: Option<usize>,
    },
    /// Build a bialgebra file from one of the standard constructions.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Build the Yang-Baxter operator of a cocommutative linear rack and
    /// verify the braid relation (and invertibility, given --barstar).
    Ybe {
        file: PathBuf,
        #[arg(long)]
        barstar: Option<PathBuf>,
        /// Write the R matrix to a file.
        #[arg(long)]
        emit_r: Option<PathBuf>,
        /// Build R even when the input is not cocommutative (verdicts are
        /// then informative only).
        #[arg(long)]
        force: bool,
    },
    /// Enumerate or verify 2-dimensional self-distributive bialgebras.
    Classify {
        #[arg(long = "type", value_name = "1|2|3")]
        kind: u8,
        /// Comultiplication parameter for type 3 (rational, e.g. 4, -1 or 1/2).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Dump the pre-filter candidate space instead of classifying.
        #[arg(long)]
        emit_candidates: bool,
        /// Write the machine-readable result here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve x a = b in the algebra of a trivial quandle T_n.
    Solve(SolveArgs),
    /// Dualize between a multiplication and a comultiplication.
    Dualize {
        file: PathBuf,
        #[arg(long, value_name = "mult-to-comult|comult-to-mult")]
        direction: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rewrite structure constants in a new basis (columns of the matrix).
    ChangeBasis {
        file: PathBuf,
        /// Invertible matrix as a JSON array of scalar rows.
        #[arg(long)]
        matrix: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Size of the trivial quandle.
    #[arg(long)]
    pub size: usize,
    #[arg(long)]
    pub ring: Option<String>,
    /// Coefficients of a as a JSON array, e.g. '["2","0","0"]'.
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// `k[X]` of a rack with group-like comultiplication.
    RackAlgebra {
        /// Magma file path or spec (trivial:N, dihedral:N, conj:GROUP).
        #[arg(long)]
        magma: String,
        #[arg(long)]
        ring: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The extension k (+) `k[X]`.
    Augmented {
        #[arg(long)]
        magma: String,
        #[arg(long)]
        ring: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Linear rack of a Leibniz bracket; also writes the bar-star tensor.
    Leibniz {
        /// Bracket file path or builtin (solvable2, abelian:N).
        #[arg(long)]
        bracket: String,
        #[arg(long)]
        ring: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
        /// Where to write the bar-star tensor (default: OUTPUT.barstar.json).
        #[arg(long)]
        barstar_output: Option<PathBuf>,
    },
    /// Adjoint multiplication of a group Hopf algebra.
    GroupAdjoint {
        /// Catalog name (z2..z6, s3, d4, q8).
        #[arg(long)]
        group: String,
        #[arg(long)]
        ring: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// One of the two Novikov example algebras.
    Novikov {
        #[arg(long, value_name = "a1|a2")]
        which: String,
        #[arg(long)]
        ring: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Runs a parsed invocation, printing the report to stdout; returns the
/// process exit code.
pub fn run(config: RunConfig) -> i32 {
    match dispatch(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::EnumerationIncomplete(_) => EXIT_INCOMPLETE,
                _ => EXIT_INPUT_ERROR,
            }
        }
    }
}

fn dispatch(config: &RunConfig) -> Result<i32> {
    match &config.command {
        Command::CheckMagma { file } => check_magma(file),
        Command::CheckBialg {
            file,
            axioms,
            barstar,
            sample_triples,
        } => check_bialg(file, axioms, barstar.as_deref(), *sample_triples, config.seed),
        Command::Construct { what } => run_construct(what),
        Command::Ybe {
            file,
            barstar,
            emit_r,
            force,
        } => run_ybe(file, barstar.as_deref(), emit_r.as_deref(), *force),
        Command::Classify {
            kind,
            a,
            emit_candidates,
            output,
        } => run_classify(*kind, a.as_deref(), *emit_candidates, output.as_deref()),
        Command::Solve(args) => run_solve(args),
        Command::Dualize {
            file,
            direction,
            output,
        } => run_dualize(file, direction, output),
        Command::ChangeBasis {
            file,
            matrix,
            output,
        } => run_change_basis(file, matrix, output),
    }
}

fn ring_or_rational(spec: &Option<String>) -> Result<Ring> {
    match spec {
        None => Ok(Ring::rational()),
        Some(s) => io::ring_from_str(s),
    }
}

/// Magma argument: a file path or trivial:N / dihedral:N / conj:GROUP.
pub fn parse_magma_spec(spec: &str) -> Result<FiniteMagma> {
    if let Some((kind, arg)) = spec.split_once(':') {
        match kind {
            "trivial" => {
                let n: usize = arg
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad size {arg:?}")))?;
                return Ok(FiniteMagma::trivial(n));
            }
            "dihedral" => {
                let n: usize = arg
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad size {arg:?}")))?;
                return Ok(FiniteMagma::dihedral(n));
            }
            "conj" => return Ok(FiniteMagma::conjugation(&group::by_name(arg)?)),
            _ => {}
        }
    }
    io::magma_from_json(&io::read_json_file(Path::new(spec))?)
}

fn check_magma(file: &Path) -> Result<i32> {
    let m = io::magma_from_json(&io::read_json_file(file)?)?;
    let report = m.check_axioms();
    println!("{report}");
    Ok(if report.class.is_some() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn check_bialg(
    file: &Path,
    axioms: &[String],
    barstar: Option<&Path>,
    sample_triples: Option<usize>,
    seed: u64,
) -> Result<i32> {
    let a = io::bialgebra_from_json(&io::read_json_file(file)?)?;
    let bar = barstar
        .map(|p| io::bialgebra_from_json(&io::read_json_file(p)?))
        .transpose()?;
    let names: Vec<String> = if axioms.is_empty() {
        ["coassoc", "counit", "compat", "sd"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        axioms.to_vec()
    };
    let mut all_pass = true;
    for name in &names {
        let reports: Vec<AxiomReport> = match name.as_str() {
            "coassoc" => vec![a.check_coassoc()],
            "counit" => vec![a.check_counit()],
            "compat" => vec![a.check_compat()],
            "sd" | "sd-bialgebra" => vec![a.check_sd_bialgebra()],
            "sd-plain" => vec![a.check_sd_plain()],
            "cube-zero" => vec![a.check_cube_zero()],
            "novikov" => vec![a.check_novikov()],
            "gen-idempotent" => vec![a.check_gen_idempotent()],
            "gen-jordan" => vec![a.check_gen_jordan()],
            "cocommutative" => vec![a.check_cocommutative()],
            "linear-rack" => {
                let rep = a.check_linear_rack(bar.as_ref())?;
                let label = match rep.class {
                    Some(crate::bialg::LinearClass::Shelf) => "linear shelf",
                    Some(crate::bialg::LinearClass::Rack) => "linear rack",
                    Some(crate::bialg::LinearClass::Quandle) => "linear quandle",
                    None => "none",
                };
                println!("linear class: {label}");
                let mut v = vec![rep.idempotent, rep.self_distributive];
                if let Some(inv) = rep.inverse {
                    v.push(inv);
                }
                v
            }
            other => {
                return Err(Error::InvalidInput(format!("unknown axiom {other:?}")));
            }
        };
        for r in reports {
            println!("{r}");
            all_pass &= r.pass;
        }
    }
    if let Some(n) = sample_triples {
        let ok = sd_plain_sampled(&a, n, seed);
        println!(
            "sd-plain sampled on {n} random triples: {}",
            if ok { "pass" } else { "FAIL" }
        );
        all_pass &= ok == a.check_sd_plain().pass;
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// Brute-force (ab)c = (ac)(bc) on seeded pseudo-random element triples
/// with small integer coefficients; exact evaluation, no polarization.
pub fn sd_plain_sampled(a: &StructureBialgebra, n: usize, seed: u64) -> bool {
    let mut state = seed;
    let mut next = move || -> i64 {
        // splitmix64 step
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        ((z % 7) as i64) - 3
    };
    let ring = a.ring();
    let d = a.dim();
    let mut vec = || -> Vec<Scalar> { (0..d).map(|_| ring.from_i64(next())).collect() };
    for _ in 0..n {
        let (u, v, w) = (vec(), vec(), vec());
        let lhs = a.mul(&a.mul(&u, &v), &w);
        let rhs = a.mul(&a.mul(&u, &w), &a.mul(&v, &w));
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn standard_suite(a: &StructureBialgebra) -> Vec<AxiomReport> {
    vec![
        a.check_coassoc(),
        a.check_counit(),
        a.check_compat(),
        a.check_sd_bialgebra(),
    ]
}

fn print_suite(reports: &[AxiomReport]) -> bool {
    let mut ok = true;
    for r in reports {
        println!("{r}");
        ok &= r.pass;
    }
    ok
}

fn run_construct(what: &ConstructCmd) -> Result<i32> {
    match what {
        ConstructCmd::RackAlgebra {
            magma,
            ring,
            output,
        } => {
            let m = parse_magma_spec(magma)?;
            let a = construct::rack_algebra(&m, ring_or_rational(ring)?)?;
            io::write_json_file(output, &io::bialgebra_to_json(&a))?;
            println!("rack algebra, dim {}", a.dim());
            let ok = print_suite(&standard_suite(&a));
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        ConstructCmd::Augmented {
            magma,
            ring,
            output,
        } => {
            let m = parse_magma_spec(magma)?;
            let a = construct::augmented_rack_bialgebra(&m, ring_or_rational(ring)?)?;
            io::write_json_file(output, &io::bialgebra_to_json(&a))?;
            println!("augmented rack bialgebra, dim {}", a.dim());
            let ok = print_suite(&standard_suite(&a));
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        ConstructCmd::Leibniz {
            bracket,
            ring,
            output,
            barstar_output,
        } => {
            let ring = ring_or_rational(ring)?;
            let data = parse_leibniz_spec(bracket, ring)?;
            let (star, bar) = construct::leibniz_rack(&data);
            io::write_json_file(output, &io::bialgebra_to_json(&star))?;
            let bar_path = barstar_output.clone().unwrap_or_else(|| {
                let mut p = output.clone();
                p.set_extension("barstar.json");
                p
            });
            io::write_json_file(&bar_path, &io::bialgebra_to_json(&bar))?;
            println!(
                "leibniz rack, dim {} (cyclic Jacobi form: {})",
                star.dim(),
                if data.cyclic_jacobi_holds() { "holds" } else { "does not hold" }
            );
            let rep = star.check_linear_rack(Some(&bar))?;
            let mut reports = vec![rep.self_distributive, rep.idempotent];
            if let Some(inv) = rep.inverse {
                reports.push(inv);
            }
            // axiom 1 may legitimately fail on general Leibniz input; the
            // construction promises a linear rack, axioms 2 and 3
            let ok = reports
                .iter()
                .filter(|r| r.axiom != Axiom::GenIdempotent)
                .all(|r| r.pass);
            print_suite(&reports);
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        ConstructCmd::GroupAdjoint {
            group,
            ring,
            output,
        } => {
            let g = group::by_name(group)?;
            let a = construct::group_hopf_adjoint(&g, ring_or_rational(ring)?);
            io::write_json_file(output, &io::bialgebra_to_json(&a))?;
            println!("group adjoint algebra of {group}, dim {}", a.dim());
            let ok = print_suite(&standard_suite(&a));
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        ConstructCmd::Novikov { which, ring, output } => {
            let kind = match which.as_str() {
                "a1" | "A1" => construct::NovikovKind::A1,
                "a2" | "A2" => construct::NovikovKind::A2,
                other => return Err(Error::InvalidInput(format!("unknown Novikov table {other:?}"))),
            };
            let a = construct::novikov_example(kind, ring_or_rational(ring)?);
            io::write_json_file(output, &io::bialgebra_to_json(&a))?;
            println!("novikov {which}, dim 2");
            let r = a.check_novikov();
            println!("{r}");
            Ok(if r.pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn parse_leibniz_spec(spec: &str, ring: Ring) -> Result<construct::LeibnizData> {
    if spec == "solvable2" {
        return Ok(construct::LeibnizData::solvable2(ring));
    }
    if let Some(n) = spec.strip_prefix("abelian:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension {n:?}")))?;
        return Ok(construct::LeibnizData::abelian(ring, n));
    }
    let v = io::read_json_file(Path::new(spec))?;
    let file_ring = match v.get("ring") {
        Some(r) => io::ring_from_json(r)?,
        None => ring,
    };
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("bracket file needs a \"dim\"".into()))? as usize;
    let rows = v
        .get("bracket")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("bracket file needs a \"bracket\" tensor".into()))?;
    let mut flat = Vec::with_capacity(dim * dim * dim);
    for row in rows {
        for cell in row
            .as_array()
            .ok_or_else(|| Error::Parse("bracket rows must be arrays".into()))?
        {
            for x in cell
                .as_array()
                .ok_or_else(|| Error::Parse("bracket cells must be arrays".into()))?
            {
                flat.push(io::scalar_from_json(file_ring, x)?);
            }
        }
    }
    construct::LeibnizData::new(file_ring, dim, flat)
}

fn run_ybe(
    file: &Path,
    barstar: Option<&Path>,
    emit_r: Option<&Path>,
    force: bool,
) -> Result<i32> {
    let a = io::bialgebra_from_json(&io::read_json_file(file)?)?;
    let r = if force {
        ybe::build_r_unchecked(&a)
    } else {
        ybe::build_r(&a)?
    };
    let braid = ybe::check_braid(&r);
    let mut ok = braid.pass;
    let mut line = format!(
        "braid: {}",
        if braid.pass { "pass" } else { "FAIL" }
    );
    if let Some(bs_path) = barstar {
        let bs = io::bialgebra_from_json(&io::read_json_file(bs_path)?)?;
        let rinv = ybe::build_r_inverse(&a, &bs)?;
        let inv = ybe::check_inverse(&r, &rinv);
        ok &= inv.pass;
        line.push_str(&format!(
            ", invertible: {}",
            if inv.pass { "pass" } else { "FAIL" }
        ));
    }
    println!("{line}");
    if !braid.pass {
        println!("{braid}");
    }
    if let Some(path) = emit_r {
        let n = r.dim() * r.dim();
        let rows: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| io::scalar_to_json(r.entry(i, j)))
                        .collect(),
                )
            })
            .collect();
        let v = json!({
            "ring": io::ring_to_json(&a.ring()),
            "dim": r.dim(),
            "matrix": rows,
        });
        io::write_json_file(path, &v)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn run_classify(
    kind: u8,
    a: Option<&str>,
    emit_candidates: bool,
    output: Option<&Path>,
) -> Result<i32> {
    match kind {
        1 => classify_type1(emit_candidates, output),
        2 => classify_type2(emit_candidates, output),
        3 => {
            let a = a.ok_or_else(|| {
                Error::InvalidInput("type 3 needs --a <rational>".into())
            })?;
            classify_type3(&parse_rational(a)?, emit_candidates, output)
        }
        other => Err(Error::InvalidInput(format!("unknown type {other}"))),
    }
}

fn classify_type1(emit_candidates: bool, output: Option<&Path>) -> Result<i32> {
    if emit_candidates {
        let v = Value::Array(
            classify::type1_candidates()
                .iter()
                .map(io::multtable_to_json)
                .collect(),
        );
        print_or_write(&v, output)?;
        return Ok(EXIT_OK);
    }
    let res = classify::enumerate_type1();
    println!(
        "type 1 (group-like comultiplication): {} solutions, {} swap orbits",
        res.solutions.len(),
        res.canonical.len()
    );
    for (i, t) in res.canonical.iter().enumerate() {
        println!("{:>3}) {t}", i + 1);
    }
    let reference = classify::reference_type1_tables();
    let mut exit = EXIT_OK;
    let mut missing = Vec::new();
    for t in &reference {
        if !res.solutions.contains(t) {
            missing.push(t.clone());
        }
    }
    let mut ref_orbits: Vec<MultTable2> = reference
        .iter()
        .map(|t| canonicalize(t, Symmetry::Swap))
        .collect();
    ref_orbits.sort();
    ref_orbits.dedup();
    println!(
        "canonical representatives: {} (expected 13)",
        res.canonical.len()
    );
    if res.canonical != ref_orbits {
        println!("symmetric difference against the reference list:");
        for t in res.canonical.iter().filter(|t| !ref_orbits.contains(t)) {
            println!("  extra:   {t}");
        }
        for t in ref_orbits.iter().filter(|t| !res.canonical.contains(t)) {
            println!("  missing: {t}");
        }
        exit = EXIT_CHECK_FAILED;
    }
    for t in &missing {
        exit = EXIT_CHECK_FAILED;
        println!("reference table is not a solution: {t}");
        let alg = t.to_bialgebra(&ComultType::Type1)?;
        for r in classify::checker_suite(&alg) {
            if !r.pass {
                println!("  {r}");
            }
        }
    }
    if let Some(path) = output {
        let v = json!({
            "type": 1,
            "solutions": res.solutions.iter().map(io::multtable_to_json).collect::<Vec<_>>(),
            "canonical": res.canonical.iter().map(io::multtable_to_json).collect::<Vec<_>>(),
        });
        io::write_json_file(path, &v)?;
    }
    Ok(exit)
}

fn classify_type2(emit_candidates: bool, output: Option<&Path>) -> Result<i32> {
    if emit_candidates {
        let v = json!({
            "a1_choices": [0, 1],
            "fixed_zero": ["a2", "b1", "c1", "d1"],
            "free": ["b2", "c2", "d2"],
        });
        print_or_write(&v, output)?;
        return Ok(EXIT_OK);
    }
    let res = classify::enumerate_type2()?;
    println!(
        "type 2 (Dx = x(x)x, Dy = x(x)y + y(x)x): {} solution components",
        res.components.len()
    );
    for (i, c) in res.components.iter().enumerate() {
        if c.is_point() {
            println!("{:>3}) {}", i + 1, c.base);
        } else {
            println!(
                "{:>3}) family: {}  plus t * [{}]  (t free)",
                i + 1,
                c.base,
                c.directions[0]
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
    }
    let mut exit = EXIT_OK;
    println!("reference list comparison (4 tables):");
    for (i, t) in classify::reference_type2_tables().iter().enumerate() {
        if res.covers(t) {
            println!("  entry {}: found  ({t})", i + 1);
        } else {
            exit = EXIT_CHECK_FAILED;
            println!("  entry {}: NOT A SOLUTION  ({t})", i + 1);
            let alg = t.to_bialgebra(&ComultType::Type2)?;
            for r in classify::checker_suite(&alg) {
                if !r.pass {
                    println!("    {r}");
                }
            }
        }
    }
    if res.components.iter().any(|c| !c.is_point()) {
        println!("extra solutions beyond the reference list: the one-parameter family above");
    }
    if let Some(path) = output {
        let comps: Vec<Value> = res
            .components
            .iter()
            .map(|c| {
                json!({
                    "base": io::multtable_to_json(&c.base),
                    "directions": c
                        .directions
                        .iter()
                        .map(|d| io::scalar_vec_to_json(d))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        io::write_json_file(path, &json!({"type": 2, "components": comps}))?;
    }
    Ok(exit)
}

fn classify_type3(
    a: &num_rational::BigRational,
    emit_candidates: bool,
    output: Option<&Path>,
) -> Result<i32> {
    if emit_candidates {
        let ring = Ring::rational();
        let dom = classify::compat_domain(&ComultType::Type3 {
            a: ring.from_rational(a.clone()),
        });
        if let classify::CompatDomain::Type3 { systems } = dom {
            let v = json!({ "systems": systems });
            print_or_write(&v, output)?;
        }
        return Ok(EXIT_OK);
    }
    let res = classify::verify_type3(a)?;
    println!(
        "type 3 with a = {} over {} (sqrt a = {})",
        res.a,
        res.ring,
        res.sqrt_a
    );
    let mut exit = EXIT_OK;
    for e in &res.entries {
        let all = e.reports.iter().all(|r| r.pass);
        let verdicts: Vec<String> = e
            .reports
            .iter()
            .map(|r| format!("{}={}", r.axiom, if r.pass { "pass" } else { "FAIL" }))
            .collect();
        println!(
            "entry {:<8} {}  systems={}",
            e.name,
            verdicts.join(" "),
            if e.systems_pass { "pass" } else { "FAIL" }
        );
        if !all {
            for r in e.reports.iter().filter(|r| !r.pass) {
                println!("  {r}");
            }
        }
        // the mixed-sign variants are sign experiments, not published tables
        if !all && !e.name.ends_with("-mixed") {
            exit = EXIT_CHECK_FAILED;
        }
    }
    if let Some(path) = output {
        let entries: Vec<Value> = res
            .entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "table": io::multtable_to_json(&e.table),
                    "reports": e.reports.iter().map(io::report_to_json).collect::<Vec<_>>(),
                    "systems_pass": e.systems_pass,
                })
            })
            .collect();
        io::write_json_file(
            path,
            &json!({
                "type": 3,
                "a": io::scalar_to_json(&res.a),
                "ring": io::ring_to_json(&res.ring),
                "entries": entries,
            }),
        )?;
    }
    Ok(exit)
}

fn run_solve(args: &SolveArgs) -> Result<i32> {
    let ring = ring_or_rational(&args.ring)?;
    let t = FiniteMagma::trivial(args.size);
    let a = io::scalar_vec_from_json(ring, &serde_json::from_str(&args.a)?)?;
    let b = io::scalar_vec_from_json(ring, &serde_json::from_str(&args.b)?)?;
    match construct::solve_right_mult(&t, ring, &a, &b)? {
        Some(x) => {
            println!(
                "x = [{}]",
                x.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
            );
            Ok(EXIT_OK)
        }
        None => {
            println!("no solution: a lies in the augmentation ideal and b != 0");
            Ok(EXIT_CHECK_FAILED)
        }
    }
}

fn run_dualize(file: &Path, direction: &str, output: &Path) -> Result<i32> {
    let a = io::bialgebra_from_json(&io::read_json_file(file)?)?;
    let out = match direction {
        "mult-to-comult" => a.dualize_mult_to_comult(),
        "comult-to-mult" => a.dualize_comult_to_mult(),
        other => {
            return Err(Error::InvalidInput(format!(
                "direction must be mult-to-comult or comult-to-mult, got {other:?}"
            )))
        }
    };
    io::write_json_file(output, &io::bialgebra_to_json(&out))?;
    println!("dualized ({direction}), dim {}", out.dim());
    Ok(EXIT_OK)
}

fn run_change_basis(file: &Path, matrix: &str, output: &Path) -> Result<i32> {
    let a = io::bialgebra_from_json(&io::read_json_file(file)?)?;
    let rows_json: Value = serde_json::from_str(matrix)?;
    let rows = rows_json
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?
        .iter()
        .map(|row| io::scalar_vec_from_json(a.ring(), row))
        .collect::<Result<Vec<_>>>()?;
    let p = Mat::from_rows(a.ring(), rows)?;
    let out = a.change_basis(&p)?;
    io::write_json_file(output, &io::bialgebra_to_json(&out))?;
    println!("basis changed, dim {}", out.dim());
    Ok(EXIT_OK)
}

fn print_or_write(v: &Value, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => io::write_json_file(path, v),
        None => {
            println!("{}", serde_json::to_string_pretty(v)?);
            Ok(())
        }
    }
}
