//! `osborn`: command-line access to the loop checkers.
//!
//! Exit status: 0 when the checked property holds, 1 when it fails, 2 on
//! usage errors, unreadable input, exceeded bounds or failed hypotheses.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use osborn_core::classify::classify;
use osborn_core::enumerate::{builtin, chein_double, corpus, enumerate_loops, Filter};
use osborn_core::geometry::{build_pyramid, export_graph, pyramid_certificate, GraphFormat};
use osborn_core::identity::{catalog, Identity, Verdict};
use osborn_core::isotopy::{autotopisms, bs2_contains, drisko, find_isomorphism, principal_isotope};
use osborn_core::osborn::{
    build_isotope, check_theorem, gamma, is_osborn, is_universal_osborn, verify_diagram, verify_diagram_all,
    Diagram, GammaKind, IsotopeLabel, ParamTriple, TheoremName,
};
use osborn_core::parallel::map_ordered;
use osborn_core::simplicial::{
    build_k, f_ij, simplicial_map_check, theorem_k, topology_lemmas, validate_complex, ComplexName,
    IsotopeContext, SimplicialComplex, ValidationMode,
};
use osborn_core::{Bounds, Certificate, Clause, Conventions, Error, Gamma1Word, Loop, Perm, Phi1Formula, PrincipalPair};

#[derive(Parser, Debug)]
#[command(name = "osborn", version, about = "Checks loops, their isotopes and the Osborn isotope theorems")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print the result as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for scans over parameters.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Raise every search cap to at least this order.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Word used for gamma1.
    #[arg(long, global = true, value_enum, default_value_t = Gamma1Arg::Swapped)]
    gamma1: Gamma1Arg,
    /// Formula used for phi1.
    #[arg(long, global = true, value_enum, default_value_t = Phi1Arg::Derived)]
    phi1: Phi1Arg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Gamma1Arg {
    Swapped,
    Printed,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Phi1Arg {
    Derived,
    Printed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Abstract,
    Isotopes,
}

#[derive(Args, Debug, Clone, Copy)]
struct Params {
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// Check every (x, u, v).
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a table and report its order, identity and flags.
    Validate { input: String },
    /// Check an identity such as "(x*y)*z = x*(y*z)".
    Identity {
        input: String,
        #[arg(long, conflicts_with = "name")]
        expr: Option<String>,
        /// os3, os5, associative, commutative, moufang, extra, left_bol, exponent_two
        #[arg(long)]
        name: Option<String>,
    },
    /// Check OS3 and OS5, and optionally OS3 in every principal isotope.
    Osborn {
        input: String,
        #[arg(long)]
        universal: bool,
    },
    /// Print a principal isotope or one of the named isotopes.
    Isotope {
        input: String,
        #[arg(long, requires = "g")]
        f: Option<usize>,
        #[arg(long, requires = "f")]
        g: Option<usize>,
        /// dot, o0..o3, s0..s3
        #[arg(long, conflicts_with = "f")]
        label: Option<String>,
        #[command(flatten)]
        params: Params,
    },
    /// List or count the autotopisms.
    Autotopisms {
        input: String,
        #[arg(long)]
        count: bool,
    },
    /// Search for an isomorphism between two loops.
    Isomorphic { first: String, second: String },
    /// Search AUT for (a,b,c) with (f,g,fg)(a,b,c) = (c,d,cd).
    Drisko {
        input: String,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        d: usize,
    },
    /// Membership in the second Bryant-Schneider group.
    Bs2 {
        input: String,
        /// Images as "2,0,1".
        #[arg(long, conflicts_with = "map")]
        perm: Option<String>,
        /// gamma0, gamma1, gamma01o, gamma01s, gamma23o, psi0, psi1, lambda13, mu13
        #[arg(long)]
        map: Option<String>,
        #[command(flatten)]
        params: Params,
    },
    /// Verify a commutative diagram of isotopes.
    Diagram {
        input: String,
        /// 7, 8, 7m, 8m, 9 or 17
        #[arg(long)]
        name: String,
        #[command(flatten)]
        params: Params,
    },
    /// Check one of the isomorphism theorems at every (x, u, v).
    Theorem {
        input: String,
        /// e.g. 2post1.10
        #[arg(long)]
        name: String,
    },
    /// Validate a complex of isotopes, or a complex read from JSON.
    Complex {
        input: Option<String>,
        /// K0, K1, K2, K3, K01, K23, K0123 or K10
        #[arg(long, conflicts_with = "file")]
        name: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[command(flatten)]
        params: Params,
    },
    /// Check that f_ij: K_i -> K_j is simplicial.
    Map {
        input: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Check the topology lemmas for the isotopes at (x, u, v).
    Topology {
        input: String,
        #[command(flatten)]
        params: Params,
    },
    /// Build the pyramid of isotopes at (x, u, v).
    Pyramid {
        input: String,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Enumerate loops with identity 0 and sorted first row and column.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, conflicts_with = "emit")]
        count: bool,
        /// Write each match to DIR/o<n>_<index>.loop.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Print the Chein double of a group.
    Chein { input: String },
    /// List the corpus.
    Corpus {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
}

/// What a command produced.
struct Report {
    pass: bool,
    text: String,
    json: Value,
}

impl Report {
    fn new(pass: bool, text: impl Into<String>, json: Value) -> Self {
        Report {
            pass,
            text: text.into(),
            json,
        }
    }

    fn certificate(cert: Certificate) -> Self {
        let json = serde_json::to_value(&cert).expect("certificate serializes");
        Report::new(cert.pass, cert.to_text().trim_end(), json)
    }
}

enum Failure {
    Usage(String),
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<Report, Failure>;

struct Context {
    bounds: Bounds,
    conv: Conventions,
    jobs: usize,
}

fn load(source: &str) -> std::result::Result<(String, Loop), Failure> {
    if let Some(name) = source.strip_prefix('@') {
        return builtin(name)
            .map(|b| (b.name, b.table))
            .ok_or_else(|| Failure::Usage(format!("no built-in loop named {name:?}")));
    }
    let text = std::fs::read_to_string(source).map_err(|e| Failure::Io(format!("{source}: {e}")))?;
    let name = Path::new(source)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| source.to_string());
    Ok((name, Loop::parse(&text)?))
}

fn single(params: Params, l: &Loop) -> std::result::Result<ParamTriple, Failure> {
    match (params.x, params.u, params.v) {
        (Some(x), Some(u), Some(v)) => Ok(ParamTriple::new(x, u, v).check(l)?),
        _ => Err(Failure::Usage("give --x, --u and --v, or --all".into())),
    }
}

fn single_or_zero(params: Params, l: &Loop) -> std::result::Result<ParamTriple, Failure> {
    let p = ParamTriple::new(params.x.unwrap_or(0), params.u.unwrap_or(0), params.v.unwrap_or(0));
    Ok(p.check(l)?)
}

fn triple(t: [usize; 3]) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let bounds = match g.bound {
        Some(n) => Bounds::default().at_least(n),
        None => Bounds::default(),
    };
    let conv = Conventions {
        gamma1: match g.gamma1 {
            Gamma1Arg::Swapped => Gamma1Word::Swapped,
            Gamma1Arg::Printed => Gamma1Word::Printed,
        },
        phi1: match g.phi1 {
            Phi1Arg::Derived => Phi1Formula::Derived,
            Phi1Arg::Printed => Phi1Formula::Printed,
        },
    };
    let ctx = Context {
        bounds,
        conv,
        jobs: g.jobs.max(1),
    };
    match cli.command {
        Command::Validate { input } => validate(&input),
        Command::Identity { input, expr, name } => identity(&input, expr, name),
        Command::Osborn { input, universal } => osborn(&ctx, &input, universal),
        Command::Isotope {
            input,
            f,
            g,
            label,
            params,
        } => isotope(&ctx, &input, f.zip(g), label, params),
        Command::Autotopisms { input, count } => list_autotopisms(&ctx, &input, count),
        Command::Isomorphic { first, second } => isomorphic(&first, &second),
        Command::Drisko { input, f, g, c, d } => drisko_cmd(&ctx, &input, [f, g, c, d]),
        Command::Bs2 {
            input,
            perm,
            map,
            params,
        } => bs2(&ctx, &input, perm, map, params),
        Command::Diagram { input, name, params } => diagram(&ctx, &input, &name, params),
        Command::Theorem { input, name } => theorem(&ctx, &input, &name),
        Command::Complex {
            input,
            name,
            file,
            mode,
            params,
        } => complex(&ctx, input, name, file, mode, params),
        Command::Map { input, i, j, params } => map_cmd(&ctx, &input, i, j, params),
        Command::Topology { input, params } => topology(&ctx, &input, params),
        Command::Pyramid { input, params, format } => pyramid(&ctx, &input, params, format),
        Command::Enumerate {
            order,
            filter,
            count,
            emit,
        } => enumerate(&ctx, order, filter, count, emit),
        Command::Chein { input } => chein(&input),
        Command::Corpus { filter, max_order } => list_corpus(&ctx, filter, max_order),
    }
}

fn validate(input: &str) -> Outcome {
    let (name, l) = match load(input) {
        Ok(v) => v,
        Err(Failure::Core(e @ (Error::NotLatin { .. } | Error::NoIdentity))) => {
            return Ok(Report::new(false, format!("invalid: {e}"), json!({ "valid": false, "error": e.to_string() })));
        }
        Err(f) => return Err(f),
    };
    let flags: Vec<String> = classify(&l).iter().map(|f| f.to_string()).collect();
    let text = format!(
        "loop of order {}, identity {}\nflags: {}",
        l.order(),
        l.identity(),
        if flags.is_empty() { "none".to_string() } else { flags.join(", ") }
    );
    let json = json!({ "valid": true, "loop": name, "order": l.order(), "identity": l.identity(), "flags": flags });
    Ok(Report::new(true, text, json))
}

fn identity(input: &str, expr: Option<String>, name: Option<String>) -> Outcome {
    let (loop_name, l) = load(input)?;
    let source = match (expr, name) {
        (Some(e), _) => e,
        (None, Some(n)) => match n.to_ascii_lowercase().as_str() {
            "os3" => catalog::OS3,
            "os5" => catalog::OS5,
            "associative" => catalog::ASSOCIATIVE,
            "commutative" => catalog::COMMUTATIVE,
            "moufang" => catalog::MOUFANG,
            "extra" => catalog::EXTRA,
            "left_bol" => catalog::LEFT_BOL,
            "exponent_two" => catalog::EXPONENT_TWO,
            other => return Err(Failure::Usage(format!("unknown identity {other:?}"))),
        }
        .to_string(),
        (None, None) => return Err(Failure::Usage("give --expr or --name".into())),
    };
    let id = Identity::parse(&source)?;
    let verdict = id.check(&l);
    let mut cert = Certificate::new("identity", json!({ "identity": id.to_string() })).with_loop(loop_name);
    let (text, clause) = match &verdict {
        Verdict::Holds => (format!("{id} holds"), Clause::new("holds", true)),
        Verdict::Counterexample { assignment, lhs, rhs } => {
            let at: Vec<String> = assignment.iter().map(|v| v.to_string()).collect();
            (
                format!("{id} fails at ({}): lhs {lhs}, rhs {rhs}", at.join(",")),
                Clause::new("holds", false)
                    .with_witness(Some(json!({ "assignment": assignment, "lhs": lhs, "rhs": rhs }))),
            )
        }
    };
    cert.push(clause);
    Ok(Report::new(verdict.holds(), text, serde_json::to_value(&cert).unwrap()))
}

fn osborn(ctx: &Context, input: &str, universal: bool) -> Outcome {
    let (name, l) = load(input)?;
    let r = is_osborn(&l);
    let mut cert = Certificate::new("osborn", json!({ "universal": universal })).with_loop(name);
    let mut lines = Vec::new();
    for (label, failure) in [("OS3", r.os3_failure), ("OS5", r.os5_failure)] {
        match failure {
            Some(t) => lines.push(format!("{label} fails at {}", triple(t))),
            None => lines.push(format!("{label} holds")),
        }
        cert.push(Clause::from_failure(label.to_ascii_lowercase(), failure));
    }
    if universal {
        let u = is_universal_osborn(&l, &ctx.bounds)?;
        match u.witness {
            Some(w) => lines.push(format!(
                "universal Osborn fails: OS3 fails in Q_({},{}) at {}",
                w.pair.f,
                w.pair.g,
                triple(w.triple)
            )),
            None => lines.push("universal Osborn holds".into()),
        }
        cert.push(Clause::from_failure("universal", u.witness));
    }
    let json = serde_json::to_value(&cert).unwrap();
    Ok(Report::new(cert.pass, lines.join("\n"), json))
}

fn isotope(
    ctx: &Context,
    input: &str,
    pair: Option<(usize, usize)>,
    label: Option<String>,
    params: Params,
) -> Outcome {
    let (_, l) = load(input)?;
    let (desc, iso) = match (pair, label) {
        (Some((f, g)), _) => {
            l.check_element(f)?;
            l.check_element(g)?;
            (json!({ "f": f, "g": g }), principal_isotope(&l, PrincipalPair::new(f, g)))
        }
        (None, Some(label)) => {
            let label: IsotopeLabel = label.parse()?;
            let p = single(params, &l)?;
            let pair = label.pair(&l, p, &ctx.conv);
            (json!({ "label": label, "params": p, "pair": pair }), build_isotope(&l, label, p, &ctx.conv))
        }
        (None, None) => return Err(Failure::Usage("give --f and --g, or --label with --x --u --v".into())),
    };
    let rows: Vec<&[usize]> = iso.rows().collect();
    Ok(Report::new(true, iso.render().trim_end(), json!({ "isotope": desc, "identity": iso.identity(), "rows": rows })))
}

fn list_autotopisms(ctx: &Context, input: &str, count_only: bool) -> Outcome {
    let (_, l) = load(input)?;
    let all = autotopisms(&l, &ctx.bounds)?;
    if count_only {
        return Ok(Report::new(true, all.len().to_string(), json!({ "count": all.len() })));
    }
    let text: Vec<String> = all.iter().map(|t| format!("{} | {} | {}", t.a, t.b, t.c)).collect();
    Ok(Report::new(true, text.join("\n"), json!({ "count": all.len(), "autotopisms": all })))
}

fn isomorphic(first: &str, second: &str) -> Outcome {
    let (_, a) = load(first)?;
    let (_, b) = load(second)?;
    if a.order() != b.order() {
        return Ok(Report::new(false, "not isomorphic (orders differ)", json!({ "isomorphic": false })));
    }
    Ok(match find_isomorphism(&a, &b)? {
        Some(theta) => Report::new(true, format!("isomorphic via {theta}"), json!({ "isomorphic": true, "map": theta })),
        None => Report::new(false, "not isomorphic", json!({ "isomorphic": false })),
    })
}

fn drisko_cmd(ctx: &Context, input: &str, [f, g, c, d]: [usize; 4]) -> Outcome {
    let (name, l) = load(input)?;
    for e in [f, g, c, d] {
        l.check_element(e)?;
    }
    let (fg, cd) = (PrincipalPair::new(f, g), PrincipalPair::new(c, d));
    let found = drisko(&l, fg, cd, &ctx.bounds)?;
    let iso = find_isomorphism(&principal_isotope(&l, fg), &principal_isotope(&l, cd))?;
    let mut cert = Certificate::new("drisko", json!({ "f": f, "g": g, "c": c, "d": d })).with_loop(name);
    cert.push(Clause::new("autotopism_exists", found.is_some()).with_witness(found.clone()));
    let agree = found.is_some() == iso.is_some();
    cert.push(
        Clause::new("agrees_with_isomorphism_search", agree)
            .with_witness(Some(json!({ "isomorphism": iso })))
            .informational(),
    );
    let text = match &found {
        Some(t) => format!("Q_({f},{g}) ~ Q_({c},{d}) via autotopism {} | {} | {}", t.a, t.b, t.c),
        None => format!("no autotopism maps ({f},{g},{f}{g}) to ({c},{d},{c}{d})"),
    };
    Ok(Report::new(cert.pass, text, serde_json::to_value(&cert).unwrap()))
}

fn bs2(ctx: &Context, input: &str, perm: Option<String>, map: Option<String>, params: Params) -> Outcome {
    let (name, l) = load(input)?;
    let theta: Perm = match (perm, map) {
        (Some(p), _) => p.parse()?,
        (None, Some(m)) => {
            let kind: GammaKind = m.parse()?;
            gamma(&l, kind, single(params, &l)?, &ctx.conv)?
        }
        (None, None) => return Err(Failure::Usage("give --perm or --map".into())),
    };
    let witness = bs2_contains(&l, &theta, &ctx.bounds)?;
    let mut cert = Certificate::new("bs2", json!({ "perm": theta })).with_loop(name);
    cert.push(Clause::new("member", witness.is_some()).with_witness(witness));
    let text = match witness {
        Some([a, b, c, d]) => format!("{theta} maps Q_({a},{b}) onto Q_({c},{d})"),
        None => format!("{theta} is not in BS2"),
    };
    Ok(Report::new(cert.pass, text, serde_json::to_value(&cert).unwrap()))
}

fn diagram(ctx: &Context, input: &str, name: &str, params: Params) -> Outcome {
    let (loop_name, l) = load(input)?;
    let which: Diagram = name.parse()?;
    let cert = if params.all {
        verify_diagram_all(&l, which, &ctx.conv, ctx.jobs)
    } else {
        verify_diagram(&l, which, single(params, &l)?, &ctx.conv)
    };
    Ok(Report::certificate(cert.with_loop(loop_name)))
}

fn theorem(ctx: &Context, input: &str, name: &str) -> Outcome {
    let (loop_name, l) = load(input)?;
    let which: TheoremName = name.parse()?;
    let cert = check_theorem(&l, which, &ctx.bounds, &ctx.conv, ctx.jobs)?;
    Ok(Report::certificate(cert.with_loop(loop_name)))
}

fn complex(
    ctx: &Context,
    input: Option<String>,
    name: Option<String>,
    file: Option<PathBuf>,
    mode: Option<ModeArg>,
    params: Params,
) -> Outcome {
    let base = input.as_deref().map(load).transpose()?;
    if let Some(path) = file {
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        let k = SimplicialComplex::from_json(&text)?;
        let mode = match mode {
            Some(ModeArg::Isotopes) => ValidationMode::Isotopes,
            Some(ModeArg::Abstract) => ValidationMode::Abstract,
            None if base.is_some() => ValidationMode::Isotopes,
            None => ValidationMode::Abstract,
        };
        let cert = match (&base, mode) {
            (Some((_, l)), ValidationMode::Isotopes) => {
                let p = match k.params {
                    Some(p) if params.x.is_none() => p.check(l)?,
                    _ => single(params, l)?,
                };
                validate_complex(&k, mode, Some(IsotopeContext { base: l, params: p, conv: &ctx.conv }))?
            }
            (None, ValidationMode::Isotopes) => {
                return Err(Failure::Usage("isotopes mode needs a loop".into()));
            }
            _ => validate_complex(&k, mode, None)?,
        };
        return Ok(Report::certificate(cert));
    }
    let Some((loop_name, l)) = base else {
        return Err(Failure::Usage("give a loop with --name, or --file".into()));
    };
    let which: ComplexName = name.as_deref().unwrap_or("K0").parse()?;
    if params.all {
        let cert = theorem_k(&l, which, &ctx.bounds, &ctx.conv, ctx.jobs)?;
        return Ok(Report::certificate(cert.with_loop(loop_name)));
    }
    let p = single(params, &l)?;
    let k = which.build(p);
    let mut cert = validate_complex(
        &k,
        ValidationMode::Isotopes,
        Some(IsotopeContext { base: &l, params: p, conv: &ctx.conv }),
    )?
    .with_loop(loop_name);
    cert.check = format!("complex-{which}");
    let mut report = Report::certificate(cert);
    report.json["complex"] = k.to_json();
    Ok(report)
}

fn map_cmd(ctx: &Context, input: &str, i: usize, j: usize, params: Params) -> Outcome {
    let (loop_name, l) = load(input)?;
    if i > 3 || j > 3 {
        return Err(Failure::Usage("indices run from 0 to 3".into()));
    }
    let f = f_ij(i, j);
    let ps: Vec<ParamTriple> = if params.all {
        ParamTriple::all(l.order()).collect()
    } else {
        vec![single(params, &l)?]
    };
    let results = map_ordered(&ps, ctx.jobs, |&p| -> Result<bool, Error> {
        let (ki, kj) = (build_k(i, p)?, build_k(j, p)?);
        let ctx_j = IsotopeContext { base: &l, params: p, conv: &ctx.conv };
        let valid = validate_complex(&kj, ValidationMode::Isotopes, Some(ctx_j))?.pass;
        Ok(valid && simplicial_map_check(&f, &ki, &kj)?)
    });
    let mut cert = Certificate::new(format!("map-f{i}{j}"), json!({ "all": params.all })).with_loop(loop_name);
    let mut holds = 0;
    let mut witness = None;
    for (p, r) in ps.iter().zip(results) {
        if r? {
            holds += 1;
        } else if witness.is_none() {
            witness = Some(p.as_array());
        }
    }
    let map: BTreeMap<String, String> = f;
    cert.push(
        Clause::new("simplicial", witness.is_none())
            .with_witness(witness.map(|p| json!({ "p": p })))
            .with_tally(holds, ps.len()),
    );
    cert.note(format!("f{i}{j} = {}", serde_json::to_string(&map).unwrap()));
    Ok(Report::certificate(cert))
}

fn topology(ctx: &Context, input: &str, params: Params) -> Outcome {
    let (loop_name, l) = load(input)?;
    let p = single(params, &l)?;
    Ok(Report::certificate(topology_lemmas(&l, p, &ctx.conv).with_loop(loop_name)))
}

fn pyramid(ctx: &Context, input: &str, params: Params, format: FormatArg) -> Outcome {
    let (loop_name, l) = load(input)?;
    let p = single_or_zero(params, &l)?;
    let graph = build_pyramid(&l, p, &ctx.bounds, &ctx.conv)?;
    let cert = pyramid_certificate(&graph).with_loop(loop_name);
    let json = serde_json::to_value(&graph).unwrap();
    let text = match format {
        FormatArg::Json => export_graph(&graph, GraphFormat::Json),
        FormatArg::Dot => export_graph(&graph, GraphFormat::Dot),
        FormatArg::Text => {
            let mut lines: Vec<String> = graph
                .edges
                .iter()
                .map(|e| format!("{} {} -> {} length {}: {}", e.name, e.from, e.to, e.length, e.triple))
                .collect();
            lines.push(cert.to_text());
            lines.join("\n")
        }
    };
    let mut report = Report::new(cert.pass, text.trim_end(), json!({ "graph": json, "certificate": cert }));
    if format == FormatArg::Json {
        report.json = serde_json::from_str(&export_graph(&graph, GraphFormat::Json)).unwrap();
    }
    Ok(report)
}

fn enumerate(ctx: &Context, order: usize, filter: Option<String>, count: bool, emit: Option<PathBuf>) -> Outcome {
    let filter: Filter = filter.as_deref().unwrap_or("").parse()?;
    if let Some(dir) = &emit {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut index = 0usize;
    let mut matched = 0usize;
    let mut failure: Option<Failure> = None;
    let total = enumerate_loops(order, &ctx.bounds, |l| {
        let i = index;
        index += 1;
        if failure.is_some() {
            return;
        }
        match filter.matches(l, &ctx.bounds) {
            Ok(true) => {
                matched += 1;
                if let Some(dir) = &emit {
                    let path = dir.join(format!("o{order}_{i}.loop"));
                    if let Err(e) = std::fs::write(&path, l.render()) {
                        failure = Some(Failure::Io(format!("{}: {e}", path.display())));
                    }
                }
            }
            Ok(false) => {}
            Err(e) => failure = Some(Failure::Core(e)),
        }
    })?;
    if let Some(f) = failure {
        return Err(f);
    }
    let text = if count || emit.is_none() {
        matched.to_string()
    } else {
        format!("wrote {matched} loops")
    };
    Ok(Report::new(true, text, json!({ "order": order, "filter": filter.to_string(), "total": total, "matched": matched })))
}

fn chein(input: &str) -> Outcome {
    let (_, g) = load(input)?;
    let m = chein_double(&g)?;
    let rows: Vec<&[usize]> = m.rows().collect();
    Ok(Report::new(true, m.render().trim_end(), json!({ "order": m.order(), "rows": rows })))
}

fn list_corpus(ctx: &Context, filter: Option<String>, max_order: usize) -> Outcome {
    let filter: Filter = filter.as_deref().unwrap_or("").parse()?;
    let entries = corpus(&filter, max_order, &ctx.bounds)?;
    let mut lines = Vec::new();
    let mut json = Vec::new();
    for e in &entries {
        let flags: Vec<String> = classify(&e.table).iter().map(|f| f.to_string()).collect();
        lines.push(format!("{} order {} {}", e.name, e.table.order(), flags.join(",")));
        json.push(json!({ "name": e.name, "order": e.table.order(), "flags": flags }));
    }
    Ok(Report::new(true, lines.join("\n"), Value::Array(json)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.global.json;
    match run(cli) {
        Ok(report) => {
            let out = if as_json {
                serde_json::to_string_pretty(&report.json).unwrap()
            } else {
                report.text
            };
            if !out.is_empty() {
                // A closed pipe (e.g. `| head`) is not an error worth reporting.
                let _ = writeln!(std::io::stdout(), "{out}");
            }
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(failure) => {
            let message = match failure {
                Failure::Usage(m) | Failure::Io(m) => m,
                Failure::Core(e) => e.to_string(),
            };
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
