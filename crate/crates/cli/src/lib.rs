//! The `wreath` command line: thin wrappers over the library with exit codes
//! 0 (pass), 1 (domain failure) and 2 (usage, parse or structural error).

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use wreath_reflect::cubecomplex::{euler_characteristic, module_cohomology};
use wreath_reflect::io::{
    conditions_request_from_json, gamma_from_json, module_from_json, module_to_json, params_from_json,
    quiver_from_json, sra_from_json,
};
use wreath_reflect::quiver::Quiver;
use wreath_reflect::reflect::{generic_failure, is_generic_oracle, reflection_functor};
use wreath_reflect::sra::{deformability_report, translate_params};
use wreath_reflect::symg::YoungDiagram;
use wreath_reflect::wreathmod::{build_induced_zero_e, verify_relations, WreathModule};
use wreath_reflect::{Error, Scalar};

#[derive(Parser, Debug)]
#[command(name = "wreath", about = "Modules over deformed wreath products and their reflection functors")]
pub struct Cli {
    /// Quiver JSON file.
    #[arg(long, global = true)]
    pub quiver: Option<PathBuf>,
    /// Parameter JSON file.
    #[arg(long, global = true)]
    pub params: Option<PathBuf>,
    /// Output file for commands that produce a module.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the defining relations.
    Verify { module: PathBuf },
    /// Apply F_i, or a word of them read left to right.
    Reflect {
        module: PathBuf,
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        vertex: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// Cohomology of the cube complex per tuple.
    Cohomology {
        module: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic of the cube complex, per tuple and as a character.
    Euler {
        module: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Whether the parameters are generic at a vertex.
    Generic {
        #[arg(long)]
        vertex: String,
        /// Also decide invertibility in the group algebra.
        #[arg(long)]
        oracle: bool,
    },
    /// Build X ⊗ 𝒩↑ from blocks "PARTS@VERTEX", e.g. "2,1@1".
    Induce {
        #[arg(long = "block", required = true)]
        blocks: Vec<String>,
    },
    /// Translate SRA parameters (t, k, c) into (λ, ν).
    Translate {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        sra: PathBuf,
    },
    /// Deformation conditions for an induced module.
    Conditions {
        #[arg(long)]
        request: PathBuf,
    },
    /// Check a reflection word against the weight in --params.
    WordValidate {
        #[arg(long)]
        word: String,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::ShapeMismatch(_)
        | Error::Structural(_)
        | Error::UnknownVertex(_)
        | Error::UnknownEdge(_)
        | Error::InvalidQuiver(_)
        | Error::InvalidArgument(_)
        | Error::SizeMismatch(_)
        | Error::CharacterTable(_) => 2,
        _ => 1,
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

type Outcome = Result<(i32, String), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(2, format!("cannot read {}: {e}", path.display())))
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, Failure> {
    p.as_deref().ok_or_else(|| Failure(2, format!("--{flag} is required for this command")))
}

fn load_quiver(cli: &Cli) -> Result<Quiver, Failure> {
    Ok(quiver_from_json(&read(need(&cli.quiver, "quiver")?)?)?)
}

fn load_module(q: &Quiver, path: &Path) -> Result<WreathModule, Failure> {
    Ok(module_from_json(q, &read(path)?)?)
}

fn parse_word(q: &Quiver, s: &str) -> Result<Vec<usize>, Failure> {
    Ok(s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).map(|t| q.vertex(t)).collect::<Result<_, _>>()?)
}

fn fmt_dims(v: &WreathModule) -> String {
    let parts: Vec<String> = v.support().iter().map(|(j, d)| format!("{}↦{d}", v.params.fmt_tuple(j))).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

fn fmt_weight(q: &Quiver, w: &[Scalar]) -> String {
    w.iter().enumerate().map(|(i, x)| format!("{}={x}", q.vertex_name(i))).collect::<Vec<_>>().join(", ")
}

/// Write a module to `--out`, or return its JSON for standard output.
fn emit_module(cli: &Cli, v: &WreathModule) -> Result<Option<String>, Failure> {
    let text = module_to_json(v) + "\n";
    match &cli.out {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure(2, format!("cannot write {}: {e}", p.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn cmd_verify(cli: &Cli, module: &Path) -> Outcome {
    let q = load_quiver(cli)?;
    let v = load_module(&q, module)?;
    let rep = verify_relations(&v);
    let mut s = String::new();
    if !rep.structural.is_empty() {
        for line in &rep.structural {
            writeln!(s, "structural: {line}").unwrap();
        }
        return Err(Failure(2, s.trim_end().to_string()));
    }
    for f in &rep.failures {
        writeln!(s, "{}", v.describe_failure(f)).unwrap();
    }
    if rep.pass() {
        writeln!(s, "PASS: all relations hold on {} tuple(s)", v.support().len()).unwrap();
        Ok((0, s))
    } else {
        writeln!(s, "FAIL: {} relation(s) violated", rep.failures.len()).unwrap();
        Ok((1, s))
    }
}

fn cmd_reflect(
    cli: &Cli,
    module: &Path,
    vertex: &Option<String>,
    word: &Option<String>,
    err: &mut dyn Write,
) -> Outcome {
    let q = load_quiver(cli)?;
    let v = load_module(&q, module)?;
    let mut s = String::new();
    let letters = match (vertex, word) {
        (Some(i), _) => vec![q.vertex(i)?],
        (None, Some(w)) => parse_word(&q, w)?,
        (None, None) => return Err(Failure(2, "give --vertex or --word".into())),
    };
    writeln!(s, "input: {}", fmt_dims(&v)).unwrap();
    let mut cur = v;
    for (step, &i) in letters.iter().enumerate() {
        let p = &cur.params;
        let generic = generic_failure(&p.lambda[i], &p.nu, p.n).is_none();
        let out = reflection_functor(&cur, i)?;
        if vertex.is_some() {
            for (j, d) in &out.big_dims {
                let k = out.kernels.get(j).map_or(0, |k| k.cols());
                writeln!(s, "  {}: dim V(j,Δ(j)) = {d}, kernel {k}", cur.params.fmt_tuple(j)).unwrap();
            }
        }
        cur = out.module;
        writeln!(
            s,
            "step {}: F_{}{} -> {}",
            step + 1,
            q.vertex_name(i),
            if generic { "" } else { " (non-generic)" },
            fmt_dims(&cur)
        )
        .unwrap();
    }
    writeln!(s, "lambda: {}", fmt_weight(&q, &cur.params.lambda)).unwrap();
    writeln!(s, "nu: {}", cur.params.nu).unwrap();
    match emit_module(cli, &cur)? {
        Some(json) => {
            // report goes to stderr when the module itself is on stdout
            let _ = err.write_all(s.as_bytes());
            Ok((0, json))
        }
        None => Ok((0, s)),
    }
}

fn cmd_cohomology(cli: &Cli, module: &Path, vertex: &str, json: bool) -> Outcome {
    let q = load_quiver(cli)?;
    let v = load_module(&q, module)?;
    let i = q.vertex(vertex)?;
    let h = module_cohomology(&v, i)?;
    let total_h0: usize = h.values().map(|c| c.dims[0]).sum();
    let higher: usize = h.values().map(|c| c.dims.iter().skip(1).sum::<usize>()).sum();
    if json {
        let tuples: Vec<serde_json::Value> = h
            .iter()
            .map(|(j, c)| {
                let names: Vec<&str> = j.iter().map(|&x| q.vertex_name(x)).collect();
                serde_json::json!({"tuple": names, "h": c.dims})
            })
            .collect();
        let doc = serde_json::json!({"vertex": vertex, "tuples": tuples, "total_h0": total_h0, "total_higher": higher});
        return Ok((0, serde_json::to_string_pretty(&doc).unwrap() + "\n"));
    }
    let mut s = String::new();
    for (j, c) in &h {
        let terms: Vec<String> = c.dims.iter().enumerate().map(|(r, d)| format!("H^{r}={d}")).collect();
        writeln!(s, "{}: {}", v.params.fmt_tuple(j), terms.join(" ")).unwrap();
    }
    writeln!(s, "total H^0 = {total_h0}").unwrap();
    writeln!(s, "total H^>0 = {higher}").unwrap();
    Ok((0, s))
}

fn cmd_euler(cli: &Cli, module: &Path, vertex: &str) -> Outcome {
    let q = load_quiver(cli)?;
    let v = load_module(&q, module)?;
    let e = euler_characteristic(&v, q.vertex(vertex)?)?;
    let mut s = String::new();
    for (j, chi) in &e.per_tuple {
        writeln!(s, "{}: {chi}", v.params.fmt_tuple(j)).unwrap();
    }
    writeln!(s, "total: {}", e.total()).unwrap();
    for (mu, value) in &e.character {
        let parts: Vec<String> = mu.parts().iter().map(usize::to_string).collect();
        writeln!(s, "class [{}]: {value}", parts.join(",")).unwrap();
    }
    Ok((0, s))
}

fn cmd_generic(cli: &Cli, vertex: &str, oracle: bool) -> Outcome {
    let q = load_quiver(cli)?;
    let p = params_from_json(&q, &read(need(&cli.params, "params")?)?)?;
    let i = q.vertex(vertex)?;
    q.check_loop_free(i)?;
    let (l, nu) = (&p.lambda[i], &p.nu);
    let mut s = String::new();
    let code = match generic_failure(l, nu, p.n) {
        None => {
            writeln!(s, "generic at vertex {vertex}: λ_i ± pν ≠ 0 for p = 0..{}", p.n - 1).unwrap();
            0
        }
        Some((k, sign)) => {
            writeln!(s, "fails at p={k} ({} branch)", if sign > 0 { "plus" } else { "minus" }).unwrap();
            1
        }
    };
    if oracle {
        let agrees = is_generic_oracle(l, nu, p.n)? == (code == 0);
        writeln!(s, "group algebra oracle: {}", if agrees { "agrees" } else { "DISAGREES" }).unwrap();
    }
    Ok((code, s))
}

fn parse_block(q: &Quiver, text: &str) -> Result<(YoungDiagram, usize), Failure> {
    let (parts, vertex) =
        text.split_once('@').ok_or_else(|| Failure(2, format!("block {text:?} must look like PARTS@VERTEX")))?;
    let parts: Vec<usize> = parts
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Failure(2, format!("bad part {t:?} in block {text:?}"))))
        .collect::<Result<_, _>>()?;
    Ok((YoungDiagram::new(parts)?, q.vertex(vertex.trim())?))
}

fn cmd_induce(cli: &Cli, blocks: &[String]) -> Outcome {
    let q = load_quiver(cli)?;
    let p = params_from_json(&q, &read(need(&cli.params, "params")?)?)?;
    let blocks: Vec<(YoungDiagram, usize)> = blocks.iter().map(|b| parse_block(&q, b)).collect::<Result<_, _>>()?;
    let v = build_induced_zero_e(&p, &blocks)?;
    match emit_module(cli, &v)? {
        Some(json) => Ok((0, json)),
        None => Ok((0, format!("wrote module: {}\n", fmt_dims(&v)))),
    }
}

fn cmd_translate(cli: &Cli, gamma: &Path, sra: &Path) -> Outcome {
    let q = match &cli.quiver {
        Some(p) => Some(quiver_from_json(&read(p)?)?),
        None => None,
    };
    let g = gamma_from_json(&read(gamma)?, q.as_ref())?;
    let p = sra_from_json(&read(sra)?, &g)?;
    let (lambda, nu) = translate_params(&g, &p)?;
    let entries: Vec<String> = g.vertices.iter().zip(&lambda).map(|(v, x)| format!("{v}={x}")).collect();
    Ok((0, format!("lambda: {}\nnu: {nu}\n", entries.join(", "))))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_conditions(cli: &Cli, request: &Path) -> Outcome {
    let q = load_quiver(cli)?;
    let r = conditions_request_from_json(&q, &read(request)?)?;
    let rep = deformability_report(&q, &r.lambda0, &r.lambda, &r.nu, &r.word, &r.blocks)?;
    let mut s = String::new();
    match rep.word.failed_at {
        None => writeln!(s, "word: PASS").unwrap(),
        Some(g) => writeln!(s, "word: FAIL at step {g}").unwrap(),
    }
    writeln!(s, "condition (i): {}", verdict(rep.condition_i)).unwrap();
    for (k, b) in rep.blocks.iter().enumerate() {
        match b.rectangle {
            Some((a, c)) => writeln!(s, "  block {}: rectangle {a}x{c}", k + 1).unwrap(),
            None => writeln!(s, "  block {}: not a rectangle", k + 1).unwrap(),
        }
    }
    writeln!(s, "condition (ii): {}", verdict(rep.condition_ii)).unwrap();
    for line in &rep.condition_ii_detail {
        writeln!(s, "  {line}").unwrap();
    }
    writeln!(s, "condition (iii): {}", verdict(rep.condition_iii)).unwrap();
    for (k, b) in rep.blocks.iter().enumerate() {
        let req = b.required.as_ref().map_or("none".to_string(), Scalar::to_string);
        writeln!(s, "  block {}: λ·α = {}, required (a-b)ν = {req}", k + 1, b.pairing).unwrap();
    }
    writeln!(s, "genericity along word: {}", verdict(rep.generic())).unwrap();
    for (g, p, sign) in &rep.generic_failures {
        writeln!(s, "  step {g}: fails at p={p} ({} branch)", if *sign > 0 { "plus" } else { "minus" }).unwrap();
    }
    let ok = rep.conditions_hold();
    writeln!(s, "overall: {}", verdict(ok)).unwrap();
    Ok((if ok { 0 } else { 1 }, s))
}

fn cmd_word_validate(cli: &Cli, word: &str) -> Outcome {
    let q = load_quiver(cli)?;
    let p = params_from_json(&q, &read(need(&cli.params, "params")?)?)?;
    let w = parse_word(&q, word)?;
    let rep = q.validate_word(&p.lambda, &w)?;
    let mut s = String::new();
    for (g, st) in rep.steps.iter().enumerate() {
        writeln!(
            s,
            "step {}: vertex {}, pivot {}, {} -> {}",
            g + 1,
            q.vertex_name(st.vertex),
            st.pivot,
            if st.ok { "ok" } else { "zero pivot" },
            fmt_weight(&q, &st.weight)
        )
        .unwrap();
    }
    match rep.failed_at {
        None => {
            writeln!(s, "PASS: final weight {}", fmt_weight(&q, &rep.final_weight)).unwrap();
            Ok((0, s))
        }
        Some(g) => {
            writeln!(s, "FAIL at step {g}").unwrap();
            Ok((1, s))
        }
    }
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Verify { module } => cmd_verify(cli, module),
        Command::Reflect { module, vertex, word } => cmd_reflect(cli, module, vertex, word, err),
        Command::Cohomology { module, vertex, json } => cmd_cohomology(cli, module, vertex, *json),
        Command::Euler { module, vertex } => cmd_euler(cli, module, vertex),
        Command::Generic { vertex, oracle } => cmd_generic(cli, vertex, *oracle),
        Command::Induce { blocks } => cmd_induce(cli, blocks),
        Command::Translate { gamma, sra } => cmd_translate(cli, gamma, sra),
        Command::Conditions { request } => cmd_conditions(cli, request),
        Command::WordValidate { word } => cmd_word_validate(cli, word),
    }
}

/// Run with the given arguments (including the program name), writing the
/// report to `out` and errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(&cli, err) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
