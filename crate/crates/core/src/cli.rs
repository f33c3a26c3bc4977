//! The `zinbiel` command line.
//!
//! Exit codes: 0 success, 1 a property or table comparison failed, 2 bad input.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::AlgebraSpec;
use crate::catalog::{self, Bindings, CATALOG};
use crate::derivation::{
    ad_generators, ad_linearity_check, check_inner_ideal, check_lie_derivation, check_mult_operator_identity,
    derivation_space, inner_derivation_space, is_derivation, leibniz_violation, mult_operator_diagnostic, symbolic_ad,
    InnerIdealReport, MultOperatorDiagnostic,
};
use crate::error::Error;
use crate::io::{emit_algebra, generate_report, parse_algebra, render_report, ReportFormat};
use crate::linalg::{Matrix, Subspace};
use crate::render::align_columns;
use crate::sampling;
use crate::scalar::Scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "zinbiel", version, about = "Exact inner-derivation and derivation computations for Zinbiel algebras")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, env = "ZINBIEL_SEED")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Zinbiel identity on all basis triples.
    Check { file: String },
    /// Symbolic ad_w, a basis of Inn(A) and its dimension.
    Inner { file: String },
    /// A basis of Der(A) and its dimension.
    Der { file: String },
    /// Left and right annihilators and whether they are two-sided ideals.
    Ann { file: String },
    /// Run the derivation property battery.
    Props {
        file: String,
        /// Random trials for the linearity check.
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// Built-in classified algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List every entry.
    List,
    /// Print an entry as an algebra file.
    Show {
        id: String,
        /// Parameter binding NAME=VALUE, e.g. alpha=0 or lambda=1/2.
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Recompute the reference tables and compare.
    Report {
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
}

struct Ctx<'a> {
    json: bool,
    seed: u64,
    stdin: &'a mut dyn Read,
}

/// Outcome of a subcommand: the text to print and the exit code.
type Outcome = Result<(String, i32), Error>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, seed: cli.seed.unwrap_or(sampling::DEFAULT_SEED), stdin };
    match dispatch(&mut ctx, cli.command) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: Command) -> Outcome {
    match command {
        Command::Check { file } => {
            let a = load(ctx, &file)?;
            cmd_check(ctx, &a)
        }
        Command::Inner { file } => {
            let a = load(ctx, &file)?;
            cmd_inner(ctx, &a)
        }
        Command::Der { file } => {
            let a = load(ctx, &file)?;
            cmd_der(ctx, &a)
        }
        Command::Ann { file } => {
            let a = load(ctx, &file)?;
            cmd_ann(ctx, &a)
        }
        Command::Props { file, trials } => {
            let a = load(ctx, &file)?;
            cmd_props(ctx, &a, trials)
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => cmd_catalog_list(ctx),
            CatalogCommand::Show { id, params } => cmd_catalog_show(&id, &params),
            CatalogCommand::Report { format } => {
                let report = generate_report();
                let format = if ctx.json { ReportFormat::Json } else { format };
                let code = exit_code(report.all_dimensions_match());
                Ok((render_report(&report, format), code))
            }
        },
    }
}

fn load(ctx: &mut Ctx<'_>, file: &str) -> Result<AlgebraSpec, Error> {
    let io_err = |e: std::io::Error| Error::Parse { context: file.to_string(), message: e.to_string() };
    let text = if file == "-" {
        let mut s = String::new();
        ctx.stdin.read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        std::fs::read_to_string(file).map_err(io_err)?
    };
    parse_algebra(&text)
}

fn json_out<T: Serialize>(value: &T, code: i32) -> Outcome {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    Ok((s, code))
}

fn exit_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn matrix_cells(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(Scalar::to_string).collect()).collect()
}

fn vector_strings(v: &crate::linalg::Vector) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn push_matrices(out: &mut String, ms: &[Matrix]) {
    if ms.is_empty() {
        out.push_str("  (none)\n");
    }
    for (i, m) in ms.iter().enumerate() {
        let _ = writeln!(out, "  [{}]", i + 1);
        for line in align_columns(&matrix_cells(m)).lines() {
            let _ = writeln!(out, "    {line}");
        }
    }
}

fn header(a: &AlgebraSpec) -> String {
    format!("algebra {} (dimension {})\n", a.name(), a.dim())
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    dim: usize,
    zinbiel: bool,
    violations: Vec<ViolationJson>,
}

#[derive(Serialize)]
struct ViolationJson {
    triple: [usize; 3],
    residual: Vec<String>,
}

fn cmd_check(ctx: &Ctx<'_>, a: &AlgebraSpec) -> Outcome {
    let violations = a.check_zinbiel();
    let code = exit_code(violations.is_empty());
    if ctx.json {
        let v = violations
            .iter()
            .map(|v| ViolationJson {
                triple: [v.triple.0 + 1, v.triple.1 + 1, v.triple.2 + 1],
                residual: vector_strings(&v.residual),
            })
            .collect();
        return json_out(
            &CheckJson { name: a.name().into(), dim: a.dim(), zinbiel: violations.is_empty(), violations: v },
            code,
        );
    }
    let mut out = header(a);
    if violations.is_empty() {
        let _ = writeln!(out, "Zinbiel identity holds on all {} basis triples", a.dim().pow(3));
    } else {
        let _ = writeln!(out, "Zinbiel identity fails on {} basis triple(s):", violations.len());
        for v in &violations {
            let _ = writeln!(out, "  {v}");
        }
    }
    Ok((out, code))
}

#[derive(Serialize)]
struct InnerJson {
    name: String,
    dim: usize,
    symbolic_ad: Vec<Vec<String>>,
    inner_basis: Vec<Vec<Vec<String>>>,
    inner_dim: usize,
}

fn cmd_inner(ctx: &Ctx<'_>, a: &AlgebraSpec) -> Outcome {
    let sym = symbolic_ad(a);
    let inner = inner_derivation_space(a);
    let basis = inner.basis();
    if ctx.json {
        return json_out(
            &InnerJson {
                name: a.name().into(),
                dim: a.dim(),
                symbolic_ad: sym.cells(),
                inner_basis: basis.iter().map(matrix_cells).collect(),
                inner_dim: inner.dim(),
            },
            EXIT_OK,
        );
    }
    let mut out = header(a);
    let w: Vec<String> = (1..=a.dim()).map(|t| format!("a_{t} e_{t}")).collect();
    let _ = writeln!(out, "ad_w for w = {} (column i is ad_w(e_i)):", w.join(" + "));
    for line in sym.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
    out.push_str("Inn basis:\n");
    push_matrices(&mut out, &basis);
    let _ = writeln!(out, "dim Inn = {}", inner.dim());
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct DerJson {
    name: String,
    dim: usize,
    der_basis: Vec<Vec<Vec<String>>>,
    der_dim: usize,
}

fn cmd_der(ctx: &Ctx<'_>, a: &AlgebraSpec) -> Outcome {
    let der = derivation_space(a);
    let basis = der.basis();
    if ctx.json {
        return json_out(
            &DerJson {
                name: a.name().into(),
                dim: a.dim(),
                der_basis: basis.iter().map(matrix_cells).collect(),
                der_dim: der.dim(),
            },
            EXIT_OK,
        );
    }
    let mut out = header(a);
    out.push_str("Der basis:\n");
    push_matrices(&mut out, &basis);
    let _ = writeln!(out, "dim Der = {}", der.dim());
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct AnnJson {
    basis: Vec<Vec<String>>,
    dim: usize,
    two_sided_ideal: bool,
    witness: Option<String>,
}

fn ann_json(a: &AlgebraSpec, s: &Subspace) -> Result<AnnJson, Error> {
    // b_i is the i-th basis vector of the subspace
    let witness = a.ideal_witness(s)?.map(|w| {
        let (b, e) = (w.basis_index + 1, w.element + 1);
        if w.left {
            format!("b_{b} * e_{e} = {}", w.product)
        } else {
            format!("e_{e} * b_{b} = {}", w.product)
        }
    });
    Ok(AnnJson {
        basis: s.basis().iter().map(vector_strings).collect(),
        dim: s.dim(),
        two_sided_ideal: witness.is_none(),
        witness,
    })
}

#[derive(Serialize)]
struct AnnReport {
    name: String,
    dim: usize,
    left: AnnJson,
    right: AnnJson,
}

fn cmd_ann(ctx: &Ctx<'_>, a: &AlgebraSpec) -> Outcome {
    let report = AnnReport {
        name: a.name().into(),
        dim: a.dim(),
        left: ann_json(a, &a.annihilator_left())?,
        right: ann_json(a, &a.annihilator_right())?,
    };
    if ctx.json {
        return json_out(&report, EXIT_OK);
    }
    let mut out = header(a);
    for (label, ann) in [("Ann_L = {u : u A = 0}", &report.left), ("Ann_R = {u : A u = 0}", &report.right)] {
        let _ = writeln!(out, "{label}, dim {}", ann.dim);
        for b in &ann.basis {
            let _ = writeln!(out, "  ({})", b.join(", "));
        }
        match &ann.witness {
            None => out.push_str("  two-sided ideal: yes\n"),
            Some(w) => {
                let _ = writeln!(out, "  two-sided ideal: no, {w} leaves the subspace");
            }
        }
    }
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct PropsJson {
    name: String,
    dim: usize,
    seed: u64,
    zinbiel: bool,
    der_dim: usize,
    inner_dim: usize,
    /// Every Der basis element passes the Leibniz check.
    der_basis_leibniz: bool,
    /// `[d, L_u] = L_{d(u)}` and `[d, R_u] = R_{d(u)}`.
    mult_operator_identity: bool,
    /// Der elements are derivations of the commutator algebra.
    lie_derivation: bool,
    inner_ideal: InnerIdealReport,
    /// Per generator `ad_{e_t}`: first Leibniz violation (1-based), if any.
    ad_generator_violations: Vec<Option<[usize; 2]>>,
    linearity_trials: usize,
    linearity: bool,
    jacobi_violations: Vec<[usize; 3]>,
    mult_operators: MultOperatorDiagnostic,
    all_required_hold: bool,
}

fn cmd_props(ctx: &Ctx<'_>, a: &AlgebraSpec, trials: usize) -> Outcome {
    let der = derivation_space(a).basis();
    let all = |f: &dyn Fn(&Matrix) -> Result<bool, Error>| -> Result<bool, Error> {
        for d in &der {
            if !f(d)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let der_basis_leibniz = all(&|d| is_derivation(a, d))?;
    let mult_operator_identity = all(&|d| check_mult_operator_identity(a, d))?;
    let lie_derivation = all(&|d| check_lie_derivation(a, d))?;
    let inner_ideal = check_inner_ideal(a);
    let ad_generator_violations = ad_generators(a)
        .iter()
        .map(|b| leibniz_violation(a, b).map(|v| v.map(|(i, j)| [i + 1, j + 1])))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rng = sampling::rng(ctx.seed);
    let linearity = ad_linearity_check(a, trials.max(1), &mut rng);
    let jacobi_violations = a
        .commutator()
        .check_jacobi()
        .expect("commutator algebras are antisymmetric")
        .into_iter()
        .map(|(i, j, k)| [i + 1, j + 1, k + 1])
        .collect();
    let all_required_hold =
        der_basis_leibniz && mult_operator_identity && lie_derivation && inner_ideal.identity_holds && linearity;
    let props = PropsJson {
        name: a.name().into(),
        dim: a.dim(),
        seed: ctx.seed,
        zinbiel: a.is_zinbiel(),
        der_dim: der.len(),
        inner_dim: inner_derivation_space(a).dim(),
        der_basis_leibniz,
        mult_operator_identity,
        lie_derivation,
        inner_ideal,
        ad_generator_violations,
        linearity_trials: trials.max(1),
        linearity,
        jacobi_violations,
        mult_operators: mult_operator_diagnostic(a),
        all_required_hold,
    };
    let code = exit_code(all_required_hold);
    if ctx.json {
        return json_out(&props, code);
    }
    let yn = |b: bool| if b { "yes" } else { "NO" };
    let mut out = header(a);
    let _ = writeln!(out, "Zinbiel identity:                         {}", yn(props.zinbiel));
    let _ = writeln!(out, "dim Der = {}, dim Inn = {}", props.der_dim, props.inner_dim);
    let _ = writeln!(out, "required (seed {}):", ctx.seed);
    let _ = writeln!(out, "  Der basis satisfies Leibniz:            {}", yn(der_basis_leibniz));
    let _ = writeln!(out, "  [d, L_u] = L_d(u), [d, R_u] = R_d(u):   {}", yn(mult_operator_identity));
    let _ = writeln!(out, "  d is a derivation of [,]:               {}", yn(lie_derivation));
    let _ = writeln!(out, "  [d, ad_e_t] = ad_d(e_t):                {}", yn(props.inner_ideal.identity_holds));
    let label = format!("ad linear in w ({} trials):", props.linearity_trials);
    let _ = writeln!(out, "  {label:<40}{}", yn(linearity));
    out.push_str("diagnostics:\n");
    let _ = writeln!(out, "  [Inn, Inn] inside Inn:                  {}", yn(props.inner_ideal.brackets_in_inner));
    let _ = writeln!(out, "  [Inn, Inn] = 0:                         {}", yn(props.inner_ideal.brackets_vanish));
    for (t, v) in props.ad_generator_violations.iter().enumerate() {
        match v {
            None => {
                let _ = writeln!(out, "  ad_e_{} is a derivation:                 yes", t + 1);
            }
            Some([i, j]) => {
                let _ = writeln!(out, "  ad_e_{} is a derivation:                 NO (fails on (e_{i}, e_{j}))", t + 1);
            }
        }
    }
    if props.jacobi_violations.is_empty() {
        out.push_str("  commutator satisfies Jacobi:            yes\n");
    } else {
        let _ =
            writeln!(out, "  commutator satisfies Jacobi:            NO ({} triples)", props.jacobi_violations.len());
    }
    let _ = writeln!(out, "  all L_u are derivations:                {}", yn(props.mult_operators.left_space_in_der));
    let _ = writeln!(out, "  all R_u are derivations:                {}", yn(props.mult_operators.right_space_in_der));
    Ok((out, code))
}

#[derive(Serialize)]
struct ListJson {
    id: &'static str,
    dim: usize,
    params: Vec<String>,
    table_status: catalog::TableStatus,
}

fn cmd_catalog_list(ctx: &Ctx<'_>) -> Outcome {
    let entries: Vec<ListJson> = CATALOG
        .iter()
        .map(|e| ListJson {
            id: e.id,
            dim: e.dim,
            params: e.params.iter().map(ToString::to_string).collect(),
            table_status: e.table_status,
        })
        .collect();
    if ctx.json {
        return json_out(&entries, EXIT_OK);
    }
    let cells: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            let mut row = vec![e.id.to_string(), format!("dim {}", e.dim), e.params.join(", ")];
            if e.table_status == catalog::TableStatus::Flagged {
                row.push("[flagged]".into());
            }
            row
        })
        .collect();
    Ok((align_columns(&cells), EXIT_OK))
}

fn parse_params(params: &[String]) -> Result<Bindings, Error> {
    let mut b = Bindings::new();
    for p in params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| Error::Parse { context: format!("--param {p}"), message: "expected NAME=VALUE".into() })?;
        b.insert(name.to_string(), value.parse()?);
    }
    Ok(b)
}

fn cmd_catalog_show(id: &str, params: &[String]) -> Outcome {
    let a = catalog::instantiate(id, &parse_params(params)?)?;
    Ok((emit_algebra(&a), EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["zinbiel"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn show(id: &str, params: &[&str]) -> String {
        let mut args = vec!["catalog", "show", id];
        for p in params {
            args.extend(["--param", p]);
        }
        let (code, out, _) = run_str(&args, "");
        assert_eq!(code, 0);
        out
    }

    #[test]
    fn inner_a3_4_via_stdin() {
        let (code, out, _) = run_str(&["inner", "-"], &show("A_3^4", &[]));
        assert_eq!(code, 0);
        assert!(out.contains("dim Inn = 2"), "{out}");
        assert!(out.lines().any(|l| l.trim() == "a_2  -a_1  0"), "{out}");
    }

    #[test]
    fn alpha_zero_a4_9() {
        let (code, out, _) = run_str(&["inner", "-"], &show("A_4^9", &["alpha=0"]));
        assert_eq!(code, 0);
        assert!(out.contains("dim Inn = 0"));
    }

    #[test]
    fn check_failure_exit_code() {
        let idem = r#"{"format":1,"name":"idem","dim":1,"products":[{"left":1,"right":1,"result":[{"basis":1,"coeff":"1"}]}]}"#;
        let (code, out, _) = run_str(&["check", "-"], idem);
        assert_eq!(code, 1);
        assert!(out.contains("(1, 1, 1): residual (-1)"));
    }

    #[test]
    fn input_errors() {
        assert_eq!(run_str(&["frobnicate"], "").0, 2);
        assert_eq!(run_str(&["inner", "-"], "{").0, 2);
        let (code, _, err) = run_str(&["catalog", "show", "A_3^6", "--param", "lambda=0"], "");
        assert_eq!(code, 2);
        assert!(err.contains("constraint violated"));
        assert_eq!(run_str(&["catalog", "show", "A_3^6", "--param", "lambda"], "").0, 2);
        assert_eq!(run_str(&["catalog", "show", "A_3^6", "--param", "lambda=1/0"], "").0, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("catalog"));
    }

    #[test]
    fn props_counterexample_is_a_diagnostic() {
        let (code, out, _) = run_str(&["props", "-"], &show("A_4^1", &[]));
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("ad_e_1 is a derivation:                 NO (fails on (e_1, e_1))"), "{out}");
    }
}
