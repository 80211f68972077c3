//! The `jj` command line. `run` takes the full argv and returns the exit code with the
//! text that `main` writes to stdout and stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use jj_core::algebra::{is_isomorphism, JJAlgebra, LinearMap};
use jj_core::bilinear::{
    compatible_form_space, double_extension, find_nondegenerate, i_isometry_check, pull_back, structure_survey,
    verify_form, BilinearForm, FormKind, SpecialAdmissiblePair, SurveyRow,
};
use jj_core::catalog::{catalog, names_of_dim, normalize_name, NAMES};
use jj_core::cohomology::Cohomology;
use jj_core::deformation::{
    check_deformation, classify_with, graph_to_dot, jump_graph, parse_vector, specialize, verify_jump,
    InfinitesimalClass,
};
use jj_core::io::{
    algebra_from_json, deformation_from_json, form_from_json, versal_to_json, witness_from_json, AlgebraJson,
    FormJson,
};
use jj_core::linalg::{fmt_scalar, parse_scalar, zeros, Matrix, Scalar};
use jj_core::poly::{vector_to_string, Poly};
use jj_core::reference;
use jj_core::versal::{
    extend_to_second_order, universal_infinitesimal, universal_infinitesimal_with, versal_multiplication_table,
    MultiParamDeformation,
};
use jj_core::{Error, SymCochain};

/// What `main` prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownAlgebra(_) | Error::Index(_) | Error::Dimension { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Command output plus whether every check it ran held.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    #[default]
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Symplectic,
    Pseudo,
}

impl From<Kind> for FormKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Symplectic => FormKind::Symplectic,
            Kind::Pseudo => FormKind::PseudoEuclidean,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Reps {
    /// The bundled representative lists, falling back to computed ones.
    #[default]
    Reference,
    /// A basis of H² computed from the complement of B² in Z².
    Computed,
}

#[derive(Parser, Debug)]
#[command(name = "jj", version, about = "Cohomology, deformations and forms of Jacobi-Jordan algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Source {
    /// Catalog name such as J_1_2+F or "J_{1,2}".
    name: Option<String>,
    /// JSON algebra instead of a catalog name.
    #[arg(long, value_name = "PATH")]
    algebra_file: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalog, or print one algebra.
    Catalog {
        name: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the JJ identity and optional forms, deformations and basis changes.
    Verify(VerifyArgs),
    /// dim Z², B², H² and representatives.
    Cohomology(CohomologyArgs),
    /// Classify infinitesimal deformations by their obstructions.
    Classify(ClassifyArgs),
    /// Universal infinitesimal deformation, relations and versal table.
    Versal(VersalArgs),
    /// Compatible symplectic or pseudo-euclidean forms.
    Forms(FormsArgs),
    /// Symplectic double extension by a special admissible pair.
    Doubleext(DoubleextArgs),
    /// Jump-deformation diagram in dimension 3, 4 or 5.
    Graph {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t)]
        format: GraphFormat,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Form JSON to check against the algebra.
    #[arg(long, value_name = "PATH")]
    form: Option<String>,
    /// Deformation JSON; its base replaces the algebra argument.
    #[arg(long, value_name = "PATH")]
    deformation: Option<String>,
    /// Parameter value at which to specialize the deformation.
    #[arg(long, allow_hyphen_values = true)]
    t0: Option<String>,
    /// Basis change JSON mapping the target's basis into the algebra.
    #[arg(long, value_name = "PATH")]
    witness: Option<String>,
    #[arg(long)]
    target: Option<String>,
    /// Form JSON on the target, for an isometry check along the witness.
    #[arg(long, value_name = "PATH")]
    target_form: Option<String>,
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    names: Vec<String>,
    /// One row per algebra without representatives.
    #[arg(long)]
    table: bool,
    /// Include every catalog algebra of these dimensions.
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    source: Source,
    /// Cocycle in e^{i,j}_k notation; repeatable. Defaults to the representatives.
    #[arg(long, allow_hyphen_values = true)]
    cocycle: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    reps: Reps,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VersalArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t)]
    reps: Reps,
    /// 1 stops at the universal infinitesimal deformation.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
    order: u8,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct FormsArgs {
    /// Algebras to survey; every catalog algebra when empty.
    names: Vec<String>,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct DoubleextArgs {
    #[command(flatten)]
    source: Source,
    /// Symplectic form JSON; defaults to the standard form on an abelian algebra
    /// and to a solver witness otherwise.
    #[arg(long, value_name = "PATH")]
    form: Option<String>,
    /// A₀ as a vector, e.g. e1 or 1/2e1-e2.
    #[arg(long, allow_hyphen_values = true)]
    a0: Option<String>,
    /// Images D(e1);D(e2);… with 0 for the zero vector.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    /// Catalog algebra the result should be isomorphic to.
    #[arg(long)]
    target: Option<String>,
    /// Basis change JSON mapping the target's basis into the extension.
    #[arg(long, value_name = "PATH")]
    witness: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => Output { code: if r.ok { EXIT_OK } else { EXIT_FAILED }, stdout: r.text, stderr: String::new() },
        Err(Failure::Usage(m)) => Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Domain(m)) => Output { code: EXIT_FAILED, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn dispatch(c: Command) -> Res<Report> {
    match c {
        Command::Catalog { name, format } => cmd_catalog(name, format),
        Command::Verify(a) => cmd_verify(a),
        Command::Cohomology(a) => cmd_cohomology(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Versal(a) => cmd_versal(a),
        Command::Forms(a) => cmd_forms(a),
        Command::Doubleext(a) => cmd_doubleext(a),
        Command::Graph { dim, format } => cmd_graph(dim, format),
    }
}

fn read(path: &str) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load(source: &Source) -> Res<JJAlgebra> {
    match (&source.name, &source.algebra_file) {
        (Some(n), None) => Ok(catalog(n)?),
        (None, Some(p)) => Ok(algebra_from_json(&read(p)?)?),
        (Some(_), Some(_)) => Err(Failure::Usage("give either a name or --algebra-file, not both".into())),
        (None, None) => Err(Failure::Usage("an algebra name or --algebra-file is required".into())),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn vector_string(v: &[Scalar]) -> String {
    let p: Vec<Poly> = v.iter().map(|c| Poly::constant(0, c.clone())).collect();
    vector_to_string(&p)
}

fn products_string(a: &JJAlgebra) -> String {
    let parts: Vec<String> = a
        .nonzero_products()
        .into_iter()
        .map(|(i, j, v)| {
            let pair = if i == j { format!("e{}^2", i + 1) } else { format!("e{}e{}", i + 1, j + 1) };
            format!("{pair} = {}", vector_string(v))
        })
        .collect();
    if parts.is_empty() {
        "abelian".into()
    } else {
        parts.join(", ")
    }
}

fn matrix_lines(m: &Matrix, indent: &str) -> String {
    let mut s = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(fmt_scalar).collect();
        let _ = writeln!(s, "{indent}{}", row.join(" "));
    }
    s
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

/// `e1+e2`, `1/2e3`, or `0`.
fn vector_arg(dim: usize, text: &str) -> Res<Vec<Scalar>> {
    if text.trim() == "0" {
        return Ok(zeros(dim));
    }
    Ok(parse_vector(dim, text)?)
}

fn cmd_catalog(name: Option<String>, format: Format) -> Res<Report> {
    let algebras: Vec<JJAlgebra> = match &name {
        Some(n) => vec![catalog(n)?],
        None => NAMES.iter().map(|n| catalog(n)).collect::<Result<_, _>>()?,
    };
    let text = match format {
        Format::Json if name.is_some() => to_json(&AlgebraJson::from(&algebras[0])),
        Format::Json => to_json(&algebras.iter().map(AlgebraJson::from).collect::<Vec<_>>()),
        Format::Csv => {
            let mut s = String::from("algebra,dim,products\n");
            for a in &algebras {
                let _ = writeln!(s, "{},{},{}", a.name(), a.dim(), csv_field(&products_string(a)));
            }
            s
        }
        Format::Text => {
            let width = algebras.iter().map(|a| a.name().len()).max().unwrap_or(0);
            let mut s = String::new();
            for a in &algebras {
                let _ = writeln!(s, "{:width$}  {}  {}", a.name(), a.dim(), products_string(a));
            }
            s
        }
    };
    Ok(Report::ok(text))
}

fn cmd_verify(args: VerifyArgs) -> Res<Report> {
    let deformation = args.deformation.as_deref().map(read).transpose()?.map(|s| deformation_from_json(&s)).transpose()?;
    let a = match &deformation {
        Some(d) if args.source.name.is_none() && args.source.algebra_file.is_none() => d.base().clone(),
        Some(_) => return Err(Failure::Usage("--deformation carries its own base algebra".into())),
        None => load(&args.source)?,
    };
    let t0 = args.t0.as_deref().map(parse_scalar).transpose()?;
    if t0.is_some() && deformation.is_none() {
        return Err(Failure::Usage("--t0 needs --deformation".into()));
    }
    if args.witness.is_some() != args.target.is_some() {
        return Err(Failure::Usage("--witness and --target go together".into()));
    }
    if args.target_form.is_some() && (args.witness.is_none() || args.form.is_none()) {
        return Err(Failure::Usage("--target-form needs --form, --witness and --target".into()));
    }

    let mut checks: Vec<(String, bool)> = Vec::new();
    let jj = a.is_jj();
    checks.push(("JJ".into(), jj));
    let leibniz = a.is_leibniz();

    let form = args.form.as_deref().map(read).transpose()?.map(|s| form_from_json(&s)).transpose()?;
    if let Some(f) = &form {
        checks.push((format!("{} form", f.kind.as_str()), verify_form(&a, f)));
    }
    if let Some(d) = &deformation {
        checks.push((format!("deformation to order {}", d.order()), check_deformation(d).is_empty()));
        if let (Some(t), None) = (&t0, &args.witness) {
            checks.push((format!("specialization at t = {t}"), specialize(d, t).is_ok()));
        }
    }
    if let (Some(w), Some(tname)) = (&args.witness, &args.target) {
        let p = witness_from_json(&read(w)?)?;
        let target = catalog(tname)?;
        if p.dim() != target.dim() || target.dim() != a.dim() {
            return Err(Failure::Usage("witness, target and algebra dimensions differ".into()));
        }
        match (&deformation, &t0) {
            (Some(d), Some(t)) => {
                checks.push((format!("jump to {} at t = {t}", target.name()), verify_jump(d, t, &p, &target)))
            }
            _ => checks.push((format!("isomorphism from {}", target.name()), is_isomorphism(&p, &target, &a))),
        }
        if let (Some(f), Some(tf)) = (&form, &args.target_form) {
            let g = form_from_json(&read(tf)?)?;
            checks.push(("isometry".into(), i_isometry_check(&p, &target, &g, &a, f)?));
        }
    }

    let mut parts: Vec<String> = checks.iter().map(|(n, ok)| format!("{n}: {}", verdict(*ok))).collect();
    parts.insert(1, format!("Leibniz: {}", verdict(leibniz)));
    Ok(Report { text: format!("{}\n", parts.join("; ")), ok: checks.iter().all(|(_, ok)| *ok) })
}

/// One row of `jj cohomology`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRow {
    pub algebra: String,
    pub dim: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub representatives: Vec<String>,
}

fn cmd_cohomology(args: CohomologyArgs) -> Res<Report> {
    let mut names: Vec<String> = Vec::new();
    for n in &args.names {
        names.push(catalog(n)?.name().to_string());
    }
    for &d in &args.dims {
        names.extend(names_of_dim(d).into_iter().map(String::from));
    }
    if names.is_empty() && args.table {
        names = NAMES.iter().map(|n| n.to_string()).collect();
    }
    if names.is_empty() {
        return Err(Failure::Usage("no algebras selected; give names, --dims or --table".into()));
    }
    let with_reps = !args.table;
    let rows: Vec<CohomologyRow> = names
        .par_iter()
        .map(|n| {
            let a = catalog(n).expect("normalized above");
            let h = Cohomology::new(&a);
            let s = h.summary();
            CohomologyRow {
                algebra: s.name,
                dim: a.dim(),
                dim_z2: s.dim_z2,
                dim_b2: s.dim_b2,
                dim_h2: s.dim_h2,
                representatives: if with_reps { s.representatives.iter().map(|r| r.to_notation()).collect() } else { vec![] },
            }
        })
        .collect();
    let text = match args.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("algebra,dim,dim_z2,dim_b2,dim_h2\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{},{},{}", r.algebra, r.dim, r.dim_z2, r.dim_b2, r.dim_h2);
            }
            s
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.algebra.len()).max().unwrap_or(0).max("algebra".len());
            let mut s = format!("{:width$}  dim  Z2  B2  H2\n", "algebra");
            for r in &rows {
                let _ = writeln!(s, "{:width$}  {:>3}  {:>2}  {:>2}  {:>2}", r.algebra, r.dim, r.dim_z2, r.dim_b2, r.dim_h2);
                for rep in &r.representatives {
                    let _ = writeln!(s, "    {rep}");
                }
            }
            s
        }
    };
    Ok(Report::ok(text))
}

fn representatives(a: &JJAlgebra, h: &Cohomology, reps: Reps) -> Res<Vec<SymCochain>> {
    match (reps, reference::representatives(&normalize_name(a.name()))) {
        (Reps::Reference, Some(list)) if list.len() == h.dim_h2() => {
            Ok(list.iter().map(|s| SymCochain::parse(a.dim(), s)).collect::<Result<_, _>>()?)
        }
        _ => Ok(h.representatives()),
    }
}

/// One row of `jj classify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub cocycle: String,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second: Option<String>,
}

fn cmd_classify(args: ClassifyArgs) -> Res<Report> {
    let a = load(&args.source)?;
    let h = Cohomology::new(&a);
    let phis: Vec<SymCochain> = if args.cocycle.is_empty() {
        representatives(&a, &h, args.reps)?
    } else {
        args.cocycle.iter().map(|s| SymCochain::parse(a.dim(), s)).collect::<Result<_, _>>()?
    };
    let rows: Vec<ClassifyRow> = phis
        .par_iter()
        .map(|phi| {
            let class = classify_with(&h, phi)?;
            let (witness, second) = match &class {
                InfinitesimalClass::Order2ThenObstructed { witness } => (Some(witness.to_notation()), None),
                InfinitesimalClass::ExtendsPastOrder3 { witness, second } => {
                    (Some(witness.to_notation()), Some(second.to_notation()))
                }
                _ => (None, None),
            };
            Ok(ClassifyRow { cocycle: phi.to_notation(), class: class.label().into(), witness, second })
        })
        .collect::<Result<_, Error>>()?;
    let text = match args.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("cocycle,class,witness,second\n");
            for r in &rows {
                let f = |o: &Option<String>| csv_field(o.as_deref().unwrap_or(""));
                let _ = writeln!(s, "{},{},{},{}", csv_field(&r.cocycle), r.class, f(&r.witness), f(&r.second));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = write!(s, "{}: {}", r.cocycle, r.class);
                if let Some(w) = &r.witness {
                    let _ = write!(s, " (phi2 = {w}");
                    if let Some(x) = &r.second {
                        let _ = write!(s, ", extended by {x}");
                    }
                    s.push(')');
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Report::ok(text))
}

fn versal_text(m: &MultiParamDeformation) -> String {
    let mut s = format!("algebra: {}\nparameters: {} ({})\n", m.base().name(), m.n_params(), m.truncation().as_str());
    s.push_str("first order:\n");
    for (k, phi) in m.first_order().iter().enumerate() {
        let _ = writeln!(s, "  t{}: {}", k + 1, phi.to_notation());
    }
    let rel: Vec<String> = m.relations().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "relations: {}", if rel.is_empty() { "none".into() } else { rel.join(", ") });
    if !m.corrections().is_empty() {
        s.push_str("corrections:\n");
        for (&(i, j), c) in m.corrections() {
            let _ = writeln!(s, "  {}: {}", Poly::quadratic(m.n_params(), i, j), c.to_notation());
        }
    }
    s.push_str("table:\n");
    s.push_str(&versal_multiplication_table(m).to_string());
    s
}

fn cmd_versal(args: VersalArgs) -> Res<Report> {
    if args.format == Format::Csv {
        return Err(Failure::Usage("versal reports come as text or json".into()));
    }
    let a = load(&args.source)?;
    let m = match args.reps {
        Reps::Computed => universal_infinitesimal(&a),
        Reps::Reference => {
            let h = Cohomology::new(&a);
            universal_infinitesimal_with(&a, representatives(&a, &h, Reps::Reference)?)?
        }
    };
    let m = if args.order == 2 { extend_to_second_order(&m)? } else { m };
    let text = match args.format {
        Format::Json => {
            let mut s = versal_to_json(&m);
            s.push('\n');
            s
        }
        _ => versal_text(&m),
    };
    Ok(Report::ok(text))
}

/// One row of `jj forms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRow {
    pub algebra: String,
    pub dim: usize,
    pub kind: String,
    pub compatible_dim: usize,
    pub exists: bool,
    pub certificate: String,
    pub witness: Option<FormJson>,
}

fn form_json(f: &BilinearForm) -> FormJson {
    FormJson {
        kind: f.kind.as_str().into(),
        matrix: (0..f.matrix.rows()).map(|r| f.matrix.row(r).iter().map(fmt_scalar).collect()).collect(),
    }
}

fn cmd_forms(args: FormsArgs) -> Res<Report> {
    let kind: FormKind = args.kind.into();
    let names: Vec<String> = if args.names.is_empty() {
        NAMES.iter().map(|n| n.to_string()).collect()
    } else {
        args.names.iter().map(|n| catalog(n).map(|a| a.name().to_string())).collect::<Result<_, _>>()?
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let survey: Vec<SurveyRow> = structure_survey(&refs, kind)?;
    let rows: Vec<FormRow> = survey
        .iter()
        .map(|r| FormRow {
            algebra: r.name.clone(),
            dim: r.dim,
            kind: kind.as_str().into(),
            compatible_dim: r.space_dim,
            exists: r.exists(),
            certificate: r.certificate(),
            witness: r.witness.as_ref().map(form_json),
        })
        .collect();
    let text = match args.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("algebra,dim,kind,compatible_dim,exists,certificate\n");
            for r in &rows {
                let _ =
                    writeln!(s, "{},{},{},{},{},{}", r.algebra, r.dim, r.kind, r.compatible_dim, r.exists, csv_field(&r.certificate));
            }
            s
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.algebra.len()).max().unwrap_or(0);
            let mut s = String::new();
            for (r, sr) in rows.iter().zip(&survey) {
                let _ = writeln!(s, "{:width$}  {}  {}", r.algebra, if r.exists { "yes" } else { "no " }, r.certificate);
                if let Some(w) = &sr.witness {
                    s.push_str(&matrix_lines(&w.matrix, "    "));
                }
            }
            s
        }
    };
    Ok(Report::ok(text))
}

/// Output of `jj doubleext`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleExtJson {
    pub algebra: AlgebraJson,
    pub form: FormJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isomorphic_to_target: Option<bool>,
}

fn default_form(a: &JJAlgebra) -> Res<BilinearForm> {
    if a.is_abelian() && a.dim().is_multiple_of(2) {
        return Ok(BilinearForm::standard_symplectic(a.dim() / 2));
    }
    find_nondegenerate(&compatible_form_space(a, FormKind::Symplectic), FormKind::Symplectic)
        .ok_or_else(|| Failure::Domain(format!("{} carries no symplectic form", a.name())))
}

fn cmd_doubleext(args: DoubleextArgs) -> Res<Report> {
    if args.format == Format::Csv {
        return Err(Failure::Usage("double extensions come as text or json".into()));
    }
    if args.witness.is_some() != args.target.is_some() {
        return Err(Failure::Usage("--witness and --target go together".into()));
    }
    let a = load(&args.source)?;
    let m = a.dim();
    let omega = match &args.form {
        Some(p) => form_from_json(&read(p)?)?,
        None => default_form(&a)?,
    };
    if omega.kind != FormKind::Symplectic || omega.dim() != m {
        return Err(Failure::Usage(format!("need a symplectic form of dimension {m}")));
    }
    let a0 = match &args.a0 {
        Some(s) => vector_arg(m, s)?,
        None => zeros(m),
    };
    let d_map = match &args.d {
        Some(s) => {
            let images: Vec<Vec<Scalar>> = s.split(';').map(|v| vector_arg(m, v)).collect::<Res<_>>()?;
            if images.len() != m {
                return Err(Failure::Usage(format!("--d needs {m} images separated by ';'")));
            }
            LinearMap::from_images(&images)
        }
        None => LinearMap::zero(m),
    };
    let pair = SpecialAdmissiblePair { d_map, a0 };
    let (de, form) = double_extension(&a, &omega, &pair)?;
    let check = match (&args.witness, &args.target) {
        (Some(w), Some(t)) => {
            let p = witness_from_json(&read(w)?)?;
            let target = catalog(t)?;
            if p.dim() != de.dim() || target.dim() != de.dim() {
                return Err(Failure::Usage(format!("witness and target must have dimension {}", de.dim())));
            }
            let iso = is_isomorphism(&p, &target, &de);
            Some((target.name().to_string(), iso, iso && verify_form(&target, &pull_back(&form, &p))))
        }
        _ => None,
    };
    let ok = check.as_ref().map(|c| c.1 && c.2).unwrap_or(true);
    let text = match args.format {
        Format::Json => to_json(&DoubleExtJson {
            algebra: AlgebraJson::from(&de),
            form: form_json(&form),
            isomorphic_to_target: check.as_ref().map(|c| c.1),
        }),
        _ => {
            let mut s = format!("{}: e1 = e, e2..e{} from the base, e{} = e*\n", de.name(), m + 1, m + 2);
            let _ = writeln!(s, "products: {}", products_string(&de));
            s.push_str("form:\n");
            s.push_str(&matrix_lines(&form.matrix, "    "));
            if let Some((t, iso, pulled)) = &check {
                let _ = writeln!(s, "isomorphic to {t}: {}; pulled-back form: {}", verdict(*iso), verdict(*pulled));
            }
            s
        }
    };
    Ok(Report { text, ok })
}

/// Output of `jj graph --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub dim: usize,
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub source: String,
    pub target: String,
    pub status: String,
    pub note: String,
}

fn cmd_graph(dim: usize, format: GraphFormat) -> Res<Report> {
    if reference::jump_edges(dim).is_none() {
        return Err(Failure::Usage(format!("no jump diagram in dimension {dim}; use 3, 4 or 5")));
    }
    let edges = jump_graph(dim)?;
    let text = match format {
        GraphFormat::Dot => graph_to_dot(dim, &edges),
        GraphFormat::Json => to_json(&GraphJson {
            dim,
            nodes: names_of_dim(dim).into_iter().map(String::from).collect(),
            edges: edges
                .iter()
                .map(|e| EdgeJson {
                    source: e.source.clone(),
                    target: e.target.clone(),
                    status: e.status.as_str().into(),
                    note: e.note.clone(),
                })
                .collect(),
        }),
    };
    Ok(Report::ok(text))
}
