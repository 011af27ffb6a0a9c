//! Command-line interface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gzschubert_core::chars::{demazure_character, hilbert_function, Method};
use gzschubert_core::error::Error;
use gzschubert_core::gz::{enumerate_reduced_kogan, schubert_fk, FaceDiagram, StrictWeight};
use gzschubert_core::mitosis::{mirror_mitosis, mitosis_of_permutation};
use gzschubert_core::perm::{Permutation, Word};
use gzschubert_core::poly::{schubert_bgg, IntPoly};
use gzschubert_core::ring::{
    degree_by_volumes, degree_polynomial, richardson_vertices, structure_constant,
    structure_constant_by_divided_differences,
};
use serde_json::{json, Value};

use crate::formats::{character_to_json, rational_string, DegreeJson, FaceJson, PolyJson};
use crate::verify::{run_suite, SUITES};

/// Largest rank accepted without `--allow-large`.
pub const MAX_N: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "gzschubert", version, about = "Schubert calculus on Gelfand-Zetlin polytopes")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Accept ranks above 7.
    #[arg(long, global = true)]
    pub allow_large: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct PermArgs {
    /// Permutation in one-line notation, e.g. 3,2,1.
    #[arg(long)]
    pub perm: Option<String>,
    /// Reduced or unreduced word, e.g. 1,2,1; needs --n.
    #[arg(long)]
    pub word: Option<String>,
    /// Rank for --word.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchubertMethod {
    Bgg,
    Fk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharacterMethod {
    Faces,
    Operators,
    DualFaces,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schubert polynomial of a permutation.
    Schubert {
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long, value_enum, default_value_t = SchubertMethod::Bgg)]
        method: SchubertMethod,
    },
    /// Reduced Kogan faces (or dual Kogan faces) of a permutation.
    Faces {
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long)]
        dual: bool,
    },
    /// Mirror mitosis at a row, of all faces of a permutation or of one face.
    Mitosis {
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long)]
        row: usize,
        /// A single face as JSON, e.g. {"n":3,"edges":[[0,1,"L"]]}.
        #[arg(long)]
        face: Option<String>,
    },
    /// Demazure character of a weight and permutation.
    Character {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long, value_enum, default_value_t = CharacterMethod::Faces)]
        method: CharacterMethod,
    },
    /// Lattice points in the union of the k-th dilated faces.
    Hilbert {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long)]
        k: i64,
    },
    /// Degree polynomial at a weight, by operators and by face volumes.
    Degree {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        perm: PermArgs,
    },
    /// Structure constant c_{w,u}^v.
    Structure {
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Vertex count of pairs of complementary faces against c_{w,u}^{w0}.
    Richardson {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        u: String,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
    },
}

/// An input or computation error, reported as
/// `{"error": {"kind": .., "message": ..}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind, "message": self.message}})
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::InvalidPermutation(_) | Error::LetterOutOfRange { .. } => "invalid_permutation",
            Error::NotStrictlyDominant(_) => "not_strictly_dominant",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::LengthMismatch(_) => "length_mismatch",
            Error::InvalidFace(_) | Error::MixedFace | Error::NotReducedKogan => "invalid_face",
            Error::RowOutOfRange { .. } => "row_out_of_range",
            _ => "computation",
        };
        CliError::new(kind, e.to_string())
    }
}

/// Result of a command: the JSON value, its text rendering and whether a
/// `verify` suite passed.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, success: true }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
            Format::Text => self.text.clone(),
        }
    }
}

fn check_n(n: usize, allow_large: bool) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::new("n_out_of_range", "rank must be positive"));
    }
    if n > MAX_N && !allow_large {
        return Err(CliError::new("n_out_of_range", format!("n = {} exceeds {}; pass --allow-large", n, MAX_N)));
    }
    Ok(())
}

fn parse_perm(s: &str, allow_large: bool) -> Result<Permutation, CliError> {
    let w: Permutation = s.parse()?;
    check_n(w.n(), allow_large)?;
    Ok(w)
}

impl PermArgs {
    fn resolve(&self, allow_large: bool) -> Result<Permutation, CliError> {
        match (&self.perm, &self.word) {
            (Some(p), None) => {
                let w = parse_perm(p, allow_large)?;
                if let Some(n) = self.n {
                    if n != w.n() {
                        return Err(Error::RankMismatch { expected: n, got: w.n() }.into());
                    }
                }
                Ok(w)
            }
            (None, Some(word)) => {
                let n = self.n.ok_or_else(|| CliError::new("invalid_permutation", "--word needs --n"))?;
                check_n(n, allow_large)?;
                let word: Word = word.parse()?;
                Ok(Permutation::from_word(n, &word)?)
            }
            _ => Err(CliError::new("invalid_permutation", "give exactly one of --perm and --word")),
        }
    }
}

fn parse_lambda(s: &str, allow_large: bool) -> Result<StrictWeight, CliError> {
    let l: StrictWeight = s.parse()?;
    check_n(l.n(), allow_large)?;
    Ok(l)
}

fn same_rank(lambda: &StrictWeight, w: &Permutation) -> Result<(), CliError> {
    if lambda.n() != w.n() {
        return Err(Error::RankMismatch { expected: lambda.n(), got: w.n() }.into());
    }
    Ok(())
}

fn faces_json(faces: &[FaceDiagram]) -> Value {
    json!(faces.iter().map(FaceJson::from).collect::<Vec<_>>())
}

fn faces_text(faces: &[FaceDiagram]) -> String {
    faces.iter().map(|f| format!("{}\n", f)).collect()
}

fn poly_text(p: &IntPoly) -> String {
    format!("{}\n", p)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let big = cli.allow_large;
    match &cli.command {
        Command::Schubert { perm, method } => {
            let w = perm.resolve(big)?;
            let p = match method {
                SchubertMethod::Bgg => schubert_bgg(&w)?,
                SchubertMethod::Fk => schubert_fk(&w),
            };
            Ok(Output::ok(json!(PolyJson::from(&p)), poly_text(&p)))
        }
        Command::Faces { perm, dual } => {
            let w = perm.resolve(big)?;
            let faces = enumerate_reduced_kogan(&w, *dual);
            Ok(Output::ok(
                json!({"perm": w.image(), "dual": dual, "faces": faces_json(&faces)}),
                faces_text(&faces),
            ))
        }
        Command::Mitosis { perm, row, face } => {
            let (w, faces): (Permutation, Vec<FaceDiagram>) = match face {
                Some(text) => {
                    let j: FaceJson = serde_json::from_str(text)
                        .map_err(|e| CliError::new("invalid_face", format!("face JSON: {}", e)))?;
                    check_n(j.n, big)?;
                    let f = FaceDiagram::try_from(&j)?;
                    (f.permutation()?, mirror_mitosis(&f, *row)?.into_iter().collect())
                }
                None => {
                    let w = perm.resolve(big)?;
                    (w.clone(), mitosis_of_permutation(&w, *row)?.into_iter().collect())
                }
            };
            let next = if w.has_left_descent(*row) { Some(w.left_mul_simple(*row)?) } else { None };
            Ok(Output::ok(
                json!({
                    "perm": w.image(),
                    "row": row,
                    "result": next.as_ref().map(|v| v.image().to_vec()),
                    "faces": faces_json(&faces),
                }),
                faces_text(&faces),
            ))
        }
        Command::Character { lambda, perm, method } => {
            let lambda = parse_lambda(lambda, big)?;
            let w = perm.resolve(big)?;
            same_rank(&lambda, &w)?;
            let (m, name) = match method {
                CharacterMethod::Faces => (Method::Faces, "faces"),
                CharacterMethod::Operators => (Method::Operators, "operators"),
                CharacterMethod::DualFaces => (Method::DualFaces, "dual_faces"),
            };
            let c = demazure_character(&lambda, &w, m)?;
            let terms = character_to_json(&c)?;
            let text = terms.iter().map(|t| format!("{} e^{:?}\n", t.mult, t.u)).collect();
            Ok(Output::ok(
                json!({
                    "lambda": lambda.values(),
                    "perm": w.image(),
                    "method": name,
                    "total": c.total().to_string(),
                    "character": terms,
                }),
                text,
            ))
        }
        Command::Hilbert { lambda, perm, k } => {
            let lambda = parse_lambda(lambda, big)?;
            let w = perm.resolve(big)?;
            same_rank(&lambda, &w)?;
            let h = hilbert_function(&lambda, &w, *k)?;
            Ok(Output::ok(
                json!({"lambda": lambda.values(), "perm": w.image(), "k": k, "value": h.to_string()}),
                format!("{}\n", h),
            ))
        }
        Command::Degree { lambda, perm } => {
            let lambda = parse_lambda(lambda, big)?;
            let w = perm.resolve(big)?;
            same_rank(&lambda, &w)?;
            let point: Vec<_> = lambda.values().iter().map(|&v| num_rational::BigRational::from_integer(v.into())).collect();
            let op = degree_polynomial(&w)?.evaluate(&point)?;
            let d = DegreeJson {
                lambda: lambda.values().to_vec(),
                perm: w.image().to_vec(),
                operator: rational_string(&op),
                volume: rational_string(&degree_by_volumes(&w, &lambda, false)?),
                dual_volume: rational_string(&degree_by_volumes(&w, &lambda, true)?),
            };
            let text = format!("operator {}\nvolume {}\ndual volume {}\n", d.operator, d.volume, d.dual_volume);
            Ok(Output::ok(json!(d), text))
        }
        Command::Structure { w, u, v } => {
            let (w, u, v) = (parse_perm(w, big)?, parse_perm(u, big)?, parse_perm(v, big)?);
            let c = structure_constant(&w, &u, &v)?;
            let oracle = structure_constant_by_divided_differences(&w, &u, &v)?;
            Ok(Output::ok(
                json!({"w": w.image(), "u": u.image(), "v": v.image(), "c": c.to_string(), "oracle": oracle.to_string()}),
                format!("{}\n", c),
            ))
        }
        Command::Richardson { lambda, w, u } => {
            let lambda = parse_lambda(lambda, big)?;
            let (w, u) = (parse_perm(w, big)?, parse_perm(u, big)?);
            same_rank(&lambda, &w)?;
            let n = w.n();
            let vertices = richardson_vertices(&w, &u, &lambda)?;
            let c = structure_constant(&w, &u, &Permutation::longest(n))?;
            let agree = num_bigint::BigInt::from(vertices.len()) == c;
            Ok(Output::ok(
                json!({
                    "lambda": lambda.values(),
                    "w": w.image(),
                    "u": u.image(),
                    "count": vertices.len(),
                    "structure_constant": c.to_string(),
                    "agree": agree,
                    "vertices": faces_json(&vertices),
                }),
                format!("count {}\nstructure constant {}\n", vertices.len(), c),
            ))
        }
        Command::Verify { suite, n, lambda } => {
            if let Some(n) = n {
                check_n(*n, big)?;
            }
            let weights = lambda.as_deref().map(|l| parse_lambda(l, big).map(|l| vec![l])).transpose()?;
            let report = run_suite(suite, *n, weights).ok_or_else(|| {
                CliError::new("unknown_suite", format!("unknown suite {:?}; expected one of {}", suite, SUITES.join(", ")))
            })?;
            let status = if report.passed() { "PASS" } else { "FAIL" };
            let mut text = format!("{} {}: {} checks in {} ms\n", status, report.suite, report.checks, report.millis);
            for f in &report.failures {
                text += &format!("  failure: {}\n", f);
            }
            for f in &report.refuted {
                text += &format!("  refuted as written: {}\n", f);
            }
            for f in &report.findings {
                text += &format!("  finding: {}\n", f);
            }
            let success = report.passed();
            Ok(Output { json: json!(report), text, success })
        }
    }
}

/// Parses arguments, runs the command, writes the output and returns the
/// exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e);
                return 0;
            }
            let err = CliError::new("usage", e.to_string().trim().to_string());
            println!("{}", err.to_json());
            return 1;
        }
    };
    let (body, code) = match run(&cli) {
        Ok(out) => (out.render(cli.format), if out.success { 0 } else { 1 }),
        Err(e) => {
            let body = match cli.format {
                Format::Json => format!("{}\n", e.to_json()),
                Format::Text => format!("error ({}): {}\n", e.kind, e.message),
            };
            (body, 1)
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                println!("{}", CliError::new("io", format!("{}: {}", path.display(), e)).to_json());
                return 1;
            }
        }
        None => print!("{}", body),
    }
    code
}
