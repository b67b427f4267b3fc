//! The `svkan` command line: every operation as a subcommand reading and
//! writing canonical JSON.
//!
//! Exit status 0 means success, 1 means a mathematical check came out false
//! (a non-Kan horn, a violated identity, ...), 2 means the input could not be
//! used.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::affine::{
    build_example_5_1, horn_profile, local_kan_check, tangent_at_base, validate_affine, AffineSimplicialObject,
};
use crate::error::{Error, Result};
use crate::formats::{self, canonical_string, read_json, schema_of, FromJson, ToJson};
use crate::kan::{
    check_generalized_kan, fill_generalized_horn, fill_horn_linear, generalized_kan_report, horn_space_direct,
    horn_space_recursive, kan_report, HornCheck, HornElement, HornIndex, KanReport,
};
use crate::linalg::subspace_equal;
use crate::normalization::{
    chain_identity_holds, chain_isomorphism, gamma_inverse_holds, homology_dims, kernel_projection_identity, normalize,
    tangent_complex, NormalizationVariant, PointedFamily,
};
use crate::simplicial::{
    dold_kan_inverse, random_chain_complex, validate_morphism, ChainComplex, ComplexRecipe, FaceMaps, SemiSVS,
    SimplicialMorphism, TruncatedSVS, ValidationReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
    InputError,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Self::Ok => 0,
            Self::CheckFailed => 1,
            Self::InputError => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::CheckFailed => "check_failed",
            Self::InputError => "input_error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    /// `None` for help and version requests and when the payload went to
    /// `--output`.
    pub payload: Option<Value>,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    /// The text written to stdout.
    pub fn stdout(&self) -> String {
        self.payload.as_ref().map(canonical_string).unwrap_or_default()
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "svkan",
    version,
    about = "Exact horn, Kan and normalization computations for simplicial vector spaces"
)]
struct Cli {
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the identities of a stored object.
    Validate {
        #[arg(long)]
        input: PathBuf,
        /// svs, semi, affine, chain, morphism or family; inferred when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Check ordinary or generalized Kan conditions.
    Kan(KanArgs),
    /// Compute a horn space.
    Horn {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        /// Comma-separated removed face indices, possibly empty.
        #[arg(long, value_parser = parse_index_list, allow_hyphen_values = true)]
        removed: IndexList,
        /// Build the space by iterated fiber products and compare with the equations.
        #[arg(long)]
        recursive: bool,
    },
    /// Fill a horn element.
    Fill {
        #[arg(long)]
        input: PathBuf,
        /// JSON file with the horn index `{"n", "removed"}`.
        #[arg(long)]
        horn: PathBuf,
        /// JSON file with the horn element `{"index", "components"}`.
        #[arg(long)]
        element: PathBuf,
        /// Use the closed-form alternating sum (shaped horns with m < n).
        #[arg(long)]
        generalized: bool,
    },
    /// Normalized chain complex.
    Normalize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "N")]
        variant: String,
    },
    /// Check the γ projections and the isomorphism between both normalizations.
    GammaCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// Homology dimensions of a chain complex or of a normalized object.
    Homology {
        #[arg(long)]
        input: PathBuf,
    },
    /// Tangent complex of a pointed family, or linearization of an affine object.
    Tangent {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "N")]
        variant: String,
    },
    /// Dimensions of the pieces of a horn space of an affine object.
    HornProfile {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_index_list, allow_hyphen_values = true)]
        removed: IndexList,
    },
    /// Generate objects.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Args, Debug)]
struct KanArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, requires = "n", conflicts_with = "generalized")]
    i: Option<usize>,
    /// Every ordinary horn (the default).
    #[arg(long, conflicts_with_all = ["n", "shaped"])]
    all: bool,
    /// Every horn `{j} ∪ {m+1, ..., n}`, ordinary ones included.
    #[arg(long, conflicts_with = "n")]
    shaped: bool,
    /// `j,m` for the horn `{j} ∪ {m+1, ..., n}`.
    #[arg(long, requires = "n")]
    generalized: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Dold–Kan inverse of a chain complex.
    Dk {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Seeded random chain complex, e.g. `--spec S0,D1,S2`.
    Random {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        seed: u64,
    },
    /// The non-Kan piecewise-affine example.
    Example51 {
        #[arg(long)]
        level: usize,
    },
    /// One-point family with tangent complex `0 <- R^g <- R` in degrees 0, 1, 2.
    StringGroup {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        level: usize,
    },
}

/// A comma-separated list of face indices; the empty string is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IndexList(Vec<usize>);

fn parse_index_list(text: &str) -> std::result::Result<IndexList, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(IndexList(Vec::new()));
    }
    text.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("{p:?} is not an index")))
        .collect::<std::result::Result<_, _>>()
        .map(IndexList)
}

/// A finished command before `--output` handling.
struct Outcome {
    payload: Value,
    holds: bool,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Self { payload, holds: true, diagnostics: Vec::new() }
    }

    fn check(payload: Value, holds: bool) -> Self {
        Self { payload, holds, diagnostics: Vec::new() }
    }

    fn note(mut self, line: impl Into<String>) -> Self {
        self.diagnostics.push(line.into());
        self
    }
}

fn failure_status(e: &Error) -> Status {
    match e {
        Error::Postcondition(_) | Error::Recursion(_) | Error::NoFiller(_) => Status::CheckFailed,
        _ => Status::InputError,
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::InputError,
            };
            return CommandResult { status, payload: None, diagnostics: vec![e.to_string()] };
        }
    };
    let name = command_name(&cli.command);
    let (status, payload, diagnostics) = match dispatch(&cli.command) {
        Ok(out) => {
            let status = if out.holds { Status::Ok } else { Status::CheckFailed };
            (status, out.payload, out.diagnostics)
        }
        Err(e) => {
            let status = failure_status(&e);
            let payload = json!({ "command": name, "status": status.name(), "error": e.to_string() });
            (status, payload, vec![e.to_string()])
        }
    };
    let mut result = CommandResult { status, payload: Some(payload), diagnostics };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, result.stdout()) {
            return CommandResult {
                status: Status::InputError,
                payload: None,
                diagnostics: vec![format!("cannot write {}: {e}", path.display())],
            };
        }
        result.payload = None;
    }
    result
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Kan(_) => "kan",
        Command::Horn { .. } => "horn",
        Command::Fill { .. } => "fill",
        Command::Normalize { .. } => "normalize",
        Command::GammaCheck { .. } => "gamma-check",
        Command::Homology { .. } => "homology",
        Command::Tangent { .. } => "tangent",
        Command::HornProfile { .. } => "horn-profile",
        Command::Gen(_) => "gen",
    }
}

fn dispatch(c: &Command) -> Result<Outcome> {
    match c {
        Command::Validate { input, kind } => validate(input, kind.as_deref()),
        Command::Kan(args) => kan(args),
        Command::Horn { input, n, removed, recursive } => horn(input, *n, &removed.0, *recursive),
        Command::Fill { input, horn, element, generalized } => fill(input, horn, element, *generalized),
        Command::Normalize { input, variant } => {
            let x = load_faces(&read_json(input)?)?;
            Ok(Outcome::ok(normalize(x.as_ref(), variant.parse()?)?.to_json()))
        }
        Command::GammaCheck { input } => gamma_check(input),
        Command::Homology { input } => homology(input),
        Command::Tangent { input, variant } => tangent(input, variant.parse()?),
        Command::HornProfile { input, n, removed } => profile(input, *n, &removed.0),
        Command::Gen(g) => generate(g),
    }
}

/// A simplicial or semisimplicial object, whichever the document holds.
enum Faces {
    Simplicial(TruncatedSVS),
    Semi(SemiSVS),
}

impl Faces {
    fn as_ref(&self) -> &dyn FaceMaps {
        match self {
            Self::Simplicial(x) => x,
            Self::Semi(x) => x,
        }
    }
}

fn load_faces(doc: &Value) -> Result<Faces> {
    if doc.get("degeneracies").is_some() {
        Ok(Faces::Simplicial(TruncatedSVS::from_json(doc)?))
    } else {
        Ok(Faces::Semi(SemiSVS::from_json(doc)?))
    }
}

fn load_simplicial(doc: &Value) -> Result<TruncatedSVS> {
    match load_faces(doc)? {
        Faces::Simplicial(x) => Ok(x),
        Faces::Semi(_) => Err(Error::Unsupported("this command needs degeneracies".into())),
    }
}

fn report_json(kind: &str, report: &ValidationReport) -> Outcome {
    Outcome::check(
        json!({ "command": "validate", "kind": kind, "valid": report.is_valid(), "violations": report.violations }),
        report.is_valid(),
    )
}

fn validate(input: &Path, kind: Option<&str>) -> Result<Outcome> {
    let doc = read_json(input)?;
    let kind = match kind {
        Some(k) => k.to_string(),
        None => match schema_of(&doc) {
            Some(formats::SVS) if doc.get("degeneracies").is_some() => "svs".into(),
            Some(formats::SVS) => "semi".into(),
            Some(formats::AFFINE) => "affine".into(),
            Some(formats::CHAIN) => "chain".into(),
            Some(formats::MORPHISM) => "morphism".into(),
            Some(formats::FAMILY) => "family".into(),
            other => return Err(Error::Invalid(format!("cannot infer the kind of schema {other:?}"))),
        },
    };
    match kind.as_str() {
        "svs" => Ok(report_json("svs", &TruncatedSVS::from_json(&doc)?.validate())),
        "semi" => Ok(report_json("semi", &SemiSVS::from_json(&doc)?.validate())),
        "affine" => Ok(report_json("affine", &validate_affine(&AffineSimplicialObject::from_json(&doc)?))),
        "chain" => {
            ChainComplex::from_json(&doc)?;
            Ok(report_json("chain", &ValidationReport::default()))
        }
        "morphism" => {
            let f = SimplicialMorphism::from_json(&doc)?;
            let mut report = f.source().validate();
            report.violations.extend(f.target().validate().violations);
            report.violations.extend(validate_morphism(&f).violations);
            Ok(report_json("morphism", &report))
        }
        "family" => {
            let fam = PointedFamily::from_json(&doc)?;
            let mut report = ValidationReport::default();
            for (_, x) in fam.fibers() {
                report.violations.extend(x.validate().violations);
            }
            Ok(report_json("family", &report))
        }
        other => Err(Error::Invalid(format!("unknown kind {other:?}"))),
    }
}

fn kan_outcome(report: KanReport) -> Outcome {
    let failures: Vec<String> =
        report.failures().map(|c| format!("horn ({}, {:?}) is not Kan", c.n, c.removed)).collect();
    let holds = report.all_hold();
    let mut out = Outcome::check(json!({ "command": "kan", "checks": report.checks, "all_hold": holds }), holds);
    out.diagnostics = failures;
    out
}

fn kan(args: &KanArgs) -> Result<Outcome> {
    let faces = load_faces(&read_json(&args.input)?)?;
    let x = faces.as_ref();
    let single = |h: HornIndex| -> Result<KanReport> {
        let holds = check_generalized_kan(x, &h)?;
        Ok(KanReport { checks: vec![HornCheck { n: h.n(), removed: h.removed().to_vec(), holds }] })
    };
    let report = match (args.n, args.i, &args.generalized) {
        (Some(n), Some(i), _) => {
            if i > n {
                return Err(Error::OutOfRange(format!("horn vertex {i} is not in [{n}]")));
            }
            single(HornIndex::ordinary(n, i)?)?
        }
        (Some(n), None, Some(spec)) => {
            let parts = parse_index_list(spec).map_err(Error::Invalid)?;
            let [j, m] = parts.0[..] else {
                return Err(Error::Invalid(format!("--generalized takes j,m, got {spec:?}")));
            };
            single(HornIndex::shaped(n, j, m)?)?
        }
        (Some(_), None, None) => return Err(Error::Invalid("--n needs --i or --generalized".into())),
        _ if args.shaped => generalized_kan_report(x)?,
        _ => kan_report(x)?,
    };
    Ok(kan_outcome(report))
}

fn horn(input: &Path, n: usize, removed: &[usize], recursive: bool) -> Result<Outcome> {
    let faces = load_faces(&read_json(input)?)?;
    let x = faces.as_ref();
    let h = HornIndex::new(n, removed.iter().copied())?;
    let direct = horn_space_direct(x, &h)?;
    let mut payload = json!({
        "command": "horn",
        "index": h.to_json(),
        "kept": direct.kept,
        "block_dim": direct.block_dim,
        "ambient_dim": direct.ambient_dim(),
        "dim": direct.dim(),
        "basis": direct.space.basis().to_json(),
        "method": "direct",
    });
    if !recursive {
        return Ok(Outcome::ok(payload));
    }
    let rec = horn_space_recursive(x, &h)?;
    let matches = subspace_equal(&rec.space, &direct.space)?;
    payload["method"] = json!("recursive");
    payload["dim"] = json!(rec.dim());
    payload["basis"] = rec.space.basis().to_json();
    payload["matches_direct"] = json!(matches);
    let out = Outcome::check(payload, matches);
    Ok(if matches { out } else { out.note("recursive and direct horn spaces differ") })
}

fn fill(input: &Path, horn: &Path, element: &Path, generalized: bool) -> Result<Outcome> {
    let doc = read_json(input)?;
    let index = HornIndex::from_json(&read_json(horn)?)?;
    let e = HornElement::from_json(&read_json(element)?)?;
    if e.index != index {
        return Err(Error::Invalid("the element belongs to a different horn than --horn".into()));
    }
    let (simplex, method) = if generalized {
        let x = load_simplicial(&doc)?;
        let (j, m) = index.shape().ok_or_else(|| {
            Error::Unsupported(format!("horn {:?} is not of the form {{j, m+1, ..., n}}", index.removed()))
        })?;
        (fill_generalized_horn(&x, index.n(), m, j, &e)?, "closed-form")
    } else {
        let faces = load_faces(&doc)?;
        (fill_horn_linear(faces.as_ref(), &e)?, "linear-solve")
    };
    Ok(Outcome::ok(json!({
        "command": "fill",
        "method": method,
        "index": index.to_json(),
        "simplex": formats::vector_to_json(&simplex),
    })))
}

fn gamma_check(input: &Path) -> Result<Outcome> {
    let x = load_simplicial(&read_json(input)?)?;
    let mut inverse_pairs = Vec::new();
    let mut identities = Vec::new();
    let mut kernels = Vec::new();
    let mut holds = true;
    for n in 0..=x.level() {
        for m in 0..=n {
            let ok = gamma_inverse_holds(&x, n, m)?;
            holds &= ok;
            inverse_pairs.push(json!({ "n": n, "m": m, "holds": ok }));
        }
        if n >= 1 {
            let ok = chain_identity_holds(&x, n)?;
            holds &= ok;
            identities.push(json!({ "n": n, "holds": ok }));
            let (last, first) = kernel_projection_identity(&x, n)?;
            holds &= last && first;
            kernels.push(json!({ "n": n, "last": last, "first": first }));
        }
    }
    let iso = chain_isomorphism(&x)?;
    let dims_equal = iso.tilde.dims() == iso.normalized.dims();
    let h_n = homology_dims(&iso.normalized.complex);
    let h_tilde = homology_dims(&iso.tilde.complex);
    holds &= dims_equal && h_n == h_tilde;
    Ok(Outcome::check(
        json!({
            "command": "gamma-check",
            "inverse_pairs": inverse_pairs,
            "chain_identity": identities,
            "kernel_projection": kernels,
            "dims": { "N": iso.normalized.dims(), "tilde": iso.tilde.dims() },
            "homology": { "N": h_n, "tilde": h_tilde },
            "all_hold": holds,
        }),
        holds,
    ))
}

fn homology(input: &Path) -> Result<Outcome> {
    let doc = read_json(input)?;
    let (c, truncated) = match schema_of(&doc) {
        Some(formats::CHAIN) => (ChainComplex::from_json(&doc)?, false),
        _ => {
            let faces = load_faces(&doc)?;
            (normalize(faces.as_ref(), NormalizationVariant::N)?.complex, true)
        }
    };
    let payload = json!({
        "command": "homology",
        "dims": homology_dims(&c),
        "top_degree_upper_bound": truncated,
    });
    let out = Outcome::ok(payload);
    Ok(if truncated { out.note("top degree ignores the unknown next differential") } else { out })
}

fn tangent(input: &Path, v: NormalizationVariant) -> Result<Outcome> {
    let doc = read_json(input)?;
    if schema_of(&doc) == Some(formats::AFFINE) {
        let a = AffineSimplicialObject::from_json(&doc)?;
        let report = validate_affine(&a);
        if !report.is_valid() {
            return Ok(Outcome::check(
                json!({ "command": "tangent", "valid": false, "violations": report.violations }),
                false,
            ));
        }
        let t = tangent_at_base(&a)?;
        let local = local_kan_check(&a)?;
        let complex = normalize(&t, v)?;
        let chain: Vec<usize> = (0..=a.level()).map(|n| a.base_image(n).component).collect();
        let holds = local.all_hold();
        return Ok(Outcome::check(
            json!({
                "command": "tangent",
                "variant": v.name(),
                "base_components": chain,
                "tangent_dims": t.dims(),
                "complex_dims": complex.dims(),
                "local_kan": local,
                "all_hold": holds,
            }),
            holds,
        ));
    }
    let fam = PointedFamily::from_json(&doc)?;
    let tc = tangent_complex(&fam, v)?;
    let points: serde_json::Map<String, Value> = tc
        .fibers
        .iter()
        .map(|(p, c)| (p.clone(), json!({ "dims": c.dims(), "homology": homology_dims(&c.complex) })))
        .collect();
    let bundle = tc.report.is_bundle();
    let mut out = Outcome::check(
        json!({
            "command": "tangent",
            "variant": v.name(),
            "points": points,
            "bundle": tc.report,
            "is_bundle": bundle,
        }),
        bundle,
    );
    for l in tc.report.levels.iter().filter(|l| !l.constant) {
        out = out.note(format!("level {} has ranks {:?} across the base", l.level, l.dims));
    }
    Ok(out)
}

fn profile(input: &Path, n: usize, removed: &[usize]) -> Result<Outcome> {
    let doc = read_json(input)?;
    let a = match schema_of(&doc) {
        Some(formats::AFFINE) => AffineSimplicialObject::from_json(&doc)?,
        _ => AffineSimplicialObject::from_svs(&load_simplicial(&doc)?),
    };
    let h = HornIndex::new(n, removed.iter().copied())?;
    let p = horn_profile(&a, &h)?;
    let multiset = p.dimension_multiset();
    let flag = p.manifold_flag;
    let mut payload = serde_json::to_value(&p)?;
    payload["command"] = json!("horn-profile");
    payload["dimension_multiset"] = json!(multiset);
    let out = Outcome::check(payload, flag);
    Ok(if flag { out } else { out.note(format!("pieces of dimensions {:?} do not form a manifold", p.dims_present)) })
}

fn generate(g: &Gen) -> Result<Outcome> {
    match g {
        Gen::Dk { chain, level } => {
            let c = ChainComplex::from_json(&read_json(chain)?)?;
            Ok(Outcome::ok(dold_kan_inverse(&c, *level).to_json()))
        }
        Gen::Random { spec, seed } => {
            let recipe: ComplexRecipe = spec.parse()?;
            Ok(Outcome::ok(random_chain_complex(&recipe, *seed).to_json()))
        }
        Gen::Example51 { level } => {
            if *level < 2 {
                return Err(Error::OutOfRange("the example needs level >= 2".into()));
            }
            Ok(Outcome::ok(build_example_5_1(*level).to_json()))
        }
        Gen::StringGroup { dim, level } => {
            let c = ChainComplex::with_zero_differentials(vec![0, *dim, 1]);
            let fam = PointedFamily::single("e", dold_kan_inverse(&c, *level));
            Ok(Outcome::ok(fam.to_json()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("").unwrap(), IndexList(Vec::new()));
        assert_eq!(parse_index_list("3, 1").unwrap(), IndexList(vec![3, 1]));
        assert!(parse_index_list("a").is_err());
    }

    #[test]
    fn bad_flags_are_input_errors() {
        let r = run(["svkan", "kan", "--bogus"]);
        assert_eq!(r.status, Status::InputError);
        let r = run(["svkan", "gen", "example51", "--level", "1"]);
        assert_eq!(r.status, Status::InputError);
        assert_eq!(r.payload.unwrap()["status"], "input_error");
    }

    #[test]
    fn generators_emit_documents() {
        let r = run(["svkan", "gen", "random", "--spec", "S0,D1", "--seed", "3"]);
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload.unwrap()["schema"], "chain/1");
    }
}
