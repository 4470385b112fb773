//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a well-formed input failed a check (or the
//! algebras are not isomorphic), 2 unreadable or malformed input.

pub mod document;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::algebra::{verify, TwoTermAlgebra};
use crate::builders::{
    quaternion_automorphism, lie_by_name, quaternion_example, random_algebra, representation_by_name,
    skeletal_string, Quaternion, RandomProfile,
};
use crate::classify::{certify_isomorphism, distinguish, invariants, normal_form, transport, Comparison};
use crate::cohomology::{cohomology_dim, cohomology_representatives};
use crate::error::Error;
use crate::exactla::{format_rational, parse_rational};
use crate::lie::LieAlgebra;
use crate::morphism::{compose, inverse, verify_morphism, Morphism};

use document::{
    read_algebra, read_document, read_morphism, to_canonical_string, AlgebraDocument, LieDocument,
    MapsDocument, MorphismDocument,
};

#[derive(Debug, Parser)]
#[command(name = "lie2alg", version, about = "Exact toolkit for 2-term L-infinity algebras")]
pub struct Cli {
    /// Write the produced document here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for `random`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Suppress informational output.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the five defining identities.
    Verify { algebra: PathBuf },
    /// Print the quadruple summary; write the normal form to --out.
    Normalize {
        algebra: PathBuf,
        /// Where to write the isomorphism onto the normal form.
        #[arg(long)]
        morphism: Option<PathBuf>,
    },
    /// Print the invariant vector as key=value lines.
    Invariants { algebra: PathBuf },
    /// Cohomology of a catalog Lie algebra (or a Lie document) with coefficients.
    Cohomology {
        /// Catalog name (so3, sl2, heisenberg3, nonabelian2, abelian:N) or path.
        lie: String,
        /// trivial, trivial:N, adjoint or sums such as adjoint+trivial:1.
        rep: String,
        degree: usize,
        /// Also print cocycles representing a basis of the cohomology.
        #[arg(long)]
        basis: bool,
    },
    /// Compare two algebras by invariants, or certify an isomorphism from maps.
    Compare {
        first: PathBuf,
        second: PathBuf,
        /// Maps document with chi, fU and tV in normal-form bases.
        #[arg(long)]
        maps: Option<PathBuf>,
    },
    /// Write a built-in example.
    Example {
        #[command(subcommand)]
        which: ExampleKind,
    },
    /// Write a seeded random algebra (seed from --seed, default 0).
    Random {
        /// default, small or zero.
        #[arg(long, default_value = "default")]
        profile: String,
    },
    /// Compose two morphisms (first, then second).
    Compose { first: PathBuf, second: PathBuf },
    /// Transport an algebra along the maps of a morphism document.
    Transport { algebra: PathBuf, maps: PathBuf },
    /// Write the inverse of an isomorphism.
    Invert { morphism: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ExampleKind {
    /// Quaternion algebra with Jacobiator parameter v.
    Quaternion {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        v: String,
    },
    /// Cyclic automorphism of the quaternion algebra (a morphism document).
    QuaternionAutomorphism {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        v: String,
    },
    /// Skeletal string algebra with J = k<x,[y,z]>.
    SkeletalString {
        #[arg(long, default_value = "so3")]
        lie: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
    },
}

struct Context<'a> {
    out: Option<PathBuf>,
    quiet: bool,
    stdout: &'a mut dyn Write,
}

impl Context<'_> {
    fn say(&mut self, line: &str) -> Result<(), Error> {
        if !self.quiet {
            writeln!(self.stdout, "{line}").map_err(|e| Error::Io(e.to_string()))?;
        }
        Ok(())
    }

    fn say_always(&mut self, line: &str) -> Result<(), Error> {
        writeln!(self.stdout, "{line}").map_err(|e| Error::Io(e.to_string()))
    }

    /// Writes to `--out` when given, else to standard output.
    fn emit(&mut self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(path) => write_file(path, text),
            None => self.stdout.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one command line, writing results and diagnostics to the given sinks.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let mut ctx = Context { out: cli.out.clone(), quiet: cli.quiet, stdout };
    match dispatch(&cli, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn load_checked(path: &Path) -> Result<TwoTermAlgebra, Error> {
    let l = read_algebra(path)?;
    l.check_structure()?;
    Ok(l)
}

fn require_valid(l: &TwoTermAlgebra, path: &Path) -> Result<(), Error> {
    let report = verify(l);
    if report.is_pass() {
        Ok(())
    } else {
        Err(Error::VerificationFailed(format!("{}\n{report}", path.display()).trim_end().to_string()))
    }
}

fn algebra_text(l: &TwoTermAlgebra, name: Option<String>, provenance: Option<String>) -> Result<String, Error> {
    let report = verify(l);
    if !report.is_pass() {
        return Err(Error::Internal(format!("refusing to write an invalid algebra:\n{report}")));
    }
    Ok(to_canonical_string(&AlgebraDocument::from_algebra(l, name, provenance)))
}

fn morphism_text(m: &Morphism) -> Result<String, Error> {
    let report = verify_morphism(m);
    if !report.is_pass() {
        return Err(Error::Internal(format!("refusing to write an invalid morphism:\n{report}")));
    }
    Ok(to_canonical_string(&MorphismDocument::from_morphism(m)))
}

fn load_lie(name: &str) -> Result<LieAlgebra, Error> {
    let path = Path::new(name);
    if path.exists() {
        read_document::<LieDocument>(path)?.to_lie()
    } else {
        lie_by_name(name)
    }
}

fn dispatch(cli: &Cli, ctx: &mut Context<'_>) -> Result<i32, Error> {
    match &cli.command {
        Command::Verify { algebra } => {
            let l = load_checked(algebra)?;
            let report = verify(&l);
            ctx.say(report.to_string().trim_end())?;
            Ok(if report.is_pass() { 0 } else { 1 })
        }
        Command::Normalize { algebra, morphism } => {
            let l = load_checked(algebra)?;
            require_valid(&l, algebra)?;
            let (nf, m) = normal_form(&l)?;
            let inv = invariants(&l)?;
            let text = algebra_text(&nf, None, Some("normal form".into()))?;
            if let Some(path) = morphism {
                write_file(path, &morphism_text(&m)?)?;
            }
            // The summary owns stdout, so the algebra is only written with --out.
            if let Some(path) = &ctx.out {
                write_file(path, &text)?;
            }
            ctx.say(&format!(
                "g={}, U={}, V={}, coboundary={}",
                inv.dim_g, inv.dim_u, inv.dim_v, inv.jtilde_coboundary
            ))?;
            Ok(0)
        }
        Command::Invariants { algebra } => {
            let l = load_checked(algebra)?;
            require_valid(&l, algebra)?;
            let inv = invariants(&l)?;
            ctx.say_always(inv.to_string().trim_end())?;
            Ok(0)
        }
        Command::Cohomology { lie, rep, degree, basis } => {
            let g = load_lie(lie)?;
            let rep = representation_by_name(&g, rep)?;
            ctx.say_always(&format!("dim H^{degree} = {}", cohomology_dim(*degree, &rep)))?;
            if *basis {
                for (i, c) in cohomology_representatives(*degree, &rep).iter().enumerate() {
                    let values: Vec<String> = c.vector().iter().map(format_rational).collect();
                    ctx.say_always(&format!("class {i}: [{}]", values.join(", ")))?;
                }
            }
            Ok(0)
        }
        Command::Compare { first, second, maps } => {
            let l = load_checked(first)?;
            let m = load_checked(second)?;
            require_valid(&l, first)?;
            require_valid(&m, second)?;
            match maps {
                None => match distinguish(&l, &m)? {
                    Comparison::Distinguished(field) => {
                        ctx.say_always(&format!("DISTINGUISHED: {field}"))?;
                        Ok(1)
                    }
                    Comparison::Inconclusive => {
                        ctx.say_always("INCONCLUSIVE (invariants equal)")?;
                        Ok(0)
                    }
                },
                Some(path) => {
                    let doc: MapsDocument = read_document(path)?;
                    let inv = invariants(&l)?;
                    let (chi, f_u, t_v) = doc.maps((inv.dim_g, inv.dim_u, inv.dim_v))?;
                    match certify_isomorphism(&l, &m, &chi, &f_u, &t_v) {
                        Ok(iso) => {
                            let text = morphism_text(&iso)?;
                            ctx.say_always("ISOMORPHIC")?;
                            if let Some(out) = &ctx.out {
                                write_file(out, &text)?;
                            }
                            Ok(0)
                        }
                        Err(e) if !e.is_input_error() && !matches!(e, Error::Internal(_)) => {
                            ctx.say_always(&format!("NOT ISOMORPHIC UNDER THESE MAPS: {e}"))?;
                            Ok(1)
                        }
                        Err(e) => Err(e),
                    }
                }
            }
        }
        Command::Example { which } => match which {
            ExampleKind::Quaternion { v } => {
                let q = Quaternion::parse(v)?;
                let l = quaternion_example(&q);
                let text = algebra_text(&l, Some(format!("quaternion v={q}")), Some("example".into()))?;
                ctx.emit(&text)?;
                Ok(0)
            }
            ExampleKind::QuaternionAutomorphism { v } => {
                let q = Quaternion::parse(v)?;
                let m = quaternion_automorphism(&q)?;
                ctx.emit(&morphism_text(&m)?)?;
                Ok(0)
            }
            ExampleKind::SkeletalString { lie, k } => {
                let g = load_lie(lie)?;
                let k = parse_rational(k)?;
                let l = skeletal_string(&g, &k)?;
                let name = format!("skeletal string {lie} k={}", format_rational(&k));
                ctx.emit(&algebra_text(&l, Some(name), Some("example".into()))?)?;
                Ok(0)
            }
        },
        Command::Random { profile } => {
            let seed = cli.seed.unwrap_or(0);
            let l = random_algebra(seed, &RandomProfile::by_name(profile)?)?;
            let name = format!("random seed={seed} profile={profile}");
            ctx.emit(&algebra_text(&l, Some(name), Some("random".into()))?)?;
            Ok(0)
        }
        Command::Compose { first, second } => {
            let a = read_morphism(first)?;
            let b = read_morphism(second)?;
            let c = compose(&a, &b)?;
            ctx.emit(&morphism_text(&c)?)?;
            Ok(0)
        }
        Command::Transport { algebra, maps } => {
            let l = load_checked(algebra)?;
            require_valid(&l, algebra)?;
            let doc: MorphismDocument = read_document(maps)?;
            let dims = (l.n0(), l.n1());
            let (phi0, phi1, big_phi) = doc.maps(dims, dims)?;
            let (moved, _) = transport(&l, &phi0, &phi1, &big_phi)?;
            let original: AlgebraDocument = read_document(algebra)?;
            ctx.emit(&algebra_text(&moved, original.name, original.provenance)?)?;
            Ok(0)
        }
        Command::Invert { morphism } => {
            let m = read_morphism(morphism)?;
            let report = verify_morphism(&m);
            if !report.is_pass() {
                return Err(Error::VerificationFailed(report.to_string()));
            }
            let inv = inverse(&m)?;
            ctx.emit(&morphism_text(&inv)?)?;
            Ok(0)
        }
    }
}

/// Identity morphism document of an algebra, handy for scripting.
pub fn identity_document(l: &TwoTermAlgebra) -> String {
    to_canonical_string(&MorphismDocument::from_morphism(&Morphism::identity(Arc::new(l.clone()))))
}
