//! Command-line interface.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use endokl_core::affine_strata::{
    affine_endoscopy, affine_multiplicities, classify_level, critical_strata_index, strata_with, AffineCoweight, AffineError,
    LevelClass,
};
use endokl_core::coxeter::CoxeterError;
use endokl_core::endoscopy::{stratification_datum, strata_for_degree, EndoscopyError};
use endokl_core::folding::{fold, FoldingError};
use endokl_core::klpoly::{KlError, DEFAULT_LENGTH_LIMIT};
use endokl_core::multiplicity::{cache_for, multiplicity_matrix_with, simple_character, MultiplicityError};
use endokl_core::oracle::{oracle_multiplicity_matrix, OracleError};
use endokl_core::rootsys::RootError;
use endokl_core::{CartanType, CoxeterSystem, KLCache, RationalCoweight, RootDatum};

use crate::cachefile::{CacheFile, CacheFileError};
use crate::parallel::fill_layers;
use crate::report::*;
use crate::words::{parse_lambda, parse_vector, parse_word};

/// Environment variable naming the persistent KL cache file.
pub const CACHE_ENV: &str = "ENDOKL_CACHE";

#[derive(Parser, Debug)]
#[command(name = "endokl", version, about = "Kazhdan-Lusztig combinatorics of category O at rational central character")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Debug)]
pub struct Word(pub Vec<u32>);

#[derive(Clone, Debug)]
pub struct IntVec(pub Vec<i64>);

fn word_arg(s: &str) -> Result<Word, String> {
    parse_word(s).map(Word)
}

fn vec_arg(s: &str) -> Result<IntVec, String> {
    parse_vector(s).map(IntVec)
}

fn type_arg(s: &str) -> Result<CartanType, String> {
    let mut chars = s.chars();
    match (chars.next().and_then(CartanType::from_letter), chars.next()) {
        (Some(t), None) => Ok(t),
        _ => Err(format!("unknown Cartan type {s:?}")),
    }
}

fn type_rank_arg(s: &str) -> Result<(CartanType, usize), String> {
    let t = type_arg(&s[..1.min(s.len())])?;
    let r = s[1..].parse().map_err(|_| format!("bad rank in {s:?}"))?;
    Ok((t, r))
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Cartan type letter A-G.
    #[arg(long = "type", value_parser = type_arg)]
    pub cartan_type: CartanType,
    #[arg(long)]
    pub rank: usize,
}

impl TypeArgs {
    fn datum(&self) -> Result<RootDatum, RootError> {
        RootDatum::new(self.cartan_type, self.rank)
    }
}

#[derive(Args, Debug, Clone)]
pub struct LambdaArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// `c1,...,cr/n` in the simple-coroot basis.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    pub lambda: RationalCoweight,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix, positive roots and coroots, rho.
    Roots(TypeArgs),
    /// Elements of the Weyl or affine Weyl group.
    Weyl {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        affine: bool,
        /// Maximal length; required for affine groups.
        #[arg(long)]
        length: Option<usize>,
    },
    /// A Kazhdan-Lusztig polynomial `P_{y,w}`.
    Kl {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        affine: bool,
        #[arg(long, value_parser = word_arg)]
        y: Word,
        #[arg(long, value_parser = word_arg)]
        w: Word,
        #[arg(long, default_value_t = DEFAULT_LENGTH_LIMIT)]
        length_limit: usize,
    },
    /// The endoscopic Coxeter datum of `lambda`.
    Endoscopy(LambdaArgs),
    /// Labels whose stratum meets the degree `alpha`.
    Strata {
        #[command(flatten)]
        l: LambdaArgs,
        #[arg(long, value_parser = vec_arg, allow_hyphen_values = true)]
        alpha: IntVec,
    },
    /// Verma multiplicity matrix over the index set of `lambda`.
    Multiplicity(LambdaArgs),
    /// Weight multiplicities of a simple module below its highest weight.
    Character {
        #[command(flatten)]
        l: LambdaArgs,
        /// Label in the index set.
        #[arg(long, value_parser = word_arg)]
        label: Word,
        /// Maximal height of the depth.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Strata of an affine coweight at positive, negative or critical level.
    Affine {
        #[command(flatten)]
        l: LambdaArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Bound `c0,c1,...,cr` in the affine simple-coroot basis.
        #[arg(long, value_parser = vec_arg)]
        alpha: IntVec,
        /// Finite nodes (1-based) of the left parabolic `K`.
        #[arg(long, value_parser = vec_arg)]
        parabolic: Option<IntVec>,
        /// Also compute the multiplicity matrix.
        #[arg(long)]
        multiplicities: bool,
        #[arg(long, default_value_t = DEFAULT_LENGTH_LIMIT)]
        length_limit: usize,
    },
    /// Fold a simply-laced type by a diagram automorphism.
    Fold {
        /// Source type and rank, e.g. `A3`.
        #[arg(long, value_parser = type_rank_arg)]
        source: (CartanType, usize),
        /// Images of nodes `1..=r`, e.g. `3,2,1`.
        #[arg(long, value_parser = vec_arg)]
        sigma: IntVec,
    },
    /// Compare the KL multiplicities with the Verma module oracle.
    OracleCheck {
        #[command(flatten)]
        l: LambdaArgs,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Manage persisted KL polynomials.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Subcommand, Debug)]
pub enum CacheCommand {
    /// Compute a group's table and write it with the store's contents.
    Export {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        affine: bool,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Merge a cache file into the store.
    Import {
        #[arg(long)]
        file: PathBuf,
        /// Store path; defaults to `$ENDOKL_CACHE`.
        #[arg(long)]
        store: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error(transparent)]
    Endoscopy(#[from] EndoscopyError),
    #[error(transparent)]
    Multiplicity(#[from] MultiplicityError),
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error(transparent)]
    Folding(#[from] FoldingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    CacheFile(#[from] CacheFileError),
    #[error("{0}")]
    Invalid(String),
    #[error("oracle and KL multiplicities disagree")]
    Disagreement(String),
}

/// Output of a successful run, or of an oracle disagreement.
fn render<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Table => table(),
    }
}

fn matrix_table(labels: &[String], rows: &[Vec<u64>]) -> String {
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(1);
    let mut out = String::new();
    let _ = write!(out, "{:width$} |", "");
    for l in labels {
        let _ = write!(out, " {l:>width$}");
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(rows) {
        let _ = write!(out, "{l:>width$} |");
        for x in row {
            let _ = write!(out, " {x:>width$}");
        }
        out.push('\n');
    }
    out
}

fn store_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|p| !p.is_empty()).map(PathBuf::from)
}

/// Runs `f` with `cache` preloaded from the store, then persists it.
fn with_store<T>(cache: &mut KLCache, f: impl FnOnce(&mut KLCache) -> Result<T, CliError>) -> Result<T, CliError> {
    let path = store_path();
    let mut file = match &path {
        Some(p) => CacheFile::read_or_default(p)?,
        None => CacheFile::default(),
    };
    file.load_into(cache)?;
    let out = f(cache)?;
    if let Some(p) = path {
        file.store(cache);
        file.write(&p)?;
    }
    Ok(out)
}

fn system_for(ty: &TypeArgs, affine: bool) -> Result<Arc<CoxeterSystem>, CliError> {
    let d = ty.datum()?;
    Ok(if affine { CoxeterSystem::affine(&d) } else { CoxeterSystem::weyl(&d) })
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Roots(ty) => {
            let d = ty.datum()?;
            let value = json!({
                "type": d.cartan_type().to_string(),
                "rank": d.rank(),
                "cartan": d.cartan_matrix(),
                "positive_roots": d.positive_roots(),
                "positive_coroots": d.positive_coroots(),
                "rho": d.rho().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            });
            Ok(render(format, &value, || {
                let mut s = format!("{}{} Cartan matrix {:?}\n", d.cartan_type(), d.rank(), d.cartan_matrix());
                for (r, c) in d.positive_roots().iter().zip(d.positive_coroots()) {
                    let _ = writeln!(s, "root {r:?} coroot {c:?}");
                }
                s
            }))
        }
        Command::Weyl { ty, affine, length } => {
            let sys = system_for(ty, *affine)?;
            let elems = sys.elements_up_to(*length)?;
            let value = json!({
                "system": sys.cache_tag().0,
                "rank": ty.rank,
                "count": elems.len(),
                "elements": elems.iter().map(|w| json!({"word": w.to_string(), "length": w.length()})).collect::<Vec<_>>(),
            });
            Ok(render(format, &value, || {
                let mut s = String::new();
                for w in &elems {
                    let _ = writeln!(s, "{} {}", w.length(), w);
                }
                s
            }))
        }
        Command::Kl {
            ty,
            affine,
            y,
            w,
            length_limit,
        } => {
            let sys = system_for(ty, *affine)?;
            let y = sys.element_from_labels(&y.0)?;
            let w = sys.element_from_labels(&w.0)?;
            let mut cache = KLCache::new(Arc::clone(&sys)).with_length_limit(*length_limit);
            let p = with_store(&mut cache, |c| Ok(c.kl_polynomial(&y, &w)?))?;
            let report = KlReport {
                system: sys.cache_tag().0,
                y: y.to_string(),
                w: w.to_string(),
                coefficients: p.coeffs().to_vec(),
                polynomial: p.to_string(),
            };
            Ok(render(format, &report, || format!("{p}\n")))
        }
        Command::Endoscopy(l) => {
            let sd = stratification_datum(&l.ty.datum()?, &l.lambda)?;
            let report = EndoscopyReport::new(&sd);
            Ok(render(format, &report, || {
                format!(
                    "simple coroots {:?}\nendoscopic Cartan {:?}\nsingular {:?}\nlambda' {:?}\ny {}\nindex set {}\n",
                    report.simple_coroots,
                    report.endoscopic_cartan,
                    report.singular,
                    report.lambda_prime,
                    report.y,
                    report.index_set.join(" ")
                )
            }))
        }
        Command::Strata { l, alpha } => {
            let sd = stratification_datum(&l.ty.datum()?, &l.lambda)?;
            let strata = strata_for_degree(&sd, &alpha.0)?;
            let report = StrataReport {
                cartan_type: sd.datum.cartan_type().to_string(),
                rank: sd.datum.rank(),
                lambda: (&l.lambda).into(),
                alpha: alpha.0.clone(),
                labels: word_labels(&strata),
                degrees: strata.iter().map(|w| sd.degree_of(w)).collect(),
            };
            Ok(render(format, &report, || {
                let mut s = String::new();
                for (w, d) in report.labels.iter().zip(&report.degrees) {
                    let _ = writeln!(s, "{w} {d:?}");
                }
                s
            }))
        }
        Command::Multiplicity(l) => {
            let sd = stratification_datum(&l.ty.datum()?, &l.lambda)?;
            let mut cache = cache_for(&sd);
            let mm = with_store(&mut cache, |c| Ok(multiplicity_matrix_with(&sd, c)?))?;
            let report = MultiplicityReport::new(&mm);
            Ok(render(format, &report, || matrix_table(&report.labels, &report.entries)))
        }
        Command::Character { l, label, depth } => {
            let sd = stratification_datum(&l.ty.datum()?, &l.lambda)?;
            let y = sd.zeta_system.element_from_labels(&label.0)?;
            let index = sd
                .position(&y)
                .ok_or_else(|| CliError::Invalid(format!("{y} is not in the index set")))?;
            let mut cache = cache_for(&sd);
            let mm = with_store(&mut cache, |c| Ok(multiplicity_matrix_with(&sd, c)?))?;
            let ch = simple_character(&mm, index, *depth)?;
            let report = CharacterReport {
                lambda: (&l.lambda).into(),
                label: y.to_string(),
                bound: *depth,
                weights: ch.into_iter().filter(|(_, m)| *m != 0).collect(),
            };
            Ok(render(format, &report, || {
                let mut s = String::new();
                for (d, m) in &report.weights {
                    let _ = writeln!(s, "{d:?} {m}");
                }
                s
            }))
        }
        Command::Affine {
            l,
            a,
            b,
            alpha,
            parabolic,
            multiplicities,
            length_limit,
        } => {
            let d = l.ty.datum()?;
            let x = AffineCoweight::new(l.lambda.clone(), *a, *b)?;
            if classify_level(&x)? == LevelClass::Critical {
                let (_, pairs) = critical_strata_index(&d, &x, &alpha.0)?;
                let report = CriticalReport {
                    cartan_type: d.cartan_type().to_string(),
                    rank: d.rank(),
                    lambda: (&x.finite).into(),
                    a: x.a,
                    b: x.b,
                    level_class: LevelClass::Critical.name().to_string(),
                    bound: alpha.0.clone(),
                    pairs: pairs
                        .into_iter()
                        .map(|(w, alpha)| CriticalPair { w: w.to_string(), alpha })
                        .collect(),
                };
                return Ok(render(format, &report, || {
                    let mut s = String::from("level critical\n");
                    for p in &report.pairs {
                        let _ = writeln!(s, "{} {:?}", p.w, p.alpha);
                    }
                    s
                }));
            }
            let st = affine_endoscopy(&d, &x)?;
            let k_set: Option<Vec<usize>> = match parabolic {
                Some(v) => Some(
                    v.0.iter()
                        .map(|&i| {
                            usize::try_from(i - 1)
                                .ok()
                                .filter(|&i| i < d.rank())
                                .ok_or_else(|| CliError::Invalid(format!("parabolic node {i} out of range")))
                        })
                        .collect::<Result<_, _>>()?,
                ),
                None => None,
            };
            let strata = strata_with(&st, &alpha.0, k_set.as_deref())?;
            let entries = if *multiplicities {
                let mut cache = KLCache::new(Arc::clone(&st.zeta_system)).with_length_limit(*length_limit);
                Some(with_store(&mut cache, |c| Ok(affine_multiplicities(&st, &strata.elements, c)?))?)
            } else {
                None
            };
            let report = AffineReport::new(&x, &st, &strata, entries);
            Ok(render(format, &report, || {
                let mut s = format!("level {}\n", report.level_class);
                for (w, d) in report.labels.iter().zip(&report.degrees) {
                    let _ = writeln!(s, "{w} {d:?}");
                }
                if let Some(e) = &report.entries {
                    s.push_str(&matrix_table(&report.labels, e));
                }
                s
            }))
        }
        Command::Fold { source, sigma } => {
            let d = RootDatum::new(source.0, source.1)?;
            let perm: Vec<usize> = sigma
                .0
                .iter()
                .map(|&i| usize::try_from(i - 1).map_err(|_| CliError::Invalid(format!("bad node {i}"))))
                .collect::<Result<_, _>>()?;
            let fd = fold(&d, &perm)?;
            let report = FoldReport::new(format!("{}{}", source.0, source.1), &fd);
            Ok(render(format, &report, || {
                format!(
                    "folded type {} (dual {})\nd = {}\nd_i = {:?}\nCartan {:?}\n",
                    report.invariant_type.as_deref().unwrap_or("twisted A2n"),
                    report.dual_type.as_deref().unwrap_or("-"),
                    report.d,
                    report.d_i,
                    report.folded_cartan
                )
            }))
        }
        Command::OracleCheck { l, depth } => {
            let d = l.ty.datum()?;
            let sd = stratification_datum(&d, &l.lambda)?;
            let kl = multiplicity_matrix_with(&sd, &mut cache_for(&sd))?;
            let oracle = oracle_multiplicity_matrix(&d, &l.lambda, *depth)?;
            let report = OracleReport {
                lambda: (&l.lambda).into(),
                labels: word_labels(kl.labels()),
                agree: kl.entries == oracle.entries,
                kl: kl.entries,
                oracle: oracle.entries,
            };
            let text = render(format, &report, || {
                format!("{}\n", if report.agree { "agree" } else { "DISAGREE" })
            });
            if report.agree {
                Ok(text)
            } else {
                Err(CliError::Disagreement(text))
            }
        }
        Command::Cache(CacheCommand::Export { ty, affine, length, out }) => {
            let sys = system_for(ty, *affine)?;
            if *affine && length.is_none() {
                return Err(CliError::Invalid("affine export needs --length".into()));
            }
            let mut cache = KLCache::new(Arc::clone(&sys)).with_length_limit(length.unwrap_or(DEFAULT_LENGTH_LIMIT));
            let file = match store_path() {
                Some(p) => CacheFile::read_or_default(&p)?,
                None => CacheFile::default(),
            };
            file.load_into(&mut cache)?;
            fill_layers(&mut cache, *length)?;
            let mut exported = CacheFile::default();
            exported.store(&cache);
            exported.write(out)?;
            let value = json!({"system": sys.cache_tag().0, "records": exported.record_count(), "path": out});
            Ok(render(format, &value, || format!("exported {} records\n", exported.record_count())))
        }
        Command::Cache(CacheCommand::Import { file, store }) => {
            let store = store
                .clone()
                .or_else(store_path)
                .ok_or_else(|| CliError::Invalid(format!("no store given and {CACHE_ENV} is unset")))?;
            let incoming = CacheFile::read(file)?;
            let mut current = CacheFile::read_or_default(&store)?;
            current.merge(&incoming);
            current.write(&store)?;
            let value = json!({"records": incoming.record_count(), "store": store});
            Ok(render(format, &value, || format!("imported {} records\n", incoming.record_count())))
        }
    }
}

/// Parses the process arguments, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(CliError::Disagreement(text)) => {
            print!("{text}");
            1
        }
        Err(e) => {
            match cli.format {
                Format::Json => eprintln!("{}", json!({"error": e.to_string()})),
                Format::Table => eprintln!("error: {e}"),
            }
            1
        }
    }
}
