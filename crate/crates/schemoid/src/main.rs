//! Command-line front end: construct schemoids, validate them, compute
//! structure constants, tameness, quotients, algebras and representation-
//! theoretic invariants. All output is deterministic; `--json` switches from
//! tabular text to machine-readable JSON.
//!
//! Exit codes: 0 success and all requested checks passed, 1 a check failed
//! (with a witness), 2 malformed input or arguments.

use clap::{Parser, Subcommand};
use schemoid::algebra::{
    bose_mesner, category_algebra, center, hochschild_cohomology, quotient_linear_algebra,
    sr_pullbacks, stanley_reisner_mod_squares, FDAlgebra,
};
use schemoid::constructors::{
    discrete, from_groupoid, group_case, hamming, open_set_schemoid, powerset_difference,
    simplicial_schemoid, truncated_len, AssociationScheme, FiniteSpace, SimplicialComplex,
};
use schemoid::io::{
    self, category_from_file, category_to_file, morphism_from_file, rep_from_file, rep_to_file,
    schemoid_from_file, schemoid_to_file, to_json, CategoryFile, IoError, MorphismFile, RepFile,
    SchemoidFile,
};
use schemoid::repcat::{
    enumerate_functor_reps, kan_left, kan_right, lc_hom, mitchell, morita_witness_check, nat_hom,
    restrict, schemoid_cohomology, FunctorRep,
};
use schemoid::scalar::{scalar_to_string, Field};
use schemoid::schemoid::{
    schemoid_isomorphic_bruteforce, Schemoid, SchemoidMorphism, DEFAULT_ISO_BOUND,
};
use serde::Deserialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "schemoid", version, about = "Quasi-schemoid calculator")]
struct Cli {
    /// Emit machine-readable JSON instead of tabular text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a schemoid and print it in the schemoid file format.
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Check the schemoid axiom on a file; exit 1 with a witness on failure.
    Validate { path: String },
    /// Print the structure-constant table p^μ_{στ}.
    Constants { path: String },
    /// Check tameness (T(i)–T(iii)); exit 1 with the failing condition.
    Tame { path: String },
    /// Print the quotient category [C] of a tame schemoid.
    Quotient { path: String },
    /// Search for a schemoid isomorphism between two files.
    Iso {
        a: String,
        b: String,
        /// Object-count cutoff for the brute-force search.
        #[arg(long, default_value_t = DEFAULT_ISO_BOUND)]
        bound: usize,
    },
    /// Algebras attached to categories and schemoids.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Functor representations: homs, Kan extensions, Ext, cohomology.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Discrete schemoid (singleton blocks) on a category file.
    Discrete { category: String },
    /// ι of an association scheme file {"points": n, "relations": [[...]]}.
    #[command(name = "as")]
    AsScheme { scheme: String },
    /// ι of the binary Hamming scheme H(n, 2).
    Hamming { n: usize },
    /// Group-case scheme of a table file {"table": [[...]], "subgroup": [...]}.
    GroupCase { table: String },
    /// S̃(H) of a groupoid given as a category file.
    Groupoid { category: String },
    /// The truncation of (N, len) to objects 0..=n.
    Nat { n: usize },
    /// Powerset-difference schemoid of a set family {"sets": [[...]]}.
    Powerset { sets: String },
    /// Simplicial-complex schemoid of {"vertices": n, "faces": [[...]]}.
    Simplicial { complex: String },
    /// Open-set schemoid of a finite space {"points": n, "opens": [[...]]}.
    OpenSets { space: String },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Category algebra of a category file.
    Category {
        category: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Bose-Mesner algebra of a schemoid file.
    BoseMesner {
        schemoid: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Linear category algebra of the quotient of a tame schemoid.
    Quotient {
        schemoid: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Verify the Stanley-Reisner isomorphism α_K for a complex, and, given
    /// a second complex and a vertex map, the pullback square.
    SrCompare {
        complex: String,
        /// Target complex of a simplicial map.
        #[arg(long)]
        other: Option<String>,
        /// Vertex map into the target, comma-separated.
        #[arg(long, requires = "other")]
        map: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Dimension and basis of the center of an attached algebra.
    Center {
        schemoid: String,
        #[arg(long, value_parser = ["bose-mesner", "category", "quotient"], default_value = "bose-mesner")]
        of: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Hochschild cohomology dimensions HH⁰..HH^max of an attached algebra.
    Hh {
        schemoid: String,
        #[arg(long, value_parser = ["bose-mesner", "category", "quotient"], default_value = "bose-mesner")]
        of: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Check a representation file against a schemoid file.
    Validate { schemoid: String, rep: String },
    /// Dimension and basis of the locally constant (default) or unrestricted
    /// natural transformations between two representations.
    Hom {
        schemoid: String,
        source: String,
        target: String,
        /// Compute unrestricted natural transformations instead.
        #[arg(long)]
        natural: bool,
    },
    /// Pull a representation of the target back along a schemoid morphism.
    Restrict {
        #[command(flatten)]
        m: MorphismArgs,
        rep: String,
    },
    /// Right Kan extension of a source representation (tame target).
    Ran {
        #[command(flatten)]
        m: MorphismArgs,
        rep: String,
    },
    /// Left Kan extension of a source representation (tame target).
    Lan {
        #[command(flatten)]
        m: MorphismArgs,
        rep: String,
    },
    /// Ext^0..Ext^max over the quotient algebra between the Mitchell images
    /// of two representations of a tame schemoid with constants ≤ 1.
    Ext {
        schemoid: String,
        source: String,
        target: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Schemoid cohomology of a representation along a morphism.
    Cohomology {
        #[command(flatten)]
        m: MorphismArgs,
        /// Coefficient representation; defaults to the constant rank-1
        /// representation over --field.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Check the four Morita-equivalence clauses for u: D → C, v: C → D.
    MoritaCheck {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        c: String,
        #[arg(long, default_value = "F2")]
        field: String,
        #[arg(long, default_value_t = 2)]
        dim_bound: usize,
    },
    /// Enumerate all representations within a dimension bound over F2 or F3.
    Enumerate {
        schemoid: String,
        #[arg(long, default_value = "F2")]
        field: String,
        #[arg(long, default_value_t = 1)]
        dim_bound: usize,
    },
}

/// Either an explicit morphism file with its endpoint schemoids, or `--id`
/// with a single schemoid.
#[derive(clap::Args)]
struct MorphismArgs {
    /// Use the identity morphism of --schemoid.
    #[arg(long, conflicts_with_all = ["morphism", "source", "target"], requires = "schemoid")]
    id: bool,
    #[arg(long, requires = "id")]
    schemoid: Option<String>,
    #[arg(long, requires_all = ["source", "target"])]
    morphism: Option<String>,
    #[arg(long)]
    source: Option<String>,
    #[arg(long)]
    target: Option<String>,
}

/// A failed check (exit 1) as opposed to unreadable input (exit 2).
enum Failure {
    Check(String),
    Parse(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        match e {
            IoError::Invalid(msg) => Failure::Check(msg),
            other => Failure::Parse(other.to_string()),
        }
    }
}

fn parse_fail(e: impl std::fmt::Display) -> Failure {
    Failure::Parse(e.to_string())
}

fn check_fail(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

fn load_schemoid(path: &str) -> Result<Schemoid, Failure> {
    let file: SchemoidFile = io::read_json(path)?;
    Ok(schemoid_from_file(&file)?)
}

fn load_rep(path: &str) -> Result<FunctorRep, Failure> {
    let file: RepFile = io::read_json(path)?;
    Ok(rep_from_file(&file)?)
}

fn load_field(name: &str) -> Result<Field, Failure> {
    Field::parse(name).ok_or_else(|| Failure::Parse(format!("unknown field {name:?}")))
}

fn load_morphism(m: &MorphismArgs) -> Result<(SchemoidMorphism, Schemoid, Schemoid), Failure> {
    if m.id {
        let s = load_schemoid(m.schemoid.as_ref().expect("clap enforces --schemoid"))?;
        let u = SchemoidMorphism::identity(&s);
        return Ok((u, s.clone(), s));
    }
    let (Some(mor), Some(src), Some(tgt)) = (&m.morphism, &m.source, &m.target) else {
        return Err(Failure::Parse("need --id or --morphism with --source and --target".into()));
    };
    let source = load_schemoid(src)?;
    let target = load_schemoid(tgt)?;
    let file: MorphismFile = io::read_json(mor)?;
    let u = morphism_from_file(&file, &source, &target).map_err(|e| match e {
        IoError::Invalid(msg) => Failure::Check(format!("not a schemoid morphism: {msg}")),
        other => other.into(),
    })?;
    Ok((u, source, target))
}

#[derive(Deserialize)]
struct SchemeFile {
    #[serde(default = "default_format")]
    format: u32,
    points: usize,
    relations: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct TableFile {
    #[serde(default = "default_format")]
    format: u32,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    subgroup: Vec<usize>,
}

#[derive(Deserialize)]
struct SetsFile {
    #[serde(default = "default_format")]
    format: u32,
    sets: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct ComplexFile {
    #[serde(default = "default_format")]
    format: u32,
    vertices: usize,
    faces: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct SpaceFile {
    #[serde(default = "default_format")]
    format: u32,
    points: usize,
    opens: Vec<Vec<usize>>,
}

fn default_format() -> u32 {
    io::FORMAT
}

fn check_version(format: u32) -> Result<(), Failure> {
    if format == io::FORMAT {
        Ok(())
    } else {
        Err(Failure::Parse(format!("unsupported format version {format}")))
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(()) => 0,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            1
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Construct { kind } => construct(kind, cli.json),
        Command::Validate { path } => {
            let s = load_schemoid(path)?;
            if cli.json {
                print!("{}", to_json(&json!({"format": 1, "valid": true, "blocks": s.n_blocks()})));
            } else {
                println!(
                    "valid schemoid: {} objects, {} morphisms, {} blocks",
                    s.cat.n_objects,
                    s.cat.n_morphisms(),
                    s.n_blocks()
                );
            }
            Ok(())
        }
        Command::Constants { path } => {
            let s = load_schemoid(path)?;
            let p = s.structure_constants();
            if cli.json {
                let entries: Vec<_> = p
                    .table
                    .iter()
                    .map(|(&(sigma, tau, mu), &v)| json!({"sigma": sigma, "tau": tau, "mu": mu, "value": v}))
                    .collect();
                print!("{}", to_json(&json!({"format": 1, "constants": entries})));
            } else {
                for (&(sigma, tau, mu), &v) in &p.table {
                    println!("p[{sigma},{tau}]^{mu} = {v}");
                }
            }
            Ok(())
        }
        Command::Tame { path } => {
            let s = load_schemoid(path)?;
            let report = s.tameness_report();
            if cli.json {
                let mu: Vec<_> = report
                    .mu_table
                    .iter()
                    .flatten()
                    .map(|(&(tau, sigma), &mu)| json!([tau, sigma, mu]))
                    .collect();
                print!(
                    "{}",
                    to_json(&json!({
                        "format": 1,
                        "unital": report.unital,
                        "tii": report.tii_holds,
                        "tiii": report.tiii_holds,
                        "tame": report.tame,
                        "mu_table": mu,
                        "failure": report.tiii_failure.as_ref().map(|f| format!("{f:?}")),
                    }))
                );
            } else if report.tame {
                println!("tame (T(i), T(ii), T(iii) all hold)");
            } else {
                println!(
                    "not tame: unital={} T(ii)={} T(iii)={}",
                    report.unital, report.tii_holds, report.tiii_holds
                );
            }
            if report.tame {
                Ok(())
            } else {
                Err(Failure::Check(match &report.tiii_failure {
                    Some(f) => format!("{f:?}"),
                    None => "T(i) fails: a block mixes identities and non-identities".into(),
                }))
            }
        }
        Command::Quotient { path } => {
            let s = load_schemoid(path)?;
            let qc = s.quotient_category().map_err(|r| {
                Failure::Check(format!(
                    "not tame: unital={} T(ii)={} T(iii) failure={:?}",
                    r.unital, r.tii_holds, r.tiii_failure
                ))
            })?;
            let file = category_to_file(&qc.cat);
            if cli.json {
                print!("{}", to_json(&file));
            } else {
                println!(
                    "quotient category: {} objects (identity classes), {} morphisms (blocks)",
                    qc.cat.n_objects,
                    qc.cat.n_morphisms()
                );
            }
            Ok(())
        }
        Command::Iso { a, b, bound } => {
            let sa = load_schemoid(a)?;
            let sb = load_schemoid(b)?;
            match schemoid_isomorphic_bruteforce(&sa, &sb, *bound).map_err(check_fail)? {
                Some(w) => {
                    if cli.json {
                        print!(
                            "{}",
                            to_json(&json!({
                                "format": 1,
                                "isomorphic": true,
                                "obj_map": w.obj_map,
                                "mor_map": w.mor_map,
                            }))
                        );
                    } else {
                        println!("isomorphic via object map {:?}", w.obj_map);
                    }
                    Ok(())
                }
                None => Err(Failure::Check("no isomorphism exists".into())),
            }
        }
        Command::Algebra { cmd } => algebra(cmd, cli.json),
        Command::Rep { cmd } => rep(cmd, cli.json),
    }
}

fn construct(kind: &ConstructCmd, _json: bool) -> Result<(), Failure> {
    let s: Schemoid = match kind {
        ConstructCmd::Discrete { category } => {
            let file: CategoryFile = io::read_json(category)?;
            let cat = category_from_file(&file)?;
            discrete(cat).map_err(check_fail)?
        }
        ConstructCmd::AsScheme { scheme } => {
            let file: SchemeFile = io::read_json(scheme)?;
            check_version(file.format)?;
            let n = file.points;
            if file.relations.len() != n || file.relations.iter().any(|r| r.len() != n) {
                return Err(Failure::Parse("relations must be an n x n matrix".into()));
            }
            let relation_of: Vec<usize> = file.relations.into_iter().flatten().collect();
            let n_relations = relation_of.iter().copied().max().map_or(0, |m| m + 1);
            let scheme = AssociationScheme { n_points: n, relation_of, n_relations };
            let report = scheme.validate();
            if !report.is_valid() {
                return Err(Failure::Check(report.violations.join("; ")));
            }
            scheme.to_schemoid().map_err(check_fail)?
        }
        ConstructCmd::Hamming { n } => {
            hamming(*n).map_err(check_fail)?.to_schemoid().map_err(check_fail)?
        }
        ConstructCmd::GroupCase { table } => {
            let file: TableFile = io::read_json(table)?;
            check_version(file.format)?;
            let subgroup = if file.subgroup.is_empty() { vec![0] } else { file.subgroup };
            let scheme = group_case(&file.table, &subgroup).map_err(check_fail)?;
            scheme.to_schemoid().map_err(check_fail)?
        }
        ConstructCmd::Groupoid { category } => {
            let file: CategoryFile = io::read_json(category)?;
            let cat = category_from_file(&file)?;
            from_groupoid(&cat).map_err(check_fail)?
        }
        ConstructCmd::Nat { n } => truncated_len(*n),
        ConstructCmd::Powerset { sets } => {
            let file: SetsFile = io::read_json(sets)?;
            check_version(file.format)?;
            let theta: Vec<_> =
                file.sets.iter().map(|s| s.iter().copied().collect()).collect();
            powerset_difference(&theta).schemoid
        }
        ConstructCmd::Simplicial { complex } => {
            let k = load_complex(complex)?;
            simplicial_schemoid(&k).schemoid
        }
        ConstructCmd::OpenSets { space } => {
            let file: SpaceFile = io::read_json(space)?;
            check_version(file.format)?;
            let x = FiniteSpace::new(file.points, file.opens).map_err(check_fail)?;
            open_set_schemoid(&x).schemoid
        }
    };
    print!("{}", to_json(&schemoid_to_file(&s)));
    Ok(())
}

fn load_complex(path: &str) -> Result<SimplicialComplex, Failure> {
    let file: ComplexFile = io::read_json(path)?;
    check_version(file.format)?;
    SimplicialComplex::new(file.vertices, file.faces).map_err(check_fail)
}

fn algebra_table(a: &FDAlgebra) -> serde_json::Value {
    let mut products = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let coeffs: Vec<String> =
                a.mul_basis(i, j).iter().map(scalar_to_string).collect();
            products.push(json!([i, j, coeffs]));
        }
    }
    json!({
        "format": 1,
        "field": a.field.to_string(),
        "dim": a.dim,
        "labels": a.labels,
        "products": products,
    })
}

fn print_algebra(a: &FDAlgebra, name: &str, as_json: bool) {
    if as_json {
        print!("{}", to_json(&algebra_table(a)));
    } else {
        println!("{name}: dim {} over {}", a.dim, a.field);
        for i in 0..a.dim {
            for j in 0..a.dim {
                let terms: Vec<String> = a
                    .mul_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        if c.is_one() {
                            a.labels[k].clone()
                        } else {
                            format!("{}·{}", scalar_to_string(c), a.labels[k])
                        }
                    })
                    .collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                println!("{} * {} = {rhs}", a.labels[i], a.labels[j]);
            }
        }
    }
}

fn attached_algebra(of: &str, s: &Schemoid, field: Field) -> Result<FDAlgebra, Failure> {
    match of {
        "category" => Ok(category_algebra(&s.cat, field)),
        "bose-mesner" => Ok(bose_mesner(s, field)),
        "quotient" => quotient_linear_algebra(s, field).map_err(check_fail),
        other => Err(Failure::Parse(format!("unknown algebra kind {other:?}"))),
    }
}

fn algebra(cmd: &AlgebraCmd, as_json: bool) -> Result<(), Failure> {
    match cmd {
        AlgebraCmd::Category { category, field } => {
            let file: CategoryFile = io::read_json(category)?;
            let cat = category_from_file(&file)?;
            let a = category_algebra(&cat, load_field(field)?);
            print_algebra(&a, "category algebra", as_json);
            Ok(())
        }
        AlgebraCmd::BoseMesner { schemoid, field } => {
            let s = load_schemoid(schemoid)?;
            let a = bose_mesner(&s, load_field(field)?);
            print_algebra(&a, "Bose-Mesner algebra", as_json);
            Ok(())
        }
        AlgebraCmd::Quotient { schemoid, field } => {
            let s = load_schemoid(schemoid)?;
            let a = quotient_linear_algebra(&s, load_field(field)?).map_err(check_fail)?;
            print_algebra(&a, "quotient category algebra", as_json);
            Ok(())
        }
        AlgebraCmd::SrCompare { complex, other, map, field } => {
            let field = load_field(field)?;
            let k = load_complex(complex)?;
            let (sr, alpha, bm, _) = stanley_reisner_mod_squares(&k, field);
            alpha.validate(&sr, &bm).map_err(check_fail)?;
            if !alpha.is_bijective() {
                return Err(Failure::Check("α_K is not bijective".into()));
            }
            let square = match (other, map) {
                (Some(other), Some(map)) => {
                    let l = load_complex(other)?;
                    let f: Vec<usize> = map
                        .split(',')
                        .map(|t| t.trim().parse().map_err(parse_fail))
                        .collect::<Result<_, _>>()?;
                    if f.len() != k.n_vertices {
                        return Err(Failure::Parse(format!(
                            "--map needs {} entries",
                            k.n_vertices
                        )));
                    }
                    let r = sr_pullbacks(&f, &k, &l, field).map_err(check_fail)?;
                    if !r.commutes {
                        return Err(Failure::Check(
                            "α_K ∘ φ* differs from P(φ)* ∘ α_L".into(),
                        ));
                    }
                    Some(true)
                }
                _ => None,
            };
            if as_json {
                print!(
                    "{}",
                    to_json(&json!({
                        "format": 1,
                        "sr_dim": sr.dim,
                        "bose_mesner_dim": bm.dim,
                        "alpha_isomorphism": true,
                        "square_commutes": square,
                    }))
                );
            } else {
                println!("α_K is an algebra isomorphism (dim {})", sr.dim);
                if square == Some(true) {
                    println!("pullback square commutes");
                }
            }
            Ok(())
        }
        AlgebraCmd::Center { schemoid, of, field } => {
            let s = load_schemoid(schemoid)?;
            let a = attached_algebra(of, &s, load_field(field)?)?;
            let (dim, basis) = center(&a);
            if as_json {
                let basis: Vec<Vec<String>> = basis
                    .iter()
                    .map(|v| v.iter().map(scalar_to_string).collect())
                    .collect();
                print!(
                    "{}",
                    to_json(&json!({"format": 1, "algebra_dim": a.dim, "center_dim": dim, "basis": basis}))
                );
            } else {
                println!("center of the {of} algebra (dim {}): dim {dim}", a.dim);
            }
            Ok(())
        }
        AlgebraCmd::Hh { schemoid, of, field, max } => {
            let s = load_schemoid(schemoid)?;
            let a = attached_algebra(of, &s, load_field(field)?)?;
            let dims = hochschild_cohomology(&a, *max).map_err(check_fail)?;
            if as_json {
                print!("{}", to_json(&json!({"format": 1, "hh_dims": dims})));
            } else {
                println!("HH^0..HH^{max}: {dims:?}");
            }
            Ok(())
        }
    }
}

fn print_dims(label: &str, dims: &[usize], as_json: bool) {
    if as_json {
        print!("{}", to_json(&json!({"format": 1, label: dims})));
    } else {
        println!("{label}: {dims:?}");
    }
}

fn rep(cmd: &RepCmd, as_json: bool) -> Result<(), Failure> {
    match cmd {
        RepCmd::Validate { schemoid, rep } => {
            let s = load_schemoid(schemoid)?;
            let r = load_rep(rep)?;
            r.validate(&s).map_err(check_fail)?;
            if as_json {
                print!("{}", to_json(&json!({"format": 1, "valid": true, "dims": r.dims})));
            } else {
                println!("valid representation with dims {:?}", r.dims);
            }
            Ok(())
        }
        RepCmd::Hom { schemoid, source, target, natural } => {
            let s = load_schemoid(schemoid)?;
            let f = load_rep(source)?;
            let g = load_rep(target)?;
            f.validate(&s).map_err(check_fail)?;
            g.validate(&s).map_err(check_fail)?;
            let h = if *natural { nat_hom(&s, &f, &g) } else { lc_hom(&s, &f, &g) };
            let label = if *natural { "natural transformations" } else { "locally constant transformations" };
            if as_json {
                print!("{}", to_json(&json!({"format": 1, "dim": h.dim()})));
            } else {
                println!("{label}: dim {}", h.dim());
            }
            Ok(())
        }
        RepCmd::Restrict { m, rep } => {
            let (u, source, target) = load_morphism(m)?;
            let n = load_rep(rep)?;
            let pulled = restrict(&u, &source, &target, &n).map_err(check_fail)?;
            print!("{}", to_json(&rep_to_file(&pulled)));
            Ok(())
        }
        RepCmd::Ran { m, rep } | RepCmd::Lan { m, rep } => {
            let right = matches!(cmd, RepCmd::Ran { .. });
            let (u, source, target) = load_morphism(m)?;
            let r = load_rep(rep)?;
            r.validate(&source).map_err(check_fail)?;
            let out = if right {
                kan_right(&u, &source, &target, &r)
            } else {
                kan_left(&u, &source, &target, &r)
            }
            .map_err(check_fail)?;
            print!("{}", to_json(&rep_to_file(&out)));
            Ok(())
        }
        RepCmd::Ext { schemoid, source, target, max } => {
            let s = load_schemoid(schemoid)?;
            let f = load_rep(source)?;
            let g = load_rep(target)?;
            f.validate(&s).map_err(check_fail)?;
            g.validate(&s).map_err(check_fail)?;
            let (a, mf) = mitchell(&s, f.field, &f).map_err(check_fail)?;
            let (_, mg) = mitchell(&s, g.field, &g).map_err(check_fail)?;
            let dims = schemoid::repcat::ext_dims(&a, &mf, &mg, *max);
            print_dims("ext_dims", &dims, as_json);
            Ok(())
        }
        RepCmd::Cohomology { m, rep, field, max } => {
            let (u, source, target) = load_morphism(m)?;
            let r = match rep {
                Some(path) => load_rep(path)?,
                None => FunctorRep::constant(&source, load_field(field)?, 1),
            };
            r.validate(&source).map_err(check_fail)?;
            let dims = schemoid_cohomology(&u, &source, &target, &r, *max).map_err(check_fail)?;
            print_dims("cohomology_dims", &dims, as_json);
            Ok(())
        }
        RepCmd::MoritaCheck { u, v, d, c, field, dim_bound } => {
            let sd = load_schemoid(d)?;
            let sc = load_schemoid(c)?;
            let uf: MorphismFile = io::read_json(u)?;
            let vf: MorphismFile = io::read_json(v)?;
            let u = morphism_from_file(&uf, &sd, &sc)?;
            let v = morphism_from_file(&vf, &sc, &sd)?;
            let report = morita_witness_check(&u, &v, &sd, &sc, load_field(field)?, *dim_bound);
            let clause = |r: &Result<(), String>| match r {
                Ok(()) => "ok".to_string(),
                Err(w) => w.clone(),
            };
            if as_json {
                print!(
                    "{}",
                    to_json(&json!({
                        "format": 1,
                        "retract": clause(&report.clause_retract),
                        "roundtrip_reps": clause(&report.clause_roundtrip_reps),
                        "counit_iso": clause(&report.clause_counit_iso),
                        "preserves_lc": clause(&report.clause_preserves_lc),
                        "passed": report.passed,
                    }))
                );
            } else {
                println!("retract: {}", clause(&report.clause_retract));
                println!("roundtrip on reps: {}", clause(&report.clause_roundtrip_reps));
                println!("counit isomorphism: {}", clause(&report.clause_counit_iso));
                println!("preserves locally constant: {}", clause(&report.clause_preserves_lc));
            }
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check("a Morita clause failed".into()))
            }
        }
        RepCmd::Enumerate { schemoid, field, dim_bound } => {
            let s = load_schemoid(schemoid)?;
            let reps =
                enumerate_functor_reps(&s, load_field(field)?, *dim_bound).map_err(check_fail)?;
            if as_json {
                let files: Vec<_> = reps.iter().map(rep_to_file).collect();
                print!("{}", to_json(&json!({"format": 1, "count": reps.len(), "reps": files})));
            } else {
                println!("{} representations within dimension bound {dim_bound}", reps.len());
                for r in &reps {
                    println!("dims {:?}", r.dims);
                }
            }
            Ok(())
        }
    }
}
