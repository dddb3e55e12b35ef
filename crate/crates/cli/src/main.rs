//! Command-line front end for the `sphere-rigidity` library.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sphere_rigidity::belts::{belt_profile, find_belts, is_irreducible};
use sphere_rigidity::betti::{betti_sweep_with, hochster_table, hochster_table_both, Coefficients, SweepOptions};
use sphere_rigidity::census::{
    classify_rigidity, verify_theorems, CensusDatabase, EnumerateOptions, DEFAULT_CAP, CLAIM_IDS,
};
use sphere_rigidity::constructions::construct_named;
use sphere_rigidity::sphere::format::parse_polytope;
use sphere_rigidity::surgery::{all_connected_sums, connected_sum, decompose, DecompositionTree, Gluing};
use sphere_rigidity::{Error, Polytope, Triangulation};

#[derive(Parser)]
#[command(name = "sphere-rigidity", version, about = "Betti numbers, belts and rigidity of simplicial 2-spheres")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel kernels (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Polytope file; standard input when omitted.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(value_name = "FILE", conflicts_with = "input")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    Two,
    Prime,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a sphere.
    Validate(Input),
    /// Print b_0, ..., b_n.
    Betti(Input),
    /// Print the graded Betti table via Hochster's formula.
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Field::Both)]
        field: Field,
    },
    /// List k-belts, or the belt profile when --k is absent.
    Belts {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Split along 3-belts until every part is irreducible.
    Decompose(Input),
    /// Connected sum of two spheres (files or construction names).
    Sum {
        first: String,
        second: String,
        /// Face of the first summand, e.g. 0,1,2 (default: its first face).
        #[arg(long, value_delimiter = ',')]
        face1: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        face2: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        matching: usize,
        /// Every sum up to isomorphism instead of one gluing.
        #[arg(long)]
        all: bool,
        /// With --all, also write each sum as `sum-<i>.txt`.
        #[arg(long, requires = "all")]
        out_dir: Option<PathBuf>,
    },
    /// Write a named polytope, e.g. O6, bipyramid:9, xi2:D20.
    Construct { name: String },
    /// Enumerate every sphere up to n vertices into a database file.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Partition one census layer by Betti vector.
    Rigidity {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Check the structural claims over a census database.
    Verify {
        #[arg(long)]
        db: PathBuf,
        /// `all` or a comma-separated list of claim ids.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

enum Output {
    Text(String),
    Json(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = match out {
                Output::Text(s) => s,
                Output::Json(v) => format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialize")),
            };
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_input(input: &Input) -> Result<Polytope, Error> {
    let text = match input.input.as_ref().or(input.file.as_ref()) {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_polytope(&text)
}

fn read_triangulation(input: &Input) -> Result<Triangulation, Error> {
    read_input(input)?.to_triangulation()
}

/// A file path when one exists, otherwise a construction name; `-` is stdin.
fn load_summand(arg: &str) -> Result<Triangulation, Error> {
    if arg == "-" {
        return read_triangulation(&Input { input: None, file: None });
    }
    if Path::new(arg).is_file() {
        return read_triangulation(&Input { input: Some(arg.into()), file: None });
    }
    construct_named(arg)?.to_triangulation()
}

fn face_arg(face: &Option<Vec<usize>>, t: &Triangulation) -> Result<[usize; 3], Error> {
    match face {
        None => Ok(t.faces()[0]),
        Some(v) if v.len() == 3 => Ok([v[0], v[1], v[2]]),
        Some(v) => Err(Error::InvalidGluing(format!("a face needs 3 vertices, got {v:?}"))),
    }
}

fn join(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn faces_json(p: &Polytope) -> Value {
    match p {
        Polytope::Simplicial(t) => json!(t.faces()),
        Polytope::Polyhedral(s) => json!(s.faces()),
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let json = cli.json;
    let out = |text: String, value: Value| Ok(if json { Output::Json(value) } else { Output::Text(text) });
    match &cli.command {
        Command::Validate(input) => {
            let p = read_input(input)?;
            let s = p.to_polyhedral();
            let simplicial = s.is_simplicial();
            let code = s.canonical_code();
            out(
                format!(
                    "valid: n={} faces={} edges={} simplicial={} code={code}\n",
                    s.n(),
                    s.face_count(),
                    s.edge_count(),
                    if simplicial { "yes" } else { "no" }
                ),
                json!({"valid": true, "n": s.n(), "faces": s.face_count(), "edges": s.edge_count(),
                       "simplicial": simplicial, "code": code}),
            )
        }
        Command::Betti(input) => {
            let t = read_triangulation(input)?;
            let b = betti_sweep_with(&t, &SweepOptions { threads: cli.threads, ..Default::default() })?;
            out(format!("b: {}\n", join(b.values())), json!({"n": t.n(), "b": b.values()}))
        }
        Command::Table { input, field } => {
            let t = read_triangulation(input)?;
            let table = match field {
                Field::Two => hochster_table(&t, Coefficients::Two)?,
                Field::Prime => hochster_table(&t, Coefficients::LargePrime)?,
                Field::Both => hochster_table_both(&t)?,
            };
            out(table.to_string(), json!({"n": table.n(), "rows": table.rows()}))
        }
        Command::Belts { input, k } => {
            let t = read_triangulation(input)?;
            match k {
                Some(k) => {
                    let belts = find_belts(&t, *k)?;
                    let mut text = String::new();
                    for b in &belts {
                        writeln!(text, "{b}").unwrap();
                    }
                    writeln!(text, "count: {}", belts.len()).unwrap();
                    let lists: Vec<&[usize]> = belts.iter().map(|b| b.vertices()).collect();
                    out(text, json!({"k": k, "count": belts.len(), "belts": lists}))
                }
                None => {
                    let profile = belt_profile(&t);
                    let irreducible = t.n() == 4 || is_irreducible(&t);
                    let mut text = String::new();
                    for (k, c) in &profile {
                        writeln!(text, "k={k}: {c}").unwrap();
                    }
                    writeln!(text, "irreducible: {}", if irreducible { "yes" } else { "no" }).unwrap();
                    let map: serde_json::Map<String, Value> = profile.iter().map(|(k, c)| (k.to_string(), json!(c))).collect();
                    out(text, json!({"irreducible": irreducible, "profile": map}))
                }
            }
        }
        Command::Decompose(input) => {
            let t = read_triangulation(input)?;
            let tree = decompose(&t);
            let mut text = String::new();
            write_tree(&tree, 0, &mut text);
            let leaves = tree.leaves();
            writeln!(text, "leaves: {}", leaves.len()).unwrap();
            out(text, json!({"leaves": leaves, "tree": tree}))
        }
        Command::Sum { first, second, face1, face2, matching, all, out_dir } => {
            let p = load_summand(first)?;
            let q = load_summand(second)?;
            if *all {
                let sums = all_connected_sums(&p, &q);
                let mut text = format!("sums: {}\n", sums.len());
                for (i, s) in sums.iter().enumerate() {
                    writeln!(text, "{i}: n={} code={}", s.n(), s.canonical_code()).unwrap();
                    if let Some(dir) = out_dir {
                        std::fs::create_dir_all(dir)?;
                        let path = dir.join(format!("sum-{i}.txt"));
                        std::fs::write(&path, Polytope::Simplicial(s.clone()).to_text())
                            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    }
                }
                let codes: Vec<String> = sums.iter().map(|s| s.canonical_code().to_hex()).collect();
                out(text, json!({"count": sums.len(), "codes": codes}))
            } else {
                let g = Gluing::new(face_arg(face1, &p)?, face_arg(face2, &q)?, *matching);
                let s = Polytope::Simplicial(connected_sum(&p, &q, &g)?);
                let code = s.as_triangulation().unwrap().canonical_code();
                out(s.to_text(), json!({"n": s.n(), "code": code, "faces": faces_json(&s)}))
            }
        }
        Command::Construct { name } => {
            let p = construct_named(name)?;
            out(p.to_text(), json!({"name": name, "n": p.n(), "faces": faces_json(&p)}))
        }
        Command::Census { n, out: path, cap } => {
            let opts = EnumerateOptions { cap: *cap, threads: cli.threads };
            let db = CensusDatabase::build(*n, &opts)?;
            db.save(path)?;
            let mut text = String::new();
            let mut layers = serde_json::Map::new();
            for &m in db.layers() {
                let count = db.layer(m)?.len();
                writeln!(text, "layer n={m}: {count}").unwrap();
                layers.insert(m.to_string(), json!(count));
            }
            writeln!(text, "wrote {}", path.display()).unwrap();
            out(text, json!({"layers": layers, "path": path}))
        }
        Command::Rigidity { db, n } => {
            let db = CensusDatabase::load(db)?;
            let report = classify_rigidity(&db, *n)?;
            let rigid = report.rigid().len();
            let mut text = format!("n={n} spheres={} classes={} rigid={rigid}\n", db.layer(*n)?.len(), report.classes.len());
            let mut classes = Vec::new();
            for c in &report.classes {
                let status = if c.is_rigid() { "rigid" } else { "not rigid" };
                writeln!(text, "b={} members={} {status}", join(c.betti.values()), c.members.len()).unwrap();
                for m in &c.members {
                    writeln!(text, "  {m}").unwrap();
                }
                classes.push(json!({"b": c.betti.values(), "members": c.members, "rigid": c.is_rigid()}));
            }
            out(text, json!({"n": n, "rigid": rigid, "classes": classes}))
        }
        Command::Verify { db, claims, n_min, n_max } => {
            let db = CensusDatabase::load(db)?;
            let ids: Vec<&str> = if claims == "all" { CLAIM_IDS.to_vec() } else { claims.split(',').map(str::trim).collect() };
            let lo = n_min.or_else(|| db.layers().first().copied()).ok_or(Error::IncompleteCensus(4))?;
            let hi = n_max.or_else(|| db.max_n()).ok_or(Error::IncompleteCensus(4))?;
            let report = verify_theorems(&db, lo, hi, &ids)?;
            out(report.to_string(), json!({"all_verified": report.all_verified(), "claims": report.claims}))
        }
    }
}

fn write_tree(tree: &DecompositionTree, depth: usize, text: &mut String) {
    let pad = "  ".repeat(depth);
    match tree {
        DecompositionTree::Leaf { code, n } => writeln!(text, "{pad}leaf n={n} code={code}").unwrap(),
        DecompositionTree::Split { belt, n, parts } => {
            let belt: Vec<String> = belt.iter().map(usize::to_string).collect();
            writeln!(text, "{pad}split n={n} belt {}", belt.join(" ")).unwrap();
            for p in parts.iter() {
                write_tree(p, depth + 1, text);
            }
        }
    }
}
