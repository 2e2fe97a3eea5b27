use anyhow::{bail, Context, Result};
use serde::Serialize;

use nubrick::check::{run_checks, Status};
use nubrick::coxeter::Root;
use nubrick::export::{export_realization, lattice_dot, to_off, FaceRecord, TreeRecord};
use nubrick::faces::{constraint_system, BoundedComplex};
use nubrick::grid::{FerrersRegion, GridPoint, LatticePath};
use nubrick::projection::{parse_staircase, projected};
use nubrick::subword::{w_nu, SubwordInstance};
use nubrick::trees::{MarkedTree, TamariLattice};

use crate::output::{json, signed_tuple, tuple, write_atomic};
use crate::{Cli, Command, Format};

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Trees { path } => trees(&load(path, cli.normalize)?, cli.format),
        Command::Brick { path } => brick(&load(path, cli.normalize)?, cli.format),
        Command::Lattice { path, dot } => lattice(&load(path, cli.normalize)?, dot.as_deref(), cli.format),
        Command::Faces { path, tree, marks } => faces(&load(path, cli.normalize)?, *tree, marks, cli.format),
        Command::Project { path, off, json, unprojected } => project(
            &load(path, cli.normalize)?,
            ProjectOptions { off: off.as_deref(), json: json.as_deref(), unprojected: *unprojected },
            cli.format,
        ),
        Command::Check { path, max_size } => check(&load(path, cli.normalize)?, *max_size, cli.format),
    }
}

fn load(text: &str, normalize: bool) -> Result<FerrersRegion> {
    let path: LatticePath = text.parse().with_context(|| format!("invalid path {text:?}"))?;
    let path = if normalize { path.normalized() } else { path };
    Ok(FerrersRegion::new(&path))
}

fn tree_records(region: &FerrersRegion) -> (TamariLattice, Vec<TreeRecord>) {
    let lattice = TamariLattice::new(region);
    let instance = SubwordInstance::for_region(region);
    let records = lattice
        .trees()
        .iter()
        .enumerate()
        .map(|(id, t)| {
            let facet = nubrick::subword::tree_facet(region, t);
            TreeRecord { id, nodes: t.nodes().to_vec(), positions: facet.positions().to_vec(), brick: instance.brick_vector(&facet) }
        })
        .collect();
    (lattice, records)
}

fn positions(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn points(p: &[GridPoint]) -> String {
    let parts: Vec<String> = p.iter().map(GridPoint::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn roots(r: &[Root]) -> String {
    if r.is_empty() {
        return "none".to_string();
    }
    r.iter().map(Root::to_string).collect::<Vec<_>>().join(", ")
}

fn trees(region: &FerrersRegion, format: Format) -> Result<Outcome> {
    let (lattice, records) = tree_records(region);
    if format == Format::Json {
        return Ok(Outcome::ok(json(&records)?));
    }
    let mut out = format!(
        "path {}: {} trees, {} points, w = {}\n",
        region.path(),
        records.len(),
        region.points().len(),
        w_nu(region)
    );
    for r in &records {
        let tag = if r.id == lattice.min_id() { "  (min)" } else { "" };
        out.push_str(&format!("T{}: {}  positions {}{tag}\n", r.id, points(&r.nodes), positions(&r.positions)));
    }
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct BrickListing {
    path: String,
    trees: Vec<TreeRecord>,
    cone: Vec<Root>,
    cone_full_word: Vec<Root>,
}

fn brick(region: &FerrersRegion, format: Format) -> Result<Outcome> {
    let (_, records) = tree_records(region);
    let instance = SubwordInstance::for_region(region);
    let listing = BrickListing {
        path: region.path().to_string(),
        trees: records,
        cone: instance.without_extreme_letters().bruhat_cone(),
        cone_full_word: instance.bruhat_cone(),
    };
    if format == Format::Json {
        return Ok(Outcome::ok(json(&listing)?));
    }
    let mut out = String::new();
    for r in &listing.trees {
        out.push_str(&format!("T{}: {}\n", r.id, signed_tuple(&r.brick)));
    }
    out.push_str(&format!("cone: {}\n", roots(&listing.cone)));
    out.push_str(&format!("cone (full word): {}\n", roots(&listing.cone_full_word)));
    Ok(Outcome::ok(out))
}

fn lattice(region: &FerrersRegion, dot: Option<&str>, format: Format) -> Result<Outcome> {
    let lattice = TamariLattice::new(region);
    match dot {
        Some("-") => return Ok(Outcome::ok(lattice_dot(&lattice))),
        Some(file) => {
            write_atomic(std::path::Path::new(file), &lattice_dot(&lattice))?;
            return Ok(Outcome::ok(String::new()));
        }
        None => {}
    }
    if format == Format::Json {
        let edges: Vec<_> = export_realization(region).edges;
        return Ok(Outcome::ok(json(&edges)?));
    }
    let mut out = format!("{} trees, {} rotations, min T{}\n", lattice.len(), lattice.edges().len(), lattice.min_id());
    for e in lattice.edges() {
        out.push_str(&format!("T{} -> T{}  {} -> {}\n", e.lower, e.upper, e.node, e.replacement));
    }
    Ok(Outcome::ok(out))
}

fn parse_mark(text: &str) -> Result<GridPoint> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (x, y) = inner.split_once(',').with_context(|| format!("mark {text:?} is not of the form x,y"))?;
    Ok(GridPoint::new(x.trim().parse()?, y.trim().parse()?))
}

#[derive(Serialize)]
struct SystemReport {
    tree: usize,
    marks: Vec<GridPoint>,
    strict: Vec<(usize, usize)>,
    equal: Vec<(usize, usize)>,
    feasible: bool,
    witness: Option<Vec<i64>>,
}

fn faces(region: &FerrersRegion, tree: Option<usize>, marks: &[String], format: Format) -> Result<Outcome> {
    let complex = BoundedComplex::new(region);
    if let Some(id) = tree {
        let lattice = complex.lattice();
        if id >= lattice.len() {
            bail!("tree id {id} out of range 0..{}", lattice.len());
        }
        let marks = marks.iter().map(|m| parse_mark(m)).collect::<Result<Vec<_>>>()?;
        let marked = MarkedTree::new(lattice.tree(id).clone(), marks)?;
        let cs = constraint_system(region, complex.instance(), &marked);
        let witness = cs.solve();
        let report = SystemReport {
            tree: id,
            marks: marked.marks.clone(),
            strict: cs.strict.clone(),
            equal: cs.equal.clone(),
            feasible: witness.is_some(),
            witness: witness.clone(),
        };
        if format == Format::Json {
            return Ok(Outcome::ok(json(&report)?));
        }
        let verdict = match &witness {
            Some(w) => format!("feasible, witness {}", tuple(w)),
            None => "infeasible".to_string(),
        };
        return Ok(Outcome::ok(format!("T{id} marks {}\n{cs}\n{verdict}\n", points(&marked.marks))));
    }
    let records: Vec<FaceRecord> = export_realization(region).faces;
    if format == Format::Json {
        return Ok(Outcome::ok(json(&records)?));
    }
    let mut out = String::new();
    for dim in 0..=records.iter().map(|f| f.dim).max().unwrap_or(0) {
        out.push_str(&format!("dim {dim}: {} faces\n", records.iter().filter(|f| f.dim == dim).count()));
    }
    for f in &records {
        let ids: Vec<String> = f.vertices.iter().map(|v| format!("T{v}")).collect();
        out.push_str(&format!("dim {}  T{}  ascents {}  vertices {}\n", f.dim, f.base, points(&f.ascents), ids.join(",")));
    }
    Ok(Outcome::ok(out))
}

struct ProjectOptions<'a> {
    off: Option<&'a std::path::Path>,
    json: Option<&'a std::path::Path>,
    unprojected: bool,
}

fn project(region: &FerrersRegion, opts: ProjectOptions<'_>, format: Format) -> Result<Outcome> {
    let spec = match parse_staircase(region.path()) {
        Ok(spec) => Some(spec),
        Err(err) if opts.unprojected => {
            eprintln!("warning: {err}; emitting unprojected brick vectors");
            None
        }
        Err(err) => bail!("{err}"),
    };
    let bundle = export_realization(region);
    if let Some(path) = opts.json {
        write_atomic(path, &json(&bundle)?)?;
    }
    if let Some(path) = opts.off {
        let Some(mesh) = to_off(&bundle) else {
            bail!("realization has dimension {}; mesh export needs at most 3", bundle.coordinate_dim());
        };
        write_atomic(path, &mesh)?;
    }
    if format == Format::Json {
        return Ok(Outcome::ok(json(&bundle)?));
    }
    let lattice = TamariLattice::new(region);
    let mut out = String::new();
    match &spec {
        Some(spec) => {
            let groups: Vec<String> = spec
                .m_sets
                .iter()
                .map(|m| format!("{{{}}}", m.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            out.push_str(&format!(
                "path {}: {} trees, n = {}, N = {}, M = {}\n",
                region.path(),
                lattice.len(),
                spec.n(),
                spec.big_n,
                groups.join(" ")
            ));
            for (id, t) in lattice.trees().iter().enumerate() {
                let pi = projected(region, spec, t)?;
                out.push_str(&format!("T{id}: pi = {}  y = {}\n", signed_tuple(&pi), tuple(&bundle.vertices[&id])));
            }
        }
        None => {
            out.push_str(&format!("path {}: {} trees, unprojected\n", region.path(), lattice.len()));
            for (id, v) in &bundle.vertices {
                out.push_str(&format!("T{id}: b = {}\n", signed_tuple(v)));
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn check(region: &FerrersRegion, max_size: usize, format: Format) -> Result<Outcome> {
    let size = region.points().len();
    if size > max_size {
        bail!("path has {size} lattice points, above the limit {max_size} (raise --max-size)");
    }
    let report = run_checks(region.path());
    let code = if report.all_passed() { 0 } else { 2 };
    if format == Format::Json {
        return Ok(Outcome { stdout: json(&report)?, code });
    }
    let mut out = String::new();
    for o in &report.outcomes {
        out.push_str(&format!("{o}\n"));
    }
    let count = |s: Status| report.outcomes.iter().filter(|o| o.status == s).count();
    out.push_str(&format!(
        "{} passed, {} failed, {} skipped\n",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skip)
    ));
    Ok(Outcome { stdout: out, code })
}
