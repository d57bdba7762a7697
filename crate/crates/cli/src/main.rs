//! `rgcr`: tiling signatures, polygon geometry, diagram verification and
//! gluing enumeration from the command line.
//!
//! Exit status: 0 success, 1 invalid input, 2 a verification check failed,
//! 3 the requested search exceeds its limits.

mod num;

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rgcr::diagrams::{
    checkerboard, from_gluing, parse_diagram, to_gluing, verify, write_diagram, DiagramError,
    FaceColor, GluingSpec, SurfaceMap,
};
use rgcr::enumerate::{enumerate_diagrams, EnumeratedDiagram, SearchError, SearchLimits};
use rgcr::geometry::{
    dihedral_check, interior_angles, polygon_geometry, regular_cross_ratio, wedge_angles,
    WedgeAngles, DEFAULT_TOLERANCE,
};
use rgcr::signatures::{
    approx, count_bounds, enumerate_signatures, signature_from_pair, TilingSignature,
};

use crate::num::sig12;

#[derive(Parser, Debug)]
#[command(
    name = "rgcr",
    version,
    about = "Right-angled alternating links on thickened surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the tiling signatures (m, n, k_m, k_n) of a genus-g surface.
    Signatures {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
    },
    /// Evaluate the bounds on tiling pairs and on links for genus g.
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
    },
    /// Angles, edge lengths, areas and wedge angles of the [n,m,n,m] tiling.
    Geometry {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Run every diagram check on a diagram file.
    Verify { file: PathBuf },
    /// Enumerate all diagrams of a signature.
    Enumerate(SearchArgs),
    /// Enumerate the one-component diagrams of a signature.
    KnotSearch(SearchArgs),
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, allow_negative_numbers = true)]
    genus: i64,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    /// Number of n-gons (required on the torus, checked otherwise).
    #[arg(long)]
    kn: Option<u64>,
    /// Number of m-gons (required on the torus, checked otherwise).
    #[arg(long)]
    km: Option<u64>,
    /// Directory for the diagram files and summary.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Count a diagram and its mirror image separately.
    #[arg(long)]
    no_mirror_quotient: bool,
    #[arg(long, default_value_t = SearchLimits::default().max_edges)]
    max_edges: usize,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Check(String),
    TooLarge(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Check(_) => 2,
            Failure::TooLarge(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Check(m) | Failure::TooLarge(m) => m,
        }
    }
}

fn input(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Signatures { genus } => signatures(genus, out),
        Command::Bound { genus } => bound(genus, out),
        Command::Geometry { n, m, tolerance } => geometry(n, m, tolerance, out),
        Command::Verify { file } => verify_file(&file, out),
        Command::Enumerate(args) => search(&args, false, out),
        Command::KnotSearch(args) => search(&args, true, out),
    }
}

fn signatures(genus: i64, out: &mut String) -> Result<(), Failure> {
    let sigs = enumerate_signatures(genus).map_err(input)?;
    out.push_str("Genus m n k_m k_n\n");
    for s in &sigs {
        let _ = writeln!(out, "{s}");
    }
    let _ = writeln!(out, "count {}", sigs.len());
    Ok(())
}

fn bound(genus: i64, out: &mut String) -> Result<(), Failure> {
    let b = count_bounds(genus).map_err(input)?;
    let _ = writeln!(out, "genus {}", b.genus);
    let _ = writeln!(out, "pair_bound {}", b.pair_bound);
    let _ = writeln!(out, "pair_bound_approx {}", sig12(approx(&b.pair_bound)));
    let _ = writeln!(out, "factorial {}!", b.factorial_argument());
    let _ = writeln!(out, "link_bound {}", b.link_bound);
    let _ = writeln!(out, "link_bound_approx {}", sig12(approx(&b.link_bound)));
    Ok(())
}

fn angle(out: &mut String, label: &str, radians: f64) {
    let _ = writeln!(
        out,
        "{label} {} rad {} deg",
        sig12(radians),
        sig12(radians.to_degrees())
    );
}

fn wedge_line(out: &mut String, label: &str, w: &WedgeAngles) {
    let _ = writeln!(
        out,
        "{label} A {} B {} C {} D {} E {} F {}",
        sig12(w.a),
        sig12(w.b),
        sig12(w.c),
        sig12(w.d),
        sig12(w.e),
        sig12(w.f)
    );
}

fn geometry(n: u32, m: u32, tolerance: f64, out: &mut String) -> Result<(), Failure> {
    if !(tolerance > 0.0) {
        return Err(input(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let (alpha_n, alpha_m) = interior_angles(n, m).map_err(input)?;
    let tn = polygon_geometry(n, alpha_n).map_err(input)?;
    let tm = polygon_geometry(m, alpha_m).map_err(input)?;
    let _ = writeln!(out, "n {n} m {m}");
    angle(out, "alpha_n", alpha_n);
    angle(out, "alpha_m", alpha_m);
    let _ = writeln!(out, "flat {}", tn.flat);
    let _ = writeln!(out, "edge_length_n {}", sig12(tn.edge_length));
    let _ = writeln!(out, "edge_length_m {}", sig12(tm.edge_length));
    let _ = writeln!(out, "area_n {}", sig12(tn.area));
    let _ = writeln!(out, "area_m {}", sig12(tm.area));
    wedge_line(out, "wedge_n", &wedge_angles(n, alpha_n));
    wedge_line(out, "wedge_m", &wedge_angles(m, alpha_m));
    let dihedral = dihedral_check(alpha_n, alpha_m);
    angle(out, "dihedral", dihedral);
    for (label, x) in [("cross_ratio_n", n), ("cross_ratio_m", m)] {
        match regular_cross_ratio(x) {
            Ok(c) => {
                let _ = writeln!(out, "{label} {}", sig12(c));
            }
            Err(_) => {
                let _ = writeln!(out, "{label} undefined");
            }
        }
    }
    let right_angle = (dihedral - PI / 2.0).abs() <= tolerance;
    let equal_edges = (tn.edge_length - tm.edge_length).abs() <= tolerance;
    let _ = writeln!(out, "check right_angle {right_angle}");
    let _ = writeln!(out, "check equal_edges {equal_edges}");
    if right_angle && equal_edges {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "geometry checks failed at tolerance {tolerance}"
        )))
    }
}

fn verify_file(path: &Path, out: &mut String) -> Result<(), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let spec = parse_diagram(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let map = from_gluing(&spec).map_err(|e| match e {
        DiagramError::Valence { .. } => Failure::Check(e.to_string()),
        e => input(e),
    })?;
    let report = verify(&map).map_err(|e| Failure::Check(e.to_string()))?;
    let _ = writeln!(out, "{report}");
    if report.passes() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} fails the diagram checks",
            path.display()
        )))
    }
}

fn resolve_signature(args: &SearchArgs) -> Result<TilingSignature, Failure> {
    let genus = u32::try_from(args.genus)
        .ok()
        .filter(|&g| g >= 1)
        .ok_or_else(|| {
            input(format!(
                "invalid genus {}: genus must be at least 1",
                args.genus
            ))
        })?;
    if genus == 1 {
        let sig = TilingSignature::euclidean(args.n, args.m).map_err(input)?;
        let (k_n, k_m) = match (args.kn, args.km) {
            (Some(k_n), Some(k_m)) => (k_n, k_m),
            (Some(k_n), None) if k_n * u64::from(sig.n) % u64::from(sig.m) == 0 => {
                (k_n, k_n * u64::from(sig.n) / u64::from(sig.m))
            }
            (None, Some(k_m)) if k_m * u64::from(sig.m) % u64::from(sig.n) == 0 => {
                (k_m * u64::from(sig.m) / u64::from(sig.n), k_m)
            }
            (None, None) => {
                return Err(input(
                    "the torus needs explicit polygon counts (--kn and --km)",
                ))
            }
            _ => return Err(input("polygon counts must satisfy k_n*n = k_m*m")),
        };
        return sig.with_counts(k_n, k_m).map_err(input);
    }
    let sig = signature_from_pair(genus, args.n, args.m).ok_or_else(|| {
        input(format!(
            "no [n,m,n,m] tiling of a genus-{genus} surface with n = {} and m = {}",
            args.n, args.m
        ))
    })?;
    // explicit counts must agree with the ones the surface forces
    let k_n = args.kn.unwrap_or(sig.k_n.unwrap_or(0));
    let k_m = args.km.unwrap_or(sig.k_m.unwrap_or(0));
    sig.with_counts(k_n, k_m).map_err(input)
}

/// The map as a polygon gluing, with white faces named `W<i>` and shaded
/// faces `S<i>`.
fn named_gluing(map: &SurfaceMap) -> GluingSpec {
    let mut spec = to_gluing(map);
    if let Ok(coloring) = checkerboard(map) {
        let (mut white, mut shaded) = (0, 0);
        for (f, polygon) in spec.polygons.iter_mut().enumerate() {
            polygon.id = match coloring.color(f) {
                FaceColor::White => {
                    white += 1;
                    format!("W{}", white - 1)
                }
                FaceColor::Shaded => {
                    shaded += 1;
                    format!("S{}", shaded - 1)
                }
            };
        }
    }
    spec
}

fn diagram_file(sig: &TilingSignature, d: &EnumeratedDiagram) -> String {
    format!(
        "# signature {sig}\n# components {}\n# form {}\n{}",
        d.report.components,
        d.form,
        write_diagram(&named_gluing(&d.map))
    )
}

fn search(args: &SearchArgs, knots_only: bool, out: &mut String) -> Result<(), Failure> {
    let sig = resolve_signature(args)?;
    let limits = SearchLimits {
        max_edges: args.max_edges,
        mirror_quotient: !args.no_mirror_quotient,
        ..SearchLimits::default()
    };
    let result = enumerate_diagrams(&sig, &limits).map_err(|e| match e {
        SearchError::TooLarge { .. } => Failure::TooLarge(e.to_string()),
        e => input(e),
    })?;
    let listed: Vec<&EnumeratedDiagram> = result
        .diagrams
        .iter()
        .filter(|d| !knots_only || d.report.components == 1)
        .collect();

    let mut summary = String::new();
    let _ = writeln!(summary, "signature {sig}");
    let _ = writeln!(summary, "mirror_quotient {}", limits.mirror_quotient);
    let _ = writeln!(summary, "leaves {}", result.leaves);
    let _ = writeln!(summary, "candidates {}", result.candidates);
    summary.push_str("index components crossings file form\n");
    for (i, d) in listed.iter().enumerate() {
        let _ = writeln!(
            summary,
            "{i} {} {} {} {}",
            d.report.components,
            d.report.vertices,
            file_name(i),
            d.form
        );
    }
    let _ = writeln!(summary, "diagrams {}", result.diagrams.len());
    let _ = writeln!(summary, "knots {}", result.knot_count);

    if let Some(dir) = &args.out {
        let io = |e: std::io::Error| input(format!("cannot write to {}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        for (i, d) in listed.iter().enumerate() {
            fs::write(dir.join(file_name(i)), diagram_file(&sig, d)).map_err(io)?;
        }
        fs::write(dir.join("summary.txt"), &summary).map_err(io)?;
    }
    out.push_str(&summary);
    Ok(())
}

fn file_name(i: usize) -> String {
    format!("diagram_{i:03}.diagram")
}
