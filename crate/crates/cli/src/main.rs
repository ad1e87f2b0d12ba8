//! Batch front end: parse curve and braid files, run one operation, emit
//! deterministic JSON (and optional SVG step frames).
//!
//! Exit codes: 0 success, 1 domain errors (with a machine-readable error
//! object on stdout), 2 parse/IO errors. `BIGONKIT_SEED` fixes the seed of
//! the deterministic time-jitter used to resolve non-generic projections.

mod formats;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bigonkit::bigon::{
    fill, geometric_intersection_number, incidence_levels, straighten_arc, straighten_loop,
    BigonError, FeatureSet, GinCurve, InputCurve, LinePair,
};
use bigonkit::braid::{
    braid_word, connected_set_criterion, linking_matrix, linking_number, time_jitter,
    unlinked_finite, BraidError, PureBraid,
};
use bigonkit::curves::{crossing_word, cyclic_crossing_word, is_contractible};
use bigonkit::freegroup::{EndoSpec, Word};
use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use formats::{points_of, trace_to_json, BraidFile, CurveFile, ErrorObject, Rat};

#[derive(Parser)]
#[command(name = "bigonkit", version, about = "Exact curve and braid computations in the punctured plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Freely reduce a word given in text form.
    ReduceWord { input: PathBuf },
    /// Conjugacy test with witness for two words.
    Conjugate { input: PathBuf },
    /// Detect whether a generator-conjugating endomorphism is inner.
    Inner { input: PathBuf },
    /// Crossing words of every path in a curve file.
    WordCmd {
        #[command(flatten)]
        args: CurveArgs,
    },
    /// Are the two open paths homotopic rel endpoints?
    Homotopic {
        #[command(flatten)]
        args: CurveArgs,
    },
    /// Contractibility of every closed path.
    Contractible {
        #[command(flatten)]
        args: CurveArgs,
    },
    /// Filling of the curves in the file.
    Fill {
        #[command(flatten)]
        args: CurveArgs,
    },
    /// Straighten path `alpha_prime` onto `alpha` rel pinned tails.
    StraightenArc {
        #[command(flatten)]
        args: CurveArgs,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Straighten loop `c_prime` onto `c` (optionally pinned).
    StraightenLoop {
        #[command(flatten)]
        args: CurveArgs,
        #[command(flatten)]
        svg: SvgArgs,
    },
    /// Geometric intersection number of paths `c1` and `c2`.
    Gin {
        #[command(flatten)]
        args: CurveArgs,
    },
    /// Incidence levels of arc family `arc0..` against images `img0..`.
    Levels {
        #[command(flatten)]
        args: CurveArgs,
    },
    /// Validate a braid file.
    BraidValidate { input: PathBuf },
    /// Linking number or full matrix.
    BraidLink {
        input: PathBuf,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Chronological braid word from the x-projection.
    BraidWordCmd { input: PathBuf },
    /// Triviality through the Artin action.
    BraidTrivial { input: PathBuf },
    /// Full unlinkedness report.
    Unlinked { input: PathBuf },
    /// Linking-constancy criterion for a strand partition.
    ConnectedCriterion { input: PathBuf },
}

#[derive(clap::Args)]
struct CurveArgs {
    input: PathBuf,
}

#[derive(clap::Args)]
struct SvgArgs {
    /// Base SVG path; one frame per step is written as NAME.NNN.svg.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Overlay all frames into a single SVG with an opacity ramp.
    #[arg(long)]
    single_svg: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            let text = to_stable_json(&value);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("{}", to_stable_json(&json!({"error": "Io", "detail": e.to_string()})));
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(obj)) => {
            print!("{}", to_stable_json(&serde_json::to_value(&obj).unwrap()));
            ExitCode::from(1)
        }
        Err(Failure::Io(detail)) => {
            eprintln!("{}", to_stable_json(&json!({"error": "Parse", "detail": detail})));
            ExitCode::from(2)
        }
    }
}

fn to_stable_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

enum Failure {
    /// Domain error: exit 1 with a machine-readable object.
    Domain(ErrorObject),
    /// Parse or IO problem: exit 2.
    Io(String),
}

fn io_err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Io(e.to_string())
}

fn domain(kind: &str) -> ErrorObject {
    ErrorObject::new(kind)
}

fn bigon_failure(e: BigonError) -> Failure {
    let obj = match &e {
        BigonError::NotHomotopic {
            alpha_word,
            prime_word,
        } => {
            let mut o = domain("NotHomotopic");
            o.words = Some(vec![alpha_word.display(), prime_word.display()]);
            o
        }
        BigonError::NotFreelyHomotopic {
            alpha_word,
            prime_word,
        } => {
            let mut o = domain("NotFreelyHomotopic");
            o.words = Some(vec![alpha_word.display(), prime_word.display()]);
            o
        }
        BigonError::Inessential => domain("Inessential"),
        BigonError::PinClassNontrivial { .. } => domain("PinClassNontrivial"),
        BigonError::ConstraintConflict { detail } => {
            let mut o = domain("ConstraintConflict");
            o.detail = Some(detail.clone());
            o
        }
        BigonError::NonTransverse { .. } => {
            let mut o = domain("NonTransverse");
            o.detail = Some(e.to_string());
            o
        }
        BigonError::InvalidInput(_) | BigonError::Curve(_) => {
            return Failure::Io(e.to_string());
        }
        BigonError::Internal(_) => {
            let mut o = domain("Internal");
            o.detail = Some(e.to_string());
            o
        }
    };
    Failure::Domain(obj)
}

fn braid_failure(e: BraidError) -> Failure {
    match &e {
        BraidError::Collision(c) => {
            let mut o = domain("Collision");
            o.t = Some(Rat(c.t.clone()));
            o.i = Some(c.i);
            o.j = Some(c.j);
            Failure::Domain(o)
        }
        BraidError::NonGenericProjection { t, detail } => {
            let mut o = domain("NonGenericProjection");
            o.t = Some(Rat(t.clone()));
            o.detail = Some(detail.clone());
            Failure::Domain(o)
        }
        BraidError::SameStrand => Failure::Io(e.to_string()),
        BraidError::Malformed(_) => Failure::Io(e.to_string()),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(io_err)?;
    serde_json::from_str(&text).map_err(io_err)
}

/// The jitter seed for genericity resolution, from `BIGONKIT_SEED`.
fn jitter_seed() -> u64 {
    std::env::var("BIGONKIT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

/// Run a braid-word-dependent computation, retiming deterministically when
/// the projection is non-generic (seeded by `BIGONKIT_SEED`).
fn with_generic_braid<T>(
    braid: &PureBraid,
    f: impl Fn(&PureBraid) -> Result<T, BraidError>,
) -> Result<T, BraidError> {
    match f(braid) {
        Ok(v) => return Ok(v),
        Err(BraidError::NonGenericProjection { .. }) => {}
        Err(e) => return Err(e),
    }
    let base = jitter_seed();
    let mut last = None;
    for attempt in 0..32u64 {
        match time_jitter(braid, base.wrapping_add(attempt)).and_then(|b| f(&b)) {
            Ok(v) => return Ok(v),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt ran"))
}

#[derive(Deserialize)]
struct WordInput {
    #[serde(default)]
    letters: Option<String>,
    #[serde(default)]
    w1: Option<String>,
    #[serde(default)]
    w2: Option<String>,
    #[serde(default)]
    rank: Option<u32>,
    #[serde(default)]
    images: Option<Vec<String>>,
}

fn run(cli: &Cli) -> Result<serde_json::Value, Failure> {
    match &cli.command {
        Command::ReduceWord { input } => {
            let spec: WordInput = read_json(input)?;
            let text = spec
                .letters
                .ok_or_else(|| Failure::Io(String::from("missing field `letters`")))?;
            let word = Word::parse(&text).map_err(io_err)?;
            Ok(json!({ "word": word.display() }))
        }
        Command::Conjugate { input } => {
            let spec: WordInput = read_json(input)?;
            let w1 = Word::parse(&spec.w1.ok_or_else(|| Failure::Io("missing `w1`".into()))?)
                .map_err(io_err)?;
            let w2 = Word::parse(&spec.w2.ok_or_else(|| Failure::Io("missing `w2`".into()))?)
                .map_err(io_err)?;
            let witness = w1.conjugator_to(&w2);
            Ok(json!({
                "conjugate": witness.is_some(),
                "witness": witness.map(|w| w.display()),
            }))
        }
        Command::Inner { input } => {
            let spec: WordInput = read_json(input)?;
            let rank = spec.rank.ok_or_else(|| Failure::Io("missing `rank`".into()))?;
            let images = spec
                .images
                .ok_or_else(|| Failure::Io("missing `images`".into()))?
                .iter()
                .map(|t| Word::parse(t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(io_err)?;
            let endo = EndoSpec::new(rank, images).map_err(io_err)?;
            match endo.detect_inner() {
                Ok(c) => Ok(json!({ "inner": c.map(|w| w.display()) })),
                Err(e) => {
                    let mut o = domain("HypothesisViolated");
                    o.detail = Some(e.to_string());
                    Err(Failure::Domain(o))
                }
            }
        }
        Command::WordCmd { args } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let mut out = Vec::new();
            for p in &file.paths {
                let (word, cyclic) = if p.closed {
                    let l = file.closed_loop(&p.id).map_err(Failure::Io)?;
                    let w = cyclic_crossing_word(&l, &punctures).map_err(io_err)?;
                    (w.display(), true)
                } else {
                    let pa = file.open_path(&p.id).map_err(Failure::Io)?;
                    let w = crossing_word((&pa).into(), &punctures).map_err(io_err)?;
                    (w.display(), false)
                };
                out.push(json!({ "id": p.id, "closed": cyclic, "word": word }));
            }
            Ok(json!({ "words": out }))
        }
        Command::Homotopic { args } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let opens: Vec<_> = file.paths.iter().filter(|p| !p.closed).collect();
            if opens.len() != 2 {
                return Err(Failure::Io(String::from(
                    "homotopic expects exactly two open paths",
                )));
            }
            let g1 = file.open_path(&opens[0].id).map_err(Failure::Io)?;
            let g2 = file.open_path(&opens[1].id).map_err(Failure::Io)?;
            let same =
                bigonkit::curves::homotopic_rel_endpoints(&g1, &g2, &punctures).map_err(io_err)?;
            if same {
                Ok(json!({ "homotopic": true }))
            } else {
                let w1 = crossing_word((&g1).into(), &punctures).map_err(io_err)?;
                let w2 = crossing_word((&g2).into(), &punctures).map_err(io_err)?;
                let mut o = domain("NotHomotopic");
                o.words = Some(vec![w1.display(), w2.display()]);
                Err(Failure::Domain(o))
            }
        }
        Command::Contractible { args } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let mut out = Vec::new();
            for p in file.paths.iter().filter(|p| p.closed) {
                let l = file.closed_loop(&p.id).map_err(Failure::Io)?;
                let c = is_contractible(&l, &punctures).map_err(io_err)?;
                out.push(json!({ "id": p.id, "contractible": c }));
            }
            Ok(json!({ "results": out }))
        }
        Command::Fill { args } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let curves: Vec<InputCurve> = file
                .paths
                .iter()
                .map(|p| InputCurve {
                    vertices: formats::to_points(&p.vertices),
                    closed: p.closed,
                })
                .collect();
            let region = fill(&curves, &[], &punctures);
            let mut faces = Vec::new();
            for fi in region.included_faces() {
                let oc = region.arrangement.faces[fi].outer.expect("bounded");
                let poly = region.arrangement.cycle_polygon(oc);
                faces.push(points_of(&poly));
            }
            Ok(json!({
                "included_faces": faces,
                "face_count": faces.len(),
            }))
        }
        Command::StraightenArc { args, svg } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let alpha = file.open_path("alpha").map_err(Failure::Io)?;
            let prime = file.open_path("alpha_prime").map_err(Failure::Io)?;
            let pair = LinePair::new(alpha.clone(), prime).map_err(bigon_failure)?;
            let c_static = FeatureSet::points(formats::to_points(&file.c_points));
            let c_moving = FeatureSet::points(formats::to_points(&file.c_prime_points));
            let trace = straighten_arc(&pair, &punctures, &c_static, &c_moving)
                .map_err(bigon_failure)?;
            write_svg_frames(svg, alpha.vertices(), false, &trace, &punctures)?;
            Ok(serde_json::to_value(trace_to_json(&trace)).unwrap())
        }
        Command::StraightenLoop { args, svg } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let c = file.closed_loop("c").map_err(Failure::Io)?;
            let c_prime = file.closed_loop("c_prime").map_err(Failure::Io)?;
            let pin = file.pin.as_ref().map(|p| p.to_point());
            let trace =
                straighten_loop(&c, &c_prime, &punctures, pin).map_err(bigon_failure)?;
            write_svg_frames(svg, c.vertices(), true, &trace, &punctures)?;
            Ok(serde_json::to_value(trace_to_json(&trace)).unwrap())
        }
        Command::Gin { args } => {
            let file: CurveFile = read_json(&args.input)?;
            let punctures = file.punctures().map_err(Failure::Io)?;
            let load = |id: &str| -> Result<GinCurve, Failure> {
                let p = file.find(id).map_err(Failure::Io)?;
                Ok(if p.closed {
                    GinCurve::from(file.closed_loop(id).map_err(Failure::Io)?)
                } else {
                    GinCurve::from(file.open_path(id).map_err(Failure::Io)?)
                })
            };
            let c1 = load("c1")?;
            let c2 = load("c2")?;
            let g = geometric_intersection_number(&c1, &c2, &punctures).map_err(bigon_failure)?;
            Ok(json!({ "gin": g }))
        }
        Command::Levels { args } => {
            let file: CurveFile = read_json(&args.input)?;
            let mut arcs = Vec::new();
            let mut images = Vec::new();
            for k in 0.. {
                let arc_id = format!("arc{k}");
                let img_id = format!("img{k}");
                if file.find(&arc_id).is_err() {
                    break;
                }
                arcs.push(file.open_path(&arc_id).map_err(Failure::Io)?);
                images.push(file.open_path(&img_id).map_err(Failure::Io)?);
            }
            let levels = incidence_levels(&arcs, &images).map_err(bigon_failure)?;
            Ok(json!({ "levels": levels }))
        }
        Command::BraidValidate { input } => {
            let file: BraidFile = read_json(input)?;
            let braid = file.to_braid().map_err(braid_failure)?;
            Ok(json!({ "ok": true, "strands": braid.len() }))
        }
        Command::BraidLink { input, i, j } => {
            let file: BraidFile = read_json(input)?;
            let braid = file.to_braid().map_err(braid_failure)?;
            match (i, j) {
                (Some(i), Some(j)) => {
                    let l = linking_number(&braid, *i, *j).map_err(braid_failure)?;
                    Ok(json!({ "link": l }))
                }
                (None, None) => {
                    let m = linking_matrix(&braid).map_err(braid_failure)?;
                    Ok(json!({ "matrix": m }))
                }
                _ => Err(Failure::Io(String::from(
                    "give both --i and --j, or neither",
                ))),
            }
        }
        Command::BraidWordCmd { input } => {
            let file: BraidFile = read_json(input)?;
            let braid = file.to_braid().map_err(braid_failure)?;
            let word = with_generic_braid(&braid, braid_word).map_err(braid_failure)?;
            Ok(json!({ "word": word.display() }))
        }
        Command::BraidTrivial { input } => {
            let file: BraidFile = read_json(input)?;
            let braid = file.to_braid().map_err(braid_failure)?;
            let trivial = with_generic_braid(&braid, bigonkit::braid::is_trivial)
                .map_err(braid_failure)?;
            Ok(json!({ "trivial": trivial }))
        }
        Command::Unlinked { input } => {
            let file: BraidFile = read_json(input)?;
            let braid = file.to_braid().map_err(braid_failure)?;
            let report =
                with_generic_braid(&braid, unlinked_finite).map_err(braid_failure)?;
            Ok(json!({
                "trivial": report.trivial,
                "matrix": report.linking_matrix,
                "witness": report.witness.map(|g| format!("x{g}")),
            }))
        }
        Command::ConnectedCriterion { input } => {
            let file: BraidFile = read_json(input)?;
            let braid = file.to_braid().map_err(braid_failure)?;
            let components = file
                .components
                .clone()
                .unwrap_or_else(|| vec![(0..braid.len()).collect()]);
            let report =
                connected_set_criterion(&braid, &components).map_err(braid_failure)?;
            let comps: Vec<_> = report
                .components
                .iter()
                .map(|c| {
                    json!({
                        "strands": c.strands,
                        "constant": c.constant,
                        "offending": c.offending,
                    })
                })
                .collect();
            Ok(json!({
                "components": comps,
                "unlinked": report.unlinked,
                "correction_turns": report.correction_turns,
            }))
        }
    }
}

fn write_svg_frames(
    svg_args: &SvgArgs,
    alpha: &[bigonkit::geom::Point],
    closed: bool,
    trace: &bigonkit::bigon::StraighteningTrace,
    punctures: &bigonkit::curves::PunctureSet,
) -> Result<(), Failure> {
    let Some(base) = &svg_args.svg else {
        return Ok(());
    };
    let frames = svg::trace_frames(alpha, closed, &trace.states, closed, trace, punctures);
    if svg_args.single_svg {
        fs::write(base, svg::overlay(&frames)).map_err(io_err)?;
    } else {
        let stem = base
            .to_str()
            .and_then(|s| s.strip_suffix(".svg"))
            .map(String::from)
            .unwrap_or_else(|| base.to_string_lossy().into_owned());
        for (i, frame) in frames.iter().enumerate() {
            let path = format!("{stem}.{i:03}.svg");
            fs::write(path, frame).map_err(io_err)?;
        }
    }
    Ok(())
}
