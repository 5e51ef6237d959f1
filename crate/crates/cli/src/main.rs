//! `msu`: command-line front end for msu-core.
//!
//! Reports go to standard output as JSON (or text with `--pretty`),
//! diagnostics to standard error. Exit status 0 is a positive result, 1 a
//! negative one, 2 an input error.

mod input;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use input::ScalarList;
use msu_core::betweenness::{cayley_menger, is_mb_space, is_mb_triple, lies_between, line_realization, pl_labeling};
use msu_core::classes::{
    embed_quasiorder, is_minimal_universal_space, is_universal_space, minimal_universal_subclass,
    nonexistence_condition_i, quotient_poset,
};
use msu_core::embed::{find_embeddings_par, is_not_shifted};
use msu_core::f2::{f2_distance, f2_embed_distance, f2_removal_witness, interval_embed};
use msu_core::graph::check_metrizability;
use msu_core::io::{matrix_to_value, space_to_value, union_to_value, FormatError};
use msu_core::rays::{
    embed_triple_tripod, embed_triple_two_rays, fermat_torricelli, solve_constrained_embedding, triangle_of,
    two_ray_witness_points, witness_points_tripod, RayPoint, RaySpace, Triangle, SOLVER_TOL,
};
use msu_core::scalar::approx_eq_f64;
use msu_core::union::{
    connectivity_threshold, glue_constant, glue_ultrametric_pair, is_epsilon_connected, m_distance, sample_m_space,
    union_epsilon_connected, union_pl_quadruples, union_ultrametric_family, verify_minimal_union, BridgeParams, MPoint,
    TaggedPoint, UnionSpace,
};
use msu_core::{
    classify_space, compare, find_embeddings, FiniteMetricSpace, Mode, PointMap, Scalar, SpaceError, DEFAULT_TOL,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "msu", version, about = "Finite metric spaces, isometric embeddings and minimal universal spaces")]
struct Cli {
    /// Comparison tolerance for float data and geometric checks
    #[arg(long, global = true, env = "MSU_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Print a human-readable report instead of JSON
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for the parallel searches (default: one)
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the metric axioms
    Validate { space: PathBuf },
    /// Ultrametric, discrete, strongly rigid and homogeneous flags
    Classify { space: PathBuf },
    /// Isometric embeddings of X into Y
    Embed {
        x: PathBuf,
        y: PathBuf,
        /// List every embedding
        #[arg(long, conflicts_with = "limit")]
        all: bool,
        /// List at most N embeddings
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
    },
    /// Which of X and Y embeds in the other
    Compare { x: PathBuf, y: PathBuf },
    /// Self-embeddings; all are isometries for a finite space
    Selfmaps { space: PathBuf },
    /// Whether J lies between I and K
    Between { space: PathBuf, i: String, j: String, k: String },
    /// Metric betweenness of a space or of a single triple
    Mb {
        #[arg(required_unless_present = "triple")]
        space: Option<PathBuf>,
        /// Test three distances d12 d13 d23 instead of a space
        #[arg(long, num_args = 3, value_names = ["D12", "D13", "D23"], value_parser = input::scalar, conflicts_with = "space")]
        triple: Option<Vec<Scalar>>,
    },
    /// Pseudo-linear labeling of a 4-point space
    Pl { space: PathBuf },
    /// Realization on the real line
    Line { space: PathBuf },
    /// Metrizability of a weighted graph
    Metrize { graph: PathBuf },
    /// Disjoint-union builders
    #[command(subcommand)]
    Union(UnionCmd),
    /// Finite samples of the bridged space
    #[command(subcommand)]
    Mspace(MspaceCmd),
    /// Triangles in the tripod
    #[command(subcommand)]
    Tripod(TripodCmd),
    /// Triangles in the two-ray space with opening angle alpha
    #[command(subcommand)]
    Xalpha(XalphaCmd),
    /// The space (-1, 0) with the positive integers
    #[command(subcommand)]
    F2(F2Cmd),
    /// Segments in the punctured unit interval
    #[command(subcommand)]
    Interval(IntervalCmd),
    /// Embedding order on a family of spaces
    #[command(subcommand)]
    Classes(ClassesCmd),
    /// Universality checks against a family
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Subcommand)]
enum UnionCmd {
    /// Anchor-graph union of a family
    Graph {
        family: PathBuf,
        /// Anchor point of each part, comma separated (default: first points)
        #[arg(long)]
        anchors: Option<String>,
        #[arg(long, value_parser = input::scalar)]
        eps1: Scalar,
    },
    /// Ultrametric union realizing each distance of T once
    Ultra {
        /// Distances, comma separated
        #[arg(long, value_parser = input::scalar_list)]
        t: ScalarList,
        /// Separators, comma separated, starting at 0
        #[arg(long, value_parser = input::scalar_list)]
        sep: ScalarList,
    },
    /// Union of pairwise non-isometric pseudo-linear quadruples
    Pl { family: PathBuf },
    /// Glue two ultrametric spaces at base points
    Glue {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, default_value = "0")]
        x0: String,
        #[arg(long, default_value = "0")]
        y0: String,
        #[arg(long, value_parser = input::scalar)]
        r0: Scalar,
    },
    /// Two spaces at constant cross distance r0
    Constant {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, value_parser = input::scalar)]
        r0: Scalar,
    },
    /// Check that a union is minimal universal for its parts
    Verify { union: PathBuf },
    /// Epsilon-connectivity of a space
    Epsilon {
        space: PathBuf,
        #[arg(long, value_parser = input::scalar)]
        eps: Scalar,
    },
}

#[derive(clap::Args)]
struct Bridge {
    /// Pseudo-linear quadruples
    quads: PathBuf,
    /// Bridge point on the line
    #[arg(long, value_parser = input::scalar, allow_hyphen_values = true)]
    p: Scalar,
    /// Bridged quadruple point, PART.POINT
    #[arg(long, value_parser = input::tagged)]
    b: TaggedPoint,
    /// Bridge length
    #[arg(long, value_parser = input::scalar)]
    r: Scalar,
}

#[derive(Subcommand)]
enum MspaceCmd {
    /// Distance matrix of a finite sample
    Sample {
        #[command(flatten)]
        bridge: Bridge,
        /// Points as r:T or q:PART.POINT
        #[arg(required = true, value_parser = input::m_point)]
        points: Vec<MPoint>,
    },
    /// Distance between two points
    Dist {
        #[command(flatten)]
        bridge: Bridge,
        /// r:T or q:PART.POINT
        #[arg(value_parser = input::m_point)]
        from: MPoint,
        /// r:T or q:PART.POINT
        #[arg(value_parser = input::m_point)]
        to: MPoint,
    },
}

#[derive(Subcommand)]
enum TripodCmd {
    /// Closed-form embedding and Fermat point
    Embed { triangle: PathBuf },
    /// Triangle with no embedding avoiding the puncture
    Witness {
        /// RAY:T
        #[arg(long, value_parser = input::ray_point)]
        puncture: RayPoint,
    },
    /// Search all embeddings avoiding the punctures
    Check {
        triangle: PathBuf,
        /// RAY:T, repeatable
        #[arg(long, value_parser = input::ray_point)]
        puncture: Vec<RayPoint>,
    },
}

#[derive(Subcommand)]
enum XalphaCmd {
    /// Embedding away from the origin
    Embed {
        triangle: PathBuf,
        #[arg(long)]
        alpha: f64,
    },
    /// Witness triangle for a puncture
    Witness {
        #[arg(long)]
        alpha: f64,
        /// RAY:T
        #[arg(long, value_parser = input::ray_point)]
        puncture: RayPoint,
    },
    /// Search all embeddings avoiding the punctures
    Check {
        triangle: PathBuf,
        #[arg(long)]
        alpha: f64,
        /// RAY:T, repeatable
        #[arg(long, value_parser = input::ray_point)]
        puncture: Vec<RayPoint>,
    },
}

#[derive(Subcommand)]
enum F2Cmd {
    /// A pair of points at distance T
    Embed {
        #[arg(value_parser = input::scalar)]
        t: Scalar,
    },
    /// A distance no pair avoids the point
    Witness {
        /// Coordinate in (-1, 0) or a positive integer
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Subcommand)]
enum IntervalCmd {
    /// A segment of length T avoiding the puncture
    Embed {
        #[arg(value_parser = input::scalar)]
        t: Scalar,
        #[arg(long, value_parser = input::scalar)]
        puncture: Option<Scalar>,
    },
}

#[derive(Subcommand)]
enum ClassesCmd {
    /// Embedding relation matrix
    Order { family: PathBuf },
    /// Isometry classes ordered by embedding
    Poset { family: PathBuf },
    /// Minimal universal subclass
    Minimal { family: PathBuf },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Every member embeds in Y
    Universal { family: PathBuf, y: PathBuf },
    /// Y is universal and no proper subspace is
    MinimalUniversal { family: PathBuf, y: PathBuf },
    /// Two incomparable maximal members rule out a minimal universal member
    Nonexistence { family: PathBuf },
}

struct Report {
    value: Value,
    positive: bool,
}

impl Report {
    fn yes(value: Value) -> Self {
        Report { value, positive: true }
    }

    fn of(value: Value, positive: bool) -> Self {
        Report { value, positive }
    }
}

struct Ctx {
    tol: f64,
    parallel: bool,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

fn map_value(m: &PointMap, x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> Value {
    let pairs: Vec<Value> = m.image.iter().enumerate().map(|(i, &j)| json!([x.label(i), y.label(j)])).collect();
    json!({ "image": m.image, "pairs": pairs })
}

fn names(x: &FiniteMetricSpace, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| x.label(i).to_string()).collect()
}

fn validate(path: &Path, tol: f64) -> Result<Report, String> {
    let text = input::read_text(path)?;
    match msu_core::io::parse_space(&text, tol) {
        Ok(x) => Ok(Report::yes(json!({
            "valid": true,
            "points": x.len(),
            "mode": mode_name(x.mode()),
            "labels": x.labels(),
        }))),
        Err(FormatError::Space(SpaceError::Axioms(vs))) => {
            Ok(Report::of(json!({ "valid": false, "violations": to_value(&vs) }), false))
        }
        Err(e) => Err(format!("{}: {e}", path.display())),
    }
}

fn embed(x: &FiniteMetricSpace, y: &FiniteMetricSpace, limit: Option<usize>, ctx: &Ctx) -> Report {
    let maps = if ctx.parallel { find_embeddings_par(x, y, limit) } else { find_embeddings(x, y, limit) };
    let found = !maps.is_empty();
    Report::of(
        json!({
            "embeds": found,
            "result": if found { "embedding found" } else { "no embedding" },
            "embeddings": maps.iter().map(|m| map_value(m, x, y)).collect::<Vec<_>>(),
        }),
        found,
    )
}

fn metrize(path: &Path, tol: f64) -> Result<Report, String> {
    let g = input::graph(path, tol)?;
    let r = check_metrizability(&g).map_err(err)?;
    let mut v = to_value(&r);
    if let Some(c) = &r.violating_cycle {
        v["violating_cycle"] = json!(c.iter().map(|&i| g.vertices()[i].clone()).collect::<Vec<_>>());
    }
    if r.pseudometrizable {
        v["vertices"] = json!(g.vertices());
        v["distances"] = matrix_to_value(&r.distances);
    }
    Ok(Report::of(v, r.metrizable))
}

fn union_cmd(cmd: UnionCmd, ctx: &Ctx) -> Result<Report, String> {
    let tol = ctx.tol;
    let u = match cmd {
        UnionCmd::Graph { family, anchors, eps1 } => {
            let parts = input::family(&family, tol)?;
            let anchors = match anchors {
                None => vec![0; parts.len()],
                Some(s) => {
                    let given: Vec<&str> = s.split(',').collect();
                    if given.len() != parts.len() {
                        return Err(format!("{} anchors given for {} parts", given.len(), parts.len()));
                    }
                    parts.iter().zip(given).map(|(p, a)| input::point(p, a)).collect::<Result<_, _>>()?
                }
            };
            union_epsilon_connected(&parts, &anchors, &eps1)
        }
        UnionCmd::Ultra { t, sep } => union_ultrametric_family(&t.0, &sep.0),
        UnionCmd::Pl { family } => union_pl_quadruples(&input::family(&family, tol)?),
        UnionCmd::Glue { x, y, x0, y0, r0 } => {
            let (x, y) = (input::space(&x, tol)?, input::space(&y, tol)?);
            let (i, j) = (input::point(&x, &x0)?, input::point(&y, &y0)?);
            glue_ultrametric_pair(&x, &y, i, j, &r0)
        }
        UnionCmd::Constant { x, y, r0 } => glue_constant(&input::space(&x, tol)?, &input::space(&y, tol)?, &r0),
        UnionCmd::Verify { union } => {
            let r = verify_minimal_union(&input::union(&union, tol)?);
            return Ok(Report::of(to_value(&r), r.passes));
        }
        UnionCmd::Epsilon { space, eps } => {
            let x = input::space(&space, tol)?;
            let ok = is_epsilon_connected(&x, &eps);
            return Ok(Report::of(
                json!({ "epsilon_connected": ok, "threshold": connectivity_threshold(&x).to_json() }),
                ok,
            ));
        }
    };
    Ok(Report::yes(union_to_value(&u.map_err(err)?)))
}

fn bridged(b: Bridge, tol: f64) -> Result<(UnionSpace, BridgeParams), String> {
    let quads = input::family(&b.quads, tol)?;
    let u = union_pl_quadruples(&quads).map_err(err)?;
    let params = BridgeParams::new(b.p, b.b, b.r).map_err(err)?;
    if u.index_of(params.b).is_none() {
        return Err(format!("bridge point {}.{} is not in the quadruples", params.b.part, params.b.point));
    }
    Ok((u, params))
}

fn check_m_point(p: &MPoint, u: &UnionSpace) -> Result<(), String> {
    match p {
        MPoint::Quad(t) if u.index_of(*t).is_none() => Err(format!("no quadruple point {}.{}", t.part, t.point)),
        _ => Ok(()),
    }
}

fn mspace_cmd(cmd: MspaceCmd, ctx: &Ctx) -> Result<Report, String> {
    match cmd {
        MspaceCmd::Sample { bridge, points } => {
            let (u, b) = bridged(bridge, ctx.tol)?;
            for p in &points {
                check_m_point(p, &u)?;
            }
            let x = sample_m_space(&points, &u, &b).map_err(err)?;
            Ok(Report::yes(space_to_value(&x)))
        }
        MspaceCmd::Dist { bridge, from, to } => {
            let (u, params) = bridged(bridge, ctx.tol)?;
            check_m_point(&from, &u)?;
            check_m_point(&to, &u)?;
            Ok(Report::yes(json!({ "distance": m_distance(&from, &to, &u, &params).to_json() })))
        }
    }
}

fn points_value(rays: &RaySpace, p: &[RayPoint]) -> Value {
    json!({ "points": to_value(&p), "xy": p.iter().map(|q| rays.xy(q)).collect::<Vec<_>>() })
}

/// Largest relative side error of an embedding.
fn side_error(tri: &Triangle, rays: &RaySpace, p: &[RayPoint; 3]) -> f64 {
    [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| {
            let d = tri.side(i, j);
            (rays.dist(&p[i], &p[j]) - d).abs() / d
        })
        .fold(0.0, f64::max)
}

fn sides_ok(tri: &Triangle, rays: &RaySpace, p: &[RayPoint; 3], tol: f64) -> bool {
    [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| approx_eq_f64(rays.dist(&p[i], &p[j]), tri.side(i, j), tol))
}

fn witness_value(tri: &Triangle, rays: &RaySpace, p: &[RayPoint; 3]) -> Value {
    let mut v = points_value(rays, p);
    v["sides"] = json!([tri.a, tri.b, tri.c]);
    v
}

fn search(tri: &Triangle, rays: &RaySpace, forbidden: &[RayPoint]) -> Report {
    let sols = solve_constrained_embedding(tri, rays, forbidden, SOLVER_TOL);
    let list: Vec<Value> = sols
        .iter()
        .map(|s| {
            let mut v = points_value(rays, &s.points);
            v["case"] = json!(s.case);
            v
        })
        .collect();
    Report::of(json!({ "found": sols.len(), "embeddings": list }), !sols.is_empty())
}

fn tripod_cmd(cmd: TripodCmd, ctx: &Ctx) -> Result<Report, String> {
    let rays = RaySpace::tripod();
    match cmd {
        TripodCmd::Embed { triangle } => {
            let tri = input::triangle(&triangle)?;
            let p = embed_triple_tripod(&tri);
            let mut v = points_value(&rays, &p);
            v["max_relative_error"] = json!(side_error(&tri, &rays, &p));
            v["fermat"] = to_value(&fermat_torricelli(&tri).map_err(err)?);
            Ok(Report::of(v, sides_ok(&tri, &rays, &p, ctx.tol)))
        }
        TripodCmd::Witness { puncture } => {
            let p = witness_points_tripod(&puncture).map_err(err)?;
            let tri = triangle_of(&rays, &p).map_err(err)?;
            Ok(Report::yes(witness_value(&tri, &rays, &p)))
        }
        TripodCmd::Check { triangle, puncture } => Ok(search(&input::triangle(&triangle)?, &rays, &puncture)),
    }
}

fn xalpha_cmd(cmd: XalphaCmd, ctx: &Ctx) -> Result<Report, String> {
    match cmd {
        XalphaCmd::Embed { triangle, alpha } => {
            let tri = input::triangle(&triangle)?;
            let rays = RaySpace::two_rays(alpha).map_err(err)?;
            match embed_triple_two_rays(&tri, alpha).map_err(err)? {
                Some(p) => {
                    let mut v = points_value(&rays, &p);
                    v["embeds"] = json!(true);
                    v["max_relative_error"] = json!(side_error(&tri, &rays, &p));
                    Ok(Report::of(v, sides_ok(&tri, &rays, &p, ctx.tol)))
                }
                None => Ok(Report::of(json!({ "embeds": false, "result": "no embedding" }), false)),
            }
        }
        XalphaCmd::Witness { alpha, puncture } => {
            let rays = RaySpace::two_rays(alpha).map_err(err)?;
            let p = two_ray_witness_points(&puncture, alpha).map_err(err)?;
            let tri = triangle_of(&rays, &p).map_err(err)?;
            Ok(Report::yes(witness_value(&tri, &rays, &p)))
        }
        XalphaCmd::Check { triangle, alpha, puncture } => {
            let rays = RaySpace::two_rays(alpha).map_err(err)?;
            Ok(search(&input::triangle(&triangle)?, &rays, &puncture))
        }
    }
}

fn f2_cmd(cmd: F2Cmd) -> Result<Report, String> {
    match cmd {
        F2Cmd::Embed { t } => {
            let (a, b) = f2_embed_distance(&t).map_err(err)?;
            Ok(Report::yes(json!({
                "points": [a.coordinate().to_json(), b.coordinate().to_json()],
                "distance": f2_distance(&a, &b).to_json(),
            })))
        }
        F2Cmd::Witness { point } => {
            let p = input::f2_point(&point)?;
            Ok(Report::yes(json!({ "point": p.coordinate().to_json(), "distance": f2_removal_witness(&p).to_json() })))
        }
    }
}

fn interval_cmd(cmd: IntervalCmd) -> Result<Report, String> {
    let IntervalCmd::Embed { t, puncture } = cmd;
    Ok(match interval_embed(&t, puncture.as_ref()).map_err(err)? {
        Some((a, b)) => Report::yes(json!({ "embeds": true, "interval": [a.to_json(), b.to_json()] })),
        None => Report::of(json!({ "embeds": false, "result": "no embedding" }), false),
    })
}

fn classes_cmd(cmd: ClassesCmd, tol: f64) -> Result<Report, String> {
    match cmd {
        ClassesCmd::Order { family } => {
            let fam = input::family(&family, tol)?;
            Ok(Report::yes(to_value(&embed_quasiorder(&fam))))
        }
        ClassesCmd::Poset { family } => {
            let fam = input::family(&family, tol)?;
            let p = quotient_poset(&embed_quasiorder(&fam)).map_err(err)?;
            let mut v = to_value(&p);
            v["representatives"] = json!(p.representatives());
            Ok(Report::yes(v))
        }
        ClassesCmd::Minimal { family } => {
            let fam = input::family(&family, tol)?;
            let reps = minimal_universal_subclass(&fam).map_err(err)?;
            let spaces: Vec<Value> = reps.iter().map(|&i| space_to_value(&fam[i])).collect();
            Ok(Report::yes(json!({ "members": reps, "spaces": spaces })))
        }
    }
}

fn check_cmd(cmd: CheckCmd, tol: f64) -> Result<Report, String> {
    match cmd {
        CheckCmd::Universal { family, y } => {
            let r = is_universal_space(&input::family(&family, tol)?, &input::space(&y, tol)?);
            Ok(Report::of(to_value(&r), r.universal))
        }
        CheckCmd::MinimalUniversal { family, y } => {
            let r = is_minimal_universal_space(&input::family(&family, tol)?, &input::space(&y, tol)?);
            Ok(Report::of(to_value(&r), r.minimal_universal))
        }
        CheckCmd::Nonexistence { family } => {
            let r = nonexistence_condition_i(&input::family(&family, tol)?);
            Ok(Report::of(to_value(&r), r.holds))
        }
    }
}

fn run(cmd: Cmd, ctx: &Ctx) -> Result<Report, String> {
    let tol = ctx.tol;
    match cmd {
        Cmd::Validate { space } => validate(&space, tol),
        Cmd::Classify { space } => Ok(Report::yes(to_value(&classify_space(&input::space(&space, tol)?)))),
        Cmd::Embed { x, y, all, limit } => {
            let limit = if all { None } else { Some(limit.unwrap_or(1)) };
            Ok(embed(&input::space(&x, tol)?, &input::space(&y, tol)?, limit, ctx))
        }
        Cmd::Compare { x, y } => {
            let c = compare(&input::space(&x, tol)?, &input::space(&y, tol)?);
            Ok(Report::yes(json!({ "comparability": to_value(&c) })))
        }
        Cmd::Selfmaps { space } => {
            let x = input::space(&space, tol)?;
            let r = is_not_shifted(&x);
            Ok(Report::of(to_value(&r), r.not_shifted))
        }
        Cmd::Between { space, i, j, k } => {
            let x = input::space(&space, tol)?;
            let (i, j, k) = (input::point(&x, &i)?, input::point(&x, &j)?, input::point(&x, &k)?);
            let b = lies_between(&x, i, j, k).map_err(err)?;
            Ok(Report::of(json!({ "between": b }), b))
        }
        Cmd::Mb { space, triple } => match (space, triple) {
            (_, Some(t)) => {
                let mb = is_mb_triple(&t[0], &t[1], &t[2], tol).map_err(err)?;
                let det = cayley_menger(&t[0], &t[1], &t[2], tol).map_err(err)?;
                Ok(Report::of(json!({ "is_mb": mb, "cayley_menger": det.to_json() }), mb))
            }
            (Some(space), None) => {
                let x = input::space(&space, tol)?;
                let r = is_mb_space(&x);
                let mut v = to_value(&r);
                if let Some(t) = r.violating_triple {
                    v["violating_triple"] = json!(names(&x, &t));
                }
                Ok(Report::of(v, r.is_mb))
            }
            (None, None) => Err("a space or --triple is required".into()),
        },
        Cmd::Pl { space } => {
            let x = input::space(&space, tol)?;
            Ok(match pl_labeling(&x).map_err(err)? {
                Some(l) => Report::yes(json!({ "pseudolinear": true, "labeling": names(&x, &l.perm) })),
                None => Report::of(json!({ "pseudolinear": false }), false),
            })
        }
        Cmd::Line { space } => {
            let x = input::space(&space, tol)?;
            Ok(match line_realization(&x) {
                Some(r) => Report::yes(json!({ "embeds": true, "coords": to_value(&r.coords) })),
                None => Report::of(json!({ "embeds": false, "result": "no embedding" }), false),
            })
        }
        Cmd::Metrize { graph } => metrize(&graph, tol),
        Cmd::Union(c) => union_cmd(c, ctx),
        Cmd::Mspace(c) => mspace_cmd(c, ctx),
        Cmd::Tripod(c) => tripod_cmd(c, ctx),
        Cmd::Xalpha(c) => xalpha_cmd(c, ctx),
        Cmd::F2(c) => f2_cmd(c),
        Cmd::Interval(c) => interval_cmd(c),
        Cmd::Classes(c) => classes_cmd(c, tol),
        Cmd::Check(c) => check_cmd(c, tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.tol.is_finite() || cli.tol < 0.0 {
        eprintln!("error: --tol must be finite and nonnegative");
        return ExitCode::from(2);
    }
    let threads = match cli.parallel {
        Some(0) => {
            eprintln!("error: --parallel needs at least one thread");
            return ExitCode::from(2);
        }
        Some(n) => n,
        None => 1,
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let ctx = Ctx { tol: cli.tol, parallel: cli.parallel.is_some() };
    match run(cli.cmd, &ctx) {
        Ok(r) => {
            if cli.pretty {
                print!("{}", render::pretty(&r.value));
            } else {
                println!("{}", r.value);
            }
            ExitCode::from(if r.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
