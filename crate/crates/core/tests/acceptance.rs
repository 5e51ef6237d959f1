//! Acceptance criteria, run sequentially with fixed seeds. Each criterion
//! prints one PASS/FAIL line with its elapsed time and budget; the process
//! exits nonzero if any criterion fails.

#![allow(clippy::needless_range_loop)]

mod common;

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use msu_core::betweenness::{cayley_menger, is_mb_triple, is_pseudolinear, pl_labeling, pl_quadruple};
use msu_core::classes::minimal_universal_subclass;
use msu_core::f2::{f2_distance, f2_embed_distance, f2_removal_witness, F2Point};
use msu_core::graph::{check_metrizability, WeightedGraph};
use msu_core::rays::{
    embed_triple_tripod, fermat_torricelli, solve_constrained_embedding, triangle_of, two_ray_witness_points,
    witness_triangle_tripod, witness_triangle_two_rays, RayPoint, RaySpace, Triangle,
};
use msu_core::union::{
    glue_ultrametric_pair, sample_m_space, union_epsilon_connected, union_pl_quadruples, union_ultrametric_family,
    verify_minimal_union, BridgeParams, MPoint, TaggedPoint,
};
use msu_core::{find_embeddings, FiniteMetricSpace, Scalar, SpaceError, Violation};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use common::*;

const SOLVER_TOL: f64 = 1e-6;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: usize, name: &str, budget_secs: u64, f: impl FnOnce() -> Check) -> bool {
    let budget = Duration::from_secs(budget_secs);
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (ok, detail) = match result {
        Ok(d) if elapsed < budget => (true, d),
        Ok(d) => (false, format!("{d}; over budget")),
        Err(e) => (false, e),
    };
    println!(
        "{} {id:>2} {name}: {detail} ({:.2}s of {budget_secs}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}

fn c01_axiom_validator() -> Check {
    let mut rng = rng(1);
    let mut detected = 0;
    let cases = 10_000;
    for case in 0..cases {
        let n = rng.gen_range(5..=8);
        let mut m = bounded_rational_matrix(&mut rng, n, 12);
        let delta = rand_rational(&mut rng, 0, 1, 7);
        let delta = if delta.is_positive_tol(0.0) { delta } else { q(1, 7) };
        let expected = match case % 3 {
            0 => {
                let i = rng.gen_range(0..n - 1);
                let j = rng.gen_range(i + 1..n);
                m[j][i] = &m[i][j] + &delta;
                Violation::Asymmetry { i, j }
            }
            1 => {
                let i = rng.gen_range(0..n);
                m[i][i] = delta;
                Violation::NonzeroDiagonal { i }
            }
            _ => {
                let p = random_perm(&mut rng, n);
                let (i, k) = (p[0].min(p[1]), p[0].max(p[1]));
                let j = p[2];
                let long = &(&m[i][j] + &m[j][k]) + &delta;
                m[i][k] = long.clone();
                m[k][i] = long;
                Violation::TriangleViolation { i, j, k }
            }
        };
        match FiniteMetricSpace::new(m, None) {
            Err(SpaceError::Axioms(vs)) if vs.contains(&expected) => detected += 1,
            other => return Err(format!("case {case}: expected {expected:?}, got {other:?}")),
        }
    }
    Ok(format!("{detected}/{cases} injected violations detected"))
}

fn c02_not_shifted() -> Check {
    let mut rng = rng(2);
    let mut maps = 0;
    for case in 0..500 {
        let n = rng.gen_range(1..=6);
        let x = random_space(&mut rng, n);
        let found = find_embeddings(&x, &x, None);
        let oracle = brute_embeddings(&x, &x);
        ensure(found.len() == oracle.len(), || format!("case {case}: {} maps, oracle {}", found.len(), oracle.len()))?;
        for f in &found {
            ensure(f.is_bijection(n), || format!("case {case}: {:?} is not a bijection", f.image))?;
        }
        maps += found.len();
    }
    Ok(format!("500 spaces, {maps} self-embeddings, all bijective"))
}

fn heron_product(a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
    -((a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c))
}

fn c03_cayley_menger() -> Check {
    let mut rng = rng(3);
    let mut degenerate = 0;
    let mut case = 0;
    while case < 10_000 {
        let a = rand_rational(&mut rng, 1, 10, 8);
        let b = rand_rational(&mut rng, 1, 10, 8);
        let (lo, hi) = (rat(&(&a - &b).abs()), rat(&(&a + &b)));
        let c = match rng.gen_range(0..3) {
            0 if !lo.is_zero() => Scalar::Exact(lo),
            1 => Scalar::Exact(hi),
            _ => {
                let den = rng.gen_range(2..=16);
                let u = big(rng.gen_range(1..den)) / big(den);
                Scalar::Exact(&lo + (&hi - &lo) * u)
            }
        };
        if c.is_zero_tol(0.0) {
            continue;
        }
        let det = rat(&cayley_menger(&a, &b, &c, 0.0).map_err(|e| e.to_string())?);
        let (ra, rb, rc) = (rat(&a), rat(&b), rat(&c));
        let collinear = mb_triple_exact(&ra, &rb, &rc);
        ensure(!det.is_positive(), || format!("case {case}: det {det} > 0"))?;
        ensure(det.is_zero() == collinear, || format!("case {case}: det {det}, collinear {collinear}"))?;
        ensure(det == heron_product(&ra, &rb, &rc), || format!("case {case}: det {det} differs from Heron form"))?;
        let mb = is_mb_triple(&a, &b, &c, 0.0).map_err(|e| e.to_string())?;
        ensure(mb == collinear, || format!("case {case}: is_mb_triple {mb}"))?;
        degenerate += collinear as usize;
        case += 1;
    }
    Ok(format!("10000 triples ({degenerate} collinear), det <= 0 and zero exactly on collinear"))
}

fn c04_pl_dual() -> Check {
    let mut rng = rng(4);
    let mut pl = 0;
    for case in 0..10_000 {
        let kind = case % 4;
        let x = match kind {
            0 => line_space(&mut rng, 4),
            1 => {
                let quad = pl_quadruple(rand_rational(&mut rng, 1, 5, 6), rand_rational(&mut rng, 1, 5, 6)).unwrap();
                permuted(&quad, &random_perm(&mut rng, 4))
            }
            2 => from_rows(bounded_rational_matrix(&mut rng, 4, 3)),
            _ => bounded_int_space(&mut rng, 4, 1),
        };
        let def = is_pseudolinear(&x).map_err(|e| e.to_string())?;
        let labeled = pl_labeling(&x).map_err(|e| e.to_string())?.is_some();
        ensure(def == labeled, || format!("case {case}: definition {def}, labeling {labeled}"))?;
        ensure(kind != 0 || !def, || format!("case {case}: line quadruple reported pseudo-linear"))?;
        ensure(kind != 1 || def, || format!("case {case}: PL quadruple not recognized"))?;
        pl += def as usize;
    }
    Ok(format!("10000 quadruples ({pl} pseudo-linear), deciders agree"))
}

fn c05_metrizability() -> Check {
    let mut rng = rng(5);
    let mut yes = 0;
    for case in 0..2_000 {
        let n = rng.gen_range(2..=6);
        let edges = random_connected_graph(&mut rng, n, 3);
        let names = (0..n).map(|i| format!("v{i}")).collect();
        let g = WeightedGraph::new(names, edges.iter().map(|&(u, v, w)| (u, v, Scalar::int(w))).collect())
            .map_err(|e| e.to_string())?;
        let report = check_metrizability(&g).map_err(|e| e.to_string())?;
        let oracle = cycle_oracle(n, &edges);
        ensure(report.pseudometrizable == oracle, || {
            format!("case {case}: criterion {}, oracle {oracle}", report.pseudometrizable)
        })?;
        let positive = edges.iter().all(|e| e.2 > 0);
        ensure(report.metrizable == (oracle && positive), || format!("case {case}: metrizable {}", report.metrizable))?;
        yes += oracle as usize;
    }
    Ok(format!("2000 graphs ({yes} pseudometrizable), criterion matches cycle oracle"))
}

/// Least `ε` making `x` ε-connected, by trying each distance in turn.
fn threshold_oracle(x: &FiniteMetricSpace) -> BigRational {
    let n = x.len();
    let mut cands: Vec<BigRational> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| rat(x.d(i, j))).collect();
    cands.sort();
    for eps in cands {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && rat(x.d(i, j)) <= eps {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            return eps;
        }
    }
    big(0)
}

fn c06_epsilon_union() -> Check {
    let mut rng = rng(6);
    for case in 0..100 {
        let k = rng.gen_range(2..=4);
        let mut parts: Vec<FiniteMetricSpace> = Vec::new();
        while parts.len() < k {
            let n = rng.gen_range(2..=4);
            let cand = random_space(&mut rng, n);
            if parts.iter().all(|p| !brute_embeds(p, &cand) && !brute_embeds(&cand, p)) {
                parts.push(cand);
            }
        }
        let anchors: Vec<usize> = parts.iter().map(|p| rng.gen_range(0..p.len())).collect();
        let threshold = parts.iter().map(threshold_oracle).max().unwrap();
        let eps1 = Scalar::Exact(threshold + rat(&rand_rational(&mut rng, 1, 3, 5)));
        let u = union_epsilon_connected(&parts, &anchors, &eps1).map_err(|e| format!("case {case}: {e}"))?;
        let report = verify_minimal_union(&u);
        ensure(report.passes, || format!("case {case}: {report:?}"))?;
        ensure(is_metric_exact(&u.space.matrix()), || format!("case {case}: union is not a metric"))?;
        for (i, p) in parts.iter().enumerate() {
            let restricted = u.part_space(i);
            let same = (0..p.len()).all(|a| (0..p.len()).all(|b| restricted.d(a, b).identical(p.d(a, b))));
            ensure(same, || format!("case {case}: part {i} metric changed"))?;
            let mut images: Vec<Vec<usize>> = brute_embeddings(p, &u.space)
                .into_iter()
                .map(|mut f| {
                    f.sort_unstable();
                    f
                })
                .collect();
            images.sort();
            images.dedup();
            ensure(images.len() == 1, || format!("case {case}: part {i} has {} copies", images.len()))?;
        }
    }
    Ok("100 families, minimal union verified, one copy per part".into())
}

fn c07_ultrametric_builders() -> Check {
    let mut rng = rng(7);
    for case in 0..100 {
        let nx = rng.gen_range(1..=5);
        let x = random_ultrametric(&mut rng, nx);
        let ny = rng.gen_range(1..=5);
        let y = random_ultrametric(&mut rng, ny);
        let (x0, y0) = (rng.gen_range(0..x.len()), rng.gen_range(0..y.len()));
        let r0 = rand_rational(&mut rng, 1, 6, 3);
        let u = glue_ultrametric_pair(&x, &y, x0, y0, &r0).map_err(|e| format!("glue case {case}: {e}"))?;
        ensure(is_metric_exact(&u.space.matrix()), || format!("glue case {case}: not a metric"))?;
        ensure(strong_triangle_exact(&u.space), || format!("glue case {case}: strong triangle fails"))?;
        let (ix, iy) = (u.parts[0][x0], u.parts[1][y0]);
        ensure(u.space.d(ix, iy).identical(&r0), || format!("glue case {case}: d(x0, y0) != r0"))?;
    }
    for case in 0..100 {
        let m = rng.gen_range(1..=6);
        let mut ts: Vec<BigRational> = Vec::new();
        while ts.len() < m {
            let t = rat(&rand_rational(&mut rng, 1, 20, 4));
            if !ts.contains(&t) {
                ts.push(t);
            }
        }
        ts.sort();
        let mut seps = vec![big(0)];
        for w in ts.windows(2) {
            if rng.gen_bool(0.5) {
                seps.push((&w[0] + &w[1]) / big(2));
            }
        }
        seps.push(ts.last().unwrap() + rat(&rand_rational(&mut rng, 1, 3, 3)));
        let ts_s: Vec<Scalar> = ts.iter().cloned().map(Scalar::Exact).collect();
        let seps_s: Vec<Scalar> = seps.into_iter().map(Scalar::Exact).collect();
        let u = union_ultrametric_family(&ts_s, &seps_s).map_err(|e| format!("family case {case}: {e}"))?;
        ensure(is_metric_exact(&u.space.matrix()), || format!("family case {case}: not a metric"))?;
        ensure(strong_triangle_exact(&u.space), || format!("family case {case}: strong triangle fails"))?;
        let n = u.space.len();
        for t in &ts {
            let count = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| rat(u.space.d(i, j)) == *t)
                .count();
            ensure(count == 1, || format!("family case {case}: {t} realized {count} times"))?;
        }
    }
    Ok("100 glued pairs and 100 families, strong triangle on all triples".into())
}

fn c08_tripod_embedding() -> Check {
    let mut rng = rng(8);
    let tripod = RaySpace::tripod();
    let mut worst: f64 = 0.0;
    for case in 0..1_000 {
        let s = random_sides(&mut rng, 0.1, 10.0);
        let tri = Triangle::new(s[0], s[1], s[2]).map_err(|e| e.to_string())?;
        let p = embed_triple_tripod(&tri);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let err = (tripod.dist(&p[i], &p[j]) - tri.side(i, j)).abs() / tri.side(i, j);
            worst = worst.max(err);
            ensure(err <= 1e-9, || format!("case {case}: side ({i},{j}) relative error {err:e}"))?;
        }
        let ft = fermat_torricelli(&tri).map_err(|e| format!("case {case}: {e}"))?;
        let xy = tri.planar();
        let cost = |x: [f64; 2]| xy.iter().map(|v| planar_dist(*v, x)).sum::<f64>();
        let at_point = cost(ft.point);
        ensure((at_point - ft.total_cost).abs() <= 1e-9 * at_point.max(1.0), || {
            format!("case {case}: reported cost {} but point costs {at_point}", ft.total_cost)
        })?;
        let lo_x = xy.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min) - 1.0;
        let hi_x = xy.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max) + 1.0;
        let lo_y = xy.iter().map(|v| v[1]).fold(f64::INFINITY, f64::min) - 1.0;
        let hi_y = xy.iter().map(|v| v[1]).fold(f64::NEG_INFINITY, f64::max) + 1.0;
        for _ in 0..1_000 {
            let x = [rng.gen_range(lo_x..=hi_x), rng.gen_range(lo_y..=hi_y)];
            let c = cost(x);
            ensure(ft.total_cost <= c + 1e-9, || format!("case {case}: sample {x:?} costs {c} < {}", ft.total_cost))?;
        }
    }
    Ok(format!("1000 triangles, worst relative error {worst:.1e}, FT cost minimal"))
}

fn same_points(rays: &RaySpace, a: &[RayPoint], b: &[RayPoint]) -> bool {
    a.len() == b.len()
        && a.iter().all(|p| b.iter().any(|q| rays.dist(p, q) < SOLVER_TOL * p.t.max(1.0)))
        && b.iter().all(|p| a.iter().any(|q| rays.dist(p, q) < SOLVER_TOL * p.t.max(1.0)))
}

fn c09_tripod_minimality() -> Check {
    let mut rng = rng(9);
    let tripod = RaySpace::tripod();
    let mut solutions = 0;
    for case in 0..50 {
        let e = RayPoint::new(rng.gen_range(0..3), rng.gen_range(0.1..10.0));
        let tri = witness_triangle_tripod(&e).map_err(|err| err.to_string())?;
        let avoiding = solve_constrained_embedding(&tri, &tripod, &[e], SOLVER_TOL);
        ensure(avoiding.is_empty(), || format!("case {case}: {} embeddings avoid {e:?}", avoiding.len()))?;
        let all = solve_constrained_embedding(&tri, &tripod, &[], SOLVER_TOL);
        ensure(!all.is_empty(), || format!("case {case}: no embedding without puncture"))?;
        let predicted: Vec<RayPoint> = (0..3).map(|r| RayPoint::new(r, e.t)).collect();
        for s in &all {
            ensure(same_points(&tripod, &s.points, &predicted), || format!("case {case}: image {:?}", s.points))?;
        }
        solutions += all.len();
    }
    Ok(format!("50 punctures, no avoiding embedding, {solutions} unpunctured solutions on the predicted set"))
}

fn c10_two_ray_thresholds() -> Check {
    let mut rng = rng(10);
    let quarter = RaySpace::two_rays(FRAC_PI_4).map_err(|e| e.to_string())?;
    for case in 0..20 {
        let z = RayPoint::new(rng.gen_range(0..2), rng.gen_range(0.1..10.0));
        let tri = witness_triangle_two_rays(&z, FRAC_PI_4).map_err(|e| e.to_string())?;
        let sols = solve_constrained_embedding(&tri, &quarter, &[z], SOLVER_TOL);
        ensure(sols.is_empty(), || format!("pi/4 case {case}: {} avoiding embeddings", sols.len()))?;
    }
    let sixth = RaySpace::two_rays(FRAC_PI_6).map_err(|e| e.to_string())?;
    for case in 0..20 {
        let z = RayPoint::new(rng.gen_range(0..2), rng.gen_range(0.1..10.0));
        let pts = two_ray_witness_points(&z, FRAC_PI_6).map_err(|e| e.to_string())?;
        let tri = triangle_of(&sixth, &pts).map_err(|e| e.to_string())?;
        let sols = solve_constrained_embedding(&tri, &sixth, &[z], SOLVER_TOL);
        ensure(!sols.is_empty(), || format!("pi/6 case {case}: no avoiding embedding"))?;
        for s in &sols {
            let ok = s.points.iter().all(|p| sixth.dist(p, &z) >= SOLVER_TOL)
                && [(0, 1), (0, 2), (1, 2)].iter().all(|&(i, j)| {
                    (sixth.dist(&s.points[i], &s.points[j]) - tri.side(i, j)).abs() <= 1e-6 * tri.side(i, j).max(1.0)
                });
            ensure(ok, || format!("pi/6 case {case}: bad solution {:?}", s.points))?;
        }
    }
    let wide = RaySpace::two_rays(1.1).map_err(|e| e.to_string())?;
    let eq = Triangle::new(1.0, 1.0, 1.0).map_err(|e| e.to_string())?;
    let sols = solve_constrained_embedding(&eq, &wide, &[], SOLVER_TOL);
    ensure(sols.is_empty(), || format!("alpha 1.1: {} embeddings of the equilateral triangle", sols.len()))?;
    Ok("pi/4: 20 witnesses unembeddable; pi/6: 20 avoiding embeddings; alpha 1.1: none".into())
}

/// Every pair of grid points realizing `t`: negative points `-k/den` for
/// `0 < k < den` and naturals up to `⌈t⌉ + 1`.
fn f2_window(t: &BigRational) -> Vec<(F2Point, F2Point)> {
    let den = t.denom().to_i64().unwrap();
    let top = t.ceil().to_integer().to_u64().unwrap() + 1;
    let mut pts: Vec<F2Point> = (1..den).map(|k| F2Point::Neg(q(k, den))).collect();
    pts.extend((1..=top).map(F2Point::Nat));
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if rat(&(pts[i].coordinate() - pts[j].coordinate()).abs()) == *t {
                out.push((pts[i].clone(), pts[j].clone()));
            }
        }
    }
    out
}

fn c11_f2_space() -> Check {
    let mut rng = rng(11);
    for case in 0..1_000 {
        let den = rng.gen_range(2..=40);
        let t = q(rng.gen_range(1..=99) * den + rng.gen_range(1..den), den);
        let (a, b) = f2_embed_distance(&t).map_err(|e| e.to_string())?;
        ensure(f2_distance(&a, &b).identical(&t), || format!("case {case}: distance of {a:?}, {b:?} is not {t}"))?;
        let window = f2_window(&rat(&t));
        ensure(window.len() == 1, || format!("case {case}: {} pairs realize {t}", window.len()))?;
        let (u, v) = &window[0];
        ensure((u == &a && v == &b) || (u == &b && v == &a), || format!("case {case}: oracle pair {u:?}, {v:?}"))?;

        let qpt = if rng.gen_bool(0.5) {
            F2Point::Nat(rng.gen_range(1..=99))
        } else {
            let d = rng.gen_range(2..=40);
            F2Point::Neg(q(rng.gen_range(1..d), d))
        };
        let w = f2_removal_witness(&qpt);
        let pairs = f2_window(&rat(&w));
        ensure(!pairs.is_empty(), || format!("case {case}: witness {w} is not realized"))?;
        ensure(pairs.iter().all(|(u, v)| u == &qpt || v == &qpt), || {
            format!("case {case}: {w} still realized without {qpt:?}")
        })?;
    }
    Ok("1000 distances realized exactly and uniquely; removal witnesses confirmed".into())
}

fn c12_minimal_subclass() -> Check {
    let mut rng = rng(12);
    let mut total_reps = 0;
    for case in 0..200 {
        let bases: Vec<FiniteMetricSpace> = (0..2).map(|_| bounded_int_space(&mut rng, 4, 1)).collect();
        let size = rng.gen_range(1..=5);
        let fam: Vec<FiniteMetricSpace> = (0..size)
            .map(|_| {
                let base = &bases[rng.gen_range(0..2)];
                let n = rng.gen_range(1..=4);
                let mut idx = random_perm(&mut rng, 4);
                idx.truncate(n);
                base.subspace(&idx)
            })
            .collect();
        let reps = minimal_universal_subclass(&fam).map_err(|e| e.to_string())?;
        for (i, x) in fam.iter().enumerate() {
            ensure(reps.iter().any(|&r| brute_embeds(x, &fam[r])), || {
                format!("case {case}: member {i} embeds into no representative")
            })?;
        }
        for &r in &reps {
            let others: Vec<usize> = reps.iter().copied().filter(|&s| s != r).collect();
            let breaks = fam.iter().any(|x| !others.iter().any(|&s| brute_embeds(x, &fam[s])));
            ensure(breaks, || format!("case {case}: representative {r} is redundant"))?;
            for &s in &others {
                ensure(!brute_embeds(&fam[r], &fam[s]), || format!("case {case}: {r} embeds into {s}"))?;
            }
        }
        let perm = random_perm(&mut rng, size);
        let shuffled: Vec<FiniteMetricSpace> = perm.iter().map(|&i| fam[i].clone()).collect();
        let reps2 = minimal_universal_subclass(&shuffled).map_err(|e| e.to_string())?;
        let mut unmatched: Vec<&FiniteMetricSpace> = reps2.iter().map(|&r| &shuffled[r]).collect();
        ensure(unmatched.len() == reps.len(), || {
            format!("case {case}: {} vs {} representatives", reps.len(), reps2.len())
        })?;
        for &r in &reps {
            let pos = unmatched.iter().position(|y| brute_isometric(&fam[r], y));
            match pos {
                Some(p) => {
                    unmatched.remove(p);
                }
                None => {
                    return Err(format!("case {case}: representative {r} has no isometric partner after permutation"))
                }
            }
        }
        total_reps += reps.len();
    }
    Ok(format!("200 families, {total_reps} representatives, all four properties hold"))
}

fn c13_bridged_space() -> Check {
    let mut rng = rng(13);
    let mut checked_triples = 0;
    for case in 0..500 {
        let (s1, t1) = (rand_rational(&mut rng, 1, 4, 3), rand_rational(&mut rng, 1, 4, 3));
        let (s2, t2) = loop {
            let (s, t) = (rand_rational(&mut rng, 1, 4, 3), rand_rational(&mut rng, 1, 4, 3));
            let same = (s.identical(&s1) && t.identical(&t1)) || (s.identical(&t1) && t.identical(&s1));
            if !same {
                break (s, t);
            }
        };
        let quads = [pl_quadruple(s1, t1).unwrap(), pl_quadruple(s2, t2).unwrap()];
        let u = union_pl_quadruples(&quads).map_err(|e| format!("case {case}: {e}"))?;
        let p = rand_rational(&mut rng, -5, 5, 4);
        let b = TaggedPoint { part: rng.gen_range(0..2), point: rng.gen_range(0..4) };
        let r = rand_rational(&mut rng, 0, 3, 4);
        let r = if r.is_positive_tol(0.0) { r } else { q(1, 2) };
        let bridge = BridgeParams::new(p.clone(), b, r).map_err(|e| e.to_string())?;
        let size = rng.gen_range(3..=6);
        let mut pts: Vec<MPoint> = Vec::new();
        while pts.len() < size {
            let cand = match pts.len() {
                0 => MPoint::real(&p - &rand_rational(&mut rng, 0, 3, 4)),
                1 => MPoint::real(&p + &rand_rational(&mut rng, 0, 3, 4)),
                2 => MPoint::quad(rng.gen_range(0..2), rng.gen_range(0..4)),
                _ if rng.gen_bool(0.5) => MPoint::real(rand_rational(&mut rng, -8, 8, 4)),
                _ => MPoint::quad(rng.gen_range(0..2), rng.gen_range(0..4)),
            };
            if !pts.contains(&cand) {
                pts.push(cand);
            }
        }
        let x = sample_m_space(&pts, &u, &bridge).map_err(|e| format!("case {case}: {e}"))?;
        ensure(is_metric_exact(&x.matrix()), || format!("case {case}: sample is not a metric"))?;
        let pr = rat(&p);
        for i in 0..size {
            for j in 0..size {
                for k in 0..size {
                    let (MPoint::Real { t: xi }, MPoint::Real { t: yj }, MPoint::Quad(_)) = (&pts[i], &pts[j], &pts[k])
                    else {
                        continue;
                    };
                    if !(rat(xi) < pr && pr < rat(yj)) {
                        continue;
                    }
                    let mb = mb_triple_exact(&rat(x.d(i, j)), &rat(x.d(i, k)), &rat(x.d(j, k)));
                    ensure(!mb, || format!("case {case}: triple ({i},{j},{k}) is MB"))?;
                    checked_triples += 1;
                }
            }
        }
    }
    Ok(format!("500 samples valid, {checked_triples} straddling triples all non-MB"))
}

fn main() -> ExitCode {
    let results = [
        run(1, "metric-axiom validator", 5, c01_axiom_validator),
        run(2, "finite spaces are not shifted", 15, c02_not_shifted),
        run(3, "Cayley-Menger sign and collinearity", 5, c03_cayley_menger),
        run(4, "pseudo-linear dual characterization", 15, c04_pl_dual),
        run(5, "graph metrizability vs cycle oracle", 30, c05_metrizability),
        run(6, "epsilon-connected minimal union", 60, c06_epsilon_union),
        run(7, "ultrametric builders", 10, c07_ultrametric_builders),
        run(8, "tripod embedding and Fermat point", 15, c08_tripod_embedding),
        run(9, "tripod minimality", 60, c09_tripod_minimality),
        run(10, "two-ray thresholds", 60, c10_two_ray_thresholds),
        run(11, "F2 space", 10, c11_f2_space),
        run(12, "minimal universal subclass", 60, c12_minimal_subclass),
        run(13, "bridged MB space", 20, c13_bridged_space),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
