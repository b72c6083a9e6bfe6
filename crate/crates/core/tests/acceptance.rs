//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! process exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polyrec_core::algebra::rat;
use polyrec_core::brion::brion_check;
use polyrec_core::lp::in_convex_hull;
use polyrec_core::polytope::dilate;
use polyrec_core::schurgt::{
    counterexample_report, dominates, gt_minkowski_check, kostka, pattern_weight, schur_recursion_check_from,
    schur_via_gt, schur_via_ssyt, vertex_weights, GTPattern, Partition, SkewShape, WeightVector,
};
use polyrec_core::transform::{
    ehrhart_sequence, indicator_recursion_check, integer_point_transform, specialize, transform_sequence,
    verify_recursion, LatticeMap, SampleBox,
};
use polyrec_core::{ExponentVec, LaurentPoly, Polytope, Rational};

type Check = Result<String, String>;

fn lattice(n: usize, pts: &[&[i64]]) -> Polytope {
    Polytope::from_integer_points(n, pts).expect("valid corpus polytope")
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn corpus() -> Vec<(&'static str, Polytope)> {
    vec![
        ("unit segment", lattice(1, &[&[0], &[1]])),
        ("segment [-1,2]", lattice(1, &[&[-1], &[2]])),
        ("diagonal segment", lattice(2, &[&[0, 0], &[2, 1]])),
        ("standard triangle", lattice(2, &[&[0, 0], &[1, 0], &[0, 1]])),
        ("skew triangle", lattice(2, &[&[0, 0], &[2, 1], &[1, 3]])),
        ("unit square", lattice(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])),
        ("rectangle", lattice(2, &[&[0, 0], &[2, 0], &[0, 1], &[2, 1]])),
        ("pentagon", lattice(2, &[&[0, 0], &[2, 0], &[3, 1], &[1, 3], &[0, 2]])),
        ("3D simplex", lattice(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("simplex in R^3", lattice(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        (
            "unit cube",
            lattice(
                3,
                &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]],
            ),
        ),
    ]
}

fn offsets(n: usize) -> Vec<(&'static str, Polytope)> {
    let origin = vec![0; n];
    let point: Vec<i64> = (0..n as i64).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let tip: Vec<i64> = (0..n as i64).map(|i| i + 1).collect();
    vec![
        ("origin", lattice(n, &[&origin])),
        ("lattice point", lattice(n, &[&point])),
        ("lattice segment", lattice(n, &[&origin, &tip])),
    ]
}

fn recursion_corpus() -> Check {
    let mut pairs = 0;
    for (name, p) in corpus() {
        for (qname, q) in offsets(p.ambient_dim()) {
            let cert = verify_recursion(&p, &q, 5).map_err(|e| format!("{name} + {qname}: {e}"))?;
            if cert.k_range != (0, 5) {
                return Err(format!("{name} + {qname}: range {:?}", cert.k_range));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, k = 0..5"))
}

fn minimality() -> Check {
    let mut residuals = 0;
    for (name, p) in corpus() {
        for (qname, q) in offsets(p.ambient_dim()) {
            let cert = verify_recursion(&p, &q, 5).map_err(|e| format!("{name} + {qname}: {e}"))?;
            if cert.minimal != Some(true) {
                return Err(format!("{name} + {qname}: a residual vanishes"));
            }
            residuals += cert.minimality_residuals.len();
        }
    }
    let p = lattice(2, &[&[0, 0], &[1, 0]]);
    let q = Polytope::point(vec![half(), half()]);
    let cert = verify_recursion(&p, &q, 5).map_err(|e| e.to_string())?;
    if !cert.minimality_residuals.values().all(LaurentPoly::is_zero) || cert.minimal != Some(false) {
        return Err("half-offset segment: residual nonzero".into());
    }
    if !transform_sequence(&p, &q, 6).map_err(|e| e.to_string())?.iter().all(LaurentPoly::is_zero) {
        return Err("half-offset segment: σ nonzero".into());
    }
    Ok(format!("{residuals} nonzero residuals; half-offset example has all residuals zero"))
}

fn indicator() -> Check {
    let cases = vec![
        ("Δ_1", lattice(2, &[&[1, 0], &[0, 1]])),
        ("unit square", lattice(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])),
        (
            "triangle with (1/2,1/2)",
            Polytope::from_points(2, vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)], vec![half(), half()]]).unwrap(),
        ),
    ];
    let mut points = 0;
    for (name, p) in cases {
        let r = p.vertices().unwrap().len() as i64;
        for k in 0..=2 {
            let bbox = SampleBox::cube(2, -1, k + r + 1);
            let rep = indicator_recursion_check(&p, k as usize, &bbox).map_err(|e| format!("{name}, k = {k}: {e}"))?;
            points += rep.points_checked;
        }
    }
    Ok(format!("{points} half-integer sample points"))
}

fn brion() -> Check {
    let mut count = 0;
    let mut run = |name: String, p: &Polytope| -> Result<(), String> {
        let rep = brion_check(p).map_err(|e| format!("{name}: {e}"))?;
        count += 1;
        if rep.verified {
            Ok(())
        } else {
            Err(format!("{name}: identity fails"))
        }
    };
    for n in 1..=4 {
        run(format!("[0,{n}]"), &lattice(1, &[&[0], &[n]]))?;
    }
    let grid: Vec<[i64; 2]> = (0..4).flat_map(|a| (0..4).map(move |b| [a, b])).collect();
    for i in 0..grid.len() {
        for j in i + 1..grid.len() {
            for k in j + 1..grid.len() {
                let (a, b, c) = (grid[i], grid[j], grid[k]);
                let cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
                if cross == 0 {
                    continue;
                }
                run(format!("triangle {a:?} {b:?} {c:?}"), &lattice(2, &[&a, &b, &c]))?;
            }
        }
    }
    let (_, cube) = corpus().pop().unwrap();
    run("unit cube".into(), &cube)?;
    run(
        "Δ_3 in R^4".into(),
        &lattice(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
    )?;
    Ok(format!("{count} polytopes"))
}

/// Lattice points of `k·P` by scanning the bounding box and testing convex
/// membership with an LP.
fn brute_force_count(p: &Polytope, k: i64) -> u64 {
    let verts: Vec<Vec<Rational>> = p
        .vertices()
        .unwrap()
        .iter()
        .map(|v| v.iter().map(|x| x * Rational::from_integer(k.into())).collect())
        .collect();
    let n = p.ambient_dim();
    let lo: Vec<i64> = (0..n).map(|i| verts.iter().map(|v| v[i].floor().to_integer()).min().unwrap().try_into().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|i| verts.iter().map(|v| v[i].ceil().to_integer()).max().unwrap().try_into().unwrap()).collect();
    let mut count = 0;
    let mut x = lo.clone();
    loop {
        let pt: Vec<Rational> = x.iter().map(|&c| rat(c)).collect();
        if in_convex_hull(&pt, &verts) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            x[i] += 1;
            if x[i] <= hi[i] {
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

fn ehrhart() -> Check {
    let mut checked = 0;
    for (name, p) in corpus() {
        let rep = ehrhart_sequence(&p, 6).map_err(|e| format!("{name}: {e}"))?;
        let zero = LatticeMap::zero(p.ambient_dim());
        for k in 0..=6 {
            let sigma = integer_point_transform(&dilate(&p, k).unwrap()).unwrap();
            let c = specialize(&sigma, &zero).unwrap().coeff(&ExponentVec::zero(0));
            let expected = brute_force_count(&p, k);
            if c != expected.into() || rep.counts[k as usize] != expected {
                return Err(format!("{name}, k = {k}: {c} vs brute force {expected}"));
            }
        }
        if !rep.annihilated {
            return Err(format!("{name}: (X-1)^{} does not annihilate {:?}", rep.dim + 1, rep.counts));
        }
        checked += 1;
    }
    Ok(format!("{checked} polytopes, k = 0..6"))
}

fn partitions(size: i64, max_part: i64, len: usize) -> Vec<Vec<i64>> {
    if size == 0 {
        return vec![vec![]];
    }
    if len == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(size)).rev() {
        for mut rest in partitions(size - first, first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn bijection() -> Check {
    let mut shapes = 0;
    for n in 1..=4usize {
        for size in 0..=6 {
            for lam in partitions(size, size, n) {
                let lam = Partition::new(&lam, n).unwrap();
                for mu_size in 0..=size {
                    for mu in partitions(mu_size, mu_size, n) {
                        let mu = Partition::new(&mu, n).unwrap();
                        if !lam.contains(&mu) {
                            continue;
                        }
                        let shape = SkewShape::new(lam.clone(), mu).unwrap();
                        let gt = schur_via_gt(&shape).map_err(|e| format!("{shape:?}: {e}"))?;
                        if gt != schur_via_ssyt(&shape).unwrap() {
                            return Err(format!("{shape:?}: Gelfand-Tsetlin and tableau sums differ"));
                        }
                        shapes += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{shapes} skew shapes"))
}

fn counterexample() -> Check {
    let shape = SkewShape::from_parts(&[5, 3, 1], &[3, 0, 0], 3).unwrap();
    let target = WeightVector::from([4, 2, 0]);
    let pattern = GTPattern::new(vec![vec![1, 3, 5], vec![0, 1, 4], vec![0, 0, 3], vec![0, 0, 3]]).unwrap();
    if pattern_weight(&pattern) != target {
        return Err("(a) pattern weight".into());
    }
    if !dominates(&[4, 2, 0], &[3, 2, 1]) {
        return Err("(b) dominance".into());
    }
    let k = kostka(&shape, &target).map_err(|e| e.to_string())?;
    if k < 1 {
        return Err("(c) Kostka coefficient".into());
    }
    let vw = vertex_weights(&shape).map_err(|e| e.to_string())?;
    let allowed: BTreeSet<Rational> = [0, 1, 3, 5].map(rat).into_iter().collect();
    if !vw.all_integral() || !vw.coordinates().is_subset(&allowed) {
        return Err(format!("(d) vertex coordinates {:?}", vw.coordinates()));
    }
    if vw.integral.contains(&target) {
        return Err("(e) (4,2,0) is a vertex weight".into());
    }
    let rep = counterexample_report(&shape).map_err(|e| e.to_string())?;
    if rep.divides || !rep.refuted || !rep.missing.contains(&target) {
        return Err("(f) factor containment".into());
    }
    Ok(format!(
        "K = {k}, {} vertices, |W| = {}, missing {:?}",
        vw.vertices.len(),
        rep.conjecture_weights.len(),
        rep.missing
    ))
}

fn corollary() -> Check {
    let z = Partition::zero(2);
    let one = Partition::new(&[1], 2).unwrap();
    let rep = schur_recursion_check_from(&z, &one, &z, &z, 0, 8).map_err(|e| e.to_string())?;
    let roots = vec![WeightVector::from([1, 0]), WeightVector::from([0, 1])];
    if rep.certificate.order() != 2 || rep.vertex_weights != roots || rep.certificate.k_range != (0, 6) {
        return Err(format!("unexpected recursion {:?}", rep.vertex_weights));
    }
    for (l, s) in rep.sequence.iter().enumerate() {
        if s.len() != l + 1 || !s.terms().all(|(e, c)| e.total_degree() == l as i64 && *c == 1.into()) {
            return Err(format!("s_{l} is not h_{l}"));
        }
    }
    let shapes: [(&[i64], &[i64], usize); 4] =
        [(&[2, 1], &[1], 2), (&[3, 1], &[1], 2), (&[2, 1], &[], 3), (&[2, 2, 1], &[1, 1], 3)];
    for (lam, mu, n) in shapes {
        let zero = Partition::zero(n);
        let (lam, mu) = (Partition::new(lam, n).unwrap(), Partition::new(mu, n).unwrap());
        if !gt_minkowski_check(&zero, &lam, &mu, &zero, 1, 2).map_err(|e| e.to_string())? {
            return Err(format!("GL(2·{:?}/2·{:?}) differs from the Minkowski sum", lam.parts(), mu.parts()));
        }
    }
    Ok(format!("h_l recursion for l = 0..8; {} Minkowski instances", shapes.len()))
}

/// Name, check, runtime budget.
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 recursion on corpus", recursion_corpus, Some(Duration::from_secs(60))),
        ("2 minimality residuals", minimality, None),
        ("3 indicator recursion", indicator, None),
        ("4 Brion identity", brion, Some(Duration::from_secs(60))),
        ("5 Ehrhart specialization", ehrhart, None),
        ("6 GT/SSYT bijection", bijection, None),
        ("7 counterexample", counterexample, Some(Duration::from_secs(30))),
        ("8 Schur recursion", corollary, None),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
