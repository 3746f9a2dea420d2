//! Acceptance criteria, one line each. Runs as a plain binary so every
//! criterion reports even when an earlier one fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use maxplus_hemispaces::cli;
use maxplus_hemispaces::enumeration::{
    bell_f, bell_standard, census_n3, enumerate_centered_hyperplanes, enumerate_face_partitions,
    enumerate_hemispaces, enumerate_splittings, enumerate_weak_orders, weak_order_to_splitting,
    Splitting,
};
use maxplus_hemispaces::faces::{
    boundary_subface, classify, face_catalog, face_conditions, random_point_in_face,
    random_rational, segment_face_trace, ExtIndex, FaceId, Hyperplane, HyperplaneSpec, IndexSet,
};
use maxplus_hemispaces::hemispace::{
    assemble, check_hemispace, standard_grid, validate_partition, FacePartition, PartSide,
    TypeISplit,
};
use maxplus_hemispaces::maxplus::{ExtScalar, Point, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240601;
const CONVEXITY_TRIALS: usize = 500;
const CONE_SAMPLES: usize = 200;
const COUNT_BUDGET: Duration = Duration::from_secs(60);
const CONVEXITY_BUDGET: Duration = Duration::from_secs(120);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli_call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("hemispaces").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn hp(n: usize, i: &[usize], j: &[usize], l: &[usize], alpha: bool) -> Hyperplane {
    Hyperplane::new(&HyperplaneSpec {
        n,
        i: i.to_vec(),
        j: j.to_vec(),
        l: l.to_vec(),
        alpha,
    })
    .expect("valid hyperplane")
}

// ---------------------------------------------------------------- oracles

/// Ordered Bell numbers from Stirling numbers of the second kind:
/// `a(m) = Σ_k k!·S(m, k)`.
fn ordered_bell_oracle(m: usize) -> u128 {
    let mut s = vec![vec![0u128; m + 1]; m + 1];
    s[0][0] = 1;
    for i in 1..=m {
        for k in 1..=i {
            s[i][k] = k as u128 * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    let mut fact = 1u128;
    let mut total = 0u128;
    for (k, row) in s[m].iter().enumerate() {
        if k > 0 {
            fact *= k as u128;
        }
        total += fact * row;
    }
    total
}

fn term(token: &str, p: &Point) -> ExtScalar {
    match token {
        "0" => ExtScalar::ZERO,
        "-inf" => ExtScalar::Bottom,
        t => {
            let c: usize = t.strip_prefix('x').and_then(|c| c.parse().ok()).expect("term");
            p.coord(c)
        }
    }
}

/// Evaluates one printed condition such as `x2 < x1`, `x1 = 0`, or
/// `x3 > -inf or x4 > -inf`.
fn condition_holds(cond: &str, p: &Point) -> bool {
    cond.split(" or ").any(|alt| {
        let parts: Vec<&str> = alt.split_whitespace().collect();
        assert_eq!(parts.len(), 3, "condition `{alt}`");
        let (a, b) = (term(parts[0], p), term(parts[2], p));
        match parts[1] {
            "=" => a == b,
            "<" => a < b,
            ">" => a > b,
            op => panic!("operator {op}"),
        }
    })
}

fn conditions_hold(h: &Hyperplane, face: FaceId, p: &Point) -> bool {
    face_conditions(h, face)
        .expect("catalog face")
        .iter()
        .all(|c| condition_holds(c, p))
}

/// Face of `p` computed straight from the equation terms.
fn face_oracle(spec: &HyperplaneSpec, p: &Point) -> FaceId {
    if spec.l.iter().any(|&l| p.coord(l).is_finite()) {
        return FaceId::TypeII;
    }
    let mut terms: Vec<(ExtIndex, ExtScalar)> = spec
        .i
        .iter()
        .chain(&spec.j)
        .map(|&c| (ExtIndex::Coord(c), p.coord(c)))
        .collect();
    if spec.alpha {
        terms.push((ExtIndex::FreeTerm, ExtScalar::ZERO));
    }
    let top = terms.iter().map(|t| t.1).max().expect("nonempty");
    if top.is_bottom() {
        return FaceId::TypeI;
    }
    FaceId::K(terms.iter().filter(|t| t.1 == top).map(|t| t.0).collect())
}

fn combine(x: &Point, y: &Point, alpha: ExtScalar, beta: ExtScalar) -> Point {
    let coords = x
        .coords()
        .iter()
        .zip(y.coords())
        .map(|(&a, &b)| std::cmp::max(a + alpha, b + beta))
        .collect();
    Point::new(coords).expect("nonempty")
}

/// `[x, y]` at `α = -∞`, `β = -∞`, and every parameter on a `1/12` grid
/// with the other parameter at 0, down to -40.
fn dense_segment(x: &Point, y: &Point) -> Vec<Point> {
    let zero = ExtScalar::ZERO;
    let mut out = vec![combine(x, y, ExtScalar::Bottom, zero), combine(x, y, zero, ExtScalar::Bottom)];
    for k in 0..=480 {
        let t = ExtScalar::Finite(Rational::new(-k, 12));
        out.push(combine(x, y, t, zero));
        out.push(combine(x, y, zero, t));
    }
    out
}

fn grid(n: usize) -> Vec<Point> {
    let values = standard_grid();
    let mut points = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    points.into_iter().map(|c| Point::new(c).expect("n >= 1")).collect()
}

/// All splittings by trying every side assignment of the nonempty subsets.
fn brute_force_splittings(m: usize) -> BTreeSet<Splitting> {
    let sets = IndexSet::from_coords(1..=m).nonempty_subsets();
    let full = *sets.last().expect("nonempty");
    let closed = |family: &BTreeSet<IndexSet>| {
        family.iter().all(|&a| family.iter().all(|&b| family.contains(&a.union(b))))
    };
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << sets.len() {
        let (c, rest): (Vec<IndexSet>, Vec<IndexSet>) =
            sets.iter().enumerate().fold((vec![], vec![]), |(mut c, mut r), (k, &s)| {
                if mask >> k & 1 == 1 {
                    c.push(s)
                } else {
                    r.push(s)
                }
                (c, r)
            });
        let c: BTreeSet<IndexSet> = c.into_iter().collect();
        let rest: BTreeSet<IndexSet> = rest.into_iter().collect();
        if c.contains(&full) && closed(&c) && closed(&rest) {
            out.insert(Splitting { c, rest });
        }
    }
    out
}

// --------------------------------------------------------------- criteria

fn counting() -> Check {
    let start = Instant::now();
    let (code, out) = cli_call(&["count", "--n", "4"]);
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("count exited with {code}"))?;
    let rows: Vec<serde_json::Value> =
        out.lines().map(|l| serde_json::from_str(l).expect("json row")).collect();
    let expected = [6u64, 26, 150, 1082];
    ensure(rows.len() == 4, || format!("{} rows", rows.len()))?;
    for (k, (row, &want)) in rows.iter().zip(&expected).enumerate() {
        let oracle = 2 * ordered_bell_oracle(k + 2) as u64;
        ensure(
            row["n"] == k + 1
                && row["enumerated"] == want
                && row["formula"] == want
                && row["match"] == true
                && oracle == want,
            || format!("row {row}, oracle {oracle}"),
        )?;
    }
    ensure(elapsed < COUNT_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("6, 26, 150, 1082 enumerated and by formula in {elapsed:.2?}"))
}

fn recurrence() -> Check {
    for n in 0..=10 {
        let oracle = ordered_bell_oracle(n + 1);
        ensure(
            bell_f(n) == bell_standard(n + 1) && bell_f(n) == oracle.into(),
            || format!("n = {n}: f = {}, a = {}, oracle {oracle}", bell_f(n), bell_standard(n + 1)),
        )?;
    }
    ensure(bell_f(5) == 4683u32.into(), || format!("f(5) = {}", bell_f(5)))?;
    let (code, out) = cli_call(&["verify", "--n", "1", "--trials", "50"]);
    let note = out.lines().find(|l| l.starts_with("NOTE")).unwrap_or_default();
    ensure(code == 0 && note.contains("4683") && note.contains("4283"), || {
        format!("verify exit {code}, note `{note}`")
    })?;
    Ok("f(n) = a(n+1) for n = 0..=10; f(5) = 4683, printed 4283 reported as a note".into())
}

fn census_plane() -> Check {
    for h in enumerate_centered_hyperplanes(2) {
        let parts = enumerate_face_partitions(&h).map_err(|e| e.to_string())?;
        ensure(parts.len() == 4, || format!("{h}: {} partitions", parts.len()))?;
    }
    let h = hp(2, &[1, 2], &[], &[], true);
    // the free term is written as 3
    let rename = |s: IndexSet| -> BTreeSet<usize> {
        s.iter()
            .map(|i| match i {
                ExtIndex::Coord(c) => c,
                ExtIndex::FreeTerm => 3,
            })
            .collect()
    };
    let free = IndexSet::singleton(ExtIndex::FreeTerm);
    let got: BTreeSet<BTreeSet<BTreeSet<usize>>> = enumerate_face_partitions(&h)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| {
            let side = p.side_of(free).expect("assigned");
            p.get(side).iter().map(|&s| rename(s)).collect()
        })
        .collect();
    let want: BTreeSet<BTreeSet<BTreeSet<usize>>> = [
        vec![vec![3]],
        vec![vec![3], vec![1, 3]],
        vec![vec![3], vec![2, 3]],
        vec![vec![3], vec![1, 3], vec![2, 3], vec![1, 2, 3]],
    ]
    .into_iter()
    .map(|side| side.into_iter().map(|s| s.into_iter().collect()).collect())
    .collect();
    ensure(got == want, || format!("sides {got:?}"))?;
    Ok("4 partitions per hyperplane; I = {1,2} sides match the listing".into())
}

fn census_space() -> Check {
    let proper: usize = enumerate_centered_hyperplanes(3)
        .iter()
        .map(|h| enumerate_face_partitions(h).map(|p| p.len()).unwrap_or(0))
        .sum();
    let t = census_n3();
    ensure(proper == 74, || format!("{proper} proper partitions"))?;
    ensure(t.unclassified == 0, || format!("{} unclassified", t.unclassified))?;
    let got = (t.case1_sub1, t.case1_sub2, t.case2_sub1, t.case2_sub2);
    ensure(got == (10, 36, 32, 72), || format!("tallies {got:?}"))?;
    ensure((t.case1(), t.case2(), t.total()) == (46, 104, 150), || "totals".into())?;
    Ok("74 partitions; tallies 10, 36, 32, 72; 46 + 104 = 150".into())
}

fn convexity() -> Check {
    let start = Instant::now();
    let mut hemispaces = 0;
    let mut pairs = 0;
    for n in 1..=3 {
        for hm in enumerate_hemispaces(n) {
            let report = check_hemispace(&hm, CONVEXITY_TRIALS, SEED);
            hemispaces += 1;
            pairs += report.pairs_checked;
            if let Some(c) = report.counterexample {
                return Err(format!(
                    "n = {n}, {}: ({}) on [({}), ({})]",
                    hm.hyperplane(),
                    c.point,
                    c.x,
                    c.y
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < CONVEXITY_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{hemispaces} hemispaces, {CONVEXITY_TRIALS} trials each, {pairs} segments, 0 counterexamples in {elapsed:.2?}"
    ))
}

fn face_partition() -> Check {
    let mut points = 0;
    for n in 1..=3 {
        for h in enumerate_centered_hyperplanes(n) {
            let catalog = face_catalog(&h);
            let spec = h.spec();
            for p in grid(n) {
                points += 1;
                let holding: Vec<FaceId> =
                    catalog.iter().copied().filter(|&f| conditions_hold(&h, f, &p)).collect();
                let got = classify(&h, &p).map_err(|e| e.to_string())?;
                ensure(holding == [got] && face_oracle(&spec, &p) == got, || {
                    format!("{h} at ({p}): classify {got}, conditions hold for {holding:?}")
                })?;
            }
        }
    }
    Ok(format!("{points} grid points, each in exactly one face (100%)"))
}

fn segment_trace() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pairs = 0;
    for n in 1..=3 {
        for h in enumerate_centered_hyperplanes(n) {
            let spec = h.spec();
            let faces = face_catalog(&h);
            for &f1 in &faces {
                for &f2 in &faces {
                    if f1 == f2 {
                        continue;
                    }
                    pairs += 1;
                    let x = random_point_in_face(&h, f1, &mut rng).map_err(|e| e.to_string())?;
                    let y = random_point_in_face(&h, f2, &mut rng).map_err(|e| e.to_string())?;
                    let bd = boundary_subface(&h, f1, f2).map_err(|e| e.to_string())?;
                    let want: BTreeSet<FaceId> = [f1, f2, bd].into_iter().collect();
                    let dense: BTreeSet<FaceId> =
                        dense_segment(&x, &y).iter().map(|p| face_oracle(&spec, p)).collect();
                    let traced: BTreeSet<FaceId> = segment_face_trace(&h, &x, &y)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .collect();
                    ensure(dense == want && traced == want, || {
                        format!("{h}: [({x}), ({y})] dense {dense:?}, traced {traced:?}")
                    })?;
                }
            }
        }
    }
    Ok(format!("{pairs} ordered face pairs (100%)"))
}

fn homogenize(spec: &HyperplaneSpec) -> (Hyperplane, HyperplaneSpec) {
    let mut hom = spec.clone();
    hom.n += 1;
    hom.j.push(hom.n);
    hom.alpha = false;
    (Hyperplane::new(&hom).expect("valid"), hom)
}

fn cone() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut faces = 0;
    let mut literal_scaling_breaks = 0;
    let mut literal_samples = 0;
    for n in 1..=3 {
        for h in enumerate_centered_hyperplanes(n) {
            let spec = h.spec();
            let (hom, hom_spec) = homogenize(&spec);
            // centered faces: closed under ⊕
            for f in face_catalog(&h) {
                faces += 1;
                for _ in 0..CONE_SAMPLES {
                    let x = random_point_in_face(&h, f, &mut rng).map_err(|e| e.to_string())?;
                    let y = random_point_in_face(&h, f, &mut rng).map_err(|e| e.to_string())?;
                    let sum = x.oplus(&y).map_err(|e| e.to_string())?;
                    ensure(face_oracle(&spec, &sum) == f, || format!("{h}, {f}: ({x}) ⊕ ({y})"))?;
                    let scaled = x.scale(ExtScalar::Finite(random_rational(&mut rng)));
                    literal_samples += 1;
                    if face_oracle(&spec, &scaled) != f {
                        literal_scaling_breaks += 1;
                    }
                }
            }
            // homogenized faces: closed under ⊕ and finite scaling
            for f in face_catalog(&hom) {
                faces += 1;
                for _ in 0..CONE_SAMPLES {
                    let x = random_point_in_face(&hom, f, &mut rng).map_err(|e| e.to_string())?;
                    let y = random_point_in_face(&hom, f, &mut rng).map_err(|e| e.to_string())?;
                    let lambda = ExtScalar::Finite(random_rational(&mut rng));
                    let sum = x.oplus(&y).map_err(|e| e.to_string())?;
                    let scaled = x.scale(lambda);
                    ensure(face_oracle(&hom_spec, &sum) == f, || format!("{hom}, {f}: ({x}) ⊕ ({y})"))?;
                    ensure(face_oracle(&hom_spec, &scaled) == f, || {
                        format!("{hom}, {f}: {lambda} ⊗ ({x})")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "{faces} faces × {CONE_SAMPLES}: ⊕ closed on centered faces, ⊕ and ⊗ closed on homogenized faces; \
         scaling the affine faces directly moved {literal_scaling_breaks} of {literal_samples} samples off their face"
    ))
}

fn bijection() -> Check {
    for m in 1..=4 {
        let images: Vec<Splitting> = enumerate_weak_orders(m).iter().map(weak_order_to_splitting).collect();
        let distinct: BTreeSet<Splitting> = images.iter().cloned().collect();
        let enumerated: BTreeSet<Splitting> = enumerate_splittings(m).into_iter().collect();
        let brute = brute_force_splittings(m);
        let a = ordered_bell_oracle(m) as usize;
        ensure(
            distinct.len() == images.len()
                && distinct == enumerated
                && enumerated == brute
                && images.len() == a
                && bell_standard(m) == a.into(),
            || {
                format!(
                    "m = {m}: {} images, {} distinct, {} enumerated, {} brute force, a = {a}",
                    images.len(),
                    distinct.len(),
                    enumerated.len(),
                    brute.len()
                )
            },
        )?;
    }
    Ok("injective and onto for m = 1..=4; 1, 3, 13, 75".into())
}

fn distinctness() -> Check {
    let grid = standard_grid();
    let mut counts = Vec::new();
    for n in 2..=3 {
        let hemispaces = enumerate_hemispaces(n);
        let signatures: BTreeSet<String> = hemispaces
            .iter()
            .map(|hm| hm.signature(&grid).map(|s| s.to_string()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        counts.push(signatures.len());
        ensure(signatures.len() == hemispaces.len(), || {
            format!("n = {n}: {} signatures for {} hemispaces", signatures.len(), hemispaces.len())
        })?;
    }
    ensure(counts == [26, 150], || format!("{counts:?}"))?;
    Ok("26 and 150 distinct signatures".into())
}

fn split(h: &Hyperplane, first: &[IndexSet]) -> FacePartition {
    let rest: Vec<IndexSet> = h
        .universe()
        .nonempty_subsets()
        .into_iter()
        .filter(|s| !first.contains(s))
        .collect();
    validate_partition(h, first, &rest).expect("valid split")
}

fn degenerate() -> Check {
    let h = hp(4, &[1], &[2], &[3], false);
    let part = split(&h, &[IndexSet::from_coords([1])]);
    let line = hp(1, &[1], &[], &[], true);
    let one = IndexSet::from_coords([1]);
    let half = split(&line, &[one, one.with(ExtIndex::FreeTerm)]);
    let x4_nonnegative = assemble(&line, &half, PartSide::First, None, None)
        .map_err(|e| e.to_string())?
        .first;
    let mut checked = 0;
    for type_ii in [true, false] {
        for type_i in [TypeISplit::AllToFirst, TypeISplit::Split(Box::new(x4_nonnegative.clone()))] {
            let pair = assemble(&h, &part, PartSide::First, Some(type_i), Some(type_ii))
                .map_err(|e| e.to_string())?;
            for member in [&pair.first, &pair.second] {
                let report = check_hemispace(member, CONVEXITY_TRIALS, SEED);
                checked += 1;
                ensure(report.pass && report.pairs_checked > 0, || {
                    format!("type II {type_ii}: {:?}", report.counterexample)
                })?;
            }
        }
    }
    Ok(format!("{checked} members convex over {CONVEXITY_TRIALS} trials each"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("counting", counting),
        ("recurrence cross-check", recurrence),
        ("census in R^2", census_plane),
        ("census in R^3", census_space),
        ("convexity of enumerated hemispaces", convexity),
        ("faces partition the grid", face_partition),
        ("segment traces", segment_trace),
        ("cone closure", cone),
        ("weak-order bijection", bijection),
        ("signature distinctness", distinctness),
        ("degenerate R^4 pairs", degenerate),
    ];
    let mut failed = BTreeMap::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why}", k + 1);
                failed.insert(k + 1, name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
