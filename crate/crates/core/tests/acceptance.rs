//! Acceptance checks, one line per criterion. Exits non-zero on any failure.

mod common;

use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use drg_core::array::IntersectionArray;
use drg_core::feasibility::{bcn444_divisibility, lemma1_bound, lemma6_c2_lower};
use drg_core::exact::rat;
use drg_core::graphs::construct::{
    doob_diam3, gosset, halved_cube, hamming, hoffman_singleton, icosahedron, odd, second_subconstituent, sylvester,
};
use drg_core::graphs::{adjacency_spectrum_numeric, check_distance_regular, is_geometric_small, GeometricVerdict, Graph};
use drg_core::search::{
    c2one_pairs, scan_c2one_case, search, taylor_classify, threshold_scan, CaseId, PartialArrayScan, SearchConfig,
};
use drg_core::spectral::spectrum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const D3_LIMIT: Duration = Duration::from_secs(60);
const D4_LIMIT: Duration = Duration::from_secs(600);
const SCAN_LIMIT: Duration = Duration::from_secs(5);
const GRAPH_LIMIT: Duration = Duration::from_secs(10);
const NUMERIC_TOL: f64 = 1e-9;
const SEED: u64 = 0x5eed;

/// The fifteen diameter-3 arrays, numbered from 1.
const D3_ARRAYS: [&str; 15] = [
    "{6,4,1;1,1,6}",
    "{7,4,1;1,2,7}",
    "{9,6,1;1,2,9}",
    "{15,8,1;1,4,15}",
    "{15,10,1;1,2,15}",
    "{18,12,1;1,2,18}",
    "{27,16,1;1,4,27}",
    "{39,24,1;1,4,39}",
    "{45,26,3;1,6,39}",
    "{45,24,1;1,8,45}",
    "{45,24,2;1,10,36}",
    "{51,30,1;1,6,51}",
    "{60,35,9;1,6,42}",
    "{87,48,1;1,12,87}",
    "{207,120,1;1,20,207}",
];

/// One-based positions in `D3_ARRAYS` removed by the divisibility condition.
const DIVISIBILITY_ELIMINATED: [usize; 7] = [4, 10, 11, 12, 13, 14, 15];

const SPECTRA: [(&str, &[(i64, i64)]); 8] = [
    ("{15,8,1;1,4,15}", &[(15, 1), (5, 12), (-1, 15), (-3, 20)]),
    ("{27,16,1;1,4,27}", &[(27, 1), (9, 28), (-1, 27), (-3, 84)]),
    ("{45,24,1;1,8,45}", &[(45, 1), (15, 23), (-1, 45), (-3, 115)]),
    ("{45,24,2;1,10,36}", &[(45, 1), (15, 16), (5, 18), (-3, 125)]),
    ("{51,30,1;1,6,51}", &[(51, 1), (17, 39), (-1, 51), (-3, 221)]),
    ("{60,35,9;1,6,42}", &[(60, 1), (24, 35), (6, 50), (-3, 400)]),
    ("{87,48,1;1,12,87}", &[(87, 1), (29, 33), (-1, 87), (-3, 319)]),
    ("{207,120,1;1,20,207}", &[(207, 1), (69, 52), (-1, 207), (-3, 1196)]),
];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);
type GraphCase = (&'static str, fn() -> Graph, &'static str);

fn ia(s: &str) -> IntersectionArray {
    s.parse().expect("well-formed array")
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    if elapsed < limit {
        Ok(elapsed)
    } else {
        Err(format!("{what} took {elapsed:.1?}, limit {limit:?}"))
    }
}

fn d3_search() -> Check {
    let start = Instant::now();
    let found = search(&SearchConfig::new(3)).map_err(|e| e.to_string())?.arrays;
    let elapsed = within(start, D3_LIMIT, "search")?;
    let mut want: Vec<IntersectionArray> = D3_ARRAYS.iter().map(|s| ia(s)).collect();
    let mut got = found.clone();
    want.sort_by_key(|a| a.to_string());
    got.sort_by_key(|a| a.to_string());
    if got != want {
        let shown: Vec<String> = found.iter().map(|a| a.to_string()).collect();
        return Err(format!("found {} arrays: {}", found.len(), shown.join(" ")));
    }
    Ok(format!("15 arrays in {elapsed:.1?}"))
}

fn d4_search() -> Check {
    let start = Instant::now();
    let found = search(&SearchConfig::new(4)).map_err(|e| e.to_string())?;
    let elapsed = within(start, D4_LIMIT, "search")?;
    if !found.arrays.is_empty() {
        let shown: Vec<String> = found.arrays.iter().map(|a| a.to_string()).collect();
        return Err(format!("expected none, found {}", shown.join(" ")));
    }
    Ok(format!("empty after {} tuples in {elapsed:.1?}", found.stats.tuples))
}

fn spectra() -> Check {
    for (array, want) in SPECTRA {
        let spec = spectrum(&ia(array)).map_err(|e| format!("{array}: {e}"))?;
        let got = spec.as_integer_pairs().ok_or_else(|| format!("{array}: non-integral spectrum {spec}"))?;
        let want: Vec<(i64, _)> = want.iter().map(|&(t, m)| (t, rat(m, 1))).collect();
        if got != want {
            return Err(format!("{array}: got {spec}"));
        }
    }
    Ok(format!("{} spectra exact", SPECTRA.len()))
}

fn divisibility() -> Check {
    for (i, array) in D3_ARRAYS.iter().enumerate() {
        let a = ia(array);
        let spec = spectrum(&a).map_err(|e| format!("{array}: {e}"))?;
        let failed = bcn444_divisibility(&a, &spec).failed();
        if failed != DIVISIBILITY_ELIMINATED.contains(&(i + 1)) {
            return Err(format!("({}) {array}: eliminated = {failed}", i + 1));
        }
    }
    Ok(format!("eliminates {DIVISIBILITY_ELIMINATED:?}"))
}

fn case_scans() -> Check {
    let expected: [(CaseId, &[&str]); 4] = [
        (CaseId::K5A0, &["{5,4,3,3,...;1,1,1,1,...}", "{5,4,3,2,...;1,1,1,1,...}", "{5,4,2,2,...;1,1,1,1,...}"]),
        (CaseId::K6A0, &["{6,5,2,2,...;1,1,1,1,...}"]),
        (CaseId::K8A1, &["{8,6,3,3,...;1,1,2,2,...}"]),
        (CaseId::K12A2, &[]),
    ];
    let mut slowest = Duration::ZERO;
    for (id, want) in expected {
        let start = Instant::now();
        let report = scan_c2one_case(&PartialArrayScan::case(id)).map_err(|e| e.to_string())?;
        slowest = slowest.max(within(start, SCAN_LIMIT, &format!("case {id}"))?);
        let got: Vec<String> = report.survivors().iter().map(|p| p.to_string()).collect();
        if got != want {
            return Err(format!("case {id}: survivors {got:?}"));
        }
        if id == CaseId::K12A2 && !report.all_strictly_below() {
            return Err("case 12-2: a matrix reaches -3".into());
        }
    }
    for (a2, at_most) in threshold_scan(8, 1, 0..=7) {
        if at_most != (a2 <= 1) {
            return Err(format!("case 8-1: a2 = {a2} gives min eig <= -3: {at_most}"));
        }
    }
    Ok(format!("4 cases, slowest {slowest:.1?}"))
}

fn claw_pairs() -> Check {
    let got: Vec<(i64, i64)> = c2one_pairs().into_iter().collect();
    let want = vec![(3, 0), (4, 0), (5, 0), (6, 0), (6, 1), (8, 1), (12, 2)];
    if got == want {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}"))
    }
}

fn taylor() -> Check {
    let report = taylor_classify();
    if report.minus_three_c2 != [2, 4, 6, 10] {
        return Err(format!("c2 values {:?}", report.minus_three_c2));
    }
    let geometric: Vec<i64> = report
        .minus_three
        .iter()
        .filter(|c| c.status == drg_core::search::TaylorStatus::Geometric)
        .map(|c| c.c2)
        .collect();
    if geometric != [2, 4] {
        return Err(format!("geometric c2 values {geometric:?}"));
    }
    let got: Vec<String> = report.non_geometric().iter().map(|a| a.to_string()).collect();
    let want = ["{15,6,1;1,6,15}", "{27,10,1;1,10,27}", "{5,2,1;1,2,5}"];
    if got != want {
        return Err(format!("non-geometric {got:?}"));
    }
    Ok(got.join(" "))
}

fn graph_arrays() -> Check {
    let cases: [GraphCase; 8] = [
        ("odd(4)", || odd(4).unwrap(), "{4,3,3;1,1,2}"),
        ("halved_cube(6)", || halved_cube(6).unwrap(), "{15,6,1;1,6,15}"),
        ("halved_cube(7)", || halved_cube(7).unwrap(), "{21,10,3;1,6,15}"),
        ("gosset", gosset, "{27,10,1;1,10,27}"),
        ("icosahedron", icosahedron, "{5,2,1;1,2,5}"),
        ("doob_diam3", doob_diam3, "{9,6,3;1,2,3}"),
        ("second subconstituent", || second_subconstituent(&hoffman_singleton(), 0).unwrap(), "{6,5,1;1,1,6}"),
        ("sylvester", sylvester, "{5,4,2;1,1,4}"),
    ];
    let mut slowest = Duration::ZERO;
    for (name, build, want) in cases {
        let start = Instant::now();
        let g = build();
        let dr = check_distance_regular(&g).map_err(|e| format!("{name}: {e}"))?;
        let array = dr.array.ok_or_else(|| format!("{name}: not distance-regular ({:?})", dr.violation))?;
        if array != ia(want) {
            return Err(format!("{name}: got {array}"));
        }
        let theta_d = spectrum(&array).map_err(|e| e.to_string())?.theta_min().approx();
        let numeric_min = *adjacency_spectrum_numeric(&g).last().expect("nonempty");
        if (numeric_min - theta_d).abs() > NUMERIC_TOL {
            return Err(format!("{name}: numeric min {numeric_min} vs theta_D {theta_d}"));
        }
        if name == "icosahedron" && (theta_d + 5f64.sqrt()).abs() > NUMERIC_TOL {
            return Err(format!("icosahedron: theta_D = {theta_d}"));
        }
        slowest = slowest.max(within(start, GRAPH_LIMIT, name)?);
    }
    Ok(format!("8 graphs, slowest {slowest:.1?}"))
}

fn geometricity() -> Check {
    let verdict = |g: Graph| -> Result<GeometricVerdict, String> {
        let array = check_distance_regular(&g).map_err(|e| e.to_string())?.array.ok_or("not distance-regular")?;
        is_geometric_small(&g, &array).map_err(|e| e.to_string())
    };
    let h34 = verdict(hamming(3, 4).unwrap())?;
    if !matches!(h34, GeometricVerdict::Geometric { .. }) {
        return Err(format!("H(3,4): {h34:?}"));
    }
    for (name, g) in [("doob_diam3", doob_diam3()), ("icosahedron", icosahedron())] {
        let v = verdict(g)?;
        if !matches!(v, GeometricVerdict::NonGeometric { .. }) {
            return Err(format!("{name}: {v:?}"));
        }
    }
    Ok("H(3,4) geometric; doob_diam3, icosahedron non-geometric".into())
}

fn property_suites() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let arrays: Vec<IntersectionArray> = (0..common::RANDOM_ARRAYS)
        .map(|_| {
            let d = rng.gen_range(3..=4);
            common::random_array(&mut rng, d)
        })
        .collect();
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = arrays.len().div_ceil(workers);
    let failures: Vec<String> = thread::scope(|s| {
        let handles: Vec<_> = arrays
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().filter_map(|a| common::check_all(a).err()).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    match failures.first() {
        None => Ok(format!("{} arrays", arrays.len())),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

fn bound_identities() -> Check {
    for a1 in 0..=200 {
        let got = lemma6_c2_lower(4, 3, a1).map_err(|e| e.to_string())?;
        if got != rat(a1 + 2, 4) {
            return Err(format!("a1 = {a1}: {got}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let a1 = rng.gen_range(0..=100);
        let c2 = rng.gen_range(1..=a1 + 1);
        let at = |k: i64| {
            let b1 = k - a1 - 1;
            let array = IntersectionArray::from_slices(&[k, b1, 1], &[1, c2, k]);
            lemma1_bound(&array, 3).map(|v| v.passed()).map_err(|e| e.to_string())
        };
        let edge = 3 * a1 - 2 * c2 + 9;
        if at(edge)? || !at(edge - 1)? {
            return Err(format!("a1 = {a1}, c2 = {c2}: boundary not at k = {edge}"));
        }
    }
    Ok("lemma bounds exact at 201 + 100 points".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("diameter-3 search", d3_search),
        ("diameter-4 search", d4_search),
        ("exact spectra", spectra),
        ("divisibility elimination", divisibility),
        ("case scans", case_scans),
        ("claw pairs", claw_pairs),
        ("taylor classification", taylor),
        ("graph arrays", graph_arrays),
        ("geometricity", geometricity),
        ("property suites", property_suites),
        ("bound identities", bound_identities),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
