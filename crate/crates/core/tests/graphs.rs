use std::path::PathBuf;

use drg_core::feasibility::delsarte_max_clique;
use drg_core::graphs::construct::{
    coxeter, dodecahedron, doob_diam3, gosset, halved_cube, hamming, hoffman_singleton, icosahedron, johnson, odd,
    petersen, second_subconstituent, sylvester,
};
use drg_core::graphs::graph6::{decode, encode};
use drg_core::graphs::manifest::{load_entry, verify_all, EntryStatus, Manifest};
use drg_core::graphs::{c2one_structure_check, check_distance_regular, maximal_cliques_at_least, Graph, LocalStructure};
use drg_core::spectral::spectrum;
use proptest::prelude::*;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Straightforward graph6 writer: order byte(s), then the upper triangle
/// column by column as a bit string, padded and cut into 6-bit digits.
fn oracle_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = String::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..130).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_matches_oracle_writer(g in random_graph()) {
        let text = encode(&g);
        prop_assert_eq!(&text, &oracle_graph6(&g));
        let back = decode(text.as_bytes()).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }
}

#[test]
fn shipped_data_loads() {
    let dir = data_dir();
    let manifest = Manifest::load(&dir).unwrap();
    let entry = manifest.entry("dodecahedron").unwrap();
    let g = load_entry(&dir, entry).unwrap();
    let array = check_distance_regular(&g).unwrap().array.unwrap();
    assert_eq!(array.to_string(), "{3,2,1,1,1;1,1,1,2,3}");
    assert_eq!(encode(&g), encode(&dodecahedron()));

    let g = load_entry(&dir, manifest.entry("coxeter").unwrap()).unwrap();
    assert_eq!(check_distance_regular(&g).unwrap().array.unwrap().to_string(), "{3,2,2,1;1,1,1,2}");
    assert_eq!(g.order(), coxeter().order());
}

#[test]
fn unshipped_entries_report_absent() {
    let reports = verify_all(&data_dir()).unwrap();
    let absent: Vec<&str> = reports
        .iter()
        .filter(|r| matches!(r.status, EntryStatus::DataAbsent))
        .map(|r| r.name.as_str())
        .collect();
    assert!(absent.contains(&"perkel"));
    for r in &reports {
        assert!(!matches!(r.status, EntryStatus::WrongArray { .. } | EntryStatus::Error { .. }), "{}", r.name);
    }
}

/// No clique in a distance-regular graph exceeds `1 + k/|θ_min|`.
#[test]
fn cliques_respect_delsarte() {
    let graphs = [
        petersen(),
        icosahedron(),
        odd(4).unwrap(),
        doob_diam3(),
        hamming(3, 4).unwrap(),
        johnson(6, 3).unwrap(),
        halved_cube(6).unwrap(),
        sylvester(),
        second_subconstituent(&hoffman_singleton(), 0).unwrap(),
        gosset(),
    ];
    for g in &graphs {
        let array = check_distance_regular(g).unwrap().array.unwrap();
        let spec = spectrum(&array).unwrap();
        let bound = delsarte_max_clique(array.k(), spec.theta_min()).unwrap().max_clique as usize;
        let over = maximal_cliques_at_least(g, bound + 1, 50_000_000).expect("within budget");
        assert!(over.is_empty(), "{array}: clique above {bound}");
    }
}

/// Verified graphs with `θ_min ≥ -3` satisfy `k < 3(a_1 + 3) - 2c_2`.
#[test]
fn valency_bound_on_graphs() {
    for g in [odd(4).unwrap(), doob_diam3(), halved_cube(6).unwrap(), halved_cube(7).unwrap(), gosset(), sylvester()] {
        let a = check_distance_regular(&g).unwrap().array.unwrap();
        assert!(spectrum(&a).unwrap().theta_min().cmp_int(-3).is_ge());
        assert!(a.k() < 3 * (a.a(1) + 3) - 2 * a.c(2), "{a}");
    }
}

#[test]
fn c2_one_local_structure() {
    assert_eq!(
        c2one_structure_check(&odd(4).unwrap()).unwrap(),
        LocalStructure::CliqueUnion { a1: 0, t: 4 }
    );
    assert_eq!(c2one_structure_check(&sylvester()).unwrap(), LocalStructure::CliqueUnion { a1: 0, t: 5 });
    assert!(matches!(
        c2one_structure_check(&icosahedron()).unwrap(),
        LocalStructure::NotApplicable { .. }
    ));
}
