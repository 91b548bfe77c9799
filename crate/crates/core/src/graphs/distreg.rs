//! Distance-regularity by breadth-first distance partitions.

use serde::Serialize;

use super::{local_graph, Graph, GraphError};
use crate::array::IntersectionArray;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const UNREACHED: u32 = u32::MAX;

/// The counts seen at one pair disagree with those seen earlier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrViolation {
    pub x: usize,
    pub y: usize,
    /// Distance from `x` to `y`.
    pub i: usize,
    /// `(c, a, b)` seen at this pair.
    pub seen: (usize, usize, usize),
    /// `(c, a, b)` fixed by earlier pairs at distance `i`.
    pub expected: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrCheck {
    pub is_distance_regular: bool,
    pub array: Option<IntersectionArray>,
    pub violation: Option<DrViolation>,
}

fn bfs(g: &Graph, x: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.order()];
    let mut queue = std::collections::VecDeque::from([x]);
    dist[x] = 0;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[v] == UNREACHED {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs distances; `u32::MAX` marks unreachable pairs.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.order()).map(|x| bfs(g, x)).collect()
}

type Counts = Vec<(usize, usize, usize)>;

/// Per-distance `(c, a, b)` from `x`, or the first pair that disagrees with
/// the counts seen earlier in this partition.
fn counts_from(g: &Graph, x: usize) -> Result<Counts, DrViolation> {
    let dist = bfs(g, x);
    let mut counts: Vec<Option<(usize, usize, usize)>> = Vec::new();
    for y in 0..g.order() {
        let i = dist[y] as usize;
        let mut seen = (0, 0, 0);
        for z in g.neighbors(y) {
            match dist[z] as usize {
                d if d + 1 == i => seen.0 += 1,
                d if d == i => seen.1 += 1,
                _ => seen.2 += 1,
            }
        }
        if counts.len() <= i {
            counts.resize(i + 1, None);
        }
        match counts[i] {
            None => counts[i] = Some(seen),
            Some(expected) if expected != seen => return Err(DrViolation { x, y, i, seen, expected }),
            Some(_) => {}
        }
    }
    Ok(counts.into_iter().map(|c| c.expect("every distance up to the eccentricity occurs")).collect())
}

fn first_violation(g: &Graph, reference: &Counts) -> Option<DrViolation> {
    let per_source = |x: usize| match counts_from(g, x) {
        Err(v) => Some(v),
        Ok(c) if c == *reference => None,
        Ok(c) => {
            // Same partition sizes are not guaranteed, so report the first
            // distance where the two sources disagree.
            let i = (0..c.len().max(reference.len()))
                .find(|&i| c.get(i) != reference.get(i))
                .expect("counts differ");
            let y = bfs(g, x).iter().position(|&d| d as usize == i).unwrap_or(x);
            Some(DrViolation {
                x,
                y,
                i,
                seen: c.get(i).copied().unwrap_or_default(),
                expected: reference.get(i).copied().unwrap_or_default(),
            })
        }
    };
    #[cfg(feature = "parallel")]
    {
        let found: Vec<_> = (1..g.order()).into_par_iter().filter_map(per_source).collect();
        found.into_iter().min_by_key(|v| (v.x, v.y))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (1..g.order()).find_map(per_source)
    }
}

/// Checks that the `(c_i, a_i, b_i)` counts do not depend on the pair, and
/// extracts the intersection array when they do not.
pub fn check_distance_regular(g: &Graph) -> Result<DrCheck, GraphError> {
    if g.order() < 2 {
        return Err(GraphError::Trivial);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let fail = |v| DrCheck {
        is_distance_regular: false,
        array: None,
        violation: Some(v),
    };
    let reference = match counts_from(g, 0) {
        Ok(c) => c,
        Err(v) => return Ok(fail(v)),
    };
    if let Some(v) = first_violation(g, &reference) {
        return Ok(fail(v));
    }
    let d = reference.len() - 1;
    let b: Vec<i64> = reference[..d].iter().map(|t| t.2 as i64).collect();
    let c: Vec<i64> = reference[1..].iter().map(|t| t.0 as i64).collect();
    let array = IntersectionArray::new(b, c).map_err(|e| GraphError::Parameters(e.to_string()))?;
    Ok(DrCheck {
        is_distance_regular: true,
        array: Some(array),
        violation: None,
    })
}

/// Shape of the local graphs when `c2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum LocalStructure {
    /// Every local graph is `t` disjoint `(a1 + 1)`-cliques.
    CliqueUnion { a1: usize, t: usize },
    NotApplicable { reason: String },
    Violated { vertex: usize, reason: String },
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// For a distance-regular graph with `c2 = 1`, checks that every local graph
/// is a disjoint union of `(a1 + 1)`-cliques, so that `t = k / (a1 + 1)` is
/// an integer.
pub fn c2one_structure_check(g: &Graph) -> Result<LocalStructure, GraphError> {
    let check = check_distance_regular(g)?;
    let Some(ia) = check.array else {
        return Ok(LocalStructure::NotApplicable {
            reason: "graph is not distance-regular".into(),
        });
    };
    if ia.diameter() < 2 || ia.c(2) != 1 {
        return Ok(LocalStructure::NotApplicable {
            reason: format!("c2 != 1 for {ia}"),
        });
    }
    let (k, a1) = (ia.k() as usize, ia.a(1) as usize);
    for x in 0..g.order() {
        let local = local_graph(g, x)?;
        for comp in components(&local) {
            let is_clique = comp.iter().all(|&u| local.degree(u) == comp.len() - 1);
            if comp.len() != a1 + 1 || !is_clique {
                return Ok(LocalStructure::Violated {
                    vertex: x,
                    reason: format!("component of size {} is not an {}-clique", comp.len(), a1 + 1),
                });
            }
        }
    }
    Ok(LocalStructure::CliqueUnion { a1, t: k / (a1 + 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::construct::*;

    fn array_of(g: &Graph) -> String {
        check_distance_regular(g).unwrap().array.unwrap().to_string()
    }

    #[test]
    fn classic_arrays() {
        assert_eq!(array_of(&petersen()), "{3,2;1,1}");
        assert_eq!(array_of(&cycle(7)), "{2,1,1;1,1,1}");
        assert_eq!(array_of(&complete(5)), "{4;1}");
        assert_eq!(array_of(&hamming(3, 4).unwrap()), "{9,6,3;1,2,3}");
        assert_eq!(array_of(&johnson(6, 3).unwrap()), "{9,4,1;1,4,9}");
        assert_eq!(array_of(&dodecahedron()), "{3,2,1,1,1;1,1,1,2,3}");
        assert_eq!(array_of(&coxeter()), "{3,2,2,1;1,1,1,2}");
        assert_eq!(array_of(&hoffman_singleton()), "{7,6;1,1}");
        assert_eq!(array_of(&shrikhande()), "{6,3;1,2}");
    }

    #[test]
    fn petersen_minus_edge() {
        let mut g = petersen();
        let (u, v) = g.edges().next().unwrap();
        g.remove_edge(u, v);
        let r = check_distance_regular(&g).unwrap();
        assert!(!r.is_distance_regular);
        assert!(r.array.is_none());
        let viol = r.violation.unwrap();
        assert_ne!(viol.seen, viol.expected);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(check_distance_regular(&g), Err(GraphError::Disconnected));
        assert_eq!(check_distance_regular(&Graph::empty(1)), Err(GraphError::Trivial));
    }

    #[test]
    fn local_structures() {
        let o4 = odd(4).unwrap();
        assert_eq!(local_graph(&o4, 0).unwrap().edge_count(), 0);
        assert_eq!(c2one_structure_check(&o4).unwrap(), LocalStructure::CliqueUnion { a1: 0, t: 4 });
        let ico = icosahedron();
        let pent = local_graph(&ico, 3).unwrap();
        assert_eq!(array_of(&pent), "{2,1;1,1}");
        assert!(matches!(c2one_structure_check(&ico).unwrap(), LocalStructure::NotApplicable { .. }));
        let hs2 = second_subconstituent(&hoffman_singleton(), 0).unwrap();
        assert_eq!(c2one_structure_check(&hs2).unwrap(), LocalStructure::CliqueUnion { a1: 0, t: 6 });
    }

    #[test]
    fn doob_local_graph() {
        let doob = doob_diam3();
        for x in [0, 17, 63] {
            let local = local_graph(&doob, x).unwrap();
            assert_eq!(local.order(), 9);
            // a1 = 2: the six Shrikhande neighbours span a hexagon, the three
            // K4 neighbours a triangle, so 2|E| = 9 * 2.
            assert_eq!(local.edge_count(), 9);
            assert_eq!(local.regular_degree(), Some(2));
            assert_eq!(components(&local).len(), 2);
        }
    }
}
