//! Delsarte cliques and edge partitions for small graphs.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{Graph, GraphError};
use crate::array::IntersectionArray;
use crate::feasibility::{geometric_necessary, GeometricNecessary};
use crate::spectral::spectrum;

/// Largest graph accepted by [`is_geometric_small`].
pub const MAX_ORDER: usize = 200;
/// Default number of search nodes across clique enumeration and cover search.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GeometricVerdict {
    /// `cliques` Delsarte cliques partition the edge set.
    Geometric { clique_size: usize, cliques: usize },
    NonGeometric { reason: String },
    Inconclusive { reason: String },
}

struct Budget(u64);

impl Budget {
    fn spend(&mut self) -> bool {
        if self.0 == 0 {
            return false;
        }
        self.0 -= 1;
        true
    }
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    min: usize,
    budget: &mut Budget,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    if !budget.spend() {
        return false;
    }
    if p.is_clear() {
        if x.is_clear() && r.len() >= min {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return true;
    }
    if r.len() + p.count_ones(..) < min {
        return true;
    }
    let pivot = p
        .union(&x)
        .max_by_key(|&u| p.intersection(g.row(u)).count())
        .expect("p is nonempty");
    let mut candidates = p.clone();
    candidates.difference_with(g.row(pivot));
    for v in candidates.ones() {
        let mut p2 = p.clone();
        p2.intersect_with(g.row(v));
        let mut x2 = x.clone();
        x2.intersect_with(g.row(v));
        r.push(v);
        let ok = bron_kerbosch(g, r, p2, x2, min, budget, out);
        r.pop();
        if !ok {
            return false;
        }
        p.set(v, false);
        x.insert(v);
    }
    true
}

fn maximal_cliques_budgeted(g: &Graph, min: usize, budget: &mut Budget) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let mut out = Vec::new();
    bron_kerbosch(g, &mut Vec::new(), p, FixedBitSet::with_capacity(n), min, budget, &mut out).then_some(out)
}

/// Maximal cliques with at least `min` vertices, each sorted, or `None` when
/// the search exceeds `budget` nodes.
pub fn maximal_cliques_at_least(g: &Graph, min: usize, budget: u64) -> Option<Vec<Vec<usize>>> {
    maximal_cliques_budgeted(g, min, &mut Budget(budget))
}

/// Depth-first exact cover of the edges by the given cliques, always
/// branching on the uncovered edge with fewest usable cliques.
fn exact_edge_cover(g: &Graph, cliques: &[Vec<usize>], budget: &mut Budget) -> Option<Option<Vec<usize>>> {
    let edge_ids: HashMap<(usize, usize), usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let m = edge_ids.len();
    let clique_edges: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| {
            let mut es = Vec::new();
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    es.push(edge_ids[&(u.min(v), u.max(v))]);
                }
            }
            es
        })
        .collect();
    let mut containing = vec![Vec::new(); m];
    for (ci, es) in clique_edges.iter().enumerate() {
        for &e in es {
            containing[e].push(ci);
        }
    }

    struct State<'a> {
        clique_edges: &'a [Vec<usize>],
        containing: &'a [Vec<usize>],
        covered: FixedBitSet,
        chosen: Vec<usize>,
    }

    impl State<'_> {
        fn usable(&self, ci: usize) -> bool {
            self.clique_edges[ci].iter().all(|&e| !self.covered.contains(e))
        }

        fn solve(&mut self, budget: &mut Budget) -> Option<bool> {
            if !budget.spend() {
                return None;
            }
            let mut best: Option<(usize, usize)> = None;
            for e in 0..self.containing.len() {
                if self.covered.contains(e) {
                    continue;
                }
                let options = self.containing[e].iter().filter(|&&ci| self.usable(ci)).count();
                if best.is_none_or(|(_, n)| options < n) {
                    best = Some((e, options));
                    if options == 0 {
                        return Some(false);
                    }
                }
            }
            let Some((e, _)) = best else {
                return Some(true);
            };
            let options: Vec<usize> = self.containing[e].iter().copied().filter(|&ci| self.usable(ci)).collect();
            for ci in options {
                for &f in &self.clique_edges[ci] {
                    self.covered.insert(f);
                }
                self.chosen.push(ci);
                match self.solve(budget) {
                    Some(false) => {}
                    other => return other,
                }
                self.chosen.pop();
                for &f in &self.clique_edges[ci] {
                    self.covered.set(f, false);
                }
            }
            Some(false)
        }
    }

    let mut state = State {
        clique_edges: &clique_edges,
        containing: &containing,
        covered: FixedBitSet::with_capacity(m),
        chosen: Vec::new(),
    };
    let found = state.solve(budget)?;
    Some(found.then_some(state.chosen))
}

/// Decides whether the Delsarte cliques of `g` partition its edge set,
/// taking `θ_min` from the exact spectrum of `ia`.
pub fn is_geometric_small(g: &Graph, ia: &IntersectionArray) -> Result<GeometricVerdict, GraphError> {
    is_geometric_small_with_budget(g, ia, DEFAULT_BUDGET)
}

pub fn is_geometric_small_with_budget(
    g: &Graph,
    ia: &IntersectionArray,
    budget: u64,
) -> Result<GeometricVerdict, GraphError> {
    if g.order() > MAX_ORDER {
        return Err(GraphError::Parameters(format!("{} vertices exceeds {MAX_ORDER}", g.order())));
    }
    let spec = spectrum(ia).map_err(|e| GraphError::Parameters(e.to_string()))?;
    let theta = spec.theta_min();
    if let GeometricNecessary::CertifiedNonGeometric { reason } = geometric_necessary(ia.k(), theta) {
        return Ok(GeometricVerdict::NonGeometric { reason });
    }
    let t = theta.as_i64().expect("integral after the necessary check").abs();
    let size = (1 + ia.k() / t) as usize;
    let mut budget = Budget(budget);
    let exhausted = |stage: &str| GeometricVerdict::Inconclusive {
        reason: format!("search budget exceeded during {stage}"),
    };
    let Some(cliques) = maximal_cliques_budgeted(g, size, &mut budget) else {
        return Ok(exhausted("clique enumeration"));
    };
    if let Some(big) = cliques.iter().find(|c| c.len() > size) {
        return Ok(GeometricVerdict::Inconclusive {
            reason: format!("clique of size {} exceeds the Delsarte bound {size}; graph does not match {ia}", big.len()),
        });
    }
    let per_clique = size * (size - 1) / 2;
    if !g.edge_count().is_multiple_of(per_clique) {
        return Ok(GeometricVerdict::NonGeometric {
            reason: format!("{} edges is not a multiple of {per_clique}", g.edge_count()),
        });
    }
    Ok(match exact_edge_cover(g, &cliques, &mut budget) {
        None => exhausted("edge cover search"),
        Some(Some(chosen)) => GeometricVerdict::Geometric {
            clique_size: size,
            cliques: chosen.len(),
        },
        Some(None) => GeometricVerdict::NonGeometric {
            reason: format!("the {} Delsarte {size}-cliques do not partition the edges", cliques.len()),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::check_distance_regular;
    use crate::graphs::construct::*;

    fn verdict(g: &Graph) -> GeometricVerdict {
        let ia = check_distance_regular(g).unwrap().array.unwrap();
        is_geometric_small(g, &ia).unwrap()
    }

    #[test]
    fn hamming_is_geometric() {
        assert_eq!(
            verdict(&hamming(3, 4).unwrap()),
            GeometricVerdict::Geometric {
                clique_size: 4,
                cliques: 48
            }
        );
        assert!(matches!(verdict(&johnson(6, 3).unwrap()), GeometricVerdict::Geometric { cliques: 15, .. }));
    }

    #[test]
    fn doob_and_icosahedron_are_not() {
        assert!(matches!(verdict(&doob_diam3()), GeometricVerdict::NonGeometric { .. }));
        match verdict(&icosahedron()) {
            GeometricVerdict::NonGeometric { reason } => assert!(reason.contains("not an integer")),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn budget_exhaustion() {
        let g = hamming(3, 4).unwrap();
        let ia = check_distance_regular(&g).unwrap().array.unwrap();
        assert!(matches!(
            is_geometric_small_with_budget(&g, &ia, 10).unwrap(),
            GeometricVerdict::Inconclusive { .. }
        ));
    }

    #[test]
    fn maximal_cliques_of_small_graphs() {
        let k4 = complete(4);
        assert_eq!(maximal_cliques_at_least(&k4, 1, 100).unwrap(), vec![vec![0, 1, 2, 3]]);
        let c5 = cycle(5);
        assert_eq!(maximal_cliques_at_least(&c5, 2, 100).unwrap().len(), 5);
        assert!(maximal_cliques_at_least(&c5, 3, 100).unwrap().is_empty());
    }
}
