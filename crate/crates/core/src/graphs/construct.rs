//! Recipes for the small graphs in the classification. Each recipe is
//! checked against its intersection array in the tests rather than trusted.

use std::fmt;
use std::str::FromStr;

use super::{distance_matrix, Graph, GraphError};

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true).with_label(format!("K{n}"))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1)).with_label(format!("C{n}"))
}

fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

/// `k`-subsets of an `n`-set, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    if !(1..=8).contains(&n) || k == 0 || 2 * k > n {
        return Err(GraphError::Parameters(format!("kneser({n},{k}) needs 1 <= k, 2k <= n <= 8")));
    }
    let vs = subsets(n, k);
    Ok(Graph::from_fn(vs.len(), |i, j| vs[i] & vs[j] == 0).with_label(format!("Kneser({n},{k})")))
}

/// Odd graph `O_n = Kneser(2n - 1, n - 1)`.
pub fn odd(n: usize) -> Result<Graph, GraphError> {
    if !(2..=4).contains(&n) {
        return Err(GraphError::Parameters(format!("odd({n}) needs 2 <= n <= 4")));
    }
    Ok(kneser(2 * n - 1, n - 1)?.with_label(format!("O{n}")))
}

/// `k`-subsets of an `n`-set, adjacent when they meet in `k - 1` points.
pub fn johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    if !(2..=10).contains(&n) || k == 0 || k >= n {
        return Err(GraphError::Parameters(format!("johnson({n},{k}) needs 0 < k < n <= 10")));
    }
    let vs = subsets(n, k);
    Ok(Graph::from_fn(vs.len(), |i, j| (vs[i] & vs[j]).count_ones() as usize == k - 1)
        .with_label(format!("J({n},{k})")))
}

/// Even-weight binary words of length `n`, adjacent at Hamming distance 2.
pub fn halved_cube(n: usize) -> Result<Graph, GraphError> {
    if !(2..=8).contains(&n) {
        return Err(GraphError::Parameters(format!("halved_cube({n}) needs 2 <= n <= 8")));
    }
    let vs: Vec<u32> = (0u32..1 << n).filter(|w| w.count_ones() % 2 == 0).collect();
    Ok(Graph::from_fn(vs.len(), |i, j| (vs[i] ^ vs[j]).count_ones() == 2).with_label(format!("halved {n}-cube")))
}

/// Words of length `d` over `q` symbols, adjacent when they differ in one
/// coordinate.
pub fn hamming(d: usize, q: usize) -> Result<Graph, GraphError> {
    if d == 0 || q < 2 || q.checked_pow(d as u32).is_none_or(|n| n > 4096) {
        return Err(GraphError::Parameters(format!("hamming({d},{q}) needs d >= 1, q >= 2, q^d <= 4096")));
    }
    let n = q.pow(d as u32);
    let digits = |mut x: usize| {
        let mut out = Vec::with_capacity(d);
        for _ in 0..d {
            out.push(x % q);
            x /= q;
        }
        out
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    Ok(Graph::from_fn(n, |i, j| words[i].iter().zip(&words[j]).filter(|(a, b)| a != b).count() == 1)
        .with_label(format!("H({d},{q})")))
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.order(), h.order());
    Graph::from_fn(n * m, |x, y| {
        let (g1, h1) = (x / m, x % m);
        let (g2, h2) = (y / m, y % m);
        (g1 == g2 && h.has_edge(h1, h2)) || (h1 == h2 && g.has_edge(g1, g2))
    })
}

/// Cayley graph on `Z_4 × Z_4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
pub fn shrikhande() -> Graph {
    let diffs = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |u, v| {
        let d = ((v / 4 + 4 - u / 4) % 4, (v % 4 + 4 - u % 4) % 4);
        diffs.contains(&d)
    })
    .with_label("Shrikhande")
}

/// Doob graph of diameter 3: Shrikhande × K4.
pub fn doob_diam3() -> Graph {
    cartesian_product(&shrikhande(), &complete(4)).with_label("Doob (Shrikhande x K4)")
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters").with_label("Petersen")
}

/// Top, upper pentagon `u_i`, lower pentagon `l_i` and bottom; `l_i` is
/// joined to `u_i` and `u_{i+1}`.
pub fn icosahedron() -> Graph {
    let (top, bottom) = (0, 11);
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut g = Graph::empty(12);
    for i in 0..5 {
        g.add_edge(top, u(i));
        g.add_edge(bottom, l(i));
        g.add_edge(u(i), u(i + 1));
        g.add_edge(l(i), l(i + 1));
        g.add_edge(l(i), u(i));
        g.add_edge(l(i), u(i + 1));
    }
    g.with_label("icosahedron")
}

/// Outer pentagon `o_i`, middle 10-cycle `m_j`, inner pentagon `n_i`, with
/// `o_i ~ m_{2i}` and `n_i ~ m_{2i+1}`.
pub fn dodecahedron() -> Graph {
    let o = |i: usize| i % 5;
    let m = |j: usize| 5 + j % 10;
    let n = |i: usize| 15 + i % 5;
    let mut g = Graph::empty(20);
    for i in 0..5 {
        g.add_edge(o(i), o(i + 1));
        g.add_edge(n(i), n(i + 1));
        g.add_edge(o(i), m(2 * i));
        g.add_edge(n(i), m(2 * i + 1));
    }
    for j in 0..10 {
        g.add_edge(m(j), m(j + 1));
    }
    g.with_label("dodecahedron")
}

/// Kneser(7,3) with the seven lines `{i, i+1, i+3} mod 7` of a Fano plane
/// removed.
pub fn coxeter() -> Graph {
    let lines: Vec<u32> = (0..7).map(|i| (1 << i) | (1 << ((i + 1) % 7)) | (1 << ((i + 3) % 7))).collect();
    let vs: Vec<u32> = subsets(7, 3).into_iter().filter(|s| !lines.contains(s)).collect();
    Graph::from_fn(vs.len(), |i, j| vs[i] & vs[j] == 0).with_label("Coxeter")
}

/// Pentagons `P_h` (`j ~ j±1`) and pentagrams `Q_i` (`j ~ j±2`) for
/// `h, i, j ∈ Z_5`, with vertex `j` of `P_h` joined to vertex `hi + j` of
/// `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut g = Graph::empty(50);
    for a in 0..5 {
        for j in 0..5 {
            g.add_edge(p(a, j), p(a, j + 1));
            g.add_edge(q(a, j), q(a, j + 2));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                g.add_edge(p(h, j), q(i, h * i + j));
            }
        }
    }
    g.with_label("Hoffman-Singleton")
}

/// Vertices at distance 2 from `x`.
pub fn second_subconstituent(g: &Graph, x: usize) -> Result<Graph, GraphError> {
    if x >= g.order() {
        return Err(GraphError::VertexOutOfRange(x));
    }
    let dist = distance_matrix(g);
    let vs: Vec<usize> = (0..g.order()).filter(|&y| dist[x][y] == 2).collect();
    Ok(g.induced(&vs))
}

/// The 36 Hoffman–Singleton vertices at distance 2 from both ends of an edge.
pub fn sylvester() -> Graph {
    let hs = hoffman_singleton();
    let (x, y) = hs.edges().next().expect("nonempty");
    let vs: Vec<usize> = (0..hs.order())
        .filter(|&z| z != x && z != y && !hs.has_edge(x, z) && !hs.has_edge(y, z))
        .collect();
    hs.induced(&vs).with_label("Sylvester")
}

/// Two copies of the 28 edges of `K_8`; within a copy two edges are
/// adjacent when they meet, across copies when they are disjoint.
pub fn gosset() -> Graph {
    let pairs = subsets(8, 2);
    Graph::from_fn(56, |u, v| {
        let (a, b) = (pairs[u % 28], pairs[v % 28]);
        if u / 28 == v / 28 {
            (a & b).count_ones() == 1
        } else {
            a & b == 0
        }
    })
    .with_label("Gosset")
}

/// Named constructions accepted on the command line as `name` or
/// `name:p1,p2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Kneser(usize, usize),
    Odd(usize),
    Johnson(usize, usize),
    HalvedCube(usize),
    Hamming(usize, usize),
    Complete(usize),
    Cycle(usize),
    Shrikhande,
    DoobDiam3,
    Petersen,
    Icosahedron,
    Dodecahedron,
    Coxeter,
    HoffmanSingleton,
    /// Second subconstituent of the Hoffman–Singleton graph.
    HsSecondSubconstituent,
    Sylvester,
    Gosset,
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        use GraphSpec::*;
        let label = self.to_string();
        let g = match *self {
            Kneser(n, k) => kneser(n, k)?,
            Odd(n) => odd(n)?,
            Johnson(n, k) => johnson(n, k)?,
            HalvedCube(n) => halved_cube(n)?,
            Hamming(d, q) => hamming(d, q)?,
            Complete(n) if (1..=4096).contains(&n) => complete(n),
            Cycle(n) if (3..=4096).contains(&n) => cycle(n),
            Complete(n) | Cycle(n) => return Err(GraphError::Parameters(format!("{label}: n = {n}"))),
            Shrikhande => shrikhande(),
            DoobDiam3 => doob_diam3(),
            Petersen => petersen(),
            Icosahedron => icosahedron(),
            Dodecahedron => dodecahedron(),
            Coxeter => coxeter(),
            HoffmanSingleton => hoffman_singleton(),
            HsSecondSubconstituent => second_subconstituent(&hoffman_singleton(), 0)?,
            Sylvester => sylvester(),
            Gosset => gosset(),
        };
        Ok(g.with_label(label))
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphSpec::*;
        match self {
            Kneser(n, k) => write!(f, "kneser:{n},{k}"),
            Odd(n) => write!(f, "odd:{n}"),
            Johnson(n, k) => write!(f, "johnson:{n},{k}"),
            HalvedCube(n) => write!(f, "halved_cube:{n}"),
            Hamming(d, q) => write!(f, "hamming:{d},{q}"),
            Complete(n) => write!(f, "complete:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Shrikhande => write!(f, "shrikhande"),
            DoobDiam3 => write!(f, "doob_diam3"),
            Petersen => write!(f, "petersen"),
            Icosahedron => write!(f, "icosahedron"),
            Dodecahedron => write!(f, "dodecahedron"),
            Coxeter => write!(f, "coxeter"),
            HoffmanSingleton => write!(f, "hoffman_singleton"),
            HsSecondSubconstituent => write!(f, "hs_second_subconstituent"),
            Sylvester => write!(f, "sylvester"),
            Gosset => write!(f, "gosset"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use GraphSpec::*;
        let s = s.trim();
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let bad = || GraphError::UnknownConstruction(s.to_string());
        let nums: Vec<usize> = match params {
            Some(p) => p
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?,
            None => Vec::new(),
        };
        let spec = match (name.replace('-', "_").as_str(), nums.as_slice()) {
            ("kneser", [n, k]) => Kneser(*n, *k),
            ("odd", [n]) => Odd(*n),
            ("johnson", [n, k]) => Johnson(*n, *k),
            ("halved_cube", [n]) => HalvedCube(*n),
            ("hamming", [d, q]) => Hamming(*d, *q),
            ("complete", [n]) => Complete(*n),
            ("cycle", [n]) => Cycle(*n),
            ("shrikhande", []) => Shrikhande,
            ("doob_diam3" | "doob", []) => DoobDiam3,
            ("petersen", []) => Petersen,
            ("icosahedron", []) => Icosahedron,
            ("dodecahedron", []) => Dodecahedron,
            ("coxeter", []) => Coxeter,
            ("hoffman_singleton", []) => HoffmanSingleton,
            ("hs_second_subconstituent" | "second_subconstituent", []) => HsSecondSubconstituent,
            ("sylvester", []) => Sylvester,
            ("gosset" | "taylor_double_t8", []) => Gosset,
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_valencies() {
        let cases: Vec<(Graph, usize, usize)> = vec![
            (odd(4).unwrap(), 35, 4),
            (halved_cube(6).unwrap(), 32, 15),
            (halved_cube(7).unwrap(), 64, 21),
            (hamming(3, 4).unwrap(), 64, 9),
            (doob_diam3(), 64, 9),
            (icosahedron(), 12, 5),
            (dodecahedron(), 20, 3),
            (coxeter(), 28, 3),
            (hoffman_singleton(), 50, 7),
            (sylvester(), 36, 5),
            (gosset(), 56, 27),
            (johnson(6, 3).unwrap(), 20, 9),
        ];
        for (g, n, k) in cases {
            assert_eq!(g.order(), n, "{:?}", g.label());
            assert_eq!(g.regular_degree(), Some(k), "{:?}", g.label());
        }
    }

    #[test]
    fn parameter_ranges() {
        assert!(kneser(9, 3).is_err());
        assert!(kneser(5, 3).is_err());
        assert!(halved_cube(9).is_err());
        assert!(hamming(7, 4).is_err());
        assert!(odd(5).is_err());
    }

    #[test]
    fn spec_parsing() {
        for text in ["halved_cube:6", "kneser:7,3", "odd:4", "hamming:3,4", "doob_diam3", "gosset", "sylvester"] {
            let spec: GraphSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("taylor_double_t8".parse::<GraphSpec>().unwrap(), GraphSpec::Gosset);
        assert!("halved_cube".parse::<GraphSpec>().is_err());
        assert!("cube:x".parse::<GraphSpec>().is_err());
        assert!(GraphSpec::Complete(0).build().is_err());
    }
}
