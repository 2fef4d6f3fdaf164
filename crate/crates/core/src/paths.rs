//! Lattice paths on the `[n] x [n]` grid whose path counts give the
//! single-column coefficients, their determinant, and non-intersecting tuples.
//!
//! The printed graph has vertical steps `(x, y) -> (x, y+1)`, horizontal steps
//! `(x, y) -> (x+1, y)` for `y != 1, x != y`, and diagonal steps
//! `(x, x) -> (x+1, x+1)` for `x > 1`. Its path counts are too large.
//!
//! The split graph gives each diagonal point two copies. The copy entered
//! horizontally may only go up; the other copy also steps horizontally, so
//! every turn keeps its height and two equal turns in a row are forbidden
//! exactly when the first one lands on the diagonal.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::linalg::determinant;
use crate::shapes::Partition;
use crate::tableaux::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphVariant {
    Printed,
    Split,
}

/// Which copy of a grid point a vertex is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Arrival {
    /// Off-diagonal points, and every point of the printed graph.
    Plain,
    /// Entered by a vertical or diagonal step, or a path starts here.
    Vertical,
    /// Entered by a horizontal step; may only continue upwards.
    Horizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub x: usize,
    pub y: usize,
    pub arrival: Arrival,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Vertical,
    Horizontal,
    Diagonal,
}

#[derive(Debug, Clone)]
pub struct PathGraph {
    n: usize,
    variant: GraphVariant,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    out: Vec<Vec<(usize, Step)>>,
}

impl PathGraph {
    pub fn new(n: usize, variant: GraphVariant) -> Self {
        let split = variant == GraphVariant::Split;
        let mut vertices = Vec::new();
        // ordered by x + y, which every edge increases
        for s in 2..=2 * n {
            for x in 1..=n {
                let Some(y) = s.checked_sub(x).filter(|y| (1..=n).contains(y)) else {
                    continue;
                };
                if split && x == y {
                    vertices.push(Vertex { x, y, arrival: Arrival::Vertical });
                    vertices.push(Vertex { x, y, arrival: Arrival::Horizontal });
                } else {
                    vertices.push(Vertex { x, y, arrival: Arrival::Plain });
                }
            }
        }
        let index: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut g = PathGraph { n, variant, vertices, index, out: Vec::new() };
        g.out = (0..g.vertices.len()).map(|i| g.successors(g.vertices[i])).collect();
        g
    }

    fn entered(&self, x: usize, y: usize, by: Step) -> usize {
        let arrival = match (self.variant, x == y, by) {
            (GraphVariant::Printed, _, _) | (_, false, _) => Arrival::Plain,
            (_, true, Step::Horizontal) => Arrival::Horizontal,
            (_, true, _) => Arrival::Vertical,
        };
        self.index[&Vertex { x, y, arrival }]
    }

    fn successors(&self, v: Vertex) -> Vec<(usize, Step)> {
        let Vertex { x, y, arrival } = v;
        // turning before climbing keeps path enumeration lexicographic in turn heights
        let mut out = Vec::new();
        let split = self.variant == GraphVariant::Split;
        if x < self.n && x == y && x > 1 && !split {
            out.push((self.entered(x + 1, x + 1, Step::Diagonal), Step::Diagonal));
        }
        let through_diagonal = split && x == y && arrival == Arrival::Vertical;
        if x < self.n && y != 1 && (x != y || through_diagonal) {
            out.push((self.entered(x + 1, y, Step::Horizontal), Step::Horizontal));
        }
        if y < self.n {
            out.push((self.entered(x, y + 1, Step::Vertical), Step::Vertical));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> GraphVariant {
        self.variant
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Step)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(move |(i, outs)| outs.iter().map(move |&(j, s)| (self.vertices[i], self.vertices[j], s)))
    }

    fn source(&self, a: usize) -> Option<usize> {
        if !(1..=self.n).contains(&a) {
            return None;
        }
        Some(self.entered(a, 1, Step::Vertical))
    }

    fn sinks(&self, b: usize) -> Vec<usize> {
        if !(1..=self.n).contains(&b) {
            return Vec::new();
        }
        [Arrival::Plain, Arrival::Vertical, Arrival::Horizontal]
            .into_iter()
            .filter_map(|arrival| self.index.get(&Vertex { x: b, y: self.n, arrival }).copied())
            .collect()
    }

    /// `P_{a,b}`: paths from `(a, 1)` to `(b, n)`; zero outside the grid.
    pub fn count_paths(&self, a: usize, b: usize) -> BigInt {
        let Some(src) = self.source(a) else {
            return BigInt::zero();
        };
        let mut ways = vec![BigInt::zero(); self.vertices.len()];
        ways[src] = BigInt::one();
        for i in src..self.vertices.len() {
            if ways[i].is_zero() {
                continue;
            }
            let w = ways[i].clone();
            for &(j, _) in &self.out[i] {
                ways[j] += &w;
            }
        }
        self.sinks(b).into_iter().map(|t| ways[t].clone()).sum()
    }

    /// Every path from `(a, 1)` to `(b, n)`, depth first.
    pub fn paths(&self, a: usize, b: usize) -> Vec<Path> {
        let mut found = Vec::new();
        let Some(src) = self.source(a) else {
            return found;
        };
        let sinks = self.sinks(b);
        let mut stack = vec![src];
        let mut steps = Vec::new();
        self.walk(&sinks, &mut stack, &mut steps, &mut found);
        found
    }

    fn walk(&self, sinks: &[usize], stack: &mut Vec<usize>, steps: &mut Vec<Step>, found: &mut Vec<Path>) {
        let at = *stack.last().unwrap();
        if sinks.contains(&at) {
            found.push(Path { vertices: stack.iter().map(|&i| self.vertices[i]).collect(), steps: steps.clone() });
            return;
        }
        for &(j, s) in &self.out[at] {
            stack.push(j);
            steps.push(s);
            self.walk(sinks, stack, steps, found);
            stack.pop();
            steps.pop();
        }
    }

    /// Graphviz rendering, one node per vertex copy.
    pub fn to_dot(&self) -> String {
        let name = |v: &Vertex| match v.arrival {
            Arrival::Plain => format!("\"{},{}\"", v.x, v.y),
            Arrival::Vertical => format!("\"{},{}v\"", v.x, v.y),
            Arrival::Horizontal => format!("\"{},{}h\"", v.x, v.y),
        };
        let mut s = String::new();
        let kind = match self.variant {
            GraphVariant::Printed => "printed",
            GraphVariant::Split => "split",
        };
        writeln!(s, "digraph {kind}_{} {{", self.n).unwrap();
        for v in &self.vertices {
            writeln!(s, "  {} [pos=\"{},{}!\"];", name(v), v.x, v.y).unwrap();
        }
        for (u, v, step) in self.edges() {
            let style = match step {
                Step::Vertical => "solid",
                Step::Horizontal => "dashed",
                Step::Diagonal => "bold",
            };
            writeln!(s, "  {} -> {} [style={style}];", name(&u), name(&v)).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Path {
    pub vertices: Vec<Vertex>,
    pub steps: Vec<Step>,
}

impl Path {
    /// Start vertex of each non-vertical step, in order.
    pub fn turns(&self) -> Vec<Vertex> {
        self.steps
            .iter()
            .zip(&self.vertices)
            .filter(|(s, _)| **s != Step::Vertical)
            .map(|(_, v)| *v)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PathTuple {
    pub paths: Vec<Path>,
}

impl PathTuple {
    /// Row `r` of the filling lists the heights at which path `r` turns.
    pub fn to_filling(&self) -> Tableau {
        let rows = self.paths.iter().map(|p| p.turns().into_iter().map(|v| v.y as u32).collect()).collect();
        Tableau::from_rows(rows).expect("path turn counts are weakly decreasing")
    }

    /// No grid point is shared, ignoring which copy a path passes through.
    pub fn is_geometrically_disjoint(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().flat_map(|p| &p.vertices).all(|v| seen.insert((v.x, v.y)))
    }

    /// The height criterion on consecutive paths: each turn of path `r` starts
    /// strictly above the matching turn of path `r - 1`, or at the same height
    /// when that turn of path `r - 1` starts on the diagonal.
    pub fn heights_noncrossing(&self) -> bool {
        self.paths.windows(2).all(|w| {
            let (upper, lower) = (w[0].turns(), w[1].turns());
            lower.iter().zip(&upper).all(|(l, u)| u.y < l.y || (u.y == l.y && u.x == u.y))
        })
    }
}

fn check_range(lam: &Partition, p: usize, n: usize) -> Result<(), Error> {
    if p < lam.len().max(1) || p + lam.part(0) > n {
        return Err(Error::Precondition(format!(
            "need max(1, l(lam)) <= p <= n - lam_1, got p={p} for lam={lam}, n={n}"
        )));
    }
    Ok(())
}

/// Endpoints of path `r` (1-based): `(p+1-r, 1)` to `(p+1+lam_r-r, n)`.
fn endpoints(lam: &Partition, p: usize, r: usize) -> (usize, usize) {
    (p + 1 - r, p + 1 + lam.part(r - 1) - r)
}

/// Weakly increasing `1 < c_1 <= ... <= c_k <= n` avoiding
/// `(c_i, c_{i+1}) = (p+i, p+i)`.
pub fn count_sequences(p: usize, k: usize, n: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    // ways[v] = sequences of the current length ending in v
    let mut ways = vec![BigInt::zero(); n + 1];
    for v in 2..=n {
        ways[v] = BigInt::one();
    }
    for i in 1..k {
        let mut next = vec![BigInt::zero(); n + 1];
        let mut prefix = BigInt::zero();
        for v in 2..=n {
            prefix += &ways[v];
            next[v] = prefix.clone();
            if v == p + i {
                next[v] -= &ways[v];
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// `det(P_{p+1-j, p+1+lam_i-i})`.
pub fn lgv_matrix(lam: &Partition, p: usize, n: usize, variant: GraphVariant) -> Result<Vec<Vec<BigInt>>, Error> {
    check_range(lam, p, n)?;
    let g = PathGraph::new(n, variant);
    let l = lam.len();
    Ok((1..=l)
        .map(|i| {
            let (_, b) = endpoints(lam, p, i);
            (1..=l).map(|j| g.count_paths(p + 1 - j, b)).collect()
        })
        .collect())
}

pub fn lgv_determinant(lam: &Partition, p: usize, n: usize, variant: GraphVariant) -> Result<BigInt, Error> {
    Ok(determinant(&lgv_matrix(lam, p, n, variant)?))
}

/// Vertex-disjoint tuples in the split graph, path `r` joining the `r`-th
/// source to the `r`-th sink.
pub fn nonintersecting_tuples(lam: &Partition, p: usize, n: usize) -> Result<Vec<PathTuple>, Error> {
    check_range(lam, p, n)?;
    let g = PathGraph::new(n, GraphVariant::Split);
    let candidates: Vec<Vec<Path>> = (1..=lam.len())
        .map(|r| {
            let (a, b) = endpoints(lam, p, r);
            g.paths(a, b)
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut used = HashSet::new();
    pick(&candidates, &mut chosen, &mut used, &mut out);
    Ok(out)
}

fn pick(candidates: &[Vec<Path>], chosen: &mut Vec<Path>, used: &mut HashSet<Vertex>, out: &mut Vec<PathTuple>) {
    let r = chosen.len();
    if r == candidates.len() {
        out.push(PathTuple { paths: chosen.clone() });
        return;
    }
    for path in &candidates[r] {
        if path.vertices.iter().any(|v| used.contains(v)) {
            continue;
        }
        used.extend(path.vertices.iter().copied());
        chosen.push(path.clone());
        pick(candidates, chosen, used, out);
        chosen.pop();
        for v in &path.vertices {
            used.remove(v);
        }
    }
}
