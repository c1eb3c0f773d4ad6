//! Coefficient-free cluster-algebra engine: skew-symmetrizable matrix
//! mutation, seed mutation through the binomial exchange relation, and
//! breadth-first enumeration of the exchange graph for finite type.
//!
//! Seeds are identified up to simultaneous permutation of cluster entries and
//! matrix rows/columns, so exchange-graph nodes are unlabeled seeds. Every
//! cluster entry is stored fully expanded in the initial variables; the
//! exchange relation then needs one exact Laurent division per mutation.

use crate::laurent::{LaurentError, LaurentPoly, PolyJson};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

/// Default node budget for exchange-graph enumeration.
pub const DEFAULT_NODE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("invalid exchange matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("mutation direction {dir} out of range 1..={dim}")]
    DirectionOutOfRange { dir: usize, dim: usize },
    #[error("exchange graph did not close within {limit} nodes")]
    NodeLimitExceeded { limit: usize },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Square integer matrix that is sign-skew-symmetric with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let d = entries.len();
        if entries.iter().any(|row| row.len() != d) {
            return Err(ClusterError::InvalidMatrix("matrix is not square".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row[i] != 0 {
                return Err(ClusterError::InvalidMatrix(format!(
                    "nonzero diagonal entry at ({},{})",
                    i + 1,
                    i + 1
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                let b = entries[j][i];
                if a * b > 0 || ((a == 0) != (b == 0)) {
                    return Err(ClusterError::InvalidMatrix(format!(
                        "not sign-skew-symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(ExchangeMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Entry `a_ij` with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Matrix mutation in direction `k` (1-based): entries in row or column
    /// `k` flip sign, the rest gain `(|a_ik| a_kj + a_ik |a_kj|) / 2`.
    /// An involution: mutating twice in the same direction restores the input.
    pub fn mutate(&self, k: usize) -> Result<ExchangeMatrix, ClusterError> {
        let d = self.dim();
        if k < 1 || k > d {
            return Err(ClusterError::DirectionOutOfRange { dir: k, dim: d });
        }
        let k = k - 1;
        let a = &self.entries;
        let mut out = vec![vec![0i64; d]; d];
        for i in 0..d {
            for j in 0..d {
                out[i][j] = if i == k || j == k {
                    -a[i][j]
                } else {
                    a[i][j] + (a[i][k].abs() * a[k][j] + a[i][k] * a[k][j].abs()) / 2
                };
            }
        }
        Ok(ExchangeMatrix { entries: out })
    }

    /// Cartan companion: 2 on the diagonal, `-|a_ij|` off it.
    pub fn cartan_part(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { 2 } else { -self.entries[i][j].abs() })
                    .collect()
            })
            .collect()
    }

    /// A positive integer diagonal `D` with `D * A` skew-symmetric, when one
    /// exists. Weights propagate along the nonzero pattern as
    /// `d_j = d_i * |a_ij| / |a_ji|`; inconsistent cycles return `None`.
    pub fn skew_symmetrizer(&self) -> Option<Vec<i64>> {
        let d = self.dim();
        if d == 0 {
            return Some(vec![]);
        }
        let mut num = vec![0i64; d];
        let mut den = vec![0i64; d];
        for start in 0..d {
            if den[start] != 0 {
                continue;
            }
            num[start] = 1;
            den[start] = 1;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..d {
                    if self.entries[i][j] == 0 {
                        continue;
                    }
                    let p = num[i] * self.entries[i][j].abs();
                    let q = den[i] * self.entries[j][i].abs();
                    let g = gcd(p, q);
                    let (p, q) = (p / g, q / g);
                    if den[j] == 0 {
                        num[j] = p;
                        den[j] = q;
                        stack.push(j);
                    } else if num[j] * q != p * den[j] {
                        return None;
                    }
                }
            }
        }
        let l = den.iter().fold(1i64, |acc, &x| lcm(acc, x));
        let mut weights: Vec<i64> = (0..d).map(|i| num[i] * (l / den[i])).collect();
        let g = weights.iter().fold(0i64, |acc, &x| gcd(acc, x));
        if g > 1 {
            for w in &mut weights {
                *w /= g;
            }
        }
        for i in 0..d {
            for j in 0..d {
                if weights[i] * self.entries[i][j] != -weights[j] * self.entries[j][i] {
                    return None;
                }
            }
        }
        Some(weights)
    }

    pub fn is_skew_symmetrizable(&self) -> bool {
        self.skew_symmetrizer().is_some()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Cartan matrix of type `C_d` in the convention used throughout: all
/// superdiagonal entries `-1`, subdiagonal `-2` at position (2,1) and `-1`
/// below the remaining rows.
pub fn type_c_cartan(d: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; d]; d];
    for i in 0..d {
        m[i][i] = 2;
        if i + 1 < d {
            m[i][i + 1] = -1;
            m[i + 1][i] = if i == 0 { -2 } else { -1 };
        }
    }
    m
}

/// A cluster (expanded in the initial variables) with its exchange matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    cluster: Vec<LaurentPoly>,
    matrix: ExchangeMatrix,
}

impl Seed {
    pub fn new(cluster: Vec<LaurentPoly>, matrix: ExchangeMatrix) -> Result<Self, ClusterError> {
        let d = matrix.dim();
        if cluster.len() != d {
            return Err(ClusterError::InvalidSeed(format!(
                "cluster has {} entries for a {}x{} matrix",
                cluster.len(),
                d,
                d
            )));
        }
        for (i, p) in cluster.iter().enumerate() {
            if p.is_zero() {
                return Err(ClusterError::InvalidSeed(format!(
                    "cluster entry {} is zero",
                    i + 1
                )));
            }
            if p.var_count() != d {
                return Err(ClusterError::InvalidSeed(format!(
                    "cluster entry {} has {} variables, expected {}",
                    i + 1,
                    p.var_count(),
                    d
                )));
            }
        }
        Ok(Seed { cluster, matrix })
    }

    /// The seed `(x_1, ..., x_d)` with the given matrix.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let d = matrix.dim();
        let cluster = (1..=d).map(|i| LaurentPoly::var(d, i)).collect();
        Seed { cluster, matrix }
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Seed mutation in direction `k` (1-based). The replaced entry is
    /// `(prod_{a_ik > 0} x_i^{a_ik} + prod_{a_ik < 0} x_i^{-a_ik}) / x_k`,
    /// with empty products equal to 1. The division is exact whenever the
    /// seed is mutation-equivalent to a genuine cluster algebra seed; a
    /// `NotDivisible` error therefore signals a corrupted seed.
    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        let d = self.dim();
        if k < 1 || k > d {
            return Err(ClusterError::DirectionOutOfRange { dir: k, dim: d });
        }
        let k0 = k - 1;
        let mut plus = LaurentPoly::one(d);
        let mut minus = LaurentPoly::one(d);
        for i in 0..d {
            let a = self.matrix.entry(i, k0);
            if a > 0 {
                plus = plus.mul(&self.cluster[i].pow(a as u32));
            } else if a < 0 {
                minus = minus.mul(&self.cluster[i].pow((-a) as u32));
            }
        }
        let new_entry = plus.add(&minus).exact_div(&self.cluster[k0])?;
        let mut cluster = self.cluster.clone();
        cluster[k0] = new_entry;
        Ok(Seed {
            cluster,
            matrix: self.matrix.mutate(k)?,
        })
    }

    /// Canonical representative of the unlabeled seed: cluster entries sorted
    /// by the polynomial total order, the same permutation applied to matrix
    /// rows and columns, ties broken by lexicographically minimal matrix.
    pub fn canonicalize(&self) -> Seed {
        let d = self.dim();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&i, &j| self.cluster[i].cmp(&self.cluster[j]));

        let mut best: Option<(Vec<Vec<i64>>, Vec<usize>)> = None;
        for perm in tie_permutations(&order, &self.cluster) {
            let m = permute_matrix(self.matrix.rows(), &perm);
            if best.as_ref().is_none_or(|(bm, _)| m < *bm) {
                best = Some((m, perm));
            }
        }
        let (entries, perm) = best.expect("at least one permutation");
        let cluster = perm.iter().map(|&i| self.cluster[i].clone()).collect();
        Seed {
            cluster,
            matrix: ExchangeMatrix { entries },
        }
    }
}

fn permute_matrix(a: &[Vec<i64>], perm: &[usize]) -> Vec<Vec<i64>> {
    let d = perm.len();
    (0..d)
        .map(|i| (0..d).map(|j| a[perm[i]][perm[j]]).collect())
        .collect()
}

/// All permutations refining `order` that only shuffle positions whose
/// cluster entries are equal. Clusters with distinct entries (the generic
/// case) yield exactly one.
fn tie_permutations(order: &[usize], cluster: &[LaurentPoly]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &i in order {
        match blocks.last_mut() {
            Some(block) if cluster[block[0]] == cluster[i] => block.push(i),
            _ => blocks.push(vec![i]),
        }
    }
    let mut result = vec![Vec::new()];
    for block in blocks {
        let perms = permutations(&block);
        let mut next = Vec::with_capacity(result.len() * perms.len());
        for prefix in &result {
            for p in &perms {
                let mut v = prefix.clone();
                v.extend_from_slice(p);
                next.push(v);
            }
        }
        result = next;
    }
    result
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Directed mutation edge between canonical nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub dir: usize,
    pub to: usize,
}

/// Exchange graph: canonical seeds, all directed mutation edges, and the set
/// of cluster variables encountered.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    nodes: Vec<Seed>,
    edges: Vec<GraphEdge>,
    variables: Vec<LaurentPoly>,
}

#[derive(Serialize)]
struct GraphNodeJson {
    id: usize,
    cluster: Vec<PolyJson>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct GraphJson {
    nodes: Vec<GraphNodeJson>,
    edges: Vec<GraphEdge>,
    variables: Vec<PolyJson>,
}

impl ExchangeGraph {
    pub fn nodes(&self) -> &[Seed] {
        &self.nodes
    }

    /// All directed edges, one per (node, direction).
    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// Cluster variables across all nodes, sorted canonically.
    pub fn variables(&self) -> &[LaurentPoly] {
        &self.variables
    }

    /// Mutation edges with each unordered pair reported once (`from <= to`,
    /// direction taken on the `from` side).
    pub fn undirected_edges(&self) -> Vec<GraphEdge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| e.from < e.to)
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        let json = GraphJson {
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, s)| GraphNodeJson {
                    id,
                    cluster: s.cluster().iter().map(|p| p.to_json()).collect(),
                    matrix: s.matrix().rows().to_vec(),
                })
                .collect(),
            edges: self.undirected_edges(),
            variables: self.variables.iter().map(|p| p.to_json()).collect(),
        };
        serde_json::to_string_pretty(&json).expect("graph serialization cannot fail")
    }

    /// DOT rendering: nodes labeled by id, one edge per unordered pair
    /// labeled by mutation direction.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph exchange {\n");
        for id in 0..self.nodes.len() {
            let _ = writeln!(out, "  {id} [label=\"{id}\"];");
        }
        for e in self.undirected_edges() {
            let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.from, e.to, e.dir);
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure of a seed under all mutations, with nodes identified
/// up to simultaneous permutation. Fails with `NodeLimitExceeded` when the
/// graph does not close within `node_limit` nodes (non-finite type, or a
/// limit chosen too small).
pub fn enumerate_exchange_graph(
    start: &Seed,
    node_limit: usize,
) -> Result<ExchangeGraph, ClusterError> {
    let d = start.dim();
    let root = start.canonicalize();
    let mut ids: HashMap<Seed, usize> = HashMap::new();
    let mut nodes: Vec<Seed> = Vec::new();
    let mut edges: Vec<GraphEdge> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    ids.insert(root.clone(), 0);
    nodes.push(root);
    queue.push_back(0);

    while let Some(u) = queue.pop_front() {
        for k in 1..=d {
            let neighbor = nodes[u].mutate(k)?.canonicalize();
            let v = match ids.get(&neighbor) {
                Some(&v) => v,
                None => {
                    if nodes.len() >= node_limit {
                        return Err(ClusterError::NodeLimitExceeded { limit: node_limit });
                    }
                    let v = nodes.len();
                    ids.insert(neighbor.clone(), v);
                    nodes.push(neighbor);
                    queue.push_back(v);
                    v
                }
            };
            edges.push(GraphEdge {
                from: u,
                dir: k,
                to: v,
            });
        }
    }

    let variables: BTreeSet<LaurentPoly> = nodes
        .iter()
        .flat_map(|s| s.cluster().iter().cloned())
        .collect();
    Ok(ExchangeGraph {
        nodes,
        edges,
        variables: variables.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(entries: Vec<Vec<i64>>) -> ExchangeMatrix {
        ExchangeMatrix::new(entries).unwrap()
    }

    fn c2_matrix() -> ExchangeMatrix {
        matrix(vec![vec![0, 1], vec![-2, 0]])
    }

    #[test]
    fn test_mutate_matrix_rank2() {
        let m = c2_matrix().mutate(1).unwrap();
        assert_eq!(m.rows(), &[vec![0, -1], vec![2, 0]]);
    }

    #[test]
    fn test_mutate_matrix_rank3_hand_applied() {
        let a = matrix(vec![vec![0, 1, 0], vec![-2, 0, 1], vec![0, -1, 0]]);
        let m = a.mutate(2).unwrap();
        assert_eq!(m.rows(), &[vec![0, -1, 1], vec![2, 0, -1], vec![-2, 1, 0]]);
    }

    #[test]
    fn test_mutate_matrix_involution() {
        let a = matrix(vec![vec![0, 1, 0], vec![-2, 0, 1], vec![0, -1, 0]]);
        for k in 1..=3 {
            assert_eq!(a.mutate(k).unwrap().mutate(k).unwrap(), a);
        }
    }

    #[test]
    fn test_mutation_direction_out_of_range() {
        assert!(matches!(
            c2_matrix().mutate(3),
            Err(ClusterError::DirectionOutOfRange { dir: 3, dim: 2 })
        ));
    }

    #[test]
    fn test_cartan_part() {
        assert_eq!(c2_matrix().cartan_part(), vec![vec![2, -1], vec![-2, 2]]);
        let zero = matrix(vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(zero.cartan_part(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(c2_matrix().cartan_part(), type_c_cartan(2));
    }

    #[test]
    fn test_rejects_non_sign_skew_symmetric() {
        assert!(ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![0, 1], vec![0, 0]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![1, 1], vec![-1, 0]]).is_err());
    }

    #[test]
    fn test_skew_symmetrizer() {
        let d = c2_matrix().skew_symmetrizer().unwrap();
        // d1 * 1 = -d2 * (-2) => d1 = 2 d2
        assert_eq!(d, vec![2, 1]);
        let preserved = c2_matrix().mutate(1).unwrap();
        assert!(preserved.is_skew_symmetrizable());
    }

    #[test]
    fn test_mutate_seed_type_c2() {
        let seed = Seed::initial(c2_matrix());
        let s2 = seed.mutate(2).unwrap();
        assert_eq!(
            s2.cluster()[1],
            LaurentPoly::parse("x1*x2^-1 + x2^-1", 2).unwrap()
        );
        let s1 = seed.mutate(1).unwrap();
        assert_eq!(
            s1.cluster()[0],
            LaurentPoly::parse("x1^-1*x2^2 + x1^-1", 2).unwrap()
        );
        for k in 1..=2 {
            assert_eq!(seed.mutate(k).unwrap().mutate(k).unwrap(), seed);
        }
    }

    #[test]
    fn test_mutate_seed_rank1() {
        let seed = Seed::initial(matrix(vec![vec![0]]));
        let s = seed.mutate(1).unwrap();
        assert_eq!(s.cluster()[0], LaurentPoly::parse("2*x1^-1", 1).unwrap());
    }

    #[test]
    fn test_exchange_graph_rank1() {
        let seed = Seed::initial(matrix(vec![vec![0]]));
        let g = enumerate_exchange_graph(&seed, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(g.nodes().len(), 2);
        assert_eq!(g.variables().len(), 2);
        let texts: Vec<String> = g.variables().iter().map(|p| p.canonical_text()).collect();
        assert!(texts.contains(&"x1".to_string()));
        assert!(texts.contains(&"2*x1^-1".to_string()));
        assert_eq!(g.undirected_edges().len(), 1);
    }

    #[test]
    fn test_exchange_graph_type_c2() {
        let seed = Seed::initial(c2_matrix());
        let g = enumerate_exchange_graph(&seed, DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(g.nodes().len(), 6);
        assert_eq!(g.variables().len(), 6);
        assert_eq!(g.undirected_edges().len(), 6);
        // 2-regular: every node meets exactly two undirected edges
        for id in 0..6 {
            let deg = g
                .undirected_edges()
                .iter()
                .filter(|e| e.from == id || e.to == id)
                .count();
            assert_eq!(deg, 2);
        }
    }

    #[test]
    fn test_exchange_graph_type_c3() {
        let a = matrix(vec![vec![0, 1, 0], vec![-2, 0, 1], vec![0, -1, 0]]);
        let g = enumerate_exchange_graph(&Seed::initial(a), DEFAULT_NODE_LIMIT).unwrap();
        assert_eq!(g.nodes().len(), 20);
        assert_eq!(g.variables().len(), 12);
        assert_eq!(g.undirected_edges().len(), 30);
    }

    #[test]
    fn test_node_limit_exceeded() {
        let seed = Seed::initial(c2_matrix());
        assert!(matches!(
            enumerate_exchange_graph(&seed, 3),
            Err(ClusterError::NodeLimitExceeded { limit: 3 })
        ));
    }

    #[test]
    fn test_edge_involution() {
        let seed = Seed::initial(c2_matrix());
        let g = enumerate_exchange_graph(&seed, DEFAULT_NODE_LIMIT).unwrap();
        for e in g.edges() {
            let back = g
                .edges()
                .iter()
                .filter(|f| f.from == e.to && f.to == e.from)
                .count();
            assert!(back >= 1, "edge {e:?} has no reverse");
        }
    }

    #[test]
    fn test_graph_exports_are_deterministic() {
        let seed = Seed::initial(c2_matrix());
        let g1 = enumerate_exchange_graph(&seed, DEFAULT_NODE_LIMIT).unwrap();
        let g2 = enumerate_exchange_graph(&seed.mutate(1).unwrap(), DEFAULT_NODE_LIMIT).unwrap();
        // same underlying graph regardless of which seed starts the walk
        assert_eq!(g1.variables(), g2.variables());
        assert_eq!(g1.to_dot(), {
            let again = enumerate_exchange_graph(&seed, DEFAULT_NODE_LIMIT).unwrap();
            again.to_dot()
        });
        assert!(g1.to_dot().starts_with("graph exchange {"));
        let json = g1.to_json_string();
        assert!(json.contains("\"variables\""));
    }

    #[test]
    fn test_canonicalize_is_stable_under_relabeling() {
        let seed = Seed::initial(c2_matrix());
        let swapped = Seed::new(
            vec![seed.cluster()[1].clone(), seed.cluster()[0].clone()],
            ExchangeMatrix::new(vec![vec![0, -2], vec![1, 0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(seed.canonicalize(), swapped.canonicalize());
    }

    #[test]
    fn test_canonicalize_breaks_ties_by_matrix() {
        // equal cluster entries force the matrix-lexicographic tie-break
        let x1 = LaurentPoly::var(2, 1);
        let a = Seed::new(vec![x1.clone(), x1.clone()], c2_matrix()).unwrap();
        let b = Seed::new(
            vec![x1.clone(), x1],
            ExchangeMatrix::new(vec![vec![0, -2], vec![1, 0]]).unwrap(),
        )
        .unwrap();
        let ca = a.canonicalize();
        assert_eq!(ca, b.canonicalize());
        assert_eq!(ca.matrix().rows(), &[vec![0, -2], vec![1, 0]]);
    }
}
