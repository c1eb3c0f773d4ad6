//! Cross-check harness: replays the mutation relation, the bijection with
//! cluster variables, the cluster-structure condition on exchange matrices,
//! and positivity/Laurentness over the exchange graph, exhaustively at a
//! given rank. Failures are collected with concrete counterexamples instead
//! of aborting, capped at [`MAX_COUNTEREXAMPLES`] per check.

use crate::character::{x_closed_form, x_of_rigid_sum};
use crate::cluster::{enumerate_exchange_graph, type_c_cartan, Seed, DEFAULT_NODE_LIMIT};
use crate::laurent::LaurentPoly;
use crate::tube::{
    binomial, enumerate_maximal_rigid, exchange_matrix, exchange_matrix_ordered,
    exchange_triangles, rigid_indecomposables, MaximalRigid,
};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

pub const MAX_COUNTEREXAMPLES: usize = 100;

/// One named check with its outcome and a human-readable detail line
/// (counterexamples when failing, a summary when passing).
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub rank: usize,
    pub checks: Vec<CheckOutcome>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Concatenates several reports (same rank) into one.
    pub fn merge(rank: usize, reports: Vec<VerificationReport>) -> VerificationReport {
        let elapsed_ms = reports.iter().map(|r| r.elapsed_ms).sum();
        let checks = reports.into_iter().flat_map(|r| r.checks).collect();
        VerificationReport {
            rank,
            checks,
            elapsed_ms,
        }
    }
}

struct Collector {
    examples: Vec<String>,
    total_failures: usize,
}

impl Collector {
    fn new() -> Self {
        Collector {
            examples: Vec::new(),
            total_failures: 0,
        }
    }

    fn record(&mut self, description: String) {
        self.total_failures += 1;
        if self.examples.len() < MAX_COUNTEREXAMPLES {
            self.examples.push(description);
        }
    }

    fn outcome(self, name: &str, pass_detail: String) -> CheckOutcome {
        if self.total_failures == 0 {
            CheckOutcome {
                name: name.to_string(),
                pass: true,
                detail: pass_detail,
            }
        } else {
            CheckOutcome {
                name: name.to_string(),
                pass: false,
                detail: format!(
                    "{} failure(s); first: {}",
                    self.total_failures,
                    self.examples.join(" | ")
                ),
            }
        }
    }
}

/// The multiplication identity `X_M X_{M*} = X_E + X_{E'}` over every
/// maximal rigid object and every summand, as exact polynomial identities.
/// Also reports how many exchange pairs of each Ext dimension were hit; both
/// kinds must occur for rank >= 3.
pub fn check_mutation_relations(n: usize) -> VerificationReport {
    assert!(n >= 2);
    let start = Instant::now();
    let mut identity = Collector::new();
    let mut pairs = 0usize;
    let mut dim1 = 0usize;
    let mut dim2 = 0usize;
    for r in enumerate_maximal_rigid(n).expect("rank validated") {
        for m in r.summands() {
            match exchange_triangles(&r, m) {
                Ok(tri) => {
                    pairs += 1;
                    match tri.ext_dim {
                        1 => dim1 += 1,
                        2 => dim2 += 1,
                        other => identity.record(format!("{r}, {m}: ext dim {other}")),
                    }
                    let lhs = x_closed_form(m)
                        .unwrap()
                        .mul(&x_closed_form(&tri.partner).unwrap());
                    let rhs = x_of_rigid_sum(&tri.e)
                        .unwrap()
                        .add(&x_of_rigid_sum(&tri.e_prime).unwrap());
                    if lhs != rhs {
                        identity.record(format!(
                            "{r}, M={m}, M*={}: lhs {} != rhs {}",
                            tri.partner,
                            lhs.canonical_text(),
                            rhs.canonical_text()
                        ));
                    }
                }
                Err(e) => identity.record(format!("{r}, {m}: {e}")),
            }
        }
    }
    let coverage = CheckOutcome {
        name: "ext-dimension-coverage".into(),
        pass: n < 3 || (dim1 > 0 && dim2 > 0),
        detail: format!("exchange pairs with dim Ext = 1: {dim1}, dim Ext = 2: {dim2}"),
    };
    let checks = vec![
        identity.outcome(
            "mutation-identity",
            format!("{pairs} exchange pairs verified as exact polynomial identities"),
        ),
        coverage,
    ];
    VerificationReport {
        rank: n,
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// The character map against the exchange graph: equal variable sets, the
/// expected cardinalities, a bijection between maximal rigid objects and
/// clusters, and `X_{T_i} = x_i` on the initial object.
pub fn check_bijection(n: usize) -> VerificationReport {
    assert!(n >= 2);
    let start = Instant::now();
    let d = n - 1;
    let mut checks = Vec::new();

    let rigids = rigid_indecomposables(n);
    let chars: BTreeMap<_, _> = rigids
        .iter()
        .map(|m| (*m, x_closed_form(m).unwrap()))
        .collect();
    let char_set: BTreeSet<LaurentPoly> = chars.values().cloned().collect();
    checks.push(CheckOutcome {
        name: "character-injective".into(),
        pass: char_set.len() == rigids.len(),
        detail: format!(
            "{} rigid indecomposables, {} distinct characters",
            rigids.len(),
            char_set.len()
        ),
    });

    let initial = MaximalRigid::initial(n);
    let a_t = exchange_matrix(&initial).expect("initial matrix");
    let graph = enumerate_exchange_graph(&Seed::initial(a_t), DEFAULT_NODE_LIMIT)
        .expect("finite type closes");
    let var_set: BTreeSet<LaurentPoly> = graph.variables().iter().cloned().collect();

    checks.push(CheckOutcome {
        name: "variable-sets-equal".into(),
        pass: var_set == char_set,
        detail: if var_set == char_set {
            format!(
                "character set equals the {} exchange-graph variables",
                var_set.len()
            )
        } else {
            let missing: Vec<String> = char_set
                .difference(&var_set)
                .take(5)
                .map(|p| p.canonical_text())
                .collect();
            let extra: Vec<String> = var_set
                .difference(&char_set)
                .take(5)
                .map(|p| p.canonical_text())
                .collect();
            format!("characters not in graph: {missing:?}; variables not hit: {extra:?}")
        },
    });

    checks.push(CheckOutcome {
        name: "variable-count".into(),
        pass: var_set.len() == n * d,
        detail: format!("{} variables, expected n(n-1) = {}", var_set.len(), n * d),
    });

    let clusters: BTreeSet<Vec<LaurentPoly>> =
        graph.nodes().iter().map(|s| s.cluster().to_vec()).collect();
    let mrs = enumerate_maximal_rigid(n).expect("rank validated");
    let mut images: BTreeSet<Vec<LaurentPoly>> = BTreeSet::new();
    let mut cex = Collector::new();
    for r in &mrs {
        let mut image: Vec<LaurentPoly> = r.summands().iter().map(|m| chars[m].clone()).collect();
        image.sort();
        if !clusters.contains(&image) {
            cex.record(format!("{r} does not map onto a cluster"));
        }
        images.insert(image);
    }
    let expected_clusters = binomial(2 * (n as u64 - 1), n as u64 - 1);
    checks.push(cex.outcome(
        "maximal-rigid-to-cluster",
        format!("all {} maximal rigid objects map onto clusters", mrs.len()),
    ));
    checks.push(CheckOutcome {
        name: "cluster-bijection".into(),
        pass: images.len() == mrs.len() && images.len() == clusters.len(),
        detail: format!(
            "{} maximal rigid objects, {} distinct images, {} clusters",
            mrs.len(),
            images.len(),
            clusters.len()
        ),
    });
    checks.push(CheckOutcome {
        name: "cluster-count".into(),
        pass: clusters.len() as u128 == expected_clusters,
        detail: format!(
            "{} clusters, expected binom(2(n-1), n-1) = {expected_clusters}",
            clusters.len()
        ),
    });

    let initial_match = initial
        .summands()
        .iter()
        .enumerate()
        .all(|(i, t)| chars[t] == LaurentPoly::var(d, i + 1));
    checks.push(CheckOutcome {
        name: "initial-seed-match".into(),
        pass: initial_match,
        detail: "X of T_i equals x_i for the reference object".into(),
    });

    VerificationReport {
        rank: n,
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// The cluster-structure condition: mutating the exchange matrix commutes
/// with mutating the maximal rigid object (replaced summand keeps its slot),
/// and the two exchange-triangle middles never share a summand.
pub fn check_cluster_structure(n: usize) -> VerificationReport {
    assert!(n >= 2);
    let start = Instant::now();
    let mut commute = Collector::new();
    let mut disjoint = Collector::new();
    let mut cases = 0usize;
    for r in enumerate_maximal_rigid(n).expect("rank validated") {
        let ordered = r.summands().to_vec();
        let a = exchange_matrix_ordered(&r, &ordered).expect("exchange matrix");
        for (i, m) in ordered.iter().enumerate() {
            cases += 1;
            let tri = exchange_triangles(&r, m).expect("triangles");
            for s in tri.e.summands() {
                if tri.e_prime.multiplicity_of(s) > 0 {
                    disjoint.record(format!("{r}, {m}: shared middle summand {s}"));
                }
            }
            let mut mutated = ordered.clone();
            mutated[i] = tri.partner;
            let r2 = MaximalRigid::new(n, mutated.clone()).expect("mutation stays maximal rigid");
            let lhs = a.mutate(i + 1).expect("direction in range");
            let rhs = exchange_matrix_ordered(&r2, &mutated).expect("exchange matrix");
            if lhs != rhs {
                commute.record(format!(
                    "{r} at slot {}: mu(A_R) = {:?} but A_mu(R) = {:?}",
                    i + 1,
                    lhs.rows(),
                    rhs.rows()
                ));
            }
        }
    }

    let initial_cartan = exchange_matrix(&MaximalRigid::initial(n))
        .expect("initial matrix")
        .cartan_part();
    let cartan_ok = initial_cartan == type_c_cartan(n - 1);

    let checks = vec![
        commute.outcome(
            "matrix-mutation-commutes",
            format!("{cases} (object, direction) pairs"),
        ),
        disjoint.outcome(
            "middles-share-no-summand",
            "E and E' have disjoint summands everywhere".into(),
        ),
        CheckOutcome {
            name: "initial-cartan-type".into(),
            pass: cartan_ok,
            detail: format!("Cartan part of A_T is the type C_{} matrix", n - 1),
        },
    ];
    VerificationReport {
        rank: n,
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Positivity and Laurentness: every exchange-graph variable and every
/// closed-form character has all-positive coefficients, no exact division
/// fails during the graph walk, and every non-initial variable carries a
/// genuine denominator.
pub fn check_positivity_and_laurent(n: usize) -> VerificationReport {
    assert!(n >= 2);
    let start = Instant::now();
    let d = n - 1;
    let mut checks = Vec::new();

    let a_t = exchange_matrix(&MaximalRigid::initial(n)).expect("initial matrix");
    let graph_result = enumerate_exchange_graph(&Seed::initial(a_t), DEFAULT_NODE_LIMIT);
    checks.push(CheckOutcome {
        name: "bfs-exact-division".into(),
        pass: graph_result.is_ok(),
        detail: match &graph_result {
            Ok(g) => format!(
                "graph closed with {} nodes and no failed division",
                g.nodes().len()
            ),
            Err(e) => format!("graph enumeration failed: {e}"),
        },
    });

    if let Ok(graph) = graph_result {
        let mut positivity = Collector::new();
        for v in graph.variables() {
            if !v.all_coeffs_positive() {
                positivity.record(format!("variable {}", v.canonical_text()));
            }
        }
        checks.push(positivity.outcome(
            "variable-positivity",
            format!("{} variables all positive", graph.variables().len()),
        ));

        let initial_vars: BTreeSet<LaurentPoly> = (1..=d).map(|i| LaurentPoly::var(d, i)).collect();
        let mut denom = Collector::new();
        for v in graph.variables() {
            if !initial_vars.contains(v) && !v.has_negative_exponent() {
                denom.record(format!("variable {}", v.canonical_text()));
            }
        }
        checks.push(denom.outcome(
            "non-initial-denominators",
            "every non-initial variable has a denominator monomial".into(),
        ));
    }

    let mut char_pos = Collector::new();
    for m in rigid_indecomposables(n) {
        let x = x_closed_form(&m).unwrap();
        if !x.all_coeffs_positive() {
            char_pos.record(format!("{m}: {}", x.canonical_text()));
        }
    }
    checks.push(char_pos.outcome(
        "character-positivity",
        "all closed-form characters positive".into(),
    ));

    VerificationReport {
        rank: n,
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs all four checks and merges the outcomes into one report.
pub fn check_all(n: usize) -> VerificationReport {
    let reports = vec![
        check_mutation_relations(n),
        check_bijection(n),
        check_cluster_structure(n),
        check_positivity_and_laurent(n),
    ];
    VerificationReport::merge(n, reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_all_checks_pass_small_ranks() {
        for n in 2..=4 {
            let report = check_all(n);
            for check in &report.checks {
                assert!(
                    check.pass,
                    "rank {n}, check {}: {}",
                    check.name, check.detail
                );
            }
        }
    }

    #[test]
    fn test_mutation_relations_cover_both_ext_dimensions() {
        let report = check_mutation_relations(3);
        let coverage = report
            .checks
            .iter()
            .find(|c| c.name == "ext-dimension-coverage")
            .unwrap();
        assert!(coverage.pass);
        assert!(coverage.detail.contains("dim Ext = 1"));
    }

    #[test]
    fn test_bijection_counts_rank3() {
        let report = check_bijection(3);
        assert!(report.all_pass());
        let count = report
            .checks
            .iter()
            .find(|c| c.name == "variable-count")
            .unwrap();
        assert!(count.detail.contains("6 variables"));
    }

    #[test]
    fn test_report_json_shape() {
        let report = check_positivity_and_laurent(2);
        let json = report.to_json_string();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["rank"], 2);
        assert!(value["elapsedMs"].is_number());
        assert!(value["checks"].as_array().unwrap().len() >= 3);
        assert!(value["checks"][0]["name"].is_string());
        assert!(value["checks"][0]["pass"].is_boolean());
        assert!(value["checks"][0]["detail"].is_string());
    }
}
