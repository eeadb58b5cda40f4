//! BFS closure of a tuple under simple reproductions, Weyl labeling, and
//! the relation / folding cross-checks.
//!
//! Nodes are deduplicated by their transported weight, which is valid at
//! strongly non-integral weights where the orbit map is free; tuple equality
//! is still asserted on every key collision so that path-independence is
//! tested, not assumed.

use crate::rational::Rational;
use crate::reproduce::{
    is_fertile, predicted_descendant_degree, reproduce, FamilyKind, PolyTuple, Problem,
    ReproduceError, Weight,
};
use crate::rootdata::{FoldPlan, RootDataError, WeylWord};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PopulationError {
    #[error("population exceeded the node budget {limit} without closing")]
    Overflow { limit: usize },
    #[error("path dependence at weight key {key:?}: two descendants with the same weight differ")]
    PathDependence { key: Vec<Rational> },
    #[error("starting weight is not admissible for populations: {0}")]
    NonGenericWeight(String),
    #[error("starting tuple is not fertile in direction {direction}: {source}")]
    InfertileStart {
        direction: usize,
        source: ReproduceError,
    },
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// A node of a population: the tuple, its transported weight, and the
/// first-found word reaching it from the base.
#[derive(Debug, Clone)]
pub struct PopNode {
    pub tuple: PolyTuple,
    pub weight: Weight,
    pub word: WeylWord,
}

/// A reproduction failure recorded during BFS; any entry flags a candidate
/// counterexample to super-fertility of off-diagonal fertile tuples.
#[derive(Debug, Clone)]
pub struct ReproductionFailure {
    pub node: usize,
    pub direction: usize,
    pub error: String,
}

#[derive(Debug, Clone)]
pub struct Population {
    pub nodes: Vec<PopNode>,
    /// `edges[n][i]` is the node reached from `n` by reproduction in
    /// direction `i`.
    pub edges: Vec<Vec<Option<usize>>>,
    pub failures: Vec<ReproductionFailure>,
}

impl Population {
    pub fn base(&self) -> &PopNode {
        &self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.failures.is_empty() && self.edges.iter().flatten().all(Option::is_some)
    }

    /// Follows edges along a word (first letter first); `None` if any edge
    /// is missing.
    pub fn follow(&self, start: usize, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(start, |n, &i| self.edges[n][i])
    }

    /// Node index reached from the base by a word, if present.
    pub fn node_by_word(&self, word: &[usize]) -> Option<usize> {
        self.follow(0, word)
    }
}

fn weight_key(w: &Weight) -> Vec<Rational> {
    w.coords().to_vec()
}

/// Family-dependent admissibility of the base weight for population
/// generation.
///
/// TRIG: strongly non-integral (all shifted-orbit pairings non-integral).
/// EXP: the plain-orbit analogue (free orbit, all pairings non-integral).
/// XXX: pairwise-distinct multiplicative orbit with every coordinate != 1.
pub fn check_population_weight(problem: &Problem, weight: &Weight) -> Result<(), PopulationError> {
    let rs = &problem.rs;
    match (&problem.family, weight) {
        (FamilyKind::Trig, Weight::Additive(lam)) => {
            if !rs.is_strongly_nonintegral(lam)? {
                return Err(PopulationError::NonGenericWeight(
                    "weight is not strongly non-integral for the shifted action".into(),
                ));
            }
        }
        (FamilyKind::Exp, Weight::Additive(lam)) => {
            if !rs.is_plain_nonintegral(lam)? {
                return Err(PopulationError::NonGenericWeight(
                    "weight is not strongly non-integral for the plain action".into(),
                ));
            }
        }
        (FamilyKind::Xxx { .. }, Weight::Mult(kappa)) => {
            let orbit = rs.mult_orbit(kappa)?;
            if orbit.len() as u128 != rs.weyl_order()? {
                return Err(PopulationError::NonGenericWeight(
                    "multiplicative orbit is not free".into(),
                ));
            }
            let one = Rational::from_integer(1.into());
            if orbit.iter().any(|k| k.0.contains(&one)) {
                return Err(PopulationError::NonGenericWeight(
                    "some orbit point has a kappa-coordinate equal to 1".into(),
                ));
            }
        }
        _ => {
            return Err(PopulationError::NonGenericWeight(
                "weight kind does not match the family".into(),
            ))
        }
    }
    Ok(())
}

/// BFS closure of `start` under the simple reproductions in directions
/// `1..r`, deduplicated by weight key. Reproduction failures are recorded;
/// a weight-key collision with a differing tuple is a hard error.
pub fn generate(
    problem: &Problem,
    start: PolyTuple,
    weight: Weight,
    max_nodes: usize,
) -> Result<Population, PopulationError> {
    check_population_weight(problem, &weight)?;
    for i in 0..problem.rank() {
        if let Err(e) = reproduce(problem, &start, &weight, i) {
            return Err(PopulationError::InfertileStart {
                direction: i,
                source: e,
            });
        }
    }

    let r = problem.rank();
    let mut nodes = vec![PopNode {
        tuple: start,
        weight,
        word: WeylWord::default(),
    }];
    let mut edges: Vec<Vec<Option<usize>>> = vec![vec![None; r]];
    let mut failures = Vec::new();
    let mut index: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
    index.insert(weight_key(&nodes[0].weight), 0);

    let mut frontier = 0usize;
    while frontier < nodes.len() {
        let n = frontier;
        frontier += 1;
        for i in 0..r {
            if edges[n][i].is_some() {
                continue;
            }
            let (tuple, weight, word) = {
                let node = &nodes[n];
                (node.tuple.clone(), node.weight.clone(), node.word.clone())
            };
            match reproduce(problem, &tuple, &weight, i) {
                Ok(desc) => {
                    let key = weight_key(&desc.weight);
                    match index.get(&key) {
                        Some(&existing) => {
                            // path-independence: equal weight keys must
                            // carry equal monic tuples
                            if nodes[existing].tuple != desc.tuple {
                                return Err(PopulationError::PathDependence { key });
                            }
                            edges[n][i] = Some(existing);
                        }
                        None => {
                            if nodes.len() >= max_nodes {
                                return Err(PopulationError::Overflow { limit: max_nodes });
                            }
                            let mut w = word;
                            w.0.push(i);
                            nodes.push(PopNode {
                                tuple: desc.tuple,
                                weight: desc.weight,
                                word: w,
                            });
                            edges.push(vec![None; r]);
                            let id = nodes.len() - 1;
                            index.insert(key, id);
                            edges[n][i] = Some(id);
                        }
                    }
                }
                Err(e) => {
                    failures.push(ReproductionFailure {
                        node: n,
                        direction: i,
                        error: e.to_string(),
                    });
                }
            }
        }
    }

    Ok(Population {
        nodes,
        edges,
        failures,
    })
}

/// Default node budget: four times the Weyl group order, so a runaway
/// prepopulation is detected rather than looping.
pub fn default_max_nodes(problem: &Problem) -> usize {
    problem
        .rs
        .weyl_order()
        .map(|o| 4usize.saturating_mul(o as usize))
        .unwrap_or(4096)
}

/// One relation violation found by [`check_relations`].
#[derive(Debug, Clone)]
pub struct RelationViolation {
    pub node: usize,
    pub i: usize,
    pub j: usize,
    pub order: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Coxeter order of `s_i s_j` from the scalar product `(alpha_i, alpha_j)`:
/// 0 -> 2, -1 -> 3, -2 -> 4, -3 -> 6.
pub fn braid_order(problem: &Problem, i: usize, j: usize) -> usize {
    match problem.rs.root_pairing(i, j) {
        0 => 2,
        -1 => 3,
        -2 => 4,
        -3 => 6,
        p => panic!("unexpected scalar product {p} between simple roots"),
    }
}

/// Verifies the population relations node-wise by exact tuple equality:
/// involution in every direction, and the alternating braid relation of the
/// appropriate order for every pair of directions (order 6 for G2 checked
/// the same way).
pub fn check_relations(problem: &Problem, pop: &Population) -> RelationReport {
    let r = problem.rank();
    let mut report = RelationReport::default();
    let alternating = |a: usize, b: usize, len: usize| -> Vec<usize> {
        (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect()
    };
    for n in 0..pop.len() {
        for i in 0..r {
            report.checked += 1;
            match pop.follow(n, &[i, i]) {
                Some(m) if m == n => {}
                other => report.violations.push(RelationViolation {
                    node: n,
                    i,
                    j: i,
                    order: 2,
                    detail: format!("involution failed: ended at {other:?}"),
                }),
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let order = braid_order(problem, i, j);
                report.checked += 1;
                let a = pop.follow(n, &alternating(i, j, order));
                let b = pop.follow(n, &alternating(j, i, order));
                match (a, b) {
                    (Some(x), Some(y)) if x == y && pop.nodes[x].tuple == pop.nodes[y].tuple => {}
                    other => report.violations.push(RelationViolation {
                        node: n,
                        i,
                        j,
                        order,
                        detail: format!("braid relation of order {order} failed: {other:?}"),
                    }),
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone)]
pub struct WeylLabel {
    /// node index -> canonical key of its word (the image of the reference
    /// weight under the shifted action)
    pub labels: Vec<Vec<Rational>>,
    pub bijective: bool,
    pub weyl_order: u128,
}

/// The labeling `tau`: node -> Weyl element, with its bijectivity verdict.
/// Bijective iff the node count equals `|W|` and all canonical word keys
/// are pairwise distinct (weights are distinct by construction of the
/// dedup map).
pub fn weyl_label(problem: &Problem, pop: &Population) -> Result<WeylLabel, PopulationError> {
    let rs = &problem.rs;
    rs.assert_reference_free()?;
    let order = rs.weyl_order()?;
    let labels: Vec<Vec<Rational>> = pop.nodes.iter().map(|n| rs.word_key(&n.word).0).collect();
    let mut sorted = labels.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = pop.len() as u128 == order && sorted.len() == pop.len();
    Ok(WeylLabel {
        labels,
        bijective,
        weyl_order: order,
    })
}

#[derive(Debug, Clone)]
pub struct FoldViolation {
    pub node: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct FoldReport {
    pub checked: usize,
    pub violations: Vec<FoldViolation>,
}

impl FoldReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that every folded node of the source population appears, tuple
/// and weight, in the target population.
pub fn fold_check(plan: &FoldPlan, source: &Population, target: &Population) -> FoldReport {
    let mut report = FoldReport::default();
    let target_index: BTreeMap<Vec<Rational>, usize> = target
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (weight_key(&n.weight), i))
        .collect();
    for (id, node) in source.nodes.iter().enumerate() {
        report.checked += 1;
        let folded_weight: Vec<Rational> = plan.fold_slots(node.weight.coords());
        let folded_tuple = PolyTuple(plan.fold_slots(&node.tuple.0));
        match target_index.get(&folded_weight) {
            None => report.violations.push(FoldViolation {
                node: id,
                detail: "folded weight not present in target population".into(),
            }),
            Some(&t) => {
                if target.nodes[t].tuple != folded_tuple {
                    report.violations.push(FoldViolation {
                        node: id,
                        detail: format!("folded tuple differs from target node {t}"),
                    });
                }
            }
        }
    }
    report
}

/// Degree-law check over every present edge:
/// `deg ytilde_i = deg T_i + sum_{j != i}(-a_ij) deg y_j - deg y_i`.
pub fn check_degree_law(problem: &Problem, pop: &Population) -> Result<(), String> {
    for (n, edges) in pop.edges.iter().enumerate() {
        for (i, target) in edges.iter().enumerate() {
            let Some(t) = target else { continue };
            let predicted = predicted_descendant_degree(problem, &pop.nodes[n].tuple, i);
            let actual = pop.nodes[*t].tuple.0[i].degree_i64();
            if predicted != actual {
                return Err(format!(
                    "edge ({n}, {i}): predicted degree {predicted}, actual {actual}"
                ));
            }
        }
    }
    Ok(())
}

/// Weight-consistency check: every node weight equals its word applied to
/// the base weight, recomputed independently.
pub fn check_weight_consistency(problem: &Problem, pop: &Population) -> Result<(), String> {
    let base = &pop.nodes[0].weight;
    for (id, node) in pop.nodes.iter().enumerate() {
        let mut w = base.clone();
        for &i in &node.word.0 {
            w = problem
                .reflect_weight(i, &w)
                .map_err(|e| format!("node {id}: {e}"))?;
        }
        if w != node.weight {
            return Err(format!("node {id}: transported weight mismatch"));
        }
    }
    Ok(())
}

/// Degree/weight consistency: the weight at infinity computed from node
/// degrees must match the base one transported by the plain action.
pub fn check_degree_weight_consistency(problem: &Problem, pop: &Population) -> Result<(), String> {
    let rs = &problem.rs;
    let base_inf = rs.lambda_infinity(&problem.lambdas, &pop.nodes[0].tuple.degrees());
    for (id, node) in pop.nodes.iter().enumerate() {
        let node_inf = rs.lambda_infinity(&problem.lambdas, &node.tuple.degrees());
        let mut transported = base_inf.clone();
        for &i in &node.word.0 {
            transported = rs.reflect_plain(i, &transported);
        }
        if transported != node_inf {
            return Err(format!(
                "node {id}: weight at infinity from degrees differs from transported value"
            ));
        }
    }
    Ok(())
}

/// Edge-involution check: following direction `i` twice returns to the node.
pub fn check_edge_involution(pop: &Population) -> Result<(), String> {
    for n in 0..pop.len() {
        for (i, e) in pop.edges[n].iter().enumerate() {
            if let Some(t) = e {
                if pop.edges[*t][i] != Some(n) {
                    return Err(format!("edge ({n}, {i}) is not involutive"));
                }
            }
        }
    }
    Ok(())
}

/// Start fertility convenience used by callers that want a clean verdict
/// before BFS.
pub fn check_start_fertile(problem: &Problem, tuple: &PolyTuple, weight: &Weight) -> bool {
    is_fertile(problem, tuple, weight)
}
