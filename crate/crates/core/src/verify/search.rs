use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::face::Vertex;

/// Outcome of a budgeted exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    /// The node budget ran out before the search finished.
    Unknown,
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        })
    }
}

type Facets = Vec<Vec<Vertex>>;

fn canonical(k: &SimplicialComplex) -> Facets {
    k.facets().into_iter().map(|f| f.into_vertices()).collect()
}

fn euler(k: &SimplicialComplex) -> i64 {
    k.euler_characteristic()
}

struct Collapser {
    budget: u64,
    nodes: u64,
    dead: HashSet<Facets>,
}

impl Collapser {
    fn search(&mut self, facets: Facets) -> Decision {
        if facets.len() == 1 && facets[0].len() == 1 {
            return Decision::Yes;
        }
        if self.dead.contains(&facets) {
            return Decision::No;
        }
        if self.nodes >= self.budget {
            return Decision::Unknown;
        }
        self.nodes += 1;
        let k = SimplicialComplex::from_sorted_facets(&facets);
        let mut unknown = false;
        for (sigma, tau) in k.free_face_ids() {
            let sigma = k.face(sigma);
            let tau = k.face(tau);
            // facets after removing the pair: τ goes, and each other facet
            // of τ not contained in another facet becomes maximal
            let mut next: Facets = facets.iter().filter(|f| f.as_slice() != tau).cloned().collect();
            for skip in 0..tau.len() {
                let g: Vec<Vertex> = tau.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                if g.as_slice() == sigma || g.is_empty() {
                    continue;
                }
                let covered = next.iter().any(|f| f.len() > g.len() && g.iter().all(|v| f.binary_search(v).is_ok()));
                if !covered {
                    next.push(g);
                }
            }
            next.sort_unstable();
            match self.search(next) {
                Decision::Yes => return Decision::Yes,
                Decision::Unknown => unknown = true,
                Decision::No => {}
            }
        }
        if unknown {
            Decision::Unknown
        } else {
            self.dead.insert(facets);
            Decision::No
        }
    }
}

/// Decides whether `k` collapses to a point by trying every sequence of
/// elementary collapses, with memoization on the canonical facet list.
/// Returns `Unknown` once `node_budget` complexes have been expanded.
pub fn exhaustive_collapsible(k: &SimplicialComplex, node_budget: u64) -> Decision {
    if k.is_empty() || euler(k) != 1 {
        return Decision::No;
    }
    Collapser { budget: node_budget, nodes: 0, dead: HashSet::new() }.search(canonical(k))
}

struct Evader {
    budget: u64,
    nodes: u64,
    memo: HashMap<Facets, bool>,
}

impl Evader {
    fn search(&mut self, facets: Facets) -> Decision {
        if facets.is_empty() {
            return Decision::No;
        }
        if facets.len() == 1 {
            // a simplex is non-evasive
            return Decision::Yes;
        }
        if let Some(&r) = self.memo.get(&facets) {
            return if r { Decision::Yes } else { Decision::No };
        }
        if self.nodes >= self.budget {
            return Decision::Unknown;
        }
        self.nodes += 1;
        let k = SimplicialComplex::from_sorted_facets(&facets);
        if euler(&k) != 1 {
            self.memo.insert(facets, false);
            return Decision::No;
        }
        let mut unknown = false;
        for &v in k.vertices() {
            let mut link: Facets = facets
                .iter()
                .filter(|f| f.binary_search(&v).is_ok() && f.len() > 1)
                .map(|f| f.iter().copied().filter(|&x| x != v).collect())
                .collect();
            let deletion_k = k.delete_vertex(v).expect("vertex present");
            let deletion = canonical(&deletion_k);
            link.sort_unstable();
            let link = canonical(&SimplicialComplex::from_sorted_facets(&link));
            let l = self.search(link);
            if l == Decision::No {
                continue;
            }
            let d = self.search(deletion);
            match (l, d) {
                (Decision::Yes, Decision::Yes) => {
                    self.memo.insert(facets, true);
                    return Decision::Yes;
                }
                (_, Decision::No) => {}
                _ => unknown = true,
            }
        }
        if unknown {
            Decision::Unknown
        } else {
            self.memo.insert(facets, false);
            Decision::No
        }
    }
}

/// Decides non-evasiveness: a simplex is non-evasive, and so is a complex
/// with a vertex whose link and deletion are both non-evasive. Returns
/// `Unknown` once `node_budget` complexes have been expanded.
pub fn exhaustive_nonevasive(k: &SimplicialComplex, node_budget: u64) -> Decision {
    if k.is_empty() {
        return Decision::No;
    }
    Evader { budget: node_budget, nodes: 0, memo: HashMap::new() }.search(canonical(k))
}
