use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{sccs_without, Digraph, Vertex};
use crate::oracles::FtQuery;
use crate::structure::strong_articulation_points;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WorkloadKind {
    Random,
    Bad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkloadSpec {
    pub kind: WorkloadKind,
    pub count: usize,
    pub rng_seed: u64,
    /// Seeds placed in the small components of a bad workload.
    pub seed_count: usize,
}

impl WorkloadSpec {
    pub fn random(count: usize, rng_seed: u64) -> Self {
        WorkloadSpec {
            kind: WorkloadKind::Random,
            count,
            rng_seed,
            seed_count: 10,
        }
    }

    pub fn bad(count: usize, rng_seed: u64) -> Self {
        WorkloadSpec {
            kind: WorkloadKind::Bad,
            ..WorkloadSpec::random(count, rng_seed)
        }
    }

    pub fn with_seed_count(mut self, k: usize) -> Self {
        self.seed_count = k;
        self
    }
}

/// `random:N` or `bad:N`; the rng seed is supplied separately.
impl FromStr for WorkloadSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("workload {s:?}: expected random:N or bad:N"));
        let (kind, count) = s.split_once(':').ok_or_else(bad)?;
        let count: usize = count.parse().map_err(|_| bad())?;
        match kind {
            "random" => Ok(WorkloadSpec::random(count, 0)),
            "bad" => Ok(WorkloadSpec::bad(count, 0)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for WorkloadSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            WorkloadKind::Random => "random",
            WorkloadKind::Bad => "bad",
        };
        write!(f, "{kind}:{}", self.count)
    }
}

/// Queries plus, for bad workloads, the seeds and the failed articulation
/// point they were built around.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Workload {
    pub queries: Vec<FtQuery>,
    pub seeds: Vec<Vertex>,
    pub sap: Option<Vertex>,
}

pub fn generate(g: &Digraph, spec: &WorkloadSpec) -> Result<Workload> {
    match spec.kind {
        WorkloadKind::Random => Ok(Workload {
            queries: gen_random_queries(g, spec),
            seeds: Vec::new(),
            sap: None,
        }),
        WorkloadKind::Bad => gen_bad_queries(g, spec),
    }
}

/// All four vertices drawn independently and uniformly.
pub fn gen_random_queries(g: &Digraph, spec: &WorkloadSpec) -> Vec<FtQuery> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
    (0..spec.count)
        .map(|_| {
            FtQuery::new(
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            )
        })
        .collect()
}

/// Queries that fail a strong articulation point `s` whose removal leaves
/// enough vertices outside the largest SCC to host the seeds. `x` and `y`
/// come from SCCs of `G - s` holding no seed.
pub fn gen_bad_queries(g: &Digraph, spec: &WorkloadSpec) -> Result<Workload> {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
    let mut saps = strong_articulation_points(g)?;
    saps.shuffle(&mut rng);
    for s in saps {
        let labels = sccs_without(g, &[s]);
        let sizes = labels.component_sizes();
        let Some(largest) = (0..sizes.len()).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))) else {
            continue;
        };
        let small: Vec<Vertex> = (0..n)
            .filter(|&v| labels.component_of(v).is_some_and(|c| c != largest))
            .collect();
        if small.len() < spec.seed_count {
            continue;
        }
        let mut seeds: Vec<Vertex> = small.choose_multiple(&mut rng, spec.seed_count).copied().collect();
        seeds.sort_unstable();
        let mut seeded = vec![false; sizes.len()];
        for &r in &seeds {
            seeded[labels.component_of(r).expect("seed survives")] = true;
        }
        let pool: Vec<Vertex> = (0..n)
            .filter(|&v| labels.component_of(v).is_some_and(|c| !seeded[c]))
            .collect();
        let queries = (0..spec.count)
            .map(|_| {
                let mut f2 = rng.gen_range(0..n - 1);
                if f2 >= s {
                    f2 += 1;
                }
                let x = *pool.choose(&mut rng).expect("largest SCC holds no seed");
                let y = *pool.choose(&mut rng).expect("largest SCC holds no seed");
                FtQuery::new(x, y, s, f2)
            })
            .collect();
        return Ok(Workload {
            queries,
            seeds,
            sap: Some(s),
        });
    }
    Err(Error::NoBadInstanceSap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracles::ground_truth_2ftsc;

    #[test]
    fn singleton_queries_are_all_failed() {
        let g = Digraph::from_edges(1, &[]);
        let qs = gen_random_queries(&g, &WorkloadSpec::random(20, 3));
        assert!(qs.iter().all(|q| *q == FtQuery::new(0, 0, 0, 0) && !ground_truth_2ftsc(&g, q)));
    }

    #[test]
    fn deterministic() {
        let g = fix_a();
        let s = WorkloadSpec::random(100, 42);
        assert_eq!(gen_random_queries(&g, &s), gen_random_queries(&g, &s));
        let b = WorkloadSpec::bad(100, 42).with_seed_count(2);
        assert_eq!(gen_bad_queries(&g, &b).unwrap(), gen_bad_queries(&g, &b).unwrap());
    }

    #[test]
    fn random_true_rate_matches_enumeration() {
        let g = fix_a();
        let mut all = 0;
        for x in 0..6 {
            for y in 0..6 {
                for f1 in 0..6 {
                    for f2 in 0..6 {
                        all += ground_truth_2ftsc(&g, &FtQuery::new(x, y, f1, f2)) as usize;
                    }
                }
            }
        }
        let exact = all as f64 / 1296.0;
        let qs = gen_random_queries(&g, &WorkloadSpec::random(10_000, 7));
        let hit = qs.iter().filter(|q| ground_truth_2ftsc(&g, q)).count() as f64 / 1e4;
        assert!((hit - exact).abs() <= 0.02, "{hit} vs {exact}");
    }

    #[test]
    fn bad_queries_structure() {
        let g = fix_a();
        for seed in 0..20 {
            let w = gen_bad_queries(&g, &WorkloadSpec::bad(50, seed).with_seed_count(2)).unwrap();
            let s = w.sap.unwrap();
            assert_eq!(w.seeds.len(), 2);
            let labels = sccs_without(&g, &[s]);
            let seeded: Vec<_> = w.seeds.iter().map(|&r| labels.component_of(r)).collect();
            for q in &w.queries {
                assert_eq!(q.f1, s);
                assert_ne!(q.f2, s);
                assert!(!seeded.contains(&labels.component_of(q.x)));
                assert!(!seeded.contains(&labels.component_of(q.y)));
            }
        }
        // with s = 0 the seeds fill {1} and {2}
        let zero = (0..50)
            .map(|seed| gen_bad_queries(&g, &WorkloadSpec::bad(5, seed).with_seed_count(2)).unwrap())
            .find(|w| w.sap == Some(0))
            .unwrap();
        assert_eq!(zero.seeds, vec![1, 2]);
        assert!(zero.queries.iter().all(|q| [3, 4, 5].contains(&q.x) && [3, 4, 5].contains(&q.y)));
    }

    #[test]
    fn no_sap_is_an_error() {
        assert!(matches!(
            gen_bad_queries(&fix_k4b(), &WorkloadSpec::bad(5, 1)),
            Err(Error::NoBadInstanceSap)
        ));
    }

    #[test]
    fn parse_spec() {
        let s: WorkloadSpec = "bad:30".parse().unwrap();
        assert_eq!((s.kind, s.count), (WorkloadKind::Bad, 30));
        assert_eq!(s.to_string(), "bad:30");
        assert!("weird:3".parse::<WorkloadSpec>().is_err());
    }
}
