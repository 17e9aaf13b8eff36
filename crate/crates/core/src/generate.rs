//! Seeded random frameworks, preorders and PAFs for tests and benchmarks.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::framework::{Framework, Preorder};
use crate::related::Paf;

/// Shape of generated frameworks.
#[derive(Clone, Debug)]
pub struct GenConfig {
    pub assumptions: RangeInclusive<usize>,
    /// Non-assumption sentences.
    pub sentences: RangeInclusive<usize>,
    pub rules: RangeInclusive<usize>,
    pub max_body: usize,
    /// Probability that a rule head is an assumption (0 gives flat output).
    pub assumption_head: f64,
    /// Probability that a rule has an empty body.
    pub fact: f64,
    /// Probability of each ordered pair entering ≤ before closure.
    pub pref_density: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            assumptions: 1..=5,
            sentences: 1..=4,
            rules: 0..=8,
            max_body: 3,
            assumption_head: 0.15,
            fact: 0.05,
            pref_density: 0.2,
        }
    }
}

impl GenConfig {
    pub fn flat(mut self) -> Self {
        self.assumption_head = 0.0;
        self
    }

    pub fn without_preferences(mut self) -> Self {
        self.pref_density = 0.0;
        self
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Closure of random pairs; never reflexive unless forced by a cycle.
pub fn random_preorder(rng: &mut impl Rng, n: usize, density: f64) -> Preorder {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(density) {
                pairs.push((a, b));
            }
        }
    }
    Preorder::from_pairs(n, &pairs, &[]).expect("no strict pairs declared")
}

/// A total preorder from random ranks with ties.
pub fn random_total_preorder(rng: &mut impl Rng, n: usize) -> Preorder {
    let ranks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.max(1))).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| ranks[a] <= ranks[b])
        .collect();
    Preorder::from_pairs(n, &pairs, &[]).expect("no strict pairs declared")
}

pub fn random_framework(rng: &mut impl Rng, cfg: &GenConfig) -> Framework {
    let n = rng.gen_range(cfg.assumptions.clone()).max(1);
    let m = rng.gen_range(cfg.sentences.clone()).max(1);
    let assumptions: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let others: Vec<String> = (0..m).map(|i| format!("p{i}")).collect();
    let all: Vec<&String> = assumptions.iter().chain(&others).collect();

    let mut b = Framework::builder();
    for a in &assumptions {
        b.assumption(a);
        // mostly plain sentences; sometimes an assumption or a fresh symbol
        match rng.gen_range(0..10) {
            0 => {}
            1 => {
                b.contrary(a, assumptions.choose(rng).unwrap());
            }
            _ => {
                b.contrary(a, others.choose(rng).unwrap());
            }
        }
    }
    for _ in 0..rng.gen_range(cfg.rules.clone()) {
        let head = if cfg.assumption_head > 0.0 && rng.gen_bool(cfg.assumption_head) {
            assumptions.choose(rng).unwrap()
        } else {
            others.choose(rng).unwrap()
        };
        let len = if rng.gen_bool(cfg.fact) {
            0
        } else {
            rng.gen_range(1..=cfg.max_body.max(1))
        };
        let body: Vec<&str> = (0..len).map(|_| all.choose(rng).unwrap().as_str()).collect();
        b.rule(head, body);
    }
    let mut f = b.build().expect("generated framework is well formed");
    if cfg.pref_density > 0.0 {
        f = f.with_preorder(random_preorder(rng, n, cfg.pref_density));
    }
    f
}

pub fn random_paf(rng: &mut impl Rng, args: RangeInclusive<usize>, attack: f64, pref_density: f64) -> Paf {
    let n = rng.gen_range(args).max(1);
    let names = (0..n).map(|i| format!("A{i}")).collect();
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(attack) {
                attacks.push((a, b));
            }
        }
    }
    Paf::new(names, attacks, random_preorder(rng, n, pref_density))
}
