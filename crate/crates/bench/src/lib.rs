//! Workloads shared by the benchmarks.

use abaplus::generate::{random_framework, rng, GenConfig};
use abaplus::{Framework, FrameworkBuilder};

/// `n` assumptions in a preference-ordered attack ring: `a_i` attacks
/// `a_{i+1}` and `a_i < a_{i+1}`, so every attack is reversed.
pub fn ring(n: usize) -> Framework {
    let mut b = FrameworkBuilder::new();
    for i in 0..n {
        b.assumption(&format!("a{i}"));
    }
    for i in 0..n {
        let j = (i + 1) % n;
        b.rule(&format!("_contrary_a{j}"), [format!("a{i}").as_str()]);
        if j != 0 {
            b.prefer_leq(&format!("a{i}"), &format!("a{j}"));
        }
    }
    b.build().expect("ring framework is well formed")
}

/// Random frameworks with exactly `n` assumptions.
pub fn random_corpus(seed: u64, count: usize, n: usize) -> Vec<Framework> {
    let cfg = GenConfig {
        assumptions: n..=n,
        sentences: n..=n,
        rules: n..=2 * n,
        ..GenConfig::default()
    };
    let mut r = rng(seed);
    (0..count).map(|_| random_framework(&mut r, &cfg)).collect()
}
