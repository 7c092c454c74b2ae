//! Fixture graphs shared by the benchmarks.

use degspec::families::{random_graph, SplitMix64};
use degspec::{Family, Graph};

/// Seeded `G(n, p)` draws, one per requested order.
pub fn random_fixtures(orders: &[usize], p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    orders
        .iter()
        .map(|&n| random_graph(n, p, &mut rng).expect("valid order"))
        .collect()
}

/// Named graphs where the bounds are exact, plus one where they are not.
pub fn named_fixtures() -> Vec<(String, Graph)> {
    [
        Family::Star(200),
        Family::Wheel(200),
        Family::CompleteBipartite(70, 90),
        Family::Circulant { n: 300, degree: 6 },
        Family::Path(400),
    ]
    .into_iter()
    .map(|f| (f.to_string(), f.build().expect("valid family")))
    .collect()
}
