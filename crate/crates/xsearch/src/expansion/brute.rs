//! Exact maximum-expansion search by exhaustive enumeration.
//!
//! Usable only on small instances; serves as the independent optimum
//! oracle for the greedy approximation.

use crate::graph::{Graph, NodeId};
use crate::ratio::Ratio;

use super::ExpansionError;

/// Default cap on the number of k-subsets the oracle will enumerate.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 2_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    out
}

/// Exact optimum of |N(S)| / |S| over all k-subsets, with the default
/// enumeration budget.
pub fn brute_force_max_expansion(
    g: &Graph,
    k: usize,
) -> Result<(Vec<NodeId>, Ratio), ExpansionError> {
    brute_force_with_budget(g, k, DEFAULT_ENUMERATION_BUDGET)
}

/// As [`brute_force_max_expansion`], refusing instances whose C(|V|, k)
/// exceeds `budget`. Ties break toward the lexicographically smallest
/// sample.
pub fn brute_force_with_budget(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<(Vec<NodeId>, Ratio), ExpansionError> {
    let n = g.node_count();
    if k < 1 || k >= n {
        return Err(ExpansionError::SampleSizeOutOfRange { k, n });
    }
    let combinations = binomial(n, k);
    if combinations > budget as u128 {
        return Err(ExpansionError::BudgetExceeded {
            combinations,
            budget,
        });
    }

    let mut in_sample = vec![false; n];
    let mut stamp = vec![0u64; n];
    let mut epoch = 0u64;
    let mut combo: Vec<usize> = (0..k).collect();
    let mut best: Option<(usize, Vec<NodeId>)> = None;

    loop {
        epoch += 1;
        for &i in &combo {
            in_sample[i] = true;
        }
        let mut neighborhood = 0usize;
        for &i in &combo {
            for &w in g.neighbors(i as NodeId) {
                let wi = w as usize;
                if !in_sample[wi] && stamp[wi] != epoch {
                    stamp[wi] = epoch;
                    neighborhood += 1;
                }
            }
        }
        for &i in &combo {
            in_sample[i] = false;
        }
        // Lexicographic enumeration order makes strict improvement keep the
        // lexicographically smallest optimum.
        if best.as_ref().map_or(true, |(b, _)| neighborhood > *b) {
            best = Some((neighborhood, combo.iter().map(|&i| i as NodeId).collect()));
        }

        // Advance to the next k-combination of 0..n in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                let (neighborhood, sample) = best.expect("at least one combination");
                return Ok((sample, Ratio::new(neighborhood, k)));
            }
            i -= 1;
            if combo[i] != i + n - k {
                break;
            }
        }
        combo[i] += 1;
        for j in (i + 1)..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    #[test]
    fn clique_pairs_have_expansion_one() {
        let (sample, value) = brute_force_max_expansion(&complete(4), 2).unwrap();
        assert_eq!(value, Ratio::new(2, 2));
        assert_eq!(sample, vec![0, 1]);
    }

    #[test]
    fn path_singletons() {
        // {1}, {2}, {3} all reach expansion 2; lexicographic tie-break keeps {1}.
        let (sample, value) = brute_force_max_expansion(&path(5), 1).unwrap();
        assert_eq!(value, Ratio::new(2, 1));
        assert_eq!(sample, vec![1]);
    }

    #[test]
    fn star_pair_is_center_plus_leaf() {
        let (sample, value) = brute_force_max_expansion(&star(9), 2).unwrap();
        assert_eq!(value, Ratio::new(8, 2));
        assert_eq!(sample, vec![0, 1]);
    }

    #[test]
    fn budget_refusal_names_the_budget() {
        let g = complete(30);
        let err = brute_force_with_budget(&g, 15, 1000).unwrap_err();
        match err {
            ExpansionError::BudgetExceeded { budget, .. } => assert_eq!(budget, 1000),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(16, 4), 1820);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
