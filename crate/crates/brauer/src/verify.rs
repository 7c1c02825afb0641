//! Exhaustive checks of the counting and structural claims, grouped into
//! suites that the `verify` subcommand runs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use brauer_core::combinatorics::{
    binomial, connected_class_count, factorial, max_atom_length, singular_part_order,
};
use brauer_core::decomposition::{atoms, closure, is_irreducible_generator_check_with_limit};
use brauer_core::diagram::enumerate_all_with_limit;
use brauer_core::geodesics::cyclic_decomposition;
use brauer_core::presentation::check_all_relations;
use brauer_core::sequences::{count_classes_with_limit, count_paths_all};
use brauer_core::MAX_RANK;
use serde::Serialize;

use crate::{cache, parallel, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Generation,
    Irreducible,
    Lengths,
    Counts,
    Hclasses,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Relations,
        Suite::Generation,
        Suite::Irreducible,
        Suite::Lengths,
        Suite::Counts,
        Suite::Hclasses,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Generation => "generation",
            Suite::Irreducible => "irreducible",
            Suite::Lengths => "lengths",
            Suite::Counts => "counts",
            Suite::Hclasses => "hclasses",
        }
    }

    /// Largest rank the suite runs at without `--force`.
    pub fn limit(self) -> usize {
        match self {
            Suite::Relations => 10,
            Suite::Irreducible => 6,
            Suite::Generation | Suite::Lengths | Suite::Counts | Suite::Hclasses => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

/// One checked statement with the value the formula predicts and the value
/// computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub suite: Suite,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: usize,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            writeln!(
                f,
                "{} {}: {} (expected {}, computed {})",
                if c.pass { "PASS" } else { "FAIL" },
                c.suite,
                c.claim,
                c.expected,
                c.computed
            )?;
        }
        let failed = self.claims.iter().filter(|c| !c.pass).count();
        write!(
            f,
            "n={}: {} claims, {} failed",
            self.n,
            self.claims.len(),
            failed
        )
    }
}

fn claim(
    suite: Suite,
    text: impl Into<String>,
    expected: impl ToString,
    computed: impl ToString,
) -> Claim {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    Claim {
        suite,
        claim: text.into(),
        pass: expected == computed,
        expected,
        computed,
    }
}

/// Runs `suites` at rank `n`. With `force` the per-suite limits are lifted.
pub fn run(n: usize, suites: &[Suite], force: bool) -> Result<Report> {
    if !(2..=MAX_RANK).contains(&n) {
        return Err(brauer_core::Error::InvalidRank(n).into());
    }
    let mut claims = Vec::new();
    for &suite in suites {
        let limit = if force { MAX_RANK } else { suite.limit() };
        if n > limit {
            return Err(brauer_core::Error::LimitExceeded { n, limit }.into());
        }
        claims.extend(match suite {
            Suite::Relations => relations(n)?,
            Suite::Generation => generation(n, limit)?,
            Suite::Irreducible => irreducible(n, limit)?,
            Suite::Lengths => lengths(n, limit)?,
            Suite::Counts => counts(n, limit)?,
            Suite::Hclasses => hclasses(n, limit)?,
        });
    }
    Ok(Report { n, claims })
}

fn relations(n: usize) -> Result<Vec<Claim>> {
    Ok(check_all_relations(n)?
        .into_iter()
        .map(|c| {
            let text = if c.applicable() {
                format!(
                    "relation {} holds on all {} index tuples",
                    c.relation, c.instances
                )
            } else {
                format!("relation {} has no index tuples at this rank", c.relation)
            };
            claim(
                Suite::Relations,
                text,
                "0 violations",
                format!("{} violations", c.violations.len()),
            )
        })
        .collect())
}

fn generation(n: usize, limit: usize) -> Result<Vec<Claim>> {
    let member = closure(n, &atoms(n), limit)?;
    let mut reached = 0u64;
    let mut outside = 0u64;
    for (pi, &m) in enumerate_all_with_limit(n, limit)?.zip(&member) {
        if m {
            reached += 1;
            if pi.corank() < 2 {
                outside += 1;
            }
        }
    }
    let (checked, failures) = parallel::decompose_round_trip(n, limit)?;
    Ok(vec![
        claim(
            Suite::Generation,
            "atoms generate exactly the non-invertible elements, (2n-1)!! - n!",
            singular_part_order(n),
            reached - outside,
        ),
        claim(
            Suite::Generation,
            "products of atoms are never invertible",
            0,
            outside,
        ),
        claim(
            Suite::Generation,
            "every non-invertible element factors into atoms by the constructive decomposition",
            checked,
            checked - failures.len() as u64,
        ),
    ])
}

fn irreducible(n: usize, limit: usize) -> Result<Vec<Claim>> {
    let report = is_irreducible_generator_check_with_limit(n, limit)?;
    let good = report.atoms.iter().filter(|&&(_, ok)| ok).count();
    Ok(vec![claim(
        Suite::Irreducible,
        "no atom is a product of the other atoms",
        binomial(n, 2),
        good,
    )])
}

fn lengths(n: usize, limit: usize) -> Result<Vec<Claim>> {
    let table = cache::load_or_compute(None, n, limit)?;
    let mut h1 = 0u64;
    let mut agree = 0u64;
    for pi in enumerate_all_with_limit(n, limit)? {
        if let Ok(c) = cyclic_decomposition(&pi) {
            h1 += 1;
            if table.get(&pi) == Some(c.len()) && c.word().phi() == pi {
                agree += 1;
            }
        }
    }
    Ok(vec![
        claim(
            Suite::Lengths,
            "maximal length is floor(3n/2) - 2",
            max_atom_length(n),
            table.max(),
        ),
        claim(
            Suite::Lengths,
            format!("ls = (n-2) - s + c + 1 on all {h1} elements of the H-class of the atom (1,2)"),
            factorial(n - 2),
            agree,
        ),
    ])
}

fn counts(n: usize, limit: usize) -> Result<Vec<Claim>> {
    let classes = count_classes_with_limit(n, limit)?;
    let table = count_paths_all(n, limit)?;
    let cells: Vec<u64> = table.iter().flatten().copied().collect();
    let (lo, hi) = (
        cells.iter().min().copied().unwrap_or(0),
        cells.iter().max().copied().unwrap_or(0),
    );
    let loops: Vec<u64> = (0..table.len()).map(|v| table[v][v]).collect();
    let loops_ok = loops.iter().all(|&c| c == factorial(n - 2));
    let range = |lo: u64, hi: u64| {
        if lo == hi {
            lo.to_string()
        } else {
            format!("{lo}..{hi}")
        }
    };
    Ok(vec![
        claim(
            Suite::Counts,
            "classes of connected sequences: n(n-1)n!/4",
            connected_class_count(n),
            classes,
        ),
        claim(
            Suite::Counts,
            format!(
                "path classes between each of the {} ordered endpoint pairs: (n-2)!",
                cells.len()
            ),
            factorial(n - 2),
            range(lo, hi),
        ),
        claim(
            Suite::Counts,
            "loop classes at every vertex: (n-2)!",
            factorial(n - 2),
            if loops_ok {
                factorial(n - 2).to_string()
            } else {
                format!("{loops:?}")
            },
        ),
    ])
}

fn hclasses(n: usize, limit: usize) -> Result<Vec<Claim>> {
    type Key = (Vec<(u8, u8)>, Vec<(u8, u8)>);
    let mut classes: HashMap<Key, u64> = HashMap::new();
    for pi in enumerate_all_with_limit(n, limit)? {
        *classes
            .entry((pi.left_brackets().collect(), pi.right_brackets().collect()))
            .or_default() += 1;
    }
    let mut by_k: Vec<Vec<u64>> = vec![Vec::new(); n / 2 + 1];
    for ((left, _), size) in classes {
        by_k[left.len()].push(size);
    }
    Ok(by_k
        .into_iter()
        .enumerate()
        .map(|(k, sizes)| {
            let lo = sizes.iter().min().copied().unwrap_or(0);
            let hi = sizes.iter().max().copied().unwrap_or(0);
            claim(
                Suite::Hclasses,
                format!(
                    "all {} H-classes of corank {} have (n-2k)! elements",
                    sizes.len(),
                    2 * k
                ),
                factorial(n - 2 * k),
                if lo == hi {
                    lo.to_string()
                } else {
                    format!("{lo}..{hi}")
                },
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_ranks() {
        for n in 2..=5 {
            let report = run(n, &Suite::ALL, false).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn generation_reports_reachable_count() {
        let report = run(5, &[Suite::Generation], false).unwrap();
        assert_eq!(report.claims[0].computed, "825");
    }

    #[test]
    fn hclass_sizes() {
        let report = run(6, &[Suite::Hclasses], false).unwrap();
        let computed: Vec<&str> = report.claims.iter().map(|c| c.computed.as_str()).collect();
        assert_eq!(computed, ["720", "24", "2", "1"]);
        assert!(report.passed());
    }

    #[test]
    fn limits_and_names() {
        assert!(matches!(
            run(7, &[Suite::Irreducible], false),
            Err(Error::Domain(_))
        ));
        assert!(run(1, &[Suite::Relations], false).is_err());
        assert_eq!("counts".parse::<Suite>().unwrap(), Suite::Counts);
        assert!("count".parse::<Suite>().is_err());
    }
}
