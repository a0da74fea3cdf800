//! Bounded checks of the classification statements for extensions of
//! groups from the family tables.
//!
//! Each claim sweeps pairs (H, K) from truncated enumerations, but tests
//! membership of the resulting groups with the untruncated pattern
//! matchers, so a pass at bound B holds for every pair inside B.

mod properties;
mod regressions;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::{parse_group, AbelianGroup};
use crate::error::Result;
use crate::extensions::{extension_set, is_extension, GroupSet};
use crate::families::{enumerate_family, family_product, Family, BUILTIN_FAMILIES};

pub use properties::DEFAULT_SEED;
pub use regressions::{symbolic_cases, SymbolicCase};

pub const DEFAULT_BOUND: u64 = 64;

pub const CLAIMS: [&str; 6] = ["prop-ext-low", "thm-main", "prop-product-types", "thm-second", "regressions", "properties"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Each produced group with the (H, K) it first came from.
pub type Sources = BTreeMap<AbelianGroup, (AbelianGroup, AbelianGroup)>;

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub claim_id: String,
    /// Order bound of the sweep; `None` for claims without a window.
    pub bound: Option<u64>,
    pub checked_pairs: u64,
    pub witnesses: GroupSet,
    /// For each witness, the first (H, K) of the sweep that produced it.
    pub sources: Sources,
    pub verdict: Verdict,
    pub vacuous: bool,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    claim_id: &'a str,
    bound: Option<u64>,
    checked_pairs: u64,
    witnesses: &'a GroupSet,
    verdict: Verdict,
    vacuous: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Exit status: 0 pass, 1 fail, 2 pass without evidence.
    pub fn exit_code(&self) -> i32 {
        match (self.verdict, self.vacuous) {
            (Verdict::Fail, _) => 1,
            (Verdict::Pass, true) => 2,
            (Verdict::Pass, false) => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let json = ReportJson {
            claim_id: &self.claim_id,
            bound: self.bound,
            checked_pairs: self.checked_pairs,
            witnesses: &self.witnesses,
            verdict: self.verdict,
            vacuous: self.vacuous,
        };
        serde_json::to_string_pretty(&json).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim_id)?;
        match self.bound {
            Some(b) => writeln!(f, "bound: {b}")?,
            None => writeln!(f, "bound: none")?,
        }
        writeln!(f, "checked pairs: {}", self.checked_pairs)?;
        writeln!(f, "witnesses: {}", self.witnesses.len())?;
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        let verdict = match (self.verdict, self.vacuous) {
            (Verdict::Fail, _) => "fail",
            (Verdict::Pass, true) => "pass (vacuous)",
            (Verdict::Pass, false) => "pass",
        };
        writeln!(f, "verdict: {verdict}")
    }
}

/// A group the claim expects to find outside the target family, together
/// with the pair that produces it.
struct Expected {
    group: &'static str,
    h: &'static str,
    k: &'static str,
}

impl Expected {
    fn in_window(&self, bound: u64) -> Option<AbelianGroup> {
        let order = |s: &str| parse_group(s).expect("built-in group").order().expect("small group");
        let fits = order(self.h) <= u128::from(bound) && order(self.k) <= u128::from(bound);
        fits.then(|| parse_group(self.group).expect("built-in group"))
    }
}

pub type ExtensionFn = dyn Fn(&AbelianGroup, &AbelianGroup) -> GroupSet + Send + Sync;

/// Families and extension routine used by the claims. The defaults are the
/// built-in tables and [`extension_set`]; both can be swapped to plant
/// faults and confirm the checks notice.
pub struct Verifier {
    families: HashMap<String, Family>,
    extend: Box<ExtensionFn>,
}

impl Default for Verifier {
    fn default() -> Self {
        let mut families: HashMap<String, Family> = BUILTIN_FAMILIES
            .iter()
            .map(|&n| (n.to_string(), Family::builtin(n).expect("built-in family")))
            .collect();
        let a1 = families["A1"].clone();
        families.insert("A1xA1".into(), family_product(&a1, &a1));
        Self { families, extend: Box::new(extension_set) }
    }
}

/// Pairs grouped by the sweep, each with the extension set it produced.
struct Sweep {
    pairs: u64,
    // first producing pair per group, in sweep order
    produced: Sources,
}

impl Sweep {
    fn new() -> Self {
        Self { pairs: 0, produced: BTreeMap::new() }
    }

    fn add(&mut self, results: Vec<(AbelianGroup, AbelianGroup, GroupSet)>) {
        self.pairs += results.len() as u64;
        for (h, k, set) in results {
            for g in set {
                self.produced.entry(g).or_insert_with(|| (h.clone(), k.clone()));
            }
        }
    }

    /// Produced groups failing `member`, with their sources.
    fn outside(&self, member: impl Fn(&AbelianGroup) -> bool + Sync) -> Sources {
        let groups: Vec<&AbelianGroup> = self.produced.keys().collect();
        let misses: Vec<&AbelianGroup> = groups.into_par_iter().filter(|g| !member(g)).collect();
        misses.into_iter().map(|g| (g.clone(), self.produced[g].clone())).collect()
    }
}

fn cartesian(a: &GroupSet, b: &GroupSet) -> Vec<(AbelianGroup, AbelianGroup)> {
    a.iter().flat_map(|h| b.iter().map(move |k| (h.clone(), k.clone()))).collect()
}

impl Verifier {
    pub fn with_family(mut self, name: &str, family: Family) -> Self {
        self.families.insert(name.to_string(), family);
        self
    }

    pub fn with_extensions(mut self, f: impl Fn(&AbelianGroup, &AbelianGroup) -> GroupSet + Send + Sync + 'static) -> Self {
        self.extend = Box::new(f);
        self
    }

    pub fn family(&self, name: &str) -> &Family {
        &self.families[name]
    }

    fn window(&self, name: &str, bound: u64) -> Result<GroupSet> {
        enumerate_family(self.family(name), u128::from(bound))
    }

    fn extensions_of(&self, pairs: Vec<(AbelianGroup, AbelianGroup)>) -> Vec<(AbelianGroup, AbelianGroup, GroupSet)> {
        pairs
            .into_par_iter()
            .map(|(h, k)| {
                let set = (self.extend)(&h, &k);
                (h, k, set)
            })
            .collect()
    }

    fn products_of(pairs: Vec<(AbelianGroup, AbelianGroup)>) -> Vec<(AbelianGroup, AbelianGroup, GroupSet)> {
        pairs
            .into_iter()
            .map(|(h, k)| {
                let g = h.direct_product(&k);
                (h, k, GroupSet::singleton(g))
            })
            .collect()
    }

    /// Sweeps the extension sets of `(first[i], second[i])` windows and
    /// collects the groups outside `target`.
    fn extension_sweep(&self, bound: u64, windows: &[(&str, &str, &str)]) -> Result<(u64, Sources)> {
        let mut pairs = 0;
        let mut outside = BTreeMap::new();
        for &(h_fam, k_fam, target) in windows {
            let mut sweep = Sweep::new();
            sweep.add(self.extensions_of(cartesian(&self.window(h_fam, bound)?, &self.window(k_fam, bound)?)));
            pairs += sweep.pairs;
            let target = self.family(target);
            for (g, src) in sweep.outside(|g| target.contains(g)) {
                outside.entry(g).or_insert(src);
            }
        }
        Ok((pairs, outside))
    }

    /// A1 • A1 ⊆ A1 × A1 and A1 • A2 ⊆ A'3.
    pub fn prop_ext_low(&self, bound: u64) -> Result<VerificationReport> {
        let start = Instant::now();
        let (pairs, outside) = self.extension_sweep(bound, &[("A1", "A1", "A1xA1"), ("A1", "A2", "A3p")])?;
        Ok(finish("prop-ext-low", bound, pairs, outside, &[], Vec::new(), start))
    }

    /// Every extension in A2 • A2 + A1 • A'3 lies in PA'4, except (Z/4)^5.
    pub fn thm_main(&self, bound: u64) -> Result<VerificationReport> {
        let start = Instant::now();
        let (pairs, outside) = self.extension_sweep(bound, &[("A2", "A2", "PA4p"), ("A1", "A3p", "PA4p")])?;
        let expected = [Expected { group: "Z/4^5", h: "Z/4^2 x Z/2", k: "Z/4^2 x Z/2" }];
        Ok(finish("thm-main", bound, pairs, outside, &expected, Vec::new(), start))
    }

    /// Every extension in B1 • B'3 + B2 • B2 lies in PB'4.
    pub fn thm_second(&self, bound: u64) -> Result<VerificationReport> {
        let start = Instant::now();
        // B1 = A1 and B2 = A2
        let (pairs, outside) = self.extension_sweep(bound, &[("A1", "B3p", "PB4p"), ("A2", "A2", "PB4p")])?;
        Ok(finish("thm-second", bound, pairs, outside, &[], Vec::new(), start))
    }

    /// A2 × A2 \ A1 × A'3 = {(Z/3)^6, (Z/4)^4 x (Z/2)^2}, together with
    /// A1 × A'3 ⊆ A2 × A2 and A1 • A'3 ⊆ A2 • A2 on the same window.
    pub fn prop_product_types(&self, bound: u64) -> Result<VerificationReport> {
        let start = Instant::now();
        let a1 = self.window("A1", bound)?;
        let a2 = self.window("A2", bound)?;
        let a3 = self.window("A3p", bound)?;
        let mut notes = Vec::new();

        let mut squares = Sweep::new();
        squares.add(Self::products_of(cartesian(&a2, &a2)));
        let target = self.family("A1xA3p");
        let mut outside = squares.outside(|g| target.contains(g));

        let mut small = Sweep::new();
        small.add(Self::products_of(cartesian(&a1, &a3)));
        let a2xa2 = self.family("A2xA2");
        for (g, src) in small.outside(|g| a2xa2.contains(g)) {
            notes.push(format!("{g} is in A1 x A'3 but not in A2 x A2"));
            outside.entry(g).or_insert(src);
        }

        let mut ext = Sweep::new();
        ext.add(self.extensions_of(cartesian(&a1, &a3)));
        let top = ext.produced.keys().map(|g| g.order_saturating()).max().unwrap_or(1);
        let a2_upto_top = enumerate_family(self.family("A2"), top)?;
        for (g, src) in ext.outside(|g| a2xa2.contains(g) || in_extensions_of(g, &a2_upto_top)) {
            notes.push(format!("{g} is in A1 • A'3 but not in A2 • A2"));
            outside.entry(g).or_insert(src);
        }

        let pairs = squares.pairs + small.pairs + ext.pairs;
        let expected = [
            Expected { group: "Z/3^6", h: "Z/3^3", k: "Z/3^3" },
            Expected { group: "Z/4^4 x Z/2^2", h: "Z/4^2 x Z/2", k: "Z/4^2 x Z/2" },
        ];
        Ok(finish("prop-product-types", bound, pairs, outside, &expected, notes, start))
    }

    pub fn run(&self, claim: &str, bound: u64, seed: u64) -> Result<VerificationReport> {
        match claim {
            "prop-ext-low" => self.prop_ext_low(bound),
            "thm-main" => self.thm_main(bound),
            "prop-product-types" => self.prop_product_types(bound),
            "thm-second" => self.thm_second(bound),
            "regressions" => Ok(regression_expansions()),
            "properties" => Ok(properties::check_properties(seed)),
            _ => Err(crate::InputError::Syntax(format!("unknown claim `{claim}`")).into()),
        }
    }
}

/// Whether G = H • K for some H, K drawn from `pool` (which must contain
/// every candidate of order up to |G|).
fn in_extensions_of(g: &AbelianGroup, pool: &GroupSet) -> bool {
    let order = g.order_saturating();
    let mut by_order: BTreeMap<u128, Vec<&AbelianGroup>> = BTreeMap::new();
    for x in pool {
        let n = x.order_saturating();
        if order.is_multiple_of(n) {
            by_order.entry(n).or_default().push(x);
        }
    }
    let inside = |x: &AbelianGroup| x.parts_by_prime().iter().all(|(&p, ty)| g.type_at(p).contains(ty));
    by_order.iter().any(|(&n, hs)| {
        let ks = by_order.get(&(order / n)).map_or(&[][..], Vec::as_slice);
        hs.iter().filter(|h| inside(h)).any(|h| ks.iter().filter(|k| inside(k)).any(|k| is_extension(g, h, k)))
    })
}

fn finish(
    claim: &str,
    bound: u64,
    pairs: u64,
    outside: Sources,
    expected: &[Expected],
    notes: Vec<String>,
    start: Instant,
) -> VerificationReport {
    let witnesses: GroupSet = outside.keys().cloned().collect();
    let expected_here: GroupSet = expected.iter().filter_map(|e| e.in_window(bound)).collect();
    let verdict = if witnesses == expected_here { Verdict::Pass } else { Verdict::Fail };
    let vacuous = verdict == Verdict::Pass && (pairs == 0 || (!expected.is_empty() && expected_here.is_empty()));
    VerificationReport {
        claim_id: claim.to_string(),
        bound: Some(bound),
        checked_pairs: pairs,
        witnesses,
        sources: outside,
        verdict,
        vacuous,
        notes,
        elapsed: start.elapsed(),
    }
}

pub fn verify_prop_ext_low(bound: u64) -> Result<VerificationReport> {
    Verifier::default().prop_ext_low(bound)
}

pub fn verify_thm_main(bound: u64) -> Result<VerificationReport> {
    Verifier::default().thm_main(bound)
}

pub fn verify_prop_product_types(bound: u64) -> Result<VerificationReport> {
    Verifier::default().prop_product_types(bound)
}

pub fn verify_thm_second(bound: u64) -> Result<VerificationReport> {
    Verifier::default().thm_second(bound)
}

pub fn regression_expansions() -> VerificationReport {
    regressions::replay()
}

pub fn verify_properties(seed: u64) -> VerificationReport {
    properties::check_properties(seed)
}
