//! Parameterized families of abelian groups: the six family tables and their
//! products, with exact membership and bounded enumeration.

mod pattern;
mod tables;

use std::collections::HashSet;

use crate::abelian::AbelianGroup;
use crate::error::{InputError, ResourceError};
use crate::extensions::GroupSet;

pub use pattern::{FamilyPattern, Slot};
pub use tables::{render_text as render_tables_text, tables, Table, TableRow};

/// Largest order bound `enumerate_family` accepts.
pub const MAX_ENUMERATION_BOUND: u128 = 1 << 20;

pub const BUILTIN_FAMILIES: [&str; 10] =
    ["A1", "A2", "A3p", "B3p", "PA4p", "PB4p", "A2xA2", "A1xA3p", "B2xB2", "B1xB3p"];

/// A named union of table rows plus finitely many extra groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    name: String,
    patterns: Vec<FamilyPattern>,
    exceptional: GroupSet,
}

impl Family {
    pub fn new(name: impl Into<String>, patterns: Vec<FamilyPattern>) -> Self {
        Self { name: name.into(), patterns, exceptional: GroupSet::new() }
    }

    pub fn with_exceptional(mut self, members: GroupSet) -> Self {
        self.exceptional = members;
        self
    }

    /// One of [`BUILTIN_FAMILIES`]. The product families are computed with
    /// [`family_product`]; B1 = A1 and B2 = A2.
    pub fn builtin(name: &str) -> Result<Family, InputError> {
        let table = |n: u8| tables::TABLES[usize::from(n) - 1].family();
        let product = |a: u8, b: u8| family_product(&table(a), &table(b)).renamed(name);
        Ok(match name {
            "A1" => table(1),
            "A2" => table(2),
            "A3p" => table(3),
            "B3p" => table(4),
            "PA4p" => table(5),
            "PB4p" => table(6),
            "A2xA2" | "B2xB2" => product(2, 2),
            "A1xA3p" => product(1, 3),
            "B1xB3p" => product(1, 4),
            _ => return Err(InputError::UnknownFamily(name.to_string())),
        })
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &[FamilyPattern] {
        &self.patterns
    }

    pub fn exceptional_members(&self) -> &GroupSet {
        &self.exceptional
    }

    /// Copy with the 1-based row `index` removed; used to plant faults.
    pub fn without_row(&self, index: usize) -> Family {
        let mut f = self.clone();
        f.patterns.remove(index - 1);
        f
    }

    pub fn contains(&self, g: &AbelianGroup) -> bool {
        self.exceptional.contains(g) || self.patterns.iter().any(|p| p.matches(g))
    }
}

pub fn matches(g: &AbelianGroup, pattern: &FamilyPattern) -> bool {
    pattern.matches(g)
}

pub fn family_contains(g: &AbelianGroup, f: &Family) -> bool {
    f.contains(g)
}

/// F1 × F2 at the pattern level. Exceptional members become fixed-slot
/// patterns first; duplicates are dropped only when their sorted slot
/// lists coincide.
pub fn family_product(f1: &Family, f2: &Family) -> Family {
    let lift = |f: &Family| -> Vec<FamilyPattern> {
        f.patterns.iter().cloned().chain(f.exceptional.iter().map(FamilyPattern::from_group)).collect()
    };
    let (left, right) = (lift(f1), lift(f2));
    let mut seen = HashSet::new();
    let mut patterns = Vec::new();
    for a in &left {
        for b in &right {
            let p = a.concat(b);
            if seen.insert(p.canonical_key()) {
                patterns.push(p);
            }
        }
    }
    Family::new(format!("{}x{}", f1.name, f2.name), patterns)
}

/// All members of `f` of order at most `bound`.
pub fn enumerate_family(f: &Family, bound: u128) -> Result<GroupSet, crate::Error> {
    if bound == 0 {
        return Err(InputError::ZeroBound.into());
    }
    if bound > MAX_ENUMERATION_BOUND {
        return Err(ResourceError::EnumerationBound { bound, limit: MAX_ENUMERATION_BOUND }.into());
    }
    let mut out: GroupSet = f.exceptional.iter().filter(|g| g.order_saturating() <= bound).cloned().collect();
    for p in &f.patterns {
        p.enumerate(bound, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::parse_group;

    fn g(s: &str) -> AbelianGroup {
        parse_group(s).unwrap()
    }

    fn gs(items: &[&str]) -> GroupSet {
        items.iter().map(|s| g(s)).collect()
    }

    fn fam(name: &str) -> Family {
        Family::builtin(name).unwrap()
    }

    fn slots(f: &Family) -> Vec<Vec<Slot>> {
        f.patterns().iter().map(|p| p.canonical_key()).collect()
    }

    #[test]
    fn row_counts() {
        let counts: Vec<usize> = ["A1", "A2", "A3p", "B3p", "PA4p", "PB4p"].iter().map(|n| fam(n).patterns().len()).collect();
        assert_eq!(counts, vec![2, 5, 7, 11, 11, 17]);
        assert_eq!(fam("A2xA2").patterns().len(), 15);
        assert_eq!(fam("B2xB2").patterns().len(), 15);
        assert!(Family::builtin("A3").is_err());
    }

    #[test]
    fn fourth_power_of_z4_outside_pa4() {
        let x = g("Z/4^5");
        assert!(fam("PA4p").patterns().iter().all(|p| !p.matches(&x)));
        assert!(fam("PA4p").patterns()[7].matches(&g("Z/4^4 x Z/2^2")));
        assert!(family_contains(&x, &fam("PB4p")));
    }

    #[test]
    fn contains_examples() {
        assert!(family_contains(&g("Z/3^3"), &fam("A2")));
        assert!(family_contains(&g("Z/3^6"), &fam("PA4p")));
        assert!(!family_contains(&g("Z/3^6"), &fam("A1xA3p")));
        assert!(!family_contains(&g("Z/4^4 x Z/2^2"), &fam("A1xA3p")));
        assert!(family_contains(&g("Z/4^4 x Z/2^2"), &fam("A2xA2")));
    }

    #[test]
    fn product_of_a1_with_itself() {
        let f = family_product(&fam("A1"), &fam("A1"));
        let two = Slot::Fixed(2);
        assert_eq!(
            slots(&f),
            vec![vec![Slot::Free, Slot::Free], vec![Slot::Free, two, two], vec![two, two, two, two]]
        );
    }

    #[test]
    fn exceptional_members_lift_to_fixed_slots() {
        let f = Family::new("E", vec![]).with_exceptional(gs(&["Z/6^2"]));
        let p = family_product(&f, &fam("A1"));
        assert!(p.contains(&g("Z/6^2 x Z/5")));
        assert!(p.contains(&g("Z/6^2 x Z/2^2")));
        assert!(!p.contains(&g("Z/6 x Z/5")));
        assert_eq!(enumerate_family(&f, 36).unwrap(), gs(&["Z/6^2"]));
        assert!(enumerate_family(&f, 35).unwrap().is_empty());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_family(&fam("A1"), 8).unwrap(),
            gs(&["1", "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/7", "Z/8", "Z/2^2"])
        );
        assert_eq!(enumerate_family(&fam("A2"), 4).unwrap(), gs(&["1", "Z/2", "Z/3", "Z/4", "Z/2^2"]));
        assert!(enumerate_family(&fam("A1"), 0).is_err());
        assert!(matches!(
            enumerate_family(&fam("A1"), MAX_ENUMERATION_BOUND + 1),
            Err(crate::Error::Resource(ResourceError::EnumerationBound { .. }))
        ));
    }

    #[test]
    fn enumeration_round_trips_and_grows() {
        for name in BUILTIN_FAMILIES {
            let f = fam(name);
            let small = enumerate_family(&f, 48).unwrap();
            let large = enumerate_family(&f, 96).unwrap();
            assert!(small.is_subset(&large), "{name}");
            for x in &large {
                assert!(f.contains(x), "{name}: {x}");
                assert!(x.order().unwrap() <= 96);
            }
        }
    }

    #[test]
    fn product_a1_a2_is_table_3() {
        let prod = family_product(&fam("A1"), &fam("A2"));
        assert_eq!(enumerate_family(&prod, 128).unwrap(), enumerate_family(&fam("A3p"), 128).unwrap());
    }

    #[test]
    fn a2_contains_a1_squared() {
        let sq = family_product(&fam("A1"), &fam("A1"));
        for bound in [8, 32, 64, 200] {
            let a2 = enumerate_family(&fam("A2"), bound).unwrap();
            let prod = enumerate_family(&sq, bound).unwrap();
            assert!(prod.is_subset(&a2));
            let extra = a2.difference(&prod);
            let expected: GroupSet = gs(&["Z/4^2 x Z/2", "Z/3^3"])
                .into_iter()
                .filter(|x| x.order().unwrap() <= bound)
                .collect();
            assert_eq!(extra, expected, "bound {bound}");
        }
    }

    #[test]
    fn every_row_matches_its_instantiations() {
        for t in tables() {
            let f = fam(t.family);
            for p in f.patterns() {
                for k in 1..=3 {
                    let params = vec![k; p.labels().len()];
                    assert!(p.matches(&p.instantiate_params(&params).unwrap()), "{p} at {k}");
                }
            }
        }
    }

    #[test]
    fn table_text_layout() {
        let text = render_tables_text(&tables()[..2]);
        let expected = "\
Table 1. The set of groups A1 = B1.
(1) Z/k  where k >= 1
(2) (Z/2)^2

Table 2. The set of groups A2 = B2.
(1) Z/k x Z/l  where k >= 1, l >= 1
(2) Z/2k x (Z/2)^2  where k >= 1
(3) (Z/4)^2 x Z/2
(4) (Z/3)^3
(5) (Z/2)^4
";
        assert_eq!(text, expected);
    }
}
