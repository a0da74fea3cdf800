//! Abelian extensions H • K decided and enumerated through per-prime
//! Littlewood-Richardson positivity.

mod oracle;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::abelian::AbelianGroup;
use crate::error::InputError;
use crate::lr::{lr_expand_cached, lr_positive};
use crate::partition::Partition;

pub use oracle::{brute_force_is_extension, OracleConfig, DEFAULT_ORACLE_BOUND};

/// A finite set of groups, iterated by order and then by type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupSet {
    members: BTreeSet<AbelianGroup>,
}

impl GroupSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(g: AbelianGroup) -> Self {
        Self { members: BTreeSet::from([g]) }
    }

    pub fn insert(&mut self, g: AbelianGroup) -> bool {
        self.members.insert(g)
    }

    pub fn contains(&self, g: &AbelianGroup) -> bool {
        self.members.contains(g)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &AbelianGroup> + '_ {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &GroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The `+` of group sets.
    pub fn union(&self, other: &GroupSet) -> GroupSet {
        self.members.union(&other.members).cloned().collect()
    }

    pub fn difference(&self, other: &GroupSet) -> GroupSet {
        self.members.difference(&other.members).cloned().collect()
    }

    pub fn retain(&mut self, f: impl FnMut(&AbelianGroup) -> bool) {
        self.members.retain(f);
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.members.iter().map(ToString::to_string).collect()
    }
}

impl FromIterator<AbelianGroup> for GroupSet {
    fn from_iter<I: IntoIterator<Item = AbelianGroup>>(iter: I) -> Self {
        Self { members: iter.into_iter().collect() }
    }
}

impl Extend<AbelianGroup> for GroupSet {
    fn extend<I: IntoIterator<Item = AbelianGroup>>(&mut self, iter: I) {
        self.members.extend(iter);
    }
}

impl IntoIterator for GroupSet {
    type Item = AbelianGroup;
    type IntoIter = std::collections::btree_set::IntoIter<AbelianGroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

impl<'a> IntoIterator for &'a GroupSet {
    type Item = &'a AbelianGroup;
    type IntoIter = std::collections::btree_set::Iter<'a, AbelianGroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Display for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for GroupSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.members.iter().map(ToString::to_string))
    }
}

fn primes_of<'a>(groups: impl IntoIterator<Item = &'a AbelianGroup>) -> BTreeSet<u64> {
    groups.into_iter().flat_map(AbelianGroup::primes).collect()
}

/// Whether G is an extension of K by H, i.e. 0 → H → G → K → 0 is exact
/// for some maps. Decided prime by prime via c^{type G_p}_{type H_p, type K_p} > 0.
pub fn is_extension(g: &AbelianGroup, h: &AbelianGroup, k: &AbelianGroup) -> bool {
    primes_of([g, h, k])
        .into_iter()
        .all(|p| lr_positive(&h.type_at(p), &k.type_at(p), &g.type_at(p)))
}

/// All G (up to isomorphism) with 0 → H → G → K → 0 exact.
pub fn extension_set(h: &AbelianGroup, k: &AbelianGroup) -> GroupSet {
    // Partial products over the primes handled so far.
    let mut partial: Vec<Vec<(u64, Partition)>> = vec![Vec::new()];
    for p in primes_of([h, k]) {
        let expansion = lr_expand_cached(&h.type_at(p), &k.type_at(p));
        let mut next = Vec::with_capacity(partial.len() * expansion.len());
        for prefix in &partial {
            for mu in expansion.support() {
                let mut types = prefix.clone();
                types.push((p, mu.clone()));
                next.push(types);
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|types| AbelianGroup::from_types(types).expect("primes come from existing groups"))
        .collect()
}

/// A × B: all pairwise direct products.
pub fn set_product(a: &GroupSet, b: &GroupSet) -> Result<GroupSet, InputError> {
    if a.is_empty() || b.is_empty() {
        return Err(InputError::EmptySet);
    }
    Ok(a.iter()
        .flat_map(|h| b.iter().map(move |k| h.direct_product(k)))
        .collect())
}

/// A • B: every abelian extension of a member of B by a member of A.
pub fn set_extension(a: &GroupSet, b: &GroupSet) -> Result<GroupSet, InputError> {
    if a.is_empty() || b.is_empty() {
        return Err(InputError::EmptySet);
    }
    let mut out = GroupSet::new();
    for h in a {
        for k in b {
            out.extend(extension_set(h, k));
        }
    }
    Ok(out)
}

/// Group whose p-type is the row-wise sum of the p-types of H and K.
pub fn componentwise_sum_group(h: &AbelianGroup, k: &AbelianGroup) -> AbelianGroup {
    let types = primes_of([h, k])
        .into_iter()
        .map(|p| (p, h.type_at(p).componentwise_sum(&k.type_at(p))));
    AbelianGroup::from_types(types).expect("primes come from existing groups")
}

/// Memo of [`extension_set`] for sweeps that revisit the same pairs.
#[derive(Default)]
pub struct ExtensionCache {
    table: HashMap<(AbelianGroup, AbelianGroup), GroupSet>,
}

impl ExtensionCache {
    pub fn get(&mut self, h: &AbelianGroup, k: &AbelianGroup) -> &GroupSet {
        self.table
            .entry((h.clone(), k.clone()))
            .or_insert_with(|| extension_set(h, k))
    }
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

    #[test]
    fn is_extension_examples() {
        assert!(is_extension(&g("Z/8 x Z/4"), &g("Z/4 x Z/2"), &g("Z/2^2")));
        assert!(is_extension(&g("Z/4^5"), &g("Z/4^2 x Z/2"), &g("Z/4^2 x Z/2")));
        for s in ["1", "Z/12 x Z/2", "Z/4^5", "Z/6^3 x Z/2"] {
            assert!(is_extension(&g(s), &g(s), &g("1")));
            assert!(is_extension(&g(s), &g("1"), &g(s)));
        }
        assert!(!is_extension(&g("Z/16"), &g("Z/4 x Z/2"), &g("Z/2^2")));
        assert!(!is_extension(&g("Z/6"), &g("Z/2"), &g("Z/2")));
    }

    #[test]
    fn extension_set_examples() {
        assert_eq!(
            extension_set(&g("Z/4 x Z/2"), &g("Z/2^2")),
            gs(&["Z/8 x Z/4", "Z/8 x Z/2^2", "Z/4^2 x Z/2", "Z/4 x Z/2^3"])
        );
        for s in ["1", "Z/10", "Z/6^2 x Z/3^2"] {
            assert_eq!(extension_set(&g(s), &g("1")), gs(&[s]));
        }
        assert_eq!(
            extension_set(&g("Z/3^3"), &g("Z/3^3")),
            gs(&["Z/3^6", "Z/9 x Z/3^4", "Z/9^2 x Z/3^2", "Z/9^3"])
        );
    }

    #[test]
    fn mixed_primes_multiply_supports() {
        // Z/2 • Z/2 has two choices at p = 2, Z/3 • Z/3 two at p = 3
        let set = extension_set(&g("Z/6"), &g("Z/6"));
        assert_eq!(set, gs(&["Z/36", "Z/12 x Z/3", "Z/18 x Z/2", "Z/6^2"]));
    }

    #[test]
    fn iteration_order_is_order_then_type() {
        let set = extension_set(&g("Z/4 x Z/2"), &g("Z/2^2"));
        assert_eq!(
            set.to_strings(),
            vec!["Z/8 x Z/4", "Z/8 x Z/2^2", "Z/4^2 x Z/2", "Z/4 x Z/2^3"]
        );
        let mixed = gs(&["Z/3", "Z/2^2", "Z/4", "1"]);
        assert_eq!(mixed.to_strings(), vec!["1", "Z/3", "Z/4", "Z/2^2"]);
    }

    #[test]
    fn set_product_examples() {
        assert_eq!(set_product(&gs(&["Z/2"]), &gs(&["Z/3"])).unwrap(), gs(&["Z/6"]));
        let b = gs(&["Z/4", "Z/3^3", "Z/2^2"]);
        assert_eq!(set_product(&gs(&["1"]), &b).unwrap(), b);
        assert_eq!(set_product(&gs(&["Z/3^3"]), &gs(&["Z/3^3"])).unwrap(), gs(&["Z/3^6"]));
        assert_eq!(set_product(&GroupSet::new(), &b), Err(InputError::EmptySet));
    }

    #[test]
    fn set_extension_examples() {
        assert_eq!(
            set_extension(&gs(&["Z/4 x Z/2"]), &gs(&["Z/2^2"])).unwrap(),
            gs(&["Z/8 x Z/4", "Z/8 x Z/2^2", "Z/4^2 x Z/2", "Z/4 x Z/2^3"])
        );
        let a = gs(&["Z/4", "Z/2^2", "Z/3"]);
        let b = gs(&["Z/2", "Z/9"]);
        let prod = set_product(&a, &b).unwrap();
        assert!(prod.is_subset(&set_extension(&a, &b).unwrap()));
        let five = set_extension(&gs(&["Z/2^4"]), &gs(&["Z/2^4"])).unwrap();
        assert_eq!(five, gs(&["Z/4^4", "Z/4^3 x Z/2^2", "Z/4^2 x Z/2^4", "Z/4 x Z/2^6", "Z/2^8"]));
        assert_eq!(set_extension(&a, &GroupSet::new()), Err(InputError::EmptySet));
    }

    #[test]
    fn extension_set_agrees_with_is_extension() {
        let small = ["1", "Z/2", "Z/4", "Z/2^2", "Z/8", "Z/4 x Z/2", "Z/2^3", "Z/3", "Z/6", "Z/3^2"];
        for h in small {
            for k in small {
                let set = extension_set(&g(h), &g(k));
                for x in &set {
                    assert!(is_extension(x, &g(h), &g(k)));
                }
            }
        }
    }

    #[test]
    fn cache_returns_same_sets() {
        let mut cache = ExtensionCache::default();
        let a = cache.get(&g("Z/4"), &g("Z/2")).clone();
        assert_eq!(a, extension_set(&g("Z/4"), &g("Z/2")));
        assert_eq!(cache.get(&g("Z/4"), &g("Z/2")), &a);
    }
}
