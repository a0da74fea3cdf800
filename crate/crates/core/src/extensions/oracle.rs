//! Element-level check of the extension criterion, independent of any
//! tableau combinatorics.
//!
//! For each prime the group ⊕ ℤ/p^{μ_i} is built explicitly and its
//! subgroups are enumerated bottom-up. Each subgroup S of order p^{m+1} is
//! S' + ⟨g⟩ for a subgroup S' of order p^m and some g with pg ∈ S', so
//! growing one index-p step at a time reaches every subgroup. Isomorphism
//! types of S and G/S are read off from the counts |S[p^j]| and
//! |(G/S)[p^j]|, using |A[p^j]| = p^{Σ_i min(a_i, j)}.

use std::collections::HashSet;

use crate::abelian::AbelianGroup;
use crate::error::ResourceError;
use crate::partition::Partition;

/// Default limit on the order of each p-part handed to the oracle.
pub const DEFAULT_ORACLE_BOUND: u128 = 1 << 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest p-part order (of G) the oracle will materialize.
    pub max_p_part_order: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { max_p_part_order: DEFAULT_ORACLE_BOUND }
    }
}

/// Explicit finite abelian p-group with elements encoded in mixed radix.
struct PGroup {
    p: u64,
    order: usize,
    // digits[x] are the coordinates of element x
    digits: Vec<Vec<u64>>,
    moduli: Vec<u64>,
    strides: Vec<usize>,
    // times_p[x] = p·x
    times_p: Vec<u32>,
    // height[x] = least j with p^j·x = 0
    height: Vec<u32>,
    max_exp: u32,
}

impl PGroup {
    fn new(p: u64, ty: &Partition) -> Self {
        let moduli: Vec<u64> = ty.parts().iter().map(|&e| p.pow(e)).collect();
        let order: usize = moduli.iter().product::<u64>() as usize;
        let mut strides = Vec::with_capacity(moduli.len());
        let mut s = 1usize;
        for &m in &moduli {
            strides.push(s);
            s *= m as usize;
        }
        let digits: Vec<Vec<u64>> = (0..order)
            .map(|x| moduli.iter().zip(&strides).map(|(&m, &st)| ((x / st) as u64) % m).collect())
            .collect();
        let mut group = PGroup {
            p,
            order,
            digits,
            moduli,
            strides,
            times_p: Vec::new(),
            height: Vec::new(),
            max_exp: ty.first(),
        };
        group.times_p = (0..order)
            .map(|x| {
                let d: Vec<u64> = group.digits[x].iter().map(|&v| v * p).collect();
                group.encode(&d) as u32
            })
            .collect();
        group.height = (0..order)
            .map(|x| {
                let mut y = x;
                let mut j = 0;
                while y != 0 {
                    y = group.times_p[y] as usize;
                    j += 1;
                }
                j
            })
            .collect();
        group
    }

    fn encode(&self, d: &[u64]) -> usize {
        d.iter()
            .zip(&self.moduli)
            .zip(&self.strides)
            .map(|((&v, &m), &st)| (v % m) as usize * st)
            .sum()
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let d: Vec<u64> = self.digits[a].iter().zip(&self.digits[b]).map(|(x, y)| x + y).collect();
        self.encode(&d)
    }

    /// log_p of an exact power of p.
    fn log_p(&self, mut n: usize) -> u32 {
        let mut k = 0;
        while n > 1 {
            debug_assert_eq!(n % self.p as usize, 0);
            n /= self.p as usize;
            k += 1;
        }
        k
    }

    /// Recovers a type from the sequence f(j) = log_p |A[p^j]|, j = 0..=max.
    fn type_from_torsion_logs(logs: &[u32]) -> Partition {
        // f(j) - f(j-1) counts the parts ≥ j: the conjugate partition
        let conj = logs.windows(2).map(|w| w[1] - w[0]);
        Partition::from_parts(conj).conjugate()
    }

    fn subgroup_type(&self, elems: &[u32]) -> Partition {
        let logs: Vec<u32> = (0..=self.max_exp)
            .map(|j| self.log_p(elems.iter().filter(|&&x| self.height[x as usize] <= j).count()))
            .collect();
        Self::type_from_torsion_logs(&logs)
    }

    fn quotient_type(&self, members: &Bitset, size: usize) -> Partition {
        // scaled[x] = p^j·x, advanced one power at a time
        let mut scaled: Vec<u32> = (0..self.order as u32).collect();
        let mut logs = Vec::with_capacity(self.max_exp as usize + 1);
        for j in 0..=self.max_exp {
            if j > 0 {
                for y in scaled.iter_mut() {
                    *y = self.times_p[*y as usize];
                }
            }
            let hits = scaled.iter().filter(|&&y| members.get(y as usize)).count();
            logs.push(self.log_p(hits / size));
        }
        Self::type_from_torsion_logs(&logs)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
}

struct Subgroup {
    elems: Vec<u32>,
    members: Bitset,
}

/// Does the p-group of type `outer` have a subgroup of type `sub` with
/// quotient of type `quot`?
fn has_subgroup_with_quotient(p: u64, outer: &Partition, sub: &Partition, quot: &Partition) -> bool {
    if outer.size() != sub.size() + quot.size() {
        return false;
    }
    let group = PGroup::new(p, outer);
    let target = sub.size();

    let mut zero = Bitset::new(group.order);
    zero.set(0);
    let mut level = vec![Subgroup { elems: vec![0], members: zero }];
    for _ in 0..target {
        let mut seen: HashSet<Bitset> = HashSet::new();
        let mut next = Vec::new();
        for s in &level {
            let mut covered = s.members.clone();
            for g in 0..group.order {
                if covered.get(g) || !s.members.get(group.times_p[g] as usize) {
                    continue;
                }
                // S + ⟨g⟩ = S ∪ (S + g) ∪ … ∪ (S + (p-1)g) since pg ∈ S
                let mut elems = s.elems.clone();
                let mut members = s.members.clone();
                let mut shift = 0usize;
                for _ in 1..p {
                    shift = group.add(shift, g);
                    for &x in &s.elems {
                        let y = group.add(x as usize, shift);
                        members.set(y);
                        elems.push(y as u32);
                    }
                }
                for &y in &elems {
                    covered.set(y as usize);
                }
                // every subgroup of a group of type `sub` has type inside `sub`
                if !sub.contains(&group.subgroup_type(&elems)) {
                    continue;
                }
                if seen.insert(members.clone()) {
                    next.push(Subgroup { elems, members });
                }
            }
        }
        level = next;
        if level.is_empty() {
            return false;
        }
    }
    level.iter().any(|s| {
        group.subgroup_type(&s.elems) == *sub && group.quotient_type(&s.members, s.elems.len()) == *quot
    })
}

/// Decides whether 0 → H → G → K → 0 can be exact by searching the
/// subgroups of each explicit p-part of G. Every p-part of G must have
/// order at most `config.max_p_part_order`.
pub fn brute_force_is_extension(
    g: &AbelianGroup,
    h: &AbelianGroup,
    k: &AbelianGroup,
    config: OracleConfig,
) -> Result<bool, ResourceError> {
    for (&p, ty) in g.parts_by_prime() {
        let order = (p as u128).checked_pow(ty.size()).unwrap_or(u128::MAX);
        if order > config.max_p_part_order {
            return Err(ResourceError::OracleBound { prime: p, order, limit: config.max_p_part_order });
        }
    }
    let primes: std::collections::BTreeSet<u64> = g.primes().chain(h.primes()).chain(k.primes()).collect();
    Ok(primes.into_iter().all(|p| {
        let (outer, sub, quot) = (g.type_at(p), h.type_at(p), k.type_at(p));
        // A finite abelian group is isomorphic to its dual, and S ↦ S^⊥
        // swaps subgroup and quotient; search on whichever side is smaller.
        if quot.size() < sub.size() {
            has_subgroup_with_quotient(p, &outer, &quot, &sub)
        } else {
            has_subgroup_with_quotient(p, &outer, &sub, &quot)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::parse_group;

    fn g(s: &str) -> AbelianGroup {
        parse_group(s).unwrap()
    }

    fn check(x: &str, h: &str, k: &str) -> bool {
        brute_force_is_extension(&g(x), &g(h), &g(k), OracleConfig::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(check("Z/8 x Z/2^2", "Z/4 x Z/2", "Z/2^2"));
        assert!(!check("Z/16", "Z/4 x Z/2", "Z/2^2"));
        assert!(check("Z/4 x Z/2^3", "Z/4 x Z/2", "Z/2^2"));
        assert!(check("Z/4^2", "Z/2^2", "Z/2^2"));
        assert!(!check("Z/4^2", "Z/4", "Z/2^2"));
        assert!(check("Z/6", "Z/3", "Z/2"));
        assert!(!check("Z/6", "Z/2", "Z/2"));
    }

    #[test]
    fn both_search_directions_agree() {
        for (x, a, b) in [("Z/8 x Z/2", "Z/4", "Z/2^2"), ("Z/9 x Z/3", "Z/3", "Z/9"), ("Z/4^2", "Z/4", "Z/2^2")] {
            let (x, a, b) = (g(x), g(a), g(b));
            for p in x.primes() {
                let (o, s, q) = (x.type_at(p), a.type_at(p), b.type_at(p));
                assert_eq!(has_subgroup_with_quotient(p, &o, &s, &q), has_subgroup_with_quotient(p, &o, &q, &s));
            }
        }
    }

    #[test]
    fn torsion_inversion() {
        // Z/8 x Z/2: |A[2]| = 4, |A[4]| = 8, |A[8]| = 16
        let ty = PGroup::type_from_torsion_logs(&[0, 2, 3, 4]);
        assert_eq!(ty, Partition::from_parts([3, 1]));
        let grp = PGroup::new(2, &Partition::from_parts([3, 1]));
        let all: Vec<u32> = (0..grp.order as u32).collect();
        assert_eq!(grp.subgroup_type(&all), Partition::from_parts([3, 1]));
    }

    #[test]
    fn bound_is_enforced() {
        let cfg = OracleConfig { max_p_part_order: 32 };
        let err = brute_force_is_extension(&g("Z/4^3"), &g("Z/4"), &g("Z/4^2"), cfg).unwrap_err();
        assert_eq!(err, ResourceError::OracleBound { prime: 2, order: 64, limit: 32 });
        assert!(brute_force_is_extension(&g("Z/4^2 x Z/3"), &g("Z/4"), &g("Z/12"), cfg).unwrap());
    }
}
