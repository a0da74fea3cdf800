//! Finite abelian groups, stored prime by prime as types (partitions).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::InputError;
use crate::partition::Partition;
use crate::primes::{factorize, is_prime};

/// Isomorphism class of a finite abelian group: prime ↦ type of the Sylow
/// p-subgroup. Primes with trivial p-part are absent, so the trivial group
/// is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    parts_by_prime: BTreeMap<u64, Partition>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// The p-group of the given type. `p` must be prime.
    pub fn p_group(p: u64, ty: Partition) -> Result<Self, InputError> {
        if !is_prime(p) {
            return Err(InputError::NotPrime(p));
        }
        let mut g = Self::trivial();
        if !ty.is_empty() {
            g.parts_by_prime.insert(p, ty);
        }
        Ok(g)
    }

    /// ℤ/n for n ≥ 1.
    pub fn cyclic(n: u64) -> Result<Self, InputError> {
        if n == 0 {
            return Err(InputError::ZeroModulus);
        }
        let mut g = Self::trivial();
        for (p, e) in factorize(n) {
            g.parts_by_prime.insert(p, Partition::from_parts([e]));
        }
        Ok(g)
    }

    /// Builds a group from (prime, type) pairs, checking primality.
    pub fn from_types<I>(types: I) -> Result<Self, InputError>
    where
        I: IntoIterator<Item = (u64, Partition)>,
    {
        types
            .into_iter()
            .try_fold(Self::trivial(), |acc, (p, ty)| Ok(acc.direct_product(&Self::p_group(p, ty)?)))
    }

    pub fn parts_by_prime(&self) -> &BTreeMap<u64, Partition> {
        &self.parts_by_prime
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts_by_prime.keys().copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts_by_prime.is_empty()
    }

    /// Type of the p-part; empty when p does not divide the order.
    pub fn p_part(&self, p: u64) -> Result<Partition, InputError> {
        if !is_prime(p) {
            return Err(InputError::NotPrime(p));
        }
        Ok(self.type_at(p))
    }

    /// Like [`p_part`](Self::p_part) for callers that already know `p` is prime.
    pub fn type_at(&self, p: u64) -> Partition {
        self.parts_by_prime.get(&p).cloned().unwrap_or_default()
    }

    /// Minimum number of generators: the longest p-type.
    pub fn rank(&self) -> usize {
        self.parts_by_prime.values().map(Partition::len).max().unwrap_or(0)
    }

    /// Group order, with overflow reported rather than wrapped.
    pub fn order(&self) -> Result<u128, InputError> {
        self.parts_by_prime.iter().try_fold(1u128, |acc, (&p, ty)| {
            let pp = (p as u128).checked_pow(ty.size()).ok_or(InputError::Overflow)?;
            acc.checked_mul(pp).ok_or(InputError::Overflow)
        })
    }

    /// Order, saturating at `u128::MAX`; used for sorting.
    pub(crate) fn order_saturating(&self) -> u128 {
        self.order().unwrap_or(u128::MAX)
    }

    pub fn direct_product(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut out = self.clone();
        for (&p, ty) in &other.parts_by_prime {
            let merged = out.type_at(p).union_merge(ty);
            out.parts_by_prime.insert(p, merged);
        }
        out
    }

    /// Invariant factors d₁ ≥ d₂ ≥ … with d_{i+1} | d_i, or `None` on
    /// overflow.
    pub fn invariant_factors(&self) -> Option<Vec<u128>> {
        (0..self.rank())
            .map(|i| {
                self.parts_by_prime.iter().try_fold(1u128, |acc, (&p, ty)| {
                    acc.checked_mul((p as u128).checked_pow(ty.row(i))?)
                })
            })
            .collect()
    }
}

/// Parses a group in the notation `Z/8^2 x Z/4 x Z/2`, `C6 * C3`, `1`.
pub fn parse_group(text: &str) -> Result<AbelianGroup, InputError> {
    text.parse()
}

/// Canonical text form: invariant factors, largest first, runs written
/// with exponents (`Z/6^2 x Z/3^2`), trivial group as `1`.
pub fn format_group(g: &AbelianGroup) -> String {
    g.to_string()
}

impl FromStr for AbelianGroup {
    type Err = InputError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(InputError::Syntax("empty group expression".into()));
        }
        if compact == "1" {
            return Ok(AbelianGroup::trivial());
        }
        let mut g = AbelianGroup::trivial();
        for factor in compact.split(['x', '*', '×']) {
            g = g.direct_product(&parse_factor(factor)?);
        }
        Ok(g)
    }
}

fn parse_factor(factor: &str) -> Result<AbelianGroup, InputError> {
    let syntax = || InputError::Syntax(format!("bad factor `{factor}`"));
    let (base, reps) = match factor.rsplit_once('^') {
        Some((b, r)) => (b, r.parse::<u32>().map_err(|_| syntax())?),
        None => (factor, 1),
    };
    if reps == 0 {
        return Err(syntax());
    }
    let base = base
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(base);
    let modulus = base
        .strip_prefix("Z/")
        .or_else(|| base.strip_prefix('C'))
        .ok_or_else(syntax)?;
    if modulus.is_empty() || !modulus.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax());
    }
    let n: u64 = modulus.parse().map_err(|_| syntax())?;
    let one = AbelianGroup::cyclic(n)?;
    let mut g = AbelianGroup::trivial();
    for (&p, ty) in &one.parts_by_prime {
        let repeated = Partition::from_parts(std::iter::repeat_n(ty.first(), reps as usize));
        g.parts_by_prime.insert(p, repeated);
    }
    Ok(g)
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(factors) = self.invariant_factors() else {
            // too large for invariant factors: fall back to prime powers
            let mut first = true;
            for (&p, ty) in &self.parts_by_prime {
                for &e in ty.parts() {
                    if !first {
                        f.write_str(" x ")?;
                    }
                    first = false;
                    match (p as u128).checked_pow(e) {
                        Some(q) => write!(f, "Z/{q}")?,
                        None => write!(f, "Z/({p}^{e})")?,
                    }
                }
            }
            return Ok(());
        };
        if factors.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < factors.len() {
            let d = factors[i];
            let run = factors[i..].iter().take_while(|&&x| x == d).count();
            if !first {
                f.write_str(" x ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "Z/{d}")?;
            } else {
                write!(f, "Z/{d}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl Ord for AbelianGroup {
    /// By order, then prime by prime (smallest prime first) by type.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_saturating()
            .cmp(&other.order_saturating())
            .then_with(|| self.parts_by_prime.iter().cmp(other.parts_by_prime.iter()))
    }
}

impl PartialOrd for AbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    primes: BTreeMap<String, Partition>,
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupJson {
            primes: self.parts_by_prime.iter().map(|(p, t)| (p.to_string(), t.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = GroupJson::deserialize(d)?;
        let types = raw
            .primes
            .into_iter()
            .map(|(p, t)| p.parse::<u64>().map(|p| (p, t)).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        AbelianGroup::from_types(types).map_err(D::Error::custom)
    }
}
