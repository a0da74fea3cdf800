use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::abelian::AbelianGroup;
use crate::error::InputError;
use crate::primes::factorize;

/// One cyclic factor of a table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Slot {
    /// ℤ/k, k ≥ 1
    Free,
    /// ℤ/2k, k ≥ 1
    Even,
    /// ℤ/3k, k ≥ 1
    Triple,
    /// ℤ/m for a fixed m ≥ 2
    Fixed(u64),
}

impl Slot {
    pub fn is_parameterized(self) -> bool {
        !matches!(self, Slot::Fixed(_))
    }

    /// The prime a parameterized slot is forced to carry, if any.
    fn required_prime(self) -> Option<u64> {
        match self {
            Slot::Even => Some(2),
            Slot::Triple => Some(3),
            _ => None,
        }
    }

    /// Smallest order the slot can take and the step between orders.
    fn order_step(self) -> u64 {
        match self {
            Slot::Free => 1,
            Slot::Even => 2,
            Slot::Triple => 3,
            Slot::Fixed(m) => m,
        }
    }
}

/// A product of constrained cyclic slots, e.g. `Z/2k x (Z/4)^2 x Z/2`.
///
/// `labels` names the parameterized slots in order; it only affects display.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyPattern {
    slots: Vec<Slot>,
    labels: Vec<String>,
}

const DEFAULT_LABELS: [&str; 8] = ["n", "k", "l", "m", "a", "b", "c", "d"];

impl FamilyPattern {
    pub fn new(slots: Vec<Slot>) -> Result<Self, InputError> {
        let params = slots.iter().filter(|s| s.is_parameterized()).count();
        let labels = (0..params)
            .map(|i| DEFAULT_LABELS.get(i).map_or_else(|| format!("t{i}"), |s| s.to_string()))
            .collect();
        Self::with_labels(slots, labels)
    }

    fn with_labels(slots: Vec<Slot>, labels: Vec<String>) -> Result<Self, InputError> {
        if slots.iter().any(|s| matches!(s, Slot::Fixed(m) if *m < 2)) {
            return Err(InputError::Syntax("fixed cyclic slots need modulus at least 2".into()));
        }
        Ok(Self { slots, labels })
    }

    /// Fixed slots spelling out the invariant factors of `g`.
    pub fn from_group(g: &AbelianGroup) -> Self {
        let slots = g
            .invariant_factors()
            .expect("group small enough to enumerate")
            .into_iter()
            .map(|d| Slot::Fixed(d as u64))
            .collect();
        Self { slots, labels: Vec::new() }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Slots sorted; two patterns with the same key describe the same groups.
    pub fn canonical_key(&self) -> Vec<Slot> {
        let mut key = self.slots.clone();
        key.sort();
        key
    }

    /// Concatenation, with parameters relabelled in order.
    pub fn concat(&self, other: &FamilyPattern) -> FamilyPattern {
        let slots: Vec<Slot> = self.slots.iter().chain(&other.slots).copied().collect();
        FamilyPattern::new(slots).expect("slots already validated")
    }

    /// The group ∏ ℤ/n_i for concrete slot orders.
    pub fn instantiate(&self, orders: &[u64]) -> Result<AbelianGroup, InputError> {
        assert_eq!(orders.len(), self.slots.len());
        let mut g = AbelianGroup::trivial();
        for (&slot, &n) in self.slots.iter().zip(orders) {
            let ok = match slot {
                Slot::Free => n >= 1,
                Slot::Even => n >= 2 && n % 2 == 0,
                Slot::Triple => n >= 3 && n % 3 == 0,
                Slot::Fixed(m) => n == m,
            };
            if !ok {
                return Err(InputError::Syntax(format!("order {n} does not fit slot {slot:?}")));
            }
            g = g.direct_product(&AbelianGroup::cyclic(n)?);
        }
        Ok(g)
    }

    /// Instantiates the parameters (k in ℤ/k, ℤ/2k, ℤ/3k) in slot order.
    pub fn instantiate_params(&self, params: &[u64]) -> Result<AbelianGroup, InputError> {
        let mut it = params.iter();
        let orders: Vec<u64> = self
            .slots
            .iter()
            .map(|&s| match s {
                Slot::Fixed(m) => m,
                s => s.order_step() * it.next().copied().unwrap_or(1),
            })
            .collect();
        self.instantiate(&orders)
    }

    /// Whether some choice of slot orders yields a group isomorphic to `g`.
    ///
    /// Fixed slots pin their prime-power parts exactly. The remaining parts
    /// of each p-type go to distinct parameterized slots, one part per slot
    /// per prime; `Z/2k` slots must receive a part at 2 and `Z/3k` slots a
    /// part at 3. Every slot constraint names a single prime, so the
    /// assignments at different primes never interact.
    pub fn matches(&self, g: &AbelianGroup) -> bool {
        let mut remaining: BTreeMap<u64, Vec<u32>> = g
            .parts_by_prime()
            .iter()
            .map(|(&p, ty)| (p, ty.parts().to_vec()))
            .collect();
        for &slot in &self.slots {
            let Slot::Fixed(m) = slot else { continue };
            for (p, e) in factorize(m) {
                let Some(parts) = remaining.get_mut(&p) else { return false };
                let Some(i) = parts.iter().position(|&x| x == e) else { return false };
                parts.remove(i);
            }
        }
        let flexible: Vec<Slot> = self.slots.iter().copied().filter(|s| s.is_parameterized()).collect();
        let mut primes: Vec<u64> = remaining.keys().copied().collect();
        for s in &flexible {
            if let Some(p) = s.required_prime() {
                primes.push(p);
            }
        }
        primes.sort_unstable();
        primes.dedup();
        primes.into_iter().all(|p| {
            let parts = remaining.get(&p).map_or(0, Vec::len);
            let mut used = vec![false; flexible.len()];
            assign_parts(p, parts, &flexible, &mut used)
        })
    }
}

/// Backtracking: hand `parts` interchangeable parts at prime `p` to unused
/// slots, then check that every slot demanding `p` got one.
fn assign_parts(p: u64, parts: usize, slots: &[Slot], used: &mut [bool]) -> bool {
    if parts == 0 {
        return slots
            .iter()
            .zip(used.iter())
            .all(|(s, &u)| u || s.required_prime() != Some(p));
    }
    let mut tried: Vec<Slot> = Vec::new();
    for i in 0..slots.len() {
        // parts are interchangeable, so one slot of each kind is enough
        if used[i] || tried.contains(&slots[i]) {
            continue;
        }
        tried.push(slots[i]);
        used[i] = true;
        let ok = assign_parts(p, parts - 1, slots, used);
        used[i] = false;
        if ok {
            return true;
        }
    }
    false
}

impl FamilyPattern {
    /// Every member of the pattern with order at most `bound`. Slots of the
    /// same kind are interchangeable, so their orders are swept in
    /// non-decreasing order.
    pub fn enumerate(&self, bound: u128, out: &mut impl Extend<AbelianGroup>) {
        let mut slots = self.slots.clone();
        slots.sort();
        let mut orders = Vec::with_capacity(slots.len());
        sweep(&slots, bound, 1, &mut orders, out);
    }
}

fn sweep(
    slots: &[Slot],
    bound: u128,
    acc: u128,
    orders: &mut Vec<u64>,
    out: &mut impl Extend<AbelianGroup>,
) {
    let i = orders.len();
    if i == slots.len() {
        let g = orders
            .iter()
            .try_fold(AbelianGroup::trivial(), |g, &n| AbelianGroup::cyclic(n).map(|c| g.direct_product(&c)))
            .expect("slot orders are positive");
        out.extend(std::iter::once(g));
        return;
    }
    let slot = slots[i];
    let step = slot.order_step();
    let mut n = match slot {
        Slot::Fixed(m) => m,
        _ if i > 0 && slots[i - 1] == slot => orders[i - 1],
        _ => step,
    };
    loop {
        let next = acc * n as u128;
        if next > bound {
            return;
        }
        orders.push(n);
        sweep(slots, bound, next, orders, out);
        orders.pop();
        if !slot.is_parameterized() {
            return;
        }
        n += step;
    }
}

impl fmt::Display for FamilyPattern {
    /// Table notation: `Z/n x Z/2k x (Z/4)^2 x Z/2`; trivial pattern as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots.is_empty() {
            return f.write_str("1");
        }
        let mut labels = self.labels.iter();
        let mut i = 0;
        let mut first = true;
        while i < self.slots.len() {
            if !first {
                f.write_str(" x ")?;
            }
            first = false;
            match self.slots[i] {
                Slot::Fixed(m) => {
                    let run = self.slots[i..].iter().take_while(|&&s| s == Slot::Fixed(m)).count();
                    if run == 1 {
                        write!(f, "Z/{m}")?;
                    } else {
                        write!(f, "(Z/{m})^{run}")?;
                    }
                    i += run;
                    continue;
                }
                slot => {
                    let label = labels.next().map_or("?", String::as_str);
                    match slot {
                        Slot::Even => write!(f, "Z/2{label}")?,
                        Slot::Triple => write!(f, "Z/3{label}")?,
                        _ => write!(f, "Z/{label}")?,
                    }
                }
            }
            i += 1;
        }
        Ok(())
    }
}

impl FamilyPattern {
    /// Parameter constraints in table notation, e.g. `k >= 1, l >= 1`.
    pub fn constraints(&self) -> String {
        self.labels.iter().map(|l| format!("{l} >= 1")).collect::<Vec<_>>().join(", ")
    }
}

impl std::str::FromStr for FamilyPattern {
    type Err = InputError;

    /// Parses table notation: `Z/k`, `Z/2k`, `Z/3k` for parameterized
    /// slots, `Z/m` or `(Z/m)^r` for fixed ones, joined by `x`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let syntax = |what: &str| InputError::Syntax(format!("bad pattern factor `{what}` in `{text}`"));
        let mut slots = Vec::new();
        let mut labels = Vec::new();
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(Self { slots, labels });
        }
        for factor in trimmed.split([' ', '×']).filter(|t| !t.is_empty() && *t != "x") {
            let (base, reps) = match factor.rsplit_once('^') {
                Some((b, r)) => (b, r.parse::<usize>().map_err(|_| syntax(factor))?),
                None => (factor, 1),
            };
            let base = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(base);
            let body = base.strip_prefix("Z/").ok_or_else(|| syntax(factor))?;
            let digits: String = body.chars().take_while(char::is_ascii_digit).collect();
            let label = &body[digits.len()..];
            if label.is_empty() {
                let m: u64 = digits.parse().map_err(|_| syntax(factor))?;
                slots.extend(std::iter::repeat_n(Slot::Fixed(m), reps));
                continue;
            }
            if reps != 1 || !label.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(syntax(factor));
            }
            let slot = match digits.as_str() {
                "" => Slot::Free,
                "2" => Slot::Even,
                "3" => Slot::Triple,
                _ => return Err(syntax(factor)),
            };
            slots.push(slot);
            labels.push(label.to_string());
        }
        Self::with_labels(slots, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::parse_group;
    use crate::extensions::GroupSet;

    fn pat(s: &str) -> FamilyPattern {
        s.parse().unwrap()
    }

    fn g(s: &str) -> AbelianGroup {
        parse_group(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "Z/k",
            "(Z/2)^2",
            "Z/2k x (Z/4)^2 x Z/2",
            "Z/n x Z/k x Z/2l x (Z/2)^2",
            "Z/3k x (Z/3)^3",
            "Z/n x (Z/8)^2 x Z/4 x Z/2",
            "(Z/6)^3 x (Z/2)^3",
        ] {
            assert_eq!(pat(text).to_string(), text);
        }
        assert_eq!(pat("Z/2k x Z/2l").constraints(), "k >= 1, l >= 1");
        assert!("Z/5k".parse::<FamilyPattern>().is_err());
        assert!("Z/1".parse::<FamilyPattern>().is_err());
        assert!("Q/2".parse::<FamilyPattern>().is_err());
    }

    #[test]
    fn matches_examples() {
        assert!(pat("Z/2k x (Z/2)^2").matches(&g("Z/10 x Z/2^2")));
        assert!(pat("(Z/4)^4 x (Z/2)^2").matches(&g("Z/4^4 x Z/2^2")));
        assert!(!pat("(Z/4)^4 x (Z/2)^2").matches(&g("Z/4^5")));
        assert!(pat("Z/n x (Z/4)^4").matches(&g("Z/4^5")));
        assert!(pat("Z/k").matches(&g("1")));
        assert!(!pat("Z/2k").matches(&g("1")));
        assert!(!pat("Z/2k").matches(&g("Z/3")));
        assert!(pat("Z/3k x (Z/3)^3").matches(&g("Z/3^4")));
        assert!(!pat("Z/3k x (Z/3)^3").matches(&g("Z/3^3")));
        // one slot may carry several primes
        assert!(pat("Z/k x Z/l").matches(&g("Z/6^2")));
        assert!(!pat("Z/k x Z/l").matches(&g("Z/2^3")));
        assert!(pat("(Z/6)^2 x (Z/3)^2").matches(&g("Z/6^2 x Z/3^2")));
        assert!(pat("(Z/6)^2 x (Z/3)^2").matches(&g("Z/6 x Z/3^3 x Z/2")));
        assert!(!pat("(Z/6)^2 x (Z/3)^2").matches(&g("Z/6 x Z/3^3 x Z/4")));
    }

    #[test]
    fn matcher_agrees_with_instantiation() {
        // every group of order ≤ 64 built from up to four cyclic factors
        let mut universe = GroupSet::new();
        pat("Z/k x Z/l x Z/m x Z/n").enumerate(64, &mut universe);
        for p in ["Z/2k x (Z/2)^2", "Z/3k x (Z/3)^2", "Z/k x Z/2l", "Z/2k x Z/3l", "(Z/2)^2", "Z/k x Z/6"] {
            let pattern = pat(p);
            let mut members = GroupSet::new();
            pattern.enumerate(64, &mut members);
            for x in &universe {
                assert_eq!(pattern.matches(x), members.contains(x), "{p} vs {x}");
            }
        }
    }

    #[test]
    fn instantiate_checks_slot_constraints() {
        let p = pat("Z/2k x (Z/4)^2 x Z/2");
        assert_eq!(p.instantiate(&[12, 4, 4, 2]).unwrap(), g("Z/12 x Z/4^2 x Z/2"));
        assert!(p.instantiate(&[3, 4, 4, 2]).is_err());
        assert_eq!(p.instantiate_params(&[3]).unwrap(), g("Z/6 x Z/4^2 x Z/2"));
    }
}
