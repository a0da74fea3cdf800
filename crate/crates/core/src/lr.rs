//! Littlewood-Richardson coefficients by backtracking over skew tableaux.
//!
//! A filling of μ/λ is built row by row from the top, each row right to
//! left, which is exactly the reverse reading order. Semistandardness and
//! the ballot condition are both checked as each cell is placed, so dead
//! branches are cut as soon as they appear.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partition::Partition;

/// Positive part of a product of two Schur functions: each μ with its
/// coefficient c^μ_{λν} ≥ 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expansion {
    terms: BTreeMap<Partition, u64>,
}

impl Expansion {
    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys()
    }

    pub fn multiplicity(&self, mu: &Partition) -> u64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a [u32],
    // skew cells in reverse reading order: rows top to bottom, each right to left
    cells: Vec<(usize, usize)>,
    // vals[r][c] holds the entry of cell (r, c); cells of λ stay 0
    vals: Vec<Vec<u8>>,
    counts: Vec<u32>,
    found: u64,
    limit: u64,
}

impl Filler<'_> {
    fn place(&mut self, k: usize) {
        let Some(&(r, c)) = self.cells.get(k) else {
            self.found += 1;
            return;
        };
        let max_right = if c + 1 < self.outer.row(r) as usize {
            self.vals[r][c + 1]
        } else {
            u8::MAX
        };
        let above_is_skew =
            r > 0 && c < self.outer.row(r - 1) as usize && c as u32 >= self.inner.row(r - 1);
        let min_above = if above_is_skew { self.vals[r - 1][c] + 1 } else { 1 };
        // an entry in row r of a ballot tableau never exceeds r + 1
        let top = (self.content.len().min(r + 1) as u8).min(max_right);
        for v in min_above..=top {
            let i = (v - 1) as usize;
            let ballot_ok = i == 0 || self.counts[i - 1] > self.counts[i];
            if !ballot_ok || self.counts[i] >= self.content[i] {
                continue;
            }
            self.counts[i] += 1;
            self.vals[r][c] = v;
            self.place(k + 1);
            self.counts[i] -= 1;
            if self.found >= self.limit {
                break;
            }
        }
        self.vals[r][c] = 0;
    }
}

fn count_fillings(lambda: &Partition, nu: &Partition, mu: &Partition, limit: u64) -> u64 {
    if mu.size() != lambda.size() + nu.size() || !mu.contains(lambda) || !mu.contains(nu) {
        return 0;
    }
    let cells = (0..mu.len())
        .flat_map(|r| (lambda.row(r) as usize..mu.row(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut filler = Filler {
        outer: mu,
        inner: lambda,
        content: nu.parts(),
        cells,
        vals: mu.parts().iter().map(|&w| vec![0u8; w as usize]).collect(),
        counts: vec![0; nu.len()],
        found: 0,
        limit,
    };
    filler.place(0);
    filler.found
}

/// The Littlewood-Richardson coefficient c^μ_{λν}: the number of
/// semistandard fillings of μ/λ with content ν whose reverse reading word
/// is a ballot word. Zero when the sizes disagree or λ ⊄ μ.
pub fn lr_coefficient(lambda: &Partition, nu: &Partition, mu: &Partition) -> u64 {
    count_fillings(lambda, nu, mu, u64::MAX)
}

/// Whether c^μ_{λν} > 0; stops at the first valid tableau.
pub fn lr_positive(lambda: &Partition, nu: &Partition, mu: &Partition) -> bool {
    count_fillings(lambda, nu, mu, 1) > 0
}

/// Partitions μ of size |λ|+|ν| with λ ⊆ μ, ν ⊆ μ, ℓ(μ) ≤ ℓ(λ)+ℓ(ν) and
/// μ₁ ≤ λ₁+ν₁: the only places a nonzero coefficient can live.
pub fn candidate_shapes(lambda: &Partition, nu: &Partition) -> Vec<Partition> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        row: usize,
        rem: u32,
        cap: u32,
        max_len: usize,
        lambda: &Partition,
        nu: &Partition,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            if row >= lambda.len() && row >= nu.len() {
                out.push(Partition::from_decreasing(cur).expect("decreasing by construction"));
            }
            return;
        }
        if row >= max_len {
            return;
        }
        let lo = lambda.row(row).max(nu.row(row)).max(1);
        let hi = cap.min(rem);
        for x in (lo..=hi).rev() {
            cur.push(x);
            go(row + 1, rem - x, x, max_len, lambda, nu, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let total = lambda.size() + nu.size();
    let max_len = lambda.len() + nu.len();
    let cap = lambda.first() + nu.first();
    go(0, total, cap, max_len, lambda, nu, &mut Vec::new(), &mut out);
    out
}

/// Full expansion of λ·ν with true multiplicities.
pub fn lr_expand(lambda: &Partition, nu: &Partition) -> Expansion {
    let terms = candidate_shapes(lambda, nu)
        .into_iter()
        .filter_map(|mu| {
            let c = lr_coefficient(lambda, nu, &mu);
            (c > 0).then_some((mu, c))
        })
        .collect();
    Expansion { terms }
}

type MemoTable = RwLock<HashMap<(Partition, Partition), Arc<Expansion>>>;

fn memo() -> &'static MemoTable {
    static MEMO: OnceLock<MemoTable> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// [`lr_expand`] behind a process-wide table keyed on the canonical pair.
pub fn lr_expand_cached(lambda: &Partition, nu: &Partition) -> Arc<Expansion> {
    let key = (lambda.clone(), nu.clone());
    if let Some(hit) = memo().read().expect("lr memo poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let value = Arc::new(lr_expand(lambda, nu));
    let mut table = memo().write().expect("lr memo poisoned");
    Arc::clone(table.entry(key).or_insert(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(v: &[u32]) -> Partition {
        Partition::from_parts(v.iter().copied())
    }

    fn support(e: &Expansion) -> BTreeSet<Partition> {
        e.support().cloned().collect()
    }

    fn set(items: &[&[u32]]) -> BTreeSet<Partition> {
        items.iter().map(|v| p(v)).collect()
    }

    /// Independent oracle: every word with content ν placed into the cells of
    /// μ/λ in reading order, filtered by semistandardness and the lattice
    /// condition after the fact.
    fn brute_lr(lambda: &Partition, nu: &Partition, mu: &Partition) -> u64 {
        if mu.size() != lambda.size() + nu.size() || !mu.contains(lambda) {
            return 0;
        }
        let cells: Vec<(usize, usize)> = (0..mu.len())
            .flat_map(|r| (lambda.row(r) as usize..mu.row(r) as usize).rev().map(move |c| (r, c)))
            .collect();
        let mut letters: Vec<u8> = Vec::new();
        for (i, &k) in nu.parts().iter().enumerate() {
            letters.extend(std::iter::repeat_n(i as u8 + 1, k as usize));
        }
        let mut count = 0;
        permutations_of_multiset(&mut letters, &mut |word| {
            let mut grid = vec![vec![0u8; mu.first() as usize]; mu.len()];
            for (&(r, c), &v) in cells.iter().zip(word) {
                grid[r][c] = v;
            }
            let rows_ok = cells.iter().all(|&(r, c)| {
                c + 1 >= mu.row(r) as usize || grid[r][c] <= grid[r][c + 1]
            });
            let cols_ok = cells.iter().all(|&(r, c)| {
                r == 0 || (c as u32) < lambda.row(r - 1) || grid[r - 1][c] < grid[r][c]
            });
            let mut seen = vec![0u32; nu.len() + 1];
            let lattice_ok = word.iter().all(|&v| {
                seen[v as usize] += 1;
                v == 1 || seen[v as usize] <= seen[v as usize - 1]
            });
            if rows_ok && cols_ok && lattice_ok {
                count += 1;
            }
        });
        count
    }

    fn permutations_of_multiset(items: &mut [u8], visit: &mut dyn FnMut(&[u8])) {
        items.sort_unstable();
        loop {
            visit(items);
            // next lexicographic permutation
            let n = items.len();
            if n < 2 {
                return;
            }
            let mut i = n - 1;
            while i > 0 && items[i - 1] >= items[i] {
                i -= 1;
            }
            if i == 0 {
                return;
            }
            let mut j = n - 1;
            while items[j] <= items[i - 1] {
                j -= 1;
            }
            items.swap(i - 1, j);
            items[i..].reverse();
        }
    }

    #[test]
    fn coefficient_examples() {
        assert!(lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[3, 2])) >= 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[2, 2])), 0);
        assert_eq!(brute_lr(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn positivity_examples() {
        assert!(lr_positive(&p(&[2, 2, 1]), &p(&[2, 2, 1]), &p(&[2, 2, 2, 2, 2])));
        assert!(!lr_positive(&p(&[1, 1]), &p(&[2, 2, 2, 2]), &p(&[3, 3, 3])));
        for n in 0..=5 {
            for nu in Partition::all_of_size(n) {
                assert!(lr_positive(&Partition::empty(), &nu, &nu));
                assert!(lr_positive(&nu, &Partition::empty(), &nu));
            }
        }
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            support(&lr_expand(&p(&[2, 1]), &p(&[1, 1]))),
            set(&[&[3, 2], &[3, 1, 1], &[2, 2, 1], &[2, 1, 1, 1]])
        );
        assert_eq!(
            support(&lr_expand(&p(&[1, 1, 1]), &p(&[1, 1, 1]))),
            set(&[&[2, 2, 2], &[2, 2, 1, 1], &[2, 1, 1, 1, 1], &[1, 1, 1, 1, 1, 1]])
        );
        let big = lr_expand(&p(&[2, 2, 1]), &p(&[2, 2, 1]));
        assert_eq!(big.len(), 15);
        assert!(big.multiplicity(&p(&[4, 4, 2])) > 0);
        assert!(big.multiplicity(&p(&[2, 2, 2, 2, 2])) > 0);
        assert_eq!(support(&lr_expand(&Partition::empty(), &Partition::empty())), set(&[&[]]));
        assert_eq!(
            support(&lr_expand(&p(&[1, 1]), &p(&[2, 2, 2, 2]))),
            set(&[&[3, 3, 2, 2], &[3, 2, 2, 2, 1], &[2, 2, 2, 2, 1, 1]])
        );
    }

    #[test]
    fn agrees_with_brute_force_up_to_size_7() {
        for n in 0..=7u32 {
            for a in 0..=n {
                for lambda in Partition::all_of_size(a) {
                    for nu in Partition::all_of_size(n - a) {
                        for mu in Partition::all_of_size(n) {
                            assert_eq!(
                                lr_coefficient(&lambda, &nu, &mu),
                                brute_lr(&lambda, &nu, &mu),
                                "{lambda} {nu} {mu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_respects_support_bounds() {
        for n in 0..=7u32 {
            for a in 0..=n {
                for lambda in Partition::all_of_size(a) {
                    for nu in Partition::all_of_size(n - a) {
                        for mu in lr_expand(&lambda, &nu).support() {
                            assert!(mu.contains(&lambda) && mu.contains(&nu));
                            assert!(mu.len() >= lambda.len().max(nu.len()));
                            assert!(mu.len() <= lambda.len() + nu.len());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cache_matches_direct() {
        let a = p(&[3, 1]);
        let b = p(&[2, 2, 1]);
        assert_eq!(*lr_expand_cached(&a, &b), lr_expand(&a, &b));
        assert_eq!(*lr_expand_cached(&a, &b), lr_expand(&a, &b));
    }
}
