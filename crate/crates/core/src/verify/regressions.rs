//! Explicit Young-diagram products from the case analyses, replayed
//! against `lr_expand`.
//!
//! Generic products are written with variables `a` (first row of the
//! left factor), `b` (its second row) and `n` (first row of the right
//! factor), e.g. `[a+2,b+1,1,1]`. A `*` marks a lower bound: `[*a,*1,2]`
//! stands for every `[x,y,2]` with x ≥ a and y ≥ 1.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::abelian::AbelianGroup;
use crate::extensions::GroupSet;
use crate::lr::lr_expand;
use crate::partition::Partition;

use super::{Verdict, VerificationReport};

struct ConcreteCase {
    id: &'static str,
    lhs: &'static [u32],
    rhs: &'static [u32],
    support: &'static [&'static [u32]],
}

const CONCRETE: [ConcreteCase; 9] = [
    ConcreteCase {
        id: "[2,1].[1,1]",
        lhs: &[2, 1],
        rhs: &[1, 1],
        support: &[&[3, 2], &[3, 1, 1], &[2, 2, 1], &[2, 1, 1, 1]],
    },
    ConcreteCase {
        id: "[2,2,1].[2,2,1]",
        lhs: &[2, 2, 1],
        rhs: &[2, 2, 1],
        support: &[
            &[4, 4, 2],
            &[4, 4, 1, 1],
            &[4, 3, 3],
            &[4, 3, 2, 1],
            &[4, 3, 1, 1, 1],
            &[4, 2, 2, 2],
            &[4, 2, 2, 1, 1],
            &[3, 3, 3, 1],
            &[3, 3, 2, 2],
            &[3, 3, 2, 1, 1],
            &[3, 3, 1, 1, 1, 1],
            &[3, 2, 2, 2, 1],
            &[3, 2, 2, 1, 1, 1],
            &[2, 2, 2, 2, 2],
            &[2, 2, 2, 2, 1, 1],
        ],
    },
    ConcreteCase {
        id: "[2,2,1].[1,1,1,1]",
        lhs: &[2, 2, 1],
        rhs: &[1, 1, 1, 1],
        support: &[
            &[3, 3, 2, 1],
            &[3, 3, 1, 1, 1],
            &[3, 2, 2, 1, 1],
            &[3, 2, 1, 1, 1, 1],
            &[2, 2, 2, 1, 1, 1],
            &[2, 2, 1, 1, 1, 1, 1],
        ],
    },
    ConcreteCase {
        id: "[1,1,1].[1,1,1]",
        lhs: &[1, 1, 1],
        rhs: &[1, 1, 1],
        support: &[&[2, 2, 2], &[2, 2, 1, 1], &[2, 1, 1, 1, 1], &[1, 1, 1, 1, 1, 1]],
    },
    ConcreteCase {
        id: "[1,1,1,1].[1,1,1,1]",
        lhs: &[1, 1, 1, 1],
        rhs: &[1, 1, 1, 1],
        support: &[
            &[2, 2, 2, 2],
            &[2, 2, 2, 1, 1],
            &[2, 2, 1, 1, 1, 1],
            &[2, 1, 1, 1, 1, 1, 1],
            &[1, 1, 1, 1, 1, 1, 1, 1],
        ],
    },
    ConcreteCase {
        id: "[1,1].[2,2,2,2]",
        lhs: &[1, 1],
        rhs: &[2, 2, 2, 2],
        support: &[&[3, 3, 2, 2], &[3, 2, 2, 2, 1], &[2, 2, 2, 2, 1, 1]],
    },
    ConcreteCase {
        id: "[1,1].[3,3,2,1]",
        lhs: &[1, 1],
        rhs: &[3, 3, 2, 1],
        support: &[
            &[4, 4, 2, 1],
            &[4, 3, 3, 1],
            &[4, 3, 2, 2],
            &[4, 3, 2, 1, 1],
            &[3, 3, 3, 2],
            &[3, 3, 3, 1, 1],
            &[3, 3, 2, 2, 1],
            &[3, 3, 2, 1, 1, 1],
        ],
    },
    ConcreteCase {
        id: "[1,1].[1,1]",
        lhs: &[1, 1],
        rhs: &[1, 1],
        support: &[&[2, 2], &[2, 1, 1], &[1, 1, 1, 1]],
    },
    ConcreteCase {
        id: "[1,1].[1,1,1,1]",
        lhs: &[1, 1],
        rhs: &[1, 1, 1, 1],
        support: &[&[2, 2, 1, 1], &[2, 1, 1, 1, 1], &[1, 1, 1, 1, 1, 1]],
    },
];

pub enum Terms {
    /// The support, term for term.
    Exact(&'static [&'static str]),
    /// Shapes every member of the support must fit.
    Templates(&'static [&'static str]),
}

pub struct SymbolicCase {
    pub id: &'static str,
    /// Variable and its smallest value.
    pub params: &'static [(char, u32)],
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub terms: Terms,
}

const SYMBOLIC: [SymbolicCase; 12] = [
    SymbolicCase {
        id: "[a,b].[n+1,1,1]",
        params: &[('a', 1), ('b', 1), ('n', 1)],
        lhs: "[a,b]",
        rhs: "[n+1,1,1]",
        terms: Terms::Templates(&["[*a,*b,*1]", "[*a,*b,*1,1]", "[*a,*b,*1,1,1]"]),
    },
    SymbolicCase {
        id: "[a,b].[2,2,1]",
        params: &[('a', 1), ('b', 1)],
        lhs: "[a,b]",
        rhs: "[2,2,1]",
        terms: Terms::Exact(&[
            "[a+2,b+2,1]",
            "[a+2,b+1,2]",
            "[a+2,b+1,1,1]",
            "[a+2,b,2,1]",
            "[a+1,b+2,2]",
            "[a+1,b+2,1,1]",
            "[a+1,b+1,2,1]",
            "[a+1,b+1,1,1,1]",
            "[a+1,b,2,2]",
            "[a+1,b,2,1,1]",
            "[a,b+2,2,1]",
            "[a,b+1,2,2]",
            "[a,b+1,2,1,1]",
            "[a,b,2,2,1]",
        ]),
    },
    SymbolicCase {
        id: "[a,b].[1,1,1]",
        params: &[('a', 1), ('b', 1)],
        lhs: "[a,b]",
        rhs: "[1,1,1]",
        terms: Terms::Exact(&["[a+1,b+1,1]", "[a+1,b,1,1]", "[a,b+1,1,1]", "[a,b,1,1,1]"]),
    },
    SymbolicCase {
        id: "[a,b].[1,1,1,1]",
        params: &[('a', 1), ('b', 1)],
        lhs: "[a,b]",
        rhs: "[1,1,1,1]",
        terms: Terms::Exact(&["[a+1,b+1,1,1]", "[a+1,b,1,1,1]", "[a,b+1,1,1,1]", "[a,b,1,1,1,1]"]),
    },
    SymbolicCase {
        id: "[a+1,1,1].[n+1,1,1]",
        params: &[('a', 1), ('n', 1)],
        lhs: "[a+1,1,1]",
        rhs: "[n+1,1,1]",
        terms: Terms::Templates(&[
            "[*n+1,*1,1,1,1,1]",
            "[*n+1,*1,1,1,1]",
            "[*n+1,*1,1,1]",
            "[*n+1,*1,2]",
            "[*n+1,*1,2,1,1]",
            "[*n+1,*1,2,1]",
            "[*n+1,*1,2,2]",
        ]),
    },
    SymbolicCase {
        // at a = 0 the list would contain [2,2,2,2], which is not in [1,1,1]·[2,2,1]
        id: "[a+1,1,1].[2,2,1]",
        params: &[('a', 1)],
        lhs: "[a+1,1,1]",
        rhs: "[2,2,1]",
        terms: Terms::Exact(&[
            "[a+3,3,2]",
            "[a+3,3,1,1]",
            "[a+3,2,2,1]",
            "[a+3,2,1,1,1]",
            "[a+2,3,3]",
            "[a+2,3,2,1]",
            "[a+2,3,1,1,1]",
            "[a+2,2,2,2]",
            "[a+2,2,2,1,1]",
            "[a+2,2,1,1,1,1]",
            "[a+1,3,3,1]",
            "[a+1,3,2,2]",
            "[a+1,3,2,1,1]",
            "[a+1,2,2,2,1]",
            "[a+1,2,2,1,1,1]",
        ]),
    },
    SymbolicCase {
        id: "[a].[1,1,1]",
        params: &[('a', 0)],
        lhs: "[a]",
        rhs: "[1,1,1]",
        terms: Terms::Exact(&["[a+1,1,1]", "[a,1,1,1]"]),
    },
    SymbolicCase {
        id: "[a+1,1,1].[1,1,1,1]",
        params: &[('a', 0)],
        lhs: "[a+1,1,1]",
        rhs: "[1,1,1,1]",
        terms: Terms::Exact(&[
            "[a+2,2,2,1]",
            "[a+2,2,1,1,1]",
            "[a+2,1,1,1,1,1]",
            "[a+1,2,2,1,1]",
            "[a+1,2,1,1,1,1]",
            "[a+1,1,1,1,1,1,1]",
        ]),
    },
    SymbolicCase {
        id: "[a].[2,2,2,2]",
        params: &[('a', 1)],
        lhs: "[a]",
        rhs: "[2,2,2,2]",
        terms: Terms::Exact(&["[a+2,2,2,2]", "[a+1,2,2,2,1]", "[a,2,2,2,2]"]),
    },
    SymbolicCase {
        id: "[a].[3,3,2,1]",
        params: &[('a', 1)],
        lhs: "[a]",
        rhs: "[3,3,2,1]",
        terms: Terms::Exact(&[
            "[a+3,3,2,1]",
            "[a+2,3,3,1]",
            "[a+2,3,2,2]",
            "[a+2,3,2,1,1]",
            "[a+1,3,3,2]",
            "[a+1,3,3,1,1]",
            "[a+1,3,2,2,1]",
            "[a,3,3,2,1]",
        ]),
    },
    SymbolicCase {
        id: "[a].[1,1,1,1] on 3-parts",
        params: &[('a', 1)],
        lhs: "[a]",
        rhs: "[1,1,1,1]",
        terms: Terms::Exact(&["[a+1,1,1,1]", "[a,1,1,1,1]"]),
    },
    SymbolicCase {
        id: "[a].[1,1,1,1] on 2-parts",
        params: &[('a', 1)],
        lhs: "[a]",
        rhs: "[1,1,1,1]",
        terms: Terms::Exact(&["[a+1,1,1,1]", "[a,1,1,1,1]"]),
    },
];

pub fn symbolic_cases() -> &'static [SymbolicCase] {
    &SYMBOLIC
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Entry {
    Exactly(u32),
    AtLeast(u32),
}

/// Evaluates `[e1,e2,...]` under `env`.
fn eval(text: &str, env: &[(char, u32)]) -> Vec<Entry> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(|raw| {
            let raw = raw.trim();
            let (lower, body) = match raw.strip_prefix('*') {
                Some(rest) => (true, rest),
                None => (false, raw),
            };
            let value = body
                .split('+')
                .map(|t| match t.parse::<u32>() {
                    Ok(v) => v,
                    Err(_) => {
                        let c = t.chars().next().expect("nonempty term");
                        env.iter().find(|(v, _)| *v == c).expect("bound variable").1
                    }
                })
                .sum();
            if lower {
                Entry::AtLeast(value)
            } else {
                Entry::Exactly(value)
            }
        })
        .collect()
}

/// The partition spelled by `text`, or `None` if the entries are not
/// weakly decreasing (trailing zeros allowed).
fn eval_partition(text: &str, env: &[(char, u32)]) -> Option<Partition> {
    let parts: Vec<u32> = eval(text, env)
        .into_iter()
        .map(|e| match e {
            Entry::Exactly(v) => v,
            Entry::AtLeast(_) => panic!("lower bound in a literal term"),
        })
        .collect();
    parts.windows(2).all(|w| w[0] >= w[1]).then(|| Partition::from_parts(parts))
}

fn fits(mu: &Partition, template: &[Entry]) -> bool {
    mu.len() == template.len()
        && mu.parts().iter().zip(template).all(|(&x, e)| match *e {
            Entry::Exactly(v) => x == v,
            Entry::AtLeast(v) => x >= v,
        })
}

/// Values {min, min+1, min+2} for every variable, keeping a ≥ b.
fn grid(params: &[(char, u32)]) -> Vec<Vec<(char, u32)>> {
    let mut out: Vec<Vec<(char, u32)>> = vec![Vec::new()];
    for &(name, min) in params {
        out = out
            .into_iter()
            .flat_map(|env| (min..min + 3).map(move |v| {
                let mut e = env.clone();
                e.push((name, v));
                e
            }))
            .collect();
    }
    let value = |env: &[(char, u32)], c: char| env.iter().find(|(v, _)| *v == c).map(|x| x.1);
    out.retain(|env| match (value(env, 'a'), value(env, 'b')) {
        (Some(a), Some(b)) => a >= b,
        _ => true,
    });
    out
}

/// Support mismatches of one symbolic case at one instantiation.
fn check_symbolic(case: &SymbolicCase, env: &[(char, u32)]) -> Vec<Partition> {
    let lhs = eval_partition(case.lhs, env).expect("factor is a partition");
    let rhs = eval_partition(case.rhs, env).expect("factor is a partition");
    let actual: BTreeSet<Partition> = lr_expand(&lhs, &rhs).support().cloned().collect();
    match case.terms {
        Terms::Exact(terms) => {
            let listed: BTreeSet<Partition> = terms.iter().filter_map(|t| eval_partition(t, env)).collect();
            actual.symmetric_difference(&listed).cloned().collect()
        }
        Terms::Templates(templates) => {
            let shapes: Vec<Vec<Entry>> = templates.iter().map(|t| eval(t, env)).collect();
            actual.into_iter().filter(|mu| !shapes.iter().any(|s| fits(mu, s))).collect()
        }
    }
}

fn two_group(mu: &Partition) -> AbelianGroup {
    AbelianGroup::p_group(2, mu.clone()).expect("2 is prime")
}

pub(super) fn replay() -> VerificationReport {
    let start = Instant::now();
    let mut checked = 0;
    let mut witnesses = GroupSet::new();
    let mut notes = Vec::new();
    for case in &CONCRETE {
        checked += 1;
        let lhs = Partition::from_parts(case.lhs.iter().copied());
        let rhs = Partition::from_parts(case.rhs.iter().copied());
        let actual: BTreeSet<Partition> = lr_expand(&lhs, &rhs).support().cloned().collect();
        let listed: BTreeSet<Partition> = case.support.iter().map(|p| Partition::from_parts(p.iter().copied())).collect();
        for mu in actual.symmetric_difference(&listed) {
            notes.push(format!("{}: {lhs}.{rhs} disagrees at {mu}", case.id));
            witnesses.insert(two_group(mu));
        }
    }
    for case in &SYMBOLIC {
        for env in grid(case.params) {
            checked += 1;
            for mu in check_symbolic(case, &env) {
                notes.push(format!("{} at {env:?}: disagrees at {mu}", case.id));
                witnesses.insert(two_group(&mu));
            }
        }
    }
    let verdict = if notes.is_empty() { Verdict::Pass } else { Verdict::Fail };
    VerificationReport {
        claim_id: "regressions".into(),
        bound: None,
        checked_pairs: checked,
        witnesses,
        sources: Default::default(),
        verdict,
        vacuous: false,
        notes,
        elapsed: start.elapsed(),
    }
}
