//! 1-/2-reducibility and minimality of Gauss codes.
//!
//! Both tests look at cyclically adjacent pairs `(m_i, m_{i+1})` in numeric
//! form. A code is 1-reducible when some pair is in `A1` (a crossing's two
//! symbols are adjacent) and 2-reducible when two pairs form an element of
//! `A2` (two crossings bound a bigon). Minimal means neither.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::gauss::GaussCode;

pub type Pair = (u8, u8);

/// The pattern sets `A1` and `A2` for a fixed number of crossings.
#[derive(Debug, Clone)]
pub struct PatternSets {
    n: usize,
    a1: BTreeSet<Pair>,
    a2: BTreeSet<(Pair, Pair)>,
    // dense index p1 * (2n + 1) + p2
    in_a1: Vec<bool>,
    a2_partners: Vec<Vec<Pair>>,
}

impl PatternSets {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "pattern sets need n >= 1");
        let side = 2 * n + 1;
        let n8 = n as u8;

        let a1: BTreeSet<Pair> = (1..=n8)
            .flat_map(|j| [(2 * j - 1, 2 * j), (2 * j, 2 * j - 1)])
            .collect();

        let mut a2 = BTreeSet::new();
        for a in 1..=n8 {
            for b in (1..=n8).filter(|&b| b != a) {
                a2.insert(((2 * a - 1, 2 * b), (2 * a, 2 * b - 1)));
                a2.insert(((2 * a - 1, 2 * b), (2 * b - 1, 2 * a)));
                a2.insert(((2 * a, 2 * b - 1), (2 * b, 2 * a - 1)));
            }
        }

        let mut in_a1 = vec![false; side * side];
        for &(p, q) in &a1 {
            in_a1[p as usize * side + q as usize] = true;
        }
        let mut a2_partners = vec![Vec::new(); side * side];
        for &((p1, p2), q) in &a2 {
            a2_partners[p1 as usize * side + p2 as usize].push(q);
        }

        PatternSets {
            n,
            a1,
            a2,
            in_a1,
            a2_partners,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a1(&self) -> &BTreeSet<Pair> {
        &self.a1
    }

    pub fn a2(&self) -> &BTreeSet<(Pair, Pair)> {
        &self.a2
    }

    fn index(&self, (p, q): Pair) -> usize {
        p as usize * (2 * self.n + 1) + q as usize
    }

    fn check_size(&self, code: &GaussCode) {
        assert_eq!(code.n(), self.n, "pattern sets built for a different n");
    }

    pub fn is_1_reducible(&self, code: &GaussCode) -> bool {
        self.check_size(code);
        code.adjacent_pairs().any(|p| self.in_a1[self.index(p)])
    }

    pub fn is_2_reducible(&self, code: &GaussCode) -> bool {
        self.check_size(code);
        code.adjacent_pairs().any(|p| {
            self.a2_partners[self.index(p)]
                .iter()
                .any(|&q| code.adjacent_pairs().any(|r| r == q))
        })
    }

    pub fn is_minimal(&self, code: &GaussCode) -> bool {
        !self.is_1_reducible(code) && !self.is_2_reducible(code)
    }
}

/// Memoized [`PatternSets`] for `n`.
pub fn pattern_sets(n: usize) -> Arc<PatternSets> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<PatternSets>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(sets) = cache.read().expect("pattern cache poisoned").get(&n) {
        return Arc::clone(sets);
    }
    let mut guard = cache.write().expect("pattern cache poisoned");
    Arc::clone(
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(PatternSets::new(n))),
    )
}

pub fn is_1_reducible(code: &GaussCode) -> bool {
    pattern_sets(code.n()).is_1_reducible(code)
}

pub fn is_2_reducible(code: &GaussCode) -> bool {
    pattern_sets(code.n()).is_2_reducible(code)
}

pub fn is_minimal(code: &GaussCode) -> bool {
    pattern_sets(code.n()).is_minimal(code)
}
