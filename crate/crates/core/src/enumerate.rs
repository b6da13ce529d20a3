//! Census of left preferred and minimal codes, and their classification into
//! oriented and unoriented classes with `d{n}.{k}±` names.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, MAX_CROSSINGS};
use crate::normal::{self, OrientedClass, UnorientedClass};
use crate::reduce::pattern_sets;

/// Largest `n` accepted without an explicit override.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeLimit(usize);

impl SizeLimit {
    pub fn new(max_n: usize) -> Self {
        SizeLimit(max_n.min(MAX_CROSSINGS))
    }

    pub fn unbounded() -> Self {
        SizeLimit(MAX_CROSSINGS)
    }

    pub fn max_n(self) -> usize {
        self.0
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if n > self.0 {
            return Err(Error::SizeLimitExceeded { n, max: self.0 });
        }
        Ok(())
    }
}

impl Default for SizeLimit {
    fn default() -> Self {
        SizeLimit(DEFAULT_MAX_N)
    }
}

/// Number of left preferred codes on `n` letters, `C(2n-1, n-1) * n!`.
pub fn lp_count_formula(n: usize) -> u128 {
    let n = n as u128;
    let mut binom: u128 = 1;
    for i in 0..(n - 1) {
        binom = binom * (2 * n - 1 - i) / (i + 1);
    }
    (1..=n).product::<u128>() * binom
}

/// Left preferred codes in ascending lexicographic order.
///
/// A depth-first walk that at every position tries, in increasing order, the
/// next `L` symbol and every unused `R` symbol. Any partial word extends to a
/// full code, so the walk never dead-ends and the output needs no sort.
#[derive(Debug, Clone)]
pub struct LpCodes {
    n: usize,
    seq: Vec<u8>,
    used_r: Vec<bool>,
    next_l: u8,
    fixed: usize,
    started: bool,
    done: bool,
}

impl LpCodes {
    fn new(n: usize) -> Self {
        Self::with_prefix(n, &[1]).expect("(1) is a valid prefix")
    }

    /// Codes whose numeric form begins with `prefix`; `None` when no left
    /// preferred code does.
    fn with_prefix(n: usize, prefix: &[u8]) -> Option<Self> {
        let len = 2 * n;
        if prefix.is_empty() || prefix[0] != 1 || prefix.len() > len {
            return None;
        }
        let mut it = LpCodes {
            n,
            seq: Vec::with_capacity(len),
            used_r: vec![false; n + 1],
            next_l: 1,
            fixed: prefix.len(),
            started: false,
            done: false,
        };
        for &m in prefix {
            if !it.admissible(m) {
                return None;
            }
            it.place(m);
        }
        it.fill_smallest();
        Some(it)
    }

    fn admissible(&self, m: u8) -> bool {
        if m == 0 || m as usize > 2 * self.n {
            return false;
        }
        if m % 2 == 1 {
            m == 2 * self.next_l - 1
        } else {
            !self.used_r[m as usize / 2]
        }
    }

    fn place(&mut self, m: u8) {
        if m % 2 == 1 {
            self.next_l += 1;
        } else {
            self.used_r[m as usize / 2] = true;
        }
        self.seq.push(m);
    }

    fn unplace(&mut self) -> u8 {
        let m = self.seq.pop().expect("unplace on empty word");
        if m % 2 == 1 {
            self.next_l -= 1;
        } else {
            self.used_r[m as usize / 2] = false;
        }
        m
    }

    /// Smallest admissible symbol strictly greater than `after`.
    fn next_candidate(&self, after: u8) -> Option<u8> {
        let top = 2 * self.n as u8;
        (after + 1..=top).find(|&m| self.admissible(m))
    }

    fn fill_smallest(&mut self) {
        while self.seq.len() < 2 * self.n {
            let m = self
                .next_candidate(0)
                .expect("a partial left preferred word always extends");
            self.place(m);
        }
    }

    fn advance(&mut self) -> bool {
        while self.seq.len() > self.fixed {
            let old = self.unplace();
            if let Some(m) = self.next_candidate(old) {
                self.place(m);
                self.fill_smallest();
                return true;
            }
        }
        false
    }
}

impl Iterator for LpCodes {
    type Item = GaussCode;

    fn next(&mut self) -> Option<GaussCode> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(GaussCode::from_vec_unchecked(self.seq.clone()))
    }
}

/// Streams every left preferred code on `n` letters in ascending order.
pub fn enumerate_lp(n: usize, limit: SizeLimit) -> Result<LpCodes> {
    limit.check(n)?;
    Ok(LpCodes::new(n))
}

/// Admissible prefixes of length `depth`, in ascending order. They split the
/// left preferred codes into contiguous, ordered blocks of work.
fn prefixes(n: usize, depth: usize) -> Vec<Vec<u8>> {
    let depth = depth.clamp(1, 2 * n);
    let mut out = Vec::new();
    let mut stack = vec![vec![1u8]];
    while let Some(p) = stack.pop() {
        if p.len() == depth {
            out.push(p);
            continue;
        }
        let mut children: Vec<Vec<u8>> = (2..=2 * n as u8)
            .filter_map(|m| {
                let mut q = p.clone();
                q.push(m);
                LpCodes::with_prefix(n, &q).map(|_| q)
            })
            .collect();
        children.reverse();
        stack.extend(children);
    }
    out
}

fn par_blocks<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(LpCodes) -> T + Sync + Send,
{
    prefixes(n, 3)
        .par_iter()
        .map(|p| f(LpCodes::with_prefix(n, p).expect("prefix is admissible")))
        .collect()
}

/// Sorted minimal left preferred codes.
pub fn enumerate_minimal(n: usize, limit: SizeLimit) -> Result<Vec<GaussCode>> {
    limit.check(n)?;
    let sets = pattern_sets(n);
    let blocks = par_blocks(n, |codes| {
        codes.filter(|w| sets.is_minimal(w)).collect::<Vec<_>>()
    });
    Ok(blocks.into_iter().flatten().collect())
}

fn count_lp(n: usize) -> u64 {
    par_blocks(n, |codes| codes.count() as u64)
        .into_iter()
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Counts {
    pub lp: u64,
    pub minimal: u64,
    pub oriented: u64,
    pub unoriented: u64,
}

impl fmt::Display for Counts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.lp, self.minimal, self.oriented, self.unoriented
        )
    }
}

/// Tallies without materializing the classes.
pub fn counts(n: usize, limit: SizeLimit) -> Result<Counts> {
    let minimal = enumerate_minimal(n, limit)?;
    let oriented: BTreeSet<GaussCode> = minimal.par_iter().map(normal::proj_lc).collect();
    let unoriented: BTreeSet<GaussCode> = oriented.par_iter().map(normal::g_unori).collect();
    Ok(Counts {
        lp: count_lp(n),
        minimal: minimal.len() as u64,
        oriented: oriented.len() as u64,
        unoriented: unoriented.len() as u64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// `d_{n,k}`, `d_{n,k}^+` or `d_{n,k}^-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassName {
    pub n: usize,
    pub k: usize,
    pub sign: Option<Sign>,
}

impl ClassName {
    pub fn unoriented(self) -> ClassName {
        ClassName { sign: None, ..self }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Some(Sign::Plus) => "+",
            Some(Sign::Minus) => "-",
            None => "",
        };
        write!(f, "d{}.{}{}", self.n, self.k, sign)
    }
}

#[derive(Debug, Clone)]
pub struct NamedOriented {
    pub name: ClassName,
    pub class: OrientedClass,
}

#[derive(Debug, Clone)]
pub struct NamedUnoriented {
    pub name: ClassName,
    /// `forward` is the `+` class, holding the canonical representative.
    pub class: UnorientedClass,
    /// Indices into [`ClassificationTable::oriented`].
    pub plus: usize,
    pub minus: Option<usize>,
}

/// Everything known about the codes on `n` letters.
#[derive(Debug, Clone)]
pub struct ClassificationTable {
    n: usize,
    lp_count: u64,
    minimal: Vec<GaussCode>,
    oriented: Vec<NamedOriented>,
    unoriented: Vec<NamedUnoriented>,
    class_of: HashMap<GaussCode, usize>,
}

/// Enumerates, filters and classifies.
///
/// Oriented classes are peeled off greedily: the smallest remaining minimal
/// code is left canonical, its `shift_lp` orbit is one class. Orbits are then
/// paired through `rev_lp`. Unoriented classes are numbered by ascending
/// canonical representative; within `d{n}.{k}`, the oriented class holding that
/// representative is `+` and its reverse, when different, is `-`.
pub fn classify(n: usize, limit: SizeLimit) -> Result<ClassificationTable> {
    let minimal = enumerate_minimal(n, limit)?;
    let lp_count = count_lp(n);

    let mut remaining: BTreeSet<GaussCode> = minimal.iter().cloned().collect();
    let mut classes: Vec<OrientedClass> = Vec::new();
    let mut class_of: HashMap<GaussCode, usize> = HashMap::new();
    while let Some(smallest) = remaining.pop_first() {
        let class = normal::oriented_class_unchecked(&smallest);
        for m in class.members() {
            remaining.remove(m);
            class_of.insert(m.clone(), classes.len());
        }
        classes.push(class);
    }

    let mut names: Vec<Option<ClassName>> = vec![None; classes.len()];
    let mut unoriented = Vec::new();
    for i in 0..classes.len() {
        if names[i].is_some() {
            continue;
        }
        let k = unoriented.len() + 1;
        let reversed = normal::rev_lp_unchecked(classes[i].canonical());
        let j = *class_of
            .get(&reversed)
            .expect("minimal codes are closed under rev_lp");
        names[i] = Some(ClassName {
            n,
            k,
            sign: Some(Sign::Plus),
        });
        let minus = (j != i).then(|| {
            names[j] = Some(ClassName {
                n,
                k,
                sign: Some(Sign::Minus),
            });
            j
        });
        unoriented.push(NamedUnoriented {
            name: ClassName { n, k, sign: None },
            class: UnorientedClass::from_parts(
                classes[i].clone(),
                classes[minus.unwrap_or(i)].clone(),
            ),
            plus: i,
            minus,
        });
    }

    let oriented = classes
        .into_iter()
        .zip(names)
        .map(|(class, name)| NamedOriented {
            name: name.expect("every class is named"),
            class,
        })
        .collect();

    Ok(ClassificationTable {
        n,
        lp_count,
        minimal,
        oriented,
        unoriented,
        class_of,
    })
}

/// Blocks sorted internally and by first element.
pub type Partition = Vec<Vec<GaussCode>>;

pub(crate) fn normalize_partition(mut blocks: Partition) -> Partition {
    for b in &mut blocks {
        b.sort();
    }
    blocks.sort();
    blocks
}

impl ClassificationTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lp_count(&self) -> u64 {
        self.lp_count
    }

    pub fn minimal_codes(&self) -> &[GaussCode] {
        &self.minimal
    }

    /// Oriented classes in ascending order of canonical representative.
    pub fn oriented(&self) -> &[NamedOriented] {
        &self.oriented
    }

    /// Unoriented classes, `d{n}.1`, `d{n}.2`, ...
    pub fn unoriented(&self) -> &[NamedUnoriented] {
        &self.unoriented
    }

    pub fn counts(&self) -> Counts {
        Counts {
            lp: self.lp_count,
            minimal: self.minimal.len() as u64,
            oriented: self.oriented.len() as u64,
            unoriented: self.unoriented.len() as u64,
        }
    }

    /// The oriented class of any code orientedly equivalent to a minimal one.
    pub fn lookup(&self, code: &GaussCode) -> Option<&NamedOriented> {
        if code.n() != self.n {
            return None;
        }
        let lp = normal::proj_lp(code);
        self.class_of.get(&lp).map(|&i| &self.oriented[i])
    }

    pub fn oriented_partition(&self) -> Partition {
        normalize_partition(
            self.oriented
                .iter()
                .map(|c| c.class.members().to_vec())
                .collect(),
        )
    }

    pub fn unoriented_partition(&self) -> Partition {
        normalize_partition(self.unoriented.iter().map(|u| u.class.members()).collect())
    }
}
