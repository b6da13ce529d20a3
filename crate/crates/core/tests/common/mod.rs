#![allow(dead_code)]

pub mod reference;

use std::collections::BTreeSet;

use doodle_core::GaussCode;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn code(s: &str) -> GaussCode {
    GaussCode::parse(s).unwrap()
}

pub fn codes_of(rows: &[impl AsRef<[u8]>]) -> Vec<GaussCode> {
    rows.iter()
        .map(|r| GaussCode::new(r.as_ref().to_vec()).unwrap())
        .collect()
}

/// All permutations of `1..=n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, left: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n as u8).collect(), &mut out);
    out
}

/// Every Gauss code on `n` letters: all orderings of `1..=2n`.
pub fn all_codes(n: usize) -> Vec<GaussCode> {
    let symbols: Vec<u8> = (1..=2 * n as u8).collect();
    let mut out = Vec::new();
    let mut seq = symbols.clone();
    heap_permute(&mut seq, symbols.len(), &mut out);
    out.sort();
    out
}

fn heap_permute(seq: &mut Vec<u8>, k: usize, out: &mut Vec<GaussCode>) {
    if k <= 1 {
        out.push(GaussCode::new(seq.clone()).unwrap());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(seq, k - 1, out);
        if k.is_multiple_of(2) {
            seq.swap(i, k - 1);
        } else {
            seq.swap(0, k - 1);
        }
    }
    heap_permute(seq, k - 1, out);
}

/// All left preferred codes by filtering every code: independent of the
/// enumeration walk.
pub fn all_lp_codes(n: usize) -> Vec<GaussCode> {
    all_codes(n)
        .into_iter()
        .filter(|w| {
            let odds: Vec<u8> = w
                .as_slice()
                .iter()
                .copied()
                .filter(|m| m % 2 == 1)
                .collect();
            w.as_slice()[0] == 1 && odds.windows(2).all(|p| p[0] < p[1])
        })
        .collect()
}

pub fn random_code<R: Rng>(rng: &mut R, n: usize) -> GaussCode {
    let mut seq: Vec<u8> = (1..=2 * n as u8).collect();
    seq.shuffle(rng);
    GaussCode::new(seq).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (1..=n as u8).collect();
    p.shuffle(rng);
    p
}

/// `{ shift[m](pi_*(w)) }` straight from the definition.
pub fn oriented_closure(w: &GaussCode) -> BTreeSet<GaussCode> {
    let mut out = BTreeSet::new();
    for p in permutations(w.n()) {
        let v = w.relabel(&p).unwrap();
        for m in 0..w.len() {
            out.insert(v.shift(m).unwrap());
        }
    }
    out
}

pub fn unoriented_closure(w: &GaussCode) -> BTreeSet<GaussCode> {
    let mut out = oriented_closure(w);
    out.extend(oriented_closure(&w.reverse()));
    out
}

/// Breadth-first closure under `shift[1]` and adjacent transpositions.
pub fn generator_closure(w: &GaussCode) -> BTreeSet<GaussCode> {
    let n = w.n();
    let mut seen = BTreeSet::from([w.clone()]);
    let mut frontier = vec![w.clone()];
    while let Some(v) = frontier.pop() {
        let mut next = vec![v.shift(1 % v.len()).unwrap()];
        for i in 0..n.saturating_sub(1) {
            let mut p: Vec<u8> = (1..=n as u8).collect();
            p.swap(i, i + 1);
            next.push(v.relabel(&p).unwrap());
        }
        for u in next {
            if seen.insert(u.clone()) {
                frontier.push(u);
            }
        }
    }
    seen
}

/// 2-reducibility checked symbolically on labels, without pattern tables.
pub fn two_reducible_by_labels(w: &GaussCode) -> bool {
    use doodle_core::Side::{L, R};
    let len = w.len();
    let pairs: Vec<_> = (0..len)
        .map(|i| (w.label(i), w.label((i + 1) % len)))
        .collect();
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            let (j, k) = (a.crossing(), b.crossing());
            if j == k {
                continue;
            }
            let same = |x: doodle_core::JLabel, cr: u8, s| x.crossing() == cr && x.side() == s;
            // ((j,L),(k,R)) with ((j,R),(k,L))
            if same(a, j, L) && same(b, k, R) && same(c, j, R) && same(d, k, L) {
                return true;
            }
            // ((j,L),(k,R)) with ((k,L),(j,R))
            if same(a, j, L) && same(b, k, R) && same(c, k, L) && same(d, j, R) {
                return true;
            }
            // ((j,R),(k,L)) with ((k,R),(j,L))
            if same(a, j, R) && same(b, k, L) && same(c, k, R) && same(d, j, L) {
                return true;
            }
        }
    }
    false
}

pub fn one_reducible_by_labels(w: &GaussCode) -> bool {
    let len = w.len();
    (0..len).any(|i| {
        let (a, b) = (w.label(i), w.label((i + 1) % len));
        a.crossing() == b.crossing()
    })
}
