//! Left preferred and left canonical normal forms.
//!
//! A code is *left preferred* when its `L` symbols read `(1,L) (2,L) ... (n,L)`
//! in order and it starts with `(1,L)`. Every code is orientedly equivalent to
//! a left preferred one ([`proj_lp`]); basepoint rotation and reversal are then
//! transported to left preferred codes as [`shift_lp`] and [`rev_lp`]. The
//! smallest member of a [`shift_lp`] orbit is the left canonical code
//! ([`proj_lc`]), which is a complete invariant of the oriented class.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LeftPreference {
    No,
    /// `L` symbols in order, but the code does not start with `(1, L)`.
    Weak,
    Full,
}

pub fn left_preference(code: &GaussCode) -> LeftPreference {
    let mut next = 1u8;
    for l in code.labels() {
        if l.side() == Side::L {
            if l.crossing() != next {
                return LeftPreference::No;
            }
            next += 1;
        }
    }
    if code.as_slice()[0] == 1 {
        LeftPreference::Full
    } else {
        LeftPreference::Weak
    }
}

pub fn is_left_preferred(code: &GaussCode) -> bool {
    left_preference(code) == LeftPreference::Full
}

fn require_lp(code: &GaussCode) -> Result<()> {
    if is_left_preferred(code) {
        Ok(())
    } else {
        Err(Error::NotLeftPreferred(code.to_string()))
    }
}

/// Relabels crossings in order of their `L` occurrences and rotates `(1, L)`
/// to the front.
pub fn proj_lp(code: &GaussCode) -> GaussCode {
    let w = code.as_slice();
    let len = w.len();
    let n = code.n();
    // rank[j] = position of (j, L) among the L symbols, 1-based.
    let mut rank = vec![0u8; n + 1];
    let mut next = 1u8;
    let mut start = None;
    for (i, &m) in w.iter().enumerate() {
        if m % 2 == 1 {
            rank[m.div_ceil(2) as usize] = next;
            next += 1;
            start.get_or_insert(i);
        }
    }
    let start = start.expect("a Gauss code contains L symbols");
    let seq = (0..len)
        .map(|k| {
            let m = w[(start + k) % len];
            let j = rank[m.div_ceil(2) as usize];
            if m % 2 == 1 {
                2 * j - 1
            } else {
                2 * j
            }
        })
        .collect();
    GaussCode::from_vec_unchecked(seq)
}

pub(crate) fn shift_lp_unchecked(lp: &GaussCode) -> GaussCode {
    proj_lp(&lp.rotated(1))
}

/// `proj_lp(shift[1](w))` on a left preferred code.
pub fn shift_lp(lp: &GaussCode) -> Result<GaussCode> {
    require_lp(lp)?;
    Ok(shift_lp_unchecked(lp))
}

pub(crate) fn rev_lp_unchecked(lp: &GaussCode) -> GaussCode {
    let len = lp.len() as u8;
    let mut seq: Vec<u8> = lp
        .as_slice()
        .iter()
        .rev()
        .map(|&k| if k % 2 == 1 { len - k } else { len + 2 - k })
        .collect();
    let start = seq.iter().position(|&m| m == 1).expect("(1, L) is present");
    seq.rotate_left(start);
    GaussCode::from_vec_unchecked(seq)
}

/// Reversal on left preferred codes.
///
/// Reverses, renames crossing `j` to `n + 1 - j` (which restores the `L`
/// order) and rotates `(1, L)` to the front. Equal to `proj_lp(reverse(w))`.
pub fn rev_lp(lp: &GaussCode) -> Result<GaussCode> {
    require_lp(lp)?;
    Ok(rev_lp_unchecked(lp))
}

/// Lexicographic order on codes with the same number of crossings.
pub fn compare(a: &GaussCode, b: &GaussCode) -> Result<Ordering> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    Ok(a.as_slice().cmp(b.as_slice()))
}

/// Iterates `w, shift_lp(w), ..., shift_lp^(n-1)(w)`.
fn shift_lp_orbit(lp: &GaussCode) -> impl Iterator<Item = GaussCode> {
    let n = lp.n();
    std::iter::successors(Some(lp.clone()), |w| Some(shift_lp_unchecked(w))).take(n)
}

/// The left canonical code: the smallest member of the `shift_lp` orbit of
/// `proj_lp(code)`. This is the oriented invariant `G_ori`.
pub fn proj_lc(code: &GaussCode) -> GaussCode {
    shift_lp_orbit(&proj_lp(code))
        .min()
        .expect("orbits are non-empty")
}

pub fn is_left_canonical(code: &GaussCode) -> bool {
    is_left_preferred(code) && proj_lc(code) == *code
}

pub fn rev_lc(lc: &GaussCode) -> Result<GaussCode> {
    if !is_left_canonical(lc) {
        return Err(Error::NotLeftCanonical(lc.to_string()));
    }
    Ok(proj_lc(&lc.reverse()))
}

/// The unoriented invariant `G_unori`: the smaller of the left canonical codes
/// of `code` and of its reverse.
pub fn g_unori(code: &GaussCode) -> GaussCode {
    let forward = proj_lc(code);
    let backward = proj_lc(&code.reverse());
    forward.min(backward)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Forward,
    Reversed,
    /// The code and its reverse are orientedly equivalent.
    Both,
}

/// Which orientation of the diagram carries the unoriented canonical code.
pub fn canonical_orientation(code: &GaussCode) -> Orientation {
    match proj_lc(code).cmp(&proj_lc(&code.reverse())) {
        Ordering::Less => Orientation::Forward,
        Ordering::Greater => Orientation::Reversed,
        Ordering::Equal => Orientation::Both,
    }
}

/// A `shift_lp` orbit of left preferred codes.
///
/// Members are stored sorted and de-duplicated; an orbit has fewer than `n`
/// members exactly when the code has a rotational symmetry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedClass {
    members: Vec<GaussCode>,
}

impl OrientedClass {
    pub fn canonical(&self) -> &GaussCode {
        &self.members[0]
    }

    pub fn members(&self) -> &[GaussCode] {
        &self.members
    }

    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, code: &GaussCode) -> bool {
        self.members.binary_search(code).is_ok()
    }
}

/// The union of an oriented class and the class of its `rev_lp` image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnorientedClass {
    forward: OrientedClass,
    backward: OrientedClass,
}

impl UnorientedClass {
    pub(crate) fn from_parts(forward: OrientedClass, backward: OrientedClass) -> Self {
        UnorientedClass { forward, backward }
    }

    pub fn forward(&self) -> &OrientedClass {
        &self.forward
    }

    pub fn backward(&self) -> &OrientedClass {
        &self.backward
    }

    pub fn canonical(&self) -> &GaussCode {
        self.forward.canonical().min(self.backward.canonical())
    }

    /// True when the two orientations fall in the same oriented class.
    pub fn is_reversible(&self) -> bool {
        self.forward == self.backward
    }

    /// All left preferred codes in the class, sorted.
    pub fn members(&self) -> Vec<GaussCode> {
        let mut all: Vec<GaussCode> = self.forward.members.clone();
        if !self.is_reversible() {
            all.extend(self.backward.members.iter().cloned());
            all.sort();
        }
        all
    }
}

pub(crate) fn oriented_class_unchecked(lp: &GaussCode) -> OrientedClass {
    let mut members: Vec<GaussCode> = shift_lp_orbit(lp).collect();
    members.sort();
    members.dedup();
    OrientedClass { members }
}

pub fn oriented_class(lp: &GaussCode) -> Result<OrientedClass> {
    require_lp(lp)?;
    Ok(oriented_class_unchecked(lp))
}

pub fn unoriented_class(lp: &GaussCode) -> Result<UnorientedClass> {
    require_lp(lp)?;
    let forward = oriented_class_unchecked(lp);
    let reversed = rev_lp_unchecked(lp);
    let backward = if forward.contains(&reversed) {
        forward.clone()
    } else {
        oriented_class_unchecked(&reversed)
    };
    Ok(UnorientedClass { forward, backward })
}
