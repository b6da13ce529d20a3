//! Arrow diagrams: `2n` points on a circle joined by `n` oriented chords.
//!
//! Symbol `x_{p+1}` of a code sits at position `p`; the chord of crossing `j`
//! runs from the `(j, R)` point (tail) to the `(j, L)` point (head) and crossing
//! labels are forgotten. Relabeling codes therefore leaves the diagram fixed,
//! `shift[m]` is a rotation and `rev` a reflection, so dihedral orbits of
//! diagrams give an independent route to the oriented and unoriented classes.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{enumerate_minimal, normalize_partition, Partition, SizeLimit};
use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Role {
    Head,
    Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Symmetry {
    RotationOnly,
    RotationAndReflection,
}

/// Ordered by the role array, then the partner array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowDiagram {
    roles: Vec<Role>,
    partner: Vec<u8>,
}

impl ArrowDiagram {
    pub fn new(roles: Vec<Role>, partner: Vec<u8>) -> Result<Self> {
        let len = roles.len();
        let invalid = |msg: &str| Err(Error::InvalidArrowDiagram(msg.to_string()));
        if len == 0 || len % 2 == 1 || partner.len() != len {
            return invalid("need 2n roles and 2n partners");
        }
        if len > 2 * crate::gauss::MAX_CROSSINGS {
            return invalid("too many arrows");
        }
        for p in 0..len {
            let q = partner[p] as usize;
            if q >= len || q == p || partner[q] as usize != p {
                return invalid("partner is not a fixed-point-free involution");
            }
            if roles[p] == roles[q] {
                return invalid("an arrow needs one head and one tail");
            }
        }
        Ok(ArrowDiagram { roles, partner })
    }

    pub fn from_code(code: &GaussCode) -> Self {
        let len = code.len();
        let n = code.n();
        let mut roles = Vec::with_capacity(len);
        let mut seen: Vec<Option<usize>> = vec![None; n + 1];
        let mut partner = vec![0u8; len];
        for (p, l) in code.labels().enumerate() {
            roles.push(match l.side() {
                Side::L => Role::Head,
                Side::R => Role::Tail,
            });
            let j = l.crossing() as usize;
            match seen[j] {
                Some(q) => {
                    partner[p] = q as u8;
                    partner[q] = p as u8;
                }
                None => seen[j] = Some(p),
            }
        }
        ArrowDiagram { roles, partner }
    }

    /// Number of arrows.
    pub fn n(&self) -> usize {
        self.roles.len() / 2
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn partners(&self) -> &[u8] {
        &self.partner
    }

    /// `(tail, head)` positions, ordered by tail.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        (0..self.roles.len())
            .filter(|&p| self.roles[p] == Role::Tail)
            .map(|p| (p, self.partner[p] as usize))
            .collect()
    }

    /// Rotation matching `shift[m]`: position `p` moves to `p - m (mod 2n)`.
    pub fn rotate(&self, m: usize) -> Self {
        let len = self.roles.len();
        let m = m % len;
        let to = |p: usize| (p + len - m) % len;
        let mut roles = self.roles.clone();
        let mut partner = self.partner.clone();
        for p in 0..len {
            roles[to(p)] = self.roles[p];
            partner[to(p)] = to(self.partner[p] as usize) as u8;
        }
        ArrowDiagram { roles, partner }
    }

    /// Reflection matching `rev`: position `p` moves to `2n - 1 - p`.
    pub fn reflect(&self) -> Self {
        let len = self.roles.len();
        let to = |p: usize| len - 1 - p;
        let mut roles = self.roles.clone();
        let mut partner = self.partner.clone();
        for p in 0..len {
            roles[to(p)] = self.roles[p];
            partner[to(p)] = to(self.partner[p] as usize) as u8;
        }
        ArrowDiagram { roles, partner }
    }

    fn next(&self, p: usize) -> usize {
        (p + 1) % self.roles.len()
    }

    /// Some arrow joins two neighbouring points.
    pub fn is_1_reducible(&self) -> bool {
        (0..self.roles.len()).any(|p| self.partner[p] as usize == self.next(p))
    }

    /// Two distinct arrows start at neighbouring points `p, p+1` of opposite
    /// roles and end at neighbouring points, in either order.
    pub fn is_2_reducible(&self) -> bool {
        (0..self.roles.len()).any(|p| {
            let q = self.next(p);
            if self.roles[p] == self.roles[q] || self.partner[p] as usize == q {
                return false;
            }
            let (a, b) = (self.partner[p] as usize, self.partner[q] as usize);
            b == self.next(a) || a == self.next(b)
        })
    }

    pub fn is_minimal(&self) -> bool {
        !self.is_1_reducible() && !self.is_2_reducible()
    }

    /// Every image under the group, with repeats: `2n` rotations, then (for
    /// [`Symmetry::RotationAndReflection`]) the `2n` rotations of the mirror.
    pub fn orbit(&self, symmetry: Symmetry) -> Vec<ArrowDiagram> {
        let len = self.roles.len();
        let mut out: Vec<ArrowDiagram> = (0..len).map(|m| self.rotate(m)).collect();
        if symmetry == Symmetry::RotationAndReflection {
            let mirror = self.reflect();
            out.extend((0..len).map(|m| mirror.rotate(m)));
        }
        out
    }

    pub fn orbit_size(&self, symmetry: Symmetry) -> usize {
        let mut orbit = self.orbit(symmetry);
        orbit.sort();
        orbit.dedup();
        orbit.len()
    }

    /// The least element of the orbit.
    pub fn canonical(&self, symmetry: Symmetry) -> ArrowDiagram {
        self.orbit(symmetry)
            .into_iter()
            .min()
            .expect("orbits are non-empty")
    }

    /// `roles=HT.. partners=(p:q ...)` with `p < q`, pairs sorted.
    pub fn encoding(&self) -> String {
        let roles: String = self
            .roles
            .iter()
            .map(|r| match r {
                Role::Head => 'H',
                Role::Tail => 'T',
            })
            .collect();
        let pairs: Vec<String> = (0..self.partner.len())
            .filter(|&p| p < self.partner[p] as usize)
            .map(|p| format!("{}:{}", p, self.partner[p]))
            .collect();
        format!("roles={} partners=({})", roles, pairs.join(" "))
    }
}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

/// Minimal codes grouped by the orbits of their arrow diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowPartitions {
    pub rotation: Partition,
    pub dihedral: Partition,
}

pub fn classify_by_arrows(n: usize, limit: SizeLimit) -> Result<ArrowPartitions> {
    let minimal = enumerate_minimal(n, limit)?;
    let keyed: Vec<(ArrowDiagram, ArrowDiagram, GaussCode)> = minimal
        .into_par_iter()
        .map(|w| {
            let a = ArrowDiagram::from_code(&w);
            (
                a.canonical(Symmetry::RotationOnly),
                a.canonical(Symmetry::RotationAndReflection),
                w,
            )
        })
        .collect();
    let mut rotation: BTreeMap<ArrowDiagram, Vec<GaussCode>> = BTreeMap::new();
    let mut dihedral: BTreeMap<ArrowDiagram, Vec<GaussCode>> = BTreeMap::new();
    for (rot, dih, w) in keyed {
        rotation.entry(rot).or_default().push(w.clone());
        dihedral.entry(dih).or_default().push(w);
    }
    Ok(ArrowPartitions {
        rotation: normalize_partition(rotation.into_values().collect()),
        dihedral: normalize_partition(dihedral.into_values().collect()),
    })
}
