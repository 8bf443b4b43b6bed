//! Finite permutation-group core: elements, cycle types, conjugacy classes,
//! brute-force subgroup closure, and the Sylow-5 structure of `S_5`.
//!
//! Everything here is exact and desk-scale: subgroups are explicit sorted
//! element lists, closure is breadth-first product saturation, and class
//! enumeration is capped where factorials leave native integers.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Largest degree for which conjugacy-class sizes are computed exactly.
pub const MAX_CLASS_DEGREE: usize = 12;

/// Largest degree for which the full group is enumerated element by element.
pub const MAX_ENUMERATION_DEGREE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images are not a bijection of 0..{0}")]
    NotABijection(usize),
    #[error("parts are not weakly decreasing positive integers")]
    NotAPartition,
    #[error("n = {0} outside supported range {1}..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("subgroup is not contained in the ambient group")]
    NotASubgroup,
    #[error("conjugate subgroup missing from the given list; list is not closed under conjugation")]
    ConjugateNotFound,
}

/// A permutation of `{0, …, n−1}` in one-line notation: `images[i]` is the
/// image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotABijection(n));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n || touched[a] {
                    return Err(GroupError::NotABijection(n));
                }
                touched[a] = true;
                images[a] = b;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Composition acting on points: `(p ∘ q)(i) = p(q(i))`.
    pub fn compose(&self, rhs: &Self) -> Result<Self, GroupError> {
        if self.degree() != rhs.degree() {
            return Err(GroupError::DegreeMismatch(self.degree(), rhs.degree()));
        }
        Ok(Self {
            images: rhs.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// `g p g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self, GroupError> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point; fixed points appear as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(−1)^(n − number of cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycles().len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i == j).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().format(","))
    }
}

/// A partition: weakly decreasing positive parts.
///
/// Partitions label both conjugacy classes (cycle types) and irreducible
/// representations of `S_n`. The derived `Ord` is lexicographic on the part
/// list; sorting partitions of equal sum ascending gives the canonical class
/// order used everywhere in this crate (identity class `(1,…,1)` first,
/// `(n)` last).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, GroupError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(GroupError::NotAPartition);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Canonical representative of the conjugacy class with this cycle type:
    /// consecutive cycles `(0 … p₁−1)(p₁ …)…`.
    pub fn representative(&self) -> Permutation {
        let n = self.n() as usize;
        let mut images: Vec<usize> = (0..n).collect();
        let mut offset = 0;
        for &part in &self.parts {
            let part = part as usize;
            for k in 0..part {
                images[offset + k] = offset + (k + 1) % part;
            }
            offset += part;
        }
        Permutation { images }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().format(","))
    }
}

/// All partitions of `n` in ascending lexicographic order — the canonical
/// class order (`(1,…,1)` first, `(n)` last). Reverse for the canonical
/// irrep order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn gen(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            gen(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the conjugacy class with the given cycle type:
/// `n! / ∏_i (i^{m_i} · m_i!)` with `m_i` the multiplicity of part `i`.
pub fn class_size(cycle_type: &Partition) -> u64 {
    let n = cycle_type.n() as usize;
    let mut centralizer: u64 = 1;
    for (part, group) in &cycle_type.parts.iter().chunk_by(|&&p| p) {
        let mult = group.count() as u64;
        centralizer *= (part as u64).pow(mult as u32) * factorial(mult as usize);
    }
    factorial(n) / centralizer
}

/// The conjugacy classes of `S_n` in canonical class order, with exact sizes.
pub fn conjugacy_classes(n: usize) -> Result<Vec<(Partition, u64)>, GroupError> {
    if !(1..=MAX_CLASS_DEGREE).contains(&n) {
        return Err(GroupError::OutOfRange(n, 1, MAX_CLASS_DEGREE));
    }
    Ok(partitions(n as u32)
        .into_iter()
        .map(|p| {
            let size = class_size(&p);
            (p, size)
        })
        .collect())
}

/// Every element of `S_n`, in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    assert!(
        n <= MAX_ENUMERATION_DEGREE,
        "refusing to enumerate S_{n} element by element"
    );
    (0..n)
        .permutations(n)
        .map(Permutation::from_images_unchecked)
        .collect()
}

/// A subgroup of `S_n` stored as an explicit sorted element list.
///
/// `generators` records the generating set the subgroup was built from; it is
/// empty for subgroups obtained by enumeration or filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl Subgroup {
    /// Smallest subgroup containing `generators`, computed by breadth-first
    /// product saturation. The empty set yields the trivial group.
    pub fn closure(degree: usize, generators: &[Permutation]) -> Result<Self, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for g in generators {
                    let q = g.compose(p).expect("degrees checked above");
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(Self {
            degree,
            elements,
            generators: generators.to_vec(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: Vec::new(),
        }
    }

    /// The full symmetric group, by enumeration (degree ≤ 8).
    pub fn symmetric(n: usize) -> Self {
        Self {
            degree: n,
            elements: all_permutations(n),
            generators: Vec::new(),
        }
    }

    /// The alternating group, by enumeration (degree ≤ 8).
    pub fn alternating(n: usize) -> Self {
        Self {
            degree: n,
            elements: all_permutations(n).into_iter().filter(|p| p.is_even()).collect(),
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// `g H g⁻¹` as a subgroup.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Subgroup, GroupError> {
        if g.degree() != self.degree {
            return Err(GroupError::DegreeMismatch(self.degree, g.degree()));
        }
        let mut elements: Vec<Permutation> = self
            .elements
            .iter()
            .map(|p| p.conjugate_by(g).expect("degrees checked above"))
            .collect();
        elements.sort();
        Ok(Subgroup {
            degree: self.degree,
            elements,
            generators: Vec::new(),
        })
    }
}

/// The six Sylow-5 subgroups of `S_5`, ordered lexicographically by their
/// sorted element lists. The ordering is the canonical labelling `P_1…P_6`
/// used by the conjugation action (0-based indices internally).
pub fn sylow5_subgroups() -> Vec<Subgroup> {
    let five = Partition::new(vec![5]).expect("valid partition");
    let mut subgroups: Vec<Subgroup> = Vec::new();
    for c in all_permutations(5) {
        if c.cycle_type() != five {
            continue;
        }
        let candidate = Subgroup::closure(5, &[c]).expect("single generator of matching degree");
        if !subgroups.iter().any(|s| s.elements == candidate.elements) {
            subgroups.push(candidate);
        }
    }
    subgroups.sort_by(|a, b| a.elements.cmp(&b.elements));
    subgroups
}

/// `{g ∈ ambient | g h g⁻¹ = h}`, by brute force over the ambient elements.
pub fn normalizer(h: &Subgroup, ambient: &Subgroup) -> Result<Subgroup, GroupError> {
    if !h.is_subgroup_of(ambient) {
        return Err(GroupError::NotASubgroup);
    }
    let elements: Vec<Permutation> = ambient
        .elements
        .iter()
        .filter(|g| {
            let conj = h.conjugate_by(g).expect("equal degrees");
            conj.elements == h.elements
        })
        .cloned()
        .collect();
    Ok(Subgroup {
        degree: h.degree,
        elements,
        generators: Vec::new(),
    })
}

/// The permutation `σ` of degree 6 with `g P_i g⁻¹ = P_{σ(i)}` for the given
/// Sylow list. The map `g ↦ σ` is a homomorphism `S_5 → S_6`.
pub fn conjugation_action(g: &Permutation, sylows: &[Subgroup]) -> Result<Permutation, GroupError> {
    let mut images = Vec::with_capacity(sylows.len());
    for p in sylows {
        let conj = p.conjugate_by(g)?;
        let j = sylows
            .iter()
            .position(|q| q.elements == conj.elements)
            .ok_or(GroupError::ConjugateNotFound)?;
        images.push(j);
    }
    Permutation::new(images).map_err(|_| GroupError::ConjugateNotFound)
}
