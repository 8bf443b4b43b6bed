//! Exact character theory of `S_n`: the full character table via the
//! Murnaghan–Nakayama rule, inner products, decomposition of class functions,
//! and the `Sym²`/`Λ²` character identities.
//!
//! All arithmetic in this module is exact integer/rational; it serves as the
//! oracle for the numerical machinery in [`crate::hermrep`].

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;
use thiserror::Error;

use crate::permgroup::{
    class_size, conjugacy_classes, factorial, partitions, GroupError, Partition, Permutation,
};

/// Largest `n` for which the character table is computed.
pub const MAX_TABLE_DEGREE: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("n = {0} outside supported range {1}..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("class functions live on different groups: n = {0} vs n = {1}")]
    LengthMismatch(usize, usize),
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("non-integral values in {0}: the input was not a character")]
    NonIntegral(&'static str),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Number of boxes crossed minus one when a border strip is removed; the
/// Murnaghan–Nakayama sign is `(−1)^height`.
///
/// Border strips are enumerated through first-column hook lengths (beta
/// numbers): removing a strip of size `m` moves one beta number down by `m`,
/// and the height is the number of beta numbers it passes over.
fn strip_removals(shape: &[u32], strip: u32) -> Vec<(Vec<u32>, u32)> {
    let k = shape.len();
    let beta: Vec<i64> = (0..k)
        .map(|i| shape[i] as i64 + (k - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for i in 0..k {
        let target = beta[i] - strip as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&b| b > target && b < beta[i]).count() as u32;
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (k - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, height));
    }
    out
}

fn mn_recurse(
    shape: &[u32],
    cycle: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if cycle.is_empty() {
        debug_assert!(shape.is_empty());
        return 1;
    }
    let key = (shape.to_vec(), cycle.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (rest, height) in strip_removals(shape, cycle[0]) {
        let term = mn_recurse(&rest, &cycle[1..], memo);
        total += if height % 2 == 0 { term } else { -term };
    }
    memo.insert(key, total);
    total
}

/// `χ_λ(μ)` by the Murnaghan–Nakayama recursion. Both partitions must have
/// the same sum.
pub fn character_value(irrep: &Partition, class: &Partition) -> i64 {
    assert_eq!(irrep.n(), class.n(), "partitions of different integers");
    let mut memo = HashMap::new();
    mn_recurse(irrep.parts(), class.parts(), &mut memo)
}

/// Dimension of the irreducible labelled by `λ`, by the hook length formula.
pub fn dimension(irrep: &Partition) -> u64 {
    let n = irrep.n() as usize;
    let conj = irrep.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in irrep.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as u128 - j as u128 - 1;
            let leg = conj.parts()[j] as u128 - i as u128 - 1;
            hooks *= arm + leg + 1;
        }
    }
    (factorial(n) as u128 / hooks) as u64
}

/// A function on the conjugacy classes of `S_n`, in canonical class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self, CharError> {
        let classes = partitions(n as u32).len();
        if values.len() != classes {
            return Err(CharError::LengthMismatch(values.len(), classes));
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, class_index: usize) -> i64 {
        self.values[class_index]
    }

    pub fn pointwise_product(&self, other: &ClassFunction) -> Result<ClassFunction, CharError> {
        if self.n != other.n {
            return Err(CharError::LengthMismatch(self.n, other.n));
        }
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn pointwise_square(&self) -> ClassFunction {
        self.pointwise_product(self).expect("same group")
    }
}

/// `(1/n!) Σ_c size(c) · a(c) · b(c)`, exact.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Ratio<i64>, CharError> {
    if a.n != b.n {
        return Err(CharError::LengthMismatch(a.n, b.n));
    }
    let classes = partitions(a.n as u32);
    let mut sum: i128 = 0;
    for (i, class) in classes.iter().enumerate() {
        sum += class_size(class) as i128 * a.values[i] as i128 * b.values[i] as i128;
    }
    let num: i64 = sum.try_into().map_err(|_| CharError::Overflow)?;
    Ok(Ratio::new(num, factorial(a.n) as i64))
}

/// The exact character table of `S_n`.
///
/// Classes (columns) are cycle types in canonical class order — ascending
/// lexicographic, identity class first. Irreps (rows) are partitions in the
/// reverse order, trivial representation `(n)` first. The same two orderings
/// are used by every module and all CLI output.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<(Partition, u64)>,
    irreps: Vec<Partition>,
    values: Vec<Vec<i64>>,
    class_lookup: HashMap<Partition, usize>,
    irrep_lookup: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<Self, CharError> {
        if !(1..=MAX_TABLE_DEGREE).contains(&n) {
            return Err(CharError::OutOfRange(n, 1, MAX_TABLE_DEGREE));
        }
        let classes = conjugacy_classes(n)?;
        let mut irreps = partitions(n as u32);
        irreps.reverse();
        let mut memo = HashMap::new();
        let values: Vec<Vec<i64>> = irreps
            .iter()
            .map(|lam| {
                classes
                    .iter()
                    .map(|(mu, _)| mn_recurse(lam.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_lookup = classes
            .iter()
            .enumerate()
            .map(|(i, (p, _))| (p.clone(), i))
            .collect();
        let irrep_lookup = irreps
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(Self {
            n,
            classes,
            irreps,
            values,
            class_lookup,
            irrep_lookup,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cycle types with class sizes, in canonical class order.
    pub fn classes(&self) -> &[(Partition, u64)] {
        &self.classes
    }

    /// Irrep labels, trivial `(n)` first.
    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    pub fn value(&self, irrep_index: usize, class_index: usize) -> i64 {
        self.values[irrep_index][class_index]
    }

    pub fn class_index(&self, cycle_type: &Partition) -> Option<usize> {
        self.class_lookup.get(cycle_type).copied()
    }

    pub fn irrep_index(&self, irrep: &Partition) -> Option<usize> {
        self.irrep_lookup.get(irrep).copied()
    }

    /// The character `χ_λ` as a class function.
    pub fn row(&self, irrep: &Partition) -> Option<ClassFunction> {
        self.irrep_index(irrep).map(|i| ClassFunction {
            n: self.n,
            values: self.values[i].clone(),
        })
    }

    /// Value of `χ_λ` at the identity.
    pub fn irrep_dimension(&self, irrep: &Partition) -> Option<i64> {
        self.irrep_index(irrep).map(|i| self.values[i][0])
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: vec![1; self.classes.len()],
        }
    }

    /// The sign character: `(−1)^(n − #parts)` per cycle type.
    pub fn sign(&self) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .classes
                .iter()
                .map(|(p, _)| if (self.n - p.len()) % 2 == 0 { 1 } else { -1 })
                .collect(),
        }
    }

    /// `Σ_c size(c)·χ_λ(c)·χ_μ(c) = n!·δ_{λμ}`, exactly.
    pub fn row_orthogonality_holds(&self) -> bool {
        let fact = factorial(self.n) as i128;
        for a in 0..self.irreps.len() {
            for b in 0..self.irreps.len() {
                let sum: i128 = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, (_, size))| {
                        *size as i128 * self.values[a][c] as i128 * self.values[b][c] as i128
                    })
                    .sum();
                if sum != if a == b { fact } else { 0 } {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_λ χ_λ(c)·χ_λ(c') = δ_{cc'} · n!/size(c)`, exactly.
    pub fn column_orthogonality_holds(&self) -> bool {
        let fact = factorial(self.n) as i128;
        for c in 0..self.classes.len() {
            for d in 0..self.classes.len() {
                let sum: i128 = (0..self.irreps.len())
                    .map(|r| self.values[r][c] as i128 * self.values[r][d] as i128)
                    .sum();
                let expected = if c == d {
                    fact / self.classes[c].1 as i128
                } else {
                    0
                };
                if sum != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Multiplicities of a character in the irrep basis, every irrep included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    entries: Vec<(Partition, u64)>,
}

impl Decomposition {
    /// All multiplicities in canonical irrep order (zeros included).
    pub fn entries(&self) -> &[(Partition, u64)] {
        &self.entries
    }

    pub fn multiplicity(&self, irrep: &Partition) -> u64 {
        self.entries
            .iter()
            .find(|(p, _)| p == irrep)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().filter(|(_, m)| *m > 0).map(|(p, m)| (p, *m))
    }

    pub fn nonzero_map(&self) -> BTreeMap<Partition, u64> {
        self.nonzero().map(|(p, m)| (p.clone(), m)).collect()
    }
}

/// Decomposes a character into irreducibles: `m_λ = ⟨f, χ_λ⟩` for every
/// irrep, then verifies the exact reconstruction `Σ m_λ χ_λ = f`. Any
/// non-integer or negative multiplicity means `f` was not a character.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<Decomposition, CharError> {
    if f.n != table.n {
        return Err(CharError::LengthMismatch(f.n, table.n));
    }
    let fact = factorial(table.n) as i128;
    let mut entries = Vec::with_capacity(table.irreps.len());
    for (r, irrep) in table.irreps.iter().enumerate() {
        let sum: i128 = table
            .classes
            .iter()
            .enumerate()
            .map(|(c, (_, size))| *size as i128 * f.values[c] as i128 * table.values[r][c] as i128)
            .sum();
        if sum % fact != 0 {
            return Err(CharError::NotACharacter(format!(
                "multiplicity of {irrep} is {sum}/{fact}, not an integer"
            )));
        }
        let m = sum / fact;
        if m < 0 {
            return Err(CharError::NotACharacter(format!(
                "multiplicity of {irrep} is {m} < 0"
            )));
        }
        entries.push((irrep.clone(), m as u64));
    }
    // Irreducible characters form a basis of class functions, so integral
    // nonnegative multiplicities reconstruct exactly; keep the check anyway.
    for c in 0..table.classes.len() {
        let total: i128 = entries
            .iter()
            .enumerate()
            .map(|(r, (_, m))| *m as i128 * table.values[r][c] as i128)
            .sum();
        if total != f.values[c] as i128 {
            return Err(CharError::NotACharacter(
                "reconstruction mismatch".to_string(),
            ));
        }
    }
    Ok(Decomposition { entries })
}

/// Character of a permutation action: the fixed-point count of one
/// representative per class.
pub fn perm_character<F>(table: &CharacterTable, mut fixed_points: F) -> ClassFunction
where
    F: FnMut(&Permutation) -> u64,
{
    let values = table
        .classes
        .iter()
        .map(|(p, _)| fixed_points(&p.representative()) as i64)
        .collect();
    ClassFunction {
        n: table.n,
        values,
    }
}

/// Cycle type of `g²` given the cycle type of `g`: an even cycle of length
/// `2k` squares to two `k`-cycles, an odd cycle keeps its length.
pub fn power_class(cycle_type: &Partition) -> Partition {
    let mut parts = Vec::new();
    for &p in cycle_type.parts() {
        if p % 2 == 0 {
            parts.push(p / 2);
            parts.push(p / 2);
        } else {
            parts.push(p);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("squaring preserves the partition property")
}

fn frobenius_square(chi: &ClassFunction, plus: bool) -> Result<ClassFunction, CharError> {
    let classes = partitions(chi.n as u32);
    let lookup: HashMap<&Partition, usize> =
        classes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut values = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        let square_index = lookup[&power_class(class)];
        let v = chi.values[i];
        let v2 = chi.values[square_index];
        let twice = if plus { v * v + v2 } else { v * v - v2 };
        if twice % 2 != 0 {
            return Err(CharError::NonIntegral("sym²/Λ² character"));
        }
        values.push(twice / 2);
    }
    Ok(ClassFunction {
        n: chi.n,
        values,
    })
}

/// Character of the symmetric square: `sym²(g) = (χ(g)² + χ(g²))/2`.
pub fn sym2_character(chi: &ClassFunction) -> Result<ClassFunction, CharError> {
    frobenius_square(chi, true)
}

/// Character of the alternating square: `Λ²(g) = (χ(g)² − χ(g²))/2`.
pub fn alt2_character(chi: &ClassFunction) -> Result<ClassFunction, CharError> {
    frobenius_square(chi, false)
}

/// Pointwise product with the sign character.
pub fn tensor_sign(chi: &ClassFunction) -> ClassFunction {
    let classes = partitions(chi.n as u32);
    let values = chi
        .values
        .iter()
        .zip(&classes)
        .map(|(v, p)| if (chi.n - p.len()) % 2 == 0 { *v } else { -v })
        .collect();
    ClassFunction {
        n: chi.n,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::all_permutations;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn table_n5_frozen_rows() {
        let t = CharacterTable::new(5).unwrap();
        assert_eq!(t.row(&part(&[3, 2])).unwrap().values(), &[5, 1, 1, -1, 1, -1, 0]);
        assert_eq!(t.row(&part(&[5])).unwrap().values(), &[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(t.row(&part(&[4, 1])).unwrap().values(), &[4, 2, 0, 1, -1, 0, -1]);
    }

    #[test]
    fn standard_character_matches_fixed_point_oracle() {
        // Independent route: χ_{(n−1,1)}(g) = (#fixed points of g) − 1,
        // evaluated on an actual class representative.
        for n in 2..=8usize {
            let t = CharacterTable::new(n).unwrap();
            let standard = part(&[(n - 1) as u32, 1]);
            let row = t.row(&standard).unwrap();
            for (c, (class, _)) in t.classes().iter().enumerate() {
                let rep = class.representative();
                assert_eq!(row.get(c), rep.fixed_points() as i64 - 1, "n={n} class {class}");
            }
        }
    }

    #[test]
    fn orthogonality_holds_exactly() {
        for n in 1..=8 {
            let t = CharacterTable::new(n).unwrap();
            assert!(t.row_orthogonality_holds(), "rows, n = {n}");
            assert!(t.column_orthogonality_holds(), "columns, n = {n}");
        }
    }

    #[test]
    fn identity_column_matches_hook_length_dimensions() {
        // Two independent routes to the dimensions: MN at the identity vs the
        // hook length formula; their squares must sum to n!.
        for n in 1..=8usize {
            let t = CharacterTable::new(n).unwrap();
            let mut square_sum = 0u64;
            for irrep in t.irreps() {
                let d = t.irrep_dimension(irrep).unwrap();
                assert_eq!(d as u64, dimension(irrep), "n={n} irrep {irrep}");
                square_sum += (d * d) as u64;
            }
            assert_eq!(square_sum, factorial(n));
        }
    }

    #[test]
    fn hook_dimensions_frozen_for_lemma_summands() {
        assert_eq!(dimension(&part(&[5])), 1);
        assert_eq!(dimension(&part(&[4, 1])), 4);
        assert_eq!(dimension(&part(&[3, 2])), 5);
        assert_eq!(dimension(&part(&[3, 1, 1])), 6);
        assert_eq!(dimension(&part(&[2, 2, 1])), 5);
    }

    #[test]
    fn table_out_of_range() {
        assert!(matches!(CharacterTable::new(0), Err(CharError::OutOfRange(0, 1, 10))));
        assert!(matches!(CharacterTable::new(11), Err(CharError::OutOfRange(11, 1, 10))));
    }

    #[test]
    fn inner_product_examples() {
        let t = CharacterTable::new(5).unwrap();
        let chi41 = t.row(&part(&[4, 1])).unwrap();
        let chi32 = t.row(&part(&[3, 2])).unwrap();
        assert_eq!(inner_product(&chi41, &chi41).unwrap(), Ratio::new(1, 1));
        assert_eq!(inner_product(&chi41, &chi32).unwrap(), Ratio::new(0, 1));
        assert_eq!(
            inner_product(&chi41.pointwise_square(), &t.trivial()).unwrap(),
            Ratio::new(1, 1)
        );
    }

    #[test]
    fn inner_product_length_mismatch() {
        let t4 = CharacterTable::new(4).unwrap();
        let t5 = CharacterTable::new(5).unwrap();
        assert!(inner_product(&t4.trivial(), &t5.trivial()).is_err());
    }

    #[test]
    fn lemma_decomposition_of_standard_square() {
        // decompose(χ_{(n−1,1)}²) = 1 ⊕ (n−1,1) ⊕ (n−2,2) ⊕ (n−2,1,1) for n ≥ 4.
        for n in 4..=8u32 {
            let t = CharacterTable::new(n as usize).unwrap();
            let chi = t.row(&part(&[n - 1, 1])).unwrap();
            let d = decompose(&chi.pointwise_square(), &t).unwrap();
            let expected: BTreeMap<Partition, u64> = [
                (part(&[n]), 1),
                (part(&[n - 1, 1]), 1),
                (part(&[n - 2, 2]), 1),
                (part(&[n - 2, 1, 1]), 1),
            ]
            .into_iter()
            .collect();
            assert_eq!(d.nonzero_map(), expected, "n = {n}");
        }
    }

    #[test]
    fn lemma_degenerates_for_n3() {
        let t = CharacterTable::new(3).unwrap();
        let chi = t.row(&part(&[2, 1])).unwrap();
        let d = decompose(&chi.pointwise_square(), &t).unwrap();
        let expected: BTreeMap<Partition, u64> =
            [(part(&[3]), 1), (part(&[2, 1]), 1), (part(&[1, 1, 1]), 1)]
                .into_iter()
                .collect();
        assert_eq!(d.nonzero_map(), expected);
    }

    #[test]
    fn decompose_trivial_character() {
        let t = CharacterTable::new(5).unwrap();
        let d = decompose(&t.trivial(), &t).unwrap();
        assert_eq!(d.nonzero_map(), [(part(&[5]), 1)].into_iter().collect());
    }

    #[test]
    fn decompose_sylow_permutation_character() {
        let t = CharacterTable::new(5).unwrap();
        let pi = ClassFunction::new(5, vec![6, 0, 2, 0, 0, 2, 1]).unwrap();
        let d = decompose(&pi, &t).unwrap();
        let expected: BTreeMap<Partition, u64> = [(part(&[5]), 1), (part(&[2, 2, 1]), 1)]
            .into_iter()
            .collect();
        assert_eq!(d.nonzero_map(), expected);
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let t = CharacterTable::new(5).unwrap();
        let f = ClassFunction::new(5, vec![1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert!(matches!(decompose(&f, &t), Err(CharError::NotACharacter(_))));
        let g = ClassFunction::new(5, vec![-1, -1, -1, -1, -1, -1, -1]).unwrap();
        assert!(matches!(decompose(&g, &t), Err(CharError::NotACharacter(_))));
    }

    #[test]
    fn natural_permutation_character() {
        let t = CharacterTable::new(5).unwrap();
        let chi = perm_character(&t, |g| g.fixed_points() as u64);
        assert_eq!(chi.values(), &[5, 3, 1, 2, 0, 1, 0]);
        // trivial action on one point
        let one = perm_character(&t, |_| 1);
        assert_eq!(one, t.trivial());
    }

    #[test]
    fn sym2_alt2_of_standard_n5() {
        let t = CharacterTable::new(5).unwrap();
        let chi41 = t.row(&part(&[4, 1])).unwrap();
        let sym = sym2_character(&chi41).unwrap();
        let alt = alt2_character(&chi41).unwrap();
        let sym_expected: BTreeMap<Partition, u64> =
            [(part(&[5]), 1), (part(&[4, 1]), 1), (part(&[3, 2]), 1)]
                .into_iter()
                .collect();
        assert_eq!(decompose(&sym, &t).unwrap().nonzero_map(), sym_expected);
        let alt_expected: BTreeMap<Partition, u64> =
            [(part(&[3, 1, 1]), 1)].into_iter().collect();
        assert_eq!(decompose(&alt, &t).unwrap().nonzero_map(), alt_expected);
    }

    #[test]
    fn sym2_alt2_of_trivial() {
        let t = CharacterTable::new(5).unwrap();
        let sym = sym2_character(&t.trivial()).unwrap();
        let alt = alt2_character(&t.trivial()).unwrap();
        assert_eq!(sym, t.trivial());
        assert!(alt.values().iter().all(|&v| v == 0));
    }

    #[test]
    fn sym2_plus_alt2_is_pointwise_square() {
        for n in 2..=7usize {
            let t = CharacterTable::new(n).unwrap();
            for irrep in t.irreps() {
                let chi = t.row(irrep).unwrap();
                let sym = sym2_character(&chi).unwrap();
                let alt = alt2_character(&chi).unwrap();
                let sum: Vec<i64> = sym
                    .values()
                    .iter()
                    .zip(alt.values())
                    .map(|(a, b)| a + b)
                    .collect();
                assert_eq!(sum, chi.pointwise_square().values(), "n={n} irrep {irrep}");
            }
        }
    }

    #[test]
    fn tensor_sign_examples() {
        let t = CharacterTable::new(5).unwrap();
        let chi32 = t.row(&part(&[3, 2])).unwrap();
        assert_eq!(tensor_sign(&chi32), t.row(&part(&[2, 2, 1])).unwrap());
        assert_eq!(tensor_sign(&t.trivial()), t.sign());
        assert_eq!(tensor_sign(&t.sign()), t.trivial());
    }

    #[test]
    fn tensor_sign_conjugates_every_irrep() {
        for n in 1..=8usize {
            let t = CharacterTable::new(n).unwrap();
            for irrep in t.irreps() {
                let twisted = tensor_sign(&t.row(irrep).unwrap());
                assert_eq!(
                    twisted,
                    t.row(&irrep.conjugate()).unwrap(),
                    "n={n} irrep {irrep}"
                );
            }
        }
    }

    #[test]
    fn decompose_inverts_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in 3..=7usize {
            let t = CharacterTable::new(n).unwrap();
            for _ in 0..10 {
                let classes = t.classes().len();
                let mut f = vec![0i64; classes];
                let mut expected: BTreeMap<Partition, u64> = BTreeMap::new();
                for _ in 0..4 {
                    let r = rng.random_range(0..t.irreps().len());
                    let m = rng.random_range(0..3u64);
                    if m == 0 {
                        continue;
                    }
                    *expected.entry(t.irreps()[r].clone()).or_insert(0) += m;
                    for c in 0..classes {
                        f[c] += m as i64 * t.value(r, c);
                    }
                }
                let d = decompose(&ClassFunction::new(n, f).unwrap(), &t).unwrap();
                assert_eq!(d.nonzero_map(), expected);
            }
        }
    }

    proptest! {
        #[test]
        fn power_class_matches_actual_squaring(seed in 0u64..300, n in 1usize..9) {
            // Independent route: square an actual permutation and read off its
            // cycle type.
            let perms = all_permutations(n);
            let g = &perms[seed as usize % perms.len()];
            let squared = g.compose(g).unwrap();
            prop_assert_eq!(power_class(&g.cycle_type()), squared.cycle_type());
        }
    }
}
