//! The representation of `W = S_n` on `Herm(V)`: hermitian forms as canonical
//! `n×n` matrices acting on `V ⊂ C^n`, the permutation basis `h_i`, the
//! induced character, and numerical isotypic projectors.
//!
//! Forms live as ambient `n×n` matrices normalized by `P·H·P` with
//! `P = I − J/n` the projector onto `V`, so the `S_n` action stays a
//! permutation-matrix conjugation and no basis-of-`V` convention can drift
//! between modules. The isotypic machinery treats `Herm(V)` as a real
//! vector space of dimension `(n−1)²`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;
use thiserror::Error;

use crate::chartab::{dimension, CharError, CharacterTable, ClassFunction};
use crate::permgroup::{all_permutations, factorial, partitions, GroupError, Partition, Permutation};

pub type C64 = Complex<f64>;

/// How far from conjugate-symmetric an input matrix may be.
pub const HERMITIAN_INPUT_TOL: f64 = 1e-9;

/// Relative singular-value threshold for numerical rank.
pub const RANK_REL_TOL: f64 = 1e-8;

/// Largest `n` for which projectors sum over all `n!` group elements.
pub const MAX_PROJECTOR_DEGREE: usize = 7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HermError {
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix is not conjugate-symmetric (deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("coordinates do not sum to zero (|Σz_i| = {0:.3e}); pass them through projection first")]
    NotInV(f64),
    #[error("n = {0} outside supported range {1}..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A point of `V = {z ∈ C^n : Σ z_i = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointV {
    coords: DVector<C64>,
}

impl PointV {
    /// Projects arbitrary coordinates onto `V` by subtracting the mean.
    pub fn project(coords: &[C64]) -> Self {
        let n = coords.len();
        let mean = coords.iter().sum::<C64>() / n as f64;
        Self {
            coords: DVector::from_iterator(n, coords.iter().map(|z| z - mean)),
        }
    }

    /// Accepts coordinates already summing to zero (relative tolerance 1e−9),
    /// then removes the residual mean so the invariant holds to machine
    /// precision.
    pub fn new(coords: &[C64]) -> Result<Self, HermError> {
        let sum: C64 = coords.iter().sum();
        let scale = coords
            .iter()
            .map(|z| z.norm())
            .fold(1.0f64, f64::max);
        if sum.norm() > 1e-9 * scale {
            return Err(HermError::NotInV(sum.norm()));
        }
        Ok(Self::project(coords))
    }

    pub(crate) fn from_raw(coords: DVector<C64>) -> Self {
        Self { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &DVector<C64> {
        &self.coords
    }

    pub fn get(&self, i: usize) -> C64 {
        self.coords[i]
    }

    /// `|z_i|²`.
    pub fn modulus_sq(&self, i: usize) -> f64 {
        self.coords[i].norm_sqr()
    }

    pub fn norm_sq(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.norm_sq() == 0.0
    }

    pub fn scale(&self, lambda: C64) -> PointV {
        Self {
            coords: self.coords.map(|z| z * lambda),
        }
    }
}

/// `P = I − J/n`, the orthogonal projector of `C^n` onto `V`.
pub fn v_projector(n: usize) -> DMatrix<C64> {
    DMatrix::from_fn(n, n, |i, j| {
        let delta = if i == j { 1.0 } else { 0.0 };
        C64::new(delta - 1.0 / n as f64, 0.0)
    })
}

/// A hermitian form on `V`, stored as its canonical ambient matrix
/// (conjugate-symmetric with all row and column sums zero).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianForm {
    mat: DMatrix<C64>,
}

impl HermitianForm {
    /// `P·½(H + H†)·P`: the canonical representative of the form `H` defines
    /// on `V`. Idempotent, and evaluation on `V` is unchanged.
    pub fn canonicalize(raw: &DMatrix<C64>) -> Result<Self, HermError> {
        if raw.nrows() != raw.ncols() {
            return Err(HermError::SizeMismatch(raw.nrows(), raw.ncols()));
        }
        let n = raw.nrows();
        let scale = raw.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
        let deviation = (raw - raw.adjoint()).iter().map(|z| z.norm()).fold(0.0f64, f64::max);
        if deviation > HERMITIAN_INPUT_TOL * scale {
            return Err(HermError::NotHermitian(deviation));
        }
        let sym = (raw + raw.adjoint()).scale(0.5);
        let p = v_projector(n);
        Ok(Self { mat: &p * sym * &p })
    }

    pub(crate) fn from_canonical(mat: DMatrix<C64>) -> Self {
        Self { mat }
    }

    pub fn n(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.mat
    }

    /// `h(u, v) = u† H v` — conjugate-linear in `u`, linear in `v`.
    pub fn evaluate(&self, u: &PointV, v: &PointV) -> Result<C64, HermError> {
        if u.n() != self.n() || v.n() != self.n() {
            return Err(HermError::SizeMismatch(self.n(), u.n().max(v.n())));
        }
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.n() {
            for j in 0..self.n() {
                acc += u.coords[i].conj() * self.mat[(i, j)] * v.coords[j];
            }
        }
        Ok(acc)
    }

    /// `h(z, z)`, which is real for a hermitian form.
    pub fn quad(&self, z: &PointV) -> Result<f64, HermError> {
        let v = self.evaluate(z, z)?;
        debug_assert!(v.im.abs() <= 1e-12 * (1.0 + v.re.abs()));
        Ok(v.re)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn add(&self, other: &HermitianForm) -> HermitianForm {
        Self {
            mat: &self.mat + &other.mat,
        }
    }

    pub fn sub(&self, other: &HermitianForm) -> HermitianForm {
        Self {
            mat: &self.mat - &other.mat,
        }
    }

    pub fn scale(&self, t: f64) -> HermitianForm {
        Self {
            mat: self.mat.scale(t),
        }
    }
}

/// Real (Frobenius) inner product `Re tr(A† B)` of two hermitian forms.
pub fn frobenius_inner(a: &HermitianForm, b: &HermitianForm) -> f64 {
    a.mat
        .iter()
        .zip(b.mat.iter())
        .map(|(x, y)| (x.conj() * y).re)
        .sum()
}

/// The canonical invariant form: `P` itself (the restriction of the standard
/// inner product to `V`). Equals `Σ_i h_i`.
pub fn invariant_form(n: usize) -> HermitianForm {
    HermitianForm::from_canonical(v_projector(n))
}

/// The permutation basis `h_i = P E_ii P`, with `h_i(z, z) = |z_i|²` on `V`.
pub fn perm_form_basis(n: usize) -> Vec<HermitianForm> {
    assert!(n >= 2, "the permutation basis needs n ≥ 2");
    (0..n)
        .map(|i| {
            let mut e = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
            e[(i, i)] = C64::new(1.0, 0.0);
            HermitianForm::canonicalize(&e).expect("matrix unit is hermitian")
        })
        .collect()
}

/// The action `(g·h)(u, v) = h(g⁻¹u, g⁻¹v)`, i.e. `M_g H M_gᵀ` with `M_g`
/// the permutation matrix of `g`. Implemented as the index remap
/// `(g·H)_{g(i),g(j)} = H_{ij}`, so it is exact.
pub fn act(g: &Permutation, h: &HermitianForm) -> Result<HermitianForm, HermError> {
    let n = h.n();
    if g.degree() != n {
        return Err(HermError::SizeMismatch(g.degree(), n));
    }
    let mut out = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    for i in 0..n {
        for j in 0..n {
            out[(g.apply(i), g.apply(j))] = h.mat[(i, j)];
        }
    }
    Ok(HermitianForm::from_canonical(out))
}

/// `Herm(V)` as a real inner-product space of dimension `(n−1)²`, with an
/// orthonormal basis of canonical forms.
///
/// Ambient coordinates for a hermitian `n×n` matrix: the `n` real diagonal
/// entries, then `(√2·Re H_ij, √2·Im H_ij)` per pair `i < j`; this makes the
/// coordinate map a Frobenius isometry. A permutation acts on these
/// coordinates as a signed permutation (the `Im` coordinate flips sign when
/// the pair order reverses), which keeps the group action exact and cheap.
#[derive(Debug, Clone)]
pub struct FormSpace {
    n: usize,
    dim: usize,
    /// `n² × dim` with orthonormal columns spanning the canonical subspace.
    basis: DMatrix<f64>,
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

impl FormSpace {
    pub fn new(n: usize) -> Result<Self, HermError> {
        if n < 2 {
            return Err(HermError::OutOfRange(n, 2, usize::MAX));
        }
        let ambient = n * n;
        // Columns: the canonical projections of the ambient orthonormal basis.
        let mut columns = DMatrix::zeros(ambient, ambient);
        for k in 0..ambient {
            let unit = Self::unit_form(n, k);
            let canonical = HermitianForm::canonicalize(&unit).expect("unit forms are hermitian");
            columns.set_column(k, &Self::vectorize_matrix(n, canonical.matrix()));
        }
        // The canonicalization is an orthogonal projection, so the singular
        // values are 0 or 1 and a 0.5 threshold is unambiguous.
        let svd = columns.svd(true, false);
        let u = svd.u.as_ref().expect("svd with u requested");
        let kept: Vec<usize> = svd
            .singular_values
            .iter()
            .enumerate()
            .filter(|(_, s)| **s > 0.5)
            .map(|(i, _)| i)
            .collect();
        let dim = (n - 1) * (n - 1);
        if kept.len() != dim {
            return Err(HermError::NumericalFailure(format!(
                "canonical subspace dimension {} ≠ (n−1)² = {}",
                kept.len(),
                dim
            )));
        }
        let mut basis = DMatrix::zeros(ambient, dim);
        for (col, &k) in kept.iter().enumerate() {
            basis.set_column(col, &u.column(k));
        }
        Ok(Self { n, dim, basis })
    }

    fn unit_form(n: usize, k: usize) -> DMatrix<C64> {
        let mut m = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
        if k < n {
            m[(k, k)] = C64::new(1.0, 0.0);
        } else {
            let t = k - n;
            let (i, j) = Self::pair_of_index(n, t / 2);
            if t % 2 == 0 {
                m[(i, j)] = C64::new(1.0 / SQRT2, 0.0);
                m[(j, i)] = C64::new(1.0 / SQRT2, 0.0);
            } else {
                m[(i, j)] = C64::new(0.0, 1.0 / SQRT2);
                m[(j, i)] = C64::new(0.0, -1.0 / SQRT2);
            }
        }
        m
    }

    fn pair_index(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < n);
        // pairs (0,1),(0,2),…,(0,n−1),(1,2),… in order
        i * n - i * (i + 1) / 2 + (j - i - 1)
    }

    fn pair_of_index(n: usize, mut t: usize) -> (usize, usize) {
        for i in 0..n {
            let row = n - i - 1;
            if t < row {
                return (i, i + 1 + t);
            }
            t -= row;
        }
        unreachable!("pair index out of range")
    }

    fn vectorize_matrix(n: usize, m: &DMatrix<C64>) -> DVector<f64> {
        let mut v = DVector::zeros(n * n);
        for i in 0..n {
            v[i] = m[(i, i)].re;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let t = Self::pair_index(n, i, j);
                v[n + 2 * t] = SQRT2 * m[(i, j)].re;
                v[n + 2 * t + 1] = SQRT2 * m[(i, j)].im;
            }
        }
        v
    }

    fn devectorize_matrix(n: usize, v: &DVector<f64>) -> DMatrix<C64> {
        let mut m = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
        for i in 0..n {
            m[(i, i)] = C64::new(v[i], 0.0);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let t = Self::pair_index(n, i, j);
                let re = v[n + 2 * t] / SQRT2;
                let im = v[n + 2 * t + 1] / SQRT2;
                m[(i, j)] = C64::new(re, im);
                m[(j, i)] = C64::new(re, -im);
            }
        }
        m
    }

    /// Applies the ambient signed permutation of `g` to every column of `m`.
    fn permute_rows(&self, g: &Permutation, m: &DMatrix<f64>) -> DMatrix<f64> {
        let n = self.n;
        let mut out = DMatrix::zeros(m.nrows(), m.ncols());
        for i in 0..n {
            let gi = g.apply(i);
            for c in 0..m.ncols() {
                out[(gi, c)] = m[(i, c)];
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let t = Self::pair_index(n, i, j);
                let (a, b) = (g.apply(i), g.apply(j));
                let (tt, flip) = if a < b {
                    (Self::pair_index(n, a, b), 1.0)
                } else {
                    (Self::pair_index(n, b, a), -1.0)
                };
                for c in 0..m.ncols() {
                    out[(n + 2 * tt, c)] = m[(n + 2 * t, c)];
                    out[(n + 2 * tt + 1, c)] = flip * m[(n + 2 * t + 1, c)];
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(n−1)²`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of a canonical form in the orthonormal basis.
    pub fn coords(&self, h: &HermitianForm) -> Result<DVector<f64>, HermError> {
        if h.n() != self.n {
            return Err(HermError::SizeMismatch(h.n(), self.n));
        }
        Ok(self.basis.tr_mul(&Self::vectorize_matrix(self.n, h.matrix())))
    }

    /// The canonical form with the given coordinates.
    pub fn form(&self, coords: &DVector<f64>) -> HermitianForm {
        let v = &self.basis * coords;
        HermitianForm::from_canonical(Self::devectorize_matrix(self.n, &v))
    }

    pub fn basis_form(&self, k: usize) -> HermitianForm {
        let mut e = DVector::zeros(self.dim);
        e[k] = 1.0;
        self.form(&e)
    }

    /// The `dim × dim` orthogonal matrix of `h ↦ g·h` in the orthonormal
    /// basis.
    pub fn action_matrix(&self, g: &Permutation) -> Result<DMatrix<f64>, HermError> {
        if g.degree() != self.n {
            return Err(HermError::SizeMismatch(g.degree(), self.n));
        }
        let moved = self.permute_rows(g, &self.basis);
        Ok(self.basis.tr_mul(&moved))
    }
}

/// Numerical rank: singular values below `1e−8 ×` the largest one count as
/// zero, with an absolute floor of `1e−10` so the zero matrix has rank 0.
pub fn numerical_rank(m: &DMatrix<f64>) -> usize {
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let threshold = (RANK_REL_TOL * smax).max(1e-10);
    svd.singular_values.iter().filter(|s| **s >= threshold).count()
}

/// Trace of `h ↦ g·h` on `Herm(V)` per conjugacy class, rounded to exact
/// integers (residual must stay below 1e−9). Equals `χ_{(n−1,1)}²` pointwise.
pub fn herm_rep_character(n: usize) -> Result<ClassFunction, HermError> {
    if !(2..=8).contains(&n) {
        return Err(HermError::OutOfRange(n, 2, 8));
    }
    let space = FormSpace::new(n)?;
    let mut values = Vec::new();
    for class in partitions(n as u32) {
        let rep = class.representative();
        let trace = space.action_matrix(&rep)?.trace();
        let rounded = trace.round();
        if (trace - rounded).abs() >= 1e-9 {
            return Err(HermError::NumericalFailure(format!(
                "trace {trace} at class {class} is not near an integer"
            )));
        }
        values.push(rounded as i64);
    }
    Ok(ClassFunction::new(n, values)?)
}

/// All isotypic projectors `π_λ = (dim λ / n!) Σ_g χ_λ(g) ρ(g)` on `Herm(V)`,
/// accumulated in one sweep over the group.
#[derive(Debug, Clone)]
pub struct IsotypicDecomposition {
    n: usize,
    space: FormSpace,
    table: CharacterTable,
    projectors: Vec<DMatrix<f64>>,
}

impl IsotypicDecomposition {
    pub fn new(n: usize) -> Result<Self, HermError> {
        if !(2..=MAX_PROJECTOR_DEGREE).contains(&n) {
            return Err(HermError::OutOfRange(n, 2, MAX_PROJECTOR_DEGREE));
        }
        let space = FormSpace::new(n)?;
        let table = CharacterTable::new(n)?;
        let d = space.dim();
        let irrep_count = table.irreps().len();
        let mut projectors = vec![DMatrix::zeros(d, d); irrep_count];
        for g in all_permutations(n) {
            let class = table
                .class_index(&g.cycle_type())
                .expect("every cycle type is a class");
            let m = space.action_matrix(&g)?;
            for (r, proj) in projectors.iter_mut().enumerate() {
                let chi = table.value(r, class);
                if chi != 0 {
                    *proj += m.scale(chi as f64);
                }
            }
        }
        let order = factorial(n) as f64;
        for (r, irrep) in table.irreps().iter().enumerate() {
            let scale = dimension(irrep) as f64 / order;
            projectors[r] *= scale;
        }
        Ok(Self {
            n,
            space,
            table,
            projectors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &FormSpace {
        &self.space
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn projector(&self, irrep: &Partition) -> Option<&DMatrix<f64>> {
        self.table.irrep_index(irrep).map(|i| &self.projectors[i])
    }

    pub fn rank_of(&self, irrep: &Partition) -> Option<usize> {
        self.projector(irrep).map(numerical_rank)
    }

    /// Projects a canonical form into the `λ`-isotypic component.
    pub fn apply(&self, irrep: &Partition, h: &HermitianForm) -> Result<HermitianForm, HermError> {
        let proj = self
            .projector(irrep)
            .ok_or_else(|| HermError::NumericalFailure(format!("unknown irrep {irrep}")))?;
        let coords = self.space.coords(h)?;
        Ok(self.space.form(&(proj * coords)))
    }
}

/// Per-irrep projector rank next to the rank the Lemma predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicEntry {
    pub irrep: Partition,
    pub rank: usize,
    pub expected: usize,
}

/// Result of checking `Herm(V) = 1 ⊕ V_R ⊕ V_{n−2,2} ⊕ V_{n−2,1,1}` at the
/// projector level. `ok` is false on any mismatch; the entries carry the
/// evidence either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicReport {
    pub n: usize,
    pub entries: Vec<IsotypicEntry>,
    pub total_rank: usize,
    pub ok: bool,
}

/// The four irreps the decomposition of `Herm(V)` consists of for `n ≥ 4`.
pub fn lemma_summands(n: usize) -> Vec<Partition> {
    let n = n as u32;
    vec![
        Partition::new(vec![n]).expect("valid"),
        Partition::new(vec![n - 1, 1]).expect("valid"),
        Partition::new(vec![n - 2, 2]).expect("valid"),
        Partition::new(vec![n - 2, 1, 1]).expect("valid"),
    ]
}

/// Computes every isotypic projector rank on `Herm(V)` and compares against
/// the decomposition `1 ⊕ V_R ⊕ V_{n−2,2} ⊕ V_{n−2,1,1}`.
pub fn verify_lemma(n: usize) -> Result<IsotypicReport, HermError> {
    if !(4..=MAX_PROJECTOR_DEGREE).contains(&n) {
        return Err(HermError::OutOfRange(n, 4, MAX_PROJECTOR_DEGREE));
    }
    let decomposition = IsotypicDecomposition::new(n)?;
    let summands = lemma_summands(n);
    let mut entries = Vec::new();
    let mut total = 0;
    let mut ok = true;
    for irrep in decomposition.table.irreps() {
        let rank = decomposition.rank_of(irrep).expect("table irrep");
        let expected = if summands.contains(irrep) {
            dimension(irrep) as usize
        } else {
            0
        };
        ok &= rank == expected;
        total += rank;
        entries.push(IsotypicEntry {
            irrep: irrep.clone(),
            rank,
            expected,
        });
    }
    ok &= total == (n - 1) * (n - 1);
    Ok(IsotypicReport {
        n,
        entries,
        total_rank: total,
        ok,
    })
}
