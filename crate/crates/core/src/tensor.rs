//! Dense valence-typed tensors over [`Rational`].
//!
//! A [`Tensor`] of dimension `m` with `k` slots stores `m^k` entries in
//! row-major order: the first slot is the most significant index. Slot order
//! is never changed implicitly; [`Tensor::permute`] is the only operation that
//! reorders slots.
//!
//! Conventions used throughout the crate (all indices 0-based here, 1-based in
//! reports):
//!
//! | object | valence | entry `[a, b, ..]` means |
//! |---|---|---|
//! | metric `g` | `Down, Down` | `g(e_a, e_b)` |
//! | vector `v` | `Up` | `v = Σ v[a] e_a` |
//! | `(1,1)` tensor `A` | `Up, Down` | `A e_b = Σ_a A[a, b] e_a` |
//! | connection `Γ` | `Up, Down, Down` | `∇_{e_i} e_j = Σ_k Γ[k, i, j] e_k` |
//! | curvature `R` | `Up, Down, Down, Down` | `R(e_i, e_j) e_k = Σ_l R[l, i, j, k] e_l` |
//! | lowered curvature | `Down` x4 | `[i, j, k, l] = g(R(e_i, e_j) e_k, e_l)` |
//! | covariant derivative `∇t` | `Down` + slots of `t` | `[w, ..] = (∇_{e_w} t)[..]` |

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Up,
    Down,
}

impl Slot {
    pub fn flipped(self) -> Slot {
        match self {
            Slot::Up => Slot::Down,
            Slot::Down => Slot::Up,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    valence: Vec<Slot>,
    entries: Vec<Rational>,
}

/// Iterates all multi-indices of a given rank in row-major order.
#[derive(Debug, Clone)]
pub struct MultiIndexIter {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl MultiIndexIter {
    pub fn new(dim: usize, rank: usize) -> Self {
        let current = if dim == 0 && rank > 0 {
            None
        } else {
            Some(vec![0; rank])
        };
        MultiIndexIter { dim, current }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.dim {
                self.current = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(out)
    }
}

pub fn multi_indices(dim: usize, rank: usize) -> MultiIndexIter {
    MultiIndexIter::new(dim, rank)
}

fn kronecker(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

impl Tensor {
    pub fn zeros(dim: usize, valence: &[Slot]) -> Self {
        let len = dim.pow(valence.len() as u32);
        Tensor {
            dim,
            valence: valence.to_vec(),
            entries: vec![Rational::zero(); len],
        }
    }

    pub fn from_fn(dim: usize, valence: &[Slot], mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let entries = multi_indices(dim, valence.len()).map(|idx| f(&idx)).collect();
        Tensor {
            dim,
            valence: valence.to_vec(),
            entries,
        }
    }

    pub fn from_entries(dim: usize, valence: &[Slot], entries: Vec<Rational>) -> Result<Self> {
        let expected = dim.pow(valence.len() as u32);
        if entries.len() != expected {
            return Err(Error::usage(format!(
                "expected {expected} entries for dimension {dim} and {} slots, got {}",
                valence.len(),
                entries.len()
            )));
        }
        Ok(Tensor {
            dim,
            valence: valence.to_vec(),
            entries,
        })
    }

    pub fn scalar(dim: usize, value: Rational) -> Self {
        Tensor {
            dim,
            valence: Vec::new(),
            entries: vec![value],
        }
    }

    pub fn vector(components: Vec<Rational>, slot: Slot) -> Self {
        Tensor {
            dim: components.len(),
            valence: vec![slot],
            entries: components,
        }
    }

    /// Two-slot tensor with `rows[a][b]` at index `[a, b]`.
    pub fn matrix(rows: &[Vec<Rational>], valence: [Slot; 2]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::usage("matrix rows must all have length equal to the row count"));
        }
        Ok(Tensor {
            dim,
            valence: valence.to_vec(),
            entries: rows.iter().flatten().cloned().collect(),
        })
    }

    /// The `(1,1)` identity `δ^a_b`.
    pub fn identity(dim: usize) -> Self {
        Tensor::from_fn(dim, &[Slot::Up, Slot::Down], |ix| kronecker(ix[0], ix[1]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.valence.len()
    }

    pub fn valence(&self) -> &[Slot] {
        &self.valence
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.rank(), "index rank mismatch");
        index.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, index: &[usize]) -> &Rational {
        &self.entries[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: Rational) {
        let o = self.offset(index);
        self.entries[o] = value;
    }

    /// The single entry of a rank-0 tensor.
    pub fn as_scalar(&self) -> Option<&Rational> {
        (self.rank() == 0).then(|| &self.entries[0])
    }

    /// Rows of a two-slot tensor.
    pub fn to_matrix(&self) -> Option<linalg::Matrix> {
        (self.rank() == 2).then(|| {
            self.entries
                .chunks(self.dim)
                .map(|row| row.to_vec())
                .collect()
        })
    }

    pub fn indices(&self) -> MultiIndexIter {
        multi_indices(self.dim, self.rank())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
        self.indices().zip(self.entries.iter())
    }

    fn same_shape(&self, other: &Tensor) -> Result<()> {
        if self.dim != other.dim || self.valence != other.valence {
            return Err(Error::usage(format!(
                "shape mismatch: dim {} {:?} vs dim {} {:?}",
                self.dim, self.valence, other.dim, other.valence
            )));
        }
        Ok(())
    }

    pub fn map(&self, mut f: impl FnMut(&Rational) -> Rational) -> Tensor {
        Tensor {
            dim: self.dim,
            valence: self.valence.clone(),
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        Ok(Tensor {
            dim: self.dim,
            valence: self.valence.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        Ok(Tensor {
            dim: self.dim,
            valence: self.valence.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Tensor {
        self.map(|x| x * factor)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &Rational)> {
        self.iter().find(|(_, v)| !v.is_zero())
    }

    /// Entry of maximal magnitude, lexicographically first among ties, or
    /// `None` for the zero tensor.
    pub fn max_abs_entry(&self) -> Option<(Vec<usize>, &Rational)> {
        let mut best: Option<(Vec<usize>, &Rational)> = None;
        for (idx, v) in self.iter() {
            if v.is_zero() {
                continue;
            }
            match &best {
                Some((_, b)) if v.abs() <= b.abs() => {}
                _ => best = Some((idx, v)),
            }
        }
        best
    }

    /// First index (row-major) at which `self` differs from `expected`,
    /// with `(index, expected, actual)`.
    pub fn first_mismatch(&self, expected: &Tensor) -> Result<Option<(Vec<usize>, Rational, Rational)>> {
        self.same_shape(expected)?;
        Ok(self
            .indices()
            .zip(self.entries.iter().zip(&expected.entries))
            .find(|(_, (a, e))| a != e)
            .map(|(idx, (a, e))| (idx, e.clone(), a.clone())))
    }

    fn check_slot(&self, slot: usize, kind: Slot) -> Result<()> {
        match self.valence.get(slot) {
            None => Err(Error::usage(format!(
                "slot {slot} out of range for a tensor with {} slots",
                self.rank()
            ))),
            Some(&k) if k != kind => Err(Error::usage(format!(
                "slot {slot} is {k:?}, expected {kind:?}"
            ))),
            Some(_) => Ok(()),
        }
    }

    /// Sums an `Up` slot against a `Down` slot and removes both.
    pub fn contract(&self, up_slot: usize, down_slot: usize) -> Result<Tensor> {
        self.check_slot(up_slot, Slot::Up)?;
        self.check_slot(down_slot, Slot::Down)?;
        let remaining: Vec<Slot> = self
            .valence
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != up_slot && s != down_slot)
            .map(|(_, &k)| k)
            .collect();
        let mut full = vec![0; self.rank()];
        Ok(Tensor::from_fn(self.dim, &remaining, |idx| {
            let mut rest = idx.iter();
            for (s, slot) in full.iter_mut().enumerate() {
                if s != up_slot && s != down_slot {
                    *slot = *rest.next().expect("rank bookkeeping");
                }
            }
            (0..self.dim)
                .map(|p| {
                    full[up_slot] = p;
                    full[down_slot] = p;
                    self.get(&full).clone()
                })
                .sum()
        }))
    }

    /// Replaces slot `slot` by `Σ_p m[a, p] t[.., p, ..]` and marks it `new_kind`.
    fn act_on_slot(&self, slot: usize, m: &Tensor, new_kind: Slot) -> Tensor {
        let mut valence = self.valence.clone();
        valence[slot] = new_kind;
        let mut src = vec![0; self.rank()];
        Tensor::from_fn(self.dim, &valence, |idx| {
            src.copy_from_slice(idx);
            (0..self.dim)
                .filter_map(|p| {
                    let coeff = m.get(&[idx[slot], p]);
                    if coeff.is_zero() {
                        return None;
                    }
                    src[slot] = p;
                    Some(coeff * self.get(&src))
                })
                .sum()
        })
    }

    /// Applies a `(1,1)` tensor to an `Up` slot: `t'[.., a, ..] = Σ_p A[a, p] t[.., p, ..]`.
    pub fn apply_endomorphism(&self, slot: usize, a: &Tensor) -> Result<Tensor> {
        self.check_slot(slot, Slot::Up)?;
        if a.valence != [Slot::Up, Slot::Down] || a.dim != self.dim {
            return Err(Error::usage("endomorphism must be an (Up, Down) tensor of matching dimension"));
        }
        Ok(self.act_on_slot(slot, a, Slot::Up))
    }

    /// Lowers an `Up` slot with the metric `g`; the slot stays in place.
    pub fn lower(&self, up_slot: usize, g: &Tensor) -> Result<Tensor> {
        self.check_slot(up_slot, Slot::Up)?;
        check_metric_like(g, Slot::Down, self.dim)?;
        Ok(self.act_on_slot(up_slot, g, Slot::Down))
    }

    /// Raises a `Down` slot with the inverse metric `g_inv`; the slot stays in place.
    pub fn raise(&self, down_slot: usize, g_inv: &Tensor) -> Result<Tensor> {
        self.check_slot(down_slot, Slot::Down)?;
        check_metric_like(g_inv, Slot::Up, self.dim)?;
        Ok(self.act_on_slot(down_slot, g_inv, Slot::Up))
    }

    /// Tensor product; slots of `self` come first.
    pub fn outer(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::usage("outer product of tensors with different dimensions"));
        }
        let mut valence = self.valence.clone();
        valence.extend_from_slice(&other.valence);
        let entries = self
            .entries
            .iter()
            .flat_map(|a| other.entries.iter().map(move |b| a * b))
            .collect();
        Ok(Tensor {
            dim: self.dim,
            valence,
            entries,
        })
    }

    /// Reorders slots: slot `s` of the result is slot `perm[s]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor> {
        let mut seen = vec![false; self.rank()];
        if perm.len() != self.rank() {
            return Err(Error::usage("permutation length must equal the slot count"));
        }
        for &p in perm {
            if p >= self.rank() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::usage(format!("{perm:?} is not a permutation")));
            }
        }
        let valence: Vec<Slot> = perm.iter().map(|&p| self.valence[p]).collect();
        let mut src = vec![0; self.rank()];
        Ok(Tensor::from_fn(self.dim, &valence, |idx| {
            for (s, &p) in perm.iter().enumerate() {
                src[p] = idx[s];
            }
            self.get(&src).clone()
        }))
    }
}

fn check_metric_like(g: &Tensor, kind: Slot, dim: usize) -> Result<()> {
    if g.valence != [kind, kind] || g.dim != dim {
        return Err(Error::InvalidMetric(format!(
            "expected a ({kind:?}, {kind:?}) tensor of dimension {dim}"
        )));
    }
    let m = g.to_matrix().expect("two slots");
    for i in 0..dim {
        for j in i + 1..dim {
            if m[i][j] != m[j][i] {
                return Err(Error::InvalidMetric(format!(
                    "not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if linalg::determinant(&m).is_zero() {
        return Err(Error::InvalidMetric("determinant is zero".into()));
    }
    Ok(())
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor(dim={}, {:?}) {{", self.dim, self.valence)?;
        let mut first = true;
        for (idx, v) in self.iter().filter(|(_, v)| !v.is_zero()) {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, " {idx:?}: {v}")?;
        }
        write!(f, " }}")
    }
}
