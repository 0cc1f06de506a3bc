//! Exact symbolic algebra for subsets of the positive naturals.
//!
//! An [`IndexSet`] is either a *closed* normal form
//! `(finite include) ∪ (disjoint union of infinite generators) ∖ (finite exclude)`
//! or an opaque *sampled* set whose membership is only known up to a horizon.
//! Closed forms have exact membership, exact prefix counts, and exact k-th
//! element queries; sampled sets answer the same questions below their horizon
//! and fail with [`NatSetError::HorizonExceeded`] beyond it.
//!
//! The block structure comes from a [`Decomposition`] of ℕ into infinitely
//! many infinite disjoint blocks. The canonical decomposition is 2-adic:
//! Δ_j = odd multiples of 2^(j-1), so block membership is a trailing-zero
//! count and every block has exact natural density 2^(-j). All block
//! arithmetic routes through `Decomposition`, so alternative decompositions
//! plug in by extending that type.
//!
//! Naturals start at 1 throughout.

mod algebra;
mod text;

pub use text::ParseSetError;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::verdict::{Certificate, Truth, Verdict};

/// Default horizon for sampled sets produced by the set algebra.
pub const DEFAULT_SET_HORIZON: u64 = 1 << 17;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NatSetError {
    #[error("sampled set evaluable only up to {horizon}, requested {requested}")]
    HorizonExceeded { horizon: u64, requested: u64 },
    #[error("set has only {len} elements, requested element {k}")]
    OutOfRange { len: u64, k: u64 },
    #[error("element exceeds the u64 universe")]
    Overflow,
}

/// A partition of ℕ into infinitely many infinite disjoint blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decomposition {
    /// Δ_j = { n : the exponent of 2 in n is j-1 }.
    TwoAdic,
}

impl Decomposition {
    pub fn name(self) -> &'static str {
        match self {
            Decomposition::TwoAdic => "2adic",
        }
    }

    /// Block index of `n` (1-based). Total for every n ≥ 1.
    pub fn block_of(self, n: u64) -> u64 {
        debug_assert!(n >= 1);
        match self {
            Decomposition::TwoAdic => u64::from(n.trailing_zeros()) + 1,
        }
    }

    /// |Δ_j ∩ [1, n]|.
    pub fn block_count(self, j: u64, n: u64) -> u64 {
        match self {
            Decomposition::TwoAdic => {
                let s = j - 1;
                if s >= 64 {
                    return 0;
                }
                let lo = n >> s;
                let hi = if s + 1 >= 64 { 0 } else { n >> (s + 1) };
                lo - hi
            }
        }
    }

    /// |⋃_{j ≥ lo} Δ_j ∩ [1, n]|.
    pub fn range_count(self, lo: u64, n: u64) -> u64 {
        match self {
            Decomposition::TwoAdic => {
                let s = lo - 1;
                if s >= 64 {
                    0
                } else {
                    n >> s
                }
            }
        }
    }

    /// k-th smallest element of Δ_j (1-based position k).
    pub fn block_nth(self, j: u64, k: u64) -> Result<u64, NatSetError> {
        match self {
            Decomposition::TwoAdic => {
                let s = j - 1;
                if s >= 64 {
                    return Err(NatSetError::Overflow);
                }
                let odd = k
                    .checked_mul(2)
                    .and_then(|x| x.checked_sub(1))
                    .ok_or(NatSetError::Overflow)?;
                odd.checked_shl(s as u32).ok_or(NatSetError::Overflow)
            }
        }
    }

    /// Position of `n` within its own block (1-based); `n` must lie in Δ_j.
    pub fn position_in_block(self, n: u64) -> u64 {
        match self {
            Decomposition::TwoAdic => {
                let s = n.trailing_zeros();
                ((n >> s) + 1) / 2
            }
        }
    }
}

/// One infinite generator of a closed normal form.
///
/// All block-structured generators refer to the canonical decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// { n : n ≥ n0 }
    Tail { n0: u64 },
    /// { first + k·step : k ≥ 0 }
    Ap { first: u64, step: u64 },
    /// Δ_j
    Block { j: u64 },
    /// Δ_j ∩ [from, ∞)
    BlockTail { j: u64, from: u64 },
    /// Members of Δ_j at within-block positions pos0, pos0+step, pos0+2·step, …
    BlockAp { j: u64, pos0: u64, step: u64 },
    /// ⋃_{j ≥ lo} Δ_j
    BlockRange { lo: u64 },
}

pub(crate) const DEC: Decomposition = Decomposition::TwoAdic;

impl Gen {
    /// Normalizing constructor: collapses degenerate parameter choices.
    pub(crate) fn normalized(self) -> Gen {
        match self {
            Gen::Ap { first, step } if step == 1 => Gen::Tail { n0: first },
            Gen::BlockRange { lo } if lo == 1 => Gen::Tail { n0: 1 },
            Gen::BlockTail { j, from } => match DEC.block_nth(j, 1) {
                Ok(min) if from <= min => Gen::Block { j },
                _ => self,
            },
            Gen::BlockAp { j, pos0, step } if pos0 == 1 && step == 1 => Gen::Block { j },
            Gen::BlockAp { j, pos0, step } if step == 1 => match DEC.block_nth(j, pos0) {
                Ok(from) => Gen::BlockTail { j, from },
                Err(_) => self,
            },
            other => other,
        }
    }

    pub fn contains(self, n: u64) -> bool {
        debug_assert!(n >= 1);
        match self {
            Gen::Tail { n0 } => n >= n0,
            Gen::Ap { first, step } => n >= first && (n - first) % step == 0,
            Gen::Block { j } => DEC.block_of(n) == j,
            Gen::BlockTail { j, from } => n >= from && DEC.block_of(n) == j,
            Gen::BlockAp { j, pos0, step } => {
                DEC.block_of(n) == j && {
                    let p = DEC.position_in_block(n);
                    p >= pos0 && (p - pos0) % step == 0
                }
            }
            Gen::BlockRange { lo } => DEC.block_of(n) >= lo,
        }
    }

    /// |self ∩ [1, n]|, exact.
    pub fn count(self, n: u64) -> u64 {
        match self {
            Gen::Tail { n0 } => {
                if n >= n0 {
                    n - n0 + 1
                } else {
                    0
                }
            }
            Gen::Ap { first, step } => {
                if n >= first {
                    (n - first) / step + 1
                } else {
                    0
                }
            }
            Gen::Block { j } => DEC.block_count(j, n),
            Gen::BlockTail { j, from } => {
                DEC.block_count(j, n).saturating_sub(DEC.block_count(j, from.saturating_sub(1)))
            }
            Gen::BlockAp { j, pos0, step } => {
                let positions = DEC.block_count(j, n);
                if positions >= pos0 {
                    (positions - pos0) / step + 1
                } else {
                    0
                }
            }
            Gen::BlockRange { lo } => DEC.range_count(lo, n),
        }
    }

    /// k-th smallest element (1-based); errors only when it exceeds u64.
    pub fn nth(self, k: u64) -> Result<u64, NatSetError> {
        debug_assert!(k >= 1);
        match self {
            Gen::Tail { n0 } => n0.checked_add(k - 1).ok_or(NatSetError::Overflow),
            Gen::Ap { first, step } => {
                let off = (k - 1).checked_mul(step).ok_or(NatSetError::Overflow)?;
                first.checked_add(off).ok_or(NatSetError::Overflow)
            }
            Gen::Block { j } => DEC.block_nth(j, k),
            Gen::BlockTail { j, from } => {
                let skipped = DEC.block_count(j, from.saturating_sub(1));
                let pos = skipped.checked_add(k).ok_or(NatSetError::Overflow)?;
                DEC.block_nth(j, pos)
            }
            Gen::BlockAp { j, pos0, step } => {
                let off = (k - 1).checked_mul(step).ok_or(NatSetError::Overflow)?;
                let pos = pos0.checked_add(off).ok_or(NatSetError::Overflow)?;
                DEC.block_nth(j, pos)
            }
            Gen::BlockRange { lo } => {
                let s = lo - 1;
                if s >= 64 {
                    return Err(NatSetError::Overflow);
                }
                k.checked_shl(s as u32)
                    .filter(|v| v >> s == k)
                    .ok_or(NatSetError::Overflow)
            }
        }
    }

    pub fn min(self) -> Result<u64, NatSetError> {
        self.nth(1)
    }

    /// Which blocks this generator meets (always infinitely when met at all).
    pub(crate) fn block_contact(self) -> BlockContact {
        match self {
            Gen::Tail { .. } => BlockContact::all_from(1),
            Gen::Ap { first, step } => {
                let s = u64::from(step.trailing_zeros());
                let t = u64::from(first.trailing_zeros());
                if t < s {
                    BlockContact::only(t + 1)
                } else {
                    BlockContact::all_from(s + 1)
                }
            }
            Gen::Block { j } | Gen::BlockTail { j, .. } | Gen::BlockAp { j, .. } => {
                BlockContact::only(j)
            }
            Gen::BlockRange { lo } => BlockContact::all_from(lo),
        }
    }
}

/// How a closed form meets the blocks of the canonical decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockContact {
    /// Meets exactly the listed blocks.
    Finitely(BTreeSet<u64>),
    /// Meets every block ≥ `from`, plus the listed smaller ones.
    AllFrom { from: u64, also: BTreeSet<u64> },
}

impl BlockContact {
    fn only(j: u64) -> Self {
        BlockContact::Finitely(BTreeSet::from([j]))
    }

    fn all_from(from: u64) -> Self {
        BlockContact::AllFrom {
            from,
            also: BTreeSet::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BlockContact::Finitely(_))
    }

    pub fn contains(&self, j: u64) -> bool {
        match self {
            BlockContact::Finitely(set) => set.contains(&j),
            BlockContact::AllFrom { from, also } => j >= *from || also.contains(&j),
        }
    }

    fn absorb(&mut self, other: BlockContact) {
        let merged = match (&mut *self, other) {
            (BlockContact::Finitely(a), BlockContact::Finitely(b)) => {
                a.extend(b);
                return;
            }
            (BlockContact::Finitely(a), BlockContact::AllFrom { from, mut also }) => {
                also.extend(a.iter().copied().filter(|j| *j < from));
                BlockContact::AllFrom { from, also }
            }
            (BlockContact::AllFrom { from, also }, BlockContact::Finitely(b)) => {
                also.extend(b.into_iter().filter(|j| *j < *from));
                return;
            }
            (BlockContact::AllFrom { from, also }, BlockContact::AllFrom { from: f2, also: a2 }) => {
                let new_from = (*from).min(f2);
                let mut merged: BTreeSet<u64> = also.iter().copied().chain(a2).collect();
                merged.retain(|j| *j < new_from);
                BlockContact::AllFrom {
                    from: new_from,
                    also: merged,
                }
            }
        };
        *self = merged;
    }

    /// Iterate met blocks in increasing order (unbounded for `AllFrom`).
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let (finite, from): (Vec<u64>, Option<u64>) = match self {
            BlockContact::Finitely(set) => (set.iter().copied().collect(), None),
            BlockContact::AllFrom { from, also } => (also.iter().copied().collect(), Some(*from)),
        };
        let tail = from.map(|f| f..).into_iter().flatten();
        finite.into_iter().chain(tail)
    }
}

/// Closed normal form. Invariants kept by the constructors:
/// generators pairwise disjoint and sorted, `include` disjoint from the
/// generator union, `exclude` a subset of the generator union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closed {
    include: BTreeSet<u64>,
    gens: Vec<Gen>,
    exclude: BTreeSet<u64>,
}

impl Closed {
    pub fn include(&self) -> &BTreeSet<u64> {
        &self.include
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn exclude(&self) -> &BTreeSet<u64> {
        &self.exclude
    }

    pub fn contains(&self, n: u64) -> bool {
        if self.include.contains(&n) {
            return true;
        }
        if self.exclude.contains(&n) {
            return false;
        }
        self.gens.iter().any(|g| g.contains(n))
    }

    pub fn prefix_count(&self, n: u64) -> u64 {
        let mut total = self.include.range(1..=n).count() as u64;
        for g in &self.gens {
            total += g.count(n);
        }
        total -= self.exclude.range(1..=n).count() as u64;
        total
    }

    pub fn is_finite(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.include.is_empty() && self.gens.is_empty()
    }

    /// Smallest element, `Ok(None)` when empty, `Err(Overflow)` when the
    /// minimum exists but exceeds u64.
    pub fn min_element(&self) -> Result<Option<u64>, NatSetError> {
        let mut best: Option<u64> = self.include.iter().next().copied();
        let mut all_overflow = true;
        let mut any_gen = false;
        for g in &self.gens {
            any_gen = true;
            // Step past excluded leading elements of the generator.
            let mut k = 1;
            loop {
                match g.nth(k) {
                    Ok(v) => {
                        all_overflow = false;
                        if self.exclude.contains(&v) {
                            k += 1;
                            continue;
                        }
                        best = Some(best.map_or(v, |b| b.min(v)));
                        break;
                    }
                    Err(_) => break,
                }
            }
        }
        if best.is_none() && any_gen && all_overflow {
            return Err(NatSetError::Overflow);
        }
        Ok(best)
    }

    pub(crate) fn block_contact(&self, infinite_only: bool) -> BlockContact {
        let mut contact = BlockContact::Finitely(BTreeSet::new());
        for g in &self.gens {
            contact.absorb(g.block_contact());
        }
        if !infinite_only {
            let blocks: BTreeSet<u64> = self.include.iter().map(|n| DEC.block_of(*n)).collect();
            contact.absorb(BlockContact::Finitely(blocks));
        }
        contact
    }
}

/// Opaque set known only through sampled membership up to a horizon.
#[derive(Debug, Clone)]
pub struct Sampled {
    members: Arc<Vec<u64>>,
    horizon: u64,
    note: String,
}

impl PartialEq for Sampled {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.horizon == other.horizon
    }
}

impl Eq for Sampled {}

impl Sampled {
    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    fn check(&self, n: u64) -> Result<(), NatSetError> {
        if n > self.horizon {
            Err(NatSetError::HorizonExceeded {
                horizon: self.horizon,
                requested: n,
            })
        } else {
            Ok(())
        }
    }
}

/// One of the spec'd binary set operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Difference,
    Intersect,
}

/// Classification of S ∩ Δ_j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSignature {
    Empty,
    FiniteNonempty,
    Infinite,
    Unknown,
}

impl fmt::Display for BlockSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BlockSignature::Empty => "empty",
            BlockSignature::FiniteNonempty => "finite-nonempty",
            BlockSignature::Infinite => "infinite",
            BlockSignature::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

/// A subset of the positive naturals in closed normal form, or a sampled
/// stand-in when no closed form exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexSet {
    Closed(Closed),
    Sampled(Sampled),
}

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet::Closed(Closed {
            include: BTreeSet::new(),
            gens: Vec::new(),
            exclude: BTreeSet::new(),
        })
    }

    /// The full set ℕ.
    pub fn nat() -> Self {
        IndexSet::tail(1)
    }

    pub fn finite(elems: impl IntoIterator<Item = u64>) -> Self {
        let include: BTreeSet<u64> = elems.into_iter().filter(|n| *n >= 1).collect();
        IndexSet::Closed(Closed {
            include,
            gens: Vec::new(),
            exclude: BTreeSet::new(),
        })
    }

    pub fn from_gen(g: Gen) -> Self {
        IndexSet::Closed(Closed {
            include: BTreeSet::new(),
            gens: vec![g.normalized()],
            exclude: BTreeSet::new(),
        })
    }

    pub fn tail(n0: u64) -> Self {
        Self::from_gen(Gen::Tail { n0: n0.max(1) })
    }

    pub fn ap(first: u64, step: u64) -> Self {
        Self::from_gen(Gen::Ap {
            first: first.max(1),
            step: step.max(1),
        })
    }

    pub fn block(j: u64) -> Self {
        Self::from_gen(Gen::Block { j: j.max(1) })
    }

    pub fn block_tail(j: u64, from: u64) -> Self {
        Self::from_gen(Gen::BlockTail {
            j: j.max(1),
            from: from.max(1),
        })
    }

    pub fn block_ap(j: u64, pos0: u64, step: u64) -> Self {
        Self::from_gen(Gen::BlockAp {
            j: j.max(1),
            pos0: pos0.max(1),
            step: step.max(1),
        })
    }

    pub fn block_range(lo: u64) -> Self {
        Self::from_gen(Gen::BlockRange { lo: lo.max(1) })
    }

    /// First `count` blocks Δ_1 ∪ … ∪ Δ_count.
    pub fn first_blocks(count: u64) -> Self {
        let mut out = IndexSet::empty();
        for j in 1..=count {
            out = out.union(&IndexSet::block(j));
        }
        out
    }

    pub fn sampled(members: Vec<u64>, horizon: u64, note: impl Into<String>) -> Self {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        members.retain(|n| *n >= 1 && *n <= horizon);
        IndexSet::Sampled(Sampled {
            members: Arc::new(members),
            horizon,
            note: note.into(),
        })
    }

    pub fn sampled_from(
        horizon: u64,
        note: impl Into<String>,
        pred: impl Fn(u64) -> bool,
    ) -> Self {
        let members = (1..=horizon).filter(|n| pred(*n)).collect();
        Self::sampled(members, horizon, note)
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self, IndexSet::Sampled(_))
    }

    pub fn as_closed(&self) -> Option<&Closed> {
        match self {
            IndexSet::Closed(c) => Some(c),
            IndexSet::Sampled(_) => None,
        }
    }

    pub fn horizon(&self) -> Option<u64> {
        match self {
            IndexSet::Closed(_) => None,
            IndexSet::Sampled(s) => Some(s.horizon),
        }
    }

    /// Exact membership; errors past the horizon of a sampled set.
    pub fn contains(&self, n: u64) -> Result<bool, NatSetError> {
        debug_assert!(n >= 1);
        match self {
            IndexSet::Closed(c) => Ok(c.contains(n)),
            IndexSet::Sampled(s) => {
                s.check(n)?;
                Ok(s.members.binary_search(&n).is_ok())
            }
        }
    }

    /// |S ∩ [1, N]|, exact.
    pub fn prefix_count(&self, n: u64) -> Result<u64, NatSetError> {
        debug_assert!(n >= 1);
        match self {
            IndexSet::Closed(c) => Ok(c.prefix_count(n)),
            IndexSet::Sampled(s) => {
                s.check(n)?;
                Ok(s.members.partition_point(|m| *m <= n) as u64)
            }
        }
    }

    /// k-th smallest element (1-based).
    pub fn nth(&self, k: u64) -> Result<u64, NatSetError> {
        debug_assert!(k >= 1);
        match self {
            IndexSet::Closed(c) => {
                if c.is_finite() {
                    let len = c.include.len() as u64;
                    return c
                        .include
                        .iter()
                        .nth(k as usize - 1)
                        .copied()
                        .ok_or(NatSetError::OutOfRange { len, k });
                }
                // Binary search on the exact prefix count.
                let mut lo = 1u64;
                let mut hi = 1u64;
                loop {
                    if c.prefix_count(hi) >= k {
                        break;
                    }
                    hi = hi.checked_mul(2).ok_or(NatSetError::Overflow)?;
                }
                while lo < hi {
                    let mid = lo + (hi - lo) / 2;
                    if c.prefix_count(mid) >= k {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                Ok(lo)
            }
            IndexSet::Sampled(s) => {
                s.members
                    .get(k as usize - 1)
                    .copied()
                    .ok_or(NatSetError::HorizonExceeded {
                        horizon: s.horizon,
                        requested: k,
                    })
            }
        }
    }

    /// Elements ≤ n as a sorted vector.
    pub fn elements_up_to(&self, n: u64) -> Result<Vec<u64>, NatSetError> {
        match self {
            IndexSet::Closed(c) => {
                let mut out: Vec<u64> = c.include.range(1..=n).copied().collect();
                for g in &c.gens {
                    let mut k = 1;
                    while let Ok(v) = g.nth(k) {
                        if v > n {
                            break;
                        }
                        if !c.exclude.contains(&v) {
                            out.push(v);
                        }
                        k += 1;
                    }
                }
                out.sort_unstable();
                Ok(out)
            }
            IndexSet::Sampled(s) => {
                s.check(n)?;
                Ok(s.members.iter().copied().take_while(|m| *m <= n).collect())
            }
        }
    }

    pub fn combine(op: SetOp, a: &IndexSet, b: &IndexSet) -> IndexSet {
        match op {
            SetOp::Union => a.union(b),
            SetOp::Difference => a.difference(b),
            SetOp::Intersect => a.intersect(b),
        }
    }

    /// True iff the normal form has no infinite generator; Unknown for sampled sets.
    pub fn is_finite_set(&self) -> Verdict {
        match self {
            IndexSet::Closed(c) => {
                if c.is_finite() {
                    Verdict::yes(
                        Certificate::new("natset.finite")
                            .line(format!("explicit finite set of {} elements", c.include.len())),
                    )
                } else {
                    Verdict::no(Certificate::new("natset.infinite-generator").line(format!(
                        "normal form contains infinite generator {}",
                        c.gens[0]
                    )))
                }
            }
            IndexSet::Sampled(s) => Verdict::unknown(
                s.horizon,
                Certificate::new("natset.sampled")
                    .line(format!("{} members below horizon {}", s.members.len(), s.horizon))
                    .line("finiteness cannot be certified by sampling"),
            ),
        }
    }

    /// Exact classification of S ∩ Δ_j; Unknown only for sampled sets.
    pub fn block_signature(&self, dec: Decomposition, j: u64) -> BlockSignature {
        let Decomposition::TwoAdic = dec;
        match self {
            IndexSet::Closed(c) => {
                if c.block_contact(true).contains(j) {
                    return BlockSignature::Infinite;
                }
                // Generators meet a block either infinitely or not at all, so
                // only explicit include elements can give a finite trace.
                if c.include.iter().any(|n| DEC.block_of(*n) == j) {
                    BlockSignature::FiniteNonempty
                } else {
                    BlockSignature::Empty
                }
            }
            IndexSet::Sampled(_) => BlockSignature::Unknown,
        }
    }

    /// Blocks met at all / met infinitely (closed forms only).
    pub fn blocks_met(&self) -> Option<BlockContact> {
        self.as_closed().map(|c| c.block_contact(false))
    }

    pub fn blocks_infinite(&self) -> Option<BlockContact> {
        self.as_closed().map(|c| c.block_contact(true))
    }

    /// Structural emptiness: exact for closed forms; for sampled sets,
    /// empty-below-horizon is all that can be said.
    pub fn is_empty_certain(&self) -> bool {
        match self {
            IndexSet::Closed(c) => c.is_empty(),
            IndexSet::Sampled(_) => false,
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::format_set(self, f)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::format_gen(self, f)
    }
}

impl std::str::FromStr for IndexSet {
    type Err = ParseSetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse_set(s)
    }
}

#[cfg(test)]
mod tests;
