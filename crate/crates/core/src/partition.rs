//! Set partitions of `[n] = {1, ..., n}`.
//!
//! A [`SetPartition`] is stored as its restricted growth string: element `i`
//! carries the label of its block, labels are handed out in order of first
//! appearance starting at 0. The encoding is canonical, so equality, hashing
//! and the lexicographic enumeration order all come from the code vector.
//!
//! Elements are 1-based in the textual syntax (`"1,3/2"`) and in
//! [`SetPartition::blocks`]; indices into [`SetPartition::code`] are 0-based.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Largest ground set the `u8` block labels can address.
pub const MAX_N: usize = 255;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    code: Vec<u8>,
}

impl SetPartition {
    /// Builds a partition from a restricted growth string.
    pub fn from_code(code: &[usize]) -> Result<Self> {
        if code.is_empty() {
            return Err(invalid("a partition needs a nonempty ground set"));
        }
        if code.len() > MAX_N {
            return Err(invalid(alloc::format!("ground set larger than {MAX_N}")));
        }
        let mut next = 0usize;
        for (i, &label) in code.iter().enumerate() {
            if label > next {
                return Err(invalid(alloc::format!(
                    "not a restricted growth string: label {label} at position {} exceeds {next}",
                    i + 1
                )));
            }
            if label == next {
                next += 1;
            }
        }
        Ok(SetPartition {
            code: code.iter().map(|&l| l as u8).collect(),
        })
    }

    /// Builds a partition of `[n]` from blocks of 1-based elements, in any order.
    pub fn from_blocks<B: AsRef<[usize]>>(blocks: &[B]) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.as_ref().len()).sum();
        if n == 0 {
            return Err(invalid("a partition needs a nonempty ground set"));
        }
        if n > MAX_N {
            return Err(invalid(alloc::format!("ground set larger than {MAX_N}")));
        }
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(invalid("empty block"));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(invalid(alloc::format!("element {e} outside 1..={n}")));
                }
                if owner[e - 1] != usize::MAX {
                    return Err(invalid(alloc::format!("element {e} appears twice")));
                }
                owner[e - 1] = b;
            }
        }
        Ok(Self::canonical(&owner))
    }

    /// Relabels arbitrary block labels into restricted growth form.
    fn canonical(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let code = labels
            .iter()
            .map(|&l| match map.iter().find(|(old, _)| *old == l) {
                Some(&(_, new)) => new,
                None => {
                    let new = map.len() as u8;
                    map.push((l, new));
                    new
                }
            })
            .collect();
        SetPartition { code }
    }

    /// `0̂_n`: all singletons.
    pub fn finest(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n));
        SetPartition {
            code: (0..n as u8).collect(),
        }
    }

    /// `1̂_n`: a single block.
    pub fn coarsest(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n));
        SetPartition { code: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.code.len()
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// Label of the block holding the 0-based position `i`.
    pub fn label(&self, i: usize) -> usize {
        self.code[i] as usize
    }

    pub fn block_count(&self) -> usize {
        self.code.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Block sizes in order of block minima.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &l in &self.code {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Blocks as ascending lists of 1-based elements, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.code.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.refines(other))
    }

    pub(crate) fn refines(&self, other: &SetPartition) -> bool {
        let mut image = [u8::MAX; MAX_N];
        for (&a, &b) in self.code.iter().zip(&other.code) {
            let slot = &mut image[a as usize];
            if *slot == u8::MAX {
                *slot = b;
            } else if *slot != b {
                return false;
            }
        }
        true
    }

    /// Per-block (first, last) 0-based positions, indexed by label.
    fn spans(&self) -> Vec<(usize, usize)> {
        span_table(&self.code.iter().map(|&l| l as usize).collect::<Vec<_>>())
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        let labels: Vec<usize> = self.code.iter().map(|&l| l as usize).collect();
        find_crossing(&labels).is_none()
    }

    /// Every block is a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.code.windows(2).all(|w| w[0] <= w[1])
    }

    /// Every block has exactly two elements.
    pub fn is_pairing(&self) -> bool {
        self.block_sizes().iter().all(|&s| s == 2)
    }

    /// No proper subinterval `[i..j]` of `[n]` is a union of blocks.
    ///
    /// Singletons count as subintervals, so any singleton block other than
    /// the whole of `[1]` disconnects the partition: `{13/2}` is not connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let spans = self.spans();
        for i in 0..n {
            let mut lo = usize::MAX;
            let mut hi = 0;
            for j in i..n {
                let (first, last) = spans[self.label(j)];
                lo = lo.min(first);
                hi = hi.max(last);
                if lo >= i && hi <= j && (i, j) != (0, n - 1) {
                    return false;
                }
            }
        }
        true
    }

    /// `1` and `n` lie in the same block of the noncrossing closure.
    pub fn is_irreducible(&self) -> bool {
        let closed = self.closure();
        closed.code[0] == closed.code[self.n() - 1]
    }

    /// The smallest noncrossing partition above `self`, found by merging
    /// pairs of crossing blocks until no two blocks cross.
    pub fn closure(&self) -> SetPartition {
        let mut labels: Vec<usize> = self.code.iter().map(|&l| l as usize).collect();
        while let Some((keep, absorb)) = find_crossing(&labels) {
            for l in labels.iter_mut() {
                if *l == absorb {
                    *l = keep;
                }
            }
        }
        Self::canonical(&labels)
    }

    /// The smallest interval partition above `self`: blocks whose spans
    /// overlap are merged.
    pub fn interval_hull(&self) -> SetPartition {
        let spans = self.spans();
        let mut code = Vec::with_capacity(self.n());
        let mut label = 0u8;
        let mut reach = 0;
        for i in 0..self.n() {
            if i > reach {
                label += 1;
            }
            reach = reach.max(spans[self.label(i)].1);
            code.push(label);
        }
        SetPartition { code }
    }

    /// Connected components of the crossing graph on the blocks, as lists
    /// of block labels. Unlike [`closure`](Self::closure) this does not
    /// merge iteratively.
    pub fn crossing_components(&self) -> Vec<Vec<usize>> {
        let blocks = self.blocks();
        let k = blocks.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..k {
            for b in a + 1..k {
                if blocks_cross(&blocks[a], &blocks[b]) {
                    let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; k];
        for b in 0..k {
            let r = root(&mut parent, b);
            if slot[r] == usize::MAX {
                slot[r] = components.len();
                components.push(Vec::new());
            }
            components[slot[r]].push(b);
        }
        components
    }
}

fn span_table(labels: &[usize]) -> Vec<(usize, usize)> {
    let count = labels.iter().max().map_or(0, |&m| m + 1);
    let mut spans = vec![(usize::MAX, 0); count];
    for (i, &l) in labels.iter().enumerate() {
        let s = &mut spans[l];
        s.0 = s.0.min(i);
        s.1 = s.1.max(i);
    }
    spans
}

/// Finds two crossing blocks, returning `(smaller label, larger label)`.
///
/// A crossing exists iff for some consecutive pair `a < c` of one block, an
/// element strictly between them belongs to a block reaching outside `[a, c]`.
fn find_crossing(labels: &[usize]) -> Option<(usize, usize)> {
    let spans = span_table(labels);
    let mut previous: Vec<Option<usize>> = vec![None; spans.len()];
    for (c, &l) in labels.iter().enumerate() {
        if let Some(a) = previous[l] {
            for &other in &labels[a + 1..c] {
                let (first, last) = spans[other];
                if first < a || last > c {
                    return Some((l.min(other), l.max(other)));
                }
            }
        }
        previous[l] = Some(c);
    }
    None
}

fn blocks_cross(x: &[usize], y: &[usize]) -> bool {
    let pattern = |p: &[usize], q: &[usize]| {
        p.iter().any(|&a| {
            q.iter().any(|&b| {
                b > a && p.iter().any(|&c| c > b && q.iter().any(|&d| d > c))
            })
        })
    };
    pattern(x, y) || pattern(y, x)
}

/// Blocks separated by `/`, elements by `,`, both ascending: `1,8/2,4/3,5`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str("/")?;
            }
            for (k, e) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut blocks = Vec::new();
        for chunk in s.trim().split('/') {
            let mut block = Vec::new();
            for item in chunk.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    return Err(fail("empty element"));
                }
                block.push(item.parse::<usize>().map_err(|_| fail("element is not a positive integer"))?);
            }
            blocks.push(block);
        }
        Self::from_blocks(&blocks).map_err(|e| match e {
            Error::InvalidArgument(reason) => fail(&reason),
            other => other,
        })
    }
}

/// Families of partitions of `[n]` that can be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionFamily {
    All,
    Noncrossing,
    Interval,
    Pairing,
    Connected,
    Irreducible,
    ConnectedPairing,
    NcIrreducible,
}

impl PartitionFamily {
    pub const ALL: [PartitionFamily; 8] = [
        PartitionFamily::All,
        PartitionFamily::Noncrossing,
        PartitionFamily::Interval,
        PartitionFamily::Pairing,
        PartitionFamily::Connected,
        PartitionFamily::Irreducible,
        PartitionFamily::ConnectedPairing,
        PartitionFamily::NcIrreducible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionFamily::All => "all",
            PartitionFamily::Noncrossing => "noncrossing",
            PartitionFamily::Interval => "interval",
            PartitionFamily::Pairing => "pairing",
            PartitionFamily::Connected => "connected",
            PartitionFamily::Irreducible => "irreducible",
            PartitionFamily::ConnectedPairing => "connected-pairing",
            PartitionFamily::NcIrreducible => "nc-irreducible",
        }
    }

    pub fn needs_even(self) -> bool {
        matches!(self, PartitionFamily::Pairing | PartitionFamily::ConnectedPairing)
    }

    /// Membership predicate.
    pub fn contains(self, p: &SetPartition) -> bool {
        match self {
            PartitionFamily::All => true,
            PartitionFamily::Noncrossing => p.is_noncrossing(),
            PartitionFamily::Interval => p.is_interval(),
            PartitionFamily::Pairing => p.is_pairing(),
            PartitionFamily::Connected => p.is_connected(),
            PartitionFamily::Irreducible => p.is_irreducible(),
            PartitionFamily::ConnectedPairing => p.is_pairing() && p.is_connected(),
            PartitionFamily::NcIrreducible => {
                p.is_noncrossing() && p.code[0] == p.code[p.n() - 1]
            }
        }
    }

    fn prune_noncrossing(self) -> bool {
        matches!(self, PartitionFamily::Noncrossing | PartitionFamily::NcIrreducible)
    }

    fn prune_pairing(self) -> bool {
        self.needs_even()
    }

    /// Families whose membership is not fully enforced while growing the code.
    fn needs_leaf_check(self) -> bool {
        matches!(
            self,
            PartitionFamily::Connected
                | PartitionFamily::Irreducible
                | PartitionFamily::ConnectedPairing
                | PartitionFamily::NcIrreducible
        )
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartitionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| invalid(alloc::format!("unknown partition family {s:?}")))
    }
}

/// Streams the members of `kind` over `[n]` in lexicographic order of codes.
pub fn enumerate(n: usize, kind: PartitionFamily) -> Result<Partitions> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if n > MAX_N {
        return Err(invalid(alloc::format!("n must be at most {MAX_N}")));
    }
    if kind.needs_even() && n % 2 == 1 {
        return Err(invalid(alloc::format!("{kind} needs an even ground set, got {n}")));
    }
    Ok(Partitions {
        n,
        kind,
        code: Vec::with_capacity(n),
        candidate: vec![0],
        blocks: Vec::new(),
        done: false,
    })
}

/// Depth-first generator over restricted growth strings with per-family
/// pruning. Holds `O(n)` state.
#[derive(Clone, Debug)]
pub struct Partitions {
    n: usize,
    kind: PartitionFamily,
    code: Vec<u8>,
    // next label to try at each open level; always `code.len() + 1` long
    candidate: Vec<u8>,
    // 0-based positions of each block of the current prefix
    blocks: Vec<Vec<u8>>,
    done: bool,
}

impl Partitions {
    fn push(&mut self, label: u8) {
        let pos = self.code.len() as u8;
        if label as usize == self.blocks.len() {
            self.blocks.push(Vec::new());
        }
        self.blocks[label as usize].push(pos);
        self.code.push(label);
        self.candidate.push(0);
    }

    fn pop(&mut self) {
        self.candidate.pop();
        if let Some(label) = self.code.pop() {
            let block = &mut self.blocks[label as usize];
            block.pop();
            if block.is_empty() {
                self.blocks.pop();
            }
        }
    }

    fn allowed(&self, label: u8) -> bool {
        let pos = self.code.len();
        let fresh = label as usize == self.blocks.len();
        if self.kind == PartitionFamily::Interval {
            return fresh || self.code.last() == Some(&label);
        }
        if self.kind.prune_pairing() {
            let singles = self.blocks.iter().filter(|b| b.len() == 1).count();
            if fresh {
                // the new singleton plus every open one still needs a partner
                if singles + 1 > self.n - pos - 1 {
                    return false;
                }
            } else if self.blocks[label as usize].len() != 1 {
                return false;
            }
        }
        if self.kind.prune_noncrossing() && !fresh {
            let last = *self.blocks[label as usize].last().unwrap() as usize;
            for &other in &self.code[last + 1..pos] {
                if (self.blocks[other as usize][0] as usize) < last {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        while !self.done {
            let depth = self.code.len();
            if depth == self.n {
                let p = SetPartition {
                    code: self.code.clone(),
                };
                self.pop();
                if !self.kind.needs_leaf_check() || self.kind.contains(&p) {
                    return Some(p);
                }
                continue;
            }
            let label = self.candidate[depth];
            let limit = if depth == 0 { 0 } else { self.blocks.len() as u8 };
            if label > limit {
                if depth == 0 {
                    self.done = true;
                } else {
                    self.pop();
                }
                continue;
            }
            self.candidate[depth] += 1;
            if self.allowed(label) {
                self.push(label);
            }
        }
        None
    }
}
