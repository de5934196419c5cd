//! Simple graphs, their connected partitions, and the Möbius function of
//! the resulting bond lattice.
//!
//! Vertices are labelled `1..=n` to match the edge-list text format. The
//! lattice is enumerated by generating all set partitions as restricted
//! growth strings and keeping those whose blocks induce connected
//! subgraphs; Möbius values come from the defining recursion over the
//! refinement order.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::combinatorics::BigCount;
use crate::{Error, Result};

/// Largest vertex count for which the connected-partition lattice is
/// enumerated; Bell(12) is about 4.2 million, and beyond that the tool
/// should fail loudly rather than hang.
pub const MAX_LATTICE_VERTICES: usize = 12;

/// Loop-free, multiplicity-free undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from unordered edges. Loops, duplicates, and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let bad = |reason| Error::BadEdge { u, v, n, reason };
            if u == v {
                return Err(bad("loop"));
            }
            if u < 1 || v < 1 || u > n || v > n {
                return Err(bad("endpoint out of range"));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(bad("duplicate edge"));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.insert((u, v));
            }
        }
        Self { n, edges }
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|u| (u, u + 1)).collect();
        Self { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighbor lists indexed by `vertex - 1`, entries also zero-based.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj
    }

    /// Zero-based edge list, handy for enumeration loops.
    pub(crate) fn edges_zero_based(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect()
    }

    /// The graph with edge `e` removed; vertices are unchanged.
    pub fn delete_edge(&self, e: (usize, usize)) -> Result<Self> {
        let key = (e.0.min(e.1), e.0.max(e.1));
        if !self.edges.contains(&key) {
            return Err(Error::NoSuchEdge { u: e.0, v: e.1 });
        }
        let mut edges = self.edges.clone();
        edges.remove(&key);
        Ok(Self { n: self.n, edges })
    }

    /// The graph with edge `e` contracted: its endpoints are identified,
    /// the resulting loop is dropped, parallel edges are merged, and the
    /// vertices are relabelled `1..=n-1`.
    pub fn contract_edge(&self, e: (usize, usize)) -> Result<Self> {
        let (a, b) = (e.0.min(e.1), e.0.max(e.1));
        if !self.edges.contains(&(a, b)) {
            return Err(Error::NoSuchEdge { u: e.0, v: e.1 });
        }
        // b collapses onto a; labels above b shift down to stay contiguous.
        let relabel = |v: usize| {
            let v = if v == b { a } else { v };
            if v > b {
                v - 1
            } else {
                v
            }
        };
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            let (u, v) = (relabel(u), relabel(v));
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        Ok(Self {
            n: self.n - 1,
            edges,
        })
    }

    /// Disjoint union; the second graph's vertices are shifted above
    /// `self`'s.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut edges = self.edges.clone();
        for &(u, v) in &other.edges {
            edges.insert((u + self.n, v + self.n));
        }
        Self {
            n: self.n + other.n,
            edges,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Parses the edge-list format: the first significant line is the
    /// vertex count `n`, each following significant line is an edge
    /// `u v` with `1 <= u < v <= n`. Lines starting with `#` and blank
    /// lines are skipped; LF and CRLF both work. Duplicate edges are an
    /// error, not silently merged.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let fail = |message: String| Error::Parse { line, message };
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let Some(n) = n else {
                n = Some(
                    content
                        .parse::<usize>()
                        .map_err(|_| fail(format!("expected a vertex count, got `{content}`")))?,
                );
                continue;
            };
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [u, v] = fields[..] else {
                return Err(fail(format!(
                    "expected an edge `u v`, got {} fields",
                    fields.len()
                )));
            };
            let parse_vertex = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| fail(format!("invalid vertex label `{s}`")))
            };
            let (u, v) = (parse_vertex(u)?, parse_vertex(v)?);
            if u == v {
                return Err(fail(format!("loop edge {u} {v}")));
            }
            if u > v {
                return Err(fail(format!("edge {u} {v} must be written with u < v")));
            }
            if u < 1 || v > n {
                return Err(fail(format!("edge {u} {v} out of range 1..={n}")));
            }
            if !edges.insert((u, v)) {
                return Err(fail(format!("duplicate edge {u} {v}")));
            }
        }
        let n = n.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing vertex count".into(),
        })?;
        Ok(Self { n, edges })
    }
}

/// Partition of `1..=n` into disjoint nonempty blocks, kept canonical:
/// each block ascending, blocks ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes the given disjoint nonempty blocks.
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Self { blocks }
    }

    /// The all-singletons partition, the lattice bottom.
    pub fn singletons(n: usize) -> Self {
        Self {
            blocks: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of elements partitioned.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block-id per element (`rgs[v - 1]` is the block index of vertex
    /// `v` in canonical order), a restricted growth string.
    pub fn block_ids(&self) -> Vec<u8> {
        let mut ids = vec![0u8; self.ground_size()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                ids[v - 1] = b as u8;
            }
        }
        ids
    }

    /// Refinement order: `self <= coarser` iff every block of `self` is
    /// contained in a single block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let coarse_ids = coarser.block_ids();
        self.blocks.iter().all(|block| {
            let id = coarse_ids[block[0] - 1];
            block.iter().all(|&v| coarse_ids[v - 1] == id)
        })
    }
}

/// The connected partitions of a graph ordered by refinement, with the
/// Möbius values `mu(bottom, .)` of every element.
///
/// Elements are stored canonically: block count descending (so every
/// proper refinement precedes what it refines), then lexicographically by
/// block structure. The bottom, all singletons, is element 0.
#[derive(Debug, Clone)]
pub struct BondLattice {
    elements: Vec<Partition>,
    block_ids: Vec<Vec<u8>>,
    mobius: Vec<BigCount>,
}

impl BondLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn bottom(&self) -> &Partition {
        &self.elements[0]
    }

    pub fn mobius(&self, index: usize) -> &BigCount {
        &self.mobius[index]
    }

    /// Möbius value of a given partition, if it is in the lattice.
    pub fn mobius_of(&self, p: &Partition) -> Option<&BigCount> {
        self.elements
            .iter()
            .position(|q| q == p)
            .map(|i| &self.mobius[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigCount)> {
        self.elements.iter().zip(self.mobius.iter())
    }
}

/// Enumerates the partitions of the vertex set whose every block induces
/// a connected subgraph, computing the refinement order's Möbius values
/// from the bottom.
pub fn connected_partitions(g: &SimpleGraph) -> Result<BondLattice> {
    let n = g.vertex_count();
    if n > MAX_LATTICE_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            bound: MAX_LATTICE_VERTICES,
        });
    }

    // Adjacency as bitmasks over zero-based vertices.
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }

    let mut elements = Vec::new();
    for_each_restricted_growth_string(n, |rgs| {
        if blocks_all_connected(rgs, &adj) {
            elements.push(partition_from_rgs(rgs));
        }
    });
    elements.sort_by(|a, b| {
        Reverse(a.num_blocks())
            .cmp(&Reverse(b.num_blocks()))
            .then_with(|| a.cmp(b))
    });

    let block_ids: Vec<Vec<u8>> = elements.iter().map(Partition::block_ids).collect();
    let mobius = mobius_from_bottom(&elements, &block_ids);
    Ok(BondLattice {
        elements,
        block_ids,
        mobius,
    })
}

/// The defining recursion: `mu(0, 0) = 1` and, for every other element,
/// `mu(0, p) = -sum of mu(0, s)` over the lattice elements strictly below
/// `p`. Elements must be sorted so refinements come first.
fn mobius_from_bottom(elements: &[Partition], block_ids: &[Vec<u8>]) -> Vec<BigCount> {
    let mut mobius: Vec<BigCount> = Vec::with_capacity(elements.len());
    for (i, p) in elements.iter().enumerate() {
        if i == 0 {
            mobius.push(BigCount::one());
            continue;
        }
        let blocks = p.num_blocks();
        let mut sum = BigCount::zero();
        for j in 0..i {
            // Strict refinement forces strictly more blocks.
            if elements[j].num_blocks() > blocks && rgs_refines(&block_ids[j], &block_ids[i]) {
                sum += &mobius[j];
            }
        }
        mobius.push(-sum);
    }
    mobius
}

/// `fine <= coarse` in refinement order, on block-id vectors.
fn rgs_refines(fine: &[u8], coarse: &[u8]) -> bool {
    let mut image = [u8::MAX; MAX_LATTICE_VERTICES + 1];
    for (f, c) in fine.iter().zip(coarse) {
        let slot = &mut image[*f as usize];
        if *slot == u8::MAX {
            *slot = *c;
        } else if slot != c {
            return false;
        }
    }
    true
}

fn partition_from_rgs(rgs: &[u8]) -> Partition {
    let num_blocks = rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); num_blocks];
    for (v0, &b) in rgs.iter().enumerate() {
        blocks[b as usize].push(v0 + 1);
    }
    // Restricted growth order already lists blocks by least element.
    Partition { blocks }
}

fn blocks_all_connected(rgs: &[u8], adj: &[u32]) -> bool {
    let n = rgs.len();
    let num_blocks = rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
    let mut masks = vec![0u32; num_blocks];
    for (v0, &b) in rgs.iter().enumerate() {
        masks[b as usize] |= 1 << v0;
    }
    masks.iter().all(|&mask| {
        let start = mask.trailing_zeros() as usize;
        let mut reached = 1u32 << start;
        loop {
            let mut next = reached;
            let mut scan = reached;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                next |= adj[v] & mask;
            }
            if next == reached {
                return reached == mask;
            }
            reached = next;
        }
    });
    let _ = n;
    true
}

/// Visits every restricted growth string of length `n` (each encodes one
/// set partition of an n-element set).
fn for_each_restricted_growth_string(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut rgs = vec![0u8; n];
    fn rec(rgs: &mut Vec<u8>, pos: usize, max_used: u8, visit: &mut impl FnMut(&[u8])) {
        if pos == rgs.len() {
            visit(rgs);
            return;
        }
        for value in 0..=max_used + 1 {
            rgs[pos] = value;
            rec(rgs, pos + 1, max_used.max(value), visit);
        }
    }
    if n == 0 {
        visit(&rgs);
        return;
    }
    // First element is always block 0.
    rec(&mut rgs, 1, 0, &mut visit);
}
