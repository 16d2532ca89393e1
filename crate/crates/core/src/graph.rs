//! Cayley graphs of symmetric connection sets, the strongly-regular-graph
//! matrix identity, and graph6 / edge-list writers.
//!
//! Vertices are the group elements in canonical order; `x ~ y` iff
//! `x - y` lies in the connection set. Adjacency rows are bit-packed so
//! the `A^2` entries reduce to word-AND popcounts.

use crate::error::Error;
use crate::field::FieldTower;
use crate::pds::GroupSet;
use crate::quadform::ElementSet;

/// Default ceiling on the number of vertices for construction/export.
pub const DEFAULT_VERTEX_GUARD: u64 = 1 << 12;

/// Undirected graph with bit-packed adjacency rows.
pub struct CayleyGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for CayleyGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CayleyGraph(n={}, edges={})", self.n, self.edge_count())
    }
}

impl CayleyGraph {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        CayleyGraph {
            n,
            words,
            rows: vec![0u64; n * words],
        }
    }

    fn set_edge(&mut self, x: usize, y: usize) {
        self.rows[x * self.words + y / 64] |= 1 << (y % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.rows[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    pub fn degree(&self, x: usize) -> u64 {
        self.row(x).iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.n).map(|x| self.degree(x)).sum::<u64>() / 2
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.rows[x * self.words..(x + 1) * self.words]
    }

    /// Number of common neighbours of `x` and `y`: the `(x, y)` entry of
    /// `A^2` for the symmetric adjacency matrix.
    pub fn common_neighbors(&self, x: usize, y: usize) -> u64 {
        self.row(x)
            .iter()
            .zip(self.row(y))
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }

    /// First entry where `A^2 = kI + lambda*A + mu*(J - I - A)` fails, or
    /// `None` when the identity holds everywhere.
    pub fn srg_identity_violation(&self, k: u64, lambda: u64, mu: u64) -> Option<String> {
        for x in 0..self.n {
            for y in x..self.n {
                let got = self.common_neighbors(x, y);
                let want = if x == y {
                    k
                } else if self.adjacent(x, y) {
                    lambda
                } else {
                    mu
                };
                if got != want {
                    return Some(format!(
                        "entry ({x}, {y}) of A^2 is {got}, expected {want}"
                    ));
                }
            }
        }
        None
    }

    /// Standard graph6 encoding: size header then the upper triangle in
    /// column order, six bits per byte, each offset by 63.
    pub fn to_graph6(&self) -> String {
        let mut bytes = graph6_size_bytes(self.n as u64);
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | self.adjacent(i, j) as u8;
                nbits += 1;
                if nbits == 6 {
                    bytes.push(acc + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push((acc << (6 - nbits)) + 63);
        }
        let mut s = String::from_utf8(bytes).expect("graph6 bytes are ASCII");
        s.push('\n');
        s
    }

    /// One `"u v"` line per edge with `u < v`, ascending, LF-terminated.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adjacent(u, v) {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }
}

fn graph6_size_bytes(n: u64) -> Vec<u8> {
    if n <= 62 {
        vec![63 + n as u8]
    } else if n <= 258_047 {
        let mut out = vec![126u8];
        for shift in [12u32, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3F) as u8);
        }
        out
    } else {
        let mut out = vec![126u8, 126u8];
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3F) as u8);
        }
        out
    }
}

fn check_buildable(n: u64, set_len: usize, guard: u64) -> Result<(), Error> {
    if set_len == 0 {
        return Err(Error::SizeMismatch {
            found: 0,
            expected: 1,
        });
    }
    if n > guard {
        return Err(Error::SizeGuardExceeded {
            order: n as u128,
            guard,
        });
    }
    Ok(())
}

/// Cayley graph of a field-group connection set under the default guard.
pub fn cayley_from_element_set(
    tower: &FieldTower,
    set: &ElementSet,
) -> Result<CayleyGraph, Error> {
    cayley_from_element_set_with_guard(tower, set, DEFAULT_VERTEX_GUARD)
}

pub fn cayley_from_element_set_with_guard(
    tower: &FieldTower,
    set: &ElementSet,
    guard: u64,
) -> Result<CayleyGraph, Error> {
    let n = tower.order();
    check_buildable(n, set.len(), guard)?;
    if set.contains(tower.zero()) {
        return Err(Error::ContainsIdentity);
    }
    if set != &set.negated(tower)? {
        return Err(Error::NotSymmetricSet);
    }
    // Vertex position = canonical key; the keys are a permutation of 0..n.
    let mut by_key: Vec<u32> = vec![0; n as usize];
    for (idx, slot) in by_key.iter_mut().enumerate() {
        *slot = tower.canonical_key_idx(idx as u32);
    }
    let conn: Vec<u32> = set.elements().iter().map(|e| e.index()).collect();
    let mut g = CayleyGraph::new(n as usize);
    for x in 0..n as u32 {
        let xpos = by_key[x as usize] as usize;
        for &s in &conn {
            let y = tower.add_idx(x, s);
            g.set_edge(xpos, by_key[y as usize] as usize);
        }
    }
    Ok(g)
}

/// Cayley graph of a connection set in `GF(p^m)⁺ × GF(p^{2m})⁺` under the
/// default guard.
pub fn cayley_from_group_set(tower: &FieldTower, set: &GroupSet) -> Result<CayleyGraph, Error> {
    cayley_from_group_set_with_guard(tower, set, DEFAULT_VERTEX_GUARD)
}

pub fn cayley_from_group_set_with_guard(
    tower: &FieldTower,
    set: &GroupSet,
    guard: u64,
) -> Result<CayleyGraph, Error> {
    let q = tower.order();
    let n = tower.subfield_order() * q;
    check_buildable(n, set.len(), guard)?;
    if set.elements().iter().any(|ge| ge.is_identity()) {
        return Err(Error::ContainsIdentity);
    }
    if set != &set.negated(tower)? {
        return Err(Error::NotSymmetricSet);
    }
    let mut field_key: Vec<u32> = vec![0; q as usize];
    for (idx, slot) in field_key.iter_mut().enumerate() {
        *slot = tower.canonical_key_idx(idx as u32);
    }
    let conn: Vec<(u32, u32)> = set
        .elements()
        .iter()
        .map(|ge| (ge.a.index(), ge.b.index()))
        .collect();
    let sub_elems: Vec<u32> = (0..tower.subfield_order())
        .map(|key| {
            tower
                .subfield_elem_by_key(key as u32)
                .expect("key in range")
                .index()
        })
        .collect();
    let mut sub_key_of = std::collections::HashMap::new();
    for (key, &idx) in sub_elems.iter().enumerate() {
        sub_key_of.insert(idx, key as u64);
    }
    let mut g = CayleyGraph::new(n as usize);
    for (akey, &aidx) in sub_elems.iter().enumerate() {
        for bidx in 0..q as u32 {
            let xpos = (akey as u64 * q + field_key[bidx as usize] as u64) as usize;
            for &(sa, sb) in &conn {
                let ya = tower.add_idx(aidx, sa);
                let yb = tower.add_idx(bidx, sb);
                let ypos = sub_key_of[&ya] * q + field_key[yb as usize] as u64;
                g.set_edge(xpos, ypos as usize);
            }
        }
    }
    Ok(g)
}
