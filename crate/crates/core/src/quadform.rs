//! The quadratic form `Q(x) = x^{p^m+1}` from the big field onto the
//! subfield, its bilinear polarization `R(u, v) = u^{p^m} v + u v^{p^m}`,
//! the composed prime-field form `Q0 = Tr_{m/1} ∘ Q`, and the quadric
//! point set `X = {x != 0 : Q0(x) = 0}`, which the verify module certifies
//! as a partial difference set.

use crate::error::Error;
use crate::field::{FieldElem, FieldTower, TowerKey};

/// An ordered set of big-field elements. Elements are kept in canonical
/// order (coefficient vectors compared lexicographically) and are distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    key: TowerKey,
    elems: Vec<FieldElem>,
}

impl ElementSet {
    /// Sorts into canonical order and rejects duplicates and foreign towers.
    pub fn from_elements(tower: &FieldTower, mut elems: Vec<FieldElem>) -> Result<Self, Error> {
        for &x in &elems {
            tower.check(x)?;
        }
        elems.sort_by_key(|&x| tower.canonical_key_idx(x.index()));
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ParseError("duplicate element in set".into()));
        }
        Ok(ElementSet {
            key: tower.key(),
            elems,
        })
    }

    pub fn tower_key(&self) -> TowerKey {
        self.key
    }

    pub fn elements(&self) -> &[FieldElem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        x.tower_key() == self.key
            && self
                .elems
                .binary_search_by_key(&x.coeffs(), |e| e.coeffs())
                .is_ok()
    }
}

impl ElementSet {
    /// The set `-S`; used by symmetry checks and tests.
    pub fn negated(&self, tower: &FieldTower) -> Result<ElementSet, Error> {
        let elems = self
            .elems
            .iter()
            .map(|&x| tower.neg(x))
            .collect::<Result<Vec<_>, _>>()?;
        ElementSet::from_elements(tower, elems)
    }
}

/// `Q(x) = x^{p^m+1}`; the value always lies in the subfield.
pub fn q_eval(tower: &FieldTower, x: FieldElem) -> Result<FieldElem, Error> {
    tower.pow(x, tower.subfield_order() + 1)
}

/// The polarization `R(u, v) = u^{p^m} v + u v^{p^m}`, equal to
/// `Q(u+v) - Q(u) - Q(v)`; symmetric and bilinear over the subfield.
pub fn r_eval(tower: &FieldTower, u: FieldElem, v: FieldElem) -> Result<FieldElem, Error> {
    let pm = tower.subfield_order();
    let a = tower.mul(tower.pow(u, pm)?, v)?;
    let b = tower.mul(u, tower.pow(v, pm)?)?;
    tower.add(a, b)
}

/// `Q0(x) = Tr_{m/1}(x^{p^m+1})`, a prime-field residue.
pub fn q0_eval(tower: &FieldTower, x: FieldElem) -> Result<u8, Error> {
    tower.trace_m1(q_eval(tower, x)?)
}

/// Which Gram matrix `nondegeneracy_rank` computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BilinearForm {
    /// `R` on the 2-dimensional space over `GF(p^m)`, basis `{1, alpha}`.
    OverSubfield,
    /// `R0(u, v) = Tr_{m/1}(R(u, v))` on the `2m`-dimensional space over
    /// `GF(p)`, power basis.
    OverPrime,
}

/// Rank of the chosen Gram matrix over its base field. The form is
/// nondegenerate exactly when the rank is full (2, respectively `2m`).
pub fn nondegeneracy_rank(tower: &FieldTower, form: BilinearForm) -> Result<usize, Error> {
    match form {
        BilinearForm::OverSubfield => {
            let basis = [tower.one(), tower.alpha()];
            let mut gram = [[tower.zero(); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    gram[i][j] = r_eval(tower, basis[i], basis[j])?;
                }
            }
            rank_over_subfield(tower, gram)
        }
        BilinearForm::OverPrime => {
            let n = 2 * tower.m() as usize;
            let basis: Vec<FieldElem> = (0..n).map(|i| tower.alpha_pow(i as u64)).collect();
            let mut gram = vec![vec![0u8; n]; n];
            for i in 0..n {
                for j in 0..n {
                    gram[i][j] = tower.trace_m1(r_eval(tower, basis[i], basis[j])?)?;
                }
            }
            Ok(rank_mod_p(gram, tower.p() as u32))
        }
    }
}

fn rank_over_subfield(tower: &FieldTower, mut g: [[FieldElem; 2]; 2]) -> Result<usize, Error> {
    let mut rank = 0;
    let mut row = 0;
    for col in 0..2 {
        let Some(pivot) = (row..2).find(|&r| !g[r][col].is_zero()) else {
            continue;
        };
        g.swap(row, pivot);
        let inv = tower.inv(g[row][col])?;
        for r in (row + 1)..2 {
            if g[r][col].is_zero() {
                continue;
            }
            let factor = tower.mul(g[r][col], inv)?;
            for c in 0..2 {
                let sub = tower.mul(factor, g[row][c])?;
                g[r][c] = tower.sub(g[r][c], sub)?;
            }
        }
        rank += 1;
        row += 1;
    }
    Ok(rank)
}

fn rank_mod_p(mut g: Vec<Vec<u8>>, p: u32) -> usize {
    let n = g.len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        let Some(pivot) = (row..n).find(|&r| g[r][col] != 0) else {
            continue;
        };
        g.swap(row, pivot);
        let inv = mod_inv(g[row][col] as u32, p);
        for r in (row + 1)..n {
            if g[r][col] == 0 {
                continue;
            }
            let factor = (g[r][col] as u32 * inv) % p;
            for c in 0..n {
                let sub = (factor * g[row][c] as u32) % p;
                g[r][c] = (((g[r][c] as u32) + p - sub) % p) as u8;
            }
        }
        rank += 1;
        row += 1;
        if row == n {
            break;
        }
    }
    rank
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and a != 0.
    let mut acc = 1u64;
    let mut base = a as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// The quadric PDS `X = {x != 0 : Tr_{m/1}(x^{p^m+1}) = 0}` in canonical
/// order; `|X| = p^{2m-1} - p^{m-1}(p-1) - 1`.
pub fn construct_x_quadform(tower: &FieldTower) -> Result<ElementSet, Error> {
    let mut elems = Vec::new();
    for x in tower.nonzero_elements() {
        if q0_eval(tower, x)? == 0 {
            elems.push(x);
        }
    }
    ElementSet::from_elements(tower, elems)
}

/// `|X|` by closed formula, for cross-checking the enumeration.
pub fn x_size_formula(p: u64, m: u32) -> u64 {
    let pm1 = p.pow(m - 1);
    p.pow(2 * m - 1) - pm1 * (p - 1) - 1
}
