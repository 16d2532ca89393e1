//! Exact arithmetic in the tower `GF(p) ⊂ GF(p^m) ⊂ GF(p^{2m})`.
//!
//! The big field is realized as `GF(p)[x]/(f)` where `f` is the
//! lexicographically smallest monic primitive polynomial of degree `2m`
//! (coefficients compared low-degree-first), so towers are reproducible
//! across runs and platforms. `alpha` is the residue class of `x` and is
//! primitive by construction; `omega = alpha^{p^m+1}` generates the
//! multiplicative group of the intermediate field `GF(p^m)`, realized as
//! the fixed field of the `m`-th Frobenius power.
//!
//! Elements are stored as dense indices (the coefficient vector read in
//! base `p`), and multiplication runs through full discrete-log tables:
//! at the supported sizes the tables are cheap and make every cyclotomy
//! query O(1).

use std::collections::HashMap;
use std::fmt;

use crate::arith;
use crate::error::Error;

/// Default ceiling on `p^{2m}`, the number of elements of the big field.
pub const DEFAULT_SIZE_GUARD: u64 = 1 << 24;

/// Hard ceiling imposed by the 32-bit element representation.
const HARD_SIZE_CAP: u64 = 1 << 30;

const LOG_NONE: u32 = u32::MAX;

/// Identifies a tower: the modulus is deterministic given `(p, m)`, so two
/// towers with equal keys are interchangeable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TowerKey {
    pub p: u16,
    pub m: u16,
}

/// One element of `GF(p^{2m})` in coefficient-vector form, packed as a
/// dense index. Elements remember their tower key; mixing towers is an
/// error, not undefined behaviour.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    key: TowerKey,
    idx: u32,
}

impl FieldElem {
    /// Power-basis coordinates over `GF(p)`, low degree first (length `2m`).
    pub fn coeffs(&self) -> Vec<u8> {
        let p = self.key.p as u32;
        let n = 2 * self.key.m as usize;
        let mut v = self.idx;
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push((v % p) as u8);
            v /= p;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }

    pub fn tower_key(&self) -> TowerKey {
        self.key
    }

    pub(crate) fn index(&self) -> u32 {
        self.idx
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs())
    }
}

/// The ambient arithmetic context `GF(p) ⊂ GF(p^m) ⊂ GF(p^{2m})`.
///
/// Immutable after construction; all operations are pure functions of
/// their inputs, so a tower may be shared freely across threads.
pub struct FieldTower {
    key: TowerKey,
    q: u32,
    q1: u32,
    subfield_order: u32,
    modulus: Vec<u8>,
    /// `exp[e]` = index of `alpha^e`, for `0 <= e < q-1`.
    exp: Vec<u32>,
    /// Index -> discrete log; `LOG_NONE` for zero.
    log: Vec<u32>,
    /// Index -> `Tr_{m/1}` residue for subfield elements, `0xFF` otherwise.
    tr1: Vec<u8>,
    /// Index -> `Tr_{2m/1}` residue, for every element.
    tr2: Vec<u8>,
    /// Coordinate key (base-p digits of the omega-basis coordinates,
    /// first coordinate most significant) -> element index.
    subfield_elems: Vec<u32>,
    /// Element index -> coordinate key; exactly the subfield as key set.
    subfield_key_of: HashMap<u32, u32>,
    omega: u32,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldTower(p={}, m={}, modulus={:?})",
            self.key.p, self.key.m, self.modulus
        )
    }
}

impl FieldTower {
    /// Builds the tower for an odd prime `p` and extension degree `m >= 2`
    /// under the default size guard.
    pub fn build(p: u64, m: u32) -> Result<Self, Error> {
        Self::build_with_guard(p, m, DEFAULT_SIZE_GUARD)
    }

    /// Builds the tower with an explicit ceiling on `p^{2m}`.
    pub fn build_with_guard(p: u64, m: u32, guard: u64) -> Result<Self, Error> {
        if p == 2 {
            return Err(Error::EvenPrimeUnsupported);
        }
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 2 {
            return Err(Error::RangeError(format!(
                "extension degree m = {m} must be at least 2"
            )));
        }
        let two_m = 2 * m;
        let order = (p as u128).pow(two_m);
        let cap = guard.min(HARD_SIZE_CAP);
        if order > cap as u128 {
            return Err(Error::SizeGuardExceeded { order, guard: cap });
        }
        let q = order as u64;
        let q1 = q - 1;
        let p32 = p as u32;

        let modulus = find_primitive_modulus(p32, two_m as usize, q1);

        // Exponentiation sweep fills both tables and proves alpha's order.
        let deg = two_m as usize;
        let mut exp = vec![0u32; q1 as usize];
        let mut log = vec![LOG_NONE; q as usize];
        let mut cur = vec![0u8; deg];
        cur[0] = 1;
        for e in 0..q1 {
            let idx = pack(&cur, p32);
            exp[e as usize] = idx;
            debug_assert_eq!(log[idx as usize], LOG_NONE);
            log[idx as usize] = e as u32;
            mulx_mod(&mut cur, &modulus, p32);
        }
        debug_assert_eq!(pack(&cur, p32), 1, "alpha^(q-1) must be 1");

        let subfield_order = arith::checked_pow(p, m).expect("within guard") as u32;
        let omega_log = subfield_order as u64 + 1;
        let omega = exp[omega_log as usize];

        let mut tower = FieldTower {
            key: TowerKey {
                p: p as u16,
                m: m as u16,
            },
            q: q as u32,
            q1: q1 as u32,
            subfield_order,
            modulus,
            exp,
            log,
            tr1: Vec::new(),
            tr2: Vec::new(),
            subfield_elems: Vec::new(),
            subfield_key_of: HashMap::new(),
            omega,
        };
        tower.fill_traces();
        tower.fill_subfield_coords()?;
        Ok(tower)
    }

    fn fill_traces(&mut self) {
        let p = self.key.p as u32;
        let two_m = 2 * self.key.m as u32;
        let m = self.key.m as u32;
        let q1 = self.q1 as u64;

        // Tr_{2m/1} on the power basis, extended to all elements by linearity.
        let mut basis_tr = vec![0u8; two_m as usize];
        for (j, slot) in basis_tr.iter_mut().enumerate() {
            let mut acc = 0u32;
            let mut pe = 1u64; // p^i mod (q-1)
            for _ in 0..two_m {
                let e = (j as u64 * pe) % q1;
                acc = self.add_idx(acc, self.exp[e as usize]);
                pe = (pe * self.key.p as u64) % q1;
            }
            debug_assert!(acc < p, "trace of a basis power must be prime-field");
            *slot = acc as u8;
        }
        let mut tr2 = vec![0u8; self.q as usize];
        for (idx, slot) in tr2.iter_mut().enumerate() {
            let mut v = idx as u32;
            let mut t = 0u32;
            for &btr in &basis_tr {
                t += (v % p) * btr as u32;
                v /= p;
            }
            *slot = (t % p) as u8;
        }
        self.tr2 = tr2;

        // Tr_{m/1} over the subfield cycle <omega>, plus zero.
        let mut tr1 = vec![0xFFu8; self.q as usize];
        tr1[0] = 0;
        let omega_log = self.subfield_order as u64 + 1;
        for t in 0..(self.subfield_order as u64 - 1) {
            let lg = (omega_log * t) % q1;
            let mut acc = 0u32;
            let mut pe = 1u64;
            for _ in 0..m {
                let e = (lg * pe) % q1;
                acc = self.add_idx(acc, self.exp[e as usize]);
                pe = (pe * self.key.p as u64) % q1;
            }
            debug_assert!(acc < p);
            tr1[self.exp[lg as usize] as usize] = acc as u8;
        }
        self.tr1 = tr1;
    }

    fn fill_subfield_coords(&mut self) -> Result<(), Error> {
        let p = self.key.p as u32;
        let m = self.key.m as usize;
        let q1 = self.q1 as u64;
        let omega_log = self.subfield_order as u64 + 1;
        let omega_pows: Vec<u32> = (0..m)
            .map(|i| self.exp[((omega_log * i as u64) % q1) as usize])
            .collect();

        let count = self.subfield_order as usize;
        let mut elems = vec![0u32; count];
        let mut key_of = HashMap::with_capacity(count);
        for key in 0..count as u32 {
            // Big-endian digits: the first omega-coordinate is most significant.
            let mut idx = 0u32;
            let mut rem = key;
            let mut weight = (p).pow(m as u32 - 1);
            for &wp in &omega_pows {
                let c = rem / weight;
                rem %= weight;
                if weight > 1 {
                    weight /= p;
                }
                if c != 0 {
                    idx = self.add_idx(idx, self.mul_idx(c, wp));
                }
            }
            elems[key as usize] = idx;
            if key_of.insert(idx, key).is_some() {
                return Err(Error::SingularBasis);
            }
            if !self.is_subfield_idx(idx) {
                return Err(Error::SingularBasis);
            }
        }
        self.subfield_elems = elems;
        self.subfield_key_of = key_of;
        Ok(())
    }

    // ---- basic accessors -------------------------------------------------

    pub fn key(&self) -> TowerKey {
        self.key
    }

    pub fn p(&self) -> u64 {
        self.key.p as u64
    }

    pub fn m(&self) -> u32 {
        self.key.m as u32
    }

    /// `p^{2m}`, the number of elements of the big field.
    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// `p^m`, the number of elements of the intermediate field.
    pub fn subfield_order(&self) -> u64 {
        self.subfield_order as u64
    }

    /// Modulus coefficients, low degree first, length `2m + 1`, monic.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }

    /// The residue class of the indeterminate; primitive by construction.
    pub fn alpha(&self) -> FieldElem {
        self.elem(self.exp[1])
    }

    /// `alpha^{p^m+1}`, a primitive element of the subfield.
    pub fn omega(&self) -> FieldElem {
        self.elem(self.omega)
    }

    pub fn alpha_pow(&self, e: u64) -> FieldElem {
        self.elem(self.exp[(e % self.q1 as u64) as usize])
    }

    pub fn omega_pow(&self, e: u64) -> FieldElem {
        let omega_log = self.subfield_order as u64 + 1;
        let sub1 = self.subfield_order as u64 - 1;
        self.alpha_pow(omega_log * (e % sub1))
    }

    pub fn from_coeffs(&self, coeffs: &[u8]) -> Result<FieldElem, Error> {
        let n = 2 * self.key.m as usize;
        if coeffs.len() != n {
            return Err(Error::ParseError(format!(
                "expected {n} coefficients, found {}",
                coeffs.len()
            )));
        }
        let p = self.key.p as u8;
        if let Some(c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::ParseError(format!(
                "coefficient {c} out of range for GF({p})"
            )));
        }
        Ok(self.elem(pack(coeffs, p as u32)))
    }

    /// All elements, ascending by packed index.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(|i| self.elem(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.q).map(|i| self.elem(i))
    }

    /// Subfield elements in canonical order (omega-coordinates compared
    /// lexicographically).
    pub fn subfield_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        self.subfield_elems.iter().map(|&i| self.elem(i))
    }

    // ---- arithmetic ------------------------------------------------------

    pub fn add(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem, Error> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.elem(self.add_idx(x.idx, y.idx)))
    }

    pub fn sub(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem, Error> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.elem(self.add_idx(x.idx, self.neg_idx(y.idx))))
    }

    pub fn neg(&self, x: FieldElem) -> Result<FieldElem, Error> {
        self.check(x)?;
        Ok(self.elem(self.neg_idx(x.idx)))
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem, Error> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.elem(self.mul_idx(x.idx, y.idx)))
    }

    /// `x^e`, with the exponent reduced mod `p^{2m}-1` for nonzero `x`.
    /// By convention `pow(0, 0) = 1` and `pow(0, e) = 0` for `e > 0`.
    pub fn pow(&self, x: FieldElem, e: u64) -> Result<FieldElem, Error> {
        self.check(x)?;
        Ok(self.elem(self.pow_idx(x.idx, e)))
    }

    /// The inverse of nonzero `x`.
    pub fn inv(&self, x: FieldElem) -> Result<FieldElem, Error> {
        self.check(x)?;
        let lg = self.log_of(x.idx).ok_or(Error::ZeroHasNoLog)?;
        let e = (self.q1 - lg) % self.q1;
        Ok(self.elem(self.exp[e as usize]))
    }

    /// `x^{p^t}`, the `t`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, x: FieldElem, t: u32) -> Result<FieldElem, Error> {
        self.check(x)?;
        Ok(self.elem(self.frobenius_idx(x.idx, t)))
    }

    /// `Tr_{m/1}` of a subfield element, as a residue mod `p`.
    pub fn trace_m1(&self, x: FieldElem) -> Result<u8, Error> {
        self.check(x)?;
        let t = self.tr1[x.idx as usize];
        if t == 0xFF {
            return Err(Error::NotInSubfield);
        }
        Ok(t)
    }

    /// `Tr_{2m/1}` of any element, as a residue mod `p`.
    pub fn trace_2m1(&self, x: FieldElem) -> Result<u8, Error> {
        self.check(x)?;
        Ok(self.tr2[x.idx as usize])
    }

    /// The exponent `e` with `alpha^e = x`, for nonzero `x`.
    pub fn dlog(&self, x: FieldElem) -> Result<u64, Error> {
        self.check(x)?;
        self.log_of(x.idx).map(u64::from).ok_or(Error::ZeroHasNoLog)
    }

    pub fn is_in_subfield(&self, x: FieldElem) -> Result<bool, Error> {
        self.check(x)?;
        Ok(self.is_subfield_idx(x.idx))
    }

    /// Coordinates of a subfield element in the basis `{1, omega, ...,
    /// omega^{m-1}}`.
    pub fn subfield_coords(&self, x: FieldElem) -> Result<Vec<u8>, Error> {
        let key = self.subfield_canonical_key(x)?;
        let p = self.key.p as u32;
        let m = self.key.m as usize;
        let mut out = vec![0u8; m];
        let mut rem = key;
        let mut weight = p.pow(m as u32 - 1);
        for slot in out.iter_mut() {
            *slot = (rem / weight) as u8;
            rem %= weight;
            if weight > 1 {
                weight /= p;
            }
        }
        Ok(out)
    }

    // ---- canonical ordering keys ------------------------------------------

    /// Sort key realizing "coefficient vectors compared lexicographically".
    pub fn canonical_key(&self, x: FieldElem) -> Result<u32, Error> {
        self.check(x)?;
        Ok(self.canonical_key_idx(x.idx))
    }

    /// Sort key on subfield elements: omega-coordinates compared
    /// lexicographically. Errors with `NotInSubfield` otherwise.
    pub fn subfield_canonical_key(&self, x: FieldElem) -> Result<u32, Error> {
        self.check(x)?;
        self.subfield_key_of
            .get(&x.idx)
            .copied()
            .ok_or(Error::NotInSubfield)
    }

    /// Inverse of `subfield_canonical_key`.
    pub fn subfield_elem_by_key(&self, key: u32) -> Result<FieldElem, Error> {
        if key as u64 >= self.subfield_order() {
            return Err(Error::IndexOutOfRange {
                index: key as u64,
                bound: self.subfield_order(),
            });
        }
        Ok(self.elem(self.subfield_elems[key as usize]))
    }

    // ---- crate-internal fast paths ----------------------------------------

    pub(crate) fn elem(&self, idx: u32) -> FieldElem {
        debug_assert!(idx < self.q);
        FieldElem { key: self.key, idx }
    }

    pub(crate) fn check(&self, x: FieldElem) -> Result<(), Error> {
        if x.key != self.key {
            return Err(Error::TowerMismatch);
        }
        Ok(())
    }

    pub(crate) fn q1(&self) -> u64 {
        self.q1 as u64
    }

    pub(crate) fn exp_idx(&self, e: u64) -> u32 {
        self.exp[(e % self.q1 as u64) as usize]
    }

    pub(crate) fn log_of(&self, idx: u32) -> Option<u32> {
        let l = self.log[idx as usize];
        (l != LOG_NONE).then_some(l)
    }

    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.key.p as u32;
        let mut a = a;
        let mut b = b;
        let mut out = 0u32;
        let mut w = 1u32;
        for _ in 0..2 * self.key.m {
            let mut s = a % p + b % p;
            if s >= p {
                s -= p;
            }
            out += s * w;
            a /= p;
            b /= p;
            w *= p;
        }
        out
    }

    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        let p = self.key.p as u32;
        let mut a = a;
        let mut out = 0u32;
        let mut w = 1u32;
        for _ in 0..2 * self.key.m {
            let d = a % p;
            if d != 0 {
                out += (p - d) * w;
            }
            a /= p;
            w *= p;
        }
        out
    }

    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(e % self.q1 as u64) as usize]
    }

    pub(crate) fn pow_idx(&self, x: u32, e: u64) -> u32 {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let q1 = self.q1 as u64;
        let lg = self.log[x as usize] as u64;
        self.exp[((lg * (e % q1)) % q1) as usize]
    }

    pub(crate) fn frobenius_idx(&self, x: u32, t: u32) -> u32 {
        if x == 0 {
            return 0;
        }
        let q1 = self.q1 as u64;
        let mut pt = 1u64;
        for _ in 0..t % (2 * self.key.m as u32) {
            pt = (pt * self.key.p as u64) % q1;
        }
        let lg = self.log[x as usize] as u64;
        self.exp[((lg * pt) % q1) as usize]
    }

    pub(crate) fn is_subfield_idx(&self, idx: u32) -> bool {
        idx == 0 || self.log[idx as usize] % (self.subfield_order + 1) == 0
    }

    pub(crate) fn tr1_idx(&self, idx: u32) -> u8 {
        self.tr1[idx as usize]
    }

    pub(crate) fn tr2_idx(&self, idx: u32) -> u8 {
        self.tr2[idx as usize]
    }

    pub(crate) fn canonical_key_idx(&self, idx: u32) -> u32 {
        let p = self.key.p as u32;
        let two_m = 2 * self.key.m as u32;
        let mut v = idx;
        let mut key = 0u32;
        let mut weight = p.pow(two_m - 1);
        for _ in 0..two_m {
            key += (v % p) * weight;
            v /= p;
            if weight > 1 {
                weight /= p;
            }
        }
        key
    }

    /// Digits of an element's coefficient vector written into `out`.
    pub(crate) fn digits_idx(&self, idx: u32, out: &mut [u8]) {
        let p = self.key.p as u32;
        let mut v = idx;
        for slot in out.iter_mut() {
            *slot = (v % p) as u8;
            v /= p;
        }
        debug_assert_eq!(v, 0);
    }
}

// ---- modulus search --------------------------------------------------------

fn pack(coeffs: &[u8], p: u32) -> u32 {
    let mut idx = 0u32;
    for &c in coeffs.iter().rev() {
        idx = idx * p + c as u32;
    }
    idx
}

/// Multiply by `x` and reduce by the monic `modulus` in place.
fn mulx_mod(cur: &mut [u8], modulus: &[u8], p: u32) {
    let n = cur.len();
    let carry = cur[n - 1] as u32;
    for i in (1..n).rev() {
        cur[i] = cur[i - 1];
    }
    cur[0] = 0;
    if carry != 0 {
        for (c, &mj) in cur.iter_mut().zip(modulus.iter()) {
            if mj != 0 {
                let sub = (carry * mj as u32) % p;
                *c = (((*c as u32) + p - sub) % p) as u8;
            }
        }
    }
}

fn poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: u32) -> Vec<u8> {
    let n = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * n - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u32 * bj as u32) % p;
        }
    }
    for d in (n..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for j in 0..n {
            let mj = modulus[j] as u32;
            if mj != 0 {
                let sub = (c * mj) % p;
                prod[d - n + j] = (prod[d - n + j] + p - sub) % p;
            }
        }
    }
    prod[..n].iter().map(|&x| x as u8).collect()
}

fn poly_pow_mod(base: &[u8], mut e: u64, modulus: &[u8], p: u32) -> Vec<u8> {
    let n = modulus.len() - 1;
    let mut result = vec![0u8; n];
    result[0] = 1;
    let mut sq = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(&result, &sq, modulus, p);
        }
        sq = poly_mul_mod(&sq, &sq, modulus, p);
        e >>= 1;
    }
    result
}

fn is_one(poly: &[u8]) -> bool {
    poly[0] == 1 && poly[1..].iter().all(|&c| c == 0)
}

/// `x` has multiplicative order exactly `q-1` in `GF(p)[x]/(f)`. An element
/// of full order can only exist when `f` is irreducible, so this single
/// check establishes both irreducibility and primitivity.
fn x_has_full_order(f: &[u8], p: u32, q1: u64, prime_divs: &[u64]) -> bool {
    let n = f.len() - 1;
    let mut x = vec![0u8; n];
    x[1] = 1;
    if !is_one(&poly_pow_mod(&x, q1, f, p)) {
        return false;
    }
    prime_divs
        .iter()
        .all(|&l| !is_one(&poly_pow_mod(&x, q1 / l, f, p)))
}

/// The lexicographically smallest monic primitive polynomial of degree
/// `deg` over `GF(p)`, coefficients compared low-degree-first.
fn find_primitive_modulus(p: u32, deg: usize, q1: u64) -> Vec<u8> {
    let prime_divs = arith::prime_divisors(q1);
    let total = q1 + 1;
    for n in 0..total {
        let mut digits = vec![0u8; deg];
        let mut v = n;
        for i in (0..deg).rev() {
            digits[i] = (v % p as u64) as u8;
            v /= p as u64;
        }
        if digits[0] == 0 {
            continue; // x divides f
        }
        let mut f = digits;
        f.push(1);
        if x_has_full_order(&f, p, q1, &prime_divs) {
            return f;
        }
    }
    unreachable!("primitive polynomials exist for every (p, deg)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn t32() -> FieldTower {
        FieldTower::build(3, 2).unwrap()
    }

    #[test]
    fn deterministic_moduli() {
        // Lex-smallest primitive polynomials of degree 2m, frozen from an
        // independent exhaustive search.
        assert_eq!(t32().modulus(), &[2, 0, 0, 1, 1]); // x^4 + x^3 + 2 over GF(3)
        assert_eq!(FieldTower::build(5, 2).unwrap().modulus(), &[2, 0, 2, 1, 1]);
        assert_eq!(FieldTower::build(7, 2).unwrap().modulus(), &[3, 0, 1, 1, 1]);
        assert_eq!(
            FieldTower::build(3, 3).unwrap().modulus(),
            &[2, 0, 0, 0, 0, 1, 1]
        );
    }

    #[test]
    fn build_rejections() {
        assert_eq!(FieldTower::build(2, 2).unwrap_err(), Error::EvenPrimeUnsupported);
        assert_eq!(FieldTower::build(9, 2).unwrap_err(), Error::NotPrime(9));
        assert!(matches!(
            FieldTower::build(3, 1).unwrap_err(),
            Error::RangeError(_)
        ));
        assert!(matches!(
            FieldTower::build_with_guard(3, 2, 50).unwrap_err(),
            Error::SizeGuardExceeded { .. }
        ));
    }

    #[test]
    fn omega_definition_and_order() {
        let t = t32();
        assert_eq!(t.omega(), t.alpha_pow(10)); // p^m + 1 = 10
        // order of omega is p^m - 1 = 8
        let mut pow = t.one();
        for i in 1..=8u64 {
            pow = t.mul(pow, t.omega()).unwrap();
            if i < 8 {
                assert_ne!(pow, t.one());
            }
        }
        assert_eq!(pow, t.one());
    }

    #[test]
    fn alpha_order_is_full() {
        let t = FieldTower::build(5, 2).unwrap();
        assert_eq!(t.pow(t.alpha(), 624).unwrap(), t.one());
        for l in [2u64, 3, 13] {
            // prime divisors of 624
            assert_ne!(t.pow(t.alpha(), 624 / l).unwrap(), t.one());
        }
    }

    #[test]
    fn subfield_has_p_m_elements_and_is_closed() {
        let t = t32();
        let fixed: Vec<FieldElem> = t
            .elements()
            .filter(|&x| t.pow(x, 9).unwrap() == x)
            .collect();
        assert_eq!(fixed.len(), 9);
        for &x in &fixed {
            assert!(t.is_in_subfield(x).unwrap());
        }
        for &x in &fixed {
            for &y in &fixed {
                assert!(t.is_in_subfield(t.add(x, y).unwrap()).unwrap());
                assert!(t.is_in_subfield(t.mul(x, y).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn additive_inverse() {
        let t = t32();
        for x in t.elements() {
            assert_eq!(t.add(x, t.neg(x).unwrap()).unwrap(), t.zero());
        }
    }

    #[test]
    fn pow_conventions() {
        let t = t32();
        assert_eq!(t.pow(t.zero(), 0).unwrap(), t.one());
        assert_eq!(t.pow(t.zero(), 5).unwrap(), t.zero());
        assert_eq!(t.pow(t.alpha(), 80).unwrap(), t.one());
    }

    #[test]
    fn dlog_round_trip() {
        let t = t32();
        for x in t.nonzero_elements() {
            let e = t.dlog(x).unwrap();
            assert_eq!(t.alpha_pow(e), x);
        }
        assert_eq!(t.dlog(t.one()).unwrap(), 0);
        assert_eq!(t.dlog(t.alpha()).unwrap(), 1);
        assert_eq!(t.dlog(t.omega()).unwrap(), 10);
        assert_eq!(t.dlog(t.zero()).unwrap_err(), Error::ZeroHasNoLog);
    }

    #[test]
    fn frobenius_properties() {
        let t = FieldTower::build(3, 3).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let x = t.elem(rng.gen_range(0..t.order()) as u32);
            let y = t.elem(rng.gen_range(0..t.order()) as u32);
            let tpow = rng.gen_range(0..6);
            let fx = t.frobenius(x, tpow).unwrap();
            let fy = t.frobenius(y, tpow).unwrap();
            assert_eq!(
                t.frobenius(t.add(x, y).unwrap(), tpow).unwrap(),
                t.add(fx, fy).unwrap()
            );
            assert_eq!(
                t.frobenius(t.mul(x, y).unwrap(), tpow).unwrap(),
                t.mul(fx, fy).unwrap()
            );
            assert_eq!(t.frobenius(x, 0).unwrap(), x);
            assert_eq!(t.frobenius(x, 6).unwrap(), x);
        }
        assert_eq!(t.frobenius(t.omega(), 3).unwrap(), t.omega());
    }

    #[test]
    fn trace_values() {
        let t = t32();
        assert_eq!(t.trace_m1(t.zero()).unwrap(), 0);
        assert_eq!(t.trace_m1(t.one()).unwrap(), 2); // m mod p
        assert_eq!(t.trace_2m1(t.zero()).unwrap(), 0);
        assert_eq!(t.trace_2m1(t.one()).unwrap(), 1); // 2m mod p
        assert_eq!(t.trace_m1(t.alpha()).unwrap_err(), Error::NotInSubfield);

        let zero_trace = t
            .elements()
            .filter(|&x| t.trace_2m1(x).unwrap() == 0)
            .count() as u64;
        assert_eq!(zero_trace, 27); // p^{2m-1}
    }

    #[test]
    fn subfield_zero_trace_count_3_3() {
        let t = FieldTower::build(3, 3).unwrap();
        let n = t
            .subfield_elements()
            .filter(|&a| !a.is_zero() && t.trace_m1(a).unwrap() == 0)
            .count();
        assert_eq!(n, 8); // p^{m-1} - 1
    }

    #[test]
    fn traces_are_linear() {
        let t = FieldTower::build(5, 2).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let x = t.elem(rng.gen_range(0..t.order()) as u32);
            let y = t.elem(rng.gen_range(0..t.order()) as u32);
            let c = rng.gen_range(0..5) as u8;
            let cx = t.mul(t.from_coeffs(&[c, 0, 0, 0]).unwrap(), x).unwrap();
            let sum = t.add(cx, y).unwrap();
            let expect =
                (c as u32 * t.trace_2m1(x).unwrap() as u32 + t.trace_2m1(y).unwrap() as u32) % 5;
            assert_eq!(t.trace_2m1(sum).unwrap() as u32, expect);
        }
        // Tr_{m/1} linearity over the subfield.
        for _ in 0..200 {
            let a = t.subfield_elem_by_key(rng.gen_range(0..25)).unwrap();
            let b = t.subfield_elem_by_key(rng.gen_range(0..25)).unwrap();
            let s = t.add(a, b).unwrap();
            let expect = (t.trace_m1(a).unwrap() + t.trace_m1(b).unwrap()) % 5;
            assert_eq!(t.trace_m1(s).unwrap(), expect);
        }
    }

    #[test]
    fn subfield_coordinates() {
        let t = FieldTower::build(3, 3).unwrap();
        assert_eq!(t.subfield_coords(t.zero()).unwrap(), vec![0, 0, 0]);
        assert_eq!(t.subfield_coords(t.omega()).unwrap(), vec![0, 1, 0]);
        let one_plus_omega = t.add(t.one(), t.omega()).unwrap();
        assert_eq!(t.subfield_coords(one_plus_omega).unwrap(), vec![1, 1, 0]);
        assert_eq!(t.subfield_coords(t.alpha()).unwrap_err(), Error::NotInSubfield);

        // Bijective onto GF(p)^m.
        let mut seen = std::collections::HashSet::new();
        for a in t.subfield_elements() {
            assert!(seen.insert(t.subfield_coords(a).unwrap()));
        }
        assert_eq!(seen.len(), 27);
    }

    #[test]
    fn tower_mismatch_detected() {
        let t1 = t32();
        let t2 = FieldTower::build(5, 2).unwrap();
        assert_eq!(t1.add(t1.one(), t2.one()).unwrap_err(), Error::TowerMismatch);
        assert_eq!(t2.trace_2m1(t1.alpha()).unwrap_err(), Error::TowerMismatch);
    }

    #[test]
    fn canonical_key_orders_by_coefficient_vectors() {
        let t = t32();
        let mut by_key: Vec<FieldElem> = t.elements().collect();
        by_key.sort_by_key(|&x| t.canonical_key(x).unwrap());
        let mut by_coeffs: Vec<FieldElem> = t.elements().collect();
        by_coeffs.sort_by_key(|x| x.coeffs());
        assert_eq!(by_key, by_coeffs);
    }

    #[test]
    fn coeff_round_trip() {
        let t = FieldTower::build(3, 3).unwrap();
        for x in t.elements() {
            assert_eq!(t.from_coeffs(&x.coeffs()).unwrap(), x);
        }
        assert!(t.from_coeffs(&[0, 0, 0]).is_err());
        assert!(t.from_coeffs(&[3, 0, 0, 0, 0, 0]).is_err());
    }
}
