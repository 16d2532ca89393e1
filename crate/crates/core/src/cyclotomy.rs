//! Cyclotomic classes of `GF(p^{2m})*`, the trace-zero Singer difference
//! set, and the cyclotomic route to the quadric set `X` and its
//! multiplicative shifts `X_k`.
//!
//! Throughout, `e1 = (p^m - 1)/(p - 1)` is the order of the classes that
//! assemble `X`: the Singer set `D` lives in `Z_{e1}` and
//! `X = ∪_{j ∈ D} C_j^{e1}`.

use crate::error::Error;
use crate::field::{FieldElem, FieldTower, TowerKey};
use crate::quadform::{q_eval, ElementSet};

/// The cyclotomic class `C_i^{e} = alpha^i ⟨alpha^e⟩` of `GF(p^{2m})*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycClass {
    key: TowerKey,
    e: u64,
    i: u64,
}

impl CycClass {
    pub fn new(tower: &FieldTower, e: u64, i: u64) -> Result<Self, Error> {
        let order = tower.order() - 1;
        if e == 0 || order % e != 0 {
            return Err(Error::OrderDoesNotDivide { e, order });
        }
        if i >= e {
            return Err(Error::IndexOutOfRange { index: i, bound: e });
        }
        Ok(CycClass {
            key: tower.key(),
            e,
            i,
        })
    }

    pub fn order(&self) -> u64 {
        self.e
    }

    pub fn index(&self) -> u64 {
        self.i
    }

    /// Class size `f = (p^{2m} - 1)/e`.
    pub fn size(&self, tower: &FieldTower) -> u64 {
        (tower.order() - 1) / self.e
    }
}

/// A sorted set of residues modulo `modulus`; houses the Singer difference
/// set and other index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    modulus: u64,
    indices: Vec<u64>,
}

impl IndexSet {
    pub fn new(modulus: u64, mut indices: Vec<u64>) -> Result<Self, Error> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= modulus) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                bound: modulus,
            });
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ParseError("duplicate index in set".into()));
        }
        Ok(IndexSet { modulus, indices })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Elements of a cyclotomic class, `{alpha^{i + e t} : 0 <= t < f}`, in
/// canonical order.
pub fn class_elements(tower: &FieldTower, class: &CycClass) -> Result<ElementSet, Error> {
    if class.key != tower.key() {
        return Err(Error::TowerMismatch);
    }
    let f = class.size(tower);
    let elems: Vec<FieldElem> = (0..f)
        .map(|t| tower.alpha_pow(class.i + class.e * t))
        .collect();
    ElementSet::from_elements(tower, elems)
}

/// The class of order `e` containing nonzero `x`: index `dlog(x) mod e`.
pub fn class_of(tower: &FieldTower, x: FieldElem, e: u64) -> Result<CycClass, Error> {
    let order = tower.order() - 1;
    if e == 0 || order % e != 0 {
        return Err(Error::OrderDoesNotDivide { e, order });
    }
    if x.is_zero() {
        return Err(Error::ZeroHasNoClass);
    }
    let i = tower.dlog(x)? % e;
    CycClass::new(tower, e, i)
}

/// `e1 = (p^m - 1)/(p - 1)`, the modulus of the Singer difference set.
pub fn singer_modulus(tower: &FieldTower) -> u64 {
    (tower.subfield_order() - 1) / (tower.p() - 1)
}

/// The Singer difference set `D = {i : Tr_{m/1}(omega^i) = 0, 0 <= i < e1}`
/// in `Z_{e1}`, of size `(p^{m-1} - 1)/(p - 1)`.
pub fn singer_set(tower: &FieldTower) -> Result<IndexSet, Error> {
    let e1 = singer_modulus(tower);
    let mut indices = Vec::new();
    for i in 0..e1 {
        if tower.trace_m1(tower.omega_pow(i))? == 0 {
            indices.push(i);
        }
    }
    IndexSet::new(e1, indices)
}

/// Nonzero subfield elements of trace zero. Computed by direct filter and
/// cross-checked against the coset union `∪_{j ∈ D} omega^j ⟨omega^{e1}⟩`.
pub fn trace_zero_t(tower: &FieldTower) -> Result<ElementSet, Error> {
    let direct: Vec<FieldElem> = tower
        .subfield_elements()
        .filter(|&a| !a.is_zero() && tower.trace_m1(a).unwrap_or(0xFF) == 0)
        .collect();
    let direct = ElementSet::from_elements(tower, direct)?;

    let e1 = singer_modulus(tower);
    let d = singer_set(tower)?;
    let mut union = Vec::new();
    for &j in d.indices() {
        for s in 0..(tower.p() - 1) {
            union.push(tower.omega_pow(j + e1 * s));
        }
    }
    let union = ElementSet::from_elements(tower, union)?;
    debug_assert_eq!(direct, union, "coset union must reproduce the trace kernel");
    Ok(direct)
}

/// `X` assembled from cyclotomic classes: `∪_{j ∈ D} C_j^{e1}`.
pub fn construct_x_cyclo(tower: &FieldTower) -> Result<ElementSet, Error> {
    let e1 = singer_modulus(tower);
    let d = singer_set(tower)?;
    let mut elems = Vec::new();
    for &j in d.indices() {
        let class = CycClass::new(tower, e1, j)?;
        elems.extend_from_slice(class_elements(tower, &class)?.elements());
    }
    ElementSet::from_elements(tower, elems)
}

/// The shifted set `X_k = ∪_{j ∈ (-k)+D} C_j^{e1}`, equal to
/// `alpha^{-k} X`; a PDS with the same parameters as `X`.
pub fn shift_xk(tower: &FieldTower, k: u64) -> Result<ElementSet, Error> {
    let e1 = singer_modulus(tower);
    if k >= e1 {
        return Err(Error::IndexOutOfRange { index: k, bound: e1 });
    }
    let d = singer_set(tower)?;
    let mut elems = Vec::new();
    for &j in d.indices() {
        let shifted = (j + e1 - k) % e1;
        let class = CycClass::new(tower, e1, shifted)?;
        elems.extend_from_slice(class_elements(tower, &class)?.elements());
    }
    ElementSet::from_elements(tower, elems)
}

/// True iff the preimage of `omega^i` under `Q` is exactly the class
/// `C_i^{p^m - 1}`.
pub fn preimage_check(tower: &FieldTower, i: u64) -> Result<bool, Error> {
    let e = tower.subfield_order() - 1;
    if i >= e {
        return Err(Error::IndexOutOfRange { index: i, bound: e });
    }
    let target = tower.omega_pow(i);
    let preimage: Vec<FieldElem> = tower
        .nonzero_elements()
        .filter(|&x| q_eval(tower, x).expect("same tower") == target)
        .collect();
    let preimage = ElementSet::from_elements(tower, preimage)?;
    let class = class_elements(tower, &CycClass::new(tower, e, i)?)?;
    Ok(preimage == class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::construct_x_quadform;

    fn t32() -> FieldTower {
        FieldTower::build(3, 2).unwrap()
    }

    #[test]
    fn singleton_class_of_full_order() {
        let t = t32();
        let c = CycClass::new(&t, 80, 0).unwrap();
        let set = class_elements(&t, &c).unwrap();
        assert_eq!(set.elements(), &[t.one()]);
    }

    #[test]
    fn class_size_and_partition() {
        let t = t32();
        let e = singer_modulus(&t); // 4
        assert_eq!(e, 4);
        let mut seen = std::collections::HashSet::new();
        for i in 0..e {
            let c = CycClass::new(&t, e, i).unwrap();
            assert_eq!(c.size(&t), 20); // (p-1)(p^m+1)
            for &x in class_elements(&t, &c).unwrap().elements() {
                assert!(seen.insert(x), "classes must be disjoint");
            }
        }
        assert_eq!(seen.len(), 80); // partition of the nonzero elements
    }

    #[test]
    fn coarse_class_refines_into_fine_classes() {
        let t = t32();
        let e1 = 4u64;
        let fine = 8u64; // p^m - 1
        for j in 0..e1 {
            let coarse = class_elements(&t, &CycClass::new(&t, e1, j).unwrap()).unwrap();
            let mut union = Vec::new();
            for tstep in 0..(t.p() - 1) {
                let idx = (tstep * e1 + j) % fine;
                union.extend_from_slice(
                    class_elements(&t, &CycClass::new(&t, fine, idx).unwrap())
                        .unwrap()
                        .elements(),
                );
            }
            let union = ElementSet::from_elements(&t, union).unwrap();
            assert_eq!(coarse, union);
        }
    }

    #[test]
    fn class_of_respects_cosets() {
        let t = t32();
        let e = 4u64;
        assert_eq!(class_of(&t, t.alpha_pow(e), e).unwrap().index(), 0);
        assert_eq!(class_of(&t, t.alpha(), e).unwrap().index(), 1);
        for x in t.nonzero_elements() {
            let shifted = t.mul(t.alpha_pow(e), x).unwrap();
            assert_eq!(
                class_of(&t, x, e).unwrap().index(),
                class_of(&t, shifted, e).unwrap().index()
            );
        }
        assert_eq!(
            class_of(&t, t.zero(), e).unwrap_err(),
            Error::ZeroHasNoClass
        );
        assert!(matches!(
            class_of(&t, t.one(), 7).unwrap_err(),
            Error::OrderDoesNotDivide { .. }
        ));
    }

    #[test]
    fn singer_set_sizes() {
        let cases = [(3u64, 2u32, 4u64, 1usize), (3, 3, 13, 4), (5, 2, 6, 1)];
        for (p, m, e, size) in cases {
            let t = FieldTower::build(p, m).unwrap();
            let d = singer_set(&t).unwrap();
            assert_eq!(d.modulus(), e);
            assert_eq!(d.len(), size);
        }
    }

    #[test]
    fn trace_zero_set_properties() {
        let t = FieldTower::build(3, 3).unwrap();
        let tset = trace_zero_t(&t).unwrap();
        assert_eq!(tset.len(), 8); // p^{m-1} - 1
        assert_eq!(tset, tset.negated(&t).unwrap());
        for &a in tset.elements() {
            assert_eq!(t.trace_m1(a).unwrap(), 0);
        }
    }

    #[test]
    fn cyclotomic_and_quadratic_x_agree() {
        for (p, m) in [(3u64, 2u32), (3, 3), (5, 2)] {
            let t = FieldTower::build(p, m).unwrap();
            assert_eq!(construct_x_cyclo(&t).unwrap(), construct_x_quadform(&t).unwrap());
        }
    }

    #[test]
    fn x_size_counts_classes() {
        let t = FieldTower::build(3, 3).unwrap();
        let d = singer_set(&t).unwrap();
        let x = construct_x_cyclo(&t).unwrap();
        let class_size = (t.p() - 1) * (t.subfield_order() + 1);
        assert_eq!(x.len() as u64, d.len() as u64 * class_size); // 4 * 56 = 224
    }

    #[test]
    fn shifts_are_multiplicative_translates() {
        let t = t32();
        let x = construct_x_cyclo(&t).unwrap();
        assert_eq!(shift_xk(&t, 0).unwrap(), x);
        for k in 0..singer_modulus(&t) {
            let xk = shift_xk(&t, k).unwrap();
            let scale = t.inv(t.alpha_pow(k)).unwrap();
            let translated: Vec<FieldElem> = x
                .elements()
                .iter()
                .map(|&e| t.mul(scale, e).unwrap())
                .collect();
            let translated = ElementSet::from_elements(&t, translated).unwrap();
            assert_eq!(xk, translated);
            assert_eq!(xk.len(), x.len());
        }
        assert!(matches!(
            shift_xk(&t, 4).unwrap_err(),
            Error::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn preimages_are_classes() {
        let t = t32();
        for i in 0..(t.subfield_order() - 1) {
            assert!(preimage_check(&t, i).unwrap(), "failed at i = {i}");
        }
    }
}
