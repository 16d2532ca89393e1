//! Parameter algebra for Denniston-type and quadric partial difference
//! sets, the main construction `D` in `GF(p^m)⁺ × GF(p^{2m})⁺ ≅ Z_p^{3m}`,
//! and character-theoretic duals.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclotomy::{class_elements, singer_modulus, CycClass};
use crate::error::Error;
use crate::field::{FieldElem, FieldTower, TowerKey};
use crate::quadform::ElementSet;
use crate::verify;

/// A `(v, k, lambda, mu)` tuple together with its two character values
/// `theta = ((lambda - mu) ± sqrt(Delta))/2`, `Delta = (mu - lambda)^2 +
/// 4(k - mu)`. Construction enforces the consistency identity
/// `k^2 = k + lambda*k + mu*(v - k - 1)` and integrality of the thetas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdsParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
    theta_pos: i64,
    theta_neg: i64,
}

impl PdsParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self, Error> {
        let fail = |reason: &str| Error::ParamInconsistency {
            v,
            k,
            lambda: lambda as i64,
            mu: mu as i64,
            reason: reason.to_string(),
        };
        if k == 0 || k >= v {
            return Err(fail("k must satisfy 0 < k < v"));
        }
        let (vi, ki, li, mi) = (v as i128, k as i128, lambda as i128, mu as i128);
        if ki * ki != ki + li * ki + mi * (vi - ki - 1) {
            return Err(fail("k^2 = k + lambda*k + mu*(v-k-1) fails"));
        }
        let disc = (mi - li) * (mi - li) + 4 * (ki - mi);
        let sq = arith::exact_sqrt(disc).ok_or_else(|| fail("discriminant is not a square"))?;
        let num_pos = li - mi + sq;
        let num_neg = li - mi - sq;
        if num_pos % 2 != 0 || num_neg % 2 != 0 {
            return Err(fail("character values are not integers"));
        }
        let theta_pos = (num_pos / 2) as i64;
        let theta_neg = (num_neg / 2) as i64;
        if theta_pos < 0 || theta_neg >= 0 {
            return Err(fail("character values must straddle zero"));
        }
        Ok(PdsParams {
            v,
            k,
            lambda,
            mu,
            theta_pos,
            theta_neg,
        })
    }

    pub fn theta_pos(&self) -> i64 {
        self.theta_pos
    }

    pub fn theta_neg(&self) -> i64 {
        self.theta_neg
    }

    /// `sqrt((mu - lambda)^2 + 4(k - mu))`.
    pub fn sqrt_disc(&self) -> i64 {
        self.theta_pos - self.theta_neg
    }
}

fn require_odd_prime(p: u64) -> Result<(), Error> {
    if p == 2 {
        return Err(Error::EvenPrimeUnsupported);
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// The Denniston parameter tuple
/// `(p^{3m}, (p^{m+r}-p^m+p^r)(p^m-1), p^m-p^r+(p^{m+r}-p^m+p^r)(p^r-2),
/// (p^{m+r}-p^m+p^r)(p^r-1))` for `m >= 2`, `1 <= r < m`.
pub fn denniston_params(p: u64, m: u32, r: u32) -> Result<PdsParams, Error> {
    require_odd_prime(p)?;
    if m < 2 {
        return Err(Error::RangeError(format!("m = {m} must be at least 2")));
    }
    if r == 0 || r >= m {
        return Err(Error::RangeError(format!(
            "r = {r} must satisfy 1 <= r < m = {m}"
        )));
    }
    let o = || Error::RangeError("parameters overflow 64-bit arithmetic".into());
    let pm = arith::checked_pow(p, m).ok_or_else(o)?;
    let pr = arith::checked_pow(p, r).ok_or_else(o)?;
    let v = arith::checked_pow(p, 3 * m).ok_or_else(o)?;
    let c = pm
        .checked_mul(pr)
        .and_then(|x| x.checked_sub(pm))
        .and_then(|x| x.checked_add(pr))
        .ok_or_else(o)?;
    let k = c.checked_mul(pm - 1).ok_or_else(o)?;
    let lambda = (pm - pr)
        .checked_add(c.checked_mul(pr - 2).ok_or_else(o)?)
        .ok_or_else(o)?;
    let mu = c.checked_mul(pr - 1).ok_or_else(o)?;
    PdsParams::new(v, k, lambda, mu)
}

/// Parameters of the quadric PDS `X`:
/// `(p^{2m}, p^{2m-1}-p^{m-1}(p-1)-1, p^{2m-2}-p^{m-1}(p-1)-2,
/// p^{2m-2}-p^{m-1})`, with character values `p^{m-1}-1` and
/// `-[(p-1)p^{m-1}+1]`.
pub fn x_params(p: u64, m: u32) -> Result<PdsParams, Error> {
    require_odd_prime(p)?;
    if m < 2 {
        return Err(Error::RangeError(format!("m = {m} must be at least 2")));
    }
    let o = || Error::RangeError("parameters overflow 64-bit arithmetic".into());
    let v = arith::checked_pow(p, 2 * m).ok_or_else(o)?;
    let pm1 = arith::checked_pow(p, m - 1).ok_or_else(o)?;
    let edge = pm1 * (p - 1);
    let k = p.pow(2 * m - 1) - edge - 1;
    let lambda = p.pow(2 * m - 2) - edge - 2;
    let mu = p.pow(2 * m - 2) - pm1;
    PdsParams::new(v, k, lambda, mu)
}

/// One element `(a, b)` of `GF(p^m)⁺ × GF(p^{2m})⁺`; the first component
/// always satisfies the subfield invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub a: FieldElem,
    pub b: FieldElem,
}

impl GroupElem {
    pub fn new(tower: &FieldTower, a: FieldElem, b: FieldElem) -> Result<Self, Error> {
        if !tower.is_in_subfield(a)? {
            return Err(Error::NotInSubfield);
        }
        tower.check(b)?;
        Ok(GroupElem { a, b })
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

/// A set of group elements in canonical order: `(subfield coordinates of
/// a, coefficients of b)` compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSet {
    key: TowerKey,
    elems: Vec<GroupElem>,
}

impl GroupSet {
    pub fn from_elements(tower: &FieldTower, mut elems: Vec<GroupElem>) -> Result<Self, Error> {
        let q = tower.order();
        let mut keys = Vec::with_capacity(elems.len());
        for ge in &elems {
            tower.check(ge.b)?;
            let akey = tower.subfield_canonical_key(ge.a)? as u64;
            let bkey = tower.canonical_key(ge.b)? as u64;
            keys.push(akey * q + bkey);
        }
        let mut order: Vec<usize> = (0..elems.len()).collect();
        order.sort_by_key(|&i| keys[i]);
        let mut sorted_keys: Vec<u64> = order.iter().map(|&i| keys[i]).collect();
        elems = order.iter().map(|&i| elems[i]).collect();
        sorted_keys.dedup();
        if sorted_keys.len() != elems.len() {
            return Err(Error::ParseError("duplicate element in group set".into()));
        }
        Ok(GroupSet {
            key: tower.key(),
            elems,
        })
    }

    pub fn tower_key(&self) -> TowerKey {
        self.key
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn negated(&self, tower: &FieldTower) -> Result<GroupSet, Error> {
        let elems = self
            .elems
            .iter()
            .map(|ge| {
                Ok(GroupElem {
                    a: tower.neg(ge.a)?,
                    b: tower.neg(ge.b)?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        GroupSet::from_elements(tower, elems)
    }
}

/// The main construction
/// `D = ∪_{i<e1} (omega^i ⟨omega^{e1}⟩) × (C_i^{e1} ∪ {0})`,
/// a `(p^{3m}, (p^m-1)((p-1)(p^m+1)+1), ..)` PDS candidate of size equal
/// to the `r = 1` Denniston `k`.
pub fn construct_d(tower: &FieldTower) -> Result<GroupSet, Error> {
    let e1 = singer_modulus(tower);
    let p = tower.p();
    let mut elems = Vec::new();
    for i in 0..e1 {
        let class = class_elements(tower, &CycClass::new(tower, e1, i)?)?;
        let mut bs: Vec<FieldElem> = class.elements().to_vec();
        bs.push(tower.zero());
        for s in 0..(p - 1) {
            let a = tower.omega_pow(i + e1 * s);
            for &b in &bs {
                elems.push(GroupElem { a, b });
            }
        }
    }
    GroupSet::from_elements(tower, elems)
}

/// Dual parameters under the pairing used by `dual_set`: `k*` is the
/// number of nonprincipal characters attaining the negative character
/// value, and `lambda*`, `mu*` follow from the dual character values and
/// the consistency identity. Applying this twice returns the input.
pub fn dual_params(params: &PdsParams) -> Result<PdsParams, Error> {
    let fail = |reason: &str| Error::ParamInconsistency {
        v: params.v,
        k: params.k,
        lambda: params.lambda as i64,
        mu: params.mu as i64,
        reason: reason.to_string(),
    };
    let v = params.v as i128;
    let k = params.k as i128;
    let beta = params.lambda as i128 - params.mu as i128;
    let sq = params.sqrt_disc() as i128;
    // Multiplicity of theta_neg among the v-1 nonprincipal characters.
    let num = (sq + beta) * (v - 1) + 2 * k;
    if num % (2 * sq) != 0 {
        return Err(fail("dual k* is not an integer"));
    }
    let k_star = num / (2 * sq);
    let theta_neg = params.theta_neg() as i128;
    if (k - theta_neg) % sq != 0 || v % sq != 0 {
        return Err(fail("dual character values are not integers"));
    }
    let dual_theta_pos = (k - theta_neg) / sq - 1;
    let dual_theta_neg = dual_theta_pos - v / sq;
    let mu_star = k_star + dual_theta_pos * dual_theta_neg;
    let lambda_star = mu_star + dual_theta_pos + dual_theta_neg;
    if k_star <= 0 || mu_star < 0 || lambda_star < 0 {
        return Err(fail("dual parameters are negative"));
    }
    PdsParams::new(params.v, k_star as u64, lambda_star as u64, mu_star as u64)
}

/// The dual of a verified PDS in `GF(p^m)⁺ × GF(p^{2m})⁺`: identifying the
/// character group with the group through the trace pairing
/// `chi_{(s,t)}(a,b) = zeta^{Tr_{m/1}(s a) + Tr_{2m/1}(t b)}`, returns the
/// nonidentity `(s, t)` whose character sum over the set equals the
/// negative character value — the level set that again forms a PDS with
/// the dual parameters.
///
/// The sweep itself re-derives the certificate: if any character sum fails
/// to land on one of the two admissible values the input was not a PDS
/// with `params` and the call refuses with `NotVerified`.
pub fn dual_set(tower: &FieldTower, set: &GroupSet, params: &PdsParams) -> Result<GroupSet, Error> {
    if set.len() as u64 != params.k {
        return Err(Error::SizeMismatch {
            found: set.len(),
            expected: params.k,
        });
    }
    let mut duals = Vec::new();
    verify::for_each_group_character(tower, set, |chi, sum| {
        let val = sum.reduce().ok_or(Error::NonIntegralCharacterSum)?;
        if val == params.theta_neg() {
            duals.push(chi);
        } else if val != params.theta_pos() {
            return Err(Error::NotVerified(format!(
                "character sum {val} is not an admissible character value"
            )));
        }
        Ok(())
    })?;
    GroupSet::from_elements(tower, duals)
}

/// Field-group analogue of [`dual_set`] for PDSs in `GF(p^{2m})⁺`, under
/// the pairing `psi_t(x) = zeta^{Tr_{2m/1}(t x)}`.
pub fn dual_set_field(
    tower: &FieldTower,
    set: &ElementSet,
    params: &PdsParams,
) -> Result<ElementSet, Error> {
    if set.len() as u64 != params.k {
        return Err(Error::SizeMismatch {
            found: set.len(),
            expected: params.k,
        });
    }
    let mut duals = Vec::new();
    verify::for_each_field_character(tower, set, |t, sum| {
        let val = sum.reduce().ok_or(Error::NonIntegralCharacterSum)?;
        if val == params.theta_neg() {
            duals.push(t);
        } else if val != params.theta_pos() {
            return Err(Error::NotVerified(format!(
                "character sum {val} is not an admissible character value"
            )));
        }
        Ok(())
    })?;
    ElementSet::from_elements(tower, duals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn denniston_hand_checked_instance() {
        let p = denniston_params(3, 2, 1).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (729, 168, 27, 42));
        assert_eq!((p.theta_pos(), p.theta_neg()), (6, -21));
    }

    #[test]
    fn denniston_formula_instances() {
        // Values generated by the formula and pinned by the consistency
        // identity enforced in PdsParams::new.
        let p331 = denniston_params(3, 3, 1).unwrap();
        assert_eq!((p331.v, p331.k, p331.lambda, p331.mu), (19683, 1482, 81, 114));
        assert_eq!((p331.theta_pos(), p331.theta_neg()), (24, -57));
        let p521 = denniston_params(5, 2, 1).unwrap();
        assert_eq!((p521.v, p521.k, p521.lambda, p521.mu), (15625, 2520, 335, 420));
        let p721 = denniston_params(7, 2, 1).unwrap();
        assert_eq!((p721.v, p721.k, p721.lambda, p721.mu), (117649, 14448, 1547, 1806));
        assert_eq!((p721.theta_pos(), p721.theta_neg()), (42, -301));
    }

    #[test]
    fn r1_character_values_closed_form() {
        for (p, m) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
            let params = denniston_params(p, m, 1).unwrap();
            let pm = p.pow(m) as i64;
            assert_eq!(params.theta_pos(), pm - p as i64);
            assert_eq!(params.theta_neg(), -(pm * (p as i64 - 1) + p as i64));
        }
    }

    #[test]
    fn x_params_instances() {
        let x32 = x_params(3, 2).unwrap();
        assert_eq!((x32.v, x32.k, x32.lambda, x32.mu), (81, 20, 1, 6));
        assert_eq!((x32.theta_pos(), x32.theta_neg()), (2, -7));
        let x33 = x_params(3, 3).unwrap();
        assert_eq!((x33.v, x33.k, x33.lambda, x33.mu), (729, 224, 61, 72));
        let x52 = x_params(5, 2).unwrap();
        assert_eq!((x52.v, x52.k, x52.lambda, x52.mu), (625, 104, 3, 20));
        for (p, m) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
            let params = x_params(p, m).unwrap();
            let pm1 = p.pow(m - 1) as i64;
            assert_eq!(params.theta_pos(), pm1 - 1);
            assert_eq!(params.theta_neg(), -((p as i64 - 1) * pm1 + 1));
        }
    }

    #[test]
    fn negative_latin_square_shape_of_x() {
        // (n^2, r(n+1), r^2 + 3r - n, r^2 + r) with n = p^m, r = p^{m-1} - 1.
        for (p, m) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
            let params = x_params(p, m).unwrap();
            let n = p.pow(m) as i64;
            let r = p.pow(m - 1) as i64 - 1;
            assert_eq!(params.v as i64, n * n);
            assert_eq!(params.k as i64, r * (n + 1));
            assert_eq!(params.lambda as i64, r * r + 3 * r - n);
            assert_eq!(params.mu as i64, r * r + r);
        }
    }

    #[test]
    fn param_range_and_primality_errors() {
        assert!(matches!(denniston_params(3, 2, 0), Err(Error::RangeError(_))));
        assert!(matches!(denniston_params(3, 2, 2), Err(Error::RangeError(_))));
        assert!(matches!(denniston_params(3, 1, 1), Err(Error::RangeError(_))));
        assert_eq!(denniston_params(2, 2, 1).unwrap_err(), Error::EvenPrimeUnsupported);
        assert_eq!(denniston_params(15, 2, 1).unwrap_err(), Error::NotPrime(15));
    }

    #[test]
    fn inconsistent_tuples_are_rejected() {
        assert!(matches!(
            PdsParams::new(729, 168, 27, 41),
            Err(Error::ParamInconsistency { .. })
        ));
        assert!(matches!(
            PdsParams::new(729, 0, 0, 0),
            Err(Error::ParamInconsistency { .. })
        ));
    }

    #[test]
    fn dual_params_match_r_equals_m_minus_1() {
        // For m = 2 the dual of r = 1 is r = 1 again.
        let d = denniston_params(3, 2, 1).unwrap();
        assert_eq!(dual_params(&d).unwrap(), d);
        // For m = 3 the dual of r = 1 is r = 2.
        let d1 = denniston_params(3, 3, 1).unwrap();
        let d2 = denniston_params(3, 3, 2).unwrap();
        assert_eq!(dual_params(&d1).unwrap(), d2);
        assert_eq!((d2.v, d2.k, d2.lambda, d2.mu), (19683, 5850, 1593, 1800));
        // Biduality.
        assert_eq!(dual_params(&d2).unwrap(), d1);
        // X's parameters are self-dual.
        let x = x_params(3, 2).unwrap();
        assert_eq!(dual_params(&x).unwrap(), x);
    }

    #[test]
    fn construct_d_shape() {
        for (p, m) in [(3u64, 2u32), (3, 3), (5, 2)] {
            let tower = FieldTower::build(p, m).unwrap();
            let d = construct_d(&tower).unwrap();
            let expect = denniston_params(p, m, 1).unwrap();
            assert_eq!(d.len() as u64, expect.k);
            for ge in d.elements() {
                assert!(!ge.a.is_zero(), "first component never vanishes");
                assert!(tower.is_in_subfield(ge.a).unwrap());
                assert!(!ge.is_identity());
            }
            assert_eq!(d, d.negated(&tower).unwrap());
        }
    }

    #[test]
    fn group_set_canonical_order() {
        let tower = FieldTower::build(3, 2).unwrap();
        let d = construct_d(&tower).unwrap();
        let mut prev: Option<(Vec<u8>, Vec<u8>)> = None;
        for ge in d.elements() {
            let key = (tower.subfield_coords(ge.a).unwrap(), ge.b.coeffs());
            if let Some(p) = &prev {
                assert!(p < &key, "elements must ascend lexicographically");
            }
            prev = Some(key);
        }
    }

    #[test]
    fn group_elem_requires_subfield_component() {
        let tower = FieldTower::build(3, 2).unwrap();
        assert_eq!(
            GroupElem::new(&tower, tower.alpha(), tower.zero()).unwrap_err(),
            Error::NotInSubfield
        );
    }
}
