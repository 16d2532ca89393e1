//! JSON persistence of constructed sets and the end-to-end pipelines
//! behind the command-line interface.
//!
//! Documents are byte-deterministic: elements are serialized in canonical
//! order, the modulus is the deterministic one for `(p, m)`, and the
//! provenance string is canonicalized. Loading re-derives the tower and
//! refuses documents whose modulus came from different conventions —
//! coordinates are meaningless under another modulus.

use serde::{Deserialize, Serialize};

use crate::cyclotomy::{singer_modulus, singer_set, IndexSet};
use crate::error::Error;
use crate::field::FieldTower;
use crate::graph;
use crate::pds::{
    construct_d, denniston_params, dual_params, dual_set, GroupElem, GroupSet, PdsParams,
};
use crate::quadform::{construct_x_quadform, ElementSet};
use crate::verify::{
    verify_difference_set, verify_pds_bruteforce_field, verify_pds_bruteforce_group,
    verify_pds_character_field, verify_pds_character_group, verify_srg_matrix_field,
    verify_srg_matrix_group, VerificationReport,
};
use crate::{cyclotomy, pds};

pub const SCHEMA_VERSION: u32 = 1;

/// Which construction a document carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetKind {
    #[serde(rename = "X")]
    X,
    #[serde(rename = "X_k")]
    XShift,
    #[serde(rename = "D")]
    D,
    #[serde(rename = "dual")]
    Dual,
    #[serde(rename = "singer")]
    Singer,
}

impl SetKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SetKind::X => "X",
            SetKind::XShift => "X_k",
            SetKind::D => "D",
            SetKind::Dual => "dual",
            SetKind::Singer => "singer",
        }
    }
}

/// Plain parameter tuple as stored on disk. For PDS kinds this is a
/// consistent `(v, k, lambda, mu)`; for Singer documents `mu` mirrors
/// `lambda` (a difference set hits inside and outside residues alike).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

/// Set elements in their on-disk form: residues for index sets,
/// coefficient vectors for field sets, coordinate/coefficient pairs for
/// group sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DocElements {
    Indices(Vec<u64>),
    Field(Vec<Vec<u8>>),
    Group(Vec<(Vec<u8>, Vec<u8>)>),
}

impl DocElements {
    pub fn len(&self) -> usize {
        match self {
            DocElements::Indices(v) => v.len(),
            DocElements::Field(v) => v.len(),
            DocElements::Group(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A constructed set with everything needed to reproduce and verify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdsDocument {
    pub schema_version: u32,
    pub p: u64,
    pub m: u32,
    /// Modulus coefficients, low degree first; must match the
    /// deterministic modulus for `(p, m)`.
    pub modulus: Vec<u8>,
    pub kind: SetKind,
    pub params: DocParams,
    pub elements: DocElements,
    /// Canonical construction command line.
    pub provenance: String,
}

impl PdsDocument {
    pub fn from_element_set(
        tower: &FieldTower,
        kind: SetKind,
        set: &ElementSet,
        params: &PdsParams,
        provenance: String,
    ) -> Self {
        PdsDocument {
            schema_version: SCHEMA_VERSION,
            p: tower.p(),
            m: tower.m(),
            modulus: tower.modulus().to_vec(),
            kind,
            params: DocParams {
                v: params.v,
                k: params.k,
                lambda: params.lambda,
                mu: params.mu,
            },
            elements: DocElements::Field(set.elements().iter().map(|e| e.coeffs()).collect()),
            provenance,
        }
    }

    pub fn from_group_set(
        tower: &FieldTower,
        kind: SetKind,
        set: &GroupSet,
        params: &PdsParams,
        provenance: String,
    ) -> Result<Self, Error> {
        let elements = set
            .elements()
            .iter()
            .map(|ge| Ok((tower.subfield_coords(ge.a)?, ge.b.coeffs())))
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(PdsDocument {
            schema_version: SCHEMA_VERSION,
            p: tower.p(),
            m: tower.m(),
            modulus: tower.modulus().to_vec(),
            kind,
            params: DocParams {
                v: params.v,
                k: params.k,
                lambda: params.lambda,
                mu: params.mu,
            },
            elements: DocElements::Group(elements),
            provenance,
        })
    }

    pub fn from_index_set(
        tower: &FieldTower,
        set: &IndexSet,
        lambda: u64,
        provenance: String,
    ) -> Self {
        PdsDocument {
            schema_version: SCHEMA_VERSION,
            p: tower.p(),
            m: tower.m(),
            modulus: tower.modulus().to_vec(),
            kind: SetKind::Singer,
            params: DocParams {
                v: set.modulus(),
                k: set.len() as u64,
                lambda,
                mu: lambda,
            },
            elements: DocElements::Indices(set.indices().to_vec()),
            provenance,
        }
    }

    /// Deterministic pretty-printed JSON, LF-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let doc: PdsDocument =
            serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::ParseError(format!(
                "unsupported schema version {}",
                doc.schema_version
            )));
        }
        if doc.elements.len() as u64 != doc.params.k {
            return Err(Error::ParseError(format!(
                "document has {} elements but k = {}",
                doc.elements.len(),
                doc.params.k
            )));
        }
        let wrong_shape = match (doc.kind, &doc.elements) {
            (SetKind::Singer, DocElements::Indices(_)) => false,
            (SetKind::X | SetKind::XShift, DocElements::Field(_)) => false,
            (SetKind::D | SetKind::Dual, DocElements::Group(_)) => false,
            _ => true,
        };
        if wrong_shape {
            return Err(Error::ParseError(format!(
                "element shape does not match kind {:?}",
                doc.kind.as_str()
            )));
        }
        Ok(doc)
    }

    /// Rebuilds the tower for `(p, m)` and checks the stored modulus
    /// against the deterministic one.
    pub fn open_tower(&self, guard: u64) -> Result<FieldTower, Error> {
        let tower = FieldTower::build_with_guard(self.p, self.m, guard)?;
        if tower.modulus() != self.modulus.as_slice() {
            return Err(Error::ModulusMismatch {
                found: self.modulus.clone(),
                expected: tower.modulus().to_vec(),
            });
        }
        Ok(tower)
    }

    pub fn to_element_set(&self, tower: &FieldTower) -> Result<ElementSet, Error> {
        let DocElements::Field(rows) = &self.elements else {
            return Err(Error::ParseError("document does not hold a field set".into()));
        };
        let elems = rows
            .iter()
            .map(|r| tower.from_coeffs(r))
            .collect::<Result<Vec<_>, _>>()?;
        ElementSet::from_elements(tower, elems)
    }

    pub fn to_group_set(&self, tower: &FieldTower) -> Result<GroupSet, Error> {
        let DocElements::Group(rows) = &self.elements else {
            return Err(Error::ParseError("document does not hold a group set".into()));
        };
        let m = tower.m() as usize;
        let p = tower.p();
        let elems = rows
            .iter()
            .map(|(coords, coeffs)| {
                if coords.len() != m || coords.iter().any(|&c| c as u64 >= p) {
                    return Err(Error::ParseError(format!(
                        "bad subfield coordinates {coords:?}"
                    )));
                }
                let mut key = 0u32;
                for &c in coords {
                    key = key * p as u32 + c as u32;
                }
                let a = tower.subfield_elem_by_key(key)?;
                let b = tower.from_coeffs(coeffs)?;
                GroupElem::new(tower, a, b)
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupSet::from_elements(tower, elems)
    }

    pub fn to_index_set(&self) -> Result<IndexSet, Error> {
        let DocElements::Indices(idx) = &self.elements else {
            return Err(Error::ParseError("document does not hold an index set".into()));
        };
        IndexSet::new(self.params.v, idx.clone())
    }

    pub fn pds_params(&self) -> Result<PdsParams, Error> {
        PdsParams::new(self.params.v, self.params.k, self.params.lambda, self.params.mu)
    }
}

// ---- pipelines ---------------------------------------------------------------

/// Builds the document for one construction, end to end. `shift` is the
/// `k` of `X_k` and is required exactly for that kind.
pub fn construct_document(
    kind: SetKind,
    p: u64,
    m: u32,
    shift: Option<u64>,
    guard: u64,
) -> Result<PdsDocument, Error> {
    let tower = FieldTower::build_with_guard(p, m, guard)?;
    let provenance = match (kind, shift) {
        (SetKind::XShift, Some(k)) => format!("construct --kind X_k --p {p} --m {m} --k {k}"),
        (SetKind::XShift, None) => {
            return Err(Error::RangeError("kind X_k requires a shift index --k".into()))
        }
        _ => format!("construct --kind {} --p {p} --m {m}", kind.as_str()),
    };
    match kind {
        SetKind::X => {
            let set = construct_x_quadform(&tower)?;
            let params = pds::x_params(p, m)?;
            Ok(PdsDocument::from_element_set(&tower, kind, &set, &params, provenance))
        }
        SetKind::XShift => {
            let set = cyclotomy::shift_xk(&tower, shift.expect("checked above"))?;
            let params = pds::x_params(p, m)?;
            Ok(PdsDocument::from_element_set(&tower, kind, &set, &params, provenance))
        }
        SetKind::D => {
            let set = construct_d(&tower)?;
            let params = denniston_params(p, m, 1)?;
            PdsDocument::from_group_set(&tower, kind, &set, &params, provenance)
        }
        SetKind::Dual => {
            let d = construct_d(&tower)?;
            let params = denniston_params(p, m, 1)?;
            let dual = dual_set(&tower, &d, &params)?;
            let dparams = dual_params(&params)?;
            PdsDocument::from_group_set(&tower, kind, &dual, &dparams, provenance)
        }
        SetKind::Singer => {
            let set = singer_set(&tower)?;
            let e = singer_modulus(&tower);
            let lambda = if m >= 2 {
                (p.pow(m - 2) - 1) / (p - 1)
            } else {
                0
            };
            debug_assert_eq!(e, set.modulus());
            Ok(PdsDocument::from_index_set(&tower, &set, lambda, provenance))
        }
    }
}

/// Which oracles `verify_document` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMethod {
    Brute,
    Character,
    Matrix,
    All,
}

/// Verifies a parsed document with the chosen oracles; Singer documents
/// always run the difference-set check. Returns every produced report;
/// the run passes only if all of them do.
pub fn verify_document(
    doc: &PdsDocument,
    method: VerifyMethod,
    guard: u64,
) -> Result<Vec<VerificationReport>, Error> {
    let tower = doc.open_tower(guard)?;
    let mut reports = Vec::new();
    if doc.kind == SetKind::Singer {
        let set = doc.to_index_set()?;
        reports.push(verify_difference_set(
            &set,
            doc.params.v,
            doc.params.k,
            doc.params.lambda,
        )?);
        return Ok(reports);
    }
    let params = doc.pds_params()?;
    match &doc.elements {
        DocElements::Field(_) => {
            let set = doc.to_element_set(&tower)?;
            if matches!(method, VerifyMethod::Brute | VerifyMethod::All) {
                reports.push(verify_pds_bruteforce_field(&tower, &set, &params)?);
            }
            if matches!(method, VerifyMethod::Character | VerifyMethod::All) {
                reports.push(verify_pds_character_field(&tower, &set, &params)?);
            }
            if matches!(method, VerifyMethod::Matrix | VerifyMethod::All) {
                reports.push(verify_srg_matrix_field(&tower, &set, &params)?);
            }
        }
        DocElements::Group(_) => {
            let set = doc.to_group_set(&tower)?;
            if matches!(method, VerifyMethod::Brute | VerifyMethod::All) {
                reports.push(verify_pds_bruteforce_group(&tower, &set, &params)?);
            }
            if matches!(method, VerifyMethod::Character | VerifyMethod::All) {
                reports.push(verify_pds_character_group(&tower, &set, &params)?);
            }
            if matches!(method, VerifyMethod::Matrix | VerifyMethod::All) {
                reports.push(verify_srg_matrix_group(&tower, &set, &params)?);
            }
        }
        DocElements::Indices(_) => unreachable!("singer handled above"),
    }
    Ok(reports)
}

/// Dualizes a verified PDS document. The input must certify (the
/// character sweep inside `dual_set` enforces this) and the output
/// carries the dual parameters.
pub fn dual_document(doc: &PdsDocument, guard: u64) -> Result<PdsDocument, Error> {
    let tower = doc.open_tower(guard)?;
    let params = doc.pds_params()?;
    let dparams = dual_params(&params)?;
    let provenance = format!("dual ({})", doc.provenance);
    match &doc.elements {
        DocElements::Group(_) => {
            let set = doc.to_group_set(&tower)?;
            let dual = dual_set(&tower, &set, &params)?;
            PdsDocument::from_group_set(&tower, SetKind::Dual, &dual, &dparams, provenance)
        }
        DocElements::Field(_) => {
            let set = doc.to_element_set(&tower)?;
            let dual = pds::dual_set_field(&tower, &set, &params)?;
            Ok(PdsDocument::from_element_set(
                &tower,
                SetKind::Dual,
                &dual,
                &dparams,
                provenance,
            ))
        }
        DocElements::Indices(_) => Err(Error::ParseError(
            "difference-set documents have no character dual".into(),
        )),
    }
}

/// Graph export formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

/// Renders the Cayley graph of a PDS document in the requested format.
pub fn export_graph(doc: &PdsDocument, format: GraphFormat, guard: u64) -> Result<String, Error> {
    let tower = doc.open_tower(guard)?;
    let cayley = match &doc.elements {
        DocElements::Field(_) => {
            let set = doc.to_element_set(&tower)?;
            graph::cayley_from_element_set(&tower, &set)?
        }
        DocElements::Group(_) => {
            let set = doc.to_group_set(&tower)?;
            graph::cayley_from_group_set(&tower, &set)?
        }
        DocElements::Indices(_) => {
            return Err(Error::ParseError(
                "difference-set documents have no Cayley graph export".into(),
            ))
        }
    };
    Ok(match format {
        GraphFormat::Graph6 => cayley.to_graph6(),
        GraphFormat::Edgelist => cayley.to_edgelist(),
    })
}
