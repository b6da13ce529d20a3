//! Serializable summaries: a per-code report and the census document.

use serde::{Deserialize, Serialize};

use crate::enumerate::{ClassificationTable, Counts};
use crate::gauss::{GaussCode, Style};
use crate::normal::{self, LeftPreference, Orientation};
use crate::reduce;

/// What the library knows about one code.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub code: GaussCode,
    pub letters: String,
    pub left_preference: LeftPreference,
    pub proj_lp: GaussCode,
    pub one_reducible: bool,
    pub two_reducible: bool,
    pub minimal: bool,
    pub g_ori: GaussCode,
    pub g_unori: GaussCode,
    pub orientation: Orientation,
    /// The oriented class of `proj_lp`, sorted.
    pub orbit: Vec<GaussCode>,
    /// The oriented class of its reverse, sorted; equal to `orbit` when the
    /// code is reversible.
    pub reverse_orbit: Vec<GaussCode>,
    /// `d{n}.{k}±` when the code is minimal and a table was supplied.
    pub name: Option<String>,
    pub unoriented_name: Option<String>,
}

impl CodeReport {
    pub fn new(code: &GaussCode, table: Option<&ClassificationTable>) -> Self {
        let lp = normal::proj_lp(code);
        let sets = reduce::pattern_sets(code.n());
        let minimal = sets.is_minimal(code);
        let orbit = normal::oriented_class(&lp).expect("proj_lp is left preferred");
        let reversed = normal::rev_lp(&lp).expect("proj_lp is left preferred");
        let reverse_orbit = normal::oriented_class(&reversed).expect("rev_lp is left preferred");
        let found = table.filter(|_| minimal).and_then(|t| t.lookup(code));
        CodeReport {
            n: code.n(),
            code: code.clone(),
            letters: code.format(Style::Letter),
            left_preference: normal::left_preference(code),
            one_reducible: sets.is_1_reducible(code),
            two_reducible: sets.is_2_reducible(code),
            minimal,
            g_ori: orbit.canonical().clone(),
            g_unori: normal::g_unori(code),
            orientation: normal::canonical_orientation(code),
            orbit: orbit.members().to_vec(),
            reverse_orbit: reverse_orbit.members().to_vec(),
            proj_lp: lp,
            name: found.map(|c| c.name.to_string()),
            unoriented_name: found.map(|c| c.name.unoriented().to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientedRecord {
    pub name: String,
    pub canonical: GaussCode,
    pub members: Vec<GaussCode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnorientedRecord {
    pub name: String,
    pub canonical: GaussCode,
    /// Name of the `+` oriented class.
    pub forward: String,
    /// Name of the `-` oriented class; `None` for reversible classes.
    pub backward: Option<String>,
}

/// Which parts of a census to include.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sections {
    All,
    Lp,
    Minimal,
    Oriented,
    Unoriented,
}

/// The census for one `n`, as written to JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub n: usize,
    pub counts: Counts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lp_codes: Option<Vec<GaussCode>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_codes: Option<Vec<GaussCode>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oriented_classes: Option<Vec<OrientedRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unoriented_classes: Option<Vec<UnorientedRecord>>,
}

impl TableDocument {
    /// `lp_codes` must be supplied for [`Sections::Lp`]; the table does not
    /// keep them.
    pub fn new(
        table: &ClassificationTable,
        sections: Sections,
        lp_codes: Option<Vec<GaussCode>>,
    ) -> Self {
        use Sections::*;
        let oriented = matches!(sections, All | Oriented).then(|| {
            table
                .oriented()
                .iter()
                .map(|c| OrientedRecord {
                    name: c.name.to_string(),
                    canonical: c.class.canonical().clone(),
                    members: c.class.members().to_vec(),
                })
                .collect()
        });
        let unoriented = matches!(sections, All | Unoriented).then(|| {
            table
                .unoriented()
                .iter()
                .map(|u| UnorientedRecord {
                    name: u.name.to_string(),
                    canonical: u.class.canonical().clone(),
                    forward: table.oriented()[u.plus].name.to_string(),
                    backward: u.minus.map(|i| table.oriented()[i].name.to_string()),
                })
                .collect()
        });
        TableDocument {
            n: table.n(),
            counts: table.counts(),
            lp_codes: if sections == Lp { lp_codes } else { None },
            minimal_codes: matches!(sections, All | Minimal)
                .then(|| table.minimal_codes().to_vec()),
            oriented_classes: oriented,
            unoriented_classes: unoriented,
        }
    }
}
