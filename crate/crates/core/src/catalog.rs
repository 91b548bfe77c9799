//! Known arrays from the classification, with their status and a short note.
//!
//! Notes marked "external citation" record results that rest on published
//! tables or nonexistence theorems; they are reported, not recomputed.

use std::fmt;

use serde::Serialize;

use crate::array::IntersectionArray;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// A non-geometric graph with this array exists.
    Exists,
    Nonexistent,
    /// Existence is unknown.
    Open,
}

/// How a claim in the catalog is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backing {
    /// Verified in this crate (construction or computation).
    Computed,
    ExternalCitation,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub name: &'static str,
    pub array: &'static str,
    pub status: Status,
    pub backing: Backing,
    pub note: &'static str,
}

impl Entry {
    pub fn intersection_array(&self) -> IntersectionArray {
        self.array.parse().expect("catalog arrays are well formed")
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let backing = match self.backing {
            Backing::Computed => "computed",
            Backing::ExternalCitation => "external citation",
        };
        write!(f, "{}: {} [{backing}]", self.name, self.note)
    }
}

use Backing::{Computed, ExternalCitation};
use Status::{Exists, Nonexistent, Open};

const fn e(name: &'static str, array: &'static str, status: Status, backing: Backing, note: &'static str) -> Entry {
    Entry {
        name,
        array,
        status,
        backing,
        note,
    }
}

/// Non-geometric graphs of diameter at least 3 with smallest eigenvalue at
/// least -3.
pub const CLASSIFIED: &[Entry] = &[
    e("odd-4", "{4,3,3;1,1,2}", Exists, Computed, "Odd graph O4, built as Kneser(7,3)"),
    e("sylvester", "{5,4,2;1,1,4}", Exists, Computed, "Sylvester graph, derived from Hoffman-Singleton"),
    e(
        "hs-second-subconstituent",
        "{6,5,1;1,1,6}",
        Exists,
        Computed,
        "second subconstituent of the Hoffman-Singleton graph",
    ),
    e("perkel", "{6,5,2;1,1,3}", Exists, ExternalCitation, "Perkel graph"),
    e("symplectic-7-cover-k9", "{8,6,1;1,1,8}", Exists, ExternalCitation, "symplectic 7-cover of K9"),
    e("coxeter", "{3,2,2,1;1,1,1,2}", Exists, Computed, "Coxeter graph"),
    e("dodecahedron", "{3,2,1,1,1;1,1,1,2,3}", Exists, Computed, "dodecahedron"),
    e("biggs-smith", "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}", Exists, ExternalCitation, "Biggs-Smith graph"),
    e("wells", "{5,4,1,1;1,1,4,5}", Exists, ExternalCitation, "Wells graph"),
    e("icosahedron", "{5,2,1;1,2,5}", Exists, Computed, "icosahedron, smallest eigenvalue -√5"),
    e("doro", "{10,6,4;1,2,5}", Exists, ExternalCitation, "Doro graph"),
    e("halved-6-cube", "{15,6,1;1,6,15}", Exists, Computed, "halved 6-cube"),
    e("gosset", "{27,10,1;1,10,27}", Exists, Computed, "Gosset graph"),
    e("halved-7-cube", "{21,10,3;1,6,15}", Exists, Computed, "halved 7-cube"),
    e("klein", "{7,4,1;1,2,7}", Exists, ExternalCitation, "Klein graph"),
    e(
        "srg40-spread-covers",
        "{9,6,1;1,2,9}",
        Exists,
        ExternalCitation,
        "exactly two non-geometric examples up to isomorphism, from spreads of an srg(40,12,2,4)",
    ),
    e("doob", "{9,6,3;1,2,3}", Exists, Computed, "Doob graph (Shrikhande x K4); theta1 = b1 - 1"),
    e(
        "k16-6-cover",
        "{15,10,1;1,2,15}",
        Exists,
        ExternalCitation,
        "non-geometric antipodal 6-cover of K16 exists",
    ),
    e(
        "putative-18",
        "{18,12,1;1,2,18}",
        Open,
        ExternalCitation,
        "putative; depends on the unfinished classification of srg(133,24,5,4)",
    ),
];

/// Arrays surviving the diameter-3 search that are ruled out.
pub const ELIMINATED: &[Entry] = &[
    e("search-c2-one", "{6,4,1;1,1,6}", Nonexistent, Computed, "c2 = 1, excluded by the c2 = 1 analysis"),
    e("search-15-8", "{15,8,1;1,4,15}", Nonexistent, Computed, "divisibility: m1 = 12 < 15 and 6 does not divide 8"),
    e("search-27-16", "{27,16,1;1,4,27}", Nonexistent, ExternalCitation, "antipodal 5-cover multiplicity bound"),
    e("search-39-24", "{39,24,1;1,4,39}", Nonexistent, ExternalCitation, "ruled out by a published cover result"),
    e(
        "search-45-26",
        "{45,26,3;1,6,39}",
        Nonexistent,
        ExternalCitation,
        "primitive on 256 vertices, absent from the feasibility tables",
    ),
    e("search-45-24-1", "{45,24,1;1,8,45}", Nonexistent, Computed, "divisibility: 16 does not divide 24"),
    e("search-45-24-2", "{45,24,2;1,10,36}", Nonexistent, Computed, "divisibility elimination"),
    e("search-51-30", "{51,30,1;1,6,51}", Nonexistent, Computed, "divisibility elimination"),
    e("search-60-35", "{60,35,9;1,6,42}", Nonexistent, Computed, "divisibility elimination"),
    e("search-87-48", "{87,48,1;1,12,87}", Nonexistent, Computed, "divisibility elimination"),
    e("search-207-120", "{207,120,1;1,20,207}", Nonexistent, Computed, "divisibility elimination"),
];

pub fn annotation(ia: &IntersectionArray) -> Option<&'static Entry> {
    CLASSIFIED
        .iter()
        .chain(ELIMINATED)
        .find(|e| e.intersection_array() == *ia)
}

pub fn by_name(name: &str) -> Option<&'static Entry> {
    CLASSIFIED.iter().chain(ELIMINATED).find(|e| e.name == name)
}
