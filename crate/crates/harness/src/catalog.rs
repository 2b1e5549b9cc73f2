//! The built-in group catalog.

use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;
use weakcomm_core::Presentation;

const CATALOG_TOML: &str = include_str!("../catalog.toml");

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the literature.
    Published,
    /// Forced by the definitions.
    Trivial,
    /// Computed by hand or by an independent oracle.
    Derived,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Published => "published",
            Source::Trivial => "trivial",
            Source::Derived => "derived",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct Expectation {
    pub quantity: String,
    pub value: String,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub family: String,
    pub params: Vec<u64>,
    pub note: Option<String>,
    pub presentation: Presentation,
    pub expect: Vec<Expectation>,
}

impl CatalogEntry {
    pub fn expectation(&self, quantity: &str) -> Option<&Expectation> {
        self.expect.iter().find(|e| e.quantity == quantity)
    }

    /// The expected order of the group, if recorded.
    pub fn order(&self) -> Option<u64> {
        self.expectation("order").and_then(|e| e.value.parse().ok())
    }

    pub fn is_abelian_family(&self) -> bool {
        matches!(self.family.as_str(), "trivial" | "cyclic" | "elem2" | "abelian")
    }
}

#[derive(Deserialize)]
struct RawCatalog {
    group: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    key: String,
    family: String,
    #[serde(default)]
    params: Vec<u64>,
    note: Option<String>,
    presentation: String,
    #[serde(default)]
    expect: Vec<Expectation>,
}

fn load() -> Vec<CatalogEntry> {
    let raw: RawCatalog = toml::from_str(CATALOG_TOML).expect("embedded catalog is valid TOML");
    raw.group
        .into_iter()
        .map(|r| CatalogEntry {
            presentation: Presentation::parse(&r.presentation)
                .unwrap_or_else(|e| panic!("catalog entry {}: {e}", r.key)),
            key: r.key,
            family: r.family,
            params: r.params,
            note: r.note,
            expect: r.expect,
        })
        .collect()
}

/// All catalog entries in file order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(load)
}

pub fn lookup(key: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.key == key)
}

/// Position of an entry in the catalog, used to order reports.
pub fn position(key: &str) -> Option<usize> {
    catalog().iter().position(|e| e.key == key)
}
