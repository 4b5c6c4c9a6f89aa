use crate::CatalogError;
use serde::{Deserialize, Serialize};

pub const EMBEDDED_CATALOG: &str = include_str!("../data/catalog.jsonl");
pub const CATALOG_ENV: &str = "MFSR_CATALOG";
pub const TABLES: [&str; 6] = ["1", "2", "11", "12", "22", "S"];
const SUPPORTED_VERSION: u64 = 1;

/// One printed table row (or parameter sub-row).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub id: String,
    pub table: String,
    /// DSL text; `{expr}` is replaced by the value of expr
    pub template: String,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
    pub rank: String,
    pub isotropy: String,
    #[serde(default)]
    pub wv: String,
    #[serde(default)]
    pub i: String,
    #[serde(default)]
    pub notes: String,
    /// factor indices (expressions) of the underlined sl(2)'s, Table S only
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub underlined: Vec<String>,
}

#[derive(Deserialize)]
struct Header {
    version: u64,
    format: String,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub version: u64,
    pub entries: Vec<TableEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| CatalogError::Format("empty catalog".into()))?;
        let header: Header =
            serde_json::from_str(first).map_err(|e| CatalogError::Format(format!("header line: {e}")))?;
        if header.format != "mfsr-catalog" {
            return Err(CatalogError::Format(format!("unknown format `{}`", header.format)));
        }
        if header.version > SUPPORTED_VERSION {
            return Err(CatalogError::Format(format!(
                "catalog version {} is newer than the supported version {SUPPORTED_VERSION}",
                header.version
            )));
        }
        let mut entries: Vec<TableEntry> = Vec::new();
        for (n, line) in lines {
            let e: TableEntry =
                serde_json::from_str(line).map_err(|err| CatalogError::Format(format!("line {}: {err}", n + 1)))?;
            if !TABLES.contains(&e.table.as_str()) {
                return Err(CatalogError::Format(format!("line {}: unknown table `{}`", n + 1, e.table)));
            }
            if entries.iter().any(|x| x.id == e.id) {
                return Err(CatalogError::Format(format!("line {}: duplicate id `{}`", n + 1, e.id)));
            }
            entries.push(e);
        }
        Ok(Catalog {
            version: header.version,
            entries,
        })
    }

    pub fn embedded() -> Catalog {
        Self::parse(EMBEDDED_CATALOG).expect("embedded catalog parses")
    }

    pub fn load(path: &std::path::Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io(path.display().to_string(), e))?;
        Self::parse(&text)
    }

    /// The file named by MFSR_CATALOG if set, else the embedded copy.
    pub fn from_env() -> Result<Catalog, CatalogError> {
        match std::env::var_os(CATALOG_ENV) {
            Some(p) if !p.is_empty() => Self::load(std::path::Path::new(&p)),
            _ => Ok(Self::embedded()),
        }
    }

    pub fn get(&self, id: &str) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn table(&self, t: &str) -> impl Iterator<Item = &TableEntry> + '_ {
        let t = t.to_string();
        self.entries.iter().filter(move |e| e.table == t)
    }
}
