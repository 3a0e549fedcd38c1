//! The JSON instance format: `{"d": 12, "layers": [{"a": 0, "set": [0, 4, 8]}, ...]}`.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sumset_forge_core::LayeredSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayerDocument {
    pub a: usize,
    pub set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub d: usize,
    pub layers: Vec<LayerDocument>,
}

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed instance: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] sumset_forge_core::Error),
}

impl InstanceDocument {
    pub fn to_layered(&self) -> Result<LayeredSet, InstanceError> {
        let parts: Vec<(usize, Vec<usize>)> = self.layers.iter().map(|l| (l.a, l.set.clone())).collect();
        Ok(LayeredSet::from_parts(self.d, &parts)?)
    }

    pub fn from_layered(l: &LayeredSet) -> Self {
        let layers = l.layers().iter().map(|x| LayerDocument { a: x.a, set: x.set.to_vec() }).collect();
        Self { d: l.modulus(), layers }
    }
}

pub fn parse_instance(text: &str) -> Result<LayeredSet, InstanceError> {
    serde_json::from_str::<InstanceDocument>(text)?.to_layered()
}

pub fn load_instance(path: &Path) -> Result<LayeredSet, InstanceError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| InstanceError::Io { path: path.to_owned(), source })?;
    parse_instance(&text)
}
