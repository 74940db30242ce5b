//! Optional TOML configuration. Command-line flags win over the file.

use std::path::Path;

use anyhow::Context;
use serde::Deserialize;
use witnessgate::groebner::GroebnerCaps;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(default)]
    groebner: GroebnerSection,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroebnerSection {
    max_pairs: Option<usize>,
    max_terms: Option<usize>,
}

pub fn load_caps(path: Option<&Path>, max_pairs: Option<usize>, max_terms: Option<usize>) -> anyhow::Result<GroebnerCaps> {
    let file = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            toml::from_str::<FileConfig>(&text).with_context(|| format!("parsing {}", p.display()))?
        }
        None => FileConfig::default(),
    };
    let d = GroebnerCaps::default();
    Ok(GroebnerCaps {
        max_pairs: max_pairs.or(file.groebner.max_pairs).unwrap_or(d.max_pairs),
        max_terms: max_terms.or(file.groebner.max_terms).unwrap_or(d.max_terms),
    })
}
