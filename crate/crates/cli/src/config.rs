use std::path::PathBuf;

use dircat::exactlin::FieldSpec;

use crate::report::Format;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub field: Option<FieldSpec>,
    pub order: Option<String>,
    pub site: Option<String>,
    pub length_cap: Option<usize>,
    pub resolution_cap: usize,
    pub budget: u64,
    pub seed: u64,
    pub format: Format,
    /// Where `tilt` writes module files.
    pub out_dir: Option<PathBuf>,
    /// Replaces the bundled examples in `paper-suite`.
    pub data_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            inputs: Vec::new(),
            field: None,
            order: None,
            site: None,
            length_cap: None,
            resolution_cap: 12,
            budget: 1 << 20,
            seed: 0,
            format: Format::Text,
            out_dir: None,
            data_dir: None,
        }
    }
}

pub fn parse_field_spec(text: &str) -> Result<FieldSpec, String> {
    let spec = match text {
        "Q" | "q" => FieldSpec::Rationals,
        _ => {
            let p = text
                .strip_prefix('F')
                .or_else(|| text.strip_prefix('f'))
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| format!("unknown field `{text}`; use Q or F<p>"))?;
            FieldSpec::Prime(p)
        }
    };
    spec.validate().map_err(|e| e.to_string())
}
