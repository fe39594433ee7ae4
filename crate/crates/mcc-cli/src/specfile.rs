//! JSON code-spec files.
//!
//! ```json
//! {
//!   "field": { "p": 2, "m": 1 },
//!   "rho": [7],
//!   "generators": ["1 + x1 + x1^3"]
//! }
//! ```
//!
//! `field.m` defaults to 1; `field.modulus` (low degree first, monic) is
//! required for extensions without a built-in modulus. Generators use the
//! textual polynomial format.

use std::path::Path;

use serde::Deserialize;

use mcc_core::gf::FieldSpec;
use mcc_core::ideal::Code;
use mcc_core::qring::{RingSpec, DEFAULT_N_CAP};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    field: FieldSection,
    rho: Vec<u64>,
    generators: Vec<String>,
}

fn default_m() -> u32 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    p: u64,
    #[serde(default = "default_m")]
    m: u32,
    #[serde(default)]
    modulus: Option<Vec<u64>>,
}

/// Load and validate a spec file. `n_cap` overrides the default ring length
/// cap. All failures are input errors with a path-prefixed message.
pub fn load_code(path: &Path, n_cap: Option<usize>) -> Result<Code, String> {
    let display = path.display();
    let raw = std::fs::read_to_string(path).map_err(|e| format!("{display}: {e}"))?;
    let parsed: SpecFile =
        serde_json::from_str(&raw).map_err(|e| format!("{display}: {e}"))?;
    let field = FieldSpec::new(parsed.field.p, parsed.field.m, parsed.field.modulus.as_deref())
        .map_err(|e| format!("{display}: field: {e}"))?;
    let spec = RingSpec::with_cap(field, &parsed.rho, n_cap.unwrap_or(DEFAULT_N_CAP))
        .map_err(|e| format!("{display}: ring: {e}"))?;
    let mut generators = Vec::with_capacity(parsed.generators.len());
    for (i, text) in parsed.generators.iter().enumerate() {
        let g = spec
            .parse_polynomial(text)
            .map_err(|e| format!("{display}: generators[{i}]: {e}"))?;
        generators.push(g);
    }
    Code::new(spec, generators).map_err(|e| format!("{display}: {e}"))
}
