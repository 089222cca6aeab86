//! The pattern manifest: a lossless JSON record of a `PatternSpec`.
//! Reading back a written manifest reproduces the spec field for field.

use serde::{Deserialize, Serialize};

use crate::colorwheel::{Hue, RybMix};
use crate::error::{Error, Result};
use crate::geom::Region;
use crate::pattern::{Element, Layer, LegibilityConstraints, PatternSpec, SizeScale};

pub const MANIFEST_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternManifest {
    pub version: String,
    pub source_hue: Hue,
    pub source_mix: RybMix,
    pub region: Region,
    pub layers: Vec<Layer>,
    pub scale: SizeScale,
    pub constraints: LegibilityConstraints,
    pub elements: Vec<Element>,
}

impl PatternManifest {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    pub fn into_spec(self) -> PatternSpec {
        PatternSpec {
            region: self.region,
            layers: self.layers,
            elements: self.elements,
            source_mix: self.source_mix,
            source_hue: self.source_hue,
            scale: self.scale,
            constraints: self.constraints,
        }
    }
}

pub fn write_manifest(spec: &PatternSpec) -> PatternManifest {
    PatternManifest {
        version: MANIFEST_VERSION.to_string(),
        source_hue: spec.source_hue,
        source_mix: spec.source_mix,
        region: spec.region.clone(),
        layers: spec.layers.clone(),
        scale: spec.scale,
        constraints: spec.constraints,
        elements: spec.elements.clone(),
    }
}

/// Parses a manifest document. The version gate runs before full decoding so
/// future-format documents fail with a version error, not a field error.
pub fn read_manifest(json: &str) -> Result<PatternSpec> {
    let value: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::MalformedManifest(e.to_string()))?;
    let version = value
        .get("version")
        .and_then(|v| v.as_str())
        .ok_or_else(|| Error::MalformedManifest("missing string field \"version\"".into()))?;
    if version != MANIFEST_VERSION {
        return Err(Error::ManifestVersionMismatch {
            found: version.to_string(),
            expected: MANIFEST_VERSION.to_string(),
        });
    }
    let manifest: PatternManifest = serde_json::from_value(value)
        .map_err(|e| Error::MalformedManifest(e.to_string()))?;
    Ok(manifest.into_spec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorwheel::Hue;
    use crate::pattern::synthesize_swatch;

    fn sample() -> PatternSpec {
        synthesize_swatch(
            &Hue::Orange.mix(),
            Region::rect(40.0, 40.0),
            &SizeScale::default(),
            &LegibilityConstraints::default(),
        )
        .unwrap()
    }

    #[test]
    fn manifest_round_trips_field_for_field() {
        let spec = sample();
        let json = write_manifest(&spec).to_json_string();
        let back = read_manifest(&json).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn unknown_version_is_rejected() {
        let spec = sample();
        let json = write_manifest(&spec)
            .to_json_string()
            .replacen("\"version\": \"1\"", "\"version\": \"99\"", 1);
        assert_eq!(
            read_manifest(&json),
            Err(Error::ManifestVersionMismatch {
                found: "99".into(),
                expected: "1".into()
            })
        );
    }

    #[test]
    fn truncated_document_reports_malformed() {
        let json = write_manifest(&sample()).to_json_string();
        let truncated = &json[..json.len() / 2];
        match read_manifest(truncated) {
            Err(Error::MalformedManifest(msg)) => {
                assert!(msg.contains("line"), "{msg}");
            }
            other => panic!("expected MalformedManifest, got {other:?}"),
        }
    }

    #[test]
    fn missing_field_reports_malformed() {
        let json = write_manifest(&sample())
            .to_json_string()
            .replacen("\"layers\"", "\"ignored\"", 1);
        assert!(matches!(read_manifest(&json), Err(Error::MalformedManifest(_))));
    }

    #[test]
    fn serialization_is_reproducible() {
        let spec = sample();
        assert_eq!(
            write_manifest(&spec).to_json_string(),
            write_manifest(&spec).to_json_string()
        );
    }
}
