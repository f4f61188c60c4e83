//! TOML model files.

use std::ops::Range;
use std::path::Path;

use lgcy::model::{GroupElement, LGModel, SymmetryGroup, DEFAULT_GROUP_CAP};
use serde::Deserialize;
use sha2::{Digest, Sha256};
use toml::Spanned;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    name: Option<String>,
    weights: Spanned<Vec<u32>>,
    degree: Spanned<u32>,
    #[serde(default)]
    group: RawGroup,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    #[serde(default)]
    generators: Vec<Spanned<Vec<u32>>>,
}

#[derive(Debug, Default, Deserialize, Clone)]
#[serde(deny_unknown_fields)]
pub struct RawOptions {
    pub order: Option<u32>,
    pub precision: Option<u32>,
    pub l_range: Option<[i64; 2]>,
    pub group_cap: Option<usize>,
}

/// A parsed and validated model file.
pub struct ModelFile {
    pub name: String,
    pub group: SymmetryGroup,
    pub options: RawOptions,
}

/// A diagnostic anchored to a line of the source file.
#[derive(Debug)]
pub struct Diagnostic(pub String);

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn line_of(src: &str, span: Range<usize>) -> usize {
    src[..span.start.min(src.len())].matches('\n').count() + 1
}

impl ModelFile {
    pub fn load(path: &Path) -> Result<ModelFile, Diagnostic> {
        let src = std::fs::read_to_string(path).map_err(|e| Diagnostic(format!("{}: {e}", path.display())))?;
        Self::parse(&src, &path.display().to_string())
    }

    pub fn parse(src: &str, origin: &str) -> Result<ModelFile, Diagnostic> {
        let raw: RawModel = toml::from_str(src).map_err(|e| {
            let line = e.span().map(|s| line_of(src, s)).unwrap_or(0);
            Diagnostic(format!("{origin}:{line}: {}", e.message()))
        })?;
        let at = |span: Range<usize>, msg: String| Diagnostic(format!("{origin}:{}: {msg}", line_of(src, span)));
        let model = LGModel::new(raw.weights.get_ref().clone(), *raw.degree.get_ref()).map_err(|e| at(raw.weights.span(), e.to_string()))?;
        let mut gens = Vec::new();
        for g in &raw.group.generators {
            let el = GroupElement(g.get_ref().clone());
            model.check_element(&el).map_err(|e| at(g.span(), e.to_string()))?;
            gens.push(el);
        }
        let cap = raw.options.group_cap.unwrap_or(DEFAULT_GROUP_CAP);
        let group = SymmetryGroup::closure_with_cap(&model, &gens, cap).map_err(|e| {
            let span = raw.group.generators.first().map(|g| g.span()).unwrap_or(raw.weights.span());
            at(span, e.to_string())
        })?;
        Ok(ModelFile { name: raw.name.unwrap_or_else(|| origin.to_string()), group, options: raw.options })
    }

    /// The baseline quintic with `G = ⟨j⟩`.
    pub fn default_quintic() -> ModelFile {
        let group = SymmetryGroup::closure(&LGModel::quintic(), &[]).expect("quintic is valid");
        ModelFile { name: "quintic".into(), group, options: RawOptions::default() }
    }

    /// SHA-256 of the canonical serialization: weights, degree, sorted group elements.
    pub fn fingerprint(&self) -> String {
        let model = self.group.model();
        let mut elements: Vec<Vec<u32>> = self.group.elements().iter().map(|g| g.0.clone()).collect();
        elements.sort();
        let canon = serde_json::json!({
            "weights": model.weights(),
            "degree": model.degree(),
            "elements": elements,
        });
        let digest = Sha256::digest(canon.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_m3() {
        let src = "weights = [1,1,1,1,1]\ndegree = 5\n[group]\ngenerators = [[0,1,4,0,0]]\n";
        let m = ModelFile::parse(src, "m3").unwrap();
        assert_eq!(m.group.order(), 25);
    }

    #[test]
    fn bad_generator_is_line_anchored() {
        let src = "weights = [1,1,1,1,1]\ndegree = 5\n\n[group]\ngenerators = [[0,1,7,0,0]]\n";
        let err = ModelFile::parse(src, "bad.toml").err().unwrap();
        assert!(err.0.starts_with("bad.toml:5:"), "{}", err.0);
    }

    #[test]
    fn syntax_error_is_line_anchored() {
        let src = "weights = [1,1,1,1,1]\ndegree = \n";
        let err = ModelFile::parse(src, "x").err().unwrap();
        assert!(err.0.starts_with("x:2:"), "{}", err.0);
    }

    #[test]
    fn fingerprint_ignores_generator_choice() {
        let a = ModelFile::parse("weights = [1,1,1,1,1]\ndegree = 5\n[group]\ngenerators = [[0,1,4,0,0]]\n", "a").unwrap();
        let b = ModelFile::parse("weights = [1,1,1,1,1]\ndegree = 5\n[group]\ngenerators = [[0,2,3,0,0]]\n", "b").unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), ModelFile::default_quintic().fingerprint());
    }
}
