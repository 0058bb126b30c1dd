//! `key = value` run configuration.
//!
//! ```text
//! # resources, relative to this file
//! person_gazetteer = person.txt
//! location_gazetteer = location.txt
//! organization_gazetteer = organization.txt
//! wordlist = words.txt
//! months = months.txt
//! capitalization = off
//! expand_diacritics = on
//! pipeline_normalization = off
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::recognizer::ResourcePaths;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub resources: ResourcePaths,
    /// `None` leaves the choice to the command: on for `recognize`, off for `pipeline`.
    pub capitalization: Option<bool>,
    pub expand_diacritics: bool,
    pub pipeline_normalization: bool,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let content = fs::read_to_string(path).map_err(|source| Error::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new(""));
        RunConfig::parse(&content, path, base)
    }

    /// Parses config text; relative paths are resolved against `base`.
    pub fn parse(content: &str, path: &Path, base: &Path) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (i, raw) in content.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Config {
                path: path.to_path_buf(),
                line: line_no,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
            if value.is_empty() {
                return Err(err(format!("empty value for {key}")));
            }
            let file = || Some(base.join(value));
            let r = &mut cfg.resources;
            match key {
                "person_gazetteer" => r.person = file(),
                "location_gazetteer" => r.location = file(),
                "organization_gazetteer" => r.organization = file(),
                "wordlist" => r.wordlist = file(),
                "months" => r.months = file(),
                "currency" => r.currency = file(),
                "relative_days" => r.relative_days = file(),
                "weekdays" => r.weekdays = file(),
                "capitalization" => cfg.capitalization = Some(on_off(value).map_err(err)?),
                "expand_diacritics" => cfg.expand_diacritics = on_off(value).map_err(err)?,
                "pipeline_normalization" => {
                    cfg.pipeline_normalization = on_off(value).map_err(err)?
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn wordlist_path(&self) -> Option<&PathBuf> {
        self.resources.wordlist.as_ref()
    }
}

fn on_off(value: &str) -> Result<bool, String> {
    match value {
        "on" => Ok(true),
        "off" => Ok(false),
        v => Err(format!("expected on or off, got {v:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<RunConfig> {
        RunConfig::parse(text, Path::new("run.conf"), Path::new("/data"))
    }

    #[test]
    fn full_config() {
        let cfg = parse(
            "# comment\nperson_gazetteer = per.txt\nlocation_gazetteer=/abs/loc.txt\n\ncapitalization = off\nexpand_diacritics = on\n",
        )
        .unwrap();
        assert_eq!(cfg.resources.person, Some(PathBuf::from("/data/per.txt")));
        assert_eq!(cfg.resources.location, Some(PathBuf::from("/abs/loc.txt")));
        assert_eq!(cfg.capitalization, Some(false));
        assert!(cfg.expand_diacritics);
        assert!(!cfg.pipeline_normalization);
    }

    #[test]
    fn unknown_key_names_line() {
        let err = parse("wordlist = w.txt\ncolour = blue\n").unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("run.conf:2"));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn bad_values() {
        assert!(parse("capitalization = yes\n").is_err());
        assert!(parse("wordlist =\n").is_err());
        assert!(parse("just text\n").is_err());
    }
}
