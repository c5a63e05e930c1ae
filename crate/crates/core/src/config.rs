//! Caps and modulus overrides, read from a small `key = value` text file.
//!
//! ```text
//! # lines starting with '#' are comments
//! max_matrix_length = 100
//! max_enumeration = 4194304
//! max_relative_enumeration = 65536
//! modulus.2.4 = 1 0 0 1 1      # x^4 + x^3 + 1, lowest coefficient first
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::gf::{Field, GfError};
use crate::poly::{CyclicSpace, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: {source}")]
    Modulus { line: usize, source: GfError },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest length for which generator and parity-check matrices are built.
    pub max_matrix_length: usize,
    /// Largest number of search steps for an exact minimum distance.
    pub max_enumeration: u64,
    /// Same, for the distance outside a subcode (two walks per instance).
    pub max_relative_enumeration: u64,
    moduli: BTreeMap<(u64, u32), Vec<u32>>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_matrix_length: 100,
            max_enumeration: 1 << 22,
            max_relative_enumeration: 1 << 16,
            moduli: BTreeMap::new(),
        }
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T, ConfigError> {
    s.parse().map_err(|_| ConfigError::Syntax { line, msg: format!("`{s}` is not a valid number") })
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| ConfigError::Syntax { line, msg: "expected `key = value`".into() })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "max_matrix_length" => cfg.max_matrix_length = parse_num(value, line)?,
                "max_enumeration" => cfg.max_enumeration = parse_num(value, line)?,
                "max_relative_enumeration" => cfg.max_relative_enumeration = parse_num(value, line)?,
                _ => {
                    let parts: Vec<&str> = key.split('.').collect();
                    if parts.len() != 3 || parts[0] != "modulus" {
                        return Err(ConfigError::UnknownKey { line, key: key.to_string() });
                    }
                    let p: u64 = parse_num(parts[1], line)?;
                    let m: u32 = parse_num(parts[2], line)?;
                    let coeffs =
                        value.split_whitespace().map(|c| parse_num(c, line)).collect::<Result<Vec<u32>, _>>()?;
                    Field::with_modulus(p, m, &coeffs).map_err(|source| ConfigError::Modulus { line, source })?;
                    cfg.moduli.insert((p, m), coeffs);
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        Self::parse(&text)
    }

    pub fn set_modulus(&mut self, p: u64, m: u32, coeffs: Vec<u32>) -> Result<(), GfError> {
        Field::with_modulus(p, m, &coeffs)?;
        self.moduli.insert((p, m), coeffs);
        Ok(())
    }

    /// GF(p^m), honouring a modulus override if one is configured.
    pub fn field(&self, p: u64, m: u32) -> Result<Field, GfError> {
        match self.moduli.get(&(p, m)) {
            Some(c) => Field::with_modulus(p, m, c),
            None => Field::new(p, m),
        }
    }

    /// The splitting field for length-`n` cyclic codes over GF(q).
    pub fn space(&self, q: u64, n: usize) -> Result<CyclicSpace, PolyError> {
        let (p, m) = CyclicSpace::extension_for(q, n)?;
        CyclicSpace::with_field(q, n, self.field(p, m)?)
    }
}
