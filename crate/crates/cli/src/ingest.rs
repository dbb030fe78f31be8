//! JSON ingestion: table algebras and exact period points, with
//! rationals written as "p/q" strings.

use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use siegel_core::exact::{parse_rat, AlgebraElement, AlgebraSpec, Rat};
use siegel_core::humbert::SiegelPointExact;

#[derive(Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    /// table[i][j] = coordinates of e_i * e_j, each a "p/q" string.
    pub table: Vec<Vec<Vec<String>>>,
    /// complex embedding of each basis element as [re, im].
    pub embedding: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
pub struct TauFile {
    pub algebra: AlgebraFile,
    pub tau1: Vec<String>,
    pub tau12: Vec<String>,
    pub tau2: Vec<String>,
}

fn parse_rat_str(s: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| anyhow!("cannot parse rational {s:?}"))
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<Arc<AlgebraSpec>> {
    if f.labels.len() != f.dim {
        bail!("algebra dim {} does not match {} labels", f.dim, f.labels.len());
    }
    let mut table = Vec::with_capacity(f.dim);
    for row in &f.table {
        let mut out_row = Vec::with_capacity(f.dim);
        for cell in row {
            let coords: Result<Vec<Rat>> = cell.iter().map(|s| parse_rat_str(s)).collect();
            out_row.push(coords?);
        }
        table.push(out_row);
    }
    let embedding = f.embedding.iter().map(|&[re, im]| (re, im)).collect();
    AlgebraSpec::new(f.labels.clone(), table, embedding)
        .map_err(|e| anyhow!("invalid algebra: {e}"))
}

pub fn element(alg: &Arc<AlgebraSpec>, coords: &[String]) -> Result<AlgebraElement> {
    if coords.len() != alg.dim() {
        bail!("coordinate vector length {} != algebra dim {}", coords.len(), alg.dim());
    }
    let coords: Result<Vec<Rat>> = coords.iter().map(|s| parse_rat_str(s)).collect();
    Ok(AlgebraElement::new(alg.clone(), coords?))
}

pub fn load_tau(path: &Path) -> Result<SiegelPointExact> {
    let raw = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file: TauFile = serde_json::from_str(&raw)
        .with_context(|| format!("parsing {}", path.display()))?;
    let alg = algebra_from_file(&file.algebra)?;
    let tau1 = element(&alg, &file.tau1)?;
    let tau12 = element(&alg, &file.tau12)?;
    let tau2 = element(&alg, &file.tau2)?;
    SiegelPointExact::new(tau1, tau12, tau2).map_err(|e| anyhow!("invalid period point: {e}"))
}

/// Parse a comma-separated integer five-tuple like "1,0,-1,0,0".
pub fn parse_five(s: &str) -> Result<[i64; 5]> {
    let parts: Vec<&str> = s.split(',').map(|p| p.trim()).collect();
    if parts.len() != 5 {
        bail!("expected five comma-separated integers, got {s:?}");
    }
    let mut out = [0i64; 5];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p.parse().with_context(|| format!("parsing {p:?}"))?;
    }
    Ok(out)
}

/// Parse a K-type: either "5x1" (second factor the trivial SO(2)
/// representation) or "5,-2" (dimension, character index).
pub fn parse_ktype(s: &str) -> Result<siegel_core::fock::KType> {
    if let Some((d, rest)) = s.split_once('x') {
        let dim: usize = d.trim().parse().context("SO(3) dimension")?;
        if rest.trim() != "1" {
            bail!("the AxB form only supports the trivial SO(2) factor; use \"d,n\" instead");
        }
        if dim.is_multiple_of(2) {
            bail!("SO(3) dimension must be odd");
        }
        return Ok(siegel_core::fock::KType::new(dim, 0));
    }
    if let Some((d, n)) = s.split_once(',') {
        let dim: usize = d.trim().parse().context("SO(3) dimension")?;
        let ch: i64 = n.trim().parse().context("SO(2) character")?;
        if dim.is_multiple_of(2) {
            bail!("SO(3) dimension must be odd");
        }
        return Ok(siegel_core::fock::KType::new(dim, ch));
    }
    bail!("cannot parse K-type {s:?}; use \"5x1\" or \"5,0\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_tuples_parse() {
        assert_eq!(parse_five("1,0,-1,0,0").unwrap(), [1, 0, -1, 0, 0]);
        assert_eq!(parse_five(" 2 , 3 , 4 , 5 , 6 ").unwrap(), [2, 3, 4, 5, 6]);
        assert!(parse_five("1,2,3").is_err());
        assert!(parse_five("a,b,c,d,e").is_err());
    }

    #[test]
    fn ktypes_parse() {
        let k = parse_ktype("5x1").unwrap();
        assert_eq!((k.so3_dim(), k.so2_char()), (5, 0));
        let k = parse_ktype("3,-2").unwrap();
        assert_eq!((k.so3_dim(), k.so2_char()), (3, -2));
        assert!(parse_ktype("4x1").is_err());
        assert!(parse_ktype("5x2").is_err());
        assert!(parse_ktype("five").is_err());
    }
}
