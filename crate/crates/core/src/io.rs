//! JSON file formats for algebras and linear maps.
//!
//! Algebra files hold `{"dim", "labels", "brackets"}` where every bracket
//! entry is `[i, j, [[k, "p/q"], ...]]` with `i < j`; omitted pairs bracket
//! to zero. Map files are `{"dim", "matrix"}` with column `c` holding the
//! image of basis vector `c`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dercalc::LinearMap;
use crate::error::{Error, Result};
use crate::liecore::LieAlgebra;
use crate::scalar::Scalar;

/// `(i, j, [(k, c_ij^k), ...])`
pub type BracketEntry = (usize, usize, Vec<(usize, Scalar)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            labels: alg.labels().to_vec(),
            brackets: alg
                .structure_constants()
                .map(|(i, j, t)| (i, j, t.clone()))
                .collect(),
        }
    }

    /// Validates the file and builds the algebra. The Jacobi identity is
    /// checked unless `skip_jacobi` is set.
    pub fn into_algebra(self, name: &str, skip_jacobi: bool) -> Result<LieAlgebra> {
        if self.labels.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!(
                "dim is {} but {} labels are given",
                self.dim,
                self.labels.len()
            )));
        }
        let alg = LieAlgebra::new(name, self.labels, self.brackets)?;
        if !skip_jacobi {
            check_jacobi(&alg)?;
        }
        Ok(alg)
    }
}

pub fn check_jacobi(alg: &LieAlgebra) -> Result<()> {
    let bad = alg.jacobi_check();
    match bad.first() {
        None => Ok(()),
        Some(&(i, j, k)) => {
            let l = alg.labels();
            Err(Error::JacobiViolation {
                count: bad.len(),
                first: format!("{}, {}, {}", l[i], l[j], l[k]),
            })
        }
    }
}

pub fn algebra_to_json(alg: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(alg)).expect("algebra file serializes")
}

pub fn algebra_from_json(text: &str, name: &str, skip_jacobi: bool) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.into_algebra(name, skip_jacobi)
}

/// Loads an algebra file, naming the algebra after the file stem.
pub fn load_algebra(path: &Path, skip_jacobi: bool) -> Result<LieAlgebra> {
    let text = fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "algebra".to_string());
    algebra_from_json(&text, &name, skip_jacobi)
}

pub fn save_algebra(path: &Path, alg: &LieAlgebra) -> Result<()> {
    fs::write(path, algebra_to_json(alg) + "\n")?;
    Ok(())
}

pub fn load_map(path: &Path) -> Result<LinearMap> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn save_map(path: &Path, m: &LinearMap) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(m)? + "\n")?;
    Ok(())
}

/// Parses a comma-separated coordinate vector such as `1,0,-1/2`.
pub fn parse_vector(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(|t| t.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{build_schrodinger, build_sl2};

    #[test]
    fn algebra_round_trip() {
        for n in 1..=4 {
            let alg = build_schrodinger(n).unwrap();
            let back = algebra_from_json(&algebra_to_json(&alg), alg.name(), false).unwrap();
            assert_eq!(back, alg);
        }
    }

    #[test]
    fn literal_file() {
        let text = r#"{"dim": 3, "labels": ["e", "f", "h"],
            "brackets": [[0, 1, [[2, "1"]]], [0, 2, [[0, "-2"]]], [1, 2, [[1, "2"]]]]}"#;
        let alg = algebra_from_json(text, "sl2", false).unwrap();
        assert_eq!(alg, build_sl2());
    }

    #[test]
    fn rejects_bad_files() {
        let wrong_dim = r#"{"dim": 2, "labels": ["a", "b", "c"], "brackets": []}"#;
        assert!(matches!(
            algebra_from_json(wrong_dim, "x", false),
            Err(Error::InvalidAlgebra(_))
        ));
        let swapped = r#"{"dim": 2, "labels": ["a", "b"], "brackets": [[1, 0, [[0, "1"]]]]}"#;
        assert!(matches!(
            algebra_from_json(swapped, "x", false),
            Err(Error::InvalidAlgebra(_))
        ));
        let bad_scalar = r#"{"dim": 2, "labels": ["a", "b"], "brackets": [[0, 1, [[0, "1/0"]]]]}"#;
        assert!(matches!(
            algebra_from_json(bad_scalar, "x", false),
            Err(Error::Json(_))
        ));
        // [a,b] = c, [b,c] = b violates Jacobi
        let non_lie = r#"{"dim": 3, "labels": ["a", "b", "c"],
            "brackets": [[0, 1, [[2, "1"]]], [1, 2, [[1, "1"]]]]}"#;
        assert!(matches!(
            algebra_from_json(non_lie, "x", false),
            Err(Error::JacobiViolation { .. })
        ));
        assert!(algebra_from_json(non_lie, "x", true).is_ok());
    }

    #[test]
    fn vectors() {
        assert_eq!(
            parse_vector("1, -1/2,0").unwrap(),
            vec![Scalar::one(), Scalar::frac(-1, 2), Scalar::zero()]
        );
        assert!(parse_vector("1,,2").is_err());
    }
}
