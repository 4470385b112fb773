//! JSON interchange documents.
//!
//! Every rational is a string in canonical form (`p` or `p/q`, reduced,
//! `-` only for negatives). Documents are written with a fixed layout:
//! two-space indentation, innermost arrays on one line, trailing newline.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::TwoTermAlgebra;
use crate::error::Error;
use crate::exactla::{format_rational, parse_rational, Matrix, Rational, Tensor};
use crate::lie::LieAlgebra;
use crate::morphism::Morphism;

pub const FORMAT_VERSION: &str = "1";

type Rows = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format_version: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub dims: [usize; 2],
    pub d: Rows,
    pub b00: Vec<Rows>,
    pub b01: Vec<Rows>,
    pub jac: Vec<Vec<Rows>>,
}

/// An algebra given inline or by a path relative to the referring document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(Box<AlgebraDocument>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    pub format_version: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<AlgebraRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<AlgebraRef>,
    pub phi0: Rows,
    pub phi1: Rows,
    #[serde(rename = "Phi")]
    pub big_phi: Vec<Rows>,
}

/// `(chi, fU, tV)` for isomorphism certification, in normal-form bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapsDocument {
    pub format_version: String,
    pub kind: String,
    pub chi: Rows,
    #[serde(rename = "fU")]
    pub f_u: Rows,
    #[serde(rename = "tV")]
    pub t_v: Rows,
}

/// A Lie algebra by structure constants `brackets[i][j][k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieDocument {
    pub format_version: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub brackets: Vec<Rows>,
}

fn check_header(version: &str, kind: &str, expected: &str) -> Result<(), Error> {
    if version != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format_version '{version}'")));
    }
    if kind != expected {
        return Err(Error::Parse(format!("expected a document of kind '{expected}', found '{kind}'")));
    }
    Ok(())
}

fn shape_error(field: &str, path: &[usize], expected: usize, found: usize) -> Error {
    let at: Vec<String> = path.iter().map(usize::to_string).collect();
    Error::Parse(format!(
        "{field}[{}] has length {found}, expected {expected}",
        at.join("][")
    ))
}

fn parse_row(field: &str, path: &[usize], row: &[String], len: usize, out: &mut Vec<Rational>) -> Result<(), Error> {
    if row.len() != len {
        return Err(shape_error(field, path, len, row.len()));
    }
    for (i, s) in row.iter().enumerate() {
        let value = parse_rational(s).map_err(|_| {
            let mut at: Vec<String> = path.iter().map(usize::to_string).collect();
            at.push(i.to_string());
            Error::Parse(format!("{field}[{}]: invalid rational '{s}'", at.join("][")))
        })?;
        out.push(value);
    }
    Ok(())
}

/// Parses an `rows × cols` matrix; an empty list is accepted for zero rows.
pub fn parse_matrix(field: &str, rows: &Rows, shape: (usize, usize)) -> Result<Matrix, Error> {
    if rows.len() != shape.0 {
        return Err(shape_error(field, &[], shape.0, rows.len()));
    }
    let mut data = Vec::with_capacity(shape.0 * shape.1);
    for (i, r) in rows.iter().enumerate() {
        parse_row(field, &[i], r, shape.1, &mut data)?;
    }
    Ok(Matrix::new(shape.0, shape.1, data))
}

/// A matrix whose column count is read from the first row (or `cols_if_empty`).
pub fn parse_matrix_inferred(field: &str, rows: &Rows, cols_if_empty: usize) -> Result<Matrix, Error> {
    let cols = rows.first().map_or(cols_if_empty, Vec::len);
    parse_matrix(field, rows, (rows.len(), cols))
}

fn parse_tensor3(field: &str, t: &[Rows], shape: [usize; 3]) -> Result<Tensor, Error> {
    if t.len() != shape[0] {
        return Err(shape_error(field, &[], shape[0], t.len()));
    }
    let mut data = Vec::new();
    for (i, slab) in t.iter().enumerate() {
        if slab.len() != shape[1] {
            return Err(shape_error(field, &[i], shape[1], slab.len()));
        }
        for (j, row) in slab.iter().enumerate() {
            parse_row(field, &[i, j], row, shape[2], &mut data)?;
        }
    }
    Ok(Tensor::from_data(&shape, data))
}

fn parse_tensor4(field: &str, t: &[Vec<Rows>], shape: [usize; 4]) -> Result<Tensor, Error> {
    if t.len() != shape[0] {
        return Err(shape_error(field, &[], shape[0], t.len()));
    }
    let mut data = Vec::new();
    for (i, cube) in t.iter().enumerate() {
        if cube.len() != shape[1] {
            return Err(shape_error(field, &[i], shape[1], cube.len()));
        }
        for (j, slab) in cube.iter().enumerate() {
            if slab.len() != shape[2] {
                return Err(shape_error(field, &[i, j], shape[2], slab.len()));
            }
            for (k, row) in slab.iter().enumerate() {
                parse_row(field, &[i, j, k], row, shape[3], &mut data)?;
            }
        }
    }
    Ok(Tensor::from_data(&shape, data))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn matrix_rows(m: &Matrix) -> Rows {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn tensor3_rows(t: &Tensor) -> Vec<Rows> {
    let s = t.shape();
    (0..s[0])
        .map(|i| (0..s[1]).map(|j| strings(t.fiber(&[i, j]))).collect())
        .collect()
}

fn tensor4_rows(t: &Tensor) -> Vec<Vec<Rows>> {
    let s = t.shape();
    (0..s[0])
        .map(|i| {
            (0..s[1])
                .map(|j| (0..s[2]).map(|k| strings(t.fiber(&[i, j, k]))).collect())
                .collect()
        })
        .collect()
}

impl AlgebraDocument {
    pub fn from_algebra(l: &TwoTermAlgebra, name: Option<String>, provenance: Option<String>) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: "algebra".into(),
            name,
            provenance,
            dims: [l.n0(), l.n1()],
            d: matrix_rows(l.d()),
            b00: tensor3_rows(l.b00()),
            b01: tensor3_rows(l.b01()),
            jac: tensor4_rows(l.jac()),
        }
    }

    /// Parses the tensors; antisymmetry is not checked here.
    pub fn to_algebra(&self) -> Result<TwoTermAlgebra, Error> {
        check_header(&self.format_version, &self.kind, "algebra")?;
        let [n0, n1] = self.dims;
        let d = parse_matrix("d", &self.d, (n0, n1))?;
        let b00 = parse_tensor3("b00", &self.b00, [n0, n0, n0])?;
        let b01 = parse_tensor3("b01", &self.b01, [n0, n1, n1])?;
        let jac = parse_tensor4("jac", &self.jac, [n0, n0, n0, n1])?;
        TwoTermAlgebra::new(d, b00, b01, jac)
    }
}

impl MorphismDocument {
    pub fn from_morphism(m: &Morphism) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: "morphism".into(),
            source: Some(AlgebraRef::Inline(Box::new(AlgebraDocument::from_algebra(m.source(), None, None)))),
            target: Some(AlgebraRef::Inline(Box::new(AlgebraDocument::from_algebra(m.target(), None, None)))),
            phi0: matrix_rows(m.phi0()),
            phi1: matrix_rows(m.phi1()),
            big_phi: tensor3_rows(m.big_phi()),
        }
    }

    /// The raw maps `(phi0, phi1, Φ)` for algebras of the given dimensions.
    pub fn maps(&self, source: (usize, usize), target: (usize, usize)) -> Result<(Matrix, Matrix, Tensor), Error> {
        check_header(&self.format_version, &self.kind, "morphism")?;
        let phi0 = parse_matrix("phi0", &self.phi0, (target.0, source.0))?;
        let phi1 = parse_matrix("phi1", &self.phi1, (target.1, source.1))?;
        let big_phi = parse_tensor3("Phi", &self.big_phi, [source.0, source.0, target.1])?;
        Ok((phi0, phi1, big_phi))
    }

    /// Resolves source and target (paths relative to `base`) and builds the morphism.
    pub fn to_morphism(&self, base: &Path) -> Result<Morphism, Error> {
        let resolve = |r: &Option<AlgebraRef>, role: &str| -> Result<TwoTermAlgebra, Error> {
            match r {
                None => Err(Error::Parse(format!("morphism document has no {role}"))),
                Some(AlgebraRef::Inline(doc)) => doc.to_algebra(),
                Some(AlgebraRef::Path(p)) => read_algebra(&base.join(p)),
            }
        };
        let source = resolve(&self.source, "source")?;
        let target = resolve(&self.target, "target")?;
        let (phi0, phi1, big_phi) = self.maps((source.n0(), source.n1()), (target.n0(), target.n1()))?;
        Morphism::new(Arc::new(source), Arc::new(target), phi0, phi1, big_phi)
    }
}

impl MapsDocument {
    pub fn new(chi: &Matrix, f_u: &Matrix, t_v: &Matrix) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: "maps".into(),
            chi: matrix_rows(chi),
            f_u: matrix_rows(f_u),
            t_v: matrix_rows(t_v),
        }
    }

    /// `(chi, fU, tV)`; empty lists are read as matrices with zero rows and
    /// the given column counts `(dim g, dim U, dim V)` of the source.
    pub fn maps(&self, source_dims: (usize, usize, usize)) -> Result<(Matrix, Matrix, Matrix), Error> {
        check_header(&self.format_version, &self.kind, "maps")?;
        Ok((
            parse_matrix_inferred("chi", &self.chi, source_dims.0)?,
            parse_matrix_inferred("fU", &self.f_u, source_dims.1)?,
            parse_matrix_inferred("tV", &self.t_v, source_dims.2)?,
        ))
    }
}

impl LieDocument {
    pub fn from_lie(g: &LieAlgebra, name: Option<String>) -> Self {
        Self {
            format_version: FORMAT_VERSION.into(),
            kind: "lie".into(),
            name,
            dim: g.dim(),
            brackets: tensor3_rows(g.structure_constants()),
        }
    }

    pub fn to_lie(&self) -> Result<LieAlgebra, Error> {
        check_header(&self.format_version, &self.kind, "lie")?;
        let n = self.dim;
        let sc = parse_tensor3("brackets", &self.brackets, [n, n, n])?;
        LieAlgebra::new(sc)
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            let n = map.len();
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str("  ");
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if i + 1 < n {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            let n = items.len();
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                out.push_str("  ");
                write_value(item, indent + 1, out);
                if i + 1 < n {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Canonical text of any document.
pub fn to_canonical_string<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn read_text(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_document<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{origin}: {e}")))
}

pub fn read_document<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Error> {
    parse_document(&read_text(path)?, &path.display().to_string())
}

pub fn read_algebra(path: &Path) -> Result<TwoTermAlgebra, Error> {
    read_document::<AlgebraDocument>(path)?.to_algebra()
}

pub fn read_morphism(path: &Path) -> Result<Morphism, Error> {
    let base: PathBuf = path.parent().map(Path::to_path_buf).unwrap_or_default();
    read_document::<MorphismDocument>(path)?.to_morphism(&base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{quaternion_example, Quaternion};

    #[test]
    fn algebra_round_trip() {
        let l = quaternion_example(&Quaternion::parse("1/2+2i-3j+5k").unwrap());
        let doc = AlgebraDocument::from_algebra(&l, Some("q".into()), None);
        let text = to_canonical_string(&doc);
        let back: AlgebraDocument = parse_document(&text, "test").unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_algebra().unwrap(), l);
        assert_eq!(to_canonical_string(&back), text);
        assert!(text.ends_with("}\n"));
        assert!(text.contains(r#"["0", "1", "0", "0"]"#));
    }

    #[test]
    fn non_canonical_input_is_canonicalized() {
        let text = r#"{"format_version":"1","kind":"algebra","dims":[1,1],
            "d":[["2/4"]],"b00":[[["0"]]],"b01":[[["+3"]]],"jac":[[[["-0"]]]]}"#;
        let doc: AlgebraDocument = parse_document(text, "t").unwrap();
        let l = doc.to_algebra().unwrap();
        let canon = AlgebraDocument::from_algebra(&l, None, None);
        assert_eq!(canon.d, vec![vec!["1/2".to_string()]]);
        assert_eq!(canon.b01[0][0], vec!["3".to_string()]);
        assert_eq!(canon.jac[0][0][0], vec!["0".to_string()]);
    }

    #[test]
    fn shape_and_value_errors_are_located() {
        let text = r#"{"format_version":"1","kind":"algebra","dims":[1,1],
            "d":[["1"]],"b00":[[["0"]]],"b01":[[["x"]]],"jac":[[[["0"]]]]}"#;
        let doc: AlgebraDocument = parse_document(text, "t").unwrap();
        let err = doc.to_algebra().unwrap_err().to_string();
        assert!(err.contains("b01[0][0][0]"), "{err}");
        let text = r#"{"format_version":"1","kind":"algebra","dims":[1,1],
            "d":[["1","2"]],"b00":[[["0"]]],"b01":[[["0"]]],"jac":[[[["0"]]]]}"#;
        let doc: AlgebraDocument = parse_document(text, "t").unwrap();
        assert!(doc.to_algebra().unwrap_err().to_string().contains("d[0]"));
        let text = r#"{"format_version":"2","kind":"algebra","dims":[0,0],"d":[],"b00":[],"b01":[],"jac":[]}"#;
        let doc: AlgebraDocument = parse_document(text, "t").unwrap();
        assert!(doc.to_algebra().is_err());
    }

    #[test]
    fn morphism_round_trip() {
        let m = crate::builders::quaternion_automorphism(&Quaternion::from_i64(1, 2, 3, 5)).unwrap();
        let doc = MorphismDocument::from_morphism(&m);
        let text = to_canonical_string(&doc);
        let back: MorphismDocument = parse_document(&text, "t").unwrap();
        assert_eq!(back.to_morphism(Path::new(".")).unwrap(), m);
        assert_eq!(to_canonical_string(&back), text);
    }
}
