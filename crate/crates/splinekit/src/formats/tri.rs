use std::fmt;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use splinekit_core::deltastar::{TRIANGLES, VERTICES};
use splinekit_core::exactla::Rational;
use splinekit_core::splinecore::Triangulation;

use super::{parse_rational, ParseError};

/// A coordinate given as a JSON integer or a rational string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coord(pub Rational);

impl Serialize for Coord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coord;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string such as \"-3/2\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coord, E> {
                Ok(Coord(Rational::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coord, E> {
                Ok(Coord(Rational::from_integer(v.into())))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coord, E> {
                parse_rational(v).map(Coord).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// `{"vertices": [[x, y], ...], "triangles": [[i, j, k], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDoc {
    pub vertices: Vec<[Coord; 2]>,
    pub triangles: Vec<[usize; 3]>,
}

impl TriangulationDoc {
    pub fn build(&self) -> Result<Triangulation, splinekit_core::splinecore::TriError> {
        let pts = self.vertices.iter().map(|[x, y]| (x.0.clone(), y.0.clone())).collect();
        Triangulation::new(pts, self.triangles.clone())
    }

    /// JSON with one vertex and one triangle per line.
    pub fn to_json(&self) -> String {
        let line = |v: String| format!("    {v}");
        let verts: Vec<String> = self
            .vertices
            .iter()
            .map(|v| line(serde_json::to_string(v).expect("serializable")))
            .collect();
        let tris: Vec<String> = self
            .triangles
            .iter()
            .map(|t| line(serde_json::to_string(t).expect("serializable")))
            .collect();
        format!(
            "{{\n  \"vertices\": [\n{}\n  ],\n  \"triangles\": [\n{}\n  ]\n}}",
            verts.join(",\n"),
            tris.join(",\n")
        )
    }
}

#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Parse(ParseError),
    Invalid(splinekit_core::splinecore::TriError),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "{e}"),
            LoadError::Parse(e) => write!(f, "{e}"),
            LoadError::Invalid(e) => write!(f, "invalid triangulation: {e}"),
        }
    }
}

impl std::error::Error for LoadError {}

pub fn parse_triangulation(text: &str) -> Result<Triangulation, LoadError> {
    let doc: TriangulationDoc = serde_json::from_str(text)
        .map_err(|e| LoadError::Parse(ParseError::new(e.line(), e.column(), strip_position(&e))))?;
    doc.build().map_err(LoadError::Invalid)
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

pub fn load_triangulation(path: &Path) -> Result<Triangulation, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    parse_triangulation(&text)
}

/// The built-in eight-triangle complex as a document.
pub fn delta_s_document() -> TriangulationDoc {
    TriangulationDoc {
        vertices: VERTICES
            .iter()
            .map(|&(x, y)| [Coord(Rational::from_integer(x.into())), Coord(Rational::from_integer(y.into()))])
            .collect(),
        triangles: TRIANGLES.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let doc = delta_s_document();
        let t = parse_triangulation(&doc.to_json()).unwrap();
        assert_eq!((t.f2(), t.f1_interior(), t.f0_interior()), (8, 9, 2));
    }

    #[test]
    fn mixed_coordinates() {
        let t = parse_triangulation(r#"{"vertices": [[0, "0"], ["1/2", 0], [0, 1]], "triangles": [[0, 1, 2]]}"#).unwrap();
        assert_eq!(t.vertices()[1].0, Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn positioned_errors() {
        let text = "{\"vertices\": [[0, 0], [1, \"a/b\"]],\n \"triangles\": []}";
        match parse_triangulation(text) {
            Err(LoadError::Parse(e)) => assert_eq!(e.line, 1),
            other => panic!("{other:?}"),
        }
        let text = "{\"vertices\": [[0, 0]],\n \"triangles\": [[0, 1]]}";
        match parse_triangulation(text) {
            Err(LoadError::Parse(e)) => assert_eq!(e.line, 2),
            other => panic!("{other:?}"),
        }
        let text = r#"{"vertices": [[0, 0], [1, 1], [2, 2]], "triangles": [[0, 1, 2]]}"#;
        assert!(matches!(parse_triangulation(text), Err(LoadError::Invalid(_))));
    }
}
