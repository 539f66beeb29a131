//! JSON file formats for semigroups and biacts.
//!
//! ```json
//! {"kind":"table","order":2,"table":[[0,1],[1,1]],"labels":["e","z"]}
//! {"kind":"transformations","degree":2,"generators":[[1,0],[0,0]]}
//! {"kind":"biact","left":<semigroup>,"right":<semigroup>,"size":1,
//!  "left_action":[[0],[0]],"right_action":[[0,0]]}
//! ```
//!
//! Transformations compose left to right: `f·g` applies `f` first. The
//! writers always emit `table` form, so a written file re-parses to the
//! same table and labels.

use serde::{Deserialize, Serialize};

use crate::biact::FiniteBiact;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SemigroupFile {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Transformations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiactFile {
    pub left: SemigroupFile,
    pub right: SemigroupFile,
    pub size: usize,
    pub left_action: Vec<Vec<usize>>,
    pub right_action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Any file the CLI reads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum AnyFile {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Transformations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Biact {
        left: SemigroupFile,
        right: SemigroupFile,
        size: usize,
        left_action: Vec<Vec<usize>>,
        right_action: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug)]
pub enum Document {
    Semigroup(FiniteSemigroup),
    Biact(FiniteBiact),
}

/// Converts a serde error position (1-based line and column) to a byte
/// offset into `text`.
fn byte_offset(text: &str, e: &serde_json::Error) -> usize {
    let line_start: usize = text
        .split_inclusive('\n')
        .take(e.line().saturating_sub(1))
        .map(str::len)
        .sum();
    (line_start + e.column().saturating_sub(1)).min(text.len())
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: byte_offset(text, &e),
        message: e.to_string(),
    })
}

impl SemigroupFile {
    pub fn build(self) -> Result<FiniteSemigroup> {
        match self {
            SemigroupFile::Table {
                order,
                table,
                labels,
            } => {
                let s = FiniteSemigroup::from_table(order, table)?;
                match labels {
                    Some(l) => s.with_labels(l),
                    None => Ok(s),
                }
            }
            SemigroupFile::Transformations { degree, generators } => {
                FiniteSemigroup::from_transformations(degree, &generators)
            }
        }
    }

    pub fn of(s: &FiniteSemigroup) -> Self {
        SemigroupFile::Table {
            order: s.order(),
            table: s.rows(),
            labels: s.labels().map(<[String]>::to_vec),
        }
    }
}

impl BiactFile {
    pub fn build(self) -> Result<FiniteBiact> {
        let a = FiniteBiact::new(
            self.left.build()?,
            self.right.build()?,
            self.size,
            self.left_action,
            self.right_action,
        )?;
        match self.labels {
            Some(l) => a.with_labels(l),
            None => Ok(a),
        }
    }

    pub fn of(a: &FiniteBiact) -> Self {
        BiactFile {
            left: SemigroupFile::of(a.left()),
            right: SemigroupFile::of(a.right()),
            size: crate::Actions::size(a),
            left_action: a.left_rows(),
            right_action: a.right_rows(),
            labels: a.labels().map(<[String]>::to_vec),
        }
    }
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup> {
    parse_json::<SemigroupFile>(text)?.build()
}

pub fn parse_biact(text: &str) -> Result<FiniteBiact> {
    #[derive(Deserialize)]
    #[serde(tag = "kind", rename_all = "kebab-case")]
    enum Tagged {
        Biact(BiactFile),
    }
    let Tagged::Biact(f) = parse_json::<Tagged>(text)?;
    f.build()
}

/// Parses either kind of file, dispatching on `"kind"`.
pub fn parse_document(text: &str) -> Result<Document> {
    Ok(match parse_json::<AnyFile>(text)? {
        AnyFile::Table {
            order,
            table,
            labels,
        } => Document::Semigroup(
            SemigroupFile::Table {
                order,
                table,
                labels,
            }
            .build()?,
        ),
        AnyFile::Transformations { degree, generators } => {
            Document::Semigroup(SemigroupFile::Transformations { degree, generators }.build()?)
        }
        AnyFile::Biact {
            left,
            right,
            size,
            left_action,
            right_action,
            labels,
        } => Document::Biact(
            BiactFile {
                left,
                right,
                size,
                left_action,
                right_action,
                labels,
            }
            .build()?,
        ),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("file formats serialize");
    s.push('\n');
    s
}

pub fn semigroup_to_json(s: &FiniteSemigroup) -> String {
    to_json(&SemigroupFile::of(s))
}

pub fn biact_to_json(a: &FiniteBiact) -> String {
    #[derive(Serialize)]
    #[serde(tag = "kind", rename_all = "kebab-case")]
    enum Tagged<'a> {
        Biact(&'a BiactFile),
    }
    to_json(&Tagged::Biact(&BiactFile::of(a)))
}

impl Document {
    pub fn to_json(&self) -> String {
        match self {
            Document::Semigroup(s) => semigroup_to_json(s),
            Document::Biact(a) => biact_to_json(a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn table_round_trip() {
        let s = named::t2();
        let back = parse_semigroup(&semigroup_to_json(&s)).unwrap();
        assert_eq!(back.table(), s.table());
        assert_eq!(back.labels(), s.labels());
    }

    #[test]
    fn transformations_close() {
        let s =
            parse_semigroup(r#"{"kind":"transformations","degree":2,"generators":[[1,0],[0,0]]}"#)
                .unwrap();
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn biact_round_trip() {
        let a = FiniteBiact::regular(&named::t2());
        let text = biact_to_json(&a);
        assert!(text.starts_with(r#"{"kind":"biact""#));
        let b = parse_biact(&text).unwrap();
        assert_eq!(b.left_action(), a.left_action());
        assert_eq!(b.right_action(), a.right_action());
        assert!(matches!(parse_document(&text).unwrap(), Document::Biact(_)));
    }

    #[test]
    fn parse_error_names_byte_offset() {
        let text = "{\"kind\":\"table\",\n\"order\":2,\"table\":[[0,1],[1,x]]}";
        match parse_semigroup(text) {
            Err(Error::Parse { offset, .. }) => assert_eq!(&text[offset..offset + 1], "x"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors_are_not_parse_errors() {
        let text = r#"{"kind":"table","order":2,"table":[[0,0],[0,2]]}"#;
        assert!(matches!(parse_semigroup(text), Err(Error::BadEntry { .. })));
        let text = r#"{"kind":"table","order":2,"table":[[1,0],[0,0]]}"#;
        assert!(matches!(
            parse_semigroup(text),
            Err(Error::NonAssociative(..))
        ));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"kind":"table","order":1,"table":[[0]],"extra":1}"#;
        assert!(matches!(parse_semigroup(text), Err(Error::Parse { .. })));
    }
}
