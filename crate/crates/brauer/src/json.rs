//! JSON shapes for diagrams and words.
//!
//! A diagram is `{"n": 3, "text": "n=3;{1,2}{3,3'}{1',2'}", "blocks": [[1,2],[3,-3],[-1,-2]]}`,
//! with primed points written as negative integers. A word is
//! `{"n": 4, "text": "n=4: (1,2)(2,3)", "quarks": [[1,2],[2,3]]}`. On input
//! the `text` field is optional; when present it must agree with the
//! structured field. The full output schema is `schema/output.schema.json`.

use brauer_core::{BrauerDiagram, Point, Quark, Word};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub blocks: Vec<[i32; 2]>,
}

fn signed(p: Point) -> i32 {
    match p {
        Point::Unprimed(i) => i as i32,
        Point::Primed(i) => -(i as i32),
    }
}

fn point(x: i32) -> Result<Point> {
    let label = u8::try_from(x.unsigned_abs())
        .map_err(|_| Error::Input(format!("point {x} out of range")))?;
    Ok(if x < 0 {
        Point::Primed(label)
    } else {
        Point::Unprimed(label)
    })
}

impl From<&BrauerDiagram> for DiagramJson {
    fn from(d: &BrauerDiagram) -> Self {
        DiagramJson {
            n: d.rank(),
            text: Some(d.to_string()),
            blocks: d.blocks().map(|(p, q)| [signed(p), signed(q)]).collect(),
        }
    }
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<BrauerDiagram> {
        let blocks = self
            .blocks
            .iter()
            .map(|&[p, q]| Ok((point(p)?, point(q)?)))
            .collect::<Result<Vec<_>>>()?;
        let d = BrauerDiagram::new(self.n, &blocks)?;
        if let Some(text) = &self.text {
            if text.parse::<BrauerDiagram>()? != d {
                return Err(Error::Input(
                    "`text` and `blocks` describe different diagrams".into(),
                ));
            }
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub quarks: Vec<[usize; 2]>,
}

impl From<&Word> for WordJson {
    fn from(w: &Word) -> Self {
        WordJson {
            n: w.rank(),
            text: Some(w.to_string()),
            quarks: w.quarks().iter().map(|q| [q.low(), q.high()]).collect(),
        }
    }
}

impl WordJson {
    pub fn to_word(&self) -> Result<Word> {
        let pairs: Vec<(usize, usize)> = self.quarks.iter().map(|&[i, j]| (i, j)).collect();
        let w = Word::from_pairs(self.n, &pairs)?;
        if let Some(text) = &self.text {
            if text.parse::<Word>()? != w {
                return Err(Error::Input(
                    "`text` and `quarks` describe different words".into(),
                ));
            }
        }
        Ok(w)
    }
}

pub fn pair(q: Quark) -> [usize; 2] {
    [q.low(), q.high()]
}

pub fn diagram_value(d: &BrauerDiagram) -> serde_json::Value {
    serde_json::to_value(DiagramJson::from(d)).expect("diagram serializes")
}

pub fn word_value(w: &Word) -> serde_json::Value {
    serde_json::to_value(WordJson::from(w)).expect("word serializes")
}
