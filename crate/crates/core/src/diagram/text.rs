//! Text form `n=6;{1,5}{4,6}{2,1'}{3,6'}{2',4'}{3',5'}`.
//!
//! Output lists left brackets, then lines, then right brackets, each group
//! sorted. Input accepts blocks in any order and ignores whitespace.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{BrauerDiagram, Point};
use crate::{Error, Result};

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.rank())?;
        for (p, q) in self.blocks() {
            write!(f, "{{{p},{q}}}")?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rank_prefix(s: &str, separator: char) -> Result<(usize, &str)> {
    let s = s.trim();
    let rest = s
        .strip_prefix('n')
        .and_then(|r| r.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected `n=` prefix in {s:?}")))?;
    let (num, body) = rest
        .split_once(separator)
        .ok_or_else(|| Error::Parse(format!("expected `{separator}` after the rank")))?;
    let n = num
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("bad rank {:?}", num.trim())))?;
    Ok((n, body))
}

fn parse_point(token: &str) -> Result<Point> {
    let token = token.trim();
    let (digits, primed) = match token.strip_suffix('\'') {
        Some(d) => (d.trim(), true),
        None => (token, false),
    };
    let label = digits
        .parse::<u8>()
        .map_err(|_| Error::Parse(format!("bad point {token:?}")))?;
    Ok(if primed {
        Point::Primed(label)
    } else {
        Point::Unprimed(label)
    })
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, body) = parse_rank_prefix(s, ';')?;
        let mut blocks = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected `{{` at {rest:?}")))?;
            let (block, tail) = inner
                .split_once('}')
                .ok_or_else(|| Error::Parse("unterminated block".into()))?;
            let (p, q) = block
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("block {{{block}}} needs two points")))?;
            blocks.push((parse_point(p)?, parse_point(q)?));
            rest = tail.trim_start();
        }
        BrauerDiagram::new(n, &blocks)
    }
}
