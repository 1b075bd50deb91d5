use std::path::Path;

use super::{Event, Polarity};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedEvents {
    /// Events in file order.
    pub events: Vec<Event>,
    /// `(width, height)` from the header line, if present.
    pub sensor: Option<(u32, u32)>,
    /// 1-based line numbers whose timestamp is smaller than the previous
    /// event's.
    pub nonmonotonic_lines: Vec<usize>,
}

impl ParsedEvents {
    pub fn is_monotonic(&self) -> bool {
        self.nonmonotonic_lines.is_empty()
    }
}

fn parse_polarity(tok: &str) -> Option<Polarity> {
    match tok {
        "1" | "+1" => Some(Polarity::Positive),
        "0" | "-1" => Some(Polarity::Negative),
        _ => None,
    }
}

/// Parses `t x y p` lines. An optional first data line `W H` gives the
/// sensor size. Blank lines and `#` comments are skipped. Polarity may be
/// written as `0/1` or `-1/1`; `0` means negative.
pub fn parse_events(text: &str) -> Result<ParsedEvents> {
    let mut events = Vec::new();
    let mut sensor = None;
    let mut nonmonotonic_lines = Vec::new();
    let mut seen_data = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if toks.len() == 2 && !seen_data {
            let w = toks[0].parse::<u32>().map_err(|e| err(format!("bad sensor width: {e}")))?;
            let h = toks[1].parse::<u32>().map_err(|e| err(format!("bad sensor height: {e}")))?;
            if w == 0 || h == 0 {
                return Err(err(format!("sensor size {w}x{h} has an empty axis")));
            }
            sensor = Some((w, h));
            seen_data = true;
            continue;
        }
        seen_data = true;
        let [t, x, y, p] = toks[..] else {
            return Err(err(format!("expected \"t x y p\", found {} fields", toks.len())));
        };
        let t = t.parse::<f64>().map_err(|e| err(format!("bad timestamp: {e}")))?;
        if !t.is_finite() {
            return Err(err("timestamp is not finite".into()));
        }
        let x = x.parse::<u32>().map_err(|e| err(format!("bad x: {e}")))?;
        let y = y.parse::<u32>().map_err(|e| err(format!("bad y: {e}")))?;
        let p = parse_polarity(p).ok_or_else(|| err(format!("bad polarity {p:?}")))?;
        if events.last().is_some_and(|prev: &Event| t < prev.t) {
            nonmonotonic_lines.push(line_no);
        }
        events.push(Event { x, y, t, p });
    }
    Ok(ParsedEvents {
        events,
        sensor,
        nonmonotonic_lines,
    })
}

pub fn read_events(path: impl AsRef<Path>) -> Result<ParsedEvents> {
    parse_events(&std::fs::read_to_string(path)?)
}
