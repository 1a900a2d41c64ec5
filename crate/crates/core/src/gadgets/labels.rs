//! Vertex label grammar shared by all gadget generators.
//!
//! Indices are 1-based except path positions `a`, `b` of the multicut gadget,
//! which start at 0 for the non-hat vertices as in `z/i/0 .. z/i/n`.
//!
//! ```text
//! s/x t/x s/y t/y s/< t/< s/> t/>      multicut terminals
//! z/i/a      z/i/hat/a                 z-path vertices
//! x/i/j/a    x/i/j/hat/a               x-path vertices (y likewise)
//! p/i/j/a/b                            grid vertices
//! M/i/j/k/(x,y)   HS/i/j/k/y   VS/i/j/k/x   slot k of a gadget row
//! M/i/j/s1   HS/i/j/s2 ...             hub vertices of a uniqueness gadget
//! a/i b/i c/j d/j s* t*                border and special vertices
//! ```

use std::fmt;
use std::str::FromStr;

/// One of the gadgets arranged on the grid of the Steiner network
/// constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetRef {
    Main(usize, usize),
    Horizontal(usize, usize),
    Vertical(usize, usize),
}

impl fmt::Display for GadgetRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetRef::Main(i, j) => write!(f, "M/{i}/{j}"),
            GadgetRef::Horizontal(i, j) => write!(f, "HS/{i}/{j}"),
            GadgetRef::Vertical(i, j) => write!(f, "VS/{i}/{j}"),
        }
    }
}

/// Row key of a gadget: a plain index for secondary gadgets, a pair for main
/// gadgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowKey {
    Index(usize),
    Pair(usize, usize),
}

impl fmt::Display for RowKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowKey::Index(x) => write!(f, "{x}"),
            RowKey::Pair(x, y) => write!(f, "({x},{y})"),
        }
    }
}

impl FromStr for RowKey {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (x, y) = inner.split_once(',').ok_or(())?;
            return Ok(RowKey::Pair(x.trim().parse().map_err(|_| ())?, y.trim().parse().map_err(|_| ())?));
        }
        s.parse().map(RowKey::Index).map_err(|_| ())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathFamily {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    /// `s/x`, `t/<`, ...: side is `s` or `t`, kind one of `x y < >`.
    Terminal { side: char, kind: char },
    Z { i: usize, a: usize, hat: bool },
    Path { family: PathFamily, i: usize, j: usize, a: usize, hat: bool },
    Grid { i: usize, j: usize, a: usize, b: usize },
    Slot { gadget: GadgetRef, slot: u8, row: RowKey },
    Hub { gadget: GadgetRef, which: u8 },
    Border { side: char, index: usize },
    SourceStar,
    SinkStar,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hat = |h: &bool| if *h { "hat/" } else { "" };
        match self {
            Label::Terminal { side, kind } => write!(f, "{side}/{kind}"),
            Label::Z { i, a, hat: h } => write!(f, "z/{i}/{}{a}", hat(h)),
            Label::Path { family, i, j, a, hat: h } => {
                let c = if *family == PathFamily::X { 'x' } else { 'y' };
                write!(f, "{c}/{i}/{j}/{}{a}", hat(h))
            }
            Label::Grid { i, j, a, b } => write!(f, "p/{i}/{j}/{a}/{b}"),
            Label::Slot { gadget, slot, row } => write!(f, "{gadget}/{slot}/{row}"),
            Label::Hub { gadget, which } => write!(f, "{gadget}/s{which}"),
            Label::Border { side, index } => write!(f, "{side}/{index}"),
            Label::SourceStar => write!(f, "s*"),
            Label::SinkStar => write!(f, "t*"),
        }
    }
}

fn num(s: &str) -> Option<usize> {
    s.parse().ok()
}

/// Parses a label written by one of the generators.
pub fn parse_label(label: &str) -> Option<Label> {
    match label {
        "s*" => return Some(Label::SourceStar),
        "t*" => return Some(Label::SinkStar),
        _ => {}
    }
    let parts: Vec<&str> = label.split('/').collect();
    let gadget = |kind: &str, i: &str, j: &str| -> Option<GadgetRef> {
        let (i, j) = (num(i)?, num(j)?);
        match kind {
            "M" => Some(GadgetRef::Main(i, j)),
            "HS" => Some(GadgetRef::Horizontal(i, j)),
            "VS" => Some(GadgetRef::Vertical(i, j)),
            _ => None,
        }
    };
    match parts.as_slice() {
        [side @ ("s" | "t"), kind @ ("x" | "y" | "<" | ">")] => Some(Label::Terminal {
            side: side.chars().next()?,
            kind: kind.chars().next()?,
        }),
        [side @ ("a" | "b" | "c" | "d"), k] => {
            Some(Label::Border { side: side.chars().next()?, index: num(k)? })
        }
        ["z", i, a] => Some(Label::Z { i: num(i)?, a: num(a)?, hat: false }),
        ["z", i, "hat", a] => Some(Label::Z { i: num(i)?, a: num(a)?, hat: true }),
        [c @ ("x" | "y"), i, j, rest @ ..] => {
            let family = if *c == "x" { PathFamily::X } else { PathFamily::Y };
            let (a, hat) = match rest {
                [a] => (num(a)?, false),
                ["hat", a] => (num(a)?, true),
                _ => return None,
            };
            Some(Label::Path { family, i: num(i)?, j: num(j)?, a, hat })
        }
        ["p", i, j, a, b] => Some(Label::Grid { i: num(i)?, j: num(j)?, a: num(a)?, b: num(b)? }),
        [kind, i, j, hub @ ("s1" | "s2")] => Some(Label::Hub {
            gadget: gadget(kind, i, j)?,
            which: if *hub == "s1" { 1 } else { 2 },
        }),
        [kind, i, j, slot, row] => Some(Label::Slot {
            gadget: gadget(kind, i, j)?,
            slot: slot.parse().ok().filter(|s| *s <= 3)?,
            row: row.parse().ok()?,
        }),
        _ => None,
    }
}
