//! The special representation as a value: a classical class (with a copy
//! tag for split type-D classes), a tabulated `d_a`, or a tuple for products.

use std::fmt;

use crate::classical::ClassicalClass;
use crate::coxeter::CoxeterLabel;
use crate::error::{Error, Result};

/// Which of the two representations sharing a degenerate type-D class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitCopy {
    I,
    II,
}

impl fmt::Display for SplitCopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitCopy::I => "I",
            SplitCopy::II => "II",
        })
    }
}

/// A special representation named `d_a` (or `d'_a`) in the tables.
///
/// Identity is `(dim, a, prime)`; `odd` is derived data carried along.
#[derive(Debug, Clone, Copy)]
pub struct TabulatedRep {
    pub dim: u32,
    pub a: u32,
    pub prime: bool,
    pub odd: bool,
}

impl TabulatedRep {
    pub fn new(dim: u32, a: u32, prime: bool) -> Self {
        TabulatedRep {
            dim,
            a,
            prime,
            odd: false,
        }
    }

    fn key(&self) -> (u32, u32, bool) {
        (self.dim, self.a, self.prime)
    }

    /// Parses `8_9`, `8'_9`, `1400_{37}`.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
        let bad = || Error::Parse(format!("expected d_a, got {text:?}"));
        let (d, a) = t.split_once('_').ok_or_else(bad)?;
        let (d, prime) = match d.strip_suffix('\'').or_else(|| d.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (d, false),
        };
        let dim = d.parse().map_err(|_| bad())?;
        let a = a.parse().map_err(|_| bad())?;
        Ok(TabulatedRep::new(dim, a, prime))
    }
}

impl PartialEq for TabulatedRep {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for TabulatedRep {}

impl std::hash::Hash for TabulatedRep {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for TabulatedRep {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TabulatedRep {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.a, self.dim, self.prime).cmp(&(other.a, other.dim, other.prime))
    }
}

impl fmt::Display for TabulatedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}_{}", self.dim, if self.prime { "'" } else { "" }, self.a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecialRep {
    Classical {
        class: ClassicalClass,
        copy: Option<SplitCopy>,
    },
    Tabulated {
        group: CoxeterLabel,
        rep: TabulatedRep,
    },
    Product(Vec<SpecialRep>),
}

impl SpecialRep {
    pub fn classical(class: ClassicalClass) -> Self {
        SpecialRep::Classical { class, copy: None }
    }

    pub fn a_value(&self) -> u32 {
        match self {
            SpecialRep::Classical { class, .. } => class.a_value(),
            SpecialRep::Tabulated { rep, .. } => rep.a,
            SpecialRep::Product(parts) => parts.iter().map(|p| p.a_value()).sum(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        match self {
            SpecialRep::Classical { class, .. } => class.is_degenerate(),
            _ => false,
        }
    }

    pub fn is_odd(&self) -> bool {
        match self {
            SpecialRep::Tabulated { rep, .. } => rep.odd,
            SpecialRep::Product(parts) => parts.iter().any(|p| p.is_odd()),
            SpecialRep::Classical { .. } => false,
        }
    }

    pub fn as_class(&self) -> Option<&ClassicalClass> {
        match self {
            SpecialRep::Classical { class, .. } => Some(class),
            _ => None,
        }
    }

    /// Partition form for classical classes, component-wise for products.
    pub fn partition_text(&self) -> Option<String> {
        match self {
            SpecialRep::Classical { class, .. } => Some(class.partition_text()),
            SpecialRep::Tabulated { .. } => None,
            SpecialRep::Product(parts) => {
                let texts: Option<Vec<String>> = parts.iter().map(|p| p.partition_text()).collect();
                texts.map(|t| format!("<{}>", t.join(" | ")))
            }
        }
    }
}

impl fmt::Display for SpecialRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialRep::Classical { class, copy } => {
                class.fmt(f)?;
                if let Some(c) = copy {
                    write!(f, "[{c}]")?;
                }
                Ok(())
            }
            SpecialRep::Tabulated { rep, .. } => rep.fmt(f),
            SpecialRep::Product(parts) => {
                f.write_str("<")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    p.fmt(f)?;
                }
                f.write_str(">")
            }
        }
    }
}

/// Splits `"<(1,2), 8_9>"` into its component texts; a text without angle
/// brackets is a single component.
pub(crate) fn split_components(text: &str) -> Result<Vec<String>> {
    let t = text.trim();
    let inner = match t.strip_prefix('<') {
        Some(rest) => rest
            .strip_suffix('>')
            .ok_or_else(|| Error::Parse(format!("unbalanced '<' in {text:?}")))?,
        None => return Ok(vec![t.to_string()]),
    };
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if (c == ',' || c == ';') && depth == 0 {
            parts.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    parts.push(cur.trim().to_string());
    if depth != 0 || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("malformed product representation {text:?}")));
    }
    Ok(parts)
}

/// Splits an optional `[I]` / `[II]` suffix off a class text.
pub(crate) fn split_copy_tag(text: &str) -> Result<(&str, Option<SplitCopy>)> {
    let t = text.trim();
    let Some(open) = t.rfind('[') else {
        return Ok((t, None));
    };
    let tag = t[open..].trim();
    let copy = match tag.to_ascii_uppercase().as_str() {
        "[I]" => SplitCopy::I,
        "[II]" => SplitCopy::II,
        _ => return Err(Error::Parse(format!("bad copy tag {tag:?}"))),
    };
    Ok((t[..open].trim(), Some(copy)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::Classical;

    #[test]
    fn tabulated_parse_display() {
        let r = TabulatedRep::parse("8'_9").unwrap();
        assert_eq!((r.dim, r.a, r.prime), (8, 9, true));
        assert_eq!(r.to_string(), "8'_9");
        assert_eq!(TabulatedRep::parse("1400_{37}").unwrap().to_string(), "1400_37");
        assert!(TabulatedRep::parse("1400").is_err());
    }

    #[test]
    fn product_text() {
        let c = Classical::D.class_of(&[1, 1]).unwrap();
        let x = SpecialRep::Product(vec![
            SpecialRep::Classical {
                class: c,
                copy: Some(SplitCopy::II),
            },
            SpecialRep::Tabulated {
                group: CoxeterLabel::G2,
                rep: TabulatedRep::new(2, 1, false),
            },
        ]);
        assert_eq!(x.to_string(), "<(1,1)[II], 2_1>");
        assert_eq!(x.a_value(), 2);
        assert_eq!(split_components(&x.to_string()).unwrap(), ["(1,1)[II]", "2_1"]);
        assert_eq!(split_copy_tag("(1,1)[ii]").unwrap(), ("(1,1)", Some(SplitCopy::II)));
    }
}
