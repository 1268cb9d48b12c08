//! Coxeter type labels, their numeric invariants, and the type-string grammar.
//!
//! A type string is a juxtaposition of irreducible labels joined by `x`,
//! e.g. `B5`, `D4xA2`, `I2(7)`. Parsing is case-insensitive and yields a
//! [`CompositeType`] whose factors are sorted, so two spellings of the same
//! product compare equal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An irreducible finite Coxeter type.
///
/// `A(n)`, `B(n)` and `D(n)` carry the rank; `I2(n)` carries the dihedral
/// edge label (the group has order `2n`). Variant order is the canonical
/// sort order used by [`CompositeType`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoxeterLabel {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
    H3,
    H4,
}

impl CoxeterLabel {
    /// Builds a label, enforcing the rank minimums and canonicalizing the
    /// dihedral aliases `I2(4) = B2` and `I2(6) = G2`.
    pub fn new_checked(family: &str, param: Option<u32>) -> Result<Self> {
        let need = |min: u32| -> Result<u32> {
            let p = param.ok_or_else(|| Error::Parse(format!("{family} needs a rank")))?;
            if p < min {
                return Err(Error::RankTooSmall {
                    family: family.to_string(),
                    rank: p,
                    min,
                });
            }
            Ok(p)
        };
        let label = match family {
            "A" => CoxeterLabel::A(need(1)?),
            "B" => CoxeterLabel::B(need(1)?),
            "D" => CoxeterLabel::D(need(2)?),
            "I2" => match need(4)? {
                4 => CoxeterLabel::B(2),
                6 => CoxeterLabel::G2,
                n => CoxeterLabel::I2(n),
            },
            _ => return Err(Error::UnknownFamily(family.to_string())),
        };
        Ok(label)
    }

    /// Coxeter number `h`.
    pub fn coxeter_number(self) -> u32 {
        match self {
            CoxeterLabel::A(n) => n + 1,
            CoxeterLabel::B(n) => 2 * n,
            CoxeterLabel::D(n) => 2 * n - 2,
            CoxeterLabel::I2(n) => n,
            CoxeterLabel::G2 => 6,
            CoxeterLabel::F4 => 12,
            CoxeterLabel::E6 => 12,
            CoxeterLabel::E7 => 18,
            CoxeterLabel::E8 => 30,
            CoxeterLabel::H3 => 10,
            CoxeterLabel::H4 => 30,
        }
    }

    /// Number of positive roots (equivalently, of reflections).
    pub fn positive_roots_count(self) -> u32 {
        match self {
            CoxeterLabel::A(r) => r * (r + 1) / 2,
            CoxeterLabel::B(r) => r * r,
            CoxeterLabel::D(r) => r * r - r,
            CoxeterLabel::I2(n) => n,
            CoxeterLabel::G2 => 6,
            CoxeterLabel::F4 => 24,
            CoxeterLabel::E6 => 36,
            CoxeterLabel::E7 => 63,
            CoxeterLabel::E8 => 120,
            CoxeterLabel::H3 => 15,
            CoxeterLabel::H4 => 60,
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            CoxeterLabel::A(n) | CoxeterLabel::B(n) | CoxeterLabel::D(n) => n,
            CoxeterLabel::I2(_) | CoxeterLabel::G2 => 2,
            CoxeterLabel::H3 => 3,
            CoxeterLabel::F4 | CoxeterLabel::H4 => 4,
            CoxeterLabel::E6 => 6,
            CoxeterLabel::E7 => 7,
            CoxeterLabel::E8 => 8,
        }
    }

    /// Name used when the label annotates an edge: `I2(5)` is `H2` and
    /// `I2(10)` is `Δ`, as in the H4 table.
    pub fn display_name(self) -> String {
        match self {
            CoxeterLabel::I2(5) => "H2".to_string(),
            CoxeterLabel::I2(10) => "Δ".to_string(),
            other => other.to_string(),
        }
    }

    fn family_token(self) -> &'static str {
        match self {
            CoxeterLabel::A(_) => "A",
            CoxeterLabel::B(_) => "B",
            CoxeterLabel::D(_) => "D",
            CoxeterLabel::I2(_) => "I2",
            CoxeterLabel::G2 => "G2",
            CoxeterLabel::F4 => "F4",
            CoxeterLabel::E6 => "E6",
            CoxeterLabel::E7 => "E7",
            CoxeterLabel::E8 => "E8",
            CoxeterLabel::H3 => "H3",
            CoxeterLabel::H4 => "H4",
        }
    }
}

impl fmt::Display for CoxeterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterLabel::A(n) | CoxeterLabel::B(n) | CoxeterLabel::D(n) => {
                write!(f, "{}{}", self.family_token(), n)
            }
            CoxeterLabel::I2(n) => write!(f, "I2({n})"),
            _ => f.write_str(self.family_token()),
        }
    }
}

impl FromStr for CoxeterLabel {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "Δ" || t.eq_ignore_ascii_case("delta") {
            return Ok(CoxeterLabel::I2(10));
        }
        let upper = t.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2(") {
            let n = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unterminated dihedral label {t:?}")))?;
            let n: u32 = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad dihedral parameter in {t:?}")))?;
            return CoxeterLabel::new_checked("I2", Some(n));
        }
        match upper.as_str() {
            "G2" => return Ok(CoxeterLabel::G2),
            "F4" => return Ok(CoxeterLabel::F4),
            "E6" => return Ok(CoxeterLabel::E6),
            "E7" => return Ok(CoxeterLabel::E7),
            "E8" => return Ok(CoxeterLabel::E8),
            "H3" => return Ok(CoxeterLabel::H3),
            "H4" => return Ok(CoxeterLabel::H4),
            "H2" => return Ok(CoxeterLabel::I2(5)),
            _ => {}
        }
        let split = upper
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("missing rank in {t:?}")))?;
        let (fam, digits) = upper.split_at(split);
        let rank: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {t:?}")))?;
        match fam {
            "A" | "B" | "D" => CoxeterLabel::new_checked(fam, Some(rank)),
            "E" | "F" | "G" | "H" | "I" => Err(Error::Parse(format!(
                "{t:?} is not a finite Coxeter type"
            ))),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A finite Coxeter type as a nonempty, sorted product of irreducibles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositeType {
    factors: Vec<CoxeterLabel>,
}

impl CompositeType {
    pub fn new(mut factors: Vec<CoxeterLabel>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("empty type".into()));
        }
        factors.sort();
        Ok(CompositeType { factors })
    }

    pub fn irreducible(label: CoxeterLabel) -> Self {
        CompositeType {
            factors: vec![label],
        }
    }

    pub fn factors(&self) -> &[CoxeterLabel] {
        &self.factors
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn positive_roots_count(&self) -> u32 {
        self.factors.iter().map(|l| l.positive_roots_count()).sum()
    }
}

impl fmt::Display for CompositeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for CompositeType {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_type(text)
    }
}

/// Parses a type string such as `"B5"`, `"D4xA2"` or `"I2(9)"`.
pub fn parse_type(text: &str) -> Result<CompositeType> {
    let factors = text
        .split(['x', 'X', '×'])
        .map(|tok| {
            if tok.trim().is_empty() {
                Err(Error::Parse(format!("empty factor in {text:?}")))
            } else {
                tok.parse()
            }
        })
        .collect::<Result<Vec<CoxeterLabel>>>()?;
    CompositeType::new(factors)
}

pub fn coxeter_number(label: CoxeterLabel) -> u32 {
    label.coxeter_number()
}

pub fn positive_roots_count(label: CoxeterLabel) -> u32 {
    label.positive_roots_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_simple_and_composite() {
        assert_eq!(parse_type("B3").unwrap().factors(), &[CoxeterLabel::B(3)]);
        assert_eq!(
            parse_type("D4xA2").unwrap().factors(),
            &[CoxeterLabel::A(2), CoxeterLabel::D(4)]
        );
        let t = parse_type("I2(9)").unwrap();
        assert_eq!(t.factors(), &[CoxeterLabel::I2(9)]);
        assert_eq!(t.factors()[0].coxeter_number(), 9);
        assert_eq!(parse_type("e8xa1").unwrap().to_string(), "A1xE8");
    }

    #[test]
    fn dihedral_aliases() {
        assert_eq!(parse_type("I2(6)").unwrap().factors(), &[CoxeterLabel::G2]);
        assert_eq!(parse_type("I2(4)").unwrap().factors(), &[CoxeterLabel::B(2)]);
        assert_eq!(parse_type("I2(5)").unwrap().factors(), &[CoxeterLabel::I2(5)]);
        assert_eq!(parse_type("H2").unwrap().factors(), &[CoxeterLabel::I2(5)]);
        assert_eq!(CoxeterLabel::I2(5).display_name(), "H2");
        assert_eq!("Δ".parse::<CoxeterLabel>().unwrap(), CoxeterLabel::I2(10));
        assert_eq!(CoxeterLabel::I2(10).display_name(), "Δ");
        // A1 and B1 stay distinct
        assert_ne!(parse_type("A1").unwrap(), parse_type("B1").unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_type("Q3"), Err(Error::UnknownFamily(_))));
        assert!(matches!(parse_type("D1"), Err(Error::RankTooSmall { .. })));
        assert!(matches!(parse_type("A0"), Err(Error::RankTooSmall { .. })));
        assert!(matches!(parse_type("I2(3)"), Err(Error::RankTooSmall { .. })));
        assert!(parse_type("E9").is_err());
        assert!(parse_type("B3x").is_err());
        assert!(parse_type("").is_err());
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(coxeter_number(CoxeterLabel::E8), 30);
        assert_eq!(coxeter_number(CoxeterLabel::B(6)), 12);
        assert_eq!(coxeter_number(CoxeterLabel::A(1)), 2);
        assert_eq!(coxeter_number(CoxeterLabel::D(4)), 6);
        assert_eq!(coxeter_number(CoxeterLabel::H4), 30);
    }

    #[test]
    fn positive_roots() {
        assert_eq!(positive_roots_count(CoxeterLabel::B(3)), 9);
        assert_eq!(positive_roots_count(CoxeterLabel::E8), 120);
        assert_eq!(positive_roots_count(CoxeterLabel::A(3)), 6);
        assert_eq!(positive_roots_count(CoxeterLabel::D(4)), 12);
    }

    fn label_strategy() -> impl Strategy<Value = CoxeterLabel> {
        prop_oneof![
            (1u32..20).prop_map(CoxeterLabel::A),
            (1u32..20).prop_map(CoxeterLabel::B),
            (2u32..20).prop_map(CoxeterLabel::D),
            (4u32..40).prop_map(|n| CoxeterLabel::new_checked("I2", Some(n)).unwrap()),
            Just(CoxeterLabel::G2),
            Just(CoxeterLabel::F4),
            Just(CoxeterLabel::E6),
            Just(CoxeterLabel::E7),
            Just(CoxeterLabel::E8),
            Just(CoxeterLabel::H3),
            Just(CoxeterLabel::H4),
        ]
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(labels in prop::collection::vec(label_strategy(), 1..5)) {
            let t = CompositeType::new(labels).unwrap();
            prop_assert_eq!(parse_type(&t.to_string()).unwrap(), t);
        }

        // 2N = r·h holds for every irreducible finite Coxeter group
        #[test]
        fn roots_times_two_is_rank_times_h(l in label_strategy()) {
            prop_assert_eq!(2 * l.positive_roots_count(), l.rank() * l.coxeter_number());
        }
    }
}
