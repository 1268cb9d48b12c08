//! The duality involution `E ↦ E°`.
//!
//! For classical classes it is the staircase complement: for types B/D take
//! `(0,0,1,1,...,t,t)` and remove one copy of `t − a` for every entry `a`;
//! for type A take `(0,1,...,t)` and remove `t − a` for every entry. The
//! class of the result does not depend on `t`.

use crate::classical::{Classical, ClassicalClass};
use crate::error::{Error, Result};
use crate::exceptional;
use crate::rep::SpecialRep;

pub fn shriek(entries: &[u32], t: u32, family: Classical) -> Result<Vec<u32>> {
    let max = entries.iter().copied().max().unwrap_or(0);
    if max > t {
        return Err(Error::StaircaseTooSmall { t, max });
    }
    let copies = family.step() as u32;
    // removal count per staircase value
    let mut remove = vec![0u32; t as usize + 1];
    for &a in entries {
        remove[(t - a) as usize] += 1;
    }
    let mut out = Vec::new();
    for v in 0..=t {
        let keep = copies.checked_sub(remove[v as usize]).ok_or_else(|| match family {
            Classical::A => Error::InvalidBetaSet(entries.to_vec()),
            _ => Error::InvalidSymbol(entries.to_vec()),
        })?;
        out.extend(std::iter::repeat(v).take(keep as usize));
    }
    Ok(out)
}

pub fn dual_class(class: &ClassicalClass) -> ClassicalClass {
    let family = class.family();
    let e = class.entries();
    let t = e.iter().copied().max().unwrap_or(0);
    let s = shriek(e, t, family).expect("t is the largest entry");
    family
        .class_of(&s)
        .expect("the complement of a member is a member")
}

/// Dual of any special representation. Copy tags of split type-D classes
/// are kept as they are.
pub fn dual(rep: &SpecialRep) -> SpecialRep {
    match rep {
        SpecialRep::Classical { class, copy } => SpecialRep::Classical {
            class: dual_class(class),
            copy: *copy,
        },
        SpecialRep::Tabulated { group, rep } => SpecialRep::Tabulated {
            group: *group,
            rep: exceptional::dual_tabulated(*group, rep)
                .unwrap_or_else(|| panic!("{rep} is not a special representation of {group}")),
        },
        SpecialRep::Product(parts) => SpecialRep::Product(parts.iter().map(dual).collect()),
    }
}
