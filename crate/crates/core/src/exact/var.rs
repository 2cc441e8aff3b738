use std::fmt;
use std::str::FromStr;

use super::ExactError;

/// The two variable families: equivariant parameters `t_i` and Chern roots
/// (or residue variables) `z_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    T,
    Z,
}

/// A named variable. Ordered by family first (all `t` before all `z`), then by
/// index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    family: Family,
    index: u32,
}

impl VarId {
    /// Panics if `index == 0`; indices are 1-based.
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        VarId { family, index }
    }

    pub fn t(index: u32) -> Self {
        VarId::new(Family::T, index)
    }

    pub fn z(index: u32) -> Self {
        VarId::new(Family::Z, index)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_t(self) -> bool {
        self.family == Family::T
    }

    pub fn is_z(self) -> bool {
        self.family == Family::Z
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::T => 't',
            Family::Z => 'z',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for VarId {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse {
            offset: 0,
            message: format!("not a variable name: {s:?}"),
        };
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('t') => Family::T,
            Some('z') => Family::Z,
            _ => return Err(bad()),
        };
        let index: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(VarId::new(family, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_family_sorts_before_z() {
        assert!(VarId::t(9) < VarId::z(1));
        assert!(VarId::z(1) < VarId::z(2));
        assert!(VarId::t(2) < VarId::t(10));
    }

    #[test]
    fn parse_and_display() {
        let v: VarId = "z12".parse().unwrap();
        assert_eq!(v, VarId::z(12));
        assert_eq!(v.to_string(), "z12");
        assert!("t0".parse::<VarId>().is_err());
        assert!("x1".parse::<VarId>().is_err());
    }
}
