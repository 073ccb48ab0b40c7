use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::{Error, Result};

/// The classical families of symmetric spaces with their distinguished
/// orbits of extrinsically symmetric type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// `SU(p+q)/SO(p+q)`
    AI,
    /// `SU(2(p+q))/Sp(p+q)`
    AII,
    /// `SU(2n)/S(U(n)×U(n))`
    AIII,
    /// `SO(p+q)/SO(p)×SO(q)` with a rank-one element
    BdiRank1,
    /// `SO(2n)/SO(n)×SO(n)` with `ξ = J_n/2`
    BdiSplit,
    /// `SO(4n)/U(2n)`
    DIII,
    /// `Sp(n)/U(n)`
    CI,
    /// `Sp(2n)/Sp(n)×Sp(n)`
    CII,
    /// The group `SU(p+q)`
    GrpA,
    /// The group `Spin(p+q)`
    GrpBd,
    /// The group `Sp(n)`
    GrpC,
    /// The group `Spin(2n)`
    GrpD,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 12] = [
        FamilyTag::AI,
        FamilyTag::AII,
        FamilyTag::AIII,
        FamilyTag::BdiRank1,
        FamilyTag::BdiSplit,
        FamilyTag::DIII,
        FamilyTag::CI,
        FamilyTag::CII,
        FamilyTag::GrpA,
        FamilyTag::GrpBd,
        FamilyTag::GrpC,
        FamilyTag::GrpD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::AI => "AI",
            FamilyTag::AII => "AII",
            FamilyTag::AIII => "AIII",
            FamilyTag::BdiRank1 => "BDI_rank1",
            FamilyTag::BdiSplit => "BDI_split",
            FamilyTag::DIII => "DIII",
            FamilyTag::CI => "CI",
            FamilyTag::CII => "CII",
            FamilyTag::GrpA => "GRP_a",
            FamilyTag::GrpBd => "GRP_bd",
            FamilyTag::GrpC => "GRP_c",
            FamilyTag::GrpD => "GRP_d",
        }
    }

    /// Whether the family is parametrized by a pair `1 ≤ p ≤ q`.
    pub fn takes_pair(self) -> bool {
        matches!(self, FamilyTag::AI | FamilyTag::AII | FamilyTag::BdiRank1 | FamilyTag::GrpA | FamilyTag::GrpBd)
    }

    /// A compact Lie group viewed as a symmetric space.
    pub fn is_group(self) -> bool {
        matches!(self, FamilyTag::GrpA | FamilyTag::GrpBd | FamilyTag::GrpC | FamilyTag::GrpD)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Case-insensitive; accepts the canonical names plus a few aliases
/// (`BDI1`, `BDI2`, `a`, `bd`, `c`, `d`).
impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '_' && *c != '-').flat_map(char::to_uppercase).collect();
        let tag = match key.as_str() {
            "AI" => FamilyTag::AI,
            "AII" => FamilyTag::AII,
            "AIII" => FamilyTag::AIII,
            "BDIRANK1" | "BDI1" => FamilyTag::BdiRank1,
            "BDISPLIT" | "BDI2" => FamilyTag::BdiSplit,
            "DIII" => FamilyTag::DIII,
            "CI" => FamilyTag::CI,
            "CII" => FamilyTag::CII,
            "GRPA" | "A" => FamilyTag::GrpA,
            "GRPBD" | "BD" => FamilyTag::GrpBd,
            "GRPC" | "C" => FamilyTag::GrpC,
            "GRPD" | "D" => FamilyTag::GrpD,
            _ => return Err(Error::Invalid(format!("unknown family `{s}`"))),
        };
        Ok(tag)
    }
}

/// Family parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    Pair(usize, usize),
    Single(usize),
}

/// A validated family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceFamily {
    tag: FamilyTag,
    params: Params,
}

impl SpaceFamily {
    /// Every table row with all parameters at most `cap`, family by family.
    /// Rows whose space is a circle (not of compact type) are left out.
    pub fn table(cap: usize) -> alloc::vec::Vec<SpaceFamily> {
        let mut rows = alloc::vec::Vec::new();
        for tag in FamilyTag::ALL {
            if tag.takes_pair() {
                for p in 1..=cap {
                    for q in p..=cap {
                        rows.push(SpaceFamily { tag, params: Params::Pair(p, q) });
                    }
                }
            } else {
                for n in 1..=cap {
                    rows.push(SpaceFamily { tag, params: Params::Single(n) });
                }
            }
        }
        rows.retain(SpaceFamily::is_compact_type);
        rows
    }

    pub fn new(tag: FamilyTag, params: Params) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidParameters { family: tag.name(), reason };
        match (tag.takes_pair(), params) {
            (true, Params::Pair(p, q)) => {
                if p < 1 {
                    return Err(invalid(format!("p >= 1 required, got p = {p}")));
                }
                if p > q {
                    return Err(invalid(format!("p <= q required, got p = {p}, q = {q}")));
                }
            }
            (false, Params::Single(n)) => {
                if n < 1 {
                    return Err(invalid(format!("n >= 1 required, got n = {n}")));
                }
            }
            (true, Params::Single(_)) => return Err(invalid("expects two parameters p q".into())),
            (false, Params::Pair(..)) => return Err(invalid("expects one parameter n".into())),
        }
        Ok(Self { tag, params })
    }

    pub fn pair(tag: FamilyTag, p: usize, q: usize) -> Result<Self> {
        Self::new(tag, Params::Pair(p, q))
    }

    pub fn single(tag: FamilyTag, n: usize) -> Result<Self> {
        Self::new(tag, Params::Single(n))
    }

    /// From a raw parameter list, as given on a command line.
    pub fn from_slice(tag: FamilyTag, params: &[usize]) -> Result<Self> {
        match *params {
            [p, q] => Self::pair(tag, p, q),
            [n] => Self::single(tag, n),
            _ => Err(Error::InvalidParameters {
                family: tag.name(),
                reason: format!("expected {} parameter(s), got {}", if tag.takes_pair() { 2 } else { 1 }, params.len()),
            }),
        }
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn param_list(&self) -> alloc::vec::Vec<usize> {
        match self.params {
            Params::Pair(p, q) => alloc::vec![p, q],
            Params::Single(n) => alloc::vec![n],
        }
    }

    /// `(p, q)`; panics for single-parameter families.
    pub(crate) fn pq(&self) -> (usize, usize) {
        match self.params {
            Params::Pair(p, q) => (p, q),
            Params::Single(_) => unreachable!("validated pair family"),
        }
    }

    /// `n`; panics for pair families.
    pub(crate) fn n(&self) -> usize {
        match self.params {
            Params::Single(n) => n,
            Params::Pair(..) => unreachable!("validated single family"),
        }
    }

    /// Size of the matrices realizing the space. Group families are
    /// realized on block-diagonal pairs, doubling the size of the group's
    /// own matrices.
    pub fn ambient_dim(&self) -> usize {
        let base = match self.tag {
            FamilyTag::AI | FamilyTag::BdiRank1 | FamilyTag::GrpA | FamilyTag::GrpBd => {
                let (p, q) = self.pq();
                p + q
            }
            FamilyTag::AII => 2 * (self.pq().0 + self.pq().1),
            FamilyTag::AIII | FamilyTag::BdiSplit | FamilyTag::CI | FamilyTag::GrpC | FamilyTag::GrpD => 2 * self.n(),
            FamilyTag::DIII | FamilyTag::CII => 4 * self.n(),
        };
        if self.tag.is_group() {
            2 * base
        } else {
            base
        }
    }

    /// Whether the underlying Lie algebra is semisimple (`so(2)` is the
    /// only abelian algebra the catalog can produce).
    pub fn is_compact_type(&self) -> bool {
        match self.tag {
            FamilyTag::BdiRank1 | FamilyTag::GrpBd => {
                let (p, q) = self.pq();
                p + q >= 3
            }
            FamilyTag::BdiSplit | FamilyTag::GrpD => self.n() >= 2,
            _ => true,
        }
    }

    /// The symmetric space, e.g. `SU(6)/SO(6)`.
    pub fn space_name(&self) -> String {
        match (self.tag, self.params) {
            (FamilyTag::AI, Params::Pair(p, q)) => format!("SU({})/SO({})", p + q, p + q),
            (FamilyTag::AII, Params::Pair(p, q)) => format!("SU({})/Sp({})", 2 * (p + q), p + q),
            (FamilyTag::AIII, Params::Single(n)) => format!("SU({})/S(U({n})xU({n}))", 2 * n),
            (FamilyTag::BdiRank1, Params::Pair(p, q)) => format!("SO({})/SO({p})xSO({q})", p + q),
            (FamilyTag::BdiSplit, Params::Single(n)) => format!("SO({})/SO({n})xSO({n})", 2 * n),
            (FamilyTag::DIII, Params::Single(n)) => format!("SO({})/U({})", 4 * n, 2 * n),
            (FamilyTag::CI, Params::Single(n)) => format!("Sp({n})/U({n})"),
            (FamilyTag::CII, Params::Single(n)) => format!("Sp({})/Sp({n})xSp({n})", 2 * n),
            (FamilyTag::GrpA, Params::Pair(p, q)) => format!("SU({})", p + q),
            (FamilyTag::GrpBd, Params::Pair(p, q)) => format!("Spin({})", p + q),
            (FamilyTag::GrpC, Params::Single(n)) => format!("Sp({n})"),
            (FamilyTag::GrpD, Params::Single(n)) => format!("Spin({})", 2 * n),
            _ => unreachable!("validated family"),
        }
    }

    /// The isotropy orbit of the distinguished element.
    pub fn orbit_name(&self) -> String {
        match (self.tag, self.params) {
            (FamilyTag::AI, Params::Pair(p, q)) => format!("SO({})/S(O({p})xO({q}))", p + q),
            (FamilyTag::AII, Params::Pair(p, q)) => format!("Sp({})/Sp({p})xSp({q})", p + q),
            (FamilyTag::AIII, Params::Single(n)) => format!("U({n})"),
            (FamilyTag::BdiRank1, Params::Pair(p, q)) => format!("(S^{}xS^{})/Z2", p - 1, q - 1),
            (FamilyTag::BdiSplit, Params::Single(n)) => format!("SO({n})"),
            (FamilyTag::DIII, Params::Single(n)) => format!("U({})/Sp({n})", 2 * n),
            (FamilyTag::CI, Params::Single(n)) => format!("U({n})/SO({n})"),
            (FamilyTag::CII, Params::Single(n)) => format!("Sp({n})"),
            (FamilyTag::GrpA, Params::Pair(p, q)) => format!("SU({})/S(U({p})xU({q}))", p + q),
            (FamilyTag::GrpBd, Params::Pair(p, q)) => format!("SO({})/(SO(2)xSO({}))", p + q, p + q - 2),
            (FamilyTag::GrpC, Params::Single(n)) => format!("Sp({n})/U({n})"),
            (FamilyTag::GrpD, Params::Single(n)) => format!("SO({})/U({n})", 2 * n),
            _ => unreachable!("validated family"),
        }
    }

    /// The spindle-number entry of the summary table, as a formula.
    pub fn lambda_formula(&self) -> &'static str {
        match self.tag {
            FamilyTag::AI | FamilyTag::AII | FamilyTag::GrpA => "(p+q)/gcd(p,q)",
            FamilyTag::BdiSplit => "2 if n even, 4 if n odd",
            FamilyTag::GrpD => "4",
            _ => "2",
        }
    }

    /// `gcd(p, q)` for pair families.
    pub fn gcd_pq(&self) -> Option<usize> {
        match self.params {
            Params::Pair(p, q) => Some(p.gcd(&q)),
            Params::Single(_) => None,
        }
    }
}

impl fmt::Display for SpaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params {
            Params::Pair(p, q) => write!(f, "{} ({p},{q})", self.tag),
            Params::Single(n) => write!(f, "{} {n}", self.tag),
        }
    }
}
