use std::fmt;
use std::str::FromStr;

/// The closed set of transform families this crate can materialize.
///
/// Every builder maps to exactly one tag. The string form (used by the
/// CLI and by report/sweep output) is stable: see [`TransformFamily::name`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TransformFamily {
    Dct1,
    Dct2,
    Dct3,
    Dct4,
    GenDct2,
    GenDct3,
    GenDct4,
    NewDct,
    NewDst,
    NewSct,
    DwtUnified,
    Dwt1,
    Dwt2,
    Dwt3,
    Dwt4,
    GenDwtCas,
    GenDwt4,
}

impl TransformFamily {
    /// All tags, in the order used for deterministic listings.
    pub const ALL: [TransformFamily; 17] = [
        TransformFamily::Dct1,
        TransformFamily::Dct2,
        TransformFamily::Dct3,
        TransformFamily::Dct4,
        TransformFamily::GenDct2,
        TransformFamily::GenDct3,
        TransformFamily::GenDct4,
        TransformFamily::NewDct,
        TransformFamily::NewDst,
        TransformFamily::NewSct,
        TransformFamily::DwtUnified,
        TransformFamily::Dwt1,
        TransformFamily::Dwt2,
        TransformFamily::Dwt3,
        TransformFamily::Dwt4,
        TransformFamily::GenDwtCas,
        TransformFamily::GenDwt4,
    ];

    /// Stable name, also accepted by [`FromStr`].
    pub fn name(self) -> &'static str {
        match self {
            TransformFamily::Dct1 => "dct1",
            TransformFamily::Dct2 => "dct2",
            TransformFamily::Dct3 => "dct3",
            TransformFamily::Dct4 => "dct4",
            TransformFamily::GenDct2 => "gen-dct2",
            TransformFamily::GenDct3 => "gen-dct3",
            TransformFamily::GenDct4 => "gen-dct4",
            TransformFamily::NewDct => "new-dct",
            TransformFamily::NewDst => "new-dst",
            TransformFamily::NewSct => "new-sct",
            TransformFamily::DwtUnified => "dwt-unified",
            TransformFamily::Dwt1 => "dwt1",
            TransformFamily::Dwt2 => "dwt2",
            TransformFamily::Dwt3 => "dwt3",
            TransformFamily::Dwt4 => "dwt4",
            TransformFamily::GenDwtCas => "gen-dwt-cas",
            TransformFamily::GenDwt4 => "gen-dwt4",
        }
    }

    /// Families whose kernel takes the integer triple (p, q, r).
    pub fn takes_pqr(self) -> bool {
        matches!(
            self,
            TransformFamily::GenDct2
                | TransformFamily::GenDct3
                | TransformFamily::GenDct4
                | TransformFamily::GenDwtCas
                | TransformFamily::GenDwt4
        )
    }

    /// The one family whose kernel takes (alpha, beta, gamma) directly.
    pub fn takes_dwt_params(self) -> bool {
        matches!(self, TransformFamily::DwtUnified)
    }
}

impl fmt::Display for TransformFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error returned when parsing an unknown family name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown transform family: {:?}", self.0)
    }
}

impl std::error::Error for UnknownFamily {}

impl FromStr for TransformFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TransformFamily::ALL
            .iter()
            .copied()
            .find(|family| family.name() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}
