//! Diagram parameters `D(4n; m1[l], m2[r], m3)` with prefactor twists `t_{c1}^{m4} t_{c2}^{m5}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The integer tuple naming a diagram.
///
/// `n` is a quarter of the number of parallel curves in the trivial diagram.
/// `m1, m2, m3` are twist offsets along the push-offs of the three cutting
/// curves, `l, r` are Dehn-twist powers along `c4, c5` and `m4, m5` are the
/// prefactor twists along `c1, c2`. Validity is a separate query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramParams {
    pub n: i64,
    pub m1: i64,
    pub m2: i64,
    pub m3: i64,
    pub l: i64,
    pub r: i64,
    pub m4: i64,
    pub m5: i64,
}

impl DiagramParams {
    pub fn new(n: i64, m1: i64, m2: i64, m3: i64) -> Result<Self> {
        Self::with_twists(n, [m1, m2, m3], 0, 0, [0, 0])
    }

    pub fn with_twists(n: i64, m: [i64; 3], l: i64, r: i64, prefactor: [i64; 2]) -> Result<Self> {
        if n < 1 {
            return Err(Error::NonPositiveN(n));
        }
        Ok(DiagramParams {
            n,
            m1: m[0],
            m2: m[1],
            m3: m[2],
            l,
            r,
            m4: prefactor[0],
            m5: prefactor[1],
        })
    }

    pub fn m(&self) -> [i64; 3] {
        [self.m1, self.m2, self.m3]
    }

    /// True when no Dehn twists along `c4`, `c5` are applied.
    pub fn is_untwisted(&self) -> bool {
        self.l == 0 && self.r == 0
    }

    /// Same diagram with `l = r = 0` and no prefactor.
    pub fn base(&self) -> Self {
        DiagramParams {
            l: 0,
            r: 0,
            m4: 0,
            m5: 0,
            ..*self
        }
    }

    /// Flat record `n m1 m2 m3 l r m4 m5`.
    pub fn to_record(&self) -> String {
        format!(
            "{} {} {} {} {} {} {} {}",
            self.n, self.m1, self.m2, self.m3, self.l, self.r, self.m4, self.m5
        )
    }

    /// Parse `n m1 m2 m3 [l r [m4 m5]]`. Missing trailing fields default to zero.
    pub fn from_record(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match values.len() {
            4 | 6 | 8 => {}
            k => {
                return Err(Error::Parse(format!(
                    "expected 4, 6 or 8 integers `n m1 m2 m3 [l r [m4 m5]]`, got {k}"
                )))
            }
        }
        let get = |i: usize| values.get(i).copied().unwrap_or(0);
        Self::with_twists(
            values[0],
            [values[1], values[2], values[3]],
            get(4),
            get(5),
            [get(6), get(7)],
        )
    }

    /// Parse the display notation `[t_c1^a t_c2^b ]D(4n;m1[l],m2[r],m3)`.
    pub fn from_notation(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "bad diagram notation {s:?}, expected D(4n;m1[l],m2[r],m3)"
            ))
        };
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        let (prefix, body) = match s.find("D(") {
            Some(i) => (s[..i].trim(), &s[i + 2..]),
            None => return Err(bad()),
        };
        let mut prefactor = [0, 0];
        if !prefix.is_empty() {
            let parts: Vec<&str> = prefix.split_whitespace().collect();
            let [a, b] = parts[..] else { return Err(bad()) };
            prefactor[0] = int(a.strip_prefix("t_c1^").ok_or_else(bad)?)?;
            prefactor[1] = int(b.strip_prefix("t_c2^").ok_or_else(bad)?)?;
        }
        let body = body.trim_end().strip_suffix(')').ok_or_else(bad)?;
        let (big_n, rest) = body.split_once(';').ok_or_else(bad)?;
        let big_n = int(big_n)?;
        if big_n % 4 != 0 {
            return Err(Error::Parse(format!(
                "D({big_n};…): the first entry must be 4n"
            )));
        }
        let fields: Vec<&str> = rest.split(',').collect();
        let [f1, f2, f3] = fields[..] else {
            return Err(bad());
        };
        let twisted = |t: &str| -> Result<(i64, i64)> {
            match t.trim().split_once('[') {
                Some((m, tw)) => Ok((int(m)?, int(tw.strip_suffix(']').ok_or_else(bad)?)?)),
                None => Ok((int(t)?, 0)),
            }
        };
        let (m1, l) = twisted(f1)?;
        let (m2, r) = twisted(f2)?;
        Self::with_twists(big_n / 4, [m1, m2, int(f3)?], l, r, prefactor)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ParamsJson::from(*self)).expect("params serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: ParamsJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

impl fmt::Display for DiagramParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let twist = |m: i64, t: i64| {
            if t == 0 {
                m.to_string()
            } else {
                format!("{m}[{t}]")
            }
        };
        let body = format!(
            "D({};{},{},{})",
            4 * self.n,
            twist(self.m1, self.l),
            twist(self.m2, self.r),
            self.m3
        );
        if self.m4 != 0 || self.m5 != 0 {
            write!(f, "t_c1^{} t_c2^{} {}", self.m4, self.m5, body)
        } else {
            f.write_str(&body)
        }
    }
}

impl FromStr for DiagramParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            Self::from_json(t)
        } else if t.starts_with('D') || t.starts_with("t_") {
            Self::from_notation(t)
        } else {
            Self::from_record(t)
        }
    }
}

/// JSON form `{"n":..,"m":[m1,m2,m3],"l":..,"r":..,"prefactor":[m4,m5]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub n: i64,
    pub m: [i64; 3],
    #[serde(default)]
    pub l: i64,
    #[serde(default)]
    pub r: i64,
    #[serde(default)]
    pub prefactor: [i64; 2],
}

impl From<DiagramParams> for ParamsJson {
    fn from(p: DiagramParams) -> Self {
        ParamsJson {
            n: p.n,
            m: p.m(),
            l: p.l,
            r: p.r,
            prefactor: [p.m4, p.m5],
        }
    }
}

impl TryFrom<ParamsJson> for DiagramParams {
    type Error = Error;

    fn try_from(j: ParamsJson) -> Result<Self> {
        DiagramParams::with_twists(j.n, j.m, j.l, j.r, j.prefactor)
    }
}

impl Serialize for DiagramParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsJson::from(*self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiagramParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ParamsJson::deserialize(d)?;
        raw.try_into().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_positive_n() {
        assert_eq!(DiagramParams::new(0, 0, 0, 0), Err(Error::NonPositiveN(0)));
        assert!(DiagramParams::new(-3, 1, 1, 1).is_err());
    }

    #[test]
    fn record_defaults_missing_twists() {
        let p = DiagramParams::from_record("2 1 1 5").unwrap();
        assert_eq!((p.l, p.r, p.m4, p.m5), (0, 0, 0, 0));
        let p = DiagramParams::from_record("20 1 13 5 1 0").unwrap();
        assert_eq!((p.n, p.l), (20, 1));
        assert!(DiagramParams::from_record("2 1 1").is_err());
        assert!(DiagramParams::from_record("2 1 x 1").is_err());
    }

    #[test]
    fn json_schema() {
        let p = DiagramParams::from_json(r#"{"n":5,"m":[1,13,5],"l":1}"#).unwrap();
        assert_eq!(
            p,
            DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap()
        );
        assert_eq!(
            p.to_json(),
            r#"{"n":5,"m":[1,13,5],"l":1,"r":0,"prefactor":[0,0]}"#
        );
        assert!(DiagramParams::from_json(r#"{"n":0,"m":[1,1,1]}"#).is_err());
    }

    #[test]
    fn display_uses_bracket_notation() {
        let p = DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap();
        assert_eq!(p.to_string(), "D(20;1[1],13,5)");
    }

    #[test]
    fn notation_parses() {
        let p: DiagramParams = "D(20;1[1],13,5)".parse().unwrap();
        assert_eq!(
            p,
            DiagramParams::with_twists(5, [1, 13, 5], 1, 0, [0, 0]).unwrap()
        );
        let p: DiagramParams = "t_c1^2 t_c2^-1 D(8;1,1[-3],5)".parse().unwrap();
        assert_eq!(
            p,
            DiagramParams::with_twists(2, [1, 1, 5], 0, -3, [2, -1]).unwrap()
        );
        assert!("D(10;1,1,1)".parse::<DiagramParams>().is_err());
        assert!("D(8;1,1)".parse::<DiagramParams>().is_err());
    }

    proptest! {
        #[test]
        fn record_and_json_round_trip(n in 1i64..50, m in prop::array::uniform3(-100i64..100),
                                      l in -9i64..9, r in -9i64..9, pre in prop::array::uniform2(-5i64..5)) {
            let p = DiagramParams::with_twists(n, m, l, r, pre).unwrap();
            prop_assert_eq!(DiagramParams::from_record(&p.to_record()).unwrap(), p);
            prop_assert_eq!(DiagramParams::from_json(&p.to_json()).unwrap(), p);
            prop_assert_eq!(p.to_string().parse::<DiagramParams>().unwrap(), p);
        }
    }
}
