use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GroupKind, LBRep};
use crate::linalg::CMatrix;

#[derive(Serialize, Deserialize)]
struct Repr {
    target: GroupKind,
    #[serde(rename = "A")]
    a: Option<CMatrix>,
    #[serde(rename = "B")]
    b: Option<CMatrix>,
    #[serde(rename = "S1")]
    s1: Option<CMatrix>,
    #[serde(rename = "S2")]
    s2: Option<CMatrix>,
}

impl Serialize for LBRep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            target: self.target,
            a: self.a.clone(),
            b: self.b.clone(),
            s1: self.s1.clone(),
            s2: self.s2.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LBRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<LBRep, D::Error> {
        let r = Repr::deserialize(d)?;
        LBRep::new(r.target, r.a, r.b, r.s1, r.s2).map_err(D::Error::custom)
    }
}

impl LBRep {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("representation serializes")
    }

    /// Parses a representation without enforcing the generator requirements of
    /// its target, so that verification can report them as missing.
    pub fn from_json_lenient(s: &str) -> crate::Result<LBRep> {
        let r: Repr = serde_json::from_str(s).map_err(|e| crate::Error::Parse(e.to_string()))?;
        let probe = LBRep { target: GroupKind::S3, a: r.a, b: r.b, s1: r.s1, s2: r.s2 };
        let present = probe.generators();
        let Some(first) = present.first() else {
            return Err(crate::Error::Parse("representation has no matrices".into()));
        };
        for m in &present {
            if m.field() != first.field() || m.rows() != first.rows() {
                return Err(crate::Error::Parse("matrices disagree in dimension or conductor".into()));
            }
        }
        Ok(LBRep { target: r.target, ..probe })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Field;

    #[test]
    fn json_round_trip() {
        let f = Field::new(3);
        let r = LBRep::trivial(&f, 2, GroupKind::LB3);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"target":"LB3","A":{"dim":2"#));
        let back: LBRep = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        let b = LBRep::trivial(&f, 2, GroupKind::B3);
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.contains(r#""S1":null,"S2":null"#));
    }

    #[test]
    fn lenient_parse_keeps_target() {
        let f = Field::new(3);
        let b = LBRep::trivial(&f, 2, GroupKind::B3);
        let s = serde_json::to_string(&b).unwrap().replace(r#""target":"B3""#, r#""target":"LB3""#);
        assert!(serde_json::from_str::<LBRep>(&s).is_err());
        let r = LBRep::from_json_lenient(&s).unwrap();
        assert_eq!(r.target(), GroupKind::LB3);
        assert!(r.verify(GroupKind::LB3).is_err());
    }
}
