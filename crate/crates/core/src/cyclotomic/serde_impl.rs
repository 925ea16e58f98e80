use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::Field;
use super::number::{CycNum, Rational};

#[derive(Serialize, Deserialize)]
struct Repr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr { conductor: self.conductor(), coeffs: self.coeffs().iter().map(ToString::to_string).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<CycNum, D::Error> {
        let r = Repr::deserialize(d)?;
        if r.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<Rational>()
                    .map_err(|e| D::Error::custom(format!("bad rational {c:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CycNum::from_coeffs(&Field::new(r.conductor), &coeffs).map_err(D::Error::custom)
    }
}
