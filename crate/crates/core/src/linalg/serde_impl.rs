use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::CMatrix;
use crate::cyclotomic::{CycNum, Field};

#[derive(Serialize, Deserialize)]
struct Repr {
    dim: usize,
    conductor: u32,
    entries: Vec<Vec<CycNum>>,
}

impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.is_square() {
            return Err(serde::ser::Error::custom("only square matrices serialize"));
        }
        Repr { dim: self.rows(), conductor: self.conductor(), entries: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<CMatrix, D::Error> {
        let r = Repr::deserialize(d)?;
        if r.entries.len() != r.dim || r.entries.iter().any(|row| row.len() != r.dim) {
            return Err(D::Error::custom(format!("entries must be {0}x{0}", r.dim)));
        }
        if r.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        CMatrix::from_rows(&Field::new(r.conductor), r.entries).map_err(D::Error::custom)
    }
}
