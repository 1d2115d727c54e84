//! JSON forms of the core values.
//!
//! * `SymFunc`: `{"basis":"s","maxdeg":4,"terms":[{"shape":[2,1],"coeff":"q + 1"}]}`
//! * `VElem`: `{"level":1,"terms":[{"y":[1],"sym":{...}}]}`, coefficients in the Schur basis
//! * `CornerWeight`: `[{"corner":[1,2],"weight":"1/t"}]`
//!
//! Scalars are strings in the grammar accepted by [`QtScalar`]'s `FromStr`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::charfn::CornerWeight;
use crate::dpa::VElem;
use crate::qtring::QtScalar;
use crate::shapes::Partition;
use crate::symfn::{Basis, SymFunc};

#[derive(Serialize, Deserialize)]
struct SymTerm {
    shape: Partition,
    coeff: QtScalar,
}

#[derive(Serialize, Deserialize)]
struct SymRepr {
    basis: Basis,
    #[serde(default)]
    maxdeg: Option<usize>,
    terms: Vec<SymTerm>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms().iter().map(|(p, c)| SymTerm { shape: p.clone(), coeff: c.clone() }).collect();
        SymRepr { basis: self.basis(), maxdeg: Some(self.max_degree()), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SymRepr::deserialize(d)?;
        let f = SymFunc::from_terms(r.basis, r.terms.into_iter().map(|t| (t.shape, t.coeff)));
        match r.maxdeg {
            Some(m) => f.with_max_degree(m).map_err(D::Error::custom),
            None => Ok(f),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VTerm {
    y: Vec<u32>,
    sym: SymFunc,
}

#[derive(Serialize, Deserialize)]
struct VRepr {
    level: usize,
    terms: Vec<VTerm>,
}

impl Serialize for VElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms().iter().map(|(e, f)| VTerm { y: e.clone(), sym: f.to_basis(Basis::S) }).collect();
        VRepr { level: self.level(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = VRepr::deserialize(d)?;
        VElem::from_terms(r.level, r.terms.into_iter().map(|t| (t.y, t.sym))).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    corner: (usize, usize),
    weight: QtScalar,
}

impl Serialize for CornerWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<WeightEntry> = self.0.iter().map(|(&c, w)| WeightEntry { corner: c, weight: w.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CornerWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<WeightEntry>::deserialize(d)?;
        Ok(CornerWeight(v.into_iter().map(|e| (e.corner, e.weight)).collect()))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::qt;

    #[test]
    fn symfunc_shape() {
        let f = SymFunc::s(&[1]);
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"basis":"s","maxdeg":1,"terms":[{"shape":[1],"coeff":"1"}]}"#);
        let g: SymFunc = serde_json::from_str(r#"{"basis":"s","maxdeg":4,"terms":[{"shape":[2,1],"coeff":"q+1"}]}"#).unwrap();
        assert_eq!(g, SymFunc::s(&[2, 1]).scale(&qt("q + 1")));
        assert_eq!(g.max_degree(), 4);
        let back: SymFunc = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn velem_round_trip() {
        let v = VElem::monomial(vec![1], SymFunc::s(&[1]));
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with(r#"{"level":1,"terms":[{"y":[1],"sym":{"basis":"s""#));
        let back: VElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<VElem>(r#"{"level":2,"terms":[{"y":[1],"sym":{"basis":"s","terms":[]}}]}"#).is_err());
    }

    #[test]
    fn weights_round_trip() {
        let mut w = CornerWeight::ones();
        w.set((1, 2), qt("1/t"));
        let back: CornerWeight = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(back, w);
    }
}
