//! Canonical serialized polynomial format.
//!
//! ```json
//! {"schema": "leviflat.poly/1", "n": 2,
//!  "terms": [{"z_exponents": [1, 0], "wbar_exponents": [0, 1],
//!             "re_num": "1", "re_den": "2", "im_num": "0", "im_den": "1"}]}
//! ```
//!
//! Numerators and denominators are decimal strings so that big integers survive.
//! Readers accept terms in any order; writers emit descending graded-lex order
//! with reduced fractions and positive denominators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::gaussian::GaussianRational;
use super::monomial::MultiIndex;
use super::sparse::CPoly;
use crate::error::{Error, Result};

pub const POLY_SCHEMA: &str = "leviflat.poly/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub z_exponents: Vec<u32>,
    pub wbar_exponents: Vec<u32>,
    pub re_num: String,
    pub re_den: String,
    pub im_num: String,
    pub im_den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub schema: String,
    pub n: usize,
    pub terms: Vec<TermRecord>,
}

impl From<&CPoly> for PolyRecord {
    fn from(p: &CPoly) -> Self {
        let n = p.n();
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| {
                let (z, w) = m.split(n);
                TermRecord {
                    z_exponents: z.to_vec(),
                    wbar_exponents: w.to_vec(),
                    re_num: c.re.numer().to_string(),
                    re_den: c.re.denom().to_string(),
                    im_num: c.im.numer().to_string(),
                    im_den: c.im.denom().to_string(),
                }
            })
            .collect();
        PolyRecord { schema: POLY_SCHEMA.to_string(), n, terms }
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Input(format!("not an integer: {s:?}")))
}

fn parse_frac(num: &str, den: &str) -> Result<BigRational> {
    let d = parse_int(den)?;
    if d.is_zero() {
        return Err(Error::Input("zero denominator".into()));
    }
    Ok(BigRational::new(parse_int(num)?, d))
}

impl TryFrom<&PolyRecord> for CPoly {
    type Error = Error;

    fn try_from(r: &PolyRecord) -> Result<CPoly> {
        if r.schema != POLY_SCHEMA {
            return Err(Error::Input(format!("unexpected schema tag {:?}", r.schema)));
        }
        let mut p = CPoly::zero(r.n);
        for t in &r.terms {
            if t.z_exponents.len() != r.n || t.wbar_exponents.len() != r.n {
                return Err(Error::Input(format!("exponent vectors must have length {}", r.n)));
            }
            let c = GaussianRational::new(parse_frac(&t.re_num, &t.re_den)?, parse_frac(&t.im_num, &t.im_den)?);
            p.add_term(MultiIndex::join(&t.z_exponents, &t.wbar_exponents), c);
        }
        Ok(p)
    }
}

pub fn to_json(p: &CPoly) -> String {
    serde_json::to_string_pretty(&PolyRecord::from(p)).expect("record serializes")
}

pub fn from_json(s: &str) -> Result<CPoly> {
    let r: PolyRecord = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
    CPoly::try_from(&r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::sparse::Var;

    #[test]
    fn golden_record() {
        let half = GaussianRational::from_fracs(1, 2, 0, 1);
        let p = (&(&CPoly::var(2, Var::Z(0)) * &CPoly::var(2, Var::WBar(1)))
            + &(&CPoly::var(2, Var::Z(1)) * &CPoly::var(2, Var::WBar(0))))
            .scale(&half);
        let rec = PolyRecord::from(&p);
        assert_eq!(rec.terms.len(), 2);
        assert_eq!(rec.terms[0].z_exponents, vec![1, 0]);
        assert_eq!(rec.terms[0].wbar_exponents, vec![0, 1]);
        assert_eq!((rec.terms[0].re_num.as_str(), rec.terms[0].re_den.as_str()), ("1", "2"));
        assert_eq!((rec.terms[0].im_num.as_str(), rec.terms[0].im_den.as_str()), ("0", "1"));
        assert_eq!(from_json(&to_json(&p)).unwrap(), p);
    }

    #[test]
    fn order_independent_read() {
        let mut rec = PolyRecord::from(&(&CPoly::var(2, Var::Z(0)) + &CPoly::var(2, Var::WBar(1))));
        let p1 = CPoly::try_from(&rec).unwrap();
        rec.terms.reverse();
        assert_eq!(CPoly::try_from(&rec).unwrap(), p1);
    }

    #[test]
    fn rejects_bad_records() {
        assert!(from_json(r#"{"schema":"x","n":1,"terms":[]}"#).is_err());
        let bad = r#"{"schema":"leviflat.poly/1","n":1,"terms":[{"z_exponents":[1],"wbar_exponents":[0],"re_num":"1","re_den":"0","im_num":"0","im_den":"1"}]}"#;
        assert!(from_json(bad).is_err());
    }
}
