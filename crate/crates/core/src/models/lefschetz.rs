//! Lefschetz numbers from traces on cohomology.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Traces on `H^0, H^2, …, H^8` and `H^1, H^3, …, H^7`; shorter lists mean
/// lower dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTraces")]
pub struct CohomologyTraces {
    even_traces: Vec<i64>,
    odd_traces: Vec<i64>,
}

#[derive(Deserialize)]
struct RawTraces {
    even_traces: Vec<i64>,
    odd_traces: Vec<i64>,
}

impl TryFrom<RawTraces> for CohomologyTraces {
    type Error = Error;
    fn try_from(r: RawTraces) -> Result<Self> {
        CohomologyTraces::new(r.even_traces, r.odd_traces)
    }
}

impl CohomologyTraces {
    pub fn new(even_traces: Vec<i64>, odd_traces: Vec<i64>) -> Result<Self> {
        if even_traces.len() > 5 || odd_traces.len() > 4 {
            return Err(Error::Input(format!(
                "at most 5 even and 4 odd traces, got {} and {}",
                even_traces.len(),
                odd_traces.len()
            )));
        }
        Ok(CohomologyTraces {
            even_traces,
            odd_traces,
        })
    }

    pub fn even_traces(&self) -> &[i64] {
        &self.even_traces
    }

    pub fn odd_traces(&self) -> &[i64] {
        &self.odd_traces
    }

    /// The fourfold: `τ*` trivial on `H^0, H^2, H^6, H^8`, trace 0 on `H^4`,
    /// and equal even traces `2m` on `H^3` and `H^5`.
    pub fn fano_mukai(m: i64) -> Self {
        CohomologyTraces {
            even_traces: vec![1, 1, 0, 1, 1],
            odd_traces: vec![0, 2 * m, 2 * m, 0],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzReport {
    pub lefschetz: i64,
    pub parity_ok: bool,
}

/// `L = Σ even - Σ odd` and whether `L ≡ 0 mod 4`.
pub fn lefschetz_parity(traces: &CohomologyTraces) -> LefschetzReport {
    let l = traces.even_traces.iter().sum::<i64>() - traces.odd_traces.iter().sum::<i64>();
    LefschetzReport {
        lefschetz: l,
        parity_ok: l.rem_euclid(4) == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let v = CohomologyTraces::fano_mukai(0);
        assert_eq!(v.even_traces().iter().sum::<i64>(), 4);
        let r = lefschetz_parity(&v);
        assert_eq!((r.lefschetz, r.parity_ok), (4, true));
        let p1 = CohomologyTraces::new(vec![1, 1], vec![]).unwrap();
        let r = lefschetz_parity(&p1);
        assert_eq!((r.lefschetz, r.parity_ok), (2, false));
        // two disjoint rational curves
        assert_eq!(2 + 2, lefschetz_parity(&v).lefschetz);
        assert!(CohomologyTraces::new(vec![0; 6], vec![]).is_err());
    }

    #[test]
    fn parses_and_validates() {
        let t: CohomologyTraces =
            serde_json::from_str(r#"{"even_traces":[1,1,0,1,1],"odd_traces":[0,2,2,0]}"#).unwrap();
        assert_eq!(lefschetz_parity(&t).lefschetz, 0);
        assert!(serde_json::from_str::<CohomologyTraces>(
            r#"{"even_traces":[1,1,1,1,1,1],"odd_traces":[]}"#
        )
        .is_err());
    }

    proptest! {
        #[test]
        fn fano_mukai_parity(m in -1000i64..1000) {
            let r = lefschetz_parity(&CohomologyTraces::fano_mukai(m));
            prop_assert_eq!(r.lefschetz, 4 - 4 * m);
            prop_assert!(r.parity_ok);
        }
    }
}
