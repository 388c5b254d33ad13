use num_bigint::BigInt;
use num_rational::BigRational;

use super::decimal::{render_decimal_directed, Rounding};
use super::AnalysisError;
use crate::freeprob::{cumulants_to_moments, nu_cumulants};
use crate::nc_lattice::catalan;

/// Rows required by [`build_table1`].
pub const TABLE1_ROWS: usize = 24;

/// One row of the table of even cumulants and moments of `ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub n: usize,
    /// `κ_{2n}(ν) = m^{(1)}_n`.
    pub cumulant: BigInt,
    /// `ν(X^{2n})`.
    pub moment: BigInt,
    /// `moment / C_n²` to 5 places with [`Rounding::GuardDigitHalfDown`].
    pub ratio: String,
    pub ratio_exact: BigRational,
}

/// Moments of `ν` and their ratio to `C_n²` from the meander numbers
/// `m^{(1)}_1, m^{(1)}_2, …` (at least [`TABLE1_ROWS`] of them).
pub fn build_table1(meanders: &[BigInt]) -> Result<Vec<Table1Row>, AnalysisError> {
    if meanders.len() < TABLE1_ROWS {
        return Err(AnalysisError::TableTooShort {
            needed: TABLE1_ROWS,
            got: meanders.len(),
        });
    }
    let moments = cumulants_to_moments(&nu_cumulants(meanders)?);
    let mut rows = Vec::with_capacity(meanders.len());
    for (i, cumulant) in meanders.iter().enumerate() {
        let n = i + 1;
        let moment = moments.term(2 * n);
        if !moment.is_integer() {
            return Err(AnalysisError::NonIntegerMoment(2 * n));
        }
        let c = BigInt::from(catalan(n));
        let ratio_exact = &moment / BigRational::from_integer(&c * &c);
        rows.push(Table1Row {
            n,
            cumulant: cumulant.clone(),
            moment: moment.to_integer(),
            ratio: render_decimal_directed(&ratio_exact, 5, Rounding::GuardDigitHalfDown),
            ratio_exact,
        });
    }
    Ok(rows)
}

/// CSV with header `n,cumulant,moment,ratio`.
pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::from("n,cumulant,moment,ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n, r.cumulant, r.moment, r.ratio
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::meander_numbers;

    #[test]
    fn selected_rows() {
        let rows = build_table1(&meander_numbers()).unwrap();
        assert_eq!(rows.len(), 24);
        assert_eq!(
            (rows[3].moment.clone(), rows[3].ratio.as_str()),
            (192.into(), "0.97959")
        );
        assert_eq!(rows[11].moment.to_string(), "25101780538");
        assert_eq!(rows[23].moment.to_string(), "344671815256362419882958");
        assert_eq!(rows[23].ratio, "0.20715");
        // half up would give 0.31927 and 0.26846 here
        assert_eq!(
            (rows[18].ratio.as_str(), rows[20].ratio.as_str()),
            ("0.31926", "0.26845")
        );
        assert!(table1_csv(&rows[..1]).starts_with("n,cumulant,moment,ratio\n1,1,1,1.00000\n"));
    }

    #[test]
    fn short_table_rejected() {
        let short = vec![BigInt::from(1); 5];
        assert_eq!(
            build_table1(&short),
            Err(AnalysisError::TableTooShort { needed: 24, got: 5 })
        );
    }
}
