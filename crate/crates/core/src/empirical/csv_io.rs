//! CSV dialect for accounts series and ratio tables.
//!
//! Input: UTF-8, header `period,C,Y,e,pi,W`, one row per period, `#` comment
//! lines ignored. Output tables use the same dialect with six fixed decimals.

use std::io::{Read, Write};

use crate::accounts::NationalAccounts;
use crate::fmt6;

use super::series::{AccountsSeries, PeriodLabel, RatioRow};
use super::EmpiricalError;

pub const ACCOUNTS_HEADER: [&str; 6] = ["period", "C", "Y", "e", "pi", "W"];
pub const RATIO_HEADER: [&str; 7] = ["period", "beta", "rho", "omega", "gamma", "r", "c_minus_y"];

fn parse_decimal(field: &str, name: &str, line: u64) -> Result<f64, EmpiricalError> {
    let value: f64 = field.parse().map_err(|_| EmpiricalError::Parse {
        line,
        message: format!("{name}: {field:?} is not a decimal number"),
    })?;
    if !value.is_finite() {
        return Err(EmpiricalError::Parse {
            line,
            message: format!("{name}: {field:?} is not a finite decimal"),
        });
    }
    Ok(value)
}

fn csv_error(err: csv::Error) -> EmpiricalError {
    let line = err.position().map(|p| p.line()).unwrap_or(0);
    match err.into_kind() {
        csv::ErrorKind::Io(e) => EmpiricalError::Io(e),
        csv::ErrorKind::Utf8 { err, .. } => EmpiricalError::Parse {
            line,
            message: format!("invalid UTF-8: {err}"),
        },
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => EmpiricalError::Parse {
            line,
            message: format!("expected {expected_len} fields, found {len}"),
        },
        other => EmpiricalError::Parse {
            line,
            message: format!("{other:?}"),
        },
    }
}

pub fn read_accounts_csv<R: Read>(source: R) -> Result<AccountsSeries, EmpiricalError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(source);

    let header = reader.headers().map_err(csv_error)?.clone();
    if header.iter().ne(ACCOUNTS_HEADER.iter().copied()) {
        let line = header.position().map(|p| p.line()).unwrap_or(1);
        return Err(EmpiricalError::Parse {
            line,
            message: format!(
                "expected header {}, found {}",
                ACCOUNTS_HEADER.join(","),
                header.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }

    let mut series = AccountsSeries::new();
    for row in reader.records() {
        let row = row.map_err(csv_error)?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        let period: PeriodLabel = row[0]
            .parse()
            .map_err(|message| EmpiricalError::Parse { line, message })?;
        let mut values = [0.0; 5];
        for (i, v) in values.iter_mut().enumerate() {
            *v = parse_decimal(&row[i + 1], ACCOUNTS_HEADER[i + 1], line)?;
        }
        let [c, y, e, pi, w] = values;
        let accounts = NationalAccounts::new(c, y, e, pi, w)
            .map_err(|source| EmpiricalError::Validation { line, source })?;
        series.push(period, accounts, line)?;
    }
    Ok(series)
}

pub fn write_accounts_csv<W: Write>(series: &AccountsSeries, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", ACCOUNTS_HEADER.join(","))?;
    for (period, acc) in series.records() {
        writeln!(
            out,
            "{period},{},{},{},{},{}",
            fmt6(acc.consumption()),
            fmt6(acc.income()),
            fmt6(acc.earnings()),
            fmt6(acc.profit()),
            fmt6(acc.wealth()),
        )?;
    }
    Ok(())
}

/// Writes the ratio table. Share columns are left empty for zero-income rows.
pub fn write_ratio_csv<W: Write>(rows: &[RatioRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", RATIO_HEADER.join(","))?;
    for row in rows {
        let (beta, rho) = match &row.shares {
            Ok(s) => (fmt6(s.beta), fmt6(s.rho)),
            Err(_) => (String::new(), String::new()),
        };
        writeln!(
            out,
            "{},{beta},{rho},{},{},{},{}",
            row.period,
            fmt6(row.rates.omega),
            fmt6(row.rates.gamma),
            fmt6(row.rates.r),
            fmt6(row.c_minus_y),
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::accounts::AccountsError;

    fn read(text: &str) -> Result<AccountsSeries, EmpiricalError> {
        read_accounts_csv(text.as_bytes())
    }

    #[test]
    fn happy_path_with_comments() {
        let s = read("# test data\nperiod,C,Y,e,pi,W\n1958,1.25,1.25,1,0.25,5\n# gap\n1959, 1.25 ,1.25,1,0.25,5\n")
            .unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.records()[1].0, PeriodLabel::Year(1959));
    }

    #[test]
    fn zero_wealth_names_the_line() {
        let err = read("period,C,Y,e,pi,W\n1958,1,1,1,0,5\n1959,1,1,1,0,0\n").unwrap_err();
        match err {
            EmpiricalError::Validation { line, source } => {
                assert_eq!(line, 3);
                assert_eq!(source, AccountsError::NonPositiveWealth(0.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_period_is_an_order_error() {
        let err = read("period,C,Y,e,pi,W\n1958,1,1,1,0,5\n1958,1,1,1,0,5\n").unwrap_err();
        assert!(matches!(err, EmpiricalError::Order { line: 3, .. }));
    }

    #[test]
    fn malformed_rows_are_parse_errors() {
        for (text, expected_line) in [
            ("period,C,Y,e,pi,W\n1958,1,1,1,0\n", 2),
            ("period,C,Y,e,pi,W\n1958,1,x,1,0,5\n", 2),
            ("period,C,Y,e,pi,W\n1958,1,1,1,0,5\nfoo,1,1,1,0,5\n", 3),
            ("period,C,Y,e,pi,W\n1958,1,1,1,0,inf\n", 2),
            ("period,C,Y,e,profit,W\n1958,1,1,1,0,5\n", 1),
        ] {
            match read(text) {
                Err(EmpiricalError::Parse { line, .. }) => assert_eq!(line, expected_line, "{text}"),
                other => panic!("{text}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn negative_flow_is_a_validation_error() {
        let err = read("period,C,Y,e,pi,W\n2000Q1,1,1,-1,0,5\n").unwrap_err();
        assert!(matches!(err, EmpiricalError::Validation { line: 2, .. }));
    }

    #[test]
    fn ratio_table_format() {
        let s = read("period,C,Y,e,pi,W\n1958,1.25,1.25,1,0.25,5\n1959,1,0,0,0,2\n").unwrap();
        let mut out = Vec::new();
        write_ratio_csv(&super::super::ratio_series(&s), &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "period,beta,rho,omega,gamma,r,c_minus_y\n\
             1958,0.800000,0.200000,0.250000,0.250000,0.050000,0.000000\n\
             1959,,,0.500000,0.000000,0.000000,1.000000\n"
        );
    }
}
