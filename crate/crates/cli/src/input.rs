//! Parsing of command-line values and input documents.

use std::fmt;

use clap::Args;

use hnstrat::{Error, Parabolic, QuotientClass, Rational, RootDatum};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Library(Error),
    Json(String),
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(Error::CapExceeded { .. }) => 69,
            CliError::Json(_) => 65,
            CliError::VerifyFailed(_) => 1,
            CliError::Input(_) | CliError::Library(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "{s}"),
            CliError::Library(e) => write!(f, "{e}"),
            CliError::Json(s) => write!(f, "malformed JSON: {s}"),
            CliError::VerifyFailed(_) => write!(f, "verification failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

/// Where the root datum comes from.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct DatumArgs {
    /// Named group: `GL:3`, `SL:2`, `PGL:4`, `SC:B3`, `Ad:G2`, `SC:A1xB2`.
    #[arg(long)]
    pub named: Option<String>,
    /// Root datum as inline JSON or a path to a JSON file.
    #[arg(long)]
    pub datum: Option<String>,
}

impl DatumArgs {
    pub fn load(&self) -> Result<RootDatum, CliError> {
        match (&self.named, &self.datum) {
            (Some(n), _) => Ok(RootDatum::parse_named(n)?),
            (None, Some(d)) => {
                let text = if d.trim_start().starts_with('{') {
                    d.clone()
                } else {
                    std::fs::read_to_string(d).map_err(|e| CliError::Input(format!("cannot read `{d}`: {e}")))?
                };
                serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))
            }
            (None, None) => unreachable!("clap enforces one of --named, --datum"),
        }
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    t.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|_| CliError::Input(format!("`{x}` is not an integer in `{s}`"))))
        .collect()
}

/// `B`/`none`/empty for the Borel, `G`/`all` for the whole group, or a list of indices.
pub fn parse_parabolic(rd: &RootDatum, s: &str) -> Result<Parabolic, CliError> {
    let t = s.trim();
    match t {
        "" | "B" | "none" => Ok(Parabolic::BOREL),
        "G" | "all" => Ok(rd.full()),
        _ => {
            let idx = parse_ints(t)?
                .into_iter()
                .map(|x| usize::try_from(x).map_err(|_| CliError::Input(format!("negative simple index {x}"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Parabolic::checked(idx, rd.num_simple())?)
        }
    }
}

/// A class as text (`3,0`, `(1,0)[1]`) or as a JSON object.
pub fn parse_class(s: &str) -> Result<QuotientClass, CliError> {
    if s.trim_start().starts_with('{') {
        serde_json::from_str(s).map_err(|e| CliError::Json(e.to_string()))
    } else {
        Ok(s.parse()?)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Ok(hnstrat::rational::parse(s)?)
}
