use std::fs;
use std::path::{Path, PathBuf};

use loopbraid::LBRep;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// A failed run: the exit code and a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub const RELATIONS_FAIL: u8 = 1;
pub const BAD_INPUT: u8 = 2;
pub const NO_EXTENSION: u8 = 3;

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }

    pub fn input(message: impl ToString) -> Failure {
        Failure::new(BAD_INPUT, message.to_string())
    }
}

impl From<loopbraid::Error> for Failure {
    fn from(e: loopbraid::Error) -> Failure {
        Failure::input(e)
    }
}

pub type Outcome<T> = Result<T, Failure>;

/// A representation file together with the hash of its bytes.
pub struct Input {
    pub rep: LBRep,
    pub sha256: String,
}

/// Reads either a bare representation or a report carrying one under
/// `representation`.
pub fn read_rep(path: &Path) -> Outcome<Input> {
    let bytes = fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let text = std::str::from_utf8(&bytes).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let inner = match value.get("representation") {
        Some(r) => r.to_string(),
        None => text.to_string(),
    };
    let rep = LBRep::from_json_lenient(&inner).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Ok(Input { rep, sha256 })
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    version: &'static str,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_sha256: Option<&'a str>,
    #[serde(flatten)]
    body: &'a T,
}

/// Writes `body` wrapped with the toolkit version and input hash.
pub fn emit<T: Serialize>(command: &str, input: Option<&Input>, body: &T, out: Option<&PathBuf>) -> Outcome<()> {
    let env = Envelope { version: env!("CARGO_PKG_VERSION"), command, input_sha256: input.map(|i| i.sha256.as_str()), body };
    write_json(&env, out)
}

pub fn write_json<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Outcome<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(Failure::input)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
