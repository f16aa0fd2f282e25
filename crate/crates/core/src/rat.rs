//! Exact rational arithmetic carrier.
//!
//! Everything geometric in this crate is decided exactly; there is no
//! floating point anywhere. Rationals serialize as `"p/q"` (plain `"p"`
//! when the denominator is one).

use alloc::string::ToString;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

pub type Rat = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

/// Parse `"p/q"` or `"p"` with arbitrary-precision integers.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>().map_err(|_| Error::Parse {
            message: alloc::format!("invalid integer \"{t}\""),
        })
    };
    let r = match s.split_once('/') {
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Parse { message: String::from("zero denominator") });
            }
            Rat::new(parse_int(p)?, denom)
        }
        None => Rat::from_integer(parse_int(s)?),
    };
    Ok(r)
}

/// Canonical `"p/q"` / `"p"` form.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}
