use std::str::FromStr;

use crate::error::{Error, Result};

/// Size limits that turn runaway computations into errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest number of candidate generators one intersection or product
    /// step may produce before minimalization.
    pub generators: usize,
    /// Largest lcm lattice the Betti engines will build.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            generators: 200_000,
            lattice: 100_000,
        }
    }
}

impl FromStr for Caps {
    type Err = Error;

    /// Parses `generators=N,lattice=M`; either key may be omitted and keeps
    /// its default.
    fn from_str(s: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::Parameter(format!("expected key=value in caps, found '{part}'"))
            })?;
            let value: usize = value
                .trim()
                .parse()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| {
                    Error::Parameter(format!("cap '{part}' must be a positive integer"))
                })?;
            match key.trim() {
                "generators" => caps.generators = value,
                "lattice" => caps.lattice = value,
                other => return Err(Error::Parameter(format!("unknown cap '{other}'"))),
            }
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_caps() {
        assert_eq!("".parse::<Caps>().unwrap(), Caps::default());
        let c: Caps = "lattice=50, generators=7".parse().unwrap();
        assert_eq!(
            c,
            Caps {
                generators: 7,
                lattice: 50
            }
        );
        assert!("lattice=0".parse::<Caps>().is_err());
        assert!("speed=3".parse::<Caps>().is_err());
        assert!("lattice".parse::<Caps>().is_err());
    }
}
