use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a colored Schröder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Up-step carrying a color in `1..d`.
    Up(u32),
    Down,
    /// Level step; counts as length 2.
    Level,
}

/// A Schröder path with colored up-steps: equal numbers of up and down steps,
/// never dipping below the axis. Serialized as space-separated tokens
/// `U<c>`, `D`, `L`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ColoredSchroderPath {
    steps: Vec<Step>,
}

impl ColoredSchroderPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up(_) => height += 1,
                Step::Down => height -= 1,
                Step::Level => {}
            }
            if height < 0 {
                return Err(Error::Parse(format!(
                    "path goes below the axis at step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::Parse(format!("path ends at height {height}")));
        }
        Ok(ColoredSchroderPath { steps })
    }

    pub fn empty() -> Self {
        ColoredSchroderPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Half the length, counting a level step as 2: the number of up and
    /// level steps.
    pub fn semilength(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| !matches!(s, Step::Down))
            .count()
    }

    /// Length with level steps counted as 2.
    pub fn length(&self) -> usize {
        2 * self.semilength()
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up(c) => write!(f, "U{c}"),
            Step::Down => f.write_str("D"),
            Step::Level => f.write_str("L"),
        }
    }
}

impl fmt::Display for ColoredSchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredSchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredSchroderPath(\"{self}\")")
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        match tok {
            "D" => Ok(Step::Down),
            "L" => Ok(Step::Level),
            _ => tok
                .strip_prefix('U')
                .and_then(|c| c.parse::<u32>().ok())
                .map(Step::Up)
                .ok_or_else(|| Error::Parse(format!("unknown path token {tok:?}"))),
        }
    }
}

impl FromStr for ColoredSchroderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Step>>>()?;
        ColoredSchroderPath::new(steps)
    }
}
