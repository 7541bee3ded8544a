use std::fmt;
use std::str::FromStr;

/// Inclusive integer range given as `a..b` or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub start: u32,
    pub end: u32,
}

impl IntRange {
    pub fn single(v: u32) -> Self {
        Self { start: v, end: v }
    }

    pub fn is_single(&self) -> bool {
        self.start == self.end
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u32> {
        self.start..=self.end
    }

    pub fn len(&self) -> usize {
        (self.end - self.start) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid integer {part:?} in range {s:?}"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (start, end) = (parse(a)?, parse(b.trim_start_matches('='))?);
                if start > end {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(Self { start, end })
            }
            None => parse(s).map(Self::single),
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}
