//! Goeritz matrices from checkerboard incidence data.
//!
//! A [`Diagram`] lists, for each crossing, the two white regions meeting
//! there and the crossing's sign `η`. Region 0 is the deleted region.
//!
//! Text format:
//!
//! ```text
//! # comment
//! regions 4
//! 0 1 +
//! 1 2 -
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::linalg::SymMatrix;
use crate::moves::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub a: usize,
    pub b: usize,
    pub eta: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    region_count: usize,
    crossings: Vec<Crossing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: region {region} out of range (regions 0..{count})")]
    RegionOutOfRange {
        line: usize,
        region: usize,
        count: usize,
    },
    #[error("line {line}: crossing joins region {region} to itself")]
    SelfPairedCrossing { line: usize, region: usize },
}

impl Diagram {
    /// Validates labels; line numbers in errors are 1-based crossing indices.
    pub fn new(region_count: usize, crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if region_count == 0 {
            return Err(DiagramError::Parse {
                line: 0,
                msg: "a diagram needs at least one region".into(),
            });
        }
        for (i, c) in crossings.iter().enumerate() {
            check_crossing(i + 1, region_count, c)?;
        }
        Ok(Diagram {
            region_count,
            crossings,
        })
    }

    pub fn region_count(&self) -> usize {
        self.region_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }
}

fn check_crossing(line: usize, count: usize, c: &Crossing) -> Result<(), DiagramError> {
    for region in [c.a, c.b] {
        if region >= count {
            return Err(DiagramError::RegionOutOfRange {
                line,
                region,
                count,
            });
        }
    }
    if c.a == c.b {
        return Err(DiagramError::SelfPairedCrossing { line, region: c.a });
    }
    Ok(())
}

/// Parses the diagram text format.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let mut region_count: Option<usize> = None;
    let mut crossings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some(count) = region_count else {
            match fields.as_slice() {
                ["regions", n] => {
                    let n: usize = n.parse().map_err(|_| DiagramError::Parse {
                        line,
                        msg: format!("bad region count '{}'", n),
                    })?;
                    if n == 0 {
                        return Err(DiagramError::Parse {
                            line,
                            msg: "a diagram needs at least one region".into(),
                        });
                    }
                    region_count = Some(n);
                    continue;
                }
                _ => {
                    return Err(DiagramError::Parse {
                        line,
                        msg: "expected header 'regions N'".into(),
                    })
                }
            }
        };
        let [a, b, s] = fields.as_slice() else {
            return Err(DiagramError::Parse {
                line,
                msg: "expected 'i j s'".into(),
            });
        };
        let region = |tok: &str| {
            tok.parse::<usize>().map_err(|_| DiagramError::Parse {
                line,
                msg: format!("bad region label '{}'", tok),
            })
        };
        let eta = match *s {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => {
                return Err(DiagramError::Parse {
                    line,
                    msg: format!("bad sign '{}' (expected + or -)", other),
                })
            }
        };
        let c = Crossing {
            a: region(a)?,
            b: region(b)?,
            eta,
        };
        check_crossing(line, count, &c)?;
        crossings.push(c);
    }

    let region_count = region_count.ok_or(DiagramError::Parse {
        line: text.lines().count().max(1),
        msg: "missing 'regions N' header".into(),
    })?;
    Ok(Diagram {
        region_count,
        crossings,
    })
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "regions {}", self.region_count)?;
        for c in &self.crossings {
            let s = match c.eta {
                Sign::Plus => "+",
                Sign::Minus => "-",
            };
            writeln!(f, "{} {} {}", c.a, c.b, s)?;
        }
        Ok(())
    }
}

/// Goeritz matrix with region 0 deleted.
///
/// Off-diagonal pre-matrix entries are `-Σ η` over crossings joining the two
/// regions; diagonal entries make every row sum to zero.
pub fn goeritz_matrix(d: &Diagram) -> SymMatrix {
    let n = d.region_count;
    let mut pre = vec![vec![0i64; n]; n];
    for c in &d.crossings {
        let eta = match c.eta {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        pre[c.a][c.b] -= eta;
        pre[c.b][c.a] -= eta;
    }
    for i in 0..n {
        let off: i64 = (0..n).filter(|&j| j != i).map(|j| pre[i][j]).sum();
        pre[i][i] = -off;
    }
    let rows: Vec<Vec<BigRational>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| BigRational::from_integer(BigInt::from(pre[i][j])))
                .collect()
        })
        .collect();
    SymMatrix::from_rows(rows).expect("pre-matrix is symmetric")
}
