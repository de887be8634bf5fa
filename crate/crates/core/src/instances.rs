//! Reproducible benchmark instances and CSV instance files.
//!
//! Coordinates and weights come from three multiplicative congruential
//! streams modulo 100000, `r' = λ·r mod 100000`. The seed itself is the first
//! value of each stream. Point `i` gets `x = rx/10000`, `y = ry/10000` and
//! `w = 1 + rw/100000`.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::apollonius::WeightedPoint;
use crate::geom::Point;
use crate::mesh::ConvexPolygon;
use crate::objective::Instance;
use crate::{Error, Result};

pub const MODULUS: u64 = 100_000;
pub const DEFAULT_MULTIPLIER: u64 = 12_219;
pub const X_SEED: u64 = 97;
pub const Y_SEED: u64 = 367;
pub const W_SEED: u64 = 12_347;
/// Side of the square region `[0, SQUARE_SIDE]²`.
pub const SQUARE_SIDE: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorState {
    r: u64,
    multiplier: u64,
}

impl GeneratorState {
    pub fn new(seed: u64, multiplier: u64) -> Result<Self> {
        if seed == 0 || seed >= MODULUS {
            return Err(Error::Generator(format!("seed {seed} outside (0, {MODULUS})")));
        }
        if multiplier % 2 == 0 || multiplier % 5 == 0 {
            return Err(Error::Generator(format!(
                "multiplier {multiplier} must be odd and not divisible by 5"
            )));
        }
        Ok(Self { r: seed, multiplier })
    }

    pub fn value(&self) -> u64 {
        self.r
    }

    /// Advances the stream by one step.
    pub fn next_state(&self) -> Result<Self> {
        let r = (self.multiplier * self.r) % MODULUS;
        if r == 0 {
            return Err(Error::Generator(format!("stream reached zero after {}", self.r)));
        }
        Ok(Self { r, multiplier: self.multiplier })
    }

    /// The current value followed by every subsequent one.
    pub fn stream(self) -> impl Iterator<Item = u64> {
        std::iter::successors(Some(self), |s| s.next_state().ok()).map(|s| s.r)
    }
}

/// `lcg_next` as a free function.
pub fn lcg_next(state: GeneratorState) -> Result<GeneratorState> {
    state.next_state()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionSpec {
    Hull,
    /// `[0, 10]²`.
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub n: usize,
    pub x_seed: u64,
    pub y_seed: u64,
    pub w_seed: u64,
    pub multiplier: u64,
    pub region: RegionSpec,
}

impl InstanceSpec {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            x_seed: X_SEED,
            y_seed: Y_SEED,
            w_seed: W_SEED,
            multiplier: DEFAULT_MULTIPLIER,
            region: RegionSpec::Hull,
        }
    }

    pub fn with_region(mut self, region: RegionSpec) -> Self {
        self.region = region;
        self
    }
}

/// The first `n` generated demand points, with ids starting at 1.
pub fn generate_points(spec: &InstanceSpec) -> Result<Vec<WeightedPoint>> {
    let xs = GeneratorState::new(spec.x_seed, spec.multiplier)?.stream();
    let ys = GeneratorState::new(spec.y_seed, spec.multiplier)?.stream();
    let ws = GeneratorState::new(spec.w_seed, spec.multiplier)?.stream();
    let points: Vec<WeightedPoint> = xs
        .zip(ys)
        .zip(ws)
        .take(spec.n)
        .enumerate()
        .map(|(i, ((x, y), w))| WeightedPoint {
            id: i + 1,
            location: Point::new(x as f64 / 10_000.0, y as f64 / 10_000.0),
            weight: (100_000 + w) as f64 / 100_000.0,
        })
        .collect();
    if points.len() < spec.n {
        return Err(Error::Generator("stream terminated early".into()));
    }
    Ok(points)
}

/// Builds the generated instance with its feasible region.
pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    if spec.n < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: spec.n });
    }
    let points = generate_points(spec)?;
    match spec.region {
        RegionSpec::Hull => Instance::with_hull(points),
        RegionSpec::Square => Instance::with_region(points, ConvexPolygon::square(0.0, SQUARE_SIDE)?),
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    id: usize,
    x: f64,
    y: f64,
    w: f64,
}

/// Parses `id,x,y,w` rows (with header).
pub fn read_points<R: Read>(reader: R) -> Result<Vec<WeightedPoint>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| csv_error(&e))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["id", "x", "y", "w"] {
        return Err(Error::Parse { line: 1, message: "expected header id,x,y,w".into() });
    }
    let mut points = Vec::new();
    for row in rdr.deserialize::<Row>() {
        let row = row.map_err(|e| csv_error(&e))?;
        let line = points.len() as u64 + 2;
        let p = WeightedPoint::new(row.id, Point::new(row.x, row.y), row.w)
            .map_err(|e| Error::Parse { line, message: e.to_string() })?;
        points.push(p);
    }
    Ok(points)
}

fn csv_error(e: &csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    let message = match e.kind() {
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => {
            format!("expected {expected_len} columns, found {len}")
        }
        csv::ErrorKind::Deserialize { err, .. } => err.to_string(),
        _ => e.to_string(),
    };
    Error::Parse { line, message }
}

/// Writes points as `id,x,y,w` with shortest round-trip decimals.
pub fn write_points<W: Write>(points: &[WeightedPoint], writer: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
    for p in points {
        wtr.serialize(Row { id: p.id, x: p.location.x, y: p.location.y, w: p.weight })
            .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    wtr.flush()?;
    Ok(())
}

/// Reads an instance file; the region is the convex hull of its points.
pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let file = std::fs::File::open(path)?;
    Instance::with_hull(read_points(std::io::BufReader::new(file))?)
}

pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_points(inst.points(), std::io::BufWriter::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcg_examples() {
        let s = GeneratorState::new(97, DEFAULT_MULTIPLIER).unwrap();
        let s = lcg_next(s).unwrap();
        assert_eq!(s.value(), 85243);
        assert_eq!(lcg_next(s).unwrap().value(), 84217);
        let s = GeneratorState::new(367, DEFAULT_MULTIPLIER).unwrap();
        assert_eq!(s.next_state().unwrap().value(), 84373);
    }

    #[test]
    fn invalid_states() {
        assert!(GeneratorState::new(0, DEFAULT_MULTIPLIER).is_err());
        assert!(GeneratorState::new(100_000, DEFAULT_MULTIPLIER).is_err());
        assert!(GeneratorState::new(97, 12_218).is_err());
        assert!(GeneratorState::new(97, 12_215).is_err());
    }

    #[test]
    fn first_and_thirtieth_points() {
        let pts = generate_points(&InstanceSpec::new(1)).unwrap();
        assert_eq!(pts[0].location, Point::new(0.0097, 0.0367));
        assert_eq!(pts[0].weight, 1.12347);
        assert_eq!(pts[0].id, 1);
        let pts = generate_points(&InstanceSpec::new(30)).unwrap();
        assert_eq!(pts[29].location, Point::new(2.9963, 4.4293));
        assert_eq!(pts[29].weight, 1.72713);
    }

    #[test]
    fn generate_requires_three_points() {
        assert!(matches!(generate(&InstanceSpec::new(2)), Err(Error::TooFewPoints { .. })));
    }

    #[test]
    fn parse_row() {
        let pts = read_points("id,x,y,w\n1,0.0097,0.0367,1.12347\n".as_bytes()).unwrap();
        assert_eq!(pts, vec![WeightedPoint::new(1, Point::new(0.0097, 0.0367), 1.12347).unwrap()]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = read_points("id,x,y,w\n1,0,0,1\n2,1,1,0\n".as_bytes()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = read_points("id,x,y,w\n1,0,0,1\n2,1,1\n".as_bytes()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = read_points("id,x,y,w\n1,0,zero,1\n".as_bytes()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = read_points("a,b\n".as_bytes()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e:?}");
    }
}
