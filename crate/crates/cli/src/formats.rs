//! JSON interchange: rationals as `"p/q"` strings (integers accepted on
//! input), curve files, braid files, traces and reports.

use bigonkit::bigon::{IsotopyStep, StepKind, StraighteningTrace};
use bigonkit::braid::{PureBraid, Strand};
use bigonkit::curves::{PLLoop, PLPath, PunctureSet};
use bigonkit::geom::{Point, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational number in transit: serialized as `"p/q"`, accepted as
/// `"p/q"`, `"p"`, or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        parse_rational_value(&v).map(Rat).map_err(D::Error::custom)
    }
}

pub fn parse_rational_value(v: &serde_json::Value) -> Result<Rational, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(bigonkit::geom::rat)
            .ok_or_else(|| format!("number {n} is not an exact integer")),
        serde_json::Value::String(s) => parse_rational_str(s),
        other => Err(format!("expected a rational, got {other}")),
    }
}

pub fn parse_rational_str(s: &str) -> Result<Rational, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("bad integer `{t}`: {e}"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(String::from("zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// `[x, y]` with exact coordinates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonPoint(pub Rat, pub Rat);

impl JsonPoint {
    pub fn to_point(&self) -> Point {
        Point::new(self.0 .0.clone(), self.1 .0.clone())
    }

    pub fn of(p: &Point) -> JsonPoint {
        JsonPoint(Rat(p.x.clone()), Rat(p.y.clone()))
    }
}

pub fn points_of(ps: &[Point]) -> Vec<JsonPoint> {
    ps.iter().map(JsonPoint::of).collect()
}

pub fn to_points(ps: &[JsonPoint]) -> Vec<Point> {
    ps.iter().map(JsonPoint::to_point).collect()
}

/// The curve file: punctures plus named paths.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveFile {
    #[serde(default)]
    pub punctures: Vec<JsonPoint>,
    #[serde(default)]
    pub paths: Vec<JsonPath>,
    /// Optional constraint point sets for straightening commands.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub c_points: Vec<JsonPoint>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub c_prime_points: Vec<JsonPoint>,
    /// Optional pinned basepoint for loop straightening.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pin: Option<JsonPoint>,
}

/// One curve in a curve file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonPath {
    pub id: String,
    pub closed: bool,
    pub vertices: Vec<JsonPoint>,
}

impl CurveFile {
    pub fn punctures(&self) -> Result<PunctureSet, String> {
        PunctureSet::new(to_points(&self.punctures)).map_err(|e| e.to_string())
    }

    pub fn find(&self, id: &str) -> Result<&JsonPath, String> {
        self.paths
            .iter()
            .find(|p| p.id == id)
            .ok_or_else(|| format!("no path with id `{id}` in the input"))
    }

    pub fn open_path(&self, id: &str) -> Result<PLPath, String> {
        let p = self.find(id)?;
        if p.closed {
            return Err(format!("path `{id}` must be open"));
        }
        PLPath::new(to_points(&p.vertices)).map_err(|e| e.to_string())
    }

    pub fn closed_loop(&self, id: &str) -> Result<PLLoop, String> {
        let p = self.find(id)?;
        if !p.closed {
            return Err(format!("path `{id}` must be closed"));
        }
        PLLoop::new(to_points(&p.vertices)).map_err(|e| e.to_string())
    }
}

/// One strand of a braid file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonStrand {
    pub times: Vec<Rat>,
    pub points: Vec<JsonPoint>,
}

/// The braid file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidFile {
    pub strands: Vec<JsonStrand>,
    /// Optional strand partition for the connected-set criterion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<usize>>>,
}

impl BraidFile {
    pub fn to_braid(&self) -> Result<PureBraid, bigonkit::braid::BraidError> {
        let strands = self
            .strands
            .iter()
            .map(|s| {
                Strand::new(
                    s.times.iter().map(|t| t.0.clone()).collect(),
                    to_points(&s.points),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        PureBraid::new(strands)
    }

}

/// Serialized straightening trace.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonTrace {
    pub steps: Vec<JsonStep>,
    pub component_counts: Vec<usize>,
    pub final_curve: Vec<JsonPoint>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonStep {
    pub kind: String,
    pub support: Vec<Vec<JsonPoint>>,
    pub before: Vec<JsonPoint>,
    pub after: Vec<JsonPoint>,
}

pub fn trace_to_json(trace: &StraighteningTrace) -> JsonTrace {
    JsonTrace {
        steps: trace.steps.iter().map(step_to_json).collect(),
        component_counts: trace.component_counts.clone(),
        final_curve: points_of(&trace.final_curve),
    }
}

fn step_to_json(step: &IsotopyStep) -> JsonStep {
    JsonStep {
        kind: String::from(match step.kind {
            StepKind::Perturb => "perturb",
            StepKind::BigonRemoval => "bigon-removal",
            StepKind::FinalCoincidence => "final-coincidence",
        }),
        support: step.support.iter().map(|p| points_of(p)).collect(),
        before: points_of(&step.before),
        after: points_of(&step.after),
    }
}

/// The machine-readable error object for exit code 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorObject {
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

impl ErrorObject {
    pub fn new(kind: &str) -> ErrorObject {
        ErrorObject {
            error: String::from(kind),
            detail: None,
            words: None,
            t: None,
            i: None,
            j: None,
        }
    }
}
