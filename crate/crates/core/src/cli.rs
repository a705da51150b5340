//! The `idealkit` command line.
//!
//! [`run`] executes one subcommand and returns the exit code together with
//! everything destined for stdout and stderr, so the binary writes its
//! output exactly once. Exit codes: 0 success, 1 usage or parse error,
//! 2 domain error, 3 resource limit.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int_ideals::{enumerate_ideals_mod_n, IntIdeal};
use crate::poly::{identifiers, PolyJson, PolyRing, Polynomial};
use crate::poly_ideals::{
    hbt_extract_univariate, ideal_equal_bounded, membership_bounded, radical_univariate, strict_chain_demo,
    IdealComparison, IdealPresentation, LeadingCoefficientIdeal, MembershipCertificate,
};
use crate::raster::{raster_plane_curve, RasterJson, Window};
use crate::rings::{Domain, RingElement};
use crate::varieties::{decompose, is_prime_vanishing_ideal, vanishing_ideal, variety, viv_closure, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "idealkit", version, about = "Exact rings, ideals and affine varieties")]
pub struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Comma-separated variable names (default: x,y,z truncated to what is used).
    #[arg(long, global = true)]
    vars: Option<String>,
    /// Coefficient domain: q, z, fp:<p> or zn:<n>.
    #[arg(long, global = true, default_value = "q")]
    field: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of a polynomial.
    Parse {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Common zeros in F_p^n of the given polynomials.
    Variety {
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Vanishing ideal of a point set such as "0,0;1,1".
    Videal {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// I(V(S)) with certificates that S lies inside it.
    Viv {
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Irreducible components of a point set.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// Whether the vanishing ideal of a point set is prime.
    PrimeCheck {
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// Bounded-degree membership of F in (G1, ..., Gk).
    Member {
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Compare two ideals by mutual bounded membership.
    IdealEq {
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long = "left", allow_hyphen_values = true)]
        left: Vec<String>,
        #[arg(long = "right", allow_hyphen_values = true)]
        right: Vec<String>,
    },
    /// Generator of the radical of a univariate principal ideal.
    Radical {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Certify the strict chain (x1) ⊂ (x1, x2) ⊂ ... for K steps.
    ChainDemo { k: usize },
    /// Extract a single generator of a univariate ideal.
    Hbt {
        #[arg(allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Ideals of the integers.
    Zideal {
        #[command(subcommand)]
        action: ZidealCommand,
    },
    /// All ideals of Z/n.
    IdealsMod { n: u64 },
    /// Rasterize a real plane curve f(x, y) = 0.
    Plot {
        /// xmin:xmax,ymin:ymax with rational bounds.
        #[arg(long, default_value = "-2:2,-2:2", allow_hyphen_values = true)]
        window: String,
        /// N or COLSxROWS.
        #[arg(long, default_value = "64")]
        res: String,
        /// Emit SVG instead of ASCII.
        #[arg(long)]
        svg: bool,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
enum ZidealCommand {
    /// Principal generator of the ideal generated by the given integers.
    Gens {
        #[arg(allow_hyphen_values = true)]
        ints: Vec<BigInt>,
    },
    /// Whether (n) is a prime ideal.
    Prime {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Whether z lies in (g).
    Contains {
        #[arg(allow_hyphen_values = true)]
        g: BigInt,
        #[arg(allow_hyphen_values = true)]
        z: BigInt,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

// ---------------------------------------------------------------------------
// JSON payloads

/// Points as arrays of decimal residue strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsJson {
    pub field: String,
    pub vars: Vec<String>,
    pub points: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingIdealJson {
    pub points: PointsJson,
    pub generators: Vec<PolyJson>,
    pub field_equations: Vec<PolyJson>,
    pub closure_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VivJson {
    pub ideal: VanishingIdealJson,
    /// One flag per input polynomial: certified member of I(V(S)).
    pub contains_input: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeJson {
    pub components: Vec<PointsJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCheckJson {
    pub prime: bool,
    pub witnesses: Option<[PolyJson; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub verdict: String,
    pub bound: u32,
    pub cofactors: Option<Vec<PolyJson>>,
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEqJson {
    pub verdict: String,
    pub bound: u32,
    pub generator: Option<PolyJson>,
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStepJson {
    pub ideal: Vec<String>,
    pub added: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub steps: Vec<ChainStepJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HbtJson {
    pub extracted: PolyJson,
    /// "0" or "F" per degree.
    pub j_profile: Vec<String>,
    pub flip_degree: Option<usize>,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZidealJson {
    pub generator: String,
    pub prime: bool,
    pub contains: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZnIdealJson {
    pub generator: String,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsModJson {
    pub modulus: String,
    pub ideals: Vec<ZnIdealJson>,
}

// ---------------------------------------------------------------------------

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("payloads serialize") + "\n"
}

fn default_vars(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n.max(1)].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

fn explicit_vars(g: &GlobalArgs) -> Option<Vec<String>> {
    g.vars.as_ref().map(|v| v.split(',').map(|s| s.trim().to_string()).collect())
}

fn domain_of(g: &GlobalArgs) -> Result<Domain> {
    Domain::from_label(&g.field).map_err(|e| match e {
        Error::NotPrime(_) | Error::InvalidModulus(_) => e,
        _ => Error::Syntax { pos: 0, message: format!("bad --field value `{}`", g.field) },
    })
}

/// Ring for polynomial inputs: explicit `--vars`, or the shortest prefix of
/// `x,y,z` covering every identifier used (at least `min_arity`).
fn ring_for(g: &GlobalArgs, inputs: &[&str], min_arity: usize) -> Result<PolyRing> {
    let domain = domain_of(g)?;
    let vars = match explicit_vars(g) {
        Some(v) => v,
        None => {
            let defaults = ["x", "y", "z"];
            let mut arity = min_arity.max(1);
            for text in inputs {
                for id in identifiers(text)? {
                    if let Some(i) = defaults.iter().position(|d| *d == id) {
                        arity = arity.max(i + 1);
                    }
                }
            }
            default_vars(arity.min(3))
        }
    };
    PolyRing::new(domain, &vars)
}

fn parse_points(g: &GlobalArgs, text: &str) -> Result<(PointSet, PolyRing)> {
    let domain = domain_of(g)?;
    let Domain::PrimeField(p) = domain else {
        return Err(Error::UnsupportedDomain(domain.to_string(), "point sets live in F_p^n (use --field fp:<p>)".into()));
    };
    let trimmed = text.trim();
    let mut points = Vec::new();
    if !trimmed.is_empty() && trimmed != "{}" {
        let mut offset = 0;
        for chunk in text.split(';') {
            let mut pt = Vec::new();
            let mut pos = offset;
            for coord in chunk.split(',') {
                let lead = coord.len() - coord.trim_start().len();
                let value: i64 = coord.trim().parse().map_err(|_| Error::Syntax {
                    pos: pos + lead,
                    message: format!("expected an integer coordinate, found `{}`", coord.trim()),
                })?;
                pt.push(value.rem_euclid(p as i64) as u64);
                pos += coord.len() + 1;
            }
            points.push(pt);
            offset += chunk.len() + 1;
        }
    }
    let n = match (explicit_vars(g), points.first()) {
        (Some(v), _) => v.len(),
        (None, Some(pt)) => pt.len(),
        (None, None) => 1,
    };
    let vars = explicit_vars(g).unwrap_or_else(|| default_vars(n));
    let ring = PolyRing::new(domain, &vars)?;
    Ok((PointSet::new(p, n, points)?, ring))
}

fn points_json(set: &PointSet, ring: &PolyRing) -> PointsJson {
    PointsJson {
        field: ring.domain().label(),
        vars: ring.vars().to_vec(),
        points: set.points().iter().map(|pt| pt.iter().map(u64::to_string).collect()).collect(),
    }
}

fn point_text(pt: &[RingElement]) -> String {
    format!("({})", pt.iter().map(RingElement::to_string).collect::<Vec<_>>().join(","))
}

fn vanishing_json(res: &crate::varieties::VanishingIdealResult) -> VanishingIdealJson {
    VanishingIdealJson {
        points: points_json(&res.points, &res.ring),
        generators: res.generators.iter().map(Polynomial::to_json).collect(),
        field_equations: res.field_equations.iter().map(Polynomial::to_json).collect(),
        closure_verified: res.closure_verified,
    }
}

fn vanishing_text(res: &crate::varieties::VanishingIdealResult) -> String {
    let mut out = format!("points: {}\n", res.points);
    out.push_str(&format!("generators ({}):\n", res.generators.len()));
    for g in &res.generators {
        out.push_str(&format!("  {g}\n"));
    }
    out.push_str("field equations:\n");
    for g in &res.field_equations {
        out.push_str(&format!("  {g}\n"));
    }
    out
}

fn parse_window(text: &str) -> Result<Window> {
    let bad = |pos: usize, what: &str| Error::Syntax { pos, message: format!("bad window: {what}") };
    let (xs, ys) = text.split_once(',').ok_or_else(|| bad(0, "expected xmin:xmax,ymin:ymax"))?;
    let bound = |s: &str, pos: usize| -> Result<BigRational> {
        let s = s.trim();
        let (num, den) = s.split_once('/').unwrap_or((s, "1"));
        let num: BigInt = num.trim().parse().map_err(|_| bad(pos, s))?;
        let den: BigInt = den.trim().parse().map_err(|_| bad(pos, s))?;
        if den == BigInt::from(0) {
            return Err(bad(pos, "zero denominator"));
        }
        Ok(BigRational::new(num, den))
    };
    let pair = |s: &str, pos: usize| -> Result<(BigRational, BigRational)> {
        let (a, b) = s.split_once(':').ok_or_else(|| bad(pos, "expected lo:hi"))?;
        Ok((bound(a, pos)?, bound(b, pos + a.len() + 1)?))
    };
    let (xmin, xmax) = pair(xs, 0)?;
    let (ymin, ymax) = pair(ys, xs.len() + 1)?;
    Window::new(xmin, xmax, ymin, ymax)
}

fn parse_res(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Syntax { pos: 0, message: format!("bad resolution `{text}`") };
    match text.split_once(['x', 'X']) {
        Some((c, r)) => Ok((c.trim().parse().map_err(|_| bad())?, r.trim().parse().map_err(|_| bad())?)),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    let json = g.format == OutputFormat::Json;
    match &cli.command {
        Command::Parse { poly } => {
            let ring = ring_for(g, &[poly], 1)?;
            let f = ring.parse(poly)?;
            Ok(if json { to_json(&f.to_json()) } else { format!("{f}\n") })
        }
        Command::Variety { polys } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            let ring = ring_for(g, &texts, 1)?;
            let ideal = IdealPresentation::parse(&ring, polys)?;
            let v = variety(&ideal)?;
            Ok(if json { to_json(&points_json(&v, &ring)) } else { format!("{v}\n") })
        }
        Command::Videal { points } => {
            let (set, ring) = parse_points(g, points)?;
            let res = vanishing_ideal(&set, &ring)?;
            Ok(if json { to_json(&vanishing_json(&res)) } else { vanishing_text(&res) })
        }
        Command::Viv { polys } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            let ring = ring_for(g, &texts, 1)?;
            let ideal = IdealPresentation::parse(&ring, polys)?;
            let out = viv_closure(&ideal)?;
            let flags: Vec<bool> = out.expansion.iter().map(MembershipCertificate::is_member).collect();
            if json {
                return Ok(to_json(&VivJson { ideal: vanishing_json(&out.ideal), contains_input: flags }));
            }
            let mut text = vanishing_text(&out.ideal);
            let verdict = if out.contains_input() { "certified" } else { "not certified" };
            text.push_str(&format!("S inside I(V(S)): {verdict}\n"));
            Ok(text)
        }
        Command::Decompose { points } => {
            let (set, ring) = parse_points(g, points)?;
            let comps = decompose(&set);
            if json {
                return Ok(to_json(&DecomposeJson { components: comps.iter().map(|c| points_json(c, &ring)).collect() }));
            }
            Ok(comps.iter().map(|c| format!("{c}\n")).collect())
        }
        Command::PrimeCheck { points } => {
            let (set, ring) = parse_points(g, points)?;
            let check = is_prime_vanishing_ideal(&set, &ring)?;
            if json {
                let witnesses = check.witnesses.as_ref().map(|(f, h)| [f.to_json(), h.to_json()]);
                return Ok(to_json(&PrimeCheckJson { prime: check.prime, witnesses }));
            }
            Ok(match (&check.witnesses, check.prime) {
                (_, true) => "prime\n".to_string(),
                (Some((f, h)), false) => {
                    format!("not prime: f*g vanishes on X but neither factor does\n  f = {f}\n  g = {h}\n")
                }
                (None, false) => "not prime: I(X) = (1) is the whole ring\n".to_string(),
            })
        }
        Command::Member { bound, poly, generators } => {
            let mut texts: Vec<&str> = vec![poly];
            texts.extend(generators.iter().map(String::as_str));
            let ring = ring_for(g, &texts, 1)?;
            let f = ring.parse(poly)?;
            let ideal = IdealPresentation::parse(&ring, generators)?;
            let cert = membership_bounded(&f, &ideal, *bound)?;
            Ok(member_output(&cert, &ideal, *bound, json))
        }
        Command::IdealEq { bound, left, right } => {
            let texts: Vec<&str> = left.iter().chain(right).map(String::as_str).collect();
            let ring = ring_for(g, &texts, 1)?;
            let l = IdealPresentation::parse(&ring, left)?;
            let r = IdealPresentation::parse(&ring, right)?;
            let cmp = ideal_equal_bounded(&l, &r, *bound)?;
            let (verdict, generator, witness) = match &cmp {
                IdealComparison::EqualWithinBound => ("equal", None, None),
                IdealComparison::LeftNotInRight { generator, witness } => {
                    ("left-not-in-right", Some(generator), Some(witness))
                }
                IdealComparison::RightNotInLeft { generator, witness } => {
                    ("right-not-in-left", Some(generator), Some(witness))
                }
                IdealComparison::Unknown => ("unknown", None, None),
            };
            if json {
                return Ok(to_json(&IdealEqJson {
                    verdict: verdict.to_string(),
                    bound: *bound,
                    generator: generator.map(Polynomial::to_json),
                    witness: witness.map(|w| w.iter().map(RingElement::to_string).collect()),
                }));
            }
            Ok(match (generator, witness) {
                (Some(f), Some(w)) => format!("{verdict}: {f} (witness {})\n", point_text(w)),
                _ if verdict == "equal" => format!("equal within bound {bound}\n"),
                _ => format!("unknown at bound {bound}\n"),
            })
        }
        Command::Radical { poly } => {
            let ring = ring_for(g, &[poly], 1)?;
            let r = radical_univariate(&ring.parse(poly)?)?;
            Ok(if json { to_json(&r.to_json()) } else { format!("{r}\n") })
        }
        Command::ChainDemo { k } => {
            let domain = domain_of(g)?;
            let vars = explicit_vars(g).unwrap_or_else(|| (1..=k + 1).map(|i| format!("x{i}")).collect());
            let ring = PolyRing::new(domain, &vars)?;
            let steps = strict_chain_demo(*k, &ring)?;
            let rows: Vec<ChainStepJson> = steps
                .iter()
                .map(|s| ChainStepJson {
                    ideal: s.generators.iter().map(Polynomial::to_string).collect(),
                    added: s.added.to_string(),
                    witness: s.witness.iter().map(RingElement::to_string).collect(),
                })
                .collect();
            if json {
                return Ok(to_json(&ChainJson { steps: rows }));
            }
            let mut out = String::new();
            for s in &rows {
                out.push_str(&format!("{} not in ({}): witness ({})\n", s.added, s.ideal.join(", "), s.witness.join(",")));
            }
            out.push_str(&format!("{k} strict inclusions certified\n"));
            Ok(out)
        }
        Command::Hbt { generators } => {
            let texts: Vec<&str> = generators.iter().map(String::as_str).collect();
            let ring = ring_for(g, &texts, 1)?;
            let ideal = IdealPresentation::parse(&ring, generators)?;
            let out = hbt_extract_univariate(&ideal)?;
            let profile: Vec<String> = out
                .j_profile
                .iter()
                .map(|j| match j {
                    LeadingCoefficientIdeal::Zero => "0".to_string(),
                    LeadingCoefficientIdeal::Whole => "F".to_string(),
                })
                .collect();
            let check = match out.check {
                IdealComparison::EqualWithinBound => "equal",
                IdealComparison::Unknown => "unknown",
                _ => "different",
            };
            if json {
                return Ok(to_json(&HbtJson {
                    extracted: out.extracted.to_json(),
                    j_profile: profile,
                    flip_degree: out.flip_degree(),
                    check: check.to_string(),
                }));
            }
            Ok(format!(
                "extracted: {}\nleading-coefficient ideals by degree: {}\n(extracted) vs input: {check}\n",
                out.extracted,
                profile.join(" ")
            ))
        }
        Command::Zideal { action } => zideal(action, json),
        Command::IdealsMod { n } => {
            let ideals = enumerate_ideals_mod_n(*n)?;
            if json {
                return Ok(to_json(&IdealsModJson {
                    modulus: n.to_string(),
                    ideals: ideals
                        .iter()
                        .map(|i| ZnIdealJson {
                            generator: (i.generator() % n).to_string(),
                            elements: i.elements().iter().map(u64::to_string).collect(),
                        })
                        .collect(),
                }));
            }
            let mut out = String::new();
            for i in &ideals {
                let elems: Vec<String> = i.elements().iter().map(u64::to_string).collect();
                out.push_str(&format!("({}) = {{{}}}\n", i.generator() % n, elems.join(", ")));
            }
            out.push_str(&format!("{} ideals\n", ideals.len()));
            Ok(out)
        }
        Command::Plot { window, res, svg, poly } => {
            let domain = domain_of(g)?;
            let vars = explicit_vars(g).unwrap_or_else(|| default_vars(2));
            let ring = PolyRing::new(domain, &vars)?;
            let f = ring.parse(poly)?;
            let window = parse_window(window)?;
            let (cols, rows) = parse_res(res)?;
            let grid = raster_plane_curve(&f, &window, cols, rows)?;
            Ok(if json {
                to_json::<RasterJson>(&grid.to_json())
            } else if *svg {
                grid.to_svg()
            } else {
                grid.to_ascii()
            })
        }
    }
}

fn member_output(cert: &MembershipCertificate, ideal: &IdealPresentation, bound: u32, json: bool) -> String {
    if json {
        let payload = match cert {
            MembershipCertificate::Member { cofactors } => MemberJson {
                verdict: "member".into(),
                bound,
                cofactors: Some(cofactors.iter().map(Polynomial::to_json).collect()),
                witness: None,
            },
            MembershipCertificate::NonMember { witness } => MemberJson {
                verdict: "non-member".into(),
                bound,
                cofactors: None,
                witness: Some(witness.iter().map(RingElement::to_string).collect()),
            },
            MembershipCertificate::Unknown { .. } => {
                MemberJson { verdict: "unknown".into(), bound, cofactors: None, witness: None }
            }
        };
        return to_json(&payload);
    }
    match cert {
        MembershipCertificate::Member { cofactors } => {
            let terms: Vec<String> = cofactors
                .iter()
                .zip(ideal.generators())
                .filter(|(h, _)| !h.is_zero())
                .map(|(h, g)| format!("({h})*({g})"))
                .collect();
            let sum = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            format!("member: {sum}\n")
        }
        MembershipCertificate::NonMember { witness } => {
            format!("non-member: generators vanish at {} but f does not\n", point_text(witness))
        }
        MembershipCertificate::Unknown { bound } => format!("unknown: no cofactors of degree <= {bound}\n"),
    }
}

fn zideal(action: &ZidealCommand, json: bool) -> Result<String> {
    match action {
        ZidealCommand::Gens { ints } => {
            let ideal = IntIdeal::from_generators(ints.iter().cloned());
            Ok(if json {
                to_json(&ZidealJson { generator: ideal.generator().to_string(), prime: ideal.is_prime(), contains: None })
            } else {
                format!("{ideal}\n")
            })
        }
        ZidealCommand::Prime { n } => {
            let ideal = IntIdeal::principal(n.clone());
            if json {
                return Ok(to_json(&ZidealJson {
                    generator: ideal.generator().to_string(),
                    prime: ideal.is_prime(),
                    contains: None,
                }));
            }
            let g = ideal.generator();
            Ok(if ideal.is_zero() {
                "prime: (0) is the zero ideal\n".to_string()
            } else if ideal.is_whole_ring() {
                "not prime: (1) is the whole ring\n".to_string()
            } else if let Some((a, b)) = ideal.non_prime_witness() {
                format!("not prime: {g} = {a}*{b} with {a},{b} not in ({g})\n")
            } else {
                format!("prime: {g} is a prime number\n")
            })
        }
        ZidealCommand::Contains { g, z } => {
            let ideal = IntIdeal::principal(g.clone());
            let inside = ideal.contains(z);
            Ok(if json {
                to_json(&ZidealJson {
                    generator: ideal.generator().to_string(),
                    prime: ideal.is_prime(),
                    contains: Some(inside),
                })
            } else {
                format!("{inside}\n")
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("idealkit").chain(args.iter().copied()))
    }

    #[test]
    fn windows_and_resolutions() {
        let w = parse_window("-2:2,-1/2:3").unwrap();
        assert_eq!(w.ymin, BigRational::new((-1).into(), 2.into()));
        assert!(parse_window("2:-2,0:1").is_err());
        assert!(parse_window("a:b,0:1").is_err());
        assert_eq!(parse_res("40").unwrap(), (40, 40));
        assert_eq!(parse_res("30x20").unwrap(), (30, 20));
    }

    #[test]
    fn default_variables() {
        let g = GlobalArgs { format: OutputFormat::Text, vars: None, field: "q".into() };
        assert_eq!(ring_for(&g, &["y + 1"], 1).unwrap().vars(), &["x", "y"]);
        assert_eq!(ring_for(&g, &["3"], 1).unwrap().vars(), &["x"]);
        assert_eq!(ring_for(&g, &["z"], 1).unwrap().vars(), &["x", "y", "z"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["parse", "x +"]).code, 1);
        assert_eq!(run_args(&["frobnicate"]).code, 1);
        assert_eq!(run_args(&["radical", "--field", "z", "x^2"]).code, 2);
        assert_eq!(run_args(&["variety", "--field", "fp:7", "--vars", "a,b,c,d,e,f,g,h", "a"]).code, 3);
        assert_eq!(run_args(&["--help"]).code, 0);
    }
}
