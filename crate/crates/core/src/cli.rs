//! Command-line front end. `run` parses arguments, writes the result to
//! `out` and returns the process exit code: 0 on success, 1 when a check
//! finds a counterexample or two methods disagree, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::fermat::{self, CurveParams};
use crate::field::{field_of_size, make_field, subgroup_of_order, FieldDesc};
use crate::hankel::{self, HankelSpec};
use crate::polyseq::{
    self, binom_seq, gen_binomial, reciprocal, satisfaction, satisfies_by_product, weight,
    CharPoly, Poly, RangedSeq,
};
use crate::recsolve::{self, solution_space, Limits};
use crate::report::VerifyReport;

#[derive(Parser, Debug)]
#[command(name = "finrec", version, about = "Finite-range recurrences, Hankel determinants and Fermat curves over finite fields")]
struct Cli {
    /// Output format; `verify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Binomial coefficients, polynomials and weights.
    #[command(subcommand)]
    Binom(BinomCmd),
    /// Check, solve and verify recurrences of binomial sequences mod p.
    #[command(subcommand)]
    Recur(RecurCmd),
    /// Hankel determinants of binomial coefficients.
    #[command(subcommand)]
    Hankel(HankelCmd),
    /// Finite fields, subgroups and Fermat curves.
    #[command(subcommand)]
    Fermat(FermatCmd),
    /// Exhaustive and randomized verification runs.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand, Debug)]
enum BinomCmd {
    /// binom(k, i) for any integers.
    Coeff {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// binom(k, i) mod p for from <= i <= to.
    Seq {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
    /// Reciprocal x^h a(1/x) of a monic polynomial.
    Reciprocal {
        #[arg(long)]
        field: String,
        /// Coefficients, lowest degree first.
        #[arg(long, allow_hyphen_values = true)]
        charpoly: String,
    },
    /// Weight of a polynomial, and the multiplicity of a root if given.
    Weight {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
    },
}

/// Where a sequence comes from: `binom(k, i) mod p`, or explicit values.
#[derive(Args, Debug)]
struct SeqArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "values")]
    k: Option<i64>,
    /// Explicit comma-separated values starting at index `from`.
    #[arg(long = "seq", allow_hyphen_values = true)]
    values: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    from: i64,
    #[arg(long, allow_hyphen_values = true)]
    to: Option<i64>,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long)]
    p: u64,
    /// Largest k swept (default p + 3).
    #[arg(long)]
    grid_kmax: Option<i64>,
    /// Largest h swept (default 6).
    #[arg(long)]
    grid_hmax: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RecurTheorem {
    Thm33,
    Thm38,
    Remark39,
}

#[derive(Subcommand, Debug)]
enum RecurCmd {
    /// Does the sequence satisfy the recurrence with this characteristic polynomial?
    Check {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, allow_hyphen_values = true)]
        charpoly: String,
    },
    /// All recurrences of a given order.
    Solve {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        order: usize,
    },
    /// Minimal recurrence by Berlekamp–Massey.
    Minimal {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Sweep a grid of binomial sequences.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "thm33")]
        theorem: RecurTheorem,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HankelMethod {
    Closed,
    Brute,
    Both,
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    h: usize,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
}

impl SpecArgs {
    fn spec(&self) -> HankelSpec {
        HankelSpec::new(self.k, self.h, self.r)
    }
}

#[derive(Subcommand, Debug)]
enum HankelCmd {
    /// Determinant of B(k, h, r).
    Det {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also reduce modulo this prime.
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(long, value_enum, default_value = "both")]
        method: HankelMethod,
    },
    /// The matrix B(k, h, r).
    Matrix {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Whether p divides det B(k, h, r).
    Nonvanishing {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

impl CurveArgs {
    fn curve(&self) -> Result<CurveParams, Error> {
        let f = field_of_size(self.q)?;
        let a = f.parse_elem(&self.a)?;
        let b = f.parse_elem(&self.b)?;
        CurveParams::new(&f, self.n, a, b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Brute,
    Subgroup,
    Both,
}

#[derive(Subcommand, Debug)]
enum FermatCmd {
    /// Describe F_q: modulus and generator.
    Field {
        #[arg(long)]
        q: u64,
    },
    /// Elements of the subgroup of a given order, or of one of its cosets.
    Subgroup {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: u64,
        #[arg(long, allow_hyphen_values = true)]
        coset: Option<String>,
    },
    /// Projective points on a x^n + b y^n = z^n.
    Count {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: CountMethod,
    },
    /// Weil, Garcia–Voloch and subgroup bounds for one curve.
    Bounds {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// The polynomials f and g bounding |aG ∩ (1 - bG)|.
    Witness {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// CSV table over all q <= qmax, n | q - 1, and nonzero a, b.
    Sweep {
        #[arg(long, default_value_t = 49)]
        qmax: u64,
        /// Output file; `-` for standard output.
        #[arg(long, default_value = "-")]
        out: String,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// No recurrence of order h when k < p - h.
    Thm33(GridArgs),
    /// Every monic recurrence vanishes at -1 when k < p.
    Thm38(GridArgs),
    /// Divisibility by (x+1)^(p-k) and rank of the leading equations.
    Remark39(GridArgs),
    /// Closed-form determinants against elimination.
    Prop31 {
        #[arg(long, allow_hyphen_values = true, default_value_t = -6)]
        kmin: i64,
        #[arg(long, default_value_t = 14)]
        kmax: i64,
        #[arg(long, default_value_t = 4)]
        hmax: usize,
        #[arg(long, default_value_t = 10)]
        rabs: i64,
    },
    /// det B(k, h, r) prime to p when 0 <= r + h <= k < p - h.
    Cor32 {
        #[arg(long)]
        p: u64,
    },
    /// Unique recurrence of order h for binom(2h - 1, i).
    Example35 {
        #[arg(long, default_value_t = 4)]
        hmax: usize,
        #[arg(long, default_value_t = 31)]
        pmax: u64,
    },
    /// (1+x)^h recurrence for binom(q - h, i).
    Example36 {
        #[arg(long, value_delimiter = ',', default_value = "4,8,9,16,25,27,49")]
        q: Vec<u64>,
        #[arg(long, default_value_t = 8)]
        hmax: usize,
    },
    /// Weight of polynomials with a root of multiplicity k < p, randomized.
    Lemma37 {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Coset intersection bound for all q <= qmax.
    Thm41 {
        #[arg(long, default_value_t = 121)]
        qmax: u64,
    },
    /// Point count decomposition and bounds for all q <= qmax.
    Fermat {
        #[arg(long, default_value_t = 49)]
        qmax: u64,
    },
    /// gcd witness identities for all primes q <= qmax.
    Witness {
        #[arg(long, default_value_t = 31)]
        qmax: u64,
    },
}

/// Exit status plus what to print.
struct Output {
    code: i32,
    text: String,
    json: Value,
    elapsed: Option<Duration>,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output {
            code: 0,
            text,
            json,
            elapsed: None,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn report<C: Serialize>(r: &VerifyReport<C>) -> Output {
    let mut text = format!(
        "{}: {} cells checked, {} counterexamples",
        r.theorem,
        r.checked,
        r.counterexamples.len()
    );
    if r.outside_hypothesis > 0 {
        text.push_str(&format!(
            ", {} cells outside the hypotheses",
            r.outside_hypothesis
        ));
    }
    for c in &r.counterexamples {
        text.push_str(&format!("\n  {}", to_json(c)));
    }
    Output {
        code: if r.is_verified() { 0 } else { 1 },
        text,
        json: to_json(r),
        elapsed: Some(r.elapsed),
    }
}

fn parse_field(text: &str) -> Result<FieldDesc, Error> {
    text.parse()
}

fn load_seq(args: &SeqArgs) -> Result<RangedSeq, Error> {
    let field = make_field(args.p, 1)?;
    match (&args.values, args.k) {
        (Some(values), _) => {
            let vals = values
                .split(',')
                .map(|t| field.parse_elem(t.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let seq = RangedSeq::new(&field, args.from, vals)?;
            match args.to {
                Some(to) if to != seq.v() => Err(Error::BadElement(format!(
                    "--to {to} does not match the {} values given",
                    seq.len()
                ))),
                _ => Ok(seq),
            }
        }
        (None, Some(k)) => {
            let to = args
                .to
                .ok_or_else(|| Error::BadElement("--to is required with --k".into()))?;
            binom_seq(k, &field, args.from, to)
        }
        (None, None) => Err(Error::BadElement("give either --k or --seq".into())),
    }
}

fn limits(g: &GridArgs) -> Limits {
    let d = Limits::default_for(g.p);
    Limits {
        kmax: g.grid_kmax.unwrap_or(d.kmax),
        hmax: g.grid_hmax.unwrap_or(d.hmax),
    }
}

fn binom(cmd: &BinomCmd) -> Result<Output, Error> {
    Ok(match cmd {
        BinomCmd::Coeff { k, i } => {
            let v = gen_binomial(*k, *i);
            Output::ok(v.to_string(), json!({ "k": k, "i": i, "value": v.to_string() }))
        }
        BinomCmd::Seq { k, p, from, to } => {
            let field = make_field(*p, 1)?;
            let seq = binom_seq(*k, &field, *from, *to)?;
            let vals: Vec<u32> = seq.values().iter().map(|e| e.code()).collect();
            Output::ok(
                seq.to_string(),
                json!({ "k": k, "p": p, "u": from, "v": to, "values": vals }),
            )
        }
        BinomCmd::Reciprocal { field, charpoly } => {
            let f = parse_field(field)?;
            let a = CharPoly::parse(&f, charpoly)?;
            let r = reciprocal(&a);
            Output::ok(
                r.to_text(),
                json!({ "charpoly": a.poly().to_text(), "reciprocal": r.to_text() }),
            )
        }
        BinomCmd::Weight { field, poly, root } => {
            let f = parse_field(field)?;
            let p = Poly::parse(&f, poly)?;
            let w = weight(&p);
            match root {
                None => Output::ok(w.to_string(), json!({ "weight": w })),
                Some(root) => {
                    let xi = f.parse_elem(root)?;
                    let m = polyseq::root_multiplicity(&p, &xi)?;
                    let lemma = (!xi.is_zero())
                        .then(|| polyseq::check_weight_lemma(&p, &xi))
                        .transpose()?;
                    let mut text = format!("weight {w}, multiplicity {m}");
                    if let Some(l) = &lemma {
                        text.push_str(match l.holds {
                            Some(true) => ", weight >= k+1 holds",
                            Some(false) => ", weight >= k+1 FAILS",
                            None => ", outside 0 < k < p",
                        });
                    }
                    let code = (lemma.and_then(|l| l.holds) == Some(false)) as i32;
                    Output {
                        code,
                        text,
                        json: json!({ "weight": w, "multiplicity": m, "lemma": lemma }),
                        elapsed: None,
                    }
                }
            }
        }
    })
}

fn recur(cmd: &RecurCmd) -> Result<Output, Error> {
    Ok(match cmd {
        RecurCmd::Check { seq, charpoly } => {
            let s = load_seq(seq)?;
            let a = CharPoly::parse(s.field(), charpoly)?;
            let sat = satisfaction(&s, &a)?;
            let by_product = satisfies_by_product(&s, &a)?;
            let mut text = if sat.holds { "satisfied" } else { "not satisfied" }.to_string();
            if sat.vacuous {
                text.push_str(" (vacuously: order exceeds v - u)");
            }
            let mut out = Output::ok(
                text,
                json!({ "holds": sat.holds, "vacuous": sat.vacuous, "product_criterion": by_product }),
            );
            if by_product != sat.holds {
                out.code = 1;
                out.text.push_str("\nproduct criterion disagrees");
            }
            out
        }
        RecurCmd::Solve { seq, order } => {
            let s = load_seq(seq)?;
            let space = solution_space(&s, *order);
            let basis: Vec<String> = space.basis_polys().iter().map(Poly::to_text).collect();
            let particular = space.particular_monic().map(|a| a.poly().to_text());
            let mut text = format!(
                "order {order}: rank {}, solution space dimension {}",
                space.rank(),
                space.dimension()
            );
            if space.is_vacuous() {
                text.push_str(" (no equations)");
            }
            for b in &basis {
                text.push_str(&format!("\n  basis {b}"));
            }
            text.push_str(&match &particular {
                Some(p) => format!("\nmonic solution {p}"),
                None => "\nno monic solution".into(),
            });
            Output::ok(
                text,
                json!({
                    "order": order,
                    "vacuous": space.is_vacuous(),
                    "rank": space.rank(),
                    "homogeneous_basis": basis,
                    "monic_solvable": space.monic_solvable(),
                    "particular_monic": particular,
                    "unique_monic": space.unique_monic(),
                }),
            )
        }
        RecurCmd::Minimal { seq } => {
            let s = load_seq(seq)?;
            let bm = recsolve::minimal_checked(&s)?;
            let mut text = format!("order {}: {}", bm.order, bm.charpoly.poly().pretty());
            if bm.vacuous {
                text.push_str(" (vacuous)");
            }
            Output::ok(
                text,
                json!({
                    "order": bm.order,
                    "charpoly": bm.charpoly.poly().to_text(),
                    "vacuous": bm.vacuous,
                }),
            )
        }
        RecurCmd::Verify { grid, theorem } => {
            let l = limits(grid);
            report(&match theorem {
                RecurTheorem::Thm33 => recsolve::verify_thm33(grid.p, l)?,
                RecurTheorem::Thm38 => recsolve::verify_thm38(grid.p, l)?,
                RecurTheorem::Remark39 => recsolve::verify_remark39(grid.p, l)?,
            })
        }
    })
}

fn hankel_cmd(cmd: &HankelCmd) -> Result<Output, Error> {
    Ok(match cmd {
        HankelCmd::Det {
            spec,
            modulus,
            method,
        } => {
            let spec = spec.spec();
            if let Some(p) = modulus {
                if !crate::arith::is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
            }
            let brute = (*method != HankelMethod::Closed)
                .then(|| hankel::det_bruteforce(&hankel::build_matrix(&spec)));
            let closed = match method {
                HankelMethod::Brute => None,
                HankelMethod::Closed => Some(hankel::det_closed_form(&spec)?),
                HankelMethod::Both => hankel::det_closed_form(&spec).ok(),
            };
            let value = closed.clone().or(brute.clone()).expect("one method ran");
            let mismatch = matches!((&closed, &brute), (Some(c), Some(b)) if c != b);
            let mut text = value.to_string();
            let reduced = modulus.map(|p| {
                use num_integer::Integer;
                value.mod_floor(&num_bigint::BigInt::from(p)).to_string()
            });
            if let Some(r) = &reduced {
                text.push_str(&format!(" ({r} mod {})", modulus.unwrap()));
            }
            if mismatch {
                text = format!(
                    "MISMATCH: closed form {} but elimination {}",
                    closed.as_ref().unwrap(),
                    brute.as_ref().unwrap()
                );
            }
            Output {
                code: mismatch as i32,
                text,
                json: json!({
                    "spec": spec,
                    "closed_form": closed.map(|c| c.to_string()),
                    "route": hankel::closed_form_route(&spec).map(|(r, _)| r),
                    "bruteforce": brute.map(|b| b.to_string()),
                    "mod": modulus,
                    "reduced": reduced,
                    "agree": !mismatch,
                }),
                elapsed: None,
            }
        }
        HankelCmd::Matrix { spec } => {
            let m = hankel::build_matrix(&spec.spec());
            let rows: Vec<Vec<String>> = m
                .rows()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect();
            let text = rows.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n");
            Output::ok(text, json!({ "spec": spec.spec(), "rows": rows }))
        }
        HankelCmd::Nonvanishing { spec, p } => {
            if !crate::arith::is_prime(*p) {
                return Err(Error::NotPrime(*p));
            }
            let r = hankel::nonvanishing_mod_p(&spec.spec(), *p);
            let mut out = Output::ok(
                format!(
                    "det mod {p} = {} ({}; hypothesis {})",
                    r.det_mod_p,
                    if r.nonvanishing { "nonzero" } else { "zero" },
                    if r.hypothesis { "holds" } else { "does not hold" }
                ),
                to_json(&r),
            );
            if r.hypothesis && !r.nonvanishing {
                out.code = 1;
            }
            out
        }
    })
}

fn fermat_cmd(cmd: &FermatCmd) -> Result<Output, Error> {
    Ok(match cmd {
        FermatCmd::Field { q } => {
            let f = field_of_size(*q)?;
            let modulus = f.modulus_poly().map(|m| m.to_text());
            let gen = f.generator().to_string();
            let mut text = format!("F_{q} = F_{f}, generator {gen}");
            if let Some(m) = &modulus {
                text.push_str(&format!(", modulus {m}"));
            }
            Output::ok(
                text,
                json!({ "field": f.to_string(), "q": q, "modulus": modulus, "generator": gen }),
            )
        }
        FermatCmd::Subgroup { q, order, coset } => {
            let f = field_of_size(*q)?;
            let g = subgroup_of_order(&f, *order)?;
            let elems = match coset {
                Some(a) => g.coset(&f.parse_elem(a)?)?,
                None => g.elements(),
            };
            let mut elems = elems;
            elems.sort();
            let names: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
            Output::ok(
                names.join(" "),
                json!({ "q": q, "order": order, "coset": coset, "elements": names }),
            )
        }
        FermatCmd::Count { curve, method } => {
            let c = curve.curve()?;
            let brute = (*method != CountMethod::Subgroup)
                .then(|| fermat::count_points_bruteforce(&c))
                .transpose()?;
            let sub = (*method != CountMethod::Brute)
                .then(|| fermat::count_points_subgroup(&c))
                .transpose()?;
            let mismatch = matches!((&brute, &sub), (Some(b), Some(s)) if b.total != s.total || b.d != s.d);
            let mut lines = Vec::new();
            if let Some(b) = &brute {
                lines.push(format!("brute force: N={} d={}", b.total, b.d));
            }
            if let Some(s) = &sub {
                lines.push(format!(
                    "subgroup: N={} d={} m={} |G|={} intersection={} e={}",
                    s.total, s.d, s.m, s.group_order, s.intersection, s.e
                ));
            }
            if mismatch {
                lines.push("MISMATCH".into());
            }
            Output {
                code: mismatch as i32,
                text: lines.join("\n"),
                json: json!({ "bruteforce": brute, "subgroup": sub, "agree": !mismatch }),
                elapsed: None,
            }
        }
        FermatCmd::Bounds { curve } => {
            let c = curve.curve()?;
            let r = fermat::count_points_subgroup(&c)?;
            let b = fermat::gv_bounds(&r, &c);
            let mut lines = vec![
                format!("N={} d={}", r.total, r.d),
                format!("weil: {}", if b.weil { "holds" } else { "fails" }),
            ];
            for g in &b.gv {
                lines.push(format!(
                    "gv s={}: bound {} ({}applicable) {}",
                    g.s,
                    g.bound,
                    if g.applicable { "" } else { "not " },
                    if g.holds { "holds" } else { "fails" }
                ));
            }
            lines.push(format!(
                "gv s=1: bound {} ({}applicable) {}",
                b.gv_s1.bound,
                if b.gv_s1.applicable { "" } else { "not " },
                if b.gv_s1.holds { "holds" } else { "fails" }
            ));
            let mut cor = format!(
                "subgroup bound: {} ({}applicable) {}",
                b.cor44.bound,
                if b.cor44.applicable { "" } else { "not " },
                if b.cor44.holds { "holds" } else { "fails" }
            );
            if b.cor44.bound_p_form != b.cor44.bound {
                cor.push_str(&format!("; with p in place of q: {}", b.cor44.bound_p_form));
            }
            lines.push(cor);
            let failed = !b.weil
                || b.gv.iter().any(|g| g.applicable && !g.holds)
                || (b.gv_s1.applicable && !b.gv_s1.holds)
                || (b.cor44.applicable && !b.cor44.holds);
            Output {
                code: failed as i32,
                text: lines.join("\n"),
                json: json!({ "count": r, "bounds": b }),
                elapsed: None,
            }
        }
        FermatCmd::Witness { q, order, a, b } => {
            let f = field_of_size(*q)?;
            let g = subgroup_of_order(&f, *order)?;
            let (a, b) = (f.parse_elem(a)?, f.parse_elem(b)?);
            let w = fermat::gcd_witness(&g, &a, &b)?;
            let ok = w.identity_ok && w.dependence_ok;
            Output {
                code: (!ok) as i32,
                text: format!(
                    "f = {}\ng = {}\nintersection {}\nidentity {}\ndependence {}",
                    w.f.pretty(),
                    w.g.pretty(),
                    w.intersection(*order),
                    if w.identity_ok { "holds" } else { "FAILS" },
                    if w.dependence_ok { "holds" } else { "FAILS" }
                ),
                json: json!({
                    "f": w.f.to_text(),
                    "g": w.g.to_text(),
                    "intersection": w.intersection(*order),
                    "identity_ok": w.identity_ok,
                    "dependence_ok": w.dependence_ok,
                }),
                elapsed: None,
            }
        }
        FermatCmd::Sweep { qmax, out } => {
            if *qmax > fermat::THM41_MAX_Q {
                return Err(Error::CapExceeded(format!(
                    "--qmax must be at most {}",
                    fermat::THM41_MAX_Q
                )));
            }
            let rows = fermat::sweep(*qmax)?;
            let csv_text = {
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in &rows {
                    w.serialize(r).map_err(|e| Error::Internal(e.to_string()))?;
                }
                String::from_utf8(w.into_inner().map_err(|e| Error::Internal(e.to_string()))?)
                    .expect("csv output is utf-8")
            };
            if out == "-" {
                Output::ok(csv_text.trim_end().to_string(), json!({ "rows": rows }))
            } else {
                std::fs::write(out, csv_text)
                    .map_err(|e| Error::Internal(format!("writing {out}: {e}")))?;
                Output::ok(
                    format!("{} rows written to {out}", rows.len()),
                    json!({ "rows": rows.len(), "out": out }),
                )
            }
        }
    })
}

fn verify(cmd: &VerifyCmd, seed: u64) -> Result<Output, Error> {
    Ok(match cmd {
        VerifyCmd::Thm33(g) => report(&recsolve::verify_thm33(g.p, limits(g))?),
        VerifyCmd::Thm38(g) => report(&recsolve::verify_thm38(g.p, limits(g))?),
        VerifyCmd::Remark39(g) => report(&recsolve::verify_remark39(g.p, limits(g))?),
        VerifyCmd::Prop31 {
            kmin,
            kmax,
            hmax,
            rabs,
        } => report(&hankel::verify_closed_form(*kmin, *kmax, *hmax, *rabs)),
        VerifyCmd::Cor32 { p } => {
            if !crate::arith::is_prime(*p) {
                return Err(Error::NotPrime(*p));
            }
            report(&hankel::verify_cor32(*p))
        }
        VerifyCmd::Example35 { hmax, pmax } => report(&recsolve::verify_example35(*hmax, *pmax)?),
        VerifyCmd::Example36 { q, hmax } => report(&recsolve::verify_example36(q, *hmax)?),
        VerifyCmd::Lemma37 { trials } => report(&polyseq::weight_lemma_fuzz(*trials, seed)?),
        VerifyCmd::Thm41 { qmax } => report(&fermat::check_thm41(*qmax)?),
        VerifyCmd::Fermat { qmax } => {
            if *qmax > fermat::THM41_MAX_Q {
                return Err(Error::CapExceeded(format!(
                    "--qmax must be at most {}",
                    fermat::THM41_MAX_Q
                )));
            }
            report(&fermat::verify_decomposition(*qmax)?)
        }
        VerifyCmd::Witness { qmax } => {
            if *qmax > fermat::THM41_MAX_Q {
                return Err(Error::CapExceeded(format!(
                    "--qmax must be at most {}",
                    fermat::THM41_MAX_Q
                )));
            }
            report(&fermat::verify_witness(*qmax)?)
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::InexactDivision => 1,
        _ => 2,
    }
}

/// Applies `FINREC_THREADS` to the global thread pool.
pub fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("FINREC_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("FINREC_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("FINREC_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let default_format = match cli.command {
        Command::Verify(_) => Format::Json,
        _ => Format::Text,
    };
    let format = cli.format.unwrap_or(default_format);
    let result = match &cli.command {
        Command::Binom(c) => binom(c),
        Command::Recur(c) => recur(c),
        Command::Hankel(c) => hankel_cmd(c),
        Command::Fermat(c) => fermat_cmd(c),
        Command::Verify(c) => verify(c, cli.seed),
    };
    match result {
        Ok(o) => {
            let body = match format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json value"),
            };
            let _ = writeln!(out, "{body}");
            if let Some(t) = o.elapsed {
                let _ = writeln!(err, "elapsed: {:.3}s", t.as_secs_f64());
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
