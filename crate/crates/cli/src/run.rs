//! Command runners: validated inputs in, exact payloads out.
//!
//! Every runner returns either an [`Outcome`] (the job ran; `ok` records
//! whether its mathematical check passed) or an error string describing why
//! the input was invalid. The caller maps these onto the exit-code contract:
//! 0 for ok, 1 for a failed check, 2 for invalid input.
//!
//! Conventions shared by the payloads:
//! - rationals render as "p/q" (just "p" when integral);
//! - symbolic runs render polynomials and rational functions in the level
//!   parameter as expressions in the variable g;
//! - root/color indices are 1-based in reports, matching the labels Q_1,
//!   Q_2, ... used for the screening operators.

use serde_json::{json, Value};

use walg_core::characters::{char_t, duality_check, Prefactor};
use walg_core::field::{Field, RatFunc, Rational};
use walg_core::rootsys::RootSystem;
use walg_core::screening::{commrel_proportionality_check, kernel_dims, serre_check};
use walg_core::virasoro::{
    fock_lowest_eigenvalue, lowest_weight, shapovalov, singular_vectors, verma_basis,
    VirasoroParams,
};

use crate::report::Outcome;

/// Default degree cap for virasoro-singvec jobs.
pub const SINGVEC_CAP: usize = 8;
/// Default level cap for shapovalov jobs.
pub const SHAPOVALOV_CAP: usize = 6;

/// The level parameter of a Virasoro job: one exact rational, or the
/// generic point (computations over the rational-function field Q(g)).
#[derive(Clone, Debug, PartialEq)]
pub enum Gamma {
    Symbolic,
    Rat(Rational),
}

impl Gamma {
    /// Echo string: "symbolic" or the normalized "p/q".
    pub fn echo(&self) -> String {
        match self {
            Gamma::Symbolic => "symbolic".to_string(),
            Gamma::Rat(r) => r.to_string(),
        }
    }
}

/// Parses "symbolic", an integer, or "p/q" with a nonzero denominator.
pub fn parse_gamma(s: &str) -> Result<Gamma, String> {
    let s = s.trim();
    if s == "symbolic" {
        return Ok(Gamma::Symbolic);
    }
    let bad = |_| format!("gamma must be 'symbolic', an integer, or p/q; got '{}'", s);
    let rat = match s.split_once('/') {
        None => Rational::from_int(s.parse::<i64>().map_err(bad)?),
        Some((p, q)) => {
            let num = p.trim().parse::<i64>().map_err(bad)?;
            let den = q.trim().parse::<i64>().map_err(bad)?;
            Rational::new(num, den).map_err(|_| "gamma denominator must be nonzero".to_string())?
        }
    };
    Ok(Gamma::Rat(rat))
}

pub fn root_system(label: &str) -> Result<RootSystem, String> {
    RootSystem::new(label).map_err(|e| e.to_string())
}

fn check_len(rs: &RootSystem, v: &[i64], name: &str) -> Result<(), String> {
    if v.len() != rs.rank() {
        return Err(format!(
            "{} must have {} comma-separated entries for {}",
            name,
            rs.rank(),
            rs.label()
        ));
    }
    Ok(())
}

/// Extracts the single nonnegative Kac label a rank-1 Virasoro job takes.
fn kac_label(v: &[i64], name: &str) -> Result<i64, String> {
    if v.len() != 1 {
        return Err(format!("{} must be a single integer for Virasoro jobs", name));
    }
    if v[0] < 0 {
        return Err(format!("{} must be nonnegative, got {}", name, v[0]));
    }
    Ok(v[0])
}

fn csv_series(values: impl Iterator<Item = String>) -> String {
    let mut s = String::from("degree,coefficient\n");
    for (d, v) in values.enumerate() {
        s.push_str(&format!("{},{}\n", d, v));
    }
    s
}

// ---------------------------------------------------------------- characters

pub fn char_outcome(
    algebra: &str,
    lambda: &[i64],
    mu: &[i64],
    order: usize,
) -> Result<Outcome, String> {
    let rs = root_system(algebra)?;
    check_len(&rs, lambda, "lambda")?;
    check_len(&rs, mu, "mu")?;
    let table = char_t(&rs, lambda, mu, order).map_err(|e| e.to_string())?;
    let coeffs: Vec<String> = table.series.coeffs().iter().map(|c| c.to_string()).collect();
    let prefactor = match &table.prefactor {
        Prefactor::Integer(k) => k.to_string(),
        Prefactor::Expr(e) => e.to_string_in("kappa"),
    };
    let text = format!(
        "char_T coefficients (q^0..q^{}):\n  {}\nprefactor exponent: {}\n",
        order,
        coeffs.join(", "),
        prefactor
    );
    Ok(Outcome {
        ok: true,
        result: json!({ "prefactor": prefactor, "coefficients": coeffs }),
        csv: csv_series(coeffs.iter().cloned()),
        text,
    })
}

pub fn char_dual_outcome(
    algebra: &str,
    lambda: &[i64],
    mu: &[i64],
    order: usize,
) -> Result<Outcome, String> {
    let rs = root_system(algebra)?;
    check_len(&rs, lambda, "lambda")?;
    check_len(&rs, mu, "mu")?;
    let holds = duality_check(&rs, lambda, mu, order).map_err(|e| e.to_string())?;
    let dual = rs.dual();
    let text = if holds {
        format!(
            "char_T({}, lambda, mu) agrees with char_T({}, mu, lambda) through q^{}\n",
            rs.label(),
            dual.label(),
            order
        )
    } else {
        format!(
            "MISMATCH: char_T({}, lambda, mu) differs from char_T({}, mu, lambda)\n",
            rs.label(),
            dual.label()
        )
    };
    let csv = format!(
        "quantity,value\ndual_algebra,{}\nholds,{}\n",
        dual.label(),
        holds
    );
    Ok(Outcome {
        ok: holds,
        result: json!({ "dual_algebra": dual.label(), "holds": holds }),
        csv,
        text,
    })
}

// ----------------------------------------------------------------- screening

pub fn kernel_dims_outcome(
    algebra: &str,
    lambda: &[i64],
    mu: &[i64],
    order: usize,
) -> Result<Outcome, String> {
    let rs = root_system(algebra)?;
    check_len(&rs, lambda, "lambda")?;
    check_len(&rs, mu, "mu")?;
    let dims = kernel_dims(&rs, lambda, mu, order).map_err(|e| e.to_string())?;
    let strings: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    let text = format!(
        "joint kernel dimensions by degree (0..{}):\n  {}\n",
        order,
        strings.join(", ")
    );
    Ok(Outcome {
        ok: true,
        result: json!({ "dims": dims }),
        csv: csv_series(strings.iter().cloned()),
        text,
    })
}

pub fn serre_outcome(algebra: &str, mu: &[i64], order: usize) -> Result<Outcome, String> {
    let rs = root_system(algebra)?;
    check_len(&rs, mu, "mu")?;
    let report = serre_check(&rs, mu, order).map_err(|e| e.to_string())?;
    let pairs: Vec<Value> = report
        .pairs
        .iter()
        .map(|p| {
            json!({
                "i": p.i + 1,
                "j": p.j + 1,
                "exponent": p.exponent,
                "holds": p.holds,
            })
        })
        .collect();
    let mut csv = String::from("relation,result\n");
    let mut lines = String::new();
    for p in &report.pairs {
        csv.push_str(&format!(
            "serre_i{}_j{}_exp{},{}\n",
            p.i + 1,
            p.j + 1,
            p.exponent,
            if p.holds { "pass" } else { "fail" }
        ));
        lines.push_str(&format!(
            "  (ad Q_{})^{} Q_{}: {}\n",
            p.i + 1,
            p.exponent,
            p.j + 1,
            if p.holds { "vanishes" } else { "NONZERO" }
        ));
    }
    let text = if report.holds {
        format!("all relations vanish through degree {}\n{}", order, lines)
    } else {
        format!("FAILED relations through degree {}\n{}", order, lines)
    };
    Ok(Outcome {
        ok: report.holds,
        result: json!({ "max_degree": report.max_degree, "pairs": pairs, "holds": report.holds }),
        csv,
        text,
    })
}

pub fn commrel_outcome(algebra: &str, mu: &[i64], order: usize) -> Result<Outcome, String> {
    let rs = root_system(algebra)?;
    check_len(&rs, mu, "mu")?;
    let mut pairs = Vec::new();
    let mut csv = String::from("relation,result\n");
    let mut lines = String::new();
    let mut all = true;
    for i in 0..rs.rank() {
        for j in 0..rs.rank() {
            if i == j {
                continue;
            }
            let bound = -rs.cartan()[i][j];
            for m in 1..=bound.max(0) as usize {
                let rep = commrel_proportionality_check(&rs, i, j, mu, m, order)
                    .map_err(|e| e.to_string())?;
                all &= rep.holds;
                let scale = rep.scale.as_ref().map(|s| s.to_string());
                csv.push_str(&format!(
                    "commrel_i{}_j{}_m{},{}\n",
                    i + 1,
                    j + 1,
                    m,
                    if rep.holds { "pass" } else { "fail" }
                ));
                lines.push_str(&format!(
                    "  (ad Q_{})^{} Q_{}: {}{}\n",
                    i + 1,
                    m,
                    j + 1,
                    if rep.holds { "proportional" } else { "NOT proportional" },
                    match &scale {
                        Some(s) => format!(" (scale {})", s),
                        None => String::new(),
                    }
                ));
                pairs.push(json!({
                    "i": i + 1,
                    "j": j + 1,
                    "m": m,
                    "holds": rep.holds,
                    "degenerate": rep.degenerate,
                    "scale": scale,
                }));
            }
        }
    }
    let text = if all {
        format!(
            "all iterated commutators match the closed form through degree {}\n{}",
            order, lines
        )
    } else {
        format!("FAILED commutator relations through degree {}\n{}", order, lines)
    };
    Ok(Outcome {
        ok: all,
        result: json!({ "max_degree": order, "pairs": pairs, "holds": all }),
        csv,
        text,
    })
}

// ------------------------------------------------------------------ virasoro

fn rat_show(x: &Rational) -> String {
    x.to_string()
}

fn sym_show(x: &RatFunc) -> String {
    x.to_string_in("g")
}

/// Builds the singular-vector payload; shared with the verification suite so
/// the CLI report and the golden comparison go through one code path.
pub fn singvec_value<F: Field>(
    params: &VirasoroParams<F>,
    nu: &F,
    max_degree: usize,
    show: &impl Fn(&F) -> String,
) -> Value {
    let delta = fock_lowest_eigenvalue(params, nu);
    let levels = singular_vectors(params, nu, max_degree);
    let level_values: Vec<Value> = levels
        .iter()
        .map(|lvl| {
            let vectors: Vec<Vec<String>> = lvl
                .vectors
                .iter()
                .map(|v| v.iter().map(show).collect())
                .collect();
            json!({
                "degree": lvl.degree,
                "dimension": lvl.vectors.len(),
                "eigenvalue": show(&lvl.eigenvalue),
                "vectors": vectors,
            })
        })
        .collect();
    json!({
        "gamma": show(params.gamma()),
        "nu_pair": show(nu),
        "delta": show(&delta),
        "max_degree": max_degree,
        "levels": level_values,
    })
}

fn singvec_outcome_generic<F: Field>(
    params: &VirasoroParams<F>,
    lambda: i64,
    mu: i64,
    max_degree: usize,
    show: &impl Fn(&F) -> String,
) -> Outcome {
    let nu = F::from_int(lambda).sub(&params.gamma().mul(&F::from_int(mu)));
    let value = singvec_value(params, &nu, max_degree, show);
    let levels = value["levels"].as_array().expect("levels array");
    let mut csv = String::from("degree,dimension\n");
    let mut text = format!(
        "joint kernel of L_1, L_2 with nu = {} (delta = {}):\n",
        value["nu_pair"].as_str().unwrap(),
        value["delta"].as_str().unwrap()
    );
    for lvl in levels {
        let d = lvl["degree"].as_u64().unwrap();
        let dim = lvl["dimension"].as_u64().unwrap();
        csv.push_str(&format!("{},{}\n", d, dim));
        text.push_str(&format!(
            "  degree {}: dimension {} (L_0 eigenvalue {})\n",
            d,
            dim,
            lvl["eigenvalue"].as_str().unwrap()
        ));
    }
    Outcome {
        ok: true,
        result: value,
        csv,
        text,
    }
}

pub fn virasoro_delta_outcome(
    gamma: &Gamma,
    lambda: &[i64],
    mu: &[i64],
) -> Result<Outcome, String> {
    let lam = kac_label(lambda, "lambda")?;
    let mu = kac_label(mu, "mu")?;
    let (delta, c, nu) = match gamma {
        Gamma::Rat(r) => {
            let params =
                VirasoroParams::new(r.clone()).map_err(|_| "gamma must be nonzero".to_string())?;
            let delta = lowest_weight(&params, lam, mu).value;
            let nu = Rational::from_int(lam).sub(&params.gamma().mul(&Rational::from_int(mu)));
            (
                rat_show(&delta),
                rat_show(&params.central_charge()),
                rat_show(&nu),
            )
        }
        Gamma::Symbolic => {
            let params = VirasoroParams::new(RatFunc::var()).expect("generic point is nonzero");
            let delta = lowest_weight(&params, lam, mu).value;
            let nu = RatFunc::from_int(lam).sub(&params.gamma().mul(&RatFunc::from_int(mu)));
            (
                sym_show(&delta),
                sym_show(&params.central_charge()),
                sym_show(&nu),
            )
        }
    };
    let text = format!(
        "delta_(lambda={}, mu={}) = {}\ncentral charge c = {}\nnu = lambda - gamma*mu = {}\n",
        lam, mu, delta, c, nu
    );
    let csv = format!(
        "quantity,value\ndelta,{}\ncentral_charge,{}\nnu_pair,{}\n",
        delta, c, nu
    );
    Ok(Outcome {
        ok: true,
        result: json!({ "delta": delta, "central_charge": c, "nu_pair": nu }),
        csv,
        text,
    })
}

pub fn virasoro_singvec_outcome(
    gamma: &Gamma,
    lambda: &[i64],
    mu: &[i64],
    order: usize,
    cap: usize,
) -> Result<Outcome, String> {
    if order > cap {
        return Err(format!(
            "order {} exceeds the cap {}; pass --cap to raise it",
            order, cap
        ));
    }
    let lam = kac_label(lambda, "lambda")?;
    let mu = kac_label(mu, "mu")?;
    match gamma {
        Gamma::Rat(r) => {
            let params =
                VirasoroParams::new(r.clone()).map_err(|_| "gamma must be nonzero".to_string())?;
            Ok(singvec_outcome_generic(&params, lam, mu, order, &rat_show))
        }
        Gamma::Symbolic => {
            let params = VirasoroParams::new(RatFunc::var()).expect("generic point is nonzero");
            Ok(singvec_outcome_generic(&params, lam, mu, order, &sym_show))
        }
    }
}

fn shapovalov_outcome_generic<F: Field>(
    params: &VirasoroParams<F>,
    lambda: i64,
    mu: i64,
    level: usize,
    show: &impl Fn(&F) -> String,
) -> Outcome {
    let delta = lowest_weight(params, lambda, mu).value;
    let res = shapovalov(params, &delta, level);
    let gram: Vec<Vec<String>> = res
        .gram
        .to_dense()
        .iter()
        .map(|row| row.iter().map(show).collect())
        .collect();
    let basis = verma_basis(level);
    let mut text = format!(
        "Shapovalov form at level {} (delta = {}):\n  dimension {}, corank {}\n",
        level,
        show(&delta),
        res.dim,
        res.corank
    );
    for (word, row) in basis.iter().zip(&gram) {
        let label = if word.is_empty() {
            "1".to_string()
        } else {
            word.iter()
                .map(|p| format!("L_-{}", p))
                .collect::<Vec<_>>()
                .join(" ")
        };
        text.push_str(&format!("  {}: {}\n", label, row.join(", ")));
    }
    let csv = format!(
        "quantity,value\nlevel,{}\ndim,{}\ncorank,{}\ndelta,{}\n",
        res.level,
        res.dim,
        res.corank,
        show(&delta)
    );
    Outcome {
        ok: true,
        result: json!({
            "level": res.level,
            "dim": res.dim,
            "corank": res.corank,
            "delta": show(&delta),
            "basis": basis,
            "gram": gram,
        }),
        csv,
        text,
    }
}

pub fn shapovalov_outcome(
    gamma: &Gamma,
    lambda: &[i64],
    mu: &[i64],
    order: usize,
    cap: usize,
) -> Result<Outcome, String> {
    if order > cap {
        return Err(format!(
            "level {} exceeds the cap {}; pass --cap to raise it",
            order, cap
        ));
    }
    let lam = kac_label(lambda, "lambda")?;
    let mu = kac_label(mu, "mu")?;
    match gamma {
        Gamma::Rat(r) => {
            let params =
                VirasoroParams::new(r.clone()).map_err(|_| "gamma must be nonzero".to_string())?;
            Ok(shapovalov_outcome_generic(&params, lam, mu, order, &rat_show))
        }
        Gamma::Symbolic => {
            let params = VirasoroParams::new(RatFunc::var()).expect("generic point is nonzero");
            Ok(shapovalov_outcome_generic(&params, lam, mu, order, &sym_show))
        }
    }
}
