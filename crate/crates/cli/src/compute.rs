use std::io::Write;

use macpoly::nonattacking::{e_integral, j_compact, j_hhl, p_poly, pr1};
use macpoly::quasisymmetric::{demazure_t_atom, g_integral, qs_gamma};
use macpoly::tableaux::{filling_count, htilde_brute, htilde_compact};
use macpoly::{Composition, MPoly, Partition, RationalForm};

use crate::{ComputeArgs, Failure, Format, Method, Outcome, Polynomial};

#[derive(Debug, PartialEq, Eq)]
enum Value {
    Poly(MPoly),
    Quotient(RationalForm),
}

impl Value {
    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Value::Poly(p), Format::Json) => p.to_json(),
            (Value::Poly(p), Format::Latex) => p.to_latex(),
            (Value::Poly(p), Format::Text) => p.to_string(),
            (Value::Quotient(r), Format::Json) => r.to_json(),
            (Value::Quotient(r), Format::Latex) => r.to_latex(),
            (Value::Quotient(r), Format::Text) => r.to_string(),
        }
    }
}

fn parse<T: std::str::FromStr<Err = macpoly::Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse()?)
}

fn strong(s: &str) -> Result<Composition, Failure> {
    let gamma: Composition = parse(s)?;
    if gamma.parts().contains(&0) {
        return Err(Failure::Usage(format!("{gamma} is not a strong composition")));
    }
    Ok(gamma)
}

fn check_cap(size: usize, cap: usize) -> Outcome {
    if size > cap {
        return Err(Failure::Usage(format!(
            "diagram size {size} exceeds the brute-force cap {cap} (raise it with --brute-cap)"
        )));
    }
    Ok(())
}

/// Runs the selected route; `Both` runs the two routes and compares them.
fn routes<T: PartialEq>(
    method: Method,
    compact: impl FnOnce() -> Result<T, Failure>,
    brute: impl FnOnce() -> Result<T, Failure>,
) -> Result<T, Failure> {
    match method {
        Method::Compact => compact(),
        Method::Brute => brute(),
        Method::Both => {
            let a = compact()?;
            let b = brute()?;
            if a == b {
                Ok(a)
            } else {
                Err(Failure::Mismatch("compact and brute-force routes differ".into()))
            }
        }
    }
}

fn single(method: Method, poly: Polynomial, f: impl FnOnce() -> Result<MPoly, Failure>) -> Result<Value, Failure> {
    if method != Method::Compact {
        return Err(Failure::Usage(format!("{poly:?} has only the compact route")));
    }
    f().map(Value::Poly)
}

fn compute(args: &ComputeArgs) -> Result<Value, Failure> {
    let method = args.method;
    let cap = args.brute_cap;
    match args.polynomial {
        Polynomial::Htilde => {
            let lam: Partition = parse(&args.shape)?;
            let n = args.nvars.unwrap_or(lam.size());
            let brute = || {
                check_cap(lam.size(), cap)?;
                if filling_count(&lam, n).is_none() {
                    return Err(Failure::Usage("too many fillings to enumerate".into()));
                }
                Ok(htilde_brute(&lam, n))
            };
            routes(method, || Ok(htilde_compact(&lam, n)), brute).map(Value::Poly)
        }
        Polynomial::J => {
            let mu: Partition = parse(&args.shape)?;
            let n = args.nvars.unwrap_or(mu.size());
            let brute = || {
                check_cap(mu.size(), cap)?;
                Ok(j_hhl(&mu, n))
            };
            routes(method, || Ok(j_compact(&mu, n)?), brute).map(Value::Poly)
        }
        Polynomial::P => {
            let mu: Partition = parse(&args.shape)?;
            let n = args.nvars.unwrap_or(mu.size());
            let brute = || {
                check_cap(mu.size(), cap)?;
                Ok(RationalForm::new(j_hhl(&mu, n), pr1(&mu).with_nvars(n)?)?)
            };
            routes(method, || Ok(p_poly(&mu, n)?), brute).map(Value::Quotient)
        }
        Polynomial::E => {
            let alpha: Composition = parse(&args.shape)?;
            let n = args.nvars.unwrap_or(alpha.len());
            single(method, Polynomial::E, || Ok(e_integral(&alpha, n)?))
        }
        Polynomial::G => {
            let gamma = strong(&args.shape)?;
            let n = args.nvars.unwrap_or(gamma.size());
            single(method, Polynomial::G, || Ok(g_integral(&gamma, n)?))
        }
        Polynomial::Qs => {
            let gamma = strong(&args.shape)?;
            let n = args.nvars.unwrap_or(gamma.size());
            single(method, Polynomial::Qs, || Ok(qs_gamma(&gamma, n)?))
        }
        Polynomial::Atom => {
            let alpha: Composition = parse(&args.shape)?;
            let n = args.nvars.unwrap_or(alpha.len());
            single(method, Polynomial::Atom, || Ok(demazure_t_atom(&alpha, n)?))
        }
    }
}

pub fn run(args: &ComputeArgs, out: &mut dyn Write) -> Outcome {
    let value = compute(args)?;
    writeln!(out, "{}", value.render(args.format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_reports_disagreement() {
        let r = routes(Method::Both, || Ok(1), || Ok(2));
        assert!(matches!(r, Err(Failure::Mismatch(_))));
        assert!(matches!(routes(Method::Both, || Ok(1), || Ok(1)), Ok(1)));
        assert!(matches!(routes(Method::Brute, || Ok(1), || Ok(2)), Ok(2)));
    }

    #[test]
    fn cap_is_inclusive() {
        assert!(check_cap(8, 8).is_ok());
        assert!(matches!(check_cap(9, 8), Err(Failure::Usage(_))));
    }
}
