//! One function per subcommand. Each returns the verification verdict and
//! the JSON payloads; the caller wraps them into a [`RunReport`].
//!
//! [`RunReport`]: crate::report::RunReport

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use polyrec_core::algebra::rat;
use polyrec_core::brion::brion_check;
use polyrec_core::schurgt::{
    conjecture_w, counterexample_report, dominates, kostka, pattern_weight, schur_polynomial, schur_recursion_check,
    schur_recursion_check_from, sorted_desc, vertex_weights, GTPattern, SkewShape, WeightVector,
};
use polyrec_core::transform::{
    ehrhart_sequence, indicator_recursion_check, integer_point_transform, minimality_residuals, transform_sequence,
    verify_recursion, SampleBox,
};
use polyrec_core::{Error, ExponentVec, LaurentPoly, Polytope, Rational};
use serde_json::{json, Map, Value};

use crate::input::{InputError, ShapeFile};
use crate::report;

#[derive(Debug)]
pub struct Done {
    pub verified: bool,
    pub inputs: Value,
    pub artifacts: Value,
    /// Plain-text output replacing the generic `key: value` rendering.
    pub text: Option<String>,
}

#[derive(Debug)]
pub enum Failure {
    Input(InputError),
    Core(Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub type Outcome = Result<Done, Failure>;

fn residual_map(res: &BTreeMap<ExponentVec, LaurentPoly>) -> Value {
    res.iter().map(|(v, r)| (v.to_string(), Value::String(r.to_string()))).collect::<Map<_, _>>().into()
}

fn polys<'a>(ps: impl IntoIterator<Item = &'a LaurentPoly>) -> Value {
    ps.into_iter().map(|p| Value::String(p.to_string())).collect()
}

fn pq_inputs(p: &Polytope, q: &Polytope) -> Value {
    json!({ "p": report::polytope(p), "q": report::polytope(q) })
}

fn shape_inputs(s: &SkewShape) -> Value {
    json!({ "lambda": s.lambda().parts(), "mu": s.mu().parts(), "n": s.n() })
}

pub fn transform(p: &Polytope) -> Outcome {
    let sigma = integer_point_transform(p)?;
    Ok(Done {
        verified: true,
        inputs: json!({ "p": report::polytope(p) }),
        artifacts: json!({ "sigma": sigma.to_string(), "lattice_points": sigma.len() }),
        text: Some(format!("{sigma}\n")),
    })
}

pub fn recursion_verify(p: &Polytope, q: &Polytope, k_max: usize) -> Outcome {
    let inputs = json!({ "p": report::polytope(p), "q": report::polytope(q), "kmax": k_max });
    match verify_recursion(p, q, k_max) {
        Ok(cert) => Ok(Done {
            verified: true,
            inputs,
            artifacts: json!({
                "certificate": {
                    "verified": true,
                    "k_range": [cert.k_range.0, cert.k_range.1],
                    "minimal": cert.minimal,
                    "order": cert.order(),
                    "char_poly": polys(&cert.char_poly_coeffs),
                    "residuals": residual_map(&cert.minimality_residuals),
                }
            }),
            text: None,
        }),
        Err(Error::RecursionFailure { k, difference }) => Ok(Done {
            verified: false,
            inputs,
            artifacts: json!({
                "certificate": { "verified": false, "failed_at": k, "difference": difference.to_string() }
            }),
            text: None,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn minimality(p: &Polytope, q: &Polytope, k_max: usize) -> Outcome {
    let res = minimality_residuals(p, q)?;
    let sequence = transform_sequence(p, q, k_max + 1)?;
    Ok(Done {
        verified: true,
        inputs: pq_inputs(p, q),
        artifacts: json!({
            "minimal": res.values().all(|r| !r.is_zero()),
            "residuals": residual_map(&res),
            "all_residuals_zero": res.values().all(LaurentPoly::is_zero),
            "sequence": polys(&sequence),
        }),
        text: None,
    })
}

/// Default sample box: the bounding box of `(k + r)P` widened by one.
pub fn default_box(p: &Polytope, k: usize) -> Result<SampleBox, Failure> {
    use num_traits::ToPrimitive;

    let verts = p.vertices()?;
    let scale = rat((k + verts.len()) as i64);
    let n = p.ambient_dim();
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for i in 0..n {
        let coords: Vec<Rational> = verts.iter().map(|v| &v[i] * &scale).collect();
        let min = coords.iter().min().cloned().unwrap_or_else(Rational::zero);
        let max = coords.iter().max().cloned().unwrap_or_else(Rational::zero);
        lo[i] = min.floor().to_integer().to_i64().ok_or(Error::Overflow)? - 1;
        hi[i] = max.ceil().to_integer().to_i64().ok_or(Error::Overflow)? + 1;
    }
    Ok(SampleBox::new(lo, hi)?)
}

pub fn indicator_check(p: &Polytope, k: usize, sample: &SampleBox) -> Outcome {
    let inputs = json!({
        "p": report::polytope(p),
        "k": k,
        "box": { "lo": sample.lo, "hi": sample.hi },
    });
    match indicator_recursion_check(p, k, sample) {
        Ok(rep) => Ok(Done {
            verified: true,
            inputs,
            artifacts: json!({ "points_checked": rep.points_checked, "terms": rep.terms }),
            text: None,
        }),
        Err(Error::IndicatorMismatch { point, lhs, rhs }) => Ok(Done {
            verified: false,
            inputs,
            artifacts: json!({ "point": report::rationals(&point), "lhs": lhs, "rhs": rhs }),
            text: None,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn ehrhart(p: &Polytope, k_max: usize) -> Outcome {
    let rep = ehrhart_sequence(p, k_max)?;
    Ok(Done {
        verified: rep.annihilated,
        inputs: json!({ "p": report::polytope(p), "kmax": k_max }),
        artifacts: json!({
            "counts": rep.counts,
            "dim": rep.dim,
            "annihilated": rep.annihilated,
            "minimal_power": rep.minimal_power,
        }),
        text: None,
    })
}

pub fn brion(p: &Polytope) -> Outcome {
    let rep = brion_check(p)?;
    let vertices: Vec<Value> = rep
        .cones
        .iter()
        .map(|c| {
            json!({
                "vertex": report::exponent(&c.vertex),
                "numerator": c.transform.numerator.to_string(),
                "denominator_factors": c
                    .transform
                    .denominator_factors
                    .iter()
                    .map(|g| format!("1 - x^{g}"))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Done {
        verified: rep.verified,
        inputs: json!({ "p": report::polytope(p) }),
        artifacts: json!({ "vertices": vertices }),
        text: None,
    })
}

pub fn schur(shape: &SkewShape) -> Outcome {
    match schur_polynomial(shape) {
        Ok(s) => Ok(Done {
            verified: true,
            inputs: shape_inputs(shape),
            artifacts: json!({ "polynomial": s.to_string(), "terms": s.len() }),
            text: Some(format!("{s}\n")),
        }),
        Err(Error::SchurMismatch) => Ok(Done {
            verified: false,
            inputs: shape_inputs(shape),
            artifacts: json!({ "error": Error::SchurMismatch.to_string() }),
            text: None,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn gt_vertices(shape: &SkewShape) -> Outcome {
    let vw = vertex_weights(shape)?;
    let vertices: Vec<Value> = vw
        .vertices
        .iter()
        .map(|rows| {
            let sums: Vec<Rational> = rows.iter().map(|r| r.iter().sum()).collect();
            let weight: Vec<Rational> = sums.windows(2).map(|w| &w[0] - &w[1]).collect();
            json!({
                "pattern": rows.iter().map(|r| report::rationals(r)).collect::<Vec<_>>(),
                "weight": report::rationals(&weight),
            })
        })
        .collect();
    Ok(Done {
        verified: true,
        inputs: shape_inputs(shape),
        artifacts: json!({
            "vertices": vertices,
            "integral_weights": report::exponents(&vw.integral),
            "non_integral": vw.non_integral.len(),
            "coordinates": vw.coordinates().iter().map(report::rational).collect::<Vec<_>>(),
        }),
        text: None,
    })
}

pub fn kostka_number(shape: &SkewShape, weight: &[i64]) -> Outcome {
    let w = WeightVector::from(weight.to_vec());
    let k = kostka(shape, &w)?;
    let mut inputs = shape_inputs(shape);
    inputs["weight"] = json!(weight);
    Ok(Done {
        verified: true,
        inputs,
        artifacts: json!({ "weight": weight, "kostka": k }),
        text: Some(format!("{k}\n")),
    })
}

pub fn counterexample(shape: &SkewShape) -> Outcome {
    let rep = counterexample_report(shape)?;
    Ok(Done {
        verified: true,
        inputs: shape_inputs(shape),
        artifacts: json!({
            "conjecture_weights": report::exponents(&rep.conjecture_weights),
            "vertex_weights": report::exponents(&rep.vertex_weights),
            "non_integral_vertices": rep.non_integral_vertices,
            "vertex_coordinates": rep.vertex_coordinates.iter().map(report::rational).collect::<Vec<_>>(),
            "missing": report::exponents(&rep.missing),
            "divides": rep.divides,
            "refuted": rep.refuted,
        }),
        text: None,
    })
}

pub fn schur_recursion(file: &ShapeFile, l_max: usize) -> Outcome {
    let (kappa, lambda, mu, nu) = (file.kappa()?, file.lambda()?, file.mu()?, file.nu()?);
    let inputs = json!({
        "kappa": kappa.parts(),
        "lambda": lambda.parts(),
        "mu": mu.parts(),
        "nu": nu.parts(),
        "n": file.n,
        "l_min": file.l_min,
        "l_max": l_max,
    });
    let result = match file.l_min {
        Some(start) => schur_recursion_check_from(&kappa, &lambda, &mu, &nu, start, l_max),
        None => schur_recursion_check(&kappa, &lambda, &mu, &nu, l_max),
    };
    match result {
        Ok(rep) => Ok(Done {
            verified: true,
            inputs,
            artifacts: json!({
                "r": rep.r,
                "start": rep.start,
                "order": rep.certificate.order(),
                "k_range": [rep.certificate.k_range.0, rep.certificate.k_range.1],
                "char_poly": polys(&rep.certificate.char_poly_coeffs),
                "vertex_weights": report::exponents(&rep.vertex_weights),
                "contained_in_tableau_factors": rep.contained_in_tableau_factors,
                "sequence": polys(&rep.sequence),
            }),
            text: None,
        }),
        Err(Error::RecursionFailure { k, difference }) => Ok(Done {
            verified: false,
            inputs,
            artifacts: json!({ "failed_at": k, "difference": difference.to_string() }),
            text: None,
        }),
        Err(e) => Err(e.into()),
    }
}

/// The two decisive computations: the skew shape `(5,3,1)/(3,0,0)` whose
/// dominant weight `(4,2,0)` is not a vertex weight, and the segment with a
/// half-integral offset whose vertex recursion is not minimal.
pub fn repro() -> Outcome {
    let mut checks = Map::new();
    let mut check = |name: &str, ok: bool| {
        checks.insert(name.into(), Value::Bool(ok));
    };

    let shape = SkewShape::from_parts(&[5, 3, 1], &[3, 0, 0], 3)?;
    let target = WeightVector::from([4, 2, 0]);
    let pattern = GTPattern::new(vec![vec![1, 3, 5], vec![0, 1, 4], vec![0, 0, 3], vec![0, 0, 3]])?;
    check("pattern_weight_is_420", pattern_weight(&pattern) == target);
    check("420_dominates_difference", dominates(&sorted_desc(target.as_slice()), &shape.difference_sorted()));
    let k = kostka(&shape, &target)?;
    check("kostka_positive", k >= 1);
    check("420_in_conjecture_set", conjecture_w(&shape)?.contains(&target));
    let rep = counterexample_report(&shape)?;
    let allowed: BTreeSet<Rational> = [0, 1, 3, 5].map(rat).into_iter().collect();
    check("vertex_coordinates_in_0135", rep.vertex_coordinates.iter().all(|c| allowed.contains(c)));
    check("420_not_a_vertex_weight", !rep.vertex_weights.contains(&target));
    check("conjecture_refuted", rep.refuted);

    let seg = Polytope::from_integer_points(2, &[[0, 0], [1, 0]])?;
    let half = Rational::new(1.into(), 2.into());
    let offset = Polytope::point(vec![half.clone(), half]);
    let cert = verify_recursion(&seg, &offset, 5)?;
    check("non_lattice_recursion_holds", true);
    check("non_lattice_not_minimal", cert.minimal == Some(false));
    check("non_lattice_residuals_zero", cert.minimality_residuals.values().all(LaurentPoly::is_zero));
    let sequence = transform_sequence(&seg, &offset, 6)?;
    check("non_lattice_sequence_zero", sequence.iter().all(LaurentPoly::is_zero));

    let verified = checks.values().all(|v| v == &Value::Bool(true));
    let mut text = format!("verified: {verified}\n");
    for (name, ok) in &checks {
        let mark = if ok == &Value::Bool(true) { "PASS" } else { "FAIL" };
        text.push_str(&format!("{mark} {name}\n"));
    }
    Ok(Done {
        verified,
        inputs: json!({
            "counterexample": shape_inputs(&shape),
            "non_lattice": pq_inputs(&seg, &offset),
        }),
        artifacts: json!({
            "checks": checks,
            "counterexample": {
                "kostka_420": k,
                "vertex_weights": report::exponents(&rep.vertex_weights),
                "vertex_coordinates": rep.vertex_coordinates.iter().map(report::rational).collect::<Vec<_>>(),
                "missing": report::exponents(&rep.missing),
            },
            "non_lattice": {
                "minimal": cert.minimal,
                "residuals": residual_map(&cert.minimality_residuals),
            },
        }),
        text: Some(text),
    })
}
