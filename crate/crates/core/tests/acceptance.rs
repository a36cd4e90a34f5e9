//! Acceptance criteria, one line each. Runs as its own harness so the
//! PASS/FAIL summary is always printed; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use weylfix::binforms::{BinForm, ParamPoint};
use weylfix::g2lie::{
    build_g2, chevalley_involution, fixed_curve_hilbert, fixed_curve_tables,
    in_normalizer_not_torus, involution_checks, omega_quadrics, regular_h_stream,
    sample_omega_points, weyl_lift_w0, DIM, H1, H2,
};
use weylfix::models::{
    gl2_weyl_check, hironaka_genus, lefschetz_parity, required_lambda_degree, scroll16_model,
    sigma_fixed_conic, CohomologyTraces, CurveConfig,
};
use weylfix::p1bundles::SplittingType;
use weylfix::ratcurves::{
    admissible_types, bernardi_sweep, generic_splitting, join_scroll_degree, random_curves,
    same_point, sylvester_secant_params, RatCurve, SecantVerdict,
};
use weylfix::{Error, ExactMatrix, GaussRational};

const SEED: u64 = 0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn q(n: i64) -> GaussRational {
    GaussRational::from_int(n)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn st(d: &[i64]) -> SplittingType {
    SplittingType::new(d.to_vec())
}

fn g2_structure() -> Outcome {
    let a = build_g2();
    ensure(a.dim() == 14, format!("dim {}", a.dim()))?;
    // |α|² from the invariant form on the root lattice: 6 for long, 2 for short
    let gram = [[6i64, -3], [-3, 2]];
    let norms: Vec<i64> = a
        .roots()
        .all_roots
        .iter()
        .map(|r| {
            let c = r.coords;
            (0..2)
                .map(|i| (0..2).map(|j| c[i] * gram[i][j] * c[j]).sum::<i64>())
                .sum()
        })
        .collect();
    let long = norms.iter().filter(|&&n| n == 6).count();
    let short = norms.iter().filter(|&&n| n == 2).count();
    ensure(
        (long, short) == (6, 6),
        format!("{long} long, {short} short"),
    )?;
    for (r, n) in a.roots().all_roots.iter().zip(&norms) {
        ensure(
            r.long == (*n == 6),
            format!("length flag on {:?}", r.coords),
        )?;
    }

    let basis: Vec<Vec<GaussRational>> = (0..DIM).map(|i| a.basis_vector(i)).collect();
    let br = |x: &[GaussRational], y: &[GaussRational]| a.bracket(x, y);
    let mut jacobi = 0;
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in j + 1..DIM {
                let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                let s: Vec<GaussRational> = (0..DIM)
                    .map(|t| &(&br(x, &br(y, z))[t] + &br(y, &br(z, x))[t]) + &br(z, &br(x, y))[t])
                    .collect();
                jacobi += usize::from(s.iter().any(|c| !c.is_zero()));
            }
        }
    }
    ensure(jacobi == 0, format!("{jacobi} Jacobi failures"))?;

    // Killing form as tr(ad x ad y), independent of the stored table
    let ads: Vec<ExactMatrix> = (0..DIM).map(|i| a.ad_basis(i)).collect();
    let kill = ExactMatrix::from_rows(
        (0..DIM)
            .map(|i| (0..DIM).map(|j| (&ads[i] * &ads[j]).trace()).collect())
            .collect(),
    )
    .unwrap();
    ensure(
        kill == a.killing_matrix(),
        "stored Killing form differs from tr(ad x ad y)",
    )?;
    let kappa = |x: &[GaussRational], y: &[GaussRational]| -> GaussRational {
        (0..DIM)
            .flat_map(|i| (0..DIM).map(move |j| (i, j)))
            .map(|(i, j)| &(&x[i] * &kill[(i, j)]) * &y[j])
            .sum()
    };
    let mut invariance = 0;
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let (x, y, z) = (&basis[i], &basis[j], &basis[k]);
                let v = &kappa(&br(x, y), z) + &kappa(y, &br(x, z));
                invariance += usize::from(!v.is_zero());
            }
        }
    }
    ensure(invariance == 0, format!("{invariance} invariance failures"))?;
    let det = kill.determinant().unwrap();
    ensure(!det.is_zero(), "Killing form degenerate")?;
    ensure(a.verify().all_ok(), "built-in verification")?;
    Ok(format!(
        "6 long + 6 short roots, 364 Jacobi triples, det Killing = {det}"
    ))
}

fn central_involution() -> Outcome {
    let a = build_g2();
    let tau = chevalley_involution(&a);
    let c = involution_checks(&a, &tau);
    ensure(c.all_ok(), format!("{c:?}"))?;
    ensure((c.plus_dim, c.minus_dim) == (6, 8), "eigenspace dims")?;
    // h ↦ -h and e_α ↦ -e_{-α}, read off the matrix directly
    for r in &a.roots().all_roots {
        let img = tau.apply(&a.e(r.coords)).unwrap();
        let want: Vec<GaussRational> = a.e(r.neg().coords).iter().map(|x| -x).collect();
        ensure(img == want, format!("tau e{:?}", r.coords))?;
    }
    let w = weyl_lift_w0(&a).map_err(|e| e.to_string())?;
    let n2 = w.tau.matrix() * w.tau.matrix();
    ensure(n2.is_identity(), "lift is not of order 2")?;
    ensure(!w.tau.matrix().is_identity(), "lift is trivial")?;
    ensure(
        in_normalizer_not_torus(w.tau.matrix()),
        "lift not in N(T) \\ T",
    )?;
    for h in [H1, H2] {
        let img = w.tau.apply(&a.basis_vector(h)).unwrap();
        ensure(
            img.iter().zip(a.basis_vector(h)).all(|(x, y)| *x == -y),
            "lift is not -1 on h",
        )?;
    }
    let lc = involution_checks(&a, &w.tau);
    ensure(
        lc.all_ok() && (lc.plus_dim, lc.minus_dim) == (6, 8),
        format!("{lc:?}"),
    )?;
    Ok("tau and the w0 lift: automorphisms of order 2, -1 on h, dims (6, 8)".into())
}

fn fixed_sextics() -> Outcome {
    let a = build_g2();
    let tau = chevalley_involution(&a);
    let samples = sample_omega_points(&a, 160, SEED);
    let oq = omega_quadrics(&a, &samples, SEED).map_err(|e| e.to_string())?;
    let hs: Vec<[i64; 2]> = regular_h_stream(&a, SEED).take(3).collect();
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for &h in &hs {
        let fc = fixed_curve_tables(&a, &oq.ideal, &tau, h, 4).map_err(|e| e.to_string())?;
        for (t, span) in [(&fc.plus, 6usize), (&fc.minus, 7)] {
            let want: Vec<usize> = std::iter::once(span)
                .chain((2..=4).map(|k| 6 * k + 1))
                .collect();
            lines.push(format!("h={h:?} {} HF = {:?}", t.locus, t.values));
            if t.values != want {
                failures.push(format!(
                    "h={h:?} {}: HF = {:?}, want {:?}",
                    t.locus, t.values, want
                ));
            }
        }
        if let Err(Error::HilbertMismatch { locus, table, .. }) =
            fixed_curve_hilbert(&a, &oq.ideal, &tau, h, 4)
        {
            lines.push(format!(
                "fixed_curve_hilbert rejects {locus}: {:?}",
                table.values
            ));
        }
    }
    if failures.is_empty() {
        Ok(lines.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

fn normal_bundles() -> Outcome {
    let p1 = BinForm::from_ints(&[1, 1]);
    let p2 = BinForm::from_ints(&[1, 2]);
    let mut comps: Vec<BinForm> = (0..5)
        .map(|k| &BinForm::monomial(5, k, q(1)) * &p1)
        .collect();
    comps.push(&BinForm::monomial(5, 5, q(1)) * &p2);
    let cases = [
        ("C6", RatCurve::rational_normal(6), st(&[8, 8, 8, 8, 8])),
        (
            "no v^3",
            RatCurve::monomial(6, &[0, 1, 2, 4, 5, 6]),
            st(&[9, 9, 8, 8]),
        ),
        (
            "no u^4v^2",
            RatCurve::monomial(6, &[0, 1, 3, 4, 5, 6]),
            st(&[9, 9, 8, 8]),
        ),
        (
            "p1/p2",
            RatCurve::new(comps).map_err(|e| e.to_string())?,
            st(&[10, 8, 8, 8]),
        ),
    ];
    for (name, c, want) in &cases {
        let got = c.normal_bundle_type().map_err(|e| format!("{name}: {e}"))?;
        ensure(got == *want, format!("{name}: {got} != {want}"))?;
    }
    Ok("C6 {8^5}, monomial sextics {9,9,8,8}, p1/p2 family {10,8,8,8}".into())
}

fn sacchiero() -> Outcome {
    let g = generic_splitting(6, 5).map_err(|e| e.to_string())?;
    ensure(g == st(&[9, 9, 8, 8]), format!("generic {g}"))?;
    let adm = admissible_types(6, 5);
    let want: BTreeSet<SplittingType> = [st(&[9, 9, 8, 8]), st(&[10, 8, 8, 8])]
        .into_iter()
        .collect();
    ensure(adm == want, format!("admissible {adm:?}"))?;
    let corpus = random_curves(60, 3..=6, 8, SEED);
    ensure(corpus.len() >= 50, "corpus too small")?;
    for c in &corpus {
        let (n, d) = (c.ambient_dim(), c.degree());
        ensure((3..=6).contains(&n) && d <= 8, "corpus out of range")?;
        ensure(c.is_unramified(), "ramified curve in corpus")?;
        let t = c.normal_bundle_type().map_err(|e| e.to_string())?;
        let sum: i64 = t.degrees().iter().sum();
        ensure(
            sum == (n as i64 + 1) * d as i64 - 2 && t.rank() == n - 1,
            format!("n={n} d={d} type {t}"),
        )?;
    }
    Ok(format!(
        "generic {g}, 2 admissible types, c1 conserved on {} curves",
        corpus.len()
    ))
}

fn bernardi() -> Outcome {
    let rep = bernardi_sweep(6, 100, SEED).map_err(|e| e.to_string())?;
    ensure(
        rep.cases.len() >= 100,
        format!("{} centers", rep.cases.len()),
    )?;
    let generic = st(&[9, 9, 8, 8]);
    let mut bad = 0;
    for case in &rep.cases {
        use weylfix::ratcurves::ProjectionOutcome::*;
        let rank3 = case.hankel_rank == 3;
        let balanced = matches!(&case.outcome, Immersed(t) if *t == generic);
        bad += usize::from(rank3 != balanced);
    }
    ensure(
        bad == 0 && rep.counterexamples == 0,
        format!("{bad} counterexamples"),
    )?;

    for (lambda, mu) in [
        (q(1), q(2)),
        (q(2), q(-1)),
        (GaussRational::from_ratio(-1, 2), q(3)),
    ] {
        let mut p: Vec<GaussRational> = (0..6).map(|k| lambda.pow(k)).collect();
        p.push(&lambda.pow(5) * &mu);
        let v = sylvester_secant_params(&p).map_err(|e| e.to_string())?;
        let (s, t) = match &v {
            SecantVerdict::SecantPair(s, t) => (s.clone(), t.clone()),
            other => return Err(format!("verdict {other:?} for lambda = {lambda}")),
        };
        let got: BTreeSet<String> = [s.to_string(), t.to_string()].into();
        let want: BTreeSet<String> = [
            ParamPoint::affine(lambda.clone()).to_string(),
            ParamPoint::infinity().to_string(),
        ]
        .into();
        ensure(got == want, format!("secant params {got:?}"))?;
        let proj = RatCurve::rational_normal(6)
            .project_from(&p)
            .map_err(|e| e.to_string())?;
        let x = proj.curve.point_at(&ParamPoint::affine(lambda.clone()));
        let y = proj.curve.point_at(&ParamPoint::infinity());
        ensure(same_point(&x, &y), "no self-intersection")?;
        if lambda.is_one() {
            let mut target = vec![q(0); x.len()];
            target[x.len() - 1] = q(1);
            ensure(same_point(&x, &target), format!("double point at {x:?}"))?;
        }
    }
    Ok(format!(
        "{} centers, 0 counterexamples; secant centers give (1:l), (0:1) with a node",
        rep.cases.len()
    ))
}

fn scroll_degrees() -> Outcome {
    for (n, want) in [(1usize, 2usize), (3, 6), (6, 12)] {
        let c = RatCurve::rational_normal(n);
        let amb = 2 * n + 1;
        let a = c.embed(amb, 0).map_err(|e| e.to_string())?;
        let b = c.embed(amb, n + 1).map_err(|e| e.to_string())?;
        // two generic linear functionals on P^(2n+1)
        let l1: Vec<GaussRational> = (0..=amb as i64).map(|k| q(k * k % 7 + 1)).collect();
        let l2: Vec<GaussRational> = (0..=amb as i64).map(|k| q((3 * k + 2) % 5 - 2)).collect();
        let j = join_scroll_degree(&a, &b, &[l1, l2]).map_err(|e| e.to_string())?;
        ensure(j == want, format!("join of C{n}'s: degree {j}"))?;
    }
    let r = scroll16_model(SEED).map_err(|e| e.to_string())?;
    ensure(r.join_degree == 12, "scroll join degree")?;
    ensure(
        r.ruling_tangent_dim == 3 && r.tangent_span_contains_ruling,
        format!("{r:?}"),
    )?;
    Ok("join degrees 2, 6, 12; tangent planes along a ruling span a P3".into())
}

fn sigma_model() -> Outcome {
    let (c, r) = sigma_fixed_conic().map_err(|e| e.to_string())?;
    ensure(
        c.ambient_dim() == 8 && c.degree() == 4,
        format!("P^{} degree {}", c.ambient_dim(), c.degree()),
    )?;
    ensure(
        r.segre_degree == 4 && r.factor_degrees == [2, 2],
        format!("{r:?}"),
    )?;
    ensure(
        r.trace_form_vanishes && r.conic_on_trace_quadric && r.on_segre,
        format!("{r:?}"),
    )?;
    // the conic (u² - v², i(u² + v²), 2uv) on x1² + x2² + x3² = 0, checked directly
    let i = GaussRational::i();
    let x1 = BinForm::from_ints(&[1, 0, -1]);
    let x2 = BinForm::from_ints(&[1, 0, 1]).scale(&i);
    let x3 = BinForm::from_ints(&[0, 2, 0]);
    let s = &(&(&x1 * &x1) + &(&x2 * &x2)) + &(&x3 * &x3);
    ensure(s.is_zero(), "x1^2 + x2^2 + x3^2 != 0")?;
    Ok("quartic in P8, conic factors, trace form vanishes".into())
}

fn genus_parity() -> Outcome {
    let cfg = |g: &[i64], m: &[u64]| {
        CurveConfig::new(
            g.iter()
                .enumerate()
                .map(|(k, &x)| (format!("C{k}"), x))
                .collect(),
            m.iter()
                .enumerate()
                .map(|(k, &x)| (format!("P{k}"), x))
                .collect(),
        )
        .unwrap()
    };
    ensure(hironaka_genus(&cfg(&[0, 0], &[1])) == 0, "two lines")?;
    ensure(
        hironaka_genus(&cfg(&[0, 0, 0], &[3])) == 1,
        "three concurrent lines",
    )?;
    let lambda = required_lambda_degree(&[0, 0, 0], 5);
    ensure(
        lambda == 7 && lambda - 2 == 5,
        format!("deg Lambda {lambda}"),
    )?;
    // general lines x=0, y=0, z=0, x+y+z=0: d lines, C(d,2) nodes
    for d in 1..=4u64 {
        let nodes = d * (d - 1) / 2;
        let g = hironaka_genus(&cfg(&vec![0; d as usize], &vec![1; nodes as usize]));
        let plane = (d as i64 - 1) * (d as i64 - 2) / 2;
        ensure(g == plane, format!("d = {d}: {g} != {plane}"))?;
    }
    let traces = CohomologyTraces::fano_mukai(0);
    ensure(
        traces.even_traces().iter().sum::<i64>() == 4,
        "even trace sum",
    )?;
    let rep = lefschetz_parity(&traces);
    ensure(
        rep.parity_ok && rep.lefschetz.rem_euclid(4) == 0,
        format!("{rep:?}"),
    )?;
    // V^τ = two disjoint P1's: e = 2 + 2
    let euler_fixed = 2 + 2;
    ensure(
        euler_fixed == 4 && euler_fixed % 4 == 0,
        "fixed locus Euler number",
    )?;
    for m in -3..=3 {
        let r = lefschetz_parity(&CohomologyTraces::fano_mukai(m));
        ensure(
            r.parity_ok && r.lefschetz == 4 - 4 * m,
            format!("m = {m}: {r:?}"),
        )?;
    }
    Ok("genus 0, 1, 5 = 7 - 2, nodal lines; even traces 4, e(V^tau) = 4".into())
}

fn gl2() -> Outcome {
    let r = gl2_weyl_check();
    ensure(r.pass(), format!("{r:?}"))?;
    ensure(
        !r.printed_n_squared_zero && r.printed_trace == q(2) && !r.note.is_empty(),
        "discrepancy not flagged",
    )?;
    let i = GaussRational::i();
    for (sign, b) in [(1i64, &r.branches[0]), (-1, &r.branches[1])] {
        let si = i.clone() * q(sign);
        let n =
            ExactMatrix::from_rows(vec![vec![q(1), si.clone()], vec![si.clone(), q(-1)]]).unwrap();
        ensure(b.n == n, "corrected n")?;
        ensure((&n * &n).is_zero(), "n^2 != 0")?;
        // exp(tn) = 1 + tn because n² = 0
        for t in [q(1), q(-3), GaussRational::from_ratio(2, 5)] {
            let g = ExactMatrix::identity(2).add(&n.scale(&t)).unwrap();
            let disp = ExactMatrix::from_rows(vec![
                vec![&q(1) + &t, &si * &t],
                vec![&si * &t, &q(1) - &t],
            ])
            .unwrap();
            ensure(g == disp, "exp(tn) display")?;
            let c = g.transpose().inverse().unwrap();
            let inv = ExactMatrix::identity(2).sub(&n.scale(&t)).unwrap();
            ensure(c == inv, "Cartan involution does not invert")?;
        }
    }
    Ok("corrected n nilpotent, exp(tn) as displayed, inverted by g -> (g^t)^-1; printed matrix flagged".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("G2 structure", 5, g2_structure),
        ("central Weyl involution", 30, central_involution),
        ("fixed sextic curves", 120, fixed_sextics),
        ("normal bundles", 10, normal_bundles),
        ("splitting type formulas", 30, sacchiero),
        ("catalecticant rank and projections", 60, bernardi),
        ("scroll degrees", 10, scroll_degrees),
        ("Segre model", 2, sigma_model),
        ("genus and parity", 2, genus_parity),
        ("GL(2) check", 1, gl2),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let out = out.and_then(|s| {
            if elapsed > Duration::from_secs(*limit) {
                Err(format!(
                    "took {:.2} s, limit {limit} s",
                    elapsed.as_secs_f64()
                ))
            } else {
                Ok(s)
            }
        });
        let (tag, detail) = match &out {
            Ok(s) => ("PASS", s),
            Err(s) => ("FAIL", s),
        };
        failed += usize::from(out.is_err());
        println!(
            "{tag} criterion {:>2} {name} ({:.2} s): {detail}",
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
