// Acceptance checks, one PASS/FAIL line per criterion. Runs as a plain
// binary so the lines always appear in `cargo test` output.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use classinv::act::ActionContext;
use classinv::cli::{parse_expression, run};
use classinv::exact::Matrix;
use classinv::fft::{fft_verify, invariant_subspace_basis, minimal_generator_degrees};
use classinv::grp::{make_j, GroupSpec, Sampler};
use classinv::poly::{Polynomial, SpaceSignature};
use common::{
    naive_kernel_dim, oracle_elements, random_point, random_poly, s3, sign_group, transform_point,
    ROUND_TRIP_CORPUS,
};
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GRID_SEED: u64 = 7;
const GRID_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_SAMPLES: usize = 6;
const REYNOLDS_PAIRS: usize = 50;
const ACTION_CHECKS: usize = 100;
const SAMPLER_DRAWS: usize = 100;
const GENDEG_SEEDS: [u64; 5] = [0, 1, 2, 3, 4];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid_cases() -> Vec<(GroupSpec, SpaceSignature)> {
    let mut cases = Vec::new();
    for n in 1..=3 {
        for k in 1..=3 {
            cases.push((
                GroupSpec::orthogonal(n).unwrap(),
                SpaceSignature::vectors_only(n, k).unwrap(),
            ));
        }
    }
    for n in [2, 4] {
        for k in [2, 3] {
            cases.push((
                GroupSpec::symplectic(n).unwrap(),
                SpaceSignature::vectors_only(n, k).unwrap(),
            ));
        }
    }
    for n in [1, 2] {
        for (k, m) in [(1, 1), (2, 1), (2, 2)] {
            cases.push((
                GroupSpec::general(n).unwrap(),
                SpaceSignature::new(n, k, m).unwrap(),
            ));
        }
    }
    cases
}

fn certification_grid() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for (spec, sig) in grid_cases() {
        for d in [2, 4] {
            let r = fft_verify(&spec, sig, d, GRID_SEED)
                .map_err(|e| format!("{spec} {sig} d={d}: {e}"))?;
            ensure(r.certified && r.dim_span == r.dim_kernel, || {
                format!(
                    "{spec} {sig} d={d}: span {} vs kernel {}",
                    r.dim_span, r.dim_kernel
                )
            })?;
            cells += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= GRID_BUDGET, || {
        format!("grid took {elapsed:?}, budget {GRID_BUDGET:?}")
    })?;
    Ok(format!(
        "{cells} cells certified in {:.1} s",
        elapsed.as_secs_f64()
    ))
}

fn spot_dimensions() -> Outcome {
    let cases = [
        (
            "O(2) k=2 d=2",
            GroupSpec::orthogonal(2).unwrap(),
            SpaceSignature::vectors_only(2, 2).unwrap(),
            2,
            3,
        ),
        (
            "Sp(2) k=2 d=2",
            GroupSpec::symplectic(2).unwrap(),
            SpaceSignature::vectors_only(2, 2).unwrap(),
            2,
            1,
        ),
        (
            "GL(2) (1,1) d=2",
            GroupSpec::general(2).unwrap(),
            SpaceSignature::new(2, 1, 1).unwrap(),
            2,
            1,
        ),
        (
            "O(2) k=1 d=1",
            GroupSpec::orthogonal(2).unwrap(),
            SpaceSignature::vectors_only(2, 1).unwrap(),
            1,
            0,
        ),
    ];
    let mut found = Vec::new();
    for (label, spec, sig, d, want) in cases {
        let naive = naive_kernel_dim(sig, d, &oracle_elements(&spec, ORACLE_SAMPLES, GRID_SEED));
        let lib = invariant_subspace_basis(&spec, sig, d, GRID_SEED)
            .unwrap()
            .dim_kernel();
        ensure(naive == want && lib == want, || {
            format!("{label}: oracle {naive}, library {lib}, expected {want}")
        })?;
        found.push(format!("{label} -> {naive}"));
    }
    Ok(found.join(", "))
}

fn relation_robustness() -> Outcome {
    let spec = GroupSpec::orthogonal(2).unwrap();
    let sig = SpaceSignature::vectors_only(2, 3).unwrap();
    let r = fft_verify(&spec, sig, 6, GRID_SEED).map_err(|e| e.to_string())?;
    ensure(r.certified, || {
        format!("not certified: span {} kernel {}", r.dim_span, r.dim_kernel)
    })?;
    ensure(r.dim_span < r.free_count, || {
        format!(
            "dim_span {} not below free count {}",
            r.dim_span, r.free_count
        )
    })?;
    Ok(format!(
        "O(2) k=3 d=6 certified, dim_span {} < free_count {}",
        r.dim_span, r.free_count
    ))
}

fn reynolds_suite() -> Outcome {
    let groups = [
        (
            "{±1}^1",
            sign_group(1),
            SpaceSignature::vectors_only(1, 2).unwrap(),
        ),
        (
            "{±1}^2",
            sign_group(2),
            SpaceSignature::vectors_only(2, 1).unwrap(),
        ),
        ("S3", s3(), SpaceSignature::vectors_only(3, 1).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (label, spec, sig) in &groups {
        let ctx = ActionContext::new(spec.clone(), *sig).unwrap();
        let elements = spec.as_finite().unwrap().elements();
        for _ in 0..REYNOLDS_PAIRS {
            let phi = ctx.reynolds(&random_poly(&mut rng, *sig, 4, 5)).unwrap();
            let f = random_poly(&mut rng, *sig, 4, 5);
            let fr = ctx.reynolds(&f).unwrap();
            ensure(ctx.reynolds(&fr).unwrap() == fr, || {
                format!("{label}: not idempotent on {f}")
            })?;
            for g in elements {
                ensure(ctx.act(g, &fr).unwrap() == fr, || {
                    format!("{label}: output of {f} not invariant")
                })?;
            }
            let lhs = ctx.reynolds(&phi.mul(&f).unwrap()).unwrap();
            ensure(lhs == phi.mul(&fr).unwrap(), || {
                format!("{label}: module property fails for ({phi}, {f})")
            })?;
        }
    }
    Ok(format!(
        "{} groups x {REYNOLDS_PAIRS} pairs: idempotent, invariant, module property exact",
        groups.len()
    ))
}

fn action_suite() -> Outcome {
    let settings = [
        (
            GroupSpec::general(2).unwrap(),
            SpaceSignature::new(2, 1, 2).unwrap(),
        ),
        (
            GroupSpec::orthogonal(3).unwrap(),
            SpaceSignature::vectors_only(3, 2).unwrap(),
        ),
        (
            GroupSpec::symplectic(4).unwrap(),
            SpaceSignature::vectors_only(4, 1).unwrap(),
        ),
        (s3(), SpaceSignature::new(3, 1, 1).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (spec, sig) in &settings {
        let ctx = ActionContext::new(spec.clone(), *sig).unwrap();
        let pool = oracle_elements(spec, 2 * ACTION_CHECKS, 99);
        for i in 0..ACTION_CHECKS {
            let g = &pool[(2 * i) % pool.len()];
            let h = &pool[(2 * i + 1) % pool.len()];
            let f = random_poly(&mut rng, *sig, 3, 4);
            let gh_f = ctx.act(&g.compose(h), &f).unwrap();
            ensure(
                ctx.act(g, &ctx.act(h, &f).unwrap()).unwrap() == gh_f,
                || format!("{spec}: homomorphism fails"),
            )?;
            let moved = ctx.act(g, &f).unwrap();
            let graded = f.homogeneous_components().into_iter().all(|(d, part)| {
                let image = ctx.act(g, &part).unwrap();
                image.is_zero() || moved.homogeneous_components().get(&d) == Some(&image)
            });
            ensure(graded, || format!("{spec}: grading not preserved"))?;
            let p = random_point(&mut rng, sig.num_vars());
            let lhs = moved.evaluate_dense(&p).unwrap();
            let rhs = f.evaluate_dense(&transform_point(*sig, g, &p)).unwrap();
            ensure(lhs == rhs, || format!("{spec}: duality fails"))?;
        }
    }
    Ok(format!(
        "{ACTION_CHECKS} checks each for GL, O, Sp and a finite group"
    ))
}

fn sampler_suite() -> Outcome {
    let o3 = GroupSpec::orthogonal(3).unwrap();
    let (mut plus, mut minus) = (0, 0);
    for g in Sampler::new(&o3, 0).take(SAMPLER_DRAWS) {
        let g = g.map_err(|e| e.to_string())?;
        let m = g.matrix();
        ensure(m.transpose().mul(m).unwrap().is_identity(), || {
            "g^T g != I".into()
        })?;
        if m.determinant().unwrap().is_positive() {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    ensure(plus > 0 && minus > 0, || {
        format!("determinant signs: +{plus} -{minus}")
    })?;
    let sp4 = GroupSpec::symplectic(4).unwrap();
    let j = make_j(4).unwrap();
    for g in Sampler::new(&sp4, 0).take(SAMPLER_DRAWS) {
        let g = g.map_err(|e| e.to_string())?;
        let m: &Matrix = g.matrix();
        ensure(m.transpose().mul(&j).unwrap().mul(m).unwrap() == j, || {
            "g^T J g != J".into()
        })?;
    }
    Ok(format!("O(3): {SAMPLER_DRAWS} exact (det +1: {plus}, det -1: {minus}); Sp(4): {SAMPLER_DRAWS} exact"))
}

fn generator_degrees() -> Outcome {
    let spec = GroupSpec::orthogonal(2).unwrap();
    let sig = SpaceSignature::vectors_only(2, 1).unwrap();
    for seed in GENDEG_SEEDS {
        let r = minimal_generator_degrees(&spec, sig, 6, seed).map_err(|e| e.to_string())?;
        ensure(r.degrees == [2], || format!("seed {seed}: {:?}", r.degrees))?;
    }
    Ok(format!(
        "O(2) k=1 D=6 gives {{2}} for seeds {GENDEG_SEEDS:?}"
    ))
}

fn cli_determinism() -> Outcome {
    let args = [
        "classinv",
        "fft-verify",
        "--group",
        "o",
        "--n",
        "2",
        "--vectors",
        "2",
        "--degree",
        "4",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = run(args);
    let b = run(args);
    ensure(a.code == 0, || a.stderr.clone())?;
    ensure(a.stdout.as_bytes() == b.stdout.as_bytes(), || {
        "JSON differs between runs".into()
    })?;
    let sig = SpaceSignature::vectors_only(2, 2).unwrap();
    let family = GroupSpec::orthogonal(2).unwrap().family();
    for text in ROUND_TRIP_CORPUS {
        let f: Polynomial =
            parse_expression(text, sig, family).map_err(|e| format!("{text}: {e}"))?;
        let g = parse_expression(&f.to_string(), sig, family).map_err(|e| format!("{f}: {e}"))?;
        ensure(f == g, || format!("round trip changed {text:?}"))?;
    }
    Ok(format!(
        "{} identical bytes over 2 runs; {} expressions round-trip",
        a.stdout.len(),
        ROUND_TRIP_CORPUS.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("certification grid", certification_grid),
        ("spot dimensions vs brute force", spot_dimensions),
        ("relation robustness", relation_robustness),
        ("Reynolds suite", reynolds_suite),
        ("action suite", action_suite),
        ("sampler suite", sampler_suite),
        ("generator degrees", generator_degrees),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
