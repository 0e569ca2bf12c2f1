//! Acceptance suite. Run with `--nocapture` to see one PASS/FAIL line per
//! criterion.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use verlinde::charring::{char_element_value, ideal_member, iota_shriek, verlinde_points};
use verlinde::fusion::{
    charge_conjugate, frobenius_matrix, fuse, is_permutation_matrix, tensor_decompose, trace,
    CharElement, VerlindeOracle, INTEGRALITY_TOLERANCE,
};
use verlinde::noncompact::{
    all_generators, dirac_induce, q_map, quantize_product, quotient_product, regular_level_weights,
    NoncompactElement,
};
use verlinde::steinberg::{
    classify_fiber_sl2c, classify_fiber_sl2r, cover_member_sl2r, CoverPiece, StratumKind,
};
use verlinde::{level_weights, FusionContext, FusionElement, RootSystem, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// A₁ at ℓ = 1..=a1 and A₂ at ℓ = 1..=a2.
fn contexts(a1: u32, a2: u32) -> Vec<FusionContext> {
    let mut out: Vec<FusionContext> = (1..=a1).map(|l| FusionContext::new(rs("A1"), l)).collect();
    out.extend((1..=a2).map(|l| FusionContext::new(rs("A2"), l)));
    out
}

fn sigma(ctx: &FusionContext, mu: &Weight) -> FusionElement {
    FusionElement::basis(ctx, mu).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    let mut worst: f64 = 0.0;
    for ctx in contexts(8, 5) {
        let oracle = VerlindeOracle::new(&ctx).map_err(|e| e.to_string())?;
        let table = ctx.fusion_table();
        let n = ctx.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let z = oracle.raw_coefficient(a, b, c);
                    let dev = (z - Complex64::new(z.re.round(), 0.0)).norm();
                    worst = worst.max(dev);
                    ensure!(
                        dev.le(&INTEGRALITY_TOLERANCE),
                        "non-integral oracle entry {z}"
                    );
                    ensure!(
                        z.re.round() as i64 == table.get(a, b, c),
                        "{} level {}: N[{a}][{b}][{c}] exact {} vs oracle {z}",
                        ctx.root_system(),
                        ctx.fusion_level(),
                        table.get(a, b, c)
                    );
                }
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!(
        "{pairs} pairs agree, max deviation {worst:.1e}, {elapsed:.2?}"
    ))
}

fn ring_axioms() -> Outcome {
    let start = Instant::now();
    for ctx in contexts(6, 3).into_iter().chain([
        FusionContext::new(rs("A1"), 0),
        FusionContext::new(rs("A2"), 0),
    ]) {
        let table = ctx.fusion_table();
        let n = ctx.len();
        let name = format!("{} level {}", ctx.root_system(), ctx.fusion_level());
        let unit = FusionElement::unit(&ctx);
        for mu in ctx.basis() {
            let x = sigma(&ctx, mu);
            ensure!(
                fuse(&ctx, &unit, &x).unwrap() == x,
                "{name}: left unit fails at {mu}"
            );
            ensure!(
                fuse(&ctx, &x, &unit).unwrap() == x,
                "{name}: right unit fails at {mu}"
            );
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    ensure!(table.get(a, b, c) >= 0, "{name}: negative constant");
                    ensure!(
                        table.get(a, b, c) == table.get(b, a, c),
                        "{name}: not commutative"
                    );
                }
            }
        }
        let basis = ctx.basis();
        for a in basis {
            for b in basis {
                let ab = fuse(&ctx, &sigma(&ctx, a), &sigma(&ctx, b)).unwrap();
                for c in basis {
                    let sc = sigma(&ctx, c);
                    let left = fuse(&ctx, &ab, &sc).unwrap();
                    let bc = fuse(&ctx, &sigma(&ctx, b), &sc).unwrap();
                    let right = fuse(&ctx, &sigma(&ctx, a), &bc).unwrap();
                    ensure!(left == right, "{name}: associativity fails at {a},{b},{c}");
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!(
        "unit, commutativity, associativity, non-negativity hold ({elapsed:.2?})"
    ))
}

fn random_dominant(rng: &mut ChaCha8Rng, rs: &RootSystem, max_level: i64) -> Weight {
    loop {
        let labels: Vec<i64> = (0..rs.rank())
            .map(|_| rng.gen_range(0..=max_level))
            .collect();
        let w = Weight::new(labels);
        if rs.level(&w) <= max_level {
            return w;
        }
    }
}

fn vanishes_on_verlinde_points(ctx: &FusionContext, x: &CharElement) -> bool {
    verlinde_points(ctx).iter().all(|p| {
        char_element_value(ctx.root_system(), x, p).unwrap().norm() <= INTEGRALITY_TOLERANCE
    })
}

/// A random element built from generators of the ideal: summands that fold
/// onto a wall and differences `[V_λ] − s[V_μ]` with `λ` folding to `(μ, s)`.
fn random_ideal_element(rng: &mut ChaCha8Rng, ctx: &FusionContext) -> CharElement {
    let rs = ctx.root_system();
    let bound = 2 * ctx.fusion_level() as i64 + 2;
    let mut x = CharElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let lambda = random_dominant(rng, rs, bound);
        let c = rng.gen_range(1..=3);
        let mut gen = CharElement::irreducible(lambda.clone()).unwrap();
        if let (Some(mu), s) = ctx.affine_reduce(&lambda) {
            gen = gen.add(&CharElement::irreducible(mu).unwrap().scale(-s));
        }
        x = x.add(&gen.scale(c));
    }
    x
}

fn fht_surjectivity_kernel() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    let mut in_ideal = 0;
    let mut homomorphism_pairs = 0;
    for ctx in contexts(4, 4) {
        let rs = ctx.root_system().clone();
        let name = format!("{rs} level {}", ctx.fusion_level());
        let l = ctx.fusion_level() as i64;

        let image: BTreeSet<Weight> = ctx
            .basis()
            .iter()
            .map(|mu| {
                let img =
                    iota_shriek(&ctx, &CharElement::irreducible(mu.clone()).unwrap()).unwrap();
                assert_eq!(img, sigma(&ctx, mu));
                mu.clone()
            })
            .collect();
        ensure!(image.len() == ctx.len(), "{name}: ι_! not onto");

        for _ in 0..100 {
            let a = random_dominant(&mut rng, &rs, 2 * l);
            let b = random_dominant(&mut rng, &rs, 2 * l);
            let xa = CharElement::irreducible(a.clone()).unwrap();
            let xb = CharElement::irreducible(b.clone()).unwrap();
            let lhs = iota_shriek(&ctx, &xa.mul(&rs, &xb).unwrap()).unwrap();
            let rhs = fuse(
                &ctx,
                &iota_shriek(&ctx, &xa).unwrap(),
                &iota_shriek(&ctx, &xb).unwrap(),
            )
            .unwrap();
            ensure!(lhs == rhs, "{name}: ι_! not multiplicative on {a}, {b}");
            homomorphism_pairs += 1;
        }

        let mut samples: Vec<CharElement> = Vec::new();
        for lambda in level_weights(&rs, 2 * l as u32) {
            if ctx.affine_reduce(&lambda).1 == 0 {
                samples.push(CharElement::irreducible(lambda).unwrap());
            }
        }
        for i in 0..200 {
            let x = if i % 2 == 0 {
                random_ideal_element(&mut rng, &ctx)
            } else {
                let mut x = CharElement::zero();
                for _ in 0..rng.gen_range(1..=3) {
                    let lambda = random_dominant(&mut rng, &rs, 2 * l);
                    x = x.add(
                        &CharElement::irreducible(lambda)
                            .unwrap()
                            .scale(rng.gen_range(-2..=2)),
                    );
                }
                x
            };
            samples.push(x);
        }
        for x in &samples {
            let member = ideal_member(&ctx, x).unwrap();
            let vanishes = vanishes_on_verlinde_points(&ctx, x);
            ensure!(
                member == vanishes,
                "{name}: membership {member} but vanishing {vanishes} for {x}"
            );
            in_ideal += member as usize;
            checked += 1;
        }
    }
    Ok(format!(
        "onto in every context; {homomorphism_pairs} homomorphism pairs; {checked} kernel samples ({in_ideal} in I_K) agree with the character oracle"
    ))
}

fn frobenius_property() -> Outcome {
    let mut all = contexts(8, 5);
    all.extend(
        [
            ("A1", 0),
            ("A2", 0),
            ("B2", 2),
            ("C3", 2),
            ("G2", 3),
            ("A3", 2),
            ("D4", 1),
        ]
        .iter()
        .map(|&(n, l)| FusionContext::new(rs(n), l)),
    );
    for ctx in &all {
        let name = format!("{} level {}", ctx.root_system(), ctx.fusion_level());
        ensure!(
            trace(ctx, &FusionElement::unit(ctx)) == 1,
            "{name}: trace of unit"
        );
        let p = frobenius_matrix(ctx);
        ensure!(
            is_permutation_matrix(&p),
            "{name}: not a permutation matrix"
        );
        for (i, mu) in ctx.basis().iter().enumerate() {
            let dual = charge_conjugate(ctx, mu).unwrap();
            let j = ctx.index_of(&dual).unwrap();
            ensure!(p[i][j] == 1, "{name}: {mu} is not paired with {dual}");
        }
    }
    Ok(format!(
        "{} contexts: permutation pairing σ_μ ↔ σ_μ*, trace(1) = 1",
        all.len()
    ))
}

fn rho_shift_dictionary() -> Outcome {
    let mut tables = 0;
    for (name, kmax) in [("A1", 10u32), ("A2", 8)] {
        let rs = rs(name);
        let h = rs.dual_coxeter() as u32;
        for k in h..=kmax {
            let ctx = FusionContext::from_twist(rs.clone(), k).unwrap();
            let regular: BTreeSet<Weight> =
                regular_level_weights(&rs, k).unwrap().into_iter().collect();
            let shifted: BTreeSet<Weight> = ctx
                .basis()
                .iter()
                .map(|mu| dirac_induce(&rs, k, mu).unwrap().regular_weight)
                .collect();
            ensure!(
                shifted.len() == ctx.len(),
                "{name} k={k}: shift not injective"
            );
            ensure!(
                shifted == regular,
                "{name} k={k}: shift image differs from regular weights"
            );

            let table = ctx.fusion_table();
            for (a, ma) in ctx.basis().iter().enumerate() {
                let xa = q_map(&ctx, &sigma(&ctx, ma)).unwrap();
                for (b, mb) in ctx.basis().iter().enumerate() {
                    let xb = q_map(&ctx, &sigma(&ctx, mb)).unwrap();
                    let p: NoncompactElement = quotient_product(&ctx, &xa, &xb).unwrap();
                    for (c, mc) in ctx.basis().iter().enumerate() {
                        ensure!(
                            p.coeff(&(mc + rs.rho())) == table.get(a, b, c),
                            "{name} k={k}: transported product differs at {ma},{mb},{mc}"
                        );
                    }
                    ensure!(
                        p.terms().all(|(s, _)| regular.contains(s)),
                        "{name} k={k}: product leaves the regular span"
                    );
                }
            }
            tables += 1;
        }
    }
    Ok(format!(
        "bijection and transported tables verified for {tables} twist levels"
    ))
}

fn generator_count() -> Outcome {
    let mut all = contexts(8, 5);
    all.extend(
        [("B2", 2), ("G2", 2), ("C3", 1)]
            .iter()
            .map(|&(n, l)| FusionContext::new(rs(n), l)),
    );
    for ctx in &all {
        let name = format!("{} level {}", ctx.root_system(), ctx.fusion_level());
        let gens = all_generators(ctx).unwrap();
        ensure!(
            gens.len() == ctx.len(),
            "{name}: {} generators vs {} basis",
            gens.len(),
            ctx.len()
        );
        let labels: Vec<&Weight> = gens.iter().map(|g| &g.mu).collect();
        ensure!(
            labels.iter().copied().eq(ctx.basis().iter()),
            "{name}: index sets differ"
        );
        for g1 in &gens {
            for g2 in &gens {
                let q = quantize_product(ctx, g1, g2).unwrap();
                let f = fuse(ctx, &sigma(ctx, &g1.mu), &sigma(ctx, &g2.mu)).unwrap();
                ensure!(
                    q == f,
                    "{name}: quantize_product differs at {}, {}",
                    g1.mu,
                    g2.mu
                );
            }
        }
    }
    Ok(format!(
        "#D_μ = #Λ*_ℓ and Q(D_a)⋆Q(D_b) = σ_a⋆σ_b in {} contexts",
        all.len()
    ))
}

fn steinberg_examples() -> Outcome {
    use num_rational::Rational64 as Q;
    let zero = Q::from_integer(0);
    for n in -400..=400i64 {
        let r = Q::new(n, 40);
        let central = n == 80 || n == -80;
        let f = classify_fiber_sl2r(r);
        ensure!(
            f.strata.len() == if central { 3 } else { 1 },
            "SL2R strata at {r}"
        );
        if central {
            ensure!(
                f.strata[0].kind == StratumKind::PointClass,
                "point class first at {r}"
            );
            ensure!(
                f.strata[0].model == if n > 0 { "I₂" } else { "−I₂" },
                "central element at {r}"
            );
            ensure!(
                f.variety
                    .as_deref()
                    .is_some_and(|v| v.starts_with("V(x²+y²−z²)")),
                "cone model at {r}"
            );
        } else {
            let expected = if n.abs() > 80 {
                "SL(2,ℝ)/A"
            } else {
                "SL(2,ℝ)/SO(2)"
            };
            ensure!(
                f.strata[0].model == expected,
                "SL2R model at {r}: {}",
                f.strata[0].model
            );
        }
        let g = classify_fiber_sl2c(r, zero);
        ensure!(
            g.strata.len() == if central { 2 } else { 1 },
            "SL2C strata at {r}"
        );
        if !central {
            ensure!(g.strata[0].model == "SL(2,ℂ)/A", "SL2C model at {r}");
        }
        let off_axis = classify_fiber_sl2c(r, Q::new(1, 7));
        ensure!(
            off_axis.strata.len() == 1,
            "SL2C off-axis strata at {r}+i/7"
        );

        let pieces = cover_member_sl2r(r);
        let mut expected = BTreeSet::new();
        let x = n as f64 / 40.0;
        if x <= -3.0 {
            expected.insert(CoverPiece::F1);
        }
        if (-3.0..=0.0).contains(&x) {
            expected.insert(CoverPiece::F2);
        }
        if (0.0..=3.0).contains(&x) {
            expected.insert(CoverPiece::F3);
        }
        if x >= 3.0 {
            expected.insert(CoverPiece::F4);
        }
        ensure!(pieces == expected, "cover at {r}");
        ensure!(
            (pieces.len() == 2) == [-120, 0, 120].contains(&n),
            "double membership at {r}"
        );
    }
    Ok("801 traces in [-10,10]: strata, models and cover pieces match".to_string())
}

fn counting_identities() -> Outcome {
    for l in 0..=12u32 {
        let n = l as usize;
        ensure!(level_weights(&rs("A1"), l).len() == n + 1, "#Λ*_{l}(A1)");
        ensure!(
            level_weights(&rs("A2"), l).len() == (n + 1) * (n + 2) / 2,
            "#Λ*_{l}(A2)"
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let types = ["A1", "A2", "B2", "G2", "A3"];
    for i in 0..200 {
        let rs = rs(types[i % types.len()]);
        let a = random_dominant(&mut rng, &rs, 4);
        let b = random_dominant(&mut rng, &rs, 4);
        let t = tensor_decompose(&rs, &a, &b).unwrap();
        ensure!(
            t.dimension(&rs) == rs.weyl_dimension(&a) * rs.weyl_dimension(&b),
            "{rs}: dim({a} ⊗ {b}) mismatch"
        );
    }
    Ok("closed forms for ℓ ≤ 12; 200 random tensor products multiply dimensions".to_string())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 ring axioms", ring_axioms),
        ("3 FHT surjectivity/kernel", fht_surjectivity_kernel),
        ("4 Frobenius property", frobenius_property),
        ("5 rho-shift dictionary", rho_shift_dictionary),
        ("6 generator count", generator_count),
        ("7 Steinberg examples", steinberg_examples),
        ("8 counting identities", counting_identities),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
