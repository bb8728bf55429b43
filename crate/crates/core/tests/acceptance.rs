//! The acceptance gate: eleven desk-scale criteria, each printed as one
//! pass/fail line with its runtime. Time limits are pinned next to each
//! criterion. Run `cargo test --test acceptance -- --nocapture` to see
//! the whole table; any failure also reproduces it in the panic message.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use arithmos_core::dioph::{builtin_families, diophantine_enumerator, verify_representation};
use arithmos_core::machine::{parse_program, run, RunStatus, ADD_PROGRAM, MUL_PROGRAM};
use arithmos_core::numbers::galois::classification_corpus;
use arithmos_core::numbers::{
    galois_group, quadratic_gauss_sum, splitting_field_degree, symmetry_profile, AlgebraicNumber,
    Rational, UniPolynomial,
};
use arithmos_core::reductions::{
    canonicalize_program, decode_program, encode_program, fourcolor_counterexample_enumerator,
    miu_theorems_capped, p_of_n,
};
use arithmos_core::sets::{
    collect_items, pair, tuple_decode, tuple_encode, unpair, DecidablePredicate,
};
use arithmos_core::topo::{
    abelianization, complex_isomorphism_classes, enumerate_complexes, fixtures,
    fundamental_group_presentation, homology, ComplexFilter, SimplicialComplex,
};
use num_bigint::{BigInt, BigUint};

type Criterion = (&'static str, Option<Duration>, fn() -> Result<String, String>);

#[test]
fn acceptance_gate() {
    let criteria: Vec<Criterion> = vec![
        (
            "representation equivalence",
            Some(Duration::from_secs(10)),
            representation_equivalence,
        ),
        ("diophantine enumerator", None, squares_enumerator),
        (
            "gauss sum identities",
            Some(Duration::from_secs(1)),
            gauss_sum_identities,
        ),
        (
            "galois corpus vs splitting oracle",
            Some(Duration::from_secs(60)),
            galois_corpus,
        ),
        ("constructibility verdicts", None, constructibility_verdicts),
        (
            "homology patterns",
            Some(Duration::from_secs(10)),
            homology_patterns,
        ),
        (
            "manifold enumeration",
            Some(Duration::from_secs(120)),
            manifold_enumeration,
        ),
        (
            "four-color at desk scale",
            Some(Duration::from_secs(300)),
            four_color_desk_scale,
        ),
        (
            "machine correctness",
            Some(Duration::from_secs(5)),
            machine_correctness,
        ),
        ("miu properties", Some(Duration::from_secs(10)), miu_properties),
        (
            "pairing bijectivity",
            Some(Duration::from_secs(1)),
            pairing_bijectivity,
        ),
    ];

    let mut failures = Vec::new();
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let number = i + 1;
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|cause| {
            let text = cause
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| cause.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "non-string panic".to_string());
            Err(format!("panicked: {text}"))
        });
        let elapsed = start.elapsed();
        let seconds = format!("{:.2}s", elapsed.as_secs_f64());
        let verdict = match (&outcome, limit) {
            (Ok(_), Some(cap)) if elapsed > *cap => Err(format!(
                "correct but took {seconds}, over the {}s limit",
                cap.as_secs()
            )),
            (Ok(detail), _) => Ok(detail.clone()),
            (Err(reason), _) => Err(reason.clone()),
        };
        match verdict {
            Ok(detail) => println!("[PASS] {number:2}. {name} ({seconds}): {detail}"),
            Err(reason) => {
                println!("[FAIL] {number:2}. {name} ({seconds}): {reason}");
                failures.push(format!("{number}. {name}: {reason}"));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "acceptance criteria failed:\n{}",
        failures.join("\n")
    );
}

/// 1. The three builtin families agree with their native predicates over
///    t in [0, 200] with witness bound 10^4: no disagreements, nothing
///    unresolved.
fn representation_equivalence() -> Result<String, String> {
    let families = builtin_families();
    let predicates = [
        ("even", DecidablePredicate::even()),
        ("square", DecidablePredicate::square()),
        ("composite", DecidablePredicate::composite()),
    ];
    for (name, predicate) in predicates {
        let family = families
            .get(name)
            .ok_or_else(|| format!("missing builtin family {name}"))?;
        let report = verify_representation(family, &predicate, 0, 200, 10_000)
            .map_err(|e| format!("{name}: {e}"))?;
        if !report.clean() {
            return Err(format!(
                "{name}: {} disagreements, {} unresolved",
                report.disagreements.len(),
                report.unresolved.len()
            ));
        }
    }
    Ok("even, square, composite clean over t in [0,200], bound 10^4".to_string())
}

/// 2. The squares enumerator, within 10^6 tuple pulls, emits exactly the
///    squares when intersected with [0, 200].
fn squares_enumerator() -> Result<String, String> {
    let families = builtin_families();
    let family = families.get("square").expect("builtin square family");
    let mut enumerator = diophantine_enumerator(family);
    let items =
        collect_items(&mut enumerator, usize::MAX, 1_000_000).map_err(|e| e.to_string())?;
    let emitted: BTreeSet<u64> = items.into_iter().filter(|&t| t <= 200).collect();
    let expected: BTreeSet<u64> = (0u64..=14).map(|k| k * k).collect();
    if emitted != expected {
        return Err(format!(
            "emitted {emitted:?} within [0,200], expected {expected:?}"
        ));
    }
    Ok(format!(
        "{} squares <= 200 emitted, none spurious, within 10^6 pulls",
        expected.len()
    ))
}

/// 3. g(p)^2 = p for p = 5, 13, 17, 29 and -p for p = 3, 7, 11, exactly
///    in Q(zeta_p); the p = 5 coordinates match the worked series.
fn gauss_sum_identities() -> Result<String, String> {
    for (p, sign) in [(5i64, 1i64), (13, 1), (17, 1), (29, 1), (3, -1), (7, -1), (11, -1)] {
        let g = quadratic_gauss_sum(p as usize).map_err(|e| e.to_string())?;
        let square = g.mul(&g).map_err(|e| e.to_string())?;
        let value = square
            .as_rational()
            .ok_or_else(|| format!("g({p})^2 is not rational"))?;
        let expected = Rational::from_integer(BigInt::from(sign * p));
        if *value != expected {
            return Err(format!("g({p})^2 = {value}, expected {expected}"));
        }
    }
    let g5 = quadratic_gauss_sum(5).map_err(|e| e.to_string())?;
    let coords: Vec<String> = g5.coords().iter().map(|c| c.to_string()).collect();
    if coords != ["-1", "0", "-2", "-2"] {
        return Err(format!("g(5) coordinates {coords:?}"));
    }
    Ok("g^2 = p for 5,13,17,29; g^2 = -p for 3,7,11; g(5) series pinned".to_string())
}

/// 4. Every corpus polynomial classifies to its pinned group, and the
///    group order equals the independent splitting-field degree.
fn galois_corpus() -> Result<String, String> {
    let corpus = classification_corpus();
    for (text, expected) in &corpus {
        let poly = UniPolynomial::parse(text).map_err(|e| format!("{text}: {e}"))?;
        let profile = galois_group(&poly).map_err(|e| format!("{text}: {e}"))?;
        if profile.group != *expected {
            return Err(format!(
                "{text}: classified {} expected {expected}",
                profile.group
            ));
        }
        let degree = splitting_field_degree(&poly).map_err(|e| format!("{text}: {e}"))?;
        if degree != profile.order {
            return Err(format!(
                "{text}: group order {} but splitting degree {degree}",
                profile.order
            ));
        }
    }
    Ok(format!(
        "{} polynomials: labels pinned, orders equal splitting degrees",
        corpus.len()
    ))
}

/// 5. Cube root of 2 is not constructible, sqrt(2) is, and across the
///    corpus the verdict equals "group order is a power of two".
fn constructibility_verdicts() -> Result<String, String> {
    let cbrt2 = AlgebraicNumber::new(&UniPolynomial::parse("x^3 - 2").unwrap(), 0)
        .map_err(|e| e.to_string())?;
    let report = symmetry_profile(&cbrt2).map_err(|e| e.to_string())?;
    if report.constructible {
        return Err("cube root of 2 reported constructible".to_string());
    }
    let sqrt2 = AlgebraicNumber::new(&UniPolynomial::parse("x^2 - 2").unwrap(), 1)
        .map_err(|e| e.to_string())?;
    let report = symmetry_profile(&sqrt2).map_err(|e| e.to_string())?;
    if !report.constructible {
        return Err("sqrt(2) reported not constructible".to_string());
    }
    for (text, _) in classification_corpus() {
        let poly = UniPolynomial::parse(text).unwrap();
        let profile = galois_group(&poly).map_err(|e| format!("{text}: {e}"))?;
        if profile.two_group != profile.order.is_power_of_two() {
            return Err(format!(
                "{text}: two_group={} but order={}",
                profile.two_group, profile.order
            ));
        }
    }
    Ok("x^3-2 no, x^2-2 yes; verdict = 2-power order on all corpus entries".to_string())
}

fn betti_pattern(complex: &SimplicialComplex) -> Result<[usize; 4], String> {
    let result = homology(complex);
    for group in &result.groups {
        if !group.torsion.is_empty() {
            return Err(format!("unexpected torsion {:?}", group.torsion));
        }
    }
    Ok([
        result.groups[0].betti,
        result.groups[1].betti,
        result.groups[2].betti,
        result.groups[3].betti,
    ])
}

/// 6. Boundary spheres have the S^n pattern for n = 1, 2, 3; the torus
///    has H1 = Z^2; abelianized pi_1 equals H1 on every connected
///    fixture.
fn homology_patterns() -> Result<String, String> {
    let circle = SimplicialComplex::face_closure(&[vec![0, 1], vec![1, 2], vec![0, 2]])
        .expect("triangle boundary");
    let spheres: [(&str, SimplicialComplex, [usize; 4]); 3] = [
        ("boundary of a triangle", circle, [1, 1, 0, 0]),
        ("boundary of a tetrahedron", fixtures::sphere2(), [1, 0, 1, 0]),
        ("boundary of a 4-simplex", fixtures::sphere3(), [1, 0, 0, 1]),
    ];
    for (name, complex, expected) in &spheres {
        let pattern = betti_pattern(complex).map_err(|e| format!("{name}: {e}"))?;
        if pattern != *expected {
            return Err(format!("{name}: betti {pattern:?}, expected {expected:?}"));
        }
    }
    let torus = fixtures::torus7();
    let h = homology(&torus);
    if h.groups[1].betti != 2 || !h.groups[1].torsion.is_empty() {
        return Err(format!(
            "torus H1 = Z^{} plus {:?}",
            h.groups[1].betti, h.groups[1].torsion
        ));
    }
    let mut cross_checked = 0;
    for (name, complex) in fixtures::connected_fixtures() {
        let presentation =
            fundamental_group_presentation(&complex).map_err(|e| format!("{name}: {e}"))?;
        let image = abelianization(&presentation);
        let h1 = &homology(&complex).groups[1];
        if image.free_rank != h1.betti || image.torsion != h1.torsion {
            return Err(format!(
                "{name}: abelianized pi1 = (rank {}, {:?}) but H1 = (rank {}, {:?})",
                image.free_rank, image.torsion, h1.betti, h1.torsion
            ));
        }
        cross_checked += 1;
    }
    Ok(format!(
        "S^1, S^2, S^3 patterns exact; torus H1 = Z^2; pi1 abelianization = H1 on {cross_checked} fixtures"
    ))
}

/// 7. The 5-vertex closed-manifold enumeration finds exactly one
///    complex, isomorphic to the boundary of the 4-simplex.
fn manifold_enumeration() -> Result<String, String> {
    let mut enumerator =
        enumerate_complexes(5, ComplexFilter::ClosedManifold).map_err(|e| e.to_string())?;
    let masks = collect_items(&mut enumerator, 64, 1_000_000).map_err(|e| e.to_string())?;
    if masks.len() != 1 {
        return Err(format!("emitted {} complexes: {masks:?}", masks.len()));
    }
    let boundary_mask = (1u64 << 5) - 1; // all five tetrahedra on five vertices
    let classes =
        complex_isomorphism_classes(&[masks[0], boundary_mask], 5).map_err(|e| e.to_string())?;
    if classes.len() != 1 {
        return Err(format!(
            "emitted complex (mask {}) is not isomorphic to the 4-simplex boundary",
            masks[0]
        ));
    }
    Ok(format!(
        "exactly one complex (mask {}), isomorphic to the 4-simplex boundary",
        masks[0]
    ))
}

/// 8. P(n) holds for every n <= 6 by exhaustive labeled planar search,
///    and the counterexample enumerator over the same range is empty.
fn four_color_desk_scale() -> Result<String, String> {
    for n in 1..=6 {
        if !p_of_n(n).map_err(|e| e.to_string())? {
            return Err(format!("P({n}) reported false"));
        }
    }
    let mut enumerator = fourcolor_counterexample_enumerator(6).map_err(|e| e.to_string())?;
    let found = collect_items(&mut enumerator, 8, 8).map_err(|e| e.to_string())?;
    if !found.is_empty() {
        return Err(format!("counterexample enumerator emitted {found:?}"));
    }
    Ok("P(1)..P(6) all true; counterexample enumerator empty".to_string())
}

/// 9. ADD and MUL match native arithmetic on [0,10]^2, and the numbering
///    roundtrips a 50-program corpus up to canonical renaming.
fn machine_correctness() -> Result<String, String> {
    let add = parse_program(ADD_PROGRAM).map_err(|e| e.to_string())?;
    let mul = parse_program(MUL_PROGRAM).map_err(|e| e.to_string())?;
    for a in 0u64..=10 {
        for b in 0u64..=10 {
            for (name, program, expected) in
                [("ADD", &add, a + b), ("MUL", &mul, a * b)]
            {
                let outcome = run(program, &[a, b], 1_000_000);
                if outcome.status != RunStatus::Halted {
                    return Err(format!("{name}({a},{b}) ran out of fuel"));
                }
                if outcome.output != expected {
                    return Err(format!(
                        "{name}({a},{b}) = {}, expected {expected}",
                        outcome.output
                    ));
                }
            }
        }
    }
    // Fifty programs: the two fixtures plus the first 48 of the numbering
    // itself (decode is total, so these are canonical by construction).
    let mut corpus = vec![add, mul];
    for n in 0u64..48 {
        corpus.push(decode_program(&BigUint::from(n)));
    }
    for program in &corpus {
        let decoded = decode_program(&encode_program(program));
        if decoded != canonicalize_program(program) {
            return Err("numbering roundtrip broke canonical renaming".to_string());
        }
    }
    Ok(format!(
        "ADD/MUL exact on [0,10]^2; numbering roundtrip on {} programs",
        corpus.len()
    ))
}

/// 10. Every theorem to depth 8 (cap 12) keeps I-count != 0 mod 3; MU is
///     never emitted.
fn miu_properties() -> Result<String, String> {
    let theorems = miu_theorems_capped(8, 12);
    for theorem in &theorems {
        let i_count = theorem.text().chars().filter(|&c| c == 'I').count();
        if i_count % 3 == 0 {
            return Err(format!(
                "theorem {} has I-count {i_count} divisible by 3",
                theorem.text()
            ));
        }
        if theorem.text() == "MU" {
            return Err("MU was emitted".to_string());
        }
    }
    Ok(format!(
        "{} theorems at depth 8: I-count never 0 mod 3, MU absent",
        theorems.len()
    ))
}

/// 11. Pairing and tuple codecs are bijective below 10^4.
fn pairing_bijectivity() -> Result<String, String> {
    for n in 0u64..10_000 {
        let (x, y) = unpair(n);
        if pair(x, y) != n {
            return Err(format!("pair(unpair({n})) = {}", pair(x, y)));
        }
        for arity in 1..=3usize {
            let tuple = tuple_decode(n, arity);
            if tuple_encode(&tuple) != n {
                return Err(format!("tuple codec broke at n={n}, arity={arity}"));
            }
        }
    }
    Ok("pair and tuple codecs bijective for all n < 10^4".to_string())
}
