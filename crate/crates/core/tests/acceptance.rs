//! Exit criteria. Every check is exact; each prints one PASS/FAIL line.
//! Run with `cargo test --release -p crystgroups --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::Rational64;

use crystgroups::centralizer::{center, centralizer, SubgroupDescriptor};
use crystgroups::classifier::{
    classify, enumerate_closed, euclidean_signature, euler_factor, GroupKind, PresentationSignature,
};
use crystgroups::oracle::{affine_image, affine_order, ball, brute_center, check_faithful, AffineIsometry};
use crystgroups::words::{generator_image, parse_element, parse_word, Alphabet};
use crystgroups::{GroupElement, GroupId, Order};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

/// Defining relations of the lattice presentations, as relators over the new alphabet.
fn lattice_relators(g: GroupId) -> &'static [&'static str] {
    const COMM: &str = "t1*t2*t1^-1*t2^-1";
    match g {
        GroupId::G0 => &[COMM],
        GroupId::G1 => &["a^2*t1^-1", COMM, "a*t2*a^-1*t2"],
        GroupId::G2 => &["c^2", COMM, "c*t1*c^-1*t1", "c*t2*c^-1*t2"],
        GroupId::G3 => &["c^3", COMM, "c*t1*c^-1*t2^-1", "c*t2*c^-1*t2*t1"],
        GroupId::G4 => &["c^4", COMM, "c*t1*c^-1*t2^-1", "c*t2*c^-1*t1"],
        GroupId::G5 => &["c^6", COMM, "c*t1*c^-1*t2^-1", "c*t2*c^-1*t2^-1*t1"],
        GroupId::G6 => &[
            "a^2*t1^-1",
            COMM,
            "a*t2*a^-1*t2",
            "c^2",
            "c*t1*c^-1*t1",
            "c*t2*c^-1*t2",
            "c*a*c^-1*a*t2^-1",
        ],
    }
}

fn classical_relators(g: GroupId) -> &'static [&'static str] {
    match g {
        GroupId::G0 => &["t1*t2*t1^-1*t2^-1"],
        GroupId::G1 => &["a1^2*a2^2"],
        GroupId::G2 => &["c1^2", "c2^2", "c3^2", "c1*c2*c3*c1*c2*c3"],
        GroupId::G3 => &["c1^3", "c2^3", "c1*c2*c1*c2*c1*c2"],
        GroupId::G4 => &["c1^4", "c2^4", "c1*c2*c1*c2"],
        GroupId::G5 => &["c1^6", "c2^3", "c1*c2*c1*c2"],
        GroupId::G6 => &["c^2", "a^2*c*a^2*c"],
    }
}

/// Evaluate a word by composing affine images of its generators, never touching the
/// normal-form product.
fn affine_word(text: &str, g: GroupId) -> AffineIsometry {
    let word = parse_word(text, g, Alphabet::New).unwrap();
    word.letters.iter().fold(AffineIsometry::identity(), |acc, l| {
        let f = affine_image(&generator_image(l.generator, g, Alphabet::New).unwrap());
        let f = if l.exponent < 0 { f.inverse() } else { f };
        acc * f.pow(l.exponent.unsigned_abs() as u32)
    })
}

fn c1_relation_suite() -> Check {
    let mut n = 0;
    for g in GroupId::NONTRIVIAL {
        for r in lattice_relators(g) {
            let x = parse_element(r, g, Alphabet::New).map_err(|e| e.to_string())?;
            if !x.is_identity() {
                return Err(format!("{g}: {r} = {x} under multiply"));
            }
            if !affine_word(r, g).is_identity() {
                return Err(format!("{g}: {r} is not the identity map"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} relations, normal form and affine"))
}

fn subjects(g: GroupId) -> Vec<GroupElement> {
    // The radius-2 box, widened until it holds at least 100 nontrivial subjects.
    let mut r = 2;
    loop {
        let s: Vec<_> = ball(g, r).filter(|u| !u.is_identity()).collect();
        if s.len() >= 100 {
            return s;
        }
        r += 1;
    }
}

fn c2_centralizer_equivalence() -> Check {
    let mut pairs = 0usize;
    let mut min_subjects = usize::MAX;
    for g in GroupId::NONTRIVIAL {
        let vs: Vec<_> = ball(g, 5).collect();
        let us = subjects(g);
        if !ball(g, 2).filter(|u| !u.is_identity()).all(|u| us.contains(&u)) {
            return Err(format!("{g}: subjects miss the radius-2 box"));
        }
        min_subjects = min_subjects.min(us.len());
        for u in &us {
            let z = centralizer(u).map_err(|e| e.to_string())?;
            for v in &vs {
                let lhs = u.commutes_with(v).map_err(|e| e.to_string())?;
                let rhs = z.contains(v).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("{g}: u={u} v={v} commutes={lhs} contains={rhs} ({z})"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, >= {min_subjects} subjects per group, 0 witnesses"))
}

fn c3_center() -> Check {
    for g in GroupId::ALL {
        let brute = brute_center(g, 4).map_err(|e| e.to_string())?;
        let declared: BTreeSet<_> = ball(g, 4)
            .filter(|x| center(g).contains(x).unwrap())
            .collect();
        if brute != declared {
            return Err(format!("{g}: brute {} vs declared {}", brute.len(), declared.len()));
        }
        let expected: BTreeSet<GroupElement> = match g {
            GroupId::G0 => ball(g, 4).collect(),
            GroupId::G1 => (-4..=4).map(|k| GroupElement::translation(g, k, 0)).collect(),
            _ => [g.identity()].into(),
        };
        if brute != expected {
            return Err(format!("{g}: center has unexpected shape"));
        }
    }
    Ok("7 groups".into())
}

fn c4_faithful() -> Check {
    for g in GroupId::ALL {
        if !check_faithful(g, 4) {
            return Err(format!("{g} not faithful on radius 4"));
        }
    }
    Ok("7 groups, radius 4".into())
}

fn c5_classifier() -> Check {
    let zero = Rational64::from_integer(0);
    let sigs = enumerate_closed(3, 6, 12);
    let mut euclid = BTreeSet::new();
    for sig in &sigs {
        let chi = euler_factor(sig).map_err(|e| e.to_string())?;
        let res = classify(sig);
        let coherent = match res.kind {
            GroupKind::Finite(_) => chi > zero,
            GroupKind::Euclidean(_) => chi == zero,
            GroupKind::Hyperbolic => chi < zero,
            GroupKind::FreeProductInfinite => false,
        };
        if !coherent || res.chi_factor != Some(chi) {
            return Err(format!("{sig:?}: {:?} with chi {chi}", res.kind));
        }
        if let GroupKind::Euclidean(g) = res.kind {
            euclid.insert((sig.orientable(), sig.genus(), sig.alphas().to_vec(), g));
        }
    }
    let expected: BTreeSet<_> = [
        (true, 1, vec![], GroupId::G0),
        (true, 0, vec![3, 3, 3], GroupId::G3),
        (true, 0, vec![2, 4, 4], GroupId::G4),
        (true, 0, vec![2, 3, 6], GroupId::G5),
        (true, 0, vec![2, 2, 2, 2], GroupId::G2),
        (false, 2, vec![], GroupId::G1),
        (false, 1, vec![2, 2], GroupId::G6),
    ]
    .into();
    if euclid != expected {
        return Err(format!("euclidean set {euclid:?}"));
    }
    for g in GroupId::ALL {
        if classify(&euclidean_signature(g)).kind != GroupKind::Euclidean(g) {
            return Err(format!("{g} signature does not map back"));
        }
    }
    let sig = |a: &[u32]| PresentationSignature::closed(true, 0, a.to_vec()).unwrap();
    for n in 2..=12 {
        if euler_factor(&sig(&[2, 2, n])).unwrap() != Rational64::new(1, i64::from(n)) {
            return Err(format!("(2,2,{n}) factor"));
        }
    }
    if euler_factor(&sig(&[3, 3, 3])).unwrap() != zero {
        return Err("(3,3,3) factor".into());
    }
    if euler_factor(&sig(&[2, 3, 7])).unwrap() != Rational64::new(-1, 42) {
        return Err("(2,3,7) factor".into());
    }
    Ok(format!("{} signatures, 7 euclidean", sigs.len()))
}

fn iterate_order(x: &GroupElement, limit: u32) -> Option<u32> {
    let mut acc = *x;
    for k in 1..=limit {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc.multiply(x).ok()?;
    }
    None
}

fn c6_torsion() -> Check {
    let mut checked = 0;
    for g in [GroupId::G2, GroupId::G3, GroupId::G4, GroupId::G5] {
        let p = g.point_group_order() as u32;
        for u in ball(g, 2).filter(|u| !u.is_translation()) {
            let k = u.point_part().0 as u32;
            let predicted = p / num_integer::gcd(k, p);
            let by_nf = iterate_order(&u, 12);
            let by_affine = affine_order(&u, 12);
            if by_nf != Some(predicted) || by_affine != Some(predicted) {
                return Err(format!("{g} {u}: predicted {predicted}, nf {by_nf:?}, affine {by_affine:?}"));
            }
            if u.order() != Order::Finite(predicted) {
                return Err(format!("{g} {u}: order() = {}", u.order()));
            }
            match centralizer(&u).map_err(|e| e.to_string())? {
                SubgroupDescriptor::Cyclic(gen) if gen.order().is_finite() => {}
                other => return Err(format!("{g} {u}: centralizer {other}")),
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} rotations"))
}

fn c7_substitution_soundness() -> Check {
    let mut n = 0;
    for g in GroupId::ALL {
        for r in classical_relators(g) {
            let x = parse_element(r, g, Alphabet::Original).map_err(|e| e.to_string())?;
            if !x.is_identity() {
                return Err(format!("{g}: {r} = {x}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} classical relations"))
}

fn c8_orientation() -> Check {
    let mut checked = 0;
    for g in GroupId::ALL {
        for u in ball(g, 2) {
            if u.order() != Order::Infinite || u.orientation_character() != -1 {
                continue;
            }
            match centralizer(&u).map_err(|e| e.to_string())? {
                SubgroupDescriptor::Cyclic(gen) if gen.order() == Order::Infinite => {}
                other => return Err(format!("{g} {u}: {other}")),
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("no orientation-reversing subjects".into());
    }
    Ok(format!("{checked} orientation-reversing subjects"))
}

fn c9_cli_golden() -> Check {
    let golden = include_str!("golden/cli.golden");
    let mut cases: Vec<(Vec<&str>, String)> = Vec::new();
    for line in golden.lines() {
        if let Some(args) = line.strip_prefix("$ ") {
            cases.push((args.split_whitespace().collect(), String::new()));
        } else if !line.is_empty() && !line.starts_with('#') {
            let last = cases.last_mut().ok_or("output before command")?;
            last.1.push_str(line);
            last.1.push('\n');
        }
    }
    let centralizer_cases = cases.iter().filter(|(a, _)| a[0] == "centralizer").count();
    if cases.len() < 24 || centralizer_cases < 20 {
        return Err(format!("only {} cases", cases.len()));
    }
    for (args, expected) in &cases {
        let out = Command::new(env!("CARGO_BIN_EXE_crystgroups"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() || out.stdout != expected.as_bytes() {
            return Err(format!(
                "`{}`: got {:?}",
                args.join(" "),
                String::from_utf8_lossy(&out.stdout)
            ));
        }
    }
    Ok(format!("{} golden cases", cases.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 relation suite", c1_relation_suite, Duration::from_secs(1)),
        ("2 centralizer oracle equivalence", c2_centralizer_equivalence, Duration::from_secs(60)),
        ("3 center corollary", c3_center, Duration::from_secs(5)),
        ("4 normal-form uniqueness", c4_faithful, Duration::from_secs(5)),
        ("5 classifier enumeration", c5_classifier, Duration::from_secs(5)),
        ("6 torsion orders", c6_torsion, Duration::from_secs(10)),
        ("7 substitution soundness", c7_substitution_soundness, Duration::from_secs(1)),
        ("8 orientation-reversing centralizers", c8_orientation, Duration::from_secs(5)),
        ("9 CLI golden files", c9_cli_golden, Duration::from_secs(30)),
    ];
    let mut failed = Vec::new();
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed > budget => Err(format!("took {elapsed:?}, budget {budget:?}")),
            Ok(detail) => Ok(detail.clone()),
            Err(e) => Err(e.clone()),
        };
        match verdict {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.3}s)", elapsed.as_secs_f64()),
            Err(e) => {
                println!("[FAIL] {name}: {e} ({:.3}s)", elapsed.as_secs_f64());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
