//! Acceptance gate: one test per criterion, each printing a single
//! `criterion NN (...): pass`/`FAIL` line (visible with `--nocapture`).

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ade_lattice::cli::{cmd_table2, cmd_theorem, table2_documents, theorem_document, OutputFormat};
use ade_lattice::constructions::{
    build_homology, classify_construction, default_catalog, expected_outcome, structured_det,
    vanishing_lattice, Construction, ExpectedOutcome,
};
use ade_lattice::roots::{
    verify_root_axioms, weyl_orbit_is_transitive, AdeType, AxiomVerdict, RootAxiom, RootSystem,
};
use ade_lattice::selftest::{check_index_formula, check_structured_determinant};

fn criterion(number: u32, title: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    match &outcome {
        Ok(()) => println!("criterion {number:02} ({title}): pass"),
        Err(_) => println!("criterion {number:02} ({title}): FAIL"),
    }
    if let Err(payload) = outcome {
        resume_unwind(payload);
    }
}

#[test]
fn criterion_01_del_pezzo_rows() {
    criterion(1, "del Pezzo table rows", || {
        let docs = table2_documents(None).unwrap();
        let expected = [
            ("V3", AdeType::E(6)),
            ("V4", AdeType::D(5)),
            ("V5", AdeType::A(4)),
            ("V6", AdeType::A(1)),
            ("V6'", AdeType::A(2)),
            ("V7", AdeType::A(1)),
            ("V8", AdeType::A(1)),
        ];
        assert_eq!(docs.len(), expected.len());
        for (doc, (row, ty)) in docs.iter().zip(expected) {
            assert!(doc.input.starts_with(row), "row order: {}", doc.input);
            assert_eq!(doc.report.components, vec![ty], "{}", doc.input);
            assert!(doc.report.roots_span_lattice, "{}", doc.input);
            assert_eq!(doc.matched, Some(true), "{}", doc.input);
        }
        let output = cmd_table2(None, OutputFormat::Text).unwrap();
        assert!(output.ok, "table command must exit 0");
    });
}

#[test]
fn criterion_02_scroll_family() {
    criterion(2, "scroll family", || {
        for r in 2..=9u32 {
            let c = Construction::scroll(r).unwrap();
            let report = classify_construction(&c).unwrap();
            assert_eq!(report.components, vec![AdeType::A(r - 1)], "r = {r}");
            assert_eq!(report.disc, BigInt::from(r), "disc order at r = {r}");
            assert!(expected_outcome(&c).matches(&report), "r = {r}");
        }
        let degenerate = Construction::scroll(1).unwrap();
        let report = classify_construction(&degenerate).unwrap();
        assert_eq!(report.rank, 0);
        assert_eq!(expected_outcome(&degenerate), ExpectedOutcome::NotHypersurface);
        assert!(expected_outcome(&degenerate).matches(&report));
    });
}

#[test]
fn criterion_03_ordinary_quadric_pencils() {
    criterion(3, "ordinary quadric pencils", || {
        let three = classify_construction(&Construction::ordinary_quadric_pencil(3).unwrap()).unwrap();
        assert_eq!(three.components, vec![AdeType::A(3)]);
        for m in 4..=9u32 {
            let report =
                classify_construction(&Construction::ordinary_quadric_pencil(m).unwrap()).unwrap();
            assert_eq!(report.components, vec![AdeType::D(m)], "m = {m}");
            assert_eq!(report.disc, BigInt::from(4), "disc order at m = {m}");
        }
        let one = Construction::ordinary_quadric_pencil(1).unwrap();
        let rootless = classify_construction(&one).unwrap();
        assert!(rootless.is_rootless());
        assert_eq!(expected_outcome(&one), ExpectedOutcome::Impossible);
        assert!(expected_outcome(&one).matches(&rootless));
        let two = Construction::ordinary_quadric_pencil(2).unwrap();
        let reducible = classify_construction(&two).unwrap();
        assert_eq!(reducible.components, vec![AdeType::A(1), AdeType::A(1)]);
        assert_eq!(expected_outcome(&two), ExpectedOutcome::Impossible);
        assert!(expected_outcome(&two).matches(&reducible));
    });
}

#[test]
fn criterion_04_extraordinary_quadric_pencils() {
    criterion(4, "extraordinary quadric pencils", || {
        for m in 2..=9u32 {
            let c = Construction::extraordinary_quadric_pencil(m).unwrap();
            let report = classify_construction(&c).unwrap();
            assert_eq!(report.components, vec![AdeType::A(m - 1)], "m = {m}");
            assert!(expected_outcome(&c).matches(&report), "m = {m}");
        }
    });
}

#[test]
fn criterion_05_veronese_overlattice_sets() {
    criterion(5, "Veronese pencil overlattice sets", || {
        let sets_for = |m: u32| {
            classify_construction(&Construction::veronese_pencil(m).unwrap())
                .unwrap()
                .possible_overlattice_types
                .expect("the Veronese constructions report their overlattice types")
        };
        assert_eq!(sets_for(3), vec![vec![AdeType::A(3)]]);
        for m in (4..=7).chain(9..=12) {
            assert_eq!(sets_for(m), vec![vec![AdeType::D(m)]], "m = {m}");
        }
        assert_eq!(sets_for(8), vec![vec![AdeType::D(8)], vec![AdeType::E(8)]]);
    });
}

#[test]
fn criterion_06_structured_determinant_identity() {
    criterion(6, "structured determinant identity", || {
        for (r, expected) in [(6usize, 3), (5, 4), (4, 5)] {
            assert_eq!(structured_det(8, 3, 2, 1, r), BigInt::from(expected));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2026);
        let check = check_structured_determinant(&mut rng);
        assert!(check.passed, "{}", check.detail);
        assert!(check.detail.contains("200 random"), "{}", check.detail);
    });
}

#[test]
fn criterion_07_index_formula() {
    criterion(7, "index-squared discriminant formula", || {
        let mut rng = ChaCha8Rng::seed_from_u64(2026);
        let check = check_index_formula(&mut rng);
        assert!(check.passed, "{}", check.detail);
        assert!(check.detail.contains("100 random"), "{}", check.detail);
    });
}

#[test]
fn criterion_08_root_axiom_suite_and_mutation() {
    criterion(8, "root axioms plus mutation witness", || {
        for c in [
            Construction::scroll(5).unwrap(),
            Construction::ordinary_quadric_pencil(6).unwrap(),
            Construction::del_pezzo(3).unwrap(),
        ] {
            let lattice = vanishing_lattice(&build_homology(&c)).unwrap();
            let system = RootSystem::new(lattice).unwrap();
            assert!(
                system.verify_axioms().is_pass(),
                "axioms should hold for {}",
                c.display_name()
            );
        }
        // Deleting a single root must be caught by the reflection-closure
        // axiom, with the missing vector named in the complaint.
        let lattice =
            vanishing_lattice(&build_homology(&Construction::scroll(4).unwrap())).unwrap();
        let system = RootSystem::new(lattice.clone()).unwrap();
        let mut mutated = system.roots().to_vec();
        let removed = mutated.remove(mutated.len() / 3);
        match verify_root_axioms(&lattice, &mutated) {
            AxiomVerdict::Fail { axiom, detail } => {
                assert_eq!(axiom, RootAxiom::ReflectionClosure);
                let rendered = format!(
                    "({})",
                    removed
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                assert!(
                    detail.contains(&rendered),
                    "witness '{detail}' should name {rendered}"
                );
            }
            AxiomVerdict::Pass => panic!("a deleted root must break reflection closure"),
        }
    });
}

#[test]
fn criterion_09_closed_forms_match_enumeration() {
    criterion(9, "closed forms vs enumeration", || {
        for (c, ty) in [
            (Construction::del_pezzo(3).unwrap(), AdeType::E(6)),
            (Construction::del_pezzo(4).unwrap(), AdeType::D(5)),
            (Construction::del_pezzo(5).unwrap(), AdeType::A(4)),
        ] {
            let report = classify_construction(&c).unwrap();
            assert_eq!(report.components, vec![ty]);
            assert_eq!(report.root_count as u64, ty.root_count(), "{ty}");
            assert_eq!(report.weyl_order, ty.weyl_order(), "{ty}");
            assert_eq!(report.disc, BigInt::from(ty.disc_order()), "{ty}");
        }
        // The three ranks above pin the anchor values explicitly.
        assert_eq!(AdeType::E(6).root_count(), 72);
        assert_eq!(AdeType::E(6).weyl_order(), BigInt::from(51840));
        assert_eq!(AdeType::D(5).root_count(), 40);
        assert_eq!(AdeType::D(5).weyl_order(), BigInt::from(1920));
        assert_eq!(AdeType::A(4).root_count(), 20);
        assert_eq!(AdeType::A(4).weyl_order(), BigInt::from(120));
    });
}

#[test]
fn criterion_10_weyl_orbit_transitivity() {
    criterion(10, "Weyl orbit transitivity", || {
        for c in [
            Construction::quadric(),
            Construction::del_pezzo_prime(),
            Construction::scroll(5).unwrap(),
            Construction::ordinary_quadric_pencil(5).unwrap(),
            Construction::del_pezzo(3).unwrap(),
        ] {
            let lattice = vanishing_lattice(&build_homology(&c)).unwrap();
            let system = RootSystem::new(lattice).unwrap();
            assert!(
                weyl_orbit_is_transitive(&system).unwrap(),
                "single orbit expected for {}",
                c.display_name()
            );
        }
    });
}

#[test]
fn criterion_11_theorem_catalog_varieties() {
    criterion(11, "catalog filters to four varieties", || {
        let doc = theorem_document(&default_catalog()).unwrap();
        assert_eq!(
            doc.varieties,
            vec![
                "blowup of P3 at a point",
                "product of three projective lines",
                "quadric threefold in P4",
                "second Veronese embedding of P3",
            ]
        );
        let output = cmd_theorem(None, OutputFormat::Text).unwrap();
        assert!(output.ok, "theorem command must exit 0");
    });
}

#[test]
fn criterion_12_blowup_invariance() {
    criterion(12, "blowup leaves the kernel gram fixed", || {
        for base in [
            Construction::veronese_quadric(),
            Construction::del_pezzo(4).unwrap(),
        ] {
            let base_lattice = vanishing_lattice(&build_homology(&base)).unwrap();
            let base_report = classify_construction(&base).unwrap();
            assert_eq!(base_report.components, vec![AdeType::D(5)]);
            for k in 1..=4u32 {
                let blown = Construction::blowup(base.clone(), k).unwrap();
                let lattice = vanishing_lattice(&build_homology(&blown)).unwrap();
                assert_eq!(
                    lattice.gram(),
                    base_lattice.gram(),
                    "k = {k} over {}",
                    base.display_name()
                );
                assert_eq!(classify_construction(&blown).unwrap(), base_report);
            }
        }
    });
}
