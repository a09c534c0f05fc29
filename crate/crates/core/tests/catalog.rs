use unitarity::catalog::{render_table, so32_catalog, su22_catalog, CatalogEntry, EntryLabel};
use unitarity::ehw::is_unitarizable;
use unitarity::rational::{int, q};
use unitarity::verma::{GeneratorBasis, VermaModule};
use unitarity::{AlgebraSpec, RootSystem};

fn all_su22() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    for n in 1..=3 {
        v.extend(su22_catalog(n, Some(2), Some(q(-7, 2))).unwrap());
    }
    v
}

fn all_so32() -> Vec<CatalogEntry> {
    (2..=4)
        .flat_map(|m| so32_catalog(Some(m), None).unwrap())
        .collect()
}

#[test]
fn entries_are_unitarizable_and_gaps_are_not() {
    for (spec, entries) in [
        (AlgebraSpec::Su(2, 2), all_su22()),
        (AlgebraSpec::SoOdd(2), all_so32()),
    ] {
        let rs = RootSystem::build(spec).unwrap();
        let step = -spec.lambda_s();
        for e in &entries {
            assert!(e.unitarizable, "{}) {}", e.family, e.highest_weight);
            assert!(is_unitarizable(&rs, &e.highest_weight).unwrap());
            // half a step above the last place is always outside
            let d = rs.decompose(&e.highest_weight).unwrap();
            let above = rs
                .weight_from_labels(&d.labels, e.lambda0 + step / int(2))
                .unwrap();
            assert!(
                !is_unitarizable(&rs, &above).unwrap(),
                "{}) above {}",
                e.family,
                e.lambda0
            );
        }
    }
}

#[test]
fn printed_vectors_are_extremal() {
    for (spec, entries) in [
        (AlgebraSpec::Su(2, 2), all_su22()),
        (AlgebraSpec::SoOdd(2), all_so32()),
    ] {
        let gb = GeneratorBasis::for_algebra(spec).unwrap();
        for e in entries {
            let Some(y) = e.extremal_vector else { continue };
            assert!(y.verified);
            let module = VermaModule::new(&gb, e.highest_weight.coords()).unwrap();
            let (ok, weight) = module.extremal_check(&y.element).unwrap();
            assert!(ok, "{}) {}", e.family, y.pbw);
            assert_eq!(Some(weight), e.missing_weight);
        }
    }
}

#[test]
fn su22_labels_reconstruct_weights() {
    for e in all_su22() {
        let EntryLabel::Su22 { label, missing, .. } = &e.label else {
            panic!("wrong family")
        };
        assert_eq!(label.to_weight(), e.highest_weight);
        if let (Some(m), Some(w)) = (missing, &e.missing_weight) {
            assert_eq!(&m.to_weight(), w);
        }
    }
}

#[test]
fn json_round_trip() {
    let entries = all_su22().into_iter().chain(all_so32()).collect::<Vec<_>>();
    let text = serde_json::to_string_pretty(&entries).unwrap();
    let back: Vec<CatalogEntry> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, entries);
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
}

#[test]
fn table_lists_every_case() {
    let entries = su22_catalog(2, Some(1), Some(int(-3))).unwrap();
    let table = render_table(&entries);
    let vectors = entries
        .iter()
        .filter(|e| e.extremal_vector.is_some())
        .count();
    assert_eq!(table.lines().count(), 1 + entries.len() + vectors);
    for c in "abcdef".chars() {
        assert!(table.contains(&format!("{c})")), "{table}");
    }
    assert_eq!(table, render_table(&entries));
}
