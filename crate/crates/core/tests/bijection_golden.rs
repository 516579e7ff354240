use corners::bijections::{symmetric_to_type_b, type_b_to_symmetric};
use corners::enumerator::Census;
use corners::tableaux::TableauRecord;
use corners::{Family, Tableau};

#[test]
fn drawn_pair_matches_golden_records() {
    let records: Vec<TableauRecord> = serde_json::from_str(include_str!("golden/drawn_pair.json")).unwrap();
    let [sym, b] = records.as_slice() else { panic!("expected two records") };
    let Tableau::Symmetric(sym) = sym.to_tableau().unwrap() else { panic!("first record is not symmetric") };
    let Tableau::TypeB(b) = b.to_tableau().unwrap() else { panic!("second record is not type-B") };
    assert_eq!(sym.inner().size(), 11);
    assert_eq!(b.size(), 5);
    assert_eq!(symmetric_to_type_b(&sym).unwrap(), b);
    assert_eq!(type_b_to_symmetric(&b).unwrap(), sym);
}

#[test]
fn small_type_b_census_matches_golden() {
    let golden: Census = serde_json::from_str(include_str!("golden/census_type_b_2.json")).unwrap();
    assert_eq!(corners::enumerator::census(2, Family::TypeB).unwrap(), golden);
}

#[test]
fn every_symmetric_tableau_of_size_eleven_round_trips() {
    for s in corners::enumerator::Enumerator::default().symmetric(5).unwrap() {
        let b = symmetric_to_type_b(&s).unwrap();
        assert_eq!(type_b_to_symmetric(&b).unwrap(), s);
    }
}
