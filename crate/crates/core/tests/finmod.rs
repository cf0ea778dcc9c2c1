use icrl::finmod::examples::{powerset_ea, two_chain, z2};
use icrl::finmod::{
    canonical_form, check_property, enumerate, eval_term, negative_cone, refute, validate,
    AlgebraClass, FiniteAlgebra, FinmodError, PropertyName, Signature, Valuation,
};
use icrl::terms::{parse_sequent, parse_term_unchecked, Theory};

fn val(pairs: &[(&str, usize)]) -> Valuation {
    pairs.iter().map(|&(k, v)| (k.into(), v)).collect()
}

#[test]
fn json_documents_validate() {
    let chain = r#"{"size":2,"e":1,"leq":[1,1,0,1],"meet":[0,0,0,1],"join":[0,1,1,1],
        "fuse":[0,0,0,1],"ldiv":[1,1,0,1],"rdiv":[1,0,1,1]}"#;
    let a = FiniteAlgebra::from_json(chain).unwrap();
    assert_eq!(a, two_chain());
    assert!(validate(&a, Signature::Lattice).is_empty());

    let broken = chain.replace(r#""ldiv":[1,1,0,1]"#, r#""ldiv":[0,1,0,1]"#);
    let v = validate(
        &FiniteAlgebra::from_json(&broken).unwrap(),
        Signature::Lattice,
    );
    assert!(
        v.iter()
            .any(|w| w.law == "residuation" && w.witness == [0, 1, 0]),
        "{v:?}"
    );

    let short = chain.replace(r#""meet":[0,0,0,1]"#, r#""meet":[0,0,0]"#);
    assert!(matches!(
        FiniteAlgebra::from_json(&short),
        Err(FinmodError::Shape(_))
    ));
}

#[test]
fn property_examples() {
    assert!(validate(&powerset_ea(), Signature::Lattice).is_empty());
    assert!(check_property(&two_chain(), PropertyName::IsIntegrallyClosed).unwrap());
    assert!(!check_property(&powerset_ea(), PropertyName::IsIntegrallyClosed).unwrap());
    assert!(!check_property(&powerset_ea(), PropertyName::IsIntegral).unwrap());
    assert!(check_property(&z2(), PropertyName::IsSirmonoid).unwrap());
    assert!(!check_property(&z2(), PropertyName::IsIntegral).unwrap());
}

#[test]
fn evaluation_examples() {
    let c = two_chain();
    let t = |s: &str| parse_term_unchecked(s).unwrap();
    assert_eq!(eval_term(&c, &val(&[("x", 0)]), &t("x \\ x")).unwrap(), c.e);
    assert_eq!(eval_term(&c, &Valuation::new(), &t("e")).unwrap(), c.e);
    assert_eq!(eval_term(&c, &val(&[("x", 0)]), &t("x /\\ e")).unwrap(), 0);
    assert!(matches!(
        eval_term(&c, &Valuation::new(), &t("x")),
        Err(FinmodError::UnboundVariable(_))
    ));
}

#[test]
fn refutation_examples() {
    let s = parse_sequent("e => x", Theory::Icrl).unwrap();
    let c = refute(&s, 4, AlgebraClass::Integral).unwrap().unwrap();
    let (_, chain) = canonical_form(&two_chain());
    assert_eq!(c.algebra, chain);
    assert_eq!(c.valuation["x"], 1 - chain.e);

    let s = parse_sequent("x \\ x => e", Theory::Icrl).unwrap();
    assert!(refute(&s, 4, AlgebraClass::Integral).unwrap().is_none());

    let s = parse_sequent("x * y => y", Theory::Sirm).unwrap();
    let c = refute(&s, 2, AlgebraClass::Sirmonoid).unwrap().unwrap();
    assert!(!check_property(&c.algebra, PropertyName::IsIntegral).unwrap());

    assert!(matches!(
        refute(
            &parse_sequent("e => x", Theory::Icrl).unwrap(),
            9,
            AlgebraClass::Integral
        ),
        Err(FinmodError::SizeBound { .. })
    ));
}

#[test]
fn enumeration_examples() {
    assert_eq!(
        enumerate(1, AlgebraClass::Rl).unwrap(),
        vec![FiniteAlgebra::trivial()]
    );
    assert!(enumerate(2, AlgebraClass::Rl)
        .unwrap()
        .contains(&canonical_form(&two_chain()).1));
    let groups: Vec<_> = enumerate(2, AlgebraClass::Sirmonoid)
        .unwrap()
        .into_iter()
        .filter(|a| !check_property(a, PropertyName::IsIntegral).unwrap())
        .collect();
    assert_eq!(groups.len(), 1);
    assert!(validate(&groups[0], Signature::Sirmonoid).is_empty());
    assert!(enumerate(7, AlgebraClass::Sirmonoid).is_err());
}

#[test]
fn negative_cone_examples() {
    let c = negative_cone(&powerset_ea()).unwrap();
    assert_eq!(c.size, 2);
    assert!(validate(&c, Signature::Lattice).is_empty());
    assert!(check_property(&c, PropertyName::IsIntegral).unwrap());
    assert_eq!(negative_cone(&two_chain()).unwrap(), two_chain());
    assert_eq!(
        negative_cone(&FiniteAlgebra::trivial()).unwrap(),
        FiniteAlgebra::trivial()
    );
    assert!(negative_cone(&z2()).is_err());
}
