use hurwitz_cli::dsl::{parse_ring_spec, parse_set_literal, validate, Node, RingSpec, SpecError, ValidateError};
use hurwitz_core::constructions::{Endo, Pattern, Recipe};
use proptest::prelude::*;

const CORPUS: &str = include_str!("golden/specs.txt");

fn corpus() -> impl Iterator<Item = &'static str> {
    CORPUS.lines().map(str::trim).filter(|l| !l.is_empty())
}

#[test]
fn printing_a_parsed_corpus_spec_gives_it_back() {
    for text in corpus() {
        let spec = parse_ring_spec(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(spec.to_string(), text);
        assert_eq!(parse_ring_spec(&spec.to_string()).unwrap(), spec);
    }
}

#[test]
fn corpus_specs_build() {
    for text in corpus() {
        let ring = validate(&parse_ring_spec(text).unwrap()).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(ring.label(), text);
    }
}

#[test]
fn whitespace_is_insignificant() {
    let a = parse_ring_spec(" FreeQ( GF(2) , [ a , b , c ] , [ cc , ac , c*c ] , 8 ) ").unwrap();
    let b = parse_ring_spec("FreeQ(GF(2),[a,b,c],[cc,ac,c*c],8)").unwrap();
    assert_eq!(a, b);
    let a = parse_ring_spec("CommQ(GF(3),\n  { x : 2 , y : 2 })").unwrap();
    assert_eq!(a.to_string(), "CommQ(GF(3),{x:2,y:2})");
    let a = parse_ring_spec("Quot(UT(Zn(3),2), [ [[0,1],[0,0]] ])").unwrap();
    assert_eq!(a.to_string(), "Quot(UT(Zn(3),2),[[[0,1],[0,0]]])");
}

#[test]
fn jet_spec() {
    let spec = parse_ring_spec("HJet(Zn(4), 1)").unwrap();
    match spec.node {
        Node::HJet(base, n) => {
            assert_eq!(base.node, Node::Zn(hurwitz_cli::dsl::Spanned { value: 4, span: Default::default() }));
            assert_eq!(n.value, 1);
        }
        other => panic!("{other:?}"),
    }
}

fn arity_at(text: &str) -> (usize, usize) {
    match parse_ring_spec(text) {
        Err(e @ SpecError::Arity { .. }) => e.position(),
        other => panic!("{text}: expected an arity error, got {other:?}"),
    }
}

fn syntax_at(text: &str) -> (usize, usize, Vec<String>) {
    match parse_ring_spec(text) {
        Err(SpecError::Syntax { line, col, expected, .. }) => (line, col, expected),
        other => panic!("{text}: expected a syntax error, got {other:?}"),
    }
}

#[test]
fn arity_errors() {
    assert_eq!(arity_at("Zn()"), (1, 4));
    assert_eq!(arity_at("Zn(4,5)"), (1, 5));
    assert_eq!(arity_at("Mat(Zn(2))"), (1, 10));
    assert_eq!(arity_at("Prod(Z)"), (1, 7));
    assert_eq!(arity_at("Triv(Z,Z)"), (1, 7));
    assert_eq!(arity_at("FreeQ(GF(2),[a],[aa])"), (1, 21));
    assert_eq!(arity_at("HJet(Z,)"), (1, 8));
}

#[test]
fn syntax_errors() {
    let (line, col, expected) = syntax_at("Foo(3)");
    assert_eq!((line, col), (1, 1));
    assert!(expected.contains(&"Zn".to_string()));
    assert_eq!(syntax_at("Zn(x)").1, 4);
    assert_eq!(syntax_at("Zn(4").2, vec!["`)`".to_string()]);
    assert_eq!(syntax_at("Zn(4))").2, vec!["end of input".to_string()]);
    assert_eq!(syntax_at("Mat(Zn(2);2)").1, 10);
    assert_eq!(syntax_at("").2, vec!["ring constructor".to_string()]);
    let (line, col, _) = syntax_at("Mat(\n  Zn(2),\n  @)");
    assert_eq!((line, col), (3, 3));
    assert_eq!(syntax_at("Quot(Zn(4),[2,])").1, 15);
}

fn literal_error(text: &str) -> SpecError {
    let spec = match parse_ring_spec(text) {
        Ok(spec) => spec,
        Err(e @ SpecError::Literal { .. }) => return e,
        Err(e) => panic!("{text}: {e}"),
    };
    match validate(&spec) {
        Err(ValidateError::Spec(e @ SpecError::Literal { .. })) => e,
        other => panic!("{text}: expected a literal error, got {:?}", other.map(|r| r.label().to_string())),
    }
}

#[test]
fn literal_errors() {
    let e = literal_error("Quot(Zn(4),[2,x])");
    assert_eq!(e.position(), (1, 15));
    assert_eq!(literal_error("Mat(UTc(Zn(6),[3],0),2)").position(), (1, 5));
    assert!(matches!(literal_error("GF(2,t^2+1)"), SpecError::Literal { .. }));
    assert_eq!(literal_error("GF(2,t^+)").position(), (1, 6));
    assert_eq!(literal_error("FreeQ(GF(2),[a,bc],[aa],4)").position(), (1, 16));
    assert_eq!(literal_error("FreeQ(GF(2),[a,b],[ac],4)").position(), (1, 20));
    assert_eq!(literal_error("FreeQ(GF(2),[a,b],[a*b*a],4)").position(), (1, 20));
    assert_eq!(literal_error("CommQ(GF(3),{xy:2})").position(), (1, 14));
    assert!(matches!(literal_error("Zn(0)"), SpecError::Literal { .. }));
    assert!(matches!(literal_error("Zn(99999999999999999999999)"), SpecError::Literal { .. }));
    assert!(matches!(literal_error("GF(4)"), SpecError::Literal { .. }));
    assert!(matches!(literal_error("Twist(GF(3),t)"), SpecError::Literal { .. }));
}

#[test]
fn set_literals() {
    let items = parse_set_literal("{2, (1|0), [[0,1],[0,0]]}").unwrap();
    let values: Vec<&str> = items.iter().map(|s| s.value.as_str()).collect();
    assert_eq!(values, ["2", "(1|0)", "[[0,1],[0,0]]"]);
    assert!(parse_set_literal("{}").unwrap().is_empty());
    assert!(parse_set_literal("2,3").is_err());
}

fn leaf() -> impl Strategy<Value = Recipe> {
    prop_oneof![
        Just(Recipe::Z),
        (2u64..40).prop_map(Recipe::Zn),
        prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| Recipe::GF { p, modulus: None }),
        Just(Recipe::GF { p: 2, modulus: Some(vec![1, 1, 1]) }),
        (2u64..9).prop_map(Recipe::Quat),
    ]
}

fn element_list() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(prop::sample::select(vec!["0", "1", "2", "(1|0)", "[[0,1],[0,0]]", "x^2", "-y"]), 0..3)
        .prop_map(|v| v.into_iter().map(String::from).collect())
}

fn recipe() -> impl Strategy<Value = Recipe> {
    leaf().prop_recursive(3, 16, 3, |inner| {
        let b = |s: BoxedStrategy<Recipe>| s.prop_map(Box::new);
        let inner = inner.boxed();
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(Recipe::Prod),
            (b(inner.clone()), 1usize..4).prop_map(|(r, k)| Recipe::Mat(r, k)),
            (b(inner.clone()), 1usize..4).prop_map(|(r, k)| Recipe::UT(r, k)),
            (b(inner.clone()), element_list(), 2usize..4).prop_map(|(base, ideal, k)| Recipe::UTc { base, ideal, k }),
            b(inner.clone()).prop_map(Recipe::Triv),
            (b(inner.clone()), element_list()).prop_map(|(base, ideal)| Recipe::TrivQ { base, ideal }),
            (b(inner.clone()), prop::sample::select(vec![Endo::Id, Endo::Frobenius, Endo::Image("t+1".into())]))
                .prop_map(|(base, endo)| Recipe::Twist { base, endo }),
            (b(inner.clone()), 1usize..9).prop_map(|(base, max_len)| Recipe::FreeQ {
                base,
                gens: vec!['a', 'b', 'c'],
                patterns: vec![Pattern::Word("cc".into()), Pattern::Gap("a".into(), "c".into())],
                max_len
            }),
            (b(inner.clone()), 1u32..5, 1u32..5)
                .prop_map(|(base, x, y)| Recipe::CommQ { base, caps: vec![('x', x), ('y', y)] }),
            (b(inner.clone()), 0usize..4).prop_map(|(r, n)| Recipe::HJet(r, n)),
            (b(inner), element_list()).prop_map(|(base, ideal)| Recipe::Quot { base, ideal }),
        ]
    })
}

proptest! {
    #[test]
    fn parse_inverts_print(r in recipe()) {
        let ast = RingSpec::from_recipe(&r);
        let text = ast.to_string();
        prop_assert_eq!(&text, &r.to_string());
        let parsed = parse_ring_spec(&text).unwrap();
        prop_assert_eq!(&parsed, &ast);
        prop_assert_eq!(parsed.to_recipe().unwrap(), r);
    }
}
