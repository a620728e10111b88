use lgm_arith::{parse_laurent, parse_rational_function, LaurentPolynomial};
use lgm_transform::{run_extremal_variant, run_main_theorem, Options};

fn mirror(k: usize, degrees: &[usize]) -> LaurentPolynomial {
    run_main_theorem(k, degrees, Options::default())
        .unwrap_or_else(|e| panic!("k={k} {degrees:?}: {e}"))
        .result
}

fn check(k: usize, degrees: &[usize], expected: &str) {
    let f = mirror(k, degrees);
    let want = parse_laurent(expected, f.vars()).unwrap();
    assert_eq!(f, want, "k={k} {degrees:?}: got {}", f.to_text());
}

#[test]
fn quadric_threefold() {
    check(2, &[1], "a_1_2/a_1_1 + 1/a_2_1 + a_2_1/a_1_1 + 1/a_1_2 + a_1_1");
}

#[test]
fn two_hyperplanes_in_g25() {
    check(
        3,
        &[1, 1],
        "a_2_2/a_1_1 + a_2_2/a_2_1 + 1/a_3_1 + a_3_1/a_2_1 + 1/a_2_2 + a_2_1 + a_1_1",
    );
}

#[test]
fn quadric_surface() {
    check(2, &[1, 1], "1/a_1_1 + 1/a_2_1 + a_2_1 + a_1_1");
}

#[test]
fn quadric_surface_through_extremal_arrow() {
    let f = run_extremal_variant(2, Options::default()).unwrap().result;
    let want = parse_laurent("a_1_2 + a_2_1 + 1/a_1_2 + 1/a_2_1", f.vars()).unwrap();
    assert_eq!(f, want);
}

#[test]
fn degree_forty_threefold() {
    check(
        3,
        &[1, 1, 1],
        "(a_3_1+a_2_1)/(a_2_1*a_1_1) + 1/a_2_1 + 1/a_3_1 + a_3_1 + a_2_1 + a_1_1",
    );
}

#[test]
fn index_two_fourfold() {
    check(
        4,
        &[1, 1, 1, 1],
        "(a_4_1+a_3_1)*(a_4_1+a_3_1+a_2_1)/(a_3_1*a_2_1*a_1_1) + (a_4_1+a_3_1)/(a_3_1*a_2_1) \
         + 1/a_3_1 + 1/a_4_1 + a_4_1 + a_3_1 + a_2_1 + a_1_1",
    );
}

#[test]
fn del_pezzo_degree_five() {
    check(
        3,
        &[1, 1, 1, 1],
        "(a_3_1*(1+a_2_1)/a_2_1 + 1/a_2_1 + 1)*(1 + a_2_1 + 1/a_3_1)",
    );
}

#[test]
fn index_one_threefold_of_degree_14() {
    check(
        4,
        &[1, 1, 1, 1, 1],
        "(a_4_1*(1+a_3_1)*(1+a_3_1+a_2_1)/(a_3_1*a_2_1) + (1+a_3_1)/(a_3_1*a_2_1) + 1/a_3_1 + 1) \
         * (1 + a_2_1 + a_3_1 + 1/a_4_1)",
    );
}

#[test]
fn quadric_section_threefold() {
    check(2, &[2], "a_1_2 + 1/a_2_1 + (1/a_1_1)*(a_1_1 + a_2_1 + 1/a_1_2)^2");
}

#[test]
fn quadric_section_surface() {
    check(2, &[2, 1], "(a_1_1+a_1_2)*(1 + 1/a_1_1 + 1/a_1_2)^2");
}

#[test]
fn cubic_section_threefold() {
    check(
        2,
        &[3],
        "(a_1_1/a_1_2)*(a_1_2 + (a_2_1^2 + a_1_1*a_2_1 + a_1_1 + a_2_1)/(a_1_1*a_2_1))^3",
    );
}

#[test]
fn quadric_section_fourfold_of_degree_10() {
    check(
        3,
        &[2, 1],
        "a_1_2 + 1/a_2_1 + 1/a_3_1 + (1/a_1_1)*(a_1_1 + a_2_1 + a_3_1 + 1/a_1_2 + a_3_1/(a_1_2*a_2_1))^2",
    );
}

#[test]
fn quadric_section_threefold_of_degree_10() {
    check(
        3,
        &[2, 1, 1],
        "((a_3_1+a_1_2+1)/a_1_1)*(a_1_1 + 1/a_3_1 + 1 + 1/a_1_2 + a_3_1/a_1_2)^2",
    );
}

#[test]
fn two_quadric_sections_fourfold() {
    check(
        3,
        &[2, 2],
        "(1/a_1_1)*(a_1_1 + ((1+a_2_2)/a_3_1 + a_2_2/a_1_2)*(a_3_1 + (1+a_1_2*a_2_2+a_2_2)/a_2_2)^2)^2",
    );
}

#[test]
fn two_quadrics_and_hyperplane_fivefold() {
    check(
        4,
        &[2, 2, 1],
        "(a_1_1 + a_1_2 + a_3_2 + a_3_2/(a_2_1*a_3_1)) \
         * (1 + (a_2_1 + a_3_2/(a_3_1*a_1_2))*(a_3_1 + 1/a_2_1 + 1/a_3_2 + 1/a_1_1)^2)^2",
    );
}

#[test]
fn index_two_fivefold() {
    let f = mirror(5, &[1, 1, 1, 1, 1]);
    let want = lgm_transform::closed_form(lgm_transform::ClosedFormMode::Index2, 5, 0).unwrap();
    assert_eq!(f.to_text(), want.to_text());
    assert_eq!(f.vars().names(), want.vars().names());
}

#[test]
fn no_hypersurfaces_leaves_grassmannian_function() {
    let f = mirror(2, &[]);
    assert_eq!(f.vars().len(), 4);
    let want =
        parse_laurent("a_1_1/a + a_1_2/a_1_1 + a_2_1/a_1_1 + 1/a_1_2 + 1/a_2_1 + a", f.vars())
            .unwrap();
    assert_eq!(f, want);
}

#[test]
fn intermediate_substitutions_of_quadric_fourfold() {
    let trace = run_main_theorem(3, &[2, 1], Options::default()).unwrap();
    let s1 = &trace.steps[0];
    let vars = s1.after.vars();
    let w = parse_rational_function("a_1_1 + a_2_1 + a_2_2/a_1_2", vars).unwrap();
    assert!(s1.bindings["a_1_1"].equals(&w).unwrap());
    let top = parse_rational_function("(a_1_1 + a_2_1 + a_2_2/a_1_2)^2/a_1_1", vars).unwrap();
    assert!(s1.after.r(3, 3).equals(&top).unwrap());

    let s2 = &trace.steps[1];
    let vars = s2.after.vars();
    let a21 = parse_rational_function("a_2_1 + a_3_1", vars).unwrap();
    let a22 = parse_rational_function("(a_2_1 + a_3_1)/a_2_1", vars).unwrap();
    assert!(s2.bindings["a_2_1"].equals(&a21).unwrap());
    assert!(s2.bindings["a_2_2"].equals(&a22).unwrap());
}

#[test]
fn wide_and_vertical_steps_of_fivefold() {
    let trace = run_main_theorem(4, &[2, 2, 1], Options::default()).unwrap();
    let wide = &trace.steps[1];
    let vars = wide.after.vars();
    let shift = "a_3_1 + (a_3_2 + a_2_1*a_3_2*a_4_1 + a_2_1)/(a_2_1*a_3_2)";
    let a31 = parse_rational_function(shift, vars).unwrap();
    assert!(wide.bindings["a_3_1"].equals(&a31).unwrap());
    let a22 = parse_rational_function(&format!("(a_3_2/a_3_1)*({shift})^2"), vars).unwrap();
    assert!(wide.bindings["a_2_2"].equals(&a22).unwrap());
    let h = wide.history.as_ref().unwrap();
    assert_eq!(h.m.iter().copied().collect::<Vec<_>>(), [2]);
    assert_eq!(h.w.iter().copied().collect::<Vec<_>>(), [1, 3]);
    assert_eq!(h.gamma, 4);

    let vertical = &trace.steps[2];
    let wts = &vertical.recipe.as_ref().unwrap().weights;
    for (name, w) in [
        ("a_1_1", 1),
        ("a_3_1", 1),
        ("a_4_1", 1),
        ("a_1_2", -1),
        ("a_2_1", -1),
        ("a_3_2", -1),
    ] {
        assert_eq!(wts.get(name), Some(w), "{name}");
    }
}

#[test]
fn vertical_shifts() {
    let t = run_main_theorem(3, &[2, 1, 1], Options::default()).unwrap();
    let step = t.steps.last().unwrap();
    let want = parse_rational_function("a_3_1 + a_1_2 + 1", step.after.vars()).unwrap();
    assert!(step.bindings["a_3_1"].equals(&want).unwrap());

    let t = run_main_theorem(2, &[2, 1], Options::default()).unwrap();
    let step = t.steps.last().unwrap();
    let want = parse_rational_function("a_1_1 + a_1_2", step.after.vars()).unwrap();
    assert!(step.bindings["a_1_1"].equals(&want).unwrap());
}

#[test]
fn mixed_step_of_two_quadrics() {
    let t = run_main_theorem(3, &[2, 2], Options::default()).unwrap();
    let step = t.steps.last().unwrap();
    let vars = step.after.vars();
    let shift = "a_3_1 + (1 + a_1_2*a_2_2 + a_2_2)/a_2_2";
    let a31 = parse_rational_function(shift, vars).unwrap();
    assert!(step.bindings["a_3_1"].equals(&a31).unwrap());
    let a21 = parse_rational_function(&format!("((1+a_2_2)/a_3_1)*({shift})^2"), vars).unwrap();
    assert!(step.bindings["a_2_1"].equals(&a21).unwrap());
}

#[test]
fn cubic_shift() {
    let t = run_main_theorem(2, &[3], Options::default()).unwrap();
    let step = &t.steps[0];
    let want = parse_rational_function(
        "a_1_2 + (a_2_1^2 + a_1_1*a_2_1 + a_1_1 + a_2_1)/(a_1_1*a_2_1)",
        step.after.vars(),
    )
    .unwrap();
    assert!(step.bindings["a_1_2"].equals(&want).unwrap());
}
