use proptest::prelude::*;
use tightloc::cli::{run, Config, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use tightloc::fields::Gf2m;
use tightloc::graded::Poly;
use tightloc::membership::{member, GradedIdealSpec};

use super::{config, Property};

pub const ALL: &[Property] = &[
    ("cli::member_reports_are_deterministic", member_reports_are_deterministic),
    ("cli::indentation_does_not_change_content", indentation_does_not_change_content),
    ("cli::out_of_range_degrees_are_usage_errors", out_of_range_degrees_are_usage_errors),
];

fn invoke(args: &[String]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args.iter().cloned(), Ok(Config::default()), &mut out, &mut err);
    (code, out)
}

fn member_args(a: u32, b: u32, e: [u32; 3], expect: bool, indent: usize) -> Vec<String> {
    [
        "tightloc".to_string(),
        "member".into(),
        "--relation".into(),
        "x^5 + y^5 + z^5".into(),
        "--gens".into(),
        format!("x^{a}, y^{b}"),
        "--element".into(),
        format!("x^{}*y^{}*z^{}", e[0], e[1], e[2]),
        "--expect".into(),
        expect.to_string(),
        "--json-indent".into(),
        indent.to_string(),
    ]
    .to_vec()
}

proptest! {
    #![proptest_config(config())]

    fn member_reports_are_deterministic(a in 1u32..5, b in 1u32..5, e in [0u32..6, 0u32..6, 0u32..8], expect in any::<bool>()) {
        let args = member_args(a, b, e, expect, 2);
        let (c1, o1) = invoke(&args);
        let (c2, o2) = invoke(&args);
        prop_assert_eq!(c1, c2);
        prop_assert_eq!(&o1, &o2);

        let f = Gf2m::f2();
        let ideal = GradedIdealSpec::new(
            &f,
            vec![Poly::mono(&f, a, 0, 0), Poly::mono(&f, 0, b, 0)],
            Some(Poly::mono(&f, 5, 0, 0).add(&Poly::mono(&f, 0, 5, 0)).add(&Poly::mono(&f, 0, 0, 5))),
        ).unwrap();
        let truth = member(&Poly::mono(&f, e[0], e[1], e[2]), &ideal).unwrap();
        prop_assert_eq!(c1, if truth == expect { EXIT_OK } else { EXIT_FAILED });
        let report: serde_json::Value = serde_json::from_slice(&o1).unwrap();
        prop_assert_eq!(&report["checks"][0]["witness"]["member"], &serde_json::Value::Bool(truth));
    }

    fn indentation_does_not_change_content(a in 1u32..5, e in [0u32..6, 0u32..6, 0u32..8], indent in 0usize..6) {
        let (_, compact) = invoke(&member_args(a, a, e, true, 0));
        let (_, pretty) = invoke(&member_args(a, a, e, true, indent));
        let l: serde_json::Value = serde_json::from_slice(&compact).unwrap();
        let r: serde_json::Value = serde_json::from_slice(&pretty).unwrap();
        prop_assert_eq!(l, r);
    }

    fn out_of_range_degrees_are_usage_errors(d in prop_oneof![0u32..2, 30u32..1000], cmd in prop::sample::select(vec!["counterexample", "matrix", "generic-fiber"])) {
        let args: Vec<String> = vec!["tightloc".into(), cmd.into(), "--degree".into(), d.to_string()];
        let (code, out) = invoke(&args);
        prop_assert_eq!(code, EXIT_USAGE);
        prop_assert!(out.is_empty());
    }
}
