//! Runs every example's `main`, so their assertions are part of the suite.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(fields);
example!(graded_pieces);
example!(linear_algebra);
example!(quintic_membership);
example!(hilbert_kunz);
example!(counterexample);
example!(special_matrix);
example!(cohomology);
example!(cli_report);
