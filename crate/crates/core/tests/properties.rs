mod props;

macro_rules! suite {
    ($name:ident) => {
        #[test]
        fn $name() {
            let failed = props::run(props::$name::ALL);
            assert!(failed.is_empty(), "failing properties: {failed:?}");
        }
    };
}

suite!(fields);
suite!(graded);
suite!(exactla);
suite!(membership);
suite!(monsky);
suite!(cohomology);
suite!(cli);
