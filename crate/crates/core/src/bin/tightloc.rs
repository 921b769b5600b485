fn main() {
    std::process::exit(tightloc::cli::main_with_env());
}
