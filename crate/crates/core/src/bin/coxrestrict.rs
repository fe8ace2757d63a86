fn main() {
    std::process::exit(coxeter_restrict::cli::main());
}
