fn main() {
    std::process::exit(halfcube::cli::main_with_std());
}
