fn main() {
    std::process::exit(lie2alg::cli::run());
}
