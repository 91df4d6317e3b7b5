fn main() {
    std::process::exit(hcprim::cli::run());
}
