fn main() {
    std::process::exit(esoa::harness::cli_main(std::env::args_os()));
}
