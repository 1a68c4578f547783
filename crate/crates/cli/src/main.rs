fn main() {
    std::process::exit(matsplit::run(std::env::args_os()));
}
