fn main() {
    let code = recseq::cli::run(std::env::args_os());
    std::process::exit(code);
}
