fn main() -> std::process::ExitCode {
    deltastirling::cli::main()
}
