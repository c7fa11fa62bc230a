fn main() -> std::process::ExitCode {
    robustnet::cli::main()
}
