fn main() {
    std::process::exit(fpm_core::cli::main_with_env());
}
