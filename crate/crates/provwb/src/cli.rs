// placeholder
pub fn run_main() -> i32 { 0 }
