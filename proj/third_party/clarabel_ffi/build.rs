// The sdp feature of clarabel uses generic BLAS/LAPACK bindings and leaves
// backend selection to the final link. OpenBLAS provides both symbol sets.
fn main() {
    println!("cargo:rustc-link-lib=dylib=openblas");
}
