// Link-forcing stub; the real backend is the system OpenBLAS,
// linked from this package's build script.
