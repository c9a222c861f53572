use clarabel::algebra::*;
use clarabel::solver::*;
use std::slice;

#[repr(C)]
pub struct CfSolution {
    pub status: i32, // 0 solved, 1 primal infeasible, 2 dual infeasible, 3 almost solved, 4 max iter/time, 5 numerical error, 6 insufficient progress
    pub obj: f64,
    pub iterations: u32,
}

// Cone tags: 0 zero, 1 nonneg, 2 soc, 3 psd triangle, 4 exp (dim field ignored, =3)
#[no_mangle]
pub unsafe extern "C" fn cf_solve(
    n: usize,
    m: usize,
    p_colptr: *const usize, p_rowind: *const usize, p_vals: *const f64, p_nnz: usize,
    q: *const f64,
    a_colptr: *const usize, a_rowind: *const usize, a_vals: *const f64, a_nnz: usize,
    b: *const f64,
    cone_tags: *const i32, cone_dims: *const usize, n_cones: usize,
    max_iter: u32, time_limit: f64, tol: f64, verbose: i32,
    x_out: *mut f64, z_out: *mut f64, s_out: *mut f64,
    sol: *mut CfSolution,
) -> i32 {
    let qv = slice::from_raw_parts(q, n);
    let bv = slice::from_raw_parts(b, m);
    let p = CscMatrix::new(
        n, n,
        slice::from_raw_parts(p_colptr, n + 1).to_vec(),
        slice::from_raw_parts(p_rowind, p_nnz).to_vec(),
        slice::from_raw_parts(p_vals, p_nnz).to_vec(),
    );
    let a = CscMatrix::new(
        m, n,
        slice::from_raw_parts(a_colptr, n + 1).to_vec(),
        slice::from_raw_parts(a_rowind, a_nnz).to_vec(),
        slice::from_raw_parts(a_vals, a_nnz).to_vec(),
    );
    let tags = slice::from_raw_parts(cone_tags, n_cones);
    let dims = slice::from_raw_parts(cone_dims, n_cones);
    let mut cones: Vec<SupportedConeT<f64>> = Vec::with_capacity(n_cones);
    for i in 0..n_cones {
        match tags[i] {
            0 => cones.push(ZeroConeT(dims[i])),
            1 => cones.push(NonnegativeConeT(dims[i])),
            2 => cones.push(SecondOrderConeT(dims[i])),
            3 => cones.push(PSDTriangleConeT(dims[i])),
            4 => cones.push(ExponentialConeT()),
            _ => return -1,
        }
    }
    let settings = DefaultSettingsBuilder::default()
        .verbose(verbose != 0)
        .max_iter(max_iter)
        .time_limit(time_limit)
        .tol_gap_abs(tol)
        .tol_gap_rel(tol)
        .tol_feas(tol)
        .build()
        .unwrap();
    let mut solver = DefaultSolver::new(&p, qv, &a, bv, &cones, settings);
    match solver {
        Ok(ref mut s) => {
            s.solve();
            let status = match s.solution.status {
                SolverStatus::Solved => 0,
                SolverStatus::PrimalInfeasible => 1,
                SolverStatus::DualInfeasible => 2,
                SolverStatus::AlmostSolved => 3,
                SolverStatus::AlmostPrimalInfeasible => 1,
                SolverStatus::AlmostDualInfeasible => 2,
                SolverStatus::MaxIterations | SolverStatus::MaxTime => 4,
                SolverStatus::NumericalError => 5,
                SolverStatus::InsufficientProgress => 6,
                _ => 5,
            };
            let xs = slice::from_raw_parts_mut(x_out, n);
            xs.copy_from_slice(&s.solution.x);
            let zs = slice::from_raw_parts_mut(z_out, m);
            zs.copy_from_slice(&s.solution.z);
            let ss = slice::from_raw_parts_mut(s_out, m);
            ss.copy_from_slice(&s.solution.s);
            (*sol).status = status;
            (*sol).obj = s.solution.obj_val;
            (*sol).iterations = s.solution.iterations;
            0
        }
        Err(_) => -2,
    }
}
