"""Smoke tests for the python bindings."""

import math

import subhardy as sh


def approx(a, b, tol=1e-12):
    return abs(a - b) <= tol


def test_symbols():
    f = sh.parse_symbol("poly:4*recip(poly:2,1)")
    assert approx(f(0.0), 2.0)
    coeffs, tail = f.truncated_coeffs(2)
    assert approx(coeffs[0], 2.0) and approx(coeffs[1], -1.0) and approx(coeffs[2], 0.5)
    assert approx(tail, 0.5, 1e-9)
    g = sh.parse_symbol("poly:2,1")
    assert approx(g.reciprocal()(0.0), 0.5)
    back = sh.parse_symbol(sh.print_symbol(f))
    assert back == f


def test_points_and_gram():
    grid = sh.polar_grid(1, 4, 0.8)
    assert len(grid) == 5
    rnd = sh.random_points(50, 0.9, 42)
    rnd2 = sh.random_points(50, 0.9, 42)
    assert rnd.points == rnd2.points

    one = sh.point_set([0.0])
    assert sh.gram("szego", None, one) == [[1.0 + 0.0j]]

    pts = sh.point_set([0.0, 0.5])
    g = sh.gram("sb_defect", "poly:1,1", pts)
    assert approx(g[0][1].real, 0.25) and approx(g[1][1].real, 25.0 / 9.0)
    v = sh.psd_verdict(g)
    assert not v.psd
    assert approx(v.min_eigenvalue, -0.0223, 1e-3)
    assert len(v.witness) == 2


def test_compressions_and_scan():
    d = sh.defect_compression("poly:0,0.8", 4, "hardy", "sb")
    assert approx(d[0][0].real, 1.0)
    assert approx(d[1][1].real, -0.28, 1e-15)
    assert approx(d[2][2].real, 0.1296, 1e-15)

    scan = sh.threshold_scan("rz", [0.5, 0.7, 0.71, 0.8], 16, "hardy", "sb")
    (roots,) = (scan["refined_roots"],)
    assert len(roots) == 1 and abs(roots[0] - 1.0 / math.sqrt(2.0)) <= 1e-6
    rank, sigma = sh.numerical_rank([[1.0 + 0j, 2.0 + 0j], [2.0 + 0j, 4.0 + 0j]])
    assert rank == 1 and len(sigma) == 2


def test_classify_and_spaces():
    cl = sh.classify("poly:4*recip(poly:2,1)", sh.polar_grid(4, 16, 0.9), 16)
    assert cl["inverse_schur"] == "yes" and cl["sb_psd"] and cl["consistent"]

    det, disproves = sh.boundary_witness("poly:1,1", 0.0, 0.5)
    assert approx(det, -0.0625) and disproves

    pts = sh.random_points(20, 0.9, 5)
    assert sh.v_isometry_residual("poly:1.2,0.1", pts) < 1e-12
    assert (
        sh.kernel_sum_residual("k_space", "l_space", "szego", "poly:1.2,0.1", pts) < 1e-12
    )

    ro = sh.rank_one_perturbation_check(
        "poly:1.2,0.1", sh.random_points(12, 0.7, 11), sh.random_points(30, 0.7, 12)
    )
    assert ro["rank"] == 1 and ro["sigma_ratio"] < 1e-8

    dec = sh.hardy_decomposition_check("const:1.2", sh.random_points(20, 0.9, 77), 32)
    assert dec["kernel_residual"] < 1e-12 and dec["eq4_residual"] < 1e-10


def main():
    test_symbols()
    test_points_and_gram()
    test_compressions_and_scan()
    test_classify_and_spaces()
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
