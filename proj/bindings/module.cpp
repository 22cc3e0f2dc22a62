#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subhardy/classify.hpp"
#include "subhardy/kernels.hpp"
#include "subhardy/opcomp.hpp"
#include "subhardy/parse.hpp"
#include "subhardy/points.hpp"
#include "subhardy/report.hpp"
#include "subhardy/spaces.hpp"
#include "subhardy/version.hpp"

namespace py = pybind11;
using namespace subhardy;

namespace {

std::vector<std::vector<cx>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<cx>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    out[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  }
  return out;
}

HermitianMatrix hermitian_from_rows(const std::vector<std::vector<cx>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix raw(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("expected a square matrix");
    }
    for (int j = 0; j < n; ++j) raw.at(i, j) = rows[i][j];
  }
  return HermitianMatrix::checked(raw);
}

PointSet points_from_list(const std::vector<cx>& zs) {
  PointSet out;
  double rho = 0.0;
  for (const auto& z : zs) {
    out.points.emplace_back(z);
    rho = std::max(rho, std::abs(z));
  }
  out.rho_max = std::max(rho, 1e-12);
  return out;
}

KernelSpec make_spec(const std::string& family, const std::optional<std::string>& symbol) {
  const KernelFamily fam = family_from_name(family);
  std::optional<AnalyticSymbol> sym;
  if (symbol) sym = parse_symbol(*symbol);
  return KernelSpec(fam, std::move(sym));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "kernel positivity, operator compressions and sub-Hardy space checks on the unit disk";
  m.attr("__version__") = kVersion;

  py::class_<AnalyticSymbol>(m, "Symbol")
      .def_static("parse", &parse_symbol, py::arg("text"))
      .def("__call__", [](const AnalyticSymbol& f, cx z) { return f(DiskPoint(z)); })
      .def("__str__", &print_symbol)
      .def("square", &AnalyticSymbol::square)
      .def("reciprocal", &AnalyticSymbol::reciprocal)
      .def("backward_shift", &AnalyticSymbol::backward_shift)
      .def("truncated_coeffs", &AnalyticSymbol::truncated_coeffs, py::arg("degree"))
      .def("is_constant", &AnalyticSymbol::is_constant)
      .def("__eq__", [](const AnalyticSymbol& a, const AnalyticSymbol& b) { return a == b; });

  m.def("parse_symbol", &parse_symbol, py::arg("text"));
  m.def("print_symbol", &print_symbol, py::arg("symbol"));

  py::class_<PointSet>(m, "PointSet")
      .def_property_readonly("points",
                             [](const PointSet& p) {
                               std::vector<cx> zs;
                               zs.reserve(p.size());
                               for (const auto& q : p.points) zs.push_back(q.value());
                               return zs;
                             })
      .def_readonly("rho_max", &PointSet::rho_max)
      .def_readonly("min_separation", &PointSet::min_separation)
      .def_readonly("seed", &PointSet::seed)
      .def("__len__", &PointSet::size);

  m.def("polar_grid", &polar_grid, py::arg("n_radii"), py::arg("n_angles"), py::arg("rho_max"));
  m.def("random_points", &random_points, py::arg("n"), py::arg("rho_max"), py::arg("seed"));
  m.def("point_set", &points_from_list, py::arg("points"));

  m.def(
      "kernel_value",
      [](const std::string& family, const std::optional<std::string>& symbol, cx lam, cx z) {
        return kernel_value(make_spec(family, symbol), DiskPoint(lam), DiskPoint(z));
      },
      py::arg("family"), py::arg("symbol"), py::arg("lam"), py::arg("z"));
  m.def(
      "gram",
      [](const std::string& family, const std::optional<std::string>& symbol, const PointSet& pts) {
        return matrix_rows(gram(make_spec(family, symbol), pts).as_matrix());
      },
      py::arg("family"), py::arg("symbol"), py::arg("points"));
  m.def(
      "kernel_sum_residual",
      [](const std::string& fa, const std::string& fb, const std::string& ft,
         const std::optional<std::string>& symbol, const PointSet& pts) {
        return kernel_sum_residual(make_spec(fa, symbol), make_spec(fb, symbol),
                                   make_spec(ft, ft == "szego" || ft == "bergman"
                                                     ? std::nullopt
                                                     : symbol),
                                   pts);
      },
      py::arg("family_a"), py::arg("family_b"), py::arg("family_target"), py::arg("symbol"),
      py::arg("points"));

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("psd", &Verdict::psd)
      .def_readonly("min_eigenvalue", &Verdict::min_eigenvalue)
      .def_readonly("witness", &Verdict::witness)
      .def_readonly("tolerance_used", &Verdict::tolerance_used)
      .def_readonly("scale", &Verdict::scale);

  m.def(
      "min_eig",
      [](const std::vector<std::vector<cx>>& rows) { return min_eig(hermitian_from_rows(rows)); },
      py::arg("matrix"));
  m.def(
      "psd_verdict",
      [](const std::vector<std::vector<cx>>& rows, double tol_rel) {
        return psd_verdict(hermitian_from_rows(rows), tol_rel);
      },
      py::arg("matrix"), py::arg("tol_rel") = 1e-10);
  m.def(
      "gram_psd_verdict",
      [](const std::string& family, const std::optional<std::string>& symbol, const PointSet& pts,
         double tol_rel) {
        return psd_verdict(gram(make_spec(family, symbol), pts), tol_rel);
      },
      py::arg("family"), py::arg("symbol"), py::arg("points"), py::arg("tol_rel") = 1e-10);
  m.def(
      "numerical_rank",
      [](const std::vector<std::vector<cx>>& rows, double rel_tol) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix mat(r, c);
        for (int i = 0; i < r; ++i) {
          if (static_cast<int>(rows[i].size()) != c) {
            throw std::invalid_argument("ragged matrix");
          }
          for (int j = 0; j < c; ++j) mat.at(i, j) = rows[i][j];
        }
        const RankResult rr = numerical_rank(mat, rel_tol);
        return std::make_pair(rr.rank, rr.singular_values);
      },
      py::arg("matrix"), py::arg("rel_tol") = 1e-8);

  m.def(
      "multiplier_matrix",
      [](const std::string& symbol, int n_max, const std::string& space) {
        return matrix_rows(multiplier_matrix(parse_symbol(symbol), n_max, space_from_name(space)).matrix);
      },
      py::arg("symbol"), py::arg("N"), py::arg("space"));
  m.def(
      "product_compression",
      [](const std::string& symbol, int n_max, const std::string& space) {
        return matrix_rows(
            product_compression(parse_symbol(symbol), n_max, space_from_name(space)).as_matrix());
      },
      py::arg("symbol"), py::arg("N"), py::arg("space"));
  m.def(
      "defect_compression",
      [](const std::string& symbol, int n_max, const std::string& space, const std::string& variant) {
        return matrix_rows(defect_compression(parse_symbol(symbol), n_max, space_from_name(space),
                                              variant_from_name(variant))
                               .as_matrix());
      },
      py::arg("symbol"), py::arg("N"), py::arg("space"), py::arg("variant"));
  m.def(
      "threshold_scan",
      [](const std::string& family, const std::vector<double>& grid, int n_max,
         const std::string& space, const std::string& variant) {
        const ScanResult s = threshold_scan(symbol_family(family), grid, n_max,
                                            space_from_name(space), variant_from_name(variant));
        py::dict out;
        py::list rows;
        for (const auto& row : s.rows) {
          rows.append(py::make_tuple(row.r, row.min_eig, row.psd));
        }
        out["rows"] = std::move(rows);
        out["refined_roots"] = s.refined_roots;
        return out;
      },
      py::arg("family"), py::arg("grid"), py::arg("N"), py::arg("space"), py::arg("variant"));

  m.def(
      "classify",
      [](const std::string& symbol, const PointSet& pts, int n_max, double margin, double tol_rel) {
        const ClassLabel label =
            consistency_report(parse_symbol(symbol), pts, n_max, margin, tol_rel);
        py::dict out;
        out["schur"] = tristate_name(label.modulus.schur);
        out["inverse_schur"] = tristate_name(label.modulus.inverse_schur);
        out["sqrt2_bounded"] = tristate_name(label.modulus.sqrt2_bounded);
        out["max_modulus"] = label.modulus.max_modulus;
        out["min_modulus"] = label.modulus.min_modulus;
        out["sb_psd"] = label.sb_member.psd;
        out["sb_min_eigenvalue"] = label.sb_member.min_eigenvalue;
        out["sb1_lower_psd"] = label.sb1_member.first.psd;
        out["sb1_upper_psd"] = label.sb1_member.second.psd;
        out["consistent"] = label.consistent;
        out["caveats"] = label.caveats;
        return out;
      },
      py::arg("symbol"), py::arg("points"), py::arg("N") = 64, py::arg("margin") = 1e-9,
      py::arg("tol_rel") = 1e-10);
  m.def(
      "boundary_witness",
      [](const std::string& symbol, cx lambda0, cx mu) {
        const BoundaryWitness bw = boundary_witness(parse_symbol(symbol), DiskPoint(lambda0), DiskPoint(mu));
        return std::make_pair(bw.det, bw.disproves);
      },
      py::arg("symbol"), py::arg("lambda0"), py::arg("mu"));

  m.def(
      "v_isometry_residual",
      [](const std::string& symbol, const PointSet& pts) {
        return v_isometry_residual(parse_symbol(symbol), pts);
      },
      py::arg("symbol"), py::arg("points"));
  m.def(
      "rank_one_perturbation_check",
      [](const std::string& symbol, const PointSet& nodes, const PointSet& evals) {
        const RankOneResult r = rank_one_perturbation_check(parse_symbol(symbol), nodes, evals);
        py::dict out;
        out["rank"] = r.rank;
        out["singular_values"] = r.singular_values;
        out["sigma_ratio"] = r.sigma_ratio;
        out["proportionality_defect"] = r.proportionality_defect;
        out["formula_match"] = r.formula_match;
        out["degenerate"] = r.degenerate;
        return out;
      },
      py::arg("symbol"), py::arg("nodes"), py::arg("eval_points"));
  m.def(
      "hardy_decomposition_check",
      [](const std::string& symbol, const PointSet& pts, int n_max) {
        const DecompositionResult r = hardy_decomposition_check(parse_symbol(symbol), pts, n_max);
        py::dict out;
        out["kernel_residual"] = r.kernel_residual;
        out["eq4_residual"] = r.eq4_residual;
        out["eq5_residual"] = r.eq5_residual;
        return out;
      },
      py::arg("symbol"), py::arg("points"), py::arg("N") = 32);
}
