#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "cantor/combinatorics.hpp"
#include "cantor/dimension.hpp"
#include "cantor/error.hpp"
#include "cantor/hausdorff_bounds.hpp"
#include "cantor/rational_family.hpp"
#include "cantor/standard_cantor.hpp"

namespace py = pybind11;
using namespace cantor;

namespace {

Kind kind_arg(const std::string& text) {
  const auto k = parse_kind(text);
  if (!k) throw Error(ErrorCode::InvalidArgument, "kind must be I, II or III");
  return *k;
}

py::array_t<std::uint8_t> mask_array(const Mask& m) {
  py::array_t<std::uint8_t> out({m.height, m.width});
  std::memcpy(out.mutable_data(), m.bits.data(), m.bits.size());
  return out;
}

Mask array_mask(py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> a) {
  if (a.ndim() != 2) throw Error(ErrorCode::BadImageDims, "mask must be two-dimensional");
  Mask m(static_cast<std::size_t>(a.shape(1)), static_cast<std::size_t>(a.shape(0)));
  const auto* src = a.data();
  for (std::size_t k = 0; k < m.bits.size(); ++k) m.bits[k] = src[k] != 0;
  return m;
}

StandardIFS make_ifs(const std::string& kind, const DegreeVector& degrees,
                     const std::optional<std::vector<double>>& points) {
  const auto c = validate(kind_arg(kind), degrees);
  return build_ifs(c, points ? partition_from_points(degrees, *points) : default_partition(degrees));
}

FamilyParams family(int rho, const DegreeVector& degrees, double tau) {
  return parameter_schedule(rho, degrees, tau);
}

py::dict bounds_dict(const DimensionBounds& b) {
  py::dict d;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  d["method"] = std::string(method_name(b.method));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cantor circle Julia sets: counting, dimensions and rendering";

  // a bare type object; leaked on purpose so the translator never sees it die
  static PyObject* cantor_error =
      PyErr_NewException("cantor_circles._core.CantorError", PyExc_RuntimeError, nullptr);
  m.add_object("CantorError", py::handle(cantor_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (message,), code attribute carries the stable name
      py::object exc = py::handle(cantor_error)(e.what());
      exc.attr("code") = std::string(code_name(e.code()));
      PyErr_SetObject(cantor_error, exc.ptr());
    }
  });

  m.def("count_components", &count_components, py::arg("d"));
  m.def("count_classes", &count_classes, py::arg("d"));
  m.def("enumerate_degree_vectors", &enumerate_degree_vectors, py::arg("d"));
  m.def(
      "enumerate_combinations",
      [](int d) {
        std::vector<std::pair<std::string, DegreeVector>> out;
        for (const auto& c : enumerate_combinations(d)) {
          out.emplace_back(std::string(kind_name(c.kind())), c.degrees());
        }
        return out;
      },
      py::arg("d"), "List of (kind, degrees) pairs.");
  m.def(
      "validate",
      [](const std::string& kind, const DegreeVector& degrees) {
        validate(kind_arg(kind), degrees);
      },
      py::arg("kind"), py::arg("degrees"), "Raises CantorError on an invalid combination.");

  m.def(
      "alpha_root",
      [](const DegreeVector& degrees) {
        const auto s = alpha_root(degrees);
        py::dict d;
        d["alpha"] = s.exponent;
        d["residual"] = s.residual;
        d["iterations"] = s.iterations;
        d["bracket"] = py::make_tuple(s.bracket_lower, s.bracket_upper);
        return d;
      },
      py::arg("degrees"));
  m.def("conformal_dimension", &conformal_dimension, py::arg("degrees"));
  m.def(
      "similarity_dimension",
      [](const std::vector<std::pair<double, int>>& factors) {
        std::vector<ContractionFactor> f;
        for (auto [r, k] : factors) f.push_back({r, k});
        return solve_similarity_dimension(f).exponent;
      },
      py::arg("factors"), "factors: list of (ratio, multiplicity).");

  m.def(
      "ifs_maps",
      [](const std::string& kind, const DegreeVector& degrees,
         std::optional<std::vector<double>> partition) {
        py::list out;
        for (const auto& map : make_ifs(kind, degrees, partition).maps) {
          py::dict d;
          d["exponent"] = map.exponent();
          d["coefficient"] = map.coefficient();
          d["interval"] = py::make_tuple(map.lower, map.upper);
          out.append(d);
        }
        return out;
      },
      py::arg("kind"), py::arg("degrees"), py::arg("partition") = py::none());
  m.def(
      "in_attractor",
      [](double x, const std::string& kind, const DegreeVector& degrees, int depth) {
        return in_attractor(cantor_membership(x, make_ifs(kind, degrees, std::nullopt), depth));
      },
      py::arg("x"), py::arg("kind"), py::arg("degrees"), py::arg("depth") = 24);
  m.def(
      "render_standard",
      [](const std::string& kind, const DegreeVector& degrees, std::size_t size, int depth) {
        RenderOptions o;
        o.width = o.height = size;
        o.depth = depth;
        const auto ifs = make_ifs(kind, degrees, std::nullopt);
        Mask mask;
        {
          py::gil_scoped_release release;
          mask = render_standard(ifs, o);
        }
        return mask_array(mask);
      },
      py::arg("kind"), py::arg("degrees"), py::arg("size") = 512, py::arg("depth") = 24,
      "uint8 mask over [-1, 1]^2, row 0 on top.");
  m.def(
      "box_count",
      [](py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> mask,
         double pixel_scale) {
        const Mask mk = array_mask(mask);
        const auto sizes = default_box_sizes(mk.width, mk.height);
        const auto fit = box_counting_dimension(mk, pixel_scale, sizes);
        py::dict d;
        d["slope"] = fit.slope;
        d["standard_error"] = fit.standard_error;
        d["box_sizes"] = fit.box_sizes;
        d["counts"] = fit.counts;
        return d;
      },
      py::arg("mask"), py::arg("pixel_scale"));

  m.def(
      "params",
      [](int rho, const DegreeVector& degrees, double tau) {
        const auto p = family(rho, degrees, tau);
        py::dict d;
        d["rho"] = p.rho;
        d["degrees"] = p.degrees;
        d["tau"] = p.tau;
        d["a"] = p.a;
        d["total_degree"] = p.total_degree();
        return d;
      },
      py::arg("rho"), py::arg("degrees"), py::arg("tau"));
  m.def(
      "evaluate",
      [](int rho, const DegreeVector& degrees, double tau, std::complex<double> z) {
        return evaluate(family(rho, degrees, tau), z);
      },
      py::arg("rho"), py::arg("degrees"), py::arg("tau"), py::arg("z"));
  m.def(
      "verify",
      [](int rho, const DegreeVector& degrees, double tau, double alpha_margin) {
        const auto p = family(rho, degrees, tau);
        const auto r = compute_radii(p, alpha_margin);
        const auto report = verify_structure(p, r);
        py::dict d;
        d["pass"] = report.pass();
        d["critical_values"] = report.critical_values_pass;
        d["circles"] = report.circles_pass;
        d["chain"] = report.chain_pass;
        d["critical_point_count"] = report.critical_point_count;
        return d;
      },
      py::arg("rho"), py::arg("degrees"), py::arg("tau"), py::arg("alpha_margin") = 0.1);
  m.def(
      "hdim_bounds",
      [](int rho, const DegreeVector& degrees, double tau, double alpha_margin,
         std::size_t radial, std::size_t angular) {
        const auto p = family(rho, degrees, tau);
        const auto r = annulus_radii(p, alpha_margin);
        DimensionBounds b;
        {
          py::gil_scoped_release release;
          b = hdim_bracket(branch_envelopes(p, r, {radial, angular}));
        }
        return bounds_dict(b);
      },
      py::arg("rho"), py::arg("degrees"), py::arg("tau"), py::arg("alpha_margin") = 0.1,
      py::arg("radial") = 128, py::arg("angular") = 512,
      "Sampled bracket on the Hausdorff dimension; not certified.");
  m.def(
      "render_julia",
      [](int rho, const DegreeVector& degrees, double tau, std::size_t size,
         std::optional<int> max_iter, double alpha_margin, double half_width) {
        const auto p = family(rho, degrees, tau);
        const auto r = annulus_radii(p, alpha_margin);
        JuliaRenderOptions o;
        o.width = o.height = size;
        o.max_iter = max_iter ? *max_iter : depth_matched_iterations(p, size);
        o.x_min = o.y_min = -half_width;
        o.x_max = o.y_max = half_width;
        JuliaRender out;
        {
          py::gil_scoped_release release;
          out = render_julia(p, r, o);
        }
        py::array_t<std::int32_t> steps({size, size});
        std::memcpy(steps.mutable_data(), out.escape_steps.data(),
                    out.escape_steps.size() * sizeof(std::int32_t));
        return py::make_tuple(mask_array(out.mask), steps);
      },
      py::arg("rho"), py::arg("degrees"), py::arg("tau"), py::arg("size") = 512,
      py::arg("max_iter") = py::none(), py::arg("alpha_margin") = 0.1,
      py::arg("half_width") = 1.5,
      "(mask, steps). max_iter defaults to the depth-matched count for this size.");
}
