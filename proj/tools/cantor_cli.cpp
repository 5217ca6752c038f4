// Command-line front end. Reports go to stdout as JSON (or to -o), errors to
// stderr as "error: <CodeName>: <message>". Exit 0 ok, 1 bad input, 2 failed
// computation.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cantor/combinatorics.hpp"
#include "cantor/dimension.hpp"
#include "cantor/error.hpp"
#include "cantor/hausdorff_bounds.hpp"
#include "cantor/pgm.hpp"
#include "cantor/rational_family.hpp"
#include "cantor/standard_cantor.hpp"
#include "json.hpp"

using namespace cantor;
using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

template <class T>
T parse_number(std::string_view text, const std::string& what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) invalid("cannot parse " + what + " from '" + std::string(text) + "'");
  return value;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_number<T>(piece, what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

DegreeVector parse_degrees(const std::string& text) {
  auto d = parse_list<int>(text, "degrees");
  if (d.size() < 2 || !satisfies_module_inequality(d)) {
    throw Error(ErrorCode::InvalidDegrees, "need n >= 2 degrees, each >= 2, with sum 1/d_i < 1");
  }
  return d;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) invalid("grid must look like 128x512");
  return {parse_number<std::size_t>(std::string_view(text).substr(0, x), "grid"),
          parse_number<std::size_t>(std::string_view(text).substr(x + 1), "grid")};
}

std::array<double, 4> parse_window(const std::string& text) {
  const auto v = parse_list<double>(text, "window");
  if (v.size() != 4) invalid("window needs x_min,x_max,y_min,y_max");
  return {v[0], v[1], v[2], v[3]};
}

void emit(const json& report, const std::string& path) {
  if (path.empty()) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) invalid("cannot open " + path + " for writing");
  out << report.dump(2) << '\n';
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) invalid("cannot open " + path + " for writing");
  out << text;
}

void emit_pgm(const Mask& mask, const std::string& path) {
  if (path.empty()) {
    write_pgm(std::cout, mask);
  } else {
    write_pgm(path, mask);
  }
}

json combination_json(const Combination& c) {
  const auto cls = canonical_class(c);
  return {{"kind", kind_name(c.kind())},
          {"degrees", c.degrees()},
          {"representative", cls.representative.degrees()},
          {"class_size", cls.members.size()}};
}

std::string case_name(BasinCase c) {
  switch (c) {
    case BasinCase::A: return "A";
    case BasinCase::B: return "B";
    case BasinCase::C: return "C";
    case BasinCase::D: return "D";
  }
  return "?";
}

json radii_json(const AnnulusRadii& r) {
  return {{"r0", r.r0}, {"r_minus", r.r_minus}, {"r_plus", r.r_plus}, {"r_inf", r.r_inf},
          {"alpha", r.alpha_margin}};
}

// Shared options of the family subcommands.
struct FamilyArgs {
  int rho = 1;
  std::string degrees;
  double tau = 1e-4;
  double alpha = 0.1;

  void add(CLI::App* app, bool with_alpha) {
    app->add_option("--rho", rho, "0 or 1")->required();
    app->add_option("--degrees", degrees, "comma-separated d_1,...,d_n")->required();
    app->add_option("--tau", tau, "schedule parameter")->required();
    if (with_alpha) app->add_option("--alpha", alpha, "annulus margin in (0, 1/2)")->capture_default_str();
  }
  FamilyParams params() const {
    if (rho != 0 && rho != 1) invalid("--rho must be 0 or 1");
    return parameter_schedule(rho, parse_degrees(degrees), tau);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Cantor circle Julia sets: counting, standard models, the rational family, dimensions"};
  app.require_subcommand(1);
  app.fallthrough();  // -o may follow the subcommand
  std::string output;
  app.add_option("-o,--output", output, "output file (default: stdout)");

  // count
  auto* count = app.add_subcommand("count", "number N(d) of Cantor circle hyperbolic components");
  std::optional<int> count_d;
  std::string count_range;
  std::string count_format = "json";
  count->add_option("d", count_d, "degree");
  count->add_option("--range", count_range, "inclusive range lo..hi");
  count->add_option("--format", count_format)->check(CLI::IsMember({"json", "csv"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all combinations of total degree d");
  int enum_d = 0;
  std::string enum_format = "json";
  enumerate->add_option("d", enum_d)->required();
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"json", "csv"}));

  // confdim
  auto* confdim = app.add_subcommand("confdim", "conformal dimension 1 + alpha");
  std::string conf_degrees;
  confdim->add_option("degrees", conf_degrees, "comma-separated degrees")->required();

  // render-standard
  auto* render_std = app.add_subcommand("render-standard", "raster of a standard Cantor circle (PGM)");
  std::string std_kind;
  std::string std_degrees;
  std::string std_partition;
  std::string std_window;
  std::size_t std_size = 1024;
  int std_depth = 24;
  render_std->add_option("--kind", std_kind, "I, II or III (default I for even n, II for odd)");
  render_std->add_option("--degrees", std_degrees)->required();
  render_std->add_option("--partition", std_partition, "2n comma-separated endpoints");
  render_std->add_option("--size", std_size)->capture_default_str();
  render_std->add_option("--depth", std_depth)->capture_default_str();
  render_std->add_option("--window", std_window, "x_min,x_max,y_min,y_max inside [-1,1]^2");

  // params
  auto* params_cmd = app.add_subcommand("params", "parameters a_i of the schedule");
  FamilyArgs params_args;
  params_args.add(params_cmd, true);

  // render-julia
  auto* render_julia_cmd = app.add_subcommand("render-julia", "escape-time raster of the family (PGM)");
  FamilyArgs julia_args;
  julia_args.add(render_julia_cmd, true);
  std::size_t julia_size = 1024;
  int julia_iter = 200;
  std::string julia_window;
  std::string escape_field;
  render_julia_cmd->add_option("--size", julia_size)->capture_default_str();
  render_julia_cmd->add_option("--max-iter", julia_iter)->capture_default_str();
  render_julia_cmd->add_option("--window", julia_window, "x_min,x_max,y_min,y_max");
  render_julia_cmd->add_option("--escape-field", escape_field, "CSV of row,col,steps for Fatou pixels");

  // verify
  auto* verify = app.add_subcommand("verify", "runtime checks that tau is admissible");
  FamilyArgs verify_args;
  verify_args.add(verify, true);
  std::size_t verify_samples = 1024;
  verify->add_option("--samples", verify_samples)->capture_default_str();

  // hdim-bounds
  auto* hdim = app.add_subcommand("hdim-bounds", "Falconer bracket for the Hausdorff dimension");
  FamilyArgs hdim_args;
  hdim_args.add(hdim, true);
  std::string hdim_grid = "128x512";
  hdim->add_option("--grid", hdim_grid, "radial x angular samples")->capture_default_str();

  // boxcount
  auto* boxcount = app.add_subcommand("boxcount", "box-counting slope of a PGM mask");
  std::string box_input;
  double pixel_scale = 1.0;
  std::string box_sizes;
  boxcount->add_option("mask", box_input, "P5 file; dark pixels are set")->required();
  boxcount->add_option("--pixel-scale", pixel_scale, "side length of one pixel")->capture_default_str();
  boxcount->add_option("--sizes", box_sizes, "comma-separated box sizes in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << '\n';
    return 1;
  }

  if (count->parsed()) {
    if (count_d.has_value() == !count_range.empty()) invalid("give either d or --range");
    int lo = 0;
    int hi = 0;
    if (count_d) {
      lo = hi = *count_d;
    } else {
      const auto dots = count_range.find("..");
      if (dots == std::string::npos) invalid("--range must look like 5..36");
      lo = parse_number<int>(std::string_view(count_range).substr(0, dots), "range");
      hi = parse_number<int>(std::string_view(count_range).substr(dots + 2), "range");
      if (lo > hi) invalid("empty range");
    }
    if (count_format == "csv") {
      std::ostringstream csv;
      for (int d = lo; d <= hi; ++d) csv << d << ',' << count_components(d) << '\n';
      emit_text(csv.str(), output);
    } else if (count_d) {
      emit({{"d", *count_d}, {"N", count_components(*count_d)}}, output);
    } else {
      json rows = json::array();
      for (int d = lo; d <= hi; ++d) rows.push_back({{"d", d}, {"N", count_components(d)}});
      emit(rows, output);
    }
  } else if (enumerate->parsed()) {
    const auto combos = enumerate_combinations(enum_d);
    if (enum_format == "csv") {
      std::ostringstream csv;
      for (const auto& c : combos) {
        csv << kind_name(c.kind());
        for (int x : c.degrees()) csv << ',' << x;
        csv << '\n';
      }
      emit_text(csv.str(), output);
    } else {
      json list = json::array();
      for (const auto& c : combos) list.push_back(combination_json(c));
      emit({{"d", enum_d}, {"count", combos.size()}, {"N", count_components(enum_d)}, {"combinations", list}},
           output);
    }
  } else if (confdim->parsed()) {
    const auto d = parse_degrees(conf_degrees);
    const auto root = alpha_root(d);
    emit({{"degrees", d},
          {"alpha", root.exponent},
          {"conformal_dim", 1.0 + root.exponent},
          {"residual", root.residual},
          {"iterations", root.iterations}},
         output);
  } else if (render_std->parsed()) {
    const auto d = parse_degrees(std_degrees);
    Kind kind = d.size() % 2 == 0 ? Kind::I : Kind::II;
    if (!std_kind.empty()) {
      const auto k = parse_kind(std_kind);
      if (!k) invalid("--kind must be I, II or III");
      kind = *k;
    }
    const auto combination = validate(kind, d);
    const auto partition =
        std_partition.empty() ? default_partition(d) : partition_from_points(d, parse_list<double>(std_partition, "partition"));
    RenderOptions o;
    o.width = o.height = std_size;
    o.depth = std_depth;
    if (!std_window.empty()) {
      const auto w = parse_window(std_window);
      o.window = {w[0], w[1], w[2], w[3]};
    }
    emit_pgm(render_standard(build_ifs(combination, partition), o), output);
  } else if (params_cmd->parsed()) {
    const auto p = params_args.params();
    const auto r = compute_radii(p, params_args.alpha);
    emit({{"rho", p.rho},
          {"degrees", p.degrees},
          {"tau", p.tau},
          {"a", p.a},
          {"case", case_name(p.basin_case())},
          {"total_degree", p.total_degree()},
          {"radii", radii_json(r)},
          {"chain_holds", r.chain_holds(p.a)}},
         output);
  } else if (render_julia_cmd->parsed()) {
    const auto p = julia_args.params();
    const auto r = annulus_radii(p, julia_args.alpha);
    JuliaRenderOptions o;
    o.width = o.height = julia_size;
    o.max_iter = julia_iter;
    if (!julia_window.empty()) {
      const auto w = parse_window(julia_window);
      o.x_min = w[0];
      o.x_max = w[1];
      o.y_min = w[2];
      o.y_max = w[3];
    }
    const auto img = render_julia(p, r, o);
    emit_pgm(img.mask, output);
    if (!escape_field.empty()) {
      std::ofstream csv(escape_field);
      if (!csv) invalid("cannot open " + escape_field + " for writing");
      csv << "row,col,steps\n";
      for (std::size_t row = 0; row < o.height; ++row) {
        for (std::size_t col = 0; col < o.width; ++col) {
          const std::size_t i = row * o.width + col;
          if (img.verdicts[i] != Verdict::JuliaCandidate) csv << row << ',' << col << ',' << img.escape_steps[i] << '\n';
        }
      }
    }
  } else if (verify->parsed()) {
    const auto p = verify_args.params();
    if (!(verify_args.alpha > 0.0 && verify_args.alpha < 0.5)) invalid("--alpha must lie in (0, 1/2)");
    const auto r = compute_radii(p, verify_args.alpha);
    const auto report = verify_structure(p, r, verify_samples);
    json circles = json::array();
    for (const auto& c : report.circles) {
      circles.push_back({{"label", c.label},
                         {"radius", c.radius},
                         {"group", c.group},
                         {"image_side", c.inner_side ? "inner" : "outer"},
                         {"min_abs", c.min_abs},
                         {"max_abs", c.max_abs},
                         {"in_trap", c.in_trap},
                         {"side_ok", c.side_ok},
                         {"fatou_ok", c.fatou_ok},
                         {"winding", c.winding},
                         {"expected_winding", c.expected_winding},
                         {"pass", c.pass}});
    }
    json critical = {{"pass", report.critical_values_pass},
                     {"count", report.critical_point_count},
                     {"worst_log_margin", report.worst_critical_value_margin}};
    if (!report.critical_error.empty()) critical["error"] = report.critical_error;
    emit({{"rho", p.rho},
          {"degrees", p.degrees},
          {"tau", p.tau},
          {"radii", radii_json(r)},
          {"critical_values", critical},
          {"circles", {{"pass", report.circles_pass}, {"checks", circles}}},
          {"chain", {{"pass", report.chain_pass}}},
          {"pass", report.pass()}},
         output);
    if (!report.pass()) {
      std::cerr << "error: StructureUnverified: at least one check failed\n";
      return 2;
    }
  } else if (hdim->parsed()) {
    const auto p = hdim_args.params();
    const auto r = annulus_radii(p, hdim_args.alpha);
    const auto [radial, angular] = parse_grid(hdim_grid);
    const auto env = branch_envelopes(p, r, {radial, angular});
    const auto bracket = hdim_bracket(env);
    json list = json::array();
    for (const auto& e : env) {
      list.push_back({{"group", e.group},
                      {"min_abs_deriv", e.min_abs_deriv},
                      {"max_abs_deriv", e.max_abs_deriv},
                      {"sampled_min", e.sampled_min},
                      {"sampled_max", e.sampled_max},
                      {"multiplicity", e.multiplicity},
                      {"grid", {e.grid.radial, e.grid.angular}}});
    }
    emit({{"rho", p.rho},
          {"degrees", p.degrees},
          {"tau", p.tau},
          {"beta_lower", bracket.lower},
          {"beta_upper", bracket.upper},
          {"conformal_dim", conformal_dimension(p.degrees)},
          {"method", method_name(bracket.method)},
          {"rigorous", false},
          {"envelopes", list}},
         output);
  } else if (boxcount->parsed()) {
    const auto mask = read_pgm(box_input);
    const auto sizes = box_sizes.empty() ? default_box_sizes(mask.width, mask.height)
                                         : parse_list<std::size_t>(box_sizes, "box sizes");
    const auto fit = box_counting_dimension(mask, pixel_scale, sizes);
    emit({{"slope", fit.slope},
          {"standard_error", fit.standard_error},
          {"lower", fit.bounds.lower},
          {"upper", fit.bounds.upper},
          {"method", method_name(fit.bounds.method)},
          {"box_sizes", fit.box_sizes},
          {"counts", fit.counts}},
         output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
    return is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return 2;
  }
}
