// affine-lab: exact counting experiments on lines, incidences and
// sum-product sets.
//
// Exit status: 0 when every check in the report passes, 1 when a check
// fails, 2 on bad usage or invalid input.

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "affine_lab/energy.hpp"
#include "affine_lab/expanders.hpp"
#include "affine_lab/experiments.hpp"
#include "affine_lab/families.hpp"
#include "affine_lab/generators.hpp"
#include "affine_lab/incidence.hpp"
#include "affine_lab/json_io.hpp"
#include "affine_lab/projective.hpp"
#include "affine_lab/reference.hpp"

namespace al = affine_lab;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out = "json";
  std::uint64_t seed = 0;
  std::size_t cap_naive = al::kDefaultNaiveCap;
  int precision = al::kDefaultSignificantDigits;
  int threads = 0;
  bool timing = false;
  std::string window_policy = "warn";

  al::CheckOptions check_options() const {
    al::CheckOptions o;
    o.digits = precision;
    o.naive_cap = cap_naive;
    o.window_policy = al::parse_window_policy(window_policy);
    return o;
  }
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// A JSON argument: inline text starting with '[' or '{', else a file path.
al::Json json_arg(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) {
    try {
      return al::Json::parse(t);
    } catch (const al::Json::parse_error& e) {
      throw std::invalid_argument(std::string("inline JSON: ") + e.what());
    }
  }
  return al::read_json_file(t);
}

// Sets: a JSON array (inline or file), a generator descriptor such as
// ap:1:1:8, gp:1:2:5 or rand:7:100:5, or a comma list like 1,2,5/2.
al::ScalarSet set_arg(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty set argument");
  if (t.front() == '[' || std::filesystem::is_regular_file(t)) return al::scalar_set_from_json(json_arg(t));
  if (t.find(':') != std::string::npos) return al::generate(al::parse_gen_descriptor(t));
  std::vector<al::Rational> values;
  std::stringstream ss(t);
  for (std::string item; std::getline(ss, item, ',');) values.push_back(al::Rational::parse(item));
  return al::make_set(std::move(values));
}

al::PointSet points_arg(const std::string& points, const std::string& grid_a, const std::string& grid_b) {
  if (!points.empty()) {
    if (!grid_a.empty() || !grid_b.empty()) throw UsageError("give either --points or --grid-a/--grid-b");
    return al::point_set_from_json(json_arg(points));
  }
  if (grid_a.empty() || grid_b.empty()) throw UsageError("a point set needs --points or both --grid-a and --grid-b");
  return al::PointSet::grid(set_arg(grid_a), set_arg(grid_b));
}

// Lines: "inf", "x=r", "y=r", "a,b,c" for ax + by + c = 0, or JSON
// {m,c} / {a,b,c}.
al::PlanarLine line_arg(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf") return al::PlanarLine::at_infinity();
  if (t.starts_with("x=")) return al::PlanarLine::vertical(al::Rational::parse(t.substr(2)));
  if (t.starts_with("y=")) return al::PlanarLine::horizontal(al::Rational::parse(t.substr(2)));
  if (!t.empty() && t.front() != '{' && std::count(t.begin(), t.end(), ',') == 2) {
    std::vector<al::Rational> coef;
    std::stringstream ss(t);
    for (std::string item; std::getline(ss, item, ',');) coef.push_back(al::Rational::parse(item));
    return al::PlanarLine::from_rationals(coef[0], coef[1], coef[2]);
  }
  const al::Json j = json_arg(t);
  if (j.contains("m")) return al::to_planar(al::aff_line_from_json(j));
  return al::planar_line_from_json(j);
}

// Line lists may mix {"m","c"} and {"a","b","c"} entries.
std::vector<al::PlanarLine> planar_lines_arg(const std::string& text) {
  const al::Json j = json_arg(text);
  const al::Json& arr = j.is_object() && j.contains("lines") ? j.at("lines") : j;
  if (!arr.is_array()) throw std::invalid_argument("lines must be a JSON array");
  std::vector<al::PlanarLine> out;
  for (const auto& e : arr) out.push_back(e.contains("m") ? al::to_planar(al::aff_line_from_json(e)) : al::planar_line_from_json(e));
  return out;
}

void emit(const al::ExperimentReport& report, const Globals& g) {
  if (g.out == "csv") {
    std::cout << report.to_csv();
  } else {
    std::cout << report.to_json().dump(2) << '\n';
  }
}

int finish(const al::ExperimentReport& report, const Globals& g) {
  emit(report, g);
  return report.passed() ? 0 : kExitCheckFailed;
}

al::ExperimentReport simple_report(std::string name) {
  al::ExperimentReport r;
  r.experiment = std::move(name);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on affine line energy, incidences and sum-product sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for rand sets without an explicit seed and for sweeps");
  app.add_option("--cap-naive", g.cap_naive, "Largest line set handed to the quadruple-by-quadruple energy");
  app.add_option("--precision", g.precision, "Significant digits of decimal bound values")
      ->check(CLI::Range(1, al::kMaxSignificantDigits));
  app.add_option("--threads", g.threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", g.timing, "Record runtime_ms in sweeps");
  app.add_option("--window-policy", g.window_policy, "Instances outside a size window: warn or error")
      ->check(CLI::IsMember({"warn", "error"}));

  // Shared argument holders.
  std::string a_arg, b_arg, c_arg, d_arg, lambda_arg = "1", mu_arg = "1";
  std::string points_text, grid_a, grid_b, lines_text;

  auto add_points = [&](CLI::App* sub) {
    sub->add_option("--points", points_text, "Point set: JSON array of {x,y} (inline or file)");
    sub->add_option("--grid-a", grid_a, "x-coordinates of a grid point set");
    sub->add_option("--grid-b", grid_b, "y-coordinates of a grid point set");
  };
  auto add_cd = [&](CLI::App* sub) {
    sub->add_option("--c", c_arg, "Set C")->required();
    sub->add_option("--d", d_arg, "Set D")->required();
    sub->add_option("--lambda", lambda_arg, "lambda")->capture_default_str();
    sub->add_option("--mu", mu_arg, "mu")->capture_default_str();
  };

  // sets gen
  auto* sets = app.add_subcommand("sets", "Scalar set tools");
  sets->require_subcommand(1);
  auto* gen = sets->add_subcommand("gen", "Generate a set as a JSON array of rational strings");
  std::string gen_kind = "ap", gen_start = "1", gen_step = "1", gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_range = 100;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("--kind", gen_kind, "ap, gp or random_int")->check(CLI::IsMember({"ap", "gp", "random_int", "rand"}));
  gen->add_option("--start", gen_start, "First term");
  gen->add_option("--step", gen_step, "Common difference (ap) or ratio (gp)");
  gen->add_option("--ratio", gen_step, "Alias of --step for gp");
  gen->add_option("--n", gen_n, "Number of elements")->required();
  gen->add_option("--range", gen_range, "random_int draws from [1, range]");
  gen->add_option("--seed", gen_seed, "Seed for random_int (defaults to the global --seed)");
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  auto* family = app.add_subcommand("family", "Build a line family and its collision report");
  std::string family_kind;
  family->add_option("--kind", family_kind, "grid_cd, grid_c_cd, thm2, thm3, diff, elekes or spanned")->required();
  family->add_option("--c", c_arg, "Set C");
  family->add_option("--d", d_arg, "Set D");
  family->add_option("--lambda", lambda_arg, "lambda")->capture_default_str();
  family->add_option("--mu", mu_arg, "mu")->capture_default_str();
  add_points(family);

  auto* energy_cmd = app.add_subcommand("energy", "Energy of a set of lines");
  bool naive = false;
  energy_cmd->add_option("--lines", lines_text, "JSON array of {m,c}")->required();
  energy_cmd->add_flag("--naive", naive, "Also count quadruples one by one and compare");

  auto* additive = app.add_subcommand("energy-additive", "Additive energy of A");
  additive->add_option("--a", a_arg, "Set A")->required();

  auto* mult = app.add_subcommand("energy-mult", "k-th multiplicative energy of A");
  unsigned mult_k = 2;
  mult->add_option("--a", a_arg, "Set A")->required();
  mult->add_option("--k", mult_k, "Power k >= 2")->capture_default_str();

  auto* ratio = app.add_subcommand("energy-ratio", "Difference-ratio count of A, both conventions");
  ratio->add_option("--a", a_arg, "Set A")->required();

  auto* product_grid = app.add_subcommand("check-product-grid", "Energy of {(a,b)} against E4*(A) and the ratio count");
  product_grid->add_option("--a", a_arg, "Set A (0 not allowed)")->required();

  auto* incidence = app.add_subcommand("incidence", "Count point-line incidences");
  add_points(incidence);
  incidence->add_option("--lines", lines_text, "JSON array of {m,c} or {a,b,c}")->required();

  auto* profile_cmd = app.add_subcommand("profile", "Lines spanned by a point set, with multiplicities");
  add_points(profile_cmd);

  auto* rich = app.add_subcommand("rich", "Lines with at least k points");
  std::size_t rich_k = 2;
  add_points(rich);
  rich->add_option("--k", rich_k, "Richness k >= 2")->required();

  auto* dirs = app.add_subcommand("directions", "Directions spanned by a point set");
  add_points(dirs);

  auto* trace = app.add_subcommand("trace", "Intersections of spanned lines with a fixed line");
  std::string line_text;
  add_points(trace);
  trace->add_option("--line", line_text, "inf, x=r, y=r, a,b,c or JSON")->required();

  auto* expander = app.add_subcommand("expander", "Sum-product set sizes");
  std::string expander_kind;
  bool list_set = false;
  expander->add_option("--kind", expander_kind, "q, s14, aa-plus-a, a-sum4 or aaa")
      ->required()
      ->check(CLI::IsMember({"q", "s14", "aa-plus-a", "a-sum4", "aaa"}));
  expander->add_option("--a", a_arg, "Set A")->required();
  expander->add_option("--b", b_arg, "Optional set B for |AB|");
  expander->add_flag("--list", list_set, "Include the elements of the set");

  auto* project = app.add_subcommand("project", "Apply a projective transformation");
  std::string matrix_text;
  project->add_option("--matrix", matrix_text, "3x3 JSON array of rational strings")->required();
  add_points(project);
  project->add_option("--lines", lines_text, "Optional lines; incidences are compared before and after");

  auto* thm2 = app.add_subcommand("check-thm2", "Energy of the lines (lambda/(c-d), mu c/(c-d))");
  add_cd(thm2);
  auto* thm3 = app.add_subcommand("check-thm3", "Energy of the lines (d(c-lambda)-mu, c)");
  add_cd(thm3);
  auto* diag = app.add_subcommand("diag-thm3", "Rich-ratio profile n(alpha) and its sum of squares");
  add_cd(diag);

  auto* thm1 = app.add_subcommand("check-thm1", "Incidences of a grid A x B with non-axis lines");
  bool elekes = false;
  thm1->add_option("--a", a_arg, "Set A")->required();
  thm1->add_option("--b", b_arg, "Set B")->required();
  thm1->add_option("--lines", lines_text, "JSON array of {m,c}");
  thm1->add_flag("--elekes", elekes, "Use P = (A+A) x (AB) and the lines y = c(x - d), c in B, d in A");

  auto* conj2 = app.add_subcommand("check-conj2", "Traces of a point set on two lines");
  std::string line1_text, line2_text;
  add_points(conj2);
  conj2->add_option("--line1", line1_text, "First line")->required();
  conj2->add_option("--line2", line2_text, "Second line")->required();

  auto* sweep = app.add_subcommand("sweep", "Measure a quantity over growing sets and fit an exponent");
  std::string sweep_kind = "thm2", sweep_set = "ap", sweep_start = "1", sweep_step = "1";
  std::vector<std::size_t> sweep_sizes;
  std::uint64_t sweep_range = 0;
  std::string expect_min, expect_max;
  sweep->add_option("--kind", sweep_kind, "thm2, thm3, q, s14, aa-plus-a, a-sum4 or aaa")->capture_default_str();
  sweep->add_option("--sizes", sweep_sizes, "Set sizes, e.g. 4,8,16,32")->required()->delimiter(',');
  sweep->add_option("--set", sweep_set, "ap, gp or random_int")->check(CLI::IsMember({"ap", "gp", "random_int", "rand"}));
  sweep->add_option("--start", sweep_start, "First term of ap/gp");
  sweep->add_option("--step", sweep_step, "Difference (ap) or ratio (gp)");
  sweep->add_option("--range", sweep_range, "random_int range (0 means 4n^2)");
  sweep->add_option("--lambda", lambda_arg, "lambda for energy sweeps")->capture_default_str();
  sweep->add_option("--mu", mu_arg, "mu for energy sweeps")->capture_default_str();
  sweep->add_option("--expect-min", expect_min, "Fail unless the fitted exponent is at least this");
  sweep->add_option("--expect-max", expect_max, "Fail unless the fitted exponent is at most this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (g.threads > 0) omp_set_num_threads(g.threads);
    const al::CheckOptions opts = g.check_options();
    const al::Rational lambda = al::Rational::parse(lambda_arg);
    const al::Rational mu = al::Rational::parse(mu_arg);

    if (*gen) {
      al::GenSpec spec;
      spec.kind = al::parse_gen_kind(gen_kind);
      spec.start = al::Rational::parse(gen_start);
      spec.step = al::Rational::parse(gen_step);
      spec.n = gen_n;
      spec.range = gen_range;
      spec.seed = gen_seed.value_or(g.seed);
      const std::string text = al::to_json(al::generate(spec)).dump() + "\n";
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(gen_out);
        if (!(f << text)) throw std::invalid_argument("cannot write " + gen_out);
      }
      return 0;
    }

    if (*family) {
      al::FamilySpec spec;
      spec.kind = al::parse_family_kind(family_kind);
      if (!c_arg.empty()) spec.c_values = set_arg(c_arg);
      if (!d_arg.empty()) spec.d_values = set_arg(d_arg);
      spec.lambda = lambda;
      spec.mu = mu;
      if (!points_text.empty() || !grid_a.empty()) spec.points = points_arg(points_text, grid_a, grid_b);
      const al::Family fam = al::build_family(spec);
      auto r = simple_report("family");
      r.instance = al::Json{{"kind", family_kind}, {"lambda", lambda.str()}, {"mu", mu.str()}};
      r.set_measured("lines", static_cast<al::Count>(fam.lines.size()));
      r.set_measured("admitted_pairs", static_cast<al::Count>(fam.report.admitted));
      r.set_measured("skipped_pairs", static_cast<al::Count>(fam.report.skipped));
      r.set_measured("collisions", static_cast<al::Count>(fam.report.collisions.size()));
      r.details["lines"] = al::to_json(std::span<const al::AffLine>(fam.lines));
      r.details["collision_report"] = al::to_json(fam.report);
      return finish(r, g);
    }

    if (*energy_cmd) {
      const al::LineSet lines = al::line_set_from_json(json_arg(lines_text));
      auto r = simple_report("energy");
      const al::Count e = al::energy(lines);
      r.set_measured("lines", static_cast<al::Count>(lines.size()));
      r.set_measured("energy", e);
      if (naive) {
        const al::Count n = al::energy_naive(lines, g.cap_naive);
        r.set_measured("energy_naive", n);
        r.add_check("energy_matches_naive", n == e);
      }
      return finish(r, g);
    }

    if (*additive) {
      auto r = simple_report("additive-energy");
      const al::ScalarSet a = set_arg(a_arg);
      r.instance = al::Json{{"A", al::to_json(a)}};
      r.set_measured("additive_energy", al::additive_energy(a));
      return finish(r, g);
    }

    if (*mult) {
      auto r = simple_report("multiplicative-energy");
      const al::ScalarSet a = set_arg(a_arg);
      r.instance = al::Json{{"A", al::to_json(a)}, {"k", mult_k}};
      r.set_measured("multiplicative_energy", al::multiplicative_energy(a, mult_k));
      return finish(r, g);
    }

    if (*ratio) {
      auto r = simple_report("difference-ratio-count");
      const al::ScalarSet a = set_arg(a_arg);
      r.instance = al::Json{{"A", al::to_json(a)}};
      r.set_measured("ratio_count", al::difference_ratio_energy(a));
      r.set_measured("cross_multiplied_ratio_count", al::difference_product_energy(a));
      return finish(r, g);
    }

    if (*product_grid) return finish(al::check_product_grid_energy(set_arg(a_arg), opts), g);

    if (*incidence) {
      const al::PointSet points = points_arg(points_text, grid_a, grid_b);
      const std::vector<al::PlanarLine> lines = planar_lines_arg(lines_text);
      auto r = simple_report("incidences");
      const al::Count count = al::count_incidences(points, lines);
      r.set_measured("points", static_cast<al::Count>(points.size()));
      r.set_measured("incidences", count);
      if (points.size() * lines.size() <= 20'000'000) {
        const al::Count direct = al::serial::count_incidences(points, std::span<const al::PlanarLine>(lines));
        r.add_check("incidences_match_pairwise", direct == count);
      }
      return finish(r, g);
    }

    if (*profile_cmd || *rich) {
      const al::PointSet points = points_arg(points_text, grid_a, grid_b);
      const al::LineProfile prof = al::line_profile(points);
      auto r = simple_report(*rich ? "rich-lines" : "line-profile");
      r.set_measured("points", static_cast<al::Count>(points.size()));
      r.set_measured("spanned_lines", static_cast<al::Count>(prof.size()));
      r.set_measured("fourth_moment", al::fourth_moment(prof));
      if (*rich) {
        const auto lines = al::rich_lines(prof, rich_k);
        r.instance["k"] = rich_k;
        r.set_measured("rich_lines", static_cast<al::Count>(lines.size()));
        r.details["lines"] = al::to_json(std::span<const al::PlanarLine>(lines));
      } else {
        r.details["lines"] = al::to_json(prof);
      }
      return finish(r, g);
    }

    if (*dirs) {
      const al::PointSet points = points_arg(points_text, grid_a, grid_b);
      const auto d = al::directions(points);
      auto r = simple_report("directions");
      r.set_measured("points", static_cast<al::Count>(points.size()));
      r.set_measured("directions", static_cast<al::Count>(d.size()));
      al::Json list = al::Json::array();
      for (const auto& dir : d) list.push_back(al::to_json(dir.point()));
      r.details["directions"] = std::move(list);
      return finish(r, g);
    }

    if (*trace) {
      const al::PointSet points = points_arg(points_text, grid_a, grid_b);
      const al::PlanarLine line = line_arg(line_text);
      const al::Trace t = al::trace_on_line(points, line);
      auto r = simple_report("trace");
      r.instance["line"] = al::to_json(line);
      r.set_measured("projective_count", static_cast<al::Count>(t.projective_count()));
      r.set_measured("affine_count", static_cast<al::Count>(t.affine_count));
      r.details["infinite"] = t.infinite;
      r.details["points"] = al::to_json(std::span<const al::ProjPoint>(t.points));
      if (t.infinite) r.warnings.push_back("the line carries two or more points: the trace is infinite");
      return finish(r, g);
    }

    if (*expander) {
      const al::ScalarSet a = set_arg(a_arg);
      al::ScalarSet out;
      if (expander_kind == "q") out = al::intercept_set(a);
      if (expander_kind == "s14") out = al::three_variable_expander(a);
      if (expander_kind == "aa-plus-a") out = al::product_plus_set(a);
      if (expander_kind == "a-sum4") out = al::fourfold_sum_product_set(a);
      if (expander_kind == "aaa") out = al::triple_product_set(a);
      std::optional<al::ScalarSet> b;
      if (!b_arg.empty()) b = set_arg(b_arg);
      const al::GrowthStats s = al::growth_stats(a, b);
      auto r = simple_report("expander");
      r.instance = al::Json{{"kind", expander_kind}, {"A", al::to_json(a)}};
      r.set_measured("a_size", static_cast<al::Count>(s.size_a));
      r.set_measured("set_size", static_cast<al::Count>(out.size()));
      r.set_measured("sumset_size", static_cast<al::Count>(s.sumset_size));
      r.set_measured("productset_size", static_cast<al::Count>(s.productset_size));
      if (s.cross_product_size) r.set_measured("cross_product_size", static_cast<al::Count>(*s.cross_product_size));
      r.details["doubling"] = s.doubling.str();
      if (s.multiplicative_ratio) r.details["multiplicative_ratio"] = s.multiplicative_ratio->str();
      if (list_set) r.details["set"] = al::to_json(out);
      return finish(r, g);
    }

    if (*project) {
      const al::ProjTransform t(al::matrix_from_json(json_arg(matrix_text)));
      const al::PointSet points = points_arg(points_text, grid_a, grid_b);
      const std::vector<al::ProjPoint> images = t.apply(points);
      auto r = simple_report("projective-image");
      r.instance["matrix"] = al::to_json(t.matrix());
      r.set_measured("points", static_cast<al::Count>(points.size()));
      r.set_measured("at_infinity", static_cast<al::Count>(
                                        std::count_if(images.begin(), images.end(), [](const al::ProjPoint& p) { return p.at_infinity(); })));
      r.details["images"] = al::to_json(std::span<const al::ProjPoint>(images));
      if (!lines_text.empty()) {
        const std::vector<al::PlanarLine> lines = planar_lines_arg(lines_text);
        std::vector<al::ProjPoint> originals;
        for (const auto& p : points.points()) originals.push_back(al::ProjPoint::from_affine(p));
        std::vector<al::PlanarLine> mapped;
        for (const auto& l : lines) mapped.push_back(t.apply(l));
        const al::Count before = al::count_incidences_projective(originals, lines);
        const al::Count after = al::count_incidences_projective(images, mapped);
        r.set_measured("incidences_before", before);
        r.set_measured("incidences_after", after);
        r.details["mapped_lines"] = al::to_json(std::span<const al::PlanarLine>(mapped));
        r.add_check("incidences_preserved", before == after);
      }
      return finish(r, g);
    }

    if (*thm2) return finish(al::check_reciprocal_difference_energy(set_arg(c_arg), set_arg(d_arg), lambda, mu, opts), g);
    if (*thm3) return finish(al::check_shifted_product_energy(set_arg(c_arg), set_arg(d_arg), lambda, mu, opts), g);
    if (*diag) return finish(al::diag_rich_ratios(set_arg(c_arg), set_arg(d_arg), lambda, mu, opts), g);

    if (*thm1) {
      if (elekes) {
        if (!lines_text.empty()) throw UsageError("--elekes builds its own lines; drop --lines");
        return finish(al::check_sum_product_incidences(set_arg(a_arg), set_arg(b_arg), opts), g);
      }
      if (lines_text.empty()) throw UsageError("check-thm1 needs --lines or --elekes");
      return finish(al::check_grid_incidences(set_arg(a_arg), set_arg(b_arg), al::line_set_from_json(json_arg(lines_text)), opts),
                    g);
    }

    if (*conj2) {
      return finish(al::check_two_line_traces(points_arg(points_text, grid_a, grid_b), line_arg(line1_text),
                                              line_arg(line2_text), opts),
                    g);
    }

    if (*sweep) {
      al::SweepSpec spec;
      spec.kind = al::parse_sweep_kind(sweep_kind);
      spec.sizes = sweep_sizes;
      spec.set.kind = al::parse_gen_kind(sweep_set);
      spec.set.start = al::Rational::parse(sweep_start);
      spec.set.step = al::Rational::parse(sweep_step);
      spec.set.seed = g.seed;
      spec.set.range = sweep_range;
      spec.lambda = lambda;
      spec.mu = mu;
      spec.timing = g.timing;
      if (!expect_min.empty()) spec.expect_min = al::Rational::parse(expect_min);
      if (!expect_max.empty()) spec.expect_max = al::Rational::parse(expect_max);
      spec.options = opts;
      const al::SweepResult result = al::run_sweep(spec);
      if (g.out == "csv") {
        std::cout << result.to_csv();
      } else {
        std::cout << result.report.to_json().dump(2) << '\n';
      }
      return result.report.passed() ? 0 : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "affine-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "affine-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "affine-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "affine-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "affine-lab: internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
