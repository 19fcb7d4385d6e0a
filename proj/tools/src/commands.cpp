#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <regex>

#include "exsym/exsym.hpp"
#include "exsym/io/cli.hpp"
#include "exsym/io/document.hpp"
#include "exsym/io/report_json.hpp"

namespace exsym::cli {

using nlohmann::json;

namespace {

struct Common {
  bool json_out = false;
  bool use_float = false;
  double tolerance = kDefaultTolerance;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json_out, "Machine-readable JSON report");
  cmd->add_flag("--float", c.use_float, "Floating-point backend instead of exact rationals");
  cmd->add_option("--tolerance", c.tolerance, "Zero/rank threshold for the float backend")->check(CLI::PositiveNumber);
}

void emit(std::ostream& out, const json& report, bool as_json) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    out << io::to_text(report);
  }
}

Vec<Rational> parse_vector(const std::string& text) {
  Vec<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    v.push_back(parse_rational(item));
  }
  return v;
}

// ---- validate

template <class T>
int validate_impl(const ExtrinsicTriple<T>& t, json& report) {
  const ValidationReport r = validate_triple(t);
  report = io::to_json(r);
  report["name"] = t.name();
  report["backend"] = Field<T>::name;
  return r.ok() ? kPass : kFail;
}

void print_validation_text(std::ostream& out, const json& report) {
  out << "triple: " << report["name"].get<std::string>() << " (" << report["backend"].get<std::string>() << ")\n";
  for (const auto& c : report["checks"]) {
    out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (!c["passed"].get<bool>()) out << " at " << c["witness"].dump() << ": " << c["detail"].get<std::string>();
    out << "\n";
  }
  out << (report["ok"].get<bool>() ? "all axioms hold\n" : "axiom violations found\n");
}

// ---- analyze

struct AnalyzeFlags {
  bool weak = false;
  bool skip_decompose = false;
  bool timings = false;
  std::uint64_t seed = DecomposeOptions{}.seed;
};

class Stopwatch {
 public:
  explicit Stopwatch(json* sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    if (sink_) (*sink_)[name] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }

 private:
  json* sink_;
  std::chrono::steady_clock::time_point start_;
};

template <class T>
int analyze_impl(const ExtrinsicTriple<T>& t, const io::TripleDocument& doc, const AnalyzeFlags& flags, json& rep) {
  json timings;
  Stopwatch watch(flags.timings ? &timings : nullptr);
  int status = kPass;
  rep["name"] = t.name();
  rep["backend"] = Field<T>::name;
  rep["dim"] = t.dim();
  rep["weak"] = t.weak();

  const ValidationReport axioms = validate_triple(t);
  rep["axioms"] = io::to_json(axioms);
  watch.lap("validate_ms");
  if (!axioms.ok()) return kFail;

  const auto& g = t.grading();
  json dims;
  for (Part p : kAllParts) dims[std::string(part_name(p))] = g[p].dim();
  rep["grading_dims"] = dims;
  rep["full"] = is_full(t);

  const Subspace<T> radical = metric_radical(t);
  rep["metric_radical_dim"] = radical.dim();
  if (radical.dim() > 0) {
    const auto q = quotient_triple(t);
    rep["quotient"] = {{"dim", q.dim()}, {"valid", validate_triple(q).ok()}};
  }
  watch.lap("grading_ms");

  const bool semisimple = is_semisimple(t.alg());
  rep["semisimple"] = semisimple;
  rep["killing_determinant"] = io::scalar_json(determinant(killing_form(t.alg())));

  const ShapeReport<T> shape = analyze_shape(t);
  rep["n"] = shape.n;
  rep["h"] = io::vector_json(shape.h);
  rep["a_h"] = io::matrix_json(shape.a_h);
  rep["a_h_squared"] = io::matrix_json(Matrix<T>(shape.a_h * shape.a_h));
  rep["tri_class"] = std::string(tri_class_name(shape.tri_class));
  rep["shape_invariants"] = io::to_json(shape.invariants);
  if (!shape.invariants.ok()) status = kFail;

  const ValidationReport lemma1 = verify_lemma1(t);
  rep["lemma1"] = io::to_json(lemma1);
  if (radical.dim() == 0 && !lemma1.ok()) status = kFail;
  watch.lap("shape_ms");

  bool single_block = true;
  if (!flags.skip_decompose) {
    DecomposeOptions opt;
    opt.seed = flags.seed;
    const Decomposition<T> d = decompose(t, opt);
    json blocks = json::array();
    for (const auto& b : d.blocks) {
      json jb = {{"dim", b.dim()}};
      try {
        jb["tri_class"] = std::string(tri_class_name(classify(b)));
      } catch (const Error& e) {
        jb["tri_class"] = std::string("unavailable: ") + e.what();
      }
      blocks.push_back(std::move(jb));
    }
    rep["decompose"] = {{"blocks", std::move(blocks)}, {"seed", d.seed}, {"trials_used", d.trials_used}};
    single_block = d.blocks.size() == 1;
    watch.lap("decompose_ms");
  }
  rep["single_block"] = single_block;
  if (doc.assert_indecomposable && !single_block) {
    rep["assert_indecomposable"] = "violated: decompose found a splitting";
    status = kFail;
  }
  if (single_block && shape.tri_class == TriClass::Mixed) status = kFail;

  const Theorem1Report<T> th = verify_theorem1(t);
  rep["theorem1"] = {{"semisimple", th.semisimple},
                     {"a_h_squared_nonzero", th.a_h_squared_nonzero},
                     {"consistent", th.consistent},
                     {"applicable", single_block}};
  if (single_block && !th.consistent) status = kFail;

  if (semisimple && single_block) {
    const Prop1Report<T> p = verify_prop1(t);
    json jp = {{"status", std::string(prop1_status_name(p.status))},
               {"xi", io::vector_json(p.xi)},
               {"fit_residual", p.fit_residual}};
    if (p.mu) jp["mu"] = io::scalar_json(*p.mu);
    if (p.lambda) jp["lambda"] = io::scalar_json(*p.lambda);
    if (p.mu) {
      jp["h_residual"] = p.h_residual;
      jp["a_h_residual"] = p.a_h_residual;
    }
    rep["prop1"] = std::move(jp);
    if (p.status == Prop1Status::Failed) status = kFail;
  } else {
    rep["prop1"] = {{"status", "not applicable"}};
  }
  watch.lap("theorems_ms");

  if (doc.quad) {
    const auto q = quad_grading_from_indices<T>(t.dim(), doc.quad->lstar, doc.quad->a, doc.quad->l);
    const ValidationReport qr = check_quadratic_extension(t, q);
    rep["quadratic_extension"] = io::to_json(qr);
    if (!qr.ok()) status = kFail;
  }
  if (flags.timings) rep["timings"] = timings;
  return status;
}

// ---- orbit

json orbit_report(const ExtrinsicTriple<Rational>& t, const Vec<Rational>& x, std::size_t count, double t_max) {
  const OrbitChart chart = make_orbit_chart(t, x);
  json basis = json::array();
  for (Eigen::Index c = 0; c < chart.basis.cols(); ++c) basis.push_back(io::eigen_json(Eigen::VectorXd(chart.basis.col(c))));
  json points = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const double s = count > 1 ? t_max * static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
    points.push_back({{"t", s}, {"coords", io::eigen_json(chart.point(s))}, {"point", io::eigen_json(chart.point_in_g(s))}});
  }
  return {{"name", t.name()}, {"x", io::vector_json(x)}, {"normal_dim", chart.normal_dim},
          {"gminus_basis", std::move(basis)}, {"points", std::move(points)}};
}

// ---- export

ExtrinsicTriple<Rational> gallery_triple(const std::string& name, const std::optional<Rational>& scale,
                                         std::optional<io::QuadIndices>& quad) {
  std::smatch m;
  if (std::regex_match(name, m, std::regex(R"(sphere\((\d+)\))"))) return sphere_triple(std::stoul(m[1].str()), scale);
  if (name == "sl2") return sl2_triple(scale);
  if (name == "cotangent_so3") {
    quad = io::QuadIndices{{3, 4, 5}, {}, {0, 1, 2}};
    return cotangent_so3_triple();
  }
  if (std::regex_match(name, m, std::regex(R"(flat\((\d+)\))"))) return flat_triple(std::stoul(m[1].str()));
  throw Error(ErrorKind::Parse, "unknown gallery instance '" + name + "' (sphere(n), sl2, cotangent_so3, flat(k))");
}

void write_document(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    io::save_json(doc, path);
  }
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::DimensionMismatch:
      return kParseError;
    default:
      return kFail;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exsym: metric Lie algebras, extrinsic symmetric triples and their shape operators", "exsym"};
  app.require_subcommand(1);

  Common common;
  std::string path;

  auto* validate = app.add_subcommand("validate", "Check the triple axioms of a document");
  validate->add_option("path", path, "Triple document (JSON)")->required();
  add_common(validate, common);

  AnalyzeFlags aflags;
  auto* analyze = app.add_subcommand("analyze", "Grading, shape invariants, classification and theorem checks");
  analyze->add_option("path", path, "Triple document (JSON)")->required();
  add_common(analyze, common);
  analyze->add_flag("--weak", aflags.weak, "Treat the document as a weak triple (degenerate metric allowed)");
  analyze->add_flag("--skip-decompose", aflags.skip_decompose, "Assume the triple is a single block");
  analyze->add_flag("--timings", aflags.timings, "Include per-stage timings (makes output non-deterministic)");
  analyze->add_option("--seed", aflags.seed, "Seed for the decomposition heuristic");

  auto* classify_cmd = app.add_subcommand("classify", "Print the type of A_h");
  classify_cmd->add_option("path", path, "Triple document (JSON)")->required();
  add_common(classify_cmd, common);

  std::string target;
  double grid = 0.0, step = 0.0;
  bool finite_difference = false;
  auto* immersion = app.add_subcommand("immersion", "Numerical extrinsic geometry of a built-in or polynomial immersion");
  immersion->add_option("target", target, "Built-in name (E1+, E1-, E2, E3+, E3-, perturbed_E1, sphere(n), circle_orbit) or document")
      ->required();
  immersion->add_flag("--json", common.json_out, "Machine-readable JSON report");
  immersion->add_option("--grid", grid, "Scale of the {-1,0,1}^n sample grid")->check(CLI::PositiveNumber);
  immersion->add_option("--step", step, "Finite-difference step")->check(CLI::PositiveNumber);
  immersion->add_flag("--finite-difference", finite_difference, "Ignore closed-form derivatives");

  std::string x_text;
  std::size_t count = 16;
  double t_max = 2.0 * std::numbers::pi;
  auto* orbit = app.add_subcommand("orbit", "Points exp(phi(tX)) 0 of the orbit through 0");
  orbit->add_option("path", path, "Triple document (JSON)")->required();
  orbit->add_option("--x", x_text, "X in g_+^- as comma-separated rationals")->required();
  orbit->add_option("--count", count, "Number of points")->check(CLI::PositiveNumber);
  orbit->add_option("--t-max", t_max, "Largest parameter value");
  orbit->add_flag("--json", common.json_out, "Machine-readable JSON report");

  std::string dims_text = "1,2,1", output;
  SearchOptions sopt;
  bool allow_decomposable = false;
  auto* search = app.add_subcommand("search", "Random search for a non-semisimple triple of quadratic-extension shape");
  search->add_option("--dims", dims_text, "dim l*, dim a, dim l");
  search->add_option("--budget", sopt.budget, "Number of attempts");
  search->add_option("--seed", sopt.seed, "PRNG seed");
  search->add_flag("--nonzero-a-h", sopt.require_nonzero_a_h, "Require A_h != 0");
  search->add_flag("--allow-decomposable", allow_decomposable, "Accept instances that split into blocks");
  search->add_option("-o,--output", output, "Write the document here instead of standard output");

  std::string gallery_name, scale_text;
  auto* exp = app.add_subcommand("export", "Write a gallery instance as a document");
  exp->add_option("name", gallery_name, "sphere(n), sl2, cotangent_so3 or flat(k)")->required();
  exp->add_option("--gram-scale", scale_text, "Multiple of the Killing form used as metric (p/q)");
  exp->add_option("-o,--output", output, "Write the document here instead of standard output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (validate->parsed()) {
      const auto doc = io::load_triple_document(path);
      json rep;
      const int code = common.use_float ? validate_impl(to_float(doc.triple, common.tolerance), rep)
                                        : validate_impl(doc.triple, rep);
      if (common.json_out) {
        out << rep.dump(2) << "\n";
      } else {
        print_validation_text(out, rep);
      }
      return code;
    }
    if (analyze->parsed()) {
      auto doc = io::load_triple_document(path);
      if (aflags.weak) {
        const auto& t = doc.triple;
        doc.triple = ExtrinsicTriple<Rational>(t.alg(), t.theta(), t.dmat(), true, t.name());
      }
      json rep;
      const int code = common.use_float ? analyze_impl(to_float(doc.triple, common.tolerance), doc, aflags, rep)
                                        : analyze_impl(doc.triple, doc, aflags, rep);
      emit(out, rep, common.json_out);
      return code;
    }
    if (classify_cmd->parsed()) {
      const auto doc = io::load_triple_document(path);
      json rep;
      int code = 0;
      auto run_classify = [&](const auto& t) {
        code = validate_impl(t, rep);
        if (code != kPass) return;
        rep = {{"name", t.name()}, {"tri_class", std::string(tri_class_name(classify(t)))}};
      };
      if (common.use_float) {
        run_classify(to_float(doc.triple, common.tolerance));
      } else {
        run_classify(doc.triple);
      }
      if (code != kPass) {
        print_validation_text(err, rep);
        return code;
      }
      if (common.json_out) {
        out << rep.dump(2) << "\n";
      } else {
        out << rep["tri_class"].get<std::string>() << "\n";
      }
      return kPass;
    }
    if (immersion->parsed()) {
      Immersion imm;
      if (std::filesystem::exists(target)) {
        imm = io::load_immersion_document(target);
      } else {
        try {
          imm = builtin(target);
        } catch (const Error& e) {
          throw Error(ErrorKind::Parse, e.what());
        }
      }
      if (step > 0.0) imm.diff.step = step;
      if (finite_difference) imm.diff.use_closed_form = false;
      if (grid > 0.0) {
        imm.grid_scale = grid;
        imm.grid = sample_grid(imm.domain_dim, grid);
      }
      const SurveyReport r = survey(imm);
      if (common.json_out) {
        out << io::to_json(r).dump(2) << "\n";
      } else {
        out << "immersion: " << r.name << "\n"
            << "derivatives: " << (r.closed_form ? "closed form" : "central differences, step " + std::to_string(r.step))
            << "\n"
            << "grid: {-1,0,1}^" << imm.domain_dim << " x " << r.grid_scale << " (" << r.samples.size() << " points)\n"
            << "max |nabla alpha|: " << r.max_nabla_alpha << "\n"
            << "max |h|: " << r.max_abs_h << "\n"
            << "max |A_h|: " << r.max_abs_a_h << "\n"
            << "max |A_h^2|: " << r.max_abs_a_h_squared << "\n";
        const Eigen::IOFormat fmt(Eigen::StreamPrecision, Eigen::DontAlignCols, ", ", "; ", "", "", "[", "]");
        for (const auto& s : r.samples) {
          out << "  p = " << s.point.transpose().format(fmt) << "  h = " << s.h.transpose().format(fmt)
              << "  A_h = " << s.a_h.format(fmt) << "  A_h^2 = " << s.a_h_squared.format(fmt) << "\n";
        }
      }
      return kPass;
    }
    if (orbit->parsed()) {
      const auto doc = io::load_triple_document(path);
      const Vec<Rational> x = parse_vector(x_text);
      require_dim(x.size(), doc.triple.dim(), "--x");
      const json rep = orbit_report(doc.triple, x, count, t_max);
      if (common.json_out) {
        out << rep.dump(2) << "\n";
      } else {
        out << "# t, then coordinates in the g_- basis (normal part first, " << rep["normal_dim"] << " entries)\n";
        out << "# g_- basis: " << rep["gminus_basis"].dump() << "\n";
        for (const auto& p : rep["points"]) {
          out << p["t"].get<double>();
          for (const auto& c : p["coords"]) out << " " << c.get<double>();
          out << "\n";
        }
      }
      return kPass;
    }
    if (search->parsed()) {
      const Vec<Rational> d = parse_vector(dims_text);
      if (d.size() != 3) throw Error(ErrorKind::Parse, "--dims expects three integers");
      for (std::size_t i = 0; i < 3; ++i) {
        if (d[i].get_den() != 1 || sgn(d[i]) < 0) throw Error(ErrorKind::Parse, "--dims expects non-negative integers");
        sopt.dims[i] = d[i].get_num().get_ui();
      }
      sopt.require_single_block = !allow_decomposable;
      err << "seed: " << sopt.seed << "\n";
      const auto r = search_nilpotent_instance(sopt);
      if (!r) {
        err << "no instance found within a budget of " << sopt.budget << " attempts\n";
        return kFail;
      }
      err << "attempts: " << r->attempts << "\n";
      auto doc = io::make_document(r->triple, io::QuadIndices{r->lstar, r->a, r->l});
      doc.assert_indecomposable = !allow_decomposable;
      write_document(io::to_json(doc), output, out);
      return kPass;
    }
    if (exp->parsed()) {
      std::optional<Rational> scale;
      if (!scale_text.empty()) scale = parse_rational(scale_text);
      std::optional<io::QuadIndices> quad;
      const auto t = gallery_triple(gallery_name, scale, quad);
      write_document(io::to_json(io::make_document(t, quad)), output, out);
      return kPass;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return kParseError;
}

}  // namespace exsym::cli
