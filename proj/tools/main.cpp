#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "takagi/config.hpp"
#include "takagi/counting.hpp"
#include "takagi/csv.hpp"
#include "takagi/dimension.hpp"
#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/oracle.hpp"
#include "takagi/parallel.hpp"
#include "takagi/svg_render.hpp"
#include "takagi/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  unsigned workers = takagi::default_workers();
  std::size_t mem_cap = std::size_t(1) << 26;
  std::uint64_t seed = 1;
  takagi::SequenceSpec spec;

  CLI::Option* opt_base = nullptr;
  CLI::Option* opt_kind = nullptr;
  CLI::Option* opt_a = nullptr;
  CLI::Option* opt_signs = nullptr;
  CLI::Option* opt_head = nullptr;
  CLI::Option* opt_tail = nullptr;

  takagi::CoefficientSequence resolve_sequence() const {
    takagi::SequenceSpec resolved = spec;
    if (!config_path.empty()) {
      takagi::SequenceSpec from_file = takagi::load_sequence_file(config_path);
      // flags override the file
      if (!opt_base->count()) resolved.base = from_file.base;
      if (!opt_kind->count()) resolved.kind = from_file.kind;
      if (!opt_a->count()) resolved.a = from_file.a;
      if (!opt_signs->count()) resolved.signs = from_file.signs;
      if (!opt_head->count()) resolved.head = from_file.head;
      if (!opt_tail->count()) resolved.tail_ratio = from_file.tail_ratio;
    }
    return takagi::make_sequence(resolved);
  }

  takagi::BuildLimits limits() const { return takagi::BuildLimits{mem_cap}; }

  // returns a stream to <out>/<name> when --out was given, else stdout
  std::unique_ptr<std::ostream> open_output(const std::string& name, bool* to_file) const {
    if (out_dir.empty()) {
      *to_file = false;
      return nullptr;
    }
    fs::create_directories(out_dir);
    auto os = std::make_unique<std::ofstream>(fs::path(out_dir) / name, std::ios::binary);
    if (!*os) throw takagi::Error(takagi::ExitCode::resource, "cannot write to " + out_dir);
    *to_file = true;
    return os;
  }
};

void attach_common(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--config", args.config_path, "sequence config file (key = value lines)");
  cmd.add_option("--out", args.out_dir, "output directory (default: primary CSV to stdout)");
  cmd.add_option("--workers", args.workers, "worker threads for counting scans");
  cmd.add_option("--mem-cap", args.mem_cap, "grid/cell cap for partial-sum builds");
  cmd.add_option("--seed", args.seed, "seed for any sampled quantity");
  args.opt_base = cmd.add_option("--base,--b,-b", args.spec.base, "dilation base b >= 2");
  args.opt_kind =
      cmd.add_option("--kind", args.spec.kind, "sequence kind: geometric|signed_power|explicit");
  args.opt_a = cmd.add_option("--a,-a", args.spec.a, "geometric ratio (exact: 7/10, 0.7, ...)");
  args.opt_signs = cmd.add_option("--signs", args.spec.signs,
                                  "sign rule: alternating | seeded:<u64> | +-+ pattern");
  args.opt_head = cmd.add_option("--head", args.spec.head, "explicit head, comma-separated");
  args.opt_tail = cmd.add_option("--tail-ratio", args.spec.tail_ratio, "explicit tail ratio");
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw takagi::ParseError("empty integer list");
  return out;
}

json estimate_json(const takagi::DimensionEstimate& est) {
  json pts = json::array();
  for (const auto& [x, y] : est.points) pts.push_back({x, y});
  return json{{"slope", est.slope},
              {"intercept", est.intercept},
              {"residual_rms", est.residual_rms},
              {"points", pts}};
}

int cmd_eval(const CommonArgs& args, const std::string& x_text, const std::string& eps_text,
             bool exact_flag) {
  takagi::CoefficientSequence seq = args.resolve_sequence();
  takagi::Rational x = takagi::parse_rational(x_text);
  if (x < 0 || x > 1) throw takagi::DomainError("x must lie in [0,1], got " + x_text);
  auto level = takagi::b_adic_level(x, seq.base(), 256);
  if (level) {
    takagi::Int j = x.get_num() *
                    takagi::pow_int(static_cast<unsigned long>(seq.base()), *level) / x.get_den();
    takagi::Rational value = takagi::eval_exact(seq, j, *level);
    std::cout << "x = " << takagi::csv_rational(x) << "\n";
    std::cout << "f(x) = " << takagi::csv_rational(value) << " (exact)\n";
    std::cout << "f(x) ~ " << takagi::decimal_string(value, 12) << "\n";
    return 0;
  }
  takagi::Rational eps = takagi::parse_rational(eps_text);
  takagi::CertifiedValue cv = takagi::eval_certified(seq, x, eps);
  std::cout << "x = " << takagi::csv_rational(x) << "\n";
  std::cout << "f(x) ~ " << takagi::decimal_string(cv.center, 12) << " +- "
            << takagi::decimal_string(cv.radius, 12) << " (certified, " << cv.terms
            << " terms)\n";
  if (exact_flag)
    std::cout << "center = " << takagi::csv_rational(cv.center)
              << ", radius = " << takagi::csv_rational(cv.radius) << "\n";
  return 0;
}

int cmd_psum(const CommonArgs& args, unsigned n, int m, int precision, bool exact) {
  takagi::CoefficientSequence seq = args.resolve_sequence();
  takagi::PiecewiseLinearFunction pl =
      m >= 1 ? takagi::build_window_sum(seq, n, static_cast<unsigned>(m), args.limits())
             : takagi::build_partial_sum(seq, n, args.limits());
  bool to_file = false;
  auto os = args.open_output("psum.csv", &to_file);
  takagi::write_pl_csv(to_file ? *os : std::cout, pl, precision, exact);
  return 0;
}

int cmd_verify(const CommonArgs& args, unsigned n_max, unsigned m_max, std::size_t samples,
               unsigned prop_cap) {
  takagi::CoefficientSequence seq = args.resolve_sequence();
  takagi::VerifyOptions options{n_max, m_max, args.workers, args.limits()};

  bool to_file = false;
  auto windows_os = args.open_output("verify.csv", &to_file);
  takagi::VerifyOutcome windows =
      takagi::verify_window_counts(seq, options, to_file ? windows_os.get() : &std::cout);

  std::unique_ptr<std::ostream> localized_os;
  takagi::VerifyOutcome localized;
  if (to_file) {
    bool dummy = false;
    localized_os = args.open_output("localized.csv", &dummy);
    localized = takagi::verify_localized_counts(seq, options, localized_os.get());
  } else {
    localized = takagi::verify_localized_counts(seq, options, nullptr);
  }

  auto props = takagi::verify_lemma_properties(
      seq, takagi::PropertyOptions{prop_cap, samples, args.seed});

  std::size_t prop_failures = 0;
  std::cerr << "windowed counts: " << windows.windows << " windows, " << windows.violations
            << " violations\n";
  std::cerr << "localized counts: " << localized.windows << " windows, " << localized.violations
            << " violations\n";
  for (const auto& suite : props) {
    prop_failures += suite.failures;
    std::cerr << "property " << suite.name << ": " << suite.checks << " checks, "
              << suite.failures << " failures\n";
  }
  bool ok = windows.violations == 0 && localized.violations == 0 && prop_failures == 0;
  std::cerr << (ok ? "verify: all checks passed\n" : "verify: FAILURES FOUND\n");
  return ok ? 0 : static_cast<int>(takagi::ExitCode::verification_failed);
}

int cmd_boxdim(const CommonArgs& args, unsigned N_min, unsigned N_max, int refinement,
               const std::string& mode_text) {
  takagi::CoefficientSequence seq = args.resolve_sequence();
  takagi::BoxDimOptions options;
  options.N_min = N_min;
  options.N_max = N_max;
  options.refinement = refinement;
  options.mode =
      mode_text == "points" ? takagi::SampleMode::points : takagi::SampleMode::fill;
  options.workers = args.workers;
  options.limits = args.limits();
  takagi::BoxDimResult result = takagi::box_dimension_fit(seq, options);

  bool to_file = false;
  auto os = args.open_output("boxdim.csv", &to_file);
  takagi::write_box_table_csv(to_file ? *os : std::cout, result);

  if (to_file) {
    json summary{{"sequence", seq.describe()},
                 {"N_min", N_min},
                 {"N_max", N_max},
                 {"fit", estimate_json(result.fit)},
                 {"fit_lower", estimate_json(result.fit_lower)},
                 {"fit_upper", estimate_json(result.fit_upper)}};
    std::ofstream js(fs::path(args.out_dir) / "summary.json", std::ios::binary);
    js << summary.dump(2) << "\n";
  }
  std::cerr << "box slope = " << result.fit.slope << " (lower " << result.fit_lower.slope
            << ", upper " << result.fit_upper.slope << "), residual rms "
            << result.fit.residual_rms << "\n";
  return 0;
}

int cmd_assouad(const CommonArgs& args, const std::string& n_list, const std::string& m_list,
                const std::string& x0_mode, std::size_t sample_size, const std::string& side,
                unsigned refinement, const std::string& mode_text) {
  takagi::CoefficientSequence seq = args.resolve_sequence();
  takagi::AssouadOptions options;
  options.n_list = parse_unsigned_list(n_list);
  options.m_list = parse_unsigned_list(m_list);
  options.strategy = x0_mode == "seeded" ? takagi::X0Strategy::seeded
                                         : takagi::X0Strategy::grid_points;
  options.sample_size = sample_size;
  options.seed = args.seed;
  options.want_upper = side != "lower";
  options.want_lower = side != "upper";
  options.refinement = refinement;
  options.mode = mode_text == "points" ? takagi::SampleMode::points : takagi::SampleMode::fill;
  options.workers = args.workers;
  options.limits = args.limits();

  takagi::AssouadProfile profile = takagi::assouad_profile(seq, options);

  bool to_file = false;
  auto os = args.open_output("profile.csv", &to_file);
  takagi::write_profile_csv(to_file ? *os : std::cout, profile);

  json summary{{"sequence", seq.describe()}, {"x0", x0_mode}, {"side", side}};
  if (options.want_upper) {
    auto fit = takagi::assouad_slope(profile, takagi::CountSide::upper);
    summary["upper"] = estimate_json(fit);
    std::cerr << "localized slope (upper counts) = " << fit.slope << "\n";
  }
  if (options.want_lower) {
    auto fit = takagi::assouad_slope(profile, takagi::CountSide::lower);
    summary["lower"] = estimate_json(fit);
    std::cerr << "localized slope (lower counts) = " << fit.slope << "\n";
  }
  if (to_file) {
    {
      std::ofstream detail(fs::path(args.out_dir) / "profile_detail.csv", std::ios::binary);
      takagi::write_profile_detail_csv(detail, profile);
    }
    std::ofstream js(fs::path(args.out_dir) / "summary.json", std::ios::binary);
    js << summary.dump(2) << "\n";
  }
  return 0;
}

int cmd_render(const CommonArgs& args, unsigned n, std::size_t samples, int width, int height,
               const std::string& eps_text) {
  takagi::CoefficientSequence seq = args.resolve_sequence();
  takagi::RenderOptions options;
  options.n = n;
  options.samples = samples;
  options.width = width;
  options.height = height;
  options.eps = takagi::parse_rational(eps_text);
  takagi::RenderResult result = takagi::render_figure(seq, options);

  std::string dir = args.out_dir.empty() ? "." : args.out_dir;
  fs::create_directories(dir);
  {
    std::ofstream svg(fs::path(dir) / "figure.svg", std::ios::binary);
    svg << result.svg;
  }
  {
    std::ofstream csv(fs::path(dir) / "figure.csv", std::ios::binary);
    csv << result.csv;
  }
  std::cerr << "wrote " << (fs::path(dir) / "figure.svg").string() << " and companion CSV\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Takagi-class evaluation, certified strip enclosures, mesh-cell counting, "
               "and box/localized dimension estimates"};
  app.require_subcommand(1);

  CommonArgs eval_args, psum_args, verify_args, box_args, assouad_args, render_args;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate f(x): exact at b-adic x, else certified");
  attach_common(*eval_cmd, eval_args);
  std::string x_text, eps_text = "1e-6";
  bool eval_exact_flag = false;
  eval_cmd->add_option("--x,-x", x_text, "evaluation point in [0,1]")->required();
  eval_cmd->add_option("--eps", eps_text, "certification radius for non-b-adic x");
  eval_cmd->add_flag("--exact", eval_exact_flag, "also print the exact certified center");

  auto* psum_cmd = app.add_subcommand("psum", "emit a partial sum H_n (or window sum) as CSV");
  attach_common(*psum_cmd, psum_args);
  unsigned psum_n = 4;
  int psum_m = -1, psum_precision = 9;
  bool psum_exact = false;
  psum_cmd->add_option("--n,-n", psum_n, "number of leading terms");
  psum_cmd->add_option("--m,-m", psum_m, "window length (emit the sum of terms n..n+m-1)");
  psum_cmd->add_option("--precision", psum_precision, "decimal digits in x,y columns");
  psum_cmd->add_flag("--exact", psum_exact, "append exact p/q columns");

  auto* verify_cmd =
      app.add_subcommand("verify", "exhaustive windowed/localized count checks + invariants");
  attach_common(*verify_cmd, verify_args);
  unsigned verify_n_max = 6, verify_m_max = 5, verify_prop_cap = 12;
  std::size_t verify_samples = 1000;
  verify_cmd->add_option("--n-max", verify_n_max, "largest window level n");
  verify_cmd->add_option("--m-max", verify_m_max, "largest refinement m");
  verify_cmd->add_option("--samples", verify_samples, "randomized checks per invariant");
  verify_cmd->add_option("--prop-cap", verify_prop_cap, "n/m cap for randomized invariants");

  auto* box_cmd = app.add_subcommand("boxdim", "global box-counting slope fit");
  attach_common(*box_cmd, box_args);
  unsigned box_N_min = 6, box_N_max = 14;
  int box_refinement = -1;
  std::string box_mode = "fill";
  box_cmd->add_option("--N-min", box_N_min, "smallest scale level");
  box_cmd->add_option("--N-max", box_N_max, "largest scale level");
  box_cmd->add_option("--refinement", box_refinement, "sampling offset q (-1 = auto)");
  box_cmd->add_option("--mode", box_mode, "lower-count mode: points|fill");

  auto* assouad_cmd = app.add_subcommand("assouad", "localized max-count profile and slope");
  attach_common(*assouad_cmd, assouad_args);
  std::string as_n_list = "2,3,4,5,6", as_m_list = "1,2,3,4,5,6", as_x0 = "grid",
              as_side = "both", as_mode = "fill";
  std::size_t as_samples = 32;
  unsigned as_refinement = 5;
  assouad_cmd->add_option("--n-list", as_n_list, "window levels n (comma-separated)");
  assouad_cmd->add_option("--m-list", as_m_list, "refinements m (comma-separated)");
  assouad_cmd->add_option("--x0", as_x0, "x0 strategy: grid|seeded");
  assouad_cmd->add_option("--samples", as_samples, "x0 draws per level for seeded strategy");
  assouad_cmd->add_option("--side", as_side, "count sides: both|lower|upper");
  assouad_cmd->add_option("--refinement", as_refinement, "sampling offset for lower counts");
  assouad_cmd->add_option("--mode", as_mode, "lower-count mode: points|fill");

  auto* render_cmd = app.add_subcommand("render", "SVG of f, a partial sum, and its strip");
  attach_common(*render_cmd, render_args);
  unsigned render_n = 4;
  std::size_t render_samples = 4096;
  int render_width = 900, render_height = 560;
  std::string render_eps = "1e-4";
  render_cmd->add_option("--n,-n", render_n, "strip level to draw");
  render_cmd->add_option("--samples", render_samples, "certified polyline resolution");
  render_cmd->add_option("--width", render_width, "SVG width");
  render_cmd->add_option("--height", render_height, "SVG height");
  render_cmd->add_option("--eps", render_eps, "certification radius for the curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(takagi::ExitCode::usage);
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_args, x_text, eps_text, eval_exact_flag);
    if (psum_cmd->parsed())
      return cmd_psum(psum_args, psum_n, psum_m, psum_precision, psum_exact);
    if (verify_cmd->parsed())
      return cmd_verify(verify_args, verify_n_max, verify_m_max, verify_samples, verify_prop_cap);
    if (box_cmd->parsed())
      return cmd_boxdim(box_args, box_N_min, box_N_max, box_refinement, box_mode);
    if (assouad_cmd->parsed())
      return cmd_assouad(assouad_args, as_n_list, as_m_list, as_x0, as_samples, as_side,
                         as_refinement, as_mode);
    if (render_cmd->parsed())
      return cmd_render(render_args, render_n, render_samples, render_width, render_height,
                        render_eps);
  } catch (const takagi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(takagi::ExitCode::usage);
  }
  return 0;
}
