#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fourier_interp/classical_interp.hpp"
#include "fourier_interp/interp_basis.hpp"
#include "fourier_interp/lattice_lp.hpp"
#include "fourier_interp/table_io.hpp"
#include "fourier_interp/verification.hpp"

namespace fi = fourier_interp;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;
constexpr int kNumerical = 3;
constexpr double kReconstructionCap = 3.0;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<double> abs_tol;
  int max_n = 6;
  std::optional<int> truncation_N;
  std::string x_grid;
  std::vector<double> x_values;
  std::string fixture;
  std::string lattice_file;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 20240501;
  std::string suite;
};

struct Grid {
  double start, stop, step;
};

Grid parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw UsageError("bad number in --x-grid: " + item);
    } catch (const std::logic_error&) {
      throw UsageError("bad number in --x-grid: " + item);
    }
  }
  if (parts.size() != 3) throw UsageError("--x-grid expects start:stop:step");
  if (!(parts[2] > 0.0)) throw UsageError("--x-grid step must be positive");
  if (!(parts[1] >= parts[0]) || parts[0] < 0.0) throw UsageError("--x-grid needs 0 <= start <= stop");
  return {parts[0], parts[1], parts[2]};
}

std::vector<double> grid_or(const RunConfig& cfg, const std::string& fallback) {
  if (!cfg.x_values.empty()) return cfg.x_values;
  const Grid g = parse_grid(cfg.x_grid.empty() ? fallback : cfg.x_grid);
  return fi::make_grid(g.start, g.stop, g.step);
}

// Output goes to --out when given, stdout otherwise; summaries go to stderr in
// the first case too so the data stream stays clean.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& data() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  std::ostream& summary() { return file_.is_open() ? std::cout : std::cerr; }

 private:
  std::ofstream file_;
};

void check_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
}

fi::Lattice pick_lattice(const RunConfig& cfg, const char* fallback) {
  if (!cfg.lattice_file.empty()) return fi::load_lattice(cfg.lattice_file);
  return fi::lattice_fixture(cfg.fixture.empty() ? fallback : cfg.fixture);
}

using Row = std::vector<std::pair<std::string, std::string>>;

void emit_rows(std::ostream& out, const std::string& format, const std::vector<Row>& rows) {
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& [k, v] : row) obj[k] = v;
      doc.push_back(obj);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows[0].size(); ++i) out << (i ? "," : "") << rows[0][i].first;
  out << '\n';
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second;
    out << '\n';
  }
}

std::string num(double v) { return fi::format_real(v); }

int cmd_basis_table(const RunConfig& cfg) {
  check_format(cfg);
  if (cfg.max_n < 0 || cfg.max_n > 200) throw UsageError("--max-n must lie in [0, 200]");
  const std::vector<double> grid = grid_or(cfg, "0:3:0.05");
  Sink sink(cfg.out);
  fi::BasisEngineOptions opts;
  opts.max_n = cfg.max_n;
  const fi::BasisEngine engine(opts);
  const fi::BasisTable table = fi::build_basis_table(engine, grid);
  if (cfg.format == "json") {
    fi::write_table_json(table, sink.data());
  } else {
    fi::write_table_csv(table, sink.data());
  }
  const double threshold = cfg.abs_tol.value_or(1e-4);
  const double deviation = table.node_deviation();
  sink.summary() << "node_deviation " << num(deviation) << " threshold " << num(threshold) << '\n';
  sink.summary() << "max_imag " << num(table.max_imag) << '\n';
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (grid[j] == 0.0) sink.summary() << "a0(0) " << num(table.a(0, Eigen::Index(j))) << '\n';
  }
  for (Eigen::Index n = 0; n < table.err_a.rows(); ++n) {
    for (Eigen::Index j = 0; j < table.err_a.cols(); ++j) {
      if (!std::isfinite(table.a(n, j)) || !std::isfinite(table.a_hat(n, j))) {
        std::cerr << "error: basis value not finite at n=" << n << " x=" << num(grid[std::size_t(j)]) << '\n';
        return kNumerical;
      }
    }
  }
  return deviation < threshold ? kPass : kCheckFailure;
}

int cmd_verify(const RunConfig& cfg) {
  fi::SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.fixture = cfg.fixture;
  if (cfg.truncation_N) opts.truncation_N = *cfg.truncation_N;
  bool known = false;
  for (const auto& s : fi::suite_names()) known = known || s == cfg.suite;
  if (!known) throw UsageError("unknown suite " + cfg.suite);
  const fi::SuiteReport report = fi::run_suite(cfg.suite, opts);
  Sink sink(cfg.out);
  sink.data() << fi::report_json(report);
  if (!report.passed()) {
    std::cerr << "first failing check: " << report.first_failure() << '\n';
    return kCheckFailure;
  }
  return kPass;
}

int cmd_reconstruct(const RunConfig& cfg) {
  check_format(cfg);
  const std::string label = cfg.fixture.empty() ? "gaussian" : cfg.fixture;
  const auto pair = fi::fixture_by_label(label);
  if (!pair) throw UsageError("unknown fixture " + label);
  const int n = cfg.truncation_N.value_or(40);
  if (n < 1 || n > 200) throw UsageError("--truncation-N must lie in [1, 200]");
  const std::vector<double> xs = grid_or(cfg, "0:2.1:0.3");
  const double base_tol = cfg.abs_tol.value_or(1e-3);
  Sink sink(cfg.out);
  fi::BasisEngineOptions opts;
  opts.max_n = std::max(60, n);
  const fi::BasisEngine engine(opts);
  std::vector<Row> rows;
  bool ok = true;
  for (double x : xs) {
    double tol = base_tol;
    if (x > kReconstructionCap) {
      std::cerr << "warning: x = " << num(x) << " is beyond the cap " << num(kReconstructionCap)
                << "; tolerance widened to " << num(100.0 * base_tol) << '\n';
      tol = 100.0 * base_tol;
    }
    const fi::ReconstructionReport r = fi::reconstruct(*pair, x, n, engine);
    ok = ok && r.abs_error < tol;
    rows.push_back({{"x", num(x)},
                    {"value", num(r.reconstructed)},
                    {"error", num(r.abs_error)},
                    {"reference", num(r.reference)},
                    {"truncation_N", std::to_string(n)},
                    {"term_tail_bound", num(r.term_tail_bound)},
                    {"threshold", num(tol)}});
  }
  emit_rows(sink.data(), cfg.format, rows);
  return ok ? kPass : kCheckFailure;
}

int cmd_poisson(const RunConfig& cfg) {
  check_format(cfg);
  const fi::Lattice lattice = pick_lattice(cfg, "z1");
  const double radius = lattice.dimension() >= 8 ? 4.0 : 6.0;
  const double tol = cfg.abs_tol.value_or(1e-9);
  const fi::PoissonReport p = fi::poisson_check(fi::gaussian_pair(lattice.dimension()), lattice, radius);
  Sink sink(cfg.out);
  emit_rows(sink.data(), cfg.format,
            {{{"lattice", lattice.label()},
              {"radius_budget", num(radius)},
              {"lhs", num(p.lhs.real())},
              {"rhs", num(p.rhs.real())},
              {"residual", num(p.residual)},
              {"lhs_tail_bound", num(p.lhs_tail_bound)},
              {"rhs_tail_bound", num(p.rhs_tail_bound)},
              {"lhs_terms", std::to_string(p.lhs_terms)},
              {"rhs_terms", std::to_string(p.rhs_terms)},
              {"threshold", num(tol)}}});
  return p.residual < tol ? kPass : kCheckFailure;
}

fi::LPCertificate certificate_for(const fi::Lattice& lattice) {
  switch (lattice.dimension()) {
    case 1:
      return fi::triangle_certificate();
    case 2:
      return fi::product_triangle_certificate(2, std::sqrt(2.0));
    default:
      return fi::gaussian_certificate(lattice.dimension(), std::sqrt(2.0));
  }
}

int cmd_lp_check(const RunConfig& cfg) {
  check_format(cfg);
  const fi::Lattice lattice = pick_lattice(cfg, "z1");
  const fi::LPCertificate c = certificate_for(lattice);
  const double slack = cfg.abs_tol.value_or(1e-9);
  const fi::CertificateOutcome o = fi::lp_certificate_check(c, slack);
  Row row{{"lattice", lattice.label()},
          {"certificate", c.label},
          {"r", num(c.r)},
          {"slack", num(slack)},
          {"passed", o.passed ? "true" : "false"}};
  if (o.passed) {
    const fi::SharpnessGap gap = fi::lp_bound_sharpness_gap(lattice, c);
    row.insert(row.end(), {{"bound", num(*o.bound)},
                           {"density", num(gap.density)},
                           {"dropped_f", num(gap.dropped_f)},
                           {"dropped_f_hat", num(gap.dropped_f_hat)},
                           {"covolume_slack", num(gap.slack)}});
  } else {
    row.insert(row.end(), {{"violated_condition", std::to_string(o.violated_condition)},
                           {"radius", num(o.radius)},
                           {"value", num(o.value)}});
  }
  Sink sink(cfg.out);
  emit_rows(sink.data(), cfg.format, {row});
  return o.passed ? kPass : kCheckFailure;
}

int cmd_lattice_density(const RunConfig& cfg) {
  check_format(cfg);
  const fi::Lattice lattice = pick_lattice(cfg, "e8");
  const fi::DensityReport d = fi::lattice_packing_density(lattice);
  Sink sink(cfg.out);
  emit_rows(sink.data(), cfg.format,
            {{{"lattice", lattice.label()},
              {"dimension", std::to_string(lattice.dimension())},
              {"minimal_length", num(d.minimal_length)},
              {"covolume", num(d.covolume)},
              {"density", num(d.density)},
              {"density_root", num(std::pow(d.density, 1.0 / lattice.dimension()))}}});
  return kPass;
}

int cmd_classical(const RunConfig& cfg) {
  check_format(cfg);
  const int j = cfg.truncation_N.value_or(10000);
  if (j < 1) throw UsageError("--truncation-N must be positive");
  const std::vector<double> xs = grid_or(cfg, "0:2:0.05");
  const double tol = cfg.abs_tol.value_or(1e-3);
  std::vector<Row> rows;
  bool ok = true;
  for (double x : xs) {
    const double target = fi::sinc(x);
    const double v = fi::sinc_product_partial(x, j);
    ok = ok && std::fabs(v - target) < tol;
    rows.push_back({{"x", num(x)}, {"value", num(v)}, {"error", num(std::fabs(v - target))}, {"threshold", num(tol)}});
  }
  Sink sink(cfg.out);
  emit_rows(sink.data(), cfg.format, rows);
  return ok ? kPass : kCheckFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--abs-tol", cfg.abs_tol, "Threshold for the command's checks")->check(CLI::PositiveNumber);
  sub->add_option("--max-n", cfg.max_n, "Largest basis index");
  sub->add_option("--truncation-N", cfg.truncation_N, "Truncation index");
  sub->add_option("--x-grid", cfg.x_grid, "start:stop:step");
  sub->add_option("--x", cfg.x_values, "Explicit x values");
  sub->add_option("--fixture", cfg.fixture, "Fixture label");
  sub->add_option("--lattice-file", cfg.lattice_file, "Lattice basis file")->check(CLI::ExistingFile);
  sub->add_option("--format", cfg.format, "csv or json");
  sub->add_option("--out", cfg.out, "Output path");
  sub->add_option("--seed", cfg.seed, "Seed for sampled checks");
}

// Lifts --config <path> out of argv and appends each key = value line as a
// flag unless that flag was already given.
std::vector<std::string> apply_config(int argc, char** argv) {
  std::vector<std::string> args;
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config") {
      if (i + 1 >= argc) throw UsageError("--config needs a path");
      path = argv[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
    } else {
      args.push_back(a);
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool given = false;
    for (const auto& a : args) given = given || a == key || a.rfind(key + "=", 0) == 0;
    if (!given) {
      args.push_back(key);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args;
  try {
    args = apply_config(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Fourier interpolation numerics"};
  app.footer("--config <path> reads flat 'key = value' lines (keys are flag names without dashes); flags win.");
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"basis-table", "Tabulate a_n and a^_n on an x grid", cmd_basis_table},
      {"verify", "Run a verification suite", cmd_verify},
      {"reconstruct", "Reconstruct a fixture from its values at sqrt(n)", cmd_reconstruct},
      {"poisson", "Poisson summation check on a lattice", cmd_poisson},
      {"lp-check", "Check a linear programming certificate", cmd_lp_check},
      {"lattice-density", "Packing density of a lattice", cmd_lattice_density},
      {"classical", "Partial sinc product against sin(pi x)/(pi x)", cmd_classical},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, cfg);
    if (std::string(c.name) == "verify") {
      sub->add_option("suite", cfg.suite, "theta, kernels, interpolation, poisson, lp or classical")->required();
    }
    subs.emplace_back(sub, &c);
  }
  CLI::App* kernels = app.add_subcommand("kernels", "Kernel checks");
  std::string kernels_action;
  kernels->add_option("action", kernels_action, "check")->required()->check(CLI::IsMember({"check"}));
  add_common(kernels, cfg);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (kernels->parsed()) {
      cfg.suite = "kernels";
      return cmd_verify(cfg);
    }
    for (const auto& [sub, command] : subs) {
      if (sub->parsed()) return command->run(cfg);
    }
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const fi::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case fi::ErrorKind::InvalidArgument:
      case fi::ErrorKind::UnknownFixture:
      case fi::ErrorKind::ShapeMismatch:
        return kUsage;
      default:
        return kNumerical;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
}
