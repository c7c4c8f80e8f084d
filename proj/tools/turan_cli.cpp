// Command-line front end: reproduces the c0/c1/family-size tables, runs the
// covering verifications and compares bound coefficients.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "turan/cyclic.hpp"
#include "turan/errors.hpp"
#include "turan/report.hpp"

namespace {

struct Options {
  int n = 32;
  std::optional<int> k;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::optional<int> j;
  std::string format = "csv";
  std::string out;
  std::optional<double> tol;
  std::optional<std::uint64_t> cap;
  std::string rule = "riemann";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "modulus / ground set size")->capture_default_str();
  cmd->add_option("--k", o.k, "single member size (sets k-min = k-max)");
  cmd->add_option("--k-min", o.k_min, "first k of the range");
  cmd->add_option("--k-max", o.k_max, "last k of the range");
  cmd->add_option("--j", o.j, "shift of the cyclic family");
  cmd->add_option("--format", o.format, "csv | md | json")
      ->check(CLI::IsMember({"csv", "md", "markdown", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
  cmd->add_option("--tol", o.tol, "adaptive quadrature absolute tolerance");
  cmd->add_option("--cap", o.cap, "size cap applied to every enumeration guard");
  cmd->add_option("--rule", o.rule, "c0 quadrature: riemann (tabulated) | simpson")
      ->check(CLI::IsMember({"riemann", "simpson"}))
      ->capture_default_str();
}

turan::ReportConfig make_config(const Options& o, int default_k_min, int default_k_max) {
  turan::ReportConfig cfg;
  cfg.n = o.n;
  cfg.k_min = o.k ? *o.k : o.k_min.value_or(default_k_min);
  cfg.k_max = o.k ? *o.k : o.k_max.value_or(default_k_max);
  cfg.j = o.j;
  cfg.format = turan::parse_format(o.format);
  if (!o.out.empty()) cfg.output_path = o.out;
  if (o.cap) cfg.caps = turan::SizeCaps::uniform(*o.cap);
  if (o.rule == "simpson") cfg.quadrature.rule = turan::QuadratureRule::adaptive_simpson;
  if (o.tol) cfg.quadrature.abs_tol = *o.tol;
  return cfg;
}

void emit(const std::string& text, const turan::ReportConfig& cfg) {
  if (!cfg.output_path) {
    std::cout << text;
    return;
  }
  std::ofstream file(*cfg.output_path);
  if (!file) throw std::runtime_error("cannot open " + *cfg.output_path);
  file << text;
}

int run_family(const Options& o) {
  if (!o.k) throw std::invalid_argument("family needs --k");
  turan::ReportConfig cfg = make_config(o, *o.k, *o.k);
  cfg.validate(true);
  const int j = o.j ? *o.j : turan::family_size_stats(cfg.n, *o.k, cfg.caps).argmin;
  const turan::TuranFamily family = turan::build_family(cfg.n, *o.k, j, cfg.caps);
  std::ostringstream text;
  turan::write_family(text, family);
  emit(text.str(), cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic (k+1, k)-Turan families: construction, verification and bounds"};
  app.require_subcommand(1);

  Options o;
  struct Command {
    const char* name;
    const char* help;
    int k_min, k_max;
  };
  const Command commands[] = {
      {"list1", "c0(k) table", 2, 40},
      {"list2", "c1(k) table", 2, 40},
      {"list3", "cyclic family sizes and bound column", 2, 10},
      {"bounds", "bound coefficient comparison", 2, 10},
      {"verify", "covering and counting-identity checks", 2, 4},
      {"mu", "mu/lambda counts, closed form against enumeration", 2, 2},
      {"family", "export one cyclic family", 2, 2},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c.name, c.help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& c : commands) {
      if (!app.got_subcommand(c.name)) continue;
      const std::string name = c.name;
      if (name == "family") return run_family(o);

      const turan::ReportConfig cfg = make_config(o, c.k_min, c.k_max);
      turan::TableArtifact table;
      if (name == "list1") table = turan::cmd_list1(cfg);
      if (name == "list2") table = turan::cmd_list2(cfg);
      if (name == "list3") table = turan::cmd_list3(cfg);
      if (name == "bounds") table = turan::cmd_bounds(cfg);
      if (name == "verify") table = turan::cmd_verify(cfg);
      if (name == "mu") table = turan::cmd_mu(cfg);
      emit(turan::render(table, cfg.format), cfg);
      return name == "verify" ? turan::verify_exit_code(table) : 0;
    }
  } catch (const turan::GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return 2;
  } catch (const turan::DomainError& e) {
    std::cerr << "domain: " << e.what() << '\n';
    return 2;
  } catch (const turan::QuadratureError& e) {
    std::cerr << "quadrature: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
