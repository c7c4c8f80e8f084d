#include "turan/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "turan/cyclic.hpp"
#include "turan/errors.hpp"
#include "turan/exact_count.hpp"
#include "turan/verify.hpp"

namespace turan {

namespace {

// cmd_verify only runs the exhaustive sweep when the member index stays
// small; beyond this the witness sweep is the check of record.
constexpr std::uint64_t kExhaustiveMemberLimit = 1'000'000;
constexpr std::uint64_t kExhaustiveSubsetLimit = 10'000'000;
constexpr std::uint64_t kOccurrenceLimit = 5'000'000;  // n * C(n, k)

std::string rule_name(QuadratureRule rule) {
  return rule == QuadratureRule::adaptive_simpson ? "adaptive-simpson" : "left-riemann";
}

std::string real_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string general_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

Cell count_cell(const CountValue& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

std::string rational_text(const Rational& q) {
  const CountValue num = boost::multiprecision::numerator(q);
  const CountValue den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

CountValue floor_of(const Rational& q) {
  const CountValue num = boost::multiprecision::numerator(q);
  const CountValue den = boost::multiprecision::denominator(q);
  CountValue quotient = num / den;
  if (num < 0 && quotient * den != num) --quotient;
  return quotient;
}

std::vector<std::pair<std::string, std::string>> provenance_of(const ReportConfig& cfg,
                                                               bool n_dependent) {
  std::vector<std::pair<std::string, std::string>> p;
  if (n_dependent) p.emplace_back("n", std::to_string(cfg.n));
  p.emplace_back("k_range", std::to_string(cfg.k_min) + ".." + std::to_string(cfg.k_max));
  if (cfg.j) p.emplace_back("j", std::to_string(*cfg.j));
  p.emplace_back("quadrature", rule_name(cfg.quadrature.rule));
  p.emplace_back("abs_tol", general_text(cfg.quadrature.abs_tol));
  p.emplace_back("max_depth", std::to_string(cfg.quadrature.max_depth));
  p.emplace_back("riemann_step", general_text(cfg.quadrature.riemann_step));
  p.emplace_back("cap_compositions", std::to_string(cfg.caps.compositions));
  p.emplace_back("cap_subsets", std::to_string(cfg.caps.subsets));
  p.emplace_back("cap_materialized", std::to_string(cfg.caps.materialized));
  return p;
}

QuadratureConfig adaptive_of(const QuadratureConfig& cfg) {
  QuadratureConfig adaptive = cfg;
  adaptive.rule = QuadratureRule::adaptive_simpson;
  return adaptive;
}

std::vector<int> shifts_of(const ReportConfig& cfg) {
  if (cfg.j) {
    if (*cfg.j < 0 || *cfg.j >= cfg.n) throw std::invalid_argument("--j outside [0, n)");
    return {*cfg.j};
  }
  std::vector<int> all(static_cast<std::size_t>(cfg.n));
  for (int j = 0; j < cfg.n; ++j) all[j] = j;
  return all;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "md" || text == "markdown") return OutputFormat::markdown;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv, md or json)");
}

void ReportConfig::validate(bool n_dependent) const {
  if (k_min < 2 || k_min > k_max) {
    throw std::invalid_argument("k range must satisfy 2 <= k_min <= k_max");
  }
  if (n_dependent && k_max > n - 2) {
    throw std::invalid_argument("k range must lie within [2, n - 2] for n=" + std::to_string(n));
  }
  quadrature.validate();
}

TableArtifact cmd_list1(const ReportConfig& cfg) {
  cfg.validate(false);
  TableArtifact table{"list1", {"k", "c0", "c0_adaptive", "error"}, {}, provenance_of(cfg, false), {}};
  const QuadratureConfig reference = adaptive_of(cfg.quadrature);
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    try {
      table.rows.push_back({std::int64_t{k}, c0(k, cfg.quadrature), c0(k, reference), Cell{}});
    } catch (const QuadratureError& e) {
      table.rows.push_back({std::int64_t{k}, Cell{}, Cell{}, std::string(e.what())});
    }
  }
  table.notes.push_back("c0_adaptive is the integral to abs_tol; c0 uses the configured rule");
  return table;
}

TableArtifact cmd_list2(const ReportConfig& cfg) {
  cfg.validate(false);
  TableArtifact table{"list2", {"k", "c1"}, {}, provenance_of(cfg, false), {}};
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) table.rows.push_back({std::int64_t{k}, c1(k)});
  return table;
}

TableArtifact cmd_list3(const ReportConfig& cfg) {
  cfg.validate(true);
  TableArtifact table{"list3",
                      {"k", "l_min", "j_min", "l_total", "l_mean", "l_mean_floor",
                       "l_mean_round", "binom", "mean_ratio_inv", "bound_inv"},
                      {},
                      provenance_of(cfg, true),
                      {}};
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const FamilySizeStats stats = family_size_stats(cfg.n, k, cfg.caps);
    const CountValue binom = binomial(cfg.n, k);
    const Rational half(1, 2);
    const double mean = stats.mean.convert_to<double>();
    const double bound = (1.0 + tau_closed(k, cfg.quadrature)) / (k - 1);
    table.rows.push_back({
        std::int64_t{k},
        std::int64_t(stats.min),
        std::int64_t(stats.argmin),
        std::int64_t(stats.total),
        rational_text(stats.mean),
        count_cell(floor_of(stats.mean)),
        count_cell(floor_of(stats.mean + half)),
        count_cell(binom),
        binom.convert_to<double>() / mean,
        1.0 / bound,
    });
  }
  table.notes.push_back("mean_ratio_inv = C(n,k)/l_mean and bound_inv = (k-1)/(1+tau(k)); "
                        "both are the x of a 1/x ratio");
  return table;
}

TableArtifact cmd_bounds(const ReportConfig& cfg) {
  cfg.validate(true);
  TableArtifact table{"bounds",
                      {"k", "c0", "c1", "tau_closed", "tau_integral", "bound_16", "bound_11",
                       "bound_12", "bound_12_simplified", "bound_14", "bound_15",
                       "constructive", "note"},
                      {},
                      provenance_of(cfg, true),
                      {}};
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const BoundRow row = bound_row(cfg.n, k, cfg.quadrature);
    std::string note;
    Cell frankl_rodl;
    if (row.bound_15) {
      frankl_rodl = *row.bound_15;
    } else {
      note = "bound_15 undefined: ln k - 1 <= 0";
    }
    if (row.bound_16_exceeds_trivial) {
      note += std::string(note.empty() ? "" : "; ") + "bound_16 exceeds trivial bound 1";
    }
    Cell constructive;
    if (binomial_u64_saturating(cfg.n, k) <= cfg.caps.subsets) {
      const FamilySizeStats stats = family_size_stats(cfg.n, k, cfg.caps);
      constructive = static_cast<double>(stats.min) / binomial(cfg.n, k).convert_to<double>();
    } else {
      note += std::string(note.empty() ? "" : "; ") + "constructive column skipped: size cap";
    }
    table.rows.push_back({std::int64_t{k}, row.c0, row.c1, row.tau_closed, row.tau_integral,
                          row.bound_16, row.bound_11, row.bound_12, row.bound_12_simplified,
                          row.bound_14, frankl_rodl, constructive,
                          note.empty() ? Cell{} : Cell{note}});
  }
  table.notes.push_back("bound columns are coefficients of C(n,k); bound_11 and bound_12 use r = k+1");
  table.notes.push_back("bound_14 and bound_15 follow the formulas as printed (natural log)");
  return table;
}

TableArtifact cmd_verify(const ReportConfig& cfg) {
  cfg.validate(true);
  TableArtifact table{"verify",
                      {"check", "n", "k", "j", "checked", "failures", "status", "note"},
                      {},
                      provenance_of(cfg, true),
                      {}};
  const int n = cfg.n;
  const std::vector<int> shifts = shifts_of(cfg);

  auto add = [&](const std::string& check, int k, Cell j, std::uint64_t checked,
                 std::uint64_t failures, const std::string& status, const std::string& note) {
    table.rows.push_back({check, std::int64_t{n}, std::int64_t{k}, std::move(j),
                          std::int64_t(checked), std::int64_t(failures), status,
                          note.empty() ? Cell{} : Cell{note}});
  };
  auto guarded = [&](const std::string& check, int k, Cell j, auto&& body) {
    try {
      body();
    } catch (const GuardError& e) {
      add(check, k, std::move(j), 0, 0, "error", e.what());
    }
  };

  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const bool small = binomial_u64_saturating(n, k) <= kExhaustiveMemberLimit &&
                       binomial_u64_saturating(n, k + 1) <= kExhaustiveSubsetLimit;
    for (int j : shifts) {
      if (small) {
        guarded("exhaustive", k, std::int64_t{j}, [&] {
          const auto report = is_turan_family(build_family(n, k, j, cfg.caps), cfg.caps);
          add("exhaustive", k, std::int64_t{j}, report.checked, report.failures.size(),
              report.passed() ? "pass" : "fail", report.summary());
        });
      }
      guarded("witness", k, std::int64_t{j}, [&] {
        const auto report = witness_verify(n, k, j, cfg.caps);
        add("witness", k, std::int64_t{j}, report.checked, report.failures.size(),
            report.passed() ? "pass" : "fail", report.summary());
      });
    }
    if (!small) {
      add("exhaustive", k, Cell{}, 0, 0, "skipped", "family too large for the member index");
    }

    if (binomial_u64_saturating(n, k) * static_cast<std::uint64_t>(n) <= kOccurrenceLimit) {
      guarded("occurrence", k, Cell{}, [&] {
        std::uint64_t mismatches = 0;
        const auto counts = occurrence_counts(n, k, cfg.caps);
        for (const auto& [subset, count] : counts) {
          if (count != gap_profile(subset).max_gap) ++mismatches;
        }
        add("occurrence", k, Cell{}, counts.size(), mismatches, mismatches ? "fail" : "pass",
            "count(X) == h_X");
      });
    } else {
      add("occurrence", k, Cell{}, 0, 0, "skipped", "n * C(n,k) above occurrence limit");
    }

    guarded("gap-sum-bridge", k, Cell{}, [&] {
      const Rational scaled = averaging_bound(n, k, cfg.caps) * n;
      const CountValue closed = weighted_gap_sum(n, k);
      const bool ok = scaled == Rational(closed);
      add("gap-sum-bridge", k, Cell{}, binomial_u64_saturating(n, k), ok ? 0 : 1,
          ok ? "pass" : "fail", "n*mean=" + rational_text(scaled) + " closed=" + closed.str());
    });
  }
  return table;
}

TableArtifact cmd_mu(const ReportConfig& cfg) {
  cfg.validate(true);
  TableArtifact table{"mu",
                      {"k", "s", "h", "mu_closed", "mu_oracle", "lambda", "lambda_oracle"},
                      {},
                      provenance_of(cfg, true),
                      {}};
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const int s = cfg.n - k;
    for (int h = 0; h <= s; ++h) {
      const CompositionSpace space{s, k, h};
      Cell mu_ref;
      Cell lambda_ref;
      try {
        mu_ref = count_cell(mu_oracle(space, cfg.caps.compositions));
        lambda_ref = count_cell(lambda_oracle(space, cfg.caps.compositions));
      } catch (const GuardError&) {
        // left empty: enumeration too large
      }
      table.rows.push_back({std::int64_t{k}, std::int64_t{s}, std::int64_t{h},
                            count_cell(mu_closed(space)), mu_ref,
                            count_cell(lambda_count(space)), lambda_ref});
    }
    table.notes.push_back("k=" + std::to_string(k) +
                          " weighted_gap_sum=" + weighted_gap_sum(cfg.n, k).str());
  }
  return table;
}

int verify_exit_code(const TableArtifact& table) {
  std::size_t status_col = 0;
  while (status_col < table.columns.size() && table.columns[status_col] != "status") ++status_col;
  if (status_col == table.columns.size()) return 0;
  bool errored = false;
  for (const auto& row : table.rows) {
    const auto* status = std::get_if<std::string>(&row[status_col]);
    if (!status) continue;
    if (*status == "fail") return 1;
    if (*status == "error") errored = true;
  }
  return errored ? 2 : 0;
}

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return real_text(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const TableArtifact& table) {
  std::ostringstream out;
  out << "# table=" << table.name << '\n';
  for (const auto& [key, value] : table.provenance) out << "# " << key << '=' << value << '\n';
  for (const auto& note : table.notes) out << "# note: " << note << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const TableArtifact& table) {
  std::ostringstream out;
  out << "## " << table.name << "\n\n";
  for (const auto& [key, value] : table.provenance) out << "- " << key << ": `" << value << "`\n";
  out << '\n';
  out << '|';
  for (const auto& column : table.columns) out << ' ' << column << " |";
  out << "\n|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& row : table.rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << cell_text(cell) << " |";
    out << '\n';
  }
  if (!table.notes.empty()) {
    out << '\n';
    for (const auto& note : table.notes) out << "> " << note << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const TableArtifact& table) {
  nlohmann::json doc;
  doc["name"] = table.name;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row) {
      std::visit(
          [&cells](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              cells.push_back(nullptr);
            } else {
              cells.push_back(v);
            }
          },
          cell);
    }
    doc["rows"].push_back(std::move(cells));
  }
  doc["provenance"] = nlohmann::json::array();
  for (const auto& [key, value] : table.provenance) doc["provenance"].push_back({key, value});
  doc["notes"] = table.notes;
  return doc;
}

TableArtifact table_from_json(const nlohmann::json& doc) {
  TableArtifact table;
  table.name = doc.at("name").get<std::string>();
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& row : doc.at("rows")) {
    std::vector<Cell> cells;
    for (const auto& value : row) {
      if (value.is_null()) {
        cells.emplace_back();
      } else if (value.is_number_integer()) {
        cells.emplace_back(value.get<std::int64_t>());
      } else if (value.is_number_float()) {
        cells.emplace_back(value.get<double>());
      } else if (value.is_string()) {
        cells.emplace_back(value.get<std::string>());
      } else {
        throw std::invalid_argument("unsupported cell in table JSON");
      }
    }
    table.rows.push_back(std::move(cells));
  }
  for (const auto& entry : doc.at("provenance")) {
    table.provenance.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<std::string>());
  }
  table.notes = doc.at("notes").get<std::vector<std::string>>();
  return table;
}

std::string render(const TableArtifact& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return to_csv(table);
    case OutputFormat::markdown:
      return to_markdown(table);
    case OutputFormat::json:
      return to_json(table).dump(2) + "\n";
  }
  return {};
}

}  // namespace turan
