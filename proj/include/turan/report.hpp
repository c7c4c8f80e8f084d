#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "turan/caps.hpp"
#include "turan/numerics.hpp"

namespace turan {

enum class OutputFormat { csv, markdown, json };

OutputFormat parse_format(const std::string& text);

struct ReportConfig {
  int n = 32;
  int k_min = 2;
  int k_max = 10;
  std::optional<int> j;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  SizeCaps caps;
  /// Reproduction defaults to the fixed-grid rule of the published tables.
  QuadratureConfig quadrature = tabulation_quadrature();

  /// Checks 2 <= k_min <= k_max and, when `n_dependent`, k_max <= n - 2.
  void validate(bool n_dependent) const;
};

/// Empty, exact integer, real, or text (big integers and rationals "p/q").
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct TableArtifact {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> notes;

  friend bool operator==(const TableArtifact&, const TableArtifact&) = default;
};

TableArtifact cmd_list1(const ReportConfig& cfg);
TableArtifact cmd_list2(const ReportConfig& cfg);
TableArtifact cmd_list3(const ReportConfig& cfg);
TableArtifact cmd_bounds(const ReportConfig& cfg);
TableArtifact cmd_verify(const ReportConfig& cfg);
/// mu and lambda at s = n - k for every h, closed form next to the oracle.
TableArtifact cmd_mu(const ReportConfig& cfg);

/// 0 when every check passed, 1 on any failure, 2 if a check errored.
int verify_exit_code(const TableArtifact& verify_table);

std::string to_csv(const TableArtifact& table);
std::string to_markdown(const TableArtifact& table);
nlohmann::json to_json(const TableArtifact& table);
TableArtifact table_from_json(const nlohmann::json& doc);
std::string render(const TableArtifact& table, OutputFormat format);

}  // namespace turan
