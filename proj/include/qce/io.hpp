#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qce/bipartite.hpp"
#include "qce/measurement.hpp"

namespace qce {

// State documents: either an explicit matrix
//   {"dA": 2, "dB": 2, "matrix": [[re, im], ...]}   (row-major)
// or a named family
//   {"family": "x_state"|"pure_plus_mixed"|"aligned"|"xy_pair"|"classical",
//    "params": {...}}.
// Unknown fields are rejected.
BipartiteState parse_state(const nlohmann::json& doc);
BipartiteState load_state(const std::string& path);

// {"type": "direction", "k": [kx, ky, kz]} or
// {"type": "povm", "elements": [{"r": w, "ket": [[re, im], ...]}, ...]}.
Rank1Povm parse_measurement(const nlohmann::json& doc);
Rank1Povm load_measurement(const std::string& path);

BipartiteState build_family(const std::string& name, const nlohmann::json& params);

// 12 significant digits, '.' decimal separator.
std::string format_number(double value);

/// CSV document with a seed comment line, then the header row, then data
/// rows; emitted byte-identically for identical inputs.
class CsvWriter {
  public:
    CsvWriter(std::vector<std::string> columns, std::uint64_t seed);

    void add_row(const std::vector<std::string>& cells);
    void add_comment(const std::string& text);
    std::string str() const;
    void write(const std::string& path) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::string> lines_;
    std::uint64_t seed_;
    std::vector<std::string> trailing_comments_;
};

}  // namespace qce
