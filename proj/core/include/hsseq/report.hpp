#ifndef HSSEQ_REPORT_HPP
#define HSSEQ_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hsseq {

struct ValidationEntry {
  std::string component;
  bool ok = true;
  std::vector<std::string> problems;

  friend bool operator==(const ValidationEntry&, const ValidationEntry&) = default;
};

struct CohomologySection {
  std::vector<std::size_t> kernel_betti;                 // H^q(n, M)
  std::optional<std::vector<std::size_t>> total_betti;   // H^n(g, M), finite kernels
  std::vector<std::vector<std::size_t>> e2_grid;         // [p][q]
  std::vector<std::string> notes;

  friend bool operator==(const CohomologySection&, const CohomologySection&) = default;
};

struct PageDims {
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> dims;  // [p][q]

  friend bool operator==(const PageDims&, const PageDims&) = default;
};

struct CensusEntry {
  std::size_t r = 0, p = 0, q = 0, rank = 0;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct SpectralSection {
  std::vector<std::size_t> row_dims;
  std::vector<PageDims> pages;
  std::vector<CensusEntry> census;
  std::size_t length = 2;
  std::size_t collapse_page = 2;
  std::vector<std::vector<std::size_t>> stable_grid;  // [p][q]
  std::vector<std::size_t> totals;                    // per total degree

  friend bool operator==(const SpectralSection&, const SpectralSection&) = default;
};

struct TheoremEntry {
  std::string id;
  std::string statement;
  bool hypotheses_met = false;
  bool pass = false;
  std::string details;

  friend bool operator==(const TheoremEntry&, const TheoremEntry&) = default;
};

/// Everything a command run produces. The JSON form is canonical and
/// deterministic: identical inputs give byte-identical serializations,
/// and parse(serialize(r)) == r. Wall-clock timing is text-only output
/// and deliberately not part of the machine format.
struct Report {
  std::string command;
  std::string field;
  std::string kernel_family;
  std::vector<ValidationEntry> validation;
  std::optional<CohomologySection> cohomology;
  std::optional<SpectralSection> spectral;
  std::vector<TheoremEntry> theorems;
  double elapsed_seconds = 0.0;  // not serialized, not compared

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string to_text() const;

  friend bool operator==(const Report& a, const Report& b);
};

} // namespace hsseq

#endif
