#include "hsseq/report.hpp"

#include <sstream>

#include "hsseq/errors.hpp"

namespace hsseq {

using nlohmann::json;

namespace {

json grid_json(const std::vector<std::vector<std::size_t>>& grid) {
  json out = json::array();
  for (const auto& row : grid) out.push_back(row);
  return out;
}

std::vector<std::vector<std::size_t>> grid_from(const json& j) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : j) out.push_back(row.get<std::vector<std::size_t>>());
  return out;
}

std::string grid_text(const std::vector<std::vector<std::size_t>>& grid,
                      const std::string& indent) {
  // rows printed with q decreasing, the usual spectral sequence picture
  if (grid.empty()) return indent + "(empty)\n";
  std::size_t qmax = grid[0].size();
  std::ostringstream os;
  for (std::size_t qi = qmax; qi-- > 0;) {
    os << indent << "q=" << qi << " |";
    for (std::size_t p = 0; p < grid.size(); ++p) os << " " << grid[p][qi];
    os << "\n";
  }
  os << indent << "      ";
  for (std::size_t p = 0; p < grid.size(); ++p) os << " p" << p;
  os << "\n";
  return os.str();
}

} // namespace

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["field"] = field;
  j["kernel_family"] = kernel_family;
  if (!validation.empty()) {
    json v = json::array();
    for (const auto& e : validation)
      v.push_back({{"component", e.component}, {"ok", e.ok}, {"problems", e.problems}});
    j["validation"] = v;
  }
  if (cohomology) {
    json c;
    c["kernel_betti"] = cohomology->kernel_betti;
    if (cohomology->total_betti) c["total_betti"] = *cohomology->total_betti;
    c["e2_grid"] = grid_json(cohomology->e2_grid);
    if (!cohomology->notes.empty()) c["notes"] = cohomology->notes;
    j["cohomology"] = c;
  }
  if (spectral) {
    json s;
    s["row_dims"] = spectral->row_dims;
    json pages = json::array();
    for (const auto& p : spectral->pages)
      pages.push_back({{"r", p.r}, {"dims", grid_json(p.dims)}});
    s["pages"] = pages;
    json census = json::array();
    for (const auto& e : spectral->census)
      census.push_back({{"r", e.r}, {"p", e.p}, {"q", e.q}, {"rank", e.rank}});
    s["census"] = census;
    s["length"] = spectral->length;
    s["collapse_page"] = spectral->collapse_page;
    s["stable_grid"] = grid_json(spectral->stable_grid);
    s["totals"] = spectral->totals;
    j["spectral"] = s;
  }
  if (!theorems.empty()) {
    json t = json::array();
    for (const auto& e : theorems)
      t.push_back({{"id", e.id},
                   {"statement", e.statement},
                   {"hypotheses_met", e.hypotheses_met},
                   {"pass", e.pass},
                   {"details", e.details}});
    j["theorems"] = t;
  }
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.kernel_family = j.at("kernel_family").get<std::string>();
    if (j.contains("validation"))
      for (const auto& e : j.at("validation"))
        r.validation.push_back(ValidationEntry{e.at("component").get<std::string>(),
                                               e.at("ok").get<bool>(),
                                               e.at("problems").get<std::vector<std::string>>()});
    if (j.contains("cohomology")) {
      const auto& c = j.at("cohomology");
      CohomologySection sec;
      sec.kernel_betti = c.at("kernel_betti").get<std::vector<std::size_t>>();
      if (c.contains("total_betti"))
        sec.total_betti = c.at("total_betti").get<std::vector<std::size_t>>();
      sec.e2_grid = grid_from(c.at("e2_grid"));
      if (c.contains("notes")) sec.notes = c.at("notes").get<std::vector<std::string>>();
      r.cohomology = std::move(sec);
    }
    if (j.contains("spectral")) {
      const auto& s = j.at("spectral");
      SpectralSection sec;
      sec.row_dims = s.at("row_dims").get<std::vector<std::size_t>>();
      for (const auto& p : s.at("pages"))
        sec.pages.push_back(PageDims{p.at("r").get<std::size_t>(), grid_from(p.at("dims"))});
      for (const auto& e : s.at("census"))
        sec.census.push_back(CensusEntry{e.at("r").get<std::size_t>(),
                                         e.at("p").get<std::size_t>(),
                                         e.at("q").get<std::size_t>(),
                                         e.at("rank").get<std::size_t>()});
      sec.length = s.at("length").get<std::size_t>();
      sec.collapse_page = s.at("collapse_page").get<std::size_t>();
      sec.stable_grid = grid_from(s.at("stable_grid"));
      sec.totals = s.at("totals").get<std::vector<std::size_t>>();
      r.spectral = std::move(sec);
    }
    if (j.contains("theorems"))
      for (const auto& e : j.at("theorems"))
        r.theorems.push_back(TheoremEntry{e.at("id").get<std::string>(),
                                          e.at("statement").get<std::string>(),
                                          e.at("hypotheses_met").get<bool>(),
                                          e.at("pass").get<bool>(),
                                          e.at("details").get<std::string>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

bool operator==(const Report& a, const Report& b) {
  return a.command == b.command && a.field == b.field &&
         a.kernel_family == b.kernel_family && a.validation == b.validation &&
         a.cohomology == b.cohomology && a.spectral == b.spectral &&
         a.theorems == b.theorems;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "field:   " << field << "\n";
  os << "kernel:  " << kernel_family << "\n";
  if (!validation.empty()) {
    os << "\nvalidation\n";
    for (const auto& e : validation) {
      os << "  " << e.component << ": " << (e.ok ? "ok" : "INVALID") << "\n";
      for (const auto& p : e.problems) os << "    - " << p << "\n";
    }
  }
  if (cohomology) {
    os << "\ncohomology\n";
    os << "  H^q(kernel, M):";
    for (auto b : cohomology->kernel_betti) os << " " << b;
    os << "\n";
    if (cohomology->total_betti) {
      os << "  H^n(total, M): ";
      for (auto b : *cohomology->total_betti) os << " " << b;
      os << "\n";
    }
    os << "  H^p(quotient, H^q(kernel, M)):\n"
       << grid_text(cohomology->e2_grid, "    ");
    for (const auto& n : cohomology->notes) os << "  note: " << n << "\n";
  }
  if (spectral) {
    os << "\nspectral sequence\n";
    os << "  row dims:";
    for (auto d : spectral->row_dims) os << " " << d;
    os << "\n";
    for (const auto& p : spectral->pages)
      os << "  page E_" << p.r << ":\n" << grid_text(p.dims, "    ");
    if (spectral->census.empty()) {
      os << "  no nonzero differentials from r = 2 on\n";
    } else {
      os << "  nonzero differentials:\n";
      for (const auto& e : spectral->census)
        os << "    d_" << e.r << " at (p,q) = (" << e.p << "," << e.q
           << "), rank " << e.rank << "\n";
    }
    os << "  length: " << spectral->length << "\n";
    os << "  collapse page: " << spectral->collapse_page << "\n";
    os << "  stable page:\n" << grid_text(spectral->stable_grid, "    ");
    os << "  totals per degree:";
    for (auto t : spectral->totals) os << " " << t;
    os << "\n";
  }
  if (!theorems.empty()) {
    os << "\ntheorem checks\n";
    for (const auto& t : theorems) {
      std::string verdict = !t.hypotheses_met ? "hypotheses unmet"
                            : (t.pass ? "PASS" : "FAIL");
      os << "  [" << verdict << "] " << t.id << ": " << t.statement << "\n";
      if (!t.details.empty()) os << "      " << t.details << "\n";
    }
  }
  if (elapsed_seconds > 0) os << "\nelapsed: " << elapsed_seconds << " s\n";
  return os.str();
}

} // namespace hsseq
