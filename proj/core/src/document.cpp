#include "hsseq/document.hpp"

#include <cctype>
#include <chrono>
#include <set>

#include "hsseq/errors.hpp"

namespace hsseq {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> parse_labels(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& item : j) {
    if (!item.is_string()) fail(path, "labels must be strings");
    std::string l = item.get<std::string>();
    if (!valid_label(l)) fail(path, "label '" + l + "' is not an identifier");
    if (!seen.insert(l).second) fail(path, "duplicate label '" + l + "'");
    labels.push_back(std::move(l));
  }
  return labels;
}

Scalar parse_scalar(const json& j, const Field& f, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return Scalar::of(j.get<long>(), f);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "scalars must be strings like \"2/3\" or integers");
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const Field& f,
                    const std::string& path) {
  if (!j.is_array() || j.size() != rows)
    fail(path, "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols)
      fail(path, "row " + std::to_string(i) + " must have " + std::to_string(cols) +
                     " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m.set(i, k, parse_scalar(row[k], f,
                               path + "[" + std::to_string(i) + "][" + std::to_string(k) +
                                   "]"));
  }
  return m;
}

std::size_t index_of_label(const std::vector<std::string>& labels, const std::string& l,
                           const std::string& path) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  fail(path, "unknown label '" + l + "'");
}

Field parse_field(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "field must be \"Q\" or \"F<p>\"");
  std::string s = j.get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s.size() >= 2 && s[0] == 'F') {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail(path, "field must be \"Q\" or \"F<p>\"");
    try {
      unsigned long p = std::stoul(s.substr(1));
      if (p > 0x7fffffffUL) throw Error("characteristic is too large");
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  fail(path, "field must be \"Q\" or \"F<p>\"");
}

RawAlgebra parse_algebra_block(const json& j, const Field& f, const std::string& path) {
  RawAlgebra alg;
  alg.labels = parse_labels(member(j, "basis", path), path + ".basis");
  std::size_t d = alg.labels.size();
  alg.constants = StructureConstants(d, f);
  if (!j.contains("brackets")) return alg;
  const json& brackets = j.at("brackets");
  if (!brackets.is_array()) fail(path + ".brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> given;
  struct Entry {
    std::size_t i, j;
    std::vector<Scalar> coeffs;
  };
  std::vector<Entry> entries;
  for (std::size_t bi = 0; bi < brackets.size(); ++bi) {
    std::string bpath = path + ".brackets[" + std::to_string(bi) + "]";
    const json& b = brackets[bi];
    std::size_t li = index_of_label(
        alg.labels, member(b, "left", bpath).get<std::string>(), bpath + ".left");
    std::size_t ri = index_of_label(
        alg.labels, member(b, "right", bpath).get<std::string>(), bpath + ".right");
    if (!given.insert({li, ri}).second)
      fail(bpath, "bracket [" + alg.labels[li] + "," + alg.labels[ri] + "] given twice");
    const json& value = member(b, "value", bpath);
    if (!value.is_object()) fail(bpath + ".value", "expected {label: coeff, ...}");
    std::vector<Scalar> coeffs(d, Scalar::zero(f));
    for (const auto& [key, coeff] : value.items()) {
      std::size_t k = index_of_label(alg.labels, key, bpath + ".value");
      coeffs[k] = parse_scalar(coeff, f, bpath + ".value." + key);
    }
    entries.push_back(Entry{li, ri, std::move(coeffs)});
  }
  for (const auto& e : entries)
    for (std::size_t k = 0; k < d; ++k) alg.constants.set(e.i, e.j, k, e.coeffs[k]);
  // a pair given only one way gets the antisymmetric completion
  for (const auto& e : entries) {
    if (e.i == e.j || given.count({e.j, e.i})) continue;
    for (std::size_t k = 0; k < d; ++k) alg.constants.set(e.j, e.i, k, -e.coeffs[k]);
  }
  return alg;
}

std::vector<NcPolynomial> parse_word_list(const json& j,
                                          const std::vector<std::string>& generators,
                                          const Field& f, const std::string& path) {
  if (!j.is_array() || j.size() != generators.size())
    fail(path, "expected " + std::to_string(generators.size()) + " generator images");
  std::vector<NcPolynomial> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(path, "generator images must be bracket-word strings");
    try {
      out.push_back(parse_lie_expression(j[i].get<std::string>(), generators, f));
    } catch (const ParseError& e) {
      fail(path + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return out;
}

std::vector<NcPolynomial> zero_words(std::size_t count, const Field& f) {
  return std::vector<NcPolynomial>(count, NcPolynomial::zero(f));
}

} // namespace

ExtensionDocument parse_document_json(const json& root) {
  if (!root.is_object()) fail("$", "document must be a JSON object");
  ExtensionDocument doc;
  doc.field = parse_field(member(root, "field", "$"), "$.field");
  const Field& f = doc.field;

  // quotient
  doc.quotient = parse_algebra_block(member(root, "quotient", "$"), f, "$.quotient");
  std::size_t dh = doc.quotient.labels.size();

  // kernel
  const json& kj = member(root, "kernel", "$");
  doc.kernel_variant = member(kj, "variant", "$.kernel").get<std::string>();
  std::vector<std::string> free_gens, second_labels;
  FreeProductKernel fp;
  if (doc.kernel_variant == "finite") {
    doc.finite_kernel = parse_algebra_block(kj, f, "$.kernel");
  } else if (doc.kernel_variant == "free") {
    free_gens = parse_labels(member(kj, "generators", "$.kernel"), "$.kernel.generators");
    doc.structured_kernel = FreeKernel{free_gens};
  } else if (doc.kernel_variant == "free_plus_abelian") {
    free_gens = parse_labels(member(kj, "generators", "$.kernel"), "$.kernel.generators");
    second_labels =
        parse_labels(member(kj, "abelian_basis", "$.kernel"), "$.kernel.abelian_basis");
    doc.structured_kernel = DirectSumKernel{free_gens, false, second_labels};
  } else if (doc.kernel_variant == "free_plus_free") {
    free_gens = parse_labels(member(kj, "generators", "$.kernel"), "$.kernel.generators");
    second_labels = parse_labels(member(kj, "second_generators", "$.kernel"),
                                 "$.kernel.second_generators");
    doc.structured_kernel = DirectSumKernel{free_gens, true, second_labels};
  } else if (doc.kernel_variant == "free_product") {
    const json& factors = member(kj, "factors", "$.kernel");
    if (!factors.is_array() || factors.empty())
      fail("$.kernel.factors", "expected a non-empty array of factors");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::string fpath = "$.kernel.factors[" + std::to_string(i) + "]";
      const json& fac = factors[i];
      std::string type = member(fac, "type", fpath).get<std::string>();
      FreeProductKernel::Factor factor;
      if (type == "abelian") {
        factor.is_free = false;
        factor.labels = parse_labels(member(fac, "basis", fpath), fpath + ".basis");
      } else if (type == "free") {
        factor.is_free = true;
        factor.labels = parse_labels(member(fac, "generators", fpath), fpath + ".generators");
      } else {
        fail(fpath + ".type", "factor type must be \"abelian\" or \"free\"");
      }
      fp.factors.push_back(std::move(factor));
    }
    doc.structured_kernel = fp;
  } else {
    fail("$.kernel.variant", "unknown variant '" + doc.kernel_variant +
                                 "' (expected finite, free, free_plus_abelian, "
                                 "free_plus_free or free_product)");
  }

  // phi: keyed by quotient label; missing entries act as zero
  json phi_j = root.contains("phi") ? root.at("phi") : json::object();
  if (!phi_j.is_object()) fail("$.phi", "expected an object keyed by quotient labels");
  for (const auto& [key, unused] : phi_j.items())
    index_of_label(doc.quotient.labels, key, "$.phi");
  auto phi_entry = [&](std::size_t a) -> const json* {
    auto it = phi_j.find(doc.quotient.labels[a]);
    return it == phi_j.end() ? nullptr : &*it;
  };

  if (doc.kernel_variant == "finite") {
    std::size_t dn = doc.finite_kernel->labels.size();
    FiniteDimAction act;
    for (std::size_t a = 0; a < dh; ++a) {
      const json* e = phi_entry(a);
      std::string path = "$.phi." + doc.quotient.labels[a];
      act.phi.push_back(e ? parse_matrix(*e, dn, dn, f, path) : Matrix::zero(dn, dn, f));
    }
    doc.action = std::move(act);
  } else if (doc.kernel_variant == "free") {
    FreeAction act;
    for (std::size_t a = 0; a < dh; ++a) {
      const json* e = phi_entry(a);
      std::string path = "$.phi." + doc.quotient.labels[a];
      act.images.push_back(e ? parse_word_list(*e, free_gens, f, path)
                             : zero_words(free_gens.size(), f));
    }
    doc.action = std::move(act);
  } else if (doc.kernel_variant == "free_plus_abelian" ||
             doc.kernel_variant == "free_plus_free") {
    bool second_free = (doc.kernel_variant == "free_plus_free");
    std::size_t m = free_gens.size(), n2 = second_labels.size();
    DirectSumAction act;
    for (std::size_t a = 0; a < dh; ++a) {
      const json* e = phi_entry(a);
      std::string path = "$.phi." + doc.quotient.labels[a];
      DirectSumAction::PerGenerator g;
      if (e && !e->is_object()) fail(path, "expected an object with free/second parts");
      const json* first = (e && e->contains("free")) ? &e->at("free") : nullptr;
      g.on_free = first ? parse_word_list(*first, free_gens, f, path + ".free")
                        : zero_words(m, f);
      if (second_free) {
        const json* second = (e && e->contains("second")) ? &e->at("second") : nullptr;
        g.on_second = second ? parse_word_list(*second, second_labels, f, path + ".second")
                             : zero_words(n2, f);
        if (e && e->contains("cross")) fail(path + ".cross", "cross maps need an abelian summand");
      } else {
        const json* second = (e && e->contains("abelian")) ? &e->at("abelian") : nullptr;
        g.on_second = second ? parse_matrix(*second, n2, n2, f, path + ".abelian")
                             : Matrix::zero(n2, n2, f);
        if (e && e->contains("cross"))
          g.cross = parse_matrix(e->at("cross"), n2, m, f, path + ".cross");
      }
      act.gens.push_back(std::move(g));
    }
    doc.action = std::move(act);
  } else {
    FreeProductAction act;
    for (std::size_t a = 0; a < dh; ++a) {
      const json* e = phi_entry(a);
      std::string path = "$.phi." + doc.quotient.labels[a];
      if (e && (!e->is_array() || e->size() != fp.factors.size()))
        fail(path, "expected one action per factor");
      std::vector<FreeProductAction::FactorAction> per_factor;
      for (std::size_t fi = 0; fi < fp.factors.size(); ++fi) {
        const auto& factor = fp.factors[fi];
        std::string fpath = path + "[" + std::to_string(fi) + "]";
        if (factor.is_free) {
          per_factor.emplace_back(e ? parse_word_list((*e)[fi], factor.labels, f, fpath)
                                    : zero_words(factor.size(), f));
        } else {
          per_factor.emplace_back(
              e ? parse_matrix((*e)[fi], factor.size(), factor.size(), f, fpath)
                : Matrix::zero(factor.size(), factor.size(), f));
        }
      }
      act.gens.push_back(std::move(per_factor));
    }
    doc.action = std::move(act);
  }

  // module
  const json& mj = member(root, "module", "$");
  const json& dim_j = member(mj, "dim", "$.module");
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0)
    fail("$.module.dim", "module dimension must be a positive integer");
  doc.coefficients.dim = dim_j.get<std::size_t>();
  std::size_t dm = doc.coefficients.dim;

  std::vector<std::string> kernel_action_labels;
  if (doc.kernel_variant == "finite") kernel_action_labels = doc.finite_kernel->labels;
  if (doc.kernel_variant == "free") kernel_action_labels = free_gens;
  if (mj.contains("kernel_action")) {
    const json& ka = mj.at("kernel_action");
    if (!ka.is_object()) fail("$.module.kernel_action", "expected an object");
    if (kernel_action_labels.empty() && !ka.empty())
      fail("$.module.kernel_action",
           "kernel action on coefficients is unsupported for this kernel family");
    doc.coefficients.kernel_action.assign(kernel_action_labels.size(),
                                          Matrix::zero(dm, dm, f));
    for (const auto& [key, value] : ka.items()) {
      std::size_t i = index_of_label(kernel_action_labels, key, "$.module.kernel_action");
      doc.coefficients.kernel_action[i] =
          parse_matrix(value, dm, dm, f, "$.module.kernel_action." + key);
    }
  } else if (doc.kernel_variant == "finite") {
    doc.coefficients.kernel_action.assign(kernel_action_labels.size(),
                                          Matrix::zero(dm, dm, f));
  }

  doc.coefficients.quotient_action.assign(dh, Matrix::zero(dm, dm, f));
  if (mj.contains("quotient_action")) {
    const json& qa = mj.at("quotient_action");
    if (!qa.is_object()) fail("$.module.quotient_action", "expected an object");
    for (const auto& [key, value] : qa.items()) {
      std::size_t a = index_of_label(doc.quotient.labels, key, "$.module.quotient_action");
      doc.coefficients.quotient_action[a] =
          parse_matrix(value, dm, dm, f, "$.module.quotient_action." + key);
    }
  }
  return doc;
}

ExtensionDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document_json(root);
}

std::string ExtensionDocument::family_name() const { return kernel_variant; }

SplitExtension ExtensionDocument::build() const {
  LieAlgebra h(quotient.labels, quotient.constants);
  KernelSpec kernel = [&]() -> KernelSpec {
    if (finite_kernel)
      return FiniteDimKernel{LieAlgebra(finite_kernel->labels, finite_kernel->constants)};
    return *structured_kernel;
  }();
  return SplitExtension(std::move(kernel), std::move(h), action, coefficients);
}

std::vector<ValidationEntry> ExtensionDocument::check() const {
  std::vector<ValidationEntry> out;
  ValidationReport quotient_rep =
      validate_structure_constants(quotient.constants, quotient.labels);
  out.push_back(ValidationEntry{"quotient", quotient_rep.ok, quotient_rep.problems});

  ValidationReport kernel_rep;
  if (finite_kernel)
    kernel_rep = validate_structure_constants(finite_kernel->constants, finite_kernel->labels);
  out.push_back(ValidationEntry{"kernel", kernel_rep.ok, kernel_rep.problems});

  if (!quotient_rep.ok || !kernel_rep.ok) {
    out.push_back(ValidationEntry{
        "action and coefficients", false,
        {"skipped: the kernel or quotient algebra is already invalid"}});
    return out;
  }
  LieAlgebra h(quotient.labels, quotient.constants);
  KernelSpec kernel = [&]() -> KernelSpec {
    if (finite_kernel)
      return FiniteDimKernel{LieAlgebra(finite_kernel->labels, finite_kernel->constants)};
    return *structured_kernel;
  }();
  ValidationReport rep = validate_extension(kernel, h, action, coefficients);
  out.push_back(ValidationEntry{"action and coefficients", rep.ok, rep.problems});
  return out;
}

namespace {

Report base_report(const std::string& command, const ExtensionDocument& doc) {
  Report r;
  r.command = command;
  r.field = doc.field.name();
  r.kernel_family = doc.family_name();
  return r;
}

SpectralSection spectral_section(const DoubleComplex& dc, const RunOptions& opts) {
  SpectralSection sec;
  for (std::size_t q = 0; q <= dc.max_q(); ++q) sec.row_dims.push_back(dc.rows().dim(q));
  CollapseInfo info = length_and_collapse(dc);
  std::size_t cap = opts.max_page.value_or(info.pages.back().r());
  for (const auto& pg : info.pages) {
    if (pg.r() > cap && pg.r() != info.pages.back().r()) continue;
    sec.pages.push_back(PageDims{pg.r(), pg.dimension_table()});
  }
  for (const auto& rec : info.census)
    sec.census.push_back(CensusEntry{rec.r, rec.p, rec.q, rec.rank});
  sec.length = info.length;
  sec.collapse_page = info.collapse_page;
  sec.stable_grid = info.pages.back().dimension_table();
  sec.totals = total_cohomology(dc);
  return sec;
}

} // namespace

Report run_command(const std::string& command, const ExtensionDocument& doc,
                   const RunOptions& opts) {
  auto started = std::chrono::steady_clock::now();
  Report r = base_report(command, doc);
  if (command == "check") {
    r.validation = doc.check();
  } else if (command == "cohomology") {
    SplitExtension ext = doc.build();
    CohomologySection sec;
    std::vector<LieModule> modules = kernel_cohomology_modules(ext);
    for (const auto& m : modules) sec.kernel_betti.push_back(m.dim());
    sec.e2_grid = e2_reference_grid(ext);
    if (ext.kernel_is_finite_dim()) {
      sec.total_betti = betti_numbers(total_module(ext));
    } else {
      sec.notes.push_back("total cohomology reference unavailable: "
                          "the kernel is not finite-dimensional");
    }
    r.cohomology = std::move(sec);
  } else if (command == "ss") {
    SplitExtension ext = doc.build();
    DoubleComplex dc = build_double_complex(ext);
    r.spectral = spectral_section(dc, opts);
  } else if (command == "verify") {
    SplitExtension ext = doc.build();
    TheoremReport rep = verify_theorems(ext);
    for (const auto& c : rep.checks)
      r.theorems.push_back(
          TheoremEntry{c.id, c.statement, c.hypotheses_met, c.pass, c.details});
  } else {
    throw ParseError("unknown command '" + command +
                     "' (expected check, cohomology, ss or verify)");
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

} // namespace hsseq
