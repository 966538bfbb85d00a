#ifndef HSSEQ_DOCUMENT_HPP
#define HSSEQ_DOCUMENT_HPP

#include <optional>
#include <string>

#include "hsseq/report.hpp"
#include "hsseq/spectral_sequence.hpp"

namespace hsseq {

/// Unvalidated structure constants plus labels, straight from a document.
struct RawAlgebra {
  std::vector<std::string> labels;
  StructureConstants constants{0, Field::rationals()};
};

/// A parsed extension document: schema-checked (shapes, labels, field)
/// but not yet algebraically validated. `build` constructs the validated
/// extension and throws ValidationError on axiom violations; `check`
/// reports them component by component instead.
struct ExtensionDocument {
  Field field;
  std::string kernel_variant;  // finite | free | free_plus_abelian | free_plus_free | free_product
  std::optional<RawAlgebra> finite_kernel;
  std::optional<KernelSpec> structured_kernel;  // everything except finite
  RawAlgebra quotient;
  KernelAction action;
  CoefficientData coefficients;

  SplitExtension build() const;
  std::vector<ValidationEntry> check() const;
  std::string family_name() const;
};

/// Parses the JSON text of an extension document. Throws ParseError with
/// location context on malformed syntax or schema violations.
ExtensionDocument parse_document(const std::string& text);
ExtensionDocument parse_document_json(const nlohmann::json& j);

struct RunOptions {
  std::optional<std::size_t> max_page;
};

/// Executes one of the commands check | cohomology | ss | verify.
Report run_command(const std::string& command, const ExtensionDocument& doc,
                   const RunOptions& opts = {});

} // namespace hsseq

#endif
