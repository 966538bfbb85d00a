// Command line front end: reads a split extension description and runs
// validation, cohomology, spectral sequence or theorem verification.
//
// Exit codes: 0 success, 1 invalid input, 2 theorem violation,
// 3 internal invariant failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hsseq/document.hpp"
#include "hsseq/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hsseq::ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::string& command, const std::string& input_path,
        const std::string& format, const std::string& out_path,
        std::optional<std::size_t> max_page) {
  hsseq::ExtensionDocument doc = hsseq::parse_document(read_file(input_path));
  hsseq::RunOptions opts;
  opts.max_page = max_page;
  hsseq::Report report = hsseq::run_command(command, doc, opts);

  std::string rendered =
      format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw hsseq::Error("cannot write '" + out_path + "'");
    out << rendered;
  }

  if (command == "check") {
    for (const auto& entry : report.validation)
      if (!entry.ok) return 1;
  }
  if (command == "verify") {
    for (const auto& t : report.theorems)
      if (t.hypotheses_met && !t.pass) return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of split Lie algebra extensions: exact spectral sequence "
               "computation and theorem verification"};
  app.require_subcommand(1);

  std::string input_path, format = "text", out_path;
  std::optional<std::size_t> max_page;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", input_path, "extension document (JSON)")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-page", max_page, "largest page to include in the report");
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  add_common(app.add_subcommand("check", "validate the document only"));
  add_common(app.add_subcommand(
      "cohomology", "kernel cohomology, reference total cohomology and the E_2 grid"));
  add_common(app.add_subcommand(
      "ss", "all spectral sequence pages to stabilization, census and length"));
  add_common(
      app.add_subcommand("verify", "run the theorem suite; nonzero exit on violation"));

  CLI11_PARSE(app, argc, argv);

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, input_path, format, out_path, max_page);
  } catch (const hsseq::InternalInvariantError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 3;
  } catch (const hsseq::QuotientPreconditionError& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 3;
  } catch (const hsseq::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hsseq::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hsseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
