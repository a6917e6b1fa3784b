#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bshopf/cli.hpp"
#include "bshopf/errors.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw bshopf::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Building sets, chromatic invariants and cd-indices"};
  bshopf::cli::JobSpec spec;
  std::string input, m_range;
  app.add_option("command", spec.command,
                 "closure | chi | csf | zetainv | eulerian | cdindex | tutte | beta | selftest")
      ->required();
  app.add_option("input", input, "input file, or - for standard input");
  app.add_option("--basis", spec.basis, "csf basis: monomial or powersum");
  app.add_option("--n", spec.n, "n for beta");
  app.add_option("--m-range", m_range, "evaluate at m = A..B");
  app.add_option("--format", spec.format, "json or text");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!m_range.empty()) spec.m_range = bshopf::cli::parse_m_range(m_range);
    if (spec.command != "selftest") {
      if (input.empty()) throw bshopf::InputError("missing input file");
      spec.document = read_all(input);
    }
  } catch (const bshopf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const bshopf::cli::JobResult r = bshopf::cli::run(spec);
  std::cout << r.output;
  if (!r.diagnostics.empty()) std::cerr << "error: " << r.diagnostics << "\n";
  return r.exit_code;
}
