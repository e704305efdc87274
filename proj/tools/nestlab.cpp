// nestlab: command-line front end. The verdict goes to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 validation error, 2 parse or usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nestlab/error.hpp"
#include "nestlab/workbench/document.hpp"
#include "nestlab/workbench/run.hpp"

namespace wb = nestlab::workbench;

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nestlab::ParseError("cannot read document \"" + path + "\"");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const wb::Verdict& v, const std::string& format) {
  std::cout << (format == "table" ? wb::format_table(v) : wb::format_json(v));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-dimensional nest algebra workbench"};
  std::string command;
  std::optional<std::string> argument;
  std::optional<std::string> doc_path;
  wb::RunOptions opts;
  std::string format = "json";

  std::string commands;
  for (const auto& c : wb::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("argument", argument,
                 "chain-check kind, chain-predict kind, or proptest suite (" + [] {
                   std::string s;
                   for (const auto& n : wb::suite_names()) s += n + ", ";
                   return s + "all)";
                 }());
  app.add_option("--doc", doc_path, "nestlab/1 document (\"-\" for stdin)");
  app.add_option("--seed", opts.seed, "proptest seed")->capture_default_str();
  app.add_option("--cases", opts.cases, "proptest random cases per property")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  wb::Verdict failure{command, nullptr, std::nullopt, std::nullopt};
  try {
    std::optional<wb::WorkbenchDoc> doc;
    if (doc_path) doc = wb::parse_document(read_all(*doc_path));
    return emit(wb::run(command, argument, doc, opts), format);
  } catch (const nestlab::ParseError& e) {
    std::cerr << "nestlab: parse error: " << e.what() << "\n";
    failure.result = wb::error_result("parse-error", e.what());
    emit(failure, format);
    return 2;
  } catch (const nestlab::Error& e) {
    std::cerr << "nestlab: " << nestlab::errc_name(e.code()) << ": " << e.what() << "\n";
    failure.result = wb::error_result(std::string(nestlab::errc_name(e.code())), e.what());
    emit(failure, format);
    return 1;
  }
}
