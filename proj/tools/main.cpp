#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jpgram/chart_parser.hpp"
#include "jpgram/cooc.hpp"
#include "jpgram/lexicon.hpp"
#include "jpgram/render.hpp"
#include "jpgram/type_lattice.hpp"

#ifndef JPGRAM_DATA_DIR
#define JPGRAM_DATA_DIR "data"
#endif

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("PARTICLE_DATA_DIR"); env && *env) return env;
  return JPGRAM_DATA_DIR;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_parse(const jpgram::Parser& parser, const std::vector<std::string>& tokens,
              bool json) {
  jpgram::ParseResult result;
  try {
    result = parser.parse(tokens);
  } catch (const jpgram::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (json) {
    std::cout << jpgram::parse_result_json(tokens, result).dump(2) << '\n';
  } else {
    std::cout << "analyses: " << result.analyses.size() << '\n';
    int n = 0;
    for (const auto& a : result.analyses) {
      std::cout << '[' << ++n << "] " << jpgram::render_pas(*a, tokens) << '\n'
                << "    " << jpgram::bracketed(*a) << '\n';
    }
    for (const auto& d : result.diagnostics)
      std::cerr << "rejected: " << jpgram::span_text(tokens, d.span) << " ("
                << to_string(d.reason) << ")\n";
  }
  return result.analyses.empty() ? 1 : 0;
}

int run_corpus(const jpgram::Parser& parser, const std::string& corpus_text, bool json) {
  auto report = jpgram::parse_corpus(parser, corpus_text);
  if (json)
    std::cout << jpgram::corpus_report_json(report).dump(2) << '\n';
  else
    std::cout << jpgram::corpus_report_text(report);
  for (const auto& r : report.lines)
    if (r.errored()) std::cerr << "skipped: " << r.line.text << " (" << r.error << ")\n";
  return report.failed == 0 ? 0 : 1;
}

int run_cooc(const jpgram::Lexicon& lexicon, const jpgram::TypeLattice& lattice,
             const std::string& table_csv, int threshold, const std::string& emit,
             bool json) {
  auto counts = jpgram::load_table1(table_csv);
  auto licensing = jpgram::derive_licensing(lexicon, lattice);
  if (emit == "counts") {
    std::cout << jpgram::to_csv(counts);
  } else if (emit == "licensing") {
    std::cout << jpgram::to_csv(licensing);
  } else {
    auto report = jpgram::reconcile(licensing, counts, threshold);
    if (json)
      std::cout << jpgram::reconciliation_json(report).dump(2) << '\n';
    else
      std::cout << jpgram::reconciliation_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unification grammar of Japanese particles: chart parser and "
               "particle-cooccurrence analysis"};
  app.require_subcommand(1);

  std::string lexicon_path, hierarchy_path, format = "text";
  app.add_option("--lexicon", lexicon_path, "lexicon TSV (default: <data>/lexicon.tsv)");
  app.add_option("--hierarchy", hierarchy_path,
                 "particle type hierarchy (default: <data>/hierarchy.txt)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* parse_cmd = app.add_subcommand("parse", "parse one tokenized utterance");
  std::vector<std::string> tokens;
  parse_cmd->add_option("tokens", tokens, "utterance tokens")->required();

  auto* corpus_cmd =
      app.add_subcommand("corpus", "check corpus lines against their grammaticality marks");
  std::string corpus_path;
  corpus_cmd->add_option("--corpus", corpus_path, "corpus file (default: <data>/corpus.txt)");

  auto* cooc_cmd = app.add_subcommand(
      "cooc", "derive the particle-pair licensing matrix and reconcile it with counts");
  std::string table_path, emit = "reconcile";
  int threshold = 10;
  cooc_cmd->add_option("--table1", table_path,
                       "adjacent-pair counts CSV (default: <data>/table1.csv)");
  cooc_cmd->add_option("--threshold", threshold, "attestation threshold");
  cooc_cmd->add_option("--emit", emit, "reconcile | counts | licensing")
      ->check(CLI::IsMember({"reconcile", "counts", "licensing"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  try {
    const std::string dir = data_dir();
    if (hierarchy_path.empty()) hierarchy_path = dir + "/hierarchy.txt";
    if (lexicon_path.empty()) lexicon_path = dir + "/lexicon.tsv";
    auto lattice = jpgram::TypeLattice::load(jpgram::parse_hierarchy(slurp(hierarchy_path)));
    auto lexicon = jpgram::Lexicon::load(slurp(lexicon_path), lattice);
    jpgram::Parser parser(lexicon, lattice);

    if (*parse_cmd) return run_parse(parser, tokens, json);
    if (*corpus_cmd) {
      if (corpus_path.empty()) corpus_path = dir + "/corpus.txt";
      return run_corpus(parser, slurp(corpus_path), json);
    }
    if (*cooc_cmd) {
      if (table_path.empty()) table_path = dir + "/table1.csv";
      return run_cooc(lexicon, lattice, slurp(table_path), threshold, emit, json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
