// Exhaustive bottom-up chart parser over the binary schemata, with a unary
// closure for bare-NP promotion and signature-based deduplication.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "jpgram/lexicon.hpp"
#include "jpgram/rules.hpp"
#include "jpgram/sign.hpp"

namespace jpgram {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownTokenError : public ParseError {
 public:
  UnknownTokenError(const std::string& token, int position)
      : ParseError("unknown token '" + token + "' at position " + std::to_string(position)),
        token(token),
        position(position) {}
  std::string token;
  int position;
};

struct Diagnostic {
  Span span;
  FailReason reason;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
  friend auto operator<=>(const Diagnostic&, const Diagnostic&) = default;
};

class Chart {
 public:
  explicit Chart(int n_tokens);

  bool add(SignPtr s);  // false if a derivation-equivalent edge exists
  const std::vector<SignPtr>& cell(int start, int end) const;
  std::vector<SignPtr> all_edges() const;
  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::vector<std::vector<SignPtr>>> cells_;
  std::vector<std::vector<std::set<std::string>>> seen_;
};

struct ParseResult {
  std::vector<SignPtr> analyses;         // complete spanning utterances/clauses
  std::vector<Diagnostic> diagnostics;   // populated when analyses is empty
};

class Parser {
 public:
  Parser(const Lexicon& lexicon, const TypeLattice& lattice)
      : lexicon_(lexicon), lattice_(lattice) {}

  // Builds the full chart. Throws UnknownTokenError / ParseError (empty input).
  Chart chart(const std::vector<std::string>& tokens) const;
  ParseResult parse(const std::vector<std::string>& tokens) const;

  const TypeLattice& lattice() const { return lattice_; }
  const Lexicon& lexicon() const { return lexicon_; }

 private:
  Chart chart(const std::vector<std::string>& tokens,
              std::set<Diagnostic>* diagnostics) const;

  const Lexicon& lexicon_;
  const TypeLattice& lattice_;
};

std::vector<std::string> tokenize(const std::string& sentence);

// Analyses of a finished chart: complete spanning utterances, or complete
// spanning clauses when no SAP closed the sentence.
std::vector<SignPtr> spanning_analyses(const Chart& chart);

struct CorpusLine {
  std::string text;               // tokens joined, without the '*' marker
  std::vector<std::string> tokens;
  bool expect_grammatical = true;
};

struct CorpusLineResult {
  CorpusLine line;
  int analyses = 0;
  std::string error;  // unknown token etc.; excluded from pass/fail
  bool errored() const { return !error.empty(); }
  bool matched() const {
    return !errored() && (analyses > 0) == line.expect_grammatical;
  }
};

struct CorpusReport {
  std::vector<CorpusLineResult> lines;
  int passed = 0;
  int failed = 0;
  int errors = 0;
  bool all_matched() const { return failed == 0; }
};

// One sentence per line, whitespace-tokenized; leading '*' marks
// expected-ungrammatical; '#' comments and blank lines are skipped.
std::vector<CorpusLine> load_corpus(const std::string& text);

CorpusReport parse_corpus(const Parser& parser, const std::string& corpus_text);

}  // namespace jpgram
