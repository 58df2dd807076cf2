#include "jpgram/chart_parser.hpp"

#include <sstream>

namespace jpgram {

Chart::Chart(int n_tokens) : n_(n_tokens) {
  cells_.assign(n_ + 1, std::vector<std::vector<SignPtr>>(n_ + 1));
  seen_.assign(n_ + 1, std::vector<std::set<std::string>>(n_ + 1));
}

bool Chart::add(SignPtr s) {
  auto& seen = seen_[s->span.start][s->span.end];
  if (!seen.insert(signature(*s)).second) return false;
  cells_[s->span.start][s->span.end].push_back(std::move(s));
  return true;
}

const std::vector<SignPtr>& Chart::cell(int start, int end) const {
  return cells_[start][end];
}

std::vector<SignPtr> Chart::all_edges() const {
  std::vector<SignPtr> out;
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      out.insert(out.end(), cells_[i][j].begin(), cells_[i][j].end());
  return out;
}

namespace {

bool recordable(FailReason r) { return r != FailReason::incomplete; }

void note(std::set<Diagnostic>* diags, Span span, const RuleOutcome& out) {
  if (diags && out.failure && recordable(*out.failure))
    diags->insert({span, *out.failure});
}

}  // namespace

Chart Parser::chart(const std::vector<std::string>& tokens) const {
  return chart(tokens, nullptr);
}

Chart Parser::chart(const std::vector<std::string>& tokens,
                    std::set<Diagnostic>* diags) const {
  if (tokens.empty()) throw ParseError("empty input");
  const int n = static_cast<int>(tokens.size());
  Chart chart(n);

  auto close_unary = [&](int i, int j) {
    // single pass suffices: promoted copies are not promotable again
    std::vector<SignPtr> snapshot = chart.cell(i, j);
    for (const auto& s : snapshot)
      if (auto promoted = bare_np_adjunct(s)) chart.add(*promoted);
  };

  for (int i = 0; i < n; ++i) {
    auto signs = lexicon_.lookup(tokens[i], i);
    if (signs.empty() && !Lexicon::is_sap(tokens[i]))
      throw UnknownTokenError(tokens[i], i);
    for (auto& s : signs) chart.add(std::move(s));
    if (Lexicon::is_sap(tokens[i])) chart.add(Lexicon::sap_sign(tokens[i], i));
    close_unary(i, i + 1);
  }

  for (int width = 2; width <= n; ++width) {
    for (int i = 0; i + width <= n; ++i) {
      const int j = i + width;
      for (int k = i + 1; k < j; ++k) {
        // snapshots: cells (i,k) and (k,j) are complete before width w
        const auto& lefts = chart.cell(i, k);
        const auto& rights = chart.cell(k, j);
        for (const auto& l : lefts) {
          for (const auto& r : rights) {
            RuleOutcome cmpl = complement_head(lattice_, l, r);
            for (auto& s : cmpl.signs) chart.add(std::move(s));
            note(diags, {i, j}, cmpl);
            RuleOutcome adj = adjunct_head(lattice_, l, r);
            for (auto& s : adj.signs) chart.add(std::move(s));
            note(diags, {i, j}, adj);
            RuleOutcome sap = sap_attach(l, r);
            for (auto& s : sap.signs) chart.add(std::move(s));
            note(diags, {i, j}, sap);
          }
        }
      }
      close_unary(i, j);
    }
  }
  return chart;
}

std::vector<SignPtr> spanning_analyses(const Chart& chart) {
  std::vector<SignPtr> out;
  for (const auto& s : chart.cell(0, chart.size()))
    if (s->utterance || complete_clause(*s)) out.push_back(s);
  return out;
}

ParseResult Parser::parse(const std::vector<std::string>& tokens) const {
  std::set<Diagnostic> diags;
  Chart c = chart(tokens, &diags);
  ParseResult result;
  result.analyses = spanning_analyses(c);
  if (result.analyses.empty())
    result.diagnostics.assign(diags.begin(), diags.end());
  return result;
}

std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> tokens;
  std::istringstream in(sentence);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::vector<CorpusLine> load_corpus(const std::string& text) {
  std::vector<CorpusLine> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    CorpusLine line;
    if (tokens.front() == "*") {
      line.expect_grammatical = false;
      tokens.erase(tokens.begin());
      if (tokens.empty()) continue;
    }
    line.tokens = tokens;
    std::string joined;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    line.text = std::move(joined);
    lines.push_back(std::move(line));
  }
  return lines;
}

CorpusReport parse_corpus(const Parser& parser, const std::string& corpus_text) {
  CorpusReport report;
  for (auto& line : load_corpus(corpus_text)) {
    CorpusLineResult r;
    r.line = line;
    try {
      r.analyses = static_cast<int>(parser.parse(line.tokens).analyses.size());
    } catch (const ParseError& e) {
      r.error = e.what();
    }
    if (r.errored()) ++report.errors;
    else if (r.matched()) ++report.passed;
    else ++report.failed;
    report.lines.push_back(std::move(r));
  }
  return report;
}

}  // namespace jpgram
