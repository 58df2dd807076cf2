#include "jpgram/render.hpp"

#include <sstream>

namespace jpgram {

std::string bracketed(const Sign& sign) {
  if (sign.daughters.empty()) return "(lex " + sign.surface + ")";
  std::string out = "(" + std::string(sign.rule);
  for (const auto& d : sign.daughters) out += " " + bracketed(*d);
  return out + ")";
}

std::string span_text(const std::vector<std::string>& tokens, const Span& span) {
  std::string out;
  for (int i = span.start; i < span.end && i < static_cast<int>(tokens.size()); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string render_pas(const Sign& sign, const std::vector<std::string>& tokens) {
  const auto& pas = sign.pas;
  std::ostringstream o;
  o << (pas.predicate.empty() ? "-" : pas.predicate) << '(';
  bool first = true;
  for (const auto& [role, arg] : pas.bound) {
    if (!first) o << ", ";
    first = false;
    o << to_string(role) << '=' << span_text(tokens, arg.span) << ':' << to_string(arg.sort);
  }
  o << ')';
  for (const auto& adj : pas.adjuncts)
    o << " [adjunct " << to_string(adj.flavor) << ": " << span_text(tokens, adj.span) << ']';
  return o.str();
}

nlohmann::json analysis_json(const Sign& sign, const std::vector<std::string>& tokens) {
  nlohmann::json j;
  j["predicate"] = sign.pas.predicate;
  nlohmann::json bound = nlohmann::json::object();
  for (const auto& [role, arg] : sign.pas.bound) {
    bound[to_string(role)] = {{"start", arg.span.start},
                              {"end", arg.span.end},
                              {"text", span_text(tokens, arg.span)},
                              {"sort", to_string(arg.sort)}};
  }
  j["bound"] = bound;
  nlohmann::json adjuncts = nlohmann::json::array();
  for (const auto& adj : sign.pas.adjuncts) {
    adjuncts.push_back({{"start", adj.span.start},
                        {"end", adj.span.end},
                        {"text", span_text(tokens, adj.span)},
                        {"flavor", to_string(adj.flavor)}});
  }
  j["adjuncts"] = adjuncts;
  j["utterance"] = sign.utterance;
  j["question"] = sign.question;
  j["derivation"] = bracketed(sign);
  return j;
}

nlohmann::json parse_result_json(const std::vector<std::string>& tokens,
                                 const ParseResult& result) {
  nlohmann::json j;
  j["sentence"] = span_text(tokens, {0, static_cast<int>(tokens.size())});
  j["analyses_count"] = result.analyses.size();
  nlohmann::json analyses = nlohmann::json::array();
  for (const auto& a : result.analyses) analyses.push_back(analysis_json(*a, tokens));
  j["analyses"] = analyses;
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& d : result.diagnostics) {
    diags.push_back({{"start", d.span.start},
                     {"end", d.span.end},
                     {"text", span_text(tokens, d.span)},
                     {"reason", to_string(d.reason)}});
  }
  j["diagnostics"] = diags;
  return j;
}

std::string parse_result_text(const std::vector<std::string>& tokens,
                              const ParseResult& result) {
  std::ostringstream o;
  o << "sentence: " << span_text(tokens, {0, static_cast<int>(tokens.size())}) << '\n';
  o << "analyses: " << result.analyses.size() << '\n';
  int n = 0;
  for (const auto& a : result.analyses) {
    o << "  [" << ++n << "] " << render_pas(*a, tokens) << '\n';
    o << "      " << bracketed(*a) << '\n';
  }
  if (result.analyses.empty() && !result.diagnostics.empty()) {
    o << "rejections:\n";
    for (const auto& d : result.diagnostics)
      o << "  " << span_text(tokens, d.span) << " -> " << to_string(d.reason) << '\n';
  }
  return o.str();
}

nlohmann::json corpus_report_json(const CorpusReport& report) {
  nlohmann::json j;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["errors"] = report.errors;
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& r : report.lines) {
    nlohmann::json lj;
    lj["text"] = r.line.text;
    lj["expect_grammatical"] = r.line.expect_grammatical;
    if (r.errored()) {
      lj["error"] = r.error;
    } else {
      lj["analyses_count"] = r.analyses;
      lj["matched"] = r.matched();
    }
    lines.push_back(lj);
  }
  j["lines"] = lines;
  return j;
}

std::string corpus_report_text(const CorpusReport& report) {
  std::ostringstream o;
  for (const auto& r : report.lines) {
    if (r.errored()) {
      o << "ERROR " << r.line.text << " (" << r.error << ")\n";
      continue;
    }
    o << (r.matched() ? "ok    " : "FAIL  ");
    o << (r.line.expect_grammatical ? "" : "* ") << r.line.text;
    o << "  [" << r.analyses << " analyses]\n";
  }
  o << "passed " << report.passed << ", failed " << report.failed << ", errors "
    << report.errors << '\n';
  return o.str();
}

nlohmann::json reconciliation_json(const ReconciliationReport& report) {
  nlohmann::json j;
  j["threshold"] = report.threshold;
  auto pairs = [](const std::vector<ParticlePair>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [l, r] : v) arr.push_back({{"left", l}, {"right", r}});
    return arr;
  };
  j["licensed_and_attested"] = pairs(report.licensed_and_attested);
  nlohmann::json unlicensed = nlohmann::json::array();
  for (const auto& p : report.attested_unlicensed)
    unlicensed.push_back({{"left", p.left}, {"right", p.right}, {"count", p.count}});
  j["attested_unlicensed"] = unlicensed;
  j["licensed_unattested"] = pairs(report.licensed_unattested);
  return j;
}

std::string reconciliation_text(const ReconciliationReport& report) {
  std::ostringstream o;
  o << "threshold: " << report.threshold << '\n';
  o << "licensed and attested (" << report.licensed_and_attested.size() << "):\n";
  for (const auto& [l, r] : report.licensed_and_attested) o << "  " << l << ' ' << r << '\n';
  o << "attested but unlicensed (" << report.attested_unlicensed.size() << "):\n";
  for (const auto& p : report.attested_unlicensed)
    o << "  " << p.left << ' ' << p.right << "  (count " << p.count << ")\n";
  o << "licensed but unattested (" << report.licensed_unattested.size() << "):\n";
  for (const auto& [l, r] : report.licensed_unattested) o << "  " << l << ' ' << r << '\n';
  return o.str();
}

}  // namespace jpgram
