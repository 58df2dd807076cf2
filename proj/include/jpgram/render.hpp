#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jpgram/chart_parser.hpp"
#include "jpgram/cooc.hpp"
#include "jpgram/sign.hpp"

namespace jpgram {

// "(cmpl (lex kanojo) (lex ga))"-style derivation tree, daughters in surface order
std::string bracketed(const Sign& sign);

// span text recovered from the token list
std::string span_text(const std::vector<std::string>& tokens, const Span& span);

// "dekimasu(subj=kanojo ga:human, obj=oyogi ga:event) [adjunct adverbial: naNji kara]"
std::string render_pas(const Sign& sign, const std::vector<std::string>& tokens);

nlohmann::json analysis_json(const Sign& sign, const std::vector<std::string>& tokens);
nlohmann::json parse_result_json(const std::vector<std::string>& tokens,
                                 const ParseResult& result);
std::string parse_result_text(const std::vector<std::string>& tokens,
                              const ParseResult& result);

nlohmann::json corpus_report_json(const CorpusReport& report);
std::string corpus_report_text(const CorpusReport& report);

nlohmann::json reconciliation_json(const ReconciliationReport& report);
std::string reconciliation_text(const ReconciliationReport& report);

}  // namespace jpgram
