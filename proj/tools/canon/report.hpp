#pragma once

// JSON renderings of every result type. Keys keep insertion order, so equal
// inputs give byte-identical reports.

#include <map>
#include <string>

#include <json.hpp>

#include "canon/backforth/backforth.hpp"
#include "canon/category/naturality.hpp"
#include "canon/compactness/satisfiability.hpp"
#include "canon/henkin/term_model.hpp"

namespace canon::report {

using Json = nlohmann::ordered_json;

struct Header {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::size_t horizon = 0;
  std::size_t depth = 0;
  std::size_t closure_depth = 0;
  std::size_t eval_range = 0;
  std::size_t rounds = 0;
  std::string plugin;
  proof::Budget budget;
};

Json header(const Header& h);
Json budget(const proof::Budget& b);

Json theory(const syntax::Theory& t);
Json finite_structure(const proof::FiniteStructure& m);
Json front(const henkin::CompleteFront& f);
Json truth_lemma(const henkin::TruthLemmaReport& r);
Json term_model(const henkin::TermModel& m);
Json computable_model(const compactness::ComputableModel& m);
Json model_check(const compactness::ModelCheckReport& r);
Json closure(const compactness::SkolemSubstructure& s);
Json sat_report(const compactness::SatReport& r);
Json model_map(const backforth::ModelMap& m);
Json eta(const category::EtaComponent& e);
Json elementary(const backforth::ElementaryReport& r, bool all_records);
Json partial_iso(const backforth::PartialIso& iso);
Json translation(const category::Translation& f);
Json translation_report(const category::TranslationReport& r);
Json naturality(const category::NaturalityReport& r);
Json functor_laws(const category::FunctorLawReport& r);

/// Indented key: value rendering of a report.
std::string render_text(const Json& j);

}  // namespace canon::report
