#include "report.hpp"

#include "canon/syntax/print.hpp"

namespace canon::report {

namespace {

Json elements(const proof::Structure& m, const std::vector<proof::Element>& es) {
  Json out = Json::array();
  for (auto e : es) out.push_back(m.describe(e));
  return out;
}

}  // namespace

Json budget(const proof::Budget& b) {
  return Json{{"max_steps", b.max_steps}, {"max_term_depth", b.max_term_depth}, {"max_model_size", b.max_model_size}};
}

Json header(const Header& h) {
  Json inputs = Json::object();
  for (const auto& [k, v] : h.inputs) inputs[k] = v;
  return Json{{"command", h.command},
              {"inputs", inputs},
              {"parameters",
               {{"horizon", h.horizon},
                {"depth", h.depth},
                {"closure_depth", h.closure_depth},
                {"eval_range", h.eval_range},
                {"rounds", h.rounds},
                {"plugin", h.plugin},
                {"budget", budget(h.budget)}}}};
}

Json theory(const syntax::Theory& t) {
  Json sig{{"constants", t.signature.constants()}, {"functions", Json::array()}, {"relations", Json::array()}};
  for (const auto& f : t.signature.functions()) sig["functions"].push_back({{"name", f.name}, {"arity", f.arity}});
  for (const auto& r : t.signature.relations()) sig["relations"].push_back({{"name", r.name}, {"arity", r.arity}});
  Json axioms = Json::array();
  for (const auto& a : t.axioms) axioms.push_back({{"text", syntax::print(a)}, {"canonical", syntax::canonical(a)}});
  return Json{{"name", t.name}, {"plugin", t.plugin}, {"signature", sig}, {"axioms", axioms}};
}

Json finite_structure(const proof::FiniteStructure& m) {
  Json out{{"size", m.size()}, {"constants", Json::object()}, {"functions", Json::object()}, {"relations", Json::object()}};
  const auto& sig = m.signature();
  for (const auto& c : sig.constants()) {
    auto v = m.constant(c);
    out["constants"][c] = v ? Json(*v) : Json(nullptr);
  }
  for (const auto& f : sig.functions()) {
    Json cells = Json::array();
    for (const auto& v : m.function_table(f.name)) cells.push_back(v ? Json(*v) : Json(nullptr));
    out["functions"][f.name] = cells;
  }
  for (const auto& r : sig.relations()) {
    Json cells = Json::array();
    for (const auto& v : m.relation_table(r.name)) cells.push_back(v ? Json(*v) : Json(nullptr));
    out["relations"][r.name] = cells;
  }
  return out;
}

Json front(const henkin::CompleteFront& f) {
  Json decided = Json::array();
  for (const auto& d : f.decided())
    decided.push_back({{"stage", d.stage}, {"sentence", d.text}, {"polarity", henkin::to_string(d.polarity)}});
  Json ledger = Json::array();
  for (const auto& e : f.ledger())
    ledger.push_back({{"constant", e.constant.name()},
                      {"existential", e.text},
                      {"axiom", syntax::print(e.axiom)},
                      {"origin", e.origin}});
  Json log = Json::array();
  for (const auto& s : f.stage_log())
    log.push_back({{"stage", s.stage},
                   {"phase", s.phase},
                   {"sentence", s.sentence},
                   {"verdict", s.verdict},
                   {"evidence", s.evidence},
                   {"steps", s.steps}});
  return Json{{"theory", f.base().name},
              {"horizon", f.horizon()},
              {"window", f.window()},
              {"oracle", f.oracle().id()},
              {"decided", decided},
              {"ledger", ledger},
              {"stage_log", log},
              {"sentence_count", f.sentences().size()}};
}

Json truth_lemma(const henkin::TruthLemmaReport& r) {
  return Json{{"checked", r.checked}, {"out_of_scope", r.out_of_scope}, {"mismatches", r.mismatches}, {"pass", r.pass()}};
}

Json term_model(const henkin::TermModel& m) {
  Json classes = Json::array();
  for (auto e : m.elements(m.class_count())) {
    Json members = Json::array();
    for (auto idx : m.partition().members(static_cast<std::size_t>(e)))
      members.push_back(syntax::print(m.universe()[idx]));
    classes.push_back({{"element", e}, {"representative", syntax::print(m.representative(e))}, {"members", members}});
  }
  Json relations = Json::object();
  for (const auto& [name, table] : m.relation_table()) {
    Json rows = Json::array();
    for (const auto& [args, value] : table) rows.push_back({{"args", args}, {"value", value}});
    relations[name] = rows;
  }
  return Json{{"depth", m.depth()},
              {"universe_size", m.universe().size()},
              {"class_count", m.class_count()},
              {"classes", classes},
              {"relations", relations},
              {"congruence_violations", m.congruence_violations()}};
}

Json computable_model(const compactness::ComputableModel& m) {
  Json table = Json::array();
  for (const auto& [name, value] : m.constant_table())
    table.push_back({{"constant", name}, {"element", value}, {"value", m.describe(value)}});
  return Json{{"plugin", m.plugin()}, {"constants", table}};
}

Json model_check(const compactness::ModelCheckReport& r) {
  return Json{{"eval_range", r.eval_range},
              {"checked", r.checked},
              {"failures", r.failures},
              {"unknown", r.unknown},
              {"pass", r.pass()}};
}

Json closure(const compactness::SkolemSubstructure& s) {
  Json members = Json::array();
  for (auto e : s.members()) {
    Json alts = Json::array();
    for (const auto& a : s.alternatives(e)) alts.push_back(syntax::print(a));
    members.push_back({{"element", e},
                       {"value", s.describe(e)},
                       {"provenance", syntax::print(s.provenance(e))},
                       {"alternatives", alts},
                       {"level", s.level(e)},
                       {"frontier", s.is_frontier(e)}});
  }
  return Json{{"depth", s.depth()}, {"size", s.members().size()}, {"members", members}};
}

Json sat_report(const compactness::SatReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    Json entry{{"subset", x.subset},
               {"status", compactness::to_string(x.status)},
               {"exhausted_up_to", x.exhausted_up_to},
               {"steps", x.steps}};
    if (x.model) {
      entry["verified"] = x.verified;
      entry["model"] = finite_structure(*x.model);
    }
    if (x.prover_inconsistent) entry["prover_inconsistent"] = *x.prover_inconsistent;
    results.push_back(entry);
  }
  return Json{{"theory", r.theory},
              {"horizon", r.horizon},
              {"policy", r.policy},
              {"results", results},
              {"all_satisfiable", r.all_satisfiable()}};
}

Json model_map(const backforth::ModelMap& m) {
  Json pairs = Json::array();
  for (const auto& [s, t] : m.assignment())
    pairs.push_back({{"source", s}, {"target", t}, {"source_value", m.source().describe(s)},
                     {"target_value", m.target().describe(t)}});
  return Json{{"provenance", m.provenance()},
              {"assignment", pairs},
              {"injective", m.injective()},
              {"function_violations", m.function_violations()}};
}

Json eta(const category::EtaComponent& e) {
  return Json{{"map", model_map(e.map)},
              {"domain_size", e.domain_size},
              {"injective", e.injective()},
              {"surjective", e.surjective()},
              {"missed", elements(e.map.target(), e.missed)},
              {"doubly_hit", elements(e.map.target(), e.doubly_hit)}};
}

Json elementary(const backforth::ElementaryReport& r, bool all_records) {
  auto truth = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json records = Json::array();
  for (const auto& rec : r.records) {
    if (!all_records && rec.agree()) continue;
    records.push_back({{"formula", rec.formula},
                       {"tuple", rec.tuple},
                       {"left", truth(rec.left)},
                       {"right", truth(rec.right)},
                       {"agree", rec.agree()}});
  }
  return Json{{"eval_range", r.eval_range},
              {"checked", r.records.size()},
              {"disagreements", r.disagreements()},
              {all_records ? "records" : "disagreeing", records},
              {"pass", r.pass()}};
}

Json partial_iso(const backforth::PartialIso& iso) {
  Json pairs = Json::array();
  for (const auto& [l, r] : iso.pairs())
    pairs.push_back({{"left", l}, {"right", r}, {"left_value", iso.left().describe(l)},
                     {"right_value", iso.right().describe(r)}});
  Json log = Json::array();
  for (const auto& s : iso.log()) {
    Json step{{"round", s.round}, {"side", s.side}, {"left", iso.left().describe(s.left)},
              {"right", iso.right().describe(s.right)}};
    if (s.type.position) step["position"] = *s.type.position;
    step["type"] = s.type.literals;
    log.push_back(step);
  }
  return Json{{"pairs", pairs}, {"log", log}, {"violations", iso.violations()}};
}

Json translation(const category::Translation& f) {
  Json map = Json::object();
  for (const auto& [a, b] : f.symbols()) map[a] = b;
  return Json{{"name", f.name()}, {"symbols", map}};
}

Json translation_report(const category::TranslationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"sentence", c.sentence},
               {"translated", c.translated},
               {"source", proof::to_string(c.source)},
               {"status", category::to_string(c.status)}};
    if (c.target) entry["target"] = proof::to_string(*c.target);
    checks.push_back(entry);
  }
  using S = category::TranslationCheck::Status;
  return Json{{"translation", r.translation},
              {"checks", checks},
              {"preserved", r.count(S::Preserved)},
              {"violated", r.count(S::Violated)},
              {"unknown", r.count(S::Unknown)},
              {"pass", r.pass()}};
}

Json naturality(const category::NaturalityReport& r) {
  auto value = [](const proof::Structure& m, const std::optional<proof::Element>& e) {
    return e ? Json(m.describe(*e)) : Json(nullptr);
  };
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"class", e.term},
                       {"eta2_after_F", value(r.eta2.target(), e.via_f)},
                       {"G_after_eta1", value(r.G.target(), e.via_g)},
                       {"agree", e.agree()}});
  Json mismatches = Json::array();
  for (auto x : r.mismatches()) mismatches.push_back(r.eta1.source().describe(x));
  return Json{{"translation", r.translation},
              {"F", model_map(r.F)},
              {"G", model_map(r.G)},
              {"eta1", model_map(r.eta1)},
              {"eta2", model_map(r.eta2)},
              {"squares", entries},
              {"mismatches", mismatches},
              {"pass", r.pass()}};
}

Json functor_laws(const category::FunctorLawReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records)
    records.push_back({{"law", rec.law}, {"checked", rec.checked}, {"failures", rec.failures}, {"pass", rec.pass()}});
  return Json{{"records", records}, {"pass", r.pass()}};
}

namespace {

void render(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out += indent + k + ":\n";
        render(v, indent + "  ", out);
      } else {
        out += indent + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        out += indent + "-\n";
        render(v, indent + "  ", out);
      } else {
        out += indent + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else {
    out += indent + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, "", out);
  return out;
}

}  // namespace canon::report
