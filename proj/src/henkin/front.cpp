#include "canon/henkin/front.hpp"

#include <algorithm>
#include <set>

#include "canon/syntax/enumerate.hpp"
#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"
#include "canon/syntax/substitute.hpp"

namespace canon::henkin {

using proof::Consistency;

std::string HenkinConstant::name() const { return "$" + std::to_string(index) + "{" + base + "}"; }

HenkinConstant henkin_constant(const Formula& existential, std::size_t k) {
  if (existential.kind() != Formula::Kind::Exists) throw HenkinError("Henkin constants index existential sentences");
  if (!existential.is_sentence()) throw HenkinError("Henkin constants index sentences, got a formula with free variables");
  return {syntax::canonical(existential), k};
}

std::optional<HenkinConstant> parse_henkin_name(const std::string& name) {
  std::size_t index = 0;
  std::string_view body;
  if (!syntax::split_henkin_name(name, index, body)) return std::nullopt;
  return HenkinConstant{std::string(body), index};
}

Formula witness_axiom(const Formula& existential, const HenkinConstant& c) {
  auto ex = syntax::canonical_form(existential);
  return Formula::implication(ex, syntax::substitute(ex.body(), ex.symbol(), c.term()));
}

std::string to_string(Polarity p) { return p == Polarity::Asserted ? "asserted" : "negated"; }

StageUndecidable::StageUndecidable(std::size_t stage, const std::string& sentence)
    : std::runtime_error("stage " + std::to_string(stage) + " undecidable within budget: " + sentence),
      stage_(stage), sentence_(sentence) {}

CompleteFront::CompleteFront(syntax::Theory base, std::size_t horizon, proof::Budget budget,
                             std::shared_ptr<const proof::ConsistencyOracle> oracle, std::size_t window)
    : base_(std::move(base)), horizon_(horizon), budget_(budget), oracle_(std::move(oracle)), window_(window) {
  for (std::size_t i = 0; i < base_.axioms.size(); ++i)
    sentences_.push_back({base_.axioms[i], "axiom " + std::to_string(i)});
}

std::vector<Formula> CompleteFront::accumulated() const {
  std::vector<Formula> out;
  out.reserve(sentences_.size());
  for (const auto& s : sentences_) out.push_back(s.sentence);
  return out;
}

std::vector<std::string> CompleteFront::ledger_constants() const {
  std::vector<std::string> out;
  for (const auto& e : ledger_) out.push_back(e.constant.name());
  return out;
}

std::vector<std::string> CompleteFront::window_constants() const {
  std::vector<std::string> out;
  for (const auto& e : ledger_)
    for (std::size_t j = 1; j <= window_; ++j) out.push_back(HenkinConstant{e.text, e.constant.index + j}.name());
  return out;
}

syntax::Signature CompleteFront::language() const { return base_.signature.with_constants(ledger_constants()); }

syntax::Signature CompleteFront::stage_language() const {
  auto extra = ledger_constants();
  for (auto& w : window_constants()) extra.push_back(std::move(w));
  return base_.signature.with_constants(extra);
}

std::optional<Polarity> CompleteFront::polarity_of(const std::string& canonical_text) const {
  auto it = decided_index_.find(canonical_text);
  if (it == decided_index_.end()) return std::nullopt;
  return decided_[it->second].polarity;
}

const LedgerEntry* CompleteFront::ledger_entry(const std::string& existential_text) const {
  for (const auto& e : ledger_)
    if (e.text == existential_text) return &e;
  return nullptr;
}

bool CompleteFront::constant_in_use(const std::string& name) const {
  for (const auto& e : ledger_)
    if (e.constant.name() == name) return true;
  return std::any_of(sentences_.begin(), sentences_.end(),
                     [&](const FrontSentence& s) { return s.sentence.constants().contains(name); });
}

Consistency CompleteFront::check_with(const Formula& extra) const {
  auto all = accumulated();
  all.push_back(extra);
  return oracle_->check(stage_language(), all, budget_);
}

Polarity CompleteFront::decide_and_record(const Formula& sentence, const std::string& phase) {
  auto text = syntax::canonical(sentence);
  if (auto p = polarity_of(text)) return *p;
  std::size_t stage = decided_.size();
  auto result = check_with(sentence);
  if (result.status == Consistency::Status::Unknown) throw StageUndecidable(stage, text);
  Polarity polarity =
      result.status == Consistency::Status::Consistent ? Polarity::Asserted : Polarity::Negated;
  Decided d{syntax::canonical_form(sentence), text, polarity, stage};
  decided_index_.emplace(text, decided_.size());
  decided_.push_back(d);
  log_.push_back({stage, phase, text, proof::to_string(result.status), result.evidence, result.steps});
  sentences_.push_back({d.added(), "stage " + std::to_string(stage)});
  if (polarity == Polarity::Asserted && sentence.kind() == Formula::Kind::Exists)
    witness(d.sentence, "stage " + std::to_string(stage));
  return polarity;
}

void CompleteFront::witness(const Formula& existential, const std::string& origin) {
  auto ex = syntax::canonical_form(existential);
  auto text = syntax::canonical(ex);
  if (ledger_entry(text)) return;
  std::size_t k = 0;
  while (constant_in_use(HenkinConstant{text, k}.name())) ++k;
  auto c = henkin_constant(ex, k);
  auto axiom = witness_axiom(ex, c);
  ledger_.push_back({ex, text, c, axiom, origin});
  sentences_.push_back({axiom, "witness " + c.name()});
  auto instance = syntax::substitute(ex.body(), ex.symbol(), c.term());
  if (instance.kind() == Formula::Kind::Exists) witness(instance, "witness");
}

void CompleteFront::import_constant(const Formula& existential, std::size_t k) {
  auto c = henkin_constant(existential, k);
  for (const auto& e : ledger_)
    if (e.constant == c) return;
  if (constant_in_use(c.name())) throw HenkinError("imported constant already occurs in the front: " + c.name());
  auto ex = syntax::canonical_form(existential);
  auto axiom = witness_axiom(ex, c);
  ledger_.push_back({ex, c.base, c, axiom, "import"});
  sentences_.push_back({axiom, "import " + c.name()});
}

std::vector<std::string> CompleteFront::validate() const {
  std::vector<std::string> problems;
  std::set<std::string> texts;
  for (const auto& d : decided_) {
    if (!texts.insert(d.text).second) problems.push_back("sentence decided twice: " + d.text);
    if (!d.sentence.is_sentence()) problems.push_back("decided formula is not a sentence: " + d.text);
  }
  std::set<std::string> present;
  for (const auto& s : sentences_) present.insert(syntax::canonical(s.sentence));
  for (const auto& d : decided_) {
    if (d.polarity != Polarity::Asserted || d.sentence.kind() != Formula::Kind::Exists) continue;
    const auto* entry = ledger_entry(d.text);
    if (!entry) {
      problems.push_back("asserted existential without ledger entry: " + d.text);
    } else if (!present.contains(syntax::canonical(entry->axiom))) {
      problems.push_back("witness axiom missing from front: " + d.text);
    }
  }
  auto status = oracle_->check(stage_language(), accumulated(), budget_).status;
  if (status == Consistency::Status::Inconsistent) problems.push_back("front is inconsistent");
  return problems;
}

bool operator==(const CompleteFront& a, const CompleteFront& b) {
  if (a.decided_.size() != b.decided_.size() || a.ledger_.size() != b.ledger_.size() ||
      a.sentences_.size() != b.sentences_.size() || a.log_.size() != b.log_.size())
    return false;
  for (std::size_t i = 0; i < a.decided_.size(); ++i)
    if (a.decided_[i].text != b.decided_[i].text || a.decided_[i].polarity != b.decided_[i].polarity) return false;
  for (std::size_t i = 0; i < a.ledger_.size(); ++i)
    if (a.ledger_[i].constant != b.ledger_[i].constant || a.ledger_[i].origin != b.ledger_[i].origin) return false;
  for (std::size_t i = 0; i < a.sentences_.size(); ++i)
    if (!(a.sentences_[i].sentence == b.sentences_[i].sentence)) return false;
  for (std::size_t i = 0; i < a.log_.size(); ++i)
    if (a.log_[i].sentence != b.log_[i].sentence || a.log_[i].verdict != b.log_[i].verdict) return false;
  return a.horizon_ == b.horizon_ && a.base_ == b.base_;
}

CompleteFront lindenbaum_extend(const syntax::Theory& theory, std::size_t horizon, const proof::Budget& budget,
                                std::shared_ptr<const proof::ConsistencyOracle> oracle, std::size_t window) {
  budget.validate();
  CompleteFront front(theory, horizon, budget, std::move(oracle), window);
  auto initial = front.oracle().check(theory.signature, theory.axioms, budget);
  if (initial.status == Consistency::Status::Inconsistent)
    throw InconsistentInput("theory '" + theory.name + "' is inconsistent (" + initial.evidence + ")");
  for (std::size_t i = 0; i < theory.axioms.size(); ++i)
    if (theory.axioms[i].kind() == Formula::Kind::Exists) front.witness(theory.axioms[i], "axiom " + std::to_string(i));

  std::optional<syntax::SentenceEnumerator> enumerator;
  for (std::size_t n = 0; n < horizon; ++n) {
    auto sig = front.stage_language();
    if (!enumerator || !(enumerator->signature() == sig)) enumerator.emplace(sig);
    std::optional<Formula> next;
    for (std::size_t len = 1; !next; ++len)
      for (const auto& s : enumerator->bucket(len))
        if (!front.polarity_of(s.text)) {
          next = s.formula;
          break;
        }
    front.decide_and_record(*next, "enumerated");
  }
  return front;
}

}  // namespace canon::henkin
