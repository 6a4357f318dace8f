#include "canon/henkin/term_model.hpp"

#include <algorithm>
#include <set>

#include "canon/syntax/print.hpp"
#include "canon/syntax/substitute.hpp"

namespace canon::henkin {

using proof::Partition;

std::vector<Term> term_universe(const syntax::Signature& signature, const std::vector<std::string>& constants,
                                std::size_t depth) {
  std::vector<Term> all;
  std::set<std::string> seen;
  for (const auto& c : constants)
    if (seen.insert(c).second) all.push_back(Term::constant(c));
  for (std::size_t d = 1; d <= depth && !signature.functions().empty() && !all.empty(); ++d) {
    std::vector<Term> next;
    for (const auto& f : signature.functions()) {
      std::vector<std::size_t> idx(f.arity, 0);
      for (;;) {
        std::vector<Term> args;
        bool reaches = false;
        for (auto k : idx) {
          args.push_back(all[k]);
          reaches = reaches || all[k].depth() + 1 == d;
        }
        if (reaches) next.push_back(Term::apply(f.name, std::move(args)));
        std::size_t k = 0;
        while (k < f.arity && ++idx[k] == all.size()) idx[k++] = 0;
        if (k == f.arity) break;
      }
    }
    for (auto& t : next)
      if (seen.insert(syntax::print(t)).second) all.push_back(std::move(t));
  }
  std::sort(all.begin(), all.end(), proof::term_enumeration_less);
  return all;
}

TermModel::TermModel(CompleteFront front, std::size_t depth, Partition partition,
                     std::map<std::string, std::map<std::vector<Element>, bool>> relations)
    : front_(std::move(front)), depth_(depth), partition_(std::move(partition)), relations_(std::move(relations)) {
  signature_ = front_.language();
}

std::optional<Element> TermModel::class_of(const Term& t) const {
  auto c = partition_.class_of(t);
  if (!c) return std::nullopt;
  return static_cast<Element>(*c);
}

std::vector<Element> TermModel::elements(std::size_t limit) const {
  std::vector<Element> out;
  for (Element e = 0; e < class_count() && e < limit; ++e) out.push_back(e);
  return out;
}

std::optional<Element> TermModel::constant(const std::string& name) const { return class_of(Term::constant(name)); }

std::optional<Element> TermModel::apply(const std::string& function, std::span<const Element> args) const {
  std::vector<Term> reps;
  for (auto a : args) {
    if (a >= class_count()) return std::nullopt;
    reps.push_back(representative(a));
  }
  if (auto c = class_of(Term::apply(function, reps))) return c;
  // Another choice of members may still land inside the truncation.
  std::vector<std::size_t> idx(args.size(), 0);
  for (;;) {
    std::vector<Term> members;
    for (std::size_t i = 0; i < args.size(); ++i)
      members.push_back(universe()[partition_.members(static_cast<std::size_t>(args[i]))[idx[i]]]);
    if (auto c = class_of(Term::apply(function, members))) return c;
    std::size_t k = 0;
    while (k < args.size() && ++idx[k] == partition_.members(static_cast<std::size_t>(args[k])).size()) idx[k++] = 0;
    if (k == args.size()) return std::nullopt;
  }
}

std::optional<bool> TermModel::holds(const std::string& relation, std::span<const Element> args) const {
  auto r = relations_.find(relation);
  if (r == relations_.end()) return std::nullopt;
  auto it = r->second.find(std::vector<Element>(args.begin(), args.end()));
  if (it == r->second.end()) return std::nullopt;
  return it->second;
}

std::string TermModel::describe(Element e) const { return "[" + syntax::print(representative(e)) + "]"; }

std::vector<std::string> TermModel::congruence_violations() const {
  std::vector<std::string> out;
  for (const auto& t : universe()) {
    if (t.args().empty()) continue;
    std::vector<Element> args;
    for (const auto& a : t.args()) {
      auto c = class_of(a);
      if (!c) break;
      args.push_back(*c);
    }
    if (args.size() != t.args().size()) continue;
    std::vector<Term> reps;
    for (auto a : args) reps.push_back(representative(a));
    auto via_reps = class_of(Term::apply(t.name(), reps));
    if (via_reps && via_reps != class_of(t)) out.push_back(syntax::print(t));
  }
  return out;
}

namespace {

std::vector<std::pair<Term, Term>> asserted_equations(const CompleteFront& front) {
  std::vector<std::pair<Term, Term>> eqs;
  for (const auto& d : front.decided())
    if (d.polarity == Polarity::Asserted && d.sentence.kind() == Formula::Kind::Equal)
      eqs.emplace_back(d.sentence.terms()[0], d.sentence.terms()[1]);
  return eqs;
}

}  // namespace

TermModel build_term_model(const CompleteFront& input, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("term-model depth must be >= 1");
  CompleteFront front = input;
  std::vector<std::string> constants = front.ledger_constants();
  for (const auto& c : front.base().signature.constants()) constants.push_back(c);
  auto universe = term_universe(front.base().signature, constants, depth);

  // Equations between universe terms, in enumeration order of their text.
  std::vector<std::pair<std::string, Formula>> equations;
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      auto eq = Formula::equal(universe[i], universe[j]);
      equations.emplace_back(syntax::canonical(eq), eq);
    }
  std::sort(equations.begin(), equations.end(),
            [](const auto& a, const auto& b) { return syntax::enumeration_less(a.first, b.first); });
  for (const auto& [text, eq] : equations) {
    if (front.polarity_of(text)) continue;
    auto current = proof::congruence_close(asserted_equations(front), universe);
    if (current.same(eq.terms()[0], eq.terms()[1])) continue;
    front.decide_and_record(eq, "diagram");
  }
  auto partition = proof::congruence_close(asserted_equations(front), universe);

  std::map<std::string, std::map<std::vector<Element>, bool>> relations;
  std::size_t k = partition.class_count();
  for (const auto& r : front.base().signature.relations()) {
    auto& table = relations[r.name];
    std::vector<Element> tuple(r.arity, 0);
    if (r.arity > 0 && k == 0) continue;
    for (;;) {
      std::vector<Term> args;
      for (auto e : tuple) args.push_back(partition.representative(static_cast<std::size_t>(e)));
      auto atom = Formula::atom(r.name, args);
      table[tuple] = front.decide_and_record(atom, "diagram") == Polarity::Asserted;
      std::size_t i = r.arity;
      while (i > 0 && ++tuple[i - 1] == k) tuple[--i] = 0;
      if (i == 0) break;
    }
  }
  return TermModel(std::move(front), depth, std::move(partition), std::move(relations));
}

TruthLemmaReport check_truth_lemma(const TermModel& model, std::size_t first_n) {
  TruthLemmaReport report;
  const auto& decided = model.front().decided();
  for (std::size_t i = 0; i < decided.size() && i < first_n; ++i) {
    const auto& d = decided[i];
    if (!d.sentence.is_quantifier_free()) continue;
    auto value = proof::evaluate(model, d.sentence);
    if (!value) {
      ++report.out_of_scope;
      continue;
    }
    ++report.checked;
    if (*value != (d.polarity == Polarity::Asserted)) report.mismatches.push_back(d.text);
  }
  return report;
}

TruthLemmaReport check_witnesses(const TermModel& model) {
  TruthLemmaReport report;
  for (const auto& e : model.front().ledger()) {
    if (!e.existential.body().is_quantifier_free()) {
      ++report.out_of_scope;
      continue;
    }
    auto instance = syntax::substitute(e.existential.body(), e.existential.symbol(), e.constant.term());
    auto value = proof::evaluate(model, instance);
    if (!value) {
      ++report.out_of_scope;
      continue;
    }
    ++report.checked;
    if (!*value) report.mismatches.push_back(e.text);
  }
  return report;
}

}  // namespace canon::henkin
