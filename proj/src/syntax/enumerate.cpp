#include "canon/syntax/enumerate.hpp"

#include <algorithm>

#include "canon/syntax/print.hpp"

namespace canon::syntax {

SentenceEnumerator::SentenceEnumerator(Signature signature) : sig_(std::move(signature)) {}

void SentenceEnumerator::argument_tuples(std::size_t total, std::size_t arity, std::size_t scope,
                                         std::vector<std::pair<std::string, std::vector<Term>>>& out) {
  // Partial tuples are grown slot by slot; the last slot takes the remainder.
  struct Partial {
    std::string text;
    std::vector<Term> args;
    std::size_t used;
  };
  std::vector<Partial> partial{{"", {}, 0}};
  for (std::size_t slot = 0; slot < arity; ++slot) {
    std::vector<Partial> next;
    std::size_t slots_left = arity - slot - 1;
    for (const auto& p : partial) {
      std::size_t remaining = total - p.used;
      if (remaining < slots_left + 1) continue;
      std::size_t lo = slots_left == 0 ? remaining : 1;
      std::size_t hi = remaining - slots_left;
      for (std::size_t len = lo; len <= hi; ++len) {
        for (const auto& t : terms(len, scope)) {
          Partial q = p;
          if (slot > 0) q.text += ", ";
          q.text += t.text;
          q.args.push_back(t.term);
          q.used += len;
          next.push_back(std::move(q));
        }
      }
    }
    partial = std::move(next);
  }
  for (auto& p : partial) out.emplace_back(std::move(p.text), std::move(p.args));
}

const std::vector<SentenceEnumerator::TermItem>& SentenceEnumerator::terms(std::size_t length, std::size_t scope) {
  Key key{length, scope};
  if (auto it = term_memo_.find(key); it != term_memo_.end()) return it->second;
  std::vector<TermItem> items;
  for (std::size_t i = 0; i < scope; ++i) {
    auto name = bound_name(i);
    if (name.size() == length) items.push_back({name, Term::variable(name)});
  }
  for (const auto& c : sig_.constants())
    if (c.size() == length) items.push_back({c, Term::constant(c)});
  for (const auto& f : sig_.functions()) {
    std::size_t overhead = f.name.size() + 2 + 2 * (f.arity - 1);
    if (length < overhead + f.arity) continue;
    std::vector<std::pair<std::string, std::vector<Term>>> tuples;
    argument_tuples(length - overhead, f.arity, scope, tuples);
    for (auto& [text, args] : tuples)
      items.push_back({f.name + "(" + text + ")", Term::apply(f.name, std::move(args))});
  }
  return term_memo_.emplace(key, std::move(items)).first->second;
}

const std::vector<SentenceEnumerator::Item>& SentenceEnumerator::formulas(std::size_t length, std::size_t scope) {
  Key key{length, scope};
  if (auto it = formula_memo_.find(key); it != formula_memo_.end()) return it->second;
  std::vector<Item> items;
  for (const auto& r : sig_.relations()) {
    if (r.arity == 0) {
      if (r.name.size() == length) items.push_back({r.name, Formula::atom(r.name)});
      continue;
    }
    std::size_t overhead = r.name.size() + 2 + 2 * (r.arity - 1);
    if (length < overhead + r.arity) continue;
    std::vector<std::pair<std::string, std::vector<Term>>> tuples;
    argument_tuples(length - overhead, r.arity, scope, tuples);
    for (auto& [text, args] : tuples)
      items.push_back({r.name + "(" + text + ")", Formula::atom(r.name, std::move(args))});
  }
  if (length >= 5) {
    for (std::size_t l = 1; l + 1 + 3 <= length; ++l) {
      std::size_t r = length - 3 - l;
      for (const auto& a : terms(l, scope))
        for (const auto& b : terms(r, scope))
          items.push_back({a.text + " = " + b.text, Formula::equal(a.term, b.term)});
    }
  }
  if (length >= 2) {
    // Copy: the recursive call may rehash the memo.
    auto inner = formulas(length - 1, scope);
    for (const auto& f : inner) items.push_back({"~" + f.text, Formula::negation(f.formula)});
  }
  struct Op {
    Formula::Kind kind;
    const char* text;
  };
  static const Op ops[] = {{Formula::Kind::And, " & "}, {Formula::Kind::Or, " | "}, {Formula::Kind::Implies, " -> "}};
  for (const auto& op : ops) {
    std::size_t overhead = 2 + std::char_traits<char>::length(op.text);
    if (length < overhead + 2) continue;
    for (std::size_t l = 1; l + 1 + overhead <= length; ++l) {
      auto lhs = formulas(l, scope);
      const auto& rhs = formulas(length - overhead - l, scope);
      for (const auto& a : lhs)
        for (const auto& b : rhs)
          items.push_back({"(" + a.text + op.text + b.text + ")", Formula::binary(op.kind, a.formula, b.formula)});
    }
  }
  auto var = bound_name(scope);
  std::size_t quant_overhead = 7 + var.size() + 2;
  if (length > quant_overhead) {
    auto body = formulas(length - quant_overhead, scope + 1);
    for (const auto& b : body) {
      items.push_back({"forall " + var + ". " + b.text, Formula::forall(var, b.formula)});
      items.push_back({"exists " + var + ". " + b.text, Formula::exists(var, b.formula)});
    }
  }
  return formula_memo_.emplace(key, std::move(items)).first->second;
}

const std::vector<EnumeratedSentence>& SentenceEnumerator::bucket(std::size_t length) {
  if (auto it = buckets_.find(length); it != buckets_.end()) return it->second;
  std::vector<EnumeratedSentence> out;
  for (const auto& item : formulas(length, 0)) out.push_back({item.text, item.formula});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.text < b.text; });
  return buckets_.emplace(length, std::move(out)).first->second;
}

std::vector<EnumeratedSentence> SentenceEnumerator::first(std::size_t n) {
  std::vector<EnumeratedSentence> out;
  for (std::size_t len = 1; out.size() < n; ++len) {
    const auto& b = bucket(len);
    for (const auto& s : b) {
      if (out.size() == n) break;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Formula> enumerate_sentences(const Signature& signature, std::size_t n) {
  SentenceEnumerator e(signature);
  std::vector<Formula> out;
  out.reserve(n);
  for (auto& s : e.first(n)) out.push_back(std::move(s.formula));
  return out;
}

}  // namespace canon::syntax
