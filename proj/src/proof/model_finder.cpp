#include "canon/proof/model_finder.hpp"

#include <algorithm>
#include <set>

namespace canon::proof {

using syntax::Formula;
using syntax::Signature;

namespace {

struct Cell {
  enum class Kind { Constant, Function, Relation } kind;
  std::string name;
  std::size_t index = 0;
};

class Search {
 public:
  Search(FiniteStructure& m, const std::vector<Formula>& sentences, std::vector<Cell> cells,
         std::size_t max_steps, std::size_t& steps)
      : m_(m), sentences_(sentences), cells_(std::move(cells)),
        max_steps_(max_steps), steps_(steps) {}

  // true: model found; false: subtree exhausted. Throws BudgetOut.
  bool run(std::size_t pos, long max_used) {
    if (++steps_ > max_steps_) throw BudgetOut{};
    bool all_true = true;
    for (const auto& s : sentences_) {
      auto v = evaluate(m_, s);
      if (v == false) return false;
      if (!v) all_true = false;
    }
    if (all_true) return true;
    if (pos == cells_.size()) return false;
    const Cell& cell = cells_[pos];
    switch (cell.kind) {
      case Cell::Kind::Constant: {
        // Elements above max_used + 1 are interchangeable with max_used + 1.
        long limit = std::min<long>(static_cast<long>(m_.size()) - 1, max_used + 1);
        for (long e = 0; e <= limit; ++e) {
          m_.set_constant(cell.name, static_cast<Element>(e));
          if (run(pos + 1, std::max(max_used, e))) return true;
        }
        m_.set_constant(cell.name, std::nullopt);
        return false;
      }
      case Cell::Kind::Function:
        for (Element e = 0; e < m_.size(); ++e) {
          m_.set_function(cell.name, cell.index, e);
          if (run(pos + 1, max_used)) return true;
        }
        m_.set_function(cell.name, cell.index, std::nullopt);
        return false;
      case Cell::Kind::Relation:
        for (bool b : {false, true}) {
          m_.set_relation(cell.name, cell.index, b);
          if (run(pos + 1, max_used)) return true;
        }
        m_.set_relation(cell.name, cell.index, std::nullopt);
        return false;
    }
    return false;
  }

  struct BudgetOut {};

 private:
  FiniteStructure& m_;
  const std::vector<Formula>& sentences_;
  std::vector<Cell> cells_;
  std::size_t max_steps_;
  std::size_t& steps_;
};

void occurring(const syntax::Term& t, std::vector<std::string>& constants, std::set<std::string>& symbols) {
  if (t.is_variable()) return;
  if (t.args().empty()) {
    if (std::find(constants.begin(), constants.end(), t.name()) == constants.end()) constants.push_back(t.name());
    return;
  }
  symbols.insert(t.name());
  for (const auto& a : t.args()) occurring(a, constants, symbols);
}

void occurring(const Formula& f, std::vector<std::string>& constants, std::set<std::string>& symbols) {
  if (f.kind() == Formula::Kind::Atom) symbols.insert(f.symbol());
  if (f.is_atomic()) {
    for (const auto& t : f.terms()) occurring(t, constants, symbols);
    return;
  }
  occurring(f.left(), constants, symbols);
  if (f.is_binary()) occurring(f.right(), constants, symbols);
}

}  // namespace

ModelSearch find_model(const Signature& signature, const std::vector<Formula>& sentences, std::size_t min_size,
                       std::size_t max_size, std::size_t max_steps) {
  Signature sig = signature_of(sentences, signature);
  std::vector<std::string> constants;
  std::set<std::string> symbols;
  for (const auto& s : sentences) occurring(s, constants, symbols);

  ModelSearch result;
  for (std::size_t n = std::max<std::size_t>(min_size, 1); n <= max_size; ++n) {
    FiniteStructure m(sig, n);
    std::vector<Cell> cells;
    for (const auto& c : constants) cells.push_back({Cell::Kind::Constant, c, 0});
    for (const auto& f : sig.functions())
      if (symbols.contains(f.name))
        for (std::size_t i = 0; i < m.table_size(f.arity); ++i) cells.push_back({Cell::Kind::Function, f.name, i});
    for (const auto& r : sig.relations())
      if (symbols.contains(r.name))
        for (std::size_t i = 0; i < m.table_size(r.arity); ++i) cells.push_back({Cell::Kind::Relation, r.name, i});
    // Symbols outside the sentences cannot affect their truth.
    for (const auto& c : sig.constants())
      if (std::find(constants.begin(), constants.end(), c) == constants.end()) m.set_constant(c, 0);
    for (const auto& f : sig.functions())
      if (!symbols.contains(f.name))
        for (std::size_t i = 0; i < m.table_size(f.arity); ++i) m.set_function(f.name, i, 0);
    for (const auto& r : sig.relations())
      if (!symbols.contains(r.name))
        for (std::size_t i = 0; i < m.table_size(r.arity); ++i) m.set_relation(r.name, i, false);

    Search search(m, sentences, std::move(cells), max_steps, result.steps);
    try {
      if (search.run(0, -1)) {
        m.complete_defaults();
        result.status = ModelSearch::Status::Found;
        result.model = std::move(m);
        return result;
      }
    } catch (const Search::BudgetOut&) {
      result.status = ModelSearch::Status::BudgetSpent;
      return result;
    }
    result.exhausted_up_to = n;
  }
  result.status = ModelSearch::Status::Exhausted;
  return result;
}

}  // namespace canon::proof
