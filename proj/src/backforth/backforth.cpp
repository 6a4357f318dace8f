#include "canon/backforth/backforth.hpp"

#include <algorithm>
#include <set>

#include "canon/syntax/print.hpp"

namespace canon::backforth {

using syntax::Formula;
using syntax::Term;

TypeUnrealizable::TypeUnrealizable(const std::string& message, std::optional<std::size_t> round)
    : std::runtime_error(round ? message + " (round " + std::to_string(*round) + ")" : message), round_(round) {}

namespace {

// Odometer over tuples of length `arity` drawn from {0..n-1}.
template <typename F>
void for_tuples(std::size_t n, std::size_t arity, F&& visit) {
  if (n == 0 && arity > 0) return;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    visit(idx);
    std::size_t k = arity;
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) return;
  }
}

std::string param_name(std::size_t i) { return "p" + std::to_string(i); }

std::optional<std::string> order_position(const Structure& m, Element e, const std::vector<Element>& params) {
  const auto& rels = m.signature().relations();
  if (rels.size() != 1 || rels[0].name != "lt" || rels[0].arity != 2 || !m.signature().functions().empty())
    return std::nullopt;
  auto lt = [&](Element a, Element b) {
    Element args[] = {a, b};
    return m.holds("lt", args) == true;
  };
  for (std::size_t i = 0; i < params.size(); ++i)
    if (params[i] == e) return "= " + param_name(i);
  std::optional<std::size_t> lo, hi;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (lt(params[i], e) && (!lo || lt(params[*lo], params[i]))) lo = i;
    if (lt(e, params[i]) && (!hi || lt(params[i], params[*hi]))) hi = i;
  }
  return "(" + (lo ? param_name(*lo) : std::string("-inf")) + ", " + (hi ? param_name(*hi) : std::string("+inf")) + ")";
}

}  // namespace

TypeDescription describe_type(const Structure& m, Element e, const std::vector<Element>& params) {
  TypeDescription t;
  // Position 0 is x, position i + 1 is parameter i.
  std::vector<Element> values{e};
  std::vector<std::string> names{"x"};
  for (std::size_t i = 0; i < params.size(); ++i) {
    values.push_back(params[i]);
    names.push_back(param_name(i));
  }
  auto render = [&](const std::string& symbol, const std::vector<std::size_t>& idx) {
    std::string s = symbol;
    if (idx.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + names[idx[i]];
    return s + ")";
  };
  auto mentions_x = [](const std::vector<std::size_t>& idx) {
    return std::find(idx.begin(), idx.end(), 0) != idx.end();
  };
  for (std::size_t i = 0; i < params.size(); ++i)
    t.literals.push_back((e == params[i] ? "x = " : "~x = ") + names[i + 1]);
  for (const auto& r : m.signature().relations()) {
    for_tuples(values.size(), r.arity, [&](const std::vector<std::size_t>& idx) {
      if (!mentions_x(idx)) return;
      std::vector<Element> args;
      for (auto i : idx) args.push_back(values[i]);
      auto v = m.holds(r.name, args);
      t.literals.push_back((v ? (*v ? "" : "~") : "?") + render(r.name, idx));
    });
  }
  for (const auto& f : m.signature().functions()) {
    for_tuples(values.size(), f.arity, [&](const std::vector<std::size_t>& idx) {
      if (!mentions_x(idx)) return;
      std::vector<Element> args;
      for (auto i : idx) args.push_back(values[i]);
      auto v = m.apply(f.name, args);
      std::string rhs = "?";
      if (v) {
        rhs = "other";
        for (std::size_t i = 0; i < values.size(); ++i)
          if (values[i] == *v) {
            rhs = names[i];
            break;
          }
      }
      t.literals.push_back(render(f.name, idx) + " = " + rhs);
    });
  }
  t.position = order_position(m, e, params);
  return t;
}

PartialIso::PartialIso(std::shared_ptr<const Structure> left, std::shared_ptr<const Structure> right)
    : left_(std::move(left)), right_(std::move(right)) {}

std::optional<Element> PartialIso::image(Element l) const {
  for (const auto& [a, b] : pairs_)
    if (a == l) return b;
  return std::nullopt;
}

std::optional<Element> PartialIso::preimage(Element r) const {
  for (const auto& [a, b] : pairs_)
    if (b == r) return a;
  return std::nullopt;
}

void PartialIso::seed(Element l, Element r) { pairs_.emplace_back(l, r); }
void PartialIso::record(IsoStep step) {
  pairs_.emplace_back(step.left, step.right);
  log_.push_back(std::move(step));
}

std::vector<std::string> PartialIso::violations() const {
  std::vector<std::string> out;
  std::size_t n = pairs_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((pairs_[i].first == pairs_[j].first) != (pairs_[i].second == pairs_[j].second))
        out.push_back("equality between pairs " + std::to_string(i) + " and " + std::to_string(j));
  auto describe = [&](const std::string& sym, const std::vector<std::size_t>& idx) {
    std::string s = sym + "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + left_->describe(pairs_[idx[i]].first);
    return s + ")";
  };
  for (const auto& r : left_->signature().relations()) {
    for_tuples(n, r.arity, [&](const std::vector<std::size_t>& idx) {
      std::vector<Element> l, rr;
      for (auto i : idx) {
        l.push_back(pairs_[i].first);
        rr.push_back(pairs_[i].second);
      }
      if (left_->holds(r.name, l) != right_->holds(r.name, rr)) out.push_back(describe(r.name, idx));
    });
  }
  for (const auto& f : left_->signature().functions()) {
    for_tuples(n, f.arity, [&](const std::vector<std::size_t>& idx) {
      std::vector<Element> l, rr;
      for (auto i : idx) {
        l.push_back(pairs_[i].first);
        rr.push_back(pairs_[i].second);
      }
      auto a = left_->apply(f.name, l);
      auto b = right_->apply(f.name, rr);
      std::optional<Element> ia = a ? image(*a) : std::nullopt;
      std::optional<Element> pb = b ? preimage(*b) : std::nullopt;
      if (ia.has_value() != pb.has_value() || (ia && ia != b)) out.push_back(describe(f.name, idx));
    });
  }
  return out;
}

ModelMap PartialIso::as_map(const std::string& provenance) const { return ModelMap(provenance, left_, right_, pairs_); }

namespace {

std::vector<Element> candidates(const Structure& m, std::size_t search) {
  if (auto n = m.finite_size()) return m.elements(*n);
  return m.elements(search);
}

PartialIso extend(const PartialIso& iso, Element e, bool forth, std::size_t round, std::size_t search) {
  if (forth ? iso.image(e).has_value() : iso.preimage(e).has_value())
    throw AlreadyPaired(std::string(forth ? "left" : "right") + " element " +
                        (forth ? iso.left() : iso.right()).describe(e) + " is already paired");
  const Structure& from = forth ? iso.left() : iso.right();
  const Structure& to = forth ? iso.right() : iso.left();
  std::vector<Element> from_params, to_params;
  for (const auto& [l, r] : iso.pairs()) {
    from_params.push_back(forth ? l : r);
    to_params.push_back(forth ? r : l);
  }
  auto type = describe_type(from, e, from_params);
  std::set<Element> used(to_params.begin(), to_params.end());
  for (auto c : candidates(to, search)) {
    if (used.contains(c)) continue;
    if (describe_type(to, c, to_params) == type) {
      PartialIso out = iso;
      out.record({forth ? "forth" : "back", round, forth ? e : c, forth ? c : e, type});
      return out;
    }
  }
  std::string where = type.position ? " at " + *type.position : "";
  throw TypeUnrealizable("no " + std::string(forth ? "right" : "left") + " realizer for the type of " +
                         from.describe(e) + where + " among " + std::to_string(candidates(to, search).size()) +
                         " candidates");
}

std::optional<Element> least_unpaired(const PartialIso& iso, bool left) {
  const Structure& m = left ? iso.left() : iso.right();
  std::size_t limit = m.finite_size() ? *m.finite_size() : iso.pairs().size() + 1;
  for (auto e : m.elements(limit))
    if (!(left ? iso.image(e) : iso.preimage(e))) return e;
  return std::nullopt;
}

}  // namespace

PartialIso extend_forth(const PartialIso& iso, Element left, std::size_t search) {
  return extend(iso, left, true, iso.log().size(), search);
}

PartialIso extend_back(const PartialIso& iso, Element right, std::size_t search) {
  return extend(iso, right, false, iso.log().size(), search);
}

PartialIso run_back_and_forth(PartialIso iso, std::size_t rounds, std::size_t search) {
  for (std::size_t r = 0; r < rounds; ++r) {
    bool forth = r % 2 == 0;
    auto e = least_unpaired(iso, forth);
    if (!e) continue;
    try {
      iso = extend(iso, *e, forth, r, search);
    } catch (const TypeUnrealizable& err) {
      throw TypeUnrealizable(err.what(), r);
    }
  }
  return iso;
}

PartialIso run_back_and_forth(std::shared_ptr<const Structure> left, std::shared_ptr<const Structure> right,
                              std::size_t rounds, std::size_t search) {
  return run_back_and_forth(PartialIso(std::move(left), std::move(right)), rounds, search);
}

bool ElementaryReport::pass() const { return disagreements() == 0; }

std::size_t ElementaryReport::disagreements() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.agree(); }));
}

ElementaryReport check_elementary(const ModelMap& map, const std::vector<Formula>& formulas,
                                  const std::vector<std::vector<Element>>& tuples, std::size_t eval_range) {
  ElementaryReport report;
  report.eval_range = eval_range;
  for (const auto& f : formulas) {
    auto free = f.free_variables();
    std::vector<std::string> vars(free.begin(), free.end());
    for (const auto& tuple : tuples) {
      if (tuple.size() != vars.size()) continue;
      ElementaryRecord rec;
      rec.formula = syntax::print(f);
      proof::Assignment src, dst;
      bool mapped = true;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        rec.tuple.push_back(map.source().describe(tuple[i]));
        src[vars[i]] = tuple[i];
        if (auto img = map(tuple[i])) dst[vars[i]] = *img;
        else mapped = false;
      }
      rec.left = proof::evaluate(map.source(), f, src, eval_range);
      if (mapped) rec.right = proof::evaluate(map.target(), f, dst, eval_range);
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

ElementaryReport check_elementary(const ModelMap& map, const std::vector<Formula>& formulas, std::size_t eval_range) {
  std::vector<Element> dom;
  for (const auto& [s, _] : map.assignment()) dom.push_back(s);
  std::size_t arity = 0;
  for (const auto& f : formulas) arity = std::max(arity, f.free_variables().size());
  std::vector<std::vector<Element>> tuples;
  for (std::size_t a = 0; a <= arity; ++a)
    for_tuples(dom.size(), a, [&](const std::vector<std::size_t>& idx) {
      std::vector<Element> t;
      for (auto i : idx) t.push_back(dom[i]);
      tuples.push_back(std::move(t));
    });
  return check_elementary(map, formulas, tuples, eval_range);
}

std::vector<Formula> formula_battery(const syntax::Signature& signature) {
  const std::vector<Term> free{Term::variable("x"), Term::variable("y")};
  const std::vector<Term> with_z{Term::variable("x"), Term::variable("y"), Term::variable("z")};
  auto atoms_over = [&](const std::vector<Term>& vars) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j) out.push_back(Formula::equal(vars[i], vars[j]));
    for (const auto& r : signature.relations()) {
      if (r.arity > 3) continue;
      for_tuples(vars.size(), r.arity, [&](const std::vector<std::size_t>& idx) {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(vars[i]);
        out.push_back(Formula::atom(r.name, std::move(args)));
      });
    }
    for (const auto& f : signature.functions()) {
      if (f.arity > 2) continue;
      for_tuples(vars.size(), f.arity, [&](const std::vector<std::size_t>& idx) {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(vars[i]);
        auto app = Term::apply(f.name, std::move(args));
        for (const auto& v : vars) out.push_back(Formula::equal(app, v));
      });
    }
    return out;
  };
  auto mentions_z = [](const Formula& f) { return f.free_variables().contains("z"); };

  std::vector<Formula> battery = atoms_over(free);
  std::vector<Formula> z_atoms;
  for (auto& a : atoms_over(with_z))
    if (mentions_z(a)) z_atoms.push_back(std::move(a));
  for (const auto& a : z_atoms) {
    battery.push_back(Formula::exists("z", a));
    battery.push_back(Formula::forall("z", a));
    battery.push_back(Formula::exists("z", Formula::negation(a)));
  }
  for (std::size_t i = 0; i < z_atoms.size(); ++i)
    for (std::size_t j = i + 1; j < z_atoms.size(); ++j)
      battery.push_back(Formula::exists("z", Formula::conjunction(z_atoms[i], z_atoms[j])));
  return battery;
}

}  // namespace canon::backforth
