#include "canon/syntax/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace canon::syntax {

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<Term> args;
  std::size_t depth = 0;
  bool closed = true;
};

Term Term::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Variable;
  node->name = std::move(name);
  node->closed = false;
  return Term(std::move(node));
}

Term Term::constant(std::string name) { return apply(std::move(name), {}); }

Term Term::apply(std::string function, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Application;
  node->name = std::move(function);
  for (const auto& a : args) {
    node->depth = std::max(node->depth, a.depth() + 1);
    node->closed = node->closed && a.is_closed();
  }
  node->args = std::move(args);
  return Term(std::move(node));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
std::span<const Term> Term::args() const noexcept { return node_->args; }
bool Term::is_closed() const noexcept { return node_->closed; }
std::size_t Term::depth() const noexcept { return node_->depth; }

bool Term::is_henkin() const noexcept {
  return !is_variable() && !node_->name.empty() && node_->name.front() == '$';
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (is_variable()) {
    out.insert(name());
    return;
  }
  for (const auto& a : args()) a.collect_variables(out);
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  auto lhs = a.args();
  auto rhs = b.args();
  return std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

struct Formula::Node {
  Kind kind;
  std::string symbol;
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::size_t rank = 0;
};

std::shared_ptr<Formula::Node> Formula::make_node(Kind kind) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  return node;
}

Formula Formula::atom(std::string relation, std::vector<Term> args) {
  auto node = make_node(Kind::Atom);
  node->symbol = std::move(relation);
  node->terms = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::equal(Term lhs, Term rhs) {
  auto node = make_node(Kind::Equal);
  node->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = make_node(Kind::Not);
  node->rank = operand.quantifier_rank();
  node->children = {std::move(operand)};
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies)
    throw std::invalid_argument("Formula::binary: not a binary connective");
  auto node = make_node(kind);
  node->rank = std::max(lhs.quantifier_rank(), rhs.quantifier_rank());
  node->children = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Kind::Implies, std::move(lhs), std::move(rhs));
}

Formula Formula::quantifier(Kind kind, std::string var, Formula body) {
  if (kind != Kind::Forall && kind != Kind::Exists)
    throw std::invalid_argument("Formula::quantifier: not a quantifier");
  auto node = make_node(kind);
  node->symbol = std::move(var);
  node->rank = body.quantifier_rank() + 1;
  node->children = {std::move(body)};
  return Formula(std::move(node));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(body));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(body));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  auto k = kind();
  return k == Kind::And || k == Kind::Or || k == Kind::Implies;
}

bool Formula::is_quantifier() const noexcept {
  return kind() == Kind::Forall || kind() == Kind::Exists;
}

const std::string& Formula::symbol() const noexcept { return node_->symbol; }
std::span<const Term> Formula::terms() const noexcept { return node_->terms; }

const Formula& Formula::left() const {
  if (node_->children.empty()) throw std::logic_error("Formula::left on atomic formula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() < 2) throw std::logic_error("Formula::right on non-binary formula");
  return node_->children[1];
}

bool Formula::is_quantifier_free() const noexcept { return node_->rank == 0; }
std::size_t Formula::quantifier_rank() const noexcept { return node_->rank; }

namespace {

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atomic()) {
    std::set<std::string> vars;
    for (const auto& t : f.terms()) t.collect_variables(vars);
    for (const auto& v : vars)
      if (!bound.contains(v)) out.insert(v);
    return;
  }
  if (f.is_quantifier()) {
    bool fresh = bound.insert(f.symbol()).second;
    free_vars(f.body(), bound, out);
    if (fresh) bound.erase(f.symbol());
    return;
  }
  free_vars(f.left(), bound, out);
  if (f.is_binary()) free_vars(f.right(), bound, out);
}

void term_constants(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) return;
  if (t.is_constant()) out.insert(t.name());
  for (const auto& a : t.args()) term_constants(a, out);
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, out;
  free_vars(*this, bound, out);
  return out;
}

void Formula::collect_constants(std::set<std::string>& out) const {
  if (is_atomic()) {
    for (const auto& t : terms()) term_constants(t, out);
    return;
  }
  for (const auto& c : node_->children) c.collect_constants(out);
}

std::set<std::string> Formula::constants() const {
  std::set<std::string> out;
  collect_constants(out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.symbol == y.symbol && x.terms == y.terms && x.children == y.children;
}

std::string_view to_string(Formula::Kind kind) noexcept {
  switch (kind) {
    case Formula::Kind::Atom: return "atom";
    case Formula::Kind::Equal: return "equation";
    case Formula::Kind::Not: return "negation";
    case Formula::Kind::And: return "conjunction";
    case Formula::Kind::Or: return "disjunction";
    case Formula::Kind::Implies: return "implication";
    case Formula::Kind::Forall: return "universal";
    case Formula::Kind::Exists: return "existential";
  }
  return "?";
}

}  // namespace canon::syntax
