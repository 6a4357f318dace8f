#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canon/proof/budget.hpp"
#include "canon/syntax/ast.hpp"

namespace canon::proof {

using syntax::Formula;

enum class Rule { Alpha, Beta, Gamma, Delta };
std::string to_string(Rule rule);

struct TableauStep {
  Rule rule;
  Formula premise;
  std::vector<Formula> conclusions;
  // Instance term of a gamma step, fresh parameter of a delta step.
  std::optional<syntax::Term> instance;
};

/// One branch segment: linear steps, then either a beta split into two
/// children or a closing clash. A clash is a single literal `~t = t` (modulo
/// the branch equations) or a complementary pair.
struct TableauNode {
  std::vector<TableauStep> steps;
  std::optional<Formula> split;
  std::vector<TableauNode> children;
  std::vector<Formula> clash;
};

struct Certificate {
  std::vector<Formula> roots;
  TableauNode tree;
};

struct TableauResult {
  bool closed = false;
  bool budget_spent = false;
  std::size_t steps = 0;
  std::optional<Certificate> certificate;
};

/// Ground tableau with equality handled by congruence closure at the leaves.
/// Expansion order: alpha and delta before beta, gamma rounds last; within a
/// class the earliest formula on the branch goes first. Gamma instances range
/// over the closed terms of the branch closed under function symbols up to
/// budget.max_term_depth; delta introduces parameters `_p0`, `_p1`, ...
TableauResult run_tableau(const std::vector<Formula>& roots, const Budget& budget);

/// Replays a certificate: every step must be a correct rule application to
/// a formula on its branch, parameters must be fresh, every leaf must clash.
bool check_certificate(const Certificate& certificate, std::string* error = nullptr);

}  // namespace canon::proof
