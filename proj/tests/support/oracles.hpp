#pragma once

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code paths with src/.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canon/syntax/ast.hpp"
#include "canon/syntax/signature.hpp"

namespace oracle {

using canon::syntax::Formula;
using canon::syntax::Signature;
using canon::syntax::Term;

/// Every byte string of length <= max_len over `alphabet` that parses as a
/// sentence and is its own canonical form, sorted length-then-lex.
std::vector<std::string> brute_force_sentences(const Signature& sig, const std::string& alphabet,
                                               std::size_t max_len);

/// Substitution for a closed replacement term, written directly over the tree.
Formula naive_substitute(const Formula& f, const std::string& var, const Term& closed);

/// Random formula over `sig` with free variables drawn from `vars`.
Formula random_formula(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars,
                       int depth);
Term random_term(std::mt19937& rng, const Signature& sig, const std::vector<std::string>& vars, int depth);

/// Naive congruence closure: iterate pairwise merging to a fixpoint.
/// Returns a class id for every universe index.
std::vector<std::size_t> naive_closure(const std::vector<Term>& universe,
                                       const std::vector<std::pair<Term, Term>>& equations);

/// Brute-force finite structure over {0..n-1}.
struct Table {
  std::size_t size = 0;
  std::vector<std::pair<std::string, std::size_t>> constants;
  // name -> flattened table indexed in mixed radix (first argument most significant)
  std::vector<std::pair<std::string, std::vector<std::size_t>>> functions;
  std::vector<std::pair<std::string, std::vector<bool>>> relations;
};

bool evaluate(const Table& m, const Formula& f);

/// Every structure for `sig` over {0..n-1}, in a fixed odometer order.
std::vector<Table> all_structures(const Signature& sig, std::size_t n);

/// True iff some structure of size <= max_size satisfies all of `sentences`.
bool satisfiable_up_to(const Signature& sig, const std::vector<Formula>& sentences, std::size_t max_size);

}  // namespace oracle

#include "canon/proof/structure.hpp"

namespace oracle {

/// Copies a complete library structure into the oracle's table form.
Table to_table(const canon::proof::FiniteStructure& m);

}  // namespace oracle
