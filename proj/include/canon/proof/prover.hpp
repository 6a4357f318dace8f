#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "canon/proof/budget.hpp"
#include "canon/proof/structure.hpp"
#include "canon/proof/tableau.hpp"
#include "canon/syntax/signature.hpp"

namespace canon::proof {

struct Verdict {
  enum class Kind { Proved, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Certificate> certificate;
  std::optional<FiniteStructure> counter_model;
  std::size_t steps = 0;
};
std::string to_string(Verdict::Kind kind);

/// Tableau on axioms + {~goal}; if it does not close, finite counter-model
/// search in sizes 1..max_model_size. Symbols of `signature` not occurring in
/// the sentences get default interpretations in counter-models.
Verdict prove(const std::vector<Formula>& axioms, const Formula& goal, const Budget& budget,
              const syntax::Signature& signature = {});

struct Consistency {
  enum class Status { Consistent, Inconsistent, Unknown };
  Status status = Status::Unknown;
  // Finite witness of consistency, when one was found.
  std::optional<FiniteStructure> model;
  // Closed tableau witnessing inconsistency, when one was found.
  std::optional<Certificate> refutation;
  // How the status was established: "finite-model", "tableau", or an
  // oracle-specific tag.
  std::string evidence;
  std::size_t steps = 0;
};
std::string to_string(Consistency::Status status);

/// Consistency test for finite sets of sentences. Implementations may be
/// complete for a class of theories; `id()` names the oracle in reports.
class ConsistencyOracle {
 public:
  virtual ~ConsistencyOracle() = default;
  virtual std::string id() const = 0;
  virtual Consistency check(const syntax::Signature& signature, const std::vector<Formula>& sentences,
                            const Budget& budget) const = 0;
};

/// Finite model search up to budget.max_model_size, then tableau refutation.
class GenericOracle : public ConsistencyOracle {
 public:
  std::string id() const override { return "generic"; }
  Consistency check(const syntax::Signature& signature, const std::vector<Formula>& sentences,
                    const Budget& budget) const override;
};

/// Complete for sentences whose only non-logical symbols are constants and
/// 0-ary relations: such a set is satisfiable iff it has a model with at most
/// (constants + quantifier rank) elements. Other inputs go to GenericOracle.
class EqualityOracle : public ConsistencyOracle {
 public:
  std::string id() const override { return "equality"; }
  Consistency check(const syntax::Signature& signature, const std::vector<Formula>& sentences,
                    const Budget& budget) const override;
};

Consistency consistent(const std::vector<Formula>& sentences, const Budget& budget,
                       const syntax::Signature& signature = {});

enum class Decision { True, False, Unknown };
std::string to_string(Decision d);

/// True if axioms + {sentence} is consistent; False if that set is
/// inconsistent and axioms + {~sentence} is consistent; Unknown otherwise.
Decision decide(const std::vector<Formula>& axioms, const Formula& sentence, const Budget& budget,
                const ConsistencyOracle& oracle, const syntax::Signature& signature = {});
Decision decide(const std::vector<Formula>& axioms, const Formula& sentence, const Budget& budget);

}  // namespace canon::proof
