#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canon/proof/budget.hpp"
#include "canon/proof/prover.hpp"
#include "canon/syntax/theory.hpp"

namespace canon::henkin {

using syntax::Formula;
using syntax::Term;

/// Member c_<base, index> of the global Henkin set. The constant's name is
/// `$index{base}` where base is the canonical text of an existential sentence.
struct HenkinConstant {
  std::string base;
  std::size_t index = 0;

  std::string name() const;
  Term term() const { return Term::constant(name()); }
  friend bool operator==(const HenkinConstant&, const HenkinConstant&) = default;
  friend auto operator<=>(const HenkinConstant&, const HenkinConstant&) = default;
};

class HenkinError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pure naming: equal (canonical existential, k) pairs give the same constant
/// in every theory. Throws HenkinError unless `existential` is an
/// existential sentence.
HenkinConstant henkin_constant(const Formula& existential, std::size_t k);
/// Parses a `$k{...}` name back into its pair; nullopt for ordinary names.
std::optional<HenkinConstant> parse_henkin_name(const std::string& name);

/// exists x. phi  ->  phi[x := c]
Formula witness_axiom(const Formula& existential, const HenkinConstant& c);

enum class Polarity { Asserted, Negated };
std::string to_string(Polarity p);

struct Decided {
  Formula sentence;
  std::string text;  // canonical bytes of `sentence`
  Polarity polarity;
  std::size_t stage;
  // The formula actually added to the front: sentence or its negation.
  Formula added() const { return polarity == Polarity::Asserted ? sentence : Formula::negation(sentence); }
};

struct LedgerEntry {
  Formula existential;
  std::string text;
  HenkinConstant constant;
  Formula axiom;
  // "axiom", "stage <n>", "witness" (nested existential) or "import".
  std::string origin;
};

struct StageRecord {
  std::size_t stage;
  // "enumerated" for the Lindenbaum stages, "diagram" for term-model completion.
  std::string phase;
  std::string sentence;
  std::string verdict;  // Consistent / Inconsistent of sentence added to the front
  std::string evidence;
  std::size_t steps;
};

struct FrontSentence {
  Formula sentence;
  std::string provenance;
};

class InconsistentInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StageUndecidable : public std::runtime_error {
 public:
  StageUndecidable(std::size_t stage, const std::string& sentence);
  std::size_t stage() const noexcept { return stage_; }
  const std::string& sentence() const noexcept { return sentence_; }

 private:
  std::size_t stage_;
  std::string sentence_;
};

/// Finite prefix of the maximal consistent Henkin theory t*.
class CompleteFront {
 public:
  CompleteFront(syntax::Theory base, std::size_t horizon, proof::Budget budget,
                std::shared_ptr<const proof::ConsistencyOracle> oracle, std::size_t window);

  const syntax::Theory& base() const noexcept { return base_; }
  std::size_t horizon() const noexcept { return horizon_; }
  const proof::Budget& budget() const noexcept { return budget_; }
  std::size_t window() const noexcept { return window_; }
  const proof::ConsistencyOracle& oracle() const noexcept { return *oracle_; }
  std::shared_ptr<const proof::ConsistencyOracle> oracle_ptr() const noexcept { return oracle_; }

  const std::vector<Decided>& decided() const noexcept { return decided_; }
  const std::vector<LedgerEntry>& ledger() const noexcept { return ledger_; }
  const std::vector<StageRecord>& stage_log() const noexcept { return log_; }
  const std::vector<FrontSentence>& sentences() const noexcept { return sentences_; }
  std::vector<Formula> accumulated() const;

  /// Ledger constants in ledger order.
  std::vector<std::string> ledger_constants() const;
  /// Window constants c_<phi, k> for each ledger existential phi and the
  /// next `window` indices after the ledger one.
  std::vector<std::string> window_constants() const;
  /// L plus ledger constants (the language of the term model).
  syntax::Signature language() const;
  /// L plus ledger and window constants (the language of the next stage).
  syntax::Signature stage_language() const;

  std::optional<Polarity> polarity_of(const std::string& canonical_text) const;
  const LedgerEntry* ledger_entry(const std::string& existential_text) const;

  /// Decides `sentence` by the stage rule and records it. Returns its polarity.
  Polarity decide_and_record(const Formula& sentence, const std::string& phase);
  /// Adds the witness axiom for an asserted existential (least unused index)
  /// and recursively for nested existentials it yields.
  void witness(const Formula& existential, const std::string& origin);
  /// Adds c_<existential, k> with its witness axiom as an import.
  void import_constant(const Formula& existential, std::size_t k);

  /// Checks the recorded invariants; returns the violations found.
  std::vector<std::string> validate() const;

  friend bool operator==(const CompleteFront& a, const CompleteFront& b);

 private:
  bool constant_in_use(const std::string& name) const;
  proof::Consistency check_with(const Formula& extra) const;

  syntax::Theory base_;
  std::size_t horizon_;
  proof::Budget budget_;
  std::shared_ptr<const proof::ConsistencyOracle> oracle_;
  std::size_t window_;
  std::vector<Decided> decided_;
  std::map<std::string, std::size_t> decided_index_;
  std::vector<LedgerEntry> ledger_;
  std::vector<StageRecord> log_;
  std::vector<FrontSentence> sentences_;
};

/// Sequential Lindenbaum procedure: stage n decides the least sentence over
/// the stage language that is not yet decided, asserting it when consistent
/// with the front and negating it otherwise. Asserted existentials get
/// witness axioms immediately; existential axioms are witnessed first.
CompleteFront lindenbaum_extend(const syntax::Theory& theory, std::size_t horizon, const proof::Budget& budget,
                                std::shared_ptr<const proof::ConsistencyOracle> oracle, std::size_t window = 2);

}  // namespace canon::henkin
