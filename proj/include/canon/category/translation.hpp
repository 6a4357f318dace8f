#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canon/proof/budget.hpp"
#include "canon/proof/prover.hpp"
#include "canon/syntax/theory.hpp"

namespace canon::category {

using syntax::Formula;
using syntax::Signature;
using syntax::Term;

/// Symbol map that is not arity- or kind-preserving, or names an unknown symbol.
class TranslationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A morphism of theories given by a symbol map. Formulas are translated by
/// structural recursion; Henkin constants follow the rule
/// $k{phi} -> $k{canonical(f(phi))}.
class Translation {
 public:
  /// Symbols of `source` absent from `symbols` map to themselves.
  Translation(std::string name, Signature source, Signature target, const std::map<std::string, std::string>& symbols);

  const std::string& name() const noexcept { return name_; }
  const Signature& source() const noexcept { return source_; }
  const Signature& target() const noexcept { return target_; }
  /// Total map over the source symbols.
  const std::map<std::string, std::string>& symbols() const noexcept { return symbols_; }
  /// Symbols not mapped to themselves.
  std::map<std::string, std::string> renamings() const;

  const std::string& symbol(const std::string& name) const;
  std::string constant_name(const std::string& name) const;
  Term apply(const Term& term) const;
  Formula apply(const Formula& formula) const;

  /// Structural equality; the name is not compared.
  friend bool operator==(const Translation& a, const Translation& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.symbols_ == b.symbols_;
  }

 private:
  std::string name_;
  Signature source_, target_;
  std::map<std::string, std::string> symbols_;
};

Translation identity(const Signature& signature, const std::string& name = "id");
/// g after f. Throws SignatureMismatch unless f's target is g's source.
Translation compose(const Translation& g, const Translation& f);

class TranslationFileError : public std::runtime_error {
 public:
  TranslationFileError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Line format:
///   # comment
///   name <label>
///   map <source-symbol> <target-symbol>
Translation parse_translation(std::string_view text, const Signature& source, const Signature& target);
Translation load_translation(const std::filesystem::path& path, const Signature& source, const Signature& target);
std::string serialize_translation(const Translation& f);

struct TranslationCheck {
  enum class Status { Preserved, Violated, Unknown, NotProvedInSource };
  std::string sentence;
  std::string translated;
  proof::Verdict::Kind source = proof::Verdict::Kind::Unknown;
  std::optional<proof::Verdict::Kind> target;
  Status status = Status::Unknown;
};
std::string to_string(TranslationCheck::Status s);

struct TranslationReport {
  std::string translation;
  proof::Budget budget;
  std::vector<TranslationCheck> checks;
  std::size_t count(TranslationCheck::Status s) const;
  /// No violation and no unknown among the samples proved in the source.
  bool pass() const;
};

/// For every sample proved from t1, f(sample) must be proved from t2.
TranslationReport check_translation(const Translation& f, const syntax::Theory& t1, const syntax::Theory& t2,
                                    const std::vector<Formula>& samples, const proof::Budget& budget);

/// Axioms of t1 followed by the first `enumerated` sentences of its signature.
std::vector<Formula> default_samples(const syntax::Theory& t1, std::size_t enumerated);

}  // namespace canon::category
