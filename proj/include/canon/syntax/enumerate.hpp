#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "canon/syntax/ast.hpp"
#include "canon/syntax/signature.hpp"

namespace canon::syntax {

struct EnumeratedSentence {
  std::string text;  // canonical bytes
  Formula formula;   // canonical form
};

/// Generates the sentences of a signature grouped by canonical byte length.
/// Within a length bucket sentences are sorted bytewise, so walking buckets in
/// increasing length yields the global length-then-lex order.
class SentenceEnumerator {
 public:
  explicit SentenceEnumerator(Signature signature);

  const Signature& signature() const noexcept { return sig_; }
  /// All canonical sentences with exactly `length` bytes, sorted.
  const std::vector<EnumeratedSentence>& bucket(std::size_t length);
  /// The first `n` sentences in enumeration order.
  std::vector<EnumeratedSentence> first(std::size_t n);

 private:
  struct Item {
    std::string text;
    Formula formula;
  };
  struct TermItem {
    std::string text;
    Term term;
  };
  using Key = std::pair<std::size_t, std::size_t>;  // (length, variables in scope)

  const std::vector<TermItem>& terms(std::size_t length, std::size_t scope);
  const std::vector<Item>& formulas(std::size_t length, std::size_t scope);
  // Every way of filling `arity` argument slots with terms whose lengths sum to `total`.
  void argument_tuples(std::size_t total, std::size_t arity, std::size_t scope,
                       std::vector<std::pair<std::string, std::vector<Term>>>& out);

  Signature sig_;
  std::map<Key, std::vector<TermItem>> term_memo_;
  std::map<Key, std::vector<Item>> formula_memo_;
  std::map<std::size_t, std::vector<EnumeratedSentence>> buckets_;
};

/// First `n` sentences over `signature`, ascending by (byte length of the
/// canonical serialization, then bytes). Alpha-equivalent sentences share one
/// index.
std::vector<Formula> enumerate_sentences(const Signature& signature, std::size_t n);

}  // namespace canon::syntax
