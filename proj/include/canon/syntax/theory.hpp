#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canon/syntax/ast.hpp"
#include "canon/syntax/signature.hpp"

namespace canon::syntax {

struct Theory {
  std::string name;
  Signature signature;
  std::vector<Formula> axioms;
  // Canonical-model plugin declared by the file (`plugin <id>`); empty if none.
  std::string plugin;

  friend bool operator==(const Theory&, const Theory&) = default;
};

class TheoryFileError : public std::runtime_error {
 public:
  TheoryFileError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented theory format:
///   # comment
///   name <label>
///   plugin <id>
///   sig const c | sig fun f 2 | sig rel P 1
///   axiom <formula>
/// Axioms must be sentences over the declared symbols.
Theory parse_theory(std::string_view text);
Theory load_theory(const std::filesystem::path& path);
/// Inverse of parse_theory up to comments and whitespace.
std::string serialize_theory(const Theory& theory);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace canon::syntax
