#include "canon/syntax/signature.hpp"

#include <algorithm>
#include <cctype>

namespace canon::syntax {

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  if (name == "forall" || name == "exists") return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_reserved_variable(std::string_view name) noexcept {
  if (name.size() == 1) return std::string_view("xyzwvu").find(name.front()) != std::string_view::npos;
  return name.size() > 1 && name.front() == 'x' &&
         std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void Signature::check_fresh(std::string_view name) const {
  if (is_reserved_variable(name))
    throw SignatureError("symbol name '" + std::string(name) + "' is reserved for bound variables");
  if (contains(name)) throw SignatureError("duplicate symbol '" + std::string(name) + "'");
}

void Signature::add_constant(std::string name) {
  if (!is_identifier(name) && !(name.size() > 1 && name.front() == '$'))
    throw SignatureError("invalid constant name '" + name + "'");
  check_fresh(name);
  constants_.push_back(std::move(name));
}

void Signature::add_function(std::string name, std::size_t arity) {
  if (!is_identifier(name)) throw SignatureError("invalid function name '" + name + "'");
  if (arity == 0) throw SignatureError("function '" + name + "' needs arity >= 1; declare constants with 'const'");
  check_fresh(name);
  functions_.push_back({std::move(name), arity});
}

void Signature::add_relation(std::string name, std::size_t arity) {
  if (!is_identifier(name)) throw SignatureError("invalid relation name '" + name + "'");
  check_fresh(name);
  relations_.push_back({std::move(name), arity});
}

bool Signature::has_constant(std::string_view name) const {
  return std::find(constants_.begin(), constants_.end(), name) != constants_.end();
}

std::optional<std::size_t> Signature::function_arity(std::string_view name) const {
  for (const auto& f : functions_)
    if (f.name == name) return f.arity;
  return std::nullopt;
}

std::optional<std::size_t> Signature::relation_arity(std::string_view name) const {
  for (const auto& r : relations_)
    if (r.name == name) return r.arity;
  return std::nullopt;
}

std::optional<SymbolKind> Signature::kind_of(std::string_view name) const {
  if (has_constant(name)) return SymbolKind::Constant;
  if (function_arity(name)) return SymbolKind::Function;
  if (relation_arity(name)) return SymbolKind::Relation;
  return std::nullopt;
}

Signature Signature::with_constants(const std::vector<std::string>& extra) const {
  Signature out = *this;
  for (const auto& c : extra)
    if (!out.has_constant(c)) out.constants_.push_back(c);
  return out;
}

}  // namespace canon::syntax
