#include "canon/syntax/theory.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"

namespace canon::syntax {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

TheoryFileError::TheoryFileError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Theory parse_theory(std::string_view text) {
  Theory theory;
  std::size_t line_no = 0;
  bool seen_axiom = false;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto space = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    try {
      if (keyword == "name") {
        theory.name = std::string(rest);
      } else if (keyword == "plugin") {
        theory.plugin = std::string(rest);
      } else if (keyword == "sig") {
        if (seen_axiom) throw TheoryFileError(line_no, "declarations must precede axioms");
        auto w = words(rest);
        if (w.empty()) throw TheoryFileError(line_no, "empty declaration");
        auto arity = [&](const std::string& s) {
          std::size_t n = 0;
          auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
          if (ec != std::errc{} || p != s.data() + s.size()) throw TheoryFileError(line_no, "bad arity '" + s + "'");
          return n;
        };
        if (w[0] == "const" && w.size() == 2) {
          theory.signature.add_constant(w[1]);
        } else if (w[0] == "fun" && w.size() == 3) {
          theory.signature.add_function(w[1], arity(w[2]));
        } else if (w[0] == "rel" && w.size() == 3) {
          theory.signature.add_relation(w[1], arity(w[2]));
        } else {
          throw TheoryFileError(line_no, "expected 'sig const c', 'sig fun f n' or 'sig rel R n'");
        }
      } else if (keyword == "axiom") {
        seen_axiom = true;
        ParseOptions opts;
        opts.allow_henkin = false;
        opts.allow_free_variables = false;
        theory.axioms.push_back(parse_formula(rest, theory.signature, opts));
      } else {
        throw TheoryFileError(line_no, "unknown directive '" + std::string(keyword) + "'");
      }
    } catch (const ParseError& e) {
      throw TheoryFileError(line_no, e.what());
    } catch (const SignatureError& e) {
      throw TheoryFileError(line_no, e.what());
    }
  }
  return theory;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Theory load_theory(const std::filesystem::path& path) { return parse_theory(read_file(path)); }

std::string serialize_theory(const Theory& theory) {
  std::string out;
  if (!theory.name.empty()) out += "name " + theory.name + "\n";
  if (!theory.plugin.empty()) out += "plugin " + theory.plugin + "\n";
  for (const auto& c : theory.signature.constants()) out += "sig const " + c + "\n";
  for (const auto& f : theory.signature.functions()) out += "sig fun " + f.name + " " + std::to_string(f.arity) + "\n";
  for (const auto& r : theory.signature.relations()) out += "sig rel " + r.name + " " + std::to_string(r.arity) + "\n";
  for (const auto& a : theory.axioms) out += "axiom " + print(a) + "\n";
  return out;
}

}  // namespace canon::syntax
