#include "canon/proof/budget.hpp"

#include <charconv>
#include <vector>

namespace canon::proof {

Budget parse_budget(const std::string& text) {
  std::vector<std::size_t> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || p != part.data() + part.size())
      throw std::invalid_argument("budget must be 'steps,depth,size', got '" + text + "'");
    fields.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 3) throw std::invalid_argument("budget must be 'steps,depth,size', got '" + text + "'");
  Budget b{fields[0], fields[1], fields[2]};
  b.validate();
  return b;
}

}  // namespace canon::proof
