#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace canon::compactness {

/// Dyadic rational m / 2^e in lowest terms (m odd whenever e > 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t numerator, unsigned exponent = 0);

  std::int64_t numerator() const noexcept { return m_; }
  unsigned exponent() const noexcept { return e_; }
  /// e + |m|: the key of the enumeration.
  std::uint64_t height() const noexcept;

  static Dyadic midpoint(const Dyadic& a, const Dyadic& b);
  Dyadic plus_one() const;
  Dyadic minus_one() const;

  std::string to_string() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t m_ = 0;
  unsigned e_ = 0;
};

/// Enumeration of all dyadic rationals: by height, ties by value ascending.
/// Index 0 is 0; then -1, 1, -2, -1/2, 1/2, 2, ...
std::uint64_t encode(const Dyadic& q);
Dyadic decode(std::uint64_t id);

}  // namespace canon::compactness
