#include "canon/compactness/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace canon::compactness {

namespace {

__extension__ typedef __int128 Wide;

std::uint64_t magnitude(std::int64_t m) { return m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m); }

// Number of dyadics whose height is below h.
std::uint64_t below_height(std::uint64_t h) {
  if (h == 0) return 0;
  std::uint64_t k = h - 1;
  return 1 + 2 * k + 2 * ((k * k) / 4);
}

// Exponents e that occur at height h (e = 0, and 1 <= e < h with h - e odd),
// in increasing order: their count and the j-th one.
std::uint64_t exponent_count(std::uint64_t h) { return 1 + h / 2; }
std::uint64_t first_odd_offset(std::uint64_t h) { return (h - 1) % 2 == 1 ? 1 : 2; }
std::uint64_t exponent_at(std::uint64_t h, std::uint64_t j) { return j == 0 ? 0 : first_odd_offset(h) + 2 * (j - 1); }
std::uint64_t exponent_rank(std::uint64_t h, std::uint64_t e) { return e == 0 ? 0 : (e - first_odd_offset(h)) / 2 + 1; }

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, unsigned exponent) : m_(numerator), e_(exponent) {
  while (e_ > 0 && m_ % 2 == 0) {
    m_ /= 2;
    --e_;
  }
  if (m_ == 0) e_ = 0;
}

std::uint64_t Dyadic::height() const noexcept { return e_ + magnitude(m_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.e_, b.e_);
  Wide x = static_cast<Wide>(a.m_) << (e - a.e_);
  Wide y = static_cast<Wide>(b.m_) << (e - b.e_);
  return x <=> y;
}

Dyadic Dyadic::midpoint(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.e_, b.e_);
  Wide x = static_cast<Wide>(a.m_) << (e - a.e_);
  Wide y = static_cast<Wide>(b.m_) << (e - b.e_);
  Wide sum = x + y;
  if (e >= 62 || sum > INT64_MAX || sum < INT64_MIN) throw std::overflow_error("dyadic midpoint out of range");
  return Dyadic(static_cast<std::int64_t>(sum), e + 1);
}

Dyadic Dyadic::plus_one() const {
  if (e_ >= 62) throw std::overflow_error("dyadic out of range");
  return Dyadic(m_ + (std::int64_t{1} << e_), e_);
}

Dyadic Dyadic::minus_one() const {
  if (e_ >= 62) throw std::overflow_error("dyadic out of range");
  return Dyadic(m_ - (std::int64_t{1} << e_), e_);
}

std::string Dyadic::to_string() const {
  if (e_ == 0) return std::to_string(m_);
  return std::to_string(m_) + "/" + std::to_string(std::uint64_t{1} << e_);
}

std::uint64_t encode(const Dyadic& q) {
  std::uint64_t h = q.height();
  if (h == 0) return 0;
  std::uint64_t k = exponent_count(h);
  std::uint64_t j = exponent_rank(h, q.exponent());
  // Negatives first with growing exponent; positives with shrinking exponent.
  std::uint64_t idx = q.numerator() < 0 ? j : k + (k - 1 - j);
  return below_height(h) + idx;
}

Dyadic decode(std::uint64_t id) {
  if (id == 0) return Dyadic(0);
  // Largest h with below_height(h) <= id.
  std::uint64_t h = static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(id))) + 2;
  while (below_height(h) > id) --h;
  while (below_height(h + 1) <= id) ++h;
  std::uint64_t idx = id - below_height(h);
  std::uint64_t k = exponent_count(h);
  bool negative = idx < k;
  std::uint64_t j = negative ? idx : k - 1 - (idx - k);
  std::uint64_t e = exponent_at(h, j);
  auto m = static_cast<std::int64_t>(h - e);
  return Dyadic(negative ? -m : m, static_cast<unsigned>(e));
}

}  // namespace canon::compactness
