#include "chainreg/field.hpp"

#include <utility>

#include "chainreg/error.hpp"

namespace chainreg {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  }
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero");
  // a^(p-2) by square and multiply.
  std::uint32_t result = 1;
  std::uint32_t base = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::uint32_t FieldSpec::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::size_t rank(DenseMatrix m, const FieldSpec& field) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r) {
      for (std::size_t k = c; k < m.cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
    }
    const std::uint32_t scale = field.inv(m.at(r, c));
    for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = field.mul(m.at(r, k), scale);
    for (std::size_t row = r + 1; row < m.rows; ++row) {
      const std::uint32_t f = m.at(row, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < m.cols; ++k) {
        if (m.at(r, k)) m.at(row, k) = field.sub(m.at(row, k), field.mul(f, m.at(r, k)));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace chainreg
