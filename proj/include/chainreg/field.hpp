#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chainreg {

/// The coefficient field GF(p).
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  /// Throws InvalidArgument unless p is a prime below 2^31.
  explicit FieldSpec(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(long long v) const noexcept;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Dense row-major matrix over GF(p); entries already reduced mod p.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank by Gaussian elimination; consumes the matrix.
std::size_t rank(DenseMatrix m, const FieldSpec& field);

}  // namespace chainreg
