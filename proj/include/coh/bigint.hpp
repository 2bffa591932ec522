// Arbitrary-precision unsigned integers for exact tree counting.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coh {

/// Unsigned big integer, little-endian limbs in base 10^9.
class Nat {
public:
  Nat() = default;
  Nat(std::uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  friend bool operator==(const Nat& a, const Nat& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const Nat& a, const Nat& b) { return !(a == b); }

  friend Nat operator+(const Nat& a, const Nat& b) {
    Nat r;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.limbs_.size() || i < b.limbs_.size() || carry; ++i) {
      std::uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_.push_back(static_cast<std::uint32_t>(s % kBase));
      carry = s / kBase;
    }
    return r;
  }

  friend Nat operator*(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return Nat();
    Nat r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size() || carry; ++j) {
        std::uint64_t cur = r.limbs_[i + j] + carry;
        if (j < b.limbs_.size())
          cur += static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
    }
    while (!r.limbs_.empty() && r.limbs_.back() == 0) r.limbs_.pop_back();
    return r;
  }

  Nat& operator+=(const Nat& o) { return *this = *this + o; }
  Nat& operator*=(const Nat& o) { return *this = *this * o; }

  std::string str() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

private:
  static constexpr std::uint64_t kBase = 1000000000;
  std::vector<std::uint32_t> limbs_;
};

inline Nat factorial(unsigned n) {
  Nat r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Nat(i);
  return r;
}

/// Binomial coefficient via Pascal's rule; exact for any size.
inline Nat binomial(unsigned n, unsigned k) {
  if (k > n) return Nat(0);
  std::vector<Nat> row(n + 1);
  row[0] = Nat(1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i < k ? i : k; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

}  // namespace coh
