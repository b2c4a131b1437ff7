#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "parry/rational.hpp"

namespace parry {

// Hard ceiling on generated prefix length; keeps every analysis desk-scale.
inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 27;

// Finite word over {0,1}, stored as '0'/'1' bytes so that plain string
// search and bit-exact file I/O apply directly.
class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::string_view symbols) : s_(symbols) {
    for (char c : s_) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("BinaryWord: symbols must be '0' or '1'");
    }
  }

  // For internal builders whose output is valid by construction.
  static BinaryWord unchecked(std::string s) {
    BinaryWord w;
    w.s_ = std::move(s);
    return w;
  }

  static BinaryWord zeros(std::size_t k) { return unchecked(std::string(k, '0')); }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char symbol(std::size_t i) const { return s_[i]; }
  int bit(std::size_t i) const { return s_[i] - '0'; }
  std::string_view view() const { return s_; }
  const std::string& str() const { return s_; }

  BinaryWord substr(std::size_t pos, std::size_t len) const {
    return unchecked(s_.substr(pos, len));
  }
  bool starts_with(const BinaryWord& w) const {
    return std::string_view(s_).starts_with(w.s_);
  }
  bool ends_with(const BinaryWord& w) const {
    return std::string_view(s_).ends_with(w.s_);
  }

  BinaryWord repeated(std::size_t k) const {
    std::string out;
    out.reserve(s_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += s_;
    return unchecked(std::move(out));
  }

  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
    return unchecked(a.s_ + b.s_);
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) {
    return a.s_ <=> b.s_;
  }

 private:
  std::string s_;
};

struct AbelianVector {
  BigInt count0;
  BigInt count1;

  BigInt length() const { return count0 + count1; }
  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;
};

// 2x2 letter-count matrix of a binary substitution; row = source letter,
// column = target letter.
class MorphismMatrix {
 public:
  MorphismMatrix() = default;
  MorphismMatrix(BigInt m00, BigInt m01, BigInt m10, BigInt m11)
      : m_{{{std::move(m00), std::move(m01)}, {std::move(m10), std::move(m11)}}} {}

  static MorphismMatrix identity() { return {1, 0, 0, 1}; }

  const BigInt& at(int r, int c) const { return m_[r][c]; }

  friend MorphismMatrix operator*(const MorphismMatrix& a, const MorphismMatrix& b) {
    return {a.m_[0][0] * b.m_[0][0] + a.m_[0][1] * b.m_[1][0],
            a.m_[0][0] * b.m_[0][1] + a.m_[0][1] * b.m_[1][1],
            a.m_[1][0] * b.m_[0][0] + a.m_[1][1] * b.m_[1][0],
            a.m_[1][0] * b.m_[0][1] + a.m_[1][1] * b.m_[1][1]};
  }

  MorphismMatrix pow(unsigned n) const {
    MorphismMatrix result = identity();
    MorphismMatrix base = *this;
    while (n > 0) {
      if (n & 1u) result = result * base;
      base = base * base;
      n >>= 1u;
    }
    return result;
  }

  friend bool operator==(const MorphismMatrix&, const MorphismMatrix&) = default;

 private:
  std::array<std::array<BigInt, 2>, 2> m_{};
};

// Row vector times matrix: (c0, c1) * M.
inline AbelianVector operator*(const AbelianVector& v, const MorphismMatrix& m) {
  return {v.count0 * m.at(0, 0) + v.count1 * m.at(1, 0),
          v.count0 * m.at(0, 1) + v.count1 * m.at(1, 1)};
}

// Validated parameter pair (p, q) with p > q >= 1. The associated number
// beta is the larger root of x^2 - (p+1)x + (p-q); its Renyi expansion of
// unity is p q q q ...
class ParryParams {
 public:
  ParryParams(long long p, long long q) : p_(p), q_(q) {
    if (!(p > q && q >= 1))
      throw std::invalid_argument("ParryParams: require p > q >= 1");
  }

  long long p() const { return p_; }
  long long q() const { return q_; }

  // D = (p+1)^2 - 4(p-q); positive for all valid parameters.
  long long discriminant() const { return (p_ + 1) * (p_ + 1) - 4 * (p_ - q_); }

  std::string renyi_expansion() const {
    return std::to_string(p_) + " " + std::to_string(q_) + "^ω";
  }

  MorphismMatrix morphism_matrix() const { return {p_, 1, q_, 1}; }

  friend bool operator==(const ParryParams&, const ParryParams&) = default;

 private:
  long long p_;
  long long q_;
};

// Total map over the two-letter alphabet.
struct Morphism {
  BinaryWord image0;
  BinaryWord image1;

  BinaryWord apply(const BinaryWord& w) const {
    std::string out;
    out.reserve(w.size() * std::max(image0.size(), image1.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
      out += (w.symbol(i) == '0') ? image0.str() : image1.str();
    return BinaryWord::unchecked(std::move(out));
  }
};

// 0 -> 0^p 1, 1 -> 0^q 1.
inline Morphism make_parry_morphism(const ParryParams& params) {
  std::string im0(static_cast<std::size_t>(params.p()), '0');
  im0 += '1';
  std::string im1(static_cast<std::size_t>(params.q()), '0');
  im1 += '1';
  return {BinaryWord::unchecked(std::move(im0)), BinaryWord::unchecked(std::move(im1))};
}

inline BinaryWord apply_morphism(const Morphism& m, const BinaryWord& w) {
  return m.apply(w);
}

inline AbelianVector abelianize(const BinaryWord& w) {
  auto ones = static_cast<std::size_t>(
      std::count(w.str().begin(), w.str().end(), '1'));
  return {BigInt(w.size() - ones), BigInt(ones)};
}

// Prefix of the fixed point, built by iterating the morphism on "0". Each
// iterate is a prefix of the next because the image of 0 begins with 0.
// With truncate=false the result is the first whole iterate of length
// >= min_len and may exceed the cap by one morphism step.
inline BinaryWord fixed_point_prefix(const ParryParams& params, std::size_t min_len,
                                     bool truncate = true,
                                     std::size_t cap = kDefaultPrefixCap) {
  if (min_len < 1) throw std::invalid_argument("fixed_point_prefix: min_len >= 1");
  if (min_len > cap)
    throw std::length_error("fixed_point_prefix: requested length exceeds cap");
  Morphism phi = make_parry_morphism(params);
  BinaryWord cur = BinaryWord::unchecked("0");
  while (cur.size() < min_len) cur = phi.apply(cur);
  if (truncate && cur.size() > min_len) cur = cur.substr(0, min_len);
  return cur;
}

}  // namespace parry
