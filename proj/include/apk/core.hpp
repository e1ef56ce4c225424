// SPDX-License-Identifier: MIT
//
// Value types shared by every module: half-integers, cuspidal lines,
// segments, segment generators, canonical words, formal sums and exponent
// strings.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apk {

// ---------------------------------------------------------------------------
// errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// HalfInt: x in (1/2)Z stored as 2x.

class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t t) { HalfInt h; h.twice_ = t; return h; }
  static constexpr HalfInt of(std::int64_t n) { return from_twice(2 * n); }
  // "5/2", "-1/2", "2.5", "-0.5", "3"
  static HalfInt parse(const std::string& s);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // floor for integers only; throws otherwise
  std::int64_t to_int() const;
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator+(std::int64_t n) const { return from_twice(twice_ + 2 * n); }
  constexpr HalfInt operator-(std::int64_t n) const { return from_twice(twice_ - 2 * n); }
  constexpr HalfInt operator*(std::int64_t n) const { return from_twice(twice_ * n); }
  HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;
  constexpr bool operator==(const HalfInt&) const = default;

 private:
  std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }
// number of unit steps from a to b (b - a must be an integer)
std::int64_t steps(HalfInt a, HalfInt b);

// ---------------------------------------------------------------------------
// Cuspidal lines

using LineId = int;

enum class Parity { Odd, Even };

struct CuspLine {
  LineId id = 0;
  std::string name = "rho";
  HalfInt alpha;                 // reducibility exponent
  Parity parity = Parity::Odd;   // parity of Jordan blocks of good parity
  std::optional<int> dim_hint;

  // parity forced by alpha when alpha >= 1
  static Parity parity_for_alpha(HalfInt alpha);
  void validate() const;
};

const char* to_string(Parity p);

// ---------------------------------------------------------------------------
// Segments

struct Segment {
  LineId line = 0;
  HalfInt x;
  HalfInt y = HalfInt::of(-1);

  static Segment make(HalfInt x, HalfInt y, LineId line = 0);
  static Segment point(HalfInt x, LineId line = 0) { return make(x, x, line); }
  static Segment unit() { return Segment{}; }

  bool empty() const { return y < x; }
  std::int64_t length() const { return empty() ? 0 : steps(x, y) + 1; }
  HalfInt exponent_twice_sum() const { return x + y; }  // 2 * e(delta)
  Segment normalized() const { return empty() ? unit() : *this; }
  std::string str() const;

  auto operator<=>(const Segment&) const = default;
  bool operator==(const Segment&) const = default;
};

Segment seg_contragredient(const Segment& s);

// ---------------------------------------------------------------------------
// Generators and words

enum class GenTag { Delta, Zeta };

struct GLGen {
  GenTag tag = GenTag::Delta;
  Segment seg;

  static GLGen delta(HalfInt x, HalfInt y, LineId line = 0);
  static GLGen zeta(HalfInt x, HalfInt y, LineId line = 0);
  static GLGen point(HalfInt x, LineId line = 0) { return delta(x, x, line); }

  GLGen canonical() const;
  std::int64_t letters() const { return seg.length(); }
  std::string str() const;

  auto operator<=>(const GLGen& o) const {
    if (auto c = seg <=> o.seg; c != 0) return c;
    return tag <=> o.tag;
  }
  bool operator==(const GLGen&) const = default;
};

class GLWord {
 public:
  GLWord() = default;
  static GLWord unit() { return GLWord(); }
  static GLWord of(const GLGen& g);

  const std::vector<GLGen>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }
  std::int64_t letters() const;
  std::string str() const;

  GLWord operator*(const GLWord& o) const;

  auto operator<=>(const GLWord&) const = default;
  bool operator==(const GLWord&) const = default;

 private:
  friend GLWord word_canon(std::vector<GLGen> factors);
  std::vector<GLGen> f_;
};

// canonical sorted word; drops unit factors, unifies one-point tags
GLWord word_canon(std::vector<GLGen> factors);
GLWord contragredient(const GLWord& w);

// ---------------------------------------------------------------------------
// Formal sums with integer coefficients

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

template <class B>
class FormalSum {
 public:
  using map_type = std::map<B, Coeff>;

  FormalSum() = default;
  static FormalSum single(const B& b, Coeff c = 1) {
    FormalSum s;
    s.add(b, c);
    return s;
  }

  void add(const B& b, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
      return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
  void add(const FormalSum& o, Coeff scale = 1) {
    for (const auto& [b, c] : o.terms_) add(b, checked_mul(c, scale));
  }

  Coeff coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? 0 : it->second;
  }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff total() const {
    Coeff t = 0;
    for (const auto& kv : terms_) t = checked_add(t, kv.second);
    return t;
  }
  bool nonnegative() const {
    for (const auto& kv : terms_)
      if (kv.second < 0) return false;
    return true;
  }
  // coefficientwise order
  bool leq(const FormalSum& o) const {
    for (const auto& [b, c] : terms_)
      if (c > o.coeff(b)) return false;
    for (const auto& [b, c] : o.terms_)
      if (c < 0 && coeff(b) > c) return false;
    return true;
  }

  FormalSum operator+(const FormalSum& o) const { FormalSum r = *this; r.add(o); return r; }
  FormalSum operator-(const FormalSum& o) const { FormalSum r = *this; r.add(o, -1); return r; }
  FormalSum operator*(Coeff k) const {
    FormalSum r;
    if (k != 0) r.add(*this, k);
    return r;
  }
  bool operator==(const FormalSum&) const = default;

 private:
  map_type terms_;
};

// ---------------------------------------------------------------------------
// Exponent strings: (line, exponent) sequences standing for
// nu^{e_1}rho x ... x nu^{e_k}rho (x) sigma in a minimal Jacquet module.

struct Letter {
  LineId line = 0;
  HalfInt e;
  auto operator<=>(const Letter&) const = default;
  bool operator==(const Letter&) const = default;
};

struct ExpString {
  std::vector<Letter> v;

  static ExpString of(std::initializer_list<HalfInt> es, LineId line = 0);
  std::size_t size() const { return v.size(); }
  ExpString operator+(const ExpString& o) const;  // concatenation
  std::string str() const;

  auto operator<=>(const ExpString&) const = default;
  bool operator==(const ExpString&) const = default;
};

using StringSum = FormalSum<ExpString>;

}  // namespace apk
