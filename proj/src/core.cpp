// SPDX-License-Identifier: MIT

#include "apk/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace apk {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::int64_t parse_int(const std::string& s) {
  if (!all_digits(s)) throw ParseError("not an integer: '" + s + "'");
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError("integer out of range: '" + s + "'");
  }
}

}  // namespace

HalfInt HalfInt::parse(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty half-integer");
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  std::int64_t twice = 0;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t p = parse_int(s.substr(0, slash));
    std::int64_t q = parse_int(s.substr(slash + 1));
    if (q == 1) twice = 2 * p;
    else if (q == 2) twice = p;
    else throw ParseError("denominator must be 1 or 2: '" + raw + "'");
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip);
    while (fp.size() > 1 && fp.back() == '0') fp.pop_back();
    if (fp.empty() || fp == "0") twice = 2 * whole;
    else if (fp == "5") twice = 2 * whole + 1;
    else throw ParseError("not a half-integer: '" + raw + "'");
  } else {
    twice = 2 * parse_int(s);
  }
  return from_twice(neg ? -twice : twice);
}

std::int64_t HalfInt::to_int() const {
  if (!is_integer()) throw PreconditionError("half-integer " + str() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::int64_t steps(HalfInt a, HalfInt b) {
  HalfInt d = b - a;
  if (!d.is_integer()) throw PreconditionError("exponents " + a.str() + " and " + b.str() + " lie on different cosets");
  return d.twice() / 2;
}

// ---------------------------------------------------------------------------

Parity CuspLine::parity_for_alpha(HalfInt alpha) {
  return alpha.is_integer() ? Parity::Odd : Parity::Even;
}

void CuspLine::validate() const {
  if (alpha < HalfInt()) throw PreconditionError("line " + name + ": alpha must be >= 0");
  if (alpha >= HalfInt::of(1) && parity != parity_for_alpha(alpha))
    throw PreconditionError("line " + name + ": parity does not match alpha " + alpha.str());
  if (dim_hint && *dim_hint <= 0) throw PreconditionError("line " + name + ": dim_hint must be positive");
}

const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

// ---------------------------------------------------------------------------

Segment Segment::make(HalfInt x, HalfInt y, LineId line) {
  Segment s{line, x, y};
  std::int64_t d = steps(x, y);
  if (d < -1) throw PreconditionError("segment [" + x.str() + "," + y.str() + "] has negative length");
  return s.normalized();
}

std::string Segment::str() const {
  if (empty()) return "[]";
  if (x == y) return "[" + x.str() + "]";
  return "[" + x.str() + "," + y.str() + "]";
}

Segment seg_contragredient(const Segment& s) {
  if (s.empty()) return Segment::unit();
  return Segment{s.line, -s.y, -s.x};
}

// ---------------------------------------------------------------------------

GLGen GLGen::delta(HalfInt x, HalfInt y, LineId line) {
  return GLGen{GenTag::Delta, Segment::make(x, y, line)}.canonical();
}

GLGen GLGen::zeta(HalfInt x, HalfInt y, LineId line) {
  return GLGen{GenTag::Zeta, Segment::make(x, y, line)}.canonical();
}

GLGen GLGen::canonical() const {
  GLGen g = *this;
  if (!g.seg.empty() && g.seg.x == g.seg.y) g.tag = GenTag::Delta;
  return g;
}

std::string GLGen::str() const {
  if (seg.x == seg.y) return seg.str();
  return (tag == GenTag::Delta ? "D" : "Z") + seg.str();
}

GLWord GLWord::of(const GLGen& g) { return word_canon({g}); }

std::int64_t GLWord::letters() const {
  std::int64_t n = 0;
  for (const auto& g : f_) n += g.letters();
  return n;
}

std::string GLWord::str() const {
  if (f_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (i) out += "x";
    out += f_[i].str();
  }
  return out;
}

GLWord GLWord::operator*(const GLWord& o) const {
  GLWord r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::merge(f_.begin(), f_.end(), o.f_.begin(), o.f_.end(), std::back_inserter(r.f_));
  return r;
}

GLWord word_canon(std::vector<GLGen> factors) {
  GLWord w;
  for (auto& g : factors) {
    if (g.seg.empty()) continue;
    w.f_.push_back(g.canonical());
  }
  std::sort(w.f_.begin(), w.f_.end());
  return w;
}

GLWord contragredient(const GLWord& w) {
  std::vector<GLGen> out;
  for (const auto& g : w.factors()) out.push_back(GLGen{g.tag, seg_contragredient(g.seg)});
  return word_canon(std::move(out));
}

// ---------------------------------------------------------------------------

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

// ---------------------------------------------------------------------------

ExpString ExpString::of(std::initializer_list<HalfInt> es, LineId line) {
  ExpString s;
  for (auto e : es) s.v.push_back(Letter{line, e});
  return s;
}

ExpString ExpString::operator+(const ExpString& o) const {
  ExpString r = *this;
  r.v.insert(r.v.end(), o.v.begin(), o.v.end());
  return r;
}

std::string ExpString::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    if (v[i].line != 0) os << "r" << v[i].line << ":";
    os << v[i].e.str();
  }
  os << ")";
  return os.str();
}

}  // namespace apk
