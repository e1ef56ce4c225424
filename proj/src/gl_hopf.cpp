// SPDX-License-Identifier: MIT

#include "apk/gl_hopf.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace apk {

namespace {

GLGen make_gen(GenTag tag, HalfInt x, HalfInt y, LineId line) {
  return tag == GenTag::Delta ? GLGen::delta(x, y, line) : GLGen::zeta(x, y, line);
}

GLWord w1(const GLGen& g) { return g.seg.empty() ? GLWord::unit() : GLWord::of(g); }

GLWord w2(const GLGen& a, const GLGen& b) {
  return word_canon({a, b});
}

}  // namespace

// ---------------------------------------------------------------------------
// m*

RTensorR mstar(const GLGen& g0) {
  GLGen g = g0.canonical();
  RTensorR out;
  const HalfInt x = g.seg.x, y = g.seg.y;
  const LineId ln = g.seg.line;
  for (HalfInt i = x - 1; i <= y; i = i + 1) {
    if (g.tag == GenTag::Delta) {
      out.add({w1(make_gen(GenTag::Delta, i + 1, y, ln)), w1(make_gen(GenTag::Delta, x, i, ln))}, 1);
    } else {
      out.add({w1(make_gen(GenTag::Zeta, x, i, ln)), w1(make_gen(GenTag::Zeta, i + 1, y, ln))}, 1);
    }
  }
  return out;
}

RTensorR tensor_mul(const RTensorR& a, const RTensorR& b) {
  RTensorR out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add({ka.first * kb.first, ka.second * kb.second}, checked_mul(ca, cb));
  return out;
}

WordSum word_mul(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(ka * kb, checked_mul(ca, cb));
  return out;
}

RTensorR mstar(const GLWord& w) {
  RTensorR acc = RTensorR::single({GLWord::unit(), GLWord::unit()});
  for (const auto& g : w.factors()) acc = tensor_mul(acc, mstar(g));
  return acc;
}

// ---------------------------------------------------------------------------
// M*

RTensorR Mstar(const GLWord& w) {
  RTensorR out;
  for (const auto& [ab, c] : mstar(w)) {
    // kappa: A (x) B -> B (x) A; then ~ on the left, m* on the right
    const GLWord& left = ab.first;
    const GLWord& right = ab.second;
    GLWord tilde = contragredient(right);
    for (const auto& [cd, c2] : mstar(left)) out.add({tilde * cd.first, cd.second}, checked_mul(c, c2));
  }
  return out;
}

RTensorR Mstar_closed_form(const GLGen& g0) {
  GLGen g = g0.canonical();
  RTensorR out;
  const HalfInt x = g.seg.x, y = g.seg.y;
  const LineId ln = g.seg.line;
  if (g.tag == GenTag::Delta) {
    for (HalfInt i = x - 1; i <= y; i = i + 1)
      for (HalfInt j = i; j <= y; j = j + 1)
        out.add({w2(GLGen::delta(-i, -x, ln), GLGen::delta(j + 1, y, ln)), w1(GLGen::delta(i + 1, j, ln))}, 1);
  } else {
    for (HalfInt i = x - 1; i <= y; i = i + 1)
      for (HalfInt j = x - 1; j <= i; j = j + 1)
        out.add({w2(GLGen::zeta(-y, -i - 1, ln), GLGen::zeta(x, j, ln)), w1(GLGen::zeta(j + 1, i, ln))}, 1);
  }
  return out;
}

WordSum Mstar_GL(const GLGen& g0) {
  GLGen g = g0.canonical();
  WordSum out;
  const HalfInt x = g.seg.x, y = g.seg.y;
  const LineId ln = g.seg.line;
  for (HalfInt i = x - 1; i <= y; i = i + 1) {
    if (g.tag == GenTag::Delta)
      out.add(w2(GLGen::delta(-i, -x, ln), GLGen::delta(i + 1, y, ln)), 1);
    else
      out.add(w2(GLGen::zeta(-y, -i - 1, ln), GLGen::zeta(x, i, ln)), 1);
  }
  return out;
}

WordSum Mstar_GL(const GLWord& w) {
  WordSum acc = WordSum::single(GLWord::unit());
  for (const auto& g : w.factors()) acc = word_mul(acc, Mstar_GL(g));
  return acc;
}

RTensor3 coassoc_left(const GLWord& w) {
  RTensor3 out;
  for (const auto& [ab, c] : mstar(w))
    for (const auto& [a12, c2] : mstar(ab.first)) out.add({a12.first, {a12.second, ab.second}}, checked_mul(c, c2));
  return out;
}

RTensor3 coassoc_right(const GLWord& w) {
  RTensor3 out;
  for (const auto& [ab, c] : mstar(w))
    for (const auto& [b12, c2] : mstar(ab.second)) out.add({ab.first, {b12.first, b12.second}}, checked_mul(c, c2));
  return out;
}

// ---------------------------------------------------------------------------
// strings

ExpString gen_string(const GLGen& g) {
  ExpString s;
  if (g.seg.empty()) return s;
  if (g.tag == GenTag::Delta || g.seg.x == g.seg.y) {
    for (HalfInt e = g.seg.y; e >= g.seg.x; e = e - 1) s.v.push_back({g.seg.line, e});
  } else {
    for (HalfInt e = g.seg.x; e <= g.seg.y; e = e + 1) s.v.push_back({g.seg.line, e});
  }
  return s;
}

namespace {

void shuffle_rec(const ExpString& a, std::size_t i, const ExpString& b, std::size_t j, ExpString& cur,
                 StringSum& out, Coeff c) {
  if (i == a.size() && j == b.size()) {
    out.add(cur, c);
    return;
  }
  if (i < a.size()) {
    cur.v.push_back(a.v[i]);
    shuffle_rec(a, i + 1, b, j, cur, out, c);
    cur.v.pop_back();
  }
  if (j < b.size()) {
    cur.v.push_back(b.v[j]);
    shuffle_rec(a, i, b, j + 1, cur, out, c);
    cur.v.pop_back();
  }
}

}  // namespace

StringSum shuffle(const ExpString& a, const ExpString& b) {
  StringSum out;
  ExpString cur;
  cur.v.reserve(a.size() + b.size());
  shuffle_rec(a, 0, b, 0, cur, out, 1);
  return out;
}

StringSum shuffle(const StringSum& a, const StringSum& b) {
  StringSum out;
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) {
      ExpString cur;
      shuffle_rec(sa, 0, sb, 0, cur, out, checked_mul(ca, cb));
    }
  return out;
}

StringSum cuspidal_expand(const GLWord& w, std::int64_t letter_bound) {
  if (w.letters() > letter_bound)
    throw WordTooLarge("word " + w.str() + " has " + std::to_string(w.letters()) + " cuspidal letters (bound " +
                       std::to_string(letter_bound) + ")");
  thread_local std::map<GLWord, StringSum> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  StringSum acc = StringSum::single(ExpString{});
  for (const auto& g : w.factors()) acc = shuffle(acc, StringSum::single(gen_string(g)));
  if (memo.size() > 20000) memo.clear();
  memo.emplace(w, acc);
  return acc;
}

StringSum cuspidal_expand(const WordSum& s, std::int64_t letter_bound) {
  StringSum out;
  for (const auto& [w, c] : s) out.add(cuspidal_expand(w, letter_bound), c);
  return out;
}

Coeff string_mult(const StringSum& s, const ExpString& t) { return s.coeff(t); }

std::vector<Letter> support(const GLWord& w) {
  std::vector<Letter> out;
  for (const auto& g : w.factors())
    for (const auto& l : gen_string(g).v) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Letter> support(const ExpString& s) {
  std::vector<Letter> out = s.v;
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// counting without expansion

Coeff count_interleavings(const std::vector<ExpString>& parts, const ExpString& target) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  if (total != target.size()) return 0;
  if (parts.empty()) return 1;
  std::vector<std::size_t> pos(parts.size(), 0);
  std::unordered_map<std::string, Coeff> memo;
  std::function<Coeff(std::size_t)> rec = [&](std::size_t k) -> Coeff {
    if (k == target.size()) return 1;
    std::string key;
    key.reserve(pos.size());
    for (auto p : pos) key.push_back(static_cast<char>(p));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Coeff acc = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (pos[i] < parts[i].size() && parts[i].v[pos[i]] == target.v[k]) {
        ++pos[i];
        acc = checked_add(acc, rec(k + 1));
        --pos[i];
      }
    }
    memo.emplace(std::move(key), acc);
    return acc;
  };
  return rec(0);
}

StringSum rmin_induced(const GLWord& w, const StringSum& tail, std::int64_t letter_bound) {
  std::int64_t tail_len = 0;
  for (const auto& [t, c] : tail) tail_len = std::max<std::int64_t>(tail_len, static_cast<std::int64_t>(t.size()));
  if (w.letters() + tail_len > letter_bound)
    throw WordTooLarge("induced expression " + w.str() + " over a tail of length " + std::to_string(tail_len) +
                       " exceeds the letter bound " + std::to_string(letter_bound));
  return shuffle(cuspidal_expand(Mstar_GL(w), letter_bound), tail);
}

namespace {

bool sub_multiset(const std::vector<Letter>& small, const std::vector<Letter>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Letter> merge_sorted(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Letter> minus_sorted(const std::vector<Letter>& big, const std::vector<Letter>& small) {
  std::vector<Letter> out;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(out));
  return out;
}

struct Option {
  std::vector<ExpString> pieces;
  std::vector<Letter> supp;
  Coeff c;
};

}  // namespace

Coeff rmin_induced_mult(const GLWord& w, const StringSum& tail, const ExpString& target) {
  const std::vector<Letter> tsupp = support(target);
  std::vector<std::vector<Option>> options;
  for (const auto& g : w.factors()) {
    std::vector<Option> opts;
    for (const auto& [word, c] : Mstar_GL(g)) {
      Option o;
      o.c = c;
      for (const auto& f : word.factors()) o.pieces.push_back(gen_string(f));
      o.supp = support(word);
      if (sub_multiset(o.supp, tsupp)) opts.push_back(std::move(o));
    }
    if (opts.empty()) return 0;
    options.push_back(std::move(opts));
  }
  std::vector<std::pair<ExpString, Coeff>> tails;
  for (const auto& [t, c] : tail) tails.emplace_back(t, c);

  Coeff total = 0;
  std::vector<ExpString> pieces;
  std::function<void(std::size_t, const std::vector<Letter>&, Coeff)> rec =
      [&](std::size_t k, const std::vector<Letter>& used, Coeff c) {
        if (k == options.size()) {
          std::vector<Letter> rest = minus_sorted(tsupp, used);
          for (const auto& [t, ct] : tails) {
            if (support(t) != rest) continue;
            pieces.push_back(t);
            Coeff n = count_interleavings(pieces, target);
            pieces.pop_back();
            if (n) total = checked_add(total, checked_mul(checked_mul(n, c), ct));
          }
          return;
        }
        for (const auto& o : options[k]) {
          std::vector<Letter> u = merge_sorted(used, o.supp);
          if (!sub_multiset(u, tsupp)) continue;
          std::size_t before = pieces.size();
          for (const auto& p : o.pieces) pieces.push_back(p);
          rec(k + 1, u, checked_mul(c, o.c));
          pieces.resize(before);
        }
      };
  rec(0, {}, 1);
  return total;
}

}  // namespace apk
