// SPDX-License-Identifier: MIT

#include "apk/classical.hpp"

#include <algorithm>
#include <map>

namespace apk {

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);

ExpString concat_strings(const std::vector<GLGen>& gens) {
  ExpString s;
  for (const auto& g : gens) s = s + gen_string(g);
  return s;
}

// Casselman-type filter on partial sums
StringSum casselman_filter(const StringSum& s, bool strict) {
  StringSum out;
  for (const auto& [str, c] : s) {
    HalfInt sum;
    bool ok = true;
    for (const auto& l : str.v) {
      sum += l.e;
      if (strict ? sum <= HalfInt() : sum < HalfInt()) {
        ok = false;
        break;
      }
    }
    if (ok) out.add(str, c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

int BaseCusp::xi() const {
  auto it = base.eps.find(JordanBlock::make(1, 1, 0));
  return it == base.eps.end() ? 1 : it->second;
}

void BaseCusp::validate() const {
  if (!base.psi.lines.count(0)) throw PreconditionError("base has no rho line");
  for (const auto& [id, l] : base.psi.lines) l.validate();
  base.validate();
  if (!is_elementary(base.psi) || !is_tempered(base.psi) || !is_ddr(base.psi))
    throw PreconditionError("psi_sigma must be elementary, tempered and discrete");
  for (const auto& [id, l] : base.psi.lines)
    if (!eps_cuspidal_on_line(base, id)) throw PreconditionError("eps_sigma is not cuspidal on line " + l.name);
  const HalfInt a = alpha();
  auto rho_blocks = base.psi.on_line(0);
  if (a >= HalfInt::of(1)) {
    int top = 0;
    for (const auto& b : rho_blocks) top = std::max(top, b.c());
    if (HalfInt::of(top) != a * 2 - 1)
      throw PreconditionError("max of Jord_rho(psi_sigma) must be 2 alpha - 1 = " + (a * 2 - 1).str());
  } else if (!rho_blocks.empty()) {
    throw PreconditionError("alpha < 1 requires an empty rho line in psi_sigma");
  }
  if (pm_convention != 1 && pm_convention != -1) throw PreconditionError("pm_convention must be +-1");
}

BaseCusp make_standard_base(HalfInt alpha, int xi) {
  if (alpha < HalfInt()) throw PreconditionError("alpha must be >= 0");
  if (xi != 1 && xi != -1) throw PreconditionError("xi must be +-1");
  BaseCusp b;
  CuspLine rho{0, "rho", alpha, CuspLine::parity_for_alpha(alpha), std::nullopt};
  CuspLine aux{1, "aux", HalfInt::of(1), Parity::Odd, std::nullopt};
  b.base.psi.lines = {{0, rho}, {1, aux}};
  int prod = 1;
  const std::int64_t top = (alpha * 2 - 1).twice() / 2;  // 2 alpha - 1 when alpha >= 1
  if (alpha >= HalfInt::of(1)) {
    if (alpha.is_integer()) {
      int e = xi;
      for (std::int64_t c = 1; c <= top; c += 2, e = -e) {
        auto blk = JordanBlock::make(static_cast<int>(c), 1, 0);
        b.base.psi.blocks.push_back(blk);
        b.base.eps[blk] = e;
        prod *= e;
      }
    } else {
      int e = -1;
      for (std::int64_t c = 2; c <= top; c += 2, e = -e) {
        auto blk = JordanBlock::make(static_cast<int>(c), 1, 0);
        b.base.psi.blocks.push_back(blk);
        b.base.eps[blk] = e;
        prod *= e;
      }
    }
  }
  auto auxb = JordanBlock::make(1, 1, 1);
  b.base.psi.blocks.push_back(auxb);
  b.base.eps[auxb] = prod;
  b.base.psi.normalize();
  b.sigma_id = "sigma(alpha=" + alpha.str() + ")";
  b.validate();
  return b;
}

// ---------------------------------------------------------------------------

TemperedSymbol TemperedSymbol::cusp(HalfInt alpha) {
  TemperedSymbol t;
  t.alpha = alpha;
  return t;
}

TemperedSymbol TemperedSymbol::gen_steinberg(HalfInt alpha, int n) {
  if (n == -1) return cusp(alpha);
  if (alpha <= HalfInt() || n < 0) throw PreconditionError("generalised Steinberg needs alpha > 0 and n >= 0");
  TemperedSymbol t = cusp(alpha);
  t.tag = TempTag::GenSteinberg;
  t.n = n;
  return t;
}

TemperedSymbol TemperedSymbol::strongly_positive(HalfInt alpha, int m, int n) {
  if (m == -1) return gen_steinberg(alpha, n);
  if (alpha < HalfInt::from_twice(3) || m < 0 || m > n)
    throw PreconditionError("strongly positive symbol needs alpha >= 3/2 and 0 <= m <= n");
  TemperedSymbol t = cusp(alpha);
  t.tag = TempTag::StronglyPositive;
  t.m = m;
  t.n = n;
  return t;
}

TemperedSymbol TemperedSymbol::pm_square(HalfInt alpha, HalfInt x, HalfInt y, int sign) {
  if (alpha <= HalfInt() || x > y || x < alpha || !(x - alpha).is_integer() || !(y - alpha).is_integer() ||
      (sign != 1 && sign != -1))
    throw PreconditionError("delta([-x,y]_+-) needs alpha > 0, alpha <= x <= y in alpha + Z and a sign");
  TemperedSymbol t = cusp(alpha);
  t.tag = TempTag::PMSquare;
  t.x = x;
  t.y = y;
  t.sign = sign;
  return t;
}

TemperedSymbol TemperedSymbol::pm_zero_chain(int n, int sign) {
  if (n < 0 || (sign != 1 && sign != -1)) throw PreconditionError("delta([0,n]_+-) needs n >= 0 and a sign");
  TemperedSymbol t = cusp(HalfInt());
  t.tag = TempTag::PMZeroChain;
  t.n = n;
  t.sign = sign;
  return t;
}

TemperedSymbol TemperedSymbol::tau_pm(int sign, int n) {
  if (n < 1 || (sign != 1 && sign != -1)) throw PreconditionError("tau([0]_+-;delta([1,n])) needs n >= 1");
  TemperedSymbol t = cusp(HalfInt::of(1));
  t.tag = TempTag::TauPM;
  t.n = n;
  t.sign = sign;
  return t;
}

TemperedSymbol TemperedSymbol::zero_induced(HalfInt alpha, int n) {
  if (alpha <= HalfInt()) throw PreconditionError("nu^0 |x sigma is reducible at alpha = 0");
  if (n < -1) throw PreconditionError("nu^0 |x delta([alpha,alpha+n];sigma) needs n >= -1");
  TemperedSymbol t = cusp(alpha);
  t.tag = TempTag::ZeroInduced;
  t.n = n;
  return t;
}

bool TemperedSymbol::square_integrable() const {
  switch (tag) {
    case TempTag::Cusp:
    case TempTag::GenSteinberg:
    case TempTag::StronglyPositive: return true;
    case TempTag::PMSquare: return x < y;
    case TempTag::PMZeroChain: return n >= 1;
    case TempTag::TauPM:
    case TempTag::ZeroInduced: return false;
  }
  return false;
}

std::string TemperedSymbol::str() const {
  auto pm = [](int s) { return s > 0 ? std::string("_+") : std::string("_-"); };
  switch (tag) {
    case TempTag::Cusp: return "sigma";
    case TempTag::GenSteinberg: return "delta(" + Segment::make(alpha, alpha + n).str() + ";sigma)";
    case TempTag::StronglyPositive:
      return "delta_sp(" + Segment::make(alpha - 1, alpha - 1 + m).str() + "," + Segment::make(alpha, alpha + n).str() +
             ";sigma)";
    case TempTag::PMSquare: return "delta(" + Segment::make(-x, y).str() + pm(sign) + ";sigma)";
    case TempTag::PMZeroChain: return "delta(" + Segment::make(HalfInt(), HalfInt::of(n)).str() + pm(sign) + ";sigma)";
    case TempTag::TauPM:
      return "tau([0]" + pm(sign) + ";delta(" + Segment::make(HalfInt::of(1), HalfInt::of(n)).str() + ";sigma))";
    case TempTag::ZeroInduced:
      if (n < 0) return "[0]|xsigma";
      return "[0]|xdelta(" + Segment::make(alpha, alpha + n).str() + ";sigma)";
  }
  return "?";
}

// ---------------------------------------------------------------------------

HalfInt seg_exponent_twice(const Segment& s) { return s.x + s.y; }

LanglandsDatum LanglandsDatum::make(std::vector<Segment> segs, TemperedSymbol temp) {
  LanglandsDatum d;
  for (auto& s : segs) {
    if (s.empty()) continue;
    if (seg_exponent_twice(s) <= HalfInt())
      throw PreconditionError("Langlands datum segment " + s.str() + " must have positive exponent");
    d.segs.push_back(s);
  }
  std::sort(d.segs.begin(), d.segs.end());
  d.temp = temp;
  return d;
}

std::vector<Segment> LanglandsDatum::tr(HalfInt x, HalfInt y) {
  std::vector<Segment> out;
  for (HalfInt e = x; e <= y; e = e + 1) out.push_back(Segment::point(e));
  return out;
}

std::string LanglandsDatum::str() const {
  if (segs.empty()) return temp.str();
  std::string s = "L(";
  for (std::size_t i = 0; i < segs.size(); ++i) s += (i ? "," : "") + segs[i].str();
  return s + ";" + temp.str() + ")";
}

std::string InducedExpr::str() const {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "x" : "") + gens[i].str();
  if (gens.empty()) s = "1";
  return s + " |x " + tail.str();
}

InducedExpr standard_module(const LanglandsDatum& d) {
  InducedExpr e;
  e.tail = d.temp;
  auto segs = d.segs;
  std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    return seg_exponent_twice(a) > seg_exponent_twice(b);
  });
  for (const auto& s : segs) e.gens.push_back(GLGen{GenTag::Delta, s}.canonical());
  return e;
}

InducedExpr langlands_sub_envelope(const LanglandsDatum& d) {
  struct Item {
    HalfInt key;  // twice the exponent of the original (positive) piece
    GLGen gen;
  };
  std::vector<Item> items;
  std::vector<HalfInt> others;  // twice exponents of everything, used for the grouping test
  std::map<HalfInt, int> points;
  for (const auto& s : d.segs) {
    if (s.x == s.y) {
      ++points[s.x];
    } else {
      items.push_back({seg_exponent_twice(s), GLGen::delta(-s.y, -s.x, s.line)});
    }
  }
  // maximal runs of consecutive point values, one copy each
  std::vector<std::pair<HalfInt, HalfInt>> runs;
  auto left = points;
  while (true) {
    auto it = std::find_if(left.begin(), left.end(), [](const auto& kv) { return kv.second > 0; });
    if (it == left.end()) break;
    HalfInt lo = it->first, hi = lo;
    --it->second;
    while (true) {
      auto nx = left.find(hi + 1);
      if (nx == left.end() || nx->second == 0) break;
      --nx->second;
      hi = hi + 1;
    }
    runs.emplace_back(lo, hi);
  }
  for (std::size_t r = 0; r < runs.size(); ++r) {
    auto [lo, hi] = runs[r];
    bool group = lo < hi;
    if (group) {
      for (const auto& s : d.segs)
        if (s.x != s.y) {
          HalfInt e2 = seg_exponent_twice(s);
          if (e2 > lo * 2 && e2 < hi * 2) group = false;
        }
      for (std::size_t q = 0; q < runs.size() && group; ++q) {
        if (q == r) continue;
        for (HalfInt v = runs[q].first; v <= runs[q].second; v = v + 1)
          if (v > lo && v < hi) group = false;
      }
    }
    const LineId line = d.segs.empty() ? 0 : d.segs.front().line;
    if (group) {
      items.push_back({lo + hi, GLGen::zeta(-hi, -lo, line)});
    } else {
      for (HalfInt v = lo; v <= hi; v = v + 1) items.push_back({v * 2, GLGen::point(-v, line)});
    }
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.key != b.key) return a.key > b.key;
    return a.gen < b.gen;
  });
  InducedExpr e;
  e.tail = d.temp;
  for (const auto& it : items) e.gens.push_back(it.gen);
  return e;
}

std::vector<GLGen> tail_chain(const TemperedSymbol& t) {
  const HalfInt a = t.alpha;
  switch (t.tag) {
    case TempTag::Cusp: return {};
    case TempTag::GenSteinberg: return {GLGen::delta(a, a + t.n)};
    case TempTag::StronglyPositive: return {GLGen::delta(a - 1, a - 1 + t.m), GLGen::delta(a, a + t.n)};
    case TempTag::PMSquare: return {GLGen::delta(-t.x, t.y)};
    case TempTag::PMZeroChain: return {GLGen::delta(HalfInt(), HalfInt::of(t.n))};
    case TempTag::TauPM: return {GLGen::point(HalfInt()), GLGen::delta(HalfInt::of(1), HalfInt::of(t.n))};
    case TempTag::ZeroInduced:
      if (t.n < 0) return {GLGen::point(HalfInt())};
      return {GLGen::point(HalfInt()), GLGen::delta(a, a + t.n)};
  }
  throw UnsupportedSymbol("unknown tempered symbol");
}

InducedExpr full_cuspidal_envelope(const LanglandsDatum& d) {
  InducedExpr e = langlands_sub_envelope(d);
  for (const auto& g : tail_chain(d.temp)) e.gens.push_back(g);
  e.tail = TemperedSymbol::cusp(d.temp.alpha);
  return e;
}

ExpString tail_lead(const TemperedSymbol& t) { return concat_strings(tail_chain(t)); }

ExpString leading_string(const LanglandsDatum& d) {
  return concat_strings(langlands_sub_envelope(d).gens) + tail_lead(d.temp);
}

StringSum tail_upper_bound(const TemperedSymbol& t, std::int64_t letter_bound) {
  const StringSum one = StringSum::single(ExpString{});
  switch (t.tag) {
    case TempTag::Cusp: return one;
    case TempTag::GenSteinberg: return StringSum::single(tail_lead(t));
    default: break;
  }
  StringSum env = rmin_induced(word_canon(tail_chain(t)), one, letter_bound);
  StringSum f = casselman_filter(env, t.square_integrable());
  if (t.tag == TempTag::PMZeroChain) {
    // the two signs have equal cuspidal strings; each gets half
    StringSum h;
    for (const auto& [s, c] : f) h.add(s, (c + 1) / 2);
    return h;
  }
  return f;
}

StringSum datum_upper_bound(const LanglandsDatum& d, std::int64_t letter_bound) {
  InducedExpr e = langlands_sub_envelope(d);
  return rmin_induced(e.word(), tail_upper_bound(d.temp, letter_bound), letter_bound);
}

StringSum mu_star_cuspidal(const InducedExpr& e, std::int64_t letter_bound) {
  if (e.tail.tag != TempTag::Cusp) throw PreconditionError("mu_star_cuspidal needs an expression over sigma");
  return rmin_induced(e.word(), StringSum::single(ExpString{}), letter_bound);
}

}  // namespace apk
