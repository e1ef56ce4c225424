// SPDX-License-Identifier: MIT
//
// Classical-group labels over a fixed cuspidal base: tempered symbols,
// Langlands data, induced expressions, envelopes and cuspidal strings.

#pragma once

#include <string>
#include <vector>

#include "apk/arthur.hpp"
#include "apk/gl_hopf.hpp"

namespace apk {

struct UnsupportedSymbol : Error { using Error::Error; };

// The cuspidal base sigma. Line 0 carries rho; line 1 is an auxiliary line
// used to balance the product of eps_sigma.
struct BaseCusp {
  std::string sigma_id = "sigma";
  PacketPair base;  // (psi_sigma, eps_sigma)
  // sign convention relating boundary signs to the +- labels of
  // delta([0,n]_+-;sigma); only meaningful for alpha = 0
  int pm_convention = 1;

  const CuspLine& rho() const { return base.psi.lines.at(0); }
  HalfInt alpha() const { return rho().alpha; }
  // eps_sigma(rho,1,1) when present, else +1
  int xi() const;
  void validate() const;
};

// alpha >= 1 integer: chain 1,3,..,2alpha-1 with eps(1) = xi, alternating
// alpha >= 3/2 half-integral: chain 2,4,..,2alpha-1 with eps(2) = -1, alternating
// alpha in {0, 1/2}: empty rho-line
BaseCusp make_standard_base(HalfInt alpha, int xi = 1);

enum class TempTag { Cusp, GenSteinberg, StronglyPositive, PMSquare, PMZeroChain, TauPM, ZeroInduced };

struct TemperedSymbol {
  TempTag tag = TempTag::Cusp;
  HalfInt alpha;
  int m = 0;   // StronglyPositive: first segment [alpha-1, alpha-1+m]
  int n = 0;   // GenSteinberg/StronglyPositive/PMZeroChain/TauPM length parameter
  HalfInt x;   // PMSquare [-x, y]
  HalfInt y;
  int sign = 0;

  static TemperedSymbol cusp(HalfInt alpha);
  // n = -1 collapses to the cusp
  static TemperedSymbol gen_steinberg(HalfInt alpha, int n);
  // m = -1 collapses to the generalised Steinberg
  static TemperedSymbol strongly_positive(HalfInt alpha, int m, int n);
  static TemperedSymbol pm_square(HalfInt alpha, HalfInt x, HalfInt y, int sign);
  static TemperedSymbol pm_zero_chain(int n, int sign);
  static TemperedSymbol tau_pm(int sign, int n);
  // nu^0 |x delta([alpha,alpha+n];sigma), irreducible for alpha > 0; n = -1 gives nu^0 |x sigma
  static TemperedSymbol zero_induced(HalfInt alpha, int n = -1);

  bool square_integrable() const;
  std::string str() const;
  auto operator<=>(const TemperedSymbol&) const = default;
  bool operator==(const TemperedSymbol&) const = default;
};

struct LanglandsDatum {
  std::vector<Segment> segs;  // canonical order, each with x + y > 0
  TemperedSymbol temp;

  static LanglandsDatum make(std::vector<Segment> segs, TemperedSymbol temp);
  static LanglandsDatum tempered(TemperedSymbol t) { return make({}, t); }
  bool is_tempered() const { return segs.empty(); }
  // one-point segments [x],[x+1],..,[y]
  static std::vector<Segment> tr(HalfInt x, HalfInt y);
  std::string str() const;
  auto operator<=>(const LanglandsDatum&) const = default;
  bool operator==(const LanglandsDatum&) const = default;
};

// An ordered induced representation g_1 x ... x g_k |x tail.
struct InducedExpr {
  std::vector<GLGen> gens;  // left to right, outermost first
  TemperedSymbol tail;

  GLWord word() const { return word_canon(gens); }
  std::string str() const;
};

// lambda(t): delta's with decreasing exponent over the tempered symbol
InducedExpr standard_module(const LanglandsDatum& d);
// the Langlands sub realization: negated segments (most negative first,
// runs of one-point segments grouped as Zeta) over the tempered symbol
InducedExpr langlands_sub_envelope(const LanglandsDatum& d);
// defining chain of a tempered symbol as generators over sigma
std::vector<GLGen> tail_chain(const TemperedSymbol& t);
// everything over sigma
InducedExpr full_cuspidal_envelope(const LanglandsDatum& d);

ExpString tail_lead(const TemperedSymbol& t);
ExpString leading_string(const LanglandsDatum& d);
// an upper bound for r_min of the tempered symbol
StringSum tail_upper_bound(const TemperedSymbol& t, std::int64_t letter_bound = kDefaultLetterBound);
// an upper bound for r_min of the datum
StringSum datum_upper_bound(const LanglandsDatum& d, std::int64_t letter_bound = kDefaultLetterBound);

// strings of gl |x sigma (the base must be cuspidal)
StringSum mu_star_cuspidal(const InducedExpr& e, std::int64_t letter_bound = kDefaultLetterBound);

// half sum of exponents, e(delta([x,y]))
HalfInt seg_exponent_twice(const Segment& s);

}  // namespace apk
