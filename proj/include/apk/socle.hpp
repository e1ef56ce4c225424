// SPDX-License-Identifier: MIT
//
// Socle certificates for nu^x |x pi, the step rules that propose the
// candidate, and the Jacquet operators Jac_x built on top of them.
//
// A certificate counts the candidate's leading string inside an upper bound
// for r_min of nu^x |x Env(pi). Count 1 identifies the socle. Steps that pick
// one of two sign twins (same strings) count 2 and deduct the twin.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apk/classical.hpp"

namespace apk {

struct MultiplicityNotOne : Error {
  Coeff count;
  MultiplicityNotOne(const std::string& what, Coeff c) : Error(what), count(c) {}
};
struct CertificateFailure : Error { using Error::Error; };

struct SocleCertificate {
  HalfInt x;
  LanglandsDatum parent;
  LanglandsDatum target;
  ExpString leading_string;  // (x) followed by lead(parent)
  ExpString target_lead;     // a string of r_min(target) read off its envelope
  Coeff raw_count = 0;       // coefficient in the envelope bound
  Coeff multiplicity = 0;    // raw_count minus known twins
  InducedExpr envelope;      // nu^x x Env(parent)
  std::string rule;
  bool external = false;     // sign fixed by a convention rather than by the count
  std::string bound = "envelope";  // "envelope", "chain" (see RepBounds) or "langlands"
};

// Equality in the trace monoid where letters commute unless they lie on
// the same line at distance <= 1.
bool trace_equivalent(const ExpString& a, const ExpString& b);
// A representative of s beginning with x, with that x removed.
std::optional<ExpString> strip_front(const ExpString& s, const Letter& x);

struct SocleStep {
  LanglandsDatum cand;
  std::string rule;
  bool irreducible = false;  // nu^x |x parent is irreducible, hence equal to cand
  bool twin = false;         // cand has a sign twin with the same strings
  bool flip = false;         // the new point [x] sits at the end as nu^{-x} |x tau = nu^x |x tau
};

// Rule table for soc(nu^x |x parent); sign_hint picks between sign twins.
std::optional<SocleStep> socle_rule(const BaseCusp& base, HalfInt x, const LanglandsDatum& parent, int sign_hint = 0);

// True when nu^x |x t is known to be irreducible (t tempered, cusp or
// generalised Steinberg only).
bool tempered_irreducible(HalfInt x, const TemperedSymbol& t);

// Count only; never throws on a bad count.
SocleCertificate count_certificate(HalfInt x, const LanglandsDatum& parent, const LanglandsDatum& candidate,
                                   bool twin = false, bool flip = false,
                                   std::int64_t letter_bound = kDefaultLetterBound);
// Throws MultiplicityNotOne or CertificateFailure (lead not equivalent).
SocleCertificate socle_of(HalfInt x, const LanglandsDatum& parent, const LanglandsDatum& candidate,
                          bool twin = false, bool flip = false, std::int64_t letter_bound = kDefaultLetterBound);
// socle_rule followed by socle_of; UnsupportedSymbol when no rule applies.
SocleCertificate socle_step(const BaseCusp& base, HalfInt x, const LanglandsDatum& parent, int sign_hint = 0);

// Jacquet bounds carried along a certified chain over sigma. upper(t) is
// the coefficient of t in r_min(nu^x |x parent) minus the lower bound of a
// certified second constituent (the socle for -x, or the sign twin), capped
// by the envelope bound of the datum; lower() holds Frobenius strings.
class RepBounds {
 public:
  static RepBounds base(const BaseCusp& base);
  const LanglandsDatum& datum() const { return node_->datum; }
  const StringSum& lower() const { return node_->lower; }
  std::size_t depth() const { return node_->depth; }
  Coeff upper(const ExpString& t) const;
  // coefficient bound for t in nu^x |x this
  Coeff induced_upper(HalfInt x, const ExpString& t) const;
  // the same for g |x this, with gs = r_min of M*_GL(g)
  Coeff induced_upper(const StringSum& gs, std::size_t letters, const ExpString& t) const;
  RepBounds then(HalfInt x, const LanglandsDatum& next, bool irreducible, const StringSum& other_lower,
                 int hint = 0) const;
  RepBounds then(const GLGen& g, const LanglandsDatum& next, const StringSum& other_lower, int hint = 0) const;
  // the steps from sigma up, innermost first, with their sign hints
  std::vector<std::pair<GLGen, int>> steps() const;

 private:
  struct Node {
    std::shared_ptr<const Node> parent;
    GLGen gen;
    int hint = 0;
    StringSum gen_strings;  // r_min of M*_GL of the step generator
    std::size_t gen_letters = 0;
    LanglandsDatum datum;
    StringSum lower;
    StringSum other;
    std::optional<StringSum> tail_ub;
    InducedExpr env;
    std::size_t depth = 0;
    mutable std::map<ExpString, Coeff> memo;
  };
  RepBounds grow(const GLGen& g, int hint, const LanglandsDatum& next, StringSum lower,
                 const StringSum& other_lower) const;
  std::shared_ptr<const Node> node_;
};

// smallest value of f over the strings equivalent to t (t itself when the
// class is too large to enumerate)
template <class F>
Coeff class_min(const ExpString& t, F&& f);
std::vector<ExpString> trace_class(const ExpString& t, std::size_t cap = 4096);

struct BoundedStep {
  SocleCertificate cert;
  RepBounds next;
};
// socle_rule, then the chain-bound certificate; throws like socle_of
BoundedStep bounded_step(const BaseCusp& base, HalfInt x, const RepBounds& parent, int sign_hint = 0);
// soc(g |x parent) for a whole segment generator, used where the letter by
// letter route meets nu^0 (whose two M* terms double every count)
std::optional<SocleStep> generator_rule(const BaseCusp& base, const GLGen& g, const LanglandsDatum& parent,
                                        int sign_hint);
BoundedStep bounded_generator_step(const BaseCusp& base, const GLGen& g, const RepBounds& parent, int sign_hint);

// Build a datum from an exponent string, innermost letter first.
struct Chain {
  LanglandsDatum result;
  std::optional<RepBounds> bounds;
  std::vector<SocleCertificate> certs;
  StringSum lower;  // raw lower bound for r_min(result); compare with lb_coeff
};
Chain build_chain(const BaseCusp& base, const ExpString& s, int sign_hint = 0);
// Lower bound coefficient of t: maximum over equivalent strings of `lower`.
Coeff lb_coeff(const StringSum& lower, const ExpString& t);

struct JacResult {
  bool undecidable = false;
  FormalSum<LanglandsDatum> value;
  std::string reason;
  bool external = false;  // rests on Jac_x(pi) being irreducible or 0
  static JacResult zero() { return {}; }
  static JacResult undecided(std::string why) { JacResult r; r.undecidable = true; r.reason = std::move(why); return r; }
  bool is_zero() const { return !undecidable && value.empty(); }
};

// Jac_x(pi) from a certified embedding pi -> nu^x |x theta and the Jacquet
// bounds of both sides. With irreducible_or_zero (known for descent along a
// domination) the embedding alone decides.
JacResult jac(const BaseCusp& base, const LanglandsDatum& pi, HalfInt x, bool irreducible_or_zero = false);

struct LeadingJacquet {
  bool undecidable = false;
  int f = 0;
  LanglandsDatum theta;
};
LeadingJacquet leading_jacquet(const BaseCusp& base, const LanglandsDatum& pi, HalfInt x);

// Jac_x Jac_y = Jac_y Jac_x on the strings of e (|x - y| != 1 required).
bool jac_commute_check(const InducedExpr& e, HalfInt x, HalfInt y, std::int64_t letter_bound = kDefaultLetterBound);

template <class F>
Coeff class_min(const ExpString& t, F&& f) {
  auto cls = trace_class(t);
  if (cls.empty()) return f(t);
  Coeff best = f(cls.front());
  for (std::size_t i = 1; i < cls.size() && best > 0; ++i) best = std::min(best, f(cls[i]));
  return best;
}

}  // namespace apk
