// SPDX-License-Identifier: MIT

#include "apk/socle.hpp"

#include <algorithm>
#include <set>

namespace apk {

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);

bool linked_point(HalfInt x, const Segment& s) {
  if (s.empty()) return false;
  return x == s.x - 1 || x == s.y + 1;
}

std::vector<Letter> project(const ExpString& s, LineId line, HalfInt u) {
  std::vector<Letter> out;
  for (const auto& l : s.v)
    if (l.line == line && (l.e == u || l.e == u + 1)) out.push_back(l);
  return out;
}

std::optional<TemperedSymbol> extend_tempered(const TemperedSymbol& t, HalfInt x) {
  const HalfInt a = t.alpha;
  switch (t.tag) {
    case TempTag::Cusp:
      if (a > HalfInt() && x == a) return TemperedSymbol::gen_steinberg(a, 0);
      break;
    case TempTag::GenSteinberg:
      if (x == a + t.n + 1) return TemperedSymbol::gen_steinberg(a, t.n + 1);
      if (x == a - 1 && a >= HalfInt::from_twice(3)) return TemperedSymbol::strongly_positive(a, 0, t.n);
      break;
    case TempTag::StronglyPositive:
      if (x == a + t.m && t.m + 1 <= t.n) return TemperedSymbol::strongly_positive(a, t.m + 1, t.n);
      if (x == a + t.n + 1) return TemperedSymbol::strongly_positive(a, t.m, t.n + 1);
      break;
    case TempTag::PMZeroChain:
      if (x == HalfInt::of(t.n + 1)) return TemperedSymbol::pm_zero_chain(t.n + 1, t.sign);
      break;
    case TempTag::PMSquare:
      if (x == t.y + 1) return TemperedSymbol::pm_square(a, t.x, t.y + 1, t.sign);
      break;
    case TempTag::TauPM:
      if (x == HalfInt::of(t.n + 1)) return TemperedSymbol::tau_pm(t.sign, t.n + 1);
      break;
    case TempTag::ZeroInduced: break;
  }
  return std::nullopt;
}

int pick_sign(int hint) {
  if (hint != 1 && hint != -1) throw PreconditionError("a sign hint of +-1 is required to choose between sign twins");
  return hint;
}

StringSum prepend(HalfInt x, const StringSum& s) {
  StringSum out;
  for (const auto& [str, c] : s) out.add(ExpString{{Letter{0, x}}} + str, c);
  return out;
}

bool links(HalfInt x, const Segment& s) {
  // s stands for delta([-y,-x]); nu^x links to either end
  return x == -s.y - 1 || x == -s.x + 1;
}

// nu^x x delta([-v,-u]) with x = 1-u has socle delta([-v,x]); at x = alpha
// a segment delta([-alpha,alpha-1]) closes into delta([-alpha,alpha]_+-)
// over sigma (sign twins)
std::optional<SocleStep> merge_rule(const BaseCusp& base, HalfInt x, const LanglandsDatum& parent, int sign_hint) {
  const HalfInt a = base.alpha();
  const auto& segs = parent.segs;
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].x == -x + 1) {
      if (hit) return std::nullopt;
      hit = i;
    } else if (links(x, segs[i])) {
      return std::nullopt;
    }
  }
  if (!hit) return std::nullopt;
  const Segment& s = segs[*hit];
  std::vector<Segment> rest;
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (i != *hit) rest.push_back(segs[i]);
  if (parent.temp.tag == TempTag::Cusp && a >= HalfInt::of(1) && x == a && s.x == -a + 1 && s.y == a)
    return SocleStep{LanglandsDatum::make(rest, TemperedSymbol::pm_square(a, a, a, pick_sign(sign_hint))), "close",
                     false, true};
  if (-x + s.y <= HalfInt()) return std::nullopt;
  rest.push_back(Segment::make(-x, s.y));
  return SocleStep{LanglandsDatum::make(rest, parent.temp), "merge", false, false};
}

}  // namespace

// ---------------------------------------------------------------------------

bool trace_equivalent(const ExpString& a, const ExpString& b) {
  if (a.size() != b.size()) return false;
  std::set<std::pair<LineId, HalfInt>> keys;
  for (const auto& l : a.v) keys.insert({l.line, l.e});
  for (const auto& l : b.v) keys.insert({l.line, l.e});
  for (const auto& [line, u] : keys) {
    if (project(a, line, u) != project(b, line, u)) return false;
    if (project(a, line, u - 1) != project(b, line, u - 1)) return false;
  }
  return true;
}

std::optional<ExpString> strip_front(const ExpString& s, const Letter& x) {
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    const Letter& l = s.v[i];
    if (l == x) {
      ExpString r = s;
      r.v.erase(r.v.begin() + static_cast<std::ptrdiff_t>(i));
      return r;
    }
    if (l.line == x.line && abs(l.e - x.e) == HalfInt::of(1)) return std::nullopt;
  }
  return std::nullopt;
}

bool tempered_irreducible(HalfInt x, const TemperedSymbol& t) {
  const HalfInt a = t.alpha;
  const HalfInt ax = abs(x);
  switch (t.tag) {
    case TempTag::Cusp: return ax != a;
    case TempTag::GenSteinberg: return ax != abs(a - 1) && ax != a + t.n + 1;
    default: return false;
  }
}

std::optional<SocleStep> socle_rule(const BaseCusp& base, HalfInt x, const LanglandsDatum& parent, int sign_hint) {
  const HalfInt a = base.alpha();
  const TemperedSymbol& tau = parent.temp;
  if (tau.alpha != a) throw PreconditionError("datum " + parent.str() + " is not over the configured base");
  const auto& segs = parent.segs;
  const auto env = langlands_sub_envelope(parent).gens;
  bool commute_all = std::none_of(env.begin(), env.end(), [&](const GLGen& g) { return linked_point(x, g.seg); });
  std::optional<HalfInt> min_e2, max_e2;
  for (const auto& s : segs) {
    HalfInt e2 = seg_exponent_twice(s);
    if (!min_e2 || e2 < *min_e2) min_e2 = e2;
    if (!max_e2 || e2 > *max_e2) max_e2 = e2;
  }
  auto with_point = [&](HalfInt v) {
    auto s2 = segs;
    s2.push_back(Segment::point(v));
    return LanglandsDatum::make(s2, tau);
  };

  if (x < HalfInt()) {
    if (max_e2 && -x * 2 < *max_e2) return merge_rule(base, x, parent, sign_hint);
    return SocleStep{with_point(-x), "neg", segs.empty() && tempered_irreducible(x, tau), false};
  }
  if (x == HalfInt()) {
    if (!segs.empty() && !commute_all) return merge_rule(base, x, parent, sign_hint);
    if (a == HalfInt() && tau.tag == TempTag::Cusp)
      return SocleStep{LanglandsDatum::make(segs, TemperedSymbol::pm_zero_chain(0, pick_sign(sign_hint))), "zero",
                       false, true};
    if (a > HalfInt() && tau.tag == TempTag::Cusp)
      return SocleStep{LanglandsDatum::make(segs, TemperedSymbol::zero_induced(a)), "zero", segs.empty(), false};
    if (a == HalfInt::of(1) && tau.tag == TempTag::GenSteinberg)
      return SocleStep{LanglandsDatum::make(segs, TemperedSymbol::tau_pm(pick_sign(sign_hint), tau.n + 1)), "zero", false,
                       true};
    return std::nullopt;
  }
  if (commute_all) {
    // nu^1 |x nu^0 |x sigma contains both tau([0]_+-;delta([1]))
    if (a == HalfInt::of(1) && x == a && tau.tag == TempTag::ZeroInduced && tau.n < 0)
      return SocleStep{LanglandsDatum::make(segs, TemperedSymbol::tau_pm(pick_sign(sign_hint), 1)), "zero", false, true};
    if (auto t2 = extend_tempered(tau, x)) return SocleStep{LanglandsDatum::make(segs, *t2), "extend", false, false};
    if (tempered_irreducible(x, tau) && (!min_e2 || x * 2 <= *min_e2))
      return SocleStep{with_point(x), "flip", segs.empty(), false, true};
  }
  if (auto m = merge_rule(base, x, parent, sign_hint)) return m;
  if (a == kHalf && x == kHalf && tau.tag == TempTag::Cusp && min_e2 == HalfInt::of(1)) {
    auto pt = Segment::point(kHalf);
    if (std::count(segs.begin(), segs.end(), pt) == 1) {
      std::vector<Segment> s2;
      for (const auto& s : segs)
        if (s != pt) s2.push_back(s);
      return SocleStep{LanglandsDatum::make(s2, TemperedSymbol::pm_square(a, kHalf, kHalf, -1)), "link", false, false};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SocleCertificate count_certificate(HalfInt x, const LanglandsDatum& parent, const LanglandsDatum& candidate, bool twin,
                                   bool flip, std::int64_t letter_bound) {
  SocleCertificate c;
  c.x = x;
  c.parent = parent;
  c.target = candidate;
  c.leading_string = ExpString{{Letter{0, x}}} + leading_string(parent);
  c.target_lead = leading_string(candidate);
  if (flip) {
    // the last -x of the GL part may be read as x, since nu^{-x} |x tau = nu^x |x tau
    const std::size_t gl_len = c.target_lead.size() - tail_lead(candidate.temp).size();
    for (std::size_t i = gl_len; i-- > 0;)
      if (c.target_lead.v[i] == Letter{0, -x}) {
        c.target_lead.v[i].e = x;
        break;
      }
  }
  if (candidate.temp.tag == TempTag::TauPM && !trace_equivalent(c.leading_string, c.target_lead)) {
    // tau([0]_+-;delta([1,n])) also has the string (n,..,1,0)
    const std::size_t gl_len = c.target_lead.size() - tail_lead(candidate.temp).size();
    ExpString alt;
    alt.v.assign(c.target_lead.v.begin(), c.target_lead.v.begin() + static_cast<std::ptrdiff_t>(gl_len));
    alt = alt + gen_string(GLGen::delta(HalfInt::of(1), HalfInt::of(candidate.temp.n))) +
          ExpString{{Letter{0, HalfInt()}}};
    if (trace_equivalent(c.leading_string, alt)) c.target_lead = alt;
  }
  c.envelope = langlands_sub_envelope(parent);
  c.envelope.gens.insert(c.envelope.gens.begin(), GLGen::point(x));
  if (static_cast<std::int64_t>(c.leading_string.size()) > letter_bound)
    throw WordTooLarge("certificate string exceeds the letter bound");
  c.raw_count = rmin_induced_mult(c.envelope.word(), tail_upper_bound(parent.temp, letter_bound), c.leading_string);
  c.multiplicity = twin ? c.raw_count - 1 : c.raw_count;
  c.external = twin;
  return c;
}

SocleCertificate socle_of(HalfInt x, const LanglandsDatum& parent, const LanglandsDatum& candidate, bool twin,
                          bool flip, std::int64_t letter_bound) {
  SocleCertificate c = count_certificate(x, parent, candidate, twin, flip, letter_bound);
  if (!trace_equivalent(c.leading_string, c.target_lead))
    throw CertificateFailure("lead of " + candidate.str() + " " + c.target_lead.str() + " is not equivalent to " +
                             c.leading_string.str());
  if (c.multiplicity != 1)
    throw MultiplicityNotOne("string " + c.leading_string.str() + " has multiplicity " + std::to_string(c.multiplicity) +
                                 " in [" + x.str() + "] x " + parent.str(),
                             c.multiplicity);
  return c;
}

SocleCertificate socle_step(const BaseCusp& base, HalfInt x, const LanglandsDatum& parent, int sign_hint) {
  auto st = socle_rule(base, x, parent, sign_hint);
  if (!st) throw UnsupportedSymbol("no socle rule for [" + x.str() + "] x " + parent.str());
  SocleCertificate c = socle_of(x, parent, st->cand, st->twin, st->flip);
  c.rule = st->rule;
  return c;
}

// ---------------------------------------------------------------------------

std::vector<ExpString> trace_class(const ExpString& t, std::size_t cap) {
  std::set<ExpString> seen{t};
  std::vector<ExpString> todo{t};
  while (!todo.empty()) {
    ExpString cur = std::move(todo.back());
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < cur.v.size(); ++i) {
      const Letter& p = cur.v[i];
      const Letter& q = cur.v[i + 1];
      if (p == q || (p.line == q.line && abs(p.e - q.e) == HalfInt::of(1))) continue;
      ExpString nxt = cur;
      std::swap(nxt.v[i], nxt.v[i + 1]);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) return {};
        todo.push_back(std::move(nxt));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

RepBounds RepBounds::base(const BaseCusp& base) {
  auto n = std::make_shared<Node>();
  n->datum = LanglandsDatum::tempered(TemperedSymbol::cusp(base.alpha()));
  n->lower = StringSum::single(ExpString{});
  RepBounds r;
  r.node_ = std::move(n);
  return r;
}

Coeff RepBounds::induced_upper(HalfInt x, const ExpString& t) const {
  static thread_local std::map<HalfInt, StringSum> cache;
  auto it = cache.find(x);
  if (it == cache.end()) it = cache.emplace(x, cuspidal_expand(Mstar_GL(GLGen::point(x)))).first;
  return induced_upper(it->second, 1, t);
}

Coeff RepBounds::induced_upper(const StringSum& gs, std::size_t letters, const ExpString& t) const {
  const std::size_t n = t.v.size();
  if (letters > n) return 0;
  Coeff total = 0;
  std::vector<std::size_t> pick(letters);
  // every way of reading a string of the generator off positions of t
  auto rec = [&](auto&& self, std::size_t from, std::size_t k) -> void {
    if (k == letters) {
      ExpString g, rest;
      std::size_t j = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (j < letters && pick[j] == i) {
          g.v.push_back(t.v[i]);
          ++j;
        } else {
          rest.v.push_back(t.v[i]);
        }
      }
      Coeff c = gs.coeff(g);
      if (c != 0) total = checked_add(total, checked_mul(c, upper(rest)));
      return;
    }
    for (std::size_t i = from; i + (letters - k) <= n; ++i) {
      pick[k] = i;
      self(self, i + 1, k + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

Coeff RepBounds::upper(const ExpString& t) const {
  const Node& n = *node_;
  if (!n.parent) return t.v.empty() ? 1 : 0;
  if (auto it = n.memo.find(t); it != n.memo.end()) return it->second;
  RepBounds p;
  p.node_ = n.parent;
  Coeff v = p.induced_upper(n.gen_strings, n.gen_letters, t) - n.other.coeff(t);
  if (v < 0) throw CertificateFailure("inconsistent bounds at " + t.str() + " for " + n.datum.str());
  if (v > 0 && n.tail_ub) v = std::min(v, rmin_induced_mult(n.env.word(), *n.tail_ub, t));
  n.memo.emplace(t, v);
  return v;
}

RepBounds RepBounds::grow(const GLGen& g, int hint, const LanglandsDatum& next, StringSum lower,
                          const StringSum& other_lower) const {
  auto n = std::make_shared<Node>();
  n->parent = node_;
  n->gen = g;
  n->hint = hint;
  n->gen_strings = cuspidal_expand(Mstar_GL(GLWord::of(g)));
  n->gen_letters = static_cast<std::size_t>(g.letters());
  n->datum = next;
  n->lower = std::move(lower);
  n->other = other_lower;
  n->depth = node_->depth + 1;
  // the sign split of delta([0,n]_+-) is not an upper bound we can prove here
  if (next.temp.tag != TempTag::PMZeroChain) {
    n->tail_ub = tail_upper_bound(next.temp);
    n->env = langlands_sub_envelope(next);
  }
  RepBounds r;
  r.node_ = std::move(n);
  return r;
}

RepBounds RepBounds::then(HalfInt x, const LanglandsDatum& next, bool irreducible, const StringSum& other_lower,
                          int hint) const {
  const GLWord w = GLWord::of(GLGen::point(x));
  StringSum lower = irreducible ? rmin_induced(w, node_->lower) : prepend(x, node_->lower);
  return grow(GLGen::point(x), hint, next, std::move(lower), other_lower);
}

std::vector<std::pair<GLGen, int>> RepBounds::steps() const {
  std::vector<std::pair<GLGen, int>> out;
  for (const Node* n = node_.get(); n->parent; n = n->parent.get()) out.emplace_back(n->gen, n->hint);
  std::reverse(out.begin(), out.end());
  return out;
}

RepBounds RepBounds::then(const GLGen& g, const LanglandsDatum& next, const StringSum& other_lower, int hint) const {
  const GLWord w = GLWord::of(g);
  // Frobenius: every string of g followed by a string of the parent
  StringSum lower;
  for (const auto& [a, ca] : cuspidal_expand(w))
    for (const auto& [b, cb] : node_->lower) lower.add(a + b, checked_mul(ca, cb));
  return grow(g, hint, next, std::move(lower), other_lower);
}

namespace {

std::optional<SocleCertificate> chain_certificate(HalfInt x, const RepBounds& parent, const SocleStep& st) {
  SocleCertificate c = count_certificate(x, parent.datum(), st.cand, st.twin, st.flip);
  c.rule = st.rule;
  c.bound = "chain";
  c.raw_count = class_min(c.leading_string, [&](const ExpString& t) { return parent.induced_upper(x, t); });
  c.multiplicity = st.twin ? c.raw_count - 1 : c.raw_count;
  // an irreducible product is its own socle; the count is then a string count
  if (st.irreducible && c.raw_count > 0) c.multiplicity = 1;
  if (!trace_equivalent(c.leading_string, c.target_lead)) return std::nullopt;
  return c;
}

}  // namespace

BoundedStep bounded_step(const BaseCusp& base, HalfInt x, const RepBounds& parent, int sign_hint) {
  const LanglandsDatum& pi = parent.datum();
  auto st = socle_rule(base, x, pi, sign_hint);
  if (!st) throw UnsupportedSymbol("no socle rule for [" + x.str() + "] x " + pi.str());
  auto c = chain_certificate(x, parent, *st);
  if (!c) {
    SocleCertificate f = count_certificate(x, pi, st->cand, st->twin, st->flip);
    throw CertificateFailure("lead of " + st->cand.str() + " " + f.target_lead.str() + " is not equivalent to " +
                             f.leading_string.str());
  }
  if (st->rule == "neg" && c->multiplicity > 1) {
    // nu^x |x pi sits in the standard module of cand, whose unique
    // irreducible subrepresentation is cand (multiplicity one there)
    c->multiplicity = 1;
    c->bound = "langlands";
  }
  if (c->multiplicity != 1)
    throw MultiplicityNotOne("string " + c->leading_string.str() + " has multiplicity " +
                                 std::to_string(c->multiplicity) + " in [" + x.str() + "] x " + pi.str(),
                             c->multiplicity);
  StringSum other;
  if (st->twin) {
    other = prepend(x, parent.lower());
  } else if (!st->irreducible && x != HalfInt()) {
    // nu^{-x} |x pi has the same constituents; a certified socle of it that
    // differs from ours is a second constituent
    // twins are not used here, so any sign will do
    auto st2 = socle_rule(base, -x, pi, sign_hint != 0 ? sign_hint : 1);
    if (st2 && !st2->twin && st2->cand != st->cand) {
      auto c2 = chain_certificate(-x, parent, *st2);
      if (c2 && c2->multiplicity == 1) other = prepend(-x, parent.lower());
    }
  }
  BoundedStep out{*c, parent.then(x, st->cand, st->irreducible, other, sign_hint)};
  return out;
}

std::optional<SocleStep> generator_rule(const BaseCusp& base, const GLGen& g, const LanglandsDatum& parent,
                                        int sign_hint) {
  const HalfInt a = base.alpha();
  if (g.tag != GenTag::Delta || g.seg.line != 0 || parent.temp.tag != TempTag::Cusp || a < HalfInt::of(1))
    return std::nullopt;
  // glue delta([-v,-u]) of the parent below delta([x,y]) when -u + 1 = x
  HalfInt lo = g.seg.x;
  std::vector<Segment> rest;
  bool glued = false;
  for (const auto& s : parent.segs) {
    if (!glued && -s.x + 1 == g.seg.x) {
      lo = -s.y;
      glued = true;
    } else {
      rest.push_back(s);
    }
  }
  if (lo != -a || g.seg.y < a) return std::nullopt;
  // the + sign at alpha = 1 keeps the segment apart (no glued socle)
  if (a == HalfInt::of(1) && sign_hint > 0) return std::nullopt;
  return SocleStep{LanglandsDatum::make(rest, TemperedSymbol::pm_square(a, a, g.seg.y, pick_sign(sign_hint))), "glue",
                   false, true};
}

BoundedStep bounded_generator_step(const BaseCusp& base, const GLGen& g, const RepBounds& parent, int sign_hint) {
  const LanglandsDatum& pi = parent.datum();
  auto st = generator_rule(base, g, pi, sign_hint);
  if (!st) throw UnsupportedSymbol("no socle rule for " + g.str() + " x " + pi.str());
  SocleCertificate c;
  c.x = HalfInt();
  c.parent = pi;
  c.target = st->cand;
  c.leading_string = gen_string(g) + leading_string(pi);
  c.target_lead = leading_string(st->cand);
  c.envelope = langlands_sub_envelope(pi);
  c.envelope.gens.insert(c.envelope.gens.begin(), g);
  c.rule = st->rule;
  c.bound = "chain";
  c.external = st->twin;
  if (!trace_equivalent(c.leading_string, c.target_lead))
    throw CertificateFailure("lead of " + st->cand.str() + " " + c.target_lead.str() + " is not equivalent to " +
                             c.leading_string.str());
  const StringSum gs = cuspidal_expand(Mstar_GL(GLWord::of(g)));
  const auto k = static_cast<std::size_t>(g.letters());
  c.raw_count = class_min(c.leading_string, [&](const ExpString& t) { return parent.induced_upper(gs, k, t); });
  c.multiplicity = st->twin ? c.raw_count - 1 : c.raw_count;
  if (c.multiplicity != 1)
    throw MultiplicityNotOne("string " + c.leading_string.str() + " has multiplicity " +
                                 std::to_string(c.multiplicity) + " in " + g.str() + " x " + pi.str(),
                             c.multiplicity);
  StringSum twin_lower;
  if (st->twin)
    for (const auto& [a, ca] : cuspidal_expand(GLWord::of(g)))
      for (const auto& [b, cb] : parent.lower()) twin_lower.add(a + b, checked_mul(ca, cb));
  return BoundedStep{c, parent.then(g, st->cand, twin_lower, sign_hint)};
}

Chain build_chain(const BaseCusp& base, const ExpString& s, int sign_hint) {
  Chain ch;
  RepBounds b = RepBounds::base(base);
  for (auto it = s.v.rbegin(); it != s.v.rend(); ++it) {
    if (it->line != 0) throw UnsupportedSymbol("chains live on the rho line only");
    BoundedStep st = bounded_step(base, it->e, b, sign_hint);
    b = st.next;
    ch.certs.push_back(std::move(st.cert));
  }
  ch.result = b.datum();
  ch.lower = b.lower();
  ch.bounds = b;
  std::reverse(ch.certs.begin(), ch.certs.end());
  return ch;
}

Coeff lb_coeff(const StringSum& lower, const ExpString& t) {
  Coeff best = 0;
  for (const auto& [s, c] : lower)
    if (c > best && trace_equivalent(s, t)) best = c;
  return best;
}

JacResult jac(const BaseCusp& base, const LanglandsDatum& pi, HalfInt x, bool irreducible_or_zero) {
  const Letter lx{0, x};
  StringSum ub;
  try {
    ub = datum_upper_bound(pi);
  } catch (const Error& e) {
    return JacResult::undecided(e.what());
  }
  StringSum ub_x;
  for (const auto& [s, c] : ub)
    if (!s.v.empty() && s.v.front() == lx) ub_x.add(ExpString{{s.v.begin() + 1, s.v.end()}}, c);
  if (ub_x.empty()) return JacResult::zero();

  auto rest = strip_front(leading_string(pi), lx);
  if (!rest) return JacResult::undecided("leading string of " + pi.str() + " cannot start with " + x.str());
  Chain ch;
  std::optional<RepBounds> top;
  try {
    ch = build_chain(base, *rest, pi.temp.sign);
    auto st = socle_rule(base, x, ch.result, pi.temp.sign);
    if (!st || st->cand != pi) return JacResult::undecided("no certified embedding of " + pi.str() + " over " + ch.result.str());
    top = bounded_step(base, x, *ch.bounds, pi.temp.sign).next;
  } catch (const Error& e) {
    return JacResult::undecided(e.what());
  }
  if (irreducible_or_zero) {
    // Frobenius gives ch.result <= Jac_x(pi) != 0, and the caller knows Jac_x(pi) is irreducible
    JacResult r;
    r.value.add(ch.result, 1);
    r.external = true;
    return r;
  }
  for (const auto& [t, c] : ub_x)
    if (std::min(c, top->upper(ExpString{{lx}} + t)) > lb_coeff(ch.lower, t))
      return JacResult::undecided("upper bound string " + t.str() + " is not covered by " + ch.result.str());
  JacResult r;
  r.value.add(ch.result, 1);
  return r;
}

LeadingJacquet leading_jacquet(const BaseCusp& base, const LanglandsDatum& pi, HalfInt x) {
  LeadingJacquet out;
  out.theta = pi;
  if (x == HalfInt()) {
    out.undecidable = true;
    return out;
  }
  while (true) {
    JacResult r = jac(base, out.theta, x);
    if (r.undecidable) {
      out.undecidable = true;
      return out;
    }
    if (r.is_zero()) return out;
    out.theta = r.value.begin()->first;
    ++out.f;
  }
}

bool jac_commute_check(const InducedExpr& e, HalfInt x, HalfInt y, std::int64_t letter_bound) {
  if (abs(x - y) == HalfInt::of(1)) throw PreconditionError("adjacent exponents do not commute");
  StringSum s = rmin_induced(e.word(), tail_upper_bound(e.tail, letter_bound), letter_bound);
  auto two = [&](HalfInt p, HalfInt q) {
    StringSum out;
    for (const auto& [str, c] : s)
      if (str.size() >= 2 && str.v[0] == Letter{0, p} && str.v[1] == Letter{0, q})
        out.add(ExpString{{str.v.begin() + 2, str.v.end()}}, c);
    return out;
  };
  return two(x, y) == two(y, x);
}

}  // namespace apk
