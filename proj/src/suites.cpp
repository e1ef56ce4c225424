// SPDX-License-Identifier: MIT

#include "apk/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace apk {

namespace {

template <class F>
std::vector<Check> parallel_checks(std::size_t n, unsigned jobs, F&& f) {
  std::vector<Check> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) out[i] = f(i);
  };
  const unsigned k = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < k; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Check from_family(const FamilyCheck& fc) {
  Check c;
  c.name = fc.name;
  c.pass = fc.pass;
  c.detail = fc.pass ? "got " + fc.got->str() : (fc.error.empty() ? "got " + (fc.got ? fc.got->str() : "-") : fc.error);
  if (!fc.pass) c.detail += "; expected " + fc.expected.str();
  c.data = to_json(fc);
  return c;
}

std::vector<EpsRule> rules_of(FamilyKind k) {
  switch (k) {
    case FamilyKind::RedGt1: return {EpsRule::Eps, EpsRule::EpsPrime};
    case FamilyKind::Red0:
    case FamilyKind::RedHalf: return {EpsRule::Plus, EpsRule::Minus};
    case FamilyKind::Red1: return {EpsRule::Plus, EpsRule::Minus, EpsRule::PlusMinusMinus};
  }
  return {};
}

struct GridPoint {
  int m, n;
  EpsRule rule;
};

// grid points where the theorems assert an answer; pi_{m,n} at alpha > 1
// comes from eps for n > m and from eps' for n < m
std::vector<GridPoint> grid(FamilyKind kind, int lo, int hi) {
  std::vector<GridPoint> out;
  for (EpsRule r : rules_of(kind))
    for (int m = lo; m <= hi; ++m)
      for (int n = lo; n <= hi; ++n) {
        if (m == n) continue;
        if (kind == FamilyKind::RedGt1 && (n > m) != (r == EpsRule::Eps)) continue;
        out.push_back({m, n, r});
      }
  return out;
}

GLGen random_gen(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> start(-6, 6), len(1, std::max(1, max_len)), tag(0, 1);
  HalfInt x = HalfInt::from_twice(start(rng));
  HalfInt y = x + (len(rng) - 1);
  return tag(rng) ? GLGen::delta(x, y) : GLGen::zeta(x, y);
}

GLWord random_word(std::mt19937& rng, int max_letters) {
  std::uniform_int_distribution<int> total(1, max_letters);
  int left = total(rng);
  std::vector<GLGen> f;
  while (left > 0) {
    GLGen g = random_gen(rng, std::min(left, 4));
    left -= static_cast<int>(g.letters());
    f.push_back(g);
  }
  return word_canon(std::move(f));
}

auto sorted_d(const AParam& p) {
  auto v = psi_d(p);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool Suite::pass() const { return failed() == 0 && passed() > 0; }

std::size_t Suite::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

std::size_t Suite::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.skipped; }));
}

std::size_t Suite::failed() const { return checks.size() - passed() - skipped(); }

Json Suite::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json j{{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}, {"detail", c.detail}};
    if (!c.data.is_null()) j["data"] = c.data;
    cs.push_back(j);
  }
  return Json{{"suite", name},
              {"checks", cs},
              {"passed", passed()},
              {"failed", failed()},
              {"skipped", skipped()},
              {"pass", pass()}};
}

std::optional<FamilyKind> family_kind_at(HalfInt alpha) {
  if (alpha == HalfInt()) return FamilyKind::Red0;
  if (alpha == HalfInt::from_twice(1)) return FamilyKind::RedHalf;
  if (alpha == HalfInt::of(1)) return FamilyKind::Red1;
  if (alpha >= HalfInt::from_twice(3)) return FamilyKind::RedGt1;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Suite suite_hopf_closed_form(HalfInt lo, HalfInt hi) {
  Suite s{"hopf closed forms", {}};
  for (std::int64_t tx = lo.twice(); tx <= hi.twice(); ++tx)
    for (std::int64_t ty = tx; ty <= hi.twice(); ty += 2)
      for (GenTag tag : {GenTag::Delta, GenTag::Zeta}) {
        HalfInt x = HalfInt::from_twice(tx), y = HalfInt::from_twice(ty);
        GLGen g = tag == GenTag::Delta ? GLGen::delta(x, y) : GLGen::zeta(x, y);
        Check c;
        c.name = (tag == GenTag::Delta ? "Delta" : "Zeta") + Segment::make(x, y).str();
        RTensorR def = Mstar(GLWord::of(g)), closed = Mstar_closed_form(g);
        c.pass = def == closed;
        c.detail = std::to_string(def.size()) + " terms";
        if (!c.pass) c.detail += " vs " + std::to_string(closed.size()) + " in the closed form";
        s.checks.push_back(std::move(c));
      }
  return s;
}

Suite suite_hopf_random(int words, int max_letters, std::uint32_t seed) {
  Suite s{"hopf coassociativity and multiplicativity", {}};
  std::mt19937 rng(seed);
  for (int i = 0; i < words; ++i) {
    GLWord w = random_word(rng, max_letters);
    Check c;
    c.name = "word " + w.str();
    bool coassoc = coassoc_left(w) == coassoc_right(w);
    // split the factors into two words and compare the products
    const auto& f = w.factors();
    std::uniform_int_distribution<std::size_t> cut(0, f.size());
    std::size_t k = cut(rng);
    GLWord a = word_canon({f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k)});
    GLWord b = word_canon({f.begin() + static_cast<std::ptrdiff_t>(k), f.end()});
    bool small_mult = mstar(w) == tensor_mul(mstar(a), mstar(b));
    bool big_mult = Mstar(w) == tensor_mul(Mstar(a), Mstar(b));
    c.pass = coassoc && small_mult && big_mult;
    c.detail = std::string("coassociative ") + (coassoc ? "yes" : "no") + ", m* multiplicative " +
               (small_mult ? "yes" : "no") + ", M* multiplicative " + (big_mult ? "yes" : "no");
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_recursion_endpoints(const std::vector<HalfInt>& alphas, int n_max) {
  Suite s{"recursion endpoints", {}};
  for (HalfInt a : alphas) {
    BaseCusp base = make_standard_base(a, 1);
    const int ta = static_cast<int>(a.twice());
    for (int n = 0; n <= n_max; ++n) {
      Check c;
      c.name = "alpha=" + a.str() + " n=" + std::to_string(n);
      const LanglandsDatum want = LanglandsDatum::tempered(TemperedSymbol::gen_steinberg(a, n));
      try {
        PacketPair pp = family_packet_kl(base, FamilyKind::RedGt1, ta + 1 + 2 * n, ta - 3, EpsRule::Eps);
        ReductionTrace tr = moeglin_rep(base, pp);
        bool ones = std::all_of(tr.certificates.begin(), tr.certificates.end(),
                                [](const SocleCertificate& x) { return x.multiplicity == 1; });
        c.pass = tr.result == want && ones && !tr.certificates.empty();
        c.detail = pp.str() + " -> " + tr.result.str() + ", " + std::to_string(tr.certificates.size()) +
                   " certificates" + (ones ? "" : " (a multiplicity is not 1)");
        c.data = to_json(tr);
      } catch (const Error& e) {
        c.detail = e.what();
      }
      s.checks.push_back(std::move(c));
    }
  }
  return s;
}

Suite suite_family_grid(const BaseCusp& base, FamilyKind kind, int lo, int hi, unsigned jobs) {
  Suite s{std::string("family ") + to_string(kind) + " at alpha=" + base.alpha().str(), {}};
  auto pts = grid(kind, lo, hi);
  s.checks = parallel_checks(pts.size(), jobs, [&](std::size_t i) {
    return from_family(verify_family(base, kind, pts[i].m, pts[i].n, pts[i].rule));
  });
  return s;
}

Suite suite_duality_grid(const BaseCusp& base, FamilyKind kind, int lo, int hi, unsigned jobs) {
  Suite s{std::string("duality ") + to_string(kind) + " at alpha=" + base.alpha().str(), {}};
  auto pts = grid(kind, lo, hi);
  s.checks = parallel_checks(pts.size(), jobs, [&](std::size_t i) {
    try {
      FamilyCase c = theorem_label(base, kind, pts[i].m, pts[i].n, pts[i].rule);
      return from_family(verify_duality(base, c));
    } catch (const Error& e) {
      Check c;
      c.name = std::string(to_string(kind)) + " dual (m,n)=(" + std::to_string(pts[i].m) + "," +
               std::to_string(pts[i].n) + ")";
      c.detail = e.what();
      return c;
    }
  });
  // the duality formulas are involutions on labels
  for (const auto& p : pts) {
    FamilyCase c = theorem_label(base, kind, p.m, p.n, p.rule);
    if (dual_label(dual_label(c)) == c) continue;
    Check bad;
    bad.name = "involution " + c.str();
    bad.detail = "dual of dual is " + dual_label(dual_label(c)).str();
    s.checks.push_back(bad);
  }
  return s;
}

Suite suite_endpoints(const BaseCusp& base, int n_lo, int n_hi) {
  Suite s{"endpoints at alpha=" + base.alpha().str(), {}};
  for (int n = n_lo; n <= n_hi; ++n)
    for (const auto& fc : corollary_endpoints(base, n, n)) {
      Check c = from_family(fc);
      c.name = "n=" + std::to_string(n) + " " + c.name;
      s.checks.push_back(std::move(c));
    }
  for (int m = 0; m <= n_hi; ++m) s.checks.push_back(from_family(verify_family_diagonal(base, m)));
  return s;
}

Suite suite_catalog(const BaseCusp& base, unsigned jobs) {
  Suite s{"catalog at alpha=" + base.alpha().str(), {}};
  for (const auto& r : verify_catalog(base, jobs)) {
    Check c;
    c.name = r.name;
    c.pass = r.pass;
    std::size_t ok = static_cast<std::size_t>(
        std::count_if(r.labels.begin(), r.labels.end(), [](const LabelReport& l) { return l.pass; }));
    std::size_t pairs_ok = static_cast<std::size_t>(
        std::count_if(r.pairs.begin(), r.pairs.end(), [](const PairReport& p) { return p.pass; }));
    c.detail = "labels " + std::to_string(ok) + "/" + std::to_string(r.labels.size()) + " (expected " +
               std::to_string(r.expected_count) + "), pairs " + std::to_string(pairs_ok) + "/" +
               std::to_string(r.pairs.size()) + (r.critical ? "" : ", not of critical type");
    c.data = to_json(r);
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_appendix(const BaseCusp& base) {
  Suite s{"complementary-series lemma at alpha=" + base.alpha().str(), {}};
  const HalfInt a = base.alpha();
  if (a < HalfInt::of(1)) return s;
  for (HalfInt x = a - 1; x >= HalfInt(); x = x - 1) {
    Check c;
    c.name = "x=" + x.str();
    try {
      AppendixReport r = appendix_lemma(base, x);
      c.pass = r.pass;
      c.detail = (r.got ? r.got->str() : std::string("-")) + (r.detail.empty() ? "" : "; " + r.detail);
      c.data = to_json(r);
    } catch (const UnsupportedShift& e) {
      c.skipped = true;
      c.detail = e.what();
    } catch (const Error& e) {
      c.detail = e.what();
    }
    s.checks.push_back(std::move(c));
  }
  return s;
}

Suite suite_structural(int blocks, int pairs, std::uint32_t seed) {
  Suite s{"structural invariants", {}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> ab(1, 24);

  {
    Check c{"sum of 2j+1 over [B,A] is ab", true, false, {}, {}};
    for (int i = 0; i < blocks && c.pass; ++i) {
      JordanBlock b = JordanBlock::make(ab(rng), ab(rng));
      AParam p;
      p.blocks = {b};
      std::int64_t sum = 0;
      for (const auto& [line, d] : psi_d(p)) sum += d;
      if (sum != static_cast<std::int64_t>(b.a) * b.b) c.pass = false, c.detail = "fails on " + b.str();
    }
    if (c.pass) c.detail = std::to_string(blocks) + " random blocks";
    s.checks.push_back(c);
  }

  // random elementary pairs on one line
  auto random_pair = [&](HalfInt alpha) {
    BaseCusp base = make_standard_base(alpha, 1);
    PacketPair pp;
    pp.psi.lines = base.base.psi.lines;
    pp.product_override = true;
    const bool odd = base.rho().parity == Parity::Odd;
    std::vector<int> cs;
    for (int cval = odd ? 1 : 2; cval <= 13; cval += 2) cs.push_back(cval);
    std::shuffle(cs.begin(), cs.end(), rng);
    std::uniform_int_distribution<int> count(1, 5), coin(0, 1);
    cs.resize(static_cast<std::size_t>(count(rng)));
    for (int cval : cs) {
      JordanBlock b = JordanBlock::elem(cval, coin(rng) ? 1 : -1);
      pp.psi.blocks.push_back(b);
      pp.eps[b] = coin(rng) ? 1 : -1;
    }
    pp.psi.normalize();
    return pp;
  };
  const HalfInt alphas[] = {HalfInt(), HalfInt::from_twice(1), HalfInt::of(1), HalfInt::from_twice(3),
                            HalfInt::of(2), HalfInt::from_twice(5)};
  std::uniform_int_distribution<int> pick(0, 5);

  {
    Check c{"aubert_param is an involution", true, false, {}, {}};
    for (int i = 0; i < blocks && c.pass; ++i) {
      PacketPair pp = random_pair(alphas[pick(rng)]);
      PacketPair d = aubert_param(pp);
      bool ok = aubert_param(d) == pp && d.psi.weight(0) == pp.psi.weight(0) && is_elementary(d.psi) &&
                (!is_tempered(pp.psi) || is_cotempered(d.psi)) && sorted_d(pp.psi) == sorted_d(d.psi);
      if (!ok) c.pass = false, c.detail = "fails on " + pp.str();
    }
    if (c.pass) c.detail = std::to_string(blocks) + " random pairs";
    s.checks.push_back(c);
  }

  {
    Check c{"reduce_step lowers the weight by 2 and terminates", true, false, {}, {}};
    int total_steps = 0;
    for (int i = 0; i < blocks && c.pass; ++i) {
      PacketPair cur = random_pair(alphas[pick(rng)]);
      const std::int64_t w0 = cur.psi.weight(0);
      for (std::int64_t k = 0;; ++k) {
        if (k > w0) {
          c.pass = false, c.detail = "no termination from " + cur.str();
          break;
        }
        try {
          ReduceResult r = reduce_step(cur, 0);
          if (r.next.psi.weight(0) != cur.psi.weight(0) - 2 || !r.next.psi.good_parity()) {
            c.pass = false, c.detail = "bad step from " + cur.str();
            break;
          }
          cur = r.next;
          ++total_steps;
        } catch (const BoundaryCase&) {
          break;
        } catch (const NothingToReduce&) {
          break;
        }
      }
    }
    if (c.pass) c.detail = std::to_string(blocks) + " random pairs, " + std::to_string(total_steps) + " steps";
    s.checks.push_back(c);
  }

  {
    Check c{"Jac_x Jac_y = Jac_y Jac_x for non-adjacent x, y", true, false, {}, {}};
    const HalfInt alpha = HalfInt::of(2);
    int done = 0;
    std::uniform_int_distribution<int> e(-3, 3), len(1, 2), tag(0, 1), nf(1, 3);
    while (done < pairs && c.pass) {
      InducedExpr ex;
      ex.tail = TemperedSymbol::cusp(alpha);
      int letters = 0;
      for (int k = nf(rng); k > 0; --k) {
        HalfInt x = HalfInt::of(e(rng));
        HalfInt y = x + (len(rng) - 1);
        ex.gens.push_back(tag(rng) ? GLGen::delta(x, y) : GLGen::zeta(x, y));
        letters += static_cast<int>(ex.gens.back().letters());
      }
      if (letters > 7) continue;
      std::vector<HalfInt> sup;
      for (const auto& l : support(ex.word())) sup.push_back(l.e), sup.push_back(-l.e);
      std::uniform_int_distribution<std::size_t> at(0, sup.size() - 1);
      HalfInt x = sup[at(rng)], y = sup[at(rng)];
      if (x == y || abs(x - y) == HalfInt::of(1)) continue;
      ++done;
      if (!jac_commute_check(ex, x, y)) c.pass = false, c.detail = "fails on " + ex.str() + " at " + x.str() + ", " + y.str();
    }
    if (c.pass) c.detail = std::to_string(done) + " pairs";
    s.checks.push_back(c);
  }
  return s;
}

}  // namespace apk
