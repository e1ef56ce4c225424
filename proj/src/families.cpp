// SPDX-License-Identifier: MIT

#include "apk/families.hpp"

#include <algorithm>

namespace apk {

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);
const HalfInt kThreeHalves = HalfInt::from_twice(3);

int twice_int(HalfInt h) { return static_cast<int>(h.twice()); }

int eps_sigma_at(const BaseCusp& base, int c) {
  for (const auto& blk : base.base.psi.on_line(0))
    if (blk.c() == c) return base.base.eps_of(blk);
  throw PreconditionError("psi_sigma has no block with c = " + std::to_string(c));
}

void put(PacketPair& pp, int a, int b, int e) {
  if (a == 0 || b == 0) return;
  auto blk = JordanBlock::make(a, b, 0);
  if (pp.eps.count(blk)) throw PreconditionError("block " + blk.str() + " would occur twice");
  pp.psi.blocks.push_back(blk);
  pp.eps[blk] = e;
}

int sgn(int v) { return v > 0 ? 1 : -1; }

}  // namespace

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::RedGt1: return "gt1";
    case FamilyKind::Red0: return "zero";
    case FamilyKind::RedHalf: return "half";
    case FamilyKind::Red1: return "one";
  }
  return "?";
}

const char* to_string(FamilyLabel l) {
  switch (l) {
    case FamilyLabel::Pi: return "pi";
    case FamilyLabel::PiPlus: return "pi+";
    case FamilyLabel::PiMinus: return "pi-";
    case FamilyLabel::TauMinus: return "tau-";
  }
  return "?";
}

const char* to_string(EpsRule r) {
  switch (r) {
    case EpsRule::Eps: return "eps";
    case EpsRule::EpsPrime: return "eps'";
    case EpsRule::Plus: return "+";
    case EpsRule::Minus: return "-";
    case EpsRule::PlusMinusMinus: return "+--";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
  if (s == "gt1") return FamilyKind::RedGt1;
  if (s == "zero" || s == "0") return FamilyKind::Red0;
  if (s == "half" || s == "1/2") return FamilyKind::RedHalf;
  if (s == "one" || s == "1") return FamilyKind::Red1;
  throw ParseError("unknown family '" + s + "' (gt1, zero, half, one)");
}

EpsRule parse_eps_rule(const std::string& s) {
  if (s == "eps") return EpsRule::Eps;
  if (s == "eps'" || s == "epsprime") return EpsRule::EpsPrime;
  if (s == "+" || s == "plus") return EpsRule::Plus;
  if (s == "-" || s == "minus") return EpsRule::Minus;
  if (s == "+--" || s == "pmm") return EpsRule::PlusMinusMinus;
  throw ParseError("unknown eps rule '" + s + "'");
}

std::string FamilyCase::str() const {
  return std::string(to_string(label)) + "_{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

// ---------------------------------------------------------------------------

void check_family_base(const BaseCusp& base, FamilyKind kind) {
  const HalfInt a = base.alpha();
  switch (kind) {
    case FamilyKind::RedGt1:
      if (a < kThreeHalves) throw PreconditionError("this family needs alpha >= 3/2");
      return;
    case FamilyKind::Red0:
      if (a != HalfInt()) throw PreconditionError("this family needs alpha = 0");
      return;
    case FamilyKind::RedHalf:
      if (a != kHalf) throw PreconditionError("this family needs alpha = 1/2");
      return;
    case FamilyKind::Red1: {
      if (a != HalfInt::of(1)) throw PreconditionError("this family needs alpha = 1");
      auto on = base.base.psi.on_line(0);
      if (std::find(on.begin(), on.end(), JordanBlock::make(1, 1, 0)) == on.end())
        throw PreconditionError("this family needs (rho,1,1) in psi_sigma");
      return;
    }
  }
}

void check_case(const BaseCusp& base, const FamilyCase& c) {
  check_family_base(base, c.kind);
  auto bad = [&](const char* why) { throw PreconditionError(std::string(why) + " for " + c.str()); };
  switch (c.kind) {
    case FamilyKind::RedGt1:
      if (c.label != FamilyLabel::Pi) bad("only pi labels exist");
      if (c.m < -2 || c.n < -1) bad("needs m >= -2 and n >= -1");
      break;
    case FamilyKind::Red0:
      if (c.label != FamilyLabel::PiPlus && c.label != FamilyLabel::PiMinus) bad("needs a sign");
      if (c.m < 0 || c.n < 0) bad("needs m, n >= 0");
      break;
    case FamilyKind::RedHalf:
      if (c.label != FamilyLabel::PiPlus && c.label != FamilyLabel::PiMinus) bad("needs a sign");
      if (c.m < 1 || c.n < 1) bad("needs m, n >= 1");
      break;
    case FamilyKind::Red1:
      if (c.label == FamilyLabel::Pi) bad("needs pi+, pi- or tau-");
      if (c.m < 1 || c.n < 1) bad("needs m, n >= 1");
      break;
  }
}

LanglandsDatum family_datum(const BaseCusp& base, const FamilyCase& c) {
  check_case(base, c);
  const HalfInt a = base.alpha();
  const HalfInt one = HalfInt::of(1);
  switch (c.kind) {
    case FamilyKind::RedGt1:
      return LanglandsDatum::make(LanglandsDatum::tr(a - 1, a + c.m), TemperedSymbol::gen_steinberg(a, c.n));
    case FamilyKind::Red0:
      return LanglandsDatum::make(LanglandsDatum::tr(one, HalfInt::of(c.m)),
                                  TemperedSymbol::pm_zero_chain(c.n, c.label == FamilyLabel::PiPlus ? 1 : -1));
    case FamilyKind::RedHalf:
      if (c.label == FamilyLabel::PiPlus)
        return LanglandsDatum::make(LanglandsDatum::tr(kHalf, HalfInt::of(c.m) - kHalf),
                                    TemperedSymbol::gen_steinberg(a, c.n - 1));
      return LanglandsDatum::make(LanglandsDatum::tr(kThreeHalves, HalfInt::of(c.m) - kHalf),
                                  TemperedSymbol::pm_square(a, kHalf, HalfInt::of(c.n) - kHalf, -1));
    case FamilyKind::Red1:
      if (c.label == FamilyLabel::TauMinus)
        return LanglandsDatum::make(LanglandsDatum::tr(HalfInt::of(2), HalfInt::of(c.m)),
                                    TemperedSymbol::pm_square(a, one, HalfInt::of(c.n), -1));
      return LanglandsDatum::make(LanglandsDatum::tr(one, HalfInt::of(c.m)),
                                  TemperedSymbol::tau_pm(c.label == FamilyLabel::PiPlus ? 1 : -1, c.n));
  }
  throw PreconditionError("unknown family");
}

PacketPair family_packet_kl(const BaseCusp& base, FamilyKind kind, int k, int l, EpsRule rule) {
  check_family_base(base, kind);
  if (k < 0 || l < 0) throw PreconditionError("k and l must be >= 0");
  PacketPair pp = base.base;
  const HalfInt a = base.alpha();
  auto need = [&](std::initializer_list<EpsRule> ok) {
    if (std::find(ok.begin(), ok.end(), rule) == ok.end())
      throw PreconditionError(std::string("eps rule ") + to_string(rule) + " does not apply to family " + to_string(kind));
  };
  switch (kind) {
    case FamilyKind::RedGt1: {
      need({EpsRule::Eps, EpsRule::EpsPrime});
      const int top = twice_int(a) - 1, low = twice_int(a) - 3;
      const int e_top = eps_sigma_at(base, top);
      const int e_low = a == kThreeHalves ? 1 : eps_sigma_at(base, low);
      auto& bl = pp.psi.blocks;
      for (auto it = bl.begin(); it != bl.end();) {
        if (it->line == 0 && (it->c() == top || it->c() == low)) {
          pp.eps.erase(*it);
          it = bl.erase(it);
        } else {
          ++it;
        }
      }
      const bool plain = rule == EpsRule::Eps;
      put(pp, k, 1, plain ? e_top : e_low);
      put(pp, 1, l, plain ? e_low : e_top);
      break;
    }
    case FamilyKind::Red0:
    case FamilyKind::RedHalf: {
      need({EpsRule::Plus, EpsRule::Minus});
      const int s = rule == EpsRule::Plus ? 1 : -1;
      put(pp, k, 1, s);
      put(pp, 1, l, s);
      break;
    }
    case FamilyKind::Red1: {
      need({EpsRule::Plus, EpsRule::Minus, EpsRule::PlusMinusMinus});
      if (k == l || k <= 1 || l <= 1) throw PreconditionError("this family needs distinct k, l > 1");
      const int xi = base.xi();
      const auto one = JordanBlock::make(1, 1, 0);
      int e_one, e_min, e_max;
      if (rule == EpsRule::PlusMinusMinus) {
        e_one = xi, e_min = -xi, e_max = -xi;
      } else {
        const int s = rule == EpsRule::Plus ? 1 : -1;
        e_one = s * xi, e_min = s * xi, e_max = xi;
      }
      pp.eps[one] = e_one;
      put(pp, k, 1, k < l ? e_min : e_max);
      put(pp, 1, l, l < k ? e_min : e_max);
      break;
    }
  }
  pp.psi.normalize();
  pp.validate();
  return pp;
}

PacketPair family_packet(const BaseCusp& base, FamilyKind kind, int m, int n, EpsRule rule) {
  check_family_base(base, kind);
  int k, l;
  if (kind == FamilyKind::RedGt1) {
    k = twice_int(base.alpha()) + 1 + 2 * n;
    l = twice_int(base.alpha()) + 1 + 2 * m;
  } else if (kind == FamilyKind::RedHalf) {
    k = 2 * n, l = 2 * m;
  } else {
    k = 2 * n + 1, l = 2 * m + 1;
  }
  return family_packet_kl(base, kind, k, l, rule);
}

FamilyCase theorem_label(const BaseCusp& base, FamilyKind kind, int m, int n, EpsRule rule) {
  if (m == n) throw PreconditionError("the closed forms need m != n");
  FamilyCase c{kind, m, n, FamilyLabel::Pi};
  auto lbl = [](bool plus) { return plus ? FamilyLabel::PiPlus : FamilyLabel::PiMinus; };
  switch (kind) {
    case FamilyKind::RedGt1:
      if ((n > m) != (rule == EpsRule::Eps) || (rule != EpsRule::Eps && rule != EpsRule::EpsPrime))
        throw PreconditionError("pi_{m,n} comes from eps when n > m and from eps' when n < m");
      break;
    case FamilyKind::Red0: {
      if (rule != EpsRule::Plus && rule != EpsRule::Minus) throw PreconditionError("eps rule must be + or -");
      int xi = rule == EpsRule::Plus ? 1 : -1;
      c.label = lbl(sgn(n - m) * xi > 0);
      break;
    }
    case FamilyKind::RedHalf:
      if (rule == EpsRule::Plus) c.label = lbl(m < n);
      else if (rule == EpsRule::Minus) c.label = lbl(n < m);
      else throw PreconditionError("eps rule must be + or -");
      break;
    case FamilyKind::Red1:
      if (rule == EpsRule::Plus) c.label = m < n ? FamilyLabel::PiMinus : FamilyLabel::TauMinus;
      else if (rule == EpsRule::Minus) c.label = FamilyLabel::PiPlus;
      else if (rule == EpsRule::PlusMinusMinus) c.label = m < n ? FamilyLabel::TauMinus : FamilyLabel::PiMinus;
      else throw PreconditionError("eps rule must be +, - or +--");
      break;
  }
  check_case(base, c);
  return c;
}

EpsRule rule_for(const BaseCusp& base, const FamilyCase& c) {
  for (EpsRule r : {EpsRule::Eps, EpsRule::EpsPrime, EpsRule::Plus, EpsRule::Minus, EpsRule::PlusMinusMinus}) {
    try {
      if (theorem_label(base, c.kind, c.m, c.n, r) == c) return r;
    } catch (const PreconditionError&) {
    }
  }
  throw PreconditionError("no packet parameter of the family gives " + c.str());
}

FamilyCase dual_label(const FamilyCase& c) {
  FamilyCase d = c;
  std::swap(d.m, d.n);
  switch (c.kind) {
    case FamilyKind::RedGt1: break;
    case FamilyKind::Red0:
    case FamilyKind::RedHalf:
      d.label = c.label == FamilyLabel::PiPlus ? FamilyLabel::PiMinus : FamilyLabel::PiPlus;
      break;
    case FamilyKind::Red1:
      if (c.label == FamilyLabel::PiMinus) d.label = FamilyLabel::TauMinus;
      else if (c.label == FamilyLabel::TauMinus) d.label = FamilyLabel::PiMinus;
      break;
  }
  return d;
}

// ---------------------------------------------------------------------------

namespace {

void run_route(const BaseCusp& base, const PacketPair& pp, FamilyCheck& out) {
  out.packet = pp.str();
  try {
    ReductionTrace tr = moeglin_rep(base, pp, true);
    out.got = tr.result;
    out.trace = tr.str();
    out.certs = tr.certificates;
    out.external = tr.external;
    out.pass = tr.result == out.expected;
  } catch (const Error& e) {
    out.error = e.what();
    out.pass = false;
  }
}

}  // namespace

FamilyCheck verify_family(const BaseCusp& base, FamilyKind kind, int m, int n, EpsRule rule) {
  FamilyCheck out;
  out.name = std::string(to_string(kind)) + " " + to_string(rule) + " (m,n)=(" + std::to_string(m) + "," +
             std::to_string(n) + ")";
  try {
    FamilyCase c = theorem_label(base, kind, m, n, rule);
    out.expected = family_datum(base, c);
    run_route(base, family_packet(base, kind, m, n, rule), out);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

FamilyCheck verify_family_diagonal(const BaseCusp& base, int m) {
  FamilyCheck out;
  out.name = "gt1 diagonal (m,n)=(" + std::to_string(m) + "," + std::to_string(m) + ")";
  try {
    check_case(base, FamilyCase{FamilyKind::RedGt1, m, m, FamilyLabel::Pi});
    if (m < 0) throw PreconditionError("the diagonal needs m >= 0");
    out.expected = family_datum(base, FamilyCase{FamilyKind::RedGt1, m, m, FamilyLabel::Pi});
    const PacketPair high = family_packet(base, FamilyKind::RedGt1, m, m + 1, EpsRule::Eps);
    const ReductionTrace tr = moeglin_rep(base, high, true);
    if (tr.result != family_datum(base, FamilyCase{FamilyKind::RedGt1, m, m + 1, FamilyLabel::Pi}))
      throw CertificateFailure("the dominating member is " + tr.result.str());
    const int k = twice_int(base.alpha()) + 1 + 2 * m;
    const BlockOrder high_order = natural_order(high.psi);
    BlockOrder low_order = high_order;
    for (auto& b : low_order)
      if (b == JordanBlock::make(k + 2, 1, 0)) b = JordanBlock::make(k, 1, 0);
    AParam low = high.psi;
    low.blocks = low_order;
    low.normalize();
    out.packet = high.str() + " >> " + low.str();
    if (!is_admissible_order(low, low_order)) throw PreconditionError("the shifted order is not admissible");
    JacResult j = dominate_descend(base, high_order, low_order, tr.result);
    out.certs = tr.certificates;
    out.trace = tr.str() + "; Jac_" + (base.alpha() + (m + 1)).str();
    out.external = tr.external || j.external;
    if (j.undecidable) throw CertificateFailure("Jac undecidable: " + j.reason);
    if (j.is_zero()) throw CertificateFailure("Jac is 0");
    out.got = j.value.begin()->first;
    out.pass = j.value.size() == 1 && *out.got == out.expected;
  } catch (const Error& e) {
    out.error = e.what();
    out.pass = false;
  }
  return out;
}

FamilyCheck verify_duality(const BaseCusp& base, const FamilyCase& c) {
  FamilyCheck out;
  FamilyCase d = dual_label(c);
  out.name = std::string(to_string(c.kind)) + " dual " + c.str() + " = " + d.str();
  try {
    out.expected = family_datum(base, d);
    PacketPair pp = family_packet(base, c.kind, c.m, c.n, rule_for(base, c));
    run_route(base, aubert_param(pp), out);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<FamilyCheck> corollary_endpoints(const BaseCusp& base, int n, int m) {
  check_family_base(base, FamilyKind::RedGt1);
  const HalfInt a = base.alpha();
  const int two_a = twice_int(a);
  const auto cusp = TemperedSymbol::cusp(a);
  std::vector<FamilyCheck> out;
  auto add = [&](const std::string& name, const PacketPair& pp, const LanglandsDatum& expected) {
    FamilyCheck fc;
    fc.name = name;
    fc.expected = expected;
    run_route(base, pp, fc);
    out.push_back(std::move(fc));
  };
  auto build = [&](auto&& f) -> std::optional<PacketPair> {
    try {
      return f();
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const LanglandsDatum steinberg = LanglandsDatum::tempered(TemperedSymbol::gen_steinberg(a, n));
  const LanglandsDatum steinberg_dual = LanglandsDatum::make(LanglandsDatum::tr(a, a + n), cusp);
  const LanglandsDatum left = LanglandsDatum::make(LanglandsDatum::tr(a - 1, a - 1), TemperedSymbol::gen_steinberg(a, n));
  const LanglandsDatum left_dual = LanglandsDatum::make(LanglandsDatum::tr(a - 1, a + n), cusp);
  const LanglandsDatum right = LanglandsDatum::make(LanglandsDatum::tr(a - 1, a + m), cusp);

  auto p1 = build([&] { return family_packet_kl(base, FamilyKind::RedGt1, two_a + 1 + 2 * n, two_a - 3, EpsRule::Eps); });
  auto p1r = build([&] { return family_packet_kl(base, FamilyKind::RedGt1, two_a - 3, two_a + 1 + 2 * n, EpsRule::EpsPrime); });
  auto p2 = build([&] { return family_packet_kl(base, FamilyKind::RedGt1, two_a + 1 + 2 * n, two_a - 1, EpsRule::Eps); });
  auto p2r = build([&] { return family_packet_kl(base, FamilyKind::RedGt1, two_a - 1, two_a + 1 + 2 * m, EpsRule::EpsPrime); });
  auto fail = [&](const std::string& name) {
    FamilyCheck fc;
    fc.name = name;
    fc.error = "packet parameter not constructible";
    out.push_back(fc);
  };
  const std::string sn = std::to_string(n), sm = std::to_string(m);
  if (p1) add("(1) delta([a,a+" + sn + "];sigma)", *p1, steinberg); else fail("(1) delta");
  if (p1r) add("(1) L([a,a+" + sn + "]^tr;sigma)", *p1r, steinberg_dual); else fail("(1) L tr");
  if (n < 0) p2.reset();
  if (m < 0) p2r.reset();
  if (p2) add("(2) L([a-1];delta([a,a+" + sn + "];sigma))", *p2, left); else if (n >= 0) fail("(2) left");
  if (p2r) add("(2) L([a-1,a+" + sm + "]^tr;sigma)", *p2r, right); else if (m >= 0) fail("(2) right");
  if (p1) add("(3) dual of delta([a,a+" + sn + "];sigma)", aubert_param(*p1), steinberg_dual); else fail("(3)");
  if (n >= 0 && p2) add("(4) dual of L([a-1];delta([a,a+" + sn + "];sigma))", aubert_param(*p2), left_dual); else if (n >= 0) fail("(4)");
  return out;
}

}  // namespace apk
