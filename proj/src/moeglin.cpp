// SPDX-License-Identifier: MIT

#include "apk/moeglin.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace apk {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Reduce: return "reduce";
    case StepKind::Delete: return "delete";
    case StepKind::Boundary: return "boundary";
    case StepKind::Base: return "base";
  }
  return "?";
}

std::string ReductionTrace::str() const {
  std::string s;
  for (const auto& st : steps) {
    s += to_string(st.kind);
    if (st.before) s += " " + st.before->str();
    if (st.after) s += "->" + st.after->str();
    if (st.kind == StepKind::Reduce || st.kind == StepKind::Delete) s += " [" + st.exponent.str() + "]";
    if (st.gen) s += " " + st.gen->str() + (st.sign > 0 ? "+" : "-");
    s += "; ";
  }
  return s + "=> " + result.str();
}

BoundaryStep boundary_generator(const BaseCusp& base, const PacketPair& pp, LineId line) {
  if (line != 0) throw UnsupportedSymbol("boundary steps are only modelled on the rho line");
  auto inv = b_a_invariants(pp, line);
  if (!inv.boundary) throw PreconditionError("not a boundary case: " + pp.str());
  BoundaryStep st;
  int found_b = 0, found_a = 0;
  for (const auto& blk : pp.psi.on_line(line)) {
    if (blk.c() == inv.b) st.blk_b = blk, ++found_b;
    if (blk.c() == *inv.a) st.blk_a = blk, ++found_a;
  }
  if (found_b != 1 || found_a != 1) throw PreconditionError("boundary blocks are not unique in " + pp.str());
  const int b = inv.b, a = *inv.a;
  const int da = st.blk_a.delta();
  st.gen = da > 0 ? GLGen::delta(HalfInt::from_twice(-(b - 1)), HalfInt::from_twice(a - 1))
                  : GLGen::zeta(HalfInt::from_twice(-(a - 1)), HalfInt::from_twice(b - 1));
  st.sign = pp.eps_of(st.blk_b) * da;
  // at alpha = 1 the sign does not depend on delta_a, and pairing with the
  // block of sigma itself reverses it
  if (base.alpha() == HalfInt::of(1)) st.sign = pp.eps_of(st.blk_b) * base.xi() * (b == 1 ? -1 : 1);
  if (base.alpha() == HalfInt()) st.sign *= base.pm_convention;
  st.next = pp;
  auto& ob = st.next.psi.blocks;
  ob.erase(std::find(ob.begin(), ob.end(), st.blk_b));
  ob.erase(std::find(ob.begin(), ob.end(), st.blk_a));
  st.next.eps.erase(st.blk_b);
  st.next.eps.erase(st.blk_a);
  return st;
}

bool matches_base(const BaseCusp& base, const PacketPair& pp) {
  auto key = [](const PacketPair& p) {
    std::multiset<std::tuple<LineId, int, int>> s;
    for (const auto& blk : p.psi.blocks) {
      if (!blk.elementary()) return std::multiset<std::tuple<LineId, int, int>>{{-1, 0, 0}};
      s.insert({blk.line, blk.c(), p.eps_of(blk)});
    }
    return s;
  };
  return key(base.base) == key(pp);
}

namespace {

std::vector<LineId> line_ids(const PacketPair& pp) {
  std::vector<LineId> ids;
  for (const auto& [id, l] : pp.psi.lines) ids.push_back(id);
  return ids;
}

RepBounds apply_generator(const BaseCusp& base, const GLGen& g, int sign, const RepBounds& parent,
                          std::vector<SocleCertificate>& certs) {
  ExpString s = gen_string(g);
  RepBounds cur = parent;
  std::vector<SocleCertificate> local;
  try {
    for (auto it = s.v.rbegin(); it != s.v.rend(); ++it) {
      BoundedStep st = bounded_step(base, it->e, cur, sign);
      st.cert.external = true;
      cur = st.next;
      local.push_back(std::move(st.cert));
    }
  } catch (const Error&) {
    // one certificate for the whole segment; keep the first error if it fails too
    if (!generator_rule(base, g, parent.datum(), sign)) throw;
    BoundedStep st = bounded_generator_step(base, g, parent, sign);
    st.cert.external = true;
    certs.push_back(std::move(st.cert));
    return st.next;
  }
  certs.insert(certs.end(), local.rbegin(), local.rend());
  return cur;
}

void run(const BaseCusp& base, const PacketPair& pp, bool resolve, ReductionTrace& tr) {
  for (LineId line : line_ids(pp)) {
    auto inv = b_a_invariants(pp, line);
    if (!inv.a) continue;
    if (line != 0) throw UnsupportedSymbol("reduction on an auxiliary line is not modelled");
    if (inv.boundary) {
      if (!resolve) throw BoundaryCase("boundary case a = b + 2 with b = " + std::to_string(inv.b) + " on " + pp.str());
      BoundaryStep bs = boundary_generator(base, pp, line);
      ReductionStep st;
      st.kind = StepKind::Boundary;
      st.line = line;
      st.before = bs.blk_a;
      st.partner = bs.blk_b;
      st.gen = bs.gen;
      st.sign = bs.sign;
      tr.steps.push_back(st);
      tr.external = true;
      std::size_t pos = tr.certificates.size();
      run(base, bs.next, resolve, tr);
      std::vector<SocleCertificate> mine;
      tr.bounds = apply_generator(base, bs.gen, bs.sign, *tr.bounds, mine);
      tr.result = tr.bounds->datum();
      tr.certificates.insert(tr.certificates.begin() + static_cast<std::ptrdiff_t>(pos), mine.begin(), mine.end());
      return;
    }
    ReduceResult r = reduce_step(pp, line);
    ReductionStep st;
    st.kind = r.deleted ? StepKind::Delete : StepKind::Reduce;
    st.line = line;
    for (const auto& blk : pp.psi.on_line(line))
      if (blk.c() == r.a) st.before = blk;
    if (!r.deleted) st.after = JordanBlock::elem(r.a - 2, r.delta, line);
    st.exponent = r.exponent;
    tr.steps.push_back(st);
    std::size_t pos = tr.certificates.size();
    run(base, r.next, resolve, tr);
    BoundedStep bs = bounded_step(base, r.exponent, *tr.bounds);
    tr.bounds = bs.next;
    tr.result = bs.next.datum();
    tr.certificates.insert(tr.certificates.begin() + static_cast<std::ptrdiff_t>(pos), std::move(bs.cert));
    return;
  }
  if (!matches_base(base, pp)) throw BaseMismatch("recursion ended at " + pp.str() + ", which is not eps_sigma");
  ReductionStep st;
  st.kind = StepKind::Base;
  tr.steps.push_back(st);
  tr.bounds = RepBounds::base(base);
  tr.result = tr.bounds->datum();
}

}  // namespace

ReductionTrace moeglin_rep(const BaseCusp& base, const PacketPair& pp, bool resolve_boundary) {
  pp.validate();
  if (!is_elementary(pp.psi)) throw PreconditionError("the recursion needs an elementary parameter");
  ReductionTrace tr;
  run(base, pp, resolve_boundary, tr);
  return tr;
}

LanglandsDatum replay(const BaseCusp& base, const ReductionTrace& t) {
  RepBounds cur = RepBounds::base(base);
  std::vector<SocleCertificate> sink;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    switch (it->kind) {
      case StepKind::Base: cur = RepBounds::base(base); break;
      case StepKind::Reduce:
      case StepKind::Delete: cur = bounded_step(base, it->exponent, cur).next; break;
      case StepKind::Boundary: cur = apply_generator(base, *it->gen, it->sign, cur, sink); break;
    }
  }
  return cur.datum();
}

LanglandsDatum dual_of_elementary_ddr(const BaseCusp& base, const PacketPair& pp, bool resolve_boundary) {
  if (!is_elementary(pp.psi) || !is_ddr(pp.psi)) throw PreconditionError("dual needs an elementary DDR parameter");
  return moeglin_rep(base, aubert_param(pp), resolve_boundary).result;
}

std::vector<HalfInt> descent_exponents(const BlockOrder& high_order, const BlockOrder& low_order) {
  auto shift = domination_shift(high_order, low_order);
  if (!shift) throw UnsupportedShift("the orders are not related by an order-preserving domination");
  std::vector<HalfInt> out;
  for (std::size_t k = high_order.size(); k-- > 0;) {
    const JordanBlock& h = high_order[k];
    int t = (*shift)[k];
    if (t == 0) continue;
    if (!h.elementary() || !low_order[k].elementary())
      throw UnsupportedShift("shift of the non-elementary block " + h.str() + " needs a general matrix");
    if (h.line != 0) throw UnsupportedShift("descent is only modelled on the rho line");
    // each step lowers A and B by one: Jac at zeta * B
    HalfInt b = h.B();
    for (int i = 0; i < t; ++i, b = b - 1) out.push_back(h.zeta() > 0 ? b : -b);
  }
  return out;
}

JacResult dominate_descend(const BaseCusp& base, const BlockOrder& high_order, const BlockOrder& low_order,
                           const LanglandsDatum& rep) {
  std::vector<HalfInt> xs = descent_exponents(high_order, low_order);
  LanglandsDatum cur = rep;
  bool external = false;
  for (HalfInt x : xs) {
    // along a domination each Jac_x is irreducible or 0
    JacResult r = jac(base, cur, x, true);
    if (r.undecidable || r.is_zero()) return r;
    external = external || r.external;
    cur = r.value.begin()->first;
  }
  JacResult out;
  out.value.add(cur, 1);
  out.external = external;
  return out;
}

}  // namespace apk
