// SPDX-License-Identifier: MIT

#include "apk/arthur.hpp"

#include <algorithm>
#include <sstream>

namespace apk {

JordanBlock JordanBlock::make(int a, int b, LineId line) {
  if (a < 1 || b < 1) throw PreconditionError("Jordan block needs a, b >= 1");
  return JordanBlock{line, a, b, 1};
}

JordanBlock JordanBlock::elem(int c, int delta, LineId line) {
  if (c < 1) throw PreconditionError("elementary block needs c >= 1");
  if (c == 1 || delta > 0) return make(c, 1, line);
  return make(1, c, line);
}

JordanBlock JordanBlock::swapped() const {
  JordanBlock r = *this;
  std::swap(r.a, r.b);
  if (a == b) r.zeta_choice = -zeta_choice;
  return r;
}

std::string JordanBlock::str() const {
  std::string s = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (line != 0) s = "r" + std::to_string(line) + ":" + s;
  return s;
}

// ---------------------------------------------------------------------------

void AParam::normalize() { std::sort(blocks.begin(), blocks.end()); }

std::vector<JordanBlock> AParam::on_line(LineId line) const {
  std::vector<JordanBlock> out;
  for (const auto& b : blocks)
    if (b.line == line) out.push_back(b);
  return out;
}

std::int64_t AParam::weight(LineId line) const {
  std::int64_t w = 0;
  for (const auto& b : blocks)
    if (b.line == line) w += static_cast<std::int64_t>(b.a) * b.b;
  return w;
}

bool AParam::good_parity() const {
  for (const auto& blk : blocks) {
    auto it = lines.find(blk.line);
    if (it == lines.end()) return false;
    bool odd = (blk.a + blk.b - 1) % 2 != 0;
    if (odd != (it->second.parity == Parity::Odd)) return false;
  }
  return true;
}

std::string AParam::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + blocks[i].str();
  return s + "}";
}

int PacketPair::eps_of(const JordanBlock& blk) const {
  auto it = eps.find(blk);
  if (it == eps.end()) throw PreconditionError("eps undefined on block " + blk.str());
  return it->second;
}

int PacketPair::eps_product() const {
  int p = 1;
  for (const auto& blk : psi.blocks) p *= eps_of(blk);
  return p;
}

void PacketPair::validate() const {
  for (const auto& blk : psi.blocks) eps_of(blk);
  for (const auto& [blk, v] : eps) {
    if (v != 1 && v != -1) throw PreconditionError("eps values must be +-1");
    if (std::find(psi.blocks.begin(), psi.blocks.end(), blk) == psi.blocks.end())
      throw PreconditionError("eps defined on a block not in psi: " + blk.str());
  }
  if (!psi.good_parity()) throw ParityMismatch("parameter " + psi.str() + " is not of good parity");
  if (!product_override && eps_product() != 1) throw PreconditionError("product of eps over Jord(psi) is not 1");
}

std::string PacketPair::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < psi.blocks.size(); ++i) {
    const auto& blk = psi.blocks[i];
    s += (i ? "," : "") + blk.str();
    auto it = eps.find(blk);
    s += it == eps.end() ? "?" : (it->second > 0 ? "+" : "-");
  }
  return s + "}";
}

// ---------------------------------------------------------------------------

std::vector<std::pair<LineId, int>> psi_d(const AParam& p) {
  std::vector<std::pair<LineId, int>> out;
  for (const auto& blk : p.blocks) {
    int lo = std::abs(blk.a - blk.b) + 1, hi = blk.a + blk.b - 1;
    for (int d = lo; d <= hi; d += 2) out.emplace_back(blk.line, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ddr(const AParam& p) {
  if (!p.good_parity()) return false;
  auto d = psi_d(p);
  return std::adjacent_find(d.begin(), d.end()) == d.end();
}

bool is_elementary(const AParam& p) {
  return std::all_of(p.blocks.begin(), p.blocks.end(), [](const JordanBlock& b) { return b.elementary(); });
}

bool is_tempered(const AParam& p) {
  return std::all_of(p.blocks.begin(), p.blocks.end(), [](const JordanBlock& b) { return b.b == 1; });
}

bool is_cotempered(const AParam& p) {
  return std::all_of(p.blocks.begin(), p.blocks.end(), [](const JordanBlock& b) { return b.a == 1; });
}

BAInvariants b_a_invariants(const PacketPair& pp, LineId line) {
  auto blocks = pp.psi.on_line(line);
  for (const auto& blk : blocks)
    if (!blk.elementary()) throw PreconditionError("b/a invariants need an elementary parameter, got " + blk.str());
  auto lt = pp.psi.lines.find(line);
  if (lt == pp.psi.lines.end()) throw PreconditionError("unknown line " + std::to_string(line));
  std::sort(blocks.begin(), blocks.end());

  BAInvariants r;
  r.b = lt->second.parity == Parity::Odd ? -1 : 0;
  // longest cuspidal prefix; a prefix may not end inside a run of equal c
  std::size_t good = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    int c = blocks[j].c(), e = pp.eps_of(blocks[j]);
    bool ok;
    if (j == 0) ok = (c == 1) || (c == 2 && e == -1);
    else ok = c - blocks[j - 1].c() == 2 && e == -pp.eps_of(blocks[j - 1]);
    if (!ok) break;
    good = j + 1;
  }
  if (good > 0) {
    std::size_t j = good - 1;
    if (j + 1 < blocks.size() && blocks[j + 1].c() == blocks[j].c()) {
      if (j > 0) r.b = blocks[j - 1].c();
    } else {
      r.b = blocks[j].c();
    }
  }
  for (const auto& blk : blocks)
    if (blk.c() > r.b) {
      r.a = blk.c();
      break;
    }
  r.boundary = r.a && *r.a == r.b + 2 && r.b > 0;
  return r;
}

bool eps_cuspidal_on_line(const PacketPair& pp, LineId line) { return !b_a_invariants(pp, line).a.has_value(); }

PacketPair deform(const PacketPair& pp, const JordanBlock& from, const JordanBlock& to) {
  auto& bl = pp.psi.blocks;
  auto it = std::find(bl.begin(), bl.end(), from);
  if (it == bl.end()) throw PreconditionError("block " + from.str() + " not in " + pp.psi.str());
  if (std::find(bl.begin(), bl.end(), to) != bl.end())
    throw PreconditionError("target block " + to.str() + " already in " + pp.psi.str());
  if (from.line != to.line) throw PreconditionError("deformation must stay on one line");
  if ((from.a - to.a) % 2 != 0 || (from.b - to.b) % 2 != 0)
    throw ParityMismatch("cannot deform " + from.str() + " to " + to.str() + ": parity mismatch");
  PacketPair out = pp;
  int e = pp.eps_of(from);
  auto& ob = out.psi.blocks;
  ob.erase(std::find(ob.begin(), ob.end(), from));
  if (std::find(ob.begin(), ob.end(), from) == ob.end()) out.eps.erase(from);
  ob.push_back(to);
  out.psi.normalize();
  out.eps[to] = e;
  return out;
}

ReduceResult reduce_step(const PacketPair& pp, LineId line) {
  auto inv = b_a_invariants(pp, line);
  if (!inv.a) throw NothingToReduce("eps is cuspidal on line " + std::to_string(line));
  if (inv.boundary)
    throw BoundaryCase("boundary case a = b + 2 with b = " + std::to_string(inv.b) + " on " + pp.str());
  const int a = *inv.a;
  std::vector<JordanBlock> hits;
  for (const auto& blk : pp.psi.on_line(line))
    if (blk.c() == a) hits.push_back(blk);
  if (hits.size() != 1)
    throw PreconditionError("reduction needs a unique block with c = " + std::to_string(a) + " in " + pp.str());
  const JordanBlock blk = hits.front();
  ReduceResult r;
  r.a = a;
  r.delta = blk.delta();
  r.exponent = HalfInt::from_twice(static_cast<std::int64_t>(r.delta) * (a - 1));
  if (a == 2) {
    r.deleted = true;
    r.next = pp;
    auto& ob = r.next.psi.blocks;
    ob.erase(std::find(ob.begin(), ob.end(), blk));
    r.next.eps.erase(blk);
  } else {
    r.next = deform(pp, blk, JordanBlock::elem(a - 2, r.delta, line));
  }
  return r;
}

PacketPair aubert_param(const PacketPair& pp) {
  PacketPair out;
  out.product_override = pp.product_override;
  out.psi.lines = pp.psi.lines;
  for (const auto& blk : pp.psi.blocks) out.psi.blocks.push_back(blk.swapped());
  out.psi.normalize();
  for (const auto& [blk, e] : pp.eps) out.eps[blk.swapped()] = e;
  return out;
}

std::vector<SpehLabel> attach_gl_rep(const AParam& p) {
  std::vector<SpehLabel> out;
  for (const auto& blk : p.blocks) out.push_back({blk.line, blk.a, blk.b});
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool is_admissible_order(const AParam& p, const BlockOrder& order) {
  auto sorted_order = order, sorted_blocks = p.blocks;
  std::sort(sorted_order.begin(), sorted_order.end());
  std::sort(sorted_blocks.begin(), sorted_blocks.end());
  if (sorted_order != sorted_blocks) return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& lo = order[i];  // ranked above
      const auto& hi = order[j];
      if (lo.line != hi.line) continue;
      // (P) would force hi above lo
      if (hi.a + hi.b > lo.a + lo.b && std::abs(hi.a - hi.b) > std::abs(lo.a - lo.b) && hi.zeta() == lo.zeta())
        return false;
    }
  return true;
}

BlockOrder natural_order(const AParam& p) {
  BlockOrder o = p.blocks;
  std::stable_sort(o.begin(), o.end(), [](const JordanBlock& x, const JordanBlock& y) {
    if (x.line != y.line) return x.line > y.line;
    if (x.a + x.b != y.a + y.b) return x.a + x.b > y.a + y.b;
    return y < x;
  });
  return o;
}

std::optional<std::vector<int>> domination_shift(const BlockOrder& high_order, const BlockOrder& low_order) {
  if (high_order.size() != low_order.size()) return std::nullopt;
  std::vector<int> t;
  for (std::size_t i = 0; i < low_order.size(); ++i) {
    const auto& h = high_order[i];
    const auto& l = low_order[i];
    if (h.line != l.line || h.zeta() != l.zeta()) return std::nullopt;
    HalfInt dA = h.A() - l.A(), dB = h.B() - l.B();
    if (dA != dB || dA < HalfInt() || !dA.is_integer()) return std::nullopt;
    t.push_back(static_cast<int>(dA.to_int()));
  }
  return t;
}

}  // namespace apk
