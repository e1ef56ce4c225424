// SPDX-License-Identifier: MIT
//
// Jordan blocks, A-parameters, component-group characters, the b/a
// invariants, deformation, the simple reduction step and parameter duality.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apk/core.hpp"

namespace apk {

struct ParityMismatch : Error { using Error::Error; };
struct BoundaryCase : Error { using Error::Error; };
struct NothingToReduce : Error { using Error::Error; };

struct JordanBlock {
  LineId line = 0;
  int a = 1;
  int b = 1;
  int zeta_choice = 1;  // only read when a == b

  static JordanBlock make(int a, int b, LineId line = 0);
  // elementary block (c, delta_c): delta = +1 gives (c,1), delta = -1 gives (1,c)
  static JordanBlock elem(int c, int delta, LineId line = 0);

  HalfInt A() const { return HalfInt::from_twice(a + b - 2); }
  HalfInt B() const { return HalfInt::from_twice(a > b ? a - b : b - a); }
  int zeta() const { return a == b ? zeta_choice : (a > b ? 1 : -1); }
  bool elementary() const { return a == 1 || b == 1; }
  int c() const { return a > b ? a : b; }
  int delta() const { return b == 1 ? 1 : -1; }  // delta_1 = 1
  JordanBlock swapped() const;
  std::string str() const;

  auto operator<=>(const JordanBlock& o) const {
    if (auto r = line <=> o.line; r != 0) return r;
    if (auto r = c() <=> o.c(); r != 0) return r;
    if (auto r = a <=> o.a; r != 0) return r;
    if (auto r = b <=> o.b; r != 0) return r;
    return (a == b ? zeta_choice : 0) <=> (o.a == o.b ? o.zeta_choice : 0);
  }
  bool operator==(const JordanBlock& o) const { return (*this <=> o) == 0; }
};

using LineTable = std::map<LineId, CuspLine>;

struct AParam {
  std::vector<JordanBlock> blocks;  // sorted multiset
  LineTable lines;

  void normalize();
  std::vector<JordanBlock> on_line(LineId line) const;
  std::int64_t weight(LineId line) const;  // sum of a*b on the line
  bool good_parity() const;
  std::string str() const;
  bool operator==(const AParam& o) const { return blocks == o.blocks; }
};

using EpsChar = std::map<JordanBlock, int>;

struct PacketPair {
  AParam psi;
  EpsChar eps;
  bool product_override = false;  // allow prod eps != 1, reported by callers

  int eps_of(const JordanBlock& blk) const;
  int eps_product() const;
  // eps defined on exactly the distinct blocks, values +-1, product 1 unless overridden
  void validate() const;
  std::string str() const;
  bool operator==(const PacketPair& o) const { return psi == o.psi && eps == o.eps; }
};

// discrete diagonal restriction: (line, 2j+1) for j in [B, A]
std::vector<std::pair<LineId, int>> psi_d(const AParam& p);
bool is_ddr(const AParam& p);
bool is_elementary(const AParam& p);
bool is_tempered(const AParam& p);
bool is_cotempered(const AParam& p);

struct BAInvariants {
  int b = -1;
  std::optional<int> a;  // nullopt = infinity
  bool boundary = false;
};
BAInvariants b_a_invariants(const PacketPair& pp, LineId line);
// true iff eps is cuspidal on the whole line (a = infinity)
bool eps_cuspidal_on_line(const PacketPair& pp, LineId line);

PacketPair deform(const PacketPair& pp, const JordanBlock& from, const JordanBlock& to);

struct ReduceResult {
  HalfInt exponent;
  int a = 0;        // the block value that moved
  int delta = 1;
  bool deleted = false;
  PacketPair next;
};
ReduceResult reduce_step(const PacketPair& pp, LineId line);

PacketPair aubert_param(const PacketPair& pp);

struct SpehLabel {
  LineId line = 0;
  int a = 1, b = 1;
  auto operator<=>(const SpehLabel&) const = default;
  bool operator==(const SpehLabel&) const = default;
};
std::vector<SpehLabel> attach_gl_rep(const AParam& p);

// ---------------------------------------------------------------------------
// orders and domination

// blocks listed from largest to smallest
using BlockOrder = std::vector<JordanBlock>;
bool is_admissible_order(const AParam& p, const BlockOrder& order);
BlockOrder natural_order(const AParam& p);
// order-preserving domination; returns the shift T per block of `low`
// (indexed like `low_order`), or nullopt
std::optional<std::vector<int>> domination_shift(const BlockOrder& high_order, const BlockOrder& low_order);

}  // namespace apk
