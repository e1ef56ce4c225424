// SPDX-License-Identifier: MIT
//
// The reduction recursion pi(psi, eps) -> Langlands datum, its traces,
// duality through the parameter swap, and 1x1-row domination descent.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apk/socle.hpp"

namespace apk {

struct BaseMismatch : Error { using Error::Error; };
struct UnsupportedShift : Error { using Error::Error; };

enum class StepKind { Reduce, Delete, Boundary, Base };
const char* to_string(StepKind k);

struct ReductionStep {
  StepKind kind = StepKind::Base;
  LineId line = 0;
  std::optional<JordanBlock> before;
  std::optional<JordanBlock> after;
  HalfInt exponent;             // Reduce/Delete
  std::optional<GLGen> gen;     // Boundary
  int sign = 0;                 // Boundary
  std::optional<JordanBlock> partner;  // Boundary: the block with c = b
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // outermost first
  LanglandsDatum result;
  std::vector<SocleCertificate> certificates;  // outermost first
  bool external = false;  // some step rests on the boundary convention
  std::optional<RepBounds> bounds;  // Jacquet bounds of result
  std::string str() const;
};

// The generator attached to a boundary pair (b, a = b + 2) on the rho line.
// delta_a = +1 gives Delta[-(b-1)/2, (a-1)/2], delta_a = -1 gives
// Zeta[-(a-1)/2, (b-1)/2]. The sign is eps(b) * delta_a, times
// pm_convention when alpha = 0; at alpha = 1 it is eps(b) * xi, negated
// when b = 1.
struct BoundaryStep {
  GLGen gen;
  int sign = 1;
  JordanBlock blk_b, blk_a;
  PacketPair next;
};
BoundaryStep boundary_generator(const BaseCusp& base, const PacketPair& pp, LineId line);

// true when the pair has the same (line, c, eps) data as eps_sigma
bool matches_base(const BaseCusp& base, const PacketPair& pp);

// Least line first; on that line the block with c = a. Boundary cases throw
// BoundaryCase unless resolve_boundary is set.
ReductionTrace moeglin_rep(const BaseCusp& base, const PacketPair& pp, bool resolve_boundary = false);
// Rebuild the result from the steps alone.
LanglandsDatum replay(const BaseCusp& base, const ReductionTrace& t);

LanglandsDatum dual_of_elementary_ddr(const BaseCusp& base, const PacketPair& pp, bool resolve_boundary = false);

// Jac chain for an order-preserving domination high -> low where every
// block is elementary; block shifts are applied from the lowest-ranked block
// up, each block contributing exponents zeta*B, zeta*(B-1), ...
std::vector<HalfInt> descent_exponents(const BlockOrder& high_order, const BlockOrder& low_order);
JacResult dominate_descend(const BaseCusp& base, const BlockOrder& high_order, const BlockOrder& low_order,
                           const LanglandsDatum& rep);

}  // namespace apk
