// SPDX-License-Identifier: MIT
//
// The two-parameter families over sigma at alpha > 1, 0, 1/2 and 1: closed
// form data, the packet parameters that produce them, and verifiers that
// compare the recursion with the closed forms and with the duality formulas.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apk/moeglin.hpp"

namespace apk {

enum class FamilyKind { RedGt1, Red0, RedHalf, Red1 };
// Pi: pi_{m,n} (alpha > 1); PiPlus/PiMinus: pi^+-_{m,n}; TauMinus: tau^-_{m,n} (alpha = 1)
enum class FamilyLabel { Pi, PiPlus, PiMinus, TauMinus };
enum class EpsRule { Eps, EpsPrime, Plus, Minus, PlusMinusMinus };

const char* to_string(FamilyKind k);
const char* to_string(FamilyLabel l);
const char* to_string(EpsRule r);
FamilyKind parse_family_kind(const std::string& s);
EpsRule parse_eps_rule(const std::string& s);

struct FamilyCase {
  FamilyKind kind = FamilyKind::RedGt1;
  int m = 0;
  int n = 0;
  FamilyLabel label = FamilyLabel::Pi;
  std::string str() const;
  bool operator==(const FamilyCase&) const = default;
};

// alpha of the base required by a kind (RedGt1: any alpha >= 3/2)
void check_family_base(const BaseCusp& base, FamilyKind kind);
void check_case(const BaseCusp& base, const FamilyCase& c);

LanglandsDatum family_datum(const BaseCusp& base, const FamilyCase& c);

// psi_sigma with the top blocks replaced by E_{k,1} + E_{1,l} (alpha > 1), or
// psi_sigma + E_{k,1} + E_{1,l} otherwise; eps per rule. A block with
// k = 0 or l = 0 is omitted.
PacketPair family_packet_kl(const BaseCusp& base, FamilyKind kind, int k, int l, EpsRule rule);
// k and l from (n, m): 2alpha+1+2n / 2n+1 / 2n, and the same for m
PacketPair family_packet(const BaseCusp& base, FamilyKind kind, int m, int n, EpsRule rule);

// The theorems' answer for pi(psi, eps) with m != n.
FamilyCase theorem_label(const BaseCusp& base, FamilyKind kind, int m, int n, EpsRule rule);
// A rule whose packet element is the given label (m != n).
EpsRule rule_for(const BaseCusp& base, const FamilyCase& c);
// The duality formulas on labels.
FamilyCase dual_label(const FamilyCase& c);

struct FamilyCheck {
  std::string name;
  std::string packet;
  LanglandsDatum expected;
  std::optional<LanglandsDatum> got;
  std::string trace;
  std::vector<SocleCertificate> certs;
  bool external = false;
  bool pass = false;
  std::string error;
};

// recursion route vs closed form
FamilyCheck verify_family(const BaseCusp& base, FamilyKind kind, int m, int n, EpsRule rule);
// m = n, alpha > 1: pi_{m,m} from the (m, m+1) member by Jac_{alpha+m+1} along
// the domination (2alpha+3+2m,1) -> (2alpha+1+2m,1); membership only
FamilyCheck verify_family_diagonal(const BaseCusp& base, int m);
// dual through the parameter swap vs the closed form of dual_label(c)
FamilyCheck verify_duality(const BaseCusp& base, const FamilyCase& c);
// endpoint cases for alpha >= 3/2, n >= -1, m >= -2
std::vector<FamilyCheck> corollary_endpoints(const BaseCusp& base, int n, int m);

}  // namespace apk
