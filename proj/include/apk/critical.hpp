// SPDX-License-Identifier: MIT
//
// Critical points: the critical-type predicate, the corank 2 and 3 catalog of
// unitarizable subquotients together with a construction placing each one in
// an A-packet, the complementary-series lemma, and the primitive predicate.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apk/families.hpp"

namespace apk {

// exponents taken up to sign; the distinct values must form {x, x+1, .., y}
// containing alpha
bool is_critical(const std::vector<HalfInt>& exps, const CuspLine& line);

enum class RecipeKind {
  Packet,   // pi(psi, eps) for some eps on the rho line, through the recursion
  Dual,     // Aubert dual of the partner's packet member
  Family,   // a two-parameter family member, both routes
  LPacket,  // L-packet inside the A-packet of a non-elementary psi (external)
  AddPair,  // a constituent of u(a,b) |x pi0 with pi0 certified (external)
  Descent,  // Jac chain of an order-preserving domination
  Remark,   // tempered or cotempered, in a packet by general facts
};
const char* to_string(RecipeKind k);

struct Recipe {
  RecipeKind kind = RecipeKind::Remark;
  // rho line of psi (Packet, LPacket), of the dominating parameter (Descent)
  // or of the smaller parameter (AddPair); line 1 is taken from psi_sigma
  std::vector<JordanBlock> rho;
  std::optional<LanglandsDatum> via;  // AddPair: pi0; Descent: the dominating member
  std::optional<JordanBlock> pair;    // AddPair: the block added twice
  std::vector<std::pair<JordanBlock, JordanBlock>> shift;  // Descent: block replacements
  std::optional<FamilyCase> family;
  std::string note;
};

struct CriticalLabel {
  std::string name;
  std::optional<LanglandsDatum> datum;
  std::string text;  // shown when datum is absent
  Recipe recipe;
  std::optional<std::string> dual_partner;
  std::string display() const { return datum ? datum->str() : text; }
};

struct CriticalCase {
  std::string name;
  std::vector<HalfInt> exponents;
  std::string alpha_constraint;
  std::vector<CriticalLabel> labels;
  std::size_t expected_count = 0;  // unitarizable subquotients in the case
};

// The cases whose constraint holds at the base's alpha.
std::vector<CriticalCase> catalog(const BaseCusp& base);
// Every case name, for listings.
std::vector<std::string> catalog_case_names();

struct LabelReport {
  std::string name;
  std::string expected;
  std::optional<LanglandsDatum> got;
  RecipeKind kind = RecipeKind::Remark;
  std::string packet;  // the parameter used, with eps when one was found
  std::string detail;
  std::vector<SocleCertificate> certs;
  bool external = false;
  bool pass = false;
};

struct PairReport {
  std::string a, b;
  std::string route;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  std::string name;
  HalfInt alpha;
  std::vector<LabelReport> labels;
  std::vector<PairReport> pairs;
  std::size_t expected_count = 0;
  bool critical = false;  // exponents pass is_critical
  bool pass = false;
};

CaseReport verify_case(const BaseCusp& base, const CriticalCase& c);
// every case at the base's alpha, in parallel when jobs > 1
std::vector<CaseReport> verify_catalog(const BaseCusp& base, unsigned jobs = 1);

// Infinitesimal data: |exponents| of the cuspidal support over sigma, sorted.
std::vector<HalfInt> support(const LanglandsDatum& d);
// Segments of the L-parameter on the rho line (sigma's part included).
std::vector<Segment> l_parameter(const BaseCusp& base, const LanglandsDatum& d);
// Segments of phi_psi on the rho line.
std::vector<Segment> psi_segments(const std::vector<JordanBlock>& rho);

// A rho line with eps fixed by search: the first eps (in a fixed order)
// whose member is `want`. Throws CertificateFailure when none is.
struct PacketHit {
  PacketPair pp;
  ReductionTrace trace;
};
PacketHit find_in_packet(const BaseCusp& base, const std::vector<JordanBlock>& rho, const LanglandsDatum& want);
// psi_sigma with its rho line replaced
AParam with_rho_line(const BaseCusp& base, const std::vector<JordanBlock>& rho);

struct AppendixReport {
  HalfInt x;
  HalfInt alpha;
  std::string packet;      // the dominating parameter with eps
  std::string low;         // the dominated parameter, in its order
  LanglandsDatum start;    // member of the dominating packet
  std::vector<HalfInt> jacs;
  std::optional<LanglandsDatum> got;
  LanglandsDatum expected;  // [x] |x sigma
  std::vector<SocleCertificate> certs;
  bool admissible = false;
  bool external = false;  // Jac steps decided by the irreducible-or-0 property
  bool pass = false;
  std::string detail;
};
// alpha >= 1, x >= 0, alpha - x a positive integer; x in {0, alpha-1, alpha-2}
AppendixReport appendix_lemma(const BaseCusp& base, HalfInt x);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);
// Speh factors are unitary. A square-integrable pi has no factorization; any
// other tempered pi embeds in nu^0 or delta([-x,x]) times a smaller tempered
// representation; non-tempered pi is Unknown. When `packet` is given its
// member must be pi.
Tri is_primitive_candidate(const BaseCusp& base, const LanglandsDatum& pi,
                           const std::optional<PacketPair>& packet = std::nullopt);

}  // namespace apk
