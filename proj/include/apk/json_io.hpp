// SPDX-License-Identifier: MIT
//
// JSON encodings of the value types and reports, the text syntax accepted on
// the command line, and certificate digests.
//
// Half-integers are encoded as strings ("5/2"); segments as {"line","x2","y2"};
// Jordan blocks as {"line","a","b"} with "zeta" only when a = b; eps as a
// list parallel to the blocks.

#pragma once

#include <string>
#include <vector>

#include "apk/critical.hpp"
#include "json.hpp"

namespace apk {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// encoders

Json to_json(HalfInt h);
Json to_json(const Segment& s);
Json to_json(const GLGen& g);
Json to_json(const GLWord& w);
Json to_json(const ExpString& s);
Json to_json(const StringSum& s);  // [{"string", "coeff"}], in string order
Json to_json(const RTensorR& t);   // [{"left", "right", "coeff"}]
Json to_json(const TemperedSymbol& t);
Json to_json(const LanglandsDatum& d);
Json to_json(const InducedExpr& e);
Json to_json(const JordanBlock& b);
Json to_json(const AParam& p);
Json to_json(const PacketPair& pp);
Json to_json(const BaseCusp& b);
Json to_json(const SocleCertificate& c);  // includes "digest"
Json to_json(const ReductionTrace& t);
Json to_json(const JacResult& r);
Json to_json(const FamilyCheck& c);
Json to_json(const LabelReport& r);
Json to_json(const PairReport& r);
Json to_json(const CaseReport& r);
Json to_json(const AppendixReport& r);

// FNV-1a 64 of the compact dump, as 16 hex digits
std::string digest(const Json& j);

// ---------------------------------------------------------------------------
// decoders; alpha fills tempered symbols that do not carry their own

HalfInt halfint_from_json(const Json& j);  // "5/2", "2.5" or a number
Segment segment_from_json(const Json& j);
TemperedSymbol tempered_from_json(const Json& j, HalfInt alpha);
LanglandsDatum datum_from_json(const Json& j, HalfInt alpha);
JordanBlock block_from_json(const Json& j);
PacketPair packet_from_json(const Json& j);

// ---------------------------------------------------------------------------
// text syntax

// "0,1,5/2" or "0 1 2.5"
std::vector<HalfInt> parse_halfint_list(const std::string& s);

// "(6,1)+,(1,2)-,r1:(1,1)+"; the sign is optional; "(2,2)z-" picks zeta = -1
struct BlockSpec {
  JordanBlock blk;
  int eps = 0;  // 0 when no sign was given
};
std::vector<BlockSpec> parse_blocks(const std::string& s);

// "D[0,1]", "Z[-1,2]", "[3/2]"; words are products joined by 'x'
GLGen parse_gen(const std::string& s);
GLWord parse_word(const std::string& s);

// the printed forms: "sigma", "delta([a,a+n];sigma)", "delta_sp([..],[..];sigma)",
// "delta([-x,y]_+;sigma)", "tau([0]_-;delta([1,n];sigma))", "[0]|xsigma",
// "[0]|xdelta([a,a+n];sigma)", and "L([x,y],..;<tempered>)"
TemperedSymbol parse_tempered(const std::string& s, HalfInt alpha);
LanglandsDatum parse_datum(const std::string& s, HalfInt alpha);

}  // namespace apk
