// SPDX-License-Identifier: MIT

#include "apk/json_io.hpp"

#include <cctype>
#include <cstdio>

namespace apk {

namespace {

const char* tag_name(TempTag t) {
  switch (t) {
    case TempTag::Cusp: return "Cusp";
    case TempTag::GenSteinberg: return "GenSteinberg";
    case TempTag::StronglyPositive: return "StronglyPositive";
    case TempTag::PMSquare: return "PMSquare";
    case TempTag::PMZeroChain: return "PMZeroChain";
    case TempTag::TauPM: return "TauPM";
    case TempTag::ZeroInduced: return "ZeroInduced";
  }
  return "?";
}

template <class T>
Json list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

// ---------------------------------------------------------------------------
// a small cursor for the text syntax

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
  bool peek(const std::string& t) {
    ws();
    return s.compare(i, t.size(), t) == 0;
  }
  bool eat(const std::string& t) {
    if (!peek(t)) return false;
    i += t.size();
    return true;
  }
  void expect(const std::string& t) {
    if (!eat(t)) fail("expected '" + t + "'");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(i) + " in '" + s + "'");
  }
  std::string number() {
    ws();
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/' || s[j] == '.')) ++j;
    if (j == i) fail("expected a number");
    std::string out = s.substr(i, j - i);
    i = j;
    return out;
  }
  HalfInt half() { return HalfInt::parse(number()); }
  int integer() {
    std::string n = number();
    HalfInt h = HalfInt::parse(n);
    if (!h.is_integer()) fail("expected an integer, got " + n);
    return static_cast<int>(h.to_int());
  }
  int sign() {
    if (eat("+")) return 1;
    if (eat("-")) return -1;
    fail("expected a sign");
  }
};

Segment read_segment(Cursor& c) {
  c.expect("[");
  HalfInt x = c.half();
  HalfInt y = x;
  if (c.eat(",")) y = c.half();
  c.expect("]");
  return Segment::make(x, y);
}

int read_pm(Cursor& c) {
  c.expect("_");
  return c.sign();
}

int length_from(HalfInt start, const Segment& s) { return static_cast<int>(steps(start, s.y)); }

TemperedSymbol read_tempered(Cursor& c, HalfInt alpha) {
  if (c.eat("sigma")) return TemperedSymbol::cusp(alpha);
  if (c.eat("[0]|x")) {
    if (c.eat("sigma")) return TemperedSymbol::zero_induced(alpha, -1);
    c.expect("delta(");
    Segment s = read_segment(c);
    c.expect(";sigma)");
    if (s.x != alpha) c.fail("the segment must start at alpha");
    return TemperedSymbol::zero_induced(alpha, length_from(alpha, s));
  }
  if (c.eat("delta_sp(")) {
    Segment s1 = read_segment(c);
    c.expect(",");
    Segment s2 = read_segment(c);
    c.expect(";sigma)");
    if (s1.x != alpha - 1 || s2.x != alpha) c.fail("strongly positive segments start at alpha-1 and alpha");
    return TemperedSymbol::strongly_positive(alpha, length_from(alpha - 1, s1), length_from(alpha, s2));
  }
  if (c.eat("tau(")) {
    c.expect("[0]");
    int sg = read_pm(c);
    c.expect(";delta(");
    Segment s = read_segment(c);
    c.expect(";sigma))");
    if (s.x != HalfInt::of(1)) c.fail("the segment must start at 1");
    return TemperedSymbol::tau_pm(sg, length_from(HalfInt::of(1), s) + 1);
  }
  if (c.eat("delta(")) {
    Segment s = read_segment(c);
    if (c.peek("_")) {
      int sg = read_pm(c);
      c.expect(";sigma)");
      if (s.x == HalfInt()) return TemperedSymbol::pm_zero_chain(length_from(HalfInt(), s), sg);
      return TemperedSymbol::pm_square(alpha, -s.x, s.y, sg);
    }
    c.expect(";sigma)");
    if (s.x != alpha) c.fail("the segment must start at alpha");
    return TemperedSymbol::gen_steinberg(alpha, length_from(alpha, s));
  }
  c.fail("unknown tempered symbol");
}

}  // namespace

// ---------------------------------------------------------------------------
// encoders

Json to_json(HalfInt h) { return h.str(); }

Json to_json(const Segment& s) {
  return Json{{"line", s.line}, {"x2", s.x.twice()}, {"y2", s.y.twice()}, {"text", s.str()}};
}

Json to_json(const GLGen& g) {
  return Json{{"tag", g.tag == GenTag::Delta ? "Delta" : "Zeta"}, {"seg", to_json(g.seg)}, {"text", g.str()}};
}

Json to_json(const GLWord& w) {
  Json a = Json::array();
  for (const auto& g : w.factors()) a.push_back(g.str());
  return a;
}

Json to_json(const ExpString& s) { return s.str(); }

Json to_json(const StringSum& s) {
  Json a = Json::array();
  for (const auto& [str, c] : s) a.push_back(Json{{"string", str.str()}, {"coeff", c}});
  return a;
}

Json to_json(const RTensorR& t) {
  Json a = Json::array();
  for (const auto& [k, c] : t) a.push_back(Json{{"left", k.first.str()}, {"right", k.second.str()}, {"coeff", c}});
  return a;
}

Json to_json(const TemperedSymbol& t) {
  Json args = Json::object();
  switch (t.tag) {
    case TempTag::Cusp: break;
    case TempTag::GenSteinberg:
    case TempTag::ZeroInduced: args["n"] = t.n; break;
    case TempTag::StronglyPositive: args["m"] = t.m, args["n"] = t.n; break;
    case TempTag::PMSquare: args["x"] = t.x.str(), args["y"] = t.y.str(), args["sign"] = t.sign; break;
    case TempTag::PMZeroChain:
    case TempTag::TauPM: args["n"] = t.n, args["sign"] = t.sign; break;
  }
  return Json{{"tag", tag_name(t.tag)}, {"alpha", t.alpha.str()}, {"args", args}, {"text", t.str()}};
}

Json to_json(const LanglandsDatum& d) {
  return Json{{"segs", list(d.segs)}, {"temp", to_json(d.temp)}, {"text", d.str()}};
}

Json to_json(const InducedExpr& e) {
  Json g = Json::array();
  for (const auto& x : e.gens) g.push_back(x.str());
  return Json{{"gens", g}, {"tail", e.tail.str()}, {"text", e.str()}};
}

Json to_json(const JordanBlock& b) {
  Json j{{"line", b.line}, {"a", b.a}, {"b", b.b}};
  if (b.a == b.b) j["zeta"] = b.zeta_choice;
  return j;
}

Json to_json(const AParam& p) { return Json{{"blocks", list(p.blocks)}, {"text", p.str()}}; }

Json to_json(const PacketPair& pp) {
  Json eps = Json::array();
  for (const auto& b : pp.psi.blocks) {
    auto it = pp.eps.find(b);
    eps.push_back(it == pp.eps.end() ? 0 : it->second);
  }
  return Json{{"blocks", list(pp.psi.blocks)},
              {"eps", eps},
              {"product_override", pp.product_override},
              {"text", pp.str()}};
}

Json to_json(const BaseCusp& b) {
  Json lines = Json::array();
  for (const auto& [id, l] : b.base.psi.lines)
    lines.push_back(Json{{"id", id}, {"name", l.name}, {"alpha", l.alpha.str()}, {"parity", to_string(l.parity)}});
  return Json{{"sigma", b.sigma_id},
              {"alpha", b.alpha().str()},
              {"lines", lines},
              {"psi_eps", to_json(b.base)},
              {"pm_convention", b.pm_convention}};
}

Json to_json(const SocleCertificate& c) {
  Json j{{"x", c.x.str()},
         {"parent", c.parent.str()},
         {"target", c.target.str()},
         {"leading_string", c.leading_string.str()},
         {"target_lead", c.target_lead.str()},
         {"raw_count", c.raw_count},
         {"mult", c.multiplicity},
         {"envelope", c.envelope.str()},
         {"rule", c.rule},
         {"bound", c.bound},
         {"external", c.external}};
  j["digest"] = digest(j);
  return j;
}

Json to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& st : t.steps) {
    Json s{{"kind", to_string(st.kind)}, {"line", st.line}};
    if (st.before) s["before"] = st.before->str();
    if (st.after) s["after"] = st.after->str();
    if (st.kind == StepKind::Reduce || st.kind == StepKind::Delete) s["exponent"] = st.exponent.str();
    if (st.gen) s["generator"] = st.gen->str(), s["sign"] = st.sign;
    if (st.partner) s["partner"] = st.partner->str();
    steps.push_back(s);
  }
  return Json{{"steps", steps},
              {"result", to_json(t.result)},
              {"certificates", list(t.certificates)},
              {"external", t.external},
              {"text", t.str()}};
}

Json to_json(const JacResult& r) {
  Json j{{"undecidable", r.undecidable}, {"external", r.external}};
  Json v = Json::array();
  for (const auto& [d, c] : r.value) v.push_back(Json{{"datum", d.str()}, {"coeff", c}});
  j["value"] = v;
  if (r.undecidable) j["reason"] = r.reason;
  return j;
}

Json to_json(const FamilyCheck& c) {
  Json j{{"name", c.name},
         {"packet", c.packet},
         {"expected", c.expected.str()},
         {"got", c.got ? Json(c.got->str()) : Json(nullptr)},
         {"trace", c.trace},
         {"certificates", list(c.certs)},
         {"external", c.external},
         {"pass", c.pass}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

Json to_json(const LabelReport& r) {
  Json j{{"name", r.name},
         {"expected", r.expected},
         {"got", r.got ? Json(r.got->str()) : Json(nullptr)},
         {"recipe", to_string(r.kind)},
         {"packet", r.packet},
         {"detail", r.detail},
         {"certificates", list(r.certs)},
         {"external", r.external},
         {"pass", r.pass}};
  return j;
}

Json to_json(const PairReport& r) {
  return Json{{"a", r.a}, {"b", r.b}, {"route", r.route}, {"detail", r.detail}, {"pass", r.pass}};
}

Json to_json(const CaseReport& r) {
  return Json{{"case", r.name},
              {"alpha", r.alpha.str()},
              {"labels", list(r.labels)},
              {"pairs", list(r.pairs)},
              {"expected_count", r.expected_count},
              {"count", r.labels.size()},
              {"critical", r.critical},
              {"pass", r.pass}};
}

Json to_json(const AppendixReport& r) {
  Json jacs = Json::array();
  for (HalfInt x : r.jacs) jacs.push_back(x.str());
  return Json{{"x", r.x.str()},
              {"alpha", r.alpha.str()},
              {"packet", r.packet},
              {"low", r.low},
              {"start", r.start.str()},
              {"jacs", jacs},
              {"got", r.got ? Json(r.got->str()) : Json(nullptr)},
              {"expected", r.expected.str()},
              {"certificates", list(r.certs)},
              {"admissible", r.admissible},
              {"external", r.external},
              {"detail", r.detail},
              {"pass", r.pass}};
}

std::string digest(const Json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// decoders

HalfInt halfint_from_json(const Json& j) {
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  if (j.is_number_integer()) return HalfInt::of(j.get<std::int64_t>());
  if (j.is_number()) {
    double d = j.get<double>() * 2;
    auto t = static_cast<std::int64_t>(d);
    if (static_cast<double>(t) != d) throw ParseError("not a half-integer: " + j.dump());
    return HalfInt::from_twice(t);
  }
  throw ParseError("expected a half-integer, got " + j.dump());
}

Segment segment_from_json(const Json& j) {
  if (j.is_string()) {
    Cursor c{j.get_ref<const std::string&>()};
    Segment s = read_segment(c);
    if (!c.done()) c.fail("trailing text");
    return s;
  }
  if (j.is_object() && j.contains("x2") && j.contains("y2"))
    return Segment::make(HalfInt::from_twice(j["x2"].get<std::int64_t>()),
                         HalfInt::from_twice(j["y2"].get<std::int64_t>()), j.value("line", 0));
  if (!j.is_array() || j.size() != 2) throw ParseError("a segment is {\"x2\", \"y2\"} or [x, y]: " + j.dump());
  return Segment::make(halfint_from_json(j[0]), halfint_from_json(j[1]));
}

TemperedSymbol tempered_from_json(const Json& j, HalfInt alpha) {
  if (j.is_string()) return parse_tempered(j.get<std::string>(), alpha);
  if (!j.is_object() || !j.contains("tag")) throw ParseError("a tempered symbol needs a tag: " + j.dump());
  if (j.contains("alpha")) alpha = halfint_from_json(j["alpha"]);
  const std::string tag = j["tag"].get<std::string>();
  const Json args = j.value("args", Json::object());
  auto num = [&](const char* k) {
    if (!args.contains(k)) throw ParseError(std::string("missing argument '") + k + "' for " + tag);
    return args[k].get<int>();
  };
  if (tag == "Cusp") return TemperedSymbol::cusp(alpha);
  if (tag == "GenSteinberg") return TemperedSymbol::gen_steinberg(alpha, num("n"));
  if (tag == "StronglyPositive") return TemperedSymbol::strongly_positive(alpha, num("m"), num("n"));
  if (tag == "PMSquare")
    return TemperedSymbol::pm_square(alpha, halfint_from_json(args.at("x")), halfint_from_json(args.at("y")),
                                     num("sign"));
  if (tag == "PMZeroChain") return TemperedSymbol::pm_zero_chain(num("n"), num("sign"));
  if (tag == "TauPM") return TemperedSymbol::tau_pm(num("sign"), num("n"));
  if (tag == "ZeroInduced") return TemperedSymbol::zero_induced(alpha, args.value("n", -1));
  throw ParseError("unknown tempered tag '" + tag + "'");
}

LanglandsDatum datum_from_json(const Json& j, HalfInt alpha) {
  if (j.is_string()) return parse_datum(j.get<std::string>(), alpha);
  if (!j.is_object() || !j.contains("temp")) throw ParseError("a datum is {\"segs\", \"temp\"}: " + j.dump());
  std::vector<Segment> segs;
  for (const auto& s : j.value("segs", Json::array())) segs.push_back(segment_from_json(s));
  return LanglandsDatum::make(std::move(segs), tempered_from_json(j["temp"], alpha));
}

JordanBlock block_from_json(const Json& j) {
  if (j.is_string()) {
    auto v = parse_blocks(j.get<std::string>());
    if (v.size() != 1) throw ParseError("expected one block: " + j.dump());
    return v.front().blk;
  }
  JordanBlock b = JordanBlock::make(j.at("a").get<int>(), j.at("b").get<int>(), j.value("line", 0));
  if (j.contains("zeta")) b.zeta_choice = j["zeta"].get<int>();
  return b;
}

PacketPair packet_from_json(const Json& j) {
  PacketPair pp;
  const Json& blocks = j.at("blocks");
  const Json eps = j.value("eps", Json::array());
  if (!eps.empty() && eps.size() != blocks.size()) throw ParseError("eps must be parallel to blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    JordanBlock b = block_from_json(blocks[i]);
    pp.psi.blocks.push_back(b);
    if (!eps.empty()) {
      int e = eps[i].get<int>();
      auto [it, fresh] = pp.eps.emplace(b, e);
      if (!fresh && it->second != e) throw ParseError("equal blocks need equal eps: " + b.str());
    }
  }
  pp.psi.normalize();
  pp.product_override = j.value("product_override", false);
  return pp;
}

// ---------------------------------------------------------------------------
// text syntax

std::vector<HalfInt> parse_halfint_list(const std::string& s) {
  std::vector<HalfInt> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(HalfInt::parse(cur));
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
    else cur += ch;
  }
  flush();
  return out;
}

std::vector<BlockSpec> parse_blocks(const std::string& s) {
  Cursor c{s};
  std::vector<BlockSpec> out;
  while (!c.done()) {
    LineId line = 0;
    if (c.eat("r")) {
      line = c.integer();
      c.expect(":");
    }
    c.expect("(");
    int a = c.integer();
    c.expect(",");
    int b = c.integer();
    c.expect(")");
    BlockSpec spec{JordanBlock::make(a, b, line), 0};
    if (c.eat("z")) {
      if (a != b) c.fail("zeta is only chosen when a = b");
      spec.blk.zeta_choice = c.sign();
    }
    if (c.peek("+") || c.peek("-")) spec.eps = c.sign();
    out.push_back(spec);
    if (!c.done()) c.expect(",");
  }
  return out;
}

GLGen parse_gen(const std::string& s) {
  Cursor c{s};
  GenTag tag = GenTag::Delta;
  bool tagged = false;
  if (c.eat("D")) tagged = true;
  else if (c.eat("Z")) tag = GenTag::Zeta, tagged = true;
  Segment seg = read_segment(c);
  if (!c.done()) c.fail("trailing text");
  if (!tagged && seg.x != seg.y) c.fail("a segment of length > 1 needs D or Z");
  return tag == GenTag::Delta ? GLGen::delta(seg.x, seg.y) : GLGen::zeta(seg.x, seg.y);
}

GLWord parse_word(const std::string& s) {
  std::vector<GLGen> f;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == 'x' && depth == 0) {
      f.push_back(parse_gen(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (cur.find_first_not_of(" \t") != std::string::npos && cur != "1") f.push_back(parse_gen(cur));
  return word_canon(std::move(f));
}

TemperedSymbol parse_tempered(const std::string& s, HalfInt alpha) {
  Cursor c{s};
  TemperedSymbol t = read_tempered(c, alpha);
  if (!c.done()) c.fail("trailing text");
  return t;
}

LanglandsDatum parse_datum(const std::string& s, HalfInt alpha) {
  Cursor c{s};
  if (!c.eat("L(")) {
    TemperedSymbol t = read_tempered(c, alpha);
    if (!c.done()) c.fail("trailing text");
    return LanglandsDatum::tempered(t);
  }
  std::vector<Segment> segs;
  do {
    segs.push_back(read_segment(c));
  } while (c.eat(","));
  c.expect(";");
  TemperedSymbol t = read_tempered(c, alpha);
  c.expect(")");
  if (!c.done()) c.fail("trailing text");
  return LanglandsDatum::make(std::move(segs), t);
}

}  // namespace apk
