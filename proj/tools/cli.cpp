// SPDX-License-Identifier: MIT

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "apk/suites.hpp"

namespace apk::cli {

namespace {

struct ConfigError : Error {
  using Error::Error;
};

struct Settings {
  HalfInt alpha = HalfInt::from_twice(5);
  int xi = 1;
  int pm_convention = 1;
  std::optional<Json> sigma;  // blocks text or {"blocks", "eps"}
  std::optional<Json> lines;
  bool product_override = false;
  std::int64_t letter_bound = kDefaultLetterBound;
  std::string format = "text";
  unsigned jobs = 1;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
}

int parse_sign(const Json& j, const char* what) {
  int v = j.get<int>();
  if (v != 1 && v != -1) throw ConfigError(std::string(what) + " must be 1 or -1");
  return v;
}

void apply_config(Settings& s, const Json& j) {
  if (!j.is_object()) throw ConfigError("the config must be a JSON object");
  static const std::vector<std::string> known{"alpha", "xi", "pm_convention", "sigma", "lines",
                                              "product_override", "letter_bound", "format", "jobs"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw ConfigError("unknown config field '" + k + "'");
  try {
    if (j.contains("alpha")) s.alpha = halfint_from_json(j["alpha"]);
    if (j.contains("xi")) s.xi = parse_sign(j["xi"], "xi");
    if (j.contains("pm_convention")) s.pm_convention = parse_sign(j["pm_convention"], "pm_convention");
    if (j.contains("sigma")) s.sigma = j["sigma"];
    if (j.contains("lines")) s.lines = j["lines"];
    if (j.contains("product_override")) s.product_override = j["product_override"].get<bool>();
    if (j.contains("letter_bound")) s.letter_bound = j["letter_bound"].get<std::int64_t>();
    if (j.contains("format")) s.format = j["format"].get<std::string>();
    if (j.contains("jobs")) s.jobs = j["jobs"].get<unsigned>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

LineTable lines_from(const Settings& s) {
  LineTable t;
  if (!s.lines) {
    t[0] = CuspLine{0, "rho", s.alpha, CuspLine::parity_for_alpha(s.alpha), std::nullopt};
    t[1] = CuspLine{1, "aux", HalfInt::of(1), Parity::Odd, std::nullopt};
    return t;
  }
  for (const auto& l : *s.lines) {
    CuspLine c;
    c.id = l.at("id").get<LineId>();
    c.name = l.value("name", c.id == 0 ? std::string("rho") : "r" + std::to_string(c.id));
    c.alpha = halfint_from_json(l.at("alpha"));
    std::string par = l.value("parity", std::string(to_string(CuspLine::parity_for_alpha(c.alpha))));
    if (par != "odd" && par != "even") throw ConfigError("parity must be odd or even");
    c.parity = par == "odd" ? Parity::Odd : Parity::Even;
    t[c.id] = c;
  }
  if (!t.count(0)) throw ConfigError("the lines must include id 0");
  if (t.at(0).alpha != s.alpha) throw ConfigError("line 0 alpha disagrees with alpha");
  return t;
}

BaseCusp build_base(const Settings& s) {
  if (!s.sigma) {
    if (s.lines) throw ConfigError("custom lines need an explicit sigma");
    BaseCusp b = make_standard_base(s.alpha, s.xi);
    b.pm_convention = s.pm_convention;
    b.validate();
    return b;
  }
  BaseCusp b;
  b.sigma_id = "sigma";
  b.pm_convention = s.pm_convention;
  b.base.psi.lines = lines_from(s);
  if (s.sigma->is_string()) {
    for (const auto& spec : parse_blocks(s.sigma->get<std::string>())) {
      if (spec.eps == 0) throw ConfigError("every block of sigma needs a sign: " + spec.blk.str());
      auto [it, fresh] = b.base.eps.emplace(spec.blk, spec.eps);
      if (!fresh && it->second != spec.eps) throw ConfigError("equal blocks need equal signs: " + spec.blk.str());
      b.base.psi.blocks.push_back(spec.blk);
    }
  } else {
    PacketPair pp = packet_from_json(*s.sigma);
    b.base.psi.blocks = pp.psi.blocks;
    b.base.eps = pp.eps;
  }
  for (const auto& blk : b.base.psi.blocks)
    if (!b.base.psi.lines.count(blk.line)) throw ConfigError("block on an unknown line: " + blk.str());
  b.base.psi.normalize();
  b.validate();
  if (b.xi() != s.xi && s.xi != 1) throw ConfigError("xi disagrees with eps_sigma(rho,1,1)");
  return b;
}

// The rho line of --blocks replaces that of psi_sigma; other lines default
// to psi_sigma with its signs.
PacketPair build_packet(const BaseCusp& base, const std::string& blocks, const std::string& eps_list,
                        bool product_override) {
  std::vector<BlockSpec> specs = parse_blocks(blocks);
  if (!eps_list.empty()) {
    std::vector<int> eps;
    std::stringstream ss(eps_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "+" || tok == "1" || tok == "+1") eps.push_back(1);
      else if (tok == "-" || tok == "-1") eps.push_back(-1);
      else throw ParseError("eps entries are + or -: '" + tok + "'");
    }
    if (eps.size() != specs.size()) throw ParseError("--eps must have one sign per block");
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (specs[i].eps != 0 && specs[i].eps != eps[i]) throw ParseError("inline sign disagrees with --eps");
      specs[i].eps = eps[i];
    }
  }
  PacketPair pp;
  pp.product_override = product_override;
  std::vector<LineId> given;
  for (const auto& sp : specs) given.push_back(sp.blk.line);
  for (const auto& b : base.base.psi.blocks)
    if (std::find(given.begin(), given.end(), b.line) == given.end() && b.line != 0) {
      pp.psi.blocks.push_back(b);
      pp.eps[b] = base.base.eps_of(b);
    }
  for (const auto& sp : specs) {
    if (!base.base.psi.lines.count(sp.blk.line)) throw ParseError("unknown line in block " + sp.blk.str());
    if (sp.eps == 0) throw ParseError("block " + sp.blk.str() + " needs a sign (inline or --eps)");
    auto [it, fresh] = pp.eps.emplace(sp.blk, sp.eps);
    if (!fresh && it->second != sp.eps) throw ParseError("equal blocks need equal signs: " + sp.blk.str());
    pp.psi.blocks.push_back(sp.blk);
  }
  pp.psi.lines = base.base.psi.lines;
  pp.psi.normalize();
  pp.validate();
  return pp;
}

Json word_sum_json(const WordSum& s) {
  Json a = Json::array();
  for (const auto& [w, c] : s) a.push_back(Json{{"word", w.str()}, {"coeff", c}});
  return a;
}

Json suite_summary(const Suite& s) {
  return Json{{"name", s.name}, {"passed", s.passed()}, {"failed", s.failed()}, {"skipped", s.skipped()},
              {"pass", s.pass()}};
}

std::string mark(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  bool pass = true;
  std::vector<std::string> text;  // the text rendering
};

void suite_text(Report& r, const Suite& s) {
  r.text.push_back(mark(s.pass()) + " " + s.name + ": " + std::to_string(s.passed()) + " passed, " +
                   std::to_string(s.failed()) + " failed, " + std::to_string(s.skipped()) + " skipped");
  for (const auto& c : s.checks)
    if (!c.pass && !c.skipped) r.text.push_back("  FAIL " + c.name + ": " + c.detail);
}

std::optional<FamilyKind> kind_option(const std::string& s, HalfInt alpha) {
  if (!s.empty()) return parse_family_kind(s);
  return family_kind_at(alpha);
}

EpsRule default_rule(FamilyKind k, int m, int n) {
  if (k == FamilyKind::RedGt1) return n < m ? EpsRule::EpsPrime : EpsRule::Eps;
  return EpsRule::Plus;
}

int grid_lo(FamilyKind k) { return k == FamilyKind::RedHalf || k == FamilyKind::Red1 ? 1 : 0; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arthur packet calculator: Hopf algebra, Jacquet certificates, Moeglin recursion, critical catalog"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string alpha_s, config_path, format, sigma_s;
  int xi = 0, pm = 0;
  unsigned jobs = 0;
  std::int64_t letter_bound = 0;
  bool product_override = false;
  app.add_option("--alpha", alpha_s, "reducibility exponent of the base, e.g. 5/2 or 2.5");
  app.add_option("--xi", xi, "eps_sigma(rho,1,1) for the standard base")->check(CLI::IsMember({1, -1}));
  app.add_option("--pm-convention", pm, "sign convention for delta([0,n]_+-;sigma)")->check(CLI::IsMember({1, -1}));
  app.add_option("--sigma", sigma_s, "psi_sigma with signs, e.g. \"(1,1)+,(3,1)-,r1:(1,1)-\"");
  app.add_option("--config", config_path, std::string("JSON config (default: $") + kConfigEnv + ")");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "worker threads for grids and catalogs");
  app.add_option("--letter-bound", letter_bound, "cuspidal letter bound for expansions");
  app.add_flag("--product-override", product_override, "allow eps with product -1");

  // mstar
  auto* c_mstar = app.add_subcommand("mstar", "m*, M* or the GL part of M* of a word");
  std::string m_delta, m_zeta, m_word, m_kind = "M";
  c_mstar->add_option("--delta", m_delta, "segment x,y");
  c_mstar->add_option("--zeta", m_zeta, "segment x,y");
  c_mstar->add_option("--word", m_word, "product such as D[0,1]xZ[2,3]x[5]");
  c_mstar->add_option("--kind", m_kind, "m, M or GL")->check(CLI::IsMember({"m", "M", "GL"}));

  // mustar
  auto* c_mustar = app.add_subcommand("mustar", "cuspidal strings of an induced representation");
  std::string mu_word, mu_tail = "sigma", mu_datum, mu_env = "full";
  c_mustar->add_option("--word", mu_word, "GL part");
  c_mustar->add_option("--tail", mu_tail, "tempered symbol");
  c_mustar->add_option("--datum", mu_datum, "Langlands datum, used instead of --word/--tail");
  c_mustar->add_option("--envelope", mu_env, "sub, standard, full or bound")
      ->check(CLI::IsMember({"sub", "standard", "full", "bound"}));

  // jac
  auto* c_jac = app.add_subcommand("jac", "Jac_x of a Langlands datum");
  std::string j_datum, j_x;
  bool j_leading = false, j_iz = false;
  c_jac->add_option("--datum", j_datum)->required();
  c_jac->add_option("--x", j_x)->required();
  c_jac->add_flag("--leading", j_leading, "only the leading term nu^x |x theta with its multiplicity");
  c_jac->add_flag("--irreducible-or-zero", j_iz, "assume Jac_x is irreducible or 0");

  // packet, dual
  auto* c_packet = app.add_subcommand("packet", "pi(psi, eps) through the reduction recursion");
  auto* c_dual = app.add_subcommand("dual", "Aubert dual by the parameter swap");
  std::string p_blocks, p_eps, p_expect;
  bool p_no_resolve = false;
  for (auto* c : {c_packet, c_dual}) {
    c->add_option("--blocks", p_blocks, "rho line of psi, e.g. \"(6,1)+,(1,2)-\"")->required();
    c->add_option("--eps", p_eps, "signs parallel to --blocks");
    c->add_option("--expect", p_expect, "expected member; a mismatch exits 1");
    c->add_flag("--no-resolve", p_no_resolve, "stop at boundary cases instead of using the boundary generator");
  }

  // family
  auto* c_family = app.add_subcommand("family", "the two-parameter families");
  std::string f_case, f_rule;
  int f_m = -1, f_n = -1, f_grid = -1;
  bool f_verify = false;
  c_family->add_option("--case", f_case, "gt1, zero, half or one (default: the family at alpha)");
  c_family->add_option("--m", f_m);
  c_family->add_option("--n", f_n);
  c_family->add_option("--rule,--sign", f_rule, "eps, eps', +, - or +--");
  c_family->add_flag("--verify", f_verify, "also check the duality formula; mismatches exit 1");
  c_family->add_option("--grid", f_grid, "run the family and duality suites on [lo, N]");

  // critical
  auto* c_crit = app.add_subcommand("critical", "critical points");
  c_crit->require_subcommand(1);
  auto* c_cv = c_crit->add_subcommand("verify", "verify catalog cases");
  std::string cv_case;
  c_cv->add_option("--case", cv_case, "case name (default: all cases at alpha)");
  auto* c_cl = c_crit->add_subcommand("list", "list the catalog at alpha");
  auto* c_ca = c_crit->add_subcommand("appendix", "the complementary-series lemma");
  std::string ca_x;
  c_ca->add_option("--x", ca_x, "default: every admissible x");
  auto* c_cp = c_crit->add_subcommand("primitive", "the primitive predicate");
  std::string cp_datum, cp_blocks, cp_eps;
  c_cp->add_option("--datum", cp_datum)->required();
  c_cp->add_option("--blocks", cp_blocks, "optional packet that must contain the datum");
  c_cp->add_option("--eps", cp_eps);

  // verify-all
  auto* c_all = app.add_subcommand("verify-all", "every suite applicable at alpha");
  int a_grid = 3;
  bool a_core = false;
  c_all->add_option("--grid", a_grid, "upper end of the family grids");
  c_all->add_flag("--core", a_core, "include the Hopf and structural suites");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Settings st;
  Report r;
  try {
    std::string cfg = config_path;
    if (cfg.empty())
      if (const char* env = std::getenv(kConfigEnv)) cfg = env;
    if (!cfg.empty()) apply_config(st, read_json_file(cfg));
    if (!alpha_s.empty()) st.alpha = HalfInt::parse(alpha_s);
    if (xi != 0) st.xi = xi;
    if (pm != 0) st.pm_convention = pm;
    if (!sigma_s.empty()) st.sigma = Json(sigma_s);
    if (!format.empty()) st.format = format;
    if (jobs != 0) st.jobs = jobs;
    if (letter_bound != 0) st.letter_bound = letter_bound;
    if (product_override) st.product_override = true;
    if (st.format != "text" && st.format != "json") throw ConfigError("format must be text or json");
    if (st.jobs == 0) st.jobs = 1;
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }

  auto finish = [&]() {
    if (st.format == "json") {
      Json j{{"version", kVersion}, {"command", r.command}, {"inputs", r.inputs}, {"results", r.results},
             {"pass", r.pass}};
      out << j.dump(2) << "\n";
    } else {
      for (const auto& l : r.text) out << l << "\n";
      out << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? 0 : 1;
  };

  // stage 1: inputs; errors here exit 2
  BaseCusp base;
  try {
    base = build_base(st);
    r.inputs["base"] = to_json(base);
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
  const HalfInt alpha = base.alpha();

  try {
    if (c_mstar->parsed()) {
      r.command = "mstar";
      GLWord w;
      int given = !m_delta.empty() + !m_zeta.empty() + !m_word.empty();
      if (given != 1) throw ParseError("give exactly one of --delta, --zeta, --word");
      auto seg = [](const std::string& t) {
        auto v = parse_halfint_list(t);
        if (v.size() != 2) throw ParseError("a segment is x,y");
        return v;
      };
      if (!m_delta.empty()) {
        auto v = seg(m_delta);
        w = word_canon({GLGen::delta(v[0], v[1])});
      } else if (!m_zeta.empty()) {
        auto v = seg(m_zeta);
        w = word_canon({GLGen::zeta(v[0], v[1])});
      } else {
        w = parse_word(m_word);
      }
      r.inputs["word"] = to_json(w);
      r.inputs["kind"] = m_kind;
      if (m_kind == "GL") {
        WordSum s = Mstar_GL(w);
        r.results["terms"] = word_sum_json(s);
        r.results["count"] = s.size();
        for (const auto& [x, c] : s) r.text.push_back(std::to_string(c) + "  " + x.str());
      } else {
        RTensorR t = m_kind == "m" ? mstar(w) : Mstar(w);
        r.results["terms"] = to_json(t);
        r.results["count"] = t.size();
        for (const auto& [k, c] : t) r.text.push_back(std::to_string(c) + "  " + k.first.str() + " (x) " + k.second.str());
      }
      r.text.push_back(std::to_string(r.results["count"].get<std::size_t>()) + " terms");
    } else if (c_mustar->parsed()) {
      r.command = "mustar";
      InducedExpr e;
      std::optional<LanglandsDatum> d;
      if (!mu_datum.empty()) {
        d = parse_datum(mu_datum, alpha);
        r.inputs["datum"] = to_json(*d);
        r.inputs["envelope"] = mu_env;
        e = mu_env == "standard" ? standard_module(*d) : langlands_sub_envelope(*d);
      } else {
        GLWord w = mu_word.empty() ? GLWord{} : parse_word(mu_word);
        e.gens = w.factors();
        e.tail = parse_tempered(mu_tail, alpha);
      }
      r.inputs["induced"] = to_json(e);
      r.inputs["letter_bound"] = st.letter_bound;
      // a tempered tail is replaced by its defining chain over sigma
      for (const auto& g : tail_chain(e.tail)) e.gens.push_back(g);
      e.tail = TemperedSymbol::cusp(alpha);
      r.results["expanded"] = to_json(e);
      StringSum s = mu_env == "bound" && d ? datum_upper_bound(*d, st.letter_bound) : mu_star_cuspidal(e, st.letter_bound);
      r.results["strings"] = to_json(s);
      r.results["count"] = s.size();
      r.text.push_back(e.str());
      for (const auto& [x, c] : s) r.text.push_back(std::to_string(c) + "  " + x.str());
    } else if (c_jac->parsed()) {
      r.command = "jac";
      LanglandsDatum d = parse_datum(j_datum, alpha);
      HalfInt x = HalfInt::parse(j_x);
      r.inputs["datum"] = to_json(d);
      r.inputs["x"] = x.str();
      r.inputs["leading"] = j_leading;
      r.inputs["irreducible_or_zero"] = j_iz;
      if (j_leading) {
        LeadingJacquet lj = leading_jacquet(base, d, x);
        r.results = Json{{"undecidable", lj.undecidable}, {"f", lj.f}};
        if (!lj.undecidable) r.results["theta"] = to_json(lj.theta);
        r.pass = !lj.undecidable;
        r.text.push_back(lj.undecidable ? "undecidable"
                                        : "f = " + std::to_string(lj.f) + ", theta = " + lj.theta.str());
      } else {
        JacResult jr = jac(base, d, x, j_iz);
        r.results = to_json(jr);
        r.pass = !jr.undecidable;
        if (jr.undecidable) r.text.push_back("undecidable: " + jr.reason);
        else if (jr.is_zero()) r.text.push_back("Jac_" + x.str() + " = 0");
        for (const auto& [t, c] : jr.value) r.text.push_back(std::to_string(c) + "  " + t.str());
        if (jr.external) r.text.push_back("(uses the irreducible-or-0 property)");
      }
    } else if (c_packet->parsed() || c_dual->parsed()) {
      const bool dual = c_dual->parsed();
      r.command = dual ? "dual" : "packet";
      PacketPair pp = build_packet(base, p_blocks, p_eps, st.product_override);
      r.inputs["packet"] = to_json(pp);
      r.inputs["resolve_boundary"] = !p_no_resolve;
      std::optional<LanglandsDatum> want;
      if (!p_expect.empty()) want = parse_datum(p_expect, alpha), r.inputs["expect"] = to_json(*want);
      ReductionTrace tr = moeglin_rep(base, pp, !p_no_resolve);
      r.results["member"] = to_json(tr.result);
      r.results["trace"] = to_json(tr);
      r.text.push_back(pp.str());
      r.text.push_back(tr.str());
      LanglandsDatum shown = tr.result;
      if (dual) {
        PacketPair dp = aubert_param(pp);
        LanglandsDatum dm = dual_of_elementary_ddr(base, pp, !p_no_resolve);
        r.results["dual_packet"] = to_json(dp);
        r.results["dual_member"] = to_json(dm);
        r.text.push_back("dual: " + dp.str() + " => " + dm.str());
        shown = dm;
      }
      if (want) {
        r.pass = shown == *want;
        r.results["expected_equal"] = r.pass;
        r.text.push_back(std::string(r.pass ? "matches " : "differs from ") + want->str());
      }
    } else if (c_family->parsed()) {
      r.command = "family";
      auto kind = kind_option(f_case, alpha);
      if (!kind) throw PreconditionError("no family at alpha = " + alpha.str() + "; pass --case");
      r.inputs["case"] = to_string(*kind);
      if (f_grid >= 0) {
        r.inputs["grid"] = f_grid;
        const int lo = grid_lo(*kind);
        Suite a = suite_family_grid(base, *kind, lo, f_grid, st.jobs);
        Suite b = suite_duality_grid(base, *kind, lo, f_grid, st.jobs);
        r.results["suites"] = Json::array({a.to_json(), b.to_json()});
        r.pass = a.pass() && b.pass();
        suite_text(r, a);
        suite_text(r, b);
      } else {
        if (f_m < 0 || f_n < 0) throw ParseError("family needs --m and --n (or --grid)");
        r.inputs["m"] = f_m;
        r.inputs["n"] = f_n;
        FamilyCheck fc;
        if (f_m == f_n) {
          if (*kind != FamilyKind::RedGt1) throw PreconditionError("m = n is only covered for alpha > 1");
          fc = verify_family_diagonal(base, f_m);
        } else {
          EpsRule rule = f_rule.empty() ? default_rule(*kind, f_m, f_n) : parse_eps_rule(f_rule);
          r.inputs["rule"] = to_string(rule);
          fc = verify_family(base, *kind, f_m, f_n, rule);
          if (f_verify && fc.error.empty()) {
            FamilyCheck dc = verify_duality(base, theorem_label(base, *kind, f_m, f_n, rule));
            r.results["duality"] = to_json(dc);
            r.text.push_back(mark(dc.pass) + " duality " + dc.name + ": " +
                             (dc.got ? dc.got->str() : dc.error) + " vs " + dc.expected.str());
            if (!dc.pass) r.pass = false;
          }
        }
        r.results["case"] = to_string(*kind);
        r.results["m"] = f_m;
        r.results["n"] = f_n;
        r.results["route_a"] = fc.got ? Json(fc.got->str()) : Json(nullptr);
        r.results["route_b"] = fc.expected.str();
        r.results["equal"] = fc.pass;
        r.results["traces"] = to_json(fc);
        r.text.push_back(fc.name + " " + fc.packet);
        r.text.push_back("recursion:   " + (fc.got ? fc.got->str() : "error: " + fc.error));
        r.text.push_back("closed form: " + fc.expected.str());
        if (f_verify) {
          if (!fc.pass) r.pass = false;
        } else if (!fc.got) {
          r.pass = false;
        }
      }
    } else if (c_crit->parsed()) {
      if (c_cl->parsed()) {
        r.command = "critical list";
        Json cases = Json::array();
        for (const auto& c : catalog(base)) {
          Json labels = Json::array();
          r.text.push_back(c.name + " (" + std::to_string(c.labels.size()) + " labels)");
          for (const auto& l : c.labels) {
            labels.push_back(Json{{"name", l.name}, {"rep", l.display()}, {"recipe", to_string(l.recipe.kind)},
                                  {"dual", l.dual_partner ? Json(*l.dual_partner) : Json(nullptr)}});
            r.text.push_back("  " + l.name + " = " + l.display() + " [" + to_string(l.recipe.kind) + "]");
          }
          Json ex = Json::array();
          for (HalfInt x : c.exponents) ex.push_back(x.str());
          cases.push_back(Json{{"case", c.name}, {"exponents", ex}, {"constraint", c.alpha_constraint},
                               {"expected_count", c.expected_count}, {"labels", labels}});
        }
        Json all = Json::array();
        for (const auto& n : catalog_case_names()) all.push_back(n);
        r.results["cases"] = cases;
        r.results["all_case_names"] = all;
      } else if (c_cv->parsed()) {
        r.command = "critical verify";
        std::vector<CaseReport> reps;
        if (cv_case.empty()) {
          reps = verify_catalog(base, st.jobs);
        } else {
          r.inputs["case"] = cv_case;
          auto cat = catalog(base);
          auto it = std::find_if(cat.begin(), cat.end(), [&](const CriticalCase& c) { return c.name == cv_case; });
          if (it == cat.end()) throw PreconditionError("case '" + cv_case + "' does not apply at alpha = " + alpha.str());
          reps.push_back(verify_case(base, *it));
        }
        Json cases = Json::array();
        for (const auto& c : reps) {
          cases.push_back(to_json(c));
          if (!c.pass) r.pass = false;
          r.text.push_back(mark(c.pass) + " " + c.name + ": " + std::to_string(c.labels.size()) + " labels, expected " +
                           std::to_string(c.expected_count));
          for (const auto& l : c.labels)
            r.text.push_back(std::string("  ") + (l.pass ? "ok   " : "FAIL ") + l.name + " = " +
                             (l.got ? l.got->str() : l.expected) + " [" + to_string(l.kind) + "]" +
                             (l.external ? " external" : "") + (l.pass ? "" : " " + l.detail));
          for (const auto& p : c.pairs)
            r.text.push_back(std::string("  ") + (p.pass ? "ok   " : "FAIL ") + p.a + " <-> " + p.b + " (" + p.route + ")");
        }
        if (reps.empty()) r.text.push_back("no cases at alpha = " + alpha.str());
        r.results["cases"] = cases;
      } else if (c_ca->parsed()) {
        r.command = "critical appendix";
        if (ca_x.empty()) {
          Suite s = suite_appendix(base);
          r.results["suite"] = s.to_json();
          r.pass = s.pass();
          suite_text(r, s);
          for (const auto& c : s.checks)
            if (c.pass || c.skipped) r.text.push_back("  " + std::string(c.skipped ? "skip " : "ok   ") + c.name + ": " + c.detail);
        } else {
          HalfInt x = HalfInt::parse(ca_x);
          r.inputs["x"] = x.str();
          AppendixReport ar = appendix_lemma(base, x);
          r.results = to_json(ar);
          r.pass = ar.pass;
          r.text.push_back(ar.packet + " in order " + ar.low);
          r.text.push_back("start " + ar.start.str());
          std::string js;
          for (HalfInt j : ar.jacs) js += " Jac_" + j.str();
          r.text.push_back("chain" + js + " => " + (ar.got ? ar.got->str() : "-") + " vs " + ar.expected.str());
        }
      } else if (c_cp->parsed()) {
        r.command = "critical primitive";
        LanglandsDatum d = parse_datum(cp_datum, alpha);
        r.inputs["datum"] = to_json(d);
        std::optional<PacketPair> pp;
        if (!cp_blocks.empty()) pp = build_packet(base, cp_blocks, cp_eps, st.product_override), r.inputs["packet"] = to_json(*pp);
        Tri t = is_primitive_candidate(base, d, pp);
        r.results["primitive"] = to_string(t);
        r.text.push_back(d.str() + ": " + to_string(t));
      }
    } else if (c_all->parsed()) {
      r.command = "verify-all";
      r.inputs["grid"] = a_grid;
      r.inputs["core"] = a_core;
      std::vector<Suite> suites;
      if (a_core) {
        suites.push_back(suite_hopf_closed_form(HalfInt::of(-4), HalfInt::of(4)));
        suites.push_back(suite_hopf_random(200, 10, 1));
        suites.push_back(suite_structural(500, 100, 7));
      }
      if (alpha >= HalfInt::from_twice(3)) suites.push_back(suite_recursion_endpoints({alpha}, a_grid + 1));
      if (auto kind = family_kind_at(alpha)) {
        const int lo = grid_lo(*kind);
        suites.push_back(suite_family_grid(base, *kind, lo, a_grid, st.jobs));
        suites.push_back(suite_duality_grid(base, *kind, lo, a_grid, st.jobs));
        if (*kind == FamilyKind::RedGt1) suites.push_back(suite_endpoints(base, 0, a_grid));
      }
      suites.push_back(suite_catalog(base, st.jobs));
      if (alpha >= HalfInt::of(1)) suites.push_back(suite_appendix(base));
      Json js = Json::array(), summary = Json::array();
      for (const auto& s : suites) {
        js.push_back(s.to_json());
        summary.push_back(suite_summary(s));
        if (!s.pass() && !(s.checks.empty())) r.pass = false;
        suite_text(r, s);
      }
      r.results["suites"] = js;
      r.results["summary"] = summary;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    r.pass = false;
    r.results["error"] = e.what();
    r.text.push_back(std::string("error: ") + e.what());
  }
  return finish();
}

}  // namespace apk::cli
