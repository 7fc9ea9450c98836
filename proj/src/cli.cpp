#include "chainreg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainreg/asymptotics.hpp"
#include "chainreg/betti.hpp"
#include "chainreg/error.hpp"

namespace chainreg {

namespace {

constexpr long long kMaxNumber = 1'000'000;

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t line, std::size_t offset)
      : text_(text), line_(line), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  int number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxNumber) fail(std::string(what) + " is too large", start);
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return static_cast<int>(v);
  }
  std::size_t column() const { return offset_ + pos_ + 1; }
  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, line_, offset_ + at + 1);
  }
  std::size_t pos() {
    skip_space();
    return pos_;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // of text[0], 0-based
};

IncChain apply_transform(const IncChain& chain, const Located& t) {
  std::istringstream words(t.text);
  std::string name;
  words >> name;
  if (name == "saturation") return saturation(chain);
  int arg = 0;
  if (!(words >> arg)) {
    throw ParseError("transform '" + name + "' needs an integer argument", t.line, t.column + 1);
  }
  if (name == "msat") return m_saturation(chain, arg);
  if (name == "colon") return colon_filtration(chain, arg);
  throw ParseError("unknown transform '" + name + "' (saturation, msat M, colon E)", t.line,
                   t.column + 1);
}

std::string dense_string(const Monomial& a) {
  std::string s = "(";
  const std::vector<int> d = a.dense();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

std::string fit_footer(const std::optional<LinearFit>& fit) {
  if (!fit) return "# fit undetermined";
  return "# fit slope=" + std::to_string(fit->slope) + " intercept=" +
         std::to_string(fit->intercept) + " onset=" + std::to_string(fit->onset);
}

struct Common {
  std::uint32_t characteristic = 32003;
  unsigned jobs = 1;
  long long budget_ms = 0;
  std::size_t lattice_cap = ResourceLimits{}.lattice_cap;

  FieldSpec field() const { return FieldSpec(characteristic); }
  ResourceLimits limits() const {
    ResourceLimits l;
    l.jobs = std::max(1u, jobs);
    l.term_budget = std::chrono::milliseconds(budget_ms);
    l.lattice_cap = lattice_cap;
    return l;
  }
};

std::vector<int> default_params(std::vector<int> given, std::vector<int> fallback) {
  std::vector<int>& v = given.empty() ? fallback : given;
  std::set<int> unique(v.begin(), v.end());
  return {unique.begin(), unique.end()};
}

class VerifyTable {
 public:
  explicit VerifyTable(std::ostream& out) : out_(out) { out_ << "check,param,status,detail\n"; }

  void row(const std::string& check, const std::string& param, const std::string& status,
           const std::string& detail) {
    if (status == "FAIL") failed_ = true;
    out_ << check << ',' << param << ',' << status << ",\"" << detail << "\"\n";
  }
  void verdict(const std::string& check, const std::string& param, bool ok,
               const std::string& detail) {
    row(check, param, ok ? "PASS" : "FAIL", detail);
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int cmd_invariants(const IncChain& chain, std::optional<int> horizon, const Common& c,
                   std::ostream& out) {
  const ChainInvariants inv = horizon ? chain_invariants(chain, *horizon) : chain_invariants(chain);
  nlohmann::json j;
  j["char"] = c.characteristic;
  j["index"] = chain.index();
  j["chain"] = chain.description();
  j["lambda"] = inv.lambda;
  j["w"] = inv.w;
  j["q"] = inv.q;
  j["quasi_saturated"] = inv.quasi_saturated;
  j["lambda_maximal"] = inv.lambda_maximal;
  j["saturated_window"] = inv.saturated_window;
  j["horizon"] = inv.horizon;
  j["lambda_certificate"] = to_string(inv.certificate);
  j["lambda_series"] = inv.lambda_series;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_betti(const IncChain& chain, int n, const Common& c, std::ostream& out) {
  const MonomialIdeal term = chain.term(n);
  if (!term.is_proper_nonzero()) {
    throw InvalidArgument("term " + std::to_string(n) + " is " + term.to_string() +
                          "; Betti tables need a nonzero proper ideal");
  }
  const BettiTable table = betti_table(term, c.field(), c.limits());
  out << "# char=" << c.characteristic << " n=" << n << " ideal=" << term.to_string()
      << " pd=" << table.pd() << " reg=" << table.reg() << "\n";
  out << "i,multidegree,value\n";
  for (const auto& [key, value] : table.entries()) {
    out << key.first << ",\"" << dense_string(key.second) << "\"," << value << "\n";
  }
  return 0;
}

int cmd_series(const IncChain& chain, Metric metric, int from, int to, const Common& c,
               std::ostream& out) {
  const SeriesReport report = series(chain, metric, from, to, c.field(), c.limits());
  out << "# char=" << c.characteristic << " metric=" << to_string(metric) << "\n";
  out << "n,value\n";
  for (const SeriesPoint& pt : report.values) out << pt.n << ',' << pt.value << "\n";
  out << fit_footer(report.fit) << "\n";
  if (!report.complete()) {
    out << "# guard n=" << *report.guard_n << ": " << report.guard_message << "\n";
    return 3;
  }
  return 0;
}

int cmd_verify(const IncChain& chain, const std::string& lemma, int horizon,
               const std::vector<int>& ms, const std::vector<int>& es, const Common& c,
               std::ostream& out) {
  const FieldSpec field = c.field();
  const ResourceLimits limits = c.limits();
  const int r = chain.index();
  const int w = weights(chain.seed()).w;
  auto wants = [&](const char* name) { return lemma == "all" || lemma == name; };

  out << "# char=" << c.characteristic << " horizon=" << horizon << "\n";
  VerifyTable table(out);

  if (wants("pd")) {
    const PdTheoremReport pdr = check_pd_theorem(chain, horizon, field, limits);
    if (!pdr.applicable) {
      table.row("pd", "-", "NA", pdr.detail);
    } else {
      std::string detail = pdr.d ? "d=" + std::to_string(*pdr.d) + " depth=" +
                                       std::to_string(*pdr.limiting_depth)
                                 : "no slope-1 tail yet";
      if (!pdr.detail.empty()) detail = pdr.detail;
      table.verdict("pd", "-", pdr.holds, detail);
    }
  }
  if (wants("reg")) {
    const RegSlopeReport rr = check_reg_slope(chain, horizon, field, limits);
    const std::string detail = "slope in [" + std::to_string(rr.slope_lower) + "," +
                               std::to_string(rr.slope_upper) + "] w-1=" +
                               std::to_string(rr.w - 1) +
                               " converging=" + (rr.consistent ? "yes" : "no");
    if (rr.hard_clause_applicable) {
      table.verdict("reg", "-", rr.hard_clause_holds, detail);
    } else {
      table.row("reg", "-", "EVIDENCE", detail);
    }
  }
  if (wants("propagation")) {
    const Applicability app = applicability(chain, default_lambda_horizon(chain));
    if (!app.applicable()) {
      table.row("propagation", "-", "NA", "chain is neither saturated nor quasi-saturated");
    } else {
      for (int n = app.from; n < r + horizon; ++n) {
        const PropagationReport pr = check_betti_propagation(chain, n, field, limits);
        table.verdict("propagation", "n=" + std::to_string(n), pr.holds(),
                      pr.holds() ? std::to_string(pr.checked) + " entries" : pr.first_violation);
      }
    }
  }
  if (wants("msat")) {
    for (int m : default_params(ms, {1, 2, w})) {
      const MsatReport mr = check_msat_identities(chain, m, r + horizon - 2, field, limits, 2);
      table.verdict("msat", "m=" + std::to_string(m), mr.holds(),
                    mr.holds() ? "lambda=" + std::to_string(mr.lambda) +
                                     " w=" + std::to_string(mr.w)
                               : mr.first_violation);
    }
  }
  if (wants("colon")) {
    for (int e : default_params(es, {0, 1, std::max(0, w - 1)})) {
      const ColonPropsReport cr = check_colon_filtration_props(chain, e, horizon, field, limits);
      table.verdict("colon", "e=" + std::to_string(e), cr.holds(),
                    cr.holds() ? "q=" + std::to_string(cr.q) + " q_e=" + std::to_string(cr.q_e)
                               : cr.first_violation);
    }
  }
  return table.failed() ? 1 : 0;
}

struct ExploreOptions {
  std::uint64_t seed = 1;
  int count = 10;
  int horizon = 8;
  bool saturate = false;
  RandomChainParams params;
};

int cmd_explore(const ExploreOptions& o, const Common& c, std::ostream& out) {
  out << "# char=" << c.characteristic << " r=" << o.params.r << " gens=" << o.params.gens
      << " max_exponent=" << o.params.max_exponent << " max_degree=" << o.params.max_degree
      << " symmetry=" << to_string(o.params.symmetry) << " saturate=" << (o.saturate ? 1 : 0)
      << " horizon=" << o.horizon << "\n";
  out << "seed,r,gens,w,lambda,q,pd_slope,pd_onset,reg_slope,reg_onset,status\n";
  bool guarded = false;
  auto cell = [](const std::optional<LinearFit>& f, bool slope) {
    if (!f) return std::string();
    return std::to_string(slope ? f->slope : f->onset);
  };
  for (int k = 0; k < o.count; ++k) {
    RandomChainParams p = o.params;
    p.seed = o.seed + static_cast<std::uint64_t>(k);
    IncChain chain = random_chain(p);
    if (o.saturate) chain = saturation(chain);
    const int r = chain.index();
    const ChainInvariants inv = chain_invariants(chain);
    const SeriesReport pdr = series(chain, Metric::Pd, r, r + o.horizon, c.field(), c.limits());
    const SeriesReport rgr = series(chain, Metric::Reg, r, r + o.horizon, c.field(), c.limits());
    std::string status = pdr.linear() && rgr.linear() ? "linear" : "undetermined";
    if (!pdr.complete() || !rgr.complete()) {
      status = "guard";
      guarded = true;
    }
    out << p.seed << ',' << r << ',' << chain.seed().size() << ',' << inv.w << ',' << inv.lambda
        << ',' << inv.q << ',' << cell(pdr.fit, true) << ',' << cell(pdr.fit, false) << ','
        << cell(rgr.fit, true) << ',' << cell(rgr.fit, false) << ',' << status << "\n";
  }
  return guarded ? 3 : 0;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::optional<int> ambient, std::size_t line,
                        std::size_t column_offset) {
  Scanner s(text, line, column_offset);
  if (s.done()) s.fail("empty monomial");
  const std::size_t start = s.pos();
  if (s.accept('1')) {
    if (!s.done()) s.fail("unexpected text after the unit monomial");
    return Monomial(ambient.value_or(0));
  }
  std::vector<Factor> factors;
  int widest = 0;
  std::size_t widest_at = start;
  do {
    s.expect('x', "'x'");
    const std::size_t at = s.pos();
    const int var = s.number("variable index");
    if (var < 1) s.fail("variable indices start at 1", at);
    int exp = 1;
    if (s.accept('^')) {
      const std::size_t eat = s.pos();
      exp = s.number("exponent");
      if (exp < 1) s.fail("exponent must be positive", eat);
    }
    if (var > widest) {
      widest = var;
      widest_at = at;
    }
    factors.push_back({var, exp});
  } while (s.accept('*'));
  if (!s.done()) s.fail("expected '*' or end of monomial");
  const int n = ambient.value_or(widest);
  if (widest > n) s.fail("x" + std::to_string(widest) + " is outside R_" + std::to_string(n),
                         widest_at);
  return Monomial(n, std::move(factors));
}

MonomialIdeal parse_ideal(std::string_view text, int ambient, std::size_t line,
                          std::size_t column_offset) {
  std::size_t lead = 0;
  if (trim(text, &lead) == "0") return MonomialIdeal::zero(ambient);
  std::vector<Monomial> gens;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    const std::string_view piece =
        text.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin);
    gens.push_back(parse_monomial(piece, ambient, line, column_offset + begin));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return MonomialIdeal(ambient, std::move(gens));
}

IncChain parse_chain(std::istream& in) {
  std::optional<int> index;
  std::size_t index_line = 0;
  Symmetry symmetry = Symmetry::Inc;
  std::vector<Located> gens;
  std::map<int, Located> head;
  std::vector<Located> transforms;

  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    if (trim(text).empty()) continue;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      std::size_t lead = 0;
      trim(text, &lead);
      throw ParseError("expected 'key: value'", line, lead + 1);
    }
    std::size_t key_lead = 0;
    const std::string key(trim(text.substr(0, colon), &key_lead));
    std::size_t value_lead = 0;
    const std::string_view value = trim(text.substr(colon + 1), &value_lead);
    const std::size_t value_column = colon + 1 + value_lead;
    const Located located{std::string(value), line, value_column};

    if (key == "index") {
      Scanner s(value, line, value_column);
      index = s.number("stability index");
      if (!s.done()) s.fail("expected a single integer");
      if (*index < 1) throw ParseError("stability index must be at least 1", line, value_column + 1);
      index_line = line;
    } else if (key == "symmetry") {
      if (value == "inc") {
        symmetry = Symmetry::Inc;
      } else if (value == "sym") {
        symmetry = Symmetry::Sym;
      } else {
        throw ParseError("symmetry must be inc or sym", line, value_column + 1);
      }
    } else if (key == "gens") {
      gens.push_back(located);
    } else if (key.rfind("head", 0) == 0) {
      Scanner s(std::string_view(key).substr(4), line, key_lead + 4);
      const int m = s.number("head index");
      if (!s.done()) s.fail("expected 'head N'");
      if (!head.emplace(m, located).second) {
        throw ParseError("head " + std::to_string(m) + " given twice", line, key_lead + 1);
      }
    } else if (key == "transform") {
      transforms.push_back(located);
    } else {
      throw ParseError("unknown key '" + key + "'", line, key_lead + 1);
    }
  }
  if (!index) throw ParseError("missing 'index:' line", 1, 1);
  if (gens.empty()) throw ParseError("missing 'gens:' line", index_line, 1);

  const int r = *index;
  std::vector<Monomial> seed_gens;
  for (const Located& g : gens) {
    const MonomialIdeal part = parse_ideal(g.text, r, g.line, g.column);
    seed_gens.insert(seed_gens.end(), part.gens().begin(), part.gens().end());
  }
  std::vector<MonomialIdeal> head_terms;
  if (!head.empty()) {
    for (int m = 1; m < r; ++m) {
      auto it = head.find(m);
      if (it == head.end()) {
        throw ParseError("head terms must cover 1.." + std::to_string(r - 1) + "; head " +
                             std::to_string(m) + " is missing",
                         head.begin()->second.line, 1);
      }
      head_terms.push_back(parse_ideal(it->second.text, m, it->second.line, it->second.column));
    }
    if (head.rbegin()->first >= r || head.begin()->first < 1) {
      const Located& bad = head.rbegin()->first >= r ? head.rbegin()->second : head.begin()->second;
      throw ParseError("head index outside 1.." + std::to_string(r - 1), bad.line, 1);
    }
  }

  IncChain chain = [&] {
    try {
      return IncChain(r, MonomialIdeal(r, std::move(seed_gens)), symmetry, std::move(head_terms));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), gens.front().line, gens.front().column + 1);
    }
  }();
  for (const Located& t : transforms) {
    try {
      chain = apply_transform(chain, t);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), t.line, t.column + 1);
    }
  }
  return chain;
}

IncChain load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open chain file '" + path + "'");
  return parse_chain(in);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological invariants of Inc- and Sym-invariant chains of monomial ideals"};
  app.name("chainreg");
  app.require_subcommand(1);

  Common common;
  app.add_option("--char", common.characteristic, "Characteristic of the coefficient field")
      ->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads")->capture_default_str();
  app.add_option("--budget", common.budget_ms,
                 "Time budget per Betti table in milliseconds (0 = none)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--lattice-cap", common.lattice_cap,
                 "Maximum lcm-lattice size per Betti table")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string path;
  auto* inv_cmd = app.add_subcommand("invariants", "lambda, w, q and chain flags as JSON");
  std::optional<int> inv_horizon;
  inv_cmd->add_option("chainfile", path)->required();
  inv_cmd->add_option("--horizon", inv_horizon, "Window length for lambda");

  auto* betti_cmd = app.add_subcommand("betti", "Multigraded Betti table of one term");
  int betti_n = 0;
  betti_cmd->add_option("chainfile", path)->required();
  betti_cmd->add_option("--n", betti_n, "Term index")->required();

  auto* series_cmd = app.add_subcommand("series", "A metric along the chain as CSV");
  std::string metric_name;
  int from = 0;
  int to = 0;
  series_cmd->add_option("chainfile", path)->required();
  series_cmd->add_option("--metric", metric_name, "pd, reg, gens, betti_total or ass_primes")
      ->required();
  series_cmd->add_option("--from", from)->required();
  series_cmd->add_option("--to", to)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the lemma checks over a window");
  std::string lemma = "all";
  int horizon = 8;
  std::vector<int> ms;
  std::vector<int> es;
  verify_cmd->add_option("chainfile", path)->required();
  verify_cmd->add_option("--lemma", lemma)
      ->check(CLI::IsMember({"all", "pd", "reg", "propagation", "msat", "colon"}))
      ->capture_default_str();
  verify_cmd->add_option("--horizon", horizon)->capture_default_str();
  verify_cmd->add_option("--m", ms, "m values for the m-saturation check (default 1, 2, w)");
  verify_cmd->add_option("--e", es, "e values for the colon filtration check (default 0, 1, w-1)");

  auto* explore_cmd = app.add_subcommand("explore", "Random-chain batch as CSV");
  ExploreOptions eo;
  std::string symmetry = "inc";
  explore_cmd->add_option("--seed", eo.seed)->capture_default_str();
  explore_cmd->add_option("--count", eo.count)->capture_default_str();
  explore_cmd->add_option("--r", eo.params.r)->capture_default_str();
  explore_cmd->add_option("--gens", eo.params.gens)->capture_default_str();
  explore_cmd->add_option("--max-exponent", eo.params.max_exponent)->capture_default_str();
  explore_cmd->add_option("--max-degree", eo.params.max_degree)->capture_default_str();
  explore_cmd->add_option("--symmetry", symmetry)
      ->check(CLI::IsMember({"inc", "sym"}))
      ->capture_default_str();
  explore_cmd->add_flag("--saturate", eo.saturate, "Use the saturated chain of each sample");
  explore_cmd->add_option("--horizon", eo.horizon)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Common& c = common;
    (void)c.field();  // rejects a non-prime --char before any work
    if (*inv_cmd) return cmd_invariants(load_chain(path), inv_horizon, c, out);
    if (*betti_cmd) return cmd_betti(load_chain(path), betti_n, c, out);
    if (*series_cmd) {
      return cmd_series(load_chain(path), parse_metric(metric_name), from, to, c, out);
    }
    if (*verify_cmd) {
      if (horizon < 0) throw InvalidArgument("--horizon must be nonnegative");
      return cmd_verify(load_chain(path), lemma, horizon, ms, es, c, out);
    }
    if (*explore_cmd) {
      if (eo.count < 0 || eo.horizon < 0) {
        throw InvalidArgument("--count and --horizon must be nonnegative");
      }
      eo.params.symmetry = symmetry == "sym" ? Symmetry::Sym : Symmetry::Inc;
      return cmd_explore(eo, c, out);
    }
  } catch (const ParseError& e) {
    err << "chainreg: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "chainreg: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitExceeded& e) {
    err << "chainreg: resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "chainreg: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace chainreg
