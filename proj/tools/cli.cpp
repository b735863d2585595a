#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "kmss/error.hpp"
#include "kmss/gcm.hpp"
#include "kmss/holim.hpp"
#include "kmss/invariants.hpp"
#include "kmss/sseq.hpp"
#include "kmss/system.hpp"
#include "kmss/tits.hpp"
#include "kmss/weyl.hpp"

namespace kmss::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kCommands = {
    "validate", "poset", "weyl",  "invariants",    "e2",        "collapse",
    "poincare", "arith", "serre-compare", "group-cohomology", "tits-check"};

struct Options {
  std::string command;
  std::string matrix_path;
  std::optional<unsigned long> prime;
  std::size_t max_degree = 12;
  std::size_t max_length = 6;
  std::size_t cap = kDefaultGroupCap;
  std::size_t max_rank = kDefaultMaxRank;
  std::optional<std::string> coefficients;
  std::size_t samples = kDefaultPrimeSamples;
  std::string format = "text";
};

std::string trim_comment(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\v\f") == std::string::npos; }

std::vector<std::int64_t> parse_integers(const std::string& text, std::size_t line_no) {
  std::istringstream is(text);
  std::vector<std::int64_t> out;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

Json torsion_json(const std::vector<TorsionDivisor>& torsion) {
  Json arr = Json::array();
  for (const auto& t : torsion) arr.push_back(t.to_string());
  return arr;
}

std::string torsion_text(const std::vector<TorsionDivisor>& torsion) {
  if (torsion.empty()) return "-";
  std::string s;
  for (const auto& t : torsion) s += (s.empty() ? "" : ",") + t.to_string();
  return s;
}

std::string format_group(const DegreeCohomology& h) {
  std::ostringstream os;
  os << "free_rank=" << h.free_rank << " torsion=" << torsion_text(h.torsion);
  return os.str();
}

Coefficients parse_coefficients(const std::string& name, std::optional<unsigned long> prime) {
  auto need_prime = [&] {
    if (!prime) throw Error(ErrorCode::InvalidArgument, "--coefficients " + name + " requires --prime");
    if (!is_prime(*prime)) throw Error(ErrorCode::InvalidArgument, std::to_string(*prime) + " is not a prime");
    return *prime;
  };
  if (name == "rational") return Coefficients::rationals();
  if (name == "integer") return Coefficients::integers();
  if (name == "mod-q") return Coefficients::mod(need_prime());
  if (name == "local-q") return Coefficients::local(need_prime());
  throw Error(ErrorCode::InvalidArgument, "unknown coefficients '" + name + "'");
}

unsigned long require_prime(const Options& o) {
  if (!o.prime) throw Error(ErrorCode::InvalidArgument, "command '" + o.command + "' requires --prime");
  return *o.prime;
}

// Builds the report; text rendering happens separately from the same data.
class Report {
 public:
  Report(const Options& o, const GCM& a) {
    doc_["command"] = o.command;
    Json m = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j));
      m.push_back(row);
    }
    doc_["matrix"] = m;
    doc_["prime"] = o.prime ? Json(*o.prime) : Json(nullptr);
    doc_["truncations"] = {{"max_degree", o.max_degree},
                           {"max_length", o.max_length},
                           {"cap", o.cap},
                           {"samples", o.samples},
                           {"coefficients", o.coefficients ? Json(*o.coefficients) : Json(nullptr)}};
    doc_["entries"] = Json::array();
    doc_["certificate"] = nullptr;
    doc_["verdicts"] = Json::array();
    doc_["series"] = Json::array();
    doc_["details"] = Json::object();
  }

  Json& operator[](const char* key) { return doc_[key]; }
  void line(const std::string& s) { text_ << s << '\n'; }
  const Json& doc() const { return doc_; }
  std::string text() const { return text_.str(); }

 private:
  Json doc_;
  std::ostringstream text_;
};

void header(Report& r, const Options& o, const GCM& a) {
  std::ostringstream os;
  os << "command: " << o.command << "\nmatrix: n=" << a.size() << ' ' << a.entries();
  if (o.prime) os << "\nprime: " << *o.prime;
  r.line(os.str());
}

Json certificate_json(const CollapseCertificate& c) {
  Json bounds = Json::array();
  for (const auto& [rr, e] : c.torsion_bounds)
    bounds.push_back({{"r", rr}, {"differential", 2 * rr - 1}, {"bound", std::to_string(c.q) + "^" + std::to_string(e)}});
  Json adm = Json::array();
  for (auto rr : c.admissible_differentials) adm.push_back(rr);
  return {{"collapsed", c.collapsed},          {"reason", std::string(reason_name(c.reason))},
          {"n", c.n},                          {"q", c.q},
          {"column_bound", c.column_bound},    {"torsion_prime", c.torsion_prime},
          {"admissible_r", adm},               {"torsion_bounds", bounds}};
}

void cmd_validate(Report& r, const GCM& a) {
  const auto sym = is_symmetrizable(a);
  Json witness = Json::array();
  std::string wtext;
  for (const auto& d : sym.witness) {
    witness.push_back(d.get_str());
    wtext += (wtext.empty() ? "" : ",") + d.get_str();
  }
  const bool finite = is_finite_type(a, a.full_set());
  r["verdicts"] = Json::array({{{"check", "gcm"}, {"ok", true}},
                               {{"check", "symmetrizable"}, {"ok", sym.symmetrizable}, {"witness", witness}},
                               {{"check", "finite_type"}, {"ok", finite}}});
  r["details"] = {{"rational_rank", a.rational_rank()}, {"torus_rank", 2 * a.size() - a.rational_rank()}};
  r.line("valid: true");
  r.line("rational_rank: " + std::to_string(a.rational_rank()));
  r.line(std::string("symmetrizable: ") + (sym.symmetrizable ? "true d=(" + wtext + ")" : "false"));
  r.line(std::string("finite_type: ") + (finite ? "true" : "false"));
}

void cmd_poset(Report& r, const KacMoodySystem& s) {
  Json subsets = Json::array();
  std::string stext;
  for (Subset J : s.poset.subsets()) {
    subsets.push_back(format_subset(J));
    stext += (stext.empty() ? "" : " ") + format_subset(J);
  }
  Json chains = Json::array();
  std::string ctext;
  for (std::size_t i = 0; i <= s.poset.column_bound(); ++i) {
    chains.push_back({{"degree", i}, {"chains", s.poset.poset().chain_count(i)}});
    ctext += (ctext.empty() ? "" : " ") + std::to_string(s.poset.poset().chain_count(i));
  }
  Json primes = Json::array();
  std::string ptext;
  for (auto p : s.torsion_primes) {
    primes.push_back(p);
    ptext += (ptext.empty() ? "" : ",") + std::to_string(p);
  }
  r["series"] = chains;
  r["details"] = {{"subsets", subsets}, {"column_bound", s.poset.column_bound()}, {"torsion_primes", primes}};
  r.line("spherical subsets: " + stext);
  r.line("column_bound: " + std::to_string(s.poset.column_bound()));
  r.line("chains per degree: " + ctext);
  r.line("torsion_primes: {" + ptext + "}");
}

void cmd_weyl(Report& r, const KacMoodySystem& s, const Options& o) {
  const std::size_t n = s.size();
  Json orders = Json::array();
  std::string otext;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto m = coxeter_order(s.cartan, i, j);
      const std::string v = m ? std::to_string(*m) : "inf";
      orders.push_back({{"i", i + 1}, {"j", j + 1}, {"m", v}});
      otext += " m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")=" + v;
    }
  Json order = nullptr;
  if (is_finite_type(s.cartan, s.cartan.full_set()))
    order = enumerate_group(s.realization, s.cartan.full_set(), o.cap).size();
  const auto series = coset_length_series(s.realization, 0, o.max_length);
  Json js = Json::array();
  std::string stext;
  for (std::size_t k = 0; k < series.size(); ++k) {
    js.push_back({{"length", k}, {"count", series[k]}});
    stext += (stext.empty() ? "" : " ") + std::to_string(series[k]);
  }
  r["series"] = js;
  r["details"] = {{"torus_rank", s.realization.rank}, {"coxeter_orders", orders}, {"group_order", order}};
  r.line("torus_rank: " + std::to_string(s.realization.rank));
  r.line("coxeter_orders:" + otext);
  r.line("group_order: " + (order.is_null() ? std::string("infinite") : order.dump()));
  r.line("length series (0.." + std::to_string(o.max_length) + "): " + stext);
}

void cmd_invariants(Report& r, const KacMoodySystem& s, const Options& o) {
  const bool finite = is_finite_type(s.cartan, s.cartan.full_set());
  const std::size_t m_max = o.max_degree / 2;
  std::vector<BigInt> molien;
  if (finite) molien = molien_series(s.realization, s.cartan.full_set(), m_max, o.cap);
  Json js = Json::array();
  r.line("degree  weyl_invariants  molien");
  for (std::size_t m = 0; m <= m_max; ++m) {
    const auto inv = weyl_invariants(s.realization, m);
    Json mol = finite ? Json(molien[m].get_str()) : Json(nullptr);
    js.push_back({{"degree", 2 * m}, {"sym_degree", m}, {"weyl_invariants", inv.rank()}, {"molien", mol}});
    r.line(std::to_string(2 * m) + "  " + std::to_string(inv.rank()) + "  " +
           (finite ? molien[m].get_str() : std::string("-")));
  }
  r["series"] = js;
}

Json page_entries(const BigradedPage& page, Report& r) {
  Json entries = Json::array();
  for (const auto& [ij, h] : page.entries) {
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"free_rank", h.free_rank}, {"torsion", torsion_json(h.torsion)}});
    r.line("E2[" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "] " + format_group(h));
  }
  return entries;
}

void cmd_e2(Report& r, const KacMoodySystem& s, const Options& o) {
  const unsigned long q = require_prime(o);
  const auto coeffs = parse_coefficients(o.coefficients.value_or("local-q"), q);
  const auto page = e2_page(s, q, o.max_degree, coeffs);
  r.line("coefficients: " + coeffs.to_string() + " column_bound: " + std::to_string(page.column_bound));
  r["details"] = {{"coefficients", coeffs.to_string()}, {"column_bound", page.column_bound}};
  r["entries"] = page_entries(page, r);
}

void cmd_collapse(Report& r, const KacMoodySystem& s, const Options& o) {
  const auto cert = collapse_certificate(s, require_prime(o), o.samples);
  r["certificate"] = certificate_json(cert);
  std::string adm;
  for (auto rr : cert.admissible_differentials) adm += (adm.empty() ? "" : ",") + ("d" + std::to_string(2 * rr - 1));
  r.line(std::string("certificate: collapsed=") + (cert.collapsed ? "true" : "false") +
         " reason=" + std::string(reason_name(cert.reason)));
  r.line("column_bound: " + std::to_string(cert.column_bound) + " admissible: {" + adm + "}");
  if (cert.torsion_prime) r.line("torsion_prime: " + std::to_string(cert.q) + " divides the order of a finite W_J");
  for (const auto& [rr, e] : cert.torsion_bounds)
    r.line("torsion bound d" + std::to_string(2 * rr - 1) + ": " + std::to_string(cert.q) + "^" + std::to_string(e));
}

void cmd_poincare(Report& r, const KacMoodySystem& s, const Options& o) {
  const unsigned long q = require_prime(o);
  const auto cert = collapse_certificate(s, q, o.samples);
  r["certificate"] = certificate_json(cert);
  const auto series = poincare_series_bk(s, q, o.max_degree);
  Json js = Json::array();
  for (const auto& t : series) {
    js.push_back({{"k", t.k}, {"free_rank", t.group.free_rank}, {"torsion", torsion_json(t.group.torsion)}});
    r.line("H^" + std::to_string(t.k) + " " + format_group(t.group));
  }
  r["series"] = js;
}

void cmd_arith(Report& r, const KacMoodySystem& s, const Options& o) {
  const unsigned long q = require_prime(o);
  const std::size_t c_max = s.poset.column_bound();
  const auto adm = admissible_odd_differentials(q, c_max);
  Json details;
  details["column_bound"] = c_max;
  details["first_possible_differential"] = 2 * q - 1;
  Json jadm = Json::array();
  for (auto rr : adm) jadm.push_back(rr);
  details["admissible_r"] = jadm;
  details["primitive_root"] = q > 2 ? Json(primitive_root(q)) : Json(nullptr);
  std::set<std::size_t> rs(adm.begin(), adm.end());
  rs.insert(q);
  Json bounds = Json::array();
  r.line("first possible differential: d" + std::to_string(2 * q - 1));
  r.line("column_bound: " + std::to_string(c_max) + " admissible r within window: " + jadm.dump());
  if (q > 2) r.line("primitive_root: " + std::to_string(primitive_root(q)));
  for (auto rr : rs) {
    if (rr < 2) continue;
    const auto b = torsion_exponent_bound(s, q, rr, 2 * rr, o.samples);
    Json ps = Json::array(), vs = Json::array();
    for (std::size_t k = 0; k < b.primes.size(); ++k) {
      ps.push_back(b.primes[k]);
      vs.push_back(b.valuations[k]);
    }
    bounds.push_back({{"r", rr}, {"bound", std::to_string(q) + "^" + std::to_string(b.exponent)}, {"primes", ps}, {"valuations", vs}});
    r.line("torsion bound d" + std::to_string(2 * rr - 1) + ": " + std::to_string(q) + "^" + std::to_string(b.exponent) +
           " over " + std::to_string(b.primes.size()) + " primes");
  }
  details["torsion_bounds"] = bounds;
  r["details"] = details;
}

void cmd_serre(Report& r, const KacMoodySystem& s, const Options& o) {
  const unsigned long q = require_prime(o);
  const std::size_t i_max = s.poset.column_bound();
  const auto rep = serre_comparison(s, q, i_max, o.max_degree);
  Json entries = Json::array();
  for (const auto& c : rep.cells) {
    entries.push_back({{"i", c.i}, {"j", c.j},
                       {"free_rank", c.derived_limit.free_rank}, {"torsion", torsion_json(c.derived_limit.torsion)},
                       {"group_free_rank", c.group_cohomology.free_rank},
                       {"group_torsion", torsion_json(c.group_cohomology.torsion)}, {"equal", c.equal()}});
    r.line("(" + std::to_string(c.i) + "," + std::to_string(c.j) + ") lim: " + format_group(c.derived_limit) +
           " | H(W): " + format_group(c.group_cohomology) + (c.equal() ? "" : "  MISMATCH"));
  }
  r["entries"] = entries;
  r["verdicts"] = Json::array({{{"check", "serre_comparison"}, {"ok", rep.consistent}}});
  r.line(std::string("consistent: ") + (rep.consistent ? "true" : "false"));
}

void cmd_group_cohomology(Report& r, const KacMoodySystem& s, const Options& o) {
  const unsigned long q = require_prime(o);
  if (o.max_degree % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "group-cohomology uses Sym^{j/2}; --max-degree must be even");
  const SymPower sym(s.realization.rank, o.max_degree / 2);
  std::vector<ZMatrix> module;
  for (std::size_t i = 0; i < s.size(); ++i) module.push_back(sym_action(sym, simple_reflection(s.realization, i).matrix));
  const auto h = group_cohomology_weyl(s, module, q, s.poset.column_bound());
  r.line("module: Sym^" + std::to_string(o.max_degree / 2) + " of the weight lattice (rank " +
         std::to_string(sym.dimension()) + ")");
  Json entries = Json::array();
  for (std::size_t i = 0; i < h.degrees.size(); ++i) {
    entries.push_back({{"i", i}, {"j", o.max_degree}, {"free_rank", h.degrees[i].free_rank}, {"torsion", torsion_json(h.degrees[i].torsion)}});
    r.line("H^" + std::to_string(i) + "(W) " + format_group(h.degrees[i]));
  }
  r["entries"] = entries;
}

void cmd_tits(Report& r, const KacMoodySystem& s, const Options& o) {
  const auto coeffs = parse_coefficients(o.coefficients.value_or("integer"), o.prime);
  const auto verdicts = tits_acyclicity(s, o.max_length, coeffs);
  Json jv = Json::array();
  bool all = true;
  r.line("coefficients: " + coeffs.to_string());
  r["details"] = {{"coefficients", coeffs.to_string()}};
  for (const auto& v : verdicts) {
    Json ranks = Json::array(), viol = Json::array();
    std::string rtext;
    for (auto x : v.cochain_ranks) {
      ranks.push_back(x);
      rtext += (rtext.empty() ? "" : ",") + std::to_string(x);
    }
    for (const auto& x : v.violations)
      viol.push_back({{"k", x.k}, {"i", x.i}, {"free_rank", x.found.free_rank}, {"torsion", torsion_json(x.found.torsion)}});
    all = all && v.acyclic();
    jv.push_back({{"k", v.k}, {"ok", v.acyclic()}, {"cochain_ranks", ranks},
                  {"euler_characteristic", v.euler_characteristic}, {"violations", viol}});
    r.line("k=" + std::to_string(v.k) + " ranks=(" + rtext + ") euler=" + std::to_string(v.euler_characteristic) +
           (v.acyclic() ? " ok" : " VIOLATION"));
    for (const auto& x : v.violations) r.line("  degree " + std::to_string(x.i) + ": " + format_group(x.found));
  }
  r["verdicts"] = jv;
  r.line(std::string("acyclic: ") + (all ? "true" : "false"));
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in) {
  ParsedMatrix out;
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim_comment(raw);
    if (blank(line)) continue;
    auto values = parse_integers(line, line_no);
    if (!n) {
      if (values.size() != 1 || values[0] <= 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected a positive size n");
      n = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (out.rows.size() == *n)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unexpected content after " +
                                             std::to_string(*n) + " rows");
    if (values.size() != *n)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(*n) +
                                             " integers, found " + std::to_string(values.size()));
    out.rows.push_back(std::move(values));
    out.row_lines.push_back(line_no);
  }
  if (!n) throw Error(ErrorCode::ParseError, "no matrix size found");
  if (out.rows.size() != *n)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(*n) + " rows, found " + std::to_string(out.rows.size()));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Bousfield-Kan spectral sequence data for Kac-Moody classifying spaces", "kmss"};
  app.add_option("command", o.command, "Computation to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("matrix", o.matrix_path, "Generalized Cartan matrix file")->required();
  app.add_option("--prime", o.prime, "Prime q");
  app.add_option("--max-degree", o.max_degree, "Cohomological degree bound J")->capture_default_str();
  app.add_option("--max-length", o.max_length, "Weyl length bound L")->capture_default_str();
  app.add_option("--cap", o.cap, "Finite group enumeration cap")->capture_default_str();
  app.add_option("--max-rank", o.max_rank, "Largest accepted matrix size")->capture_default_str();
  app.add_option("--coefficients", o.coefficients, "rational | mod-q | local-q | integer")
      ->check(CLI::IsMember({"rational", "mod-q", "local-q", "integer"}));
  app.add_option("--samples", o.samples, "Primes sampled for torsion bounds")->capture_default_str();
  app.add_option("--format", o.format, "text | structured")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return 1;
  }

  std::optional<ParsedMatrix> parsed;
  try {
    std::ifstream file(o.matrix_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + o.matrix_path + "'");
    parsed = parse_matrix(file);
    std::optional<GCM> a;
    try {
      a = GCM::validate(parsed->rows);
    } catch (const Error& e) {
      // Point at the source line of the offending row.
      const auto open = e.detail().find('(');
      if (open != std::string::npos) {
        const std::size_t row = std::stoul(e.detail().substr(open + 1));
        throw Error(e.code(), e.detail() + " (line " + std::to_string(parsed->row_lines.at(row - 1)) + ")");
      }
      throw;
    }
    if (a->size() > o.max_rank)
      throw Error(ErrorCode::CapExceeded, "matrix size " + std::to_string(a->size()) + " exceeds --max-rank " +
                                              std::to_string(o.max_rank));

    Report report(o, *a);
    header(report, o, *a);
    if (o.command == "validate") {
      cmd_validate(report, *a);
    } else {
      const auto system = KacMoodySystem::build(*a, o.cap);
      if (o.command == "poset") cmd_poset(report, system);
      else if (o.command == "weyl") cmd_weyl(report, system, o);
      else if (o.command == "invariants") cmd_invariants(report, system, o);
      else if (o.command == "e2") cmd_e2(report, system, o);
      else if (o.command == "collapse") cmd_collapse(report, system, o);
      else if (o.command == "poincare") cmd_poincare(report, system, o);
      else if (o.command == "arith") cmd_arith(report, system, o);
      else if (o.command == "serre-compare") cmd_serre(report, system, o);
      else if (o.command == "group-cohomology") cmd_group_cohomology(report, system, o);
      else if (o.command == "tits-check") cmd_tits(report, system, o);
    }
    if (o.format == "structured") out << report.doc().dump(2) << '\n';
    else out << report.text();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.detail() << '\n';
    return is_precondition_failure(e.code()) ? 2 : 1;
  } catch (const std::overflow_error& e) {
    err << "error: CapExceeded: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace kmss::cli
