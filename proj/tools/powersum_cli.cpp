// powersum: command-line front end for the power-sum Diophantine toolkit.
//
// Exit codes: 0 ran to completion, 1 usage error, 2 internal verification failure.

#include <powersum/json.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ps = powersum;
using nlohmann::json;

namespace {

struct GlobalOptions {
  bool json = false;
  bool csv = false;
  unsigned partitions = 1;
};

ps::OutputFormat format_of(const GlobalOptions& g) {
  if (g.json) return ps::OutputFormat::json;
  if (g.csv) return ps::OutputFormat::csv;
  return ps::OutputFormat::table;
}

unsigned default_partitions() {
  if (const char* env = std::getenv("POWERSUM_PARTITIONS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid POWERSUM_PARTITIONS='" << env << "'\n";
  }
  return 1;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ps::BigInt parse_big_arg(const std::string& s, const char* what) {
  try {
    return ps::parse_big(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a decimal integer, got '" + s + "'");
  }
}

void run_bernoulli(unsigned q, const GlobalOptions& g) {
  const ps::Rational b = ps::bernoulli_number(q);
  const ps::Polynomial poly = ps::bernoulli_polynomial(q);
  if (g.json) {
    std::cout << json{{"q", q}, {"B_q", ps::to_string(b)}, {"coefficients", ps::coefficients_json(poly)}}.dump() << '\n';
    return;
  }
  if (g.csv) {
    std::cout << "degree,coefficient\n";
    for (std::size_t i = 0; i < poly.coefficients().size(); ++i)
      std::cout << i << ',' << ps::to_string(poly.coefficients()[i]) << '\n';
    return;
  }
  std::cout << "B_" << q << " = " << ps::to_string(b) << '\n';
  std::cout << "B_" << q << "(x) = " << poly << '\n';
  for (std::size_t i = poly.coefficients().size(); i-- > 0;)
    std::cout << "  x^" << i << ": " << ps::to_string(poly.coefficients()[i]) << '\n';
}

void run_powersum(unsigned k, unsigned l, const std::optional<std::string>& eval, const GlobalOptions& g) {
  const ps::PowerSumInstance inst(k, l);
  const ps::Polynomial G = ps::construct_G(inst);
  if (eval) {
    const ps::Rational x = ps::parse_rational(*eval);
    const ps::Rational v = G(x);
    if (g.json)
      std::cout << json{{"k", k}, {"l", l}, {"x", ps::to_string(x)}, {"value", ps::to_string(v)}}.dump() << '\n';
    else if (g.csv)
      std::cout << "k,l,x,value\n" << k << ',' << l << ',' << ps::to_string(x) << ',' << ps::to_string(v) << '\n';
    else
      std::cout << "G(" << ps::to_string(x) << ") = " << ps::to_string(v) << '\n';
    return;
  }
  if (g.json) {
    std::cout << json{{"k", k}, {"l", l}, {"coefficients", ps::coefficients_json(G)}}.dump() << '\n';
  } else if (g.csv) {
    std::cout << "degree,coefficient\n";
    for (std::size_t i = 0; i < G.coefficients().size(); ++i)
      std::cout << i << ',' << ps::to_string(G.coefficients()[i]) << '\n';
  } else {
    std::cout << "G(x) = " << G << '\n';
  }
}

std::vector<unsigned> parse_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError("bad list element '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

void print_lemma6(const ps::Lemma6Report& r, unsigned mod, const GlobalOptions& g) {
  const ps::ModPoly snap = mod == 4 ? r.mod4_snapshot : r.mod4_snapshot.reduce(2);
  if (g.json) {
    json j = ps::to_json(r);
    if (mod == 2) j["mod2_snapshot"] = ps::to_json(snap);
    std::cout << j.dump() << '\n';
    return;
  }
  std::string counts;
  for (const auto& [p, c] : r.coprime_counts) counts += (counts.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(c);
  if (g.csv) {
    std::cout << r.q << ',' << r.l << ',' << ps::to_string(r.d) << ',' << r.odd_multiplicity_zero_count << ','
              << (r.exempt_i ? "exempt" : (r.conclusion_i ? "true" : "false")) << ',' << (r.conclusion_ii ? "true" : "false")
              << ",\"" << snap.to_string() << "\"\n";
    return;
  }
  std::cout << "q=" << r.q << " l=" << r.l << " d=" << ps::to_string(r.d) << '\n'
            << "  dP mod " << mod << ": " << snap.to_string() << '\n'
            << "  zero multiplicities:";
  for (unsigned m : r.profile.multiplicities()) std::cout << ' ' << m;
  std::cout << "\n  odd-multiplicity zeros: " << r.odd_multiplicity_zero_count
            << "\n  (i)  " << (r.exempt_i ? "exempt (q in {2,4})" : (r.conclusion_i ? "holds" : "FAILS"))
            << "\n  (ii) " << (r.conclusion_ii ? "holds" : "FAILS") << (counts.empty() ? "" : " [" + counts + "]") << '\n';
}

void run_search(ps::SearchConfig cfg) {
  const auto records = ps::search_solutions(cfg);
  switch (cfg.output_format) {
    case ps::OutputFormat::json:
      for (const auto& r : records) std::cout << ps::to_json(r).dump() << '\n';
      break;
    case ps::OutputFormat::csv:
      std::cout << "k,l,x,y,n,source\n";
      for (const auto& r : records)
        std::cout << r.k << ',' << r.l << ',' << r.x << ',' << ps::to_string(r.y) << ',' << r.n << ',' << ps::to_string(r.source) << '\n';
      break;
    case ps::OutputFormat::table: {
      std::cout << std::setw(4) << "k" << std::setw(4) << "l" << std::setw(14) << "x" << std::setw(24) << "y" << std::setw(4) << "n" << '\n';
      for (const auto& r : records)
        std::cout << std::setw(4) << r.k << std::setw(4) << r.l << std::setw(14) << r.x << std::setw(24) << ps::to_string(r.y)
                  << std::setw(4) << r.n << '\n';
      std::cout << records.size() << " solution(s) with x <= " << cfg.x_max << ", 2 <= n <= " << cfg.n_max << '\n';
    }
  }
}

void run_pell(const std::string& d_str, const std::optional<std::string>& n_str, const std::optional<std::string>& bound_str,
              const GlobalOptions& g) {
  const ps::BigInt D = parse_big_arg(d_str, "--d");
  const ps::BigInt N = n_str ? parse_big_arg(*n_str, "--n") : ps::BigInt(1);
  if (N == 1 && !bound_str) {
    const auto cf = ps::continued_fraction_sqrt(D);
    const auto sol = ps::fundamental_solution(D);
    if (g.json) {
      json period = json::array();
      for (const auto& a : cf.period) period.push_back(ps::to_string(a));
      std::cout << json{{"D", ps::to_string(D)}, {"a0", ps::to_string(cf.a0)}, {"period", period},
                        {"u", ps::to_string(sol.u)}, {"v", ps::to_string(sol.v)}}.dump()
                << '\n';
    } else {
      std::cout << "sqrt(" << D << ") = [" << cf.a0 << ';';
      for (std::size_t i = 0; i < cf.period.size(); ++i) std::cout << (i ? "," : "") << cf.period[i];
      std::cout << "]\nfundamental solution: u=" << sol.u << " v=" << sol.v << '\n';
    }
    return;
  }
  const ps::PellProblem problem(D, N);
  const ps::BigInt bound = bound_str ? parse_big_arg(*bound_str, "--bound") : ps::BigInt(1000);
  const auto sols = ps::solve_generalized(problem, bound);
  if (g.json) {
    for (const auto& s : sols)
      std::cout << json{{"D", ps::to_string(D)}, {"N", ps::to_string(N)}, {"u", ps::to_string(s.u)}, {"v", ps::to_string(s.v)}}.dump()
                << '\n';
  } else if (g.csv) {
    std::cout << "u,v\n";
    for (const auto& s : sols) std::cout << s.u << ',' << s.v << '\n';
  } else {
    for (const auto& s : sols) std::cout << "u=" << s.u << " v=" << s.v << '\n';
    std::cout << sols.size() << " solution(s) of u^2 - " << D << " v^2 = " << N << " with |v| <= " << bound << '\n';
  }
}

void run_family(unsigned k, unsigned l, std::size_t count, const std::optional<std::string>& bound_str, unsigned depth,
                const GlobalOptions& g) {
  ps::FamilyOptions opt;
  opt.max_depth = depth;
  ps::FamilyResult res;
  if (k == 1) {
    res = ps::family_k1(l, count, opt);
  } else if (k == 3) {
    std::optional<ps::BigInt> bound;
    if (bound_str) bound = parse_big_arg(*bound_str, "--bound");
    res = ps::family_k3(l, count, bound, opt);
  } else {
    throw UsageError("--k must be 1 or 3");
  }
  if (g.json) {
    for (const auto& r : res.records) std::cout << ps::to_json(r).dump() << '\n';
  } else if (g.csv) {
    std::cout << "k,l,x,y,u,v,verified\n";
    for (const auto& r : res.records)
      std::cout << r.k << ',' << r.l << ',' << r.x << ',' << r.y << ',' << r.witness.u << ',' << r.witness.v << ",true\n";
  } else {
    for (const auto& r : res.records)
      std::cout << "x=" << r.x << " y=" << r.y << "  (u=" << r.witness.u << ", v=" << r.witness.v << ")"
                << (r.oracle_checked ? "" : "  [polynomial check only]") << '\n';
    std::cout << res.records.size() << " record(s)";
    if (res.depth_limited) std::cout << "; fewer than requested within " << depth << " unit steps";
    if (!res.complete_within_cap) std::cout << "; base scan below class-representative bound " << res.base_bound;
    std::cout << '\n';
  }
}

void run_report(unsigned k, unsigned l, const std::vector<unsigned>& ns, const GlobalOptions& g) {
  const auto rep = ps::pipeline_report(k, l, ns);
  if (g.json) {
    std::cout << ps::to_json(rep).dump() << '\n';
    return;
  }
  if (g.csv) {
    std::cout << "k,l,n,exceptional,bound_applies,family_available,verdict\n";
    for (const auto& e : rep.entries)
      std::cout << k << ',' << l << ',' << e.n << ',' << ps::to_string(e.assessment.exceptional) << ','
                << (e.assessment.bound_applies() ? "true" : "false") << ',' << (e.family_available ? "true" : "false") << ",\""
                << e.verdict << "\"\n";
    return;
  }
  std::cout << "k=" << k << " l=" << l << '\n'
            << "  G has at least two distinct zeros: " << (rep.two_distinct_zeros ? "yes" : "no") << '\n'
            << "  zero multiplicities of P:";
  for (unsigned m : rep.profile.multiplicities()) std::cout << ' ' << m;
  std::cout << '\n';
  for (const auto& e : rep.entries) {
    std::cout << "  n=" << e.n << "  t = {";
    for (std::size_t i = 0; i < e.assessment.t_values.size(); ++i) std::cout << (i ? "," : "") << e.assessment.t_values[i];
    std::cout << "}  " << e.verdict << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact power-sum polynomials, their zero structure, and solutions of (x+1)^k + ... + (lx)^k = y^n"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  g.partitions = default_partitions();
  app.add_flag("--json", g.json, "JSON output (one object per line)");
  app.add_flag("--csv", g.csv, "CSV output with header");
  app.add_option("--partitions", g.partitions, "Parallel partitions for search (default: $POWERSUM_PARTITIONS or 1)")
      ->check(CLI::PositiveNumber);

  unsigned q = 0, k = 1, l = 2, mod = 4, n_max = 2, depth = 64;
  std::optional<unsigned> q_opt, l_opt, q_max;
  std::optional<std::string> eval, n_str, bound_str, l_list;
  std::string d_str, n_list = "2";
  std::uint64_t x_max = 1;
  std::size_t count = 5;

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_q and polynomial B_q(x)");
  bern->add_option("--q", q, "Index")->required();

  auto* psum = app.add_subcommand("powersum", "Coefficients of G(x) = (x+1)^k + ... + (lx)^k");
  psum->add_option("--k", k, "Exponent k >= 1")->required()->check(CLI::PositiveNumber);
  psum->add_option("--l", l, "Multiplier l >= 2")->required()->check(CLI::Range(2u, 1u << 30));
  psum->add_option("--eval", eval, "Evaluate G at this rational");

  auto* lem = app.add_subcommand("lemma6", "Zero-multiplicity report for P(x) = B_q(lx+1) - B_q(x+1), l even");
  lem->add_option("--q", q_opt, "Single q >= 2");
  lem->add_option("--l", l_opt, "Single even l");
  lem->add_option("--q-max", q_max, "Grid mode: q = 2..q_max");
  lem->add_option("--l-list", l_list, "Grid mode: comma-separated even l values");
  lem->add_option("--mod", mod, "Snapshot modulus")->check(CLI::IsMember({2u, 4u}));

  auto* srch = app.add_subcommand("search", "All x <= x_max, 2 <= n <= n_max with G(x) = y^n");
  srch->add_option("--k", k, "Exponent k >= 1")->required()->check(CLI::PositiveNumber);
  srch->add_option("--l", l, "Multiplier l >= 2")->required()->check(CLI::Range(2u, 1u << 30));
  srch->add_option("--x-max", x_max, "Largest x")->required()->check(CLI::PositiveNumber);
  srch->add_option("--n-max", n_max, "Largest exponent n")->check(CLI::Range(2u, 1u << 16));

  auto* pell = app.add_subcommand("pell", "u^2 - D v^2 = N: continued fraction and fundamental unit, or bounded scan");
  pell->add_option("--d", d_str, "D, nonsquare")->required();
  pell->add_option("--n", n_str, "Right-hand side N (default 1)");
  pell->add_option("--bound", bound_str, "Scan |v| <= bound (default 1000)");

  auto* fam = app.add_subcommand("family", "Solutions of G(x) = y^2 for k in {1,3} from Pell orbits");
  fam->add_option("--k", k, "1 or 3")->required()->check(CLI::IsMember({1u, 3u}));
  fam->add_option("--l", l, "Multiplier l >= 2")->required()->check(CLI::Range(2u, 1u << 20));
  fam->add_option("--count", count, "Number of records")->required()->check(CLI::PositiveNumber);
  fam->add_option("--bound", bound_str, "k=3: base-solution scan bound (default: class-representative bound)");
  fam->add_option("--depth", depth, "Unit multiplications per orbit")->check(CLI::Range(1u, 100000u));

  auto* rep = app.add_subcommand("report", "Per-exponent case analysis: which n admit the effective bound");
  rep->add_option("--k", k, "Exponent k >= 1")->required()->check(CLI::PositiveNumber);
  rep->add_option("--l", l, "Multiplier l >= 2")->required()->check(CLI::Range(2u, 1u << 20));
  rep->add_option("--n-list", n_list, "Comma-separated exponents n >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (g.json && g.csv) throw UsageError("--json and --csv are mutually exclusive");
    if (*bern) {
      run_bernoulli(q, g);
    } else if (*psum) {
      run_powersum(k, l, eval, g);
    } else if (*lem) {
      if (q_max || l_list) {
        if (q_opt || l_opt) throw UsageError("use either --q/--l or --q-max/--l-list");
        if (!q_max || !l_list) throw UsageError("grid mode needs both --q-max and --l-list");
        const auto ls = parse_list(*l_list);
        if (g.csv) std::cout << "q,l,d,odd_count,conclusion_i,conclusion_ii,snapshot\n";
        for (unsigned qq = 2; qq <= *q_max; ++qq)
          for (unsigned ll : ls) print_lemma6(ps::verify_lemma6(qq, ll), mod, g);
      } else {
        if (!q_opt || !l_opt) throw UsageError("lemma6 needs --q and --l (or --q-max and --l-list)");
        if (g.csv) std::cout << "q,l,d,odd_count,conclusion_i,conclusion_ii,snapshot\n";
        print_lemma6(ps::verify_lemma6(*q_opt, *l_opt), mod, g);
      }
    } else if (*srch) {
      ps::SearchConfig cfg;
      cfg.k = k;
      cfg.l = l;
      cfg.x_max = x_max;
      cfg.n_max = n_max;
      cfg.partitions = g.partitions;
      cfg.output_format = format_of(g);
      run_search(cfg);
    } else if (*pell) {
      run_pell(d_str, n_str, bound_str, g);
    } else if (*fam) {
      run_family(k, l, count, bound_str, depth, g);
    } else if (*rep) {
      const auto ns = parse_list(n_list);
      for (unsigned n : ns)
        if (n < 2) throw UsageError("--n-list entries must be >= 2");
      run_report(k, l, ns, g);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ps::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
