#include "schurpar/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "schurpar/arith.hpp"
#include "schurpar/census.hpp"
#include "schurpar/classify.hpp"
#include "schurpar/euler.hpp"
#include "schurpar/qform.hpp"
#include "schurpar/schur.hpp"
#include "schurpar/verify.hpp"

namespace schurpar {

namespace {

RepSolution parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  RepSolution s;
  auto parse = [&](std::string_view part, i64& v) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc{} && ptr == part.data() + part.size() && !part.empty();
  };
  const std::string_view sv(text);
  if (comma == std::string::npos || !parse(sv.substr(0, comma), s.x) || !parse(sv.substr(comma + 1), s.y))
    throw Error(Errc::invalid_argument, "bad pair '" + text + "', expected x,y");
  return s;
}

std::string factor_string(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : f.factors) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Writes to the file at `path`, or to `out` when the path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::io, "cannot write " + path);
  fn(file);
  if (!file.flush()) throw Error(Errc::io, "write failed for " + path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur partition parity toolkit: quadratic forms, prime classes, parity census, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for range sweeps (default: all cores)");

  // symbol
  i64 sym_a = 0, sym_n = 0;
  auto* symbol = app.add_subcommand("symbol", "Kronecker symbol (a/n)");
  symbol->add_option("a", sym_a)->required();
  symbol->add_option("n", sym_n)->required();

  // factor
  i64 factor_n = 0;
  auto* factor = app.add_subcommand("factor", "Prime factorization");
  factor->add_option("n", factor_n)->required();

  // forms
  i64 disc = 0;
  auto* forms = app.add_subcommand("forms", "Reduced primitive forms of a negative discriminant");
  forms->add_option("--disc", disc)->required();

  // repcount
  i64 rep_n = 0;
  std::string rep_form;
  bool rep_list = false;
  auto* repcount = app.add_subcommand("repcount", "R(n, f) by exhaustive search");
  repcount->add_option("--n", rep_n)->required();
  repcount->add_option("--form", rep_form, "a,b,c")->required();
  repcount->add_flag("--list", rep_list, "Also list the solutions");

  // compose
  std::string comp_kind, comp_s0, comp_s1;
  auto* compose = app.add_subcommand("compose", "Compose x^2+6y^2 / 2x^2+3y^2 solutions");
  compose->add_option("--kind", comp_kind)->required()->check(CLI::IsMember({"ff", "fg", "gg"}));
  compose->add_option("--s0", comp_s0, "x,y")->required();
  compose->add_option("--s1", comp_s1, "x,y")->required();

  // schur
  i64 schur_n = -1, schur_table_n = -1;
  std::string variant = "a";
  auto* schur = app.add_subcommand("schur", "Schur partition counts A, A1, A2");
  auto* schur_n_opt = schur->add_option("--n", schur_n);
  auto* schur_table_opt = schur->add_option("--table", schur_table_n, "Print n,A,A1,A2 for 0..N as CSV");
  schur->add_option("--variant", variant)->check(CLI::IsMember({"a", "a1", "a2"}));
  schur_n_opt->excludes(schur_table_opt);

  // euler-census
  i64 euler_limit = 0, euler_mod = 2;
  auto* euler = app.add_subcommand("euler-census", "Residue census of p(n)");
  euler->add_option("--limit", euler_limit)->required();
  euler->add_option("--mod", euler_mod)->required();

  // classify
  i64 cls_prime = 0, cls_m = 0;
  auto* classify = app.add_subcommand("classify", "Prime class / parity prediction");
  auto* cls_prime_opt = classify->add_option("--prime", cls_prime);
  auto* cls_m_opt = classify->add_option("--m", cls_m);
  cls_prime_opt->excludes(cls_m_opt);

  // census
  i64 census_limit = 0;
  std::string census_method = "sieve", census_out;
  bool census_density = false;
  auto* census = app.add_subcommand("census", "Cumulative count of odd A(2n+1)");
  census->add_option("--limit", census_limit)->required();
  census->add_option("--method", census_method)->check(CLI::IsMember({"sieve", "direct", "both"}));
  census->add_option("--out", census_out, "CSV path (default: standard output)");
  census->add_flag("--density", census_density,
                   "Density report: checkpoints from 10 and S_i prime frequencies (<stem>.frequencies.csv next to --out)");

  // verify
  std::string suite = "all", verify_out;
  i64 verify_limit = 0, offset = 11;
  std::uint64_t seed = SuiteOptions{}.seed;
  auto* verify = app.add_subcommand("verify", "Run verification suites, JSON report");
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--limit", verify_limit, "Range limit (default per suite)");
  verify->add_option("--seed", seed);
  verify->add_option("--out", verify_out);
  verify->add_option("--modulus-offset", offset, "congruence8 modulus 24n+k (fault injection)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*symbol) {
      out << kronecker(sym_a, sym_n) << '\n';
    } else if (*factor) {
      out << factor_n << " = " << factor_string(factorize(factor_n)) << '\n';
    } else if (*forms) {
      for (const auto& f : reduced_forms(disc)) out << f.to_string() << '\n';
    } else if (*repcount) {
      const QuadForm f = QuadForm::parse(rep_form);
      if (rep_list) {
        const auto sols = rep_solutions(rep_n, f);
        out << sols.size() << '\n';
        for (const auto& s : sols) out << s.x << ',' << s.y << '\n';
      } else {
        out << rep_count(rep_n, f) << '\n';
      }
    } else if (*compose) {
      const CompositionKind kind = parse_composition_kind(comp_kind);
      const Composition c = dirichlet_compose(kind, parse_pair(comp_s0), parse_pair(comp_s1));
      const QuadForm& f = form_of(c.result);
      for (const RepSolution& s : {c.first, c.second})
        out << to_string(c.result) << '(' << s.x << ',' << s.y << ") = " << f(s.x, s.y) << '\n';
    } else if (*schur) {
      if (*schur_table_opt) {
        out << "n,A,A1,A2\n";
        for (const auto& row : schur_table(schur_table_n))
          out << row.n << ',' << row.a << ',' << row.a1 << ',' << row.a2 << '\n';
      } else if (*schur_n_opt) {
        const u64 v = variant == "a" ? schur_a(schur_n) : variant == "a1" ? schur_a1(schur_n) : schur_a2(schur_n);
        out << v << '\n';
      } else {
        err << "error: usage: schur needs --n or --table\n";
        return kExitUsage;
      }
    } else if (*euler) {
      const EulerCensus c = euler_census(euler_limit, euler_mod);
      out << "convention,residue,count\n";
      for (const ResidueCounts* rc : {&c.zero_based, &c.one_based})
        for (std::size_t r = 0; r < rc->counts.size(); ++r) out << rc->label << ',' << r << ',' << rc->counts[r] << '\n';
    } else if (*classify) {
      if (*cls_prime_opt) {
        out << cls_prime << ": " << to_string(classify_prime(cls_prime)) << " (" << cls_prime % 24 << " mod 24)\n";
      } else if (*cls_m_opt) {
        const Factorization f = factorize(cls_m);
        for (const auto& [p, e] : f.factors)
          out << p << (e > 1 ? "^" + std::to_string(e) : "") << ": " << to_string(classify_prime(p)) << '\n';
        const bool prediction = theorem1_predict(cls_m);
        const FormPattern pat = form_pattern(f);
        out << "pattern n1=" << pat.n1 << " n2=" << pat.n2 << " n3=" << pat.n3 << " n4=" << pat.n4
            << (pat.all_in_s ? " all in S" : " not all in S") << '\n';
        out << "R(m,5x^2+2xy+11y^2) = 2 (mod 4): " << (prediction ? "true" : "false") << '\n';
      } else {
        err << "error: usage: classify needs --prime or --m\n";
        return kExitUsage;
      }
    } else if (*census) {
      CensusOptions opts;
      opts.threads = threads;
      if (census_density) {
        const DensityReport rep = density_report(census_limit, opts);
        if (census_out.empty()) {
          write_census_csv(out, rep.rows);
          write_frequency_csv(out, rep.frequencies);
        } else {
          write_density_report(rep, census_out);
        }
        return kExitOk;
      }
      const bool both = census_method == "both";
      const CensusMethod primary = census_method == "direct" ? CensusMethod::direct : CensusMethod::sieve;
      const auto rows = odd_census(census_limit, primary, opts);
      if (both) {
        const auto other = odd_census(census_limit, CensusMethod::direct, opts);
        if (other != rows) {
          err << "error: verification: sieve and direct census disagree\n";
          return kExitVerificationFailed;
        }
      }
      emit(census_out, out, [&](std::ostream& o) { write_census_csv(o, rows); });
    } else if (*verify) {
      SuiteOptions opts;
      opts.limit = verify_limit;
      opts.seed = seed;
      opts.threads = threads;
      opts.congruence_offset = offset;
      std::vector<VerificationReport> reports;
      if (suite == "all") {
        for (const auto& name : suite_names()) reports.push_back(run_suite(name, opts));
      } else {
        reports.push_back(run_suite(suite, opts));
      }
      emit(verify_out, out, [&](std::ostream& o) { o << reports_to_json(reports).dump(2) << '\n'; });
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
      return ok ? kExitOk : kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace schurpar
