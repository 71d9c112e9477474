#include "pellredei/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>

#include "pellredei/bench.hpp"
#include "pellredei/contfrac.hpp"
#include "pellredei/errors.hpp"
#include "pellredei/redei.hpp"
#include "pellredei/solver.hpp"

namespace pellredei::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string d;
  std::string d_max;
  std::string z;
  std::uint64_t n = 1;
  std::int64_t signed_n = 0;
  std::uint64_t terms = 0;
  std::uint64_t n_max = 1000;
  unsigned reps = 5;
  std::string strategy = "cf";
  std::string format = "text";
};

BigInt parse_d(const std::string& text) {
  BigInt d = BigInt::parse(text);
  if (d.sign() <= 0) throw DomainError("--d must be at least 1, got " + text);
  return d;
}

Json record(std::string_view command, const BigInt& d) {
  Json j;
  j["command"] = command;
  j["d"] = d.to_string();
  j["params"] = Json::object();
  j["result"] = Json::object();
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string str(std::uint64_t v) { return std::to_string(v); }

int cmd_solve(const Options& o, std::ostream& out) {
  const BigInt d = parse_d(o.d);
  const SolutionStrategy strategy = parse_strategy(o.strategy);
  if (o.n == 0) throw DomainError("--n must be at least 1");
  const PellSolution s = nth_solution(d, o.n, strategy);
  if (o.format == "json") {
    Json j = record("solve", d);
    j["params"]["n"] = str(o.n);
    j["params"]["strategy"] = std::string(to_string(strategy));
    j["result"]["x"] = s.x.to_string();
    j["result"]["y"] = s.y.to_string();
    emit(out, j);
  } else {
    out << "x=" << s.x << " y=" << s.y << '\n';
  }
  return kOk;
}

int cmd_cf(const Options& o, std::ostream& out) {
  const BigInt d = parse_d(o.d);
  const CFExpansion cf = sqrt_cf(d);
  const std::uint64_t terms = o.terms == 0 ? 2 * cf.length() : o.terms;
  ConvergentStream stream(cf);
  std::vector<Convergent> cs;
  for (std::uint64_t k = 0; k < terms; ++k) cs.push_back(stream.next());

  if (o.format == "json") {
    Json j = record("cf", d);
    j["params"]["terms"] = str(terms);
    j["result"]["a0"] = cf.a0.to_string();
    Json period = Json::array();
    for (const auto& a : cf.period) period.push_back(a.to_string());
    j["result"]["period"] = period;
    j["result"]["L"] = str(cf.length());
    Json conv = Json::array();
    for (const auto& c : cs) {
      Json e;
      e["k"] = str(c.k);
      e["p"] = c.p.to_string();
      e["q"] = c.q.to_string();
      conv.push_back(e);
    }
    j["result"]["convergents"] = conv;
    emit(out, j);
  } else {
    out << "a0=" << cf.a0 << " period=[";
    for (std::size_t i = 0; i < cf.period.size(); ++i) out << (i ? "," : "") << cf.period[i];
    out << "] L=" << cf.length() << "\nconvergents=";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      out << (i ? "," : "") << '(' << cs[i].p << ',' << cs[i].q << ')';
    }
    out << '\n';
  }
  return kOk;
}

int cmd_redei(const Options& o, std::ostream& out) {
  const BigInt d = parse_d(o.d);
  const BigRational z = BigRational::parse(o.z);
  const RedeiPair p = redei_pair_signed(d, z, o.signed_n);
  const ProjectiveRational q = redei_q_signed(d, z, o.signed_n);
  if (o.format == "json") {
    Json j = record("redei", d);
    j["params"]["z"] = z.to_string();
    j["params"]["n"] = std::to_string(o.signed_n);
    j["result"]["N"] = p.N.to_string();
    j["result"]["D"] = p.D.to_string();
    j["result"]["Q"] = q.to_string();
    emit(out, j);
  } else {
    out << "N=" << p.N << " D=" << p.D << " Q=" << q << '\n';
  }
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const BigInt d = parse_d(o.d);
  const BenchReport r = run_bench(d, o.n_max, o.reps);
  const BenchTiming& first = r.timings[0];
  if (o.format == "json") {
    Json j = record("bench", d);
    j["params"]["n_max"] = str(r.n);
    j["params"]["reps"] = str(r.repetitions);
    j["result"]["agree"] = r.agree;
    j["result"]["digits_x"] = str(first.x.decimal_digits());
    j["result"]["digits_y"] = str(first.y.decimal_digits());
    Json t = Json::object();
    for (const auto& s : r.timings) t[std::string(to_string(s.strategy))] = str(s.median_ns);
    j["timings_ns"] = t;
    emit(out, j);
  } else {
    out << "d=" << d << " n=" << r.n << " reps=" << r.repetitions << '\n';
    for (const auto& s : r.timings) {
      out << to_string(s.strategy) << " median_ns=" << s.median_ns
          << " digits_x=" << s.x.decimal_digits() << " digits_y=" << s.y.decimal_digits() << '\n';
    }
    out << "agree=" << (r.agree ? "yes" : "no") << '\n';
  }
  if (!r.agree) throw ConsistencyError("strategies disagree on the solution");
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BigInt lo = parse_d(o.d);
  const BigInt hi = o.d_max.empty() ? lo : parse_d(o.d_max);
  if (hi < lo) throw DomainError("--d-max must not be below --d");
  if (o.n == 0) throw DomainError("--n must be at least 1");
  if (lo == hi && is_perfect_square(lo)) throw PerfectSquareError(lo.to_string());

  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  Json reports = Json::array();
  for (BigInt d = lo; d <= hi; d += BigInt(1)) {
    if (is_perfect_square(d)) continue;
    const PellSolver solver(d);
    for (std::uint64_t n = 1; n <= o.n; ++n) {
      const CorrespondenceReport r = solver.correspondence(n);
      ++checked;
      if (!r.equal) ++failures;
      const char* branch = r.even_period ? "even" : "odd";
      if (o.format == "json") {
        Json e;
        e["d"] = d.to_string();
        e["n"] = str(n);
        e["L"] = str(r.period_length);
        e["branch"] = branch;
        e["index"] = str(r.convergent_index);
        e["redei"] = r.redei_value.to_string();
        e["convergent"] = r.convergent_value.to_string();
        e["equal"] = r.equal;
        reports.push_back(e);
      } else {
        out << "d=" << d << " n=" << n << " L=" << r.period_length << " branch=" << branch
            << " index=" << r.convergent_index << " redei=" << r.redei_value
            << " convergent=" << r.convergent_value << (r.equal ? " equal" : " MISMATCH") << '\n';
      }
    }
  }
  if (o.format == "json") {
    Json j = record("verify", lo);
    j["params"]["d_max"] = hi.to_string();
    j["params"]["n"] = str(o.n);
    j["result"]["checked"] = str(checked);
    j["result"]["failures"] = str(failures);
    j["result"]["reports"] = reports;
    emit(out, j);
  } else {
    out << "checked=" << checked << " failures=" << failures << '\n';
  }
  if (failures != 0) throw ConsistencyError(std::to_string(failures) + " correspondence failures");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pell equation solutions via continued fractions, hyperbola powers and Redei functions"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "the parameter d")->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "n-th solution of x^2 - d y^2 = 1");
  add_common(solve);
  solve->add_option("--n", o.n, "solution index")->capture_default_str();
  solve->add_option("--strategy", o.strategy, "cf, power or redei")
      ->check(CLI::IsMember({"cf", "power", "redei"}))
      ->capture_default_str();
  solve->callback([&] { action = cmd_solve; });

  auto* cf = app.add_subcommand("cf", "continued fraction of sqrt(d) and its convergents");
  add_common(cf);
  cf->add_option("--terms", o.terms, "number of convergents (default 2L)");
  cf->callback([&] { action = cmd_cf; });

  auto* redei = app.add_subcommand("redei", "Redei pair N_n, D_n and Q_n(d, z)");
  add_common(redei);
  redei->add_option("--z", o.z, "rational parameter, p or p/q")->required();
  redei->add_option("--n", o.signed_n, "index (may be negative)")->required();
  redei->callback([&] { action = cmd_redei; });

  auto* bench = app.add_subcommand("bench", "time the three ways of computing the n-th solution");
  add_common(bench);
  bench->add_option("--n-max", o.n_max, "solution index to compute")->capture_default_str();
  bench->add_option("--reps", o.reps, "repetitions per strategy")->capture_default_str();
  bench->callback([&] { action = cmd_bench; });

  auto* verify = app.add_subcommand("verify", "check Q_2n against the convergents for a range of d");
  add_common(verify);
  verify->add_option("--d-max", o.d_max, "last d of the range (default: --d)");
  verify->add_option("--n", o.n, "check indices 1..n")->capture_default_str();
  verify->callback([&] { action = cmd_verify; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action(o, out);
  } catch (const PerfectSquareError& e) {
    err << "error: " << e.what() << '\n';
    return kPerfectSquare;
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency failure: " << e.what() << '\n';
    return kInconsistent;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace pellredei::cli
