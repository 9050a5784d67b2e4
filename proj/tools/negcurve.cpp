// negcurve: command-line front end for the negcurve library.
//
// Exit status: 0 on success (an "unsatisfied" or "exhausted" answer is a
// success), 1 on internal invariant violations and failed verification,
// 2 on invalid arguments.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "negcurve/negcurve.hpp"

namespace {

using namespace negcurve;

struct Weights {
  std::int64_t a = 0, b = 0, c = 0;
  WeightTriple triple() const { return WeightTriple(a, b, c); }
};

void add_weights(CLI::App* cmd, Weights& w) {
  cmd->add_option("A", w.a, "weight of x")->required();
  cmd->add_option("B", w.b, "weight of y")->required();
  cmd->add_option("C", w.c, "weight of z")->required();
}

std::string describe(const ConditionReport& rep) {
  std::string out = to_string(rep.verdict);
  if (rep.witness) out += " n=" + rep.witness->n.get_str() + " r=" + rep.witness->r.get_str();
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// CLI11 silently drops environment values that fail validation, so the
// variable is read here instead.
unsigned jobs_from_env() {
  const char* env = std::getenv("NEGCURVE_JOBS");
  if (!env || !*env) return default_jobs();
  unsigned v = 0;
  const auto [end, ec] = std::from_chars(env, env + std::strlen(env), v);
  require(ec == std::errc{} && *end == '\0' && v >= 1, "NEGCURVE_JOBS must be a positive integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative curves on blow-ups of weighted projective planes P(a,b,c)"};
  app.require_subcommand(1);

  Weights w;
  std::int64_t n = 0, r = 0;

  auto* hilbert = app.add_subcommand("hilbert", "print dim_k S_N");
  add_weights(hilbert, w);
  hilbert->add_option("N", n, "degree")->required()->check(CLI::NonNegativeNumber);

  std::string modular = "on";
  auto* dimsym = app.add_subcommand("dim-symbolic", "print dim_k [p^(R)]_N");
  add_weights(dimsym, w);
  dimsym->add_option("N", n, "degree")->required()->check(CLI::NonNegativeNumber);
  dimsym->add_option("R", r, "symbolic power")->required()->check(CLI::PositiveNumber);
  dimsym->add_option("--modular-filter", modular, "certify full rank modulo a random prime")
      ->check(CLI::IsMember({"on", "off"}));

  auto* c2 = app.add_subcommand("check-c2", "decide condition (C2)");
  add_weights(c2, w);
  auto* c3 = app.add_subcommand("check-c3", "decide condition (C3)");
  add_weights(c3, w);

  std::int64_t max_r = 0;
  std::string cert_path;
  auto* find = app.add_subcommand("find-curve", "search for the minimal-degree negative curve");
  add_weights(find, w);
  find->add_option("--max-r", max_r, "largest symbolic power to search")->required()->check(CLI::PositiveNumber);
  find->add_option("--certificate", cert_path, "write the certificate here");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check a certificate file");
  verify->add_option("PATH", verify_path)->required();

  std::string n1, r1, n2, r2;
  auto* inter = app.add_subcommand("intersect", "intersection number (N1 A - R1 E).(N2 A - R2 E)");
  add_weights(inter, w);
  inter->add_option("N1", n1)->required();
  inter->add_option("R1", r1)->required();
  inter->add_option("N2", n2)->required();
  inter->add_option("R2", r2)->required();

  std::int64_t census_max = 0;
  std::string census_out;
  unsigned jobs = 1;
  bool resume = false, no_elapsed = false;
  auto* census = app.add_subcommand("census", "classify all coprime a <= b <= c <= MAX");
  census->add_option("--max", census_max)->required()->check(CLI::PositiveNumber);
  census->add_option("--out", census_out)->required();
  census->add_option("--jobs", jobs, "worker threads (default: $NEGCURVE_JOBS, else all cores)")
      ->check(CLI::PositiveNumber);
  census->add_flag("--resume", resume, "skip triples already present in --out");
  census->add_flag("--no-elapsed", no_elapsed, "write elapsed_ms as 0 for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hilbert) {
      std::cout << dim_count(w.triple(), n).get_str() << '\n';
    } else if (*dimsym) {
      SymbolicDimOptions opts;
      opts.modular_filter = modular == "on";
      const auto res = symbolic_dim(w.triple(), n, r, opts);
      std::cout << "w=" << res.monomial_count << " rank=" << res.rank << " dim=" << res.dim
                << " method=" << to_string(res.method) << '\n';
    } else if (*c2) {
      const auto rep = check_c2(w.triple());
      std::cout << describe(rep) << '\n';
      if (!rep.notes.empty()) std::cout << "# " << rep.notes << '\n';
    } else if (*c3) {
      const auto rep = check_c3(w.triple());
      std::cout << describe(rep) << '\n';
      if (!rep.notes.empty()) std::cout << "# " << rep.notes << '\n';
    } else if (*find) {
      const auto t = w.triple();
      const auto res = find_negative_curve(t, max_r);
      if (res.certificate) {
        const auto& cert = *res.certificate;
        const auto check = verify_certificate(cert);
        ensure(check.ok, "find-curve: produced certificate fails verification: " + check.reason);
        std::cout << "n=" << cert.n << " r=" << cert.r << '\n';
        std::cout << "# w=" << res.hit->monomial_count << " rank=" << res.hit->rank << " dim=" << res.hit->dim
                  << " self-intersection=" << to_string(intersect(t, {to_big(cert.n), to_big(cert.r)},
                                                                   {to_big(cert.n), to_big(cert.r)}))
                  << '\n';
        if (!cert_path.empty()) write_certificate(cert_path, cert);
      } else {
        std::cout << "exhausted: no negative curve with r <= " << res.max_r << " (n = 1.." << res.n_searched
                  << ")\n";
      }
    } else if (*verify) {
      const auto cert = read_certificate(verify_path);
      const auto check = verify_certificate(cert);
      if (!check.ok) {
        std::cout << "invalid: " << check.reason << '\n';
        return 1;
      }
      std::cout << "valid " << cert.triple << " n=" << cert.n << " r=" << cert.r << '\n';
    } else if (*inter) {
      auto big = [](const std::string& s) {
        try {
          return BigInt(s);
        } catch (const std::invalid_argument&) {
          throw ContractViolation("not an integer: " + s);
        }
      };
      const auto q = intersect(w.triple(), {big(n1), big(r1)}, {big(n2), big(r2)});
      char approx[64];
      std::snprintf(approx, sizeof approx, "%.4g", q.get_d());
      std::cout << to_string(q) << " ≈ " << approx << '\n';
    } else if (*census) {
      CensusOptions opts;
      opts.max = census_max;
      opts.jobs = census->count("--jobs") ? jobs : jobs_from_env();
      if (resume && std::filesystem::exists(census_out)) {
        std::ifstream in(census_out);
        opts.resume = read_census_records(in);
      }
      const auto res = run_census(opts);
      const std::string tmp = census_out + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        write_census(out, res, !no_elapsed);
      }
      std::filesystem::rename(tmp, census_out);
      std::cout << summary_line(res.summary) << '\n';
      if (!res.complete) {
        std::cerr << "census incomplete: " << res.error << '\n';
        return 1;
      }
    }
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
