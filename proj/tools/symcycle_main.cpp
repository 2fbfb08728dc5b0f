// Command-line surface for the symmetric-cycle library: cycle generation,
// vertex decomposition, distance/spectral metrics, census polynomials, and
// the full identity suite.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 cap exceeded.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "symcycle/symcycle.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

struct Options {
  int t = 0;
  std::string cycle_descriptor;
  std::string target;
  std::uint64_t seed = 1;
  std::string format = "text";
  int cap = symcycle::kEnumerationCap;
};

bool records(const Options& o) { return o.format == "records"; }

void check_dimension_cap(int t) {
  if (t < 1) throw std::invalid_argument("--t must be at least 1");
  if (t > symcycle::kMaxDimension) {
    throw symcycle::CapExceeded("--t exceeds the supported cap of " +
                                std::to_string(symcycle::kMaxDimension));
  }
}

symcycle::SymmetricCycle make_cycle(const Options& o) {
  if (o.cycle_descriptor.empty()) return symcycle::SymmetricCycle::standard(o.t);
  const symcycle::CycleSpec spec = symcycle::CycleSpec::parse(o.cycle_descriptor);
  if (spec.start.dimension() != o.t) {
    throw std::invalid_argument("cycle descriptor has dimension " +
                                std::to_string(spec.start.dimension()) +
                                " but --t is " + std::to_string(o.t));
  }
  return symcycle::SymmetricCycle::from_spec(spec);
}

symcycle::Tope make_target(const Options& o) {
  if (o.target.empty()) throw std::invalid_argument("--target is required");
  const symcycle::Tope target = symcycle::Tope::parse(o.target);
  if (target.dimension() != o.t) {
    throw std::invalid_argument("target has dimension " +
                                std::to_string(target.dimension()) +
                                " but --t is " + std::to_string(o.t));
  }
  return target;
}

std::string fixed6(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", v);
  return buffer;
}

std::string rational_str(const symcycle::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

int run_gen_cycle(const Options& o) {
  const symcycle::SymmetricCycle cycle = make_cycle(o);
  if (records(o)) std::cout << "# index vertex\n";
  for (int k = 0; k < cycle.size(); ++k) {
    if (records(o)) std::cout << k << " ";
    std::cout << cycle.vertex(k).str() << "\n";
  }
  return 0;
}

int run_decompose(const Options& o) {
  const symcycle::SymmetricCycle cycle = make_cycle(o);
  const symcycle::Tope target = make_target(o);
  const symcycle::Decomposition d = symcycle::decompose(target, cycle);
  if (records(o)) {
    std::cout << "# index vertex\n";
    for (int k : d.cycle_indices) {
      std::cout << k << " " << cycle.vertex(k).str() << "\n";
    }
    std::cout << "# cardinality " << d.cardinality() << "\n";
    return 0;
  }
  std::cout << "target " << target.str() << "\n";
  std::cout << "indices";
  for (int k : d.cycle_indices) std::cout << " " << k;
  std::cout << "\nsummands";
  for (int k : d.cycle_indices) std::cout << " " << cycle.vertex(k).str();
  std::cout << "\ncardinality " << d.cardinality() << "\n";
  return 0;
}

int run_metrics(const Options& o) {
  using symcycle::KernelVariant;
  const symcycle::SymmetricCycle cycle = make_cycle(o);
  const symcycle::Tope target = make_target(o);
  const symcycle::Decomposition d = symcycle::decompose(target, cycle);
  const symcycle::DistanceVector z = symcycle::distance_vector(target, cycle);
  const symcycle::Autocorrelation a = symcycle::autocorrelation(z);
  const symcycle::Spectrum s = symcycle::dft_forward(z);

  if (records(o)) std::cout << "# series values\n";
  std::cout << "z";
  for (int v : z.entries) std::cout << " " << v;
  std::cout << "\na";
  for (std::int64_t v : a.entries) std::cout << " " << v;
  std::cout << "\ndft_abs";
  for (const auto& c : s.entries) std::cout << " " << fixed6(std::abs(c));
  std::cout << "\n";

  std::cout << "q_decompose " << d.cardinality() << "\n";
  if (o.t < 3) {
    std::cout << "q_quadratic gated\nq_autocorrelation gated\nq_spectral gated\n";
    std::cout << "agreement ok (kernel formulas need t >= 3)\n";
    return 0;
  }
  constexpr KernelVariant kVariants[] = {KernelVariant::Q1, KernelVariant::Q2,
                                         KernelVariant::Q3, KernelVariant::Q4};
  bool agree = true;
  std::string quadratic, autocorr, spectral;
  for (const KernelVariant v : kVariants) {
    const symcycle::Rational q = symcycle::cardinality_from_quadratic(z, v);
    const symcycle::Rational c = symcycle::cardinality_from_autocorrelation(a, v);
    const double f = symcycle::cardinality_from_spectrum(z, v);
    quadratic += " " + rational_str(q);
    autocorr += " " + rational_str(c);
    spectral += " " + fixed6(f);
    agree = agree && q == symcycle::Rational(d.cardinality()) &&
            c == symcycle::Rational(d.cardinality()) &&
            std::abs(f - d.cardinality()) <= 1e-6;
  }
  std::cout << "q_quadratic" << quadratic << "\n";
  std::cout << "q_autocorrelation" << autocorr << "\n";
  std::cout << "q_spectral" << spectral << "\n";
  std::cout << "agreement " << (agree ? "ok" : "FAILED") << "\n";
  return agree ? 0 : kExitVerificationFailure;
}

int run_gamma(const Options& o) {
  const symcycle::CensusTable table = symcycle::gamma_polynomial(o.t);
  if (records(o)) {
    std::cout << "# j count\n";
    for (const auto& [j, count] : table.counts) {
      std::cout << j << " " << count << "\n";
    }
    return 0;
  }
  std::cout << symcycle::gamma_text(table) << "\n";
  return 0;
}

int run_verify(const Options& o) {
  symcycle::VerifyOptions options;
  options.t = o.t;
  options.seed = o.seed;
  options.enumeration_cap = o.cap;
  const std::vector<symcycle::IdentityResult> results =
      symcycle::run_identity_suite(options);
  if (records(o)) std::cout << "# status identity checks detail\n";
  std::uint64_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    const char* status = r.status == symcycle::IdentityStatus::pass   ? "PASS"
                         : r.status == symcycle::IdentityStatus::fail ? "FAIL"
                                                                      : "SKIP";
    std::cout << status << " " << r.name << " checks=" << r.checks;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    if (r.status == symcycle::IdentityStatus::pass) ++passed;
    if (r.status == symcycle::IdentityStatus::fail) ++failed;
    if (r.status == symcycle::IdentityStatus::skip) ++skipped;
  }
  std::cout << "summary " << passed << " passed, " << failed << " failed, "
            << skipped << " skipped\n";
  return failed == 0 ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric cycles in hypercube graphs: construction, "
               "decomposition, metrics, and census statistics"};
  app.require_subcommand(1);

  Options o;
  const auto add_common = [&](CLI::App* cmd, bool with_target) {
    cmd->add_option("--t", o.t, "dimension (1..64)")->required();
    cmd->add_option("--cycle", o.cycle_descriptor,
                    "cycle descriptor start=<signs>;order=<permutation> "
                    "(default: standard cycle)");
    if (with_target) {
      cmd->add_option("--target", o.target, "vertex sign string, e.g. +-+")
          ->required();
    }
    cmd->add_option("--seed", o.seed, "randomization seed (default 1)");
    cmd->add_option("--format", o.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "records"}));
    cmd->add_option("--cap", o.cap,
                    "full-enumeration cap (default " +
                        std::to_string(symcycle::kEnumerationCap) + ")")
        ->check(CLI::Range(1, symcycle::kEnumerationCap));
  };

  CLI::App* gen = app.add_subcommand("gen-cycle", "print the cycle's vertex sequence");
  add_common(gen, false);
  CLI::App* dec = app.add_subcommand("decompose", "decompose a vertex over the cycle");
  add_common(dec, true);
  CLI::App* met = app.add_subcommand("metrics", "distance vector, autocorrelation, "
                                     "spectrum, and the four cardinality formulas");
  add_common(met, true);
  CLI::App* gam = app.add_subcommand("gamma", "census polynomial of the dimension");
  add_common(gam, false);
  CLI::App* ver = app.add_subcommand("verify", "run the identity suite");
  add_common(ver, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    check_dimension_cap(o.t);
    if (gen->parsed()) return run_gen_cycle(o);
    if (dec->parsed()) return run_decompose(o);
    if (met->parsed()) return run_metrics(o);
    if (gam->parsed()) return run_gamma(o);
    if (ver->parsed()) return run_verify(o);
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
  } catch (const symcycle::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
