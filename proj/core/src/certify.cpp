#include "foldcat/certify.hpp"

#include <array>

namespace foldcat {

namespace {

class TrialChecker {
 public:
  TrialChecker(const Structure& s, CertReport& report, int max_recorded)
      : s_(s), report_(report), max_recorded_(max_recorded) {}

  void expect(bool ok, const std::string& check, const std::vector<const Obj*>& objs,
              const std::string& detail, const std::string& replay = "") {
    ++report_.checks;
    if (ok) return;
    ++report_.failure_count;
    if (static_cast<int>(report_.failures.size()) >= max_recorded_) return;
    CertFailure f;
    f.check = check;
    for (const Obj* o : objs) f.objects.push_back(s_.print_object(*o));
    f.detail = detail;
    f.replay = replay;
    report_.failures.push_back(std::move(f));
  }

 private:
  const Structure& s_;
  CertReport& report_;
  int max_recorded_;
};

std::string q(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

CertReport certify_structure(const Structure& s, const CertOptions& options) {
  CertReport report;
  report.structure = s.name();
  report.trials = options.trials;
  report.seed = options.seed;
  TrialChecker check(s, report, options.max_recorded_failures);

  const Obj unit = s.unit();
  const int n = s.dims();

  for (int trial = 0; trial < options.trials; ++trial) {
    SplitMix64 rng = SplitMix64::for_trial(options.seed, static_cast<std::uint64_t>(trial));
    std::array<Obj, 8> v{unit, unit, unit, unit, unit, unit, unit, unit};
    for (auto& o : v) o = s.sample(rng, options.bounds);
    const Obj& A = v[0];
    const Obj& B = v[1];
    const Obj& C = v[2];
    const Obj& D = v[3];

    for (int i = 1; i <= n; ++i) {
      check.expect(eq(s, s.product(i, unit, A), A) && eq(s, s.product(i, A, unit), A),
                   "unit(" + std::to_string(i) + ")", {&A}, "I*A or A*I differs from A");
      check.expect(eq(s, s.product(i, s.product(i, A, B), C),
                      s.product(i, A, s.product(i, B, C))),
                   "associativity(" + std::to_string(i) + ")", {&A, &B, &C},
                   "(A*B)*C differs from A*(B*C)");

      const Obj& lo1 = leq(s, A, B) ? A : B;
      const Obj& hi1 = leq(s, A, B) ? B : A;
      const Obj& lo2 = leq(s, C, D) ? C : D;
      const Obj& hi2 = leq(s, C, D) ? D : C;
      const Obj small = s.product(i, lo1, lo2);
      const Obj large = s.product(i, hi1, hi2);
      check.expect(leq(s, small, large), "monotone(" + std::to_string(i) + ")",
                   {&lo1, &hi1, &lo2, &hi2},
                   s.print_object(small) + " > " + s.print_object(large),
                   "compare --structure " + s.name() + " --expect leq " +
                       q(s.print_object(small)) + " " + q(s.print_object(large)));
    }

    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        const Obj lhs = s.product(i, s.product(j, A, B), s.product(j, C, D));
        const Obj rhs = s.product(j, s.product(i, A, C), s.product(i, B, D));
        check.expect(leq(s, lhs, rhs), "interchange" + ij, {&A, &B, &C, &D},
                     s.print_object(lhs) + " > " + s.print_object(rhs),
                     "interchange --structure " + s.name() + " --i " + std::to_string(i) +
                         " --j " + std::to_string(j) + " " + q(s.print_object(A)) + " " +
                         q(s.print_object(B)) + " " + q(s.print_object(C)) + " " +
                         q(s.print_object(D)));

        // Internal and external unit conditions as object equalities.
        const Obj ab_j = s.product(j, A, B);
        check.expect(eq(s, s.product(i, ab_j, unit), ab_j) &&
                         eq(s, s.product(i, unit, ab_j), ab_j),
                     "internal-unit" + ij, {&A, &B}, "(A*jB)*iI differs from A*jB");
        const Obj ab_i = s.product(i, A, B);
        check.expect(eq(s, s.product(i, s.product(j, A, unit), s.product(j, B, unit)), ab_i) &&
                         eq(s, s.product(i, s.product(j, unit, A), s.product(j, unit, B)), ab_i),
                     "external-unit" + ij, {&A, &B}, "(A*jI)*i(B*jI) differs from A*iB");

        // Internal associativity: edges of the diagram on (U,V,W,X,Y,Z).
        {
          const Obj &U = v[0], &V = v[1], &W = v[2], &X = v[3], &Y = v[4], &Z = v[5];
          const Obj s0 = s.product(i, s.product(i, s.product(j, U, V), s.product(j, W, X)),
                                   s.product(j, Y, Z));
          const Obj a1 = s.product(i, s.product(j, s.product(i, U, W), s.product(i, V, X)),
                                   s.product(j, Y, Z));
          const Obj a2 = s.product(j, s.product(i, s.product(i, U, W), Y),
                                   s.product(i, s.product(i, V, X), Z));
          const Obj b1 = s.product(i, s.product(j, U, V),
                                   s.product(j, s.product(i, W, Y), s.product(i, X, Z)));
          const Obj b2 = s.product(j, s.product(i, U, s.product(i, W, Y)),
                                   s.product(i, V, s.product(i, X, Z)));
          const bool ok = leq(s, s0, a1) && leq(s, a1, a2) && leq(s, s0, b1) &&
                          leq(s, b1, b2) && eq(s, a2, b2);
          check.expect(ok, "internal-associativity" + ij, {&U, &V, &W, &X, &Y, &Z},
                       "an edge of the internal associativity diagram is missing");
        }

        // External associativity.
        {
          const Obj &U = v[0], &V = v[1], &W = v[2], &X = v[3], &Y = v[4], &Z = v[5];
          const Obj s0 = s.product(i, s.product(j, s.product(j, U, V), W),
                                   s.product(j, s.product(j, X, Y), Z));
          const Obj a1 = s.product(j, s.product(i, s.product(j, U, V), s.product(j, X, Y)),
                                   s.product(i, W, Z));
          const Obj a2 = s.product(j, s.product(j, s.product(i, U, X), s.product(i, V, Y)),
                                   s.product(i, W, Z));
          const Obj b1 = s.product(j, s.product(i, U, X),
                                   s.product(i, s.product(j, V, W), s.product(j, Y, Z)));
          const Obj b2 = s.product(j, s.product(i, U, X),
                                   s.product(j, s.product(i, V, Y), s.product(i, W, Z)));
          const bool ok = leq(s, s0, a1) && leq(s, a1, a2) && leq(s, s0, b1) &&
                          leq(s, b1, b2) && eq(s, a2, b2);
          check.expect(ok, "external-associativity" + ij, {&U, &V, &W, &X, &Y, &Z},
                       "an edge of the external associativity diagram is missing");
        }

        // Derived maps between two products.
        const Obj low = s.product(i, A, B);
        check.expect(leq(s, low, s.product(j, A, B)) && leq(s, low, s.product(j, B, A)),
                     "derived" + ij, {&A, &B},
                     s.print_object(low) + " not below A*jB and B*jA");
      }
    }

    // Hexagon edges for every triple i < j < k on the eight sampled objects.
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          const Obj &A0 = v[0], &A1 = v[1], &B0 = v[2], &B1 = v[3], &C0 = v[4],
                    &C1 = v[5], &D0 = v[6], &D1 = v[7];
          const Obj v1 = s.product(i, s.product(j, s.product(k, A0, A1), s.product(k, B0, B1)),
                                   s.product(j, s.product(k, C0, C1), s.product(k, D0, D1)));
          const Obj v2 = s.product(i, s.product(k, s.product(j, A0, B0), s.product(j, A1, B1)),
                                   s.product(k, s.product(j, C0, D0), s.product(j, C1, D1)));
          const Obj v3 = s.product(j, s.product(i, s.product(k, A0, A1), s.product(k, C0, C1)),
                                   s.product(i, s.product(k, B0, B1), s.product(k, D0, D1)));
          const Obj v4 = s.product(k, s.product(i, s.product(j, A0, B0), s.product(j, C0, D0)),
                                   s.product(i, s.product(j, A1, B1), s.product(j, C1, D1)));
          const Obj v5 = s.product(j, s.product(k, s.product(i, A0, C0), s.product(i, A1, C1)),
                                   s.product(k, s.product(i, B0, D0), s.product(i, B1, D1)));
          const Obj v6 = s.product(k, s.product(j, s.product(i, A0, C0), s.product(i, B0, D0)),
                                   s.product(j, s.product(i, A1, C1), s.product(i, B1, D1)));
          const bool ok = leq(s, v1, v2) && leq(s, v1, v3) && leq(s, v2, v4) &&
                          leq(s, v3, v5) && leq(s, v4, v6) && leq(s, v5, v6);
          check.expect(ok,
                       "hexagon(" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")",
                       {&A0, &A1, &B0, &B1, &C0, &C1, &D0, &D1},
                       "a hexagon edge is missing");
        }
      }
    }
  }

  return report;
}

std::string format_report(const CertReport& report) {
  std::string out = "certify: structure=" + report.structure +
                    " trials=" + std::to_string(report.trials) +
                    " seed=" + std::to_string(report.seed) +
                    " checks=" + std::to_string(report.checks) +
                    " failures=" + std::to_string(report.failure_count) + "\n";
  for (const auto& f : report.failures) {
    out += "failure: " + f.check + "\n";
    out += "  tuple:";
    for (const auto& o : f.objects) out += " " + o;
    out += "\n  detail: " + f.detail + "\n";
    if (!f.replay.empty()) out += "  replay: " + f.replay + "\n";
  }
  out += report.passed() ? "verdict: PASS\n" : "verdict: FAIL\n";
  return out;
}

}  // namespace foldcat
