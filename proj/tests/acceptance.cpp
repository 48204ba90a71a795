// One PASS/FAIL line per acceptance criterion; the exit status is nonzero if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "diskt/checks.hpp"

namespace {

const char* const kTitles[] = {
    "transcendental root alpha",
    "consistency triangle alpha, delta, lambda0",
    "Galerkin convergence to alpha",
    "exact isometry of H",
    "orthogonality ledger",
    "exact operator identities",
    "closed forms agree with quadrature",
    "Bessel zeros j0..j4",
    "Hardy constants",
    "L^p -> L^inf norm",
    "L^1 computations",
    "p <= 2 counterexample",
    "bounds ledger",
};

}  // namespace

int main() {
  diskt::RunConfig cfg;
  diskt::checks::Context ctx(cfg);
  int failures = 0;
  for (int ac = 1; ac <= diskt::checks::kCriteria; ++ac) {
    const std::vector<diskt::CheckRow> rows = diskt::run_criterion(ac, ctx);
    std::string detail;
    bool ok = !rows.empty();
    for (const auto& r : rows) {
      if (diskt::failed(r) || r.status == diskt::Status::Skipped) {
        ok = false;
        detail += " " + r.check_id + "=" + diskt::to_string(r.status);
      }
      if (r.status == diskt::Status::Conjecture) detail += " " + r.check_id + "=CONJECTURE";
    }
    std::printf("AC%-2d %s  %s%s\n", ac, ok ? "PASS" : "FAIL", kTitles[ac - 1], detail.c_str());
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
