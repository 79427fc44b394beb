// Acceptance gate: runs every criterion at its stated bound and budget and
// prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dynsu2/report.hpp"

using namespace dynsu2;

namespace {

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::vector<std::pair<std::string, SuiteOptions>> runs;
};

int failures = 0;

void run_criterion(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string why;
  for (const auto& [suite, opts] : c.runs) {
    SuiteReport rep = (suite == "kernel") ? verify_kernel(opts) : run_suite(suite, opts);
    if (!rep.passed()) {
      ok = false;
      for (const auto& id : rep.identities)
        if (id.status == "fail") {
          why = suite + "/" + id.id + "[" + id.indices + "] " + id.detail;
          break;
        }
    }
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = secs < c.budget_seconds;
  if (ok && in_budget) {
    std::printf("PASS  criterion %2d  %-58s (%.2fs < %.0fs)\n", c.number, c.name.c_str(), secs,
                c.budget_seconds);
  } else {
    ++failures;
    std::printf("FAIL  criterion %2d  %-58s (%.2fs / %.0fs)%s%s\n", c.number, c.name.c_str(),
                secs, c.budget_seconds, ok ? " [over budget]" : " ", why.c_str());
  }
  std::fflush(stdout);
}

SuiteOptions with_bound(int b) {
  SuiteOptions o;
  o.bound = b;
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "QDYB equation for the dynamical R-matrix", 1.0, {{"qdyb", with_bound(-1)}}},
      {2, "RLL consistency (16 instances)", 5.0, {{"rll", with_bound(-1)}}},
      {3,
       "Hopf-algebroid suite (coassoc deg<=4, antipode/star deg<=3)",
       60.0,
       {{"bialgebroid", with_bound(4)}, {"hopf", with_bound(3)}}},
      {4, "matrix-element cross-check (N<=4) and corep rows (N<=3)", 120.0,
       {{"matelem", with_bound(4)}}},
      {5, "unitarizability, aor, tast, Phi symmetry (N<=3)", 60.0,
       {{"unitarity", with_bound(3)}}},
      {6, "q-Racah orthogonality direct + dual + algebraic (M,N<=4)", 60.0,
       {{"racah-orth", with_bound(4)}}},
      {7, "corep Clebsch-Gordan: cg2, cgo, dcgo, lin (M,N<=3)", 120.0,
       {{"cg-corep", with_bound(3)}}},
      {8, "dynamical decomposition: welldef, pixi, eigvecs, intertwiner", 60.0,
       {{"cg-dynrep", with_bound(3)}}},
      {9, "Biedenharn-Elliott: add2, pi (regularized), conv, p2", 120.0,
       {{"biedenharn", with_bound(3)}}},
      {10, "addition formula and little q-Jacobi limit", 30.0, {{"addition", with_bound(2)}}},
      {11, "Haar functional: h, invariance, Schur, 4-parameter AW", 120.0,
       {{"haar", with_bound(3)}, {"schur", with_bound(2)}}},
      {12, "kernel soundness: idempotence, confluence, rank witnesses", 60.0,
       {{"kernel", with_bound(-1)}}},
  };
  for (const auto& c : cs) run_criterion(c);
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", cs.size());
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
