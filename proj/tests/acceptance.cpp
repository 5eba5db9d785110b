// One line per acceptance criterion; exits nonzero when any fails or runs
// past its time limit. Criteria without a stated limit get 120 s.

#include "hyperlat/claims.hpp"
#include "hyperlat/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace hyperlat;

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* claims;  // glob over claim ids
  std::size_t expected_claims;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "kernel dimensions", "kernel.*", 9, 5},
    {2, "signatures", "signature.I26,signature.Y555,invariants.I26_Y555,signature.tildeA11,signature.Y322G", 5, 120},
    {3, "null-vector identities", "null.q3", 1, 120},
    {4, "representation suite", "rep.I26.relations,rep.tildeA11.relations,rep.Y322G.relations,rep.compatible", 4, 30},
    {5, "finite group closure", "closure.*", 4, 60},
    {6, "mirror counts", "mirrors.*", 4, 10},
    {7, "rank-5 extension lemma", "lemma.*", 3, 60},
    {8, "orthocomplement of the free 12-gon", "complement.12gon", 1, 120},
    {9, "Vinberg certificates", "vinberg.*,critical.tildeA11,critical.I26", 5, 120},
    {10, "ideal vertices", "cusps.26cell", 1, 120},
    {11, "Weyl geometry", "weyl.12cell,weyl.26cell,weyl.face", 3, 120},
    {12, "diagram combinatorics",
     "diagram.I26.aut_colors,diagram.I26.aut,diagram.I14.aut,diagram.zperp,diagram.I26.Y555,diagram.I26.3A5,"
     "diagram.I26.4D4,diagram.free12gons",
     8, 60},
    {13, "Gauss reduction mod (1+i)", "modtwo.Y322G", 1, 5},
    {14, "polygon numerics", "polygon.rectangle,polygon.closure12,polygon.area_signature12,polygon.random", 4, 120},
};

}  // namespace

int main() {
  RunOptions opt;
  opt.threads = default_threads();
  opt.golden = Golden::load(default_golden_path());

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      Report r = run_claims(c.claims, opt);
      if (r.claims.size() != c.expected_claims) {
        ok = false;
        detail = "matched " + std::to_string(r.claims.size()) + " claims, expected " +
                 std::to_string(c.expected_claims);
      }
      for (const ClaimRecord& rec : r.claims)
        if (rec.status != ClaimStatus::pass) {
          ok = false;
          detail += (detail.empty() ? "" : "; ") + rec.id + " " + to_string(rec.status);
          if (!rec.note.empty()) detail += " (" + rec.note + ")";
        }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!ok) ++failed;
    std::printf("criterion %2d %-4s %7.2f s (limit %3.0f s)  %s%s%s\n", c.number, ok ? "PASS" : "FAIL", seconds,
                c.limit_seconds, c.title, detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
