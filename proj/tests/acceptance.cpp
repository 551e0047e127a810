// Acceptance gate: each criterion prints exactly one PASS/FAIL line.
#include "aq/bar.hpp"
#include "aq/fixtures.hpp"
#include "aq/report.hpp"
#include "aq/sseq.hpp"
#include "aq/tower.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

using namespace aq;

namespace {

int failures = 0;

void line(int k, const std::string& what, bool ok, const std::string& detail,
          double secs) {
  if (!ok) ++failures;
  std::ostringstream s;
  s << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << what;
  if (!detail.empty()) s << " [" << detail << "]";
  s << " (" << static_cast<long>(secs * 1000) << " ms)";
  std::cout << s.str() << "\n" << std::flush;
}

template <typename Fn>
void criterion(int k, const std::string& what, Fn body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  line(k, what, ok, detail, secs);
}

std::string first_issue(const ValidationReport& rep) {
  if (rep.empty()) return "";
  return rep.front().check + " @ " + rep.front().witness;
}

}  // namespace

int main() {
  const Field Q = Field::rationals();
  const Field F2 = Field::prime(2);
  const Field F3 = Field::prime(3);

  criterion(1, "appendix homotopy identities hold exactly (q<=3, w<=3)",
            [&](std::string& detail) {
    for (const Field& F : {Q, F2}) {
      for (auto make : {+[](const Field& f) { return make_K(f, 1, 4, 3); },
                        +[](const Field& f) { return make_free_one(f, 4, 3); }}) {
        SimplicialAlgebra X = make(F);
        auto rep = verify_appendix(X, 3, 3);
        if (!rep.empty()) {
          detail = X.name() + "/" + F.name() + ": " + first_issue(rep);
          return false;
        }
      }
    }
    return true;
  });

  criterion(2, "tower basis spans equal the kernel intersections (r<=3, n<=3, w<=4)",
            [&](std::string& detail) {
    for (auto make : {+[](const Field& f) { return make_K(f, 1, 3, 4); },
                      +[](const Field& f) { return make_free_one(f, 3, 4); }}) {
      SimplicialAlgebra X = make(Q);
      for (int r = 1; r <= 3; ++r) {
        BarObject brX(X, r);
        for (int n = 0; n <= 3; ++n)
          for (int w = 0; w <= 4; ++w)
            if (!(tower_span(brX, n, w) == tower_kernel_oracle(brX, n, w))) {
              detail = X.name() + " (r=" + std::to_string(r) + ", n=" +
                       std::to_string(n) + ", w=" + std::to_string(w) + ")";
              return false;
            }
      }
    }
    return true;
  });

  criterion(3, "composite structure maps land in the matching power (r<=3)",
            [&](std::string& detail) {
    for (auto make : {+[](const Field& f) { return make_K(f, 1, 2, 4); },
                      +[](const Field& f) { return make_free_one(f, 2, 4); }}) {
      SimplicialAlgebra X = make(Q);
      auto rep = check_delta_powers(X, 3);
      if (!rep.empty()) {
        detail = X.name() + ": " + first_issue(rep);
        return false;
      }
    }
    return true;
  });

  criterion(4, "symmetric coinvariants are (p-1)-connected for p in {2,3}",
            [&](std::string& detail) {
    struct Case { Field F; int p; };
    for (auto& c : std::vector<Case>{{Q, 2}, {F2, 2}, {Q, 3}, {F2, 3}, {F3, 3}}) {
      SimplicialAlgebra A = make_K(c.F, 1, 3, 3);
      BlockSpace QbA = power_quotient_space(BarObject(A, 1), 1);
      DoldPuppeVerdict v = dold_puppe_check(QbA, c.p, c.p - 1);
      if (!v.pass) {
        detail = c.F.name() + ", p=" + std::to_string(c.p);
        return false;
      }
    }
    return true;
  });

  criterion(5, "derived powers are (s-t)-connected for (t,s) in {1,2}x{2,3} (w<=4)",
            [&](std::string& detail) {
    for (auto make : {+[](const Field& f) { return make_K(f, 1, 3, 4); },
                      +[](const Field& f) { return make_free_one(f, 3, 4); }}) {
      SimplicialAlgebra A = make(Q);
      for (auto [t, s] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
        int q_max = std::min(s - t + 1, A.max_degree() - 1);
        for (auto& row : connectivity_report(A, t, s, q_max))
          if (row.falsified) {
            detail = A.name() + " (t=" + std::to_string(t) + ", s=" +
                     std::to_string(s) + ", q=" + std::to_string(row.q) +
                     ", w=" + std::to_string(row.w) + "): dim=" +
                     std::to_string(row.dim);
            return false;
          }
      }
    }
    return true;
  });

  criterion(6, "the tower comparison map vanishes on homotopy (t=2, q<=1, w<=4)",
            [&](std::string& detail) {
    std::ostringstream info;
    for (auto make : {+[](const Field& f) { return make_K(f, 1, 2, 4); },
                      +[](const Field& f) { return make_free_one(f, 2, 4); }}) {
      SimplicialAlgebra X = make(Q);
      for (int q = 0; q <= 1; ++q) {
        ConvergenceVerdict v = convergence_check(X, 2, q);
        if (!v.all_zero()) {
          detail = X.name() + " (q=" + std::to_string(q) + ")";
          return false;
        }
        int src = 0, tgt = 0;
        for (auto& b : v.blocks) {
          src += b.src_dim;
          tgt += b.tgt_dim;
        }
        info << X.name() << " q=" << q << ": src=" << src << " tgt=" << tgt
             << (v.vacuous() ? " (vacuous)" : "") << "; ";
      }
    }
    detail = info.str();
    return true;
  });

  criterion(7, "all comparison-map variants induce one map on homotopy (n<=3, q<=2)",
            [&](std::string& detail) {
    for (auto make : {+[](const Field& f) { return make_K(f, 1, 3, 3); },
                      +[](const Field& f) { return make_free_one(f, 3, 3); }}) {
      SimplicialAlgebra X = make(Q);
      for (int n = 2; n <= 3; ++n) {
        auto rep = twisting_check(X, n, 2);
        if (!rep.empty()) {
          detail = X.name() + " (n=" + std::to_string(n) + "): " + first_issue(rep);
          return false;
        }
      }
    }
    return true;
  });

  criterion(8, "filtration quotients match the coinvariants (p<=3, q<=2, w<=4)",
            [&](std::string& detail) {
    SimplicialAlgebra A = make_K(Q, 1, 3, 4);
    for (int p = 1; p <= 3; ++p) {
      auto rep = power_quotient_check(A, p, 2);
      if (!rep.empty()) {
        detail = "p=" + std::to_string(p) + ": " + first_issue(rep);
        return false;
      }
    }
    for (int s : {2, 3}) {
      auto rep = e0_check(A, s, 4, 2);
      if (!rep.empty()) {
        detail = "s=" + std::to_string(s) + ": " + first_issue(rep);
        return false;
      }
    }
    // rows below the filtration stage are absent by construction; the page
    // must also vanish strictly above the weight
    E0Page page = e0_page(A, 2, 4, 2);
    for (auto& e : page.entries)
      if (e.p > e.w && e.dim != 0) {
        detail = "nonzero entry above the weight";
        return false;
      }
    return true;
  });

  criterion(9, "sanity: classifying-space homotopy, mutation rejection, determinism",
            [&](std::string& detail) {
    for (int n = 0; n <= 3; ++n) {
      SimplicialAlgebra K = make_K(Q, n, 4, 2);
      PiTable pi = homotopy_groups(K.blocks(), 3, 2);
      for (auto& [key, dim] : pi)
        if (dim != ((key.first == n && key.second == 1) ? 1 : 0)) {
          detail = "homotopy of the n=" + std::to_string(n) + " model";
          return false;
        }
    }
    auto rep = make_mutated_K2(Q, 4, 2).validate();
    bool named = false;
    for (auto& issue : rep)
      if (issue.check.find("d_1 d_3 = d_2 d_1") != std::string::npos) named = true;
    if (!named) {
      detail = "mutated fixture not rejected by name";
      return false;
    }
    Report a("determinism"), b("determinism");
    a.meta("k", "v");
    b.meta("k", "v");
    a.add({"beta", "1"});
    a.add({"alpha", "2"});
    b.add({"alpha", "2"});
    b.add({"beta", "1"});
    for (const char* fmt : {"csv", "text", "human"})
      if (a.render(fmt) != b.render(fmt)) {
        detail = std::string("report bytes differ for ") + fmt;
        return false;
      }
    return true;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << failures << " failing criteria)\n";
  return failures == 0 ? 0 : 1;
}
