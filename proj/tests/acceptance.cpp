// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tlb/brauer.hpp"
#include "tlb/diagonals.hpp"
#include "tlb/remarks.hpp"
#include "tlb/verify.hpp"

using namespace tlb;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string note;

    void fail(std::string why) {
      if (ok) {
        note = std::move(why);
      }
      ok = false;
    }
  };

  using PairSet = std::set<IndexPair>;

  PairSet pairs_of(Relation const& r) {
    return PairSet(r.pairs().begin(), r.pairs().end());
  }

  std::string np(int n, int p) {
    return "n=" + std::to_string(n) + ",p=" + std::to_string(p);
  }

  // Runs `body`, fails it when it takes longer than `limit_ms` (0 = none),
  // prints one line and returns the verdict.
  bool criterion(int                       number,
                 std::string const&        title,
                 double                    limit_ms,
                 std::function<Outcome()> const& body) {
    auto    start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (std::exception const& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (limit_ms > 0 && ms > limit_ms) {
      out.fail("took " + std::to_string(ms) + " ms, limit "
               + std::to_string(limit_ms) + " ms");
    }
    std::printf("criterion %2d: %s  %-58s %10.1f ms%s%s\n", number,
                out.ok ? "PASS" : "FAIL", title.c_str(), ms,
                out.note.empty() ? "" : "  ", out.note.c_str());
    std::fflush(stdout);
    return out.ok;
  }

  Outcome failures_to_outcome(std::vector<std::string> const& failures,
                              std::string const&              where) {
    Outcome o;
    if (!failures.empty()) {
      o.fail(where + ": " + std::to_string(failures.size())
             + " failures, first: " + failures.front());
    }
    return o;
  }

}  // namespace

int main() {
  bool all = true;

  all &= criterion(1, "basis cardinality n=2..8", 1000, [] {
    Outcome                 o;
    std::vector<int> const  expected{2, 5, 14, 42, 132, 429, 1430};
    for (int n = 2; n <= 8; ++n) {
      auto size = enumerate_basis(n).size();
      if (BigInt(size) != catalan(n) || size != std::size_t(expected[n - 2])) {
        o.fail("n=" + std::to_string(n) + " gives " + std::to_string(size));
      }
    }
    return o;
  });

  all &= criterion(2, "E_p rows for p=2,3", 0, [] {
    Outcome o;
    if (to_dense(e_row(2)) != "1 0 0 1\n") {
      o.fail("p=2: " + to_dense(e_row(2)));
    }
    if (to_dense(e_row(3)) != "1 0 0 0 1 0 0 0 1\n") {
      o.fail("p=3: " + to_dense(e_row(3)));
    }
    return o;
  });

  all &= criterion(3, "figure edge sets of h1, h2, h2h1 at n=3,p=2", 0, [] {
    Outcome       o;
    PairSet const h1{{1, 1}, {1, 4}, {4, 1}, {4, 4}, {5, 5}, {5, 8}, {8, 5}, {8, 8}};
    PairSet const h2{{1, 1}, {1, 7}, {7, 1}, {7, 7}, {2, 2}, {2, 8}, {8, 2}, {8, 8}};
    PairSet const h2h1{{1, 1}, {1, 4}, {2, 5}, {2, 8}, {7, 1}, {7, 4}, {8, 5}, {8, 8}};
    if (pairs_of(generator_matrix(3, 1, 2)) != h1) {
      o.fail("h1 differs");
    }
    if (pairs_of(generator_matrix(3, 2, 2)) != h2) {
      o.fail("h2 differs");
    }
    if (pairs_of(represent(NormalForm::parse("0,2"), 2)) != h2h1) {
      o.fail("h2h1 differs");
    }
    return o;
  });

  all &= criterion(4, "generator identities n<=5, p in {2,3}", 30000, [] {
    Outcome o;
    for (int p : {2, 3}) {
      for (int n = 2; n <= 5 && o.ok; ++n) {
        o = failures_to_outcome(check_generator_identities(GeneratorSet(n, p)), np(n, p));
      }
    }
    return o;
  });

  all &= criterion(5, "normal-form products are 0-1, n<=4", 0, [] {
    Outcome o;
    for (int p : {2, 3}) {
      for (int n = 2; n <= 4 && o.ok; ++n) {
        o = failures_to_outcome(check_reduced_word_purity(GeneratorSet(n, p)), np(n, p));
      }
    }
    return o;
  });

  all &= criterion(6, "diagram products match matrix products, n<=4", 60000, [] {
    Outcome o;
    for (int p : {2, 3}) {
      for (int n = 2; n <= 4 && o.ok; ++n) {
        o = failures_to_outcome(check_product_consistency(GeneratorSet(n, p)), np(n, p));
      }
    }
    return o;
  });

  all &= criterion(7, "block diagonals and element witnesses are pairs", 0, [] {
    Outcome o;
    for (auto [p, n_max] : {std::pair{2, 6}, std::pair{3, 4}}) {
      for (int n = 2; n <= n_max; ++n) {
        for (int i = 1; i < n; ++i) {
          for (int k = 0; k <= i; ++k) {
            auto rel = block_relation(n, i, k, p);
            for (auto const& v : all_swords(p, std::size_t(i - k))) {
              for (auto const& w : all_swords(p, std::size_t(n - i - 1))) {
                for (auto const& d : block_diagonals(n, i, k, v, w)) {
                  if (!rel.contains(d.index_pair())) {
                    o.fail("block (" + std::to_string(i) + "," + std::to_string(k)
                           + ") at " + np(n, p) + ": " + d.to_string());
                  }
                }
              }
            }
          }
        }
        GeneratorSet gens(n, p);
        for (auto const& t : enumerate_basis(n)) {
          auto w = element_witness(t, p);
          if (!represent(gens, t).contains(w.index_pair())) {
            o.fail("[" + t.to_string() + "] at " + np(n, p) + ": " + w.to_string());
          }
        }
      }
    }
    return o;
  });

  all &= criterion(8, "triangularity n<=6 p=2, n<=4 p=3, with mutations", 60000, [] {
    Outcome o;
    for (auto [p, n_max] : {std::pair{2, 6}, std::pair{3, 4}}) {
      for (int n = 2; n <= n_max; ++n) {
        auto rep = verify_triangularity(n, p);
        if (!rep.passed()) {
          o.fail(np(n, p) + ": " + rep.first_failure());
        }
      }
    }
    // one generator entry removed: h1 loses the witness of [1,0]
    GeneratorSet bad(3, 2);
    bad.replace(1, bad.relation(1).flipped(1, 4));
    auto corrupted = verify_triangularity(
        enumerate_basis(3), [&bad](NormalForm const& t) { return represent(bad, t); }, 2);
    if (corrupted.passed()) {
      o.fail("corrupted generator still passes");
    }
    // the order reversed
    GeneratorSet gens(4, 2);
    auto         order = enumerate_basis(4);
    std::reverse(order.begin(), order.end());
    auto permuted = verify_triangularity(
        order, [&gens](NormalForm const& t) { return represent(gens, t); }, 2);
    if (permuted.passed()) {
      o.fail("reversed order still passes");
    }
    return o;
  });

  all &= criterion(9, "rank = catalan(n) for n<=5, p in {2,3}; agrees", 300000, [] {
    Outcome o;
    for (int p : {2, 3}) {
      for (int n = 2; n <= 5; ++n) {
        auto rank       = independence_check(n, p);
        bool triangular = verify_triangularity(n, p).passed();
        if (!rank.passed()) {
          o.fail(np(n, p) + ": rank " + std::to_string(rank.rank) + " of "
                 + std::to_string(rank.count));
        }
        if (triangular != rank.passed()) {
          o.fail(np(n, p) + ": triangularity and rank disagree");
        }
      }
    }
    return o;
  });

  all &= criterion(10, "structural predicates n<=4, p=2", 0, [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
      for (auto const& r : remark_predicates(n, 2).results) {
        if (!r.passed) {
          o.fail(np(n, 2) + " " + r.name + ": " + r.counterexample.value_or(""));
        }
      }
    }
    return o;
  });

  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
