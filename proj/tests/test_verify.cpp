#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "tlb/errors.hpp"
#include "tlb/rank.hpp"
#include "tlb/verify.hpp"

using namespace tlb;

namespace {

  NormalForm nf(char const* text) {
    return NormalForm::parse(text);
  }

  std::vector<std::vector<std::int64_t>> densify(std::vector<SparseVector> const& vs,
                                                 std::size_t length) {
    std::vector<std::vector<std::int64_t>> out;
    for (auto const& v : vs) {
      std::vector<std::int64_t> row(length, 0);
      for (auto [c, x] : v) {
        row[c] = x;
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  std::vector<SparseVector> random_vectors(std::mt19937& rng,
                                           std::size_t   count,
                                           std::size_t   length,
                                           int           range) {
    std::uniform_int_distribution<int> value(-range, range);
    std::bernoulli_distribution        sparse(0.6);
    std::vector<SparseVector>          out;
    for (std::size_t j = 0; j < count; ++j) {
      SparseVector v;
      for (std::size_t c = 0; c < length; ++c) {
        int x = sparse(rng) ? 0 : value(rng);
        if (x != 0) {
          v.emplace_back(c, x);
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  SuiteCase const* find_case(SuiteReport const& r, std::string const& suite,
                             std::string const& key) {
    for (auto const& s : r.suites) {
      if (s.name == suite) {
        for (auto const& c : s.cases) {
          if (c.key == key) {
            return &c;
          }
        }
      }
    }
    return nullptr;
  }

}  // namespace

TEST_CASE("exact_rank examples") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{{0, 1}}, {{1, 1}}}) == 2);
  CHECK(exact_rank({{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}) == 1);
  CHECK(exact_rank({{}, {}}) == 0);
  // (1,2,3), (4,5,6), (7,8,9) span a plane
  CHECK(exact_rank({{{0, 1}, {1, 2}, {2, 3}},
                    {{0, 4}, {1, 5}, {2, 6}},
                    {{0, 7}, {1, 8}, {2, 9}}})
        == 2);
}

TEST_CASE("exact_rank agrees with rational elimination") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t count  = 1 + rng() % 8;
    std::size_t length = 1 + rng() % 8;
    auto        vs     = random_vectors(rng, count, length, 3);
    // build some dependent rows on purpose
    if (count >= 3 && trial % 2 == 0) {
      SparseVector sum;
      auto dense = densify({vs[0], vs[1]}, length);
      for (std::size_t c = 0; c < length; ++c) {
        auto x = 2 * dense[0][c] - 3 * dense[1][c];
        if (x != 0) {
          sum.emplace_back(c, x);
        }
      }
      vs[2] = sum;
    }
    CHECK(exact_rank(vs) == oracle::rational_rank(densify(vs, length)));
  }
}

TEST_CASE("exact_rank is invariant under permutation and scaling") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    auto vs   = random_vectors(rng, 1 + rng() % 7, 1 + rng() % 7, 4);
    auto rank = exact_rank(vs);
    auto perm = vs;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(exact_rank(perm) == rank);
    auto scaled = vs;
    std::uniform_int_distribution<int> factor(1, 9);
    for (auto& v : scaled) {
      int f = factor(rng) * (rng() % 2 ? 1 : -1);
      for (auto& [c, x] : v) {
        x *= f;
      }
    }
    CHECK(exact_rank(scaled) == rank);
    CHECK(rank <= std::min<std::size_t>(vs.size(), 7));
  }
}

TEST_CASE("flatten") {
  Relation r(2, 3, {{1, 3}, {2, 1}});
  CHECK(flatten(r) == SparseVector{{2, 1}, {3, 1}});
}

TEST_CASE("independence_check examples") {
  auto a = independence_check(2, 2);
  CHECK(a.rank == 2);
  CHECK(a.count == 2);
  CHECK(a.passed());
  CHECK(independence_check(3, 2).rank == 5);
  CHECK(independence_check(3, 3).rank == 5);
  CHECK(independence_check(4, 2).passed());
  CHECK_THROWS_AS(independence_check(11, 2), resource_error);
  Budget tight;
  tight.max_vector_length = 100;
  CHECK_THROWS_AS(independence_check(4, 2, tight), resource_error);
}

TEST_CASE("independence agrees with the dense rational rank") {
  for (int p = 2; p <= 3; ++p) {
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::vector<std::int64_t>> rows;
      for (auto const& t : enumerate_basis(n)) {
        std::vector<std::int64_t> row;
        auto dense = oracle::word(n, p, expand_to_word(t).letters());
        for (auto const& r : dense) {
          row.insert(row.end(), r.begin(), r.end());
        }
        rows.push_back(std::move(row));
      }
      CHECK(oracle::rational_rank(rows) == independence_check(n, p).rank);
    }
  }
}

TEST_CASE("a degenerate generator table loses rank") {
  GeneratorSet gens(3, 2);
  gens.replace(2, gens.relation(1));  // h2 := h1
  auto r = independence_check(gens);
  CHECK(r.rank < r.count);
  CHECK_FALSE(r.passed());
}

TEST_CASE("bruteforce_witness") {
  auto a = bruteforce_witness(nf("0,2"), 2);
  REQUIRE(a);
  // the valid choices for (0,2) include (2,5) and (7,4)
  GeneratorSet gens(3, 2);
  std::vector<Relation> earlier;
  for (auto const& s : enumerate_basis(3)) {
    if (s == nf("0,2")) {
      break;
    }
    earlier.push_back(represent(gens, s));
  }
  std::set<IndexPair> valid;
  auto const rel = represent(gens, nf("0,2"));
  for (auto const& rc : rel.pairs()) {
    if (std::none_of(earlier.begin(), earlier.end(),
                     [&](auto const& r) { return r.contains(rc); })) {
      valid.insert(rc);
    }
  }
  CHECK(valid.count({2, 5}) == 1);
  CHECK(valid.count({7, 4}) == 1);
  CHECK(valid.count(a->index_pair()) == 1);
  CHECK(a->index_pair() == *valid.begin());

  CHECK(bruteforce_witness(nf("0,0"), 2)->index_pair() == IndexPair{1, 1});
  auto b = bruteforce_witness(nf("1"), 2);
  REQUIRE(b);
  CHECK((b->index_pair() == IndexPair{1, 4} || b->index_pair() == IndexPair{4, 1}));
}

TEST_CASE("canonical witnesses are among the brute-force witnesses") {
  for (int n = 2; n <= 5; ++n) {
    GeneratorSet gens(n, 2);
    auto         basis = enumerate_basis(n);
    std::vector<Relation> rels;
    for (auto const& t : basis) {
      rels.push_back(represent(gens, t));
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto brute = bruteforce_witness(basis[j], 2);
      REQUIRE(brute);
      auto w = element_witness(basis[j], 2).index_pair();
      CHECK(rels[j].contains(w));
      for (std::size_t e = 0; e < j; ++e) {
        CHECK_FALSE(rels[e].contains(w));
        CHECK_FALSE(rels[e].contains(brute->index_pair()));
      }
    }
  }
}

TEST_CASE("verify_triangularity examples") {
  auto two = verify_triangularity(2, 2);
  CHECK(two.passed());
  REQUIRE(two.records.size() == 2);
  CHECK(two.records[1].witness.index_pair() == IndexPair{1, 4});

  auto three = verify_triangularity(3, 2);
  CHECK(three.passed());
  CHECK(three.records.back().witness.index_pair() == IndexPair{2, 5});
  CHECK(three.first_failure().empty());
}

TEST_CASE("verify_triangularity over the grid, with and without threads") {
  for (int p = 2; p <= 3; ++p) {
    for (int n = 2; n <= (p == 2 ? 6 : 4); ++n) {
      auto one  = verify_triangularity(n, p, 1);
      auto four = verify_triangularity(n, p, 4);
      CHECK(one.passed());
      REQUIRE(one.records.size() == four.records.size());
      for (std::size_t j = 0; j < one.records.size(); ++j) {
        CHECK(one.records[j].element == four.records[j].element);
        CHECK(one.records[j].witness == four.records[j].witness);
      }
    }
  }
}

TEST_CASE("triangularity fails when the order is permuted") {
  GeneratorSet gens(3, 2);
  auto         provider = [&gens](NormalForm const& t) { return represent(gens, t); };
  auto         order    = enumerate_basis(3);
  std::reverse(order.begin(), order.end());
  auto rep = verify_triangularity(order, provider, 2);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.first_failure().empty());

  // moving the unit last puts its witness (1,1) inside every predecessor
  order = enumerate_basis(4);
  std::rotate(order.begin(), order.begin() + 1, order.end());
  rep = verify_triangularity(order, [](NormalForm const& t) { return represent(t, 2); }, 2);
  CHECK_FALSE(rep.passed());
  CHECK(rep.records.back().violation_count == 13);
  CHECK(rep.records.back().violations.size() == kMaxViolations);

  // swapping the unit with h1
  order = enumerate_basis(3);
  std::swap(order[0], order[1]);
  CHECK_FALSE(verify_triangularity(order, provider, 2).passed());
}

TEST_CASE("triangularity fails when a generator entry is corrupted") {
  GeneratorSet gens(2, 2);
  gens.replace(1, gens.relation(1).flipped(1, 4));
  auto rep = verify_triangularity(
      enumerate_basis(2), [&gens](NormalForm const& t) { return represent(gens, t); }, 2);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.records[1].witness_is_pair);
  CHECK(rep.first_failure().find("not one of its pairs") != std::string::npos);
}

TEST_CASE("cross-checks pass on the true generators") {
  for (int p = 2; p <= 3; ++p) {
    for (int n = 2; n <= 4; ++n) {
      GeneratorSet gens(n, p);
      CHECK(check_generator_identities(gens).empty());
      CHECK(check_reduced_word_purity(gens).empty());
      CHECK(check_product_consistency(gens).empty());
      CHECK(check_diagram_round_trip(gens).empty());
    }
  }
}

TEST_CASE("cross-checks catch a corrupted generator") {
  GeneratorSet gens(3, 2);
  gens.replace(1, gens.relation(1).flipped(1, 4));
  auto identities = check_generator_identities(gens);
  REQUIRE_FALSE(identities.empty());
  bool named = std::any_of(identities.begin(), identities.end(), [](auto const& m) {
    return m.find("idempotent") != std::string::npos
           || m.find("square") != std::string::npos
           || m.find("absorb") != std::string::npos;
  });
  CHECK(named);
  CHECK_FALSE(check_product_consistency(gens).empty());
  CHECK_FALSE(check_diagram_round_trip(gens).empty());

  GeneratorSet extra(3, 3);
  extra.replace(2, extra.relation(2).flipped(2, 3));
  CHECK_FALSE(check_generator_identities(extra).empty());
}

TEST_CASE("budget checks") {
  CHECK_NOTHROW(check_relation_budget(7, 2, {}));
  CHECK_THROWS_AS(check_relation_budget(30, 2, {}), resource_error);
  Budget small;
  small.max_bytes = 1000;
  CHECK_THROWS_AS(check_relation_budget(4, 2, small), resource_error);
  CHECK_THROWS_AS(verify_triangularity(4, 2, 1, small), resource_error);
  try {
    check_relation_budget(30, 2, {});
  } catch (resource_error const& e) {
    CHECK(std::string(e.what()).find("max-bytes") != std::string::npos);
  }
}

TEST_CASE("full_suite passes on small grids") {
  SuiteConfig c;
  c.n_max  = 4;
  c.primes = {2};
  auto r   = full_suite(c);
  CHECK(r.passed());
  REQUIRE(r.suites.size() == 8);
  for (auto const& s : r.suites) {
    CHECK(s.cases.size() == 3);
  }
  auto tri = find_case(r, "triangularity", "n=3,p=2");
  REQUIRE(tri);
  CHECK(tri->result.status == "pass");
  REQUIRE(tri->result.witness);
  CHECK(tri->result.witness->find("(2,5)") != std::string::npos);

  c.n_max  = 3;
  c.primes = {2, 3};
  CHECK(full_suite(c).passed());
}

TEST_CASE("full_suite reports a corrupted generator") {
  SuiteConfig c;
  c.n_max   = 3;
  c.primes  = {2};
  c.corrupt = [](GeneratorSet& g) { g.replace(1, g.relation(1).flipped(1, 1)); };
  auto r    = full_suite(c);
  CHECK_FALSE(r.passed());
  auto gi = find_case(r, "generator-identities", "n=3,p=2");
  REQUIRE(gi);
  CHECK(gi->result.status == "fail");
  CHECK(to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("full_suite respects the budgets") {
  SuiteConfig c;
  c.n_max = 30;
  CHECK_THROWS_AS(full_suite(c), resource_error);
  c.n_max                    = 4;
  c.budget.max_vector_length = 1 << 7;
  auto r                     = full_suite(c);
  auto ind                   = find_case(r, "independence", "n=4,p=2");
  REQUIRE(ind);
  CHECK(ind->result.status == "skipped");
  CHECK(r.passed());
  SuiteConfig one;
  one.n_max = 1;
  CHECK_THROWS_AS(full_suite(one), domain_error);
}

TEST_CASE("report serialization") {
  SuiteConfig c;
  c.n_max  = 3;
  c.primes = {2, 3};
  auto r   = full_suite(c);
  auto js  = to_json(r);
  CHECK(suite_report_from_json(js) == r);
  CHECK(js.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(js.find("\"triangularity\"") != std::string::npos);
  CHECK(to_json(suite_report_from_json(js)) == js);

  auto text = to_text(r);
  CHECK(text.find("PASS") != std::string::npos);
  auto csv = to_csv(r);
  CHECK(csv.rfind("suite,case,status,timing_ms,detail,witness\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 8 * 4);
  CHECK_THROWS(suite_report_from_json("{\"n_max\": 3}"));
  CHECK_THROWS(suite_report_from_json("not json"));
}
