#pragma once

// Faithfulness certification. Two independent routes:
//
//  * triangularity: each basis element t has a diagonal entry that is a 1 of
//    t's matrix and a 0 of every matrix earlier in the right-lexicographic
//    order, which forces linear independence;
//  * an exact rank computation over the flattened matrices.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlb/brauer.hpp"
#include "tlb/diagonals.hpp"

namespace tlb {

  struct Budget {
    // Longest flattened vector the rank oracle accepts (p^{2n}).
    std::uint64_t max_vector_length = std::uint64_t(1) << 20;
    // Estimated bytes held while all basis relations are in memory.
    std::uint64_t max_bytes = std::uint64_t(1) << 30;
  };

  // Throws resource_error unless catalan(n) relations of p^n pairs fit.
  void check_relation_budget(int n, int p, Budget const& budget);

  struct ElementRecord {
    NormalForm   element;
    DiagonalPair witness;
    bool         witness_is_pair = false;
    // Earlier elements containing the witness, at most kMaxViolations.
    std::vector<NormalForm> violations;
    std::size_t             violation_count = 0;

    bool passed() const {
      return witness_is_pair && violation_count == 0;
    }
  };

  inline constexpr std::size_t kMaxViolations = 10;

  struct TriangularityReport {
    int                        n;
    int                        p;
    std::vector<ElementRecord> records;

    bool passed() const;
    // First failing record, described; empty when passed().
    std::string first_failure() const;
  };

  using RelationProvider = std::function<Relation(NormalForm const&)>;

  TriangularityReport verify_triangularity(int      n,
                                           int      p,
                                           unsigned jobs   = 1,
                                           Budget   budget = {});

  // Checks each element of `order` against the elements before it in
  // `order`, whatever that order is.
  TriangularityReport verify_triangularity(std::vector<NormalForm> const& order,
                                           RelationProvider const& relation_of,
                                           int                     p,
                                           unsigned                jobs = 1);

  struct RankReport {
    int         n;
    int         p;
    std::size_t count;
    std::size_t rank;

    bool passed() const {
      return rank == count;
    }
  };

  RankReport independence_check(int n, int p, Budget budget = {});
  RankReport independence_check(GeneratorSet const& gens, Budget budget = {});

  // First pair of represent(t, p) in row-major order that is absent from
  // every earlier basis element.
  std::optional<DiagonalPair> bruteforce_witness(NormalForm const& t, int p);

  // Generator identities under relation composition and matrix product.
  // Returns one message per failing instance.
  std::vector<std::string> check_generator_identities(GeneratorSet const& gens);

  // Normal-form words multiply to 0-1 matrices equal to their relations.
  std::vector<std::string> check_reduced_word_purity(GeneratorSet const& gens);

  // matrix(a) matrix(b) = p^m matrix(c) where a*b = p^m c diagrammatically.
  std::vector<std::string> check_product_consistency(GeneratorSet const& gens);

  // Normal form -> diagram -> normal form is the identity, diagrams are
  // distinct, and each diagram's relation equals the matrix relation.
  std::vector<std::string> check_diagram_round_trip(GeneratorSet const& gens);

  struct CaseResult {
    std::string                status;  // "pass", "fail" or "skipped"
    std::string                detail;
    std::optional<std::string> witness;
    double                     timing_ms = 0;

    bool operator==(CaseResult const&) const = default;
  };

  struct SuiteCase {
    std::string key;  // "n=3,p=2"
    CaseResult  result;

    bool operator==(SuiteCase const&) const = default;
  };

  struct Suite {
    std::string            name;
    std::vector<SuiteCase> cases;

    bool operator==(Suite const&) const = default;
  };

  struct SuiteReport {
    int                n_max = 0;
    std::vector<int>   primes;
    std::vector<Suite> suites;

    bool passed() const;
    bool operator==(SuiteReport const&) const = default;
  };

  struct SuiteConfig {
    int              n_max = 4;
    std::vector<int> primes{2};
    Budget           budget;
    unsigned         jobs               = 1;
    int              consistency_n_max  = 4;
    int              remarks_n_max      = 5;
    int              purity_n_max       = 5;
    // Applied to every generator table before the checks use it.
    std::function<void(GeneratorSet&)> corrupt;
  };

  // Throws resource_error before doing any work if the largest case is over
  // budget.
  SuiteReport full_suite(SuiteConfig const& config);

  std::string       to_json(SuiteReport const& report, int indent = 2);
  SuiteReport       suite_report_from_json(std::string_view text);
  std::string       to_text(SuiteReport const& report);
  std::string       to_csv(SuiteReport const& report);

}  // namespace tlb
