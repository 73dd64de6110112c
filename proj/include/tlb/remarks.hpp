#pragma once

// Exhaustive checks of the structural facts that the triangularity argument
// rests on, each stated for all S-words of the relevant lengths.

#include <optional>
#include <string>
#include <vector>

#include "tlb/diagonals.hpp"

namespace tlb {

  struct RemarkResult {
    // "hook-pairs", "block-exclusive", "block-sources", "fixed-tail",
    // "witness-shape"
    std::string                name;
    bool                       passed  = true;
    std::size_t                checked = 0;
    std::optional<std::string> counterexample;
  };

  struct RemarkReport {
    int                       n;
    int                       p;
    std::vector<RemarkResult> results;

    bool passed() const;
  };

  // (V LL W, V RR W) and its mirror lie in h_i for i = 1 + |V|.
  RemarkResult check_hook_pairs(int n, int p, Letters letters = {});

  // For k >= 2 the second members of the diagonals of h_{i,k} are not second
  // members of any pair of h_{i,k'} with 1 <= k' < k.
  RemarkResult check_block_exclusive(int n, int p, Letters letters = {});

  // Every pair of h_{i,k} whose second member is a diagonal's second member
  // is that diagonal, or its first member is U' S_q W with S_q not L
  // (variant I) or not R (variant II), |U'| = i.
  RemarkResult check_block_sources(int n, int p, Letters letters = {});

  // With max(t) = i all pairs of t share their last n-i-1 symbols, and every
  // such tail occurs.
  RemarkResult check_fixed_tail(int n, int p);

  // With max(t) = i every diagonal of t has the form (V L W, U R W) or
  // (V R W, U L W), |V| = |U| = i.
  RemarkResult check_witness_shape(int n, int p, Letters letters = {});

  // Runs all five; meant for n <= 5.
  RemarkReport remark_predicates(int n, int p, Letters letters = {});

}  // namespace tlb
