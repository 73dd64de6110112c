#pragma once

// S-words address single indices of the p^n x p^n matrices: the word
// S_{q_1} ... S_{q_n} picks the index 1 + sum_j (q_j - 1) p^{j-1}, so the
// leftmost symbol is the least significant base-p digit.
//
// Diagonals are distinguished pairs of S-words. For a block h_{i,k} with
// |V| = i - k and |W| = n - i - 1 they are, writing k = 2l or k = 2l + 1,
//
//   k even, I  : ( V (RL)^l L W ,  V L (LR)^l W )
//   k even, II : ( V (LR)^l R W ,  V R (RL)^l W )
//   k odd,  I  : ( V (LR)^l LL W , V RR (LR)^l W )
//   k odd,  II : ( V (RL)^l RR W , V LL (RL)^l W )
//
// and the diagonals of a normal form are obtained by chaining the diagonals
// of its blocks left to right.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlb/core.hpp"
#include "tlb/relation.hpp"

namespace tlb {

  class SWord {
   public:
    SWord(int p, std::vector<int> symbols);

    static SWord repeat(int p, int symbol, std::size_t length) {
      return SWord(p, std::vector<int>(length, symbol));
    }

    // The length-n word addressing `index` in 1..p^n.
    static SWord from_index(Index index, int n, int p);

    // "LRR" (L = S_1, R = S_2) or digits "122".
    static SWord parse(int p, std::string_view text);

    int p() const noexcept {
      return _p;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    std::vector<int> const& symbols() const noexcept {
      return _symbols;
    }
    // 1-based position.
    int at(std::size_t position) const {
      return _symbols.at(position - 1);
    }

    SWord operator+(SWord const& that) const;

    // Symbols at 1-based positions [first, first + count).
    SWord slice(std::size_t first, std::size_t count) const;

    // L/R letters for p = 2, digits otherwise.
    std::string to_string() const;

    bool operator==(SWord const&) const = default;
    auto operator<=>(SWord const&) const = default;

   private:
    int              _p;
    std::vector<int> _symbols;
  };

  Index sword_index(SWord const& w);

  // The two distinct symbols written L and R.
  struct Letters {
    int left  = 1;
    int right = 2;
  };

  enum class Variant { I, II };

  struct DiagonalPair {
    SWord first;
    SWord second;

    IndexPair index_pair() const {
      return {sword_index(first), sword_index(second)};
    }

    // "(W1 | W2) -> (row, col)"
    std::string to_string() const;

    bool operator==(DiagonalPair const&) const = default;
  };

  // The middle segment of the first member of a block diagonal; it has
  // length k + 1.
  SWord block_left_segment(int p, int k, Variant v, Letters letters = {});
  // The middle segment of the second member.
  SWord block_right_segment(int p, int k, Variant v, Letters letters = {});

  DiagonalPair block_diagonal(int          n,
                              int          i,
                              int          k,
                              SWord const& v,
                              SWord const& w,
                              Variant      variant,
                              Letters      letters = {});

  // Both variants; for k = 0 these are (VLW, VLW) and (VRW, VRW).
  std::vector<DiagonalPair> block_diagonals(int          n,
                                            int          i,
                                            int          k,
                                            SWord const& v,
                                            SWord const& w,
                                            Letters      letters = {});

  // The relation of h_{i,k}: the block's own expanded word.
  Relation block_relation(int n, int i, int k, int p);

  // One diagonal of t, built by chaining block diagonals. The tail after
  // position max(t)+1 is all L, free positions are filled with L, and
  // variant choices are tried in the order I before II from the first block
  // on. The unit yields (L^n, L^n).
  DiagonalPair element_witness(NormalForm const& t, int p, Letters letters = {});

  // Every diagonal of t over the full alphabet, as index pairs.
  Relation all_diagonals(NormalForm const& t, int p, Letters letters = {});

  // True iff the index pair of d is an entry of represent(t, p).
  bool is_pair_of(NormalForm const& t, DiagonalPair const& d, int p);
  bool is_pair_of(Relation const& represented, DiagonalPair const& d);

  // All words of the given length over 1..p, in lexicographic order.
  std::vector<SWord> all_swords(int p, std::size_t length);

}  // namespace tlb
