#pragma once

// Kauffman n-diagrams: noncrossing perfect matchings on 2n boundary points.
// Points 1..n are the bottom row and n+1..2n the top row, both read left to
// right. In a product a*b the diagram of a is stacked below that of b.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tlb/core.hpp"

namespace tlb {

  class Diagram {
   public:
    using Thread = std::pair<int, int>;

    // Validates that `threads` is a noncrossing perfect matching of 1..2n.
    static Diagram from_threads(int n, std::vector<Thread> const& threads);

    // Parses "[(1,2),(3,6),(4,5)]".
    static Diagram parse(int n, std::string_view text);

    static Diagram identity(int n);

    // The hook of h_i: cups on bottom i,i+1 and top i,i+1.
    static Diagram generator(int n, int i);

    int n() const noexcept {
      return _n;
    }

    // Point matched with `point`, both 1-based.
    int partner(int point) const {
      return _partner.at(static_cast<std::size_t>(point - 1)) + 1;
    }

    // Threads (a,b) with a < b, sorted by a.
    std::vector<Thread> threads() const;

    // Number of threads joining the bottom row to the top row.
    int through_strands() const;

    std::string to_string() const;

    bool operator==(Diagram const&) const = default;
    auto operator<=>(Diagram const&) const = default;

   private:
    Diagram(int n, std::vector<int> partner)
        : _n(n), _partner(std::move(partner)) {}

    int              _n;
    std::vector<int> _partner;  // 0-based point -> 0-based partner
  };

  // True iff no two threads cross when both rows are drawn in order.
  bool is_noncrossing(int n, std::vector<Diagram::Thread> const& threads);

  struct Composite {
    int     loops;
    Diagram diagram;

    bool operator==(Composite const&) const = default;
  };

  // Stacks lower under upper, removing and counting closed loops.
  Composite compose_diagrams(Diagram const& lower, Diagram const& upper);

  Composite word_to_diagram(GeneratorWord const& w);

  Diagram normal_form_diagram(NormalForm const& t);

  // The unique normal form whose expanded word yields d with no loops.
  NormalForm diagram_to_normal_form(Diagram const& d);

  class SWord;

  // True iff every thread of d joins equal symbols of the word w1 w2, with
  // w1 labelling the bottom row and w2 the top row.
  bool diagram_fits_pair(Diagram const& d, SWord const& w1, SWord const& w2);

}  // namespace tlb
