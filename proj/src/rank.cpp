#include "tlb/rank.hpp"

#include <map>

namespace tlb {

  namespace {

    using Row = std::vector<std::pair<Index, BigInt>>;

    // a*x - b*y, both sorted by coordinate, zeros dropped.
    Row combine(BigInt const& a, Row const& x, BigInt const& b, Row const& y) {
      Row  out;
      auto i = x.begin(), j = y.begin();
      while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
          out.emplace_back(i->first, a * i->second);
          ++i;
        } else if (i == x.end() || j->first < i->first) {
          out.emplace_back(j->first, -b * j->second);
          ++j;
        } else {
          BigInt v = a * i->second - b * j->second;
          if (v != 0) {
            out.emplace_back(i->first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    void remove_content(Row& x) {
      BigInt g = 0;
      for (auto const& [c, v] : x) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
        if (g == 1) {
          return;
        }
      }
      if (g > 1) {
        for (auto& [c, v] : x) {
          v /= g;
        }
      }
    }

  }  // namespace

  std::size_t exact_rank(std::vector<SparseVector> const& vectors) {
    std::map<Index, Row> pivots;  // leading coordinate -> echelon row
    for (auto const& vec : vectors) {
      Row x;
      x.reserve(vec.size());
      for (auto [c, v] : vec) {
        if (v != 0) {
          x.emplace_back(c, BigInt(v));
        }
      }
      while (!x.empty()) {
        auto it = pivots.find(x.front().first);
        if (it == pivots.end()) {
          remove_content(x);
          pivots.emplace(x.front().first, std::move(x));
          break;
        }
        Row const& piv  = it->second;
        BigInt     lead = x.front().second;
        x               = combine(piv.front().second, x, lead, piv);
        remove_content(x);
      }
    }
    return pivots.size();
  }

  SparseVector flatten(Relation const& r) {
    SparseVector out;
    out.reserve(r.size());
    for (auto [row, col] : r.pairs()) {
      out.emplace_back((row - 1) * r.cols() + (col - 1), 1);
    }
    return out;
  }

}  // namespace tlb
