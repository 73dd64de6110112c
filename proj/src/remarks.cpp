#include "tlb/remarks.hpp"

#include <algorithm>

#include "tlb/brauer.hpp"
#include "tlb/errors.hpp"

namespace tlb {

  namespace {

    void fail(RemarkResult& r, std::string what) {
      if (r.passed) {
        r.passed         = false;
        r.counterexample = std::move(what);
      }
    }

    std::string pair_text(Index row, Index col, int n, int p) {
      return DiagonalPair{SWord::from_index(row, n, p),
                          SWord::from_index(col, n, p)}
          .to_string();
    }

    std::string block_name(int i, int k) {
      return "h_{" + std::to_string(i) + "," + std::to_string(k) + "}";
    }

    // Columns of r as a membership table indexed 1..cols.
    std::vector<bool> columns_of(Relation const& r) {
      std::vector<bool> out(r.cols() + 1, false);
      for (auto [row, col] : r.pairs()) {
        (void) row;
        out[col] = true;
      }
      return out;
    }

  }  // namespace

  bool RemarkReport::passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](auto const& r) { return r.passed; });
  }

  RemarkResult check_hook_pairs(int n, int p, Letters letters) {
    RemarkResult r;
    r.name = "hook-pairs";
    auto const   L = SWord(p, {letters.left, letters.left});
    auto const   R = SWord(p, {letters.right, letters.right});
    for (int i = 1; i < n; ++i) {
      auto h = generator_matrix(n, i, p);
      for (auto const& v : all_swords(p, static_cast<std::size_t>(i - 1))) {
        for (auto const& w : all_swords(p, static_cast<std::size_t>(n - i - 1))) {
          for (auto const& d : {DiagonalPair{v + L + w, v + R + w},
                                DiagonalPair{v + R + w, v + L + w}}) {
            ++r.checked;
            if (!is_pair_of(h, d)) {
              fail(r, d.to_string() + " missing from h" + std::to_string(i));
            }
          }
        }
      }
    }
    return r;
  }

  RemarkResult check_block_exclusive(int n, int p, Letters letters) {
    RemarkResult r;
    r.name = "block-exclusive";
    for (int i = 2; i < n; ++i) {
      for (int k = 2; k <= i; ++k) {
        std::vector<std::vector<bool>> earlier;
        for (int k2 = 1; k2 < k; ++k2) {
          earlier.push_back(columns_of(block_relation(n, i, k2, p)));
        }
        for (auto const& v : all_swords(p, static_cast<std::size_t>(i - k))) {
          for (auto const& w :
               all_swords(p, static_cast<std::size_t>(n - i - 1))) {
            for (auto variant : {Variant::I, Variant::II}) {
              auto x   = v + block_right_segment(p, k, variant, letters) + w;
              auto col = sword_index(x);
              for (int k2 = 1; k2 < k; ++k2) {
                ++r.checked;
                if (earlier[k2 - 1][col]) {
                  fail(r, "second member " + x.to_string() + " of "
                              + block_name(i, k) + " occurs in "
                              + block_name(i, k2));
                }
              }
            }
          }
        }
      }
    }
    return r;
  }

  RemarkResult check_block_sources(int n, int p, Letters letters) {
    RemarkResult r;
    r.name = "block-sources";
    for (int i = 1; i < n; ++i) {
      for (int k = 0; k <= i; ++k) {
        auto const by_col = block_relation(n, i, k, p).transposed();
        for (auto const& v : all_swords(p, static_cast<std::size_t>(i - k))) {
          for (auto const& w :
               all_swords(p, static_cast<std::size_t>(n - i - 1))) {
            for (auto variant : {Variant::I, Variant::II}) {
              auto d = block_diagonal(n, i, k, v, w, variant, letters);
              int  banned
                  = variant == Variant::I ? letters.left : letters.right;
              for (auto [col, row] : by_col.row(sword_index(d.second))) {
                (void) col;
                ++r.checked;
                if (row == sword_index(d.first)) {
                  continue;
                }
                auto u = SWord::from_index(row, n, p);
                if (u.at(static_cast<std::size_t>(i + 1)) == banned
                    || u.slice(static_cast<std::size_t>(i + 2), w.size()) != w) {
                  fail(r, "pair " + DiagonalPair{u, d.second}.to_string()
                              + " of " + block_name(i, k)
                              + " is neither a diagonal nor of the form U'S_qW");
                }
              }
            }
          }
        }
      }
    }
    return r;
  }

  RemarkResult check_fixed_tail(int n, int p) {
    RemarkResult r;
    r.name = "fixed-tail";
    GeneratorSet gens(n, p);
    for (auto const& t : enumerate_basis(n)) {
      auto i = t.max_index();
      if (!i) {
        continue;
      }
      // the tail is the digits above position i + 1
      auto const        head = checked_power(p, *i + 1);
      auto const        rel  = represent(gens, t);
      std::vector<bool> seen(checked_power(p, n - *i - 1), false);
      for (auto [row, col] : rel.pairs()) {
        ++r.checked;
        if ((row - 1) / head != (col - 1) / head) {
          fail(r, "pair " + pair_text(row, col, n, p) + " of [" + t.to_string()
                      + "] changes the last " + std::to_string(n - *i - 1)
                      + " symbols");
        } else {
          seen[(row - 1) / head] = true;
        }
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        fail(r, "[" + t.to_string() + "] misses some tail of length "
                    + std::to_string(n - *i - 1));
      }
    }
    return r;
  }

  RemarkResult check_witness_shape(int n, int p, Letters letters) {
    RemarkResult r;
    r.name = "witness-shape";
    for (auto const& t : enumerate_basis(n)) {
      auto i = t.max_index();
      if (!i) {
        continue;
      }
      auto const pos = static_cast<std::size_t>(*i + 1);
      auto       check = [&](DiagonalPair const& d) {
        ++r.checked;
        int  a = d.first.at(pos), b = d.second.at(pos);
        bool crossed = (a == letters.left && b == letters.right)
                       || (a == letters.right && b == letters.left);
        auto tail = n - pos;
        if (!crossed || d.first.slice(pos + 1, tail) != d.second.slice(pos + 1, tail)) {
          fail(r, "diagonal " + d.to_string() + " of [" + t.to_string()
                      + "] is not of the form (VLW, URW) or (VRW, ULW)");
        }
      };
      check(element_witness(t, p, letters));
      auto diagonals = all_diagonals(t, p, letters);
      if (diagonals.empty()) {
        fail(r, "[" + t.to_string() + "] has no diagonals");
      }
      for (auto [row, col] : diagonals.pairs()) {
        check({SWord::from_index(row, n, p), SWord::from_index(col, n, p)});
      }
    }
    return r;
  }

  RemarkReport remark_predicates(int n, int p, Letters letters) {
    if (n < 2) {
      throw domain_error("expected at least 2 strands, found "
                         + std::to_string(n));
    }
    return {n,
            p,
            {check_hook_pairs(n, p, letters),
             check_block_exclusive(n, p, letters),
             check_block_sources(n, p, letters),
             check_fixed_tail(n, p),
             check_witness_shape(n, p, letters)}};
  }

}  // namespace tlb
