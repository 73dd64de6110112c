#pragma once

// Test-only reference computations. Nothing here calls into the library's
// sparse kernels, enumeration or elimination code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace oracle {

  using Big   = boost::multiprecision::cpp_int;
  using Dense = std::vector<std::vector<std::int64_t>>;

  inline Big factorial(int n) {
    Big out = 1;
    for (int j = 2; j <= n; ++j) {
      out *= j;
    }
    return out;
  }

  // (2n)!/(n!(n+1)!)
  inline Big catalan(int n) {
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
  }

  // Every k-sequence with 0 <= k_i <= i, filtered by the pairwise condition
  // on all (not just consecutive) positive entries, then sorted from the
  // right.
  inline std::vector<std::vector<int>> basis_by_filter(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int>              k(static_cast<std::size_t>(n - 1), 0);
    while (true) {
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) {
        for (int j = i + 1; j < n && ok; ++j) {
          if (k[i - 1] > 0 && k[j - 1] > 0 && !(i - k[i - 1] < j - k[j - 1])) {
            ok = false;
          }
        }
      }
      if (ok) {
        out.push_back(k);
      }
      int i = 1;
      while (i < n && ++k[i - 1] > i) {
        k[i - 1] = 0;
        ++i;
      }
      if (i == n) {
        break;
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                          b.rend());
    });
    return out;
  }

  inline Dense zeros(std::size_t r, std::size_t c) {
    return Dense(r, std::vector<std::int64_t>(c, 0));
  }

  inline Dense identity(std::size_t n) {
    auto m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  inline Dense multiply(Dense const& a, Dense const& b) {
    auto m = zeros(a.size(), b.front().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[i][k] != 0) {
          for (std::size_t j = 0; j < b.front().size(); ++j) {
            m[i][j] += a[i][k] * b[k][j];
          }
        }
      }
    }
    return m;
  }

  inline Dense transpose(Dense const& a) {
    auto m = zeros(a.front().size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.front().size(); ++j) {
        m[j][i] = a[i][j];
      }
    }
    return m;
  }

  inline Dense kron(Dense const& a, Dense const& b) {
    auto const br = b.size(), bc = b.front().size();
    auto       m = zeros(a.size() * br, a.front().size() * bc);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.front().size(); ++j) {
        for (std::size_t r = 0; r < br; ++r) {
          for (std::size_t s = 0; s < bc; ++s) {
            m[i * br + r][j * bc + s] = a[i][j] * b[r][s];
          }
        }
      }
    }
    return m;
  }

  inline std::size_t ipow(std::size_t p, int e) {
    std::size_t out = 1;
    while (e-- > 0) {
      out *= p;
    }
    return out;
  }

  // E_p(1, (i-1)p + j) = delta(i, j)
  inline Dense e_row(int p) {
    auto m = zeros(1, static_cast<std::size_t>(p * p));
    for (int i = 1; i <= p; ++i) {
      for (int j = 1; j <= p; ++j) {
        m[0][static_cast<std::size_t>((i - 1) * p + j - 1)] = i == j;
      }
    }
    return m;
  }

  inline Dense generator(int n, int k, int p) {
    auto e = e_row(p);
    return kron(kron(identity(ipow(p, n - k - 1)), multiply(transpose(e), e)),
                identity(ipow(p, k - 1)));
  }

  inline Dense word(int n, int p, std::vector<int> const& letters) {
    auto m = identity(ipow(p, n));
    for (int i : letters) {
      m = multiply(m, generator(n, i, p));
    }
    return m;
  }

  // 1-based (row, col) of the nonzero entries.
  inline std::set<std::pair<std::uint64_t, std::uint64_t>>
  support(Dense const& m) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (m[i][j] != 0) {
          out.emplace(i + 1, j + 1);
        }
      }
    }
    return out;
  }

  // Rank over Q by Gaussian elimination on exact rationals.
  inline std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows) {
    using Q = boost::rational<Big>;
    std::vector<std::vector<Q>> m;
    for (auto const& r : rows) {
      m.emplace_back(r.begin(), r.end());
    }
    if (m.empty()) {
      return 0;
    }
    std::size_t rank = 0;
    auto const  cols = m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c].numerator() == 0) {
        ++piv;
      }
      if (piv == m.size()) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r != rank && m[r][c].numerator() != 0) {
          Q f = m[r][c] / m[rank][c];
          for (std::size_t j = c; j < cols; ++j) {
            m[r][j] -= f * m[rank][j];
          }
        }
      }
      ++rank;
    }
    return rank;
  }

}  // namespace oracle
