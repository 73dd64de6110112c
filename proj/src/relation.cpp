#include "tlb/relation.hpp"

#include <algorithm>
#include <tuple>

#include "tlb/errors.hpp"

namespace tlb {

  namespace {

    std::string dims(Index rows, Index cols) {
      return std::to_string(rows) + "x" + std::to_string(cols);
    }

    std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t out;
      if (__builtin_mul_overflow(a, b, &out)) {
        throw resource_error("integer matrix entry overflows 64 bits");
      }
      return out;
    }

    std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t out;
      if (__builtin_add_overflow(a, b, &out)) {
        throw resource_error("integer matrix entry overflows 64 bits");
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  Relation::Relation(Index rows, Index cols, std::vector<IndexPair> pairs)
      : _rows(rows), _cols(cols), _pairs(std::move(pairs)) {
    for (auto [r, c] : _pairs) {
      if (r < 1 || r > rows || c < 1 || c > cols) {
        throw domain_error("entry (" + std::to_string(r) + ","
                           + std::to_string(c) + ") outside a "
                           + dims(rows, cols) + " matrix");
      }
    }
    std::sort(_pairs.begin(), _pairs.end());
    _pairs.erase(std::unique(_pairs.begin(), _pairs.end()), _pairs.end());
  }

  Relation Relation::identity(Index size) {
    std::vector<IndexPair> pairs;
    pairs.reserve(size);
    for (Index i = 1; i <= size; ++i) {
      pairs.emplace_back(i, i);
    }
    return Relation(size, size, std::move(pairs));
  }

  bool Relation::contains(Index row, Index col) const {
    return std::binary_search(_pairs.begin(), _pairs.end(), IndexPair{row, col});
  }

  std::span<IndexPair const> Relation::row(Index row) const {
    auto first = std::lower_bound(_pairs.begin(), _pairs.end(), IndexPair{row, 0});
    auto last  = std::lower_bound(first, _pairs.end(), IndexPair{row + 1, 0});
    return {first, last};
  }

  bool Relation::has_column(Index col) const {
    return std::any_of(_pairs.begin(), _pairs.end(), [col](auto const& rc) {
      return rc.second == col;
    });
  }

  Relation Relation::transposed() const {
    std::vector<IndexPair> pairs;
    pairs.reserve(_pairs.size());
    for (auto [r, c] : _pairs) {
      pairs.emplace_back(c, r);
    }
    return Relation(_cols, _rows, std::move(pairs));
  }

  bool Relation::is_symmetric() const {
    return _rows == _cols && transposed() == *this;
  }

  Relation Relation::flipped(Index row, Index col) const {
    auto pairs = _pairs;
    auto it    = std::lower_bound(pairs.begin(), pairs.end(), IndexPair{row, col});
    if (it != pairs.end() && *it == IndexPair{row, col}) {
      pairs.erase(it);
    } else {
      pairs.insert(it, {row, col});
    }
    return Relation(_rows, _cols, std::move(pairs));
  }

  Relation compose_relations(Relation const& first, Relation const& second) {
    if (first.cols() != second.rows()) {
      throw domain_error("cannot compose a " + dims(first.rows(), first.cols())
                         + " relation with a "
                         + dims(second.rows(), second.cols()) + " relation");
    }
    std::vector<IndexPair> pairs;
    for (auto [a, c] : first.pairs()) {
      for (auto [c2, b] : second.row(c)) {
        (void) c2;
        pairs.emplace_back(a, b);
      }
    }
    return Relation(first.rows(), second.cols(), std::move(pairs));
  }

  ////////////////////////////////////////////////////////////////////////
  // IntMatrix
  ////////////////////////////////////////////////////////////////////////

  IntMatrix::IntMatrix(Index rows, Index cols, std::vector<Entry> entries)
      : _rows(rows), _cols(cols), _entries() {
    for (auto const& e : entries) {
      if (e.row < 1 || e.row > rows || e.col < 1 || e.col > cols) {
        throw domain_error("entry (" + std::to_string(e.row) + ","
                           + std::to_string(e.col) + ") outside a "
                           + dims(rows, cols) + " matrix");
      }
    }
    std::sort(entries.begin(), entries.end(), [](auto const& x, auto const& y) {
      return std::tie(x.row, x.col) < std::tie(y.row, y.col);
    });
    for (auto const& e : entries) {
      if (!_entries.empty() && _entries.back().row == e.row
          && _entries.back().col == e.col) {
        _entries.back().value = checked_add(_entries.back().value, e.value);
      } else {
        _entries.push_back(e);
      }
    }
    std::erase_if(_entries, [](auto const& e) { return e.value == 0; });
  }

  IntMatrix IntMatrix::identity(Index size) {
    std::vector<Entry> entries;
    entries.reserve(size);
    for (Index i = 1; i <= size; ++i) {
      entries.push_back({i, i, 1});
    }
    return IntMatrix(size, size, std::move(entries));
  }

  IntMatrix IntMatrix::from_relation(Relation const& r) {
    std::vector<Entry> entries;
    entries.reserve(r.size());
    for (auto [row, col] : r.pairs()) {
      entries.push_back({row, col, 1});
    }
    return IntMatrix(r.rows(), r.cols(), std::move(entries));
  }

  std::int64_t IntMatrix::at(Index row, Index col) const {
    auto it = std::lower_bound(
        _entries.begin(), _entries.end(), Entry{row, col, 0},
        [](auto const& x, auto const& y) {
          return std::tie(x.row, x.col) < std::tie(y.row, y.col);
        });
    return it != _entries.end() && it->row == row && it->col == col ? it->value
                                                                    : 0;
  }

  bool IntMatrix::is_zero_one() const noexcept {
    return std::all_of(_entries.begin(), _entries.end(),
                       [](auto const& e) { return e.value == 1; });
  }

  Relation IntMatrix::to_relation() const {
    if (!is_zero_one()) {
      throw domain_error("matrix has entries other than 0 and 1");
    }
    std::vector<IndexPair> pairs;
    pairs.reserve(_entries.size());
    for (auto const& e : _entries) {
      pairs.emplace_back(e.row, e.col);
    }
    return Relation(_rows, _cols, std::move(pairs));
  }

  IntMatrix IntMatrix::scaled(std::int64_t c) const {
    auto entries = _entries;
    for (auto& e : entries) {
      e.value = checked_mul(e.value, c);
    }
    return IntMatrix(_rows, _cols, std::move(entries));
  }

  IntMatrix IntMatrix::transposed() const {
    std::vector<Entry> entries;
    entries.reserve(_entries.size());
    for (auto const& e : _entries) {
      entries.push_back({e.col, e.row, e.value});
    }
    return IntMatrix(_cols, _rows, std::move(entries));
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& that) const {
    if (_cols != that._rows) {
      throw domain_error("cannot multiply a " + dims(_rows, _cols)
                         + " matrix by a " + dims(that._rows, that._cols)
                         + " matrix");
    }
    std::vector<Entry> entries;
    auto const&        rhs = that._entries;
    for (auto const& x : _entries) {
      auto it = std::lower_bound(rhs.begin(), rhs.end(), x.col,
                                 [](auto const& e, Index r) { return e.row < r; });
      for (; it != rhs.end() && it->row == x.col; ++it) {
        entries.push_back({x.row, it->col, checked_mul(x.value, it->value)});
      }
    }
    return IntMatrix(_rows, that._cols, std::move(entries));
  }

  IntMatrix kronecker(IntMatrix const& a, IntMatrix const& b) {
    std::vector<IntMatrix::Entry> entries;
    entries.reserve(a.entries().size() * b.entries().size());
    for (auto const& x : a.entries()) {
      for (auto const& y : b.entries()) {
        entries.push_back({(x.row - 1) * b.rows() + y.row,
                           (x.col - 1) * b.cols() + y.col,
                           checked_mul(x.value, y.value)});
      }
    }
    return IntMatrix(a.rows() * b.rows(), a.cols() * b.cols(),
                     std::move(entries));
  }

  std::string to_coo(Relation const& r) {
    std::string out;
    for (auto [row, col] : r.pairs()) {
      out += '(' + std::to_string(row) + ',' + std::to_string(col) + ")\n";
    }
    return out;
  }

  std::string to_coo(IntMatrix const& m) {
    std::string out;
    for (auto const& e : m.entries()) {
      out += '(' + std::to_string(e.row) + ',' + std::to_string(e.col) + ','
             + std::to_string(e.value) + ")\n";
    }
    return out;
  }

  std::string to_dense(Relation const& r) {
    std::string out;
    for (Index i = 1; i <= r.rows(); ++i) {
      auto row = r.row(i);
      auto it  = row.begin();
      for (Index j = 1; j <= r.cols(); ++j) {
        bool one = it != row.end() && it->second == j;
        if (one) {
          ++it;
        }
        if (j != 1) {
          out += ' ';
        }
        out += one ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }

}  // namespace tlb
