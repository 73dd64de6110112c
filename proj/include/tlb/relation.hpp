#pragma once

// Sparse 0-1 matrices viewed as binary relations, and sparse exact integer
// matrices. Rows and columns are 1-based.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tlb {

  using Index     = std::uint64_t;
  using IndexPair = std::pair<Index, Index>;

  // A 0-1 matrix, equivalently the relation {(row, col) : entry is 1}.
  class Relation {
   public:
    Relation(Index rows, Index cols) : _rows(rows), _cols(cols) {}

    // Sorts and deduplicates; throws if a pair is out of bounds.
    Relation(Index rows, Index cols, std::vector<IndexPair> pairs);

    static Relation identity(Index size);

    Index rows() const noexcept {
      return _rows;
    }
    Index cols() const noexcept {
      return _cols;
    }
    std::size_t size() const noexcept {
      return _pairs.size();
    }
    bool empty() const noexcept {
      return _pairs.empty();
    }
    std::vector<IndexPair> const& pairs() const noexcept {
      return _pairs;
    }

    bool contains(Index row, Index col) const;
    bool contains(IndexPair const& rc) const {
      return contains(rc.first, rc.second);
    }

    // Pairs whose first member is `row`, as a contiguous sorted range.
    std::span<IndexPair const> row(Index row) const;

    bool has_column(Index col) const;

    Relation transposed() const;
    bool     is_symmetric() const;

    // Toggles one entry; used to build corrupted fixtures.
    Relation flipped(Index row, Index col) const;

    bool operator==(Relation const&) const = default;

   private:
    Index                  _rows;
    Index                  _cols;
    std::vector<IndexPair> _pairs;  // sorted, unique
  };

  // (a,b) is in the result iff (a,c) in first and (c,b) in second for some c.
  Relation compose_relations(Relation const& first, Relation const& second);

  class IntMatrix {
   public:
    struct Entry {
      Index        row;
      Index        col;
      std::int64_t value;

      bool operator==(Entry const&) const = default;
    };

    IntMatrix(Index rows, Index cols) : _rows(rows), _cols(cols) {}

    // Sums duplicate coordinates and drops zeros.
    IntMatrix(Index rows, Index cols, std::vector<Entry> entries);

    static IntMatrix identity(Index size);
    static IntMatrix from_relation(Relation const& r);

    Index rows() const noexcept {
      return _rows;
    }
    Index cols() const noexcept {
      return _cols;
    }
    std::vector<Entry> const& entries() const noexcept {
      return _entries;
    }

    std::int64_t at(Index row, Index col) const;

    bool is_zero_one() const noexcept;

    // Requires is_zero_one().
    Relation to_relation() const;

    IntMatrix scaled(std::int64_t c) const;
    IntMatrix transposed() const;

    IntMatrix operator*(IntMatrix const& that) const;

    bool operator==(IntMatrix const&) const = default;

   private:
    Index              _rows;
    Index              _cols;
    std::vector<Entry> _entries;  // sorted by (row, col), nonzero
  };

  // Leftmost factor owns the most significant index digits.
  IntMatrix kronecker(IntMatrix const& a, IntMatrix const& b);

  // COO lines "(row,col)"; IntMatrix adds ",value".
  std::string to_coo(Relation const& r);
  std::string to_coo(IntMatrix const& m);
  // Rows of space separated 0/1 digits.
  std::string to_dense(Relation const& r);

}  // namespace tlb
