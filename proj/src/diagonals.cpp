#include "tlb/diagonals.hpp"

#include "tlb/brauer.hpp"
#include "tlb/errors.hpp"

namespace tlb {

  ////////////////////////////////////////////////////////////////////////
  // SWord
  ////////////////////////////////////////////////////////////////////////

  SWord::SWord(int p, std::vector<int> symbols)
      : _p(p), _symbols(std::move(symbols)) {
    if (p < 2) {
      throw domain_error("expected p >= 2, found " + std::to_string(p));
    }
    for (int q : _symbols) {
      if (q < 1 || q > p) {
        throw domain_error("symbol S" + std::to_string(q)
                           + " out of range for p = " + std::to_string(p));
      }
    }
  }

  SWord SWord::from_index(Index index, int n, int p) {
    auto size = checked_power(p, n);
    if (index < 1 || index > size) {
      throw domain_error("index " + std::to_string(index) + " out of range 1.."
                         + std::to_string(size));
    }
    std::vector<int> symbols;
    Index            rest = index - 1;
    for (int j = 0; j < n; ++j) {
      symbols.push_back(static_cast<int>(rest % static_cast<Index>(p)) + 1);
      rest /= static_cast<Index>(p);
    }
    return SWord(p, std::move(symbols));
  }

  SWord SWord::parse(int p, std::string_view text) {
    std::vector<int> symbols;
    for (char c : text) {
      if (c == 'L') {
        symbols.push_back(1);
      } else if (c == 'R') {
        symbols.push_back(2);
      } else if (c >= '1' && c <= '9') {
        symbols.push_back(c - '0');
      } else {
        throw domain_error("unexpected character '" + std::string(1, c)
                           + "' in S-word");
      }
    }
    return SWord(p, std::move(symbols));
  }

  SWord SWord::operator+(SWord const& that) const {
    if (_p != that._p) {
      throw domain_error("cannot concatenate S-words over different alphabets");
    }
    auto symbols = _symbols;
    symbols.insert(symbols.end(), that._symbols.begin(), that._symbols.end());
    return SWord(_p, std::move(symbols));
  }

  SWord SWord::slice(std::size_t first, std::size_t count) const {
    if (first < 1 || first - 1 + count > _symbols.size()) {
      throw domain_error("slice out of range");
    }
    auto begin = _symbols.begin() + static_cast<std::ptrdiff_t>(first - 1);
    return SWord(_p, std::vector<int>(begin, begin + static_cast<std::ptrdiff_t>(count)));
  }

  std::string SWord::to_string() const {
    std::string out;
    for (int q : _symbols) {
      if (_p == 2) {
        out += q == 1 ? 'L' : 'R';
      } else if (_p <= 9) {
        out += static_cast<char>('0' + q);
      } else {
        if (!out.empty()) {
          out += '.';
        }
        out += std::to_string(q);
      }
    }
    return out;
  }

  Index sword_index(SWord const& w) {
    Index index = 1;
    Index scale = 1;
    for (int q : w.symbols()) {
      index += static_cast<Index>(q - 1) * scale;
      scale *= static_cast<Index>(w.p());
    }
    return index;
  }

  std::string DiagonalPair::to_string() const {
    auto [row, col] = index_pair();
    return "(" + first.to_string() + " | " + second.to_string() + ") -> ("
           + std::to_string(row) + "," + std::to_string(col) + ")";
  }

  std::vector<SWord> all_swords(int p, std::size_t length) {
    auto               count = checked_power(p, static_cast<int>(length));
    std::vector<SWord> out;
    out.reserve(count);
    std::vector<int> symbols(length, 1);
    for (Index c = 0; c < count; ++c) {
      out.emplace_back(p, symbols);
      // increment from the right so the output is in lexicographic order
      for (auto j = length; j-- > 0;) {
        if (++symbols[j] <= p) {
          break;
        }
        symbols[j] = 1;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block diagonals
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_letters(int p, Letters letters) {
      if (letters.left == letters.right || letters.left < 1 || letters.right < 1
          || letters.left > p || letters.right > p) {
        throw domain_error("L and R must be distinct symbols in 1.."
                           + std::to_string(p));
      }
    }

    // Appends `times` copies of (a b).
    void repeat_pair(std::vector<int>& out, int a, int b, int times) {
      for (int j = 0; j < times; ++j) {
        out.push_back(a);
        out.push_back(b);
      }
    }

  }  // namespace

  SWord block_left_segment(int p, int k, Variant v, Letters letters) {
    check_letters(p, letters);
    if (k < 0) {
      throw domain_error("block length must be >= 0");
    }
    int const L = v == Variant::I ? letters.left : letters.right;
    int const R = v == Variant::I ? letters.right : letters.left;
    int const l = k / 2;
    std::vector<int> s;
    if (k % 2 == 0) {
      repeat_pair(s, R, L, l);  // (RL)^l L
      s.push_back(L);
    } else {
      repeat_pair(s, L, R, l);  // (LR)^l LL
      s.push_back(L);
      s.push_back(L);
    }
    return SWord(p, std::move(s));
  }

  SWord block_right_segment(int p, int k, Variant v, Letters letters) {
    check_letters(p, letters);
    if (k < 0) {
      throw domain_error("block length must be >= 0");
    }
    int const L = v == Variant::I ? letters.left : letters.right;
    int const R = v == Variant::I ? letters.right : letters.left;
    int const l = k / 2;
    std::vector<int> s;
    if (k % 2 == 0) {
      s.push_back(L);  // L (LR)^l
      repeat_pair(s, L, R, l);
    } else {
      s.push_back(R);  // RR (LR)^l
      s.push_back(R);
      repeat_pair(s, L, R, l);
    }
    return SWord(p, std::move(s));
  }

  DiagonalPair block_diagonal(int          n,
                              int          i,
                              int          k,
                              SWord const& v,
                              SWord const& w,
                              Variant      variant,
                              Letters      letters) {
    if (k < 0 || static_cast<std::size_t>(i) != k + v.size()
        || static_cast<std::size_t>(n) != i + 1 + w.size() || (k > 0 && i < 1)) {
      throw domain_error(
          "inconsistent block diagonal: n = " + std::to_string(n)
          + ", i = " + std::to_string(i) + ", k = " + std::to_string(k)
          + ", |V| = " + std::to_string(v.size())
          + ", |W| = " + std::to_string(w.size()));
    }
    if (v.p() != w.p()) {
      throw domain_error("V and W are over different alphabets");
    }
    int const p = v.p();
    return {v + block_left_segment(p, k, variant, letters) + w,
            v + block_right_segment(p, k, variant, letters) + w};
  }

  std::vector<DiagonalPair> block_diagonals(int          n,
                                            int          i,
                                            int          k,
                                            SWord const& v,
                                            SWord const& w,
                                            Letters      letters) {
    return {block_diagonal(n, i, k, v, w, Variant::I, letters),
            block_diagonal(n, i, k, v, w, Variant::II, letters)};
  }

  Relation block_relation(int n, int i, int k, int p) {
    if (k < 0 || k > i || (k > 0 && i > n - 1)) {
      throw domain_error("no block h_{" + std::to_string(i) + ","
                         + std::to_string(k) + "} for n = " + std::to_string(n));
    }
    std::vector<int> letters;
    for (int j = i; j > i - k; --j) {
      letters.push_back(j);
    }
    return word_relation(GeneratorSet(n, p), GeneratorWord(n, letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Element diagonals
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Block {
      int i;
      int k;
    };

    std::vector<Block> blocks_of(NormalForm const& t) {
      std::vector<Block> out;
      for (int i = 1; i < t.n(); ++i) {
        if (t.k(i) > 0) {
          out.push_back({i, t.k(i)});
        }
      }
      return out;
    }

    // The prefix product of the first `done` blocks has the diagonals
    // (head1 T, head2 T) for every tail T, where |head1| = |head2| is one
    // more than the last block's i. The next block's diagonal
    // (V left W, V right W) chains onto it when V left agrees with head2 on
    // head2's positions; the remaining positions of V left extend head1.
    std::optional<DiagonalPair> chain(std::vector<Block> const& blocks,
                                      std::size_t               done,
                                      std::vector<int> const&   head1,
                                      std::vector<int> const&   head2,
                                      int                       n,
                                      int                       p,
                                      Letters                   letters) {
      if (done == blocks.size()) {
        auto a = head1, b = head2;
        a.resize(static_cast<std::size_t>(n), letters.left);
        b.resize(static_cast<std::size_t>(n), letters.left);
        return DiagonalPair{SWord(p, std::move(a)), SWord(p, std::move(b))};
      }
      auto const [i, k] = blocks[done];
      auto const m      = head2.size();
      for (auto variant : {Variant::I, Variant::II}) {
        auto left  = block_left_segment(p, k, variant, letters).symbols();
        auto right = block_right_segment(p, k, variant, letters).symbols();
        std::vector<int> v(static_cast<std::size_t>(i - k), letters.left);
        for (std::size_t j = 0; j < v.size() && j < m; ++j) {
          v[j] = head2[j];
        }
        auto full_left = v;
        full_left.insert(full_left.end(), left.begin(), left.end());
        if (!std::equal(head2.begin(), head2.end(), full_left.begin())) {
          continue;
        }
        auto next1 = head1;
        next1.insert(next1.end(), full_left.begin() + static_cast<std::ptrdiff_t>(m),
                     full_left.end());
        auto next2 = v;
        next2.insert(next2.end(), right.begin(), right.end());
        if (auto found = chain(blocks, done + 1, next1, next2, n, p, letters)) {
          return found;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  DiagonalPair element_witness(NormalForm const& t, int p, Letters letters) {
    check_letters(p, letters);
    auto const n = static_cast<std::size_t>(t.n());
    if (t.is_unit()) {
      return {SWord::repeat(p, letters.left, n),
              SWord::repeat(p, letters.left, n)};
    }
    auto found = chain(blocks_of(t), 0, {}, {}, t.n(), p, letters);
    if (!found) {
      throw internal_error("no chain of block diagonals for ["
                           + t.to_string() + "]");
    }
    return *found;
  }

  Relation all_diagonals(NormalForm const& t, int p, Letters letters) {
    check_letters(p, letters);
    int const n   = t.n();
    auto      acc = Relation::identity(checked_power(p, n));
    for (auto const [i, k] : blocks_of(t)) {
      std::vector<IndexPair> pairs;
      for (auto const& v : all_swords(p, static_cast<std::size_t>(i - k))) {
        for (auto const& w : all_swords(p, static_cast<std::size_t>(n - i - 1))) {
          for (auto const& d : block_diagonals(n, i, k, v, w, letters)) {
            pairs.push_back(d.index_pair());
          }
        }
      }
      acc = compose_relations(acc, Relation(acc.cols(), acc.cols(), std::move(pairs)));
    }
    return acc;
  }

  bool is_pair_of(Relation const& represented, DiagonalPair const& d) {
    return represented.contains(d.index_pair());
  }

  bool is_pair_of(NormalForm const& t, DiagonalPair const& d, int p) {
    auto const n = static_cast<std::size_t>(t.n());
    if (d.first.size() != n || d.second.size() != n) {
      throw domain_error("diagonal of length " + std::to_string(d.first.size())
                         + " does not fit n = " + std::to_string(n));
    }
    if (d.first.p() != p || d.second.p() != p) {
      throw domain_error("diagonal over the wrong alphabet");
    }
    return is_pair_of(represent(t, p), d);
  }

}  // namespace tlb
