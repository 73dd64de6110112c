#include "tlb/brauer.hpp"

#include "tlb/errors.hpp"

namespace tlb {

  namespace {

    void check_p(int p) {
      if (p < 2) {
        throw domain_error("expected p >= 2, found " + std::to_string(p));
      }
    }

  }  // namespace

  Index checked_power(int p, int e) {
    Index out = 1;
    for (int j = 0; j < e; ++j) {
      if (__builtin_mul_overflow(out, static_cast<Index>(p), &out)) {
        throw resource_error(std::to_string(p) + "^" + std::to_string(e)
                             + " does not fit in a 64-bit index");
      }
    }
    return out;
  }

  Relation e_row(int p) {
    check_p(p);
    std::vector<IndexPair> pairs;
    for (Index i = 1; i <= static_cast<Index>(p); ++i) {
      pairs.emplace_back(1, (i - 1) * p + i);
    }
    return Relation(1, static_cast<Index>(p) * p, std::move(pairs));
  }

  Relation generator_matrix(int n, int k, int p) {
    check_p(p);
    if (n < 2 || k < 1 || k > n - 1) {
      throw domain_error("generator h" + std::to_string(k)
                         + " out of range for n = " + std::to_string(n));
    }
    auto e    = IntMatrix::from_relation(e_row(p));
    auto hook = e.transposed() * e;
    auto m    = kronecker(kronecker(IntMatrix::identity(checked_power(p, n - k - 1)),
                                 hook),
                       IntMatrix::identity(checked_power(p, k - 1)));
    return m.to_relation();
  }

  GeneratorSet::GeneratorSet(int n, int p)
      : _n(n), _p(p), _dimension(checked_power(p, n)), _relations() {
    check_p(p);
    if (n < 2) {
      throw domain_error("expected at least 2 strands, found "
                         + std::to_string(n));
    }
    for (int k = 1; k < n; ++k) {
      _relations.push_back(generator_matrix(n, k, p));
    }
  }

  void GeneratorSet::replace(int k, Relation r) {
    if (r.rows() != _dimension || r.cols() != _dimension) {
      throw domain_error("replacement generator has the wrong dimensions");
    }
    _relations.at(static_cast<std::size_t>(k - 1)) = std::move(r);
  }

  namespace {

    void check_word(GeneratorSet const& gens, int n) {
      if (gens.n() != n) {
        throw domain_error("generators for n = " + std::to_string(gens.n())
                           + " applied to n = " + std::to_string(n));
      }
    }

  }  // namespace

  Relation word_relation(GeneratorSet const& gens, GeneratorWord const& w) {
    check_word(gens, w.n());
    auto acc = Relation::identity(gens.dimension());
    for (int i : w.letters()) {
      acc = compose_relations(acc, gens.relation(i));
    }
    return acc;
  }

  IntMatrix word_matrix(GeneratorSet const& gens, GeneratorWord const& w) {
    check_word(gens, w.n());
    auto acc = IntMatrix::identity(gens.dimension());
    for (int i : w.letters()) {
      acc = acc * gens.matrix(i);
    }
    return acc;
  }

  Relation represent(GeneratorSet const& gens, NormalForm const& t) {
    return word_relation(gens, expand_to_word(t));
  }

  Relation represent(NormalForm const& t, int p) {
    return represent(GeneratorSet(t.n(), p), t);
  }

  IntMatrix represent_by_product(GeneratorSet const& gens, NormalForm const& t) {
    return word_matrix(gens, expand_to_word(t));
  }

  IntMatrix represent_by_product(NormalForm const& t, int p) {
    return represent_by_product(GeneratorSet(t.n(), p), t);
  }

  Relation diagram_relation(Diagram const& d, int p) {
    check_p(p);
    int const  n       = d.n();
    auto const threads = d.threads();
    // owner[x] = thread through point x
    std::vector<std::size_t> owner(static_cast<std::size_t>(2 * n + 1));
    for (std::size_t t = 0; t < threads.size(); ++t) {
      owner[threads[t].first]  = t;
      owner[threads[t].second] = t;
    }
    std::vector<Index> weight(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) {
      weight[j] = checked_power(p, j - 1);
    }
    std::vector<int>       label(threads.size(), 0);
    std::vector<IndexPair> pairs;
    while (true) {
      Index row = 1, col = 1;
      for (int j = 1; j <= n; ++j) {
        row += label[owner[j]] * weight[j];
        col += label[owner[n + j]] * weight[j];
      }
      pairs.emplace_back(row, col);
      std::size_t t = 0;
      while (t < label.size() && ++label[t] == p) {
        label[t++] = 0;
      }
      if (t == label.size()) {
        break;
      }
    }
    auto size = checked_power(p, n);
    return Relation(size, size, std::move(pairs));
  }

}  // namespace tlb
