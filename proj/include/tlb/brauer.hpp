#pragma once

// Brauer's assignment of p^n x p^n 0-1 matrices to the basis of T_n:
//
//   h_k  |->  I_{p^{n-k-1}} (x) E'_p E_p (x) I_{p^{k-1}}
//
// where E_p is the 1 x p^2 row with ones at (i-1)p+i. A product a*b is
// represented by composing the relation of a with that of b, in that order.

#include <vector>

#include "tlb/core.hpp"
#include "tlb/diagram.hpp"
#include "tlb/relation.hpp"

namespace tlb {

  // p^e, throwing resource_error when it does not fit in an Index.
  Index checked_power(int p, int e);

  Relation e_row(int p);

  Relation generator_matrix(int n, int k, int p);

  // The relations of h_1..h_{n-1} for one (n, p). Tests swap in corrupted
  // tables to make sure the checks built on top of it can fail.
  class GeneratorSet {
   public:
    GeneratorSet(int n, int p);

    int n() const noexcept {
      return _n;
    }
    int p() const noexcept {
      return _p;
    }
    Index dimension() const noexcept {
      return _dimension;
    }

    Relation const& relation(int k) const {
      return _relations.at(static_cast<std::size_t>(k - 1));
    }
    IntMatrix matrix(int k) const {
      return IntMatrix::from_relation(relation(k));
    }

    void replace(int k, Relation r);

   private:
    int                   _n;
    int                   _p;
    Index                 _dimension;
    std::vector<Relation> _relations;
  };

  // Relation of a word under composition (idempotent, loops disappear).
  Relation word_relation(GeneratorSet const& gens, GeneratorWord const& w);

  // Integer matrix of a word under matrix product (loops become factors p).
  IntMatrix word_matrix(GeneratorSet const& gens, GeneratorWord const& w);

  Relation represent(NormalForm const& t, int p);
  Relation represent(GeneratorSet const& gens, NormalForm const& t);

  IntMatrix represent_by_product(NormalForm const& t, int p);
  IntMatrix represent_by_product(GeneratorSet const& gens, NormalForm const& t);

  // Pairs (x, y) such that every thread of d joins equal base-p digits of
  // the row x (bottom) and column y (top). Agrees with represent() on
  // normal forms, computed without any matrix product.
  Relation diagram_relation(Diagram const& d, int p);

}  // namespace tlb
