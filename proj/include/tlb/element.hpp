#pragma once

// Finite linear combinations of basis elements with exact integer
// coefficients, multiplied with the loop value fixed to an integer p >= 2.

#include <map>
#include <string>

#include "tlb/core.hpp"

namespace tlb {

  class TLElement {
   public:
    using Terms = std::map<NormalForm, BigInt>;

    TLElement(int n, int p);

    static TLElement basis(NormalForm const& t, int p);

    int n() const noexcept {
      return _n;
    }
    int p() const noexcept {
      return _p;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    // Coefficient of t, zero when absent.
    BigInt coefficient(NormalForm const& t) const;

    // Adds c*t in place, dropping the term if it cancels.
    TLElement& add_term(NormalForm const& t, BigInt const& c);

    TLElement operator+(TLElement const& that) const;
    TLElement operator-(TLElement const& that) const;
    TLElement operator*(TLElement const& that) const;
    TLElement scaled(BigInt const& c) const;

    std::string to_string() const;

    bool operator==(TLElement const&) const = default;

   private:
    void check_compatible(TLElement const& that) const;

    int   _n;
    int   _p;
    Terms _terms;
  };

  TLElement element_add(TLElement const& a, TLElement const& b);
  TLElement element_scale(TLElement const& a, BigInt const& c);
  TLElement element_multiply(TLElement const& a, TLElement const& b);

}  // namespace tlb
