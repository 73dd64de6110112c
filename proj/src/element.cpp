#include "tlb/element.hpp"

#include "tlb/errors.hpp"

namespace tlb {

  TLElement::TLElement(int n, int p) : _n(n), _p(p), _terms() {
    if (n < 2) {
      throw domain_error("expected at least 2 strands, found "
                         + std::to_string(n));
    }
    if (p < 2) {
      throw domain_error("expected p >= 2, found " + std::to_string(p));
    }
  }

  TLElement TLElement::basis(NormalForm const& t, int p) {
    TLElement x(t.n(), p);
    x.add_term(t, 1);
    return x;
  }

  BigInt TLElement::coefficient(NormalForm const& t) const {
    auto it = _terms.find(t);
    return it == _terms.end() ? BigInt(0) : it->second;
  }

  TLElement& TLElement::add_term(NormalForm const& t, BigInt const& c) {
    if (t.n() != _n) {
      throw domain_error("basis element on " + std::to_string(t.n())
                         + " strands added to an element on "
                         + std::to_string(_n));
    }
    if (c == 0) {
      return *this;
    }
    auto [it, inserted] = _terms.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
    return *this;
  }

  void TLElement::check_compatible(TLElement const& that) const {
    if (_n != that._n || _p != that._p) {
      throw domain_error("mismatched elements: (n, p) = ("
                         + std::to_string(_n) + ", " + std::to_string(_p)
                         + ") and (" + std::to_string(that._n) + ", "
                         + std::to_string(that._p) + ")");
    }
  }

  TLElement TLElement::operator+(TLElement const& that) const {
    check_compatible(that);
    TLElement out = *this;
    for (auto const& [t, c] : that._terms) {
      out.add_term(t, c);
    }
    return out;
  }

  TLElement TLElement::operator-(TLElement const& that) const {
    return *this + that.scaled(-1);
  }

  TLElement TLElement::scaled(BigInt const& c) const {
    TLElement out(_n, _p);
    if (c != 0) {
      for (auto const& [t, x] : _terms) {
        out._terms.emplace(t, x * c);
      }
    }
    return out;
  }

  TLElement TLElement::operator*(TLElement const& that) const {
    check_compatible(that);
    TLElement out(_n, _p);
    for (auto const& [a, x] : _terms) {
      for (auto const& [b, y] : that._terms) {
        auto   prod = multiply_basis(a, b);
        BigInt c    = x * y * boost::multiprecision::pow(BigInt(_p),
                                                      static_cast<unsigned>(prod.loops));
        out.add_term(prod.result, c);
      }
    }
    return out;
  }

  std::string TLElement::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& [t, c] : _terms) {
      if (!out.empty()) {
        out += " + ";
      }
      out += c.str() + "*[" + t.to_string() + "]";
    }
    return out;
  }

  TLElement element_add(TLElement const& a, TLElement const& b) {
    return a + b;
  }

  TLElement element_scale(TLElement const& a, BigInt const& c) {
    return a.scaled(c);
  }

  TLElement element_multiply(TLElement const& a, TLElement const& b) {
    return a * b;
  }

}  // namespace tlb
