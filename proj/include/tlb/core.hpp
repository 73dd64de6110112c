#pragma once

// Generator words, Jones normal forms and the right-lexicographic order on
// the monoid basis of the Temperley-Lieb algebra T_n.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tlb {

  using BigInt = boost::multiprecision::cpp_int;

  // The n-th Catalan number (2n)!/(n!(n+1)!), computed exactly.
  BigInt catalan(int n);

  // A word in the generators h_1..h_{n-1}; the empty word is the unit.
  class GeneratorWord {
   public:
    GeneratorWord(int n, std::vector<int> letters);

    static GeneratorWord unit(int n) {
      return GeneratorWord(n, {});
    }

    // Parses "h1 h2 h1"; an empty or blank string is the unit.
    static GeneratorWord parse(int n, std::string_view text);

    int n() const noexcept {
      return _n;
    }
    std::vector<int> const& letters() const noexcept {
      return _letters;
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    GeneratorWord operator*(GeneratorWord const& that) const;

    std::string to_string() const;

    bool operator==(GeneratorWord const&) const = default;

   private:
    int              _n;
    std::vector<int> _letters;
  };

  // True iff k is the k-sequence of a normal form; throws if k.size() != n-1.
  bool validate_normal_form(int n, std::vector<int> const& k);

  // Describes the first condition that k violates, or nullopt if it is valid.
  std::optional<std::string> normal_form_violation(int                     n,
                                                   std::vector<int> const& k);

  // A basis element h_{1,k_1} ... h_{n-1,k_{n-1}} stored as its k-sequence.
  class NormalForm {
   public:
    NormalForm(int n, std::vector<int> k);

    static NormalForm unit(int n);

    // Parses the comma separated k-sequence, "0,2" means n = 3.
    static NormalForm parse(std::string_view text);

    int n() const noexcept {
      return _n;
    }
    std::vector<int> const& k() const noexcept {
      return _k;
    }
    // k_i for 1 <= i <= n-1.
    int k(int i) const {
      return _k.at(static_cast<std::size_t>(i - 1));
    }

    bool is_unit() const noexcept;

    // max{i : k_i > 0}, undefined for the unit.
    std::optional<int> max_index() const noexcept;

    std::string to_string() const;

    bool operator==(NormalForm const&) const = default;

    // Orders by n, then right-lexicographically; usable as a map key.
    std::strong_ordering operator<=>(NormalForm const& that) const noexcept;

   private:
    int              _n;
    std::vector<int> _k;
  };

  // Right-lexicographic comparison; throws if the strand counts differ.
  std::strong_ordering lex_compare(NormalForm const& a, NormalForm const& b);

  // All normal forms for n strands in ascending right-lexicographic order.
  std::vector<NormalForm> enumerate_basis(int n);

  // h_{i,k} = h_i h_{i-1} ... h_{i-k+1}, concatenated for increasing i.
  GeneratorWord expand_to_word(NormalForm const& t);

  // The product a*b in T_n is p^loops times the basis element `result`.
  struct BasisProduct {
    int        loops;
    NormalForm result;

    bool operator==(BasisProduct const&) const = default;
  };

  BasisProduct multiply_basis(NormalForm const& a, NormalForm const& b);

  // Reduces an arbitrary word to p^loops times a normal form.
  BasisProduct normalize(GeneratorWord const& w);

}  // namespace tlb
