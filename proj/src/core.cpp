#include "tlb/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tlb/diagram.hpp"
#include "tlb/errors.hpp"

namespace tlb {

  namespace {

    void check_strands(int n) {
      if (n < 2) {
        throw domain_error("expected at least 2 strands, found "
                           + std::to_string(n));
      }
    }

    int parse_int(std::string_view text, std::string_view what) {
      int  value = 0;
      auto first = text.data();
      auto last  = text.data() + text.size();
      auto res   = std::from_chars(first, last, value);
      if (text.empty() || res.ec != std::errc() || res.ptr != last) {
        throw domain_error("invalid " + std::string(what) + " \""
                           + std::string(text) + "\"");
      }
      return value;
    }

    void enumerate(int                      n,
                   int                      i,
                   int                      last_offset,
                   std::vector<int>&        k,
                   std::vector<NormalForm>& out) {
      if (i == n) {
        out.emplace_back(n, k);
        return;
      }
      // k_i = 0 never constrains later positions
      k[i - 1] = 0;
      enumerate(n, i + 1, last_offset, k, out);
      for (int ki = 1; ki <= i; ++ki) {
        if (i - ki > last_offset) {
          k[i - 1] = ki;
          enumerate(n, i + 1, i - ki, k, out);
        }
      }
      k[i - 1] = 0;
    }

  }  // namespace

  BigInt catalan(int n) {
    if (n < 1) {
      throw domain_error("catalan: expected n >= 1, found " + std::to_string(n));
    }
    BigInt c = 1;
    for (int i = 0; i < n; ++i) {
      // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step
      c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorWord
  ////////////////////////////////////////////////////////////////////////

  GeneratorWord::GeneratorWord(int n, std::vector<int> letters)
      : _n(n), _letters(std::move(letters)) {
    check_strands(n);
    for (int i : _letters) {
      if (i < 1 || i > n - 1) {
        throw domain_error("generator h" + std::to_string(i)
                           + " out of range for n = " + std::to_string(n));
      }
    }
  }

  GeneratorWord GeneratorWord::parse(int n, std::string_view text) {
    std::vector<int>   letters;
    std::istringstream in{std::string(text)};
    std::string        token;
    while (in >> token) {
      if (token.size() < 2 || token[0] != 'h') {
        throw domain_error("malformed generator \"" + token
                           + "\", expected h<index>");
      }
      letters.push_back(
          parse_int(std::string_view(token).substr(1), "generator index"));
    }
    return GeneratorWord(n, std::move(letters));
  }

  GeneratorWord GeneratorWord::operator*(GeneratorWord const& that) const {
    if (_n != that._n) {
      throw domain_error("cannot concatenate words on different strand counts");
    }
    auto letters = _letters;
    letters.insert(letters.end(), that._letters.begin(), that._letters.end());
    return GeneratorWord(_n, std::move(letters));
  }

  std::string GeneratorWord::to_string() const {
    std::string out;
    for (auto i : _letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'h' + std::to_string(i);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // NormalForm
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> normal_form_violation(int                     n,
                                                   std::vector<int> const& k) {
    if (k.size() + 1 != static_cast<std::size_t>(n)) {
      throw domain_error("k-sequence of length " + std::to_string(k.size())
                         + " does not match n = " + std::to_string(n));
    }
    int last_i = 0;
    for (int i = 1; i < n; ++i) {
      int ki = k[i - 1];
      if (ki < 0 || ki > i) {
        return "k_" + std::to_string(i) + " = " + std::to_string(ki)
               + " is not in [0, " + std::to_string(i) + "]";
      }
      if (ki == 0) {
        continue;
      }
      if (last_i != 0 && !(last_i - k[last_i - 1] < i - ki)) {
        return "k_" + std::to_string(last_i) + " = "
               + std::to_string(k[last_i - 1]) + " and k_" + std::to_string(i)
               + " = " + std::to_string(ki) + " violate "
               + std::to_string(last_i) + " - " + std::to_string(k[last_i - 1])
               + " < " + std::to_string(i) + " - " + std::to_string(ki);
      }
      last_i = i;
    }
    return std::nullopt;
  }

  bool validate_normal_form(int n, std::vector<int> const& k) {
    return !normal_form_violation(n, k).has_value();
  }

  NormalForm::NormalForm(int n, std::vector<int> k) : _n(n), _k(std::move(k)) {
    check_strands(n);
    if (auto why = normal_form_violation(n, _k)) {
      throw domain_error("not a normal form: " + *why);
    }
  }

  NormalForm NormalForm::unit(int n) {
    check_strands(n);
    return NormalForm(n, std::vector<int>(static_cast<std::size_t>(n - 1), 0));
  }

  NormalForm NormalForm::parse(std::string_view text) {
    std::vector<int> k;
    std::size_t      start = 0;
    while (true) {
      auto comma = text.find(',', start);
      auto piece = text.substr(start, comma == text.npos ? text.npos
                                                         : comma - start);
      while (!piece.empty() && piece.front() == ' ') {
        piece.remove_prefix(1);
      }
      while (!piece.empty() && piece.back() == ' ') {
        piece.remove_suffix(1);
      }
      k.push_back(parse_int(piece, "k-sequence entry"));
      if (comma == text.npos) {
        break;
      }
      start = comma + 1;
    }
    int const n = static_cast<int>(k.size()) + 1;
    return NormalForm(n, std::move(k));
  }

  bool NormalForm::is_unit() const noexcept {
    return std::all_of(_k.begin(), _k.end(), [](int x) { return x == 0; });
  }

  std::optional<int> NormalForm::max_index() const noexcept {
    for (int i = _n - 1; i >= 1; --i) {
      if (_k[i - 1] > 0) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::string NormalForm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _k.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(_k[i]);
    }
    return out;
  }

  std::strong_ordering
  NormalForm::operator<=>(NormalForm const& that) const noexcept {
    if (auto c = _n <=> that._n; c != 0) {
      return c;
    }
    for (auto i = _k.size(); i-- > 0;) {
      if (auto c = _k[i] <=> that._k[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering lex_compare(NormalForm const& a, NormalForm const& b) {
    if (a.n() != b.n()) {
      throw domain_error("cannot compare normal forms on "
                         + std::to_string(a.n()) + " and "
                         + std::to_string(b.n()) + " strands");
    }
    return a <=> b;
  }

  std::vector<NormalForm> enumerate_basis(int n) {
    check_strands(n);
    std::vector<NormalForm> out;
    std::vector<int>        k(static_cast<std::size_t>(n - 1), 0);
    // offsets i - k_i are >= 0, so -1 admits any first block
    enumerate(n, 1, -1, k, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  GeneratorWord expand_to_word(NormalForm const& t) {
    std::vector<int> letters;
    for (int i = 1; i < t.n(); ++i) {
      for (int j = i; j > i - t.k(i); --j) {
        letters.push_back(j);
      }
    }
    return GeneratorWord(t.n(), std::move(letters));
  }

  BasisProduct multiply_basis(NormalForm const& a, NormalForm const& b) {
    if (a.n() != b.n()) {
      throw domain_error("cannot multiply normal forms on "
                         + std::to_string(a.n()) + " and "
                         + std::to_string(b.n()) + " strands");
    }
    auto c = compose_diagrams(normal_form_diagram(a), normal_form_diagram(b));
    return {c.loops, diagram_to_normal_form(c.diagram)};
  }

  BasisProduct normalize(GeneratorWord const& w) {
    auto c = word_to_diagram(w);
    return {c.loops, diagram_to_normal_form(c.diagram)};
  }

}  // namespace tlb
