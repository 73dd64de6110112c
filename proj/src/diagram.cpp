#include "tlb/diagram.hpp"

#include <algorithm>
#include <optional>
#include <regex>

#include "tlb/diagonals.hpp"
#include "tlb/errors.hpp"

namespace tlb {

  namespace {

    // Position of a point on the boundary circle: bottom row left to right,
    // then the top row right to left.
    int circle_position(int n, int point) {
      return point <= n ? point : 3 * n + 1 - point;
    }

  }  // namespace

  bool is_noncrossing(int n, std::vector<Diagram::Thread> const& threads) {
    std::vector<int> other(static_cast<std::size_t>(2 * n + 1), 0);
    for (auto [a, b] : threads) {
      int x = circle_position(n, a), y = circle_position(n, b);
      other[x] = y;
      other[y] = x;
    }
    std::vector<int> stack;
    for (int pos = 1; pos <= 2 * n; ++pos) {
      if (other[pos] > pos) {
        stack.push_back(pos);
      } else {
        if (stack.empty() || stack.back() != other[pos]) {
          return false;
        }
        stack.pop_back();
      }
    }
    return stack.empty();
  }

  Diagram Diagram::from_threads(int n, std::vector<Thread> const& threads) {
    if (n < 1) {
      throw domain_error("a diagram needs at least 1 strand");
    }
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    auto             claim = [&](int x, int y) {
      if (x < 1 || x > 2 * n) {
        throw domain_error("point " + std::to_string(x) + " out of range 1.."
                           + std::to_string(2 * n));
      }
      if (partner[x - 1] != -1) {
        throw domain_error("point " + std::to_string(x) + " matched twice");
      }
      partner[x - 1] = y - 1;
    };
    for (auto [a, b] : threads) {
      if (a == b) {
        throw domain_error("point " + std::to_string(a)
                           + " matched with itself");
      }
      claim(a, b);
      claim(b, a);
    }
    if (std::find(partner.begin(), partner.end(), -1) != partner.end()) {
      throw domain_error("not a perfect matching on 1.."
                         + std::to_string(2 * n));
    }
    if (!is_noncrossing(n, threads)) {
      throw domain_error("threads cross");
    }
    return Diagram(n, std::move(partner));
  }

  Diagram Diagram::parse(int n, std::string_view text) {
    static std::regex const shape(
        R"(\s*\[\s*(\(\s*\d{1,9}\s*,\s*\d{1,9}\s*\)\s*(,\s*\(\s*\d{1,9}\s*,\s*\d{1,9}\s*\)\s*)*)?\]\s*)");
    std::string const s(text);
    if (!std::regex_match(s, shape)) {
      throw domain_error("malformed diagram \"" + s
                         + "\", expected [(a,b),(c,d),...]");
    }
    std::vector<int> numbers;
    static std::regex const number(R"(\d{1,9})");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), number);
         it != std::sregex_iterator(); ++it) {
      numbers.push_back(std::stoi(it->str()));
    }
    std::vector<Thread> threads;
    for (std::size_t i = 0; i < numbers.size(); i += 2) {
      threads.emplace_back(numbers[i], numbers[i + 1]);
    }
    return from_threads(n, threads);
  }

  Diagram Diagram::identity(int n) {
    std::vector<Thread> threads;
    for (int j = 1; j <= n; ++j) {
      threads.emplace_back(j, n + j);
    }
    return from_threads(n, threads);
  }

  Diagram Diagram::generator(int n, int i) {
    if (i < 1 || i > n - 1) {
      throw domain_error("generator h" + std::to_string(i)
                         + " out of range for n = " + std::to_string(n));
    }
    std::vector<Thread> threads{{i, i + 1}, {n + i, n + i + 1}};
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        threads.emplace_back(j, n + j);
      }
    }
    return from_threads(n, threads);
  }

  std::vector<Diagram::Thread> Diagram::threads() const {
    std::vector<Thread> out;
    for (int x = 1; x <= 2 * _n; ++x) {
      int y = partner(x);
      if (x < y) {
        out.emplace_back(x, y);
      }
    }
    return out;
  }

  int Diagram::through_strands() const {
    int count = 0;
    for (int x = 1; x <= _n; ++x) {
      count += partner(x) > _n;
    }
    return count;
  }

  std::string Diagram::to_string() const {
    std::string out = "[";
    for (auto [a, b] : threads()) {
      if (out.size() > 1) {
        out += ',';
      }
      out += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
    }
    return out + ']';
  }

  Composite compose_diagrams(Diagram const& lower, Diagram const& upper) {
    int const n = lower.n();
    if (upper.n() != n) {
      throw domain_error("cannot compose diagrams on " + std::to_string(n)
                         + " and " + std::to_string(upper.n()) + " strands");
    }
    // Points of the stack: lower's bottom row, the shared middle row, and
    // upper's top row. Walk from an outer point until another outer point.
    std::vector<bool> middle_seen(static_cast<std::size_t>(n + 1), false);
    std::vector<int>  result(static_cast<std::size_t>(2 * n), -1);

    // Enters `d` at point x (1-based in d's labelling) and follows the stack.
    // Returns the outer endpoint in result labelling.
    auto walk = [&](bool in_lower, int x) {
      while (true) {
        Diagram const& d = in_lower ? lower : upper;
        int            y = d.partner(x);
        if (in_lower) {
          if (y <= n) {
            return y;  // lower bottom row
          }
          int m          = y - n;
          middle_seen[m] = true;
          in_lower       = false;
          x              = m;  // upper's bottom row
        } else {
          if (y > n) {
            return y;  // upper top row
          }
          int m          = y;
          middle_seen[m] = true;
          in_lower       = true;
          x              = n + m;  // lower's top row
        }
      }
    };

    for (int x = 1; x <= 2 * n; ++x) {
      if (result[x - 1] != -1) {
        continue;
      }
      bool in_lower = x <= n;
      // in upper, outer top point n+j keeps its label
      int y         = walk(in_lower, x);
      result[x - 1] = y - 1;
      result[y - 1] = x - 1;
    }

    int loops = 0;
    for (int m = 1; m <= n; ++m) {
      if (middle_seen[m]) {
        continue;
      }
      ++loops;
      int  cur      = m;
      bool in_lower = true;
      do {
        middle_seen[cur] = true;
        if (in_lower) {
          cur = lower.partner(n + cur) - n;
        } else {
          cur = upper.partner(cur);
        }
        in_lower = !in_lower;
      } while (!(cur == m && in_lower));
    }

    std::vector<Diagram::Thread> threads;
    for (int x = 1; x <= 2 * n; ++x) {
      if (x < result[x - 1] + 1) {
        threads.emplace_back(x, result[x - 1] + 1);
      }
    }
    return {loops, Diagram::from_threads(n, threads)};
  }

  Composite word_to_diagram(GeneratorWord const& w) {
    Composite acc{0, Diagram::identity(w.n())};
    for (int i : w.letters()) {
      auto next = compose_diagrams(acc.diagram, Diagram::generator(w.n(), i));
      acc.loops += next.loops;
      acc.diagram = std::move(next.diagram);
    }
    return acc;
  }

  Diagram normal_form_diagram(NormalForm const& t) {
    return word_to_diagram(expand_to_word(t)).diagram;
  }

  namespace {

    // The diagram of the single block h_{i,k}.
    Diagram block_diagram(int n, int i, int k) {
      std::vector<int> letters;
      for (int j = i; j > i - k; --j) {
        letters.push_back(j);
      }
      return word_to_diagram(GeneratorWord(n, letters)).diagram;
    }

    // Peels the last block h_{i,k} off d = d' h_{i,k}, where i + 1 is the
    // rightmost strand that is not vertical and h_{i,k} puts its top cap at
    // a = i - k + 1. Every candidate k is checked by recomposing, and the
    // blocks found further down must have strictly smaller cap positions.
    std::optional<std::vector<int>> solve(Diagram const& d, int bound) {
      int const n = d.n();
      int       r = 0;
      for (int j = n; j >= 1; --j) {
        if (d.partner(j) != n + j) {
          r = j;
          break;
        }
      }
      if (r == 0) {
        return std::vector<int>(static_cast<std::size_t>(n - 1), 0);
      }
      int const i = r - 1;
      if (i < 1) {
        return std::nullopt;
      }
      for (int k = 1; k <= i; ++k) {
        int const a = i - k + 1;
        if (a >= bound || d.partner(n + a) != n + a + 1) {
          continue;
        }
        auto relabel = [&](int x) {
          if (x <= n) {
            return x == i + 1 ? n + i : x;
          }
          int j = x - n;
          if (j < a || j > i + 1) {
            return n + j;
          }
          return n + j - 2;  // a + 2 <= j <= i + 1
        };
        std::vector<Diagram::Thread> threads{{i + 1, n + i + 1}};
        for (auto [x, y] : d.threads()) {
          if (x == n + a && y == n + a + 1) {
            continue;
          }
          threads.emplace_back(relabel(x), relabel(y));
        }
        if (!is_noncrossing(n, threads)) {
          continue;
        }
        auto below = Diagram::from_threads(n, threads);
        auto check = compose_diagrams(below, block_diagram(n, i, k));
        if (check.loops != 0 || check.diagram != d) {
          continue;
        }
        if (auto ks = solve(below, a)) {
          (*ks)[i - 1] = k;
          return ks;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  NormalForm diagram_to_normal_form(Diagram const& d) {
    if (d.n() < 2) {
      throw domain_error("normal forms need at least 2 strands");
    }
    auto ks = solve(d, d.n() + 1);
    if (!ks) {
      throw internal_error("no normal form found for diagram " + d.to_string());
    }
    return NormalForm(d.n(), std::move(*ks));
  }

  bool diagram_fits_pair(Diagram const& d, SWord const& w1, SWord const& w2) {
    auto const n = static_cast<std::size_t>(d.n());
    if (w1.size() != n || w2.size() != n) {
      throw domain_error("S-words of lengths " + std::to_string(w1.size())
                         + " and " + std::to_string(w2.size())
                         + " do not fit a diagram on " + std::to_string(n)
                         + " strands");
    }
    auto symbol = [&](int x) {
      auto pos = static_cast<std::size_t>(x);
      return pos <= n ? w1.at(pos) : w2.at(pos - n);
    };
    for (auto [a, b] : d.threads()) {
      if (symbol(a) != symbol(b)) {
        return false;
      }
    }
    return true;
  }

}  // namespace tlb
