// Command-line front end: basis listing, word normalization, matrix and
// witness emission, and the verification suites.
//
// Exit status: 0 success, 1 verification failure, 2 usage or resource error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "tlb/brauer.hpp"
#include "tlb/core.hpp"
#include "tlb/diagonals.hpp"
#include "tlb/diagram.hpp"
#include "tlb/errors.hpp"
#include "tlb/verify.hpp"

namespace {

  using json = nlohmann::ordered_json;

  constexpr int kFailure = 1;
  constexpr int kUsage   = 2;

  enum class Format { text, json, csv };

  struct Options {
    int              n     = 0;
    int              n_max = 4;
    std::vector<int> primes{2};
    std::string      elem;
    std::string      word;
    bool             dense   = false;
    bool             as_json = false;
    bool             as_csv  = false;
    unsigned         jobs    = 1;
    tlb::Budget      budget;

    Format format() const {
      return as_json ? Format::json : as_csv ? Format::csv : Format::text;
    }

    int p() const {
      if (primes.size() != 1) {
        throw tlb::domain_error("expected a single value for --p");
      }
      return primes.front();
    }
  };

  tlb::NormalForm parse_element(Options const& o) {
    auto t = tlb::NormalForm::parse(o.elem);
    if (t.n() != o.n) {
      throw tlb::domain_error("k-sequence \"" + o.elem + "\" has "
                              + std::to_string(t.n() - 1)
                              + " entries, expected " + std::to_string(o.n - 1)
                              + " for n = " + std::to_string(o.n));
    }
    return t;
  }

  std::string word_text(tlb::GeneratorWord const& w) {
    return w.empty() ? "1" : w.to_string();
  }

  int cmd_basis(Options const& o) {
    auto const basis = tlb::enumerate_basis(o.n);
    switch (o.format()) {
      case Format::json: {
        json out = json::array();
        for (std::size_t j = 0; j < basis.size(); ++j) {
          out.push_back({{"index", j + 1},
                         {"k", basis[j].k()},
                         {"word", word_text(tlb::expand_to_word(basis[j]))},
                         {"diagram", tlb::normal_form_diagram(basis[j]).to_string()}});
        }
        std::cout << out.dump(2) << '\n';
        break;
      }
      case Format::csv:
        std::cout << "index,k,word,diagram\n";
        for (std::size_t j = 0; j < basis.size(); ++j) {
          std::cout << j + 1 << ",\"" << basis[j].to_string() << "\","
                    << word_text(tlb::expand_to_word(basis[j])) << ",\""
                    << tlb::normal_form_diagram(basis[j]).to_string() << "\"\n";
        }
        break;
      case Format::text:
        for (std::size_t j = 0; j < basis.size(); ++j) {
          std::cout << j + 1 << " | " << basis[j].to_string() << " | "
                    << word_text(tlb::expand_to_word(basis[j])) << " | "
                    << tlb::normal_form_diagram(basis[j]).to_string() << '\n';
        }
        break;
    }
    return 0;
  }

  int cmd_normalize(Options const& o) {
    auto [m, t] = tlb::normalize(tlb::GeneratorWord::parse(o.n, o.word));
    if (o.format() == Format::json) {
      std::cout << json{{"loops", m}, {"k", t.k()}}.dump() << '\n';
    } else {
      std::cout << "p^" << m << " * [" << t.to_string() << "]\n";
    }
    return 0;
  }

  int cmd_matrix(Options const& o) {
    auto const t   = parse_element(o);
    int const  p   = o.p();
    auto const rel = tlb::represent(t, p);
    if (o.dense) {
      if (rel.rows() > 64) {
        throw tlb::domain_error("--dense needs p^n <= 64, found "
                                + std::to_string(rel.rows()));
      }
      std::cout << tlb::to_dense(rel);
      return 0;
    }
    switch (o.format()) {
      case Format::json: {
        json pairs = json::array();
        for (auto [r, c] : rel.pairs()) {
          pairs.push_back({r, c});
        }
        std::cout << json{{"n", o.n}, {"p", p}, {"k", t.k()},
                          {"rows", rel.rows()}, {"cols", rel.cols()},
                          {"pairs", pairs}}
                         .dump()
                  << '\n';
        break;
      }
      case Format::csv:
        std::cout << "row,col\n";
        for (auto [r, c] : rel.pairs()) {
          std::cout << r << ',' << c << '\n';
        }
        break;
      case Format::text:
        std::cout << tlb::to_coo(rel);
        break;
    }
    return 0;
  }

  int cmd_witness(Options const& o) {
    auto const t     = parse_element(o);
    int const  p     = o.p();
    auto const basis = tlb::enumerate_basis(o.n);
    auto const w     = tlb::element_witness(t, p);
    auto const rc    = w.index_pair();
    tlb::GeneratorSet const gens(o.n, p);

    bool const               own = tlb::represent(gens, t).contains(rc);
    std::size_t              predecessors = 0;
    std::vector<std::string> present;
    for (auto const& s : basis) {
      if (s == t) {
        break;
      }
      ++predecessors;
      if (tlb::represent(gens, s).contains(rc)) {
        present.push_back(s.to_string());
      }
    }
    bool const ok = own && present.empty();

    if (o.format() == Format::json) {
      std::cout << json{{"k", t.k()},
                        {"first", w.first.to_string()},
                        {"second", w.second.to_string()},
                        {"row", rc.first},
                        {"col", rc.second},
                        {"is_pair", own},
                        {"predecessors", predecessors},
                        {"present_in", present}}
                       .dump()
                << '\n';
    } else {
      std::cout << w.to_string();
      if (!own) {
        std::cout << "; not a pair of [" << t.to_string() << "]";
      }
      if (present.empty()) {
        std::cout << "; absent from " << predecessors << " predecessors\n";
      } else {
        std::cout << "; present in " << present.size() << " of "
                  << predecessors << " predecessors:";
        for (auto const& s : present) {
          std::cout << " [" << s << "]";
        }
        std::cout << '\n';
      }
    }
    return ok ? 0 : kFailure;
  }

  int cmd_verify(Options const& o) {
    tlb::SuiteConfig config;
    config.n_max  = o.n_max;
    config.primes = o.primes;
    config.budget = o.budget;
    config.jobs   = o.jobs;
    auto report   = tlb::full_suite(config);
    switch (o.format()) {
      case Format::json:
        std::cout << tlb::to_json(report) << '\n';
        break;
      case Format::csv:
        std::cout << tlb::to_csv(report);
        break;
      case Format::text:
        std::cout << tlb::to_text(report);
        break;
    }
    return report.passed() ? 0 : kFailure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb normal forms and Brauer's 0-1 matrices"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* cmd) {
    auto j = cmd->add_flag("--json", o.as_json, "JSON output");
    auto c = cmd->add_flag("--csv", o.as_csv, "CSV output");
    j->excludes(c);
  };
  auto add_n = [&o](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "number of strands")
        ->required()
        ->check(CLI::Range(2, 64));
  };
  auto add_p = [&o](CLI::App* cmd, char const* help) {
    cmd->add_option("--p", o.primes, help)
        ->delimiter(',')
        ->check(CLI::Range(2, 1 << 16));
  };

  auto basis = app.add_subcommand("basis", "list the basis in lexicographic order");
  add_n(basis);
  add_format(basis);

  auto normalize = app.add_subcommand("normalize", "reduce a word to p^m times a normal form");
  add_n(normalize);
  normalize->add_option("word", o.word, "word such as \"h1 h2 h1\"")->required();
  add_format(normalize);

  auto matrix = app.add_subcommand("matrix", "emit the 0-1 matrix of a basis element");
  add_n(matrix);
  add_p(matrix, "loop value");
  matrix->add_option("--elem", o.elem, "k-sequence such as 0,2")->required();
  matrix->add_flag("--dense", o.dense, "0/1 grid, p^n <= 64");
  add_format(matrix);

  auto witness = app.add_subcommand("witness", "emit the triangularity witness of a basis element");
  add_n(witness);
  add_p(witness, "loop value");
  witness->add_option("--elem", o.elem, "k-sequence such as 0,2")->required();
  add_format(witness);

  auto verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--n-max", o.n_max, "largest number of strands")
      ->check(CLI::Range(2, 64));
  add_p(verify, "comma separated loop values");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--max-bytes", o.budget.max_bytes,
                     "memory budget for the relations of one case")
      ->envname("TLB_MAX_BYTES");
  verify->add_option("--max-vector-length", o.budget.max_vector_length,
                     "longest vector the rank computation accepts");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*basis) {
      return cmd_basis(o);
    }
    if (*normalize) {
      return cmd_normalize(o);
    }
    if (*matrix) {
      return cmd_matrix(o);
    }
    if (*witness) {
      return cmd_witness(o);
    }
    return cmd_verify(o);
  } catch (tlb::domain_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (tlb::resource_error const& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
}
