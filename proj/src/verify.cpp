#include "tlb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tlb/errors.hpp"
#include "tlb/rank.hpp"
#include "tlb/remarks.hpp"

namespace tlb {

  namespace {

    using json = nlohmann::ordered_json;

    std::string at_np(int n, int p) {
      return "n=" + std::to_string(n) + ",p=" + std::to_string(p);
    }

    std::string bracket(NormalForm const& t) {
      return "[" + t.to_string() + "]";
    }

    void check_np(int n, int p) {
      if (n < 2) {
        throw domain_error("expected at least 2 strands, found "
                           + std::to_string(n));
      }
      if (p < 2) {
        throw domain_error("expected p >= 2, found " + std::to_string(p));
      }
    }

    BigInt big_power(int p, int e) {
      return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    }

    // Runs body(j) for j in [0, count) over `jobs` threads.
    template <typename F>
    void parallel_for(std::size_t count, unsigned jobs, F&& body) {
      jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
      if (jobs <= 1) {
        for (std::size_t j = 0; j < count; ++j) {
          body(j);
        }
        return;
      }
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t j = w; j < count; j += jobs) {
            body(j);
          }
        });
      }
    }

  }  // namespace

  void check_relation_budget(int n, int p, Budget const& budget) {
    check_np(n, p);
    // each relation holds p^n pairs of two 8-byte indices
    BigInt bytes = catalan(n) * big_power(p, n) * 16;
    if (bytes > budget.max_bytes) {
      throw resource_error("n = " + std::to_string(n) + ", p = "
                           + std::to_string(p) + " needs about " + bytes.str()
                           + " bytes of relations, over the max-bytes budget of "
                           + std::to_string(budget.max_bytes));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Triangularity
  ////////////////////////////////////////////////////////////////////////

  bool TriangularityReport::passed() const {
    return std::all_of(records.begin(), records.end(),
                       [](auto const& r) { return r.passed(); });
  }

  std::string TriangularityReport::first_failure() const {
    for (auto const& r : records) {
      if (!r.witness_is_pair) {
        return "witness " + r.witness.to_string() + " of " + bracket(r.element)
               + " is not one of its pairs";
      }
      if (r.violation_count != 0) {
        return "witness " + r.witness.to_string() + " of " + bracket(r.element)
               + " is a pair of earlier " + bracket(r.violations.front())
               + " (" + std::to_string(r.violation_count) + " violation"
               + (r.violation_count == 1 ? "" : "s") + ")";
      }
    }
    return "";
  }

  TriangularityReport verify_triangularity(std::vector<NormalForm> const& order,
                                           RelationProvider const& relation_of,
                                           int                     p,
                                           unsigned                jobs) {
    if (order.empty()) {
      throw domain_error("nothing to verify");
    }
    int const n = order.front().n();
    check_np(n, p);

    std::vector<Relation> relations(order.size(), Relation(0, 0));
    parallel_for(order.size(), jobs,
                 [&](std::size_t j) { relations[j] = relation_of(order[j]); });

    std::vector<ElementRecord> records(
        order.size(),
        ElementRecord{order.front(),
                      DiagonalPair{SWord(p, {}), SWord(p, {})},
                      false,
                      {},
                      0});
    parallel_for(order.size(), jobs, [&](std::size_t j) {
      auto& rec           = records[j];
      rec.element         = order[j];
      rec.witness         = element_witness(order[j], p);
      rec.witness_is_pair = is_pair_of(relations[j], rec.witness);
      auto const rc       = rec.witness.index_pair();
      for (std::size_t e = 0; e < j; ++e) {
        if (relations[e].contains(rc)) {
          if (rec.violations.size() < kMaxViolations) {
            rec.violations.push_back(order[e]);
          }
          ++rec.violation_count;
        }
      }
    });
    return {n, p, std::move(records)};
  }

  TriangularityReport verify_triangularity(int      n,
                                           int      p,
                                           unsigned jobs,
                                           Budget   budget) {
    check_relation_budget(n, p, budget);
    GeneratorSet const gens(n, p);
    return verify_triangularity(
        enumerate_basis(n),
        [&gens](NormalForm const& t) { return represent(gens, t); }, p, jobs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Rank oracle
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_vector_budget(int n, int p, Budget const& budget) {
      BigInt length = big_power(p, 2 * n);
      if (length > budget.max_vector_length) {
        throw resource_error("rank oracle needs vectors of length "
                             + length.str() + " for n = " + std::to_string(n)
                             + ", p = " + std::to_string(p)
                             + ", over the max-vector-length budget of "
                             + std::to_string(budget.max_vector_length));
      }
    }

  }  // namespace

  RankReport independence_check(GeneratorSet const& gens, Budget budget) {
    int const n = gens.n(), p = gens.p();
    check_vector_budget(n, p, budget);
    check_relation_budget(n, p, budget);
    std::vector<SparseVector> vectors;
    auto const                basis = enumerate_basis(n);
    for (auto const& t : basis) {
      vectors.push_back(flatten(represent(gens, t)));
    }
    return {n, p, basis.size(), exact_rank(vectors)};
  }

  RankReport independence_check(int n, int p, Budget budget) {
    check_np(n, p);
    check_vector_budget(n, p, budget);
    return independence_check(GeneratorSet(n, p), budget);
  }

  std::optional<DiagonalPair> bruteforce_witness(NormalForm const& t, int p) {
    int const          n = t.n();
    GeneratorSet const gens(n, p);
    std::vector<Relation> earlier;
    for (auto const& s : enumerate_basis(n)) {
      if (s == t) {
        break;
      }
      earlier.push_back(represent(gens, s));
    }
    auto const rel = represent(gens, t);
    for (auto const& rc : rel.pairs()) {
      if (std::none_of(earlier.begin(), earlier.end(),
                       [&](auto const& r) { return r.contains(rc); })) {
        return DiagonalPair{SWord::from_index(rc.first, n, p),
                            SWord::from_index(rc.second, n, p)};
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator identities and cross-checks
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> check_generator_identities(GeneratorSet const& gens) {
    int const                n = gens.n(), p = gens.p();
    std::vector<std::string> failures;
    auto                     where = " at " + at_np(n, p);
    auto h = [](int i) { return "h" + std::to_string(i); };
    auto R = [&](int i) -> Relation const& { return gens.relation(i); };
    auto M = [&](int i) { return gens.matrix(i); };
    auto const one = Relation::identity(gens.dimension());

    for (int i = 1; i < n; ++i) {
      if (compose_relations(one, R(i)) != R(i)
          || compose_relations(R(i), one) != R(i)) {
        failures.push_back("unit: 1 " + h(i) + " = " + h(i) + " 1 = " + h(i)
                           + " fails" + where);
      }
      if (compose_relations(R(i), R(i)) != R(i)) {
        failures.push_back("idempotent (relation): " + h(i) + " " + h(i)
                           + " = " + h(i) + " fails" + where);
      }
      if (M(i) * M(i) != M(i).scaled(p)) {
        failures.push_back("square (matrix): " + h(i) + " " + h(i) + " = p "
                           + h(i) + " fails" + where);
      }
      for (int j = i + 2; j < n; ++j) {
        if (compose_relations(R(i), R(j)) != compose_relations(R(j), R(i))) {
          failures.push_back("commute (relation): " + h(i) + " " + h(j) + " = "
                             + h(j) + " " + h(i) + " fails" + where);
        }
        if (M(i) * M(j) != M(j) * M(i)) {
          failures.push_back("commute (matrix): " + h(i) + " " + h(j) + " = "
                             + h(j) + " " + h(i) + " fails" + where);
        }
      }
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) {
          continue;
        }
        auto name = h(i) + " " + h(j) + " " + h(i) + " = " + h(i) + " fails";
        if (compose_relations(compose_relations(R(i), R(j)), R(i)) != R(i)) {
          failures.push_back("absorb (relation): " + name + where);
        }
        if (M(i) * M(j) * M(i) != M(i)) {
          failures.push_back("absorb (matrix): " + name + where);
        }
      }
    }
    return failures;
  }

  std::vector<std::string> check_reduced_word_purity(GeneratorSet const& gens) {
    std::vector<std::string> failures;
    for (auto const& t : enumerate_basis(gens.n())) {
      auto m = represent_by_product(gens, t);
      if (!m.is_zero_one()) {
        failures.push_back("product for " + bracket(t)
                           + " has entries other than 0 and 1");
      } else if (m.to_relation() != represent(gens, t)) {
        failures.push_back("product for " + bracket(t)
                           + " differs from its relation");
      }
    }
    return failures;
  }

  std::vector<std::string> check_product_consistency(GeneratorSet const& gens) {
    std::vector<std::string> failures;
    auto const               basis = enumerate_basis(gens.n());
    std::map<NormalForm, IntMatrix> matrix;
    for (auto const& t : basis) {
      matrix.emplace(t, IntMatrix::from_relation(represent(gens, t)));
    }
    for (auto const& a : basis) {
      for (auto const& b : basis) {
        auto [loops, c] = multiply_basis(a, b);
        auto scale      = static_cast<std::int64_t>(checked_power(gens.p(), loops));
        if (matrix.at(a) * matrix.at(b) != matrix.at(c).scaled(scale)) {
          failures.push_back(bracket(a) + " " + bracket(b) + " = p^"
                             + std::to_string(loops) + " " + bracket(c)
                             + " fails for the matrices");
        }
      }
    }
    return failures;
  }

  std::vector<std::string> check_diagram_round_trip(GeneratorSet const& gens) {
    std::vector<std::string> failures;
    std::set<Diagram>        seen;
    for (auto const& t : enumerate_basis(gens.n())) {
      auto [loops, d] = word_to_diagram(expand_to_word(t));
      if (loops != 0) {
        failures.push_back("word of " + bracket(t) + " closes "
                           + std::to_string(loops) + " loops");
      }
      if (auto back = diagram_to_normal_form(d); back != t) {
        failures.push_back(bracket(t) + " -> " + d.to_string() + " -> "
                           + bracket(back));
      }
      if (!seen.insert(d).second) {
        failures.push_back("diagram " + d.to_string() + " repeated at "
                           + bracket(t));
      }
      if (diagram_relation(d, gens.p()) != represent(gens, t)) {
        failures.push_back("diagram relation of " + bracket(t)
                           + " differs from its matrix relation");
      }
    }
    return failures;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suite runner
  ////////////////////////////////////////////////////////////////////////

  bool SuiteReport::passed() const {
    for (auto const& s : suites) {
      for (auto const& c : s.cases) {
        if (c.result.status == "fail") {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    template <typename F>
    CaseResult timed(F&& body) {
      auto       start = std::chrono::steady_clock::now();
      CaseResult out   = body();
      out.timing_ms    = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      return out;
    }

    CaseResult from_failures(std::vector<std::string> const& failures,
                             std::string const&              what) {
      if (failures.empty()) {
        return {"pass", what, std::nullopt, 0};
      }
      std::string detail = std::to_string(failures.size()) + " failure"
                           + (failures.size() == 1 ? "" : "s") + "; first: "
                           + failures.front();
      return {"fail", detail, std::nullopt, 0};
    }

    CaseResult skipped(std::string why) {
      return {"skipped", std::move(why), std::nullopt, 0};
    }

  }  // namespace

  SuiteReport full_suite(SuiteConfig const& config) {
    if (config.n_max < 2) {
      throw domain_error("n-max must be at least 2");
    }
    if (config.primes.empty()) {
      throw domain_error("no values of p given");
    }
    for (int p : config.primes) {
      check_np(config.n_max, p);
      check_relation_budget(config.n_max, p, config.budget);
    }

    SuiteReport report;
    report.n_max  = config.n_max;
    report.primes = config.primes;
    std::map<std::string, std::vector<SuiteCase>> cases;
    std::vector<std::string> const                names{
        "generator-identities", "reduced-word-purity", "diagram-round-trip",
        "product-consistency",  "remarks",             "triangularity",
        "independence",         "agreement"};

    for (int n = 2; n <= config.n_max; ++n) {
      for (int p : config.primes) {
        auto const   key = at_np(n, p);
        GeneratorSet gens(n, p);
        if (config.corrupt) {
          config.corrupt(gens);
        }
        auto add = [&](std::string const& suite, CaseResult r) {
          cases[suite].push_back({key, std::move(r)});
        };

        add("generator-identities", timed([&] {
              return from_failures(check_generator_identities(gens),
                                   "all generator identities hold");
            }));

        add("reduced-word-purity", timed([&] {
              if (n > config.purity_n_max) {
                return skipped("n above " + std::to_string(config.purity_n_max));
              }
              return from_failures(check_reduced_word_purity(gens),
                                   "every normal-form product is 0-1");
            }));

        add("diagram-round-trip", timed([&] {
              return from_failures(check_diagram_round_trip(gens),
                                   "normal forms and diagrams correspond");
            }));

        add("product-consistency", timed([&] {
              if (n > config.consistency_n_max) {
                return skipped("n above "
                               + std::to_string(config.consistency_n_max));
              }
              return from_failures(check_product_consistency(gens),
                                   "diagram products match matrix products");
            }));

        add("remarks", timed([&] {
              if (n > config.remarks_n_max) {
                return skipped("n above " + std::to_string(config.remarks_n_max));
              }
              auto rep = remark_predicates(n, p);
              for (auto const& r : rep.results) {
                if (!r.passed) {
                  return CaseResult{"fail",
                                    r.name + ": " + r.counterexample.value_or(""),
                                    std::nullopt, 0};
                }
              }
              return CaseResult{"pass", "all structural checks hold",
                                std::nullopt, 0};
            }));

        std::optional<bool> triangular, independent;
        add("triangularity", timed([&] {
              auto rep = verify_triangularity(
                  enumerate_basis(n),
                  [&gens](NormalForm const& t) { return represent(gens, t); }, p,
                  config.jobs);
              triangular = rep.passed();
              if (!rep.passed()) {
                return CaseResult{"fail", rep.first_failure(), std::nullopt, 0};
              }
              auto const& top = rep.records.back();
              return CaseResult{"pass",
                                std::to_string(rep.records.size())
                                    + " elements, no violations",
                                bracket(top.element) + " " + top.witness.to_string(),
                                0};
            }));

        add("independence", timed([&] {
              if (big_power(p, 2 * n) > config.budget.max_vector_length) {
                return skipped("vector length " + big_power(p, 2 * n).str()
                               + " over the max-vector-length budget of "
                               + std::to_string(config.budget.max_vector_length));
              }
              auto rep    = independence_check(gens, config.budget);
              independent = rep.passed();
              return CaseResult{rep.passed() ? "pass" : "fail",
                                "rank " + std::to_string(rep.rank) + " of "
                                    + std::to_string(rep.count),
                                std::nullopt, 0};
            }));

        add("agreement", timed([&] {
              if (!triangular || !independent) {
                return skipped("needs both triangularity and independence");
              }
              bool same = *triangular == *independent;
              return CaseResult{same ? "pass" : "fail",
                                std::string("triangularity ")
                                    + (*triangular ? "pass" : "fail")
                                    + ", independence "
                                    + (*independent ? "pass" : "fail"),
                                std::nullopt, 0};
            }));
      }
    }
    for (auto const& name : names) {
      report.suites.push_back({name, std::move(cases[name])});
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  std::string to_json(SuiteReport const& report, int indent) {
    json out;
    out["n_max"]  = report.n_max;
    out["p"]      = report.primes;
    out["status"] = report.passed() ? "pass" : "fail";
    json suites   = json::object();
    for (auto const& s : report.suites) {
      json cases = json::object();
      for (auto const& c : s.cases) {
        json r;
        r["status"] = c.result.status;
        r["detail"] = c.result.detail;
        if (c.result.witness) {
          r["witness"] = *c.result.witness;
        }
        r["timing_ms"] = c.result.timing_ms;
        cases[c.key]   = std::move(r);
      }
      suites[s.name] = std::move(cases);
    }
    out["suites"] = std::move(suites);
    return out.dump(indent);
  }

  SuiteReport suite_report_from_json(std::string_view text) {
    json        in = json::parse(text);
    SuiteReport report;
    report.n_max  = in.at("n_max").get<int>();
    report.primes = in.at("p").get<std::vector<int>>();
    for (auto const& [name, cases] : in.at("suites").items()) {
      Suite s{name, {}};
      for (auto const& [key, r] : cases.items()) {
        CaseResult c;
        c.status = r.at("status").get<std::string>();
        c.detail = r.at("detail").get<std::string>();
        if (r.contains("witness")) {
          c.witness = r.at("witness").get<std::string>();
        }
        c.timing_ms = r.at("timing_ms").get<double>();
        s.cases.push_back({key, std::move(c)});
      }
      report.suites.push_back(std::move(s));
    }
    return report;
  }

  std::string to_text(SuiteReport const& report) {
    std::ostringstream out;
    for (auto const& s : report.suites) {
      for (auto const& c : s.cases) {
        out << s.name << ' ' << c.key << ' ' << c.result.status << ' '
            << static_cast<long long>(c.result.timing_ms) << "ms "
            << c.result.detail;
        if (c.result.witness) {
          out << " | " << *c.result.witness;
        }
        out << '\n';
      }
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

  std::string to_csv(SuiteReport const& report) {
    auto quote = [](std::string const& field) {
      if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
      }
      std::string out = "\"";
      for (char c : field) {
        if (c == '"') {
          out += '"';
        }
        out += c;
      }
      return out + '"';
    };
    std::ostringstream out;
    out << "suite,case,status,timing_ms,detail,witness\n";
    for (auto const& s : report.suites) {
      for (auto const& c : s.cases) {
        out << quote(s.name) << ',' << quote(c.key) << ',' << c.result.status
            << ',' << c.result.timing_ms << ',' << quote(c.result.detail) << ','
            << quote(c.result.witness.value_or("")) << '\n';
      }
    }
    return out.str();
  }

}  // namespace tlb
