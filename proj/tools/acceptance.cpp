// Acceptance run: one pass/fail line per criterion. A criterion whose literal claim is
// false in exact arithmetic prints FAIL; the exit status is 0 when every such failure is
// the pinned, already analysed one and everything else passes.
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "qgraph/graphalg.hpp"
#include "qgraph/poisson.hpp"
#include "qgraph/qca.hpp"
#include "qgraph/rootcenter.hpp"
#include "qgraph/skein.hpp"

using namespace qgraph;

namespace {

// Runtime budgets in seconds, one per criterion. All checks are exact: tolerance is a zero residual.
constexpr double kBudget[10] = {0, 120, 60, 120, 1800, 900, 1200, 900, 600, 60};

std::vector<Task> tagged(const std::string& tag, std::vector<Task> tasks) {
  for (Task& t : tasks) t.id = tag + "/" + t.id;
  return tasks;
}

std::string tag(int n, int l) { return "n" + std::to_string(n) + ".l" + std::to_string(l); }

void append(std::vector<Task>& out, std::vector<Task> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<Task> filtered(std::vector<Task> tasks, const std::string& pattern) {
  std::regex re(pattern);
  std::vector<Task> out;
  for (Task& t : tasks)
    if (std::regex_search(t.id, re)) out.push_back(std::move(t));
  return out;
}

struct Criterion {
  int number;
  std::string claim;
  std::function<std::vector<Task>()> tasks;
  // Passing tasks whose ids match this pattern refute the literal claim.
  std::string refuted_by;
  // Exact set of failing ids expected when the literal claim is false.
  std::set<std::string> known_failures;
  std::string analysis;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;
  c.push_back({1, "presentation relations hold under Phi_n, n = 1, 2, 3",
               [] {
                 std::vector<Task> t;
                 for (int n : {1, 2, 3}) append(t, tagged(tag(n, 0), filtered(presentation_suite(n), "^presentation\\.(local|reflection|fusion|exchange)")));
                 return t;
               },
               "", {}, ""});
  c.push_back({2, "PBW monomials of degree <= 4 have independent Phi_1 images (Verma, symbolic weight)",
               [] { return filtered(alekseev_suite(1, 4), "injectivity"); }, "", {}, ""});
  c.push_back({3, "omega^(i) and eta commute with all generators for n <= 3; xi^(i) commute with value K^-1 at sites i..n",
               [] {
                 std::vector<Task> t;
                 for (int n : {1, 2, 3}) append(t, tagged(tag(n, 0), filtered(alekseev_suite(n, 4), "^alekseev\\.(center|xi)\\.")));
                 return t;
               },
               "alekseev\\.center\\.eta_not_central", {},
               "eta is central only for n = 1; for n >= 2 [eta, a^(1)] != 0 and the center is generated by the omega^(i). "
               "eta does commute with the omegas, with M^(1)...M^(n) and with qTr(M^[(2,...,2)])."});
  c.push_back({4, "root-of-unity center: powers central, degree-l relation, closed forms, T_l(Omega), l = 3, 5, n <= 2",
               [] {
                 std::vector<Task> t;
                 for (int l : {3, 5})
                   for (int n : {1, 2}) append(t, tagged(tag(n, l), center_suite(n, l)));
                 return t;
               },
               "", {}, ""});
  c.push_back({5, "Fr is a morphism onto a commutative subalgebra, coproduct identity, threaded traces central, n = 2, 3, l = 3",
               [] {
                 std::vector<Task> t;
                 for (int n : {2, 3}) {
                   append(t, tagged(tag(n, 3), frobenius_suite(n, 3)));
                   append(t, tagged(tag(n, 3), threading_suite(n, 3)));
                 }
                 return t;
               },
               "", {}, ""});
  c.push_back({6, "quantum coadjoint action: values, lift independence, sl(2) relations, exp series, invariance for n = 2",
               [] {
                 std::vector<Task> t;
                 for (int l : {3, 5})
                   for (int n : {1, 2}) append(t, tagged(tag(n, l), qca_suite(n, l, 4)));
                 return t;
               },
               "qca\\.sl2\\..*\\.ef_inner|qca\\.invariance\\.threaded_moves", {},
               "[E, F] = H holds on K, on the center and on Omega but not on E and F: the difference is the inner derivation "
               "ad(z^2 J / l). The diagonal E, F kill omega^(i), T_l(qTr M^(i)) and traces of site matrices, but not "
               "T_3(qTr(M^(1) M^(2))), whose Frobenius factors are dressed."});
  c.push_back({7, "Poisson: coordinate bracket from model and derivations, FR and QCA tables, dressing, group law, Fr is Poisson",
               [] {
                 std::vector<Task> t;
                 for (int l : {3, 5}) append(t, tagged(tag(1, l), poisson_suite(1, l)));
                 append(t, tagged(tag(2, 3), poisson_suite(2, 3)));
                 for (int n : {2, 3}) append(t, tagged(tag(n, 3), dressing_suite(n, 3)));
                 append(t, tagged(tag(1, 3), fr_poisson_suite(1, 3)));
                 append(t, tagged(tag(2, 3), fr_poisson_suite(2, 3)));
                 return t;
               },
               "",
               {"n1.l3/frpoisson.derivation.l11_1_l12_1", "n1.l3/frpoisson.derivation.l11_1_l21_1",
                "n1.l3/frpoisson.derivation.l12_1_l21_1", "n1.l3/frpoisson.derivation.l12_1_l22_1",
                "n1.l3/frpoisson.derivation.l21_1_l22_1", "n1.l3/frpoisson.model.sites1-1",
                "n2.l3/frpoisson.model.sites1-1", "n2.l3/frpoisson.model.sites2-2"},
               "the same-site Fock-Rosly bracket as printed gives {l12, l21} = 1 + l12 l21 - l11^2, the coordinate bracket "
               "pulls back to 1 + l12 l21 - l22^2. Cross-site pairs agree; swapping the two sandwich terms makes every "
               "same-site pair agree (frpoisson.*_swapped)."});
  c.push_back({8, "skein: Kauffman relation l = 3, 5; boundary images and independence n <= 3; threaded arcs central n = 3, l = 3",
               [] {
                 std::vector<Task> t;
                 for (int l : {3, 5}) append(t, kauffman_suite(l));
                 for (int n : {1, 2, 3}) append(t, tagged(tag(n, 0), wilson_suite(n)));
                 append(t, tagged(tag(3, 3), chebyshev_center_suite(3, 3)));
                 return t;
               },
               "", {}, ""});
  c.push_back({9, "normal-form product agrees with the Verma oracle and specialization is multiplicative, 100 pairs each",
               [] { return filtered(presentation_suite(1), "^presentation\\.oracle\\."); }, "", {}, ""});
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 0;
  std::vector<int> only;
  bool verbose = false;
  CLI::App app{"Acceptance criteria 1-9"};
  app.add_option("--jobs", jobs, "Worker threads (0: all cores)");
  app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 9));
  app.add_flag("--verbose", verbose, "Print every failing or refuting record");
  CLI11_PARSE(app, argc, argv);
  if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  int unexpected = 0;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Record> records = run_tasks(c.tasks(), jobs);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::set<std::string> failed;
    int passed = 0, skipped = 0, refuters = 0;
    bool refuter_failed = false;
    std::optional<std::regex> re;
    if (!c.refuted_by.empty()) re.emplace(c.refuted_by);
    for (const Record& r : records) {
      if (r.result.status == CheckResult::Status::Pass) ++passed;
      if (r.result.status == CheckResult::Status::Skipped) ++skipped;
      if (r.result.status == CheckResult::Status::Fail) failed.insert(r.id);
      if (re && std::regex_search(r.id, *re)) {
        ++refuters;
        refuter_failed |= r.result.status != CheckResult::Status::Pass;
        if (verbose) std::cout << "  refuting " << r.id << ": " << r.result.witness << "\n";
      }
      if (verbose && r.result.status == CheckResult::Status::Fail) std::cout << "  fail " << r.id << ": " << r.result.witness << "\n";
    }

    const bool literal_false_expected = re.has_value() || !c.known_failures.empty();
    const bool within_budget = secs <= kBudget[c.number];
    const bool clean = failed.empty() && skipped == 0 && refuters == 0;
    const bool known = literal_false_expected && skipped == 0 && failed == c.known_failures && (!re || (refuters > 0 && !refuter_failed));

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, kBudget[c.number]);
    std::cout << "criterion " << c.number << ": ";
    if (clean && within_budget && !literal_false_expected) {
      std::cout << "PASS  " << passed << "/" << records.size() << " exact checks, " << timing << "  " << c.claim << "\n";
      continue;
    }
    std::cout << "FAIL  ";
    if (known && within_budget) {
      std::cout << "literal claim is false (known): " << passed << "/" << records.size() << " checks pass";
      if (!failed.empty()) std::cout << ", " << failed.size() << " pinned failures";
      if (refuters > 0) std::cout << ", " << refuters << " refuting checks pass";
      std::cout << ", " << timing << "  " << c.claim << "\n    " << c.analysis << "\n";
      continue;
    }
    ++unexpected;
    std::cout << "unexpected: " << failed.size() << " failed, " << skipped << " skipped, " << refuters << " refuting, " << timing
              << "  " << c.claim << "\n";
    for (const std::string& id : failed)
      if (!c.known_failures.count(id)) std::cout << "    fail " << id << "\n";
    for (const std::string& id : c.known_failures)
      if (!failed.count(id)) std::cout << "    expected failure did not occur: " << id << "\n";
  }
  std::cout << (unexpected == 0 ? "acceptance: all results as expected\n" : "acceptance: unexpected results\n");
  return unexpected == 0 ? 0 : 1;
}
