#include "hamloc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <tuple>

#include "hamloc/error.hpp"
#include "hamloc/theorems.hpp"

namespace hamloc::suite {

namespace th = hamloc::theorems;
using nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Excluded: return "excluded";
  }
  return "fail";
}

namespace {

struct Outcome {
  Status status;
  ordered_json witness;
};

Outcome verdict(bool ok, ordered_json witness) { return {ok ? Status::Pass : Status::Fail, std::move(witness)}; }

Outcome excluded(std::string reason) { return {Status::Excluded, ordered_json{{"reason", std::move(reason)}}}; }

std::string q(const Rational& r) { return format_rational(r); }
std::string z(const BigInt& b) { return b.get_str(); }

ordered_json ints(const std::vector<BigInt>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& b : v) out.push_back(z(b));
  return out;
}

// Coefficients of the pure-g part, lowest degree first.
ordered_json series(const TruncPoly& p) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i <= p.trunc_order(); ++i) out.push_back(q(p.coefficient(0, i)));
  return out;
}

Outcome check_model(int n, const SuiteOptions&) {
  const HamiltonianModel m = grassmannian_model(n);
  const auto violations = validate_model(m);
  const TruncPoly uy = restrict_u_tilde(m, ComponentName::Y);
  const TruncPoly expected = TruncPoly::g(n) - TruncPoly::t(n);
  ordered_json w{{"violations", violations.size()}, {"u_tilde_at_y", uy.to_string("v")},
                 {"moment_gap", q(m.moment_gap())}};
  return verdict(violations.empty() && uy == expected, std::move(w));
}

Outcome check_betti(int n, const SuiteOptions&) {
  const auto b = th::betti_numbers(n, n);
  bool shape = true;
  for (std::size_t i = 0; i < b.betti.size(); ++i) {
    const int want = i % 2 == 1 ? 0 : (static_cast<int>(i) == 2 * n ? 2 : 1);
    shape = shape && b.betti[i] == want;
  }
  ordered_json w{{"betti", b.betti}, {"palindromic", b.palindromic}, {"euler_characteristic", b.euler_characteristic}};
  return verdict(shape && b.palindromic && b.euler_characteristic == 2 * n + 2, std::move(w));
}

Outcome check_ab(int n, const SuiteOptions&) {
  const auto ab = th::coefficients_AB(n);
  ordered_json w{{"A", z(ab.a)},
                 {"B", z(ab.b)},
                 {"closed_forms",
                  {{"statement_A", ab.statement_a_matches},
                   {"statement_B", ab.statement_b_matches},
                   {"proof_A", ab.proof_a_matches},
                   {"proof_B", ab.proof_b_matches}}}};
  // For n = 1 the displayed sums omit the constant term; only B = 2A is required.
  const bool forms = n == 1 || (ab.statement_a_matches && ab.statement_b_matches && ab.proof_a_matches &&
                                ab.proof_b_matches);
  return verdict(ab.b == 2 * ab.a && forms, std::move(w));
}

Outcome check_lift(int n, const SuiteOptions&) {
  const HamiltonianModel m = grassmannian_model(n);
  const auto lambda = lift_cofactor(m);
  const TruncPoly expected = TruncPoly::t(n) + TruncPoly::monomial(n, 0, 1, 2);
  ordered_json w{{"cofactor", lambda ? lambda->to_string() : "none"}};
  return verdict(lambda && *lambda == expected, std::move(w));
}

Outcome check_divisibility(int n, const SuiteOptions& opts) {
  if (n < 2) return excluded("requires n >= 2");
  const HamiltonianModel grass = grassmannian_model(n);
  bool ok = true;
  ordered_json counts = ordered_json::object();
  ordered_json a0_two;
  for (auto variant : {th::DivisibilityVariant::Direct, th::DivisibilityVariant::WithTFactor}) {
    ordered_json per_m = ordered_json::array();
    for (int m = 1; m <= 6; ++m) {
      const auto sols = th::euler_divisibility_solutions(n, m, variant, opts.a0_bound);
      per_m.push_back(sols.size());
      for (const auto& s : sols) ok = ok && th::verify_solution(s);
      if (m >= 2) ok = ok && sols.empty();
      if (m == 1 && variant == th::DivisibilityVariant::Direct) {
        auto it = std::find_if(sols.begin(), sols.end(), [](const auto& s) { return s.a0 == 2; });
        bool matches = it != sols.end();
        // The a0 = 2 cofactor is the Euler class at X of the model.
        for (int k = 1; matches && k <= n; ++k)
          matches = Rational(it->cofactor[static_cast<std::size_t>(k - 1)]) == grass.x.euler_class.coefficient(n - k, k);
        ok = ok && matches;
        if (it != sols.end()) a0_two = ints(it->cofactor);
      }
    }
    counts[std::string(th::to_string(variant))] = std::move(per_m);
  }
  ordered_json w{{"a0_bound", opts.a0_bound}, {"solutions_by_m", std::move(counts)}, {"a0_2_cofactor", a0_two}};
  return verdict(ok, std::move(w));
}

Outcome check_c1(int n, const SuiteOptions&) {
  const HamiltonianModel m = grassmannian_model(n);
  const Rational c1 = th::c1_from_fixed_data(m);
  const Rational swapped = th::c1_from_pair(m.y.weight_sum(), m.y.moment_value, m.x.weight_sum(), m.x.moment_value);
  ordered_json w{{"c1", q(c1)}, {"swapped", q(swapped)}};
  return verdict(c1 == 2 * n && swapped == c1, std::move(w));
}

Outcome check_weight_bound(int n, const SuiteOptions&) {
  if (n < 2) return excluded("a single weight cannot form an admissible non-semifree set");
  int admissible = 0, rejected = 0, violations = 0;
  Rational worst = 0;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  // Non-decreasing sequences over {1..4} enumerate the multisets.
  while (true) {
    if (w.back() >= 2) {
      try {
        const auto b = th::semifree_c1_bound(n, w);
        ++admissible;
        if (!b.bound_holds) ++violations;
        worst = std::max(worst, b.c1_coeff);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Precondition) throw;
        ++rejected;
      }
    }
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == 4) --i;
    if (i < 0) break;
    const int next = w[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < n; ++j) w[static_cast<std::size_t>(j)] = next;
  }
  ordered_json out{{"admissible", admissible}, {"rejected", rejected}, {"violations", violations},
                   {"max_c1", q(worst)}, {"bound", 2 * n}};
  return verdict(violations == 0 && admissible > 0, std::move(out));
}

Outcome check_factor(int n, const SuiteOptions& opts) {
  if (n < 2) return excluded("requires n >= 2");
  const auto sols = th::non_semifree_factor_search(n, opts.a0_bound);
  bool ok = n % 2 == 1 ? !sols.empty() : sols.empty();
  ordered_json found = ordered_json::array();
  for (const auto& s : sols) {
    ok = ok && s.a0 == 0 && th::verify_solution(s);
    found.push_back({{"a0", s.a0}, {"cofactor", ints(s.cofactor)}});
  }
  return verdict(ok, ordered_json{{"a0_bound", opts.a0_bound}, {"solutions", std::move(found)}});
}

Outcome check_obstruction(int n, const SuiteOptions&) {
  if (n < 3 || n % 2 == 0) return excluded("the configuration requires odd n >= 3");
  const auto o = th::non_semifree_obstruction(n);
  ordered_json w{{"raw", o.raw.to_string()},
                 {"normalized_x", q(o.normalized_x)},
                 {"normalized_y", q(o.normalized_y)},
                 {"normalized_total", q(o.normalized_total)},
                 {"expected_component", q(o.expected_component)},
                 {"semifree_vanishes", o.semifree_vanishes}};
  const bool ok = !o.raw.is_zero() && o.normalized_x == o.expected_component &&
                  o.normalized_y == o.expected_component && o.normalized_total != 0 && o.semifree_vanishes;
  return verdict(ok, std::move(w));
}

Outcome check_euler(int n, const SuiteOptions&) {
  const auto d = th::derive_euler_classes(n);
  ordered_json w{{"a", d.a ? q(*d.a) : "unset"}, {"b", d.b ? q(*d.b) : "unset"},
                 {"e_x", d.e_x.to_string("u")}, {"e_y", d.e_y.to_string("v")}};
  bool ok = d.identity_holds && d.integrals_vanish;
  if (n == 1)
    ok = ok && d.e_x == TruncPoly::t(1);
  else
    ok = ok && d.a == Rational(2) && d.b == Rational(2);
  return verdict(ok, std::move(w));
}

Outcome check_normal(int n, const SuiteOptions&) {
  const TruncPoly c = th::normal_chern_class(n);
  bool integral = true;
  for (const auto& [m, coeff] : c.terms()) integral = integral && is_integer(coeff);
  const HamiltonianModel grass = grassmannian_model(n);
  const bool ex = th::chern_to_equivariant(c, 1, n).euler == grass.x.euler_class;
  const bool ey = th::chern_to_equivariant(c, -1, n).euler == grass.y.euler_class;
  ordered_json w{{"c_N", series(c)}, {"integral", integral}, {"euler_x", ex}, {"euler_y", ey}};
  return verdict(integral && ex && ey, std::move(w));
}

Outcome check_tangent(int n, const SuiteOptions&) {
  if (n < 2) return excluded("requires n >= 2");
  const TruncPoly c = th::derive_total_chern_X(n);
  return verdict(c == (TruncPoly::constant(n, 1) + TruncPoly::g(n)).pow(static_cast<unsigned>(n + 1)),
                 ordered_json{{"c_X", series(c)}});
}

Outcome check_consistency(int n, const SuiteOptions&) {
  const bool ok = th::chern_consistency(n);
  const bool control = th::chern_consistency(n, th::GlobalChernFormula{3});
  return verdict(ok && !control, ordered_json{{"consistent", ok}, {"mutated_control", control}});
}

Outcome check_basis(int n, const SuiteOptions&) {
  const bool ok = th::module_basis_check(n);
  const bool control = th::module_basis_check(n, TruncPoly::g(n).pow(static_cast<unsigned>(n)));
  return verdict(ok && !control, ordered_json{{"relations_hold", ok}, {"perturbed_control", control}});
}

Outcome check_ring(int n, const SuiteOptions&) {
  const auto r = th::ring_presentation(n);
  ordered_json w{{"relations", r.relations}, {"relation_coeff", q(r.relation_coeff)},
                 {"epsilon", q(r.epsilon)}, {"top_integral", q(r.top_integral)}};
  return verdict(r.relation_coeff == 2 && r.epsilon_matches && r.top_integral == 1, std::move(w));
}

Outcome check_sweep(int n, const SuiteOptions&) {
  const auto s = th::localization_sweep(n);
  ordered_json w{{"below_top", s.below_top}, {"at_top", s.at_top}, {"failures", s.failures}};
  return verdict(s.failures == 0, std::move(w));
}

struct Entry {
  CheckInfo info;
  std::function<Outcome(int, const SuiteOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t{
        {{"grass-model-valid", "model", 0}, check_model},
        {{"betti-numbers", "morse-bott", 1}, check_betti},
        {{"ab-coefficients", "combinatorics", 2}, check_ab},
        {{"equivariant-lift", "lift", 3}, check_lift},
        {{"lift-divisibility", "lift", 3}, check_divisibility},
        {{"c1-from-fixed-data", "first-chern-class", 4}, check_c1},
        {{"c1-weight-bound", "first-chern-class", 4}, check_weight_bound},
        {{"non-semifree-factor", "non-semifree", 5}, check_factor},
        {{"non-semifree-obstruction", "non-semifree", 5}, check_obstruction},
        {{"euler-class-derivation", "euler-classes", 6}, check_euler},
        {{"normal-chern-classes", "chern-classes", 7}, check_normal},
        {{"tangent-chern-class", "chern-classes", 7}, check_tangent},
        {{"chern-consistency", "cohomology-ring", 8}, check_consistency},
        {{"module-basis", "cohomology-ring", 8}, check_basis},
        {{"ring-presentation", "cohomology-ring", 8}, check_ring},
        {{"localization-vanishing", "localization", 9}, check_sweep},
    };
    std::sort(t.begin(), t.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.info.stage, a.info.id) < std::tie(b.info.stage, b.info.id);
    });
    return t;
  }();
  return table;
}

bool selected(const CheckInfo& info, std::string_view selector) {
  return selector == "all" || selector == info.id || selector == info.section;
}

}  // namespace

const std::vector<CheckInfo>& catalog() {
  static const std::vector<CheckInfo> out = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return out;
}

bool is_known_selector(std::string_view selector) {
  return std::any_of(entries().begin(), entries().end(), [&](const Entry& e) { return selected(e.info, selector); });
}

CheckResult run_check(std::string_view id, int n, const SuiteOptions& opts) {
  auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == entries().end()) throw Error(ErrorCode::Precondition, "unknown check id '" + std::string(id) + "'");

  CheckResult r;
  r.id = it->info.id;
  r.section = it->info.section;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = it->run(n, opts);
    r.status = o.status;
    r.witness = std::move(o.witness);
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.witness = ordered_json{{"error", to_string(e.code())}, {"message", e.what()}};
  }
  if (opts.timings)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_suite(const SuiteOptions& opts) {
  if (opts.n_min < 1) throw Error(ErrorCode::Precondition, "n-min must be at least 1");
  if (opts.n_min > opts.n_max)
    throw Error(ErrorCode::Precondition,
                "empty range: n-min " + std::to_string(opts.n_min) + " > n-max " + std::to_string(opts.n_max));
  if (!is_known_selector(opts.selector))
    throw Error(ErrorCode::Precondition, "unknown suite selector '" + opts.selector + "'");
  if (opts.jobs < 1) throw Error(ErrorCode::Precondition, "jobs must be at least 1");

  const int count = opts.n_max - opts.n_min + 1;
  std::vector<Report> reports(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs)
  for (int i = 0; i < count; ++i) {
    Report& rep = reports[static_cast<std::size_t>(i)];
    rep.n = opts.n_min + i;
    for (const auto& e : entries()) {
      if (!selected(e.info, opts.selector)) continue;
      rep.checks.push_back(run_check(e.info.id, rep.n, opts));
      switch (rep.checks.back().status) {
        case Status::Pass: ++rep.summary.pass; break;
        case Status::Fail: ++rep.summary.fail; break;
        case Status::Excluded: ++rep.summary.excluded; break;
      }
    }
  }
  return reports;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.summary.fail == 0; });
}

ordered_json to_json(const std::vector<Report>& reports, const SuiteOptions& opts) {
  ordered_json out{{"version", kReportVersion}, {"n_min", opts.n_min}, {"n_max", opts.n_max}};
  ordered_json arr = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"id", c.id},
                        {"section", c.section},
                        {"status", to_string(c.status)},
                        {"witness", c.witness},
                        {"elapsed_ms", c.elapsed_ms}});
    arr.push_back({{"n", rep.n},
                   {"checks", std::move(checks)},
                   {"summary",
                    {{"pass", rep.summary.pass}, {"fail", rep.summary.fail}, {"excluded", rep.summary.excluded}}}});
  }
  out["reports"] = std::move(arr);
  return out;
}

std::string to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& rep : reports) {
    os << "# n = " << rep.n << '\n';
    for (const auto& c : rep.checks)
      os << c.section << "  " << c.id << "  " << to_string(c.status) << "  " << c.witness.dump() << '\n';
    os << "# summary: " << rep.summary.pass << " pass, " << rep.summary.fail << " fail, " << rep.summary.excluded
       << " excluded\n";
  }
  return os.str();
}

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw Error(ErrorCode::Parse, "unknown format '" + std::string(s) + "' (expected text or json)");
}

}  // namespace hamloc::suite
