#include "trigsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>
#include <tuple>

#include "trigsum/closed_forms.hpp"
#include "trigsum/cotangent.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/oracle.hpp"
#include "trigsum/transcribed.hpp"
#include "trigsum/walks.hpp"

namespace trigsum::verify {
namespace {

struct Case {
  CaseRecord record;
  std::tuple<std::size_t, std::string, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>
      order;
  std::function<Rational()> closed_form;
  std::function<Rational()> oracle;
};

const std::vector<std::string> kExtraFamilies = {
    "cot", "byrne-smith", "walks-path", "walks-cycle", "odd-power", "barbero-naive",
};

std::size_t family_rank(const std::string& family) {
  const auto& all = grid_families();
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), family) - all.begin());
}

class CaseBuilder {
 public:
  explicit CaseBuilder(std::vector<Case>& out) : out_(out) {}

  void add(const std::string& family, const std::string& kind,
           std::map<std::string, std::uint32_t> params, std::function<Rational()> closed_form,
           std::function<Rational()> oracle) {
    Case c;
    c.record.family = family;
    c.record.kind = kind;
    c.order = {family_rank(family), kind, get(params, "m"), get(params, "n"), get(params, "q"),
               get(params, "k")};
    c.record.params = std::move(params);
    c.closed_form = std::move(closed_form);
    c.oracle = std::move(oracle);
    out_.push_back(std::move(c));
  }

  void add_spec(const std::string& family, const SumSpec& spec) {
    try {
      validate(spec);
    } catch (const DomainError&) {
      return;  // inadmissible point of the grid
    }
    std::map<std::string, std::uint32_t> params{{"m", spec.m}, {"n", spec.n}};
    if (family_uses_q(spec.family)) params["q"] = spec.q;
    const std::string kind = family_uses_kind(spec.family) ? std::string(kind_name(spec.kind)) : "";
    add(family, kind, std::move(params), [spec] { return evaluate(spec); },
        [spec] { return oracle::exact_value(spec); });
  }

 private:
  static std::uint32_t get(const std::map<std::string, std::uint32_t>& p, const char* key) {
    auto it = p.find(key);
    return it == p.end() ? 0 : it->second;
  }

  std::vector<Case>& out_;
};

void build_family(const std::string& family, const CampaignOptions& o, CaseBuilder& b) {
  const auto m_range = [&](auto fn) {
    for (std::uint32_t m = o.m_min; m <= o.m_max; ++m) fn(m);
  };
  const auto n_range = [&](std::uint32_t lowest, auto fn) {
    for (std::uint32_t n = std::max(o.n_min, lowest); n <= o.n_max; ++n) fn(n);
  };

  if (family == "cot") {
    n_range(1, [&](std::uint32_t n) {
      for (std::uint32_t k = 2; k <= o.k_max; ++k) {
        b.add(family, "", {{"n", n}, {"k", k}}, [=] { return cot_power_sum(n, k); },
              [=] { return oracle::exact_value(CotSumParams{n, k}); });
      }
    });
    return;
  }
  if (family == "byrne-smith") {
    n_range(1, [&](std::uint32_t n) {
      for (std::uint32_t k = 1; k <= o.k_max; ++k) {
        b.add(family, "", {{"n", n}, {"k", k}}, [=] { return byrne_smith_sum(n, k); },
              [=] { return oracle::exact_value(oracle::ByrneSmithParams{n, k}); });
      }
    });
    return;
  }
  if (family == "walks-path" || family == "walks-cycle") {
    const bool path = family == "walks-path";
    n_range(path ? 2 : 3, [&](std::uint32_t n) {
      if (!path && n % 2 == 0) return;
      m_range([&](std::uint32_t m) {
        const GraphSpec graph{path ? GraphKind::Path : GraphKind::Cycle, n};
        b.add(family, "", {{"m", m}, {"n", n}},
              [=] {
                return Rational(path ? path_closed_walks(n, m) : cycle_closed_walks(n, m));
              },
              [=] { return Rational(trace_oracle(graph, 2 * m)); });
      });
    });
    return;
  }
  if (family == "odd-power") {
    n_range(1, [&](std::uint32_t n) {
      m_range([&](std::uint32_t j) {
        b.add(family, "", {{"m", j}, {"n", n}}, [] { return Rational(1); },
              [=] { return oracle::exact_value(oracle::OddPowerParams{j, n}); });
      });
    });
    return;
  }
  if (family == "barbero-naive") {
    n_range(0, [&](std::uint32_t n) {
      m_range([&](std::uint32_t m) {
        if (m == 0) return;
        b.add(family, "", {{"m", m}, {"n", n}},
              [=] { return transcribed::barbero_single_branch(m, n); },
              [=] { return oracle::exact_value(SumSpec{SumFamily::BarberoR, TrigKind::Cos, m, n}); });
      });
    });
    return;
  }

  const auto parsed = family_from_name(family);
  if (!parsed) throw DomainError("unknown family '" + family + "'");
  const SumFamily f = *parsed;
  const std::vector<TrigKind> kinds =
      family_uses_kind(f) ? std::vector{TrigKind::Cos, TrigKind::Sin} : std::vector{TrigKind::Cos};
  for (TrigKind kind : kinds) {
    n_range(f == SumFamily::BarberoR ? 0 : 1, [&](std::uint32_t n) {
      std::vector<std::uint32_t> qs{1};
      if (f == SumFamily::Scaled) {
        qs = {n, 2 * n};
      } else if (f == SumFamily::Coprime || f == SumFamily::GcdReduced) {
        qs.resize(2 * n + 1);
        std::iota(qs.begin(), qs.end(), 1u);  // coprimality is left to validate()
      }
      for (std::uint32_t q : qs) {
        m_range([&](std::uint32_t m) { b.add_spec(family, SumSpec{f, kind, m, n, q}); });
      }
    });
  }
}

void run_case(Case& c) {
  Rational closed, truth;
  c.record.micros_closed = time_micros([&] { closed = c.closed_form(); });
  c.record.closed_form = to_string(closed, true);
  try {
    c.record.micros_oracle = time_micros([&] { truth = c.oracle(); });
    c.record.oracle = to_string(truth, true);
    c.record.match = closed == truth;
  } catch (const std::exception& e) {
    c.record.oracle = std::string("error: ") + e.what();
    c.record.match = false;
  }
}

ErratumRecord barbero_erratum() {
  const Rational naive = transcribed::barbero_single_branch(12, 3);
  const Rational truth = oracle::exact_value(SumSpec{SumFamily::BarberoR, TrigKind::Cos, 12, 3});
  const Rational amended = barbero_R(12, 3);
  ErratumRecord r{"barbero-naive", "", false};
  r.detail = "(m=12, n=3): single-branch " + to_string(naive) + ", oracle " + to_string(truth) +
             ", amended " + to_string(amended) + ", difference " + to_string(truth - naive);
  r.reproduced = naive == 3780094 && truth == 3798310 && amended == truth &&
                 truth - naive == 18216;
  return r;
}

// The printed middle case (n <= m < 2n) of the alternating sums drops the
// factor n, and for sine also the sign (-1)^n.
ErratumRecord alternating_middle_erratum(TrigKind kind) {
  ErratumRecord r{kind == TrigKind::Cos ? "alt-cos-middle" : "alt-sin-middle", "", true};
  std::size_t checked = 0, differing = 0;
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const Rational factor = kind == TrigKind::Cos || n % 2 == 0 ? Rational(n) : Rational(-std::int64_t{n});
    for (std::uint32_t m = n; m < 2 * n; ++m) {
      const Rational printed = transcribed::alternating_case_table(kind, m, n);
      const Rational truth =
          oracle::exact_value(SumSpec{SumFamily::Alternating, kind, m, 2 * n});
      ++checked;
      if (truth != printed) ++differing;
      const bool expected_equal = n == 1 && kind == TrigKind::Cos;
      if (truth != factor * printed || (truth == printed) != expected_equal) r.reproduced = false;
    }
  }
  r.detail = std::to_string(checked) + " middle-range cases with n <= 6: oracle = " +
             (kind == TrigKind::Cos ? "n" : "(-1)^n n") + " * printed in all, " +
             std::to_string(differing) + " differ";
  return r;
}

ErratumRecord positive_indices_erratum() {
  ErratumRecord r{"cot-positive-indices", "", true};
  std::size_t checked = 0;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (std::uint32_t k = 2; k <= 6; ++k) {
      ++checked;
      if (cot_power_sum_positive_indices(n, k) == oracle::exact_value(CotSumParams{n, k})) {
        r.reproduced = false;
      }
    }
  }
  r.detail = "positive-index reading disagrees with the oracle in all " + std::to_string(checked) +
             " cases n <= 3, 2 <= k <= 6";
  return r;
}

ErratumRecord byrne_smith_erratum() {
  const Rational printed = byrne_smith_sum_transcribed(1, 2);
  const Rational truth = oracle::exact_value(oracle::ByrneSmithParams{1, 2});
  ErratumRecord r{"byrne-smith-printed", "", false};
  r.detail = "(n=1, k=2): printed " + to_string(printed) + ", oracle " + to_string(truth) +
             ", corrected " + to_string(byrne_smith_sum(1, 2));
  r.reproduced = printed == 10 && truth == 6 && byrne_smith_sum(1, 2) == 6;
  return r;
}

}  // namespace

std::string CaseRecord::label() const {
  std::string out = family + "(";
  bool first = true;
  if (!kind.empty()) {
    out += kind;
    first = false;
  }
  for (const auto& [key, value] : params) {
    out += (first ? "" : ", ") + key + "=" + std::to_string(value);
    first = false;
  }
  return out + ")";
}

std::size_t VerificationReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.match; }));
}

bool VerificationReport::errata_reproduced() const {
  return std::all_of(errata.begin(), errata.end(),
                     [](const ErratumRecord& e) { return e.reproduced; });
}

const std::vector<std::string>& grid_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (int f = 0; f <= static_cast<int>(SumFamily::Ell5Cos4); ++f) {
      out.emplace_back(family_name(static_cast<SumFamily>(f)));
    }
    out.insert(out.end(), kExtraFamilies.begin(), kExtraFamilies.end());
    return out;
  }();
  return names;
}

const std::vector<std::string>& errata_names() {
  static const std::vector<std::string> names = {
      "barbero-naive", "alt-cos-middle", "alt-sin-middle", "cot-positive-indices", "byrne-smith-printed",
  };
  return names;
}

std::vector<ErratumRecord> run_errata(const std::vector<std::string>& names) {
  const auto wanted = [&](const std::string& name) {
    return names.empty() || std::find(names.begin(), names.end(), name) != names.end();
  };
  std::vector<ErratumRecord> out;
  if (wanted("barbero-naive")) out.push_back(barbero_erratum());
  if (wanted("alt-cos-middle")) out.push_back(alternating_middle_erratum(TrigKind::Cos));
  if (wanted("alt-sin-middle")) out.push_back(alternating_middle_erratum(TrigKind::Sin));
  if (wanted("cot-positive-indices")) out.push_back(positive_indices_erratum());
  if (wanted("byrne-smith-printed")) out.push_back(byrne_smith_erratum());
  return out;
}

VerificationReport run_campaign(const CampaignOptions& options) {
  const auto& errata = errata_names();
  const auto is_erratum = [&](const std::string& f) {
    return std::find(errata.begin(), errata.end(), f) != errata.end();
  };

  std::vector<std::string> grid;
  std::vector<std::string> errata_wanted;
  for (const auto& f : options.families) {
    const auto& known = grid_families();
    if (options.expect_known_errata && is_erratum(f)) {
      errata_wanted.push_back(f);
    } else if (std::find(known.begin(), known.end(), f) != known.end()) {
      grid.push_back(f);
    } else {
      throw DomainError("unknown family '" + f + "'");
    }
  }
  if (options.families.empty()) {
    for (const auto& f : grid_families()) {
      if (f != "barbero-naive") grid.push_back(f);
    }
  }

  std::vector<Case> cases;
  CaseBuilder builder(cases);
  for (const auto& f : grid) build_family(f, options, builder);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) run_case(cases[i]);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  std::stable_sort(cases.begin(), cases.end(),
                   [](const Case& a, const Case& b) { return a.order < b.order; });
  VerificationReport report;
  report.cases.reserve(cases.size());
  for (auto& c : cases) report.cases.push_back(std::move(c.record));
  if (options.expect_known_errata) {
    // With no erratum named, every documented erratum is checked.
    report.errata = run_errata(errata_wanted);
  }
  return report;
}

BenchResult run_bench(const BenchOptions& options) {
  std::function<Rational()> closed;
  std::function<Rational()> slow;
  std::string label;
  if (options.family == "cot") {
    const CotSumParams p{options.n, options.k};
    if (p.n < 1 || p.k < 2) throw DomainError("cot: requires n >= 1 and k >= 2");
    label = "cot(n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) + ")";
    closed = [p] { return cot_power_sum(p.n, p.k); };
    slow = [p] { return oracle::exact_value(p); };
  } else {
    const auto family = family_from_name(options.family);
    if (!family) throw DomainError("bench: unknown family '" + options.family + "'");
    const SumSpec spec{*family, options.kind, options.m, options.n, options.q};
    validate(spec);
    label = describe(spec);
    closed = [spec] { return evaluate(spec); };
    slow = [spec] { return oracle::exact_value(spec); };
  }

  BenchResult result;
  result.label = label;
  Rational value;
  for (unsigned r = 0; r < std::max(1u, options.repeat); ++r) {
    const auto t = time_micros([&] { value = closed(); });
    if (r == 0 || t < result.micros_closed) result.micros_closed = t;
  }
  result.closed_form = to_string(value, true);
  if (options.with_oracle) {
    Rational truth;
    for (unsigned r = 0; r < std::max(1u, options.repeat); ++r) {
      const auto t = time_micros([&] { truth = slow(); });
      if (r == 0 || t < *result.micros_oracle) result.micros_oracle = t;
    }
    result.oracle = to_string(truth, true);
  }
  return result;
}

std::int64_t time_micros(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

}  // namespace trigsum::verify
