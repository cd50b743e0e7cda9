#include "germ/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "germ/analysis.hpp"
#include "germ/errors.hpp"
#include "germ/mora.hpp"
#include "germ/polynomial_format.hpp"
#include "germ/random_germs.hpp"
#include "germ/standard_basis.hpp"
#include "germ/truncated_oracle.hpp"

namespace germ {

namespace {

struct Outcome {
  bool pass = true;
  std::string counterexample;
  std::string detail;
  std::vector<std::string> tags;
};

// Returns a failure description, or nullopt when the property holds.
using Check = std::function<std::optional<std::string>(const Polynomial&)>;

std::optional<std::string> guarded(const Check& check, const Polynomial& p) {
  try {
    return check(p);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

// Drops single terms while the property keeps failing. Candidates outside the
// check's domain (DomainError) are not counterexamples.
Polynomial shrink(Polynomial p, const Check& check) {
  bool progress = true;
  while (progress && p.size() > 1) {
    progress = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<Polynomial::Term> terms(p.terms().begin(), p.terms().end());
      terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i));
      Polynomial candidate = Polynomial::from_terms(p.ring(), std::move(terms));
      bool fails = false;
      try {
        fails = guarded(check, candidate).has_value();
      } catch (const DomainError&) {
        fails = false;
      }
      if (fails) {
        p = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return p;
}

// Evaluates `check` on `input`; on failure shrinks and formats the result.
Outcome evaluate(const Polynomial& input, const Check& check,
                 const std::function<std::string(const Polynomial&)>& describe, bool shrinkable = true) {
  Outcome out;
  std::optional<std::string> failure;
  try {
    failure = guarded(check, input);
  } catch (const DomainError& e) {
    failure = std::string("precondition rejected generated input: ") + e.what();
    shrinkable = false;
  }
  if (!failure) return out;
  out.pass = false;
  out.detail = *failure;
  out.counterexample = describe(shrinkable ? shrink(input, check) : input);
  return out;
}

bool has_linear_term(const Polynomial& g) {
  return std::any_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first.degree() == 1; });
}

unsigned cap_for(const SuiteConfig& c, std::size_t n) {
  return c.radical_cap != 0 ? c.radical_cap : static_cast<unsigned>(n);
}

std::string change_text(const CoordinateChange& change) {
  std::string s = "(";
  const auto& names = change.ring()->names();
  for (std::size_t i = 0; i < change.images().size(); ++i) {
    if (i) s += ", ";
    s += names[i] + " -> " + to_string(change.image(i));
  }
  return s + ")";
}

Outcome main_theorem_trial(const SuiteConfig& c, GermGenerator& gen) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const Polynomial g = gen.smooth(ring, c.max_degree, c.max_terms);
  const auto k = static_cast<unsigned>(gen.uniform(1, 3));
  const unsigned cap = cap_for(c, ring->nvars());
  std::string generator_kind;

  Check check = [&](const Polynomial& base) -> std::optional<std::string> {
    if (!has_linear_term(base)) throw DomainError("g has no linear term");
    const MainTheoremVerdict v = verify_main_theorem(pow(base, k), cap);
    if (!v.generator) return "gradient ideal of g^k is not principal: " + v.note;
    if (v.status != MainTheoremVerdict::Status::Pass) return v.note;
    generator_kind = is_unit_germ(*v.generator) ? "unit_gradient_ideal" : "proper_gradient_ideal";
    return std::nullopt;
  };
  Outcome out = evaluate(g, check, [&](const Polynomial& p) {
    return "(" + to_string(p) + ")^" + std::to_string(k);
  });
  out.tags = {"k=" + std::to_string(k)};
  if (out.pass) out.tags.push_back(generator_kind);
  return out;
}

Outcome chain_rule_trial(const SuiteConfig& c, GermGenerator& gen, std::size_t trial) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const bool linear = trial % 3 != 2;
  const Polynomial f = gen.nonunit(ring, c.max_degree, c.max_terms);
  const CoordinateChange change =
      linear ? gen.linear_change(ring, c.truncation) : gen.nonlinear_change(ring, c.truncation, 3);
  Check check = [&](const Polynomial& p) -> std::optional<std::string> {
    if (!gradient_invariance_check(p, change)) return "gradient ideals differ after the change of coordinates";
    return std::nullopt;
  };
  Outcome out = evaluate(f, check, [&](const Polynomial& p) { return to_string(p) + " under " + change_text(change); });
  out.tags = {linear ? "linear" : "nonlinear"};
  return out;
}

Outcome radical_trial(const SuiteConfig& c, GermGenerator& gen, std::size_t trial) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const std::size_t n = ring->nvars();
  const bool homogeneous = trial % 4 == 3;
  const Polynomial f = homogeneous ? gen.homogeneous(ring, gen.uniform(1, c.max_degree), c.max_terms)
                                   : gen.nonunit(ring, c.max_degree, c.max_terms);
  unsigned exponent = 0;
  Check check = [&](const Polynomial& p) -> std::optional<std::string> {
    const unsigned k = radical_membership_exponent(p, cap_for(c, n));
    exponent = k;
    if (k > n) return "exponent " + std::to_string(k) + " exceeds the number of variables";
    if (p.is_homogeneous() && k != 1) return "homogeneous germ with exponent " + std::to_string(k);
    return std::nullopt;
  };
  Outcome out = evaluate(f, check, [](const Polynomial& p) { return to_string(p); });
  if (out.pass) out.tags = {"exponent=" + std::to_string(exponent)};
  if (homogeneous) out.tags.push_back("homogeneous");
  return out;
}

Outcome divpartials_trial(const SuiteConfig& c, GermGenerator& gen) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const Polynomial h = gen.smooth(ring, std::min(3u, c.max_degree), c.max_terms);
  const Polynomial unit = gen.unit(ring, 2, 2);
  const auto k = static_cast<unsigned>(gen.uniform(1, 3));

  Check check = [&](const Polynomial& base) -> std::optional<std::string> {
    if (!has_linear_term(base)) throw DomainError("h has no linear term");
    const Polynomial hk = pow(base, k);
    const Polynomial f = hk * base * unit;
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (!divides_locally(hk, partial_derivative(f, i))) return "h^k does not divide a partial of h^(k+1)*g";
    if (!divpartials_check(base, k, f)) return "implication fails on f = h^(k+1)*g";
    // Control: f = h^k*g has a partial outside (h^k), so the implication is vacuous.
    const Polynomial control = hk * unit;
    if (!divpartials_check(base, k, control)) return "implication fails on f = h^k*g";
    return std::nullopt;
  };
  Outcome out = evaluate(h, check, [&](const Polynomial& p) {
    return "h = " + to_string(p) + ", g = " + to_string(unit) + ", k = " + std::to_string(k);
  });
  out.tags = {"k=" + std::to_string(k)};
  return out;
}

Outcome isolated_dim_trial(const SuiteConfig& c, GermGenerator& gen) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const std::size_t n = ring->nvars();
  const std::size_t branches = n == 1 ? 1 : gen.uniform(1, std::min<std::size_t>(3, c.max_degree));

  // Smooth branches with pairwise independent linear parts are pairwise
  // coprime and irreducible, so their product is squarefree.
  std::vector<std::vector<std::int64_t>> linear_parts;
  auto independent = [&](const std::vector<std::int64_t>& a) {
    for (const auto& b : linear_parts) {
      bool proportional = true;
      for (std::size_t i = 0; i < n && proportional; ++i)
        for (std::size_t j = i + 1; j < n && proportional; ++j) proportional = a[i] * b[j] == a[j] * b[i];
      if (proportional) return false;
    }
    return true;
  };
  Polynomial f = Polynomial::constant(ring, 1);
  while (linear_parts.size() < branches) {
    std::vector<std::int64_t> a(n);
    for (auto& x : a) x = static_cast<std::int64_t>(gen.uniform(0, 4)) - 2;
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; }) || !independent(a)) continue;
    linear_parts.push_back(a);
    Polynomial branch(ring);
    for (std::size_t i = 0; i < n; ++i) branch += Polynomial::term(ring, Monomial::variable(n, i), a[i]);
    // A quadratic tail while the product stays within max_degree.
    const auto degree_so_far = static_cast<std::size_t>(f.total_degree());
    if (degree_so_far + 2 + (branches - linear_parts.size()) <= c.max_degree) branch += gen.polynomial(ring, 2, 2, 1);
    f *= branch;
  }
  Check check = [&](const Polynomial& p) -> std::optional<std::string> {
    if (!isolated_dimension_check(p, SquarefreeWitness::asserted()))
      return "Jacobian quotient of a squarefree germ has dimension n - 1";
    return std::nullopt;
  };
  Outcome out = evaluate(f, check, [](const Polynomial& p) { return to_string(p); }, false);
  out.tags = {"branches=" + std::to_string(branches)};
  return out;
}

Outcome oracle_agreement_trial(const SuiteConfig& c, GermGenerator& gen, std::size_t trial) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const std::size_t count = gen.uniform(1, 3);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(gen.nonunit(ring, c.max_degree, c.max_terms));

  const std::size_t mode = trial % 3;
  Polynomial query(ring);
  if (mode == 0) {
    query = gen.nonunit(ring, c.max_degree, c.max_terms);
  } else if (mode == 1) {
    // A polynomial combination: a member of the ideal in Q[x] already.
    for (const auto& g : gens) {
      const auto room = c.max_degree - std::min<std::uint64_t>(c.max_degree, g.total_degree());
      query += gen.polynomial(ring, 0, room, 2) * g;
    }
  } else {
    // (1 + l) * f0 as a generator makes f0 a member only after localizing.
    const Polynomial f0 = gen.nonunit(ring, std::max(1u, c.max_degree - 1), c.max_terms);
    const Polynomial u = Polynomial::constant(ring, 1) + Polynomial::term(ring, gen.monomial(ring->nvars(), 1),
                                                                           gen.coefficient());
    gens.front() = u * f0;
    query = f0;
  }
  const IdealPresentation ideal(ring, gens);

  bool engine = false, oracle = false;
  Check check = [&](const Polynomial& q) -> std::optional<std::string> {
    engine = ideal_membership_local(q, ideal);
    oracle = TruncatedIdeal(ideal, c.oracle_degree).contains(q);
    if (engine && !oracle) return "engine reports membership but the oracle certifies non-membership";
    return std::nullopt;
  };
  auto describe = [&](const Polynomial& q) {
    std::string s = to_string(q) + " in (";
    for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? ", " : "") + to_string(ideal.generators()[i]);
    return s + ")";
  };
  Outcome out = evaluate(query, check, describe);
  if (out.pass && mode != 0 && !engine) {
    out.pass = false;
    out.detail = "constructed member rejected by the engine";
    out.counterexample = describe(query);
  }
  if (out.pass && mode != 0 && !oracle) {
    out.pass = false;
    out.detail = "constructed member rejected by the oracle";
    out.counterexample = describe(query);
  }
  if (out.pass) {
    if (engine) {
      out.tags = {"both_member"};
    } else {
      out.tags = {oracle ? "oracle_member_only" : "both_nonmember"};
    }
  }
  return out;
}

Outcome smoothness_trial(const SuiteConfig& c, GermGenerator& gen) {
  const Ring ring = GermGenerator::ring(gen.uniform(1, c.max_vars));
  const Polynomial f = gen.nonunit(ring, c.max_degree, c.max_terms);
  bool smooth = false;
  Check check = [&](const Polynomial& p) -> std::optional<std::string> {
    bool direct = false;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      direct = direct || sgn(p.coefficient(Monomial::variable(p.nvars(), i))) != 0;
    smooth = smooth_at_origin(p);
    if (smooth != direct) return "criterion disagrees with grad f(0) != 0";
    return std::nullopt;
  };
  Outcome out = evaluate(f, check, [](const Polynomial& p) { return to_string(p); });
  out.tags = {smooth ? "smooth" : "singular"};
  return out;
}

Outcome run_trial(std::size_t suite, const SuiteConfig& c, std::size_t trial) {
  GermGenerator gen(trial_seed(c.seed, suite, trial));
  try {
    switch (suite) {
      case 0: return main_theorem_trial(c, gen);
      case 1: return chain_rule_trial(c, gen, trial);
      case 2: return radical_trial(c, gen, trial);
      case 3: return divpartials_trial(c, gen);
      case 4: return isolated_dim_trial(c, gen);
      case 5: return oracle_agreement_trial(c, gen, trial);
      case 6: return smoothness_trial(c, gen);
    }
  } catch (const std::exception& e) {
    return Outcome{false, "(trial setup)", std::string("exception: ") + e.what(), {}};
  }
  throw std::logic_error("bad suite index");
}

SuiteSummary run_one(std::size_t suite, const SuiteConfig& c) {
  std::vector<Outcome> results(c.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < c.trials;) results[i] = run_trial(suite, c, i);
  };
  unsigned threads = c.threads != 0 ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, c.trials)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SuiteSummary s{suite_names()[suite], c.trials, 0, {}, {}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].pass) {
      ++s.passes;
    } else {
      s.failures.push_back({i, results[i].counterexample, results[i].detail});
    }
    for (const auto& tag : results[i].tags) ++s.stats[tag];
  }
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"main-theorem", "chain-rule",       "radical",   "divpartials",
                                              "isolated-dim", "oracle-agreement", "smoothness"};
  return names;
}

std::vector<SuiteSummary> run_suite(const std::string& name, const SuiteConfig& config) {
  const auto& names = suite_names();
  std::vector<SuiteSummary> out;
  if (name == "all") {
    for (std::size_t i = 0; i < names.size(); ++i) out.push_back(run_one(i, config));
    return out;
  }
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  out.push_back(run_one(static_cast<std::size_t>(it - names.begin()), config));
  return out;
}

nlohmann::ordered_json summaries_to_json(const std::vector<SuiteSummary>& summaries, const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["config"] = {{"trials", c.trials},         {"seed", c.seed},
                 {"max_degree", c.max_degree}, {"max_terms", c.max_terms},
                 {"max_vars", c.max_vars},     {"truncation", c.truncation},
                 {"oracle_degree", c.oracle_degree}, {"radical_cap", c.radical_cap}};
  auto& arr = j["suites"] = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& s : summaries) {
    nlohmann::ordered_json e;
    e["suite"] = s.suite;
    e["trials"] = s.trials;
    e["passes"] = s.passes;
    auto& f = e["failures"] = nlohmann::ordered_json::array();
    for (const auto& x : s.failures)
      f.push_back({{"trial", x.trial}, {"counterexample", x.counterexample}, {"detail", x.detail}});
    auto& st = e["stats"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.stats) st[k] = v;
    arr.push_back(std::move(e));
    ok = ok && s.ok();
  }
  j["ok"] = ok;
  return j;
}

std::string summaries_to_text(const std::vector<SuiteSummary>& summaries) {
  std::ostringstream out;
  for (const auto& s : summaries) {
    out << s.suite << ": " << s.passes << "/" << s.trials << " pass";
    if (!s.stats.empty()) {
      out << "  [";
      bool first = true;
      for (const auto& [k, v] : s.stats) {
        out << (first ? "" : ", ") << k << ": " << v;
        first = false;
      }
      out << "]";
    }
    out << "\n";
    for (const auto& f : s.failures)
      out << "  FAIL trial " << f.trial << ": " << f.detail << "\n    counterexample: " << f.counterexample << "\n";
  }
  return out.str();
}

}  // namespace germ
