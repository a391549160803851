#include "heisrat/commands.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "heisrat/heisenberg.hpp"
#include "heisrat/linsys.hpp"
#include "heisrat/polynomial_text.hpp"
#include "heisrat/rationalize.hpp"

namespace heisrat {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

long mod(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

Report start(const RunConfig& c) {
  c.validate();
  Report r;
  r.command = c.command;
  r.config = c.to_json();
  return r;
}

/// Product in H_n from the explicit cocycle of the pullback convention:
/// (a1, b1, c1)(a2, b2, c2) = (a1 + a2, b1 + b2, c1 + c2 - a2 b1).
HeisenbergElement cocycle_product(const HeisenbergElement& x, const HeisenbergElement& y) {
  const long n = x.n;
  return {n, mod(x.a + y.a, n), mod(x.b + y.b, n), mod(x.c + y.c - y.a * x.b, n)};
}

}  // namespace

Budget Budget::parse(const std::string& text) {
  Budget b;
  b.name = text;
  if (text == "default") return b;
  if (text == "small") {
    b.groebner = GroebnerBudget::small();
    b.max_group_order = 64;
    b.max_monomials = 2000;
    return b;
  }
  if (text == "large") {
    b.groebner = GroebnerBudget::large();
    b.max_group_order = 4096;
    b.max_monomials = 200000;
    return b;
  }
  std::size_t used = 0;
  long pairs = 0;
  try {
    pairs = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || pairs <= 0) {
    throw std::invalid_argument("budget must be small, default, large, or a positive S-pair limit: " + text);
  }
  b.groebner.max_pairs = static_cast<std::size_t>(pairs);
  return b;
}

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("--n must be at least 1");
  if (max_deg && *max_deg < 0) throw std::invalid_argument("--max-deg must be nonnegative");
  if (method != "groebner") throw std::invalid_argument("unknown --method: " + method);
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["n"] = n;
  if (max_deg) j["max_deg"] = *max_deg;
  j["budget"] = {{"name", budget.name},
                 {"max_pairs", budget.groebner.max_pairs},
                 {"max_reduction_steps", budget.groebner.max_reduction_steps},
                 {"max_coefficient_bits", budget.groebner.max_coefficient_bits},
                 {"max_group_order", budget.max_group_order},
                 {"max_monomials", budget.max_monomials}};
  j["method"] = method;
  if (!expr.empty()) j["expr"] = expr;
  return j;
}

Report cmd_group_check(const RunConfig& c) {
  Report r = start(c);
  const auto t0 = Clock::now();
  const long n = c.n;
  const long order = n * n * n;
  if (static_cast<std::size_t>(order) > c.budget.max_group_order) {
    r.add("enumeration", CheckStatus::inconclusive,
          "n^3 = " + std::to_string(order) + " exceeds the enumeration cap " +
              std::to_string(c.budget.max_group_order));
    return r;
  }
  const GroupAction g(n);
  auto t = Clock::now();
  const auto elements = enumerate_group(g);
  r.add("group-order", pass_if(static_cast<long>(elements.size()) == order),
        std::to_string(elements.size()) + " elements (expected n^3 = " + std::to_string(order) + ")",
        {{"elements", elements.size()}, {"expected", order}})
      .seconds = since(t);

  t = Clock::now();
  const auto centre = center(elements);
  const auto lambda = g.commutator();
  std::set<std::vector<Exponent>> lambda_powers, centre_keys;
  for (long k = 0; k < n; ++k) lambda_powers.insert(power(lambda, k).key());
  for (const auto& z : centre) centre_keys.insert(z.key());
  const auto lambda_scalar = lambda.as_scalar();
  r.add("center", pass_if(static_cast<long>(centre.size()) == n && centre_keys == lambda_powers),
        "order " + std::to_string(centre.size()) + ", generated by lambda = " +
            (lambda_scalar ? to_string(*lambda_scalar) : std::string("non-scalar")),
        {{"order", centre.size()}, {"commutator", lambda_scalar ? to_string(*lambda_scalar) : "non-scalar"}})
      .seconds = since(t);

  t = Clock::now();
  std::vector<HeisenbergElement> normal;
  for (const auto& e : elements) normal.push_back(g.decompose(e));
  std::size_t checked = 0;
  bool hom_ok = true;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const auto& x = normal[i];
    const auto& y = normal[j];
    const auto product = g.multiply(x, y);
    hom_ok = hom_ok && product == cocycle_product(x, y) &&
             g.realize(product) == compose(elements[i], elements[j]);
    ++checked;
  };
  std::string mode;
  if (n <= 4) {
    for (std::size_t i = 0; i < normal.size(); ++i)
      for (std::size_t j = 0; j < normal.size(); ++j) check_pair(i, j);
    mode = "exhaustive";
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, normal.size() - 1);
    for (int s = 0; s < 2000; ++s) check_pair(pick(rng), pick(rng));
    mode = "sampled";
  }
  r.add("homomorphism", pass_if(hom_ok), mode + " over " + std::to_string(checked) + " pairs",
        {{"mode", mode}, {"pairs", checked}})
      .seconds = since(t);

  t = Clock::now();
  std::size_t noncentral = 0, repeated = 0;
  bool fixed_ok = true, divisor_ok = true;
  std::string first_bad;
  std::size_t worst_multiplicity = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].as_scalar()) continue;
    ++noncentral;
    const auto roots = spectrum_roots(elements[i]);
    std::size_t multiplicity = 0;
    for (std::size_t k = 0; k < roots.size();) {
      std::size_t run = 1;
      while (k + run < roots.size() && roots[k + run] == roots[k]) ++run;
      multiplicity = std::max(multiplicity, run);
      k += run;
    }
    worst_multiplicity = std::max(worst_multiplicity, multiplicity);
    // A fixed hyperplane needs an eigenspace of dimension n - 1.
    if (n >= 3 && static_cast<long>(multiplicity) >= n - 1) divisor_ok = false;
    if (multiplicity > 1) {
      ++repeated;
      if (first_bad.empty()) {
        const auto& e = normal[i];
        first_bad = "(a, b, c) = (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " + std::to_string(e.c) + ")";
      }
      continue;
    }
    fixed_ok = fixed_ok && static_cast<long>(fixed_points_projective(elements[i]).size()) == n;
  }
  std::string summary = std::to_string(noncentral) + " noncentral elements, " + std::to_string(repeated) +
                        " with a repeated eigenvalue";
  if (!first_bad.empty()) summary += " (first " + first_bad + ")";
  summary += "; simple ones have " + std::to_string(n) + " fixed points";
  r.add("simple-spectrum", pass_if(repeated == 0 && fixed_ok), summary,
        {{"noncentral", noncentral}, {"repeated", repeated}, {"max_multiplicity", worst_multiplicity}})
      .seconds = since(t);
  r.add("no-fixed-hyperplane", pass_if(divisor_ok),
        "largest eigenvalue multiplicity of a noncentral element: " + std::to_string(worst_multiplicity),
        {{"max_multiplicity", worst_multiplicity}});
  if (repeated > 0) {
    r.notes.push_back("for composite n some noncentral elements (e.g. xi^d with d | n) have repeated eigenvalues; "
                      "no noncentral element fixes a hyperplane pointwise when n >= 3");
  }
  r.seconds = since(t0);
  return r;
}

Report cmd_invariants(const RunConfig& c) {
  Report r = start(c);
  const auto t0 = Clock::now();
  const long n = c.n;
  const GroupAction g(n);
  for (long k = 1; k <= n; ++k) {
    const auto f = to_laurent(f_poly(n, k));
    const auto ch = character_of_semiinvariant(f, g);
    const bool ok = ch && (ch->first == mod(k, n) || ch->first == mod(-k, n)) && ch->second == 0;
    ordered_json w = {{"k", k}};
    if (ch) {
      w["xi_exponent"] = ch->first;
      w["eta_exponent"] = ch->second;
    }
    r.add("f_" + std::to_string(k) + " character", pass_if(ok),
          ch ? "xi: omega^" + std::to_string(ch->first) + ", eta: omega^" + std::to_string(ch->second)
             : "not a semi-invariant",
          w);
  }

  const bool full = n <= 6 && static_cast<std::size_t>(n * n * n) <= c.budget.max_group_order;
  std::vector<ScaledMonomialMap> acting;
  if (full) {
    acting = enumerate_group(g);
  } else {
    acting = {g.xi(), g.eta()};
    r.notes.push_back("invariance checked on the generators xi and eta (full enumeration for n <= 6)");
  }
  std::vector<std::pair<std::string, LaurentPolynomial>> targets;
  for (long k = 1; k <= n; ++k) targets.emplace_back("f_" + std::to_string(k) + "^n", to_laurent(f_poly(n, k)).pow(n));
  targets.emplace_back("(x_0...x_{n-1})^n", to_laurent(product_member(n, n)).pow(n));
  for (const auto& [name, f] : targets) {
    bool fixed = true;
    for (const auto& e : acting) fixed = fixed && pullback(f, e) == f;
    r.add(name + " invariant", pass_if(fixed),
          "fixed by " + std::to_string(acting.size()) + (full ? " group elements" : " generators"));
  }
  r.seconds = since(t0);
  return r;
}

Report cmd_molien(const RunConfig& c) {
  Report r = start(c);
  const auto t0 = Clock::now();
  const long n = c.n;
  const long max_deg = c.max_deg.value_or(3 * n);
  const auto dims = molien_dimensions(n, max_deg);
  r.add("molien-series", CheckStatus::pass, "(" + join(dims) + ")", {{"dimensions", dims}});

  bool vanish = true;
  for (long d = 0; d <= max_deg; ++d) vanish = vanish && (d % n == 0 || dims[static_cast<std::size_t>(d)] == 0);
  r.add("vanishing-off-multiples", pass_if(vanish), "dimension 0 whenever n does not divide d");

  if (n <= 4) {
    std::vector<long> brute;
    CheckStatus status = CheckStatus::pass;
    std::string summary;
    for (long d = 0; d <= max_deg; ++d) {
      try {
        brute.push_back(invariant_dimension_bruteforce(n, d, c.budget.max_monomials));
      } catch (const ResourceLimitError&) {
        status = CheckStatus::inconclusive;
        summary = "monomial cap reached at degree " + std::to_string(d) + "; ";
        break;
      }
      if (brute.back() != dims[static_cast<std::size_t>(d)]) {
        status = CheckStatus::fail;
        summary = "mismatch at degree " + std::to_string(d) + "; ";
        break;
      }
    }
    summary += "Reynolds ranks (" + join(brute) + ")";
    r.add("reynolds-agreement", status, summary, {{"reynolds_dimensions", brute}});
  } else {
    r.notes.push_back("brute-force Reynolds comparison runs for n <= 4");
  }
  r.seconds = since(t0);
  return r;
}

Report cmd_bpf(const RunConfig& c) {
  Report r = start(c);
  const auto t0 = Clock::now();
  const long n = c.n;
  const auto rep = basepoint_free_certificate(n, c.budget.groebner, /*max_n=*/64, /*parallel=*/true);
  for (const auto& v : rep.variables) {
    const CheckStatus s = v.verdict == RadicalVerdict::in_radical       ? CheckStatus::pass
                          : v.verdict == RadicalVerdict::not_in_radical ? CheckStatus::fail
                                                                        : CheckStatus::inconclusive;
    ordered_json w = {{"verdict", to_string(v.verdict)},
                      {"pairs_reduced", v.stats.pairs_reduced},
                      {"pairs_coprime", v.stats.pairs_coprime},
                      {"pairs_chain", v.stats.pairs_chain},
                      {"reduction_steps", v.stats.reduction_steps},
                      {"max_basis_size", v.stats.max_basis_size},
                      {"detail", v.detail}};
    r.add("x" + std::to_string(v.variable) + " in radical", s, std::string(to_string(v.verdict)) + ": " + v.detail, w).seconds =
        v.seconds;
  }
  r.notes.push_back("system: f_1, ..., f_n and x_0*...*x_{n-1}; Rabinowitsch test per variable, grevlex order");
  if (rep.base_point) {
    std::string point;
    for (std::size_t i = 0; i < rep.base_point->size(); ++i) point += (i ? " : " : "") + to_string((*rep.base_point)[i]);
    r.notes.push_back("exact common zero of the system (checked by evaluation): (" + point + ")");
  }
  r.seconds = since(t0);
  return r;
}

Report cmd_rationalize(const RunConfig& c) {
  Report r = start(c);
  const auto t0 = Clock::now();
  const long n = c.n;
  if (n < 2) throw std::invalid_argument("rationalize: n must be at least 2");
  const auto cert = build_certificate(n);
  for (const auto& step : cert.steps) {
    const CheckStatus s = step.status == StepStatus::verified ? CheckStatus::pass
                          : step.status == StepStatus::cited  ? CheckStatus::cited
                                                              : CheckStatus::fail;
    std::size_t passed = 0;
    for (const auto& ch : step.checks) passed += ch.passed ? 1 : 0;
    std::string summary = std::to_string(passed) + "/" + std::to_string(step.checks.size()) + " checks";
    if (step.citation) summary += "; cites " + *step.citation;
    r.add(step.name, s, summary, to_json(step));
  }
  if (cert.failed_step == "citation-audit") {
    r.add("citation-audit", CheckStatus::fail, "cited steps differ from the expected set");
  }
  const auto proj = projective_tower(n);
  r.add("projective-tower", pass_if(proj.passed()),
        "xi-invariant index " + proj.xi_invariant_index.get_str() + ", eta order " +
            (proj.eta_order ? std::to_string(*proj.eta_order) : std::string("unbounded")),
        to_json(proj));
  if (cert.trivial_case_citation) r.notes.push_back("trivial case: " + *cert.trivial_case_citation);
  for (const auto& d : cert.discrepancies) r.notes.push_back("discrepancy: " + d);
  r.attachments["certificate"] = to_json(cert);
  r.seconds = since(t0);
  return r;
}

Report cmd_hesse(const RunConfig& c) {
  RunConfig fixed = c;
  fixed.n = 3;
  Report r = start(fixed);
  const auto t0 = Clock::now();
  const auto s = n3_showcase();
  for (const auto& ch : s.checks) r.add(ch.name, pass_if(ch.passed), ch.detail);
  r.attachments["showcase"] = {{"generators", s.generators},
                               {"molien", s.molien},
                               {"generated_dimensions", s.generated_dims},
                               {"orbit_count", s.orbit_count},
                               {"stabilizer_orders", s.stabilizer_orders}};
  r.seconds = since(t0);
  return r;
}

Report cmd_parse_eval(const RunConfig& c) {
  Report r = start(c);
  const long n = c.n;
  const auto vars = VariableNames::indexed("x", static_cast<std::size_t>(n));
  const auto f = parse_polynomial(c.expr, vars, n);
  const GroupAction g(n);
  r.add("normal-form", CheckStatus::pass, render(f, vars), {{"terms", f.size()}});
  const auto deg = is_homogeneous(f);
  r.add("homogeneity", CheckStatus::pass, deg ? "homogeneous of degree " + std::to_string(*deg) : "not homogeneous");
  const auto ch = character_of_semiinvariant(f, g);
  std::string ch_text = "not a semi-invariant";
  if (ch) {
    ch_text = "character (" + std::to_string(ch->first) + ", " + std::to_string(ch->second) + ")";
    if (ch->first == 0 && ch->second == 0) ch_text = "invariant, " + ch_text;
  }
  ordered_json cw = ordered_json::object();
  if (ch) cw = {{"xi_exponent", ch->first}, {"eta_exponent", ch->second}};
  r.add("character", CheckStatus::pass, ch_text, cw);
  r.add("pullback-xi", CheckStatus::pass, render(pullback(f, g.xi()), vars));
  r.add("pullback-eta", CheckStatus::pass, render(pullback(f, g.eta()), vars));
  return r;
}

Report run_command(const RunConfig& c) {
  if (c.command == "group-check") return cmd_group_check(c);
  if (c.command == "invariants") return cmd_invariants(c);
  if (c.command == "molien") return cmd_molien(c);
  if (c.command == "bpf") return cmd_bpf(c);
  if (c.command == "rationalize") return cmd_rationalize(c);
  if (c.command == "hesse") return cmd_hesse(c);
  if (c.command == "parse-eval") return cmd_parse_eval(c);
  throw std::invalid_argument("unknown command: " + c.command);
}

}  // namespace heisrat
