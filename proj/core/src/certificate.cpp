#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "cppforge/constructions.hpp"
#include "cppforge/dickson.hpp"
#include "cppforge/embedding.hpp"
#include "cppforge/frobenius_product.hpp"

namespace cppforge {

namespace {

bool claims_cpp(Family f) {
  return f == Family::kThm1_2 || f == Family::kThm2_2 || f == Family::kThm2_3 || f == Family::kLem2_1;
}

bool decided(Verdict v) { return v == Verdict::kPass || v == Verdict::kFail; }

Json poly_to_json(const DensePoly& f) {
  Json j = Json::array();
  for (const auto& c : f.coeffs()) j.push_back(c.to_string());
  return j;
}

struct Context {
  const CPPInstance& inst;
  const FieldCtx& small;
  const FieldCtx& big;
  u64 q;
  Elem ratio;  // a^{q-1}
  u64 ratio_order;
  const CertifyOptions& opts;
};

std::vector<NamedCheck> hypothesis_ledger(const Context& cx) {
  const auto& in = cx.inst;
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const bool odd_prime = in.p > 2 && is_prime(in.p);
  const bool in_mu_n = !cx.ratio.is_one() && cx.ratio.pow(static_cast<std::int64_t>(in.n)).is_one();

  add("a != 0", !in.a.is_zero());
  if (in.family != Family::kAdhoc) {
    const BigInt expected = family_exponent(in.family, in.p, in.k, in.n);
    add("d matches family exponent", in.d == expected, in.d == expected ? "" : "expected " + expected.str());
  }
  switch (in.family) {
    case Family::kThm1_2: {
      const u64 n1 = static_cast<u64>(in.n) + 1;
      add("p is an odd prime", odd_prime);
      add("k is odd", in.k % 2 == 1);
      add("n + 1 is an odd prime", n1 > 2 && is_prime(n1));
      add("n + 1 != p", n1 != in.p);
      add("gcd(n, k) = 1", std::gcd(in.n, in.k) == 1);
      add("gcd(n + 1, p^2 - 1) = 1", std::gcd(n1, in.p * in.p - 1) == 1);
      break;
    }
    case Family::kThm2_2:
    case Family::kLem2_1:
      add("p is an odd prime", odd_prime);
      add("n divides p - 1", (in.p - 1) % in.n == 0);
      add("a^{p^k-1} in mu_n \\ {1}", in_mu_n, "a^{p^k-1} = " + cx.ratio.to_string());
      break;
    case Family::kThm2_3:
      add("p is an odd prime", odd_prime);
      add("n divides p^k - 1", (cx.q - 1) % in.n == 0);
      add("a^{p^k-1} in mu_n \\ {1}", in_mu_n, "a^{p^k-1} = " + cx.ratio.to_string());
      break;
    case Family::kThm2_4:
    case Family::kCor2_5:
      add("p is an odd prime", odd_prime);
      add("n >= 3", in.n >= 3);
      add("n divides p^k - 1", (cx.q - 1) % in.n == 0);
      add("a^{p^k-1} is a primitive n-th root of unity", cx.ratio_order == in.n,
          "order " + std::to_string(cx.ratio_order));
      break;
    case Family::kAdhoc:
      add("a^{p^k-1} in mu_n \\ {1}", in_mu_n, "a^{p^k-1} = " + cx.ratio.to_string());
      break;
  }
  return out;
}

// x (x^n + B)^e over GF(q) with B = -(-a)^n.
DensePoly collapsed_form(const Context& cx, unsigned e) {
  const auto& in = cx.inst;
  const Elem minus_b = subfield_embedding(cx.small, cx.big).restrict_or_throw((-in.a).pow(std::int64_t{in.n}));
  const DensePoly inner = DensePoly::monomial(cx.small.one(), in.n) - DensePoly::constant(minus_b);
  return DensePoly::x(cx.small) * inner.pow(e);
}

VerificationReport direct_product_route(const Context& cx, const DensePoly& product) {
  auto rep = is_permutation(cx.small, FieldMap::from_poly(product), cx.opts.exhaustive);
  rep.method = "direct-product";
  rep.checks.push_back({"orbit of a under frobenius^k has n members", false,
                        "a^{p^k-1} has order " + std::to_string(cx.ratio_order)});
  return rep;
}

void require_collapse(VerificationReport& rep, const DensePoly& product, const DensePoly& collapsed) {
  const bool same = product == collapsed;
  rep.checks.push_back({"collapsed product form", same, collapsed.to_string()});
  if (!same) {
    rep.events.push_back({"discrepancy", "x prod (x + a^{q^i}) = " + product.to_string() +
                                             " differs from the collapsed form " + collapsed.to_string()});
    rep.verdict = Verdict::kError;
    if (!rep.witness) rep.witness = Witness{std::nullopt, "collapsed product form mismatch"};
  }
}

VerificationReport dickson_route(const Context& cx, const DensePoly& h) {
  const auto& in = cx.inst;
  const u64 n1 = static_cast<u64>(in.n) + 1;
  // D_{n+1}(x, b) = x^{n+1} - (n+1) b x^{n-1} + ...
  const Elem b = -h.coeff(in.n - 1) / cx.small.from_int(static_cast<std::int64_t>(n1 % in.p));
  const DensePoly dn = dickson_first_kind(in.n + 1, b);
  const u64 q2 = cx.q * cx.q - 1;
  const bool match = h == dn && !b.is_zero();
  const bool coprime = std::gcd(n1, q2) == 1;
  VerificationReport rep;
  if (!match) {
    rep = VerificationReport::fail("dickson", Witness{std::nullopt, "h_a is not D_{n+1}(x, b) with b != 0"});
  } else if (!coprime) {
    rep = VerificationReport::fail("dickson", Witness{std::nullopt, "gcd(n + 1, q^2 - 1) != 1"});
  } else {
    rep = VerificationReport::pass("dickson");
  }
  rep.checks.push_back({"h_a = D_{n+1}(x, b)", match, "b = " + b.to_string()});
  rep.checks.push_back({"gcd(n + 1, q^2 - 1) = 1", coprime, {}});
  return rep;
}

VerificationReport exceptional_route(const Context& cx) {
  const auto& in = cx.inst;
  const DensePoly product = frobenius_product_poly(in.p, in.k, in.n, in.a, static_cast<unsigned>(in.p - 1), 1);
  if (cx.ratio_order != in.n) return direct_product_route(cx, product);
  const Elem c = subfield_embedding(cx.small, cx.big).restrict_or_throw((-in.a).pow(std::int64_t{in.n}));
  VerificationReport rep;
  try {
    rep = exceptional_lemma_pp(in.p, in.k, in.n, c, cx.opts.exhaustive);
  } catch (const HypothesisViolation& e) {
    rep = VerificationReport::fail("exceptional-lemma", Witness{std::nullopt, e.what()});
  }
  rep.method = "exceptional-lemma";
  require_collapse(rep, product, collapsed_form(cx, static_cast<unsigned>((in.p - 1) / in.n)));
  return rep;
}

VerificationReport power_case_route(const Context& cx) {
  const auto& in = cx.inst;
  const auto terms = static_cast<unsigned>(cx.q - 1);
  const DensePoly product = frobenius_product_poly(in.p, in.k, in.n, in.a, terms, 1);
  if (cx.ratio_order != in.n) return direct_product_route(cx, product);
  const unsigned ell = terms / in.n;
  const Elem minus_b = subfield_embedding(cx.small, cx.big).restrict_or_throw((-in.a).pow(std::int64_t{in.n}));
  const DensePoly f = (DensePoly::x(cx.small) - DensePoly::constant(minus_b)).pow(ell);
  auto rep = check_power_case(1, f, in.n, CriterionOptions{true, cx.opts.exhaustive});
  require_collapse(rep, product, collapsed_form(cx, ell));
  return rep;
}

std::optional<Route> family_route(const Context& cx, const DensePoly& h) {
  const auto& in = cx.inst;
  const CriterionOptions no_brute{false, cx.opts.exhaustive};
  switch (in.family) {
    case Family::kThm1_2:
      return Route{"family", dickson_route(cx, h)};
    case Family::kThm2_2:
    case Family::kLem2_1:
      return Route{"family", exceptional_route(cx)};
    case Family::kThm2_3:
      return Route{"family", power_case_route(cx)};
    case Family::kThm2_4:
      return Route{"family", thm2_4_iff(in.p, in.k, in.n, in.a, no_brute)};
    case Family::kCor2_5:
      return Route{"family", cor2_5_check(in.p, in.k, in.n, in.a, no_brute)};
    case Family::kAdhoc:
      break;
  }
  return std::nullopt;
}

VerificationReport reduction_route(const Context& cx, ReductionTrace& trace) {
  const auto& in = cx.inst;
  const u64 group = cx.big.order() - 1;
  const u64 s = group / (cx.q - 1);
  if (in.d < 1 || (trace.d_reduced + group - 1) % group % s != 0) {
    return VerificationReport::not_applicable("subfield-reduction",
                                              "d - 1 is not a multiple of (p^{nk}-1)/(p^k-1) modulo p^{nk} - 1");
  }
  trace.subfield_poly = binomial_subfield_poly(in.p, in.k, in.n, in.a, in.d);
  const auto half = reduce_binomial(in.p, in.k, in.n, in.a, in.d, CriterionOptions{false, cx.opts.exhaustive});
  trace.subfield_verdict = half.verdict;
  const u64 g = std::gcd(trace.d_reduced, group);

  VerificationReport rep;
  if (g != 1) {
    rep = VerificationReport::fail("subfield-reduction",
                                   Witness{std::nullopt, "a^{-1} x^d does not permute: gcd(d, p^{nk} - 1) = " +
                                                             std::to_string(g)});
  } else if (!half.passed()) {
    rep = VerificationReport::fail("subfield-reduction", *half.witness);
    rep.witness->tag = "a^{-1} x^d + x does not permute: " + rep.witness->tag;
  } else {
    rep = VerificationReport::pass("subfield-reduction");
  }
  rep.checks.push_back({"gcd(d, p^{nk} - 1) = 1", g == 1, std::to_string(g)});
  rep.checks.insert(rep.checks.end(), half.checks.begin(), half.checks.end());
  return rep;
}

void conclude(Certificate& cert) {
  const auto& in = cert.instance;
  const bool hyp_ok = std::all_of(cert.hypothesis_checks.begin(), cert.hypothesis_checks.end(),
                                  [](const NamedCheck& c) { return c.passed; }) ||
                      in.family == Family::kAdhoc;

  VerificationReport out;
  std::vector<Event> events;
  std::optional<Verdict> consensus;
  bool split = false;
  bool errored = false;
  std::string tally;
  for (const auto& r : cert.routes) {
    events.insert(events.end(), r.report.events.begin(), r.report.events.end());
    if (!tally.empty()) tally += ", ";
    tally += r.name + "=" + std::string(to_string(r.report.verdict));
    if (r.report.verdict == Verdict::kError) errored = true;
    if (!decided(r.report.verdict)) continue;
    if (!consensus) consensus = r.report.verdict;
    if (*consensus != r.report.verdict) split = true;
  }

  if (errored) {
    out = VerificationReport::error("certificate", "a route reported an error (" + tally + ")");
  } else if (split) {
    out = VerificationReport::error("certificate", "routes disagree (" + tally + ")");
    events.push_back({"discrepancy", "routes disagree: " + tally});
  } else if (!consensus) {
    out = VerificationReport::error("certificate", "no route reached a verdict");
  } else if (!hyp_ok) {
    const auto bad = std::find_if(cert.hypothesis_checks.begin(), cert.hypothesis_checks.end(),
                                  [](const NamedCheck& c) { return !c.passed; });
    out = VerificationReport::fail("certificate", Witness{std::nullopt, "hypothesis failed: " + bad->name});
  } else if (*consensus == Verdict::kPass) {
    out = VerificationReport::pass("certificate");
  } else {
    const Route* source = nullptr;
    for (const auto& r : cert.routes) {
      if (r.report.verdict != Verdict::kFail) continue;
      if (source == nullptr || (r.name == "brute-force" && r.report.witness && r.report.witness->collision)) {
        source = &r;
      }
    }
    out = VerificationReport::fail("certificate", *source->report.witness);
  }

  if (hyp_ok && claims_cpp(in.family) && in.family != Family::kAdhoc) {
    const bool refuted = std::any_of(cert.routes.begin(), cert.routes.end(), [](const Route& r) {
      return r.name != "family" && r.report.verdict == Verdict::kFail;
    });
    if (refuted) events.push_back({"falsification", "claimed CPP is refuted (" + tally + ")"});
  }
  for (const auto& r : cert.routes) {
    if (r.name == "brute-force") out.cross_check = CrossCheck{r.report.method, r.report.verdict};
  }
  out.events = std::move(events);
  cert.verdict = std::move(out);
}

}  // namespace

Certificate certify(const CPPInstance& inst, const CertifyOptions& opts) {
  Stopwatch clock;
  Certificate cert;
  cert.instance = inst;
  cert.trace.d_raw = inst.d;
  try {
    const FieldCtx& small = make_field(inst.p, inst.k);
    const FieldCtx& big = make_field(inst.p, inst.n * inst.k);
    if (inst.a.ctx_ptr() != &big) throw std::invalid_argument("a must lie in GF(p^{nk})");
    const u64 q = small.order();
    const Elem ratio = inst.a.pow(static_cast<std::int64_t>(q - 1));
    const Context cx{inst, small, big, q, ratio, inst.a.is_zero() ? 0 : multiplicative_order(ratio), opts};

    cert.hypothesis_checks = hypothesis_ledger(cx);
    if (inst.a.is_zero()) {
      cert.verdict = VerificationReport::fail("certificate", Witness{std::nullopt, "hypothesis failed: a != 0"});
      return cert;
    }
    require_budget(small, opts.exhaustive);
    cert.trace.d_reduced = reduce_mod(inst.d, big.order() - 1);
    cert.trace.h_a = h_a_poly(inst.p, inst.k, inst.n, inst.a);

    const bool hyp_ok = std::all_of(cert.hypothesis_checks.begin(), cert.hypothesis_checks.end(),
                                    [](const NamedCheck& c) { return c.passed; });
    if (hyp_ok) {
      if (auto r = family_route(cx, *cert.trace.h_a)) cert.routes.push_back(std::move(*r));
    }
    cert.routes.push_back({"subfield-reduction", reduction_route(cx, cert.trace)});
    if (opts.brute_force && big.order() <= opts.exhaustive.budget) {
      cert.routes.push_back({"brute-force", is_cpp(big, FieldMap::monomial(inst.a.inv(), inst.d), opts.exhaustive)});
    }
    conclude(cert);
  } catch (const BudgetExceeded& e) {
    cert.budget_exceeded = true;
    cert.verdict = VerificationReport::error("certificate", e.what());
  } catch (const std::exception& e) {
    cert.verdict = VerificationReport::error("certificate", e.what());
  }
  cert.verdict.timing_ms = clock.elapsed_ms();
  return cert;
}

Json to_json(const Certificate& cert, bool include_timing) {
  Json j;
  j["instance"] = to_json(cert.instance);
  Json hyps = Json::array();
  for (const auto& h : cert.hypothesis_checks) {
    Json hj{{"name", h.name}, {"passed", h.passed}};
    if (!h.detail.empty()) hj["detail"] = h.detail;
    hyps.push_back(std::move(hj));
  }
  j["hypotheses"] = std::move(hyps);
  j["verdict"] = to_json(cert.verdict, include_timing);

  Json trace;
  trace["d_raw"] = cert.trace.d_raw.str();
  trace["d_reduced"] = cert.trace.d_reduced;
  if (cert.trace.h_a) trace["h_a"] = poly_to_json(*cert.trace.h_a);
  if (cert.trace.subfield_poly) trace["subfield_poly"] = poly_to_json(*cert.trace.subfield_poly);
  trace["subfield_verdict"] = std::string(to_string(cert.trace.subfield_verdict));
  j["reduction_trace"] = std::move(trace);

  Json routes = Json::array();
  for (const auto& r : cert.routes) routes.push_back({{"name", r.name}, {"report", to_json(r.report, include_timing)}});
  j["routes"] = std::move(routes);
  if (cert.budget_exceeded) j["budget_exceeded"] = true;
  return j;
}

std::vector<SummaryRow> summarize(const std::vector<Certificate>& certs) {
  std::vector<SummaryRow> rows;
  std::map<std::tuple<std::string, u64, unsigned, unsigned>, std::size_t> slot;
  for (const auto& c : certs) {
    const auto& in = c.instance;
    const auto key = std::make_tuple(std::string(to_string(in.family)), in.p, in.k, in.n);
    auto [it, inserted] = slot.emplace(key, rows.size());
    if (inserted) rows.push_back({std::get<0>(key), in.p, in.k, in.n, 0, 0, 0});
    auto& row = rows[it->second];
    ++row.instances;
    if (c.verdict.passed()) {
      ++row.passed;
    } else {
      ++row.failed;
    }
  }
  return rows;
}

Json to_json(const SummaryRow& row) {
  return Json{{"family", row.family}, {"p", row.p},           {"k", row.k},          {"n", row.n},
              {"instances", row.instances}, {"pass", row.passed}, {"fail", row.failed}};
}

}  // namespace cppforge
