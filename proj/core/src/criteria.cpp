#include "cppforge/criteria.hpp"

#include <numeric>
#include <unordered_map>

#include "cppforge/frobenius_product.hpp"

namespace cppforge {

void attach_cross_check(VerificationReport& r, const VerificationReport& brute) {
  r.cross_check = CrossCheck{brute.method, brute.verdict};
  if (brute.verdict == r.verdict) return;
  std::string detail = r.method + " says " + std::string(to_string(r.verdict)) + ", " + brute.method + " says " +
                       std::string(to_string(brute.verdict));
  if (brute.witness && brute.witness->collision) {
    const auto& c = *brute.witness->collision;
    detail += " (collision " + c.x1.to_string() + ", " + c.x2.to_string() + ")";
  }
  r.events.push_back({"discrepancy", detail});
  r.verdict = Verdict::kError;
  if (!r.witness) r.witness = Witness{std::nullopt, "criterion disagrees with brute force"};
}

namespace {

u64 checked_index(const FieldCtx& ctx, u64 s) {
  if (s == 0 || (ctx.order() - 1) % s != 0) {
    throw std::invalid_argument("s = " + std::to_string(s) + " does not divide q - 1 = " +
                                std::to_string(ctx.order() - 1));
  }
  return (ctx.order() - 1) / s;
}

}  // namespace

FieldMap index_form_map(u64 r, const DensePoly& f, u64 s) {
  FieldMap m;
  m.label = "x^" + std::to_string(r) + " * f(x^" + std::to_string(s) + ") with f = " + f.to_string();
  const auto re = static_cast<std::int64_t>(r);
  const auto se = static_cast<std::int64_t>(s);
  m.fn = [f, re, se](const Elem& x) { return x.pow(re) * poly_eval(f, x.pow(se)); };
  return m;
}

VerificationReport check_index_criterion(u64 r, const DensePoly& f, u64 s, const CriterionOptions& opts) {
  Stopwatch clock;
  if (r == 0) throw std::invalid_argument("check_index_criterion: r must be positive");
  const FieldCtx& ctx = f.ctx();
  const u64 ell = checked_index(ctx, s);
  const auto mu = roots_of_unity(ctx, ell);
  const auto r_exp = static_cast<std::int64_t>(r);
  const auto s_exp = static_cast<std::int64_t>(s);

  std::optional<std::size_t> vanishing;
  for (std::size_t i = 0; i < mu.size() && !vanishing; ++i) {
    if (poly_eval(f, mu[i]).is_zero()) vanishing = i;
  }
  const bool coprime = std::gcd(r, s) == 1;
  std::optional<Collision> collision;
  if (!vanishing) {
    collision = first_collision(mu, [&](const Elem& z) { return z.pow(r_exp) * poly_eval(f, z).pow(s_exp); });
  }

  const std::string method = "index-criterion";
  VerificationReport rep;
  if (vanishing) {
    rep = VerificationReport::fail(
        method, Witness{std::nullopt, "f vanishes at " + mu[*vanishing].to_string() +
                                          " in mu_" + std::to_string(ell) + ", so P has a nonzero root"});
  } else if (!coprime) {
    rep = VerificationReport::fail(method, Witness{std::nullopt, "gcd(r, s) = " + std::to_string(std::gcd(r, s))});
  } else if (collision) {
    rep = VerificationReport::fail(method, Witness{collision, "x^r f(x)^s is not injective on mu_" +
                                                                  std::to_string(ell)});
  } else {
    rep = VerificationReport::pass(method);
  }
  rep.checks.push_back({"f has no root in mu_l", !vanishing, {}});
  rep.checks.push_back({"gcd(r, s) = 1", coprime, {}});
  if (!vanishing) rep.checks.push_back({"x^r f(x)^s permutes mu_l", !collision, {}});

  if (opts.cross_check) attach_cross_check(rep, is_permutation(ctx, index_form_map(r, f, s), opts.exhaustive));
  rep.timing_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport check_power_case(u64 r, const DensePoly& f, u64 s, const CriterionOptions& opts) {
  Stopwatch clock;
  const FieldCtx& ctx = f.ctx();
  const u64 ell = checked_index(ctx, s);
  const auto mu = roots_of_unity(ctx, ell);
  const auto s_exp = static_cast<std::int64_t>(s);
  const std::string method = "power-case";

  std::optional<std::size_t> violation;
  for (std::size_t i = 0; i < mu.size() && !violation; ++i) {
    if (!poly_eval(f, mu[i]).pow(s_exp).is_one()) violation = i;
  }
  const u64 g = std::gcd(r, ctx.order() - 1);
  VerificationReport rep;
  if (violation) {
    rep = VerificationReport::fail(method, Witness{std::nullopt, "hypothesis f(zeta^i)^s = 1 violated at i = " +
                                                                     std::to_string(*violation)});
  } else if (g != 1) {
    rep = VerificationReport::fail(method, Witness{std::nullopt, "gcd(r, q - 1) = " + std::to_string(g)});
  } else {
    rep = VerificationReport::pass(method);
  }
  rep.checks.push_back({"f(zeta^i)^s = 1 on mu_l", !violation, {}});
  rep.checks.push_back({"gcd(r, q - 1) = 1", g == 1, {}});

  if (opts.cross_check) {
    const auto brute = is_permutation(ctx, index_form_map(r, f, s), opts.exhaustive);
    if (violation) {
      // Off-hypothesis: record brute force without comparing.
      rep.cross_check = CrossCheck{brute.method, brute.verdict};
    } else {
      attach_cross_check(rep, brute);
    }
  }
  rep.timing_ms = clock.elapsed_ms();
  return rep;
}

BigInt binomial_exponent(u64 p, unsigned k, unsigned n) {
  const BigInt q = big_pow(p, k);
  return (big_pow(p, static_cast<u64>(n) * k) - 1) / (q - 1) + 1;
}

DensePoly binomial_subfield_poly(u64 p, unsigned k, unsigned n, const Elem& a, const BigInt& d) {
  const FieldCtx& big = a.ctx();
  if (big.characteristic() != p || big.degree() != n * k) {
    throw std::invalid_argument("binomial_subfield_poly: a must lie in GF(p^{nk})");
  }
  if (d < 1) throw std::invalid_argument("binomial_subfield_poly: exponent must be positive");
  const u64 group = big.order() - 1;
  const u64 q = make_field(p, k).order();
  const u64 s = group / (q - 1);
  const u64 e = reduce_mod(d - 1, group);
  if (e % s != 0) {
    throw std::invalid_argument("binomial_subfield_poly: d - 1 is not a multiple of (p^{nk}-1)/(p^k-1)");
  }
  return frobenius_product_poly(p, k, n, a, n, static_cast<unsigned>(e / s));
}

VerificationReport reduce_binomial(u64 p, unsigned k, unsigned n, const Elem& a, const BigInt& d,
                                   const CriterionOptions& opts) {
  Stopwatch clock;
  if (a.is_zero()) throw std::invalid_argument("reduce_binomial: a must be nonzero");
  const FieldCtx& small = make_field(p, k);
  const FieldCtx& big = a.ctx();
  const DensePoly g = binomial_subfield_poly(p, k, n, a, d);
  const auto sub = is_permutation(small, FieldMap::from_poly(g), opts.exhaustive);

  VerificationReport rep;
  if (sub.passed()) {
    rep = VerificationReport::pass("subfield-reduction");
  } else {
    rep = VerificationReport::fail("subfield-reduction", *sub.witness);
  }
  rep.checks.push_back({"subfield polynomial permutes GF(" + small.tag() + ")", sub.passed(), g.to_string()});
  if (opts.cross_check && big.order() <= opts.exhaustive.budget) {
    attach_cross_check(rep, is_permutation(big, FieldMap::binomial(d, a), opts.exhaustive));
  }
  rep.timing_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport reduce_binomial_to_subfield(u64 p, unsigned k, unsigned n, const Elem& a,
                                               const CriterionOptions& opts) {
  return reduce_binomial(p, k, n, a, binomial_exponent(p, k, n), opts);
}

CyclotomicSpec make_cyclotomic_spec(const FieldCtx& ctx, u64 ell, u64 r, std::vector<Elem> branch_constants,
                                    std::optional<Elem> gamma) {
  const u64 group = ctx.order() - 1;
  if (ell == 0 || group % ell != 0) throw std::invalid_argument("cyclotomic spec: l must divide q - 1");
  if (r == 0) throw std::invalid_argument("cyclotomic spec: r must be positive");
  if (branch_constants.size() != ell) throw std::invalid_argument("cyclotomic spec: need one constant per coset");
  for (const auto& c : branch_constants) {
    if (c.ctx_ptr() != &ctx) throw ContextMismatch();
    if (c.is_zero()) throw std::invalid_argument("cyclotomic spec: branch constant is zero");
  }
  const Elem g = gamma.value_or(ctx.generator());
  if (g.ctx_ptr() != &ctx) throw ContextMismatch();
  if (g.is_zero() || multiplicative_order(g) != group) {
    throw std::invalid_argument("cyclotomic spec: gamma must generate GF(q)*");
  }
  return CyclotomicSpec{&ctx, ell, group / ell, r, std::move(branch_constants), g};
}

CyclotomicResult cyclotomic_map(const CyclotomicSpec& spec, const CriterionOptions& opts) {
  Stopwatch clock;
  const FieldCtx& ctx = *spec.ctx;
  const auto s_exp = static_cast<std::int64_t>(spec.s);
  const auto r_exp = static_cast<std::int64_t>(spec.r);
  const Elem zeta = spec.gamma.pow(s_exp);

  std::vector<Elem> zeta_powers;
  auto coset_of = std::make_shared<std::unordered_map<u64, std::size_t>>();
  Elem cur = ctx.one();
  for (u64 i = 0; i < spec.ell; ++i) {
    zeta_powers.push_back(cur);
    coset_of->emplace(cur.index(), i);
    cur *= zeta;
  }

  FieldMap map;
  map.label = "cyclotomic map (l = " + std::to_string(spec.ell) + ", r = " + std::to_string(spec.r) + ")";
  map.fn = [constants = spec.branch_constants, coset_of, s_exp, r_exp](const Elem& x) {
    if (x.is_zero()) return x;
    return constants[coset_of->at(x.pow(s_exp).index())] * x.pow(r_exp);
  };

  const bool coprime = std::gcd(spec.r, spec.s) == 1;
  // Induced map on S = {zeta^i}: zeta^i -> A_i^s zeta^{ir}.
  std::vector<Elem> induced;
  for (u64 i = 0; i < spec.ell; ++i) {
    induced.push_back(spec.branch_constants[i].pow(s_exp) * zeta_powers[i].pow(r_exp));
  }
  std::unordered_map<u64, std::size_t> seen;
  std::optional<Collision> collision;
  for (std::size_t i = 0; i < induced.size() && !collision; ++i) {
    const auto [it, inserted] = seen.emplace(induced[i].index(), i);
    if (!inserted) collision = Collision{zeta_powers[it->second], zeta_powers[i], induced[i]};
  }

  VerificationReport rep;
  if (!coprime) {
    rep = VerificationReport::fail("cyclotomic", Witness{std::nullopt, "gcd(r, s) = " +
                                                                           std::to_string(std::gcd(spec.r, spec.s))});
  } else if (collision) {
    rep = VerificationReport::fail("cyclotomic", Witness{collision, "induced map does not permute S"});
  } else {
    rep = VerificationReport::pass("cyclotomic");
  }
  rep.checks.push_back({"gcd(r, s) = 1", coprime, {}});
  rep.checks.push_back({"induced map permutes S", !collision, {}});
  if (opts.cross_check) attach_cross_check(rep, is_permutation(ctx, map, opts.exhaustive));
  rep.timing_ms = clock.elapsed_ms();
  return {std::move(map), std::move(rep)};
}

}  // namespace cppforge
