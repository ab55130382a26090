#include "cppforge/permutation.hpp"

#include <limits>
#include <unordered_map>
#include <vector>

#include "cppforge/detail/parallel.hpp"

namespace cppforge {

void require_budget(const FieldCtx& ctx, const ExhaustiveOptions& opts) {
  if (ctx.order() > opts.budget) throw BudgetExceeded(ctx.order(), opts.budget);
}

FieldMap FieldMap::from_poly(DensePoly f) {
  FieldMap m;
  m.label = f.to_string();
  m.fn = [f](const Elem& x) { return poly_eval(f, x); };
  m.poly = std::move(f);
  return m;
}

FieldMap FieldMap::monomial(const Elem& coef, const BigInt& exponent) {
  if (exponent < 0) throw std::invalid_argument("FieldMap::monomial: exponent must be non-negative");
  const FieldCtx& ctx = coef.ctx();
  const bool zero_exponent = exponent == 0;
  const auto reduced = static_cast<std::int64_t>(reduce_mod(exponent, ctx.order() - 1));
  FieldMap m;
  m.label = "(" + coef.to_string() + ")*x^" + exponent.str();
  m.fn = [coef, zero_exponent, reduced](const Elem& x) {
    if (x.is_zero()) return zero_exponent ? coef : x;
    return coef * x.pow(reduced);
  };
  return m;
}

FieldMap FieldMap::binomial(const BigInt& exponent, const Elem& a) {
  FieldMap mono = monomial(a.ctx().one(), exponent);
  FieldMap m;
  m.label = "x^" + exponent.str() + " + (" + a.to_string() + ")*x";
  m.fn = [mono = std::move(mono.fn), a](const Elem& x) { return mono(x) + a * x; };
  return m;
}

FieldMap plus_identity(const FieldMap& f) {
  FieldMap m;
  m.label = f.label + " + x";
  m.fn = [g = f.fn](const Elem& x) { return g(x) + x; };
  if (f.poly) m.poly = *f.poly + DensePoly::x(f.poly->ctx());
  return m;
}

std::optional<Collision> first_collision(std::span<const Elem> domain, const std::function<Elem(const Elem&)>& f) {
  std::unordered_map<u64, std::size_t> seen;
  seen.reserve(domain.size());
  const FieldCtx* image_ctx = nullptr;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Elem y = f(domain[i]);
    if (image_ctx == nullptr) image_ctx = y.ctx_ptr();
    if (y.ctx_ptr() != image_ctx) throw ContextMismatch();
    const auto [it, inserted] = seen.emplace(y.index(), i);
    if (!inserted) return Collision{domain[it->second], domain[i], y};
  }
  return std::nullopt;
}

VerificationReport is_permutation(const FieldCtx& ctx, const FieldMap& f, const ExhaustiveOptions& opts) {
  require_budget(ctx, opts);
  Stopwatch clock;
  const u64 q = ctx.order();
  std::vector<u64> images(q);
  detail::parallel_chunks(q, opts.jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Elem y = f(ctx.from_index(i));
      if (y.ctx_ptr() != &ctx) throw ContextMismatch();
      images[i] = y.index();
    }
  });
  constexpr u64 kUnseen = std::numeric_limits<u64>::max();
  std::vector<u64> preimage(q, kUnseen);
  for (u64 i = 0; i < q; ++i) {
    u64& slot = preimage[images[i]];
    if (slot != kUnseen) {
      auto r = VerificationReport::fail(
          "exhaustive", Witness{Collision{ctx.from_index(slot), ctx.from_index(i), ctx.from_index(images[i])},
                                "collision of " + f.label});
      r.timing_ms = clock.elapsed_ms();
      return r;
    }
    slot = i;
  }
  auto r = VerificationReport::pass("exhaustive");
  r.timing_ms = clock.elapsed_ms();
  return r;
}

VerificationReport is_cpp(const FieldCtx& ctx, const FieldMap& f, const ExhaustiveOptions& opts) {
  Stopwatch clock;
  const auto first = is_permutation(ctx, f, opts);
  const auto second = is_permutation(ctx, plus_identity(f), opts);
  VerificationReport r;
  if (first.passed() && second.passed()) {
    r = VerificationReport::pass("exhaustive-cpp");
  } else if (!first.passed()) {
    r = VerificationReport::fail("exhaustive-cpp", Witness{first.witness->collision, "f is not a permutation"});
  } else {
    r = VerificationReport::fail("exhaustive-cpp", Witness{second.witness->collision, "f + x is not a permutation"});
  }
  r.checks.push_back({"f permutes", first.passed(), {}});
  r.checks.push_back({"f + x permutes", second.passed(), {}});
  r.timing_ms = clock.elapsed_ms();
  return r;
}

}  // namespace cppforge
