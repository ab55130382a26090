#include "cppforge/embedding.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cppforge {

namespace {

void check_pair(const FieldCtx& small, const FieldCtx& big) {
  if (small.characteristic() != big.characteristic()) {
    throw FieldError("subfield embedding: characteristic mismatch between GF(" + small.tag() + ") and GF(" +
                     big.tag() + ")");
  }
  if (big.degree() % small.degree() != 0) {
    throw FieldError("subfield embedding: GF(" + small.tag() + ") is not a subfield of GF(" + big.tag() + ")");
  }
}

}  // namespace

SubfieldEmbedding::SubfieldEmbedding(const FieldCtx& small, const FieldCtx& big) : small_(&small), big_(&big) {
  check_pair(small, big);
  const unsigned k = small.degree();
  if (k == 1) {
    root_image_ = big.one();
  } else {
    // The roots of the small modulus all lie in the fixed field of frobenius^k,
    // which is {0} together with the powers of g^{(Q-1)/(q-1)}.
    const u64 q = small.order();
    const Elem h = big.generator().pow(static_cast<std::int64_t>((big.order() - 1) / (q - 1)));
    const auto& mod = small.modulus();
    Elem cur = big.one();
    for (u64 j = 0; j + 1 < q; ++j, cur *= h) {
      Elem value = big.zero();
      for (std::size_t i = mod.size(); i-- > 0;) value = value * cur + big.from_int(static_cast<std::int64_t>(mod[i]));
      if (value.is_zero() && (!root_image_.valid() || cur.index() < root_image_.index())) root_image_ = cur;
    }
    if (!root_image_.valid()) throw std::logic_error("subfield embedding: modulus has no root in the big field");
  }
  basis_image_.reserve(k);
  Elem power = big.one();
  for (unsigned i = 0; i < k; ++i) {
    basis_image_.push_back(power);
    power *= root_image_;
  }
  if (small.order() <= FieldCtx::kTableLimit) {
    inverse_.reserve(small.order());
    for (u64 i = 0; i < small.order(); ++i) {
      const Elem x = small.from_index(i);
      inverse_.emplace(embed(x).index(), i);
    }
  }
}

Elem SubfieldEmbedding::embed(const Elem& x) const {
  if (x.ctx_ptr() != small_) throw ContextMismatch();
  if (small_->degree() == 1) return big_->from_int(static_cast<std::int64_t>(x.index()));
  Elem out = big_->zero();
  const auto cs = x.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] != 0) out += basis_image_[i] * big_->from_int(static_cast<std::int64_t>(cs[i]));
  }
  return out;
}

std::optional<Elem> SubfieldEmbedding::restrict(const Elem& y) const {
  if (y.ctx_ptr() != big_) throw ContextMismatch();
  if (inverse_.empty()) throw FieldError("subfield embedding: subfield too large to invert by table");
  const auto it = inverse_.find(y.index());
  if (it == inverse_.end()) return std::nullopt;
  return small_->from_index(it->second);
}

Elem SubfieldEmbedding::restrict_or_throw(const Elem& y) const {
  auto x = restrict(y);
  if (!x) throw FieldError(y.to_string() + " does not lie in GF(" + small_->tag() + ")");
  return *x;
}

bool SubfieldEmbedding::contains(const Elem& y) const {
  if (y.ctx_ptr() != big_) throw ContextMismatch();
  return is_in_subfield(y, small_->degree());
}

const SubfieldEmbedding& subfield_embedding(const FieldCtx& small, const FieldCtx& big) {
  check_pair(small, big);
  static std::mutex mutex;
  static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<SubfieldEmbedding>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{&small, &big}];
  if (!slot) slot = std::make_unique<SubfieldEmbedding>(small, big);
  return *slot;
}

Elem embed_subfield(const FieldCtx& small, const FieldCtx& big, const Elem& x) {
  return subfield_embedding(small, big).embed(x);
}

}  // namespace cppforge
