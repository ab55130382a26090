#ifndef CPPFORGE_EMBEDDING_HPP
#define CPPFORGE_EMBEDDING_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "cppforge/field.hpp"

namespace cppforge {

/// Fixed embedding GF(p^k) -> GF(p^m) for k | m.
///
/// The small field's modulus root t is sent to the root of that modulus in the
/// big field with the smallest enumeration index; the image is exactly the
/// fixed field of frobenius(., k). restrict() inverts the embedding on that
/// image.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(const FieldCtx& small, const FieldCtx& big);

  const FieldCtx& small() const { return *small_; }
  const FieldCtx& big() const { return *big_; }

  // Image of the small field's modulus root.
  const Elem& root_image() const { return root_image_; }

  Elem embed(const Elem& x) const;
  std::optional<Elem> restrict(const Elem& y) const;
  // Like restrict, but throws FieldError when y is outside the subfield.
  Elem restrict_or_throw(const Elem& y) const;
  bool contains(const Elem& y) const;

 private:
  const FieldCtx* small_;
  const FieldCtx* big_;
  Elem root_image_;
  std::vector<Elem> basis_image_;  // root_image^i, i < k
  std::unordered_map<u64, u64> inverse_;
};

// Cached embedding for the pair; throws FieldError on characteristic mismatch
// or when small.degree() does not divide big.degree().
const SubfieldEmbedding& subfield_embedding(const FieldCtx& small, const FieldCtx& big);

Elem embed_subfield(const FieldCtx& small, const FieldCtx& big, const Elem& x);

}  // namespace cppforge

#endif  // CPPFORGE_EMBEDDING_HPP
