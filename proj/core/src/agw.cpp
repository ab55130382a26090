#include "cppforge/agw.hpp"

#include <unordered_map>
#include <unordered_set>

#include "cppforge/permutation.hpp"

namespace cppforge {

namespace {

using Key = std::pair<const FieldCtx*, u64>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    return std::hash<const void*>{}(k.first) ^ (std::hash<u64>{}(k.second) * 0x9e3779b97f4a7c15ULL);
  }
};
using KeySet = std::unordered_set<Key, KeyHash>;

Key key(const Elem& x) { return {x.ctx_ptr(), x.index()}; }

KeySet key_set(const std::vector<Elem>& xs) {
  KeySet out;
  for (const auto& x : xs) out.insert(key(x));
  return out;
}

std::vector<Elem> map_all(const std::vector<Elem>& xs, const ElemMap& m) {
  std::vector<Elem> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(m(x));
  return out;
}

std::vector<Elem> image_of(const std::vector<Elem>& a, const ElemMap& m) {
  std::vector<Elem> out;
  KeySet seen;
  for (const auto& x : a) {
    const Elem y = m(x);
    if (seen.insert(key(y)).second) out.push_back(y);
  }
  return out;
}

void require_onto(const std::vector<Elem>& a, const std::vector<Elem>& images, const std::vector<Elem>& target,
                  const char* name) {
  const KeySet target_keys = key_set(target);
  if (target_keys.size() != target.size()) {
    throw MalformedDiagram(std::string("AGW diagram: target of ") + name + " has repeated elements");
  }
  KeySet hit;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem& y = images[i];
    if (!target_keys.contains(key(y))) {
      throw MalformedDiagram(std::string("AGW diagram: ") + name + " leaves its target at " + a[i].to_string());
    }
    hit.insert(key(y));
  }
  if (hit.size() != target_keys.size()) {
    throw MalformedDiagram(std::string("AGW diagram: ") + name + " is not surjective");
  }
}

}  // namespace

AGWDiagram::AGWDiagram(std::vector<Elem> a, std::vector<Elem> s, std::vector<Elem> s_bar, ElemMap f, ElemMap f_bar,
                       ElemMap lambda, ElemMap lambda_bar)
    : a_(std::move(a)),
      s_(std::move(s)),
      s_bar_(std::move(s_bar)),
      f_(std::move(f)),
      f_bar_(std::move(f_bar)),
      lambda_(std::move(lambda)),
      lambda_bar_(std::move(lambda_bar)) {
  if (a_.empty()) throw MalformedDiagram("AGW diagram: empty carrier");
  if (s_.size() != s_bar_.size()) throw MalformedDiagram("AGW diagram: #S != #S_bar");
  const auto la = map_all(a_, lambda_);
  require_onto(a_, la, s_, "lambda");
  require_onto(a_, map_all(a_, lambda_bar_), s_bar_, "lambda_bar");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (lambda_bar_(f_(a_[i])) != f_bar_(la[i])) {
      throw MalformedDiagram("AGW diagram: square does not commute at " + a_[i].to_string());
    }
  }
}

AGWDiagram AGWDiagram::from_images(std::vector<Elem> a, ElemMap f, ElemMap f_bar, ElemMap lambda,
                                   ElemMap lambda_bar) {
  auto s = image_of(a, lambda);
  auto s_bar = image_of(a, lambda_bar);
  return AGWDiagram(std::move(a), std::move(s), std::move(s_bar), std::move(f), std::move(f_bar), std::move(lambda),
                    std::move(lambda_bar));
}

VerificationReport check_agw(const AGWDiagram& d) {
  Stopwatch clock;
  const auto& a = d.carrier();

  // (i) f is a bijection of A.
  const KeySet a_keys = key_set(a);
  const auto fa = map_all(a, d.f());
  bool maps_into = true;
  for (const auto& y : fa) maps_into = maps_into && a_keys.contains(key(y));
  std::unordered_map<Key, std::size_t, KeyHash> index_of;
  for (std::size_t i = 0; i < a.size(); ++i) index_of.emplace(key(a[i]), i);
  const auto cached_f = [&](const Elem& x) { return fa[index_of.at(key(x))]; };
  const auto collision_a = first_collision(a, cached_f);
  const bool side_i = maps_into && !collision_a;

  // (ii) f_bar bijective S -> S_bar, f injective on each fiber of lambda.
  const KeySet s_bar_keys = key_set(d.s_bar());
  bool f_bar_into = true;
  for (const auto& s : d.s()) f_bar_into = f_bar_into && s_bar_keys.contains(key(d.f_bar()(s)));
  const auto collision_s = first_collision(d.s(), d.f_bar());
  const bool f_bar_bijective = f_bar_into && !collision_s;

  // Fibers in order of first appearance, so the witness is deterministic.
  std::unordered_map<Key, std::size_t, KeyHash> fiber_slot;
  std::vector<std::vector<Elem>> fibers;
  for (const auto& x : a) {
    const auto [it, inserted] = fiber_slot.emplace(key(d.lambda()(x)), fibers.size());
    if (inserted) fibers.emplace_back();
    fibers[it->second].push_back(x);
  }
  std::optional<Collision> fiber_collision;
  for (const auto& fiber : fibers) {
    fiber_collision = first_collision(fiber, cached_f);
    if (fiber_collision) break;
  }
  const bool side_ii = f_bar_bijective && !fiber_collision;

  VerificationReport r;
  if (side_i == side_ii) {
    r = VerificationReport::pass("agw");
  } else {
    r = VerificationReport::fail("agw", Witness{collision_a ? collision_a : fiber_collision,
                                               "AGW equivalence (i) <=> (ii) violated"});
    r.events.push_back({"falsification", "bijectivity of f disagrees with the reduced diagram"});
  }
  r.checks.push_back({"(i) f bijective on A", side_i, {}});
  r.checks.push_back({"f_bar bijective S -> S_bar", f_bar_bijective, {}});
  r.checks.push_back({"f injective on every fiber", !fiber_collision, {}});
  r.checks.push_back({"(ii) reduced conditions", side_ii, {}});
  r.timing_ms = clock.elapsed_ms();
  return r;
}

}  // namespace cppforge
