#ifndef CPPFORGE_AGW_HPP
#define CPPFORGE_AGW_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "cppforge/field.hpp"
#include "cppforge/report.hpp"

namespace cppforge {

using ElemMap = std::function<Elem(const Elem&)>;

class MalformedDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The commutative square
///
///     A  --f-->  A
///     |lambda    |lambda_bar
///     S  --f_bar--> S_bar
///
/// with #S = #S_bar, both vertical maps surjective and
/// lambda_bar(f(x)) = f_bar(lambda(x)) for every x in A. All of this is
/// checked on construction.
class AGWDiagram {
 public:
  AGWDiagram(std::vector<Elem> a, std::vector<Elem> s, std::vector<Elem> s_bar, ElemMap f, ElemMap f_bar,
             ElemMap lambda, ElemMap lambda_bar);

  // S and S_bar taken as the images lambda(A) and lambda_bar(A).
  static AGWDiagram from_images(std::vector<Elem> a, ElemMap f, ElemMap f_bar, ElemMap lambda, ElemMap lambda_bar);

  const std::vector<Elem>& carrier() const { return a_; }
  const std::vector<Elem>& s() const { return s_; }
  const std::vector<Elem>& s_bar() const { return s_bar_; }
  const ElemMap& f() const { return f_; }
  const ElemMap& f_bar() const { return f_bar_; }
  const ElemMap& lambda() const { return lambda_; }
  const ElemMap& lambda_bar() const { return lambda_bar_; }

 private:
  std::vector<Elem> a_, s_, s_bar_;
  ElemMap f_, f_bar_, lambda_, lambda_bar_;
};

/// Evaluates (i) f bijective on A and (ii) f_bar bijective S -> S_bar with f
/// injective on every fiber lambda^{-1}(s), independently. Passes iff
/// (i) <=> (ii); a mismatch is a falsification event.
VerificationReport check_agw(const AGWDiagram& d);

}  // namespace cppforge

#endif  // CPPFORGE_AGW_HPP
