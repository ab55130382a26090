#ifndef CPPFORGE_TOOLS_GRID_HPP
#define CPPFORGE_TOOLS_GRID_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cppforge::grid {

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One point of a parameter grid. `fields` records, for variables bound by
/// `v in GF(q)*`, the order q of the field their value indexes into.
struct Point {
  std::map<std::string, std::int64_t> vars;
  std::map<std::string, std::uint64_t> fields;

  std::int64_t at(const std::string& name) const;
  bool has(const std::string& name) const { return vars.count(name) != 0; }
};

/// Expands a comma-separated grid expression. Clauses, applied left to right:
///
///   v in {e1, e2, ...}    bind v to each value
///   v in lo..hi           bind v to lo, lo+1, ..., hi
///   v in GF(q)*           bind v to the element indices 1..q-1 of GF(q)
///   v = e                 bind v, or keep points where v == e if v is bound
///   v | e                 bind v to each positive divisor of e, or filter
///   e1 | e2               keep points where e1 divides e2
///   e1 OP e2              keep points satisfying OP in <, <=, >, >=, ==, !=
///   e                     keep points where e is nonzero
///
/// Expressions use integers, bound variables, + - * / % ^, parentheses and
/// the functions gcd(x, y) and prime(x). Throws GridError on malformed input,
/// unbound variables, overflow, or more than `max_points` points.
std::vector<Point> expand(std::string_view text, std::size_t max_points = 1'000'000);

}  // namespace cppforge::grid

#endif  // CPPFORGE_TOOLS_GRID_HPP
