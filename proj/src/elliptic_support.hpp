#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellcomb/elliptic_hp.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/special_numbers.hpp"

// Helpers shared by the elliptic families: quad-precision rows, widening to
// 100 digits and the error mapping for coinciding elliptic values.
namespace ellcomb::detail {

using RowsHP = std::vector<std::vector<ComplexHP>>;

// Coinciding elliptic values mean the parameters are not generic.
template <class F>
auto elliptic_guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const DegenerateSequence& e) {
    throw DegenerateParameters(e.what());
  }
}

template <class C>
NumericTable to_numeric(std::string family, std::vector<std::pair<std::string, std::string>> params,
                        const std::vector<std::vector<C>>& rows) {
  NumericTable t{std::move(family), std::move(params), {}};
  for (const auto& row : rows) {
    std::vector<Complex> out;
    for (const C& v : row) out.push_back(to_double(v));
    t.rows.push_back(std::move(out));
  }
  return t;
}

// [i step + offset] for i = lo..hi.
inline std::vector<ComplexHP> hp_values(const EllipticHP& e, long lo, long hi, long step = 1, long offset = 0) {
  std::vector<ComplexHP> out;
  for (long i = lo; i <= hi; ++i) out.push_back(e.number(i * step + offset));
  return out;
}

inline std::vector<ComplexWide> widen(std::span<const ComplexHP> v) {
  std::vector<ComplexWide> out;
  for (const ComplexHP& x : v) out.push_back(to_wide(x));
  return out;
}

inline std::vector<ComplexHP> narrow(const std::vector<ComplexWide>& v) {
  std::vector<ComplexHP> out;
  for (const ComplexWide& x : v) out.push_back(to_hp(x));
  return out;
}

}  // namespace ellcomb::detail
