#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellcomb/elliptic.hpp"
#include "ellcomb/errors.hpp"
#include "ellcomb/q_objects.hpp"
#include "ellcomb/scalar.hpp"

namespace ellcomb {

// A map i -> a_i on the integers (or on a declared window for explicit
// lists). Values are recomputed on every access; the generator is pure, so
// concurrent reads are safe and repeated reads give identical scalars.
template <ScalarField S>
class ValueSequence {
 public:
  using Generator = std::function<S(long)>;

  struct Window {
    long lo;
    long hi;
  };

  ValueSequence(std::string kind, Generator g, std::optional<Window> window = std::nullopt)
      : kind_(std::move(kind)), gen_(std::make_shared<Generator>(std::move(g))), window_(window) {}

  const std::string& kind() const { return kind_; }
  const std::optional<Window>& window() const { return window_; }

  S at(long i) const {
    if (window_ && (i < window_->lo || i > window_->hi)) {
      throw WindowError("sequence '" + kind_ + "': index " + std::to_string(i) + " outside window [" +
                        std::to_string(window_->lo) + ", " + std::to_string(window_->hi) + "]");
    }
    return (*gen_)(i);
  }
  S operator[](long i) const { return at(i); }

  // a_lo, ..., a_hi.
  std::vector<S> values(long lo, long hi) const {
    std::vector<S> out;
    for (long i = lo; i <= hi; ++i) out.push_back(at(i));
    return out;
  }

  // The index shift E_a^s: i -> a_(i+s). Explicit windows move along.
  ValueSequence shifted(long s) const {
    auto g = gen_;
    std::optional<Window> w;
    if (window_) w = Window{window_->lo - s, window_->hi - s};
    return ValueSequence(kind_ + ">>" + std::to_string(s), [g, s](long i) { return (*g)(i + s); }, w);
  }

  // i -> a_(m i - r), m >= 1.
  ValueSequence reindexed(long m, long r) const {
    if (m < 1) throw DomainError("reindexed: m must be >= 1");
    if (window_) throw WindowError("reindexed: explicit sequences cannot be reindexed");
    auto g = gen_;
    return ValueSequence(kind_ + "[" + std::to_string(m) + "i-" + std::to_string(r) + "]",
                         [g, m, r](long i) { return (*g)(m * i - r); });
  }

 private:
  std::string kind_;
  std::shared_ptr<const Generator> gen_;
  std::optional<Window> window_;
};

using ExactSequence = ValueSequence<ExactScalar>;
using NumericSequence = ValueSequence<Complex>;

// a_i = i.
template <ScalarField S>
ValueSequence<S> classical_sequence() {
  return ValueSequence<S>("classical", [](long i) { return ScalarTraits<S>::from_integer(i); });
}

// a_i = m i - r.
template <ScalarField S>
ValueSequence<S> affine_whitney_sequence(long m, long r) {
  return ValueSequence<S>("affine-whitney(" + std::to_string(m) + "," + std::to_string(r) + ")",
                          [m, r](long i) { return ScalarTraits<S>::from_integer(m * i - r); });
}

// a_i = [i]_q with q formal.
inline ExactSequence q_number_sequence() { return ExactSequence("q-number", [](long i) { return q_number(i); }); }

// a_i = [i]_q at a numeric q.
inline NumericSequence q_number_sequence(Complex q) {
  return NumericSequence("q-number", [q](long i) { return (1.0 - ipow(q, i)) / (1.0 - q); });
}

// a_i = [m i - r]_q.
inline ExactSequence q_whitney_sequence(long m, long r) {
  return ExactSequence("q-whitney(" + std::to_string(m) + "," + std::to_string(r) + ")",
                       [m, r](long i) { return q_number(m * i - r); });
}

inline NumericSequence q_whitney_sequence(long m, long r, Complex q) {
  return NumericSequence("q-whitney(" + std::to_string(m) + "," + std::to_string(r) + ")",
                         [m, r, q](long i) { return (1.0 - ipow(q, m * i - r)) / (1.0 - q); });
}

// a_i = (s^(m i + r) - t^(m i + r)) / (s - t); negative exponents are
// allowed here so the sequence is total.
inline NumericSequence st_sequence(long m, long r, Complex s, Complex t) {
  (void)st_number(0, s, t);  // rejects s = t
  return NumericSequence("st(" + std::to_string(m) + "," + std::to_string(r) + ")", [m, r, s, t](long i) {
    const long e = m * i + r;
    return (ipow(s, e) - ipow(t, e)) / (s - t);
  });
}

// a_i = [i]_{a q^alpha, b q^beta; q, p}.
inline NumericSequence elliptic_sequence(const EllipticParams& params, long alpha = 0, long beta = 0) {
  const EllipticParams shifted = params.shifted(alpha, beta);
  return NumericSequence("elliptic", [shifted](long i) { return elliptic_number(i, shifted); });
}

// a_i = values[i - offset] on the window [offset, offset + size - 1].
template <ScalarField S>
ValueSequence<S> explicit_sequence(std::vector<S> values, long offset = 0) {
  if (values.empty()) throw DomainError("explicit sequence: empty value list");
  const long hi = offset + static_cast<long>(values.size()) - 1;
  auto data = std::make_shared<const std::vector<S>>(std::move(values));
  return ValueSequence<S>(
      "explicit", [data, offset](long i) { return (*data)[static_cast<std::size_t>(i - offset)]; },
      typename ValueSequence<S>::Window{offset, hi});
}

}  // namespace ellcomb
