#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padic/function.hpp"

namespace padic {

/// Phi_r f on r+1 pairwise distinct points (r = points.size() - 1):
///   Phi_0 f(x) = f(x),
///   Phi_r f(x1, ..., x_{r+1}) =
///     (Phi_{r-1} f(x1, x3, ...) - Phi_{r-1} f(x2, x3, ...)) / (x1 - x2).
/// Throws DomainError when two points coincide exactly and
/// InsufficientPrecision when a difference is a precision-bounded zero.
PadicNumber phi_r(const PadicFunction& f, const std::vector<PadicNumber>& points);

struct SamplePoint {
  std::int64_t index;
  PadicNumber x;
};
struct SamplePair {
  std::int64_t index;
  PadicNumber x, y;
};
struct SampleTriple {
  std::int64_t index;
  PadicNumber x, y, z;
};

/// Stateful generators; an empty optional ends the sequence early.
using PointSequence = std::function<std::optional<SamplePoint>()>;
using PairSequence = std::function<std::optional<SamplePair>()>;
using TripleSequence = std::function<std::optional<SampleTriple>()>;

enum class Verdict { ConvergesTo, StaysAt, Diverges, Inconclusive };
std::string to_string(Verdict v);

struct TraceRow {
  std::int64_t index;
  std::vector<PadicNumber> inputs;
  PadicNumber quotient;
  /// |quotient|_p, or the sound bound p^-N when the quotient is a zero known
  /// modulo p^N (then norm_exact is false).
  Norm norm;
  bool norm_exact;
};

struct WitnessTrace {
  std::vector<TraceRow> rows;
  Verdict verdict = Verdict::Inconclusive;
  /// Set for ConvergesTo.
  std::optional<PadicNumber> limit;
  /// Set for ConvergesTo and StaysAt.
  std::optional<Norm> limit_norm;
};

/// Quotients agreeing over the last kAgreementWindow rows converge; norms
/// above p^kDivergenceExponent diverge.
inline constexpr std::size_t kAgreementWindow = 8;
inline constexpr std::int64_t kDivergenceExponent = 64;

/// Assigns verdict, limit and limit_norm from the rows.
void classify(WitnessTrace& trace);

/// Rows Phi_1 f(x_n, a). Throws DomainError if some x_n equals a or if
/// |x_n - a| does not strictly decrease.
WitnessTrace probe_derivative(const PadicFunction& f, const PadicNumber& a, const PointSequence& seq,
                              std::int64_t steps);

/// Rows Phi_1 f(x_n, y_n).
WitnessTrace probe_strict(const PadicFunction& f, const PairSequence& seq, std::int64_t steps);

/// Rows Phi_2 f(x_n, y_n, z_n), whose norm is
/// |y-z|^-1 |Phi_1 f(x, y) - Phi_1 f(x, z)|.
WitnessTrace probe_strict_order2(const PadicFunction& f, const TripleSequence& seq, std::int64_t steps);

nlohmann::json to_json(const WitnessTrace& trace);

}  // namespace padic
