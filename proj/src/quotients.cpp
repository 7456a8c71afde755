#include "padic/quotients.hpp"

#include <algorithm>

#include "padic/errors.hpp"
#include "padic/text.hpp"

namespace padic {

namespace {

PadicNumber phi_rec(const std::vector<PadicNumber>& pts, const std::vector<PadicNumber>& values,
                    std::vector<std::size_t>& idx) {
  if (idx.size() == 1) return values[idx[0]];
  std::size_t a = idx[0];
  std::size_t b = idx[1];
  std::vector<std::size_t> left(idx.begin() + 1, idx.end());
  left[0] = a;
  std::vector<std::size_t> right(idx.begin() + 1, idx.end());
  PadicNumber num = phi_rec(pts, values, left) - phi_rec(pts, values, right);
  return num / (pts[a] - pts[b]);
}

void require_distinct(const std::vector<PadicNumber>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      PadicNumber d = pts[i] - pts[j];
      if (d.is_exact_zero()) throw DomainError("difference quotient at coinciding points");
      if (d.is_bounded_zero()) {
        throw InsufficientPrecision("cannot tell difference quotient points apart",
                                    d.abs_precision() + 1);
      }
    }
  }
}

TraceRow make_row(std::int64_t index, std::vector<PadicNumber> inputs, PadicNumber q) {
  bool exact = !q.is_bounded_zero();
  Norm n = q.norm_bound();
  return TraceRow{index, std::move(inputs), std::move(q), n, exact};
}

}  // namespace

PadicNumber phi_r(const PadicFunction& f, const std::vector<PadicNumber>& points) {
  if (points.empty()) throw DomainError("phi_r needs at least one point");
  require_distinct(points);
  std::vector<PadicNumber> values;
  values.reserve(points.size());
  for (const auto& x : points) values.push_back(f(x));
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return phi_rec(points, values, idx);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConvergesTo:
      return "converges_to";
    case Verdict::StaysAt:
      return "stays_at";
    case Verdict::Diverges:
      return "diverges";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

void classify(WitnessTrace& trace) {
  trace.verdict = Verdict::Inconclusive;
  trace.limit.reset();
  trace.limit_norm.reset();
  const auto& rows = trace.rows;
  if (rows.empty()) return;
  const std::int64_t p = rows.front().quotient.prime().value();
  const Norm cap = Norm::power(p, kDivergenceExponent);
  for (const auto& r : rows) {
    if (r.norm_exact && r.norm > cap) {
      trace.verdict = Verdict::Diverges;
      return;
    }
  }
  if (rows.size() < kAgreementWindow) return;
  auto tail = rows.end() - static_cast<std::ptrdiff_t>(kAgreementWindow);
  bool agree = true;
  const TraceRow* best = &*tail;
  for (auto it = tail; it != rows.end(); ++it) {
    if (it->quotient.abs_precision() > best->quotient.abs_precision()) best = &*it;
    for (auto jt = tail; jt != it; ++jt) {
      if (!agrees(it->quotient, jt->quotient)) agree = false;
    }
  }
  if (agree) {
    trace.verdict = Verdict::ConvergesTo;
    trace.limit = best->quotient;
    trace.limit_norm = best->norm;
    return;
  }
  bool constant_norm = std::all_of(tail, rows.end(), [&](const TraceRow& r) {
    return r.norm_exact && r.norm == tail->norm;
  });
  if (constant_norm) {
    trace.verdict = Verdict::StaysAt;
    trace.limit_norm = tail->norm;
  }
}

WitnessTrace probe_derivative(const PadicFunction& f, const PadicNumber& a, const PointSequence& seq,
                              std::int64_t steps) {
  WitnessTrace trace;
  std::optional<Norm> last;
  for (std::int64_t s = 0; s < steps; ++s) {
    auto pt = seq();
    if (!pt) break;
    PadicNumber d = pt->x - a;
    if (d.is_exact_zero()) throw DomainError("derivative probe point equals the base point");
    Norm dn = d.norm_bound();
    if (last && !(dn < *last)) {
      throw DomainError("derivative probe sequence does not approach the base point");
    }
    last = dn;
    trace.rows.push_back(make_row(pt->index, {pt->x}, phi_r(f, {pt->x, a})));
  }
  classify(trace);
  return trace;
}

WitnessTrace probe_strict(const PadicFunction& f, const PairSequence& seq, std::int64_t steps) {
  WitnessTrace trace;
  for (std::int64_t s = 0; s < steps; ++s) {
    auto pr = seq();
    if (!pr) break;
    trace.rows.push_back(make_row(pr->index, {pr->x, pr->y}, phi_r(f, {pr->x, pr->y})));
  }
  classify(trace);
  return trace;
}

WitnessTrace probe_strict_order2(const PadicFunction& f, const TripleSequence& seq, std::int64_t steps) {
  WitnessTrace trace;
  for (std::int64_t s = 0; s < steps; ++s) {
    auto t = seq();
    if (!t) break;
    trace.rows.push_back(make_row(t->index, {t->x, t->y, t->z}, phi_r(f, {t->x, t->y, t->z})));
  }
  classify(trace);
  return trace;
}

nlohmann::json to_json(const WitnessTrace& trace) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : trace.rows) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const auto& x : r.inputs) inputs.push_back(to_string(x));
    rows.push_back({{"index", r.index},
                    {"inputs", inputs},
                    {"quotient", to_string(r.quotient)},
                    {"norm", r.norm.to_string()},
                    {"norm_exact", r.norm_exact}});
  }
  nlohmann::json out = {{"rows", rows}, {"verdict", to_string(trace.verdict)}};
  if (trace.limit) out["limit"] = to_string(*trace.limit);
  if (trace.limit_norm) out["limit_norm"] = trace.limit_norm->to_string();
  return out;
}

}  // namespace padic
