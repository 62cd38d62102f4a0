#include "nullsol/subdivision.hpp"

#include <algorithm>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nullsol {

bool canonical_point_less(std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    int c = canonical_compare(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

namespace {

constexpr std::size_t kMaxCandidateProduct = 81;

void push_unique(std::vector<Rational>& v, const Rational& q) {
  if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
}

}  // namespace

std::vector<std::vector<Rational>> candidate_points(const IntervalBox& box, int denominator_bound) {
  const int d = box.dimension();
  std::vector<std::vector<Rational>> options(d);
  std::vector<Rational> mid(d), simple(d), zeroed(d);
  std::size_t product = 1;
  for (int k = 0; k < d; ++k) {
    const Interval& side = box.sides[k];
    mid[k] = side.midpoint();
    Rational s = simplest_between(side.lo, side.hi);
    simple[k] = s.get_den() <= static_cast<unsigned long>(denominator_bound) ? s : mid[k];
    zeroed[k] = side.contains_zero() ? Rational(0) : mid[k];
    push_unique(options[k], mid[k]);
    push_unique(options[k], simple[k]);
    push_unique(options[k], zeroed[k]);
    product *= options[k].size();
    product = std::min(product, kMaxCandidateProduct + 1);
  }
  std::vector<std::vector<Rational>> out;
  if (product > kMaxCandidateProduct) {
    out = {mid, simple, zeroed};
  } else {
    out.emplace_back();
    for (int k = 0; k < d; ++k) {
      std::vector<std::vector<Rational>> next;
      for (const auto& prefix : out) {
        for (const auto& q : options[k]) {
          auto p = prefix;
          p.push_back(q);
          next.push_back(std::move(p));
        }
      }
      out = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_point_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

BoxOutcome examine(std::span<const CompiledPoly> system, const IntervalBox& box, int denominator_bound) {
  BoxOutcome out;
  for (const auto& q : system) {
    if (!q.enclose(box).contains_zero()) {
      out.discarded = true;
      return out;
    }
  }
  // Candidates come sorted, so the first exact zero is the smallest.
  for (auto& point : candidate_points(box, denominator_bound)) {
    bool all_zero = std::all_of(system.begin(), system.end(),
                                [&](const CompiledPoly& q) { return sgn(q.eval(point)) == 0; });
    if (all_zero) {
      out.zero = std::move(point);
      break;
    }
  }
  return out;
}

}  // namespace

namespace kernels {

std::vector<BoxOutcome> examine_boxes_serial(std::span<const CompiledPoly> system, std::span<const IntervalBox> boxes,
                                             int denominator_bound) {
  std::vector<BoxOutcome> out;
  out.reserve(boxes.size());
  for (const auto& box : boxes) out.push_back(examine(system, box, denominator_bound));
  return out;
}

std::vector<BoxOutcome> examine_boxes_parallel(std::span<const CompiledPoly> system,
                                               std::span<const IntervalBox> boxes, int denominator_bound,
                                               int threads) {
  std::vector<BoxOutcome> out(boxes.size());
  const auto n = static_cast<std::ptrdiff_t>(boxes.size());
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
#else
  (void)threads;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = examine(system, boxes[static_cast<std::size_t>(i)], denominator_bound);
  }
  return out;
}

}  // namespace kernels

std::size_t SubdivisionResult::boxes_examined() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.examined;
  return n;
}

std::vector<CompiledPoly> compile(const RealPolySystem& system) {
  std::vector<CompiledPoly> out;
  out.reserve(system.polys.size());
  for (const auto& q : system.polys) out.emplace_back(q);
  return out;
}

SubdivisionResult subdivision_search(const RealPolySystem& system, const IntervalBox& box,
                                     const SubdivisionOptions& options) {
  auto compiled = compile(system);
  return subdivision_search(compiled, box, options);
}

SubdivisionResult subdivision_search(std::span<const CompiledPoly> system, const IntervalBox& box,
                                     const SubdivisionOptions& options) {
  SubdivisionResult result;
  std::vector<IntervalBox> frontier{box};
  for (int depth = 0;; ++depth) {
    auto outcomes = options.threads == 1
                        ? kernels::examine_boxes_serial(system, frontier, options.denominator_bound)
                        : kernels::examine_boxes_parallel(system, frontier, options.denominator_bound, options.threads);
    LevelStats stats{depth, frontier.size(), 0};
    std::vector<IntervalBox> survivors;
    const std::vector<Rational>* best = nullptr;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (outcomes[i].discarded) {
        ++stats.discarded;
        continue;
      }
      if (outcomes[i].zero && (best == nullptr || canonical_point_less(*outcomes[i].zero, *best))) {
        best = &*outcomes[i].zero;
      }
      survivors.push_back(std::move(frontier[i]));
    }
    result.levels.push_back(stats);
    if (best != nullptr) {
      result.kind = SubdivisionKind::ExactZero;
      result.zero = *best;
      return result;
    }
    if (survivors.empty()) {
      result.kind = SubdivisionKind::NoZeroInBox;
      return result;
    }
    if (depth >= options.max_depth || survivors.size() * 2 > options.max_boxes) {
      result.frontier_capped = depth < options.max_depth;
      result.kind = SubdivisionKind::CandidateBoxes;
      result.candidates = std::move(survivors);
      return result;
    }
    frontier.clear();
    frontier.reserve(survivors.size() * 2);
    for (const auto& b : survivors) {
      auto [left, right] = b.bisect();
      frontier.push_back(std::move(left));
      frontier.push_back(std::move(right));
    }
  }
}

const char* to_string(SubdivisionKind kind) {
  switch (kind) {
    case SubdivisionKind::NoZeroInBox: return "NoZeroInBox";
    case SubdivisionKind::CandidateBoxes: return "CandidateBoxes";
    case SubdivisionKind::ExactZero: return "ExactZero";
  }
  return "CandidateBoxes";
}

}  // namespace nullsol
