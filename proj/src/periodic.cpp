#include "nullsol/classifier.hpp"
#include "nullsol/subdivision.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nullsol {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> invert(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix m = a;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = Rational(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

LatticeSpec LatticeSpec::from_rows(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) throw std::invalid_argument("lattice must have at least one row");
  for (const auto& r : rows) {
    if (r.size() != rows.size()) {
      throw std::invalid_argument("lattice matrix must be square (got " + std::to_string(rows.size()) + " rows, a row of " +
                                  std::to_string(r.size()) + " entries)");
    }
  }
  auto inv = invert(rows);
  if (!inv) throw std::invalid_argument("lattice matrix is singular");
  LatticeSpec spec;
  spec.rows_ = std::move(rows);
  spec.inverse_ = std::move(*inv);
  return spec;
}

LatticeSpec LatticeSpec::parse(std::string_view text) {
  Matrix rows;
  std::stringstream rs{std::string(text)};
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> entries;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      auto q = parse_rational(trim(entry));
      if (!q) throw std::invalid_argument("lattice entry '" + trim(entry) + "' is not a rational number");
      entries.push_back(std::move(*q));
    }
    rows.push_back(std::move(entries));
  }
  return from_rows(std::move(rows));
}

std::vector<Rational> LatticeSpec::reduced_frequency(const std::vector<Integer>& k) const {
  std::vector<Rational> w(rows_.size(), Rational(0));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_.size(); ++j) w[i] += inverse_[i][j] * k[j];
  return w;
}

RealPolySystem resonance_system(const PiMultiPoly& p) {
  const int d = p.dimension;
  std::vector<MultiPoly> complex_parts;
  for (const auto& a : coefficients_in_T(p)) {
    std::vector<MultiPoly> by_power;
    for (std::size_t m = 0; m < a.by_pi_power.size(); ++m) {
      for (const auto& [e, c] : a.by_pi_power[m].terms()) {
        unsigned spatial = 0;
        for (int k = 0; k < d; ++k) spatial += e[k];
        // (2*pi*i*w)^alpha = (2i)^|alpha| pi^|alpha| w^alpha
        const std::size_t n = m + spatial;
        if (by_power.size() <= n) by_power.resize(n + 1, MultiPoly(d));
        by_power[n].add_term(e, c * pow(Gaussian(0, 2), spatial));
      }
    }
    for (auto& b : by_power) {
      if (!b.is_zero()) complex_parts.push_back(std::move(b));
    }
  }
  return split_real_imaginary(d, complex_parts);
}

namespace {

// Integer points with max-norm exactly r inside |k_i| <= limit_i, in canonical order.
std::vector<std::vector<Integer>> shell(int d, long r, const std::vector<long>& limit) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> k(d, 0);
  std::vector<long> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    hi[i] = std::min(r, limit[i]);
    lo[i] = -hi[i];
  }
  if (d == 0) return out;
  for (int i = 0; i < d; ++i) k[i] = lo[i];
  for (;;) {
    long norm = 0;
    for (long v : k) norm = std::max(norm, v < 0 ? -v : v);
    if (norm == r) out.emplace_back(k.begin(), k.end());
    int i = 0;
    while (i < d && k[i] == hi[i]) {
      k[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    std::vector<Rational> qa(a.begin(), a.end()), qb(b.begin(), b.end());
    return canonical_point_less(qa, qb);
  });
  return out;
}

bool all_vanish(const std::vector<CompiledPoly>& system, const std::vector<Rational>& w) {
  return std::all_of(system.begin(), system.end(), [&](const CompiledPoly& q) { return sgn(q.eval(w)) == 0; });
}

Verdict base_verdict() {
  Verdict v;
  v.space = SpaceTag::Periodic;
  v.rule = "lattice-resonance";
  v.criterion = "trivial iff no v in 2*pi*A^{-1}Z^d makes p(iv, T) the zero polynomial";
  return v;
}

void attach_witness(Verdict& v, const PiMultiPoly& p, std::vector<Integer> k, std::vector<Rational> w) {
  v.status = VerdictStatus::Nontrivial;
  v.witness = build_periodic_witness(p, w);
  auto grid = default_residual_grid(p.dimension);
  v.residual = verify_residual(*v.witness, p, grid);
  v.evidence.lattice_point = std::move(k);
  v.evidence.reduced_frequency = std::move(w);
}

}  // namespace

Verdict periodic_test(const PiMultiPoly& p, const LatticeSpec& lattice, const SolverConfig& config) {
  config.validate();
  const int d = p.dimension;
  if (lattice.dimension() != d) {
    throw std::invalid_argument("lattice dimension " + std::to_string(lattice.dimension()) +
                                " does not match polynomial dimension " + std::to_string(d));
  }
  Verdict v = base_verdict();
  if (p.is_zero()) {
    v.rule = "zero-symbol";
    v.criterion = "p = 0, so every element of the space is a null solution";
    attach_witness(v, p, std::vector<Integer>(d, Integer(0)), std::vector<Rational>(d, Rational(0)));
    v.evidence.enumeration_complete = true;
    return v;
  }
  v.evidence.total_degree = total_degree(p);

  // (a) no imaginary-slice zeros at all
  if (!p.has_pi()) {
    MultiPoly plain = p.to_plain();
    ContentGenerators content = x_content(plain);
    RealPolySystem slice = imaginary_slice(content);
    EmptinessVerdict e = decide_emptiness(slice, config);
    v.evidence.content = std::move(content);
    v.evidence.slice = std::move(slice);
    bool empty = e.status == EmptinessStatus::Empty;
    v.evidence.emptiness = std::move(e);
    if (empty) {
      v.status = VerdictStatus::Trivial;
      v.evidence.enumeration_complete = true;
      return v;
    }
  }

  RealPolySystem system = resonance_system(p);
  EmptinessVerdict reduced = decide_emptiness(system, config);
  v.evidence.lattice_system = system;
  if (reduced.status == EmptinessStatus::Empty) {
    if (!v.evidence.emptiness) v.evidence.emptiness = reduced;
    v.status = VerdictStatus::Trivial;
    v.evidence.enumeration_complete = true;
    return v;
  }
  if (!v.evidence.emptiness) v.evidence.emptiness = reduced;

  auto compiled = compile(system);
  // (b) bounded reduced frequencies: enumerate every k with |A^{-1}k| <= R.
  std::optional<Rational> radius = boundedness_radius(system, config);
  std::vector<long> limit(d, 0);
  bool complete = false;
  long max_shell = config.lattice_radius;
  if (radius) {
    v.evidence.frequency_radius = radius;
    double volume = 1.0;
    bool fits = true;
    for (int i = 0; i < d; ++i) {
      Rational row_sum = 0;
      for (int j = 0; j < d; ++j) row_sum += abs(lattice.rows()[i][j]);
      Integer bound = floor(row_sum * *radius);
      if (!bound.fits_slong_p() || bound > Integer(1L << 40)) {
        fits = false;
        break;
      }
      limit[i] = bound.get_si();
      volume *= 2.0 * static_cast<double>(limit[i]) + 1.0;
    }
    if (fits && volume <= static_cast<double>(config.max_lattice_points)) {
      complete = true;
      max_shell = *std::max_element(limit.begin(), limit.end());
    }
  }
  if (!complete) std::fill(limit.begin(), limit.end(), static_cast<long>(config.lattice_radius));

  // (c) otherwise a finite window of the lattice.
  for (long r = 0; r <= max_shell; ++r) {
    for (auto& k : shell(d, r, limit)) {
      std::vector<Rational> w = lattice.reduced_frequency(k);
      if (complete) {
        bool inside = std::all_of(w.begin(), w.end(), [&](const Rational& x) { return abs(x) <= *radius; });
        if (!inside) continue;
      }
      ++v.evidence.lattice_points_checked;
      if (all_vanish(compiled, w)) {
        attach_witness(v, p, std::move(k), std::move(w));
        v.evidence.enumeration_complete = complete;
        if (!complete) v.evidence.searched_lattice_radius = config.lattice_radius;
        return v;
      }
    }
  }
  v.evidence.enumeration_complete = complete;
  if (complete) {
    v.status = VerdictStatus::Trivial;
  } else {
    v.status = VerdictStatus::Unknown;
    v.evidence.searched_lattice_radius = config.lattice_radius;
  }
  return v;
}

}  // namespace nullsol
