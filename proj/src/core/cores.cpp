#include "cores.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace tcorelab {

NVector NVector::make(std::vector<int> coords) {
  if (coords.size() < 2)
    fail(ErrorCode::invalid_vector, "n-vector needs at least two coordinates");
  long long sum = std::accumulate(coords.begin(), coords.end(), 0LL);
  if (sum != 0)
    fail(ErrorCode::invalid_vector, "n-vector coordinates must sum to zero");
  NVector n;
  n.t = static_cast<int>(coords.size());
  n.coords = std::move(coords);
  return n;
}

long long NVector::dot_b() const {
  long long s = 0;
  for (int i = 0; i < t; ++i)
    s += static_cast<long long>(i) * coords[i];
  return s;
}

long long NVector::encoded_weight() const {
  long long sq = 0;
  for (int v : coords)
    sq += static_cast<long long>(v) * v;
  // sum n_i = 0 makes t*|n|^2 even
  return t * sq / 2 + dot_b();
}

AlphaVector AlphaVector::make(std::array<int, 5> coords) {
  if (coords[0] + coords[1] + coords[2] + coords[3] + coords[4] != 1)
    fail(ErrorCode::invalid_vector, "alpha-vector coordinates must sum to 1");
  return AlphaVector{coords};
}

long long CoreQuotient::quotient_weight() const {
  long long s = 0;
  for (const auto &q : quotient)
    s += q.weight();
  return s;
}

namespace {

// A Maya diagram split into t runners. Position r on runner i holds content t(r-1)+i,
// so r is exactly the region of that content.
struct Abacus {
  int t;
  std::vector<long long> charge;
  // displacement[i][j] = b_j - (charge_i - j), beads b_0 > b_1 > ... above the packed floor
  std::vector<std::vector<int>> displacement;
};

Abacus to_abacus(const Partition &p, int t) {
  const int nu = p.length();
  Abacus ab{t, std::vector<long long>(t), std::vector<std::vector<int>>(t)};
  std::vector<std::vector<long long>> beads(t);
  for (int j = 1; j <= nu; ++j) {
    long long c = p.row(j) - j;
    beads[mod(c, t)].push_back(floor_div(c, t) + 1);
  }
  // every content <= -nu-1 is a bead
  for (int i = 0; i < t; ++i) {
    long long floor_region = floor_div(-nu - 1 - i, t) + 1;
    // contents in (-nu-1, ...] on runner i not listed are empty; beads above floor:
    std::vector<long long> &b = beads[i];
    b.erase(std::remove_if(b.begin(), b.end(), [&](long long r) { return r <= floor_region; }), b.end());
    std::sort(b.begin(), b.end(), std::greater<>());
    ab.charge[i] = floor_region + static_cast<long long>(b.size());
    std::vector<int> d;
    for (std::size_t j = 0; j < b.size(); ++j) {
      long long packed = ab.charge[i] - static_cast<long long>(j);
      d.push_back(static_cast<int>(b[j] - packed));
    }
    ab.displacement[i] = std::move(d);
  }
  return ab;
}

Partition from_abacus(int t, const std::vector<long long> &charge, const std::vector<Partition> &displacements) {
  long long floor_region = 0;
  for (int i = 0; i < t; ++i)
    floor_region = std::min(floor_region, charge[i] - displacements[i].length() - 1);
  std::vector<long long> contents;
  for (int i = 0; i < t; ++i) {
    const auto &d = displacements[i].parts();
    const long long m = static_cast<long long>(d.size());
    for (long long j = 0; j < m; ++j)
      contents.push_back(t * (charge[i] - j + d[j] - 1) + i);
    for (long long r = charge[i] - m; r >= floor_region; --r)
      contents.push_back(t * (r - 1) + i);
  }
  // all contents below t(floor_region - 1) are beads; with total charge 0 the
  // remaining beads are exactly the first rows of the diagram
  std::sort(contents.begin(), contents.end(), std::greater<>());
  std::vector<int> parts;
  for (std::size_t j = 0; j < contents.size(); ++j) {
    long long v = contents[j] + static_cast<long long>(j) + 1;
    if (v <= 0)
      break;
    parts.push_back(static_cast<int>(v));
  }
  return Partition::from_parts(parts);
}

void require_t(int t) {
  if (t < 2)
    fail(ErrorCode::invalid_argument, "t must be at least 2");
}

} // namespace

char ColorWords::letter(int color, long long region) const {
  if (region < base_region)
    return 'E';
  long long k = region - base_region;
  const std::string &w = window.at(color);
  return k < static_cast<long long>(w.size()) ? w[k] : 'N';
}

std::optional<long long> ColorWords::boundary(int color) const {
  const std::string &w = window.at(color);
  std::size_t first_n = w.find('N');
  if (first_n == std::string::npos)
    first_n = w.size();
  if (w.find('E', first_n) != std::string::npos)
    return std::nullopt;
  return base_region + static_cast<long long>(first_n) - 1;
}

ColorWords words(const Partition &p, int t) {
  require_t(t);
  const int nu = p.length();
  // exposed cells: the end of every row of the extended diagram, column 0 for empty rows
  std::set<long long> exposed;
  for (int j = 1; j <= nu; ++j)
    exposed.insert(p.row(j) - j);
  const long long lo = std::min<long long>(0, floor_div(-nu, t));
  const long long hi = std::max<long long>(1, floor_div(p.largest() - 1, t) + 1);
  ColorWords w;
  w.t = t;
  w.base_region = lo;
  w.window.assign(t, std::string());
  for (int i = 0; i < t; ++i) {
    for (long long r = lo; r <= hi; ++r) {
      long long c = t * (r - 1) + i;
      bool is_exposed = c <= -nu - 1 || exposed.count(c);
      w.window[i] += is_exposed ? 'E' : 'N';
    }
  }
  return w;
}

CoreQuotient phi1(const Partition &p, int t) {
  require_t(t);
  Abacus ab = to_abacus(p, t);
  CoreQuotient cq;
  cq.t = t;
  std::vector<Partition> empty(t);
  cq.core = from_abacus(t, ab.charge, empty);
  for (int i = 0; i < t; ++i)
    cq.quotient.push_back(conjugate(Partition::from_parts(ab.displacement[i])));
  return cq;
}

Partition phi1_inv(const CoreQuotient &cq) {
  require_t(cq.t);
  if (static_cast<int>(cq.quotient.size()) != cq.t)
    fail(ErrorCode::invalid_argument, "quotient must have t components");
  if (!is_t_core(cq.core, cq.t))
    fail(ErrorCode::not_a_core, "core " + cq.core.to_csv() + " is not a " + std::to_string(cq.t) + "-core");
  Abacus ab = to_abacus(cq.core, cq.t);
  std::vector<Partition> displacements;
  for (const auto &q : cq.quotient)
    displacements.push_back(conjugate(q));
  return from_abacus(cq.t, ab.charge, displacements);
}

NVector phi2(const Partition &core, int t) {
  require_t(t);
  if (!is_t_core(core, t))
    fail(ErrorCode::not_a_core, core.to_csv() + " is not a " + std::to_string(t) + "-core");
  auto r = residue_counts(core, t);
  std::vector<int> n(t);
  for (int i = 0; i < t; ++i)
    n[i] = static_cast<int>(r[i] - r[(i + 1) % t]);
  return NVector::make(std::move(n));
}

Partition phi2_inv(const NVector &n) {
  NVector checked = NVector::make(n.coords);
  std::vector<long long> charge(checked.coords.begin(), checked.coords.end());
  return from_abacus(checked.t, charge, std::vector<Partition>(checked.t));
}

AlphaVector alpha_from_n(const NVector &n) {
  if (n.t != 5)
    fail(ErrorCode::invalid_argument, "alpha-vectors exist only for t = 5");
  const auto &v = n.coords;
  if (mod(n.dot_b(), 5) != 4)
    fail(ErrorCode::wrong_residue, "n.b_5 must be 4 mod 5");
  // triangular solve of n = N(alpha) with sum alpha = 1
  long long s = 4LL * v[0] + 3LL * v[1] + 2LL * v[2] + v[3] - 1;
  int a4 = static_cast<int>(s / 5);
  int a0 = v[0] - a4;
  int a1 = v[0] + v[1] - 2 * a4;
  int a2 = v[0] + v[1] + v[2] - 2 * a4;
  int a3 = v[0] + v[1] + v[2] + v[3] - a4;
  return AlphaVector::make({a0, a1, a2, a3, a4});
}

NVector n_from_alpha(const AlphaVector &a) {
  AlphaVector ok = AlphaVector::make(a.coords);
  const auto &x = ok.coords;
  return NVector::make({x[0] + x[4], -x[0] + x[1] + x[4], -x[1] + x[2], -x[2] + x[3] - x[4], -x[3] - x[4]});
}

long long q_alpha(const AlphaVector &a) {
  AlphaVector ok = AlphaVector::make(a.coords);
  long long sq = 0, cross = 0;
  for (int i = 0; i < 5; ++i) {
    sq += static_cast<long long>(ok.coords[i]) * ok.coords[i];
    cross += static_cast<long long>(ok.coords[i]) * ok.coords[(i + 1) % 5];
  }
  return sq - cross;
}

long long q3(long long n1, long long n2) { return 3 * (n1 * n1 + n1 * n2 + n2 * n2) + n1 + 2 * n2; }

PhiImage capital_phi(const Partition &p) {
  if (mod(p.weight(), 5) != 4)
    fail(ErrorCode::wrong_residue, "weight must be 4 mod 5");
  CoreQuotient cq = phi1(p, 5);
  PhiImage image;
  image.alpha = alpha_from_n(phi2(cq.core, 5));
  for (int i = 0; i < 5; ++i)
    image.quotient[i] = cq.quotient[i];
  return image;
}

Partition capital_phi_inv(const PhiImage &image) {
  CoreQuotient cq;
  cq.t = 5;
  cq.core = phi2_inv(n_from_alpha(image.alpha));
  cq.quotient.assign(image.quotient.begin(), image.quotient.end());
  return phi1_inv(cq);
}

int n_vector_radius(int t, long long max_weight) {
  require_t(t);
  // Each term t/2 x^2 + (i - (t-1)/2) x is at least -(t-1)^2/(8t), so a single
  // coordinate of size M forces t/2 M^2 - (t-1)/2 M <= W + (t-1)^2/8.
  // Doubled and times 4: 4tM^2 - 4(t-1)M <= 8W + (t-1)^2.
  const long long rhs = 8 * max_weight + static_cast<long long>(t - 1) * (t - 1);
  long long m = 0;
  while (4LL * t * (m + 1) * (m + 1) - 4LL * (t - 1) * (m + 1) <= rhs)
    ++m;
  return static_cast<int>(m);
}

void for_each_n_vector(int t, long long max_weight, const std::function<void(const NVector &, long long)> &visit) {
  require_t(t);
  if (max_weight < 0)
    return;
  const int radius = n_vector_radius(t, max_weight);
  // doubled term value 2 f_i(x) = t x^2 + (2i - t + 1) x; its minimum over the integers
  // is bounded below by -(t-1)^2 / (4t)
  const long long term_floor = -((static_cast<long long>(t - 1) * (t - 1)) / (4LL * t)) - 1;
  NVector n;
  n.t = t;
  n.coords.assign(t, 0);
  const long long limit = 2 * max_weight;
  std::function<void(int, long long, long long)> rec = [&](int i, long long sum, long long doubled) {
    const int remaining = t - i;
    if (doubled + remaining * term_floor > limit)
      return;
    if (i == t - 1) {
      long long last = -sum;
      if (last < -radius || last > radius)
        return;
      long long total = doubled + t * last * last + (2LL * i - t + 1) * last;
      if (total > limit)
        return;
      n.coords[i] = static_cast<int>(last);
      visit(n, total / 2);
      return;
    }
    for (int x = -radius; x <= radius; ++x) {
      // the remaining coordinates must be able to cancel the running sum
      long long s = sum + x;
      if (s > static_cast<long long>(remaining - 1) * radius || s < -static_cast<long long>(remaining - 1) * radius)
        continue;
      n.coords[i] = x;
      rec(i + 1, s, doubled + static_cast<long long>(t) * x * x + (2LL * i - t + 1) * x);
    }
  };
  rec(0, 0, 0);
}

std::vector<long long> t_core_counts(int t, long long max_weight) {
  std::vector<long long> counts(std::max<long long>(max_weight + 1, 0), 0);
  for_each_n_vector(t, max_weight, [&](const NVector &, long long w) { ++counts[w]; });
  return counts;
}

long long count_t_cores(long long n, int t) {
  if (n < 0)
    return 0;
  return t_core_counts(t, n)[n];
}

} // namespace tcorelab
