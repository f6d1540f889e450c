#include "statistics.hpp"

#include <array>
#include <map>

#include "error.hpp"

namespace tcorelab {

namespace {

constexpr std::array<std::pair<Statistic, std::string_view>, 7> kNames{{
    {Statistic::srank, "srank"},
    {Statistic::dyson_rank, "dyson-rank"},
    {Statistic::ag_crank, "ag-crank"},
    {Statistic::st_crank, "st-crank"},
    {Statistic::two_quotient_rank, "two-quotient-rank"},
    {Statistic::five_core_crank, "five-core-crank"},
    {Statistic::bg_rank, "bg-rank"},
}};

std::map<int, int> frequencies(const Partition &p) {
  std::map<int, int> f;
  for (int v : p.parts())
    ++f[v];
  return f;
}

Partition from_frequencies(const std::map<int, int> &f) {
  std::vector<int> parts;
  for (auto [value, count] : f)
    for (int k = 0; k < count; ++k)
      parts.push_back(value);
  return Partition::from_parts(parts);
}

bool has_repeated_even_part(const Partition &p) {
  for (auto [value, count] : frequencies(p))
    if (value % 2 == 0 && count > 1)
      return true;
  return false;
}

} // namespace

std::string_view statistic_name(Statistic s) {
  for (auto [k, name] : kNames)
    if (k == s)
      return name;
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
  for (auto [k, n] : kNames)
    if (n == name)
      return k;
  return std::nullopt;
}

long long evaluate(Statistic s, const Partition &p) {
  switch (s) {
  case Statistic::srank:
    return srank(p);
  case Statistic::dyson_rank:
    return dyson_rank(p);
  case Statistic::ag_crank:
    return ag_crank(p);
  case Statistic::st_crank:
    return st_crank(p);
  case Statistic::two_quotient_rank:
    return two_quotient_rank(p);
  case Statistic::five_core_crank:
    // the empty partition is the one weight off the 4 mod 5 progression given a value
    return p.empty() ? 0 : five_core_crank(p);
  case Statistic::bg_rank:
    return bg_rank(p);
  }
  fail(ErrorCode::internal, "unhandled statistic");
}

int srank(const Partition &p) { return odd_part_count(p) - odd_part_count(conjugate(p)); }

int dyson_rank(const Partition &p) { return p.largest() - p.length(); }

int ag_crank(const Partition &p) {
  if (p.empty())
    return 0;
  const int ones = p.frequency(1);
  if (ones == 0)
    return p.largest();
  int larger = 0;
  for (int v : p.parts())
    if (v > ones)
      ++larger;
  return larger - ones;
}

std::pair<Partition, Partition> bijection1(const Partition &p) {
  std::map<int, int> first, second;
  for (auto [value, count] : frequencies(p)) {
    if (value % 2 == 0) {
      if (count / 2 > 0)
        first[value / 2] = count / 2;
      if (count % 2)
        second[value] = 1;
    } else {
      second[value] = count;
    }
  }
  return {from_frequencies(first), from_frequencies(second)};
}

Partition bijection1_inv(const Partition &p1, const Partition &p2) {
  if (has_repeated_even_part(p2))
    fail(ErrorCode::repeated_even_part, p2.to_csv() + " has a repeated even part");
  std::vector<int> parts = p2.parts();
  for (int k : p1.parts()) {
    parts.push_back(2 * k);
    parts.push_back(2 * k);
  }
  return Partition::from_parts(parts);
}

bool is_type_a(const Partition &p) { return bijection1(p).first == Partition::from_parts({1}); }

bool is_type_b(const Partition &p) {
  if (p == Partition::from_parts({3, 1}))
    return true;
  if (p.weight() == 4)
    return false;
  const int l1 = p.row(1), l2 = p.row(2);
  if (l1 - l2 < 2)
    return false;
  // lambda'_1 - lambda'_2 is the number of parts equal to 1
  if (p.frequency(1) < 2)
    return false;
  if (l1 - 2 == l2 && l2 % 2 == 0)
    return false;
  return !has_repeated_even_part(p);
}

Partition bijection2(const Partition &pa) {
  if (!is_type_a(pa))
    fail(ErrorCode::not_type_a, pa.to_csv() + " is not of type A");
  auto f = frequencies(pa);
  const int m = pa.largest();
  if (m > 2) {
    f[1] += 2;
    f[2] -= 2;
    f[m] -= 1;
    f[m + 2] += 1;
  } else if (f[2] == 3) {
    f[1] += 2;
    f[2] = 0;
    f[4] = 1;
  } else {
    f[1] += 1;
    f[2] = 0;
    f[3] = 1;
  }
  std::erase_if(f, [](const auto &kv) { return kv.second == 0; });
  return from_frequencies(f);
}

Partition bijection2_inv(const Partition &pb) {
  if (!is_type_b(pb))
    fail(ErrorCode::invalid_argument, pb.to_csv() + " is not of type B");
  auto f = frequencies(pb);
  const int top = pb.largest();
  if (top == 3) {
    f[3] -= 1;
    f[1] -= 1;
    f[2] += 2;
  } else if (top == 4) {
    f[4] -= 1;
    f[1] -= 2;
    f[2] += 3;
  } else {
    f[top] -= 1;
    f[1] -= 2;
    f[2] += 2;
    f[top - 2] += 1;
  }
  std::erase_if(f, [](const auto &kv) { return kv.second == 0; });
  return from_frequencies(f);
}

int st_crank(const Partition &p) {
  if (p.empty())
    return 0;
  const auto [p1, p2] = bijection1(p);
  return ag_crank(p1) + srank(p) / 2 + (is_type_b(p) ? 1 : 0);
}

int two_quotient_rank(const Partition &p) {
  CoreQuotient cq = phi1(p, 2);
  return cq.quotient[0].length() - cq.quotient[1].length();
}

int five_core_crank(const Partition &p) {
  PhiImage image = capital_phi(p);
  long long s = 1;
  for (int i = 0; i < 5; ++i)
    s += static_cast<long long>(i) * image.alpha.coords[i];
  return static_cast<int>(mod(s, 5));
}

int bg_rank(const Partition &p) {
  int s = 0;
  for (int j = 1; j <= p.length(); ++j)
    if (p.row(j) % 2 != 0)
      s += (j % 2 == 1) ? 1 : -1;
  return s;
}

long long g_tni(long long t, long long n, long long i) {
  const long long six_g = 2 * t * t * n * n * n + (6 * t * i - 3 * t * (t - 1)) * n * n +
                          (6 * i * i - 6 * i * (t - 1) + t * t - 3 * t) * n;
  if (six_g % 6 != 0)
    fail(ErrorCode::internal, "g(t,n,i) is not an integer");
  return six_g / 6;
}

int thm4_rhs(const NVector &n) {
  const long long t = n.t;
  long long s = 0;
  if (t % 2 == 1) {
    const long long a = (t % 4 == 1) ? 0 : 1;
    for (long long i = 0; i < t; ++i) {
      long long v = n.coords[i] + (1 - 2 * a) * i + a;
      s += mod(v * v * v, 4);
    }
  } else {
    const long long a = (t % 4 == 0) ? 0 : 1;
    for (long long i = 0; i < t; ++i) {
      long long v = n.coords[i];
      s += a * v * v + (i * i + i) * v;
    }
  }
  return static_cast<int>(mod(s, 4));
}

int srtq_rhs(const CoreQuotient &cq) {
  const long long t = cq.t;
  long long s = srank(cq.core);
  if (t % 2 == 0) {
    const long long a = (t % 4 == 0) ? 0 : 1;
    s += 2 * a * cq.quotient_weight();
  } else {
    const long long a = (t % 4 == 1) ? 0 : 1;
    NVector n = phi2(cq.core, static_cast<int>(t));
    for (long long i = 0; i < t; ++i) {
      s += 2 * (n.coords[i] + i + a) * cq.quotient[i].weight();
      s += srank(cq.quotient[i]);
    }
  }
  return static_cast<int>(mod(s, 4));
}

int srank_crit_mod4(const Partition &p) {
  long long s = 0;
  for (long long j = 1; j <= p.length(); ++j) {
    long long l = p.row(static_cast<int>(j));
    s += l * l + (1 - 2 * j) * l;
  }
  return static_cast<int>(mod(s, 4));
}

int srank_alpha_mod4(const AlphaVector &a) {
  long long s = 0;
  for (int i = 0; i < 5; ++i) {
    long long x = a.coords[i], y = a.coords[(i + 1) % 5];
    s += x * y * (x - y);
  }
  return static_cast<int>(mod(s, 4));
}

} // namespace tcorelab
