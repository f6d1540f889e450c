#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cores.hpp"
#include "partition.hpp"

namespace tcorelab {

enum class Statistic { srank, dyson_rank, ag_crank, st_crank, two_quotient_rank, five_core_crank, bg_rank };

std::string_view statistic_name(Statistic s);
/// Parses the CLI spelling ("srank", "dyson-rank", ...).
std::optional<Statistic> parse_statistic(std::string_view name);
/// Value of the named statistic. five-core-crank is reported in 0..4 and reads 0 on
/// the empty partition.
long long evaluate(Statistic s, const Partition &p);

/// O(p) - O(p')
int srank(const Partition &p);
/// Largest part minus number of parts; 0 for the empty partition.
int dyson_rank(const Partition &p);
/// Andrews-Garvan crank; 0 for the empty partition.
int ag_crank(const Partition &p);

// Even-pair extraction: pairs of equal even parts 2k,2k become a part k of the first
// component, the rest is the second component (no repeated even parts).
std::pair<Partition, Partition> bijection1(const Partition &p);
Partition bijection1_inv(const Partition &p1, const Partition &p2);

bool is_type_a(const Partition &p);
bool is_type_b(const Partition &p);

/// Type A to type B, weight and srank preserving.
Partition bijection2(const Partition &pa);
Partition bijection2_inv(const Partition &pb);

int st_crank(const Partition &p);
int two_quotient_rank(const Partition &p);
/// (1 + sum i*alpha_i) mod 5 for weights 4 mod 5; wrong_residue otherwise.
int five_core_crank(const Partition &p);
int bg_rank(const Partition &p);

/// The cubic g(t,n,i) evaluated exactly (6g is computed and divided by 6).
long long g_tni(long long t, long long n, long long i);

/// Closed-form srank of the t-core with n-vector n, mod 4.
int thm4_rhs(const NVector &n);
/// srank of phi1_inv(cq) mod 4 from the core and quotient data.
int srtq_rhs(const CoreQuotient &cq);

/// sum_j lambda_j^2 + (1-2j) lambda_j  mod 4
int srank_crit_mod4(const Partition &p);

/// The cyclic cubic sum alpha_i alpha_{i+1} (alpha_i - alpha_{i+1}) mod 4.
int srank_alpha_mod4(const AlphaVector &a);

} // namespace tcorelab
