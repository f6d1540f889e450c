#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcorelab {

/// An integer partition stored as its nonincreasing list of positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
  Partition() = default;

  /// Canonicalizes: drops zeros and sorts nonincreasing.
  static Partition from_parts(std::span<const int> raw);
  static Partition from_parts(std::initializer_list<int> raw) {
    return from_parts(std::span<const int>(raw.begin(), raw.size()));
  }

  const std::vector<int> &parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  /// Number of parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Largest part, 0 for the empty partition.
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part access; rows past the end read as 0.
  int row(int i) const noexcept { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  /// Number of parts equal to k.
  int frequency(int k) const noexcept;

  /// "5,4,1"; the empty partition renders as "".
  std::string to_csv() const;
  /// Multiplicity notation "(1^2,3^1)"; the empty partition renders as "()".
  std::string to_frequency_notation() const;

  friend bool operator==(const Partition &, const Partition &) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
    return a.parts_ <=> b.parts_;
  }

private:
  explicit Partition(std::vector<int> canonical);
  friend class PartitionStream;
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Parses the comma-separated text form. Throws on negative or non-numeric tokens.
Partition parse_partition(std::string_view csv);

Partition conjugate(const Partition &p);
int odd_part_count(const Partition &p);
int durfee_size(const Partition &p);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell &, const Cell &) = default;
};

/// (r_0, ..., r_{t-1}): r_i counts cells (row a, col b) with b - a = i (mod t).
std::vector<long long> residue_counts(const Partition &p, int t);

/// Adds a single cell; throws not_addable unless the result is a partition.
Partition add_cell(const Partition &p, Cell at);

struct StripRemoval {
  Partition result;
  /// Extreme North-East cell of the removed strip (row, column) in the original diagram.
  Cell head;
  int length = 0;
};

/// All rim strips of `len` cells whose removal leaves a partition, ordered by the
/// row of their head (walking the rim from North-East to South-West).
std::vector<StripRemoval> rim_hook_removals(const Partition &p, int len);

/// Cells of `original` missing from `removal.result`, in an order in which they
/// can be attached one at a time with every intermediate shape a partition:
/// rows top to bottom, left to right within a row.
std::vector<Cell> strip_attachment_order(const Partition &original, const StripRemoval &removal);

enum class StripOrder { first_head, last_head };

/// Removes t-rim hooks until none remain. The core does not depend on the order.
Partition strip_to_core(const Partition &p, int t, StripOrder order = StripOrder::first_head);

bool is_t_core(const Partition &p, int t);

// ---- enumeration ----

inline constexpr int default_enumeration_bound = 60;
int enumeration_bound() noexcept;
void set_enumeration_bound(int n) noexcept;

/// Single-consumer stream over the partitions of n in reverse lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
class PartitionStream {
public:
  /// Throws bound_exceeded when n is above enumeration_bound().
  explicit PartitionStream(int n);
  std::optional<Partition> next();

private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> cur_;
};

std::vector<Partition> enumerate_partitions(int n);

/// Visits every partition of n in stream order without materializing the list.
void for_each_partition(int n, const std::function<void(const Partition &)> &visit);

} // namespace tcorelab
