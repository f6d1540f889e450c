#include "partition.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <set>

#include "error.hpp"

namespace tcorelab {

Partition::Partition(std::vector<int> canonical) : parts_(std::move(canonical)) {
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::span<const int> raw) {
  std::vector<int> parts;
  parts.reserve(raw.size());
  for (int v : raw) {
    if (v < 0)
      fail(ErrorCode::invalid_argument, "negative part " + std::to_string(v));
    if (v > 0)
      parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::frequency(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_frequency_notation() const {
  std::string out = "(";
  bool first = true;
  for (auto it = parts_.rbegin(); it != parts_.rend();) {
    int value = *it;
    int count = 0;
    while (it != parts_.rend() && *it == value) {
      ++it;
      ++count;
    }
    if (!first)
      out += ',';
    first = false;
    out += std::to_string(value) + "^" + std::to_string(count);
  }
  return out + ")";
}

Partition parse_partition(std::string_view csv) {
  std::vector<int> raw;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  csv = trim(csv);
  if (csv.empty())
    return {};
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view token = trim(csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size() || value < 0)
      fail(ErrorCode::invalid_argument, "bad partition token '" + std::string(token) + "'");
    raw.push_back(value);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return Partition::from_parts(raw);
}

Partition conjugate(const Partition &p) {
  // lambda'_j = #{parts >= j}
  std::vector<int> out(p.largest(), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j)
      ++out[j];
  return Partition::from_parts(out);
}

int odd_part_count(const Partition &p) {
  return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 != 0; }));
}

int durfee_size(const Partition &p) {
  int j = 0;
  while (j < p.length() && p.parts()[j] >= j + 1)
    ++j;
  return j;
}

std::vector<long long> residue_counts(const Partition &p, int t) {
  if (t < 2)
    fail(ErrorCode::invalid_argument, "t must be at least 2");
  std::vector<long long> r(t, 0);
  for (int i = 1; i <= p.length(); ++i) {
    int len = p.row(i);
    // cells (i, 1..len) carry labels (1-i) .. (len-i) mod t
    long long full = len / t;
    for (int k = 0; k < t; ++k)
      r[k] += full;
    for (int j = static_cast<int>(full) * t + 1; j <= len; ++j)
      ++r[mod(j - i, t)];
  }
  return r;
}

Partition add_cell(const Partition &p, Cell at) {
  if (at.row < 1 || at.col < 1)
    fail(ErrorCode::not_addable, "cell coordinates must be positive");
  if (at.row > p.length() + 1 || p.row(at.row) != at.col - 1 || (at.row > 1 && p.row(at.row - 1) < at.col))
    fail(ErrorCode::not_addable,
         "cell (" + std::to_string(at.row) + "," + std::to_string(at.col) + ") is not an addable corner");
  std::vector<int> parts = p.parts();
  if (at.row == p.length() + 1)
    parts.push_back(1);
  else
    ++parts[at.row - 1];
  return Partition::from_parts(parts);
}

namespace {

// Contents lambda_i - i of the first `rows` rows.
std::vector<int> row_contents(const Partition &p, int rows) {
  std::vector<int> c(rows);
  for (int i = 1; i <= rows; ++i)
    c[i - 1] = p.row(i) - i;
  return c;
}

Partition from_contents(std::vector<int> contents) {
  std::sort(contents.begin(), contents.end(), std::greater<>());
  std::vector<int> parts;
  for (std::size_t i = 0; i < contents.size(); ++i) {
    int v = contents[i] + static_cast<int>(i) + 1;
    if (v <= 0)
      break;
    parts.push_back(v);
  }
  return Partition::from_parts(parts);
}

} // namespace

std::vector<StripRemoval> rim_hook_removals(const Partition &p, int len) {
  std::vector<StripRemoval> out;
  if (len < 1)
    return out;
  const int rows = p.length() + len + 1;
  std::vector<int> contents = row_contents(p, rows);
  std::set<int> present(contents.begin(), contents.end());
  for (int i = 1; i <= p.length(); ++i) {
    int c = contents[i - 1];
    if (present.count(c - len))
      continue;
    std::vector<int> moved = contents;
    moved[i - 1] = c - len;
    out.push_back({from_contents(std::move(moved)), Cell{i, p.row(i)}, len});
  }
  return out;
}

std::vector<Cell> strip_attachment_order(const Partition &original, const StripRemoval &removal) {
  std::vector<Cell> cells;
  for (int i = 1; i <= original.length(); ++i)
    for (int j = removal.result.row(i) + 1; j <= original.row(i); ++j)
      cells.push_back({i, j});
  return cells;
}

Partition strip_to_core(const Partition &p, int t, StripOrder order) {
  if (t < 2)
    fail(ErrorCode::invalid_argument, "t must be at least 2");
  Partition cur = p;
  for (;;) {
    auto removals = rim_hook_removals(cur, t);
    if (removals.empty())
      return cur;
    cur = order == StripOrder::first_head ? removals.front().result : removals.back().result;
  }
}

bool is_t_core(const Partition &p, int t) {
  if (t < 2)
    fail(ErrorCode::invalid_argument, "t must be at least 2");
  // a t-hook exists iff some content c has c - t missing
  const int rows = p.length() + t + 1;
  std::vector<int> contents = row_contents(p, rows);
  std::set<int> present(contents.begin(), contents.end());
  for (int i = 1; i <= p.length(); ++i)
    if (!present.count(contents[i - 1] - t))
      return false;
  return true;
}

namespace {
std::atomic<int> g_bound{default_enumeration_bound};
}

int enumeration_bound() noexcept { return g_bound.load(); }
void set_enumeration_bound(int n) noexcept { g_bound.store(n); }

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 0)
    fail(ErrorCode::invalid_argument, "weight must be nonnegative");
  if (n > enumeration_bound())
    fail(ErrorCode::bound_exceeded,
         "n=" + std::to_string(n) + " exceeds enumeration bound " + std::to_string(enumeration_bound()));
}

std::optional<Partition> PartitionStream::next() {
  if (done_)
    return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ > 0)
      cur_.push_back(n_);
    else
      done_ = true;
    return Partition(cur_);
  }
  int rem = 0;
  while (!cur_.empty() && cur_.back() == 1) {
    cur_.pop_back();
    ++rem;
  }
  if (cur_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  int x = cur_.back();
  cur_.pop_back();
  rem += x;
  int y = x - 1;
  while (rem >= y) {
    cur_.push_back(y);
    rem -= y;
  }
  if (rem > 0)
    cur_.push_back(rem);
  return Partition(cur_);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  PartitionStream stream(n);
  while (auto p = stream.next())
    out.push_back(std::move(*p));
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition &)> &visit) {
  PartitionStream stream(n);
  while (auto p = stream.next())
    visit(*p);
}

} // namespace tcorelab
