#include "mss/bitstring_lcp.hpp"

#include <algorithm>

#include "mss/error.hpp"

namespace mss {

namespace {

std::uint64_t common_prefix(StringFamily& family, StringHandle a, StringHandle b,
                            PrefixSearch search) {
  if (search == PrefixSearch::kTreeWalk) return family.common_prefix_length(a, b);
  const std::uint64_t limit = std::min(a.length, b.length);
  auto prefixes_equal = [&](std::uint64_t len) {
    return family.equal(family.split(a, len).first, family.split(b, len).first);
  };
  // Gallop to bracket the answer, then bisect inside the bracket.
  std::uint64_t good = 0;
  std::uint64_t bad = limit + 1;
  for (std::uint64_t step = 1; step <= limit; step *= 2) {
    if (!prefixes_equal(step)) {
      bad = step;
      break;
    }
    good = step;
  }
  while (bad - good > 1) {
    const std::uint64_t mid = good + (bad - good) / 2;
    if (prefixes_equal(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

void check_position(std::uint64_t i, std::uint64_t m) {
  if (i >= m) throw IndexError("bit position out of range");
}

}  // namespace

PlainBitStringLcp::PlainBitStringLcp(std::uint64_t m, PrefixSearch search)
    : m_(m), search_(search) {
  if (m == 0) throw InvalidParameterError("bit string length must be positive");
  one_ = family_.add_string(1);
  // 0^m from the binary expansion of m, using O(log m) concatenations.
  StringHandle power = family_.add_string(0);
  StringHandle z = family_.empty();
  for (std::uint64_t rest = m;; rest >>= 1) {
    if (rest & 1) z = family_.concatenate(z, power);
    if (rest <= 1) break;
    power = family_.concatenate(power, power);
  }
  z_ = z;
}

bool PlainBitStringLcp::get(std::uint64_t i) const {
  check_position(i, m_);
  return family_.symbol_at(z_, i) == 1;
}

void PlainBitStringLcp::add(std::uint64_t i) {
  if (get(i)) return;
  const StringHandle parts[] = {family_.substring(z_, 0, i), one_,
                                family_.substring(z_, i + 1, m_)};
  z_ = family_.concatenate(parts);
}

std::uint64_t PlainBitStringLcp::lcp(std::uint64_t i, std::uint64_t j) {
  check_position(i, m_);
  check_position(j, m_);
  if (i == j) return m_ - i;
  const StringHandle left = family_.substring(z_, i, m_);
  const StringHandle right = family_.substring(z_, j, m_);
  return common_prefix(family_, left, right, search_);
}

RunLengthBitStringLcp::RunLengthBitStringLcp(std::uint64_t m, PrefixSearch search)
    : m_(m), search_(search) {
  if (m == 0) throw InvalidParameterError("bit string length must be positive");
  encoded_ = family_.add_string(zero_run(m));
}

bool RunLengthBitStringLcp::get(std::uint64_t i) const {
  check_position(i, m_);
  return ones_.contains(i);
}

std::uint64_t RunLengthBitStringLcp::lead() const {
  return ones_.size() > 0 && ones_.select(0) == 0 ? 0 : 1;
}

std::uint64_t RunLengthBitStringLcp::run_index(std::uint64_t rank) const {
  return rank == 0 ? 0 : lead() + 2 * (rank - 1) + 1;
}

void RunLengthBitStringLcp::add(std::uint64_t i) {
  check_position(i, m_);
  if (ones_.contains(i)) return;
  const std::uint64_t t = ones_.rank(i);
  const bool has_prev = t > 0;
  const bool has_next = t < ones_.size();
  const std::uint64_t prev = has_prev ? ones_.select(t - 1) : 0;
  const std::uint64_t next = has_next ? ones_.select(t) : m_;
  const std::uint64_t h = run_index(t);

  // Replace the run (0, next - prev - 1) by (0, i - prev - 1) 1 (0, next - i - 1),
  // dropping empty runs at either end of z.
  std::vector<StringHandle> parts;
  parts.push_back(family_.substring(encoded_, 0, h));
  const std::uint64_t left = has_prev ? i - prev - 1 : i;
  if (has_prev || left > 0) parts.push_back(family_.add_string(zero_run(left)));
  parts.push_back(family_.add_string(kOne));
  const std::uint64_t right = next - i - 1;
  if (has_next || right > 0) parts.push_back(family_.add_string(zero_run(right)));
  parts.push_back(family_.substring(encoded_, h + 1, encoded_.length));
  encoded_ = family_.concatenate(parts);
  ones_.insert(i);
}

StringHandle RunLengthBitStringLcp::suffix_encoding(std::uint64_t i) {
  const std::uint64_t t = ones_.rank(i);
  if (ones_.contains(i)) {
    return family_.substring(encoded_, lead() + 2 * t, encoded_.length);
  }
  const std::uint64_t next = t < ones_.size() ? ones_.select(t) : m_;
  const std::uint64_t h = run_index(t);
  return family_.concatenate(family_.add_string(zero_run(next - i)),
                             family_.substring(encoded_, h + 1, encoded_.length));
}

std::uint64_t RunLengthBitStringLcp::covered_length(std::uint64_t i,
                                                    std::uint64_t symbols) const {
  if (symbols == 0) return 0;
  const std::uint64_t t = ones_.rank(i);
  if (!ones_.contains(i)) {
    const std::uint64_t next = t < ones_.size() ? ones_.select(t) : m_;
    if (symbols == 1) return next - i;
    --symbols;
  }
  // From here the encoding alternates: one number t + k, then the zero run
  // after it.
  if (symbols % 2 == 1) return ones_.select(t + (symbols - 1) / 2) + 1 - i;
  const std::uint64_t k = t + symbols / 2;
  return k < ones_.size() ? ones_.select(k) - i : m_ - i;
}

std::uint64_t RunLengthBitStringLcp::lcp(std::uint64_t i, std::uint64_t j) {
  check_position(i, m_);
  check_position(j, m_);
  if (i == j) return m_ - i;
  const StringHandle left = suffix_encoding(i);
  const StringHandle right = suffix_encoding(j);
  const std::uint64_t matched = common_prefix(family_, left, right, search_);
  const std::uint64_t covered = covered_length(i, matched);
  if (matched == left.length || matched == right.length) return covered;
  const Symbol a = family_.symbol_at(left, matched);
  const Symbol b = family_.symbol_at(right, matched);
  if (is_zero_run(a) && is_zero_run(b)) return covered + std::min(run_length(a), run_length(b));
  return covered;
}

std::unique_ptr<BitStringLcp> make_bitstring_lcp(std::uint64_t m, LcpVariant variant,
                                                 PrefixSearch search) {
  if (variant == LcpVariant::kPlain) return std::make_unique<PlainBitStringLcp>(m, search);
  return std::make_unique<RunLengthBitStringLcp>(m, search);
}

}  // namespace mss
