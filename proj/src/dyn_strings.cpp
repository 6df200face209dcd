#include "mss/dyn_strings.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mss/error.hpp"

namespace mss {

namespace {

constexpr int kMaxLevel = 250;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_block(std::span<const std::uint32_t> children, int level) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(level) ^ 0x5bd1e995ULL);
  for (std::uint32_t c : children) h = mix64(h ^ c);
  return h;
}

}  // namespace

std::size_t StringFamily::RunKeyHash::operator()(const RunKey& k) const {
  return mix64(mix64(k.base) ^ k.count ^ (static_cast<std::uint64_t>(k.level) << 56));
}

StringFamily::StringFamily() {
  nodes_.push_back(Node{0, 0, 0, Kind::kEmpty, 0});
}

void StringFamily::check(StringHandle h) const {
  if (h.id >= nodes_.size() || nodes_[h.id].length != h.length)
    throw HandleError("string handle does not belong to this family");
}

std::uint32_t StringFamily::intern_letter(Symbol c) {
  auto [it, inserted] = letters_.try_emplace(c, static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back(Node{1, c, 0, Kind::kLetter, 0});
  return it->second;
}

std::uint32_t StringFamily::intern_run(std::uint32_t base, std::uint64_t count, int level) {
  RunKey key{base, count, static_cast<std::uint8_t>(level)};
  auto [it, inserted] = runs_.try_emplace(key, static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(Node{nodes_[base].length * count, count, base, Kind::kRun,
                          static_cast<std::uint8_t>(level)});
  }
  return it->second;
}

std::uint32_t StringFamily::intern_block(std::span<const std::uint32_t> children, int level) {
  const std::uint64_t h = hash_block(children, level);
  auto [first, last] = blocks_.equal_range(h);
  for (auto it = first; it != last; ++it) {
    const Node& n = nodes_[it->second];
    if (n.level != level || n.child != children.size()) continue;
    if (std::equal(children.begin(), children.end(), children_.begin() + n.value))
      return it->second;
  }
  std::uint64_t length = 0;
  for (std::uint32_t c : children) length += nodes_[c].length;
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{length, children_.size(), static_cast<std::uint32_t>(children.size()),
                        Kind::kBlock, static_cast<std::uint8_t>(level)});
  children_.insert(children_.end(), children.begin(), children.end());
  blocks_.emplace(h, id);
  return id;
}

StringFamily::Located StringFamily::locate(std::uint32_t root, int level,
                                           std::uint64_t offset) const {
  std::uint32_t id = root;
  std::uint64_t start = 0;
  std::uint64_t copies = 1;
  while (nodes_[id].level > level) {
    const Node& n = nodes_[id];
    if (n.kind == Kind::kRun) {
      const std::uint64_t base_len = nodes_[n.child].length;
      const std::uint64_t idx = (offset - start) / base_len;
      start += idx * base_len;
      copies = n.value - idx;
      id = n.child;
    } else {
      copies = 1;
      const std::uint32_t* child = children_.data() + n.value;
      for (std::uint32_t k = 0;; ++k) {
        const std::uint64_t len = nodes_[child[k]].length;
        if (offset < start + len || k + 1 == n.child) {
          id = child[k];
          break;
        }
        start += len;
      }
    }
  }
  return {id, start, copies};
}

void StringFamily::enumerate(std::uint32_t root, int level, std::uint64_t lo,
                             std::uint64_t hi, std::vector<Item>& out) const {
  std::uint64_t t = lo;
  while (t < hi) {
    Located at = locate(root, level, t);
    assert(at.start == t);
    const std::uint64_t len = nodes_[at.id].length;
    const std::uint64_t count = std::min(at.copies, (hi - t) / len);
    assert(count >= 1);
    if (!out.empty() && out.back().id == at.id) {
      out.back().count += count;
    } else {
      out.push_back({at.id, count});
    }
    t += count * len;
  }
}

bool StringFamily::lower_priority(std::uint32_t a, std::uint32_t b, int level) const {
  const std::uint64_t salt = static_cast<std::uint64_t>(level) * 0xD6E8FEB86659FD93ULL;
  const std::uint64_t pa = mix64(a ^ salt);
  const std::uint64_t pb = mix64(b ^ salt);
  return pa < pb || (pa == pb && a < b);
}

std::vector<StringFamily::Item> StringFamily::parse_step(std::vector<Item> items, int level,
                                                         const std::uint32_t* right_context) {
  std::vector<Item> out;
  if (level % 2 == 0) {
    // Runs. Adjacent items were already merged by the caller.
    out.reserve(items.size());
    for (const Item& it : items)
      out.push_back({it.count == 1 ? it.id : intern_run(it.id, it.count, level + 1), 1});
    return out;
  }
  // Blocks: a new block starts at every strict local minimum of priority.
  const std::size_t n = items.size();
  for (const Item& it : items) {
    if (it.count != 1) throw std::logic_error("repeated symbol at a block level");
  }
  std::vector<std::uint32_t> block;
  auto flush = [&] {
    if (block.empty()) return;
    out.push_back({block.size() == 1 ? block[0] : intern_block(block, level + 1), 1});
    block.clear();
  };
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0) {
      const std::uint32_t cur = items[t].id;
      bool minimum = lower_priority(cur, items[t - 1].id, level);
      if (minimum) {
        if (t + 1 < n) {
          minimum = lower_priority(cur, items[t + 1].id, level);
        } else if (right_context != nullptr) {
          minimum = lower_priority(cur, *right_context, level);
        }
      }
      if (minimum) flush();
    }
    block.push_back(items[t].id);
  }
  flush();
  return out;
}

std::uint32_t StringFamily::build(std::vector<Core> cores) {
  std::erase_if(cores, [](const Core& c) { return c.lo == c.hi; });
  if (cores.empty()) return 0;
  if (cores.size() == 1 && cores[0].lo == 0 && cores[0].hi == nodes_[cores[0].root].length)
    return cores[0].root;

  std::vector<Segment> segments;
  for (const Core& c : cores) segments.push_back(Segment{true, c, {}});

  for (int level = 0;; ++level) {
    if (level >= kMaxLevel) throw std::logic_error("string parse did not converge");

    std::vector<Segment> next;
    auto append = [&next](std::vector<Item>&& items) {
      if (items.empty()) return;
      if (next.empty() || next.back().is_core) next.push_back(Segment{false, {}, {}});
      auto& dst = next.back().items;
      for (const Item& it : items) {
        if (!dst.empty() && dst.back().id == it.id) {
          dst.back().count += it.count;
        } else {
          dst.push_back(it);
        }
      }
    };

    for (Segment& seg : segments) {
      if (!seg.is_core) {
        append(std::move(seg.items));
        continue;
      }
      // Keep only the level+1 symbols whose formation cannot see past the
      // core: one level-`level` symbol of margin on the left, two on the
      // right. Everything else becomes explicit.
      const Core c = seg.core;
      const Located first = locate(c.root, level, c.lo);
      const std::uint64_t lo1 = first.start + nodes_[first.id].length;
      const std::uint64_t hi_last = locate(c.root, level, c.hi - 1).start;
      const std::uint64_t hi_second =
          hi_last > c.lo ? locate(c.root, level, hi_last - 1).start : c.lo;

      std::uint64_t new_lo = 0;
      std::uint64_t new_hi = 0;
      if (lo1 < hi_second) {
        const Located up = locate(c.root, level + 1, lo1);
        new_lo = up.start == lo1 ? lo1 : up.start + nodes_[up.id].length;
        const Located dn = locate(c.root, level + 1, hi_second - 1);
        const std::uint64_t dn_end = dn.start + nodes_[dn.id].length;
        new_hi = dn_end == hi_second ? hi_second : dn.start;
      }
      std::vector<Item> items;
      if (new_lo < new_hi) {
        enumerate(c.root, level, c.lo, new_lo, items);
        append(std::move(items));
        next.push_back(Segment{true, Core{c.root, new_lo, new_hi}, {}});
        items = {};
        enumerate(c.root, level, new_hi, c.hi, items);
        append(std::move(items));
      } else {
        enumerate(c.root, level, c.lo, c.hi, items);
        append(std::move(items));
      }
    }

    if (next.size() == 1 && !next[0].is_core && next[0].items.size() == 1 &&
        next[0].items[0].count == 1) {
      return next[0].items[0].id;
    }

    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next[i].is_core) continue;
      std::uint32_t context = 0;
      const std::uint32_t* context_ptr = nullptr;
      if (i + 1 < next.size()) {
        const Core& c = next[i + 1].core;
        context = locate(c.root, level, c.lo).id;
        context_ptr = &context;
      }
      next[i].items = parse_step(std::move(next[i].items), level, context_ptr);
    }
    segments = std::move(next);
  }
}

StringHandle StringFamily::add_string(Symbol c) { return handle(intern_letter(c)); }

StringHandle StringFamily::concatenate(StringHandle a, StringHandle b) {
  const StringHandle parts[] = {a, b};
  return concatenate(parts);
}

StringHandle StringFamily::concatenate(std::span<const StringHandle> parts) {
  std::vector<Core> cores;
  cores.reserve(parts.size());
  for (const StringHandle& h : parts) {
    check(h);
    cores.push_back(Core{h.id, 0, h.length});
  }
  return handle(build(std::move(cores)));
}

std::pair<StringHandle, StringHandle> StringFamily::split(StringHandle s, std::uint64_t i) {
  check(s);
  if (i > s.length) throw IndexError("split position out of range");
  return {handle(build({Core{s.id, 0, i}})), handle(build({Core{s.id, i, s.length}}))};
}

StringHandle StringFamily::substring(StringHandle s, std::uint64_t lo, std::uint64_t hi) {
  check(s);
  if (lo > hi || hi > s.length) throw IndexError("substring range out of bounds");
  return handle(build({Core{s.id, lo, hi}}));
}

bool StringFamily::equal(StringHandle a, StringHandle b) const {
  check(a);
  check(b);
  return a.id == b.id;
}

Symbol StringFamily::symbol_at(StringHandle s, std::uint64_t i) const {
  check(s);
  if (i >= s.length) throw IndexError("symbol index out of range");
  return nodes_[locate(s.id, 0, i).id].value;
}

std::vector<Symbol> StringFamily::materialize(StringHandle s) const {
  check(s);
  std::vector<Symbol> out;
  out.reserve(s.length);
  std::vector<std::uint32_t> stack;
  if (s.length > 0) stack.push_back(s.id);
  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    switch (n.kind) {
      case Kind::kEmpty:
        break;
      case Kind::kLetter:
        out.push_back(n.value);
        break;
      case Kind::kRun:
        stack.insert(stack.end(), n.value, n.child);
        break;
      case Kind::kBlock:
        for (std::uint32_t k = n.child; k-- > 0;) stack.push_back(children_[n.value + k]);
        break;
    }
  }
  return out;
}

std::uint64_t StringFamily::common_prefix_length(StringHandle a, StringHandle b) const {
  check(a);
  check(b);
  const std::uint64_t limit = std::min(a.length, b.length);
  if (a.id == b.id) return limit;
  std::uint64_t offset = 0;
  int level = std::max(nodes_[a.id].level, nodes_[b.id].level);
  while (offset < limit) {
    const Located x = locate(a.id, level, offset);
    const Located y = locate(b.id, level, offset);
    assert(x.start == offset && y.start == offset);
    if (x.id == y.id) {
      offset += nodes_[x.id].length * std::min(x.copies, y.copies);
      continue;
    }
    const int top = std::max(nodes_[x.id].level, nodes_[y.id].level);
    if (top == 0) break;
    level = top - 1;
  }
  return std::min(offset, limit);
}

int StringFamily::height(StringHandle s) const {
  check(s);
  return nodes_[s.id].level;
}

}  // namespace mss
