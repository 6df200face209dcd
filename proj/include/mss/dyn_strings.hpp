#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mss {

using Symbol = std::uint64_t;

// Refers to an immutable string in a StringFamily. Two handles from the same
// family denote equal strings iff their ids are equal.
struct StringHandle {
  std::uint32_t id = 0;
  std::uint64_t length = 0;

  friend bool operator==(const StringHandle&, const StringHandle&) = default;
};

// A family of strings under AddString / Concatenate / Split / Equal. Strings
// are never removed and handles never change meaning.
//
// Every string is stored as its canonical parse: level 0 is the symbol
// sequence; odd levels collapse maximal runs of one symbol into a run node;
// even levels cut the sequence before every strict local minimum of a
// per-level hash priority and turn each multi-symbol block into a block
// node. The parse is a function of content alone and every node is
// hash-consed, so equal strings get the same root id and Equal is an id
// comparison. A block boundary depends only on a symbol and its two
// neighbours, which lets concatenation and splitting rebuild only
// O(1) symbols per level around each cut.
class StringFamily {
 public:
  StringFamily();

  StringHandle empty() const { return StringHandle{}; }
  StringHandle add_string(Symbol c);
  StringHandle concatenate(StringHandle a, StringHandle b);
  StringHandle concatenate(std::span<const StringHandle> parts);
  std::pair<StringHandle, StringHandle> split(StringHandle s, std::uint64_t i);
  StringHandle substring(StringHandle s, std::uint64_t lo, std::uint64_t hi);
  bool equal(StringHandle a, StringHandle b) const;

  Symbol symbol_at(StringHandle s, std::uint64_t i) const;
  std::vector<Symbol> materialize(StringHandle s) const;

  // Length of the longest common prefix, found by walking both parse trees
  // top-down and skipping every aligned pair of identical nodes.
  std::uint64_t common_prefix_length(StringHandle a, StringHandle b) const;

  std::size_t node_count() const { return nodes_.size(); }
  int height(StringHandle s) const;

 private:
  enum class Kind : std::uint8_t { kEmpty, kLetter, kRun, kBlock };

  struct Node {
    std::uint64_t length;
    // Letter: the symbol. Run: repeat count. Block: offset into children_.
    std::uint64_t value;
    // Run: repeated node. Block: arity.
    std::uint32_t child;
    Kind kind;
    std::uint8_t level;
  };

  // Level-`level` symbol of a parse covering one offset, plus how many
  // identical copies of it start there inside the same run node.
  struct Located {
    std::uint32_t id;
    std::uint64_t start;
    std::uint64_t copies;
  };

  struct Item {
    std::uint32_t id;
    std::uint64_t count;
  };

  // Symbols of `root` at the current level spanning [lo, hi), both aligned to
  // that level's symbol boundaries.
  struct Core {
    std::uint32_t root;
    std::uint64_t lo;
    std::uint64_t hi;
  };

  struct Segment {
    bool is_core;
    Core core;
    std::vector<Item> items;
  };

  struct RunKey {
    std::uint32_t base;
    std::uint64_t count;
    std::uint8_t level;
    friend bool operator==(const RunKey&, const RunKey&) = default;
  };
  struct RunKeyHash {
    std::size_t operator()(const RunKey& k) const;
  };

  void check(StringHandle h) const;
  StringHandle handle(std::uint32_t id) const { return {id, nodes_[id].length}; }

  std::uint32_t intern_letter(Symbol c);
  std::uint32_t intern_run(std::uint32_t base, std::uint64_t count, int level);
  std::uint32_t intern_block(std::span<const std::uint32_t> children, int level);

  Located locate(std::uint32_t root, int level, std::uint64_t offset) const;
  void enumerate(std::uint32_t root, int level, std::uint64_t lo, std::uint64_t hi,
                 std::vector<Item>& out) const;
  bool lower_priority(std::uint32_t a, std::uint32_t b, int level) const;

  std::vector<Item> parse_step(std::vector<Item> items, int level,
                               const std::uint32_t* right_context);
  std::uint32_t build(std::vector<Core> cores);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> children_;
  std::unordered_map<Symbol, std::uint32_t> letters_;
  std::unordered_map<RunKey, std::uint32_t, RunKeyHash> runs_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> blocks_;
};

}  // namespace mss
