#include "mss/symdiff_rolling.hpp"

#include "mss/error.hpp"

namespace mss {

namespace {

struct Search {
  const HashPrefixTree& tree;
  const SumTable& table;
  std::uint64_t m;
  Residue x;
  std::uint64_t shift_power;
  SymDiffResult& out;

  // fa = f(a), fb = f(b), fas = f(m + a - x), fbs = f(m + b - x).
  void run(std::uint64_t a, std::uint64_t b, std::uint64_t fa, std::uint64_t fb,
           std::uint64_t fas, std::uint64_t fbs) {
    ++out.nodes_visited;
    if (tree.hashes_equal(fa, fb, fas, fbs, shift_power)) return;
    if (b == a + 1) {
      // Mismatch is exact: a is either new or a ghost sum.
      if (!table.present(a)) out.new_sums.push_back(a);
      return;
    }
    const std::uint64_t mid = a + (b - a) / 2;
    const std::uint64_t fm = tree.prefix(mid);
    const std::uint64_t fms = tree.prefix(m + mid - x);
    run(a, mid, fa, fm, fas, fms);
    run(mid, b, fm, fb, fms, fbs);
  }
};

}  // namespace

SymDiffResult find_new_sums(std::uint64_t a, std::uint64_t b, Residue x,
                            const HashPrefixTree& tree, const SumTable& table) {
  const std::uint64_t m = tree.modulus();
  if (table.modulus() != m) throw InvalidParameterError("tree and table disagree on m");
  if (a >= b || b > m || x >= m) throw IndexError("search range out of bounds");
  SymDiffResult out;
  Search search{tree, table, m, x, tree.power(m - x), out};
  search.run(a, b, tree.prefix(a), tree.prefix(b), tree.prefix(m + a - x),
             tree.prefix(m + b - x));
  return out;
}

}  // namespace mss
