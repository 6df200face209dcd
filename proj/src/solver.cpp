#include "mss/solver.hpp"

#include <random>

#include "mss/hash_prefix_tree.hpp"
#include "mss/symdiff_rolling.hpp"

namespace mss {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kExactVerifyWork = std::uint64_t{1} << 30;

void record_step(SumTable& table, const SolveOptions& options, Residue x,
                 const std::vector<Residue>& fresh, std::uint64_t work) {
  if (options.on_step) options.on_step(StepInfo{x, fresh, work});
  for (Residue s : fresh) table.record(s, x);
}

void run_rolling(const std::vector<Residue>& elements, SumTable& table,
                 const SolveOptions& options, std::uint64_t seed) {
  const std::uint64_t m = table.modulus();
  const std::uint64_t p = options.prime.value_or(HashPrefixTree::default_prime(m));
  std::mt19937_64 rng(seed);
  const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng);
  HashPrefixTree tree(m, p, r);
  tree.set_bit(0);
  tree.set_bit(m);
  for (Residue x : elements) {
    SymDiffResult step = find_new_sums(0, m, x, tree, table);
    record_step(table, options, x, step.new_sums, step.nodes_visited);
    for (Residue s : step.new_sums) {
      tree.set_bit(s);
      tree.set_bit(s + m);
    }
  }
}

void run_dyn_string(const std::vector<Residue>& elements, SumTable& table,
                    const SolveOptions& options) {
  const std::uint64_t m = table.modulus();
  auto z = make_bitstring_lcp(2 * m, options.lcp_variant);
  z->add(0);
  z->add(m);
  std::vector<Residue> fresh;
  for (Residue x : elements) {
    fresh.clear();
    std::uint64_t queries = 0;
    if (x != 0) {
      // Positions where z[d] != z[d + m - x] form the symmetric difference
      // of S and S + x; the ones outside S are new.
      ++queries;
      for (std::uint64_t d = z->lcp(0, m - x); d < m;) {
        if (!z->get(d)) fresh.push_back(d);
        if (d + 1 == m) break;
        ++queries;
        d = d + 1 + z->lcp(d + 1, m - x + d + 1);
      }
    }
    record_step(table, options, x, fresh, queries);
    for (Residue s : fresh) {
      z->add(s);
      z->add(s + m);
    }
  }
}

void run_naive(const std::vector<Residue>& elements, SumTable& table,
               const SolveOptions& options) {
  const std::uint64_t m = table.modulus();
  std::vector<Residue> fresh;
  for (Residue x : elements) {
    fresh.clear();
    if (x != 0) {
      for (Residue s = 0; s < m; ++s) {
        const Residue from = s >= x ? s - x : s + m - x;
        if (table.present(from) && !table.present(s)) fresh.push_back(s);
      }
    }
    record_step(table, options, x, fresh, x != 0 ? m : 0);
  }
}

}  // namespace

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::kRollingHash:
      return "rolling";
    case Engine::kDynString:
      return "dynstring";
    case Engine::kNaive:
      return "naive";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) {
  for (Engine e : {Engine::kRollingHash, Engine::kDynString, Engine::kNaive}) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

SolveResult solve(const ResidueMultiset& x, const SolveOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t m = x.modulus();
  const std::vector<Residue> elements = preprocess(x).elements();
  SolveResult result{SumTable(m), SolveReport{}};
  result.report.engine = options.engine;
  switch (options.engine) {
    case Engine::kRollingHash: {
      const std::uint64_t seed =
          options.seed ? *options.seed
                       : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
      result.report.seed = seed;
      run_rolling(elements, result.table, options, seed);
      break;
    }
    case Engine::kDynString:
      run_dyn_string(elements, result.table, options);
      break;
    case Engine::kNaive:
      run_naive(elements, result.table, options);
      break;
  }
  result.report.attainable_count = result.table.attainable_count();
  result.report.elapsed = Clock::now() - start;
  return result;
}

bool verify_solution(const ResidueMultiset& x, const SumTable& table) {
  const std::uint64_t m = x.modulus();
  if (table.modulus() != m) return false;
  const ResidueMultiset allowed = preprocess(x);
  // The exact quadratic engine when affordable, otherwise a rolling-hash run
  // with a fresh seed, whose omissions are independent of the first run's.
  SolveOptions second;
  second.engine = allowed.cardinality() <= kExactVerifyWork / m ? Engine::kNaive
                                                                : Engine::kRollingHash;
  const SumTable reference = solve(x, second).table;
  if (reference.attainable_count() != table.attainable_count()) return false;
  for (Residue s = 0; s < m; ++s) {
    if (reference.present(s) != table.present(s)) return false;
    if (!table.present(s)) continue;
    const auto chain = recover_subset(table, s);
    if (!chain) return false;
    ResidueMultiset used(m);
    Residue sum = 0;
    for (Residue w : *chain) {
      if (w >= m) return false;
      used.add(w);
      sum = (sum + w) % m;
    }
    if (sum != s || !allowed.contains(used)) return false;
  }
  return true;
}

}  // namespace mss
