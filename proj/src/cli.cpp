#include "mss/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "mss/apnp.hpp"
#include "mss/error.hpp"
#include "mss/instance_io.hpp"
#include "mss/solver.hpp"

namespace mss {

namespace {

using nlohmann::json;

// Raised inside a command to leave with a specific exit code.
struct Exit {
  int code;
};

struct SolveFlags {
  std::int64_t modulus = 0;
  std::string algo = "rolling";
  std::optional<std::uint64_t> seed;
  bool verify = false;
  std::string format = "text";
  std::string file;
};

struct RecoverFlags {
  std::int64_t modulus = 0;
  std::int64_t target = 0;
  std::string algo = "rolling";
  std::optional<std::uint64_t> seed;
  std::string file;
};

struct ApnpFlags {
  std::int64_t vertices = 0;
  std::string format = "text";
  std::vector<std::int64_t> recover;
  std::uint64_t seed = 1;
  std::string file;
};

struct GenFlags {
  std::int64_t modulus = 0;
  std::uint64_t count = 0;
  std::string dist = "uniform";
  std::uint64_t seed = 1;
};

struct BenchFlags {
  std::vector<std::int64_t> moduli;
  std::vector<std::uint64_t> counts = {100};
  std::vector<std::string> algos = {"rolling", "dynstring", "naive"};
  std::string dist = "uniform";
  std::uint64_t seed = 1;
  std::vector<std::string> files;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int solve(const SolveFlags& f) {
    const ResidueMultiset x = load_instance(f.file, f.modulus);
    SolveOptions options;
    options.engine = engine(f.algo);
    options.seed = f.seed;
    SolveResult result = mss::solve(x, options);
    if (f.verify) result.report.verified = verify_solution(x, result.table);

    const std::vector<Residue> attainable = result.table.present_residues();
    if (f.format == "json") {
      json witness = json::array();
      for (const auto& w : result.table.witnesses()) witness.push_back(w ? json(*w) : json(nullptr));
      json doc = {
          {"modulus", x.modulus()},
          {"algo", engine_name(options.engine)},
          {"seed", result.report.seed ? json(*result.report.seed) : json(nullptr)},
          {"attainable", attainable},
          {"witness", std::move(witness)},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(result.report.elapsed).count()},
          {"verified", result.report.verified ? json(*result.report.verified) : json(nullptr)},
      };
      out_ << doc.dump() << '\n';
    } else {
      for (Residue s : attainable) out_ << s << '\n';
    }
    if (result.report.verified == false) {
      err_ << "verification failed\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  }

  int recover(const RecoverFlags& f) {
    const ResidueMultiset x = load_instance(f.file, f.modulus);
    if (f.target < 0 || static_cast<std::uint64_t>(f.target) >= x.modulus()) {
      err_ << "target must lie in [0, modulus)\n";
      return kExitUsage;
    }
    SolveOptions options;
    options.engine = engine(f.algo);
    options.seed = f.seed;
    const SolveResult result = mss::solve(x, options);
    auto subset = recover_subset(result.table, static_cast<Residue>(f.target));
    if (!subset) {
      out_ << "UNATTAINABLE\n";
      return kExitNotFound;
    }
    std::sort(subset->begin(), subset->end());
    print_joined(*subset);
    return kExitOk;
  }

  int apnp(const ApnpFlags& f) {
    if (f.vertices < 1 || f.vertices > (std::int64_t{1} << 16)) {
      err_ << "vertex count must lie in [1, 65536]\n";
      return kExitUsage;
    }
    const auto n = static_cast<std::uint32_t>(f.vertices);
    EdgeList edges;
    try {
      edges = prepare_edges(parse_edges(read_input(f.file)), n);
    } catch (const DistinctWeightsRequiredError& e) {
      err_ << e.what() << '\n';
      return kExitInvalidInput;
    } catch (const InvalidEdgeError& e) {
      err_ << "invalid graph: " << e.what() << '\n';
      return kExitInvalidInput;
    }
    const PathMatrix paths = all_pairs_non_decreasing_paths(edges, f.seed);

    if (!f.recover.empty()) {
      if (f.recover[0] < 0 || f.recover[1] < 0 || f.recover[0] >= f.vertices ||
          f.recover[1] >= f.vertices) {
        err_ << "vertex out of range\n";
        return kExitUsage;
      }
      const auto route = recover_path(paths, static_cast<Vertex>(f.recover[0]),
                                      static_cast<Vertex>(f.recover[1]));
      if (f.format == "json") {
        out_ << json{{"path", route ? json(*route) : json(nullptr)}}.dump() << '\n';
      } else if (route) {
        print_joined(*route);
      } else {
        out_ << "UNREACHABLE\n";
      }
      return route ? kExitOk : kExitNotFound;
    }

    if (f.format == "json") {
      json rows = json::array();
      for (Vertex u = 0; u < n; ++u) {
        json row = json::array();
        for (Vertex v = 0; v < n; ++v) {
          const auto p = paths.parent(u, v);
          row.push_back(p ? json(*p) : json(nullptr));
        }
        rows.push_back(std::move(row));
      }
      out_ << json{{"vertices", n}, {"paths", std::move(rows)}}.dump() << '\n';
      return kExitOk;
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (v > 0) out_ << ' ';
        const auto p = paths.parent(u, v);
        if (p) {
          out_ << *p;
        } else {
          out_ << '-';
        }
      }
      out_ << '\n';
    }
    return kExitOk;
  }

  int gen(const GenFlags& f) {
    const auto dist = parse_distribution(f.dist);
    if (!dist) {
      err_ << "unknown distribution: " << f.dist << '\n';
      return kExitUsage;
    }
    print_joined(generate_instance(modulus(f.modulus), f.count, *dist, f.seed));
    return kExitOk;
  }

  int bench(const BenchFlags& f) {
    std::vector<Engine> engines;
    for (const std::string& a : f.algos) engines.push_back(engine(a));
    const auto dist = parse_distribution(f.dist);
    if (!dist) {
      err_ << "unknown distribution: " << f.dist << '\n';
      return kExitUsage;
    }
    out_ << "engine,m,n,attainable,elapsed_ms,seed\n";
    auto run_cell = [&](const ResidueMultiset& x) {
      for (Engine e : engines) {
        SolveOptions options;
        options.engine = e;
        options.seed = f.seed;
        const SolveResult r = mss::solve(x, options);
        out_ << engine_name(e) << ',' << x.modulus() << ',' << x.cardinality() << ','
             << r.report.attainable_count << ','
             << std::chrono::duration<double, std::milli>(r.report.elapsed).count() << ','
             << f.seed << '\n';
      }
    };
    for (std::int64_t raw_m : f.moduli) {
      const std::uint64_t m = modulus(raw_m);
      if (!f.files.empty()) {
        for (const std::string& file : f.files) run_cell(load_instance(file, raw_m));
        continue;
      }
      for (std::uint64_t count : f.counts) {
        const auto values = generate_instance(m, count, *dist, f.seed);
        run_cell(canonicalize(values, m));
      }
    }
    return kExitOk;
  }

 private:
  std::uint64_t modulus(std::int64_t raw) const {
    if (raw <= 0) {
      err_ << "modulus must be positive\n";
      throw Exit{kExitInvalidInput};
    }
    return static_cast<std::uint64_t>(raw);
  }

  Engine engine(const std::string& name) const {
    const auto e = parse_engine(name);
    if (!e) {
      err_ << "unknown algorithm: " << name << '\n';
      throw Exit{kExitUsage};
    }
    return *e;
  }

  std::string read_input(const std::string& file) {
    if (file == "-") return std::string(std::istreambuf_iterator<char>(in_), {});
    try {
      return read_file(file);
    } catch (const Error& e) {
      err_ << e.what() << '\n';
      throw Exit{kExitUsage};
    }
  }

  ResidueMultiset load_instance(const std::string& file, std::int64_t raw_m) {
    const std::uint64_t m = modulus(raw_m);
    return canonicalize(parse_integers(read_input(file)), m);
  }

  template <typename T>
  void print_joined(const std::vector<T>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out_ << ' ';
      out_ << values[i];
    }
    out_ << '\n';
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Modular subset sum and all-pairs non-decreasing paths"};
  app.name("mss");
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "json"};

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Print every attainable residue");
  solve->add_option("--modulus,-m", solve_flags.modulus, "Modulus m")->required();
  solve->add_option("--algo", solve_flags.algo, "rolling, dynstring or naive");
  solve->add_option("--seed", solve_flags.seed, "Seed for the rolling-hash base");
  solve->add_flag("--verify", solve_flags.verify, "Cross-check against the exact engine");
  solve->add_option("--format", solve_flags.format)->check(CLI::IsMember(formats));
  solve->add_option("file", solve_flags.file, "Instance file, - for stdin")->required();

  RecoverFlags recover_flags;
  auto* recover = app.add_subcommand("recover", "Print a subset summing to the target");
  recover->add_option("--modulus,-m", recover_flags.modulus, "Modulus m")->required();
  recover->add_option("--target,-t", recover_flags.target, "Target residue")->required();
  recover->add_option("--algo", recover_flags.algo, "rolling, dynstring or naive");
  recover->add_option("--seed", recover_flags.seed, "Seed for the rolling-hash base");
  recover->add_option("file", recover_flags.file, "Instance file, - for stdin")->required();

  ApnpFlags apnp_flags;
  auto* apnp = app.add_subcommand("apnp", "All-pairs non-decreasing paths");
  apnp->add_option("--vertices,-n", apnp_flags.vertices, "Vertex count")->required();
  apnp->add_option("--format", apnp_flags.format)->check(CLI::IsMember(formats));
  apnp->add_option("--recover", apnp_flags.recover, "Print the path from U to V")
      ->expected(2);
  apnp->add_option("--seed", apnp_flags.seed, "Seed for the hash base");
  apnp->add_option("file", apnp_flags.file, "Edge file of 'u v w' lines, - for stdin")
      ->required();

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Generate a reproducible instance");
  gen->add_option("--modulus,-m", gen_flags.modulus, "Modulus m")->required();
  gen->add_option("--count,-c", gen_flags.count, "Number of elements")->required();
  gen->add_option("--dist", gen_flags.dist, "uniform, single-residue or arithmetic");
  gen->add_option("--seed", gen_flags.seed, "Generator seed");

  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Time engines over a grid and print CSV");
  bench->add_option("--modulus,-m", bench_flags.moduli, "Moduli (repeatable)")
      ->required()
      ->allow_extra_args(false);
  bench->add_option("--count,-c", bench_flags.counts, "Instance sizes (repeatable)")
      ->allow_extra_args(false);
  bench->add_option("--algo", bench_flags.algos, "Engines (repeatable)")->allow_extra_args(false);
  bench->add_option("--dist", bench_flags.dist, "uniform, single-residue or arithmetic");
  bench->add_option("--seed", bench_flags.seed, "Seed for generation and hashing");
  bench->add_option("files", bench_flags.files, "Instance files instead of generated ones");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(in, out, err);
  try {
    if (*solve) return runner.solve(solve_flags);
    if (*recover) return runner.recover(recover_flags);
    if (*apnp) return runner.apnp(apnp_flags);
    if (*gen) return runner.gen(gen_flags);
    return runner.bench(bench_flags);
  } catch (const Exit& e) {
    return e.code;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidModulusError& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace mss
