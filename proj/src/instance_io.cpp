#include "mss/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

#include "mss/error.hpp"

namespace mss {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Splits one line into tokens, tracking 1-based columns.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), line_no, i + 1});
    i = j;
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 1;
  while (true) {
    const std::size_t nl = text.find('\n');
    f(text.substr(0, nl), line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++line_no;
  }
}

std::int64_t to_integer(const Token& t) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(t.line, t.column, "integer out of range: " + std::string(t.text));
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError(t.line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

}  // namespace

std::vector<std::int64_t> parse_integers(std::string_view text) {
  std::vector<std::int64_t> out;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    for (const Token& t : tokenize_line(line, no)) out.push_back(to_integer(t));
  });
  return out;
}

std::vector<Edge> parse_edges(std::string_view text) {
  std::vector<Edge> out;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    const std::vector<Token> tokens = tokenize_line(line, no);
    if (tokens.empty()) return;
    if (tokens.size() != 3) {
      const std::size_t col = tokens.size() > 3 ? tokens[3].column : line.size() + 1;
      throw ParseError(no, col, "expected 'u v w'");
    }
    std::int64_t ends[2];
    for (int k = 0; k < 2; ++k) {
      ends[k] = to_integer(tokens[k]);
      if (ends[k] < 0 || ends[k] > std::int64_t{0xFFFFFFFE})
        throw ParseError(no, tokens[k].column, "vertex must be a non-negative 32-bit index");
    }
    out.push_back({static_cast<Vertex>(ends[0]), static_cast<Vertex>(ends[1]),
                   to_integer(tokens[2])});
  });
  return out;
}

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::kUniform;
  if (name == "single-residue") return Distribution::kSingleResidue;
  if (name == "arithmetic") return Distribution::kArithmetic;
  return std::nullopt;
}

std::vector<std::int64_t> generate_instance(std::uint64_t m, std::uint64_t count,
                                            Distribution dist, std::uint64_t seed) {
  if (m == 0) throw InvalidModulusError();
  if (m > static_cast<std::uint64_t>(INT64_MAX)) throw InvalidParameterError("modulus too large");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> residue(0, m - 1);
  std::vector<std::int64_t> out;
  out.reserve(count);
  switch (dist) {
    case Distribution::kUniform:
      for (std::uint64_t i = 0; i < count; ++i) out.push_back(static_cast<std::int64_t>(residue(rng)));
      break;
    case Distribution::kSingleResidue: {
      std::uint64_t k = 1;
      for (std::uint64_t d = std::min(count, m); d >= 1; --d) {
        if (m % d == 0) {
          k = d;
          break;
        }
      }
      out.assign(count, static_cast<std::int64_t>(m / k % m));
      break;
    }
    case Distribution::kArithmetic: {
      const std::uint64_t step = m > 1 ? std::uniform_int_distribution<std::uint64_t>(1, m - 1)(rng) : 0;
      Residue x = 0;
      for (std::uint64_t i = 0; i < count; ++i) {
        x = static_cast<Residue>((static_cast<unsigned __int128>(x) + step) % m);
        out.push_back(static_cast<std::int64_t>(x));
      }
      break;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mss
