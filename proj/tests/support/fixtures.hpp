#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dung/framework.hpp"
#include "dung/generators.hpp"
#include "dung/semantics.hpp"

namespace dung::test {

inline std::filesystem::path data_dir() { return DUNG_TEST_DATA_DIR; }
inline std::filesystem::path golden_dir() { return DUNG_TEST_GOLDEN_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Six arguments a..f with the attacks
/// (a,b) (b,d) (c,b) (c,d) (c,e) (d,c) (d,e) (e,f).
inline Framework example1() {
  return Framework({"a", "b", "c", "d", "e", "f"},
                   {{0, 1}, {1, 3}, {2, 1}, {2, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 5}});
}

inline Framework make_af(std::vector<std::string> names,
                         std::initializer_list<std::pair<std::string_view, std::string_view>> attacks) {
  std::vector<Attack> r;
  const auto id = [&](std::string_view n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<ArgId>(i);
    throw std::invalid_argument("unknown name");
  };
  for (const auto& [a, b] : attacks) r.push_back({id(a), id(b)});
  return Framework(std::move(names), std::move(r));
}

inline ExtensionSet sets(const Framework& af, std::initializer_list<std::initializer_list<std::string_view>> members) {
  std::vector<ArgSet> out;
  for (const auto& m : members) out.push_back(af.set_of(m));
  return ExtensionSet(std::move(out));
}

inline std::string show(const Framework& af, const ExtensionSet& e) {
  std::string s = "{";
  for (const ArgSet& x : e) s += "{" + af.format(x) + "}";
  return s + "}";
}

struct CorpusEntry {
  GenSpec spec;
  Framework af;
};

/// Seeded random frameworks with at most 10 arguments: arbitrary ones (every
/// other seed allowing self-attacks) and grids of every shape up to 10 cells
/// in both neighborhoods, at p = 0.1 .. 0.4.
inline std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> corpus;
  const double ps[] = {0.1, 0.2, 0.3, 0.4};
  std::uint64_t seed = 1000;
  for (std::size_t n = 1; n <= 10; ++n)
    for (double p : ps)
      for (int k = 0; k < 8; ++k) {
        GenSpec s;
        s.kind = GenKind::kArbitrary;
        s.n = n;
        s.p = p;
        s.seed = seed++;
        s.self_attacks = (k % 2) == 1;
        corpus.push_back({s, generate(s)});
      }
  for (std::size_t rows = 1; rows <= 3; ++rows)
    for (std::size_t cols = rows; rows * cols <= 10; ++cols)
      for (Neighborhood nb : {Neighborhood::kOrthogonal, Neighborhood::kDiagonal})
        for (double p : ps)
          for (int k = 0; k < 2; ++k) {
            GenSpec s;
            s.kind = GenKind::kGrid;
            s.n = rows;
            s.m = cols;
            s.p = p;
            s.neighborhood = nb;
            s.seed = seed++;
            corpus.push_back({s, generate(s)});
          }
  return corpus;
}

/// Every subset of the framework's arguments (|A| ≤ 20).
inline std::vector<ArgSet> all_subsets(const Framework& af) {
  std::vector<ArgSet> out;
  const std::uint64_t total = std::uint64_t{1} << af.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(ArgSet::from_mask(af.size(), mask));
  return out;
}

}  // namespace dung::test
