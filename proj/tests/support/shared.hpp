#pragma once

// Real WordNet 3.0 and the bundled stoplist, loaded once per test binary.

#include <filesystem>
#include <random>
#include <string>

#include "glossgraft/gloss.hpp"
#include "glossgraft/wordnet.hpp"
#include "paths.hpp"

inline const glossgraft::WordNetIndex& wordnet30() {
  static const auto index = glossgraft::WordNetIndex::load(paths::wordnet);
  return index;
}

inline const glossgraft::Stoplist& stoplist() {
  static const auto stop = glossgraft::Stoplist::load(paths::stoplist);
  return stop;
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() /
             ("glossgraft-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}
