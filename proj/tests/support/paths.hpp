#pragma once

#include <string>

namespace paths {

inline const std::string wordnet = GLOSSGRAFT_TEST_WORDNET;
inline const std::string stoplist = GLOSSGRAFT_TEST_STOPLIST;
inline const std::string minicorpus = GLOSSGRAFT_TEST_MINICORPUS;
inline const std::string entries = minicorpus + "/entries.tsv";
inline const std::string gold = minicorpus + "/gold.tsv";

}  // namespace paths
