#pragma once

#include <string>
#include <vector>

#include "smale/io.hpp"

namespace smale {

struct CorpusEntry {
  std::string name;  // file stem
  std::string description;
  Json document;     // order spec document
};

// Worked example orders ready to feed to the CLI.
std::vector<CorpusEntry> seed_corpus();

}  // namespace smale
