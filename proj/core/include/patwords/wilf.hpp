#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patwords/numeric.hpp"
#include "patwords/oracle.hpp"
#include "patwords/pattern.hpp"

namespace patwords {
namespace wilf {

enum class CountSource { kFormula, kOracle };

inline const char* to_string(CountSource source) {
  return source == CountSource::kFormula ? "formula" : "oracle";
}

// First grid cell, in (n, k) order, where two patterns disagree.
struct Witness {
  std::string first;
  std::string second;
  int n = 0;
  int k = 0;
  Int count_first;
  Int count_second;
};

// Grouping of patterns with identical count tables over the scanned
// grid.  Equality here is evidence up to the bounds, never a proof; the
// bounds always travel with the partition.
struct WilfPartition {
  int n_max = 0;
  int k_max = 0;
  CountSource source = CountSource::kFormula;
  // Each class lists pattern strings sorted; classes sorted by their
  // first member.
  std::vector<std::vector<std::string>> classes;
  // One witness per pair of classes (identified by each class's first
  // member); members of a class share tables, so the witness transfers
  // to every cross-class pattern pair.
  std::vector<Witness> witnesses;
};

// Count table over the full grid for one pattern, from the chosen source.
CountTable count_table(const GeneralizedPattern& pattern, int n_max, int k_max,
                       CountSource source, const EnumerationBudget& budget = {});

WilfPartition classify(const std::vector<GeneralizedPattern>& patterns,
                       int n_max, int k_max, CountSource source,
                       const EnumerationBudget& budget = {});

// Least differing cell, or nullopt when the tables agree on the grid.
std::optional<Witness> compare_pair(const GeneralizedPattern& first,
                                    const GeneralizedPattern& second,
                                    int n_max, int k_max, CountSource source,
                                    const EnumerationBudget& budget = {});

}  // namespace wilf
}  // namespace patwords
