#pragma once

#include <string>
#include <vector>

#include "soficlab/group_model.hpp"
#include "soficlab/matrix.hpp"

namespace soficlab {

struct MicrostateReport {
  double defect = 0.0;
  std::uint64_t words_checked = 0;
  std::uint64_t oracle_failures = 0;
  std::vector<std::string> failed_words;
  // Word attaining the defect, for diagnostics.
  std::string worst_word;
};

/// Enumerates the freely reduced words of length 1..max_word_len over the
/// generators and measures how far the matrix tuple is from a microstate:
/// |tau(w(Phi))| for words the model declares nonidentity, |tau(w(Phi)) - 1|
/// for words declared identity. Words the oracle cannot decide are skipped,
/// counted and reported.
MicrostateReport microstate_defect(const GroupModel& model,
                                   const std::vector<GroupModel::Element>& generators,
                                   const std::vector<ComplexMatrix>& images,
                                   unsigned max_word_len, bool require_unitary = true);

}  // namespace soficlab
