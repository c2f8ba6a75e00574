#include <cassert>
#include <stdexcept>

#include "thyme/counting.hpp"

namespace thyme {

void SequenceCounter::increment(int label) {
  assert(label >= 0 && label < kMaxLabels);
  // Extend the longest prefixes first so that this occurrence is not
  // appended to a prefix it just created.
  for (int a = 0; a < kMaxLabels; ++a) {
    for (int b = 0; b < kMaxLabels; ++b) {
      if (__builtin_add_overflow(c3_[a][b][label], c2_[a][b], &c3_[a][b][label])) {
        throw CountOverflow("sequence count overflow");
      }
    }
  }
  for (int a = 0; a < kMaxLabels; ++a) c2_[a][label] += c1_[a];
  c1_[label] += 1;
}

void SequenceCounter::decrement(int label) {
  assert(label >= 0 && label < kMaxLabels);
  if (c1_[label] == 0) throw std::logic_error("SequenceCounter: length-1 count went negative");
  c1_[label] -= 1;
  for (int b = 0; b < kMaxLabels; ++b) {
    if (c2_[label][b] < c1_[b]) {
      throw std::logic_error("SequenceCounter: length-2 count went negative");
    }
    c2_[label][b] -= c1_[b];
  }
}

}  // namespace thyme
