#pragma once

// Batch operations over completed coset tables. Each kernel has a serial
// reference version and an OpenMP version that must agree with it exactly.

#include <vector>

#include "altcox/tc.hpp"

namespace altcox::kernels {

/// out[k] = words[k].start (kUndefined where the trace falls off the table).
std::vector<CosetId> trace_words_serial(const CosetTable& t, const std::vector<Word>& words,
                                        CosetId start = 0);
std::vector<CosetId> trace_words_parallel(const CosetTable& t, const std::vector<Word>& words,
                                          CosetId start = 0);

/// Every relator fixes every coset of the table.
bool relators_close_serial(const CosetTable& t, const std::vector<Word>& relators);
bool relators_close_parallel(const CosetTable& t, const std::vector<Word>& relators);

/// Number of distinct values, ignoring kUndefined.
std::size_t count_distinct(std::vector<CosetId> ids);

/// Worker count OpenMP would use for a parallel region.
int max_threads();

}  // namespace altcox::kernels
