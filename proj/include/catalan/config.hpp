#pragma once

namespace catalan::config {

// Size guard for exhaustive permutation scans (brute-force pattern filters,
// statistic sweeps over all of S_n).
int bruteforce_cap();
void set_bruteforce_cap(int cap);

// Size guard for exhaustive path diagram generation.
int pathsum_cap();
void set_pathsum_cap(int cap);

}  // namespace catalan::config
