#include "catalan/config.hpp"

#include <atomic>

namespace catalan::config {

namespace {
std::atomic<int> g_bruteforce_cap{10};
std::atomic<int> g_pathsum_cap{12};
}  // namespace

int bruteforce_cap() { return g_bruteforce_cap.load(); }
void set_bruteforce_cap(int cap) { g_bruteforce_cap.store(cap); }

int pathsum_cap() { return g_pathsum_cap.load(); }
void set_pathsum_cap(int cap) { g_pathsum_cap.store(cap); }

}  // namespace catalan::config
