#ifndef FDS_GENERATE_HPP
#define FDS_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fds/candidate.hpp"

namespace fds {

// Orderly generation: every canonical order-(n+1) extension of a canonical
// parent, each exactly once. The union over all canonical parents of order n
// covers the canonical matrices of order n+1 exactly once, because the
// leading principal submatrix of a canonical matrix is canonical.
std::vector<Candidate> canonical_children(const Candidate& parent);

// Streaming variant.
void for_each_canonical_child(const Candidate& parent,
                              const std::function<void(const Candidate&)>& fn);

struct GenerationLimitError : std::runtime_error {
  uint64_t count_so_far;
  GenerationLimitError(uint64_t c)
      : std::runtime_error("generation cap exceeded; partial count " + std::to_string(c)),
        count_so_far(c) {}
};

// Number of equivalence classes of order-n candidate matrices with at most
// s distinct off-diagonal entries, by exhaustive canonical generation.
uint64_t count_candidates(int n, int s, uint64_t cap = UINT64_MAX);

// All canonical matrices of order n (for small n; materializes the level).
std::vector<Candidate> generate_all(int n, int s);

// One search-level expansion kernel: children of all parents, then the
// heredity filter (every order-(n-1) principal deletion must re-canonicalize
// into prev_keys). Output sorted by vectorization. The parallel kernel and
// the serial reference produce identical output.
struct ExpandResult {
  std::vector<Candidate> kept;       // after heredity, sorted
  uint64_t children_canonical = 0;   // canonical children before heredity
};

ExpandResult expand_level_serial(const std::vector<Candidate>& parents,
                                 const std::unordered_set<Key>* prev_keys);
ExpandResult expand_level_parallel(const std::vector<Candidate>& parents,
                                   const std::unordered_set<Key>* prev_keys);

bool heredity_ok(const Candidate& child, const std::unordered_set<Key>& prev_keys);

}  // namespace fds

#endif
