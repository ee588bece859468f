#ifndef FDS_CANDIDATE_HPP
#define FDS_CANDIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fds {

// Candidate Gram matrix: symmetric, unit diagonal, off-diagonal entries are
// color indices 0..s-1. Stored as the lower-triangular vectorization
// [G21, G31, G32, G41, ...] so appending a vertex appends to the vector.
struct Candidate {
  int n = 1;
  int s = 1;  // maximum number of distinct colors allowed
  std::vector<uint8_t> colors;

  static Candidate seed(int s) { return Candidate{1, s, {}}; }

  static size_t tri(int i, int j) {  // requires i > j
    return static_cast<size_t>(i) * (static_cast<size_t>(i) - 1) / 2 + static_cast<size_t>(j);
  }
  uint8_t color(int i, int j) const { return i > j ? colors[tri(i, j)] : colors[tri(j, i)]; }
  void set_color(int i, int j, uint8_t c) {
    if (i > j) colors[tri(i, j)] = c;
    else colors[tri(j, i)] = c;
  }

  int colors_used() const;
  // First-occurrence (restricted growth) density of the vectorization.
  bool rgs_dense() const;
  Candidate delete_vertex(int v) const;
  Candidate extend(const std::vector<uint8_t>& new_row) const;
  bool operator==(const Candidate& o) const { return n == o.n && colors == o.colors; }
};

using Key = std::string;

// Base-36 digits of a color vector; sortable and diff-able.
Key encode_digits(const std::vector<uint8_t>& vec);
std::vector<uint8_t> decode_digits(const std::string& digits);

// Exchange line format: "n s k:<digits>".
std::string encode_line(const Candidate& g);
Candidate decode_line(const std::string& line);

// ---- canonical labeling ----

// Lexicographically smallest vectorization over all vertex permutations
// composed with first-occurrence color relabeling.
std::vector<uint8_t> canonical_vec(const Candidate& g);
bool is_canonical(const Candidate& g);
Candidate canonical_form(const Candidate& g);
Key canonical_key(const Candidate& g);

// Apply a vertex permutation (perm[i] = original vertex at slot i) and a
// color permutation, then greedy-relabel. Used by property tests.
Candidate relabeled(const Candidate& g, const std::vector<int>& perm,
                    const std::vector<int>& color_perm);

}  // namespace fds

#endif
