#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twistpoly {

// p/q in lowest terms with q >= 0; infinity is 1/0.
struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;

  Slope() = default;
  Slope(std::int64_t num, std::int64_t den);

  static Slope parse(std::string_view text);
  std::string to_string() const;
  // Name of the edge variable, e.g. g_-1/1.
  std::string var() const;
  bool is_infinity() const { return q == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;
};

bool operator<(const Slope& a, const Slope& b);  // circle order, infinity last

bool is_neighbor(const Slope& a, const Slope& b);

struct FareyTriangle {
  Slope a, b, c;
  FareyTriangle(Slope x, Slope y, Slope z);
};

struct StepLabels {
  int k = 0;
  char direction = 'R';
  Slope o, h, p, f;
};

struct Walk {
  FareyTriangle t0;
  std::string word;
  // Middle slope of the initial triangle string is the one left behind.
  static Walk parse(std::string_view spec);
  std::string to_string() const;
};

// Labels for steps 0..N where N is the word length. The initial step is
// labelled as a right step; letter j of the word is the direction of step j+1.
std::vector<StepLabels> walk_labels(const Walk& w);

struct WordAnatomy {
  std::string body;
  std::string tail;
  char tip = 0;
  int tail_start_step = 0;
  bool tip_matches_tail = false;
};

WordAnatomy anatomy(std::string_view word);

int crossing_count(const Slope& s, const Slope& h);
int crossing_count_oracle(const Slope& s, const Slope& h, int bound);

// Farey edges with all entries bounded by `bound`, for repeated oracle use.
class FareyEdgeSet {
 public:
  explicit FareyEdgeSet(int bound);
  int bound() const { return bound_; }
  // Counts edges separating s from h whose entries are <= limit (limit <= bound).
  int crossings(const Slope& s, const Slope& h, int limit) const;

 private:
  struct Edge {
    Slope x, y;
    int size;
  };
  int bound_;
  std::vector<Edge> edges_;
};

}  // namespace twistpoly
