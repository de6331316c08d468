// distance_matrix.hpp - symmetric exact-rational distance matrices.
#pragma once

#include <string>
#include <vector>

#include "metricext/rational.hpp"

namespace metricext {

enum class Provenance { shortest_path, user_supplied, witness };

const char* provenance_name(Provenance p);

// Dense symmetric matrix over the vertex labels (ascending order, matching
// WeightedGraph indices).
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, Provenance provenance);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  Provenance provenance() const { return provenance_; }

  const Rational& at(int i, int j) const { return entries_[i * size() + j]; }
  void set(int i, int j, const Rational& value);

  bool operator==(const DistanceMatrix& other) const {
    return labels_ == other.labels_ && entries_ == other.entries_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> entries_;
  Provenance provenance_;
};

}  // namespace metricext
